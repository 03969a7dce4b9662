"""GHZ and Bell basis states, their stabilizer checks, two index orders on
the basis, and the canonical factorization of basis-change gates.

A GHZ state here is (|0 t> + (-1)^j1 |1 tbar>)/sqrt2 where t runs over the
parity bits j2..jn and tbar is their complement.  Two 1-based orderings are
used: the phase-major ordinal (bits read as written) and a relabeled ordinal
whose bits are (j1, j1+j2, .., j1+jn).  Any gate mapping the computational
basis onto the GHZ basis up to unit phases factors as

    u = cascade(n) * permutation * diagonal_phases

with cascade(n) the CH_N family gate; the factorization is recovered and
verified exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .gates import family_gate, permutation_gate, phase_gate
from .linalg import DenseMatrix, StateVector
from .pauli import PauliWord, conjugate_by, is_clifford
from .ring import ONE, RingScalar


class NotATransform(ValueError):
    """The matrix does not send the computational basis to the GHZ basis."""


@dataclass(frozen=True)
class GhzLabel:
    """Bit label (j1, j2, .., jn): phase bit first, then parity bits."""

    n: int
    bits: tuple

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"invalid qubit count {self.n}")
        bits = tuple(int(b) for b in self.bits)
        if len(bits) != self.n or any(b not in (0, 1) for b in bits):
            raise ValueError(f"need {self.n} bits of 0/1, got {self.bits!r}")
        object.__setattr__(self, "bits", bits)

    @classmethod
    def from_ordinal(cls, n: int, ordinal: int) -> "GhzLabel":
        if not 1 <= ordinal <= 1 << n:
            raise ValueError(f"ordinal {ordinal} out of range for {n} qubits")
        m = ordinal - 1
        return cls(n, tuple((m >> (n - 1 - t)) & 1 for t in range(n)))

    @property
    def phase_bit(self) -> int:
        return self.bits[0]

    def as_int(self) -> int:
        out = 0
        for b in self.bits:
            out = (out << 1) | b
        return out


def index_j(label: GhzLabel) -> int:
    """1-based ordinal with the bits read as written."""
    return label.as_int() + 1


def index_k(label: GhzLabel) -> int:
    """1-based ordinal of the relabeling (j1, j1+j2, .., j1+jn)."""
    j1 = label.phase_bit
    out = j1
    for b in label.bits[1:]:
        out = (out << 1) | (b ^ j1)
    return out + 1


def j_to_k(j: int, n: int) -> int:
    """Closed form linking the two ordinals; an involution on 1..2^n."""
    dim = 1 << n
    if not 1 <= j <= dim:
        raise ValueError(f"ordinal {j} out of range for {n} qubits")
    return j if j <= dim >> 1 else dim + (dim >> 1) + 1 - j


def ghz_state(label: GhzLabel) -> StateVector:
    """(|0 j2..jn> + (-1)^j1 |1 ~j2..~jn>)/sqrt2, exactly."""
    n = label.n
    dim = 1 << n
    half = dim >> 1
    flip = half - 1
    low = label.as_int() & flip
    comps = np.zeros((dim, 4), dtype=np.int64)
    comps[low, 0] = 1
    comps[half | (low ^ flip), 0] = -1 if label.phase_bit else 1
    return StateVector(comps, 1)


def bell_state(k: int, l: int) -> StateVector:
    return ghz_state(GhzLabel(2, (k, l)))


def apply_word(word: PauliWord, state: StateVector) -> StateVector:
    """Act with a Pauli word on a state without building its matrix."""
    dim = 1 << word.n
    if state.dim != dim:
        raise ValueError("dimension mismatch between word and state")
    idx = np.arange(dim)
    signs = np.ones(dim, dtype=np.int64)
    for t in range(word.n):
        bit = 1 << t
        if word.z & bit:
            signs = np.where(idx & bit, -signs, signs)
    out = np.empty_like(state.comps)
    out[idx ^ word.x] = state.comps * signs[:, None]
    result = StateVector(out, state.k)
    phase = word.phase_scalar()
    return result if phase == ONE else result * phase


def verify_stabilizers(state: StateVector, label: GhzLabel) -> bool:
    """Check the defining eigenvalue equations of the labeled GHZ state.

    The all-sites X string must give (-1)^j1 and each adjacent ZZ pair must
    give (-1)^j2 for the first pair and (-1)^(j_{i-1}+j_i) after that.
    """
    n = label.n
    if state.dim != 1 << n:
        raise ValueError("state dimension does not match the label")
    checks = [(PauliWord(n, 0, (1 << n) - 1, 0), label.phase_bit)]
    for i in range(2, n + 1):
        zmask = (1 << (n - i + 1)) | (1 << (n - i))
        expo = label.bits[i - 1] ^ (label.bits[i - 2] if i >= 3 else 0)
        checks.append((PauliWord(n, 0, 0, zmask), expo))
    for word, expo in checks:
        if apply_word(word, state) != state * RingScalar(-1 if expo else 1):
            return False
    return True


@dataclass(frozen=True)
class TransformFactorization:
    """u = cascade(n) * permutation * diagonal phases, stored as tables.

    perm[j] is the image label of input label j; phases[j] is the unit
    scalar applied to input label j before permuting.
    """

    n: int
    perm: tuple
    phases: tuple

    def rebuild(self) -> DenseMatrix:
        return (
            family_gate("CH_N", self.n)
            @ permutation_gate(self.n, self.perm)
            @ phase_gate(self.n, self.phases)
        )


def factor_transform(u: DenseMatrix) -> TransformFactorization:
    """Split a GHZ/Bell basis-change gate into its permutation and phases.

    Strips the cascade factor and requires the remainder to be monomial
    with unit entries; raises NotATransform otherwise.
    """
    n = u.qubits
    if n is None or u.rows != u.cols:
        raise ValueError("expected a square matrix on whole qubits")
    m = family_gate("CH_N", n).dagger() @ u
    dim = 1 << n
    occupied = m.comps.any(axis=2)
    perm = []
    phases = []
    for j in range(dim):
        rows = np.nonzero(occupied[:, j])[0]
        if len(rows) != 1:
            raise NotATransform(f"column {j} has {len(rows)} nonzero entries after stripping the cascade")
        val = m.entry(int(rows[0]), j)
        if not val.is_unit():
            raise NotATransform(f"column {j} carries non-unit value {val}")
        perm.append(int(rows[0]))
        phases.append(val)
    if sorted(perm) != list(range(dim)):
        raise NotATransform("stripped matrix is not a permutation")
    return TransformFactorization(n, tuple(perm), tuple(phases))


@dataclass(frozen=True)
class TransformClass:
    """clifford is always decided; the parity fields only exist at 2 qubits."""

    clifford: bool
    parity_preserving: Optional[bool]
    matchgate: Optional[bool]


def classify(u: DenseMatrix) -> TransformClass:
    from .gates import is_matchgate

    cliff = bool(is_clifford(u))
    if u.rows == 4:
        cls = is_matchgate(u)
        return TransformClass(cliff, cls != "neither", cls == "matchgate")
    return TransformClass(cliff, None, None)


def multicopy_x_check(u: DenseMatrix, site: int) -> Optional[int]:
    """l such that u Z_site u^dag = (-1)^l X..X, or None if not of that form."""
    n = u.qubits
    if n is None or not 1 <= site <= n:
        raise ValueError("site out of range")
    res = conjugate_by(u, PauliWord.single(n, site, "Z"))
    if not res.is_pauli:
        return None
    w = res.word
    if w.x != (1 << n) - 1 or w.z != 0 or w.s % 2:
        return None
    return (w.s // 2) % 2
