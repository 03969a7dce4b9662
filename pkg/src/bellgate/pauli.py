"""Pauli-word algebra with exact phase bookkeeping, plus Clifford recognition.

A word is i**s * prod_t X_t^{x_t} Z_t^{z_t} with one global phase exponent s
(mod 4) and per-site X/Z bits; site 1 is the most significant basis-index bit.
Y = ZX in this convention, so Y-sites carry x = z = 1 plus a folded-in phase.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .linalg import DenseMatrix
from .ring import RingScalar, i_power

# display prefix for an overall factor i**s
_PREFIX = ("", "i", "-", "-i")

_UNIT_PHASES = {
    (1, 0, 0, 0, 0): 0,
    (0, 0, 1, 0, 0): 1,
    (-1, 0, 0, 0, 0): 2,
    (0, 0, -1, 0, 0): 3,
}


@dataclass(frozen=True)
class PauliWord:
    n: int
    s: int
    x: int
    z: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("need at least one site")
        full = (1 << self.n) - 1
        if self.x & ~full or self.z & ~full:
            raise ValueError("x/z mask has bits beyond the site count")
        object.__setattr__(self, "s", self.s % 4)

    @classmethod
    def identity(cls, n: int) -> "PauliWord":
        return cls(n, 0, 0, 0)

    @classmethod
    def single(cls, n: int, site: int, letter: str) -> "PauliWord":
        """The word placing one X, Y or Z at the given 1-based site."""
        if not 1 <= site <= n:
            raise ValueError(f"site {site} out of range for {n} qubits")
        bit = 1 << (n - site)
        if letter == "X":
            return cls(n, 0, bit, 0)
        if letter == "Z":
            return cls(n, 0, 0, bit)
        if letter == "Y":
            # Y = ZX = i^2 XZ
            return cls(n, 2, bit, bit)
        raise ValueError(f"unknown Pauli letter {letter!r}")

    @classmethod
    def from_bits(cls, s: int, x_bits, z_bits) -> "PauliWord":
        x_bits, z_bits = list(x_bits), list(z_bits)
        n = len(x_bits)
        if len(z_bits) != n:
            raise ValueError("x and z bit vectors differ in length")
        x = sum(b << (n - 1 - t) for t, b in enumerate(x_bits))
        z = sum(b << (n - 1 - t) for t, b in enumerate(z_bits))
        return cls(n, s, x, z)

    def x_bit(self, site: int) -> int:
        return (self.x >> (self.n - site)) & 1

    def z_bit(self, site: int) -> int:
        return (self.z >> (self.n - site)) & 1

    def site_letters(self) -> list[str]:
        table = {(0, 0): "1", (1, 0): "X", (0, 1): "Z", (1, 1): "Y"}
        return [table[(self.x_bit(t), self.z_bit(t))] for t in range(1, self.n + 1)]

    def is_identity_word(self) -> bool:
        return self.x == 0 and self.z == 0

    def phase_scalar(self) -> RingScalar:
        return i_power(self.s)

    def with_phase(self, extra: int) -> "PauliWord":
        return PauliWord(self.n, self.s + extra, self.x, self.z)

    def __mul__(self, other: "PauliWord") -> "PauliWord":
        return pauli_mul(self, other)

    def dagger(self) -> "PauliWord":
        flip = (self.x & self.z).bit_count()
        return PauliWord(self.n, -self.s + 2 * flip, self.x, self.z)

    def square_sign(self) -> int:
        """+1 if word**2 = I, -1 if word**2 = -I."""
        return -1 if (self.s + (self.x & self.z).bit_count()) % 2 else 1

    def is_hermitian(self) -> bool:
        return self.square_sign() == 1

    def to_matrix(self) -> DenseMatrix:
        dim = 1 << self.n
        comps = np.zeros((dim, dim, 4), dtype=np.int64)
        comp, sign = ((0, 1), (2, 1), (0, -1), (2, -1))[self.s]
        for b in range(dim):
            par = -1 if (self.z & b).bit_count() & 1 else 1
            comps[b ^ self.x, b, comp] = sign * par
        return DenseMatrix(comps, 0)

    def __str__(self) -> str:
        # fold the i^2 hiding in each XZ site into the displayed prefix: XZ = i^2 Y
        n_y = (self.x & self.z).bit_count()
        prefix = _PREFIX[(self.s + 2 * n_y) % 4]
        letters = [
            f"{letter}{site}"
            for site, letter in enumerate(self.site_letters(), start=1)
            if letter != "1"
        ]
        return prefix + ("".join(letters) or "1")


def pauli_mul(p: PauliWord, q: PauliWord) -> PauliWord:
    if p.n != q.n:
        raise ValueError("site-count mismatch")
    # moving Z^{z1} across X^{x2} costs (-1) per overlapping site
    s = p.s + q.s + 2 * (p.z & q.x).bit_count()
    return PauliWord(p.n, s, p.x ^ q.x, p.z ^ q.z)


def pauli_generators(n: int) -> list[PauliWord]:
    """X_1..X_n then Z_1..Z_n."""
    return [PauliWord.single(n, t, "X") for t in range(1, n + 1)] + [
        PauliWord.single(n, t, "Z") for t in range(1, n + 1)
    ]


def pauli_from_matrix(m: DenseMatrix) -> Optional[PauliWord]:
    """The word whose matrix equals m exactly, if m is phase-times-Pauli."""
    n = m.qubits
    if n is None or n < 1 or m.k != 0:
        return None
    dim = m.rows
    col0 = m.comps[:, 0, :]
    hits = np.nonzero(col0.any(axis=-1))[0]
    if len(hits) != 1:
        return None
    x = int(hits[0])
    s = _UNIT_PHASES.get(m.entry(x, 0).to_tuple())
    if s is None:
        return None
    plus = i_power(s)
    minus = -plus
    z = 0
    for site in range(1, n + 1):
        bit = 1 << (n - site)
        v = m.entry(bit ^ x, bit)
        if v == minus:
            z |= bit
        elif v != plus:
            return None
    word = PauliWord(n, s, x, z)
    if word.to_matrix() == m:
        return word
    return None


@dataclass(frozen=True)
class PhasedWord:
    """A unit ring scalar times a plain (s = 0) Pauli word.

    Any i**s carried by the word is folded into the scalar on construction,
    so equal operators always compare equal structurally.
    """

    phase: RingScalar
    word: PauliWord

    def __post_init__(self):
        if not self.phase.is_unit():
            raise ValueError("phase must be a unit")
        if self.word.s:
            object.__setattr__(self, "phase", self.phase * self.word.phase_scalar())
            object.__setattr__(
                self, "word", PauliWord(self.word.n, 0, self.word.x, self.word.z)
            )

    @property
    def n(self) -> int:
        return self.word.n

    def to_matrix(self) -> DenseMatrix:
        return self.word.to_matrix() * self.phase

    def __mul__(self, other: "PhasedWord") -> "PhasedWord":
        return PhasedWord(self.phase * other.phase, self.word * other.word)

    def dagger(self) -> "PhasedWord":
        return PhasedWord(self.phase.conj(), self.word.dagger())

    def transpose(self) -> "PhasedWord":
        # (X^x Z^z)^T = Z^z X^x, a sign per site carrying both letters
        sign = -1 if (self.word.x & self.word.z).bit_count() & 1 else 1
        return PhasedWord(self.phase * RingScalar(sign), self.word)

    def __str__(self) -> str:
        body = str(self.word)
        if self.phase == RingScalar(1):
            return body
        if self.phase == RingScalar(-1):
            return "-" + body
        return f"({self.phase})*{body}"


def phased_pauli_from_matrix(m: DenseMatrix) -> Optional[PhasedWord]:
    """Like pauli_from_matrix but allowing any unit scalar out front."""
    n = m.qubits
    if n is None or n < 1:
        return None
    col0 = m.comps[:, 0, :]
    hits = np.nonzero(col0.any(axis=-1))[0]
    if len(hits) != 1:
        return None
    x = int(hits[0])
    lam = m.entry(x, 0)
    if not lam.is_unit():
        return None
    minus = -lam
    z = 0
    for site in range(1, n + 1):
        bit = 1 << (n - site)
        v = m.entry(bit ^ x, bit)
        if v == minus:
            z |= bit
        elif v != lam:
            return None
    candidate = PhasedWord(lam, PauliWord(n, 0, x, z))
    if candidate.to_matrix() == m:
        return candidate
    return None


_TOKEN = re.compile(r"([XYZ])(\d+)")


def parse_word(text: str, n: int) -> PauliWord:
    """Inverse of str(word): e.g. '-Y1X2', 'iZ2', '1'."""
    body = text.strip()
    s = 0
    for prefix, val in (("-i", 3), ("i", 1), ("-", 2)):
        if body.startswith(prefix):
            s = val
            body = body[len(prefix):]
            break
    if body == "1":
        return PauliWord(n, s, 0, 0)
    x = z = 0
    pos = 0
    for m in _TOKEN.finditer(body):
        if m.start() != pos:
            raise ValueError(f"cannot parse Pauli word {text!r}")
        pos = m.end()
        letter, site = m.group(1), int(m.group(2))
        bit = 1 << (n - site)
        if letter in ("X", "Y"):
            x |= bit
        if letter in ("Z", "Y"):
            z |= bit
        if letter == "Y":
            s += 2
    if pos != len(body):
        raise ValueError(f"cannot parse Pauli word {text!r}")
    return PauliWord(n, s, x, z)


@dataclass(frozen=True)
class ConjugationResult:
    word: Optional[PauliWord]
    residue: Optional[DenseMatrix]

    @property
    def is_pauli(self) -> bool:
        return self.word is not None

    def __str__(self) -> str:
        return str(self.word) if self.is_pauli else "<non-Pauli residue>"


@dataclass(frozen=True)
class CliffordCheck:
    ok: bool
    table: tuple = ()
    witness: Optional[tuple] = None

    def __bool__(self) -> bool:
        return self.ok


def conjugate_by(u: DenseMatrix, p: PauliWord) -> ConjugationResult:
    if u.rows != u.cols or u.rows != 1 << p.n:
        raise ValueError("dimension mismatch between unitary and word")
    m = u @ p.to_matrix() @ u.dagger()
    word = pauli_from_matrix(m)
    if word is None:
        return ConjugationResult(None, m)
    return ConjugationResult(word, None)


def is_clifford(u: DenseMatrix) -> CliffordCheck:
    n = u.qubits
    if n is None:
        raise ValueError("matrix is not square power-of-two sized")
    rows = []
    for g in pauli_generators(n):
        r = conjugate_by(u, g)
        if not r.is_pauli:
            return CliffordCheck(False, tuple(rows), (g, r.residue))
        rows.append((g, r))
    return CliffordCheck(True, tuple(rows))


def conjugation_table(u: DenseMatrix) -> list[tuple[PauliWord, ConjugationResult]]:
    n = u.qubits
    if n is None:
        raise ValueError("matrix is not square power-of-two sized")
    return [(g, conjugate_by(u, g)) for g in pauli_generators(n)]


def apply_generator_map(images: dict[str, PauliWord], word: PauliWord) -> PauliWord:
    """Push a word through a map given on generators ('X1', 'Z2', ... -> words).

    The image of i^s X^x Z^z is i^s times the images of the X factors (site
    order) times the images of the Z factors, so a composed map can be checked
    against the identity map generator by generator.
    """
    n = word.n
    out = PauliWord(n, word.s, 0, 0)
    for site in range(1, n + 1):
        if word.x_bit(site):
            out = out * images[f"X{site}"]
    for site in range(1, n + 1):
        if word.z_bit(site):
            out = out * images[f"Z{site}"]
    return out
