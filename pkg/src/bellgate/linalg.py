"""Dense exact linear algebra over the scalar ring.

A matrix (or state vector) stores four integer component planes, the
coefficients of 1, w, w**2, w**3 with w = exp(i*pi/4), plus one shared
power-of-sqrt(2) denominator.  Products reduce to sixteen integer matrix
products recombined with the w**4 = -1 sign pattern, so everything stays
bit-exact.  Arithmetic runs on int64 arrays with a conservative overflow
bound; anything that could overflow transparently switches to Python-int
(object dtype) arrays instead of wrapping.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence, Union

import numpy as np

from .ring import INV_SQRT2, MINUS_ONE, ONE, ZERO, RingScalar, try_div

_INT64_SAFE = 1 << 62
_MAX_DIM = 1 << 12
_SQRT_HALF = math.sqrt(0.5)


def _lift_once(comps: np.ndarray) -> np.ndarray:
    """Multiply every entry's numerator by sqrt2."""
    a, b, c, d = comps[..., 0], comps[..., 1], comps[..., 2], comps[..., 3]
    return np.stack([b - d, a + c, b + d, c - a], axis=-1)


def _max_abs(arr: np.ndarray) -> int:
    if arr.size == 0:
        return 0
    if arr.dtype == object:
        return max((abs(int(x)) for x in arr.flat), default=0)
    return int(np.abs(arr).max())


def _widen(arr: np.ndarray) -> np.ndarray:
    return arr if arr.dtype == object else arr.astype(object)


def _narrow(arr: np.ndarray) -> np.ndarray:
    if arr.dtype == object and _max_abs(arr) < _INT64_SAFE:
        return arr.astype(np.int64)
    return arr


def _canonicalize(comps: np.ndarray, k: int) -> tuple[np.ndarray, int]:
    comps = _narrow(comps)
    if not comps.any():
        return np.zeros(comps.shape, dtype=np.int64), 0
    while k > 0:
        a, b, c, d = comps[..., 0], comps[..., 1], comps[..., 2], comps[..., 3]
        if ((a - c) & 1).any() or ((b - d) & 1).any():
            break
        comps = np.stack([(b - d) >> 1, (a + c) >> 1, (b + d) >> 1, (c - a) >> 1], axis=-1)
        k -= 1
    comps = _narrow(comps)
    comps.flags.writeable = False
    return comps, k


def _omega_combine(prod) -> np.ndarray:
    """Recombine the 16 cross products of two component stacks, w**4 = -1."""
    out = [None] * 4
    for i in range(4):
        for j in range(4):
            term = prod(i, j)
            if i + j >= 4:
                term = -term
            t = (i + j) % 4
            out[t] = term if out[t] is None else out[t] + term
    return np.stack(out, axis=-1)


def _align(x: "_RingArray", y: "_RingArray") -> tuple[np.ndarray, np.ndarray, int]:
    """Bring two values to a common denominator exponent."""
    cx, cy, k = x.comps, y.comps, max(x.k, y.k)
    if x.k < k:
        if _max_abs(cx) << (k - x.k) >= _INT64_SAFE:
            cx = _widen(cx)
        for _ in range(k - x.k):
            cx = _lift_once(cx)
    if y.k < k:
        if _max_abs(cy) << (k - y.k) >= _INT64_SAFE:
            cy = _widen(cy)
        for _ in range(k - y.k):
            cy = _lift_once(cy)
    return cx, cy, k


def _scalar_comps(s: RingScalar) -> tuple[int, int, int, int]:
    return (s.a, s.b, s.c, s.d)


def _entry_scalar(comps: np.ndarray, k: int, index) -> RingScalar:
    a, b, c, d = (int(v) for v in comps[index])
    return RingScalar(a, b, c, d, k)


def _to_complex(comps: np.ndarray, k: int) -> np.ndarray:
    arr = comps.astype(np.float64) if comps.dtype == object else comps
    a, b, c, d = arr[..., 0], arr[..., 1], arr[..., 2], arr[..., 3]
    z = (a + (b - d) * _SQRT_HALF) + 1j * (c + (b + d) * _SQRT_HALF)
    half, odd = divmod(k, 2)
    z = z / (2.0 ** half)
    if odd:
        z = z * _SQRT_HALF
    return z


class _RingArray:
    """Shared plumbing for DenseMatrix and StateVector."""

    __slots__ = ("comps", "k")

    def __init__(self, comps: np.ndarray, k: int):
        comps, k = _canonicalize(np.asarray(comps), k)
        object.__setattr__(self, "comps", comps)
        object.__setattr__(self, "k", k)

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def is_zero(self) -> bool:
        return not self.comps.any()

    def _key(self):
        comps = self.comps
        if comps.dtype == object:
            body = tuple(int(x) for x in comps.flat)
        else:
            body = comps.tobytes()
        return (type(self).__name__, comps.shape, self.k, body)

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        if self.comps.shape != other.comps.shape or self.k != other.k:
            return False
        return bool(np.array_equal(self.comps, other.comps))

    def __hash__(self):
        return hash(self._key())

    def _combine_with(self, other: "_RingArray", sign: int) -> tuple[np.ndarray, int]:
        cx, cy, k = _align(self, other)
        if _max_abs(cx) + _max_abs(cy) >= _INT64_SAFE:
            cx, cy = _widen(cx), _widen(cy)
        return cx + sign * cy, k

    def _scaled(self, s: RingScalar) -> tuple[np.ndarray, int]:
        comps = self.comps
        sc = _scalar_comps(s)
        if 4 * _max_abs(comps) * max(map(abs, sc), default=0) >= _INT64_SAFE:
            comps = _widen(comps)
        out = _omega_combine(lambda i, j: comps[..., i] * sc[j])
        return out, self.k + s.k


class DenseMatrix(_RingArray):
    """Exact rows x cols matrix; comps has shape (rows, cols, 4)."""

    @property
    def rows(self) -> int:
        return self.comps.shape[0]

    @property
    def cols(self) -> int:
        return self.comps.shape[1]

    @property
    def qubits(self) -> int | None:
        n = (self.rows - 1).bit_length()
        if self.rows == self.cols == (1 << n):
            return n
        return None

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[RingScalar]]) -> "DenseMatrix":
        k = max((s.k for row in rows for s in row), default=0)
        data = []
        for row in rows:
            out_row = []
            for s in row:
                comp = [s.a, s.b, s.c, s.d]
                for _ in range(k - s.k):
                    a, b, c, d = comp
                    comp = [b - d, a + c, b + d, c - a]
                out_row.append(comp)
            data.append(out_row)
        arr = np.array(data, dtype=object)
        return cls(arr, k)

    @classmethod
    def from_int_rows(cls, rows, k: int = 0) -> "DenseMatrix":
        arr = np.asarray(rows)
        comps = np.zeros(arr.shape + (4,), dtype=object)
        comps[..., 0] = arr
        return cls(comps, k)

    @classmethod
    def identity(cls, dim: int) -> "DenseMatrix":
        if not 1 <= dim <= _MAX_DIM:
            raise ValueError(f"dimension {dim} out of range")
        comps = np.zeros((dim, dim, 4), dtype=np.int64)
        comps[np.arange(dim), np.arange(dim), 0] = 1
        return cls(comps, 0)

    @classmethod
    def zero(cls, rows: int, cols: int) -> "DenseMatrix":
        return cls(np.zeros((rows, cols, 4), dtype=np.int64), 0)

    def entry(self, i: int, j: int) -> RingScalar:
        return _entry_scalar(self.comps, self.k, (i, j))

    def column(self, j: int) -> "StateVector":
        return StateVector(self.comps[:, j, :], self.k)

    def to_complex(self) -> np.ndarray:
        return _to_complex(self.comps, self.k)

    def __neg__(self) -> "DenseMatrix":
        return DenseMatrix(-self.comps, self.k)

    def __add__(self, other: "DenseMatrix") -> "DenseMatrix":
        if self.comps.shape != other.comps.shape:
            raise ValueError("shape mismatch")
        comps, k = self._combine_with(other, 1)
        return DenseMatrix(comps, k)

    def __sub__(self, other: "DenseMatrix") -> "DenseMatrix":
        if self.comps.shape != other.comps.shape:
            raise ValueError("shape mismatch")
        comps, k = self._combine_with(other, -1)
        return DenseMatrix(comps, k)

    def __mul__(self, s: RingScalar) -> "DenseMatrix":
        comps, k = self._scaled(s)
        return DenseMatrix(comps, k)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if isinstance(other, StateVector):
            return self.apply(other)
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        ca, cb = self.comps, other.comps
        bound = 4 * self.cols * _max_abs(ca) * _max_abs(cb)
        if bound >= _INT64_SAFE:
            ca, cb = _widen(ca), _widen(cb)
        out = _omega_combine(lambda i, j: ca[..., i] @ cb[..., j])
        return DenseMatrix(out, self.k + other.k)

    def apply(self, s: "StateVector") -> "StateVector":
        if self.cols != s.dim:
            raise ValueError(f"cannot apply {self.rows}x{self.cols} to dim-{s.dim} vector")
        ca, cb = self.comps, s.comps
        bound = 4 * self.cols * _max_abs(ca) * _max_abs(cb)
        if bound >= _INT64_SAFE:
            ca, cb = _widen(ca), _widen(cb)
        out = _omega_combine(lambda i, j: ca[..., i] @ cb[..., j])
        return StateVector(out, self.k + s.k)

    def dagger(self) -> "DenseMatrix":
        a, b, c, d = (self.comps[..., t] for t in range(4))
        conj = np.stack([a, -d, -c, -b], axis=-1)
        return DenseMatrix(conj.transpose(1, 0, 2), self.k)

    def transpose(self) -> "DenseMatrix":
        return DenseMatrix(self.comps.transpose(1, 0, 2), self.k)

    def conjugate(self) -> "DenseMatrix":
        a, b, c, d = (self.comps[..., t] for t in range(4))
        return DenseMatrix(np.stack([a, -d, -c, -b], axis=-1), self.k)

    def is_identity(self) -> bool:
        return self.rows == self.cols and self == DenseMatrix.identity(self.rows)

    def is_unitary(self) -> bool:
        return self.rows == self.cols and (self @ self.dagger()).is_identity()

    def commutes_with(self, other: "DenseMatrix") -> bool:
        return self @ other == other @ self

    def __repr__(self):
        return f"DenseMatrix({self.rows}x{self.cols}, k={self.k})"


class StateVector(_RingArray):
    """Exact amplitude vector over n qubits; comps has shape (2**n, 4)."""

    def __init__(self, comps, k: int):
        super().__init__(comps, k)
        dim = self.comps.shape[0]
        if dim & (dim - 1) or not 1 <= dim <= _MAX_DIM:
            raise ValueError(f"state dimension {dim} is not a power of two in range")

    @property
    def dim(self) -> int:
        return self.comps.shape[0]

    @property
    def qubits(self) -> int:
        return (self.dim - 1).bit_length()

    @classmethod
    def from_amplitudes(cls, amps: Sequence[RingScalar]) -> "StateVector":
        mat = DenseMatrix.from_rows([[a] for a in amps])
        return cls(mat.comps[:, 0, :], mat.k)

    @classmethod
    def basis(cls, n: int, index: int) -> "StateVector":
        comps = np.zeros((1 << n, 4), dtype=np.int64)
        comps[index, 0] = 1
        return cls(comps, 0)

    def entry(self, i: int) -> RingScalar:
        return _entry_scalar(self.comps, self.k, i)

    def amplitudes(self) -> list[RingScalar]:
        return [self.entry(i) for i in range(self.dim)]

    def to_complex(self) -> np.ndarray:
        return _to_complex(self.comps, self.k)

    def norm2(self) -> RingScalar:
        total = ZERO
        for amp in self.amplitudes():
            total = total + amp.abs2()
        return total

    def inner(self, other: "StateVector") -> RingScalar:
        """<self|other> with conjugation on self."""
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        total = ZERO
        for i in range(self.dim):
            total = total + self.entry(i).conj() * other.entry(i)
        return total

    def __neg__(self) -> "StateVector":
        return StateVector(-self.comps, self.k)

    def __add__(self, other: "StateVector") -> "StateVector":
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        comps, k = self._combine_with(other, 1)
        return StateVector(comps, k)

    def __sub__(self, other: "StateVector") -> "StateVector":
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        comps, k = self._combine_with(other, -1)
        return StateVector(comps, k)

    def __mul__(self, s: RingScalar) -> "StateVector":
        comps, k = self._scaled(s)
        return StateVector(comps, k)

    __rmul__ = __mul__

    def __repr__(self):
        return f"StateVector(qubits={self.qubits}, k={self.k})"


RingValue = Union[DenseMatrix, StateVector]


def tensor(a: RingValue, b: RingValue) -> RingValue:
    """Kronecker product; a's indices are most significant (leftmost site first)."""
    ca, cb = a.comps, b.comps
    if 4 * _max_abs(ca) * _max_abs(cb) >= _INT64_SAFE:
        ca, cb = _widen(ca), _widen(cb)
    if isinstance(a, DenseMatrix) and isinstance(b, DenseMatrix):
        out = _omega_combine(lambda i, j: np.kron(ca[..., i], cb[..., j]))
        if out.shape[0] > _MAX_DIM or out.shape[1] > _MAX_DIM:
            raise ValueError("tensor result exceeds supported dimension")
        return DenseMatrix(out, a.k + b.k)
    if isinstance(a, StateVector) and isinstance(b, StateVector):
        out = _omega_combine(lambda i, j: np.kron(ca[..., i], cb[..., j]))
        return StateVector(out, a.k + b.k)
    raise TypeError("tensor arguments must be two matrices or two state vectors")


def tensor_all(factors: Iterable[RingValue]) -> RingValue:
    factors = list(factors)
    out = factors[0]
    for f in factors[1:]:
        out = tensor(out, f)
    return out


def matmul(a: DenseMatrix, b: DenseMatrix) -> DenseMatrix:
    return a @ b


def dagger(a: DenseMatrix) -> DenseMatrix:
    return a.dagger()


def apply(a: DenseMatrix, s: StateVector) -> StateVector:
    return a.apply(s)


def equal_up_to_phase(a: RingValue, b: RingValue) -> RingScalar | None:
    """Unit scalar lam with a = lam * b, or None if no such unit exists."""
    if type(a) is not type(b) or a.comps.shape != b.comps.shape:
        raise ValueError("operands must have identical shape")
    if b.is_zero():
        return ONE if a.is_zero() else None
    if a.is_zero():
        return None
    flat_b = b.comps.reshape(-1, 4)
    pivot = next(i for i in range(flat_b.shape[0]) if flat_b[i].any())
    pb = _entry_scalar(flat_b, b.k, pivot)
    pa = _entry_scalar(a.comps.reshape(-1, 4), a.k, pivot)
    lam = try_div(pa, pb)
    if lam is None or not lam.is_unit():
        return None
    scaled, sk = b._scaled(lam)
    if type(a)(scaled, sk) == a:
        return lam
    return None


_COS = (ONE, INV_SQRT2, ZERO, -INV_SQRT2, MINUS_ONE, -INV_SQRT2, ZERO, INV_SQRT2)
_SIN = (ZERO, INV_SQRT2, ONE, INV_SQRT2, ZERO, -INV_SQRT2, MINUS_ONE, -INV_SQRT2)

_I_SCALAR = RingScalar(0, 0, 1)


def exp_commuting_pauli_sum(terms, quarter_turns: int) -> DenseMatrix:
    """Closed-form exponential of a sum of commuting terms at angle quarter_turns * pi/4.

    Each term is (word, coeff) where word is a Pauli word (or its matrix) whose
    square is +I or -I.  Squares of +I exponentiate as exp(-i*theta*W); squares
    of -I as exp(theta*W).  theta = quarter_turns * coeff * pi/4.
    """
    if not isinstance(quarter_turns, int):
        raise TypeError("angle must be an integer number of quarter turns")
    terms = list(terms)
    if not terms:
        raise ValueError("at least one term is required")
    mats: list[tuple[DenseMatrix, int]] = []
    for word, coeff in terms:
        m = word.to_matrix() if hasattr(word, "to_matrix") else word
        mats.append((m, int(coeff)))
    dim = mats[0][0].rows
    ident = DenseMatrix.identity(dim)
    for idx, (m, _) in enumerate(mats):
        sq = m @ m
        if sq == ident:
            herm = True
        elif sq == -ident:
            herm = False
        else:
            raise ValueError(f"term {idx} does not square to +I or -I")
        mats[idx] = (m, mats[idx][1], herm)
    for i in range(len(mats)):
        for j in range(i + 1, len(mats)):
            if not mats[i][0].commutes_with(mats[j][0]):
                raise ValueError(f"terms {i} and {j} do not commute")
    out = ident
    for m, coeff, herm in mats:
        t = (quarter_turns * coeff) % 8
        if herm:
            factor = ident * _COS[t] - m * (_I_SCALAR * _SIN[t])
        else:
            factor = ident * _COS[t] + m * _SIN[t]
        out = out @ factor
    return out
