"""Two-qubit non-local invariants over floats.

Every two-qubit unitary is a local dressing of a canonical interaction
exp(i(a XX + b YY + c ZZ)).  In the entangled basis reached by the catalog
Q gate, local unitaries become real orthogonal matrices, so the symmetric
product m^T m exposes the interaction phases through its spectrum.  This
module extracts (a, b, c), folds them into a canonical chamber, and scores
the entangling power they imply, with a Monte-Carlo oracle as a cross-check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .gates import make_gate
from .linalg import DenseMatrix

_QUARTER = math.pi / 4
_HALF_PI = math.pi / 2


@dataclass(frozen=True)
class NonlocalParams:
    """Canonical interaction strengths with pi/4 >= a >= b >= |c|."""

    a: float
    b: float
    c: float

    def as_tuple(self) -> tuple:
        return (self.a, self.b, self.c)


def _as_complex(u) -> np.ndarray:
    if isinstance(u, DenseMatrix):
        return u.to_complex()
    return np.asarray(u, dtype=complex)


@lru_cache(maxsize=1)
def _magic_basis() -> np.ndarray:
    return make_gate("Q").to_complex()


def _fold(x: float) -> float:
    """Reduce mod pi/2 into (-pi/4, pi/4]."""
    y = math.fmod(x, _HALF_PI)
    if y <= -_QUARTER:
        y += _HALF_PI
    elif y > _QUARTER:
        y -= _HALF_PI
    return y


def weyl_canonicalize(a: float, b: float, c: float, tol: float = 1e-9) -> tuple:
    """Fold interaction strengths into the chamber pi/4 >= a >= b >= |c|.

    Single-coordinate shifts by pi/2 and paired sign flips are free (they
    amount to extra local gates); an unpaired sign can only be absorbed on
    the pi/4 boundary.
    """
    vals = sorted((_fold(a), _fold(b), _fold(c)), key=abs, reverse=True)
    if vals[0] < 0 and vals[1] < 0:
        vals[0], vals[1] = -vals[0], -vals[1]
    elif vals[0] < 0:
        vals[0], vals[2] = -vals[0], -vals[2]
    elif vals[1] < 0:
        vals[1], vals[2] = -vals[1], -vals[2]
    if abs(vals[2]) <= tol:
        vals[2] = 0.0
    if vals[2] < 0 and (
        vals[0] >= _QUARTER - tol or abs(vals[2]) >= _QUARTER - tol
    ):
        vals[2] = -vals[2]
    return tuple(vals)


def nonlocal_params(u, tol: float = 1e-9) -> NonlocalParams:
    """Extract the canonical interaction strengths of a two-qubit unitary."""
    mat = _as_complex(u)
    if mat.shape != (4, 4):
        raise ValueError("need a 4x4 matrix")
    defect = np.abs(mat.conj().T @ mat - np.eye(4)).max()
    if defect > tol:
        raise ValueError(f"matrix is not unitary within {tol:g} (defect {defect:.3e})")
    q = _magic_basis()
    m = q.conj().T @ mat @ q
    m = m * np.exp(-0.25j * np.angle(np.linalg.det(m)))
    g = m.T @ m
    phases = np.sort(np.angle(np.linalg.eigvals(g)))
    theta = phases / 2.0
    # det g = 1, so the halved phases must sum to a multiple of pi; pull the
    # excess out of the largest entries to land on zero
    excess = round(float(theta.sum()) / math.pi)
    if excess > 0:
        theta[np.argsort(theta)[::-1][:excess]] -= math.pi
    elif excess < 0:
        theta[np.argsort(theta)[:-excess]] += math.pi
    theta = np.sort(theta)[::-1]
    a = (theta[0] + theta[1]) / 2.0
    b = (theta[0] + theta[2]) / 2.0
    c = (theta[1] + theta[2]) / 2.0
    return NonlocalParams(*weyl_canonicalize(a, b, c, tol))


def entangling_power(u, tol: float = 1e-9) -> float:
    """1 - cos^2-product - sin^2-product of the doubled interaction strengths."""
    p = nonlocal_params(u, tol)
    ca, cb, cc = (math.cos(2 * v) ** 2 for v in p.as_tuple())
    sa, sb, sc = (math.sin(2 * v) ** 2 for v in p.as_tuple())
    return 1.0 - ca * cb * cc - sa * sb * sc


def entangling_power_oracle(u, samples: int = 100_000, seed: int = 0) -> float:
    """Monte-Carlo mean linear entropy over random product inputs.

    Normalized so a controlled flip scores 1; agreement with
    entangling_power is statistical, roughly 5/sqrt(samples).
    """
    if samples < 1:
        raise ValueError("need at least one sample")
    mat = _as_complex(u)
    if mat.shape != (4, 4):
        raise ValueError("need a 4x4 matrix")
    rng = np.random.default_rng(seed)
    first = rng.normal(size=(samples, 2)) + 1j * rng.normal(size=(samples, 2))
    second = rng.normal(size=(samples, 2)) + 1j * rng.normal(size=(samples, 2))
    first /= np.linalg.norm(first, axis=1, keepdims=True)
    second /= np.linalg.norm(second, axis=1, keepdims=True)
    prod = np.einsum("ni,nj->nij", first, second).reshape(samples, 4)
    out = (prod @ mat.T).reshape(samples, 2, 2)
    reduced = np.einsum("nij,nkj->nik", out, out.conj())
    purity = np.einsum("nik,nki->n", reduced, reduced).real
    return float((1.0 - purity).mean() * 4.5)
