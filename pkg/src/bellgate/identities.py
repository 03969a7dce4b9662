"""Data-driven registry of gate decomposition identities.

Each registry entry names two operator products over a fixed qubit count and
an expected relative phase (a power of w = exp(i*pi/4); exponent 0 means the
sides are equal outright).  Factors are JSON objects, so new identities are
data additions, not code.  Supported factor forms:

    {"gate": NAME, "sites": [..], "dagger": true?}   embedded catalog gate
    {"exp": {"terms": [[WORD, COEFF], ..], "quarter_turns": M}}
    {"scalar_omega": P}                              global w**P factor
    {"controlled": {"control": C, "target": T, "unitary": [FACTORS on 1 qubit]}}
    {"transposition": J}                             adjacent product-label swap
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Optional

from .gates import embed, make_gate, transposition_gate
from .linalg import DenseMatrix, equal_up_to_phase, exp_commuting_pauli_sum, tensor
from .pauli import parse_word
from .ring import RingScalar, omega_power

_I2 = DenseMatrix.identity(2)


def build_factor(factor: dict, n: int) -> DenseMatrix:
    if "gate" in factor:
        g = make_gate(factor["gate"])
        if factor.get("dagger"):
            g = g.dagger()
        sites = factor.get("sites")
        if sites is None:
            if g.qubits != n:
                raise ValueError(f"factor {factor} needs explicit sites")
            return g
        return embed(g, n, sites)
    if "exp" in factor:
        desc = factor["exp"]
        terms = [(parse_word(w, n), c) for w, c in desc["terms"]]
        return exp_commuting_pauli_sum(terms, desc["quarter_turns"])
    if "scalar_omega" in factor:
        return DenseMatrix.identity(1 << n) * omega_power(factor["scalar_omega"])
    if "controlled" in factor:
        desc = factor["controlled"]
        u = build_expression(desc["unitary"], 1)
        one, zero = RingScalar(1), RingScalar()
        cu = DenseMatrix.from_rows(
            [
                [one, zero, zero, zero],
                [zero, one, zero, zero],
                [zero, zero, u.entry(0, 0), u.entry(0, 1)],
                [zero, zero, u.entry(1, 0), u.entry(1, 1)],
            ]
        )
        return embed(cu, n, [desc["control"], desc["target"]])
    if "transposition" in factor:
        return transposition_gate(n, factor["transposition"])
    raise ValueError(f"unrecognized factor {factor!r}")


def build_expression(factors: list[dict], n: int) -> DenseMatrix:
    out = DenseMatrix.identity(1 << n)
    for f in factors:
        out = out @ build_factor(f, n)
    return out


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    holds: bool
    expected: bool
    phase_found: Optional[RingScalar]
    phase_registered: RingScalar

    def __bool__(self) -> bool:
        return self.holds


@lru_cache(maxsize=1)
def _registry() -> dict[str, dict]:
    text = resources.files("bellgate").joinpath("data/identities.json").read_text()
    entries = json.loads(text)["identities"]
    return {e["name"]: e for e in entries}


def list_identities() -> list[str]:
    return sorted(_registry())


def identity_expectation(name: str) -> bool:
    return bool(_registry()[name].get("expected", True))


def verify_identity(name: str) -> IdentityCheck:
    """Evaluate both sides of a registered identity and compare exactly.

    Truthy iff the sides match up to the registered phase (exponent 0 means
    outright equality); the report carries the phase actually found.
    """
    try:
        entry = _registry()[name]
    except KeyError:
        raise ValueError(f"unknown identity {name!r}") from None
    n = entry["qubits"]
    lhs = build_expression(entry["lhs"], n)
    rhs = build_expression(entry["rhs"], n)
    registered = omega_power(entry.get("phase_omega", 0))
    found = equal_up_to_phase(lhs, rhs)
    holds = found is not None and found == registered
    return IdentityCheck(
        name=name,
        holds=holds,
        expected=bool(entry.get("expected", True)),
        phase_found=found,
        phase_registered=registered,
    )


def verify_all_identities() -> list[IdentityCheck]:
    return [verify_identity(name) for name in list_identities()]


def yang_baxter_holds(u: DenseMatrix) -> bool:
    """(u x I)(I x u)(u x I) == (I x u)(u x I)(I x u) for a 4x4 u."""
    if u.rows != 4 or u.cols != 4:
        raise ValueError("expected a two-qubit gate")
    a = tensor(u, _I2)
    b = tensor(_I2, u)
    return a @ b @ a == b @ a @ b
