"""Regenerate the JSON fixtures shipped under src/bellgate/data/.

The fixtures hold the golden conjugation rows and closed-form correction
encodings that the verification suites diff the implementation against.
Rendering goes through the package's own Pauli printer so the fixture
strings and the recomputed strings share one format.
"""

import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from bellgate.pauli import PauliWord  # noqa: E402

DATA = ROOT / "src" / "bellgate" / "data"

FAMILY_SIZES = (2, 3, 4, 5)


def word(letters, minus=False):
    """Product of single-site letters; '1' skips a site."""
    n = len(letters)
    out = PauliWord.identity(n)
    for site, letter in enumerate(letters, start=1):
        if letter != "1":
            out = out * PauliWord.single(n, site, letter)
    return str(out.with_phase(2) if minus else out)


def family_rows(family, n):
    rows = {}
    for i in range(1, n + 1):
        if family == "CH_N":
            img = word(["Z"] + ["1"] * (n - 1)) if i == 1 else word(
                ["X" if t == i else "1" for t in range(1, n + 1)]
            )
        elif family == "B_N":
            if i < n:
                img = word(["X" if t == i else "1" for t in range(1, n + 1)])
            else:
                img = word(["X"] * (n - 1) + ["Z"])
        else:  # BPRIME_N and RPRIME_N share their X rows
            if i == 1:
                img = word(["Z"] + ["X"] * (n - 1))
            else:
                img = word(["X" if t == i else "1" for t in range(1, n + 1)])
        rows[f"X{i}"] = img
    for i in range(1, n + 1):
        if family == "CH_N":
            img = word(["X"] * n) if i == 1 else word(
                ["Z" if t in (1, i) else "1" for t in range(1, n + 1)]
            )
        elif family == "B_N":
            if i < n:
                img = word(["Y" if t == i else "X" for t in range(1, n)] + ["Y"], minus=True)
            else:
                img = word(["X"] * n, minus=True)
        elif family == "BPRIME_N":
            if i == 1:
                img = word(["X"] * n, minus=True)
            else:
                img = word(["Y"] + ["Y" if t == i else "X" for t in range(2, n + 1)], minus=True)
        else:  # RPRIME_N: same letters as BPRIME_N, opposite sign
            if i == 1:
                img = word(["X"] * n)
            else:
                img = word(["Y"] + ["Y" if t == i else "X" for t in range(2, n + 1)])
        rows[f"Z{i}"] = img
    return rows


FAMILIES = {
    family: {str(n): family_rows(family, n) for n in FAMILY_SIZES}
    for family in ("CH_N", "B_N", "BPRIME_N", "RPRIME_N")
}

TWO_QUBIT = {
    "CH": {"X1": "Z1", "X2": "X2", "Z1": "X1X2", "Z2": "Z1Z2"},
    "B": {"X1": "X1", "X2": "X1Z2", "Z1": "-Y1Y2", "Z2": "-X1X2"},
    "Q": {"X1": "Z1X2", "X2": "-iY1Z2", "Z1": "X1X2", "Z2": "Y1Y2"},
    "R": {"X1": "X1Z2", "X2": "iZ1Y2", "Z1": "X1X2", "Z2": "Y1Y2"},
    "CH_INV": {"X1": "Z1X2", "X2": "X2", "Z1": "X1", "Z2": "X1Z2"},
    "B_INV": {"X1": "X1", "X2": "-X1Z2", "Z1": "Y1Y2", "Z2": "X1X2"},
    "Q_INV": {"X1": "iZ1Y2", "X2": "iY2", "Z1": "iX1Y2", "Z2": "iY1X2"},
    "R_INV": {"X1": "-iY2", "X2": "-iZ1Y2", "Z1": "-iY1X2", "Z2": "-iX1Y2"},
}

OPERATOR_EXPRESSIONS = {
    "TOFFOLI": {
        "X1": ["X1", "CNOT23"],
        "X2": ["X2", "CNOT13"],
        "X3": ["X3"],
        "Z1": ["Z1"],
        "Z2": ["Z2"],
        "Z3": ["Z3", "CZ12"],
    },
    "FREDKIN": {
        "X1": ["X1", "SWAP23"],
        "X2": ["X2", "CNOT13", "CNOT12"],
        "X3": ["X3", "CNOT13", "CNOT12"],
        "Z1": ["Z1"],
        "Z2": ["Z2", "CZ13", "CZ12"],
        "Z3": ["Z3", "CZ13", "CZ12"],
    },
}


def form(base, exp, letters):
    return {"base": base, "exp": exp, "letters": [list(p) for p in letters]}


CORRECTION_FORMS = {
    "CH": {
        "u": form("1", "0", [("X", "j"), ("Z", "i")]),
        "v": form("1", "0", [("X", "l"), ("Z", "k")]),
    },
    "B": {
        "u": form("1", "0", [("Z", "j+1"), ("X", "i+j")]),
        "v": form("1", "0", [("Z", "l+1"), ("X", "k+l")]),
    },
    "Q": {
        "u": form("-i", "j", [("X", "i+j"), ("Z", "i")]),
        "v": form("i", "l", [("X", "k+l"), ("Z", "k")]),
    },
    "R": {
        "u": form("i", "j", [("Z", "i"), ("X", "i+j")]),
        "v": form("-i", "l", [("Z", "k"), ("X", "k+l")]),
    },
}

SINGLE_GATE_ROWS = {
    "H": {
        "CH": {
            "r": form("1", "0", [("Z", "j"), ("X", "i")]),
            "s": form("1", "0", [("Z", "l"), ("X", "k")]),
        },
        "B": {
            "r": form("1", "0", [("X", "j+1"), ("Z", "i+j")]),
            "s": form("1", "0", [("X", "l+1"), ("Z", "k+l")]),
        },
        "Q": {
            "r": form("-i", "j", [("Z", "i+j"), ("X", "i")]),
            "s": form("i", "l", [("Z", "k+l"), ("X", "k")]),
        },
        "R": {
            "r": form("i", "j", [("X", "i"), ("Z", "i+j")]),
            "s": form("-i", "l", [("X", "k"), ("Z", "k+l")]),
        },
    },
    "T": {
        "CH": {
            "r": form("1", "0", [("W", "j"), ("Z", "i")]),
            "s": form("1", "0", [("W", "l"), ("Z", "k")]),
        },
        "B": {
            "r": form("1", "0", [("Z", "j+1"), ("W", "i+j")]),
            "s": form("1", "0", [("Z", "l+1"), ("W", "k+l")]),
        },
        "Q": {
            "r": form("-i", "j", [("W", "i+j"), ("Z", "i")]),
            "s": form("i", "l", [("W", "k+l"), ("Z", "k")]),
        },
        "R": {
            "r": form("i", "j", [("Z", "i"), ("W", "i+j")]),
            "s": form("-i", "l", [("Z", "k"), ("W", "k+l")]),
        },
    },
}


def atom(base, clauses):
    return {"base": base, "clauses": [{"vars": list(v), "flip": f} for v, f in clauses]}


def factor(atoms, letters):
    return {"atoms": atoms, "letters": [list(p) for p in letters]}


TWO_GATE_FORMS = {
    "groups": {"CH": "CHQ", "Q": "CHQ", "B": "BR", "R": "BR"},
    "indices": {
        "CH": {"a": ["j1", "l1"], "b": ["i1", "k1"], "c": ["i2", "k2"], "d": ["j2", "l2"]},
        "B": {
            "a": ["j1", "l1"],
            "b": ["i1", "j1", "k1", "l1"],
            "c": ["i2", "j2", "k2", "l2"],
            "d": ["j2", "l2"],
        },
        "Q": {
            "a": ["i1", "j1", "k1", "l1"],
            "b": ["i1", "k1"],
            "c": ["i2", "k2"],
            "d": ["i2", "j2", "k2", "l2"],
        },
        "R": {
            "a": ["i1", "k1"],
            "b": ["i1", "j1", "k1", "l1"],
            "c": ["i2", "j2", "k2", "l2"],
            "d": ["i2", "k2"],
        },
    },
    "index_phases": {
        "CH": {
            "q": [atom("-1", [(["j1"], False), (["k1"], False)])],
            "p": [atom("-1", [(["i2"], False), (["l2"], False)])],
        },
        "B": {
            "q": [atom("-1", [(["k1", "l1"], False), (["j1"], True)])],
            "p": [atom("-1", [(["i2", "j2"], False), (["l2"], True)])],
        },
        "Q": {
            "q": [
                atom("-1", [(["i1", "j1"], False), (["k1"], False)]),
                atom("-i", [(["j1"], False)]),
                atom("i", [(["l1"], False)]),
            ],
            "p": [
                atom("-1", [(["k2", "l2"], False), (["i2"], False)]),
                atom("-i", [(["j2"], False)]),
                atom("i", [(["l2"], False)]),
            ],
        },
        "R": {
            "q": [
                atom("-1", [(["k1", "l1"], False), (["i1"], False)]),
                atom("-i", [(["l1"], False)]),
                atom("i", [(["j1"], False)]),
            ],
            "p": [
                atom("-1", [(["i2", "j2"], False), (["k2"], False)]),
                atom("-i", [(["l2"], False)]),
                atom("i", [(["j2"], False)]),
            ],
        },
    },
    "gate_rows": {
        "CHQ": {
            "CNOT": {
                "q": factor([], [("X", "a"), ("Z", "b"), ("Z", "c")]),
                "p": factor([], [("X", "a"), ("Z", "c"), ("X", "d")]),
            },
            "CZ": {
                "q": factor([], [("X", "a"), ("Z", "b"), ("Z", "d")]),
                "p": factor([], [("Z", "a"), ("Z", "c"), ("X", "d")]),
            },
            "CH": {
                "q": factor([], [("Z", "a"), ("X", "b"), ("Z", "c")]),
                "p": factor([], [("X", "b"), ("Z", "c"), ("X", "d")]),
            },
            "CH_INV": {
                "q": factor([], [("Z", "a"), ("X", "b"), ("X", "c")]),
                "p": factor([], [("X", "a"), ("Z", "c"), ("X", "d")]),
            },
            "B": {
                "q": factor(
                    [atom("-1", [(["b"], False)])],
                    [("X", "a"), ("Y", "b"), ("X", "c"), ("X", "d")],
                ),
                "p": factor(
                    [atom("-1", [(["c"], False)])], [("Y", "b"), ("X", "c"), ("Z", "d")]
                ),
            },
            "B_INV": {
                "q": factor([], [("X", "a"), ("Y", "b"), ("X", "c"), ("X", "d")]),
                "p": factor(
                    [atom("-1", [(["d"], False)])], [("Y", "b"), ("X", "c"), ("Z", "d")]
                ),
            },
            "Q": {
                "q": factor([], [("Z", "a"), ("X", "b"), ("Y", "c"), ("Y", "d")]),
                "p": factor(
                    [atom("-i", [(["d"], False)])],
                    [("X", "a"), ("X", "b"), ("Y", "c"), ("Z", "d")],
                ),
            },
            "Q_INV": {
                "q": factor(
                    [atom("i", [(["a"], False)]), atom("i", [(["b"], False)])],
                    [("Z", "a"), ("X", "b"), ("Y", "c")],
                ),
                "p": factor(
                    [atom("i", [(["c"], False)]), atom("i", [(["d"], False)])],
                    [("Y", "a"), ("Y", "b"), ("X", "c"), ("Y", "d")],
                ),
            },
            "R": {
                "q": factor([], [("X", "a"), ("X", "b"), ("Y", "c"), ("Z", "d")]),
                "p": factor(
                    [atom("i", [(["d"], False)])],
                    [("Z", "a"), ("X", "b"), ("Y", "c"), ("Y", "d")],
                ),
            },
            "R_INV": {
                "q": factor(
                    [atom("-i", [(["a"], False)]), atom("-i", [(["b"], False)])],
                    [("Y", "b"), ("X", "c"), ("Z", "d")],
                ),
                "p": factor(
                    [atom("-i", [(["c"], False)]), atom("-i", [(["d"], False)])],
                    [("Y", "a"), ("X", "b"), ("Y", "c"), ("Y", "d")],
                ),
            },
        },
        "BR": {
            "CNOT": {
                "q": factor([], [("Z", "a"), ("X", "b"), ("Z", "d")]),
                "p": factor([], [("X", "b"), ("X", "c"), ("Z", "d")]),
            },
            "CZ": {
                "q": factor([], [("Z", "a"), ("X", "b"), ("Z", "c")]),
                "p": factor([], [("Z", "b"), ("X", "c"), ("Z", "d")]),
            },
            "CH": {
                "q": factor([], [("X", "a"), ("Z", "b"), ("Z", "d")]),
                "p": factor([], [("X", "a"), ("X", "c"), ("Z", "d")]),
            },
            "CH_INV": {
                "q": factor([], [("X", "a"), ("Z", "b"), ("X", "d")]),
                "p": factor([], [("X", "b"), ("X", "c"), ("Z", "d")]),
            },
            "B": {
                "q": factor(
                    [atom("-1", [(["a"], False)])],
                    [("Y", "a"), ("X", "b"), ("X", "c"), ("X", "d")],
                ),
                "p": factor(
                    [atom("-1", [(["d"], False)])], [("Y", "a"), ("Z", "c"), ("X", "d")]
                ),
            },
            "B_INV": {
                "q": factor([], [("Y", "a"), ("X", "b"), ("X", "c"), ("X", "d")]),
                "p": factor(
                    [atom("-1", [(["c"], False)])], [("Y", "a"), ("Z", "c"), ("X", "d")]
                ),
            },
            "Q": {
                "q": factor([], [("X", "a"), ("Z", "b"), ("Y", "c"), ("Y", "d")]),
                "p": factor(
                    [atom("-i", [(["c"], False)])],
                    [("X", "a"), ("X", "b"), ("Z", "c"), ("Y", "d")],
                ),
            },
            "Q_INV": {
                "q": factor(
                    [atom("i", [(["a"], False)]), atom("i", [(["b"], False)])],
                    [("X", "a"), ("Z", "b"), ("Y", "d")],
                ),
                "p": factor(
                    [atom("i", [(["c"], False)]), atom("i", [(["d"], False)])],
                    [("Y", "a"), ("Y", "b"), ("Y", "c"), ("X", "d")],
                ),
            },
            "R": {
                "q": factor([], [("X", "a"), ("X", "b"), ("Z", "c"), ("Y", "d")]),
                "p": factor(
                    [atom("i", [(["c"], False)])],
                    [("X", "a"), ("Z", "b"), ("Y", "c"), ("Y", "d")],
                ),
            },
            "R_INV": {
                "q": factor(
                    [atom("-i", [(["a"], False)]), atom("-i", [(["b"], False)])],
                    [("Y", "a"), ("Z", "c"), ("X", "d")],
                ),
                "p": factor(
                    [atom("-i", [(["c"], False)]), atom("-i", [(["d"], False)])],
                    [("X", "a"), ("Y", "b"), ("Y", "c"), ("Y", "d")],
                ),
            },
        },
    },
}


def main():
    outputs = {
        "conjugation_families.json": FAMILIES,
        "conjugation_two_qubit.json": TWO_QUBIT,
        "conjugation_operator_expressions.json": OPERATOR_EXPRESSIONS,
        "correction_forms.json": CORRECTION_FORMS,
        "single_gate_rows.json": SINGLE_GATE_ROWS,
        "two_gate_forms.json": TWO_GATE_FORMS,
    }
    DATA.mkdir(parents=True, exist_ok=True)
    for name, payload in outputs.items():
        path = DATA / name
        path.write_text(json.dumps(payload, indent=2) + "\n")
        print(f"wrote {path.relative_to(ROOT)}")


if __name__ == "__main__":
    main()
