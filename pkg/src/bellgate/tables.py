"""Golden conjugation rows and encoded correction closed forms.

The JSON fixtures under bellgate/data freeze the expected row content;
this module loads them, evaluates the encoded forms into exact words and
matrices, and diffs recomputed results against the frozen rows bit for
bit.  Diff functions return plain record dicts with keys id, expected,
actual, ok so report assembly and tests can share them.
"""

from __future__ import annotations

import json
import re
from functools import lru_cache
from importlib import resources
from itertools import product

from .gates import embed, family_gate, make_gate
from .linalg import DenseMatrix, tensor
from .pauli import PauliWord, PhasedWord, conjugation_table, phased_pauli_from_matrix
from .ring import ONE, i_power
from .teleport import derive_corrections, single_gate_table, two_gate_table

FAMILY_SIZES = (2, 3, 4, 5)

_BASES = {"1": ONE, "i": i_power(1), "-1": i_power(2), "-i": i_power(3)}
_TOKEN = re.compile(r"^([A-Z_]+?)(\d+)$")


@lru_cache(maxsize=None)
def _load(name: str):
    text = resources.files("bellgate").joinpath(f"data/{name}").read_text()
    return json.loads(text)


# --- golden conjugation rows ---


def family_tables() -> dict:
    return _load("conjugation_families.json")


def family_table(family: str, n: int) -> dict:
    tables = family_tables()
    if family not in tables:
        raise ValueError(f"no golden rows for family {family!r}")
    if str(n) not in tables[family]:
        raise ValueError(f"no golden rows for {family} at n={n}")
    return tables[family][str(n)]


def two_qubit_tables() -> dict:
    return _load("conjugation_two_qubit.json")


def two_qubit_table(name: str) -> dict:
    tables = two_qubit_tables()
    if name not in tables:
        raise ValueError(f"no golden rows for transform {name!r}")
    return tables[name]


def operator_expression_tables() -> dict:
    return _load("conjugation_operator_expressions.json")


def operator_expression_table(name: str) -> dict:
    tables = operator_expression_tables()
    if name not in tables:
        raise ValueError(f"no golden expression rows for {name!r}")
    return tables[name]


def expression_matrix(tokens: list, n: int) -> DenseMatrix:
    """Exact product of tokens like "X1" or "CNOT23" embedded on n qubits."""
    out = DenseMatrix.identity(1 << n)
    for tok in tokens:
        m = _TOKEN.match(tok)
        if m is None:
            raise ValueError(f"bad expression token {tok!r}")
        name, digits = m.groups()
        sites = [int(d) for d in digits]
        out = out @ embed(make_gate(name), n, sites)
    return out


# --- encoded correction forms ---


def xor_bit(expr: str, env: dict) -> int:
    """Evaluate a mod-2 sum like "i+j+1" over the index environment."""
    val = 0
    for tok in expr.split("+"):
        val ^= env[tok] if tok in env else int(tok)
    return val & 1


def correction_forms() -> dict:
    return _load("correction_forms.json")


def single_gate_forms(conjugator: str) -> dict:
    rows = _load("single_gate_rows.json")
    if conjugator not in rows:
        raise ValueError(f"no encoded rows for conjugation by {conjugator!r}")
    return rows[conjugator]


def pauli_form_word(form: dict, env: dict) -> PhasedWord:
    """Evaluate a {base, exp, letters} form into an exact phased word."""
    phase = _BASES[form["base"]] if xor_bit(form["exp"], env) else ONE
    w = PhasedWord(phase, PauliWord.identity(1))
    for letter, expr in form["letters"]:
        if xor_bit(expr, env):
            w = w * PhasedWord(ONE, PauliWord.single(1, 1, letter))
    return w


def gate_form_matrix(form: dict, env: dict) -> DenseMatrix:
    """Like pauli_form_word but over catalog matrices, so W letters work."""
    out = DenseMatrix.identity(2)
    for letter, expr in form["letters"]:
        if xor_bit(expr, env):
            out = out @ make_gate(letter)
    if xor_bit(form["exp"], env):
        out = out * _BASES[form["base"]]
    return out


def form_text(form: dict) -> str:
    parts = []
    if form["exp"] != "0":
        parts.append(f"({form['base']})^({form['exp']})")
    parts.extend(f"{letter}^({expr})" for letter, expr in form["letters"])
    return " ".join(parts) or "1"


def render_phased_word(pw: PhasedWord) -> str:
    for k in range(4):
        if pw.phase == i_power(k):
            return str(pw.word.with_phase(k))
    return f"({pw.phase}) * {pw.word}"


# --- encoded two-gate forms ---


def two_gate_forms() -> dict:
    return _load("two_gate_forms.json")


def two_gate_transforms() -> list:
    return list(two_gate_forms()["groups"])


def two_gate_conjugated_gates() -> list:
    rows = two_gate_forms()["gate_rows"]
    return list(next(iter(rows.values())))


def combined_indices(bell: str, indices) -> dict:
    """Extend the eight measured bits with the transform's derived bits."""
    forms = two_gate_forms()
    if bell not in forms["indices"]:
        raise ValueError(f"no encoded index rows for transform {bell!r}")
    env = dict(zip(("i1", "j1", "k1", "l1", "i2", "j2", "k2", "l2"), indices))
    for sym, sources in forms["indices"][bell].items():
        bit = 0
        for v in sources:
            bit ^= env[v]
        env[sym] = bit
    return env


def _atom_phase(atom: dict, env: dict):
    on = 1
    for clause in atom["clauses"]:
        bit = 0
        for v in clause["vars"]:
            bit ^= env[v]
        if clause["flip"]:
            bit ^= 1
        on &= bit
    return _BASES[atom["base"]] if on else ONE


def two_gate_prediction(bell: str, cu: str, indices) -> tuple:
    """Encoded (Q, P) one-qubit factors for one measured index tuple."""
    forms = two_gate_forms()
    env = combined_indices(bell, indices)
    group = forms["groups"][bell]
    if cu not in forms["gate_rows"][group]:
        raise ValueError(f"no encoded rows for conjugated gate {cu!r}")
    rows = forms["gate_rows"][group][cu]
    phases = forms["index_phases"][bell]
    out = []
    for which in ("q", "p"):
        w = PhasedWord(ONE, PauliWord.identity(1))
        for atom in phases[which] + rows[which]["atoms"]:
            w = PhasedWord(w.phase * _atom_phase(atom, env), w.word)
        for letter, sym in rows[which]["letters"]:
            if env[sym] & 1:
                w = w * PhasedWord(ONE, PauliWord.single(1, 1, letter))
        out.append(w.to_matrix())
    return tuple(out)


# --- diffs against the implementation ---


def _record(rec_id: str, expected: str, actual: str) -> dict:
    return {"id": rec_id, "expected": expected, "actual": actual, "ok": expected == actual}


def diff_family(family: str, n: int) -> list:
    golden = family_table(family, n)
    gate = family_gate(family, n)
    records = []
    for g, res in conjugation_table(gate):
        actual = str(res.word) if res.is_pauli else "<non-Pauli residue>"
        records.append(_record(f"{family}/n{n}/{g}", golden[str(g)], actual))
    return records


def diff_two_qubit(name: str) -> list:
    golden = two_qubit_table(name)
    records = []
    for g, res in conjugation_table(make_gate(name)):
        actual = str(res.word) if res.is_pauli else "<non-Pauli residue>"
        records.append(_record(f"{name}/{g}", golden[str(g)], actual))
    return records


def diff_operator_expressions(name: str) -> list:
    golden = operator_expression_table(name)
    gate = make_gate(name)
    n = gate.qubits
    records = []
    for g, res in conjugation_table(gate):
        tokens = golden[str(g)]
        want = expression_matrix(tokens, n)
        got = res.word.to_matrix() if res.is_pauli else res.residue
        expected = " ".join(tokens)
        if got == want:
            actual = expected
        else:
            actual = str(res.word) if res.is_pauli else "<non-Pauli residue>"
        records.append(_record(f"{name}/{g}", expected, actual))
    return records


def diff_correction_forms(bell=None) -> list:
    forms = correction_forms()
    names = [bell] if bell is not None else list(forms)
    records = []
    for name in names:
        if name not in forms:
            raise ValueError(f"no encoded correction forms for {name!r}")
        table = derive_corrections(make_gate(name))
        for i, j in product((0, 1), repeat=2):
            want = pauli_form_word(forms[name]["u"], {"i": i, "j": j})
            records.append(
                _record(
                    f"{name}/u/{i}{j}",
                    render_phased_word(want),
                    render_phased_word(table.u[i][j]),
                )
            )
        for k, l in product((0, 1), repeat=2):
            want = pauli_form_word(forms[name]["v"], {"k": k, "l": l})
            records.append(
                _record(
                    f"{name}/v/{k}{l}",
                    render_phased_word(want),
                    render_phased_word(table.v[k][l]),
                )
            )
    return records


def diff_single_gate(conjugator: str, bell=None) -> list:
    rows = single_gate_forms(conjugator)
    names = [bell] if bell is not None else list(rows)
    u = make_gate(conjugator)
    records = []
    for name in names:
        if name not in rows:
            raise ValueError(f"no encoded rows for {name!r} under {conjugator}")
        table = single_gate_table(make_gate(name), u)
        for which, grid, keys in (("r", table.r, ("i", "j")), ("s", table.s, ("k", "l"))):
            form = rows[name][which]
            text = form_text(form)
            for a, b in product((0, 1), repeat=2):
                want = gate_form_matrix(form, {keys[0]: a, keys[1]: b})
                ok = grid[a][b].matrix == want
                records.append(
                    _record(
                        f"{conjugator}/{name}/{which}/{a}{b}",
                        text,
                        text if ok else "<differs>",
                    )
                )
    return records


def diff_two_gate(bell: str, cu: str) -> list:
    entries = two_gate_table(make_gate(bell), make_gate(cu))
    records = []
    for e in entries:
        q_pred, p_pred = two_gate_prediction(bell, cu, e.indices)
        ok = tensor(q_pred, p_pred) == tensor(e.q, e.p)
        qw = phased_pauli_from_matrix(q_pred)
        pw = phased_pauli_from_matrix(p_pred)
        expected = f"{render_phased_word(qw)} (x) {render_phased_word(pw)}"
        if ok:
            actual = expected
        else:
            actual = " (x) ".join(
                render_phased_word(w) if w is not None else "<amorphous>"
                for w in (e.q_word, e.p_word)
            )
        tag = "".join(str(b) for b in e.indices)
        records.append(_record(f"{bell}/{cu}/{tag}", expected, actual))
    return records
