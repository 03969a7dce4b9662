"""GHZ/Bell states, stabilizer checks, ordinal bookkeeping and factorization."""

import random

import pytest

from bellgate.gates import catalog, make_gate, family_gate
from bellgate.ghz import (
    GhzLabel,
    NotATransform,
    TransformClass,
    TransformFactorization,
    apply_word,
    bell_state,
    classify,
    factor_transform,
    ghz_state,
    index_j,
    index_k,
    j_to_k,
    multicopy_x_check,
    verify_stabilizers,
)
from bellgate.linalg import DenseMatrix, StateVector, tensor
from bellgate.pauli import PauliWord
from bellgate.ring import ONE, RingScalar, i_power, omega_power

I2 = DenseMatrix.identity(2)
ZERO = RingScalar()
HALF_AMP = RingScalar(1, k=1)


def _all_labels(n):
    return [GhzLabel.from_ordinal(n, j) for j in range(1, (1 << n) + 1)]


# --- labels and ordinals ---------------------------------------------------


def test_label_validation():
    with pytest.raises(ValueError):
        GhzLabel(2, (0, 2))
    with pytest.raises(ValueError):
        GhzLabel(2, (0,))
    with pytest.raises(ValueError):
        GhzLabel(0, ())
    with pytest.raises(ValueError):
        GhzLabel.from_ordinal(2, 5)
    with pytest.raises(ValueError):
        GhzLabel.from_ordinal(2, 0)


def test_ordinal_round_trip():
    for n in (1, 2, 3, 4):
        for j in range(1, (1 << n) + 1):
            assert index_j(GhzLabel.from_ordinal(n, j)) == j


def test_known_ordinal_values():
    assert index_j(GhzLabel(3, (1, 0, 0))) == 5
    assert index_k(GhzLabel(3, (1, 0, 0))) == 8
    assert j_to_k(5, 3) == 8
    assert j_to_k(3, 2) == 4
    with pytest.raises(ValueError):
        j_to_k(0, 2)
    with pytest.raises(ValueError):
        j_to_k(5, 2)


def test_ordinal_relabeling_lists():
    assert [j_to_k(j, 2) for j in range(1, 5)] == [1, 2, 4, 3]
    assert [j_to_k(j, 3) for j in range(1, 9)] == [1, 2, 3, 4, 8, 7, 6, 5]


def test_relabeling_is_an_involution_matching_the_bitwise_form():
    for n in (1, 2, 3, 4):
        for label in _all_labels(n):
            j = index_j(label)
            assert j_to_k(j, n) == index_k(label)
            assert j_to_k(j_to_k(j, n), n) == j


# --- states ----------------------------------------------------------------


def test_ghz_state_examples():
    amps = ghz_state(GhzLabel(3, (0, 0, 0))).amplitudes()
    assert amps[0] == HALF_AMP and amps[7] == HALF_AMP
    assert all(a == ZERO for a in amps[1:7])

    amps = ghz_state(GhzLabel(3, (1, 1, 1))).amplitudes()
    assert amps[3] == HALF_AMP and amps[4] == -HALF_AMP
    assert all(amps[i] == ZERO for i in (0, 1, 2, 5, 6, 7))


def test_bell_state_values():
    assert bell_state(1, 0).amplitudes() == [HALF_AMP, ZERO, ZERO, -HALF_AMP]
    assert bell_state(0, 1).amplitudes() == [ZERO, HALF_AMP, HALF_AMP, ZERO]
    from bellgate.gates import bell_amplitudes

    for k in (0, 1):
        for l in (0, 1):
            assert bell_state(k, l) == bell_amplitudes(k, l)


def test_ghz_basis_is_orthonormal():
    for n in (2, 3):
        basis = [ghz_state(lab) for lab in _all_labels(n)]
        for a, va in enumerate(basis):
            for b, vb in enumerate(basis):
                assert va.inner(vb) == (ONE if a == b else ZERO)


def test_bell_states_arise_from_transposed_corrections():
    """bell(k,l) = (W^T x I) bell(0,0) with W = X^l Z^k."""
    core = bell_state(0, 0)
    for k in (0, 1):
        for l in (0, 1):
            w = PauliWord(1, 0, l, k).to_matrix().transpose()
            assert tensor(w, I2).apply(core) == bell_state(k, l)


# --- word action helper ----------------------------------------------------


def test_apply_word_matches_matrix_action():
    rng = random.Random(3)
    for n in (1, 2, 3):
        dim = 1 << n
        states = [StateVector.basis(n, i) for i in range(dim)]
        mixed = states[0]
        for s in states[1:]:
            mixed = mixed + s * RingScalar(rng.randint(-3, 3), rng.randint(-2, 2))
        for _ in range(12):
            word = PauliWord(n, rng.randrange(4), rng.randrange(dim), rng.randrange(dim))
            for v in (states[rng.randrange(dim)], mixed):
                assert apply_word(word, v) == word.to_matrix().apply(v)
    with pytest.raises(ValueError):
        apply_word(PauliWord(2, 0, 1, 0), StateVector.basis(3, 0))


# --- stabilizer verification -----------------------------------------------


def test_stabilizers_hold_for_every_label():
    for n in (2, 3, 4):
        for label in _all_labels(n):
            assert verify_stabilizers(ghz_state(label), label)


def test_stabilizers_reject_wrong_label_and_state():
    good = ghz_state(GhzLabel(3, (0, 0, 0)))
    assert not verify_stabilizers(good, GhzLabel(3, (1, 0, 0)))
    assert not verify_stabilizers(good, GhzLabel(3, (0, 1, 0)))
    assert not verify_stabilizers(StateVector.basis(3, 0), GhzLabel(3, (0, 0, 0)))
    with pytest.raises(ValueError):
        verify_stabilizers(StateVector.basis(2, 0), GhzLabel(3, (0, 0, 0)))


def test_two_qubit_sign_convention():
    s = bell_state(1, 0)
    assert apply_word(PauliWord(2, 0, 0b11, 0), s) == s * RingScalar(-1)
    assert apply_word(PauliWord(2, 0, 0, 0b11), s) == s


# --- factorization ---------------------------------------------------------


_EXPECTED_FACTORS = {
    "CH": ((0, 1, 2, 3), (1, 1, 1, 1)),
    "B": ((2, 1, 3, 0), (1, 1, -1, 1)),
    "BPRIME": ((2, 3, 1, 0), (1, 1, 1, 1)),
    "Q": ((0, 1, 3, 2), (1, "i", 1, "i")),
    "R": ((0, 1, 3, 2), (1, "-i", -1, "-i")),
    "CHT": ((0, 1, 2, 3), (1, 1, "w", "w")),
    "BT": ((2, 1, 3, 0), (1, 1, "-w", "w")),
    "RT": ((0, 1, 3, 2), (1, "-i", "-w", "-iw")),
}

_UNIT = {
    1: ONE,
    -1: RingScalar(-1),
    "i": i_power(1),
    "-i": i_power(3),
    "w": omega_power(1),
    "-w": omega_power(5),
    "-iw": omega_power(3) * RingScalar(-1),
}


def test_two_qubit_factorizations_match_the_known_tables():
    for name, (perm, phases) in _EXPECTED_FACTORS.items():
        f = factor_transform(make_gate(name))
        assert f.perm == perm, name
        assert f.phases == tuple(_UNIT[p] for p in phases), name
        assert f.rebuild() == make_gate(name), name


def test_exponential_family_factorization_formula():
    for n in (2, 3, 4):
        f = factor_transform(family_gate("B_N", n))
        for j in range(1 << n):
            bits = [(j >> (n - 1 - t)) & 1 for t in range(n)]
            out = [bits[-1] ^ 1] + [bits[0] ^ bits[i] for i in range(1, n)]
            img = 0
            for b in out:
                img = (img << 1) | b
            assert f.perm[j] == img, (n, j)
            sign = -1 if bits[0] & (bits[-1] ^ 1) else 1
            assert f.phases[j] == RingScalar(sign), (n, j)


def test_shifted_family_factorization_formula():
    for n in (2, 3, 4):
        f = factor_transform(family_gate("BPRIME_N", n))
        g = factor_transform(family_gate("RPRIME_N", n))
        for j in range(1 << n):
            bits = [(j >> (n - 1 - t)) & 1 for t in range(n)]
            flipped = [bits[0] ^ 1] + [bits[0] ^ bits[i] for i in range(1, n)]
            kept = [bits[0]] + [bits[0] ^ bits[i] for i in range(1, n)]
            to_int = lambda bs: int("".join(map(str, bs)), 2)
            assert f.perm[j] == to_int(flipped), (n, j)
            assert g.perm[j] == to_int(kept), (n, j)
            assert f.phases[j] == ONE
            assert g.phases[j] == ONE


def test_columns_are_phased_ghz_states():
    for name in _EXPECTED_FACTORS:
        u = make_gate(name)
        f = factor_transform(u)
        for j in range(4):
            label = GhzLabel.from_ordinal(2, f.perm[j] + 1)
            assert u.column(j) == ghz_state(label) * f.phases[j], (name, j)


def test_factorizer_agrees_with_catalog_tags():
    for name, entry in catalog().items():
        if entry.arity == 2:
            try:
                factor_transform(entry.builder())
                ok = True
            except NotATransform:
                ok = False
            assert ok == ("bell_transform" in entry.tags), name
        elif entry.arity is None:
            factor_transform(entry.builder(3))  # every family factors
            assert "ghz_transform" in entry.tags, name


def test_factorizer_rejects_non_transforms():
    x1 = tensor(make_gate("X"), I2)
    with pytest.raises(NotATransform):
        factor_transform(x1)
    with pytest.raises(NotATransform):
        factor_transform(make_gate("CNOT"))
    with pytest.raises(NotATransform):
        factor_transform(make_gate("TOFFOLI"))
    with pytest.raises(ValueError):
        factor_transform(DenseMatrix.identity(3))


def test_factorization_round_trip_randomized():
    rng = random.Random(11)
    units = [omega_power(t) for t in range(8)]
    for _ in range(25):
        n = rng.choice((2, 3))
        dim = 1 << n
        perm = list(range(dim))
        rng.shuffle(perm)
        phases = tuple(rng.choice(units) for _ in range(dim))
        f0 = TransformFactorization(n, tuple(perm), phases)
        assert factor_transform(f0.rebuild()) == f0


# --- classification --------------------------------------------------------


def test_classification_table():
    expected = {
        "CH": (True, False, False),
        "CNOT": (True, False, False),
        "B": (True, True, True),
        "BPRIME": (True, True, True),
        "Q": (True, True, True),
        "R": (True, True, False),
        "CHT": (False, False, False),
        "BT": (False, True, True),
        "RT": (False, True, False),
    }
    for name, (cliff, parity, match) in expected.items():
        assert classify(make_gate(name)) == TransformClass(cliff, parity, match), name


def test_classification_outside_two_qubits_has_no_parity_fields():
    assert classify(make_gate("TOFFOLI")) == TransformClass(False, None, None)
    assert classify(make_gate("H")) == TransformClass(True, None, None)


# --- multi-copy X property -------------------------------------------------


def test_conjugated_z_collapses_to_x_string():
    for n in (2, 3, 4):
        assert multicopy_x_check(family_gate("CH_N", n), 1) == 0
        assert multicopy_x_check(family_gate("B_N", n), n) == 1
        assert multicopy_x_check(family_gate("BPRIME_N", n), 1) == 1
        assert multicopy_x_check(family_gate("RPRIME_N", n), 1) == 0
        assert multicopy_x_check(family_gate("CH_N", n), 2) is None
    assert multicopy_x_check(make_gate("R"), 1) == 0
    assert multicopy_x_check(make_gate("Q"), 1) == 0
    assert multicopy_x_check(make_gate("CNOT"), 1) is None
    with pytest.raises(ValueError):
        multicopy_x_check(make_gate("CNOT"), 3)
