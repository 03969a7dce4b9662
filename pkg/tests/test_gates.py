"""Catalog gates, their tag claims, parity structure, families and identities."""

import random

import numpy as np
import pytest

from bellgate.gates import (
    bell_amplitudes,
    catalog,
    embed,
    family_gate,
    generalized_bell,
    is_matchgate,
    make_gate,
    parity_blocks,
    parity_gate,
    permutation_gate,
    phase_gate,
    resolve_name,
    transposition_gate,
)
from bellgate.identities import (
    build_expression,
    identity_expectation,
    list_identities,
    verify_all_identities,
    verify_identity,
    yang_baxter_holds,
)
from bellgate.linalg import DenseMatrix, StateVector, equal_up_to_phase, tensor, tensor_all
from bellgate.pauli import is_clifford
from bellgate.ring import ONE, RingScalar, i_power, omega_power

I2 = DenseMatrix.identity(2)

_TOK = {0: (0, 0, 0, 0), 1: (1, 0, 0, 0), -1: (-1, 0, 0, 0), "i": (0, 0, 1, 0), "-i": (0, 0, -1, 0)}


def _m2(k, rows):
    return DenseMatrix.from_rows([[RingScalar(*_TOK[c], k) for c in row] for row in rows])


def _ghz_basis(n):
    """All 2^n states (|0 t> + (-1)^j1 |1 tbar>)/sqrt2 indexed by (j1, t)."""
    dim = 1 << n
    half = 1 << (n - 1)
    flip = half - 1
    out = []
    for lab in range(dim):
        j1, low = lab >> (n - 1), lab & flip
        comps = np.zeros((dim, 4), dtype=np.int64)
        comps[low, 0] = 1
        comps[half | (low ^ flip), 0] = -1 if j1 else 1
        out.append(StateVector(comps, 1))
    return out


def _phi(n, big_k):
    """Relabeled entangled-basis state: bits m of big_k-1 give the label
    (m1, m1+m2, .., m1+mn)."""
    m = big_k - 1
    m1 = m >> (n - 1)
    low = m & ((1 << (n - 1)) - 1)
    if m1:
        low ^= (1 << (n - 1)) - 1
    return _ghz_basis(n)[(m1 << (n - 1)) | low]


def _columns_all_bell(u):
    bells = [bell_amplitudes(k, l) for k in (0, 1) for l in (0, 1)]
    return all(
        any(equal_up_to_phase(u.column(j), b) is not None for b in bells)
        for j in range(4)
    )


# --- fixed catalog ---------------------------------------------------------


def test_every_fixed_gate_is_unitary():
    for name, entry in catalog().items():
        if entry.arity is not None:
            assert entry.builder().is_unitary(), name


def test_clifford_tags_match_conjugation_check():
    for name, entry in catalog().items():
        if entry.arity is None:
            continue
        assert ("clifford" in entry.tags) == bool(is_clifford(entry.builder())), name


def test_two_qubit_tags_match_structure_checks():
    for name, entry in catalog().items():
        if entry.arity != 2:
            # parity talk only makes sense for two-qubit gates
            assert not entry.tags & {"parity_preserving", "matchgate", "bell_transform", "yang_baxter"}, name
            continue
        m = entry.builder()
        cls = is_matchgate(m)
        assert ("matchgate" in entry.tags) == (cls == "matchgate"), name
        assert ("parity_preserving" in entry.tags) == (cls != "neither"), name
        assert ("bell_transform" in entry.tags) == _columns_all_bell(m), name
        if "yang_baxter" in entry.tags:
            assert yang_baxter_holds(m), name


def test_braid_relation_positive_and_negative_cases():
    for name in ("B", "B_INV", "BPRIME", "SWAP"):
        assert yang_baxter_holds(make_gate(name)), name
    for name in ("CNOT", "CZ", "CH", "Q", "R"):
        assert not yang_baxter_holds(make_gate(name)), name
    with pytest.raises(ValueError):
        yang_baxter_holds(make_gate("H"))


def test_inverse_entries_are_daggers():
    for name in ("CH", "B", "Q", "R"):
        assert make_gate(name + "_INV") == make_gate(name).dagger()
    assert make_gate("B_INV") == make_gate("B").transpose()


def test_hadamard_variant_conjugates_x():
    t = make_gate("T")
    assert make_gate("W") == t @ make_gate("X") @ t.dagger()


def test_t_scaled_transforms_append_a_t_on_the_first_qubit():
    t1 = embed(make_gate("T"), 2, [1])
    assert make_gate("CHT") == make_gate("CH") @ t1
    assert make_gate("BT") == make_gate("B") @ t1
    assert make_gate("RT") == make_gate("R") @ t1


def test_controlled_hadamard_product_form():
    assert make_gate("CH") == make_gate("CNOT") @ embed(make_gate("H"), 2, [1])


def test_three_qubit_permutation_gates_move_the_right_states():
    tof = make_gate("TOFFOLI")
    fred = make_gate("FREDKIN")
    for j in range(8):
        tj = 7 if j == 6 else 6 if j == 7 else j
        fj = 6 if j == 5 else 5 if j == 6 else j
        assert tof.column(j) == StateVector.basis(3, tj)
        assert fred.column(j) == StateVector.basis(3, fj)


def test_name_resolution_and_aliases():
    assert resolve_name("C_H") == "CH"
    assert resolve_name("b'") == "BPRIME"
    assert resolve_name("ccx") == "TOFFOLI"
    assert resolve_name("b-inv") == "B_INV"
    assert resolve_name("r'_n") == "RPRIME_N"
    with pytest.raises(ValueError):
        resolve_name("nothing")


def test_make_gate_argument_validation():
    with pytest.raises(ValueError):
        make_gate("B", 3)
    with pytest.raises(ValueError):
        make_gate("B_N")
    assert make_gate("B_N", 3) == family_gate("B_N", 3)
    assert catalog()["CH_N"].arity is None
    assert catalog()["CH_N"].builder(2) == make_gate("CH")


# --- parity structure ------------------------------------------------------


def test_named_gates_decompose_into_parity_blocks():
    a_b = _m2(1, [[1, 1], [-1, 1]])
    assert parity_gate(a_b, a_b.dagger()) == make_gate("B")
    assert parity_gate(a_b, a_b) == make_gate("BPRIME")

    h, s, z = make_gate("H"), make_gate("S"), make_gate("Z")
    a_q = h @ s
    assert parity_gate(a_q, (h @ s @ z) * i_power(1)) == make_gate("Q")

    a_r = h @ s.dagger()
    b_r = _m2(1, [["-i", -1], ["-i", 1]])
    assert parity_gate(a_r, b_r) == make_gate("R")


def test_parity_blocks_round_trip():
    blocks = parity_blocks(make_gate("B"))
    assert blocks is not None
    even, odd = blocks
    assert parity_gate(even, odd) == make_gate("B")
    assert parity_blocks(make_gate("CNOT")) is None
    with pytest.raises(ValueError):
        parity_blocks(make_gate("H"))


def test_parity_gate_is_a_block_homomorphism():
    rng = random.Random(7)
    pool = [make_gate(g) for g in ("H", "S", "T", "X", "Z")]

    def rand_u():
        m = I2
        for _ in range(rng.randint(1, 6)):
            m = m @ rng.choice(pool)
        return m

    for _ in range(10):
        a, b, c, d = rand_u(), rand_u(), rand_u(), rand_u()
        assert parity_gate(a, b) @ parity_gate(c, d) == parity_gate(a @ c, b @ d)
        assert parity_gate(a, b).dagger() == parity_gate(a.dagger(), b.dagger())


def test_parity_gate_rejects_bad_blocks():
    with pytest.raises(ValueError):
        parity_gate(_m2(0, [[1, 0], [0, 0]]), I2)
    with pytest.raises(ValueError):
        parity_gate(DenseMatrix.identity(4), DenseMatrix.identity(4))


def test_matchgate_classification():
    assert is_matchgate(make_gate("B")) == "matchgate"
    assert is_matchgate(make_gate("R")) == "parity_preserving_only"
    assert is_matchgate(make_gate("CZ")) == "parity_preserving_only"
    assert is_matchgate(make_gate("CH")) == "neither"
    assert is_matchgate(make_gate("CNOT")) == "neither"
    with pytest.raises(ValueError):
        is_matchgate(DenseMatrix.from_int_rows([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 0]]))


# --- permutation, phase and transposition gates ----------------------------


def test_permutation_gate_accepts_bit_functions():
    assert permutation_gate(2, lambda bits: (bits[1], bits[0])) == make_gate("SWAP")
    with pytest.raises(ValueError):
        permutation_gate(2, [0, 0, 1, 2])


def test_phase_gate_diagonal():
    assert phase_gate(1, [ONE, i_power(1)]) == make_gate("S")
    assert phase_gate(1, lambda j: omega_power(j)) == make_gate("T")
    with pytest.raises(ValueError):
        phase_gate(1, [ONE, RingScalar(2)])
    with pytest.raises(ValueError):
        phase_gate(1, [1, 1])


def test_transposition_gates_are_adjacent_swaps():
    for n, j in ((2, 1), (2, 3), (3, 4), (3, 7)):
        t = transposition_gate(n, j)
        assert t @ t == DenseMatrix.identity(1 << n)
        assert t.column(j - 1) == StateVector.basis(n, j)
        assert t.column(j) == StateVector.basis(n, j - 1)
    with pytest.raises(ValueError):
        transposition_gate(2, 0)
    with pytest.raises(ValueError):
        transposition_gate(2, 4)


# --- embedding -------------------------------------------------------------


def test_embed_matches_tensor_products():
    b = make_gate("B")
    x = make_gate("X")
    assert embed(b, 3, [1, 2]) == tensor(b, I2)
    assert embed(b, 3, [2, 3]) == tensor(I2, b)
    assert embed(x, 3, [2]) == tensor_all([I2, x, I2])


def test_embed_handles_reversed_and_split_sites():
    assert embed(make_gate("CNOT"), 2, [2, 1]) == permutation_gate(2, [0, 3, 2, 1])
    assert embed(make_gate("CNOT"), 3, [3, 1]) == permutation_gate(3, [0, 5, 2, 7, 4, 1, 6, 3])


def test_embed_validates_sites():
    with pytest.raises(ValueError):
        embed(make_gate("CNOT"), 2, [1, 1])
    with pytest.raises(ValueError):
        embed(make_gate("CNOT"), 2, [1])
    with pytest.raises(ValueError):
        embed(make_gate("CNOT"), 2, [1, 3])


# --- families --------------------------------------------------------------


def test_cascade_family_base_cases():
    assert family_gate("CH_N", 1) == make_gate("H")
    assert family_gate("CH_N", 2) == make_gate("CH")
    assert family_gate("B_N", 2) == make_gate("B")
    assert family_gate("BPRIME_N", 2) == make_gate("BPRIME")
    assert family_gate("RPRIME_N", 2) == embed(make_gate("Z"), 2, [1]) @ make_gate("BPRIME")
    assert family_gate("R_N", 2) == make_gate("R")


def test_cascade_columns_are_the_shared_entangled_basis():
    for n in (2, 3):
        m = family_gate("CH_N", n)
        basis = _ghz_basis(n)
        for j in range(1 << n):
            assert m.column(j) == basis[j]


def test_exponential_family_column_order():
    expected2 = [(4, 1), (2, 1), (3, -1), (1, 1)]
    expected3 = [(8, 1), (2, 1), (6, 1), (4, 1), (5, -1), (3, 1), (7, -1), (1, 1)]
    for n, table in ((2, expected2), (3, expected3)):
        m = family_gate("B_N", n)
        for j, (big_k, sign) in enumerate(table):
            assert m.column(j) == _phi(n, big_k) * RingScalar(sign), (n, j)


def test_shifted_exponential_family_reverses_the_relabeled_basis():
    for n in (2, 3):
        m = family_gate("BPRIME_N", n)
        dim = 1 << n
        for j in range(dim):
            assert m.column(j) == _phi(n, dim - j), (n, j)


def test_family_instances_are_clifford_and_entangling():
    for fam in ("CH_N", "B_N", "BPRIME_N", "RPRIME_N"):
        for n in (2, 3):
            m = family_gate(fam, n)
            assert bool(is_clifford(m)), (fam, n)
            basis = _ghz_basis(n)
            for j in range(1 << n):
                col = m.column(j)
                assert any(equal_up_to_phase(col, g) is not None for g in basis), (fam, n, j)


def test_phase_parameterized_family():
    m = family_gate("R_N", 3)
    assert m.is_unitary()
    basis = _ghz_basis(3)
    for j in range(8):
        assert any(equal_up_to_phase(m.column(j), g) is not None for g in basis)
    twisted = family_gate("R_N", 2, phase_fn=lambda label: omega_power(label))
    assert twisted.is_unitary()
    assert not bool(is_clifford(twisted))
    with pytest.raises(ValueError):
        family_gate("CH_N", 2, phase_fn=lambda label: ONE)
    with pytest.raises(ValueError):
        family_gate("B_N", 0)


# --- maximally entangled columns -------------------------------------------


def test_bell_amplitudes_exact_values():
    half = RingScalar(1, k=1)
    zero = RingScalar()
    assert list(bell_amplitudes(0, 0).amplitudes()) == [half, zero, zero, half]
    assert list(bell_amplitudes(1, 0).amplitudes()) == [half, zero, zero, -half]
    assert list(bell_amplitudes(0, 1).amplitudes()) == [zero, half, half, zero]
    for k in (0, 1):
        for l in (0, 1):
            assert bell_amplitudes(k, l).norm2() == ONE


def test_generalized_basis_change_defaults_to_the_plain_one():
    assert generalized_bell() == make_gate("CH")


def test_generalized_basis_change_reaches_the_magic_gate():
    m = generalized_bell(
        phase=lambda k, l: i_power(k ^ l),
        perm=lambda k, l: (k, k ^ l),
    )
    assert m == make_gate("Q")


def test_generalized_basis_change_validation():
    with pytest.raises(ValueError):
        generalized_bell(perm=lambda k, l: (0, 0))
    with pytest.raises(ValueError):
        generalized_bell(phase=lambda k, l: RingScalar(2))
    shear = DenseMatrix.from_int_rows([[1, 1], [0, 1]])
    with pytest.raises(ValueError):
        generalized_bell(s1=lambda k, l: shear)


# --- identity registry -----------------------------------------------------


def test_registered_identities_all_verify_as_expected():
    checks = verify_all_identities()
    assert len(checks) == len(list_identities())
    for chk in checks:
        assert chk.holds == chk.expected, chk


def test_braid_counterexample_is_registered_as_failing():
    chk = verify_identity("yang-baxter-cnot-counterexample")
    assert not chk.holds
    assert not chk.expected
    assert chk.phase_found is None
    assert not identity_expectation("yang-baxter-cnot-counterexample")
    assert identity_expectation("b-as-exponential")


def test_identity_lookup_errors():
    with pytest.raises(ValueError):
        verify_identity("no-such-identity")


def test_expression_builder_basics():
    assert build_expression([], 2) == DenseMatrix.identity(4)
    two_cnot = build_expression(
        [{"gate": "CNOT", "sites": [1, 2]}, {"gate": "CNOT", "sites": [1, 2]}], 2)
    assert two_cnot == DenseMatrix.identity(4)
    with pytest.raises(ValueError):
        build_expression([{"mystery": 1}], 2)
    with pytest.raises(ValueError):
        build_expression([{"gate": "B"}], 3)
