import cmath
import math
import random

import numpy as np
import pytest

from zwcalc import ring, term
from zwcalc.semantics import interpret, map_equal
from zwcalc.qudit import (
    QBinomialTable,
    QParams,
    QuditError,
    annihilation_matrix,
    antipode_matrix,
    antipode_term,
    check_antipode,
    check_bialgebra,
    check_commutation,
    check_q_vandermonde,
    classical_vandermonde,
    creation_matrix,
    merge_matrix,
    q_binom,
    q_factorial,
    q_int,
    qudit_matrix,
    qudit_universal_nf,
    w_matrix,
    x_matrix,
)

TOL = 1e-9


def close(a, b, tol=TOL):
    return abs(a - b) <= tol


def test_qparams_validation():
    p = QParams(5)
    assert close(p.q ** 5, 1)
    with pytest.raises(QuditError):
        QParams(1)
    with pytest.raises(QuditError):
        QParams(3, tolerance=0.0)


def test_q_integers():
    p = QParams(4)
    assert close(q_int(0, p), 0)
    assert close(q_int(1, p), 1)
    assert close(q_int(4, p), 0)  # [d] vanishes
    for n in range(4, 9):
        assert close(q_factorial(n, p), 0)
    assert close(q_binom(2, 0, p), 1)
    assert close(q_binom(2, 2, p), 1)


def test_q_binom_value_at_d3():
    p = QParams(3)
    assert close(q_binom(2, 1, p), cmath.exp(1j * cmath.pi / 3))
    with pytest.raises(QuditError):
        q_binom(2, 3, p)


def test_table_caching_and_sqrt():
    p = QParams(3)
    tab = QBinomialTable(p)
    assert close(tab.ints[3], 0)
    assert close(tab.factorials[0], 1)
    assert close(tab.sqrt_binomials[2][1], cmath.exp(1j * cmath.pi / 6))


@pytest.mark.parametrize("d", [2, 3, 4, 5])
def test_vandermonde_all_small_dimensions(d):
    p = QParams(d)
    for n in range(d):
        for j in range(n + 1):
            for k in range(n + 1):
                assert check_q_vandermonde(p, n, j, k)


def test_vandermonde_classical():
    assert classical_vandermonde(6, 3, 4)
    for n in range(9):
        for j in range(n + 1):
            for k in range(n + 1):
                assert classical_vandermonde(n, j, k)


def test_split_tables_match_known_values():
    w3 = w_matrix(QParams(3))
    assert close(w3[0 * 3 + 2, 2], 1)
    assert close(w3[1 * 3 + 1, 2], cmath.exp(1j * cmath.pi / 6))
    assert close(w3[2 * 3 + 0, 2], 1)
    w4 = w_matrix(QParams(4))
    assert close(w4[1 * 4 + 1, 2], 2 ** 0.25 * cmath.exp(1j * cmath.pi / 8))
    assert close(w4[1 * 4 + 2, 3], cmath.exp(1j * cmath.pi / 4))
    assert close(w4[2 * 4 + 1, 3], cmath.exp(1j * cmath.pi / 4))
    # d = 2 split is the familiar beam splitter
    w2 = w_matrix(QParams(2))
    assert close(w2[0 * 2 + 1, 1], 1) and close(w2[1 * 2 + 0, 1], 1)
    assert close(w2[1 * 2 + 1, 1], 0)


def test_antipode_values():
    t3 = antipode_matrix(QParams(3))
    assert close(t3[1, 1], -1)
    assert close(t3[2, 2], cmath.exp(2j * cmath.pi / 3))
    t4 = antipode_matrix(QParams(4))
    assert close(t4[2, 2], 1j)
    # |3> picks up -q^3 = i; this also closes the Hopf loop (see below)
    assert close(t4[3, 3], 1j)
    assert check_antipode(QParams(4)).passed


def test_antipode_diagram_matches_formula():
    for d in (2, 3, 4):
        p = QParams(d)
        m = interpret(antipode_term(d), p.ring(), d)
        t = antipode_matrix(p)
        for i in range(d):
            got = m.entries.get((str(i), str(i)))
            assert got is not None and close(complex(got.value), t[i, i])


def test_antipode_squared():
    p2 = QParams(2)
    assert np.allclose(antipode_matrix(p2) @ antipode_matrix(p2), np.eye(2))
    for d in (3, 4, 5):
        p = QParams(d)
        sq = antipode_matrix(p) @ antipode_matrix(p)
        expect = np.diag([p.q ** (n * (n - 1)) for n in range(d)])
        assert np.allclose(sq, expect, atol=TOL)
        assert not np.allclose(sq, np.eye(d), atol=TOL)


@pytest.mark.parametrize("d", [2, 3, 4, 5, 6])
def test_crossing_order_and_inverse(d):
    # the crossing is swap . diag(q^(jk)); the diagonal part has order d
    # and the permutation part order 2, so x^d is the identity for even d
    # and the plain swap for odd d, with x^(2d) always the identity
    p = QParams(d)
    x = x_matrix(p)
    xd = np.linalg.matrix_power(x, d)
    swap = np.zeros((d * d, d * d))
    for a in range(d):
        for b in range(d):
            swap[b * d + a, a * d + b] = 1
    if d % 2 == 0:
        assert np.allclose(xd, np.eye(d * d), atol=TOL)
        assert np.allclose(np.linalg.matrix_power(x, d - 1), x.conj().T, atol=TOL)
    else:
        assert np.allclose(xd, swap, atol=TOL)
        assert np.allclose(np.linalg.matrix_power(x, 2 * d), np.eye(d * d), atol=TOL)
        assert np.allclose(np.linalg.matrix_power(x, 2 * d - 1), x.conj().T, atol=TOL)
    prod = interpret(term.X >> term.XINV, p.ring(), d)
    assert map_equal(prod, interpret(term.identity(2), p.ring(), d))
    assert qudit_matrix(term.XINV, p).entries  # sanity


@pytest.mark.parametrize("d", [2, 3, 4, 5, 6])
def test_comonoid_laws(d):
    p = QParams(d)
    W = w_matrix(p)
    Id = np.eye(d)
    coassoc_l = np.kron(W, Id) @ W
    coassoc_r = np.kron(Id, W) @ W
    assert np.allclose(coassoc_l, coassoc_r, atol=TOL)
    swap = np.zeros((d * d, d * d))
    for a in range(d):
        for b in range(d):
            swap[b * d + a, a * d + b] = 1
    assert np.allclose(swap @ W, W, atol=TOL)  # cocommutative with plain swap
    counit = np.zeros((1, d))
    counit[0, 0] = 1
    assert np.allclose(np.kron(counit, Id) @ W, Id, atol=TOL)
    assert np.allclose(np.kron(Id, counit) @ W, Id, atol=TOL)


@pytest.mark.parametrize("d", [2, 3, 4, 5, 6])
def test_bialgebra(d):
    rep = check_bialgebra(QParams(d))
    assert rep.passed, str(rep)


def test_bialgebra_negative_control():
    p = QParams(3)
    w = w_matrix(p).copy()
    w[1 * 3 + 1, 2] *= 1.01  # scale a single coefficient
    rep = check_bialgebra(p, w_override=w)
    assert not rep.passed


@pytest.mark.parametrize("d", [2, 3, 4, 5, 6])
def test_commutation(d):
    p = QParams(d)
    rep = check_commutation(p)
    assert rep.passed, str(rep)
    a, adag = annihilation_matrix(p), creation_matrix(p)
    if d == 2:
        assert np.allclose(a @ adag, np.eye(2) - adag @ a, atol=TOL)


def test_bosonic_truncation():
    # q = 1 ladder on 8 levels: commutator is the identity away from the top
    n = 8
    adag = np.zeros((n, n))
    for lvl in range(n - 1):
        adag[lvl + 1, lvl] = math.sqrt(lvl + 1)
    a = adag.T
    comm = a @ adag - adag @ a
    assert np.allclose(comm[: n - 1, : n - 1], np.eye(n - 1), atol=TOL)
    assert check_commutation(QParams(5), bosonic_levels=8).passed


def test_merge_is_transpose_of_split():
    for d in (2, 3, 4, 5):
        p = QParams(d)
        assert np.allclose(merge_matrix(p), w_matrix(p).T, atol=TOL)


def test_spider_entries_match_dense_matrices():
    # two routes to the same maps: combinatorial tree entries vs the
    # dense split/merge/crossing formulas
    from zwcalc.qudit import dense_to_sparse
    for d in (2, 3, 4, 5):
        p = QParams(d)
        assert map_equal(qudit_matrix(term.wspider(1, 2), p),
                         dense_to_sparse(w_matrix(p), 1, 2, p))
        assert map_equal(qudit_matrix(term.wspider(2, 1), p),
                         dense_to_sparse(merge_matrix(p), 2, 1, p))
        assert map_equal(qudit_matrix(term.X, p),
                         dense_to_sparse(x_matrix(p), 2, 2, p))


def test_qudit_spider_entries():
    p = QParams(3)
    m = qudit_matrix(term.wspider(2, 1), p)
    got = m.entries[("2", "11")]
    assert close(complex(got.value), cmath.sqrt(q_int(2, p) * q_int(1, p)))
    z = qudit_matrix(term.zspider(1, 1, ring.complex_value(p.ring(), 2 + 0j)), p)
    for lvl in range(3):
        assert close(complex(z.entries[(str(lvl), str(lvl))].value), 2 ** lvl)
    disc = qudit_matrix(term.zspider(1, 0, ring.one(p.ring())), p)
    c2 = cmath.sqrt(q_factorial(2, p))
    assert close(complex(disc.entries[("", "2")].value), 1 / c2)


def test_universal_example_from_two_rows():
    p = QParams(3)
    R = p.ring()
    one = ring.one(R)
    state = interpret(term.parse("ket(0) * ket(1)", R), R, 3)
    entries = {("01", ""): one, ("22", ""): one}
    from zwcalc.semantics import make_map
    state = make_map(R, 3, 0, 2, entries)
    t, nf = qudit_universal_nf(state, p)
    assert [w for _, w in nf.rows] == ["01", "22"]
    rebuilt = interpret(t, R, 3)
    assert map_equal(rebuilt, state)
    # adjusted labels: row |22> is scaled by 1/[2]! once per doubled leg
    labels = [g.gen.label for g in _leaves(t) if g.gen.kind == "z"]
    lam = [complex(l.value) for l in labels]
    assert close(lam[0], 1)
    assert close(lam[1], 1 / (q_factorial(2, p)))


def _leaves(t):
    from zwcalc.term import Gen, Par, Seq
    if isinstance(t, Gen):
        return [t]
    if isinstance(t, Seq):
        return _leaves(t.first) + _leaves(t.then)
    if isinstance(t, Par):
        return _leaves(t.left) + _leaves(t.right)
    return []


def test_universal_zero_state():
    p = QParams(3)
    from zwcalc.semantics import make_map
    state = make_map(p.ring(), 3, 0, 2, {})
    t, nf = qudit_universal_nf(state, p)
    assert nf.is_zero()
    assert interpret(t, p.ring(), 3).is_zero()


def test_universal_at_d2_reduces_to_qubit_shape():
    p = QParams(2)
    R = p.ring()
    from zwcalc.semantics import make_map
    state = make_map(R, 2, 0, 2, {
        ("01", ""): ring.complex_value(R, 2), ("10", ""): ring.complex_value(R, -1)})
    t, nf = qudit_universal_nf(state, p)
    # multiplicities are 0/1, so no sqrt adjustment happens
    labels = [complex(g.gen.label.value) for g in _leaves(t) if g.gen.kind == "z"]
    assert close(labels[0], 2) and close(labels[1], -1)
    assert map_equal(interpret(t, R, 2), state)


def test_universal_survives_branch_cuts():
    # at d = 6 the merge-tree coefficient for five stacked particles is
    # minus the principal sqrt of [5]!, so the label adjustment must invert
    # the tree product, not the factorial root
    p = QParams(6)
    R = p.ring()
    from zwcalc.semantics import make_map
    state = make_map(R, 6, 0, 2, {
        ("55", ""): ring.complex_value(R, 1 + 0j),
        ("04", ""): ring.complex_value(R, -2 + 1j)})
    t, _ = qudit_universal_nf(state, p)
    assert map_equal(interpret(t, R, 6), state)


def test_universal_handles_wide_states():
    # many rows at d = 5 on 3 wires: thousands of crossing layers, which
    # must not hit the interpreter's or the term tree's recursion limits
    rng = random.Random(31)
    p = QParams(5)
    R = p.ring()
    from zwcalc.semantics import make_map
    entries = {}
    while len(entries) < 8:
        w = "".join(str(rng.randint(0, 4)) for _ in range(3))
        entries[(w, "")] = ring.complex_value(R, complex(rng.uniform(-3, 3), 1))
    state = make_map(R, 5, 0, 3, entries)
    t, _ = qudit_universal_nf(state, p)
    assert map_equal(interpret(t, R, 5), state)
    assert term.render(t)  # rendering long chains stays iterative


def test_universal_random_round_trips():
    rng = random.Random(123)
    p = QParams(3)
    R = p.ring()
    from zwcalc.semantics import make_map
    for _ in range(40):
        n = rng.choice((1, 2, 3))
        entries = {}
        for _ in range(rng.randint(1, 5)):
            w = "".join(str(rng.randint(0, 2)) for _ in range(n))
            entries[(w, "")] = ring.complex_value(
                R, complex(rng.uniform(-2, 2), rng.uniform(-2, 2)))
        state = make_map(R, 3, 0, n, entries)
        t, _ = qudit_universal_nf(state, p)
        assert map_equal(interpret(t, R, 3), state)
