from __future__ import annotations

import itertools

import pytest

from invquot.quotcone import (
    HilbertFunction,
    exactness_defect,
    graded_module,
    hilbert,
    hilbert_degree,
    n_prime_split,
    partial_root_sums,
    r_of_mu,
    tangent_upper_bound,
    verify_lemma_211,
    verify_lemma_212,
    verify_lemma_214,
    verify_lemma_q1,
    verify_lemma_q2,
    verify_s2,
)
from invquot.rootsys import all_types, build, dominance_leq
from invquot.tensor import decompose
from invquot.weyl import dual_weight


def box(rank, top):
    return list(itertools.product(range(top + 1), repeat=rank))


def vec(name):
    rs = build(name)
    return rs, (2,) if name == "A1" else rs.fundamental(1)


def test_graded_examples():
    b2 = build("B2")
    assert graded_module(b2, (1, 0), (0, 1), "N", 1)[1] == {(0, 1): 1}
    for lam, mu in [((1, 0), (0, 1)), ((0, 1), (2, 2)), ((0, 0), (1, 1))]:
        assert graded_module(b2, lam, mu, "N", 3)[0] == {}
    z = graded_module(b2, (0, 0), (1, 1), "N", 4)
    assert all(z[m] == {} for m in range(5))
    assert all(graded_module(b2, (0, 0), (1, 1), "Q", 4)[m] == {(1, 1): 1} for m in range(5))


def test_graded_module_per_degree_shape():
    rs = build("G2")
    lam, mu = (1, 0), (0, 1)
    a = graded_module(rs, lam, mu, "a", 3)
    assert a.which == "A" and a.degree_bound == 3
    assert [a[m] for m in range(4)] == [{(m, 0): 1} for m in range(4)]
    m_mod = graded_module(rs, lam, mu, "M", 3)
    assert all(m_mod[m] == decompose(rs, (m, 0), mu) for m in range(4))
    with pytest.raises(ValueError):
        graded_module(rs, lam, mu, "X", 3)
    with pytest.raises(ValueError):
        graded_module(rs, lam, mu, "N", -1)


@pytest.mark.parametrize("name", ["A1", "A2", "B2", "C3", "B3", "G2"])
def test_exactness_and_strict_below(name):
    rs = build(name)
    top = 1 if rs.rank == 3 else 2
    for lam in box(rs.rank, top):
        for mu in box(rs.rank, top):
            bound = 2 if rs.rank == 3 else 4
            assert all(d == {} for d in exactness_defect(rs, lam, mu, bound))
            n = graded_module(rs, lam, mu, "N", bound)
            for m in range(bound + 1):
                cartan = tuple(m * a + b for a, b in zip(lam, mu))
                for nu in n[m]:
                    assert nu != cartan and dominance_leq(rs, nu, cartan)


def test_hilbert_examples():
    b2 = build("B2")
    h = HilbertFunction(b2, (1, 0), (0, 1))
    assert h((2, 1)) == 1 and hilbert_degree(h, (2, 1)) == 2
    assert h((1, 0)) == 0 and hilbert_degree(h, (1, 0)) is None
    assert h(dual_weight(b2, (0, 1))) == 1
    with pytest.raises(ValueError):
        h((-1, 0))


def test_hilbert_zero_lambda():
    h = HilbertFunction(build("A2"), (0, 0), (1, 2))
    assert h((2, 1)) == 1 and hilbert_degree(h, (2, 1)) == 0
    assert h((1, 2)) == 0


@pytest.mark.parametrize("name", ["A2", "A3", "D4", "E6"])
def test_q_matches_hilbert(name):
    # types with a non-trivial diagram flip, so the dual actually matters
    rs = build(name)
    lam = rs.fundamental(1)
    mu = rs.fundamental(2)
    h = HilbertFunction(rs, lam, mu)
    q = graded_module(rs, lam, mu, "Q", 4)
    hits = set()
    for m in range(5):
        ((nu, c),) = q[m].items()
        assert c == 1
        assert h(dual_weight(rs, nu)) == 1
        assert hilbert_degree(h, dual_weight(rs, nu)) == m
        hits.add(dual_weight(rs, nu))
    # any hit inside the box has degree <= 3, so it was listed above
    for nu in box(rs.rank, 3):
        assert h(nu) == (nu in hits)


def test_hilbert_support_exact_a2():
    rs = build("A2")
    h = HilbertFunction(rs, (1, 0), (1, 1))
    # lam^* = (0, 1), mu^* = (1, 1): support is {(1, 1 + m)}
    assert [nu for nu in box(2, 4) if h(nu)] == [(1, 1), (1, 2), (1, 3), (1, 4)]


def test_n_prime_split_examples():
    b2 = build("B2")
    assert n_prime_split(b2, (1, 0), (0, 1), 1) == (1, {})
    assert n_prime_split(b2, (1, 0), (1, 0), 1)[0] == 0
    assert n_prime_split(build("B3"), (1, 0, 0), (0, 0, 1), 2)[0] == 1
    with pytest.raises(ValueError):
        n_prime_split(build("C3"), (1, 0, 0), (0, 0, 1), 1)
    with pytest.raises(ValueError):
        n_prime_split(b2, (0, 1), (0, 1), 1)
    with pytest.raises(ValueError):
        n_prime_split(b2, (1, 0), (0, 1), 0)


@pytest.mark.parametrize("name", ["A1", "B2", "B3", "B4"])
def test_marker_is_one_when_mu_n_positive(name):
    rs, lam = vec(name)
    top = 1 if rs.rank == 4 else 2
    for mu in box(rs.rank, top):
        if mu[-1] < 1:
            continue
        for m in range(1, 5 if rs.rank < 4 else 3):
            assert n_prime_split(rs, lam, mu, m)[0] == 1, (mu, m)


def test_tangent_examples():
    b2 = build("B2")
    assert tangent_upper_bound(b2, (1, 0), (0, 1)) == 1
    assert tangent_upper_bound(b2, (1, 0), (1, 0)) == 0
    assert tangent_upper_bound(build("A2"), (1, 0), (1, 1)) == 0
    assert tangent_upper_bound(b2, (0, 0), (1, 1)) == 0


def test_tangent_bound_is_not_exact_outside_type_b():
    # adjoint mu in A2 gives a bound of 2; the actual tangent space is zero
    assert tangent_upper_bound(build("A2"), (1, 1), (1, 1)) == 2


def test_tangent_products():
    b2, a1 = build("B2"), build("A1")
    assert tangent_upper_bound([b2, a1], [(1, 0), (0,)], [(0, 1), (1,)]) == 1
    assert tangent_upper_bound(["B2", "A1"], [(1, 0), (0,)], [(1, 0), (3,)]) == 0
    with pytest.raises(ValueError):
        tangent_upper_bound([b2], [(1, 0), (0,)], [(0, 1)])


@pytest.mark.parametrize("name", ["A1", "B2", "B3", "B4"])
def test_tangent_in_vector_context(name):
    rs, lam = vec(name)
    top = 1 if rs.rank == 4 else 2
    for mu in box(rs.rank, top):
        assert tangent_upper_bound(rs, lam, mu) == (1 if mu[-1] >= 1 else 0)


def test_partial_root_sums_b2():
    assert partial_root_sums(build("B2")) == [(0, 0), (2, -2), (1, 0)]


def test_components_above_floor_examples():
    b2 = build("B2")
    rep = verify_lemma_212(b2, (0, 1), 1)
    assert rep.ok
    assert rep.details["witnesses"] == [{"i": 0, "nu": [1, 1]}, {"i": 2, "nu": [0, 1]}]
    assert verify_lemma_212(b2, (1, 0), 1).ok
    assert verify_lemma_212(build("B3"), (0, 0, 1), 2).ok
    with pytest.raises(ValueError):
        verify_lemma_212(b2, (0, 1), 0)


@pytest.mark.parametrize("name", ["A1", "B2", "B3"])
def test_components_above_floor_sweep(name):
    rs, _ = vec(name)
    for mu in box(rs.rank, 1):
        for m in (1, 2, 3):
            rep = verify_lemma_212(rs, mu, m)
            assert rep.ok, rep.details


def test_r_of_mu_examples():
    assert r_of_mu(build("B3"), (0, 1, 1)) == 2
    assert r_of_mu(build("B2"), (1, 2)) == 0
    assert r_of_mu(build("B2"), (0, 1)) == 2
    with pytest.raises(ValueError):
        r_of_mu(build("B2"), (1, 0))
    with pytest.raises(ValueError):
        r_of_mu(build("D4"), (0, 0, 0, 1))


def test_q2_examples():
    cases = [("B2", (0, 1), 0), ("B2", (1, 2), 2), ("B3", (0, 1, 1), 1)]
    for name, mu, both in cases:
        rep = verify_lemma_q2(build(name), mu)
        assert rep.ok
        assert rep.details["multiplicity"] == rep.details["n_minus_r"] == both


def test_other_verifiers():
    b3 = build("B3")
    assert verify_lemma_211(b3, (1, 0, 1)).details["multiplicity"] == 1
    assert verify_lemma_211(b3, (1, 1, 0)).details["multiplicity"] == 0
    assert verify_lemma_214(b3, (0, 1, 1), 3).details["marker_multiplicities"] == [1, 1, 1]
    with pytest.raises(ValueError):
        verify_lemma_214(b3, (0, 1, 0))
    q1 = verify_lemma_q1(b3, (1, 1, 1))
    # nu - e_3 = (1, 2, -1) is not dominant, the other five are
    assert q1.ok and len(q1.details["cases"]) == 5
    s2 = verify_s2(build("B2"))
    assert s2.ok and s2.details["dim_v2lam"] == 14
    assert set(s2.as_dict()) == {"lemma", "ok", "inputs", "details"}


def test_verifiers_reject_wrong_type():
    for f in (verify_lemma_211, verify_lemma_q1, verify_lemma_q2):
        with pytest.raises(ValueError):
            f(build("C3"), (0, 0, 1))
