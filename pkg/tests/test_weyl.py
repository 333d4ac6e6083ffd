from __future__ import annotations

import random
from fractions import Fraction

import pytest

from invquot.rootsys import all_types, build, weyl_order
from invquot.weyl import (
    WeylCapExceeded,
    apply_word,
    dominantize,
    dual_weight,
    reflect,
    rho,
    rho_from_roots,
    weyl_elements,
)

from oracles import eps_positive_roots, weight_to_eps

ALL = all_types(8)
SMALL = [t for t in all_types(3)]


@pytest.mark.parametrize("t", ALL, ids=str)
def test_rho_is_half_sum(t):
    rs = build(t)
    assert rho(rs) == rho_from_roots(rs) == (1,) * rs.rank


def test_rho_b2_epsilon():
    half = tuple(sum(c) / 2 for c in zip(*eps_positive_roots("B", 2)))
    assert half == weight_to_eps("B", 2, (1, 1)) == (Fraction(3, 2), Fraction(1, 2))


def test_reflect_examples():
    rs = build("B2")
    assert reflect(rs, 2, (3, -1)) == (2, 1)
    assert reflect(rs, 1, (0, 0)) == (0, 0)
    for nu in [(3, -1), (0, 5), (-2, 7)]:
        for i in (1, 2):
            assert reflect(rs, i, reflect(rs, i, nu)) == nu


def test_dominantize_examples():
    rs = build("B2")
    d = dominantize(rs, (3, -1))
    assert (d.weight, d.sign) == ((2, 1), -1)
    assert dominantize(rs, (2, 3)).sign == 1
    assert dominantize(rs, (0, 3)).sign == 0
    assert dominantize(rs, (3, 0)).sign == 0


@pytest.mark.parametrize("t", all_types(5), ids=str)
def test_dominantize_orbit_property(t):
    rs = build(t)
    rng = random.Random(str(t))
    for _ in range(500):
        nu = tuple(rng.randint(-6, 6) for _ in range(rs.rank))
        d = dominantize(rs, nu)
        assert min(d.weight) >= 0
        assert apply_word(rs, d.word, nu) == d.weight
        if d.sign:
            assert d.sign == (-1) ** len(d.word)
            assert 0 not in d.weight


@pytest.mark.parametrize("t", SMALL, ids=str)
def test_sign_consistency(t):
    rs = build(t)
    rng = random.Random(7)
    elems = weyl_elements(rs)
    for _ in range(10):
        nu = tuple(rng.randint(1, 4) * rng.choice((1, -1)) for _ in range(rs.rank))
        base = dominantize(rs, nu)
        if base.sign == 0:
            continue
        for w in elems:
            moved = dominantize(rs, w(nu))
            assert moved.weight == base.weight
            assert moved.sign == w.sign * base.sign


@pytest.mark.parametrize("t", SMALL, ids=str)
def test_weyl_elements_matrices_match_words(t):
    rs = build(t)
    elems = weyl_elements(rs)
    assert len(elems) == weyl_order(t)
    assert len({w.matrix for w in elems}) == len(elems)
    probe = (3, 5, 7)[: rs.rank]
    for w in elems:
        assert w(probe) == apply_word(rs, w.word, probe)
        assert w.sign == (-1) ** len(w.word)


def test_weyl_counts():
    assert len(weyl_elements(build("A1"))) == 2
    assert len(weyl_elements(build("B2"))) == 8
    assert len(weyl_elements(build("B3"))) == 48


def test_weyl_cap_refusal(monkeypatch):
    with pytest.raises(WeylCapExceeded):
        weyl_elements(build("B3"), cap=47)
    with pytest.raises(WeylCapExceeded):
        weyl_elements(build("E8"))
    monkeypatch.setenv("INVQUOT_WEYL_CAP", "5")
    with pytest.raises(WeylCapExceeded):
        weyl_elements(build("B2"))


def test_dual_examples():
    assert dual_weight(build("A2"), (1, 0)) == (0, 1)
    assert dual_weight(build("A1"), (0,)) == (0,)
    b4 = build("B4")
    assert dual_weight(b4, (1, 2, 0, 3)) == (1, 2, 0, 3)
    with pytest.raises(ValueError):
        dual_weight(b4, (1, -1, 0, 0))


def test_dual_diagram_flips():
    assert dual_weight(build("A4"), (1, 2, 0, 3)) == (3, 0, 2, 1)
    assert dual_weight(build("D5"), (1, 0, 0, 2, 0)) == (1, 0, 0, 0, 2)
    assert dual_weight(build("D4"), (0, 0, 1, 2)) == (0, 0, 1, 2)
    assert dual_weight(build("E6"), (1, 0, 0, 0, 0, 0)) == (0, 0, 0, 0, 0, 1)


@pytest.mark.parametrize("t", ALL, ids=str)
def test_dual_involutive(t):
    rs = build(t)
    rng = random.Random(str(t) + "dual")
    for _ in range(200):
        lam = tuple(rng.randint(0, 5) for _ in range(rs.rank))
        assert dual_weight(rs, dual_weight(rs, lam)) == lam
