"""Irreducible modules V(lam): dimension, weight multiplicities, tensor multiplicities.

Characters are plain dicts ``{weight: multiplicity}`` with weights as int tuples.
"""
from __future__ import annotations

from collections import defaultdict
from functools import lru_cache
from typing import Dict, Sequence

from .rootsys import (
    RootSystem,
    SimpleType,
    Weight,
    build,
    is_dominant,
    root_coords_int,
)
from .weyl import dominantize, rho, weyl_elements

WeightMultiset = Dict[Weight, int]


def _require_dominant(rs: RootSystem, lam: Sequence[int]) -> Weight:
    lam = tuple(lam)
    if len(lam) != rs.rank:
        raise ValueError(f"dimension mismatch: {rs.type} has rank {rs.rank}, got {lam}")
    if not is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    return lam


def _root_data(rs: RootSystem):
    """Per positive root: (weight coords, form_int * root, scaled squared length)."""
    out = []
    f = rs.form_int
    n = rs.rank
    for a in rs.positive_weights:
        fa = tuple(sum(f[i][j] * a[j] for j in range(n)) for i in range(n))
        out.append((a, fa, sum(x * y for x, y in zip(a, fa))))
    return out


def dim(rs: RootSystem, lam: Sequence[int]) -> int:
    """Weyl dimension formula: product over positive roots of (lam+rho, a)/(rho, a)."""
    lam = _require_dominant(rs, lam)
    lr = [x + 1 for x in lam]
    num = den = 1
    for _, fa, _ in _root_data(rs):
        num *= sum(x * y for x, y in zip(lr, fa))
        den *= sum(fa)
    q, r = divmod(num, den)
    assert r == 0
    return q


def dominant_weights(rs: RootSystem, lam: Sequence[int]) -> list[Weight]:
    """Dominant weights of V(lam), ordered by height below lam (lam first)."""
    lam = _require_dominant(rs, lam)
    seen = {lam}
    todo = [lam]
    while todo:
        nu = todo.pop()
        for a in rs.positive_weights:
            low = tuple(x - y for x, y in zip(nu, a))
            if low not in seen and is_dominant(low):
                seen.add(low)
                todo.append(low)

    def depth(nu):
        return sum(root_coords_int(rs, tuple(x - y for x, y in zip(lam, nu))))

    return sorted(seen, key=lambda nu: (depth(nu), tuple(-x for x in nu)))


@lru_cache(maxsize=512)
def _dominant_character(t: SimpleType, lam: Weight) -> tuple[tuple[Weight, int], ...]:
    rs = build(t)
    dom = dominant_weights(rs, lam)
    roots = _root_data(rs)
    f = rs.form_int
    n = rs.rank

    def norm(v):
        return sum(v[i] * sum(f[i][j] * v[j] for j in range(n)) for i in range(n))

    top = norm([x + 1 for x in lam])
    mult = {lam: 1}
    chamber: dict[Weight, Weight] = {}

    def lookup(v: Weight) -> int:
        d = chamber.get(v)
        if d is None:
            d = chamber[v] = dominantize(rs, v).weight
        return mult.get(d, 0)

    for nu in dom[1:]:
        coef = top - norm([x + 1 for x in nu])
        total = 0
        for a, fa, aa in roots:
            pair = sum(x * y for x, y in zip(nu, fa))
            k = 1
            while True:
                v = tuple(x + k * y for x, y in zip(nu, a))
                m = lookup(v)
                if not m:
                    break  # root strings through a weight are unbroken
                total += (pair + k * aa) * m
                k += 1
        q, r = divmod(2 * total, coef)
        if r or q <= 0:
            raise ArithmeticError(f"Freudenthal step failed at {nu} in V{lam} of {t}")
        mult[nu] = q
    return tuple((nu, mult[nu]) for nu in dom)


def dominant_character(rs: RootSystem, lam: Sequence[int]) -> WeightMultiset:
    """Multiplicities of the dominant weights of V(lam)."""
    lam = _require_dominant(rs, lam)
    return dict(_dominant_character(rs.type, lam))


def orbit(rs: RootSystem, nu: Sequence[int]) -> list[Weight]:
    """Weyl orbit of ``nu``, sorted descending."""
    start = dominantize(rs, nu).weight
    simple = rs.simple_weights
    n = rs.rank
    seen = {start}
    todo = [start]
    while todo:
        v = todo.pop()
        for i in range(n):
            c = v[i]
            if c > 0:  # walking down from the dominant member reaches everything
                a = simple[i]
                w = tuple([v[k] - c * a[k] for k in range(n)])
                if w not in seen:
                    seen.add(w)
                    todo.append(w)
    return sorted(seen, reverse=True)


@lru_cache(maxsize=512)
def _weights(t: SimpleType, lam: Weight) -> dict:
    rs = build(t)
    out = {}
    for nu, m in _dominant_character(t, lam):
        for w in orbit(rs, nu):
            out[w] = m
    return out


def weights(rs: RootSystem, lam: Sequence[int]) -> WeightMultiset:
    """Full weight system of V(lam) with multiplicities (Freudenthal recursion)."""
    lam = _require_dominant(rs, lam)
    return dict(_weights(rs.type, lam))


def weights_view(rs: RootSystem, lam: Sequence[int]) -> dict:
    """Shared cached weight system; callers must not mutate it."""
    lam = _require_dominant(rs, lam)
    return _weights(rs.type, lam)


def mult_alternating(rs: RootSystem, lam: Sequence[int], mu: Sequence[int],
                     nu: Sequence[int], cap: int | None = None) -> int:
    """Multiplicity of V(nu) in V(lam) (x) V(mu) by reading off one coefficient.

    Multiply ch V(lam) by the Weyl numerator sum_w eps(w) e^{w(rho+mu)} and take
    the coefficient of e^{rho+nu}. Needs the whole Weyl group.
    """
    lam = _require_dominant(rs, lam)
    mu = _require_dominant(rs, mu)
    nu = _require_dominant(rs, nu)
    wts = weights_view(rs, lam)
    r = rho(rs)
    rm = tuple(x + y for x, y in zip(r, mu))
    target = tuple(x + y for x, y in zip(r, nu))
    total = 0
    for w in weyl_elements(rs, cap):
        xi = tuple(t - s for t, s in zip(target, w(rm)))
        m = wts.get(xi)
        if m:
            total += w.sign * m
    if total < 0:
        raise ArithmeticError("negative tensor multiplicity")
    return total


def decompose_alternating(rs: RootSystem, lam: Sequence[int], mu: Sequence[int],
                          cap: int | None = None) -> dict[Weight, int]:
    """Every coefficient a_nu at once, by the same Weyl-numerator expansion.

    A term e^{xi + w(rho+mu)} contributes to a_nu exactly when
    xi + w(rho+mu) - rho is dominant.
    """
    lam = _require_dominant(rs, lam)
    mu = _require_dominant(rs, mu)
    wts = weights_view(rs, lam)
    r = rho(rs)
    rm = tuple(x + y for x, y in zip(r, mu))
    acc: dict[Weight, int] = defaultdict(int)
    for w in weyl_elements(rs, cap):
        shift = tuple(x - 1 for x in w(rm))
        for xi, m in wts.items():
            key = tuple(x + y for x, y in zip(xi, shift))
            if min(key) >= 0:
                acc[key] += w.sign * m
    out = {k: v for k, v in acc.items() if v}
    if any(v < 0 for v in out.values()):
        raise ArithmeticError("negative tensor multiplicity")
    return out


def symmetric_square(ws: WeightMultiset) -> WeightMultiset:
    """Weight multiset of S^2 V from that of V: (ch(x)^2 + ch(2x)) / 2."""
    acc: dict[Weight, int] = defaultdict(int)
    items = list(ws.items())
    for a, ma in items:
        for b, mb in items:
            acc[tuple(x + y for x, y in zip(a, b))] += ma * mb
    for a, ma in items:
        acc[tuple(2 * x for x in a)] += ma
    out = {}
    for k, v in acc.items():
        assert v % 2 == 0
        if v:
            out[k] = v // 2
    return out


def subtract(big: WeightMultiset, small: WeightMultiset) -> WeightMultiset:
    """``big - small`` as multisets, dropping zeros (may go negative)."""
    out = dict(big)
    for k, v in small.items():
        out[k] = out.get(k, 0) - v
    return {k: v for k, v in out.items() if v}
