"""Tensor product decomposition V(lam) (x) V(mu) by signed translation (Klimyk).

A :data:`Decomposition` is a dict ``{dominant weight: multiplicity}``.
"""
from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from typing import Dict, Sequence

from .reps import _require_dominant, dim, weights_view
from .rootsys import RootSystem, Weight, to_weight

Decomposition = Dict[Weight, int]


def decompose(rs: RootSystem, lam: Sequence[int], mu: Sequence[int]) -> Decomposition:
    """Decompose V(lam) (x) V(mu) into irreducibles.

    Every weight xi of one factor is shifted to xi + mu + rho, reflected into
    the dominant chamber, and contributes sign * mult at (result - rho); weights
    landing on a wall drop out. The product is symmetric, so the factor with
    the smaller dimension is the one whose weights get enumerated.
    """
    lam = _require_dominant(rs, lam)
    mu = _require_dominant(rs, mu)
    if dim(rs, lam) > dim(rs, mu):
        lam, mu = mu, lam
    wts = weights_view(rs, lam)
    simple = rs.simple_weights
    n = rs.rank
    shift = [x + 1 for x in mu]
    acc: dict[Weight, int] = defaultdict(int)
    for xi, m in wts.items():
        v = [x + y for x, y in zip(xi, shift)]
        flips = 0
        while True:
            for i in range(n):
                c = v[i]
                if c < 0:
                    break
            else:
                break
            a = simple[i]
            for k in range(n):
                v[k] -= c * a[k]
            flips += 1
        if 0 in v:
            continue
        acc[tuple(x - 1 for x in v)] += -m if flips % 2 else m
    out = {k: c for k, c in acc.items() if c}
    bad = {k: c for k, c in out.items() if c < 0}
    assert not bad, f"negative multiplicities {bad} in V{lam} x V{mu} for {rs.type}"
    return dict(sorted(out.items(), reverse=True))


def mult(rs: RootSystem, lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """Multiplicity of V(nu) in V(lam) (x) V(mu)."""
    nu = _require_dominant(rs, nu)
    return decompose(rs, lam, mu).get(nu, 0)


def dimension_of(rs: RootSystem, dec: Decomposition) -> int:
    return sum(c * dim(rs, nu) for nu, c in dec.items())


def epsilon(rs: RootSystem, i: int) -> Weight:
    """``e_i = alpha_i + ... + alpha_n`` in weight coordinates (type B, 1-based i)."""
    n = rs.rank
    if rs.type.family != "B" and not (rs.type.family == "A" and n == 1):
        raise ValueError(f"epsilon vectors are defined here for type B only, not {rs.type}")
    if not 1 <= i <= n:
        raise ValueError(f"index {i} out of range")
    root = [Fraction(int(j >= i - 1)) for j in range(n)]
    w = to_weight(rs, root)
    assert all(isinstance(x, int) for x in w)
    return w
