"""Weyl group actions on weights (fundamental-weight coordinates)."""
from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .rootsys import RootSystem, SimpleType, Weight, build, is_dominant, weyl_order

DEFAULT_WEYL_CAP = 10 ** 6
WEYL_CAP_ENV = "INVQUOT_WEYL_CAP"


class WeylCapExceeded(RuntimeError):
    """The Weyl group is larger than the caller allowed to enumerate."""


@dataclass(frozen=True)
class SignedDominant:
    weight: Weight
    sign: int
    # reflections applied, in order, to reach ``weight`` (1-based indices)
    word: tuple[int, ...] = ()


@dataclass(frozen=True)
class WeylElement:
    word: tuple[int, ...]
    sign: int
    matrix: tuple[tuple[int, ...], ...]

    def __call__(self, nu: Sequence[int]) -> Weight:
        return tuple(sum(r * x for r, x in zip(row, nu)) for row in self.matrix)


def default_cap() -> int:
    raw = os.environ.get(WEYL_CAP_ENV)
    return int(raw) if raw else DEFAULT_WEYL_CAP


def rho(rs: RootSystem) -> Weight:
    return (1,) * rs.rank


def rho_from_roots(rs: RootSystem) -> Weight:
    """Half the sum of the positive roots, computed from the root list."""
    total = [sum(col) for col in zip(*rs.positive_weights)]
    assert all(x % 2 == 0 for x in total)
    return tuple(x // 2 for x in total)


def reflect(rs: RootSystem, i: int, nu: Sequence[int]) -> Weight:
    """Simple reflection ``s_i`` (1-based) applied to ``nu``."""
    if not 1 <= i <= rs.rank:
        raise ValueError(f"simple root index {i} out of range for {rs.type}")
    c = nu[i - 1]
    a = rs.simple_weights[i - 1]
    return tuple(x - c * y for x, y in zip(nu, a))


def apply_word(rs: RootSystem, word: Sequence[int], nu: Sequence[int]) -> Weight:
    nu = tuple(nu)
    for i in word:
        nu = reflect(rs, i, nu)
    return nu


def dominantize(rs: RootSystem, nu: Sequence[int]) -> SignedDominant:
    """Move ``nu`` into the dominant chamber, tracking the sign of the Weyl element.

    Sign is 0 when the orbit touches a wall (some coordinate vanishes along
    the way), which is exactly when the stabilizer is nontrivial.
    """
    if len(nu) != rs.rank:
        raise ValueError("dimension mismatch")
    v = list(nu)
    simple = rs.simple_weights
    n = len(v)
    word = []
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
        word.append(i + 1)
    # an orbit meets a wall iff its dominant member does
    if 0 in v:
        sign = 0
    else:
        sign = -1 if len(word) % 2 else 1
    return SignedDominant(tuple(v), sign, tuple(word))


def dual_weight(rs: RootSystem, lam: Sequence[int]) -> Weight:
    """Highest weight of the dual module, ``-w0(lam)``."""
    if not is_dominant(lam):
        raise ValueError(f"{tuple(lam)} is not dominant")
    return dominantize(rs, tuple(-x for x in lam)).weight


def weyl_elements(rs: RootSystem, cap: int | None = None) -> list[WeylElement]:
    """All Weyl group elements, found by breadth-first search on the orbit of rho.

    Refuses with :class:`WeylCapExceeded` when the group order exceeds ``cap``.
    """
    if cap is None:
        cap = default_cap()
    order = weyl_order(rs.type)
    if order > cap:
        raise WeylCapExceeded(f"|W({rs.type})| = {order} exceeds the cap {cap}")
    return list(_enumerate(rs.type))


@lru_cache(maxsize=32)
def _enumerate(t: SimpleType) -> tuple[WeylElement, ...]:
    rs = build(t)
    n = rs.rank
    ident = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    start = WeylElement((), 1, ident)
    seen = {rho(rs): start}
    queue = deque([(rho(rs), start)])
    while queue:
        image, w = queue.popleft()
        for i in range(1, n + 1):
            new_image = reflect(rs, i, image)
            if new_image in seen:
                continue
            a = rs.simple_weights[i - 1]
            row_i = w.matrix[i - 1]
            mat = tuple(tuple(x - a[k] * y for x, y in zip(w.matrix[k], row_i))
                        for k in range(n))
            elem = WeylElement(w.word + (i,), -w.sign, mat)
            seen[new_image] = elem
            queue.append((new_image, elem))
    out = tuple(seen.values())
    assert len(out) == weyl_order(t), (t, len(out))
    return out
