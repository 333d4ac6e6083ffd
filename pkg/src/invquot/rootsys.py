"""Root-system data for the simple Lie algebras (Bourbaki numbering).

Weights are plain integer tuples in the fundamental-weight basis: entry ``i``
is the pairing with the simple coroot ``alpha_i^vee``. Vectors written in the
simple-root basis are wrapped in :class:`RootVector` so that :func:`inner`
can tell the two apart. All arithmetic is exact.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial, lcm
from typing import Sequence, Tuple

Weight = Tuple[int, ...]
Matrix = Tuple[Tuple[int, ...], ...]

FAMILIES = "ABCDEFG"
_MIN_RANK = {"A": 1, "B": 2, "C": 3, "D": 4}


class RootVector(tuple):
    """Coordinates in the simple-root basis (entries may be Fractions)."""

    __slots__ = ()

    def __repr__(self) -> str:
        return f"RootVector({tuple.__repr__(self)})"


@dataclass(frozen=True, order=True)
class SimpleType:
    family: str
    rank: int

    def __post_init__(self) -> None:
        fam, n = self.family, self.rank
        if fam not in FAMILIES or len(fam) != 1:
            raise ValueError(f"unknown family {fam!r}")
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"rank must be a positive integer, got {n!r}")
        ok = {
            "E": n in (6, 7, 8),
            "F": n == 4,
            "G": n == 2,
        }.get(fam, n >= _MIN_RANK.get(fam, 1))
        if not ok:
            raise ValueError(f"{fam}{n} is not a valid simple type")

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"

    @classmethod
    def parse(cls, text: str) -> "SimpleType":
        m = re.fullmatch(r"\s*([A-Ga-g])\s*(\d+)\s*", text)
        if not m:
            raise ValueError(f"cannot parse simple type {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))


def all_types(max_rank: int, min_rank: int = 1) -> list[SimpleType]:
    """Every valid simple type with ``min_rank <= rank <= max_rank``."""
    out = []
    for fam in FAMILIES:
        for n in range(min_rank, max_rank + 1):
            try:
                out.append(SimpleType(fam, n))
            except ValueError:
                pass
    return out


# ---------------------------------------------------------------------------
# exact linear algebra helpers

def _inverse(mat: Sequence[Sequence[int]]) -> tuple[tuple[Fraction, ...], ...]:
    n = len(mat)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(mat)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def _cartan(fam: str, n: int) -> list[list[int]]:
    """Cartan matrix with ``a[i][j] = <alpha_j, alpha_i^vee>``."""
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i: int, j: int, ij: int = -1, ji: int = -1) -> None:
        # ij = <alpha_j, alpha_i^vee>
        a[i - 1][j - 1] = ij
        a[j - 1][i - 1] = ji

    if fam in "ABC":
        for i in range(1, n):
            link(i, i + 1)
        if fam == "B":
            link(n - 1, n, ij=-1, ji=-2)  # alpha_n short
        elif fam == "C":
            link(n - 1, n, ij=-2, ji=-1)  # alpha_n long
    elif fam == "D":
        for i in range(1, n - 1):
            link(i, i + 1)
        link(n - 2, n)
    elif fam == "E":
        link(1, 3)
        link(2, 4)
        for i in range(3, n):
            link(i, i + 1)
    elif fam == "F":
        link(1, 2)
        link(2, 3, ij=-1, ji=-2)
        link(3, 4)
    elif fam == "G":
        link(1, 2, ij=-3, ji=-1)  # alpha_1 short
    return a


def _symmetrizer(a: list[list[int]]) -> tuple[int, ...]:
    n = len(a)
    d: list[Fraction | None] = [None] * n
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if j != i and a[i][j] != 0 and d[j] is None:
                d[j] = d[i] * a[i][j] / a[j][i]
                stack.append(j)
    low = min(d)
    scaled = [x / low for x in d]
    assert all(x.denominator == 1 for x in scaled)
    return tuple(int(x) for x in scaled)


def _positive_roots(a: list[list[int]]) -> list[tuple[int, ...]]:
    """Grow roots by height, adding alpha_i to beta when the alpha_i-string allows it.

    If the string through beta is beta - p alpha_i, ..., beta + q alpha_i then
    p - q = <beta, alpha_i^vee>; p is read off from roots already found.
    """
    n = len(a)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    found = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                pair = sum(a[i][j] * beta[j] for j in range(n))
                p = 0
                probe = list(beta)
                while True:
                    probe[i] -= 1
                    if tuple(probe) not in found:
                        break
                    p += 1
                if p - pair > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in found:
                        found.add(up)
                        nxt.append(up)
        layer = nxt
    return sorted(found, key=lambda r: (sum(r), tuple(-x for x in r)))


@dataclass(frozen=True, eq=False)
class RootSystem:
    """Data for one simple factor. Build with :func:`build`."""

    type: SimpleType
    cartan: Matrix
    symmetrizer: tuple[int, ...]
    positive_roots: tuple[tuple[int, ...], ...]
    form: tuple[tuple[Fraction, ...], ...]
    cartan_inv: tuple[tuple[Fraction, ...], ...] = field(repr=False)
    # derived integer data used by the hot loops
    simple_weights: Matrix = field(repr=False)        # alpha_i in weight coords
    positive_weights: Matrix = field(repr=False)      # positive roots in weight coords
    form_int: Matrix = field(repr=False)              # form_scale * form
    form_scale: int = field(repr=False)
    inv_int: Matrix = field(repr=False)               # inv_den * cartan^-1
    inv_den: int = field(repr=False)

    @property
    def rank(self) -> int:
        return self.type.rank

    def __repr__(self) -> str:
        return f"RootSystem({self.type})"

    def zero(self) -> Weight:
        return (0,) * self.rank

    def fundamental(self, i: int, k: int = 1) -> Weight:
        """``k * omega_i`` with 1-based index ``i``."""
        return tuple(k if j == i - 1 else 0 for j in range(self.rank))


def build(t: SimpleType | str) -> RootSystem:
    if isinstance(t, str):
        t = SimpleType.parse(t)
    return _build(t)


@lru_cache(maxsize=None)
def _build(t: SimpleType) -> RootSystem:
    a = _cartan(t.family, t.rank)
    n = t.rank
    d = _symmetrizer(a)
    for i in range(n):
        for j in range(n):
            assert d[i] * a[i][j] == d[j] * a[j][i]
    roots = _positive_roots(a)
    inv = _inverse(a)
    form = tuple(tuple(inv[j][i] * d[j] for j in range(n)) for i in range(n))
    scale = lcm(*(x.denominator for row in form for x in row))
    den = lcm(*(x.denominator for row in inv for x in row))
    simple_w = tuple(tuple(a[i][j] for i in range(n)) for j in range(n))
    pos_w = tuple(_root_to_weight_int(a, r) for r in roots)
    rs = RootSystem(
        type=t,
        cartan=tuple(tuple(row) for row in a),
        symmetrizer=d,
        positive_roots=tuple(roots),
        form=form,
        cartan_inv=inv,
        simple_weights=simple_w,
        positive_weights=pos_w,
        form_int=tuple(tuple(int(x * scale) for x in row) for row in form),
        form_scale=scale,
        inv_int=tuple(tuple(int(x * den) for x in row) for row in inv),
        inv_den=den,
    )
    _check_reflection_closure(rs)
    return rs


def _root_to_weight_int(a, r) -> Weight:
    n = len(a)
    return tuple(sum(a[i][j] * r[j] for j in range(n)) for i in range(n))


def _check_reflection_closure(rs: RootSystem) -> None:
    # s_i permutes the positive roots other than alpha_i
    roots = set(rs.positive_roots)
    n = rs.rank
    for i in range(n):
        e = tuple(int(i == j) for j in range(n))
        for r in rs.positive_roots:
            if r == e:
                continue
            pair = sum(rs.cartan[i][j] * r[j] for j in range(n))
            img = tuple(r[j] - (pair if j == i else 0) for j in range(n))
            if img not in roots:
                raise AssertionError(f"{rs.type}: reflection {i + 1} sends {r} outside the roots")


# ---------------------------------------------------------------------------
# coordinate conversions and pairings

def to_root(rs: RootSystem, nu: Sequence[int]) -> RootVector:
    """Weight coordinates -> simple-root coordinates (exact rationals)."""
    _check_len(rs, nu)
    n = rs.rank
    return RootVector(sum((rs.cartan_inv[i][j] * nu[j] for j in range(n)), Fraction(0))
                      for i in range(n))


def to_weight(rs: RootSystem, r: Sequence) -> tuple:
    """Simple-root coordinates -> weight coordinates.

    Entries come back as ints when integral, otherwise as Fractions.
    """
    _check_len(rs, r)
    n = rs.rank
    out = []
    for i in range(n):
        x = sum((rs.cartan[i][j] * Fraction(r[j]) for j in range(n)), Fraction(0))
        out.append(int(x) if x.denominator == 1 else x)
    return tuple(out)


def inner(rs: RootSystem, x, y) -> Fraction:
    """Invariant form; a :class:`RootVector` argument is converted first."""
    if isinstance(x, RootVector):
        x = to_weight(rs, x)
    if isinstance(y, RootVector):
        y = to_weight(rs, y)
    _check_len(rs, x)
    _check_len(rs, y)
    n = rs.rank
    return sum((rs.form[i][j] * x[i] * y[j] for i in range(n) for j in range(n)),
               Fraction(0))


def inner_scaled(rs: RootSystem, x: Sequence[int], y: Sequence[int]) -> int:
    """``form_scale * (x, y)`` for integral weights, as an int."""
    f = rs.form_int
    n = len(x)
    return sum(x[i] * sum(f[i][j] * y[j] for j in range(n)) for i in range(n))


def coroot_pairing(rs: RootSystem, nu, alpha) -> Fraction:
    """``<nu, alpha^vee> = 2 (nu, alpha) / (alpha, alpha)``."""
    return 2 * inner(rs, nu, alpha) / inner(rs, alpha, alpha)


def root_coords_int(rs: RootSystem, nu: Sequence[int]) -> tuple[int, ...] | None:
    """Simple-root coordinates of ``nu`` if they are all integers, else None."""
    n = rs.rank
    out = []
    for i in range(n):
        s = sum(rs.inv_int[i][j] * nu[j] for j in range(n))
        q, r = divmod(s, rs.inv_den)
        if r:
            return None
        out.append(q)
    return tuple(out)


def dominance_leq(rs: RootSystem, mu: Sequence[int], lam: Sequence[int]) -> bool:
    """True iff ``lam - mu`` is a nonnegative integral sum of simple roots."""
    _check_len(rs, mu)
    _check_len(rs, lam)
    r = root_coords_int(rs, [l - m for l, m in zip(lam, mu)])
    return r is not None and all(x >= 0 for x in r)


def is_dominant(nu: Sequence[int]) -> bool:
    return all(x >= 0 for x in nu)


def height(rs: RootSystem, nu: Sequence[int]) -> Fraction:
    return sum(to_root(rs, nu), Fraction(0))


def _check_len(rs: RootSystem, v: Sequence) -> None:
    if len(v) != rs.rank:
        raise ValueError(f"dimension mismatch: {rs.type} has rank {rs.rank}, got length {len(v)}")


def add(x: Sequence[int], y: Sequence[int]) -> Weight:
    return tuple(a + b for a, b in zip(x, y))


def sub(x: Sequence[int], y: Sequence[int]) -> Weight:
    return tuple(a - b for a, b in zip(x, y))


def scale(k: int, x: Sequence[int]) -> Weight:
    return tuple(k * a for a in x)


def weyl_order(t: SimpleType) -> int:
    """Order of the Weyl group from the classical formulas."""
    n = t.rank
    return {
        "A": lambda: factorial(n + 1),
        "B": lambda: 2 ** n * factorial(n),
        "C": lambda: 2 ** n * factorial(n),
        "D": lambda: 2 ** (n - 1) * factorial(n),
        "E": lambda: {6: 51840, 7: 2903040, 8: 696729600}[n],
        "F": lambda: 1152,
        "G": lambda: 12,
    }[t.family]()


def positive_root_count(t: SimpleType) -> int:
    n = t.rank
    return {
        "A": n * (n + 1) // 2,
        "B": n * n,
        "C": n * n,
        "D": n * (n - 1),
        "E": {6: 36, 7: 63, 8: 120}.get(n, 0),
        "F": 24,
        "G": 6,
    }[t.family]
