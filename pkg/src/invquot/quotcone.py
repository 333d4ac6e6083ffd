"""Graded multiplicities of the modules living on the cone of primitive vectors.

For dominant lam, mu the coordinate ring A of the cone over V(lam) has degree
m piece V(m lam)^*. The free module M = A (x) V(mu)^* surjects onto
Q = sum_m V(m lam + mu)^* through the Cartan product, with kernel N. Every
statement here is about isotypic multiplicities, which are unchanged by
dualizing, so all computations use undualized weights.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import prod
from typing import Any, Sequence

from .reps import _require_dominant, symmetric_square, subtract, weights
from .rootsys import RootSystem, Weight, build, dominance_leq
from .tensor import Decomposition, decompose, epsilon, mult
from .weyl import dual_weight

MODULES = ("A", "M", "N", "Q")
DEFAULT_DEGREE_BOUND = 4


def _add(x, y):
    return tuple(a + b for a, b in zip(x, y))


def _scale(k, x):
    return tuple(k * a for a in x)


def _jsonable(w):
    return list(w)


@dataclass(frozen=True)
class GradedDecomposition:
    which: str
    lam: Weight
    mu: Weight
    degree_bound: int
    per_degree: tuple[Decomposition, ...]

    def __getitem__(self, m: int) -> Decomposition:
        return self.per_degree[m]


def graded_module(rs: RootSystem, lam: Sequence[int], mu: Sequence[int], which: str,
                  degree_bound: int = DEFAULT_DEGREE_BOUND) -> GradedDecomposition:
    """Degree-by-degree decomposition of A, M, N or Q for ``m = 0..degree_bound``."""
    lam = _require_dominant(rs, lam)
    mu = _require_dominant(rs, mu)
    which = which.upper()
    if which not in MODULES:
        raise ValueError(f"unknown module {which!r}; expected one of {MODULES}")
    if degree_bound < 0:
        raise ValueError("degree bound must be nonnegative")
    out = []
    for m in range(degree_bound + 1):
        top = _add(_scale(m, lam), mu)
        if which == "A":
            out.append({_scale(m, lam): 1})
        elif which == "Q":
            out.append({top: 1})
        else:
            dec = decompose(rs, _scale(m, lam), mu)
            if which == "N":
                dec = dict(dec)
                assert dec.get(top) == 1, "Cartan component must occur exactly once"
                del dec[top]
            out.append(dec)
    return GradedDecomposition(which, lam, mu, degree_bound, tuple(out))


def exactness_defect(rs: RootSystem, lam, mu, degree_bound: int = DEFAULT_DEGREE_BOUND
                     ) -> list[Decomposition]:
    """Per degree, M_m - N_m - Q_m as a multiplicity map (all empty when exact)."""
    mods = {w: graded_module(rs, lam, mu, w, degree_bound) for w in "MNQ"}
    return [subtract(subtract(mods["M"][m], mods["N"][m]), mods["Q"][m])
            for m in range(degree_bound + 1)]


@dataclass(frozen=True)
class HilbertFunction:
    """Indicator of the weights m lam^* + mu^* (m >= 0)."""

    rs: RootSystem
    lam: Weight
    mu: Weight

    def __call__(self, nu: Sequence[int]) -> int:
        return hilbert(self, nu)


def hilbert(h: HilbertFunction, nu: Sequence[int]) -> int:
    nu = _require_dominant(h.rs, nu)
    lam_d = dual_weight(h.rs, h.lam)
    rest = tuple(a - b for a, b in zip(nu, dual_weight(h.rs, h.mu)))
    if not any(lam_d):
        # lam = 0: every m gives the same weight
        return int(not any(rest))
    m = None
    for r, l in zip(rest, lam_d):
        if l == 0:
            if r != 0:
                return 0
            continue
        q, rem = divmod(r, l)
        if rem or q < 0 or (m is not None and q != m):
            return 0
        m = q
    return 1


def hilbert_degree(h: HilbertFunction, nu: Sequence[int]) -> int | None:
    """The m with nu = m lam^* + mu^*, or None; 0 when lam = 0 and nu = mu^*."""
    if not hilbert(h, nu):
        return None
    lam_d = dual_weight(h.rs, h.lam)
    rest = tuple(a - b for a, b in zip(nu, dual_weight(h.rs, h.mu)))
    for r, l in zip(rest, lam_d):
        if l:
            return r // l
    return 0


# ---------------------------------------------------------------------------
# the odd orthogonal setting: lam = alpha_1 + ... + alpha_n

def vector_weight(rs: RootSystem) -> Weight:
    """Highest weight of the (2n+1)-dimensional module: omega_1 in B_n, 2 omega_1 in A_1."""
    return epsilon(rs, 1)


def is_vector_context(rs: RootSystem, lam: Sequence[int]) -> bool:
    t = rs.type
    if t.family == "B" or (t.family == "A" and t.rank == 1):
        return tuple(lam) == vector_weight(rs)
    return False


def _require_vector_context(rs: RootSystem, lam=None) -> Weight:
    t = rs.type
    if not (t.family == "B" or (t.family == "A" and t.rank == 1)):
        raise ValueError(f"this check needs type B_n (or A1 as B1), got {t}")
    vec = vector_weight(rs)
    if lam is not None and tuple(lam) != vec:
        raise ValueError(f"lam must be {vec} for {t}, got {tuple(lam)}")
    return vec


def partial_root_sums(rs: RootSystem) -> list[Weight]:
    """``alpha_1 + ... + alpha_i`` in weight coordinates for i = 0..n."""
    out = [rs.zero()]
    for a in rs.simple_weights:
        out.append(_add(out[-1], a))
    return out


def n_prime_split(rs: RootSystem, lam, mu, m: int) -> tuple[int, Decomposition]:
    """Split N_m into its isotypic part of type (m-1) lam + mu and the rest."""
    lam = _require_vector_context(rs, lam)
    mu = _require_dominant(rs, mu)
    if m < 1:
        raise ValueError("degree must be at least 1")
    n_m = dict(graded_module(rs, lam, mu, "N", m)[m])
    marker = _add(_scale(m - 1, lam), mu)
    count = n_m.pop(marker, 0)
    return count, n_m


def tangent_upper_bound(factors, lam, mu) -> int:
    """Dimension of Hom^G(N_1, Q), which bounds the tangent space at the unique point.

    ``factors`` is a RootSystem, a sequence of them, or anything with a
    ``factors`` attribute listing simple types; ``lam``/``mu`` are then
    per-factor weight tuples. Multiplicities in a product group multiply
    factor by factor.
    """
    systems, lam, mu = _as_product(factors, lam, mu)
    if not any(any(l) for l in lam):
        return 0  # the cone is a point, N = 0
    total = 0
    # m lam + mu for m >= 2 is above the Cartan component, so only m = 0, 1 occur in N_1
    for m in (0, 1):
        target = [_add(_scale(m, l), x) for l, x in zip(lam, mu)]
        c = prod(mult(rs, l, x, t) for rs, l, x, t in zip(systems, lam, mu, target))
        if m == 1:
            c -= 1
        total += c
    return total


def _as_product(factors, lam, mu):
    if isinstance(factors, RootSystem):
        return [factors], [tuple(lam)], [tuple(mu)]
    if hasattr(factors, "factors"):
        factors = factors.factors
    systems = [f if isinstance(f, RootSystem) else build(f) for f in factors]
    lam = [tuple(x) for x in lam]
    mu = [tuple(x) for x in mu]
    if not (len(systems) == len(lam) == len(mu)):
        raise ValueError("number of weight components does not match the group")
    for rs, l, x in zip(systems, lam, mu):
        _require_dominant(rs, l)
        _require_dominant(rs, x)
    return systems, lam, mu


# ---------------------------------------------------------------------------
# verifiers; a failed check is reported, never raised

@dataclass
class Report:
    lemma: str
    ok: bool
    inputs: dict[str, Any]
    details: dict[str, Any] = field(default_factory=dict)

    def as_dict(self) -> dict[str, Any]:
        return {"lemma": self.lemma, "ok": self.ok, "inputs": self.inputs,
                "details": self.details}


def verify_lemma_211(rs: RootSystem, mu) -> Report:
    """mult of V(mu) in V(lam) (x) V(mu) is 1 when <mu, alpha_n^vee> != 0, else 0."""
    lam = _require_vector_context(rs)
    mu = _require_dominant(rs, mu)
    got = mult(rs, lam, mu, mu)
    want = 1 if mu[-1] != 0 else 0
    return Report("211", got == want, {"group": str(rs.type), "mu": _jsonable(mu)},
                  {"multiplicity": got, "expected": want})


def verify_lemma_212(rs: RootSystem, mu, m: int) -> Report:
    """Components nu >= (m-1) lam + mu of V(m lam) (x) V(mu) are m lam + mu - (a_1+...+a_i)."""
    lam = _require_vector_context(rs)
    mu = _require_dominant(rs, mu)
    if m < 1:
        raise ValueError("degree must be at least 1")
    top = _add(_scale(m, lam), mu)
    floor = _add(_scale(m - 1, lam), mu)
    allowed = {tuple(a - b for a, b in zip(top, s)): i
               for i, s in enumerate(partial_root_sums(rs))}
    witnesses, offenders = [], []
    for nu in decompose(rs, _scale(m, lam), mu):
        if not dominance_leq(rs, floor, nu):
            continue
        if nu in allowed:
            witnesses.append({"i": allowed[nu], "nu": _jsonable(nu)})
        else:
            offenders.append(_jsonable(nu))
    witnesses.sort(key=lambda d: d["i"])
    return Report("212", not offenders,
                  {"group": str(rs.type), "mu": _jsonable(mu), "m": m},
                  {"witnesses": witnesses, "offenders": offenders})


def verify_lemma_214(rs: RootSystem, mu, degree_bound: int = DEFAULT_DEGREE_BOUND) -> Report:
    """With <mu, alpha_n^vee> >= 1, V((m-1) lam + mu) occurs exactly once in N_m."""
    lam = _require_vector_context(rs)
    mu = _require_dominant(rs, mu)
    if mu[-1] < 1:
        raise ValueError("needs <mu, alpha_n^vee> >= 1")
    markers = [n_prime_split(rs, lam, mu, m)[0] for m in range(1, degree_bound + 1)]
    return Report("214", all(c == 1 for c in markers),
                  {"group": str(rs.type), "mu": _jsonable(mu), "degree_bound": degree_bound},
                  {"marker_multiplicities": markers})


def verify_lemma_q1(rs: RootSystem, nu) -> Report:
    """V(nu +- e_i), when dominant, occurs exactly once in V(lam) (x) V(nu)."""
    lam = _require_vector_context(rs)
    nu = _require_dominant(rs, nu)
    dec = decompose(rs, lam, nu)
    cases = []
    for i in range(1, rs.rank + 1):
        e = epsilon(rs, i)
        for sgn in (1, -1):
            target = tuple(a + sgn * b for a, b in zip(nu, e))
            if min(target) < 0:
                continue
            cases.append({"i": i, "sign": sgn, "nu": _jsonable(target),
                          "multiplicity": dec.get(target, 0)})
    return Report("q1", all(c["multiplicity"] == 1 for c in cases),
                  {"group": str(rs.type), "nu": _jsonable(nu)}, {"cases": cases})


def r_of_mu(rs: RootSystem, mu) -> int:
    """How many of mu_1 >= 0, ..., mu_{n-1} >= 0, mu_n >= 1 are equalities."""
    _require_vector_context(rs)
    mu = _require_dominant(rs, mu)
    if mu[-1] < 1:
        raise ValueError("r(mu) is only defined when <mu, alpha_n^vee> >= 1")
    return sum(1 for x in mu[:-1] if x == 0) + (1 if mu[-1] == 1 else 0)


def verify_lemma_q2(rs: RootSystem, mu) -> Report:
    """mult of V(mu) in V(2 lam) (x) V(mu) equals n - r(mu)."""
    lam = _require_vector_context(rs)
    mu = _require_dominant(rs, mu)
    r = r_of_mu(rs, mu)
    got = mult(rs, _scale(2, lam), mu, mu)
    want = rs.rank - r
    return Report("q2", got == want, {"group": str(rs.type), "mu": _jsonable(mu)},
                  {"multiplicity": got, "n_minus_r": want, "r": r})


def verify_s2(rs: RootSystem) -> Report:
    """S^2 V(lam) = V(2 lam) + V(0) at the level of weight multisets."""
    lam = _require_vector_context(rs)
    sym = symmetric_square(weights(rs, lam))
    rest = subtract(sym, weights(rs, _scale(2, lam)))
    ok = rest == {rs.zero(): 1}
    return Report("s2", ok, {"group": str(rs.type)},
                  {"remainder": {",".join(map(str, k)): v for k, v in rest.items()},
                   "dim_v2lam": sum(weights(rs, _scale(2, lam)).values())})
