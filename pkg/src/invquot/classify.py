"""Decide when the invariant Quot scheme of the cone of primitive vectors is non-reduced."""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional, Sequence

from .quotcone import GradedDecomposition, graded_module, tangent_upper_bound
from .rootsys import RootSystem, SimpleType, Weight, all_types, build, is_dominant

REDUCED = "ReducedPoint"
DOUBLE = "DoublePoint"


@dataclass(frozen=True)
class GroupSpec:
    """A product of simple factors, simply connected."""

    factors: tuple[SimpleType, ...]

    def __post_init__(self) -> None:
        if not self.factors:
            raise ValueError("a group needs at least one simple factor")
        object.__setattr__(self, "factors", tuple(self.factors))

    @classmethod
    def parse(cls, text: str) -> "GroupSpec":
        parts = re.split(r"\s*[xX×]\s*", text.strip())
        return cls(tuple(SimpleType.parse(p) for p in parts))

    def __str__(self) -> str:
        return "x".join(str(f) for f in self.factors)

    @property
    def ranks(self) -> tuple[int, ...]:
        return tuple(f.rank for f in self.factors)

    def systems(self) -> list[RootSystem]:
        return [build(f) for f in self.factors]


@dataclass(frozen=True)
class QuotClassification:
    kind: str
    tangent_dim: int
    witness_factor: Optional[int] = None
    # degree-graded kernel N on the witness factor (DoublePoint only)
    witness_module: Optional[GradedDecomposition] = None

    def __post_init__(self) -> None:
        assert self.kind in (REDUCED, DOUBLE)
        assert (self.kind == DOUBLE) == (self.tangent_dim == 1)
        assert (self.kind == DOUBLE) == (self.witness_factor is not None)

    @property
    def order(self) -> int:
        """Length of the local ring: 1 for a reduced point, 2 for C[t]/t^2."""
        return 1 + self.tangent_dim


def scan_dominant_roots(max_rank: int) -> list[tuple[SimpleType, tuple[int, ...]]]:
    """Dominant roots whose expansion has exactly one simple root not orthogonal to them,
    appearing with coefficient 1.

    Runs over simple types of rank 2..max_rank; rank one (A1 = B1) is treated
    separately by :func:`classify_quot`.
    """
    if max_rank < 2:
        raise ValueError("max_rank must be at least 2")
    hits = []
    for t in all_types(max_rank, min_rank=2):
        rs = build(t)
        for root, w in zip(rs.positive_roots, rs.positive_weights):
            if not is_dominant(w):
                continue
            # simple root i is non-orthogonal to the root iff <root, alpha_i^vee> != 0
            touching = [i for i, x in enumerate(w) if x != 0]
            if len(touching) == 1 and root[touching[0]] == 1:
                hits.append((t, root))
    return hits


def _is_vector_factor(t: SimpleType, lam: Weight) -> bool:
    if t.family == "B":
        return lam == (1,) + (0,) * (t.rank - 1)
    if t.family == "A" and t.rank == 1:
        return lam == (2,)
    return False


def _check(g: GroupSpec, w: Sequence[Sequence[int]], name: str) -> tuple[Weight, ...]:
    w = tuple(tuple(x) for x in w)
    if len(w) != len(g.factors):
        raise ValueError(f"{name} has {len(w)} components but {g} has {len(g.factors)} factors")
    for t, x in zip(g.factors, w):
        if len(x) != t.rank:
            raise ValueError(f"{name} component {x} does not match rank of {t}")
        if not is_dominant(x):
            raise ValueError(f"{name} component {x} is not dominant")
    return w


def classify_quot(g: GroupSpec, lam, mu, with_witness: bool = True,
                  witness_degree: int = 2) -> QuotClassification:
    """Reduced point unless a single factor is Spin(2n+1) acting on C^{2n+1},
    lam vanishes elsewhere, and mu pairs positively with the short simple coroot.
    """
    lam = _check(g, lam, "lambda")
    mu = _check(g, mu, "mu")
    support = [k for k, x in enumerate(lam) if any(x)]
    if len(support) != 1:
        return QuotClassification(REDUCED, 0)
    k = support[0]
    t = g.factors[k]
    if not _is_vector_factor(t, lam[k]) or mu[k][-1] < 1:
        return QuotClassification(REDUCED, 0)
    module = None
    if with_witness:
        module = graded_module(build(t), lam[k], mu[k], "N", witness_degree)
    return QuotClassification(DOUBLE, 1, k, module)


def tangent_bound(g: GroupSpec, lam, mu) -> int:
    return tangent_upper_bound(g, _check(g, lam, "lambda"), _check(g, mu, "mu"))

