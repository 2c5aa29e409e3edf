"""Admissible orderings of the positive roots and the filtration plans they induce.

An ordering L_1, ..., L_m is admissible when L_j + L_j' = L_j'' forces
j, j' < j''.  Compatibility with a chain of node subsets asks additionally
that the first |Phi+(J)| entries are exactly the roots supported in J, for
every chain member J.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .dynkin import DiagramError, DynkinDiagram
from .roots import Root, RootSystem

__all__ = [
    "AdmissibleOrdering",
    "FiltrationPlan",
    "SumViolation",
    "PrefixViolation",
    "normalize_chain",
    "admissible_order",
    "is_admissible",
    "filtration_plan",
]


@dataclass(frozen=True, slots=True)
class SumViolation:
    """Positions (1-based) with roots at ``first`` + ``second`` = ``total``
    but ``total`` not strictly after both."""

    first: int
    second: int
    total: int


@dataclass(frozen=True, slots=True)
class PrefixViolation:
    """Chain stage ``chain_index`` whose prefix contains ``root`` even though
    the root is not supported in that stage."""

    chain_index: int
    root: Root


@dataclass(frozen=True)
class AdmissibleOrdering:
    roots: tuple[Root, ...]
    chain: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.roots)


def normalize_chain(
    diagram: DynkinDiagram, members: Iterable[Iterable[int]] | None
) -> tuple[tuple[int, ...], ...]:
    """Normalize a strictly increasing subset chain, adding the empty set and
    the full node set as implicit endpoints."""
    full = tuple(diagram.nodes)
    inner: list[tuple[int, ...]] = []
    for member in members or []:
        subset = tuple(sorted(set(member)))
        for i in subset:
            if not 1 <= i <= diagram.rank:
                raise DiagramError(f"chain member contains node {i}, outside 1..{diagram.rank}")
        if subset and subset != full:
            inner.append(subset)
    chain = ((), *inner, full)
    for left, right in zip(chain, chain[1:]):
        if not set(left) < set(right):
            raise ValueError(f"chain must increase strictly: {left} before {right}")
    return chain


def _block_index(chain: Sequence[tuple[int, ...]], root: Root) -> int:
    supp = set(root.support)
    for r, member in enumerate(chain):
        if supp.issubset(member):
            return r
    raise AssertionError("chain ends with the full node set")


def admissible_order(rs: RootSystem, chain: Iterable[Iterable[int]] | None = None) -> AdmissibleOrdering:
    """Sort by chain block, then height, then node order.

    A sum of roots has larger height and no earlier block than either
    summand, so the result is admissible and compatible with the chain.
    """
    normalized = normalize_chain(rs.diagram, chain)
    ordered = sorted(
        rs.roots,
        key=lambda r: (_block_index(normalized, r), r.height, tuple(-c for c in r.coeffs)),
    )
    return AdmissibleOrdering(tuple(ordered), normalized)


def is_admissible(
    rs: RootSystem,
    sequence: Iterable[Root],
    chain: Iterable[Iterable[int]] | None = None,
) -> SumViolation | PrefixViolation | None:
    """Check a candidate ordering; returns None when it passes.

    The sequence must be a permutation of the positive roots, otherwise a
    ValueError is raised rather than a violation witness.
    """
    seq = tuple(sequence)
    if len(seq) != len(rs.roots) or {r.coeffs for r in seq} != {r.coeffs for r in rs.roots}:
        raise ValueError("sequence is not a permutation of the positive roots")
    normalized = normalize_chain(rs.diagram, chain)
    position = {r.coeffs: k for k, r in enumerate(seq)}
    m = len(seq)
    for j in range(m):
        left = seq[j].coeffs
        for j2 in range(j, m):
            total = tuple(x + y for x, y in zip(left, seq[j2].coeffs))
            k = position.get(total)
            if k is not None and k <= max(j, j2):
                return SumViolation(j + 1, j2 + 1, k + 1)
    for r, member in enumerate(normalized):
        allowed = set(member)
        count = sum(1 for root in rs.roots if allowed.issuperset(root.support))
        for root in seq[:count]:
            if not allowed.issuperset(root.support):
                return PrefixViolation(r, root)
    return None


@dataclass(frozen=True)
class FiltrationPlan:
    """Quotient schedule of the tangent-bundle filtration.

    ``quotients[r]`` is the class of the r-th quotient, so the plan walks
    the ordering backwards.  ``breakpoints`` lists, for each chain member,
    the index at which the remaining sub-bundle is the relative tangent
    bundle of that stage.
    """

    ordering: AdmissibleOrdering
    quotients: tuple[Root, ...]
    breakpoints: tuple[tuple[tuple[int, ...], int], ...]


def filtration_plan(rs: RootSystem, chain: Iterable[Iterable[int]] | None = None) -> FiltrationPlan:
    ordering = admissible_order(rs, chain)
    m = len(ordering)
    quotients = tuple(reversed(ordering.roots))
    breakpoints = []
    for member in ordering.chain[1:]:
        allowed = set(member)
        count = sum(1 for root in rs.roots if allowed.issuperset(root.support))
        breakpoints.append((member, m - count))
    return FiltrationPlan(ordering, quotients, tuple(breakpoints))
