"""Tags on diagram nodes, splitting types, and the associated counts.

A tag assigns a non-negative integer d_i to every node.  Minimal sections
of the flag bundle meet the class of a positive root L in degree
-sum(a_i * d_i), and the count m_j tracks how many roots supported in the
zero-region around a node j with d_j = 1 carry coefficient exactly 1 at j.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .dynkin import DynkinDiagram
from .roots import Root, root_system

__all__ = [
    "Tag",
    "SplittingType",
    "component_of_one",
    "m_value",
    "m_closed_form",
    "degree_on_minimal_section",
    "tag_from_splitting",
    "splitting_from_tag",
]

# Ranks where the closed forms below need explicit vectors.
_M_EXCEPTIONAL = {
    ("E", 6): (16, 20, 20, 18, 20, 16),
    ("E", 7): (32, 35, 30, 24, 30, 32, 27),
    ("E", 8): (64, 56, 42, 30, 40, 48, 54, 56),
    ("F", 4): (14, 12, 6, 8),
    ("G", 2): (2, 4),
}


@dataclass(frozen=True, slots=True)
class Tag:
    """Node-indexed vector of non-negative integers."""

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(v < 0 for v in self.values):
            raise ValueError(f"tag values must be non-negative: {self.values}")

    @classmethod
    def parse(cls, text: str) -> "Tag":
        try:
            return cls(tuple(int(part) for part in text.split(",")))
        except ValueError as exc:
            raise ValueError(f"malformed tag {text!r}: expected comma-separated integers") from exc

    @property
    def i0(self) -> tuple[int, ...]:
        """Nodes with value 0."""
        return tuple(i for i, v in enumerate(self.values, start=1) if v == 0)

    @property
    def i1(self) -> tuple[int, ...]:
        """Nodes with value at most 1."""
        return tuple(i for i, v in enumerate(self.values, start=1) if v <= 1)

    @property
    def is_zero(self) -> bool:
        return not any(self.values)

    def value(self, i: int) -> int:
        return self.values[i - 1]

    def __len__(self) -> int:
        return len(self.values)

    def __str__(self) -> str:
        return "(" + ",".join(str(v) for v in self.values) + ")"


@dataclass(frozen=True, slots=True)
class SplittingType:
    """Weakly increasing integer degrees (a_0, ..., a_r)."""

    degrees: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.degrees) < 2:
            raise ValueError("a splitting type needs at least two degrees")
        if any(x > y for x, y in zip(self.degrees, self.degrees[1:])):
            raise ValueError(f"degrees must be weakly increasing: {self.degrees}")

    @property
    def strictly_increasing(self) -> bool:
        return all(x < y for x, y in zip(self.degrees, self.degrees[1:]))


def zero_sets(tag: Tag) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Nodes tagged 0 and nodes tagged at most 1, in that order."""
    return tag.i0, tag.i1


def _check_tag(diagram: DynkinDiagram, tag: Tag) -> None:
    if len(tag) != diagram.rank:
        raise ValueError(f"tag length {len(tag)} does not match diagram rank {diagram.rank}")


def component_of_one(diagram: DynkinDiagram, tag: Tag, j: int) -> tuple[int, ...]:
    """Connected component of j inside the zero-tag region extended by j.

    Requires d_j = 1; the result is the sorted node set of the component of
    j in the subdiagram on I_0 union {j}.
    """
    _check_tag(diagram, tag)
    if not 1 <= j <= diagram.rank:
        raise ValueError(f"node {j} outside 1..{diagram.rank}")
    if tag.value(j) != 1:
        raise ValueError(f"node {j} must carry tag value 1, got {tag.value(j)}")
    allowed = set(tag.i0) | {j}
    seen = {j}
    queue = [j]
    while queue:
        i = queue.pop()
        for nb in diagram.neighbors(i):
            if nb in allowed and nb not in seen:
                seen.add(nb)
                queue.append(nb)
    return tuple(sorted(seen))


def m_value(diagram: DynkinDiagram, tag: Tag, j: int) -> int:
    """Number of roots of the component of j in I_0 union {j} whose
    coefficient at j is exactly 1."""
    region = component_of_one(diagram, tag, j)
    sub = diagram.subdiagram(region)
    rs = root_system(sub.diagram)
    jn = sub.old_to_new[j]
    return sum(1 for r in rs.roots if r.coeff(jn) == 1)


def m_closed_form(family: str, rank: int, j: int) -> int:
    """Closed form for m_j on a full connected diagram with d_j = 1 and all
    other nodes tagged 0."""
    if not 1 <= j <= rank:
        raise ValueError(f"node {j} outside 1..{rank}")
    if family == "A":
        return j * (rank + 1 - j)
    if family == "B":
        return j * (2 * rank - 2 * j + 1)
    if family == "C":
        return rank * (rank + 1) // 2 if j == rank else j * (2 * rank - 2 * j)
    if family == "D":
        # The fork value 4(rank-2) is j*(2*rank-2*j) evaluated at j = rank-2.
        return rank * (rank - 1) // 2 if j >= rank - 1 else j * (2 * rank - 2 * j)
    vector = _M_EXCEPTIONAL.get((family, rank))
    if vector is None:
        raise ValueError(f"no closed form for family {family!r} at rank {rank}")
    return vector[j - 1]


def degree_on_minimal_section(root: Root, tag: Tag) -> int:
    """Intersection degree of a minimal section against the root class."""
    if len(root.coeffs) != len(tag):
        raise ValueError("root and tag live on diagrams of different ranks")
    return -sum(a * d for a, d in zip(root.coeffs, tag.values))


def tag_from_splitting(splitting: SplittingType) -> tuple[DynkinDiagram, Tag]:
    """Successive differences of the degrees, as a tag on a type A chain.

    Node i of the chain carries a_i - a_{i-1}; the chain has one node less
    than the splitting has degrees.
    """
    from .dynkin import parse_diagram

    degrees = splitting.degrees
    diagram = parse_diagram(f"A{len(degrees) - 1}")
    tag = Tag(tuple(b - a for a, b in zip(degrees, degrees[1:])))
    return diagram, tag


def splitting_from_tag(diagram: DynkinDiagram, tag: Tag) -> SplittingType:
    """Inverse of tag_from_splitting, normalized to start at degree 0."""
    _check_tag(diagram, tag)
    if len(diagram.components) != 1 or diagram.components[0].family != "A":
        raise ValueError(f"splitting types correspond to connected type A diagrams, not {diagram.label}")
    degrees = [0]
    for v in tag.values:
        degrees.append(degrees[-1] + v)
    return SplittingType(tuple(degrees))


def phi_plus_restricted_count(diagram: DynkinDiagram, region: Iterable[int], j: int) -> int:
    """Count roots of the full system supported in ``region`` with
    coefficient exactly 1 at j.  Used to cross-check m_value."""
    rs = root_system(diagram)
    allowed = set(region)
    return sum(1 for r in rs.roots if allowed.issuperset(r.support) and r.coeff(j) == 1)
