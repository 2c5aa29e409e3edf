"""Dynkin diagrams: label grammar, shape classification, Cartan data.

Connected diagrams follow the classical numbering.  A_n is the path
1-2-...-n.  B_n ends in a double bond with the short root at node n.
C_n ends in a double bond with the long root at node n.  D_n forks at
node n-2 into the leaves n-1 and n.  E_n carries the chain 1-3-4-...-n
with node 2 attached to node 4.  F_4 is 1-2=>3-4.  G_2 is a triple bond
with node 1 short.  Disjoint unions number their components
consecutively in label order.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd, lcm
from typing import Iterable

__all__ = [
    "DiagramError",
    "Edge",
    "Component",
    "DynkinDiagram",
    "Subdiagram",
    "CartanMatrix",
    "parse_diagram",
    "diagram_from_graph",
    "diagram_from_cartan",
]

# Admissible rank window per family letter; None means unbounded above.
_RANK_RANGES = {
    "A": (1, None),
    "B": (2, None),
    "C": (3, None),
    "D": (4, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}

_LABEL_PART = re.compile(r"([A-Za-z])(\d+)")


class DiagramError(ValueError):
    """Raised for labels or graphs that do not describe a valid diagram."""


@dataclass(frozen=True, slots=True)
class Edge:
    """Bond between nodes a < b.

    For multiplicity 2 or 3 the arrow points from the long root to the
    short root; ``long_node`` records the long side.
    """

    a: int
    b: int
    multiplicity: int = 1
    long_node: int | None = None

    def __post_init__(self) -> None:
        if self.a >= self.b:
            raise DiagramError(f"edge endpoints must satisfy a < b, got ({self.a}, {self.b})")
        if self.multiplicity not in (1, 2, 3):
            raise DiagramError(f"edge multiplicity must be 1, 2 or 3, got {self.multiplicity}")
        if self.multiplicity == 1:
            if self.long_node is not None:
                raise DiagramError("a simple edge carries no arrow")
        elif self.long_node not in (self.a, self.b):
            raise DiagramError("a multiple edge needs long_node set to one of its endpoints")

    @property
    def short_node(self) -> int | None:
        if self.long_node is None:
            return None
        return self.b if self.long_node == self.a else self.a


@dataclass(frozen=True, slots=True)
class Component:
    """One connected piece.  ``nodes[k]`` is the global index of the node
    playing canonical role k+1 within the family."""

    family: str
    rank: int
    nodes: tuple[int, ...]

    @property
    def label(self) -> str:
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class DynkinDiagram:
    """A finite-type diagram on nodes 1..rank, possibly disconnected."""

    rank: int
    edges: tuple[Edge, ...]
    components: tuple[Component, ...]

    @property
    def nodes(self) -> range:
        return range(1, self.rank + 1)

    @property
    def label(self) -> str:
        return "+".join(c.label for c in self.components)

    @cached_property
    def _adjacency(self) -> dict[int, dict[int, Edge]]:
        adj: dict[int, dict[int, Edge]] = {i: {} for i in self.nodes}
        for e in self.edges:
            adj[e.a][e.b] = e
            adj[e.b][e.a] = e
        return adj

    def neighbors(self, i: int) -> tuple[int, ...]:
        return tuple(sorted(self._adjacency[i]))

    def edge_between(self, i: int, j: int) -> Edge | None:
        return self._adjacency[i].get(j)

    @cached_property
    def cartan(self) -> "CartanMatrix":
        return CartanMatrix.from_diagram(self)

    def subdiagram(self, keep: Iterable[int]) -> "Subdiagram":
        """Induced diagram on ``keep``, renumbered 1..|keep| canonically.

        Components are ordered by their smallest original node and
        renumbered consecutively; the index maps record both directions.
        """
        wanted = sorted(set(keep))
        for i in wanted:
            if not 1 <= i <= self.rank:
                raise DiagramError(f"node {i} is not in the diagram (rank {self.rank})")
        inside = set(wanted)
        adj = {
            i: {j: e for j, e in self._adjacency[i].items() if j in inside}
            for i in wanted
        }
        new_to_old: list[int] = []
        seen: set[int] = set()
        for i in wanted:
            if i in seen:
                continue
            ids = _connected_ids(i, adj)
            seen.update(ids)
            piece = _classify_component(ids, adj)
            new_to_old.extend(piece.nodes)
        old_to_new = {old: new for new, old in enumerate(new_to_old, start=1)}
        edges = []
        for i in wanted:
            for j, e in adj[i].items():
                if i < j:
                    na, nb = sorted((old_to_new[i], old_to_new[j]))
                    long = None if e.long_node is None else old_to_new[e.long_node]
                    edges.append(Edge(na, nb, e.multiplicity, long))
        diagram = diagram_from_graph(len(wanted), edges)
        return Subdiagram(diagram, old_to_new, tuple(new_to_old))

    def connected_parts(self) -> list[tuple[tuple[int, ...], "DynkinDiagram"]]:
        """Each connected component as (sorted node subset, standalone diagram)."""
        out = []
        for comp in self.components:
            out.append((tuple(sorted(comp.nodes)), self.subdiagram(comp.nodes).diagram))
        return out


@dataclass
class Subdiagram:
    """Result of an induced-subdiagram extraction."""

    diagram: DynkinDiagram
    old_to_new: dict[int, int]
    new_to_old: tuple[int, ...]


@dataclass(frozen=True)
class CartanMatrix:
    """Integer matrix with entries C[i][j] = pairing of root i against coroot j."""

    entries: tuple[tuple[int, ...], ...]

    @classmethod
    def from_diagram(cls, diagram: DynkinDiagram) -> "CartanMatrix":
        n = diagram.rank
        m = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        for e in diagram.edges:
            if e.multiplicity == 1:
                m[e.a - 1][e.b - 1] = -1
                m[e.b - 1][e.a - 1] = -1
            else:
                long, short = e.long_node, e.short_node
                m[long - 1][short - 1] = -e.multiplicity
                m[short - 1][long - 1] = -1
        out = cls(tuple(tuple(row) for row in m))
        out.validate()
        return out

    @property
    def rank(self) -> int:
        return len(self.entries)

    def entry(self, i: int, j: int) -> int:
        """C[i][j] with 1-based indices."""
        return self.entries[i - 1][j - 1]

    def pairing(self, coeffs: Iterable[int], j: int) -> int:
        """Pairing of sum(a_i * root_i) against coroot j (1-based)."""
        col = j - 1
        return sum(a * self.entries[i][col] for i, a in enumerate(coeffs) if a)

    def validate(self) -> None:
        n = self.rank
        for row in self.entries:
            if len(row) != n:
                raise DiagramError("Cartan matrix must be square")
        for i in range(n):
            if self.entries[i][i] != 2:
                raise DiagramError(f"diagonal entry at {i + 1} must be 2")
            for j in range(n):
                if i == j:
                    continue
                cij, cji = self.entries[i][j], self.entries[j][i]
                if cij > 0:
                    raise DiagramError(f"off-diagonal entry ({i + 1},{j + 1}) must be <= 0")
                if (cij == 0) != (cji == 0):
                    raise DiagramError(f"entries ({i + 1},{j + 1}) and ({j + 1},{i + 1}) must vanish together")
                if cij * cji not in (0, 1, 2, 3):
                    raise DiagramError(f"bond product at ({i + 1},{j + 1}) must lie in {{0,1,2,3}}")
        self.symmetrizer()

    def symmetrizer(self) -> tuple[int, ...]:
        """Positive integers s with s_i * C[i][j] == s_j * C[j][i] for all i, j."""
        n = self.rank
        s: list[Fraction | None] = [None] * n
        for start in range(n):
            if s[start] is not None:
                continue
            s[start] = Fraction(1)
            stack = [start]
            while stack:
                i = stack.pop()
                for j in range(n):
                    if j == i or self.entries[i][j] == 0:
                        continue
                    value = s[i] * Fraction(self.entries[i][j], self.entries[j][i])
                    if s[j] is None:
                        s[j] = value
                        stack.append(j)
                    elif s[j] != value:
                        raise DiagramError("matrix is not symmetrizable")
        scale = lcm(*(f.denominator for f in s)) if n else 1
        ints = [int(f * scale) for f in s]
        shrink = gcd(*ints) if ints else 1
        return tuple(v // shrink for v in ints)


def _connected_ids(start: int, adj: dict[int, dict[int, Edge]]) -> list[int]:
    seen = {start}
    queue = [start]
    while queue:
        i = queue.pop()
        for j in adj[i]:
            if j not in seen:
                seen.add(j)
                queue.append(j)
    return sorted(seen)


def _path_order(ids: list[int], adj: dict[int, dict[int, Edge]]) -> list[int]:
    ends = [i for i in ids if len(adj[i]) == 1]
    if len(ends) != 2:
        raise DiagramError("component without a branch must be a path")
    order = [min(ends)]
    prev = None
    while len(order) < len(ids):
        nxt = [j for j in adj[order[-1]] if j != prev]
        if len(nxt) != 1:
            raise DiagramError("component without a branch must be a path")
        prev = order[-1]
        order.append(nxt[0])
    return order


def _walk_arm(branch: int, first: int, adj: dict[int, dict[int, Edge]]) -> list[int]:
    arm = [first]
    prev = branch
    while True:
        nxt = [j for j in adj[arm[-1]] if j != prev]
        if not nxt:
            return arm
        if len(nxt) > 1:
            raise DiagramError("at most one branch node per component")
        prev = arm[-1]
        arm.append(nxt[0])


def _classify_component(ids: list[int], adj: dict[int, dict[int, Edge]]) -> Component:
    """Recognize the family of a connected piece and fix its canonical numbering.

    Ties left open by diagram symmetries are broken toward smaller original
    indices, so a canonically numbered diagram classifies to itself.
    """
    n = len(ids)
    if n == 1:
        return Component("A", 1, (ids[0],))
    edges = {e for i in ids for e in adj[i].values()}
    if len(edges) != n - 1:
        raise DiagramError("diagram component must be a tree")
    if any(len(adj[i]) > 3 for i in ids):
        raise DiagramError("no node may have more than three neighbors")
    multis = sorted((e for e in edges if e.multiplicity >= 2), key=lambda e: e.a)
    branches = [i for i in ids if len(adj[i]) == 3]
    if len(multis) > 1:
        raise DiagramError("at most one multiple bond per component")
    if len(branches) > 1:
        raise DiagramError("at most one branch node per component")
    if multis and branches:
        raise DiagramError("a multiple bond cannot coexist with a branch node")

    if multis:
        e = multis[0]
        if e.multiplicity == 3:
            if n != 2:
                raise DiagramError("a triple bond only occurs at rank 2")
            return Component("G", 2, (e.short_node, e.long_node))
        path = _path_order(ids, adj)
        pos = next(k for k in range(n - 1) if {path[k], path[k + 1]} == {e.a, e.b})
        if n == 2:
            return Component("B", 2, (e.long_node, e.short_node))
        if pos == 0:
            path.reverse()
            pos = n - 2
        if pos == n - 2:
            family = "B" if e.long_node == path[n - 2] else "C"
            return Component(family, n, tuple(path))
        if n == 4 and pos == 1:
            if e.long_node == path[2]:
                path.reverse()
            return Component("F", 4, tuple(path))
        raise DiagramError("a double bond must sit at a path end, or centrally at rank 4")

    if branches:
        b = branches[0]
        arms = [_walk_arm(b, v, adj) for v in sorted(adj[b])]
        arms.sort(key=lambda a: (-len(a), a[-1]))
        lengths = tuple(len(a) for a in arms)
        if lengths[1] == lengths[2] == 1:
            if lengths[0] == 1:
                leaves = sorted(a[0] for a in arms)
                return Component("D", 4, (leaves[0], b, leaves[1], leaves[2]))
            short = sorted((arms[1][0], arms[2][0]))
            return Component("D", lengths[0] + 3, (*reversed(arms[0]), b, *short))
        if lengths == (2, 2, 1):
            left, right, single = arms
            return Component("E", 6, (left[1], single[0], left[0], b, right[0], right[1]))
        if lengths == (3, 2, 1):
            long, mid, single = arms
            return Component("E", 7, (mid[1], single[0], mid[0], b, *long))
        if lengths == (4, 2, 1):
            long, mid, single = arms
            return Component("E", 8, (mid[1], single[0], mid[0], b, *long))
        raise DiagramError(f"branch arms of lengths {lengths} match no family")

    path = _path_order(ids, adj)
    if path[0] > path[-1]:
        path.reverse()
    return Component("A", n, tuple(path))


def diagram_from_graph(rank: int, edges: Iterable[Edge]) -> DynkinDiagram:
    """Build and classify a diagram from explicit nodes 1..rank and edges."""
    edge_tuple = tuple(sorted(edges, key=lambda e: (e.a, e.b)))
    pairs = set()
    adj: dict[int, dict[int, Edge]] = {i: {} for i in range(1, rank + 1)}
    for e in edge_tuple:
        if not (1 <= e.a <= rank and 1 <= e.b <= rank):
            raise DiagramError(f"edge ({e.a},{e.b}) leaves the node range 1..{rank}")
        if (e.a, e.b) in pairs:
            raise DiagramError(f"duplicate edge ({e.a},{e.b})")
        pairs.add((e.a, e.b))
        adj[e.a][e.b] = e
        adj[e.b][e.a] = e
    components = []
    seen: set[int] = set()
    for i in range(1, rank + 1):
        if i in seen:
            continue
        ids = _connected_ids(i, adj)
        seen.update(ids)
        components.append(_classify_component(ids, adj))
    return DynkinDiagram(rank, edge_tuple, tuple(components))


def _check_rank(family: str, rank: int) -> None:
    lo, hi = _RANK_RANGES[family]
    if rank < lo:
        raise DiagramError(f"{family}{rank}: family {family} needs rank >= {lo}")
    if hi is not None and rank > hi:
        raise DiagramError(f"{family}{rank}: family {family} needs rank <= {hi}")


def _family_edges(family: str, n: int) -> list[Edge]:
    if family == "A":
        return [Edge(i, i + 1) for i in range(1, n)]
    if family == "B":
        return [Edge(i, i + 1) for i in range(1, n - 1)] + [Edge(n - 1, n, 2, n - 1)]
    if family == "C":
        return [Edge(i, i + 1) for i in range(1, n - 1)] + [Edge(n - 1, n, 2, n)]
    if family == "D":
        return [Edge(i, i + 1) for i in range(1, n - 2)] + [Edge(n - 2, n - 1), Edge(n - 2, n)]
    if family == "E":
        chain = [Edge(1, 3), Edge(3, 4), Edge(4, 5), Edge(5, 6)]
        chain += [Edge(i, i + 1) for i in range(6, n)]
        return chain + [Edge(2, 4)]
    if family == "F":
        return [Edge(1, 2), Edge(2, 3, 2, 2), Edge(3, 4)]
    if family == "G":
        return [Edge(1, 2, 3, 2)]
    raise DiagramError(f"unknown family {family!r}")


def parse_diagram(text: str) -> DynkinDiagram:
    """Parse a label such as ``A3``, ``g2`` or ``A2+B3``.

    Case and whitespace are not significant.  Components are numbered
    consecutively in the order written.
    """
    compact = "".join(text.split())
    if not compact:
        raise DiagramError("empty diagram label")
    offset = 0
    edges: list[Edge] = []
    for part in compact.split("+"):
        m = _LABEL_PART.fullmatch(part)
        if m is None:
            raise DiagramError(f"malformed component {part!r} in label {text!r}")
        family = m.group(1).upper()
        if family not in _RANK_RANGES:
            raise DiagramError(f"unknown family {family!r} in label {text!r}")
        rank = int(m.group(2))
        _check_rank(family, rank)
        for e in _family_edges(family, rank):
            long = None if e.long_node is None else e.long_node + offset
            edges.append(Edge(e.a + offset, e.b + offset, e.multiplicity, long))
        offset += rank
    return diagram_from_graph(offset, edges)


def diagram_from_cartan(entries: "CartanMatrix | Iterable[Iterable[int]]") -> DynkinDiagram:
    """Recover the diagram whose Cartan matrix equals ``entries``."""
    if isinstance(entries, CartanMatrix):
        matrix = entries
    else:
        matrix = CartanMatrix(tuple(tuple(int(x) for x in row) for row in entries))
    matrix.validate()
    n = matrix.rank
    edges = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            cij, cji = matrix.entry(i, j), matrix.entry(j, i)
            if cij == 0:
                continue
            mult = cij * cji
            if mult == 1:
                edges.append(Edge(i, j))
            else:
                # The long root pairs to -mult against the short coroot.
                long = i if cij == -mult else j
                edges.append(Edge(i, j, mult, long))
    return diagram_from_graph(n, edges)
