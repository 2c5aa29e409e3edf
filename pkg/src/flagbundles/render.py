"""Plain-text diagram pictures and their exact inverse parser.

Each connected component becomes a three-row block: tag values, the node
row, node indices.  Branched families add a three-row header for the
branch node above its attachment column.  A double or triple bond is
drawn as an arrow pointing at the short root.  Blocks are separated by a
single blank line and every line is stripped of trailing spaces, so
rendering and parsing are mutually inverse.
"""

from __future__ import annotations

import re

from .dynkin import Component, DiagramError, DynkinDiagram, Edge, diagram_from_graph
from .tagging import Tag

__all__ = ["render_diagram", "parse_rendered"]

_SEPARATORS = {
    (1, "none"): "---",
    (2, "left"): "==>",
    (2, "right"): "<==",
    (3, "left"): "≡≡>",
    (3, "right"): "<≡≡",
}
_SEPARATOR_PATTERNS = [
    (re.compile(r"-+"), (1, "none")),
    (re.compile(r"=+>"), (2, "left")),
    (re.compile(r"<=+"), (2, "right")),
    (re.compile(r"≡+>"), (3, "left")),
    (re.compile(r"<≡+"), (3, "right")),
]


def _stretch(separator: str, span: int) -> str:
    """Widen a bond to ``span`` columns, keeping any arrowhead at its end."""
    if separator.endswith(">"):
        return separator[1] * (span - 1) + ">"
    if separator.startswith("<"):
        return "<" + separator[1] * (span - 1)
    return separator[0] * span


def _chain_and_branch(comp: Component) -> tuple[list[int], int | None, int | None]:
    """Linear node order plus (branch node, attach position) for D and E."""
    nodes = list(comp.nodes)
    if comp.family == "D":
        return nodes[:-1], nodes[-1], comp.rank - 3
    if comp.family == "E":
        return [nodes[0], *nodes[2:]], nodes[1], 2
    return nodes, None, None


def _separator(diagram: DynkinDiagram, left: int, right: int) -> str:
    edge = diagram.edge_between(left, right)
    if edge is None:
        raise DiagramError(f"nodes {left} and {right} are not adjacent")
    if edge.multiplicity == 1:
        side = "none"
    else:
        side = "left" if edge.long_node == left else "right"
    return _SEPARATORS[(edge.multiplicity, side)]


def render_diagram(diagram: DynkinDiagram, tag: Tag) -> str:
    """Draw the tagged diagram, one block per connected component."""
    if len(tag) != diagram.rank:
        raise ValueError(f"tag length {len(tag)} does not match diagram rank {diagram.rank}")
    blocks = []
    for comp in diagram.components:
        chain, branch, attach = _chain_and_branch(comp)
        cells = []
        for node in chain:
            tag_text = str(tag.value(node))
            idx_text = str(node)
            cells.append((tag_text, idx_text, max(len(tag_text), len(idx_text), 1)))
        tag_row, node_row, idx_row = [], [], []
        columns = []
        position = 0
        for k, (node, (tag_text, idx_text, width)) in enumerate(zip(chain, cells)):
            columns.append(position)
            if k + 1 < len(chain):
                # the bond spans the label width so node circles stay attached
                sep = _stretch(_separator(diagram, chain[k], chain[k + 1]), width + 2)
            else:
                sep = ""
            cell = 1 + len(sep)
            tag_row.append(tag_text.ljust(cell))
            node_row.append("o" + sep)
            idx_row.append(idx_text.ljust(cell))
            position += cell
        lines = ["".join(tag_row), "".join(node_row), "".join(idx_row)]
        if branch is not None:
            pad = " " * columns[attach]
            lines = [
                pad + str(tag.value(branch)),
                pad + "o " + str(branch),
                pad + "|",
                *lines,
            ]
        blocks.append("\n".join(line.rstrip() for line in lines))
    return "\n\n".join(blocks)


def _token(row: str, column: int, what: str) -> str:
    match = re.match(r"\S+", row[column:])
    if match is None:
        raise ValueError(f"expected {what} at column {column} of {row!r}")
    return match.group(0)


def _check_covered(row: str, spans: list[tuple[int, int]], what: str) -> None:
    for p, ch in enumerate(row):
        if ch != " " and not any(a <= p < b for a, b in spans):
            raise ValueError(f"stray text {ch!r} at column {p} of {what} row {row!r}")


def _int_token(row: str, column: int, what: str) -> int:
    text = _token(row, column, what)
    try:
        return int(text)
    except ValueError:
        raise ValueError(f"{what} {text!r} is not an integer") from None


def parse_rendered(text: str) -> tuple[DynkinDiagram, Tag]:
    """Inverse of :func:`render_diagram`."""
    blocks: list[list[str]] = []
    current: list[str] = []
    for line in text.splitlines():
        if line.strip():
            current.append(line)
        elif current:
            blocks.append(current)
            current = []
    if current:
        blocks.append(current)
    if not blocks:
        raise ValueError("empty rendering")

    tags: dict[int, int] = {}
    edges: list[Edge] = []

    def add_edge(a: int, b: int, multiplicity: int, long_side: str) -> None:
        long_node = None
        if multiplicity > 1:
            long_node = a if long_side == "left" else b
        lo, hi = min(a, b), max(a, b)
        edges.append(Edge(lo, hi, multiplicity, long_node))

    for block in blocks:
        if len(block) == 3:
            branch_rows = None
            tag_row, node_row, idx_row = block
        elif len(block) == 6:
            branch_rows = block[:3]
            tag_row, node_row, idx_row = block[3:]
        else:
            raise ValueError(f"component block must have 3 or 6 lines, got {len(block)}")

        node_columns = [m.start() for m in re.finditer("o", node_row)]
        if not node_columns:
            raise ValueError(f"no nodes in row {node_row!r}")
        indices = [_int_token(idx_row, c, "node index") for c in node_columns]
        tag_spans, idx_spans = [], []
        for column, index in zip(node_columns, indices):
            value = _int_token(tag_row, column, "tag value")
            if value < 0:
                raise ValueError(f"tag value {value} is negative")
            if index in tags:
                raise ValueError(f"node {index} appears twice")
            tags[index] = value
            tag_spans.append((column, column + len(str(value))))
            idx_spans.append((column, column + len(str(index))))
        _check_covered(tag_row, tag_spans, "tag")
        _check_covered(idx_row, idx_spans, "index")
        _check_covered(node_row, [(node_columns[0], node_columns[-1] + 1)], "node")
        for k in range(len(node_columns) - 1):
            segment = node_row[node_columns[k] + 1 : node_columns[k + 1]]
            match = next(
                (key for pattern, key in _SEPARATOR_PATTERNS if pattern.fullmatch(segment)),
                None,
            )
            if match is None:
                raise ValueError(f"unrecognized bond {segment!r}")
            multiplicity, side = match
            add_edge(indices[k], indices[k + 1], multiplicity, side)

        if branch_rows is not None:
            branch_tag_row, branch_node_row, bar_row = branch_rows
            branch_columns = [m.start() for m in re.finditer("o", branch_node_row)]
            if len(branch_columns) != 1:
                raise ValueError(f"branch row {branch_node_row!r} must hold exactly one node")
            column = branch_columns[0]
            if bar_row.strip() != "|" or bar_row.index("|") != column:
                raise ValueError("branch bar must sit directly under the branch node")
            if column not in node_columns:
                raise ValueError("branch node is not above any chain node")
            branch_index = _int_token(branch_node_row, column + 2, "branch index")
            value = _int_token(branch_tag_row, column, "tag value")
            if value < 0:
                raise ValueError(f"tag value {value} is negative")
            _check_covered(branch_tag_row, [(column, column + len(str(value)))], "branch tag")
            _check_covered(
                branch_node_row,
                [(column, column + 1), (column + 2, column + 2 + len(str(branch_index)))],
                "branch node",
            )
            if branch_index in tags:
                raise ValueError(f"node {branch_index} appears twice")
            tags[branch_index] = value
            attach_index = indices[node_columns.index(column)]
            add_edge(branch_index, attach_index, 1, "none")

    rank = len(tags)
    if sorted(tags) != list(range(1, rank + 1)):
        raise ValueError(f"node indices must cover 1..{rank}, got {sorted(tags)}")
    diagram = diagram_from_graph(rank, edges)
    return diagram, Tag(tuple(tags[i] for i in range(1, rank + 1)))
