"""Shared helpers for the test suite."""

from flagbundles import DynkinDiagram, parse_diagram, root_system

_STARTS = {"A": 1, "B": 2, "C": 3, "D": 4}


def connected_labels(max_rank: int) -> list[str]:
    """Every connected diagram label with rank at most max_rank."""
    labels = []
    for family, start in _STARTS.items():
        labels.extend(f"{family}{r}" for r in range(start, max_rank + 1))
    labels.extend(f"E{r}" for r in (6, 7, 8) if r <= max_rank)
    if max_rank >= 4:
        labels.append("F4")
    if max_rank >= 2:
        labels.append("G2")
    return labels


def diagram(label: str) -> DynkinDiagram:
    return parse_diagram(label)


def roots_of(label: str):
    return root_system(parse_diagram(label))
