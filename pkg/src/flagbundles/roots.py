"""Positive root systems attached to a Dynkin diagram.

Roots are stored as non-negative coefficient vectors over the simple
roots.  Generation proceeds by height induction: a candidate beta+alpha_i
is accepted exactly when p - pairing(beta, i) > 0, where p counts how far
the string beta, beta-alpha_i, ... stays inside the system.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable

from .dynkin import CartanMatrix, DynkinDiagram

__all__ = ["Root", "RootSystem", "RootGenerationError", "root_system"]


class RootGenerationError(RuntimeError):
    """Raised when generation overruns its safety bound."""


@dataclass(frozen=True, slots=True)
class Root:
    coeffs: tuple[int, ...]
    height: int
    support: tuple[int, ...]

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int]) -> "Root":
        t = tuple(int(c) for c in coeffs)
        return cls(t, sum(t), tuple(i for i, c in enumerate(t, start=1) if c))

    def __post_init__(self) -> None:
        if any(c < 0 for c in self.coeffs) or not any(self.coeffs):
            raise ValueError(f"coefficients must be non-negative and not all zero: {self.coeffs}")
        if self.height != sum(self.coeffs):
            raise ValueError("height disagrees with the coefficients")
        if self.support != tuple(i for i, c in enumerate(self.coeffs, start=1) if c):
            raise ValueError("support disagrees with the coefficients")

    def coeff(self, i: int) -> int:
        """Coefficient on node i (1-based)."""
        return self.coeffs[i - 1]

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.coeffs) + ")"


def _height_lex_key(coeffs: tuple[int, ...]) -> tuple:
    return (sum(coeffs), tuple(-c for c in coeffs))


def _generate(cartan: CartanMatrix) -> list[tuple[int, ...]]:
    n = cartan.rank
    if n == 0:
        return []
    limit = 10 * n * n
    rows = cartan.entries
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    found: set[tuple[int, ...]] = set(simple)
    layer = simple
    while layer:
        grown: set[tuple[int, ...]] = set()
        for beta in layer:
            for i in range(n):
                pairing = sum(a * rows[j][i] for j, a in enumerate(beta) if a)
                # p = how many steps beta - k*alpha_i stays a root (or hits zero).
                p = 0
                k = 1
                while True:
                    ai = beta[i] - k
                    if ai < 0:
                        break
                    lower = beta[:i] + (ai,) + beta[i + 1 :]
                    if lower in found:
                        p = k
                        k += 1
                        continue
                    if not any(lower):
                        p = k
                    break
                if p - pairing > 0:
                    cand = beta[:i] + (beta[i] + 1,) + beta[i + 1 :]
                    if cand not in found:
                        grown.add(cand)
        found |= grown
        if len(found) > limit:
            raise RootGenerationError(f"root generation exceeded {limit} candidates; Cartan data is not finite type")
        layer = sorted(grown)
    return sorted(found, key=_height_lex_key)


@dataclass(frozen=True)
class RootSystem:
    """The positive roots of a diagram, in height-then-lex order."""

    diagram: DynkinDiagram
    cartan: CartanMatrix
    roots: tuple[Root, ...]

    def __len__(self) -> int:
        return len(self.roots)

    @cached_property
    def _positions(self) -> dict[tuple[int, ...], int]:
        return {r.coeffs: k for k, r in enumerate(self.roots)}

    def contains(self, coeffs: Iterable[int]) -> bool:
        return tuple(coeffs) in self._positions

    def phi_plus(self, subset: Iterable[int]) -> tuple[Root, ...]:
        """Roots supported inside ``subset``, in system order."""
        allowed = set(subset)
        return tuple(r for r in self.roots if allowed.issuperset(r.support))

    def nilradical_weights(self, subset: Iterable[int]) -> tuple[Root, ...]:
        """Roots with support not contained in ``subset``.

        These are the positive representatives; the corresponding bundle
        weights are their negatives.
        """
        allowed = set(subset)
        return tuple(r for r in self.roots if not allowed.issuperset(r.support))

    def pairing(self, root: Root, j: int) -> int:
        """Intersection of ``root`` against the fiber class of node j."""
        return self.cartan.pairing(root.coeffs, j)

    @cached_property
    def anticanonical(self) -> tuple[int, ...]:
        """Coefficient vector of the sum of all positive roots."""
        return tuple(sum(col) for col in zip(*(r.coeffs for r in self.roots))) if self.roots else ()

    def longest_word(self) -> tuple[int, ...]:
        """A reduced word for the longest Weyl element.

        Grown left to right; each step appends the smallest index whose
        simple root the word built so far still sends to a positive root.
        """
        n = self.diagram.rank
        rows = self.cartan.entries
        images = [[1 if j == i else 0 for j in range(n)] for i in range(n)]
        word: list[int] = []
        for _ in range(len(self.roots)):
            pick = next(i for i in range(n) if any(c > 0 for c in images[i]))
            base = images[pick]
            for j in range(n):
                if j == pick:
                    continue
                c = rows[j][pick]
                if c:
                    images[j] = [x - c * y for x, y in zip(images[j], base)]
            images[pick] = [-x for x in base]
            word.append(pick + 1)
        return tuple(word)


@lru_cache(maxsize=None)
def root_system(diagram: DynkinDiagram) -> RootSystem:
    cartan = diagram.cartan
    roots = tuple(Root.from_coeffs(c) for c in _generate(cartan))
    return RootSystem(diagram, cartan, roots)
