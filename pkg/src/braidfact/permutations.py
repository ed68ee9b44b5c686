"""Permutations of {1..size} with left-to-right composition.

The product ``p * q`` means "apply p first, then q", matching the way
braid words and monodromy factorizations read left to right everywhere
else in the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..size}; ``images[k]`` is the image of k+1."""

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {self.images!r}")

    @property
    def size(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, size: int) -> "Permutation":
        return cls(tuple(range(1, size + 1)))

    @classmethod
    def transposition(cls, size: int, a: int, b: int) -> "Permutation":
        if not (1 <= a <= size and 1 <= b <= size and a != b):
            raise ValueError(f"bad transposition ({a} {b}) on {size} points")
        images = list(range(1, size + 1))
        images[a - 1], images[b - 1] = b, a
        return cls(tuple(images))

    @classmethod
    def from_zero_based(cls, raw: Iterable[int]) -> "Permutation":
        return cls(tuple(x + 1 for x in raw))

    def zero_based(self) -> tuple[int, ...]:
        return tuple(x - 1 for x in self.images)

    def apply(self, point: int) -> int:
        return self.images[point - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        # apply self, then other
        if self.size != other.size:
            raise ValueError("size mismatch in permutation product")
        return Permutation(tuple(other.images[x - 1] for x in self.images))

    def inverse(self) -> "Permutation":
        out = [0] * self.size
        for i, x in enumerate(self.images):
            out[x - 1] = i + 1
        return Permutation(tuple(out))

    def conjugated(self, by: "Permutation") -> "Permutation":
        """by^-1 * self * by, the relabeling of self along ``by``."""
        return by.inverse() * self * by

    def is_identity(self) -> bool:
        return all(x == i + 1 for i, x in enumerate(self.images))

    def support(self) -> frozenset[int]:
        return frozenset(i + 1 for i, x in enumerate(self.images) if x != i + 1)

    def is_transposition(self) -> bool:
        return len(self.support()) == 2

    def as_transposition(self) -> tuple[int, int]:
        sup = sorted(self.support())
        if len(sup) != 2:
            raise ValueError(f"not a transposition: {self}")
        return (sup[0], sup[1])

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each rotated to start at its least point."""
        seen = [False] * self.size
        out = []
        for start in range(1, self.size + 1):
            if seen[start - 1]:
                continue
            cyc = []
            p = start
            while not seen[p - 1]:
                seen[p - 1] = True
                cyc.append(p)
                p = self.images[p - 1]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        """Cycle lengths including fixed points, sorted descending."""
        lengths = [len(c) for c in self.cycles()]
        lengths += [1] * (self.size - sum(lengths))
        return tuple(sorted(lengths, reverse=True))

    def order(self) -> int:
        from math import lcm

        return lcm(1, *(len(c) for c in self.cycles()))

    def __str__(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(str(p) for p in c) + ")" for c in cycs)


def generated_subgroup_order(perms: Iterable[Permutation], limit: int = 10_000_000) -> int:
    """Order of the subgroup generated by ``perms``, by closure walk."""
    gens = [p for p in perms]
    if not gens:
        return 1
    size = gens[0].size
    seen = {Permutation.identity(size).images}
    frontier = [Permutation.identity(size)]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = p * g
                if q.images not in seen:
                    seen.add(q.images)
                    nxt.append(q)
                    if len(seen) > limit:
                        raise OrbitSizeError(f"subgroup larger than {limit}")
        frontier = nxt
    return len(seen)


class OrbitSizeError(ValueError):
    pass


def all_permutations(size: int) -> Iterator[Permutation]:
    from itertools import permutations as iperm

    for images in iperm(range(1, size + 1)):
        yield Permutation(images)
