"""Freely reduced words in a free group of fixed rank.

Letter +i stands for the i-th generator, -i for its inverse, 1-based.
Words are stored freely reduced; construction reduces its input, so
equality of values is equality in the free group.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .permutations import Permutation


def _reduce(letters: Iterable[int]) -> tuple[int, ...]:
    out: list[int] = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


@dataclass(frozen=True)
class FreeWord:
    rank: int
    letters: tuple[int, ...]

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("negative rank")
        for x in self.letters:
            if x == 0 or abs(x) > self.rank:
                raise ValueError(f"letter {x} outside rank {self.rank}")
        object.__setattr__(self, "letters", _reduce(self.letters))

    @classmethod
    def generator(cls, rank: int, i: int) -> "FreeWord":
        return cls(rank, (i,))

    @classmethod
    def identity(cls, rank: int) -> "FreeWord":
        return cls(rank, ())

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        if self.rank != other.rank:
            raise ValueError("rank mismatch")
        return FreeWord(self.rank, self.letters + other.letters)

    def inverse(self) -> "FreeWord":
        return FreeWord(self.rank, tuple(-x for x in reversed(self.letters)))

    def is_identity(self) -> bool:
        return not self.letters

    def __len__(self) -> int:
        return len(self.letters)

    def total_exponent(self) -> int:
        return sum(1 if x > 0 else -1 for x in self.letters)

    def exponent_vector(self) -> tuple[int, ...]:
        """Abelianized image: exponent sum per generator."""
        vec = [0] * self.rank
        for x in self.letters:
            vec[abs(x) - 1] += 1 if x > 0 else -1
        return tuple(vec)

    def evaluate(self, images: Sequence[Permutation]) -> Permutation:
        """Image under the homomorphism sending generator i to images[i-1]."""
        if len(images) != self.rank:
            raise ValueError(f"need {self.rank} images, got {len(images)}")
        size = images[0].size if images else 1
        acc = Permutation.identity(size)
        for x in self.letters:
            p = images[abs(x) - 1]
            acc = acc * (p if x > 0 else p.inverse())
        return acc

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        parts = []
        for x in self.letters:
            parts.append(f"x{x}" if x > 0 else f"x{-x}^-1")
        return " ".join(parts)
