"""Artin braid words and a Garside-normal-form solution to the word problem.

A braid word on n strands is an immutable sequence of signed letters:
+i is the Artin generator X_i crossing strands i and i+1, -i its
inverse, 1 <= i <= n-1. Words read left to right, and so does every
product in the package: ``compose(u, v)`` means "do u, then v", and the
permutation quotient composes the same way.

Equality of group elements is decided through the left-greedy normal
form Delta^p f_1 ... f_k, where Delta is the positive half twist and
each canonical factor f_j is a permutation braid. The form is computed
directly on permutation tuples (descent sets drive the pair
renormalization), so no symmetric-group tables are built and any strand
count is accepted. Desk-scale words normalize in milliseconds and the
results are memoized.

Conjugation follows the z^-1 w z convention throughout: ``conjugate(w, z)``
is ``invert(z) * w * z``.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .errors import DegenerateDegree, StrandMismatch
from .permutations import Permutation
from .words import FreeWord


@dataclass(frozen=True)
class BraidWord:
    """A word in the braid group on ``strands`` strands.

    Two BraidWord values are equal when they have the same letters;
    equality in the group is decided by :func:`equals`.
    """

    strands: int
    letters: tuple[int, ...]

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError("strand count must be at least 1")
        for x in self.letters:
            if x == 0 or abs(x) > self.strands - 1:
                raise ValueError(
                    f"letter {x} is not a generator index on {self.strands} strands"
                )
        object.__setattr__(self, "letters", tuple(self.letters))

    @classmethod
    def identity(cls, strands: int) -> "BraidWord":
        return cls(strands, ())

    @classmethod
    def generator(cls, strands: int, i: int) -> "BraidWord":
        return cls(strands, (i,))

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        return compose(self, other)

    def __len__(self) -> int:
        return len(self.letters)

    def inverse(self) -> "BraidWord":
        return invert(self)

    def __str__(self) -> str:
        if not self.letters:
            return "e"
        return " ".join(str(x) for x in self.letters)


def free_reduce(w: BraidWord) -> BraidWord:
    """Cancel adjacent inverse pairs until none remain."""
    out: list[int] = []
    for x in w.letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return BraidWord(w.strands, tuple(out))


def compose(u: BraidWord, v: BraidWord) -> BraidWord:
    """Concatenation: do u, then v."""
    if u.strands != v.strands:
        raise StrandMismatch(f"cannot compose words on {u.strands} and {v.strands} strands")
    return BraidWord(u.strands, u.letters + v.letters)


def invert(w: BraidWord) -> BraidWord:
    return BraidWord(w.strands, tuple(-x for x in reversed(w.letters)))


def conjugate(w: BraidWord, z: BraidWord) -> BraidWord:
    """z^-1 w z."""
    return compose(compose(invert(z), w), z)


def power(w: BraidWord, k: int) -> BraidWord:
    if k < 0:
        return power(invert(w), -k)
    return BraidWord(w.strands, w.letters * k)


def exponent_sum(w: BraidWord) -> int:
    """Image under the abelianization B_n -> Z; a conjugation invariant."""
    return sum(1 if x > 0 else -1 for x in w.letters)


def half_twist(n: int) -> BraidWord:
    """The positive half twist Delta on n strands.

    Letters (X_1 .. X_{n-1})(X_1 .. X_{n-2}) ... (X_1); its permutation
    is the order reversal.
    """
    if n < 2:
        raise DegenerateDegree("the half twist needs at least two strands")
    letters: list[int] = []
    for top in range(n - 1, 0, -1):
        letters.extend(range(1, top + 1))
    return BraidWord(n, tuple(letters))


def full_twist(n: int) -> BraidWord:
    """The full twist Delta^2 on n strands, (X_1 ... X_{n-1})^n.

    Generates the center of the braid group for n >= 3.
    """
    if n < 2:
        raise DegenerateDegree("the full twist needs at least two strands")
    return BraidWord(n, tuple(range(1, n)) * n)


# --- permutation quotient, on raw 0-based tuples -------------------------


def _raw_identity(n: int) -> tuple[int, ...]:
    return tuple(range(n))


def _raw_w0(n: int) -> tuple[int, ...]:
    return tuple(range(n - 1, -1, -1))


def _raw_mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    # apply a, then b
    return tuple(b[x] for x in a)


def _raw_tau(p: tuple[int, ...]) -> tuple[int, ...]:
    # w0 p w0: conjugation by the half twist on the quotient
    n = len(p)
    return tuple(n - 1 - p[n - 1 - i] for i in range(n))


def permutation_of(w: BraidWord) -> Permutation:
    """Strand permutation of w; letter signs do not matter."""
    n = w.strands
    images = list(range(n))
    for x in w.letters:
        i = abs(x) - 1
        # post-compose with the transposition of points i, i+1
        for k in range(n):
            if images[k] == i:
                images[k] = i + 1
            elif images[k] == i + 1:
                images[k] = i
    return Permutation.from_zero_based(images)


# --- left-greedy normal form ---------------------------------------------


def _renormalize_pair(
    u: tuple[int, ...], v: tuple[int, ...]
) -> tuple[tuple[int, ...], tuple[int, ...], bool]:
    """Slide initial letters of v onto the tail of u until the pair is
    left-greedy: every generator starting v must already end u."""
    n = len(u)
    ul = list(u)
    vl = list(v)
    upos = [0] * n
    for idx, val in enumerate(ul):
        upos[val] = idx
    moved = False
    again = True
    while again:
        again = False
        for i in range(1, n):
            # s_i starts v iff v has a descent at i; it ends u iff u^-1 does
            if vl[i - 1] > vl[i] and upos[i - 1] < upos[i]:
                pa, pb = upos[i - 1], upos[i]
                ul[pa], ul[pb] = i, i - 1
                upos[i - 1], upos[i] = pb, pa
                vl[i - 1], vl[i] = vl[i], vl[i - 1]
                moved = True
                again = True
    return tuple(ul), tuple(vl), moved


def _word_to_delta_factors(
    strands: int, letters: tuple[int, ...]
) -> tuple[int, list[tuple[int, ...]]]:
    """Rewrite a word as Delta^p (f_1 ... f_k) with permutation-braid
    factors, commuting all Delta powers to the front."""
    n = strands
    w0 = _raw_w0(n)
    items: list[tuple[str, object]] = []
    for x in letters:
        i = abs(x)
        si = list(range(n))
        si[i - 1], si[i] = i, i - 1
        si_t = tuple(si)
        if x > 0:
            items.append(("f", si_t))
        else:
            # X_i^-1 = Delta^-1 (Delta X_i^-1); the parenthesized braid is
            # positive with permutation w0 s_i
            items.append(("d", -1))
            items.append(("f", _raw_mul(w0, si_t)))
    delta = 0
    suffix = 0
    factors_rev: list[tuple[int, ...]] = []
    for kind, val in reversed(items):
        if kind == "d":
            suffix += val  # type: ignore[operator]
            delta += val  # type: ignore[operator]
        else:
            p = val  # type: ignore[assignment]
            factors_rev.append(_raw_tau(p) if suffix % 2 else p)  # type: ignore[arg-type]
    factors_rev.reverse()
    return delta, factors_rev


def _left_greedy(delta: int, factors: list[tuple[int, ...]], n: int) -> tuple[int, tuple[tuple[int, ...], ...]]:
    ident = _raw_identity(n)
    w0 = _raw_w0(n)
    fs = [f for f in factors if f != ident]
    changed = True
    while changed:
        changed = False
        for k in range(len(fs) - 1):
            nu, nv, moved = _renormalize_pair(fs[k], fs[k + 1])
            if moved:
                fs[k], fs[k + 1] = nu, nv
                changed = True
        pruned = [f for f in fs if f != ident]
        if len(pruned) != len(fs):
            fs = pruned
            changed = True
        while fs and fs[0] == w0:
            fs.pop(0)
            delta += 1
            changed = True
    return delta, tuple(fs)


@functools.lru_cache(maxsize=1 << 17)
def _garside_cached(strands: int, letters: tuple[int, ...]) -> tuple[int, tuple[tuple[int, ...], ...]]:
    delta, factors = _word_to_delta_factors(strands, letters)
    return _left_greedy(delta, factors, strands)


@dataclass(frozen=True)
class GarsideNormalForm:
    """Left-greedy form Delta^power f_1 ... f_k; unique per group element."""

    strands: int
    power: int
    factors: tuple[tuple[int, ...], ...]

    def canonical_length(self) -> int:
        return len(self.factors)

    def __str__(self) -> str:
        parts = []
        if self.power:
            parts.append(f"D^{self.power}" if self.power != 1 else "D")
        for f in self.factors:
            parts.append("[" + " ".join(str(x + 1) for x in f) + "]")
        return " . ".join(parts) if parts else "e"


def normal_form(w: BraidWord) -> GarsideNormalForm:
    delta, factors = _garside_cached(w.strands, w.letters)
    return GarsideNormalForm(w.strands, delta, factors)


def garside_key(w: BraidWord) -> tuple:
    """Hashable canonical key; two words get the same key iff they are
    equal in the braid group."""
    delta, factors = _garside_cached(w.strands, w.letters)
    return (w.strands, delta, factors)


def equals(u: BraidWord, v: BraidWord) -> bool:
    """Group equality, decided by normal form."""
    if u.strands != v.strands:
        raise StrandMismatch(f"comparing words on {u.strands} and {v.strands} strands")
    if u.letters == v.letters:
        return True
    if exponent_sum(u) != exponent_sum(v):
        return False
    if permutation_of(u) != permutation_of(v):
        return False
    return garside_key(u) == garside_key(v)


def is_trivial(w: BraidWord) -> bool:
    return garside_key(w) == (w.strands, 0, ())


def is_central(w: BraidWord) -> bool:
    """Whether w commutes with every generator."""
    for i in range(1, w.strands):
        g = BraidWord.generator(w.strands, i)
        if not equals(compose(w, g), compose(g, w)):
            return False
    return True


# --- action on the free group ---------------------------------------------


def _act_letter(letters: list[int], i: int, inverse: bool) -> list[int]:
    out: list[int] = []

    def push(y: int) -> None:
        if out and out[-1] == -y:
            out.pop()
        else:
            out.append(y)

    for x in letters:
        g = abs(x)
        if not inverse:
            if g == i:
                seq = (i, i + 1, -i) if x > 0 else (i, -(i + 1), -i)
            elif g == i + 1:
                seq = (i,) if x > 0 else (-i,)
            else:
                seq = (x,)
        else:
            if g == i:
                seq = (i + 1,) if x > 0 else (-(i + 1),)
            elif g == i + 1:
                seq = (-(i + 1), i, i + 1) if x > 0 else (-(i + 1), -i, i + 1)
            else:
                seq = (x,)
        for y in seq:
            push(y)
    return out


def artin_action(b: BraidWord, w: FreeWord) -> FreeWord:
    """Apply the braid b to the free word w, letter by letter, left to
    right. Generator X_i sends x_i to x_i x_{i+1} x_i^-1 and x_{i+1} to
    x_i, fixing the rest; an inverse letter applies the inverse
    substitution. The result is freely reduced.
    """
    if b.strands != w.rank:
        raise StrandMismatch(
            f"braid on {b.strands} strands cannot act on rank-{w.rank} words"
        )
    cur = list(w.letters)
    for x in b.letters:
        cur = _act_letter(cur, abs(x), inverse=x < 0)
    return FreeWord(w.rank, tuple(cur))
