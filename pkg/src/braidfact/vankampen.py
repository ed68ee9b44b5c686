"""Presentations of the fundamental group of a plane-curve complement.

A verified factorization on 2d strands presents pi_1 of the complement
of the described degree-2d curve on generators x_1..x_{2d}, one per
strand. Each factor (Q, rho) contributes one relator in the pair
(a, b) = (Q.x_1, Q.x_2), the images of x_1, x_2 under the action of the
conjugator:

    rho = 1 (branch): a b^-1          so a = b
    rho = 2 (node):   a b a^-1 b^-1   so a, b commute
    rho = 3 (cusp):   a b a (b a b)^-1

plus one projective relator x_1 x_2 ... x_{2d}. The pair relators have
the same normal closure as the full relator set {beta(x_j) x_j^-1} of
the factor braid beta = Q^-1 X_1^rho Q, which :func:`full_presentation`
spells out for cross-checking.

Abelianization works in exact integers through the Smith form of the
relator exponent matrix. For an irreducible curve of degree m the
result is cyclic of order m.
"""

from __future__ import annotations

from dataclasses import dataclass

from .braids import artin_action
from .errors import UnverifiedFactorization
from .factorization import (
    CuspidalFactor,
    CuspidalFactorization,
    verify_full_twist,
)
from .words import FreeWord


@dataclass(frozen=True)
class GroupPresentation:
    """Finitely presented group: generator count and relator words."""

    generators: int
    relators: tuple[FreeWord, ...]

    def __post_init__(self):
        for r in self.relators:
            if r.rank != self.generators:
                raise ValueError("relator rank differs from generator count")


def local_pair(f: CuspidalFactor) -> tuple[FreeWord, FreeWord]:
    """The meridian pair (a, b) of a factor: images of x_1 and x_2 under
    the conjugator's action."""
    n = f.strands
    a = artin_action(f.conjugator, FreeWord.generator(n, 1))
    b = artin_action(f.conjugator, FreeWord.generator(n, 2))
    return a, b


def factor_relator(f: CuspidalFactor) -> FreeWord:
    a, b = local_pair(f)
    if f.rho == 1:
        return a * b.inverse()
    if f.rho == 2:
        return a * b * a.inverse() * b.inverse()
    return a * b * a * (b * a * b).inverse()


def projective_relator(strands: int) -> FreeWord:
    return FreeWord(strands, tuple(range(1, strands + 1)))


def presentation(F: CuspidalFactorization) -> GroupPresentation:
    """One relator per factor plus the projective relator."""
    if not verify_full_twist(F):
        raise UnverifiedFactorization(
            "factor product is not the full twist; the complement presentation needs one"
        )
    relators = tuple(factor_relator(f) for f in F.factors)
    return GroupPresentation(F.strands, relators + (projective_relator(F.strands),))


def full_presentation(F: CuspidalFactorization) -> GroupPresentation:
    """Every monodromy relator beta(x_j) x_j^-1 of every factor braid.

    Redundant but direct; same group as :func:`presentation`.
    """
    if not verify_full_twist(F):
        raise UnverifiedFactorization(
            "factor product is not the full twist; the complement presentation needs one"
        )
    n = F.strands
    relators = []
    for f in F.factors:
        beta = f.braid()
        for j in range(1, n + 1):
            xj = FreeWord.generator(n, j)
            rel = artin_action(beta, xj) * xj.inverse()
            if not rel.is_identity():
                relators.append(rel)
    relators.append(projective_relator(n))
    return GroupPresentation(n, tuple(relators))


# --- abelianization ---------------------------------------------------------


def smith_diagonal(matrix: list[list[int]]) -> list[int]:
    """Nonzero diagonal of the Smith form of an integer matrix, each
    entry positive and dividing the next. Exact integer arithmetic."""
    A = [list(row) for row in matrix]
    m = len(A)
    n = len(A[0]) if m else 0
    diag: list[int] = []
    t = 0
    while t < m and t < n:
        # pivot: smallest nonzero magnitude in the working block
        pivot = None
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = abs(A[i][j])
                if v and (best is None or v < best):
                    best, pivot = v, (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        A[t], A[pi] = A[pi], A[t]
        for row in A:
            row[t], row[pj] = row[pj], row[t]
        while True:
            # euclidean reduction of column t then row t
            reduced = True
            for i in range(t + 1, m):
                if A[i][t]:
                    q = A[i][t] // A[t][t]
                    if q:
                        A[i] = [a - q * b for a, b in zip(A[i], A[t])]
                    if A[i][t]:
                        A[t], A[i] = A[i], A[t]
                        reduced = False
            for j in range(t + 1, n):
                if A[t][j]:
                    q = A[t][j] // A[t][t]
                    if q:
                        for row in A:
                            row[j] -= q * row[t]
                    if A[t][j]:
                        for row in A:
                            row[t], row[j] = row[j], row[t]
                        reduced = False
            if reduced:
                break
        # divisibility: the pivot must divide everything below and right
        d = abs(A[t][t])
        offender = None
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if A[i][j] % d:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            A[t] = [a + b for a, b in zip(A[t], A[offender])]
            continue
        A[t][t] = d
        diag.append(d)
        t += 1
    return diag


@dataclass(frozen=True)
class AbelianInvariants:
    """H as Z^free_rank x Z/t_1 x ... with t_1 | t_2 | ... (Smith form)."""

    free_rank: int
    torsion: tuple[int, ...]

    def is_cyclic_of_order(self, m: int) -> bool:
        return self.free_rank == 0 and self.torsion == (m,)

    def __str__(self) -> str:
        parts = ["Z"] * self.free_rank + [f"Z/{t}" for t in self.torsion]
        return " x ".join(parts) if parts else "0"


def abelianization(P: GroupPresentation) -> AbelianInvariants:
    """Invariants of the abelianized group, from the Smith form of the
    relator exponent matrix. Canonical: independent of relator order."""
    if not P.relators:
        return AbelianInvariants(free_rank=P.generators, torsion=())
    matrix = [list(r.exponent_vector()) for r in P.relators]
    diag = smith_diagonal(matrix)
    free_rank = P.generators - len(diag)
    torsion = tuple(d for d in diag if d > 1)
    return AbelianInvariants(free_rank=free_rank, torsion=torsion)


# --- safe Tietze simplification ---------------------------------------------


def _substitute(word: FreeWord, gen: int, repl: FreeWord) -> FreeWord:
    """Replace generator ``gen`` by ``repl`` (which must not use it),
    then renumber generators above ``gen`` down by one."""
    out: list[int] = []
    for x in word.letters:
        g = abs(x)
        if g == gen:
            src = repl.letters if x > 0 else repl.inverse().letters
            out.extend(src)
        else:
            out.append(x)
    shifted = tuple(x - 1 if x > gen else (x + 1 if x < -gen else x) for x in out)
    return FreeWord(word.rank - 1, shifted)


def _cyclic_reduce(word: FreeWord) -> FreeWord:
    letters = list(word.letters)
    while len(letters) >= 2 and letters[0] == -letters[-1]:
        letters = letters[1:-1]
    return FreeWord(word.rank, tuple(letters))


def simplify(P: GroupPresentation) -> GroupPresentation:
    """Shrink a presentation by safe Tietze steps only: drop trivial and
    duplicate relators, cyclically reduce, and eliminate a generator
    when some relator uses it exactly once. The group is unchanged;
    deterministic and idempotent."""
    gens = P.generators
    relators = [_cyclic_reduce(r) for r in P.relators]
    while True:
        cleaned: list[FreeWord] = []
        seen: set[tuple[int, ...]] = set()
        for r in relators:
            if r.is_identity():
                continue
            if r.letters in seen or r.inverse().letters in seen:
                continue
            seen.add(r.letters)
            cleaned.append(r)
        relators = cleaned

        target: tuple[int, FreeWord, int] | None = None
        for idx, r in enumerate(relators):
            counts: dict[int, int] = {}
            for x in r.letters:
                counts[abs(x)] = counts.get(abs(x), 0) + 1
            once = [g for g, c in counts.items() if c == 1]
            if once:
                target = (idx, r, max(once))
                break
        if target is None:
            break
        idx, rel, gen = target
        pos = next(k for k, x in enumerate(rel.letters) if abs(x) == gen)
        sign = 1 if rel.letters[pos] > 0 else -1
        prefix = FreeWord(gens, rel.letters[:pos])
        suffix = FreeWord(gens, rel.letters[pos + 1 :])
        # rel = p g^s q = 1  =>  g^s = p^-1 q^-1
        solved = prefix.inverse() * suffix.inverse()
        if sign < 0:
            solved = solved.inverse()
        rest = relators[:idx] + relators[idx + 1 :]
        relators = [_cyclic_reduce(_substitute(r, gen, solved)) for r in rest]
        gens -= 1
    return GroupPresentation(gens, tuple(relators))


# --- irreducibility ----------------------------------------------------------


@dataclass(frozen=True)
class IrreducibilityReport:
    """Connectivity of the strand graph drawn by branch and cusp factors.

    Each rho in {1, 3} factor's permutation is a transposition; its two
    strands get an edge (nodes act trivially on strands). The curve is
    irreducible exactly when the graph connects all strands; otherwise
    the components list the strand sets of the curve's components.
    """

    irreducible: bool
    components: tuple[tuple[int, ...], ...]


def irreducibility_check(F: CuspidalFactorization) -> IrreducibilityReport:
    from .braids import permutation_of

    n = F.strands
    parent = list(range(n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for f in F.factors:
        perm = permutation_of(f.braid())
        sup = sorted(perm.support())
        if len(sup) == 2:
            ra, rb = find(sup[0]), find(sup[1])
            if ra != rb:
                parent[ra] = rb
    groups: dict[int, list[int]] = {}
    for s in range(1, n + 1):
        groups.setdefault(find(s), []).append(s)
    components = tuple(sorted(tuple(sorted(g)) for g in groups.values()))
    return IrreducibilityReport(irreducible=len(components) == 1, components=components)
