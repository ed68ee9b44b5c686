"""Branched covers compatible with a cuspidal factorization.

A generic degree-N cover of the plane branched over the described curve
corresponds to an epimorphism of the complement group onto the
symmetric group S_N sending every meridian generator to a transposition.
In factor terms, with (a, b) the meridian pair of a factor:

    branch (rho=1): the images of a and b are equal
    node   (rho=2): distinct transpositions with disjoint supports
    cusp   (rho=3): transpositions sharing exactly one point
                    (together they generate an S_3)

plus the projective relator x_1 ... x_{2d} -> identity, transitivity on
the N sheets and full S_N image. ``enumerate_reps`` lists the solutions
up to relabeling the sheets; ``chisini_guaranteed`` evaluates the exact
rational bound 4(3d + g - 1) / (2(3d + g - 1) - c) above which the
branch curve determines the covering.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations as iter_permutations

from .errors import DegenerateDegree, StrandMismatch
from .factorization import (
    CuspidalFactorization,
    curve_invariants,
    singularity_counts,
)
from .permutations import Permutation
from .vankampen import local_pair, projective_relator
from .words import FreeWord

ENUMERATION_SHEET_BOUND = 12
EXACT_DEDUP_BOUND = 8


@dataclass(frozen=True)
class MonodromyRep:
    """Images of the meridian generators x_1..x_{2d} in S_N."""

    images: tuple[Permutation, ...]

    @property
    def sheets(self) -> int:
        return self.images[0].size if self.images else 0

    def __str__(self) -> str:
        return ", ".join(f"x{i + 1} -> {p}" for i, p in enumerate(self.images))


@dataclass(frozen=True)
class ConditionReport:
    """Which cover conditions a candidate assignment satisfies."""

    transpositions: bool
    branch_pairs: bool
    node_pairs: bool
    cusp_pairs: bool
    projective: bool
    transitive: bool
    full_symmetric: bool
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def _support_components(images: tuple[Permutation, ...], n_points: int) -> list[set[int]]:
    parent = list(range(n_points + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in images:
        sup = sorted(p.support())
        for q in sup[1:]:
            ra, rb = find(sup[0]), find(q)
            if ra != rb:
                parent[ra] = rb
    comps: dict[int, set[int]] = {}
    for x in range(1, n_points + 1):
        comps.setdefault(find(x), set()).add(x)
    return list(comps.values())


def check_rep(F: CuspidalFactorization, rep: MonodromyRep) -> ConditionReport:
    """Evaluate every cover condition for ``rep`` against F.

    Works factor by factor on meridian pairs, so it does not need F to
    be verified; for a verified factorization the pair conditions kill
    every relator of the complement presentation.
    """
    if len(rep.images) != F.strands:
        raise StrandMismatch(
            f"need {F.strands} generator images, got {len(rep.images)}"
        )
    images = rep.images
    n_points = rep.sheets
    failures: list[str] = []

    transpositions = all(p.is_transposition() for p in images)
    if not transpositions:
        bad = [i + 1 for i, p in enumerate(images) if not p.is_transposition()]
        failures.append(f"non-transposition images at x{bad}")

    branch_ok = node_ok = cusp_ok = True
    for idx, f in enumerate(F.factors, start=1):
        a, b = local_pair(f)
        A = a.evaluate(images)
        B = b.evaluate(images)
        if f.rho == 1:
            if A != B:
                branch_ok = False
                failures.append(f"factor {idx}: branch images differ")
        elif f.rho == 2:
            if A == B or (A.support() & B.support()):
                node_ok = False
                failures.append(f"factor {idx}: node images not disjoint")
        else:
            shared = A.support() & B.support()
            if A == B or len(shared) != 1:
                cusp_ok = False
                failures.append(f"factor {idx}: cusp images do not span an S_3")

    projective = projective_relator(F.strands).evaluate(images).is_identity()
    if not projective:
        failures.append("projective relator does not map to the identity")

    comps = _support_components(images, n_points)
    transitive = len(comps) == 1
    if not transitive:
        failures.append(f"not transitive: sheet orbits {sorted(map(sorted, comps))}")

    # transpositions acting transitively generate the full S_N
    full_symmetric = transpositions and transitive
    if transpositions and not full_symmetric:
        failures.append("image subgroup is smaller than the symmetric group")

    return ConditionReport(
        transpositions=transpositions,
        branch_pairs=branch_ok,
        node_pairs=node_ok,
        cusp_pairs=cusp_ok,
        projective=projective,
        transitive=transitive,
        full_symmetric=full_symmetric,
        failures=tuple(failures),
    )


@dataclass(frozen=True)
class EnumerationResult:
    classes: tuple[MonodromyRep, ...]
    sheets: int
    dedup_exact: bool
    notes: tuple[str, ...]

    @property
    def count(self) -> int:
        return len(self.classes)


def _canonical_images(
    raw: tuple[tuple[int, ...], ...], sheets: int, exact: bool
) -> tuple[tuple[int, ...], ...]:
    """Lexicographically smallest relabeling of an image tuple.

    Exact by full search for small sheet counts; above that a greedy
    first-touch relabeling keeps the result deterministic."""
    if exact:
        best = None
        for sigma in iter_permutations(range(sheets)):
            inv = [0] * sheets
            for i, s in enumerate(sigma):
                inv[s] = i
            key = tuple(
                tuple(sigma[p[inv[j]]] for j in range(sheets)) for p in raw
            )
            if best is None or key < best:
                best = key
        assert best is not None
        return best
    order: list[int] = []
    seen = [False] * sheets
    for p in raw:
        for i, img in enumerate(p):
            if img != i:
                for point in (min(i, img), max(i, img)):
                    if not seen[point]:
                        seen[point] = True
                        order.append(point)
    for point in range(sheets):
        if not seen[point]:
            order.append(point)
    sigma = [0] * sheets
    for new, old in enumerate(order):
        sigma[old] = new
    inv = [0] * sheets
    for i, s in enumerate(sigma):
        inv[s] = i
    return tuple(tuple(sigma[p[inv[j]]] for j in range(sheets)) for p in raw)


def enumerate_reps(
    F: CuspidalFactorization, sheets: int, *, allow_large: bool = False
) -> EnumerationResult:
    """All cover monodromies onto S_sheets, one per relabeling class.

    Backtracks over transposition assignments to x_1..x_{2d}, fixing
    x_1 -> (1 2) to cut the symmetry, pruning each factor as soon as its
    meridian pair is fully assigned, and deduplicating by canonical
    relabeling (exact up to 8 sheets). Deterministic output order.
    """
    if sheets < 1:
        raise DegenerateDegree(f"sheet count must be positive, got {sheets}")
    if sheets > ENUMERATION_SHEET_BOUND and not allow_large:
        raise ValueError(
            f"sheet count {sheets} above the default bound "
            f"{ENUMERATION_SHEET_BOUND}; pass allow_large=True to override"
        )
    notes: list[str] = []
    if sheets == 1:
        return EnumerationResult(
            (), sheets, True, ("degenerate: a single sheet admits no branched cover",)
        )

    n = F.strands
    pairs = [local_pair(f) for f in F.factors]
    # letters appearing in each factor's meridian pair
    needs = [
        frozenset(abs(x) for x in a.letters) | frozenset(abs(x) for x in b.letters)
        for a, b in pairs
    ]
    check_at: dict[int, list[int]] = {}
    for idx, need in enumerate(needs):
        check_at.setdefault(max(need) if need else 1, []).append(idx)

    transpositions = [
        Permutation.transposition(sheets, a, b)
        for a in range(1, sheets + 1)
        for b in range(a + 1, sheets + 1)
    ]

    found: list[tuple[Permutation, ...]] = []
    images: list[Permutation] = []

    def partial_ok(k: int) -> bool:
        padded = tuple(images) + tuple(
            Permutation.identity(sheets) for _ in range(n - len(images))
        )
        for idx in check_at.get(k, ()):
            a, b = pairs[idx]
            A = a.evaluate(padded)
            B = b.evaluate(padded)
            rho = F.factors[idx].rho
            if rho == 1:
                if A != B:
                    return False
            elif rho == 2:
                if A == B or (A.support() & B.support()):
                    return False
            else:
                if A == B or len(A.support() & B.support()) != 1:
                    return False
        return True

    def backtrack(k: int) -> None:
        if k > n:
            candidate = MonodromyRep(tuple(images))
            if check_rep(F, candidate).ok:
                found.append(tuple(images))
            return
        options = (
            [Permutation.transposition(sheets, 1, 2)] if k == 1 else transpositions
        )
        for t in options:
            images.append(t)
            if partial_ok(k):
                backtrack(k + 1)
            images.pop()

    backtrack(1)

    exact = sheets <= EXACT_DEDUP_BOUND
    if not exact:
        notes.append(
            f"dedup above {EXACT_DEDUP_BOUND} sheets uses a greedy relabeling; "
            "class count may overcount"
        )
    canon = set()
    for imgs in found:
        raw = tuple(p.zero_based() for p in imgs)
        canon.add(_canonical_images(raw, sheets, exact))
    classes = tuple(
        MonodromyRep(tuple(Permutation.from_zero_based(p) for p in raw))
        for raw in sorted(canon)
    )
    return EnumerationResult(classes, sheets, exact, tuple(notes))


# --- numeric certificates ---------------------------------------------------


def euler_characteristic(sheets: int, genus: int, cusps: int, nodes: int) -> int:
    """Euler number of the smooth surface covering the plane with N
    sheets, branched over a curve of the given genus with c cusps and n
    nodes. N = 1 is the plane itself."""
    if sheets < 1:
        raise DegenerateDegree(f"sheet count must be positive, got {sheets}")
    if sheets == 1:
        return 3
    e_b = 2 - 2 * genus - nodes
    return (
        sheets * (3 - e_b)
        + (sheets - 1) * (e_b - cusps - nodes)
        + (cusps + nodes) * (sheets - 2)
    )


def chisini_bound(d, genus: int, cusps: int) -> Fraction | None:
    """The exact threshold 4(3d + g - 1) / (2(3d + g - 1) - c), or None
    when the denominator is not positive (bound not applicable)."""
    s = 3 * Fraction(d) + genus - 1
    denominator = 2 * s - cusps
    if denominator <= 0:
        return None
    return Fraction(4 * s, denominator)


@dataclass(frozen=True)
class ChisiniCertificate:
    """Exact rational certificate that the branch curve determines the
    cover: guaranteed iff applicable and sheets > threshold."""

    half_degree: Fraction
    genus: int
    cusps: int
    sheets: int
    applicable: bool
    threshold: Fraction | None
    guaranteed: bool


def chisini_guaranteed(d, genus: int, cusps: int, sheets: int) -> ChisiniCertificate:
    threshold = chisini_bound(d, genus, cusps)
    applicable = threshold is not None
    guaranteed = applicable and Fraction(sheets) > threshold
    return ChisiniCertificate(
        half_degree=Fraction(d),
        genus=genus,
        cusps=cusps,
        sheets=sheets,
        applicable=applicable,
        threshold=threshold,
        guaranteed=guaranteed,
    )


# --- combined report ---------------------------------------------------------


@dataclass(frozen=True)
class MorphismReport:
    degree: int
    genus: int
    branch: int
    nodes: int
    cusps: int
    sheets: int
    classes: tuple[MonodromyRep, ...]
    dedup_exact: bool
    certificate: ChisiniCertificate
    euler: int
    warnings: tuple[str, ...]

    @property
    def class_count(self) -> int:
        return len(self.classes)


def morphism_report(
    F: CuspidalFactorization, sheets: int, *, allow_large: bool = False
) -> MorphismReport:
    """Everything the cover question needs in one place: curve
    invariants, enumerated classes, the exact bound and the Euler number
    of the covering surface. Requires a verified factorization."""
    inv = curve_invariants(F)
    counts = singularity_counts(F)
    result = enumerate_reps(F, sheets, allow_large=allow_large)
    cert = chisini_guaranteed(Fraction(inv.degree, 2), inv.genus, inv.cusps, sheets)
    euler = euler_characteristic(sheets, inv.genus, inv.cusps, inv.nodes)
    warnings = list(result.notes)
    if inv.degree % 2:
        warnings.append(
            f"total degree {inv.degree} is odd: no even-degree model, "
            "half-degree invariants are fractional"
        )
    if not cert.applicable:
        warnings.append("bound not applicable: 2(3d + g - 1) - c is not positive")
    return MorphismReport(
        degree=inv.degree,
        genus=inv.genus,
        branch=counts.branch,
        nodes=counts.node,
        cusps=counts.cusp,
        sheets=sheets,
        classes=result.classes,
        dedup_exact=result.dedup_exact,
        certificate=cert,
        euler=euler,
        warnings=tuple(warnings),
    )
