"""Cuspidal factorizations of the full twist.

A factorization on 2d strands is an ordered tuple of factors
Q^-1 X_1^rho Q with rho in {1, 2, 3}, standing for a branch point, a
node and a cusp of a plane curve of degree 2d. The factorization is
*verified* when the product of its factors equals the full twist; the
singularity counts of a verified factorization always satisfy
n1 + 2 n2 + 3 n3 = 2d(2d-1), since both sides are the exponent sum of
the full twist.

The text format, one factor per line:

    # degree-3 example
    strands 3
    factor rho=3 Q=
    factor rho=1 Q=2 -1

Comments run from '#' to end of line. Parse errors carry the 1-based
line and column of the offending token.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .braids import (
    BraidWord,
    compose,
    conjugate,
    equals,
    free_reduce,
    full_twist,
    invert,
    power,
)
from .errors import (
    DegenerateDegree,
    NegativeGenus,
    ParseError,
    RhoOutOfRange,
    StrandMismatch,
    UnverifiedFactorization,
)


@dataclass(frozen=True)
class CuspidalFactor:
    """One factor Q^-1 X_1^rho Q."""

    conjugator: BraidWord
    rho: int

    def __post_init__(self):
        if self.rho not in (1, 2, 3):
            raise RhoOutOfRange(f"rho must be 1, 2 or 3, got {self.rho}")
        if self.conjugator.strands < 2:
            raise DegenerateDegree("factors need at least two strands")

    @property
    def strands(self) -> int:
        return self.conjugator.strands

    def braid(self) -> BraidWord:
        """The factor as a braid word, Q^-1 X_1^rho Q."""
        x1r = power(BraidWord.generator(self.strands, 1), self.rho)
        return conjugate(x1r, self.conjugator)

    def normalized(self) -> "CuspidalFactor":
        return CuspidalFactor(free_reduce(self.conjugator), self.rho)


@dataclass(frozen=True)
class CuspidalFactorization:
    strands: int
    factors: tuple[CuspidalFactor, ...]

    def __post_init__(self):
        if self.strands < 2:
            raise DegenerateDegree("a factorization needs at least two strands")
        if not self.factors:
            raise ValueError("a factorization needs at least one factor")
        for f in self.factors:
            if f.strands != self.strands:
                raise StrandMismatch(
                    f"factor on {f.strands} strands in a factorization on {self.strands}"
                )
        object.__setattr__(self, "factors", tuple(self.factors))

    def __len__(self) -> int:
        return len(self.factors)

    def normalized(self) -> "CuspidalFactorization":
        """Same factors with freely reduced conjugators."""
        return CuspidalFactorization(self.strands, tuple(f.normalized() for f in self.factors))


@dataclass(frozen=True)
class SingularityCounts:
    branch: int
    node: int
    cusp: int

    def weighted_total(self) -> int:
        return self.branch + 2 * self.node + 3 * self.cusp


@dataclass(frozen=True)
class CurveInvariants:
    """Degree and Plücker-type invariants of the curve a verified
    factorization describes."""

    degree: int
    genus: int
    nodes: int
    cusps: int

    @property
    def half_degree(self) -> Fraction:
        return Fraction(self.degree, 2)


def factor_braid(f: CuspidalFactor) -> BraidWord:
    return f.braid()


def product(F: CuspidalFactorization) -> BraidWord:
    letters: tuple[int, ...] = ()
    for f in F.factors:
        letters = letters + f.braid().letters
    return BraidWord(F.strands, letters)


def verify_full_twist(F: CuspidalFactorization) -> bool:
    """Whether the factor product equals the full twist on F.strands."""
    return equals(product(F), full_twist(F.strands))


def singularity_counts(F: CuspidalFactorization) -> SingularityCounts:
    n1 = sum(1 for f in F.factors if f.rho == 1)
    n2 = sum(1 for f in F.factors if f.rho == 2)
    n3 = sum(1 for f in F.factors if f.rho == 3)
    return SingularityCounts(branch=n1, node=n2, cusp=n3)


def curve_invariants(F: CuspidalFactorization) -> CurveInvariants:
    """Degree, genus and singularity counts of the described curve.

    Requires a verified factorization; genus comes from the degree-genus
    formula with a unit drop per node and per cusp.
    """
    if not verify_full_twist(F):
        raise UnverifiedFactorization(
            "factor product is not the full twist; no curve invariants"
        )
    counts = singularity_counts(F)
    deg = F.strands
    genus = (deg - 1) * (deg - 2) // 2 - counts.cusp - counts.node
    if genus < 0:
        raise NegativeGenus(
            f"degree {deg} allows at most {(deg - 1) * (deg - 2) // 2} "
            f"singular points, got {counts.cusp + counts.node}"
        )
    return CurveInvariants(degree=deg, genus=genus, nodes=counts.node, cusps=counts.cusp)


def branch_point_factorization(n: int) -> CuspidalFactorization:
    """The full twist on n strands as n(n-1) branch-point factors.

    Uses X_i = Q_i^-1 X_1 Q_i with Q_i = (X_1 X_2)^-1 (X_2 X_3)^-1 ...
    (X_{i-1} X_i)^-1 and reads off (X_1 ... X_{n-1})^n factor by factor.
    This is the expected topology of a smooth degree-n curve.
    """
    if n < 2:
        raise DegenerateDegree("need at least two strands")
    conjs: dict[int, BraidWord] = {1: BraidWord.identity(n)}
    for i in range(2, n):
        step = BraidWord(n, (-i, -(i - 1)))
        conjs[i] = free_reduce(compose(conjs[i - 1], step))
    factors = []
    for _rep in range(n):
        for i in range(1, n):
            factors.append(CuspidalFactor(conjs[i], 1))
    return CuspidalFactorization(n, tuple(factors))


# --- text format -----------------------------------------------------------


def _tokens_with_columns(line: str) -> list[tuple[str, int]]:
    out = []
    col = 0
    length = len(line)
    while col < length:
        if line[col].isspace():
            col += 1
            continue
        start = col
        while col < length and not line[col].isspace():
            col += 1
        out.append((line[start:col], start + 1))
    return out


def parse(text: str) -> CuspidalFactorization:
    """Parse the factor-per-line format; see the module docstring."""
    strands: int | None = None
    factors: list[CuspidalFactor] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        toks = _tokens_with_columns(line)
        if not toks:
            continue
        head, headcol = toks[0]
        if strands is None:
            if head != "strands":
                raise ParseError(f"expected 'strands', got {head!r}", lineno, headcol)
            if len(toks) != 2:
                raise ParseError("expected 'strands <count>'", lineno, headcol)
            tok, col = toks[1]
            try:
                strands = int(tok)
            except ValueError:
                raise ParseError(f"strand count must be an integer, got {tok!r}", lineno, col)
            if strands < 2:
                raise ParseError(f"strand count must be at least 2, got {strands}", lineno, col)
            continue
        if head != "factor":
            raise ParseError(f"expected 'factor', got {head!r}", lineno, headcol)
        if len(toks) < 3 or not toks[1][0].startswith("rho=") or not toks[2][0].startswith("Q="):
            raise ParseError("expected 'factor rho=<r> Q=<letters>'", lineno, headcol)
        rtok, rcol = toks[1]
        try:
            rho = int(rtok[len("rho="):])
        except ValueError:
            raise ParseError(f"rho must be an integer, got {rtok!r}", lineno, rcol)
        if rho not in (1, 2, 3):
            raise RhoOutOfRange(f"rho must be 1, 2 or 3, got {rho}", lineno, rcol)
        letters: list[int] = []
        qtok, qcol = toks[2]
        rest = [(qtok[len("Q="):], qcol + len("Q="))] if len(qtok) > len("Q=") else []
        rest.extend(toks[3:])
        for tok, col in rest:
            try:
                letters.append(int(tok))
            except ValueError:
                raise ParseError(f"conjugator letter must be an integer, got {tok!r}", lineno, col)
        try:
            conj = BraidWord(strands, tuple(letters))
        except ValueError as exc:
            raise ParseError(str(exc), lineno, qcol)
        factors.append(CuspidalFactor(conj, rho))
    if strands is None:
        raise ParseError("empty input: no 'strands' line", 1, 1)
    if not factors:
        raise ParseError("no factor lines", 1, 1)
    return CuspidalFactorization(strands, tuple(factors))


def serialize(F: CuspidalFactorization) -> str:
    """Canonical text form: factors in order, conjugators freely reduced."""
    lines = [f"strands {F.strands}"]
    for f in F.factors:
        q = " ".join(str(x) for x in free_reduce(f.conjugator).letters)
        lines.append(f"factor rho={f.rho} Q={q}")
    return "\n".join(lines) + "\n"
