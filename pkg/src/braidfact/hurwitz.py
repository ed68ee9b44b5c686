"""Hurwitz moves, simultaneous conjugation, invariants and a budgeted
equivalence search for cuspidal factorizations.

The left move at position i replaces the adjacent pair (g, h) by
(g h g^-1, g); the right move is its inverse, (g, h) -> (h, h^-1 g h).
Both preserve the factor product. Simultaneous conjugation by z sends
every factor w to z^-1 w z, i.e. (Q, rho) to (Q z, rho).

Two factorizations have the same *braid factorization type* when one
becomes the other under some sequence of moves plus one simultaneous
conjugation. Whether distinct types with the same invariants exist is
open, so :func:`equivalent` is a semi-decision: it answers Equivalent
with a replayable witness, Distinguished with a separating invariant,
or Unknown when its search budget runs out. No completeness is claimed.
"""

from __future__ import annotations

import hashlib
from collections import deque
from dataclasses import dataclass
from random import Random
from typing import Iterator

from .braids import (
    BraidWord,
    compose,
    exponent_sum,
    free_reduce,
    garside_key,
    invert,
    is_central,
    permutation_of,
)
from .errors import OrbitBoundExceeded, ParseError, StrandMismatch
from .factorization import (
    CuspidalFactor,
    CuspidalFactorization,
    product,
    singularity_counts,
)
from .permutations import Permutation


@dataclass(frozen=True)
class Move:
    """One Hurwitz move: position (1-based, acts on factors i and i+1)
    and direction 'L' or 'R'."""

    index: int
    direction: str

    def __post_init__(self):
        if self.direction not in ("L", "R"):
            raise ValueError(f"direction must be 'L' or 'R', got {self.direction!r}")
        if self.index < 1:
            raise ValueError(f"move position must be at least 1, got {self.index}")

    def inverted(self) -> "Move":
        return Move(self.index, "R" if self.direction == "L" else "L")


def apply_move(F: CuspidalFactorization, index: int, direction: str) -> CuspidalFactorization:
    """Apply one move; the factor product is unchanged.

    Left at i: (g, h) -> (g h g^-1, g), the moved factor's conjugator
    becomes Q_h g^-1. Right at i: (g, h) -> (h, h^-1 g h), conjugator
    Q_g h. Conjugators are freely reduced, so a move followed by its
    inverse restores the factorization letter for letter.
    """
    move = Move(index, direction)
    if not 1 <= index <= len(F.factors) - 1:
        raise ValueError(
            f"move position {index} out of range for {len(F.factors)} factors"
        )
    g = F.factors[index - 1]
    h = F.factors[index]
    if move.direction == "L":
        moved = CuspidalFactor(free_reduce(compose(h.conjugator, invert(g.braid()))), h.rho)
        pair = (moved, g)
    else:
        moved = CuspidalFactor(free_reduce(compose(g.conjugator, h.braid())), g.rho)
        pair = (h, moved)
    factors = F.factors[: index - 1] + pair + F.factors[index + 1 :]
    return CuspidalFactorization(F.strands, factors)


def apply_moves(F: CuspidalFactorization, moves) -> CuspidalFactorization:
    for m in moves:
        F = apply_move(F, m.index, m.direction)
    return F


def invert_moves(moves) -> tuple[Move, ...]:
    return tuple(m.inverted() for m in reversed(moves))


def conjugate_all(F: CuspidalFactorization, z: BraidWord) -> CuspidalFactorization:
    """Simultaneous conjugation by z: every factor (Q, rho) -> (Qz, rho)."""
    if z.strands != F.strands:
        raise StrandMismatch(
            f"conjugator on {z.strands} strands, factorization on {F.strands}"
        )
    return CuspidalFactorization(
        F.strands,
        tuple(CuspidalFactor(free_reduce(compose(f.conjugator, z)), f.rho) for f in F.factors),
    )


def scramble(
    F: CuspidalFactorization, count: int, rng: Random
) -> tuple[CuspidalFactorization, tuple[Move, ...]]:
    """Apply ``count`` random moves; returns the result and the moves."""
    moves = []
    for _ in range(count):
        moves.append(Move(rng.randrange(1, len(F.factors)), rng.choice("LR")))
    return apply_moves(F, moves), tuple(moves)


# --- permutation quotient orbit -------------------------------------------


def quotient_tuple(F: CuspidalFactorization) -> tuple[Permutation, ...]:
    """Strand permutations of the factors, in order."""
    return tuple(permutation_of(f.braid()) for f in F.factors)


def _raw_mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(b[x] for x in a)


def _raw_inv(a: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def _raw_neighbors(state: tuple[tuple[int, ...], ...]) -> Iterator[tuple[tuple[int, ...], ...]]:
    r = len(state)
    for i in range(r - 1):
        a, b = state[i], state[i + 1]
        # left move: (a, b) -> (a b a^-1, a)
        yield state[:i] + (_raw_mul(_raw_mul(a, b), _raw_inv(a)), a) + state[i + 2 :]
        # right move: (a, b) -> (b, b^-1 a b)
        yield state[:i] + (b, _raw_mul(_raw_mul(_raw_inv(b), a), b)) + state[i + 2 :]


def _orbit_walk(
    start: tuple[tuple[int, ...], ...], cap: int | None
) -> tuple[set[tuple[tuple[int, ...], ...]], bool]:
    """BFS closure under moves; returns (states, closed). ``closed`` is
    False when the cap cut the walk short."""
    seen = {start}
    queue = deque([start])
    while queue:
        state = queue.popleft()
        for nxt in _raw_neighbors(state):
            if nxt not in seen:
                if cap is not None and len(seen) >= cap:
                    return seen, False
                seen.add(nxt)
                queue.append(nxt)
    return seen, True


DEFAULT_ORBIT_BOUND = 8


def orbit_quotient(
    perms: tuple[Permutation, ...], bound: int = DEFAULT_ORBIT_BOUND
) -> frozenset[tuple[Permutation, ...]]:
    """The exact orbit of a permutation tuple under both moves at every
    position. Exhaustive, so the point count is bounded (default 8)."""
    if not perms:
        raise ValueError("empty tuple has no orbit")
    size = perms[0].size
    if size > bound:
        raise OrbitBoundExceeded(
            f"exact orbit walk on {size} points exceeds the bound {bound}"
        )
    for p in perms:
        if p.size != size:
            raise ValueError("mixed permutation sizes")
    start = tuple(p.zero_based() for p in perms)
    states, closed = _orbit_walk(start, cap=None)
    assert closed
    return frozenset(
        tuple(Permutation.from_zero_based(raw) for raw in state) for state in states
    )


# --- fingerprints ----------------------------------------------------------

FINGERPRINT_ORBIT_CAP = 2048


@dataclass(frozen=True)
class Fingerprint:
    """Invariants of the braid factorization type.

    Every field is unchanged by Hurwitz moves and simultaneous
    conjugation, so factorizations of the same type always have equal
    fingerprints; unequal fingerprints separate types. The product key
    is the exact normal form when the product is central (conjugation
    cannot move it), and a coarse conjugacy key otherwise.
    """

    strands: int
    factor_count: int
    rho_counts: tuple[int, int, int]
    factor_classes: tuple[tuple[int, tuple[int, ...]], ...]
    product_key: tuple
    orbit_hash: str

    def compared_fields(self) -> tuple[tuple[str, object], ...]:
        return (
            ("factor-count", self.factor_count),
            ("rho-counts", self.rho_counts),
            ("factor-classes", self.factor_classes),
            ("product", self.product_key),
            ("quotient-orbit", self.orbit_hash),
        )


def _cycle_type_raw(p: tuple[int, ...]) -> tuple[int, ...]:
    n = len(p)
    seen = [False] * n
    lengths = []
    for s in range(n):
        if seen[s]:
            continue
        ln = 0
        q = s
        while not seen[q]:
            seen[q] = True
            q = p[q]
            ln += 1
        lengths.append(ln)
    return tuple(sorted(lengths, reverse=True))


def _point_orbit_blocks(state: tuple[tuple[int, ...], ...], n: int) -> tuple[int, ...]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in state:
        for i, img in enumerate(p):
            if img != i:
                ra, rb = find(i), find(img)
                if ra != rb:
                    parent[ra] = rb
    sizes: dict[int, int] = {}
    for i in range(n):
        r = find(i)
        sizes[r] = sizes.get(r, 0) + 1
    return tuple(sorted(sizes.values(), reverse=True))


def _state_profile(state, type_cache) -> tuple:
    types = []
    for p in state:
        t = type_cache.get(p)
        if t is None:
            t = _cycle_type_raw(p)
            type_cache[p] = t
        types.append(t)
    # equality pattern: for each position, the first position holding the
    # same permutation; invariant under simultaneous relabeling
    eq = []
    for i, p in enumerate(state):
        for j in range(i + 1):
            if state[j] == p:
                eq.append(j)
                break
    return (tuple(types), tuple(eq))


def _subgroup_order(state: tuple[tuple[int, ...], ...], n: int) -> int | None:
    if n > 8:
        return None
    ident = tuple(range(n))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in state:
                q = _raw_mul(p, g)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return len(seen)


def fingerprint(
    F: CuspidalFactorization, *, orbit_cap: int = FINGERPRINT_ORBIT_CAP
) -> Fingerprint:
    """Conjugation- and move-invariant summary of F.

    The orbit hash walks the quotient-tuple orbit up to ``orbit_cap``
    states. A closed orbit is hashed exactly (size plus the multiset of
    per-state invariant profiles); a capped walk falls back to coarser
    invariants. Orbit size is itself an invariant, so fingerprints taken
    with the same cap remain comparable.
    """
    counts = singularity_counts(F)
    classes = tuple(
        sorted(
            (exponent_sum(f.braid()), permutation_of(f.braid()).cycle_type())
            for f in F.factors
        )
    )
    prod = product(F)
    if is_central(prod):
        pkey: tuple = ("central",) + garside_key(prod)
    else:
        pkey = ("noncentral", exponent_sum(prod), permutation_of(prod).cycle_type())
    start = tuple(permutation_of(f.braid()).zero_based() for f in F.factors)
    states, closed = _orbit_walk(start, cap=orbit_cap)
    if closed:
        type_cache: dict = {}
        profiles = sorted(_state_profile(s, type_cache) for s in states)
        payload = ("closed", len(states), tuple(profiles))
    else:
        type_cache = {}
        payload = (
            "capped",
            orbit_cap,
            tuple(sorted(_cycle_type_raw(p) for p in start)),
            _cycle_type_raw(tuple(_reduce_mul(start))),
            _point_orbit_blocks(start, F.strands),
            _subgroup_order(start, F.strands),
        )
    digest = hashlib.sha256(repr(payload).encode()).hexdigest()
    return Fingerprint(
        strands=F.strands,
        factor_count=len(F.factors),
        rho_counts=(counts.branch, counts.node, counts.cusp),
        factor_classes=classes,
        product_key=pkey,
        orbit_hash=digest,
    )


def _reduce_mul(state: tuple[tuple[int, ...], ...]) -> tuple[int, ...]:
    acc = tuple(range(len(state[0])))
    for p in state:
        acc = _raw_mul(acc, p)
    return acc


# --- witnesses -------------------------------------------------------------


@dataclass(frozen=True)
class Witness:
    """A replayable equivalence certificate: moves, then one
    simultaneous conjugation."""

    moves: tuple[Move, ...]
    conjugator: BraidWord


def replay(F: CuspidalFactorization, witness: Witness) -> CuspidalFactorization:
    """Apply the witness moves in order, then the conjugation."""
    return conjugate_all(apply_moves(F, witness.moves), witness.conjugator)


def serialize_witness(w: Witness) -> str:
    lines = [f"move {m.index} {m.direction}" for m in w.moves]
    conj = " ".join(str(x) for x in w.conjugator.letters)
    lines.append(f"conj {conj}".rstrip())
    return "\n".join(lines) + "\n"


def parse_witness(text: str, strands: int) -> Witness:
    moves: list[Move] = []
    conj: BraidWord | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if conj is not None:
            raise ParseError("nothing may follow the conj line", lineno, 1)
        toks = line.split()
        if toks[0] == "move":
            if len(toks) != 3:
                raise ParseError("expected 'move <position> <L|R>'", lineno, 1)
            try:
                idx = int(toks[1])
            except ValueError:
                raise ParseError(f"move position must be an integer, got {toks[1]!r}", lineno, 6)
            if toks[2] not in ("L", "R"):
                raise ParseError(f"direction must be L or R, got {toks[2]!r}", lineno, 1)
            try:
                moves.append(Move(idx, toks[2]))
            except ValueError as exc:
                raise ParseError(str(exc), lineno, 6)
        elif toks[0] == "conj":
            try:
                letters = tuple(int(t) for t in toks[1:])
            except ValueError:
                raise ParseError("conj letters must be integers", lineno, 6)
            try:
                conj = BraidWord(strands, letters)
            except ValueError as exc:
                raise ParseError(str(exc), lineno, 6)
        else:
            raise ParseError(f"expected 'move' or 'conj', got {toks[0]!r}", lineno, 1)
    if conj is None:
        conj = BraidWord.identity(strands)
    return Witness(tuple(moves), conj)


# --- equivalence search ----------------------------------------------------

DEFAULT_BUDGET = 1_000_000
DEFAULT_CONJUGATION_RADIUS = 3


@dataclass(frozen=True)
class SearchReport:
    states_explored: int
    budget: int
    conjugation_radius: int
    reason: str  # "budget" or "exhausted"


@dataclass(frozen=True)
class EquivalenceVerdict:
    """Outcome of the semi-decision; kind is 'equivalent',
    'distinguished' or 'unknown'."""

    kind: str
    witness: Witness | None = None
    invariant: str | None = None
    report: SearchReport | None = None

    @classmethod
    def equivalent_with(cls, witness: Witness) -> "EquivalenceVerdict":
        return cls("equivalent", witness=witness)

    @classmethod
    def distinguished_by(cls, invariant: str) -> "EquivalenceVerdict":
        return cls("distinguished", invariant=invariant)

    @classmethod
    def unknown_after(cls, report: SearchReport) -> "EquivalenceVerdict":
        return cls("unknown", report=report)


_StateKey = tuple[tuple[int, tuple[int, ...]], ...]


def _state_key(F: CuspidalFactorization) -> _StateKey:
    return tuple((f.rho, f.conjugator.letters) for f in F.factors)


def _state_factorization(strands: int, key: _StateKey) -> CuspidalFactorization:
    return CuspidalFactorization(
        strands, tuple(CuspidalFactor(BraidWord(strands, q), rho) for rho, q in key)
    )


def _conjugation_ball(strands: int, radius: int) -> list[BraidWord]:
    """Freely distinct conjugators of letter length <= radius, shortest
    first; deterministic order."""
    alphabet = [s * i for i in range(1, strands) for s in (1, -1)]
    out = [BraidWord.identity(strands)]
    seen = {()}
    frontier: list[tuple[int, ...]] = [()]
    for _ in range(radius):
        nxt = []
        for t in frontier:
            for a in alphabet:
                letters = free_reduce(BraidWord(strands, t + (a,))).letters
                if letters not in seen:
                    seen.add(letters)
                    nxt.append(letters)
                    out.append(BraidWord(strands, letters))
        frontier = nxt
    return out


def _expand(
    side_visited: dict,
    side_frontier: deque,
    other_visited: dict,
    strands: int,
    r: int,
    budget_left: list[int],
) -> _StateKey | None:
    """Expand one frontier layer; returns a meeting key when found."""
    for _ in range(len(side_frontier)):
        key = side_frontier.popleft()
        F = _state_factorization(strands, key)
        for i in range(1, r):
            for d in ("L", "R"):
                nxt = _state_key(apply_move(F, i, d))
                if nxt in side_visited:
                    continue
                if budget_left[0] <= 0:
                    return None
                budget_left[0] -= 1
                side_visited[nxt] = (key, Move(i, d))
                side_frontier.append(nxt)
                if nxt in other_visited:
                    return nxt
    return None


def _path_to_root(visited: dict, key: _StateKey) -> tuple[tuple[Move, ...], _StateKey]:
    moves: list[Move] = []
    while True:
        parent, move = visited[key]
        if parent is None:
            return tuple(reversed(moves)), key
        moves.append(move)
        key = parent


def equivalent(
    F1: CuspidalFactorization,
    F2: CuspidalFactorization,
    *,
    budget: int = DEFAULT_BUDGET,
    conjugation_radius: int = DEFAULT_CONJUGATION_RADIUS,
) -> EquivalenceVerdict:
    """Semi-decide whether F1 and F2 have the same braid factorization
    type.

    Distinguished verdicts come from fingerprint fields, checked in a
    fixed order, and are always sound. Equivalent verdicts carry a
    witness found by a bidirectional walk of the move graph, seeded on
    one side by conjugates of F2 over a ball of conjugators (default
    letter radius 3); every witness is replayed and checked before it is
    returned. Everything else is Unknown: the type problem is open, and
    exhausting the budget or the truncated conjugation ball proves
    nothing.
    """
    if F1.strands != F2.strands:
        raise StrandMismatch(
            f"factorizations on {F1.strands} and {F2.strands} strands"
        )
    fp1 = fingerprint(F1)
    fp2 = fingerprint(F2)
    for (name, a), (_, b) in zip(fp1.compared_fields(), fp2.compared_fields()):
        if a != b:
            return EquivalenceVerdict.distinguished_by(name)

    F1 = F1.normalized()
    F2 = F2.normalized()
    r = len(F1.factors)
    strands = F1.strands
    budget_left = [budget]

    start_a = _state_key(F1)
    visited_a: dict = {start_a: (None, None)}
    frontier_a: deque = deque([start_a])

    visited_b: dict = {}
    frontier_b: deque = deque()
    roots: dict[_StateKey, BraidWord] = {}
    meet: _StateKey | None = None
    for z in _conjugation_ball(strands, conjugation_radius):
        k = _state_key(conjugate_all(F2, z))
        if k not in visited_b:
            budget_left[0] -= 1
            visited_b[k] = (None, None)
            frontier_b.append(k)
            roots[k] = z
            if k in visited_a and meet is None:
                meet = k
        if budget_left[0] <= 0:
            break

    if r >= 2:
        while meet is None and (frontier_a or frontier_b) and budget_left[0] > 0:
            if frontier_b and (not frontier_a or len(frontier_b) <= len(frontier_a)):
                meet = _expand(visited_b, frontier_b, visited_a, strands, r, budget_left)
            else:
                meet = _expand(visited_a, frontier_a, visited_b, strands, r, budget_left)

    if meet is None:
        reason = "budget" if budget_left[0] <= 0 else "exhausted"
        explored = len(visited_a) + len(visited_b)
        return EquivalenceVerdict.unknown_after(
            SearchReport(explored, budget, conjugation_radius, reason)
        )

    moves_a, _ = _path_to_root(visited_a, meet)
    moves_b, root_b = _path_to_root(visited_b, meet)
    z = roots[root_b]
    witness = Witness(moves_a + invert_moves(moves_b), free_reduce(invert(z)))
    if _state_key(replay(F1, witness)) != _state_key(F2):
        raise AssertionError("witness replay failed; this is a bug")
    return EquivalenceVerdict.equivalent_with(witness)
