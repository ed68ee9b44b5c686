import random

import pytest

from braidfact import corpus
from braidfact.braids import BraidWord, conjugate, equals, free_reduce
from braidfact.errors import OrbitBoundExceeded, ParseError, StrandMismatch
from braidfact.factorization import CuspidalFactor, CuspidalFactorization, product
from braidfact.hurwitz import (
    Move,
    Witness,
    apply_move,
    apply_moves,
    conjugate_all,
    equivalent,
    fingerprint,
    invert_moves,
    orbit_quotient,
    parse_witness,
    quotient_tuple,
    replay,
    scramble,
    serialize_witness,
)
from braidfact.permutations import Permutation


def random_factorization(rng, strands, count):
    factors = []
    for _ in range(count):
        length = rng.randrange(0, 5)
        letters = tuple(
            rng.choice([1, -1]) * rng.randrange(1, strands) for _ in range(length)
        )
        factors.append(
            CuspidalFactor(free_reduce(BraidWord(strands, letters)), rng.choice([1, 2, 3]))
        )
    return CuspidalFactorization(strands, tuple(factors))


def test_move_validation():
    with pytest.raises(ValueError):
        Move(0, "L")
    with pytest.raises(ValueError):
        Move(1, "X")
    assert Move(2, "L").inverted() == Move(2, "R")


def test_move_round_trip_is_letter_exact():
    rng = random.Random(3)
    for _ in range(50):
        n = rng.randrange(2, 5)
        F = random_factorization(rng, n, rng.randrange(2, 6))
        i = rng.randrange(1, len(F))
        for d in ("L", "R"):
            m = Move(i, d)
            G = apply_move(apply_move(F, m.index, m.direction), i, m.inverted().direction)
            assert G == F.normalized()


def test_moves_preserve_product_and_rho_multiset():
    rng = random.Random(5)
    for _ in range(40):
        n = rng.randrange(2, 5)
        F = random_factorization(rng, n, rng.randrange(2, 6))
        i = rng.randrange(1, len(F))
        G = apply_move(F, i, rng.choice("LR"))
        assert sorted(f.rho for f in G.factors) == sorted(f.rho for f in F.factors)
        assert equals(product(F), product(G))


def test_conjugate_all_conjugates_product():
    rng = random.Random(9)
    for _ in range(25):
        n = rng.randrange(2, 5)
        F = random_factorization(rng, n, rng.randrange(1, 5))
        z = free_reduce(
            BraidWord(n, tuple(rng.choice([1, -1]) * rng.randrange(1, n) for _ in range(3)))
        )
        G = conjugate_all(F, z)
        assert equals(product(G), conjugate(product(F), z))


def test_scramble_records_its_moves():
    F = corpus.load("cuspidal_cubic")
    S, moves = scramble(F, 6, random.Random(42))
    assert apply_moves(F, moves) == S
    back = apply_moves(S, invert_moves(moves))
    assert back == F.normalized()


def test_quotient_tuple():
    F = corpus.load("conic")
    assert quotient_tuple(F) == (
        Permutation.transposition(2, 1, 2),
        Permutation.transposition(2, 1, 2),
    )


def test_orbit_quotient_sizes():
    t12 = Permutation.transposition(3, 1, 2)
    t13 = Permutation.transposition(3, 1, 3)
    assert len(orbit_quotient((t12, t13))) == 3
    assert len(orbit_quotient((t12, t12))) == 1
    assert len(orbit_quotient(quotient_tuple(corpus.load("cuspidal_cubic")))) == 24
    with pytest.raises(OrbitBoundExceeded):
        # exhaustive walks refuse large point counts by default
        orbit_quotient((Permutation.transposition(9, 1, 2),))


def test_fingerprint_invariance():
    rng = random.Random(15)
    for _ in range(60):
        n = rng.randrange(2, 5)
        F = random_factorization(rng, n, rng.randrange(2, 6))
        G = apply_move(F, rng.randrange(1, len(F)), rng.choice("LR"))
        z = free_reduce(
            BraidWord(n, tuple(rng.choice([1, -1]) * rng.randrange(1, n) for _ in range(2)))
        )
        G = conjugate_all(G, z)
        assert fingerprint(F) == fingerprint(G)


def test_fingerprint_distinguishes():
    conic = corpus.load("conic")
    node = corpus.load("node_pair")
    assert fingerprint(conic) != fingerprint(node)


def test_equivalent_self_is_empty_witness():
    F = corpus.load("cuspidal_cubic")
    v = equivalent(F, F)
    assert v.kind == "equivalent"
    assert v.witness.moves == () and v.witness.conjugator.letters == ()


def test_equivalent_on_bundled_scrambled_pair():
    F = corpus.load("cuspidal_cubic")
    G = corpus.load("cuspidal_cubic_scrambled")
    v = equivalent(F, G)
    assert v.kind == "equivalent"
    assert replay(F, v.witness).normalized() == G.normalized()


def test_equivalent_distinguishes_by_invariants():
    conic = corpus.load("conic")
    node = corpus.load("node_pair")
    v = equivalent(conic, node)
    assert v.kind == "distinguished" and v.invariant == "factor-count"

    a = CuspidalFactorization(2, (CuspidalFactor(BraidWord(2, ()), 2),))
    b = CuspidalFactorization(2, (CuspidalFactor(BraidWord(2, ()), 1),))
    v = equivalent(a, b)
    assert v.kind == "distinguished" and v.invariant == "rho-counts"

    with pytest.raises(StrandMismatch):
        equivalent(conic, corpus.load("cuspidal_cubic"))


def test_equivalent_budget_exhaustion_is_unknown():
    F = corpus.load("cuspidal_cubic")
    G = corpus.load("cuspidal_cubic_scrambled")
    v = equivalent(F, G, budget=2, conjugation_radius=0)
    assert v.kind == "unknown"
    assert v.report.reason == "budget"
    assert v.report.states_explored >= 2


def test_equivalent_exhausted_frontier_is_unknown():
    # a pair whose fingerprints agree but whose search meets nothing:
    # same rho multiset and central product, different conjugacy setup
    # is hard to build by hand, so force exhaustion with a zero-radius
    # ball on a conjugated instance instead
    F = corpus.load("conic")
    G = conjugate_all(F, BraidWord(2, (1,)))
    # radius 0 means only G itself seeds the far side; the orbit of the
    # conic is tiny so the search runs out of states
    v = equivalent(F, G, conjugation_radius=0)
    # the pair differs only by conjugation, so either the tiny orbit
    # meets (conic factors are central conjugates) or it exhausts
    assert v.kind in ("equivalent", "unknown")
    if v.kind == "unknown":
        assert v.report.reason == "exhausted"


def test_witness_round_trip():
    w = Witness((Move(3, "R"), Move(1, "L")), BraidWord(3, (1, -2)))
    text = serialize_witness(w)
    assert parse_witness(text, 3) == w
    empty = Witness((), BraidWord(3, ()))
    assert parse_witness(serialize_witness(empty), 3) == empty


def test_witness_parse_errors():
    with pytest.raises(ParseError):
        parse_witness("move 0 L\n", 3)
    with pytest.raises(ParseError):
        parse_witness("move 1 Q\n", 3)
    with pytest.raises(ParseError):
        parse_witness("wiggle 1 L\n", 3)
    with pytest.raises(ParseError):
        parse_witness("conj 7\n", 3)  # letter out of range
    with pytest.raises(ParseError):
        parse_witness("conj\nmove 1 L\n", 3)  # nothing may follow conj
