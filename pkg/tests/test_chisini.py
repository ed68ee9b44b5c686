import itertools
import math
import random
from fractions import Fraction

import pytest

from braidfact import corpus
from braidfact.braids import BraidWord
from braidfact.chisini import (
    ENUMERATION_SHEET_BOUND,
    MonodromyRep,
    check_rep,
    chisini_bound,
    chisini_guaranteed,
    enumerate_reps,
    euler_characteristic,
    morphism_report,
)
from braidfact.errors import DegenerateDegree, StrandMismatch, UnverifiedFactorization
from braidfact.factorization import CuspidalFactor, CuspidalFactorization
from braidfact.hurwitz import conjugate_all, scramble
from braidfact.permutations import (
    Permutation,
    all_permutations,
    generated_subgroup_order,
)
from braidfact.vankampen import full_presentation


def transpositions(n):
    return [
        Permutation.transposition(n, a, b)
        for a in range(1, n + 1)
        for b in range(a + 1, n + 1)
    ]


def oracle_classes(F, sheets):
    """Exhaustive reference count: try every transposition tuple against
    the relator words of the full presentation, demand surjectivity, and
    dedup by the minimum image tuple over all relabelings."""
    gens = transpositions(sheets)
    target = math.factorial(sheets)
    relabelings = list(all_permutations(sheets))
    found = set()
    for tup in itertools.product(gens, repeat=F.strands):
        if any(
            not r.evaluate(tup).is_identity()
            for r in full_presentation(F).relators
        ):
            continue
        if generated_subgroup_order(tup) != target:
            continue
        canon = min(
            tuple(p.conjugated(g).images for p in tup) for g in relabelings
        )
        found.add(canon)
    return found


def test_check_rep_accepts_the_conic_cover():
    F = corpus.load("conic")
    t = Permutation.transposition(2, 1, 2)
    rep = check_rep(F, MonodromyRep((t, t)))
    assert rep.ok
    assert rep.transpositions and rep.projective and rep.transitive
    assert rep.full_symmetric
    assert rep.failures == ()


def test_check_rep_rejects_bad_images():
    F = corpus.load("conic")
    t12 = Permutation.transposition(3, 1, 2)
    t13 = Permutation.transposition(3, 1, 3)
    rep = check_rep(F, MonodromyRep((t12, t13)))
    # branch factors need equal pair images and the product must close up
    assert not rep.ok
    assert not rep.branch_pairs
    assert not rep.projective
    assert rep.transpositions
    assert rep.failures != ()

    ident = Permutation.identity(2)
    rep = check_rep(F, MonodromyRep((ident, ident)))
    assert not rep.transpositions and not rep.ok

    with pytest.raises(StrandMismatch):
        check_rep(F, MonodromyRep((t12,)))


def test_enumerate_conic():
    F = corpus.load("conic")
    r = enumerate_reps(F, 2)
    assert r.count == 1 and r.dedup_exact
    t = Permutation.transposition(2, 1, 2)
    assert r.classes[0].images == (t, t)
    assert enumerate_reps(F, 3).count == 0
    r1 = enumerate_reps(F, 1)
    assert r1.count == 0 and any("single sheet" in note for note in r1.notes)


def test_enumerate_matches_oracle():
    conic = corpus.load("conic")
    cubic = corpus.load("cuspidal_cubic")
    for F, sheets in ((conic, 2), (conic, 3), (cubic, 2), (cubic, 3)):
        got = {
            tuple(p.images for p in c.images) for c in enumerate_reps(F, sheets).classes
        }
        assert got == oracle_classes(F, sheets), (F.strands, sheets)


def test_enumerate_quartic():
    q = corpus.load("smooth_quartic")
    assert enumerate_reps(q, 2).count == 1  # the double plane
    assert enumerate_reps(q, 3).count == 0
    assert enumerate_reps(q, 4).count == 0
    for c in enumerate_reps(q, 2).classes:
        assert check_rep(q, c).ok


def test_enumeration_invariant_under_moves_and_conjugation():
    rng = random.Random(31)
    for name, sheets in (("conic", 2), ("cuspidal_cubic", 3)):
        F = corpus.load(name)
        S, _ = scramble(F, 4, rng)
        S = conjugate_all(S, BraidWord(F.strands, (1,)))
        a = {tuple(p.images for p in c.images) for c in enumerate_reps(F, sheets).classes}
        b = {tuple(p.images for p in c.images) for c in enumerate_reps(S, sheets).classes}
        assert a == b, name
    # a single-factor instance admits no moves; conjugation alone
    node = corpus.load("node_pair")
    moved = conjugate_all(node, BraidWord(2, (1, 1)))
    assert enumerate_reps(node, 2).count == enumerate_reps(moved, 2).count


def test_relabeling_fixes_canonical_representative():
    # every returned class is the lexicographic minimum of its orbit,
    # so relabeling the sheets and re-canonicalizing changes nothing
    q = corpus.load("smooth_quartic")
    for c in enumerate_reps(q, 2).classes:
        base = tuple(p.images for p in c.images)
        assert base == min(
            tuple(p.conjugated(g).images for p in c.images)
            for g in all_permutations(2)
        )
        for g in all_permutations(2):
            relabeled = tuple(p.conjugated(g) for p in c.images)
            again = min(
                tuple(p.conjugated(h).images for p in relabeled)
                for h in all_permutations(2)
            )
            assert again == base


def test_enumerate_bounds():
    conic = corpus.load("conic")
    with pytest.raises(DegenerateDegree):
        enumerate_reps(conic, 0)
    with pytest.raises(ValueError):
        enumerate_reps(conic, ENUMERATION_SHEET_BOUND + 1)
    r = enumerate_reps(conic, ENUMERATION_SHEET_BOUND + 1, allow_large=True)
    assert r.count == 0  # a transposition pair can never act transitively on 13 points
    assert not r.dedup_exact


def test_enumerate_requires_nothing_but_factors():
    # an unverified factorization still has meridian data to enumerate,
    # even though the combined morphism report refuses it
    F = CuspidalFactorization(2, (CuspidalFactor(BraidWord(2, ()), 1),))
    with pytest.raises(UnverifiedFactorization):
        morphism_report(F, 2)
    assert enumerate_reps(F, 2).count == 1


def test_chisini_bound_exact():
    assert chisini_bound(3, 4, 6) == Fraction(8, 3)
    assert chisini_bound(1, 0, 4) is None
    assert chisini_bound(Fraction(3, 2), 0, 1) == Fraction(7, 3)


def test_chisini_certificate():
    cert = chisini_guaranteed(3, 4, 6, 3)
    assert cert.applicable and cert.threshold == Fraction(8, 3)
    assert cert.guaranteed  # 3 > 8/3
    cert2 = chisini_guaranteed(3, 4, 6, 2)
    assert cert2.applicable and not cert2.guaranteed
    cert3 = chisini_guaranteed(1, 0, 4, 5)
    assert not cert3.applicable and cert3.threshold is None and not cert3.guaranteed


def test_chisini_guaranteed_monotone():
    for d, g, c in ((3, 4, 6), (Fraction(3, 2), 0, 1), (2, 0, 0), (5, 2, 17)):
        for sheets in range(1, 13):
            now = chisini_guaranteed(d, g, c, sheets).guaranteed
            nxt = chisini_guaranteed(d, g, c, sheets + 1).guaranteed
            assert (not now) or nxt


def test_euler_characteristic():
    assert euler_characteristic(3, 4, 6, 0) == 9
    assert euler_characteristic(2, 0, 0, 0) == 4
    assert euler_characteristic(1, 7, 3, 2) == 3
    assert euler_characteristic(1, 0, 0, 0) == 3


def test_morphism_report_conic():
    rep = morphism_report(corpus.load("conic"), 2)
    assert rep.class_count == 1
    assert rep.euler == 4
    assert rep.certificate.threshold == Fraction(2)
    assert not rep.certificate.guaranteed  # 2 > 2 fails
    assert rep.warnings == ()


def test_morphism_report_cubic():
    rep = morphism_report(corpus.load("cuspidal_cubic"), 3)
    assert rep.class_count == 0
    assert rep.certificate.threshold == Fraction(7, 3)
    assert rep.certificate.guaranteed  # 3 > 7/3
    assert any("odd" in w for w in rep.warnings)


def test_morphism_report_rejects_bad_input():
    with pytest.raises(DegenerateDegree):
        morphism_report(corpus.load("conic"), 0)
