"""Plain-dict report builders shared by the CLI and the HTTP service.

Every builder returns a JSON-serializable dict with a fixed key set:
keys are always present, with None standing in when a section does not
apply (for example curve invariants of an unverified factorization).
The CLI's text mode renders the same dict through flatten(), so the two
output formats cannot drift apart.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .chisini import MorphismReport, chisini_bound, chisini_guaranteed, morphism_report
from .errors import NegativeGenus
from .factorization import (
    CuspidalFactorization,
    curve_invariants,
    singularity_counts,
    verify_full_twist,
)
from .hurwitz import EquivalenceVerdict, Witness, serialize_witness
from .vankampen import abelianization, irreducibility_check, presentation, simplify

__all__ = [
    "build_verify_report",
    "build_search_report",
    "build_replay_report",
    "build_vk_report",
    "build_enumerate_report",
    "build_chisini_report",
    "flatten",
    "render_text",
]


def _fraction_str(x: Fraction | None) -> str | None:
    return None if x is None else str(x)


def build_verify_report(F: CuspidalFactorization) -> dict:
    """Verdict plus the invariants the factorization certifies.

    A verified factorization whose singular points exceed the smooth
    degree bound (a reducible configuration like two lines) keeps its
    verified verdict; the genus-based invariants are withheld with a
    warning instead of failing the whole report.
    """
    counts = singularity_counts(F)
    verified = verify_full_twist(F)
    invariants = None
    warnings: list[str] = []
    if verified:
        try:
            inv = curve_invariants(F)
        except NegativeGenus as e:
            warnings.append(f"no smooth-model invariants: {e}")
        else:
            invariants = {
                "degree": inv.degree,
                "half_degree": str(inv.half_degree),
                "genus": inv.genus,
                "nodes": inv.nodes,
                "cusps": inv.cusps,
            }
    return {
        "strands": F.strands,
        "factors": len(F),
        "verified": verified,
        "counts": {
            "branch": counts.branch,
            "node": counts.node,
            "cusp": counts.cusp,
            "weighted_total": counts.weighted_total(),
        },
        "invariants": invariants,
        "warnings": warnings,
    }


def _hurwitz_skeleton(strands: int, mode: str) -> dict:
    return {
        "strands": strands,
        "mode": mode,
        "verdict": None,
        "invariant": None,
        "witness": None,
        "moves": None,
        "search": None,
    }


def build_search_report(strands: int, verdict: EquivalenceVerdict) -> dict:
    out = _hurwitz_skeleton(strands, "search")
    out["verdict"] = verdict.kind
    if verdict.kind == "equivalent":
        out["witness"] = serialize_witness(verdict.witness)
        out["moves"] = len(verdict.witness.moves)
    elif verdict.kind == "distinguished":
        out["invariant"] = verdict.invariant
    elif verdict.kind == "unknown":
        out["search"] = {
            "states_explored": verdict.report.states_explored,
            "budget": verdict.report.budget,
            "conjugation_radius": verdict.report.conjugation_radius,
            "reason": verdict.report.reason,
        }
    return out


def build_replay_report(strands: int, witness: Witness, match: bool) -> dict:
    out = _hurwitz_skeleton(strands, "replay")
    out["verdict"] = "replayed" if match else "replay-mismatch"
    out["witness"] = serialize_witness(witness)
    out["moves"] = len(witness.moves)
    return out


def build_vk_report(F: CuspidalFactorization) -> dict:
    P = presentation(F)
    S = simplify(P)
    ab = abelianization(P)
    irr = irreducibility_check(F)
    return {
        "strands": F.strands,
        "factors": len(F),
        "generators": P.generators,
        "relators": [str(r) for r in P.relators],
        "simplified": {
            "generators": S.generators,
            "relators": [str(r) for r in S.relators],
        },
        "abelianization": {
            "free_rank": ab.free_rank,
            "torsion": list(ab.torsion),
            "name": str(ab),
        },
        "irreducible": irr.irreducible,
        "components": [list(c) for c in irr.components],
    }


def _report_from_morphism(strands: int, rep: MorphismReport) -> dict:
    cert = rep.certificate
    return {
        "strands": strands,
        "degree": rep.degree,
        "genus": rep.genus,
        "branch": rep.branch,
        "nodes": rep.nodes,
        "cusps": rep.cusps,
        "sheets": rep.sheets,
        "classes": rep.class_count,
        "class_images": [[str(p) for p in c.images] for c in rep.classes],
        "dedup_exact": rep.dedup_exact,
        "threshold": _fraction_str(cert.threshold),
        "applicable": cert.applicable,
        "guaranteed": cert.guaranteed,
        "euler": rep.euler,
        "warnings": list(rep.warnings),
    }


def build_enumerate_report(
    F: CuspidalFactorization, sheets: int, *, allow_large: bool = False
) -> dict:
    return _report_from_morphism(
        F.strands, morphism_report(F, sheets, allow_large=allow_large)
    )


def build_chisini_report(
    d: Fraction, genus: int, cusps: int, sheets: int | None
) -> dict:
    if sheets is None:
        threshold = chisini_bound(d, genus, cusps)
        applicable = threshold is not None
        guaranteed = None
    else:
        cert = chisini_guaranteed(d, genus, cusps, sheets)
        threshold = cert.threshold
        applicable = cert.applicable
        guaranteed = cert.guaranteed
    return {
        "half_degree": str(Fraction(d)),
        "genus": genus,
        "cusps": cusps,
        "sheets": sheets,
        "threshold": _fraction_str(threshold),
        "applicable": applicable,
        "guaranteed": guaranteed,
    }


def flatten(report: dict) -> list[tuple[str, str]]:
    """Depth-first (path, json-encoded leaf) pairs in insertion order.

    Containers flatten into dotted paths with numeric list indices;
    empty containers stay as their own leaf so nothing is lost in the
    text rendering.
    """
    out: list[tuple[str, str]] = []

    def walk(prefix: str, value) -> None:
        if isinstance(value, dict) and value:
            for k, v in value.items():
                walk(f"{prefix}.{k}" if prefix else str(k), v)
        elif isinstance(value, (list, tuple)) and value:
            for i, v in enumerate(value):
                walk(f"{prefix}.{i}" if prefix else str(i), v)
        else:
            out.append((prefix, json.dumps(value)))

    walk("", report)
    return out


def render_text(report: dict) -> str:
    return "\n".join(f"{path}: {leaf}" for path, leaf in flatten(report))
