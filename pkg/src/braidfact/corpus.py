"""Bundled example factorizations.

Small verified instances used by tests, docs and the demo endpoints:
a conic (two branch points on two strands), a pair of lines meeting in
a node, the cuspidal cubic, a Hurwitz-scrambled copy of the cubic, and
a smooth quartic written as twelve branch-point factors.
"""

from __future__ import annotations

from importlib import resources

from .factorization import CuspidalFactorization, parse


def available() -> tuple[str, ...]:
    """Names of the bundled .bfac files, sorted."""
    root = resources.files(__package__) / "corpus"
    names = [p.name for p in root.iterdir() if p.name.endswith(".bfac")]
    return tuple(sorted(names))


def text(name: str) -> str:
    if not name.endswith(".bfac"):
        name += ".bfac"
    res = resources.files(__package__) / "corpus" / name
    if not res.is_file():
        raise KeyError(f"no bundled factorization named {name!r}")
    return res.read_text()


def load(name: str) -> CuspidalFactorization:
    return parse(text(name))
