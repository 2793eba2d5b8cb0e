"""Builtin torus-covering charts: spun, turned spun and symmetry-spun examples."""

from __future__ import annotations

from dataclasses import dataclass

from .braid import BraidWord, power
from .chart import TorusCoveringChart


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    chart: TorusCoveringChart
    provenance: str


def _sigma1(p: int) -> BraidWord:
    return power(BraidWord(2, (1,)), p)


def _entry(name, a, b, provenance):
    return CatalogEntry(name, TorusCoveringChart(a.degree, a, b), provenance)


NAMES = (
    "spun-trefoil",
    "turned-spun-trefoil",
    "turned-spun-trefoil-neg",
    "symmetry-spun-beta",
    "torus-2p",
    "trivial-torus",
)


def entry(name: str, p: int = 5, beta: BraidWord | None = None) -> CatalogEntry:
    """Look up a catalog entry; ``p`` and ``beta`` parametrize the two families."""
    if name == "spun-trefoil":
        return _entry(name, _sigma1(3), BraidWord(2), "spun T^2-knot of the right-handed trefoil")
    if name == "turned-spun-trefoil":
        return _entry(name, _sigma1(3), _sigma1(3), "turned spun T^2-knot of the right-handed trefoil")
    if name == "turned-spun-trefoil-neg":
        return _entry(
            name, _sigma1(3), _sigma1(-3), "turned spun trefoil, second boundary braid inverted"
        )
    if name == "symmetry-spun-beta":
        beta = beta if beta is not None else _sigma1(2)
        return _entry(name, power(beta, 2), beta, "symmetry-spun torus with boundary braids beta^2, beta")
    if name == "torus-2p":
        return _entry(name, _sigma1(p), _sigma1(p), f"turned spun T^2-knot of the torus (2,{p})-knot")
    if name == "trivial-torus":
        return _entry(name, BraidWord(1), BraidWord(1), "trivial T^2-knot (degree 1, trivial boundary)")
    raise KeyError(name)


def entries() -> list[CatalogEntry]:
    return [entry(name) for name in NAMES]
