"""Family classification and braid-index bounds for torus-covering charts."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from math import gcd

from scipy.cluster.hierarchy import DisjointSet

from . import braid as br
from .braid import BraidWord
from .chart import TorusCoveringChart, genus_per_component
from .compiler import compile_chart

DEFAULT_SEARCH_BOUND = 6

KINDS = ("spun", "turned-spun", "symmetry-spun", "trivial-family", "unknown")

# citation tags for the facts the braid-index logic relies on
FACT_UPPER_2M = "torus-covering-upper-2m"
FACT_KAMADA = "kamada:index<=3-implies-ribbon"
FACT_SHIMA = "shima:turned-spun-nontrivial-not-ribbon"
FACT_HASEGAWA = "hasegawa:turned-spun-closed-m-braid<=3m"


def search_bound() -> int:
    raw = os.environ.get("TCKIT_SEARCH_BOUND")
    if raw is None:
        return DEFAULT_SEARCH_BOUND
    value = int(raw)
    if value < 1:
        raise ValueError("TCKIT_SEARCH_BOUND must be a positive integer")
    return value


@dataclass(frozen=True)
class Classification:
    kind: str
    witness: str
    beta: BraidWord | None = None
    exponents: tuple[int, int] | None = None


@dataclass
class BraidIndexReport:
    upper: int
    lower: int
    exact: int | None = None
    facts: list[str] = field(default_factory=list)
    alt_upper: int | None = None

    def render(self) -> str:
        lines = [
            f"upper={self.upper}",
            f"lower={self.lower}",
            f"exact={'' if self.exact is None else self.exact}",
            f"facts={','.join(self.facts)}",
        ]
        if self.alt_upper is not None:
            lines.append(f"alt_upper={self.alt_upper}")
        return "\n".join(lines) + "\n"


def _is_trivial(w: BraidWord) -> bool:
    return br.is_equal(w, br.identity(w.degree))


def _bezout(j: int, k: int) -> tuple[int, int]:
    # s*j + t*k == gcd(j, k)
    old_r, r = j, k
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_s, old_t = -old_s, -old_t
    return old_s, old_t


def _common_root(a: BraidWord, b: BraidWord, bound: int):
    """Find beta and coprime (j, k) with a = beta^j and b = beta^k, smallest |j|+|k| first."""
    pairs = [
        (j, k)
        for j in range(-bound, bound + 1)
        for k in range(-bound, bound + 1)
        if (j, k) != (0, 0) and gcd(j, k) == 1
    ]
    pairs.sort(key=lambda jk: (abs(jk[0]) + abs(jk[1]), -jk[0], -jk[1]))
    ea, eb = br.exponent_sum(a), br.exponent_sum(b)
    for j, k in pairs:
        # abelianization: e(a) = j e(beta), e(b) = k e(beta)
        if ea * k != eb * j:
            continue
        s, t = _bezout(j, k)
        beta = br.free_reduce(br.compose(br.power(a, s), br.power(b, t)))
        if br.is_equal(a, br.power(beta, j)) and br.is_equal(b, br.power(beta, k)):
            return beta, (j, k)
    return None


def classify(chart: TorusCoveringChart, bound: int | None = None) -> Classification:
    a, b = chart.a, chart.b
    if _is_trivial(a) and _is_trivial(b):
        return Classification("trivial-family", "a = b = e")
    if _is_trivial(b):
        return Classification("spun", f"b = e, knot from a = {list(a.letters)}", beta=a)
    if br.is_equal(b, a):
        return Classification("turned-spun", f"b = a = {list(a.letters)}", beta=a, exponents=(1, 1))
    if br.is_equal(b, br.invert(a)):
        return Classification(
            "turned-spun", f"b = a^-1, a = {list(a.letters)}", beta=a, exponents=(1, -1)
        )
    found = _common_root(a, b, search_bound() if bound is None else bound)
    if found is not None:
        beta, (j, k) = found
        return Classification(
            "symmetry-spun",
            f"a = beta^{j}, b = beta^{k}, beta = {list(beta.letters)}",
            beta=beta,
            exponents=(j, k),
        )
    return Classification("unknown", "no pattern matched within the search bound")


def braid_index_report(chart: TorusCoveringChart, bound: int | None = None) -> BraidIndexReport:
    m = chart.degree
    report = BraidIndexReport(upper=2 * m, lower=1, facts=[FACT_UPPER_2M])
    kind = classify(chart, bound).kind
    if kind != "turned-spun":
        return report
    report.alt_upper = 3 * m
    report.facts.append(FACT_HASEGAWA)
    if m == 2:
        # every 2-braid is a power of sigma_1; the closure of sigma_1^p is the torus (2,p) knot
        p = br.exponent_sum(chart.a)
        if p % 2 and abs(p) >= 3:
            report.lower = 4
            report.exact = 4
            report.facts += [FACT_KAMADA, FACT_SHIMA]
    return report


def orbit_count(chart: TorusCoveringChart) -> int:
    """Orbits of the group generated by the permutations of a and b on {1..m}."""
    sheets = DisjointSet(range(1, chart.degree + 1))
    for perm in (br.permutation(chart.a), br.permutation(chart.b)):
        for j in range(1, chart.degree + 1):
            sheets.merge(j, perm(j))
    return sheets.n_subsets


def genus_theorem_check(chart: TorusCoveringChart) -> bool:
    """True iff the compiled surface is a T^2-link whose components match the sheet orbits."""
    genera = genus_per_component(compile_chart(chart).movie)
    return all(g == 1 for _, g in genera) and len(genera) == orbit_count(chart)
