"""Chart encodings and branched-cover bookkeeping.

Two encodings live here.  A :class:`ChartMovie` describes a simple surface
braid as a sequence of braid-word slices; consecutive slices are related
either by an ``EQ`` event (equal braids, certified by the word-problem solver)
or by a :class:`Band` event, a single-letter insertion or deletion that stands
for one black vertex.  A :class:`ChartGraph` is the planar labeled graph and is
only validated and pattern-matched, never converted.

Band positions are 0-based: an insertion at ``position`` places the new letter
at that index of the following slice; a deletion removes the letter at that
index of the preceding slice.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Sequence, Union

from scipy.cluster.hierarchy import DisjointSet

from . import braid as br
from .braid import BraidWord
from .errors import DegreeMismatch, InvalidMovie, NonCommutingBoundary, OddEulerCharacteristic


@dataclass(frozen=True)
class TorusCoveringChart:
    """Black-vertex-free chart on the torus, fixed by its two boundary braids."""

    degree: int
    a: BraidWord
    b: BraidWord

    def __post_init__(self):
        for name in ("a", "b"):
            w = getattr(self, name)
            if w.degree != self.degree:
                raise DegreeMismatch(
                    f"boundary braid {name} has degree {w.degree}, chart has {self.degree}"
                )
        if not br.commute(self.a, self.b):
            raise NonCommutingBoundary(f"boundary braids do not commute: a={self.a}, b={self.b}")

    @property
    def black_vertices(self) -> int:
        return 0


@dataclass(frozen=True)
class Eq:
    def __str__(self):
        return "eq"


EQ = Eq()


@dataclass(frozen=True)
class Band:
    kind: str  # "ins" or "del"
    position: int
    generator: int
    sign: int = 1

    def __post_init__(self):
        if self.kind not in ("ins", "del"):
            raise ValueError(f"band kind must be 'ins' or 'del', got {self.kind!r}")
        if self.sign not in (1, -1):
            raise ValueError(f"band sign must be +1 or -1, got {self.sign}")

    @property
    def letter(self) -> int:
        return self.sign * self.generator

    def __str__(self):
        return f"band {self.kind} {self.position} {self.generator} {self.sign:+d}"


Event = Union[Eq, Band]


@dataclass(frozen=True)
class ChartMovie:
    """Slices of degree ``degree`` joined by ``len(slices) - 1`` events.

    A closed movie starts and ends with the empty word.  Open segments (such
    as a single 1-handle block) use the same container and are validated with
    ``closed=False``.
    """

    degree: int
    slices: tuple[BraidWord, ...]
    events: tuple[Event, ...]

    def __post_init__(self):
        object.__setattr__(self, "slices", tuple(self.slices))
        object.__setattr__(self, "events", tuple(self.events))

    @property
    def first(self) -> BraidWord:
        return self.slices[0]

    @property
    def last(self) -> BraidWord:
        return self.slices[-1]

    def bands(self):
        """Yield ``(event index, slice before, band)`` for every band event."""
        for k, ev in enumerate(self.events):
            if isinstance(ev, Band):
                yield k, self.slices[k], ev


@dataclass
class ValidationReport:
    failures: list[tuple[str, str]] = field(default_factory=list)
    black_vertices: int = 0
    eq_events: int = 0
    checks: list[tuple[str, bool]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, where: str, why: str) -> None:
        self.failures.append((where, why))


def apply_band(word: BraidWord, band: Band) -> BraidWord:
    """The slice obtained from ``word`` by performing ``band``; raises ValueError if impossible."""
    letters = word.letters
    p = band.position
    if band.kind == "ins":
        if not 0 <= p <= len(letters):
            raise ValueError(f"insert position {p} outside [0, {len(letters)}]")
        return BraidWord(word.degree, letters[:p] + (band.letter,) + letters[p:])
    if not 0 <= p < len(letters):
        raise ValueError(f"delete position {p} outside [0, {len(letters) - 1}]")
    if letters[p] != band.letter:
        raise ValueError(f"letter at {p} is {letters[p]}, band deletes {band.letter}")
    return BraidWord(word.degree, letters[:p] + letters[p + 1 :])


def validate_movie(movie: ChartMovie, closed: bool = True) -> ValidationReport:
    report = ValidationReport()
    n = movie.degree
    slices, events = movie.slices, movie.events
    if not slices:
        report.fail("movie", "no slices")
        return report
    if len(events) != len(slices) - 1:
        report.fail("movie", f"{len(events)} events for {len(slices)} slices")
        return report
    for k, s in enumerate(slices):
        if s.degree != n:
            report.fail(f"slice {k}", f"degree {s.degree} in a degree-{n} movie")
    if report.failures:
        return report
    if closed:
        if slices[0].letters:
            report.fail("slice 0", "first slice is not the empty word")
        if slices[-1].letters:
            report.fail(f"slice {len(slices) - 1}", "last slice is not the empty word")
    for k, ev in enumerate(events):
        before, after = slices[k], slices[k + 1]
        if isinstance(ev, Band):
            report.black_vertices += 1
            if not 1 <= ev.generator <= n - 1:
                report.fail(f"event {k}", f"band generator {ev.generator} outside [1, {n - 1}]")
                continue
            try:
                expected = apply_band(before, ev)
            except ValueError as exc:
                report.fail(f"event {k}", str(exc))
                continue
            if expected.letters != after.letters:
                report.fail(f"event {k}", "adjacent slices differ by more than the stated letter")
        else:
            report.eq_events += 1
            if not br.is_equal(before, after):
                report.fail(f"event {k}", "EQ slices are not equal braids")
    return report


def _require_valid(movie: ChartMovie) -> None:
    report = validate_movie(movie)
    if not report.ok:
        raise InvalidMovie(report)


def black_count(movie: ChartMovie) -> int:
    _require_valid(movie)
    return sum(isinstance(ev, Band) for ev in movie.events)


def _band_merges(movie: ChartMovie) -> list[tuple[int, int]]:
    merges = []
    for _, before, band in movie.bands():
        prefix = BraidWord(movie.degree, before.letters[: band.position])
        back = br.permutation(prefix).inverse()
        merges.append((back(band.generator), back(band.generator + 1)))
    return merges


def _components(degree: int, merges) -> list[tuple[int, ...]]:
    sheets = DisjointSet(range(1, degree + 1))
    for s, t in merges:
        sheets.merge(s, t)
    return sorted((tuple(sorted(c)) for c in sheets.subsets()), key=lambda c: c[0])


def closure_components(movie: ChartMovie) -> list[tuple[int, ...]]:
    """Sheets of the closed surface, grouped into components, sorted by least sheet."""
    _require_valid(movie)
    return _components(movie.degree, _band_merges(movie))


def euler_characteristic(movie: ChartMovie) -> int:
    return 2 * movie.degree - black_count(movie)


def genus_per_component(movie: ChartMovie) -> list[tuple[tuple[int, ...], int]]:
    _require_valid(movie)
    merges = _band_merges(movie)
    comps = _components(movie.degree, merges)
    owner = {s: c for c in comps for s in c}
    bands_in = Counter(owner[s] for s, _ in merges)
    out = []
    for c in comps:
        chi = 2 * len(c) - bands_in[c]
        if chi % 2:
            raise OddEulerCharacteristic(f"component {c} has chi={chi}")
        out.append((c, (2 - chi) // 2))
    return out


# -- movie algebra ------------------------------------------------------------


def in_context(movie: ChartMovie, left: BraidWord | None = None, right: BraidWord | None = None) -> ChartMovie:
    """Multiply every slice by fixed words on the left and right; band positions shift."""
    n = movie.degree
    left = left if left is not None else br.identity(n)
    right = right if right is not None else br.identity(n)
    shift = len(left)
    slices = tuple(br.compose(left, s, right) for s in movie.slices)
    events = tuple(
        Band(ev.kind, ev.position + shift, ev.generator, ev.sign) if isinstance(ev, Band) else ev
        for ev in movie.events
    )
    return ChartMovie(n, slices, events)


def concat(*movies: ChartMovie, joins: Sequence[Event] | None = None) -> ChartMovie:
    """Chain movies end to start.

    Where the last slice of one movie literally equals the first of the next
    they are glued; otherwise an EQ event links them.
    """
    degree = movies[0].degree
    slices = list(movies[0].slices)
    events = list(movies[0].events)
    for m in movies[1:]:
        if m.degree != degree:
            raise DegreeMismatch("cannot chain movies of different degree")
        if m.slices[0].letters != slices[-1].letters:
            slices.append(m.slices[0])
            events.append(EQ)
        slices.extend(m.slices[1:])
        events.extend(m.events)
    return ChartMovie(degree, tuple(slices), tuple(events))


def reversed_movie(movie: ChartMovie) -> ChartMovie:
    """The same movie read backwards: inserts become deletes and vice versa."""
    events = []
    for ev in reversed(movie.events):
        if isinstance(ev, Band):
            ev = Band("del" if ev.kind == "ins" else "ins", ev.position, ev.generator, ev.sign)
        events.append(ev)
    return ChartMovie(movie.degree, tuple(reversed(movie.slices)), tuple(events))


# -- planar chart graphs --------------------------------------------------------


@dataclass(frozen=True)
class ChartEdge:
    id: str
    source: str | None  # None for both ends means a loop (edge without vertices)
    target: str | None
    label: int
    orient: int = 1  # +1: oriented source -> target, -1: target -> source

    @property
    def is_loop(self) -> bool:
        return self.source is None and self.target is None


@dataclass(frozen=True)
class ChartGraph:
    degree: int
    vertices: dict[str, int]
    edges: dict[str, ChartEdge]
    rotation: dict[str, tuple[str, ...]]
    inside: dict[str, str] = field(default_factory=dict)  # edge id -> enclosing loop id


def _heads_tails(g: ChartGraph) -> tuple[dict, dict]:
    """Map vertex -> Counter of outgoing / incoming edge ids."""
    outgoing: dict[str, Counter] = defaultdict(Counter)
    incoming: dict[str, Counter] = defaultdict(Counter)
    for e in g.edges.values():
        if e.is_loop:
            continue
        tail, head = (e.source, e.target) if e.orient == 1 else (e.target, e.source)
        outgoing[tail][e.id] += 1
        incoming[head][e.id] += 1
    return outgoing, incoming


def validate_chart_graph(g: ChartGraph) -> ValidationReport:
    report = ValidationReport()
    n = g.degree
    for e in g.edges.values():
        where = f"edge {e.id}"
        if not 1 <= e.label <= n - 1:
            report.fail(where, f"label {e.label} outside [1, {n - 1}]")
        if e.orient not in (1, -1):
            report.fail(where, f"orientation {e.orient} is not +1/-1")
        if (e.source is None) != (e.target is None):
            report.fail(where, "edge has exactly one endpoint")
        for v in (e.source, e.target):
            if v is not None and v not in g.vertices:
                report.fail(where, f"unknown vertex {v}")
    for eid, loop in g.inside.items():
        if eid not in g.edges or loop not in g.edges or not g.edges[loop].is_loop:
            report.fail(f"edge {eid}", f"nesting refers to {loop}, which is not a loop")
    if report.failures:
        return report

    outgoing, incoming = _heads_tails(g)
    for v, deg in g.vertices.items():
        where = f"vertex {v}"
        if deg not in (1, 4, 6):
            report.fail(where, f"degree {deg} not in {{1, 4, 6}}")
            continue
        incident = outgoing[v] + incoming[v]
        if sum(incident.values()) != deg:
            report.fail(where, f"declared degree {deg}, has {sum(incident.values())} edge ends")
            continue
        if deg == 1:
            report.black_vertices += 1
            continue
        rot = g.rotation.get(v)
        if rot is None or Counter(rot) != incident:
            report.fail(where, "rotation does not list exactly the incident edges")
            continue
        labels = [g.edges[e].label for e in rot]
        # an edge id occurring twice in a rotation is a self-loop; treat its two ends apart
        seen_out: Counter = Counter()
        inward = []
        for e in rot:
            is_out = seen_out[e] < outgoing[v][e]
            seen_out[e] += is_out
            inward.append(not is_out)
        if deg == 4:
            if labels[0] != labels[2] or labels[1] != labels[3]:
                report.fail(where, "diagonal edges carry different labels")
            elif abs(labels[0] - labels[1]) <= 1:
                report.fail(where, f"diagonal labels {labels[0]}, {labels[1]} violate |i-j|>1")
            if inward[0] == inward[2] or inward[1] == inward[3]:
                report.fail(where, "diagonal edges are not oriented coherently")
        else:
            lo = min(labels)
            if max(labels) != lo + 1 or any(labels[k] == labels[(k + 1) % 6] for k in range(6)):
                report.fail(where, "edges are not labeled i and i+1 alternately")
            runs = [inward[k:] + inward[:k] for k in range(6)]
            if not any(r == [True] * 3 + [False] * 3 for r in runs):
                report.fail(where, "not three consecutive inward and three outward edges")

    if not report.failures and not _is_planar(g):
        report.fail("graph", "rotation system is not a planar embedding")
    return report


def _is_planar(g: ChartGraph) -> bool:
    """Euler-formula check of the rotation system: V - E + F = 2 per connected component."""
    # half-edge (edge id, 0) sits at the source, (edge id, 1) at the target
    around: dict[str, list[tuple[str, int]]] = {}
    where: dict[tuple[str, int], tuple[str, int]] = {}
    for v in g.vertices:
        rot = g.rotation.get(v)
        if rot is None:
            rot = tuple(e.id for e in g.edges.values() if v in (e.source, e.target))
        seen: Counter = Counter()
        halves = []
        for eid in rot:
            e = g.edges[eid]
            end = 0 if e.source == v and seen[eid] == 0 else 1
            seen[eid] += 1
            halves.append((eid, end))
        around[v] = halves
        for k, h in enumerate(halves):
            where[h] = (v, k)
    if not where:
        return True

    faces = 0
    seen_h = set()
    for start in where:
        if start in seen_h:
            continue
        faces += 1
        h = start
        while h not in seen_h:
            seen_h.add(h)
            twin = (h[0], 1 - h[1])
            v, k = where[twin]
            h = around[v][(k + 1) % len(around[v])]

    sets = DisjointSet(g.vertices)
    edges = 0
    for e in g.edges.values():
        if not e.is_loop:
            sets.merge(e.source, e.target)
            edges += 1
    touched = {v for v, halves in around.items() if halves}
    comps = len({sets[v] for v in touched})
    return len(touched) - edges + faces == 2 * comps


def recognize_syntactic(g: ChartGraph) -> str:
    """Classify as 'unknotted' (free edges only), 'ribbon' (oval nests) or 'other'."""
    if not validate_chart_graph(g).ok:
        return "other"
    if any(deg != 1 for deg in g.vertices.values()):
        return "other"
    free = {eid for eid, e in g.edges.items() if not e.is_loop}
    loops = {eid for eid, e in g.edges.items() if e.is_loop}
    for eid in free:
        e = g.edges[eid]
        if e.source == e.target:
            return "other"
    if not loops:
        return "unknotted"
    # each loop must enclose exactly one free edge, and loops around it must be nested linearly
    def enclosers(eid):
        chain = []
        while eid in g.inside:
            eid = g.inside[eid]
            if eid in chain:
                return None
            chain.append(eid)
        return chain

    owner: dict[str, str] = {}
    chains = {}
    for eid in free:
        chain = enclosers(eid)
        if chain is None:
            return "other"
        chains[eid] = chain
        for loop in chain:
            if loop in owner:
                return "other"
            owner[loop] = eid
    if set(owner) != loops:
        return "other"
    for eid, chain in chains.items():
        # concentric: nothing else sits between consecutive loops of a nest
        for inner, outer in zip([eid] + chain, chain):
            others = [x for x, box in g.inside.items() if box == outer and x != inner]
            if others:
                return "other"
    return "ribbon"
