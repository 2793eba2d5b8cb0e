"""Compile a torus-covering chart into a degree-2m surface-link chart movie.

The 1-handle block for a boundary braid ``b`` of degree m is the chain

    i(b) -> i(b) D'^-1 D^-1 D' D -> (m bands) -> i(b) D'^-1 D^-1 Theta
         -> D'^-1 D^-1 i(b*) Theta -> D'^-1 D^-1 Theta j(b*) -> (m bands) -> j(b*)

where ``i`` keeps a braid on the left m strands of B_2m, ``j`` moves it to the
right m strands, D and D' are the half twists of the two blocks and ``b*`` is
:func:`tckit.braid.flip_star` of ``b``.  Each plain arrow is an EQ event; the
bands insert and delete the m occurrences of sigma_m in Theta.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import braid as br
from .braid import BraidWord
from .chart import (
    EQ,
    Band,
    ChartMovie,
    TorusCoveringChart,
    ValidationReport,
    in_context,
    validate_movie,
)
from .errors import DegreeMismatch, NonCommutingBoundary

BLOCK_NAMES = ("b-loops", "a-loops", "H_b", "mirror-H_b", "closing")


@dataclass(frozen=True)
class CompiledChart:
    source: TorusCoveringChart
    movie: ChartMovie
    blocks: tuple[tuple[str, int, int], ...]  # (name, first event, last event), inclusive

    def block(self, name: str) -> tuple[int, int] | None:
        for tag, first, last in self.blocks:
            if tag == name:
                return first, last
        return None


def _left(w: BraidWord, m: int) -> BraidWord:
    return br.iota(w, 0, m)


def _right(w: BraidWord, m: int) -> BraidWord:
    return br.iota(w, m, 0)


def _interleaved(m: int) -> BraidWord:
    """D' D rewritten as Pi'_{m-1} Pi_{m-1} ... Pi'_1 Pi_1 (equal since the blocks commute)."""
    letters: list[int] = []
    for i in range(m - 1, 0, -1):
        letters.extend(br.build_pi(m, i, primed=True).letters)
        letters.extend(br.build_pi(m, i).letters)
    return BraidWord(2 * m, tuple(letters))


def _chain(degree: int, steps) -> ChartMovie:
    """Build a movie from ``(event, next slice)`` steps, dropping EQ steps that change nothing."""
    slices = [steps[0]]
    events = []
    for ev, nxt in steps[1:]:
        if ev is EQ and nxt.letters == slices[-1].letters:
            continue
        events.append(ev)
        slices.append(nxt)
    return ChartMovie(degree, tuple(slices), tuple(events))


def handle_movie(b: BraidWord) -> ChartMovie:
    """The open 1-handle segment H_b, from i(b) to j(flip_star(b)) in B_2m."""
    m = b.degree
    n = 2 * m
    d, dp = br.build_delta(m), br.build_delta(m, primed=True)
    undo = br.compose(br.invert(dp), br.invert(d))
    theta = br.build_theta(m)
    top = _left(b, m)
    flipped = br.flip_star(b)
    prefix = br.compose(top, undo)

    steps: list = [top]
    steps.append((EQ, br.compose(prefix, dp, d)))
    steps.append((EQ, br.compose(prefix, _interleaved(m))))
    sigma_at = [k for k, x in enumerate(theta.letters) if x == m]
    word = steps[-1][1]
    for q in sigma_at:
        band = Band("ins", len(prefix) + q, m, 1)
        word = BraidWord(n, word.letters[: band.position] + (m,) + word.letters[band.position :])
        steps.append((band, word))
    steps.append((EQ, br.compose(undo, _left(flipped, m), theta)))
    word = br.compose(undo, theta, _right(flipped, m))
    steps.append((EQ, word))
    for k, q in enumerate(sigma_at):
        band = Band("del", len(undo) + q - k, m, 1)
        word = BraidWord(n, word.letters[: band.position] + word.letters[band.position + 1 :])
        steps.append((band, word))
    steps.append((EQ, _right(flipped, m)))
    return _chain(n, steps)


def reverse_mirror(movie: ChartMovie) -> ChartMovie:
    """Invert every slice; bands keep their order, flip sign and mirror their position."""
    events = []
    for k, ev in enumerate(movie.events):
        if isinstance(ev, Band):
            length = len(movie.slices[k])
            pos = length - ev.position if ev.kind == "ins" else length - 1 - ev.position
            ev = Band(ev.kind, pos, ev.generator, -ev.sign)
        events.append(ev)
    slices = tuple(br.invert(s) for s in movie.slices)
    return ChartMovie(movie.degree, slices, tuple(events))


def compile_chart(chart: TorusCoveringChart) -> CompiledChart:
    m = chart.degree
    n = 2 * m
    if chart.a.degree != m or chart.b.degree != m:
        raise DegreeMismatch("boundary braids must have the chart's degree")
    if not br.commute(chart.a, chart.b):
        raise NonCommutingBoundary("boundary braids a and b do not commute")

    a, b = _left(chart.a, m), _left(chart.b, m)
    a_inv, b_inv = br.invert(a), br.invert(b)
    b_flip = _right(br.flip_star(chart.b), m)
    b_flip_inv = br.invert(b_flip)
    empty = br.identity(n)

    handle = handle_movie(chart.b)
    pieces = [
        # b-loops open; then a-loops open around the first factor (a and b commute)
        ("b-loops", _chain(n, [empty, (EQ, br.compose(b, b_inv))])),
        ("a-loops", _chain(n, [br.compose(b, b_inv), (EQ, br.compose(a, b, a_inv, b_inv))])),
        ("H_b", in_context(handle, a, br.compose(a_inv, b_inv))),
        ("mirror-H_b", in_context(reverse_mirror(handle), br.compose(a, b_flip, a_inv))),
        # a and j(b*) have disjoint labels, so everything collapses
        (
            "closing",
            _chain(
                n,
                [
                    br.compose(a, b_flip, a_inv, b_flip_inv),
                    (EQ, br.compose(b_flip, b_flip_inv)),
                    (EQ, empty),
                ],
            ),
        ),
    ]

    slices = [empty]
    events: list = []
    blocks = []
    for name, piece in pieces:
        start = len(events)
        if piece.slices[0].letters != slices[-1].letters:
            events.append(EQ)
            slices.append(piece.slices[0])
        events.extend(piece.events)
        slices.extend(piece.slices[1:])
        if len(events) > start:
            blocks.append((name, start, len(events) - 1))
    movie = ChartMovie(n, tuple(slices), tuple(events))
    return CompiledChart(chart, movie, tuple(blocks))


def verify_theorem_steps(b: BraidWord, m: int | None = None) -> ValidationReport:
    """Certify the four isotopy arrows of the 1-handle chain as braid-group identities."""
    m = b.degree if m is None else m
    report = ValidationReport()
    if b.degree != m:
        report.fail("input", f"b has degree {b.degree}, expected {m}")
        return report
    n = 2 * m
    d, dp = br.build_delta(m), br.build_delta(m, primed=True)
    undo = br.compose(br.invert(dp), br.invert(d))
    theta = br.build_theta(m)
    flipped = br.flip_star(b)
    erased = BraidWord(n, tuple(x for x in theta.letters if abs(x) != m))
    checks = [
        ("cancellation", br.compose(undo, dp, d), br.identity(n)),
        ("erasure", erased, br.compose(dp, d)),
        ("flip-through-half-twists", br.compose(_left(b, m), undo), br.compose(undo, _left(flipped, m))),
        ("slide-through-theta", br.compose(_left(flipped, m), theta), br.compose(theta, _right(flipped, m))),
    ]
    for name, lhs, rhs in checks:
        ok = br.is_equal(lhs, rhs)
        report.checks.append((name, ok))
        if not ok:
            report.fail(name, "identity does not hold in the braid group")
    return report


def validate_segment(movie: ChartMovie) -> ValidationReport:
    return validate_movie(movie, closed=False)
