"""Line-oriented text formats.

``.braid``   ``degree=<n>; word=<signed indices>`` (header and word may sit on
             separate lines; several words per file are allowed)
``.tc``      ``degree=<m>``, ``a=<word>``, ``b=<word>``
``.tcm``     ``degree=<n>``, then ``slice=`` lines alternating with
             ``event=eq`` / ``event=band <ins|del> <pos> <gen> <sign>``, and
             optionally ``block=<name> <first-event> <last-event>`` trailers
chart graph  ``degree=<n>``, ``v <id> <degree>``, ``e <id> <from> <to> <label> <orient>``,
             ``rot <vertex> <edge ids...>`` and ``in <edge> <loop>``; ``-`` as both
             endpoints makes a loop

Blank lines and lines starting with ``#`` are ignored everywhere.  Emitters
produce the canonical form, which parses back to the same value.
"""

from __future__ import annotations

import re
from typing import Iterator

from .braid import BraidWord
from .chart import EQ, Band, ChartEdge, ChartGraph, ChartMovie, TorusCoveringChart
from .compiler import CompiledChart
from .errors import ParseError, TckitError


def _lines(text: str) -> Iterator[tuple[int, str]]:
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield number, line


def _column(raw_line: str, needle: str) -> int:
    return raw_line.find(needle) + 1 if needle in raw_line else 1


def parse_letters(text: str, line: int | None = None) -> tuple[int, ...]:
    body = re.sub(r"\s+", "", text)
    if not body:
        return ()
    out = []
    col = 1
    for tok in body.split(","):
        try:
            value = int(tok)
        except ValueError:
            raise ParseError(f"bad letter {tok!r}", line, col) from None
        if value == 0:
            raise ParseError("letter 0 is not a generator", line, col)
        out.append(value)
        col += len(tok) + 1
    return tuple(out)


def format_letters(letters) -> str:
    return ",".join(str(x) for x in letters)


def _int(tok: str, what: str, line: int, raw: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {tok!r}", line, _column(raw, tok)) from None


def _word(degree: int, letters, line: int) -> BraidWord:
    try:
        return BraidWord(degree, letters)
    except TckitError as exc:
        raise ParseError(str(exc), line) from None


# -- braid words ---------------------------------------------------------------


def parse_braids(text: str) -> list[BraidWord]:
    words = []
    degree = None
    for number, line in _lines(text):
        compact = re.sub(r"\s+", "", line)
        for field in filter(None, compact.split(";")):
            key, sep, value = field.partition("=")
            if not sep:
                raise ParseError(f"expected key=value, got {field!r}", number, _column(compact, field))
            if key == "degree":
                degree = _int(value, "degree", number, line)
                if degree < 1:
                    raise ParseError("degree must be >= 1", number)
            elif key == "word":
                if degree is None:
                    raise ParseError("word= before degree=", number, _column(compact, field))
                words.append(_word(degree, parse_letters(value, number), number))
            else:
                raise ParseError(f"unknown key {key!r}", number, _column(compact, field))
    if degree is not None and not words:
        raise ParseError("degree= without word=")
    return words


def parse_braid(text: str) -> BraidWord:
    words = parse_braids(text)
    if len(words) != 1:
        raise ParseError(f"expected exactly one braid word, found {len(words)}")
    return words[0]


def format_braid(w: BraidWord) -> str:
    return f"degree={w.degree}; word={format_letters(w.letters)}\n"


# -- torus-covering charts -------------------------------------------------------


def parse_chart(text: str) -> TorusCoveringChart:
    fields: dict[str, tuple[int, str]] = {}
    for number, line in _lines(text):
        key, sep, value = line.partition("=")
        key = key.strip()
        if not sep or key not in ("degree", "a", "b"):
            raise ParseError(f"expected degree=, a= or b=, got {line!r}", number, 1)
        if key in fields:
            raise ParseError(f"duplicate {key}=", number, 1)
        fields[key] = (number, value)
    for key in ("degree", "a", "b"):
        if key not in fields:
            raise ParseError(f"missing {key}=")
    number, raw = fields["degree"]
    m = _int(raw.strip(), "degree", number, raw)
    if m < 1:
        raise ParseError("degree must be >= 1", number)
    a = _word(m, parse_letters(fields["a"][1], fields["a"][0]), fields["a"][0])
    b = _word(m, parse_letters(fields["b"][1], fields["b"][0]), fields["b"][0])
    return TorusCoveringChart(m, a, b)


def format_chart(chart: TorusCoveringChart) -> str:
    return (
        f"degree={chart.degree}\n"
        f"a={format_letters(chart.a.letters)}\n"
        f"b={format_letters(chart.b.letters)}\n"
    )


# -- chart movies -------------------------------------------------------------------


def parse_movie_with_blocks(text: str) -> tuple[ChartMovie, tuple[tuple[str, int, int], ...]]:
    degree = None
    slices: list[BraidWord] = []
    events: list = []
    blocks = []
    expect = "degree"
    for number, line in _lines(text):
        key, sep, value = line.partition("=")
        key = key.strip()
        if not sep:
            raise ParseError(f"expected key=value, got {line!r}", number, 1)
        if key == "degree":
            if expect != "degree":
                raise ParseError("degree= must come first, once", number, 1)
            degree = _int(value.strip(), "degree", number, line)
            if degree < 1:
                raise ParseError("degree must be >= 1", number)
            expect = "slice"
        elif key == "slice":
            if expect != "slice":
                raise ParseError(f"expected {expect}=, got slice=", number, 1)
            slices.append(_word(degree, parse_letters(value, number), number))
            expect = "event"
        elif key == "event":
            if expect != "event":
                raise ParseError(f"expected {expect}=, got event=", number, 1)
            events.append(_parse_event(value, number, line))
            expect = "slice"
        elif key == "block":
            if expect == "degree" or expect == "slice":
                raise ParseError("block= trailer before the final slice", number, 1)
            parts = value.split()
            if len(parts) != 3:
                raise ParseError("block=<name> <first-event> <last-event>", number, 1)
            blocks.append(
                (parts[0], _int(parts[1], "first event", number, line), _int(parts[2], "last event", number, line))
            )
            expect = "block"
        else:
            raise ParseError(f"unknown key {key!r}", number, 1)
    if degree is None:
        raise ParseError("missing degree=")
    if not slices or expect == "slice":
        raise ParseError("movie must end with a slice")
    return ChartMovie(degree, tuple(slices), tuple(events)), tuple(blocks)


def _parse_event(value: str, number: int, line: str):
    parts = value.split()
    if parts == ["eq"]:
        return EQ
    if len(parts) != 5 or parts[0] != "band":
        raise ParseError(f"bad event {value.strip()!r}", number, _column(line, value.strip()))
    kind = parts[1]
    if kind not in ("ins", "del"):
        raise ParseError(f"band kind must be ins or del, got {kind!r}", number, _column(line, kind))
    pos = _int(parts[2], "band position", number, line)
    gen = _int(parts[3], "band generator", number, line)
    sign = _int(parts[4], "band sign", number, line)
    if sign not in (1, -1):
        raise ParseError(f"band sign must be +1 or -1, got {parts[4]}", number, _column(line, parts[4]))
    return Band(kind, pos, gen, sign)


def parse_movie(text: str) -> ChartMovie:
    return parse_movie_with_blocks(text)[0]


def format_movie(movie: ChartMovie, blocks=()) -> str:
    lines = [f"degree={movie.degree}", f"slice={format_letters(movie.slices[0].letters)}"]
    for ev, s in zip(movie.events, movie.slices[1:]):
        lines.append(f"event={ev}")
        lines.append(f"slice={format_letters(s.letters)}")
    for name, first, last in blocks:
        lines.append(f"block={name} {first} {last}")
    return "\n".join(lines) + "\n"


def format_compiled(compiled: CompiledChart) -> str:
    return format_movie(compiled.movie, compiled.blocks)


# -- planar chart graphs ----------------------------------------------------------------


def parse_chart_graph(text: str) -> ChartGraph:
    degree = None
    vertices: dict[str, int] = {}
    edges: dict[str, ChartEdge] = {}
    rotation: dict[str, tuple[str, ...]] = {}
    inside: dict[str, str] = {}
    for number, line in _lines(text):
        if line.startswith("degree="):
            degree = _int(line.partition("=")[2].strip(), "degree", number, line)
            continue
        parts = line.split()
        tag = parts[0]
        if tag == "v" and len(parts) == 3:
            vertices[parts[1]] = _int(parts[2], "vertex degree", number, line)
        elif tag == "e" and len(parts) == 6:
            _, eid, src, dst, label, orient = parts
            if orient in ("+", "-"):
                orient += "1"
            ends = [None if x == "-" else x for x in (src, dst)]
            edges[eid] = ChartEdge(
                eid, ends[0], ends[1], _int(label, "label", number, line), _int(orient, "orientation", number, line)
            )
        elif tag == "rot" and len(parts) >= 2:
            rotation[parts[1]] = tuple(parts[2:])
        elif tag == "in" and len(parts) == 3:
            inside[parts[1]] = parts[2]
        else:
            raise ParseError(f"unrecognized chart-graph line {line!r}", number, 1)
    if degree is None:
        raise ParseError("missing degree=")
    for v, rot in rotation.items():
        for eid in rot:
            if eid not in edges:
                raise ParseError(f"rotation at {v} names unknown edge {eid}")
    return ChartGraph(degree, vertices, edges, rotation, inside)


def format_chart_graph(g: ChartGraph) -> str:
    lines = [f"degree={g.degree}"]
    lines += [f"v {v} {d}" for v, d in g.vertices.items()]
    for e in g.edges.values():
        src = "-" if e.source is None else e.source
        dst = "-" if e.target is None else e.target
        lines.append(f"e {e.id} {src} {dst} {e.label} {e.orient:+d}")
    lines += [f"rot {v} {' '.join(rot)}" for v, rot in g.rotation.items()]
    lines += [f"in {x} {loop}" for x, loop in g.inside.items()]
    return "\n".join(lines) + "\n"


# -- reports -----------------------------------------------------------------------------


def format_invariants(degree: int, blacks: int, chi: int, genera) -> str:
    genus_list = ",".join(str(g) for _, g in genera)
    return (
        f"degree={degree}\n"
        f"blacks={blacks}\n"
        f"chi={chi}\n"
        f"components={len(genera)}\n"
        f"genus=[{genus_list}]\n"
    )


def format_validation(report) -> str:
    lines = [f"ok={'true' if report.ok else 'false'}", f"blacks={report.black_vertices}", f"eq={report.eq_events}"]
    for name, ok in report.checks:
        lines.append(f"check={name} {'pass' if ok else 'fail'}")
    for where, why in report.failures:
        lines.append(f"failure={where}: {why}")
    return "\n".join(lines) + "\n"
