"""cdd/lrs ``.ine`` reading and writing, and vertex-list output.

An ``.ine`` H-representation row ``b a_1 ... a_n`` means ``b + a.x >= 0``,
i.e. ``(-a).x <= b``.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .enumerator import EnumerationReport, ProjectedVertexList
from .errors import ParseError
from .polytope import HPolytope

NUMBER_TYPES = ("integer", "rational", "real")


@dataclass
class IneDocument:
    name: str | None
    representation: str
    m: int
    n_plus_1: int
    number_type: str
    rows: np.ndarray
    linearity: list[int] = field(default_factory=list)  # 1-based row numbers


def _number(token, lineno):
    try:
        if "/" in token:
            return float(Fraction(token))
        return float(token)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"not a number: {token!r}", lineno) from None


def _linearity(tokens, lineno):
    try:
        values = [int(t) for t in tokens[1:]]
    except ValueError:
        raise ParseError("malformed linearity line", lineno) from None
    if not values or values[0] != len(values) - 1:
        raise ParseError("linearity count does not match the listed rows", lineno)
    return values[1:]


def read_ine(text: str) -> IneDocument:
    name = None
    representation = "H-representation"
    linearity: list[int] = []
    header = None
    rows: list[list[float]] = []
    state = "preamble"
    lineno = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("*"):
            continue
        tokens = line.split()
        if state == "preamble":
            if line == "begin":
                state = "header"
            elif line in ("H-representation", "V-representation"):
                representation = line
            elif tokens[0] == "linearity":
                linearity = _linearity(tokens, lineno)
            elif name is None:
                name = line
        elif state == "header":
            if len(tokens) != 3 or tokens[2] not in NUMBER_TYPES:
                raise ParseError(f"malformed begin line {line!r}; expected 'm n+1 type'", lineno)
            try:
                m, width = int(tokens[0]), int(tokens[1])
            except ValueError:
                raise ParseError(f"malformed begin line {line!r}", lineno) from None
            if m < 1 or width < 2:
                raise ParseError(f"bad matrix size {m} x {width}", lineno)
            header = (m, width, tokens[2])
            state = "rows"
        elif state == "rows":
            if line == "end":
                if len(rows) != header[0]:
                    raise ParseError(f"expected {header[0]} rows, found {len(rows)}", lineno)
                state = "done"
                continue
            if len(tokens) != header[1]:
                raise ParseError(f"row has {len(tokens)} entries, expected {header[1]}", lineno)
            if len(rows) == header[0]:
                raise ParseError(f"more than {header[0]} rows before 'end'", lineno)
            rows.append([_number(t, lineno) for t in tokens])
        elif tokens[0] == "linearity":
            linearity = _linearity(tokens, lineno)
        # any other line after 'end' is a cdd option and is ignored
    if state == "preamble":
        raise ParseError("no 'begin' line", lineno)
    if state == "header":
        raise ParseError("missing begin line after 'begin'", lineno)
    if state == "rows":
        raise ParseError("missing 'end'", lineno)
    if representation != "H-representation":
        raise ParseError("only H-representation input is supported")
    m, width, number_type = header
    bad = [i for i in linearity if not 1 <= i <= m]
    if bad:
        raise ParseError(f"linearity refers to rows {bad} outside 1..{m}")
    return IneDocument(name, representation, m, width, number_type,
                       np.array(rows, dtype=float), sorted(set(linearity)))


def to_polytope(doc: IneDocument) -> HPolytope:
    """Equality rows listed under ``linearity`` become two opposite inequalities."""
    eq = set(doc.linearity)
    A_rows, b_rows = [], []
    for i, row in enumerate(doc.rows, start=1):
        A_rows.append(-row[1:])
        b_rows.append(row[0])
        if i in eq:
            A_rows.append(row[1:].copy())
            b_rows.append(-row[0])
    try:
        return HPolytope(np.array(A_rows), np.array(b_rows))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def parse_ine(text: str) -> HPolytope:
    return to_polytope(read_ine(text))


def load_ine(path) -> HPolytope:
    with open(path) as fh:
        return parse_ine(fh.read())


def _fmt(v) -> str:
    return f"{float(v):.17g}"


def write_ine(p: HPolytope, name: str = "polytope") -> str:
    lines = [name, "H-representation", "begin", f"{p.m} {p.n + 1} real"]
    for a, b in zip(p.A, p.b):
        lines.append(" ".join([_fmt(b)] + [_fmt(-v) for v in a]))
    lines.append("end")
    return "\n".join(lines) + "\n"


def write_vertices(v: EnumerationReport | ProjectedVertexList, format: str = "csv") -> str:
    """Vertex list as CSV (``theta_deg,x,y``) or JSON.

    Run statistics in the JSON output are null when ``v`` is a bare vertex
    list rather than an enumeration report.
    """
    report = v if isinstance(v, EnumerationReport) else None
    result = report.result if report else v
    if format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["theta_deg", "x", "y"])
        for theta, (x, y) in result.vertices:
            writer.writerow([_fmt(theta), _fmt(x), _fmt(y)])
        return buf.getvalue()
    if format == "json":
        doc = {
            "dims": [result.plane.d1, result.plane.d2],
            "epsilon_deg": report.params.epsilon_deg if report else None,
            "vertices": [{"theta_deg": float(t), "x": float(pt[0]), "y": float(pt[1])}
                         for t, pt in result.vertices],
            "lp_calls": report.lp_calls if report else None,
            "wall_ms": report.wall_ms if report else None,
        }
        return json.dumps(doc, indent=2) + "\n"
    raise ValueError(f"unknown vertex format {format!r}")
