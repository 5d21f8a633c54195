"""Line-oriented complex/complement files and JSON reports.

A file looks like::

    format momangle/1
    kind facets
    name moore-mod3
    vertices 1 2 3 4 5 6 7 8
    1 2 4
    1 2 5
    ...

``kind`` is ``facets`` (a complex), ``missing-faces`` or ``complement``
(a multiset of non-faces). ``{}`` on its own line is the empty simplex.
Lines starting with ``#`` are comments.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .complement import Complement, complex_from_complement, missing_faces
from .complex import Complex, ComplexError

FORMAT_VERSION = "momangle/1"
REPORT_VERSION = "momangle-report/1"
KINDS = ("facets", "missing-faces", "complement")


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, source: str | None = None):
        where = ""
        if source:
            where += f"{source}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}" if where else message)
        self.line = line


@dataclass
class ComplexFile:
    kind: str
    vertices: list[int]
    simplices: list[tuple[int, ...]] = field(default_factory=list)
    name: str | None = None
    provenance: str | None = None

    def to_complex(self) -> Complex:
        if self.kind == "facets":
            return Complex(self.simplices, self.vertices)
        return complex_from_complement(Complement(self.simplices, self.vertices), self.vertices)

    def to_complement(self) -> Complement:
        if self.kind == "facets":
            return missing_faces(self.to_complex())
        return Complement(self.simplices, self.vertices)


def _parse_labels(tokens: list[str], lineno: int, source: str | None) -> tuple[int, ...]:
    out = []
    for tok in tokens:
        try:
            v = int(tok)
        except ValueError:
            raise ParseError(f"expected a vertex label, got {tok!r}", lineno, source) from None
        if v < 1:
            raise ParseError(f"vertex labels must be positive, got {v}", lineno, source)
        out.append(v)
    if len(set(out)) != len(out):
        raise ParseError("repeated label in simplex", lineno, source)
    return tuple(sorted(out))


def parse(text: str, source: str | None = None) -> ComplexFile:
    kind = None
    version = None
    name = provenance = None
    vertices: list[int] | None = None
    simplices: list[tuple[int, ...]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, _, rest = line.partition(" ")
        rest = rest.strip()
        if head == "format":
            version = rest
            if version != FORMAT_VERSION:
                raise ParseError(f"unsupported format {rest!r}", lineno, source)
        elif head == "kind":
            if rest not in KINDS:
                raise ParseError(f"unknown kind {rest!r}; expected one of {', '.join(KINDS)}", lineno, source)
            if kind is not None:
                raise ParseError("kind given twice", lineno, source)
            kind = rest
        elif head == "name":
            name = rest
        elif head == "provenance":
            provenance = rest
        elif head == "vertices":
            vertices = list(_parse_labels(rest.split(), lineno, source))
        elif line == "{}":
            simplices.append(())
        elif head[:1].isdigit() or head[:1] == "-":
            simplices.append(_parse_labels(line.split(), lineno, source))
        else:
            raise ParseError(f"unrecognised line {line!r}", lineno, source)
    if version is None:
        raise ParseError("missing 'format' header", None, source)
    if kind is None:
        raise ParseError("missing 'kind' header", None, source)
    if vertices is None:
        vertices = sorted({v for s in simplices for v in s})
    stray = {v for s in simplices for v in s} - set(vertices)
    if stray:
        raise ParseError(f"labels {sorted(stray)} are not listed in 'vertices'", None, source)
    return ComplexFile(kind, vertices, simplices, name, provenance)


def read(path: str | Path) -> ComplexFile:
    p = Path(path)
    return parse(p.read_text(encoding="utf-8"), str(p))


def _simplex_line(s) -> str:
    return " ".join(map(str, sorted(s))) if s else "{}"


def dumps(cf: ComplexFile) -> str:
    lines = [f"format {FORMAT_VERSION}", f"kind {cf.kind}"]
    if cf.name:
        lines.append(f"name {cf.name}")
    if cf.provenance:
        lines.append(f"provenance {cf.provenance}")
    lines.append("vertices " + " ".join(map(str, sorted(cf.vertices))))
    for s in sorted(tuple(sorted(s)) for s in cf.simplices):
        lines.append(_simplex_line(s))
    return "\n".join(lines) + "\n"


def complex_file(K: Complex, name: str | None = None, provenance: str | None = None) -> ComplexFile:
    return ComplexFile("facets", sorted(K.vertices), K.sorted_facets(), name, provenance)


def complement_file(P: Complement, kind: str = "complement", name: str | None = None) -> ComplexFile:
    if kind not in ("missing-faces", "complement"):
        raise ComplexError(f"bad complement kind {kind!r}")
    return ComplexFile(kind, sorted(P.vertices), [tuple(sorted(m)) for m in P.members], name)


def write_complex(K: Complex, name: str | None = None, provenance: str | None = None) -> str:
    return dumps(complex_file(K, name, provenance))


def write_complement(P: Complement, kind: str = "complement", name: str | None = None) -> str:
    return dumps(complement_file(P, kind, name))


def parse_subsets(text: str, source: str | None = None) -> list[tuple[int, ...]]:
    """One subset per line (``{}`` for the empty set); ``#`` comments allowed."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line == "{}":
            out.append(())
            continue
        out.append(_parse_labels(line.replace(",", " ").split(), lineno, source))
    return out


def dump_report(payload: dict) -> str:
    """Canonical JSON: fixed key order, so equal inputs give identical bytes."""
    return json.dumps({"format": REPORT_VERSION, **payload}, sort_keys=True, indent=2) + "\n"
