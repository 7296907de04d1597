"""Canonical text interchange format for images, maps and certificates.

Documents are line-oriented UTF-8 with no floating point anywhere.
Points are written as space-separated integers and always appear in
lexicographic order; map tables are sorted by domain point. Each
document starts with a version line, so parsers can refuse dialects
they do not know. The three kinds:

    format 1                      format 1
    kind image                    kind map
    adjacency <u> <dim>           domain adjacency <u> <dim>
    points <N>                    domain points <N>
    <N coordinate lines>          <N coordinate lines>
                                  codomain adjacency <u> <dim>
                                  codomain points <M>
                                  <M coordinate lines>
                                  table <N>
                                  <N lines "x.. -> y..">

    format 1
    kind homotopy
    domain adjacency <u> <dim>
    domain points <N>
    <N coordinate lines>
    codomain adjacency <u> <dim>
    codomain points <M>
    <M coordinate lines>
    f identity | constant <coords> | table
    g identity | constant <coords> | table
    steps <m+1>
    step 0
    <N lines "x.. -> y..">
    ...

The f and g lines name the certificate's endpoint maps; ``table`` means
"as given by the first (respectively last) step". Serialization is
canonical, so parse(serialize(x)) == x and serialize is byte-stable.
"""

from __future__ import annotations

from dataclasses import dataclass

from .homotopy import Homotopy
from .image import DigitalImage
from .lattice import Adjacency, Point
from .mapping import DigitalMap, constant_map, identity_map

FORMAT_VERSION = 1

KIND_IMAGE = "image"
KIND_MAP = "map"
KIND_HOMOTOPY = "homotopy"


class ParseError(ValueError):
    """Malformed document; carries the 1-based offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}{message}")


@dataclass(frozen=True)
class Certificate:
    """A homotopy together with its declared endpoint maps."""

    homotopy: Homotopy
    start: DigitalMap
    end: DigitalMap


@dataclass(frozen=True)
class Document:
    kind: str
    format_version: int
    payload: DigitalImage | DigitalMap | Certificate


# -- serialization -----------------------------------------------------------


def _point_line(p: Point) -> str:
    return " ".join(str(c) for c in p)


def _image_lines(img: DigitalImage, prefix: str = "") -> list[str]:
    adj = img.adjacency
    lines = [
        f"{prefix}adjacency {adj.u} {adj.dimension}",
        f"{prefix}points {len(img)}",
    ]
    lines.extend(_point_line(p) for p in img.points)
    return lines


def _table_lines(f: DigitalMap) -> list[str]:
    return [f"{_point_line(x)} -> {_point_line(y)}" for x, y in f.pairs]


def serialize_image(img: DigitalImage) -> str:
    lines = [f"format {FORMAT_VERSION}", f"kind {KIND_IMAGE}"]
    lines.extend(_image_lines(img))
    return "\n".join(lines) + "\n"


def serialize_map(f: DigitalMap) -> str:
    lines = [f"format {FORMAT_VERSION}", f"kind {KIND_MAP}"]
    lines.extend(_image_lines(f.domain, "domain "))
    lines.extend(_image_lines(f.codomain, "codomain "))
    lines.append(f"table {len(f.pairs)}")
    lines.extend(_table_lines(f))
    return "\n".join(lines) + "\n"


def _endpoint_name(f: DigitalMap) -> str:
    if f.domain == f.codomain and f == identity_map(f.domain):
        return "identity"
    values = set(f.values)
    if len(values) == 1:
        return f"constant {_point_line(values.pop())}"
    return "table"


def serialize_homotopy(F: Homotopy) -> str:
    """Write a certificate; endpoints are named when they are recognizable."""
    lines = [f"format {FORMAT_VERSION}", f"kind {KIND_HOMOTOPY}"]
    lines.extend(_image_lines(F.domain, "domain "))
    lines.extend(_image_lines(F.codomain, "codomain "))
    lines.append(f"f {_endpoint_name(F.steps[0])}")
    lines.append(f"g {_endpoint_name(F.steps[-1])}")
    lines.append(f"steps {len(F.steps)}")
    for t, step in enumerate(F.steps):
        lines.append(f"step {t}")
        lines.extend(_table_lines(step))
    return "\n".join(lines) + "\n"


def serialize_document(doc: Document) -> str:
    if doc.kind == KIND_IMAGE:
        return serialize_image(doc.payload)
    if doc.kind == KIND_MAP:
        return serialize_map(doc.payload)
    if doc.kind == KIND_HOMOTOPY:
        return serialize_homotopy(doc.payload.homotopy)
    raise ValueError(f"unknown document kind {doc.kind!r}")


# -- parsing -----------------------------------------------------------------


class _Reader:
    def __init__(self, text: str):
        self.lines = text.split("\n")
        # Canonical files end with one newline; tolerate trailing blanks.
        while self.lines and self.lines[-1] == "":
            self.lines.pop()
        self.pos = 0

    @property
    def line_no(self) -> int:
        return self.pos

    def error(self, message: str) -> ParseError:
        return ParseError(message, line=self.pos)

    def next_line(self, expect: str | None = None) -> str:
        if self.pos >= len(self.lines):
            raise ParseError(
                f"unexpected end of document, expected {expect or 'more input'}",
                line=len(self.lines) + 1,
            )
        line = self.lines[self.pos]
        self.pos += 1
        return line

    def fields(self, keyword: str, count: int | None = None) -> list[str]:
        line = self.next_line(expect=f"'{keyword} ...'")
        parts = line.split()
        if not parts or " ".join(parts[: len(keyword.split())]) != keyword:
            raise self.error(f"expected '{keyword} ...', got {line!r}")
        rest = parts[len(keyword.split()):]
        if count is not None and len(rest) != count:
            raise self.error(
                f"'{keyword}' takes {count} field(s), got {len(rest)}"
            )
        return rest

    def ints(self, keyword: str, count: int | None = None) -> list[int]:
        rest = self.fields(keyword, count)
        try:
            return [int(tok) for tok in rest]
        except ValueError:
            raise self.error(f"non-integer field in '{keyword}' line") from None


def _parse_int(reader: _Reader, tok: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise reader.error(f"expected an integer, got {tok!r}") from None


def _parse_point(reader: _Reader, dimension: int) -> Point:
    line = reader.next_line(expect="a point line")
    toks = line.split()
    if len(toks) != dimension:
        raise reader.error(
            f"point has {len(toks)} coordinates, expected {dimension}"
        )
    return tuple(_parse_int(reader, t) for t in toks)


def _parse_image_section(reader: _Reader, prefix: str = "") -> DigitalImage:
    u, dim = reader.ints(f"{prefix}adjacency".strip(), 2)
    try:
        adj = Adjacency(dim, u)
    except ValueError as exc:
        raise reader.error(str(exc)) from None
    (count,) = reader.ints(f"{prefix}points".strip(), 1)
    if count < 0:
        raise reader.error("negative point count")
    points = [_parse_point(reader, dim) for _ in range(count)]
    try:
        img = DigitalImage(tuple(points), adj)
    except ValueError as exc:
        raise reader.error(str(exc)) from None
    if len(img) != count:
        raise reader.error("duplicate points in image section")
    return img


def _parse_table(
    reader: _Reader, domain: DigitalImage, codomain: DigitalImage, count: int
) -> DigitalMap:
    pairs = []
    dim_x = domain.adjacency.dimension
    dim_y = codomain.adjacency.dimension
    for _ in range(count):
        line = reader.next_line(expect="a table line")
        toks = line.split()
        if len(toks) != dim_x + dim_y + 1 or toks[dim_x] != "->":
            raise reader.error(
                f"expected '{dim_x} ints -> {dim_y} ints', got {line!r}"
            )
        x = tuple(_parse_int(reader, t) for t in toks[:dim_x])
        y = tuple(_parse_int(reader, t) for t in toks[dim_x + 1:])
        pairs.append((x, y))
    try:
        return DigitalMap(domain, codomain, tuple(pairs))
    except ValueError as exc:
        raise reader.error(str(exc)) from None


def _parse_endpoint(
    reader: _Reader, label: str, domain: DigitalImage, codomain: DigitalImage
) -> str | Point | None:
    rest = reader.fields(label)
    if rest == ["identity"]:
        if domain != codomain:
            raise reader.error("identity endpoint needs equal domain and codomain")
        return "identity"
    if rest == ["table"]:
        return None
    if rest and rest[0] == "constant":
        coords = tuple(_parse_int(reader, t) for t in rest[1:])
        if len(coords) != codomain.adjacency.dimension:
            raise reader.error("constant endpoint has wrong dimension")
        return coords
    raise reader.error(
        f"'{label}' must be identity, constant <coords>, or table"
    )


def _endpoint_map(
    spec: str | Point | None, fallback: DigitalMap
) -> DigitalMap:
    if spec is None:
        return fallback
    if spec == "identity":
        return identity_map(fallback.domain)
    return constant_map(fallback.codomain, spec)


def parse_document(text: str) -> Document:
    reader = _Reader(text)
    (version,) = reader.ints("format", 1)
    if version != FORMAT_VERSION:
        raise reader.error(
            f"unsupported format version {version}, expected {FORMAT_VERSION}"
        )
    (kind,) = reader.fields("kind", 1)

    if kind == KIND_IMAGE:
        img = _parse_image_section(reader)
        payload: DigitalImage | DigitalMap | Certificate = img
    elif kind == KIND_MAP:
        domain = _parse_image_section(reader, "domain ")
        codomain = _parse_image_section(reader, "codomain ")
        (count,) = reader.ints("table", 1)
        payload = _parse_table(reader, domain, codomain, count)
    elif kind == KIND_HOMOTOPY:
        domain = _parse_image_section(reader, "domain ")
        codomain = _parse_image_section(reader, "codomain ")
        f_spec = _parse_endpoint(reader, "f", domain, codomain)
        g_spec = _parse_endpoint(reader, "g", domain, codomain)
        (step_count,) = reader.ints("steps", 1)
        if step_count < 1:
            raise reader.error("a homotopy document needs at least one step")
        steps = []
        for t in range(step_count):
            (label,) = reader.ints("step", 1)
            if label != t:
                raise reader.error(f"expected 'step {t}', got 'step {label}'")
            steps.append(_parse_table(reader, domain, codomain, len(domain)))
        try:
            F = Homotopy(tuple(steps))
            payload = Certificate(
                F,
                _endpoint_map(f_spec, F.steps[0]),
                _endpoint_map(g_spec, F.steps[-1]),
            )
        except ValueError as exc:
            raise reader.error(str(exc)) from None
    else:
        raise reader.error(f"unknown kind {kind!r}")

    if reader.pos != len(reader.lines):
        raise ParseError("trailing content after document", line=reader.pos + 1)
    return Document(kind, version, payload)


def parse_image(text: str) -> DigitalImage:
    doc = parse_document(text)
    if doc.kind != KIND_IMAGE:
        raise ParseError(f"expected an image document, got kind {doc.kind!r}")
    return doc.payload


def parse_map(text: str) -> DigitalMap:
    doc = parse_document(text)
    if doc.kind != KIND_MAP:
        raise ParseError(f"expected a map document, got kind {doc.kind!r}")
    return doc.payload


def parse_homotopy(text: str) -> Certificate:
    doc = parse_document(text)
    if doc.kind != KIND_HOMOTOPY:
        raise ParseError(f"expected a homotopy document, got kind {doc.kind!r}")
    return doc.payload
