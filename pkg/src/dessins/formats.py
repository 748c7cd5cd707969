"""Line-oriented text formats for dessins and Hubbard trees, plus DOT export.

Dessin file::

    dessin v1
    edges: 4
    s0: (2 3)
    s1: (1 2)(3 4)
    mark0: B:1      # optional, together with mark1
    mark1: B:4

Hubbard file::

    hubbard v1
    vertices: 3
    rot 1: 2
    rot 2: 1 3
    rot 3: 2
    tau: 1 3 1
    delta: 1 2 1

``#`` starts a comment.  Several documents may be joined with ``---`` lines.
"""

from __future__ import annotations

from typing import Union

from .dessin import BLACK, NormalizedDessin, TreeDessin, VertexId, vertices
from .hubbard import HubbardError, HubbardTree
from .permcore import Perm, format_cycles

__all__ = [
    "ParseError",
    "parse",
    "parse_many",
    "serialize",
    "serialize_many",
    "to_dot",
]

Document = Union[TreeDessin, NormalizedDessin, HubbardTree]


class ParseError(ValueError):
    def __init__(self, line: int, column: int, reason: str):
        super().__init__(f"line {line}, column {column}: {reason}")
        self.line = line
        self.column = column
        self.reason = reason


def _content_lines(text: str, first_line: int = 1):
    for i, raw in enumerate(text.splitlines(), start=first_line):
        body = raw.split("#", 1)[0].rstrip()
        if body.strip():
            yield i, body


def _field(lineno: int, body: str, name: str) -> str:
    key, sep, value = body.partition(":")
    if not sep or key.strip() != name:
        raise ParseError(lineno, 1, f"expected '{name}:'")
    return value.strip()


def _column(body: str, value: str) -> int:
    idx = body.find(value)
    return idx + 1 if idx >= 0 else 1


def _parse_dessin(lines) -> TreeDessin | NormalizedDessin:
    (ln, body), *rest = lines
    if len(rest) < 3:
        raise ParseError(ln, 1, "dessin needs edges, s0 and s1 lines")
    (l1, b1), (l2, b2), (l3, b3), *marks = rest
    raw = _field(l1, b1, "edges")
    try:
        n = int(raw)
    except ValueError:
        raise ParseError(l1, _column(b1, raw), f"edge count {raw!r} is not an integer") from None
    if n < 1:
        raise ParseError(l1, _column(b1, raw), "edge count must be positive")
    perms = []
    for lno, b, name in ((l2, b2, "s0"), (l3, b3, "s1")):
        value = _field(lno, b, name)
        try:
            perms.append(Perm.parse(value, n))
        except ValueError as exc:
            raise ParseError(lno, _column(b, value), str(exc)) from None
    d = TreeDessin(*perms)
    if not marks:
        return d
    if len(marks) != 2:
        lno, b = marks[0] if len(marks) == 1 else marks[2]
        raise ParseError(lno, 1, "mark0 and mark1 must appear together, once each")
    vids = []
    for (lno, b), name in zip(marks, ("mark0", "mark1")):
        value = _field(lno, b, name)
        try:
            vid = VertexId.parse(value)
        except ValueError as exc:
            raise ParseError(lno, _column(b, value), str(exc)) from None
        if not d.has_vertex(vid):
            raise ParseError(lno, _column(b, value), f"{vid} is not a vertex (rep must be the smallest edge)")
        vids.append(vid)
    return NormalizedDessin(d, *vids)


def _int_list(lno: int, body: str, value: str) -> list[int]:
    try:
        return [int(tok) for tok in value.replace(",", " ").split()]
    except ValueError:
        raise ParseError(lno, _column(body, value), f"expected integers, got {value!r}") from None


def _parse_hubbard(lines) -> HubbardTree:
    (ln, _), *rest = lines
    if not rest:
        raise ParseError(ln, 1, "hubbard tree needs a vertices line")
    (l1, b1), *rest = rest
    raw = _field(l1, b1, "vertices")
    try:
        n = int(raw)
    except ValueError:
        raise ParseError(l1, _column(b1, raw), f"vertex count {raw!r} is not an integer") from None
    if len(rest) != n + 2:
        raise ParseError(l1, 1, f"expected {n} rot lines followed by tau and delta")
    rotation = []
    for v, (lno, b) in enumerate(rest[:n], start=1):
        key, sep, value = b.partition(":")
        if not sep or key.split() != ["rot", str(v)]:
            raise ParseError(lno, 1, f"expected 'rot {v}:'")
        rotation.append(tuple(_int_list(lno, b, value)))
    (lt, bt), (ld, bd) = rest[n:]
    tau = _int_list(lt, bt, _field(lt, bt, "tau"))
    delta = _int_list(ld, bd, _field(ld, bd, "delta"))
    if len(tau) != n or len(delta) != n:
        raise ParseError(lt if len(tau) != n else ld, 1, f"need {n} entries")
    try:
        return HubbardTree(tuple(rotation), tuple(tau), tuple(delta))
    except HubbardError as exc:
        raise ParseError(ln, 1, f"invalid hubbard tree: {exc}") from None


def _parse_block(lines) -> Document:
    if not lines:
        raise ParseError(1, 1, "empty document")
    ln, header = lines[0]
    header = " ".join(header.split())
    if header == "dessin v1":
        return _parse_dessin(lines)
    if header == "hubbard v1":
        return _parse_hubbard(lines)
    raise ParseError(ln, 1, f"unknown header {header!r}, expected 'dessin v1' or 'hubbard v1'")


def parse_many(text: str) -> list[Document]:
    """Parse a stream of documents separated by ``---`` lines."""
    blocks: list[list[tuple[int, str]]] = [[]]
    for ln, body in _content_lines(text):
        if body.strip() == "---":
            blocks.append([])
        else:
            blocks[-1].append((ln, body))
    blocks = [b for b in blocks if b]
    if not blocks:
        raise ParseError(1, 1, "no document found")
    return [_parse_block(b) for b in blocks]


def parse(text: str) -> Document:
    docs = parse_many(text)
    if len(docs) != 1:
        raise ParseError(1, 1, f"expected one document, found {len(docs)}")
    return docs[0]


def serialize(value: Document) -> str:
    if isinstance(value, HubbardTree):
        lines = ["hubbard v1", f"vertices: {value.v_count}"]
        for v, nbrs in enumerate(value.rotation, start=1):
            lines.append(f"rot {v}: " + " ".join(map(str, nbrs)))
        lines.append("tau: " + " ".join(map(str, value.tau)))
        lines.append("delta: " + " ".join(map(str, value.delta)))
        return "\n".join(lines) + "\n"
    d = value.dessin if isinstance(value, NormalizedDessin) else value
    lines = [
        "dessin v1",
        f"edges: {d.n_edges}",
        f"s0: {format_cycles(d.s0)}",
        f"s1: {format_cycles(d.s1)}",
    ]
    if isinstance(value, NormalizedDessin):
        lines.append(f"mark0: {value.mark0}")
        lines.append(f"mark1: {value.mark1}")
    return "\n".join(lines) + "\n"


def serialize_many(values) -> str:
    return "---\n".join(serialize(v) for v in values)


def _dessin_dot(value: TreeDessin | NormalizedDessin) -> str:
    d = value.dessin if isinstance(value, NormalizedDessin) else value
    marks = {}
    if isinstance(value, NormalizedDessin):
        marks = {value.mark0: "z", value.mark1: "w"}
    lines = ["graph dessin {", "  node [shape=circle, label=\"\", width=0.2];"]
    for vid, val in vertices(d):
        name = f"{vid.color}{vid.rep}"
        style = "filled, fillcolor=black" if vid.color == BLACK else "solid"
        extra = f", xlabel=\"{marks[vid]}\"" if vid in marks else ""
        lines.append(f"  {name} [style=\"{style}\", tooltip=\"{vid} valence {val}\"{extra}];")
    for e in range(1, d.n_edges + 1):
        b = d.vertex_of("B", e)
        w = d.vertex_of("W", e)
        lines.append(f"  B{b.rep} -- W{w.rep} [label=\"{e}\"];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _hubbard_dot(t: HubbardTree) -> str:
    lines = ["digraph hubbard {", "  node [shape=circle];"]
    for v in range(1, t.v_count + 1):
        lines.append(f"  v{v} [label=\"{v}\", xlabel=\"{t.delta[v - 1]}\"];")
    for u, v in t.edges:
        lines.append(f"  v{u} -> v{v} [dir=none];")
    for v in range(1, t.v_count + 1):
        lines.append(f"  v{v} -> v{t.tau[v - 1]} [style=dashed, constraint=false];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_dot(value: Document) -> str:
    """DOT source; black vertices filled, marks labeled z and w, tau dashed."""
    if isinstance(value, HubbardTree):
        return _hubbard_dot(value)
    return _dessin_dot(value)
