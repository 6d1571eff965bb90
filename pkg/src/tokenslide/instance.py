"""Instance data model and the line-oriented text format.

File layout (UTF-8, LF)::

    c <comment>          zero or more, anywhere
    p ts <n> <m> <k>     exactly one, first non-comment line
    e <u> <v>            exactly m lines, 1 <= u,v <= n, u != v
    s <v>                exactly k lines (source tokens)
    t <v>                exactly k lines (target tokens)

Vertices are 1-based on disk and 0-based in memory.  After the header the
order of e/s/t lines is free.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, has_short_cycle, is_independent, vertex_set


class InstanceFormatError(ValueError):
    """A problem in an instance file; ``line`` is the 1-based line number."""

    def __init__(self, line, message):
        super().__init__(f"line {line}: {message}")
        self.line = line


class MalformedHeader(InstanceFormatError):
    pass


class DuplicateEdge(InstanceFormatError):
    pass


class SelfLoop(InstanceFormatError):
    pass


class TokenCountMismatch(InstanceFormatError):
    pass


class NotIndependent(InstanceFormatError):
    pass


class VertexOutOfRange(InstanceFormatError):
    pass


@dataclass(frozen=True)
class Instance:
    """A graph, a token count and the source/target independent sets.

    Girth is deliberately not validated here: the reduction pipeline
    checks it at entry, while the direct solver and the oracle accept any
    girth.
    """

    graph: Graph
    k: int
    source: tuple
    target: tuple

    def __post_init__(self):
        object.__setattr__(self, "source", vertex_set(self.source))
        object.__setattr__(self, "target", vertex_set(self.target))
        if self.k < 1:
            raise ValueError("token count k must be at least 1")
        if len(self.source) != self.k or len(self.target) != self.k:
            raise ValueError("source and target must contain exactly k vertices")
        for v in self.source + self.target:
            if not 0 <= v < self.graph.n:
                raise ValueError(f"token vertex {v} out of range")
        if not is_independent(self.graph, self.source):
            raise ValueError("source set is not independent")
        if not is_independent(self.graph, self.target):
            raise ValueError("target set is not independent")


def parse_instance(data) -> Instance:
    """Parse and validate an instance from bytes or text."""
    if isinstance(data, (bytes, bytearray)):
        text = data.decode("utf-8")
    else:
        text = data

    header = None
    header_line = 0
    n = m = k = 0
    edges = []
    edge_seen = set()
    source_entries = []  # (line, vertex)
    target_entries = []
    last_line = 0

    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line:
            continue
        last_line = lineno
        fields = line.split()
        tag = fields[0]
        if tag == "c":
            continue
        if tag == "p":
            if header is not None:
                raise MalformedHeader(lineno, "duplicate header")
            if len(fields) != 5 or fields[1] != "ts":
                raise MalformedHeader(lineno, "expected 'p ts <n> <m> <k>'")
            try:
                n, m, k = (int(f) for f in fields[2:])
            except ValueError:
                raise MalformedHeader(lineno, "non-integer header field") from None
            if n < 0 or m < 0 or k < 1:
                raise MalformedHeader(lineno, "need n >= 0, m >= 0, k >= 1")
            header = (n, m, k)
            header_line = lineno
            continue
        if header is None:
            raise MalformedHeader(lineno, "content before the 'p ts' header")
        if tag == "e":
            if len(fields) != 3:
                raise MalformedHeader(lineno, "expected 'e <u> <v>'")
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise MalformedHeader(lineno, "non-integer endpoint") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise VertexOutOfRange(lineno, f"edge endpoint outside 1..{n}")
            if u == v:
                raise SelfLoop(lineno, f"self-loop at vertex {u}")
            key = (min(u, v), max(u, v))
            if key in edge_seen:
                raise DuplicateEdge(lineno, f"edge {u} {v} listed twice")
            if len(edges) >= m:
                raise MalformedHeader(lineno, f"more than {m} edge lines")
            edge_seen.add(key)
            edges.append((u - 1, v - 1))
        elif tag in ("s", "t"):
            if len(fields) != 2:
                raise MalformedHeader(lineno, f"expected '{tag} <v>'")
            try:
                v = int(fields[1])
            except ValueError:
                raise MalformedHeader(lineno, "non-integer vertex") from None
            if not 1 <= v <= n:
                raise VertexOutOfRange(lineno, f"token vertex outside 1..{n}")
            entries = source_entries if tag == "s" else target_entries
            if any(v - 1 == w for _, w in entries):
                raise TokenCountMismatch(lineno, f"vertex {v} listed twice")
            if len(entries) >= k:
                raise TokenCountMismatch(lineno, f"more than {k} '{tag}' lines")
            entries.append((lineno, v - 1))
        else:
            raise MalformedHeader(lineno, f"unrecognised line tag {tag!r}")

    eof = last_line + 1
    if header is None:
        raise MalformedHeader(eof, "missing 'p ts' header")
    if len(edges) < m:
        raise MalformedHeader(eof, f"expected {m} edge lines, found {len(edges)}")
    if len(source_entries) < k:
        raise TokenCountMismatch(eof, f"expected {k} 's' lines")
    if len(target_entries) < k:
        raise TokenCountMismatch(eof, f"expected {k} 't' lines")

    graph = Graph.from_edges(n, edges)
    for entries, label in ((source_entries, "s"), (target_entries, "t")):
        chosen = {v for _, v in entries}
        for lineno, v in entries:
            hit = graph.neighbor_set(v) & chosen
            if hit:
                raise NotIndependent(
                    lineno, f"'{label}' tokens {min(hit) + 1} and {v + 1} are adjacent"
                )
    return Instance(
        graph, k, [v for _, v in source_entries], [v for _, v in target_entries]
    )


def serialize_instance(instance: Instance) -> str:
    """Canonical text form: parse(serialize(i)) == i, byte-stable."""
    g = instance.graph
    lines = [f"p ts {g.n} {g.m} {instance.k}"]
    for u, v in sorted(g.edges()):
        lines.append(f"e {u + 1} {v + 1}")
    for v in instance.source:
        lines.append(f"s {v + 1}")
    for v in instance.target:
        lines.append(f"t {v + 1}")
    return "\n".join(lines) + "\n"


def validate_girth(instance: Instance) -> bool:
    """True iff the instance graph has girth five or more (forests count)."""
    return not has_short_cycle(instance.graph)


def load_instance(path) -> Instance:
    with open(path, "rb") as fh:
        return parse_instance(fh.read())


def save_instance(instance: Instance, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(serialize_instance(instance))
