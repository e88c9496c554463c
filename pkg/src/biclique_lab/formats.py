"""Text formats: edge lists, graph6 (read only), poset pair lists, DOT."""

from __future__ import annotations

from .graph import Graph
from .posets import Poset, PosetError


class FormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


GRAPH6_HEADER = ">>graph6<<"


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _is_graph6(line: str) -> bool:
    return line.startswith(GRAPH6_HEADER) or all(63 <= ord(c) <= 126 for c in line)


def parse_graph6(line: str) -> Graph:
    data = line[len(GRAPH6_HEADER):] if line.startswith(GRAPH6_HEADER) else line
    vals = [ord(c) - 63 for c in data.strip()]
    if not vals or any(not 0 <= v < 64 for v in vals):
        raise FormatError("invalid graph6 string")
    if vals[0] < 63:
        n, body = vals[0], vals[1:]
    elif len(vals) >= 4 and vals[1] < 63:
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        body = vals[4:]
    else:
        raise FormatError("graph6 sizes beyond 258047 are not supported")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise FormatError(f"graph6 body has {len(body)} bytes, expected {need}")
    edges = []
    k = 0
    for v in range(1, n):
        for u in range(v):
            if body[k // 6] >> (5 - k % 6) & 1:
                edges.append((u, v))
            k += 1
    return Graph.from_edges(n, edges)


def render_graph6(g: Graph) -> str:
    """graph6 encoding; used for compact instance keys, not as an output format."""
    n = g.n
    out = [n] if n < 63 else [63, n >> 12 & 63, n >> 6 & 63, n & 63]
    acc = k = 0
    for v in range(1, n):
        for u in range(v):
            acc = acc << 1 | (g.adj[u] >> v & 1)
            k += 1
            if k == 6:
                out.append(acc)
                acc = k = 0
    if k:
        out.append(acc << (6 - k))
    return "".join(chr(c + 63) for c in out)


def parse_graph(text: str) -> Graph:
    """Parse the ``n m`` edge-list format (or a single graph6 line)."""
    lines = list(_content_lines(text))
    if not lines:
        raise FormatError("empty graph description")
    lineno, head = lines[0]
    if _is_graph6(head):
        if len(lines) > 1:
            raise FormatError("trailing content after graph6 string", lines[1][0])
        try:
            return parse_graph6(head)
        except FormatError as exc:
            raise FormatError(str(exc), lineno) from None
    fields = head.split()
    if len(fields) != 2 or not all(f.isdigit() for f in fields):
        raise FormatError("header must be 'n m'", lineno)
    n, m = int(fields[0]), int(fields[1])
    if n < 1:
        raise FormatError("graph needs n >= 1", lineno)
    body = lines[1:]
    if len(body) != m:
        where = body[m][0] if len(body) > m else lineno
        raise FormatError(f"header announces {m} edges, found {len(body)}", where)
    seen = set()
    for ln, line in body:
        parts = line.split()
        if len(parts) != 2 or not all(p.lstrip("-").isdigit() for p in parts):
            raise FormatError("edge line must be 'u v'", ln)
        u, v = int(parts[0]), int(parts[1])
        if u == v:
            raise FormatError(f"self-loop at vertex {u}", ln)
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"endpoint out of range 0..{n - 1}", ln)
        e = (min(u, v), max(u, v))
        if e in seen:
            raise FormatError(f"duplicate edge {e[0]} {e[1]}", ln)
        seen.add(e)
    return Graph.from_edges(n, seen)


def render_graph(g: Graph, comments: list[str] | None = None) -> str:
    edges = g.edges()
    out = [f"# {c}" for c in comments or []]
    out.append(f"{g.n} {len(edges)}")
    out += [f"{u} {v}" for u, v in edges]
    return "\n".join(out) + "\n"


def parse_poset(text: str) -> Poset:
    """First line ``m``, then ``u v`` lines meaning ``u <= v``; closure is applied."""
    lines = list(_content_lines(text))
    if not lines or not lines[0][1].isdigit():
        raise FormatError("poset header must be the element count m", lines[0][0] if lines else None)
    m = int(lines[0][1])
    pairs = []
    for ln, line in lines[1:]:
        parts = line.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise FormatError("relation line must be 'u v'", ln)
        u, v = int(parts[0]), int(parts[1])
        if not (u < m and v < m):
            raise FormatError(f"element out of range 0..{m - 1}", ln)
        pairs.append((u, v))
    try:
        return Poset.from_pairs(m, pairs)
    except PosetError as exc:
        raise FormatError(str(exc)) from None


def render_poset(p: Poset) -> str:
    return "\n".join([str(p.m)] + [f"{u} {v}" for u, v in p.pairs()]) + "\n"


def to_dot(g: Graph, labels: list[str] | None = None, name: str = "G") -> str:
    out = [f"graph {name} {{"]
    for v in range(g.n):
        text = labels[v] if labels else str(v)
        out.append(f'  {v} [label="{text}"];')
    out += [f"  {u} -- {v};" for u, v in g.edges()]
    out.append("}")
    return "\n".join(out) + "\n"
