"""Graph serialization: plain edge lists and a small JSON schema.

Edge-list text: first line "n m", then m lines "u v" with 0-based ids in
either order.  JSON: {"n": int, "edges": [[u, v], ...]}.  Readers reject
loops, duplicates, and out-of-range ids with positioned error messages.
"""

from __future__ import annotations

import json
from pathlib import Path

from .graphs import Graph


class ParseError(ValueError):
    pass


def _check_edge(n, u, v, where):
    if not (isinstance(u, int) and isinstance(v, int)):
        raise ParseError(f"{where}: edge endpoints must be integers")
    if u == v:
        raise ParseError(f"{where}: loop at vertex {u}")
    if not (0 <= u < n and 0 <= v < n):
        raise ParseError(f"{where}: vertex out of range (n = {n})")


def read_edge_list(text: str) -> Graph:
    lines = text.splitlines()
    header = None
    header_line = 0
    rows = []
    for i, raw in enumerate(lines, start=1):
        s = raw.strip()
        if not s:
            continue
        if header is None:
            header = s
            header_line = i
        else:
            rows.append((i, s))
    if header is None:
        raise ParseError("line 1: missing header 'n m'")
    parts = header.split()
    if len(parts) != 2:
        raise ParseError(f"line {header_line}: header must be 'n m'")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError(f"line {header_line}: header must be two integers") from None
    if n < 0 or m < 0:
        raise ParseError(f"line {header_line}: counts must be nonnegative")
    if len(rows) != m:
        raise ParseError(
            f"header announces {m} edges but {len(rows)} edge lines follow"
        )
    seen = set()
    edges = []
    for i, s in rows:
        fields = s.split()
        if len(fields) != 2:
            raise ParseError(f"line {i}: expected 'u v'")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError(f"line {i}: endpoints must be integers") from None
        _check_edge(n, u, v, f"line {i}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"line {i}: duplicate edge ({key[0]}, {key[1]})")
        seen.add(key)
        edges.append(key)
    return Graph(n, edges)


def write_edge_list(g: Graph) -> str:
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"


def read_json_graph(text: str) -> Graph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"line {e.lineno}: {e.msg}") from None
    if not isinstance(data, dict):
        raise ParseError("top level must be an object")
    if "n" not in data or "edges" not in data:
        raise ParseError("object needs keys 'n' and 'edges'")
    n = data["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ParseError("'n' must be a nonnegative integer")
    raw_edges = data["edges"]
    if not isinstance(raw_edges, list):
        raise ParseError("'edges' must be an array of pairs")
    seen = set()
    edges = []
    for i, item in enumerate(raw_edges):
        where = f"edge {i}"
        if not isinstance(item, list) or len(item) != 2:
            raise ParseError(f"{where}: expected a pair [u, v]")
        u, v = item
        _check_edge(n, u, v, where)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"{where}: duplicate edge ({key[0]}, {key[1]})")
        seen.add(key)
        edges.append(key)
    return Graph(n, edges)


def write_json_graph(g: Graph) -> str:
    return json.dumps({"n": g.n, "edges": [[u, v] for u, v in g.edges]}) + "\n"


def parse_graph(text: str, fmt: str | None = None) -> Graph:
    """Parse either format; when fmt is None, sniff JSON by a leading brace."""
    if fmt is None:
        fmt = "json" if text.lstrip()[:1] == "{" else "edges"
    if fmt == "json":
        return read_json_graph(text)
    if fmt == "edges":
        return read_edge_list(text)
    raise ParseError(f"unknown format {fmt!r}")


def format_graph(g: Graph, fmt: str) -> str:
    if fmt == "json":
        return write_json_graph(g)
    if fmt == "edges":
        return write_edge_list(g)
    raise ParseError(f"unknown format {fmt!r}")


def load_graph(path: str | Path, fmt: str | None = None) -> Graph:
    p = Path(path)
    if fmt is None and p.suffix == ".json":
        fmt = "json"
    return parse_graph(p.read_text(), fmt)


def save_graph(g: Graph, path: str | Path, fmt: str | None = None) -> None:
    p = Path(path)
    if fmt is None:
        fmt = "json" if p.suffix == ".json" else "edges"
    p.write_text(format_graph(g, fmt))
