"""Edge-list input, graph6/DOT/JSON output.

Edge-list text: the first non-comment line is ``n m``; then ``m`` lines
``u v`` with 0-based endpoints.  ``#`` starts a comment.
"""
from __future__ import annotations

import json
import warnings

import numpy as np

from .graph import BaseGraph, GraphError, from_edge_list

JSON_SAFE_MAX = 2**53 - 1
GRAPH6_MAX_ORDER = 68_719_476_735


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


def parse_edge_list(text: str, name: str = "") -> BaseGraph:
    header = None
    pairs = []
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        fields = body.split()
        if len(fields) != 2:
            raise ParseError(f"expected two integers, got {body!r}", lineno)
        try:
            a, b = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError(f"expected two integers, got {body!r}", lineno) from None
        if header is None:
            if a < 0 or b < 0:
                raise ParseError("negative count in header", lineno)
            header = (a, b)
            continue
        n = header[0]
        if not (0 <= a < n and 0 <= b < n):
            raise ParseError(f"endpoint out of range 0..{n - 1}", lineno)
        if a == b:
            raise ParseError(f"loop at vertex {a}", lineno)
        pairs.append((a, b))
        lines.append(lineno)
    if header is None:
        raise ParseError("missing 'n m' header line")
    n, m = header
    if len(pairs) != m:
        raise ParseError(f"header announces {m} edges, found {len(pairs)}")
    g = from_edge_list(n, pairs, name)
    if g.size != m:
        warnings.warn(f"{m - g.size} duplicate edge(s) collapsed", stacklevel=2)
    return g


def to_edge_list(g) -> str:
    """Inverse of :func:`parse_edge_list` for any graph exposing ``adj``."""
    adj = g.adj
    edges = [(i, j) for i in range(len(adj)) for j in adj[i] if i < j]
    out = [f"{len(adj)} {len(edges)}"]
    out.extend(f"{i} {j}" for i, j in edges)
    return "\n".join(out) + "\n"


def _graph6_size(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> sh) & 63) + 63 for sh in (12, 6, 0)])
    return bytes([126, 126] + [((n >> sh) & 63) + 63 for sh in (30, 24, 18, 12, 6, 0)])


def to_graph6(g) -> bytes:
    """graph6 bytes (no header, no newline) of a simple undirected graph."""
    adj = g.adj
    n = len(adj)
    if n > GRAPH6_MAX_ORDER:
        raise ValueError(f"order {n} exceeds the graph6 limit")
    nbits = n * (n - 1) // 2
    bits = np.zeros(nbits + (-nbits) % 6, dtype=np.uint8)
    rows, cols = [], []
    for i in range(n):
        for j in adj[i]:
            if i < j:
                rows.append(i)
                cols.append(j)
    if rows:
        r = np.asarray(rows, dtype=np.int64)
        c = np.asarray(cols, dtype=np.int64)
        bits[c * (c - 1) // 2 + r] = 1  # column-major upper triangle
    body = bits.reshape(-1, 6) @ np.array([32, 16, 8, 4, 2, 1], dtype=np.uint8) + 63
    return _graph6_size(n) + body.astype(np.uint8).tobytes()


def from_graph6(data: bytes | str, name: str = "") -> BaseGraph:
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[10:]
    if not data:
        raise ParseError("empty graph6 string")
    vals = [b - 63 for b in data]
    if any(not 0 <= v <= 63 for v in vals):
        raise ParseError("byte outside the graph6 range")
    if vals[0] != 63:
        n, rest = vals[0], vals[1:]
    elif len(vals) > 1 and vals[1] == 63:
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        rest = vals[8:]
    else:
        n = 0
        for v in vals[1:4]:
            n = (n << 6) | v
        rest = vals[4:]
    nbits = n * (n - 1) // 2
    if len(rest) != (nbits + 5) // 6:
        raise ParseError(f"body has {len(rest)} bytes, expected {(nbits + 5) // 6}")
    arr = np.asarray(rest, dtype=np.uint8)
    bits = ((arr[:, None] >> np.arange(5, -1, -1, dtype=np.uint8)) & 1).ravel()[:nbits]
    pos = np.flatnonzero(bits)
    col = ((np.sqrt(8.0 * pos + 1) + 1) // 2).astype(np.int64)
    # float sqrt can land one off near perfect squares
    col = np.where(col * (col - 1) // 2 > pos, col - 1, col)
    col = np.where((col + 1) * col // 2 <= pos, col + 1, col)
    row = pos - col * (col - 1) // 2
    return from_edge_list(n, zip(row.tolist(), col.tolist()), name)


def to_dot(g, labels: bool = True, name: str = "G") -> str:
    adj = g.adj
    n = len(adj)
    label_of = getattr(g, "label", None)
    out = [f"graph {name} {{"]
    for i in range(n):
        if labels and label_of is not None:
            out.append(f'  {i} [label="{label_of(i)}"];')
        else:
            out.append(f"  {i};")
    for i in range(n):
        for j in adj[i]:
            if i < j:
                out.append(f"  {i} -- {j};")
    out.append("}")
    return "\n".join(out) + "\n"


def json_safe(obj):
    """Recursively replace integers beyond double precision by decimal strings."""
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, (int, np.integer)):
        obj = int(obj)
        return obj if abs(obj) <= JSON_SAFE_MAX else str(obj)
    if isinstance(obj, dict):
        return {str(k): json_safe(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [json_safe(v) for v in obj]
    return obj


def dumps(obj) -> str:
    return json.dumps(json_safe(obj), indent=2, sort_keys=False) + "\n"


def graph_to_json(g) -> dict:
    adj = g.adj
    out = {"order": len(adj), "size": sum(len(r) for r in adj) // 2}
    label_of = getattr(g, "label", None)
    if label_of is not None:
        out["vertices"] = [label_of(i) for i in range(len(adj))]
    out["edges"] = [[i, j] for i in range(len(adj)) for j in adj[i] if i < j]
    return out


__all__ = ["GraphError", "ParseError", "dumps", "from_graph6", "graph_to_json", "json_safe",
           "parse_edge_list", "to_dot", "to_edge_list", "to_graph6"]
