"""Pure-Python token-move kernel, used when the compiled extension is absent.

Same contract as ``_ckernel``: configurations in, CSR adjacency out, with
every row sorted by vertex index.
"""
from __future__ import annotations

from typing import Sequence

from .configs import iter_entries
from .tokens import TokenMode, TokenSpec


def enumerate_configs(n: int, k: int, s: int, distinguishable: bool) -> list[tuple]:
    mode = TokenMode.DIST if distinguishable else TokenMode.INDIST
    return list(iter_entries(n, TokenSpec(k, s, mode)))


def moves(entries: tuple, base_adj: Sequence[Sequence[int]], s: int, distinguishable: bool) -> set:
    """All configurations reachable by sliding one token along one base edge."""
    out = set()
    if distinguishable:
        for q, u in enumerate(entries):
            for w in base_adj[u]:
                if entries.count(w) < s:
                    out.add(entries[:q] + (w,) + entries[q + 1:])
        return out
    prev = None
    for q, u in enumerate(entries):
        if u == prev:
            continue  # equal tokens on one vertex give the same move
        prev = u
        rest = entries[:q] + entries[q + 1:]
        for w in base_adj[u]:
            if rest.count(w) < s:
                out.add(tuple(sorted(rest + (w,))))
    return out


def build_adjacency(vertices: list[tuple], base_adj, s: int, distinguishable: bool):
    index = {c: i for i, c in enumerate(vertices)}
    indptr = [0]
    indices: list[int] = []
    for c in vertices:
        row = sorted(index[d] for d in moves(c, base_adj, s, distinguishable))
        indices.extend(row)
        indptr.append(len(indices))
    return indptr, indices
