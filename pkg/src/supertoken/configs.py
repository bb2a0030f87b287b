"""Token configurations: the vertex sets of supertoken graphs.

A configuration is stored as a tuple of ``k`` base vertices.  With equal
tokens the tuple is sorted (one canonical form per multiset); with distinct
tokens entry ``i`` is the vertex holding token ``i``.  Both kinds are listed
in lexicographic order of that tuple, which is also the vertex numbering of
every built graph.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations, product
from typing import Iterator, Sequence

from .counting import binomial, f_count
from .tokens import TokenMode, TokenSpec


class ConfigError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Configuration:
    entries: tuple
    mode: TokenMode = TokenMode.INDIST

    def __str__(self) -> str:
        return format_config(self.entries, self.mode)

    def __len__(self) -> int:
        return len(self.entries)

    def multiplicity(self, v: int) -> int:
        return self.entries.count(v)


def format_config(entries: Sequence[int], mode: TokenMode) -> str:
    body = ",".join(str(v) for v in entries)
    return "{" + body + "}" if mode is TokenMode.INDIST else "(" + body + ")"


def parse_config(text: str) -> Configuration:
    text = text.strip()
    if len(text) < 2 or (text[0], text[-1]) not in {("{", "}"), ("(", ")")}:
        raise ConfigError(f"not a configuration: {text!r}")
    mode = TokenMode.INDIST if text[0] == "{" else TokenMode.DIST
    inner = text[1:-1].strip()
    entries = tuple(int(x) for x in inner.split(",")) if inner else ()
    if mode is TokenMode.INDIST:
        entries = tuple(sorted(entries))
    return Configuration(entries, mode)


def is_valid_config(entries: Sequence[int], n: int, spec: TokenSpec) -> bool:
    entries = tuple(entries)
    if len(entries) != spec.k:
        return False
    if any(not isinstance(v, int) or v < 0 or v >= n for v in entries):
        return False
    if spec.mode is TokenMode.INDIST and list(entries) != sorted(entries):
        return False
    return max(Counter(entries).values(), default=0) <= spec.s


def _entries_of(c) -> tuple:
    return c.entries if isinstance(c, Configuration) else tuple(c)


def validate(c, n: int, spec: TokenSpec) -> tuple:
    entries = _entries_of(c)
    if isinstance(c, Configuration) and c.mode is not spec.mode:
        raise ConfigError(f"configuration {c} is {c.mode.value}, spec is {spec.mode.value}")
    if not is_valid_config(entries, n, spec):
        raise ConfigError(f"{format_config(entries, spec.mode)} is not a valid configuration "
                          f"for n={n}, {spec}")
    return entries


def iter_entries(n: int, spec: TokenSpec) -> Iterator[tuple]:
    """Yield every configuration tuple in lexicographic order."""
    k, s = spec.k, spec.s
    if spec.mode is TokenMode.INDIST:
        if s == 1:
            yield from combinations(range(n), k)
        else:
            yield from _multisets(n, k, s)
    else:
        if s == 1:
            yield from permutations(range(n), k)
        elif s == k:
            yield from product(range(n), repeat=k)
        else:
            yield from _bounded_tuples(n, k, s)


def _multisets(n: int, k: int, s: int) -> Iterator[tuple]:
    cur: list[int] = []

    def rec(lo: int, run: int):
        if len(cur) == k:
            yield tuple(cur)
            return
        for v in range(lo, n):
            used = run if cur and cur[-1] == v else 0
            if used >= s:
                continue
            cur.append(v)
            yield from rec(v, used + 1)
            cur.pop()

    yield from rec(0, 0)


def _bounded_tuples(n: int, k: int, s: int) -> Iterator[tuple]:
    cur: list[int] = []
    counts = [0] * n

    def rec():
        if len(cur) == k:
            yield tuple(cur)
            return
        for v in range(n):
            if counts[v] < s:
                counts[v] += 1
                cur.append(v)
                yield from rec()
                cur.pop()
                counts[v] -= 1

    yield from rec()


def enumerate_configs(n: int, spec: TokenSpec) -> list[Configuration]:
    return [Configuration(e, spec.mode) for e in iter_entries(n, spec)]


# Ranking counts the lexicographically smaller configurations by summing,
# position by position, the number of completions of each smaller prefix.

@lru_cache(maxsize=None)
def _tuple_completions(cap_profile: tuple, r: int) -> int:
    """Sequences of length ``r`` when ``cap_profile[c]`` symbols may each be used up to ``c`` times."""
    ways = [1] + [0] * r
    for cap, count in enumerate(cap_profile):
        for _ in range(count):
            nxt = [0] * (r + 1)
            for length in range(r + 1):
                acc = 0
                for j in range(min(cap, length) + 1):
                    acc += ways[length - j] * binomial(length, j)
                nxt[length] = acc
            ways = nxt
    return ways[r]


def _dist_completions(counts: list[int], s: int, r: int) -> int:
    profile = [0] * (s + 1)
    for c in counts:
        profile[s - c] += 1
    return _tuple_completions(tuple(profile), r)


def _multiset_completions(n: int, s: int, v: int, used_v: int, r: int) -> int:
    # sorted fillings of r slots with values >= v, where v has s - used_v spare
    return sum(f_count(n - v - 1, r - j, s) for j in range(s - used_v + 1))


def config_rank(c, n: int, spec: TokenSpec) -> int:
    entries = validate(c, n, spec)
    k, s = spec.k, spec.s
    rank = 0
    if spec.mode is TokenMode.INDIST:
        lo, run = 0, 0
        for p, a in enumerate(entries):
            for v in range(lo, a):
                used = run if p and entries[p - 1] == v else 0
                if used < s:
                    rank += _multiset_completions(n, s, v, used + 1, k - p - 1)
            run = run + 1 if p and entries[p - 1] == a else 1
            lo = a
        return rank
    counts = [0] * n
    for p, a in enumerate(entries):
        for v in range(a):
            if counts[v] < s:
                counts[v] += 1
                rank += _dist_completions(counts, s, k - p - 1)
                counts[v] -= 1
        counts[a] += 1
    return rank


def config_unrank(i: int, n: int, spec: TokenSpec) -> Configuration:
    from .counting import order_of

    total = order_of(n, spec)
    if not 0 <= i < total:
        raise IndexError(f"rank {i} outside 0..{total - 1}")
    k, s = spec.k, spec.s
    out: list[int] = []
    if spec.mode is TokenMode.INDIST:
        lo, run = 0, 0
        for p in range(k):
            for v in range(lo, n):
                used = run if out and out[-1] == v else 0
                if used >= s:
                    continue
                block = _multiset_completions(n, s, v, used + 1, k - p - 1)
                if i < block:
                    out.append(v)
                    run, lo = used + 1, v
                    break
                i -= block
        return Configuration(tuple(out), spec.mode)
    counts = [0] * n
    for p in range(k):
        for v in range(n):
            if counts[v] >= s:
                continue
            counts[v] += 1
            block = _dist_completions(counts, s, k - p - 1)
            if i < block:
                out.append(v)
                break
            counts[v] -= 1
            i -= block
    return Configuration(tuple(out), spec.mode)


def multiset_symmetric_difference(a, b) -> tuple:
    """Multiset with multiplicity ``|mult_a(v) - mult_b(v)|`` at each vertex, sorted."""
    for c in (a, b):
        if isinstance(c, Configuration) and c.mode is not TokenMode.INDIST:
            raise ConfigError("symmetric difference is defined for equal-token configurations")
    ca, cb = Counter(_entries_of(a)), Counter(_entries_of(b))
    out = []
    for v in sorted(set(ca) | set(cb)):
        out.extend([v] * abs(ca[v] - cb[v]))
    return tuple(out)


def to_occupancy(entries: Sequence[int], n: int) -> tuple:
    occ = [0] * n
    for v in entries:
        occ[v] += 1
    return tuple(occ)


def from_occupancy(occ: Sequence[int]) -> tuple:
    return tuple(v for v, x in enumerate(occ) for _ in range(x))
