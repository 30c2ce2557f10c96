"""Partition combinatorics and symmetric-group characters.

Partitions are tuples of positive integers in weakly decreasing order; the
empty tuple is the partition of 0.  Characters are computed by signed
border-strip removal and memoized in per-size tables; lookups from several
threads are safe.
"""

from __future__ import annotations

import json
import os
import threading
from functools import lru_cache

Partition = tuple

CHARTABLE_DIR_ENV = "TORUSSKEIN_CHARTABLE_DIR"


class SizeMismatch(ValueError):
    pass


def check_partition(lam) -> Partition:
    lam = tuple(lam)
    if any(p <= 0 for p in lam):
        raise ValueError(f"parts must be positive: {lam}")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"parts must be weakly decreasing: {lam}")
    return lam


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple:
    """All partitions of n in descending lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return ((),)
    out = []

    def gen(rest, max_part, prefix):
        if rest == 0:
            out.append(tuple(prefix))
            return
        for p in range(min(rest, max_part), 0, -1):
            prefix.append(p)
            gen(rest - p, p, prefix)
            prefix.pop()

    gen(n, n, [])
    return tuple(out)


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


def hooks_and_contents(lam: Partition) -> list:
    """[(cell, hook, content)] for the cells (i, j) of the diagram, 1-indexed.

    hook(i,j) = lam_i - j + lam'_j - i + 1 and content(i,j) = j - i.
    """
    conj = conjugate(lam)
    out = []
    for i, row in enumerate(lam, start=1):
        for j in range(1, row + 1):
            hook = row - j + conj[j - 1] - i + 1
            out.append(((i, j), hook, j - i))
    return out


def content_list(lam: Partition) -> list:
    return [j - i for i, row in enumerate(lam) for j in range(row)]


def z_const(mu: Partition) -> int:
    """Order of the centralizer of a permutation of cycle type mu."""
    z = 1
    mult = {}
    for p in mu:
        mult[p] = mult.get(p, 0) + 1
    for p, m in mult.items():
        z *= p ** m
        for k in range(1, m + 1):
            z *= k
    return z


def sign_of(mu: Partition) -> int:
    return -1 if (sum(mu) - len(mu)) % 2 else 1


def _strip_removals(lam: Partition, r: int):
    """Yield (sign, smaller_partition) for every border strip of length r."""
    k = len(lam)
    beta = [lam[i] + (k - 1 - i) for i in range(k)]
    members = set(beta)
    for b in beta:
        nb = b - r
        if nb < 0 or nb in members:
            continue
        height = sum(1 for x in beta if nb < x < b)
        nbeta = sorted((members - {b}) | {nb}, reverse=True)
        new = tuple(v - (k - 1 - i) for i, v in enumerate(nbeta))
        new = tuple(p for p in new if p > 0)
        yield (-1 if height % 2 else 1), new


_char_memo: dict = {}


def _char(lam: Partition, mu: Partition) -> int:
    if not mu:
        return 1
    key = (lam, mu)
    v = _char_memo.get(key)
    if v is not None:
        return v
    r, rest = mu[0], mu[1:]
    total = 0
    for sign, smaller in _strip_removals(lam, r):
        total += sign * _char(smaller, rest)
    _char_memo[key] = total
    return total


def character(lam: Partition, mu: Partition) -> int:
    """Character value of the irreducible indexed by lam at cycle type mu."""
    if sum(lam) != sum(mu):
        raise SizeMismatch(f"|{lam}| != |{mu}|")
    return char_table(sum(lam)).values[(tuple(lam), tuple(mu))]


class CharTable:
    """Full character table for partitions of a fixed size n."""

    def __init__(self, n: int, values: dict):
        self.n = n
        self.values = values

    def rows(self):
        parts = partitions_of(self.n)
        return [(lam, [self.values[(lam, mu)] for mu in parts]) for lam in parts]

    def to_json(self) -> dict:
        parts = partitions_of(self.n)
        return {
            "n": self.n,
            "partitions": [list(p) for p in parts],
            "values": [[self.values[(lam, mu)] for mu in parts] for lam in parts],
        }

    @classmethod
    def from_json(cls, data: dict) -> "CharTable":
        parts = [tuple(p) for p in data["partitions"]]
        values = {}
        for i, lam in enumerate(parts):
            for j, mu in enumerate(parts):
                values[(lam, mu)] = data["values"][i][j]
        return cls(data["n"], values)


_tables: dict = {}
_tables_lock = threading.Lock()


def _cache_path(n: int):
    root = os.environ.get(CHARTABLE_DIR_ENV)
    if not root:
        return None
    return os.path.join(root, f"chartable_{n}.json")


def char_table(n: int) -> CharTable:
    """The table for size n, computed once and shared across threads."""
    table = _tables.get(n)
    if table is not None:
        return table
    with _tables_lock:
        table = _tables.get(n)
        if table is not None:
            return table
        path = _cache_path(n)
        if path and os.path.exists(path):
            with open(path) as fh:
                table = CharTable.from_json(json.load(fh))
        else:
            parts = partitions_of(n)
            values = {}
            for lam in parts:
                for mu in parts:
                    values[(lam, mu)] = _char(lam, mu)
            table = CharTable(n, values)
            if path:
                os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
                with open(path, "w") as fh:
                    json.dump(table.to_json(), fh)
        _tables[n] = table
        return table


def parse_partition(text: str) -> Partition:
    """Parse the bracket form, e.g. '[3,1,1]' or '[]'."""
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise ValueError(f"expected bracketed partition, got {text!r}")
    inner = text[1:-1].strip()
    if not inner:
        return ()
    return check_partition(int(p) for p in inner.split(","))


def partition_to_text(lam: Partition) -> str:
    return "[" + ",".join(str(p) for p in lam) + "]"
