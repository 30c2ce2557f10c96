"""Tests for partition combinatorics.

Character values are cross-checked against an independent oracle: the
coefficient-extraction formula chi^lam(mu) = [x^(lam+delta)] a_delta * p_mu,
with a_delta the Vandermonde alternant, computed by brute-force polynomial
expansion in len(lam) variables.
"""

import threading
from itertools import permutations
from math import factorial

import pytest

from torusskein.partitions import (
    SizeMismatch, char_table, character, conjugate, content_list,
    hooks_and_contents, parse_partition, partition_to_text, partitions_of,
    sign_of, z_const,
)


# -- independent character oracle -------------------------------------------

def _perm_sign(perm):
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, clen = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            clen += 1
        if clen % 2 == 0:
            sign = -sign
    return sign


def _poly_mul(p, q, k):
    out = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            v = out.get(e, 0) + c1 * c2
            if v:
                out[e] = v
            elif e in out:
                del out[e]
    return out


def frobenius_character(lam, mu):
    k = max(1, len(lam))
    delta = tuple(range(k - 1, -1, -1))
    vand = {}
    for perm in permutations(range(k)):
        e = tuple(delta[perm[i]] for i in range(k))
        vand[e] = vand.get(e, 0) + _perm_sign(perm)
    poly = vand
    for r in mu:
        p_r = {tuple(r if i == j else 0 for i in range(k)): 1 for j in range(k)}
        poly = _poly_mul(poly, p_r, k)
    lam_padded = tuple(lam) + (0,) * (k - len(lam))
    target = tuple(l + d for l, d in zip(lam_padded, delta))
    return poly.get(target, 0)


def test_character_against_frobenius_oracle():
    for n in range(6):
        for lam in partitions_of(n):
            for mu in partitions_of(n):
                assert character(lam, mu) == frobenius_character(lam, mu), (lam, mu)


# -- enumeration -------------------------------------------------------------

def test_partitions_of_small():
    assert partitions_of(0) == ((),)
    assert partitions_of(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    assert len(partitions_of(5)) == 7
    known = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    for n, p in enumerate(known):
        parts = partitions_of(n)
        assert len(parts) == p
        assert len(set(parts)) == p
        assert list(parts) == sorted(parts, reverse=True)
        for lam in parts:
            assert sum(lam) == n
            assert all(lam[i] >= lam[i + 1] for i in range(len(lam) - 1))


def test_conjugate():
    assert conjugate((2, 1)) == (2, 1)
    assert conjugate((3,)) == (1, 1, 1)
    assert conjugate((4, 2, 1)) == (3, 2, 1, 1)
    for n in range(9):
        for lam in partitions_of(n):
            assert conjugate(conjugate(lam)) == lam


def test_hooks_and_contents():
    assert hooks_and_contents((1,)) == [((1, 1), 1, 0)]
    hc = hooks_and_contents((2,))
    assert sorted(h for _, h, _ in hc) == [1, 2]
    assert sorted(c for _, _, c in hc) == [0, 1]
    hc = hooks_and_contents((2, 1))
    assert sorted(h for _, h, _ in hc) == [1, 1, 3]
    assert sorted(c for _, _, c in hc) == [-1, 0, 1]


def test_content_sum_row_formula():
    for n in range(9):
        for lam in partitions_of(n):
            conj = conjugate(lam)
            expected = (sum(r * (r - 1) // 2 for r in lam)
                        - sum(c * (c - 1) // 2 for c in conj))
            assert sum(content_list(lam)) == expected


def test_z_const():
    assert z_const((1, 1, 1)) == 6
    assert z_const((2, 1)) == 2
    for n in range(1, 8):
        assert z_const((n,)) == n
    # the z-constants weight the class sizes: sum over mu of n!/z_mu = n!
    for n in range(1, 9):
        assert sum(factorial(n) // z_const(mu) for mu in partitions_of(n)) == factorial(n)


def test_character_special_values():
    for n in range(1, 8):
        for mu in partitions_of(n):
            assert character((n,), mu) == 1
    assert character((1, 1), (2,)) == -1
    assert character((2, 1), (1, 1, 1)) == 2
    with pytest.raises(SizeMismatch):
        character((2,), (1,))


def test_character_orthogonality():
    for n in range(1, 9):
        parts = partitions_of(n)
        for mu in parts:
            for nu in parts:
                total = sum(character(lam, mu) * character(lam, nu) for lam in parts)
                assert total == (z_const(mu) if mu == nu else 0)


def test_dimension_sum_of_squares():
    for n in range(1, 9):
        ones = (1,) * n
        total = sum(character(lam, ones) ** 2 for lam in partitions_of(n))
        assert total == factorial(n)


def test_conjugate_character_sign():
    for n in range(1, 8):
        for lam in partitions_of(n):
            for mu in partitions_of(n):
                assert character(conjugate(lam), mu) == sign_of(mu) * character(lam, mu)


def test_parse_and_text():
    assert parse_partition("[3,1,1]") == (3, 1, 1)
    assert parse_partition("[]") == ()
    assert partition_to_text((3, 1, 1)) == "[3,1,1]"
    assert partition_to_text(()) == "[]"
    with pytest.raises(ValueError):
        parse_partition("[1,3]")


def test_char_table_concurrent_access():
    results = []

    def worker():
        t = char_table(7)
        results.append(t.values[((4, 2, 1), (3, 2, 1, 1))])

    threads = [threading.Thread(target=worker) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert len(set(results)) == 1


def test_char_table_json_roundtrip():
    t = char_table(4)
    data = t.to_json()
    from torusskein.partitions import CharTable
    t2 = CharTable.from_json(data)
    assert t2.values == t.values
