#!/usr/bin/env python3
"""Brute-force reference for the Grassmannian coset pipeline.

Independent of the C++ headers: weights are partitions, the selection rules
are tested on every charge, the identification group is the closure of its
two generators, and quantum dimensions come from the product-of-sines
formula. Writes the golden files consumed by the C++ tests:

    python3 tests/oracle/brute_force.py tests/golden
"""

import itertools
import json
import math
import sys
from fractions import Fraction


def weights(rank, level):
    """Dynkin label tuples of su(rank)_level in lexicographic order."""
    out = []

    def rec(prefix, remaining, left):
        if left == 0:
            out.append(tuple(prefix))
            return
        for a in range(remaining + 1):
            rec(prefix + [a], remaining - a, left - 1)

    rec([], level, rank - 1)
    return out


def rows_of(labels):
    rank = len(labels) + 1
    return [sum(labels[i:]) for i in range(rank - 1)] + [0]


def boxes(labels):
    return sum(rows_of(labels))


def rotate(labels, level, power):
    rank = len(labels) + 1
    ext = [level - sum(labels)] + list(labels)
    power %= rank
    new = [ext[(i - power) % rank] for i in range(rank)]
    return tuple(new[1:])


def h_su(labels, level):
    rank = len(labels) + 1
    if rank == 1:
        return Fraction(0)
    lam = rows_of(labels)
    size = sum(lam)
    cas = Fraction(sum(x * x for x in lam)) - Fraction(size * size, rank)
    cas += sum(lam[i] * (rank + 1 - 2 * (i + 1)) for i in range(rank))
    return cas / (2 * (rank + level))


def h_u1(x, modulus):
    x %= modulus
    if 2 * x > modulus:
        x -= modulus
    return Fraction(x * x, 2 * modulus)


def h_spin(s, half_dim):
    return [Fraction(0), Fraction(1, 2), Fraction(half_dim, 8), Fraction(half_dim, 8)][s]


def qdim(labels, level):
    rank = len(labels) + 1
    lam = rows_of(labels)
    ell = [lam[i] + rank - 1 - i for i in range(rank)]
    kk = rank + level
    d = 1.0
    for i in range(rank):
        for j in range(i + 1, rank):
            d *= math.sin(math.pi * (ell[i] - ell[j]) / kk) / math.sin(math.pi * (j - i) / kk)
    return d


def pipeline(m, n, k):
    modulus = m * n * (m + n) * (m + n + k)
    half_dim = m * n
    big, small_m, small_n = weights(m + n, k), weights(m, n + k), weights(n, m + k)

    def selected(f):
        l0, s, l1, l2, q = f
        shift = n * m * (m + n) // 2 if s >= 2 else 0
        return ((q + m * boxes(l0) - (m + n) * boxes(l1) - shift) % (m * (m + n)) == 0
                and (q - n * boxes(l0) + (m + n) * boxes(l2) - shift) % (n * (m + n)) == 0)

    def act(j, i, f):
        l0, s, l1, l2, q = f
        p = j * n + i * m
        s2 = s if p % 2 == 0 else [1, 0, 3, 2][s]
        return (rotate(l0, k, j + i), s2, rotate(l1, n + k, j), rotate(l2, m + k, i),
                (q + (n * j - m * i) * (m + n + k)) % modulus)

    vacuum = (big[0], 0, small_m[0], small_n[0], 0)
    # closure of the two generators (1,0) and (0,1)
    group = {vacuum: (0, 0)}
    frontier = [(0, 0)]
    while frontier:
        nxt = []
        for j, i in frontier:
            for dj, di in ((1, 0), (0, 1)):
                img = act(j + dj, i + di, vacuum)
                if img not in group:
                    group[img] = (j + dj, i + di)
                    nxt.append((j + dj, i + di))
        frontier = nxt
    elements = list(group.values())

    exp = [f for f in itertools.product(big, range(4), small_m, small_n, range(modulus)) if selected(f)]
    seen = set()
    orbits = []
    for f in exp:
        if f in seen:
            continue
        orbit = {act(j, i, f) for j, i in elements}
        seen |= orbit
        t = sum(1 for j, i in elements if act(j, i, f) == f)
        l0, s, l1, l2, q = f
        h = (h_su(l0, k) + h_spin(s, half_dim) - h_su(l1, n + k) - h_su(l2, m + k) - h_u1(q, modulus)) % 1
        d = qdim(l0, k) * qdim(l1, n + k) * qdim(l2, m + k)
        orbits.append((len(orbit), t, h, d))

    fingerprint = {}
    for _, t, h, d in orbits:
        key = (h, round(d / t, 6))
        fingerprint[key] = fingerprint.get(key, 0) + t
    rows = [{"h_mod1": f"{h.numerator}/{h.denominator}", "dimension": d, "multiplicity": c}
            for (h, d), c in sorted(fingerprint.items())]
    return {
        "exp_size": len(exp),
        "group_order": len(elements),
        "orbit_count": len(orbits),
        "irrep_count": sum(t for _, t, _, _ in orbits),
        "max_stabilizer": max(t for _, t, _, _ in orbits),
    }, rows


def main():
    out_dir = sys.argv[1] if len(sys.argv) > 1 else "."
    counts = {"source": "brute-force oracle (tests/oracle/brute_force.py)", "specs": []}
    for spec in [(1, 1, 1), (1, 1, 2), (2, 1, 1), (2, 2, 1), (1, 2, 2), (2, 2, 2), (3, 1, 1), (1, 1, 3)]:
        summary, rows = pipeline(*spec)
        counts["specs"].append({"m": spec[0], "n": spec[1], "k": spec[2], **summary})
        if spec == (2, 1, 1):
            fp = {"source": counts["source"], "m": 2, "n": 1, "k": 1,
                  "central_charge": "3/2", "irrep_count": summary["irrep_count"], "rows": rows}
            with open(f"{out_dir}/fingerprint_2_1_1.json", "w") as fh:
                json.dump(fp, fh, indent=2)
                fh.write("\n")
    with open(f"{out_dir}/counts.json", "w") as fh:
        json.dump(counts, fh, indent=2)
        fh.write("\n")


if __name__ == "__main__":
    main()
