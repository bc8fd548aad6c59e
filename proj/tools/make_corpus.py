#!/usr/bin/env python3
"""Writes tests/data/corpus.json, the polytope corpus for the property suites.

Deterministic: rerunning produces the same file byte for byte.
"""

import argparse
import itertools
import json
import random
from fractions import Fraction
from math import gcd
from pathlib import Path


def rank(points):
    """Affine rank of a list of Fraction tuples."""
    base = points[0]
    rows = [[c - b for c, b in zip(p, base)] for p in points[1:]]
    r = 0
    cols = len(base)
    for col in range(cols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col] / rows[r][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
    return r


def fmt(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def entry(name, points, *tags):
    pts = [tuple(Fraction(c) for c in p) for p in points]
    assert rank(pts) == len(pts[0]), name
    lattice = all(c.denominator == 1 for p in pts for c in p)
    tags = sorted(set(tags) | {"lattice" if lattice else "rational"})
    return {"name": name, "vertices": [[fmt(c) for c in p] for p in pts], "tags": tags}


def scaled(points, k):
    return [tuple(Fraction(c, k) for c in p) for p in points]


def std_simplex(d):
    return [tuple(0 for _ in range(d))] + [tuple(int(i == j) for i in range(d)) for j in range(d)]


def cube(d, lo=0, hi=1):
    return list(itertools.product([lo, hi], repeat=d))


def cross(d):
    out = []
    for j in range(d):
        for s in (1, -1):
            out.append(tuple(s * int(i == j) for i in range(d)))
    return out


def reflexive_triangles():
    """One lattice triangle per boundary point count, each edge at lattice distance 1 from the origin."""
    found = {}
    box = range(-2, 3)
    for a, b, c in itertools.combinations(itertools.product(box, repeat=2), 3):
        area2 = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
        if area2 == 0:
            continue
        ok = True
        for p, q, r in ((a, b, c), (b, c, a), (c, a, b)):
            nx, ny = q[1] - p[1], p[0] - q[0]
            g = gcd(nx, ny)
            nx, ny = nx // g, ny // g
            off = nx * p[0] + ny * p[1]
            if nx * r[0] + ny * r[1] > off:
                nx, ny, off = -nx, -ny, -off
            # Outward normal n with n.x <= off on the triangle; reflexive needs off == 1.
            if off != 1:
                ok = False
                break
        if not ok:
            continue
        boundary = sum(gcd(abs(q[0] - p[0]), abs(q[1] - p[1])) for p, q in ((a, b), (b, c), (c, a)))
        found.setdefault(boundary, (a, b, c))
    return [found[k] for k in sorted(found)]


def random_polytope(rng, d, q, count, span):
    while True:
        pts = [tuple(Fraction(rng.randint(-span, span), q) for _ in range(d)) for _ in range(count)]
        if rank(pts) == d and max(c.denominator for p in pts for c in p) == q:
            return pts


def build():
    out = []
    # Small worked examples with known answers.
    out.append(entry("square_0_2", cube(2, 0, 2), "worked", "gorenstein"))
    out.append(entry("kite_0_3", [(0, 0), (0, 2), (2, 0), (3, 3)], "worked"))
    out.append(entry("segment_half", [(Fraction(-1, 2),), (Fraction(1, 2),)], "worked"))
    out.append(entry("triangle_p52", [(0, 0), (0, 2), (5, 2)], "worked"))
    out.append(entry("unit_square", cube(2), "worked"))

    for d in (1, 2, 3):
        out.append(entry(f"std_simplex_{d}", std_simplex(d), *(["gorenstein"] if d == 2 else [])))
    out.append(entry("unit_cube_3", cube(3)))
    out.append(entry("cube_0_2_3", cube(3, 0, 2)))
    for d in (1, 2, 3):
        out.append(entry(f"centered_cube_{d}", cube(d, -1, 1), "gorenstein"))
    for d in (2, 3):
        out.append(entry(f"cross_{d}", cross(d)))
    triangles = reflexive_triangles()
    assert len(triangles) == 5, triangles
    for i, t in enumerate(triangles):
        out.append(entry(f"reflexive_triangle_{i}", t, "gorenstein"))

    # (1/k)-scalings of the Gorenstein family.
    family = [(f"centered_cube_{d}", cube(d, -1, 1)) for d in (1, 2, 3)]
    family += [("std_simplex_2", std_simplex(2))]
    family += [(f"reflexive_triangle_{i}", t) for i, t in enumerate(triangles)]
    for k in (2, 3):
        for name, pts in family:
            out.append(entry(f"{name}_over_{k}", scaled(pts, k), "gorenstein"))
    # 2P is a reflexive translate but the facet x + y <= 3/2 is not a lattice hyperplane.
    out.append(entry("std_simplex_2_times_3_over_2", [(0, 0), (Fraction(3, 2), 0), (0, Fraction(3, 2))]))

    rng = random.Random(20241015)
    # Lattice polytopes with vertices in {0,1,2}^3.
    grid3 = list(itertools.product(range(3), repeat=3))
    made = 0
    while made < 8:
        pts = rng.sample(grid3, rng.randint(4, 7))
        if rank([tuple(map(Fraction, p)) for p in pts]) == 3:
            out.append(entry(f"grid012_{made}", pts))
            made += 1

    # Random rational polytopes, q <= 3, d <= 3.
    for i, (d, q) in enumerate([(1, 2), (1, 3), (2, 2), (2, 3), (2, 2), (2, 3), (2, 3), (3, 2), (3, 2), (3, 3), (2, 1), (3, 1)]):
        span = {1: 4, 2: 3, 3: 2}[d] if q > 1 else 2
        out.append(entry(f"random_d{d}_q{q}_{i}", random_polytope(rng, d, q, d + 2, span)))

    # The same polytope may arrive from two families; keep the first name, merge tags.
    unique = {}
    for e in out:
        key = frozenset(map(tuple, e["vertices"]))
        if key in unique:
            unique[key]["tags"] = sorted(set(unique[key]["tags"]) | set(e["tags"]))
        else:
            unique[key] = e
    return list(unique.values())


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", type=Path, default=Path(__file__).resolve().parent.parent / "tests/data/corpus.json")
    args = parser.parse_args()
    corpus = build()
    args.out.parent.mkdir(parents=True, exist_ok=True)
    args.out.write_text(json.dumps({"schema": 1, "polytopes": corpus}, indent=1) + "\n")
    print(f"wrote {len(corpus)} polytopes to {args.out}")


if __name__ == "__main__":
    main()
