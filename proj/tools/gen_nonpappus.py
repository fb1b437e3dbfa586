#!/usr/bin/env python3
"""Builds the non-Pappus test fixture: a simple arrangement of 9 pseudolines
that no point set realizes.

Start from an exact Pappus configuration, perturb it into general position,
take the wiring diagram of its dual lines and flip the small triangle formed by
the three pseudolines of the Pappus line. Non-realizability is certified by a
biquadratic final polynomial: a nonnegative integer combination of the strict
inequalities forced by the 3-term Grassmann-Pluecker relations that sums to zero.

Writes tests/nonpappus_fixture.hpp.
"""

import argparse
import itertools
import random
from fractions import Fraction as F

import numpy as np
from scipy.optimize import linprog

LABELS = ["A1", "A2", "A3", "B1", "B2", "B3", "C1", "C2", "C3"]


def meet(p1, p2, q1, q2):
    d1 = (p2[0] - p1[0], p2[1] - p1[1])
    d2 = (q2[0] - q1[0], q2[1] - q1[1])
    den = d1[0] * d2[1] - d1[1] * d2[0]
    s = ((q1[0] - p1[0]) * d2[1] - (q1[1] - p1[1]) * d2[0]) / den
    return (p1[0] + s * d1[0], p1[1] + s * d1[1])


def pappus():
    a = [(F(0), F(0)), (F(2), F(0)), (F(5), F(0))]
    b = [(F(1), F(4)), (F(3), F(4)), (F(7), F(4))]
    c1 = meet(a[0], b[1], a[1], b[0])
    c2 = meet(a[0], b[2], a[2], b[0])
    c3 = meet(a[1], b[2], a[2], b[1])
    return dict(zip(LABELS, a + b + [c1, c2, c3]))


def orient(p, q, r):
    v = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    return (v > 0) - (v < 0)


def general(points):
    v = list(points.values())
    for p, q, r in itertools.combinations(v, 3):
        if orient(p, q, r) == 0:
            return False
    dirs = set()
    for p, q in itertools.combinations(v, 2):
        dx, dy = q[0] - p[0], q[1] - p[1]
        if dy < 0 or (dy == 0 and dx < 0):
            dx, dy = -dx, -dy
        key = dx / dy if dy != 0 else None
        if key in dirs:
            return False
        dirs.add(key)
    return True


def allowable_sequence(points):
    """Half-turn sweep: initial order by projection just past direction (1,0),
    swaps ordered by the angle of the connecting-line normal in (0, pi]."""
    labels = sorted(points, key=lambda l: (points[l][0], points[l][1]))
    events = []
    for l, m in itertools.combinations(labels, 2):
        p, q = points[l], points[m]
        nx, ny = q[1] - p[1], p[0] - q[0]
        if ny < 0 or (ny == 0 and nx < 0):
            nx, ny = -nx, -ny
        # angle key of (nx, ny) in (0, pi]: cotangent decreasing
        key = -nx / ny if ny != 0 else F(10**30)
        events.append((key, l, m))
    events.sort()
    order = labels[:]
    swaps = []
    for _, l, m in events:
        i, j = order.index(l), order.index(m)
        if abs(i - j) != 1:
            raise ValueError("sweep is not simple")
        h = min(i, j)
        order[h], order[h + 1] = order[h + 1], order[h]
        swaps.append(h + 1)
    assert order == labels[::-1]
    return labels, swaps


def replay_pairs(initial, swaps):
    order = initial[:]
    out = []
    for h in swaps:
        out.append(frozenset((order[h - 1], order[h])))
        order[h - 1], order[h] = order[h], order[h - 1]
    return out


def flip_triangle(initial, swaps, trio):
    """Moves the three swaps among `trio` next to each other by commuting moves,
    then applies the braid move (h, h+1, h) <-> (h+1, h, h+1)."""
    swaps = swaps[:]
    pairs = replay_pairs(initial, swaps)
    idx = [t for t, p in enumerate(pairs) if p <= trio]
    assert len(idx) == 3
    i, k = idx[0], idx[2]
    # Push every foreign swap inside [i, k] out to the right, past k.
    t = i + 1
    while t < k:
        if pairs[t] <= trio:
            t += 1
            continue
        u = t
        while u < k and abs(swaps[u] - swaps[u + 1]) > 1:
            swaps[u], swaps[u + 1] = swaps[u + 1], swaps[u]
            pairs[u], pairs[u + 1] = pairs[u + 1], pairs[u]
            u += 1
        if u != k:
            raise ValueError("triangle is not empty")
        k -= 1
    assert k == i + 2
    a, b, c = swaps[i:i + 3]
    assert a == c and abs(a - b) == 1
    swaps[i:i + 3] = [b, a, b]
    return swaps


def chirotope_of_points(points):
    return {t: orient(*(points[l] for l in t)) for t in itertools.combinations(sorted(points), 3)}


def bracket(chi, x, y, z):
    t = (x, y, z)
    s = tuple(sorted(t))
    perm = [s.index(v) for v in t]
    inv = sum(1 for a, b in itertools.combinations(perm, 2) if a > b)
    return s, chi[s] * (-1 if inv % 2 else 1)


def gp_inequalities(chi, labels):
    """Rows (opp, other, relation) meaning log|T_opp| > log|T_other|."""
    rows = []
    for a in labels:
        rest = [l for l in labels if l != a]
        for b, c, d, e in itertools.combinations(rest, 4):
            terms = []
            for (x, y), (z, w), sg in (((b, c), (d, e), 1), ((b, d), (c, e), -1), ((b, e), (c, d), 1)):
                t1, s1 = bracket(chi, a, x, y)
                t2, s2 = bracket(chi, a, z, w)
                terms.append((sg * s1 * s2, (t1, t2)))
            signs = [t[0] for t in terms]
            if len(set(signs)) == 1:
                raise ValueError("Grassmann-Pluecker violated at %s" % ((a, b, c, d, e),))
            opp = next(i for i in range(3) if signs.count(signs[i]) == 1)
            for o in range(3):
                if o != opp:
                    rows.append((terms[opp][1], terms[o][1], (a, b, c, d, e), opp, o))
    return rows


def certificate(chi, labels):
    rows = gp_inequalities(chi, labels)
    brackets = sorted({t for r in rows for t in r[0] + r[1]})
    col = {t: i for i, t in enumerate(brackets)}
    A = np.zeros((len(rows), len(brackets)))
    for r, (opp, other, *_rest) in enumerate(rows):
        for t in opp:
            A[r, col[t]] += 1
        for t in other:
            A[r, col[t]] -= 1
    # Farkas: y >= 0, sum y = 1, A^T y = 0.
    m = len(rows)
    A_eq = np.vstack([A.T, np.ones((1, m))])
    b_eq = np.zeros(len(brackets) + 1)
    b_eq[-1] = 1
    res = linprog(np.ones(m), A_eq=A_eq, b_eq=b_eq, bounds=(0, None), method="highs")
    if res.status != 0:
        return None
    y = [F(v).limit_denominator(10**6) if v > 1e-12 else F(0) for v in res.x]
    from math import lcm
    den = 1
    for v in y:
        den = lcm(den, v.denominator)
    w = [int(v * den) for v in y]
    total = [0] * len(brackets)
    for r, wt in enumerate(w):
        if wt:
            for c in range(len(brackets)):
                total[c] += wt * int(A[r, c])
    if any(total):
        return None
    return [(rows[r][2], rows[r][3], rows[r][4], w[r]) for r in range(m) if w[r]]


PAPPUS_LINES = [
    ("A1", "A2", "A3"), ("B1", "B2", "B3"),
    ("A1", "B2", "C1"), ("A2", "B1", "C1"), ("A1", "B3", "C2"),
    ("A3", "B1", "C2"), ("A2", "B3", "C3"), ("A3", "B2", "C3"),
    ("C1", "C2", "C3"),
]


def det_gradient(points, t):
    (px, py), (qx, qy), (rx, ry) = (tuple(map(float, points[l])) for l in t)
    g = {}
    g[t[0]] = (qy - ry, rx - qx)
    g[t[1]] = (ry - py, px - rx)
    g[t[2]] = (py - qy, qx - px)
    v = np.zeros(2 * len(LABELS))
    for l, (gx, gy) in g.items():
        i = LABELS.index(l)
        v[2 * i], v[2 * i + 1] = gx, gy
    return v


def perturbed(rng, base, scale):
    """To first order the nine line determinants satisfy one linear relation
    sum mu_i d_i = 0. Perturbing so that mu_i d_i > 0 on the first eight lines
    pins the sign of the last; that sign is the one to flip."""
    G = np.array([det_gradient(base, t) for t in PAPPUS_LINES])
    mu = np.linalg.svd(G.T)[2][-1]
    target = np.array([np.sign(m) * (1 + rng.random()) for m in mu[:8]])
    v = np.linalg.lstsq(G[:8], target, rcond=None)[0]
    v += np.array([rng.uniform(-0.05, 0.05) for _ in v])
    out = {}
    for i, l in enumerate(LABELS):
        x, y = base[l]
        dx = F(round(v[2 * i] * 1000), 1000) * scale
        dy = F(round(v[2 * i + 1] * 1000), 1000) * scale
        out[l] = (x + dx, y + dy)
    return out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--tries", type=int, default=2000)
    ap.add_argument("--out", default="tests/nonpappus_fixture.hpp")
    args = ap.parse_args()
    rng = random.Random(args.seed)
    base = pappus()
    trio = frozenset(("C1", "C2", "C3"))
    for attempt in range(args.tries):
        pts = perturbed(rng, base, F(1, 50))
        if not general(pts):
            continue
        initial, swaps = allowable_sequence(pts)
        try:
            flipped = flip_triangle(initial, swaps, trio)
        except ValueError:
            continue
        chi_pts = chirotope_of_points(pts)
        chi = dict(chi_pts)
        t = ("C1", "C2", "C3")
        chi[t] = -chi[t]
        try:
            cert = certificate(chi, sorted(LABELS))
        except ValueError:
            continue
        if cert is None:
            continue
        write(args.out, pts, initial, swaps, flipped, cert, attempt)
        print("attempt", attempt, "certificate rows", len(cert))
        return
    raise SystemExit("no certificate found")


def q(v):
    return '"%s"' % (str(v.numerator) if v.denominator == 1 else "%d/%d" % (v.numerator, v.denominator))


def write(path, pts, initial, swaps, flipped, cert, attempt):
    lines = []
    lines.append("#pragma once")
    lines.append("")
    lines.append("// Generated by tools/gen_nonpappus.py; do not edit.")
    lines.append("// A perturbed Pappus configuration, its wiring diagram, and the same diagram")
    lines.append("// with the triangle of the Pappus line C1 C2 C3 flipped. The flipped order type")
    lines.append("// is not realizable by points; `kNonPappusCertificate` lists weighted strict")
    lines.append("// inequalities from 3-term Grassmann-Pluecker relations that sum to zero.")
    lines.append("")
    lines.append("#include <array>")
    lines.append("#include <vector>")
    lines.append("")
    lines.append("namespace fixtures {")
    lines.append("")
    lines.append("struct NamedPoint {")
    lines.append("    const char* label;")
    lines.append("    const char* x;")
    lines.append("    const char* y;")
    lines.append("};")
    lines.append("")
    lines.append("inline const std::vector<NamedPoint> kPappusPerturbed{")
    for l in LABELS:
        x, y = pts[l]
        lines.append("    {\"%s\", %s, %s}," % (l, q(x), q(y)))
    lines.append("};")
    lines.append("")
    lines.append("inline const std::vector<const char*> kNonPappusInitial{%s};" % ", ".join('"%s"' % l for l in initial))
    lines.append("inline const std::vector<int> kPappusSwaps{%s};" % ", ".join(map(str, swaps)))
    lines.append("inline const std::vector<int> kNonPappusSwaps{%s};" % ", ".join(map(str, flipped)))
    lines.append("")
    lines.append("// Relation [a b c][a d e] - [a b d][a c e] + [a b e][a c d] = 0 on (a, b, c, d, e);")
    lines.append("// term `big` has the sign opposite to the other two, so |big| > |small|.")
    lines.append("struct GpInequality {")
    lines.append("    std::array<const char*, 5> labels;")
    lines.append("    int big;")
    lines.append("    int small;")
    lines.append("    long weight;")
    lines.append("};")
    lines.append("")
    lines.append("inline const std::vector<GpInequality> kNonPappusCertificate{")
    for rel, opp, other, w in cert:
        lines.append("    {{%s}, %d, %d, %d}," % (", ".join('"%s"' % l for l in rel), opp, other, w))
    lines.append("};")
    lines.append("")
    lines.append("}  // namespace fixtures")
    with open(path, "w") as f:
        f.write("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
