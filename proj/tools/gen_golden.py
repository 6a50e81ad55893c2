#!/usr/bin/env python3
"""Golden-value generator for the q3c test suite.

Computes expected values for the C++ tests by independent brute-force /
direct-formula paths (pure Python big ints and fractions, no third-party
packages).  Emits C++ .inc fragments under tests/golden/.  Every quantity is
cross-checked internally (assertions) before it is written, so a bug in the
generator fails loudly here rather than silently blessing wrong goldens.

Run from the repository root:  python3 tools/gen_golden.py
"""

import math
import os
import sys
from fractions import Fraction
from math import gcd, isqrt

OUT = os.path.join(os.path.dirname(__file__), "..", "tests", "golden")


# ----------------------------------------------------------------------------
# Core forms on parameter pairs
# ----------------------------------------------------------------------------

def eval_A(m, n):
    return (m**6 + 2 * m**5 * n + 4 * m**4 * n**2 + 8 * m**3 * n**3
            + 9 * m**2 * n**4 + 4 * m * n**5 + n**6)


def eval_s_cubic(m, n):
    return m**3 + m**2 * n - 2 * m * n**2 - n**3


def eval_B(m, n):
    return 4 * m * m * n * n * (m + n) ** 2


def eval_C(m, n):
    prod = m * n * (m + n)
    assert prod % 2 == 0
    return prod // 2


def t1(m, n):
    return m**3 + 2 * m**2 * n + m * n**2 + n**3


def t2(m, n):
    return m**3 - m * n**2 - n**3


def t3(m, n):
    return m**3 + 2 * m**2 * n + 3 * m * n**2 + n**3


def allowable(m, n):
    return gcd(m, n) == 1 and m != 0 and n != 0 and m + n != 0


def beta(m, n):
    return (-n, m + n)


def beta_orbit(m, n):
    orb = [(m, n)]
    cur = (m, n)
    for _ in range(5):
        cur = beta(*cur)
        orb.append(cur)
    assert beta(*cur) == (m, n)
    return orb


def canonical_pair(m, n):
    pos = [p for p in beta_orbit(m, n) if p[0] > 0 and p[1] > 0]
    assert len(pos) == 1, (m, n, pos)
    return pos[0]


def c_of_pair(m, n):
    return Fraction(-eval_A(m, n), eval_B(m, n))


def cycle_of_pair(m, n):
    d = 2 * m * n * (m + n)
    return (Fraction(t1(m, n), d), Fraction(t2(m, n), d), Fraction(-t3(m, n), d))


def phi3(x, y):
    return (x**6 + x**5 + (3 * y + 1) * x**4 + (2 * y + 1) * x**3
            + (3 * y**2 + 3 * y + 1) * x**2 + (y**2 + 2 * y + 1) * x
            + y**3 + 2 * y**2 + y + 1)


def param_t(t):
    x = Fraction(t**3 + t**2 - t + 7, 4 * (t**2 - 1))
    y = Fraction(-(t**6 - 2 * t**5 + 11 * t**4 + 20 * t**3 + 23 * t**2
                   - 18 * t + 29), 16 * (t**2 - 1) ** 2)
    return x, y


def check_pair(m, n):
    """Full consistency battery for one allowable pair."""
    A, B, C = eval_A(m, n), eval_B(m, n), eval_C(m, n)
    assert A > 0 and A % 2 == 1
    assert gcd(A, B) == 1
    assert B == 16 * C * C
    assert A == eval_s_cubic(m, n) ** 2 + 7 * (m * n * (m + n)) ** 2
    c = c_of_pair(m, n)
    assert c == Fraction(-A, B) and c < 0
    x = cycle_of_pair(m, n)
    for xi in x:
        assert phi3(xi, c) == 0
    # orbit closure under z -> z^2 + c
    assert x[0] * x[0] + c == x[1]
    assert x[1] * x[1] + c == x[2]
    assert x[2] * x[2] + c == x[0]
    # norm-form identities
    T1, T2, T3 = t1(m, n), t2(m, n), t3(m, n)
    assert T1 * T1 - A == 4 * C * T2
    assert T2 * T2 - A == -4 * C * T3
    assert T3 * T3 - A == 4 * C * T1
    assert gcd(T1, T2) == 1 and gcd(T1, T3) == 1 and gcd(T2, T3) == 1
    # beta shifts
    bm, bn = beta(m, n)
    assert eval_A(bm, bn) == A and eval_B(bm, bn) == B
    assert t1(bm, bn) == T3 and t2(bm, bn) == -T1 and t3(bm, bn) == T2
    assert eval_s_cubic(bm, bn) == -eval_s_cubic(m, n)
    # s/t parametrization agreement (s = m/n, t = 1 + 2s)
    s = Fraction(m, n)
    t = 1 + 2 * s
    if t != 1 and t != -1:
        xt, yt = param_t(t)
        assert xt == x[0] and yt == c
    return A, B, C, T1, T2, T3, c, x


# ----------------------------------------------------------------------------
# Z[gamma] arithmetic (gamma^3 = gamma + 1), independent of the C++ layout
# ----------------------------------------------------------------------------

def cmul(u, v):
    a, b, c = u
    d, e, f = v
    return (a * d + b * f + c * e,
            a * e + b * d + b * f + c * e + c * f,
            a * f + b * e + c * d + c * f)


def cnorm_resultant(u):
    """Norm via Sylvester resultant of x^3 - x - 1 and u(x) (Bareiss det)."""
    a, b, c = u
    mat = [
        [1, 0, -1, -1, 0],
        [0, 1, 0, -1, -1],
        [c, b, a, 0, 0],
        [0, c, b, a, 0],
        [0, 0, c, b, a],
    ]
    # Bareiss fraction-free determinant
    m = [row[:] for row in mat]
    sign, prev = 1, 1
    for k in range(4):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, 5) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, 5):
            for j in range(k + 1, 5):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[4][4]


GAMMA = (0, 1, 0)
GAMMA_INV = (-1, 0, 1)


def gpow_seq(seed, lo, hi):
    """Map k -> seed * gamma^k for k in [lo, hi]."""
    out = {0: seed}
    cur = seed
    for k in range(1, hi + 1):
        cur = cmul(cur, GAMMA)
        out[k] = cur
    cur = seed
    for k in range(-1, lo - 1, -1):
        cur = cmul(cur, GAMMA_INV)
        out[k] = cur
    return out


def zeros_of_seed(seed, window):
    seq = gpow_seq(seed, -window, window)
    return sorted(k for k, v in seq.items() if v[1] == 0)


# ----------------------------------------------------------------------------
# Brute-force Thue / norm-A solvers
# ----------------------------------------------------------------------------

def int_cubic_roots(c2, c1, c0):
    """All integer roots of x^3 + c2 x^2 + c1 x + c0 (exact, sign-change
    bisection on the monotone pieces)."""
    def val(x):
        return ((x + c2) * x + c1) * x + c0
    # Bound on |roots|: 1 + max |ci| (Cauchy)
    B = 1 + max(abs(c2), abs(c1), abs(c0))
    pts = [-B, B]
    # critical points of derivative 3x^2 + 2 c2 x + c1
    disc = c2 * c2 - 3 * c1
    if disc >= 0:
        r = isqrt(disc)
        for cand in ((-c2 - r) // 3, (-c2 + r) // 3):
            for d in (-1, 0, 1, 2):
                if -B < cand + d < B:
                    pts.append(cand + d)
    pts = sorted(set(pts))
    roots = set()
    for lo, hi in zip(pts, pts[1:]):
        vlo, vhi = val(lo), val(hi)
        if vlo == 0:
            roots.add(lo)
        if vhi == 0:
            roots.add(hi)
        if (vlo < 0 < vhi) or (vhi < 0 < vlo):
            a, b, va = lo, hi, vlo
            while b - a > 1:
                mid = (a + b) // 2
                vm = val(mid)
                if vm == 0:
                    roots.add(mid)
                    break
                if (va < 0) == (vm < 0):
                    a, va = mid, vm
                else:
                    b = mid
    return sorted(r for r in roots if val(r) == 0)


def brute_t1(a, H):
    """All allowable (m,n), |m|,|n| <= H, with t1(m,n) = a."""
    sols = []
    for n in range(-H, H + 1):
        if n == 0:
            continue
        # t1 as cubic in m: m^3 + 2n m^2 + n^2 m + (n^3 - a)
        for m in int_cubic_roots(2 * n, n * n, n**3 - a):
            if abs(m) <= H and allowable(m, n) and t1(m, n) == a:
                sols.append((m, n))
    return sorted(sols)


def solve_A_brute(k):
    """All allowable (m,n) with A(m,n) = k (complete: |m|,|n| <= sqrt(k/7))."""
    if k <= 0:
        return []
    H = isqrt(k // 7) + 1
    sols = []
    for m in range(-H, H + 1):
        if m == 0:
            continue
        for n in range(-H, H + 1):
            if not allowable(m, n):
                continue
            if abs(m * n * (m + n)) > H:
                continue
            if eval_A(m, n) == k:
                sols.append((m, n))
    return sorted(sols)


# ----------------------------------------------------------------------------
# F_p dynamics
# ----------------------------------------------------------------------------

def cycles_mod_p(p, c):
    f = [(x * x + c) % p for x in range(p)]
    color = [0] * p  # 0 unseen, 1 in-progress stack id via pos, 2 done
    cycles = []
    state = [0] * p
    for x0 in range(p):
        if state[x0]:
            continue
        path, pos = [], {}
        x = x0
        while True:
            if x in pos:
                cyc = path[pos[x]:]
                cycles.append(cyc)
                break
            if state[x]:
                break
            pos[x] = len(path)
            path.append(x)
            x = f[x]
        for y in path:
            state[y] = 1
    # canonical: start each cycle at its smallest element, keep iteration order
    canon = []
    for cyc in cycles:
        i = cyc.index(min(cyc))
        canon.append(cyc[i:] + cyc[:i])
    canon.sort(key=lambda cy: (len(cy), cy))
    return canon


def mult_order(a, p):
    if a % p == 0:
        return 0  # sentinel for infinity
    k, cur = 1, a % p
    while cur != 1:
        cur = (cur * a) % p
        k += 1
    return k


def nshape(p):
    """N(p) = #{ y1(s) mod p : s != 0, -1 } (distinct linear-factor c values)."""
    vals = set()
    for s in range(1, p):
        if s == p - 1:
            continue
        num = -(s**6 + 2 * s**5 + 4 * s**4 + 8 * s**3 + 9 * s**2 + 4 * s + 1)
        den = 4 * s * s * (s + 1) ** 2
        vals.add(num * pow(den, -1, p) % p)
    return len(vals)


def legendre(a, p):
    a %= p
    if a == 0:
        return 0
    r = pow(a, (p - 1) // 2, p)
    return 1 if r == 1 else -1


# ----------------------------------------------------------------------------
# Emission helpers
# ----------------------------------------------------------------------------

def frac_str(q):
    return f"{q.numerator}/{q.denominator}"


def write_inc(name, body):
    os.makedirs(OUT, exist_ok=True)
    path = os.path.join(OUT, name)
    with open(path, "w") as fh:
        fh.write("// Generated by tools/gen_golden.py -- do not edit by hand.\n")
        fh.write(body)
    print(f"wrote {path}")


def pairs_str(pairs):
    return ";".join(f"{m},{n}" for (m, n) in pairs)


# ----------------------------------------------------------------------------
# Main generation
# ----------------------------------------------------------------------------

def gen_pairs():
    pair_list = [(1, 1), (4, 3), (1, 2), (3, -1), (-3, 2), (2, -1), (-7, 4),
                 (-9, 7), (-4, 7), (-1, 7), (65, -37), (7, 1), (4, 5),
                 (-18, 11), (-630, 359), (-1, 3), (-4, 3), (5, -2), (12, 5),
                 (123, 457), (-101, 250)]
    rows = []
    for (m, n) in pair_list:
        assert allowable(m, n)
        A, B, C, T1, T2, T3, c, x = check_pair(m, n)
        cm, cn = canonical_pair(m, n)
        rows.append(
            '  {"%d", "%d", "%d", "%d", "%d", "%d", "%d", "%d", "%s", "%s", "%s", "%s", "%d", "%d"},'
            % (m, n, A, B, C, T1, T2, T3, frac_str(c), frac_str(x[0]),
               frac_str(x[1]), frac_str(x[2]), cm, cn))
    body = (
        "struct GoldenPair {\n"
        "  const char* m; const char* n; const char* A; const char* B;\n"
        "  const char* C; const char* t1; const char* t2; const char* t3;\n"
        "  const char* c; const char* x1; const char* x2; const char* x3;\n"
        "  const char* cm; const char* cn;\n"
        "};\n"
        "inline constexpr GoldenPair kGoldenPairs[] = {\n" + "\n".join(rows) +
        "\n};\n")
    write_inc("golden_pairs.inc", body)

    # spec-vs-paper check: x(0) must be -7/4 (root of the displayed factor)
    x0, y0 = param_t(0)
    assert x0 == Fraction(-7, 4) and y0 == Fraction(-29, 16)
    assert phi3(x0, y0) == 0


def gen_thue():
    cases = [
        (1, 20, [(2, -1), (-7, 4)]),
        (5, 20, [(1, 1), (-3, 2)]),
        (7, 20, [(-1, 2), (-5, 3)]),
        (11, 20, [(3, -1)]),
        (17, 20, [(1, 2)]),
        (19, 20, [(2, 1), (9, -5)]),
        (23, 20, [(-4, 3), (-1, 3)]),
        (25, 20, [(-2, 3)]),
        (307, 100, [(-9, 7), (-4, 7), (-1, 7), (65, -37)]),
        (449, 700, [(7, 1), (4, 5), (-18, 11), (-630, 359)]),
        (3599, 60, None),
        (29, 20, None),
        (35, 60, None),
        (43, 60, None),
        (59, 60, None),
        (61, 60, None),
        (85, 200, None),
        (209, 60, None),
        (211, 60, None),
        (575, 60, None),
        (631, 60, None),
        (883, 60, None),
        (1451, 120000, None),
    ]
    rows = []
    for a, H, expect in cases:
        sols = brute_t1(a, H)
        if expect is not None:
            assert sols == sorted(expect), (a, sols)
        rows.append('  {"%d", %d, "%s"},' % (a, H, pairs_str(sols)))
    body = (
        "struct GoldenThue { const char* a; int H; const char* sols; };\n"
        "inline constexpr GoldenThue kGoldenThue[] = {\n" + "\n".join(rows) +
        "\n};\n")
    write_inc("golden_thue.inc", body)

    # Lemma-style unit-orbit zero sets (independent cubic-arithmetic path)
    assert zeros_of_seed((1, 0, 0), 50) == [-14, -5, -1, 0, 2]
    assert zeros_of_seed((2, -1, 0), 50) == [-1, 5]
    assert zeros_of_seed((2, 1, 0), 50) == [-9, -1]
    # and the elements they expose
    seq = gpow_seq((1, 0, 0), -20, 5)
    assert seq[-5] == (2, 0, -1) and seq[-14] == (-7, 0, 4)
    seq = gpow_seq((2, -1, 0), -5, 6)
    assert seq[5] == (1, 0, 1) and seq[-1] == (-3, 0, 2)
    seq = gpow_seq((2, 1, 0), -10, 2)
    assert seq[-1] == (-1, 0, 2) and seq[-9] == (-5, 0, 3)


def gen_solvea():
    cases = [29, 421, 301, 49561, 15, 16, 100, 7, 203, 1113]
    rows = []
    for k in cases:
        sols = solve_A_brute(k)
        assert len(sols) in (0, 6), (k, sols)
        rows.append('  {"%d", "%s"},' % (k, pairs_str(sols)))
    body = (
        "struct GoldenSolveA { const char* k; const char* sols; };\n"
        "inline constexpr GoldenSolveA kGoldenSolveA[] = {\n" + "\n".join(rows)
        + "\n};\n")
    write_inc("golden_solvea.inc", body)

    # conjecture-style scan prefix: counts for k <= 20000
    KMAX = 20000
    H = isqrt(KMAX // 7) + 1
    counts = {}
    for m in range(-H - 1, H + 2):
        if m == 0:
            continue
        for n in range(-H - 1, H + 2):
            if not allowable(m, n) or abs(m * n * (m + n)) > H:
                continue
            A = eval_A(m, n)
            if A <= KMAX:
                counts[A] = counts.get(A, 0) + 1
    assert all(v == 6 for v in counts.values()), "orbit of 6 expected"
    with_hits = len(counts)
    write_inc("golden_scan.inc",
              f"inline constexpr int kScanPrefixKmax = {KMAX};\n"
              f"inline constexpr int kScanPrefixHits = {with_hits};\n")

    # minimality scans over |m|,|n| <= 60
    b16, a29, amin = [], [], None
    for m in range(-60, 61):
        for n in range(-60, 61):
            if m == 0 or n == 0 or not allowable(m, n):
                continue
            A, B = eval_A(m, n), eval_B(m, n)
            if B == 16:
                b16.append((m, n))
            if A == 29:
                a29.append((m, n))
            amin = A if amin is None else min(amin, A)
            # no power of 7 may appear as an A value
            q = A
            while q % 7 == 0:
                q //= 7
            assert q != 1
    assert amin == 29
    assert sorted(b16) == sorted([(1, 1), (-1, -1), (2, -1), (-2, 1), (1, -2), (-1, 2)])
    assert sorted(a29) == sorted(beta_orbit(1, 1))
    write_inc("golden_minscan.inc",
              'inline constexpr const char* kB16Pairs = "%s";\n'
              'inline constexpr const char* kA29Pairs = "%s";\n'
              % (pairs_str(sorted(b16)), pairs_str(sorted(a29))))


def gen_cubic():
    import random
    rng = random.Random(20260815)
    rows = []
    for _ in range(64):
        u = tuple(rng.randint(-50, 50) for _ in range(3))
        v = tuple(rng.randint(-50, 50) for _ in range(3))
        w = cmul(u, v)
        nu, nv, nw = cnorm_resultant(u), cnorm_resultant(v), cnorm_resultant(w)
        assert nu * nv == nw
        rows.append('  {%d,%d,%d, %d,%d,%d, %d,%d,%d, "%d"},'
                    % (*u, *v, *w, nu))
    body = (
        "struct GoldenCubicMul { long long a0,a1,a2, b0,b1,b2, c0,c1,c2; const char* normA; };\n"
        "inline constexpr GoldenCubicMul kGoldenCubicMul[] = {\n" +
        "\n".join(rows) + "\n};\n")
    write_inc("golden_cubic.inc", body)

    # norm <-> t identities
    for _ in range(400):
        m = rng.randint(-80, 80)
        n = rng.randint(-80, 80)
        assert cnorm_resultant((m, 0, n)) == t1(m, n)
        assert cnorm_resultant((m, -n, 0)) == t2(m, n)
        assert cnorm_resultant((m, -n, n)) == t3(m, n)
    # unit and prime identities
    assert cnorm_resultant(GAMMA) == 1 and cnorm_resultant(GAMMA_INV) == 1
    assert cmul(GAMMA, GAMMA_INV) == (1, 0, 0)
    eps23 = (0, 1, -1)
    assert cmul(cmul(eps23, (-3, 1, 0)), cmul((3, 2, 0), (3, 2, 0))) == (23, 0, 0)
    eps5 = (-2, -1, 2)
    assert cmul(cmul(eps5, (1, 2, 0)), (3, 2, 1)) == (5, 0, 0)
    assert cmul(cmul((1, 2, 0), (1, 2, 0)), (-1, 1, 0)) == (3, 1, 0)  # gamma+3
    # relation identities used by the solver on (m,n) grids
    for _ in range(200):
        m, n = rng.randint(-60, 60), rng.randint(-60, 60)
        assert cmul((-1, 0, 1), (m, -n, 0)) == (-m - n, 0, m)
        assert cmul((0, 0, 1), (m, -n, n)) == (-n, 0, m + n)


def gen_padic():
    rows = []
    wanted = [(29, list(range(29))), (7, [0, 3, 5, 6]), (11, [3, 7, 8]),
              (3, [1]), (5, [1]), (23, [0, 5])]
    for p, cs in wanted:
        for c in cs:
            for cyc in cycles_mod_p(p, c):
                mu = 1
                for x in cyc:
                    mu = (mu * 2 * x) % p
                r = mult_order(mu, p)
                rows.append('  {%d, %d, "%s", %d, %d},'
                            % (p, c, ",".join(map(str, cyc)), mu, r))
    body = (
        "struct GoldenFpCycle { int p; int c; const char* elems; int mu; int r; };\n"
        "inline constexpr GoldenFpCycle kGoldenFpCycles[] = {\n" +
        "\n".join(rows) + "\n};\n")
    write_inc("golden_padic.inc", body)

    # paper cross-checks
    c29 = cycles_mod_p(29, 0)
    assert [len(c) for c in c29] == [1, 1, 3, 3]
    assert c29[2:] == [[7, 20, 23], [16, 24, 25]]
    # table rows for c in {11,14,15,20,21,27} mod 29 (paper's Table 2)
    table2 = {
        11: [([4, 27, 15], 26, 28), ([6, 18, 16], 20, 7)],
        14: [([8, 20], 2, 28), ([18, 19, 27], 9, 14)],
        15: [([9], 18, 28), ([21], 13, 14), ([6, 22], 6, 14), ([10, 28, 16], 25, 7)],
        20: [([13, 15], 26, 28), ([7, 11, 25], 1, 1)],
        21: [([14], 28, 2), ([16], 3, 28), ([8, 27, 25], 19, 28)],
        27: [([2], 4, 14), ([28], 27, 28), ([5, 23], 25, 7), ([3, 7, 18], 8, 28),
             ([4, 14, 20, 21], 16, 7)],
    }
    for c, entries in table2.items():
        got = []
        for cyc in cycles_mod_p(29, c):
            mu = 1
            for x in cyc:
                mu = (mu * 2 * x) % 29
            got.append((cyc, mu, mult_order(mu, 29)))
        # paper rows start at the iteration-minimal element; compare as sets of
        # rotations with matching mu/r
        def rot_min(cy):
            i = cy.index(min(cy))
            return tuple(cy[i:] + cy[:i])
        got_set = {(rot_min(cy), mu, r) for cy, mu, r in got}
        want_set = {(rot_min(cy), mu, r) for cy, mu, r in entries}
        assert got_set == want_set, (c, got_set, want_set)

    # N(p) cross-check table for p <= 199 + paper facts
    nb = []
    p = 3
    for p in range(3, 200):
        if all(p % q for q in range(2, isqrt(p) + 1)):
            N = nshape(p)
            bound = (p + 2 * legendre(-3, p)) // 3 if p != 3 else 1
            assert N <= bound, (p, N, bound)
            nb.append(f"  {{{p}, {N}}},")
    assert nshape(3) == 1
    body = ("struct GoldenNShape { int p; int N; };\n"
            "inline constexpr GoldenNShape kGoldenNShape[] = {\n" +
            "\n".join(nb) + "\n};\n")
    write_inc("golden_nshape.inc", body)

    # no 3-cycle for c = -1 mod 7; 3-cycle c-values mod 29
    assert all(len(cy) != 3 for cy in cycles_mod_p(7, 6))
    with3 = sorted(c for c in range(29)
                   if any(len(cy) == 3 for cy in cycles_mod_p(29, c)))
    assert with3 == [0, 11, 14, 15, 20, 21, 27], with3


def gen_graph():
    # triangles at chosen vertices from brute Thue solving
    def triangle_of(m, n):
        return tuple(sorted([abs(t1(m, n)), abs(t2(m, n)), abs(t3(m, n))]))

    tri307 = {triangle_of(m, n) for (m, n) in brute_t1(307, 100)}
    assert tri307 == {(307, 575, 631), (85, 211, 307), (209, 295, 307),
                      (307, 178277, 236293)}, tri307
    tri1 = {triangle_of(m, n) for (m, n) in brute_t1(1, 20)}
    assert tri1 == {(1, 5, 7), (1, 223, 295)}
    tri3599 = {triangle_of(m, n) for (m, n) in brute_t1(3599, 60)}
    assert tri3599 == {(1835, 3599, 5293), (3599, 3631, 4081),
                       (3599, 4549, 6509)}, tri3599
    rows = []
    for a, H in [(1, 20), (5, 20), (7, 20), (11, 20), (23, 20), (307, 100),
                 (3599, 60), (35, 60), (43, 60), (59, 60), (883, 60),
                 (1451, 120000)]:
        tris = sorted({triangle_of(m, n) for (m, n) in brute_t1(a, H)})
        ts = "|".join(",".join(map(str, t)) for t in tris)
        rows.append('  {"%d", %d, "%s"},' % (a, H, ts))
    body = (
        "struct GoldenTriangles { const char* a; int H; const char* tris; };\n"
        "inline constexpr GoldenTriangles kGoldenTriangles[] = {\n" +
        "\n".join(rows) + "\n};\n")
    write_inc("golden_triangles.inc", body)

    # special vertices (paper list) -- verify substance via t1 identity
    def hval(x, y):
        return (x**6 - 3 * x**5 * y + 5 * x**4 * y**2 - 5 * x**3 * y**3
                + 5 * x**2 * y**4 - 3 * x * y**5 + y**6)

    special = {
        (37, 3): (2019658087, [(-21235, 12103), (-1369, 1267), (-1156, 1267),
                               (-9, 1267), (1458, -275)]),
        (47, 15): (4659789889, [(-8431, 4840), (-2209, 1729), (-1024, 1729),
                                (-225, 1729), (1897, -324)]),
        (63, 20): (27115751629, [(-3969, 3109), (-1849, 3109), (-400, 3109),
                                 (6437, -3304), (18953, -10759)]),
        (85, 7): (295789896739, [(-7225, 6679), (-6084, 6679), (-3591, 6955),
                                 (-2722, 7021), (-49, 6679)]),
        (113, 42): (823905321247, [(-40249, 23212), (-12769, 9787),
                                   (-5041, 9787), (-1764, 9787), (1934, 8497)]),
        (285, 64): (285605862810841, [(-162689, 98505), (-81225, 67081),
                                      (-48841, 67081), (-12817, 68809),
                                      (-4096, 67081)]),
    }
    for (x, y), (a, sols) in special.items():
        assert gcd(x, y) == 1 and x * y * (x - y) != 0
        assert hval(x, y) == a
        q = x * x - x * y + y * y
        assert a == q**3 - (x * y * (x - y)) ** 2
        eq39 = {(-x * x, q), (-(x - y) ** 2, q), (-y * y, q)}
        assert eq39 <= set(sols), (x, y)
        for (m, n) in sols:
            assert allowable(m, n) and t1(m, n) == a, (m, n)
    # degenerate-family example: (2,1) collapses to two distinct pairs
    assert hval(2, 1) == 23
    assert sorted({(-4, 3), (-(2 - 1) ** 2, 3), (-1, 3)}) == [(-4, 3), (-1, 3)]


def gen_mt():
    # split-prime data: roots of x^3 + x^2 - 1 lifted mod p^2
    def roots_lifted(p):
        rs = [x for x in range(p) if (x**3 + x**2 - 1) % p == 0]
        out = []
        for r in rs:
            fp = (3 * r * r + 2 * r) % p
            # Newton step to mod p^2
            val = (r**3 + r**2 - 1)
            lift = (r - val * pow(fp, -1, p * p)) % (p * p)
            assert (lift**3 + lift**2 - 1) % (p * p) == 0
            out.append(lift)
        return sorted(out)

    assert roots_lifted(59) == sorted([2375, 3413, 1173])
    assert roots_lifted(101) == sorted([1409, 4507, 4284])
    assert roots_lifted(173) == sorted([23690, 21569, 14598])

    # backward sequence b~_l for seed 1 and the paper residues
    def bt_series(seed, hi, lo=-20):
        seq = gpow_seq(seed, -hi, -lo)
        return {l: seq[-l][1] for l in range(lo, hi + 1)}

    bt = bt_series((1, 0, 0), 80)
    zero_exact = [l for l in range(-2, 56) if bt[l] == 0]
    assert zero_exact == [-2, 0, 1, 5, 14]
    zero_modp = [l for l in range(-2, 56) if bt[l] % 59 == 0]
    assert zero_modp == zero_exact  # condition (ii) at p = 59
    # b~_56 must be 0 mod 59 (period-58 congruence with b~_{-2} = 0); the
    # correct residue mod 59^2 is 1888 = 32*59 (confirmed by two independent
    # computations: the gamma^{-1} coefficient walk and the pure order-3
    # recursion).  A published source shows 1495 here, which is == 20 mod 59
    # and therefore cannot be b~_56.
    assert bt[56] % 3481 == 1888 and bt[58] % 3481 == 1121
    assert bt[59] % 3481 == 767 and bt[63] % 3481 == 354
    assert bt[72] % 3481 == 3186

    # alpha coefficients mod 59^2 for seed 1 in paper's root order
    g = [2375, 3413, 1173]
    P2 = 59 * 59
    # solve V a = b for b = (bt[0], bt[1], bt[2]) via exact CRT-free inversion
    rows = [[1, 1, 1], g[:], [x * x % P2 for x in g]]
    b = [bt[0] % P2, bt[1] % P2, bt[2] % P2]
    # Gaussian elimination mod P2 (pivots are units mod 59)
    import copy
    M = [row[:] + [bb] for row, bb in zip(rows, b)]
    n = 3
    for i in range(n):
        piv = next(r for r in range(i, n) if M[r][i] % 59 != 0)
        M[i], M[piv] = M[piv], M[i]
        inv = pow(M[i][i], -1, P2)
        M[i] = [(x * inv) % P2 for x in M[i]]
        for r in range(n):
            if r != i and M[r][i]:
                f = M[r][i]
                M[r] = [(x - f * y) % P2 for x, y in zip(M[r], M[i])]
    alpha = [M[i][3] for i in range(n)]
    assert alpha == [2871, 2907, 1184], alpha

    # seed 2 - gamma: paper starting values and certificate numbers
    seq = gpow_seq((2, -1, 0), -60, 6)
    assert [seq[k][1] for k in (-1, 0, 1, 2, 3, 4, 5)] == [0, -1, 2, -1, 1, 1, 0]
    bt2 = bt_series((2, -1, 0), 80)
    assert [l for l in range(-5, 53) if bt2[l] == 0] == [-5, 1]
    assert bt2[53] % P2 == 3009 and bt2[59] % P2 == 413

    # Full verification of the published certification table (numerators
    # 11, 17, 25, 19, 23): alphas mod p^2 in the root order used above,
    # zero sets, and the b~_{m+S} residues.
    def solve_alpha(seed, p):
        q = p * p
        g = roots_lifted_ordered(p)
        bt = bt_series(seed, 3)
        M = [[1, 1, 1, bt[0] % q],
             [g[0], g[1], g[2], bt[1] % q],
             [g[0] * g[0] % q, g[1] * g[1] % q, g[2] * g[2] % q, bt[2] % q]]
        for i in range(3):
            piv = next(r for r in range(i, 3) if M[r][i] % p != 0)
            M[i], M[piv] = M[piv], M[i]
            inv = pow(M[i][i], -1, q)
            M[i] = [(x * inv) % q for x in M[i]]
            for r in range(3):
                if r != i and M[r][i]:
                    f = M[r][i]
                    M[r] = [(x - f * y) % q for x, y in zip(M[r], M[i])]
        return [M[i][3] for i in range(3)]

    def roots_lifted_ordered(p):
        # paper order: 59 -> (2375, 3413, 1173); 101 -> (1409, 4507, 4284);
        # 173 -> (23690, 21569, 14598)
        order = {59: [2375, 3413, 1173], 101: [1409, 4507, 4284],
                 173: [23690, 21569, 14598]}
        return order[p]

    table1 = [
        # (num, seed, p, alphas, M (l-space), {m: residue of b~_{m+S}})
        (11, (-1, 2, 0), 101, [2768, 4450, 2985], [1], {1: 6060}),
        (17, (2, 3, 0), 173, [9587, 1499, 18846], [1], {1: 28026}),
        (25, (3, 1, 0), 59, [273, 846, 2363], [1], {1: 3422}),
        (19, (2, 0, 1), 59, [997, 2500, 3465], [0, 10], {0: 649, 10: 649}),
        (23, (-3, 1, 0), 59, [452, 809, 2221], [1], {1: 2301}),
        (23, (3, 2, 0), 59, [2376, 3414, 1174], [1], {1: 1062}),
        (25, (3, 2, 1), 101, [2162, 8668, 9574], [], {}),
    ]
    mt_rows = []
    for num, seed, p, alphas, M, resid in table1:
        q = p * p
        S = p - 1
        got_alpha = solve_alpha(seed, p)
        assert got_alpha == alphas, (num, seed, got_alpha, alphas)
        bt = bt_series(seed, S + 20)
        lo = min(M) if M else 0
        zero_exact = [l for l in range(lo, lo + S) if bt[l] == 0]
        assert zero_exact == M, (num, zero_exact, M)
        zero_modp = [l for l in range(lo, lo + S) if bt[l] % p == 0]
        assert zero_modp == M, (num, zero_modp, M)
        for m, want in resid.items():
            assert bt[m + S] % q == want, (num, m, bt[m + S] % q, want)
            assert bt[m + S] % q != 0  # condition (iii)
        mt_rows.append('  {%d, %d,%d,%d, %d, "%s", "%s", "%s"},' % (
            num, *seed, p, ",".join(map(str, alphas)),
            ",".join(map(str, M)),
            ",".join(f"{m}:{r}" for m, r in sorted(resid.items()))))
    body = (
        "struct GoldenMTRow {\n"
        "  int num; long long s0, s1, s2; int p;\n"
        "  const char* alphas; const char* zeros; const char* residues;\n"
        "};\n"
        "inline constexpr GoldenMTRow kGoldenMTRows[] = {\n" +
        "\n".join(mt_rows) + "\n};\n"
        "// seed 1 at p = 59: zeros and b~_{m+58} residues mod 59^2\n"
        'inline constexpr const char* kSeedOneZeros = "-14,-5,-1,0,2";  // k-space\n'
        'inline constexpr const char* kSeedOneResidues = "-2:1888;0:1121;1:767;5:354;14:3186";\n'
        "// seed 2-gamma at p = 59\n"
        'inline constexpr const char* kSeedTwoMinusGammaResidues = "-5:3009;1:413";\n')
    write_inc("golden_mt.inc", body)

    print("MT cross-checks OK")


def main():
    gen_pairs()
    gen_thue()
    gen_solvea()
    gen_cubic()
    gen_padic()
    gen_graph()
    gen_mt()
    print("all golden data generated, all internal assertions passed")


if __name__ == "__main__":
    main()
