"""Acceptance suite: one test per criterion, exact tolerances, one printed
pass/fail line each (run with ``pytest tests/test_acceptance.py -v -s``)."""

import random
import time

import pytest

from raylab import axes, mcg, quasi, tight, unicorn
from raylab.codes import Code, canonicalize, normalize
from raylab.experiments import exp_nonrev, exp_oracle, load_expected, small_universe
from raylab.model import build_model
from raylab.sampling import (
    random_code,
    random_disjoint_pair,
    random_loop_vertex,
    random_mc_word,
    random_simple_ray,
    random_word,
)

M16 = build_model(16)
M12 = build_model(12)


def _report(num, name, ok, t0):
    status = "PASS" if ok else "FAIL"
    print(f"[acceptance] C{num:02d} {name}: {status} ({time.time() - t0:.1f}s)")
    assert ok


def test_criterion_01_axis_words():
    t0 = time.time()
    expected = load_expected()
    ok = axes.alpha(M16, 2) == Code("S", tuple(expected["alpha2_word"]), 3)
    for k in range(1, 13):
        ok &= len(axes.alpha_word(k + 1)) == 3 * len(axes.alpha_word(k)) + 4
        ok &= (len(axes.alpha_word(k)) + 1) % 2 == 1
    a12 = axes.alpha(M16, 12)
    ok &= normalize(a12, M16) == a12
    g12 = axes.gamma(M16, 12)
    ok &= normalize(g12, M16) == g12
    _report(1, "axis words", ok, t0)


def test_criterion_02_geodesic_half_axis():
    t0 = time.time()
    path = axes.axis_path(M16, 10)
    ok = True
    for n in range(11):
        cert = axes.certify_distance(M16, path[0], path[n], path[: n + 1])
        ok &= cert.exact and cert.lower == n and cert.upper == n
    _report(2, "geodesic half-axis (n <= 10)", ok, t0)


def test_criterion_03_intersection_formulas():
    t0 = time.time()
    a0 = axes.alpha(M16, 0)
    got = {1: tight.signed_intersections(M16, a0, axes.alpha(M16, 1))}
    ok = got[1] == (0, 0)
    for k in range(2, 11):
        got[k] = tight.signed_intersections(M16, a0, axes.alpha(M16, k))
        p_want = (3 ** (k - 1) + 2 * k - 3) // 4
        n_want = (3 ** (k - 1) - 2 * k + 1) // 4
        ok &= got[k] == (p_want, n_want)
    for k in range(1, 10):
        p, n = got[k]
        ok &= got[k + 1] == (2 * p + n + 1, p + 2 * n)
    _report(3, "intersection formulas (k <= 10)", ok, t0)


def test_criterion_04_h_translation():
    t0 = time.time()
    h = mcg.named("h")
    ok = True
    for k in range(9):
        ok &= mcg.apply(h, axes.alpha(M12, k), M12) == axes.alpha(M12, k + 1)
    _report(4, "h-translation (k <= 8, window 12)", ok, t0)


def test_criterion_05_g_axis():
    t0 = time.time()
    g = mcg.named("g")
    ok = True
    for n in range(4):
        ok &= mcg.apply(g, axes.gamma(M12, 2 * n), M12) == axes.gamma(M12, 2 * n + 2)
    _report(5, "g-axis (n <= 3)", ok, t0)


def test_criterion_06_invariance():
    # signed counts are defined on rays (oriented from infinity); loops are
    # unoriented vertices, so they get the unsigned invariance
    t0 = time.time()
    rng = random.Random(606)
    ok = True
    for _ in range(100):
        word, _name = random_mc_word(rng, M16, maxlen=3)
        x = random_code(rng, M16, maxlen=5, loop_prob=0.0, span=9)
        y = random_code(rng, M16, maxlen=5, loop_prob=0.0, span=9)
        gx, gy = mcg.apply(word, x, M16), mcg.apply(word, y, M16)
        ok &= tight.signed_intersections(M16, gx, gy) == tight.signed_intersections(
            M16, x, y
        )
        xl = random_code(rng, M16, maxlen=5, loop_prob=1.0, span=9)
        gxl = mcg.apply(word, xl, M16)
        ok &= tight.geometric_intersection(M16, gxl, gx) == tight.geometric_intersection(
            M16, xl, x
        )
    sigma = mcg.named("sigma")
    for _ in range(50):
        x = random_code(rng, M16, maxlen=5, span=9)
        y = random_code(rng, M16, maxlen=5, span=9)
        sx, sy = mcg.apply(sigma, x, M16), mcg.apply(sigma, y, M16)
        ok &= tight.positive_intersection(M16, sx, sy) == tight.positive_intersection(
            M16, y, x
        )
    _report(6, "invariance and mirror law", ok, t0)


def test_criterion_07_a_map():
    t0 = time.time()
    ok = all(axes.a_value(axes.alpha(M16, n)) == n for n in range(13))
    rng = random.Random(707)
    m8 = build_model(8)
    for _ in range(500):
        x, y = random_disjoint_pair(rng, m8, maxlen=6)
        ok &= abs(axes.a_value(x) - axes.a_value(y)) <= 1
    m10 = build_model(10)
    checked = 0
    while checked < 200:
        j = rng.randint(2, 4)
        beta = normalize(
            Code("S", axes.alpha_word(j) + random_word(rng, m10, 4, span=6),
                 rng.choice([5, 6, -5])),
            m10,
        )
        if axes.a_value(beta) < 2:
            continue
        gam = normalize(
            Code("S", random_word(rng, m10, 4, span=6), rng.choice([3, -3, 4])), m10
        )
        if axes.a_value(gam) > axes.a_value(beta) - 2:
            continue
        ok &= tight.positive_intersection(m10, gam, beta) >= 1
        checked += 1
    _report(7, "A-map properties", ok, t0)


def test_criterion_08_unicorn_suite():
    t0 = time.time()
    rng = random.Random(808)
    m5 = build_model(5)
    ok = True
    # disjoint pairs give the bare two-vertex path
    done = 0
    while done < 20:
        a = random_loop_vertex(rng, m5, maxlen=6)
        b = random_loop_vertex(rng, m5, maxlen=6)
        if a == b or not tight.are_disjoint(m5, a, b):
            continue
        ok &= unicorn.unicorn_path(m5, a, b).vertices == (a, b)
        done += 1
    # path property on 100 seeded pairs
    done = 0
    while done < 100:
        a = random_loop_vertex(rng, m5, maxlen=8)
        b = random_loop_vertex(rng, m5, maxlen=8)
        if a == b:
            continue
        path = unicorn.unicorn_path(m5, a, b)
        ok &= all(
            tight.are_disjoint(m5, path.vertices[i], path.vertices[i + 1])
            for i in range(len(path.vertices) - 1)
        )
        ok &= path.length <= tight.geometric_intersection(m5, a, b) + 1
        done += 1
    # slimness: 200 seeded triples
    done = 0
    while done < 200:
        a = random_loop_vertex(rng, m5, maxlen=8)
        b = random_loop_vertex(rng, m5, maxlen=8)
        d = random_loop_vertex(rng, m5, maxlen=8)
        if len({a, b, d}) < 3:
            continue
        ok &= unicorn.slim_gap(m5, a, b, d) <= 1
        done += 1
    # exhaustive short-word universe at window 3, plus seeded coverage of the
    # 4-letter universe (the full 4-letter triple space exceeds the budget)
    m3 = build_model(3)
    import itertools

    univ3 = [
        c
        for c in small_universe(m3, 3)
        if c.is_loop and c.word and tight.is_simple(m3, c) and tight.is_essential(m3, c)
    ]
    for a, b, d in itertools.combinations(univ3, 3):
        ok &= unicorn.slim_gap(m3, a, b, d) <= 1
    univ4 = [
        c
        for c in small_universe(m3, 4)
        if c.is_loop and c.word and tight.is_simple(m3, c) and tight.is_essential(m3, c)
    ]
    for _ in range(300):
        a, b, d = rng.sample(univ4, 3)
        ok &= unicorn.slim_gap(m3, a, b, d) <= 1
    # subpath dichotomy on 100 seeded (i, j)
    done = 0
    while done < 100:
        a = random_loop_vertex(rng, m5, maxlen=8)
        b = random_loop_vertex(rng, m5, maxlen=8)
        if a == b:
            continue
        ln = unicorn.unicorn_path(m5, a, b).length
        i = rng.randint(0, ln)
        j = rng.randint(i, ln)
        ok &= unicorn.subpath_dichotomy_check(m5, a, b, i, j)
        done += 1
    _report(8, "unicorn suite", ok, t0)


def test_criterion_09_oracle_equivalence():
    t0 = time.time()
    report = exp_oracle(M16, n=200, seed=909, max_sum=4)
    ok = report.passed
    # seeded mid-size pairs at the exhaustive window
    rng = random.Random(910)
    m3 = build_model(3)
    done = 0
    while done < 400:
        x = random_code(rng, m3, maxlen=5, loop_prob=0.3)
        y = random_code(rng, m3, maxlen=5, loop_prob=0.3)
        if len(x.word) + len(y.word) > 10:
            continue
        ok &= tight.geometric_intersection(m3, x, y) == tight.brute_min_crossings(
            m3, x, y
        )
        done += 1
    _report(9, "oracle equivalence", ok, t0)


def test_criterion_10_confluence():
    t0 = time.time()
    rng = random.Random(1010)
    m6 = build_model(6)
    ok = True
    for _ in range(1000):
        code = random_code(rng, m6, maxlen=6, loop_prob=0.3)
        start, word, end = code.start, list(code.word), code.end
        for _ in range(rng.randint(1, 6)):
            move = rng.choice(["dup", "head", "tail"])
            if move == "dup":
                i = rng.randint(0, len(word))
                seg = rng.choice(range(-6, 6))
                word[i:i] = [seg, seg]
            elif move == "head":
                word.insert(0, rng.choice(m6.segments_at_inf()))
                start = "N" if start == "S" else "S"
            else:
                adj = m6.segments_at_inf() if end is None else m6.segments_at_block(end)
                word.append(rng.choice(adj))
        ok &= canonicalize(Code(start, tuple(word), end), m6) == code
    _report(10, "normal-form confluence (1000 round trips)", ok, t0)


def test_criterion_11_non_reversibility():
    t0 = time.time()
    report = exp_nonrev(M16, n=500, imax=8, seed=1111)
    ok = report.passed
    # same-orientation true cases imply the 3C end bound
    amb = [quasi.axis_vertex(M16, k) for k in range(-6, 13)]
    index = {c: k - 6 for k, c in enumerate(amb)}
    for C in (1, 2):
        for shift in range(0, C + 1):
            g1 = amb[6 : 6 + 3 * C + 1]
            g2 = amb[6 + shift : 6 + shift + 3 * C + 1]
            same = quasi.same_orientation(M16, g1, g2, amb, C)
            ok &= same
            d_ends = abs(index[g1[-1]] - index[g2[-1]])
            ok &= d_ends <= 3 * C
    # and a descending instance comes out false
    g1 = amb[6:10]
    g2 = list(reversed(amb[3:7]))
    ok &= quasi.same_orientation(M16, g1, g2, amb, 1) is False
    _report(11, "non-reversibility ingredients", ok, t0)


def test_criterion_12_qi_falsification():
    t0 = time.time()
    path = axes.axis_path(M16, 10)
    ok = True
    for n in range(11):
        rep = unicorn.qi_consistency(M16, path[0], path[n], path[: n + 1])
        ok &= rep.holds
    _report(12, "qi falsification (distance <= 10)", ok, t0)
