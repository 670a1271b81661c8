"""Acceptance criteria, one test each, every one printing a PASS/FAIL line.

Run ``pytest tests/test_acceptance.py -v`` or ``python tests/test_acceptance.py``.
Criteria 3 and 5 are known to fail as stated; see README.
"""

import math
import sys
import time
import warnings
from fractions import Fraction

import numpy as np
import pytest

from kissnum import bounds, cli, hyptrig, ribbon, systoles

GRID = np.geomspace(0.1, 30, 50)
L0 = 2 * math.asinh(1)


def _timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def c1_identities():
    def body():
        worst_collar = worst_double = 0.0
        for l in GRID:
            ch = math.cosh(l / 2)
            worst_collar = max(worst_collar, abs(math.cosh(2 * bounds.systolic_radius(l)) * (ch - 1) - ch) / ch)
            rhs = 1 / (2 * math.cosh(l / 4))
            worst_double = max(worst_double, abs(math.sinh(l / 4) / math.sinh(l / 2) - rhs) / rhs)
        return worst_collar, worst_double

    (a, b), dt = _timed(body)
    ok = a <= 1e-12 and b <= 1e-12 and dt < 1
    return ok, f"collar max rel {a:.2e}, double-angle max rel {b:.2e}, {dt:.3f}s"


def c2_pants_oracle():
    worst = max(abs(hyptrig.pants_adjacent_distance(l, l, l) - 2 * bounds.systolic_radius(l)) / (2 * bounds.systolic_radius(l))
                for l in GRID)
    return worst <= 1e-12, f"max rel {worst:.2e} over {len(GRID)} points"


def c3_inequalities():
    def body():
        cover_fail = eff_fail = 0
        eff_first = None
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", bounds.AreaBoundWarning)
            for l in np.linspace(L0, 30, 200):
                for g in range(2, 101):
                    q = bounds.BoundQuery(g, float(l))
                    cover_fail += not bounds.cover_count_bound(q) < 16 * (g - 1) * math.exp(l / 2)
                    if not bounds.composite_bound(q) <= bounds.effective_bound(q):
                        eff_fail += 1
                        eff_first = l if eff_first is None else min(eff_first, l)
        return cover_fail, eff_fail, eff_first

    (cover_fail, eff_fail, eff_first), dt = _timed(body)
    ok = cover_fail == 0 and eff_fail == 0 and dt < 5
    extra = f" (violations for l in [{L0:.4f}, ~2.9755])" if eff_fail else ""
    return ok, f"F bound violations {cover_fail}/19800, effective violations {eff_fail}/19800{extra}, {dt:.2f}s"


def c4_short_regime():
    bad = [(g, l) for g in range(2, 51) for l in (0.01, 0.5, 1.0, L0)
           if bounds.kissing_bound(bounds.BoundQuery(g, l)) != 3 * g - 3]
    return not bad, f"{len(bad)} mismatches over g=2..50"


def c5_k7_pipeline():
    def body():
        rs = ribbon.complete_graph_embedding(7)
        return systoles.count_qualifying(rs)

    r, dt = _timed(body)
    checks = {
        "genus": r.genus == 1 == math.ceil(4 * 3 / 12),
        "triangles": r.triangle_count == 35,
        "qualifying>=33": r.qualifying_count >= 33,
        "entries01": r.entries_in_01,
        "distinct": r.homology_distinct,
        "connected": r.connected,
        "time": dt < 10,
    }
    failed = [k for k, v in checks.items() if not v]
    return not failed, f"N={r.qualifying_count} (floor {r.formula_floor}), failed: {failed or 'none'}, {dt:.2f}s"


def c6_strong_count():
    exact = bounds.strong_count_lower_exact(2)
    bad = [g for g in range(2, 1001) if not bounds.strong_count_lower(g) > 6 * g**1.5]
    ok = exact == Fraction(98, 3) and not bad
    return ok, f"value at g=2 is {exact}, {len(bad)} failures on g=2..1000"


def c7_npod():
    def body():
        return [systoles.npod_systole_report(m) for m in (1, 2, 3)]

    reps, dt = _timed(body)
    ok = dt < 1 and all(
        r["genus"] == r["m"] and r["boundary_components"] == 1 and r["loop_count"] == 2 * r["m"] and r["all_pairs_cross_once"]
        for r in reps
    )
    return ok, f"m=1,2,3 genus {[r['genus'] for r in reps]}, loops {[r['loop_count'] for r in reps]}, {dt:.3f}s"


def _random_connected(rng, n):
    m = np.zeros((n, n), dtype=int)
    for k in range(1, n):
        j = int(rng.integers(k))
        m[k, j] = m[j, k] = 1
    extra = np.triu(rng.random((n, n)) < 2.0 / n, 1)
    m[extra] = 1
    return np.maximum(m, m.T)


def c8_equalization():
    def body():
        rng = np.random.default_rng(20261016)
        eps = 0.05
        failures = 0
        for _ in range(1000):
            n = int(rng.integers(1, 201))
            mat = _random_connected(rng, n)
            lengths = rng.uniform(3 - 6 * eps, 3, n)
            top = lengths.max()
            t = systoles.equalize_lengths(lengths, mat, eps)
            prev = lengths
            mono = True
            for s in t.steps:
                cur = np.asarray(s.lengths)
                mono &= bool((cur >= prev).all())
                prev = cur
            good = mono and len(t.steps) <= n - 1 and np.all(np.asarray(t.final) == top)
            failures += not good
        return failures

    failures, dt = _timed(body)
    return failures == 0 and dt < 30, f"{failures}/1000 instances failed, {dt:.2f}s"


def c9_determinism(tmp_dir):
    outs = []
    for k in range(2):
        path = f"{tmp_dir}/k7_{k}.json"
        rc = cli.main(["construct", "--n", "7", "--seed", "0", "--out", path])
        with open(path, "rb") as f:
            outs.append((rc, f.read()))
    ok = outs[0] == outs[1] and outs[0][0] == 0
    return ok, f"{len(outs[0][1])} bytes, identical={outs[0][1] == outs[1][1]}"


CRITERIA = [
    ("1 identity suite", c1_identities),
    ("2 pants oracle", c2_pants_oracle),
    ("3 cover and effective inequalities", c3_inequalities),
    ("4 short-systole regime", c4_short_regime),
    ("5 K_7 pipeline", c5_k7_pipeline),
    ("6 strong-count formula", c6_strong_count),
    ("7 n-pod suite", c7_npod),
    ("8 equalization property", c8_equalization),
    ("9 determinism", c9_determinism),
]


def _line(name, ok, detail):
    return f"{'PASS' if ok else 'FAIL'} [{name}] {detail}"


@pytest.mark.parametrize("name, fn", CRITERIA, ids=[c[0].split()[0] for c in CRITERIA])
def test_criterion(name, fn, capsys, tmp_path):
    ok, detail = fn(tmp_path) if fn is c9_determinism else fn()
    with capsys.disabled():
        print("\n" + _line(name, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    import tempfile

    all_ok = True
    with tempfile.TemporaryDirectory() as tmp:
        for name, fn in CRITERIA:
            ok, detail = fn(tmp) if fn is c9_determinism else fn()
            all_ok &= ok
            print(_line(name, ok, detail))
    sys.exit(0 if all_ok else 1)
