"""Acceptance criteria 1-10.

Each test prints one PASS/FAIL line with its measured runtime and limit.
The lines are also repeated in the pytest terminal summary. Run directly
with ``python tests/test_acceptance.py`` for the lines alone.
"""

import subprocess
import sys
import time
from fractions import Fraction

from nnlab import analysis, excite, naruse, oracle, shapes, tables, verify

REPORT = []


def _report(number, title, checks, elapsed, limit):
    ok = all(c.passed for c in checks) and elapsed < limit
    detail = "; ".join(f"{c.name}: {c.detail}" for c in checks if not c.passed)
    line = f"{'PASS' if ok else 'FAIL'}  criterion {number:>2}  {title}  [{elapsed:.2f}s < {limit}s]"
    if detail:
        line += f"  ({detail})"
    print(line)
    REPORT.append(line)
    return ok


def _timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def _check(name, passed, detail=""):
    return verify.CheckResult(name, passed, detail)


def test_criterion_01_appendix():
    def run():
        produced = tables.appendix_csv(7)
        golden = tables.golden_appendix_csv()
        rows = tables.parse_appendix_csv(produced)
        return [
            _check("row count", len(rows) == 127, str(len(rows))),
            _check("bytes equal golden", produced == golden),
            _check("{6,7}", rows[(6, 7)][1] == (4320, 3600, 5760, 12960, 34560, 86400)),
        ]

    checks, dt = _timed(run)
    assert _report(1, "appendix table, 127 rows bit-exact", checks, dt, 30)


def test_criterion_02_naruse_example():
    def run():
        sh = ((3, 3, 2, 1), (2, 1))
        return [
            _check("61 tableaux", naruse.skew_syt_count(sh) == 61),
            _check("5 excited diagrams", len(excite.enumerate_excited(sh)) == 5),
        ]

    checks, dt = _timed(run)
    assert _report(2, "(3,3,2,1)/(2,1): 61 tableaux, 5 excited diagrams", checks, dt, 1)


def test_criterion_03_oracles():
    def run():
        bad_d, bad_s, n_d = [], [], 0
        for I in tables.canonical_subsets(6):
            for n in range(max(I) + 1, 9):
                n_d += 1
                if naruse.descent_poly_eval(I, n) != oracle.brute_descent_count(I, n):
                    bad_d.append((I, n))
            sh = shapes.descent_to_skew(I)
            if naruse.skew_syt_count(sh) != oracle.brute_skew_syt(sh):
                bad_s.append(I)
        return [
            _check(f"d_I(n) vs permutations ({n_d} cases)", not bad_d, str(bad_d[:3])),
            _check("ribbon tableaux vs backtracking (63 shapes)", not bad_s, str(bad_s[:3])),
        ]

    checks, dt = _timed(run)
    assert _report(3, "oracle equivalence, I in [6], n <= 8", checks, dt, 300)


def test_criterion_04_cross_algorithm():
    checks, dt = _timed(lambda: [verify.check_cross_algorithm(8)])
    assert _report(4, "class sums = Newton expansion, I in [8]", checks, dt, 120)


def test_criterion_05_ratio_bounds():
    checks, dt = _timed(
        lambda: [
            verify.check_weak_chain(8),
            verify.check_height_two_plateau(8),
            verify.check_plateau_at_w(8),
            verify.check_min_ratio_iff(8),
            verify.check_shallow_iff_full_plateau(8),
        ]
    )
    assert _report(5, "weak chain, plateau, w-threshold, shallow iff, I in [8]", checks, dt, 180)


def test_criterion_06_shift():
    checks, dt = _timed(lambda: [verify.check_shift_decrease(7)])
    assert _report(6, "shift strictly lowers ratios, deep I in [7]", checks, dt, 120)


def test_criterion_07_phi_and_t0():
    def run():
        seq = analysis.phi_sequence((3, 5), 1, 2, 6)
        head = seq.values[:2] == (Fraction(32, 24), Fraction(37, 27))
        rising = all(x < y < seq.target for x, y in zip(seq.values, seq.values[1:]))
        target = seq.target == Fraction(5, 3) == analysis.ratio(shapes.psi((3, 5)), 1, 2)
        return [
            _check("{3,5} sequence rises toward 5/3", head and rising and target, str(seq.values)),
            verify.check_phi_divergence(20),
            verify.check_t0_construct(4),
        ]

    checks, dt = _timed(run)
    assert _report(7, "phi evidence and t0 construction", checks, dt, 120)


def test_criterion_08_doubletons():
    checks, dt = _timed(
        lambda: [
            verify.check_doubleton_shape(11),
            verify.check_doubleton_unimodal(12),
            verify.check_doubleton_log_concave(12),
            verify.check_doubleton_closed_forms(11),
        ]
    )
    assert _report(8, "doubleton shape, unimodality 4/n, log-concavity, closed forms", checks, dt, 180)


def test_criterion_09_staircase():
    checks, dt = _timed(
        lambda: [
            verify.check_triangle(6),
            verify.check_triangle_monotone(6),
            verify.check_ratio_polynomials(4, 4),
            verify.check_det_identity(5),
        ]
    )
    assert _report(9, "staircase triangle, ratio polynomials, determinant identity", checks, dt, 120)


def _full_run():
    out = []
    for argv in (["verify", "all", "--format", "json"], ["appendix", "--max", "7", "--format", "csv"]):
        proc = subprocess.run([sys.executable, "-m", "nnlab", *argv], capture_output=True, check=False)
        out.append((proc.returncode, proc.stdout, proc.stderr))
    return out


def test_criterion_10_determinism():
    def run():
        first, second = _full_run(), _full_run()
        return [
            _check("full suite green", all(code == 0 for code, _, _ in first)),
            _check("byte-identical across runs", first == second),
        ]

    checks, dt = _timed(run)
    assert _report(10, "two full-suite runs byte-identical", checks, dt, 600)


if __name__ == "__main__":
    ok = True
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                ok = False
    sys.exit(0 if ok else 1)
