"""Named invariant batteries behind ``nnlab verify``.

Each check returns a :class:`CheckResult`; a suite is a list of checks.
Output is deterministic: no timings, and every sweep runs in canonical order.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from . import analysis, excite, naruse, oracle, shapes, staircase, tables
from .exact import det_exact, interpolate


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _result(name, failures, checked):
    if failures:
        shown = "; ".join(failures[:3])
        more = f" (+{len(failures) - 3} more)" if len(failures) > 3 else ""
        return CheckResult(name, False, f"{len(failures)}/{checked} failed: {shown}{more}")
    return CheckResult(name, True, f"{checked} cases")


def _subsets(n):
    return tables.canonical_subsets(n)


# -- shapes / excite -------------------------------------------------------


def check_round_trip(n=9):
    fails = []
    for I in _subsets(n):
        if shapes.skew_to_descent(shapes.descent_to_skew(I)).elements != I:
            fails.append(str(I))
    return _result(f"descent/ribbon round trip, I in [{n}]", fails, 2**n - 1)


def check_ribbon_geometry(n=8):
    fails = []
    for I in _subsets(n):
        sh = shapes.descent_to_skew(I)
        lam, mu = sh.outer, sh.inner
        ok = (
            lam.part(1) == lam.part(2)
            and mu.part(1) == lam.part(1) - 1
            and sh.size == max(I) + 1
            and shapes.ribbon_of(lam) == set(sh.cells())
        )
        if not ok:
            fails.append(str(I))
    return _result(f"ribbon geometry and ribbon_of, I in [{n}]", fails, 2**n - 1)


def check_phi_appends_part(n=7):
    fails = []
    for I in _subsets(n):
        a = shapes.descent_to_skew(shapes.phi(I)).outer.parts
        b = shapes.descent_to_skew(I).outer.parts
        if a != b + (1,):
            fails.append(str(I))
    return _result(f"phi appends a part 1, I in [{n}]", fails, 2**n - 1)


def check_excited_prefix(n=8):
    fails = []
    for I in _subsets(n):
        for d in excite.enumerate_excited(shapes.descent_to_skew(I)):
            cols = sorted(c.col for c in d.first_row())
            if cols != list(range(1, len(cols) + 1)):
                fails.append(f"{I}:{d}")
    return _result(f"first-row cells form a prefix, I in [{n}]", fails, 2**n - 1)


def check_excited_oracle(n=7):
    fails = []
    for I in _subsets(n):
        sh = shapes.descent_to_skew(I)
        if excite.enumerate_excited(sh) != oracle.brute_excited(sh):
            fails.append(str(I))
    return _result(f"excited diagrams = brute-force closure, I in [{n}]", fails, 2**n - 1)


# -- criterion 1 ------------------------------------------------------------


def check_appendix(max_elem=7):
    produced = tables.appendix_csv(max_elem)
    golden = tables.golden_appendix_csv()
    rows = tables.parse_appendix_csv(produced)
    gold_rows = tables.parse_appendix_csv(golden)
    fails = [tables.format_set(I) for I in gold_rows if rows.get(I) != gold_rows[I]]
    if produced != golden and not fails:
        fails.append("byte mismatch")
    return _result("coefficient table equals the golden copy", fails, len(gold_rows))


# -- criterion 2 ------------------------------------------------------------


def check_naruse_example():
    sh = shapes.SkewShape((3, 3, 2, 1), (2, 1))
    count = naruse.skew_syt_count(sh)
    nd = len(excite.enumerate_excited(sh))
    fails = [] if (count, nd) == (61, 5) else [f"f={count}, |E|={nd}"]
    return _result("(3,3,2,1)/(2,1): 61 tableaux, 5 excited diagrams", fails, 1)


# -- criterion 3 ------------------------------------------------------------


def check_descent_oracle(n_set=6, n_max=8):
    fails, checked = [], 0
    for I in _subsets(n_set):
        for n in range(max(I) + 1, n_max + 1):
            checked += 1
            if naruse.descent_poly_eval(I, n) != oracle.brute_descent_count(I, n):
                fails.append(f"{I},n={n}")
    return _result(f"d_I(n) = permutation count, I in [{n_set}], n <= {n_max}", fails, checked)


def check_skew_oracle(n_set=6):
    fails = []
    for I in _subsets(n_set):
        sh = shapes.descent_to_skew(I)
        if naruse.skew_syt_count(sh) != oracle.brute_skew_syt(sh):
            fails.append(str(I))
    return _result(f"Naruse count = brute-force fillings, ribbons from I in [{n_set}]", fails, 2**n_set - 1)


def _partitions(n, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def check_straight_oracle(max_cells=8):
    fails, checked = [], 0
    for size in range(1, max_cells + 1):
        for lam in _partitions(size):
            checked += 1
            if naruse.skew_syt_count((lam, ())) != oracle.brute_skew_syt((lam, ())) or naruse.syt_count(
                lam
            ) != oracle.brute_skew_syt((lam, ())):
                fails.append(str(lam))
    return _result(f"hook length formula = brute force, |lambda| <= {max_cells}", fails, checked)


# -- criterion 4 ------------------------------------------------------------


def check_cross_algorithm(n=8):
    fails = []
    for I in _subsets(n):
        if naruse.nn_coefficients(I) != naruse.nn_coefficients_newton(I):
            fails.append(str(I))
    return _result(f"class sums = Newton expansion, I in [{n}]", fails, 2**n - 1)


def check_degree_and_value(n=8):
    fails = []
    for I in _subsets(n):
        ds = shapes.DescentSet(I)
        ef = naruse.excitation_factor(ds)
        C = naruse.nn_coefficients(ds)
        if ef.poly.degree != ds.s or any(c < 1 for c in C):
            fails.append(str(I))
    return _result(f"excitation factor degree s, coefficients positive, I in [{n}]", fails, 2**n - 1)


# -- criterion 5 ------------------------------------------------------------


def check_weak_chain(n=8):
    fails = []
    for I in _subsets(n):
        norm = analysis.factorial_chain_profile(I).normalized
        if any(x < y for x, y in zip(norm, norm[1:])):
            fails.append(str(I))
    return _result(f"C_i/i! weakly decreasing, I in [{n}]", fails, 2**n - 1)


def check_height_two_plateau(n=8):
    fails, checked = [], 0
    for I in _subsets(n):
        C = naruse.nn_coefficients(I)
        s = C.s
        for i in analysis.height_two_plateau_indices(I):
            checked += 1
            if any(C[j] != factorial(j) * C[0] for j in range(s - i + 2)):
                fails.append(f"{I},i={i}")
    return _result(f"plateau when lambda'_(i+1) = lambda'_(s+1) = 2, I in [{n}]", fails, checked)


def check_plateau_at_w(n=8):
    fails = []
    for I in _subsets(n):
        prof = analysis.factorial_chain_profile(I)
        s = len(prof.normalized) - 1
        if prof.plateau_end != min(shapes.w_index(I), s) or not prof.strict_after:
            fails.append(str(I))
    return _result(f"plateau ends at min(w, s), strict after, I in [{n}]", fails, 2**n - 1)


def check_min_ratio_iff(n=8):
    fails, checked = [], 0
    for I in _subsets(n):
        s = shapes.DescentSet(I).s
        w = shapes.w_index(I)
        for b in range(1, s + 1):
            for a in range(b):
                checked += 1
                if analysis.min_ratio_attained(I, a, b) != (w >= b):
                    fails.append(f"{I},a={a},b={b}")
    return _result(f"C_a/C_b = a!/b! iff w >= b, I in [{n}]", fails, checked)


def check_shallow_iff_full_plateau(n=8):
    fails = []
    for I in _subsets(n):
        prof = analysis.factorial_chain_profile(I)
        full = prof.plateau_end == len(prof.normalized) - 1
        if full != (not shapes.is_deep(I)):
            fails.append(str(I))
    return _result(f"full plateau iff shallow, I in [{n}]", fails, 2**n - 1)


# -- criterion 6 ------------------------------------------------------------


def check_shift_decrease(n=7):
    fails, checked = [], 0
    for I in _subsets(n):
        if not shapes.is_deep(I):
            continue
        s = shapes.DescentSet(I).s
        w = shapes.w_index(I)
        for b in range(w + 1, s + 1):
            for a in range(b):
                checked += 1
                if not analysis.shift_monotonic_check(I, a, b):
                    fails.append(f"{I},a={a},b={b}")
    return _result(f"shift strictly lowers C_a/C_b for deep I in [{n}]", fails, checked)


# -- criterion 7 ------------------------------------------------------------


def check_phi_convergence_example(N=8):
    seq = analysis.phi_sequence((3, 5), 1, 2, N)
    v = seq.values
    ok = (
        v[:2] == (Fraction(32, 24), Fraction(37, 27))
        and seq.target == Fraction(5, 3)
        and all(x < y for x, y in zip(v, v[1:]))
        and v[-1] < seq.target
    )
    return _result("phi-iterates of {3,5} rise strictly toward 5/3", [] if ok else [str(v)], 1)


def check_phi_divergence(N=20):
    v = analysis.phi_sequence((2, 3), 0, 1, N).values
    fails = []
    if not all(x < y for x, y in zip(v, v[1:])):
        fails.append("not strictly increasing")
    # Bound B must be passed within 2B + 2 iterations.
    for bound in range(1, N // 2):
        if not any(x > bound for x in v[: 2 * bound + 2]):
            fails.append(f"bound {bound} not exceeded")
    return _result(f"phi-iterates of {{2,3}} diverge (checked to {N})", fails, N)


def check_phi_battery(max_elem=6, N=6):
    fails, checked = [], 0
    for I in _subsets(max_elem):
        sh = shapes.descent_to_skew(I)
        lam1 = sh.outer.part(1)
        if lam1 > 2:
            s = lam1 - 1
            for b in range(1, s):
                for a in range(b):
                    checked += 1
                    seq = analysis.phi_sequence(I, a, b, N)
                    v, t = seq.values, seq.target
                    if v[0] == t:
                        ok = all(x == t for x in v)
                    elif v[0] < t:
                        ok = all(x < y for x, y in zip(v, v[1:])) and v[-1] < t
                    else:
                        ok = all(x > y for x, y in zip(v, v[1:])) and v[-1] > t
                    if not ok:
                        fails.append(f"{I},a={a},b={b}")
        elif lam1 == 2 and len(sh.inner) >= 2:
            checked += 1
            v = analysis.phi_sequence(I, 0, 1, N).values
            if not all(x < y for x, y in zip(v, v[1:])):
                fails.append(f"{I} (divergent branch)")
    return _result(f"phi-sequences monotone toward the psi target, max(I) <= {max_elem}", fails, checked)


def check_t0_construct(limit=4):
    fails, checked = [], 0
    for m in range(1, limit + 1):
        for n in range(1, limit + 1):
            r = Fraction(m, n)
            checked += 1
            C = naruse.nn_coefficients(analysis.t0_construct(r))
            if Fraction(C[-2], C[-1]) != r:
                fails.append(str(r))
    return _result(f"t0 construction attains m/n for m, n <= {limit}", fails, checked)


# -- criterion 8 ------------------------------------------------------------


def check_doubleton_shape(b_max=11):
    fails, checked = [], 0
    for b in range(2, b_max + 1):
        for a in range(1, b):
            checked += 1
            C = naruse.nn_coefficients((a, b)).values
            if analysis.observed_relations(C) != analysis.expected_doubleton_relations(a, b):
                fails.append(f"{{{a},{b}}}")
    return _result(f"doubleton inequality shape with equality cases, b <= {b_max}", fails, checked)


def check_doubleton_unimodal(n_max=12):
    fails, checked = [], 0
    for n in range(4, n_max + 1):
        survey = analysis.doubleton_survey(n)
        predicted = tuple((a, b) for a in range(1, n) for b in range(a + 1, n + 1) if a in (1, 2) or (a, b) == (3, 4))
        checked += 1
        if tuple(sorted(survey.unimodal_sets)) != tuple(sorted(predicted)):
            fails.append(f"n={n} classification")
        if len(survey.unimodal_sets) != 2 * n - 2 or survey.unimodal_probability != Fraction(4, n):
            fails.append(f"n={n} probability {survey.unimodal_probability}")
    return _result(f"unimodal doubletons and probability 4/n, 4 <= n <= {n_max}", fails, checked)


def check_doubleton_log_concave(n_max=12):
    lc = analysis.doubleton_survey(n_max).log_concave_sets
    expected = ((1, 2), (1, 3), (2, 3), (2, 4))
    fails = [] if lc == expected else [str(lc)]
    return _result(f"exactly four log-concave doubletons in [{n_max}]", fails, 1)


def check_doubleton_closed_forms(b_max=11):
    fails, checked = [], 0
    for b in range(2, b_max + 1):
        for a in range(1, b):
            checked += 1
            C = naruse.nn_coefficients((a, b)).values
            cf = analysis.doubleton_closed_forms(a, b)
            k = cf["k"]
            at_k = C[k] if k < len(C) else 0
            if (C[k - 1], at_k) != (cf["C_k_minus_1"], cf["C_k"]):
                fails.append(f"{{{a},{b}}}")
            if a >= 2:
                tail = analysis.doubleton_tail_closed_forms(a, b)
                if (C[-2], C[-1]) != (tail["C_s_minus_1"], tail["C_s"]):
                    fails.append(f"{{{a},{b}}} tail")
    return _result(f"doubleton closed forms match, b <= {b_max}", fails, checked)


# -- criterion 9 ------------------------------------------------------------

REFERENCE_ROWS = {
    1: (1, 1),
    2: (6, 6, 3),
    3: (255, 255, 135, 45),
    4: (97650, 97650, 51975, 18900, 4725),
}


def check_triangle(B=6):
    T = staircase.triangle(B)
    fails = []
    for b in range(B + 1):
        if T[b] != naruse.nn_coefficients(shapes.staircase(b)).values:
            fails.append(f"row {b} vs direct")
    for b, row in REFERENCE_ROWS.items():
        if T[b] != row:
            fails.append(f"row {b} vs reference")
    return _result(f"triangle rows 0..{B} = direct coefficients", fails, B + 1)


def check_triangle_monotone(B=6):
    T = staircase.triangle(B)
    fails = []
    for b in range(1, B + 1):
        row = T[b]
        if row[0] != row[1] or any(x <= y for x, y in zip(row[1:], row[2:])):
            fails.append(f"row {b}")
    return _result(f"C_0 = C_1 > C_2 > ... on rows 1..{B}", fails, B)


def check_ratio_polynomials(k_max=4, extra=4):
    T = staircase.triangle(k_max + extra)
    fails, checked = [], 0
    for k in range(k_max + 1):
        P = staircase.fit_ratio_poly(k).poly
        if P.degree > k:
            fails.append(f"deg P_{k} = {P.degree}")
        for a in range(k, k + extra + 1):
            checked += 1
            if P(a) != Fraction(T[a][a - k], T[a][a]):
                fails.append(f"P_{k}({a})")
    return _result(f"P_k(a) = C_(a-k)/C_a for k <= {k_max}, a <= k+{extra}", fails, checked)


def check_det_identity(k_max=5):
    fails, checked = [], 0
    for k in range(1, k_max + 1):
        closed = staircase.det_tilde_closed_form(k)
        pts = [Fraction(j, 3) - 1 for j in range(k + 2)]
        vals = []
        for x in pts:
            checked += 1
            d = det_exact(staircase.tilde_matrix(k, x))
            vals.append((x, d))
            if abs(d) != abs(closed(x)):
                fails.append(f"k={k},x={x}")
        p = interpolate(vals)
        roots = staircase.closed_form_roots(k)
        if p.degree != k or any(p(r) != 0 for r in roots) or len(set(roots)) != k:
            fails.append(f"k={k} roots")
        at_k = abs(det_exact(staircase.tilde_matrix(k, k)))
        expected = factorial(k)
        for i in range(1, k + 1):
            expected *= abs(2 * i - 3 - 2 * k)
        if at_k != expected or at_k == 0:
            fails.append(f"k={k} system determinant")
    return _result(f"|det| matches closed form, root set (2i-3)/2, k <= {k_max}", fails, checked)


SUITES = {
    "shapes": [check_round_trip, check_ribbon_geometry, check_phi_appends_part],
    "excite": [check_excited_prefix, check_excited_oracle],
    "appendix": [check_appendix],
    "naruse-example": [check_naruse_example],
    "oracle": [check_descent_oracle, check_skew_oracle, check_straight_oracle],
    "cross": [check_cross_algorithm, check_degree_and_value],
    "ratio-bounds": [
        check_weak_chain,
        check_height_two_plateau,
        check_plateau_at_w,
        check_min_ratio_iff,
        check_shallow_iff_full_plateau,
    ],
    "shift": [check_shift_decrease],
    "phi": [check_phi_convergence_example, check_phi_divergence, check_phi_battery, check_t0_construct],
    "doubletons": [
        check_doubleton_shape,
        check_doubleton_unimodal,
        check_doubleton_log_concave,
        check_doubleton_closed_forms,
    ],
    "staircase": [check_triangle, check_triangle_monotone, check_ratio_polynomials, check_det_identity],
}


def suite_names():
    return sorted(SUITES) + ["all"]


def run_suite(name):
    if name == "all":
        return [chk() for key in SUITES for chk in SUITES[key]]
    return [chk() for chk in SUITES[name]]
