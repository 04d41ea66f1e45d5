"""Acceptance gate: one test and one summary line per criterion.

Run ``pytest tests/test_acceptance.py -v`` (lines appear in the terminal
summary) or ``python3 tests/test_acceptance.py`` (lines go to stdout).
Values are checked exactly as stated, including the two reference values
that exact computation contradicts; those criteria fail by design.
"""

import itertools
import math
import random
import time

import conftest
import oracle
from wronsk import linalg
from wronsk.characterization import characterize_laurent, characterize_poly, synthesize_laurent, synthesize_poly
from wronsk.errors import NotConstantWronskianError
from wronsk.geometry import hyperplane_containment, invariant_numerator, is_affine_rnc
from wronsk.laurent import LaurentPoly
from wronsk.parser import parse_curve, parse_laurent as P
from wronsk.rational import check_n2_impossibility, independent
from wronsk.reduction import coefficient_matrix, reduce_both, reduce_distinct_max, reduce_distinct_min
from wronsk.search import SearchConfig, conjecture_search, random_family, trial_rng
from wronsk.wronskian import WronskianTag, classify, superfactorial, vandermonde, wronskian


def record(k: int, ok: bool, detail: str, elapsed: float) -> None:
    line = f"criterion {k}: {'PASS' if ok else 'FAIL'} ({elapsed:.1f}s) {detail}"
    conftest.ACCEPTANCE_LINES[k] = line
    print(line)
    assert ok, line


def fam(*texts):
    return [P(s) for s in texts]


def nonsingular(rng, n, bound=9):
    while True:
        A = [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)]
        if linalg.det(A) != 0:
            return A


def exponent_vector(rng, n, bound=12):
    while True:
        rs = rng.sample(range(-bound, bound + 1), n - 1)
        last = math.comb(n, 2) - sum(rs)
        if abs(last) <= bound and last not in rs:
            return rs + [last]


# -- 1 -----------------------------------------------------------------------


def test_criterion_1_reference_values():
    start = time.perf_counter()
    mixed = fam("t^2 - 1 + t^-1", "t^2 + t - t^-2", "t + t^-2")
    curve = parse_curve("t^3; t^3+t^2; t^2-2")
    h = hyperplane_containment(curve)
    checks = {
        "W(t^2+t, 2t^2, t-2) = -8": wronskian(fam("t^2+t", "2t^2", "t-2")) == -8,
        "W(t^6, t^-1, t^-2) = -56": wronskian(fam("t^6", "t^-1", "t^-2")) == -56,
        "W(mixed Laurent family) = 2 - 3t^-1 - 12t^-2 - 8t^-3 + 6t^-5":
            wronskian(mixed) == P("2 - 3t^-1 - 12t^-2 - 8t^-3 + 6t^-5"),
        "mixed Laurent family max degrees (2,1,0)": reduce_distinct_max(mixed).max_degrees == (2, 1, 0),
        "mixed Laurent family min degrees (-1,1,-2)": reduce_distinct_min(mixed).min_degrees == (-1, 1, -2),
        "W(t^3, t^3+t^2, t^2-2) = 12t^2": wronskian(list(curve)) == P("12t^2"),
        "W(t, t^2-t, t^2+1) = -2": wronskian(fam("t", "t^2-t", "t^2+1")) == -2,
        "W(t^2, t^4-t^2, t^4+1) = 16t^3": wronskian(fam("t^2", "t^4-t^2", "t^4+1")) == P("16t^3"),
        "hyperplane x - y + z + 2 = 0":
            h is not None and h.equation() == "x - y + z + 2 = 0" and h.evaluate(curve) == 0,
    }
    elapsed = time.perf_counter() - start
    failed = [name for name, ok in checks.items() if not ok]
    detail = f"{len(checks) - len(failed)}/{len(checks)} exact matches"
    if failed:
        detail += "; mismatched: " + ", ".join(failed)
    record(1, not failed and elapsed < 1, detail, elapsed)


# -- 2 -----------------------------------------------------------------------


def test_criterion_2_polynomial_round_trip():
    start = time.perf_counter()
    rng = random.Random(20002)
    bad = 0
    for _ in range(500):
        n = rng.randint(2, 6)
        A = nonsingular(rng, n)
        fs = synthesize_poly(A)
        k = classify(fs)
        ok = k.tag is WronskianTag.NONZERO_CONSTANT and k.value == linalg.det(A) * superfactorial(n)
        ch = characterize_poly(fs)
        ok = ok and synthesize_poly(ch.matrixA) == fs
        bad += not ok
    elapsed = time.perf_counter() - start
    record(2, bad == 0 and elapsed < 30, f"500 families, {bad} mismatches", elapsed)


# -- 3 -----------------------------------------------------------------------


def test_criterion_3_laurent_round_trip():
    start = time.perf_counter()
    rng = random.Random(30003)
    bad = 0
    for _ in range(500):
        n = rng.randint(2, 5)
        rs = exponent_vector(rng, n)
        A = nonsingular(rng, n)
        fs = synthesize_laurent(A, rs)
        k = classify(fs)
        ok = k.tag is WronskianTag.NONZERO_CONSTANT and k.value == linalg.det(A) * vandermonde(rs)
        ch = characterize_laurent(fs)
        ok = ok and synthesize_laurent(ch.matrixA, ch.exponents) == fs
        bad += not ok
    # brute force: the Wronskian of three monomials computed independently by sympy
    exhaustive_bad = 0
    for triple in itertools.combinations(range(-3, 5), 3):
        fs = [LaurentPoly.monomial(a) for a in triple]
        w = oracle.wronskian(fs)
        brute = w != 0 and w.is_constant()
        try:
            characterize_laurent(fs)
            ours = True
        except NotConstantWronskianError:
            ours = False
        exhaustive_bad += not (ours == brute == (sum(triple) == 3))
    elapsed = time.perf_counter() - start
    record(3, bad == 0 and exhaustive_bad == 0 and elapsed < 60,
           f"500 (A, r) pairs, {bad} mismatches; 56 monomial triples, {exhaustive_bad} mismatches",
           elapsed)


# -- 4 -----------------------------------------------------------------------


def distinct_degree_family(rng, n):
    """Laurent family with pairwise distinct max degrees and distinct min degrees."""
    while True:
        d = rng.sample(range(-4, 9), n)
        e = rng.sample(range(-8, 5), n)
        if any(ei > di for ei, di in zip(e, d)):
            continue
        fs = []
        for di, ei in zip(d, e):
            terms = {e2: rng.randint(-5, 5) for e2 in range(ei, di + 1) if rng.random() < 0.4}
            terms[di] = rng.choice([-3, -2, -1, 1, 2, 3])
            terms[ei] = rng.choice([-3, -2, -1, 1, 2, 3])
            fs.append(LaurentPoly(terms))
        return fs, d, e


def test_criterion_4_degree_formulas():
    start = time.perf_counter()
    rng = random.Random(40004)
    bad = 0
    for _ in range(500):
        n = rng.randint(2, 5)
        fs, d, e = distinct_degree_family(rng, n)
        w = wronskian(fs)
        c = math.comb(n, 2)
        ok = w.degree_max == sum(d) - c and w.degree_min == sum(e) - c
        ok = ok and w.coeff(w.degree_max) == vandermonde(d) * math.prod(f.coeff(f.degree_max) for f in fs)
        ok = ok and w.coeff(w.degree_min) == vandermonde(e) * math.prod(f.coeff(f.degree_min) for f in fs)
        bad += not ok
    elapsed = time.perf_counter() - start
    record(4, bad == 0, f"500 families, {bad} mismatches", elapsed)


# -- 5 -----------------------------------------------------------------------


def spans_contained(xs, ys) -> bool:
    """Every member of xs is an exact rational combination of ys."""
    exps = sorted({e for f in list(xs) + list(ys) for e in f.exponents()})
    Y, _ = coefficient_matrix(ys, exps)
    cols = [list(col) for col in zip(*Y)]  # exponent rows, one column per y
    for x in xs:
        rhs = [x.coeff(e) for e in exps]
        if linalg.solve(cols, rhs) is None:
            return False
    return True


def reduction_family(rng, i):
    n = rng.randint(2, 5)
    if i % 2:
        # a nonzero-constant family, polynomial or Laurent
        A = nonsingular(rng, n, 4)
        if i % 4 == 1:
            return synthesize_poly(A), True
        return synthesize_laurent(A, exponent_vector(rng, n, 6)), False
    while True:
        fs = [LaurentPoly({e: rng.randint(-4, 4) for e in rng.sample(range(-3, 5), 3)})
              for _ in range(n)]
        if classify(fs).tag is not WronskianTag.IDENTICALLY_ZERO:
            return fs, all(f.degree_min >= 0 for f in fs)


def test_criterion_5_reduction():
    start = time.perf_counter()
    rng = random.Random(50005)
    bad = constants = 0
    for i in range(500):
        fs, polynomial = reduction_family(rng, i)
        w = wronskian(fs)
        both = reduce_both(fs)
        ok = True
        for out in (both.max, both.min):
            ok &= out.sign * wronskian(out.reduced) == wronskian(fs if out is both.max else both.max.reduced)
        ok &= wronskian(both.min.reduced) == both.max.sign * both.min.sign * w
        ok &= spans_contained(both.min.reduced, fs) and spans_contained(fs, both.min.reduced)
        ok &= len(set(both.d)) == len(fs) and len(set(both.e)) == len(fs)
        if classify(fs).tag is WronskianTag.NONZERO_CONSTANT:
            constants += 1
            n = len(fs)
            ok &= sorted(both.d) == sorted(both.e) and sum(both.d) == math.comb(n, 2)
            if polynomial:
                ok &= sorted(both.d) == list(range(n))
        bad += not ok
    elapsed = time.perf_counter() - start
    record(5, bad == 0 and constants >= 250,
           f"500 families ({constants} constant), {bad} failures", elapsed)


# -- 6 -----------------------------------------------------------------------


def test_criterion_6_two_function_impossibility():
    start = time.perf_counter()
    cfg = SearchConfig()
    constant = literal_mismatch = exact_mismatch = 0
    example = None
    for i in range(10_000):
        f, g = random_family(trial_rng(60006, i), 2, cfg)
        v = check_n2_impossibility(f, g)
        constant += v.klass.tag is WronskianTag.NONZERO_CONSTANT
        w = v.witness
        if w.cross_term_orders != w.observed_orders:
            literal_mismatch += 1
            example = example or (str(f), str(g), w.cross_term_orders, w.observed_orders)
        exact_mismatch += w.predicted_orders != w.observed_orders
    elapsed = time.perf_counter() - start
    detail = (f"10000 pairs, {constant} NonzeroConstant; (K+1, L1+1) differs from the reduced "
              f"denominator orders at (0, beta1) "
              f"in {literal_mismatch} pairs; local-valuation orders differ in "
              f"{exact_mismatch}")
    if example:
        detail += f"; e.g. W({example[0]}, {example[1]}): expected {example[2]}, got {example[3]}"
    record(6, constant == 0 and literal_mismatch == 0 and elapsed < 120, detail, elapsed)


# -- 7 -----------------------------------------------------------------------


def test_criterion_7_search_smoke_run():
    start = time.perf_counter()
    cfg = SearchConfig(trials=10_000)
    first = conjecture_search(3, cfg, seed=42, workers=1)
    second = conjecture_search(3, cfg, seed=42, workers=2)
    elapsed = time.perf_counter() - start
    identical = first.to_json() == second.to_json()
    record(7, identical and first.counterexamples == [] and elapsed < 300,
           f"2 x 10000 trials (1 and 2 workers), identical={identical}, "
           f"counterexamples={len(first.counterexamples)}, classes={first.class_counts}", elapsed)


# -- 8 -----------------------------------------------------------------------


def random_curve(rng, n):
    degree = rng.randint(1, n + 1)
    return [LaurentPoly({e: rng.randint(-3, 3) for e in rng.sample(range(0, degree + 1), min(3, degree + 1))})
            for _ in range(n)]


def affine_rnc_image(rng, n):
    M = nonsingular(rng, n, 5)
    b = [rng.randint(-5, 5) for _ in range(n)]
    return [LaurentPoly({**{k + 1: m for k, m in enumerate(row)}, 0: bi}) for row, bi in zip(M, b)]


def test_criterion_8_geometry():
    start = time.perf_counter()
    rng = random.Random(80008)
    bad = recognized = 0
    for i in range(200):
        n = rng.randint(2, 4)
        curve = affine_rnc_image(rng, n) if i % 4 == 0 else random_curve(rng, n)
        num = invariant_numerator(curve)
        rnc = is_affine_rnc(curve) is not None
        recognized += rnc
        bad += rnc != (num != 0 and num.is_constant())
    images_bad = 0
    for _ in range(200):
        n = rng.randint(2, 5)
        curve = affine_rnc_image(rng, n)
        w = is_affine_rnc(curve)
        images_bad += w is None or w.apply() != curve
    elapsed = time.perf_counter() - start
    record(8, bad == 0 and images_bad == 0,
           f"200 random curves ({recognized} affine RNCs), {bad} disagreements; "
           f"200 affine images, {images_bad} not reconstructed", elapsed)


if __name__ == "__main__":
    import sys

    failures = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failures += 1
    sys.exit(1 if failures else 0)
