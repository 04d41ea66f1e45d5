import math
import random

import pytest

from wronsk import linalg
from wronsk.errors import (
    BasisExpressionError,
    LinearlyDependentError,
    NotConstantWronskianError,
    TwoConstantsError,
)
from wronsk.laurent import LaurentPoly
from wronsk.parser import parse_laurent as P
from wronsk.reduction import (
    coefficient_matrix,
    monomial_basis,
    reduce_both,
    reduce_distinct_max,
    reduce_distinct_min,
)
from wronsk.wronskian import WronskianTag, classify, wronskian

MIXED = [P("t^2 - 1 + t^-1"), P("t^2 + t - t^-2"), P("t + t^-2")]


def fam(*texts):
    return [P(s) for s in texts]


def apply(transform, fs):
    return [sum((f.scale(c) for c, f in zip(row, fs)), LaurentPoly.zero()) for row in transform]


def test_max_pass_on_laurent_example():
    out = reduce_distinct_max(MIXED)
    assert out.max_degrees == (2, 1, 0)
    assert out.reduced[1] == P("t + 1 - t^-1 - t^-2")
    assert out.reduced[2] == P("-1 + t^-1 + 2t^-2")
    assert out.sign == 1
    assert apply(out.transform, MIXED) == list(out.reduced)


def test_min_pass_on_laurent_example():
    out = reduce_distinct_min(MIXED)
    assert out.min_degrees == (-1, 1, -2)
    assert out.reduced[1] == P("2t + t^2")


def test_both_passes():
    both = reduce_both(MIXED)
    assert both.d == (2, 1, 0)
    assert all(d >= e for d, e in zip(both.d, both.e))
    assert apply(both.transform, MIXED) == list(both.min.reduced)
    both = reduce_both(fam("1", "t", "t^2"))
    assert both.d == both.e == (0, 1, 2)
    both = reduce_both(fam("t", "t^2-t", "t^2+1"))
    assert sum(both.d) == sum(both.e) == 3


def test_already_distinct_is_unchanged():
    fs = fam("1", "t", "t^2")
    assert reduce_distinct_max(fs).reduced == tuple(fs)
    fs = fam("t^-1", "t")
    assert reduce_distinct_min(fs).reduced == tuple(fs)


def test_dependence_is_detected():
    with pytest.raises(LinearlyDependentError):
        reduce_distinct_max(fam("t^2", "2t^2"))
    with pytest.raises(LinearlyDependentError):
        reduce_distinct_min(fam("1 + t^-1", "2 + 2t^-1"))
    with pytest.raises(TwoConstantsError):
        reduce_distinct_max(fam("t + 3", "t + 5", "t"))
    with pytest.raises(LinearlyDependentError):
        reduce_distinct_max([P("0")])


def test_single_function():
    out = reduce_distinct_max([P("t^3 + 1")])
    assert out.reduced == (P("t^3 + 1"),)


def test_monomial_basis_examples():
    assert sorted(monomial_basis(fam("t^2+t", "2t^2", "t-2"))) == [0, 1, 2]
    assert monomial_basis(fam("t^6", "t^-1", "t^-2")) == [6, -1, -2]
    assert monomial_basis(fam("1", "t")) == [0, 1]
    with pytest.raises(NotConstantWronskianError):
        monomial_basis(fam("t^3", "t^3+t^2", "t^2-2"))


def test_basis_error_is_an_assertion():
    assert issubclass(BasisExpressionError, AssertionError)


def random_family(rng, n):
    exps = rng.sample(range(-3, 5), rng.randint(n, 6))
    return [LaurentPoly({e: rng.randint(-4, 4) for e in exps}) for _ in range(n)]


def same_span(fs, gs):
    a, cols = coefficient_matrix(fs)
    b, _ = coefficient_matrix(gs, cols)
    return linalg.rank(a) == linalg.rank(b) == linalg.rank(a + b)


def test_random_families_preserve_wronskian_and_span():
    rng = random.Random(17)
    done = 0
    while done < 500:
        fs = random_family(rng, rng.randint(2, 4))
        if not wronskian(fs):
            continue
        done += 1
        for out in (reduce_distinct_max(fs), reduce_distinct_min(fs)):
            assert wronskian(out.reduced) == wronskian(fs).scale(out.sign)
            assert linalg.det(out.transform) == out.sign
            assert len(set(out.degrees)) == len(fs)
            assert same_span(fs, out.reduced)
        hi = reduce_distinct_max(fs)
        assert max(hi.max_degrees) == max(f.degree_max for f in fs)


def test_constant_families_have_matching_degree_multisets():
    rng = random.Random(23)
    for _ in range(200):
        n = rng.randint(2, 4)
        while True:
            rs = rng.sample(range(-5, 8), n)
            if sum(rs) == math.comb(n, 2):
                break
        A = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        if linalg.det(A) == 0:
            continue
        fs = [LaurentPoly({r: a for r, a in zip(rs, row)}) for row in A]
        assert classify(fs).tag is WronskianTag.NONZERO_CONSTANT
        both = reduce_both(fs)
        assert sorted(both.d) == sorted(both.e) == sorted(rs)
        assert sum(both.d) == math.comb(n, 2)


def test_polynomial_constant_families_reduce_to_consecutive_degrees():
    rng = random.Random(29)
    for _ in range(100):
        n = rng.randint(1, 5)
        A = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
        if linalg.det(A) == 0:
            continue
        fs = [LaurentPoly(dict(enumerate(row))) for row in A]
        assert sorted(reduce_distinct_max(fs).max_degrees) == list(range(n))
