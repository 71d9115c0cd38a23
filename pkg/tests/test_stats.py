import random

import pytest

from fibgf.errors import ResourceLimitError
from fibgf.polynomials import (
    CoeffPoly,
    ProductSpec,
    TPoly,
    build_product,
    fibonacci_product_spec,
    kbonacci_product_spec,
    stern_product_spec,
)
from fibgf.sequences import RecurrentSeq, fibonacci
from fibgf.stats import (
    CorrSpec,
    coefficient_value_predicate,
    corr_series,
    corr_sum,
    residue_count,
    residue_series,
)


def test_corr_spec_validation():
    with pytest.raises(ValueError):
        CorrSpec(())
    with pytest.raises(ValueError):
        CorrSpec((0, 0))
    with pytest.raises(ValueError):
        CorrSpec((1, -1))


def test_corr_sum_examples():
    assert corr_sum(build_product(fibonacci_product_spec(3)), CorrSpec((2,))) == 10
    assert corr_sum(build_product(fibonacci_product_spec(1)), CorrSpec((1, 1))) == 1
    assert corr_sum(build_product(fibonacci_product_spec(0)), CorrSpec((2,))) == 1
    assert corr_sum(build_product(fibonacci_product_spec(4)), CorrSpec((2,))) == 24


def test_corr_series_examples():
    assert corr_series(fibonacci_product_spec(0), CorrSpec((2,)), 5) == [1, 2, 4, 10, 24, 60]
    assert corr_series(stern_product_spec(0), CorrSpec((2,)), 2) == [1, 3, 13]
    spec = fibonacci_product_spec(0)
    assert corr_series(spec, CorrSpec((2,)), 0) == [1]


def test_alpha_one_equals_value_at_one():
    # sum of coefficients equals prod (1 + sum a_j) for 0/1-weight products
    for n in range(0, 10):
        p = build_product(fibonacci_product_spec(n))
        assert corr_sum(p, CorrSpec((1,))) == 2**n
    for n in range(0, 7):
        p = build_product(stern_product_spec(n))
        assert corr_sum(p, CorrSpec((1,))) == 3**n


def test_palindromic_alpha_reversal_invariance():
    rng = random.Random(3)
    p = build_product(fibonacci_product_spec(8))
    rev = CoeffPoly(p.dense_coefficients()[::-1])
    for alpha in ((2,), (1, 1), (1, 2, 1), (2, 0, 2), (3,)):
        spec = CorrSpec(alpha)
        assert corr_sum(p, spec) == corr_sum(rev, spec), alpha
    # non-palindromic alphas may differ; no assertion


def test_window_beyond_degree_is_zero():
    p = build_product(fibonacci_product_spec(0))  # just 1
    assert corr_sum(p, CorrSpec((1, 1))) == 0  # c(0) * c(1) = 0


def test_engines_agree():
    specs = [
        fibonacci_product_spec(0),
        fibonacci_product_spec(0, t=-1),
        stern_product_spec(0),
        kbonacci_product_spec(3, 0),
        ProductSpec(exponent_seq=RecurrentSeq((1, 1), (1, 1)), n=0, h=3, a=(0, 1, 1)),
        ProductSpec(exponent_seq=RecurrentSeq((1, 1), (1, 1)), n=0, h=1, a=(1,), offset=1,
                    prefactor=CoeffPoly([1, 1])),
    ]
    alphas = [(2,), (3,), (7,), (1, 1), (2, 1), (1, 0, 1), (2, 2)]
    for spec in specs:
        for alpha in alphas:
            a = CorrSpec(alpha)
            assert corr_series(spec, a, 9, engine="pure") == corr_series(spec, a, 9, engine="fast")


def test_fast_engine_crt_path_with_large_values():
    # the three-term window product grows fast; force the windowed CRT path
    spec = ProductSpec(exponent_seq=RecurrentSeq((1, 1), (1, 1)), n=0, h=3, a=(0, 1, 1))
    pure = corr_series(spec, CorrSpec((1, 1)), 12, engine="pure")
    fast = corr_series(spec, CorrSpec((1, 1)), 12, engine="fast")
    assert pure == fast


def test_residue_count_examples():
    i2 = build_product(fibonacci_product_spec(2))
    assert residue_count(i2, 2, 1) == 4
    assert residue_count(i2, 2, 0) == 0
    assert residue_count(build_product(fibonacci_product_spec(0)), 2, 1) == 1
    with pytest.raises(ValueError):
        residue_count(i2, 1, 0)
    with pytest.raises(ValueError):
        residue_count(i2, 3, 3)
    with pytest.raises(ValueError):
        residue_count(build_product(fibonacci_product_spec(2, t=TPoly.t())), 2, 1)


def test_residue_series_row_sum_identity():
    for m in (2, 3, 4):
        rows = residue_series(fibonacci_product_spec(0), m, 25)
        assert sum(rows[0]) == 1
        for n in range(1, 26):
            assert sum(rows[n]) == fibonacci(n + 3) - 1


def test_odd_counts_equal_alternating_nonzero_counts():
    # coefficients of the weight -1 product are the mod-2 reductions of the
    # plain product, so h(2,1) equals the count of nonzero alternating-sign
    # coefficients, which equals its squared sum
    odd = [row[1] for row in residue_series(fibonacci_product_spec(0), 2, 20)]
    v2m1 = corr_series(fibonacci_product_spec(0, t=-1), CorrSpec((2,)), 20)
    assert odd == v2m1


def test_residue_engines_agree():
    for m in (2, 3, 4):
        assert residue_series(fibonacci_product_spec(0), m, 14, engine="pure") == residue_series(
            fibonacci_product_spec(0), m, 14, engine="fast"
        )
    # negative coefficients reduce correctly mod m
    assert residue_series(fibonacci_product_spec(0, t=-1), 3, 12, engine="pure") == residue_series(
        fibonacci_product_spec(0, t=-1), 3, 12, engine="fast"
    )


def test_value_predicate():
    assert coefficient_value_predicate(build_product(fibonacci_product_spec(3, t=-1)), {-1, 1})
    assert not coefficient_value_predicate(build_product(fibonacci_product_spec(3)), {-1, 1})
    assert coefficient_value_predicate(build_product(fibonacci_product_spec(0)), {1})


def test_memory_guard_names_limiting_n(monkeypatch):
    monkeypatch.setenv("RGF_MAX_MEM_MB", "1")
    with pytest.raises(ResourceLimitError) as err:
        corr_series(fibonacci_product_spec(0), CorrSpec((2,)), 28, engine="fast")
    assert err.value.limit_n is not None


def test_symbolic_series_pure_only():
    t = TPoly.t()
    spec = fibonacci_product_spec(0, t=t)
    vals = corr_series(spec, CorrSpec((2,)), 4)
    assert vals[2] == TPoly((1, 0, 2, 0, 1))  # 1 + 2t^2 + t^4
    with pytest.raises(ValueError):
        corr_series(spec, CorrSpec((2,)), 4, engine="fast")
