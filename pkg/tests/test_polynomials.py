from itertools import product as iproduct

import pytest

from fibgf.errors import InvariantError, ResourceLimitError
from fibgf.polynomials import (
    CoeffPoly,
    ProductSpec,
    TPoly,
    build_product,
    fibonacci_product_spec,
    golden_series,
    kbonacci_product_spec,
    run_decomposition,
    stern_product_spec,
)
from fibgf.sequences import RecurrentSeq, fibonacci


def test_tpoly_ring_ops():
    t = TPoly.t()
    assert (1 + t) * (1 - t) == TPoly((1, 0, -1))
    assert (t + t * t) ** 2 == TPoly((0, 0, 1, 2, 1))
    assert t - t == TPoly()
    assert not (t - t)
    assert (2 * t).evaluate(5) == 10
    assert TPoly((1, 2, 3)).evaluate(-1) == 2
    assert str(1 + 2 * t) == "1 + 2*t"


def test_build_product_examples():
    assert build_product(fibonacci_product_spec(0)).dense_coefficients() == [1]
    assert build_product(fibonacci_product_spec(1)).dense_coefficients() == [1, 1]
    assert build_product(fibonacci_product_spec(3)).dense_coefficients() == [1, 1, 1, 2, 1, 1, 1]
    assert build_product(fibonacci_product_spec(4)).dense_coefficients() == [1, 1, 1, 2, 1, 2, 2, 1, 2, 1, 1, 1]
    assert build_product(fibonacci_product_spec(3, t=-1)).dense_coefficients() == [1, -1, -1, 0, 1, 1, -1]


def test_weighted_product_small():
    t = TPoly.t()
    p = build_product(fibonacci_product_spec(2, t=t))
    assert p.dense_coefficients() == [1, t, t, t * t]


def test_degree_formula():
    for n in range(0, 16):
        assert build_product(fibonacci_product_spec(n)).degree == fibonacci(n + 3) - 2


def test_streaming_partials_match_prefix_builds():
    partials = {}
    build_product(fibonacci_product_spec(7), callback=lambda i, p: partials.__setitem__(i, p))
    assert set(partials) == set(range(8))
    for i in range(8):
        assert partials[i] == build_product(fibonacci_product_spec(i))


def test_nonpositive_exponent_rejected():
    seq = RecurrentSeq(coeffs=(1,), init=(0,))
    spec = ProductSpec(exponent_seq=seq, n=1, h=1, a=(1,))
    with pytest.raises(ValueError):
        build_product(spec)


def test_doubling_ratio_products_have_unit_coefficients():
    # f_{i+1} >= 2 f_i forces all nonzero coefficients to be 1
    for coeffs, init in (((2,), (1,)), ((3,), (1,))):
        seq = RecurrentSeq(coeffs=coeffs, init=init)
        spec = ProductSpec(exponent_seq=seq, n=10, h=1, a=(1,))
        p = build_product(spec)
        assert all(c == 1 for c in p.coefficient_sequence())
        assert p.nonzero_count() == 2**10


def test_sparse_fallback_selected_for_gappy_products():
    seq = RecurrentSeq(coeffs=(3,), init=(1,))
    p = build_product(ProductSpec(exponent_seq=seq, n=9, h=1, a=(1,)))
    assert not p.is_dense
    dense = build_product(fibonacci_product_spec(9))
    assert dense.is_dense


def test_sparse_and_dense_agree():
    seq = RecurrentSeq(coeffs=(3,), init=(1,))
    spec = ProductSpec(exponent_seq=seq, n=6, h=1, a=(1,))
    sparse = build_product(spec)
    # brute force expansion
    exps = [seq.term(i) for i in range(1, 7)]
    sums = {}
    for mask in iproduct((0, 1), repeat=6):
        s = sum(e for e, b in zip(exps, mask) if b)
        sums[s] = sums.get(s, 0) + 1
    assert dict(sparse.items()) == sums


def test_memory_guard(monkeypatch):
    monkeypatch.setenv("RGF_MAX_MEM_MB", "1")
    with pytest.raises(ResourceLimitError) as err:
        build_product(fibonacci_product_spec(25))
    assert err.value.limit_n is not None


def test_poly_json_roundtrip():
    t = TPoly.t()
    p = build_product(fibonacci_product_spec(4, t=t))
    data = p.to_json_dict()
    assert data["base"] == 0
    assert data["coeffs"][0] == ["1"]
    clone = CoeffPoly.from_json_dict(data)
    assert clone == p
    q = build_product(fibonacci_product_spec(5))
    assert CoeffPoly.from_json_dict(q.to_json_dict()) == q


def test_prefactor_and_offset():
    pref = CoeffPoly([0, 1])  # P(x) = x
    spec = ProductSpec(exponent_seq=RecurrentSeq((1, 1), (1, 1)), n=2, h=1, a=(1,), offset=1, prefactor=pref)
    p = build_product(spec)
    assert p.base == 1
    assert p.dense_coefficients() == [0, 1, 1, 1, 1]  # x(1+x)(1+x^2)


def test_golden_series_examples():
    g1 = golden_series(1)
    assert g1.coefficient_sequence() == [1, 1]
    g5 = golden_series(5)
    assert g5.coefficient_sequence() == [1, 1, 1, 2, 1, 2, 2, 1, 3, 2, 2, 3, 1, 2, 2, 1, 2, 1, 1, 1]
    assert len(g5) == 20 == fibonacci(8) - 1


def test_golden_matches_product_coefficients():
    for n in range(0, 17):
        assert golden_series(n).coefficient_sequence() == build_product(
            fibonacci_product_spec(n)
        ).coefficient_sequence()


def test_run_decomposition_examples():
    rd5 = run_decomposition(golden_series(5))
    assert rd5.lengths() == [2, 3, 2, 3, 3, 2, 3, 2]
    assert rd5.count == 8 == fibonacci(6)
    rd1 = run_decomposition(golden_series(1))
    assert rd1.count == 1 and rd1.lengths() == [2]


def test_run_lengths_always_2_or_3():
    for n in range(1, 15):
        rd = run_decomposition(golden_series(n))
        assert set(rd.lengths()) <= {2, 3}
        assert rd.count == fibonacci(n + 1)


def test_run_decomposition_rejects_bad_series():
    from fibgf.polynomials import GoldenSeries
    from fibgf.sequences import GoldenInt

    bad = GoldenSeries(((GoldenInt(0, 0), 1), (GoldenInt(1, 0), 1), (GoldenInt(2, 0), 1), (GoldenInt(3, 0), 1)))
    with pytest.raises(InvariantError):
        run_decomposition(bad)  # a run of length 4


def test_exercise_note_truth():
    """The cross-seed invariance holds for the increasing seeds; the (2,1)
    seed (Lucas numbers) is a genuine counterexample from n = 4 on."""
    def rows(seed, nmax):
        seq = RecurrentSeq(coeffs=(1, 1), init=seed)
        spec = ProductSpec(exponent_seq=seq, n=nmax, h=1, a=(1,))
        out = []
        build_product(spec, callback=lambda i, p: out.append(p.coefficient_sequence()))
        return out

    nmax = 14
    reference = rows((1, 2), nmax)
    for seed in ((2, 3), (3, 5), (1, 4)):
        assert rows(seed, nmax) == reference, seed
    lucas = rows((2, 1), nmax)
    assert lucas[:4] == reference[:4]
    assert lucas[4] == [1, 1, 1, 2, 2, 2, 2, 2, 1, 1, 1]
    assert reference[4] == [1, 1, 1, 2, 1, 2, 2, 1, 2, 1, 1, 1]
    assert all(lucas[n] != reference[n] for n in range(4, nmax + 1))


def test_kbonacci_products():
    p = build_product(kbonacci_product_spec(3, 4))
    # exponents F^(3)_{i+2}: 1, 3, 5, 9
    assert p.degree == 1 + 3 + 5 + 9
    s = build_product(stern_product_spec(2))
    assert s.dense_coefficients() == [1, 1, 2, 1, 2, 1, 1]
