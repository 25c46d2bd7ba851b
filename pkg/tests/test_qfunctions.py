import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from qcongr import _kernels
from qcongr.qfunctions import (
    EtaMonomial,
    apply_monomial,
    elementary_congruences,
    eta_mul,
    eta_quotient,
    eta_series,
    pentagonal_terms,
    theta_a,
    theta_phi,
)
from qcongr.series import EXACT, Ring, Series, SeriesError, invert, mul, power

RINGS = [EXACT, Ring.mod(2), Ring.mod(8), Ring.mod(144), Ring.mod((1 << 40) + 15), Ring.mod((1 << 61) - 1)]


def dense_eta(k, order, ring=EXACT):
    # product of (1 - q^{kj}) one binomial at a time
    out = Series.one(order, ring)
    j = 1
    while k * j < order:
        c = [0] * order
        c[0], c[k * j] = 1, -1
        out = mul(out, Series.from_coeffs(c, ring))
        j += 1
    return out


def lambert_a(order):
    # 1 + 6 sum_n (d_{1,3}(n) - d_{2,3}(n)) q^n
    c = [1] + [0] * (order - 1)
    for d in range(1, order):
        chi = (0, 1, -1)[d % 3]
        if chi:
            for n in range(d, order, d):
                c[n] += 6 * chi
    return c


def test_euler_pentagonal_expansion():
    assert eta_series(1, 16).to_list() == [1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1, 0, 0, -1]
    exps, signs = pentagonal_terms(2, 30)
    assert exps.tolist() == [2, 4, 10, 14, 24]
    assert signs.tolist() == [-1, -1, 1, 1, -1]
    with pytest.raises(SeriesError):
        pentagonal_terms(0, 10)


def test_partition_numbers_from_reciprocal():
    assert invert(eta_series(1, 11)).to_list() == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


@settings(max_examples=120, deadline=None, derandomize=True)
@given(st.sampled_from(RINGS), st.integers(1, 7), st.integers(1, 150))
def test_sparse_eta_matches_dense_product(ring, k, order):
    assert eta_series(k, order, ring) == dense_eta(k, order, ring)


@settings(max_examples=120, deadline=None, derandomize=True)
@given(st.sampled_from(RINGS), st.integers(1, 7), st.lists(st.integers(-(10**9), 10**9), min_size=1, max_size=120))
def test_sparse_division_inverts_dense_product(ring, k, coeffs):
    s = Series.from_coeffs(coeffs, ring)
    dense = dense_eta(k, s.order, ring)
    assert eta_mul(s, k, -1) == mul(s, invert(dense))
    assert eta_mul(s, k, 1) == mul(s, dense)


@pytest.mark.parametrize("m", [2, 8, 144, (1 << 40) + 15])
@pytest.mark.parametrize("k", [1, 3])
@pytest.mark.parametrize("block", [64, 4096])
def test_lazy_kernels_agree_with_reducing_kernels(m, k, block):
    rng = np.random.default_rng(7 * m + k)
    n = 20000
    s = rng.integers(0, m, n, dtype=np.int64)
    exps, signs = pentagonal_terms(k, n)
    work = _kernels.lazy_dtype(len(exps), m)
    lazy_mul = _kernels.sparse_mul_lazy(s.astype(work), exps, signs, work(m)).astype(np.int64)
    lazy_div = _kernels.sparse_div_lazy(s.astype(work), exps, signs, work(m), block).astype(np.int64)
    assert np.array_equal(lazy_mul, _kernels.sparse_mul_mod(s, exps, signs, np.int64(m)))
    assert np.array_equal(lazy_div, _kernels.sparse_div_mod(s, exps, signs, np.int64(m)))


def test_lazy_dtype_thresholds():
    assert _kernels.lazy_dtype(100, 8) is np.int32
    assert _kernels.lazy_dtype(100, 1 << 40) is np.int64
    assert _kernels.lazy_dtype(100, 1 << 61) is None


def test_cubic_theta_matches_lambert_series():
    for order in (1, 2, 50, 600):
        assert theta_a(1, order).to_list() == lambert_a(order)
    a3 = theta_a(3, 40).to_list()
    assert a3 == [lambert_a(14)[n // 3] if n % 3 == 0 else 0 for n in range(40)]


def test_phi_matches_eta_quotient():
    n = 400
    f1, f2, f4 = (eta_series(k, n) for k in (1, 2, 4))
    expect = mul(power(f2, 5), invert(mul(power(f1, 2), power(f4, 2))))
    assert theta_phi(n) == expect
    assert theta_phi(10, k=2).to_list() == [1, 0, 2, 0, 0, 0, 0, 0, 2, 0]


def test_elementary_congruences_hold():
    facts = elementary_congruences(1000)
    assert len(facts) == 5
    assert all(facts.values())


def test_monomial_normalises_and_multiplies():
    m = EtaMonomial(eta={2: 1, 1: -1})
    assert m.eta == ((1, -1), (2, 1))
    assert (m * EtaMonomial(eta={1: 1})).eta == ((2, 1),)
    assert EtaMonomial(3, 1, 2, eta={1: 2}).numerator.denom_log2 == 0
    assert str(EtaMonomial(-2, 1, 1, eta={1: 1, 3: -2})) == "-2 q f1 f3^-2 / 2"
    with pytest.raises(ValueError):
        EtaMonomial(qpow=-1)
    with pytest.raises(ValueError):
        EtaMonomial(eta={0: 1})


@settings(max_examples=100, deadline=None, derandomize=True)
@given(
    st.dictionaries(st.integers(1, 12), st.integers(-4, 4), max_size=4),
    st.integers(0, 5),
    st.integers(-5, 5),
    st.sampled_from([2, 8, 72, 216]),
)
def test_eta_quotient_reduction_commutes(eta, qpow, scalar, m):
    mono = EtaMonomial(scalar, 0, qpow, eta=eta)
    ring = Ring.mod(m)
    assert eta_quotient(mono, 120).reduce(ring) == eta_quotient(mono, 120, ring)


def test_apply_monomial_with_theta_factors():
    n = 60
    mono = EtaMonomial(eta={1: 1}, theta_a={1: 2}, theta_phi={3: -1})
    expect = mul(mul(eta_series(1, n), power(theta_a(1, n), 2)), invert(theta_phi(n, k=3)))
    assert apply_monomial(Series.one(n), mono) == expect


def test_signed_product_is_f2_cubed_over_f1_f4():
    n = 300
    direct = Series.one(n)
    for j in range(1, n):
        c = [0] * n
        c[0], c[j] = 1, -((-1) ** j)
        direct = mul(direct, Series.from_coeffs(c))
    f1, f2, f4 = (eta_series(k, n) for k in (1, 2, 4))
    den = invert(mul(f1, f4))
    assert direct == mul(power(f2, 3), den)
    assert direct != mul(power(f2, 2), den)
