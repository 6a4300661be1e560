import pytest

from bentkit import (
    BooleanFunction,
    CapError,
    exhaustive_nonlinearity,
    naive_walsh,
    nonlinearity,
    resiliency_by_definition,
    resiliency_report,
    walsh_transform,
)
from bentkit.oracle import (
    verify_bent,
    verify_nonlinearity,
    verify_resiliency,
    verify_walsh,
)
from bentkit.rand import XorShift64Star, random_function

X1X2 = BooleanFunction(2, [0, 0, 0, 1])


def test_naive_walsh_constant():
    assert list(naive_walsh(BooleanFunction.zero(3)).values) == [8] + [0] * 7


def test_naive_walsh_quadratic():
    assert list(naive_walsh(X1X2).values) == [2, 2, 2, -2]


def test_naive_matches_butterfly_n4_slice():
    # the full 65536-function sweep lives in the acceptance suite
    for mask in range(0, 1 << 16, 257):
        f = BooleanFunction(4, mask)
        assert list(naive_walsh(f).values) == list(walsh_transform(f).values)


def test_naive_matches_butterfly_above_matrix_cutoff():
    # n = 13 exercises the per-mask loop instead of the cached matrix
    f = random_function(13, XorShift64Star(900))
    assert list(naive_walsh(f).values) == list(walsh_transform(f).values)


def test_naive_matches_butterfly_every_n_to_10():
    rng = XorShift64Star(901)
    for n in range(1, 11):
        for _ in range(5):
            f = random_function(n, rng)
            assert list(naive_walsh(f).values) == list(walsh_transform(f).values)


def test_exhaustive_nonlinearity_affine_is_zero():
    assert exhaustive_nonlinearity(BooleanFunction.linear(5, 0b10110, 1)) == 0


def test_exhaustive_nonlinearity_bent_n4():
    # x1x3 + x2x4 as a table
    vals = [
        (((i >> 3) & 1) & ((i >> 1) & 1)) ^ (((i >> 2) & 1) & (i & 1))
        for i in range(16)
    ]
    f = BooleanFunction(4, vals)
    assert exhaustive_nonlinearity(f) == 6


def test_exhaustive_agrees_with_spectral_nonlinearity():
    rng = XorShift64Star(77)
    for _ in range(1000):
        f = random_function(8, rng)
        assert exhaustive_nonlinearity(f) == nonlinearity(f)


def test_resiliency_by_definition_examples():
    parity3 = BooleanFunction.linear(3, 0b111)
    assert resiliency_by_definition(parity3, 2)
    assert not resiliency_by_definition(X1X2, 1)
    assert resiliency_by_definition(BooleanFunction.linear(4, 0b1100), 1)
    assert not resiliency_by_definition(BooleanFunction.linear(4, 0b1100), 2)


def _definition_level_resiliency(f):
    best = -1
    for r in range(f.n + 1):
        if not resiliency_by_definition(f, r):
            break
        best = r
    return best


def test_resiliency_definition_agrees_with_spectrum():
    rng = XorShift64Star(123)
    for _ in range(500):
        f = random_function(8, rng)
        assert resiliency_report(f).resiliency == _definition_level_resiliency(f)


def test_ci_nesting_matches_spectrum_even_unbalanced():
    # the spectral CI order certifies independence at every order below
    # it and fails at the next one, balanced or not
    from bentkit.oracle import correlation_immune_by_definition

    rng = XorShift64Star(2718)
    checked_unbalanced = 0
    for _ in range(40):
        f = random_function(5, rng)
        ci = resiliency_report(f).ci_order
        for r in range(0, ci + 1):
            assert correlation_immune_by_definition(f, r)
        if ci < f.n:
            assert not correlation_immune_by_definition(f, ci + 1)
        checked_unbalanced += not f.is_balanced
    assert checked_unbalanced > 0


def test_resiliency_definition_agrees_on_balanced_corpus():
    # random functions are rarely balanced; force the interesting branch
    from bentkit.rand import random_balanced, random_resilient

    rng = XorShift64Star(321)
    for _ in range(40):
        f = random_balanced(6, rng)
        assert resiliency_report(f).resiliency == _definition_level_resiliency(f)
    for t in (1, 2):
        for _ in range(10):
            f = random_resilient(6, t, rng)
            assert resiliency_report(f).resiliency == _definition_level_resiliency(f)


def test_caps():
    with pytest.raises(CapError):
        naive_walsh(BooleanFunction.zero(15))
    with pytest.raises(CapError):
        exhaustive_nonlinearity(BooleanFunction.zero(13))
    with pytest.raises(CapError):
        resiliency_by_definition(BooleanFunction.zero(11), 1)


def test_verify_reports():
    rng = XorShift64Star(4)
    f = random_function(8, rng)
    for verifier in (verify_walsh, verify_nonlinearity, verify_resiliency, verify_bent):
        report = verifier(f)
        assert report.agreed
        assert report.first_divergence is None
        assert report.as_dict()["agreed"] is True
