"""Reversibility classification and the desk-scale conjecture sweep."""

from fractions import Fraction as F

import pytest

from involute.classify import (
    DeltaIntegerPoint,
    DeltaRealPoint,
    GammaABPoint,
    GammaCPoint,
    IdentityWalk,
    NotClassified,
    SearchConfig,
    a_prime_ladder,
    classify_walk,
    conjecture_search,
    exceptional_ladder,
    is_globally_reversible,
    nu_ladder,
    params_from_mu_nu,
)
from involute.errors import NotStochastic, OutOfRange, ZeroNotAccessible
from involute.spectral import family_lambda
from involute.weights import DeltaAB, GammaAB, GammaC


def family_eigenvalues(spec, n):
    return [family_lambda(spec, d) for d in range(n)]


def test_params_from_mu_nu_examples():
    assert params_from_mu_nu(F(2, 3), F(1, 2), 4) == GammaABPoint(F(1), F(0))
    assert params_from_mu_nu(F(1, 3), F(1, 9), 4) == GammaCPoint(F(2))
    assert params_from_mu_nu(F(2, 3), F(10, 23), 10) == DeltaIntegerPoint(F(17), 9)


def test_params_from_mu_nu_range_errors():
    with pytest.raises(OutOfRange):
        params_from_mu_nu(F(1), F(1, 2), 4)
    with pytest.raises(OutOfRange):
        params_from_mu_nu(F(1, 2), F(1, 2), 4)
    with pytest.raises(OutOfRange):
        params_from_mu_nu(F(1, 2), F(1, 4), 2)


def test_params_round_trip_mu_nu():
    # the classified family reproduces (mu, nu) as lambda_1, lambda_2
    samples = [
        (F(2, 3), F(1, 2), 4),
        (F(3, 4), F(5, 8), 5),
        (F(1, 2), F(1, 4), 4),
        (F(3, 4), F(13, 24), 3),
        (F(2, 3), F(10, 23), 10),
    ]
    for mu, nu, n in samples:
        point = params_from_mu_nu(mu, nu, n)
        assert not isinstance(point, NotClassified)
        spec = point.weight_spec()
        assert family_lambda(spec, 1) == mu
        assert family_lambda(spec, 2) == nu


def test_exceptional_ladder_reference_table():
    ladder = exceptional_ladder(F(2, 3), 10)
    assert ladder == [
        (9, F(10, 23), F(17)),
        (8, F(13, 30), F(15)),
        (7, F(22, 51), F(13)),
        (6, F(3, 7), F(11)),
    ]
    assert exceptional_ladder(F(2, 3), 3) == [(2, F(1, 3), F(3))]


def test_ladder_monotone_to_mu_squared():
    mu = F(2, 3)
    for m in range(2, 40):
        assert nu_ladder(m, mu) < nu_ladder(m + 1, mu) < mu * mu
    assert a_prime_ladder(2, F(2, 3)) == 3


def test_classify_walk_examples():
    assert classify_walk([F(1), F(1, 2), F(1, 3), F(1, 4)]) == GammaABPoint(F(0), F(0))
    assert classify_walk([F(1), F(2, 3), F(4, 9), F(8, 27)]) == GammaCPoint(F(1, 2))
    assert classify_walk([F(1), F(3, 4), F(1, 2), F(1, 4)]) == DeltaIntegerPoint(F(4), 2)


def test_classify_walk_errors():
    with pytest.raises(OutOfRange):
        classify_walk([F(1), F(1, 2)])
    with pytest.raises(NotStochastic):
        classify_walk([F(1), F(1, 2), F(1, 2), F(3, 4)])
    with pytest.raises(ZeroNotAccessible):
        classify_walk([F(1), F(1, 2), F(1, 4), F(0)])


def test_classify_walk_identity():
    assert classify_walk([F(1), F(1), F(1)]) == IdentityWalk()


def test_classify_walk_rejects_near_family():
    # correct (mu, nu) for gamma(0,0) but a perturbed tail
    result = classify_walk([F(1), F(1, 2), F(1, 3), F(1, 5)])
    assert isinstance(result, NotClassified)


def test_round_trip_gamma_ab():
    values = [F(-1, 2), F(0), F(1, 2), F(1), F(2)]
    for a in values:
        for b in values:
            spec = GammaAB(a, b)
            for n in range(3, 9):
                assert classify_walk(family_eigenvalues(spec, n)) == GammaABPoint(a, b)


def test_round_trip_gamma_c_and_delta():
    for c in (F(1, 2), F(1), F(2)):
        for n in range(3, 9):
            assert classify_walk(family_eigenvalues(GammaC(c), n)) == GammaCPoint(c)
    assert classify_walk(family_eigenvalues(DeltaAB(4, 2), 4)) == DeltaIntegerPoint(F(4), 2)
    assert classify_walk(family_eigenvalues(DeltaAB(5, 3), 5)) == DeltaIntegerPoint(F(5), 3)
    spec = DeltaAB(F(7, 2), F(5, 2))
    assert classify_walk(family_eigenvalues(spec, 3)) == DeltaRealPoint(F(7, 2), F(5, 2))


def test_is_globally_reversible_examples():
    assert is_globally_reversible(family_eigenvalues(GammaAB(0, 0), 5))
    assert not is_globally_reversible([F(1), F(3, 5), F(3, 10), F(1, 20)])
    assert is_globally_reversible([F(1), F(2, 3), F(1, 3)])


def test_ladder_point_walk_is_globally_reversible():
    # the mu = 2/3 ladder entry with 9 bands at n = 10
    spec = DeltaAB(17, 9)
    lam = family_eigenvalues(spec, 10)
    assert lam[1] == F(2, 3) and lam[2] == F(10, 23)
    assert is_globally_reversible(lam)
    assert classify_walk(lam) == DeltaIntegerPoint(F(17), 9)


def test_round_trip_half_integer_delta():
    spec = DeltaAB(F(9, 2), F(7, 2))
    for n in (3, 4):
        lam = family_eigenvalues(spec, n)
        assert classify_walk(lam) == DeltaRealPoint(F(9, 2), F(7, 2))
        assert is_globally_reversible(lam)


def test_globally_reversible_errors():
    with pytest.raises(NotStochastic):
        is_globally_reversible([F(1), F(1, 2), F(1, 2), F(3, 4)])
    with pytest.raises(ZeroNotAccessible):
        is_globally_reversible([F(1), F(1, 2), F(0)])


def test_conjecture_search_n3_small_grid():
    summary = conjecture_search(3, SearchConfig(max_denominator=6))
    assert summary.stochastic > 0
    assert summary.reversible > 0
    assert summary.unclassified_reversible == []
    # gamma(1,1) eigenvalues appear in the n=4 grid story: verify directly
    lam = family_eigenvalues(GammaAB(1, 1), 4)
    assert lam == [F(1), F(1, 2), F(3, 10), F(1, 5)]
    assert classify_walk(lam) == GammaABPoint(F(1), F(1))


def test_conjecture_search_sampled():
    summary = conjecture_search(6, SearchConfig(samples=60, seed=99))
    assert summary.evaluated == 60
    assert summary.stochastic == 60
    assert summary.unclassified_reversible == []


def test_conjecture_search_range():
    with pytest.raises(OutOfRange):
        conjecture_search(9)


def test_classified_points_are_globally_reversible():
    # whatever params_from_mu_nu returns must itself be a globally
    # reversible stochastic walk reproducing (mu, nu)
    import random

    from involute.transform import is_stochastic

    rng = random.Random(1618)
    checked = 0
    for _ in range(300):
        n = rng.randint(3, 6)
        mu = F(rng.randint(2, 11), 12)
        nu = F(rng.randint(0, 11), 12)
        if not 0 <= nu < mu < 1:
            continue
        point = params_from_mu_nu(mu, nu, n)
        if isinstance(point, NotClassified):
            continue
        lam = family_eigenvalues(point.weight_spec(), n)
        assert lam[1] == mu and lam[2] == nu
        assert is_stochastic(lam)
        assert is_globally_reversible(lam)
        assert classify_walk(lam) == point
        checked += 1
    assert checked >= 50


def test_grid_reversibility_agrees_with_detailed_balance():
    from involute.transform import pl_matrix
    from involute.walk import detailed_balance, ergodicity, stationary

    summary = conjecture_search(3, SearchConfig(max_denominator=5))
    compared = 0
    for record in summary.records:
        p = pl_matrix(record.lam)
        if not ergodicity(p).irreducible:
            continue
        assert record.reversible == detailed_balance(p, stationary(p))
        compared += 1
    assert compared > 20


def test_threaded_search_is_deterministic():
    sequential = conjecture_search(4, SearchConfig(max_denominator=5, threads=1))
    threaded = conjecture_search(4, SearchConfig(max_denominator=5, threads=2))
    assert [r.lam for r in sequential.records] == [r.lam for r in threaded.records]
    assert [r.reversible for r in sequential.records] == [
        r.reversible for r in threaded.records
    ]
