"""Transition matrices, stationary distributions, reversibility, simulation."""

import random
from fractions import Fraction as F

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from involute import _linalg as la
from involute.errors import NotIrreducible, OutOfRange
from involute.transform import lambda_walk, pl_matrix, random_stochastic_lambda
from involute.walk import (
    WalkMatrix,
    detailed_balance,
    ergodicity,
    invariant_closed_form,
    kolmogorov,
    reversible_with_some_distribution,
    simulate,
    stationary,
    subset_walk,
    total_variation,
    transition_matrix,
    two_step,
)
from involute.weights import Custom, DeltaAB, GammaAB, GammaC


def rows(entries):
    return [[F(v) for v in row] for row in entries]


INTRO = {
    GammaAB(0, 0): rows(
        [[0, 0, 0, 1], ["0", "0", "1/2", "1/2"], [0, "1/3", "1/3", "1/3"], ["1/4"] * 4]
    ),
    GammaAB(1, 0): rows(
        [
            [0, 0, 0, 1],
            [0, 0, "2/3", "1/3"],
            [0, "1/2", "1/3", "1/6"],
            ["2/5", "3/10", "1/5", "1/10"],
        ]
    ),
    GammaAB(0, 1): rows(
        [
            [0, 0, 0, 1],
            [0, 0, "1/3", "2/3"],
            [0, "1/6", "1/3", "1/2"],
            ["1/10", "1/5", "3/10", "2/5"],
        ]
    ),
    GammaC(F(1, 2)): rows(
        [
            [0, 0, 0, 1],
            [0, 0, "2/3", "1/3"],
            [0, "4/9", "4/9", "1/9"],
            ["8/27", "4/9", "2/9", "1/27"],
        ]
    ),
    GammaC(2): rows(
        [
            [0, 0, 0, 1],
            [0, 0, "1/3", "2/3"],
            [0, "1/9", "4/9", "4/9"],
            ["1/27", "2/9", "4/9", "8/27"],
        ]
    ),
    DeltaAB(4, 2): rows(
        [[0, 0, 0, 1], [0, 0, "3/4", "1/4"], [0, "1/2", "1/2", 0], ["1/4", "3/4", 0, 0]]
    ),
}


def test_reference_matrices():
    for spec, expected in INTRO.items():
        walk = transition_matrix(spec, 4)
        assert walk.P == expected
        # P = H J and the anti-triangular support
        assert all(
            walk.P[x][z] == walk.H[x][3 - z] for x in range(4) for z in range(4)
        )
        assert all(walk.P[x][z] == 0 for x in range(4) for z in range(3 - x))
        assert all(sum(row) == 1 for row in walk.P)


def test_row_stochastic_and_anti_triangular_across_specs():
    specs = [GammaAB(F(-1, 2), 2), GammaAB(2, F(1, 2)), GammaC(F(1, 3)), DeltaAB(5, 3)]
    for spec in specs:
        for n in (2, 3, 5):
            if isinstance(spec, DeltaAB) and n > 5:
                continue
            w = transition_matrix(spec, n)
            assert all(sum(row) == 1 for row in w.P)
            assert all(w.P[x][z] == 0 for x in range(n) for z in range(n - 1 - x))


def test_stationary_examples():
    assert stationary(transition_matrix(GammaAB(0, 0), 4)).weights == [
        F(1, 10),
        F(2, 10),
        F(3, 10),
        F(4, 10),
    ]
    assert stationary(transition_matrix(GammaC(1), 3)).weights == [F(1, 9), F(4, 9), F(4, 9)]
    flip = WalkMatrix.from_p([[0, 1], [1, 0]])
    assert stationary(flip).weights == [F(1, 2), F(1, 2)]


def test_stationary_not_irreducible():
    with pytest.raises(NotIrreducible):
        stationary([[F(1), F(0)], [F(0), F(1)]])


def test_invariant_closed_form_examples():
    assert invariant_closed_form(GammaAB(0, 0), 4).weights == [
        F(1, 10),
        F(2, 10),
        F(3, 10),
        F(4, 10),
    ]
    assert invariant_closed_form(GammaC(1), 3).weights == [F(1, 9), F(4, 9), F(4, 9)]
    assert invariant_closed_form(DeltaAB(4, 2), 4).weights == [
        F(1, 35),
        F(12, 35),
        F(18, 35),
        F(4, 35),
    ]


def test_closed_form_matches_solve_on_grid():
    values = [F(-1, 2), F(0), F(1, 2), F(1), F(2)]
    specs = [GammaAB(a, b) for a in values for b in values]
    specs += [GammaC(F(1, 2)), GammaC(1), GammaC(2)]
    specs += [DeltaAB(4, 2), DeltaAB(5, 3), DeltaAB(F(7, 2), F(5, 2))]
    for spec in specs:
        from involute.weights import UNBOUNDED, domain_limit

        limit = domain_limit(spec)
        for n in range(2, 7):
            if limit != UNBOUNDED and n > limit:
                continue
            w = transition_matrix(spec, n)
            assert stationary(w).weights == invariant_closed_form(spec, n).weights


def test_ergodicity_examples():
    assert ergodicity(transition_matrix(GammaAB(0, 0), 4)).ergodic
    flip = WalkMatrix.from_p([[0, 1], [1, 0]])
    report = ergodicity(flip)
    assert report.irreducible and not report.aperiodic and not report.ergodic


def test_constant_tail_walk_is_reducible_despite_zero_access():
    # lambda = (1, 1/2, 1/2, 1/2): 0 is reachable from every state, yet the
    # support splits into the classes {0, 3} and {1, 2}
    p = pl_matrix([F(1), F(1, 2), F(1, 2), F(1, 2)])
    report = ergodicity(p)
    assert not report.irreducible
    assert report.communicating_classes == [[0, 3], [1, 2]]
    from involute.transform import _zero_accessible

    assert _zero_accessible(p)


def test_detailed_balance_examples():
    w = transition_matrix(GammaAB(1, 0), 4)
    assert detailed_balance(w, invariant_closed_form(GammaAB(1, 0), 4))
    w = transition_matrix(DeltaAB(4, 2), 4)
    assert detailed_balance(w, invariant_closed_form(DeltaAB(4, 2), 4))
    bad = lambda_walk([F(1), F(3, 5), F(3, 10), F(1, 20)])
    assert not detailed_balance(bad, stationary(bad))


def test_kolmogorov_examples():
    assert kolmogorov(transition_matrix(DeltaAB(4, 2), 4))
    assert not kolmogorov(lambda_walk([F(1), F(3, 5), F(3, 10), F(1, 20)]))
    assert kolmogorov([[F(1, 2), F(1, 2)], [F(1, 3), F(2, 3)]])
    # reducible but without transient states: trivially reversible
    assert kolmogorov([[F(1), F(0)], [F(0), F(1)]])


def test_kolmogorov_needs_positive_stationary():
    from involute.errors import NoPositiveStationary

    with pytest.raises(NoPositiveStationary):
        kolmogorov([[F(1), F(0)], [F(1, 2), F(1, 2)]])


def test_kolmogorov_cap_and_sampling():
    lam = [F(1)] + [F(1, k) for k in range(2, 15)]
    w = lambda_walk(lam)
    with pytest.raises(OutOfRange):
        kolmogorov(w)
    assert kolmogorov(w, samples=200, seed=7)
    bad = lambda_walk([F(1), F(3, 5), F(3, 10), F(1, 20)])
    assert not kolmogorov(bad, samples=500, seed=1)


def test_kolmogorov_iff_detailed_balance():
    rng = random.Random(414)
    cases = [transition_matrix(GammaAB(0, 0), n).P for n in (3, 4, 5, 6)]
    cases += [transition_matrix(DeltaAB(4, 2), 4).P]
    for n in (3, 4, 5, 6):
        for _ in range(12):
            cases.append(pl_matrix(random_stochastic_lambda(n, rng)))
    for p in cases:
        report = ergodicity(p)
        if not report.ergodic:
            continue
        db = detailed_balance(p, stationary(p))
        assert kolmogorov(p) == db
        assert reversible_with_some_distribution(p)[0] == db


def test_simulate_deterministic_flip():
    flip = WalkMatrix.from_p([[0, 1], [1, 0]])
    result = simulate(flip, 0, 5, seed=99)
    assert result.trajectory == [0, 1, 0, 1, 0, 1]


def test_simulate_reaches_stationary():
    w = transition_matrix(GammaAB(0, 0), 4)
    result = simulate(w, 0, 10**6, seed=12345)
    pi = [0.1, 0.2, 0.3, 0.4]
    assert total_variation(result.empirical, pi) < 0.01


def test_simulate_seed_independence_of_long_run():
    w = transition_matrix(GammaC(2), 4)
    r1 = simulate(w, 3, 200_000, seed=1)
    r2 = simulate(w, 3, 200_000, seed=2)
    assert r1.trajectory[:2000] != r2.trajectory[:2000]
    assert total_variation(r1.empirical, r2.empirical) < 0.02


def test_two_step_examples():
    w = transition_matrix(GammaAB(0, 0), 2)
    assert two_step(w) == rows([["1/2", "1/2"], ["1/4", "3/4"]])
    flip = WalkMatrix.from_p([[0, 1], [1, 0]])
    assert two_step(flip) == la.identity(2)


def test_two_step_eigenvalues_are_squares():
    from involute.spectral import eigenvalues_closed_form

    for spec in (GammaAB(0, 0), GammaAB(1, 0), GammaC(F(1, 2)), DeltaAB(5, 3)):
        for n in (3, 4, 5):
            w = transition_matrix(spec, n)
            values = eigenvalues_closed_form(spec, n)
            assert la.charpoly(two_step(w)) == la.poly_from_roots([v * v for v in values])


def test_subset_walk_m1():
    sub = subset_walk(1, F(1, 2))
    assert sub.walk.P == rows([[0, 1], ["1/2", "1/2"]])
    assert sub.pi.weights == [F(1, 3), F(2, 3)]
    assert sub.eigenvalues == [F(1), F(-1, 2)]


def test_subset_walk_m2():
    sub = subset_walk(2, F(1, 2))
    assert sub.pi.weights == [F(1, 9), F(2, 9), F(2, 9), F(4, 9)]
    assert sorted(sub.eigenvalues) == sorted([F(1), F(-1, 2), F(-1, 2), F(1, 4)])
    # charpoly agrees with the closed-form multiset
    assert la.charpoly(sub.walk.P) == la.poly_from_roots(sub.eigenvalues)


def test_subset_walk_multiplicity():
    sub = subset_walk(3, F(1, 3))
    assert sub.eigenvalues.count(F(-1, 3)) == 3
    assert stationary(sub.walk).weights == sub.pi.weights
    assert detailed_balance(sub.walk, sub.pi)


def test_custom_weight_walk_roundtrip():
    table = {(0, 0): F(2), (0, 1): F(1), (1, 1): F(3)}
    w = transition_matrix(Custom(2, table), 2)
    assert w.P == rows([[0, 1], ["3/4", "1/4"]])


@given(
    st.integers(min_value=2, max_value=6).flatmap(
        lambda n: st.lists(
            st.fractions(min_value=0, max_value=4, max_denominator=6),
            min_size=n * (n + 1) // 2,
            max_size=n * (n + 1) // 2,
        ).map(lambda vals: (n, vals))
    )
)
@settings(max_examples=40)
def test_every_weight_gives_anti_triangular_stochastic_walk(case):
    n, vals = case
    table = {}
    it = iter(vals)
    for x in range(n):
        for y in range(x + 1):
            table[(y, x)] = next(it)
    try:
        spec = Custom(n, table)
    except Exception:
        assume(False)
    w = transition_matrix(spec, n)
    assert all(sum(row) == 1 for row in w.P)
    assert all(v >= 0 for row in w.P for v in row)
    assert all(w.P[x][z] == 0 for x in range(n) for z in range(n - 1 - x))
    report = ergodicity(w)
    if report.irreducible:
        pi = stationary(w)
        assert la.vecmat(pi.weights, w.P) == pi.weights
        if report.ergodic:
            assert detailed_balance(w, pi) == kolmogorov(w)
