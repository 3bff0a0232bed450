"""Classification of globally reversible binomial-transform walks.

A stochastic P^lambda with 0 accessible and n >= 3 is globally reversible
exactly when it is a named family walk, and the family is pinned down by
the two eigenvalues mu = lambda_1 and nu = lambda_2:

    nu > mu^2            gamma(a, b) with  a = mu(mu-nu)/(nu-mu^2) - 1,
                                           b = (1-mu)(mu-nu)/(nu-mu^2) - 1
    nu = mu^2            gamma(c) with c = (1-mu)/mu
    nu_m(mu) < nu < mu^2 delta(-a, -b), valid while n <= min(ceil a', ceil b')
    nu = nu_m(mu)        delta(a'_m(mu), m), the exceptional ladder
                         nu_m(mu) = mu(m mu - 1)/(m - 2 + mu),
                         a'_m(mu) = ((m-2) mu + 1)/(1 - mu)

The ladder values nu_m(mu) increase with m and converge to mu^2.  The
classifier always re-verifies the whole eigenvalue sequence against the
candidate family, so a match is exact, never inferred from (mu, nu) alone.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .errors import NotStochastic, OutOfRange, ZeroNotAccessible
from .exactnum import as_rational
from .spectral import family_lambda
from .transform import (
    _zero_accessible,
    is_stochastic,
    lambda_grid,
    pl_matrix,
    random_stochastic_lambda,
)
from .walk import reversible_with_some_distribution
from .weights import DeltaAB, GammaAB, GammaC, WeightSpec


@dataclass(frozen=True)
class GammaABPoint:
    a: Fraction
    b: Fraction

    def weight_spec(self) -> WeightSpec:
        return GammaAB(self.a, self.b)


@dataclass(frozen=True)
class GammaCPoint:
    c: Fraction

    def weight_spec(self) -> WeightSpec:
        return GammaC(self.c)


@dataclass(frozen=True)
class DeltaRealPoint:
    a_prime: Fraction
    b_prime: Fraction

    def weight_spec(self) -> WeightSpec:
        return DeltaAB(self.a_prime, self.b_prime)


@dataclass(frozen=True)
class DeltaIntegerPoint:
    a_prime: Fraction
    m: int

    def weight_spec(self) -> WeightSpec:
        return DeltaAB(self.a_prime, Fraction(self.m))


@dataclass(frozen=True)
class IdentityWalk:
    """All eigenvalues 1: H is the identity and P is the deterministic flip J."""


@dataclass(frozen=True)
class NotClassified:
    reason: str


Classification = Union[
    GammaABPoint, GammaCPoint, DeltaRealPoint, DeltaIntegerPoint, IdentityWalk, NotClassified
]


def a_from_mu_nu(mu: Fraction, nu: Fraction) -> Fraction:
    return mu * (mu - nu) / (nu - mu * mu) - 1


def b_from_mu_nu(mu: Fraction, nu: Fraction) -> Fraction:
    return (1 - mu) * (mu - nu) / (nu - mu * mu) - 1


def nu_ladder(m: int, mu: Fraction) -> Fraction:
    return mu * (m * mu - 1) / (m - 2 + mu)


def a_prime_ladder(m: int, mu: Fraction) -> Fraction:
    return ((m - 2) * mu + 1) / (1 - mu)


def _min_ladder_m(mu: Fraction, n: int) -> int:
    return math.floor((1 - mu) / mu * (n - 2)) + 2


def params_from_mu_nu(mu, nu, n: int) -> Classification:
    """Family parameters from the second and third eigenvalues."""
    mu, nu = as_rational(mu), as_rational(nu)
    if not (1 > mu > nu >= 0):
        raise OutOfRange(f"need 1 > mu > nu >= 0, got mu={mu}, nu={nu}")
    if n < 3:
        raise OutOfRange("classification needs n >= 3")
    musq = mu * mu
    if nu > musq:
        return GammaABPoint(a_from_mu_nu(mu, nu), b_from_mu_nu(mu, nu))
    if nu == musq:
        return GammaCPoint((1 - mu) / mu)
    a_prime = -a_from_mu_nu(mu, nu)
    b_prime = -b_from_mu_nu(mu, nu)
    if b_prime.denominator == 1:
        m = int(b_prime)
        if m < 2:
            return NotClassified(f"ladder index m={m} below 2")
        if m < _min_ladder_m(mu, n) or n > math.ceil(a_prime):
            return NotClassified(f"delta({a_prime},{m}) does not reach n={n}")
        return DeltaIntegerPoint(a_prime, m)
    if n > min(math.ceil(a_prime), math.ceil(b_prime)):
        return NotClassified(f"delta({a_prime},{b_prime}) does not reach n={n}")
    return DeltaRealPoint(a_prime, b_prime)


def exceptional_ladder(mu, n: int) -> list:
    """Admissible (m, nu_m(mu), a'_m(mu)) triples, largest m first."""
    mu = as_rational(mu)
    if not Fraction(1, 2) < mu < 1:
        raise OutOfRange(f"ladder needs 1/2 < mu < 1, got {mu}")
    lo = max(2, _min_ladder_m(mu, n))
    return [(m, nu_ladder(m, mu), a_prime_ladder(m, mu)) for m in range(n - 1, lo - 1, -1)]


def _top_right_submatrix(p_rows, m: int) -> list:
    n = len(p_rows)
    return [[p_rows[x][z + n - m] for z in range(m)] for x in range(m)]


def is_globally_reversible(lam) -> bool:
    """Reversibility of every top-right submatrix walk of P^lambda.

    The m x m top-right submatrix equals P of the truncated sequence
    lambda_0..lambda_{m-1}, and truncation preserves stochasticity, so the
    check walks the truncations.
    """
    lam = [as_rational(v) for v in lam]
    check = is_stochastic(lam)
    if not check:
        raise NotStochastic(check.reason)
    p = pl_matrix(lam)
    if not _zero_accessible(p):
        raise ZeroNotAccessible("state 0 unreachable; the walk never mixes")
    for m in range(2, len(lam) + 1):
        sub = pl_matrix(lam[:m])
        assert sub == _top_right_submatrix(p, m)
        reversible, _ = reversible_with_some_distribution(sub)
        if not reversible:
            return False
    return True


def classify_walk(lam) -> Classification:
    """Identify the family walk with this eigenvalue sequence, if any.

    After the (mu, nu) case split the full sequence is verified against the
    family's closed form; any mismatch gives NotClassified.
    """
    lam = [as_rational(v) for v in lam]
    n = len(lam)
    if n < 3:
        raise OutOfRange("classification needs n >= 3")
    check = is_stochastic(lam)
    if not check:
        raise NotStochastic(check.reason)
    if all(v == 1 for v in lam):
        return IdentityWalk()
    if not _zero_accessible(pl_matrix(lam)):
        raise ZeroNotAccessible("state 0 unreachable; the walk never mixes")
    mu, nu = lam[1], lam[2]
    try:
        candidate = params_from_mu_nu(mu, nu, n)
    except OutOfRange as exc:
        return NotClassified(str(exc))
    if isinstance(candidate, NotClassified):
        return candidate
    spec = candidate.weight_spec()
    for d in range(n):
        if lam[d] != family_lambda(spec, d):
            return NotClassified(f"lambda_{d} mismatches the candidate family")
    return candidate


def classification_label(c: Classification) -> str:
    if isinstance(c, GammaABPoint):
        return f"gamma(a={c.a}, b={c.b})"
    if isinstance(c, GammaCPoint):
        return f"gamma(c={c.c})"
    if isinstance(c, DeltaRealPoint):
        return f"delta(a'={c.a_prime}, b'={c.b_prime})"
    if isinstance(c, DeltaIntegerPoint):
        return f"delta(a'={c.a_prime}, m={c.m})"
    if isinstance(c, IdentityWalk):
        return "J(n)"
    return f"not classified: {c.reason}"


@dataclass(frozen=True)
class SearchConfig:
    """Grid search for small n, seeded stochastic sampling for larger n."""

    max_denominator: int = 8
    samples: int = 1000
    seed: int = 20240
    grid_max_n: int = 5
    threads: int = 1


@dataclass
class SearchRecord:
    lam: list
    stochastic: bool
    reversible: bool
    classification: Classification | None

    def to_dict(self) -> dict:
        from .serialize import format_rational

        return {
            "lambda": [format_rational(v) for v in self.lam],
            "stochastic": self.stochastic,
            "reversible": self.reversible,
            "classification": None
            if self.classification is None
            else classification_label(self.classification),
        }


@dataclass
class SearchSummary:
    n: int
    evaluated: int
    stochastic: int
    reversible: int
    records: list = field(default_factory=list)  # stochastic candidates only

    @property
    def unclassified_reversible(self) -> list:
        return [
            r
            for r in self.records
            if r.reversible and isinstance(r.classification, NotClassified)
        ]


def _evaluate_candidates(candidates: list) -> list:
    out = []
    for lam in candidates:
        if not is_stochastic(lam):
            continue
        reversible, _ = reversible_with_some_distribution(pl_matrix(lam))
        classification = None
        if reversible:
            classification = classify_walk(lam)
        out.append(SearchRecord(lam, True, reversible, classification))
    return out


def default_threads() -> int:
    try:
        return max(1, int(os.environ.get("INVOLUTE_THREADS", "1")))
    except ValueError:
        return 1


def conjecture_search(n: int, config: SearchConfig | None = None) -> SearchSummary:
    """Sweep stochastic eigenvalue sequences and classify the reversible ones.

    For n up to config.grid_max_n the sweep is an exhaustive non-increasing
    grid over fractions of bounded denominator; beyond that it draws seeded
    random stochastic sequences.  Records cover every stochastic candidate.
    """
    if n < 3 or n > 8:
        raise OutOfRange("the desk-scale sweep covers 3 <= n <= 8")
    config = config or SearchConfig()
    if n <= config.grid_max_n:
        candidates = list(lambda_grid(n, config.max_denominator))
    else:
        import random as _random

        rng = _random.Random(config.seed + n)
        candidates = [random_stochastic_lambda(n, rng) for _ in range(config.samples)]
    threads = config.threads if config.threads > 0 else default_threads()
    if threads > 1 and len(candidates) > 512:
        chunk = (len(candidates) + threads - 1) // threads
        chunks = [candidates[i : i + chunk] for i in range(0, len(candidates), chunk)]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(_evaluate_candidates, chunks))
        records = [r for part in parts for r in part]
    else:
        records = _evaluate_candidates(candidates)
    records.sort(key=lambda r: r.lam)
    return SearchSummary(
        n=n,
        evaluated=len(candidates),
        stochastic=len(records),
        reversible=sum(1 for r in records if r.reversible),
        records=records,
    )
