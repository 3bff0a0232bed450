"""Interval weights on finite total orders and their named families.

A weight assigns a non-negative rational to every interval [y, x] of
{0, ..., n-1}, with positive column sums N_x = sum_{y <= x} w[y, x].  The
three named families are

    gamma(a, b)[y, x] = binom(y+a, y) * binom(b+x-y, x-y)      (a, b > -1)
    gamma(c)[y, x]    = binom(x, y) * c^(x-y)                  (c > 0)
    delta(a', b')[y, x] = binom(a'-1, y) * binom(b'-1, x-y)    (a', b' > 1)

gamma(a, b) and gamma(c) are strictly positive on every n; delta lives on a
bounded domain that depends on whether b' is an integer.  A weight is atomic
when it only depends on the lower endpoint and star-symmetric when it is
invariant under the order anti-involution [y, x] -> [x*, y*], x* = n-1-x.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Union

from .errors import IndexOutOfDomain, MalformedWeight, OutOfRange, UnsupportedFamily
from .exactnum import as_rational, binom
from .serialize import parse_rational

UNBOUNDED = math.inf


@dataclass(frozen=True)
class GammaAB:
    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", as_rational(self.a))
        object.__setattr__(self, "b", as_rational(self.b))
        if self.a <= -1 or self.b <= -1:
            raise OutOfRange(f"gamma(a,b) needs a, b > -1, got ({self.a}, {self.b})")


@dataclass(frozen=True)
class GammaC:
    c: Fraction

    def __post_init__(self):
        object.__setattr__(self, "c", as_rational(self.c))
        if self.c <= 0:
            raise OutOfRange(f"gamma(c) needs c > 0, got {self.c}")


@dataclass(frozen=True)
class DeltaAB:
    a_prime: Fraction
    b_prime: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a_prime", as_rational(self.a_prime))
        object.__setattr__(self, "b_prime", as_rational(self.b_prime))
        if self.a_prime <= 1 or self.b_prime <= 1:
            raise OutOfRange(
                f"delta(a',b') needs a', b' > 1, got ({self.a_prime}, {self.b_prime})"
            )


@dataclass(frozen=True)
class Custom:
    """Dense weight table on {0,...,n-1}; missing intervals default to 0."""

    n: int
    table: Mapping[tuple[int, int], Fraction] = field(hash=False)

    def __post_init__(self):
        if self.n < 1:
            raise OutOfRange("custom weight needs n >= 1")
        clean = {}
        for (y, x), v in self.table.items():
            if not (0 <= y <= x < self.n):
                raise IndexOutOfDomain(f"interval ({y},{x}) outside 0 <= y <= x < {self.n}")
            v = as_rational(v)
            if v < 0:
                raise MalformedWeight(f"negative weight {v} at interval ({y},{x})")
            clean[(y, x)] = v
        object.__setattr__(self, "table", clean)
        for x in range(self.n):
            if sum(clean.get((y, x), Fraction(0)) for y in range(x + 1)) <= 0:
                raise MalformedWeight(f"column sum N_{x} is not positive")


WeightSpec = Union[GammaAB, GammaC, DeltaAB, Custom]


@dataclass(frozen=True)
class WeightFlags:
    atomic: bool
    star_symmetric: bool
    strictly_positive: bool


@dataclass(frozen=True)
class FactorizationResult:
    """Atomic part alpha, star-symmetric part beta, with alpha_y*beta[y,x]=w[y,x]."""

    alpha: list
    beta: dict
    valid: bool


def domain_limit(spec: WeightSpec):
    """Largest n the weight is defined on, or UNBOUNDED.

    For delta the decisive criterion is a sign scan of the actual values
    (strict positivity for non-integer b', non-negativity plus a positive
    diagonal for integer b'); the ceiling formulas are only a bound.
    """
    if isinstance(spec, (GammaAB, GammaC)):
        return UNBOUNDED
    if isinstance(spec, Custom):
        return spec.n
    return _delta_domain(spec)


def _delta_value(spec: DeltaAB, y: int, x: int) -> Fraction:
    return binom(spec.a_prime - 1, y) * binom(spec.b_prime - 1, x - y)


def _delta_domain(spec: DeltaAB) -> int:
    integer_b = spec.b_prime.denominator == 1
    cap = math.ceil(spec.a_prime) + 1

    def admits(n: int) -> bool:
        for x in range(n):
            if _delta_value(spec, x, x) <= 0:
                return False
            for y in range(x + 1):
                v = _delta_value(spec, y, x)
                if v < 0 or (v == 0 and not integer_b):
                    return False
        return True

    n = 1
    while n < cap and admits(n + 1):
        n += 1
    return n


def weight_value(spec: WeightSpec, y: int, x: int) -> Fraction:
    """Exact value of the weight on the interval [y, x]."""
    if y < 0 or y > x:
        raise IndexOutOfDomain(f"need 0 <= y <= x, got y={y}, x={x}")
    if x >= domain_limit(spec):
        raise IndexOutOfDomain(f"x={x} is outside the weight's domain")
    if isinstance(spec, GammaAB):
        return binom(spec.a + y, y) * binom(spec.b + x - y, x - y)
    if isinstance(spec, GammaC):
        return binom(x, y) * spec.c ** (x - y)
    if isinstance(spec, DeltaAB):
        return _delta_value(spec, y, x)
    return spec.table.get((y, x), Fraction(0))


def norm(spec: WeightSpec, x: int) -> Fraction:
    """Column sum N_x = sum_{y <= x} weight[y, x], by closed form when named."""
    if x < 0 or x >= domain_limit(spec):
        raise IndexOutOfDomain(f"x={x} is outside the weight's domain")
    if isinstance(spec, GammaAB):
        return binom(x + spec.a + spec.b + 1, x)
    if isinstance(spec, GammaC):
        return (spec.c + 1) ** x
    if isinstance(spec, DeltaAB):
        return binom((spec.a_prime - 1) + (spec.b_prime - 1), x)
    return sum(spec.table.get((y, x), Fraction(0)) for y in range(x + 1))


def classify_weight(spec: WeightSpec, n: int) -> WeightFlags:
    """Decide atomic / star-symmetric / strictly positive by exhaustive check."""
    if n > domain_limit(spec):
        raise IndexOutOfDomain(f"n={n} exceeds the weight's domain")
    atomic = True
    star = True
    positive = True
    for x in range(n):
        for y in range(x + 1):
            v = weight_value(spec, y, x)
            if v <= 0:
                positive = False
            if v != weight_value(spec, y, y):
                atomic = False
            ys, xs = n - 1 - x, n - 1 - y
            if v != weight_value(spec, ys, xs):
                star = False
    return WeightFlags(atomic, star, positive)


def factorize(spec: WeightSpec, n: int, pi) -> FactorizationResult:
    """Split the weight into an atomic part alpha and a candidate beta.

    alpha_y is proportional to pi_{y*} / N_{y*}, the unique atomic part that
    can work when the walk is reversible with respect to pi; the scalar gauge
    is fixed by alpha_0 = weight[0, 0].  valid reports whether beta = w/alpha
    came out star-symmetric, which happens exactly when the walk is
    reversible with respect to pi.
    """
    if n > domain_limit(spec):
        raise IndexOutOfDomain(f"n={n} exceeds the weight's domain")
    pi = [as_rational(p) for p in pi]
    if len(pi) != n or any(p <= 0 for p in pi):
        raise OutOfRange("pi must be a strictly positive vector of length n")
    norms = [norm(spec, x) for x in range(n)]
    if any(nx == 0 for nx in norms):
        raise MalformedWeight("a column sum N_x vanishes")
    alpha = [pi[n - 1 - y] / norms[n - 1 - y] for y in range(n)]
    scale = weight_value(spec, 0, 0) / alpha[0]
    alpha = [a * scale for a in alpha]
    beta = {}
    for x in range(n):
        for y in range(x + 1):
            beta[(y, x)] = weight_value(spec, y, x) / alpha[y]
    valid = all(
        beta[(y, x)] == beta[(n - 1 - x, n - 1 - y)] for x in range(n) for y in range(x + 1)
    )
    return FactorizationResult(alpha, beta, valid)


def custom_from_csv(text: str, n: int | None = None) -> Custom:
    """Load a custom weight from CSV rows 'y,x,p/q' (header line tolerated)."""
    table: dict[tuple[int, int], Fraction] = {}
    max_x = -1
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        parts = [p.strip() for p in line.split(",")]
        if len(parts) != 3:
            raise MalformedWeight(f"expected 'y,x,p/q', got {line!r}")
        try:
            y, x = int(parts[0]), int(parts[1])
        except ValueError:
            if table:
                raise MalformedWeight(f"bad row {line!r}")
            continue  # header
        table[(y, x)] = parse_rational(parts[2])
        max_x = max(max_x, x)
    if n is None:
        n = max_x + 1
    return Custom(n, table)


def custom_from_down_step(h_rows) -> Custom:
    """Wrap a lower-triangular down-step matrix as a custom weight table."""
    n = len(h_rows)
    table = {(y, x): as_rational(h_rows[x][y]) for x in range(n) for y in range(x + 1)}
    return Custom(n, table)


def spec_label(spec: WeightSpec) -> str:
    if isinstance(spec, GammaAB):
        return f"gamma({spec.a},{spec.b})"
    if isinstance(spec, GammaC):
        return f"gamma({spec.c})"
    if isinstance(spec, DeltaAB):
        return f"delta({spec.a_prime},{spec.b_prime})"
    return f"custom(n={spec.n})"


def require_named(spec: WeightSpec):
    if isinstance(spec, Custom):
        raise UnsupportedFamily("no closed form for custom weight tables")
