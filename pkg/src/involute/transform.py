"""Pascal matrices, binomial transforms and anti-diagonal eigenvalue checks.

The binomial transform of a sequence lambda_0, ..., lambda_{n-1} is the
lower-triangular matrix

    H[x][y] = binom(x, y) * sum_e (-1)^e binom(x-y, e) lambda_{y+e}
            = (B Diag(lambda) B^{-1})[x][y],

where B is the Pascal matrix B[x][y] = binom(x, y).  Its anti-triangular
companion P = H J is stochastic exactly when lambda_0 = 1 and the n
alternating sums sum_e (-1)^e binom(z, e) lambda_{z*+e} are non-negative.

A lower-triangular L has the anti-diagonal eigenvalue property (ADEP) when
the eigenvalues of L J are (-1)^d L[d][d]; the global variant (GADEP) asks
the same of every top-left submatrix.  Binomial transforms always have
GADEP; the parametrized counterexample matrices show the converse fails.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import _linalg as la
from .errors import NotStochastic, OutOfRange
from .exactnum import as_rational, binom
from .walk import WalkMatrix, ergodicity

CROSSCHECK_CAP = 16


@dataclass
class PascalMatrix:
    n: int
    forward: list  # binom(x, y)
    inverse: list  # (-1)^(x+y) binom(x, y)


def pascal(n: int) -> PascalMatrix:
    fwd = [[binom(x, y) for y in range(n)] for x in range(n)]
    inv = [[(-1) ** (x + y) * binom(x, y) for y in range(n)] for x in range(n)]
    return PascalMatrix(n, fwd, inv)


def pascal_column(n: int, d: int) -> list:
    """v(d): the column vector (binom(0,d), ..., binom(n-1,d))."""
    return [binom(x, d) for x in range(n)]


def _coerce_lambda(lam) -> list:
    lam = [as_rational(v) for v in lam]
    if not lam:
        raise OutOfRange("need at least one eigenvalue")
    return lam


def binomial_transform(lam) -> list:
    """Lower-triangular H with diagonal lambda; exact rational entries."""
    lam = _coerce_lambda(lam)
    n = len(lam)
    h = la.zeros(n)
    for x in range(n):
        for y in range(x + 1):
            s = sum((-1) ** e * binom(x - y, e) * lam[y + e] for e in range(x - y + 1))
            h[x][y] = binom(x, y) * s
    if n <= CROSSCHECK_CAP:
        b = pascal(n)
        diag = la.zeros(n)
        for d in range(n):
            diag[d][d] = lam[d]
        assert la.mat_eq(h, la.matmul(la.matmul(b.forward, diag), b.inverse))
    return h


def pl_matrix(lam) -> list:
    """P = H J: the binomial transform with its columns reversed."""
    h = binomial_transform(lam)
    n = len(h)
    return [[h[x][n - 1 - z] for z in range(n)] for x in range(n)]


@dataclass(frozen=True)
class StochasticCheck:
    ok: bool
    witness: int | None = None  # failing index z, if any
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def is_stochastic(lam) -> StochasticCheck:
    """Stochasticity of P^lambda via the n alternating-sum inequalities."""
    lam = _coerce_lambda(lam)
    n = len(lam)
    if lam[0] != 1:
        return StochasticCheck(False, None, f"lambda_0 = {lam[0]} != 1")
    for z in range(n):
        s = sum((-1) ** e * binom(z, e) * lam[n - 1 - z + e] for e in range(z + 1))
        if s < 0:
            return StochasticCheck(False, z, f"alternating sum at z={z} is {s} < 0")
    if n <= CROSSCHECK_CAP:
        p = pl_matrix(lam)
        assert all(v >= 0 for row in p for v in row)
        assert all(sum(row) == 1 for row in p)
    return StochasticCheck(True)


def is_ergodic_lambda(lam) -> bool:
    """Ergodicity of the walk P^lambda, decided on its support graph.

    Equivalent, for n >= 3, to state 0 being accessible from everywhere;
    the strictly-decreasing-then-constant eigenvalue structure with a tail
    of length at most n/2 is asserted whenever the answer is True.
    """
    lam = _coerce_lambda(lam)
    n = len(lam)
    if lam[0] != 1:
        raise NotStochastic("lambda_0 != 1, not a walk at all")
    p = pl_matrix(lam)
    if not _zero_accessible(p):
        return False
    if not is_stochastic(lam):
        raise NotStochastic("lambda fails the stochasticity inequalities")
    report = ergodicity(p)
    if report.ergodic and n >= 3:
        s = 1
        while s < n and lam[n - 1 - s] == lam[n - 1]:
            s += 1
        assert 2 * s <= n and lam[n - 1] > 0
        assert all(lam[d] > lam[d + 1] for d in range(n - s))
    return report.ergodic


def _zero_accessible(p_rows) -> bool:
    n = len(p_rows)
    reach_0 = {0}
    changed = True
    while changed:
        changed = False
        for x in range(n):
            if x not in reach_0 and any(p_rows[x][z] != 0 and z in reach_0 for z in range(n)):
                reach_0.add(x)
                changed = True
    return len(reach_0) == n


def _require_lower_triangular(m) -> list:
    rows = [[as_rational(v) for v in row] for row in m]
    if not la.is_lower_triangular(rows):
        raise OutOfRange("matrix must be lower-triangular")
    return rows


def check_adep(m) -> bool:
    """Anti-diagonal eigenvalue property, as an exact char-poly multiset test.

    charpoly(L J) is compared with prod_d (X - (-1)^d L[d][d]); this does not
    verify diagonalizability of L J, so repeated eigenvalues are accepted on
    multiset evidence alone.
    """
    rows = _require_lower_triangular(m)
    n = len(rows)
    lj = la.matmul(rows, la.antidiag(n))
    target = la.poly_from_roots([(-1) ** d * rows[d][d] for d in range(n)])
    return la.charpoly(lj) == target


def check_gadep(m) -> bool:
    rows = _require_lower_triangular(m)
    return all(check_adep(la.top_left(rows, k)) for k in range(1, len(rows) + 1))


def is_binomial_transform(m) -> bool:
    """True iff every Pascal column v(d) is an eigenvector: L v(d) = L[d][d] v(d)."""
    rows = _require_lower_triangular(m)
    n = len(rows)
    for d in range(n):
        v = pascal_column(n, d)
        if la.matvec(rows, v) != [rows[d][d] * x for x in v]:
            return False
    return True


def check_conjugator(q, global_check: bool = False) -> bool:
    """Anti-diagonal conjugator test: Q^{-1} J Q upper-triangular with
    diagonal (-1)^x; the global variant checks every top-left submatrix."""
    rows = [[as_rational(v) for v in row] for row in q]
    n = len(rows)
    sizes = range(1, n + 1) if global_check else [n]
    for k in sizes:
        sub = la.top_left(rows, k)
        conj = la.matmul(la.matmul(la.inverse(sub), la.antidiag(k)), sub)
        if not la.is_upper_triangular(conj):
            return False
        if any(conj[x][x] != (-1) ** x for x in range(k)):
            return False
    return True


@dataclass
class PropertyReport:
    adep: bool
    gadep: bool
    eigenbasis_action: bool
    is_binomial_transform: bool
    witness: object = None  # failing submatrix size or (row, col) pair

    def to_dict(self) -> dict:
        return {
            "adep": self.adep,
            "gadep": self.gadep,
            "eigenbasis_action": self.eigenbasis_action,
            "is_binomial_transform": self.is_binomial_transform,
            "witness": self.witness,
        }


def property_report(m) -> PropertyReport:
    rows = _require_lower_triangular(m)
    n = len(rows)
    adep = check_adep(rows)
    witness = None
    gadep = True
    for k in range(1, n + 1):
        if not check_adep(la.top_left(rows, k)):
            gadep = False
            witness = k
            break
    ibt = is_binomial_transform(rows)
    if gadep and not ibt and witness is None:
        # locate the first entry disagreeing with the transform of the diagonal
        expected = binomial_transform([rows[d][d] for d in range(n)])
        witness = next(
            (x, y) for x in range(n) for y in range(x + 1) if rows[x][y] != expected[x][y]
        )
    # a full eigenbasis of Pascal columns is exactly global eigenbasis action
    report = PropertyReport(adep, gadep, ibt, ibt, witness)
    assert not (report.is_binomial_transform and not report.gadep)
    assert not (report.gadep and not report.adep)
    return report


def gadep_counterexample(which: str, tau) -> list:
    """Parametrized matrices with GADEP that are not binomial transforms.

    'L4' is 4x4 with eigenvalues (1, 2/3, 1/4, 1/5); 'H5' is 5x5 stochastic
    with eigenvalues (1, 1/2, 1/2-tau, 1/2-tau, 1/2-2tau).  At tau = 0 both
    degenerate to actual binomial transforms.
    """
    t = as_rational(tau)
    F = Fraction
    if which == "L4":
        return [
            [F(1), F(0), F(0), F(0)],
            [F(1, 3), F(2, 3), F(0), F(0)],
            [F(-1, 12), F(5, 6), F(1, 4), F(0)],
            [F(-9, 20), F(11, 10) + F(4, 5) * t, F(3, 20) + F(1, 5) * t, F(1, 5)],
        ]
    if which == "H5":
        half = F(1, 2)
        return [
            [F(1), F(0), F(0), F(0), F(0)],
            [half, half, F(0), F(0), F(0)],
            [half - t, 2 * t, half - t, F(0), F(0)],
            [half - 2 * t, 3 * t, F(0), half - t, F(0)],
            [half - 4 * t, 5 * t, F(0), t, half - 2 * t],
        ]
    raise OutOfRange(f"unknown counterexample {which!r}; use 'L4' or 'H5'")


def lambda_walk(lam) -> WalkMatrix:
    """P^lambda wrapped as a WalkMatrix; raises NotStochastic when invalid."""
    check = is_stochastic(lam)
    if not check:
        raise NotStochastic(check.reason)
    return WalkMatrix.from_p(pl_matrix(lam))


def random_stochastic_lambda(n: int, rng, max_weight: int = 60) -> list:
    """Draw a stochastic eigenvalue sequence by sampling the bottom row.

    The bottom row of H determines non-negativity of the whole matrix and
    carries lambda triangularly, so a random point of the simplex maps to a
    uniform-ish stochastic sequence with lambda_0 = 1 automatically.
    """
    while True:
        weights = [rng.randint(0, max_weight) for _ in range(n)]
        if any(weights):
            break
    total = sum(weights)
    bottom = [Fraction(w, total) for w in weights]
    lam: list = [Fraction(0)] * n
    for y in range(n - 1, -1, -1):
        s = bottom[y] / binom(n - 1, y)
        tail = sum((-1) ** e * binom(n - 1 - y, e) * lam[y + e] for e in range(1, n - y))
        lam[y] = s - tail
    assert lam[0] == 1
    return lam


def lambda_grid(n: int, max_denominator: int) -> "itertools.chain":
    """Exhaustive non-increasing grids for the stochastic region.

    Any stochastic sequence is non-increasing (consecutive differences are
    entries of H up to positive factors), so enumerating non-increasing
    tuples over the Farey fractions of bounded denominator covers every
    stochastic grid point.
    """
    values = sorted(
        {Fraction(p, q) for q in range(1, max_denominator + 1) for p in range(q + 1)},
        reverse=True,
    )
    def tuples():
        for combo in itertools.combinations_with_replacement(values, n - 1):
            yield [Fraction(1), *combo]
    return tuples()
