"""Exact Genocchi and Bernoulli numbers, computed by independent routes.

The signed Genocchi numbers G_2, G_4, G_6, ... = -1, 1, -3, 17, -155, 2073,
... (OEIS A001469) are the even-index coefficients of the exponential
generating function 2t/(e^t + 1).  Four constructions are provided:

* ``genocchi_by_series`` -- expand 2t/(e^t + 1) as a truncated power series
  over exact rationals and read the coefficients off directly;
* ``genocchi_by_recursion_even`` -- the recursion
  G_{2n} = -n - (1/2) * sum_{k<n} C(2n, 2k) G_{2k};
* ``genocchi_by_recursion_odd`` -- the recursion
  G_{2n} = -1 - sum_{k<n} C(2n, 2k-1) G_{2k}/(2k);
* ``genocchi_by_bernoulli`` -- the scaling G_{2n} = 2(1 - 2^{2n}) B_{2n} of
  the Bernoulli numbers (B_1 = -1/2 convention).

The four tables must agree entry by entry; `dumont_count` adds a fifth,
combinatorial route for small indices.  All arithmetic uses ``int`` and
``fractions.Fraction``, so every result is exact.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

__all__ = [
    "G1",
    "DEFAULT_DUMONT_LIMIT",
    "SelfCheckError",
    "InsufficientTableError",
    "GenocchiTable",
    "BernoulliTable",
    "binomial",
    "genocchi_by_series",
    "genocchi_by_recursion_even",
    "genocchi_by_recursion_odd",
    "bernoulli",
    "genocchi_by_bernoulli",
    "dumont_count",
    "ratio_identity_residual",
    "reciprocal_identity_residual",
]

#: The only nonzero odd-index Genocchi number: 2t/(e^t+1) = t + even terms.
G1 = 1

#: Largest n accepted by dumont_count unless the caller raises the limit
#: (n = 5 means enumerating 10! ~ 3.6M permutations).
DEFAULT_DUMONT_LIMIT = 5


class SelfCheckError(ArithmeticError):
    """An internal consistency check failed.

    Raised when a quantity that must be an integer carries a denominator,
    or when a structurally guaranteed identity fails to hold.  Signals an
    implementation bug, never bad input.
    """


class InsufficientTableError(ValueError):
    """A Genocchi lookup needs indices beyond what the table covers."""


def binomial(n: int, k: int) -> int:
    """C(n, k), with the convention C(n, k) = 0 for k < 0 or k > n.

    Requires n >= 0.  The zero convention lets identity sums be written
    without range guards.
    """
    if n < 0:
        raise ValueError(f"binomial: n must be nonnegative, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def _as_int(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise SelfCheckError(f"{what} must be an integer, got {value}")
    return value.numerator


@dataclass(frozen=True)
class GenocchiTable:
    """Genocchi numbers G_2 .. G_{max_index}, tagged with the producing method."""

    max_index: int
    values: Mapping[int, int]
    method: str

    def genocchi(self, index: int) -> int:
        """G_index for any index covered by the table.

        Odd indices are served from the generating function itself:
        G_1 = 1 and G_{2n+1} = 0 for n >= 1.  Even indices above
        ``max_index`` raise InsufficientTableError.
        """
        if index < 0:
            raise ValueError(f"Genocchi index must be nonnegative, got {index}")
        if index == 0:
            return 0
        if index == 1:
            return G1
        if index % 2 == 1:
            return 0
        if index > self.max_index:
            raise InsufficientTableError(
                f"table ({self.method}) covers indices through {self.max_index}, "
                f"need {index}"
            )
        return self.values[index]


@dataclass(frozen=True)
class BernoulliTable:
    """Bernoulli numbers B_0 .. B_{max_index} under the B_1 = -1/2 convention."""

    max_index: int
    values: Mapping[int, Fraction]

    def bernoulli(self, index: int) -> Fraction:
        if not 0 <= index <= self.max_index:
            raise InsufficientTableError(
                f"table covers indices 0..{self.max_index}, need {index}"
            )
        return self.values[index]


def _require_positive(N: int) -> None:
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")


def _series_quotient(num: list[Fraction], den: list[Fraction]) -> list[Fraction]:
    """Truncated quotient of two dense rational power series.

    Standard long division: the i-th quotient coefficient is solved from
    the i-th coefficient of quotient * denominator.  The denominator must
    have a nonzero constant term.
    """
    q: list[Fraction] = []
    lead = den[0]
    for i in range(len(num)):
        acc = num[i]
        for j in range(i):
            acc -= q[j] * den[i - j]
        q.append(acc / lead)
    return q


def genocchi_by_series(N: int) -> GenocchiTable:
    """G_2 .. G_{2N} from the power-series expansion of 2t/(e^t + 1).

    The exponential is expanded term by term from factorials, the quotient
    is computed by long division, and G_{2n} = (2n)! * [t^{2n}].  The odd
    part of the quotient is checked on the way out: [t^1] must equal 1 and
    every higher odd coefficient through t^{2N+1} must vanish.
    """
    _require_positive(N)
    degree = 2 * N + 1
    den = [Fraction(2)] + [Fraction(1, math.factorial(j)) for j in range(1, degree + 1)]
    num = [Fraction(0)] * (degree + 1)
    num[1] = Fraction(2)
    q = _series_quotient(num, den)
    if q[1] != 1:
        raise SelfCheckError(f"[t^1] of 2t/(e^t+1) must be 1, got {q[1]}")
    for n in range(1, N + 1):
        if q[2 * n + 1] != 0:
            raise SelfCheckError(
                f"[t^{2 * n + 1}] of 2t/(e^t+1) must vanish, got {q[2 * n + 1]}"
            )
    values = {
        2 * n: _as_int(q[2 * n] * math.factorial(2 * n), f"G_{2 * n}")
        for n in range(1, N + 1)
    }
    return GenocchiTable(max_index=2 * N, values=values, method="series")


def genocchi_by_recursion_even(N: int) -> GenocchiTable:
    """G_2 .. G_{2N} via G_{2n} = -n - (1/2) sum_{k=1}^{n-1} C(2n, 2k) G_{2k}."""
    _require_positive(N)
    values: dict[int, int] = {}
    for n in range(1, N + 1):
        acc = sum(binomial(2 * n, 2 * k) * values[2 * k] for k in range(1, n))
        g = Fraction(-n) - Fraction(acc, 2)
        values[2 * n] = _as_int(g, f"G_{2 * n}")
    return GenocchiTable(max_index=2 * N, values=values, method="recursion-even")


def genocchi_by_recursion_odd(N: int) -> GenocchiTable:
    """G_2 .. G_{2N} via G_{2n} = -1 - sum_{k=1}^{n-1} C(2n, 2k-1) G_{2k}/(2k)."""
    _require_positive(N)
    values: dict[int, int] = {}
    for n in range(1, N + 1):
        acc = Fraction(-1)
        for k in range(1, n):
            acc -= Fraction(binomial(2 * n, 2 * k - 1) * values[2 * k], 2 * k)
        values[2 * n] = _as_int(acc, f"G_{2 * n}")
    return GenocchiTable(max_index=2 * N, values=values, method="recursion-odd")


def bernoulli(M: int) -> BernoulliTable:
    """B_0 .. B_M via the convolution sum_{j=0}^{m} C(m+1, j) B_j = 0.

    Solving the convolution for B_m with B_0 = 1 forces B_1 = -1/2 (the
    convention under which the Genocchi scaling below holds) and B_m = 0
    for odd m >= 3.
    """
    if M < 0:
        raise ValueError(f"M must be >= 0, got {M}")
    values: dict[int, Fraction] = {0: Fraction(1)}
    for m in range(1, M + 1):
        acc = sum(binomial(m + 1, j) * values[j] for j in range(m))
        values[m] = Fraction(-acc, m + 1)
    return BernoulliTable(max_index=M, values=values)


def genocchi_by_bernoulli(N: int) -> GenocchiTable:
    """G_2 .. G_{2N} via G_{2n} = 2 (1 - 2^{2n}) B_{2n}."""
    _require_positive(N)
    table = bernoulli(2 * N)
    values = {
        2 * n: _as_int(2 * (1 - 4**n) * table.bernoulli(2 * n), f"G_{2 * n}")
        for n in range(1, N + 1)
    }
    return GenocchiTable(max_index=2 * N, values=values, method="bernoulli")


def dumont_count(n: int, limit: int = DEFAULT_DUMONT_LIMIT) -> int:
    """Count permutations tau of {1, ..., 2n} with tau(i) > i exactly at odd i.

    Exhaustive enumeration of all (2n)! permutations; the count equals
    |G_{2n+2}|.  ``limit`` caps n because the enumeration is factorial
    (the default allows 10! ~ 3.6M permutations, a few seconds).
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > limit:
        raise ValueError(
            f"n = {n} exceeds the brute-force limit {limit}; "
            f"raise `limit` explicitly to enumerate (2n)! permutations"
        )
    size = 2 * n
    positions = range(size)
    # 1-based position i = pos + 1 is odd exactly when pos is even.
    count = 0
    for perm in itertools.permutations(range(1, size + 1)):
        if all((perm[pos] > pos + 1) == (pos % 2 == 0) for pos in positions):
            count += 1
    return count


def ratio_identity_residual(n: int, table: GenocchiTable) -> Fraction:
    """Residual of the weighted-ratio identity among Genocchi numbers.

    Returns ((2n-1)/n) G_{2n}
            + (1/2) sum_{k=1}^{n-1} C(2n-1, 2k-1) ((2k-1)/k) G_{2k},
    which is exactly zero for every n >= 2.
    """
    if n < 2:
        raise ValueError(f"identity requires n >= 2, got {n}")
    lead = Fraction((2 * n - 1) * table.genocchi(2 * n), n)
    acc = Fraction(0)
    for k in range(1, n):
        acc += Fraction(
            binomial(2 * n - 1, 2 * k - 1) * (2 * k - 1) * table.genocchi(2 * k), k
        )
    return lead + acc / 2


def reciprocal_identity_residual(n: int, table: GenocchiTable) -> Fraction:
    """Residual of the reciprocal-weight identity among Genocchi numbers.

    Returns 1 + sum_{k=1}^{n-1} C(2n-2, 2k-1) G_{2k}/(2k), which is exactly
    zero for every n >= 2.
    """
    if n < 2:
        raise ValueError(f"identity requires n >= 2, got {n}")
    acc = Fraction(1)
    for k in range(1, n):
        acc += Fraction(binomial(2 * n - 2, 2 * k - 1) * table.genocchi(2 * k), 2 * k)
    return acc
