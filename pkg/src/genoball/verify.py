"""Exact verification of interior/boundary f-vector identities on balls.

For a simplicial (n-1)-ball B with n - k even, three identities tie the
interior face counts f_k(int B) := f_k(B) - f_k(boundary B) to the
boundary counts:

* the Genocchi identity
    f_k(int B) = sum_{i=1}^{floor((n-k)/2)} (G_{2i}/(2i)) *
        (C(k+2i-1, k+1) f_{k+2i-2}(bd B) - C(k+2i, k+1) f_{k+2i-1}(int B));
* a Dehn-Sommerville variant for manifolds with boundary
    f_k(int B) = -f_k(bd B)/2
        - sum_{i=1}^{n-k-1} ((-1)^{n+k+i}/2) C(k+1+i, k+1) f_{k+i}(int B);
* for balls with no interior faces of dimension <= e and any k <= e, the
  boundary-only consequence equating the two Genocchi-weighted sums.

Every residual is an exact Fraction; a pass means literal equality with 0.
No floating point appears anywhere on the verification path.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .complexes import Complex, FVector
from .genocchi import GenocchiTable, SelfCheckError, binomial

__all__ = [
    "ParityError",
    "PreconditionError",
    "BallCheckError",
    "IdentityCheck",
    "VerificationReport",
    "genocchi_identity_residual",
    "dehn_sommerville_residual",
    "no_interior_faces_residual",
    "max_interior_free_dimension",
    "required_table_size",
    "verify_ball",
    "format_residual",
]


class ParityError(ValueError):
    """The identity only applies when n - k is even."""


class PreconditionError(ValueError):
    """The boundary-only identity needs f_k(int B) = 0."""


class BallCheckError(ValueError):
    """The complex failed the necessary-condition screen; refusing to verify."""


def _require_even_gap(n: int, k: int) -> None:
    if (n - k) % 2 != 0:
        raise ParityError(f"n - k must be even, got n={n}, k={k}")


def _checked_binomials(k: int, i: int) -> tuple[int, int]:
    """The two binomial weights of the Genocchi identity, self-tested.

    Each coefficient has an equivalent mirrored form; their equality is
    structural, so a mismatch means a broken binomial and we stop.
    """
    c_bd = binomial(k + 2 * i - 1, k + 1)
    c_int = binomial(k + 2 * i, k + 1)
    if c_bd != binomial(k + 2 * i - 1, 2 * i - 2):
        raise SelfCheckError(f"binomial symmetry broken at (k={k}, i={i})")
    if c_int != binomial(k + 2 * i, 2 * i - 1):
        raise SelfCheckError(f"binomial symmetry broken at (k={k}, i={i})")
    return c_bd, c_int


def genocchi_identity_residual(
    k: int, interior: FVector, boundary: FVector, n: int, table: GenocchiTable
) -> Fraction:
    """Left side minus right side of the Genocchi identity at dimension k.

    Out-of-range f-vector entries read as 0; for k = n the sum is empty
    and the residual is trivially zero.  Requires n - k even, 0 <= k <= n.
    """
    _require_even_gap(n, k)
    if not 0 <= k <= n:
        raise ValueError(f"k must be within 0..{n}, got {k}")
    acc = Fraction(0)
    for i in range(1, (n - k) // 2 + 1):
        c_bd, c_int = _checked_binomials(k, i)
        weight = Fraction(table.genocchi(2 * i), 2 * i)
        acc += weight * (c_bd * boundary[k + 2 * i - 2] - c_int * interior[k + 2 * i - 1])
    return interior[k] - acc


def dehn_sommerville_residual(
    k: int, interior: FVector, boundary: FVector, n: int
) -> Fraction:
    """Residual of the Dehn-Sommerville ball variant at dimension k.

    Returns f_k(int B) + f_k(bd B)/2
            + sum_{i=1}^{n-k-1} ((-1)^{n+k+i}/2) C(k+1+i, k+1) f_{k+i}(int B).
    Requires n - k even, 0 <= k <= n-2.
    """
    _require_even_gap(n, k)
    if not 0 <= k <= n - 2:
        raise ValueError(f"k must be within 0..{n - 2}, got {k}")
    acc = interior[k] + Fraction(boundary[k], 2)
    for i in range(1, n - k):
        sign = -1 if (n + k + i) % 2 else 1
        acc += Fraction(sign * binomial(k + 1 + i, k + 1) * interior[k + i], 2)
    return acc


def no_interior_faces_residual(
    k: int, interior: FVector, boundary: FVector, n: int, table: GenocchiTable
) -> Fraction:
    """Residual of the boundary-only identity for interior-free dimensions.

    With f_k(int B) = 0 the Genocchi identity decouples into
        sum_i (G_{2i}/(2i)) C(k+2i-1, k+1) f_{k+2i-2}(bd B)
      = sum_i (G_{2i}/(2i)) C(k+2i, k+1)   f_{k+2i-1}(int B),
    both sums over 1 <= i <= floor((n-k)/2).  Returns left minus right.
    """
    _require_even_gap(n, k)
    if interior[k] != 0:
        raise PreconditionError(
            f"identity needs f_{k}(int B) = 0, got {interior[k]}"
        )
    lhs = Fraction(0)
    rhs = Fraction(0)
    for i in range(1, (n - k) // 2 + 1):
        c_bd, c_int = _checked_binomials(k, i)
        weight = Fraction(table.genocchi(2 * i), 2 * i)
        lhs += weight * c_bd * boundary[k + 2 * i - 2]
        rhs += weight * c_int * interior[k + 2 * i - 1]
    return lhs - rhs


def max_interior_free_dimension(interior: FVector) -> int:
    """Largest e with f_j(int B) = 0 for all j <= e, or -1 if f_0(int B) > 0."""
    e = -1
    while e + 1 < len(interior) and interior[e + 1] == 0:
        e += 1
    return e


def required_table_size(n: int) -> int:
    """Smallest N such that a table G_2..G_{2N} verifies an ambient-n ball."""
    return max(1, n // 2)


@dataclass(frozen=True)
class IdentityCheck:
    """One evaluated identity: which one, at which dimension, and its residual."""

    identity: str
    k: int
    residual: Fraction
    trivial: bool = False

    @property
    def passed(self) -> bool:
        return self.residual == 0


@dataclass(frozen=True)
class VerificationReport:
    """All identity checks for one ball, in deterministic order."""

    n: int
    checks: tuple[IdentityCheck, ...]
    name: str | None = None

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json_entries(self) -> list[dict]:
        """Wire form: one object per check, big integers as decimal strings."""
        return [
            {
                "identity": c.identity,
                "n": self.n,
                "k": c.k,
                "residual_numerator": str(c.residual.numerator),
                "residual_denominator": str(c.residual.denominator),
                "pass": c.passed,
            }
            for c in self.checks
        ]


def format_residual(value: Fraction) -> str:
    """Canonical text form: "0", or "p/q" with q > 0 and gcd(p, q) = 1."""
    if value == 0:
        return "0"
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def verify_ball(
    C: Complex, table: GenocchiTable, name: str | None = None
) -> VerificationReport:
    """Evaluate every applicable identity on one ball, exactly.

    The complex must pass the ball screen first; a complex that fails it
    is refused outright (BallCheckError) rather than reported pass/fail.
    Checks cover every k with 0 <= k <= n-2 and n - k even, plus the
    trivially satisfied top case k = n, plus the boundary-only identity
    for every even-gap k up to the detected interior-free dimension.
    """
    report = C.ball_check()
    if not report.ok:
        raise BallCheckError("; ".join(report.failures()))
    n = C.n
    if n == 1:
        # a single point: the boundary is the empty complex, which cannot
        # be materialized, and the only check is the trivial k = n one
        interior = C.f_vector()
        boundary = FVector(0, ())
    else:
        interior = C.interior_f_vector()
        boundary = C.boundary().f_vector()
    even_gap_ks = [k for k in range(0, n - 1) if (n - k) % 2 == 0]
    checks: list[IdentityCheck] = []
    for k in even_gap_ks:
        checks.append(
            IdentityCheck(
                "genocchi", k, genocchi_identity_residual(k, interior, boundary, n, table)
            )
        )
        checks.append(
            IdentityCheck(
                "dehn-sommerville", k, dehn_sommerville_residual(k, interior, boundary, n)
            )
        )
    checks.append(
        IdentityCheck(
            "genocchi",
            n,
            genocchi_identity_residual(n, interior, boundary, n, table),
            trivial=True,
        )
    )
    e = max_interior_free_dimension(interior)
    for k in even_gap_ks:
        if k <= e:
            checks.append(
                IdentityCheck(
                    "no-interior-faces",
                    k,
                    no_interior_faces_residual(k, interior, boundary, n, table),
                )
            )
    return VerificationReport(n=n, checks=tuple(checks), name=name)
