"""Polynomial arithmetic and irreducibility over the prime fields F_p.

Polynomials are stored as ascending coefficient tuples with entries in
[0, p); the zero polynomial is the empty tuple and the leading entry of
a nonzero polynomial is never 0.  Moduli are validated by trial
division on construction, which is all that desk-scale moduli need.

The public `fp_*` functions operate on `PrimeFieldPolynomial` values and
insist that operand moduli match; internally everything runs on plain
coefficient lists.  Irreducibility is decided by Rabin's criterion and
double-checked elsewhere by exhaustive trial division, and the exact
count of monic irreducibles of each degree comes from the Gauss/Moebius
formula so the two routes can be compared.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import FeasibilityError
from .polynomials import MonicIntPolynomial, poly_text

DEFAULT_EXHAUSTIVE_LIMIT = 10**7

# Largest p^degree for which a full irreducibility lookup table is built.
TABLE_LIMIT = 32768


def is_prime(n: int) -> bool:
    """Trial-division primality check; fine for desk-scale moduli."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _prime_divisors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def mobius(n: int) -> int:
    """The Moebius function: 0 on squareful n, else (-1)^(number of prime factors)."""
    if n < 1:
        raise ValueError(f"mobius expects n >= 1, got {n}")
    sign = 1
    f = 2
    while f * f <= n:
        if n % f == 0:
            n //= f
            if n % f == 0:
                return 0
            sign = -sign
        f += 1
    if n > 1:
        sign = -sign
    return sign


@dataclass(frozen=True)
class PrimeFieldPolynomial:
    """A polynomial over F_p: ascending residues, empty tuple for zero."""

    modulus: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not is_prime(self.modulus):
            raise ValueError(f"not prime: {self.modulus}")
        if any(not 0 <= c < self.modulus for c in self.coeffs):
            raise ValueError("coefficients must be residues in [0, p)")
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValueError("leading residue must be nonzero (strip trailing zeros)")

    @classmethod
    def from_integers(cls, modulus: int, coeffs: Sequence[int]) -> "PrimeFieldPolynomial":
        """Reduce arbitrary integer coefficients mod p and normalize."""
        if not is_prime(modulus):
            raise ValueError(f"not prime: {modulus}")
        c = [x % modulus for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        return cls(modulus, tuple(c))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def text(self) -> str:
        return poly_text(self.coeffs)


def reduce_mod_p(f: MonicIntPolynomial, p: int) -> PrimeFieldPolynomial:
    """Coefficientwise reduction of a monic integer polynomial mod p.

    The result is monic of the same degree for every prime, since the
    leading 1 survives reduction.
    """
    return PrimeFieldPolynomial.from_integers(p, f.all_coefficients())


# --- raw list arithmetic -------------------------------------------------
# Lists are ascending with no trailing zeros; [] is the zero polynomial.


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _sub(a: list[int], b: list[int], p: int) -> list[int]:
    c = list(a) + [0] * (len(b) - len(a))
    for i, bi in enumerate(b):
        c[i] = (c[i] - bi) % p
    return _trim(c)


def _mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    c = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                c[i + j] += ai * bj
    return _trim([x % p for x in c])


def _divmod(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    if not b:
        raise ZeroDivisionError("zero divisor")
    if len(a) < len(b):
        return [], list(a)
    inv = pow(b[-1], p - 2, p)
    q = [0] * (len(a) - len(b) + 1)
    r = list(a)
    for i in range(len(q) - 1, -1, -1):
        if len(r) >= i + len(b):
            q[i] = qi = (r[i + len(b) - 1] * inv) % p
            if qi:
                for j, bj in enumerate(b):
                    r[i + j] = (r[i + j] - qi * bj) % p
            _trim(r)
    return q, r


def _mod(a: list[int], b: list[int], p: int) -> list[int]:
    return _divmod(a, b, p)[1]


def _monic(a: list[int], p: int) -> list[int]:
    if not a or a[-1] == 1:
        return a
    inv = pow(a[-1], p - 2, p)
    return [(x * inv) % p for x in a]


def _gcd(a: list[int], b: list[int], p: int) -> list[int]:
    while b:
        a, b = b, _mod(a, b, p)
    return _monic(a, p)


def _powmod(base: list[int], exp: int, modulus: list[int], p: int) -> list[int]:
    if exp < 0:
        raise ValueError("negative exponent")
    result = _mod([1], modulus, p)
    acc = _mod(base, modulus, p)
    while exp:
        if exp & 1:
            result = _mod(_mul(result, acc, p), modulus, p)
        exp >>= 1
        if exp:
            acc = _mod(_mul(acc, acc, p), modulus, p)
    return result


def _same_modulus(*polys: PrimeFieldPolynomial) -> int:
    p = polys[0].modulus
    for g in polys[1:]:
        if g.modulus != p:
            raise ValueError(f"mismatched moduli: {g.modulus} != {p}")
    return p


# --- public wrappers ------------------------------------------------------


def fp_mul(f: PrimeFieldPolynomial, g: PrimeFieldPolynomial) -> PrimeFieldPolynomial:
    """Product in F_p[x]."""
    p = _same_modulus(f, g)
    return PrimeFieldPolynomial(p, tuple(_mul(list(f.coeffs), list(g.coeffs), p)))


def fp_divmod(
    f: PrimeFieldPolynomial, g: PrimeFieldPolynomial
) -> tuple[PrimeFieldPolynomial, PrimeFieldPolynomial]:
    """Quotient and remainder; raises ZeroDivisionError on a zero divisor."""
    p = _same_modulus(f, g)
    q, r = _divmod(list(f.coeffs), list(g.coeffs), p)
    return PrimeFieldPolynomial(p, tuple(q)), PrimeFieldPolynomial(p, tuple(r))


def fp_mod(f: PrimeFieldPolynomial, g: PrimeFieldPolynomial) -> PrimeFieldPolynomial:
    """Remainder of f mod g."""
    return fp_divmod(f, g)[1]


def fp_gcd(f: PrimeFieldPolynomial, g: PrimeFieldPolynomial) -> PrimeFieldPolynomial:
    """Monic gcd in F_p[x]."""
    p = _same_modulus(f, g)
    return PrimeFieldPolynomial(p, tuple(_gcd(list(f.coeffs), list(g.coeffs), p)))


def fp_powmod(g: PrimeFieldPolynomial, e: int, f: PrimeFieldPolynomial) -> PrimeFieldPolynomial:
    """g^e mod f by square-and-multiply; e may be arbitrarily large."""
    p = _same_modulus(g, f)
    if f.is_zero():
        raise ZeroDivisionError("zero divisor")
    return PrimeFieldPolynomial(p, tuple(_powmod(list(g.coeffs), e, list(f.coeffs), p)))


# --- irreducibility -------------------------------------------------------


def _is_irreducible_raw(fc: list[int], p: int) -> bool:
    # Rabin's criterion: f of degree n is irreducible iff x^(p^n) == x
    # (mod f) and gcd(x^(p^(n/q)) - x, f) = 1 for every prime q | n.
    n = len(fc) - 1
    if n == 1:
        return True
    x = [0, 1]
    checkpoints = {n // q for q in _prime_divisors(n)}
    h = x
    for i in range(1, n + 1):
        h = _powmod(h, p, fc, p)
        if i in checkpoints and _gcd(_sub(h, x, p), fc, p) != [1]:
            return False
    return h == x


def is_irreducible_mod_p(f: PrimeFieldPolynomial) -> bool:
    """Deterministic irreducibility test in F_p[x] (Rabin's criterion)."""
    if f.degree < 1:
        raise ValueError("irreducibility needs degree >= 1")
    return _is_irreducible_raw(list(f.coeffs), f.modulus)


def is_irreducible_trial_division(f: PrimeFieldPolynomial) -> bool:
    """Second oracle: divide by every monic polynomial of degree <= n/2."""
    if f.degree < 1:
        raise ValueError("irreducibility needs degree >= 1")
    p = f.modulus
    fc = list(f.coeffs)
    for m in range(1, f.degree // 2 + 1):
        for tail in itertools.product(range(p), repeat=m):
            g = list(tail) + [1]
            if not _mod(fc, g, p):
                return False
    return True


@lru_cache(maxsize=None)
def irreducible_table(p: int, degree: int) -> tuple[bool, ...]:
    """Lookup table over all p^degree monic polynomials of one degree.

    Index i encodes the non-leading coefficients as base-p digits with
    a_0 least significant.  Only built when p^degree <= TABLE_LIMIT.
    """
    if not is_prime(p):
        raise ValueError(f"not prime: {p}")
    if degree < 1:
        raise ValueError(f"degree must be >= 1, got {degree}")
    size = p**degree
    if size > TABLE_LIMIT:
        raise FeasibilityError(f"table too large: {p}^{degree} = {size} exceeds {TABLE_LIMIT}")
    flags = []
    for i in range(size):
        fc = []
        v = i
        for _ in range(degree):
            v, d = divmod(v, p)
            fc.append(d)
        fc.append(1)
        flags.append(_is_irreducible_raw(fc, p))
    return tuple(flags)


def count_irreducibles_exact(degree: int, p: int) -> int:
    """Number of monic irreducibles of one degree: (1/n) sum_{d|n} mu(d) p^(n/d)."""
    if degree < 1:
        raise ValueError(f"degree must be >= 1, got {degree}")
    if not is_prime(p):
        raise ValueError(f"not prime: {p}")
    total = sum(mobius(d) * p ** (degree // d) for d in range(1, degree + 1) if degree % d == 0)
    return total // degree


def count_irreducibles_exhaustive(
    degree: int, p: int, max_oracle: int = DEFAULT_EXHAUSTIVE_LIMIT
) -> int:
    """Independent oracle: test all p^degree monic polynomials one by one."""
    if degree < 1:
        raise ValueError(f"degree must be >= 1, got {degree}")
    if not is_prime(p):
        raise ValueError(f"not prime: {p}")
    space = p**degree
    if space > max_oracle:
        raise FeasibilityError(
            f"oracle too large: {p}^{degree} = {space} exceeds limit {max_oracle}"
        )
    count = 0
    for tail in itertools.product(range(p), repeat=degree):
        if _is_irreducible_raw(list(tail) + [1], p):
            count += 1
    return count


@dataclass(frozen=True)
class IrreducibleAuditRow:
    """Exact count vs. the p^n/n leading term at one prime.

    `sq_normalized_error` is (N - p^n/n)^2 / p^n: the square keeps the
    comparison against the p^(n/2) error scale inside exact rational
    arithmetic (p^(n/2) itself is irrational for odd n).
    """

    p: int
    exact_count: int
    main_term: Fraction
    sq_normalized_error: Fraction


@dataclass(frozen=True)
class IrreducibleCountAudit:
    degree: int
    rows: tuple[IrreducibleAuditRow, ...]
    max_sq_normalized_error: Fraction
    within_sqrt_scale: bool


def audit_irreducible_counts(degree: int, primes: Sequence[int]) -> IrreducibleCountAudit:
    """Compare exact monic-irreducible counts against p^n/n across primes.

    `within_sqrt_scale` records whether every squared normalized error
    stayed <= 1 on the tested primes; that constant is an empirical
    observation about the tested range, not something assumed.
    """
    if degree < 2:
        raise ValueError(f"audit requires degree >= 2, got {degree}")
    if not primes:
        raise ValueError("need at least one prime to audit")
    rows = []
    for p in primes:
        exact = count_irreducibles_exact(degree, p)
        main = Fraction(p**degree, degree)
        err = (exact - main) ** 2 / Fraction(p**degree)
        rows.append(
            IrreducibleAuditRow(
                p=p, exact_count=exact, main_term=main, sq_normalized_error=err
            )
        )
    worst = max(row.sq_normalized_error for row in rows)
    return IrreducibleCountAudit(
        degree=degree,
        rows=tuple(rows),
        max_sq_normalized_error=worst,
        within_sqrt_scale=worst <= 1,
    )
