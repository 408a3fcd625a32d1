"""Prime sieving, the Turan sieve inequality, and the sifting pipeline.

The sifting sets here are "irreducible mod p": an admissible polynomial
belongs to A_p when its reduction mod p is irreducible.  Everything the
inequality consumes (member counts, pairwise intersection counts) is
computed exactly by enumeration, and the bound itself is evaluated in
exact rational arithmetic, so a violation could only ever mean a bug.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from .finite_field import TABLE_LIMIT, _is_irreducible_raw, irreducible_table
from .integer_irreducibility import DEFAULT_SEARCH_LIMIT, count_admissible_irreducible
from .polynomials import (
    DEFAULT_ENUM_LIMIT,
    MonicIntPolynomial,
    count_admissible_exact,
    enumerate_admissible,
)


def primes_below(z: int) -> tuple[int, ...]:
    """All primes strictly below z, ascending (sieve of Eratosthenes)."""
    if z < 1:
        raise ValueError(f"z must be >= 1, got {z}")
    if z <= 2:
        return ()
    flags = bytearray([1]) * z
    flags[0] = flags[1] = 0
    for p in range(2, math.isqrt(z - 1) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(range(p * p, z, p)))
    return tuple(i for i in range(2, z) if flags[i])


def prime_count(z: int) -> int:
    """pi(z): the number of primes p <= z."""
    if z < 0:
        raise ValueError(f"z must be >= 0, got {z}")
    return len(primes_below(z + 1))


def count_primes_crosscheck(z: int) -> int:
    """pi(z) again, via an odd-only sieve kept independent of primes_below."""
    if z < 0:
        raise ValueError(f"z must be >= 0, got {z}")
    if z < 2:
        return 0
    size = (z + 1) // 2  # index i stands for the odd number 2i+1
    odd = bytearray([1]) * size
    odd[0] = 0
    i = 1
    while (2 * i + 1) ** 2 <= z:
        if odd[i]:
            step = 2 * i + 1
            start = (step * step) // 2
            odd[start::step] = bytearray(len(odd[start::step]))
        i += 1
    return 1 + sum(odd)


@dataclass(frozen=True)
class ChebyshevSample:
    z: int
    prime_count: int
    ratio: float


@dataclass(frozen=True)
class ChebyshevAudit:
    """pi(z) * ln(z) / z sampled and scanned against a fixed band.

    `within_band` covers every integer z in [scan_start, z_max]; the
    ratios are floating point on purpose (they are reference magnitudes,
    not exact payload data).
    """

    z_max: int
    samples: tuple[ChebyshevSample, ...]
    scan_start: int
    ratio_min: float | None
    ratio_max: float | None
    within_band: bool
    band: tuple[float, float]


def audit_chebyshev(z_max: int, band: tuple[float, float] = (0.9, 1.3)) -> ChebyshevAudit:
    """Scan pi(z) * ln(z) / z over [17, z_max] and sample a few checkpoints.

    The scan shares a single sieve pass with the running prime count, so
    a million-point audit stays cheap.
    """
    if z_max < 3:
        raise ValueError(f"z_max must be >= 3, got {z_max}")
    flags = bytearray([1]) * (z_max + 1)
    flags[0] = flags[1] = 0
    for p in range(2, math.isqrt(z_max) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(range(p * p, z_max + 1, p)))

    checkpoints = {3, z_max}
    mark = 10
    while mark <= z_max:
        checkpoints.add(mark)
        mark *= 10

    scan_start = 17
    lo, hi = band
    samples = []
    ratio_min: float | None = None
    ratio_max: float | None = None
    within = True
    log = math.log
    running = 0
    for z in range(2, z_max + 1):
        running += flags[z]
        if z >= scan_start:
            ratio = running * log(z) / z
            if ratio_min is None or ratio < ratio_min:
                ratio_min = ratio
            if ratio_max is None or ratio > ratio_max:
                ratio_max = ratio
            if not lo <= ratio <= hi:
                within = False
        if z in checkpoints:
            samples.append(ChebyshevSample(z=z, prime_count=running, ratio=running * log(z) / z))
    return ChebyshevAudit(
        z_max=z_max,
        samples=tuple(samples),
        scan_start=scan_start,
        ratio_min=ratio_min,
        ratio_max=ratio_max,
        within_band=within,
        band=band,
    )


@dataclass(frozen=True)
class TuranInstance:
    """A fully materialized sifting problem with exact per-prime data.

    member_counts[p] is |A_p|; pair_counts[(p, q)] with p <= q is
    |A_p intersect A_q| (for p == q that is |A_p| itself).  Densities are
    exact rationals in [0, 1).
    """

    ambient_size: int
    z: int
    primes: tuple[int, ...]
    densities: dict[int, Fraction]
    member_counts: dict[int, int]
    pair_counts: dict[tuple[int, int], int]

    def __post_init__(self):
        if self.ambient_size < 0:
            raise ValueError("ambient_size must be >= 0")
        for p in self.primes:
            if p not in self.densities or p not in self.member_counts:
                raise ValueError(f"missing density or member count for prime {p}")
            if not 0 <= self.densities[p] < 1:
                raise ValueError(f"density for {p} must lie in [0, 1)")
            if not 0 <= self.member_counts[p] <= self.ambient_size:
                raise ValueError(f"member count for {p} exceeds the ambient set")
        for p in self.primes:
            for q in self.primes:
                if p < q and (p, q) not in self.pair_counts:
                    raise ValueError(f"missing pair count for ({p}, {q})")
        for (p, q), c in self.pair_counts.items():
            if p > q or p not in self.member_counts or q not in self.member_counts:
                raise ValueError(f"bad pair key ({p}, {q})")
            if p == q and c != self.member_counts[p]:
                raise ValueError(f"pair count ({p}, {p}) must equal the member count")
            if c > min(self.member_counts[p], self.member_counts[q]):
                raise ValueError(f"pair count ({p}, {q}) exceeds a member count")

    def intersection_count(self, p: int, q: int) -> int:
        if p == q:
            return self.member_counts[p]
        key = (p, q) if p < q else (q, p)
        return self.pair_counts[key]


def turan_upper_bound(inst: TuranInstance) -> Fraction:
    """The three-term Turan bound on the sifted count, exactly.

        |A|/U + (2/U) sum_p |R_p| + (1/U^2) sum_{p,q} |R_{p,q}|

    with U the density sum, R_p = |A_p| - d_p|A|, and
    R_{p,q} = |A_p ^ A_q| - d_p d_q |A| summed over ordered pairs,
    the diagonal included.  Raises ValueError ("empty sieve") when U = 0.
    """
    U = sum((inst.densities[p] for p in inst.primes), Fraction(0))
    if U == 0:
        raise ValueError("empty sieve: density sum U(z) is zero")
    size = inst.ambient_size
    single = Fraction(0)
    for p in inst.primes:
        single += abs(inst.member_counts[p] - inst.densities[p] * size)
    double = Fraction(0)
    for p in inst.primes:
        for q in inst.primes:
            expected = inst.densities[p] * inst.densities[q] * size
            double += abs(inst.intersection_count(p, q) - expected)
    return Fraction(size) / U + 2 / U * single + 1 / U**2 * double


def _membership_tester(p: int, degree: int) -> Callable[[tuple[int, ...]], bool]:
    # Returns a predicate on non-leading coefficient vectors deciding
    # "irreducible mod p".  Uses the lookup table whenever it fits.
    if p**degree <= TABLE_LIMIT:
        table = irreducible_table(p, degree)

        def lookup(coeffs: tuple[int, ...]) -> bool:
            idx = 0
            for c in reversed(coeffs):
                idx = idx * p + c % p
            return table[idx]

        return lookup

    def direct(coeffs: tuple[int, ...]) -> bool:
        return _is_irreducible_raw([c % p for c in coeffs] + [1], p)

    return direct


def exact_sifted_count(ambient: Iterable[MonicIntPolynomial], z: int) -> int:
    """Count polynomials whose reduction is reducible at every prime p < z.

    With no primes below z nothing is sifted and the ambient size comes
    back unchanged.
    """
    primes = primes_below(z)
    if not primes:
        return sum(1 for _ in ambient)
    testers: list[Callable[[tuple[int, ...]], bool]] | None = None
    count = 0
    for f in ambient:
        if testers is None:
            testers = [_membership_tester(p, f.degree) for p in primes]
        coeffs = f.coeffs
        for test in testers:
            if test(coeffs):
                break
        else:
            count += 1
    return count


def build_admissible_instance(
    degree: int, height: int, z: int, max_enum: int = DEFAULT_ENUM_LIMIT
) -> TuranInstance:
    """Materialize the sifting problem for the admissible set at level z.

    Densities are all 1/degree; member and pairwise counts are exact,
    obtained by testing every admissible polynomial mod every prime
    below z.  The closed-form remainder shapes belong to the pipeline
    report, never to this instance.
    """
    if degree < 2:
        raise ValueError(f"instance needs degree >= 2, got {degree}")
    primes = primes_below(z)
    density = Fraction(1, degree)
    member = {p: 0 for p in primes}
    pair = {(p, q): 0 for i, p in enumerate(primes) for q in primes[i + 1 :]}
    testers = [_membership_tester(p, degree) for p in primes]
    total = 0
    for f in enumerate_admissible(degree, height, max_enum):
        total += 1
        coeffs = f.coeffs
        hits = [p for p, test in zip(primes, testers) if test(coeffs)]
        for i, p in enumerate(hits):
            member[p] += 1
            for q in hits[i + 1 :]:
                pair[(p, q)] += 1
    for p in primes:
        pair[(p, p)] = member[p]
    return TuranInstance(
        ambient_size=total,
        z=z,
        primes=primes,
        densities={p: density for p in primes},
        member_counts=member,
        pair_counts=pair,
    )


def sieve_level(height: int) -> int:
    """round((H * ln H)^(1/3)), the canonical sieve level for height H.

    Rounding is Python's round-half-to-even.  Levels below 2 admit no
    primes and leave the ambient set unsifted.
    """
    if height < 2:
        raise ValueError(f"height must be >= 2, got {height}")
    return round((height * math.log(height)) ** (1.0 / 3.0))


@dataclass(frozen=True)
class PrimeRemainderDetail:
    """Exact remainder at one prime next to its closed-form reference shape.

    `remainder_reference` is H^(n-1)/p^(n/2) + H^(n-2)*p evaluated in
    floating point; it is displayed for comparison only and never enters
    the exact bound.
    """

    p: int
    member_count: int
    remainder: Fraction
    remainder_reference: float


@dataclass(frozen=True)
class PipelineReport:
    """Everything the sifting pipeline produced at one (degree, height).

    Exact fields: ambient_count (the admissible census), sifted_exact,
    turan_bound (None when no primes sit below z), irreducible_count and
    the per-prime remainders.  The *_reference fields are floating-point
    magnitudes for orientation.
    """

    degree: int
    height: int
    z: int
    z_overridden: bool
    density: Fraction
    ambient_count: int
    sifted_exact: int
    turan_bound: Fraction | None
    irreducible_count: int
    turan_inequality_holds: bool | None
    chain_inequality_holds: bool
    main_term_reference: float
    error_term_reference: float
    per_prime: tuple[PrimeRemainderDetail, ...]


def pipeline_lower_bound(
    degree: int,
    height: int,
    z_override: int | None = None,
    max_enum: int = DEFAULT_ENUM_LIMIT,
    max_search: int = DEFAULT_SEARCH_LIMIT,
) -> PipelineReport:
    """Run the full sifting pipeline and check its two guaranteed inequalities.

    S_exact <= turan bound (when the bound exists) and
    A >= N - S_exact always: a monic factorization over Z reduces to a
    factorization of the same degree split mod every prime, so every
    reducible polynomial survives the sifting.  Violations raise
    RuntimeError because they can only be implementation bugs.
    """
    if degree < 3:
        raise ValueError(f"pipeline requires degree >= 3, got {degree}")
    if height < 0:
        raise ValueError(f"height must be >= 0, got {height}")
    if z_override is not None:
        z = z_override
        if z < 1:
            raise ValueError(f"z must be >= 1, got {z}")
    else:
        z = sieve_level(height) if height >= 2 else 1

    ambient_count = count_admissible_exact(degree, height)
    instance = build_admissible_instance(degree, height, z, max_enum)
    sifted = exact_sifted_count(enumerate_admissible(degree, height, max_enum), z)
    bound = turan_upper_bound(instance) if instance.primes else None
    irreducible = count_admissible_irreducible(degree, height, max_enum, max_search)

    turan_holds = None if bound is None else Fraction(sifted) <= bound
    chain_holds = irreducible >= ambient_count - sifted
    if turan_holds is False:
        raise RuntimeError("Turan inequality violated; this is a bug")
    if not chain_holds:
        raise RuntimeError("sifting chain inequality violated; this is a bug")

    main_ref = height ** (degree - 1) / math.factorial(degree - 1)
    error_ref = (
        height ** (degree - 4.0 / 3.0) * math.log(height) ** (2.0 / 3.0)
        if height >= 2
        else 0.0
    )
    details = []
    for p in instance.primes:
        exact_remainder = instance.member_counts[p] - instance.densities[p] * ambient_count
        shape = height ** (degree - 1) / p ** (degree / 2.0) + height ** (degree - 2) * p
        details.append(
            PrimeRemainderDetail(
                p=p,
                member_count=instance.member_counts[p],
                remainder=exact_remainder,
                remainder_reference=shape,
            )
        )
    return PipelineReport(
        degree=degree,
        height=height,
        z=z,
        z_overridden=z_override is not None,
        density=Fraction(1, degree),
        ambient_count=ambient_count,
        sifted_exact=sifted,
        turan_bound=bound,
        irreducible_count=irreducible,
        turan_inequality_holds=turan_holds,
        chain_inequality_holds=chain_holds,
        main_term_reference=main_ref,
        error_term_reference=error_ref,
        per_prime=tuple(details),
    )
