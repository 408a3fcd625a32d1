"""Exact counting of bounded and unbounded integer compositions.

Every count is a plain Python int, so nothing here can overflow or pass
through floating point.  Two composition conventions coexist on purpose
and are kept apart under distinct names:

* positive compositions: ordered sums with every part >= 1,
* nonnegative compositions: ordered sums with every part >= 0.

`count_bounded_compositions` additionally caps each part at H, which is
the counting problem behind the admissible-polynomial census, and
`brute_force_compositions` is the deliberately dumb oracle the closed
form is checked against.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .errors import FeasibilityError

DEFAULT_ORACLE_LIMIT = 10**8


@dataclass(frozen=True)
class CompositionQuery:
    """An ordered-sum counting problem: `parts` parts adding up to `target`.

    `cap` restricts every part to [0, cap]; cap=None means unbounded.
    """

    parts: int
    target: int
    cap: int | None = None

    def __post_init__(self):
        if self.parts < 1:
            raise ValueError(f"parts must be >= 1, got {self.parts}")
        if self.target < 0:
            raise ValueError(f"target must be >= 0, got {self.target}")
        if self.cap is not None and self.cap < 0:
            raise ValueError(f"cap must be >= 0 or None, got {self.cap}")


def _choose(n: int, k: int) -> int:
    # Binomial with the "zero outside the triangle" convention; negative n
    # (possible in inclusion-exclusion terms) also yields 0.
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def binomial(n: int, k: int) -> int:
    """C(n, k) for n >= 0, with C(n, k) = 0 when k < 0 or k > n."""
    if n < 0:
        raise ValueError(f"binomial expects n >= 0, got {n}")
    return _choose(n, k)


def count_positive_compositions(parts: int, target: int) -> int:
    """Ordered sums of `parts` positive integers equal to `target`.

    Equals C(target - 1, parts - 1): place parts-1 bars into the
    target-1 gaps between units.
    """
    if parts < 1:
        raise ValueError(f"parts must be >= 1, got {parts}")
    if target < 0:
        raise ValueError(f"target must be >= 0, got {target}")
    return _choose(target - 1, parts - 1)


def count_nonneg_compositions(parts: int, target: int) -> int:
    """Ordered sums of `parts` nonnegative integers equal to `target`: C(target+parts-1, parts-1)."""
    if parts < 1:
        raise ValueError(f"parts must be >= 1, got {parts}")
    if target < 0:
        raise ValueError(f"target must be >= 0, got {target}")
    return _choose(target + parts - 1, parts - 1)


def count_bounded_compositions(q: CompositionQuery) -> int:
    """Exact number of tuples (a_1, ..., a_parts) with sum `target` and 0 <= a_i <= cap.

    Inclusion-exclusion on the number of parts overflowing the cap:

        sum_j (-1)^j C(n, j) C(S - j(H+1) + n - 1, n - 1)

    Terms whose upper index goes negative vanish.  With cap >= target the
    j >= 1 terms are all zero and this reduces to the unbounded count.
    """
    if q.cap is None:
        return count_nonneg_compositions(q.parts, q.target)
    n, S, H = q.parts, q.target, q.cap
    total = 0
    for j in range(n + 1):
        rem = S - j * (H + 1)
        if rem < 0:
            break
        term = _choose(n, j) * _choose(rem + n - 1, n - 1)
        total += -term if j & 1 else term
    return total


def brute_force_compositions(q: CompositionQuery, max_oracle: int = DEFAULT_ORACLE_LIMIT) -> int:
    """Independent oracle: walk every capped tuple and count the matches.

    Intentionally does no pruning, so it can disagree with
    `count_bounded_compositions` only if the closed form is wrong.
    Raises FeasibilityError ("oracle too large") when the tuple space
    (cap+1)^parts exceeds `max_oracle`.
    """
    cap = q.target if q.cap is None else q.cap
    space = (cap + 1) ** q.parts
    if space > max_oracle:
        raise FeasibilityError(
            f"oracle too large: ({cap}+1)^{q.parts} = {space} exceeds limit {max_oracle}"
        )
    target = q.target
    return sum(1 for t in itertools.product(range(cap + 1), repeat=q.parts) if sum(t) == target)
