"""Coefficient streams for the eight q-hypergeometric sums under study.

Two independent routes are provided.  The fast path maintains each term's
Pochhammer ratio incrementally (one new binomial factor per index, O(order)
per term).  The slow reference path rebuilds every term from scratch out of
finite Pochhammer products and exists purely to cross-check the fast path.

Series are zero-valuation power series in q; argument twists such as
``sigma(-q)`` or ``mu(-q^2)`` are exponent-indexed sign/stretch transforms
applied afterwards (``TruncatedSeries.alternate`` / ``substitute``).
"""

from __future__ import annotations

import enum
import threading

from .products import PochhammerSpec, pochhammer
from .series import TruncatedSeries


class MockThetaId(enum.Enum):
    MU = "mu"
    SIGMA = "sigma"
    BETA = "beta"
    LAMBDA = "lambda"
    V = "v"
    NU = "nu"
    PHI6 = "phi6"
    PSI6 = "psi6"

    @classmethod
    def from_name(cls, name: str) -> "MockThetaId":
        try:
            return cls(name.lower())
        except ValueError:
            raise KeyError(f"unknown mock theta function {name!r}") from None


def valuation_schedule(mock_id: MockThetaId, n: int) -> int:
    """Exact q-valuation of term n; strictly increasing in n for every id."""
    if n < 0:
        raise ValueError("term index must be nonnegative")
    if mock_id is MockThetaId.MU:
        return n * n
    if mock_id is MockThetaId.SIGMA:
        return (n + 1) * (n + 2) // 2
    if mock_id is MockThetaId.BETA:
        return 3 * n * n + 3 * n + 1
    if mock_id is MockThetaId.LAMBDA:
        return n
    if mock_id is MockThetaId.V:
        return (n + 1) * (n + 1)
    if mock_id is MockThetaId.NU:
        return n + 1
    if mock_id is MockThetaId.PHI6:
        return n * n
    return (n + 1) * (n + 1)  # PSI6


_ALTERNATING = {MockThetaId.MU, MockThetaId.LAMBDA, MockThetaId.PHI6, MockThetaId.PSI6}


def _step_factors(mock_id: MockThetaId, n: int) -> tuple[list[int], list[tuple[int, int]]]:
    """Binomial factors turning the term-(n-1) ratio into the term-n ratio.

    Returns ``(numerator, denominator)`` where each numerator entry e means
    multiply by ``(1 + sign_e q^|e|)`` with the sign carried on e, and each
    denominator entry ``(e, c)`` means divide by ``(1 + c q^e)``.
    """
    if mock_id is MockThetaId.MU:
        # (q;q^2)_n / (-q^2;q^2)_n^2
        return ([] if n == 0 else [-(2 * n - 1)]), (
            [] if n == 0 else [(2 * n, 1), (2 * n, 1)]
        )
    if mock_id is MockThetaId.SIGMA:
        # (-q;q)_n / (q;q^2)_{n+1}
        return ([] if n == 0 else [n]), [(2 * n + 1, -1)]
    if mock_id is MockThetaId.BETA:
        # 1 / ((q;q^3)_{n+1} (q^2;q^3)_{n+1})
        return [], [(3 * n + 1, -1), (3 * n + 2, -1)]
    if mock_id is MockThetaId.LAMBDA:
        # (q;q^2)_n / (-q;q)_n
        return ([] if n == 0 else [-(2 * n - 1)]), ([] if n == 0 else [(n, 1)])
    if mock_id is MockThetaId.V:
        # (-q;q^2)_n / (q;q^2)_{n+1}
        return ([] if n == 0 else [2 * n - 1]), [(2 * n + 1, -1)]
    if mock_id is MockThetaId.NU:
        # (-q;q)_{2n+1} / (q;q^2)_{n+1}
        nums = [1] if n == 0 else [2 * n, 2 * n + 1]
        return nums, [(2 * n + 1, -1)]
    if mock_id is MockThetaId.PHI6:
        # (q;q^2)_n / (-q;q)_{2n}
        if n == 0:
            return [], []
        return [-(2 * n - 1)], [(2 * n - 1, 1), (2 * n, 1)]
    # PSI6: (q;q^2)_n / (-q;q)_{2n+1}
    if n == 0:
        return [], [(1, 1)]
    return [-(2 * n - 1)], [(2 * n, 1), (2 * n + 1, 1)]


def _compute(mock_id: MockThetaId, order: int) -> TruncatedSeries:
    if order <= 0:
        return TruncatedSeries.zero(order)
    acc = [0] * order
    ratio = [0] * order
    ratio[0] = 1
    alternating = mock_id in _ALTERNATING
    n = 0
    while True:
        val = valuation_schedule(mock_id, n)
        if val >= order:
            break
        hi = order - val  # later terms need strictly less precision
        nums, dens = _step_factors(mock_id, n)
        for e in nums:
            exp, c = abs(e), (1 if e > 0 else -1)
            for i in range(min(hi, order) - 1, exp - 1, -1):
                ratio[i] += c * ratio[i - exp]
        for exp, c in dens:
            for i in range(exp, hi):
                ratio[i] -= c * ratio[i - exp]
        # Guard for the valuation invariant: each ratio is a unit series.
        assert ratio[0] == 1, (mock_id, n)
        sign = -1 if alternating and n % 2 else 1
        if sign == 1:
            for j in range(hi):
                acc[val + j] += ratio[j]
        else:
            for j in range(hi):
                acc[val + j] -= ratio[j]
        n += 1
    return TruncatedSeries(0, acc, order)


_cache: dict[MockThetaId, TruncatedSeries] = {}
_cache_lock = threading.Lock()


def mock_series(mock_id: MockThetaId | str, order: int) -> TruncatedSeries:
    """Exact q-expansion of the chosen function below the given order.

    Completed series are memoised per id and only ever grow (write-once per
    order), so repeated verification passes share the largest expansion.
    """
    if isinstance(mock_id, str):
        mock_id = MockThetaId.from_name(mock_id)
    cached = _cache.get(mock_id)
    if cached is not None and cached.order >= order:
        return cached.truncate(order)
    result = _compute(mock_id, order)
    with _cache_lock:
        held = _cache.get(mock_id)
        if held is None or held.order < result.order:
            _cache[mock_id] = result
    return result


def mock_coefficient(mock_id: MockThetaId | str, n: int) -> int:
    """Single coefficient; negative indices are zero by convention."""
    if n < 0:
        return 0
    return mock_series(mock_id, n + 1).coefficient(n)


# -- reference route -------------------------------------------------------

def _finite(sign: int, base: int, step: int, length: int, order: int) -> TruncatedSeries:
    if length == 0:
        return TruncatedSeries.one(order)
    return pochhammer(PochhammerSpec(sign, base, step, length), order)


def mock_term_reference(mock_id: MockThetaId, n: int, order: int) -> TruncatedSeries:
    """Term n built from scratch with non-incremental Pochhammer products."""
    one = TruncatedSeries.one(order)
    if mock_id is MockThetaId.MU:
        num = _finite(1, 1, 2, n, order)
        den = _finite(-1, 2, 2, n, order) ** 2
        t = num / den
        sign = -1 if n % 2 else 1
    elif mock_id is MockThetaId.SIGMA:
        t = _finite(-1, 1, 1, n, order) / _finite(1, 1, 2, n + 1, order)
        sign = 1
    elif mock_id is MockThetaId.BETA:
        t = one / (_finite(1, 1, 3, n + 1, order) * _finite(1, 2, 3, n + 1, order))
        sign = 1
    elif mock_id is MockThetaId.LAMBDA:
        t = _finite(1, 1, 2, n, order) / _finite(-1, 1, 1, n, order)
        sign = -1 if n % 2 else 1
    elif mock_id is MockThetaId.V:
        t = _finite(-1, 1, 2, n, order) / _finite(1, 1, 2, n + 1, order)
        sign = 1
    elif mock_id is MockThetaId.NU:
        t = _finite(-1, 1, 1, 2 * n + 1, order) / _finite(1, 1, 2, n + 1, order)
        sign = 1
    elif mock_id is MockThetaId.PHI6:
        t = _finite(1, 1, 2, n, order) / _finite(-1, 1, 1, 2 * n, order)
        sign = -1 if n % 2 else 1
    else:
        t = _finite(1, 1, 2, n, order) / _finite(-1, 1, 1, 2 * n + 1, order)
        sign = -1 if n % 2 else 1
    t = t.truncate(order - valuation_schedule(mock_id, n)).shift(
        valuation_schedule(mock_id, n)
    )
    return t if sign == 1 else -t


def mock_series_reference(mock_id: MockThetaId | str, order: int) -> TruncatedSeries:
    """Slow oracle: sum of from-scratch terms, for cross-validating the fast path."""
    if isinstance(mock_id, str):
        mock_id = MockThetaId.from_name(mock_id)
    acc = TruncatedSeries(0, [0] * order, order)
    n = 0
    while valuation_schedule(mock_id, n) < order:
        acc = acc + mock_term_reference(mock_id, n, order)
        n += 1
    return acc
