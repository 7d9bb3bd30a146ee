"""Exact truncated Laurent series over arbitrary-precision integers.

A :class:`TruncatedSeries` stores finitely many integer coefficients together
with an *order of validity*: the coefficient of ``q^e`` is exactly known for
every exponent ``e < order`` (it is zero below the valuation), and unknown at
or beyond the order.  Every operation computes the exact order of validity of
its result, so a pipeline can never silently report a wrong coefficient.

Coefficients are plain Python ints; there is no floating point anywhere.
Division exists only by series whose leading coefficient is a unit (+1/-1),
which keeps every result integral.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence


class SeriesError(ValueError):
    """Base error for series construction and arithmetic."""


class NonUnitError(SeriesError):
    """Division or inversion by a series whose leading coefficient is not +1/-1."""


class UnknownCoefficientError(SeriesError):
    """A coefficient at or beyond the order of validity was requested."""


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


class TruncatedSeries:
    """A Laurent-truncated formal power series with exact integer coefficients.

    ``coeffs[i]`` is the coefficient of ``q^(valuation + i)``; the length of
    ``coeffs`` always equals ``order - valuation``.  Exponents below the
    valuation have coefficient zero, exponents at or above the order are
    unknown.  Instances are immutable and safe to share across threads.
    """

    __slots__ = ("valuation", "coeffs", "order")

    def __init__(self, valuation: int, coeffs: Sequence[int], order: int):
        if order < valuation:
            raise SeriesError(f"order {order} below valuation {valuation}")
        if len(coeffs) != order - valuation:
            raise SeriesError(
                f"expected {order - valuation} coefficients for valuation "
                f"{valuation} and order {order}, got {len(coeffs)}"
            )
        for c in coeffs:
            if not isinstance(c, int):
                raise SeriesError(f"non-integer coefficient {c!r}")
        object.__setattr__(self, "valuation", valuation)
        object.__setattr__(self, "coeffs", tuple(coeffs))
        object.__setattr__(self, "order", order)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        """The zero series, valid below ``order``."""
        return cls(order, (), order)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        """The constant 1, valid below ``order``."""
        if order <= 0:
            return cls.zero(order)
        return cls(0, (1,) + (0,) * (order - 1), order)

    @classmethod
    def monomial(cls, k: int, order: int, coefficient: int = 1) -> "TruncatedSeries":
        """``coefficient * q^k``, valid below ``order``."""
        if order <= k:
            return cls.zero(order)
        return cls(k, (coefficient,) + (0,) * (order - k - 1), order)

    @classmethod
    def from_terms(cls, terms: Mapping[int, int], order: int) -> "TruncatedSeries":
        """Build a series from an exponent-to-coefficient mapping.

        Exponents at or beyond ``order`` are ignored: they carry no
        information at this truncation level.
        """
        live = {e: c for e, c in terms.items() if e < order and c}
        if not live:
            return cls.zero(order)
        val = min(live)
        out = [0] * (order - val)
        for e, c in live.items():
            out[e - val] = c
        return cls(val, out, order)

    # -- basic queries ------------------------------------------------

    def coefficient(self, exponent: int) -> int:
        """Exact coefficient of ``q^exponent``; raises beyond the order."""
        if exponent >= self.order:
            raise UnknownCoefficientError(
                f"coefficient of q^{exponent} unknown (order {self.order})"
            )
        if exponent < self.valuation:
            return 0
        return self.coeffs[exponent - self.valuation]

    def coefficients(self, upto: int | None = None) -> list[int]:
        """Coefficients of ``q^0 .. q^(upto-1)`` as a list (Laurent part dropped)."""
        n = self.order if upto is None else min(upto, self.order)
        return [self.coefficient(e) for e in range(0, n)]

    def nonzero_items(self) -> list[tuple[int, int]]:
        """Sorted ``(exponent, coefficient)`` pairs with nonzero coefficient."""
        v = self.valuation
        return [(v + i, c) for i, c in enumerate(self.coeffs) if c]

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        if self.order != other.order:
            return False
        lo = min(self.valuation, other.valuation)
        return all(
            self.coefficient(e) == other.coefficient(e)
            for e in range(lo, self.order)
        )

    def __hash__(self) -> int:
        nz = tuple(self.nonzero_items())
        return hash((self.order, nz))

    def agrees_with(
        self, other: "TruncatedSeries", upto: int | None = None
    ) -> tuple[bool, int | None]:
        """Compare on the overlap of known ranges, optionally capped at ``upto``.

        Returns ``(True, None)`` on agreement, else ``(False, e)`` with the
        first disagreeing exponent.
        """
        hi = min(self.order, other.order)
        if upto is not None:
            hi = min(hi, upto)
        lo = min(self.valuation, other.valuation)
        for e in range(lo, hi):
            if self.coefficient(e) != other.coefficient(e):
                return False, e
        return True, None

    # -- ring operations ----------------------------------------------

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        order = min(self.order, other.order)
        val = min(self.valuation, other.valuation, order)
        out = [0] * (order - val)
        for s in (self, other):
            stop = order - s.valuation
            if stop <= 0:
                continue
            base = s.valuation - val
            chunk = s.coeffs if stop >= len(s.coeffs) else s.coeffs[:stop]
            for i, c in enumerate(chunk):
                if c:
                    out[base + i] += c
        return TruncatedSeries(val, out, order)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.valuation, [-c for c in self.coeffs], self.order)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def scale(self, c: int) -> "TruncatedSeries":
        """Multiply every coefficient by the integer ``c`` (order preserved)."""
        if not isinstance(c, int):
            raise SeriesError(f"scale factor must be an integer, got {c!r}")
        return TruncatedSeries(self.valuation, [c * x for x in self.coeffs], self.order)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        val = self.valuation + other.valuation
        order = min(self.order + other.valuation, other.order + self.valuation)
        if order <= val:
            return TruncatedSeries.zero(order)
        length = order - val
        # Schoolbook convolution; iterate the operand with fewer nonzero
        # terms on the outside and skip zero products.
        a, b = self, other
        if sum(1 for c in a.coeffs if c) > sum(1 for c in b.coeffs if c):
            a, b = b, a
        out = [0] * length
        bc = b.coeffs
        for i, c in enumerate(a.coeffs):
            if not c:
                continue
            top = length - i
            if top <= 0:
                break
            chunk = bc if top >= len(bc) else bc[:top]
            for j, d in enumerate(chunk):
                if d:
                    out[i + j] += c * d
        return TruncatedSeries(val, out, order)

    def _unit_lead(self) -> int:
        if not self.coeffs or self.coeffs[0] not in (1, -1):
            lead = self.coeffs[0] if self.coeffs else None
            raise NonUnitError(f"leading coefficient {lead!r} is not +1 or -1")
        return self.coeffs[0]

    def invert(self) -> "TruncatedSeries":
        """Multiplicative inverse; requires leading coefficient +1 or -1."""
        u0 = self._unit_lead()
        val = -self.valuation
        order = self.order - 2 * self.valuation
        length = order - val
        nz = [(k, c) for k, c in enumerate(self.coeffs) if c and k > 0]
        out = [0] * length
        out[0] = u0
        for n in range(1, length):
            s = 0
            for k, c in nz:
                if k > n:
                    break
                s += c * out[n - k]
            if s:
                out[n] = -u0 * s
        return TruncatedSeries(val, out, order)

    def __truediv__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        """Exact division; ``other`` must have unit leading coefficient."""
        b0 = other._unit_lead()
        val = self.valuation - other.valuation
        order = min(
            self.order - other.valuation,
            other.order + self.valuation - 2 * other.valuation,
        )
        if order <= val:
            return TruncatedSeries.zero(order)
        length = order - val
        nz = [(k, c) for k, c in enumerate(other.coeffs) if c and k > 0]
        ac = self.coeffs
        out = [0] * length
        for n in range(length):
            s = ac[n] if n < len(ac) else 0
            for k, c in nz:
                if k > n:
                    break
                s -= c * out[n - k]
            if s:
                out[n] = b0 * s
        return TruncatedSeries(val, out, order)

    def __pow__(self, e: int) -> "TruncatedSeries":
        if not isinstance(e, int):
            raise SeriesError("exponent must be an integer")
        if e == 0:
            return TruncatedSeries.one(self.order - self.valuation)
        if e > 0:
            r = self
            for _ in range(e - 1):
                r = r * self
            return r
        r = self.invert()
        for _ in range(-e - 1):
            r = r / self
        return r

    # -- exponent surgery ----------------------------------------------

    def extract_ap(self, m: int, r: int) -> "TruncatedSeries":
        """Arithmetic-progression part: the series ``sum_n a[m*n + r] q^n``."""
        if m < 1:
            raise SeriesError(f"progression modulus must be positive, got {m}")
        if not 0 <= r < m:
            raise SeriesError(f"residue {r} out of range for modulus {m}")
        val = _ceil_div(self.valuation - r, m)
        order = _ceil_div(self.order - r, m)
        if order <= val:
            return TruncatedSeries.zero(order)
        out = [self.coefficient(m * (val + i) + r) for i in range(order - val)]
        return TruncatedSeries(val, out, order)

    def substitute(self, k: int) -> "TruncatedSeries":
        """Replace ``q`` by ``q^k`` for a positive integer ``k``."""
        if k < 1:
            raise SeriesError(f"substitution power must be positive, got {k}")
        if k == 1:
            return self
        val = self.valuation * k
        order = self.order * k
        out = [0] * (order - val)
        for i, c in enumerate(self.coeffs):
            if c:
                out[i * k] = c
        return TruncatedSeries(val, out, order)

    def alternate(self) -> "TruncatedSeries":
        """Replace ``q`` by ``-q``: negate coefficients of odd exponents."""
        v = self.valuation
        out = [c if (v + i) % 2 == 0 else -c for i, c in enumerate(self.coeffs)]
        return TruncatedSeries(v, out, self.order)

    def shift(self, k: int) -> "TruncatedSeries":
        """Multiply by the exact monomial ``q^k`` (k may be negative)."""
        return TruncatedSeries(self.valuation + k, self.coeffs, self.order + k)

    def truncate(self, order: int) -> "TruncatedSeries":
        """Forget coefficients at or beyond ``order``."""
        if order >= self.order:
            return self
        if order <= self.valuation:
            return TruncatedSeries.zero(order)
        return TruncatedSeries(
            self.valuation, self.coeffs[: order - self.valuation], order
        )

    def reduce_mod(self, modulus: int) -> "TruncatedSeries":
        """Reduce coefficients to canonical residues in ``[0, modulus)``."""
        if modulus < 2:
            raise SeriesError(f"modulus must be at least 2, got {modulus}")
        return TruncatedSeries(
            self.valuation, [c % modulus for c in self.coeffs], self.order
        )

    # -- display --------------------------------------------------------

    def __repr__(self) -> str:
        return f"<TruncatedSeries {format_series(self, max_terms=6)}>"


def make(valuation: int, coeffs: Iterable[int], order: int) -> TruncatedSeries:
    """Construct a series with exactly the given known coefficients."""
    return TruncatedSeries(valuation, tuple(coeffs), order)


def format_series(
    s: TruncatedSeries, dense_limit: int = 50, max_terms: int | None = None
) -> str:
    """Render a series for terminal output.

    Up to ``dense_limit`` the rendering is a signed polynomial; past it only
    sparse ``exponent:coefficient`` pairs are shown (pentagonal-style series
    would otherwise print pages of zeros).
    """
    items = s.nonzero_items()
    if max_terms is not None:
        items = items[:max_terms]
    tail = f"O(q^{s.order})"
    if not items:
        return f"0 + {tail}"
    if s.order <= dense_limit:
        parts: list[str] = []
        for e, c in items:
            mag = abs(c)
            if e == 0:
                term = str(mag)
            else:
                qpow = "q" if e == 1 else f"q^{e}"
                term = qpow if mag == 1 else f"{mag}{qpow}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts) + f" + {tail}"
    body = " ".join(f"{e}:{c}" for e, c in items)
    return f"{body} ({tail})"
