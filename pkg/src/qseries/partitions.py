"""Restricted partition counters: the combinatorial ground truth.

Every family has two independent routes.  ``count_signed`` is a plain
backtracking enumerator over colored multisets of parts and is the trusted
oracle; ``count_dp`` builds the same counts through the generating-function
product and is the fast path.  Disagreement between the two localises bugs.

Colors are labeled: a part value v in color a and the same value in color b
are distinct parts, which is exactly what the products (1 - q^v)^(-r) count.
Counters return 0 for negative arguments.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator

from .products import eta, eta_quotient
from .series import SeriesError, TruncatedSeries


@dataclass(frozen=True)
class ResidueRule:
    """Coloring/distinctness/sign rule for one residue class of parts.

    ``colors = 0`` forbids parts in the class; ``signed_by_count`` weights a
    partition by (-1)^(number of parts in this class).
    """

    residue: int
    colors: int = 1
    distinct: bool = False
    signed_by_count: bool = False

    def __post_init__(self):
        if self.colors < 0:
            raise ValueError(f"colors must be nonnegative, got {self.colors}")


@dataclass(frozen=True)
class PartitionRuleSet:
    """One ResidueRule per residue class modulo ``modulus``."""

    modulus: int
    rules: tuple[ResidueRule, ...]

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError(f"modulus must be positive, got {self.modulus}")
        seen = sorted(r.residue for r in self.rules)
        if seen != list(range(self.modulus)):
            raise ValueError(
                f"rules must cover every residue class mod {self.modulus} exactly once"
            )

    @classmethod
    def from_map(
        cls, modulus: int, entries: dict[int, tuple[int, bool, bool]]
    ) -> "PartitionRuleSet":
        """Build from ``{residue: (colors, distinct, signed_by_count)}``.

        Unmentioned residues default to one ordinary color.
        """
        rules = []
        for r in range(modulus):
            colors, distinct, signed = entries.get(r, (1, False, False))
            rules.append(ResidueRule(r, colors, distinct, signed))
        return cls(modulus, tuple(rules))

    def rule_for(self, value: int) -> ResidueRule:
        return self.rules_by_residue[value % self.modulus]

    @property
    def rules_by_residue(self) -> tuple[ResidueRule, ...]:
        ordered = sorted(self.rules, key=lambda r: r.residue)
        return tuple(ordered)


RULESETS: dict[str, PartitionRuleSet] = {
    # parts 1,3 mod 4 plain; 2 mod 4 in two colors; multiples of 4 distinct,
    # counted with sign by their number
    "thm3.2": PartitionRuleSet.from_map(
        4, {1: (1, False, False), 3: (1, False, False), 2: (2, False, False), 0: (1, True, True)}
    ),
    # parts 1,5 mod 6 two colors; 3 mod 6 three colors; multiples of 6
    # distinct and signed; 2,4 mod 6 forbidden
    "thm4.2": PartitionRuleSet.from_map(
        6,
        {
            1: (2, False, False),
            5: (2, False, False),
            3: (3, False, False),
            0: (1, True, True),
            2: (0, False, False),
            4: (0, False, False),
        },
    ),
    # parts 1,3,5 mod 6 plain; 2,4 mod 6 two colors; multiples of 6 distinct signed
    "thm5.2": PartitionRuleSet.from_map(
        6,
        {
            1: (1, False, False),
            3: (1, False, False),
            5: (1, False, False),
            2: (2, False, False),
            4: (2, False, False),
            0: (1, True, True),
        },
    ),
    # parts 1,5 mod 6 three colors; 3 mod 6 plain; multiples of 6 distinct
    # signed; 2,4 mod 6 forbidden
    "thm6.1": PartitionRuleSet.from_map(
        6,
        {
            1: (3, False, False),
            5: (3, False, False),
            3: (1, False, False),
            0: (1, True, True),
            2: (0, False, False),
            4: (0, False, False),
        },
    ),
    "unrestricted": PartitionRuleSet.from_map(1, {0: (1, False, False)}),
    "distinct.signed": PartitionRuleSet.from_map(1, {0: (1, True, True)}),
}


def count_signed(ruleset: PartitionRuleSet, n: int) -> int:
    """Signed count of colored partitions of n, by exhaustive backtracking.

    Enumerates every admissible colored multiset of parts exactly once (as a
    vector of per-color multiplicities for each part value) and sums the
    signs.  Intended for n up to about 30.
    """
    if n < 0:
        return 0
    rules = ruleset.rules_by_residue
    m = ruleset.modulus

    def over_colors(value: int, rule: ResidueRule, color: int, rem: int) -> int:
        if color == rule.colors:
            return descend(value + 1, rem)
        total = 0
        top = 1 if rule.distinct else rem // value
        for k in range(top + 1):
            sub = over_colors(value, rule, color + 1, rem - k * value)
            if rule.signed_by_count and k % 2:
                sub = -sub
            total += sub
        return total

    def descend(value: int, rem: int) -> int:
        if rem == 0:
            return 1
        if value > rem:
            return 0
        rule = rules[value % m]
        if rule.colors == 0:
            return descend(value + 1, rem)
        return over_colors(value, rule, 0, rem)

    return descend(1, n)


def iter_colored_partitions(
    ruleset: PartitionRuleSet, n: int
) -> Iterator[tuple[tuple[tuple[int, int, int], ...], int]]:
    """Yield each colored partition of n as ((value, color, multiplicity), ...)
    together with its sign.  Same tree as :func:`count_signed`.
    """
    rules = ruleset.rules_by_residue
    m = ruleset.modulus

    def over_colors(value, rule, color, rem, parts, sign):
        if color == rule.colors:
            yield from descend(value + 1, rem, parts, sign)
            return
        top = 1 if rule.distinct else rem // value
        for k in range(top + 1):
            s = sign
            if rule.signed_by_count and k % 2:
                s = -s
            nxt = parts + ((value, color, k),) if k else parts
            yield from over_colors(value, rule, color + 1, rem - k * value, nxt, s)

    def descend(value, rem, parts, sign):
        if rem == 0:
            yield parts, sign
            return
        if value > rem:
            return
        rule = rules[value % m]
        if rule.colors == 0:
            yield from descend(value + 1, rem, parts, sign)
            return
        yield from over_colors(value, rule, 0, rem, parts, sign)

    if n < 0:
        return
    yield from descend(1, n, (), 1)


def count_dp(ruleset: PartitionRuleSet, order: int) -> TruncatedSeries:
    """Generating-function route: the series whose coefficient at n equals
    ``count_signed(ruleset, n)``, valid below ``order``.

    Per part value v with c colors the factor is (1 - q^v)^(-c) for ordinary
    classes, (1 + q^v)^c for distinct, and the sign-twisted variants
    (1 - q^v)^c / (1 + q^v)^(-c) for signed classes.
    """
    acc = TruncatedSeries.one(order)
    for v in range(1, order):
        rule = ruleset.rule_for(v)
        if rule.colors == 0:
            continue
        c = -1 if rule.signed_by_count else 1
        if rule.distinct:
            factor = TruncatedSeries.from_terms({0: 1, v: c}, order)
            for _ in range(rule.colors):
                acc = acc * factor
        else:
            factor = TruncatedSeries.from_terms({0: 1, v: -c}, order)
            for _ in range(rule.colors):
                acc = acc / factor
    return acc


# -- classical families -----------------------------------------------------

_pcache = [1]


def p_classic(n: int) -> int:
    """p(n) by the pentagonal recurrence, p(negative) = 0."""
    if n < 0:
        return 0
    while len(_pcache) <= n:
        t = len(_pcache)
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            g2 = k * (3 * k + 1) // 2
            if g1 > t:
                break
            sign = 1 if k % 2 else -1  # (-1)^(k+1)
            total += sign * _pcache[t - g1]
            if g2 <= t:
                total += sign * _pcache[t - g2]
            k += 1
        _pcache.append(total)
    return _pcache[n]


def p_r(r: int, order: int) -> TruncatedSeries:
    """Generating function of the r-color family: ``1 / l_1^r`` (r nonzero)."""
    if r == 0:
        raise SeriesError("r must be nonzero")
    return eta_quotient({1: -r}, order)


def overpartition_r(r: int, order: int) -> TruncatedSeries:
    """Overpartitions with r copies: ``(l_2 / l_1^2)^r``."""
    if r < 1:
        raise SeriesError("r must be positive")
    return eta_quotient({2: r, 1: -2 * r}, order)


def p_rd(r: int, order: int) -> TruncatedSeries:
    """Partitions into distinct parts with r copies: ``(l_2 / l_1)^r``."""
    if r < 1:
        raise SeriesError("r must be positive")
    return eta_quotient({2: r, 1: -r}, order)


def regular4(order: int) -> TruncatedSeries:
    """4-regular partitions (no part divisible by 4): ``l_4 / l_1``."""
    return eta_quotient({4: 1, 1: -1}, order)


class ThetaStreamKind(enum.Enum):
    PENTAGONAL = "pentagonal"
    TRIANGULAR_JACOBI = "jacobi"
    SQUARE_PHI = "phi"
    TRIANGULAR_PSI = "psi"

    @classmethod
    def from_name(cls, name: str) -> "ThetaStreamKind":
        try:
            return cls(name.lower())
        except ValueError:
            raise KeyError(f"unknown theta stream kind {name!r}") from None


def theta_stream(
    kind: ThetaStreamKind | str, scale: int, order: int
) -> TruncatedSeries:
    """Weighted exponent streams used by the recurrence verifier.

    pentagonal:  sum (-1)^m q^(s m(3m-1)/2)          (= l_s)
    jacobi:      sum (-1)^k (2k+1) q^(s k(k+1)/2)    (= l_s^3)
    phi:         1 + 2 sum (-1)^k q^(s k^2)          (= phi(-q^s))
    psi:         sum q^(s k(k+1)/2)                  (= psi(q^s))
    """
    if isinstance(kind, str):
        kind = ThetaStreamKind.from_name(kind)
    if scale < 1:
        raise SeriesError(f"scale must be positive, got {scale}")
    terms: dict[int, int] = {}
    if kind is ThetaStreamKind.PENTAGONAL:
        return eta(scale, order)
    if kind is ThetaStreamKind.TRIANGULAR_JACOBI:
        k = 0
        while scale * k * (k + 1) // 2 < order:
            terms[scale * k * (k + 1) // 2] = (2 * k + 1) * (-1 if k % 2 else 1)
            k += 1
    elif kind is ThetaStreamKind.SQUARE_PHI:
        terms[0] = 1
        k = 1
        while scale * k * k < order:
            terms[scale * k * k] = -2 if k % 2 else 2
            k += 1
    else:  # TRIANGULAR_PSI
        k = 0
        while scale * k * (k + 1) // 2 < order:
            terms[scale * k * (k + 1) // 2] = 1
            k += 1
    return TruncatedSeries.from_terms(terms, order)


# -- brute-force enumerators (test oracles) ---------------------------------

def partitions_brute(n: int) -> int:
    """Plain partition count by backtracking."""
    if n < 0:
        return 0

    def go(v, rem):
        if rem == 0:
            return 1
        if v > rem:
            return 0
        return sum(go(v + 1, rem - k * v) for k in range(rem // v + 1))

    return go(1, n)


def colored_partitions_brute(n: int, colors: int) -> int:
    """Partitions with labeled colors on every part."""
    if n < 0:
        return 0

    def go(v, ci, rem):
        if rem == 0:
            return 1
        if v > rem:
            return 0
        if ci == colors:
            return go(v + 1, 0, rem)
        return sum(go(v, ci + 1, rem - k * v) for k in range(rem // v + 1))

    return go(1, 0, n)


def distinct_colored_brute(n: int, colors: int, signed: bool = False) -> int:
    """Partitions into distinct (value, color) pairs, optionally signed by count."""
    if n < 0:
        return 0

    def go(v, ci, rem):
        if rem == 0:
            return 1
        if v > rem:
            return 0
        if ci == colors:
            return go(v + 1, 0, rem)
        skip = go(v, ci + 1, rem)
        take = go(v, ci + 1, rem - v) if rem >= v else 0
        return skip + (-take if signed else take)

    return go(1, 0, n)


def overpartitions_brute(n: int, copies: int = 1) -> int:
    """Overpartitions with ``copies`` colors: per (value, color), any number of
    plain parts plus an optional overlined one."""
    if n < 0:
        return 0

    def go(v, ci, rem):
        if rem == 0:
            return 1
        if v > rem:
            return 0
        if ci == copies:
            return go(v + 1, 0, rem)
        total = 0
        for over in (0, 1):
            left = rem - over * v
            if left < 0:
                continue
            total += sum(go(v, ci + 1, left - k * v) for k in range(left // v + 1))
        return total

    return go(1, 0, n)


def regular_brute(n: int, k: int = 4) -> int:
    """Partitions of n with no part divisible by k."""
    if n < 0:
        return 0

    def go(v, rem):
        if rem == 0:
            return 1
        if v > rem:
            return 0
        if v % k == 0:
            return go(v + 1, rem)
        return sum(go(v + 1, rem - c * v) for c in range(rem // v + 1))

    return go(1, n)
