"""Small number-theoretic helpers: primality, the Legendre symbol, and the
exact progression indices of the built-in congruence families.
"""

from __future__ import annotations

from dataclasses import dataclass


class DomainError(ValueError):
    pass


class PreconditionError(ValueError):
    """A family hypothesis (Legendre condition, integrality) does not hold.

    Verification treats this as "skipped", never as "pass": a family theorem
    must not be reported verified vacuously.
    """


def is_prime(n: int) -> bool:
    """Trial division; every prime in scope is tiny."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def legendre(w: int, p: int) -> int:
    """Legendre symbol (w/p) by Euler's criterion; 0 iff p divides w."""
    if p == 2 or not is_prime(p):
        raise DomainError(f"{p} is not an odd prime")
    r = pow(w % p, (p - 1) // 2, p)
    if r == 0:
        return 0
    return 1 if r == 1 else -1


@dataclass(frozen=True)
class FamilyIndex:
    """One arithmetic progression ``A*n + B`` carrying a mod-M vanishing claim."""

    A: int
    B: int
    M: int


@dataclass(frozen=True)
class FamilySpec:
    """Shape of one congruence family.

    Indices are ``A = c * p^(2a+2)`` and ``B = c * p^(2a+1) * j + (d *
    p^(2a+2) + 1) / e`` for j = 1..p-1, claimed to vanish mod M on the
    coefficient stream of ``mock``.
    """

    name: str
    legendre_w: int
    min_p: int
    c: int
    d: int
    e: int
    modulus: int
    mock: str


FAMILIES: dict[str, FamilySpec] = {
    spec.name: spec
    for spec in (
        FamilySpec("thm3.3ii", legendre_w=-2, min_p=3, c=2, d=3, e=4, modulus=2, mock="v"),
        FamilySpec("thm3.3iii", legendre_w=-18, min_p=5, c=6, d=19, e=4, modulus=6, mock="v"),
        FamilySpec("thm4.3", legendre_w=-2, min_p=5, c=2, d=11, e=12, modulus=2, mock="sigma"),
    )
}


def family_indices(family: str, p: int, alpha: int) -> list[FamilyIndex]:
    """Expand a family into its p-1 concrete progressions for one (p, alpha).

    Raises :class:`PreconditionError` when p does not qualify (wrong Legendre
    value, too small, composite) or the offset fails to be an exact integer.
    """
    if family not in FAMILIES:
        raise DomainError(f"unknown congruence family {family!r}")
    spec = FAMILIES[family]
    if alpha < 0:
        raise DomainError(f"alpha must be nonnegative, got {alpha}")
    if not is_prime(p) or p == 2:
        raise PreconditionError(f"p = {p} is not an odd prime")
    if p < spec.min_p:
        raise PreconditionError(f"p = {p} is below the family minimum {spec.min_p}")
    if legendre(spec.legendre_w, p) != -1:
        raise PreconditionError(
            f"({spec.legendre_w}/{p}) != -1, so p = {p} does not qualify"
        )
    num = spec.d * p ** (2 * alpha + 2) + 1
    offset, rem = divmod(num, spec.e)
    if rem:
        raise PreconditionError(
            f"offset ({spec.d}*p^{2 * alpha + 2}+1)/{spec.e} is not an integer for p = {p}"
        )
    A = spec.c * p ** (2 * alpha + 2)
    step = spec.c * p ** (2 * alpha + 1)
    return [FamilyIndex(A, step * j + offset, spec.modulus) for j in range(1, p)]


def qualifying_primes(family: str, bound: int) -> list[int]:
    """Primes up to ``bound`` satisfying the family's Legendre hypothesis."""
    if family not in FAMILIES:
        raise DomainError(f"unknown congruence family {family!r}")
    spec = FAMILIES[family]
    out = []
    for p in range(3, bound + 1):
        if not is_prime(p) or p < spec.min_p:
            continue
        if legendre(spec.legendre_w, p) == -1:
            out.append(p)
    return out
