"""Two-bridge knot identities.

A two-bridge knot is K(p, q) with p odd, and K(p, q) = K(p', q') exactly when
p = p' and q' is congruent to q or to the inverse of q mod p; mirrors are
identified, which folds q and p - q together.  Every class therefore contains
exactly two even denominators in (0, p), and the smaller one is the canonical
representative used everywhere in this package.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .contfrac import Rational, _eval_entries, _positive_entries

__all__ = [
    "TwoBridgeKnot",
    "mod_inverse",
    "canonicalize",
    "slope_family",
    "fraction_to_knot",
    "crossing_number",
]


def mod_inverse(q: int, p: int) -> int:
    """The q' in (0, p) with q * q' = 1 mod p; p odd >= 3, gcd(p, q) = 1."""
    if p < 3 or p % 2 == 0:
        raise ValueError(f"modulus must be odd and >= 3, got {p}")
    if not 0 < q < p:
        raise ValueError(f"q must lie in (0, p), got q={q}, p={p}")
    if gcd(p, q) != 1:
        raise ValueError(f"q must be coprime to p, got q={q}, p={p}")
    return pow(q, -1, p)


def _even_rep(p: int, q: int) -> int:
    # Exactly one of q, p - q is even when p is odd.
    return q if q % 2 == 0 else p - q


def _canonical_q(p: int, q: int) -> int:
    qe = _even_rep(p, q)
    ie = _even_rep(p, pow(qe, -1, p))
    return qe if qe <= ie else ie


@dataclass(frozen=True, order=True)
class TwoBridgeKnot:
    """Canonical representative K(p, q): p odd >= 3, q even, q the smaller of
    the two even denominators in the equivalence class."""

    p: int
    q: int

    def __post_init__(self) -> None:
        p, q = self.p, self.q
        if p < 3 or p % 2 == 0:
            raise ValueError(f"p must be odd and >= 3, got {p}")
        if not 0 < q < p or q % 2 != 0 or gcd(p, q) != 1:
            raise ValueError(f"q={q} is not a valid even denominator for p={p}")
        if q != _canonical_q(p, q):
            raise ValueError(
                f"({p}, {q}) is not the canonical representative; use canonicalize()"
            )

    def __str__(self) -> str:
        return f"K({self.p},{self.q})"


def canonicalize(p: int, q: int) -> TwoBridgeKnot:
    """Map any valid (p, q) to the canonical representative of its class.

    A negative q means the mirror and is folded to p - |q| first; mirrors are
    identified anyway.
    """
    if p % 2 == 0:
        raise ValueError(f"p={p} is even: that is a two-bridge link, not a knot")
    if p <= 1:
        raise ValueError(f"p={p} does not describe a knot")
    if q == 0 or not -p < q < p:
        raise ValueError(f"q must satisfy 0 < |q| < p, got q={q}, p={p}")
    if q < 0:
        q += p
    if gcd(p, q) != 1:
        raise ValueError(f"p and q must be coprime, got p={p}, q={q}")
    return TwoBridgeKnot(p, _canonical_q(p, q))


def slope_family(k: TwoBridgeKnot) -> tuple[Rational, Rational, Rational, Rational]:
    """The four slopes of k, in the order p/q, p/(p-q), p/q', p/(p-q').

    This is a multiset: entries repeat whenever q is self-inverse mod p.
    """
    p, q = k.p, k.q
    qi = pow(q, -1, p)
    return (
        Rational(p, q),
        Rational(p, p - q),
        Rational(p, qi),
        Rational(p, p - qi),
    )


def _knot_key(num: int, den: int) -> tuple[int, int] | None:
    """Canonical (p, q) for a reduced fraction, or None when it is not a knot.

    None covers the infinite value, numerators of magnitude <= 1 (unknot), and
    even numerators (two-bridge links).  The denominator is reduced mod p; the
    sign of the numerator is dropped because mirrors are identified.
    """
    if den == 0:
        return None
    p = abs(num)
    if p <= 1 or p % 2 == 0:
        return None
    return p, _canonical_q(p, den % p)


def fraction_to_knot(r: Rational) -> TwoBridgeKnot | None:
    key = _knot_key(r.num, r.den)
    return None if key is None else TwoBridgeKnot(*key)


def crossing_number(k: TwoBridgeKnot) -> int:
    """Crossing number, read off as the entry sum of any slope's positive
    expansion.  All four slopes must agree; disagreement would invalidate the
    whole pipeline and is raised as a hard error."""
    sums = {sum(_positive_entries(s.num, s.den)) for s in slope_family(k)}
    if len(sums) != 1:
        raise RuntimeError(
            f"positive expansions of the four slopes of {k} disagree: {sorted(sums)}"
        )
    return sums.pop()
