"""Least crossing count over symmetric-diagram expansions of a two-bridge knot.

The pipeline short-circuits in order of cost:

1. Step1: positive expansions (canonical and trailing-1 variant) of the four
   slopes.  A Type A or Type B hit settles the value at the crossing number.
2. Step2: the semi-even expansions of the two even-denominator slopes give an
   upper bound m realized by a Type A sequence.  m = c + 1 settles the value.
3. Search: stream every Type A / Type B sequence with crossing sum t for
   t = c + 1 .. m - 1 and stop at the first sequence evaluating into the
   knot's slope class.  Exhaustion settles the value at m.

A sequence with crossing sum c evaluating to the knot would be an alternating
minimal diagram, so it is all-positive up to mirror and Step1 already saw it;
the search can therefore start above c.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator

from .contfrac import (
    ContinuedFraction,
    ExpansionClass,
    _eval_entries,
    _semi_even_entries,
    classify_type,
    crossing_sum,
    positive_expansion,
    positive_expansion_variant,
)
from .knot import TwoBridgeKnot, _knot_key, crossing_number, slope_family

__all__ = [
    "C2Result",
    "step1_check",
    "step2_bound",
    "enumerate_type_ab",
    "search_at",
    "c2",
    "solve_many",
    "global_c2_map",
]

METHOD_STEP1 = "Step1"
METHOD_STEP2 = "Step2"
METHOD_SEARCH = "Search"
METHOD_EXHAUSTED = "ExhaustedToBound"


@dataclass(frozen=True)
class C2Result:
    """Outcome of the solve for one knot.

    value is the least crossing sum over Type A / Type B sequences evaluating
    into the knot's slope class; witness is one sequence realizing it.
    base_crossing <= value <= semi_even_bound always holds.
    """

    value: int
    witness: ContinuedFraction
    witness_class: ExpansionClass
    method: str
    semi_even_bound: int
    base_crossing: int

    def __post_init__(self) -> None:
        if not self.base_crossing <= self.value <= self.semi_even_bound:
            raise ValueError(
                f"inconsistent result: c={self.base_crossing}, "
                f"value={self.value}, bound={self.semi_even_bound}"
            )


# ---------------------------------------------------------------------------
# Steps 1 and 2


def _semi_even_pick(k: TwoBridgeKnot) -> tuple[int, ContinuedFraction]:
    """Best semi-even expansion over the even-denominator slopes.

    The two even denominators may coincide (q self-inverse mod p).  Ties on
    crossing sum break toward the smaller denominator.
    """
    p, q = k.p, k.q
    qi = pow(q, -1, p)
    dens = sorted({q, qi if qi % 2 == 0 else p - qi})
    best: tuple[int, int, list[int]] | None = None
    for d in dens:
        entries = _semi_even_entries(p, d)
        s = sum(abs(a) for a in entries)
        if best is None or (s, d) < (best[0], best[1]):
            best = (s, d, entries)
    return best[0], ContinuedFraction._trusted(tuple(best[2]))


def step1_check(k: TwoBridgeKnot) -> C2Result | None:
    """Try the eight positive sequences; a Type A/B hit means value = c(K)."""
    c = crossing_number(k)
    for slope in slope_family(k):
        cf = positive_expansion(slope)
        for cand in (cf, positive_expansion_variant(cf)):
            cls = classify_type(cand)
            if cls is not ExpansionClass.NEITHER:
                m, _ = _semi_even_pick(k)
                return C2Result(c, cand, cls, METHOD_STEP1, m, c)
    return None


def step2_bound(k: TwoBridgeKnot) -> int:
    """Semi-even upper bound m; meaningful once step1_check has failed.

    A bound of c(K) would mean a mixed-sign sequence matches the crossing
    number, contradicting Step 1 having failed, so m <= c(K) raises.
    """
    c = crossing_number(k)
    m, _ = _semi_even_pick(k)
    if m <= c:
        raise RuntimeError(
            f"semi-even bound {m} for {k} does not exceed c={c}; "
            "Step 1 must already decide this knot"
        )
    return m


# ---------------------------------------------------------------------------
# Enumeration of Type A / Type B sequences by crossing sum


def _type_a_magnitudes(total: int) -> Iterator[tuple[int, ...]]:
    """Magnitude patterns of Type A sequences with the given crossing sum.

    Even length; odd positions carry any magnitude >= 1, even positions an
    even magnitude >= 2.  Ordered by length, then lexicographically.
    """
    n = 2
    while 3 * n // 2 <= total:
        # mins[j] = least possible sum of slots j..n
        mins = [0] * (n + 2)
        for j in range(n, 0, -1):
            mins[j] = mins[j + 1] + (2 if j % 2 == 0 else 1)
        out: list[tuple[int, ...]] = []

        def rec(j: int, rem: int, prefix: tuple[int, ...]) -> None:
            if j == n:
                # Last slot is an even position: magnitude rem, even >= 2.
                if rem >= 2 and rem % 2 == 0:
                    out.append(prefix + (rem,))
                return
            lo, step = (1, 1) if j % 2 else (2, 2)
            for m in range(lo, rem - mins[j + 1] + 1, step):
                rec(j + 1, rem - m, prefix + (m,))

        rec(1, total, ())
        yield from out
        n += 2


def _type_b_halves(total: int) -> Iterator[tuple[int, ...]]:
    """Half patterns (m_1 .. m_h) of Type B palindromes, center last.

    Non-center magnitudes count twice, the center once and must be odd, so
    these exist only for odd totals.  Ordered by length, then lexicographically.
    """
    if total % 2 == 0:
        return
    n = 1
    while n <= total:
        h = (n + 1) // 2
        out: list[tuple[int, ...]] = []

        def rec(j: int, rem: int, prefix: tuple[int, ...]) -> None:
            if j == h:
                out.append(prefix + (rem,))  # rem is odd >= 1 by the bounds
                return
            for m in range(1, (rem - (2 * (h - 1 - j) + 1)) // 2 + 1):
                rec(j + 1, rem - 2 * m, prefix + (m,))

        rec(1, total, ())
        yield from out
        n += 2


def _iter_type_a(total: int) -> Iterator[tuple[int, ...]]:
    for mag in _type_a_magnitudes(total):
        for signs in product((1, -1), repeat=len(mag)):
            yield tuple(s * m for s, m in zip(signs, mag))


def _iter_type_b(total: int) -> Iterator[tuple[int, ...]]:
    for half in _type_b_halves(total):
        for signs in product((1, -1), repeat=len(half)):
            head = tuple(s * m for s, m in zip(signs, half))
            yield head + head[-2::-1]


def _iter_with_class(total: int):
    for seq in _iter_type_a(total):
        yield seq, ExpansionClass.TYPE_A
    for seq in _iter_type_b(total):
        yield seq, ExpansionClass.TYPE_B


def enumerate_type_ab(t: int) -> Iterator[ContinuedFraction]:
    """Every signed sequence with crossing sum t that classify_type accepts,
    each exactly once.

    Deterministic order: all Type A sequences, then all Type B; within a class
    ascending length, magnitude tuples lexicographically, then sign vectors
    with + before - scanning left to right (Type B signs are chosen on the
    first half and mirrored).
    """
    if t < 1:
        raise ValueError(f"crossing sum must be >= 1, got {t}")
    for seq, _ in _iter_with_class(t):
        yield ContinuedFraction._trusted(seq)


def search_at(k: TwoBridgeKnot, t: int) -> ContinuedFraction | None:
    """First sequence in enumeration order at crossing sum t that evaluates
    into k's slope class, or None."""
    key = (k.p, k.q)
    for seq, _ in _iter_with_class(t):
        if _knot_key(*_eval_entries(seq)) == key:
            return ContinuedFraction._trusted(seq)
    return None


# ---------------------------------------------------------------------------
# Full solves


def solve_many(knots: Iterable[TwoBridgeKnot]) -> dict[TwoBridgeKnot, C2Result]:
    """Solve a batch of knots, sharing each enumeration sweep across them.

    Identical to running the per-knot pipeline: at each crossing total the
    shared stream is scanned once and every still-pending knot keeps the first
    sequence that hits it, which is the same sequence the per-knot search
    would find.
    """
    results: dict[TwoBridgeKnot, C2Result] = {}
    pending: dict[tuple[int, int], tuple[TwoBridgeKnot, int, int, ContinuedFraction]] = {}

    for k in sorted(set(knots)):
        r1 = step1_check(k)
        if r1 is not None:
            results[k] = r1
            continue
        c = crossing_number(k)
        m, wit = _semi_even_pick(k)
        if m <= c:
            raise RuntimeError(f"semi-even bound {m} below c={c} for {k}")
        if m == c + 1:
            results[k] = C2Result(m, wit, ExpansionClass.TYPE_A, METHOD_STEP2, m, c)
        else:
            pending[(k.p, k.q)] = (k, c, m, wit)

    if pending:
        lo = min(c + 1 for (_, c, _, _) in pending.values())
        hi = max(m - 1 for (_, _, m, _) in pending.values())
        for t in range(lo, hi + 1):
            active = {
                key
                for key, (_, c, m, _) in pending.items()
                if c + 1 <= t <= m - 1
            }
            if not active:
                continue
            for seq, cls in _iter_with_class(t):
                key = _knot_key(*_eval_entries(seq))
                if key in active:
                    active.discard(key)
                    k, c, m, _ = pending.pop(key)
                    results[k] = C2Result(
                        t, ContinuedFraction._trusted(seq), cls, METHOD_SEARCH, m, c
                    )
                    if not active:
                        break
            if not pending:
                break
        for k, c, m, wit in pending.values():
            results[k] = C2Result(
                m, wit, ExpansionClass.TYPE_A, METHOD_EXHAUSTED, m, c
            )

    return results


def c2(k: TwoBridgeKnot) -> C2Result:
    """Least crossing sum over Type A / Type B sequences representing k."""
    return solve_many([k])[k]


def global_c2_map(
    max_crossing: int,
) -> dict[TwoBridgeKnot, tuple[int, ContinuedFraction]]:
    """Independent cross-check: sweep t = 1, 2, 3, ... over the full
    enumeration and record the first t at which each knot appears.

    Uses only enumeration, evaluation, and canonicalization, none of the
    stepwise machinery, so agreement with :func:`c2` is meaningful.  Returns
    {knot: (t, first witness)} for every knot with crossing number up to
    max_crossing.  Every knot is found by the time t reaches its semi-even
    bound (that expansion is itself an enumerated Type A sequence); passing a
    bound without a hit would be an implementation bug and raises.
    """
    from .table import enumerate_knots  # late import, table builds on solver

    if max_crossing < 3:
        raise ValueError(f"max_crossing must be >= 3, got {max_crossing}")
    targets: dict[tuple[int, int], tuple[TwoBridgeKnot, int]] = {}
    for c in range(3, max_crossing + 1):
        for k in enumerate_knots(c):
            targets[(k.p, k.q)] = (k, _semi_even_pick(k)[0])

    found: dict[tuple[int, int], tuple[int, ContinuedFraction]] = {}
    t = 0
    while len(found) < len(targets):
        t += 1
        net = max(m for key, (_, m) in targets.items() if key not in found)
        if t > net:
            raise RuntimeError(
                f"enumeration passed every pending bound ({net}) without a hit"
            )
        remaining = len(targets) - len(found)
        for seq, _ in _iter_with_class(t):
            key = _knot_key(*_eval_entries(seq))
            if key in targets and key not in found:
                found[key] = (t, ContinuedFraction._trusted(seq))
                remaining -= 1
                if remaining == 0:
                    break
    return {targets[key][0]: hit for key, hit in found.items()}
