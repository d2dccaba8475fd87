"""Decide whether a 2-coloring admits a monochromatic solution of L(m, a).

The fast path builds, per color class S, a layered sumset table: layer k is
the bitset of integers expressible as a sum of exactly k elements of S with
repetition allowed, truncated at cap = a*n. A monochromatic solution exists
iff some target t in S has a*t present in layer m-1. A small multiset
enumeration oracle provides an independent cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement

from .core import (
    Color,
    Coloring,
    RadoEquation,
    SolutionTemplate,
    Witness,
    evaluate_template,
    iter_bits,
)

NAIVE_GUARD = 1_000_000


@dataclass
class SumsetTable:
    """Layered reachable-sum bitsets for one color class.

    layers[k-1] holds the sums of exactly k class elements (repetition
    allowed) as a bitmask, every layer truncated to sums <= cap. Sums only
    grow, so truncation never loses a reachable value below the cap.
    """

    cap: int
    layers: list[int]

    @classmethod
    def build(cls, class_bits: int, depth: int, cap: int) -> SumsetTable:
        if depth < 1:
            raise ValueError(f"need at least one layer, got depth={depth}")
        capmask = (1 << (cap + 1)) - 1
        elements = list(iter_bits(class_bits))
        layers = [class_bits & capmask]
        for _ in range(depth - 1):
            acc = 0
            prev = layers[-1]
            for e in elements:
                acc |= prev << e
            layers.append(acc & capmask)
        return cls(cap, layers)

    def contains(self, k: int, total: int) -> bool:
        """Whether total is a sum of exactly k class elements (and <= cap)."""
        if not 1 <= k <= len(self.layers) or not 0 <= total <= self.cap:
            return False
        return bool((self.layers[k - 1] >> total) & 1)


def _greedy_left_side(table: SumsetTable, elements: list[int], total: int, count: int) -> list[int]:
    """Backtrack a sum of `count` class elements, smallest element first.

    Always succeeds when table.contains(count, total) holds; the result is
    non-decreasing because picking the minimum feasible element at each step
    keeps every smaller element infeasible later on.
    """
    remaining = total
    out: list[int] = []
    for k in range(count, 0, -1):
        prev = table.layers[k - 2] if k >= 2 else 1  # bit 0 is the empty sum
        for e in elements:
            rest = remaining - e
            if rest >= 0 and (prev >> rest) & 1:
                out.append(e)
                remaining = rest
                break
        else:
            raise RuntimeError("sumset table backtracking failed; table is inconsistent")
    return out


def find_mono_solution(col: Coloring, eq: RadoEquation) -> Witness | None:
    """First monochromatic solution of L(m, a) under col, or None.

    Deterministic order: the red class is searched before blue, the smallest
    qualifying target first, and the left side is reconstructed greedily by
    smallest element. Values may repeat; a witness can sit in one element.
    """
    if col.n == 0:
        return None
    cap = eq.a * col.n
    depth = eq.m - 1
    for color in (Color.RED, Color.BLUE):
        bits = col.class_bits(color)
        if not bits:
            continue
        table = SumsetTable.build(bits, depth, cap)
        final = table.layers[-1]
        if not final:
            continue
        elements = list(iter_bits(bits))
        for t in elements:
            scaled = eq.a * t
            if scaled <= cap and (final >> scaled) & 1:
                left = _greedy_left_side(table, elements, scaled, depth)
                template = SolutionTemplate.from_slots([*left, t])
                return Witness(template, color)
    return None


def is_valid_coloring(col: Coloring, eq: RadoEquation) -> bool:
    """Whether col admits no monochromatic solution of L(m, a)."""
    return find_mono_solution(col, eq) is None


def verify_witness(witness: Witness, col: Coloring, eq: RadoEquation) -> bool:
    """Re-check a claimed witness against a coloring without trusting the finder.

    True iff the template satisfies the equation, every value lies in [1, n],
    and every value carries the witness color.
    """
    try:
        if not evaluate_template(witness.template, eq):
            return False
    except (ValueError, OverflowError):
        return False
    for _, value in witness.template.groups:
        if not 1 <= value <= col.n:
            return False
        if col.color_of(value) is not witness.color:
            return False
    return True


def naive_find_mono_solution(
    col: Coloring, eq: RadoEquation, guard: int = NAIVE_GUARD
) -> Witness | None:
    """Oracle checker: enumerate all multisets of size m-1 per color class.

    Returns the first solution under the fixed lexicographic multiset order,
    red class before blue. Refuses instances whose |S|^(m-1) estimate exceeds
    the guard; meant for n <= 8 and m <= 6.
    """
    m, a = eq.m, eq.a
    for color in (Color.RED, Color.BLUE):
        elements = list(iter_bits(col.class_bits(color)))
        if not elements:
            continue
        if len(elements) ** (m - 1) > guard:
            raise ValueError(
                f"naive enumeration over {len(elements)} elements to width {m - 1} "
                f"exceeds the guard of {guard}"
            )
        members = set(elements)
        for combo in combinations_with_replacement(elements, m - 1):
            total = sum(combo)
            if total % a:
                continue
            target = total // a
            if target in members:
                return Witness(SolutionTemplate.from_slots([*combo, target]), color)
    return None
