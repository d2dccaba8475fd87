"""Domain types for 2-color Rado number computations.

The equation family is L(m, a): x1 + x2 + ... + x_{m-1} = a*x_m over the
positive integers. A 2-coloring of [n] = {1, ..., n} assigns every element
red or blue; a solution whose values all carry one color is monochromatic.
The types here (equations, colorings, grouped solution templates, witnesses)
are shared by the formula, checker, construction, and search layers.

Arithmetic contract: every derived quantity must fit in signed 64 bits.
Constructors reject parameters whose squares already overflow, and template
evaluation raises OverflowError instead of silently producing huge values.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

INT64_MAX = 2**63 - 1


def check64(value: int, what: str = "value") -> int:
    """Return value unchanged, raising OverflowError outside signed 64-bit range."""
    if value > INT64_MAX or value < -INT64_MAX - 1:
        raise OverflowError(f"{what} {value} exceeds signed 64-bit range")
    return value


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of a nonnegative mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Color(enum.Enum):
    RED = "red"
    BLUE = "blue"

    @property
    def opposite(self) -> Color:
        return Color.BLUE if self is Color.RED else Color.RED


@dataclass(frozen=True)
class RadoEquation:
    """The equation x1 + ... + x_{m-1} = a*x_m: m variables, coefficient a on x_m."""

    m: int
    a: int

    def __post_init__(self) -> None:
        if self.m < 2:
            raise ValueError(f"need m >= 2, got m={self.m}")
        if self.a < 1:
            raise ValueError(f"need a >= 1, got a={self.a}")
        # Downstream formulas scale like (m-1)^2 and a^2; parameters whose
        # squares overflow already cannot be handled anywhere.
        check64((self.m - 1) ** 2, "(m-1)^2")
        check64(self.a**2, "a^2")


@dataclass(frozen=True)
class Coloring:
    """A total red/blue coloring of [n], red stored as a bitmask over bits 1..n.

    n = 0 is the empty coloring. Blue is the complement of red within [n].
    """

    n: int
    red_bits: int = 0

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"need n >= 0, got n={self.n}")
        if self.red_bits < 0 or self.red_bits & ~self.domain_bits:
            raise ValueError("red elements must lie within 1..n")

    @classmethod
    def from_red(cls, n: int, red: Iterable[int]) -> Coloring:
        bits = 0
        for x in red:
            if not 1 <= x <= n:
                raise ValueError(f"red element {x} outside 1..{n}")
            bits |= 1 << x
        return cls(n, bits)

    @property
    def domain_bits(self) -> int:
        return (1 << (self.n + 1)) - 2

    @property
    def blue_bits(self) -> int:
        return self.domain_bits & ~self.red_bits

    def class_bits(self, color: Color) -> int:
        return self.red_bits if color is Color.RED else self.blue_bits

    def color_of(self, x: int) -> Color:
        if not 1 <= x <= self.n:
            raise ValueError(f"{x} is outside the colored interval [1, {self.n}]")
        return Color.RED if (self.red_bits >> x) & 1 else Color.BLUE

    def red_elements(self) -> tuple[int, ...]:
        return tuple(iter_bits(self.red_bits))

    def blue_elements(self) -> tuple[int, ...]:
        return tuple(iter_bits(self.blue_bits))

    def swapped(self) -> Coloring:
        """The coloring with red and blue exchanged."""
        return Coloring(self.n, self.blue_bits)

    def to_dict(self) -> dict:
        return {"n": self.n, "red": list(self.red_elements())}

    @classmethod
    def from_dict(cls, data: dict) -> Coloring:
        return cls.from_red(int(data["n"]), data["red"])


@dataclass(frozen=True)
class SolutionTemplate:
    """Grouped assignment [n1 -> d1; n2 -> d2; ...]: value d_i fills the next n_i slots.

    Slots are filled left to right. When the template fills exactly m slots,
    the first m-1 slots are the left side of L(m, a) and slot m is x_m; the
    x_m slot always falls in the last group.
    """

    groups: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if not self.groups:
            raise ValueError("template needs at least one group")
        for count, value in self.groups:
            if count < 1:
                raise ValueError(f"group count must be positive, got {count}")
            if value < 1:
                raise ValueError(f"assigned values must be positive, got {value}")

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> SolutionTemplate:
        return cls(tuple((int(c), int(v)) for c, v in pairs))

    @classmethod
    def from_slots(cls, values: Sequence[int]) -> SolutionTemplate:
        """Build a template from one value per slot, merging adjacent equal values."""
        groups: list[list[int]] = []
        for v in values:
            if groups and groups[-1][1] == v:
                groups[-1][0] += 1
            else:
                groups.append([1, v])
        return cls(tuple((c, v) for c, v in groups))

    @property
    def total_slots(self) -> int:
        return sum(count for count, _ in self.groups)

    def slots(self) -> tuple[int, ...]:
        out: list[int] = []
        for count, value in self.groups:
            out.extend([value] * count)
        return tuple(out)

    def scaled(self, factor: int) -> SolutionTemplate:
        """Multiply every assigned value by a positive integer."""
        if factor < 1:
            raise ValueError(f"scale factor must be positive, got {factor}")
        return SolutionTemplate(
            tuple((c, check64(v * factor, "scaled value")) for c, v in self.groups)
        )

    def to_dict(self) -> dict:
        return {"groups": [[c, v] for c, v in self.groups]}

    @classmethod
    def from_dict(cls, data: dict) -> SolutionTemplate:
        return cls.from_pairs(data["groups"])


@dataclass(frozen=True)
class Witness:
    """A solution template plus the color class its values live in."""

    template: SolutionTemplate
    color: Color

    def to_dict(self) -> dict:
        return {
            "color": self.color.value,
            "groups": [[c, v] for c, v in self.template.groups],
        }

    @classmethod
    def from_dict(cls, data: dict) -> Witness:
        return cls(SolutionTemplate.from_pairs(data["groups"]), Color(data["color"]))


def evaluate_template(template: SolutionTemplate, eq: RadoEquation) -> bool:
    """Whether substituting the template's values into L(m, a) gives a true equation.

    The first m-1 slots form the left side and slot m is the target. Raises
    ValueError when the template does not fill exactly m slots.
    """
    if template.total_slots != eq.m:
        raise ValueError(
            f"template fills {template.total_slots} slots, equation has {eq.m} variables"
        )
    total = 0
    for count, value in template.groups:
        total = check64(total + check64(count * value, "group sum"), "left side sum")
    target = template.groups[-1][1]
    return total - target == check64(eq.a * target, "right side")


def template_values(template: SolutionTemplate) -> tuple[tuple[int, ...], int]:
    """Split the filled slots into (left-side values, target value)."""
    slots = template.slots()
    if len(slots) < 2:
        raise ValueError("template must fill at least two slots")
    return slots[:-1], slots[-1]
