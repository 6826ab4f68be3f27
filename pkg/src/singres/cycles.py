"""Cycles supported on the exceptional divisor and their numerical invariants."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Iterator, Sequence, Union

from .errors import DimensionMismatch, EnumerationTooLarge, NotNegativeDefinite, ZeroCycle
from .exact import solve
from .graph import DualGraph, IntersectionMatrix, intersection_matrix, is_negative_definite

DEFAULT_ENUM_CAP = 10**6


@dataclass(frozen=True)
class Cycle:
    coefficients: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(int(a) for a in self.coefficients))

    def __len__(self):
        return len(self.coefficients)

    def __iter__(self):
        return iter(self.coefficients)

    def __getitem__(self, i):
        return self.coefficients[i]

    @property
    def is_effective(self) -> bool:
        return all(a >= 0 for a in self.coefficients)

    @property
    def is_nonzero_effective(self) -> bool:
        return self.is_effective and any(a > 0 for a in self.coefficients)

    def __le__(self, other: "Cycle") -> bool:
        _check_len(self, other)
        return all(a <= b for a, b in zip(self, other))

    def __lt__(self, other: "Cycle") -> bool:
        return self <= other and self != other

    def __add__(self, other: "Cycle") -> "Cycle":
        _check_len(self, other)
        return Cycle(tuple(a + b for a, b in zip(self, other)))

    def __sub__(self, other: "Cycle") -> "Cycle":
        _check_len(self, other)
        return Cycle(tuple(a - b for a, b in zip(self, other)))

    def to_json(self) -> list[int]:
        return list(self.coefficients)


@dataclass(frozen=True)
class RationalCycle:
    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(Fraction(a) for a in self.coefficients))

    def __len__(self):
        return len(self.coefficients)

    def __iter__(self):
        return iter(self.coefficients)

    def __getitem__(self, i):
        return self.coefficients[i]

    @property
    def is_integral(self) -> bool:
        return all(a.denominator == 1 for a in self.coefficients)

    def to_json(self) -> list:
        return [fraction_to_json(a) for a in self.coefficients]


AnyCycle = Union[Cycle, RationalCycle, Sequence[int], Sequence[Fraction]]


def fraction_to_json(x: Fraction | int) -> int | str:
    """Integers stay integers; other rationals become ``"p/q"``."""
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _check_len(a, b):
    if len(a) != len(b):
        raise DimensionMismatch(f"cycle lengths {len(a)} and {len(b)} differ")


def _matrix_of(m: IntersectionMatrix | DualGraph) -> IntersectionMatrix:
    return intersection_matrix(m) if isinstance(m, DualGraph) else m


def pairing(z1: AnyCycle, z2: AnyCycle, m: IntersectionMatrix | DualGraph) -> Fraction:
    """Exact value of z1^T M z2."""
    m = _matrix_of(m)
    a, b = list(z1), list(z2)
    if len(a) != m.n or len(b) != m.n:
        raise DimensionMismatch(f"cycle lengths {len(a)}, {len(b)} vs matrix size {m.n}")
    total = Fraction(0)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        row = m.entries[i]
        total += ai * sum(row[j] * b[j] for j in range(m.n) if b[j] != 0)
    return Fraction(total)


def canonical_degrees(g: DualGraph) -> tuple[int, ...]:
    """K.E_i from adjunction on each smooth component."""
    return tuple(2 * v.genus - 2 - v.weight for v in g.vertices)


def require_negative_definite(g: DualGraph) -> IntersectionMatrix:
    m = intersection_matrix(g)
    if not is_negative_definite(m):
        raise NotNegativeDefinite("intersection matrix is not negative definite")
    return m


def fundamental_cycle(g: DualGraph) -> Cycle:
    """Artin's fundamental cycle by Laufer's computation sequence.

    Start from the reduced cycle and keep adding the lowest-index E_i that
    the current cycle meets positively.
    """
    m = require_negative_definite(g)
    return Cycle(laufer_sequence(m))


def laufer_sequence(m: IntersectionMatrix, order: Sequence[int] | None = None) -> tuple[int, ...]:
    """Run Laufer's loop; ``order`` fixes the tie-breaking priority among vertices."""
    n = m.n
    order = list(range(n)) if order is None else list(order)
    z = [1] * n
    dots = [sum(row) for row in m.entries]
    while True:
        for i in order:
            if dots[i] > 0:
                break
        else:
            return tuple(z)
        z[i] += 1
        for k in range(n):
            dots[k] += m.entries[k][i]


def anticanonical_cycle(g: DualGraph) -> RationalCycle:
    """Solve M z = -K.E exactly."""
    m = require_negative_definite(g)
    return RationalCycle(tuple(solve(m.entries, [-k for k in canonical_degrees(g)])))


def canonical_dot(z: AnyCycle, g: DualGraph) -> Fraction:
    return Fraction(sum(a * k for a, k in zip(z, canonical_degrees(g))))


def arithmetic_genus(z: AnyCycle, g: DualGraph) -> Fraction:
    """p_a(z) = 1 + (z.z + K.z) / 2.

    Integral cycles always give an integer; anything else is a bookkeeping
    bug and trips an assertion.
    """
    coeffs = list(z)
    if len(coeffs) != g.n:
        raise DimensionMismatch(f"cycle length {len(coeffs)} vs {g.n} vertices")
    if all(a == 0 for a in coeffs):
        raise ZeroCycle("arithmetic genus of the zero cycle")
    m = intersection_matrix(g)
    pa = 1 + (pairing(coeffs, coeffs, m) + canonical_dot(coeffs, g)) / 2
    if all(Fraction(a).denominator == 1 for a in coeffs):
        assert pa.denominator == 1, f"non-integral p_a {pa} for integral cycle {coeffs}"
    return pa


def subcycle_count(z: AnyCycle) -> int:
    """Number of cycles D with 0 < D < z."""
    return max(prod(int(a) + 1 for a in z) - 2, 0)


def enumerate_subcycles(z: Cycle | Sequence[int], cap: int = DEFAULT_ENUM_CAP) -> Iterator[Cycle]:
    """Yield every D with 0 < D < z exactly once (first coordinate fastest).

    The size check happens eagerly, before the first item is produced.
    """
    coeffs = [int(a) for a in z]
    if not coeffs or any(a < 0 for a in coeffs) or not any(coeffs):
        raise ValueError("enumerate_subcycles needs a nonzero effective cycle")
    size = prod(a + 1 for a in coeffs)
    if size > cap:
        raise EnumerationTooLarge(size, cap)
    return _subcycles(coeffs)


def _subcycles(coeffs: list[int]) -> Iterator[Cycle]:
    n = len(coeffs)
    d = [0] * n
    while True:
        i = 0
        while i < n and d[i] == coeffs[i]:
            d[i] = 0
            i += 1
        if i == n:
            return
        d[i] += 1
        if d == coeffs:
            return
        yield Cycle(tuple(d))
