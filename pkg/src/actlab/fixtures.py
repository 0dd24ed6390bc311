"""Named monoids used throughout the examples and tests."""

from __future__ import annotations

from .monoid import FiniteMonoid, monoid_from_labels, validate_monoid


def trivial() -> FiniteMonoid:
    return monoid_from_labels("T1", ["1"], [["1"]])


def cyclic_group2() -> FiniteMonoid:
    return monoid_from_labels("C2", ["1", "g"], [["1", "g"], ["g", "1"]])


def chain2() -> FiniteMonoid:
    return monoid_from_labels("N2", ["1", "0"], [["1", "0"], ["0", "0"]])


def left_zero3() -> FiniteMonoid:
    """{1, a, b} with xy = x on {a, b}."""
    return monoid_from_labels("LZ3", ["1", "a", "b"], [["1", "a", "b"], ["a", "a", "a"], ["b", "b", "b"]])


def right_zero3() -> FiniteMonoid:
    """{1, a, b} with xy = y on {a, b}."""
    return monoid_from_labels("RZ3", ["1", "a", "b"], [["1", "a", "b"], ["a", "a", "b"], ["b", "a", "b"]])


def monogenic(index: int, period: int, name: str | None = None) -> FiniteMonoid:
    """<x | x^(index+period) = x^index>; index 0 gives the cyclic group of order period."""
    if period < 1 or index < 0:
        raise ValueError("period must be positive and index non-negative")
    n = index + period

    def reduce(k: int) -> int:
        return k if k < n else index + (k - index) % period

    labels = ["1"] + ["x" if k == 1 else f"x{k}" for k in range(1, n)]
    table = [[reduce(i + j) for j in range(n)] for i in range(n)]
    return validate_monoid(labels, table, 0, name or f"Mono({index},{period})")


def m3() -> FiniteMonoid:
    """<x | x^3 = x^2> = {1, x, x2}."""
    return monogenic(2, 1, "M3")


FIXTURES = {
    "T1": trivial,
    "C2": cyclic_group2,
    "N2": chain2,
    "LZ3": left_zero3,
    "RZ3": right_zero3,
    "M3": m3,
}


def fixture(name: str) -> FiniteMonoid:
    return FIXTURES[name]()
