"""Molien-type oracle for every Poincare series in the library.

The graded trace of a Weyl group element w on the coinvariant algebra of the
flag manifold is

    prod_i (1 - s^(d_i)) / det(1 - s*w),

with d_i the invariant degrees and the determinant taken on the reflection
representation (the Lie algebra of the maximal torus).  Averaging the square
of this trace over the group gives the fiber-space series; averaging trace
over det once more gives the series of the commuting classifying space.
Both averages run over conjugacy classes weighted by class size, so the
oracle scales with the number of cycle types, not with the group order.

Everything stays in exact integers; the final division by the group order is
checked for exactness and never rounded.
"""

from __future__ import annotations

from collections import Counter
from math import factorial
from typing import Iterator

from .poincare import GroupSpec
from .qseries import TruncatedSeries, _divide_by_factor
from .repa import partitions
from .weylcomb import CycleData


class IntegralityError(ArithmeticError):
    """A class-weighted average failed to be an integer; the class data or
    the character formula is inconsistent."""


def _cycle_type_weight(lengths: tuple[int, ...]) -> int:
    """Centralizer factor prod_k k^(m_k) * m_k! of a cycle-length multiset."""
    weight = 1
    for length, mult in Counter(lengths).items():
        weight *= length**mult * factorial(mult)
    return weight


def symmetric_conjugacy_classes(n: int) -> Iterator[tuple[CycleData, int]]:
    """Cycle types of the symmetric group with their class sizes."""
    n_fact = factorial(n)
    for shape in partitions(n):
        yield CycleData(shape), n_fact // _cycle_type_weight(shape)


def signed_conjugacy_classes(n: int) -> Iterator[tuple[CycleData, int]]:
    """Signed cycle types (pairs of partitions) with their class sizes.

    The centralizer of a class with positive type lam+ and negative type
    lam- has order prod (2k)^(m_k) m_k! taken over both types.
    """
    order = 2**n * factorial(n)
    for pos_size in range(n + 1):
        for pos in partitions(pos_size):
            for neg in partitions(n - pos_size):
                centralizer = (
                    _cycle_type_weight(pos)
                    * _cycle_type_weight(neg)
                    * 2 ** (len(pos) + len(neg))
                )
                yield CycleData(pos, neg), order // centralizer


def conjugacy_classes(group: GroupSpec) -> Iterator[tuple[CycleData, int]]:
    if group.weyl_kind == "sym":
        return symmetric_conjugacy_classes(group.n)
    return signed_conjugacy_classes(group.n)


def invariant_degrees(group: GroupSpec) -> tuple[int, ...]:
    """Degrees d_i of the basic invariants, in the s = t^2 grading."""
    n = group.n
    if group.family == "U":
        return tuple(range(1, n + 1))
    if group.family == "SU":
        return tuple(range(2, n + 1))
    return tuple(2 * i for i in range(1, n + 1))


def _check_consistent(group: GroupSpec, cycles: CycleData) -> None:
    if cycles.size != group.n:
        raise ValueError(
            f"cycle data of size {cycles.size} for a rank-{group.n} group"
        )
    if group.weyl_kind == "sym" and cycles.negative_cycles:
        raise ValueError(f"{group.label} has no negative cycles")


def _multiply_by_one_minus(coeffs: list[int], exp: int) -> None:
    for k in range(len(coeffs) - 1, exp - 1, -1):
        coeffs[k] -= coeffs[k - exp]


def _apply_det_inverse(
    coeffs: list[int], group: GroupSpec, cycles: CycleData
) -> None:
    """In place, multiply by 1/det(1 - s*w) on the reflection representation.

    On the permutation representation the determinant is the product of
    (1 - s^c) over positive and (1 + s^c) over negative cycles; for SU the
    trivial summand is split off, which divides it by (1 - s).
    """
    if group.family == "SU":
        _multiply_by_one_minus(coeffs, 1)
    for c in cycles.positive_cycles:
        _divide_by_factor(coeffs, c, sign=1)
    for c in cycles.negative_cycles:
        _divide_by_factor(coeffs, c, sign=-1)


def _char_coeffs(group: GroupSpec, cycles: CycleData, trunc: int) -> list[int]:
    coeffs = [0] * (trunc + 1)
    coeffs[0] = 1
    for d in invariant_degrees(group):
        _multiply_by_one_minus(coeffs, d)
    _apply_det_inverse(coeffs, group, cycles)
    return coeffs


def coinvariant_char(
    group: GroupSpec, cycles: CycleData, trunc: int
) -> TruncatedSeries:
    """Graded trace of a class on the coinvariant algebra, in s = t^2,
    through degree ``trunc``."""
    _check_consistent(group, cycles)
    return TruncatedSeries(tuple(_char_coeffs(group, cycles, trunc)))


def _exact_average(acc: list[int], order: int) -> list[int]:
    out = []
    for k, value in enumerate(acc):
        q, r = divmod(value, order)
        if r != 0:
            raise IntegralityError(
                f"class average is not an integer at degree {k}: {value}/{order}"
            )
        out.append(q)
    return out


def _spread_to_t(s_coeffs: list[int], trunc: int) -> TruncatedSeries:
    out = [0] * (trunc + 1)
    for k, c in enumerate(s_coeffs):
        if 2 * k <= trunc:
            out[2 * k] = c
    return TruncatedSeries(tuple(out))


def oracle_ecom(group: GroupSpec, trunc: int) -> TruncatedSeries:
    """Fiber-space series through t-degree ``trunc`` via the class-sum of
    squared coinvariant characters."""
    s_trunc = trunc // 2
    acc = [0] * (s_trunc + 1)
    for cycles, size in conjugacy_classes(group):
        ch = _char_coeffs(group, cycles, s_trunc)
        for k in range(s_trunc + 1):
            total = 0
            for i in range(k + 1):
                a = ch[i]
                if a:
                    total += a * ch[k - i]
            acc[k] += size * total
    return _spread_to_t(_exact_average(acc, group.weyl_order), trunc)


def oracle_bcom(group: GroupSpec, trunc: int) -> TruncatedSeries:
    """Commuting-classifying-space series through t-degree ``trunc`` via the
    class-sum of character over reflection determinant."""
    s_trunc = trunc // 2
    acc = [0] * (s_trunc + 1)
    for cycles, size in conjugacy_classes(group):
        ch = _char_coeffs(group, cycles, s_trunc)
        _apply_det_inverse(ch, group, cycles)
        for k in range(s_trunc + 1):
            if ch[k]:
                acc[k] += size * ch[k]
    return _spread_to_t(_exact_average(acc, group.weyl_order), trunc)
