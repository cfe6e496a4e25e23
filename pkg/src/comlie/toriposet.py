"""Combinatorics of the intersections-of-maximal-tori poset of U(n).

A subtorus cut out by equalities among diagonal entries corresponds to a set
partition of the coordinates; conjugacy classes of such subtori correspond
to integer partitions of n, and each class is a flag manifold modulo the
permutations of its equal-size stages.  Chains of subtori, up to simultaneous
conjugation, become refinement chains of set partitions up to relabeling,
which this module enumerates by a canonical nested-multiset form.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from math import factorial

from .qseries import QPoly, exact_div
from .repa import partitions, q_factorial

SetPartition = tuple[tuple[int, ...], ...]
Chain = tuple[SetPartition, ...]


@dataclass(frozen=True)
class ToriComponent:
    """One conjugacy class of subtori: the flag manifold of the shape,
    divided by the permutations of equal stages."""

    shape: tuple[int, ...]
    flag_poincare: QPoly
    real_dimension: int
    stabilizer_order: int


def flag_poincare(shape: tuple[int, ...]) -> QPoly:
    """Gaussian multinomial: Poincare polynomial (in q = t^2) of the flag
    manifold with stage sizes given by the shape."""
    n = sum(shape)
    poly = q_factorial(n)
    for part in shape:
        poly = exact_div(poly, q_factorial(part))
    return poly


def components(n: int) -> list[ToriComponent]:
    """One component per partition of n, in partition order."""
    if n < 1:
        raise ValueError("n must be >= 1")
    out = []
    for shape in partitions(n):
        stabilizer = 1
        for mult in Counter(shape).values():
            stabilizer *= factorial(mult)
        out.append(
            ToriComponent(
                shape=shape,
                flag_poincare=flag_poincare(shape),
                real_dimension=n**2 - sum(p**2 for p in shape),
                stabilizer_order=stabilizer,
            )
        )
    return out


@dataclass(frozen=True)
class ChainClass:
    """A relabeling class of refinement chains of set partitions, with the
    lexicographically least canonical chain as representative."""

    representative: Chain
    block_counts: tuple[int, ...]


def _canonical(blocks: list[list[int]]) -> SetPartition:
    return tuple(sorted(tuple(sorted(b)) for b in blocks))


def set_partitions_with_blocks(items: tuple[int, ...], num_blocks: int):
    """All set partitions of ``items`` into exactly ``num_blocks`` blocks,
    in canonical form."""
    if num_blocks < 1 or num_blocks > len(items):
        return
    first, rest = items[0], items[1:]

    def rec(blocks: list[list[int]], remaining: tuple[int, ...]):
        open_slots = num_blocks - len(blocks)
        if not remaining:
            if open_slots == 0:
                yield _canonical(blocks)
            return
        if open_slots > len(remaining):
            return
        item, tail = remaining[0], remaining[1:]
        for block in blocks:
            block.append(item)
            yield from rec(blocks, tail)
            block.pop()
        if open_slots > 0:
            blocks.append([item])
            yield from rec(blocks, tail)
            blocks.pop()

    yield from rec([[first]], rest)


def refinements_with_blocks(partition: SetPartition, num_blocks: int):
    """Set partitions with ``num_blocks`` blocks refining ``partition``,
    obtained by splitting each block independently."""
    blocks = list(partition)

    def rec(idx: int, needed: int, acc: list[tuple[int, ...]]):
        if idx == len(blocks):
            if needed == 0:
                yield tuple(sorted(acc))
            return
        remaining_blocks = len(blocks) - idx - 1
        block = blocks[idx]
        for k in range(1, min(needed - remaining_blocks, len(block)) + 1):
            for sub in set_partitions_with_blocks(block, k):
                yield from rec(idx + 1, needed - k, acc + list(sub))

    yield from rec(0, num_blocks, [])


def _chains(n: int, block_counts: tuple[int, ...]):
    items = tuple(range(1, n + 1))

    def rec(level: int, chain: list[SetPartition]):
        if level == len(block_counts):
            yield tuple(chain)
            return
        if level == 0:
            source = set_partitions_with_blocks(items, block_counts[0])
        else:
            source = refinements_with_blocks(chain[-1], block_counts[level])
        for part in source:
            chain.append(part)
            yield from rec(level + 1, chain)
            chain.pop()

    yield from rec(0, [])


def chain_orbit_key(chain: Chain):
    """Canonical invariant of a chain under relabeling: the nested multiset
    of block sizes, recorded coarsest level outward.  Two chains are
    conjugate exactly when their keys agree."""

    def key_of(block: frozenset, level: int):
        if level == len(chain) - 1:
            return (len(block),)
        children = [
            frozenset(b) for b in chain[level + 1] if frozenset(b) <= block
        ]
        return (len(block), tuple(sorted(key_of(c, level + 1) for c in children)))

    return tuple(sorted(key_of(frozenset(b), 0) for b in chain[0]))


def _validate_ivals(n: int, ivals: tuple[int, ...]) -> tuple[int, ...]:
    ivals = tuple(ivals)
    if not ivals:
        raise ValueError("ivals must be nonempty")
    if list(ivals) != sorted(set(ivals)):
        raise ValueError("ivals must be strictly increasing")
    if ivals[0] < 0 or ivals[-1] > n - 1:
        raise ValueError(f"ivals must lie in 0..{n - 1}")
    return ivals


def chain_classes(n: int, ivals: tuple[int, ...]) -> list[ChainClass]:
    """Relabeling classes of chains whose r-th member has ivals[r] + 1
    blocks (the rank of the corresponding subtorus above the center)."""
    ivals = _validate_ivals(n, ivals)
    block_counts = tuple(i + 1 for i in ivals)
    best: dict = {}
    for chain in _chains(n, block_counts):
        key = chain_orbit_key(chain)
        if key not in best or chain < best[key]:
            best[key] = chain
    classes = [
        ChainClass(representative=chain, block_counts=block_counts)
        for chain in best.values()
    ]
    classes.sort(key=lambda c: c.representative)
    return classes


def _apply_to_chain(perm: tuple[int, ...], chain: Chain) -> Chain:
    return tuple(
        _canonical([[perm[i - 1] for i in block] for block in part])
        for part in chain
    )


def chain_class_count_bruteforce(n: int, ivals: tuple[int, ...]) -> int:
    """Count classes by splitting the raw chain set into explicit orbits
    under all n! relabelings; an independent check of the canonical form."""
    ivals = _validate_ivals(n, ivals)
    block_counts = tuple(i + 1 for i in ivals)
    all_chains = set(_chains(n, block_counts))
    perms = list(itertools.permutations(range(1, n + 1)))
    orbits = 0
    while all_chains:
        seed = all_chains.pop()
        orbits += 1
        for perm in perms:
            all_chains.discard(_apply_to_chain(perm, seed))
    return orbits
