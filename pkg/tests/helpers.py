"""Shared enumeration helpers and the fixture partition set.

The independent oracles live here: full enumeration of all self-maps, all
partition-preserving maps, all set partitions, and permutation scans used
to double-check the matching-based deciders.
"""

from functools import lru_cache
from itertools import permutations, product

import blocksemi as bs

# At most 5 points; single-block, singleton-block, and non-uniform shapes
# all represented.
FIXTURE_BLOCKS = (
    ((0,),),
    ((0,), (1,)),
    ((0, 1),),
    ((0,), (1, 2)),
    ((0, 1, 2),),
    ((0, 1), (2, 3)),
    ((0,), (1,), (2,), (3,)),
    ((0, 1, 2, 3),),
    ((0,), (1, 2), (3, 4)),
    ((0, 1), (2, 3, 4)),
    ((0,), (1,), (2, 3, 4)),
    ((0,), (1,), (2,), (3,), (4,)),
)

FIXTURE_PARTITIONS = tuple(bs.Partition(blocks) for blocks in FIXTURE_BLOCKS)


@lru_cache(maxsize=None)
def get_table(blocks: tuple) -> bs.SemigroupTable:
    return bs.enumerate_semigroup(bs.Partition(blocks))


@lru_cache(maxsize=None)
def get_members(blocks: tuple) -> tuple:
    p = bs.Partition(blocks)
    return tuple(bs.Member(p, t) for t in get_table(blocks).elements)


def all_transformations(n: int):
    """Every self-map of {0..n-1}."""
    for img in product(range(n), repeat=n):
        yield bs.Transformation(img)


def all_preserving(p: bs.Partition):
    """Every transformation sending each block into a single block."""
    per_block = []
    for block in p.blocks:
        options = []
        for target in p.blocks:
            options.extend(product(target, repeat=len(block)))
        per_block.append(options)
    for choice in product(*per_block):
        img = [0] * p.n
        for block, assigned in zip(p.blocks, choice):
            for x, y in zip(block, assigned):
                img[x] = y
        yield bs.Transformation(tuple(img))


def set_partitions(n: int):
    """Every partition of {0..n-1}, as a tuple of tuples."""

    def extend(k, classes):
        if k == n:
            yield tuple(tuple(c) for c in classes)
            return
        for c in classes:
            c.append(k)
            yield from extend(k + 1, classes)
            c.pop()
        classes.append([k])
        yield from extend(k + 1, classes)
        classes.pop()

    yield from extend(0, [])


def exists_alpha(m: int, admits) -> bool:
    """Scan all permutations of range(m) for one satisfying the predicate."""
    return any(admits(alpha) for alpha in permutations(range(m)))
