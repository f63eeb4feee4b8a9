"""Regularity and unit-regularity witnesses.

Every member f of the semigroup has an inner inverse g with fgf = f; this
module constructs one explicitly.  A member is unit-regular when the
witness can be taken to be a unit (a block-bijective member), which happens
exactly when collapse equals defect on every block restriction.  All
choices the constructions leave open are pinned to minima so witnesses are
deterministic and reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    BlocksemiError,
    Member,
    Partition,
    Transformation,
    _as_transformation,
    _require_same_n,
    as_member,
    character,
    collapse,
    defect,
    preserves_partition,
)

PLAIN = "plain"
UNIT = "unit"


class NotUnitRegular(BlocksemiError):
    """Construction obstruction: a restriction with collapse != defect."""

    def __init__(self, block: int, collapse: int, defect: int):
        self.block = block
        self.collapse = collapse
        self.defect = defect
        super().__init__(
            f"restriction on block {block} has collapse {collapse}"
            f" but defect {defect}"
        )


@dataclass(frozen=True)
class RegularityWitness:
    """A map g with fgf = f; flavor 'unit' means g is a unit."""

    g: Transformation
    flavor: str


def regular_witness(f, p: Partition) -> RegularityWitness:
    """An inner inverse for any member.

    On the image of f, g sends each point to its least preimage; off the
    image, everything in block i is parked at the least element of the
    block the inverse character selects.  The result is itself a member
    with the inverse character.
    """
    m = as_member(f, p)
    img = m.transformation.image
    alpha = m.character.inverse()

    least_preimage: dict[int, int] = {}
    for x in range(p.n):
        y = img[x]
        if y not in least_preimage:
            least_preimage[y] = x

    out = [0] * p.n
    for i, block in enumerate(p.blocks):
        anchor = p.blocks[alpha.map[i]][0]
        for x in block:
            out[x] = least_preimage.get(x, anchor)
    return RegularityWitness(Transformation(tuple(out)), PLAIN)


def is_unit(f, p: Partition) -> bool:
    """True when f is a unit: every block maps bijectively onto its target."""
    f = _as_transformation(f)
    _require_same_n(f, p)
    if not preserves_partition(f, p):
        return False
    chi = character(f, p)
    if not chi.is_permutation:
        return False
    img = f.image
    for i, block in enumerate(p.blocks):
        image = {img[x] for x in block}
        if len(image) != len(block) or len(image) != len(p.blocks[chi.map[i]]):
            return False
    return True


def is_unit_regular(f, p: Partition) -> bool:
    """Collapse equals defect on every block restriction."""
    m = as_member(f, p)
    return all(collapse(r) == defect(r) for r in m.restrictions)


def unit_regular_witness(f, p: Partition) -> RegularityWitness:
    """A unit g with fgf = f, or the obstruction that prevents one.

    Built blockwise: for each target block i, the source block j is the one
    the inverse character selects, so f carries block j into block i.
    Points of block i lying in that image go to the least preimage (the
    canonical transversal); the leftover points biject onto the
    non-transversal leftovers of block j, matched in sorted order.  The
    blockwise maps paste into a unit exactly when collapse = defect holds
    for each restriction; the first failure, in this target-ascending
    order, is reported.
    """
    m = as_member(f, p)
    img = m.transformation.image
    inv = m.character.inverse().map

    out = [0] * p.n
    for i in range(len(p.blocks)):
        j = inv[i]
        source = p.blocks[j]
        target = p.blocks[i]

        to_transversal: dict[int, int] = {}
        for x in source:
            y = img[x]
            if y not in to_transversal:
                to_transversal[y] = x
        c = len(source) - len(to_transversal)
        d = len(target) - len(to_transversal)
        if c != d:
            raise NotUnitRegular(j, c, d)

        transversal = set(to_transversal.values())
        spare_source = [x for x in source if x not in transversal]
        spare_target = [x for x in target if x not in to_transversal]
        for x in target:
            if x in to_transversal:
                out[x] = to_transversal[x]
        for x, y in zip(spare_target, spare_source):
            out[x] = y
    return RegularityWitness(Transformation(tuple(out)), UNIT)


def semigroup_unit_regular(p: Partition) -> bool:
    """True when every member is unit-regular: the blocks are uniform.

    Block finiteness, the other half of the criterion, holds automatically
    for these ground sets.
    """
    return p.is_uniform


def witness_is_valid(f, w: RegularityWitness, p: Partition) -> bool:
    """Direct check of the witness contract by composition."""
    m = as_member(f, p)
    t = m.transformation
    if (t * w.g) * t != t:
        return False
    try:
        g_member = Member(p, w.g)
    except BlocksemiError:
        return False
    if g_member.character != m.character.inverse():
        return False
    if w.flavor == UNIT:
        return is_unit(w.g, p)
    return True
