"""Ground-set combinatorics for partition-preserving transformations.

A partition splits the ground set {0, ..., n-1} into indexed blocks.  A
transformation preserves the partition when each block's image lands inside
a single block; the induced self-map of the block indices is its character.
The semigroup studied here consists of the preserving maps whose character
is a permutation of the block indices, so every block is carried into the
block its character selects.

All types are immutable after construction and all operations are pure, so
values can be shared freely between threads or worker processes.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence


class BlocksemiError(Exception):
    """Base class for the domain errors raised by this package."""


class SizeMismatch(BlocksemiError):
    """Objects that must share a ground-set size do not."""


class NotInB(BlocksemiError):
    """The transformation is not a member of the block-permuting semigroup."""


class NotPartitionPreserving(NotInB):
    """Some block's image meets more than one block."""

    def __init__(self, block: int):
        self.block = block
        super().__init__(f"block {block} is not mapped into a single block")


@dataclass(frozen=True)
class Partition:
    """An indexed family of disjoint nonempty blocks covering {0, ..., n-1}.

    Blocks are canonicalized on construction: each block is sorted and the
    blocks are ordered by their minimum element, so two partitions with the
    same block family compare and hash equal.  The block indices 0..m-1 of
    the canonical order are the index set everything else refers to.
    """

    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        blocks = tuple(sorted(tuple(sorted(b)) for b in self.blocks))
        object.__setattr__(self, "blocks", blocks)
        if not blocks:
            raise ValueError("a partition needs at least one block")
        elements = [x for b in blocks for x in b]
        if any(not b for b in blocks):
            raise ValueError("blocks must be nonempty")
        if sorted(elements) != list(range(len(elements))):
            raise ValueError("blocks must be disjoint and cover 0..n-1")

    @classmethod
    def singletons(cls, n: int) -> "Partition":
        return cls(tuple((x,) for x in range(n)))

    @classmethod
    def single_block(cls, n: int) -> "Partition":
        return cls((tuple(range(n)),))

    @cached_property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    @cached_property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    @cached_property
    def block_of(self) -> tuple[int, ...]:
        """block_of[x] is the index of the block containing x."""
        owner = [0] * self.n
        for i, b in enumerate(self.blocks):
            for x in b:
                owner[x] = i
        return tuple(owner)

    @cached_property
    def block_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(b) for b in self.blocks)

    @property
    def is_uniform(self) -> bool:
        return len(set(self.sizes)) == 1

    def __len__(self) -> int:
        return len(self.blocks)


@dataclass(frozen=True)
class Transformation:
    """A total self-map of {0, ..., n-1} stored as its image array.

    Composition is read left to right: ``x (f * g) = (x f) g``, i.e. f acts
    first.
    """

    image: tuple[int, ...]

    def __post_init__(self):
        image = tuple(self.image)
        object.__setattr__(self, "image", image)
        n = len(image)
        if n == 0:
            raise ValueError("empty ground set")
        if any(not (0 <= v < n) for v in image):
            raise ValueError("image entries must lie in 0..n-1")

    @classmethod
    def identity(cls, n: int) -> "Transformation":
        return cls(tuple(range(n)))

    @property
    def n(self) -> int:
        return len(self.image)

    @cached_property
    def is_bijective(self) -> bool:
        return len(set(self.image)) == self.n

    def __call__(self, x: int) -> int:
        return self.image[x]

    def __mul__(self, other: "Transformation") -> "Transformation":
        return compose(self, other)


@dataclass(frozen=True)
class Character:
    """The self-map induced on the block indices by a preserving map."""

    map: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "map", tuple(self.map))

    @property
    def domain_size(self) -> int:
        return len(self.map)

    @cached_property
    def is_permutation(self) -> bool:
        return sorted(self.map) == list(range(len(self.map)))

    def inverse(self) -> "Character":
        if not self.is_permutation:
            raise ValueError("only a permutation character has an inverse")
        inv = [0] * len(self.map)
        for i, j in enumerate(self.map):
            inv[j] = i
        return Character(tuple(inv))

    def then(self, other: "Character") -> "Character":
        """Left-to-right composition, matching transformation composition."""
        return Character(tuple(other.map[j] for j in self.map))


@dataclass(frozen=True)
class BlockRestriction:
    """The action of a preserving map on one block, viewed into its target.

    ``images[k]`` is the image of ``source[k]``; every image point lies in
    the target block.
    """

    source_block: int
    target_block: int
    source: tuple[int, ...]
    target: tuple[int, ...]
    images: tuple[int, ...]

    def __post_init__(self):
        if len(self.images) != len(self.source):
            raise ValueError("one image per source element")
        if not set(self.images) <= set(self.target):
            raise ValueError("images must lie in the target block")

    @cached_property
    def image_set(self) -> frozenset[int]:
        return frozenset(self.images)


@dataclass(frozen=True)
class KernelPartition:
    """Grouping of a domain into classes of equal image.

    Classes are canonicalized (sorted, ordered by minimum element), so
    kernel partitions compare and hash structurally.
    """

    classes: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        classes = tuple(sorted(tuple(sorted(c)) for c in self.classes))
        object.__setattr__(self, "classes", classes)
        if any(not c for c in classes):
            raise ValueError("kernel classes must be nonempty")

    def __len__(self) -> int:
        return len(self.classes)


@dataclass(frozen=True)
class SizeProfile:
    """Multiset of block-image cardinalities, as sorted (size, count) pairs.

    This is the complete invariant separating the classes of the relation
    decided by `eq_D`: two members are related exactly when their profiles
    coincide.
    """

    counts: tuple[tuple[int, int], ...]

    def __post_init__(self):
        counts = tuple(sorted((int(s), int(c)) for s, c in self.counts))
        object.__setattr__(self, "counts", counts)
        if any(s < 1 or c < 1 for s, c in counts):
            raise ValueError("sizes and counts must be positive")

    @classmethod
    def from_sizes(cls, sizes: Iterable[int]) -> "SizeProfile":
        return cls(tuple(Counter(sizes).items()))

    def as_dict(self) -> dict[int, int]:
        return dict(self.counts)

    @property
    def total(self) -> int:
        return sum(c for _, c in self.counts)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(s for s, _ in self.counts)

    def __getitem__(self, size: int) -> int:
        return self.as_dict().get(size, 0)


def _as_transformation(f) -> Transformation:
    if isinstance(f, Transformation):
        return f
    return Transformation(tuple(f))


def _require_same_n(f: Transformation, p: Partition) -> None:
    if f.n != p.n:
        raise SizeMismatch(f"transformation on {f.n} points, partition on {p.n}")


def compose(f: Transformation, g: Transformation) -> Transformation:
    """x (fg) = (x f) g."""
    f, g = _as_transformation(f), _as_transformation(g)
    if f.n != g.n:
        raise SizeMismatch(f"cannot compose maps on {f.n} and {g.n} points")
    gi = g.image
    return Transformation(tuple(gi[v] for v in f.image))


def preserves_partition(f, p: Partition) -> bool:
    """True when every block's image is contained in a single block."""
    f = _as_transformation(f)
    _require_same_n(f, p)
    owner, img = p.block_of, f.image
    for block in p.blocks:
        j = owner[img[block[0]]]
        if any(owner[img[x]] != j for x in block):
            return False
    return True


def character(f, p: Partition) -> Character:
    """The induced map on block indices; fails fast on a non-preserving map."""
    f = _as_transformation(f)
    _require_same_n(f, p)
    owner, img = p.block_of, f.image
    out = []
    for i, block in enumerate(p.blocks):
        j = owner[img[block[0]]]
        if any(owner[img[x]] != j for x in block):
            raise NotPartitionPreserving(i)
        out.append(j)
    return Character(tuple(out))


def in_B(f, p: Partition) -> bool:
    """Membership test: preserving with a permutation character."""
    f = _as_transformation(f)
    _require_same_n(f, p)
    try:
        return character(f, p).is_permutation
    except NotPartitionPreserving:
        return False


def block_restrictions(f, p: Partition) -> tuple[BlockRestriction, ...]:
    """One restriction per block, targets chosen by the character."""
    f = _as_transformation(f)
    chi = character(f, p)
    img = f.image
    return tuple(
        BlockRestriction(
            source_block=i,
            target_block=chi.map[i],
            source=block,
            target=p.blocks[chi.map[i]],
            images=tuple(img[x] for x in block),
        )
        for i, block in enumerate(p.blocks)
    )


def collapse(r: BlockRestriction) -> int:
    """Source size minus the number of kernel classes of the restriction.

    Counting kernel classes (= distinct images) sidesteps any explicit
    transversal choice; the value does not depend on one.
    """
    return len(r.source) - len(r.image_set)


def defect(r: BlockRestriction) -> int:
    """Target size minus the image size of the restriction."""
    return len(r.target) - len(r.image_set)


def kernel_partition(f) -> KernelPartition:
    """Classes of equal image over the whole ground set."""
    f = _as_transformation(f)
    groups: dict[int, list[int]] = {}
    for x, y in enumerate(f.image):
        groups.setdefault(y, []).append(x)
    return KernelPartition(tuple(tuple(c) for c in groups.values()))


def kernel_restricted(f, subset: Iterable[int]) -> KernelPartition:
    """The kernel classes that meet the given subset (kept whole).

    The number of surviving classes equals the image size of the subset,
    which is what makes this view useful.
    """
    f = _as_transformation(f)
    wanted = set(subset)
    full = kernel_partition(f)
    kept = tuple(c for c in full.classes if wanted.intersection(c))
    return KernelPartition(kept)


def refines(p: KernelPartition, q: KernelPartition) -> bool:
    """True when every class of p is contained in a class of q."""
    owner: dict[int, int] = {}
    for ci, cls in enumerate(q.classes):
        for x in cls:
            owner[x] = ci
    for cls in p.classes:
        j = owner.get(cls[0])
        if j is None or any(owner.get(x) != j for x in cls):
            return False
    return True


def size_profile(f, p: Partition) -> SizeProfile:
    """Count blocks by image cardinality; requires semigroup membership."""
    return as_member(f, p).profile


@dataclass(frozen=True)
class Member:
    """A validated element of the block-permuting semigroup over a partition.

    Construction checks membership once (raising `NotPartitionPreserving`
    or `NotInB` otherwise) and caches the character; the other per-element
    views are computed on first use.  Downstream constructions are free to
    assume the character is a permutation.
    """

    partition: Partition
    transformation: Transformation
    character: Character = field(init=False)

    def __post_init__(self):
        t = _as_transformation(self.transformation)
        object.__setattr__(self, "transformation", t)
        _require_same_n(t, self.partition)
        chi = character(t, self.partition)
        if not chi.is_permutation:
            raise NotInB("character is not a permutation of the block indices")
        object.__setattr__(self, "character", chi)

    @property
    def image(self) -> tuple[int, ...]:
        return self.transformation.image

    @cached_property
    def restrictions(self) -> tuple[BlockRestriction, ...]:
        p, img = self.partition, self.transformation.image
        return tuple(
            BlockRestriction(
                source_block=i,
                target_block=self.character.map[i],
                source=block,
                target=p.blocks[self.character.map[i]],
                images=tuple(img[x] for x in block),
            )
            for i, block in enumerate(p.blocks)
        )

    @cached_property
    def image_sets(self) -> tuple[frozenset[int], ...]:
        """image_sets[i] is the image of block i."""
        return tuple(r.image_set for r in self.restrictions)

    @cached_property
    def image_sizes(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.image_sets)

    @cached_property
    def kernel(self) -> KernelPartition:
        return kernel_partition(self.transformation)

    @cached_property
    def profile(self) -> SizeProfile:
        return SizeProfile.from_sizes(self.image_sizes)


def as_member(f, p: Partition) -> Member:
    """Coerce a transformation (or image sequence) into a validated member."""
    if isinstance(f, Member):
        if f.partition != p:
            raise SizeMismatch("member belongs to a different partition")
        return f
    return Member(p, _as_transformation(f))
