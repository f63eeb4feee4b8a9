"""Brute-force ground truth for small ground sets.

The semigroup is enumerated structurally: pick a permutation of the block
indices as the character, then let each block map arbitrarily into its
target block.  Green's queries are then answered straight from the ideal
definitions by exhaustive search over the table, with memoized principal
ideals so that full pairwise sweeps stay feasible.  Nothing here consults
the block-level characterizations being validated.
"""

from __future__ import annotations

import json
from functools import cached_property
from itertools import permutations, product
from pathlib import Path

from .core import BlocksemiError, Partition, Transformation, _as_transformation

DEFAULT_CAP = 200_000

TABLE_FORMAT = "blocksemi.table/1"


class TooLarge(BlocksemiError):
    """Refusal to enumerate past the cap; carries the exact predicted size."""

    def __init__(self, estimated: int, cap: int):
        self.estimated = estimated
        self.cap = cap
        super().__init__(f"semigroup has {estimated} elements, over the cap {cap}")


class ElementNotInTable(BlocksemiError):
    """A query used a transformation outside the enumerated semigroup."""


def expected_size(p: Partition) -> int:
    """Predicted semigroup size, before enumerating anything.

    Summing over all characters alpha the product over blocks i of
    |target of i| ** |block i| is the permanent of the matrix whose (i, j)
    entry counts the maps from block i into block j.  Ryser's formula
    evaluates that in O(2^m * m^2) instead of O(m!), which keeps the cap
    check instant even for partitions far beyond enumerable size.
    """
    sizes = p.sizes
    m = len(sizes)
    rows = [[sj**si for sj in sizes] for si in sizes]
    total = 0
    for mask in range(1, 1 << m):
        chosen = [j for j in range(m) if mask >> j & 1]
        prod = 1
        for row in rows:
            prod *= sum(row[j] for j in chosen)
        total += (-1) ** len(chosen) * prod
    return (-1) ** m * total


def enumerate_semigroup(p: Partition, cap: int = DEFAULT_CAP) -> "SemigroupTable":
    """Complete, duplicate-free enumeration in a deterministic order.

    Characters run in lexicographic order; within a character, per-block
    assignments run in product order over ascending block elements.  The
    size is checked against the counting formula, so a duplicate or a gap
    cannot pass silently.
    """
    estimated = expected_size(p)
    if estimated > cap:
        raise TooLarge(estimated, cap)

    n, blocks = p.n, p.blocks
    elements: list[Transformation] = []
    for alpha in permutations(range(len(blocks))):
        per_block = [
            list(product(blocks[alpha[i]], repeat=len(blocks[i])))
            for i in range(len(blocks))
        ]
        for choice in product(*per_block):
            img = [0] * n
            for block, assigned in zip(blocks, choice):
                for x, y in zip(block, assigned):
                    img[x] = y
            elements.append(Transformation(tuple(img)))
    table = SemigroupTable(p, elements)
    if table.size != estimated:
        raise RuntimeError(
            f"enumerated {table.size} elements, formula says {estimated}"
        )
    return table


class SemigroupTable:
    """An enumerated semigroup with memoized principal ideals.

    The element list is immutable once built; the lazy caches below are
    pure functions of it.  Principal ideals are interned (equal ideals
    share one frozenset), so ideal equality tests are cheap and the
    two-sided ideals can be assembled by uniting a handful of distinct
    one-sided ones.
    """

    def __init__(self, partition: Partition, elements):
        self.partition = partition
        self.elements: tuple[Transformation, ...] = tuple(
            _as_transformation(t) for t in elements
        )
        self.index: dict[tuple[int, ...], int] = {
            t.image: k for k, t in enumerate(self.elements)
        }
        if len(self.index) != len(self.elements):
            raise ValueError("duplicate elements in table")
        self.size = len(self.elements)

    def index_of(self, f) -> int:
        f = _as_transformation(getattr(f, "transformation", f))
        try:
            return self.index[f.image]
        except KeyError:
            raise ElementNotInTable(f"{list(f.image)} is not in the table") from None

    @cached_property
    def identity_index(self) -> int:
        return self.index_of(Transformation.identity(self.partition.n))

    @cached_property
    def units(self) -> tuple[int, ...]:
        """Indices of the invertible elements (the bijective members)."""
        return tuple(k for k, t in enumerate(self.elements) if t.is_bijective)

    def _intern(self, sets: list[frozenset[int]]) -> list[frozenset[int]]:
        seen: dict[frozenset[int], frozenset[int]] = {}
        return [seen.setdefault(s, s) for s in sets]

    @cached_property
    def left_ideals(self) -> list[frozenset[int]]:
        """left_ideals[k]: indices of every product (h then element k).

        The identity is in the table, so this is the full principal left
        ideal and contains k itself.
        """
        images = [t.image for t in self.elements]
        out = []
        for g in images:
            out.append(frozenset(self.index[tuple(g[v] for v in h)] for h in images))
        return self._intern(out)

    @cached_property
    def right_ideals(self) -> list[frozenset[int]]:
        """right_ideals[k]: indices of every product (element k then h)."""
        images = [t.image for t in self.elements]
        out = []
        for g in images:
            out.append(frozenset(self.index[tuple(h[v] for v in g)] for h in images))
        return self._intern(out)

    @cached_property
    def twosided_ideals(self) -> list[frozenset[int]]:
        """Union of left ideals over the right multiples of each element.

        Any three-factor product (h then k then h') is (h then p) for the
        right multiple p = (k then h'), so this union is exactly the
        principal two-sided ideal.  It only depends on the right ideal, so
        the union is computed once per distinct right ideal.
        """
        cache: dict[frozenset[int], frozenset[int]] = {}
        out = []
        for k in range(self.size):
            r = self.right_ideals[k]
            got = cache.get(r)
            if got is None:
                distinct = {self.left_ideals[q] for q in r}
                got = frozenset().union(*distinct)
                cache[r] = got
            out.append(got)
        return self._intern(out)

    @cached_property
    def l_class_ids(self) -> list[int]:
        return self._class_ids(self.left_ideals)

    @cached_property
    def r_class_ids(self) -> list[int]:
        return self._class_ids(self.right_ideals)

    @cached_property
    def j_class_ids(self) -> list[int]:
        return self._class_ids(self.twosided_ideals)

    @staticmethod
    def _class_ids(ideals: list[frozenset[int]]) -> list[int]:
        ids: dict[frozenset[int], int] = {}
        return [ids.setdefault(s, len(ids)) for s in ideals]

    @cached_property
    def lr_pairs(self) -> frozenset[tuple[int, int]]:
        """(L-class, R-class) pairs realized by some element; the key fact
        for deciding the composite relation D = L after R."""
        return frozenset(
            (self.l_class_ids[k], self.r_class_ids[k]) for k in range(self.size)
        )

    def dump(self, path) -> None:
        doc = {
            "format": TABLE_FORMAT,
            "blocks": [list(b) for b in self.partition.blocks],
            "elements": [list(t.image) for t in self.elements],
        }
        Path(path).write_text(json.dumps(doc) + "\n")

    @classmethod
    def load(cls, path) -> "SemigroupTable":
        doc = json.loads(Path(path).read_text())
        if doc.get("format") != TABLE_FORMAT:
            raise ValueError(f"unsupported table format: {doc.get('format')!r}")
        partition = Partition(tuple(tuple(b) for b in doc["blocks"]))
        return cls(partition, [Transformation(tuple(e)) for e in doc["elements"]])


def oracle_leq_L(f, g, table: SemigroupTable) -> bool:
    """f lies in the principal left ideal of g."""
    return table.index_of(f) in table.left_ideals[table.index_of(g)]


def oracle_eq_L(f, g, table: SemigroupTable) -> bool:
    return table.left_ideals[table.index_of(f)] == table.left_ideals[table.index_of(g)]


def oracle_leq_R(f, g, table: SemigroupTable) -> bool:
    """f lies in the principal right ideal of g."""
    return table.index_of(f) in table.right_ideals[table.index_of(g)]


def oracle_eq_R(f, g, table: SemigroupTable) -> bool:
    return (
        table.right_ideals[table.index_of(f)] == table.right_ideals[table.index_of(g)]
    )


def oracle_leq_J(f, g, table: SemigroupTable) -> bool:
    """f lies in the principal two-sided ideal of g."""
    return table.index_of(f) in table.twosided_ideals[table.index_of(g)]


def oracle_eq_J(f, g, table: SemigroupTable) -> bool:
    return (
        table.twosided_ideals[table.index_of(f)]
        == table.twosided_ideals[table.index_of(g)]
    )


def oracle_eq_H(f, g, table: SemigroupTable) -> bool:
    return oracle_eq_L(f, g, table) and oracle_eq_R(f, g, table)


def oracle_eq_D(f, g, table: SemigroupTable) -> bool:
    """Some middle element is L-equivalent to f and R-equivalent to g."""
    fi, gi = table.index_of(f), table.index_of(g)
    return (table.l_class_ids[fi], table.r_class_ids[gi]) in table.lr_pairs


def oracle_regular(f, table: SemigroupTable) -> bool:
    """Exhaustive search for b with f b f = f."""
    fi = table.index_of(f)
    f_img = table.elements[fi].image
    for b in table.elements:
        b_img = b.image
        if all(f_img[b_img[f_img[x]]] == f_img[x] for x in range(len(f_img))):
            return True
    return False


def oracle_unit_regular(f, table: SemigroupTable) -> bool:
    """Exhaustive search for a unit u with f u f = f."""
    fi = table.index_of(f)
    f_img = table.elements[fi].image
    for k in table.units:
        u_img = table.elements[k].image
        if all(f_img[u_img[f_img[x]]] == f_img[x] for x in range(len(f_img))):
            return True
    return False
