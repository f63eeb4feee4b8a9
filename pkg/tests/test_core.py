from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import blocksemi as bs
from helpers import (
    FIXTURE_PARTITIONS,
    all_preserving,
    all_transformations,
    get_members,
    get_table,
    set_partitions,
)

P22 = bs.Partition(((0, 1), (2, 3)))
P12 = bs.Partition(((0,), (1, 2)))


class TestPartition:
    def test_canonical_order(self):
        p = bs.Partition(((2, 3), (1, 0)))
        assert p.blocks == ((0, 1), (2, 3))
        assert p == P22

    def test_block_of(self):
        assert P12.block_of == (0, 1, 1)
        assert P12.n == 3
        assert len(P12) == 2

    def test_rejects_empty_ground_set(self):
        with pytest.raises(ValueError):
            bs.Partition(())

    def test_rejects_empty_block(self):
        with pytest.raises(ValueError):
            bs.Partition(((0,), ()))

    def test_rejects_gaps_and_overlaps(self):
        with pytest.raises(ValueError):
            bs.Partition(((0, 1), (1, 2)))
        with pytest.raises(ValueError):
            bs.Partition(((0,), (2,)))

    def test_degenerate_shapes_allowed(self):
        assert bs.Partition.single_block(3).blocks == ((0, 1, 2),)
        assert bs.Partition.singletons(3).blocks == ((0,), (1,), (2,))


class TestTransformation:
    def test_validates_range(self):
        with pytest.raises(ValueError):
            bs.Transformation((0, 3))
        with pytest.raises(ValueError):
            bs.Transformation(())

    def test_identity(self):
        assert bs.Transformation.identity(3).image == (0, 1, 2)


class TestCompose:
    def test_involution_squared_is_identity(self):
        f = bs.Transformation((1, 0))
        assert (f * f).image == (0, 1)

    def test_right_identity(self):
        f = bs.Transformation((0, 0, 2, 2))
        assert (f * bs.Transformation.identity(4)) == f

    def test_left_to_right_evaluation(self):
        f = bs.Transformation((1, 0, 0))
        assert (f * f).image == (0, 1, 1)

    def test_size_mismatch(self):
        with pytest.raises(bs.SizeMismatch):
            bs.compose(bs.Transformation((0,)), bs.Transformation((0, 1)))

    def test_associative_exhaustive_small(self):
        # all triples, via the composition table indexed over T_n
        for n in (1, 2, 3, 4):
            maps = list(all_transformations(n))
            index = {t.image: k for k, t in enumerate(maps)}
            table = [
                tuple(index[(t1 * t2).image] for t2 in maps) for t1 in maps
            ]
            for a in range(len(maps)):
                row_a = table[a]
                for b in range(len(maps)):
                    assert table[row_a[b]] == tuple(row_a[v] for v in table[b])

    @settings(deadline=None)
    @given(st.data())
    def test_associative_random(self, data):
        n = data.draw(st.integers(1, 8))
        img = st.tuples(*[st.integers(0, n - 1)] * n)
        f, g, h = (bs.Transformation(data.draw(img)) for _ in range(3))
        assert (f * g) * h == f * (g * h)


class TestPreservesAndCharacter:
    def test_identity_preserves_everything(self):
        for p in FIXTURE_PARTITIONS:
            assert bs.preserves_partition(bs.Transformation.identity(p.n), p)

    def test_split_block_detected(self):
        assert not bs.preserves_partition(bs.Transformation((0, 2, 2, 2)), P22)

    def test_block_swap_preserves(self):
        assert bs.preserves_partition(bs.Transformation((2, 3, 0, 0)), P22)

    def test_character_of_identity(self):
        chi = bs.character(bs.Transformation.identity(4), P22)
        assert chi.map == (0, 1) and chi.is_permutation

    def test_character_of_swap(self):
        chi = bs.character(bs.Transformation((2, 3, 0, 0)), P22)
        assert chi.map == (1, 0) and chi.is_permutation

    def test_character_collapse_not_permutation(self):
        chi = bs.character(bs.Transformation((0, 0, 0)), P12)
        assert chi.map == (0, 0) and not chi.is_permutation

    def test_character_raises_on_non_preserving(self):
        with pytest.raises(bs.NotPartitionPreserving) as err:
            bs.character(bs.Transformation((0, 2, 2, 2)), P22)
        assert err.value.block == 0

    def test_character_multiplicative_exhaustive(self):
        # over every preserving pair, for every partition on up to 4 points
        for n in range(1, 5):
            for blocks in set_partitions(n):
                p = bs.Partition(blocks)
                maps = list(all_preserving(p))
                chars = {t.image: bs.character(t, p) for t in maps}
                for f in maps:
                    cf = chars[f.image]
                    for g in maps:
                        assert bs.character(f * g, p) == cf.then(chars[g.image])


class TestMembership:
    def test_identity_in_b(self):
        for p in FIXTURE_PARTITIONS:
            assert bs.in_B(bs.Transformation.identity(p.n), p)

    def test_collapsing_characters_rejected(self):
        assert not bs.in_B(bs.Transformation((0, 0, 0)), P12)

    def test_non_bijective_member_accepted(self):
        assert bs.in_B(bs.Transformation((0, 0, 2, 2)), P22)

    def test_non_preserving_returns_false(self):
        assert not bs.in_B(bs.Transformation((0, 2, 2, 2)), P22)

    def test_closed_under_composition_exhaustive(self):
        for n in range(1, 5):
            for blocks in set_partitions(n):
                table = get_table(blocks)
                p = table.partition
                for f in table.elements:
                    for g in table.elements:
                        assert bs.in_B(f * g, p)

    def test_member_wrapper_caches_character(self):
        m = bs.Member(P22, bs.Transformation((2, 3, 0, 0)))
        assert m.character.map == (1, 0)
        with pytest.raises(bs.NotInB):
            bs.Member(P12, bs.Transformation((0, 0, 0)))

    def test_degenerate_semigroups(self):
        # one block: all self-maps; all singletons: only the bijections
        assert get_table(((0, 1, 2),)).size == 27
        sym = get_table(((0,), (1,), (2,)))
        assert sym.size == 6
        assert all(t.is_bijective for t in sym.elements)


class TestRestrictions:
    def test_identity_restrictions(self):
        rs = bs.block_restrictions(bs.Transformation.identity(4), P22)
        assert [(r.source_block, r.target_block) for r in rs] == [(0, 0), (1, 1)]
        assert all(r.images == r.source for r in rs)

    def test_swap_restrictions(self):
        rs = bs.block_restrictions(bs.Transformation((2, 3, 0, 0)), P22)
        assert rs[0].target_block == 1 and rs[0].images == (2, 3)
        assert rs[1].target_block == 0 and rs[1].images == (0, 0)

    def test_blockwise_identity_like(self):
        rs = bs.block_restrictions(bs.Transformation((0, 0, 2, 2)), P22)
        assert rs[0].images == (0, 0) and rs[1].images == (2, 2)

    def test_collapse_values(self):
        rs = bs.block_restrictions(bs.Transformation((0, 0, 2, 2)), P22)
        assert bs.collapse(rs[0]) == 1
        injective = bs.block_restrictions(bs.Transformation.identity(4), P22)
        assert bs.collapse(injective[0]) == 0
        constant = bs.block_restrictions(
            bs.Transformation((0, 0, 0)), bs.Partition.single_block(3)
        )
        assert bs.collapse(constant[0]) == 2

    def test_defect_values(self):
        rs = bs.block_restrictions(bs.Transformation((0, 0, 2, 2)), P22)
        assert bs.defect(rs[0]) == 1
        surjective = bs.block_restrictions(bs.Transformation.identity(4), P22)
        assert bs.defect(surjective[0]) == 0
        # singleton into a pair
        r = bs.BlockRestriction(0, 1, (0,), (1, 2), (1,))
        assert bs.defect(r) == 1

    def test_collapse_defect_accounting(self):
        # collapse + kernel classes = source size; defect + image = target size
        for blocks in (((0, 1), (2, 3)), ((0,), (1, 2), (3, 4))):
            for m in get_members(blocks):
                for r in m.restrictions:
                    classes = len(set(r.images))
                    assert bs.collapse(r) + classes == len(r.source)
                    assert bs.defect(r) + len(r.image_set) == len(r.target)


class TestKernels:
    def test_identity_kernel_is_discrete(self):
        k = bs.kernel_partition(bs.Transformation.identity(3))
        assert k.classes == ((0,), (1,), (2,))

    def test_kernel_of_block_collapse(self):
        k = bs.kernel_partition(bs.Transformation((0, 0, 2, 2)))
        assert k.classes == ((0, 1), (2, 3))

    def test_refinement_direction(self):
        discrete = bs.kernel_partition(bs.Transformation.identity(4))
        coarse = bs.kernel_partition(bs.Transformation((0, 0, 2, 2)))
        assert bs.refines(discrete, coarse)
        assert not bs.refines(coarse, discrete)

    def test_restricted_kernel_counts_image(self):
        f = bs.Transformation((0, 0, 2, 2))
        for block in P22.blocks:
            kept = bs.kernel_restricted(f, block)
            assert len(kept) == len({f(x) for x in block})

    def test_refines_is_partial_order_exhaustive(self):
        kernels = {bs.kernel_partition(t) for t in all_transformations(4)}
        kernels = sorted(kernels, key=lambda k: k.classes)
        for a in kernels:
            assert bs.refines(a, a)
            for b in kernels:
                if bs.refines(a, b) and bs.refines(b, a):
                    assert a == b
                for c in kernels:
                    if bs.refines(a, b) and bs.refines(b, c):
                        assert bs.refines(a, c)


class TestSizeProfile:
    def test_identity_profile(self):
        assert bs.size_profile(bs.Transformation.identity(4), P22).as_dict() == {2: 2}

    def test_collapsed_profile(self):
        assert bs.size_profile(bs.Transformation((0, 0, 2, 2)), P22).as_dict() == {
            1: 2
        }

    def test_mixed_profile(self):
        assert bs.size_profile(bs.Transformation((0, 0, 2, 3)), P22).as_dict() == {
            1: 1,
            2: 1,
        }

    def test_requires_membership(self):
        with pytest.raises(bs.NotInB):
            bs.size_profile(bs.Transformation((0, 0, 0)), P12)

    def test_totals_block_count(self):
        for p in FIXTURE_PARTITIONS:
            for m in get_members(p.blocks):
                assert m.profile.total == len(p)
