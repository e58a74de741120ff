"""Tests for blocks of I_G and the generalized Springer correspondence."""

from fractions import Fraction

import pytest

from src.errors import LabelError
from src.exactalg.partitions import Multipartition, Partition, partitions_of
from src.springer.blocks import (
    Block,
    PairLabel,
    b_values,
    block_members,
    block_of,
    blocks,
    census_identity,
    central_character,
    check_member,
    cuspidal_datum,
    e_iota,
    pair_labels,
    select_blocks,
    springer_inverse,
    springer_map,
)
from src.springer.wavefront import wave_front


def P(*parts: int) -> Partition:
    return Partition(tuple(parts))


class TestBlocks:
    """Tests for the block decomposition."""

    def test_sl2_odd_characteristic(self):
        """Test the two blocks of SL_2 for p = 3."""
        found = blocks(2, 3)
        assert [b.d for b in found] == [1, 2]
        assert [len(block_members(b)) for b in found] == [2, 1]

    def test_sl2_characteristic_two(self):
        """Test that only the principal block survives when n' = 1."""
        found = blocks(2, 2)
        assert len(found) == 1
        assert found[0].is_principal

    def test_sl4_characteristic_three(self):
        """Test d = 1, 2, 4, 4 with sizes p(4), p(2), p(1), p(1)."""
        found = blocks(4, 3)
        assert [b.d for b in found] == [1, 2, 4, 4]
        assert [len(block_members(b)) for b in found] == [5, 2, 1, 1]

    def test_select_by_order(self):
        """Test filtering the blocks of SL_4 by d and eps."""
        assert [b.eps for b in select_blocks(4, 3, d=4)] == [1, 3]
        assert select_blocks(4, 3, d=4, eps=3) == [Block(n=4, p=3, d=4, eps=3)]
        assert select_blocks(4, 3) == blocks(4, 3)

    def test_select_nothing(self):
        """Test that an empty selection is an error."""
        with pytest.raises(LabelError):
            select_blocks(4, 3, d=3)
        with pytest.raises(LabelError):
            select_blocks(4, 3, d=2, eps=1)

    def test_rejects_nonpositive_rank(self):
        """Test that n must be positive."""
        with pytest.raises(LabelError):
            blocks(0, 3)

    @pytest.mark.parametrize("n,p", [(2, 3), (3, 2), (4, 3), (6, 5), (6, 2), (12, 7)])
    def test_blocks_partition_pairs(self, n, p):
        """Test that every pair lies in exactly one block."""
        members = [iota for block in blocks(n, p) for iota in block_members(block)]
        assert sorted(members) == sorted(pair_labels(n, p))


class TestSpringerMap:
    """Tests for the correspondence and its inverse."""

    def test_principal_block(self, principal_block):
        """Test that the trivial character goes to the regular orbit."""
        assert springer_map(principal_block, P(2)) == PairLabel(P(2), 0)
        assert springer_map(principal_block, P(1, 1)) == PairLabel(P(1, 1), 0)

    def test_cuspidal_block(self, cuspidal_block):
        """Test that the d = 2 block sits on the regular orbit with faithful tau."""
        assert springer_map(cuspidal_block, P(1)) == PairLabel(P(2), 1)

    def test_wrong_size(self, principal_block):
        """Test that mu-bar must partition n/d."""
        with pytest.raises(LabelError):
            springer_map(principal_block, P(1))

    @pytest.mark.parametrize("n,p", [(3, 2), (4, 3), (6, 5)])
    def test_inverse_round_trip(self, n, p):
        """Test springer_inverse after springer_map."""
        for block in blocks(n, p):
            for mu_bar in partitions_of(block.rank):
                iota = springer_map(block, mu_bar)
                assert springer_inverse(iota, p) == (block, mu_bar)

    def test_central_character(self, regular_faithful):
        """Test the pullback of tau to the center."""
        assert central_character(regular_faithful, 3) == 1
        assert block_of(regular_faithful, 3) == Block(n=2, p=3, d=2, eps=1)

    def test_tau_out_of_range(self):
        """Test that tau must index a character of A_G(u)."""
        with pytest.raises(LabelError):
            central_character(PairLabel(P(1, 1), 1), 3)

    def test_check_member(self, principal_block, regular_faithful):
        """Test that a label outside the block is refused."""
        with pytest.raises(LabelError):
            check_member(regular_faithful, principal_block)

    def test_e_iota(self, regular_trivial, zero_orbit, regular_faithful):
        """Test E_iota on the SL_2 blocks."""
        assert e_iota(regular_trivial, 3).is_trivial()
        assert e_iota(zero_orbit, 3).is_sign()
        assert e_iota(regular_faithful, 3).n == 1

    def test_cuspidal_datum(self, cuspidal_block):
        """Test the cuspidal pair of the d = 2 block."""
        datum = cuspidal_datum(cuspidal_block)
        assert datum.levi_blocks == (2,)
        assert datum.cuspidal_class == P(2)
        assert datum.local_system == 1


class TestBValues:
    """Tests for b(iota) and b_0."""

    def test_principal_regular(self, principal_block, regular_trivial):
        """Test b = b0 = 0 at the regular orbit."""
        values = b_values(regular_trivial, principal_block)
        assert (values.b_iota, values.b0) == (0, 0)

    def test_cuspidal(self, cuspidal_block, regular_faithful):
        """Test b0 = 1/2 on the d = 2 block."""
        values = b_values(regular_faithful, cuspidal_block)
        assert values.b_iota == 0
        assert values.b0 == Fraction(1, 2)
        assert values.u_exponents == (0, 1)

    def test_zero_orbit(self, principal_block, zero_orbit):
        """Test b = 1 at the zero orbit of SL_2."""
        assert b_values(zero_orbit, principal_block).b_iota == 1


class TestCensus:
    """Tests for the counting identity behind the correspondence."""

    @pytest.mark.parametrize("n", range(1, 13))
    @pytest.mark.parametrize("p", [2, 3, 5, 7])
    def test_census_identity(self, n, p):
        """Test sum n'_mu = sum phi(d) p(n/d)."""
        left, right = census_identity(n, p)
        assert left == right


class TestWaveFront:
    """Tests for the wave-front map."""

    def test_examples(self):
        """Test the dual of the merged partition."""
        assert wave_front(Multipartition((P(2, 1),))) == P(2, 1)
        assert wave_front(Multipartition((P(1), P(1)))) == P(2)
        assert wave_front(Multipartition((P(2), P(2)))) == P(2, 2)
