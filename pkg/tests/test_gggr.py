"""Tests for inner products of GGGRs with the X-basis."""

import pytest

from src.errors import LabelError
from src.exactalg.cyclotomic import CycLaurent
from src.exactalg.partitions import Partition
from src.exactalg.zeta import Zeta, ZetaScaled
from src.gggr.inner import (
    GGGRLabel,
    gggr_projection_coeffs,
    gggr_table,
    gggr_x_inner,
    gggr_x_inner_regular,
    integrality_holds,
    projected_inner,
    resolve_c0,
    support_member,
    y_value_on_twist,
    zeta_for,
)
from src.springer.blocks import PairLabel, blocks


def P(*parts: int) -> Partition:
    return Partition(tuple(parts))


def u(k: int) -> CycLaurent:
    return CycLaurent.u_power(k)


class TestLabels:
    """Tests for GGGR labels and the zeta assignment."""

    def test_validate(self):
        """Test that c must be a class of the fixed quotient."""
        group = GGGRLabel(P(2), 1).validate(3, 3)
        assert group.fixed_order == 2
        with pytest.raises(LabelError):
            GGGRLabel(P(2), 2).validate(3, 3)
        with pytest.raises(LabelError):
            GGGRLabel(P(2), 0, xi=5).validate(3, 3)

    def test_zeta_defaults(self, principal_block, cuspidal_block):
        """Test zeta = 1 on the principal block and symbolic elsewhere."""
        assert zeta_for(principal_block) == Zeta(0)
        assert zeta_for(cuspidal_block).is_symbolic


class TestYValues:
    """Tests for tau evaluated on the twisted class."""

    def test_trivial_tau(self, regular_trivial):
        """Test that the trivial character is 1 everywhere."""
        assert y_value_on_twist(regular_trivial, 1, 0, 3) == 1

    def test_faithful_tau(self, regular_faithful):
        """Test the faithful character of Z/2 on the nontrivial class."""
        assert y_value_on_twist(regular_faithful, 1, 0, 3) == -1
        assert y_value_on_twist(regular_faithful, 1, 1, 3) == 1

    def test_orbit_mismatch(self, regular_faithful):
        """Test that the label must live on the given orbit."""
        with pytest.raises(LabelError):
            y_value_on_twist(regular_faithful, 0, 0, 3, orbit=P(1, 1))


class TestRegularOrbit:
    """Tests for the closed formula at the regular orbit."""

    def test_principal_sign(self, principal_block, zero_orbit, zeta_one):
        """Test <Gamma_1, X_iota> = q^-1 when E_iota is the sign."""
        value = gggr_x_inner_regular(0, zero_orbit, principal_block, zeta_one)
        assert value == u(-2)

    def test_principal_trivial(self, principal_block, regular_trivial, zeta_one):
        """Test that the trivial E_iota gives zero."""
        assert gggr_x_inner_regular(0, regular_trivial, principal_block, zeta_one).is_zero()

    def test_cuspidal_block(self, cuspidal_block, regular_faithful, zeta_symbolic):
        """Test q^{-1/2} zeta^-1 on the d = 2 block."""
        value = gggr_x_inner_regular(0, regular_faithful, cuspidal_block, zeta_symbolic)
        assert value.coefficient == u(-1)
        assert value.zeta_power == -1

    def test_class_dependence(self, cuspidal_block, regular_faithful, zeta_symbolic):
        """Test that c = 1 picks up eps(c)^-1 = -1."""
        value = gggr_x_inner_regular(1, regular_faithful, cuspidal_block, zeta_symbolic)
        assert value.coefficient == -u(-1)

    def test_rejects_foreign_label(self, principal_block, regular_faithful, zeta_one):
        """Test that iota must be a member of the block."""
        with pytest.raises(LabelError):
            gggr_x_inner_regular(0, regular_faithful, principal_block, zeta_one)


class TestGeneralOrbit:
    """Tests for <Gamma_c, X_iota> on arbitrary orbits."""

    def test_zero_orbit_gggr(self, principal_block, regular_trivial, zeta_one):
        """Test <Gamma, X> = 1 for N = 0 against the regular label."""
        value = gggr_x_inner(0, P(1, 1), regular_trivial, principal_block, zeta_one)
        assert value == 1

    def test_vanishing(self, principal_block, regular_trivial, zeta_one):
        """Test that BP = 0 forces a zero inner product."""
        assert gggr_x_inner(0, P(2), regular_trivial, principal_block, zeta_one).is_zero()

    def test_no_support_member(self, cuspidal_block, regular_faithful, zeta_symbolic):
        """Test that N outside the block's support gives zero."""
        assert support_member(P(1, 1), cuspidal_block) is None
        assert gggr_x_inner(0, P(1, 1), regular_faithful, cuspidal_block, zeta_symbolic).is_zero()

    @pytest.mark.parametrize("c", [0, 1])
    def test_agrees_with_regular_formula(self, c, sl2_blocks, zeta_symbolic):
        """Test that the general formula specializes to the regular one."""
        for block in sl2_blocks:
            for iota in block.members():
                general = gggr_x_inner(c, P(2), iota, block, zeta_symbolic)
                regular = gggr_x_inner_regular(c, iota, block, zeta_symbolic)
                assert general == regular

    @pytest.mark.parametrize("n,p", [(3, 7), (4, 5)])
    def test_agreement_higher_rank(self, n, p):
        """Test the regular specialization on SL_3 and SL_4."""
        zeta = Zeta.symbolic()
        for block in blocks(n, p):
            for iota in block.members():
                general = gggr_x_inner(0, P(n), iota, block, zeta)
                assert general == gggr_x_inner_regular(0, iota, block, zeta)

    def test_integrality(self, cuspidal_block, regular_faithful, zeta_symbolic):
        """Test the rescaled value is a polynomial in q."""
        value = gggr_x_inner(0, P(2), regular_faithful, cuspidal_block, zeta_symbolic)
        assert integrality_holds(value, regular_faithful, cuspidal_block)


class TestProjection:
    """Tests for the projection of Gamma_c onto a block."""

    def test_cuspidal_coefficient(self, cuspidal_block, regular_faithful, zeta_symbolic):
        """Test the coefficient q^{1/2} zeta^-1 of X on the d = 2 block."""
        coeffs = gggr_projection_coeffs(0, P(2), cuspidal_block, zeta_symbolic)
        assert coeffs[regular_faithful] == ZetaScaled(u(1), -1, zeta_symbolic)

    def test_projection_matches_inner(self, cuspidal_block, regular_faithful, zeta_symbolic):
        """Test that pairing the projection with X recovers the inner product."""
        coeffs = gggr_projection_coeffs(0, P(2), cuspidal_block, zeta_symbolic)
        paired = projected_inner(coeffs, regular_faithful, cuspidal_block)
        direct = gggr_x_inner(0, P(2), regular_faithful, cuspidal_block, zeta_symbolic)
        assert paired == direct

    def test_empty_support(self, cuspidal_block, zeta_symbolic):
        """Test that every coefficient vanishes without a support member."""
        coeffs = gggr_projection_coeffs(0, P(1, 1), cuspidal_block, zeta_symbolic)
        assert all(value.is_zero() for value in coeffs.values())

    def test_projected_needs_coefficients(self, cuspidal_block, regular_faithful):
        """Test that an empty coefficient map is refused."""
        with pytest.raises(LabelError):
            projected_inner({}, regular_faithful, cuspidal_block)


class TestTable:
    """Tests for the full table over all blocks."""

    def test_sl2_table(self):
        """Test the three entries of SL_2(F_3) for the regular orbit."""
        records = gggr_table(0, P(2), 2, 3, 3, c0=0)
        assert len(records) == 3
        values = {record.iota: record.value for record in records}
        assert values[PairLabel(P(2), 0)].is_zero()
        assert values[PairLabel(P(1, 1), 0)] == u(-2)
        assert values[PairLabel(P(2), 1)].zeta_power == -1

    def test_c0_from_oracle(self):
        """Test that c0 is found by the conjugator search when omitted."""
        assert resolve_c0(2, 3, P(2)) == 0
        assert resolve_c0(2, 3, P(2), 1) == 1

    def test_record_serialization(self):
        """Test the dictionary form of a record."""
        record = gggr_table(0, P(2), 2, 3, 3, c0=0)[0]
        data = record.to_dict()
        assert set(data) == {"block", "iota", "value"}

    def test_size_mismatch(self):
        """Test that the orbit must partition n."""
        with pytest.raises(LabelError):
            gggr_table(0, P(2), 3, 3, 3, c0=0)

    def test_block_filter(self):
        """Test that d restricts the table to the blocks of that order."""
        records = gggr_table(0, P(2), 2, 3, 3, c0=0, d=2)
        assert [record.iota for record in records] == [PairLabel(P(2), 1)]
        assert all(record.block.d == 2 for record in records)

    def test_regular_closed_form(self):
        """Test that the regular closed form reproduces the general table."""
        general = {r.iota: r.value for r in gggr_table(0, P(2), 2, 3, 3, c0=0)}
        regular = gggr_table(0, P(2), 2, 3, 3, c0=0, regular=True)
        assert len(regular) == len(general)
        for record in regular:
            assert record.value == general[record.iota]

    def test_regular_needs_regular_orbit(self):
        """Test that the closed form refuses a non-regular orbit."""
        with pytest.raises(LabelError):
            gggr_table(0, P(1, 1), 2, 3, 3, c0=0, regular=True)
