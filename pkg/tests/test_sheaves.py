"""Tests for cuspidal census, z_E location and the scalars nu_E."""

import pytest

from src.config import get_settings
from src.errors import DivisibilityError, LabelError
from src.exactalg.cyclotomic import CycLaurent
from src.exactalg.numbers import prime_to_part
from src.exactalg.partitions import Partition
from src.exactalg.symmetric import SnCharLabel
from src.exactalg.wreath import ExtendedCharLabel
from src.exactalg.zeta import Zeta
from src.sheaves.census import cuspidal_census, endomorphism_data, family_param, xm_group
from src.sheaves.locate import (
    alpha_E,
    e_iota_for,
    eps1_pullback,
    locate_zE,
    multiplicity_table,
    psi_character,
    psi_value,
)
from src.sheaves.scalars import nu_scalar, scalar_table


def P(*parts: int) -> Partition:
    return Partition(tuple(parts))


def chi(*parts: int) -> SnCharLabel:
    return SnCharLabel.of(P(*parts))


class TestCuspidalCensus:
    """Tests for F-stable cuspidal labels."""

    @pytest.mark.parametrize(
        "n,q,p,count",
        [(2, 3, 3, 2), (2, 4, 2, 0), (3, 7, 7, 6), (3, 4, 2, 6), (3, 5, 5, 0)],
    )
    def test_counts(self, n, q, p, count):
        """Test F-fixed z times F-stable faithful eps."""
        assert cuspidal_census(n, q, p).count == count

    @pytest.mark.parametrize("n,q,p", [(6, 4, 2), (6, 9, 3), (12, 8, 2), (10, 25, 5)])
    def test_partial_prime_to_p_part_is_empty(self, n, q, p):
        """Test that 1 < n' < n leaves no eps of order n, even with n'-torsion in the center."""
        assert 1 < prime_to_part(n, p) < n
        assert cuspidal_census(n, q, p).count == 0

    def test_labels(self):
        """Test the labels of SL_2(F_3)."""
        census = cuspidal_census(2, 3, 3)
        assert [(label.z, label.eps) for label in census.labels] == [(0, 1), (1, 1)]
        assert census.to_dict()["count"] == 2


class TestEndomorphismData:
    """Tests for W_theta1 and X_M."""

    def test_shape(self):
        """Test W0 = S_2 x S_2 and Omega = Z/2 for n = 4, t = 2, d = 1."""
        endo = endomorphism_data(4, 2, 1, 3)
        assert endo.factor_size == 2
        assert endo.repeats == 2
        assert endo.w0_shape == (2, 2)
        assert endo.omega.order == 2

    def test_divisibility(self):
        """Test that d | t | n with t prime to p."""
        with pytest.raises(DivisibilityError):
            endomorphism_data(4, 2, 3, 3)
        with pytest.raises(DivisibilityError):
            endomorphism_data(4, 2, 1, 4)

    def test_xm_group(self):
        """Test X_M = Z/(t/d)."""
        assert xm_group(2, 1, 3).order == 2
        assert xm_group(6, 2, 7).order == 3
        with pytest.raises(DivisibilityError):
            xm_group(3, 2, 5)


class TestFamilyParam:
    """Tests for M_{L,E} and its pairing matrix."""

    @pytest.mark.parametrize(
        "components,size",
        [
            ([chi(1)], 1),
            ([chi(1), chi(1)], 4),
            ([chi(2), chi(1, 1)], 1),
            ([chi(1), chi(1), chi(1)], 9),
        ],
    )
    def test_sizes(self, components, size):
        """Test |M_{L,E}| = |Omega_{L,E}|^2."""
        family = family_param(components)
        assert len(family.members) == size
        assert all(norm == 1 for norm in family.row_norms())

    def test_rejects_bad_factors(self):
        """Test that factors must exist and have equal size."""
        with pytest.raises(LabelError):
            family_param([])
        with pytest.raises(LabelError):
            family_param([chi(1), chi(2)])


class TestLocation:
    """Tests for Psi_x and the location of z_E."""

    def test_psi_character(self):
        """Test Psi_x = omega^{-x} on Z/3."""
        endo = endomorphism_data(3, 3, 1, 4)
        assert [psi_character(x, endo) for x in range(3)] == [0, 2, 1]
        with pytest.raises(LabelError):
            psi_character(3, endo)

    def test_psi_value(self):
        """Test Psi_1(y0) = -1 on Z/2."""
        endo = endomorphism_data(2, 2, 1, 3)
        assert psi_value(1, 1, endo) == -1
        assert psi_value(0, 1, endo) == 1

    def test_eps1_pullback(self):
        """Test eps of Z/d as a character of Z/t."""
        assert eps1_pullback(1, 2, P(2), 2, 3) == 1
        assert eps1_pullback(1, 1, P(2), 2, 3) == 0
        assert eps1_pullback(1, 2, P(4), 4, 5) == 2

    def test_e_iota_for(self):
        """Test E_iota = E^{la u la} for two copies of la = (1)."""
        endo = endomorphism_data(2, 2, 1, 3)
        E = ExtendedCharLabel(chi(1), 2, 0)
        assert e_iota_for(E, P(2), endo) == chi(1, 1)

    def test_trivial_extension(self):
        """Test x_E = 1, z_E = 1 for the tensor-induced extension."""
        endo = endomorphism_data(2, 2, 1, 3)
        E = ExtendedCharLabel(chi(1), 2, 0)
        location = locate_zE(E, P(2), endo)
        assert (location.x_e, location.z_e) == (1, 1)
        assert location.table[0].is_zero()

    def test_twisted_extension(self):
        """Test x_E = 0, z_E = 0 for the sign twist."""
        endo = endomorphism_data(2, 2, 1, 3)
        E = ExtendedCharLabel(chi(1), 2, 1)
        location = locate_zE(E, P(2), endo)
        assert (location.x_e, location.z_e) == (0, 0)

    def test_base_point_shift(self):
        """Test that z shifts z_E."""
        endo = endomorphism_data(2, 2, 1, 3)
        E = ExtendedCharLabel(chi(1), 2, 0)
        assert locate_zE(E, P(2), endo, z=1).z_e == 0

    def test_d_equals_t(self):
        """Test the one-factor case where X_M is trivial."""
        endo = endomorphism_data(2, 2, 2, 3)
        E = ExtendedCharLabel(chi(1), 1)
        location = locate_zE(E, P(2), endo)
        assert (location.x_e, location.z_e) == (0, 0)

    def test_multiplicity_table(self):
        """Test that the table has one entry per element of X_M."""
        endo = endomorphism_data(4, 2, 1, 3)
        E = ExtendedCharLabel(chi(2), 2, 0)
        table = multiplicity_table(E, P(2, 2), endo)
        assert sorted(table) == [0, 1]
        assert sum(1 for value in table.values() if value == 1) == 1

    def test_orbit_mismatch(self):
        """Test that mu must be t times the dual of the base partition."""
        endo = endomorphism_data(2, 2, 1, 3)
        E = ExtendedCharLabel(chi(1), 2, 0)
        with pytest.raises(LabelError):
            locate_zE(E, P(1, 1), endo)

    def test_alpha_is_root_of_unity(self):
        """Test alpha_E on the SL_2 case."""
        endo = endomorphism_data(2, 2, 1, 3)
        for twist in (0, 1):
            E = ExtendedCharLabel(chi(1), 2, twist)
            assert alpha_E(E, P(2), endo).has_unit_modulus()


class TestScalars:
    """Tests for the nu_E record."""

    def test_trivial_product(self):
        """Test nu = 1 with every factor trivial."""
        record = nu_scalar(Zeta(0), 1, 2, 0)
        assert record.product() == 1
        assert record.has_unit_modulus()

    def test_twisting_class(self):
        """Test eps(c0)^-1 = -1 for the faithful eps of Z/2."""
        assert nu_scalar(Zeta(0), 1, 2, 1).product() == -1

    def test_symbolic_zeta(self, zeta_symbolic):
        """Test that the product keeps zeta^-1."""
        product = nu_scalar(zeta_symbolic, 1, 2, 0).product()
        assert product.zeta_power == -1
        assert product.coefficient == 1

    def test_sign_from_settings(self):
        """Test the configured sign convention."""
        get_settings().nu_sign = -1
        assert nu_scalar(Zeta(0), 0, 1, 0).product() == -1
        assert nu_scalar(Zeta(0), 0, 1, 0, sign=1).product() == 1

    def test_rejects_bad_factors(self):
        """Test that the sign and the factors are validated."""
        with pytest.raises(LabelError):
            nu_scalar(Zeta(0), 0, 1, 0, sign=2)
        with pytest.raises(LabelError):
            nu_scalar(Zeta(0), 0, 1, 0, alpha=CycLaurent.rational(2, 0))

    def test_record_serialization(self):
        """Test the factor-by-factor dictionary."""
        data = nu_scalar(Zeta(0), 1, 2, 0).to_dict()
        assert set(data) == {"sign", "zeta_inv", "eps_c0_inv", "alpha_E", "central"}

    def test_scalar_table_sl2(self):
        """Test the five records of SL_2(F_3)."""
        entries = scalar_table(2, 3, 3)
        assert len(entries) == 5
        assert all(entry.record.has_unit_modulus() for entry in entries)
        assert sorted({entry.t for entry in entries}) == [1, 2]

    def test_scalar_table_filters(self):
        """Test that t, d, E and twist each narrow the table."""
        everything = scalar_table(2, 3, 3)
        narrowed = scalar_table(2, 3, 3, t=2, d=2)
        assert narrowed
        assert all((entry.t, entry.block.d) == (2, 2) for entry in narrowed)
        assert len(narrowed) < len(everything)
        by_shape = scalar_table(2, 3, 3, t=1, base=P(1, 1))
        assert by_shape and all(entry.t == 1 for entry in by_shape)
        assert len(scalar_table(2, 3, 3, t=1, base=P(1, 1), twist=0)) == len(by_shape)

    def test_scalar_table_rejects_bad_filters(self):
        """Test that t must divide n and E must partition n/t."""
        with pytest.raises(DivisibilityError):
            scalar_table(4, 3, 3, t=3)
        with pytest.raises(LabelError):
            scalar_table(2, 3, 3, t=1, base=P(1))
