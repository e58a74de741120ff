"""Tests for Kostka-Foulkes polynomials, omega and the Gram data."""

from fractions import Fraction

import pytest
import sympy

from src.errors import LabelError
from src.exactalg.cyclotomic import CycLaurent
from src.exactalg.partitions import Partition, b_invariant, dominates, partitions_of
from src.green.kostka import charge, kostka, kostka_number, kostka_oracle, reading_word
from src.green.omega import (
    bp_polynomial,
    gram_consistency,
    gram_matrix,
    omega,
    p_matrix,
    p_polynomial,
    x_inner,
    y_gram_oracle,
)
from src.green.orders import Q, group_order, group_order_poly, torus_order, torus_order_poly
from src.green.polynomials import IntPolynomial, LaurentFraction
from src.springer.blocks import PairLabel, blocks


def P(*parts: int) -> Partition:
    return Partition(tuple(parts))


def u(k: int) -> CycLaurent:
    return CycLaurent.u_power(k)


class TestIntPolynomial:
    """Tests for integer polynomials in t."""

    def test_trimming_and_degree(self):
        """Test that trailing zeros are dropped."""
        poly = IntPolynomial([1, 2, 0, 0])
        assert poly.degree == 1
        assert IntPolynomial.zero().degree == -1

    def test_arithmetic(self):
        """Test (1 + t)^2."""
        poly = IntPolynomial([1, 1])
        assert poly * poly == IntPolynomial([1, 2, 1])
        assert poly - poly == 0

    def test_evaluation(self):
        """Test f(1) and f(2)."""
        poly = IntPolynomial([1, 0, 3])
        assert poly.at_one() == 4
        assert poly(2) == 13

    def test_reversed_by(self):
        """Test t^k f(1/t)."""
        assert IntPolynomial([0, 1]).reversed_by(1) == 1
        assert IntPolynomial([1, 2]).reversed_by(3) == IntPolynomial([0, 0, 2, 1])
        with pytest.raises(LabelError):
            IntPolynomial([0, 0, 1]).reversed_by(1)

    def test_in_q(self):
        """Test substitution t = q = u^2."""
        assert IntPolynomial([1, 1]).in_q() == CycLaurent.one() + u(2)
        assert IntPolynomial([0, 1]).in_q(-2) == u(-2)

    def test_from_sympy(self):
        """Test conversion from a sympy expression."""
        t = sympy.Symbol("t")
        assert IntPolynomial.from_sympy((1 + t) ** 2) == IntPolynomial([1, 2, 1])


class TestLaurentFraction:
    """Tests for reduced fractions of Laurent polynomials."""

    def test_reduction(self):
        """Test that common factors cancel."""
        value = LaurentFraction(u(4) - CycLaurent.one(), u(2) - CycLaurent.one())
        assert value == u(2) + CycLaurent.one()

    def test_evaluate(self):
        """Test q/(q^2 - 1) at q = 3."""
        value = LaurentFraction(u(2), u(4) - CycLaurent.one())
        assert value.evaluate(3) == Fraction(3, 8)

    def test_zero_denominator(self):
        """Test that a zero denominator is refused."""
        with pytest.raises(ZeroDivisionError):
            LaurentFraction(CycLaurent.one(), CycLaurent.zero())


class TestKostka:
    """Tests for Kostka-Foulkes polynomials."""

    def test_charge(self):
        """Test the charge of small words."""
        assert charge([1, 2]) == 1
        assert charge([2, 1]) == 0
        assert charge(reading_word(((1, 1, 1),))) == 0

    def test_diagonal(self):
        """Test K_{la,la} = 1."""
        assert kostka(P(2, 1), P(2, 1)) == 1

    def test_examples(self):
        """Test K_{(2),(1,1)} = t and K_{(3),(1,1,1)} = t^3."""
        assert kostka(P(2), P(1, 1)) == IntPolynomial([0, 1])
        assert kostka(P(3), P(1, 1, 1)) == IntPolynomial([0, 0, 0, 1])
        assert kostka(P(2, 1), P(1, 1, 1)) == IntPolynomial([0, 1, 1])

    def test_vanishing(self):
        """Test that K vanishes unless la dominates mu."""
        assert kostka(P(1, 1), P(2)).is_zero()

    def test_size_mismatch(self):
        """Test that sizes must agree."""
        with pytest.raises(LabelError):
            kostka(P(2), P(1))

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_properties(self, n):
        """Test K(1) = Kostka number and deg K = n(mu) - n(la)."""
        for la in partitions_of(n):
            for mu in partitions_of(n):
                k = kostka(la, mu)
                assert k.at_one() == kostka_number(la, mu)
                if dominates(la, mu):
                    assert k.degree == b_invariant(mu) - b_invariant(la)

    @pytest.mark.parametrize("n", [3, 4])
    def test_against_hall_littlewood(self, n):
        """Test charge against the Hall-Littlewood transition matrix."""
        for la in partitions_of(n):
            for mu in partitions_of(n):
                assert kostka(la, mu) == kostka_oracle(la, mu)


class TestOrders:
    """Tests for group and torus orders."""

    def test_group_order_values(self):
        """Test |SL_n(F_q)| at small q."""
        assert group_order_poly(2).eval(3) == 24
        assert group_order_poly(2).eval(4) == 60
        assert group_order_poly(3).eval(2) == 168
        assert group_order(2) == u(6) - u(2)

    def test_torus_orders(self):
        """Test the twisted central tori of the maximal torus."""
        assert torus_order_poly(P(1, 1)) == sympy.Poly(Q - 1, Q)
        assert torus_order_poly(P(2)) == sympy.Poly(Q + 1, Q)
        assert torus_order_poly(P(3)) == sympy.Poly(Q**2 + Q + 1, Q)
        assert torus_order(1, P(2)) == u(2) + CycLaurent.one()


class TestPMatrix:
    """Tests for P-matrix entries."""

    def test_diagonal(self, principal_block, regular_trivial):
        """Test P_{iota,iota} = 1."""
        assert p_polynomial(regular_trivial, regular_trivial, principal_block) == 1

    def test_sl2_principal(self, principal_block, zero_orbit, regular_trivial):
        """Test the rescaled entry t and BP = 1 below the regular orbit."""
        assert p_polynomial(zero_orbit, regular_trivial, principal_block) == IntPolynomial([0, 1])
        assert bp_polynomial(zero_orbit, regular_trivial, principal_block) == 1

    def test_incomparable(self, principal_block, zero_orbit, regular_trivial):
        """Test that P vanishes above the support."""
        assert p_polynomial(regular_trivial, zero_orbit, principal_block).is_zero()

    def test_different_blocks(self, principal_block, regular_faithful, regular_trivial):
        """Test that both labels must lie in the block."""
        with pytest.raises(LabelError):
            p_polynomial(regular_faithful, regular_trivial, principal_block)

    @pytest.mark.parametrize("n,p", [(3, 2), (4, 3), (6, 7)])
    def test_rescaling_property(self, n, p):
        """Test that off-diagonal rescaled entries are divisible by t."""
        for block in blocks(n, p):
            members = block.members()
            for lower in members:
                for upper in members:
                    entry = p_polynomial(lower, upper, block)
                    if lower == upper:
                        assert entry == 1
                    else:
                        assert entry.is_divisible_by_t()

    def test_p_matrix_shape(self, principal_block):
        """Test the P-matrix of the SL_2 principal block."""
        matrix = p_matrix(principal_block)
        assert len(matrix) == 2
        assert matrix[0][0] == 1


class TestOmega:
    """Tests for omega and the X-basis inner products."""

    def test_regular_regular(self, principal_block, regular_trivial):
        """Test omega = q^2 at the regular orbit."""
        assert omega(regular_trivial, regular_trivial, principal_block) == u(4)

    def test_regular_zero(self, principal_block, regular_trivial, zero_orbit):
        """Test omega = 1 between the two principal members."""
        assert omega(regular_trivial, zero_orbit, principal_block) == 1

    def test_symmetry(self):
        """Test omega(a, b) = omega(b, a) on every block of SL_3, p = 7."""
        for block in blocks(3, 7):
            members = block.members()
            for a in members:
                for b in members:
                    assert omega(a, b, block) == omega(b, a, block)

    def test_mixed_blocks(self, principal_block, regular_trivial, regular_faithful):
        """Test that labels of different blocks are orthogonal."""
        assert omega(regular_trivial, regular_faithful, principal_block).is_zero()
        assert x_inner(regular_trivial, regular_faithful, principal_block).is_zero()

    def test_x_inner(self, principal_block, regular_trivial):
        """Test <X, X> = q/(q^2 - 1), which is 3/8 at q = 3."""
        value = x_inner(regular_trivial, regular_trivial, principal_block)
        assert value == LaurentFraction(u(2), u(4) - CycLaurent.one())
        assert value.evaluate(3) == Fraction(3, 8)

    def test_gram_matrix(self, cuspidal_block, regular_faithful):
        """Test the one-by-one Gram matrix of the d = 2 block."""
        gram = gram_matrix(cuspidal_block)
        assert len(gram) == 1
        assert gram[0][0] == x_inner(regular_faithful, regular_faithful, cuspidal_block)


class TestGramConsistency:
    """Tests against the brute-force oracle."""

    def test_y_gram_sl2(self, principal_block):
        """Test <Y, Y> from centralizer orders in SL_2(F_3)."""
        gram = y_gram_oracle(principal_block, 3)
        assert gram[0][0] == Fraction(1, 3)
        assert gram[1][1] == Fraction(1, 24)
        assert gram[0][1] == 0

    @pytest.mark.parametrize("q", [3, 5])
    def test_sl2(self, q):
        """Test <X, X> = P^T <Y, Y> P for SL_2."""
        assert gram_consistency(2, q).consistent

    @pytest.mark.slow
    def test_sl3(self):
        """Test the factorization for SL_3(F_2)."""
        assert gram_consistency(3, 2).consistent
