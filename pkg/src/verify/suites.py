"""Verification suites: exact property checks with independent oracles."""

from math import gcd
from typing import Sequence

from sympy import nextprime

from src.almost.inner import extract_cuspidal_scalar
from src.almost.pairing import (
    compatible_under_bijection,
    pairing_context_for_class,
    pairing_is_unitary,
    transform_matrix,
)
from src.errors import SheavesError, UniquenessError
from src.exactalg.cyclotomic import CycLaurent
from src.exactalg.numbers import characteristic, divisors_of
from src.exactalg.partitions import (
    Partition,
    b_invariant,
    dominates,
    partitions_of,
    semistandard_tableaux,
)
from src.exactalg.symmetric import SnCharLabel
from src.exactalg.wreath import ExtendedCharLabel
from src.exactalg.zeta import Zeta, ZetaScaled
from src.fforacle.matrices import class_count
from src.fforacle.twist import solve_twist_c0
from src.gggr.inner import gggr_x_inner, gggr_x_inner_regular
from src.green.kostka import kostka, kostka_oracle
from src.green.omega import bp_polynomial, gram_consistency, omega, p_polynomial, x_inner
from src.green.polynomials import IntPolynomial, LaurentFraction
from src.logging_config import get_logger
from src.lseries.params import irr_count
from src.models import RunConfig, SuiteResult
from src.sheaves.census import endomorphism_data
from src.sheaves.locate import locate_zE, psi_character
from src.sheaves.scalars import scalar_table
from src.springer.blocks import Block, PairLabel, block_members, blocks, census_identity
from src.verify.base import VerificationSuite

logger = get_logger("verify.suites")

IRR_COUNT_CASES = ((2, 3), (2, 4), (2, 5), (3, 2), (3, 4))


def _prime_above(n: int) -> int:
    """A characteristic in which every d | n labels a block."""
    return int(nextprime(n))


class IrrCountSuite(VerificationSuite):
    """Irr G^F counted through Lusztig series against the brute-force class count."""

    def __init__(self, cases: Sequence[tuple[int, int]] = IRR_COUNT_CASES):
        self.cases = tuple(cases)

    @property
    def name(self) -> str:
        return "irr-count"

    @property
    def description(self) -> str:
        return "irr_count(n, q) equals the number of conjugacy classes of SL_n(F_q)"

    @property
    def slow(self) -> bool:
        return any(n > 2 for n, _ in self.cases)

    def run(self, config: RunConfig) -> SuiteResult:
        result = self.new_result()
        for n, q in self.cases:
            self.compare(
                result,
                f"SL_{n}(F_{q})",
                class_count(n, q, config.group_order_cap),
                irr_count(n, q),
            )
        return result


class CensusSuite(VerificationSuite):
    def __init__(self, n_max: int = 30, primes: Sequence[int] = (2, 3, 5, 7)):
        self.n_max = n_max
        self.primes = tuple(primes)

    @property
    def name(self) -> str:
        return "census"

    @property
    def description(self) -> str:
        return "sum over mu of n'_mu equals sum over d | n' of phi(d) p(n/d)"

    def run(self, config: RunConfig) -> SuiteResult:
        result = self.new_result()
        for p in self.primes:
            for n in range(1, self.n_max + 1):
                left, right = census_identity(n, p)
                self.compare(result, f"n={n}, p={p}", left, right)
        return result


class KostkaSuite(VerificationSuite):
    """Unitriangularity, degrees, K(1) and the Hall-Littlewood transition oracle."""

    def __init__(self, size_max: int = 6):
        self.size_max = size_max

    @property
    def name(self) -> str:
        return "kostka"

    @property
    def description(self) -> str:
        return "Kostka-Foulkes polynomials by charge against independent oracles"

    def run(self, config: RunConfig) -> SuiteResult:
        result = self.new_result()
        for size in range(1, self.size_max + 1):
            shapes = partitions_of(size)
            for la in shapes:
                self.compare(result, f"K[{la},{la}]", IntPolynomial.one(), kostka(la, la))
                for mu in shapes:
                    k = kostka(la, mu)
                    label = f"K[{la},{mu}]"
                    if not dominates(la, mu):
                        self.compare(result, f"{label} vanishes", True, k.is_zero())
                        continue
                    self.compare(
                        result, f"{label} degree", b_invariant(mu) - b_invariant(la), k.degree
                    )
                    tableaux = sum(1 for _ in semistandard_tableaux(la, mu.parts))
                    self.compare(result, f"{label} at t=1", tableaux, k.at_one())
                    self.compare(result, f"{label} oracle", kostka_oracle(la, mu), k)
        return result


class RescalingSuite(VerificationSuite):
    def __init__(self, n_max: int = 12):
        self.n_max = n_max

    @property
    def name(self) -> str:
        return "rescaling"

    @property
    def description(self) -> str:
        return "rescaled P is a polynomial in t, divisible by t off the diagonal"

    @property
    def slow(self) -> bool:
        return self.n_max > 8

    def run(self, config: RunConfig) -> SuiteResult:
        result = self.new_result()
        p = _prime_above(self.n_max)
        for n in range(1, self.n_max + 1):
            for block in blocks(n, p):
                members = block_members(block)
                for lower in members:
                    for upper in members:
                        rescaled = p_polynomial(lower, upper, block)
                        label = f"SL_{n} {block} P[{lower},{upper}]"
                        if lower == upper:
                            self.compare(result, label, IntPolynomial.one(), rescaled)
                        elif not rescaled.is_zero():
                            self.compare(
                                result, f"{label} t-divisible", True, rescaled.is_divisible_by_t()
                            )
                            bp_polynomial(lower, upper, block)
        return result


class RegularAgreementSuite(VerificationSuite):
    """The regular-orbit closed form against the general formula at N regular."""

    def __init__(self, n_max: int = 6):
        self.n_max = n_max

    @property
    def name(self) -> str:
        return "regular-agreement"

    @property
    def aliases(self) -> tuple[str, ...]:
        return ("lemma511-512",)

    @property
    def description(self) -> str:
        return "<Gamma_c, X_iota> for regular N agrees with the general formula"

    def run(self, config: RunConfig) -> SuiteResult:
        result = self.new_result()
        zeta = Zeta.symbolic()
        p = _prime_above(self.n_max)
        for n in range(2, self.n_max + 1):
            regular = Partition((n,))
            for block in blocks(n, p):
                for c in range(block.n_prime):
                    for iota in block_members(block):
                        self.compare(
                            result,
                            f"SL_{n} {block} c={c} {iota}",
                            gggr_x_inner_regular(c, iota, block, zeta),
                            gggr_x_inner(c, regular, iota, block, zeta),
                        )
        return result


class OmegaSuite(VerificationSuite):
    def __init__(self, n_max: int = 4, oracle_q: int = 3, oracle_ranks: Sequence[int] = (2, 3)):
        self.n_max = n_max
        self.oracle_q = oracle_q
        self.oracle_ranks = tuple(oracle_ranks)

    @property
    def name(self) -> str:
        return "omega"

    @property
    def description(self) -> str:
        return "omega symmetry, SL_2 closed forms and the Gram factorization oracle"

    @property
    def slow(self) -> bool:
        return max(self.oracle_ranks, default=0) > 2

    def run(self, config: RunConfig) -> SuiteResult:
        result = self.new_result()
        p = _prime_above(self.n_max)
        for n in range(1, self.n_max + 1):
            for block in blocks(n, p):
                members = block_members(block)
                for a in members:
                    for b in members:
                        self.compare(
                            result,
                            f"SL_{n} {block} omega[{a},{b}] symmetric",
                            omega(a, b, block),
                            omega(b, a, block),
                        )

        principal = Block(n=2, p=p, d=1, eps=0)
        regular = PairLabel(Partition((2,)), 0)
        self.compare(
            result,
            "SL_2 omega[reg,reg] = q^2",
            CycLaurent.u_power(4),
            omega(regular, regular, principal),
        )
        self.compare(
            result,
            "SL_2 <X_reg, X_reg> = q/(q^2-1)",
            LaurentFraction(CycLaurent.u_power(2), CycLaurent.u_power(4) - 1),
            x_inner(regular, regular, principal),
        )

        for n in self.oracle_ranks:
            report = gram_consistency(n, self.oracle_q)
            for check in report.checks:
                self.compare(
                    result,
                    f"Gram factorization SL_{n}(F_{self.oracle_q}) {check.block}",
                    check.x_gram,
                    check.factored,
                )
        return result


def _q_for_residue(r: int, t: int) -> int:
    """The least prime q = r mod t."""
    q = int(nextprime(1))
    while q % t != r % t:
        q = int(nextprime(q))
    return q


class UnitaritySuite(VerificationSuite):
    """Exact unitarity of the transform and compatibility of the two pairings."""

    def __init__(self, t_max: int = 24, compatibility_t_max: int = 12, full_matrix_g_max: int = 4):
        self.t_max = t_max
        self.compatibility_t_max = compatibility_t_max
        self.full_matrix_g_max = full_matrix_g_max

    @property
    def name(self) -> str:
        return "unitarity"

    @property
    def description(self) -> str:
        return "pairing matrices are unitary for every q mod t; pairings agree under the bijection"

    def run(self, config: RunConfig) -> SuiteResult:
        result = self.new_result()
        for t in range(1, self.t_max + 1):
            for r in range(t):
                if gcd(r, t) != 1:
                    continue
                q = _q_for_residue(r, t)
                context = pairing_context_for_class(t, q)
                label = f"t={t}, q={q}"
                self.compare(result, f"{label} unitary", True, pairing_is_unitary(context))
                if context.size <= self.full_matrix_g_max:
                    self.compare(
                        result,
                        f"{label} unitary (full matrix)",
                        True,
                        transform_matrix(context).is_unitary(),
                    )
                if t <= self.compatibility_t_max:
                    self.compare(
                        result, f"{label} compatible", True, compatible_under_bijection(t, q)
                    )
        return result


class CuspidalScalarSuite(VerificationSuite):
    def __init__(
        self,
        sl2_fields: Sequence[int] = (3, 5, 7),
        cases: Sequence[tuple[int, int]] = ((2, 3), (2, 5), (3, 4), (3, 7)),
    ):
        self.sl2_fields = tuple(sl2_fields)
        self.cases = tuple(cases)

    @property
    def name(self) -> str:
        return "cuspidal-scalar"

    @property
    def description(self) -> str:
        return "c0 is trivial for SL_2 and the extracted cuspidal scalar is zeta^-1 eps(c0)^-1"

    def run(self, config: RunConfig) -> SuiteResult:
        result = self.new_result()
        for q in self.sl2_fields:
            solution = solve_twist_c0(2, q, Partition((2,)), config.group_order_cap)
            self.compare(result, f"c0 for SL_2(F_{q})", 0, solution.c0)

        zeta = Zeta.symbolic()
        for t, q in self.cases:
            g = pairing_context_for_class(t, q).size
            for c0 in range(g):
                try:
                    scalars = extract_cuspidal_scalar(t, q, zeta, c0)
                except UniquenessError as e:
                    label = f"t={t}, q={q}, c0={c0} row-independent"
                    self.compare(result, label, True, False, str(e))
                    continue
                for (z, eps), value in sorted(scalars.items()):
                    expected = ZetaScaled(CycLaurent.root_of_unity(g, -eps * c0), -1, zeta)
                    label = f"t={t}, q={q}, c0={c0}, (z,eps)=({z},{eps})"
                    self.compare(result, label, expected, value)
        return result


class ZLocationSuite(VerificationSuite):
    """Exactly one x in X_M^{F''} passes the multiplicity-one test, for every admissible E."""

    def __init__(self, n_max: int = 8, fields: Sequence[int] = (3, 4, 5)):
        self.n_max = n_max
        self.fields = tuple(fields)

    @property
    def name(self) -> str:
        return "z-location"

    @property
    def description(self) -> str:
        return "z_E is located by a unique multiplicity-one x_E; Psi is a bijection"

    @property
    def slow(self) -> bool:
        return self.n_max > 6

    def run(self, config: RunConfig) -> SuiteResult:
        result = self.new_result()
        for q in self.fields:
            p = characteristic(q)
            for n in range(1, self.n_max + 1):
                for t in divisors_of(n):
                    if t % p == 0:
                        continue
                    for d in divisors_of(t):
                        self._check(result, n, t, d, q)
        return result

    def _check(self, result: SuiteResult, n: int, t: int, d: int, q: int) -> None:
        endo = endomorphism_data(n, t, d, q)
        k = endo.repeats
        self.compare(
            result,
            f"Psi bijective n={n}, t={t}, d={d}",
            list(range(k)),
            sorted(psi_character(x, endo) for x in range(k)),
        )
        for base in partitions_of(endo.factor_size):
            mu = base.dual().scaled(t)
            for twist in endo.omega.fixed_characters():
                E = ExtendedCharLabel(SnCharLabel.of(base), k, twist)
                label = f"n={n}, t={t}, d={d}, q={q}, E={E}"
                try:
                    location = locate_zE(E, mu, endo)
                except UniquenessError as e:
                    self.compare(result, label, "unique x_E", "none", str(e.diagnostic))
                    continue
                logger.debug(f"{label}: x_E = {location.x_e}, z_E = {location.z_e}")
                self.compare(result, f"{label} multiplicity", 1, location.table[location.x_e])


class ScalarRecordSuite(VerificationSuite):
    def __init__(
        self,
        n_max: int = 4,
        fields: Sequence[int] = (5, 7),
        reduction_fields: Sequence[int] = (3, 5, 7),
    ):
        self.n_max = n_max
        self.fields = tuple(fields)
        self.reduction_fields = tuple(reduction_fields)

    @property
    def name(self) -> str:
        return "scalar-record"

    @property
    def description(self) -> str:
        return "every nu_E has modulus 1; the d = t reduction matches the extracted scalar"

    def run(self, config: RunConfig) -> SuiteResult:
        result = self.new_result()
        zeta = Zeta.symbolic()
        for q in self.fields:
            p = characteristic(q)
            for n in range(2, self.n_max + 1):
                try:
                    entries = scalar_table(n, q, p, zeta=zeta, c0=0)
                except SheavesError as e:
                    self.compare(result, f"SL_{n}(F_{q}) table", "built", "failed", str(e))
                    continue
                for entry in entries:
                    self.compare(
                        result,
                        f"SL_{n}(F_{q}) {entry.block} t={entry.t} {entry.character} unit modulus",
                        True,
                        entry.record.has_unit_modulus(),
                    )

        for q in self.reduction_fields:
            c0 = solve_twist_c0(2, q, Partition((2,)), config.group_order_cap).c0
            extracted = extract_cuspidal_scalar(2, q, zeta, c0)
            g = pairing_context_for_class(2, q).size
            for entry in scalar_table(2, q, characteristic(q), zeta=zeta, c0=c0):
                if entry.block.d != entry.t:
                    continue
                key = (entry.z_e % g, entry.block.eps % g)
                self.compare(
                    result,
                    f"SL_2(F_{q}) {entry.block} nu_E = extracted scalar",
                    extracted[key],
                    entry.record.product(),
                )
        return result
