"""Main entry point for the sln-sheaves CLI."""

import sys
from dataclasses import dataclass
from functools import wraps
from typing import Any, Callable, Optional

import click

from src import __version__
from src.almost import (
    extract_cuspidal_scalar,
    pairing_context_for_class,
    pairing_context_for_orbit,
    pairing_is_unitary,
    transform_matrix,
)
from src.config import OutputFormat, ZetaChoice, get_settings
from src.errors import (
    CapExceededError,
    DivisibilityError,
    LabelError,
    SheavesError,
    UniquenessError,
)
from src.exactalg import ExtendedCharLabel, Partition, SnCharLabel, Zeta
from src.exactalg.numbers import characteristic, check_power_of
from src.fforacle import conjugacy_classes, solve_twist_c0
from src.gggr import gggr_table
from src.green import gram_consistency, kostka, omega
from src.logging_config import LOG_LEVELS, get_logger, setup_logging
from src.lseries import enumerate_semisimple_classes, irr_count, series_table
from src.models import RunConfig
from src.orbits import (
    component_groups,
    graded_dims,
    lagrangian_psi,
    levi_of_N,
    orbit_dims,
    psi_blocks,
    sigma_of,
    sigma_one,
    weighted_dynkin,
)
from src.reporter import create_envelope, emit_csv, emit_json
from src.sheaves import cuspidal_census, endomorphism_data, locate_zE, scalar_table
from src.springer import (
    PairLabel,
    block_members,
    census_identity,
    check_member,
    cuspidal_datum,
    select_blocks,
)
from src.verify import ALL_SUITES, IrrCountSuite, create_default_registry, run_suite

logger = get_logger("main")

EXIT_FAILURE = 1
EXIT_CAP = 3
EXIT_UNIQUENESS = 4


class PartitionType(click.ParamType):
    """A partition written as comma-separated parts, e.g. 3,2,1."""

    name = "partition"

    def convert(self, value: Any, param: Optional[click.Parameter], ctx: Optional[click.Context]):
        if isinstance(value, Partition):
            return value
        try:
            return Partition.parse(str(value))
        except LabelError as e:
            self.fail(str(e), param, ctx)


PARTITION = PartitionType()


class PairLabelType(click.ParamType):
    """A pair iota = (orbit, tau) written as parts[:tau], e.g. 2,2:1."""

    name = "iota"

    def convert(self, value: Any, param: Optional[click.Parameter], ctx: Optional[click.Context]):
        if isinstance(value, PairLabel):
            return value
        orbit_text, _, tau_text = str(value).partition(":")
        try:
            tau = int(tau_text) if tau_text else 0
            return PairLabel(Partition.parse(orbit_text), tau)
        except (LabelError, ValueError) as e:
            self.fail(f"cannot parse '{value}' as parts[:tau]: {e}", param, ctx)


PAIR_LABEL = PairLabelType()


def _check_size(mu: Partition, n: Optional[int]) -> None:
    if n is not None and mu.size != n:
        raise LabelError(f"{mu} is not a partition of n = {n}")


@dataclass
class CommandResult:
    """A payload together with a nonzero exit status to report after emitting it."""

    payload: Any
    status: int = 0


def _emit(command: str, payload: Any, output_format: str) -> None:
    config = RunConfig.from_settings(output_format=output_format)
    if output_format == OutputFormat.CSV.value:
        click.echo(emit_csv(payload), nl=False)
    else:
        click.echo(emit_json(create_envelope(command, payload, config)))


def table_command(command: str) -> Callable:
    """
    Wrap a payload-producing function as a CLI command body.

    Adds --format and --log-level, emits the payload and maps library errors
    to exit statuses: cap exceeded 3, uniqueness failure 4 (the diagnostic is
    still emitted), any other library error 1.
    """

    def decorator(func: Callable[..., Any]) -> Callable[..., None]:
        @click.option(
            "--format",
            "output_format",
            type=click.Choice([f.value for f in OutputFormat]),
            default=None,
            help="Output format (default: from settings)",
        )
        @click.option(
            "--log-level",
            type=click.Choice(LOG_LEVELS, case_sensitive=False),
            default=None,
            help="Log level for stderr",
        )
        @wraps(func)
        def wrapper(
            *args: Any, output_format: Optional[str], log_level: Optional[str], **kwargs: Any
        ) -> None:
            if log_level:
                setup_logging(log_level)
            output_format = output_format or get_settings().output_format.value
            try:
                payload = func(*args, **kwargs)
            except CapExceededError as e:
                logger.error(f"{command}: {e}")
                sys.exit(EXIT_CAP)
            except UniquenessError as e:
                logger.error(f"{command}: {e}")
                _emit(command, {"error": str(e), "diagnostic": e.diagnostic}, output_format)
                sys.exit(EXIT_UNIQUENESS)
            except SheavesError as e:
                logger.error(f"{command}: {e}")
                sys.exit(EXIT_FAILURE)
            if isinstance(payload, CommandResult):
                _emit(command, payload.payload, output_format)
                if payload.status:
                    sys.exit(payload.status)
                return
            _emit(command, payload, output_format)

        return wrapper

    return decorator


@click.group()
@click.version_option(version=__version__)
@click.option(
    "--zeta-principal",
    type=click.Choice([z.value for z in ZetaChoice]),
    default=None,
    help="Fourth root of unity for the principal block",
)
@click.option(
    "--zeta-other",
    type=click.Choice([z.value for z in ZetaChoice]),
    default=None,
    help="Fourth root of unity for the other blocks",
)
@click.option("--sign", type=click.Choice(["1", "-1"]), default=None, help="Sign of nu_E")
def main(zeta_principal: Optional[str], zeta_other: Optional[str], sign: Optional[str]) -> None:
    """
    sln-sheaves - exact character-sheaf data for SL_n(F_q).

    Every subcommand writes a self-describing JSON envelope (or CSV) to
    stdout; logs go to stderr.

    \b
    Examples:
      sln-sheaves springer --n 2 --p 3
      sln-sheaves green kostka --lambda 2 --mu 1,1
      sln-sheaves verify --suite irr-count --n 2 --q 3
    """
    settings = get_settings()
    if zeta_principal is not None:
        settings.zeta_principal = ZetaChoice(zeta_principal)
    if zeta_other is not None:
        settings.zeta_other = ZetaChoice(zeta_other)
    if sign is not None:
        settings.nu_sign = int(sign)


# ============================================================================
# Orbits and the Springer correspondence
# ============================================================================


@main.command()
@click.option("--n", type=int, default=None, help="Rank of SL_n (checked against mu)")
@click.option("--mu", type=PARTITION, required=True, help="Jordan type, e.g. 3,2,1")
@click.option("--q", type=int, default=None, help="Field order for component groups")
@click.option("--t", type=int, default=None, help="Quotient order for A-bar")
@table_command("orbits")
def orbits(n: Optional[int], mu: Partition, q: Optional[int], t: Optional[int]) -> dict:
    """Weighted Dynkin data, Lagrangian Psi and component groups of the orbit mu."""
    _check_size(mu, n)
    diagram = weighted_dynkin(mu)
    psi = lagrangian_psi(mu)
    levi = levi_of_N(mu)
    payload: dict[str, Any] = {
        "n": mu.size,
        "mu": mu,
        "dynkin": diagram.to_dict(),
        "pi_one": list(diagram.pi_one),
        "sigma_one": sigma_one(diagram).to_dict(),
        "psi_blocks": {str(i): block.to_dict() for i, block in psi_blocks(diagram).items()},
        "psi": psi.to_dict(),
        "sigma_psi": sigma_of(psi).to_dict(),
        "dims": orbit_dims(mu),
        "levi": {"blocks": list(levi.blocks), "dim_center": levi.dim_center},
        "graded_dims": {str(i): dim for i, dim in graded_dims(mu).items()},
    }
    if q is not None:
        payload["components"] = component_groups(mu, characteristic(q), q, t).to_dict()
    return payload


@main.command()
@click.option("--n", type=int, required=True)
@click.option("--p", type=int, required=True, help="Characteristic")
@click.option("--d", type=int, default=None, help="Only blocks of this order d")
@table_command("springer")
def springer(n: int, p: int, d: Optional[int]) -> dict:
    """Blocks of I_G with their members and cuspidal data."""
    found = select_blocks(n, p, d)
    left, right = census_identity(n, p)
    return {
        "n": n,
        "p": p,
        "d": d,
        "blocks": [
            {
                "block": block.to_dict(),
                "cuspidal": cuspidal_datum(block),
                "members": [iota.to_dict() for iota in block_members(block)],
            }
            for block in found
        ],
        "census": {"pairs": left, "blocks_weighted": right},
    }


# ============================================================================
# Green functions
# ============================================================================


@main.group()
def green() -> None:
    """Kostka-Foulkes polynomials, omega and Gram data."""
    pass


@green.command("kostka")
@click.option("--lambda", "la", type=PARTITION, required=True)
@click.option("--mu", type=PARTITION, required=True)
@table_command("green kostka")
def green_kostka(la: Partition, mu: Partition) -> dict:
    """K_{lambda,mu}(t), coefficients lowest degree first."""
    return {"lambda": la, "mu": mu, "coefficients": kostka(la, mu).to_list()}


@green.command("omega")
@click.option("--n", type=int, required=True)
@click.option("--p", type=int, required=True)
@click.option("--d", type=int, default=None, help="Block order (default: the block of eps)")
@click.option("--eps", type=int, default=None, help="Block label (default: least of order d)")
@click.option("--iota", type=PAIR_LABEL, default=None, help="Row label parts[:tau]")
@click.option("--iota2", type=PAIR_LABEL, default=None, help="Column label parts[:tau]")
@table_command("green omega")
def green_omega(
    n: int,
    p: int,
    d: Optional[int],
    eps: Optional[int],
    iota: Optional[PairLabel],
    iota2: Optional[PairLabel],
) -> dict:
    """
    omega_{iota, iota'} over a block, as Laurent polynomials in u = sqrt(q).

    With --iota and --iota2 only that entry is returned; otherwise the whole
    matrix of the block.
    """
    if (iota is None) != (iota2 is None):
        raise click.UsageError("--iota and --iota2 go together")
    block = select_blocks(n, p, d, eps if eps is not None or d is not None else 0)[0]
    if iota is not None and iota2 is not None:
        check_member(iota, block)
        check_member(iota2, block)
        return {
            "block": block.to_dict(),
            "iota": iota.to_dict(),
            "iota2": iota2.to_dict(),
            "omega": omega(iota, iota2, block),
        }
    members = block_members(block)
    return {
        "block": block.to_dict(),
        "members": [member.to_dict() for member in members],
        "omega": [[omega(a, b, block) for b in members] for a in members],
    }


@green.command("gram")
@click.option("--n", type=int, required=True)
@click.option("--q", type=int, required=True)
@table_command("green gram")
def green_gram(n: int, q: int) -> dict:
    """Compare <X, X> with the oracle factorization at a numeric q."""
    report = gram_consistency(n, q)
    return {
        "n": n,
        "q": q,
        "consistent": report.consistent,
        "rows": [
            {
                "block": check.block.to_dict(),
                "consistent": check.consistent,
                "x_gram": check.x_gram,
                "factored": check.factored,
            }
            for check in report.checks
        ],
    }


# ============================================================================
# GGGRs and Lusztig series
# ============================================================================


@main.group()
def gggr() -> None:
    """Inner products of GGGRs with the X-basis."""
    pass


@gggr.command("inner")
@click.option("--n", type=int, default=None, help="Rank of SL_n (checked against mu)")
@click.option("--p", type=int, default=None, help="Characteristic (default: that of q)")
@click.option("--q", type=int, default=None, help="Field order (default: p)")
@click.option("--d", type=int, default=None, help="Only blocks of this order d")
@click.option("--mu", type=PARTITION, required=True, help="Jordan type of N")
@click.option("--c", type=int, default=0, show_default=True)
@click.option("--c0", type=int, default=None, help="Twisting class (default: searched)")
@click.option("--regular", is_flag=True, help="Closed form for the regular orbit (n)")
@table_command("gggr inner")
def gggr_inner(
    n: Optional[int],
    p: Optional[int],
    q: Optional[int],
    d: Optional[int],
    mu: Partition,
    c: int,
    c0: Optional[int],
    regular: bool,
) -> dict:
    """
    <Gamma_c, X_iota> for every block and member.

    \b
    Examples:
      sln-sheaves gggr inner --mu 2,1 --q 4
      sln-sheaves gggr inner --n 2 --p 3 --d 2 --mu 2 --c 0 --regular
    """
    if p is None and q is None:
        raise click.UsageError("give --q or --p")
    if q is None:
        q = p
    if p is None:
        p = characteristic(q)
    check_power_of(q, p)
    _check_size(mu, n)
    records = gggr_table(c, mu, mu.size, p, q, c0=c0, d=d, regular=regular)
    return {
        "n": mu.size,
        "p": p,
        "q": q,
        "d": d,
        "mu": mu,
        "c": c,
        "regular": regular,
        "rows": [record.to_dict() for record in records],
    }


@main.group()
def lseries() -> None:
    """Semisimple classes and Lusztig series of PGL_n."""
    pass


@lseries.command("classes")
@click.option("--n", type=int, required=True)
@click.option("--q", type=int, required=True)
@table_command("lseries classes")
def lseries_classes(n: int, q: int) -> dict:
    found = enumerate_semisimple_classes(n, q)
    return {
        "n": n,
        "q": q,
        "count": len(found),
        "rows": [stab.to_dict() for _, stab in found],
    }


@lseries.command("irr-count")
@click.option("--n", type=int, required=True)
@click.option("--q", type=int, required=True)
@table_command("lseries irr-count")
def lseries_irr_count(n: int, q: int) -> dict:
    """|Irr SL_n(F_q)| from the Lusztig series parametrization."""
    return {"n": n, "q": q, "irr_count": irr_count(n, q)}


@lseries.command("series")
@click.option("--n", type=int, required=True)
@click.option("--q", type=int, required=True)
@table_command("lseries series")
def lseries_series(n: int, q: int) -> dict:
    entries = series_table(n, q)
    return {
        "n": n,
        "q": q,
        "total": sum(entry.size for entry in entries),
        "rows": [entry.to_dict() for entry in entries],
    }


# ============================================================================
# Almost characters and character sheaves
# ============================================================================


@main.group()
def almost() -> None:
    """The almost-character transform and the cuspidal scalar."""
    pass


@almost.command("matrix")
@click.option("--n", type=int, default=None, help="Rank of SL_n (t must divide it)")
@click.option("--t", type=int, required=True)
@click.option("--q", type=int, required=True)
@click.option("--mu", type=PARTITION, default=None, help="Orbit side: A-bar of this orbit")
@table_command("almost matrix")
def almost_matrix(n: Optional[int], t: int, q: int, mu: Optional[Partition]) -> dict:
    """The transform over Z/t (class side), or over A-bar of --mu (orbit side)."""
    if n is not None and (t < 1 or n % t):
        raise DivisibilityError(f"t = {t} does not divide n = {n}")
    if mu is not None:
        _check_size(mu, n)
        context = pairing_context_for_orbit(t, mu, q)
    else:
        context = pairing_context_for_class(t, q)
    matrix = transform_matrix(context)
    return {**matrix.to_dict(), "unitary": pairing_is_unitary(context)}


@almost.command("scalar")
@click.option("--t", type=int, required=True)
@click.option("--q", type=int, required=True)
@click.option("--c0", type=int, default=0, show_default=True)
@table_command("almost scalar")
def almost_scalar(t: int, q: int, c0: int) -> dict:
    """nu with chi_{z,eps} = nu R_{z,eps^-1}, for every cuspidal label."""
    zeta = Zeta.from_choice(get_settings().zeta_other)
    scalars = extract_cuspidal_scalar(t, q, zeta, c0)
    return {
        "t": t,
        "q": q,
        "c0": c0,
        "rows": [
            {"z": z, "eps": eps, "nu": value.to_dict()}
            for (z, eps), value in sorted(scalars.items())
        ],
    }


@main.group()
def sheaves() -> None:
    """Cuspidal census, z_E location and the scalars nu_E."""
    pass


@sheaves.command("census")
@click.option("--n", type=int, required=True)
@click.option("--q", type=int, required=True)
@click.option("--p", type=int, default=None, help="Characteristic (default: that of q)")
@table_command("sheaves census")
def sheaves_census(n: int, q: int, p: Optional[int]) -> dict:
    return cuspidal_census(n, q, p if p is not None else characteristic(q)).to_dict()


@sheaves.command("locate")
@click.option("--n", type=int, required=True)
@click.option("--t", type=int, required=True)
@click.option("--d", type=int, required=True)
@click.option("--q", type=int, required=True)
@click.option("--base", type=PARTITION, required=True, help="Partition of n/t labelling E")
@click.option("--twist", type=int, default=0, show_default=True, help="Extension twist")
@click.option("--z", type=int, default=0, show_default=True)
@table_command("sheaves locate")
def sheaves_locate(n: int, t: int, d: int, q: int, base: Partition, twist: int, z: int) -> dict:
    """The unique x_E and its image z_E."""
    endo = endomorphism_data(n, t, d, q)
    E = ExtendedCharLabel(SnCharLabel.of(base), endo.repeats, twist)
    mu = base.dual().scaled(t)
    location = locate_zE(E, mu, endo, z)
    return {"E": str(E), "mu": mu, "endo": endo.to_dict(), **location.to_dict()}


@sheaves.command("scalar")
@click.option("--n", type=int, required=True)
@click.option("--q", type=int, required=True)
@click.option("--c0", type=int, default=None, help="Twisting class (default: searched)")
@click.option("--t", type=int, default=None, help="Only this t")
@click.option("--d", type=int, default=None, help="Only blocks of this order d")
@click.option("--E", "base", type=PARTITION, default=None, help="Partition of n/t labelling E")
@click.option("--twist", type=int, default=None, help="Only this extension twist")
@table_command("sheaves scalar")
def sheaves_scalar(
    n: int,
    q: int,
    c0: Optional[int],
    t: Optional[int],
    d: Optional[int],
    base: Optional[Partition],
    twist: Optional[int],
) -> dict:
    """
    nu_E for every block, t and F-stable E, optionally filtered.

    \b
    Examples:
      sln-sheaves sheaves scalar --n 2 --q 3
      sln-sheaves sheaves scalar --n 2 --t 2 --d 2 --q 3
    """
    entries = scalar_table(n, q, characteristic(q), c0=c0, t=t, d=d, base=base, twist=twist)
    return {"n": n, "q": q, "t": t, "d": d, "rows": [entry.to_dict() for entry in entries]}


# ============================================================================
# Brute-force oracle
# ============================================================================


@main.group()
def oracle() -> None:
    """Brute-force enumeration over SL_n(F_q)."""
    pass


@oracle.command("classes")
@click.option("--n", type=int, required=True)
@click.option("--q", type=int, required=True)
@table_command("oracle classes")
def oracle_classes(n: int, q: int) -> dict:
    return conjugacy_classes(n, q).to_dict()


@oracle.command("twist")
@click.option("--mu", type=PARTITION, required=True)
@click.option("--q", type=int, required=True)
@table_command("oracle twist")
def oracle_twist(mu: Partition, q: int) -> dict:
    """The class c0 with -N* conjugate to N twisted by c0."""
    solution = solve_twist_c0(mu.size, q, mu)
    return {**solution.to_dict(), "verified": solution.verify()}


# ============================================================================
# Verification
# ============================================================================


@main.command()
@click.option("--suite", "suite_name", default=ALL_SUITES, show_default=True)
@click.option("--n", type=int, default=None, help="Restrict the suite to this n")
@click.option("--q", type=int, default=None, help="Restrict the suite to this q")
@click.option("--list", "list_only", is_flag=True, help="List the registered suites")
@table_command("verify")
def verify(suite_name: str, n: Optional[int], q: Optional[int], list_only: bool) -> Any:
    """
    Run a verification suite and report exact expected/got values.

    \b
    Examples:
      sln-sheaves verify --suite census
      sln-sheaves verify --suite irr-count --n 2 --q 3
    """
    if q is not None and n is None:
        raise click.UsageError("--q requires --n")
    registry = create_default_registry()
    if list_only:
        return [
            {
                "name": s.name,
                "aliases": list(s.aliases),
                "description": s.description,
                "slow": s.slow,
            }
            for s in registry.get_suites()
        ]
    if n is not None and q is not None:
        registry.register(IrrCountSuite(cases=((n, q),)))
    if n is not None:
        for suite in registry.get_suites():
            if hasattr(suite, "n_max"):
                suite.n_max = n
    config = RunConfig.from_settings(n=n, q=q)
    results = run_suite(suite_name, config, registry)
    payload = results[0].model_dump() if len(results) == 1 else [r.model_dump() for r in results]
    status = 0 if all(r.passed for r in results) else EXIT_FAILURE
    return CommandResult(payload, status)


if __name__ == "__main__":
    main()
