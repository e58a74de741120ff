"""Closed-form inner products of modified GGGRs with almost characters and cuspidal functions."""

from fractions import Fraction
from typing import Optional

from src.almost.pairing import pairing_context_for_class
from src.errors import UniquenessError
from src.exactalg.cyclotomic import CycLaurent
from src.exactalg.zeta import Zeta, ZetaScaled
from src.logging_config import get_logger
from src.orbits.cyclic import CyclicF

logger = get_logger("almost.inner")


def _center(t: int, q: int) -> CyclicF:
    return pairing_context_for_class(t, q).group


def gggr_vs_almost_inner(
    c: int, xi: int, z: int, eps: int, t: int, q: int, theta_match: bool = True
) -> CycLaurent:
    """
    <Gamma_{c,xi,theta'}, R_{z,eps}> = eps(c) xi(z) / |(Z_G/Z_G^0)^F|.

    All four labels are indices mod g = |(Z/t)^F|: c a coinvariant class, xi a
    character of the fixed points, z = z * t/g a fixed point and eps the F-stable
    character eps * t/g. theta_match is the central-character comparison.
    """
    if not theta_match:
        return CycLaurent.zero()
    g = _center(t, q).fixed_order
    return CycLaurent.root_of_unity(g, eps * c + xi * z) * Fraction(1, g)


def cuspidal_charfun_inner(
    c: int,
    xi: int,
    z: int,
    eps: int,
    t: int,
    q: int,
    zeta: Zeta,
    c0: int = 0,
    central: Optional[CycLaurent] = None,
    theta_match: bool = True,
) -> ZetaScaled:
    """zeta^-1 xi(z) eps(c c0)^-1 psi(z^-1) theta'(z) / |(Z_G/Z_G^0)^F|.

    `central` stands for psi(z^-1) theta'(z).
    """
    if not theta_match:
        return ZetaScaled.zero(zeta)
    g = _center(t, q).fixed_order
    value = CycLaurent.root_of_unity(g, xi * z - eps * (c + c0)) * Fraction(1, g)
    if central is not None:
        value = value * central
    return ZetaScaled(value, -1, zeta)


def extract_cuspidal_scalar(
    t: int, q: int, zeta: Zeta, c0: int = 0, central: Optional[CycLaurent] = None
) -> dict[tuple[int, int], ZetaScaled]:
    """
    nu with chi_{z,eps} = nu R_{z,eps^-1}, solved row by row over all (c, xi).

    Raises UniquenessError when two rows give different scalars.
    """
    g = _center(t, q).fixed_order
    scalars: dict[tuple[int, int], ZetaScaled] = {}
    for z in range(g):
        for eps in range(g):
            found: Optional[ZetaScaled] = None
            for c in range(g):
                for xi in range(g):
                    chi = cuspidal_charfun_inner(c, xi, z, eps, t, q, zeta, c0, central)
                    almost = gggr_vs_almost_inner(c, xi, z, -eps % g, t, q)
                    # |almost|^2 = 1/g^2
                    ratio = chi * (almost.conj() * (g * g))
                    if found is None:
                        found = ratio
                    elif ratio != found:
                        raise UniquenessError(
                            f"cuspidal scalar depends on the row at (z, eps) = ({z}, {eps})",
                            {"t": t, "q": q, "row": [c, xi], "first": found.to_dict(),
                             "other": ratio.to_dict()},
                        )
            if found is not None:
                scalars[(z, eps)] = found
    logger.info(f"cuspidal scalars for t={t}, q={q}: {len(scalars)} labels, row-independent")
    return scalars
