"""Small number-theoretic helpers."""

from functools import lru_cache
from math import gcd

from sympy import divisors, factorint
from sympy.functions.combinatorial.numbers import totient

from src.errors import LabelError


@lru_cache(maxsize=None)
def prime_power_decompose(q: int) -> tuple[int, int]:
    """Return (p, k) with q = p^k, p prime."""
    factors = factorint(q)
    if q < 2 or len(factors) != 1:
        raise LabelError(f"{q} is not a prime power")
    (p, k), = factors.items()
    return int(p), int(k)


def characteristic(q: int) -> int:
    return prime_power_decompose(q)[0]


def check_power_of(q: int, p: int) -> None:
    """Raise unless q is a power of the prime p."""
    if prime_power_decompose(q)[0] != p:
        raise LabelError(f"q = {q} is not a power of p = {p}")


def prime_to_part(n: int, p: int) -> int:
    """n', the largest divisor of n coprime to p."""
    while n % p == 0:
        n //= p
    return n


def euler_phi(n: int) -> int:
    return int(totient(n))


def divisors_of(n: int) -> list[int]:
    return [int(d) for d in divisors(n)]


def gcd_all(*values: int) -> int:
    g = 0
    for v in values:
        g = gcd(g, v)
    return g
