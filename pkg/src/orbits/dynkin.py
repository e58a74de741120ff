"""Weighted Dynkin diagrams and Lagrangian root subsets for nilpotent orbits of sl_n."""

from collections import Counter
from dataclasses import dataclass

from src.exactalg.partitions import Partition
from src.logging_config import get_logger

logger = get_logger("orbits.dynkin")

Root = tuple[int, int]


@dataclass(frozen=True)
class WeightedDynkin:
    """Weighted Dynkin diagram of the nilpotent orbit of Jordan type mu."""

    n: int
    h: tuple[int, ...]
    levels: tuple[int, ...]

    @property
    def pi_one(self) -> tuple[int, ...]:
        """Indices i (1-based) of simple roots with h(alpha_i) = 1."""
        return tuple(i + 1 for i, value in enumerate(self.h) if value == 1)

    def root_weight(self, root: Root) -> int:
        p, q = root
        return self.levels[p - 1] - self.levels[q - 1]

    def to_dict(self) -> dict[str, object]:
        return {"n": self.n, "h": list(self.h), "levels": list(self.levels)}


@dataclass(frozen=True)
class RootSubset:
    """A set of positive roots eps_p - eps_q, stored as pairs (p, q) with p < q."""

    n: int
    roots: frozenset[Root]

    def __len__(self) -> int:
        return len(self.roots)

    def __contains__(self, root: object) -> bool:
        return root in self.roots

    def __or__(self, other: "RootSubset") -> "RootSubset":
        return RootSubset(self.n, self.roots | other.roots)

    def sorted_roots(self) -> list[Root]:
        return sorted(self.roots)

    def to_dict(self) -> dict[str, object]:
        return {"n": self.n, "roots": [list(r) for r in self.sorted_roots()]}


@dataclass(frozen=True)
class OrbitDims:
    dim_orbit: int
    codim_class: int
    dim_centralizer: int


@dataclass(frozen=True)
class LeviShape:
    """Block sizes of L_N (top level first) and dim Z^0 of L_N inside SL_n."""

    blocks: tuple[int, ...]
    dim_center: int

    @property
    def is_torus(self) -> bool:
        return all(b == 1 for b in self.blocks)


def weighted_dynkin(mu: Partition) -> WeightedDynkin:
    """Assemble Y from the strings mu_i - 1, mu_i - 3, ..., 1 - mu_i and take differences."""
    tagged = [
        (mu_i - 1 - 2 * j, index)
        for index, mu_i in enumerate(mu.parts)
        for j in range(mu_i)
    ]
    # stable in the originating part on ties
    tagged.sort(key=lambda item: (-item[0], item[1]))
    levels = tuple(value for value, _ in tagged)
    h = tuple(a - b for a, b in zip(levels, levels[1:]))
    return WeightedDynkin(n=mu.size, h=h, levels=levels)


def sigma_of(subset: RootSubset) -> RootSubset:
    """Graph automorphism (p, q) -> (n+1-q, n+1-p)."""
    n = subset.n
    return RootSubset(n, frozenset((n + 1 - q, n + 1 - p) for p, q in subset.roots))


def sigma_one(diagram: WeightedDynkin) -> RootSubset:
    """Sigma_1: positive roots of weight exactly 1."""
    n = diagram.n
    roots = frozenset(
        (p, q)
        for p in range(1, n + 1)
        for q in range(p + 1, n + 1)
        if diagram.root_weight((p, q)) == 1
    )
    return RootSubset(n, roots)


def psi_blocks(diagram: WeightedDynkin) -> dict[int, RootSubset]:
    """The blocks Psi_i, one per alpha_i with h(alpha_i) = 1."""
    n = diagram.n
    positive = [i + 1 for i, value in enumerate(diagram.h) if value > 0]
    blocks: dict[int, RootSubset] = {}
    for i in diagram.pi_one:
        j = min((x for x in positive if x > i), default=n)
        k = max((x for x in positive if x < i), default=0)
        roots = frozenset(
            (p, q) for p in range(k + 1, i + 1) for q in range(i + 1, j + 1)
        )
        blocks[i] = RootSubset(n, roots)
    return blocks


def blocks_adjacent(diagram: WeightedDynkin, i: int, j: int) -> bool:
    """Psi_i and Psi_j are adjacent when no alpha_k of weight 1 sits strictly between."""
    lo, hi = sorted((i, j))
    return not any(lo < k < hi for k in diagram.pi_one)


def lagrangian_psi(mu: Partition) -> RootSubset:
    """Union of every other Psi_i block, starting from the lowest index.

    sigma sends Psi_i to Psi_{n-i}, so taking the odd positions among the
    weight-one simple roots yields Sigma_1 = Psi + sigma(Psi) with no two
    chosen blocks adjacent.
    """
    diagram = weighted_dynkin(mu)
    blocks = psi_blocks(diagram)
    chosen = [i for position, i in enumerate(sorted(blocks)) if position % 2 == 0]
    roots: frozenset[Root] = frozenset()
    for i in chosen:
        roots |= blocks[i].roots
    psi = RootSubset(diagram.n, roots)
    logger.debug(f"Psi for {mu}: blocks {chosen}, {len(psi)} roots")
    return psi


def orbit_dims(mu: Partition) -> OrbitDims:
    n = mu.size
    square_sum = sum(c * c for c in mu.dual().parts)
    dim_orbit = n * n - square_sum
    return OrbitDims(
        dim_orbit=dim_orbit,
        codim_class=(n * n - 1) - dim_orbit,
        dim_centralizer=square_sum - 1,
    )


def levi_of_N(mu: Partition) -> LeviShape:
    levels = weighted_dynkin(mu).levels
    counts = Counter(levels)
    blocks = tuple(counts[value] for value in sorted(counts, reverse=True))
    return LeviShape(blocks=blocks, dim_center=len(blocks) - 1)


def graded_dims(mu: Partition) -> dict[int, int]:
    """dim g_i of the grading of sl_n defined by the weighted Dynkin diagram."""
    diagram = weighted_dynkin(mu)
    n = diagram.n
    dims: Counter[int] = Counter()
    for p in range(1, n + 1):
        for q in range(1, n + 1):
            if p != q:
                dims[diagram.root_weight((p, q))] += 1
    dims[0] += n - 1
    return dict(sorted(dims.items()))


def dim_u_above(mu: Partition, threshold: int = 2) -> int:
    """Sum of dim g_i over i >= threshold."""
    return sum(dim for i, dim in graded_dims(mu).items() if i >= threshold)
