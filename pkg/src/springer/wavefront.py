"""The wave-front map on multipartitions."""

from src.exactalg.partitions import Multipartition, Partition, dual_partition


def wave_front(beta: Multipartition) -> Partition:
    """Dual of the partition obtained by merging all parts of beta."""
    return dual_partition(beta.merged())
