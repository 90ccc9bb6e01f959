"""Power sums on vectors and the Schur specialization s_lam(1^N)."""

from fractions import Fraction
from math import prod
from typing import Sequence

from .combinatorics import Partition, hook_lengths


def power_sum(lam: Partition, x: Sequence) -> Fraction:
    """p_lam(x) = prod_i sum_j x_j^lam_i."""
    xs = [Fraction(v) for v in x]
    return prod((sum(v**part for v in xs) for part in lam), start=Fraction(1))


def schur_at_ones(lam: Partition, N: int) -> Fraction:
    """Hook-content formula; zero when lam has more than N rows."""
    if len(lam) > N:
        return Fraction(0)
    value = Fraction(1)
    for i, j, hook in hook_lengths(lam):
        value *= Fraction(N + j - i, hook)
    return value
