"""Jack polynomials evaluated at the all-ones vector 1^N."""

from fractions import Fraction

from .combinatorics import Partition
from .errors import InvalidArgumentError

ALPHAS = (Fraction(1), Fraction(2), Fraction(1, 2))


def as_alpha(alpha) -> Fraction:
    value = Fraction(alpha)
    if value not in ALPHAS:
        raise InvalidArgumentError(f"alpha must be one of 1, 2, 1/2; got {alpha!r}")
    return value


def _jack_at_ones(lam: Partition, alpha: Fraction, N: int) -> Fraction:
    # Gamma(c + m) / Gamma(c) expanded as the rising product c (c+1) ... (c+m-1)
    value = alpha ** sum(lam)
    for j, part in enumerate(lam, start=1):
        c = Fraction(N - j + 1) / alpha
        for i in range(part):
            value *= c + i
    return value


def jack_at_ones(lam: Partition, alpha, N: int) -> Fraction:
    """J_lam^(alpha)(1^N) for alpha in {1, 2, 1/2}, exact."""
    if not isinstance(N, int) or N < 1:
        raise InvalidArgumentError(f"N must be a positive integer, got {N!r}")
    return _jack_at_ones(tuple(lam), as_alpha(alpha), N)
