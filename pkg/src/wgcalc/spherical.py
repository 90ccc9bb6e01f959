"""
Zonal (omega) and twisted zonal (psi) spherical functions on S_2n.

Both are H_n-averages of characters over the coset tau*H_n.  Since the sign
of a permutation is fixed by its cycle type, each average only needs the
histogram of cycle types over tau*H_n; that histogram is built once per
coset type and shared.

psi is cached in the sign-normalized form s(tau)*psi_lam(tau), which is a
function of the double coset; ``twisted_spherical`` multiplies the sign back.
"""

from collections import Counter
from fractions import Fraction
from functools import lru_cache

from .characters import character
from .combinatorics import (
    Partition,
    Permutation,
    compose,
    cycle_type,
    doubled_parts,
    paired_parts,
    partition_sign,
    partitions_of,
    representative,
    sign,
)
from .errors import InvalidArgumentError
from .hyperoctahedral import coset_type, doubled_perm, hyperoctahedral_group

_OMEGA: dict[tuple[Partition, Partition], Fraction] = {}
_PSI_NORMALIZED: dict[tuple[Partition, Partition], Fraction] = {}


def coset_representative(mu: Partition) -> Permutation:
    """Doubled image of the standard permutation of cycle type ``mu``."""
    return doubled_perm(representative(mu))


@lru_cache(maxsize=None)
def _coset_histogram(mu: Partition) -> tuple[tuple[Partition, int], ...]:
    tau = coset_representative(mu)
    counts = Counter(cycle_type(compose(tau, xi)) for xi in hyperoctahedral_group(sum(mu)))
    return tuple(sorted(counts.items(), reverse=True))


def _check(lam: Partition, tau: Permutation) -> None:
    if len(tau) != 2 * sum(lam):
        raise InvalidArgumentError(
            f"degree mismatch: tau has degree {len(tau)}, expected {2 * sum(lam)}"
        )


def omega_by_type(lam: Partition, mu: Partition) -> Fraction:
    key = (lam, mu)
    value = _OMEGA.get(key)
    if value is None:
        if sum(lam) != sum(mu):
            raise InvalidArgumentError(f"size mismatch: |{lam}| != |{mu}|")
        shape = doubled_parts(lam)
        hist = _coset_histogram(mu)
        total = sum(count * character(shape, ct) for ct, count in hist)
        value = Fraction(total, sum(c for _, c in hist))
        _OMEGA[key] = value
    return value


def psi_normalized_by_type(lam: Partition, mu: Partition) -> Fraction:
    """s(tau)*psi_lam(tau) for any tau of coset type ``mu``."""
    key = (lam, mu)
    value = _PSI_NORMALIZED.get(key)
    if value is None:
        if sum(lam) != sum(mu):
            raise InvalidArgumentError(f"size mismatch: |{lam}| != |{mu}|")
        shape = paired_parts(lam)
        hist = _coset_histogram(mu)
        total = sum(count * partition_sign(ct) * character(shape, ct) for ct, count in hist)
        value = Fraction(total, sum(c for _, c in hist))
        _PSI_NORMALIZED[key] = value
    return value


def zonal_spherical(lam: Partition, tau: Permutation) -> Fraction:
    _check(lam, tau)
    return omega_by_type(tuple(lam), coset_type(tau))


def twisted_spherical(lam: Partition, tau: Permutation) -> Fraction:
    _check(lam, tau)
    return sign(tau) * psi_normalized_by_type(tuple(lam), coset_type(tau))


def zonal_spherical_direct(lam: Partition, tau: Permutation) -> Fraction:
    """Uncached literal H_n average, for cross-checks."""
    _check(lam, tau)
    shape = doubled_parts(lam)
    group = hyperoctahedral_group(sum(lam))
    total = sum(character(shape, cycle_type(compose(tau, xi))) for xi in group)
    return Fraction(total, len(group))


def twisted_spherical_direct(lam: Partition, tau: Permutation) -> Fraction:
    """Uncached literal sign-weighted H_n average, for cross-checks."""
    _check(lam, tau)
    shape = paired_parts(lam)
    group = hyperoctahedral_group(sum(lam))
    total = sum(character(shape, cycle_type(compose(tau, xi))) * sign(xi) for xi in group)
    return Fraction(total, len(group))


def preload(n: int) -> None:
    for lam in partitions_of(n):
        for mu in partitions_of(n):
            omega_by_type(lam, mu)
            psi_normalized_by_type(lam, mu)


def clear_cache() -> None:
    _OMEGA.clear()
    _PSI_NORMALIZED.clear()
    _coset_histogram.cache_clear()
