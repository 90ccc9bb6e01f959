"""
Weingarten functions of U(N), O(N) and Sp(2N) as exact rationals.

Each is a character-type sum over partitions lam of n with at most N rows,
weighted by an irrep dimension over a Jack specialization at 1^N:

    Wg^U(sigma)  = 1/n!          sum d_lam      / J^(1)_lam(1^N)   chi_lam(sigma)
    Wg^O(tau)    = 2^n n!/(2n)!  sum d_2lam     / J^(2)_lam(1^N)   omega_lam(tau)
    Wg^Sp(tau)   = n!/(2n)!      sum d_lam∪lam  / J^(1/2)_lam(1^N) psi_lam(tau)

For Sp(2N), N is the half-dimension.
"""

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial

from . import characters, spherical
from .characters import character
from .combinatorics import (
    Partition,
    Permutation,
    cycle_type,
    doubled_parts,
    irrep_dimension,
    paired_parts,
    partitions_of,
    sign,
)
from .errors import InvalidArgumentError, UnsupportedScaleError
from .hyperoctahedral import MAX_N as HYPEROCTAHEDRAL_MAX_N, coset_type, matchings
from .jack_values import jack_at_ones


class GroupKind(enum.Enum):
    UNITARY = "u"
    ORTHOGONAL = "o"
    SYMPLECTIC = "sp"

    @classmethod
    def parse(cls, text: "str | GroupKind") -> "GroupKind":
        if isinstance(text, GroupKind):
            return text
        try:
            return cls(str(text).lower())
        except ValueError:
            raise InvalidArgumentError(f"unknown group {text!r}; use u, o or sp") from None


TABLE_MAX_N = {GroupKind.UNITARY: 8, GroupKind.ORTHOGONAL: 6, GroupKind.SYMPLECTIC: 6}


def _check_N(N: int) -> None:
    if not isinstance(N, int) or isinstance(N, bool) or N < 1:
        raise InvalidArgumentError(f"N must be a positive integer, got {N!r}")


def _check_paired_scale(n: int) -> None:
    if n > HYPEROCTAHEDRAL_MAX_N:
        raise UnsupportedScaleError(f"O/Sp Weingarten values need n <= {HYPEROCTAHEDRAL_MAX_N}")


def _allowed(n: int, N: int) -> list[Partition]:
    return [lam for lam in partitions_of(n) if len(lam) <= N]


@lru_cache(maxsize=None)
def wg_unitary(mu: Partition, N: int) -> Fraction:
    """Wg^U at any permutation of cycle type ``mu``."""
    _check_N(N)
    mu = tuple(mu)
    n = sum(mu)
    total = Fraction(0)
    for lam in _allowed(n, N):
        total += Fraction(irrep_dimension(lam)) / jack_at_ones(lam, 1, N) * character(lam, mu)
    return total / factorial(n)


def wg_unitary_perm(sigma: Permutation, N: int) -> Fraction:
    return wg_unitary(cycle_type(sigma), N)


@lru_cache(maxsize=None)
def wg_orthogonal(mu: Partition, N: int) -> Fraction:
    """Wg^O at any permutation of S_2n whose coset type is ``mu``."""
    _check_N(N)
    mu = tuple(mu)
    n = sum(mu)
    _check_paired_scale(n)
    total = Fraction(0)
    for lam in _allowed(n, N):
        d = irrep_dimension(doubled_parts(lam))
        total += Fraction(d) / jack_at_ones(lam, 2, N) * spherical.omega_by_type(lam, mu)
    return total * Fraction(2**n * factorial(n), factorial(2 * n))


def wg_orthogonal_perm(tau: Permutation, N: int) -> Fraction:
    return wg_orthogonal(coset_type(tau), N)


@lru_cache(maxsize=None)
def wg_symplectic_normalized(mu: Partition, N: int) -> Fraction:
    """s(tau)*Wg^Sp(tau) for tau of coset type ``mu``: the value at a sign +1 representative."""
    _check_N(N)
    mu = tuple(mu)
    n = sum(mu)
    _check_paired_scale(n)
    total = Fraction(0)
    for lam in _allowed(n, N):
        d = irrep_dimension(paired_parts(lam))
        total += Fraction(d) / jack_at_ones(lam, Fraction(1, 2), N) * spherical.psi_normalized_by_type(lam, mu)
    return total * Fraction(factorial(n), factorial(2 * n))


def wg_symplectic(tau: Permutation, N: int) -> Fraction:
    """Wg^Sp(tau); depends on the coset type and the sign of tau."""
    if len(tau) % 2:
        raise InvalidArgumentError(f"tau must have even degree, got {len(tau)}")
    return sign(tau) * wg_symplectic_normalized(coset_type(tau), N)


@dataclass
class TableEntry:
    label: Partition
    value: Fraction
    # Sp only: a matching of this coset type, its sign, and Wg^Sp at it
    representative: Permutation | None = None
    representative_sign: int | None = None
    representative_value: Fraction | None = None


@dataclass
class WeingartenTable:
    group: GroupKind
    n: int
    N: int
    entries: list[TableEntry] = field(default_factory=list)

    def as_dict(self) -> dict[Partition, Fraction]:
        return {e.label: e.value for e in self.entries}


def _first_matching_of_type(n: int) -> dict[Partition, Permutation]:
    found: dict[Partition, Permutation] = {}
    for m in matchings(n):
        found.setdefault(coset_type(m), m)
    return found


def wg_table(group, n: int, N: int) -> WeingartenTable:
    """All Weingarten values of order ``n`` in reverse lexicographic label order.

    For Sp the ``value`` column uses the sign +1 convention; the entry also
    records the first canonical matching of that coset type and its raw value.
    """
    group = GroupKind.parse(group)
    _check_N(N)
    if not isinstance(n, int) or not 1 <= n <= TABLE_MAX_N[group]:
        raise UnsupportedScaleError(
            f"{group.value} tables support 1 <= n <= {TABLE_MAX_N[group]}, got {n!r}"
        )
    table = WeingartenTable(group, n, N)
    characters.preload(n)
    if group is GroupKind.UNITARY:
        for mu in partitions_of(n):
            table.entries.append(TableEntry(mu, wg_unitary(mu, N)))
        return table
    characters.preload(2 * n)
    spherical.preload(n)
    if group is GroupKind.ORTHOGONAL:
        for mu in partitions_of(n):
            table.entries.append(TableEntry(mu, wg_orthogonal(mu, N)))
        return table
    reps = _first_matching_of_type(n)
    for mu in partitions_of(n):
        value = wg_symplectic_normalized(mu, N)
        rep = reps[mu]
        s = sign(rep)
        table.entries.append(TableEntry(mu, value, rep, s, s * value))
    return table


def clear_cache() -> None:
    for fn in (wg_unitary, wg_orthogonal, wg_symplectic_normalized):
        fn.cache_clear()
