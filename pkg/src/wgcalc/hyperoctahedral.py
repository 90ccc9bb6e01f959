"""
The hyperoctahedral group H_n inside S_2n, matchings, and coset types.

H_n is the stabilizer of the pairing {1,2}, {3,4}, ..., {2n-1,2n}.  Matchings
are the canonical representatives of S_2n / H_n: one-based image lists with
``m(2i-1) < m(2i)`` and ``m(2i-1) < m(2i+1)``.
"""

from functools import lru_cache
from itertools import permutations, product
from math import factorial
from typing import Iterator, Sequence

from .combinatorics import (
    Partition,
    Permutation,
    compose,
    conjugacy_class_size,
    cycles,
    from_cycles,
)
from .errors import InvalidArgumentError, UnsupportedScaleError

MAX_N = 8


def _check_scale(n: int) -> None:
    if not isinstance(n, int) or not 1 <= n <= MAX_N:
        raise UnsupportedScaleError(f"n must be in 1..{MAX_N}, got {n!r}")


def hyperoctahedral_elements(n: int) -> Iterator[Permutation]:
    """All 2^n n! elements of H_n: block permutations of pairs with in-pair swaps."""
    _check_scale(n)
    for blocks in permutations(range(n)):
        for flips in product((0, 1), repeat=n):
            images = [0] * (2 * n)
            for i, (b, f) in enumerate(zip(blocks, flips)):
                images[2 * i] = 2 * b + 1 + f
                images[2 * i + 1] = 2 * b + 2 - f
            yield tuple(images)


@lru_cache(maxsize=None)
def hyperoctahedral_group(n: int) -> tuple[Permutation, ...]:
    return tuple(hyperoctahedral_elements(n))


def hyperoctahedral_order(n: int) -> int:
    return 2**n * factorial(n)


def _pairings(items: tuple[int, ...]) -> Iterator[list[tuple[int, int]]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for i, partner in enumerate(rest):
        for tail in _pairings(rest[:i] + rest[i + 1 :]):
            yield [(first, partner)] + tail


@lru_cache(maxsize=None)
def _matchings(n: int) -> tuple[Permutation, ...]:
    out = []
    for pairing in _pairings(tuple(range(1, 2 * n + 1))):
        out.append(tuple(k for pair in pairing for k in pair))
    return tuple(out)


def matchings(n: int) -> list[Permutation]:
    """The (2n-1)!! canonical coset representatives of S_2n / H_n.

    Built by pairing the smallest unused point with each possible partner,
    so the inequality conditions hold by construction.
    """
    _check_scale(n)
    return list(_matchings(n))


def is_matching(perm: Sequence[int]) -> bool:
    n2 = len(perm)
    if n2 % 2:
        return False
    return all(perm[2 * i] < perm[2 * i + 1] for i in range(n2 // 2)) and all(
        perm[2 * i] < perm[2 * i + 2] for i in range(n2 // 2 - 1)
    )


def pairing_of(tau: Permutation) -> list[tuple[int, int]]:
    """The pairs ``{tau(2k-1), tau(2k)}``, i.e. tau applied to the base pairing."""
    return [(tau[2 * k], tau[2 * k + 1]) for k in range(len(tau) // 2)]


def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def coset_type(tau: Permutation) -> Partition:
    """Half edge counts of the components of the graph with edges
    ``{2i-1, 2i}`` and ``{tau(2i-1), tau(2i)}``."""
    if len(tau) % 2:
        raise InvalidArgumentError(f"coset type needs even degree, got {len(tau)}")
    size = len(tau)
    parent = list(range(size + 1))
    for i in range(size // 2):
        for u, v in ((2 * i + 1, 2 * i + 2), (tau[2 * i], tau[2 * i + 1])):
            ru, rv = _find(parent, u), _find(parent, v)
            if ru != rv:
                parent[ru] = rv
    counts: dict[int, int] = {}
    for v in range(1, size + 1):
        r = _find(parent, v)
        counts[r] = counts.get(r, 0) + 1
    # a component with 2k vertices has 2k edges; its part is k
    return tuple(sorted((c // 2 for c in counts.values()), reverse=True))


def double_coset_size(mu: Partition) -> int:
    """Order of the double coset H_n tau H_n for ``coset_type(tau) == mu``."""
    n = sum(mu)
    return 4**n * factorial(n) * conjugacy_class_size(mu) // 2 ** len(mu)


def doubled_perm(pi: Permutation) -> Permutation:
    """Send each cycle (i1 ... ir) to (2i1-1, 2i1, ..., 2ir-1, 2ir)."""
    doubled = [
        tuple(x for i in cyc for x in (2 * i - 1, 2 * i)) for cyc in cycles(pi)
    ]
    return from_cycles(doubled, 2 * len(pi))


def in_same_double_coset(tau: Permutation, sigma: Permutation) -> bool:
    """Brute force: does ``tau = h1 sigma h2`` for some h1, h2 in H_n?"""
    n = len(tau) // 2
    group = hyperoctahedral_group(n)
    right = {compose(sigma, h) for h in group}
    return any(compose(h, s) == tau for h in group for s in right)


# -- pairing deltas -------------------------------------------------------------

def _check_indices(j: Sequence[int], bound: int) -> None:
    for x in j:
        if not 1 <= x <= bound:
            raise InvalidArgumentError(f"index {x} outside 1..{bound}")


def delta_pairing(tau: Permutation, j: Sequence[int], N: int | None = None) -> int:
    """prod_k [j_{tau(2k-1)} == j_{tau(2k)}]."""
    if len(j) != len(tau):
        raise InvalidArgumentError("index list length must equal degree of tau")
    if N is not None:
        _check_indices(j, N)
    for k in range(0, len(tau), 2):
        if j[tau[k] - 1] != j[tau[k + 1] - 1]:
            return 0
    return 1


def skew_form(i: int, k: int, N: int) -> int:
    """<<e(i), e(k)>> = [i + N == k] - [i == k + N]."""
    return (i + N == k) - (i == k + N)


def delta_pairing_symplectic(tau: Permutation, j: Sequence[int], N: int) -> int:
    """prod_k <<e(j_{tau(2k-1)}), e(j_{tau(2k)})>> for indices in 1..2N."""
    if len(j) != len(tau):
        raise InvalidArgumentError("index list length must equal degree of tau")
    _check_indices(j, 2 * N)
    value = 1
    for k in range(0, len(tau), 2):
        value *= skew_form(j[tau[k] - 1], j[tau[k + 1] - 1], N)
        if not value:
            return 0
    return value
