"""
Integer partitions and permutations.

Partitions are plain tuples of positive integers in weakly decreasing order,
e.g. ``(3, 1, 1)``.  Permutations are tuples of one-based images, so
``(2, 3, 1)`` sends 1 -> 2, 2 -> 3, 3 -> 1.  Products are read right to left:
``compose(p, q)(k) == p(q(k))``.
"""

import re
from collections import Counter
from functools import lru_cache
from math import factorial, prod
from typing import Iterator, Sequence

from .errors import InvalidArgumentError

Partition = tuple[int, ...]
Permutation = tuple[int, ...]


def is_partition(parts: Sequence[int]) -> bool:
    return all(p >= 1 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def make_partition(parts: Sequence[int]) -> Partition:
    parts = tuple(int(p) for p in parts)
    if not parts or not is_partition(parts):
        raise InvalidArgumentError(f"not a partition: {parts!r}")
    return parts


def doubled_parts(lam: Partition) -> Partition:
    """``2λ``: every part multiplied by two."""
    return tuple(2 * p for p in lam)


def paired_parts(lam: Partition) -> Partition:
    """``λ∪λ``: every part repeated twice."""
    return tuple(p for p in lam for _ in range(2))


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> tuple[Partition, ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if not isinstance(n, int) or n < 1:
        raise InvalidArgumentError(f"n must be a positive integer, got {n!r}")
    return list(_partitions(n, n))


# -- permutations -----------------------------------------------------------

def identity(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def is_permutation(images: Sequence[int]) -> bool:
    return sorted(images) == list(range(1, len(images) + 1))


def make_permutation(images: Sequence[int]) -> Permutation:
    images = tuple(int(i) for i in images)
    if not is_permutation(images):
        raise InvalidArgumentError(f"not a permutation: {images!r}")
    return images


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Right-to-left product ``p∘q``."""
    if len(p) != len(q):
        raise InvalidArgumentError(f"degree mismatch: {len(p)} vs {len(q)}")
    return tuple(p[k - 1] for k in q)


def inverse(p: Permutation) -> Permutation:
    inv = [0] * len(p)
    for k, image in enumerate(p, start=1):
        inv[image - 1] = k
    return tuple(inv)


def cycles(p: Permutation) -> list[tuple[int, ...]]:
    """Disjoint cycles including fixed points, each starting at its least element."""
    seen = [False] * (len(p) + 1)
    out = []
    for start in range(1, len(p) + 1):
        if seen[start]:
            continue
        cyc = []
        k = start
        while not seen[k]:
            seen[k] = True
            cyc.append(k)
            k = p[k - 1]
        out.append(tuple(cyc))
    return out


def from_cycles(cycle_list: Sequence[Sequence[int]], n: int) -> Permutation:
    images = list(range(1, n + 1))
    used = set()
    for cyc in cycle_list:
        for i, k in enumerate(cyc):
            if not 1 <= k <= n or k in used:
                raise InvalidArgumentError(f"bad cycle entry {k} for degree {n}")
            used.add(k)
            images[k - 1] = cyc[(i + 1) % len(cyc)]
    return tuple(images)


def cycle_type(p: Permutation) -> Partition:
    seen = bytearray(len(p) + 1)
    lengths = []
    for start in range(1, len(p) + 1):
        if seen[start]:
            continue
        length = 0
        k = start
        while not seen[k]:
            seen[k] = 1
            length += 1
            k = p[k - 1]
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def sign(p: Permutation) -> int:
    return -1 if (len(p) - len(cycle_type(p))) % 2 else 1


def partition_sign(mu: Partition) -> int:
    """Sign of any permutation with cycle type ``mu``."""
    return -1 if (sum(mu) - len(mu)) % 2 else 1


def representative(mu: Partition) -> Permutation:
    """The permutation with consecutive cycles of lengths ``mu`` in order."""
    cyc = []
    start = 1
    for part in mu:
        cyc.append(tuple(range(start, start + part)))
        start += part
    return from_cycles(cyc, start - 1)


def z_factor(mu: Partition) -> int:
    """Centralizer order ``∏ i^{m_i} m_i!``."""
    return prod(i**m * factorial(m) for i, m in Counter(mu).items())


def conjugacy_class_size(mu: Partition) -> int:
    return factorial(sum(mu)) // z_factor(mu)


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def hook_lengths(lam: Partition) -> Iterator[tuple[int, int, int]]:
    """Yield ``(row, col, hook)`` for every cell, zero-based coordinates."""
    conj = conjugate(lam)
    for i, row in enumerate(lam):
        for j in range(row):
            yield i, j, (row - j - 1) + (conj[j] - i - 1) + 1


@lru_cache(maxsize=None)
def irrep_dimension(lam: Partition) -> int:
    """Number of standard Young tableaux of shape ``lam`` (hook length formula)."""
    return factorial(sum(lam)) // prod(h for _, _, h in hook_lengths(lam))


def all_permutations(n: int) -> Iterator[Permutation]:
    from itertools import permutations

    return (tuple(p) for p in permutations(range(1, n + 1)))


# -- string forms -----------------------------------------------------------

def format_partition(lam: Partition) -> str:
    return ",".join(str(p) for p in lam)


def parse_partition(text: str) -> Partition:
    try:
        parts = [int(t) for t in text.replace(" ", "").strip("()").split(",") if t]
    except ValueError:
        raise InvalidArgumentError(f"cannot parse partition {text!r}") from None
    return make_partition(parts)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_permutation(text: str, degree: int | None = None) -> Permutation:
    """Parse ``"2,1,4,3"`` (image list) or ``"(1 2)(3 4)"`` (cycle notation).

    Cycle notation needs ``degree`` unless the largest entry is the degree.
    """
    text = text.strip()
    if text.startswith("("):
        if _CYCLE_RE.sub("", text).strip():
            raise InvalidArgumentError(f"cannot parse permutation {text!r}")
        try:
            cycle_list = [
                [int(t) for t in body.replace(",", " ").split()]
                for body in _CYCLE_RE.findall(text)
            ]
        except ValueError:
            raise InvalidArgumentError(f"cannot parse permutation {text!r}") from None
        n = degree if degree is not None else max((k for c in cycle_list for k in c), default=0)
        return from_cycles(cycle_list, n)
    try:
        images = [int(t) for t in text.split(",")]
    except ValueError:
        raise InvalidArgumentError(f"cannot parse permutation {text!r}") from None
    perm = make_permutation(images)
    if degree is not None and len(perm) != degree:
        raise InvalidArgumentError(f"expected degree {degree}, got {len(perm)}")
    return perm
