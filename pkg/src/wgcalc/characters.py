"""
Irreducible characters of the symmetric group.

``character`` uses the Murnaghan-Nakayama rule on beta-sets and memoizes
results in a process-wide dict.  ``character_oracle`` is an independent
route through monomial expansions of power sums and Schur functions, meant
only for cross-checking at small n.
"""

import os
from fractions import Fraction
from pathlib import Path
from typing import Iterable

from .combinatorics import (
    Partition,
    format_partition,
    make_partition,
    parse_partition,
    partitions_of,
)
from .errors import InvalidArgumentError, UnsupportedScaleError

ORACLE_MAX_N = 7

# (lambda, mu) -> chi_lambda(mu).  Single dict get/set is atomic under the GIL
# and every key always maps to the same value, so concurrent use is safe.
_CACHE: dict[tuple[Partition, Partition], int] = {}


def _beta_set(lam: Partition) -> tuple[int, ...]:
    k = len(lam)
    return tuple(lam[i] + (k - 1 - i) for i in range(k))


def _from_beta(beta: Iterable[int]) -> Partition:
    b = sorted(beta, reverse=True)
    k = len(b)
    parts = tuple(b[i] - (k - 1 - i) for i in range(k))
    return tuple(p for p in parts if p > 0)


def _mn(lam: Partition, mu: Partition, memo: dict) -> int:
    if not mu:
        return 1
    key = (lam, mu)
    cached = memo.get(key)
    if cached is not None:
        return cached
    r, rest = mu[0], mu[1:]
    beta = _beta_set(lam)
    present = set(beta)
    total = 0
    for b in beta:
        target = b - r
        if target < 0 or target in present:
            continue
        height = sum(1 for c in beta if target < c < b)
        new_beta = [c for c in beta if c != b] + [target]
        term = _mn(_from_beta(new_beta), rest, memo)
        total += -term if height % 2 else term
    memo[key] = total
    return total


def character(lam: Partition, mu: Partition) -> int:
    """chi_lam evaluated on the conjugacy class of cycle type ``mu``."""
    if sum(lam) != sum(mu):
        raise InvalidArgumentError(f"size mismatch: |{lam}| != |{mu}|")
    return _mn(tuple(lam), tuple(mu), _CACHE)


def character_uncached(lam: Partition, mu: Partition) -> int:
    """Same rule with a private memo; used to audit the shared cache."""
    if sum(lam) != sum(mu):
        raise InvalidArgumentError(f"size mismatch: |{lam}| != |{mu}|")
    return _mn(tuple(lam), tuple(mu), {})


def cached_entries() -> list[tuple[Partition, Partition, int]]:
    return [(lam, mu, v) for (lam, mu), v in list(_CACHE.items())]


def character_table(n: int) -> dict[tuple[Partition, Partition], int]:
    """Fill the memo for all of S_n and return the table."""
    parts = partitions_of(n)
    return {(lam, mu): character(lam, mu) for lam in parts for mu in parts}


def preload(n: int) -> None:
    character_table(n)


def clear_cache() -> None:
    _CACHE.clear()


# -- on-disk cache ------------------------------------------------------------

def cache_dir() -> Path:
    return Path(os.environ.get("WGCALC_CACHE_DIR", Path.home() / ".cache" / "wgcalc"))


def cache_path(n: int, directory: Path | None = None) -> Path:
    return (directory or cache_dir()) / f"characters_{n}.txt"


def write_cache_file(n: int, directory: Path | None = None) -> Path:
    path = cache_path(n, directory)
    path.parent.mkdir(parents=True, exist_ok=True)
    lines = [f"n={n}"]
    for (lam, mu), value in character_table(n).items():
        lines.append(f"{format_partition(lam)};{format_partition(mu)};{value}")
    path.write_text("\n".join(lines) + "\n")
    return path


def read_cache_file(path: Path) -> tuple[int, dict[tuple[Partition, Partition], int]]:
    lines = Path(path).read_text().splitlines()
    if not lines or not lines[0].startswith("n="):
        raise InvalidArgumentError(f"{path}: missing 'n=<n>' header")
    try:
        n = int(lines[0][2:])
    except ValueError:
        raise InvalidArgumentError(f"{path}: bad header {lines[0]!r}") from None
    table = {}
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        fields = line.split(";")
        if len(fields) != 3:
            raise InvalidArgumentError(f"{path}:{lineno}: expected 3 fields")
        lam, mu = parse_partition(fields[0]), parse_partition(fields[1])
        if sum(lam) != n or sum(mu) != n:
            raise InvalidArgumentError(f"{path}:{lineno}: partition size != {n}")
        try:
            table[(lam, mu)] = int(fields[2])
        except ValueError:
            raise InvalidArgumentError(f"{path}:{lineno}: bad value {fields[2]!r}") from None
    return n, table


def load_cache_file(path: Path) -> int:
    """Seed the memo from a cache file; returns its n."""
    n, table = read_cache_file(path)
    _CACHE.update(table)
    return n


def load_cache_dir(directory: Path | None = None) -> list[int]:
    directory = directory or cache_dir()
    loaded = []
    for path in sorted(Path(directory).glob("characters_*.txt")):
        loaded.append(load_cache_file(path))
    return loaded


# -- independent oracle ---------------------------------------------------------

def _compositions_count(parts: Partition, target: tuple[int, ...]) -> int:
    """Ways to send each part to a variable so that variable i receives target[i]."""
    if not parts:
        return 1 if not any(target) else 0
    first, rest = parts[0], parts[1:]
    total = 0
    for i, t in enumerate(target):
        if t >= first:
            reduced = target[:i] + (t - first,) + target[i + 1 :]
            total += _compositions_count(rest, reduced)
    return total


def _kostka(shape: Partition, content: Partition) -> int:
    """Semistandard tableaux of ``shape`` with content ``content`` (row-by-row fill)."""
    rows = len(shape)
    counts = list(content)

    # Fill value v as a horizontal strip, v = 1, 2, ...
    def place(v: int, filled: tuple[int, ...]) -> int:
        if v == len(counts):
            return 1 if filled == tuple(shape) else 0
        return sum(place(v + 1, f) for f in strips(filled, filled, counts[v], 0))

    def strips(old: tuple[int, ...], filled: tuple[int, ...], need: int, row: int):
        if need == 0:
            yield filled
            return
        if row >= rows:
            return
        room = shape[row] - old[row]
        if row > 0:
            # horizontal strip: row may grow at most to the old length of the row above
            room = min(room, old[row - 1] - old[row])
        for take in range(min(room, need), -1, -1):
            new = filled[:row] + (old[row] + take,) + filled[row + 1 :]
            yield from strips(old, new, need - take, row + 1)

    return place(0, (0,) * rows)


def _solve(matrix: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    size = len(matrix)
    a = [row[:] + [rhs[i]] for i, row in enumerate(matrix)]
    for col in range(size):
        pivot = next(r for r in range(col, size) if a[r][col] != 0)
        a[col], a[pivot] = a[pivot], a[col]
        for r in range(size):
            if r != col and a[r][col] != 0:
                f = a[r][col] / a[col][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[i][size] / a[i][i] for i in range(size)]


def character_oracle(lam: Partition, mu: Partition) -> int:
    """chi_lam(mu) from p_mu = sum_lam chi_lam(mu) s_lam in n variables.

    Both sides are expanded in the monomial basis: p_mu by counting part
    placements, s_lam by Kostka numbers.  Exact rational elimination then
    recovers the coefficients.
    """
    lam, mu = make_partition(lam), make_partition(mu)
    n = sum(lam)
    if n != sum(mu):
        raise InvalidArgumentError(f"size mismatch: |{lam}| != |{mu}|")
    if n > ORACLE_MAX_N:
        raise UnsupportedScaleError(f"oracle limited to n <= {ORACLE_MAX_N}")
    shapes = partitions_of(n)
    # row nu: coefficient of x^nu; column shape: s_shape
    matrix = [[Fraction(_kostka(shape, nu)) for shape in shapes] for nu in shapes]
    rhs = [Fraction(_compositions_count(mu, nu)) for nu in shapes]
    coeffs = _solve(matrix, rhs)
    value = coeffs[shapes.index(lam)]
    assert value.denominator == 1
    return int(value)
