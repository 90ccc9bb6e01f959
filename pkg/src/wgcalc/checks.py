"""
Exact invariant suites shared by ``wg selftest`` and the test suite.

Every suite takes an n-bound ``level`` and raises ``CheckFailure`` with the
first counterexample it meets.  Random choices come from a seeded
``random.Random`` so runs are reproducible.
"""

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import factorial
from typing import Callable

from . import characters
from .characters import character, character_uncached
from .combinatorics import (
    all_permutations,
    compose,
    conjugacy_class_size,
    cycle_type,
    doubled_parts,
    inverse,
    irrep_dimension,
    paired_parts,
    partitions_of,
    sign,
)
from .hyperoctahedral import (
    coset_type,
    delta_pairing,
    delta_pairing_symplectic,
    double_coset_size,
    matchings,
)
from .integrator import MomentSpec, integrate
from .jack_values import jack_at_ones
from .spherical import twisted_spherical, zonal_spherical
from .symfunc import power_sum, schur_at_ones


class CheckFailure(AssertionError):
    pass


def _expect(ok: bool, message: str) -> None:
    if not ok:
        raise CheckFailure(message)


def _random_perm(rng: random.Random, n: int) -> tuple[int, ...]:
    images = list(range(1, n + 1))
    rng.shuffle(images)
    return tuple(images)


def _random_rationals(rng: random.Random, count: int) -> list[Fraction]:
    return [Fraction(rng.randint(-9, 9), rng.randint(1, 7)) for _ in range(count)]


# -- characters ----------------------------------------------------------------

def character_cache(level: int, rng: random.Random) -> None:
    """Every memoized character equals a fresh recomputation."""
    for lam, mu, value in characters.cached_entries():
        fresh = character_uncached(lam, mu)
        _expect(value == fresh, f"cached chi_{lam}({mu}) = {value}, recomputed {fresh}")


def character_orthogonality(level: int, rng: random.Random) -> None:
    """sum_tau chi_mu(tau) chi_lam(tau sigma) = [lam == mu] n! chi_lam(sigma) / d_lam."""
    for n in range(1, min(level, 6) + 1):
        perms = list(all_permutations(n))
        sigma = _random_perm(rng, n)
        types = [(cycle_type(t), cycle_type(compose(t, sigma))) for t in perms]
        sigma_type = cycle_type(sigma)
        for lam in partitions_of(n):
            for mu in partitions_of(n):
                lhs = sum(character(mu, a) * character(lam, b) for a, b in types)
                rhs = (
                    Fraction(factorial(n) * character(lam, sigma_type), irrep_dimension(lam))
                    if lam == mu
                    else 0
                )
                _expect(lhs == rhs, f"row orthogonality n={n} lam={lam} mu={mu} sigma={sigma}: {lhs} != {rhs}")
                col = sum(character(nu, lam) * character(nu, mu) for nu in partitions_of(n))
                col_rhs = factorial(n) // conjugacy_class_size(mu) if lam == mu else 0
                _expect(col == col_rhs, f"column orthogonality n={n} {lam},{mu}: {col} != {col_rhs}")
                _expect(
                    character(lam, (1,) * n) == irrep_dimension(lam),
                    f"chi_{lam}(1^n) != hook-length dimension",
                )


def character_oracle(level: int, rng: random.Random) -> None:
    for n in range(1, min(level, 6) + 1):
        for lam in partitions_of(n):
            for mu in partitions_of(n):
                a, b = character(lam, mu), characters.character_oracle(lam, mu)
                _expect(a == b, f"chi_{lam}({mu}): rule {a}, oracle {b}")


# -- spherical functions -----------------------------------------------------------

def _random_s2n(rng, n):
    return _random_perm(rng, 2 * n)


def zonal_orthogonality(level: int, rng: random.Random) -> None:
    for n in range(1, min(level, 4) + 1):
        ms = matchings(n)
        coset_count = Fraction(factorial(2 * n), 2**n * factorial(n))
        sigma = _random_s2n(rng, n)
        tau_other = _random_s2n(rng, n)
        for lam in partitions_of(n):
            d = irrep_dimension(doubled_parts(lam))
            for mu in partitions_of(n):
                lhs = sum(
                    zonal_spherical(lam, t) * zonal_spherical(mu, compose(inverse(t), sigma))
                    for t in ms
                )
                rhs = coset_count * zonal_spherical(lam, sigma) / d if lam == mu else 0
                _expect(lhs == rhs, f"omega convolution n={n} {lam},{mu} sigma={sigma}: {lhs} != {rhs}")
        for tau in (sigma, tau_other, _random_s2n(rng, n)):
            lhs = sum(
                irrep_dimension(doubled_parts(lam)) * zonal_spherical(lam, sigma) * zonal_spherical(lam, tau)
                for lam in partitions_of(n)
            )
            same = coset_type(sigma) == coset_type(tau)
            rhs = Fraction(factorial(2 * n), double_coset_size(coset_type(tau))) if same else 0
            _expect(lhs == rhs, f"omega completeness n={n} sigma={sigma} tau={tau}: {lhs} != {rhs}")


def twisted_orthogonality(level: int, rng: random.Random) -> None:
    for n in range(1, min(level, 3) + 1):
        ms = matchings(n)
        coset_count = Fraction(factorial(2 * n), 2**n * factorial(n))
        sigma = _random_s2n(rng, n)
        for lam in partitions_of(n):
            d = irrep_dimension(paired_parts(lam))
            for mu in partitions_of(n):
                lhs = sum(
                    twisted_spherical(lam, t) * twisted_spherical(mu, compose(inverse(t), sigma))
                    for t in ms
                )
                rhs = coset_count * twisted_spherical(lam, sigma) / d if lam == mu else 0
                _expect(lhs == rhs, f"psi convolution n={n} {lam},{mu} sigma={sigma}: {lhs} != {rhs}")
        for tau in (sigma, _random_s2n(rng, n), _random_s2n(rng, n)):
            lhs = sum(
                irrep_dimension(paired_parts(lam)) * twisted_spherical(lam, sigma) * twisted_spherical(lam, tau)
                for lam in partitions_of(n)
            )
            same = coset_type(sigma) == coset_type(tau)
            rhs = (
                Fraction(factorial(2 * n), double_coset_size(coset_type(sigma))) * sign(sigma) * sign(tau)
                if same
                else 0
            )
            _expect(lhs == rhs, f"psi completeness n={n} sigma={sigma} tau={tau}: {lhs} != {rhs}")


# -- delta-sum identities ------------------------------------------------------------

def unitary_delta_sum(tau, sigma, y) -> Fraction:
    """sum_{j,m} delta_tau[j,m] delta_sigma[j,m] prod y_{j_k} y_{m_k}.

    Only m with m_{tau(k)} = j_k can contribute, so m is fixed by j.
    """
    n, N = len(tau), len(y)
    total = Fraction(0)
    for j in product(range(1, N + 1), repeat=n):
        m = [0] * n
        for k in range(n):
            m[tau[k] - 1] = j[k]
        if all(j[k] == m[sigma[k] - 1] for k in range(n)):
            w = Fraction(1)
            for k in range(n):
                w *= y[j[k] - 1] * y[m[k] - 1]
            total += w
    return total


def orthogonal_delta_sum(tau, sigma, y) -> Fraction:
    """sum_j Delta_tau[j] Delta_sigma[j] prod y_{j_k}, over j with Delta_tau[j] != 0."""
    size, N = len(tau), len(y)
    total = Fraction(0)
    for values in product(range(1, N + 1), repeat=size // 2):
        j = [0] * size
        for k, v in enumerate(values):
            j[tau[2 * k] - 1] = v
            j[tau[2 * k + 1] - 1] = v
        if delta_pairing(sigma, j):
            w = Fraction(1)
            for x in j:
                w *= y[x - 1]
            total += w * delta_pairing(tau, j)
    return total


def symplectic_delta_sum(tau, sigma, y, N) -> Fraction:
    """sum_j Delta'_tau[j] Delta'_sigma[j] prod y_{j_k}, indices in 1..2N."""
    size = len(tau)
    total = Fraction(0)
    for values in product(range(1, 2 * N + 1), repeat=size // 2):
        j = [0] * size
        for k, v in enumerate(values):
            j[tau[2 * k] - 1] = v
            j[tau[2 * k + 1] - 1] = v + N if v <= N else v - N
        dt = delta_pairing_symplectic(tau, j, N)
        ds = delta_pairing_symplectic(sigma, j, N)
        if dt and ds:
            w = Fraction(dt * ds)
            for x in j:
                w *= y[x - 1]
            total += w
    return total


def delta_identities(level: int, rng: random.Random) -> None:
    for n in range(1, min(level, 3) + 1):
        for N in range(1, 5):
            y = _random_rationals(rng, N)
            x = [v * v for v in y]
            tau, sigma = _random_perm(rng, n), _random_perm(rng, n)
            lhs = unitary_delta_sum(tau, sigma, y)
            rhs = power_sum(cycle_type(compose(inverse(tau), sigma)), x)
            _expect(lhs == rhs, f"unitary delta sum n={n} N={N} tau={tau} sigma={sigma}: {lhs} != {rhs}")

            tau, sigma = _random_s2n(rng, n), _random_s2n(rng, n)
            ct = coset_type(compose(inverse(tau), sigma))
            lhs = orthogonal_delta_sum(tau, sigma, y)
            rhs = power_sum(ct, x)
            _expect(lhs == rhs, f"orthogonal delta sum n={n} N={N} tau={tau} sigma={sigma}: {lhs} != {rhs}")

            lhs = symplectic_delta_sum(tau, sigma, y + y, N)
            rhs = (-1) ** n * sign(tau) * sign(sigma) * (-2) ** len(ct) * power_sum(ct, x)
            _expect(lhs == rhs, f"symplectic delta sum n={n} N={N} tau={tau} sigma={sigma}: {lhs} != {rhs}")


# -- Jack values and integrator ---------------------------------------------------------

def jack_schur(level: int, rng: random.Random) -> None:
    for n in range(1, min(level, 6) + 1):
        for N in range(1, min(level, 6) + 1):
            for lam in partitions_of(n):
                lhs = jack_at_ones(lam, 1, N)
                rhs = factorial(n) * schur_at_ones(lam, N) / irrep_dimension(lam)
                _expect(lhs == rhs, f"J^(1)_{lam}(1^{N}) = {lhs}, n! s/d = {rhs}")


def _adjoint_entry(b: int, a2: int, N: int) -> tuple[int, int, int]:
    """(coeff, row, col) with (J S^T J^T)[b, a2] = coeff * S[row, col]."""
    def partner(i):
        return (i + N, 1) if i <= N else (i - N, -1)

    k, jb = partner(b)  # J[b, k]
    l, ja = partner(a2)  # (J^T)[l, a2] = J[a2, l]
    return jb * ja, l, k


def sum_rules(level: int, rng: random.Random) -> None:
    for N in range(1, min(level, 4) + 1):
        for a in range(1, N + 1):
            for a2 in range(1, N + 1):
                want = 1 if a == a2 else 0
                u = sum(integrate(MomentSpec("u", N, [a], [b], [b], [a2])) for b in range(1, N + 1))
                _expect(u == want, f"unitary row rule N={N} a={a} a'={a2}: {u}")
                o = sum(integrate(MomentSpec("o", N, [a, a2], [b, b])) for b in range(1, N + 1))
                _expect(o == want, f"orthogonal row rule N={N} a={a} a'={a2}: {o}")
    for N in range(1, min(level, 3) + 1):
        for a in range(1, 2 * N + 1):
            for a2 in range(1, 2 * N + 1):
                total = Fraction(0)
                for b in range(1, 2 * N + 1):
                    coeff, row, col = _adjoint_entry(b, a2, N)
                    total += coeff * integrate(MomentSpec("sp", N, [a, row], [b, col]))
                want = 1 if a == a2 else 0
                _expect(total == want, f"symplectic adjoint rule N={N} a={a} a'={a2}: {total}")


@dataclass
class SuiteResult:
    name: str
    passed: bool
    seconds: float
    detail: str = ""


SUITES: list[tuple[str, Callable[[int, random.Random], None]]] = [
    ("character-cache", character_cache),
    ("character-orthogonality", character_orthogonality),
    ("character-oracle", character_oracle),
    ("zonal-orthogonality", zonal_orthogonality),
    ("twisted-orthogonality", twisted_orthogonality),
    ("delta-identities", delta_identities),
    ("jack-schur", jack_schur),
    ("sum-rules", sum_rules),
]


def run_suites(level: int, seed: int = 0) -> list[SuiteResult]:
    results = []
    for name, suite in SUITES:
        start = time.perf_counter()
        try:
            suite(level, random.Random(f"{seed}:{name}"))
        except CheckFailure as exc:
            results.append(SuiteResult(name, False, time.perf_counter() - start, str(exc)))
        else:
            results.append(SuiteResult(name, True, time.perf_counter() - start))
    return results
