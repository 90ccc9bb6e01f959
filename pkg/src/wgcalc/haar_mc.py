"""
Monte-Carlo estimates of Haar moments, used as an independent oracle.

Randomness comes from Philox, a counter-based generator.  Samples are
produced in fixed-size blocks; block ``b`` draws from the stream keyed by
``(seed, b)`` in sample-major order, so sample ``k`` depends only on
``(seed, k)``.  Per-block statistics are merged in block order, which makes
the estimate independent of how blocks are spread over worker threads.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import InvalidArgumentError, NumericalFailureError, SamplerError
from .integrator import MomentSpec
from .weingarten import GroupKind

BLOCK_SIZE = 1 << 14
MIN_SAMPLES = 1000
UNITARY_TOL = 1e-12
SYMPLECTIC_TOL = 1e-10
_MASK64 = (1 << 64) - 1
_RETRY_SALT = 0x9E3779B97F4A7C15


@dataclass(frozen=True)
class SampleEstimate:
    mean: complex
    stderr: float
    samples: int
    seed: int


def block_generator(seed: int, block: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(key=[seed & _MASK64, block & _MASK64]))


def box_muller(rng: np.random.Generator, shape: tuple[int, ...]) -> np.ndarray:
    """Standard normals from pairs of uniforms; ``shape[-1]`` must be even."""
    u = rng.random(shape)
    u1 = 1.0 - u[..., 0::2]  # (0, 1], keeps log finite
    u2 = u[..., 1::2]
    r = np.sqrt(-2.0 * np.log(u1))
    out = np.empty(shape)
    out[..., 0::2] = r * np.cos(2.0 * np.pi * u2)
    out[..., 1::2] = r * np.sin(2.0 * np.pi * u2)
    return out


def _complex_gaussian(rng: np.random.Generator, size: int, rows: int, cols: int) -> np.ndarray:
    g = box_muller(rng, (size, 2 * rows * cols))
    z = (g[:, 0::2] + 1j * g[:, 1::2]) / np.sqrt(2.0)
    return z.reshape(size, rows, cols)


def _squeeze(batch: np.ndarray, size: int | None) -> np.ndarray:
    return batch[0] if size is None else batch


def sample_unitary(N: int, rng: np.random.Generator, size: int | None = None) -> np.ndarray:
    """Haar U(N): QR of a complex Ginibre matrix with R's diagonal made positive."""
    m = 1 if size is None else size
    z = _complex_gaussian(rng, m, N, N)
    q, r = np.linalg.qr(z)
    d = np.diagonal(r, axis1=1, axis2=2)
    q = q * (d / np.abs(d))[:, None, :]
    return _squeeze(q, size)


def sample_orthogonal(N: int, rng: np.random.Generator, size: int | None = None) -> np.ndarray:
    """Haar O(N): QR of a real Gaussian matrix with the R-diagonal sign fix."""
    m = 1 if size is None else size
    g = box_muller(rng, (m, N * N + (N * N) % 2))[:, : N * N].reshape(m, N, N)
    q, r = np.linalg.qr(g)
    d = np.sign(np.diagonal(r, axis1=1, axis2=2))
    d[d == 0] = 1.0
    return _squeeze(q * d[:, None, :], size)


def symplectic_form(N: int) -> np.ndarray:
    J = np.zeros((2 * N, 2 * N))
    J[:N, N:] = np.eye(N)
    J[N:, :N] = -np.eye(N)
    return J


def _quaternionic_gram_schmidt(z: np.ndarray, N: int) -> np.ndarray:
    m = z.shape[0]
    q = np.zeros((m, 2 * N, 2 * N), dtype=complex)
    for j in range(N):
        v = z[:, :, j].copy()
        if j:
            idx = list(range(j)) + list(range(N, N + j))
            basis = q[:, :, idx]
            for _ in range(2):  # second pass restores orthogonality lost to rounding
                coeff = np.einsum("bik,bi->bk", basis.conj(), v)
                v -= np.einsum("bik,bk->bi", basis, coeff)
        v /= np.linalg.norm(v, axis=1)[:, None]
        q[:, :, j] = v
        # partner column J^T conj(v) keeps the [[A, B], [-conj(B), conj(A)]] shape
        q[:, :N, j + N] = -v[:, N:].conj()
        q[:, N:, j + N] = v[:, :N].conj()
    return q


def _sample_symplectic_batch(N: int, rng: np.random.Generator, m: int) -> np.ndarray:
    a = _complex_gaussian(rng, m, N, N)
    b = _complex_gaussian(rng, m, N, N)
    z = np.empty((m, 2 * N, 2 * N), dtype=complex)
    z[:, :N, :N] = a
    z[:, :N, N:] = b
    z[:, N:, :N] = -b.conj()
    z[:, N:, N:] = a.conj()
    return _quaternionic_gram_schmidt(z, N)


def unitarity_residual(batch: np.ndarray) -> np.ndarray:
    eye = np.eye(batch.shape[-1])
    gram = np.einsum("bki,bkj->bij", batch.conj(), batch)
    return np.abs(gram - eye).max(axis=(1, 2))


def symplectic_residual(batch: np.ndarray) -> np.ndarray:
    """max |S^T J S - J| per sample; zero iff J S^T J^T S = 1 for unitary S."""
    J = symplectic_form(batch.shape[-1] // 2)
    form = np.einsum("bki,kl,blj->bij", batch, J, batch)
    return np.abs(form - J).max(axis=(1, 2))


def sample_symplectic(N: int, rng: np.random.Generator, size: int | None = None) -> np.ndarray:
    """Haar Sp(2N): quaternionic Gaussian matrix orthonormalized column pair by column pair."""
    m = 1 if size is None else size
    s = _sample_symplectic_batch(N, rng, m)
    if (unitarity_residual(s).max() >= SYMPLECTIC_TOL
            or symplectic_residual(s).max() >= SYMPLECTIC_TOL):
        s = _sample_symplectic_batch(N, rng, m)
        if (unitarity_residual(s).max() >= SYMPLECTIC_TOL
                or symplectic_residual(s).max() >= SYMPLECTIC_TOL):
            raise SamplerError("symplectic sample exceeded structural tolerance twice")
    return _squeeze(s, size)


def _draw(group: GroupKind, N: int, seed: int, block: int, m: int) -> np.ndarray:
    if group is GroupKind.UNITARY:
        batch = sample_unitary(N, block_generator(seed, block), m)
        if unitarity_residual(batch).max() >= UNITARY_TOL:
            raise SamplerError("unitary sample exceeded residual tolerance")
        return batch
    if group is GroupKind.ORTHOGONAL:
        batch = sample_orthogonal(N, block_generator(seed, block), m)
        if unitarity_residual(batch).max() >= UNITARY_TOL:
            raise SamplerError("orthogonal sample exceeded residual tolerance")
        return batch
    return sample_symplectic(N, block_generator(seed, block), m)


def entry_product(spec: MomentSpec, batch: np.ndarray) -> np.ndarray:
    values = np.ones(batch.shape[0], dtype=complex)
    for i, j in zip(spec.a, spec.b):
        values = values * batch[:, i - 1, j - 1]
    for i, j in zip(spec.d, spec.c):
        values = values * batch[:, i - 1, j - 1].conj()
    return values


def _block_stats(specs, group, N, seed, block, m):
    batch = _draw(group, N, seed, block, m)
    stats = []
    for spec in specs:
        x = entry_product(spec, batch)
        mean = x.mean()
        stats.append((m, mean, float(np.sum(np.abs(x - mean) ** 2))))
    return stats


def estimate_moments(
    specs: Sequence[MomentSpec],
    samples: int,
    seed: int,
    workers: int = 1,
    block_size: int = BLOCK_SIZE,
) -> list[SampleEstimate]:
    """Estimate several moments of one group from a shared sample stream.

    Each returned estimate equals what ``estimate_moment`` gives for that
    spec alone with the same ``samples`` and ``seed``.  ``block_size`` is part
    of the stream layout; ``workers`` is not.
    """
    if not specs:
        return []
    group, N = specs[0].group, specs[0].N
    if any(s.group is not group or s.N != N for s in specs):
        raise InvalidArgumentError("all specs must share group and N")
    if samples < MIN_SAMPLES:
        raise InvalidArgumentError(f"need at least {MIN_SAMPLES} samples, got {samples}")
    sizes = [min(block_size, samples - start) for start in range(0, samples, block_size)]

    def run(b: int):
        return _block_stats(specs, group, N, seed, b, sizes[b])

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            per_block = list(pool.map(run, range(len(sizes))))
    else:
        per_block = [run(b) for b in range(len(sizes))]

    out = []
    for k in range(len(specs)):
        count, mean, m2 = 0, 0j, 0.0
        for block_stats in per_block:  # fixed block order
            nb, mb, m2b = block_stats[k]
            total = count + nb
            delta = mb - mean
            mean = mean + delta * nb / total
            m2 = m2 + m2b + abs(delta) ** 2 * count * nb / total
            count = total
        stderr = float(np.sqrt(m2 / (count - 1) / count))
        if not (np.isfinite(mean.real) and np.isfinite(mean.imag) and np.isfinite(stderr)):
            raise NumericalFailureError("non-finite value in Monte-Carlo accumulation")
        out.append(SampleEstimate(complex(mean), stderr, count, seed))
    return out


def estimate_moment(spec: MomentSpec, samples: int, seed: int, workers: int = 1) -> SampleEstimate:
    return estimate_moments([spec], samples, seed, workers)[0]
