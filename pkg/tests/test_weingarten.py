import random
from fractions import Fraction
from itertools import permutations

import pytest

from oracles import orthogonal_gram_inverse, symplectic_gram_inverse, unitary_gram_inverse
from wgcalc.combinatorics import compose, identity, inverse, partitions_of, sign
from wgcalc.errors import InvalidArgumentError, UnsupportedScaleError
from wgcalc.hyperoctahedral import coset_type, hyperoctahedral_group, matchings
from wgcalc.weingarten import (
    GroupKind,
    wg_orthogonal,
    wg_orthogonal_perm,
    wg_symplectic,
    wg_symplectic_normalized,
    wg_table,
    wg_unitary,
    wg_unitary_perm,
)

F = Fraction


@pytest.mark.parametrize("N", [1, 2, 3, 5])
def test_first_order_values(N):
    assert wg_unitary((1,), N) == F(1, N)
    assert wg_orthogonal((1,), N) == F(1, N)
    assert wg_symplectic((1, 2), N) == F(1, 2 * N)
    assert wg_symplectic((2, 1), N) == F(-1, 2 * N)


@pytest.mark.parametrize("N", [2, 3, 4, 7])
def test_unitary_order_two(N):
    assert wg_unitary((1, 1), N) == F(1, N * N - 1)
    assert wg_unitary((2,), N) == F(-1, N * (N * N - 1))


def test_unitary_order_two_at_three():
    assert wg_unitary((1, 1), 3) == F(1, 8)
    assert wg_unitary((2,), 3) == F(-1, 24)


@pytest.mark.parametrize("N", [2, 3, 4, 5])
def test_orthogonal_order_two(N):
    assert wg_orthogonal((1, 1), N) == F(N + 1, N * (N - 1) * (N + 2))
    assert wg_orthogonal((2,), N) == F(-1, N * (N - 1) * (N + 2))


def test_orthogonal_restricted_sum_at_one():
    assert wg_orthogonal((1, 1), 1) == F(1, 9)
    assert wg_orthogonal((2,), 1) == F(1, 9)
    # <O_11^4> on O(1): 3 diagonal (tau = sigma) pairs and 6 off-diagonal pairs
    assert 3 * wg_orthogonal((1, 1), 1) + 6 * wg_orthogonal((2,), 1) == 1


@pytest.mark.parametrize("N", [2, 3, 4])
def test_symplectic_identity_order_two(N):
    assert wg_symplectic(identity(4), N) == F(2 * N - 1, 4 * N * (2 * N + 1) * (N - 1))
    assert wg_symplectic(identity(4), 2) == F(3, 40)


@pytest.mark.parametrize("n, N", [(1, 1), (2, 2), (2, 5), (3, 3), (3, 4), (4, 4)])
def test_unitary_matches_gram_inverse(n, N):
    oracle = unitary_gram_inverse(n, N)
    for (s, t), value in oracle.items():
        assert wg_unitary_perm(compose(inverse(s), t), N) == value


@pytest.mark.parametrize("n, N", [(1, 1), (2, 2), (2, 3), (3, 3), (3, 5)])
def test_orthogonal_matches_gram_inverse(n, N):
    for (t, s), value in orthogonal_gram_inverse(n, N).items():
        assert wg_orthogonal_perm(compose(inverse(t), s), N) == value


@pytest.mark.parametrize("n, N", [(1, 1), (2, 2), (2, 3), (3, 3)])
def test_symplectic_matches_gram_inverse(n, N):
    for (t, s), value in symplectic_gram_inverse(n, N).items():
        assert wg_symplectic(compose(inverse(t), s), N) == value


@pytest.mark.parametrize("n", range(1, 6))
def test_unitary_class_function(n):
    rng = random.Random(n)
    for _ in range(10):
        sigma = tuple(rng.sample(range(1, n + 1), n))
        pi = tuple(rng.sample(range(1, n + 1), n))
        conj = compose(pi, compose(sigma, inverse(pi)))
        assert wg_unitary_perm(sigma, 3) == wg_unitary_perm(conj, 3)


@pytest.mark.parametrize("n", range(1, 5))
def test_orthogonal_double_coset_function(n):
    rng = random.Random(n)
    group = hyperoctahedral_group(n)
    for _ in range(10):
        tau = tuple(rng.sample(range(1, 2 * n + 1), 2 * n))
        moved = compose(rng.choice(group), compose(tau, rng.choice(group)))
        assert wg_orthogonal_perm(tau, 4) == wg_orthogonal_perm(moved, 4)


@pytest.mark.parametrize("n", range(1, 4))
def test_symplectic_sign_covariance(n):
    rng = random.Random(n)
    group = hyperoctahedral_group(n)
    for _ in range(10):
        tau = tuple(rng.sample(range(1, 2 * n + 1), 2 * n))
        xi = rng.choice(group)
        assert wg_symplectic(compose(tau, xi), 2) == sign(xi) * wg_symplectic(tau, 2)


def test_invalid_dimension():
    with pytest.raises(InvalidArgumentError):
        wg_unitary((1,), 0)
    with pytest.raises(InvalidArgumentError):
        wg_orthogonal((1,), -1)
    with pytest.raises(InvalidArgumentError):
        wg_symplectic((1, 2), 0)


def test_tables():
    assert wg_table("u", 1, 5).as_dict() == {(1,): F(1, 5)}
    assert wg_table("o", 2, 3).as_dict() == {(1, 1): F(2, 15), (2,): F(-1, 30)}
    assert wg_table(GroupKind.UNITARY, 2, 3).as_dict() == {(1, 1): F(1, 8), (2,): F(-1, 24)}
    assert [e.label for e in wg_table("u", 4, 4).entries] == partitions_of(4)


def test_symplectic_table_representatives():
    table = wg_table("sp", 3, 3)
    for entry in table.entries:
        assert coset_type(entry.representative) == entry.label
        assert entry.representative in matchings(3)
        assert entry.representative_value == wg_symplectic(entry.representative, 3)
        assert entry.value == wg_symplectic_normalized(entry.label, 3)


@pytest.mark.parametrize("group, n", [("u", 9), ("o", 7), ("sp", 7), ("u", 0)])
def test_table_scale_limits(group, n):
    with pytest.raises(UnsupportedScaleError):
        wg_table(group, n, 5)


def test_unitary_edge_dimension_moment():
    # <|U_11|^{2n}> on U(1) is 1: n! * sum over S_n of Wg
    from math import factorial

    for n in range(1, 5):
        total = sum(wg_unitary_perm(tuple(p), 1) for p in permutations(range(1, n + 1)))
        assert total * factorial(n) == 1
