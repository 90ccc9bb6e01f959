"""Independent reference computations used only by the tests."""

from fractions import Fraction
from itertools import permutations

from wgcalc.combinatorics import compose, cycle_type, inverse, sign
from wgcalc.hyperoctahedral import coset_type, matchings


def invert(matrix):
    size = len(matrix)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(size)] for i, row in enumerate(matrix)]
    for col in range(size):
        pivot = next(r for r in range(col, size) if a[r][col] != 0)
        a[col], a[pivot] = a[pivot], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(size):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[size:] for row in a]


def unitary_gram_inverse(n, N):
    """{(sigma, tau): Wg} from inverting N^{#cycles(sigma^-1 tau)} over S_n (N >= n)."""
    perms = [tuple(p) for p in permutations(range(1, n + 1))]
    gram = [[N ** len(cycle_type(compose(inverse(s), t))) for t in perms] for s in perms]
    w = invert(gram)
    return {(s, t): w[i][j] for i, s in enumerate(perms) for j, t in enumerate(perms)}


def orthogonal_gram_inverse(n, N):
    ms = matchings(n)
    gram = [[N ** len(coset_type(compose(inverse(t), s))) for s in ms] for t in ms]
    w = invert(gram)
    return {(t, s): w[i][j] for i, t in enumerate(ms) for j, s in enumerate(ms)}


def symplectic_gram_inverse(n, N):
    """Gram entries are the Delta' index sums at y = 1."""
    ms = matchings(n)
    gram = [
        [
            (-1) ** n * sign(t) * sign(s) * (-2 * N) ** len(coset_type(compose(inverse(t), s)))
            for s in ms
        ]
        for t in ms
    ]
    w = invert(gram)
    return {(t, s): w[i][j] for i, t in enumerate(ms) for j, s in enumerate(ms)}
