"""
Exact Haar averages of products of matrix entries.

Unitary:    <prod_k U_{a_k b_k} conj(U_{d_k c_k})>
              = sum_{sigma,tau in S_n} Wg^U(tau^-1 sigma) delta_sigma[a,d] delta_tau[b,c]
Orthogonal: <prod_k O_{a_k b_k}>
              = sum_{tau,sigma in M_n} Wg^O(tau^-1 sigma) Delta_tau[a] Delta_sigma[b]
Symplectic: same shape over M_n with Wg^Sp and the skew deltas Delta'.

Only permutations with a nonzero delta factor are enumerated; every
remaining (tau, sigma) pair is summed.
"""

import json
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterator, Mapping, Sequence

from .combinatorics import Permutation, compose, cycle_type, inverse, sign
from .errors import InvalidArgumentError
from .hyperoctahedral import coset_type, delta_pairing, delta_pairing_symplectic, matchings
from .weingarten import (
    GroupKind,
    wg_orthogonal,
    wg_symplectic_normalized,
    wg_unitary,
)


@dataclass(frozen=True)
class MomentSpec:
    """Index data of one entry-product integrand.

    For the unitary group the integrand is prod_k U[a_k, b_k] * conj(U[d_k, c_k]);
    for O(N) and Sp(2N) it is prod_k M[a_k, b_k].  N is the half-dimension
    for Sp(2N).  All indices are one-based.
    """

    group: GroupKind
    N: int
    a: tuple[int, ...]
    b: tuple[int, ...]
    c: tuple[int, ...] = field(default=())
    d: tuple[int, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "group", GroupKind.parse(self.group))
        for name in ("a", "b", "c", "d"):
            object.__setattr__(self, name, tuple(int(x) for x in getattr(self, name)))
        self.validate()

    @property
    def dimension(self) -> int:
        return 2 * self.N if self.group is GroupKind.SYMPLECTIC else self.N

    def validate(self) -> None:
        if not isinstance(self.N, int) or isinstance(self.N, bool) or self.N < 1:
            raise InvalidArgumentError(f"N must be a positive integer, got {self.N!r}")
        if len(self.a) != len(self.b):
            raise InvalidArgumentError("a and b must have equal length")
        if self.group is GroupKind.UNITARY:
            if len(self.c) != len(self.d):
                raise InvalidArgumentError("c and d must have equal length")
        elif self.c or self.d:
            raise InvalidArgumentError("c/d are only meaningful for the unitary group")
        bound = self.dimension
        for name in ("a", "b", "c", "d"):
            for x in getattr(self, name):
                if not 1 <= x <= bound:
                    raise InvalidArgumentError(f"index {name}={x} outside 1..{bound}")

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "MomentSpec":
        if not isinstance(data, Mapping):
            raise InvalidArgumentError("spec must be a JSON object")
        try:
            group = GroupKind.parse(data["group"])
            N = data["N"]
            a, b = data["a"], data["b"]
        except KeyError as exc:
            raise InvalidArgumentError(f"spec is missing field {exc.args[0]!r}") from None
        if not isinstance(N, int) or isinstance(N, bool):
            raise InvalidArgumentError(f"N must be an integer, got {N!r}")
        extra = set(data) - {"group", "N", "a", "b", "c", "d"}
        if extra:
            raise InvalidArgumentError(f"unknown spec fields: {sorted(extra)}")
        lists = {"a": a, "b": b, "c": data.get("c", []), "d": data.get("d", [])}
        if group is GroupKind.UNITARY and ("c" not in data or "d" not in data):
            raise InvalidArgumentError("unitary spec needs a, b, c and d")
        for name, value in lists.items():
            if not isinstance(value, list) or not all(
                isinstance(x, int) and not isinstance(x, bool) for x in value
            ):
                raise InvalidArgumentError(f"field {name!r} must be a list of integers")
        return cls(group, N, **lists)

    @classmethod
    def from_json(cls, text: str) -> "MomentSpec":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InvalidArgumentError(f"spec is not valid JSON: {exc}") from None
        return cls.from_dict(data)

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"group": self.group.value, "N": self.N, "a": list(self.a), "b": list(self.b)}
        if self.group is GroupKind.UNITARY:
            out["c"] = list(self.c)
            out["d"] = list(self.d)
        return out


def _index_matchings(left: Sequence[int], right: Sequence[int]) -> Iterator[Permutation]:
    """All perm with left[k] == right[perm(k)] for every k."""
    n = len(left)
    images = [0] * n
    used = [False] * n

    def extend(k: int) -> Iterator[Permutation]:
        if k == n:
            yield tuple(images)
            return
        for m in range(n):
            if not used[m] and right[m] == left[k]:
                used[m] = True
                images[k] = m + 1
                yield from extend(k + 1)
                used[m] = False

    return extend(0)


def integrate_unitary(spec: MomentSpec) -> Fraction:
    if spec.group is not GroupKind.UNITARY:
        raise InvalidArgumentError("integrate_unitary needs a unitary spec")
    if len(spec.a) != len(spec.d):
        return Fraction(0)
    if not spec.a:
        return Fraction(1)
    sigmas = list(_index_matchings(spec.a, spec.d))
    taus = [inverse(t) for t in _index_matchings(spec.b, spec.c)]
    classes = Counter(cycle_type(compose(t_inv, s)) for t_inv in taus for s in sigmas)
    return sum((count * wg_unitary(mu, spec.N) for mu, count in classes.items()), Fraction(0))


def _paired_sum(spec: MomentSpec, weight, skew: bool) -> Fraction:
    if len(spec.a) % 2:
        return Fraction(0)
    if not spec.a:
        return Fraction(1)
    n = len(spec.a) // 2
    if skew:
        left = [(m, delta_pairing_symplectic(m, spec.a, spec.N)) for m in matchings(n)]
        right = [(m, delta_pairing_symplectic(m, spec.b, spec.N)) for m in matchings(n)]
    else:
        left = [(m, delta_pairing(m, spec.a)) for m in matchings(n)]
        right = [(m, delta_pairing(m, spec.b)) for m in matchings(n)]
    left = [(inverse(m), v) for m, v in left if v]
    right = [(m, v) for m, v in right if v]
    classes: Counter = Counter()
    for t_inv, dv in left:
        for s, ev in right:
            rho = compose(t_inv, s)
            coeff = dv * ev
            if skew:
                coeff *= sign(rho)
            classes[coset_type(rho)] += coeff
    return sum((count * weight(mu, spec.N) for mu, count in classes.items()), Fraction(0))


def integrate_orthogonal(spec: MomentSpec) -> Fraction:
    if spec.group is not GroupKind.ORTHOGONAL:
        raise InvalidArgumentError("integrate_orthogonal needs an orthogonal spec")
    return _paired_sum(spec, wg_orthogonal, skew=False)


def integrate_symplectic(spec: MomentSpec) -> Fraction:
    if spec.group is not GroupKind.SYMPLECTIC:
        raise InvalidArgumentError("integrate_symplectic needs a symplectic spec")
    # Wg^Sp(rho) = s(rho) * (sign-normalized value of its coset type)
    return _paired_sum(spec, wg_symplectic_normalized, skew=True)


def integrate(spec: MomentSpec) -> Fraction:
    if spec.group is GroupKind.UNITARY:
        return integrate_unitary(spec)
    if spec.group is GroupKind.ORTHOGONAL:
        return integrate_orthogonal(spec)
    return integrate_symplectic(spec)
