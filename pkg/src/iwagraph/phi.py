"""The change of variable S = T + iota(T) for symmetric group-ring elements.

Any augmentation-zero element h gives a symmetric element h + iota(h), which
is a polynomial in S with the same integer coefficients up to a triangular,
unit-diagonal change of basis.  This module builds the two basis families by
their integer recurrences, applies the transform in both directions, extracts
invariants on the S side, and runs the random-sampling frequency experiment.
"""
from __future__ import annotations

import random
import threading

from .errors import InvalidParameter, NotAugmentationZero, ZeroElement
from .groupring import (
    GroupRingElement,
    IntPolynomial,
    augmentation,
    lambda_mu_of_coefficients,
    require_prime,
)

_S = IntPolynomial.monomial(1, 1, "S")


class PhiBasisCache:
    """Lazily grown tables of the transform on the two monomial bases.

    ``basis_T[k]`` is the image of T^k; ``basis_cyc[k]`` the image of
    (1+T)^k - 1.  Growth is guarded by a lock so concurrent readers only
    ever observe fully built entries.
    """

    def __init__(self):
        self.basis_T = [IntPolynomial.make([2], "S"), _S]
        self.basis_cyc = [IntPolynomial.zero("S"), _S]
        self._lock = threading.Lock()

    def grow(self, k: int) -> None:
        with self._lock:
            while len(self.basis_T) <= k:
                g1, g2 = self.basis_T[-1], self.basis_T[-2]
                self.basis_T.append((_S * (g1 + g2)).with_var("S"))
            while len(self.basis_cyc) <= k:
                g1, g2 = self.basis_cyc[-1], self.basis_cyc[-2]
                self.basis_cyc.append(((_S + 2) * g1 - g2 + 2 * _S).with_var("S"))


_CACHE = PhiBasisCache()


def phi_basis_T(k: int) -> IntPolynomial:
    """Image of T^k: 2, S, then S * (previous + one before)."""
    if k < 0:
        raise InvalidParameter("basis index must be nonnegative")
    _CACHE.grow(k)
    return _CACHE.basis_T[k]


def phi_basis_cyc(k: int) -> IntPolynomial:
    """Image of (1+T)^k - 1: 0, S, then (S+2)*prev - prevprev + 2S."""
    if k < 0:
        raise InvalidParameter("basis index must be nonnegative")
    _CACHE.grow(k)
    return _CACHE.basis_cyc[k]


def phi_forward(h: GroupRingElement) -> IntPolynomial:
    """The S-polynomial g with g(T + iota(T)) = h + iota(h).

    Requires augmentation zero.  Exponent signs are normalized to k >= 1,
    which is harmless because h + iota(h) is unchanged under inversion.
    """
    if augmentation(h) != 0:
        raise NotAugmentationZero("phi_forward needs an augmentation-zero input")
    acc = IntPolynomial.zero("S")
    for a, c in h.terms.items():
        if a != 0:
            acc = acc + c * phi_basis_cyc(abs(a))
    return acc


def phi_inverse(g: IntPolynomial) -> GroupRingElement:
    """The unique integer combination of (g^k - 1), k >= 1, mapping to g.

    The basis matrix is upper triangular with unit diagonal, so plain
    back-substitution is exact over the integers.
    """
    if g[0] != 0:
        raise NotAugmentationZero("phi_inverse needs a zero constant term")
    work = list(g.coefficients)
    h = GroupRingElement.zero()
    for k in range(len(work) - 1, 0, -1):
        c = work[k]
        if c == 0:
            continue
        basis = phi_basis_cyc(k)
        for j in range(len(basis.coefficients)):
            work[j] -= c * basis[j]
        h = h + c * (GroupRingElement.gamma(k) - 1)
    if any(work):
        raise AssertionError("back-substitution left a nonzero remainder")
    return h


def invariants_via_phi(g: IntPolynomial, p: int) -> tuple[int, int]:
    """(lambda_S, mu_S) of a nonzero S-polynomial.

    For any augmentation-zero h, the symmetric element h + iota(h) has
    lambda = 2 * lambda_S and mu = mu_S of the forward transform of h.
    """
    require_prime(p)
    if g.is_zero():
        raise ZeroElement("invariants of the zero polynomial are undefined")
    return lambda_mu_of_coefficients(g.coefficients, p)


def sample_lambda_distribution(
    p: int,
    lambda_prime_max: int,
    trials: int,
    degree: int,
    precision: int,
    seed: int = 0,
) -> dict:
    """Empirical frequency of each lambda' bucket over random inputs.

    Draws the coefficients of T^1 .. T^degree uniformly in [0, p^precision),
    reduces the transform mod p, and buckets by the least index with a unit
    coefficient.  Returns a map with integer keys 1..lambda_prime_max plus
    ``"overflow"`` (lambda' beyond the cap) and ``"mu_positive"`` (the whole
    reduction vanished mod p).  Deterministic for a fixed seed.
    """
    require_prime(p)
    if trials < 1:
        raise InvalidParameter("trials must be >= 1")
    if degree < lambda_prime_max:
        raise InvalidParameter("degree cutoff must be >= lambda_prime_max")
    if precision < 2:
        raise InvalidParameter("precision exponent must be >= 2")
    if lambda_prime_max < 1:
        raise InvalidParameter("lambda_prime_max must be >= 1")

    rows = []
    for k in range(1, degree + 1):
        basis = phi_basis_T(k)
        rows.append([basis[j] % p for j in range(degree + 1)])

    rng = random.Random(seed)
    bound = p**precision
    counts = {lam: 0 for lam in range(1, lambda_prime_max + 1)}
    counts["overflow"] = 0
    counts["mu_positive"] = 0
    for _ in range(trials):
        cs = [rng.randrange(bound) % p for _ in range(degree)]
        lam = None
        for j in range(1, degree + 1):
            v = sum(c * row[j] for c, row in zip(cs, rows)) % p
            if v:
                lam = j
                break
        if lam is None:
            counts["mu_positive"] += 1
        elif lam <= lambda_prime_max:
            counts[lam] += 1
        else:
            counts["overflow"] += 1
    return {key: n / trials for key, n in counts.items()}
