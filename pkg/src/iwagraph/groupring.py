"""Exact arithmetic in the integral group ring of an infinite cyclic group.

Elements are finite integer combinations of powers ``g^a`` of a fixed
generator.  Identifying ``g`` with ``1 + T`` embeds the ring into integer
polynomials in ``T``, and the lambda/mu invariants of an element are read
off from the p-adic valuations of those polynomial coefficients.  All
integers are arbitrary precision.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass

from .errors import InvalidParameter, ZeroElement

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test (exact for n < 3.3e24)."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def require_prime(p: int) -> None:
    if not is_prime(p):
        raise InvalidParameter(f"{p} is not a prime number")


def ord_p(n: int, p: int) -> int:
    """p-adic valuation of a nonzero integer."""
    if n == 0:
        raise ZeroElement("ord_p(0) is undefined")
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


class GroupRingElement:
    """Finitely supported integer combination of powers of the generator.

    ``terms`` maps exponent -> nonzero coefficient; the canonical form never
    stores a zero coefficient, so equality is structural.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            for a, c in dict(terms).items():
                if c != 0:
                    t[int(a)] = int(c)
        object.__setattr__(self, "terms", t)

    def __setattr__(self, name, value):
        raise AttributeError("GroupRingElement is immutable")

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "GroupRingElement":
        return GroupRingElement()

    @staticmethod
    def one() -> "GroupRingElement":
        return GroupRingElement({0: 1})

    @staticmethod
    def constant(c: int) -> "GroupRingElement":
        return GroupRingElement({0: c})

    @staticmethod
    def gamma(a: int = 1) -> "GroupRingElement":
        """The group element g^a."""
        return GroupRingElement({a: 1})

    # -- ring operations ----------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        t = dict(self.terms)
        for a, c in other.terms.items():
            t[a] = t.get(a, 0) + c
        return GroupRingElement(t)

    __radd__ = __add__

    def __neg__(self):
        return GroupRingElement({a: -c for a, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            return GroupRingElement({a: c * other for a, c in self.terms.items()})
        other = _coerce(other)
        t = {}
        for a, c in self.terms.items():
            for b, d in other.terms.items():
                t[a + b] = t.get(a + b, 0) + c * d
        return GroupRingElement(t)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise InvalidParameter("negative powers of ring elements are not defined")
        result = GroupRingElement.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, int):
            other = GroupRingElement.constant(other)
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"GroupRingElement({render_element(self)!r})"

    def min_exponent(self) -> int:
        if not self.terms:
            raise ZeroElement("zero element has no exponents")
        return min(self.terms)

    def max_exponent(self) -> int:
        if not self.terms:
            raise ZeroElement("zero element has no exponents")
        return max(self.terms)


def _coerce(x) -> GroupRingElement:
    if isinstance(x, GroupRingElement):
        return x
    if isinstance(x, int):
        return GroupRingElement.constant(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to GroupRingElement")


@dataclass(frozen=True)
class IntPolynomial:
    """Exact integer polynomial in one variable.

    ``coefficients[k]`` is the coefficient of X^k; the trailing coefficient
    is nonzero unless the polynomial is zero.  ``var`` is display metadata.
    """

    coefficients: tuple
    var: str = "T"

    @staticmethod
    def make(coeffs, var: str = "T") -> "IntPolynomial":
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        return IntPolynomial(tuple(cs), var)

    @staticmethod
    def zero(var: str = "T") -> "IntPolynomial":
        return IntPolynomial((), var)

    @staticmethod
    def monomial(c: int, k: int, var: str = "T") -> "IntPolynomial":
        if c == 0:
            return IntPolynomial.zero(var)
        return IntPolynomial((0,) * k + (int(c),), var)

    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def degree(self) -> int:
        """Degree, with the convention that the zero polynomial has degree -1."""
        return len(self.coefficients) - 1

    def __getitem__(self, k: int) -> int:
        if 0 <= k < len(self.coefficients):
            return self.coefficients[k]
        return 0

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.coefficients), len(other.coefficients))
        return IntPolynomial.make(
            [self[k] + other[k] for k in range(n)], self.var or other.var
        )

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(tuple(-c for c in self.coefficients), self.var)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial.make(
                [c * other for c in self.coefficients], self.var
            )
        other = self._coerce(other)
        if self.is_zero() or other.is_zero():
            return IntPolynomial.zero(self.var)
        out = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return IntPolynomial(tuple(out), self.var)

    __rmul__ = __mul__

    def shift(self, k: int) -> "IntPolynomial":
        """Multiply by X^k."""
        if self.is_zero():
            return self
        return IntPolynomial((0,) * k + self.coefficients, self.var)

    def exact_div(self, other: "IntPolynomial") -> "IntPolynomial":
        """Exact polynomial division over the integers; raises if inexact."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero():
            return IntPolynomial.zero(self.var)
        rem = list(self.coefficients)
        div = other.coefficients
        dq = len(rem) - len(div)
        if dq < 0:
            raise ArithmeticError("inexact polynomial division")
        quot = [0] * (dq + 1)
        lead = div[-1]
        for k in range(dq, -1, -1):
            c = rem[k + len(div) - 1]
            if c % lead != 0:
                raise ArithmeticError("inexact polynomial division")
            q = c // lead
            quot[k] = q
            if q:
                for j, d in enumerate(div):
                    rem[k + j] -= q * d
        if any(rem):
            raise ArithmeticError("inexact polynomial division")
        return IntPolynomial.make(quot, self.var)

    def evaluate(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def content_ord(self, l: int) -> int:
        """Largest e with l^e dividing every coefficient (nonzero input)."""
        if self.is_zero():
            raise ZeroElement("content of the zero polynomial is undefined")
        return min(ord_p(c, l) for c in self.coefficients if c != 0)

    def with_var(self, var: str) -> "IntPolynomial":
        return IntPolynomial(self.coefficients, var)

    def _coerce(self, x) -> "IntPolynomial":
        if isinstance(x, IntPolynomial):
            return x
        if isinstance(x, int):
            return IntPolynomial.make([x], self.var)
        raise TypeError(f"cannot coerce {type(x).__name__} to IntPolynomial")

    def __repr__(self):
        return f"IntPolynomial({render_poly(self)!r})"


@dataclass(frozen=True)
class IwasawaInvariants:
    """Growth invariants of a tree-number sequence.

    lambda_ and mu describe the p-part; mu_l maps primes l != p to the
    growth rate of their valuations; nu is the constant term when known.
    """

    lambda_: int
    mu: int
    nu: int | None = None
    mu_l: dict = None

    def __post_init__(self):
        if self.lambda_ < 0 or self.mu < 0:
            raise InvalidParameter("lambda and mu must be nonnegative")
        object.__setattr__(self, "mu_l", dict(self.mu_l or {}))

    def __eq__(self, other):
        if not isinstance(other, IwasawaInvariants):
            return NotImplemented
        return (
            self.lambda_ == other.lambda_
            and self.mu == other.mu
            and self.nu == other.nu
            and self.mu_l == other.mu_l
        )


# -- operations --------------------------------------------------------


def iota(x: GroupRingElement) -> GroupRingElement:
    """The involution inverting every group element: g^a -> g^-a."""
    return GroupRingElement({-a: c for a, c in x.terms.items()})


def augmentation(x: GroupRingElement) -> int:
    """Sum of all coefficients; a ring homomorphism to the integers."""
    return sum(x.terms.values())


def to_T_polynomial(x: GroupRingElement) -> tuple[IntPolynomial, int]:
    """Write x = P(g - 1) * g^m with m the minimal occurring exponent.

    Returns ``(P, m)``.  The unit factor g^m does not change any of the
    invariants extracted downstream.
    """
    if x.is_zero():
        raise ZeroElement("cannot convert the zero element")
    m = x.min_exponent()
    out = [0] * (x.max_exponent() - m + 1)
    for a, c in x.terms.items():
        k = a - m
        # (1 + T)^k expanded exactly
        for j in range(k + 1):
            out[j] += c * math.comb(k, j)
    return IntPolynomial.make(out, "T"), m


def lambda_mu_of_coefficients(coeffs, p: int) -> tuple[int, int]:
    """(lambda, mu) of a nonzero integer coefficient sequence.

    mu is the minimal p-adic valuation; lambda the least index attaining it.
    """
    mu = None
    lam = None
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        v = ord_p(c, p)
        if mu is None or v < mu:
            mu, lam = v, k
    if mu is None:
        raise ZeroElement("invariants of zero are undefined")
    return lam, mu


def iwasawa_invariants(x: GroupRingElement, p: int) -> tuple[int, int]:
    """(lambda, mu) of a nonzero element, via its T-polynomial."""
    require_prime(p)
    poly, _ = to_T_polynomial(x)
    return lambda_mu_of_coefficients(poly.coefficients, p)


def mu_l(x: GroupRingElement, l: int) -> int:
    """Largest e such that every coefficient of x is divisible by l^e."""
    require_prime(l)
    if x.is_zero():
        raise ZeroElement("mu_l of zero is undefined")
    return min(ord_p(c, l) for c in x.terms.values())


# -- text grammar ------------------------------------------------------
#
# Elements render as terms sorted by exponent, e.g. ``-1*g^-1 + 2 - 1*g^1``.
# Polynomials use the same shape with their own variable symbol.

_TOKEN_RE = re.compile(
    r"\s*(?P<sign>[+-])?\s*"
    r"(?:(?P<coeff>\d+)\s*(?:\*\s*(?P<sym1>[A-Za-z]+)(?:\^(?P<exp1>-?\d+))?)?"
    r"|(?P<sym2>[A-Za-z]+)(?:\^(?P<exp2>-?\d+))?)"
)


def _render_terms(pairs, symbol: str) -> str:
    # pairs: nonempty list of (exponent, coefficient), sorted
    parts = []
    for i, (a, c) in enumerate(pairs):
        body = str(abs(c)) if a == 0 else f"{abs(c)}*{symbol}^{a}"
        if i == 0:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


def render_element(x: GroupRingElement, symbol: str = "g") -> str:
    if x.is_zero():
        return "0"
    return _render_terms(sorted(x.terms.items()), symbol)


def render_poly(poly: IntPolynomial) -> str:
    if poly.is_zero():
        return "0"
    pairs = [(k, c) for k, c in enumerate(poly.coefficients) if c != 0]
    return _render_terms(pairs, poly.var)


def _parse_terms(text: str, symbol: str) -> dict:
    s = text.strip()
    if not s:
        raise InvalidParameter("empty expression")
    terms: dict[int, int] = {}
    pos = 0
    first = True
    while pos < len(s):
        m = _TOKEN_RE.match(s, pos)
        if not m or m.end() == pos:
            raise InvalidParameter(f"cannot parse expression at {s[pos:]!r}")
        sign = m.group("sign")
        if sign is None and not first:
            raise InvalidParameter(f"missing +/- before {s[pos:]!r}")
        if m.group("sym2") is not None:
            sym = m.group("sym2")
            coeff = 1
            exp = int(m.group("exp2") or 1)
        elif m.group("sym1") is not None:
            sym = m.group("sym1")
            coeff = int(m.group("coeff"))
            exp = int(m.group("exp1") or 1)
        else:
            sym = None
            coeff = int(m.group("coeff"))
            exp = 0
        if sym is not None and sym != symbol:
            raise InvalidParameter(f"unexpected symbol {sym!r}; expected {symbol!r}")
        if sign == "-":
            coeff = -coeff
        terms[exp] = terms.get(exp, 0) + coeff
        pos = m.end()
        first = False
    return terms


def parse_element(text: str, symbol: str = "g") -> GroupRingElement:
    """Parse the element grammar produced by :func:`render_element`."""
    return GroupRingElement(_parse_terms(text, symbol))


def parse_poly(text: str, var: str = "S") -> IntPolynomial:
    """Parse the polynomial grammar produced by :func:`render_poly`."""
    terms = _parse_terms(text, var)
    if any(k < 0 for k in terms):
        raise InvalidParameter("negative exponents are not allowed in polynomials")
    n = max(terms, default=0) + 1
    out = [0] * n
    for k, c in terms.items():
        out[k] = c
    return IntPolynomial.make(out, var)
