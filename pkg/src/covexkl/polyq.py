"""Exact univariate polynomials in q over arbitrary-precision integers.

A polynomial a_0 + a_1 q + ... + a_d q^d is stored as the coefficient
tuple (a_0, a_1, ..., a_d) with the trailing coefficient nonzero; the
empty tuple is the zero polynomial.  Coefficients are plain Python ints,
so nothing ever overflows silently.

The module also provides the Gaussian binomial ``q_binomial(alpha, beta)``
computed by the Pascal-type recurrence, which is exact and division-free.
"""

from __future__ import annotations

import functools
from typing import Iterable, Sequence


def _trim(coeffs: list) -> tuple:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class QPoly:
    """Dense polynomial in q with int coefficients.

    Invariant: ``coeffs`` is a tuple whose last entry is nonzero, or the
    empty tuple for 0.  Instances are immutable and hashable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _trim([int(c) for c in coeffs]))

    def __setattr__(self, name, value):
        raise AttributeError("QPoly is immutable")

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls) -> "QPoly":
        return cls()

    @classmethod
    def one(cls) -> "QPoly":
        return cls((1,))

    @classmethod
    def q(cls) -> "QPoly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, coeff: int, power: int) -> "QPoly":
        """coeff * q**power."""
        if coeff == 0:
            return cls()
        return cls([0] * power + [coeff])

    # -- basic queries ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coeff(self, i: int) -> int:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    @property
    def constant_term(self) -> int:
        return self.coeff(0)

    def __call__(self, x: int) -> int:
        """Evaluate at an integer point (Horner)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "QPoly") -> "QPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly(out)

    def __neg__(self) -> "QPoly":
        return QPoly([-c for c in self.coeffs])

    def __sub__(self, other: "QPoly") -> "QPoly":
        return self + (-other)

    def __mul__(self, other) -> "QPoly":
        if isinstance(other, int):
            return QPoly([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return QPoly(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "QPoly":
        """Multiply by q**k."""
        if not self.coeffs:
            return self
        return QPoly([0] * k + list(self.coeffs))

    # -- comparison / hashing ----------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, QPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == ((other,) if other else ())
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    # -- rendering -----------------------------------------------------------

    def __str__(self) -> str:
        """Canonical text form: descending powers, e.g. ``q^3 + 2*q^2 + 2*q + 1``."""
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            elif i == 1:
                body = "q" if mag == 1 else f"{mag}*q"
            else:
                body = f"q^{i}" if mag == 1 else f"{mag}*q^{i}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"QPoly({list(self.coeffs)!r})"


ZERO = QPoly.zero()
ONE = QPoly.one()


def add(p: QPoly, r: QPoly) -> QPoly:
    return p + r


def mul(p: QPoly, r: QPoly) -> QPoly:
    return p * r


def poly_prod(polys: Sequence[QPoly]) -> QPoly:
    acc = ONE
    for p in polys:
        acc = acc * p
    return acc


@functools.lru_cache(maxsize=None)
def q_binomial(alpha: int, beta: int) -> QPoly:
    """Gaussian binomial [alpha, beta] in q.

    Zero when beta < 0 or alpha < beta (hence also for alpha < 0), and
    [0, 0] = 1.  Computed by the recurrence
    [a, b] = [a-1, b-1] + q^b * [a-1, b].
    """
    if beta < 0 or alpha < beta:
        return ZERO
    if beta == 0 or beta == alpha:
        return ONE
    return q_binomial(alpha - 1, beta - 1) + q_binomial(alpha - 1, beta).shift(beta)
