"""Matrices E with ``tr(E^T E^-1) = -2``.

Each such E in GL_m gives a nonsymmetric fiber functor on Rep SL2 sending the
2-dimensional vector representation to C^m, so beta = 2 < m. E is taken with
the block shape ``diag(I_{m-2}, [[0, x], [-1, 0]])``. The scalar x is found by
evaluating the trace symbolically on that shape and solving. The result is
then checked with exact arithmetic in Q(sqrt d).

On this shape the trace is ``m - 2 - (x + 1/x)``, so the condition reads
``x^2 - m x + 1 = 0``. The nearby candidate ``x^2 - (m-1) x + 2 = 0`` does not
satisfy the condition (at m = 3 its roots are ``1 +- i``); ``rejected_quadratic_roots``
returns its roots so the failure can be checked.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt
from typing import Union

import numpy as np
import sympy

from .errors import DomainError, InvariantViolation


def _squarefree_split(n: int) -> tuple[int, int]:
    """``n = k^2 * d`` with d squarefree (sign kept on d). Returns ``(k, d)``."""
    if n == 0:
        return 0, 0
    sign = -1 if n < 0 else 1
    n = abs(n)
    k, f = 1, 2
    while f * f <= n:
        while n % (f * f) == 0:
            n //= f * f
            k *= f
        f += 1
    return k, sign * n


@dataclass(frozen=True)
class QuadraticNumber:
    """``a + b sqrt(d)`` with rational a, b and squarefree integer d (d = 1 means rational)."""

    a: Fraction
    b: Fraction = Fraction(0)
    d: int = 1

    def __post_init__(self):
        if type(self.a) is not Fraction:
            object.__setattr__(self, "a", Fraction(self.a))
        if type(self.b) is not Fraction:
            object.__setattr__(self, "b", Fraction(self.b))
        if self.d == 1 or self.b == 0:
            object.__setattr__(self, "a", self.a + (self.b if self.d == 1 else 0))
            object.__setattr__(self, "b", Fraction(0))
            object.__setattr__(self, "d", 1)

    def _coerce(self, other) -> QuadraticNumber:
        if isinstance(other, QuadraticNumber):
            if other.d != 1 and self.d != 1 and other.d != self.d:
                raise DomainError(f"cannot mix Q(sqrt {self.d}) and Q(sqrt {other.d})")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadraticNumber(Fraction(other))
        return NotImplemented

    def _field(self, other: QuadraticNumber) -> int:
        return self.d if self.d != 1 else other.d

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadraticNumber(self.a + o.a, self.b + o.b, self._field(o))

    __radd__ = __add__

    def __neg__(self):
        return QuadraticNumber(-self.a, -self.b, self.d)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        d = self._field(o)
        return QuadraticNumber(self.a * o.a + self.b * o.b * d, self.a * o.b + self.b * o.a, d)

    __rmul__ = __mul__

    def conjugate(self) -> QuadraticNumber:
        return QuadraticNumber(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.b * self.b * self.d

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt d)")
        c = o.conjugate()
        prod = self * c
        return QuadraticNumber(prod.a / n, prod.b / n, prod.d)

    def __rtruediv__(self, other):
        return QuadraticNumber(Fraction(other)) / self

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return False
        return self.a == o.a and self.b == o.b and (self.b == 0 or self.d == o.d)

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __complex__(self):
        return complex(float(self.a)) + float(self.b) * cmath.sqrt(self.d)

    def __float__(self):
        if self.d < 0 and self.b:
            raise TypeError("not a real number")
        return float(complex(self).real)

    def __repr__(self):
        if not self.b:
            return str(self.a)
        return f"{self.a} + {self.b}*sqrt({self.d})"


Scalar = Union[QuadraticNumber, complex]


@dataclass(frozen=True)
class FiberMatrix:
    """``diag(I_{m-2}, [[0, x], [-1, 0]])``; exact when x is a QuadraticNumber."""

    m: int
    x: Scalar

    @property
    def exact(self) -> bool:
        return isinstance(self.x, QuadraticNumber)

    def rows(self) -> list[list[Scalar]]:
        zero, one = (QuadraticNumber(0), QuadraticNumber(1)) if self.exact else (0j, 1 + 0j)
        e = [[one if i == j else zero for j in range(self.m)] for i in range(self.m)]
        k = self.m - 2
        e[k][k] = zero
        e[k][k + 1] = self.x
        e[k + 1][k] = -one
        e[k + 1][k + 1] = zero
        return e

    def determinant(self) -> Scalar:
        return self.x

    def block_traces(self) -> tuple[Scalar, Scalar]:
        """Contributions of the identity block and of the 2x2 block to ``tr(E^T E^-1)``."""
        prod = _mat_mul(_transpose(self.rows()), _inverse(self.rows()))
        k = self.m - 2
        return sum((prod[i][i] for i in range(k)), _zero_like(self.x)), prod[k][k] + prod[k + 1][k + 1]


def _zero_like(x: Scalar) -> Scalar:
    return QuadraticNumber(0) if isinstance(x, QuadraticNumber) else 0j


def _transpose(a):
    return [list(col) for col in zip(*a)]


def _mat_mul(a, b):
    bt = _transpose(b)
    return [[sum((x * y for x, y in zip(row, col) if x and y), _zero_like(row[0])) for col in bt] for row in a]


def _inverse(a):
    """Gauss-Jordan inverse over any field whose elements support + - * / and truthiness."""
    n = len(a)
    one = a[0][0] * 0 + 1
    zero = a[0][0] * 0
    aug = [list(row) + [one if i == j else zero for j in range(n)] for i, row in enumerate(a)]
    for c in range(n):
        piv = next((r for r in range(c, n) if aug[r][c]), None)
        if piv is None:
            raise DomainError("matrix is singular")
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = one / aug[c][c]
        aug[c] = [v * inv if v else v for v in aug[c]]
        for r in range(n):
            if r != c and aug[r][c]:
                f = aug[r][c]
                aug[r] = [v - f * w if w else v for v, w in zip(aug[r], aug[c])]
    return [row[n:] for row in aug]


@lru_cache(maxsize=None)
def governing_quadratic(m: int) -> tuple[int, int, int]:
    """Integer coefficients ``(c2, c1, c0)`` of the polynomial condition on x, derived
    by evaluating ``tr(E^T E^-1) + 2`` symbolically on the block ansatz."""
    if m < 2:
        raise DomainError(f"m must be >= 2, got {m}")
    x = sympy.symbols("x")
    # E is block diagonal, so E^T E^-1 is too and its trace is a sum over blocks.
    blocks = [sympy.eye(m - 2)] if m > 2 else []
    blocks.append(sympy.Matrix([[0, x], [-1, 0]]))
    trace = sum((b.T * b.inv()).trace() for b in blocks)
    condition = sympy.together(trace + 2)
    num, _ = sympy.fraction(condition)
    poly = sympy.Poly(sympy.expand(num), x)
    if poly.degree() != 2:
        raise InvariantViolation(f"expected a quadratic condition, got {poly}")
    c2, c1, c0 = (int(c) for c in poly.all_coeffs())
    if c2 < 0:
        c2, c1, c0 = -c2, -c1, -c0
    return c2, c1, c0


def _quadratic_root(c2: int, c1: int, c0: int) -> QuadraticNumber:
    disc = c1 * c1 - 4 * c2 * c0
    k, d = _squarefree_split(disc)
    if d == 1 or d == 0:
        return QuadraticNumber(Fraction(-c1 + (k if d == 1 else 0), 2 * c2))
    return QuadraticNumber(Fraction(-c1, 2 * c2), Fraction(k, 2 * c2), d)


def build_E(m: int) -> FiberMatrix:
    """The block matrix E of size m whose x solves the trace condition exactly.

    Takes the root with the ``+`` sign. For m = 2 this is x = 1.
    """
    c2, c1, c0 = governing_quadratic(m)
    x = _quadratic_root(c2, c1, c0)
    if not x:
        raise InvariantViolation("no admissible x: E would be singular")
    e = FiberMatrix(m, x)
    if trace_condition(e) != -2:
        raise InvariantViolation(f"x={x} does not satisfy the trace condition for m={m}")
    return e


def trace_condition(e: FiberMatrix | list[list[Scalar]]) -> Scalar:
    """``tr(E^T E^-1)``; exact for QuadraticNumber entries, complex otherwise."""
    rows = e.rows() if isinstance(e, FiberMatrix) else e
    if isinstance(rows[0][0], QuadraticNumber):
        prod = _mat_mul(_transpose(rows), _inverse(rows))
        return sum((prod[i][i] for i in range(len(rows))), QuadraticNumber(0))
    a = np.array(rows, dtype=complex)
    if abs(np.linalg.det(a)) < 1e-12:
        raise DomainError("matrix is singular")
    return complex(np.trace(a.T @ np.linalg.inv(a)))


def quantum_trace_condition(e: FiberMatrix | list[list[Scalar]], q) -> Scalar:
    """``q tr(E^T E^-1) + 1 + q^2``; zero exactly when the quantum condition holds."""
    if q == 0:
        raise DomainError("q must be nonzero")
    return q * trace_condition(e) + 1 + q * q


def identity_matrix(m: int) -> list[list[QuadraticNumber]]:
    return [[QuadraticNumber(1 if i == j else 0) for j in range(m)] for i in range(m)]


def rejected_quadratic_roots(m: int) -> tuple[complex, complex]:
    """Roots of ``x^2 - (m-1) x + 2``. They do not solve the trace condition."""
    disc = cmath.sqrt((m - 1) ** 2 - 8)
    return ((m - 1) + disc) / 2, ((m - 1) - disc) / 2


def exact_root_is_real(m: int) -> bool:
    c2, c1, c0 = governing_quadratic(m)
    return c1 * c1 - 4 * c2 * c0 >= 0


def discriminant_is_square(m: int) -> bool:
    c2, c1, c0 = governing_quadratic(m)
    disc = c1 * c1 - 4 * c2 * c0
    return disc >= 0 and isqrt(disc) ** 2 == disc
