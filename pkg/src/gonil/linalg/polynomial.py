"""Minimal polynomials and the polynomial tests built on them.

Coefficient lists run from the leading coefficient down to the constant
term, the same order as ``sympy.Poly.all_coeffs``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any

import sympy

from gonil.exceptions import InputError
from gonil.linalg.elimination import solve_linear
from gonil.linalg.matrix import Matrix

t = sympy.Symbol("t")


def minimal_polynomial(A: Matrix) -> tuple[Fraction, ...]:
    """Monic minimal polynomial of ``A`` over the rationals.

    Powers ``I, A, A^2, ...`` are generated until the first one that is a
    linear combination of its predecessors.

    Raises:
        InputError: If ``A`` is not square.
    """
    if not A.is_square:
        raise InputError(
            "Minimal polynomial needs a square matrix",
            errors={"shape": [A.rows, A.cols]},
        )
    n = A.rows
    if n == 0:
        return (Fraction(1),)
    powers = [Matrix.identity(n).entries]
    current = Matrix.identity(n)
    for k in range(1, n + 1):
        current = current @ A
        system = Matrix.from_columns(powers, rows=n * n)
        solution = solve_linear(system, current.entries)
        if solution is not None:
            c = solution.particular
            return (Fraction(1),) + tuple(-c[i] for i in range(k - 1, -1, -1))
        powers.append(current.entries)
    raise AssertionError("Cayley-Hamilton bound exceeded")


def evaluate(coefficients: tuple[Fraction, ...], A: Matrix) -> Matrix:
    """Evaluates the polynomial at ``A`` by Horner's rule."""
    n = A.rows
    out = Matrix.zeros(n, n)
    for c in coefficients:
        out = out @ A + Matrix.identity(n).scaled(c)
    return out


def is_nilpotent_operator(A: Matrix) -> tuple[bool, int | None]:
    """Tests ``A^n == 0`` and returns the nilindex when it holds."""
    if not A.is_square:
        raise InputError("Nilpotency needs a square matrix")
    n = A.rows
    if n == 0:
        return True, 0
    power = A
    for m in range(1, n + 1):
        if power.is_zero:
            return True, m
        power = power @ A
    return False, None


def as_poly(coefficients: tuple[Fraction, ...]) -> Any:
    return sympy.Poly(
        [sympy.Rational(c.numerator, c.denominator) for c in coefficients],
        t,
        domain="QQ",
    )


def is_squarefree(coefficients: tuple[Fraction, ...]) -> bool:
    """True iff the polynomial has no repeated factor over the rationals."""
    poly = as_poly(coefficients)
    return bool(poly.gcd(poly.diff(t)).degree() <= 0)


def is_pure_power(coefficients: tuple[Fraction, ...]) -> bool:
    """True iff the polynomial is ``t^m`` for some ``m``."""
    return not any(coefficients[1:])


def rational_roots(coefficients: tuple[Fraction, ...]) -> list[Fraction]:
    poly = as_poly(coefficients)
    return sorted(
        Fraction(int(r.p), int(r.q)) for r in sympy.roots(poly, filter="Q").keys()
    )


def real_roots_estimate(coefficients: tuple[Fraction, ...]) -> list[float]:
    """Floating estimates of the real roots; never used by exact code paths."""
    poly = as_poly(coefficients)
    return sorted(float(r) for r in poly.nroots(n=15) if abs(sympy.im(r)) < 1e-9)


def format_polynomial(coefficients: tuple[Fraction, ...]) -> str:
    return str(as_poly(coefficients).as_expr())
