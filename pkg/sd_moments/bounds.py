"""Closed-form bounds, evaluated exactly with Fraction before conversion to float."""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial, prod

from phasedesign.exceptions import PreconditionError


def check_parameters(t: int, n: int) -> None:
    if n < 1 or not 1 <= t <= (1 << n) - 1:
        raise PreconditionError(f"need 1 <= t <= 2^n - 1, got t={t}, n={n}")


def rank_bound(t: int, n: int) -> int:
    """C(2^n + t - 1, t) - C(2^n, t): permutation classes minus all-distinct ones."""
    check_parameters(t, n)
    size = 1 << n
    return comb(size + t - 1, t) - comb(size, t)


def eigenvalue_floor_exact(t: int, n: int) -> Fraction:
    check_parameters(t, n)
    return Fraction(-factorial(t), 1 << (t * n))


def eigenvalue_floor(t: int, n: int) -> float:
    return float(eigenvalue_floor_exact(t, n))


def th1_bound_exact(t: int, n: int) -> Fraction:
    check_parameters(t, n)
    size = 1 << n
    upper = prod((Fraction(size + i, size) for i in range(1, t)), start=Fraction(1))
    lower = prod((Fraction(size - i, size) for i in range(1, t)), start=Fraction(1))
    return upper - lower


def th1_bound(t: int, n: int) -> float:
    return float(th1_bound_exact(t, n))


def rank_floor_product(t: int, n: int) -> Fraction:
    """rank_bound * t! / 2^(tn); equal to th1_bound_exact."""
    return rank_bound(t, n) * -eigenvalue_floor_exact(t, n)


def jls_closed_form_exact(t: int, n: int) -> Fraction:
    check_parameters(t, n)
    size = 1 << n
    first = prod((Fraction(size - i, size) for i in range(1, t)), start=Fraction(1))
    second = prod((1 - Fraction(2 * i, size + i) for i in range(1, t)), start=Fraction(1))
    return first - second


def jls_closed_form(t: int, n: int) -> float:
    return float(jls_closed_form_exact(t, n))


def main_bound(t: int, n: int) -> float:
    return float(Fraction(4 * t * t, 1 << n))


def chain_bound(t: int, n: int) -> float:
    """(1 + t/2^n)^t - (1 - 2t/(2^n + t))^t, the step before the 4t^2/2^n relaxation."""
    check_parameters(t, n)
    size = 1 << n
    return float(Fraction(size + t, size) ** t - (1 - Fraction(2 * t, size + t)) ** t)
