"""Exact arithmetic in GF(2^n) with a deterministic modulus.

Field elements are n-bit integers where bit i holds the coefficient of x^i.
The modulus for degree n is the smallest monic irreducible polynomial when
polynomials are compared as (n+1)-bit integers.
"""

from __future__ import annotations

import logging
from functools import lru_cache
from typing import Sequence

from .constants import GF_MAX_DEGREE
from .exceptions import FieldError
from .types import FieldElement, FieldModulus

logger = logging.getLogger(__name__)


def clmul(a: int, b: int) -> int:
    """Carry-less (GF(2)[x]) product of two non-negative integers."""
    result = 0
    while b:
        if b & 1:
            result ^= a
        a <<= 1
        b >>= 1
    return result


def poly_mod(a: int, m: int) -> int:
    """Remainder of a modulo m in GF(2)[x]."""
    dm = m.bit_length()
    if dm == 0:
        raise FieldError("division by the zero polynomial")
    while a.bit_length() >= dm:
        a ^= m << (a.bit_length() - dm)
    return a


def poly_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, poly_mod(a, b)
    return a


def mul_bits(a: int, b: int, poly: int) -> int:
    """Field product on raw integers; a and b must already be reduced."""
    degree = poly.bit_length() - 1
    top = 1 << degree
    result = 0
    # shift-xor loop with on-the-fly reduction
    while b:
        if b & 1:
            result ^= a
        b >>= 1
        a <<= 1
        if a & top:
            a ^= poly
    return result


def pow_bits(a: int, e: int, poly: int) -> int:
    result = 1
    while e:
        if e & 1:
            result = mul_bits(result, a, poly)
        a = mul_bits(a, a, poly)
        e >>= 1
    return result


def horner_bits(coeffs: Sequence[int], x: int, poly: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = mul_bits(acc, x, poly) ^ c
    return acc


def is_irreducible(poly: int) -> bool:
    """Ben-Or test: no factor of degree <= n/2, via gcd(x^(2^i) - x, f)."""
    degree = poly.bit_length() - 1
    if degree < 1:
        return False
    h = 0b10
    for _ in range(degree // 2):
        h = poly_mod(clmul(h, h), poly)
        if poly_gcd(h ^ 0b10, poly) != 1:
            return False
    return True


def is_irreducible_trial(poly: int) -> bool:
    """Trial division by every polynomial of degree 1..n/2; exponential, meant for small n."""
    degree = poly.bit_length() - 1
    if degree < 1:
        return False
    for divisor in range(2, 1 << (degree // 2 + 1)):
        if poly_mod(poly, divisor) == 0:
            return False
    return True


@lru_cache(maxsize=None)
def find_modulus(n: int) -> FieldModulus:
    """Lexicographically smallest monic irreducible polynomial of degree n.

    For n = 1 this is x itself (0b10); GF(2)[x]/(x) is GF(2) and no product
    of two 1-bit elements ever needs reduction.
    """
    if not 1 <= n <= GF_MAX_DEGREE:
        raise FieldError(f"field degree must be in [1, {GF_MAX_DEGREE}], got {n}")
    for candidate in range(1 << n, 1 << (n + 1)):
        if is_irreducible(candidate):
            logger.debug("Selected modulus %#x for GF(2^%d)", candidate, n)
            return FieldModulus(poly=candidate, degree=n)
    raise FieldError(f"no irreducible polynomial of degree {n}")  # pragma: no cover


def _check_width(m: FieldModulus, *elements: FieldElement) -> None:
    for e in elements:
        if e.width != m.degree:
            raise FieldError(f"element width {e.width} does not match field degree {m.degree}")


def gf_add(a: FieldElement, b: FieldElement) -> FieldElement:
    if a.width != b.width:
        raise FieldError(f"width mismatch: {a.width} vs {b.width}")
    return FieldElement(a.bits ^ b.bits, a.width)


def gf_mul(a: FieldElement, b: FieldElement, m: FieldModulus) -> FieldElement:
    _check_width(m, a, b)
    return FieldElement(mul_bits(a.bits, b.bits, m.poly), m.degree)


def gf_pow(a: FieldElement, e: int, m: FieldModulus) -> FieldElement:
    if e < 0:
        raise FieldError(f"negative exponent {e}")
    _check_width(m, a)
    return FieldElement(pow_bits(a.bits, e, m.poly), m.degree)


def poly_eval(coeffs: Sequence[FieldElement], x: FieldElement, m: FieldModulus) -> FieldElement:
    """Sum of coeffs[i] * x^i, evaluated with Horner's rule."""
    if not coeffs:
        raise FieldError("cannot evaluate a polynomial without coefficients")
    _check_width(m, x, *coeffs)
    return FieldElement(horner_bits([c.bits for c in coeffs], x.bits, m.poly), m.degree)
