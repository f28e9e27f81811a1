"""Finite-field context: discrete logs, characters, and Frobenius traces.

A PrimeContext bundles the mod-p tables every other module leans on: powers
of a fixed primitive root g, discrete logarithms base g, and the quadratic
character.  Multiplicative characters are always written as powers of the
Teichmuller character omega, pinned down by omega(g) = the Teichmuller lift
of g; a character omega^k is therefore identified with its exponent k
modulo p - 1.
"""

from __future__ import annotations

import numpy as np

from dataclasses import dataclass

from .errors import (
    BadPrecisionError,
    NoOrderFourCharacterError,
    NotPrimeError,
    PrimeTooSmallError,
    SingularLambdaError,
)

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for all n < 3.3 * 10**24."""
    if n < 2:
        return False
    for q in _MR_WITNESSES:
        if n % q == 0:
            return n == q
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _primitive_root(p: int) -> int:
    factors = _prime_factors(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in factors):
            return g
    raise AssertionError("no primitive root found")


@dataclass(frozen=True)
class CyclotomicInt4:
    """An element re + im*i of Z[i], kept exact (never floated)."""

    re: int
    im: int

    def conjugate(self) -> "CyclotomicInt4":
        return CyclotomicInt4(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im


class PrimeContext:
    """Tables and character arithmetic for one odd prime p >= 5.

    Attributes:
        p: the prime.
        precision: working p-adic precision (digits of p; >= 2).
        g: the smallest primitive root mod p.
        pow_g: pow_g[k] = g**k mod p for 0 <= k < p - 1.
        dlog: dlog[x] = k with g**k = x mod p; dlog[0] = -1 as a sentinel.
        legendre: legendre[x] in {-1, 0, 1}, the quadratic character.
    """

    def __init__(self, p: int, precision: int = 3):
        if not isinstance(p, int) or not is_prime(p):
            raise NotPrimeError(f"{p} is not prime")
        if p < 5:
            raise PrimeTooSmallError(f"p = {p} < 5 is not supported")
        if not isinstance(precision, int) or precision < 2:
            raise BadPrecisionError(
                f"working precision {precision} must be an integer >= 2"
            )
        self.p = p
        self.precision = precision
        self.g = _primitive_root(p)
        pow_g = np.empty(p - 1, dtype=np.int64)
        acc = 1
        for k in range(p - 1):
            pow_g[k] = acc
            acc = acc * self.g % p
        dlog = np.empty(p, dtype=np.int64)
        dlog[0] = -1
        dlog[pow_g] = np.arange(p - 1, dtype=np.int64)
        legendre = np.zeros(p, dtype=np.int64)
        legendre[pow_g] = np.where(np.arange(p - 1) % 2 == 0, 1, -1)
        self.pow_g = pow_g
        self.dlog = dlog
        self.legendre = legendre
        # per-context caches filled lazily by other modules
        self._teich_unit_cache: dict = {}
        self._coeff_cache: dict = {}

    def __repr__(self) -> str:
        return f"PrimeContext(p={self.p})"

    def legendre_symbol(self, x: int) -> int:
        """Quadratic character phi(x) in {-1, 0, 1}."""
        return int(self.legendre[x % self.p])

    def char_exponent(self, k: int, x: int) -> int | None:
        """Exponent e with omega^k(x) = zeta_(p-1)^e, or None when x = 0.

        None marks the zero element, on which every multiplicative
        character vanishes by the chi(0) := 0 convention.
        """
        x %= self.p
        if x == 0:
            return None
        return k * int(self.dlog[x]) % (self.p - 1)

    def trace_frobenius(self, lam: int) -> int:
        """Frobenius trace a_p(lambda) of y^2 = x(x-1)(x-lambda).

        a_p = p + 1 - #E(F_p) = -sum_x phi(x(x-1)(x-lambda)).
        """
        p = self.p
        lam %= p
        if lam in (0, 1):
            raise SingularLambdaError(f"lambda = {lam} is a singular fiber")
        x = np.arange(p, dtype=np.int64)
        f = x * ((x - 1) % p) % p * ((x - lam) % p) % p
        return -int(self.legendre[f].sum())

    def frobenius_sweep(self) -> np.ndarray:
        """a_p(lambda) for every lambda, as an int64 array of length p.

        Entries at the singular fibers lambda = 0, 1 are set to 0.
        """
        p = self.p
        x = np.arange(p, dtype=np.int64)
        x1 = x * ((x - 1) % p) % p
        out = np.zeros(p, dtype=np.int64)
        chunk = max(1, (1 << 22) // p)
        for lo in range(2, p, chunk):
            lams = np.arange(lo, min(lo + chunk, p), dtype=np.int64)
            f = x1[None, :] * ((x[None, :] - lams[:, None]) % p) % p
            out[lams] = -self.legendre[f].sum(axis=1)
        return out

    def jacobi_sum_order4(self) -> CyclotomicInt4:
        """Jacobi sum J(phi*chi4, conj(chi4)) in Z[i], for p = 1 (mod 4).

        chi4 = omega^((p-1)/4) has order 4; phi*chi4 = conj(chi4), so the
        sum is sum_{x != 0,1} conj(chi4)(x) * conj(chi4)(1-x), computed
        exactly by binning dlog(x) + dlog(1-x) mod 4 (chi4(g^d) = i^d).
        Satisfies re^2 + im^2 = p; the real part does not depend on which
        of the two order-4 characters plays chi4.
        """
        p = self.p
        if p % 4 != 1:
            raise NoOrderFourCharacterError(f"p = {p} is 3 mod 4")
        x = np.arange(2, p, dtype=np.int64)
        e = (self.dlog[x] + self.dlog[(1 - x) % p]) % 4
        c = np.bincount(e, minlength=4)
        return CyclotomicInt4(int(c[0] - c[2]), int(c[3] - c[1]))

    def correction_term(self) -> int:
        """The integer subtracted at lambda = -1 to regularize the sweep.

        Equals -a_p(-1): zero for p = 3 (mod 4), and twice the real part
        of chi4(-1) * J(phi*chi4, conj(chi4)) for p = 1 (mod 4).  The
        factor two is a calibration pinned by the identity
        a_p(-1) = -2 * chi4(-1) * Re J (see README).
        """
        if self.p % 4 != 1:
            return 0
        chi4_m1 = -1 if (self.p - 1) // 4 % 2 else 1
        return 2 * chi4_m1 * self.jacobi_sum_order4().re

    def gauss_sum_float(self, k: int) -> complex:
        """Gauss sum g(omega^k) as a complex float.

        g(chi) = sum_{x=1}^{p-1} chi(x) * exp(2 pi i x / p).  For the
        trivial character (k = 0 mod p-1) this returns -1.
        """
        p = self.p
        x = np.arange(1, p, dtype=np.int64)
        chi = np.exp(2j * np.pi * (k % (p - 1)) * self.dlog[x] / (p - 1))
        zeta = np.exp(2j * np.pi * x / p)
        return complex((chi * zeta).sum())


def make_prime_ctx(p: int, precision: int = 3) -> PrimeContext:
    """Validate p and build the table context (alias for PrimeContext)."""
    return PrimeContext(p, precision)
