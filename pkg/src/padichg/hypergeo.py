"""p-adic hypergeometric sums nGn and the Legendre-family specializations.

The basic object is the finite sum, over j = 0 .. p-2,

    nGn[a; b | t] = -1/(p-1) * sum_j (-1)^(j n) * conj(omega)^j(t)
        * prod_k (-p)^( -floor(<a_k> - j/(p-1)) - floor(<-b_k> + j/(p-1)) )
        * Gamma_p(<a_k - j/(p-1)>) Gamma_p(<-b_k + j/(p-1)>)
          / ( Gamma_p(<a_k>) Gamma_p(<-b_k>) ),

with <.> the fractional part and omega the Teichmuller character.  All
arithmetic happens mod p^n through a GammaTable; nothing is floated.

The total (-p)-exponent of a term can be negative (for the 2G2 parameter
row it is -1 on a positive-length window of j), so the evaluator accepts
a p_shift: it returns p^p_shift times the sum, demanding every shifted
exponent be >= 0.  The Legendre 2G2 wrapper absorbs its leading factor p
this way and the result is exact mod p^n with no lost digits.

Two specializations of interest, both zero at lambda = 0 and -1:

    2G2(lambda) = p * psi6(2) * psi3(4 (1+lambda)^2 / lambda) * phi(1+lambda)
                    * 2G2[2/3, 2/3; 5/12, 11/12 | 4 lambda/(1+lambda)^2]
        for p = 1 (mod 6), psi6 = omega^((p-1)/6), psi3 = omega^((p-1)/3),
    6G6(lambda) = phi(1+lambda)
                    * 6G6[1/3, 1/3, 2/3, 2/3, 0, 0;
                          1/12, 1/4, 5/12, 7/12, 3/4, 11/12
                          | 2^6 lambda^3 / (1+lambda)^6]
        for every p >= 5.

In its theorem class (p = 1 mod 6 for 2G2, p = 2 mod 3 for 6G6) each
value equals the twisted Frobenius trace of the Legendre curve
y^2 = x(x-1)(x-lambda), namely phi(-2) a_p(lambda) for 2G2 and
phi(-1) a_p(lambda) for 6G6.  The cubic-character factor in 2G2 is what
makes that identity hold on every fiber; without it the bare sum is off
by psi3(lambda/(4(1+lambda)^2)), which is a non-real unit for a third of
the lambdas.  Each value is therefore a rational integer of absolute
value at most 2*sqrt(p), recorded as GnValue.claimed_bound, making the
exact signed integer recoverable from the residue.  The tilde variants
subtract a correction at lambda = -1 so that the value there becomes
the Frobenius trace a_p(-1) instead of 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import (
    NoRepresentativeError,
    ParameterNotPadicError,
    PrecisionExhaustedError,
    WrongResidueClassError,
)
from .field import PrimeContext
from .padic import GammaTable, ResidueMod, frac_bracket, teichmuller

G2_UPPER = (Fraction(2, 3), Fraction(2, 3))
G2_LOWER = (Fraction(5, 12), Fraction(11, 12))
G6_UPPER = (
    Fraction(1, 3),
    Fraction(1, 3),
    Fraction(2, 3),
    Fraction(2, 3),
    Fraction(0),
    Fraction(0),
)
G6_LOWER = (
    Fraction(1, 12),
    Fraction(1, 4),
    Fraction(5, 12),
    Fraction(7, 12),
    Fraction(3, 4),
    Fraction(11, 12),
)

# int64 sweep kernel: products of two residues mod p^2 must stay below 2^63
MAX_SWEEP_PRIME = 55000

SWEEP_FAMILIES = ("2g2", "6g6", "2g2t", "6g6t", "ap")


@dataclass(frozen=True)
class GnValue:
    """A hypergeometric value: a residue plus an optional archimedean bound.

    claimed_bound is floor(2*sqrt(p)) when an integrality theorem pins the
    value as a rational integer in [-2*sqrt(p), 2*sqrt(p)], else None.
    """

    residue: ResidueMod
    claimed_bound: int | None

    def lift(self) -> int:
        return lift_signed(self)


def lift_signed(v: GnValue) -> int:
    """The unique signed integer within the claimed bound, exactly.

    Needs 2*bound < p^n so that at most one representative qualifies.
    """
    if v.claimed_bound is None:
        raise NoRepresentativeError(
            "value carries no integrality bound; cannot lift to an integer"
        )
    r = v.residue
    if r.modulus <= 2 * v.claimed_bound + 1:
        raise PrecisionExhaustedError(
            f"modulus {r.modulus} cannot separate |x| <= {v.claimed_bound}"
        )
    if r.value <= v.claimed_bound:
        return r.value
    if r.modulus - r.value <= v.claimed_bound:
        return r.value - r.modulus
    raise NoRepresentativeError(
        f"no integer of absolute value <= {v.claimed_bound} is "
        f"{r.value} mod {r.modulus}"
    )


def _validate_rows(upper, lower, p: int) -> None:
    if len(upper) != len(lower) or not upper:
        raise ValueError("upper and lower rows must have equal positive length")
    for f in (*upper, *lower):
        if f.denominator % p == 0:
            raise ParameterNotPadicError(
                f"parameter {f} is not a p-adic integer for p = {p}"
            )


def _coefficients(
    ctx: PrimeContext,
    table: GammaTable,
    upper: tuple[Fraction, ...],
    lower: tuple[Fraction, ...],
    p_shift: int,
) -> list[int]:
    """Per-j coefficients s_j mod p^n with everything except conj(omega)^j(t)
    folded in, so that nGn(t) = sum_j s_j * omega(t)^(-j)."""
    key = (upper, lower, p_shift, table.n)
    cached = ctx._coeff_cache.get(key)
    if cached is not None:
        return cached
    p, pn = table.p, table.modulus
    _validate_rows(upper, lower, p)
    nlen = len(upper)
    p2 = p - 1
    aa = [frac_bracket(f) for f in upper]
    bb = [frac_bracket(-f) for f in lower]
    denom = 1
    for f in aa + bb:
        denom = denom * table.gamma_fraction(f) % pn
    pref = (pn - pow(p2, -1, pn)) * pow(denom, -1, pn) % pn
    # exponents never exceed nlen + p_shift; fold pref into the p-powers
    pw = [pow(p, e, pn) * pref % pn for e in range(nlen + max(p_shift, 0) + 1)]
    # a-term: exponent +1 iff j*d > u*(p-1); argument (u*(p-1) - j*d) mod M
    a_data = [
        (f.denominator, f.numerator * p2, f.denominator * p2,
         pow(f.denominator * p2, -1, pn))
        for f in aa
    ]
    # b-term: exponent -1 iff j*d >= (d-u)*(p-1); argument (u*(p-1) + j*d) mod M
    b_data = [
        (f.denominator, (f.denominator - f.numerator) * p2,
         f.numerator * p2, f.denominator * p2,
         pow(f.denominator * p2, -1, pn))
        for f in bb
    ]
    gr = table.gamma_residue
    s = [0] * p2
    for j in range(p2):
        e = 0
        unit = 1
        for d, up2, m, minv in a_data:
            jd = j * d
            if jd > up2:
                e += 1
            unit = unit * gr((up2 - jd) % m * minv % pn) % pn
        for d, thr, up2, m, minv in b_data:
            jd = j * d
            if jd >= thr:
                e -= 1
            unit = unit * gr((up2 + jd) % m * minv % pn) % pn
        es = e + p_shift
        if es < 0:
            raise PrecisionExhaustedError(
                f"term j={j} has p-adic valuation {es} < 0; "
                "a larger p_shift is required for integrality"
            )
        v = unit * pw[es] % pn
        if (j * nlen + e) & 1:
            v = pn - v if v else 0
        s[j] = v
    ctx._coeff_cache[key] = s
    return s


def eval_gn(
    ctx: PrimeContext,
    table: GammaTable,
    upper: tuple[Fraction, ...],
    lower: tuple[Fraction, ...],
    t: int,
    p_shift: int = 0,
) -> ResidueMod:
    """p^p_shift * nGn[upper; lower | t] mod p^n, exactly.

    At t = 0 every summand vanishes (chi(0) := 0 for all characters,
    the trivial one included), so the value is 0.
    """
    p, pn = table.p, table.modulus
    t %= p
    if t == 0:
        return ResidueMod(0, p, table.n)
    s = _coefficients(ctx, table, tuple(upper), tuple(lower), p_shift)
    om_inv = pow(teichmuller(p, t, table.n), -1, pn)
    acc = 0
    w = 1
    for sj in s:
        acc = (acc + sj * w) % pn
        w = w * om_inv % pn
    return ResidueMod(acc, p, table.n)


def _psi6_of_2(p: int, n: int) -> int:
    """psi6(2) = omega(2)^((p-1)/6) mod p^n, for p = 1 (mod 6)."""
    return pow(teichmuller(p, 2, n), (p - 1) // 6, p**n)


def eval_g2(ctx: PrimeContext, table: GammaTable, lam: int) -> GnValue:
    """2G2(lambda) for p = 1 (mod 6); equals phi(-2) a_p(lambda)."""
    p, pn = ctx.p, table.modulus
    if p % 6 != 1:
        raise WrongResidueClassError(f"2G2 needs p = 1 (mod 6); p = {p}")
    bound = math.isqrt(4 * p)
    lam %= p
    if lam == 0 or lam == p - 1:
        return GnValue(ResidueMod(0, p, table.n), bound)
    t = 4 * lam * pow(1 + lam, -2, p) % p
    inner = eval_gn(ctx, table, G2_UPPER, G2_LOWER, t, p_shift=1)
    # psi3(4(1+lam)^2/lam): cubic twist carried by the wrapper, not the sum
    arg = 4 * (1 + lam) * (1 + lam) * pow(lam, -1, p) % p
    chi3 = pow(teichmuller(p, arg, table.n), (p - 1) // 3, pn)
    val = inner.value * _psi6_of_2(p, table.n) % pn * chi3 % pn
    if ctx.legendre_symbol(1 + lam) < 0:
        val = pn - val if val else 0
    return GnValue(ResidueMod(val, p, table.n), bound)


def eval_g6(ctx: PrimeContext, table: GammaTable, lam: int) -> GnValue:
    """6G6(lambda) for any p >= 5; integral with bound when p = 2 (mod 3)."""
    p, pn = ctx.p, table.modulus
    bound = math.isqrt(4 * p) if p % 3 == 2 else None
    lam %= p
    if lam == 0 or lam == p - 1:
        return GnValue(ResidueMod(0, p, table.n), bound)
    t = 64 * pow(lam, 3, p) * pow(1 + lam, -6, p) % p
    inner = eval_gn(ctx, table, G6_UPPER, G6_LOWER, t)
    val = inner.value
    if ctx.legendre_symbol(1 + lam) < 0:
        val = pn - val if val else 0
    return GnValue(ResidueMod(val, p, table.n), bound)


def eval_g2_tilde(ctx: PrimeContext, table: GammaTable, lam: int) -> GnValue:
    """2G2 with the lambda = -1 value regularized to a_p(-1)."""
    p = ctx.p
    if lam % p == p - 1:
        if p % 6 != 1:
            raise WrongResidueClassError(f"2G2 needs p = 1 (mod 6); p = {p}")
        corr = ctx.correction_term()
        return GnValue(
            ResidueMod(-corr, p, table.n), math.isqrt(4 * p)
        )
    return eval_g2(ctx, table, lam)


def eval_g6_tilde(ctx: PrimeContext, table: GammaTable, lam: int) -> GnValue:
    """6G6 with the lambda = -1 value regularized to a_p(-1)."""
    p = ctx.p
    if lam % p == p - 1:
        corr = ctx.correction_term()
        return GnValue(
            ResidueMod(-corr, p, table.n), math.isqrt(4 * p)
        )
    return eval_g6(ctx, table, lam)


_SCALAR_EVAL = {
    "2g2": eval_g2,
    "6g6": eval_g6,
    "2g2t": eval_g2_tilde,
    "6g6t": eval_g6_tilde,
}


def eval_family(
    ctx: PrimeContext, table: GammaTable, family: str, lam: int
) -> GnValue:
    """Scalar evaluation of one named family at one lambda."""
    try:
        fn = _SCALAR_EVAL[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}") from None
    return fn(ctx, table, lam)


def _sweep_table(ctx: PrimeContext) -> GammaTable:
    hit = ctx._teich_unit_cache.get("table2")
    if hit is None:
        hit = GammaTable(ctx, 2)
        ctx._teich_unit_cache["table2"] = hit
    return hit


def _teich_powers(ctx: PrimeContext, pn: int) -> np.ndarray:
    """omega(g)^m mod p^2 for m = 0 .. p-2, as an int64 array."""
    hit = ctx._teich_unit_cache.get("teichpow2")
    if hit is None:
        om = teichmuller(ctx.p, ctx.g, 2)
        vals = np.empty(ctx.p - 1, dtype=np.int64)
        acc = 1
        for m in range(ctx.p - 1):
            vals[m] = acc
            acc = acc * om % pn
        hit = vals
        ctx._teich_unit_cache["teichpow2"] = hit
    return hit


def family_sweep(ctx: PrimeContext, family: str) -> np.ndarray:
    """Exact integer values of a family at every lambda in 0 .. p-1.

    Families: 2g2, 2g2t (p = 1 mod 6), 6g6, 6g6t (p = 2 mod 3), ap.
    Entries at structural zeros (lambda = 0, and lambda = p-1 for the
    untilded families) are 0; ap has zeros at lambda = 0, 1.
    """
    p = ctx.p
    if family not in SWEEP_FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    cached = ctx._teich_unit_cache.get(("sweep", family))
    if cached is not None:
        return cached
    if family == "ap":
        return _cache_sweep(ctx, family, ctx.frobenius_sweep())
    if p > MAX_SWEEP_PRIME:
        raise ValueError(
            f"p = {p} exceeds the int64 sweep kernel limit {MAX_SWEEP_PRIME}"
        )
    if family.startswith("2g2"):
        if p % 6 != 1:
            raise WrongResidueClassError(f"2G2 needs p = 1 (mod 6); p = {p}")
        upper, lower, shift = G2_UPPER, G2_LOWER, 1
    else:
        if p % 3 != 2:
            raise WrongResidueClassError(
                f"the 6G6 integrality bound needs p = 2 (mod 3); p = {p}"
            )
        upper, lower, shift = G6_UPPER, G6_LOWER, 0
    table = _sweep_table(ctx)
    pn = table.modulus
    s = _coefficients(ctx, table, upper, lower, shift)
    coeff = np.asarray(s, dtype=np.int64)
    if family.startswith("2g2"):
        coeff = coeff * _psi6_of_2(p, 2) % pn
    tp = _teich_powers(ctx, pn)

    lam = np.arange(p, dtype=np.int64)
    lam1 = (lam + 1) % p
    if family.startswith("2g2"):
        u = ctx.dlog[4 % p] + ctx.dlog[lam] - 2 * ctx.dlog[lam1]
    else:
        u = 6 * ctx.dlog[2] + 3 * ctx.dlog[lam] - 6 * ctx.dlog[lam1]
    valid = np.nonzero((lam != 0) & (lam != p - 1))[0]
    v = (-u[valid]) % (p - 1)
    if family.startswith("2g2"):
        # dlog of the per-lambda cubic twist psi3(4(1+lam)^2/lam)
        tw = ctx.dlog[4 % p] + 2 * ctx.dlog[lam1[valid]] - ctx.dlog[lam[valid]]
        tw = (p - 1) // 3 * tw % (p - 1)
    else:
        tw = np.zeros(len(valid), dtype=np.int64)

    bound = math.isqrt(4 * p)
    out = np.zeros(p, dtype=np.int64)
    j = np.arange(p - 1, dtype=np.int64)
    chunk = max(1, (1 << 22) // p)
    for lo in range(0, len(valid), chunk):
        vc = v[lo : lo + chunk]
        idx = vc[:, None] * j[None, :] % (p - 1)
        terms = tp[idx]
        terms *= coeff[None, :]
        terms %= pn
        w = terms.sum(axis=1) % pn
        w = w * tp[tw[lo : lo + chunk]] % pn
        signed = np.where(w <= bound, w, w - pn)
        if np.any(np.abs(signed) > bound):
            raise NoRepresentativeError(
                "sweep produced a residue outside the integrality bound"
            )
        out[valid[lo : lo + chunk]] = signed
    out *= ctx.legendre[lam1]
    if family.endswith("t"):
        out[p - 1] = -ctx.correction_term()
    return _cache_sweep(ctx, family, out)


def _cache_sweep(ctx: PrimeContext, family: str, arr: np.ndarray) -> np.ndarray:
    # cached arrays are shared between callers, so freeze them
    arr.flags.writeable = False
    ctx._teich_unit_cache[("sweep", family)] = arr
    return arr
