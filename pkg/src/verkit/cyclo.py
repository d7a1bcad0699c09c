"""Exact arithmetic in Z[q], q = exp(i*pi/p^n) a primitive 2p^n-th root of unity.

Elements live in Z[x]/(Phi(x)) where Phi is the cyclotomic polynomial of
order 2p^n:

    Phi(x) = x^((p-1)p^(n-1)) - x^((p-2)p^(n-1)) + ... - x^(p^(n-1)) + 1   (p odd)
    Phi(x) = x^(2^n) + 1                                                  (p = 2)

The modulus is constructed directly and then self-checked two ways: it must
divide x^(2p^n) - 1 exactly, and it must vanish numerically at q.  All
Frobenius-Perron dimension identities are verified by substitution in this
ring; nothing is ever solved for.  Quantum integers are

    [m]_(q^s) = sum_{k=0}^{m-1} q^(s(m-1-2k)),

and the dimension of the simple object with digit string i_1...i_n is the
product of [i_k + 1] at q^(p^(n-k)).
"""

from __future__ import annotations

from functools import lru_cache

import mpmath

from .digits import descendants, simple_range, steinberg_label, to_digits
from .errors import OutOfRange
from .tilting import chebyshev_s

NUMERIC_DPS = 40
NUMERIC_TOL = mpmath.mpf("1e-25")


class IntPoly:
    """Integer polynomial in one variable, coefficients ascending."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = coeffs

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"IntPoly({self.coeffs})"

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def split(self) -> tuple["IntPoly", "IntPoly"]:
        """Positive and negative parts: self = plus - minus, disjoint support."""
        plus = [c if c > 0 else 0 for c in self.coeffs]
        minus = [-c if c < 0 else 0 for c in self.coeffs]
        return IntPoly(plus), IntPoly(minus)

    def __call__(self, x: "CycloInt") -> "CycloInt":
        acc = x.ctx.zero()
        for c in reversed(self.coeffs):
            acc = acc * x + x.ctx.from_int(c)
        return acc


class CycloContext:
    """Immutable per-(p, n) context holding the reduction modulus."""

    __slots__ = ("p", "n", "order", "degree", "modulus")

    def __init__(self, p: int, n: int):
        self.p = p
        self.n = n
        self.order = 2 * p**n
        if p == 2:
            self.degree = 2**n
            modulus = [0] * (self.degree + 1)
            modulus[0] = modulus[self.degree] = 1
        else:
            self.degree = (p - 1) * p ** (n - 1)
            modulus = [0] * (self.degree + 1)
            for k in range(p):
                modulus[k * p ** (n - 1)] = (-1) ** k
            if modulus[self.degree] != 1:
                modulus = [-c for c in modulus]
        self.modulus = tuple(modulus)
        self._self_check()

    def _self_check(self) -> None:
        # Exact: modulus | x^(2 p^n) - 1.
        big = [0] * (self.order + 1)
        big[0], big[self.order] = -1, 1
        rem = _poly_mod(big, self.modulus)
        if any(rem):
            raise AssertionError(f"modulus for (p={self.p}, n={self.n}) does not divide x^{self.order} - 1")
        # Numeric: modulus vanishes at exp(i pi / p^n).
        with mpmath.workdps(NUMERIC_DPS):
            q = mpmath.expjpi(mpmath.mpf(1) / self.p**self.n)
            val = mpmath.polyval([mpmath.mpf(c) for c in reversed(self.modulus)], q)
            if abs(val) > NUMERIC_TOL:
                raise AssertionError(f"modulus for (p={self.p}, n={self.n}) does not vanish at q")

    def zero(self) -> "CycloInt":
        return CycloInt(self, (0,) * self.degree)

    def one(self) -> "CycloInt":
        return self.from_int(1)

    def from_int(self, c: int) -> "CycloInt":
        return CycloInt(self, (c,) + (0,) * (self.degree - 1))

    def q_power(self, e: int) -> "CycloInt":
        """The element q^e for any integer e."""
        mono = [0] * (e % self.order + 1)
        mono[-1] = 1
        return CycloInt(self, _poly_mod(mono, self.modulus))


def _poly_mod(poly, modulus) -> tuple[int, ...]:
    """Remainder of poly (ascending) modulo the monic modulus, as a tuple."""
    deg = len(modulus) - 1
    rem = list(poly)
    for k in range(len(rem) - 1, deg - 1, -1):
        c = rem[k]
        if c:
            rem[k] = 0
            for j in range(deg):
                rem[k - deg + j] -= c * modulus[j]
    rem = rem[:deg]
    rem += [0] * (deg - len(rem))
    return tuple(rem)


@lru_cache(maxsize=None)
def context(p: int, n: int) -> CycloContext:
    return CycloContext(p, n)


class CycloInt:
    """Element of Z[x]/Phi, fully reduced; treated as immutable."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: CycloContext, coeffs):
        coeffs = tuple(coeffs)
        assert len(coeffs) == ctx.degree
        self.ctx = ctx
        self.coeffs = coeffs

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self == self.ctx.from_int(other)
        return (
            isinstance(other, CycloInt)
            and self.ctx is other.ctx
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.ctx.p, self.ctx.n, self.coeffs))

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __repr__(self) -> str:
        return f"CycloInt(p={self.ctx.p}, n={self.ctx.n}, {list(self.coeffs)})"

    def __add__(self, other: "CycloInt") -> "CycloInt":
        return CycloInt(self.ctx, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "CycloInt") -> "CycloInt":
        return CycloInt(self.ctx, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "CycloInt":
        return CycloInt(self.ctx, tuple(-a for a in self.coeffs))

    def __rmul__(self, scalar: int) -> "CycloInt":
        return CycloInt(self.ctx, tuple(scalar * a for a in self.coeffs))

    def __mul__(self, other: "CycloInt") -> "CycloInt":
        prod = [0] * (2 * self.ctx.degree - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    prod[i + j] += a * b
        return CycloInt(self.ctx, _poly_mod(prod, self.ctx.modulus))

    def conjugate(self) -> "CycloInt":
        """Image under q -> q^(-1)."""
        out = self.ctx.from_int(self.coeffs[0])
        for e in range(1, self.ctx.degree):
            if self.coeffs[e]:
                out = out + self.coeffs[e] * self.ctx.q_power(-e)
        return out

    def is_real(self) -> bool:
        return self == self.conjugate()

    def numeric(self) -> mpmath.mpc:
        """Evaluate at q = exp(i pi / p^n) with >= 60 significant bits."""
        with mpmath.workdps(NUMERIC_DPS):
            q = mpmath.expjpi(mpmath.mpf(1) / self.ctx.p**self.ctx.n)
            return mpmath.polyval([mpmath.mpf(c) for c in reversed(self.coeffs)], q)

    def numeric_real(self) -> mpmath.mpf:
        val = self.numeric()
        assert abs(val.imag) < NUMERIC_TOL, "element is not real"
        return val.real


def qint(p: int, n: int, m: int, t: int = 0) -> CycloInt:
    """Quantum integer [m] at q^(p^t)."""
    if m < 0:
        raise OutOfRange(f"quantum integer index must be >= 0, got {m}")
    ctx = context(p, n)
    out = ctx.zero()
    step = p**t
    for k in range(m):
        out = out + ctx.q_power(step * (m - 1 - 2 * k))
    return out


def fpdim_simple(p: int, n: int, i: int) -> CycloInt:
    """FPdim(L_i) = product over digits of [i_k + 1] at q^(p^(n-k))."""
    if i not in simple_range(p, n):
        raise OutOfRange(f"simple label {i} outside range for p={p}, n={n}")
    digits = to_digits(i, p, n)
    out = context(p, n).one()
    for k, d in enumerate(digits, start=1):
        out = out * qint(p, n, d + 1, n - k)
    return out


def fpdim_projective(p: int, n: int, i: int) -> CycloInt:
    """FPdim of the projective cover of L_i: sum of [b] over descendants b."""
    s = steinberg_label(p, n, i)
    ctx = context(p, n)
    out = ctx.zero()
    for b in sorted(descendants(s + 1, p, n)):
        out = out + qint(p, n, b)
    return out


def dim_simple(p: int, n: int, i: int) -> tuple[int, int]:
    """Categorical dimension of L_i: product of (digit+1), with its residue mod p."""
    if i not in simple_range(p, n):
        raise OutOfRange(f"simple label {i} outside range for p={p}, n={n}")
    d = 1
    for digit in to_digits(i, p, n):
        d *= digit + 1
    return d, d % p


def verify_cd_eq_p(p: int, n: int, cartan=None) -> tuple[bool, int | None]:
    """Check C * (FPdim of simples) = (FPdim of projectives), exactly.

    Verification by substitution row by row; no linear solve.  Returns
    (True, None) or (False, offending projective index).
    """
    from .digits import cartan_descendant, projective_range, simple_of_projective

    if cartan is None:
        cartan = cartan_descendant(p, n)
    rows = list(projective_range(p, n))
    dims = [fpdim_simple(p, n, simple_of_projective(p, n, s)) for s in rows]
    for a, s in enumerate(rows):
        lhs = context(p, n).zero()
        for b in range(len(rows)):
            c = int(cartan[a, b])
            if c:
                lhs = lhs + c * dims[b]
        rhs = fpdim_projective(p, n, simple_of_projective(p, n, s))
        if lhs != rhs:
            return False, s
    return True, None


def chebyshev_Q(p: int, n: int) -> IntPoly:
    """Chebyshev polynomial whose roots include 2cos(pi/p^n): S at index p^n - 1."""
    return IntPoly(chebyshev_s(p**n - 1))


def fpdim_category(p: int, n: int) -> mpmath.mpf:
    """Numeric sum of FPdim(L_i) * FPdim(P_i) over all simples."""
    with mpmath.workdps(NUMERIC_DPS):
        total = mpmath.mpf(0)
        for i in simple_range(p, n):
            total += fpdim_simple(p, n, i).numeric_real() * fpdim_projective(p, n, i).numeric_real()
        return total


def fpdim_category_closed_form(p: int, n: int) -> mpmath.mpf:
    """p^n / (2 sin^2(pi / p^n))."""
    with mpmath.workdps(NUMERIC_DPS):
        return p**n / (2 * mpmath.sinpi(mpmath.mpf(1) / p**n) ** 2)
