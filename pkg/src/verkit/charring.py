"""Exact arithmetic on SL2 characters.

A character is a symmetric Laurent polynomial in one variable x, stored as a
finitely supported map from weight (the exponent of x) to an arbitrary
precision integer multiplicity.  The Weyl character of highest weight m is

    [m+1]_x = (x^(m+1) - x^(-m-1)) / (x - x^(-1)),

i.e. multiplicity one on the weights m, m-2, ..., -m.  Every symmetric
integer character is a unique integer combination of Weyl characters, and the
expansion is computed greedily from the top weight; this is the engine behind
decomposition matrices and Hom-dimension inner products.
"""

from __future__ import annotations


class SymChar:
    """Symmetric Laurent polynomial with integer coefficients.

    Instances are treated as immutable; all operations return new objects.
    Zero coefficients are never stored.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[int, int]):
        self.coeffs = {w: c for w, c in coeffs.items() if c != 0}

    def __eq__(self, other) -> bool:
        return isinstance(other, SymChar) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "SymChar(0)"
        terms = " + ".join(
            f"{c}*x^{w}" if c != 1 else f"x^{w}"
            for w, c in sorted(self.coeffs.items(), reverse=True)
        )
        return f"SymChar({terms})"

    def __add__(self, other: "SymChar") -> "SymChar":
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            out[w] = out.get(w, 0) + c
        return SymChar(out)

    def __sub__(self, other: "SymChar") -> "SymChar":
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            out[w] = out.get(w, 0) - c
        return SymChar(out)

    def __mul__(self, other: "SymChar") -> "SymChar":
        return mul(self, other)

    def __rmul__(self, scalar: int) -> "SymChar":
        return SymChar({w: scalar * c for w, c in self.coeffs.items()})

    def is_symmetric(self) -> bool:
        return all(self.coeffs.get(-w, 0) == c for w, c in self.coeffs.items())

    def top_weight(self) -> int:
        """Largest weight in the support; undefined on the zero character."""
        return max(self.coeffs)


ZERO = SymChar({})


def weyl_char(m: int) -> SymChar:
    """Character of the Weyl module of highest weight m >= 0."""
    if m < 0:
        raise ValueError(f"Weyl highest weight must be >= 0, got {m}")
    return SymChar({w: 1 for w in range(-m, m + 1, 2)})


def mul(a: SymChar, b: SymChar) -> SymChar:
    """Exact product (convolution of coefficient maps)."""
    out: dict[int, int] = {}
    for wa, ca in a.coeffs.items():
        for wb, cb in b.coeffs.items():
            w = wa + wb
            out[w] = out.get(w, 0) + ca * cb
    return SymChar(out)


def frobenius_twist(a: SymChar, p: int) -> SymChar:
    """Substitution x -> x^p: every weight is scaled by p."""
    return SymChar({p * w: c for w, c in a.coeffs.items()})


def weyl_expand(a: SymChar) -> dict[int, int]:
    """Expand a symmetric character in the Weyl basis.

    Repeatedly reads the top weight m and subtracts that multiple of
    weyl_char(m).  Coefficients may come out negative for inputs that are not
    effective; the reconstruction identity holds in all cases.
    """
    out: dict[int, int] = {}
    rest = dict(a.coeffs)
    while rest:
        m = max(rest)
        c = rest[m]
        out[m] = c
        for w in range(-m, m + 1, 2):
            r = rest.get(w, 0) - c
            if r:
                rest[w] = r
            else:
                rest.pop(w, None)
    return out


def inner(a: SymChar, b: SymChar) -> int:
    """Inner product of characters; Weyl characters are orthonormal."""
    da = weyl_expand(a)
    db = weyl_expand(b)
    if len(db) < len(da):
        da, db = db, da
    return sum(c * db.get(m, 0) for m, c in da.items())


def dim_at_one(a: SymChar) -> int:
    """Evaluate at x=1, i.e. total of all multiplicities."""
    return sum(a.coeffs.values())
