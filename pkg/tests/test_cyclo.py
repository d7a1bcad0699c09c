import random

import mpmath
import pytest

from verkit.cyclo import (
    IntPoly,
    chebyshev_Q,
    context,
    dim_simple,
    fpdim_category,
    fpdim_category_closed_form,
    fpdim_projective,
    fpdim_simple,
    qint,
    verify_cd_eq_p,
)
from verkit.digits import simple_range
from verkit.errors import OutOfRange

PAIRS = [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (3, 3), (5, 2), (7, 2)]


def test_modulus_construction():
    assert context(3, 2).modulus == (1, 0, 0, -1, 0, 0, 1)
    assert context(2, 3).modulus == (1, 0, 0, 0, 0, 0, 0, 0, 1)
    assert context(5, 1).modulus == (1, -1, 1, -1, 1)
    for p, n in PAIRS:
        ctx = context(p, n)
        assert len(ctx.modulus) == ctx.degree + 1
        assert ctx.modulus[-1] == 1


def test_qint_edge_cases():
    assert qint(3, 2, 0) == context(3, 2).zero()
    assert qint(3, 2, 1) == context(3, 2).one()
    for p, n in PAIRS:
        assert not qint(p, n, p**n), (p, n)  # [p^n] vanishes
    with pytest.raises(OutOfRange):
        qint(3, 2, -1)


def test_qint_numeric():
    with mpmath.workdps(40):
        v = qint(3, 2, 2).numeric_real()
        assert abs(v - 2 * mpmath.cospi(mpmath.mpf(1) / 9)) < mpmath.mpf("1e-30")
        for p, n, m in ((5, 2, 7), (2, 4, 3), (7, 1, 4)):
            got = qint(p, n, m).numeric_real()
            expect = mpmath.sinpi(mpmath.mpf(m) / p**n) / mpmath.sinpi(mpmath.mpf(1) / p**n)
            assert abs(got - expect) < mpmath.mpf("1e-25")


def test_ring_axioms_randomized():
    rng = random.Random(11)
    ctx = context(3, 2)
    elems = [ctx.q_power(rng.randrange(18)) + ctx.from_int(rng.randrange(-3, 4)) for _ in range(8)]
    for _ in range(60):
        a, b, c = rng.sample(elems, 3)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a


def test_quantum_integer_recurrence():
    for p, n in ((3, 2), (5, 2), (2, 3)):
        two = qint(p, n, 2)
        for a in range(1, p**n):
            assert qint(p, n, a) * two == qint(p, n, a + 1) + qint(p, n, a - 1)


def test_fpdim_simple_examples():
    assert fpdim_simple(3, 2, 0) == 1
    assert fpdim_simple(3, 2, 3) == 1
    for p, n in ((3, 2), (5, 2), (2, 3)):
        assert fpdim_simple(p, n, 1) == qint(p, n, 2)
    with pytest.raises(OutOfRange):
        fpdim_simple(3, 2, 6)


def test_fpdim_simple_real():
    for p, n in ((3, 2), (5, 2), (2, 4), (3, 3)):
        for i in simple_range(p, n):
            assert fpdim_simple(p, n, i).is_real()


def test_fpdim_projective_examples():
    assert fpdim_projective(3, 2, 2) == qint(3, 2, 3)
    assert fpdim_projective(3, 2, 0) == qint(3, 2, 5) + qint(3, 2, 1)
    assert fpdim_projective(2, 2, 0) == qint(2, 2, 3) + qint(2, 2, 1)


def test_dim_simple():
    assert dim_simple(3, 2, 0) == (1, 1)
    assert dim_simple(3, 2, 4) == (4, 1)
    assert dim_simple(3, 2, 5) == (6, 0)


def test_cd_eq_p_exact():
    for p, n in PAIRS:
        ok, witness = verify_cd_eq_p(p, n)
        assert ok, (p, n, witness)


def test_chebyshev_polynomials():
    assert chebyshev_Q(2, 1) == IntPoly([0, 1])
    assert chebyshev_Q(3, 1) == IntPoly([-1, 0, 1])
    plus, minus = chebyshev_Q(3, 1).split()
    assert plus == IntPoly([0, 0, 1]) and minus == IntPoly([1])
    q, r = chebyshev_Q(5, 1).split()
    recombined = [a - b for a, b in zip(q.coeffs + [0] * 9, r.coeffs + [0] * 9)]
    assert IntPoly(recombined) == chebyshev_Q(5, 1)


def test_chebyshev_split_disjoint_support():
    for p, n in PAIRS:
        plus, minus = chebyshev_Q(p, n).split()
        sup_plus = {i for i, c in enumerate(plus.coeffs) if c}
        sup_minus = {i for i, c in enumerate(minus.coeffs) if c}
        assert not sup_plus & sup_minus
        assert all(c >= 0 for c in plus.coeffs + minus.coeffs)


def test_chebyshev_roots():
    for p, n in PAIRS:
        if p**n == 2:
            continue
        x = fpdim_simple(p, n, 1)
        assert not chebyshev_Q(p, n)(x), (p, n)
        assert chebyshev_Q(p, n - 1)(x), (p, n)


def test_fpdim_category():
    for p, n in PAIRS:
        total = fpdim_category(p, n)
        closed = fpdim_category_closed_form(p, n)
        assert abs(total - closed) < mpmath.mpf("1e-9"), (p, n)
    with mpmath.workdps(30):
        assert abs(fpdim_category_closed_form(2, 1) - 1) < mpmath.mpf("1e-25")
        assert abs(fpdim_category_closed_form(3, 1) - 2) < mpmath.mpf("1e-25")


def test_numeric_identities_guard_modulus():
    # Exact relations also hold numerically: wrong modulus would break this.
    with mpmath.workdps(40):
        for p, n in ((3, 2), (5, 2), (2, 4)):
            lhs = (qint(p, n, 3) * qint(p, n, 4)).numeric_real()
            rhs = (qint(p, n, 3).numeric_real()) * (qint(p, n, 4).numeric_real())
            assert abs(lhs - rhs) < mpmath.mpf("1e-20")
