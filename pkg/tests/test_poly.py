"""Exact-arithmetic polynomial layer: algebra and the pinned text format."""

import random

import pytest

from hyperq.poly import ONE, Q, ZERO, BiPoly, LaurentPoly, RatFunc, qint, qpow


# ---------------------------------------------------------------- LaurentPoly

def test_zero_polynomial_is_empty_map():
    assert LaurentPoly({3: 0}).is_zero
    assert LaurentPoly().is_zero
    assert LaurentPoly({3: 0}) == ZERO
    assert not ZERO
    assert ONE


def test_terms_sorted_and_clean():
    p = LaurentPoly({2: 1, -1: 3, 0: 0, 5: -2})
    assert p.terms() == [(-1, 3), (2, 1), (5, -2)]
    assert p.coeff(0) == 0
    assert p.coeff(-1) == 3
    assert p.min_exp == -1
    assert p.max_exp == 5


def test_min_exp_of_zero_raises():
    with pytest.raises(ValueError):
        _ = ZERO.min_exp
    with pytest.raises(ValueError):
        _ = ZERO.max_exp


def test_qint_and_qpow():
    assert qint(0) == ZERO
    assert qint(1) == ONE
    assert qint(3) == LaurentPoly({0: 1, 1: 1, 2: 1})
    assert qpow(0) == ONE
    assert qpow(-2) == LaurentPoly({-2: 1})
    with pytest.raises(ValueError):
        qint(-1)


def test_shift_and_reverse():
    p = LaurentPoly({0: 1, 2: 3})
    assert p.shift(-1) == LaurentPoly({-1: 1, 1: 3})
    assert p.reverse_var() == LaurentPoly({0: 1, -2: 3})
    assert p.reverse_var().reverse_var() == p


def test_eval_at_one():
    assert LaurentPoly({-2: 3, 5: 4}).eval_at_one == 7
    assert ZERO.eval_at_one == 0


def _random_poly(rng: random.Random) -> LaurentPoly:
    return LaurentPoly(
        {rng.randint(-6, 6): rng.randint(-5, 5) for _ in range(rng.randint(0, 6))}
    )


def test_ring_axioms_random():
    rng = random.Random(20260815)
    for _ in range(300):
        a, b, c = (_random_poly(rng) for _ in range(3))
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + ZERO == a
        assert a * ONE == a
        assert a - a == ZERO
        assert (-a) + a == ZERO
        # evaluation at q=1 is a ring homomorphism
        assert (a * b).eval_at_one == a.eval_at_one * b.eval_at_one
        assert (a + b).eval_at_one == a.eval_at_one + b.eval_at_one


def test_shift_is_multiplication_by_qpow():
    rng = random.Random(98)
    for _ in range(50):
        a = _random_poly(rng)
        k = rng.randint(-4, 4)
        assert a.shift(k) == a * qpow(k)


def test_foreign_operands_rejected():
    with pytest.raises(TypeError):
        _ = Q + "q"
    with pytest.raises(TypeError):
        _ = Q * 2.5


# ------------------------------------------------------------- text rendering

def test_text_examples_pinned():
    assert ZERO.text() == "0"
    assert ONE.text() == "1"
    assert Q.text() == "q"
    assert qpow(-1).text() == "q^-1"
    assert qpow(2).text() == "q^2"
    assert LaurentPoly({0: 2}).text() == "2"
    assert LaurentPoly({3: 2}).text() == "2q^3"
    assert LaurentPoly({-1: 1, 0: 2, 1: 1, 2: 1}).text() == "q^-1 + 2 + q + q^2"
    assert LaurentPoly({0: 1, 1: -1}).text() == "1 - q"
    assert LaurentPoly({0: -1, 1: -3}).text() == "-1 - 3q"
    assert LaurentPoly({-2: -1}).text() == "-q^-2"


def test_text_increasing_exponents_no_star():
    rng = random.Random(7)
    for _ in range(100):
        p = _random_poly(rng)
        t = p.text()
        assert "*" not in t
        assert "q^1 " not in t and not t.endswith("q^1")
        assert "q^0" not in t


# -------------------------------------------------------------------- BiPoly

def test_bipoly_algebra_and_specialize():
    r = BiPoly.monomial(1, 1, 0)
    s = BiPoly.monomial(1, 0, 1)
    p = (r + s) * (r + s)
    assert p == BiPoly({(2, 0): 1, (1, 1): 2, (0, 2): 1})
    # specialize slot1 -> q^2, slot2 -> q
    q_version = p.specialize(2, 1)
    assert q_version == LaurentPoly({4: 1, 3: 2, 2: 1})
    assert p.eval_at_one == 4
    assert BiPoly.zero().is_zero
    assert BiPoly.one().specialize(5, 7) == ONE


def test_bipoly_text_lexicographic():
    r = BiPoly.monomial(1, 1, 0)
    s = BiPoly.monomial(1, 0, 1)
    assert (r + s).text() == "s + r"
    assert (r * r + s * s * r).text() == "r s^2 + r^2"
    assert BiPoly({(0, 0): 3}).text() == "3"
    assert BiPoly({(2, 1): -1, (0, 0): 1}).text(("t", "s")) == "1 - t^2 s"
    assert BiPoly.zero().text() == "0"


def test_bipoly_random_ring_axioms():
    rng = random.Random(41)

    def rand_bi():
        return BiPoly(
            {(rng.randint(0, 4), rng.randint(0, 4)): rng.randint(-3, 3)
             for _ in range(rng.randint(0, 5))}
        )

    for _ in range(150):
        a, b, c = rand_bi(), rand_bi(), rand_bi()
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        assert (a * b).specialize(2, 1) == a.specialize(2, 1) * b.specialize(2, 1)
        assert (a + b).specialize(3, 1) == a.specialize(3, 1) + b.specialize(3, 1)


# ------------------------------------------------------------------- RatFunc

def test_ratfunc_zero_denominator_rejected():
    with pytest.raises(ZeroDivisionError):
        RatFunc(ONE, ZERO)


def test_ratfunc_equality_by_cross_multiplication():
    half = RatFunc(ONE, qint(2))  # 1 / (1+q)
    scaled = RatFunc(Q, Q * qint(2))  # q / (q + q^2)
    assert half == scaled
    assert half != RatFunc(ONE, qint(3))
    assert RatFunc.zero() == RatFunc(ZERO, qint(3))


def test_ratfunc_arithmetic_and_recip():
    a = RatFunc(ONE, Q)
    assert a.recip() == RatFunc(Q, ONE)
    assert a + 1 == RatFunc(ONE + Q, Q)
    assert 1 + a == a + 1
    assert a * Q == RatFunc(Q, Q)
    assert (a * Q) == RatFunc(ONE, ONE)
    with pytest.raises(ZeroDivisionError):
        RatFunc.zero().recip()


def test_ratfunc_canonical_display():
    v = RatFunc(qpow(2), Q + Q * Q)  # q^2 / (q + q^2) -> q / (1 + q)
    c = v.canonical()
    assert c.num == Q
    assert c.den == ONE + Q
    assert v.text() == "(q) / (1 + q)"
    # canonical keeps at least one nonzero constant term
    assert min(c.num.min_exp, c.den.min_exp) == 0
    assert RatFunc.zero().text() == "(0) / (1)"


def test_ratfunc_random_field_axioms():
    rng = random.Random(777)

    def rand_nonzero():
        while True:
            p = _random_poly(rng)
            if not p.is_zero:
                return p

    for _ in range(120):
        a = RatFunc(_random_poly(rng), rand_nonzero())
        b = RatFunc(_random_poly(rng), rand_nonzero())
        c = RatFunc(_random_poly(rng), rand_nonzero())
        assert a + b == b + a
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert a + RatFunc.zero() == a
        if not a.is_zero:
            assert a * a.recip() == RatFunc(ONE, ONE)
        # canonical preserves value
        assert a.canonical() == a
