"""2x2 matrix products over Laurent polynomials and their entry formulas."""

import pytest

from hyperq.hyperbinary import h_q, h_rs
from hyperq.matrices import (
    BiMat2,
    L,
    L_PRIME,
    Mat2,
    R,
    R_PRIME,
    det_check,
    entries_formula,
    m_of,
    m_prime_check,
    m_prime_of,
    m_prime_range,
    m_range,
    row_sum_check,
    word_of,
)
from hyperq.poly import ONE, ZERO, BiPoly, LaurentPoly, qpow
from hyperq.stern import fusc


def test_generators_pinned():
    assert L.entries() == (ONE, ZERO, ONE, qpow(-1))
    assert R.entries() == (qpow(1), ONE, ZERO, ONE)
    assert L.det() == qpow(-1)
    assert R.det() == qpow(1)


def test_word_of_examples():
    assert word_of(19) == "RRLL"
    assert word_of(1) == ""
    assert word_of(2) == "L"
    assert word_of(3) == "R"
    with pytest.raises(ValueError):
        word_of(0)


def test_m_of_examples():
    assert m_of(1) == Mat2.identity()
    assert m_of(2) == L
    assert m_of(3) == R
    m19 = m_of(19)
    assert m19.a == LaurentPoly({-1: 1, 0: 2, 1: 1, 2: 1})
    assert m19.b == LaurentPoly({-1: 1, -2: 1})
    assert m19.c == LaurentPoly({-1: 1, 0: 1})
    assert m19.d == LaurentPoly({-2: 1})


def test_m_range_agrees_with_word_products():
    ms = m_range(1024)
    for n in range(1, 1025):
        assert ms[n] == m_of(n), n


def test_halving_identities():
    # against m_of, which folds the letter word; m_range itself is built
    # from these identities, so checking it here would be circular
    for n in range(1, 257):
        mn = m_of(n)
        assert m_of(2 * n) == L @ mn
        assert m_of(2 * n + 1) == R @ mn


def test_entries_formula_examples():
    f19 = entries_formula(19)
    assert f19 == m_of(19)
    # top-left is q^-3 h_q(10); bottom-right is q^-4 h_q(3)
    assert f19.a == h_q(10).shift(-3)
    assert f19.d == h_q(3).shift(-4)
    # all-ones boundary: first column degenerates
    f7 = entries_formula(7)
    assert f7.a == qpow(2) and f7.c == ZERO
    assert f7 == m_of(7)


def test_entries_formula_sweep_with_boundaries():
    ms = m_range(4096)
    memo = {}
    for n in range(2, 4097):
        assert entries_formula(n, memo) == ms[n], n
    # both branch boundaries for every block size in range
    for k in range(1, 13):
        for n in (2**(k + 1) - 1, 2**(k + 1) - 2, 2**k):
            assert entries_formula(n) == m_of(n), n


def test_row_sum_identity():
    assert row_sum_check(1)
    assert row_sum_check(19)
    top, bottom = m_of(19).column_sums_vector()
    assert top == h_q(18).shift(-4)
    assert bottom == h_q(19).shift(-5)


def test_row_sum_identity_large_sweep():
    """Vector form of the halving identity: v(2n) = L v(n), v(2n+1) = R v(n),
    with v(n) = M(n) (1,1)^T.  Checks the row-sum theorem to 2^16 without
    building matrices."""
    limit = 2**16
    memo = {}
    tops: list[LaurentPoly | None] = [None] * (limit + 1)
    bots: list[LaurentPoly | None] = [None] * (limit + 1)
    tops[1], bots[1] = ONE, ONE
    for n in range(2, limit + 1):
        t, b = tops[n // 2], bots[n // 2]
        if n % 2:
            tops[n] = t.shift(1) + b  # R @ (t, b)
            bots[n] = b
        else:
            tops[n] = t                # L @ (t, b)
            bots[n] = t + b.shift(-1)
    for n in range(1, limit + 1):
        k = n.bit_length() - 1
        assert tops[n] == h_q(n - 1, memo).shift(-k), n
        assert bots[n] == h_q(n, memo).shift(-k - 1), n


def test_q_one_shadow_is_diatomic():
    ms = m_range(2048)
    for n in range(1, 2049):
        top, bottom = ms[n].column_sums_vector()
        assert top.eval_at_one == fusc(n)
        assert bottom.eval_at_one == fusc(n + 1)


def test_determinant_tracks_word_signature():
    ms = m_range(4096)
    for n in range(1, 4097):
        assert det_check(n, ms[n]), n
    word = word_of(19)
    assert m_of(19).det() == qpow(word.count("R") - word.count("L"))


# ------------------------------------------------------------ two-variable side

def test_prime_generators_pinned():
    r = BiPoly.monomial(1, 1, 0)
    s = BiPoly.monomial(1, 0, 1)
    one = BiPoly.one()
    zero = BiPoly.zero()
    assert L_PRIME.entries() == (one, zero, r, s)
    assert R_PRIME.entries() == (r, s, zero, one)


def test_m_prime_examples():
    assert m_prime_of(1) == BiMat2.identity()
    assert m_prime_of(2) == L_PRIME
    assert m_prime_check(1)
    top, bottom = m_prime_of(2).column_sums_vector()
    assert top == BiPoly.one()
    assert bottom == BiPoly({(1, 0): 1, (0, 1): 1})  # r + s
    assert m_prime_check(2)


def test_m_prime_sweep():
    mps = m_prime_range(2048)
    memo = {}
    for n in range(1, 2049):
        assert m_prime_check(n, mps[n], memo), n
        top, bottom = mps[n].column_sums_vector()
        assert top == h_rs(n - 1, memo) and bottom == h_rs(n, memo)
