"""Hyperbinary expansions of n and the lattice structure on them.

A hyperbinary expansion of n is a digit string d_1 ... d_k over
{0, 1, 2} with sum(d_i * 2^(k-i)) = n and k the length of the binary
expansion of n.  Digit strings are plain tuples of ints, most
significant digit first; n = 0 has the single empty expansion ().

The set D(n) of all expansions satisfies the recursion

    D(2n+1) = { psi . 1          : psi in D(n)   }
    D(2n)   = { psi . 0          : psi in D(n)   }
            u { pad(chi . 2)     : chi in D(n-1) }

(pad = at most one leading zero, needed exactly when n is a power of
two).  Ordering D(n) by partial-sum domination of prefixes makes it a
distributive lattice; covers, meet and join are all computed through
the prefix-sum vectors.

Generating functions counted here:

    h_q(n)    = sum q^ell,        ell = (number of ones) + 2*(number of twos)
    h_rs(n)   = sum r^t s^z,      t = twos, z = zeros right of the first
                                  nonzero digit
    hbar_st(n) = sum s^p1 t^p2,   p1 = ones, p2 = twos

Each has an enumeration form (the oracle) and a halving recurrence
form; verification sweeps compare the two.  Memo dicts are caller
owned, exactly as in stern.
"""

from __future__ import annotations

from dataclasses import dataclass

from .poly import BiPoly, LaurentPoly, ONE, ZERO

Digits = tuple[int, ...]


# ---------------------------------------------------------------------------
# digit strings


def binary_expansion(n: int) -> Digits:
    """The binary digits of n, most significant first; () for n = 0."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return ()
    return tuple(int(b) for b in bin(n)[2:])


def digits_value(d: Digits) -> int:
    """The integer a digit string stands for."""
    v = 0
    for dig in d:
        v = 2 * v + dig
    return v


def digits_text(d: Digits) -> str:
    return "".join(str(dig) for dig in d)


def parse_digits(s: str) -> Digits:
    d = tuple(int(ch) for ch in s)
    if any(dig not in (0, 1, 2) for dig in d):
        raise ValueError(f"digits must be 0, 1 or 2: {s!r}")
    return d


# ---------------------------------------------------------------------------
# enumeration


def expansions(n: int, memo: dict[int, tuple[Digits, ...]] | None = None) -> tuple[Digits, ...]:
    """All hyperbinary expansions of n, lexicographically decreasing.

    The first entry is always the binary expansion, the last the bottom
    element of the lattice.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if memo is None:
        memo = {}
    return _expansions(n, memo)


def _expansions(n: int, memo: dict[int, tuple[Digits, ...]]) -> tuple[Digits, ...]:
    if n == 0:
        return ((),)
    got = memo.get(n)
    if got is not None:
        return got
    k = n.bit_length()
    half, odd = divmod(n, 2)
    if odd:
        out = [psi + (1,) for psi in _expansions(half, memo)]
    else:
        out = [psi + (0,) for psi in _expansions(half, memo)]
        for chi in _expansions(half - 1, memo):
            ext = chi + (2,)
            # one leading zero of padding when half is a power of two
            out.append((0,) * (k - len(ext)) + ext)
    out.sort(reverse=True)
    val = tuple(out)
    memo[n] = val
    return val


def h_count(n: int) -> int:
    """How many hyperbinary expansions n has (by enumeration)."""
    return len(expansions(n))


# ---------------------------------------------------------------------------
# statistics and generating functions


@dataclass(frozen=True)
class HyperStats:
    """Digit statistics of one expansion.

    ell = p1 + 2*p2 is the weight tracked by h_q; z counts the zeros
    strictly to the right of the leftmost nonzero digit (leading zeros
    are free); t is an alias for p2 kept because the two play different
    roles in the two bivariate refinements.
    """

    ell: int
    p1: int
    p2: int
    t: int
    z: int


def stats(d: Digits) -> HyperStats:
    p1 = sum(1 for dig in d if dig == 1)
    p2 = sum(1 for dig in d if dig == 2)
    z = 0
    seen_nonzero = False
    for dig in d:
        if dig == 0:
            if seen_nonzero:
                z += 1
        else:
            seen_nonzero = True
    return HyperStats(ell=p1 + 2 * p2, p1=p1, p2=p2, t=p2, z=z)


def h_q_enum(n: int) -> LaurentPoly:
    """h_q(n) = sum of q^ell over D(n), straight from the enumeration."""
    out: dict[int, int] = {}
    for d in expansions(n):
        e = stats(d).ell
        out[e] = out.get(e, 0) + 1
    return LaurentPoly(out)


def h_q(n: int, memo: dict[int, LaurentPoly] | None = None) -> LaurentPoly:
    """h_q(n) by the halving recurrence; h_q(-1) = 0 by convention."""
    if n < -1:
        raise ValueError("h_q is defined for n >= -1")
    if memo is None:
        memo = {}
    return _h_q(n, memo)


def _h_q(n: int, memo: dict[int, LaurentPoly]) -> LaurentPoly:
    if n <= 0:
        return ZERO if n < 0 else ONE
    got = memo.get(n)
    if got is not None:
        return got
    half, odd = divmod(n, 2)
    if odd:
        # n = 2m+1: every expansion is psi.1, one extra 1
        val = _h_q(half, memo).shift(1)
    else:
        # n = 2m: psi.0 keeps the weight, chi.2 adds 2
        val = _h_q(half, memo) + _h_q(half - 1, memo).shift(2)
    memo[n] = val
    return val


# bivariate in (r, s): r marks a digit 2, s marks a nonleading zero
_R2 = BiPoly.monomial(1, 1, 0)
_S2 = BiPoly.monomial(1, 0, 1)


def h_rs_enum(n: int) -> BiPoly:
    out: dict[tuple[int, int], int] = {}
    for d in expansions(n):
        st = stats(d)
        p = (st.t, st.z)
        out[p] = out.get(p, 0) + 1
    return BiPoly(out)


def h_rs(n: int, memo: dict[int, BiPoly] | None = None) -> BiPoly:
    """h_rs(n) by recurrence: appending 1 is free, 0 costs s, 2 costs r."""
    if n < -1:
        raise ValueError("h_rs is defined for n >= -1")
    if memo is None:
        memo = {}
    return _h_rs(n, memo)


def _h_rs(n: int, memo: dict[int, BiPoly]) -> BiPoly:
    if n <= 0:
        return BiPoly.zero() if n < 0 else BiPoly.one()
    got = memo.get(n)
    if got is not None:
        return got
    half, odd = divmod(n, 2)
    if odd:
        val = _h_rs(half, memo)
    else:
        val = _S2 * _h_rs(half, memo) + _R2 * _h_rs(half - 1, memo)
    memo[n] = val
    return val


# bivariate in (s, t): s marks a digit 1, t marks a digit 2.  The
# weight-two variable t takes the first exponent slot, mirroring r in
# h_rs, so increasing-lex rendering lists lighter terms first.
_S3 = BiPoly.monomial(1, 0, 1)
_T3 = BiPoly.monomial(1, 1, 0)

HBAR_NAMES = ("t", "s")


def hbar_st_enum(n: int) -> BiPoly:
    out: dict[tuple[int, int], int] = {}
    for d in expansions(n):
        st = stats(d)
        p = (st.p2, st.p1)
        out[p] = out.get(p, 0) + 1
    return BiPoly(out)


def hbar_st(n: int, memo: dict[int, BiPoly] | None = None) -> BiPoly:
    """hbar_st(n) by recurrence: appending 1 costs s, 0 is free, 2 costs t.

    Specializing t -> q^2, s -> q (``specialize(2, 1)``) recovers
    h_q(n) term by term.  Render with ``text(HBAR_NAMES)``.
    """
    if n < -1:
        raise ValueError("hbar_st is defined for n >= -1")
    if memo is None:
        memo = {}
    return _hbar_st(n, memo)


def _hbar_st(n: int, memo: dict[int, BiPoly]) -> BiPoly:
    if n <= 0:
        return BiPoly.zero() if n < 0 else BiPoly.one()
    got = memo.get(n)
    if got is not None:
        return got
    half, odd = divmod(n, 2)
    if odd:
        val = _S3 * _hbar_st(half, memo)
    else:
        val = _hbar_st(half, memo) + _T3 * _hbar_st(half - 1, memo)
    memo[n] = val
    return val


def h_q_closed_form(n: int) -> LaurentPoly:
    """h_q(n) in closed form for the two special digit shapes.

    binary expansion 1^r       ->  q^r
    binary expansion 1^r 0 1^s ->  q^(r+s) + ... + q^(2r+s)

    Raises ValueError when the expansion is not of either shape; use
    ``h_q_closed_form_applies`` to test first.
    """
    b = binary_expansion(n)
    zeros = [i for i, dig in enumerate(b) if dig == 0]
    if not zeros:
        return LaurentPoly({len(b): 1})
    if len(zeros) == 1:
        r = zeros[0]
        s = len(b) - r - 1
        return LaurentPoly({e: 1 for e in range(r + s, 2 * r + s + 1)})
    raise ValueError(f"binary expansion of {n} has more than one zero")


def h_q_closed_form_applies(n: int) -> bool:
    return sum(1 for dig in binary_expansion(n) if dig == 0) <= 1


# ---------------------------------------------------------------------------
# the lattice order on D(n)


def s_prefix(d: Digits, i: int) -> int:
    """The value of the length-i prefix d_1 ... d_i (1-based i)."""
    if not 1 <= i <= len(d):
        raise IndexError(f"prefix index {i} out of range for length {len(d)}")
    acc = 0
    for dig in d[:i]:
        acc = 2 * acc + dig
    return acc


def s_vector(d: Digits) -> tuple[int, ...]:
    """Prefix sums s_i = sum_{j<=i} d_j 2^(i-j); s_i(c) <= s_i(d) for all
    i is exactly the lattice order, and s_k recovers n."""
    out = []
    acc = 0
    for dig in d:
        acc = 2 * acc + dig
        out.append(acc)
    return tuple(out)


def _check_same_n(c: Digits, d: Digits) -> None:
    if len(c) != len(d) or digits_value(c) != digits_value(d):
        raise ValueError("digit strings do not expand the same n")


def leq(c: Digits, d: Digits) -> bool:
    """Lattice order: prefix-sum domination in every coordinate."""
    _check_same_n(c, d)
    return all(a <= b for a, b in zip(s_vector(c), s_vector(d)))


def covers(d: Digits) -> tuple[Digits, ...]:
    """The elements covered by d: rewrite one adjacent pair (x, 0) with
    x > 0 into (x-1, 2), which lowers a single prefix sum by one."""
    out = []
    for i in range(len(d) - 1):
        if d[i] > 0 and d[i + 1] == 0:
            out.append(d[:i] + (d[i] - 1, 2) + d[i + 2:])
    out.sort(reverse=True)
    return tuple(out)


def principal_prefix(n: int) -> Digits:
    """The binary digits strictly before the rightmost 0; () when the
    expansion is all ones (including n = 0)."""
    b = binary_expansion(n)
    for j in range(len(b) - 1, -1, -1):
        if b[j] == 0:
            return b[:j]
    return ()


def max_element(n: int) -> Digits:
    """The top of D(n): the binary expansion itself."""
    return binary_expansion(n)


def min_element(n: int) -> Digits:
    """The bottom of D(n), in closed form."""
    if n < 0:
        raise ValueError("n must be >= 0")
    b = binary_expansion(n)
    k = len(b)
    p = principal_prefix(n)
    if not p:
        # all ones: D(n) is a single point
        return b
    r = len(p)
    mid = tuple(p[i] + 1 for i in range(1, r))
    return (0,) + mid + (2,) + (1,) * (k - r - 1)


def meet(c: Digits, d: Digits) -> Digits:
    """Greatest lower bound, through coordinatewise min of prefix sums."""
    return _lattice_op(c, d, min)


def join(c: Digits, d: Digits) -> Digits:
    """Least upper bound, through coordinatewise max of prefix sums."""
    return _lattice_op(c, d, max)


def _lattice_op(c: Digits, d: Digits, pick) -> Digits:
    _check_same_n(c, d)
    sm = tuple(pick(a, b) for a, b in zip(s_vector(c), s_vector(d)))
    out = []
    prev = 0
    for s in sm:
        dig = s - 2 * prev
        if dig not in (0, 1, 2):
            raise ArithmeticError("prefix-sum vector does not reconstruct to digits in {0,1,2}")
        out.append(dig)
        prev = s
    return tuple(out)


def join_irreducibles(n: int) -> tuple[Digits, ...]:
    """The join irreducibles of D(n) in closed form: split n at each
    position of the principal prefix as n = q*2^(k-i) + m and glue the
    bottom elements of the two halves."""
    b = binary_expansion(n)
    k = len(b)
    r = len(principal_prefix(n))
    out = []
    for i in range(1, r + 1):
        q = digits_value(b[:i])
        m = n - (q << (k - i))
        left = min_element(q)
        right = min_element(m)
        pad = k - len(left) - len(right)
        out.append(left + (0,) * pad + right)
    out.sort(reverse=True)
    return tuple(out)


# ---------------------------------------------------------------------------
# exports


def lattice_dot(n: int) -> str:
    """Hasse diagram of D(n) in DOT form, edges from covered to covering."""
    lines = [f"digraph hyperbinary_{n} {{", "  rankdir=BT;"]
    elems = expansions(n)
    for d in elems:
        lines.append(f'  "{digits_text(d)}";')
    for d in elems:
        for c in covers(d):
            lines.append(f'  "{digits_text(c)}" -> "{digits_text(d)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def stats_rows(n: int) -> list[dict]:
    """One JSON-ready row per expansion."""
    rows = []
    for d in expansions(n):
        st = stats(d)
        rows.append(
            {
                "digits": digits_text(d),
                "ell": st.ell,
                "p1": st.p1,
                "p2": st.p2,
                "t": st.t,
                "z": st.z,
                "s_vector": list(s_vector(d)),
            }
        )
    return rows
