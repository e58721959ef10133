"""q-deformed rationals and their two computation routes.

A reduced rational r/s >= 0 has a continued fraction [a1; a2, ..., am]
(canonical: a1 >= 0, a_i >= 1, last term >= 2 unless m = 1).  Its
q-deformation replaces each partial quotient by a q-integer, with the
variable inverted at alternate depths:

    [a1, a2, a3, ...]_q = [a1]_q + q^a1 / ( [a2]_{1/q} + q^-a2 / ( ... ))

evaluated bottom up over RatFunc, so the result arrives as an explicit
quotient of polynomials without any reduction.  The value does not
depend on which continued fraction representation of r/s is used.

``cw_index`` inverts the Calkin-Wilf enumeration: it turns the odd
length continued fraction into the run-length blocks of a bit string,
reverses it, and reads off the index n with cw(n) = r/s.

For r/s > 1 there is an independent route through closure sets of an
oriented path: ``qdeform_via_graph`` builds the path, deletes end
vertices, and forms the quotient of closure-set generating functions.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .poly import LaurentPoly, ONE, RatFunc, qint, qpow


class UnsupportedDomain(ValueError):
    """An input outside the domain a construction is stated for."""


# ---------------------------------------------------------------------------
# continued fractions and the Calkin-Wilf index


def cf_expand(r: int, s: int) -> list[int]:
    """Canonical continued fraction of r/s (r >= 0, s >= 1, reduced or
    not): a1 >= 0, inner terms >= 1, last term >= 2 when there is more
    than one."""
    if s < 1 or r < 0:
        raise ValueError("need r >= 0 and s >= 1")
    out = []
    while s:
        a, rem = divmod(r, s)
        out.append(a)
        r, s = s, rem
    return out


def cf_odd(r: int, s: int) -> list[int]:
    """The unique odd-length representation of r/s: split a trailing
    a_m >= 2 into (a_m - 1, 1) when the canonical expansion has even
    length."""
    cf = cf_expand(r, s)
    if len(cf) % 2 == 0:
        return cf[:-1] + [cf[-1] - 1, 1]
    return cf


def cw_index(r: int, s: int) -> int:
    """The unique n >= 1 with cw(n) = r/s, for positive r and s.

    The odd-length continued fraction [a1, ..., am] spells a bit
    string of a1 ones, a2 zeros, a3 ones, ...; reversing it gives the
    binary expansion of n.  Non-reduced input is reduced first.
    """
    if r < 1 or s < 1:
        raise ValueError("need r >= 1 and s >= 1")
    g = gcd(r, s)
    cf = cf_odd(r // g, s // g)
    bits = []
    for i, a in enumerate(cf):
        bits.append(("1" if i % 2 == 0 else "0") * a)
    word = "".join(bits)[::-1]
    return int(word, 2)


# ---------------------------------------------------------------------------
# the q-deformation, continued fraction route


def qdeform(r: int, s: int) -> RatFunc:
    """[r/s]_q as an explicit RatFunc; [0/s]_q = 0."""
    if s < 1 or r < 0:
        raise ValueError("need r >= 0 and s >= 1")
    if r == 0:
        return RatFunc.zero()
    g = gcd(r, s)
    cf = cf_expand(r // g, s // g)
    return qdeform_cf(cf)


def qdeform_cf(cf: list[int]) -> RatFunc:
    """Evaluate a continued fraction's q-deformation bottom up.

    Depth i (1-based) contributes [a_i]_q and q^a_i at odd depth,
    [a_i]_{1/q} and q^-a_i at even depth.
    """
    if not cf:
        raise ValueError("empty continued fraction")
    val: RatFunc | None = None
    for i in range(len(cf), 0, -1):
        a = cf[i - 1]
        if i % 2 == 1:
            bracket, numer = qint(a), qpow(a)
        else:
            bracket, numer = qint(a).reverse_var(), qpow(-a)
        if val is None:
            val = RatFunc.from_poly(bracket)
        else:
            val = bracket + numer * val.recip()
    assert val is not None
    return val


def qdeform_shift_check(r: int, s: int) -> bool:
    """[r/s + 1]_q = q [r/s]_q + 1, checked as rational functions."""
    return qdeform(r + s, s) == qdeform(r, s) * qpow(1) + 1


# ---------------------------------------------------------------------------
# the closure-set route (r/s > 1 only)


@dataclass(frozen=True)
class OrientedPath:
    """A path graph u_1 - u_2 - ... - u_k with each edge oriented.

    arcs[i] describes the edge between u_{i+1} and u_{i+2}: True means
    it points right (u_{i+1} -> u_{i+2}), False left.  k = len(arcs)+1
    vertices; the empty graph is modelled by vertices = 0.
    """

    vertices: int
    arcs: tuple[bool, ...]

    def __post_init__(self):
        if self.vertices < 0 or (self.vertices == 0 and self.arcs) or (
            self.vertices > 0 and len(self.arcs) != self.vertices - 1
        ):
            raise ValueError("arc count must be vertices - 1")


def closure_graph(cf: list[int]) -> OrientedPath:
    """The oriented path for [a1, ..., am]: N = sum(a_i) edges, the
    first a1 pointing left, next a2 right, alternating; both end
    vertices of the underlying (N+1)-vertex path are deleted, keeping
    the N-1 inner vertices and the N-2 inner edges."""
    n_edges = sum(cf)
    directions = []
    for i, a in enumerate(cf):
        directions.extend([i % 2 == 1] * a)
    inner = directions[1:-1] if n_edges >= 2 else []
    vertices = max(n_edges - 1, 0)
    return OrientedPath(vertices, tuple(inner))


def left_delete(g: OrientedPath, count: int) -> OrientedPath:
    """Remove the leftmost ``count`` vertices (clamped at the empty graph)."""
    keep = max(g.vertices - count, 0)
    return OrientedPath(keep, g.arcs[len(g.arcs) - max(keep - 1, 0):] if keep else ())


def closure_poly(g: OrientedPath) -> LaurentPoly:
    """Generating function sum q^|X| over closure sets X: no arc may
    leave X.  Linear scan with the membership of the previous vertex as
    the only state."""
    if g.vertices == 0:
        return ONE
    # state 0: previous vertex out, state 1: in
    out, inn = ONE, qpow(1)
    for arc_right in g.arcs:
        nxt_out, nxt_inn = LaurentPoly.zero(), LaurentPoly.zero()
        for prev_in, weight in ((False, out), (True, inn)):
            if weight.is_zero:
                continue
            for cur_in in (False, True):
                if arc_right and prev_in and not cur_in:
                    continue  # arc prev -> cur leaves X
                if not arc_right and cur_in and not prev_in:
                    continue  # arc cur -> prev leaves X
                if cur_in:
                    nxt_inn = nxt_inn + weight.shift(1)
                else:
                    nxt_out = nxt_out + weight
        out, inn = nxt_out, nxt_inn
    return out + inn


def closure_poly_brute(g: OrientedPath) -> LaurentPoly:
    """Same polynomial by testing all 2^V subsets; oracle for tests."""
    if g.vertices > 20:
        raise ValueError("brute force capped at 20 vertices")
    coeffs: dict[int, int] = {}
    for mask in range(1 << g.vertices):
        ok = True
        for i, arc_right in enumerate(g.arcs):
            a, b = (mask >> i) & 1, (mask >> (i + 1)) & 1
            src, dst = (a, b) if arc_right else (b, a)
            if src and not dst:
                ok = False
                break
        if ok:
            size = bin(mask).count("1")
            coeffs[size] = coeffs.get(size, 0) + 1
    return LaurentPoly(coeffs)


def qdeform_via_graph(r: int, s: int) -> RatFunc:
    """[r/s]_q for r/s > 1 as closure polynomial of the path over the
    closure polynomial of the path with the first block deleted."""
    if s < 1 or r <= s:
        raise UnsupportedDomain("the closure-set route needs r/s > 1")
    g = gcd(r, s)
    cf = cf_expand(r // g, s // g)
    big = closure_graph(cf)
    small = left_delete(big, cf[0])
    return RatFunc(closure_poly(big), closure_poly(small))
