"""Fence posets attached to n and their order-ideal lattices.

The principal prefix b_1 ... b_r of the binary expansion (everything
before the rightmost zero) defines a fence on elements x_1, ..., x_r:

    b_i = 0  =>  x_i < x_{i-1}      (i = 2..r)
    b_i = 1  =>  x_i > x_{i-1}

The lattice of order ideals of this fence is order isomorphic to the
lattice of hyperbinary expansions of n; the isomorphism sends an
expansion d to the ideal whose indicator vector is the first r entries
of s(d) - s(bottom).  ``iso_check`` verifies all of this exhaustively
for one n, comparing the full prefix-sum order against ideal
containment on every pair.

``rgf`` is the rank generating function sum q^|I| over ideals; the
weight identity h_q(n) = q^(r+s) * rgf(1/q), with s the number of ones
in the binary expansion of n, and its corollary expressing cw_q(n) as
a quotient of two rank generating functions are exposed as checks.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .hyperbinary import (
    Digits,
    expansions,
    h_q,
    min_element,
    principal_prefix,
    s_vector,
)
from .poly import LaurentPoly, ONE, RatFunc, qpow
from .stern import cw_q


@dataclass(frozen=True)
class FencePoset:
    """The zigzag poset built from a 0/1 prefix; element i is x_i."""

    bits: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.bits)

    def cover_pairs(self) -> tuple[tuple[int, int], ...]:
        """(lower, upper) pairs of 1-based element indices."""
        out = []
        for i in range(2, len(self.bits) + 1):
            if self.bits[i - 1] == 0:
                out.append((i, i - 1))
            else:
                out.append((i - 1, i))
        return tuple(out)


def fence(n: int) -> FencePoset:
    """The fence of n; empty when the binary expansion is all ones."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return FencePoset(principal_prefix(n))


def is_ideal(f: FencePoset, mask: int) -> bool:
    """Is the bitset (bit i-1 for x_i) downward closed?"""
    for lo, hi in f.cover_pairs():
        if (mask >> (hi - 1)) & 1 and not (mask >> (lo - 1)) & 1:
            return False
    return True


def ideals(f: FencePoset) -> tuple[int, ...]:
    """All order ideals as bitsets, sorted by (cardinality, bitset value).

    Built by a left-to-right scan: the constraint between x_i and
    x_{i+1} only involves adjacent elements, so partial choices are
    extended one element at a time.
    """
    states: list[int] = [0]
    if f.size:
        states = [0, 1]
    for i in range(2, f.size + 1):
        rising = f.bits[i - 1] == 1
        nxt = []
        for m in states:
            prev_in = (m >> (i - 2)) & 1
            for cur_in in (0, 1):
                if rising and cur_in and not prev_in:
                    continue  # x_i > x_{i-1}: x_i in forces x_{i-1} in
                if not rising and prev_in and not cur_in:
                    continue  # x_i < x_{i-1}: x_{i-1} in forces x_i in
                nxt.append(m | (cur_in << (i - 1)))
        states = nxt
    states.sort(key=lambda m: (bin(m).count("1"), m))
    return tuple(states)


def rgf(f: FencePoset) -> LaurentPoly:
    """Rank generating function sum q^|I| over ideals, by the same
    adjacent-pair dynamic programming without listing the ideals."""
    if f.size == 0:
        return ONE
    out, inn = ONE, qpow(1)
    for i in range(2, f.size + 1):
        rising = f.bits[i - 1] == 1
        if rising:
            nxt_out, nxt_inn = out + inn, inn.shift(1)
        else:
            nxt_out, nxt_inn = out, (out + inn).shift(1)
        out, inn = nxt_out, nxt_inn
    return out + inn


def rgf_of(n: int) -> LaurentPoly:
    return rgf(fence(n))


def ideal_count(n: int) -> int:
    return rgf_of(n).eval_at_one


# ---------------------------------------------------------------------------
# the order isomorphism with D(n)


def stilde(d: Digits) -> tuple[int, ...]:
    """The first r coordinates of s(d) - s(bottom); always a 0/1 vector
    and the indicator of the ideal matched with d."""
    n = 0
    for dig in d:
        n = 2 * n + dig
    r = len(principal_prefix(n))
    s0 = s_vector(min_element(n))
    sd = s_vector(d)
    out = tuple(sd[i] - s0[i] for i in range(r))
    if any(v not in (0, 1) for v in out):
        raise ArithmeticError(f"reduced prefix sums not 0/1 for {d}")
    return out


@dataclass(frozen=True)
class IsoReport:
    n: int
    size: int
    passed: bool
    detail: str | None = None


def iso_check(n: int) -> IsoReport:
    """Exhaustively confirm D(n) and the ideal lattice are the same
    order: the reduced prefix vectors hit every ideal indicator exactly
    once, and on every pair of expansions full prefix-sum domination
    agrees with containment of the matched ideals."""
    elems = expansions(n)
    f = fence(n)
    r = f.size
    h = len(elems)

    masks = []
    for d in elems:
        st = stilde(d)
        masks.append(sum(1 << i for i, v in enumerate(st) if v))
    if len(set(masks)) != h:
        return IsoReport(n, h, False, "reduced prefix vectors collide")
    if set(masks) != set(ideals(f)):
        return IsoReport(n, h, False, "image is not the set of ideals")

    dtype = object if n >= 2**62 else np.int64
    svecs = np.array([s_vector(d) for d in elems], dtype=dtype)
    if h == 1:
        return IsoReport(n, h, True)
    dom = (svecs[:, None, :] <= svecs[None, :, :]).all(axis=2)
    marr = np.array(masks, dtype=np.int64)
    contained = (marr[:, None] & ~marr[None, :]) == 0
    bad = np.argwhere(dom != contained)
    if len(bad):
        i, j = (int(v) for v in bad[0])
        return IsoReport(
            n, h, False,
            f"order mismatch between {elems[i]} and {elems[j]}: "
            f"domination={bool(dom[i, j])} containment={bool(contained[i, j])}",
        )
    return IsoReport(n, h, True)


# ---------------------------------------------------------------------------
# weight identities


def ones_count(n: int) -> int:
    return bin(n).count("1") if n else 0


def weight_check(n: int, memo: dict[int, LaurentPoly] | None = None) -> bool:
    """h_q(n) = q^(r+s) * rgf(1/q) with r the fence size and s the
    number of ones in the binary expansion of n."""
    r = len(principal_prefix(n))
    s = ones_count(n)
    expected = rgf_of(n).reverse_var().shift(r + s)
    return h_q(n, memo) == expected


def qcw_fence(n: int) -> RatFunc:
    """cw_q(n) written as a quotient of two reversed rank generating
    functions, with the monomial prefix balancing the two weights."""
    if n < 1:
        raise ValueError("n must be >= 1")
    r1 = len(principal_prefix(n - 1))
    s1 = ones_count(n - 1)
    r0 = len(principal_prefix(n))
    s0 = ones_count(n)
    e = (r1 - r0) + (s1 - s0)
    num = rgf_of(n - 1).reverse_var().shift(e)
    den = rgf_of(n).reverse_var()
    return RatFunc(num, den)


def qcw_fence_check(n: int, memo: dict[int, LaurentPoly] | None = None) -> bool:
    return qcw_fence(n) == cw_q(n, memo)


# ---------------------------------------------------------------------------
# exports


def fence_dot(n: int) -> str:
    """Hasse diagram of the fence in DOT form, edges lower -> upper."""
    f = fence(n)
    lines = [f"digraph fence_{n} {{", "  rankdir=BT;"]
    for i in range(1, f.size + 1):
        lines.append(f'  "x{i}";')
    for lo, hi in f.cover_pairs():
        lines.append(f'  "x{lo}" -> "x{hi}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def ideal_members(mask: int, size: int) -> list[int]:
    return [i + 1 for i in range(size) if (mask >> i) & 1]


def ideal_label(mask: int, size: int) -> str:
    return "{" + ",".join(f"x{i}" for i in ideal_members(mask, size)) + "}"


def ideals_dot(n: int) -> str:
    """Hasse diagram of the ideal lattice, edges from smaller ideal to
    the ideal with one more element."""
    f = fence(n)
    masks = ideals(f)
    lines = [f"digraph ideals_{n} {{", "  rankdir=BT;"]
    for m in masks:
        lines.append(f'  "{ideal_label(m, f.size)}";')
    # edges grouped by the smaller ideal keep the output stable
    for m in masks:
        for other in masks:
            diff = other & ~m
            if m & ~other == 0 and diff and diff & (diff - 1) == 0:
                lines.append(
                    f'  "{ideal_label(m, f.size)}" -> "{ideal_label(other, f.size)}";'
                )
    lines.append("}")
    return "\n".join(lines) + "\n"
