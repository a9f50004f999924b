"""The q-binomial recursion on (profile matrix, capacity) pairs.

The core step: find the smallest column index i such that the hill
between valleys i and i+1 is dominated (b_i <= a_i and a_{i+1} < b_{i+1},
with frame sentinels a_0 = b_d = infinity), fuse the two columns, and sum
over the merged capacity t with Gaussian-binomial weights:

    P(H, c) = sum_t q^((c_i-t)(c_{i+1}-t))
              * [a_{i+1} - c_i + c_{i+1}, c_{i+1} - t]
              * [b_i + c_i - c_{i+1}, c_i - t] * P(H_1, c(t)).

That recursion computes the polynomial whenever the profile word closes
inside its box without plus-marked pairs; this covers all of type A.
In the signed types, runs of the word can outlive the supply of closing
steps.  Unmatched openers cut the word into independently matched
segments; they pair up into even-labelled bridge arcs over the odd
segments, and a leftover opener caps the final segment and forces labels
at or below its own to be even everywhere before it.  The engine below
evaluates that regime exactly: it sums over the bridge and cap labels in
closed form and evaluates each matched segment with a memoized chain sum,
never enumerating labellings.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .capacity_tree import Capacity, capacity_and_pad
from .errors import CovexError
from .polyq import ONE, ZERO, QPoly, q_binomial
from .triples import ABMatrix, Triple, covexillary_pair
from .weyl import WeylElement


@dataclass(frozen=True)
class MergeSite:
    i: int


def _site(a: tuple, b: tuple) -> int:
    d = len(a)
    for i in range(d):
        left_ok = i == 0 or b[i] <= a[i - 1]
        right_ok = i == d - 1 or a[i] < b[i + 1]
        if left_ok and right_ok:
            return i
    raise CovexError(f"no merge site in a={a}, b={b}")


def find_merge_site(h: ABMatrix) -> MergeSite:
    """Smallest i with b_i <= a_i and a_{i+1} below the next rise."""
    if h.d < 1:
        raise CovexError("empty matrix has no merge site")
    return MergeSite(_site(h.a, h.b))


def _merge(a: tuple, b: tuple, i: int):
    d = len(a)
    if i == 0:
        na = a[1:]
    else:
        na = a[: i - 1] + (a[i - 1] + a[i],) + a[i + 1:]
    if i == d - 1:
        nb = b[:-1]
    else:
        nb = b[:i] + (b[i] + b[i + 1],) + b[i + 2:]
    return na, nb


def merge(h: ABMatrix, site: MergeSite) -> ABMatrix:
    """Fuse columns at the site; boundary merges drop the orphan entry."""
    na, nb = _merge(h.a, h.b, site.i)
    return ABMatrix(na, nb)


@lru_cache(maxsize=None)
def _plain_rec(a: tuple, b: tuple, c: tuple) -> QPoly:
    # c carries the leading 0: len(c) == len(a) + 1
    d = len(a)
    if d == 0:
        return ONE
    i = _site(a, b)
    ci, cj = c[i], c[i + 1]
    na, nb = _merge(a, b, i)
    total = ZERO
    for t in range(min(ci, cj) + 1):
        f1 = q_binomial(a[i] - ci + cj, cj - t)
        if f1.is_zero():
            continue
        f2 = q_binomial(b[i] + ci - cj, ci - t)
        if f2.is_zero():
            continue
        sub = _plain_rec(na, nb, c[:i] + (t,) + c[i + 2:])
        total = total + (f1 * f2 * sub).shift((ci - t) * (cj - t))
    return total


# ---------------------------------------------------------------------------
# the plus-marked regime
# ---------------------------------------------------------------------------

def _dead_counts(a: tuple, b: tuple, pad: int) -> list:
    """Unmatched openers per alpha run (they are the leading ones)."""
    d = len(a)
    dead = [0] * d
    credit = pad
    for j in range(d - 1, -1, -1):
        m = min(a[j], credit)
        dead[j] = a[j] - m
        credit = credit - m + b[j]
    return dead


class _Arc:
    __slots__ = ("bound", "even", "anchor", "fixed", "children")

    def __init__(self, bound):
        self.bound = bound
        self.even = False  # closes on the type D box wall
        self.anchor = None  # contact-chain anchor tag ("wall" or "term")
        self.fixed = None  # label pinned by the outer anchor sum
        self.children = []


def _forest_gf(roots, floor: int, theta: dict, memo) -> QPoly:
    out = ONE
    for r in roots:
        out = out * _arc_gf(r, floor, theta, memo)
    return out


def _arc_gf(arc, floor: int, theta: dict, memo) -> QPoly:
    key = (id(arc), floor)
    hit = memo.get(key)
    if hit is not None:
        return hit
    total = ZERO
    choices = range(floor, arc.bound + 1) if arc.fixed is None else (
        (arc.fixed,) if arc.fixed >= floor else ())
    for ell in choices:
        if ell % 2:
            if arc.even:
                continue
            if arc.anchor is not None and ell <= theta[arc.anchor]:
                continue
        total = total + _forest_gf(arc.children, ell, theta, memo).shift(ell)
    memo[key] = total
    return total


def _signed_engine(a: tuple, b: tuple, cvec: tuple, pad: int, wall: int
                   ) -> QPoly:
    """Closed-form evaluation of the signed-type label sum.

    Builds the arc system of the word over global positions, groups the
    unmatched openers into even-labelled bridges (plus a cap when their
    number is odd), and multiplies out per-arc label sums with floors.
    ``wall`` is the box boundary position of type D (0 disables it): the
    arc closing there takes even labels and anchors a contact chain, like
    the terminal cap of a type B/C word.
    """
    d = len(a)
    pos = 0
    stack = []  # (arc, opener position, mark into closed)
    closed = []  # (arc, opener position, closer position), unabsorbed

    def close_run(count):
        nonlocal pos
        for _ in range(count):
            pos += 1
            if stack:
                arc, opos, mark = stack.pop()
                if pos == wall:
                    arc.even = True
                arc.children = [c for c, _, _ in closed[mark:]]
                del closed[mark:]
                closed.append((arc, opos, pos))

    runs = []
    for j in range(d):
        runs.append(("b", b[j], 0))
        runs.append(("a", a[j], j))
    runs.append(("b", pad, 0))
    for kind, count, j in runs:
        if kind == "b":
            close_run(count)
        else:
            for _ in range(count):
                pos += 1
                stack.append((_Arc(cvec[j]), pos, len(closed)))
    leftovers = [(p, arc.bound) for arc, p, _ in stack]
    u = len(leftovers)

    by_close = {cpos: (arc, opos) for arc, opos, cpos in closed}

    def chain_from(open_pos, tag):
        probe = open_pos
        while probe - 1 in by_close:
            arc2, opos2 = by_close[probe - 1]
            if arc2.anchor is not None:
                break
            arc2.anchor = tag
            probe = opos2

    wall_arc = None
    wall_open = None
    if wall in by_close:
        wall_arc, wall_open = by_close[wall]
    terminal_bound = leftovers[-1][1] if u % 2 else None
    if terminal_bound is not None:
        chain_from(leftovers[-1][0], "term")
    if wall_arc is not None:
        chain_from(wall_open, "wall")

    # group the matched top-level arcs between consecutive unmatched openers
    cuts = [p for p, _ in leftovers]
    groups = [[] for _ in range(u + 1)]
    for arc, p, _ in closed:
        slot = sum(1 for cut in cuts if cut < p)
        groups[slot].append(arc)

    def assemble(theta: dict) -> QPoly:
        out = ONE
        for i in range(u // 2):
            # a bridge pairs openers 2i, 2i+1 and closes in the latter's
            # valley; its label is even and floors the span it wraps
            bound = leftovers[2 * i + 1][1]
            memo = {}
            acc = ZERO
            for m in range(0, bound + 1, 2):
                acc = acc + _forest_gf(groups[2 * i + 1], m, theta,
                                       memo).shift(m)
            out = out * acc
        for k in range(0, u if u % 2 else u + 1, 2):
            memo = {}
            out = out * _forest_gf(groups[k], 0, theta, memo)
        return out

    wall_vals = ((None,) if wall_arc is None
                 else range(0, wall_arc.bound + 1, 2))
    term_vals = ((None,) if terminal_bound is None
                 else range(0, terminal_bound + 1, 2))
    total = ZERO
    for s_w in wall_vals:
        if wall_arc is not None:
            wall_arc.fixed = s_w
        for s_t in term_vals:
            theta = {"wall": s_w, "term": s_t}
            part = assemble(theta)
            if terminal_bound is not None:
                memo = {}
                tail = _forest_gf(groups[-1], s_t, theta, memo)
                part = (part * tail).shift(s_t)
            total = total + part
    return total


# ---------------------------------------------------------------------------
# public entry points
# ---------------------------------------------------------------------------

def kl_via_inductive(h: ABMatrix, c, *, lie_type: str = "A",
                     n: Optional[int] = None,
                     total: Optional[int] = None) -> QPoly:
    """Evaluate the recursion for a profile matrix and capacity vector.

    Type A (and any matched signed case) runs the plain merge recursion.
    Signed types need the word length to size the box (``total``, or 2n
    from the rank); when the word overflows it, the plus-marked engine
    takes over.
    """
    cv = c.c if isinstance(c, Capacity) else tuple(c)
    if len(cv) != h.d:
        raise CovexError(f"capacity length {len(cv)} != matrix columns {h.d}")
    if h.d == 0:
        return ONE
    if total is None and n is not None and lie_type != "A":
        total = 2 * n
    if lie_type == "A" or total is None:
        return _plain_rec(h.a, h.b, (0,) + cv)
    pad = total - h.width
    if pad < 0:
        raise CovexError(f"profile width {h.width} exceeds the word length")
    if lie_type == "D":
        wall = total - 1 if total % 2 else total
        return _signed_engine(h.a, h.b, cv, pad, wall)
    if any(_dead_counts(h.a, h.b, pad)):
        return _signed_engine(h.a, h.b, cv, pad, 0)
    return _plain_rec(h.a, h.b, (0,) + cv)


def kl_via_inductive_pair(t: Triple, v: WeylElement) -> QPoly:
    """Full pipeline: triple and window to polynomial via the recursion."""
    w, wt, h, k = covexillary_pair(t, v)
    h_adj, cap, total = capacity_and_pad(h, k, t.lie_type, t.n)
    return kl_via_inductive(h_adj, cap, lie_type=t.lie_type, total=total)
