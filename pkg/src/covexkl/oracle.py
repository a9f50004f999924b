"""Ground-truth Kazhdan-Lusztig polynomials at small rank.

The classical left-descent recursion with mu-corrections, memoized per
group.  For a left descent s of w and an s-maximal x (arranged by
climbing x through the descents of w, which leaves P unchanged):

    P_{x,w} = P_{sx,sw} + q P_{x,sw}
              - sum mu(z,sw) q^((l(w)-l(z))/2) P_{x,z}

summed over x <= z <= sw with sz < z.  Memo keys are canonicalized
through the inverse and longest-element symmetries.  A group-size budget
(default 50000, env COVEX_KL_BUDGET) keeps accidental large-rank calls
from running away.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from . import kernels, weyl
from .errors import BudgetExceededError, CovexError
from .polyq import ONE, ZERO, QPoly
from .weyl import WeylElement

DEFAULT_BUDGET = 50_000


def resolve_budget(budget=None) -> int:
    if budget is not None:
        return int(budget)
    env = os.environ.get("COVEX_KL_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


def _compose(u: tuple, v: tuple) -> tuple:
    return tuple(u[x - 1] if x > 0 else -u[-x - 1] for x in v)


def _invert(w: tuple) -> tuple:
    out = [0] * len(w)
    for pos, x in enumerate(w, start=1):
        if x > 0:
            out[x - 1] = pos
        else:
            out[-x - 1] = -pos
    return tuple(out)


@dataclass
class _GroupContext:
    lt: str
    n: int
    w0: tuple
    memo: dict = field(default_factory=dict)
    ideals: dict = field(default_factory=dict)
    intervals: dict = field(default_factory=dict)
    upsets: dict = field(default_factory=dict)  # x -> [(top, interval list)]
    lengths: dict = field(default_factory=dict)
    _elements: list = None

    def leq(self, u: tuple, w: tuple) -> bool:
        if self.lt == "A":
            return kernels.bruhat_leq_a(u, w)
        return kernels.bruhat_leq_lift(u, w, self.lt)

    def length(self, w: tuple) -> int:
        hit = self.lengths.get(w)
        if hit is None:
            hit = kernels.length(w, self.lt)
            self.lengths[w] = hit
        return hit

    def elements(self) -> list:
        if self._elements is None:
            self._elements = [e.window for e in weyl.elements(self.lt, self.n)]
        return self._elements

    def ideal(self, w: tuple) -> list:
        hit = self.ideals.get(w)
        if hit is None:
            # filter the smallest cached ideal that dominates w
            best = None
            for top, lst in self.ideals.items():
                if (best is None or len(lst) < len(best)) and self.leq(w, top):
                    best = lst
            src = best if best is not None else self.elements()
            leq = self.leq
            hit = [z for z in src if leq(z, w)]
            self.ideals[w] = hit
        return hit

    def interval(self, x: tuple, w: tuple) -> list:
        key = (x, w)
        hit = self.intervals.get(key)
        if hit is None:
            leq = self.leq
            best = None
            for top, lst in self.upsets.setdefault(x, []):
                if (best is None or len(lst) < len(best)) and leq(w, top):
                    best = lst
            if best is not None:
                hit = [z for z in best if leq(z, w)]
            else:
                hit = [z for z in self.ideal(w) if leq(x, z)]
            self.intervals[key] = hit
            self.upsets[x].append((w, hit))
        return hit

    def canon_key(self, x: tuple, w: tuple) -> tuple:
        xi, wi = _invert(x), _invert(w)
        cx = _compose(self.w0, _compose(x, self.w0))
        cw = _compose(self.w0, _compose(w, self.w0))
        return min((x, w), (xi, wi), (cx, cw), (_invert(cx), _invert(cw)))


_contexts: dict = {}


def _context(lt: str, n: int) -> _GroupContext:
    key = (lt, n)
    ctx = _contexts.get(key)
    if ctx is None:
        ctx = _GroupContext(lt, n, weyl.longest_element(lt, n).window)
        _contexts[key] = ctx
    return ctx


def _kl(ctx: _GroupContext, x: tuple, w: tuple) -> QPoly:
    if x == w:
        return ONE
    lt = ctx.lt
    if not ctx.leq(x, w):
        return ZERO
    # climb x through the left descents of w; P is unchanged
    while True:
        moved = False
        lo = 1 if lt == "A" else 0
        for i in range(lo, ctx.n):
            if kernels.is_left_descent(w, i, lt) and not kernels.is_left_descent(x, i, lt):
                x = kernels.apply_left(x, i, lt)
                moved = True
        if not moved:
            break
    if x == w:
        return ONE
    key = ctx.canon_key(x, w)
    hit = ctx.memo.get(key)
    if hit is not None:
        return hit
    s = kernels.first_left_descent(w, lt)
    sw = kernels.apply_left(w, s, lt)
    sx = kernels.apply_left(x, s, lt)
    total = _kl(ctx, sx, sw) + _kl(ctx, x, sw).shift(1)
    lw = ctx.length(w)
    lsw = lw - 1
    is_ld = kernels.is_left_descent
    for z in ctx.interval(x, sw):
        if not is_ld(z, s, lt):
            continue
        lz = ctx.length(z)
        if (lsw - lz) % 2 == 0:
            continue
        mu = _kl(ctx, z, sw).coeff((lsw - lz - 1) // 2)
        if mu:
            total = total - (_kl(ctx, x, z) * mu).shift((lw - lz) // 2)
    ctx.memo[key] = total
    return total


def _require_group(v: WeylElement, w: WeylElement):
    if v.lie_type != w.lie_type or v.n != w.n:
        raise CovexError("oracle arguments live in different groups")
    if not (v.in_group and w.in_group):
        raise CovexError("oracle needs even-signed type D windows")


def kl_oracle(v: WeylElement, w: WeylElement, budget=None) -> QPoly:
    """P_{v,w}(q) by the classical recursion; raises when v is not <= w."""
    _require_group(v, w)
    limit = resolve_budget(budget)
    order = weyl.group_order(v.lie_type, v.n)
    if order > limit:
        raise BudgetExceededError(
            f"group order {order} exceeds the oracle budget {limit}")
    if not weyl.bruhat_leq(v, w):
        raise CovexError(f"{v} is not below {w} in Bruhat order")
    # type B shares the type C Coxeter structure; compute there
    lt = "C" if v.lie_type == "B" else v.lie_type
    ctx = _context(lt, v.n)
    return _kl(ctx, v.window, w.window)


def mu_coefficient(v: WeylElement, w: WeylElement, budget=None) -> int:
    """mu(v,w): the top-degree coefficient bound of P_{v,w}."""
    diff = weyl.length(w) - weyl.length(v)
    if diff <= 0 or diff % 2 == 0:
        return 0
    return kl_oracle(v, w, budget).coeff((diff - 1) // 2)


def bruhat_interval(v: WeylElement, w: WeylElement, budget=None) -> set:
    """All z with v <= z <= w."""
    _require_group(v, w)
    limit = resolve_budget(budget)
    order = weyl.group_order(v.lie_type, v.n)
    if order > limit:
        raise BudgetExceededError(
            f"group order {order} exceeds the oracle budget {limit}")
    lt = "C" if v.lie_type == "B" else v.lie_type
    ctx = _context(lt, v.n)
    if not weyl.bruhat_leq(v, w):
        return set()
    return {WeylElement(v.lie_type, v.n, z)
            for z in ctx.interval(v.window, w.window)}


class KLTable:
    """All pairs of a small group, computed eagerly (test utility)."""

    def __init__(self, lie_type: str, n: int, budget=None):
        self.lie_type = lie_type
        self.n = n
        self.entries = {}
        self.mu = {}
        els = list(weyl.elements(lie_type, n))
        for w in els:
            for v in els:
                if weyl.bruhat_leq(v, w):
                    p = kl_oracle(v, w, budget)
                    self.entries[(v, w)] = p
                    diff = weyl.length(w) - weyl.length(v)
                    if diff > 0 and diff % 2:
                        self.mu[(v, w)] = p.coeff((diff - 1) // 2)
