"""Enumeration and sampling of valid triples and fixed points.

Used by the crosscheck command and the randomized test suites.
"""

from __future__ import annotations

import itertools
from typing import Iterator, Optional

from . import kernels, weyl
from .triples import Triple, validate_triple, vexillary_from_triple
from .weyl import WeylElement


def _pq_bounds(lt: str, n: int):
    if lt == "A":
        return (1, n), (0, n)
    if lt in ("B", "C"):
        return (1, n), (1, n)
    return (0, n - 1), (0, n - 1)


def valid_triples(lt: str, n: int, max_s: Optional[int] = None) -> Iterator[Triple]:
    """Every valid triple of the group, in a deterministic order."""
    (plo, phi), (qlo, qhi) = _pq_bounds(lt, n)
    kcap = 1 if lt == "D" else 0
    smax = max_s if max_s is not None else n
    for s in range(1, smax + 1):
        for p in itertools.combinations_with_replacement(range(plo, phi + 1), s):
            for q in itertools.combinations_with_replacement(range(qlo, qhi + 1), s):
                for k in _k_choices(lt, n, p, q, kcap):
                    t = Triple(lt, n, k, p, q)
                    if validate_triple(t).ok:
                        yield t


def _k_choices(lt, n, p, q, kcap):
    s = len(p)
    caps = [min(p[i], q[i]) + kcap for i in range(s)]

    def rec(i, prev, acc):
        if i == s:
            yield tuple(acc)
            return
        lo = prev + 1
        hi = caps[i]
        if i > 0:
            hi = min(hi, prev + (p[i] - p[i - 1]) + (q[i] - q[i - 1]) - 1)
        if lt == "A":
            lo = max(lo, p[i] + q[i] - n)
        for k in range(lo, hi + 1):
            acc.append(k)
            yield from rec(i + 1, k, acc)
            acc.pop()

    yield from rec(0, 0, [])


def group_windows_above(t: Triple) -> Iterator[WeylElement]:
    """All fixed points v >= w(tau), exhaustively over the group.

    For type D triples whose vexillary window lies in the odd component,
    the windows range over that component and the ambient order is used.
    """
    w = vexillary_from_triple(t)
    lt, n = t.lie_type, t.n
    if lt == "A":
        for v in weyl.elements("A", n):
            if weyl.bruhat_leq(w, v):
                yield v
        return
    odd = lt == "D" and not w.is_even_signed
    for perm in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            if lt == "D" and (signs.count(-1) % 2 == 0) == odd:
                continue
            win = tuple(s * x for s, x in zip(signs, perm))
            v = WeylElement.ambient(lt, n, win)
            if weyl.bruhat_leq(w, v):
                yield v


def random_valid_triple(rng, lt: str, n: int, max_s: int = 4) -> Triple:
    """Rejection-sample a valid triple."""
    (plo, phi), (qlo, qhi) = _pq_bounds(lt, n)
    kcap = 1 if lt == "D" else 0
    while True:
        s = rng.randint(1, min(n, max_s))
        p = sorted(rng.randint(plo, phi) for _ in range(s))
        q = sorted(rng.randint(qlo, qhi) for _ in range(s))
        k = []
        ok = True
        for i in range(s):
            lo = (k[-1] + 1) if k else 1
            hi = min(p[i], q[i]) + kcap
            if i > 0:
                hi = min(hi, k[-1] + (p[i] - p[i - 1]) + (q[i] - q[i - 1]) - 1)
            if lt == "A":
                lo = max(lo, p[i] + q[i] - n)
            if lo > hi:
                ok = False
                break
            k.append(rng.randint(lo, hi))
        if not ok:
            continue
        t = Triple(lt, n, tuple(k), tuple(p), tuple(q))
        if validate_triple(t).ok:
            return t


def random_window_above(rng, t: Triple, max_steps: int = 12) -> WeylElement:
    """Random Bruhat-ascending walk from w(tau) by simple reflections."""
    v = vexillary_from_triple(t)
    lt, n = t.lie_type, t.n
    glt = lt if (lt != "D" or v.is_even_signed) else None  # None: ambient walk
    steps = rng.randint(0, max_steps)
    win = v.window
    for _ in range(steps):
        idx = list(weyl.simple_indices("D" if lt == "D" else lt, n))
        rng.shuffle(idx)
        for i in idx:
            cand = kernels.apply_right(win, i, "D" if lt == "D" else lt)
            if glt is not None:
                if kernels.length(cand, glt) > kernels.length(win, glt):
                    win = cand
                    break
            else:
                # ambient component: accept any step that rises in the
                # hyperoctahedral order
                if kernels.length(cand, "B") > kernels.length(win, "B") and \
                        kernels.bruhat_leq_lift(win, cand, "B"):
                    win = cand
                    break
    return WeylElement.ambient(lt, n, win)
