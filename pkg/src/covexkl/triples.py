"""Triples, weak triples, vexillary elements and their profile matrices.

A triple (k, p, q) encodes the essential rank conditions of a vexillary
(signed) permutation.  The gap condition, uniformly across the four
types, is

    k_{i+1} - k_i  <  (p_{i+1} - p_i) + (q_{i+1} - q_i),

equivalently: the step values n - p_i - q_i + k_i are strictly
decreasing.  Weak triples satisfy the same inequality non-strictly.

Each triple maps to a 2 x d matrix (a_1..a_d; b_0..b_{d-1}) describing a
lattice-path profile: for type A through the partition complement of the
step sequence, for types B/C through a_i = k_i - k_{i-1} and the column
positions lam_i = p_i + q_i, and for type D through the type C recipe
applied to the shifted triple (k, p+1, q+1).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

from . import weyl
from .errors import CovexError, InvalidTripleError, NotInVarietyError
from .weyl import WeylElement


@dataclass(frozen=True)
class Triple:
    lie_type: str
    n: int
    k: tuple
    p: tuple
    q: tuple

    def __post_init__(self):
        object.__setattr__(self, "k", tuple(int(x) for x in self.k))
        object.__setattr__(self, "p", tuple(int(x) for x in self.p))
        object.__setattr__(self, "q", tuple(int(x) for x in self.q))

    @property
    def s(self) -> int:
        return len(self.k)

    def shifted(self) -> "Triple":
        """The type C triple (k, p+1, q+1) attached to a type D triple."""
        return Triple("C", self.n, self.k,
                      tuple(x + 1 for x in self.p),
                      tuple(x + 1 for x in self.q))

    def __str__(self):
        fmt = lambda seq: ",".join(str(x) for x in seq)
        return f"k={fmt(self.k)} p={fmt(self.p)} q={fmt(self.q)}"


@dataclass(frozen=True)
class WeakTriple:
    lie_type: str
    n: int
    k: tuple
    p: tuple
    q: tuple

    @property
    def s(self) -> int:
        return len(self.k)

    def shifted(self) -> "WeakTriple":
        return WeakTriple("C", self.n, self.k,
                          tuple(x + 1 for x in self.p),
                          tuple(x + 1 for x in self.q))


@dataclass(frozen=True)
class ABMatrix:
    """Two-row profile matrix (a_1..a_d over b_0..b_{d-1}).

    Intermediate partitions from the construction are kept for
    inspection: ``steps`` is the step sequence (nu for a triple, mu-steps
    for a weak triple), ``conjugate`` its padded transpose and ``parts``
    the complement partition (type A only).
    """

    a: tuple
    b: tuple
    steps: tuple = ()
    conjugate: tuple = ()
    parts: tuple = ()

    def __post_init__(self):
        if len(self.a) != len(self.b):
            raise CovexError("rows of an ABMatrix must have equal length")
        if any(x < 1 for x in self.a):
            raise CovexError(f"top row must be positive, got {self.a}")
        if any(x < 0 for x in self.b):
            raise CovexError(f"bottom row must be nonnegative, got {self.b}")

    @property
    def d(self) -> int:
        return len(self.a)

    @property
    def width(self) -> int:
        return sum(self.a) + sum(self.b)

    def __str__(self):
        return f"(a={list(self.a)}, b={list(self.b)})"


@dataclass
class ValidationReport:
    ok: bool
    problems: list = field(default_factory=list)
    advisories: list = field(default_factory=list)

    def __bool__(self):
        return self.ok


def _monotone_problems(t) -> list:
    out = []
    s = len(t.k)
    if s == 0 or not (len(t.p) == len(t.q) == s):
        return [f"k, p, q must be nonempty sequences of equal length, got {t}"]
    if any(t.k[i] >= t.k[i + 1] for i in range(s - 1)) or t.k[0] < 1:
        out.append(f"k must be strictly increasing and positive: {list(t.k)}")
    if any(t.p[i] > t.p[i + 1] for i in range(s - 1)):
        out.append(f"p must be weakly increasing: {list(t.p)}")
    if any(t.q[i] > t.q[i + 1] for i in range(s - 1)):
        out.append(f"q must be weakly increasing: {list(t.q)}")
    return out


def _range_problems(t) -> list:
    out = []
    lt, n = t.lie_type, t.n
    if lt == "A":
        plo, phi, qlo, qhi = 1, n, 0, n
    elif lt in ("B", "C"):
        plo, phi, qlo, qhi = 1, n, 1, n
    else:
        plo, phi, qlo, qhi = 0, n - 1, 0, n - 1
    for i, (pi, qi) in enumerate(zip(t.p, t.q), start=1):
        if not plo <= pi <= phi:
            out.append(f"p_{i}={pi} outside [{plo},{phi}] for type {lt}, n={n}")
        if not qlo <= qi <= qhi:
            out.append(f"q_{i}={qi} outside [{qlo},{qhi}] for type {lt}, n={n}")
    kcap = 1 if lt == "D" else 0  # D rank windows have one extra slot
    for i, (ki, pi, qi) in enumerate(zip(t.k, t.p, t.q), start=1):
        if ki > min(pi, qi) + kcap:
            out.append(f"k_{i}={ki} exceeds min(p_{i},q_{i})"
                       f"{'+1' if kcap else ''}={min(pi, qi) + kcap}")
    if lt == "A":
        for i, (ki, pi, qi) in enumerate(zip(t.k, t.p, t.q), start=1):
            if n - pi - qi + ki < 0:
                out.append(f"step value n-p_{i}-q_{i}+k_{i}={n - pi - qi + ki} "
                           "is negative")
    return out


def _gap_problems(t, strict: bool) -> list:
    out = []
    for i in range(len(t.k) - 1):
        dk = t.k[i + 1] - t.k[i]
        dpq = (t.p[i + 1] - t.p[i]) + (t.q[i + 1] - t.q[i])
        if (dk >= dpq) if strict else (dk > dpq):
            rel = "<" if strict else "<="
            out.append(f"gap inequality fails at i={i + 1}: "
                       f"k_{i + 2}-k_{i + 1}={dk} {rel} dp+dq={dpq} required")
    return out


def _fusion_advisories(t) -> list:
    """Side conditions bounding the profile against the 2n box (signed types).

    The operative content, read off the worked examples: every suffix
    deficit (a_d+..+a_j) - (b_{d-1}+..+b_j) must stay within the slack
    2n - (p_s + q_s) so that the bracket word closes without plus-marked
    pairs.  Cases beyond the bound remain valid inputs; the labelled-tree
    and recursion engines handle the plus-marked regime.
    """
    h = _matrix_signed(t.k, t.p, t.q)
    n = t.n
    lam = sum(h.a) + sum(h.b)
    pad = 2 * n - lam
    out = []
    d = h.d
    if h.a[d - 1] > pad:
        out.append(f"boundary condition (1): a_d={h.a[d - 1]} exceeds "
                   f"2n-lam_d={pad}; the profile word will carry plus marks")
    for j in range(d - 1, 0, -1):
        deficit = sum(h.a[j:]) - sum(h.b[j:])
        if deficit > pad:
            out.append(f"boundary condition (2) at i={j + 1}: suffix deficit "
                       f"{deficit} exceeds 2n-lam_d={pad}")
    return out


def validate_triple(t: Triple) -> ValidationReport:
    """Check the defining inequalities; returns a structured report.

    Violations of monotonicity, bounds or the gap inequalities make the
    triple invalid.  The two boundary conditions of the signed types are
    reported as advisories: they mark where the plain recursion regime
    ends, not where the input stops being meaningful.
    """
    problems = _monotone_problems(t)
    if not problems:
        problems += _range_problems(t)
        problems += _gap_problems(t, strict=True)
    advisories = []
    if not problems and t.lie_type in ("B", "C", "D"):
        advisories = _fusion_advisories(t.shifted() if t.lie_type == "D" else t)
    return ValidationReport(not problems, problems, advisories)


def require_valid(t: Triple) -> None:
    rep = validate_triple(t)
    if not rep.ok:
        raise InvalidTripleError(rep.problems)


# ---------------------------------------------------------------------------
# vexillary element
# ---------------------------------------------------------------------------

def counting_vector(lt: str, n: int, window, p, q) -> tuple:
    """The rank statistics (one per condition) of a window."""
    if lt == "A":
        return tuple(sum(1 for a in range(pi) if window[a] > n - qi)
                     for pi, qi in zip(p, q))
    off = 1 if lt in ("B", "C") else 0
    out = []
    for pi, qi in zip(p, q):
        lo = n + off - pi  # positions >= lo (1-based)
        hi = -(n + off - qi)  # values <= hi
        out.append(sum(1 for a in range(lo - 1, n) if window[a] <= hi))
    return tuple(out)


@lru_cache(maxsize=None)
def vexillary_from_triple(t: Triple) -> WeylElement:
    """The Bruhat-minimal window realizing the rank conditions.

    Greedy construction: block i places its k_i - k_{i-1} new hits on the
    free positions hugging the block boundary and the smallest admissible
    values past the threshold, paired in increasing order; the remaining
    positions are filled with the remaining values in increasing order.
    Minimality is exercised against brute-force search in the tests.
    """
    require_valid(t)
    lt, n = t.lie_type, t.n
    window = [0] * n
    used_vals = set()
    used_pos = set()
    kprev = 0
    for ki, pi, qi in zip(t.k, t.p, t.q):
        m = ki - kprev
        kprev = ki
        if lt == "A":
            pos = [a for a in range(pi, 0, -1) if a not in used_pos][:m]
            vals = [v for v in range(n - qi + 1, n + 1) if v not in used_vals][:m]
        else:
            off = 1 if lt in ("B", "C") else 0
            lo = n + off - pi
            pos = [a for a in range(lo, n + 1) if a not in used_pos][:m]
            vals = [-v for v in range(n + off - qi, n + 1) if v not in used_vals][:m]
            vals.sort()
        if len(pos) < m or len(vals) < m:
            raise InvalidTripleError(
                [f"no window realizes condition k={ki}, p={pi}, q={qi}"])
        for a, v in zip(sorted(pos), vals):
            window[a - 1] = v
            used_pos.add(a)
            used_vals.add(abs(v))
    rest_vals = [v for v in range(1, n + 1) if v not in used_vals]
    rest_pos = [a for a in range(1, n + 1) if a not in used_pos]
    for a, v in zip(rest_pos, rest_vals):
        window[a - 1] = v
    got = counting_vector(lt, n, window, t.p, t.q)
    if got != t.k:
        raise InvalidTripleError(
            [f"construction self-check failed: statistics {got} != k={t.k}"])
    return WeylElement.ambient(lt, n, window)


def weak_triple_from_pair(t: Triple, v: WeylElement) -> WeakTriple:
    """Read the weak triple of a fixed-point window v above w(tau)."""
    if v.lie_type != t.lie_type or v.n != t.n:
        raise CovexError(f"window {v!r} does not match triple group "
                         f"{t.lie_type}_{t.n}")
    w = vexillary_from_triple(t)
    if not weyl.bruhat_leq(w, v):
        raise NotInVarietyError(
            f"window {v} is not Bruhat-above w(tau)={w}")
    kp = counting_vector(t.lie_type, t.n, v.window, t.p, t.q)
    for i in range(len(kp) - 1):
        dk = kp[i + 1] - kp[i]
        dpq = (t.p[i + 1] - t.p[i]) + (t.q[i + 1] - t.q[i])
        if dk < 0 or dk > dpq:
            raise CovexError(
                f"weak gap inequality fails at i={i + 1} for v={v}: "
                f"dk={dk}, dp+dq={dpq}")
    return WeakTriple(t.lie_type, t.n, kp, t.p, t.q)


# ---------------------------------------------------------------------------
# profile matrices
# ---------------------------------------------------------------------------

def _matrix_type_a(n: int, k, p, q) -> ABMatrix:
    # step sequence: constant value n - p_i - q_i + k_i on (k_{i-1}, k_i]
    steps = []
    kprev = 0
    for ki, pi, qi in zip(k, p, q):
        steps.extend([n - pi - qi + ki] * (ki - kprev))
        kprev = ki
    conj = tuple(sum(1 for sj in steps if sj >= i) for i in range(1, n + 1))
    parts = tuple(n - c for c in conj)  # weakly increasing, in [0, n]
    a, b = [], []
    prev = None
    for x in parts:
        if x == prev:
            a[-1] += 1
        else:
            b.append(x if prev is None else x - prev)
            a.append(1)
            prev = x
    return ABMatrix(tuple(a), tuple(b), steps=tuple(steps),
                    conjugate=conj, parts=parts)


def _matrix_signed(k, p, q) -> ABMatrix:
    lam = [pi + qi for pi, qi in zip(p, q)]
    a = [k[0]] + [k[i] - k[i - 1] for i in range(1, len(k))]
    b = [lam[0] - a[0]]
    for i in range(1, len(k)):
        b.append(lam[i] - lam[i - 1] - a[i])
    return ABMatrix(tuple(a), tuple(b), steps=tuple(lam))


def h_matrix(t: Triple) -> ABMatrix:
    """Profile matrix of the triple (type D uses the shifted triple)."""
    require_valid(t)
    if t.lie_type == "A":
        return _matrix_type_a(t.n, t.k, t.p, t.q)
    tt = t.shifted() if t.lie_type == "D" else t
    return _matrix_signed(tt.k, tt.p, tt.q)


def reduce_weak_triple(wt: WeakTriple) -> WeakTriple:
    """Drop redundant conditions: repeated k' keeps the earlier index."""
    idx = [0]
    for i in range(1, wt.s):
        if wt.k[i] == wt.k[idx[-1]]:
            continue
        idx.append(i)
    pick = lambda seq: tuple(seq[i] for i in idx)
    return WeakTriple(wt.lie_type, wt.n, pick(wt.k), pick(wt.p), pick(wt.q))


def k_matrix(t: Triple, wt: WeakTriple) -> ABMatrix:
    """Profile matrix of the weak triple.

    Type A merges coincident step values automatically through the
    run-length encoding; the signed types only need repeated-k' columns
    dropped (the bottom row absorbs saturated gaps as zero entries).
    """
    if (wt.lie_type, wt.n, wt.p, wt.q) != (t.lie_type, t.n, t.p, t.q):
        raise CovexError("weak triple does not belong to the given triple")
    if t.lie_type == "A":
        return _matrix_type_a(t.n, wt.k, wt.p, wt.q)
    red = reduce_weak_triple(wt.shifted() if t.lie_type == "D" else wt)
    return _matrix_signed(red.k, red.p, red.q)


def covexillary_pair(t: Triple, v: WeylElement):
    """Convenience: (w(tau), weak triple, H, K) for a triple and window."""
    w = vexillary_from_triple(t)
    wt = weak_triple_from_pair(t, v)
    return w, wt, h_matrix(t), k_matrix(t, wt)
