"""Lattice-path profiles, capacities, bracket words, and labelled trees.

A profile matrix (a; b) draws a piecewise-linear path from the origin:
up b_0, down a_1, up b_1, ..., down a_d, continuing upward indefinitely
past its right end.  The capacity vector has one entry per valley of the
upper profile: half the vertical gap down to the lower profile at the
same x.

The word of a matrix spells the path as beta-runs (up) and alpha-runs
(down), padded with trailing betas to a fixed total length.  Every alpha
opens a bracket and matches the nearest following free beta; leftover
alphas pair among themselves left to right, a final leftover is
terminal.  Pair nesting is a rooted forest whose edges carry the
capacity bound of the valley their opening alpha descends into; pairs of
two alphas and terminal alphas are plus-marked.

Edge labellings are nonnegative integers, weakly decreasing from the
leaves toward the root and bounded by the capacities.  In the signed
types plus-marked labels must be even, and a label on an edge placed
before the terminal must be even unless it exceeds the terminal's label.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional

from .errors import CovexError
from .polyq import QPoly
from .triples import ABMatrix, Triple, covexillary_pair
from .weyl import WeylElement


# ---------------------------------------------------------------------------
# profiles and capacities
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Profile:
    """Lattice points of the path traced by a profile matrix."""

    points: tuple

    @classmethod
    def from_matrix(cls, m: ABMatrix) -> "Profile":
        runs = []
        for i in range(m.d):
            runs.append(m.b[i])
            runs.append(-m.a[i])
        pts = [(0, 0)]
        x = y = 0
        for run in runs:
            step = 1 if run >= 0 else -1
            for _ in range(abs(run)):
                x += 1
                y += step
                pts.append((x, y))
        return cls(tuple(pts))


def _height(m: ABMatrix, x: int) -> int:
    """Height of the profile at abscissa x, ascending past the right end."""
    y = 0
    pos = 0
    for i in range(m.d):
        for run, up in ((m.b[i], 1), (m.a[i], -1)):
            if x <= pos + run:
                return y + up * (x - pos)
            pos += run
            y += up * run
    return y + (x - pos)


def valleys(m: ABMatrix) -> list:
    """(x, y) of each local minimum of the profile, one per alpha run."""
    out = []
    x = y = 0
    for i in range(m.d):
        x += m.b[i]
        y += m.b[i]
        x += m.a[i]
        y -= m.a[i]
        out.append((x, y))
    return out


@dataclass(frozen=True)
class Capacity:
    c: tuple

    def __post_init__(self):
        if any(x < 0 for x in self.c):
            raise CovexError(f"capacities must be nonnegative: {self.c}")

    @property
    def d(self) -> int:
        return len(self.c)

    def prepended(self) -> tuple:
        """(c_0, c_1, ..., c_d) with c_0 = 0, as the recursion consumes it."""
        return (0,) + self.c

    def __str__(self):
        return "(" + ",".join(str(x) for x in self.c) + ")"


def capacity(h: ABMatrix, k: ABMatrix) -> Capacity:
    """Half vertical gaps from the valleys of h down to the k profile."""
    if k.width > h.width:
        raise CovexError(
            f"lower profile wider than upper: {k.width} > {h.width}")
    out = []
    for x, y in valleys(h):
        gap = y - _height(k, x)
        if gap < 0:
            raise CovexError(
                f"lower profile passes above a valley at x={x} (gap {gap})")
        if gap % 2:
            raise CovexError(
                f"odd vertical gap {gap} at valley x={x}; "
                "the pair does not describe a fixed point of the variety")
        out.append(gap // 2)
    return Capacity(tuple(out))


def unmatched_openers(a: tuple, b: tuple, pad: int) -> int:
    """How many alphas of the word stay unmatched inside its box."""
    credit = pad
    dead = 0
    for j in range(len(a) - 1, -1, -1):
        m = min(a[j], credit)
        dead += a[j] - m
        credit = credit - m + b[j]
    return dead


def capacity_and_pad(h: ABMatrix, k: ABMatrix, lie_type: str, n: int):
    """Capacity, adjusted matrix and word length for the pair.

    In type D an odd number of unmatched alphas is not allowed (the
    even orthogonal parity): the matrix gains a final column (1, pad)
    whose alpha completes the last pair and the word grows to 2n+1.  The
    appended valley reads its capacity from the extended profile, floored
    at zero since the phantom column may dip below the lower path.
    """
    c = capacity(h, k)
    if lie_type == "A":
        return h, c, h.width + sum(h.a)
    total = 2 * n
    if lie_type == "D":
        pad = total - h.width
        if unmatched_openers(h.a, h.b, pad) % 2:
            h = ABMatrix(h.a + (1,), h.b + (pad,), steps=h.steps,
                         conjugate=h.conjugate, parts=h.parts)
            total += 1
            x, y = valleys(h)[-1]
            gap = y - _height(k, x)
            if gap % 2:
                raise CovexError(
                    f"odd vertical gap {gap} at the appended valley x={x}")
            c = Capacity(c.c + (max(0, gap) // 2,))
    return h, c, total


# ---------------------------------------------------------------------------
# words and pairings
# ---------------------------------------------------------------------------

ALPHA = "a"
BETA = "b"


@dataclass(frozen=True)
class WordPair:
    open_pos: int
    close_pos: Optional[int]  # None for the terminal alpha
    kind: str  # "ab", "aa", "terminal"
    valley: int  # 1-based index of the opening alpha's run
    close_valley: int = 0  # closing alpha's run for "aa" pairs, else 0


@dataclass(frozen=True)
class ABWord:
    letters: tuple
    alpha_valley: dict  # position -> 1-based valley index
    pairs: tuple

    @property
    def terminal(self) -> Optional[WordPair]:
        for p in self.pairs:
            if p.kind == "terminal":
                return p
        return None


def ab_word(m: ABMatrix, total: int) -> ABWord:
    """Spell the profile as letters and compute the non-crossing pairing."""
    if m.width > total:
        raise CovexError(f"profile width {m.width} exceeds word length {total}")
    letters = []
    alpha_valley = {}
    for i in range(m.d):
        letters.extend([BETA] * m.b[i])
        for _ in range(m.a[i]):
            alpha_valley[len(letters)] = i + 1
            letters.append(ALPHA)
    letters.extend([BETA] * (total - len(letters)))

    pairs = []
    stack = []
    for pos, ch in enumerate(letters):
        if ch == ALPHA:
            stack.append(pos)
        elif stack:
            o = stack.pop()
            pairs.append(WordPair(o, pos, "ab", alpha_valley[o]))
    # leftover alphas pair left to right; a final leftover is terminal
    for j in range(0, len(stack) - 1, 2):
        o, c = stack[j], stack[j + 1]
        pairs.append(WordPair(o, c, "aa", alpha_valley[o], alpha_valley[c]))
    if len(stack) % 2:
        o = stack[-1]
        pairs.append(WordPair(o, None, "terminal", alpha_valley[o]))
    pairs.sort(key=lambda p: p.open_pos)
    return ABWord(tuple(letters), alpha_valley, tuple(pairs))


# ---------------------------------------------------------------------------
# trees
# ---------------------------------------------------------------------------

@dataclass
class TreeEdge:
    idx: int
    pair: WordPair
    plus_mark: bool
    capacity_bound: int
    parent: Optional["TreeEdge"] = None
    children: list = field(default_factory=list)
    label: Optional[int] = None
    force_even: bool = False  # set inside the type D phantom pair

    @property
    def span_end(self) -> float:
        return float("inf") if self.pair.close_pos is None else self.pair.close_pos


@dataclass
class LabelTree:
    edges: list  # preorder over the pairing
    roots: list

    @property
    def terminal_edge(self) -> Optional[TreeEdge]:
        for e in self.edges:
            if e.pair.kind == "terminal":
                return e
        return None


def build_tree(word: ABWord, c: Capacity,
               wall_close: Optional[int] = None) -> LabelTree:
    """Nest the pairs into a forest; edges inherit their valley's capacity.

    A pair of two alphas closes in a deeper valley than it opens; its
    label budget is the closing valley's.  ``wall_close`` is the type D
    box-boundary letter position: the edge closing there is forced even.
    """
    edges = []
    roots = []
    stack = []  # open edges by nesting
    for p in word.pairs:
        valley = p.close_valley if p.kind == "aa" else p.valley
        if valley > c.d:
            raise CovexError(f"no capacity entry for valley {valley}")
        e = TreeEdge(len(edges), p, p.kind != "ab", c.c[valley - 1])
        if wall_close is not None and p.close_pos == wall_close:
            e.force_even = True
        while stack and stack[-1].span_end < p.open_pos:
            stack.pop()
        if stack:
            e.parent = stack[-1]
            stack[-1].children.append(e)
        else:
            roots.append(e)
        stack.append(e)
        edges.append(e)
    return LabelTree(edges, roots)


@dataclass(frozen=True)
class Labelling:
    labels: tuple  # aligned with LabelTree.edges

    @property
    def weight(self) -> int:
        return sum(self.labels)


def contact_chains(tree: LabelTree) -> dict:
    """Map edge index -> anchor edge index for the contact parity rule.

    Anchors are the terminal (types B/C) and the arc closing on the type
    D box wall.  A pair is in contact with an anchor when its closer sits
    right before the anchor's opening alpha; contact propagates leftward
    through pairs closing right before an already-linked opener.  An odd
    label on a linked edge must exceed the anchor's label.
    """
    anchors = [e for e in tree.edges
               if e.pair.kind == "terminal" or e.force_even]
    by_close = {e.pair.close_pos: e for e in tree.edges
                if e.pair.close_pos is not None}
    linked = {}
    for anchor in anchors:
        frontier = [anchor.pair.open_pos]
        while frontier:
            pos = frontier.pop()
            e = by_close.get(pos - 1)
            if e is not None and e.idx not in linked and e is not anchor:
                linked[e.idx] = anchor.idx
                frontier.append(e.pair.open_pos)
    return linked


def enumerate_labellings(tree: LabelTree, c: Capacity, lie_type: str
                         ) -> Iterator[Labelling]:
    """Stream every admissible labelling, duplicate-free.

    Labels grow from the root toward the leaves (weak decrease read
    bottom-to-top), capped by each edge's capacity bound.  Signed types
    add the parity rules; subtrees are visited right to left so every
    contact anchor is labelled before the edges it constrains.
    """
    if len(c.c) < max((e.pair.valley for e in tree.edges), default=0):
        raise CovexError("capacity vector shorter than the tree needs")
    signed = lie_type in ("B", "C", "D")
    contact = contact_chains(tree) if signed else {}

    order = []

    def visit(e):
        order.append(e)
        for ch in sorted(e.children, key=lambda x: -x.pair.open_pos):
            visit(ch)

    for r in sorted(tree.roots, key=lambda x: -x.pair.open_pos):
        visit(r)

    labels = [0] * len(tree.edges)
    nedges = len(order)

    def rec(pos):
        if pos == nedges:
            yield Labelling(tuple(labels))
            return
        e = order[pos]
        lo = labels[e.parent.idx] if e.parent is not None else 0
        anchor = contact.get(e.idx)
        theta = labels[anchor] if anchor is not None else None
        for ell in range(lo, e.capacity_bound + 1):
            if ell % 2 and signed:
                if e.plus_mark or e.force_even:
                    continue
                if theta is not None and ell <= theta:
                    continue
            labels[e.idx] = ell
            yield from rec(pos + 1)

    return rec(0)


# ---------------------------------------------------------------------------
# the full tree method
# ---------------------------------------------------------------------------

@dataclass
class TreePipeline:
    """All intermediates of the labelled-tree computation, for inspection."""

    triple: Triple
    v: WeylElement
    w_tau: WeylElement
    weak_k: tuple
    h: ABMatrix
    k: ABMatrix
    h_adjusted: ABMatrix
    cap: Capacity
    total: int
    word: ABWord
    tree: LabelTree

    def polynomial(self) -> QPoly:
        counts = {}
        for lab in enumerate_labellings(self.tree, self.cap, self.triple.lie_type):
            counts[lab.weight] = counts.get(lab.weight, 0) + 1
        if not counts:
            return QPoly.one()
        out = [0] * (max(counts) + 1)
        for wgt, cnt in counts.items():
            out[wgt] = cnt
        return QPoly(out)


def tree_pipeline(t: Triple, v: WeylElement) -> TreePipeline:
    w, wt, h, k = covexillary_pair(t, v)
    h_adj, cap, total = capacity_and_pad(h, k, t.lie_type, t.n)
    word = ab_word(h_adj, total)
    wall = 2 * t.n - 1 if t.lie_type == "D" else None  # 0-based letter index
    tree = build_tree(word, cap, wall_close=wall)
    return TreePipeline(t, v, w, wt.k, h, k, h_adj, cap, total, word, tree)


def kl_via_trees(t: Triple, v: WeylElement) -> QPoly:
    """Kazhdan-Lusztig polynomial by summing q^(label sum) over the trees."""
    return tree_pipeline(t, v).polynomial()


# ---------------------------------------------------------------------------
# DOT export
# ---------------------------------------------------------------------------

def tree_to_dot(tree: LabelTree) -> str:
    """Graphviz rendering; plus-marked edges are bold."""
    lines = ["digraph labeltree {", '  node [shape=point];', "  n0;"]
    name = {None: "n0"}
    for e in tree.edges:  # preorder of the pairing
        name[e.idx] = f"n{e.idx + 1}"
        lines.append(f"  {name[e.idx]};")
    for e in tree.edges:
        parent = "n0" if e.parent is None else name[e.parent.idx]
        style = ", style=bold" if e.plus_mark else ""
        lines.append(
            f'  {parent} -> {name[e.idx]} [label="{e.capacity_bound}"{style}];')
    lines.append("}")
    return "\n".join(lines)
