"""Weyl groups of classical types as (signed) permutation windows.

An element is stored by its window (w(1), ..., w(n)).  Type A windows are
permutations of 1..n; types B and C share the hyperoctahedral group of
signed permutations; type D is the subgroup with an even number of
negative entries.

Simple-root convention (internal; all public results are windows):
type A uses s_1..s_{n-1} (adjacent transpositions); types B/C add s_0,
the sign change on position 1; type D replaces s_0 by the double sign
change that swaps and negates positions 1 and 2.

Type D windows in the odd component of the full orthogonal group are
accepted by ``WeylElement.ambient``; the rank-condition pipeline needs
them.  Group-theoretic operations (length, words, descents) reject them,
and Bruhat comparisons involving them fall back to the ambient
hyperoctahedral order.
"""

from __future__ import annotations

import itertools
from math import factorial

from . import kernels
from .errors import CovexError

LIE_TYPES = ("A", "B", "C", "D")


def _check_window(lt: str, n: int, window) -> tuple:
    win = tuple(int(x) for x in window)
    if lt not in LIE_TYPES:
        raise CovexError(f"unknown Lie type {lt!r}")
    if n < 1 or len(win) != n:
        raise CovexError(f"window {win} does not have length n={n}")
    if sorted(abs(x) for x in win) != list(range(1, n + 1)):
        raise CovexError(f"window {win} is not a (signed) permutation of 1..{n}")
    if lt == "A" and any(x < 0 for x in win):
        raise CovexError(f"type A window {win} must be positive")
    return win


class WeylElement:
    """Immutable group element of a classical Weyl group."""

    __slots__ = ("lie_type", "n", "window")

    def __init__(self, lie_type: str, n: int, window):
        win = _check_window(lie_type, n, window)
        if lie_type == "D" and sum(1 for x in win if x < 0) % 2:
            raise CovexError(
                f"type D window {win} has an odd number of sign changes; "
                "use WeylElement.ambient for odd-component windows"
            )
        object.__setattr__(self, "lie_type", lie_type)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "window", win)

    @classmethod
    def ambient(cls, lie_type: str, n: int, window) -> "WeylElement":
        """Construct without the type D sign-parity restriction."""
        win = _check_window(lie_type, n, window)
        self = object.__new__(cls)
        object.__setattr__(self, "lie_type", lie_type)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "window", win)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("WeylElement is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, WeylElement)
            and self.lie_type == other.lie_type
            and self.n == other.n
            and self.window == other.window
        )

    def __hash__(self):
        return hash((self.lie_type, self.n, self.window))

    def __repr__(self):
        return f"WeylElement({self.lie_type!r}, {self.n}, {self.window})"

    def __str__(self):
        return format_window(self.window)

    @property
    def is_even_signed(self) -> bool:
        return sum(1 for x in self.window if x < 0) % 2 == 0

    @property
    def in_group(self) -> bool:
        """False for type D windows in the odd (ambient) component."""
        return self.lie_type != "D" or self.is_even_signed


def format_window(window) -> str:
    return " ".join(str(x) for x in window)


def parse_window(text: str):
    """Parse comma- or space-separated signed integers."""
    parts = text.replace(",", " ").split()
    return tuple(int(x) for x in parts)


def identity(lt: str, n: int) -> WeylElement:
    return WeylElement(lt, n, range(1, n + 1))


def longest_element(lt: str, n: int) -> WeylElement:
    """The maximal-length element of the group."""
    if n < 1:
        raise CovexError("rank must be at least 1")
    if lt == "A":
        return WeylElement(lt, n, range(n, 0, -1))
    if lt in ("B", "C"):
        return WeylElement(lt, n, [-i for i in range(1, n + 1)])
    if n % 2 == 0:
        return WeylElement("D", n, [-i for i in range(1, n + 1)])
    return WeylElement("D", n, [1] + [-i for i in range(2, n + 1)])


def simple_indices(lt: str, n: int) -> range:
    return range(1, n) if lt == "A" else range(0, n)


def _group_type(w: WeylElement) -> str:
    # ambient odd-component windows use the hyperoctahedral structure
    if w.lie_type == "D" and not w.is_even_signed:
        raise CovexError(f"{w.window} is not an even-signed window")
    return w.lie_type


def length(w: WeylElement) -> int:
    return kernels.length(w.window, _group_type(w))


def is_descent(w: WeylElement, i: int, side: str = "right") -> bool:
    lt = _group_type(w)
    if i not in simple_indices(lt, w.n):
        raise CovexError(f"invalid simple reflection index {i}")
    if side == "right":
        return kernels.is_right_descent(w.window, i, lt)
    return kernels.is_left_descent(w.window, i, lt)


def apply_simple(w: WeylElement, i: int, side: str = "right") -> WeylElement:
    """w*s_i (side='right') or s_i*w (side='left')."""
    lt = _group_type(w)
    if i not in simple_indices(lt, w.n):
        raise CovexError(f"invalid simple reflection index {i}")
    if side == "right":
        win = kernels.apply_right(w.window, i, lt)
    elif side == "left":
        win = kernels.apply_left(w.window, i, lt)
    else:
        raise CovexError(f"side must be 'left' or 'right', got {side!r}")
    return WeylElement(w.lie_type, w.n, win)


def reduced_word(w: WeylElement) -> list:
    """Reduced word by the leftmost-descent greedy peel.

    Applying the word letters to the identity by successive right
    multiplication reproduces w.
    """
    lt = _group_type(w)
    win = w.window
    word = []
    while True:
        i = kernels.first_left_descent(win, lt)
        if i < 0:
            return word
        word.append(i)
        win = kernels.apply_left(win, i, lt)


def _same_group(u: WeylElement, w: WeylElement):
    if u.lie_type != w.lie_type or u.n != w.n:
        raise CovexError(
            f"elements live in different groups: "
            f"{u.lie_type}_{u.n} vs {w.lie_type}_{w.n}"
        )


def bruhat_leq(u: WeylElement, w: WeylElement) -> bool:
    """Bruhat order comparison.

    Type A uses rank (sorted-prefix) dominance; the signed types use the
    lifting-property recursion.  Type D pairs with an odd-component
    window are compared in the ambient hyperoctahedral order.
    """
    _same_group(u, w)
    lt = u.lie_type
    if lt == "A":
        return kernels.bruhat_leq_a(u.window, w.window)
    if lt == "D" and not (u.is_even_signed and w.is_even_signed):
        return kernels.bruhat_leq_lift(u.window, w.window, "B")
    return kernels.bruhat_leq_lift(u.window, w.window, lt)


def compose(u: WeylElement, v: WeylElement) -> WeylElement:
    """Product u*v, i.e. the window i -> u(v(i))."""
    _same_group(u, v)
    uw = u.window
    out = []
    for x in v.window:
        y = uw[abs(x) - 1]
        out.append(y if x > 0 else -y)
    return WeylElement.ambient(u.lie_type, u.n, out)


def inverse(w: WeylElement) -> WeylElement:
    out = [0] * w.n
    for pos, x in enumerate(w.window, start=1):
        if x > 0:
            out[x - 1] = pos
        else:
            out[-x - 1] = -pos
    return WeylElement.ambient(w.lie_type, w.n, out)


def group_order(lt: str, n: int) -> int:
    if lt == "A":
        return factorial(n)
    if lt in ("B", "C"):
        return factorial(n) << n
    return factorial(n) << (n - 1) if n > 1 else 1


def elements(lt: str, n: int):
    """Iterate over the whole group (ambient-free; type D is even-signed)."""
    if lt == "A":
        for perm in itertools.permutations(range(1, n + 1)):
            yield WeylElement("A", n, perm)
        return
    for perm in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            if lt == "D" and signs.count(-1) % 2:
                continue
            yield WeylElement(lt, n, tuple(s * x for s, x in zip(signs, perm)))


def positive_root_count(lt: str, n: int) -> int:
    if lt == "A":
        return n * (n - 1) // 2
    if lt in ("B", "C"):
        return n * n
    return n * n - n
