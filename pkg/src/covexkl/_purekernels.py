"""Pure-Python kernels for (signed) permutation windows.

A window is a tuple (w(1), ..., w(n)) of nonzero integers with distinct
absolute values 1..n.  Type A windows are all positive; types B/C/D allow
signs.  Simple reflections are indexed 1..n-1 for the adjacent
transpositions, plus index 0 for the sign reflection (negate position 1
in types B/C, swap-and-negate positions 1,2 in type D).

These functions are the hot path of the Bruhat-order and Hecke-recursion
engines; covexkl._speedups is a compiled drop-in twin with the same
signatures, selected at import by covexkl.kernels.
"""

from bisect import insort


def inv_count(w):
    n = len(w)
    c = 0
    for i in range(n):
        wi = w[i]
        for j in range(i + 1, n):
            if wi > w[j]:
                c += 1
    return c


def length(w, lt):
    """Coxeter length of the window in the given type."""
    if lt == "A":
        return inv_count(w)
    if lt == "D":
        return inv_count(w) + sum(-x - 1 for x in w if x < 0)
    return inv_count(w) + sum(-x for x in w if x < 0)


def apply_right(w, i, lt):
    """w * s_i (acts on positions)."""
    out = list(w)
    if i == 0:
        if lt == "D":
            out[0], out[1] = -out[1], -out[0]
        else:
            out[0] = -out[0]
    else:
        out[i - 1], out[i] = out[i], out[i - 1]
    return tuple(out)


def apply_left(w, i, lt):
    """s_i * w (acts on values)."""
    out = list(w)
    if i == 0:
        if lt == "D":
            for p, x in enumerate(out):
                if x == 1:
                    out[p] = -2
                elif x == -1:
                    out[p] = 2
                elif x == 2:
                    out[p] = -1
                elif x == -2:
                    out[p] = 1
        else:
            for p, x in enumerate(out):
                if x == 1 or x == -1:
                    out[p] = -x
                    break
    else:
        j = i + 1
        for p, x in enumerate(out):
            if x == i:
                out[p] = j
            elif x == -i:
                out[p] = -j
            elif x == j:
                out[p] = i
            elif x == -j:
                out[p] = -i
    return tuple(out)


def is_right_descent(w, i, lt):
    if i == 0:
        if lt == "D":
            return w[0] + w[1] < 0
        return w[0] < 0
    return w[i - 1] > w[i]


def is_left_descent(w, i, lt):
    # right descent of the inverse window
    if i == 0:
        if lt == "D":
            p1 = p2 = 0
            for p, x in enumerate(w, start=1):
                if x == 1:
                    p1 = p
                elif x == -1:
                    p1 = -p
                elif x == 2:
                    p2 = p
                elif x == -2:
                    p2 = -p
            return p1 + p2 < 0
        return -1 in w
    j = i + 1
    pi = pj = 0
    for p, x in enumerate(w, start=1):
        if x == i:
            pi = p
        elif x == -i:
            pi = -p
        elif x == j:
            pj = p
        elif x == -j:
            pj = -p
    return pi > pj


def first_left_descent(w, lt):
    """Smallest generator index that is a left descent; -1 for the identity."""
    n = len(w)
    lo = 1 if lt == "A" else 0
    for i in range(lo, n):
        if is_left_descent(w, i, lt):
            return i
    return -1


def bruhat_leq_a(u, w):
    """Ehresmann dominance for type A windows."""
    n = len(u)
    su = []
    sw = []
    for k in range(n - 1):
        insort(su, u[k])
        insort(sw, w[k])
        for a, b in zip(su, sw):
            if a > b:
                return False
    return True


def bruhat_leq_lift(u, w, lt):
    """Bruhat comparison by the lifting property, any type."""
    lu = length(u, lt)
    lw = length(w, lt)
    while True:
        if u == w:
            return True
        if lu >= lw:
            return False
        i = first_left_descent(w, lt)
        w = apply_left(w, i, lt)
        lw -= 1
        if is_left_descent(u, i, lt):
            u = apply_left(u, i, lt)
            lu -= 1
