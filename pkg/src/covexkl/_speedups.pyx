# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for (signed) permutation windows.

Drop-in twin of covexkl._purekernels; see that module for conventions.
Windows stay Python tuples at the interface; the loops run on C arrays.
"""

cdef int MAXN = 64


cdef inline int _load(object w, int* buf) except -1:
    cdef int n = len(w)
    cdef int i
    if n > MAXN:
        raise ValueError("window too long for compiled kernel")
    for i in range(n):
        buf[i] = w[i]
    return n


cdef inline int _inv(int* a, int n):
    cdef int i, j, c = 0
    for i in range(n):
        for j in range(i + 1, n):
            if a[i] > a[j]:
                c += 1
    return c


cdef inline int _length(int* a, int n, int typ):
    # typ: 0 = A, 1 = B/C, 2 = D
    cdef int i, c = _inv(a, n)
    if typ == 1:
        for i in range(n):
            if a[i] < 0:
                c -= a[i]
    elif typ == 2:
        for i in range(n):
            if a[i] < 0:
                c += -a[i] - 1
    return c


cdef inline int _typ(str lt):
    if lt == "A":
        return 0
    if lt == "D":
        return 2
    return 1


cdef inline void _apply_left(int* a, int n, int i, int typ):
    cdef int p, x, j
    if i == 0:
        if typ == 2:
            for p in range(n):
                x = a[p]
                if x == 1:
                    a[p] = -2
                elif x == -1:
                    a[p] = 2
                elif x == 2:
                    a[p] = -1
                elif x == -2:
                    a[p] = 1
        else:
            for p in range(n):
                x = a[p]
                if x == 1 or x == -1:
                    a[p] = -x
                    break
    else:
        j = i + 1
        for p in range(n):
            x = a[p]
            if x == i:
                a[p] = j
            elif x == -i:
                a[p] = -j
            elif x == j:
                a[p] = i
            elif x == -j:
                a[p] = -i


cdef inline bint _is_left_descent(int* a, int n, int i, int typ):
    cdef int p, x, pi, pj, j
    if i == 0:
        if typ == 2:
            pi = 0
            pj = 0
            for p in range(n):
                x = a[p]
                if x == 1:
                    pi = p + 1
                elif x == -1:
                    pi = -(p + 1)
                elif x == 2:
                    pj = p + 1
                elif x == -2:
                    pj = -(p + 1)
            return pi + pj < 0
        for p in range(n):
            if a[p] == -1:
                return True
        return False
    j = i + 1
    pi = 0
    pj = 0
    for p in range(n):
        x = a[p]
        if x == i:
            pi = p + 1
        elif x == -i:
            pi = -(p + 1)
        elif x == j:
            pj = p + 1
        elif x == -j:
            pj = -(p + 1)
    return pi > pj


def inv_count(w):
    cdef int buf[64]
    cdef int n = _load(w, buf)
    return _inv(buf, n)


def length(w, lt):
    """Coxeter length of the window in the given type."""
    cdef int buf[64]
    cdef int n = _load(w, buf)
    return _length(buf, n, _typ(lt))


def apply_right(w, i, lt):
    """w * s_i (acts on positions)."""
    cdef int buf[64]
    cdef int n = _load(w, buf)
    cdef int ii = i
    cdef int t
    if ii == 0:
        if _typ(lt) == 2:
            t = buf[0]
            buf[0] = -buf[1]
            buf[1] = -t
        else:
            buf[0] = -buf[0]
    else:
        t = buf[ii - 1]
        buf[ii - 1] = buf[ii]
        buf[ii] = t
    return tuple([buf[t] for t in range(n)])


def apply_left(w, i, lt):
    """s_i * w (acts on values)."""
    cdef int buf[64]
    cdef int n = _load(w, buf)
    _apply_left(buf, n, i, _typ(lt))
    cdef int p
    return tuple([buf[p] for p in range(n)])


def is_right_descent(w, i, lt):
    cdef int buf[64]
    cdef int n = _load(w, buf)
    cdef int ii = i
    if ii == 0:
        if _typ(lt) == 2:
            return buf[0] + buf[1] < 0
        return buf[0] < 0
    return buf[ii - 1] > buf[ii]


def is_left_descent(w, i, lt):
    cdef int buf[64]
    cdef int n = _load(w, buf)
    return _is_left_descent(buf, n, i, _typ(lt))


def first_left_descent(w, lt):
    """Smallest generator index that is a left descent; -1 for the identity."""
    cdef int buf[64]
    cdef int n = _load(w, buf)
    cdef int typ = _typ(lt)
    cdef int lo = 1 if typ == 0 else 0
    cdef int i
    for i in range(lo, n):
        if _is_left_descent(buf, n, i, typ):
            return i
    return -1


def bruhat_leq_a(u, w):
    """Ehresmann dominance for type A windows."""
    cdef int bu[64]
    cdef int bw[64]
    cdef int su[64]
    cdef int sw[64]
    cdef int n = _load(u, bu)
    _load(w, bw)
    cdef int k, j, x, pos
    for k in range(n - 1):
        # insertion sort step for both prefixes
        x = bu[k]
        pos = k
        for j in range(k):
            if su[j] > x:
                pos = j
                break
        for j in range(k, pos, -1):
            su[j] = su[j - 1]
        su[pos] = x
        x = bw[k]
        pos = k
        for j in range(k):
            if sw[j] > x:
                pos = j
                break
        for j in range(k, pos, -1):
            sw[j] = sw[j - 1]
        sw[pos] = x
        for j in range(k + 1):
            if su[j] > sw[j]:
                return False
    return True


def bruhat_leq_lift(u, w, lt):
    """Bruhat comparison by the lifting property, any type."""
    cdef int bu[64]
    cdef int bw[64]
    cdef int n = _load(u, bu)
    _load(w, bw)
    cdef int typ = _typ(lt)
    cdef int lu = _length(bu, n, typ)
    cdef int lw = _length(bw, n, typ)
    cdef int lo = 1 if typ == 0 else 0
    cdef int i, p, same
    while True:
        same = 1
        for p in range(n):
            if bu[p] != bw[p]:
                same = 0
                break
        if same:
            return True
        if lu >= lw:
            return False
        for i in range(lo, n):
            if _is_left_descent(bw, n, i, typ):
                break
        _apply_left(bw, n, i, typ)
        lw -= 1
        if _is_left_descent(bu, n, i, typ):
            _apply_left(bu, n, i, typ)
            lu -= 1
