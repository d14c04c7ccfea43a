# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled homology kernels; same contract as ``_pure``.

Exact ranks over Q use int64 elimination with content reduction.  Entries
are kept below 2**30 so every update fits in 64 bits; if a row cannot be
brought under that bound ``OverflowError`` is raised and the caller falls
back to the arbitrary-precision pure-Python kernel.
"""

from libc.stdlib cimport malloc, calloc, free
from libc.string cimport memcpy

ctypedef long long i64

cdef i64 LIMIT = 1 << 30
cdef i64 SOFT = 1 << 20
cdef int MAX_VERTS = 26
cdef i64 MAX_ENTRIES = 60000000


cdef inline i64 _abs(i64 x) nogil:
    return -x if x < 0 else x


cdef inline i64 _gcd(i64 a, i64 b) nogil:
    cdef i64 t
    a = _abs(a)
    b = _abs(b)
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef inline int _popcount(unsigned long long x) nogil:
    return __builtin_popcountll(x)


cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil


cdef i64 _inv_mod(i64 a, i64 p) nogil:
    cdef i64 t = 0, nt = 1, r = p, nr = a % p, q, tmp
    if nr < 0:
        nr += p
    while nr:
        q = r // nr
        tmp = t - q * nt
        t = nt
        nt = tmp
        tmp = r - q * nr
        r = nr
        nr = tmp
    if t < 0:
        t += p
    return t


cdef int _rank_q(i64* M, int nrows, int ncols) nogil:
    """Rank of a dense row-major matrix; returns -1 on overflow."""
    cdef int r = 0, c, i, j, piv
    cdef i64 v, pv, a, b, g, mx, x
    cdef i64* rowr
    cdef i64* rowi
    cdef i64 tmp
    for c in range(ncols):
        if r == nrows:
            break
        piv = -1
        for i in range(r, nrows):
            v = M[<i64>i * ncols + c]
            if v != 0:
                if piv < 0:
                    piv = i
                if v == 1 or v == -1:
                    piv = i
                    break
        if piv < 0:
            continue
        if piv != r:
            for j in range(c, ncols):
                tmp = M[<i64>piv * ncols + j]
                M[<i64>piv * ncols + j] = M[<i64>r * ncols + j]
                M[<i64>r * ncols + j] = tmp
        rowr = M + <i64>r * ncols
        pv = rowr[c]
        for i in range(r + 1, nrows):
            rowi = M + <i64>i * ncols
            v = rowi[c]
            if v == 0:
                continue
            g = _gcd(pv, v)
            a = pv // g
            b = v // g
            mx = 0
            for j in range(c, ncols):
                x = a * rowi[j] - b * rowr[j]
                rowi[j] = x
                if _abs(x) > mx:
                    mx = _abs(x)
            if mx > SOFT:
                g = 0
                for j in range(c, ncols):
                    if rowi[j]:
                        g = _gcd(g, rowi[j])
                        if g == 1:
                            break
                if g > 1:
                    mx = 0
                    for j in range(c, ncols):
                        rowi[j] //= g
                        if _abs(rowi[j]) > mx:
                            mx = _abs(rowi[j])
                if mx > LIMIT:
                    return -1
        r += 1
    return r


cdef int _rank_mod(i64* M, int nrows, int ncols, i64 p) nogil:
    cdef int r = 0, c, i, j, piv
    cdef i64 v, inv, tmp
    cdef i64* rowr
    cdef i64* rowi
    for i in range(nrows):
        for j in range(ncols):
            v = M[<i64>i * ncols + j] % p
            if v < 0:
                v += p
            M[<i64>i * ncols + j] = v
    for c in range(ncols):
        if r == nrows:
            break
        piv = -1
        for i in range(r, nrows):
            if M[<i64>i * ncols + c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(c, ncols):
                tmp = M[<i64>piv * ncols + j]
                M[<i64>piv * ncols + j] = M[<i64>r * ncols + j]
                M[<i64>r * ncols + j] = tmp
        rowr = M + <i64>r * ncols
        inv = _inv_mod(rowr[c], p)
        for j in range(c, ncols):
            rowr[j] = rowr[j] * inv % p
        for i in range(r + 1, nrows):
            rowi = M + <i64>i * ncols
            v = rowi[c]
            if v == 0:
                continue
            for j in range(c, ncols):
                if rowr[j]:
                    rowi[j] = (rowi[j] - v * rowr[j]) % p
                    if rowi[j] < 0:
                        rowi[j] += p
        r += 1
    return r


def faces_by_dimension(facets):
    """Faces grouped by size; index 0 holds the empty face.  ``[]`` if void."""
    cdef unsigned long long f, sub, allbits = 0
    cdef int nv, k
    cdef unsigned long long m, size
    facets = list(facets)
    if not facets:
        return []
    for f in facets:
        allbits |= f
    nv = 0
    while (allbits >> nv) != 0:
        nv += 1
    if nv > MAX_VERTS:
        raise ValueError(f"complex on {nv} vertices exceeds the compiled kernel limit")
    size = 1ULL << nv
    cdef char* mark = <char*> calloc(size, 1)
    if mark == NULL:
        raise MemoryError()
    try:
        for f in facets:
            sub = f
            while True:
                mark[sub] = 1
                if sub == 0:
                    break
                sub = (sub - 1) & f
        levels = [[] for _ in range(nv + 1)]
        for m in range(size):
            if mark[m]:
                levels[_popcount(m)].append(m)
    finally:
        free(mark)
    while levels and not levels[len(levels) - 1]:
        levels.pop()
    return levels


cdef int _boundary_rank(list faces, list lower, i64 characteristic) except -2:
    cdef int nrows = len(faces), ncols = len(lower), i, col
    cdef unsigned long long f, bits, low
    cdef i64 sign
    if nrows == 0 or ncols == 0:
        return 0
    if <i64>nrows * ncols > MAX_ENTRIES:
        raise MemoryError(f"boundary matrix {nrows}x{ncols} too large for the dense kernel")
    index = {}
    for i in range(ncols):
        index[lower[i]] = i
    cdef i64* M = <i64*> calloc(<size_t>nrows * ncols, sizeof(i64))
    if M == NULL:
        raise MemoryError()
    cdef int r
    try:
        for i in range(nrows):
            f = faces[i]
            bits = f
            sign = 1
            while bits:
                low = bits & (~bits + 1)
                col = index[f ^ low]
                M[<i64>i * ncols + col] = sign
                sign = -sign
                bits ^= low
        with nogil:
            if characteristic == 0:
                r = _rank_q(M, nrows, ncols)
            else:
                r = _rank_mod(M, nrows, ncols, characteristic)
    finally:
        free(M)
    if r < 0:
        raise OverflowError("int64 elimination overflow")
    return r


def boundary_rank(faces, lower, characteristic=0):
    return _boundary_rank(list(faces), list(lower), characteristic)


def reduced_homology(facets, characteristic=0):
    """Reduced Betti numbers ``[h_{-1}, h_0, ..., h_top]`` of the generated complex."""
    cdef int k, top
    levels = faces_by_dimension(facets)
    if not levels:
        return []
    top = len(levels)
    ranks = [0] * (top + 1)
    for k in range(1, top):
        ranks[k] = _boundary_rank(levels[k], levels[k - 1], characteristic)
    return [len(levels[k]) - ranks[k] - ranks[k + 1] for k in range(top)]
