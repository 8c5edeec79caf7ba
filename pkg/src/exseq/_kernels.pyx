# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled backtracking kernels; see ``_kernels_py`` for the contract.

Masks are packed into 64-bit words, so at most 64 items (sequences) or 64
chords (trees) are supported. ``kernels`` routes larger inputs to the Python
fallback.
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

cdef enum:
    MAXITEMS = 64

cdef inline int _popcount(uint64_t x) nogil:
    return __builtin_popcountll(x)

cdef inline int _ctz(uint64_t x) nogil:
    return __builtin_ctzll(x)


cdef struct SeqState:
    uint64_t *masks
    int length
    int *seq
    unsigned long long count


cdef void _seq_count(SeqState *st, uint64_t cand, int depth) nogil:
    cdef int need = st.length - depth
    cdef uint64_t m, low
    cdef int b
    if need == 0:
        st.count += 1
        return
    if _popcount(cand) < need:
        return
    if need == 1:
        st.count += _popcount(cand)
        return
    m = cand
    while m:
        b = _ctz(m)
        m &= m - 1
        _seq_count(st, cand & st.masks[b], depth + 1)


cdef int _seq_collect(SeqState *st, uint64_t cand, int depth, list out) except -1:
    cdef int need = st.length - depth
    cdef uint64_t m
    cdef int b, k
    if need == 0:
        out.append(tuple([st.seq[k] for k in range(st.length)]))
        return 0
    if _popcount(cand) < need:
        return 0
    m = cand
    while m:
        b = _ctz(m)
        m &= m - 1
        st.seq[depth] = b
        _seq_collect(st, cand & st.masks[b], depth + 1, out)
    return 0


cdef int _seq_setup(list masks, int length, tuple prefix, SeqState *st, uint64_t *cand) except -1:
    cdef int nitems = len(masks)
    cdef int k, a
    if nitems > MAXITEMS:
        raise OverflowError("compiled kernel supports at most 64 items")
    st.masks = <uint64_t *> malloc(max(nitems, 1) * sizeof(uint64_t))
    st.seq = <int *> malloc(max(length, 1) * sizeof(int))
    st.length = length
    st.count = 0
    for k in range(nitems):
        st.masks[k] = <uint64_t> masks[k]
    cand[0] = (<uint64_t> 0xFFFFFFFFFFFFFFFF) if nitems == 64 else ((<uint64_t> 1 << nitems) - 1)
    for k in range(len(prefix)):
        a = prefix[k]
        if not (cand[0] >> a) & 1:
            return 1
        st.seq[k] = a
        cand[0] &= st.masks[a]
    return 0


def extend_sequences(list masks, int length, tuple prefix=()):
    cdef SeqState st
    cdef uint64_t cand
    cdef list out = []
    st.masks = NULL
    st.seq = NULL
    try:
        if _seq_setup(masks, length, prefix, &st, &cand) == 0:
            _seq_collect(&st, cand, len(prefix), out)
    finally:
        free(st.masks)
        free(st.seq)
    return out


def count_sequences(list masks, int length, tuple prefix=()):
    cdef SeqState st
    cdef uint64_t cand
    cdef int depth = len(prefix)
    st.masks = NULL
    st.seq = NULL
    try:
        if _seq_setup(masks, length, prefix, &st, &cand) != 0:
            return 0
        with nogil:
            _seq_count(&st, cand, depth)
        return st.count
    finally:
        free(st.masks)
        free(st.seq)


cdef struct TreeState:
    int n_points
    int nchords
    int size
    int *end_p
    int *end_q
    uint64_t *cross
    int *chosen
    int *labels      # (size + 1) rows of n_points labels
    unsigned long long count


cdef inline void _merge(TreeState *st, int depth, int lp, int lq) nogil:
    cdef int v
    cdef int *src = st.labels + depth * st.n_points
    cdef int *dst = src + st.n_points
    for v in range(st.n_points):
        dst[v] = lp if src[v] == lq else src[v]


cdef int _tree_rec(TreeState *st, int start, int depth, uint64_t forbidden, list out) except -1:
    cdef int need = st.size - depth
    cdef int k, lp, lq, v
    cdef int *lab
    if need == 0:
        if out is None:
            st.count += 1
        else:
            out.append(tuple([st.chosen[v] for v in range(st.size)]))
        return 0
    lab = st.labels + depth * st.n_points
    for k in range(start, st.nchords - need + 1):
        if (forbidden >> k) & 1:
            continue
        lp = lab[st.end_p[k]]
        lq = lab[st.end_q[k]]
        if lp == lq:
            continue
        st.chosen[depth] = k
        _merge(st, depth, lp, lq)
        _tree_rec(st, k + 1, depth + 1, forbidden | st.cross[k], out)
    return 0


cdef object _tree_run(int n_points, list ends, list cross, int size, tuple prefix, bint collect):
    cdef TreeState st
    cdef int nchords = len(ends)
    cdef int k, v, a, lp, lq, depth
    cdef uint64_t forbidden = 0
    cdef list out = [] if collect else None
    if nchords > MAXITEMS:
        raise OverflowError("compiled kernel supports at most 64 chords")
    st.n_points = n_points
    st.nchords = nchords
    st.size = size
    st.count = 0
    st.end_p = <int *> malloc(max(nchords, 1) * sizeof(int))
    st.end_q = <int *> malloc(max(nchords, 1) * sizeof(int))
    st.cross = <uint64_t *> malloc(max(nchords, 1) * sizeof(uint64_t))
    st.chosen = <int *> malloc(max(size, 1) * sizeof(int))
    st.labels = <int *> malloc((size + 1) * max(n_points, 1) * sizeof(int))
    try:
        for k in range(nchords):
            st.end_p[k] = ends[k][0]
            st.end_q[k] = ends[k][1]
            st.cross[k] = <uint64_t> cross[k]
        for v in range(n_points):
            st.labels[v] = v
        depth = 0
        for a in prefix:
            if depth and a <= st.chosen[depth - 1]:
                return out if collect else 0
            if (forbidden >> a) & 1:
                return out if collect else 0
            lp = st.labels[depth * n_points + st.end_p[a]]
            lq = st.labels[depth * n_points + st.end_q[a]]
            if lp == lq:
                return out if collect else 0
            st.chosen[depth] = a
            _merge(&st, depth, lp, lq)
            forbidden |= st.cross[a]
            depth += 1
        _tree_rec(&st, st.chosen[depth - 1] + 1 if depth else 0, depth, forbidden, out)
        return out if collect else st.count
    finally:
        free(st.end_p)
        free(st.end_q)
        free(st.cross)
        free(st.chosen)
        free(st.labels)


def extend_trees(int n_points, list ends, list cross, int size, tuple prefix=()):
    return _tree_run(n_points, ends, cross, size, prefix, True)


def count_trees(int n_points, list ends, list cross, int size, tuple prefix=()):
    return _tree_run(n_points, ends, cross, size, prefix, False)
