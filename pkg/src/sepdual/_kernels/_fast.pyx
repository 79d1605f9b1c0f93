# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled bit kernels for ground sets of at most 64 elements.

Same contract as ``_pure``; wider masks (or anything that does not fit a
machine word) are delegated to the pure implementation.
"""

from libc.stdlib cimport free, malloc

from . import _pure

cdef extern from *:
    """
    #if defined(__GNUC__) || defined(__clang__)
    #define POPCOUNT64(x) __builtin_popcountll(x)
    #else
    static int POPCOUNT64(unsigned long long x) {
        int c = 0;
        while (x) { x &= x - 1; c++; }
        return c;
    }
    #endif
    """
    int POPCOUNT64(unsigned long long x) nogil


cdef unsigned long long* _as_words(object masks, Py_ssize_t* count) except NULL:
    cdef Py_ssize_t k = len(masks)
    cdef unsigned long long* buf = <unsigned long long*> malloc(
        (k if k > 0 else 1) * sizeof(unsigned long long))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    try:
        for i in range(k):
            buf[i] = masks[i]
    except (OverflowError, TypeError):
        free(buf)
        raise OverflowError("mask does not fit a machine word")
    count[0] = k
    return buf


def order2(masks, a, b):
    try:
        return _order2_impl(masks, a, b)
    except OverflowError:
        return _pure.order2(masks, a, b)


cdef long long _order2_words(unsigned long long* buf, Py_ssize_t k,
                             unsigned long long wa, unsigned long long wb) nogil:
    cdef long long total = 0
    cdef unsigned long long m, wab = wa & wb
    cdef int ca, cb
    cdef Py_ssize_t i
    for i in range(k):
        m = buf[i]
        ca = POPCOUNT64(m & wa)
        cb = POPCOUNT64(m & wb)
        total += 2 * (ca if ca < cb else cb) - POPCOUNT64(m & wab)
    return total


def _order2_impl(masks, unsigned long long a, unsigned long long b):
    cdef Py_ssize_t k = 0
    cdef unsigned long long* buf = _as_words(masks, &k)
    try:
        return _order2_words(buf, k, a, b)
    finally:
        free(buf)


def shift2(masks, a, b, partition_ties=False):
    try:
        return _shift2_impl(masks, a, b, bool(partition_ties))
    except OverflowError:
        return _pure.shift2(masks, a, b, partition_ties)


def _shift2_impl(masks, unsigned long long a, unsigned long long b,
                 bint partition_ties):
    cdef Py_ssize_t k = 0
    cdef unsigned long long* buf = _as_words(masks, &k)
    cdef unsigned long long c = 0, d = 0, bit = 1
    cdef int ca, cb
    cdef Py_ssize_t i
    if k > 64:
        free(buf)
        return _pure.shift2(masks, a, b, partition_ties)
    try:
        for i in range(k):
            ca = POPCOUNT64(buf[i] & a)
            cb = POPCOUNT64(buf[i] & b)
            if ca >= cb:
                c |= bit
            if (ca < cb) if partition_ties else (ca <= cb):
                d |= bit
            bit <<= 1
        return (int(c), int(d))
    finally:
        free(buf)


def scan_members(masks, n, partitions_only=False):
    if n > 30:
        # 3**n entries would not be materializable anyway
        return _pure.scan_members(masks, n, partitions_only)
    try:
        return _scan_impl(masks, n, bool(partitions_only))
    except OverflowError:
        return _pure.scan_members(masks, n, partitions_only)


def _scan_impl(masks, int n, bint partitions_only):
    cdef Py_ssize_t k = 0
    cdef unsigned long long* buf = _as_words(masks, &k)
    cdef unsigned long long full = (<unsigned long long> 1 << n) - 1
    cdef unsigned long long a, b, rest, m
    out = []
    try:
        if partitions_only:
            for a in range(<unsigned long long> 1 << n):
                b = full ^ a
                if a < b:
                    out.append((_order2_words(buf, k, a, b), int(a), int(b)))
        else:
            for a in range(<unsigned long long> 1 << n):
                rest = full ^ a
                m = a
                while True:
                    b = rest | m
                    if a < b:
                        out.append((_order2_words(buf, k, a, b), int(a), int(b)))
                    if m == 0:
                        break
                    m = (m - 1) & a
    finally:
        free(buf)
    out.sort()
    return out
