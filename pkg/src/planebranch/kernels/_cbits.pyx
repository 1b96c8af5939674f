# cython: language_level=3, boundscheck=False, wraparound=False
"""C kernel backend: bit-packed tables over 64-bit words.

Same layout idea as the pure backend's bignum bitsets, but with in-place
word loops, no temporary allocations, and hardware popcount/ctz.  Bits at
positions >= size are kept zero after every operation.
"""

from cpython.bytearray cimport PyByteArray_AS_STRING

ctypedef unsigned long long u64

cdef extern from *:
    int __builtin_popcountll(u64) nogil
    int __builtin_ctzll(u64) nogil
    int __builtin_clzll(u64) nogil

NAME = "c"


cdef class Table:
    """Boolean table over [0, size)."""

    cdef public bytearray buf
    cdef public Py_ssize_t size
    cdef Py_ssize_t nwords

    def __init__(self, Py_ssize_t size):
        if size < 0:
            raise ValueError("negative table size")
        self.size = size
        self.nwords = (size + 63) >> 6
        self.buf = bytearray(self.nwords * 8)


cdef inline u64* _w(Table t):
    return <u64*> PyByteArray_AS_STRING(t.buf)


cdef inline void _mask_tail(Table t):
    cdef Py_ssize_t rem = t.size & 63
    if rem and t.nwords:
        _w(t)[t.nwords - 1] &= (<u64> 1 << rem) - 1


cdef void _self_or_shift(Table t, Py_ssize_t g):
    # t |= (t << g); descending order reads pre-pass words only
    cdef u64* w = _w(t)
    cdef Py_ssize_t q = g >> 6
    cdef int r = <int> (g & 63)
    cdef Py_ssize_t i
    cdef u64 v
    for i in range(t.nwords - 1, q - 1, -1):
        v = w[i - q] << r
        if r and i - q >= 1:
            v |= w[i - q - 1] >> (64 - r)
        w[i] |= v
    _mask_tail(t)


def make(Py_ssize_t size):
    return Table(size)


def copy(Table t):
    cdef Table out = Table(t.size)
    out.buf[:] = t.buf
    return out


def semigroup_table(Py_ssize_t p, Py_ssize_t m, Py_ssize_t size):
    cdef Table t = Table(size)
    cdef Py_ssize_t step, shift
    if size <= 0:
        return t
    _w(t)[0] = 1
    for step in (p, m):
        shift = step
        while shift < size:
            _self_or_shift(t, shift)
            shift <<= 1
    return t


def get(Table t, Py_ssize_t x):
    if x < 0 or x >= t.size:
        raise IndexError(f"position {x} outside [0, {t.size})")
    return <int> ((_w(t)[x >> 6] >> (x & 63)) & 1)


def or_shift(Table e, Table t, Py_ssize_t g):
    if g < 0:
        raise ValueError("negative shift")
    if e.size != t.size:
        raise ValueError("size mismatch")
    if g >= e.size:
        return
    cdef u64* ew = _w(e)
    cdef u64* tw = _w(t)
    cdef Py_ssize_t q = g >> 6
    cdef int r = <int> (g & 63)
    cdef Py_ssize_t i
    cdef u64 v
    for i in range(e.nwords - 1, q - 1, -1):
        v = tw[i - q] << r
        if r and i - q >= 1:
            v |= tw[i - q - 1] >> (64 - r)
        ew[i] |= v
    _mask_tail(e)


def min_common_shift(Table e, Table t, Py_ssize_t g):
    if g < 0:
        raise ValueError("negative shift")
    if e.size != t.size:
        raise ValueError("size mismatch")
    if g >= e.size:
        return -1
    cdef u64* ew = _w(e)
    cdef u64* tw = _w(t)
    cdef Py_ssize_t q = g >> 6
    cdef int r = <int> (g & 63)
    cdef Py_ssize_t i
    cdef u64 v
    for i in range(q, e.nwords):
        v = tw[i - q] << r
        if r and i - q >= 1:
            v |= tw[i - q - 1] >> (64 - r)
        v &= ew[i]
        if v:
            return (i << 6) + __builtin_ctzll(v)
    return -1


def first_clear(Table t, Py_ssize_t start):
    if start < 0:
        raise ValueError("negative start")
    if start >= t.size:
        return -1
    cdef u64* w = _w(t)
    cdef Py_ssize_t i
    cdef Py_ssize_t rem = t.size & 63
    cdef u64 v
    for i in range(start >> 6, t.nwords):
        v = ~w[i]
        if i == (start >> 6) and (start & 63):
            v &= (<u64> -1) << (start & 63)
        if i == t.nwords - 1 and rem:
            v &= (<u64> 1 << rem) - 1
        if v:
            return (i << 6) + __builtin_ctzll(v)
    return -1


def last_clear(Table t):
    cdef u64* w = _w(t)
    cdef Py_ssize_t i
    cdef Py_ssize_t rem = t.size & 63
    cdef u64 v
    for i in range(t.nwords - 1, -1, -1):
        v = ~w[i]
        if i == t.nwords - 1 and rem:
            v &= (<u64> 1 << rem) - 1
        if v:
            return (i << 6) + 63 - __builtin_clzll(v)
    return -1


def count(Table t):
    cdef u64* w = _w(t)
    cdef Py_ssize_t i, total = 0
    for i in range(t.nwords):
        total += __builtin_popcountll(w[i])
    return total


def count_and_not(Table a, Table b):
    if a.size != b.size:
        raise ValueError("size mismatch")
    cdef u64* aw = _w(a)
    cdef u64* bw = _w(b)
    cdef Py_ssize_t i, total = 0
    for i in range(a.nwords):
        total += __builtin_popcountll(aw[i] & ~bw[i])
    return total


def equal(Table a, Table b):
    return a.size == b.size and a.buf == b.buf


def to_bytes01(Table t):
    cdef bytearray out = bytearray(t.size)
    cdef unsigned char* o = <unsigned char*> PyByteArray_AS_STRING(out)
    cdef u64* w = _w(t)
    cdef Py_ssize_t x
    for x in range(t.size):
        o[x] = <unsigned char> ((w[x >> 6] >> (x & 63)) & 1)
    return bytes(out)
