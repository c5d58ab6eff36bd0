# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled bitset kernels: lattice sweeps over word-encoded set families.

Same interface as ``cyclomat._core_py`` (the NumPy fallback); see that
module for the contract.  Subsets are integer bitmasks, per-subset tables
are ``bytes`` of length ``2**n`` indexed by mask.
"""

from cpython.bytes cimport PyBytes_FromStringAndSize
from libc.stdlib cimport free, malloc
from libc.string cimport memset

BACKEND_NAME = "cython"


cdef extern from *:
    """
    #if defined(__GNUC__) || defined(__clang__)
    #define CYCLOMAT_POPCOUNT(x) __builtin_popcount(x)
    #else
    static int CYCLOMAT_POPCOUNT(unsigned int x) {
        int c = 0;
        while (x) { x &= x - 1; c++; }
        return c;
    }
    #endif
    """
    int CYCLOMAT_POPCOUNT(unsigned int x) nogil


cdef unsigned char* _alloc_table(Py_ssize_t size) except NULL:
    cdef unsigned char* buf = <unsigned char*> malloc(size)
    if buf == NULL:
        raise MemoryError()
    memset(buf, 0, size)
    return buf


cdef bytes _take_bytes(unsigned char* buf, Py_ssize_t size):
    cdef bytes out = PyBytes_FromStringAndSize(<char*> buf, size)
    free(buf)
    return out


def independence_table(bases, int n):
    """Flag table of independent sets: subsets of some basis."""
    cdef Py_ssize_t size = 1 << n
    cdef unsigned char* table = _alloc_table(size)
    cdef Py_ssize_t x
    cdef int e
    cdef Py_ssize_t bit
    for b in bases:
        table[<Py_ssize_t> b] = 1
    with nogil:
        for e in range(n):
            bit = (<Py_ssize_t> 1) << e
            for x in range(size):
                if not (x & bit) and table[x | bit]:
                    table[x] = 1
    return _take_bytes(table, size)


def dependence_table(circuits, int n):
    """Flag table of sets containing at least one of the given circuits."""
    cdef Py_ssize_t size = 1 << n
    cdef unsigned char* table = _alloc_table(size)
    cdef Py_ssize_t x
    cdef int e
    cdef Py_ssize_t bit
    for c in circuits:
        table[<Py_ssize_t> c] = 1
    with nogil:
        for e in range(n):
            bit = (<Py_ssize_t> 1) << e
            for x in range(size):
                if (x & bit) and table[x ^ bit]:
                    table[x] = 1
    return _take_bytes(table, size)


def rank_table(const unsigned char[::1] ind, int n):
    """Rank of every subset (subset-max zeta over the independence table)."""
    cdef Py_ssize_t size = 1 << n
    cdef unsigned char* table = _alloc_table(size)
    cdef Py_ssize_t x
    cdef int e
    cdef Py_ssize_t bit
    with nogil:
        for x in range(size):
            if ind[x]:
                table[x] = <unsigned char> CYCLOMAT_POPCOUNT(<unsigned int> x)
        for e in range(n):
            bit = (<Py_ssize_t> 1) << e
            for x in range(size):
                if (x & bit) and table[x ^ bit] > table[x]:
                    table[x] = table[x ^ bit]
    return _take_bytes(table, size)


def circuit_masks(const unsigned char[::1] ind, int n):
    """Bitmasks of all circuits: dependent sets whose deletions are independent."""
    cdef Py_ssize_t size = 1 << n
    cdef Py_ssize_t x
    cdef int e
    cdef Py_ssize_t bit
    cdef bint minimal
    out = []
    for x in range(1, size):
        if ind[x]:
            continue
        minimal = True
        for e in range(n):
            bit = (<Py_ssize_t> 1) << e
            if (x & bit) and not ind[x ^ bit]:
                minimal = False
                break
        if minimal:
            out.append(x)
    return out


def maximal_true_sets(const unsigned char[::1] table, int n):
    """Bitmasks X with table[X] set and table[X + e] clear for every e not in X."""
    cdef Py_ssize_t size = 1 << n
    cdef Py_ssize_t x
    cdef int e
    cdef Py_ssize_t bit
    cdef bint maximal
    out = []
    for x in range(size):
        if not table[x]:
            continue
        maximal = True
        for e in range(n):
            bit = (<Py_ssize_t> 1) << e
            if not (x & bit) and table[x | bit]:
                maximal = False
                break
        if maximal:
            out.append(x)
    return out


cdef bint _contains(unsigned int* arr, Py_ssize_t m, unsigned int value) nogil:
    cdef Py_ssize_t lo = 0, hi = m, mid
    while lo < hi:
        mid = (lo + hi) // 2
        if arr[mid] < value:
            lo = mid + 1
        else:
            hi = mid
    return lo < m and arr[lo] == value


def exchange_violation(bases, int n):
    """First witness against basis exchange, or None if the axiom holds.

    Witness is (B1, B2, x): x in B1 - B2 with no y in B2 - B1 making
    (B1 - x) + y a basis.  Bases must be sorted ascending.
    """
    cdef Py_ssize_t m = len(bases)
    cdef unsigned int* arr = <unsigned int*> malloc(m * sizeof(unsigned int))
    if arr == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j
    cdef int x, y
    cdef unsigned int b1, b2, stub, valid, full = (1 << n) - 1
    cdef bint found = False
    cdef unsigned int wb1 = 0, wb2 = 0
    cdef int wx = 0
    for i in range(m):
        arr[i] = <unsigned int> bases[i]
    with nogil:
        for i in range(m):
            if found:
                break
            b1 = arr[i]
            for x in range(n):
                if not (b1 >> x) & 1:
                    continue
                stub = b1 ^ ((<unsigned int>1) << x)
                valid = 0
                for y in range(n):
                    if (b1 >> y) & 1:
                        continue
                    if _contains(arr, m, stub | ((<unsigned int>1) << y)):
                        valid |= (<unsigned int>1) << y
                for j in range(m):
                    b2 = arr[j]
                    if (b2 >> x) & 1:
                        continue
                    if b2 & (b1 ^ full) & valid:
                        continue
                    found = True
                    wb1 = b1
                    wb2 = b2
                    wx = x
                    break
                if found:
                    break
    free(arr)
    if found:
        return int(wb1), int(wb2), int(wx)
    return None
