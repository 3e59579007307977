# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled free group kernels; same contract as ``_freegroup_py``."""

from cpython.mem cimport PyMem_Malloc, PyMem_Realloc, PyMem_Free


cdef struct Buf:
    int *data
    Py_ssize_t size
    Py_ssize_t cap


cdef int _grow(Buf *buf, Py_ssize_t need) except -1:
    cdef Py_ssize_t cap = buf.cap
    cdef int *p
    if need <= cap:
        return 0
    while cap < need:
        cap = cap * 2 if cap else 64
    p = <int *> PyMem_Realloc(buf.data, cap * sizeof(int))
    if p == NULL:
        raise MemoryError()
    buf.data = p
    buf.cap = cap
    return 0


cdef inline void _push(Buf *buf, int b):
    if buf.size and buf.data[buf.size - 1] == -b:
        buf.size -= 1
    else:
        buf.data[buf.size] = b
        buf.size += 1


cdef tuple _finish(Buf *buf):
    cdef Py_ssize_t i
    cdef list out = [None] * buf.size
    for i in range(buf.size):
        out[i] = buf.data[i]
    return tuple(out)


def reduce_word(word):
    cdef Buf buf
    cdef object a
    buf.data = NULL
    buf.size = 0
    buf.cap = 0
    try:
        _grow(&buf, len(word) + 1)
        for a in word:
            _push(&buf, <int> a)
        return _finish(&buf)
    finally:
        PyMem_Free(buf.data)


def invert(word):
    return tuple([-a for a in reversed(word)])


cdef tuple _apply(tuple images, object word, Buf *buf):
    cdef int a, b
    cdef Py_ssize_t j, m
    cdef tuple img
    buf.size = 0
    for a in word:
        if a > 0:
            img = <tuple> images[a - 1]
            m = len(img)
            _grow(buf, buf.size + m)
            for j in range(m):
                _push(buf, <int> img[j])
        else:
            img = <tuple> images[-a - 1]
            m = len(img)
            _grow(buf, buf.size + m)
            for j in range(m - 1, -1, -1):
                b = img[j]
                _push(buf, -b)
    return _finish(buf)


def apply(images, word):
    cdef Buf buf
    buf.data = NULL
    buf.size = 0
    buf.cap = 0
    try:
        _grow(&buf, 64)
        return _apply(tuple(images), word, &buf)
    finally:
        PyMem_Free(buf.data)


def compose(outer, inner):
    cdef Buf buf
    cdef tuple imgs = tuple(outer)
    cdef list out = []
    buf.data = NULL
    buf.size = 0
    buf.cap = 0
    try:
        _grow(&buf, 64)
        for w in inner:
            out.append(_apply(imgs, w, &buf))
        return tuple(out)
    finally:
        PyMem_Free(buf.data)


def total_length(images):
    cdef Py_ssize_t s = 0
    for w in images:
        s += len(w)
    return s
