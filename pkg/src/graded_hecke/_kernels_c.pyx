# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled permutation kernels; same contracts as ``_kernels_py``."""
import numpy as np
cimport numpy as cnp
from libc.stdint cimport int32_t, int64_t
from libcpp.unordered_map cimport unordered_map
from libcpp.vector cimport vector

cnp.import_array()

BACKEND = "cython"

from ._kernels_py import CapExceeded, encode, lookup


cdef inline int64_t _key(const int32_t* row, const int64_t* base, int nb, int64_t m) nogil:
    cdef int64_t k = 0
    cdef int64_t w = 1
    cdef int j
    for j in range(nb):
        k += row[base[j]] * w
        w *= m
    return k


def closure(gens, base, long cap):
    cdef int32_t[:, ::1] g = np.ascontiguousarray(gens, dtype=np.int32)
    cdef int64_t[::1] b = np.ascontiguousarray(base, dtype=np.int64)
    cdef int k = g.shape[0]
    cdef int m = g.shape[1]
    cdef int nb = b.shape[0]
    cdef vector[int32_t] store
    cdef unordered_map[int64_t, int64_t] seen
    cdef int64_t head = 0, count = 1, key, off
    cdef int s, p
    cdef vector[int32_t] tmp
    tmp.resize(m)
    store.reserve(<size_t>m * 1024)
    for p in range(m):
        store.push_back(p)
    seen[_key(&store[0], &b[0], nb, m)] = 0
    with nogil:
        while head < count:
            off = head * m
            for s in range(k):
                # (x * s)[p] = x[s[p]]
                for p in range(m):
                    tmp[p] = store[off + g[s, p]]
                key = _key(&tmp[0], &b[0], nb, m)
                if seen.count(key) == 0:
                    seen[key] = count
                    count += 1
                    if count > cap:
                        break
                    for p in range(m):
                        store.push_back(tmp[p])
            if count > cap:
                break
            head += 1
    if count > cap:
        raise CapExceeded(count)
    out = np.empty((count, m), dtype=np.int32)
    cdef int32_t[:, ::1] o = out
    cdef int64_t i
    for i in range(count):
        for p in range(m):
            o[i, p] = store[i * m + p]
    return out


def conjugacy_labels(perms, base, gen_idx, sorted_keys, order):
    cdef int32_t[:, ::1] P = np.ascontiguousarray(perms, dtype=np.int32)
    cdef int64_t[::1] b = np.ascontiguousarray(base, dtype=np.int64)
    cdef int64_t n_el = P.shape[0]
    cdef int m = P.shape[1]
    cdef int nb = b.shape[0]
    cdef unordered_map[int64_t, int64_t] index
    cdef int64_t[::1] sk = np.ascontiguousarray(sorted_keys, dtype=np.int64)
    cdef int64_t[::1] od = np.ascontiguousarray(order, dtype=np.int64)
    cdef int64_t i, j, x, r1, r2, key
    cdef int p, t
    for i in range(n_el):
        index[sk[i]] = od[i]
    parent_arr = np.arange(n_el, dtype=np.int64)
    cdef int64_t[::1] parent = parent_arr
    cdef int32_t[::1] sp, sinv
    cdef vector[int32_t] img
    img.resize(nb)
    for s in gen_idx:
        sp = np.ascontiguousarray(P[s], dtype=np.int32)
        sinv = np.argsort(np.asarray(sp)).astype(np.int32)
        with nogil:
            for i in range(n_el):
                key = 0
                x = 1
                for t in range(nb):
                    key += sp[P[i, sinv[b[t]]]] * x
                    x *= m
                j = index[key]
                # union by smaller root
                r1 = i
                while parent[r1] != r1:
                    parent[r1] = parent[parent[r1]]
                    r1 = parent[r1]
                r2 = j
                while parent[r2] != r2:
                    parent[r2] = parent[parent[r2]]
                    r2 = parent[r2]
                if r1 < r2:
                    parent[r2] = r1
                elif r2 < r1:
                    parent[r1] = r2
    labels = np.empty(n_el, dtype=np.int64)
    cdef int64_t[::1] lab = labels
    cdef int64_t nxt = 0
    with nogil:
        for i in range(n_el):
            r1 = i
            while parent[r1] != r1:
                r1 = parent[r1]
            if r1 == i:
                lab[i] = nxt
                nxt += 1
            else:
                lab[i] = lab[r1]
    return labels


def centralizer_mask(perms, inv_base, g, base):
    cdef int32_t[:, ::1] P = np.ascontiguousarray(perms, dtype=np.int32)
    cdef int32_t[:, ::1] IB = np.ascontiguousarray(inv_base, dtype=np.int32)
    cdef int32_t[::1] gg = np.ascontiguousarray(g, dtype=np.int32)
    cdef int64_t[::1] b = np.ascontiguousarray(base, dtype=np.int64)
    cdef int64_t n_el = P.shape[0]
    cdef int nb = b.shape[0]
    out = np.ones(n_el, dtype=bool)
    cdef cnp.npy_bool[::1] o = out
    cdef int64_t i
    cdef int t
    with nogil:
        for i in range(n_el):
            for t in range(nb):
                if P[i, gg[IB[i, t]]] != gg[b[t]]:
                    o[i] = 0
                    break
    return out
