"""Pure-numpy permutation kernels; reference backend for ``_kernels_c``.

Elements are permutations of ``m`` points stored as int32 rows, acting on
the left: row ``x`` sends point ``p`` to ``x[p]``, and the product
``x * y`` is ``x[y]``. An element is identified by the images of the base
points, encoded as a single int64 key.
"""
from __future__ import annotations

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

BACKEND = "python"


class CapExceeded(RuntimeError):
    pass


def encode(images: np.ndarray, m: int) -> np.ndarray:
    """Keys for rows of base images, shape (N, n) -> (N,)."""
    images = np.asarray(images, dtype=np.int64)
    weights = m ** np.arange(images.shape[1], dtype=np.int64)
    return images @ weights


def closure(gens: np.ndarray, base: np.ndarray, cap: int) -> np.ndarray:
    """All products of the generators, in breadth-first discovery order."""
    gens = np.ascontiguousarray(gens, dtype=np.int32)
    k, m = gens.shape
    base = np.asarray(base, dtype=np.int64)
    ident = np.arange(m, dtype=np.int32)
    blocks = [ident[None, :]]
    seen = np.sort(encode(ident[base][None, :], m))
    frontier = ident[None, :]
    total = 1
    while len(frontier):
        # candidates ordered by (parent, generator)
        cand = frontier[:, gens].reshape(len(frontier) * k, m)
        keys = encode(cand[:, base], m)
        _, first = np.unique(keys, return_index=True)
        first.sort()
        cand, keys = cand[first], keys[first]
        pos = np.searchsorted(seen, keys)
        pos[pos == len(seen)] = 0
        new = seen[pos] != keys
        frontier = cand[new]
        if len(frontier):
            total += len(frontier)
            if total > cap:
                raise CapExceeded(total)
            blocks.append(frontier)
            seen = np.sort(np.concatenate([seen, keys[new]]))
    return np.ascontiguousarray(np.concatenate(blocks), dtype=np.int32)


def lookup(keys: np.ndarray, sorted_keys: np.ndarray, order: np.ndarray) -> np.ndarray:
    pos = np.searchsorted(sorted_keys, keys)
    pos = np.minimum(pos, len(sorted_keys) - 1)
    if not np.all(sorted_keys[pos] == keys):
        raise KeyError("element not in group")
    return order[pos]


def conjugacy_labels(perms, base, gen_idx, sorted_keys, order) -> np.ndarray:
    """Class label per element; labels numbered by smallest member index."""
    n_el, m = perms.shape
    base = np.asarray(base, dtype=np.int64)
    rows, cols = [], []
    for s in gen_idx:
        sp = perms[s]
        sinv = np.argsort(sp).astype(np.int32)
        # s x s^-1 on base points: s[x[sinv[b]]]
        imgs = sp[perms[:, sinv[base]]]
        idx = lookup(encode(imgs, m), sorted_keys, order)
        rows.append(np.arange(n_el))
        cols.append(idx)
    r = np.concatenate(rows)
    c = np.concatenate(cols)
    graph = coo_matrix((np.ones(len(r), dtype=np.int8), (r, c)), shape=(n_el, n_el))
    _, comp = connected_components(graph, directed=True, connection="weak")
    # renumber components by smallest member index
    labels, first = np.unique(comp, return_index=True)
    remap = np.empty(comp.max() + 1, dtype=np.int64)
    remap[labels[np.argsort(first)]] = np.arange(len(labels))
    return remap[comp]


def centralizer_mask(perms, inv_base, g, base) -> np.ndarray:
    """Boolean mask of elements h with h g h^-1 == g.

    ``inv_base[i]`` holds the images of the base points under element i's
    inverse.
    """
    base = np.asarray(base, dtype=np.int64)
    g = np.asarray(g)
    conj = np.take_along_axis(perms, g[inv_base].astype(np.int64), axis=1)
    return np.all(conj == g[base][None, :], axis=1)
