"""Hot numeric kernels with two selectable backends.

Two families of kernels dominate the runtime of the polynomial solvers:

* ``cc_labels`` — connected-component labeling over an edge array, run once
  per color when building surviving partitions;
* ``chordal_scan`` — maximum cardinality search plus perfect-elimination
  verification plus maximal-clique extraction on one (sub)graph in CSR form,
  run once per vertex neighborhood by the locally chordal clique solver.

The default backend compiles both loops with numba ``@njit``.  Setting the
environment variable ``COLORAVOID_BACKEND=numpy`` (or calling
``use_backend("numpy")``) selects the fallback: a vectorized numpy
min-label/pointer-jumping pass for ``cc_labels`` and the interpreted loop
for ``chordal_scan``.  Both backends produce bit-identical results;
``benchmarks/bench_kernels.py`` compares their speed.
"""

from __future__ import annotations

import os
from typing import Callable, NamedTuple

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

ENV_VAR = "COLORAVOID_BACKEND"


# ---------------------------------------------------------------------------
# connected components
# ---------------------------------------------------------------------------


def _cc_labels_loop(n, eu, ev):
    # Union-find, hooking the larger root under the smaller, so every final
    # root is the minimum vertex id of its component (canonical labels).
    parent = np.arange(n, dtype=np.int64)
    for i in range(eu.shape[0]):
        a = eu[i]
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        b = ev[i]
        while parent[b] != b:
            parent[b] = parent[parent[b]]
            b = parent[b]
        if a == b:
            continue
        if a < b:
            parent[b] = a
        else:
            parent[a] = b
    for v in range(n):
        r = v
        while parent[r] != r:
            r = parent[r]
        c = v
        while parent[c] != r:
            nxt = parent[c]
            parent[c] = r
            c = nxt
    return parent


def _cc_labels_fastsv(n, eu, ev):
    # Min-label hooking with full pointer jumping (FastSV style); labels only
    # ever decrease and the minimum of each component is a fixed point, so
    # the result matches the union-find backend exactly.
    labels = np.arange(n, dtype=np.int64)
    if eu.shape[0] == 0:
        return labels
    while True:
        while True:
            nxt = labels[labels]
            if np.array_equal(nxt, labels):
                break
            labels = nxt
        lu = labels[eu]
        lv = labels[ev]
        lo = np.minimum(lu, lv)
        hi = np.maximum(lu, lv)
        active = lo < hi
        if not active.any():
            return labels
        np.minimum.at(labels, hi[active], lo[active])


# ---------------------------------------------------------------------------
# maximum cardinality search + chordality + clique extraction
# ---------------------------------------------------------------------------


def _chordal_scan_loop(n, indptr, indices):
    """MCS over a CSR graph; returns selection order, chordality verdict and,
    when chordal, all maximal cliques.

    Returns ``(order, chordal, v, u, w, clique_data, clique_starts)``.
    ``order`` is the selection order; reversing it gives a perfect
    elimination order iff ``chordal`` is 1.  On failure ``(v, u, w)`` is a
    violating triple: u and w are selected-before neighbors of v that are
    not adjacent.  On success the cliques are flattened into
    ``clique_data`` with ``clique_starts`` offsets (one extra sentinel).
    """
    order = np.empty(n, dtype=np.int64)
    selpos = np.full(n, -1, dtype=np.int64)
    empty = np.empty(0, dtype=np.int64)
    if n == 0:
        return order, np.int64(1), np.int64(-1), np.int64(-1), np.int64(-1), empty, np.zeros(1, dtype=np.int64)

    # --- pass 1: maximum cardinality search with weight buckets ---
    weight = np.zeros(n, dtype=np.int64)
    bhead = np.full(n + 1, -1, dtype=np.int64)
    bnext = np.full(n, -1, dtype=np.int64)
    bprev = np.full(n, -1, dtype=np.int64)
    for v in range(n - 1, -1, -1):
        bnext[v] = bhead[0]
        if bhead[0] != -1:
            bprev[bhead[0]] = v
        bhead[0] = v
    maxw = 0
    for i in range(n):
        while maxw > 0 and bhead[maxw] == -1:
            maxw -= 1
        v = bhead[maxw]
        bhead[maxw] = bnext[v]
        if bnext[v] != -1:
            bprev[bnext[v]] = -1
        bnext[v] = -1
        order[i] = v
        selpos[v] = i
        for j in range(indptr[v], indptr[v + 1]):
            w = indices[j]
            if selpos[w] == -1:
                pw = bprev[w]
                nw = bnext[w]
                if pw == -1:
                    bhead[weight[w]] = nw
                else:
                    bnext[pw] = nw
                if nw != -1:
                    bprev[nw] = pw
                weight[w] += 1
                b = weight[w]
                bnext[w] = bhead[b]
                bprev[w] = -1
                if bhead[b] != -1:
                    bprev[bhead[b]] = w
                bhead[b] = w
        if maxw < n:
            maxw += 1

    # --- pass 2: perfect-elimination check (reverse selection order) ---
    # For each v, among its selected-before neighbors W the one selected
    # last must be adjacent to all others; checking just that pair set is
    # the standard full test.
    stamp = np.full(n, -1, dtype=np.int64)
    for i in range(n):
        v = order[i]
        u = -1
        upos = -1
        for j in range(indptr[v], indptr[v + 1]):
            w = indices[j]
            if selpos[w] < i and selpos[w] > upos:
                upos = selpos[w]
                u = w
        if u == -1:
            continue
        for j in range(indptr[u], indptr[u + 1]):
            stamp[indices[j]] = i
        for j in range(indptr[v], indptr[v + 1]):
            w = indices[j]
            if selpos[w] < i and w != u and stamp[w] != i:
                return order, np.int64(0), np.int64(v), np.int64(u), np.int64(w), empty, np.zeros(1, dtype=np.int64)

    # --- pass 3: clique extraction ---
    # Candidate at step i is {order[i]} + its selected-before neighbors; a
    # candidate not swallowed by its successor is a maximal clique.
    m = indices.shape[0]
    data = np.empty(n + m, dtype=np.int64)
    starts = np.empty(n + 1, dtype=np.int64)
    cur = np.empty(n, dtype=np.int64)
    ncl = 0
    dpos = 0
    cur[0] = order[0]
    cur_len = 1
    for i in range(1, n):
        v = order[i]
        for j in range(indptr[v], indptr[v + 1]):
            stamp[indices[j]] = n + i
        contained = True
        for t in range(cur_len):
            if stamp[cur[t]] != n + i:
                contained = False
                break
        if not contained:
            starts[ncl] = dpos
            ncl += 1
            for t in range(cur_len):
                data[dpos] = cur[t]
                dpos += 1
        cur[0] = v
        cur_len = 1
        for j in range(indptr[v], indptr[v + 1]):
            w = indices[j]
            if selpos[w] < i:
                cur[cur_len] = w
                cur_len += 1
    starts[ncl] = dpos
    ncl += 1
    for t in range(cur_len):
        data[dpos] = cur[t]
        dpos += 1
    starts[ncl] = dpos
    return order, np.int64(1), np.int64(-1), np.int64(-1), np.int64(-1), data[:dpos].copy(), starts[: ncl + 1].copy()


# ---------------------------------------------------------------------------
# backend selection
# ---------------------------------------------------------------------------


class Backend(NamedTuple):
    name: str
    cc_labels: Callable
    chordal_scan: Callable


_BACKENDS: dict[str, Backend] = {
    "numpy": Backend("numpy", _cc_labels_fastsv, _chordal_scan_loop),
}

if numba is not None:
    _njit = numba.njit(cache=True, nogil=True)
    _BACKENDS["numba"] = Backend(
        "numba", _njit(_cc_labels_loop), _njit(_chordal_scan_loop)
    )


def available_backends() -> tuple[str, ...]:
    return tuple(sorted(_BACKENDS))


def get_backend(name: str) -> Backend:
    try:
        return _BACKENDS[name]
    except KeyError:
        raise ValueError(
            f"unknown backend {name!r}; available: {available_backends()}"
        ) from None


def _default_backend() -> Backend:
    requested = os.environ.get(ENV_VAR, "").strip().lower()
    if requested:
        return get_backend(requested)
    return _BACKENDS.get("numba", _BACKENDS["numpy"])


_active = _default_backend()


def use_backend(name: str) -> None:
    """Switch the process-wide kernel backend (mostly for benchmarks)."""
    global _active
    _active = get_backend(name)


def active_backend() -> Backend:
    return _active


def cc_labels(n: int, eu: np.ndarray, ev: np.ndarray) -> np.ndarray:
    """Component labels for an n-vertex graph given by edge arrays.

    ``labels[v]`` is the minimum vertex id in v's component.
    """
    eu = np.ascontiguousarray(eu, dtype=np.int64)
    ev = np.ascontiguousarray(ev, dtype=np.int64)
    return _active.cc_labels(n, eu, ev)


def chordal_scan(n: int, indptr: np.ndarray, indices: np.ndarray):
    """Run the MCS/chordality/clique kernel on a CSR graph; see
    ``_chordal_scan_loop`` for the return contract."""
    indptr = np.ascontiguousarray(indptr, dtype=np.int64)
    indices = np.ascontiguousarray(indices, dtype=np.int64)
    return _active.chordal_scan(n, indptr, indices)


def warmup() -> None:
    """Trigger JIT compilation on tiny inputs so later calls run hot."""
    cc_labels(2, np.array([0], dtype=np.int64), np.array([1], dtype=np.int64))
    chordal_scan(
        2,
        np.array([0, 1, 2], dtype=np.int64),
        np.array([1, 0], dtype=np.int64),
    )
