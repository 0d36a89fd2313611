"""Hot numeric loops, each in a numba flavour and a numpy/Python flavour.

The public wrappers at the bottom dispatch on :func:`graphalgo._accel.backend`.
Both flavours must agree exactly on integer outputs and to rounding on float
outputs; ``tests/test_kernels.py`` pins that.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from . import _accel
from ._accel import njit

# ------------------------------------------------------------ floyd-warshall


def _fw_python(d):
    n = d.shape[0]
    for k in range(n):
        np.minimum(d, d[:, k:k + 1] + d[k:k + 1, :], out=d)
    return d


@njit(cache=True)
def _fw_numba(d):
    n = d.shape[0]
    for k in range(n):
        for i in range(n):
            dik = d[i, k]
            if dik == np.inf:
                continue
            for j in range(n):
                cand = dik + d[k, j]
                if cand < d[i, j]:
                    d[i, j] = cand
    return d


# ------------------------------------------------------------ cyclic jacobi


def _jacobi_python(a, v, tol, max_sweeps):
    n = a.shape[0]
    for sweep in range(max_sweeps + 1):
        off = 0.0
        if n > 1:
            off = np.max(np.abs(a - np.diag(np.diag(a))))
        if off < tol:
            return sweep, True
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = 1.0 / (abs(theta) + np.sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                cp = a[:, p].copy()
                cq = a[:, q].copy()
                a[:, p] = c * cp - s * cq
                a[:, q] = s * cp + c * cq
                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                a[p, q] = 0.0
                a[q, p] = 0.0
                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
    return max_sweeps, False


@njit(cache=True)
def _jacobi_numba(a, v, tol, max_sweeps):
    n = a.shape[0]
    for sweep in range(max_sweeps + 1):
        off = 0.0
        for i in range(n):
            for j in range(n):
                if i != j and abs(a[i, j]) > off:
                    off = abs(a[i, j])
        if off < tol:
            return sweep, True
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = 1.0 / (abs(theta) + np.sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                for k in range(n):
                    akp = a[k, p]
                    akq = a[k, q]
                    a[k, p] = c * akp - s * akq
                    a[k, q] = s * akp + c * akq
                for k in range(n):
                    apk = a[p, k]
                    aqk = a[q, k]
                    a[p, k] = c * apk - s * aqk
                    a[q, k] = s * apk + c * aqk
                a[p, q] = 0.0
                a[q, p] = 0.0
                for k in range(n):
                    vkp = v[k, p]
                    vkq = v[k, q]
                    v[k, p] = c * vkp - s * vkq
                    v[k, q] = s * vkp + c * vkq
    return max_sweeps, False


# ------------------------------------------------------------ cheeger search
# Subsets always contain vertex 0; bit i of a mask stands for vertex i + 1.


def _cheeger_python(n, eu, ev, deg, chunk=1 << 16):
    total = int(deg.sum())
    count = (1 << (n - 1)) - 1
    shifts = np.arange(n - 1, dtype=np.int64)
    best = None  # (Fraction, mask, boundary, vol_min)
    for start in range(0, count, chunk):
        masks = np.arange(start, min(start + chunk, count), dtype=np.int64)
        member = np.ones((masks.size, n), dtype=np.int64)
        member[:, 1:] = (masks[:, None] >> shifts) & 1
        boundary = (member[:, eu] ^ member[:, ev]).sum(axis=1)
        vol = member @ deg
        vmin = np.minimum(vol, total - vol)
        ratio = boundary / vmin
        lo = ratio.min()
        for idx in np.flatnonzero(ratio <= lo * (1 + 1e-12)):
            h = Fraction(int(boundary[idx]), int(vmin[idx]))
            key = (h, int(masks[idx]))
            if best is None or key < best[:2]:
                best = (h, int(masks[idx]), int(boundary[idx]), int(vmin[idx]))
    return best[1], best[2], best[3]


@njit(cache=True)
def _cheeger_numba(n, indptr, indices, deg):
    total = 0
    for i in range(n):
        total += deg[i]
    full = (1 << (n - 1)) - 1
    inside = np.zeros(n, dtype=np.int64)
    inside[0] = 1
    boundary = deg[0]
    vol = deg[0]
    best_mask = 0
    best_b = boundary
    best_v = min(vol, total - vol)
    prev_gray = 0
    for i in range(1, full + 1):
        gray = i ^ (i >> 1)
        diff = gray ^ prev_gray
        bit = 0
        while (diff >> bit) != 1:
            bit += 1
        x = bit + 1
        for p in range(indptr[x], indptr[x + 1]):
            y = indices[p]
            if inside[y] == inside[x]:
                boundary += 1
            else:
                boundary -= 1
        if inside[x] == 1:
            inside[x] = 0
            vol -= deg[x]
        else:
            inside[x] = 1
            vol += deg[x]
        prev_gray = gray
        if gray == full:
            continue
        vmin = min(vol, total - vol)
        lhs = boundary * best_v
        rhs = best_b * vmin
        if lhs < rhs or (lhs == rhs and gray < best_mask):
            best_mask = gray
            best_b = boundary
            best_v = vmin
    return best_mask, best_b, best_v


# ------------------------------------------------------------ all-pairs BFS


def _bfs_python(n, adj):
    dist = np.full((n, n), -1, dtype=np.int64)
    sigma = np.zeros((n, n), dtype=np.float64)
    for s in range(n):
        dist[s, s] = 0
        sigma[s, s] = 1.0
        frontier = np.zeros(n, dtype=bool)
        frontier[s] = True
        level = 0
        while frontier.any():
            level += 1
            counts = adj.T @ np.where(frontier, sigma[s], 0.0)
            reached = (counts > 0) & (dist[s] < 0)
            dist[s, reached] = level
            sigma[s, reached] = counts[reached]
            frontier = reached
    return dist, sigma


@njit(cache=True)
def _bfs_numba(n, indptr, indices):
    dist = np.full((n, n), -1, dtype=np.int64)
    sigma = np.zeros((n, n), dtype=np.float64)
    queue = np.empty(n, dtype=np.int64)
    for s in range(n):
        dist[s, s] = 0
        sigma[s, s] = 1.0
        head = 0
        tail = 1
        queue[0] = s
        while head < tail:
            u = queue[head]
            head += 1
            for p in range(indptr[u], indptr[u + 1]):
                w = indices[p]
                if dist[s, w] < 0:
                    dist[s, w] = dist[s, u] + 1
                    queue[tail] = w
                    tail += 1
                if dist[s, w] == dist[s, u] + 1:
                    sigma[s, w] += sigma[s, u]
    return dist, sigma


# ------------------------------------------------------------ dispatch


def _csr(n, adjacency):
    indptr = np.zeros(n + 1, dtype=np.int64)
    for v, nb in enumerate(adjacency):
        indptr[v + 1] = indptr[v] + len(nb)
    indices = np.fromiter((w for nb in adjacency for w in nb), dtype=np.int64, count=int(indptr[-1]))
    return indptr, indices


def floyd_warshall_float(d: np.ndarray) -> np.ndarray:
    """All-pairs relaxation on a float matrix (inf = no edge), in place."""
    d = np.ascontiguousarray(d, dtype=np.float64)
    if _accel.backend() == "numba":
        return _fw_numba(d)
    return _fw_python(d)


def jacobi_eigh(a: np.ndarray, tol: float, max_sweeps: int):
    """Cyclic Jacobi; returns ``(diag, V, sweeps, converged)``."""
    a = np.array(a, dtype=np.float64, copy=True)
    v = np.eye(a.shape[0])
    if _accel.backend() == "numba":
        sweeps, ok = _jacobi_numba(a, v, float(tol), int(max_sweeps))
    else:
        sweeps, ok = _jacobi_python(a, v, float(tol), int(max_sweeps))
    return np.diag(a).copy(), v, int(sweeps), bool(ok)


def cheeger_search(n: int, edges, adjacency, degrees):
    """Exhaustive minimum of boundary / min volume over subsets holding vertex 0.

    Returns ``(mask, boundary, vol_min)`` of the minimiser; ties go to the
    smallest mask.
    """
    deg = np.asarray(degrees, dtype=np.int64)
    if _accel.backend() == "numba":
        indptr, indices = _csr(n, adjacency)
        mask, b, v = _cheeger_numba(n, indptr, indices, deg)
        return int(mask), int(b), int(v)
    eu = np.array([u for u, _ in edges], dtype=np.int64)
    ev = np.array([v for _, v in edges], dtype=np.int64)
    return _cheeger_python(n, eu, ev, deg)


def bfs_all_pairs(n: int, adjacency):
    """Hop distances (-1 when unreachable) and shortest-path counts."""
    if _accel.backend() == "numba":
        indptr, indices = _csr(n, adjacency)
        return _bfs_numba(n, indptr, indices)
    adj = np.zeros((n, n), dtype=np.float64)
    for v, nb in enumerate(adjacency):
        adj[v, list(nb)] = 1.0
    return _bfs_python(n, adj)


# ------------------------------------------------------------ embedding search
# Depth-first search over rotation systems, one vertex at a time. ``perms``
# holds every cyclic order of every vertex (rows of width ``maxdeg``);
# ``pptr[v]:pptr[v+1]`` are the rows of vertex v in search order ``order``.


def _embed_python(n_darts, order, deg, perms, pptr, target):
    nv = order.shape[0]
    nxt = np.full(n_darts, -1, dtype=np.int64)
    seen = np.zeros(n_darts, dtype=np.int64)
    choice = np.zeros(nv, dtype=np.int64)
    level = 0
    choice[0] = pptr[order[0]]
    while level >= 0:
        v = order[level]
        if choice[level] >= pptr[v + 1]:
            for k in range(deg[v]):
                nxt[perms[pptr[v], k]] = -1
            level -= 1
            if level >= 0:
                choice[level] += 1
            continue
        row = choice[level]
        dv = deg[v]
        for k in range(dv):
            nxt[perms[row, k]] = perms[row, (k + 1) % dv]
        # closed faces plus a 3-darts-per-face bound on the rest
        seen[:] = 0
        closed = 0
        free = 0
        for d0 in range(n_darts):
            if seen[d0]:
                continue
            d = d0
            length = 0
            ok = True
            while seen[d] == 0:
                seen[d] = 1
                length += 1
                s = nxt[d ^ 1]
                if s < 0:
                    ok = False
                    break
                d = s
            if ok and d == d0:
                closed += 1
            else:
                free += length
        if level == nv - 1:
            if closed == target:
                return True
            choice[level] += 1
        elif closed + free // 3 >= target:
            level += 1
            choice[level] = pptr[order[level]]
        else:
            choice[level] += 1
    return False


_embed_numba = njit(cache=True)(_embed_python)


def embedding_search(n_darts, order, deg, perms, pptr, target) -> bool:
    """True when some rotation system has exactly ``target`` faces."""
    args = (
        int(n_darts),
        np.asarray(order, dtype=np.int64),
        np.asarray(deg, dtype=np.int64),
        np.asarray(perms, dtype=np.int64),
        np.asarray(pptr, dtype=np.int64),
        int(target),
    )
    if _accel.backend() == "numba":
        return bool(_embed_numba(*args))
    return bool(_embed_python(*args))
