"""Normalized Laplacian spectra, Cheeger constant, graph p-Laplacian."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import _kernels
from .errors import (
    BadDimension,
    BadP,
    DirectedUnsupported,
    Disconnected,
    IsolatedVertex,
    NoConvergence,
    NotSymmetric,
    TooLarge,
    TooSmall,
    ZeroVector,
)
from .graph import Graph
from .traversal import is_connected

__all__ = [
    "Spectrum",
    "CutReport",
    "CheegerReport",
    "PEigenReport",
    "PEigenpair",
    "normalized_laplacian",
    "symmetric_spectrum",
    "laplacian_spectrum",
    "cheeger_constant",
    "cheeger_inequality_check",
    "phi_p",
    "p_laplacian_apply",
    "p_rayleigh",
    "p_eigenpair_check",
    "complete_graph_p_spectrum",
    "CHEEGER_MAX_VERTICES",
]

CHEEGER_MAX_VERTICES = 22


@dataclass(frozen=True)
class Spectrum:
    values: np.ndarray  # ascending
    vectors: np.ndarray  # column k pairs with values[k]
    residual: float  # max_k ||M x_k - lambda_k x_k||_inf
    sweeps: int

    @property
    def lambda2(self) -> float:
        return float(self.values[1])


def _undirected(g):
    if g.directed:
        raise DirectedUnsupported("spectral tools are for undirected graphs")


def normalized_laplacian(g: Graph) -> np.ndarray:
    """``I - D^{-1/2} A D^{-1/2}`` as a dense float matrix."""
    _undirected(g)
    deg = np.asarray(g.degrees, dtype=float)
    if g.n and deg.min() == 0:
        raise IsolatedVertex(f"vertex {int(np.argmin(deg))} is isolated")
    m = np.eye(g.n)
    for u, v in g.edges:
        w = -1.0 / math.sqrt(deg[u] * deg[v])
        m[u, v] = m[v, u] = w
    return m


def symmetric_spectrum(m, tol: float = 1e-12, max_sweeps: int = 100) -> Spectrum:
    """Eigen-decomposition by cyclic Jacobi rotations.

    Stops once the largest off-diagonal entry drops below ``tol`` times the
    matrix scale.
    """
    a = np.asarray(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise BadDimension("matrix must be square")
    scale = max(1.0, float(np.abs(a).max())) if a.size else 1.0
    if a.size and float(np.abs(a - a.T).max()) > tol * scale:
        raise NotSymmetric("matrix is not symmetric")
    diag, vecs, sweeps, ok = _kernels.jacobi_eigh((a + a.T) / 2, tol * scale, max_sweeps)
    if not ok:
        raise NoConvergence(f"no convergence after {max_sweeps} sweeps")
    order = np.argsort(diag, kind="stable")
    vals, vecs = diag[order], vecs[:, order]
    res = float(np.abs(a @ vecs - vecs * vals).max()) if a.size else 0.0
    return Spectrum(vals, vecs, res, sweeps)


def laplacian_spectrum(g: Graph, tol: float = 1e-12) -> Spectrum:
    return symmetric_spectrum(normalized_laplacian(g), tol)


# ------------------------------------------------------------ Cheeger


@dataclass(frozen=True)
class CutReport:
    subset: frozenset
    h: Fraction
    boundary: int
    vol_subset: int
    vol_complement: int


def cheeger_constant(g: Graph, max_vertices: int = CHEEGER_MAX_VERTICES) -> CutReport:
    """Exhaustive minimum of |E(S, S')| / min(vol S, vol S') over S holding vertex 0."""
    _undirected(g)
    if g.n < 2:
        raise TooSmall("Cheeger constant needs at least 2 vertices")
    if g.n > max_vertices:
        raise TooLarge(f"{g.n} vertices exceeds the exhaustive limit {max_vertices}")
    if not is_connected(g):
        raise Disconnected("graph is not connected")
    mask, boundary, vmin = _kernels.cheeger_search(g.n, g.edges, g.adjacency, g.degrees)
    subset = frozenset([0] + [i + 1 for i in range(g.n - 1) if mask >> i & 1])
    vol_s = sum(g.degrees[v] for v in subset)
    total = 2 * g.m
    return CutReport(subset, Fraction(boundary, vmin), boundary, vol_s, total - vol_s)


@dataclass(frozen=True)
class CheegerReport:
    h: Fraction
    lambda2: float
    lower: float  # 1 - sqrt(1 - h^2)
    upper: float  # 2 h
    classical: float  # h^2 / 2
    lower_ok: bool
    upper_ok: bool
    classical_ok: bool

    @property
    def ok(self) -> bool:
        return self.lower_ok and self.upper_ok and self.classical_ok


def cheeger_inequality_check(g: Graph, tol: float = 1e-8) -> CheegerReport:
    cut = cheeger_constant(g)
    lam = laplacian_spectrum(g).lambda2
    h = float(cut.h)
    lower = 1.0 - math.sqrt(max(0.0, 1.0 - h * h))
    upper = 2.0 * h
    classical = h * h / 2.0
    return CheegerReport(
        cut.h, lam, lower, upper, classical,
        lower <= lam + tol, lam <= upper + tol, classical <= lam + tol,
    )


# ------------------------------------------------------------ p-Laplacian


def _check_p(p):
    if not p > 1:
        raise BadP(f"p must exceed 1, got {p}")


def phi_p(t, p):
    """|t|^{p-2} t, with phi_p(0) = 0."""
    t = np.asarray(t, dtype=float)
    return np.sign(t) * np.abs(t) ** (p - 1)


def _vector(g, x):
    x = np.asarray(x, dtype=float)
    if x.shape != (g.n,):
        raise BadDimension(f"vector of length {x.shape} for {g.n} vertices")
    return x


def p_laplacian_apply(g: Graph, p: float, x, normalized: bool = False) -> np.ndarray:
    """(L_p x)_i = sum over neighbours j of phi_p(x_i - x_j); normalized divides by d_i."""
    _undirected(g)
    _check_p(p)
    x = _vector(g, x)
    out = np.zeros(g.n)
    for u, v in g.edges:
        f = float(phi_p(x[u] - x[v], p))
        out[u] += f
        out[v] -= f
    if normalized:
        deg = np.asarray(g.degrees, dtype=float)
        if g.n and deg.min() == 0:
            raise IsolatedVertex("normalized p-Laplacian needs positive degrees")
        out = out / deg
    return out


def p_rayleigh(g: Graph, p: float, x, normalized: bool = False) -> float:
    x = _vector(g, x)
    num = sum(abs(x[u] - x[v]) ** p for u, v in g.edges)
    w = np.asarray(g.degrees, dtype=float) if normalized else np.ones(g.n)
    den = float((w * np.abs(x) ** p).sum())
    if den == 0:
        raise ZeroVector("x is zero")
    return float(num / den)


@dataclass(frozen=True)
class PEigenReport:
    ok: bool
    residual: float
    rayleigh: float
    rayleigh_ok: bool
    phi_sum: float | None  # sum of (d_i) phi_p(x_i), checked when lambda != 0
    phi_sum_ok: bool


def p_eigenpair_check(g: Graph, p: float, lam: float, x, normalized: bool = False,
                      tol: float = 1e-9) -> PEigenReport:
    """Residual of sum_j phi(x_i - x_j) = lam (d_i) phi(x_i) plus two side checks."""
    _check_p(p)
    x = _vector(g, x)
    if not np.any(x):
        raise ZeroVector("x is zero")
    lhs = p_laplacian_apply(g, p, x, normalized)
    rhs = lam * phi_p(x, p)
    residual = float(np.abs(lhs - rhs).max())
    ray = p_rayleigh(g, p, x, normalized)
    ray_ok = abs(ray - lam) <= tol * max(1.0, abs(lam))
    phi_sum = None
    phi_ok = True
    if abs(lam) > tol:
        w = np.asarray(g.degrees, dtype=float) if normalized else np.ones(g.n)
        phi_sum = float((w * phi_p(x, p)).sum())
        phi_ok = abs(phi_sum) <= tol * max(1.0, float(np.abs(w * phi_p(x, p)).sum()))
    return PEigenReport(residual <= tol and ray_ok and phi_ok, residual, ray, ray_ok, phi_sum, phi_ok)


@dataclass(frozen=True)
class PEigenpair:
    alpha: int
    beta: int
    value: float
    vector: np.ndarray


def complete_graph_p_spectrum(n: int, p: float) -> list[PEigenpair]:
    """Nonzero eigenvalues of L_p on K_n with witnesses a 1_A - b 1_B.

    A = {0..alpha-1}, B = {alpha..alpha+beta-1}, a and b proportional to
    beta^{1/(p-1)} and alpha^{1/(p-1)}, scaled so the larger equals 1.
    """
    _check_p(p)
    if n < 2:
        raise TooSmall("K_n needs n >= 2")
    q = 1.0 / (p - 1.0)
    out = []
    for alpha, beta in itertools.product(range(1, n), repeat=2):
        if alpha + beta > n:
            continue
        a, b = beta**q, alpha**q
        top = max(a, b)
        a, b = a / top, b / top
        x = np.zeros(n)
        x[:alpha] = a
        x[alpha:alpha + beta] = -b
        lam = n - alpha - beta + (alpha**q + beta**q) ** (p - 1)
        out.append(PEigenpair(alpha, beta, float(lam), x))
    return out
