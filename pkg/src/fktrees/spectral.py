"""Dirichlet Laplacian on trees with boundary: matrices, eigenpairs, bounds.

The Dirichlet matrix acts on functions supported on the interior: the
diagonal carries the full degree of each interior vertex in the host tree
(boundary neighbors contribute, since the extension by zero pays for those
edges), and off-diagonal entries are -1 exactly for interior-interior
edges.  With a connected interior the matrix is irreducibly diagonally
dominant, hence positive definite, the smallest eigenvalue is simple, and
its eigenvector can be chosen strictly positive; first_eigenpair checks all
three facts numerically on every call.

Interior vertices are always ordered ascending by vertex id; eigenfunctions
and user-supplied Rayleigh test functions use that ordering.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DisconnectedInteriorError,
    EmptyInteriorError,
    InvalidDemotionError,
    NoConvergenceError,
    NonPositiveEigenvectorError,
    TooSmallError,
    ZeroFunctionError,
)
from .trees import TreeWithBoundary, from_edge_list, inscribed_radius

__all__ = [
    "DirichletMatrix",
    "DirichletSpectrum",
    "dirichlet_matrix",
    "first_eigenpair",
    "rayleigh_quotient",
    "path_eigenvalue",
    "eigenvalue_bounds",
    "extension_monotonicity_check",
    "ExtensionReport",
    "zero_extension",
    "build_path",
]

DEFAULT_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class DirichletMatrix:
    """Symmetric matrix of -Laplacian restricted to the interior."""

    order: int
    vertices: tuple[int, ...]  # interior vertex ids, ascending
    entries: np.ndarray

    def index_of(self, v: int) -> int:
        return self.vertices.index(v)


@dataclass(frozen=True, eq=False)
class DirichletSpectrum:
    """First eigenpair with its numerical certificates.

    eigenfunction has unit Euclidean norm, strictly positive entries, and is
    indexed by ``vertices``.  ``gap`` is lambda2 - lambda1 (None when the
    interior is a single vertex, where simplicity is vacuous).
    """

    lambda1: float
    eigenfunction: np.ndarray
    vertices: tuple[int, ...]
    residual: float
    gap: float | None


def dirichlet_matrix(tree: TreeWithBoundary) -> DirichletMatrix:
    """Assemble the interior-restricted matrix (degree diagonal, -1 for
    interior-interior edges)."""
    interior = tree.interior
    idx = {v: i for i, v in enumerate(interior)}
    k = len(interior)
    mat = np.zeros((k, k))
    for v in interior:
        mat[idx[v], idx[v]] = tree.degree(v)
    for u, v in tree.edges:
        if u in idx and v in idx:
            mat[idx[u], idx[v]] = -1.0
            mat[idx[v], idx[u]] = -1.0
    return DirichletMatrix(order=k, vertices=interior, entries=mat)


def first_eigenpair(tree: TreeWithBoundary, tol: float = DEFAULT_TOL) -> DirichletSpectrum:
    """Smallest Dirichlet eigenvalue with a positive unit eigenvector.

    The interior sizes in play are tiny, so a dense symmetric eigensolve is
    both simplest and as accurate as it gets; the residual and positivity
    contracts are still verified explicitly.  Sign is fixed so the entry of
    the lowest-index interior vertex is positive.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    dm = dirichlet_matrix(tree)
    try:
        w, vecs = np.linalg.eigh(dm.entries)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - tiny dense solves
        raise NoConvergenceError(f"eigensolver failed: {exc}") from exc
    lam = float(w[0])
    f = vecs[:, 0].copy()
    if f[0] < 0:
        f = -f
    f /= np.linalg.norm(f)
    residual = float(np.max(np.abs(dm.entries @ f - lam * f)))
    if residual > tol:
        raise NoConvergenceError(
            f"residual {residual:.3e} exceeds tolerance {tol:.3e}"
        )
    if np.min(f) <= 0.0:
        raise NonPositiveEigenvectorError(
            "ground-state eigenvector has a non-positive entry"
        )
    gap = float(w[1] - w[0]) if dm.order > 1 else None
    return DirichletSpectrum(
        lambda1=lam,
        eigenfunction=f,
        vertices=dm.vertices,
        residual=residual,
        gap=gap,
    )


def zero_extension(tree: TreeWithBoundary, f: Sequence[float]) -> np.ndarray:
    """Extend an interior function to all vertices by zero on the boundary."""
    interior = tree.interior
    if len(f) != len(interior):
        raise ValueError(
            f"function has {len(f)} entries, interior has {len(interior)}"
        )
    fhat = np.zeros(tree.n)
    for value, v in zip(f, interior):
        fhat[v] = value
    return fhat


def rayleigh_quotient(tree: TreeWithBoundary, f: Sequence[float]) -> float:
    """Edge energy of the zero-extension divided by the interior mass.

    f is indexed by ascending interior vertex id, as everywhere else.
    """
    fhat = zero_extension(tree, f)
    mass = float(sum(x * x for x in f))
    if mass == 0.0:
        raise ZeroFunctionError("Rayleigh quotient of the zero function")
    energy = 0.0
    for u, v in tree.edges:
        d = fhat[u] - fhat[v]
        energy += d * d
    return energy / mass


def path_eigenvalue(length: int) -> float:
    """Closed form for the path on ``length`` vertices: 2(1 - cos(pi/(l-1)))."""
    if length < 3:
        raise TooSmallError(f"path needs at least 3 vertices, got {length}")
    return 2.0 * (1.0 - math.cos(math.pi / (length - 1)))


def build_path(length: int) -> TreeWithBoundary:
    """P_length with leaf boundary {0, length-1}."""
    if length < 3:
        raise TooSmallError(f"path with interior needs >= 3 vertices, got {length}")
    return from_edge_list(length, [(i, i + 1) for i in range(length - 1)])


def eigenvalue_bounds(tree: TreeWithBoundary) -> tuple[float, float]:
    """(4 sin^2(pi/(4r+2)), b/|interior|): the nominal sandwich for lambda1,
    with r the inscribed radius (max distance of a vertex to the boundary).

    The upper bound always holds and is attained iff every interior vertex
    carries b/|interior| leaves.  The lower bound is attained exactly by the
    path P_{2r+2}, but as a bound it is NOT universally valid: a pendant
    leaf grafted deep inside a long two-armed spider collapses r without
    raising lambda1 (first counterexample at n = 10: arms of length 4 plus
    one extra leaf at the hub give lambda1 ~ 0.325 < 4 sin^2(pi/10) ~ 0.382,
    certified by the test vector (1, 1.6, 1.8, 1.2, 1.6, 1.8, 1.2) whose
    Rayleigh quotient is 15/43).  The weaker 1/r^2 bound and the variant
    with floor(D/2) in place of r hold on every tree enumerated through
    n = 12; paths and stars have r = floor(D/2), so all closed-form equality
    cases are unaffected.
    """
    if tree.n < 3:
        raise TooSmallError("bounds need n >= 3")
    r = inscribed_radius(tree)
    lower = 4.0 * math.sin(math.pi / (4 * r + 2)) ** 2
    upper = len(tree.boundary) / len(tree.interior)
    return lower, upper


@dataclass(frozen=True)
class ExtensionReport:
    """Eigenvalues before/after demoting interior vertices to the boundary."""

    demoted: tuple[int, ...]
    lambda_full: float
    lambda_demoted: float
    ok: bool


def extension_monotonicity_check(
    tree: TreeWithBoundary, demote: Iterable[int], tol: float = 1e-12
) -> ExtensionReport:
    """Check that enlarging the boundary can only raise the first eigenvalue.

    Demoting interior vertices to boundary restricts the Dirichlet problem
    to a principal submatrix, so lambda1 cannot decrease; the demotion must
    leave a nonempty connected interior.
    """
    demoted = tuple(sorted(set(demote)))
    interior = set(tree.interior)
    for v in demoted:
        if v not in interior:
            raise InvalidDemotionError(f"vertex {v} is not interior")
    lam_full = first_eigenpair(tree).lambda1
    if not demoted:
        return ExtensionReport(demoted, lam_full, lam_full, True)
    try:
        smaller = from_edge_list(
            tree.n, tree.edges, sorted(tree.boundary | set(demoted))
        )
    except (EmptyInteriorError, DisconnectedInteriorError) as exc:
        raise InvalidDemotionError(str(exc)) from exc
    lam_dem = first_eigenpair(smaller).lambda1
    return ExtensionReport(demoted, lam_full, lam_dem, lam_full <= lam_dem + tol)
