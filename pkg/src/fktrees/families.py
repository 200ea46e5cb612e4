"""Constructors for the named extremal families and the fork polynomials.

T(p, q, b) is a path u_1 .. u_{p+q} carrying one pendant leaf at u_1, one at
each of u_{p+2} .. u_{p+q-1}, and b+1-q pendant leaves at u_{p+q}; it has
order p+q+b, b leaves and matching number q + floor(p/2).  T(0, 1, b) is the
star on b+1 vertices (the degenerate convention used by the matching-number
extremal statement).  The comet with k interior vertices is T(k-2, 2, n-k).

The generalized fork GF(a, r, n) glues a paths of length r at a hub and
attaches the n-ar-1 remaining vertices as leaves at distance r-1 from the
hub on the first path.  The constructor is pinned to the explicit Dirichlet
matrix of the r=2 case (diagonal k-1, n+3-2k, 2, ..., 2 with k = a+1
interior vertices); the alternative reading "attach n-ar leaves" overcounts
the order by one and is rejected here.  For k >= 3 the characteristic
polynomial of that matrix factors as (lambda-2)^(k-3) P(lambda, k) with
cubic P as coded below.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EmptyClassError, InvalidParametersError
from .enumeration import ClassKey, free_tree_edge_sets
from .trees import TreeWithBoundary, from_edge_list

__all__ = [
    "build_T",
    "build_comet",
    "build_fork",
    "build_star",
    "ForkPolynomial",
    "fork_char_poly",
    "fork_poly_difference",
    "PredictedExtremal",
    "predicted_extremal",
]


def build_star(n: int) -> TreeWithBoundary:
    """K_{1,n-1}: center 0, leaves 1..n-1."""
    if n < 3:
        raise InvalidParametersError(f"star with interior needs n >= 3, got {n}")
    return from_edge_list(n, [(0, i) for i in range(1, n)])


def build_T(p: int, q: int, b: int) -> TreeWithBoundary:
    """The pendant-decorated path T(p, q, b); see the module docstring.

    Requires p >= 0 and b >= q >= 2, or (p, q) = (0, 1) with b >= 2 for the
    star convention.  Path vertices u_1..u_{p+q} get ids 0..p+q-1, then the
    pendants follow in definition order.
    """
    if p == 0 and q == 1:
        if b < 2:
            raise InvalidParametersError("star T(0,1,b) needs b >= 2")
        return build_star(b + 1)
    if p < 0 or q < 2 or b < q:
        raise InvalidParametersError(
            f"T(p,q,b) needs p >= 0 and b >= q >= 2, got ({p}, {q}, {b})"
        )
    path_len = p + q
    edges = [(i, i + 1) for i in range(path_len - 1)]
    nxt = path_len
    # one pendant at u_1
    edges.append((0, nxt))
    nxt += 1
    # one pendant at each of u_{p+2} .. u_{p+q-1}
    for i in range(p + 2, p + q):
        edges.append((i - 1, nxt))
        nxt += 1
    # b+1-q pendants at u_{p+q}
    for _ in range(b + 1 - q):
        edges.append((path_len - 1, nxt))
        nxt += 1
    return from_edge_list(nxt, edges)


def build_comet(n: int, k: int) -> TreeWithBoundary:
    """Star with a tail: k interior vertices, n-k leaves."""
    if n < 3 or not 1 <= k <= n - 2:
        raise InvalidParametersError(f"comet needs 1 <= k <= n-2, got n={n}, k={k}")
    if k == 1:
        return build_star(n)
    return build_T(k - 2, 2, n - k)


def build_fork(a: int, r: int, n: int) -> TreeWithBoundary:
    """Generalized fork GF(a, r, n): hub 0, a arms of length r, extra leaves
    at distance r-1 on the first arm.  Diameter comes out to 2r."""
    if a < 2 or r < 1 or n < a * r + 1:
        raise InvalidParametersError(
            f"fork needs a >= 2, r >= 1, n >= a*r+1, got ({a}, {r}, {n})"
        )
    edges = []
    for arm in range(a):
        prev = 0
        for step in range(r):
            v = 1 + arm * r + step
            edges.append((prev, v))
            prev = v
    # extras land on the first arm's vertex at distance r-1 (the hub for r=1)
    anchor = 0 if r == 1 else r - 1
    for v in range(a * r + 1, n):
        edges.append((anchor, v))
    return from_edge_list(n, edges)


@dataclass(frozen=True)
class ForkPolynomial:
    """Cubic factor P(lambda, k) of the r=2 fork's characteristic polynomial.

    coefficients are highest degree first:
    (1, k-n-4, -2k^2+kn+2k+n+2, 2k^2-kn-3k+2).
    """

    k: int
    n: int
    coefficients: tuple[float, float, float, float]

    def __call__(self, lam: float) -> float:
        c3, c2, c1, c0 = self.coefficients
        return ((c3 * lam + c2) * lam + c1) * lam + c0


def _fork_coefficients(k: int, n: int) -> tuple[float, float, float, float]:
    return (
        1.0,
        float(k - n - 4),
        float(-2 * k * k + k * n + 2 * k + n + 2),
        float(2 * k * k - k * n - 3 * k + 2),
    )


def fork_char_poly(k: int, n: int) -> ForkPolynomial:
    """P(lambda, k) for GF(k-1, 2, n); needs k >= 3 and n >= 2k-1."""
    if k < 3 or n < 2 * k - 1:
        raise InvalidParametersError(
            f"fork polynomial needs k >= 3, n >= 2k-1, got k={k}, n={n}"
        )
    return ForkPolynomial(k=k, n=n, coefficients=_fork_coefficients(k, n))


def fork_poly_difference(k: int, n: int, lam: float) -> tuple[float, float]:
    """Both sides of P(lam, k+1) - P(lam, k) = (lam-1)(lam-(4k-n-1)).

    Returns (lhs, rhs) and raises if they disagree beyond 1e-12; they are
    the same quadratic written two ways, so disagreement means a bug.  The
    identity is purely algebraic in n, so no range check on n applies here.
    """
    if k < 3:
        raise InvalidParametersError(f"difference identity needs k >= 3, got {k}")

    def value(kk: int) -> float:
        c3, c2, c1, c0 = _fork_coefficients(kk, n)
        return ((c3 * lam + c2) * lam + c1) * lam + c0

    lhs = value(k + 1) - value(k)
    rhs = (lam - 1.0) * (lam - (4 * k - n - 1))
    if abs(lhs - rhs) > 1e-12:
        raise AssertionError(
            f"difference identity violated at k={k}, n={n}, lam={lam}: "
            f"{lhs!r} vs {rhs!r}"
        )
    return lhs, rhs


@dataclass(frozen=True)
class PredictedExtremal:
    """Predicted minimizer set for a class, with a conjecture flag for the
    diameter classes where only a conjecture is available (D >= 5)."""

    trees: tuple[TreeWithBoundary, ...]
    conjecture: bool = False


def _pendant_forest_family(m: int) -> list[TreeWithBoundary]:
    """All trees on 2m vertices in which every interior vertex carries
    exactly one leaf: an interior tree on m vertices plus one pendant per
    vertex.  Distinct interior trees give non-isomorphic results."""
    out = []
    for edges in free_tree_edge_sets(m):
        full = list(edges)
        for v in range(m):
            full.append((v, m + v))
        out.append(from_edge_list(2 * m, full))
    return out


def predicted_extremal(key: ClassKey) -> PredictedExtremal:
    """The predicted minimizer set for a feasible class key.

    Singleton for every settled case except the t = m = b matching class,
    where the whole one-pendant-per-interior-vertex family is extremal.  For
    diameter keys with D >= 5 the returned candidates (the fork with arm
    length floor(D/2) when D is even, plus the comet) come from an open
    conjecture and are flagged as such.
    """
    if not key.feasible():
        raise EmptyClassError(f"class {key} admits no tree")
    n = key.n
    if key.variant == "NM":
        m = key.m
        if m == 1:
            return PredictedExtremal((build_T(0, 1, n - 1),))
        if n >= 2 * m + 1:
            return PredictedExtremal((build_T(2 * m - 3, 2, n + 1 - 2 * m),))
        return PredictedExtremal((build_T(2 * m - 4, 2, 2),))
    if key.variant == "NMB":
        m, b, t = key.m, key.b, key.t
        if m == 1:
            return PredictedExtremal((build_T(0, 1, n - 1),))
        if t == 1:
            return PredictedExtremal((build_T(2 * m - 3, 2, b),))
        if t < m:
            return PredictedExtremal((build_T(2 * m - 2 * t, t, b),))
        if t == m == b:
            return PredictedExtremal(tuple(_pendant_forest_family(m)))
        return PredictedExtremal((build_T(0, m, b),))  # t == m < b
    if key.variant == "NK":
        return PredictedExtremal((build_comet(n, key.k),))
    # ND
    D = key.D
    if D == 2:
        return PredictedExtremal((build_star(n),))
    if D == 3:
        return PredictedExtremal((build_comet(n, 2),))
    if D == 4:
        return PredictedExtremal((build_fork((n - 1) // 2, 2, n),))
    candidates = [build_comet(n, D - 1)]
    if D % 2 == 0:
        r = D // 2
        a = (n - 1) // r
        if a >= 2:
            candidates.append(build_fork(a, r, n))
    return PredictedExtremal(tuple(candidates), conjecture=True)
