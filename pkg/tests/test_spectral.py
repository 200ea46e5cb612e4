"""Dirichlet matrices, eigenpairs, Rayleigh quotients, bounds, monotonicity."""

import math

import numpy as np
import pytest

from fktrees import (
    InvalidDemotionError,
    TooSmallError,
    ZeroFunctionError,
    build_T,
    build_fork,
    build_path,
    build_star,
    contact_set,
    dirichlet_matrix,
    eigenvalue_bounds,
    extension_monotonicity_check,
    first_eigenpair,
    free_trees,
    invariants,
    path_eigenvalue,
    rayleigh_quotient,
)
from conftest import random_tree


def bisect_smallest_root(poly, lo, hi, iters=200):
    """Smallest root of a continuous function in (lo, hi) via plain bisection;
    requires a sign change over the bracket."""
    flo = poly(lo)
    assert flo * poly(hi) < 0
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        if flo * poly(mid) <= 0:
            hi = mid
        else:
            lo = mid
            flo = poly(lo)
    return 0.5 * (lo + hi)


# -- matrices -----------------------------------------------------------------

def test_dirichlet_matrix_p4():
    dm = dirichlet_matrix(build_path(4))
    assert dm.vertices == (1, 2)
    assert np.array_equal(dm.entries, np.array([[2.0, -1.0], [-1.0, 2.0]]))


def test_dirichlet_matrix_star():
    for n in (4, 7):
        dm = dirichlet_matrix(build_star(n))
        assert dm.entries.shape == (1, 1)
        assert dm.entries[0, 0] == n - 1


def test_dirichlet_matrix_fork_gf329():
    dm = dirichlet_matrix(build_fork(3, 2, 9))
    assert list(np.diag(dm.entries)) == [3.0, 4.0, 2.0, 2.0]
    hub = dm.index_of(0)
    row = dm.entries[hub]
    assert sorted(row) == [-1.0, -1.0, -1.0, 3.0]


def test_dirichlet_matrix_positive_definite_small():
    for n in range(3, 9):
        for t in free_trees(n):
            w = np.linalg.eigvalsh(dirichlet_matrix(t).entries)
            assert w[0] > 0


# -- first eigenpair ------------------------------------------------------------

def test_path_closed_form_small():
    assert abs(first_eigenpair(build_path(4)).lambda1 - 1.0) < 1e-12
    want = 2 * (1 - math.cos(math.pi / 4))
    assert abs(first_eigenpair(build_path(5)).lambda1 - want) < 1e-12


def test_path_eigenvalue_formula():
    assert path_eigenvalue(4) == pytest.approx(1.0, abs=1e-15)
    assert path_eigenvalue(5) == pytest.approx(2 * (1 - math.cos(math.pi / 4)))
    for length in range(3, 25):
        lam = first_eigenpair(build_path(length)).lambda1
        assert abs(lam - path_eigenvalue(length)) < 1e-10
    with pytest.raises(TooSmallError):
        path_eigenvalue(2)


def test_fork_eigenvalue_matches_cubic_root_bisection():
    # independent oracle: smallest root of l^3 - 9 l^2 + 23 l - 14 in (0, 1)
    lam = first_eigenpair(build_fork(3, 2, 9)).lambda1
    root = bisect_smallest_root(
        lambda x: x**3 - 9 * x**2 + 23 * x - 14, 0.0, 1.0
    )
    assert 0 < lam < 1
    assert abs(lam - root) < 1e-10


def test_eigenfunction_positive_and_gap_on_small_trees():
    for n in range(3, 10):
        for t in free_trees(n):
            s = first_eigenpair(t)
            assert s.lambda1 > 0
            assert np.min(s.eigenfunction) > 0
            assert s.residual <= 1e-10
            if len(t.interior) > 1:
                assert s.gap is not None and s.gap > 1e-8
            else:
                assert s.gap is None


def test_simplicity_gap_through_n14():
    # an exact degeneracy of the ground state would contradict simplicity
    for n in range(10, 15):
        for t in free_trees(n):
            s = first_eigenpair(t)
            assert s.gap is None or s.gap > 1e-8


def test_contact_rows_strictly_dominant():
    # rows of contact vertices have diagonal strictly above the row sum of
    # off-diagonal magnitudes; other interior rows are weakly dominant
    from fktrees import contact_set, dirichlet_matrix
    from conftest import random_tree as rt
    import random

    rng = random.Random(5)
    for _ in range(40):
        t = rt(rng, rng.randrange(4, 12))
        dm = dirichlet_matrix(t)
        contacts = set(contact_set(t))
        for i, v in enumerate(dm.vertices):
            off = sum(abs(x) for j, x in enumerate(dm.entries[i]) if j != i)
            if v in contacts:
                assert dm.entries[i, i] > off
            else:
                assert dm.entries[i, i] >= off


def test_eigenfunction_norm_and_sign():
    s = first_eigenpair(build_T(3, 2, 4))
    assert abs(np.linalg.norm(s.eigenfunction) - 1.0) < 1e-12
    assert s.eigenfunction[0] > 0


# -- Rayleigh quotients -----------------------------------------------------------

def test_rayleigh_of_eigenfunction_is_lambda1(rng):
    for _ in range(20):
        t = random_tree(rng, rng.randrange(3, 11))
        s = first_eigenpair(t)
        assert abs(rayleigh_quotient(t, s.eigenfunction) - s.lambda1) < 1e-9


def test_rayleigh_p4_hand_computed():
    assert rayleigh_quotient(build_path(4), [1.0, 1.0]) == pytest.approx(1.0)


def test_rayleigh_scaling_invariance(rng):
    t = build_T(2, 2, 3)
    f = [rng.uniform(0.1, 2.0) for _ in t.interior]
    base = rayleigh_quotient(t, f)
    for c in (-3.0, 0.5, 7.25):
        assert rayleigh_quotient(t, [c * x for x in f]) == pytest.approx(base)


def test_rayleigh_zero_function_rejected():
    with pytest.raises(ZeroFunctionError):
        rayleigh_quotient(build_path(4), [0.0, 0.0])


def test_rayleigh_variational_lower_bound(rng):
    for _ in range(10):
        t = random_tree(rng, rng.randrange(3, 11))
        lam = first_eigenpair(t).lambda1
        for _ in range(1000):
            f = [rng.uniform(-1, 1) or 0.1 for _ in t.interior]
            assert rayleigh_quotient(t, f) >= lam - 1e-12


def test_rayleigh_equals_quadratic_form(rng):
    for _ in range(50):
        t = random_tree(rng, rng.randrange(3, 12))
        dm = dirichlet_matrix(t)
        f = np.array([rng.uniform(-2, 2) or 0.3 for _ in t.interior])
        quad = float(f @ dm.entries @ f) / float(f @ f)
        assert abs(rayleigh_quotient(t, f) - quad) < 1e-12


# -- bounds -------------------------------------------------------------------

def test_bounds_sandwich_small_trees():
    # the nominal radius bound is valid through n = 9 (first counterexample
    # appears at n = 10; see eigenvalue_bounds docstring)
    for n in range(3, 10):
        for t in free_trees(n):
            lower, upper = eigenvalue_bounds(t)
            lam = first_eigenpair(t).lambda1
            assert lower - 1e-10 <= lam <= upper + 1e-10


def test_radius_bound_counterexample_is_pinned():
    # two arms of length 4 plus a pendant at the hub: r = 2 but lambda1
    # sits strictly below 4 sin^2(pi/10); the explicit test vector makes
    # the violation independent of the eigensolver
    from fktrees import from_edge_list

    t = from_edge_list(
        10, [(0, 1), (0, 5), (0, 9), (1, 2), (2, 3), (3, 4), (5, 6), (6, 7), (7, 8)]
    )
    assert invariants(t).r == 2
    lower, _ = eigenvalue_bounds(t)
    witness = rayleigh_quotient(t, [1.0, 1.6, 1.8, 1.2, 1.6, 1.8, 1.2])
    assert witness == pytest.approx(15 / 43)
    assert witness < lower - 1e-2
    assert first_eigenpair(t).lambda1 <= witness


def test_weaker_bound_variants_hold_everywhere_small():
    # 1/r^2, and the radius replaced by floor(D/2), survive enumeration
    for n in range(3, 11):
        for t in free_trees(n):
            inv = invariants(t)
            lam = first_eigenpair(t).lambda1
            assert lam >= 1.0 / inv.r**2 - 1e-10
            rd = inv.D // 2
            assert lam >= 4 * math.sin(math.pi / (4 * rd + 2)) ** 2 - 1e-10


def test_lower_bound_tight_on_even_paths():
    for r in range(1, 8):
        t = build_path(2 * r + 2)
        lower, _ = eigenvalue_bounds(t)
        assert abs(first_eigenpair(t).lambda1 - lower) < 1e-12


def test_upper_bound_tight_when_leaves_divide_evenly():
    # star: one interior vertex carrying all leaves
    for n in (4, 6, 9):
        t = build_star(n)
        _, upper = eigenvalue_bounds(t)
        assert abs(first_eigenpair(t).lambda1 - upper) < 1e-12
    # one pendant per interior vertex: b/|interior| = 1 exactly
    t = build_T(0, 3, 3)
    _, upper = eigenvalue_bounds(t)
    assert upper == 1.0
    assert abs(first_eigenpair(t).lambda1 - 1.0) < 1e-12


# -- extension monotonicity -------------------------------------------------------

def test_demote_nothing_is_equality():
    rep = extension_monotonicity_check(build_path(6), [])
    assert rep.ok and rep.lambda_full == rep.lambda_demoted


def test_demote_neighbor_of_middle_strictly_increases():
    rep = extension_monotonicity_check(build_path(6), [1])
    assert rep.ok
    assert rep.lambda_demoted > rep.lambda_full + 1e-6


def test_demote_random_subsets(rng):
    done = 0
    while done < 60:
        t = random_tree(rng, rng.randrange(4, 12))
        interior = list(t.interior)
        size = rng.randrange(1, len(interior) + 1)
        demote = rng.sample(interior, size)
        try:
            rep = extension_monotonicity_check(t, demote)
        except InvalidDemotionError:
            continue
        assert rep.ok
        done += 1


def test_demote_rejects_boundary_vertex_and_full_interior():
    t = build_path(6)
    with pytest.raises(InvalidDemotionError):
        extension_monotonicity_check(t, [0])
    with pytest.raises(InvalidDemotionError):
        extension_monotonicity_check(t, list(t.interior))
    with pytest.raises(InvalidDemotionError):
        extension_monotonicity_check(t, [2])  # splits the interior


# -- ground-state shape on the extremal family ----------------------------------

@pytest.mark.parametrize(
    "t,m,b", [(2, 3, 2), (2, 3, 4), (2, 4, 3), (3, 4, 3), (3, 5, 4), (4, 5, 4)]
)
def test_eigenfunction_decreases_along_extremal_tree(t, m, b):
    tree = build_T(2 * m - 2 * t, t, b)
    s = first_eigenpair(tree)
    vals = {v: s.eigenfunction[i] for i, v in enumerate(s.vertices)}
    order = sorted(vals, key=lambda v: -vals[v])
    k = len(order)
    assert k == invariants(tree).n - invariants(tree).b
    # the t contact vertices carry the t smallest values
    assert set(order[k - t:]) == set(contact_set(tree))
    f = [vals[v] for v in order]
    for j in range(0, min(k - t + 1, k - 2)):
        assert f[j] > f[j + 2]
    for j in range(k - t + 1, k - 1):
        assert f[j] > f[j + 1]
