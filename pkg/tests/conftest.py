import os
import sys

import numpy as np

SRC = os.path.join(os.path.dirname(__file__), os.pardir, "src")
if os.path.isdir(SRC) and SRC not in sys.path:
    sys.path.insert(0, SRC)


def random_hermitian(rng, n: int, scale: float = 1.0) -> np.ndarray:
    a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return scale * 0.5 * (a + a.conj().T)


def cluster_projectors(eigenvalues, eigenvectors, tol: float = 1e-8):
    """Projectors onto eigenvalue clusters (gaps > tol split clusters), so
    degenerate subspaces compare basis-independently."""
    groups = []
    start = 0
    n = len(eigenvalues)
    for k in range(1, n + 1):
        if k == n or abs(eigenvalues[k] - eigenvalues[k - 1]) > tol:
            groups.append(range(start, k))
            start = k
    return [
        (tuple(g), eigenvectors[:, list(g)] @ eigenvectors[:, list(g)].conj().T)
        for g in groups
    ]


def assert_same_eigensystem(spec_a, spec_b, tol_values=1e-10, tol_proj=1e-10, cluster_tol=1e-8):
    """Eigenvalues within tol_values and eigen-subspace projectors within
    tol_proj, clustering degeneracies on both sides identically."""
    wa, wb = spec_a.eigenvalues, spec_b.eigenvalues
    assert np.max(np.abs(wa - wb)) < tol_values
    # shared clustering: use the average eigenvalues so both sides split alike
    mids = 0.5 * (wa + wb)
    pa = cluster_projectors(mids, spec_a.eigenvectors, cluster_tol)
    pb = cluster_projectors(mids, spec_b.eigenvectors, cluster_tol)
    for (ga, proj_a), (gb, proj_b) in zip(pa, pb):
        assert ga == gb
        assert np.max(np.abs(proj_a - proj_b)) < tol_proj
