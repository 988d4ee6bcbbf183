"""Spectral cones over two Euclidean Jordan algebras.

* real symmetric m x m matrices (rank m), eigenvalues by cyclic Jacobi;
* R^n with the componentwise product (rank n), where the eigenvalue map is
  just sorting in decreasing order; this one runs in exact arithmetic.

For a permutation invariant cone Q in R^m the spectral cone is
``{Y : lambda(Y) in Q}``; for Q = ((a-b)I + bE)(R^m_+) it should coincide
with the image of the PSD cone under ``L(X) = (a-b) X + b tr(X) I``.
:func:`verify_prop5` samples both inclusions.

Q itself stays exact; only eigenvalues are floats, compared against Q's
integer H-rows with an explicit signed tolerance.
"""

from __future__ import annotations

import math
import random
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .catalog import ab_cone, check_ab
from .cone import Cone
from .errors import NonConvergence, NotPermutationInvariant
from .exact import to_rat
from .symmetry import OnesAxis, contains_ones_axis, is_permutation_invariant

MEMBERSHIP_TOL = 1e-9
MAX_SWEEPS = 100


def as_symmetric(X) -> np.ndarray:
    X = np.array(X, dtype=float)
    if X.ndim != 2 or X.shape[0] != X.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {X.shape}")
    if np.max(np.abs(X - X.T), initial=0.0) != 0.0:
        raise ValueError("matrix is not exactly symmetric")
    return X


def jacobi_eigh(X, max_sweeps: int = MAX_SWEEPS) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (decreasing) and orthonormal eigenvectors (columns) by cyclic Jacobi.

    Sweeps stop once the off-diagonal Frobenius norm drops below
    ``1e-12 * (1 + ||X||_F)``.
    """
    A = as_symmetric(X).copy()
    m = A.shape[0]
    V = np.eye(m)
    stop = 1e-12 * (1.0 + np.linalg.norm(A))
    offdiag = ~np.eye(m, dtype=bool)
    for _ in range(max_sweeps):
        if np.linalg.norm(A[offdiag]) < stop:
            break
        for p in range(m - 1):
            for q in range(p + 1, m):
                apq = A[p, q]
                if apq == 0.0:
                    continue
                theta = (A[q, q] - A[p, p]) / (2.0 * apq)
                if theta == 0.0:
                    t = 1.0
                elif abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                colp = A[:, p].copy()
                colq = A[:, q]
                A[:, p] = c * colp - s * colq
                A[:, q] = s * colp + c * colq
                rowp = A[p, :].copy()
                rowq = A[q, :]
                A[p, :] = c * rowp - s * rowq
                A[q, :] = s * rowp + c * rowq
                A[p, q] = A[q, p] = 0.0
                vp = V[:, p].copy()
                V[:, p] = c * vp - s * V[:, q]
                V[:, q] = s * vp + c * V[:, q]
    else:
        raise NonConvergence(f"Jacobi did not converge in {max_sweeps} sweeps")
    w = np.diag(A).copy()
    order = np.argsort(-w, kind="stable")
    return w[order], V[:, order]


def eigvals_sym(X) -> np.ndarray:
    return jacobi_eigh(X)[0]


def _coef(x) -> float:
    return x if isinstance(x, float) else float(to_rat(x))


def l_ab(X, a, b) -> np.ndarray:
    """(a-b) X + b tr(X) I."""
    X = np.asarray(X, dtype=float)
    a, b = _coef(a), _coef(b)
    return (a - b) * X + b * np.trace(X) * np.eye(X.shape[0])


def l_ab_inverse(Y, a, b) -> np.ndarray:
    # tr(L(X)) = (a + (m-1) b) tr(X), then peel off the identity part
    Y = np.asarray(Y, dtype=float)
    a, b = _coef(a), _coef(b)
    m = Y.shape[0]
    tr_x = np.trace(Y) / (a + (m - 1) * b)
    return (Y - b * tr_x * np.eye(m)) / (a - b)


def _require_invariant(Q: Cone) -> None:
    if not Q._flag("permutation_invariant", lambda: is_permutation_invariant(Q)):
        raise NotPermutationInvariant("spectral membership needs a permutation invariant cone")


def _shortfall(values: np.ndarray, Q: Cone) -> float:
    """Largest scaled violation of Q's H-rows by ``values`` (<= 0 means inside)."""
    H = np.array(Q.inequalities, dtype=float)
    if H.size == 0:
        return 0.0
    scale = max(1.0, float(np.max(np.abs(values)))) * np.sum(np.abs(H), axis=1)
    return float(np.max(-(H @ values) / scale))


def spectral_membership(Y, Q: Cone, tol: float = MEMBERSHIP_TOL) -> bool:
    """Whether lambda(Y), sorted decreasingly, satisfies Q's H-rows up to ``-tol * scale``."""
    _require_invariant(Q)
    Y = as_symmetric(Y)
    if Y.shape[0] != Q.dim:
        raise ValueError(f"matrix size {Y.shape[0]} does not match cone dimension {Q.dim}")
    return _shortfall(eigvals_sym(Y), Q) <= tol


@dataclass
class SpectralReport:
    samples: int
    tolerance: float
    forward_pass: int
    backward_pass: int
    max_violation: float
    backward_draws: int = 0
    backward_fallback: bool = False

    @property
    def ok(self) -> bool:
        return self.forward_pass == self.samples and self.backward_pass == self.samples

    def to_dict(self) -> dict:
        d = asdict(self)
        d["ok"] = self.ok
        return d


def _ones_direction(Q: Cone) -> int:
    return -1 if contains_ones_axis(Q) is OnesAxis.MinusOne else 1


def _axis_scale(Q: Cone, direction: int) -> float:
    """1 / (smallest cosine between the ones axis and Q's facet normals).

    Shifting samples along the axis by this factor times their spread keeps
    the rejection rate roughly independent of how narrow Q is.
    """
    n = Q.dim
    worst = 1.0
    for h in Q.inequalities:
        along = direction * sum(h)
        if along > 0:
            worst = max(worst, math.sqrt(n * sum(x * x for x in h)) / along)
    return worst


def verify_prop5(
    m: int,
    a,
    b,
    samples: int = 1000,
    seed: int = 0,
    tol: float = MEMBERSHIP_TOL,
    max_draws: int = 100_000,
) -> SpectralReport:
    """Sample both inclusions between {Y : lambda(Y) in Q} and L_(a,b)(PSD), Q = ab_cone(m, a, b).

    Forward: X = G^T G is PSD, Y = L(X) must have lambda(Y) in Q.
    Backward: symmetric Y is drawn from a Gaussian ensemble shifted along the
    identity direction inside Q and kept when lambda(Y) is in Q; then
    X = L^{-1}(Y) must have min eigenvalue >= -tol.  If fewer than 1% of
    draws are accepted after ``max_draws``, the remaining members are built
    directly as L(X) of random PSD X and the inverse is checked on those.
    """
    check_ab(m, a, b)
    Q = ab_cone(m, a, b)
    _require_invariant(Q)
    rng = np.random.default_rng(seed)
    worst = 0.0

    fwd = 0
    for _ in range(samples):
        G = rng.standard_normal((m, m))
        X = G.T @ G
        Y = l_ab(X, a, b)
        Y = (Y + Y.T) / 2
        v = _shortfall(eigvals_sym(Y), Q)
        worst = max(worst, v)
        fwd += v <= tol

    direction = _ones_direction(Q)
    shift = _axis_scale(Q, direction) * math.sqrt(m)
    bwd = 0
    accepted = 0
    draws = 0
    fallback = False
    while accepted < samples:
        if not fallback and draws >= max_draws and accepted < 0.01 * draws:
            fallback = True
        if fallback:
            G = rng.standard_normal((m, m))
            Y = l_ab(G.T @ G, a, b)
            Y = (Y + Y.T) / 2
        else:
            draws += 1
            G = rng.standard_normal((m, m))
            Y = (G + G.T) / 2 + direction * abs(rng.standard_normal()) * shift * np.eye(m)
            if _shortfall(eigvals_sym(Y), Q) > 0:
                continue
        accepted += 1
        X = l_ab_inverse(Y, a, b)
        X = (X + X.T) / 2
        lo = float(eigvals_sym(X)[-1])
        worst = max(worst, -lo)
        bwd += lo >= -tol

    return SpectralReport(samples, tol, fwd, bwd, worst, draws, fallback)


# exact instantiation on R^n: lambda(x) = x sorted decreasingly, tr = sum, e = ones


def eig_rn(x: Sequence) -> tuple:
    return tuple(sorted((to_rat(v) for v in x), reverse=True))


def l_ab_rn(x: Sequence, a, b) -> tuple:
    a, b = to_rat(a), to_rat(b)
    x = [to_rat(v) for v in x]
    t = sum(x)
    return tuple((a - b) * v + b * t for v in x)


def l_ab_rn_inverse(y: Sequence, a, b) -> tuple:
    a, b = to_rat(a), to_rat(b)
    y = [to_rat(v) for v in y]
    n = len(y)
    t = sum(y) / (a + (n - 1) * b)
    return tuple((v - b * t) / (a - b) for v in y)


def verify_prop5_exact(n: int, a, b, samples: int = 1000, seed: int = 0) -> SpectralReport:
    """The same bidirectional check on R^n in rational arithmetic, with zero tolerance."""
    check_ab(n, a, b)
    Q = ab_cone(n, a, b)
    rng = random.Random(seed)

    def rat(lo, hi):
        return Fraction(rng.randrange(lo, hi + 1), rng.randrange(1, 5))

    fwd = 0
    for _ in range(samples):
        x = [rat(0, 9) for _ in range(n)]
        fwd += Q.contains(eig_rn(l_ab_rn(x, a, b)))

    sign = _ones_direction(Q)
    reach = math.ceil(_axis_scale(Q, sign))
    bwd = 0
    accepted = 0
    draws = 0
    while accepted < samples:
        draws += 1
        shift = sign * reach * rat(0, 9)
        y = [rat(-9, 9) + shift for _ in range(n)]
        if not Q.contains(eig_rn(y)):
            continue
        accepted += 1
        x = l_ab_rn_inverse(y, a, b)
        bwd += all(v >= 0 for v in x)

    return SpectralReport(samples, 0.0, fwd, bwd, 0.0 if fwd == bwd == samples else float("inf"), draws, False)
