"""Small-tensor algebra on 2x2 tensors.

Tensors are plain ``numpy`` arrays of shape ``(2, 2)``. Symmetric and skew
tensors are ordinary arrays built with :func:`sym2` / :func:`skew2`; nothing
enforces symmetry after construction, the helpers just make intent explicit.

Fourth-order tensors with minor and major symmetry are stored as a 3x3 table
in the ordered basis (11, 22, 12). Contraction with a symmetric tensor uses
the engineering shear convention ``[d11, d22, 2*d12]``, so the table of the
isotropic stiffness reads ``[[2mu+lam, lam, 0], [lam, 2mu+lam, 0], [0, 0, mu]]``.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass

import numpy as np

I2 = np.eye(2)
EIGEN_RTOL = 1e-9
ORTHO_TOL = 1e-10

# Voigt-like slot -> index pair
_SLOTS = ((0, 0), (1, 1), (0, 1))


def sym2(s11: float, s22: float, s12: float) -> np.ndarray:
    return np.array([[s11, s12], [s12, s22]], dtype=float)


def skew2(w12: float) -> np.ndarray:
    return np.array([[0.0, w12], [-w12, 0.0]])


def tensor2(m11: float, m12: float, m21: float, m22: float) -> np.ndarray:
    return np.array([[m11, m12], [m21, m22]], dtype=float)


def sym(A: np.ndarray) -> np.ndarray:
    return 0.5 * (A + A.T)


def skew(A: np.ndarray) -> np.ndarray:
    return 0.5 * (A - A.T)


def ddot(A: np.ndarray, B: np.ndarray) -> float:
    """Double contraction ``A : B = tr(A . B^T)``."""
    return float(np.sum(A * B))


def rotation(angle: float) -> np.ndarray:
    """Proper rotation by ``angle`` (radians, counter-clockwise)."""
    c, s = np.cos(angle), np.sin(angle)
    return np.array([[c, -s], [s, c]])


def _require_finite(A: np.ndarray) -> None:
    if not np.all(np.isfinite(A)):
        raise ValueError(f"non-finite tensor components: {A!r}")


@dataclass(frozen=True)
class Spectral2:
    """Eigenvalues (descending) and eigenprojections of a symmetric 2x2 tensor.

    ``m`` is the eigenindex: 1 when the eigenvalues coincide (then
    ``projections == (I,)``), otherwise 2.
    """

    eigenvalues: tuple[float, float]
    projections: tuple[np.ndarray, ...]
    m: int

    def reconstruct(self) -> np.ndarray:
        if self.m == 1:
            return self.eigenvalues[0] * I2
        return sum(lam * P for lam, P in zip(self.eigenvalues, self.projections))


def spectral_decompose(S: np.ndarray, tol: float = EIGEN_RTOL) -> Spectral2:
    """Eigenprojections of a symmetric 2x2 tensor via Sylvester's formula.

    Eigenvalues closer than ``tol * max(1, |lambda_1|)`` are treated as a
    double root.
    """
    S = np.asarray(S, dtype=float)
    _require_finite(S)
    s11, s22, s12 = S[0, 0], S[1, 1], 0.5 * (S[0, 1] + S[1, 0])
    mean = 0.5 * (s11 + s22)
    radius = np.hypot(0.5 * (s11 - s22), s12)
    l1, l2 = mean + radius, mean - radius
    if l1 - l2 <= tol * max(1.0, abs(l1)):
        return Spectral2((l1, l2), (I2.copy(),), 1)
    Ssym = sym2(s11, s22, s12)
    P1 = (Ssym - l2 * I2) / (l1 - l2)
    P2 = (Ssym - l1 * I2) / (l2 - l1)
    return Spectral2((l1, l2), (P1, P2), 2)


def apply_isotropic(S: np.ndarray, f: Callable[[float], float]) -> np.ndarray:
    """Isotropic tensor function ``sum_i f(lambda_i) P_i``.

    ``f`` is any scalar callable; scale functions raise for eigenvalues
    outside their domain.
    """
    spec = spectral_decompose(S)
    if spec.m == 1:
        return float(f(spec.eigenvalues[0])) * I2
    return sum(float(f(lam)) * P for lam, P in zip(spec.eigenvalues, spec.projections))


def polar_decompose(F: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Return ``(R, U, V)`` with ``F = R.U = V.R``.

    In 2D the rotation is the normalised ``F + cof(F)``, which avoids any
    square root of a tensor.
    """
    F = np.asarray(F, dtype=float)
    _require_finite(F)
    if np.linalg.det(F) <= 0.0:
        raise ValueError("polar decomposition requires det F > 0")
    p = F[0, 0] + F[1, 1]
    q = F[1, 0] - F[0, 1]
    n = np.hypot(p, q)
    R = np.array([[p, -q], [q, p]]) / n
    U = sym(R.T @ F)
    V = sym(F @ R.T)
    return R, U, V


def is_orthogonal(R: np.ndarray, tol: float = ORTHO_TOL) -> bool:
    return bool(np.max(np.abs(R @ R.T - I2)) <= tol)


def rotate(S: np.ndarray, R: np.ndarray, direction: str = "forward") -> np.ndarray:
    """``R.S.R^T`` (forward, Lagrangian to Eulerian) or ``R^T.S.R`` (backward)."""
    if not is_orthogonal(R):
        raise ValueError("rotation tensor is not orthogonal")
    if direction == "forward":
        return R @ S @ R.T
    if direction == "backward":
        return R.T @ S @ R
    raise ValueError(f"unknown direction {direction!r}")


# -- fourth-order tensors ---------------------------------------------------


def dyad4(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Full components of ``A (x) B``: ``(A (x) B) : X = A (B : X)``."""
    return np.einsum("ij,kl->ijkl", A, B)


def sym_product4(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Full components of the symmetric product: ``(A sym(x) B) : X = A.sym(X).B^T``."""
    return 0.5 * (np.einsum("ik,jl->ijkl", A, B) + np.einsum("il,jk->ijkl", A, B))


def to_table(C: np.ndarray) -> np.ndarray:
    """Store a minor-symmetric fourth-order tensor in the (11, 22, 12) table."""
    T = np.empty((3, 3))
    for a, (i, j) in enumerate(_SLOTS):
        for b, (k, l) in enumerate(_SLOTS):
            T[a, b] = C[i, j, k, l]
    return T


def contract_table(T: np.ndarray, d: np.ndarray) -> np.ndarray:
    """Apply a stored fourth-order tensor to a symmetric tensor."""
    v = np.array([d[0, 0], d[1, 1], 2.0 * d[0, 1]])
    t11, t22, t12 = T @ v
    return sym2(t11, t22, t12)


def assemble_elasticity_mr(c: np.ndarray, mu1: float, mu2: float, lam: float) -> np.ndarray:
    """Zaremba-Jaumann elasticity tensor of the compressible Mooney-Rivlin model.

    ``I sym(x) M + M sym(x) I + lam I (x) I`` with ``M = mu1 c + mu2 c^-1``,
    returned as a (11, 22, 12) table.
    """
    c = np.asarray(c, dtype=float)
    if np.any(np.linalg.eigvalsh(sym(c)) <= 0.0):
        raise ValueError("left Cauchy-Green tensor must be positive definite")
    M = mu1 * c + mu2 * np.linalg.inv(c)
    C = sym_product4(I2, M) + sym_product4(M, I2) + lam * dyad4(I2, I2)
    T = to_table(C)
    # exact major symmetry; the two halves differ only by rounding
    return 0.5 * (T + T.T)
