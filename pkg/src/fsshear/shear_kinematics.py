"""Kinematics of left/right finite simple shear and classical simple shear.

All three motions are isochoric, planar and upper-triangular:
``F = [[a, b], [0, c]]`` with ``a c = 1``. For LFSS and RFSS the shear
parameter is ``alpha`` and the stretch tensor (V for LFSS, U for RFSS) keeps
fixed eigenvectors at 45 degrees, with principal stretches ``exp(+-alpha)``.
For classical simple shear the parameter is the amount of shear ``gamma`` and
the polar factors come from :func:`polar_decompose`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .tensor_core import I2, polar_decompose, skew, spectral_decompose, sym

FD_STEP = 1e-5

P1_SHEAR = 0.5 * np.array([[1.0, 1.0], [1.0, 1.0]])
P2_SHEAR = 0.5 * np.array([[1.0, -1.0], [-1.0, 1.0]])


class ShearMode(enum.Enum):
    LFSS = "lfss"
    RFSS = "rfss"
    SIMPLE_SHEAR = "simple-shear"

    @classmethod
    def parse(cls, name: str | ShearMode) -> ShearMode:
        if isinstance(name, cls):
            return name
        key = str(name).strip().lower().replace("_", "-")
        for mode in cls:
            if mode.value == key:
                return mode
        raise ValueError(f"unknown shear mode {name!r}")


def _check_alpha(alpha):
    if np.any(np.asarray(alpha) < 0):
        raise ValueError("shear parameter must be non-negative")


def motion_parameters(mode: ShearMode, alpha):
    """``(a, b, c)`` of the motion; vectorised over ``alpha``."""
    _check_alpha(alpha)
    alpha = np.asarray(alpha, dtype=float)
    if mode is ShearMode.SIMPLE_SHEAR:
        one = np.ones_like(alpha)
        return one, alpha.copy(), one.copy()
    ch = np.cosh(2.0 * alpha)
    root = np.sqrt(ch)
    b = np.sinh(2.0 * alpha) / root
    if mode is ShearMode.LFSS:
        return 1.0 / root, b, root
    return root, b, 1.0 / root


def deformation_gradient(mode: ShearMode, alpha):
    """``F = [[a, b], [0, c]]``; for an array of parameters returns shape ``(n, 2, 2)``."""
    a, b, c = motion_parameters(mode, alpha)
    F = np.zeros(np.shape(a) + (2, 2))
    F[..., 0, 0] = a
    F[..., 0, 1] = b
    F[..., 1, 1] = c
    return F


def shear_rotation(alpha: float) -> np.ndarray:
    """Rotation factor shared by LFSS and RFSS at the same ``alpha``."""
    ch, sh = np.cosh(alpha), np.sinh(alpha)
    return np.array([[ch, sh], [-sh, ch]]) / np.sqrt(np.cosh(2.0 * alpha))


def shear_stretch(alpha: float) -> np.ndarray:
    """``V_L = U_R``, coaxial with the fixed 45 degree frame."""
    ch, sh = np.cosh(alpha), np.sinh(alpha)
    return np.array([[ch, sh], [sh, ch]])


@dataclass(frozen=True)
class KinematicState:
    mode: ShearMode
    alpha: float
    F: np.ndarray
    R: np.ndarray
    stretch: np.ndarray
    lambda1: float
    lambda2: float
    P1: np.ndarray
    P2: np.ndarray
    gamma_star: float
    gamma: float
    theta_star: float
    theta: float

    @property
    def J(self) -> float:
        return float(np.linalg.det(self.F))

    @property
    def U(self) -> np.ndarray:
        if self.mode is ShearMode.RFSS:
            return self.stretch
        return sym(self.R.T @ self.stretch @ self.R)

    @property
    def V(self) -> np.ndarray:
        if self.mode is ShearMode.RFSS:
            return sym(self.R @ self.stretch @ self.R.T)
        return self.stretch


def kinematic_state(mode: ShearMode, alpha: float) -> KinematicState:
    """Closed-form kinematic quantities at ``alpha``.

    ``gamma_star``/``theta_star`` describe the LFSS shear angle
    (``tan theta* = tanh 2 alpha``) and ``gamma``/``theta`` the RFSS one
    (``tan theta = sinh 2 alpha``). For simple shear both pairs equal the
    amount of shear and its angle.
    """
    _check_alpha(alpha)
    alpha = float(alpha)
    F = deformation_gradient(mode, alpha)
    if mode is ShearMode.SIMPLE_SHEAR:
        R, _, V = polar_decompose(F)
        spec = spectral_decompose(V)
        l1, l2 = spec.eigenvalues
        if spec.m == 1:
            P1, P2 = I2.copy(), np.zeros((2, 2))
        else:
            P1, P2 = spec.projections
        g = alpha
        return KinematicState(
            mode, alpha, F, R, V, l1, l2, P1, P2, g, g, np.arctan(g), np.arctan(g)
        )
    gamma_star = np.tanh(2.0 * alpha)
    gamma = np.sinh(2.0 * alpha)
    return KinematicState(
        mode=mode,
        alpha=alpha,
        F=F,
        R=shear_rotation(alpha),
        stretch=shear_stretch(alpha),
        lambda1=float(np.exp(alpha)),
        lambda2=float(np.exp(-alpha)),
        P1=P1_SHEAR.copy(),
        P2=P2_SHEAR.copy(),
        gamma_star=float(gamma_star),
        gamma=float(gamma),
        theta_star=float(np.arctan(gamma_star)),
        theta=float(np.arctan(gamma)),
    )


@dataclass(frozen=True)
class RateTensors:
    l: np.ndarray
    d: np.ndarray
    w: np.ndarray
    D_hat: np.ndarray
    alpha_dot: float


def velocity_gradient(mode: ShearMode, alpha: float, alpha_dot: float = 1.0) -> np.ndarray:
    _check_alpha(alpha)
    if mode is ShearMode.SIMPLE_SHEAR:
        return alpha_dot * np.array([[0.0, 1.0], [0.0, 0.0]])
    t = np.tanh(2.0 * alpha)
    if mode is ShearMode.LFSS:
        return alpha_dot * np.array([[-t, 2.0], [0.0, t]])
    return alpha_dot * np.array([[t, 2.0 / np.cosh(2.0 * alpha)], [0.0, -t]])


def rate_tensors(mode: ShearMode, alpha: float, alpha_dot: float = 1.0) -> RateTensors:
    """Velocity gradient, stretching, vorticity and rotated stretching ``R^T d R``."""
    l = velocity_gradient(mode, alpha, alpha_dot)
    d = sym(l)
    R = kinematic_state(mode, alpha).R
    return RateTensors(l=l, d=d, w=skew(l), D_hat=sym(R.T @ d @ R), alpha_dot=alpha_dot)


def left_cg(mode: ShearMode, alpha: float) -> tuple[np.ndarray, np.ndarray]:
    """Left Cauchy-Green tensor ``c = F F^T`` and its inverse."""
    _check_alpha(alpha)
    if mode is ShearMode.LFSS:
        ch, sh = np.cosh(2.0 * alpha), np.sinh(2.0 * alpha)
        return np.array([[ch, sh], [sh, ch]]), np.array([[ch, -sh], [-sh, ch]])
    F = deformation_gradient(mode, alpha)
    c = F @ F.T
    # det c = 1, so the inverse is the adjugate
    c_inv = np.array([[c[1, 1], -c[0, 1]], [-c[1, 0], c[0, 0]]])
    return c, c_inv


def _polar_factors(mode: ShearMode, alpha: float) -> tuple[np.ndarray, np.ndarray]:
    st = kinematic_state(mode, alpha)
    return st.R, st.U


def numeric_spins(
    mode: ShearMode, alpha: float, h: float = FD_STEP
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Finite-difference spins ``(omega_R, w, W)`` with unit ``alpha_dot``.

    ``omega_R = dR/dt R^T``, ``w = skew(dF/dt F^-1)`` and
    ``W = skew(dU/dt U^-1)``; they satisfy ``w = omega_R + R W R^T``.
    """
    if not alpha > h > 0:
        raise ValueError("need alpha > h > 0")
    Rp, Up = _polar_factors(mode, alpha + h)
    Rm, Um = _polar_factors(mode, alpha - h)
    R, U = _polar_factors(mode, alpha)
    F = deformation_gradient(mode, alpha)
    dF = (deformation_gradient(mode, alpha + h) - deformation_gradient(mode, alpha - h)) / (2 * h)
    dR = (Rp - Rm) / (2 * h)
    dU = (Up - Um) / (2 * h)
    omega_R = skew(dR @ R.T)
    w = skew(dF @ np.linalg.inv(F))
    W = skew(dU @ np.linalg.inv(U))
    return omega_R, w, W


def deform_unit_square(mode: ShearMode, alpha: float) -> np.ndarray:
    """Images of the corners (0,0), (1,0), (1,1), (0,1); shape ``(4, 2)``."""
    corners = np.array([[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]])
    return corners @ deformation_gradient(mode, alpha).T


def polygon_area(points: np.ndarray) -> float:
    x, y = points[:, 0], points[:, 1]
    return 0.5 * float(np.dot(x, np.roll(y, -1)) - np.dot(y, np.roll(x, -1)))
