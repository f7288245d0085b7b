"""Hooke-like hypoelastic models driven by objective stress rates.

The constitutive law is ``rate(sigma) = 2 mu d + lam tr(d) I`` where ``rate`` is
a corotational rate (Zaremba-Jaumann, Green-Naghdi, Gurtin-Spear,
logarithmic) or an Oldroyd rate. Two independent solvers are provided:

* :func:`integrate_lfss` integrates the reduced two-component LFSS system
  with classical RK4;
* :func:`incremental_integrate` is a generic, mode-agnostic, second-order
  incrementally objective scheme used as an oracle.

The shear parameter plays the role of time (``alpha_dot = 1``).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad

from .hyperelastic import StressPair
from .shear_kinematics import (
    ShearMode,
    deformation_gradient,
    kinematic_state,
    shear_rotation,
)
from .tensor_core import I2, sym2

THETA_QUAD_TOL = 1e-10
DEFAULT_STEPS = 10_000


class SpinKind(enum.Enum):
    ZJ = "zj"
    GN = "gn"
    GS = "gs"
    LOG = "log"


@dataclass(frozen=True)
class RateKind:
    """``kind`` is ``"corotational"`` (with a ``spin``), ``"upper"`` or ``"lower"`` Oldroyd."""

    kind: str
    spin: SpinKind | None = None

    def __post_init__(self):
        if self.kind not in ("corotational", "upper", "lower"):
            raise ValueError(f"unknown rate kind {self.kind!r}")
        if (self.kind == "corotational") != (self.spin is not None):
            raise ValueError("a spin is required for corotational rates only")

    @property
    def name(self) -> str:
        if self.kind == "corotational":
            return f"hypo-{self.spin.value}"
        return "hypo-a" if self.kind == "upper" else "hypo-b"


HYPO_ZJ = RateKind("corotational", SpinKind.ZJ)
HYPO_GN = RateKind("corotational", SpinKind.GN)
HYPO_GS = RateKind("corotational", SpinKind.GS)
HYPO_LOG = RateKind("corotational", SpinKind.LOG)
HYPO_A = RateKind("upper")
HYPO_B = RateKind("lower")

RATES = {r.name: r for r in (HYPO_ZJ, HYPO_GN, HYPO_GS, HYPO_LOG, HYPO_A, HYPO_B)}


def parse_rate(name: str) -> RateKind:
    key = name.strip().lower()
    if key not in RATES:
        raise ValueError(f"unknown hypoelastic model {name!r}")
    return RATES[key]


# -- spin functions ----------------------------------------------------------


def r12(spin: SpinKind, lambda1: float, lambda2: float) -> float:
    """Spin coefficient in the r-form for the stretch pair ``(lambda1, lambda2)``."""
    if lambda1 <= 0 or lambda2 <= 0:
        raise ValueError("stretches must be positive")
    if spin is SpinKind.ZJ:
        return (lambda1 - lambda2) / (lambda1 + lambda2)
    if spin is SpinKind.GN:
        return 0.0
    if lambda1 == lambda2:
        raise ValueError(f"{spin.name} spin is singular for coincident stretches")
    gs = 2 * lambda1 * lambda2 / (lambda2**2 - lambda1**2)
    if spin is SpinKind.GS:
        return gs
    return gs + 1.0 / (np.log(lambda1) - np.log(lambda2))


def g_pair(spin: SpinKind, lambda1: float, lambda2: float) -> float:
    """Spin coefficient in the g-form: ``r12 - (l1 - l2)/(l1 + l2)``."""
    return r12(spin, lambda1, lambda2) - (lambda1 - lambda2) / (lambda1 + lambda2)


def g12(spin: SpinKind, alpha: float) -> float:
    """g-form coefficient on the shear path, where the stretches are ``exp(+-alpha)``."""
    if spin is SpinKind.ZJ:
        return 0.0
    if spin is SpinKind.GN:
        return -float(np.tanh(alpha))
    if alpha == 0:
        raise ValueError(f"{spin.name} spin coefficient is singular at alpha = 0")
    coth = 1.0 / np.tanh(2 * alpha)
    if spin is SpinKind.GS:
        return -float(coth)
    return float(1.0 / (2 * alpha) - coth)


def k_factor(spin: SpinKind, alpha):
    """``k = 1 + g12 tanh(2 alpha)``, the effective spin factor of the LFSS system.

    GS and logarithmic use their exact simplified forms so the removable
    singularity at ``alpha = 0`` causes no trouble. Vectorised over ``alpha``.
    """
    alpha = np.asarray(alpha, dtype=float)
    if spin is SpinKind.GS:
        return np.zeros_like(alpha)[()]
    if spin is SpinKind.LOG:
        x = 2 * alpha
        safe = np.where(x == 0, 1.0, x)
        return np.where(x == 0, 1.0, np.tanh(safe) / safe)[()]
    if spin is SpinKind.ZJ:
        return (1.0 + 0.0 * alpha)[()]
    g = np.vectorize(lambda a: g12(spin, a), otypes=[float])(alpha)
    return (1.0 + g * np.tanh(2 * alpha))[()]


def lfss_ode_rhs(spin: SpinKind, alpha: float, sigma11: float, sigma12: float, mu: float):
    k = float(k_factor(spin, alpha))
    return (
        2 * k * sigma12 - 2 * mu * np.tanh(2 * alpha),
        -2 * k * sigma11 + 2 * mu,
    )


def theta_angle(spin: SpinKind, alpha: float) -> float:
    """Rotation angle ``int_0^alpha k`` of the homogeneous LFSS solution."""
    if alpha < 0:
        raise ValueError("alpha must be non-negative")
    if spin is SpinKind.ZJ:
        return float(alpha)
    if spin is SpinKind.GN:
        return float(np.arctan(np.tanh(alpha)))
    if spin is SpinKind.GS:
        return 0.0
    val, _ = quad(lambda b: k_factor(SpinKind.LOG, b), 0.0, alpha, epsabs=THETA_QUAD_TOL)
    return float(val)


def _theta_on_grid(spin: SpinKind, alpha: np.ndarray) -> np.ndarray:
    if spin is not SpinKind.LOG:
        return np.array([theta_angle(spin, a) for a in alpha])
    # composite Gauss-Legendre over each grid cell, accumulated
    x, w = np.polynomial.legendre.leggauss(8)
    lo, hi = alpha[:-1], alpha[1:]
    mid, half = 0.5 * (lo + hi), 0.5 * (hi - lo)
    nodes = mid[:, None] + half[:, None] * x[None, :]
    cell = half * (k_factor(SpinKind.LOG, nodes) @ w)
    return np.concatenate([[0.0], np.cumsum(cell)])


def _rotate_deviatoric(sigma0: np.ndarray, theta) -> np.ndarray:
    c, s = np.cos(theta), np.sin(theta)
    Q = np.empty(np.shape(theta) + (2, 2))
    Q[..., 0, 0], Q[..., 0, 1], Q[..., 1, 0], Q[..., 1, 1] = c, s, -s, c
    return Q @ sigma0 @ np.swapaxes(Q, -1, -2)


def _check_deviatoric(sigma0: np.ndarray) -> np.ndarray:
    sigma0 = np.asarray(sigma0, dtype=float)
    if not np.isclose(sigma0[0, 1], sigma0[1, 0], rtol=0, atol=1e-14):
        raise ValueError("initial stress must be symmetric")
    if abs(sigma0[0, 0] + sigma0[1, 1]) > 1e-14 * max(1.0, np.abs(sigma0).max()):
        raise ValueError("initial stress must satisfy sigma11 = -sigma22")
    return sigma0


def initial_stress_solution(spin: SpinKind, sigma0: np.ndarray, alpha: float) -> np.ndarray:
    """Homogeneous solution carrying the initial stress: ``Q sigma0 Q^T`` with ``Q`` by ``theta``."""
    sigma0 = _check_deviatoric(sigma0)
    return _rotate_deviatoric(sigma0, theta_angle(spin, alpha))


# -- trajectories ------------------------------------------------------------


@dataclass(frozen=True)
class StressTrajectory:
    """Samples ``(alpha, sigma, sigma_bar)``; ``sigma`` arrays have shape ``(n, 2, 2)``."""

    alpha: np.ndarray
    sigma: np.ndarray
    sigma_bar: np.ndarray

    def component(self, which: str) -> np.ndarray:
        """``"11"``, ``"22"``, ``"12"`` of sigma, or ``"bar11"`` etc. of sigma_bar."""
        src = self.sigma_bar if which.startswith("bar") else self.sigma
        i, j = (int(ch) - 1 for ch in which[-2:])
        return src[:, i, j]

    def final(self) -> StressPair:
        return StressPair(self.sigma[-1], self.sigma_bar[-1])

    def sample(self, every: int) -> StressTrajectory:
        return StressTrajectory(self.alpha[::every], self.sigma[::every], self.sigma_bar[::every])


@dataclass(frozen=True)
class HypoProblem:
    rate: RateKind
    mode: ShearMode = ShearMode.LFSS
    mu: float = 1.0
    lam: float = 0.0
    sigma0: np.ndarray = None
    alpha_max: float = 1.5
    steps: int = DEFAULT_STEPS

    def __post_init__(self):
        if self.sigma0 is None:
            object.__setattr__(self, "sigma0", np.zeros((2, 2)))
        if int(self.steps) < 1 or self.steps != int(self.steps):
            raise ValueError("steps must be a positive integer")
        if self.alpha_max < 0:
            raise ValueError("alpha_max must be non-negative")
        if self.mu <= 0:
            raise ValueError("shear modulus must be positive")


def _rotations(mode: ShearMode, alpha: np.ndarray) -> np.ndarray:
    if mode is ShearMode.SIMPLE_SHEAR:
        return np.array([kinematic_state(mode, a).R for a in alpha])
    return np.array([shear_rotation(a) for a in alpha])


def _trajectory(mode: ShearMode, alpha: np.ndarray, sigma: np.ndarray) -> StressTrajectory:
    R = _rotations(mode, alpha)
    Rt = np.swapaxes(R, -1, -2)
    return StressTrajectory(alpha, sigma, Rt @ sigma @ R)


def count_sign_changes(values: np.ndarray) -> int:
    """Sign changes of a sampled signal, ignoring exact zeros."""
    s = np.sign(np.asarray(values))
    s = s[s != 0]
    return int(np.count_nonzero(s[1:] != s[:-1]))


def integrate_lfss(problem: HypoProblem) -> StressTrajectory:
    """RK4 solution of the reduced LFSS system plus the rotated initial stress."""
    if problem.rate.kind != "corotational":
        raise ValueError("integrate_lfss handles corotational rates only")
    if problem.mode is not ShearMode.LFSS:
        raise ValueError("integrate_lfss handles LFSS only")
    sigma0 = _check_deviatoric(problem.sigma0)
    spin, mu, n = problem.rate.spin, problem.mu, int(problem.steps)
    alpha = np.linspace(0.0, problem.alpha_max, n + 1)
    h = problem.alpha_max / n
    # the system is linear with alpha-only coefficients: tabulate them once
    k0 = np.asarray(k_factor(spin, alpha)) * 2
    km = np.asarray(k_factor(spin, alpha[:-1] + 0.5 * h)) * 2
    f0 = 2 * mu * np.tanh(2 * alpha)
    fm = 2 * mu * np.tanh(2 * (alpha[:-1] + 0.5 * h))
    two_mu = 2 * mu
    s11 = np.zeros(n + 1)
    s12 = np.zeros(n + 1)
    x, y = 0.0, 0.0
    for i in range(n):
        a1, b1 = k0[i] * y - f0[i], -k0[i] * x + two_mu
        xa, ya = x + 0.5 * h * a1, y + 0.5 * h * b1
        a2, b2 = km[i] * ya - fm[i], -km[i] * xa + two_mu
        xb, yb = x + 0.5 * h * a2, y + 0.5 * h * b2
        a3, b3 = km[i] * yb - fm[i], -km[i] * xb + two_mu
        xc, yc = x + h * a3, y + h * b3
        a4, b4 = k0[i + 1] * yc - f0[i + 1], -k0[i + 1] * xc + two_mu
        x += h / 6 * (a1 + 2 * a2 + 2 * a3 + a4)
        y += h / 6 * (b1 + 2 * b2 + 2 * b3 + b4)
        s11[i + 1], s12[i + 1] = x, y
    sigma = np.zeros((n + 1, 2, 2))
    sigma[:, 0, 0], sigma[:, 1, 1] = s11, -s11
    sigma[:, 0, 1] = sigma[:, 1, 0] = s12
    if np.any(sigma0):
        sigma = sigma + _rotate_deviatoric(sigma0, _theta_on_grid(spin, alpha))
    return _trajectory(ShearMode.LFSS, alpha, sigma)


def rfss_solution(mu: float, alpha: float) -> StressPair:
    """Zero-start RFSS solution shared by every corotational model."""
    s = 2 * mu * alpha
    t = np.tanh(2 * alpha)
    return StressPair(sym2(s * t, -s * t, s / np.cosh(2 * alpha)), sym2(0.0, 0.0, s))


# -- generic incremental oracle ----------------------------------------------


def _cayley(A: np.ndarray) -> np.ndarray:
    """``(I - A/2)^-1 (I + A/2)`` for a stack of 2x2 matrices."""
    return np.linalg.solve(I2 - 0.5 * A, I2 + 0.5 * A)


def _g_pair_vec(spin: SpinKind, l1: np.ndarray, l2: np.ndarray) -> np.ndarray:
    if spin is SpinKind.ZJ:
        return np.zeros_like(l1)
    ratio = (l1 - l2) / (l1 + l2)
    if spin is SpinKind.GN:
        return -ratio
    gs = 2 * l1 * l2 / (l2**2 - l1**2)
    if spin is SpinKind.GS:
        return gs - ratio
    return gs + 1.0 / (np.log(l1) - np.log(l2)) - ratio


def incremental_integrate(
    rate: RateKind,
    mode: ShearMode,
    mu: float,
    lam: float,
    sigma0: np.ndarray | None,
    alpha_max: float,
    steps: int,
    spin_coefficient=None,
) -> StressTrajectory:
    """Midpoint, incrementally objective update of ``sigma`` along any shear path.

    Each step uses the midpoint velocity gradient from finite differences of
    ``F``. Corotational rates transport the stress with the Cayley transform
    of the spin ``w + g (V1 d V2 - V2 d V1)``; Oldroyd rates use the velocity
    gradient (upper) or ``-l^T`` (lower) instead. ``spin_coefficient``
    overrides ``g(l1, l2)`` for experiments.
    """
    if int(steps) < 1:
        raise ValueError("steps must be a positive integer")
    if alpha_max < 0:
        raise ValueError("alpha_max must be non-negative")
    n = int(steps)
    sigma0 = np.zeros((2, 2)) if sigma0 is None else np.asarray(sigma0, dtype=float)
    alpha = np.linspace(0.0, alpha_max, n + 1)
    dt = alpha_max / n
    F = deformation_gradient(mode, alpha)
    Fm = 0.5 * (F[1:] + F[:-1])
    L = (F[1:] - F[:-1]) / dt @ np.linalg.inv(Fm)
    Lt = np.swapaxes(L, -1, -2)
    d = 0.5 * (L + Lt)
    if rate.kind == "upper":
        spin = L
    elif rate.kind == "lower":
        spin = -Lt
    else:
        spin = 0.5 * (L - Lt)
        # spectral data of V at the midpoint; V = sqrt(Fm Fm^T)
        b = Fm @ np.swapaxes(Fm, -1, -2)
        mean = 0.5 * (b[:, 0, 0] + b[:, 1, 1])
        rad = np.hypot(0.5 * (b[:, 0, 0] - b[:, 1, 1]), b[:, 0, 1])
        e1, e2 = mean + rad, mean - rad
        V1 = (b - e2[:, None, None] * I2) / (e1 - e2)[:, None, None]
        V2 = I2 - V1
        l1, l2 = np.sqrt(e1), np.sqrt(e2)
        if spin_coefficient is None:
            g = _g_pair_vec(rate.spin, l1, l2)
        else:
            g = np.array([spin_coefficient(a, b_) for a, b_ in zip(l1, l2)])
        spin = spin + g[:, None, None] * (V1 @ d @ V2 - V2 @ d @ V1)
    Q = _cayley(dt * spin)
    Qh = _cayley(0.5 * dt * spin)
    trd = d[:, 0, 0] + d[:, 1, 1]
    Cd = 2 * mu * d + lam * trd[:, None, None] * I2
    inc = dt * Qh @ Cd @ np.swapaxes(Qh, -1, -2)
    Qt = np.swapaxes(Q, -1, -2)
    sigma = np.empty((n + 1, 2, 2))
    sigma[0] = s = sigma0
    for i in range(n):
        s = Q[i] @ s @ Qt[i] + inc[i]
        sigma[i + 1] = s
    return _trajectory(mode, alpha, 0.5 * (sigma + np.swapaxes(sigma, -1, -2)))
