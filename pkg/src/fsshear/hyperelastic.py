"""Hooke-like isotropic hyperelastic models under finite shear.

Models are evaluated from a stretch tensor: passing V gives the Kirchhoff
stress tau, passing U gives its rotated counterpart ``R^T tau R``. Every
motion here is isochoric, so Kirchhoff and Cauchy stress coincide.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .shear_kinematics import ShearMode, kinematic_state, rate_tensors
from .strain_measures import (
    HENCKY,
    MOONEY,
    PELZER,
    ScaleFunction,
    bazant_itskov,
    doyle_ericksen,
    is_symmetrically_physical,
    parse_scale,
    scale_derivative,
    scale_eval,
    strain_from_stretch,
)
from .tensor_core import I2, polar_decompose, spectral_decompose, sym, sym2

ENERGY_FD_STEP = 1e-5

KINDS = ("hlih", "ogden-a", "ogden-b", "obi", "mr")


@dataclass(frozen=True)
class HyperelasticModel:
    """Tagged constitutive law with shear modulus ``mu`` and Lame ``lam``.

    ``scale`` is used by HLIH, ``r`` by OBI, ``mu1``/``mu2`` by Mooney-Rivlin
    (where ``mu = mu1 + mu2``).
    """

    kind: str
    mu: float = 1.0
    lam: float = 0.0
    scale: ScaleFunction | None = None
    r: float = 0.0
    mu1: float = 0.0
    mu2: float = 0.0
    label: str = field(default="", compare=False)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown hyperelastic model kind {self.kind!r}")
        if self.kind == "hlih" and self.scale is None:
            raise ValueError("HLIH model needs a scale function")
        if self.kind == "obi" and self.r < 0:
            raise ValueError("OBI parameter must be non-negative")
        if self.kind == "mr":
            if self.mu1 < 0 or self.mu2 < 0:
                raise ValueError("Mooney-Rivlin moduli must be non-negative")
            if not np.isclose(self.mu, self.mu1 + self.mu2, rtol=1e-12, atol=0.0):
                raise ValueError("Mooney-Rivlin requires mu = mu1 + mu2")
        if self.mu <= 0:
            raise ValueError("shear modulus must be positive")

    @property
    def name(self) -> str:
        return self.label or self.kind


def hlih(scale: ScaleFunction | str, mu: float = 1.0, lam: float = 0.0) -> HyperelasticModel:
    f = parse_scale(scale) if isinstance(scale, str) else scale
    return HyperelasticModel("hlih", mu, lam, scale=f, label=f"hlih:{f.name}")


def ogden_a(mu: float = 1.0, lam: float = 0.0) -> HyperelasticModel:
    return HyperelasticModel("ogden-a", mu, lam, label="ogden-a")


def ogden_b(mu: float = 1.0, lam: float = 0.0) -> HyperelasticModel:
    return HyperelasticModel("ogden-b", mu, lam, label="ogden-b")


def obi(r: float, mu: float = 1.0, lam: float = 0.0) -> HyperelasticModel:
    return HyperelasticModel("obi", mu, lam, r=float(r), label=f"obi:{r:g}")


def mooney_rivlin(mu1: float, mu2: float, lam: float = 0.0) -> HyperelasticModel:
    return HyperelasticModel(
        "mr", mu1 + mu2, lam, mu1=float(mu1), mu2=float(mu2), label=f"mr:{mu1:g},{mu2:g}"
    )


_HLIH_ALIASES = {"hlih-h": HENCKY, "hlih-p": PELZER, "hlih-m": MOONEY}


def parse_model(name: str, mu: float = 1.0, lam: float = 0.0) -> HyperelasticModel:
    """Build a model from a CLI name such as ``hlih-p``, ``obi:2`` or ``mr:0.5,0.5``.

    For ``mr:<mu1>,<mu2>`` the moduli come from the name and ``mu`` is ignored.
    """
    key = name.strip().lower()
    if key in _HLIH_ALIASES:
        m = hlih(_HLIH_ALIASES[key], mu, lam)
        return HyperelasticModel("hlih", mu, lam, scale=m.scale, label=key)
    if key.startswith("hlih:"):
        return hlih(key[5:], mu, lam)
    if key == "ogden-a":
        return ogden_a(mu, lam)
    if key == "ogden-b":
        return ogden_b(mu, lam)
    try:
        if key.startswith("obi:"):
            return obi(float(key[4:]), mu, lam)
        if key.startswith("mr:"):
            parts = key[3:].split(",")
            if len(parts) != 2:
                raise ValueError
            return mooney_rivlin(float(parts[0]), float(parts[1]), lam)
    except ValueError:
        raise ValueError(f"bad model parameters in {name!r}") from None
    raise ValueError(f"unknown hyperelastic model {name!r}")


@dataclass(frozen=True)
class StressPair:
    """Cauchy stress ``sigma`` and its rotated counterpart ``sigma_bar = R^T sigma R``."""

    sigma: np.ndarray
    sigma_bar: np.ndarray


def _check_spd(stretch: np.ndarray) -> None:
    if np.any(np.linalg.eigvalsh(sym(stretch)) <= 0.0):
        raise ValueError("stretch tensor must be positive definite")


def kirchhoff_stress(model: HyperelasticModel, stretch: np.ndarray, J: float = 1.0) -> np.ndarray:
    """Kirchhoff stress of ``model`` for a stretch tensor (plane strain)."""
    stretch = np.asarray(stretch, dtype=float)
    _check_spd(stretch)
    if J <= 0:
        raise ValueError("Jacobian must be positive")
    mu, lam = model.mu, model.lam
    if model.kind == "hlih":
        f = model.scale
        spec = spectral_decompose(stretch)
        l1, l2 = spec.eigenvalues
        if spec.m == 1:
            l2 = l1
        f1, f2 = scale_eval(f, l1), scale_eval(f, l2)
        # out-of-plane stretch is 1, so f3 = 0 drops out of the trace
        tr = f1 + f2
        t1 = (lam * tr + 2 * mu * f1) * scale_derivative(f, l1) * l1
        t2 = (lam * tr + 2 * mu * f2) * scale_derivative(f, l2) * l2
        if spec.m == 1:
            return t1 * I2
        P1, P2 = spec.projections
        return t1 * P1 + t2 * P2
    vol = lam * np.log(J) * I2
    c = stretch @ stretch
    if model.kind == "ogden-a":
        return mu * (c - I2) + vol
    if model.kind == "ogden-b":
        return mu * (I2 - np.linalg.inv(c)) + vol
    if model.kind == "obi":
        return 2 * mu * strain_from_stretch(bazant_itskov(model.r), stretch) + vol
    return model.mu1 * (c - I2) + model.mu2 * (I2 - np.linalg.inv(c)) + vol


def shear_stress(model: HyperelasticModel, mode: ShearMode, alpha: float) -> StressPair:
    """Stress pair along a shear path, evaluated through the tensor pipeline."""
    st = kinematic_state(mode, alpha)
    if mode is ShearMode.RFSS:
        sigma_bar = sym(kirchhoff_stress(model, st.stretch))
        return StressPair(sym(st.R @ sigma_bar @ st.R.T), sigma_bar)
    sigma = sym(kirchhoff_stress(model, st.V))
    return StressPair(sigma, sym(st.R.T @ sigma @ st.R))


# -- closed-form shear solutions ---------------------------------------------


def pure_shear_amplitude(model: HyperelasticModel, alpha: float) -> float:
    """Shear stress ``s(alpha)`` of a model that produces pure shear on the 45 degree frame."""
    mu = model.mu
    if model.kind == "obi":
        n = model.r
        if n == 0:
            return 2 * mu * alpha
        return mu / n * (np.exp(n * alpha) - np.exp(-n * alpha))
    if model.kind == "hlih":
        f = model.scale
        if f == HENCKY:
            return 2 * mu * alpha
        if f == PELZER:
            return mu / 2 * (np.exp(2 * alpha) - np.exp(-2 * alpha))
        if f == MOONEY:
            return mu / 4 * (np.exp(4 * alpha) - np.exp(-4 * alpha))
        if is_symmetrically_physical(f):
            lam1 = np.exp(alpha)
            return 2 * mu * scale_eval(f, lam1) * scale_derivative(f, lam1) * lam1
    raise ValueError(f"model {model.name!r} has no pure shear closed form")


def analytic_shear_oracle(model: HyperelasticModel, mode: ShearMode, alpha: float) -> StressPair:
    """Closed-form stresses written directly in hyperbolic functions of ``alpha``."""
    if mode is ShearMode.SIMPLE_SHEAR:
        raise ValueError("no closed form for classical simple shear")
    C, S = np.cosh(2 * alpha), np.sinh(2 * alpha)
    if model.kind in ("ogden-a", "ogden-b", "mr"):
        if model.kind == "mr":
            mu1, mu2 = model.mu1, model.mu2
        else:
            mu1, mu2 = (model.mu, 0.0) if model.kind == "ogden-a" else (0.0, model.mu)
        C4 = np.cosh(4 * alpha)
        # the c-term of the left tensor and its rotated, inverted counterparts
        eul = mu1 * sym2(C - 1, C - 1, S) + mu2 * sym2(1 - C, 1 - C, S)
        lag = mu1 * sym2(1 / C - 1, C4 / C - 1, S / C) + mu2 * sym2(1 - C4 / C, 1 - 1 / C, S / C)
        if mode is ShearMode.LFSS:
            return StressPair(eul, lag)
        rf = mu1 * sym2(C4 / C - 1, 1 / C - 1, S / C) + mu2 * sym2(1 - 1 / C, 1 - C4 / C, S / C)
        return StressPair(rf, eul)
    s = pure_shear_amplitude(model, alpha)
    pure = sym2(0.0, 0.0, s)
    if mode is ShearMode.LFSS:
        return StressPair(pure, s / C * sym2(-S, S, 1.0))
    t = np.tanh(2 * alpha)
    return StressPair(sym2(s * t, -s * t, s / C), pure)


def is_pure_shear(S: np.ndarray, tol: float = 1e-12) -> bool:
    scale = tol * max(1.0, abs(S[0, 1]))
    return bool(abs(S[0, 0]) <= scale and abs(S[1, 1]) <= scale)


# -- Mooney-Rivlin energy and rate form --------------------------------------


def _log_det(F: np.ndarray) -> float:
    J = float(np.linalg.det(F))
    if J <= 0:
        raise ValueError("deformation gradient must have positive determinant")
    return np.log(J)


def mr_energy(mu1: float, mu2: float, lam: float, F: np.ndarray) -> float:
    """Strain energy from the traces of the Hill strains of order 2 and -2."""
    F = np.asarray(F, dtype=float)
    logJ = _log_det(F)
    _, U, _ = polar_decompose(F)
    tr2 = np.trace(strain_from_stretch(doyle_ericksen(2), U))
    trm2 = np.trace(strain_from_stretch(doyle_ericksen(-2), U))
    return float(mu1 * (tr2 - logJ) - mu2 * (trm2 - logJ) + 0.5 * lam * logJ**2)


def mr_energy_frobenius(mu1: float, mu2: float, lam: float, F: np.ndarray) -> float:
    """Same energy written with Frobenius norms of ``F`` and ``F^-1`` (2D constants)."""
    F = np.asarray(F, dtype=float)
    logJ = _log_det(F)
    nF = np.sum(F**2)
    nFi = np.sum(np.linalg.inv(F) ** 2)
    return float(
        0.5 * mu1 * (nF - 2 - 2 * logJ) + 0.5 * mu2 * (nFi - 2 + 2 * logJ) + 0.5 * lam * logJ**2
    )


def stress_from_energy(
    mu1: float, mu2: float, lam: float, F: np.ndarray, h: float = ENERGY_FD_STEP
) -> np.ndarray:
    """Kirchhoff stress ``sum lambda_i dW/dlambda_i P_i`` by central differences."""
    if h <= 0:
        raise ValueError("step must be positive")
    _, _, V = polar_decompose(F)
    spec = spectral_decompose(V)
    if spec.m == 1:
        raise ValueError("principal stretches coincide")
    l1, l2 = spec.eigenvalues

    def W(a, b):
        return mr_energy(mu1, mu2, lam, np.diag([a, b]))

    dW1 = (W(l1 + h, l2) - W(l1 - h, l2)) / (2 * h)
    dW2 = (W(l1, l2 + h) - W(l1, l2 - h)) / (2 * h)
    P1, P2 = spec.projections
    return l1 * dW1 * P1 + l2 * dW2 * P2


def mr_zj_rate(d: np.ndarray, c: np.ndarray, mu1: float, mu2: float, lam: float) -> np.ndarray:
    """Zaremba-Jaumann rate of the Mooney-Rivlin Kirchhoff stress for stretching ``d``."""
    if np.any(np.linalg.eigvalsh(sym(c)) <= 0.0):
        raise ValueError("left Cauchy-Green tensor must be positive definite")
    M = mu1 * c + mu2 * np.linalg.inv(c)
    return d @ M + M @ d + lam * np.trace(d) * I2


def numeric_zj_rate(
    model: HyperelasticModel, mode: ShearMode, alpha: float, h: float = ENERGY_FD_STEP
) -> np.ndarray:
    """``dtau/dt + tau w - w tau`` along a shear path, with a central difference in time."""
    def tau(a):
        return kirchhoff_stress(model, kinematic_state(mode, a).V)

    dtau = (tau(alpha + h) - tau(alpha - h)) / (2 * h)
    T = tau(alpha)
    w = rate_tensors(mode, alpha).w
    return dtau + T @ w - w @ T

