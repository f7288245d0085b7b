"""Scale functions of the Hill strain family.

Every shipped function is either a Doyle-Ericksen power ``f_n`` or a
Bazant-Itskov mean ``f_r = (f_r + f_-r) / 2``; named measures are aliases for
particular parameters. All satisfy ``f(1) = 0`` and ``f'(1) = 1``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .tensor_core import apply_isotropic

PARAM_ZERO_TOL = 1e-12
SP_TOL = 1e-10
SP_RANGE = (np.exp(-2.0), np.exp(2.0))


@dataclass(frozen=True)
class ScaleFunction:
    """Strain-generating scalar function.

    ``family`` is ``"de"`` (Doyle-Ericksen, parameter ``n``) or ``"bi"``
    (Bazant-Itskov, parameter ``r >= 0``). ``name`` is a display label only;
    equality and evaluation depend on the family and parameter.
    """

    family: str
    param: float
    name: str = ""

    def __post_init__(self):
        if self.family not in ("de", "bi"):
            raise ValueError(f"unknown scale family {self.family!r}")
        if not np.isfinite(self.param):
            raise ValueError("scale parameter must be finite")
        if self.family == "bi" and self.param < 0:
            raise ValueError("Bazant-Itskov parameter must be non-negative")
        if abs(self.param) < PARAM_ZERO_TOL:
            object.__setattr__(self, "param", 0.0)

    @property
    def is_log(self) -> bool:
        return self.param == 0.0

    def __call__(self, lam: float) -> float:
        return scale_eval(self, lam)

    def derivative(self, lam: float) -> float:
        return scale_derivative(self, lam)

    def __eq__(self, other):
        if not isinstance(other, ScaleFunction):
            return NotImplemented
        return (self.family, self.param) == (other.family, other.param) or (
            self.is_log and other.is_log
        )

    def __hash__(self):
        return hash(("log",) if self.is_log else (self.family, self.param))


def doyle_ericksen(n: float, name: str = "") -> ScaleFunction:
    return ScaleFunction("de", float(n), name or f"de:{n:g}")


def bazant_itskov(r: float, name: str = "") -> ScaleFunction:
    return ScaleFunction("bi", float(r), name or f"bi:{r:g}")


GREEN_LAGRANGE = doyle_ericksen(2, "green-lagrange")
FINGER = doyle_ericksen(2, "finger")
BIOT = doyle_ericksen(1, "biot")
HENCKY = doyle_ericksen(0, "hencky")
HILL = doyle_ericksen(-1, "hill")
SWAINGER = doyle_ericksen(-1, "swainger")
KARNI_REINER = doyle_ericksen(-2, "karni-reiner")
ALMANSI = doyle_ericksen(-2, "almansi")
PELZER = bazant_itskov(1, "pelzer")
MOONEY = bazant_itskov(2, "mooney")

NAMED = {
    f.name: f
    for f in (
        HENCKY, PELZER, MOONEY, GREEN_LAGRANGE, ALMANSI, FINGER,
        BIOT, HILL, SWAINGER, KARNI_REINER,
    )
}


def parse_scale(name: str) -> ScaleFunction:
    """Look up a scale function by CLI name (``hencky``, ``de:<n>``, ``bi:<r>``...)."""
    key = name.strip().lower()
    if key in NAMED:
        return NAMED[key]
    for prefix, ctor in (("de:", doyle_ericksen), ("bi:", bazant_itskov)):
        if key.startswith(prefix):
            try:
                value = float(key[len(prefix):])
            except ValueError:
                raise ValueError(f"bad scale parameter in {name!r}") from None
            return ctor(value)
    raise ValueError(f"unknown scale function {name!r}")


def _check_domain(lam: float) -> float:
    lam = float(lam)
    if not lam > 0.0:
        raise ValueError(f"stretch must be positive, got {lam}")
    return lam


def scale_eval(f: ScaleFunction, lam: float) -> float:
    lam = _check_domain(lam)
    log_lam = np.log(lam)
    if f.is_log:
        return float(log_lam)
    p = f.param
    if f.family == "de":
        return float(np.expm1(p * log_lam) / p)
    return float(np.sinh(p * log_lam) / p)


def scale_derivative(f: ScaleFunction, lam: float) -> float:
    lam = _check_domain(lam)
    if f.is_log:
        return 1.0 / lam
    p = f.param
    if f.family == "de":
        return float(lam ** (p - 1.0))
    return float(0.5 * (lam ** (p - 1.0) + lam ** (-p - 1.0)))


def strain_from_stretch(f: ScaleFunction, stretch: np.ndarray) -> np.ndarray:
    """Hill strain ``sum f(lambda_i) P_i``; Lagrangian for U, Eulerian for V."""
    return apply_isotropic(stretch, f)


def is_symmetrically_physical(f: ScaleFunction, samples: int = 64) -> bool:
    """True iff ``f(1/lambda) = -f(lambda)`` on a log-spaced grid over ``[e^-2, e^2]``."""
    if samples < 1:
        raise ValueError("samples must be positive")
    grid = np.geomspace(*SP_RANGE, samples)
    return all(abs(scale_eval(f, 1.0 / x) + scale_eval(f, x)) <= SP_TOL for x in grid)
