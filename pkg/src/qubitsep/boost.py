"""Lorentz boost matrices and their two-sided action on R.

A boost L satisfies L^T eta L = eta with eta = diag(1, -1, -1, -1) and
det L = 1.  Two forms are used: a boost confined to the (0, axis) plane,
and the general symmetric boost built from a velocity 3-vector beta with
gamma = (1 - beta^2)^(-1/2) and spatial block I + X beta beta^T,
X = (gamma - 1)/beta^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import BoostLimitError, DegenerateTransformationError, InvalidParameterError
from .rmatrix import RMatrix

ETA = np.diag([1.0, -1.0, -1.0, -1.0])

# Boosts closer to light speed than this raise, signalling a non-generic state.
BETA_LIMIT = 1e-9


def _gamma(beta_sq: float) -> float:
    return 1.0 / math.sqrt(1.0 - beta_sq)


@dataclass(frozen=True)
class BoostX:
    """A boost acting in the (0, axis) plane of R."""

    beta: float
    axis: int = 1

    def __post_init__(self):
        if self.axis not in (1, 2, 3):
            raise InvalidParameterError("axis must be 1, 2 or 3")
        if not math.isfinite(self.beta):
            raise InvalidParameterError("beta must be finite")
        if abs(self.beta) >= 1.0 - BETA_LIMIT:
            raise BoostLimitError(
                f"|beta| = {abs(self.beta):.12g} reaches the light-speed limit",
                beta=self.beta,
            )

    @property
    def gamma(self) -> float:
        return _gamma(self.beta * self.beta)

    @property
    def matrix(self) -> np.ndarray:
        return boost_x(self.beta, self.axis)


@dataclass(frozen=True)
class GeneralBoost:
    """A symmetric boost along an arbitrary velocity 3-vector."""

    beta: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.beta, dtype=float).reshape(3)
        if not np.all(np.isfinite(v)):
            raise InvalidParameterError("beta must be finite")
        if float(v @ v) >= 1.0 - BETA_LIMIT:
            raise BoostLimitError(
                f"beta^2 = {float(v @ v):.12g} reaches the light-speed limit",
                beta=float(np.sqrt(v @ v)),
            )
        v = v.copy()
        v.setflags(write=False)
        object.__setattr__(self, "beta", v)

    @property
    def beta_sq(self) -> float:
        return float(self.beta @ self.beta)

    @property
    def gamma(self) -> float:
        return _gamma(self.beta_sq)

    @property
    def x_factor(self) -> float:
        # (gamma - 1)/beta^2 in a cancellation-free form; -> 1/2 as beta -> 0.
        g = self.gamma
        return g * g / (g + 1.0)

    @property
    def matrix(self) -> np.ndarray:
        return boost_general(self.beta)


def boost_x(beta: float, axis: int = 1, beta_limit: float = BETA_LIMIT) -> np.ndarray:
    """4x4 boost with block [[g, -g b], [-g b, g]] on indices (0, axis)."""
    if axis not in (1, 2, 3):
        raise InvalidParameterError("axis must be 1, 2 or 3")
    if not math.isfinite(beta):
        raise InvalidParameterError("beta must be finite")
    if abs(beta) >= 1.0 - beta_limit:
        raise BoostLimitError(
            f"|beta| = {abs(beta):.12g} reaches the light-speed limit", beta=beta
        )
    g = _gamma(beta * beta)
    m = np.eye(4)
    m[0, 0] = m[axis, axis] = g
    m[0, axis] = m[axis, 0] = -g * beta
    return m


def boost_general(beta, beta_limit: float = BETA_LIMIT) -> np.ndarray:
    """The symmetric boost for a velocity 3-vector; reduces to boost_x on an axis."""
    v = np.asarray(beta, dtype=float).reshape(3)
    if not np.all(np.isfinite(v)):
        raise InvalidParameterError("beta must be finite")
    beta_sq = float(v @ v)
    if beta_sq >= 1.0 - beta_limit:
        raise BoostLimitError(
            f"beta^2 = {beta_sq:.12g} reaches the light-speed limit",
            beta=math.sqrt(beta_sq),
        )
    g = _gamma(beta_sq)
    x = g * g / (g + 1.0)
    m = np.empty((4, 4))
    m[0, 0] = g
    m[0, 1:] = -g * v
    m[1:, 0] = -g * v
    m[1:, 1:] = np.eye(3) + x * np.outer(v, v)
    return m


def apply_two_sided(r: RMatrix, left, right) -> RMatrix:
    """Return left @ R @ right^T, renormalized with the raw corner recorded.

    The right factor is transposed internally so callers always pass plain
    boost matrices regardless of which side they act on.
    """
    lm = np.asarray(left, dtype=float)
    rm = np.asarray(right, dtype=float)
    if lm.shape != (4, 4) or rm.shape != (4, 4):
        raise InvalidParameterError("boost factors must be 4x4")
    if not (np.all(np.isfinite(lm)) and np.all(np.isfinite(rm))):
        raise InvalidParameterError("boost factors must be finite")
    raw = lm @ r.raw @ rm.T
    if raw[0, 0] <= 0.0:
        raise DegenerateTransformationError(
            f"transformed corner entry {raw[0, 0]:.6g} is not positive"
        )
    return RMatrix(raw)
