"""Enumerations and the kinematic state container."""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import SingularPointError

__all__ = ["ModelKind", "LoadCase", "KinematicState", "field_point", "R_MIN"]

R_MIN = 1e-300


class ModelKind(str, enum.Enum):
    RelaxedMicromorphic = "RelaxedMicromorphic"
    ZeroPoissonRelaxed = "ZeroPoissonRelaxed"
    PureRelaxed = "PureRelaxed"
    MicroStretch = "MicroStretch"
    Micropolar = "Micropolar"
    CoupleStress = "CoupleStress"
    ClassicalMacro = "ClassicalMacro"
    ClassicalMicro = "ClassicalMicro"
    GaugeDislocation = "GaugeDislocation"

    @classmethod
    def parse(cls, text):
        for m in cls:
            if m.value.lower() == str(text).lower():
                return m
        raise ValueError(f"unknown model {text!r}; choose from {[m.value for m in cls]}")


class LoadCase(str, enum.Enum):
    force = "force"
    couple = "couple"

    @classmethod
    def parse(cls, text):
        try:
            return cls(str(text).lower())
        except ValueError:
            raise ValueError(f"unknown load {text!r}; choose 'force' or 'couple'") from None


@dataclass(frozen=True)
class KinematicState:
    """Displacement, micro-distortion and micro-rotation at one or many points.

    Every component is a float or an array of the common point shape.
    """

    u1: np.ndarray
    u2: np.ndarray
    P11: np.ndarray
    P12: np.ndarray
    P21: np.ndarray
    P22: np.ndarray
    theta3: np.ndarray

    @property
    def u(self):
        return np.stack([self.u1, self.u2])

    @property
    def P(self):
        return np.stack([np.stack([self.P11, self.P12]), np.stack([self.P21, self.P22])])

    def as_dict(self):
        return dict(u1=self.u1, u2=self.u2, P11=self.P11, P12=self.P12,
                    P21=self.P21, P22=self.P22, theta3=self.theta3)


def field_point(x):
    """Split ``x`` (shape ``(2, ...)``) into float arrays ``x1, x2, r``."""
    x1 = np.asarray(x[0], dtype=float)
    x2 = np.asarray(x[1], dtype=float)
    x1, x2 = np.broadcast_arrays(x1, x2)
    r = np.hypot(x1, x2)
    if np.any(r < R_MIN):
        raise SingularPointError("fields are undefined at the load point r = 0")
    return x1, x2, r
