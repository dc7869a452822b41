"""Two-state kinematics: exchange-driven amplitudes and the capacity observable.

The system lives in a superposition of two reference states (imaginative and
logical activity).  A non-negative exchange frequency drives coherent
switching between them, starting fully in the first state at ``t = 0``, and a
positive Hermitian 2x2 operator measures the instantaneous creative capacity.
Everything here is closed form, immutable and pure.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidInputError

TWO_PI = 2.0 * math.pi

#: Allowed deviation of |c1|^2 + |c2|^2 from one at construction.
NORM_TOL = 1e-12


def check_finite(name: str, value: float) -> float:
    """Coerce ``value`` to a finite float or raise naming the offending field."""
    if type(value) is not float:
        try:
            value = float(value)
        except (TypeError, ValueError) as exc:
            raise InvalidInputError(f"{name}: expected a real number, got {value!r}") from exc
    if not math.isfinite(value):
        raise InvalidInputError(f"{name}: must be finite, got {value!r}")
    return value


def check_time(name: str, value: float) -> float:
    """Like :func:`check_finite` but additionally requires ``value >= 0``."""
    value = check_finite(name, value)
    if value < 0.0:
        raise InvalidInputError(f"{name}: must be non-negative, got {value!r}")
    return value


@dataclass(frozen=True)
class ExchangeFrequency:
    """Coherent switching rate between the reference states, radians per unit time.

    Zero is allowed and freezes the system in the first reference state.
    """

    omega: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "omega", check_time("omega", self.omega))


def as_frequency(freq: ExchangeFrequency | float) -> ExchangeFrequency:
    """Accept an :class:`ExchangeFrequency` or a bare non-negative number."""
    if isinstance(freq, ExchangeFrequency):
        return freq
    return ExchangeFrequency(freq)


@dataclass(frozen=True)
class TwoStateAmplitude:
    """Complex weights ``(c1, c2)`` of the two reference states at one instant.

    The squared moduli are occupation probabilities, so the pair must be unit
    norm; construction rejects anything off by more than ``NORM_TOL``.
    """

    c1: complex
    c2: complex

    def __post_init__(self) -> None:
        for name in ("c1", "c2"):
            raw = getattr(self, name)
            try:
                value = complex(raw)
            except (TypeError, ValueError) as exc:
                raise InvalidInputError(f"{name}: expected a complex number, got {raw!r}") from exc
            if not cmath.isfinite(value):
                raise InvalidInputError(f"{name}: must be finite, got {value!r}")
            object.__setattr__(self, name, value)
        norm = self.norm
        if abs(norm - 1.0) > NORM_TOL:
            raise InvalidInputError(
                f"amplitudes must be unit norm: |c1|^2 + |c2|^2 = {norm!r} deviates by more than {NORM_TOL}"
            )

    @property
    def norm(self) -> float:
        """``|c1|^2 + |c2|^2`` (one, up to rounding)."""
        return abs(self.c1) ** 2 + abs(self.c2) ** 2

    @property
    def probabilities(self) -> tuple[float, float]:
        """Occupation probabilities of the two reference states."""
        return abs(self.c1) ** 2, abs(self.c2) ** 2


@dataclass(frozen=True)
class CapacityOperator:
    """Positive Hermitian 2x2 observable of creative capacity.

    Parameterized by the positive diagonal elements ``q11`` and ``q22``, the
    modulus ``q12_mod`` of the off-diagonal element and its phase ``delta``.
    ``delta`` is stored reduced to [0, 2*pi).  Positive semidefiniteness
    (``q12_mod**2 <= q11*q22``) is enforced at construction rather than
    clamped: a violating operator is a caller error, not data to repair.
    """

    q11: float
    q22: float
    q12_mod: float
    delta: float

    def __post_init__(self) -> None:
        q11 = check_finite("q11", self.q11)
        q22 = check_finite("q22", self.q22)
        q12_mod = check_finite("q12_mod", self.q12_mod)
        delta = check_finite("delta", self.delta)
        if q11 <= 0.0:
            raise InvalidInputError(f"q11: must be positive, got {q11!r}")
        if q22 <= 0.0:
            raise InvalidInputError(f"q22: must be positive, got {q22!r}")
        if q12_mod < 0.0:
            raise InvalidInputError(f"q12_mod: must be non-negative, got {q12_mod!r}")
        if q12_mod * q12_mod > q11 * q22:
            raise InvalidInputError(
                f"q12_mod: q12_mod**2 = {q12_mod * q12_mod!r} exceeds q11*q22 = {q11 * q22!r}; "
                "the operator would not be positive semidefinite"
            )
        # math.fmod is exact, so the wrap cannot manufacture a phantom phase;
        # the >= guard catches the one rounding case (tiny negative delta).
        delta = math.fmod(delta, TWO_PI)
        if delta < 0.0:
            delta += TWO_PI
        if delta >= TWO_PI:
            delta = 0.0
        object.__setattr__(self, "q11", q11)
        object.__setattr__(self, "q22", q22)
        object.__setattr__(self, "q12_mod", q12_mod)
        object.__setattr__(self, "delta", delta)

    @property
    def classical_mean(self) -> float:
        """Half-sum of the diagonal elements, the classical reference scale."""
        return 0.5 * (self.q11 + self.q22)

    def matrix(self) -> np.ndarray:
        """The operator as an explicit complex 2x2 array."""
        off = self.q12_mod * cmath.exp(1j * self.delta)
        return np.array([[self.q11, off], [off.conjugate(), self.q22]], dtype=complex)


def amplitudes_at(freq: ExchangeFrequency | float, t: float) -> TwoStateAmplitude:
    """Superposition amplitudes after evolving for time ``t``.

    The pair is ``(cos(omega*t), -1j*sin(omega*t))``: the system starts fully
    in the first reference state and cycles coherently through the second.
    The overall time-dependent phase factor is dropped; it cancels in every
    observable.
    """
    freq = as_frequency(freq)
    t = check_time("t", t)
    phase = freq.omega * t
    return TwoStateAmplitude(complex(math.cos(phase)), complex(0.0, -math.sin(phase)))


def instantaneous_capacity(
    op: CapacityOperator,
    freq: ExchangeFrequency | float,
    p_at_t: float,
    t: float,
) -> float:
    """Expected capacity at time ``t``, scaled by the activity weight ``p_at_t``.

    Closed form of the quadratic form of :class:`CapacityOperator` in the
    evolving amplitudes:

        p * ((q11 + q22)/2 + (q11 - q22)/2 * cos(2*omega*t)
             + q12_mod * sin(delta) * sin(2*omega*t))

    ``p_at_t`` is the caller-evaluated profile value; passing it explicitly
    keeps this function free of any profile representation.
    """
    freq = as_frequency(freq)
    p_at_t = check_time("p_at_t", p_at_t)
    t = check_time("t", t)
    phase = 2.0 * freq.omega * t
    bracket = (
        0.5 * (op.q11 + op.q22)
        + 0.5 * (op.q11 - op.q22) * math.cos(phase)
        + op.q12_mod * math.sin(op.delta) * math.sin(phase)
    )
    return p_at_t * bracket
