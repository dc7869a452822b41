"""Normalized activity profiles p(t): rectangular window, gamma-type decay, tabulated data.

Every profile integrates to one over its support, so the aggregate product is
measured against a fixed amount of lifetime activity regardless of how that
activity is spread out in time.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidInputError
from .model import check_time
from .quadrature import integrate

#: The decaying profile is truncated at 40/gamma for numerical work:
#: the tail mass (1 + 40) * exp(-40) ~ 1.7e-16 sits below every tolerance used.
DECAY_SUPPORT_FACTOR = 40.0


class ActivityProfile:
    """Normalized time weight of creative activity.

    Subclasses provide the pointwise value, the peak location and a finite
    support window for numerical integration.
    """

    def evaluate(self, t: float) -> float:
        """Profile value p(t); ``t`` must be non-negative."""
        return self._value(check_time("t", t))

    def _value(self, t: float) -> float:
        raise NotImplementedError

    def peak_time(self) -> float:
        """Time of maximum activity."""
        raise NotImplementedError

    def support(self) -> tuple[float, float]:
        """Finite window [lo, hi] carrying the profile mass used numerically."""
        raise NotImplementedError

    def quad_breakpoints(self) -> tuple[float, ...]:
        """Interior points where quadrature panels should be cut (kinks, knots)."""
        return ()

    def normalization_defect(self) -> float:
        """|integral of p - 1|; zero by construction for the analytic variants."""
        lo, hi = self.support()
        total = integrate(self.evaluate, lo, hi, breakpoints=self.quad_breakpoints())
        return abs(total - 1.0)


@dataclass(frozen=True)
class StepProfile(ActivityProfile):
    """Flat activity 1/T over the window [0, T], zero outside."""

    horizon: float

    def __post_init__(self) -> None:
        horizon = check_time("T", self.horizon)
        if horizon <= 0.0:
            raise InvalidInputError(f"T: must be positive, got {horizon!r}")
        object.__setattr__(self, "horizon", horizon)

    def _value(self, t: float) -> float:
        return 1.0 / self.horizon if t <= self.horizon else 0.0

    def peak_time(self) -> float:
        # Flat profile: the midpoint is a convention, not a real maximum.
        return 0.5 * self.horizon

    def support(self) -> tuple[float, float]:
        return 0.0, self.horizon

    def normalization_defect(self) -> float:
        return 0.0


@dataclass(frozen=True)
class DecayProfile(ActivityProfile):
    """Activity rising from zero and decaying as gamma**2 * t * exp(-gamma*t)."""

    gamma: float

    def __post_init__(self) -> None:
        gamma = check_time("gamma", self.gamma)
        if gamma <= 0.0:
            raise InvalidInputError(f"gamma: must be positive, got {gamma!r}")
        object.__setattr__(self, "gamma", gamma)

    def _value(self, t: float) -> float:
        return self.gamma * self.gamma * t * math.exp(-self.gamma * t)

    def peak_time(self) -> float:
        return 1.0 / self.gamma

    def support(self) -> tuple[float, float]:
        return 0.0, DECAY_SUPPORT_FACTOR / self.gamma

    def normalization_defect(self) -> float:
        return 0.0


class TabulatedProfile(ActivityProfile):
    """Piecewise-linear profile built from (t, p) samples.

    Samples are renormalized at construction so that the trapezoid integral is
    one; the pre-normalization defect |integral - 1| stays available on
    ``input_defect``.  Evaluation interpolates linearly between samples and is
    zero outside the sampled range.
    """

    def __init__(self, samples) -> None:
        try:
            pairs = [(float(t), float(p)) for t, p in samples]
        except (TypeError, ValueError) as exc:
            raise InvalidInputError(f"samples: expected (t, p) number pairs: {exc}") from exc
        if len(pairs) < 2:
            raise InvalidInputError(f"samples: need at least 2 samples, got {len(pairs)}")
        times = np.array([t for t, _ in pairs], dtype=float)
        weights = np.array([p for _, p in pairs], dtype=float)
        if not np.all(np.isfinite(times)) or not np.all(np.isfinite(weights)):
            raise InvalidInputError("samples: all values must be finite")
        if times[0] < 0.0:
            raise InvalidInputError(f"samples: times must be non-negative, got t[0] = {times[0]!r}")
        if not np.all(np.diff(times) > 0.0):
            raise InvalidInputError("samples: times must be strictly increasing")
        if np.any(weights < 0.0):
            raise InvalidInputError("samples: profile values must be non-negative")
        raw = float(np.sum(0.5 * (weights[1:] + weights[:-1]) * np.diff(times)))
        if not (raw > 0.0):
            raise InvalidInputError(f"samples: profile mass must be positive, got integral {raw!r}")
        weights = weights / raw
        times.setflags(write=False)
        weights.setflags(write=False)
        self._times = times
        self._weights = weights
        #: |trapezoid integral - 1| of the samples as supplied, before renormalization.
        self.input_defect = abs(raw - 1.0)

    @classmethod
    def from_csv(cls, path) -> "TabulatedProfile":
        """Load samples from a two-column CSV with header ``t,p``."""
        try:
            with open(path, newline="", encoding="utf-8") as fh:
                rows = [row for row in csv.reader(fh) if row]
        except OSError as exc:
            raise InvalidInputError(f"profile: cannot read {path!r}: {exc}") from exc
        if not rows:
            raise InvalidInputError(f"profile: {path!r} is empty")
        header = [cell.strip().lower() for cell in rows[0]]
        if header != ["t", "p"]:
            raise InvalidInputError(f"profile: {path!r} must start with header 't,p', got {rows[0]!r}")
        samples = []
        for lineno, row in enumerate(rows[1:], start=2):
            if len(row) != 2:
                raise InvalidInputError(f"profile: {path!r} line {lineno}: expected 2 columns, got {len(row)}")
            try:
                samples.append((float(row[0]), float(row[1])))
            except ValueError as exc:
                raise InvalidInputError(f"profile: {path!r} line {lineno}: {exc}") from exc
        return cls(samples)

    @property
    def times(self) -> np.ndarray:
        return self._times

    @property
    def weights(self) -> np.ndarray:
        """Sample values after renormalization."""
        return self._weights

    def _value(self, t: float) -> float:
        return float(np.interp(t, self._times, self._weights, left=0.0, right=0.0))

    def peak_time(self) -> float:
        return float(self._times[int(np.argmax(self._weights))])

    def support(self) -> tuple[float, float]:
        return float(self._times[0]), float(self._times[-1])

    def quad_breakpoints(self) -> tuple[float, ...]:
        return tuple(self._times[1:-1])
