"""Walk amplitudes from a spectral measure.

The inverse Laplace transform is carried out analytically: the measure is
finite and atomic, so the return amplitude is an exact exponential sum
sum_i A_i exp(-i x_i t) and the stratum amplitudes add the orthonormal
polynomial values at the nodes. The Laplace-domain form exists only for
validation against tabulated s-domain expressions; it is never inverted
numerically.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import (
    IndexOutOfRange,
    InvalidParams,
    NoClosedForm,
    OutOfSupportedRange,
)
from .jacobi import JacobiCoefficients
from .stieltjes import SpectralMeasure, orthonormal_values, stieltjes_pole_sum

MAX_BESSEL_ORDER = 50
MAX_BESSEL_ARG = 1.0e3


@dataclass(frozen=True)
class ExponentialSum:
    """Closed-form amplitude sum(coeff * exp(-i * rate * t)) with real terms."""

    terms: tuple[tuple[float, float], ...]  # (coefficient, rate)

    def __call__(self, t):
        t = np.asarray(t, dtype=np.float64)
        coeffs = np.array([c for c, _ in self.terms])
        rates = np.array([r for _, r in self.terms])
        value = (coeffs[:, None] * np.exp(-1j * np.outer(rates, t))).sum(axis=0)
        return complex(value[()]) if value.ndim == 0 else value

    @classmethod
    def build(cls, exponentials=(), cosines=(), constant=0.0) -> "ExponentialSum":
        """Assemble from exp terms (coeff, rate), cosine terms (coeff, freq)
        and a constant; cosines split into conjugate exponential pairs."""
        terms: list[tuple[float, float]] = [(float(c), float(r)) for c, r in exponentials]
        for c, f in cosines:
            terms.append((float(c) / 2.0, float(f)))
            terms.append((float(c) / 2.0, -float(f)))
        if constant:
            terms.append((float(constant), 0.0))
        return cls(terms=tuple(terms))

    def total_mass(self) -> float:
        return float(sum(c for c, _ in self.terms))


@dataclass(frozen=True)
class AmplitudeSeries:
    """Per-stratum amplitudes sampled on a time grid."""

    times: np.ndarray                 # ascending, shape (T,)
    values: np.ndarray                # complex, shape (levels, T)
    kappa: tuple[int, ...] | None     # shell sizes, when a graph stratification exists
    conservation_defect: np.ndarray   # |sum_l |q_l|^2 - 1| per sample, shape (T,)

    @property
    def levels(self) -> int:
        return self.values.shape[0]

    def probabilities(self) -> np.ndarray:
        return np.abs(self.values) ** 2

    def to_csv(self) -> str:
        lines = ["t,stratum,re,im,prob"]
        for j, t in enumerate(self.times):
            for l in range(self.levels):
                v = self.values[l, j]
                prob = v.real * v.real + v.imag * v.imag
                lines.append(
                    f"{t:.17g},{l},{v.real:.17g},{v.imag:.17g},{prob:.17g}"
                )
        return "\n".join(lines) + "\n"

    def as_dict(self) -> dict:
        return {
            "times": [float(t) for t in self.times],
            "kappa": list(self.kappa) if self.kappa is not None else None,
            "values": [
                [[float(v.real), float(v.imag)] for v in row] for row in self.values
            ],
            "conservation_defect": [float(x) for x in self.conservation_defect],
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict())


def return_amplitude(measure: SpectralMeasure, t):
    """q_0(t) = sum_i A_i exp(-i x_i t); scalar or array t."""
    t = np.asarray(t, dtype=np.float64)
    value = (
        measure.weights_array()[:, None]
        * np.exp(-1j * np.outer(measure.nodes_array(), t))
    ).sum(axis=0)
    return complex(value[()]) if value.ndim == 0 else value


def laplace_return_amplitude(measure: SpectralMeasure, s: complex) -> complex:
    """Laplace transform of the return amplitude: i G(i s)."""
    return 1j * stieltjes_pole_sum(measure, 1j * s)


def stratum_amplitude(measure: SpectralMeasure, jc: JacobiCoefficients, level: int, t):
    """q_l(t) = sum_i A_i p_l(x_i) exp(-i x_i t) with orthonormal p_l."""
    if not (0 <= level <= jc.depth):
        raise IndexOutOfRange(f"stratum {level} outside [0, {jc.depth}]")
    t = np.asarray(t, dtype=np.float64)
    nodes = measure.nodes_array()
    poly = orthonormal_values(jc, nodes)[level]
    value = (
        (measure.weights_array() * poly)[:, None] * np.exp(-1j * np.outer(nodes, t))
    ).sum(axis=0)
    return complex(value[()]) if value.ndim == 0 else value


def vertex_amplitude(stratum_value, shell_size: int):
    """Per-site amplitude p_alpha = q_l / sqrt(kappa_l), equal across the shell."""
    if shell_size < 1:
        raise InvalidParams(f"shell size must be >= 1, got {shell_size}")
    return stratum_value / math.sqrt(shell_size)


def amplitude_series(
    measure: SpectralMeasure,
    jc: JacobiCoefficients,
    times,
    *,
    kappa: Sequence[int] | None = None,
) -> AmplitudeSeries:
    """All stratum amplitudes over an ascending time grid.

    Every sample is evaluated independently (one matrix product per grid),
    so results do not depend on evaluation order. ``kappa`` carries shell
    sizes when the coefficients came from an actual graph stratification.
    """
    times = np.asarray(times, dtype=np.float64)
    if times.ndim != 1 or times.size < 1:
        raise InvalidParams("time grid must be a non-empty 1-d array")
    if times.size > 1 and not (np.diff(times) > 0).all():
        raise InvalidParams("time grid must be strictly ascending")
    if kappa is not None:
        kappa = tuple(int(k) for k in kappa)
        if len(kappa) != jc.dim:
            raise InvalidParams(
                f"kappa has {len(kappa)} entries for {jc.dim} strata"
            )

    nodes = measure.nodes_array()
    weighted = orthonormal_values(jc, nodes) * measure.weights_array()[None, :]
    phases = np.exp(-1j * np.outer(nodes, times))
    values = weighted @ phases
    defect = np.abs((np.abs(values) ** 2).sum(axis=0) - 1.0)
    times = times.copy()
    times.setflags(write=False)
    values.setflags(write=False)
    defect.setflags(write=False)
    return AmplitudeSeries(
        times=times, values=values, kappa=kappa, conservation_defect=defect
    )


def closed_form_q0(entry, t):
    """Evaluate the tabulated closed-form return amplitude of a catalog entry."""
    form = getattr(entry, "closed_form", None)
    if form is None:
        raise NoClosedForm(f"no tabulated closed form for {getattr(entry, 'id', entry)!r}")
    return form(t)


def bessel_j(order: int, x: float) -> float:
    """Bessel function of the first kind J_order(x).

    Power series below |x| = 10, Miller backward recurrence above, both to
    about 1e-12 absolute over the supported window (order <= 50, |x| <= 1e3).
    """
    if not isinstance(order, (int, np.integer)) or isinstance(order, bool):
        raise OutOfSupportedRange(f"order must be an integer, got {order!r}")
    if order < 0 or order > MAX_BESSEL_ORDER:
        raise OutOfSupportedRange(f"order {order} outside [0, {MAX_BESSEL_ORDER}]")
    x = float(x)
    if not np.isfinite(x) or abs(x) > MAX_BESSEL_ARG:
        raise OutOfSupportedRange(f"|x| = {abs(x)} outside supported range")
    sign = -1.0 if (x < 0 and order % 2 == 1) else 1.0
    x = abs(x)
    if x == 0.0:
        return 1.0 if order == 0 else 0.0
    if x <= 10.0:
        return sign * _bessel_series(order, x)
    return sign * _bessel_miller(order, x)


def _bessel_series(order: int, x: float) -> float:
    half = 0.5 * x
    # leading term (x/2)^order / order! in log space would be overkill here:
    # order <= 50 and x <= 10 keep it comfortably inside double range
    term = 1.0
    for m in range(1, order + 1):
        term *= half / m
    total = term
    m = 0
    while True:
        m += 1
        term *= -(half * half) / (m * (m + order))
        total += term
        if abs(term) < 1e-18 * (1.0 + abs(total)) and m > half:
            return total


def _bessel_miller(order: int, x: float) -> float:
    top = max(order, int(math.ceil(x)))
    start = top + 25 + int(2.0 * top ** 0.55)
    if start % 2 == 1:
        start += 1
    jp, jc = 0.0, 1e-30
    result = 0.0
    even_sum = 0.0  # accumulates J_0 + 2 sum J_2k for normalization
    for k in range(start, -1, -1):
        jm = (2.0 * (k + 1) / x) * jc - jp
        jp, jc = jc, jm
        if abs(jc) > 1e250:
            jc *= 1e-250
            jp *= 1e-250
            result *= 1e-250
            even_sum *= 1e-250
        if k == order:
            result = jc
        if k % 2 == 0:
            even_sum += jc if k == 0 else 2.0 * jc
    return result / even_sum
