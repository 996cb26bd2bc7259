"""Deterministic, splittable random number streams.

Every stream is a counter-based generator keyed by (seed, level, path,
purpose): draw i is a pure function of the key and i, so paths can be
simulated in any order (or on any thread) with identical results, and a
coarse path can re-consume exactly the draws its fine partner used.

All distribution sampling goes through inversion of a single uniform, never
rejection, so the number of draws a simulation consumes is deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import IntEnum

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15  # splitmix64 sequence constant

# Uniforms are clamped into [2^-64, 1 - 2^-53] so that inverse-CDF transforms
# stay finite.
_U_LO = 2.0**-64
_U_HI = 1.0 - 2.0**-53


class Purpose(IntEnum):
    """What a stream's draws are consumed for.

    Each purpose gets an independent substream, so e.g. drawing bridge
    integrals lazily never shifts the Brownian increments of the same path.
    """

    BROWNIAN_INCREMENT = 0
    BRIDGE_INTEGRAL = 1
    MINIMUM_UNIFORM = 2
    JUMP_WAITING = 3
    JUMP_MARK = 4
    THINNING_UNIFORM = 5
    CUMULATIVE_EXPONENTIAL = 6


@dataclass(frozen=True)
class StreamKey:
    seed: int
    level: int
    path_index: int
    purpose: Purpose

    def mixed(self) -> int:
        """Collapse the key fields into one avalanched 64-bit value."""
        h = _mix64(self.seed & _MASK64)
        for word in (self.level, self.path_index, int(self.purpose)):
            h = _mix64((h + _GAMMA + word) & _MASK64)
        return h


def _mix64(z: int) -> int:
    # splitmix64 finalizer (Steele, Lea & Flood)
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


class RngStream:
    """A value-copyable stream: (key, counter) identifies the next draw."""

    __slots__ = ("key", "counter", "_k64")

    def __init__(self, key: StreamKey, counter: int = 0):
        self.key = key
        self.counter = counter
        self._k64 = key.mixed()

    def copy(self) -> "RngStream":
        s = RngStream.__new__(RngStream)
        s.key = self.key
        s.counter = self.counter
        s._k64 = self._k64
        return s

    def next_u64(self) -> int:
        self.counter += 1
        return _mix64((self._k64 + self.counter * _GAMMA) & _MASK64)

    def uniform(self) -> float:
        """Next uniform in [2^-64, 1 - 2^-53]."""
        u = (self.next_u64() >> 11) * 2.0**-53
        if u < _U_LO:
            return _U_LO
        return u


def make_stream(seed: int, level: int, path_index: int, purpose: Purpose) -> RngStream:
    return RngStream(StreamKey(seed, level, path_index, purpose))


def normal(stream: RngStream) -> float:
    """Standard normal by inverse-CDF of the stream's next uniform."""
    return inv_norm_cdf(stream.uniform())


def exponential(stream: RngStream, rate: float) -> float:
    """Exponential waiting time, -ln(1-u)/rate."""
    if rate <= 0.0:
        raise ValueError(f"exponential rate must be > 0, got {rate}")
    return -math.log1p(-stream.uniform()) / rate


def lognormal_mark(stream: RngStream, mean: float, variance: float) -> float:
    """Jump magnitude Y with log Y ~ N(mean, variance)."""
    if variance <= 0.0:
        raise ValueError(f"lognormal mark variance must be > 0, got {variance}")
    return math.exp(mean + math.sqrt(variance) * normal(stream))


# ---------------------------------------------------------------------------
# Inverse normal CDF (Wichura's AS 241, PPND16): rational approximation with
# absolute error well below 1e-9 over the clamped uniform range.
# ---------------------------------------------------------------------------

_A = (
    3.3871328727963666080e0,
    1.3314166789178437745e2,
    1.9715909503065514427e3,
    1.3731693765509461125e4,
    4.5921953931549871457e4,
    6.7265770927008700853e4,
    3.3430575583588128105e4,
    2.5090809287301226727e3,
)
_B = (
    1.0,
    4.2313330701600911252e1,
    6.8718700749205790830e2,
    5.3941960214247511077e3,
    2.1213794301586595867e4,
    3.9307895800092710610e4,
    2.8729085735721942674e4,
    5.2264952788528545610e3,
)
_C = (
    1.42343711074968357734e0,
    4.63033784615654529590e0,
    5.76949722146069140550e0,
    3.64784832476320460504e0,
    1.27045825245236838258e0,
    2.41780725177450611770e-1,
    2.27238449892691845833e-2,
    7.74545014278341407640e-4,
)
_D = (
    1.0,
    2.05319162663775882187e0,
    1.67638483018380384940e0,
    6.89767334985100004550e-1,
    1.48103976427480074590e-1,
    1.51986665636164571966e-2,
    5.47593808499534494600e-4,
    1.05075007164441684324e-9,
)
_E = (
    6.65790464350110377720e0,
    5.46378491116411436990e0,
    1.78482653991729133580e0,
    2.96560571828504891230e-1,
    2.65321895265761230930e-2,
    1.24266094738807843860e-3,
    2.71155556874348757815e-5,
    2.01033439929228813265e-7,
)
_F = (
    1.0,
    5.99832206555887937690e-1,
    1.36929880922735805310e-1,
    1.48753612908506148525e-2,
    7.86869131145613259100e-4,
    1.84631831751005468180e-5,
    1.42151175831644588870e-7,
    2.04426310338993978564e-15,
)


# Horner-ordered (highest degree first) copies for the evaluation loop.
_AR, _BR, _CR, _DR, _ER, _FR = (
    tuple(reversed(t)) for t in (_A, _B, _C, _D, _E, _F)
)


def _ratpoly(r: float, num_rev: tuple, den_rev: tuple) -> float:
    p = 0.0
    for c in num_rev:
        p = p * r + c
    q = 0.0
    for c in den_rev:
        q = q * r + c
    return p / q


def inv_norm_cdf(u: float) -> float:
    """Quantile of the standard normal for u in (0, 1)."""
    if u <= 0.0:
        u = _U_LO
    elif u >= 1.0:
        u = _U_HI
    q = u - 0.5
    if abs(q) <= 0.425:
        r = 0.180625 - q * q
        return q * _ratpoly(r, _AR, _BR)
    r = u if q < 0.0 else 1.0 - u
    r = math.sqrt(-math.log(r))
    if r <= 5.0:
        r -= 1.6
        z = _ratpoly(r, _CR, _DR)
    else:
        r -= 5.0
        z = _ratpoly(r, _ER, _FR)
    return -z if q < 0.0 else z


def norm_cdf(x: float) -> float:
    """Standard normal CDF via erf (used by the smoothed digital estimator)."""
    return 0.5 * (1.0 + math.erf(x / math.sqrt(2.0)))
