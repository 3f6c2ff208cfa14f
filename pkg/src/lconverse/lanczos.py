"""Complex log-Gamma via the Lanczos approximation.

Coefficients are the widely published g = 7, n = 9 set (as in Numerical
Recipes / Godfrey), accurate to roughly 1e-15 relative on Re z >= 1/2.
The left half-plane uses the reflection formula with exact argument
reduction of ``sin(pi z)``.  Only ``exp`` of the result is meaningful to
callers: the branch of the logarithm is not normalized.
"""

from __future__ import annotations

import cmath
import math

LANCZOS_G = 7.0
LANCZOS_COEFFICIENTS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)

_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)
_LOG_PI = math.log(math.pi)


def _log_sin_pi(z: complex) -> complex:
    # reduce Re z to [-1/2, 1/2]; sin(pi (z + n)) = (-1)^n sin(pi z)
    n = round(z.real)
    w = complex(z.real - n, z.imag)
    phase = 1j * math.pi * (n % 2)
    if abs(w.imag) <= 1.0:
        return cmath.log(cmath.sin(math.pi * w)) + phase
    # large |Im|: factor out the dominant exponential to avoid overflow
    if w.imag > 0:
        body = -1j * math.pi * w + cmath.log(1 - cmath.exp(2j * math.pi * w))
        return body - cmath.log(-2j) + phase
    body = 1j * math.pi * w + cmath.log(1 - cmath.exp(-2j * math.pi * w))
    return body - cmath.log(2j) + phase


def loggamma(z: complex) -> complex:
    """A logarithm of Gamma(z); raises ValueError at the poles."""
    z = complex(z)
    if z.imag == 0 and z.real <= 0 and z.real == math.floor(z.real):
        raise ValueError(f"Gamma has a pole at {z}")
    if z.real < 0.5:
        return _LOG_PI - _log_sin_pi(z) - loggamma(1 - z)
    z -= 1
    x = LANCZOS_COEFFICIENTS[0]
    for i, c in enumerate(LANCZOS_COEFFICIENTS[1:], start=1):
        x += c / (z + i)
    t = z + LANCZOS_G + 0.5
    return _HALF_LOG_2PI + (z + 0.5) * cmath.log(t) - t + cmath.log(x)


def gamma(z: complex) -> complex:
    return cmath.exp(loggamma(z))
