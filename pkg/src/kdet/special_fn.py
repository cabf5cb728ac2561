"""Complex special functions: log-gamma, the archimedean gamma factors and
a Hurwitz zeta engine based on Euler-Maclaurin summation.

All values are Python ``complex`` in double precision.  Inputs are coerced
with ``complex()``; non-finite inputs and results raise ``DomainError``.
"""

from __future__ import annotations

import cmath
import math
import os
from dataclasses import dataclass, asdict
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError, PoleError

LOG_2PI = math.log(2 * math.pi)
LOG_PI = math.log(math.pi)
HALF_LOG_2PI = 0.5 * LOG_2PI

# log_gamma shifts its argument until Re(z) reaches this value before
# applying the Stirling series.
_STIRLING_SHIFT = 15.0
_STIRLING_TERMS = 10


@dataclass(frozen=True)
class PrecisionConfig:
    """Truncation parameters for the numerical layer.

    em_shift: number of terms summed directly before Euler-Maclaurin.
    em_order: highest Bernoulli correction order (even, 2..20).
    fd_step: step of the central difference used as a derivative oracle.
    """

    em_shift: int = 30
    em_order: int = 12
    fd_step: float = 1e-5

    def __post_init__(self):
        if not isinstance(self.em_shift, int) or self.em_shift < 8:
            raise DomainError(f"em_shift must be an integer >= 8, got {self.em_shift!r}")
        if not isinstance(self.em_order, int) or self.em_order not in range(2, 21, 2):
            raise DomainError(f"em_order must be an even integer in 2..20, got {self.em_order!r}")
        if not (0.0 < float(self.fd_step) < 1e-2):
            raise DomainError(f"fd_step must lie in (0, 1e-2), got {self.fd_step!r}")

    def to_dict(self):
        return asdict(self)

    @classmethod
    def from_dict(cls, data):
        unknown = set(data) - {"em_shift", "em_order", "fd_step"}
        if unknown:
            raise DomainError(f"unknown precision keys: {sorted(unknown)}")
        return cls(**data)


DEFAULT_PRECISION = PrecisionConfig()


@lru_cache(maxsize=None)
def bernoulli_numbers(m_max: int = 22) -> tuple[Fraction, ...]:
    """Exact Bernoulli numbers B_0..B_m_max (B_1 = -1/2 convention)."""
    b = [Fraction(1)]
    for m in range(1, m_max + 1):
        acc = sum(math.comb(m + 1, k) * b[k] for k in range(m))
        b.append(-acc / (m + 1))
    return tuple(b)


def _em_coefficients(order):
    # B_{2j} / (2j)! for j = 1..order/2
    b = bernoulli_numbers(order)
    return tuple(float(b[2 * j] / math.factorial(2 * j)) for j in range(1, order // 2 + 1))


_EM_COEFFS = {m: _em_coefficients(m) for m in range(2, 21, 2)}

_STIRLING_COEFFS = tuple(
    float(bernoulli_numbers(2 * _STIRLING_TERMS)[2 * j] / (2 * j * (2 * j - 1)))
    for j in range(1, _STIRLING_TERMS + 1)
)


def _complex(z, name="argument") -> complex:
    z = complex(z)
    if not cmath.isfinite(z):
        raise DomainError(f"{name} must be finite, got {z!r}")
    return z


def _checked(z: complex, what: str) -> complex:
    if not cmath.isfinite(z):
        raise DomainError(f"{what} is not representable in double precision")
    return z


def _exp(z: complex, what: str) -> complex:
    try:
        return _checked(cmath.exp(z), what)
    except OverflowError:
        raise DomainError(f"{what} overflows double precision") from None


def is_nonpositive_integer(z: complex) -> bool:
    return z.imag == 0.0 and z.real <= 0.0 and z.real == math.floor(z.real)


def log_gamma(z) -> complex:
    """Principal branch of log Gamma(z) on the plane cut along (-inf, 0]."""
    z = _complex(z, "z")
    if is_nonpositive_integer(z):
        raise PoleError(f"Gamma has a pole at z={z.real:g}")
    if z.imag == 0.0 and z.real < 0.0:
        raise DomainError("log_gamma is not continued onto the negative real axis")

    # log Gamma(z) = log Gamma(z + n) - sum log(z + k); each log(z + k) is
    # analytic off the real cut, so the sum stays on the principal branch.
    shift = 0.0
    n = max(0, math.ceil(_STIRLING_SHIFT - z.real))
    for k in range(n):
        shift += cmath.log(z + k)
    zn = z + n

    inv = 1.0 / zn
    inv2 = inv * inv
    series = 0j
    power = inv
    for c in _STIRLING_COEFFS:
        series += c * power
        power *= inv2
    value = (zn - 0.5) * cmath.log(zn) - zn + HALF_LOG_2PI + series
    return _checked(value - shift, "log_gamma")


def gamma(z) -> complex:
    """Gamma(z), including the negative real axis via reflection."""
    z = _complex(z, "z")
    if is_nonpositive_integer(z):
        raise PoleError(f"Gamma has a pole at z={z.real:g}")
    if z.imag == 0.0 and z.real < 0.0:
        x = z.real
        return complex(math.pi / (math.sin(math.pi * x) * gamma(1.0 - x).real))
    return _exp(log_gamma(z), "Gamma(z)")


def rgamma(z) -> complex:
    """1/Gamma(z); entire, with exact zeros at the non-positive integers."""
    z = _complex(z, "z")
    if is_nonpositive_integer(z):
        return 0j
    if z.imag == 0.0 and z.real < 0.0:
        x = z.real
        return complex(math.sin(math.pi * x) * gamma(1.0 - x).real / math.pi)
    return _exp(-log_gamma(z), "1/Gamma(z)")


def gamma_R(s) -> complex:
    """Gamma(s/2) * pi^(-s/2)."""
    s = _complex(s, "s")
    if is_nonpositive_integer(s / 2):
        raise PoleError(f"gamma_R has a pole at s={s.real:g}")
    return _checked(gamma(s / 2) * cmath.exp(-0.5 * s * LOG_PI), "gamma_R(s)")


def gamma_C(s) -> complex:
    """Gamma(s) * 2 * (2 pi)^(-s)."""
    s = _complex(s, "s")
    if is_nonpositive_integer(s):
        raise PoleError(f"gamma_C has a pole at s={s.real:g}")
    return _checked(2.0 * gamma(s) * cmath.exp(-s * LOG_2PI), "gamma_C(s)")


def inv_gamma_R(s) -> complex:
    """1/gamma_R(s), zero at s = 0, -2, -4, ..."""
    s = _complex(s, "s")
    return _checked(rgamma(s / 2) * cmath.exp(0.5 * s * LOG_PI), "1/gamma_R(s)")


def inv_gamma_C(s) -> complex:
    """1/gamma_C(s), zero at s = 0, -1, -2, ..."""
    s = _complex(s, "s")
    return _checked(0.5 * rgamma(s) * cmath.exp(s * LOG_2PI), "1/gamma_C(s)")


def hurwitz_zeta(w, x, cfg: PrecisionConfig = DEFAULT_PRECISION) -> complex:
    """Hurwitz zeta function zeta(w, x) = sum_{k>=0} (k + x)^(-w).

    Analytic continuation in ``w`` by Euler-Maclaurin: the first
    ``cfg.em_shift`` terms are summed directly, the tail is replaced by its
    integral, the half-endpoint term and Bernoulli corrections up to order
    ``cfg.em_order``.  Requires Re(x) > 0, so every log(k + x) is principal.
    """
    w = _complex(w, "w")
    x = _complex(x, "x")
    if x.real <= 0.0:
        raise DomainError(f"hurwitz_zeta requires Re(x) > 0, got x={x!r}")
    if w == 1:
        raise PoleError("hurwitz_zeta has a simple pole at w=1")

    n = cfg.em_shift
    total = 0j
    for k in range(n):
        total += cmath.exp(-w * cmath.log(k + x))

    a = n + x
    log_a = cmath.log(a)
    a_w = cmath.exp(-w * log_a)
    total += a * a_w / (w - 1) + 0.5 * a_w

    # B_{2j}/(2j)! * w(w+1)...(w+2j-2) * a^(-w-2j+1)
    rising = w
    power = a_w / a
    inv_a2 = 1.0 / (a * a)
    for j, c in enumerate(_EM_COEFFS[cfg.em_order], start=1):
        total += c * rising * power
        rising *= (w + 2 * j - 1) * (w + 2 * j)
        power *= inv_a2
    return _checked(total, "hurwitz_zeta")


def hurwitz_zeta_dw_at0(x) -> complex:
    """d/dw zeta(w, x) at w = 0, via Lerch: log Gamma(x) - log(2 pi)/2."""
    x = _complex(x, "x")
    if x.real <= 0.0:
        raise DomainError(f"hurwitz_zeta_dw_at0 requires Re(x) > 0, got x={x!r}")
    return log_gamma(x) - HALF_LOG_2PI


def hurwitz_zeta_dw_at0_fd(x, cfg: PrecisionConfig = DEFAULT_PRECISION) -> complex:
    """Central-difference estimate of d/dw zeta(w, x) at w = 0."""
    h = cfg.fd_step
    return (hurwitz_zeta(h, x, cfg) - hurwitz_zeta(-h, x, cfg)) / (2 * h)


def lerch_regprod(x) -> complex:
    """Zeta-regularized product of (n + x), n >= 0; equals sqrt(2 pi)/Gamma(x)."""
    return _exp(-hurwitz_zeta_dw_at0(x), "lerch_regprod")


def precision_from_env(var: str = "REGDET_PRECISION") -> PrecisionConfig:
    """Read a JSON PrecisionConfig from the environment, else the defaults."""
    import json

    raw = os.environ.get(var)
    if not raw:
        return DEFAULT_PRECISION
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise DomainError(f"{var} is not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise DomainError(f"{var} must hold a JSON object")
    return PrecisionConfig.from_dict(data)
