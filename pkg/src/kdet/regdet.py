"""Zeta-regularized determinant det((s - R) | sum_n K_n(A) (x) C).

R acts on K_n(A) (x) C by (1 - n)/2, so the determinant is the regularized
product of (s + (n - 1)/2) with multiplicity rank K_n(A).  Grouping the
Borel ranks gives the spectral zeta function

    phi_A(w, s) = (s - 1/2)^-w + (r1 + r2 - 1) s^-w
                  + (r1 + r2) phi1(w, s) + r2 phi2(w, s)

with phi1(w, s) = sum_{k>=1} (2k + s)^-w = 2^-w zeta(w, 1 + s/2) and
phi2(w, s) = sum_{k>=0} (2k + 1 + s)^-w = 2^-w zeta(w, (s + 1)/2).

Two independent evaluations are offered:

* ``Method.SPECTRAL`` exponentiates -d/dw phi at w = 0 using the Hurwitz
  engine for zeta(0, x) and the Lerch value of zeta'(0, x);
* ``Method.CLOSED_FORM`` uses the gamma-factor expression
  (s - 1/2) s^-1 [gamma_R(s)^r1 gamma_C(s)^r2 (2 pi)^(d s / 2)]^-1 C(K).
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

from .errors import DomainError, PoleError
from .number_field import Signature
from .special_fn import (
    DEFAULT_PRECISION,
    HALF_LOG_2PI,
    PrecisionConfig,
    _checked,
    _complex,
    hurwitz_zeta,
    hurwitz_zeta_dw_at0,
    inv_gamma_C,
    inv_gamma_R,
)

LOG_2 = math.log(2.0)
SQRT_PI = math.sqrt(math.pi)


class Method(enum.Enum):
    SPECTRAL = "spectral"
    CLOSED_FORM = "closed"


@dataclass(frozen=True)
class DetValue:
    value: complex
    method: Method
    s: complex
    sig: Signature


def _ipow(z: complex, n: int) -> complex:
    # repeated multiplication keeps integer powers branch-free
    out = 1 + 0j
    base = z if n >= 0 else 1 / z
    for _ in range(abs(n)):
        out *= base
    return out


def _cpow(base: complex, w: complex) -> complex:
    # base^w on the principal branch
    return cmath.exp(w * cmath.log(base))


def _two_pow_neg(w: complex) -> complex:
    return cmath.exp(-w * LOG_2)


def _check_w(w: complex):
    if w == 1:
        raise PoleError("phi has a pole at w=1")


def phi1(w, s, cfg: PrecisionConfig = DEFAULT_PRECISION) -> complex:
    """sum_{k>=1} (2k + s)^-w, continued in w."""
    w, s = _complex(w, "w"), _complex(s, "s")
    _check_w(w)
    if s.real <= -2.0:
        raise DomainError(f"phi1 requires Re(s) > -2, got s={s!r}")
    return _two_pow_neg(w) * hurwitz_zeta(w, 1 + s / 2, cfg)


def phi2(w, s, cfg: PrecisionConfig = DEFAULT_PRECISION) -> complex:
    """sum_{k>=0} (2k + 1 + s)^-w, continued in w."""
    w, s = _complex(w, "w"), _complex(s, "s")
    _check_w(w)
    if s.real <= -1.0:
        raise DomainError(f"phi2 requires Re(s) > -1, got s={s!r}")
    return _two_pow_neg(w) * hurwitz_zeta(w, (s + 1) / 2, cfg)


def _neg_dphi_at0(x: complex, cfg: PrecisionConfig) -> complex:
    # -d/dw [2^-w zeta(w, x)] at w = 0
    return LOG_2 * hurwitz_zeta(0, x, cfg) - hurwitz_zeta_dw_at0(x)


def phi1_neg_dw_at0(s, cfg: PrecisionConfig = DEFAULT_PRECISION) -> complex:
    s = _complex(s, "s")
    if s.real <= -2.0:
        raise DomainError(f"phi1 requires Re(s) > -2, got s={s!r}")
    return _neg_dphi_at0(1 + s / 2, cfg)


def phi2_neg_dw_at0(s, cfg: PrecisionConfig = DEFAULT_PRECISION) -> complex:
    s = _complex(s, "s")
    if s.real <= -1.0:
        raise DomainError(f"phi2 requires Re(s) > -1, got s={s!r}")
    return _neg_dphi_at0((s + 1) / 2, cfg)


def _method(method) -> Method:
    return method if isinstance(method, Method) else Method(method)


def regprod1(s, method=Method.SPECTRAL, cfg: PrecisionConfig = DEFAULT_PRECISION) -> complex:
    """Regularized product of (2k + s) over k >= 1."""
    s = _complex(s, "s")
    if _method(method) is Method.SPECTRAL:
        return _checked(cmath.exp(phi1_neg_dw_at0(s, cfg)), "regprod1")
    if s == 0:
        raise PoleError("closed form of regprod1 is singular at s=0")
    value = inv_gamma_R(s) / s * cmath.exp(-s * HALF_LOG_2PI) * 2 * SQRT_PI
    return _checked(value, "regprod1")


def regprod2(s, method=Method.SPECTRAL, cfg: PrecisionConfig = DEFAULT_PRECISION) -> complex:
    """Regularized product of (2k + 1 + s) over k >= 0."""
    s = _complex(s, "s")
    if _method(method) is Method.SPECTRAL:
        return _checked(cmath.exp(phi2_neg_dw_at0(s, cfg)), "regprod2")
    value = inv_gamma_R(s + 1) * cmath.exp(-s * HALF_LOG_2PI) * math.sqrt(2.0)
    return _checked(value, "regprod2")


def constant_C(sig: Signature) -> float:
    """(2 sqrt(pi))^r1 (2 sqrt(2 pi))^r2."""
    return (2 * SQRT_PI) ** sig.r1 * (2 * math.sqrt(2 * math.pi)) ** sig.r2


def det_spectral(s, sig: Signature, cfg: PrecisionConfig = DEFAULT_PRECISION) -> DetValue:
    s = _complex(s, "s")
    if s == 0:
        raise PoleError("the determinant is not evaluated at s=0")
    if s.real <= -1.0:
        raise DomainError(f"spectral route requires Re(s) > -1, got s={s!r}")
    units = sig.r1 + sig.r2
    value = (
        (s - 0.5)
        * _ipow(s, units - 1)
        * _ipow(regprod1(s, Method.SPECTRAL, cfg), units)
        * _ipow(regprod2(s, Method.SPECTRAL, cfg), sig.r2)
    )
    return DetValue(_checked(value, "det_spectral"), Method.SPECTRAL, s, sig)


def det_closed(s, sig: Signature) -> DetValue:
    s = _complex(s, "s")
    if s == 0:
        raise PoleError("the determinant is not evaluated at s=0")
    value = (
        (s - 0.5)
        / s
        * _ipow(inv_gamma_R(s), sig.r1)
        * _ipow(inv_gamma_C(s), sig.r2)
        * cmath.exp(-sig.degree * s * HALF_LOG_2PI)
        * constant_C(sig)
    )
    return DetValue(_checked(value, "det_closed"), Method.CLOSED_FORM, s, sig)


def determinant(s, sig: Signature, method=Method.CLOSED_FORM, cfg: PrecisionConfig = DEFAULT_PRECISION) -> DetValue:
    if _method(method) is Method.SPECTRAL:
        return det_spectral(s, sig, cfg)
    return det_closed(s, sig)


def _check_phi_domain(s: complex):
    if s == 0 or s == 0.5:
        raise DomainError(f"phi_A is not defined at s={s.real:g}")
    if s.real <= -1.0:
        raise DomainError(f"phi_A requires Re(s) > -1, got s={s!r}")


def phi_A(w, s, sig: Signature, cfg: PrecisionConfig = DEFAULT_PRECISION) -> complex:
    """Spectral zeta function sum_n rank K_n(A) (s + (n - 1)/2)^-w."""
    w, s = _complex(w, "w"), _complex(s, "s")
    _check_w(w)
    _check_phi_domain(s)
    units = sig.r1 + sig.r2
    value = _cpow(s - 0.5, -w) + (units - 1) * _cpow(s, -w) + units * phi1(w, s, cfg)
    if sig.r2:
        value += sig.r2 * phi2(w, s, cfg)
    return _checked(value, "phi_A")


def phi_A_neg_dw_at0(s, sig: Signature, cfg: PrecisionConfig = DEFAULT_PRECISION) -> complex:
    """-d/dw phi_A(w, s) at w = 0, assembled term by term."""
    s = _complex(s, "s")
    _check_phi_domain(s)
    units = sig.r1 + sig.r2
    value = cmath.log(s - 0.5) + (units - 1) * cmath.log(s) + units * phi1_neg_dw_at0(s, cfg)
    if sig.r2:
        value += sig.r2 * phi2_neg_dw_at0(s, cfg)
    return value
