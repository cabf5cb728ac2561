"""Zeta-regularized determinants of the weight operator on K_n(A) (x) C
for the ring of integers A of a number field, computed by a spectral
(Hurwitz zeta) route and a closed gamma-factor route."""

from .errors import DegreeError, DomainError, KdetError, NotSquarefreeError, ParseError, PoleError
from .ktheory import SpectrumSlice, borel_rank, spectrum
from .number_field import (
    IntPolynomial,
    Signature,
    parse_polynomial,
    render_polynomial,
    signature,
    sturm_real_root_count,
)
from .regdet import (
    DetValue,
    Method,
    constant_C,
    det_closed,
    det_spectral,
    phi1,
    phi2,
    phi_A,
    phi_A_neg_dw_at0,
    regprod1,
    regprod2,
)
from .special_fn import (
    DEFAULT_PRECISION,
    PrecisionConfig,
    gamma_C,
    gamma_R,
    hurwitz_zeta,
    hurwitz_zeta_dw_at0,
    hurwitz_zeta_dw_at0_fd,
    lerch_regprod,
    log_gamma,
)

__version__ = "0.1.0"
