"""
Inverse of the standard Gaussian CDF.
"""

import math

from scipy.special import ndtr

from ..errors import OutOfDomain

# Rational approximation coefficients (central region and tails)
_A = (-3.969683028665376e01, 2.209460984245205e02, -2.759285104469687e02,
      1.383577518672690e02, -3.066479806614716e01, 2.506628277459239e00)
_B = (-5.447609879822406e01, 1.615858368580409e02, -1.556989798598866e02,
      6.680131188771972e01, -1.328068155288572e01)
_C = (-7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e00,
      -2.549732539343734e00, 4.374664141464968e00, 2.938163982698783e00)
_D = (7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e00,
      3.754408661907416e00)

_P_LOW = 0.02425
_INV_SQRT_2PI = 1.0 / math.sqrt(2.0 * math.pi)


def _polyval(coeffs, x: float) -> float:
    acc = 0.0
    for c in coeffs:
        acc = acc * x + c
    return acc


def _lower_half(p: float) -> float:
    """Approximate quantile for 0 < p <= 0.5 (relative error about 1e-9)."""
    if p < _P_LOW:
        q = math.sqrt(-2.0 * math.log(p))
        return _polyval(_C, q) / (_polyval(_D, q) * q + 1.0)
    q = p - 0.5
    r = q * q
    return _polyval(_A, r) * q / (_polyval(_B, r) * r + 1.0)


def gaussian_quantile(eps: float) -> float:
    """
    Phi^-1(eps) for 0 < eps < 1.

    The rational approximation is refined by one Newton step on Phi; the
    upper half is mirrored from the lower one so the result is odd about 1/2.

    Raises:
        OutOfDomain: eps outside (0, 1)
    """
    eps = float(eps)
    if not (0.0 < eps < 1.0):
        raise OutOfDomain(f"Quantile needs 0 < eps < 1, got {eps!r}")
    if eps > 0.5:
        return -gaussian_quantile(1.0 - eps)

    x = _lower_half(eps)
    density = _INV_SQRT_2PI * math.exp(-0.5 * x * x)
    x -= (float(ndtr(x)) - eps) / density
    return x
