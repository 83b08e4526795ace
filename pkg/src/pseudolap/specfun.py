"""Special functions used throughout the package.

Self-contained double-precision implementations of the gamma function,
the Riemann zeta function and its derivative, the completed zeta function
xi(u) = pi^(-u/2) Gamma(u/2) zeta(u), and the modified Bessel functions
I_nu, K_nu for real or purely imaginary order nu.

Everything is plain binary64.  The tolerances below are the targets the
implementations are tuned for on their documented domains; the test suite
checks them against independent representations (closed forms, integral
representations, power series, second implementations).
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from .errors import ConvergenceError, DomainError, PoleError

EULER_GAMMA = 0.5772156649015328606065120900824024

#: constant Laurent coefficient of xi at its pole u = 0,
#: xi(u) = -1/u + XI_CONST_TERM + O(u)
XI_CONST_TERM = 0.5 * EULER_GAMMA - math.log(2.0 * math.sqrt(math.pi))

# accuracy targets (relative) on the documented domains
GAMMA_TOL = 1e-12
ZETA_TOL = 1e-12
BESSEL_TOL = 1e-10

_SERIES_STOP = 1e-18
_MAX_TERMS = 400

# B_2, B_4, ..., B_40 as exact rationals
_BERNOULLI_EVEN = (
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
    -7709321041217.0 / 510.0,
    2577687858367.0 / 6.0,
    -26315271553053477373.0 / 1919190.0,
    2929993913841559.0 / 6.0,
    -261082718496449122051.0 / 13530.0,
)

# B_{2j} / (2j)! for the Euler-Maclaurin tail
_BERN_OVER_FACT = tuple(
    b / math.factorial(2 * (j + 1)) for j, b in enumerate(_BERNOULLI_EVEN)
)


def _check_finite(z, name="argument"):
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"{name} must be finite, got {z}")
    return z


def _is_nonpositive_integer(z: complex) -> bool:
    return z.imag == 0.0 and z.real <= 0.0 and z.real == math.floor(z.real)


# ---------------------------------------------------------------------------
# gamma and digamma
# ---------------------------------------------------------------------------

_LANCZOS_G = 7.0
_LANCZOS_COEF = (
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


def gamma(z) -> complex:
    """Gamma function for complex argument.

    Rational (Lanczos) approximation on Re z >= 1/2, reflection formula
    elsewhere.  Relative error below ``GAMMA_TOL`` for |z| <= 50 away
    from the poles.
    """
    z = _check_finite(z)
    if _is_nonpositive_integer(z):
        raise PoleError(f"gamma has a pole at {z}")
    if z.real < 0.5:
        # Gamma(z) Gamma(1-z) = pi / sin(pi z)
        return math.pi / (cmath.sin(math.pi * z) * gamma(1.0 - z))
    w = z - 1.0
    acc = _LANCZOS_COEF[0]
    for i, c in enumerate(_LANCZOS_COEF[1:], start=1):
        acc += c / (w + i)
    t = w + _LANCZOS_G + 0.5
    return math.sqrt(2.0 * math.pi) * t ** (w + 0.5) * cmath.exp(-t) * acc


def _recip_gamma(z: complex) -> complex:
    """1/Gamma(z); zero at the poles of Gamma."""
    if _is_nonpositive_integer(z):
        return 0.0 + 0.0j
    return 1.0 / gamma(z)


def digamma(z) -> complex:
    """Logarithmic derivative of gamma.

    Asymptotic expansion after shifting Re z above 15; reflection for
    Re z < 1/2.
    """
    z = _check_finite(z)
    if _is_nonpositive_integer(z):
        raise PoleError(f"digamma has a pole at {z}")
    if z.real < 0.5:
        return digamma(1.0 - z) - math.pi / cmath.tan(math.pi * z)
    acc = 0.0 + 0.0j
    while abs(z) < 15.0:
        acc -= 1.0 / z
        z = z + 1.0
    inv2 = 1.0 / (z * z)
    # psi(z) ~ ln z - 1/(2z) - sum B_2n / (2n z^(2n))
    tail = 0.0 + 0.0j
    power = inv2
    for n, b in enumerate(_BERNOULLI_EVEN[:8], start=1):
        tail += b / (2 * n) * power
        power *= inv2
    return acc + cmath.log(z) - 0.5 / z - tail


# ---------------------------------------------------------------------------
# zeta and friends
# ---------------------------------------------------------------------------


def _zeta_em(z: complex, extra: int = 0):
    """Euler-Maclaurin evaluation of (zeta(z), zeta'(z)) for Re z >= 1/2.

    ``extra`` enlarges the cutoff N (used by tests running the same scheme
    at a higher truncation order).
    """
    m_max = len(_BERN_OVER_FACT)
    n_cut = max(18, int((abs(z) + 2 * m_max) / 2.0) + 1) + extra
    val = 0.0 + 0.0j
    dval = 0.0 + 0.0j
    for k in range(1, n_cut):
        pk = k ** (-z) if k > 1 else 1.0 + 0.0j
        val += pk
        dval -= math.log(k) * pk
    ln_n = math.log(n_cut)
    pn = n_cut ** (-z)
    val += 0.5 * pn
    dval -= 0.5 * ln_n * pn
    pn1 = n_cut * pn  # N^(1-z)
    val += pn1 / (z - 1.0)
    dval += -ln_n * pn1 / (z - 1.0) - pn1 / (z - 1.0) ** 2
    # tail: sum_j B_2j/(2j)! * z(z+1)...(z+2j-2) * N^(1-z-2j)
    poch = z  # rising factorial, 2j-1 factors
    dpoch_sum = 1.0 / z  # sum of reciprocals of the factors
    npow = pn / n_cut  # N^(-z-1)
    prev = math.inf
    for j, bf in enumerate(_BERN_OVER_FACT, start=1):
        term = bf * poch * npow
        if abs(term) > prev:
            break
        val += term
        dval += term * (dpoch_sum - ln_n)
        prev = abs(term)
        if abs(term) < _SERIES_STOP * (abs(val) + 1e-300):
            break
        poch *= (z + 2 * j - 1) * (z + 2 * j)
        dpoch_sum += 1.0 / (z + 2 * j - 1) + 1.0 / (z + 2 * j)
        npow /= n_cut * n_cut
    return val, dval


def zeta(z) -> complex:
    """Riemann zeta function.

    Euler-Maclaurin summation for Re z >= 1/2, the functional equation
    zeta(z) = 2^z pi^(z-1) sin(pi z/2) Gamma(1-z) zeta(1-z) otherwise.
    Relative error below ``ZETA_TOL`` for Re z >= -5, |Im z| <= 50.
    """
    z = _check_finite(z)
    if z == 1.0:
        raise PoleError("zeta has its pole at z = 1")
    if z == 0.0:
        return complex(-0.5)
    if z.real >= 0.5:
        return _zeta_em(z)[0]
    w = 1.0 - z
    return (
        2.0**z
        * math.pi ** (z - 1.0)
        * cmath.sin(0.5 * math.pi * z)
        * gamma(w)
        * _zeta_em(w)[0]
    )


def zeta_deriv(z) -> complex:
    """Derivative of the Riemann zeta function (same domain as ``zeta``)."""
    z = _check_finite(z)
    if z == 1.0:
        raise PoleError("zeta has its pole at z = 1")
    if z.real >= 0.5:
        return _zeta_em(z)[1]
    w = 1.0 - z
    zw, dzw = _zeta_em(w)
    pref = 2.0**z * math.pi ** (z - 1.0) * gamma(w)
    sin_half = cmath.sin(0.5 * math.pi * z)
    cos_half = cmath.cos(0.5 * math.pi * z)
    # product rule on 2^z pi^(z-1) sin(pi z/2) Gamma(1-z) zeta(1-z);
    # written with cos rather than cot so trivial zeros stay regular
    a = pref * sin_half
    da = a * (math.log(2.0) + math.log(math.pi) - digamma(w)) + pref * (
        0.5 * math.pi
    ) * cos_half
    return da * zw - a * dzw


def completed_xi(u) -> complex:
    """Completed zeta function xi(u) = pi^(-u/2) Gamma(u/2) zeta(u).

    Symmetric under u -> 1-u with simple poles at u = 0 and u = 1.  At
    negative even integers the gamma pole cancels a trivial zeta zero;
    those points are evaluated through the symmetry.
    """
    u = _check_finite(u)
    if u == 0.0 or u == 1.0:
        raise PoleError(f"xi has a pole at u = {u}")
    if u.imag == 0.0 and u.real < 0.0 and (u.real / 2.0) == math.floor(u.real / 2.0):
        u = 1.0 - u  # removable 0 * inf at the trivial zeros
    return math.pi ** (-u / 2.0) * gamma(u / 2.0) * zeta(u)


def xi_log_deriv(u) -> complex:
    """Logarithmic derivative xi'(u)/xi(u) away from poles and zeros."""
    u = _check_finite(u)
    if u == 0.0 or u == 1.0:
        raise PoleError(f"xi has a pole at u = {u}")
    return -0.5 * math.log(math.pi) + 0.5 * digamma(u / 2.0) + zeta_deriv(u) / zeta(u)


# ---------------------------------------------------------------------------
# modified Bessel functions
# ---------------------------------------------------------------------------

_BESSEL_MAX_ORDER = 60.0
_SERIES_X_MAX = 3.0  # K: ascending series below, cosh integral above
_I_SERIES_X_MAX = 30.0  # I: ascending series below, asymptotics above


def _as_x_array(x):
    arr = np.asarray(x, dtype=float)
    scalar = arr.ndim == 0
    arr = np.atleast_1d(arr)
    if not np.all(np.isfinite(arr)) or np.any(arr <= 0.0):
        raise DomainError("argument of the Bessel functions must be positive")
    return arr, scalar


def _check_order(order) -> complex:
    nu = _check_finite(order, "order")
    if abs(nu) > _BESSEL_MAX_ORDER:
        raise DomainError(f"|order| <= {_BESSEL_MAX_ORDER} required, got {nu}")
    return nu


def _i_series(nu: complex, x: np.ndarray) -> np.ndarray:
    """Ascending series of I_nu; all-positive term magnitudes, no cancellation."""
    t = np.exp(nu * np.log(0.5 * x)) * _recip_gamma(nu + 1.0)
    t = t.astype(complex)
    total = t.copy()
    q = 0.25 * x * x
    for m in range(1, _MAX_TERMS):
        t = t * q / (m * (nu + m))
        total += t
        if np.max(np.abs(t)) <= _SERIES_STOP * np.max(np.abs(total)):
            return total
    raise ConvergenceError("I series did not converge")


def _i_asymptotic(nu: complex, x: np.ndarray) -> np.ndarray:
    """Large-argument expansion of I_nu, x >= 30."""
    four_nu2 = 4.0 * nu * nu
    term = np.ones_like(x, dtype=complex)
    total = term.copy()
    prev = math.inf
    for k in range(1, 30):
        factor = (four_nu2 - (2 * k - 1) ** 2) / (8.0 * k)
        term = -term * factor / x
        size = np.max(np.abs(term))
        if size > prev:
            break
        total += term
        prev = size
        if size < _SERIES_STOP:
            break
    return np.exp(x) / np.sqrt(2.0 * math.pi * x) * total


def bessel_i(order, x):
    """Modified Bessel function I_nu(x), x > 0, nu real or purely imaginary.

    Ascending series for x <= 30, large-argument expansion beyond.
    """
    nu = _check_order(order)
    if nu.imag == 0.0 and nu.real < 0.0 and nu.real == math.floor(nu.real):
        nu = -nu  # I_{-n} = I_n
    arr, scalar = _as_x_array(x)
    out = np.empty(arr.shape, dtype=complex)
    small = arr <= _I_SERIES_X_MAX
    if np.any(small):
        out[small] = _i_series(nu, arr[small])
    if np.any(~small):
        if np.max(arr) > 700.0:
            raise DomainError("argument too large, e^x overflows binary64")
        out[~small] = _i_asymptotic(nu, arr[~small])
    return out[0] if scalar else out


def _k0_k1_series(x: np.ndarray):
    """K_0 and K_1 by the standard logarithmic series, x <= 3."""
    q = 0.25 * x * x
    i0 = np.real(_i_series(0.0 + 0.0j, x))
    i1 = np.real(_i_series(1.0 + 0.0j, x))
    lg = np.log(0.5 * x)
    # K_0 = -(log(x/2) + gamma) I_0 + sum_{m>=1} H_m q^m / (m!)^2
    term = np.ones_like(x)
    h = 0.0
    acc0 = np.zeros_like(x)
    # K_1 = 1/x + log(x/2) I_1 - (x/4) sum_{m>=0} (H_m + H_{m+1} - 2 gamma) q^m / (m! (m+1)!)
    term1 = np.ones_like(x)
    acc1 = (1.0 - 2.0 * EULER_GAMMA) * term1
    for m in range(1, _MAX_TERMS):
        term = term * q / (m * m)
        h += 1.0 / m
        acc0 += h * term
        term1 = term1 * q / (m * (m + 1))
        acc1 += (2.0 * h + 1.0 / (m + 1) - 2.0 * EULER_GAMMA) * term1
        if np.max(term) < _SERIES_STOP and m > 4:
            break
    k0 = -(lg + EULER_GAMMA) * i0 + acc0
    k1 = 1.0 / x + lg * i1 - 0.25 * x * acc1
    return k0.astype(complex), k1.astype(complex)


def _k_reflection_series(mu: complex, x: np.ndarray) -> np.ndarray:
    """K_mu = (pi/2) (I_{-mu} - I_mu) / sin(pi mu), x <= 3, mu off the integers."""
    s = cmath.sin(math.pi * mu)
    return 0.5 * math.pi * (_i_series(-mu, x) - _i_series(mu, x)) / s


def _k_integral(mu: complex, x: np.ndarray) -> np.ndarray:
    """K_mu(x) = int_0^inf exp(-x cosh t) cosh(mu t) dt by trapezoid.

    The integrand is an even entire function of t decaying doubly
    exponentially, so the trapezoid rule converges geometrically.
    """
    xmin = float(np.min(x))
    xmax = float(np.max(x))
    arg = max(805.0 / xmin, 1.2)
    t_max = math.acosh(arg) + 1.0
    h = min(0.08, 0.5 / math.sqrt(xmax), 0.3 / (1.0 + abs(mu.imag)))
    n = int(t_max / h) + 2
    t = np.linspace(0.0, t_max, n)
    weights = np.full(n, t[1] - t[0])
    weights[0] *= 0.5
    weights[-1] *= 0.5
    out = np.empty(x.shape, dtype=complex)
    if mu.real == 0.0:
        osc = np.cos(mu.imag * t)  # cosh(i tau t) = cos(tau t), real
    else:
        osc = np.cosh(mu * t)
    chunk = 8192
    for lo in range(0, x.size, chunk):
        xs = x[lo : lo + chunk, None]
        block = np.exp(-xs * np.cosh(t)[None, :]) * osc[None, :]
        out[lo : lo + chunk] = block @ weights
    return out


def _k_small_x(mu: complex, x: np.ndarray) -> np.ndarray:
    """K_mu on x <= 3, |Re mu| < 1.6."""
    if mu.imag == 0.0:
        if abs(mu.real - round(mu.real)) < 1e-7:
            n = abs(int(round(mu.real)))
            return _k0_k1_series(x)[min(n, 1)]
        return _k_reflection_series(mu, x)
    if mu.real == 0.0:
        tau = abs(mu.imag)
        if tau < 1e-6:
            return _k0_k1_series(x)[0]
        i_val = _i_series(complex(0.0, tau), x)
        return (-math.pi * np.imag(i_val) / math.sinh(math.pi * tau)).astype(complex)
    if abs(cmath.sin(math.pi * mu)) < 1e-8:
        raise DomainError(f"order {mu} too close to an integer for the mixed path")
    return _k_reflection_series(mu, x)


def _k_core(mu: complex, x: np.ndarray) -> np.ndarray:
    """K_mu for |Re mu| <= 1.5 on a positive array."""
    out = np.empty(x.shape, dtype=complex)
    small = x <= _SERIES_X_MAX
    if np.any(small):
        out[small] = _k_small_x(mu, x[small])
    if np.any(~small):
        out[~small] = _k_integral(mu, x[~small])
    return out


def bessel_k(order, x):
    """Modified Bessel function K_nu(x), x > 0, complex order, |nu| <= 60.

    Ascending series for x <= 3, the cosh integral representation beyond;
    real parts above 1/2 are reached by upward recurrence, which is
    stable for K.  For purely imaginary order the result is real.
    """
    nu = _check_order(order)
    if nu.real < 0.0 or (nu.real == 0.0 and nu.imag < 0.0):
        nu = -nu  # K_{-nu} = K_nu
    arr, scalar = _as_x_array(x)
    steps = int(math.floor(nu.real + 0.5))
    mu = nu - steps
    if steps == 0:
        k_hi = _k_core(mu, arr)
    else:
        k_lo = _k_core(mu, arr)
        k_hi = _k_core(mu + 1.0, arr)
        for j in range(1, steps):
            k_lo, k_hi = k_hi, k_lo + 2.0 * (mu + j) / arr * k_hi
    return k_hi[0] if scalar else k_hi


def bessel_i_deriv(order, x):
    """d/dx I_nu(x) via I'_nu = (I_{nu-1} + I_{nu+1}) / 2."""
    nu = _check_order(order)
    return 0.5 * (bessel_i(nu - 1.0, x) + bessel_i(nu + 1.0, x))


def bessel_k_deriv(order, x):
    """d/dx K_nu(x) via K'_nu = -(K_{nu-1} + K_{nu+1}) / 2."""
    nu = _check_order(order)
    return -0.5 * (bessel_k(nu - 1.0, x) + bessel_k(nu + 1.0, x))
