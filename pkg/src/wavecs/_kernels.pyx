# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled log-normal oscillatory kernel (see ``_kernels_py`` for the reference)."""
from libc.math cimport exp, cos, sin, log, sqrt, ceil, fabs, M_PI

from .errors import NonConvergence

cdef double[15] XGK = [
    -0.991455371120812639206854697526329, -0.949107912342758524526189684047851,
    -0.864864423359769072789712788640926, -0.741531185599394439863864773280788,
    -0.586087235467691130294144845693013, -0.405845151377397166906606412076961,
    -0.207784955007898467600689403773245, 0.0,
    0.207784955007898467600689403773245, 0.405845151377397166906606412076961,
    0.586087235467691130294144845693013, 0.741531185599394439863864773280788,
    0.864864423359769072789712788640926, 0.949107912342758524526189684047851,
    0.991455371120812639206854697526329]
cdef double[15] WGK = [
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
    0.204432940075298892414161999234649, 0.190350578064785409913256402421014,
    0.169004726639267902826583426598550, 0.140653259715525918745189590510238,
    0.104790010322250183839876322541518, 0.063092092629978553290700663189204,
    0.022935322010529224963732008058970]
cdef double[15] WG = [
    0.0, 0.129484966168869693270611432679082, 0.0,
    0.279705391489276667901467771423780, 0.0,
    0.381830050505118944950369775488975, 0.0,
    0.417959183673469387755102040816327, 0.0,
    0.381830050505118944950369775488975, 0.0,
    0.279705391489276667901467771423780, 0.0,
    0.129484966168869693270611432679082, 0.0]


cdef struct Params:
    double a
    double mu
    double lam
    double beta
    double k
    double log_peak
    double tol
    double span
    int max_sub
    int used


cdef inline void gk15(Params* P, double lo, double hi,
                      double* kre, double* kim, double* gre, double* gim) noexcept nogil:
    cdef double half = 0.5 * (hi - lo)
    cdef double mid = 0.5 * (hi + lo)
    cdef double v, ev, env, ph
    cdef int i
    kre[0] = 0.0; kim[0] = 0.0; gre[0] = 0.0; gim[0] = 0.0
    for i in range(15):
        v = mid + half * XGK[i]
        ev = exp(v)
        env = exp(P.a * v - P.mu * (v - P.lam) * (v - P.lam) - P.log_peak)
        ph = P.beta * ev * ev + P.k * ev
        kre[0] += WGK[i] * env * cos(ph)
        kim[0] -= WGK[i] * env * sin(ph)
        gre[0] += WG[i] * env * cos(ph)
        gim[0] -= WG[i] * env * sin(ph)
    kre[0] *= half; kim[0] *= half; gre[0] *= half; gim[0] *= half


cdef int panel(Params* P, double lo, double hi, double* re, double* im) noexcept nogil:
    cdef double kre, kim, gre, gim, err
    gk15(P, lo, hi, &kre, &kim, &gre, &gim)
    err = sqrt((kre - gre) * (kre - gre) + (kim - gim) * (kim - gim))
    if err <= P.tol * (hi - lo) / P.span:
        re[0] += kre
        im[0] += kim
        return 0
    P.used += 1
    if P.used > P.max_sub:
        return -1
    cdef double m = 0.5 * (lo + hi)
    if panel(P, lo, m, re, im) != 0:
        return -1
    return panel(P, m, hi, re, im)


cdef inline double s_of(double v, double c, double ab, double ak) noexcept nogil:
    return c * v + (ab * exp(2.0 * v) + ak * exp(v)) / M_PI


# more panels than this means the phase is unresolvable at double precision anyway
MAX_PANELS = 1_000_000


cdef inline double ds_of(double v, double c, double ab, double ak) noexcept nogil:
    return c + (2.0 * ab * exp(2.0 * v) + ak * exp(v)) / M_PI


def osc_lognormal(double p, double mu, double lam, double beta, double k,
                  double abs_tol=1e-12, double rel_tol=1e-10, int max_sub=2000):
    """Return ``(I, log_peak)`` with the integral equal to ``exp(log_peak) * I``."""
    cdef Params P
    cdef double a = p + 1.0
    cdef double vstar = lam + a / (2.0 * mu)
    cdef double half = sqrt((-log(abs_tol) + 2.0) / mu)
    cdef double lo = vstar - half, hi = vstar + half
    cdef double c = 16.0 / (hi - lo)
    cdef double ab = fabs(beta), ak = fabs(k)
    cdef double s_lo = s_of(lo, c, ab, ak), s_hi = s_of(hi, c, ab, ak)
    if s_hi - s_lo > MAX_PANELS:
        raise NonConvergence(f"{s_hi - s_lo:.3g} oscillation panels needed (cap {MAX_PANELS})")
    cdef long n = <long>ceil(s_hi - s_lo)
    cdef double ds = (s_hi - s_lo) / n
    cdef double left = lo, right, target, step
    cdef double re = 0.0, im = 0.0
    cdef long j
    cdef int it, status = 0
    P.a = a; P.mu = mu; P.lam = lam; P.beta = beta; P.k = k
    P.log_peak = a * lam + a * a / (4.0 * mu)
    P.tol = abs_tol
    P.span = hi - lo
    P.max_sub = max_sub
    P.used = 0
    with nogil:
        for j in range(1, n + 1):
            if j == n:
                right = hi
            else:
                target = s_lo + j * ds
                # s is convex: one Newton step from the left edge lands right of the root
                right = left + (target - s_of(left, c, ab, ak)) / ds_of(left, c, ab, ak)
                if right > hi:
                    right = hi
                for it in range(200):
                    step = (s_of(right, c, ab, ak) - target) / ds_of(right, c, ab, ak)
                    right -= step
                    if fabs(step) < 1e-13:
                        break
            if panel(&P, left, right, &re, &im) != 0:
                status = -1
                break
            left = right
    if status != 0:
        raise NonConvergence(f"subdivision budget {max_sub} exhausted")
    return complex(re, im), P.log_peak
