"""Pure-Python secular-equation root kernel.

Twin of the compiled module ``roipca._secular``; the package selects one of
the two at import time (see ``roipca._kernels``). Both expose the same
``solve_roots`` signature and implement the same algorithm: safeguarded
Newton/bisection per pole interval, iterating in offset coordinates relative
to the closest pole so that pole-to-root separations keep full relative
precision even when they underflow the gaps between poles.

The function being solved is

    w(t) = 1 + rho * ( sum_l weights[l] / (poles[l] - t)
                       - c2 / (poles[tail_index] - t)^2 )

with the squared term present only when ``tail_index >= 0`` and ``c2 != 0``.
"""

from __future__ import annotations

import math

import numpy as np

_EPS = 2.220446049250313e-16
_TINY = 1e-300

BACKEND_NAME = "python"


def _sign(x):
    return 1.0 if x > 0.0 else -1.0


def _end_sign(idx, from_above, rho, tail_index, use_c2, c2):
    # Sign of w infinitesimally inside a bracket whose endpoint is pole idx.
    # A double pole (squared tail term) forces the same sign on both sides.
    if use_c2 and idx == tail_index:
        return -_sign(rho * c2)
    return -_sign(rho) if from_above else _sign(rho)


def _eval_t(t, P, W, K, rho, tail_index, use_c2, c2):
    """Plain t-space evaluation; returns (f, finite)."""
    s = 0.0
    for l in range(K):
        den = P[l] - t
        if den == 0.0:
            return 0.0, False
        s += W[l] / den
    if use_c2:
        den = P[tail_index] - t
        if den == 0.0:
            return 0.0, False
        s -= c2 / (den * den)
    return 1.0 + rho * s, True


def _eval_xi(xi, delta, W, K, rho, dmu, use_c2, c2):
    """Offset-space evaluation; returns (f, fprime, finite)."""
    s = 0.0
    sp = 0.0
    for l in range(K):
        den = delta[l] - xi
        if den == 0.0:
            return 0.0, 0.0, False
        r = W[l] / den
        s += r
        sp += r / den
    if use_c2:
        den = dmu - xi
        if den == 0.0:
            return 0.0, 0.0, False
        d2 = den * den
        s -= c2 / d2
        sp -= 2.0 * c2 / (d2 * den)
    return 1.0 + rho * s, rho * sp, True


def _scan_sign_change(lo, hi, s_lo, P, W, K, rho, tail_index, use_c2, c2):
    """Search a bracket with equal end signs for an interior sign change.

    Returns (a, b) with w(a)*w(b) < 0, or None.
    """
    npts = 64
    prev_t = lo
    for i in range(1, npts + 1):
        t = lo + (hi - lo) * i / (npts + 1.0)
        f, finite = _eval_t(t, P, W, K, rho, tail_index, use_c2, c2)
        if not finite:
            continue
        if f != 0.0 and _sign(f) != s_lo:
            return prev_t, t
        prev_t = t
    return None


def _solve_one(lo0, hi0, origin, s_lo, s_hi, P, W, K, rho,
               tail_index, use_c2, c2, max_iter):
    """Root in (lo0, hi0) anchored at pole index ``origin``.

    Returns (t, xi, iterations, converged).
    """
    po = P[origin]
    delta = [P[l] - po for l in range(K)]
    dmu = P[tail_index] - po if tail_index >= 0 else 0.0
    xlo = lo0 - po
    xhi = hi0 - po
    xi = 0.5 * (xlo + xhi)
    iters = 0
    converged = False
    while iters < max_iter:
        iters += 1
        f, fp, finite = _eval_xi(xi, delta, W, K, rho, dmu, use_c2, c2)
        if not finite:
            # Rounding put xi exactly on a pole; retreat toward the middle.
            mid = 0.5 * (xlo + xhi)
            xi = mid if xi != mid else xi + 0.25 * (xhi - xlo)
            continue
        if f == 0.0:
            converged = True
            break
        if _sign(f) == s_lo:
            xlo = xi
        else:
            xhi = xi
        width = xhi - xlo
        if width <= 8.0 * _EPS * max(abs(xlo), abs(xhi)) + _TINY:
            converged = True
            xi = 0.5 * (xlo + xhi)
            break
        step_ok = False
        if fp != 0.0 and math.isfinite(fp):
            cand = xi - f / fp
            if xlo < cand < xhi:
                if abs(cand - xi) <= 2.0 * _EPS * abs(cand):
                    xi = cand
                    converged = True
                    break
                xi = cand
                step_ok = True
        if not step_ok:
            xi = 0.5 * (xlo + xhi)
    return po + xi, xi, iters, converged


def solve_roots(poles, weights, rho, tail_index, c2, n_roots, max_iter=200):
    """Compute the ``n_roots`` largest roots of the secular function.

    poles:      (K,) strictly descending pole locations.
    weights:    (K,) nonnegative weights; the tail pole carries the
                residual mass.
    rho:        nonzero update magnitude (either sign).
    tail_index: index of the tail pole in ``poles``, or -1 when absent.
    c2:         second-order tail coefficient; 0 disables the squared term.
    n_roots:    how many of the largest roots to return (<= K, and <= K-1
                when a tail pole is present).

    Returns ``(t, tau, origin, lo, hi, iters, ok)`` arrays, roots in
    descending order. ``origin`` holds the anchor pole value and ``tau`` the
    root's offset from it (``t = origin + tau`` with ``tau`` carrying full
    relative precision). ``lo``/``hi`` give the isolating pole interval and
    ``ok`` flags per-root convergence.
    """
    P = [float(x) for x in poles]
    W = [float(x) for x in weights]
    K = len(P)
    R = int(n_roots)
    rho = float(rho)
    c2 = float(c2)
    tail_index = int(tail_index)
    use_c2 = tail_index >= 0 and c2 != 0.0

    out_t = np.empty(R)
    out_tau = np.empty(R)
    out_org = np.empty(R)
    out_lo = np.empty(R)
    out_hi = np.empty(R)
    out_it = np.zeros(R, dtype=np.int64)
    out_ok = np.ones(R, dtype=bool)
    if R == 0:
        return out_t, out_tau, out_org, out_lo, out_hi, out_it, out_ok

    wsum = 0.0
    for l in range(K):
        wsum += W[l]

    if K == 1:
        t = P[0] + rho * W[0]
        slack = 16.0 * _EPS * (abs(P[0]) + abs(rho) * W[0]) + _TINY
        out_t[0] = t
        out_tau[0] = rho * W[0]
        out_org[0] = P[0]
        out_lo[0] = min(P[0], t) - (slack if rho < 0.0 else 0.0)
        out_hi[0] = max(P[0], t) + (slack if rho > 0.0 else 0.0)
        out_it[0] = 0
        return out_t, out_tau, out_org, out_lo, out_hi, out_it, out_ok

    for j in range(R):
        kind_expand = 0  # 0: interior, +1: expand above, -1: expand below
        if rho > 0.0:
            if j == 0:
                kind_expand = 1
                lo_idx = 0
                hi_idx = -1
            else:
                lo_idx = j
                hi_idx = j - 1
        else:
            if j <= K - 2:
                lo_idx = j + 1
                hi_idx = j
            else:
                kind_expand = -1
                lo_idx = -1
                hi_idx = K - 1

        retry_c2 = use_c2
        while True:  # at most twice: order-2 attempt, then order-1 fallback
            cur_c2 = c2 if retry_c2 else 0.0
            cur_use = retry_c2
            if kind_expand == 1:
                lo0 = P[0]
                slack = 64.0 * _EPS * (abs(P[0]) + rho * wsum + 1.0)
                hi0 = P[0] + rho * wsum + slack
                s_lo = _end_sign(0, True, rho, tail_index, cur_use, cur_c2)
                s_hi = 1.0
                grow = 0
                while grow < 200:
                    f, finite = _eval_t(hi0, P, W, K, rho, tail_index,
                                        cur_use, cur_c2)
                    if finite and _sign(f) == s_hi and f != 0.0:
                        break
                    hi0 = P[0] + 2.0 * (hi0 - P[0])
                    grow += 1
                origin = 0
            elif kind_expand == -1:
                hi0 = P[K - 1]
                slack = 64.0 * _EPS * (abs(P[K - 1]) + abs(rho) * wsum + 1.0)
                lo0 = P[K - 1] + rho * wsum - slack
                s_hi = _end_sign(K - 1, False, rho, tail_index, cur_use, cur_c2)
                s_lo = 1.0
                grow = 0
                while grow < 200:
                    f, finite = _eval_t(lo0, P, W, K, rho, tail_index,
                                        cur_use, cur_c2)
                    if finite and _sign(f) == s_lo and f != 0.0:
                        break
                    lo0 = P[K - 1] + 2.0 * (lo0 - P[K - 1])
                    grow += 1
                origin = K - 1
            else:
                lo0 = P[lo_idx]
                hi0 = P[hi_idx]
                s_lo = _end_sign(lo_idx, True, rho, tail_index, cur_use, cur_c2)
                s_hi = _end_sign(hi_idx, False, rho, tail_index, cur_use, cur_c2)
                origin = -1  # fixed after locating the root's half

            blo, bhi = lo0, hi0
            if s_lo == s_hi:
                found = _scan_sign_change(lo0, hi0, s_lo, P, W, K, rho,
                                          tail_index, cur_use, cur_c2)
                if found is None:
                    if retry_c2:
                        retry_c2 = False
                        continue  # drop the squared term and retry
                    out_ok[j] = False
                    out_t[j] = 0.5 * (lo0 + hi0)
                    out_tau[j] = math.nan
                    out_org[j] = math.nan
                    out_lo[j] = lo0
                    out_hi[j] = hi0
                    break
                # w(blo) keeps the shared end sign; w(bhi) is past the
                # first interior sign change
                blo, bhi = found
                s_hi = -s_lo

            if origin < 0:
                mid = 0.5 * (blo + bhi)
                f, finite = _eval_t(mid, P, W, K, rho, tail_index,
                                    cur_use, cur_c2)
                if finite and f != 0.0 and _sign(f) == s_hi:
                    bhi = mid
                    origin = lo_idx
                elif finite and f != 0.0:
                    blo = mid
                    origin = hi_idx
                else:
                    origin = lo_idx if abs(mid - P[lo_idx]) <= abs(mid - P[hi_idx]) \
                        else hi_idx

            t, xi, iters, okflag = _solve_one(
                blo, bhi, origin, s_lo, s_hi, P, W, K, rho,
                tail_index, cur_use, cur_c2, max_iter)
            out_t[j] = t
            out_tau[j] = xi
            out_org[j] = P[origin]
            out_lo[j] = lo0
            out_hi[j] = hi0
            out_it[j] = iters
            out_ok[j] = okflag
            break

    return out_t, out_tau, out_org, out_lo, out_hi, out_it, out_ok
