"""Independent oracle for the Jackson-type constants.

H_0..H_3 are evaluated from closed forms in Si/Ci (not by recursive tail
integration), and |H_K| is integrated between its sign changes with
Gauss-Legendre panels.  A_beta uses mpmath quadrature over whole periods
plus an explicit Hurwitz-zeta tail.  Prints the values frozen into
the Jackson unit tests.
"""
import numpy as np
from scipy.special import sici
from scipy.optimize import brentq
import mpmath as mp


def si(x):
    s, _ = sici(x)
    return s - np.pi / 2


def ci(x):
    return sici(x)[1]


def phi(u):
    return -u * ci(u) - u * u * si(u) / 2 + np.sin(u) / 2 - u * np.cos(u) / 2


def _H3_precise(t):
    mp.mp.dps = 40
    msi = lambda x: mp.si(x) - mp.pi / 2
    mphi = lambda u: -u * mp.ci(u) - u * u * msi(u) / 2 + mp.sin(u) / 2 - u * mp.cos(u) / 2
    u = mp.mpf(float(t))
    return float(0.5 * (-mphi(u) + mphi(2 * u) / 2))


_H3_vec = np.vectorize(_H3_precise, otypes=[float])


def H(K, t):
    t = np.asarray(t, dtype=float)
    if K == 3 and np.any(t > 50):
        # the Si/Ci closed form cancels catastrophically for large t in doubles
        out = np.empty_like(t)
        big = t > 50
        out[big] = _H3_vec(t[big])
        out[~big] = H(K, t[~big])
        return out if out.ndim else float(out)
    if K == 0:
        return np.sin(1.5 * t) * np.sin(0.5 * t) / (t * t)
    if K == 1:
        f = lambda a: np.cos(a * t) / t + a * si(a * t)
        return 0.5 * (f(1) - f(2))
    if K == 2:
        g = lambda a: -ci(a * t) - a * t * si(a * t) - np.cos(a * t)
        return 0.5 * (g(1) - g(2))
    if K == 3:
        return 0.5 * (-phi(t) + phi(2 * t) / 2)


def abs_integral(K, a, b, h=0.05, ng=20):
    xs, ws = np.polynomial.legendre.leggauss(ng)
    grid = np.arange(a, b + h / 2, h)
    vals = H(K, grid)
    pts = [a]
    for i in range(len(grid) - 1):
        if vals[i] == 0 or vals[i] * vals[i + 1] < 0:
            pts.append(brentq(lambda x: float(H(K, x)), grid[i], grid[i + 1], xtol=1e-15))
    pts.append(b)
    total = 0.0
    for lo, hi in zip(pts[:-1], pts[1:]):
        # split long monotone pieces into short panels
        n = max(1, int(np.ceil((hi - lo) / 0.5)))
        e = np.linspace(lo, hi, n + 1)
        for l, r in zip(e[:-1], e[1:]):
            x = 0.5 * (r - l) * xs + 0.5 * (r + l)
            total += 0.5 * (r - l) * np.sum(ws * np.abs(H(K, x)))
    return total


def C(K, X=2 * np.pi * 1000):
    lead = {
        0: lambda x: 0.5 * (np.cos(x) - np.cos(2 * x)),
        1: lambda x: 0.5 * (-np.sin(x) + np.sin(2 * x) / 2),
        2: lambda x: 0.5 * (-np.cos(x) + np.cos(2 * x) / 4),
        3: lambda x: 0.5 * (np.sin(x) - np.sin(2 * x) / 8),
    }[K]
    s = np.linspace(0, 2 * np.pi, 200001)
    mean_abs = np.trapezoid(np.abs(lead(s)), s) / (2 * np.pi)
    body = abs_integral(K, 1e-9, X)
    return 4 / np.pi * (body + mean_abs / X)


def A_beta(beta):
    mp.mp.dps = 30
    b = mp.mpf(beta)
    P = lambda t: abs(mp.cos(t) - mp.cos(2 * t))
    kinks = [0, 2 * mp.pi / 3, 4 * mp.pi / 3, 2 * mp.pi]
    J = 50
    body = mp.mpf(0)
    for j in range(J):
        for lo, hi in zip(kinks[:-1], kinks[1:]):
            body += mp.quad(lambda t: P(t) * t ** (b - 2), [2 * mp.pi * j + lo, 2 * mp.pi * j + hi])
    # tail: sum_{j>=J} int_0^{2pi} P(s) (s + 2 pi j)^(b-2) ds, expanded in s/(2 pi j)
    tail = mp.mpf(0)
    for m in range(40):
        mu = sum(mp.quad(lambda s: P(s) * s ** m, [lo, hi]) for lo, hi in zip(kinks[:-1], kinks[1:]))
        tail += mp.binomial(b - 2, m) * (2 * mp.pi) ** (b - 2 - m) * mu * mp.zeta(2 - b + m, J)
    return float(2 ** (1 + b) / mp.pi * (body + tail))


if __name__ == "__main__":
    for K in range(4):
        print(f"C_{K} = {C(K):.12f}")
    for beta in (0.05, 0.25, 0.5, 0.75, 0.95):
        print(f"A_{beta} = {A_beta(beta):.14g}")
