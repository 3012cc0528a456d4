"""Newton iteration safeguarded by a sign-change bracket."""

from __future__ import annotations

import math
from typing import Callable, NamedTuple


class Root(NamedTuple):
    x: float
    fx: float
    iterations: int


def bracketed_newton(
    fdf: Callable[[float], tuple[float, float]],
    lo: float,
    hi: float,
    f_lo: float,
    f_hi: float,
    ftol: float = 1e-13,
    xtol: float = 1e-15,
    maxiter: int = 200,
) -> Root:
    """Find a root of f inside [lo, hi] given f(lo), f(hi) of opposite sign.

    ``fdf(x)`` returns (f(x), f'(x)); the derivative may be infinite.  A
    Newton step is taken whenever it lands strictly inside the current
    bracket and shrinks |f| fast enough, otherwise the bracket is bisected.
    Stops when |f| <= ftol or the bracket is narrower than xtol * (1 + |x|).
    """
    if f_lo == 0.0:
        return Root(lo, 0.0, 0)
    if f_hi == 0.0:
        return Root(hi, 0.0, 0)
    if (f_lo > 0) == (f_hi > 0):
        raise ArithmeticError("root is not bracketed")
    # orient so that f(neg) < 0 < f(pos)
    neg, pos = (lo, hi) if f_lo < 0 else (hi, lo)

    x = 0.5 * (lo + hi)
    best = (math.inf, x)
    prev_width = math.inf
    for it in range(1, maxiter + 1):
        fx, dfx = fdf(x)
        if abs(fx) < best[0]:
            best = (abs(fx), x)
        if abs(fx) <= ftol:
            return Root(x, fx, it)
        if fx < 0:
            neg = x
        else:
            pos = x
        a, b = min(neg, pos), max(neg, pos)
        width = b - a
        if width <= xtol * (1.0 + abs(x)):
            return Root(best[1], fdf(best[1])[0], it)

        x_new = x - fx / dfx if math.isfinite(dfx) and dfx != 0.0 else math.nan
        # Newton only while it lands inside the bracket and the bracket keeps halving
        if not (a < x_new < b) or width > 0.5 * prev_width:
            x_new = 0.5 * (a + b)
            prev_width = width
        if x_new == x:
            return Root(x, fx, it)
        x = x_new
    return Root(best[1], fdf(best[1])[0], maxiter)
