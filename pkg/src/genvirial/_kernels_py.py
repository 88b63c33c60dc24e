"""Pure-Python Numerov sweep, used when the compiled extension is unavailable."""

_BIG = 1e150
_TINY = 1e-150


def numerov_sweep(g, y, start, stop, w_prev):
    """Advance y'' = Q y with Numerov's method from ``start`` toward ``stop``.

    ``g`` holds h^2 Q / 12 on the grid, ``y[start]`` must be set and
    ``w_prev`` is (1 - g) y at the node before ``start`` in the sweep
    direction.  Fills ``y`` in place and returns the number of sign changes
    encountered.  Values are rescaled when they exceed 1e150.

    The recurrence is run in summed form: the first difference
    d = w_i - w_(i-1) and w itself are carried, so rounding does not
    re-enter through w = (1 - g) y at every step.  Over 1e5 oscillatory
    steps this keeps the phase error near the rounding floor.
    """
    step = 1 if stop >= start else -1
    nodes = 0
    last = y[start]
    i = start
    y_i = y[i]
    w = (1.0 - g[i]) * y_i
    d = w - w_prev
    while i != stop:
        d += 12.0 * g[i] * y_i
        w += d
        nxt = i + step
        y_i = w / (1.0 - g[nxt])
        y[nxt] = y_i
        if y_i != 0.0:
            if last != 0.0 and (y_i > 0.0) != (last > 0.0):
                nodes += 1
            last = y_i
        i = nxt
        if abs(y_i) > _BIG:
            lo, hi = (start, i + 1) if step > 0 else (i, start + 1)
            y[lo:hi] *= _TINY
            w *= _TINY
            d *= _TINY
            last *= _TINY
            y_i = y[i]
    return nodes
