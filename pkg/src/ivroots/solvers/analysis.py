"""Non-rigorous companions: the point Kung-Traub iteration and empirical
convergence orders of width sequences."""

import math

from ..expr import eval_float


def point_kungtraub(f, fprime, x0: float, n_steps: int):
    """Floating-point Kung-Traub iterates ``[x0, x1, ...]``.

    The list stops early when f(x_k) is exactly zero (later iterates would
    repeat x_k) or when a denominator vanishes or overflows.
    """
    xs = [float(x0)]
    x = xs[0]
    try:
        for _ in range(n_steps):
            fx = eval_float(f, x)
            if fx == 0.0:
                break
            newton = fx / eval_float(fprime, x)
            y = x - newton
            fy = eval_float(f, y)
            if fy == 0.0:
                x = y
            else:
                z = y - fx * fy / (fx - fy) ** 2 * newton
                fz = eval_float(f, z)
                if fz == 0.0:
                    x = z
                else:
                    num = fx * fy * fz * (fx * fx + fy * (fy - fz))
                    den = (fx - fy) ** 2 * (fx - fz) ** 2 * (fy - fz)
                    x = z - num / den * newton
            if not math.isfinite(x):
                break
            xs.append(x)
    except (ZeroDivisionError, OverflowError, ValueError):
        pass
    return xs


def empirical_orders(widths, saturation: float = 0.0):
    """ln w(k+1) / ln w(k) over consecutive admissible widths.

    A width is admissible when ``saturation < w < 1``; pass e.g.
    ``10 * math.ulp(root)`` to drop the machine-precision tail.
    """
    ok = [saturation < w < 1.0 for w in widths]
    return [math.log(widths[i + 1]) / math.log(widths[i])
            for i in range(len(widths) - 1) if ok[i] and ok[i + 1]]
