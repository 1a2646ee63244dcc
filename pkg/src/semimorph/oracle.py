"""Reference implementations of the classical definitions.

Deliberately naive: plain Python sets and loops, no numpy, no shared code
with :mod:`semimorph.morph`.  These exist to be compared against.
"""

import math

from .errors import EmptyStructuringElement
from .simage import BinaryPointSet, SImage, translate

__all__ = [
    "set_dilate",
    "set_erode",
    "set_erode_pointwise",
    "set_reflect",
    "gray_dilate_flat",
    "gray_erode_flat",
    "convolve_nested",
]


def set_dilate(a, b):
    """Minkowski sum ``{x + y : x in a, y in b}``."""
    return BinaryPointSet((x[0] + y[0], x[1] + y[1]) for x in a for y in b)


def set_erode(a, b):
    """``{h : b translated by h lies inside a}``.

    ``h`` is searched over the box ``bbox(a) - bbox(b)``, outside of which no
    translate of a non-empty ``b`` can fit.
    """
    if not b:
        raise EmptyStructuringElement("erosion by an empty structuring element")
    if not a:
        return BinaryPointSet()
    ar0, ac0, ar1, ac1 = BinaryPointSet(a).bbox()
    br0, bc0, br1, bc1 = BinaryPointSet(b).bbox()
    a = set(a)
    found = []
    for hr in range(ar0 - br0, ar1 - br1 + 1):
        for hc in range(ac0 - bc0, ac1 - bc1 + 1):
            if all(p in a for p in translate(b, (hr, hc))):
                found.append((hr, hc))
    return BinaryPointSet(found)


def set_erode_pointwise(a, b):
    """``{x : for every y in b some z in a has x = z - y}``."""
    if not b:
        raise EmptyStructuringElement("erosion by an empty structuring element")
    result = None
    for y in b:
        shifted = {(z[0] - y[0], z[1] - y[1]) for z in a}
        result = shifted if result is None else result & shifted
    return BinaryPointSet(result)


def set_reflect(b):
    return BinaryPointSet((-r, -c) for r, c in b)


def _gray_values(f):
    rows = f.values()
    for row in rows:
        for v in row:
            if isinstance(v, float) and math.isinf(v):
                raise ValueError("flat gray-scale oracles need finite image values")
    return rows


def gray_dilate_flat(f, b):
    """``out(x) = max over s in b of f(x - s)``; off-image f is -inf.

    ``x`` ranges over f's own pixels, in coordinates relative to f's origin.
    """
    if not b:
        raise EmptyStructuringElement("dilation by an empty structuring element")
    vals = _gray_values(f)
    orr, orc = f.origin
    out = []
    for i in range(f.rows):
        row = []
        for j in range(f.cols):
            x, y = i - orr, j - orc
            best = -math.inf
            for s, t in b:
                u, v = x - s + orr, y - t + orc
                if 0 <= u < f.rows and 0 <= v < f.cols:
                    best = max(best, vals[u][v])
            row.append(best)
        out.append(row)
    return SImage.from_values(out, "maxplus", f.origin)


def gray_erode_flat(f, b):
    """``out(x) = min over s in b of f(x + s)``, skipping off-image terms.

    A pixel whose every term falls off the image gets +inf.
    """
    if not b:
        raise EmptyStructuringElement("erosion by an empty structuring element")
    vals = _gray_values(f)
    orr, orc = f.origin
    out = []
    for i in range(f.rows):
        row = []
        for j in range(f.cols):
            x, y = i - orr, j - orc
            best = math.inf
            for s, t in b:
                u, v = x + s + orr, y + t + orc
                if 0 <= u < f.rows and 0 <= v < f.cols:
                    best = min(best, vals[u][v])
            row.append(best)
        out.append(row)
    return SImage.from_values(out, "maxplus", f.origin)


def convolve_nested(f, g):
    """Full 2-D integer convolution of nested lists, by four loops."""
    m, n = len(f), len(f[0])
    p, q = len(g), len(g[0])
    out = [[0] * (n + q - 1) for _ in range(m + p - 1)]
    for i in range(m):
        for j in range(n):
            for k in range(p):
                for l in range(q):
                    out[i + k][j + l] += f[i][j] * g[k][l]
    return out
