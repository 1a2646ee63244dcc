"""
Fuzzy and counting variants
===========================

Swapping the semiring changes the operator and leaves the code alone.
"""

from fractions import Fraction

import numpy as np

from semimorph import NoResidual, SImage, dilate, erode, make_semiring

# min-max: fuzzy dilation, max of pairwise minima; values are k/255
mm = make_semiring("minmax")
f = SImage(np.array([[0, 128, 255], [64, 255, 0]]), mm)
g = SImage(np.array([[255, 128]]), mm)
fuzzy = dilate(f, g).image
print("fuzzy dilation:", [[str(v) for v in row] for row in fuzzy.values()])
print("fuzzy erosion (Goedel residual):", [[str(v) for v in row] for row in erode(fuzzy, g).image.values()])

# counting: (+, x) on naturals is ordinary 2-D convolution
cs = make_semiring("counting")
a = SImage.from_values([[1, 2], [3, 4]], cs)
k = SImage.from_values([[1, 1], [1, 1]], cs)
print("counting dilation (box sum):", dilate(a, k).image.values())

# No order, no residual, no erosion
try:
    erode(a, k)
except NoResidual as exc:
    print("erode on counting:", exc)

print("0.5 quantizes to", mm.parse("128/255"), "=", float(Fraction(128, 255)))
