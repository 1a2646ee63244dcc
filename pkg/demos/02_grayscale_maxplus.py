"""
Gray-scale morphology over max-plus
===================================

The same convolution, with (max, +): flat structuring elements use the
multiplicative unit 0 on their support and -inf elsewhere.
"""

import math

import numpy as np

from semimorph import Mode, SImage, closing, dilate, erode, make_semiring, opening, to_point_set
from semimorph.oracle import gray_dilate_flat

mp = make_semiring("maxplus")
rng = np.random.default_rng(0)
f = SImage(rng.integers(0, 256, (6, 8)), mp)

# A flat 3x3 cross centred on its origin
cross = SImage.from_values(
    [[-math.inf, 0, -math.inf], [0, 0, 0], [-math.inf, 0, -math.inf]], mp, origin=(1, 1)
)
support = to_point_set(SImage((cross.data == 0).astype(np.uint8), "boolean", cross.origin))

dil = dilate(f, cross, Mode.SAME).image
print("flat dilation equals max over the support:", dil == gray_dilate_flat(f, support))
print(np.array(dil.values()))

ero = erode(f, cross, Mode.SAME).image
print("erosion (border pixels see -inf outside the image):")
print(np.array(ero.values(), dtype=float))

# Non-flat element: a small ramp adds to the values it picks up
ramp = SImage.from_values([[0, 10, 20]], mp)
print("non-flat dilation, first row:", dilate(f, ramp).image.values()[0])

op, cl = opening(f, cross), closing(f, cross)
print("opening <= f <= closing:", bool(np.all(op.data <= f.data) and np.all(f.data <= cl.data)))
