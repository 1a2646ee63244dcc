"""
Binary morphology over the Boolean semiring
===========================================

Dilation is semiring convolution; with (or, and) it is the Minkowski sum.
"""

from semimorph import Mode, SImage, complement, dilate, erode, opening, reflect, to_point_set
from semimorph.oracle import set_dilate

# A 3x3 source image and structuring element, origin at the top-left
F = SImage.from_values([[0, 1, 0], [0, 0, 1], [1, 1, 0]], "boolean")
G = SImage.from_values([[0, 1, 0], [1, 0, 0], [0, 0, 0]], "boolean")

FG = dilate(F, G, Mode.FULL).image
print("F dilated by G (Full, 5x5):")
for row in FG.values():
    print("  ", row)

# The same thing as a set of coordinates
print("Minkowski sum agrees:", to_point_set(FG) == set_dilate(to_point_set(F), to_point_set(G)))

# Erosion is the residual: the largest image whose dilation stays under FG
E = erode(FG, G, Mode.VALID).image
print("erode(F*G, G):", E.values())

# Opening keeps the union of the translates of G that fit inside F
print("opening(F, G):", opening(F, G).values())

# Duality: eroding the foreground is dilating the background by the
# reflected element.  Pad F so the border does not interfere.
padded = SImage.from_values(
    [[0] * 7] * 2 + [[0, 0] + row + [0, 0] for row in F.values()] + [[0] * 7] * 2, "boolean"
)
G1 = G.with_origin((1, 1))
lhs = complement(erode(padded, G1, Mode.SAME).image)
rhs = dilate(complement(padded), reflect(G1), Mode.SAME).image
print("duality holds in the interior:", lhs.data[2:-2, 2:-2].tolist() == rhs.data[2:-2, 2:-2].tolist())
