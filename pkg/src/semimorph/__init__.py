"""Mathematical morphology as semiring convolution.

Dilation is convolution over a semiring, erosion is its residual (right
adjoint).  Swapping the semiring switches between binary, gray-scale,
fuzzy and counting variants without changing the operators.
"""

from .algebra import (
    SEMIRING_NAMES,
    SemiringSpec,
    make_semiring,
    sr_add,
    sr_leq,
    sr_mul,
    sr_residual,
)
from .errors import *  # noqa: F401,F403
from .morph import LawReport, MorphResult, adjunction_holds, closing, dilate, erode, opening
from .simage import (
    BinaryPointSet,
    Mode,
    SImage,
    complement,
    from_point_set,
    image_leq,
    kronecker,
    make_image,
    pointwise_join,
    pointwise_meet,
    reflect,
    to_point_set,
    translate,
)

__version__ = "0.1.0"
