"""Semiring-valued images and the set/geometric primitives defined on them.

Coordinates are ``(row, col)`` pairs with rows growing downward.  An image
stores an explicit origin: the matrix index that sits at coordinate
``(0, 0)``.  Matrix index ``(i, j)`` therefore has coordinate
``(i - origin[0], j - origin[1])``.
"""

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .algebra import SemiringSpec, make_semiring
from .errors import (
    CarrierMismatch,
    EmptyImage,
    OrderUndefined,
    OutOfBounds,
    ShapeMismatch,
    UnsupportedSemiring,
)

__all__ = [
    "SImage",
    "BinaryPointSet",
    "Mode",
    "make_image",
    "reflect",
    "translate",
    "pointwise_join",
    "pointwise_meet",
    "complement",
    "kronecker",
    "image_leq",
    "to_point_set",
    "from_point_set",
]


class Mode(Enum):
    """Output domain of a sliding-window operator."""

    FULL = "full"
    SAME = "same"
    VALID = "valid"

    @classmethod
    def coerce(cls, mode):
        if isinstance(mode, cls):
            return mode
        try:
            return cls(str(mode).lower())
        except ValueError:
            raise ValueError(f"mode must be one of full, same, valid; got {mode!r}") from None


@dataclass(frozen=True, eq=False)
class SImage:
    """Immutable rectangular matrix over a semiring, with an origin.

    ``data`` holds the semiring's raw encoding (see :mod:`semimorph.algebra`);
    build images from ordinary values with :meth:`from_values`.
    """

    data: np.ndarray
    semiring: SemiringSpec
    origin: tuple = (0, 0)

    def __post_init__(self):
        semiring = make_semiring(self.semiring)
        arr = np.asarray(self.data)
        if arr.ndim != 2:
            raise ShapeMismatch(f"images are 2-D, got {arr.ndim} dimensions")
        if arr.shape[0] < 1 or arr.shape[1] < 1:
            raise EmptyImage(f"image dimensions must be positive, got {arr.shape}")
        arr = semiring.carrier.coerce_raw(arr).copy()
        arr.setflags(write=False)
        origin = (int(self.origin[0]), int(self.origin[1]))
        if not (0 <= origin[0] < arr.shape[0] and 0 <= origin[1] < arr.shape[1]):
            raise OutOfBounds(f"origin {origin} outside a {arr.shape[0]}x{arr.shape[1]} image")
        object.__setattr__(self, "semiring", semiring)
        object.__setattr__(self, "data", arr)
        object.__setattr__(self, "origin", origin)

    @classmethod
    def from_values(cls, values, semiring, origin=(0, 0)):
        """Build an image from a nested sequence of SValues."""
        semiring = make_semiring(semiring)
        rows = [list(row) for row in values]
        if not rows or not rows[0]:
            raise EmptyImage("image dimensions must be positive")
        if any(len(row) != len(rows[0]) for row in rows):
            raise ShapeMismatch("ragged rows")
        raw = np.empty((len(rows), len(rows[0])), dtype=semiring.dtype)
        for i, row in enumerate(rows):
            for j, v in enumerate(row):
                raw[i, j] = semiring.encode(v)
        return cls(raw, semiring, origin)

    @property
    def rows(self):
        return self.data.shape[0]

    @property
    def cols(self):
        return self.data.shape[1]

    @property
    def shape(self):
        return self.data.shape

    def __getitem__(self, index):
        return self.semiring.decode(self.data[index])

    def values(self):
        """Nested list of SValues, row-major."""
        decode = self.semiring.decode
        return [[decode(v) for v in row] for row in self.data]

    def at(self, coord):
        """Value at a coordinate relative to the origin."""
        i, j = coord[0] + self.origin[0], coord[1] + self.origin[1]
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise OutOfBounds(f"coordinate {coord} outside the image")
        return self[i, j]

    def with_origin(self, origin):
        return SImage(self.data, self.semiring, origin)

    def __eq__(self, other):
        if not isinstance(other, SImage):
            return NotImplemented
        return (
            self.semiring == other.semiring
            and self.origin == other.origin
            and self.shape == other.shape
            and bool(np.all(self.data == other.data))
        )

    __hash__ = None

    def __repr__(self):
        body = "; ".join(" ".join(self.semiring.format(v) for v in row) for row in self.values())
        return f"SImage({self.semiring.name}, {self.rows}x{self.cols}, origin={self.origin}, [{body}])"


class BinaryPointSet(frozenset):
    """Finite set of integer ``(row, col)`` coordinates."""

    def __new__(cls, points=()):
        return super().__new__(cls, ((int(r), int(c)) for r, c in points))

    def __repr__(self):
        return f"BinaryPointSet({sorted(self)})"

    def bbox(self):
        """``(rmin, cmin, rmax, cmax)``; raises ValueError when empty."""
        if not self:
            raise ValueError("empty point set has no bounding box")
        rs = [p[0] for p in self]
        cs = [p[1] for p in self]
        return min(rs), min(cs), max(rs), max(cs)


def _same_semiring(*images):
    first = images[0].semiring
    for img in images[1:]:
        if img.semiring != first:
            raise CarrierMismatch(
                f"semiring mismatch: {first.name!r} vs {img.semiring.name!r}"
            )
    return first


def _same_shape(a, b):
    if a.shape != b.shape:
        raise ShapeMismatch(f"shape mismatch: {a.shape} vs {b.shape}")


def make_image(rows, cols, fill, s):
    """Constant ``rows x cols`` image with origin (0, 0)."""
    s = make_semiring(s)
    if rows < 1 or cols < 1:
        raise EmptyImage(f"image dimensions must be positive, got {rows}x{cols}")
    return SImage(s.full((rows, cols), fill), s)


def reflect(img):
    """Point reflection through the origin: value at x moves to -x."""
    return SImage(
        img.data[::-1, ::-1],
        img.semiring,
        (img.rows - 1 - img.origin[0], img.cols - 1 - img.origin[1]),
    )


def translate(points, h):
    dr, dc = h
    return BinaryPointSet((r + dr, c + dc) for r, c in points)


def pointwise_join(f, g):
    s = _same_semiring(f, g)
    _same_shape(f, g)
    if not s.add_idempotent:
        raise OrderUndefined(f"semiring {s.name!r} has no join")
    return SImage(s.add(f.data, g.data), s, f.origin)


def pointwise_meet(f, g):
    s = _same_semiring(f, g)
    _same_shape(f, g)
    if s.meet is None:
        raise OrderUndefined(f"semiring {s.name!r} has no meet")
    return SImage(s.meet(f.data, g.data), s, f.origin)


def complement(img):
    if img.semiring.name != "boolean":
        raise UnsupportedSemiring(f"complement needs the boolean semiring, not {img.semiring.name!r}")
    return SImage(1 - img.data, img.semiring, img.origin)


def kronecker(r, s_img):
    """Block matrix whose block (i, j) is ``r[i, j] * s_img``."""
    s = _same_semiring(r, s_img)
    m, n = r.shape
    p, q = s_img.shape
    blocks = s.mul(r.data[:, None, :, None], s_img.data[None, :, None, :])
    return SImage(blocks.reshape(m * p, n * q), s)


def image_leq(f, e):
    """Pointwise derived order, index by index."""
    s = _same_semiring(f, e)
    _same_shape(f, e)
    return bool(np.all(s.leq(f.data, e.data)))


def _require_boolean(img_or_semiring):
    s = getattr(img_or_semiring, "semiring", img_or_semiring)
    if s.name != "boolean":
        raise UnsupportedSemiring(f"point sets need the boolean semiring, not {s.name!r}")


def to_point_set(img, origin=None):
    """Coordinates of the 1-pixels, relative to ``origin`` (default: the image's)."""
    _require_boolean(img)
    orr, orc = img.origin if origin is None else origin
    rows, cols = np.nonzero(img.data)
    return BinaryPointSet((int(i) - orr, int(j) - orc) for i, j in zip(rows, cols))


def from_point_set(points, bounds, origin=(0, 0)):
    """Boolean ``bounds = (rows, cols)`` image with 1s at the given coordinates."""
    rows, cols = bounds
    raw = np.zeros((rows, cols), dtype=np.uint8) if rows > 0 and cols > 0 else None
    if raw is None:
        raise EmptyImage(f"image dimensions must be positive, got {rows}x{cols}")
    for r, c in points:
        i, j = r + origin[0], c + origin[1]
        if not (0 <= i < rows and 0 <= j < cols):
            raise OutOfBounds(f"point {(r, c)} outside a {rows}x{cols} image")
        raw[i, j] = 1
    return SImage(raw, "boolean", origin)
