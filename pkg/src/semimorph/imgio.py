"""ASCII Netpbm (P1/P2) and JSON matrix documents.

PBM pixels equal to 1 ("black") load as the Boolean semiring's 1, i.e.
foreground.  PGM loads as max-plus with values 0..maxval; pass
``semiring="minmax"`` to read gray levels as k/255 instead.

JSON documents look like::

    {"semiring": "maxplus", "rows": 1, "cols": 2, "origin": [0, 0],
     "data": [["-inf", "3"]]}
"""

import json
import re

import numpy as np

from .algebra import LEVELS, make_semiring
from .errors import (
    CarrierMismatch,
    ParseError,
    TruncatedImage,
    UnsupportedFormat,
    ValueOutOfRange,
)
from .simage import SImage

__all__ = [
    "read_netpbm",
    "write_netpbm",
    "read_matrix_json",
    "write_matrix_json",
    "matrix_document",
    "image_from_document",
    "load_image",
    "save_image",
]

_COMMENT = re.compile(rb"#[^\r\n]*")


def _tokens(body):
    return _COMMENT.sub(b" ", body).split()


def read_netpbm(data, semiring=None):
    """Parse an ASCII PBM (P1) or PGM (P2) image from bytes or text."""
    if isinstance(data, str):
        data = data.encode("ascii")
    data = bytes(data)
    magic = data[:2]
    if magic not in (b"P1", b"P2") or (len(data) > 2 and not data[2:3].isspace() and data[2:3] != b"#"):
        raise UnsupportedFormat(f"expected ASCII PBM (P1) or PGM (P2), got magic {data[:2]!r}")
    tokens = _tokens(data[2:])
    header = 2 if magic == b"P1" else 3
    if len(tokens) < header:
        raise TruncatedImage("incomplete Netpbm header")
    try:
        width, height = int(tokens[0]), int(tokens[1])
        maxval = 1 if magic == b"P1" else int(tokens[2])
    except ValueError:
        raise UnsupportedFormat("non-numeric Netpbm header") from None
    if width < 1 or height < 1:
        raise UnsupportedFormat(f"bad Netpbm dimensions {width}x{height}")
    if magic == b"P2" and not 1 <= maxval <= LEVELS:
        raise UnsupportedFormat(f"PGM maxval {maxval} not in 1..255")
    pixels = tokens[header:]
    if magic == b"P1":
        # P1 allows pixels without separating whitespace
        pixels = [bytes([ch]) for tok in pixels for ch in tok]
    if len(pixels) != width * height:
        raise TruncatedImage(f"expected {width * height} pixels, found {len(pixels)}")
    try:
        values = np.array([int(p) for p in pixels], dtype=np.int64).reshape(height, width)
    except ValueError:
        raise UnsupportedFormat("non-numeric pixel value") from None
    over = np.argwhere((values > maxval) | (values < 0))
    if over.size:
        r, c = over[0]
        raise ValueOutOfRange(f"pixel ({r}, {c}) = {values[r, c]} exceeds maxval {maxval}")

    if magic == b"P1":
        s = make_semiring(semiring or "boolean")
        if s.name != "boolean":
            raise CarrierMismatch(f"PBM images are boolean, not {s.name!r}")
        return SImage(values.astype(np.uint8), s)
    s = make_semiring(semiring or "maxplus")
    if s.name == "maxplus":
        return SImage(values, s)
    if s.name == "minmax":
        if maxval != LEVELS:
            raise UnsupportedFormat("min-max reading needs PGM maxval 255")
        return SImage(values.astype(np.uint8), s)
    raise CarrierMismatch(f"PGM images load as maxplus or minmax, not {s.name!r}")


def write_netpbm(img):
    """Canonical ASCII PBM/PGM bytes for a boolean, max-plus or min-max image."""
    name = img.semiring.name
    rows = img.data
    if name == "boolean":
        head = f"P1\n{img.cols} {img.rows}\n"
    elif name in ("maxplus", "minmax"):
        if name == "maxplus":
            bad = np.argwhere((rows < 0) | (rows > LEVELS))
            if bad.size:
                r, c = bad[0]
                value = img.semiring.format(img[r, c])
                raise ValueOutOfRange(f"pixel ({r}, {c}) = {value} is outside 0..255")
        head = f"P2\n{img.cols} {img.rows}\n{LEVELS}\n"
    else:
        raise UnsupportedFormat(f"no Netpbm encoding for semiring {name!r}")
    body = "".join(" ".join(str(int(v)) for v in row) + "\n" for row in rows)
    return (head + body).encode("ascii")


def matrix_document(img):
    """Plain-dict MatrixDocument for ``img``."""
    fmt = img.semiring.format
    return {
        "semiring": img.semiring.name,
        "rows": img.rows,
        "cols": img.cols,
        "origin": list(img.origin),
        "data": [[fmt(v) for v in row] for row in img.values()],
    }


def image_from_document(doc):
    if not isinstance(doc, dict):
        raise ParseError("matrix document must be a JSON object")
    missing = [k for k in ("semiring", "rows", "cols", "data") if k not in doc]
    if missing:
        raise ParseError(f"matrix document lacks {', '.join(missing)}")
    s = make_semiring(doc["semiring"])
    rows, cols = doc["rows"], doc["cols"]
    data = doc["data"]
    if not isinstance(data, list) or len(data) != rows:
        raise ParseError(f"declared {rows} rows, data has {len(data) if isinstance(data, list) else 'no'} rows")
    raw = np.empty((rows, cols), dtype=s.dtype) if rows > 0 and cols > 0 else None
    if raw is None:
        raise ParseError(f"bad dimensions {rows}x{cols}")
    for i, row in enumerate(data):
        if not isinstance(row, list) or len(row) != cols:
            raise ParseError(f"declared {cols} cols, row {i} differs", i, 0)
        for j, token in enumerate(row):
            try:
                raw[i, j] = s.encode(s.parse(token))
            except ParseError as exc:
                raise ParseError(str(exc), i, j) from None
    origin = doc.get("origin", [0, 0])
    if not (isinstance(origin, list) and len(origin) == 2):
        raise ParseError("origin must be a [row, col] pair")
    return SImage(raw, s, tuple(origin))


def read_matrix_json(text):
    """Parse a MatrixDocument; min-max quantization emits QuantizationNote."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    return image_from_document(doc)


def write_matrix_json(img):
    return json.dumps(matrix_document(img), indent=1) + "\n"


def _kind(path):
    suffix = str(path).rsplit(".", 1)[-1].lower()
    if suffix in ("pbm", "pgm", "pnm"):
        return "netpbm"
    if suffix == "json":
        return "json"
    raise UnsupportedFormat(f"unknown image file type for {path!r} (use .pbm, .pgm or .json)")


def load_image(path, semiring=None):
    """Read ``path``; a JSON document's declared semiring must match ``semiring``."""
    if _kind(path) == "netpbm":
        with open(path, "rb") as fh:
            return read_netpbm(fh.read(), semiring)
    with open(path, encoding="utf-8") as fh:
        img = read_matrix_json(fh.read())
    if semiring is not None and img.semiring.name != make_semiring(semiring).name:
        raise CarrierMismatch(
            f"{path} declares semiring {img.semiring.name!r} but {make_semiring(semiring).name!r} was requested"
        )
    return img


def save_image(img, path):
    if _kind(path) == "netpbm":
        with open(path, "wb") as fh:
            fh.write(write_netpbm(img))
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(write_matrix_json(img))
