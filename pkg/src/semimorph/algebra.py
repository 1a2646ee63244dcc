"""Semirings that parameterize every morphological operator.

A :class:`SemiringSpec` bundles the carrier (how values are stored and
parsed) with vectorized ``add``/``mul``/``residual`` kernels that act on the
carrier's raw numpy encoding.  Scalar values seen by users ("SValues") are
plain Python objects:

=========  ====================================  ======================
name       SValue                                raw storage
=========  ====================================  ======================
boolean    ``0`` / ``1``                          ``uint8``
maxplus    ``int`` or ``±math.inf``               ``int64`` + sentinels
minmax     ``Fraction(k, 255)``                   ``uint8`` level ``k``
counting   non-negative ``int``                   ``object`` (exact)
=========  ====================================  ======================
"""

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from numbers import Integral, Real
from typing import Callable, Optional

import numpy as np

from .errors import (
    CarrierMismatch,
    NoResidual,
    OrderUndefined,
    ParseError,
    QuantizationNote,
    UnknownSemiring,
)

__all__ = [
    "SemiringSpec",
    "make_semiring",
    "sr_add",
    "sr_mul",
    "sr_leq",
    "sr_residual",
    "SEMIRING_NAMES",
    "NEG_INF",
    "POS_INF",
]

# max-plus sentinels; finite values live strictly between them
NEG_INF = np.iinfo(np.int64).min
POS_INF = np.iinfo(np.int64).max
FINITE_MIN = NEG_INF + 1
FINITE_MAX = POS_INF - 1

LEVELS = 255


# ---------------------------------------------------------------- carriers


class Carrier:
    """Encoding of one carrier kind: scalar <-> raw, text <-> scalar."""

    kind = ""
    dtype = None

    def encode(self, value):
        raise NotImplementedError

    def decode(self, raw):
        raise NotImplementedError

    def parse(self, token):
        raise NotImplementedError

    def format(self, value):
        raise NotImplementedError

    def coerce_raw(self, arr):
        """Return ``arr`` as a raw array of this carrier, or raise."""
        raise NotImplementedError

    def contains(self, value):
        try:
            self.encode(value)
        except CarrierMismatch:
            return False
        return True

    def __repr__(self):
        return f"<carrier {self.kind}>"


def _is_int(value):
    return isinstance(value, Integral) and not isinstance(value, (bool, np.bool_))


class BooleanCarrier(Carrier):
    kind = "boolean"
    dtype = np.uint8

    def encode(self, value):
        if isinstance(value, (bool, np.bool_)):
            return np.uint8(bool(value))
        if _is_int(value) and value in (0, 1):
            return np.uint8(value)
        raise CarrierMismatch(f"{value!r} is not a boolean value (0 or 1)")

    def decode(self, raw):
        return int(raw)

    def parse(self, token):
        token = str(token).strip()
        if token in ("0", "1"):
            return int(token)
        raise ParseError(f"invalid boolean token {token!r}")

    def format(self, value):
        return str(self.decode(self.encode(value)))

    def coerce_raw(self, arr):
        arr = np.asarray(arr)
        if arr.dtype == bool:
            return arr.astype(np.uint8)
        if arr.dtype.kind not in "iu" or (arr.size and (arr.min() < 0 or arr.max() > 1)):
            raise CarrierMismatch("boolean image data must be 0/1")
        return arr.astype(np.uint8)


class ExtendedIntCarrier(Carrier):
    kind = "extended-int"
    dtype = np.int64

    def encode(self, value):
        if isinstance(value, (float, np.floating)) and math.isinf(value):
            return np.int64(POS_INF if value > 0 else NEG_INF)
        if _is_int(value) and FINITE_MIN <= value <= FINITE_MAX:
            return np.int64(value)
        raise CarrierMismatch(f"{value!r} is not an extended integer")

    def decode(self, raw):
        raw = int(raw)
        if raw == NEG_INF:
            return -math.inf
        if raw == POS_INF:
            return math.inf
        return raw

    def parse(self, token):
        token = str(token).strip()
        low = token.lower()
        if low in ("-inf", "-infinity"):
            return -math.inf
        if low in ("+inf", "inf", "+infinity", "infinity"):
            return math.inf
        try:
            value = int(token)
        except ValueError:
            raise ParseError(f"invalid max-plus token {token!r}") from None
        if not FINITE_MIN <= value <= FINITE_MAX:
            raise ParseError(f"max-plus value {token} exceeds the 64-bit range")
        return value

    def format(self, value):
        value = self.decode(self.encode(value))
        if value == -math.inf:
            return "-inf"
        if value == math.inf:
            return "+inf"
        return str(value)

    def coerce_raw(self, arr):
        arr = np.asarray(arr)
        if arr.dtype.kind == "f":
            if np.isnan(arr).any() or not np.all(np.isinf(arr) | (arr == np.round(arr))):
                raise CarrierMismatch("max-plus image data must be integers or +-inf")
            out = np.where(np.isinf(arr), 0, arr).astype(np.int64)
            out[np.isposinf(arr)] = POS_INF
            out[np.isneginf(arr)] = NEG_INF
            return out
        if arr.dtype.kind not in "iu" and arr.dtype != object:
            raise CarrierMismatch("max-plus image data must be integers or +-inf")
        if arr.dtype == object:
            return np.vectorize(self.encode, otypes=[np.int64])(arr) if arr.size else arr.astype(np.int64)
        return arr.astype(np.int64)


class UnitIntervalCarrier(Carrier):
    """Fixed-point values k/255 stored as the level k."""

    kind = "unit-interval"
    dtype = np.uint8

    def encode(self, value):
        if isinstance(value, (bool, np.bool_)):
            raise CarrierMismatch(f"{value!r} is not a min-max value")
        if isinstance(value, Real):
            k = value * LEVELS
            if isinstance(value, (float, np.floating)):
                if math.isfinite(k) and abs(k - round(k)) < 1e-9 and 0 <= round(k) <= LEVELS:
                    return np.uint8(round(k))
            elif Fraction(k).denominator == 1 and 0 <= k <= LEVELS:
                return np.uint8(int(k))
        raise CarrierMismatch(f"{value!r} is not a multiple of 1/255 in [0, 1]")

    def decode(self, raw):
        return Fraction(int(raw), LEVELS)

    def quantize(self, value):
        """Nearest level to a real in [0, 1], ties rounded up."""
        value = Fraction(value)
        if not 0 <= value <= 1:
            raise ParseError(f"min-max value {value} outside [0, 1]")
        return math.floor(value * LEVELS + Fraction(1, 2))

    def parse(self, token):
        token = str(token).strip()
        num, slash, den = token.partition("/")
        if slash and den.strip() == str(LEVELS):
            try:
                k = int(num)
            except ValueError:
                raise ParseError(f"invalid min-max token {token!r}") from None
            if not 0 <= k <= LEVELS:
                raise ParseError(f"min-max level {k} outside 0..255")
            return Fraction(k, LEVELS)
        try:
            exact = Fraction(token)
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"invalid min-max token {token!r}") from None
        k = self.quantize(exact)
        if Fraction(k, LEVELS) != exact:
            warnings.warn(QuantizationNote(f"{token} quantized to {k}/255"), stacklevel=2)
        return Fraction(k, LEVELS)

    def format(self, value):
        return f"{int(self.encode(value))}/{LEVELS}"

    def coerce_raw(self, arr):
        arr = np.asarray(arr)
        if arr.dtype.kind not in "iu" or (arr.size and (arr.min() < 0 or arr.max() > LEVELS)):
            raise CarrierMismatch("min-max raw data must be levels 0..255")
        return arr.astype(np.uint8)


class NaturalCarrier(Carrier):
    kind = "natural"
    dtype = object

    def encode(self, value):
        if _is_int(value) and value >= 0:
            return int(value)
        raise CarrierMismatch(f"{value!r} is not a natural number")

    def decode(self, raw):
        return int(raw)

    def parse(self, token):
        token = str(token).strip()
        if not token.isdigit():
            raise ParseError(f"invalid counting token {token!r}")
        return int(token)

    def format(self, value):
        return str(self.encode(value))

    def coerce_raw(self, arr):
        arr = np.asarray(arr)
        if arr.dtype != object and arr.dtype.kind not in "iu":
            raise CarrierMismatch("counting image data must be natural numbers")
        out = np.empty(arr.shape, dtype=object)
        flat = out.reshape(-1)
        for i, v in enumerate(arr.reshape(-1)):
            flat[i] = self.encode(int(v) if isinstance(v, np.integer) else v)
        return out


# ---------------------------------------------------------------- kernels


def _mp_mul(a, b):
    """Saturating extended-integer addition; -inf annihilates, even +inf."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    with np.errstate(over="ignore"):
        total = a + b
    pos_over = (a > 0) & (b > 0) & (total < 0)
    neg_over = (a < 0) & (b < 0) & (total >= 0)
    total = np.clip(total, FINITE_MIN, FINITE_MAX)
    total = np.where(pos_over, FINITE_MAX, total)
    total = np.where(neg_over, FINITE_MIN, total)
    total = np.where((a == POS_INF) | (b == POS_INF), POS_INF, total)
    return np.where((a == NEG_INF) | (b == NEG_INF), NEG_INF, total)


def _mp_residual(a, b):
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    a_finite = (a != NEG_INF) & (a != POS_INF)
    # finite a, so -a stays finite
    diff = _mp_mul(b, np.where(a_finite, -a, 0))
    out = np.where(b == NEG_INF, NEG_INF, diff)
    out = np.where(a == POS_INF, NEG_INF, out)
    out = np.where(b == POS_INF, POS_INF, out)
    return np.where(a == NEG_INF, POS_INF, out)


def _bool_residual(a, b):
    return ((1 - np.asarray(a, dtype=np.uint8)) | np.asarray(b, dtype=np.uint8)).astype(np.uint8)


def _goedel_residual(a, b):
    a = np.asarray(a, dtype=np.uint8)
    b = np.asarray(b, dtype=np.uint8)
    return np.where(a <= b, np.uint8(LEVELS), b).astype(np.uint8)


def _typed(ufunc, dtype):
    def op(a, b):
        return ufunc(np.asarray(a, dtype=dtype), np.asarray(b, dtype=dtype))

    op.__name__ = ufunc.__name__
    return op


# ---------------------------------------------------------------- semiring


@dataclass(frozen=True)
class SemiringSpec:
    """A semiring with vectorized kernels over its raw encoding.

    ``add``, ``mul``, ``residual`` and ``meet`` take and return raw numpy
    arrays (they broadcast); ``zero`` and ``one`` are SValues.  Use the
    module-level ``sr_*`` functions for checked scalar arithmetic.
    """

    name: str
    carrier: Carrier
    add: Callable
    mul: Callable
    zero: object
    one: object
    residual: Optional[Callable] = None
    add_idempotent: bool = False
    meet: Optional[Callable] = None

    def __post_init__(self):
        if self.residual is not None and not self.add_idempotent:
            raise ValueError("a residual requires an idempotent addition")

    def __repr__(self):
        return f"SemiringSpec({self.name!r})"

    @property
    def raw_zero(self):
        return self.carrier.encode(self.zero)

    @property
    def raw_one(self):
        return self.carrier.encode(self.one)

    @property
    def dtype(self):
        return self.carrier.dtype

    def full(self, shape, value):
        """Raw array of ``shape`` filled with the SValue ``value``."""
        return np.full(shape, self.carrier.encode(value), dtype=self.carrier.dtype)

    def leq(self, a, b):
        """Derived order on raw arrays: ``a <= b`` iff ``a + b == b``."""
        if not self.add_idempotent:
            raise OrderUndefined(f"semiring {self.name!r} has no idempotent addition")
        return np.asarray(self.add(a, b) == np.asarray(b, dtype=self.dtype), dtype=bool)

    def encode(self, value):
        return self.carrier.encode(value)

    def decode(self, raw):
        return self.carrier.decode(raw)

    def parse(self, token):
        return self.carrier.parse(token)

    def format(self, value):
        return self.carrier.format(value)


BOOLEAN = SemiringSpec(
    name="boolean",
    carrier=BooleanCarrier(),
    add=_typed(np.bitwise_or, np.uint8),
    mul=_typed(np.bitwise_and, np.uint8),
    zero=0,
    one=1,
    residual=_bool_residual,
    add_idempotent=True,
    meet=_typed(np.minimum, np.uint8),
)

MAXPLUS = SemiringSpec(
    name="maxplus",
    carrier=ExtendedIntCarrier(),
    add=_typed(np.maximum, np.int64),
    mul=_mp_mul,
    zero=-math.inf,
    one=0,
    residual=_mp_residual,
    add_idempotent=True,
    meet=_typed(np.minimum, np.int64),
)

MINMAX = SemiringSpec(
    name="minmax",
    carrier=UnitIntervalCarrier(),
    add=_typed(np.maximum, np.uint8),
    mul=_typed(np.minimum, np.uint8),
    zero=Fraction(0),
    one=Fraction(1),
    residual=_goedel_residual,
    add_idempotent=True,
    meet=_typed(np.minimum, np.uint8),
)

COUNTING = SemiringSpec(
    name="counting",
    carrier=NaturalCarrier(),
    add=_typed(np.add, object),
    mul=_typed(np.multiply, object),
    zero=0,
    one=1,
)

_BUILTIN = {s.name: s for s in (BOOLEAN, MAXPLUS, MINMAX, COUNTING)}
SEMIRING_NAMES = tuple(_BUILTIN)


def make_semiring(name):
    """Return the built-in semiring called ``name``."""
    if isinstance(name, SemiringSpec):
        return name
    try:
        return _BUILTIN[str(name).lower()]
    except KeyError:
        raise UnknownSemiring(
            f"unknown semiring {name!r}; choose one of {', '.join(SEMIRING_NAMES)}"
        ) from None


def _scalar(s, op, a, b):
    return s.carrier.decode(op(s.carrier.encode(a), s.carrier.encode(b)))


def sr_add(s, a, b):
    return _scalar(s, s.add, a, b)


def sr_mul(s, a, b):
    return _scalar(s, s.mul, a, b)


def sr_leq(s, a, b):
    return bool(s.leq(s.carrier.encode(a), s.carrier.encode(b)))


def sr_residual(s, a, b):
    """Largest ``x`` with ``a * x <= b``."""
    if s.residual is None:
        raise NoResidual(f"semiring {s.name!r} has no residual")
    return _scalar(s, s.residual, a, b)
