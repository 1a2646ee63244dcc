"""Dilation as semiring convolution and erosion as its residual.

Dilation of ``F`` (M x N) by ``G`` (P x Q) is the convolution over the
semiring::

    out[r, s] = sum_{m+p=r, n+q=s} F[m, n] * G[p, q]

with ``sum``/``*`` the semiring's addition and multiplication.  Erosion is
the right adjoint of ``F -> dilate(F, G)``; elementwise it uses the
semiring residual::

    out[r, s] = meet_{p, q} residual(G[p, q], F[r + p, s + q])

One code path serves every semiring: Boolean gives binary morphology,
max-plus gray-scale morphology, min-max fuzzy morphology and counting plain
integer convolution.

Index conventions.  Output index ranges are expressed in the index space of
the Full result (``0 .. M+P-2`` for dilation) or of ``F`` (erosion).
``MorphResult.out_origin`` is the index of coordinate ``(0, 0)`` in the
returned matrix, so coordinates compose the same way as for point sets;
it may fall outside the matrix (Valid erosion by an SE whose origin is not
at its top-left), in which case ``image.origin`` is left at ``(0, 0)``.
"""

from dataclasses import dataclass, field, replace

import numpy as np

from .errors import NoResidual, ShapeMismatch
from .simage import Mode, SImage, _same_semiring, image_leq, to_point_set

__all__ = [
    "MorphResult",
    "LawReport",
    "dilate",
    "erode",
    "opening",
    "closing",
    "adjunction_holds",
]


@dataclass(frozen=True)
class MorphResult:
    image: SImage
    mode: Mode
    out_origin: tuple

    def point_set(self):
        """1-pixels of a Boolean result, as coordinates."""
        return to_point_set(self.image, self.out_origin)

    def aligned(self):
        """The image carrying ``out_origin`` as its own origin."""
        return self.image.with_origin(self.out_origin)


@dataclass
class LawReport:
    law: str
    semiring: str
    trials: int
    failures: int = 0
    counterexample: dict = None
    skipped: str = None
    notes: list = field(default_factory=list)

    @property
    def passed(self):
        return self.skipped is not None or self.failures == 0

    def line(self):
        if self.skipped is not None:
            return f"{self.law:<24} SKIP  ({self.skipped})"
        status = "PASS" if self.passed else "FAIL"
        ok = self.trials - self.failures
        return f"{self.law:<24} {status}  {ok}/{self.trials}"

    def as_dict(self):
        return {
            "law": self.law,
            "semiring": self.semiring,
            "trials": self.trials,
            "failures": self.failures,
            "passed": self.passed,
            "skipped": self.skipped,
            "counterexample": self.counterexample,
        }


def _wrap(raw, s, mode, out_origin):
    r, c = out_origin
    inside = 0 <= r < raw.shape[0] and 0 <= c < raw.shape[1]
    return MorphResult(SImage(raw, s, out_origin if inside else (0, 0)), mode, out_origin)


def full_dilation(f, g):
    """Raw ``(M+P-1) x (N+Q-1)`` convolution array."""
    s = _same_semiring(f, g)
    m, n = f.shape
    p, q = g.shape
    zero = s.raw_zero
    out = s.full((m + p - 1, n + q - 1), s.zero)
    for i in range(p):
        for j in range(q):
            w = g.data[i, j]
            if w == zero:
                continue
            window = out[i:i + m, j:j + n]
            window[...] = s.add(window, s.mul(f.data, w))
    return out


def dilate(f, g, mode=Mode.FULL):
    """Semiring convolution of ``f`` by the structuring element ``g``.

    ``Full`` keeps every index sum; ``Same`` crops to ``f``'s shape so that the
    pixel under ``g``'s origin stays put; ``Valid`` keeps the positions where
    ``g`` lies entirely on ``f`` (requires ``g`` no larger than ``f``).
    """
    mode = Mode.coerce(mode)
    s = _same_semiring(f, g)
    m, n = f.shape
    p, q = g.shape
    full = full_dilation(f, g)
    if mode is Mode.FULL:
        start, size = (0, 0), full.shape
    elif mode is Mode.SAME:
        start, size = g.origin, (m, n)
    else:
        if p > m or q > n:
            raise ShapeMismatch(f"Valid dilation needs the SE ({p}x{q}) to fit in the image ({m}x{n})")
        start, size = (p - 1, q - 1), (m - p + 1, n - q + 1)
    raw = full[start[0]:start[0] + size[0], start[1]:start[1] + size[1]]
    out_origin = (
        f.origin[0] + g.origin[0] - start[0],
        f.origin[1] + g.origin[1] - start[1],
    )
    return _wrap(raw, s, mode, out_origin)


def _erosion_window(f, g, start, size):
    """Erosion at F-indices ``start .. start+size-1``; F is zero outside."""
    s = f.semiring
    m, n = f.shape
    p, q = g.shape
    top, left = max(0, -start[0]), max(0, -start[1])
    bottom = max(0, start[0] + size[0] + p - 1 - m)
    right = max(0, start[1] + size[1] + q - 1 - n)
    padded = s.full((m + top + bottom, n + left + right), s.zero)
    padded[top:top + m, left:left + n] = f.data
    r0, c0 = start[0] + top, start[1] + left
    out = None
    for i in range(p):
        for j in range(q):
            term = s.residual(g.data[i, j], padded[r0 + i:r0 + i + size[0], c0 + j:c0 + j + size[1]])
            out = term if out is None else s.meet(out, term)
    return out


def erode(f, g, mode=Mode.VALID):
    """Right adjoint of dilation by ``g``, computed with the semiring residual.

    ``Valid`` sweeps the positions where ``g`` lies entirely on ``f``;
    ``Same`` and ``Full`` treat ``f`` as semiring zero outside its rectangle
    (objects erode at the border).  ``Full`` covers every position where
    ``g`` overlaps ``f``.
    """
    mode = Mode.coerce(mode)
    s = _same_semiring(f, g)
    if s.residual is None:
        raise NoResidual(f"erosion undefined for semiring {s.name!r}")
    m, n = f.shape
    p, q = g.shape
    if mode is Mode.VALID:
        if p > m or q > n:
            raise ShapeMismatch(f"Valid erosion needs the SE ({p}x{q}) to fit in the image ({m}x{n})")
        start, size = (0, 0), (m - p + 1, n - q + 1)
    elif mode is Mode.SAME:
        start, size = (-g.origin[0], -g.origin[1]), (m, n)
    else:
        start, size = (1 - p, 1 - q), (m + p - 1, n + q - 1)
    raw = _erosion_window(f, g, start, size)
    out_origin = (
        f.origin[0] - g.origin[0] - start[0],
        f.origin[1] - g.origin[1] - start[1],
    )
    return _wrap(raw, s, mode, out_origin)


def opening(f, g):
    """Dilation of the erosion, on ``f``'s own index range.

    The erosion runs in Full mode so every placement of ``g`` that fits
    inside the zero-extended ``f`` contributes, including placements where
    empty rows/columns of ``g`` hang over the border.
    """
    s = _same_semiring(f, g)
    if s.residual is None:
        raise NoResidual(f"opening undefined for semiring {s.name!r}")
    m, n = f.shape
    p, q = g.shape
    eroded = erode(f, g, Mode.FULL).image
    grown = full_dilation(eroded, g)
    # eroded index 0 is f index 1-p; its dilation index 0 is f index 1-p as well
    raw = grown[p - 1:p - 1 + m, q - 1:q - 1 + n]
    return SImage(raw, s, f.origin)


def closing(f, g):
    """Erosion of the dilation, on ``f``'s own index range."""
    s = _same_semiring(f, g)
    if s.residual is None:
        raise NoResidual(f"closing undefined for semiring {s.name!r}")
    grown = SImage(full_dilation(f, g), s)
    return SImage(erode(grown, g, Mode.VALID).image.data, s, f.origin)


def adjunction_holds(f=None, e=None, g=None, trials=1000, *, semiring=None, seed=0, max_size=8, max_se=3):
    """Check ``dilate(F, G) <= E  <=>  F <= erode(E, G)``.

    With explicit ``f``, ``e`` and ``g`` the single triple is checked (``E``
    must have the Full dilation shape).  Otherwise ``trials`` random triples
    over ``semiring`` are drawn from ``seed``; see :mod:`semimorph.laws` for
    the sampler.
    """
    if f is not None and e is not None and g is not None:
        s = _same_semiring(f, e, g)
        triples = [(f, e, g)]
    else:
        from .laws import adjunction_triples

        s = semiring if semiring is not None else getattr(g, "semiring", None)
        if s is None:
            raise ValueError("pass a semiring or a complete (f, e, g) triple")
        triples = adjunction_triples(s, trials, np.random.default_rng(seed), max_size, max_se)
    if s.residual is None:
        raise NoResidual(f"erosion undefined for semiring {s.name!r}")
    report = LawReport("adjunction", s.name, len(triples))
    for ff, ee, gg in triples:
        expected = (ff.shape[0] + gg.shape[0] - 1, ff.shape[1] + gg.shape[1] - 1)
        if ee.shape != expected:
            raise ShapeMismatch(f"E must have the Full dilation shape {expected}, got {ee.shape}")
        lhs = image_leq(SImage(full_dilation(ff, gg), s), ee)
        rhs = image_leq(ff, erode(ee, gg, Mode.VALID).image)
        if lhs != rhs:
            report.failures += 1
            if report.counterexample is None:
                report.counterexample = {"F": ff, "E": ee, "G": gg, "dilate_leq_E": lhs, "F_leq_erode": rhs}
    return report


def corrupt_residual(s, bump):
    """Copy of ``s`` whose residual is deliberately off; for checker sanity tests."""
    residual = s.residual

    def wrong(a, b):
        return s.mul(residual(a, b), bump)

    return replace(s, name=f"{s.name}-corrupt", residual=wrong)
