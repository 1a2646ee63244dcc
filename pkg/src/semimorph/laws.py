"""Randomized law checks: the machinery behind ``semimorph verify``.

Every suite draws from its own ``numpy.random.Generator`` seeded with
``(seed, suite index)``, so reports are reproducible and independent of
which other suites ran.  Sampling regime: images 1..8 per side,
structuring elements 1..3 per side, values from a small carrier window:

* boolean: {0, 1}
* maxplus: integers in [-5, 5] plus -inf (~15%) and +inf (~5%)
* minmax: levels {0, 1, 64, 127, 128, 200, 254, 255} / 255
* counting: integers in [0, 3]
"""

import itertools

import numpy as np

from . import oracle
from .algebra import NEG_INF, POS_INF, make_semiring
from .morph import LawReport, adjunction_holds, closing, dilate, erode, full_dilation, opening
from .simage import (
    Mode,
    SImage,
    complement,
    image_leq,
    make_image,
    pointwise_join,
    pointwise_meet,
    reflect,
)

__all__ = [
    "random_raw",
    "random_image",
    "adjunction_triples",
    "check_semiring_axioms",
    "check_residuation",
    "check_associativity",
    "check_unit",
    "check_sup_preservation",
    "check_inf_preservation",
    "check_duality",
    "check_opening_closing",
    "check_convolution",
    "negate",
    "run_suite",
]

MINMAX_LEVELS = np.array([0, 1, 64, 127, 128, 200, 254, 255], dtype=np.uint8)


def random_raw(s, shape, rng, window=5):
    """Raw array of ``shape`` drawn from ``s``'s sampling window."""
    if s.name.startswith("boolean"):
        return rng.integers(0, 2, size=shape, dtype=np.uint8)
    if s.name.startswith("maxplus"):
        vals = rng.integers(-window, window + 1, size=shape).astype(np.int64)
        u = rng.random(shape)
        vals[u < 0.15] = NEG_INF
        vals[u > 0.95] = POS_INF
        return vals
    if s.name.startswith("minmax"):
        return rng.choice(MINMAX_LEVELS, size=shape)
    if s.name.startswith("counting"):
        return rng.integers(0, 4, size=shape).astype(object)
    raise ValueError(f"no sampler for semiring {s.name!r}")


def random_image(s, rng, max_rows=8, max_cols=None, min_size=1, random_origin=False):
    max_cols = max_rows if max_cols is None else max_cols
    shape = (int(rng.integers(min_size, max_rows + 1)), int(rng.integers(min_size, max_cols + 1)))
    origin = (0, 0)
    if random_origin:
        origin = (int(rng.integers(0, shape[0])), int(rng.integers(0, shape[1])))
    return SImage(random_raw(s, shape, rng), s, origin)


def step_down(s, raw):
    """A value just below ``raw`` in the derived order (or ``raw`` at the bottom)."""
    if s.name.startswith("maxplus"):
        if raw == POS_INF:
            return np.int64(5)
        return raw if raw == NEG_INF else np.int64(raw - 1)
    if s.name.startswith("minmax"):
        lower = MINMAX_LEVELS[MINMAX_LEVELS < raw]
        return lower[-1] if lower.size else raw
    return s.raw_zero


def adjunction_triples(s, trials, rng, max_size=8, max_se=3):
    """Random ``(F, E, G)`` with E shaped like the Full dilation of F by G.

    A third of the E's are independent noise, a third sit above the
    dilation (so the left side holds) and a third are the dilation with one
    pixel lowered by a single step (so it just fails).
    """
    triples = []
    for _ in range(trials):
        f = random_image(s, rng, max_size)
        g = random_image(s, rng, max_se)
        d = full_dilation(f, g)
        kind = int(rng.integers(0, 3))
        if kind == 0:
            e = random_raw(s, d.shape, rng)
        elif kind == 1:
            e = s.add(d, random_raw(s, d.shape, rng))
        else:
            e = d.copy()
            i, j = int(rng.integers(0, d.shape[0])), int(rng.integers(0, d.shape[1]))
            e[i, j] = step_down(s, e[i, j])
        triples.append((f, SImage(e, s), g))
    return triples


def negate(img):
    """Order-reversing involution used for the duality law.

    Boolean complement, or max-plus negation (which swaps -inf and +inf).
    """
    s = img.semiring
    if s.name == "boolean":
        return complement(img)
    if s.name == "maxplus":
        raw = img.data
        out = np.where(raw == NEG_INF, POS_INF, np.where(raw == POS_INF, NEG_INF, -raw))
        return SImage(out, s, img.origin)
    raise ValueError(f"no duality involution for semiring {s.name!r}")


def _report(law, s, trials):
    return LawReport(law, s.name, trials)


def _fail(report, **example):
    report.failures += 1
    if report.counterexample is None:
        report.counterexample = example


# ------------------------------------------------------------ algebra laws


def _carrier_sample(s, n, rng):
    if s.name == "maxplus":
        vals = rng.integers(-100, 101, size=n).astype(np.int64)
        u = rng.random(n)
        vals[u < 0.1] = NEG_INF
        return vals
    if s.name == "minmax":
        return rng.integers(0, 256, size=n).astype(np.uint8)
    return random_raw(s, (n,), rng)


def _triples(s, samples, rng):
    """All carrier triples for boolean, else ``samples`` random ones."""
    if s.name == "boolean":
        grid = np.array(list(itertools.product((0, 1), repeat=3)), dtype=np.uint8)
        return grid[:, 0], grid[:, 1], grid[:, 2]
    return tuple(_carrier_sample(s, samples, rng) for _ in range(3))


def check_semiring_axioms(s, samples=10_000, rng=None):
    """Monoid, distributivity, annihilation, unit and order laws, vectorized."""
    rng = np.random.default_rng(0) if rng is None else rng
    a, b, c = _triples(s, samples, rng)
    zero, one = s.raw_zero, s.raw_one
    add, mul = s.add, s.mul

    def eq(x, y):
        return np.asarray(x == y, dtype=bool)

    checks = {
        "add-assoc": eq(add(add(a, b), c), add(a, add(b, c))),
        "add-comm": eq(add(a, b), add(b, a)),
        "add-unit": eq(add(a, zero), a),
        "mul-assoc": eq(mul(mul(a, b), c), mul(a, mul(b, c))),
        "mul-unit": eq(mul(a, one), a) & eq(mul(one, a), a),
        "left-distrib": eq(mul(a, add(b, c)), add(mul(a, b), mul(a, c))),
        "right-distrib": eq(mul(add(a, b), c), add(mul(a, c), mul(b, c))),
        "annihilation": eq(mul(a, zero), zero) & eq(mul(zero, a), zero),
    }
    if s.add_idempotent:
        leq = s.leq
        checks["add-idem"] = eq(add(a, a), a)
        checks["order-antisym"] = ~(leq(a, b) & leq(b, a)) | eq(a, b)
        checks["order-trans"] = ~(leq(a, b) & leq(b, c)) | leq(a, c)
        checks["mul-monotone"] = ~leq(a, b) | (leq(mul(a, c), mul(b, c)) & leq(mul(c, a), mul(c, b)))
    report = _report("semiring-axioms", s, len(a) * len(checks))
    for name, ok in checks.items():
        bad = np.flatnonzero(~ok)
        report.failures += bad.size
        if bad.size and report.counterexample is None:
            i = bad[0]
            report.counterexample = {
                "axiom": name,
                "a": s.decode(a[i]),
                "b": s.decode(b[i]),
                "c": s.decode(c[i]),
            }
    return report


def check_residuation(s, samples=10_000, rng=None):
    """``a*x <= b  <=>  x <= residual(a, b)`` over sampled triples."""
    rng = np.random.default_rng(0) if rng is None else rng
    if s.residual is None:
        return LawReport("residuation", s.name, 0, skipped="no residual")
    a, b, x = _triples(s, samples, rng)
    lhs = s.leq(s.mul(a, x), b)
    rhs = s.leq(x, s.residual(a, b))
    report = _report("residuation", s, len(a))
    bad = np.flatnonzero(lhs != rhs)
    report.failures = bad.size
    if bad.size:
        i = bad[0]
        report.counterexample = {"a": s.decode(a[i]), "b": s.decode(b[i]), "x": s.decode(x[i])}
    return report


# ------------------------------------------------------------ image laws


def check_associativity(s, trials, rng):
    report = _report("associativity", s, trials)
    for _ in range(trials):
        f = random_image(s, rng)
        g = random_image(s, rng, 3)
        h = random_image(s, rng, 3)
        left = full_dilation(SImage(full_dilation(f, g), s), h)
        right = full_dilation(f, SImage(full_dilation(g, h), s))
        if not np.array_equal(left, right):
            _fail(report, F=f, G=g, H=h)
    return report


def check_unit(s, trials, rng):
    report = _report("unit", s, trials)
    unit = make_image(1, 1, s.one, s)
    for _ in range(trials):
        f = random_image(s, rng)
        if not (
            np.array_equal(full_dilation(f, unit), f.data)
            and np.array_equal(full_dilation(unit, f), f.data)
        ):
            _fail(report, F=f)
    return report


def check_sup_preservation(s, trials, rng):
    if not s.add_idempotent:
        return LawReport("sup-preservation", s.name, 0, skipped="addition not idempotent")
    report = _report("sup-preservation", s, trials)
    for _ in range(trials):
        f = random_image(s, rng)
        f2 = SImage(random_raw(s, f.shape, rng), s)
        g = random_image(s, rng, 3)
        left = dilate(pointwise_join(f, f2), g).image
        right = pointwise_join(dilate(f, g).image, dilate(f2, g).image)
        if left != right:
            _fail(report, F=f, F2=f2, G=g)
    return report


def check_inf_preservation(s, trials, rng):
    if s.residual is None:
        return LawReport("inf-preservation", s.name, 0, skipped="no residual")
    report = _report("inf-preservation", s, trials)
    for _ in range(trials):
        e = random_image(s, rng, 8, min_size=3)
        e2 = SImage(random_raw(s, e.shape, rng), s)
        g = random_image(s, rng, 3)
        left = erode(pointwise_meet(e, e2), g).image
        right = pointwise_meet(erode(e, g).image, erode(e2, g).image)
        if left != right:
            _fail(report, E=e, E2=e2, G=g)
    return report


def duality_instance(s, rng, core=8, se=3):
    """Random ``(F, G)`` with F's core surrounded by a zero margin."""
    g = random_image(s, rng, se, random_origin=True)
    p, q = g.shape
    core_img = random_raw(s, (int(rng.integers(1, core + 1)), int(rng.integers(1, core + 1))), rng)
    raw = s.full((core_img.shape[0] + 2 * p, core_img.shape[1] + 2 * q), s.zero)
    raw[p:p + core_img.shape[0], q:q + core_img.shape[1]] = core_img
    return SImage(raw, s), g


def duality_sides(f, g):
    """Both sides of the duality identity, cropped to the interior region."""
    p, q = g.shape
    m, n = f.shape
    left = negate(erode(f, g, Mode.SAME).image).data
    right = dilate(negate(f), reflect(g), Mode.SAME).image.data
    window = (slice(p - 1, m - p + 1), slice(q - 1, n - q + 1))
    return left[window], right[window]


def check_duality(s, trials, rng):
    if s.name not in ("boolean", "maxplus"):
        return LawReport("duality", s.name, 0, skipped="needs boolean complement or max-plus negation")
    report = _report("duality", s, trials)
    for _ in range(trials):
        f, g = duality_instance(s, rng)
        left, right = duality_sides(f, g)
        if not np.array_equal(left, right):
            _fail(report, F=f, G=g)
    return report


def check_opening_closing(s, trials, rng):
    """Anti-extensive / extensive, idempotent and increasing."""
    if s.residual is None:
        return LawReport("opening-closing", s.name, 0, skipped="no residual")
    report = _report("opening-closing", s, trials)
    for _ in range(trials):
        f = random_image(s, rng)
        g = random_image(s, rng, 3)
        bigger = pointwise_join(f, SImage(random_raw(s, f.shape, rng), s))
        op, cl = opening(f, g), closing(f, g)
        ok = (
            image_leq(op, f)
            and image_leq(f, cl)
            and opening(op, g) == op
            and closing(cl, g) == cl
            and image_leq(op, opening(bigger, g))
            and image_leq(cl, closing(bigger, g))
        )
        if not ok:
            _fail(report, F=f, G=g)
    return report


def check_convolution(s, trials, rng):
    """Counting-semiring dilation against a nested-loop integer convolution."""
    if s.name != "counting":
        return LawReport("convolution", s.name, 0, skipped="counting semiring only")
    report = _report("convolution", s, trials)
    for _ in range(trials):
        f = random_image(s, rng)
        g = random_image(s, rng, 3)
        expected = oracle.convolve_nested(f.values(), g.values())
        if dilate(f, g).image.values() != expected:
            _fail(report, F=f, G=g)
    return report


IMAGE_SUITES = (
    ("adjunction", None),
    ("associativity", check_associativity),
    ("unit", check_unit),
    ("sup-preservation", check_sup_preservation),
    ("inf-preservation", check_inf_preservation),
    ("duality", check_duality),
    ("opening-closing", check_opening_closing),
    ("convolution", check_convolution),
)


def run_suite(semiring, trials=1000, seed=0):
    """Every applicable law for ``semiring``; inapplicable ones are reported as skipped."""
    s = make_semiring(semiring)
    reports = [
        check_semiring_axioms(s, rng=np.random.default_rng([seed, 100])),
        check_residuation(s, rng=np.random.default_rng([seed, 101])),
    ]
    for k, (name, check) in enumerate(IMAGE_SUITES):
        if name == "adjunction":
            if s.residual is None:
                reports.append(LawReport(name, s.name, 0, skipped="no residual"))
            else:
                reports.append(adjunction_holds(trials=trials, semiring=s, seed=[seed, k]))
        else:
            reports.append(check(s, trials, np.random.default_rng([seed, k])))
    return reports
