import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from semimorph import (
    BinaryPointSet,
    CarrierMismatch,
    EmptyImage,
    OrderUndefined,
    OutOfBounds,
    ShapeMismatch,
    SImage,
    UnsupportedSemiring,
    complement,
    from_point_set,
    image_leq,
    kronecker,
    make_image,
    pointwise_join,
    reflect,
    to_point_set,
    translate,
)

from .conftest import GOLDEN_F, GOLDEN_G


def img(values, s="boolean", origin=(0, 0)):
    return SImage.from_values(values, s, origin)


def test_make_image_constant():
    z = make_image(2, 2, 0, "boolean")
    assert z.values() == [[0, 0], [0, 0]] and z.origin == (0, 0)
    canvas = make_image(3, 3, -math.inf, "maxplus")
    assert all(v == -math.inf for row in canvas.values() for v in row)


def test_make_image_rejects_empty():
    with pytest.raises(EmptyImage):
        make_image(0, 3, 0, "boolean")


def test_origin_must_be_inside():
    with pytest.raises(OutOfBounds):
        img([[1, 0]], origin=(0, 2))


def test_images_are_read_only():
    a = img([[1, 0]])
    with pytest.raises(ValueError):
        a.data[0, 0] = 0


def test_reflect_single_pixel():
    one = img([[1]])
    assert reflect(one) == one


def test_reflect_moves_coordinate_to_its_negative():
    b = img([[0, 1]])
    r = reflect(b)
    assert r.origin == (0, 1)
    assert r.values() == [[1, 0]]
    assert to_point_set(r) == {(0, -1)}
    assert to_point_set(r) == {(-x, -y) for x, y in to_point_set(b)}


@given(st.integers(1, 5), st.integers(1, 5), st.data())
def test_reflect_is_an_involution(rows, cols, data):
    bits = data.draw(st.lists(st.integers(0, 1), min_size=rows * cols, max_size=rows * cols))
    origin = (data.draw(st.integers(0, rows - 1)), data.draw(st.integers(0, cols - 1)))
    b = SImage(np.array(bits).reshape(rows, cols), "boolean", origin)
    assert reflect(reflect(b)) == b


def test_translate_examples():
    assert translate({(0, 0)}, (2, 3)) == {(2, 3)}
    assert translate(set(), (5, 5)) == set()
    assert translate({(0, 1), (1, 0)}, (1, 1)) == {(1, 2), (2, 1)}


points = st.sets(st.tuples(st.integers(-20, 20), st.integers(-20, 20)), max_size=20)


@given(points, st.tuples(st.integers(-9, 9), st.integers(-9, 9)))
def test_translate_round_trip(pts, h):
    assert translate(translate(pts, h), (-h[0], -h[1])) == pts


def test_pointwise_join():
    f = img([[0, 1], [1, 1]])
    assert pointwise_join(f, f) == f
    assert pointwise_join(f, make_image(2, 2, 0, "boolean")) == f
    assert pointwise_join(img([[0, 1]]), img([[1, 0]])).values() == [[1, 1]]


def test_pointwise_join_errors():
    with pytest.raises(ShapeMismatch):
        pointwise_join(img([[0, 1]]), img([[1]]))
    with pytest.raises(OrderUndefined):
        pointwise_join(img([[1]], "counting"), img([[2]], "counting"))
    with pytest.raises(CarrierMismatch):
        pointwise_join(img([[1]]), img([[1]], "maxplus"))


def test_complement():
    f = img([[0, 1], [1, 0]])
    assert complement(f).values() == [[1, 0], [0, 1]]
    assert complement(complement(f)) == f
    assert complement(make_image(3, 3, 0, "boolean")) == make_image(3, 3, 1, "boolean")
    with pytest.raises(UnsupportedSemiring):
        complement(img([[3]], "maxplus"))


def test_kronecker_examples():
    s = img([[1, 0], [1, 1]])
    assert kronecker(img([[1]]), s) == s
    assert kronecker(img([[1, 0]]), img([[1], [1]])).values() == [[1, 0], [1, 0]]
    assert kronecker(img([[2]], "counting"), img([[3]], "counting")).values() == [[6]]


def _brute_kron(r, s, mul):
    m, n, p, q = len(r), len(r[0]), len(s), len(s[0])
    return [[mul(r[i // p][j // q], s[i % p][j % q]) for j in range(n * q)] for i in range(m * p)]


def test_kronecker_blocks_maxplus():
    r = [[0, -math.inf], [2, 5]]
    s = [[1, 2, 3]]
    out = kronecker(img(r, "maxplus"), img(s, "maxplus"))
    assert out.shape == (2, 6)
    assert out.values() == _brute_kron(r, s, lambda a, b: a + b if -math.inf not in (a, b) else -math.inf)


def test_kronecker_mismatch():
    with pytest.raises(CarrierMismatch):
        kronecker(img([[1]]), img([[1]], "counting"))


def test_image_leq():
    f = img([[0, 1]])
    assert image_leq(f, f)
    assert image_leq(f, img([[1, 1]]))
    assert not image_leq(img([[5]], "maxplus"), img([[3]], "maxplus"))
    with pytest.raises(ShapeMismatch):
        image_leq(f, img([[1]]))


def test_point_set_round_trip():
    assert to_point_set(img([[0, 1], [0, 0]])) == {(0, 1)}
    assert from_point_set(BinaryPointSet(), (2, 2)) == make_image(2, 2, 0, "boolean")
    f = img(GOLDEN_F)
    assert from_point_set(to_point_set(f), f.shape) == f
    g = img(GOLDEN_G, origin=(1, 1))
    assert from_point_set(to_point_set(g), g.shape, g.origin) == g


def test_point_set_errors():
    with pytest.raises(UnsupportedSemiring):
        to_point_set(img([[1]], "maxplus"))
    with pytest.raises(OutOfBounds):
        from_point_set({(2, 0)}, (2, 2))
