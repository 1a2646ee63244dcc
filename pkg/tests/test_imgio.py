import json
import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from semimorph import (
    CarrierMismatch,
    ParseError,
    QuantizationNote,
    SImage,
    TruncatedImage,
    UnknownSemiring,
    UnsupportedFormat,
    ValueOutOfRange,
    make_semiring,
)
from semimorph.imgio import (
    load_image,
    read_matrix_json,
    read_netpbm,
    save_image,
    write_matrix_json,
    write_netpbm,
)
from semimorph.laws import random_image

from .conftest import GOLDEN_F, GOLDEN_G


def test_read_pbm():
    assert read_netpbm(b"P1\n2 2\n0 1 1 0").values() == [[0, 1], [1, 0]]


def test_read_pgm():
    img = read_netpbm("P2\n1 2\n255\n0 255")
    assert img.semiring.name == "maxplus"
    assert img.values() == [[0], [255]]


def test_read_pgm_shape_is_height_by_width():
    img = read_netpbm("P2\n2 1\n255\n0 255")
    assert img.values() == [[0, 255]]


def test_read_golden_f():
    body = " ".join(str(v) for row in GOLDEN_F for v in row)
    assert read_netpbm("P1\n3 3\n" + body).values() == GOLDEN_F


def test_pbm_comments_and_packed_pixels():
    text = b"P1\n# a comment\n3 2 # trailing\n010\n1 1\n# more\n0\n"
    assert read_netpbm(text).values() == [[0, 1, 0], [1, 1, 0]]


def test_pgm_as_minmax():
    img = read_netpbm("P2 2 1 255 51 255", semiring="minmax")
    assert img.semiring.name == "minmax"
    assert img.data.tolist() == [[51, 255]]


@pytest.mark.parametrize(
    "data,error",
    [
        (b"P3\n1 1\n255\n0 0 0", UnsupportedFormat),
        (b"P4\n1 1\n", UnsupportedFormat),
        (b"P1\n2 2\n0 1 1", TruncatedImage),
        (b"P1\n2 2\n0 1 1 0 1", TruncatedImage),
        (b"P2\n1 1\n100\n101", ValueOutOfRange),
        (b"P1\n1 1\n2", ValueOutOfRange),
        (b"P2\n1 1\n", TruncatedImage),
        (b"P2\n1 1\n1000\n5", UnsupportedFormat),
    ],
)
def test_netpbm_errors(data, error):
    with pytest.raises(error):
        read_netpbm(data)


def test_write_pbm_canonical():
    img = SImage.from_values([[0, 1]], "boolean")
    assert write_netpbm(img) == b"P1\n2 1\n0 1\n"


def test_write_pgm_canonical():
    img = SImage.from_values([[0, 7], [255, 3]], "maxplus")
    assert write_netpbm(img) == b"P2\n2 2\n255\n0 7\n255 3\n"


def test_write_pgm_rejects_infinity():
    img = SImage.from_values([[1, -math.inf]], "maxplus")
    with pytest.raises(ValueOutOfRange, match=r"\(0, 1\)"):
        write_netpbm(img)


@pytest.mark.parametrize("name", ["boolean", "maxplus", "minmax"])
def test_netpbm_round_trip_random(name):
    s = make_semiring(name)
    rng = np.random.default_rng(4)
    for _ in range(30):
        shape = tuple(rng.integers(1, 9, size=2))
        if name == "boolean":
            raw = rng.integers(0, 2, shape)
        else:
            raw = rng.integers(0, 256, shape)
        img = SImage(raw, s)
        assert read_netpbm(write_netpbm(img), semiring=name) == img


def test_read_matrix_json_maxplus():
    doc = '{"semiring":"maxplus","rows":1,"cols":2,"origin":[0,0],"data":[["-inf","3"]]}'
    img = read_matrix_json(doc)
    assert img.shape == (1, 2)
    assert img.values() == [[-math.inf, 3]]


def test_json_round_trip_golden_g():
    g = SImage.from_values(GOLDEN_G, "boolean", (1, 1))
    text = write_matrix_json(g)
    assert read_matrix_json(text) == g
    assert write_matrix_json(read_matrix_json(text)) == text


def test_minmax_quantization_note():
    doc = {"semiring": "minmax", "rows": 1, "cols": 1, "origin": [0, 0], "data": [["0.5"]]}
    with pytest.warns(QuantizationNote):
        img = read_matrix_json(json.dumps(doc))
    assert img.data[0, 0] == 128


@pytest.mark.parametrize("name", ["boolean", "maxplus", "minmax", "counting"])
def test_json_round_trip_random(name):
    s = make_semiring(name)
    rng = np.random.default_rng(6)
    for _ in range(20):
        img = random_image(s, rng, random_origin=True)
        assert read_matrix_json(write_matrix_json(img)) == img


@given(st.lists(st.lists(st.sampled_from(["-inf", "+inf", "0", "-7", "12345678901"]), min_size=3, max_size=3), min_size=1, max_size=4))
def test_json_maxplus_tokens_are_lossless(rows):
    doc = {"semiring": "maxplus", "rows": len(rows), "cols": 3, "origin": [0, 0], "data": rows}
    img = read_matrix_json(json.dumps(doc))
    assert json.loads(write_matrix_json(img))["data"] == rows


@pytest.mark.parametrize(
    "doc,error,where",
    [
        ({"semiring": "tropical", "rows": 1, "cols": 1, "data": [["0"]]}, UnknownSemiring, None),
        ({"semiring": "boolean", "rows": 2, "cols": 1, "data": [["0"]]}, ParseError, None),
        ({"semiring": "boolean", "rows": 1, "cols": 2, "data": [["0"]]}, ParseError, "row 0"),
        ({"semiring": "boolean", "rows": 1, "cols": 2, "data": [["0", "2"]]}, ParseError, "row 0, col 1"),
        ({"semiring": "maxplus", "rows": 1, "cols": 1, "data": [["1.5"]]}, ParseError, "row 0, col 0"),
        ({"semiring": "counting", "rows": 1, "cols": 1, "data": [["-1"]]}, ParseError, None),
    ],
)
def test_json_errors(doc, error, where):
    with pytest.raises(error) as info:
        read_matrix_json(json.dumps(doc))
    if where:
        assert where in str(info.value)


def test_load_image_semiring_conflict(tmp_path):
    path = tmp_path / "x.json"
    save_image(SImage.from_values([[1]], "boolean"), path)
    assert load_image(path, "boolean").values() == [[1]]
    with pytest.raises(CarrierMismatch):
        load_image(path, "maxplus")
    with pytest.raises(UnsupportedFormat):
        load_image(tmp_path / "x.png")
