import io
import json
import math

import pytest

from semimorph import SImage, make_image
from semimorph.cli import parse_config, run
from semimorph.imgio import load_image, read_netpbm, save_image

from .conftest import GOLDEN_F, GOLDEN_FG, GOLDEN_G


def call(argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def golden_files(tmp_path):
    save_image(SImage.from_values(GOLDEN_F, "boolean"), tmp_path / "F.pbm")
    save_image(SImage.from_values(GOLDEN_G, "boolean"), tmp_path / "G.pbm")
    return tmp_path


def test_golden_dilation_through_files(golden_files):
    out = golden_files / "out.pbm"
    code, _, err = call(["dilate", "-i", str(golden_files / "F.pbm"), "-s", str(golden_files / "G.pbm"),
                         "-o", str(out), "--semiring", "boolean"])
    assert code == 0, err
    assert read_netpbm(out.read_bytes()).values() == GOLDEN_FG


def test_erode_with_unit_se_is_identity(tmp_path):
    x = SImage.from_values([[3, -4], [-math.inf, 9]], "maxplus")
    save_image(x, tmp_path / "X.json")
    save_image(make_image(1, 1, 0, "maxplus"), tmp_path / "unit.json")
    code, _, err = call(["erode", "-i", str(tmp_path / "X.json"), "-s", str(tmp_path / "unit.json"),
                         "-o", str(tmp_path / "Y.json"), "--semiring", "maxplus"])
    assert code == 0, err
    assert load_image(tmp_path / "Y.json") == x


def test_counting_erosion_message(tmp_path):
    save_image(make_image(2, 2, 1, "counting"), tmp_path / "C.json")
    code, _, err = call(["erode", "-i", str(tmp_path / "C.json"), "-s", str(tmp_path / "C.json"),
                         "-o", str(tmp_path / "o.json"), "--semiring", "counting"])
    assert code == 1
    assert "erosion undefined for semiring 'counting'" in err
    assert "Traceback" not in err


def test_semiring_flag_conflict_is_error(tmp_path):
    save_image(make_image(2, 2, 1, "boolean"), tmp_path / "B.json")
    code, _, err = call(["dilate", "-i", str(tmp_path / "B.json"), "-s", str(tmp_path / "B.json"),
                         "-o", str(tmp_path / "o.json"), "--semiring", "maxplus"])
    assert code == 1 and "declares semiring 'boolean'" in err


def test_missing_file_is_domain_error(tmp_path):
    code, _, err = call(["dilate", "-i", str(tmp_path / "nope.pbm"), "-s", str(tmp_path / "nope.pbm"),
                         "-o", str(tmp_path / "o.pbm"), "--semiring", "boolean"])
    assert code == 1 and "nope.pbm" in err


def test_usage_errors_exit_2(capsys):
    for argv in (["dilate", "-i", "a.pbm"], ["verify"], ["erode", "-i", "a", "-s", "b", "-o", "c",
                                                         "--semiring", "boolean", "--mode", "diagonal"]):
        with pytest.raises(SystemExit) as info:
            run(argv)
        assert info.value.code == 2
    assert "usage" in capsys.readouterr().err


def test_mode_defaults():
    base = ["-i", "a", "-s", "b", "-o", "c", "--semiring", "boolean"]
    assert parse_config(["dilate"] + base).mode.value == "full"
    assert parse_config(["erode"] + base).mode.value == "valid"
    assert parse_config(["open"] + base).mode.value == "valid"


def test_open_and_close_commands(golden_files):
    for cmd in ("open", "close"):
        out = golden_files / f"{cmd}.pbm"
        code, _, err = call([cmd, "-i", str(golden_files / "F.pbm"), "-s", str(golden_files / "G.pbm"),
                             "-o", str(out), "--semiring", "boolean"])
        assert code == 0, err
        assert read_netpbm(out.read_bytes()).shape == (3, 3)


def test_verify_is_deterministic_and_passes(tmp_path):
    argv = ["verify", "--semiring", "maxplus", "--trials", "60", "--seed", "42"]
    code1, report1, _ = call(argv + ["--json-report", str(tmp_path / "r.json")])
    code2, report2, _ = call(argv)
    assert code1 == code2 == 0
    assert report1 == report2
    assert report1.splitlines()[-1] == "result: PASS"
    for law in ("adjunction", "associativity", "sup-preservation", "duality"):
        assert any(law in line and "PASS" in line for line in report1.splitlines())
    payload = json.loads((tmp_path / "r.json").read_text())
    assert payload["passed"] and payload["seed"] == 42


def test_verify_counting_skips_order_laws():
    code, report, _ = call(["verify", "--semiring", "counting", "--trials", "20"])
    assert code == 0
    assert "adjunction" in report and "SKIP" in report


def test_verify_failure_writes_counterexample(tmp_path, monkeypatch):
    from semimorph import cli
    from semimorph.morph import LawReport

    def failing_suite(name, trials, seed):
        report = LawReport("adjunction", name, trials, failures=1)
        report.counterexample = {"G": make_image(1, 1, -math.inf, "maxplus"), "F_leq_erode": True}
        return [report]

    monkeypatch.setattr(cli, "run_suite", failing_suite)
    code, report, _ = call(["verify", "--semiring", "maxplus", "--trials", "3",
                            "--counterexample-dir", str(tmp_path)])
    assert code == 1
    assert report.splitlines()[-1] == "result: FAIL"
    saved = json.loads((tmp_path / "maxplus-adjunction-counterexample.json").read_text())
    assert saved["G"]["data"] == [["-inf"]]
