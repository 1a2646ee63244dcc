"""Command-line driver.

    semimorph dilate -i F.pbm -s G.pbm -o out.pbm --semiring boolean
    semimorph erode  -i X.json -s G.json -o Y.json --semiring maxplus --mode same
    semimorph open   -i F.pgm -s G.json -o out.pgm --semiring maxplus
    semimorph verify --semiring maxplus --trials 1000 --seed 42 [--json-report r.json]

Exit status: 0 on success, 1 on a domain error (or a failed law under
``verify``), 2 on a usage error.
"""

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import imgio
from .algebra import SEMIRING_NAMES, make_semiring
from .errors import MorphologyError
from .laws import run_suite
from .morph import closing, dilate, erode, opening
from .simage import Mode, SImage

DEFAULT_MODES = {"dilate": "full", "erode": "valid", "open": "valid", "close": "valid"}


@dataclass(frozen=True)
class RunConfig:
    command: str
    semiring: str
    input: str = None
    se: str = None
    output: str = None
    mode: Mode = None
    trials: int = 1000
    seed: int = 0
    json_report: str = None
    counterexample_dir: str = "."


def build_parser():
    parser = argparse.ArgumentParser(
        prog="semimorph",
        description="Morphological dilation/erosion as semiring convolution.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (
        ("dilate", "semiring convolution (default mode: full)"),
        ("erode", "residual erosion (default mode: valid)"),
        ("open", "opening: dilation of the erosion"),
        ("close", "closing: erosion of the dilation"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("-i", "--input", required=True, help="source image (.pbm, .pgm or .json)")
        p.add_argument("-s", "--se", required=True, help="structuring element (.pbm, .pgm or .json)")
        p.add_argument("-o", "--output", required=True, help="output image (.pbm, .pgm or .json)")
        p.add_argument("--semiring", required=True, choices=SEMIRING_NAMES)
        modes = ["full", "same", "valid"] if name in ("dilate", "erode") else ["valid"]
        p.add_argument("--mode", choices=modes, default=DEFAULT_MODES[name])

    p = sub.add_parser("verify", help="run the randomized law suites")
    p.add_argument("--semiring", required=True, choices=SEMIRING_NAMES + ("all",))
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json-report", help="also write the report as JSON")
    p.add_argument("--counterexample-dir", default=".", help="where failing cases are written")
    return parser


def parse_config(argv):
    args = build_parser().parse_args(argv)
    if args.command == "verify":
        if args.trials < 1:
            build_parser().error("--trials must be positive")
        return RunConfig(
            command="verify",
            semiring=args.semiring,
            trials=args.trials,
            seed=args.seed,
            json_report=args.json_report,
            counterexample_dir=args.counterexample_dir,
        )
    return RunConfig(
        command=args.command,
        semiring=args.semiring,
        input=args.input,
        se=args.se,
        output=args.output,
        mode=Mode.coerce(args.mode),
    )


def _jsonable(value):
    if isinstance(value, SImage):
        return imgio.matrix_document(value)
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, float) and math.isinf(value):
        return "+inf" if value > 0 else "-inf"
    return value


def run_morphology(cfg):
    s = make_semiring(cfg.semiring)
    f = imgio.load_image(cfg.input, s)
    g = imgio.load_image(cfg.se, s)
    if cfg.command == "dilate":
        out = dilate(f, g, cfg.mode).image
    elif cfg.command == "erode":
        out = erode(f, g, cfg.mode).image
    elif cfg.command == "open":
        out = opening(f, g)
    else:
        out = closing(f, g)
    imgio.save_image(out, cfg.output)


def run_verify(cfg, out):
    names = SEMIRING_NAMES if cfg.semiring == "all" else (cfg.semiring,)
    reports = []
    for name in names:
        reports.extend(run_suite(name, cfg.trials, cfg.seed))
    ok = all(r.passed for r in reports)
    lines = [f"semimorph verify: semiring={cfg.semiring} trials={cfg.trials} seed={cfg.seed}"]
    for r in reports:
        line = f"{r.semiring:<9} {r.line()}"
        if not r.passed:
            path = os.path.join(cfg.counterexample_dir, f"{r.semiring}-{r.law}-counterexample.json")
            with open(path, "w", encoding="utf-8") as fh:
                json.dump(_jsonable(r.counterexample), fh, indent=1, sort_keys=True)
            line += f"  counterexample: {path}"
        lines.append(line)
    lines.append(f"result: {'PASS' if ok else 'FAIL'}")
    out.write("\n".join(lines) + "\n")
    if cfg.json_report:
        payload = {
            "semiring": cfg.semiring,
            "trials": cfg.trials,
            "seed": cfg.seed,
            "passed": ok,
            "laws": [_jsonable(r.as_dict()) for r in reports],
        }
        with open(cfg.json_report, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=1, sort_keys=True)
            fh.write("\n")
    return 0 if ok else 1


def run(argv=None, out=None, err=None):
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    cfg = parse_config(argv)
    try:
        if cfg.command == "verify":
            return run_verify(cfg, out)
        run_morphology(cfg)
    except MorphologyError as exc:
        err.write(f"semimorph: error: {exc}\n")
        return 1
    except OSError as exc:
        err.write(f"semimorph: error: {exc.strerror}: {exc.filename}\n")
        return 1
    return 0


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
