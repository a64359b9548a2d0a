"""Command-line interface: ``symsax {transform,dist,classify,benchmark,report}``."""

import argparse
import json
import logging
import re
import sys

import numpy as np

from .alphabet import breakpoint_table
from .benchmark import BenchmarkConfig, emit_report, load_report, run_benchmark
from .classification import (
    DEFAULT_ALPHABET_GRID,
    METHODS,
    RAW_EUCLIDEAN,
    ExperimentParams,
    evaluate,
)
from .distance import euclidean, symbolic_dist
from .errors import SymsaxError
from .ingest import load_pair, parse_ucr_file
from .representation import E_SAX, as_series, transform, z_normalize

log = logging.getLogger("symsax")


def parse_grid(text):
    """``"3-20"``, ``"3,5,7"`` or a mix such as ``"3-6,10"``."""
    values = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        m = re.fullmatch(r"(\d+)\s*-\s*(\d+)", part)
        if m:
            lo, hi = int(m.group(1)), int(m.group(2))
            values.extend(range(lo, hi + 1))
        else:
            values.append(int(part))
    if not values:
        raise argparse.ArgumentTypeError(f"empty grid: {text!r}")
    return tuple(sorted(set(values)))


def read_series_file(path):
    """All numbers in the file, in order, as one series."""
    with open(path, encoding="utf-8") as fh:
        tokens = re.split(r"[\s,]+", fh.read().strip())
    try:
        return as_series([float(t) for t in tokens if t])
    except ValueError as exc:
        raise SymsaxError(f"{path}: {exc}") from None


def _shared(p, method_default=E_SAX):
    p.add_argument("--data-root", help="UCR archive directory (default: $SYMSAX_DATA_ROOT)")
    p.add_argument("--method", choices=METHODS, default=method_default)
    p.add_argument("--word-length", default=None,
                   help="segment count m; integer, or 'eighth'/'quarter' of the series length")
    p.add_argument("--alphabet-grid", type=parse_grid, default=None,
                   help="alphabet sizes searched on train, e.g. 3-20 (default)")
    p.add_argument("--no-normalize", dest="normalize", action="store_false",
                   help="skip per-series z-normalization")
    p.add_argument("--output", "-o", help="write the result here as well as stdout")
    p.add_argument("--format", choices=("json", "csv", "text"), default=None)
    p.add_argument("--jobs", "-j", type=int, default=None, help="parallel worker processes")


def _word_length(arg, n):
    if arg is None or arg == "eighth":
        return max(1, n // 8)
    if arg == "quarter":
        return max(1, n // 4)
    return int(arg)


def _write(text, path):
    sys.stdout.write(text)
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_transform(args):
    if args.input:
        ds = parse_ucr_file(args.input) if args.labeled else None
        series = list(ds.X) if ds else [read_series_file(args.input)]
        labels = list(ds.labels) if ds else [None]
    else:
        series = [as_series([float(v) for v in re.split(r"[\s,]+", args.values.strip())])]
        labels = [None]
    if args.method == RAW_EUCLIDEAN:
        raise SymsaxError("transform needs a symbolic method")
    table = breakpoint_table(args.alphabet_size)
    fmt = args.format or "text"
    words = [
        transform(s, _word_length(args.word_length, len(s)), table, args.method, args.normalize)
        for s in series
    ]
    if fmt == "json":
        docs = [dict(w.to_dict(), label=lbl, method=args.method) for w, lbl in zip(words, labels)]
        out = json.dumps(docs if len(docs) > 1 else docs[0], indent=2, sort_keys=True) + "\n"
    else:
        out = "".join(
            (f"{lbl}\t{w}\n" if lbl is not None else f"{w}\n") for w, lbl in zip(words, labels)
        )
    _write(out, args.output)
    return 0


def cmd_dist(args):
    s = read_series_file(args.first)
    t = read_series_file(args.second)
    if args.method == RAW_EUCLIDEAN:
        if args.normalize:
            s, t = z_normalize(s), z_normalize(t)
        d = euclidean(s, t)
    else:
        if s.size != t.size:
            raise SymsaxError(f"series lengths differ: {s.size} != {t.size}")
        table = breakpoint_table(args.alphabet_size)
        m = _word_length(args.word_length, s.size)
        d = symbolic_dist(
            transform(s, m, table, args.method, args.normalize),
            transform(t, m, table, args.method, args.normalize),
        )
    _write(f"{d!r}\n", args.output)
    return 0


def cmd_classify(args):
    if args.dataset:
        train, test = load_pair(args.dataset, args.data_root)
    elif args.train and args.test:
        train, test = parse_ucr_file(args.train), parse_ucr_file(args.test)
    else:
        raise SymsaxError("give --dataset, or both --train and --test")
    params = ExperimentParams(
        method=args.method,
        word_length=_word_length(args.word_length, train.series_length),
        normalize=args.normalize,
        alphabet_grid=args.alphabet_grid or DEFAULT_ALPHABET_GRID,
        selection=args.selection,
    )
    result = evaluate(train, test, params)
    doc = json.dumps(result.to_dict(), indent=2, sort_keys=True) + "\n"
    _write(doc, args.output)
    alpha = "-" if result.chosen_alphabet is None else result.chosen_alphabet
    sys.stderr.write(
        f"{result.dataset}: {result.method} m={result.word_length} a={alpha} "
        f"train_error={result.train_error:.3f} test_error={result.test_error:.3f} "
        f"({result.misclassified}/{result.total})\n"
    )
    return 0


def cmd_benchmark(args):
    overrides = {
        "data_root": args.data_root,
        "word_length": args.word_length,
        "alphabet_grid": args.alphabet_grid,
        "jobs": args.jobs,
        "output": args.output,
        "format": args.format,
        "selection": args.selection,
    }
    if args.methods:
        overrides["methods"] = tuple(m.strip() for m in args.methods.split(","))
    if args.datasets:
        overrides["datasets"] = tuple(d.strip() for d in args.datasets.split(",") if d.strip())
    if not args.normalize:
        overrides["normalize"] = False
    if args.config:
        config = BenchmarkConfig.from_file(args.config, **overrides)
    else:
        if "datasets" not in overrides:
            raise SymsaxError("give --datasets or --config")
        config = BenchmarkConfig(**{k: v for k, v in overrides.items() if v is not None})
    report = run_benchmark(config)
    _write(emit_report(report, config.format), config.output)
    if not report.ok:
        failed = [r.dataset for r in report.rows if not r.ok]
        log.error("failed datasets: %s", ", ".join(failed))
        return 1
    return 0


def cmd_report(args):
    report = load_report(args.report)
    _write(emit_report(report, args.format or "text"), args.output)
    return 0 if report.ok else 1


def build_parser():
    parser = argparse.ArgumentParser(prog="symsax", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("transform", help="print classic-SAX or E-SAX words")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("input", nargs="?", help="series file (all numbers form one series)")
    src.add_argument("--values", help="inline comma/space separated values")
    p.add_argument("--labeled", action="store_true",
                   help="treat the input as a UCR file and transform every row")
    p.add_argument("--alphabet-size", "-a", type=int, default=4)
    _shared(p)
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("dist", help="distance between two series files")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--alphabet-size", "-a", type=int, default=4)
    _shared(p)
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("classify", help="train/test evaluation on one dataset")
    p.add_argument("--dataset", help="dataset name under the data root")
    p.add_argument("--train", help="path to a UCR train file")
    p.add_argument("--test", help="path to a UCR test file")
    p.add_argument("--selection", choices=("loocv", "resubstitution"), default="loocv")
    _shared(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("benchmark", help="run the classic-SAX vs E-SAX protocol")
    p.add_argument("--config", help="JSON document with BenchmarkConfig fields")
    p.add_argument("--datasets", help="comma-separated names, or 'all-registry'")
    p.add_argument("--methods", help="comma-separated methods (default: classic-sax,e-sax)")
    p.add_argument("--selection", choices=("loocv", "resubstitution"), default=None)
    _shared(p)
    p.set_defaults(func=cmd_benchmark)

    p = sub.add_parser("report", help="re-render a saved JSON benchmark report")
    p.add_argument("report")
    _shared(p)
    p.set_defaults(func=cmd_report)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.func(args)
    except (SymsaxError, OSError) as exc:
        print(f"symsax: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
