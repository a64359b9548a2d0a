"""Multi-dataset benchmark runs and their reports (JSON, CSV, text)."""

from concurrent.futures import ProcessPoolExecutor
import csv
from dataclasses import asdict, dataclass, field
from decimal import ROUND_HALF_UP, Decimal
import io
import json
import logging
import multiprocessing
import platform
import time
from typing import Optional, Union

from . import _accel
from .classification import (
    DEFAULT_ALPHABET_GRID,
    METHODS,
    EvalResult,
    ExperimentParams,
    Tally,
    compare_methods,
    evaluate,
)
from .errors import InvalidParameterError
from .ingest import load_pair
from .registry import REGISTRY
from .representation import CLASSIC_SAX, E_SAX

logger = logging.getLogger(__name__)

ALL_REGISTRY = "all-registry"
WORD_LENGTH_POLICIES = {
    "eighth": lambda n: max(1, n // 8),
    "quarter": lambda n: max(1, n // 4),
}
CSV_HEADER = ("dataset", "classic_sax_error", "e_sax_error", "winner")


def resolve_word_length(policy, series_length):
    if isinstance(policy, str):
        if policy.isdigit():
            return int(policy)
        try:
            return WORD_LENGTH_POLICIES[policy](series_length)
        except KeyError:
            raise InvalidParameterError(
                f"unknown word-length policy {policy!r}; use an integer or one of "
                f"{sorted(WORD_LENGTH_POLICIES)}"
            ) from None
    return int(policy)


@dataclass(frozen=True)
class BenchmarkConfig:
    datasets: tuple
    methods: tuple = (CLASSIC_SAX, E_SAX)
    word_length: Union[int, str] = "eighth"
    alphabet_grid: tuple = DEFAULT_ALPHABET_GRID
    normalize: bool = True
    selection: str = "loocv"
    jobs: int = 1
    data_root: Optional[str] = None
    output: Optional[str] = None
    format: str = "json"

    def __post_init__(self):
        ds = self.datasets
        if isinstance(ds, str):
            ds = (ds,)
        if tuple(ds) == (ALL_REGISTRY,):
            ds = tuple(row.name for row in REGISTRY)
        object.__setattr__(self, "datasets", tuple(ds))
        object.__setattr__(self, "methods", tuple(self.methods))
        object.__setattr__(self, "alphabet_grid", tuple(int(a) for a in self.alphabet_grid))
        if not self.datasets:
            raise InvalidParameterError("benchmark needs at least one dataset")
        if not self.methods:
            raise InvalidParameterError("benchmark needs at least one method")
        for method in self.methods:
            if method not in METHODS:
                raise InvalidParameterError(f"unknown method {method!r}")
        if self.jobs < 1:
            raise InvalidParameterError("jobs must be at least 1")
        if self.format not in ("json", "csv", "text"):
            raise InvalidParameterError(f"unknown format {self.format!r}")
        if isinstance(self.word_length, str):
            resolve_word_length(self.word_length, 1 << 20)
        # validates method/grid/selection combinations early
        self.params_for(1 << 20)

    def params_for(self, series_length, method=E_SAX):
        return ExperimentParams(
            method=method,
            word_length=resolve_word_length(self.word_length, series_length),
            normalize=self.normalize,
            alphabet_grid=self.alphabet_grid,
            selection=self.selection,
        )

    @classmethod
    def from_file(cls, path, **overrides):
        """Read a JSON config document with the same field names."""
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
        unknown = set(doc) - set(cls.__dataclass_fields__)
        if unknown:
            raise InvalidParameterError(f"unknown config keys: {sorted(unknown)}")
        doc.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**doc)

    def echo(self):
        d = asdict(self)
        d["datasets"] = list(self.datasets)
        d["methods"] = list(self.methods)
        d["alphabet_grid"] = list(self.alphabet_grid)
        for k in ("jobs", "output", "format", "data_root"):
            d.pop(k)
        return d


@dataclass
class ReportRow:
    dataset: str
    results: dict = field(default_factory=dict)  # method -> EvalResult
    error: Optional[str] = None

    @property
    def ok(self):
        return self.error is None

    def test_error(self, method):
        r = self.results.get(method)
        return None if r is None else r.test_error

    @property
    def winner(self):
        if not self.ok:
            return "failed"
        c, e = self.test_error(CLASSIC_SAX), self.test_error(E_SAX)
        if c is None or e is None:
            return ""
        if c < e:
            return CLASSIC_SAX
        if e < c:
            return E_SAX
        return "tie"

    def to_dict(self):
        return {
            "dataset": self.dataset,
            "classic_sax_error": self.test_error(CLASSIC_SAX),
            "e_sax_error": self.test_error(E_SAX),
            "winner": self.winner,
            "error": self.error,
            "results": {m: r.to_dict() for m, r in sorted(self.results.items())},
        }


@dataclass
class EvalReport:
    rows: list
    config: dict
    runtime: dict = field(default_factory=dict)

    @property
    def tally(self):
        pairs = [
            (r.results[CLASSIC_SAX], r.results[E_SAX])
            for r in self.rows
            if r.ok and CLASSIC_SAX in r.results and E_SAX in r.results
        ]
        return compare_methods(pairs)

    @property
    def ok(self):
        return all(r.ok for r in self.rows)

    def to_dict(self, include_runtime=True):
        doc = {
            "config": self.config,
            "rows": [r.to_dict() for r in self.rows],
            "tally": self.tally._asdict(),
        }
        if include_runtime:
            doc["runtime"] = self.runtime
        return doc

    @classmethod
    def from_dict(cls, doc):
        rows = []
        for rd in doc["rows"]:
            results = {m: EvalResult(**r) for m, r in rd.get("results", {}).items()}
            rows.append(ReportRow(rd["dataset"], results, rd.get("error")))
        return cls(rows, doc.get("config", {}), doc.get("runtime", {}))


_PAIR_CACHE = {}


def _load_cached(name, root):
    key = (name, str(root))
    if key not in _PAIR_CACHE:
        _PAIR_CACHE.clear()  # units arrive grouped by dataset
        _PAIR_CACHE[key] = load_pair(name, root)
    return _PAIR_CACHE[key]


def _run_unit(unit):
    """Evaluate one (dataset, method) pair; never raises."""
    config, name, method = unit
    t0 = time.perf_counter()
    try:
        train, test = _load_cached(name, config.data_root)
        params = config.params_for(train.series_length, method)
        result = evaluate(train, test, params)
        result.dataset = name
        return name, method, result, None, time.perf_counter() - t0
    except Exception as exc:  # a failed dataset must not abort the run
        logger.warning("%s / %s failed: %s", name, method, exc)
        return name, method, None, f"{type(exc).__name__}: {exc}", time.perf_counter() - t0


def run_benchmark(config):
    """Evaluate every (dataset, method) unit and assemble an :class:`EvalReport`.

    Units run in a process pool when ``config.jobs > 1``; results are slotted
    by position, so the report does not depend on completion order.
    """
    units = [(config, name, method) for name in config.datasets for method in config.methods]
    started = time.time()
    t0 = time.perf_counter()
    if config.jobs > 1 and len(units) > 1:
        # fork is unsafe once the OpenMP threading layer has started
        ctx = multiprocessing.get_context("spawn")
        with ProcessPoolExecutor(max_workers=config.jobs, mp_context=ctx) as pool:
            outcomes = list(pool.map(_run_unit, units))
    else:
        outcomes = [_run_unit(u) for u in units]
    rows = {name: ReportRow(name) for name in config.datasets}
    timings = {}
    for name, method, result, err, secs in outcomes:
        row = rows[name]
        if err is not None:
            row.error = err if row.error is None else f"{row.error}; {err}"
        else:
            row.results[method] = result
        timings[f"{name}/{method}"] = round(secs, 4)
    runtime = {
        "started_unix": round(started, 3),
        "elapsed_seconds": round(time.perf_counter() - t0, 4),
        "unit_seconds": timings,
        "backend": _accel.BACKEND,
        "jobs": config.jobs,
        "python": platform.python_version(),
    }
    return EvalReport([rows[n] for n in config.datasets], config.echo(), runtime)


def format_error(value):
    """Three decimals, halves rounded away from zero."""
    if value is None:
        return ""
    return str(Decimal(repr(float(value))).quantize(Decimal("0.001"), rounding=ROUND_HALF_UP))


def tally_line(tally):
    return f"classic-SAX: {tally.wins_classic}  E-SAX: {tally.wins_esax}  ties: {tally.ties}"


def _to_csv(report):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in report.rows:
        w.writerow(
            [r.dataset, format_error(r.test_error(CLASSIC_SAX)), format_error(r.test_error(E_SAX)), r.winner]
        )
    return buf.getvalue()


def parse_report_csv(text):
    """Rows of a CSV report as dicts with errors as floats (or None)."""
    reader = csv.DictReader(io.StringIO(text))
    if tuple(reader.fieldnames or ()) != CSV_HEADER:
        raise InvalidParameterError(f"unexpected CSV header {reader.fieldnames!r}")
    rows = []
    for rec in reader:
        for key in ("classic_sax_error", "e_sax_error"):
            rec[key] = float(rec[key]) if rec[key] else None
        rows.append(rec)
    return rows


def render_csv_rows(rows):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for rec in rows:
        w.writerow(
            [rec["dataset"], format_error(rec["classic_sax_error"]), format_error(rec["e_sax_error"]), rec["winner"]]
        )
    return buf.getvalue()


def _to_text(report):
    header = ("Dataset", "classic-SAX", "E-SAX")
    body = []
    for r in report.rows:
        if not r.ok:
            body.append((r.dataset, "FAILED", r.error or ""))
            continue
        c = format_error(r.test_error(CLASSIC_SAX)) or "-"
        e = format_error(r.test_error(E_SAX)) or "-"
        if r.winner == CLASSIC_SAX:
            c += "*"
        elif r.winner == E_SAX:
            e += "*"
        body.append((r.dataset, c, e))
    widths = [max(len(row[i]) for row in [header, *body]) for i in range(3)]
    lines = ["  ".join(cell.ljust(widths[i]) for i, cell in enumerate(header)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    for row in body:
        lines.append("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip())
    lines.append("")
    lines.append(tally_line(report.tally))
    return "\n".join(lines) + "\n"


def emit_report(report, fmt="json", path=None, include_runtime=True):
    """Serialize ``report``; also write it to ``path`` when given."""
    if fmt == "json":
        doc = json.dumps(report.to_dict(include_runtime), indent=2, sort_keys=True) + "\n"
    elif fmt == "csv":
        doc = _to_csv(report)
    elif fmt == "text":
        doc = _to_text(report)
    else:
        raise InvalidParameterError(f"unknown report format {fmt!r}")
    if path is not None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(doc)
    return doc


def load_report(path):
    with open(path, encoding="utf-8") as fh:
        return EvalReport.from_dict(json.load(fh))
