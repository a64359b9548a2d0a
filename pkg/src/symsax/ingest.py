"""Reading and writing UCR-archive-format dataset files."""

import logging
import math
import os
import warnings
from pathlib import Path

import numpy as np

from .classification import LabeledDataset
from .errors import DatasetNotFoundError, FormatError, InvalidParameterError
from .registry import ALIASES, lookup

logger = logging.getLogger(__name__)

DATA_ROOT_ENV = "SYMSAX_DATA_ROOT"
EXTENSIONS = ("", ".tsv", ".txt", ".csv")


class RegistryMismatchWarning(UserWarning):
    """Loaded data disagrees with the built-in metadata for a known dataset."""


def _detect_separator(line):
    if "\t" in line:
        return "\t"
    if "," in line:
        return ","
    return None  # whitespace, as in the oldest archive files


def _split(line, sep):
    fields = line.split(sep) if sep is not None else line.split()
    return [f.strip() for f in fields]


def parse_ucr_file(path, name=None):
    """Parse a UCR file: one instance per nonempty line, label first.

    The separator (tab or comma, else runs of whitespace) is detected from the
    first data line and applied to the whole file.

    Raises
    ------
    OSError
        The file cannot be read.
    FormatError
        Empty file, ragged rows, or a non-numeric / non-finite value.
    """
    path = Path(path)
    with open(path, encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    sep = None
    width = None
    labels, rows = [], []
    for lineno, raw in enumerate(lines, start=1):
        if not raw.strip():
            continue
        if width is None:
            sep = _detect_separator(raw)
        fields = _split(raw.strip(), sep)
        if width is None:
            width = len(fields)
            if width < 2:
                raise FormatError("a row needs a label and at least one value", path, lineno)
        elif len(fields) != width:
            raise FormatError(
                f"expected {width} fields, found {len(fields)}", path, lineno
            )
        values = []
        for col, text in enumerate(fields[1:], start=2):
            try:
                v = float(text)
            except ValueError:
                raise FormatError(f"not a number: {text!r}", path, lineno, col) from None
            if not math.isfinite(v):
                raise FormatError(f"non-finite value {text!r}", path, lineno, col)
            values.append(v)
        labels.append(fields[0])
        rows.append(values)
    if not rows:
        raise FormatError("file contains no data rows", path)
    return LabeledDataset(labels, np.array(rows, dtype=np.float64), name or path.stem)


def write_ucr_file(dataset, path, sep=","):
    """Write ``dataset`` in UCR layout using shortest round-trip float text."""
    with open(path, "w", encoding="utf-8") as fh:
        for label, row in zip(dataset.labels, dataset.X):
            fh.write(sep.join([label, *(repr(float(v)) for v in row)]) + "\n")


def resolve_data_root(root=None):
    root = root or os.environ.get(DATA_ROOT_ENV)
    if not root:
        raise InvalidParameterError(
            f"no data root given; pass --data-root or set {DATA_ROOT_ENV}"
        )
    return Path(root)


def _candidate_names(name):
    names = [name]
    canonical = ALIASES.get(name, name)
    for alt in [canonical, *(k for k, v in ALIASES.items() if v == canonical)]:
        if alt not in names:
            names.append(alt)
    return names


def _find_split(root, name, split, probed):
    for dirname in _candidate_names(name):
        for fname in _candidate_names(name):
            for ext in EXTENSIONS:
                p = root / dirname / f"{fname}_{split}{ext}"
                probed.append(p)
                if p.is_file():
                    return p
    return None


def validate_against_registry(name, train, test):
    """Warn about each disagreement with the registry; return the messages."""
    meta = lookup(name)
    if meta is None:
        return []
    problems = []
    checks = [
        ("train size", meta.train_size, len(train)),
        ("test size", meta.test_size, len(test)),
        ("series length", meta.series_length, train.series_length),
        ("class count", meta.class_count, len(set(train.classes) | set(test.classes))),
    ]
    for what, expected, got in checks:
        if expected != got:
            problems.append(f"{name}: {what} is {got}, registry says {expected}")
    for msg in problems:
        warnings.warn(msg, RegistryMismatchWarning, stacklevel=3)
    return problems


def load_pair(name, root=None):
    """Load ``<root>/<name>/<name>_TRAIN`` and ``_TEST`` (extension optional)."""
    root = resolve_data_root(root)
    probed = []
    train_path = _find_split(root, name, "TRAIN", probed)
    test_path = _find_split(root, name, "TEST", probed)
    if train_path is None or test_path is None:
        raise DatasetNotFoundError(name, probed)
    train = parse_ucr_file(train_path, name)
    test = parse_ucr_file(test_path, name)
    logger.debug("loaded %s: %d train, %d test", name, len(train), len(test))
    validate_against_registry(name, train, test)
    return train, test
