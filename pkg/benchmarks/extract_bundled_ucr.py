"""Build a small UCR-layout data root from datasets bundled in PyPI wheels.

The full archive needs registration, but a few of the benchmark datasets ship
inside common time series packages. This script unpacks them from wheels
(fetched with ``pip download --no-deps``, or given with ``--wheel-dir``) and
writes ``<out>/<Name>/<Name>_TRAIN.tsv`` / ``_TEST.tsv``.

    python benchmarks/extract_bundled_ucr.py --out ~/ucr-bundled
    export SYMSAX_DATA_ROOT=~/ucr-bundled
"""

import argparse
import glob
import io
import os
import subprocess
import sys
import tempfile
import zipfile

import numpy as np

# wheel stem -> list of (member pattern, dataset name, reader)
SOURCES = {
    "sktime": [
        ("sktime/datasets/data/{name}/{name}_{split}.ts", n, "ts")
        for n in ("ArrowHead", "GunPoint", "ItalyPowerDemand", "OSULeaf")
    ],
    "pyts": [("pyts/datasets/cached_datasets/UCR/Coffee/Coffee_{split}.txt", "Coffee", "ucr")],
    "tslearn": [("tslearn/.cached_datasets/Trace.npz", "Trace", "npz")],
}


def _read_ts(text):
    labels, rows, in_data = [], [], False
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if line.lower() == "@data":
            in_data = True
            continue
        if in_data:
            values, label = line.rsplit(":", 1)
            labels.append(label)
            rows.append([float(v) for v in values.split(",")])
    return labels, rows


def _read_ucr(text):
    labels, rows = [], []
    for line in text.splitlines():
        fields = line.replace(",", " ").split()
        if fields:
            f = float(fields[0])
            labels.append(str(int(f)) if f == int(f) else fields[0])
            rows.append([float(v) for v in fields[1:]])
    return labels, rows


def _write(path, labels, rows):
    with open(path, "w", encoding="utf-8") as fh:
        for lbl, row in zip(labels, rows):
            fh.write("\t".join([str(lbl), *(repr(float(v)) for v in row)]) + "\n")


def extract(wheel, stem, out):
    done = []
    with zipfile.ZipFile(wheel) as zf:
        for pattern, name, kind in SOURCES[stem]:
            os.makedirs(os.path.join(out, name), exist_ok=True)
            if kind == "npz":
                arr = np.load(io.BytesIO(zf.read(pattern)))
                for split in ("train", "test"):
                    X = arr[f"X_{split}"][:, :, 0]
                    y = [str(int(v)) if float(v) == int(v) else str(v) for v in arr[f"y_{split}"]]
                    _write(os.path.join(out, name, f"{name}_{split.upper()}.tsv"), y, X)
            else:
                reader = _read_ts if kind == "ts" else _read_ucr
                for split in ("TRAIN", "TEST"):
                    text = zf.read(pattern.format(name=name, split=split)).decode("utf-8")
                    labels, rows = reader(text)
                    _write(os.path.join(out, name, f"{name}_{split}.tsv"), labels, rows)
            done.append(name)
    return done


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--out", required=True)
    p.add_argument("--wheel-dir", help="directory already holding the wheels")
    args = p.parse_args(argv)
    wheel_dir = args.wheel_dir or tempfile.mkdtemp(prefix="ucr-wheels-")
    for stem in SOURCES:
        if not glob.glob(os.path.join(wheel_dir, f"{stem}-*.whl")):
            subprocess.run(
                [sys.executable, "-m", "pip", "download", "--no-deps", "-d", wheel_dir, stem],
                check=True,
            )
    names = []
    for stem in SOURCES:
        wheel = sorted(glob.glob(os.path.join(wheel_dir, f"{stem}-*.whl")))[-1]
        names += extract(wheel, stem, args.out)
    print("extracted:", ", ".join(sorted(names)))


if __name__ == "__main__":
    main()
