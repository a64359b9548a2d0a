"""Normalization, segmentation, PAA, classic-SAX and E-SAX words."""

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from .alphabet import check_alphabet_size, symbolize, to_letters
from .errors import InvalidInputError, InvalidParameterError

DEGENERATE_STD = 1e-12

CLASSIC_SAX = "classic-sax"
E_SAX = "e-sax"
SYMBOLIC_METHODS = (CLASSIC_SAX, E_SAX)


def as_series(values):
    """Validate and convert ``values`` to a 1-D float64 array."""
    arr = np.asarray(values, dtype=np.float64)
    if arr.ndim != 1:
        raise InvalidInputError(f"a series must be one-dimensional, got shape {arr.shape}")
    if arr.size < 1:
        raise InvalidInputError("a series must contain at least one observation")
    if not np.all(np.isfinite(arr)):
        raise InvalidInputError("series contains non-finite values")
    return arr


def as_batch(values):
    """Validate a 2-D (instances x length) array of series."""
    arr = np.asarray(values, dtype=np.float64)
    if arr.ndim == 1:
        arr = arr[np.newaxis, :]
    if arr.ndim != 2 or arr.shape[1] < 1:
        raise InvalidInputError(f"expected a 2-D array of series, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise InvalidInputError("series contain non-finite values")
    return arr


def z_normalize(series, *, with_flag=False):
    """Rescale to zero mean and unit population standard deviation.

    A constant series (std below 1e-12) maps to all zeros. With
    ``with_flag=True`` a ``(normalized, degenerate)`` pair is returned.
    """
    x = as_series(series)
    std = x.std()
    degenerate = bool(std < DEGENERATE_STD)
    out = np.zeros_like(x) if degenerate else (x - x.mean()) / std
    return (out, degenerate) if with_flag else out


def z_normalize_batch(X):
    X = as_batch(X)
    mean = X.mean(axis=1, keepdims=True)
    std = X.std(axis=1, keepdims=True)
    flat = std < DEGENERATE_STD
    out = (X - mean) / np.where(flat, 1.0, std)
    out[flat[:, 0]] = 0.0
    return out


@dataclass(frozen=True)
class SegmentLayout:
    """Partition of ``range(n)`` into ``m`` contiguous, near-equal segments."""

    n: int
    m: int
    bounds: tuple

    @property
    def starts(self):
        return np.array([b[0] for b in self.bounds], dtype=np.intp)

    def sizes(self):
        return np.array([hi - lo for lo, hi in self.bounds], dtype=np.intp)


@lru_cache(maxsize=1024)
def segment_layout(n, m):
    """Segment ``i`` covers ``[floor(i*n/m), floor((i+1)*n/m))``."""
    n, m = int(n), int(m)
    if m < 1:
        raise InvalidParameterError(f"word length must be at least 1, got {m}")
    if m > n:
        raise InvalidParameterError(f"word length {m} exceeds series length {n}")
    cuts = [(i * n) // m for i in range(m + 1)]
    return SegmentLayout(n, m, tuple(zip(cuts[:-1], cuts[1:])))


def _check_layout(x, layout):
    if x.shape[-1] != layout.n:
        raise InvalidInputError(
            f"layout built for length {layout.n}, series has length {x.shape[-1]}"
        )


def paa_transform(series, layout):
    """Mean of each segment."""
    x = as_series(series)
    _check_layout(x, layout)
    return np.add.reduceat(x, layout.starts) / layout.sizes()


class ExtremeSummary(NamedTuple):
    p_min: float
    p_max: float
    p_mean: float


def extreme_midpoints(series, layout):
    """Per-segment minimum, maximum and their midpoint."""
    x = as_series(series)
    _check_layout(x, layout)
    lo = np.minimum.reduceat(x, layout.starts)
    hi = np.maximum.reduceat(x, layout.starts)
    mid = (lo + hi) / 2
    return [ExtremeSummary(float(a), float(b), float(c)) for a, b, c in zip(lo, hi, mid)]


def paa_batch(X, layout):
    X = as_batch(X)
    _check_layout(X, layout)
    return np.add.reduceat(X, layout.starts, axis=1) / layout.sizes()


def midpoint_batch(X, layout):
    X = as_batch(X)
    _check_layout(X, layout)
    starts = layout.starts
    lo = np.minimum.reduceat(X, starts, axis=1)
    hi = np.maximum.reduceat(X, starts, axis=1)
    return (lo + hi) / 2


@dataclass(frozen=True)
class SymbolicWord:
    """A discretized series: ``m`` 1-based symbols over an alphabet of ``a``."""

    symbols: tuple
    alphabet_size: int
    source_length: int

    def __post_init__(self):
        syms = tuple(int(s) for s in self.symbols)
        object.__setattr__(self, "symbols", syms)
        a = check_alphabet_size(self.alphabet_size)
        if not syms:
            raise InvalidInputError("a word needs at least one symbol")
        if any(s < 1 or s > a for s in syms):
            raise InvalidInputError(f"symbols must lie in [1, {a}]")
        if self.source_length < len(syms):
            raise InvalidInputError(
                f"source length {self.source_length} shorter than word length {len(syms)}"
            )

    def __len__(self):
        return len(self.symbols)

    def __str__(self):
        return to_letters(self.symbols)

    def to_dict(self):
        return {
            "symbols": list(self.symbols),
            "alphabet_size": self.alphabet_size,
            "source_length": self.source_length,
        }


def _reduce(X, m, method):
    layout = segment_layout(X.shape[1], m)
    if method == CLASSIC_SAX:
        return paa_batch(X, layout)
    if method == E_SAX:
        return midpoint_batch(X, layout)
    raise InvalidParameterError(f"unknown symbolic method {method!r}")


def encode_batch(X, m, table, method, normalize=True):
    """Symbols for every row of ``X`` as an int64 array of shape (N, m)."""
    X = as_batch(X)
    if normalize:
        X = z_normalize_batch(X)
    return symbolize(_reduce(X, m, method), table)


def _transform(series, m, table, normalize, method):
    x = as_series(series)
    symbols = encode_batch(x[np.newaxis, :], m, table, method, normalize)[0]
    return SymbolicWord(tuple(symbols), table.alphabet_size, x.size)


def classic_sax_transform(series, m, table, normalize=True):
    """Classic-SAX word: segment means discretized against ``table``."""
    return _transform(series, m, table, normalize, CLASSIC_SAX)


def esax_transform(series, m, table, normalize=True):
    """E-SAX word: midpoints of each segment's extremes, discretized against ``table``.

    Uses the same segment boundaries and alphabet as :func:`classic_sax_transform`,
    so both words have length ``m``.
    """
    return _transform(series, m, table, normalize, E_SAX)


def transform(series, m, table, method, normalize=True):
    return _transform(series, m, table, normalize, method)
