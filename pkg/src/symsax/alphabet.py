"""Gaussian breakpoints, value-to-symbol mapping and the symbol distance table."""

from dataclasses import dataclass
from functools import lru_cache
import math
import string

import numpy as np
from scipy.special import ndtri

from .errors import InvalidInputError, InvalidParameterError

MIN_ALPHABET = 2
MAX_ALPHABET = 26

# Squared cell distances are also held as fixed-point integers with this many
# fractional bits. Integer sums are exact, so two words at the same symbolic
# distance compare equal regardless of summation order or backend.
FIXED_POINT_BITS = 40
FIXED_POINT_SCALE = float(1 << FIXED_POINT_BITS)

LETTERS = string.ascii_lowercase


def check_alphabet_size(alphabet_size):
    if isinstance(alphabet_size, bool) or not isinstance(alphabet_size, (int, np.integer)):
        raise InvalidParameterError(f"alphabet size must be an integer, got {alphabet_size!r}")
    if alphabet_size < MIN_ALPHABET:
        raise InvalidParameterError(
            f"alphabet size {alphabet_size} is below the minimum of {MIN_ALPHABET}"
        )
    if alphabet_size > MAX_ALPHABET:
        raise InvalidParameterError(
            f"alphabet size {alphabet_size} exceeds the maximum of {MAX_ALPHABET}"
        )
    return int(alphabet_size)


def compute_breakpoints(alphabet_size):
    """Return the ``a - 1`` equiprobable cut points of the standard normal.

    The k-th breakpoint is the ``k / a`` quantile of N(0, 1), so the ``a``
    regions between consecutive breakpoints carry equal probability mass.

    Parameters
    ----------
    alphabet_size : int
        Number of symbols, between 2 and 26.

    Returns
    -------
    np.ndarray
        Strictly increasing float64 array of length ``alphabet_size - 1``.
    """
    a = check_alphabet_size(alphabet_size)
    k = np.arange(1, a, dtype=np.float64)
    bp = ndtri(k / a)
    # enforce exact antisymmetry; ndtri is accurate to a few ulp on each side
    half = (a - 1) // 2
    for i in range(half):
        bp[a - 2 - i] = -bp[i]
    if a % 2 == 0:
        bp[a // 2 - 1] = 0.0
    return bp


def build_lookup_table(breakpoints):
    """Symbol-pair distance matrix for the given breakpoints.

    Entry ``[r, c]`` (0-based) is zero for equal or adjacent symbols and
    otherwise the gap between the upper edge of the lower symbol's region and
    the lower edge of the higher symbol's region.
    """
    bp = np.asarray(breakpoints, dtype=np.float64)
    if bp.ndim != 1:
        raise InvalidInputError("breakpoints must be one-dimensional")
    if not np.all(np.isfinite(bp)):
        raise InvalidInputError("breakpoints must be finite")
    if bp.size > 1 and not np.all(np.diff(bp) > 0):
        raise InvalidInputError("breakpoints must be strictly increasing")
    a = bp.size + 1
    lookup = np.zeros((a, a), dtype=np.float64)
    for r in range(a):
        for c in range(r + 2, a):
            lookup[r, c] = bp[c - 1] - bp[r]
            lookup[c, r] = lookup[r, c]
    return lookup


@dataclass(frozen=True, eq=False)
class BreakpointTable:
    """Breakpoints and distance lookup for one alphabet size.

    Arrays are read-only. ``lookup_fixed`` holds ``lookup ** 2`` scaled by
    ``2 ** FIXED_POINT_BITS`` and rounded to int64.
    """

    alphabet_size: int
    breakpoints: np.ndarray
    lookup: np.ndarray
    lookup_fixed: np.ndarray

    def __repr__(self):
        return f"BreakpointTable(alphabet_size={self.alphabet_size})"

    def symbol(self, value):
        return symbol_for_value(value, self)

    def symbolize(self, values):
        return symbolize(values, self)


@lru_cache(maxsize=None)
def breakpoint_table(alphabet_size):
    """Cached :class:`BreakpointTable` for ``alphabet_size``."""
    a = check_alphabet_size(alphabet_size)
    bp = compute_breakpoints(a)
    lookup = build_lookup_table(bp)
    fixed = np.rint(lookup * lookup * FIXED_POINT_SCALE).astype(np.int64)
    for arr in (bp, lookup, fixed):
        arr.setflags(write=False)
    return BreakpointTable(a, bp, lookup, fixed)


def symbol_for_value(value, table):
    """1-based symbol index of a single z-score value.

    A value equal to a breakpoint belongs to the region above it.
    """
    v = float(value)
    if not math.isfinite(v):
        raise InvalidInputError(f"cannot discretize non-finite value {value!r}")
    return int(np.searchsorted(table.breakpoints, v, side="right")) + 1


def symbolize(values, table):
    """Vectorized :func:`symbol_for_value`; returns an int64 array of 1-based symbols."""
    arr = np.asarray(values, dtype=np.float64)
    if not np.all(np.isfinite(arr)):
        raise InvalidInputError("cannot discretize non-finite values")
    return np.searchsorted(table.breakpoints, arr, side="right").astype(np.int64) + 1


def to_letters(symbols):
    return "".join(LETTERS[s - 1] for s in symbols)


def from_letters(text):
    text = text.strip().lower()
    bad = [ch for ch in text if ch not in LETTERS]
    if bad:
        raise InvalidInputError(f"not a symbol letter: {bad[0]!r}")
    return tuple(LETTERS.index(ch) + 1 for ch in text)
