"""Lookup-table distance between symbolic words, and raw Euclidean distance."""

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .alphabet import FIXED_POINT_SCALE, BreakpointTable, breakpoint_table
from .errors import IncompatibleSeriesError, IncompatibleWordsError, InvalidInputError
from .representation import as_series


@dataclass(frozen=True)
class SymbolicDistanceContext:
    """Table plus the source/word lengths that set the ``sqrt(n/m)`` factor."""

    table: BreakpointTable
    source_length: int
    word_length: int

    def __post_init__(self):
        if not 1 <= self.word_length <= self.source_length:
            raise InvalidInputError(
                f"need 1 <= word_length <= source_length, got "
                f"m={self.word_length}, n={self.source_length}"
            )

    @property
    def scale(self):
        return self.source_length / self.word_length

    @classmethod
    def for_word(cls, word):
        return cls(breakpoint_table(word.alphabet_size), word.source_length, len(word))

    def check(self, word):
        if len(word) != self.word_length:
            raise IncompatibleWordsError("word_length", len(word), self.word_length)
        if word.alphabet_size != self.table.alphabet_size:
            raise IncompatibleWordsError(
                "alphabet_size", word.alphabet_size, self.table.alphabet_size
            )
        if word.source_length != self.source_length:
            raise IncompatibleWordsError(
                "source_length", word.source_length, self.source_length
            )

    def finish(self, fixed_sum):
        """Convert fixed-point squared sums to distances."""
        return np.sqrt(self.scale * (np.asarray(fixed_sum, dtype=np.float64) / FIXED_POINT_SCALE))


def _check_pair(s, t):
    for field in ("word_length", "alphabet_size", "source_length"):
        left = len(s) if field == "word_length" else getattr(s, field)
        right = len(t) if field == "word_length" else getattr(t, field)
        if left != right:
            raise IncompatibleWordsError(field, left, right)


def symbolic_dist(word_s, word_t, ctx=None):
    """Distance between two words of equal shape.

    ``sqrt(n/m * sum_i cell(s_i, t_i)**2)`` where ``cell`` reads the lookup
    table. The same routine serves classic-SAX and E-SAX words; for E-SAX
    words the result is not a lower bound on the Euclidean distance.
    """
    _check_pair(word_s, word_t)
    if ctx is None:
        ctx = SymbolicDistanceContext.for_word(word_s)
    ctx.check(word_s)
    lut = ctx.table.lookup_fixed
    total = sum(int(lut[a - 1, b - 1]) for a, b in zip(word_s.symbols, word_t.symbols))
    return float(ctx.finish(total))


def euclidean(series_s, series_t):
    s = as_series(series_s)
    t = as_series(series_t)
    if s.size != t.size:
        raise IncompatibleSeriesError(f"series lengths differ: {s.size} != {t.size}")
    return float(np.sqrt(np.sum((s - t) ** 2)))


def symbolic_fixed_matrix(codes_a, codes_b, table):
    """Pairwise fixed-point squared sums between two batches of 1-based symbol rows."""
    A = np.ascontiguousarray(codes_a, dtype=np.int64) - 1
    B = np.ascontiguousarray(codes_b, dtype=np.int64) - 1
    if A.shape[1] != B.shape[1]:
        raise IncompatibleWordsError("word_length", A.shape[1], B.shape[1])
    return _kernels.symbolic_cross(A, B, table.lookup_fixed)


def symbolic_matrix(codes_a, codes_b, ctx):
    """Pairwise symbolic distances between two batches of words."""
    return ctx.finish(symbolic_fixed_matrix(codes_a, codes_b, ctx.table))


def euclidean_sq_matrix(X, Y):
    X = np.ascontiguousarray(X, dtype=np.float64)
    Y = np.ascontiguousarray(Y, dtype=np.float64)
    if X.shape[1] != Y.shape[1]:
        raise IncompatibleSeriesError(f"series lengths differ: {X.shape[1]} != {Y.shape[1]}")
    return _kernels.euclidean_cross(X, Y)


def euclidean_matrix(X, Y):
    return np.sqrt(euclidean_sq_matrix(X, Y))


def symbolic_paired(codes_a, codes_b, ctx):
    """Row-by-row distances between two equally sized batches of words."""
    A = np.asarray(codes_a, dtype=np.int64) - 1
    B = np.asarray(codes_b, dtype=np.int64) - 1
    if A.shape != B.shape:
        raise IncompatibleWordsError("shape", A.shape, B.shape)
    return ctx.finish(ctx.table.lookup_fixed[A, B].sum(axis=1))
