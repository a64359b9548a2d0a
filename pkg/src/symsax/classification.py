"""1NN classification, leave-one-out error, alphabet-size selection and evaluation."""

from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from .alphabet import breakpoint_table, check_alphabet_size, symbolize
from .distance import (
    SymbolicDistanceContext,
    euclidean_sq_matrix,
    symbolic_fixed_matrix,
)
from .errors import InvalidInputError, InvalidParameterError
from .representation import (
    CLASSIC_SAX,
    E_SAX,
    SYMBOLIC_METHODS,
    _reduce,
    as_batch,
    z_normalize_batch,
)

RAW_EUCLIDEAN = "raw-euclidean"
METHODS = (CLASSIC_SAX, E_SAX, RAW_EUCLIDEAN)
DEFAULT_ALPHABET_GRID = tuple(range(3, 21))
SELECTION_MODES = ("loocv", "resubstitution")

_INT_MAX = np.iinfo(np.int64).max


class LabeledDataset:
    """Equal-length labeled series. Labels are opaque strings.

    Parameters
    ----------
    labels : sequence of str
    series : 2-D array-like, one row per instance
    name : str
    """

    def __init__(self, labels, series, name=""):
        X = as_batch(series).copy()
        labels = tuple(str(lbl) for lbl in labels)
        if len(labels) != X.shape[0]:
            raise InvalidInputError(
                f"{len(labels)} labels for {X.shape[0]} series in dataset {name!r}"
            )
        X.setflags(write=False)
        self.name = name
        self.labels = labels
        self.X = X

    @classmethod
    def from_instances(cls, instances, name=""):
        instances = list(instances)
        if not instances:
            raise InvalidInputError("a dataset needs at least one instance")
        lengths = {len(s) for _, s in instances}
        if len(lengths) != 1:
            raise InvalidInputError(f"series lengths differ within dataset: {sorted(lengths)}")
        return cls([lbl for lbl, _ in instances], [list(s) for _, s in instances], name)

    @property
    def instances(self):
        return list(zip(self.labels, self.X))

    @property
    def series_length(self):
        return self.X.shape[1]

    @property
    def classes(self):
        return sorted(set(self.labels))

    def __len__(self):
        return len(self.labels)

    def __repr__(self):
        return (
            f"LabeledDataset(name={self.name!r}, size={len(self)}, "
            f"length={self.series_length}, classes={len(self.classes)})"
        )


@dataclass(frozen=True)
class ExperimentParams:
    """Settings for one classification run.

    ``word_length=None`` means ``max(1, length // 8)``. ``alphabet_size`` is
    used by :func:`loocv_error`; :func:`evaluate` picks it from
    ``alphabet_grid`` instead. ``word_length_grid`` enables joint (m, a)
    selection on train, an extension beyond alphabet-only selection.
    """

    method: str = E_SAX
    word_length: Optional[int] = None
    alphabet_size: Optional[int] = None
    normalize: bool = True
    alphabet_grid: tuple = DEFAULT_ALPHABET_GRID
    selection: str = "loocv"
    word_length_grid: Optional[tuple] = None

    def __post_init__(self):
        if self.method not in METHODS:
            raise InvalidParameterError(f"unknown method {self.method!r}; choose from {METHODS}")
        if self.selection not in SELECTION_MODES:
            raise InvalidParameterError(f"unknown selection mode {self.selection!r}")
        grid = tuple(int(a) for a in self.alphabet_grid)
        if not grid:
            raise InvalidParameterError("alphabet grid is empty")
        for a in grid:
            check_alphabet_size(a)
        object.__setattr__(self, "alphabet_grid", tuple(sorted(set(grid))))
        if self.alphabet_size is not None:
            check_alphabet_size(self.alphabet_size)
        if self.word_length is not None and self.word_length < 1:
            raise InvalidParameterError(f"word length must be positive, got {self.word_length}")
        if self.word_length_grid is not None:
            mg = tuple(sorted(set(int(m) for m in self.word_length_grid)))
            if not mg or mg[0] < 1:
                raise InvalidParameterError("word length grid must hold positive integers")
            object.__setattr__(self, "word_length_grid", mg)

    @property
    def symbolic(self):
        return self.method in SYMBOLIC_METHODS

    def resolve_word_length(self, series_length):
        m = self.word_length if self.word_length is not None else max(1, series_length // 8)
        if m > series_length:
            raise InvalidParameterError(
                f"word length {m} exceeds series length {series_length}"
            )
        return m

    def with_(self, **changes):
        values = {f: getattr(self, f) for f in self.__dataclass_fields__}
        values.update(changes)
        return ExperimentParams(**values)


@dataclass
class EvalResult:
    dataset: str
    method: str
    chosen_alphabet: Optional[int]
    word_length: Optional[int]
    train_error: float
    test_error: float
    misclassified: int
    total: int

    def to_dict(self):
        return {
            "dataset": self.dataset,
            "method": self.method,
            "chosen_alphabet": self.chosen_alphabet,
            "word_length": self.word_length,
            "train_error": self.train_error,
            "test_error": self.test_error,
            "misclassified": self.misclassified,
            "total": self.total,
        }


def nn1_classify(query, train_words, ctx=None):
    """Label of the nearest training word; ties go to the earliest index.

    Parameters
    ----------
    query : SymbolicWord
    train_words : sequence of (label, SymbolicWord)
    ctx : SymbolicDistanceContext, optional
        Derived from ``query`` when omitted.
    """
    train_words = list(train_words)
    if not train_words:
        raise InvalidInputError("cannot classify against an empty training set")
    if ctx is None:
        ctx = SymbolicDistanceContext.for_word(query)
    ctx.check(query)
    for _, w in train_words:
        ctx.check(w)
    codes = np.array([w.symbols for _, w in train_words], dtype=np.int64)
    D = symbolic_fixed_matrix(np.array([query.symbols], dtype=np.int64), codes, ctx.table)
    return train_words[int(np.argmin(D[0]))][0]


class _Prepared:
    """Normalized series and per-segment reductions reused across a grid search."""

    def __init__(self, X, params):
        self.params = params
        self.X = z_normalize_batch(X) if params.normalize else as_batch(X)
        self._reduced = {}

    def reduced(self, m):
        if m not in self._reduced:
            self._reduced[m] = _reduce(self.X, m, self.params.method)
        return self._reduced[m]

    def codes(self, m, a):
        return symbolize(self.reduced(m), breakpoint_table(a))


def _cross(prep_q, prep_r, m, a):
    """Pairwise comparison matrix with a total order matching distance order."""
    if prep_q.params.symbolic:
        return symbolic_fixed_matrix(prep_q.codes(m, a), prep_r.codes(m, a), breakpoint_table(a))
    return euclidean_sq_matrix(prep_q.X, prep_r.X)


def _label_codes(*label_lists):
    vocab = {}
    out = []
    for labels in label_lists:
        out.append(np.array([vocab.setdefault(lbl, len(vocab)) for lbl in labels], dtype=np.intp))
    return out


def _self_error(prep, labels, m, a, selection):
    if len(labels) < 2:
        raise InvalidInputError("leave-one-out needs at least 2 instances")
    (y,) = _label_codes(labels)
    D = _cross(prep, prep, m, a)
    if selection == "loocv":
        D = D.copy()
        np.fill_diagonal(D, _INT_MAX if D.dtype == np.int64 else np.inf)
    nearest = np.argmin(D, axis=1)
    return int(np.count_nonzero(y[nearest] != y)) / len(y)


def _require_alphabet(params):
    if params.symbolic and params.alphabet_size is None:
        raise InvalidParameterError(f"method {params.method} needs an alphabet size")
    return params.alphabet_size


def loocv_error(dataset, params):
    """Leave-one-out 1NN misclassification rate at ``params.alphabet_size``."""
    if len(dataset) < 2:
        raise InvalidInputError("leave-one-out needs at least 2 instances")
    a = _require_alphabet(params)
    m = params.resolve_word_length(dataset.series_length)
    return _self_error(_Prepared(dataset.X, params), dataset.labels, m, a, "loocv")


def _select(prep, labels, params, series_length):
    m_grid = params.word_length_grid or (params.resolve_word_length(series_length),)
    for m in m_grid:
        if m > series_length:
            raise InvalidParameterError(f"word length {m} exceeds series length {series_length}")
    a_grid = params.alphabet_grid if params.symbolic else (None,)
    best = None
    # strict improvement only: earlier (smaller a, then smaller m) wins ties
    for a in a_grid:
        for m in m_grid:
            err = _self_error(prep, labels, m, a, params.selection)
            if best is None or err < best[0]:
                best = (err, a, m)
    return best


def select_alphabet_size(train, params):
    """Alphabet size from ``params.alphabet_grid`` minimizing train error.

    Returns ``(chosen, train_error)``; ties resolve to the smallest size. For
    raw Euclidean the chosen size is ``None``.
    """
    err, a, _ = _select(_Prepared(train.X, params), train.labels, params, train.series_length)
    return a, err


def evaluate(train, test, params):
    """Select the alphabet size on ``train``, then 1NN-classify ``test`` against it."""
    if train.series_length != test.series_length:
        raise InvalidInputError(
            f"train length {train.series_length} != test length {test.series_length}"
        )
    prep_train = _Prepared(train.X, params)
    train_err, a, m = _select(prep_train, train.labels, params, train.series_length)
    prep_test = _Prepared(test.X, params)
    D = _cross(prep_test, prep_train, m, a)
    y_train, y_test = _label_codes(train.labels, test.labels)
    wrong = int(np.count_nonzero(y_train[np.argmin(D, axis=1)] != y_test))
    return EvalResult(
        dataset=train.name or test.name,
        method=params.method,
        chosen_alphabet=a,
        word_length=m if params.symbolic else None,
        train_error=train_err,
        test_error=wrong / len(test),
        misclassified=wrong,
        total=len(test),
    )


class Tally(NamedTuple):
    wins_classic: int
    wins_esax: int
    ties: int


def compare_methods(pairs):
    """Count datasets won by each method; equal test errors are ties.

    ``pairs`` is an iterable of ``(classic_result, esax_result)``.
    """
    wc = we = ties = 0
    for classic, esax in pairs:
        if classic.dataset != esax.dataset:
            raise InvalidInputError(
                f"paired results cover different datasets: {classic.dataset!r} vs {esax.dataset!r}"
            )
        if classic.method != CLASSIC_SAX or esax.method != E_SAX:
            raise InvalidInputError(
                f"expected ({CLASSIC_SAX}, {E_SAX}) pair, got ({classic.method}, {esax.method})"
            )
        if classic.test_error < esax.test_error:
            wc += 1
        elif esax.test_error < classic.test_error:
            we += 1
        else:
            ties += 1
    return Tally(wc, we, ties)
