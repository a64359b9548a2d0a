"""Brute-force reference implementations for the test suite.

Nothing here touches the optimized paths: breakpoints come from bisection on a
hand-written normal CDF, transforms are plain loops, and distances are summed
exactly with :class:`fractions.Fraction`. Slow by design.
"""

from fractions import Fraction
import math

from .errors import InvalidInputError, InvalidParameterError

_SQRT2 = math.sqrt(2.0)


def _erf_series(x):
    # Maclaurin series: erf(x) = 2/sqrt(pi) * sum (-1)^k x^(2k+1) / (k! (2k+1))
    total = 0.0
    term = x
    k = 0
    while True:
        contrib = term / (2 * k + 1)
        total += contrib
        if abs(contrib) < 1e-17 * max(1.0, abs(total)):
            break
        k += 1
        term *= -x * x / k
    return 2.0 / math.sqrt(math.pi) * total


def _erfc_cf(x):
    # Lentz evaluation of the continued fraction for erfc, valid for x > 0
    tiny = 1e-300
    f = x if x != 0 else tiny
    C, D = f, 0.0
    for n in range(1, 500):
        a = n / 2.0
        D = x + a * D
        D = tiny if D == 0 else D
        C = x + a / C
        C = tiny if C == 0 else C
        D = 1.0 / D
        delta = C * D
        f *= delta
        if abs(delta - 1.0) < 1e-16:
            break
    return math.exp(-x * x) / (math.sqrt(math.pi) * f)


def oracle_normal_cdf(x):
    z = x / _SQRT2
    if abs(z) < 3.0:
        return 0.5 * (1.0 + _erf_series(z))
    if z > 0:
        return 1.0 - 0.5 * _erfc_cf(z)
    return 0.5 * _erfc_cf(-z)


def oracle_inverse_normal_cdf(p, width=1e-10):
    """Bisect the hand-written CDF until the bracket is narrower than ``width``."""
    if not 0.0 < p < 1.0:
        raise InvalidParameterError(f"probability must lie in (0, 1), got {p!r}")
    lo, hi = -40.0, 40.0
    while hi - lo >= width:
        mid = (lo + hi) / 2.0
        if oracle_normal_cdf(mid) < p:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2.0


def oracle_breakpoints(a):
    return [oracle_inverse_normal_cdf(k / a) for k in range(1, a)]


def oracle_cell(r, c, breakpoints):
    """Distance between 1-based symbols r and c, straight from the breakpoints."""
    lo, hi = min(r, c), max(r, c)
    if hi - lo <= 1:
        return 0.0
    return breakpoints[hi - 2] - breakpoints[lo - 1]


def oracle_symbol(v, breakpoints):
    k = 1
    for b in breakpoints:
        if v >= b:
            k += 1
    return k


def _normalize(values):
    n = len(values)
    mean = sum(values) / n
    var = sum((v - mean) ** 2 for v in values) / n
    std = math.sqrt(var)
    if std < 1e-12:
        return [0.0] * n
    return [(v - mean) / std for v in values]


def oracle_word(values, m, a, method, normalize=True, breakpoints=None):
    values = [float(v) for v in values]
    n = len(values)
    if not 1 <= m <= n:
        raise InvalidParameterError(f"bad word length {m} for length {n}")
    if normalize:
        values = _normalize(values)
    bp = breakpoints if breakpoints is not None else oracle_breakpoints(a)
    word = []
    for i in range(m):
        seg = values[(i * n) // m : ((i + 1) * n) // m]
        if method == "classic-sax":
            rep = sum(seg) / len(seg)
        elif method == "e-sax":
            rep = (min(seg) + max(seg)) / 2
        else:
            raise InvalidParameterError(f"not a symbolic method: {method!r}")
        word.append(oracle_symbol(rep, bp))
    return word


def oracle_word_dist_sq(ws, wt, breakpoints):
    """Exact sum of squared cell distances (a Fraction)."""
    if len(ws) != len(wt):
        raise InvalidInputError("word lengths differ")
    return sum((Fraction(oracle_cell(s, t, breakpoints)) ** 2 for s, t in zip(ws, wt)), Fraction(0))


def oracle_symbolic_dist(ws, wt, n, a):
    bp = oracle_breakpoints(a)
    return math.sqrt(n / len(ws) * float(oracle_word_dist_sq(ws, wt, bp)))


def oracle_euclidean_sq(s, t):
    return sum((Fraction(float(x) - float(y)) ** 2 for x, y in zip(s, t)), Fraction(0))


def _word_length(params, n):
    return params.word_length if params.word_length is not None else max(1, n // 8)


def _distance_matrix(queries, refs, params, a, m):
    """Full matrix of exact comparison keys (squared, unscaled)."""
    if params.method == "raw-euclidean":
        qs = [_normalize(list(q)) if params.normalize else list(q) for q in queries]
        rs = [_normalize(list(r)) if params.normalize else list(r) for r in refs]
        return [[oracle_euclidean_sq(q, r) for r in rs] for q in qs]
    bp = oracle_breakpoints(a)
    qw = [oracle_word(q, m, a, params.method, params.normalize, bp) for q in queries]
    rw = [oracle_word(r, m, a, params.method, params.normalize, bp) for r in refs]
    return [[oracle_word_dist_sq(x, y, bp) for y in rw] for x in qw]


def _argmin(row, skip=None):
    best = None
    for j, d in enumerate(row):
        if j == skip:
            continue
        if best is None or d < row[best]:
            best = j
    if best is None:
        raise InvalidInputError("no candidates to classify against")
    return best


def oracle_nn1(query_index, dataset, params, alphabet_size=None):
    """Label of the nearest other instance of ``dataset`` to instance ``query_index``."""
    a = alphabet_size if alphabet_size is not None else params.alphabet_size
    m = _word_length(params, dataset.series_length)
    X = [list(x) for x in dataset.X]
    D = _distance_matrix([X[query_index]], X, params, a, m)
    return dataset.labels[_argmin(D[0], skip=query_index)]


def oracle_loocv_error(dataset, params, alphabet_size=None, m=None):
    a = alphabet_size if alphabet_size is not None else params.alphabet_size
    m = m if m is not None else _word_length(params, dataset.series_length)
    X = [list(x) for x in dataset.X]
    D = _distance_matrix(X, X, params, a, m)
    wrong = 0
    for i, row in enumerate(D):
        if dataset.labels[_argmin(row, skip=i)] != dataset.labels[i]:
            wrong += 1
    return wrong / len(X)


def oracle_evaluate(train, test, params):
    """Returns ``(chosen_alphabet, train_error, misclassified, total)``."""
    m = _word_length(params, train.series_length)
    grid = params.alphabet_grid if params.method != "raw-euclidean" else [None]
    best_a, best_err = None, None
    for a in sorted(grid, key=lambda v: -1 if v is None else v):
        err = oracle_loocv_error(train, params, a, m)
        if best_err is None or err < best_err:
            best_a, best_err = a, err
    D = _distance_matrix(
        [list(x) for x in test.X], [list(x) for x in train.X], params, best_a, m
    )
    wrong = sum(1 for i, row in enumerate(D) if train.labels[_argmin(row)] != test.labels[i])
    return best_a, best_err, wrong, len(test)
