"""Closed-form single-observation MLEs and their likelihood-weighted combination.

For a single standardized observation x the likelihood in alpha (resp. beta)
of each mixture component has a unique maximizer:

    x <  0:  alpha = -1 / log(e^x / 2),          beta = -1 / log(1 - e^x / 2)
    x >= 0:  alpha = -1 / log(1 - e^{-x} / 2),   beta = -1 / log(e^{-x} / 2)

A sample is fitted by computing this pair for every observation and averaging
the pairs with weights proportional to the full-sample likelihood at each pair.
p is treated as known throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bml import BmlParams
from .errors import DegenerateFitError, DomainError, RangeError

__all__ = [
    "FitResult",
    "mle_single",
    "mle_pairs",
    "log_likelihood",
    "log_likelihood_matrix",
    "normalize_log_weights",
    "fit_weighted",
]

_LN2 = math.log(2.0)
_CHUNK = 1 << 22  # matrix cells per block in the weight computation


@dataclass(frozen=True)
class FitResult:
    alpha_hat: float
    beta_hat: float
    weights: np.ndarray
    per_obs_estimates: np.ndarray  # shape (n, 2)
    log_likelihood_at_estimate: float
    p: float

    @property
    def n(self) -> int:
        return int(self.weights.size)


def _data(x) -> np.ndarray:
    x = np.atleast_1d(np.asarray(x, dtype=float))
    if x.ndim != 1 or x.size == 0:
        raise DomainError("data must be a nonempty one-dimensional sequence")
    if not np.all(np.isfinite(x)):
        raise DomainError("data must be finite")
    return x


def mle_pairs(x) -> np.ndarray:
    """Per-observation estimates, shape (n, 2), columns (alpha_hat, beta_hat)."""
    x = _data(x)
    ax = np.abs(x)
    e = 0.5 * np.exp(-ax)
    # log(e) written as -(|x| + ln 2) so the two branches mirror each other exactly
    from_log_e = 1.0 / (ax + _LN2)
    with np.errstate(divide="ignore", over="ignore"):
        from_log_1e = -1.0 / np.log1p(-e)
    if not np.all(np.isfinite(from_log_1e)):
        # -1/log(1 - e^{-|x|}/2) ~ 2 e^{|x|} overflows past |x| ~ 709
        raise RangeError(f"estimate overflows for |x| = {ax[~np.isfinite(from_log_1e)][0]}")
    neg = x < 0.0
    alpha = np.where(neg, from_log_e, from_log_1e)
    beta = np.where(neg, from_log_1e, from_log_e)
    return np.column_stack([alpha, beta])


def mle_single(x: float) -> tuple[float, float]:
    a, b = mle_pairs([x])[0]
    return float(a), float(b)


def _log_pdf_terms(x: np.ndarray):
    # log e and log(1 - e), both finite for every real x
    ax = np.abs(x)
    le = -(ax + _LN2)
    l1e = np.log1p(-0.5 * np.exp(-ax))
    return x < 0.0, le, l1e


def _log_pdf(neg, le, l1e, alpha, beta, p: float):
    # logaddexp of the two mixture terms; p in {0, 1} drops a term
    with np.errstate(divide="ignore"):
        lp, lq = math.log(p) if p > 0 else -math.inf, math.log1p(-p) if p < 1 else -math.inf
    la, lb = np.log(alpha), np.log(beta)
    t1 = np.where(neg, alpha * le, (alpha - 1.0) * l1e + le)
    t2 = np.where(neg, (beta - 1.0) * l1e + le, beta * le)
    return np.logaddexp(lp + la + t1, lq + lb + t2)


def log_likelihood(data, alpha: float, beta: float, p: float) -> float:
    """Sum of log densities of the standard BML law; -inf if any density is 0."""
    params = BmlParams(alpha, beta, p)
    x = _data(data)
    neg, le, l1e = _log_pdf_terms(x)
    return math.fsum(_log_pdf(neg, le, l1e, params.alpha, params.beta, params.p))


def log_likelihood_matrix(data, pairs: np.ndarray, p: float) -> np.ndarray:
    """Full-sample log likelihood at each (alpha, beta) row of ``pairs``."""
    x = _data(data)
    pairs = np.asarray(pairs, dtype=float).reshape(-1, 2)
    BmlParams(1.0, 1.0, p)
    neg, le, l1e = _log_pdf_terms(x)
    out = np.empty(pairs.shape[0])
    rows = max(1, _CHUNK // x.size)
    for s in range(0, pairs.shape[0], rows):
        blk = pairs[s:s + rows]
        a, b = blk[:, :1], blk[:, 1:]
        lp = _log_pdf(neg[None, :], le[None, :], l1e[None, :], a, b, p)
        # sorted summation keeps each row independent of data order
        out[s:s + rows] = np.sort(lp, axis=1).sum(axis=1)
    return out


def normalize_log_weights(logw) -> np.ndarray:
    """exp(logw - max) normalized to sum 1; raises if every entry is -inf."""
    logw = np.asarray(logw, dtype=float)
    if logw.size == 0 or np.any(np.isnan(logw)):
        raise DegenerateFitError("log weights are empty or undefined")
    top = np.max(logw)
    if not np.isfinite(top):
        raise DegenerateFitError("every candidate pair has zero likelihood")
    w = np.exp(logw - top)
    return w / math.fsum(w)


def fit_weighted(data, p: float) -> FitResult:
    """Weighted average of per-observation MLE pairs.

    Pair i gets weight proportional to the likelihood of the whole sample at
    (alpha_i, beta_i), computed in log space and shifted by its maximum before
    exponentiating.
    """
    x = _data(data)
    p = BmlParams(1.0, 1.0, p).p
    pairs = mle_pairs(x)
    if x.size == 1:
        w = np.ones(1)
        a, b = float(pairs[0, 0]), float(pairs[0, 1])
    else:
        w = normalize_log_weights(log_likelihood_matrix(x, pairs, p))
        a = math.fsum(w * pairs[:, 0])
        b = math.fsum(w * pairs[:, 1])
    return FitResult(a, b, w, pairs, log_likelihood(x, a, b, p), p)
