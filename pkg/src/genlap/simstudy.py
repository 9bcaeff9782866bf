"""Monte-Carlo parameter-recovery study for the weighted estimator.

Replication ``i`` of a study with seed ``s`` samples from the substream seeded
by ``substream_seed(s, i)``, so results do not depend on how replications are
spread over worker processes.  Aggregates are reduced in replication order with
``math.fsum``.
"""

from __future__ import annotations

import csv
import io
import json
import math
import os
from collections.abc import Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .bml import BmlParams, bml_sample
from .errors import DegenerateFitError, DomainError, GenlapError
from .estimate import fit_weighted
from .streams import check_seed, substream_seed

__all__ = [
    "StudyConfig",
    "StudyRow",
    "CSV_HEADER",
    "DEFAULT_N_LIST",
    "replicate",
    "run_study",
    "run_table",
    "resolve_workers",
    "rows_to_csv",
    "rows_to_json",
    "format_number",
]

CSV_HEADER = ("n", "k", "alpha", "alpha_hat", "mse_alpha", "beta", "beta_hat", "mse_beta")
DEFAULT_N_LIST = (1, 10, 50, 80, 100)
_THREADS_ENV = "GENLAP_THREADS"
_MSE_RTOL = 1e-10


@dataclass(frozen=True)
class StudyConfig:
    n: int
    k: int
    alpha: float
    beta: float
    p: float
    seed: int

    def __post_init__(self):
        for name in ("n", "k"):
            v = getattr(self, name)
            if isinstance(v, bool) or int(v) != v or v < 1:
                raise DomainError(f"{name} must be a positive integer, got {v!r}")
            object.__setattr__(self, name, int(v))
        params = BmlParams(self.alpha, self.beta, self.p)
        object.__setattr__(self, "alpha", params.alpha)
        object.__setattr__(self, "beta", params.beta)
        object.__setattr__(self, "p", params.p)
        object.__setattr__(self, "seed", check_seed(self.seed))


@dataclass(frozen=True)
class StudyRow:
    n: int
    k: int
    alpha_true: float
    alpha_hat_mean: float
    mse_alpha: float
    beta_true: float
    beta_hat_mean: float
    mse_beta: float


def replicate(config: StudyConfig, index: int) -> tuple[float, float]:
    """Estimates from replication ``index`` (0-based)."""
    params = BmlParams(config.alpha, config.beta, config.p)
    x = bml_sample(params, config.n, substream_seed(config.seed, index))
    try:
        fit = fit_weighted(x, config.p)
    except DegenerateFitError as exc:
        raise DegenerateFitError(f"replication {index}: {exc}") from exc
    return fit.alpha_hat, fit.beta_hat


def _replicate_range(args) -> list[tuple[float, float]]:
    config, start, stop = args
    return [replicate(config, i) for i in range(start, stop)]


def resolve_workers(workers: int | None) -> int:
    """Worker count after applying the ``GENLAP_THREADS`` cap."""
    w = (os.cpu_count() or 1) if workers is None else int(workers)
    if w < 1:
        raise DomainError(f"workers must be positive, got {w}")
    cap = os.environ.get(_THREADS_ENV)
    if cap:
        try:
            c = int(cap)
        except ValueError:
            raise DomainError(f"{_THREADS_ENV} must be a positive integer, got {cap!r}") from None
        if c < 1:
            raise DomainError(f"{_THREADS_ENV} must be a positive integer, got {cap!r}")
        w = min(w, c)
    return w


def _estimates(config: StudyConfig, workers: int) -> np.ndarray:
    k = config.k
    workers = min(workers, k)
    if workers == 1:
        return np.array(_replicate_range((config, 0, k)))
    bounds = np.linspace(0, k, workers * 4 + 1).astype(int)
    chunks = [(config, int(a), int(b)) for a, b in zip(bounds[:-1], bounds[1:]) if b > a]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(_replicate_range, chunks))
    return np.array([est for part in parts for est in part])


def _summarize(values: np.ndarray, truth: float) -> tuple[float, float]:
    k = values.size
    mean = math.fsum(values) / k
    mse = math.fsum((v - truth) ** 2 for v in values) / k
    var = math.fsum((v - mean) ** 2 for v in values) / k
    check = var + (mean - truth) ** 2
    if abs(mse - check) > _MSE_RTOL * max(mse, 1e-300) + 1e-15:
        raise GenlapError(f"MSE decomposition mismatch: {mse!r} vs {check!r}")
    return mean, mse


def run_study(config: StudyConfig, workers: int | None = 1) -> StudyRow:
    est = _estimates(config, resolve_workers(workers))
    a_mean, a_mse = _summarize(est[:, 0], config.alpha)
    b_mean, b_mse = _summarize(est[:, 1], config.beta)
    return StudyRow(config.n, config.k, config.alpha, a_mean, a_mse, config.beta, b_mean, b_mse)


def run_table(n_list: Sequence[int], k: int, alpha: float, beta: float, p: float, seed: int,
              workers: int | None = 1) -> list[StudyRow]:
    """One row per sample size, in the order given."""
    return [run_study(StudyConfig(n, k, alpha, beta, p, seed), workers) for n in n_list]


def format_number(v: float) -> str:
    """15 significant digits, locale-free."""
    if isinstance(v, (int, np.integer)) and not isinstance(v, bool):
        return str(int(v))
    return format(float(v), ".15g")


def _row_values(row: StudyRow) -> list:
    return [row.n, row.k, row.alpha_true, row.alpha_hat_mean, row.mse_alpha,
            row.beta_true, row.beta_hat_mean, row.mse_beta]


def rows_to_csv(rows: Iterable[StudyRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for row in rows:
        w.writerow([format_number(v) for v in _row_values(row)])
    return buf.getvalue()


def rows_to_json(rows: Iterable[StudyRow]) -> str:
    records = []
    for row in rows:
        records.append({key: float(format_number(v)) if key not in ("n", "k") else v
                        for key, v in zip(CSV_HEADER, _row_values(row))})
    return json.dumps(records, indent=2) + "\n"
