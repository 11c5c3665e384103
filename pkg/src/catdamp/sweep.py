"""Grid sweeps and figure tables written as CSV.

Grid points are split into fixed-size chunks, so the numbers never depend
on how many workers run them.  Rows are always written in grid order.
"""
import csv
import io
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, fields
from itertools import product

import numpy as np

from .channel import flip_prob_pair, flip_prob_single, flip_prob_state
from .coherent import TwoModeCatState, overlap
from .concurrence import XMatrix, concurrence, concurrence_x, initial_concurrence, is_x_shaped
from .evolution import channel_concurrence, evolved_concurrence
from .oracle import MAX_ENUMERATION, cat_span_state, gram_encoded_density
from .repetition import check_code, success_prob, transmit_encoded

ROUTES = ("general", "xmatrix", "evolution", "oracle")
CHUNK = 128
DISAGREEMENT_TOL = 1e-6
FIGURE_CODES = (1, 3, 5, 11, 51)


class ConfigError(ValueError):
    pass


@dataclass
class SweepConfig:
    alpha_min: float = 0.2
    alpha_max: float = 3.0
    alpha_steps: int = 15
    etas: tuple = (2 / 3, 0.9)
    thetas: tuple = (0.0,)
    ws: tuple = (0.5,)
    codes: tuple = (1, 3, 5)
    routes: tuple = ROUTES
    out: str = None
    workers: int = 1

    def validate(self):
        if self.alpha_steps < 1:
            raise ConfigError(f"alpha-steps must be >= 1, got {self.alpha_steps}")
        if not 0.0 < self.alpha_min <= self.alpha_max:
            raise ConfigError(f"need 0 < alpha-min <= alpha-max, got {self.alpha_min}, {self.alpha_max}")
        if self.alpha_steps == 1 and self.alpha_min != self.alpha_max:
            raise ConfigError("alpha-steps = 1 needs alpha-min == alpha-max")
        for name, values in (("eta", self.etas), ("theta", self.thetas), ("w", self.ws)):
            if not values:
                raise ConfigError(f"at least one {name} value required")
        if not self.codes:
            raise ConfigError("at least one code required")
        for eta in self.etas:
            if not 0.0 <= eta <= 1.0:
                raise ConfigError(f"eta must lie in [0, 1], got {eta}")
        for theta in self.thetas:
            if not 0.0 <= theta < 2 * math.pi:
                raise ConfigError(f"theta must lie in [0, 2pi), got {theta}")
        for w in self.ws:
            if not 0.0 <= w <= 1.0:
                raise ConfigError(f"w must lie in [0, 1], got {w}")
        for n in self.codes:
            try:
                check_code(n)
            except ValueError as exc:
                raise ConfigError(str(exc)) from None
        unknown = set(self.routes) - set(ROUTES)
        if unknown or not self.routes:
            raise ConfigError(f"routes must be a non-empty subset of {ROUTES}, got {self.routes}")
        if self.workers < 1:
            raise ConfigError(f"workers must be >= 1, got {self.workers}")
        return self

    def alphas(self):
        return np.linspace(self.alpha_min, self.alpha_max, self.alpha_steps)

    def grid(self):
        return list(product(self.alphas(), self.etas, self.thetas, self.ws, self.codes))


@dataclass
class ResultRow:
    alpha: float
    eta: float
    theta: float
    w: float
    n: int
    p_e: float
    P_e: float
    p_success: float
    concurrence_general: float = math.nan
    concurrence_x: float = math.nan
    concurrence_evolution: float = math.nan
    max_route_disagreement: float = math.nan
    flip_weight: float = math.nan
    concurrence_oracle: float = math.nan
    flag: str = field(default="")


COLUMNS = [f.name for f in fields(ResultRow)]


def _evaluate_chunk(points, routes, pe_offset=0.0):
    rows, densities = [], []
    for alpha, eta, theta, w, n in points:
        s = TwoModeCatState(alpha, alpha, w, theta)
        pair = flip_prob_pair(alpha, eta)
        row = ResultRow(alpha, eta, theta, w, n,
                        p_e=flip_prob_single(alpha, eta),
                        P_e=pair,
                        p_success=success_prob(n, pair),
                        flip_weight=flip_prob_state(s, eta))
        rho = transmit_encoded(s, eta, n) if {"general", "xmatrix"} & set(routes) else None
        densities.append(rho)
        if "xmatrix" in routes and is_x_shaped(rho):
            row.concurrence_x = concurrence_x(XMatrix.from_dense(rho))
        if "evolution" in routes:
            row.concurrence_evolution = evolved_concurrence(alpha, eta, n, s, pe_offset=pe_offset)
        if "oracle" in routes and n <= MAX_ENUMERATION:
            row.concurrence_oracle = None
            densities.append(gram_encoded_density(cat_span_state(alpha, w, theta), eta, n))
        rows.append(row)

    batch = [d for d in densities if d is not None]
    values = iter(np.atleast_1d(concurrence(np.array(batch))) if batch else ())
    for row in rows:
        general = next(values) if {"general", "xmatrix"} & set(routes) else math.nan
        if "general" in routes:
            row.concurrence_general = float(general)
        if row.concurrence_oracle is None:
            row.concurrence_oracle = float(next(values))
        found = [v for v in (row.concurrence_general, row.concurrence_x,
                             row.concurrence_evolution, row.concurrence_oracle) if not math.isnan(v)]
        row.max_route_disagreement = max(found) - min(found) if found else math.nan
        if row.max_route_disagreement > DISAGREEMENT_TOL:
            row.flag = "route-disagreement"
    return rows


def run_sweep(config, pe_offset=0.0):
    """Evaluate every grid point of ``config``; rows come back in grid order."""
    config.validate()
    points = config.grid()
    chunks = [points[i:i + CHUNK] for i in range(0, len(points), CHUNK)]
    routes = tuple(config.routes)
    if config.workers == 1:
        parts = [_evaluate_chunk(c, routes, pe_offset) for c in chunks]
    else:
        with ThreadPoolExecutor(max_workers=config.workers) as pool:
            parts = list(pool.map(lambda c: _evaluate_chunk(c, routes, pe_offset), chunks))
    return [row for part in parts for row in part]


def format_value(value):
    if isinstance(value, str):
        return value
    if isinstance(value, (int, np.integer)) and not isinstance(value, bool):
        return str(int(value))
    if value is None or math.isnan(value):
        return ""
    return f"{float(value) + 0.0:.9g}"


def write_csv(header, rows, out=None):
    """Write rows of values; returns the CSV text.  ``out`` may be a path or None."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_value(v) for v in row])
    text = buf.getvalue()
    if out is not None:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    return text


def sweep_csv(config, pe_offset=0.0):
    rows = run_sweep(config, pe_offset)
    return write_csv(COLUMNS, ([getattr(r, c) for c in COLUMNS] for r in rows), config.out)


def figure_table(fig_id, resolution=61, route="evolution", workers=1):
    """Header and rows reproducing the axes of one of the five figures."""
    if fig_id not in (1, 2, 3, 4, 5):
        raise ConfigError(f"figure id must be 1..5, got {fig_id!r}")
    if resolution < 2:
        raise ConfigError(f"resolution must be >= 2, got {resolution}")
    if route not in ("general", "evolution"):
        raise ConfigError(f"figure route must be 'general' or 'evolution', got {route!r}")

    if fig_id == 1:
        alphas = np.linspace(0.0, 3.0, resolution)
        return ["alpha", "overlap"], [(a, overlap(a, -a)) for a in alphas]
    if fig_id == 2:
        alphas = np.linspace(0.0, 3.0, resolution)
        return ["alpha", "eta", "p_e"], [(a, eta, flip_prob_single(a, eta))
                                         for eta in (2 / 3, 0.9) for a in alphas]
    if fig_id == 3:
        alphas = np.linspace(0.0, 3.0, resolution)
        thetas = np.linspace(0.0, 2 * np.pi, resolution, endpoint=False)
        return ["alpha", "theta", "concurrence"], [
            (a, t, initial_concurrence(TwoModeCatState(a, a, 0.5, t))) for a in alphas for t in thetas]

    if fig_id == 4:
        config = SweepConfig(alpha_min=3.0 / resolution, alpha_max=3.0, alpha_steps=resolution,
                             etas=(2 / 3, 0.9), thetas=(0.0, np.pi), codes=FIGURE_CODES,
                             routes=(route,), workers=workers)
        order = lambda r: (r.eta, r.theta, r.alpha, r.n)
        header = ["eta", "theta", "alpha", "n", "concurrence"]
        pick = lambda r: (r.eta, r.theta, r.alpha, r.n, _route_value(r, route))
    else:
        etas = tuple(np.linspace(0.0, 1.0, resolution))
        config = SweepConfig(alpha_min=1.3, alpha_max=1.3, alpha_steps=1, etas=etas,
                             thetas=(0.0,), codes=FIGURE_CODES, routes=(route,), workers=workers)
        order = lambda r: (r.n, r.eta)
        header = ["eta", "n", "concurrence"]
        pick = lambda r: (r.eta, r.n, _route_value(r, route))
    rows = sorted(run_sweep(config), key=order)
    return header, [pick(r) for r in rows]


def _route_value(row, route):
    return row.concurrence_general if route == "general" else row.concurrence_evolution


def figure_csv(fig_id, resolution=61, out=None, route="evolution", workers=1):
    header, rows = figure_table(fig_id, resolution, route, workers)
    return write_csv(header, rows, out)


__all__ = ["SweepConfig", "ResultRow", "COLUMNS", "run_sweep", "sweep_csv", "figure_table",
           "figure_csv", "ConfigError", "channel_concurrence"]
