"""Numerical campaigns: random instances, error sweeps over n, log-log fits,
the beta(alpha) curve and the resonant K_n = n^2 counterexample.
"""
from __future__ import annotations

import csv
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .errors import ConfigError, InsufficientPoints, NonpositiveValues
from .evolutions import ScalingSchedule, generalized_trotter_error, intermediate_zeno_error
from .matcore import expm_hermitian, hs_norm, require_hermitian, unitary_power

PROTOCOLS = ("zeno", "trotter")
SERIES_FIELDS = ("protocol", "alpha", "seed", "n", "epsilon")
FIT_FIELDS = ("protocol", "alpha", "seed", "beta", "intercept", "rms_residual", "n_min", "n_max")
DEGENERATE = "degenerate"
# Series whose errors never exceed this floor are roundoff, not a power law.
DEGENERATE_FLOOR = 1e-9


def log_grid(start: float = 10, stop: float = 1e6, per_decade: int = 25) -> tuple:
    """Log-spaced integers from ``start`` to ``stop``, rounded and deduplicated."""
    lo, hi = math.log10(start), math.log10(stop)
    count = int(round((hi - lo) * per_decade)) + 1
    return tuple(int(x) for x in np.unique(np.round(np.logspace(lo, hi, count)).astype(np.int64)))


def alpha_grid() -> tuple:
    """21 equally spaced alphas on [0, 1] (step 0.05)."""
    return tuple(round(0.05 * i, 2) for i in range(21))


@dataclass
class ExperimentConfig:
    dim: int = 5
    t: float = 1.0
    alphas: tuple = (0.3, 0.5, 0.8)
    n_grid: tuple = field(default_factory=log_grid)
    fit_window: tuple = (1e5, 1e6)
    seeds: tuple = (0, 1, 2, 3, 4)
    # eigenvalues of a diagonal V, or "random" for V drawn like H
    potential_spec: object = (1.0, 1.0, 0.0, 0.0, 0.0)
    # "random", "diagonal" (commutes with a diagonal V) or "zero"
    hamiltonian: str = "random"
    share_hamiltonian: bool = True

    def __post_init__(self):
        self.alphas = tuple(float(a) for a in self.alphas)
        self.n_grid = tuple(int(n) for n in self.n_grid)
        self.fit_window = tuple(float(x) for x in self.fit_window)
        self.seeds = tuple(int(s) for s in self.seeds)
        if not isinstance(self.potential_spec, str):
            self.potential_spec = tuple(float(x) for x in self.potential_spec)
        self.validate()

    def validate(self) -> None:
        if self.dim < 1:
            raise ConfigError("dim must be positive")
        if not self.alphas:
            raise ConfigError("alphas is empty")
        # alpha > 1 is accepted here; the zeno sweep reports it as a ScheduleViolation
        if any(not math.isfinite(a) or a < 0 for a in self.alphas):
            raise ConfigError("alphas must be finite and nonnegative")
        if len(self.n_grid) < 2:
            raise ConfigError("n_grid needs at least two points to fit")
        if self.n_grid[0] < 1 or any(b <= a for a, b in zip(self.n_grid, self.n_grid[1:])):
            raise ConfigError("n_grid must be positive and strictly increasing")
        lo, hi = self.fit_window
        if not (self.n_grid[0] <= lo < hi <= self.n_grid[-1]):
            raise ConfigError(f"fit_window {self.fit_window} not inside n_grid range")
        if sum(lo <= n <= hi for n in self.n_grid) < 2:
            raise ConfigError("fit_window contains fewer than two grid points")
        if not self.seeds or any(s < 0 for s in self.seeds):
            raise ConfigError("seeds must be a nonempty list of unsigned integers")
        if isinstance(self.potential_spec, str):
            if self.potential_spec != "random":
                raise ConfigError(f"unknown potential_spec {self.potential_spec!r}")
        elif len(self.potential_spec) != self.dim:
            raise ConfigError("potential_spec length must equal dim")
        if self.hamiltonian not in ("random", "diagonal", "zero"):
            raise ConfigError(f"unknown hamiltonian kind {self.hamiltonian!r}")

    def to_dict(self) -> dict:
        d = asdict(self)
        for k, v in d.items():
            if isinstance(v, tuple):
                d[k] = list(v)
        return d


def zeno_campaign_config() -> ExperimentConfig:
    return ExperimentConfig()


def trotter_campaign_config() -> ExperimentConfig:
    return ExperimentConfig()


def beta_campaign_config() -> ExperimentConfig:
    return ExperimentConfig(
        alphas=alpha_grid(),
        n_grid=log_grid(1e4, 1e6),
        fit_window=(1e4, 1e6),
        seeds=tuple(range(10)),
    )


def _generator(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def _draw_hermitian(gen: np.random.Generator, dim: int) -> np.ndarray:
    A = gen.uniform(-1.0, 1.0, (dim, dim)) + 1j * gen.uniform(-1.0, 1.0, (dim, dim))
    return (A + A.conj().T) / 2


def random_hermitian(seed: int, dim: int) -> np.ndarray:
    """(A + A^dagger)/2 with Re A, Im A i.i.d. uniform on [-1, 1].

    Deterministic per seed: the stream is PCG64 seeded with ``seed``.
    """
    if dim < 1:
        raise ValueError("dim must be positive")
    return _draw_hermitian(_generator(seed), dim)


def diag_potential(eigs: Sequence[float]) -> np.ndarray:
    if len(eigs) == 0:
        raise ValueError("need at least one eigenvalue")
    return np.diag(np.asarray(eigs, dtype=float)).astype(complex)


def make_instance(config: ExperimentConfig, seed: int, alpha_index: int = 0):
    """(H, V) for one seed. H is drawn first, then V if it is random."""
    if config.share_hamiltonian:
        gen = _generator(seed)
    else:
        gen = np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, alpha_index])))
    if config.hamiltonian == "random":
        H = _draw_hermitian(gen, config.dim)
    elif config.hamiltonian == "diagonal":
        H = np.diag(gen.uniform(-1.0, 1.0, config.dim)).astype(complex)
    else:
        H = np.zeros((config.dim, config.dim), dtype=complex)
    if config.potential_spec == "random":
        V = _draw_hermitian(gen, config.dim)
    else:
        V = diag_potential(config.potential_spec)
    return H, V


@dataclass(frozen=True)
class ConvergenceSeries:
    protocol: str
    alpha: float
    seed: int
    n: np.ndarray
    epsilon: np.ndarray

    @property
    def points(self) -> list:
        return list(zip(self.n.tolist(), self.epsilon.tolist()))


@dataclass(frozen=True)
class PowerLawFit:
    """epsilon ~ 10**intercept * n**slope on the window."""

    slope: float
    intercept: float
    window: tuple
    rms_residual: float
    point_count: int


@dataclass(frozen=True)
class FitRecord:
    protocol: str
    alpha: float
    seed: int
    fit: PowerLawFit | None  # None marks a degenerate (roundoff-level) series

    @property
    def beta(self) -> float:
        return float("nan") if self.fit is None else self.fit.slope


def error_functional(protocol: str):
    if protocol == "zeno":
        return intermediate_zeno_error
    if protocol == "trotter":
        return generalized_trotter_error
    raise ValueError(f"unknown protocol {protocol!r}; expected one of {PROTOCOLS}")


def compute_series(protocol: str, H, V, alpha: float, t: float, ns: Iterable[int], seed: int = 0):
    func = error_functional(protocol)
    sched = ScalingSchedule.power(alpha)
    ns = np.asarray(list(ns), dtype=np.int64)
    eps = np.array([func(H, V, sched, t, int(n)) for n in ns])
    return ConvergenceSeries(protocol, float(alpha), int(seed), ns, eps)


def sweep(config: ExperimentConfig, protocol: str, threads: int = 1) -> list:
    """One ConvergenceSeries per (alpha, seed), sorted by (alpha, seed)."""
    error_functional(protocol)
    tasks = [(i, a, s) for i, a in enumerate(config.alphas) for s in config.seeds]

    def run(task):
        i, alpha, seed = task
        H, V = make_instance(config, seed, i)
        return compute_series(protocol, H, V, alpha, config.t, config.n_grid, seed)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            out = list(pool.map(run, tasks))
    else:
        out = [run(task) for task in tasks]
    return sorted(out, key=lambda s: (s.alpha, s.seed))


def _window_mask(n, window):
    return (n >= window[0]) & (n <= window[1])


def loglog_fit(series: ConvergenceSeries, window: tuple) -> PowerLawFit:
    """Ordinary least squares of log10(epsilon) on log10(n) inside ``window``."""
    mask = _window_mask(series.n, window)
    if mask.sum() < 2:
        raise InsufficientPoints(f"{int(mask.sum())} points in window {window}")
    n, eps = series.n[mask], series.epsilon[mask]
    if np.any(eps <= 0):
        raise NonpositiveValues("nonpositive epsilon inside the fit window")
    x, y = np.log10(n.astype(float)), np.log10(eps)
    slope, intercept = np.polyfit(x, y, 1)
    resid = y - (slope * x + intercept)
    return PowerLawFit(
        slope=float(slope),
        intercept=float(intercept),
        window=(float(window[0]), float(window[1])),
        rms_residual=float(np.sqrt(np.mean(resid**2))),
        point_count=int(mask.sum()),
    )


def is_degenerate(series: ConvergenceSeries, window: tuple, floor: float = DEGENERATE_FLOOR) -> bool:
    eps = series.epsilon[_window_mask(series.n, window)]
    return bool(np.all(eps <= floor))


def fit_series(series_list, window) -> list:
    records = []
    for s in series_list:
        fit = None if is_degenerate(s, window) else loglog_fit(s, window)
        records.append(FitRecord(s.protocol, s.alpha, s.seed, fit))
    return records


def beta_curve(config: ExperimentConfig, threads: int = 1, series_out: list | None = None) -> list:
    """Fitted exponent beta of eps^T for every (alpha, seed), sorted.

    If ``series_out`` is given, the raw series are appended to it.
    """
    series = sweep(config, "trotter", threads=threads)
    if series_out is not None:
        series_out.extend(series)
    return fit_series(series, config.fit_window)


_QUARTER_TURN = (1.0 + 0j, -1j, -1.0 + 0j, 1j)  # exp(-i pi k / 2), k = 0..3


def resonance_potential(dim: int) -> np.ndarray:
    """diag(1, ..., 1, -1, ..., -1), so that V^2 = I."""
    half = (dim + 1) // 2
    return diag_potential([1.0] * half + [-1.0] * (dim - half))


class ResonanceRow(NamedTuple):
    n: int
    parity: str
    deviation: float
    frame_deviation: float


def resonance_demo(H, n_list: Iterable[int]) -> list:
    """Rows for U_{n,n^2}(t) at t = pi/2 with V = diag(+-1), so V^2 = I.

    ``deviation`` is ||U_{n,n^2}(t) - exp(-i t H)||. For even n the kick
    exp(-i (t/n) n^2 V) is a multiple of the identity, the control is
    ineffective and the deviation is roundoff; for odd n the kick is
    proportional to V and the product does not return to exp(-i t H).

    ``frame_deviation`` first removes the control phase exp(-i t K_n V),
    i.e. it is ||exp(i t K_n V) U - exp(-i t H)||. It equals ``deviation``
    for even n, vanishes for every n when H commutes with V, and for odd
    n >= 3 measures how far the controlled exp(-i t H_Z) is from exp(-i t H).

    All phases are multiples of pi/2 and are reduced modulo 4 in integer
    arithmetic; a floating-point phase of n pi / 2 would leave an error that
    the n-th power amplifies to about 1e-10 at n = 1000.
    """
    H = require_hermitian(H)
    dim = H.shape[0]
    signs = [1] * ((dim + 1) // 2) + [-1] * (dim // 2)
    target = expm_hermitian(H, math.pi / 2)
    rows = []
    for n in n_list:
        n = int(n)
        kick = np.diag([_QUARTER_TURN[(n * s) % 4] for s in signs])
        frame = np.diag([_QUARTER_TURN[(-n * n * s) % 4] for s in signs])
        U = unitary_power(kick @ expm_hermitian(H, math.pi / (2 * n)), n)
        rows.append(
            ResonanceRow(
                n, "even" if n % 2 == 0 else "odd", hs_norm(U - target), hs_norm(frame @ U - target)
            )
        )
    return rows


def _fmt(x: float) -> str:
    return f"{x:.16e}"


def write_series_csv(path, series_list) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(SERIES_FIELDS)
        for s in series_list:
            for n, e in zip(s.n.tolist(), s.epsilon.tolist()):
                w.writerow([s.protocol, repr(s.alpha), s.seed, n, _fmt(e)])


def read_series_csv(path) -> list:
    groups: dict = {}
    with open(path, newline="") as fh:
        for row in csv.DictReader(fh):
            key = (row["protocol"], float(row["alpha"]), int(row["seed"]))
            groups.setdefault(key, []).append((int(row["n"]), float(row["epsilon"])))
    out = []
    for (protocol, alpha, seed), pts in sorted(groups.items(), key=lambda kv: (kv[0][1], kv[0][2])):
        n, e = zip(*pts)
        out.append(ConvergenceSeries(protocol, alpha, seed, np.array(n, dtype=np.int64), np.array(e)))
    return out


def write_fit_csv(path, records, window) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(FIT_FIELDS)
        for r in records:
            if r.fit is None:
                vals = [DEGENERATE] * 3
            else:
                vals = [_fmt(r.fit.slope), _fmt(r.fit.intercept), _fmt(r.fit.rms_residual)]
            w.writerow([r.protocol, repr(r.alpha), r.seed, *vals, _fmt(window[0]), _fmt(window[1])])


def read_fit_csv(path) -> list:
    with open(path, newline="") as fh:
        return list(csv.DictReader(fh))
