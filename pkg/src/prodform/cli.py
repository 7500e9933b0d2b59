"""Command-line front end.

    prodform zeno-sweep     [--config PATH] [--preset NAME] [--out DIR] [--seeds N] [--threads N]
    prodform trotter-sweep  ...
    prodform beta-curve     ...
    prodform qubit-check    --alpha A [--n-max N]
    prodform resonance-demo [--seed S] [--n-max N] [--commuting]

Exit codes: 0 success, 2 configuration error, 3 schedule violation
(K_n = o(n) broken), 4 I/O error.
"""
from __future__ import annotations

import argparse
import dataclasses
import hashlib
import json
import logging
import math
import sys
from datetime import datetime, timezone
from pathlib import Path

import numpy as np

from . import __version__
from .errors import ConfigError, ScheduleViolation
from .experiments import (
    ExperimentConfig,
    beta_curve,
    zeno_campaign_config,
    trotter_campaign_config,
    beta_campaign_config,
    fit_series,
    log_grid,
    random_hermitian,
    resonance_demo,
    sweep,
    write_fit_csv,
    write_series_csv,
)
from .qubit import asymptotic_report

log = logging.getLogger("prodform")

EXIT_OK, EXIT_CONFIG, EXIT_SCHEDULE, EXIT_IO = 0, 2, 3, 4

PRESETS = {
    "paper-fig4": zeno_campaign_config,
    "paper-fig5": trotter_campaign_config,
    "paper-fig6": beta_campaign_config,
}
DEFAULT_PRESET = {"zeno-sweep": "paper-fig4", "trotter-sweep": "paper-fig5", "beta-curve": "paper-fig6"}


@dataclasses.dataclass
class RunManifest:
    config_hash: str
    tool_version: str
    timestamp: str
    output_paths: list


def config_hash(config: ExperimentConfig) -> str:
    blob = json.dumps(config.to_dict(), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


def resolve_config(preset: str, config_path=None, seeds: int | None = None) -> ExperimentConfig:
    """Preset defaults, overridden by the JSON file, overridden by flags."""
    if preset not in PRESETS:
        raise ConfigError(f"unknown preset {preset!r}; choose from {sorted(PRESETS)}")
    values = PRESETS[preset]().to_dict()
    if config_path is not None:
        try:
            doc = json.loads(Path(config_path).read_text())
        except json.JSONDecodeError as exc:
            raise ConfigError(f"{config_path}: {exc}") from exc
        if not isinstance(doc, dict):
            raise ConfigError("configuration must be a JSON object")
        unknown = set(doc) - set(values)
        if unknown:
            raise ConfigError(f"unknown configuration keys: {sorted(unknown)}")
        values.update(doc)
    if isinstance(values.get("n_grid"), dict):
        g = values["n_grid"]
        values["n_grid"] = log_grid(g.get("start", 10), g.get("stop", 1e6), g.get("per_decade", 25))
    if isinstance(values.get("seeds"), int):
        values["seeds"] = list(range(values["seeds"]))
    if seeds is not None:
        values["seeds"] = list(range(seeds))
    try:
        return ExperimentConfig(**values)
    except (TypeError, ValueError) as exc:
        raise ConfigError(str(exc)) from exc


def _write_manifest(out_dir: Path, config: ExperimentConfig, outputs: list) -> Path:
    manifest = RunManifest(
        config_hash=config_hash(config),
        tool_version=__version__,
        timestamp=datetime.now(timezone.utc).isoformat(),
        output_paths=[str(p) for p in outputs],
    )
    path = out_dir / "manifest.json"
    doc = dataclasses.asdict(manifest)
    doc["config"] = config.to_dict()
    path.write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    return path


def _print_fits(records) -> None:
    for r in records:
        beta = "degenerate" if r.fit is None else f"{r.fit.slope:+.4f}"
        print(f"{r.protocol:8s} alpha={r.alpha:<5g} seed={r.seed:<3d} beta={beta}")


def _run_campaign(kind: str, config_path, out_dir, preset=None, seeds=None, threads=1) -> int:
    try:
        config = resolve_config(preset or DEFAULT_PRESET[kind], config_path, seeds)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"error: cannot read config: {exc}", file=sys.stderr)
        return EXIT_IO
    protocol = "zeno" if kind == "zeno-sweep" else "trotter"
    stem = {"zeno-sweep": "zeno", "trotter-sweep": "trotter", "beta-curve": "beta_curve"}[kind]
    try:
        if kind == "beta-curve":
            series: list = []
            records = beta_curve(config, threads=threads, series_out=series)
        else:
            series = sweep(config, protocol, threads=threads)
            records = fit_series(series, config.fit_window)
    except ScheduleViolation as exc:
        print(f"error: {exc} (hypothesis K_n = o(n) violated)", file=sys.stderr)
        return EXIT_SCHEDULE
    for s in series:
        log.info("series %s alpha=%g seed=%d: %d points", s.protocol, s.alpha, s.seed, len(s.n))
    try:
        out = Path(out_dir)
        out.mkdir(parents=True, exist_ok=True)
        series_path = out / f"{stem}_series.csv"
        fits_path = out / f"{stem}_fits.csv"
        write_series_csv(series_path, series)
        write_fit_csv(fits_path, records, config.fit_window)
        _write_manifest(out, config, [series_path, fits_path])
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    _print_fits(records)
    return EXIT_OK


def cmd_zeno_sweep(config_path, out_dir, preset=None, seeds=None, threads=1) -> int:
    return _run_campaign("zeno-sweep", config_path, out_dir, preset, seeds, threads)


def cmd_trotter_sweep(config_path, out_dir, preset=None, seeds=None, threads=1) -> int:
    return _run_campaign("trotter-sweep", config_path, out_dir, preset, seeds, threads)


def cmd_beta_curve(config_path, out_dir, preset=None, seeds=None, threads=1) -> int:
    return _run_campaign("beta-curve", config_path, out_dir, preset, seeds, threads)


def cmd_qubit_check(alpha: float, n_max: int = 10**6) -> int:
    if not (0.0 <= alpha < 1.0):
        print(f"error: alpha must lie in [0, 1), got {alpha}", file=sys.stderr)
        return EXIT_CONFIG
    if n_max < 10:
        print("error: n_max must be at least 10", file=sys.stderr)
        return EXIT_CONFIG
    ns = [10**k for k in range(1, int(math.log10(n_max) + 1e-9) + 1)]
    report = asymptotic_report(alpha, ns)
    print(f"{'n':>10} {'|U-V|':>12} {'n|U-V|':>10} {'phi-n*theta':>12} {'|u-v|':>12} "
          f"{'phase/lead':>11} {'axis/lead':>10}")
    for r in report["rows"]:
        print(f"{r['n']:>10d} {r['norm']:12.4e} {r['n_norm']:10.5f} {r['phase_gap']:12.4e} "
              f"{r['axis_gap']:12.4e} {r['phase_ratio']:11.6f} {r['axis_ratio']:10.6f}")
    for name, ok in report["checks"].items():
        print(f"{'PASS' if ok else 'FAIL'} {name}")
    return EXIT_OK if report["passed"] else 1


def cmd_resonance_demo(seed: int = 0, n_max: int = 1000, dim: int = 5, commuting: bool = False) -> int:
    if n_max < 2:
        print("error: n_max must be at least 2", file=sys.stderr)
        return EXIT_CONFIG
    if commuting:
        H = np.diag(np.diag(random_hermitian(seed, dim)).real).astype(complex)
    else:
        H = random_hermitian(seed, dim)
    print(f"{'n':>6} {'parity':>6} {'deviation':>12} {'frame_dev':>12}")
    for row in resonance_demo(H, range(1, n_max + 1)):
        print(f"{row.n:>6d} {row.parity:>6} {row.deviation:12.4e} {row.frame_deviation:12.4e}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="prodform", description=__doc__.split("\n\n")[0])
    p.add_argument("--version", action="version", version=__version__)
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)
    for name in ("zeno-sweep", "trotter-sweep", "beta-curve"):
        sp = sub.add_parser(name)
        sp.add_argument("--config", type=Path)
        sp.add_argument("--out", type=Path, default=Path("out"))
        sp.add_argument("--preset", choices=sorted(PRESETS))
        sp.add_argument("--seeds", type=int, help="use seeds 0..N-1")
        sp.add_argument("--threads", type=int, default=1)
    sp = sub.add_parser("qubit-check")
    sp.add_argument("--alpha", type=float, required=True)
    sp.add_argument("--n-max", type=int, default=10**6)
    sp = sub.add_parser("resonance-demo")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--n-max", type=int, default=1000)
    sp.add_argument("--dim", type=int, default=5)
    sp.add_argument("--commuting", action="store_true")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    if args.command in ("zeno-sweep", "trotter-sweep", "beta-curve"):
        return _run_campaign(args.command, args.config, args.out, args.preset, args.seeds, args.threads)
    if args.command == "qubit-check":
        return cmd_qubit_check(args.alpha, args.n_max)
    return cmd_resonance_demo(args.seed, args.n_max, args.dim, args.commuting)


if __name__ == "__main__":
    sys.exit(main())
