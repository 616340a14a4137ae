"""qpack command line.

    qpack orbit    --config fig3.json
    qpack generate --config fig3.json --out out/ --format latex
    qpack modify   --config fig4.json
    qpack diffract --config fig3.json
    qpack verify   --config fig3.json

Summaries go to stdout as ``key=value`` lines.  Exit status: 0 ok,
1 invalid input (config, seeds, non-cluster embedding), 2 runtime failure.
Bundled configs (fig3.json, fig4.json, icosahedral3.json) are found by bare
file name.
"""

from __future__ import annotations

import argparse
import logging
import sys
import time
from pathlib import Path

import numpy as np

from . import export
from .cluster import ClusterError, cyclic_orbit, icosahedral_orbit
from .config import FORMATS, ConfigError, RunConfig, load_config
from .diffract import diffraction_map, extract_peaks
from .embed import EmbeddingError
from .verify import embedding_ok, oracle_agreement, sample_points

log = logging.getLogger("qpack")

EXIT_OK, EXIT_INVALID, EXIT_RUNTIME = 0, 1, 2


def _emit(**kv) -> None:
    for key, val in kv.items():
        print(f"{key}={val}")


def _outdir(args, cfg: RunConfig) -> Path:
    out = Path(args.out or cfg.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    return out


def cmd_orbit(args, cfg: RunConfig) -> int:
    _emit(group=cfg.group)
    for i, s in enumerate(cfg.seeds):
        orb = cyclic_orbit(cfg.group.n, s) if cfg.group.kind == "cyclic" else icosahedral_orbit(s)
        _emit(**{f"orbit{i + 1}_seed": list(s), f"orbit{i + 1}_size": len(orb)})
    cluster = cfg.cluster()
    _emit(k=cluster.k, d=cluster.d)
    for i, v in enumerate(cluster.reps):
        _emit(**{f"v{i + 1}": " ".join(repr(float(c)) for c in v)})
    return EXIT_OK


def _pattern_cmd(args, cfg: RunConfig, method: str) -> int:
    t0 = time.perf_counter()
    pattern = cfg.pattern(method)
    elapsed = time.perf_counter() - t0
    if pattern.truncated:
        log.warning("enumeration stopped at cap=%s with lattice points still queued", cfg.cap)
    out = _outdir(args, cfg)
    formats = [args.format] if args.format else cfg.formats
    suffix = {"csv": "csv", "latex": "tex", "svg": "svg"}
    written = []
    for fmt in formats:
        if fmt != "csv" and not pattern.points:
            log.warning("skipping %s export of an empty pattern", fmt)
            continue
        if fmt != "csv" and pattern.d != 2:
            log.warning("skipping %s export of a %dD pattern", fmt, pattern.d)
            continue
        path = out / f"{cfg.name}_{method}.{suffix[fmt]}"
        export.export_pattern(pattern, fmt, path, cfg.p)
        written.append(str(path))
    _emit(
        method=method,
        analysed=pattern.analysed,
        emitted=len(pattern),
        truncated=str(pattern.truncated).lower(),
        seconds=f"{elapsed:.3f}",
        files=",".join(written),
    )
    return EXIT_OK


def cmd_diffract(args, cfg: RunConfig) -> int:
    pattern = cfg.pattern()
    dmap = diffraction_map(pattern, cfg.grid, cfg.threshold_ratio)
    out = _outdir(args, cfg)
    inten = export.write_intensity_csv(dmap, out / f"{cfg.name}_{pattern.method}_intensity.csv")
    peaks = export.write_peaks_csv(dmap, out / f"{cfg.name}_{pattern.method}_peaks.csv")
    _emit(
        method=pattern.method,
        points=len(pattern),
        i0=repr(dmap.i0),
        peaks=len(extract_peaks(dmap)),
        files=f"{inten},{peaks}",
    )
    return EXIT_OK


def cmd_verify(args, cfg: RunConfig) -> int:
    passed = failed = 0
    cluster = cfg.cluster()
    if cluster.group is not None and cfg.cluster_points is None:
        ok = cluster.is_closed()
        _emit(check_closure="pass" if ok else "fail")
        passed, failed = passed + ok, failed + (not ok)
    emb = cfg.embedding()  # raises EmbeddingError for non-clusters
    ok = embedding_ok(emb)
    _emit(check_embedding="pass" if ok else "fail", kappa=repr(emb.kappa))
    passed, failed = passed + ok, failed + (not ok)

    spec = cfg.strip(emb)
    rng = np.random.default_rng(cfg.seed)
    ys = sample_points(spec, cfg.verify_samples, rng)
    agr = oracle_agreement(spec, ys)
    ok = agr.disagree == 0
    _emit(
        check_oracle="pass" if ok else "fail",
        oracle_agree=agr.agree,
        oracle_disagree=agr.disagree,
        oracle_skipped=agr.skipped,
    )
    passed, failed = passed + ok, failed + (not ok)
    _emit(checks_passed=passed, checks_failed=failed)
    return EXIT_OK if failed == 0 else EXIT_RUNTIME


COMMANDS = {
    "orbit": cmd_orbit,
    "generate": lambda a, c: _pattern_cmd(a, c, "standard"),
    "modify": lambda a, c: _pattern_cmd(a, c, "modified"),
    "diffract": cmd_diffract,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qpack",
        description="Quasiperiodic packings of G-clusters by strip projection.",
    )
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("--config", required=True, help="JSON run configuration")
    parser.add_argument("--out", default=None, help="output directory (default: config out_dir)")
    parser.add_argument("--format", choices=FORMATS, default=None,
                        help="single export format (default: config formats)")
    parser.add_argument("-v", "--verbose", action="store_true")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        cfg = load_config(args.config)
        return COMMANDS[args.command](args, cfg)
    except (ConfigError, ClusterError, EmbeddingError, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except Exception as exc:  # noqa: BLE001
        log.exception("runtime failure")
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
