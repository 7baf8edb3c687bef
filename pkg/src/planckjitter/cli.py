"""Command-line front end: ``planckjitter {augment,sweep,diagram,selectivity,bench}``."""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import numpy as np

from . import __version__, analysis, bench, imageio, plotting
from .errors import CorruptImageError, UnsupportedFormatError
from .jitter import AUGMENTATIONS, JitterConfig, image_rng
from .spectral import TemperatureRange

DEFAULT_SEED = 1234
THREADS_ENV = "PLANCKIAN_THREADS"
LOSSLESS = (".png", ".ppm")


class CliError(Exception):
    pass


def worker_count(requested: int | None) -> int:
    n = requested or os.cpu_count() or 1
    cap = os.environ.get(THREADS_ENV)
    if cap:
        try:
            n = min(n, max(1, int(cap)))
        except ValueError:
            raise CliError(f"{THREADS_ENV} must be an integer, got {cap!r}") from None
    return max(1, n)


def list_images(in_dir: Path) -> list[Path]:
    if not in_dir.is_dir():
        raise CliError(f"input directory not found: {in_dir}")
    files = sorted(p for p in in_dir.iterdir() if p.is_file() and p.suffix.lower() in imageio.READ_FORMATS)
    if not files:
        raise CliError(f"no readable images in {in_dir}")
    return files


def output_suffix(src: Path, fmt: str | None) -> str:
    if fmt:
        return "." + fmt
    return src.suffix.lower() if src.suffix.lower() in LOSSLESS else ".png"


def sha256(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def write_manifest(path: Path, command: str, args: dict, seed: int, outputs: list[Path], root: Path, **extra):
    manifest = {
        "tool": "planckjitter",
        "version": __version__,
        "command": command,
        "seed": seed,
        "args": args,
        **extra,
        "outputs": {str(p.relative_to(root)): sha256(p) for p in outputs},
    }
    path.write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n")


def prepare_out_dir(out_dir: Path, force: bool) -> None:
    if out_dir.exists() and any(out_dir.iterdir()) and not force:
        raise CliError(f"output directory {out_dir} is not empty; pass --force to overwrite")
    out_dir.mkdir(parents=True, exist_ok=True)


def jitter_config(args) -> JitterConfig:
    try:
        return JitterConfig(
            temperature_range=TemperatureRange(args.t_min, args.t_max),
            temperature_sampling=args.temperature_sampling,
            brightness=args.brightness,
            contrast=args.contrast,
            saturation=args.saturation,
            hue=args.hue,
            cj_apply_probability=args.cj_p,
            grayscale_probability=args.gray_p,
            pj_apply_probability=args.pj_p,
            linear_light=args.linear_light,
            literal_coefficients=args.literal_coefficients,
            seed=args.seed,
        )
    except ValueError as exc:
        raise CliError(str(exc)) from None


def _load(path: Path) -> np.ndarray:
    try:
        return imageio.load(path)
    except (OSError, UnsupportedFormatError, CorruptImageError) as exc:
        raise CliError(f"cannot read {path}: {exc}") from None


def _save(img, path: Path) -> Path:
    try:
        return imageio.save(img, path)
    except OSError as exc:
        raise CliError(f"cannot write {path}: {exc}") from None


# -- subcommands --------------------------------------------------------------


def cmd_augment(args) -> int:
    in_dir, out_dir = Path(args.in_dir), Path(args.out_dir)
    files = list_images(in_dir)
    cfg = jitter_config(args)
    fn = AUGMENTATIONS[args.kind]
    if args.views < 1:
        raise CliError("--views must be at least 1")
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise CliError(f"cannot create {out_dir}: {exc}") from None

    def work(item):
        index, src = item
        img = _load(src)
        written = []
        for v in range(args.views):
            out = fn(img, cfg, image_rng(args.seed, index, v))
            dst = out_dir / f"{src.stem}_v{v}{output_suffix(src, args.format)}"
            written.append(_save(out, dst))
        return written

    with ThreadPoolExecutor(worker_count(args.workers)) as pool:
        outputs = [p for batch in pool.map(work, enumerate(files)) for p in batch]
    write_manifest(
        out_dir / "manifest.json", "augment", resolved_args(args), args.seed, outputs, out_dir,
        config=cfg.to_dict(), inputs=[f.name for f in files],
    )
    print(f"wrote {len(outputs)} images to {out_dir}")
    return 0


def cmd_sweep(args) -> int:
    in_dir, out_dir = Path(args.in_dir), Path(args.out_dir)
    files = list_images(in_dir)
    if args.k < 2:
        raise CliError("--k must be at least 2")
    prepare_out_dir(out_dir, args.force)
    trange = TemperatureRange(args.t_min, args.t_max)

    def work(src):
        img = _load(src)
        written = []
        for t, (version,) in analysis.illuminant_sweep([img], args.k, trange):
            sub = out_dir / analysis.sweep_dirname(t)
            sub.mkdir(exist_ok=True)
            written.append(_save(version, sub / f"{src.stem}{output_suffix(src, args.format)}"))
        return written

    with ThreadPoolExecutor(worker_count(args.workers)) as pool:
        outputs = sorted(p for batch in pool.map(work, files) for p in batch)
    temps = sorted({float(t) for t in np.linspace(trange.t_min, trange.t_max, args.k)})
    write_manifest(
        out_dir / "manifest.json", "sweep", resolved_args(args), args.seed, outputs, out_dir,
        temperatures=temps, inputs=[f.name for f in files],
    )
    print(f"wrote {args.k} sweep directories to {out_dir}")
    return 0


def cmd_diagram(args) -> int:
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    cfg = jitter_config(args)
    rng = np.random.default_rng(args.seed)
    points = analysis.chromaticity_cloud(args.kind, args.n, rng, args.inputs, cfg)
    csv_path = out.with_suffix(".csv")
    svg_path = out.with_suffix(".svg")
    np.savetxt(csv_path, points, delimiter=",", header="x,y", comments="", fmt="%.10f")
    locus = analysis.locus_polyline(cfg.temperature_range)
    plotting.chromaticity_svg(points, svg_path, locus, title=f"{args.kind} jitter, {args.inputs} inputs")
    dist = analysis.distance_to_polyline(points, locus)
    stats = {
        "hull_area": analysis.hull_area(points),
        "fraction_within_0.01_of_locus": float(np.mean(dist < 0.01)),
        "quadrants": analysis.quadrant_counts(points),
    }
    write_manifest(
        out.with_suffix(".manifest.json"), "diagram", resolved_args(args), args.seed,
        [csv_path, svg_path], out.parent, config=cfg.to_dict(), stats=stats,
    )
    print(json.dumps(stats, indent=2))
    return 0


def cmd_selectivity(args) -> int:
    src, out = Path(args.acts_file), Path(args.out)
    if not src.is_file():
        raise CliError(f"activation file not found: {src}")
    try:
        acts = analysis.load_activations(src)
        report = analysis.selectivity_report(acts)
    except ValueError as exc:
        raise CliError(f"{src}: {exc}") from None
    out.parent.mkdir(parents=True, exist_ok=True)
    report_path = out.with_suffix(".csv")
    hist_path = out.with_suffix(".histogram.json")
    report_path.write_text(report.to_csv())
    hist = report.histogram()
    hist_path.write_text(json.dumps(hist, indent=2) + "\n")
    write_manifest(
        out.with_suffix(".manifest.json"), "selectivity", resolved_args(args), args.seed,
        [report_path, hist_path], out.parent,
    )
    for label, count in hist.items():
        print(f"{label:>16}: {count}")
    return 0


def cmd_bench(args) -> int:
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    try:
        resolutions = [int(r) for r in args.resolutions.split(",") if r.strip()]
    except ValueError:
        raise CliError(f"bad --resolutions {args.resolutions!r}") from None
    if not resolutions or args.repeats < 1:
        raise CliError("need at least one resolution and one repeat")
    cfg = jitter_config(args)
    results = bench.run_benchmark(resolutions, args.repeats, args.seed, cfg)
    csv_path = out.with_suffix(".csv")
    summary_path = out.with_suffix(".summary.txt")
    svg_path = out.with_suffix(".svg")
    csv_path.write_text(bench.to_csv(results))
    table = bench.summary_table(results)
    summary_path.write_text(table + "\n")
    plotting.bench_svg(results, svg_path)
    write_manifest(
        out.with_suffix(".manifest.json"), "bench", resolved_args(args), args.seed,
        [csv_path, summary_path, svg_path], out.parent, config=cfg.to_dict(),
    )
    print(table)
    return 0


# -- argument parsing ---------------------------------------------------------

# paths and execution knobs; none of them changes the bytes written
NOT_RECORDED = {"in_dir", "out_dir", "acts_file", "command", "func", "from_manifest", "workers"}


def resolved_args(args) -> dict:
    return {k: v for k, v in sorted(vars(args).items()) if k not in NOT_RECORDED}


def _add_jitter_flags(p: argparse.ArgumentParser) -> None:
    d = JitterConfig()
    g = p.add_argument_group("jitter configuration")
    g.add_argument("--t-min", type=float, default=d.temperature_range.t_min, help="lowest black-body temperature, K (default: %(default)s)")
    g.add_argument("--t-max", type=float, default=d.temperature_range.t_max, help="highest black-body temperature, K (default: %(default)s)")
    g.add_argument("--temperature-sampling", choices=("uniform", "mired", "discrete"), default=d.temperature_sampling, help="temperature distribution (default: %(default)s)")
    g.add_argument("--brightness", type=float, default=d.brightness, help="brightness strength (default: %(default)s)")
    g.add_argument("--contrast", type=float, default=d.contrast, help="contrast strength (default: %(default)s)")
    g.add_argument("--saturation", type=float, default=d.saturation, help="saturation strength, default jitter only (default: %(default)s)")
    g.add_argument("--hue", type=float, default=d.hue, help="hue strength, default jitter only (default: %(default)s)")
    g.add_argument("--cj-p", type=float, default=d.cj_apply_probability, help="probability of applying the default colour jitter (default: %(default)s)")
    g.add_argument("--gray-p", type=float, default=d.grayscale_probability, help="random grayscale probability (default: %(default)s)")
    g.add_argument("--pj-p", type=float, default=d.pj_apply_probability, help="probability of applying Planckian Jitter (default: %(default)s)")
    g.add_argument("--linear-light", action="store_true", help="re-illuminate in linear light instead of on gamma-encoded values")
    g.add_argument("--literal-coefficients", action="store_true", help="use --brightness/--contrast as fixed factors instead of strengths")


def build_parser(defaults: dict | None = None) -> argparse.ArgumentParser:
    """``defaults`` maps a subcommand name to option values overriding the built-in defaults."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="root random seed (default: %(default)s)")
    common.add_argument("--from-manifest", metavar="PATH", help="take option values from a previous run's manifest.json")

    parser = argparse.ArgumentParser(prog="planckjitter", description="Planckian Jitter augmentation and analysis tools.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("augment", parents=[common], help="write jittered views of every image in a directory")
    p.add_argument("in_dir")
    p.add_argument("out_dir")
    p.add_argument("--kind", choices=sorted(AUGMENTATIONS), default="planckian", help="augmentation (default: %(default)s)")
    p.add_argument("--views", type=int, default=2, help="augmented copies per image (default: %(default)s)")
    p.add_argument("--format", choices=("png", "ppm"), help="output format (default: input format, PNG for JPEG inputs)")
    p.add_argument("--workers", type=int, help=f"worker threads (default: CPU count, capped by ${THREADS_ENV})")
    _add_jitter_flags(p)
    p.set_defaults(func=cmd_augment)

    p = sub.add_parser("sweep", parents=[common], help="re-illuminate a directory under k evenly spaced temperatures")
    p.add_argument("in_dir")
    p.add_argument("out_dir")
    p.add_argument("--k", type=int, default=25, help="number of temperatures (default: %(default)s)")
    p.add_argument("--t-min", type=float, default=3000.0, help="first temperature, K (default: %(default)s)")
    p.add_argument("--t-max", type=float, default=15000.0, help="last temperature, K (default: %(default)s)")
    p.add_argument("--format", choices=("png", "ppm"), help="output format (default: input format, PNG for JPEG inputs)")
    p.add_argument("--workers", type=int, help=f"worker threads (default: CPU count, capped by ${THREADS_ENV})")
    p.add_argument("--force", action="store_true", help="write into a non-empty output directory")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("diagram", parents=[common], help="xy chromaticity cloud of a jitter as CSV + SVG")
    p.add_argument("--kind", choices=("planckian", "default"), required=True)
    p.add_argument("--n", type=int, default=10000, help="number of samples (default: %(default)s)")
    p.add_argument("--inputs", choices=("uniform", "gray"), default="uniform", help="initial colour distribution (default: %(default)s)")
    p.add_argument("--out", required=True, help="output path prefix; writes .csv, .svg and .manifest.json")
    _add_jitter_flags(p)
    p.set_defaults(func=cmd_diagram)

    p = sub.add_parser("selectivity", parents=[common], help="colour selectivity index per neuron")
    p.add_argument("acts_file", help="activation records, .csv or .json")
    p.add_argument("--out", required=True, help="output path prefix; writes .csv, .histogram.json and .manifest.json")
    p.set_defaults(func=cmd_selectivity)

    p = sub.add_parser("bench", parents=[common], help="time Planckian Jitter against the default colour jitter")
    p.add_argument("--resolutions", default=",".join(map(str, bench.DEFAULT_RESOLUTIONS)), help="comma-separated square sizes (default: %(default)s)")
    p.add_argument("--repeats", type=int, default=bench.DEFAULT_REPEATS, help="timed runs per resolution (default: %(default)s)")
    p.add_argument("--out", required=True, help="output path prefix; writes .csv, .summary.txt, .svg and .manifest.json")
    _add_jitter_flags(p)
    p.set_defaults(func=cmd_bench)

    for name, values in (defaults or {}).items():
        sub.choices[name].set_defaults(**values)
    return parser


def parse_args(argv=None) -> argparse.Namespace:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.from_manifest:
        try:
            manifest = json.loads(Path(args.from_manifest).read_text())
        except (OSError, ValueError) as exc:
            parser.error(f"cannot read manifest: {exc}")
        if manifest.get("command") != args.command:
            parser.error(f"manifest is for {manifest.get('command')!r}, not {args.command!r}")
        # manifest values become defaults; flags on this command line still win
        args = build_parser({args.command: manifest["args"]}).parse_args(argv)
    if args.command == "diagram" and args.n < 1:
        parser.error("--n must be at least 1")
    return args


def main(argv=None) -> int:
    args = parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"planckjitter {args.command}: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
