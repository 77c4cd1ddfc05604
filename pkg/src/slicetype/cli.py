"""Command-line entry point.

Subcommands:
  analyze    difficulty report for transcribing a text under each condition
  simulate   closed-loop jittered transcription trials
  corpus     build a corpus directory from raw text, or print corpus stats
  serve      run the websocket session service

The corpus used by any command resolves in order: --corpus flag, the
SLICETYPE_CORPUS environment variable (a directory holding unigrams.txt
and bigrams.txt), then the bundled corpus."""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from slicetype.corpus import (
    CorpusFormatError,
    NgramModel,
    build_from_text,
    default_model,
    load_corpus_dir,
    save_corpus_dir,
)
from slicetype.engine import Mode
from slicetype.fitts import Condition, analyze
from slicetype.geometry import DEFAULT_RADII
from slicetype.simulate import JitterModel, simulate_typing

ENV_CORPUS = "SLICETYPE_CORPUS"


# -- shared helpers ----------------------------------------------------------


def _resolve_corpus(flag: str | None) -> NgramModel:
    path = flag or os.environ.get(ENV_CORPUS)
    if path is None:
        return default_model()
    return load_corpus_dir(path)


def _read_text(args: argparse.Namespace) -> str:
    if getattr(args, "text", None) is not None:
        return args.text
    if getattr(args, "text_file", None) is not None:
        return Path(args.text_file).read_text(encoding="utf-8")
    raise SystemExit("error: one of --text or --text-file is required")


def _parse_radii(value: str) -> tuple[float, float, float]:
    parts = value.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("radii must be three comma-separated numbers")
    try:
        radii = tuple(float(p) for p in parts)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    return radii  # validated for ordering by the layout builder


def _parse_conditions(value: str) -> list[Condition]:
    names = [p.strip() for p in value.split(",") if p.strip()]
    if not names:
        raise argparse.ArgumentTypeError("empty condition list")
    try:
        return [Condition(name) for name in names]
    except ValueError:
        valid = ", ".join(c.value for c in Condition)
        raise argparse.ArgumentTypeError(f"conditions must be among: {valid}") from None


def _parse_mt(value: str) -> tuple[float, float]:
    parts = value.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError("expected intercept_ms,slope_ms")
    return float(parts[0]), float(parts[1])


# -- schema checks for machine-readable outputs ------------------------------


def _check_analyze_schema(doc: dict) -> None:
    for field, kind in (
        ("text", str), ("space_policy", str), ("radii", list),
        ("flags", list), ("totals", dict), ("steps", dict),
    ):
        if not isinstance(doc.get(field), kind):
            raise ValueError(f"analyze output missing {field!r}")
    for name, steps in doc["steps"].items():
        if name not in doc["totals"]:
            raise ValueError(f"steps for {name!r} lack a total")
        for step in steps:
            if not {"kind", "amplitude", "width", "difficulty"} <= set(step):
                raise ValueError(f"malformed step in {name!r}")


def _check_simulate_schema(doc: dict) -> None:
    for field, kind in (
        ("text", str), ("condition", str), ("sigma_deg", (int, float)),
        ("dwell_ms", (int, float)), ("trials", list),
        ("mean_wpm", (int, float)), ("ci95_wpm", (int, float)),
    ):
        if not isinstance(doc.get(field), kind):
            raise ValueError(f"simulate output missing {field!r}")
    for trial in doc["trials"]:
        if not {"seed", "wpm", "elapsed_ms", "dwell_resets", "samples"} <= set(trial):
            raise ValueError("malformed trial row")


# -- analyze -----------------------------------------------------------------


def cmd_analyze(args: argparse.Namespace) -> int:
    text = _read_text(args)
    model = _resolve_corpus(args.corpus)
    report = analyze(
        text,
        model,
        radii=args.radii,
        space_policy=args.space_policy,
        conditions=args.conditions,
    )
    doc = report.to_dict()
    _check_analyze_schema(doc)

    lines = [f"text: {report.text!r}", f"space policy: {report.space_policy}"]
    for flag in report.flags:
        lines.append(f"note: {flag}")
    lines.append(f"{'condition':>18s} {'steps':>6s} {'total ID (bits)':>16s}")
    for name, steps in report.steps.items():
        lines.append(f"{name:>18s} {len(steps):>6d} {report.total(name):>16.2f}")
    if args.mt is not None:
        intercept, slope = args.mt
        lines.append(f"movement time (ms) at MT = {intercept:g} + {slope:g}*ID:")
        for name, total in report.movement_time_totals(intercept, slope).items():
            lines.append(f"{name:>18s} {total:>16.0f}")
    print("\n".join(lines))

    if args.out:
        Path(args.out).write_text(report.to_json() + "\n", encoding="utf-8")
        print(f"wrote {args.out}")
    if args.csv:
        Path(args.csv).write_text(report.to_csv(), encoding="utf-8")
        print(f"wrote {args.csv}")
    if args.svg:
        Path(args.svg).write_text(report.to_svg() + "\n", encoding="utf-8")
        print(f"wrote {args.svg}")
    return 0


# -- simulate ----------------------------------------------------------------


def _run_trial(packed: tuple) -> dict:
    corpus_path, text, condition_value, sigma_deg, dwell_ms, radii, seed = packed
    model = _resolve_corpus(corpus_path)
    result = simulate_typing(
        text,
        model,
        condition=Condition(condition_value),
        jitter=JitterModel(sigma_deg=sigma_deg, seed=seed),
        dwell_ms=dwell_ms,
        radii=radii,
    )
    return {
        "seed": seed,
        "wpm": result.wpm,
        "elapsed_ms": result.elapsed_ms,
        "dwell_resets": result.dwell_resets,
        "samples": result.samples,
        "transcript_ok": result.transcript == " ".join(text.lower().split()) + " ",
    }


def cmd_simulate(args: argparse.Namespace) -> int:
    text = _read_text(args)
    condition = Condition(args.condition)
    if condition is Condition.DEDICATED_AREA:
        print("error: dedicated_area is an analysis-only condition", file=sys.stderr)
        return 2
    jobs = [
        (args.corpus, text, condition.value, args.jitter_deg, args.dwell_ms,
         args.radii, args.seed + i)
        for i in range(args.trials)
    ]
    if args.trials > 1 and os.cpu_count() and os.cpu_count() > 1:
        with ProcessPoolExecutor(max_workers=min(args.trials, os.cpu_count())) as pool:
            rows = list(pool.map(_run_trial, jobs))
    else:
        rows = [_run_trial(job) for job in jobs]

    wpms = [row["wpm"] for row in rows]
    mean = sum(wpms) / len(wpms)
    if len(wpms) > 1:
        var = sum((w - mean) ** 2 for w in wpms) / (len(wpms) - 1)
        ci95 = 1.96 * math.sqrt(var / len(wpms))
    else:
        ci95 = 0.0

    print(f"condition {condition.value}, sigma {args.jitter_deg} deg, "
          f"dwell {args.dwell_ms:g} ms, {args.trials} trial(s)")
    print(f"{'seed':>6s} {'wpm':>8s} {'resets':>7s} {'elapsed_s':>10s}")
    for row in rows:
        print(f"{row['seed']:>6d} {row['wpm']:>8.2f} {row['dwell_resets']:>7d} "
              f"{row['elapsed_ms'] / 1000:>10.1f}")
    print(f"mean wpm {mean:.2f} +/- {ci95:.2f} (95% CI)")

    if args.json:
        doc = {
            "text": text,
            "condition": condition.value,
            "sigma_deg": args.jitter_deg,
            "dwell_ms": args.dwell_ms,
            "trials": rows,
            "mean_wpm": mean,
            "ci95_wpm": ci95,
        }
        _check_simulate_schema(doc)
        Path(args.json).write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8")
        print(f"wrote {args.json}")
    if not all(row["transcript_ok"] for row in rows):
        print("warning: some trials diverged from the target text", file=sys.stderr)
        return 1
    return 0


# -- corpus ------------------------------------------------------------------


def cmd_corpus(args: argparse.Namespace) -> int:
    if args.corpus_cmd == "build":
        raw = Path(args.text_file).read_text(encoding="utf-8")
        model = build_from_text(raw)
        save_corpus_dir(model, args.out)
        stats = model.stats()
        print(f"wrote {args.out}: {stats['words']} words, "
              f"{stats['bigram_pairs']} bigram pairs")
        return 0
    if args.corpus_cmd == "stats":
        model = _resolve_corpus(args.corpus)
        stats = model.stats()
        ranking = model.letter_ranking()
        if args.json:
            print(json.dumps({**stats, "letter_ranking": ranking}, indent=2))
        else:
            for field, value in stats.items():
                print(f"{field}: {value}")
            print(f"letter_ranking: {ranking}")
        return 0
    raise SystemExit(f"unknown corpus subcommand {args.corpus_cmd!r}")


# -- serve -------------------------------------------------------------------


def cmd_serve(args: argparse.Namespace) -> int:
    from slicetype.service import serve_forever

    corpora = {"default": _resolve_corpus(args.corpus)}
    if args.corpus or os.environ.get(ENV_CORPUS):
        corpora["bundled"] = default_model()
    static = args.static
    if static is not None and not Path(static).is_dir():
        print(f"error: static dir {static!r} does not exist", file=sys.stderr)
        return 2
    print(f"serving on ws://{args.host}:{args.port} "
          f"(static: {static or 'none'}, corpora: {', '.join(corpora)})")
    serve_forever(
        args.host,
        args.port,
        corpora=corpora,
        static_dir=static,
        dwell_ms=args.dwell_ms,
        mode=Mode(args.mode),
    )
    return 0


# -- argument wiring -----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="slicetype",
        description="Merging gaze keyboard: analysis, simulation, and live service.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    analyze_p = sub.add_parser("analyze", help="difficulty report for a text")
    analyze_p.add_argument("--text", help="text to transcribe (a-z words)")
    analyze_p.add_argument("--text-file", help="read the text from a file")
    analyze_p.add_argument("--corpus", help="corpus directory")
    analyze_p.add_argument("--conditions", type=_parse_conditions,
                           default=list(Condition), metavar="A,B,...",
                           help="subset of conditions to analyze")
    analyze_p.add_argument("--space-policy", choices=("free", "corner"), default="free")
    analyze_p.add_argument("--radii", type=_parse_radii, default=DEFAULT_RADII,
                           metavar="R1,R2,R3")
    analyze_p.add_argument("--mt", type=_parse_mt, metavar="A_MS,B_MS",
                           help="also print movement times for MT = a + b*ID")
    analyze_p.add_argument("--out", help="write the full report as JSON")
    analyze_p.add_argument("--csv", help="write per-step rows as CSV")
    analyze_p.add_argument("--svg", help="write a bar chart of totals as SVG")
    analyze_p.set_defaults(func=cmd_analyze)

    sim_p = sub.add_parser("simulate", help="closed-loop transcription trials")
    sim_p.add_argument("--text", help="text to transcribe (a-z words)")
    sim_p.add_argument("--text-file", help="read the text from a file")
    sim_p.add_argument("--corpus", help="corpus directory")
    sim_p.add_argument("--condition", default=Condition.PRED_MERGE.value,
                       choices=[c.value for c in Condition if c is not Condition.DEDICATED_AREA])
    sim_p.add_argument("--jitter-deg", type=float, default=0.45)
    sim_p.add_argument("--dwell-ms", type=float, default=1000.0)
    sim_p.add_argument("--trials", type=int, default=1)
    sim_p.add_argument("--seed", type=int, default=0)
    sim_p.add_argument("--radii", type=_parse_radii, default=DEFAULT_RADII,
                       metavar="R1,R2,R3")
    sim_p.add_argument("--json", help="write trial rows and summary as JSON")
    sim_p.set_defaults(func=cmd_simulate)

    corpus_p = sub.add_parser("corpus", help="corpus utilities")
    corpus_sub = corpus_p.add_subparsers(dest="corpus_cmd", required=True)
    build_p = corpus_sub.add_parser("build", help="build a corpus directory from raw text")
    build_p.add_argument("--text-file", required=True)
    build_p.add_argument("--out", required=True, help="directory to write")
    stats_p = corpus_sub.add_parser("stats", help="print corpus statistics")
    stats_p.add_argument("--corpus", help="corpus directory")
    stats_p.add_argument("--json", action="store_true")
    corpus_p.set_defaults(func=cmd_corpus)

    serve_p = sub.add_parser("serve", help="run the websocket session service")
    serve_p.add_argument("--host", default="127.0.0.1")
    serve_p.add_argument("--port", type=int, default=8080)
    serve_p.add_argument("--corpus", help="corpus directory")
    serve_p.add_argument("--static", help="also serve this directory over HTTP")
    serve_p.add_argument("--dwell-ms", type=float, default=1000.0)
    serve_p.add_argument("--mode", choices=[m.value for m in Mode],
                         default=Mode.MERGING.value)
    serve_p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (OSError, ValueError, CorpusFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
