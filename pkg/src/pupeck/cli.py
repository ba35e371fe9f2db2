"""Command-line entry points: run experiments, summarize results, describe data."""

import argparse
import json
import sys

from . import harness
from .data import load_csv, preprocess, summarize

SUMMARY_COLUMNS = ["dataset", "n_features", "n_obs", "n_noncont", "n_cont",
                   "n_neg", "n_pos", "pos_pct", "mean_abs_corr"]


def _cmd_run(args):
    with open(args.config, encoding="utf-8") as fh:
        cfg = harness.ExperimentConfig(**json.load(fh))
    rows = harness.run_experiment(cfg)
    paths = harness.emit_report(rows, args.out)
    failed = sum(1 for r in rows if r.error)
    for kind, path in paths.items():
        print(f"{kind}: {path}")
    if failed:
        print(f"{failed} cell(s) failed", file=sys.stderr)
    return min(failed, 255)


def _cmd_summarize(args):
    path = harness.summarize_raw(args.raw, args.out)
    print(f"summary: {path}")
    return 0


def _cmd_describe(args):
    ds = preprocess(load_csv(args.path, args.target), corr_threshold=args.corr_threshold)
    sm = summarize(ds)
    name = args.path.rsplit("/", 1)[-1].rsplit(".", 1)[0]
    values = [name, sm.n_features, sm.n_obs, sm.n_noncont, sm.n_cont,
              sm.n_neg, sm.n_pos, round(sm.pos_pct, 2), round(sm.mean_abs_corr, 2)]
    print(",".join(SUMMARY_COLUMNS))
    print(",".join(str(v) for v in values))
    return 0


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(prog="pupeck", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="run an experiment grid from a JSON config")
    p_run.add_argument("--config", required=True, help="JSON file mirroring ExperimentConfig")
    p_run.add_argument("--out", default="results", help="output directory for reports")
    p_run.set_defaults(func=_cmd_run)

    p_sum = sub.add_parser("summarize", help="rebuild the summary from a raw results CSV")
    p_sum.add_argument("--raw", required=True)
    p_sum.add_argument("--out", required=True)
    p_sum.set_defaults(func=_cmd_summarize)

    p_ds = sub.add_parser("datasets", help="dataset utilities")
    ds_sub = p_ds.add_subparsers(dest="datasets_command", required=True)
    p_desc = ds_sub.add_parser("describe", help="print a one-row property summary CSV")
    p_desc.add_argument("path")
    p_desc.add_argument("--target", required=True, help="name of the binary target column")
    p_desc.add_argument("--corr-threshold", type=float, default=0.9)
    p_desc.set_defaults(func=_cmd_describe)

    args = ap.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
