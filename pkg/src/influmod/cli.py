"""Command-line front end: ``influmod {detect,sweep,score}``.

Exit codes: 0 ok, 1 input could not be read or parsed (or its ground truth
has no same-class pair), 2 bad parameters, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from contextlib import contextmanager
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .graph_io import Graph, GraphValidationError, ParseError, parse_labels, read_graph
from .influence import (
    DegenerateGraphError,
    InfluenceDomainError,
    InfluenceParams,
    check_alpha,
    influence_matrix,
    katz_scores,
)
from .linalg import ConvergenceError, SingularMatrixError
from .metrics import UndefinedPurityError, confusion_summary, purity
from .modularity import build_context
from .partition import detect_in_context

EXIT_OK, EXIT_PARSE, EXIT_PARAM, EXIT_NUMERIC = 0, 1, 2, 3
SWEEP_COLUMNS = ("alpha", "beta", "communities", "purity", "q_raw", "q_norm")
NEWMAN_BANNER = (
    "Newman mode: alpha=0, beta=1 reduces influence to the adjacency matrix "
    "(classical edge modularity, doubled)"
)


class ParameterError(ValueError):
    pass


@dataclass
class RunConfig:
    input_path: str
    format: Optional[str]
    alpha: Optional[float]
    alpha_sweep: Optional[tuple[float, float, int]]
    beta: float
    beta_sweep: Optional[tuple[float, float, int]]
    directed: bool
    output_format: str
    out: Optional[str]
    truth_path: Optional[str]


def parse_sweep(text: str) -> tuple[float, float, int]:
    """``"start:end:steps"`` -> (start, end, steps)."""
    parts = text.split(":")
    if len(parts) != 3:
        raise ParameterError(f"sweep must be start:end:steps, got {text!r}")
    try:
        start, end, steps = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise ParameterError(f"bad sweep range {text!r}") from None
    if steps < 2:
        raise ParameterError("sweep needs at least 2 steps")
    if start < 0 or end < start:
        raise ParameterError(f"sweep range must satisfy 0 <= start <= end, got {text!r}")
    return start, end, steps


def load_input(cfg: RunConfig) -> Graph:
    g = read_graph(cfg.input_path, cfg.format, directed=cfg.directed)
    if cfg.truth_path:
        with open(cfg.truth_path, encoding="utf-8") as fh:
            g = g.with_ground_truth(parse_labels(fh.read()))
    return g


def _jsonable(x):
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, (np.floating,)):
        return float(x)
    return x


def detect_report(g: Graph, params: InfluenceParams) -> dict:
    """Run detection and assemble the report dictionary (JSON schema)."""
    ctx = build_context(influence_matrix(g, params))
    part = detect_in_context(ctx)
    labels = g.node_labels
    report = {
        "params": {"alpha": params.alpha, "beta": params.beta},
        "mode": "newman" if params.alpha == 0 and params.beta == 1 else "influence",
        "communities": [[labels[i] for i in members] for members in part.communities()],
        "community_sizes": [len(m) for m in part.communities()],
        "q_raw": part.q,
        "q_normalized": part.q / ctx.w_total,
        "splits": [
            {
                "size": len(r.group),
                "delta_q": r.delta_q,
                "eigenvalue": r.leading_eigenvalue,
                "accepted": r.accepted,
            }
            for r in part.history
        ],
    }
    if g.ground_truth is not None:
        rep = purity(part.assignment, g.ground_truth)
        conf = confusion_summary(part.assignment, g.ground_truth)
        report["purity"] = {
            "value": rep.purity,
            "matched": rep.matched_pairs,
            "max": rep.max_pairs,
            "confusion": [
                {str(cls): n for cls, n in sorted(conf[k].items(), key=lambda kv: str(kv[0]))}
                for k in sorted(conf)
            ],
        }
    return report


def _write_detect(report: dict, fmt: str, out) -> None:
    if fmt == "json":
        json.dump(report, out, indent=2, default=_jsonable)
        out.write("\n")
    elif fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["node", "community"])
        for k, members in enumerate(report["communities"]):
            for lab in members:
                w.writerow([lab, k])
    else:
        p = report["params"]
        if report["mode"] == "newman":
            out.write(NEWMAN_BANNER + "\n")
        out.write(f"alpha={p['alpha']!r} beta={p['beta']!r}\n")
        out.write(f"communities: {len(report['communities'])}\n")
        out.write(f"Q (raw): {report['q_raw']!r}\n")
        out.write(f"Q/W (normalized, derived): {report['q_normalized']!r}\n")
        for k, members in enumerate(report["communities"]):
            out.write(f"  [{k}] size {len(members)}: {' '.join(members)}\n")
        out.write("splits:\n")
        for s in report["splits"]:
            verdict = "accepted" if s["accepted"] else "rejected"
            out.write(
                f"  size {s['size']:4d}  eigenvalue {s['eigenvalue']:.6g}  "
                f"delta_q {s['delta_q']:.6g}  {verdict}\n"
            )
        if "purity" in report:
            pur = report["purity"]
            out.write(f"purity: {pur['value']:.6f} ({pur['matched']}/{pur['max']} pairs)\n")
            for k, row in enumerate(pur["confusion"]):
                cells = ", ".join(f"{c}: {n}" for c, n in row.items())
                out.write(f"  [{k}] {cells}\n")


def cmd_detect(cfg: RunConfig, out) -> int:
    if cfg.alpha is None:
        raise ParameterError("detect needs --alpha")
    g = load_input(cfg)
    report = detect_report(g, InfluenceParams(cfg.alpha, cfg.beta))
    _write_detect(report, cfg.output_format, out)
    return EXIT_OK


def sweep_points(cfg: RunConfig) -> list[tuple[float, float]]:
    if cfg.alpha_sweep and cfg.beta_sweep:
        raise ParameterError("sweep either alpha or beta, not both")
    if cfg.alpha_sweep:
        start, end, steps = cfg.alpha_sweep
        return [(float(a), cfg.beta) for a in np.linspace(start, end, steps)]
    if cfg.beta_sweep:
        if cfg.alpha is None:
            raise ParameterError("a beta sweep needs a fixed --alpha")
        start, end, steps = cfg.beta_sweep
        return [(cfg.alpha, float(b)) for b in np.linspace(start, end, steps)]
    raise ParameterError("sweep needs --alpha-sweep or --beta-sweep")


def sweep_row(g: Graph, params: InfluenceParams) -> dict:
    ctx = build_context(influence_matrix(g, params))
    part = detect_in_context(ctx)
    rep = purity(part.assignment, g.ground_truth)
    return {
        "alpha": params.alpha,
        "beta": params.beta,
        "communities": part.community_count,
        "purity": rep.purity,
        "q_raw": part.q,
        "q_norm": part.q / ctx.w_total,
    }


def cmd_sweep(cfg: RunConfig, out) -> int:
    g = load_input(cfg)
    if g.ground_truth is None:
        raise ParameterError("sweep needs ground-truth classes (GML 'value' or --truth)")
    points = sweep_points(cfg)
    for alpha, beta in points:
        InfluenceParams(alpha, beta)
    check_alpha(g, max(a for a, _ in points))

    writer = csv.writer(out, lineterminator="\n") if cfg.output_format == "csv" else None
    if writer:
        writer.writerow(SWEEP_COLUMNS)
    rows = []
    try:
        for alpha, beta in points:
            row = sweep_row(g, InfluenceParams(alpha, beta))
            rows.append(row)
            if writer:
                writer.writerow([repr(row[c]) if isinstance(row[c], float) else row[c]
                                 for c in SWEEP_COLUMNS])
            elif cfg.output_format == "text":
                out.write(
                    f"alpha={row['alpha']:.6g} beta={row['beta']:.6g} "
                    f"communities={row['communities']} purity={row['purity']:.4f} "
                    f"q_raw={row['q_raw']:.6g} q_norm={row['q_norm']:.6g}\n"
                )
            out.flush()
    finally:
        if cfg.output_format == "json":
            json.dump(rows, out, indent=2)
            out.write("\n")
            out.flush()
    return EXIT_OK


def score_ranking(g: Graph, params: InfluenceParams) -> list[tuple[str, float]]:
    """Nodes by descending influence score, ties broken by label."""
    scores = katz_scores(influence_matrix(g, params))
    ranked = sorted(zip(g.node_labels, scores.tolist()), key=lambda t: (-t[1], t[0]))
    return ranked


def cmd_score(cfg: RunConfig, out) -> int:
    if cfg.alpha is None:
        raise ParameterError("score needs --alpha")
    g = load_input(cfg)
    ranked = score_ranking(g, InfluenceParams(cfg.alpha, cfg.beta))
    if cfg.output_format == "json":
        json.dump(
            {
                "params": {"alpha": cfg.alpha, "beta": cfg.beta},
                "scores": [{"node": lab, "score": s} for lab, s in ranked],
            },
            out,
            indent=2,
        )
        out.write("\n")
    elif cfg.output_format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["node", "score"])
        for lab, s in ranked:
            w.writerow([lab, repr(s)])
    else:
        width = max(len(lab) for lab, _ in ranked)
        for lab, s in ranked:
            out.write(f"{lab:<{width}}  {s:.10g}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="influmod",
        description="Community detection by influence-based modularity.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, default_output):
        p.add_argument("--input", required=True, help="graph file")
        p.add_argument("--format", choices=("gml", "edgelist"),
                       help="input format (default: from file suffix)")
        p.add_argument("--alpha", type=float, help="indirect attenuation factor")
        p.add_argument("--beta", type=float, default=1.0,
                       help="direct attenuation factor (default 1.0)")
        p.add_argument("--directed", action="store_true",
                       help="treat edge-list lines as directed edges")
        p.add_argument("--truth", help="optional '<node> <class>' file of ground-truth classes")
        p.add_argument("--output", choices=("json", "csv", "text"), default=default_output)
        p.add_argument("--out", help="write the report here instead of stdout")

    common(sub.add_parser("detect", help="detect communities"), "text")
    sweep = sub.add_parser("sweep", help="purity and modularity over a parameter range")
    common(sweep, "csv")
    sweep.add_argument("--alpha-sweep", help="start:end:steps")
    sweep.add_argument("--beta-sweep", help="start:end:steps (alpha fixed by --alpha)")
    common(sub.add_parser("score", help="rank nodes by influence score"), "text")
    return parser


def _config(ns: argparse.Namespace) -> RunConfig:
    alpha_sweep = getattr(ns, "alpha_sweep", None)
    beta_sweep = getattr(ns, "beta_sweep", None)
    return RunConfig(
        input_path=ns.input,
        format=ns.format,
        alpha=ns.alpha,
        alpha_sweep=parse_sweep(alpha_sweep) if alpha_sweep else None,
        beta=ns.beta,
        beta_sweep=parse_sweep(beta_sweep) if beta_sweep else None,
        directed=ns.directed,
        output_format=ns.output,
        out=ns.out,
        truth_path=ns.truth,
    )


@contextmanager
def _sink(path: Optional[str], fallback):
    if path is None:
        yield fallback
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            yield fh


COMMANDS = {"detect": cmd_detect, "sweep": cmd_sweep, "score": cmd_score}


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    ns = build_parser().parse_args(argv)
    try:
        cfg = _config(ns)
        with _sink(cfg.out, stdout) as out:
            return COMMANDS[ns.command](cfg, out)
    except BrokenPipeError:
        # reader went away (e.g. piped into head); silence the flush at exit
        if stdout is sys.stdout:
            os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return EXIT_OK
    except (ParseError, GraphValidationError, UndefinedPurityError, OSError,
            UnicodeDecodeError) as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_PARSE
    except (ParameterError, InfluenceDomainError) as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_PARAM
    except (SingularMatrixError, ConvergenceError, DegenerateGraphError) as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_NUMERIC


def run(argv) -> tuple[int, str, str]:
    """Invoke the CLI in-process; returns (exit code, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, out, err)
    return code, out.getvalue(), err.getvalue()
