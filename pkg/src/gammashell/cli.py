"""Command-line front end for the verification pipelines.

Reports are deterministic: JSON (sorted keys, no timestamps) by default,
plain text with --format text, CSV for the tabular commands.  Exit codes:
0 pass, 1 verification failure, 2 usage error, 3 budget exceeded, 4 I/O.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .complexes import (
    DEFAULT_FACE_BUDGET,
    f_vector_enumerated,
    f_vector_formula,
    make_complex,
    reduced_euler_characteristic,
)
from .errors import BudgetError, DomainError, PreconditionError
from .facets import enumerate_facets, format_facets
from .genfun import (
    aigner_rhs,
    alignment_check,
    dixon_lhs,
    dixon_rhs,
    power_sum_lhs,
    series_g_r,
    series_P,
    series_XY,
    threeF2_lhs,
    threeF2_rhs,
)
from .homology import (
    DEFAULT_CELL_BUDGET,
    betti_numbers,
    boundary_matrix,
    matrix_rank,
    matrix_to_triplets,
    shuffled_rank,
)
from .series import dump_series
from .shelling import betti_from_shelling, verify_shelling

_PASS, _FAIL, _USAGE, _BUDGET, _IO = 0, 1, 2, 3, 4


@dataclass(frozen=True)
class RunConfig:
    """Everything a subcommand needs; reports depend only on these fields.

    threads is an execution knob and is deliberately left out of the
    emitted reports so outputs are byte-identical regardless of it.
    """

    command: str
    fmt: str = "json"
    output: str | None = None
    p: int = 3
    n: int | None = None
    n_max: int = 40
    max_value: int = 8
    k: int | None = None
    r: int = 1
    truncation: int = 6
    order: str = "canonical"
    witness_mode: str = "constructive"
    witness_limit: int = 100
    threads: int = 1
    method: str = "both"
    enumerate_check: bool = False
    check_alignment: bool = False
    series: str | None = None
    seed: int = 0
    shuffle_check: bool = False
    face_budget: int = DEFAULT_FACE_BUDGET
    cell_budget: int = DEFAULT_CELL_BUDGET
    kind: str | None = None
    what: str | None = None


def _alternating(values) -> int:
    return sum(v if i % 2 else -v for i, v in enumerate(values))


def _report(command: str, params: dict, constants: dict, results: dict, ok: bool):
    return {
        "command": command,
        "params": params,
        "constants": constants,
        "results": results,
        "pass": ok,
    }


# -- subcommand handlers -----------------------------------------------------
# each returns (report dict, exit code, extra) where extra may carry a raw
# text payload ("payload") or tabular rows ("rows") for the CSV renderer


def cmd_fvector(cfg: RunConfig):
    params = make_complex(cfg.p, cfg.n)
    f = f_vector_formula(params)
    results = {
        "f_vector": list(f),
        "reduced_euler": reduced_euler_characteristic(f),
    }
    ok = True
    if cfg.enumerate_check:
        enumerated = f_vector_enumerated(params, cfg.face_budget)
        results["f_vector_enumerated"] = list(enumerated)
        ok = enumerated == f
        results["match"] = ok
    report = _report(
        "fvector",
        {"p": cfg.p, "n": cfg.n},
        {"face_budget": cfg.face_budget},
        results,
        ok,
    )
    rows = [{"dim": d - 1, "count": c} for d, c in enumerate(f)]
    return report, _PASS if ok else _FAIL, {"rows": rows}


def cmd_shelling(cfg: RunConfig):
    params = make_complex(cfg.p, cfg.n)
    facets = enumerate_facets(params, cfg.face_budget)
    if cfg.order == "reversed":
        facets = list(reversed(facets))
    rep = verify_shelling(
        params,
        facets,
        witness_mode=cfg.witness_mode,
        witness_limit=cfg.witness_limit,
        threads=cfg.threads,
    )
    ok = rep.is_shelling and not rep.disagreements
    limit = rep.witness_limit
    results = {
        "order": cfg.order,
        "mode": rep.mode,
        "facet_count": rep.facet_count,
        "total_pairs": rep.total_pairs,
        "constructed": rep.constructed,
        "fallback_count": len(rep.fallbacks),
        "fallbacks": [list(x) for x in rep.fallbacks[:limit]],
        "violation_count": len(rep.violations),
        "violations": [list(x) for x in rep.violations[:limit]],
        "disagreement_count": len(rep.disagreements),
        "disagreements": [list(x) for x in rep.disagreements[:limit]],
        "witnesses": {
            f"{i},{k}": [j, list(v)] for (i, k), (j, v) in rep.witnesses.items()
        },
        "witness_limit": limit,
        "is_shelling": rep.is_shelling,
    }
    report = _report(
        "shelling",
        {"p": cfg.p, "n": cfg.n},
        {"face_budget": cfg.face_budget},
        results,
        ok,
    )
    return report, _PASS if ok else _FAIL, {}


def cmd_betti(cfg: RunConfig):
    params = make_complex(cfg.p, cfg.n)
    chi = reduced_euler_characteristic(f_vector_formula(params))
    results: dict = {"reduced_euler": chi, "method": cfg.method}
    ok = True
    from_shelling = from_matrix = None
    if cfg.method in ("both", "shelling"):
        from_shelling = betti_from_shelling(params)
        results["betti_from_shelling"] = list(from_shelling)
    if cfg.method in ("both", "matrix"):
        from_matrix = betti_numbers(params, cfg.cell_budget)
        results["betti_from_matrix"] = list(from_matrix)
    if cfg.method == "both":
        results["match"] = from_shelling == from_matrix
        ok = ok and results["match"]
    betti = from_matrix if from_matrix is not None else from_shelling
    results["alternating_betti_sum"] = _alternating(betti)
    results["euler_poincare"] = results["alternating_betti_sum"] == chi
    ok = ok and results["euler_poincare"]
    if cfg.shuffle_check and from_matrix is not None:
        stable = all(
            matrix_rank(m) == shuffled_rank(m, cfg.seed)
            for m in (
                boundary_matrix(params, k, cfg.cell_budget)
                for k in range(params.n)
            )
        )
        results["shuffle_check"] = stable
        results["seed"] = cfg.seed
        ok = ok and stable
    report = _report(
        "betti",
        {"p": cfg.p, "n": cfg.n},
        {"cell_budget": cfg.cell_budget},
        results,
        ok,
    )
    return report, _PASS if ok else _FAIL, {}


def cmd_identity(cfg: RunConfig):
    rows = []
    if cfg.kind == "dixon":
        for n in range(1, cfg.n_max + 1):
            lhs, rhs = dixon_lhs(n), dixon_rhs(n)
            rows.append({"n": n, "lhs": lhs, "rhs": rhs, "equal": lhs == rhs})
        params = {"n_max": cfg.n_max}
    elif cfg.kind == "aigner":
        for n in range(1, cfg.n_max + 1):
            lhs, rhs = power_sum_lhs(n, 2), aigner_rhs(n)
            linear = power_sum_lhs(n, 1)
            rows.append(
                {
                    "n": n,
                    "lhs": lhs,
                    "rhs": rhs,
                    "linear_sum": linear,
                    "equal": lhs == rhs and linear == 0,
                }
            )
        params = {"n_max": cfg.n_max}
    else:
        bound = cfg.max_value
        for n1 in range(bound + 1):
            for n2 in range(bound + 1):
                for n3 in range(bound + 1):
                    lhs = threeF2_lhs(n1, n2, n3)
                    rhs = threeF2_rhs(n1, n2, n3)
                    rows.append(
                        {
                            "n1": n1,
                            "n2": n2,
                            "n3": n3,
                            "lhs": lhs,
                            "rhs": rhs,
                            "equal": lhs == rhs,
                        }
                    )
        params = {"max": bound}
    failures = [r for r in rows if not r["equal"]]
    results = {
        "kind": cfg.kind,
        "checked": len(rows),
        "failed": len(failures),
        "failures": failures[:50],
    }
    if cfg.kind in ("dixon", "aigner"):
        results["table"] = rows
    ok = not failures
    report = _report("identity", params, {}, results, ok)
    return report, _PASS if ok else _FAIL, {"rows": rows}


def cmd_genfun(cfg: RunConfig):
    if cfg.check_alignment:
        if cfg.series is not None:
            raise DomainError("--check-alignment does not take a series name")
        rep = alignment_check(n_max=cfg.n_max)
        results = {
            "deltas": list(rep.deltas),
            "alternating_counts": {str(n): v for n, v in rep.alternating_counts.items()},
            "diagonal_by_delta": {
                str(d): {str(n): v for n, v in col.items()}
                for d, col in rep.diagonal_by_delta.items()
            },
            "matches": {str(d): m for d, m in rep.matches.items()},
            "pinned_delta": rep.pinned_delta,
            "end_to_end": {
                str(n): dict(vals) for n, vals in rep.end_to_end.items()
            },
            "end_to_end_ok": rep.end_to_end_ok,
        }
        ok = rep.pinned_delta is not None and rep.end_to_end_ok
        report = _report(
            "genfun", {"n_max": cfg.n_max}, {"deltas": list(rep.deltas)}, results, ok
        )
        return report, _PASS if ok else _FAIL, {}

    if cfg.series is None:
        raise DomainError("choose a series (P, XY, g) or pass --check-alignment")
    if cfg.series == "P":
        s = series_P(cfg.truncation)
    elif cfg.series == "XY":
        s = series_XY(cfg.truncation)
    else:
        s = series_g_r(cfg.r, cfg.truncation)
    results = {
        "series": cfg.series,
        "truncation": cfg.truncation,
        "terms": len(s.coeffs),
        "coefficients": {
            " ".join(str(x) for x in e): c for e, c in sorted(s.coeffs.items())
        },
    }
    if cfg.series == "g":
        results["r"] = cfg.r
    report = _report(
        "genfun", {"series": cfg.series}, {"truncation": cfg.truncation}, results, True
    )
    return report, _PASS, {"payload": dump_series(s)}


def cmd_export(cfg: RunConfig):
    params = make_complex(cfg.p, cfg.n)
    if cfg.what == "facets":
        facets = enumerate_facets(params, cfg.face_budget)
        payload = format_facets(params, facets)
        results: dict = {"what": "facets", "count": len(facets)}
    else:
        if cfg.k is None:
            raise DomainError("export matrix requires --k")
        m = boundary_matrix(params, cfg.k, cfg.cell_budget)
        payload = matrix_to_triplets(m)
        results = {
            "what": "matrix",
            "k": cfg.k,
            "rows": m.rows,
            "cols": m.cols,
            "entries": len(m.entries),
        }
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8") as fh:
            fh.write(payload)
        results["written"] = cfg.output
        results["bytes"] = len(payload.encode("utf-8"))
    else:
        results["content"] = payload
    report = _report(
        "export",
        {"p": cfg.p, "n": cfg.n},
        {"face_budget": cfg.face_budget, "cell_budget": cfg.cell_budget},
        results,
        True,
    )
    return report, _PASS, {"payload": payload}


_COMMANDS = {
    "fvector": cmd_fvector,
    "shelling": cmd_shelling,
    "betti": cmd_betti,
    "identity": cmd_identity,
    "genfun": cmd_genfun,
    "export": cmd_export,
}


# -- rendering ----------------------------------------------------------------


def _yesno(flag: bool) -> str:
    return "yes" if flag else "no"


def _render_text(cfg: RunConfig, report: dict, extra: dict) -> str:
    cmd = report["command"]
    res = report["results"]
    lines: list[str] = []
    if cmd == "fvector":
        lines.append(f"p={report['params']['p']} n={report['params']['n']}")
        lines.append("f-vector: " + " ".join(str(c) for c in res["f_vector"]))
        lines.append(f"reduced Euler characteristic: {res['reduced_euler']}")
        if "f_vector_enumerated" in res:
            lines.append(
                "enumerated: "
                + " ".join(str(c) for c in res["f_vector_enumerated"])
            )
            lines.append(f"match: {_yesno(res['match'])}")
    elif cmd == "shelling":
        lines.append(
            f"p={report['params']['p']} n={report['params']['n']} "
            f"order={res['order']} mode={res['mode']}"
        )
        lines.append(
            f"facets: {res['facet_count']}  pairs: {res['total_pairs']}  "
            f"constructed: {res['constructed']}  fallbacks: {res['fallback_count']}"
        )
        lines.append(
            f"violations: {res['violation_count']}  "
            f"disagreements: {res['disagreement_count']}"
        )
        lines.append(f"is shelling: {_yesno(res['is_shelling'])}")
    elif cmd == "betti":
        lines.append(f"p={report['params']['p']} n={report['params']['n']}")
        if "betti_from_shelling" in res:
            lines.append(
                "betti (shelling): "
                + " ".join(str(b) for b in res["betti_from_shelling"])
            )
        if "betti_from_matrix" in res:
            lines.append(
                "betti (matrix):   "
                + " ".join(str(b) for b in res["betti_from_matrix"])
            )
        if "match" in res:
            lines.append(f"match: {_yesno(res['match'])}")
        lines.append(
            f"alternating Betti sum: {res['alternating_betti_sum']}  "
            f"reduced Euler: {res['reduced_euler']}  "
            f"Euler-Poincare: {_yesno(res['euler_poincare'])}"
        )
        if "shuffle_check" in res:
            lines.append(
                f"shuffle check (seed {res['seed']}): {_yesno(res['shuffle_check'])}"
            )
    elif cmd == "identity":
        lines.append(f"identity {res['kind']}: checked {res['checked']}, failed {res['failed']}")
        for row in res.get("table", []):
            cells = "  ".join(f"{k}={v}" for k, v in row.items() if k != "equal")
            lines.append(f"{cells}  ok={_yesno(row['equal'])}")
    elif cmd == "genfun":
        if "payload" in extra:
            return extra["payload"]
        lines.append(f"pinned offset delta: {res['pinned_delta']}")
        for d in res["matches"]:
            lines.append(f"delta={d}: matches={_yesno(res['matches'][d])}")
        for n in sorted(res["end_to_end"], key=int):
            vals = res["end_to_end"][n]
            shown = "  ".join(f"{k}={v}" for k, v in sorted(vals.items()))
            agree = len(set(vals.values())) == 1
            lines.append(f"n={n}: {shown}  ok={_yesno(agree)}")
        lines.append(f"end-to-end: {_yesno(res['end_to_end_ok'])}")
    elif cmd == "export":
        if "written" in res:
            lines.append(f"wrote {res['bytes']} bytes to {res['written']}")
        else:
            return extra["payload"]
    lines.append("PASS" if report["pass"] else "FAIL")
    return "\n".join(lines) + "\n"


def _render_csv(cfg: RunConfig, report: dict, extra: dict) -> str:
    rows = extra.get("rows")
    if not rows:
        raise DomainError(f"csv output is not available for {report['command']}")
    header = list(rows[0])
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(str(row[h]) for h in header))
    return "\n".join(lines) + "\n"


def _render(cfg: RunConfig, report: dict, extra: dict) -> str:
    if cfg.fmt == "json":
        return json.dumps(report, sort_keys=True, indent=2) + "\n"
    if cfg.fmt == "csv":
        return _render_csv(cfg, report, extra)
    return _render_text(cfg, report, extra)


# -- argument parsing ---------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("json", "text", "csv"), default="json", dest="fmt"
    )
    common.add_argument("--output", default=None, help="write the result to a file")

    parser = argparse.ArgumentParser(
        prog="gammashell",
        description="Verification pipelines for the chain complexes Gamma_p(n), "
        "their shellings, and the attached binomial identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("fvector", parents=[common], help="face counts and Euler characteristic")
    s.add_argument("--p", type=int, default=3)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--enumerate", action="store_true", dest="enumerate_check",
                   help="cross-check the formula against enumeration")
    s.add_argument("--face-budget", type=int, default=DEFAULT_FACE_BUDGET)

    s = sub.add_parser("shelling", parents=[common], help="pairwise shelling verification")
    s.add_argument("--p", type=int, default=3)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--order", choices=("canonical", "reversed"), default="canonical")
    s.add_argument("--witness-mode", choices=("constructive", "exhaustive", "both"),
                   default="constructive")
    s.add_argument("--witness-limit", type=int, default=100)
    s.add_argument("--threads", type=int, default=1)
    s.add_argument("--face-budget", type=int, default=DEFAULT_FACE_BUDGET)

    s = sub.add_parser("betti", parents=[common], help="Betti numbers two ways")
    s.add_argument("--p", type=int, default=3)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--method", choices=("both", "shelling", "matrix"), default="both")
    s.add_argument("--cell-budget", type=int, default=DEFAULT_CELL_BUDGET)
    s.add_argument("--shuffle-check", action="store_true",
                   help="recompute ranks under a seeded face shuffle")
    s.add_argument("--seed", type=int, default=0)

    s = sub.add_parser("identity", parents=[common], help="binomial identity tables")
    s.add_argument("kind", choices=("dixon", "3f2", "aigner"))
    s.add_argument("--n-max", type=int, default=40)
    s.add_argument("--max", type=int, default=8, dest="max_value",
                   help="per-argument bound for the 3f2 triple scan")

    s = sub.add_parser("genfun", parents=[common], help="generating series and alignment")
    s.add_argument("series", nargs="?", choices=("P", "XY", "g"))
    s.add_argument("--truncate", type=int, default=6, dest="truncation")
    s.add_argument("--r", type=int, default=1)
    s.add_argument("--check-alignment", action="store_true")
    s.add_argument("--n-max", type=int, default=6)

    s = sub.add_parser("export", parents=[common], help="facet lists and boundary matrices")
    s.add_argument("what", choices=("facets", "matrix"))
    s.add_argument("--p", type=int, default=3)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, default=None)
    s.add_argument("--face-budget", type=int, default=DEFAULT_FACE_BUDGET)
    s.add_argument("--cell-budget", type=int, default=DEFAULT_CELL_BUDGET)

    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    fields = {f: getattr(args, f) for f in RunConfig.__dataclass_fields__ if hasattr(args, f)}
    return RunConfig(**fields)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = _config_from_args(args)
    try:
        report, code, extra = _COMMANDS[cfg.command](cfg)
        rendered = _render(cfg, report, extra)
    except (DomainError, PreconditionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _USAGE
    except BudgetError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return _BUDGET
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return _IO
    except RuntimeError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return _FAIL

    try:
        if cfg.output and cfg.command != "export":
            with open(cfg.output, "w", encoding="utf-8") as fh:
                fh.write(rendered)
        else:
            sys.stdout.write(rendered)
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return _IO
    return code


if __name__ == "__main__":
    sys.exit(main())
