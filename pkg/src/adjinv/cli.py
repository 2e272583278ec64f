"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import sys
from typing import Any, Sequence

from . import jsonio
from .characters import DEFAULT_CHAR_CAP, freudenthal_weights, weyl_dim
from .errors import AdjinvError, SizeCapExceeded
from .root_system import RootSystem, Weight, build
from .tensor import adjoint_multiplicity_in_product, adjoint_tensor, invariant_dim_adj, tensor_general
from .theorems import (
    enumerate_table1,
    epsilon_vector,
    format_epsilon,
    frobenius_schur,
    fs_oracle,
    split_closed,
    split_oracle,
    invariant_dim_with_case,
)
from .verify import oracle_b_feasible, run_sweep, square_feasible
from .weyl import opposition_permutation

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

COMMANDS = ("info", "invariants", "split", "table1", "verify", "decompose", "fs")


class UsageError(AdjinvError):
    pass


def parse_labels(rs: RootSystem, text: str | None, name: str) -> Weight:
    if text is None:
        raise UsageError(f"--{name} is required for this command")
    try:
        labels = tuple(int(x) for x in text.replace(" ", "").split(","))
    except ValueError:
        raise UsageError(f"--{name}: expected comma-separated integers, got {text!r}") from None
    if len(labels) != rs.rank:
        raise UsageError(f"--{name}: {len(labels)} labels given, {rs.spec} has rank {rs.rank}")
    if any(x < 0 for x in labels):
        raise UsageError(f"--{name}: labels must be nonnegative")
    return rs.weight(labels)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="adjinv",
        description="Adjoint invariants in V_mu x V_nu, S^2 V and Lambda^2 V.",
    )
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--algebra", required=True, help='e.g. "A2", "B3xG2", "E6"')
    p.add_argument("--mu", help="Dynkin labels, comma separated")
    p.add_argument("--nu", help="Dynkin labels, comma separated")
    p.add_argument("--json", action="store_true", help="emit JSON instead of text")
    p.add_argument("--max-label", type=int, default=2)
    p.add_argument("--sum", type=int, default=3, dest="max_sum")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--char-cap", type=int, default=DEFAULT_CHAR_CAP)
    return p


# ---------------------------------------------------------------------------
# commands return (result, checks, inputs, exit_code)


def cmd_info(rs: RootSystem, args) -> tuple[dict, dict, dict, int]:
    perm = opposition_permutation(rs)
    result = {
        "rank": rs.rank,
        "dimension": rs.dimension,
        "positive_roots": len(rs.positive_roots),
        "cartan": [list(r) for r in rs.cartan],
        "opposition": [p + 1 for p in perm],
        "highest_roots": [
            {"coords": list(r.coords), "labels": list(r.labels)} for r in rs.highest_roots
        ],
    }
    return result, {}, {}, EXIT_OK


def cmd_invariants(rs: RootSystem, args) -> tuple[dict, dict, dict, int]:
    mu = parse_labels(rs, args.mu, "mu")
    nu = parse_labels(rs, args.nu, "nu")
    closed, case = invariant_dim_with_case(mu, nu)
    oracle_a = invariant_dim_adj(mu, nu)
    oracle_b = None
    if oracle_b_feasible(mu, args.char_cap):
        oracle_b = adjoint_multiplicity_in_product(mu, nu)
    agree = closed == oracle_a and (oracle_b is None or oracle_b == closed)
    result = {"closed": closed, "case": case.value, "oracle_a": oracle_a, "oracle_b": oracle_b}
    checks = {"agree": agree}
    inputs = {"mu": list(mu.labels), "nu": list(nu.labels)}
    return result, checks, inputs, EXIT_OK if agree else EXIT_FAIL


def cmd_split(rs: RootSystem, args) -> tuple[dict, dict, dict, int]:
    mu = parse_labels(rs, args.mu, "mu")
    closed = split_closed(mu)
    fs = frobenius_schur(mu)
    result: dict[str, Any] = {"closed": closed, "fs": fs, "oracle": None}
    checks: dict[str, Any] = {}
    code = EXIT_OK
    if square_feasible(mu, args.char_cap):
        oracle = split_oracle(mu, args.char_cap)
        result["oracle"] = oracle
        checks["agree"] = oracle == closed
        if oracle != closed:
            code = EXIT_FAIL
    return result, checks, {"mu": list(mu.labels)}, code


def cmd_fs(rs: RootSystem, args) -> tuple[dict, dict, dict, int]:
    mu = parse_labels(rs, args.mu, "mu")
    if not square_feasible(mu, args.char_cap):
        raise SizeCapExceeded(f"S^2 V_{mu} exceeds --char-cap {args.char_cap}")
    closed = frobenius_schur(mu)
    oracle = fs_oracle(mu, args.char_cap)
    agree = closed == oracle
    return (
        {"closed": closed, "oracle": oracle},
        {"agree": agree},
        {"mu": list(mu.labels)},
        EXIT_OK if agree else EXIT_FAIL,
    )


def cmd_table1(rs: RootSystem, args) -> tuple[dict, dict, dict, int]:
    rows = []
    for j, beta in enumerate_table1(rs):
        alpha = rs.simple_roots[j - 1]
        rows.append(
            {
                "j": j,
                "alpha": format_epsilon(epsilon_vector(alpha)),
                "beta": format_epsilon(epsilon_vector(beta)),
                "beta_coords": list(beta.coords),
            }
        )
    result: dict[str, Any] = {"rows": rows}
    if not rows:
        result["note"] = "no weakly orthogonal pairs (simply-laced or G2)"
    return result, {"count": len(rows)}, {}, EXIT_OK


def cmd_decompose(rs: RootSystem, args) -> tuple[dict, dict, dict, int]:
    mu = parse_labels(rs, args.mu, "mu")
    if args.nu is None:
        dec = adjoint_tensor(mu)
        expected = rs.dimension * weyl_dim(mu)
        inputs = {"mu": list(mu.labels), "with": "adjoint"}
    else:
        nu = parse_labels(rs, args.nu, "nu")
        if weyl_dim(mu) > args.char_cap:
            raise SizeCapExceeded(f"V_{mu} exceeds --char-cap {args.char_cap}")
        dec = tensor_general(mu, nu, freudenthal_weights(mu))
        expected = weyl_dim(mu) * weyl_dim(nu)
        inputs = {"mu": list(mu.labels), "nu": list(nu.labels)}
    ok = dec.dimension() == expected
    return {"decomposition": dec}, {"dimension": ok}, inputs, EXIT_OK if ok else EXIT_FAIL


def cmd_verify(rs: RootSystem, args) -> tuple[dict, dict, dict, int]:
    rep = run_sweep(
        str(rs.spec),
        args.max_label,
        args.max_sum,
        jobs=args.jobs,
        cap=args.char_cap,
        seed=args.seed,
    )
    result = {
        "checks": rep.n_checks,
        "failures": len(rep.failures),
        "first_failure": rep.failures[0] if rep.failures else None,
        "case_hits": dict(sorted(rep.case_hits.items())),
        "skipped": dict(rep.skipped),
    }
    inputs = {"max_label": args.max_label, "sum": args.max_sum}
    return result, dict(sorted(rep.checks.items())), inputs, EXIT_OK if rep.ok else EXIT_FAIL


HANDLERS = {
    "info": cmd_info,
    "invariants": cmd_invariants,
    "split": cmd_split,
    "table1": cmd_table1,
    "verify": cmd_verify,
    "decompose": cmd_decompose,
    "fs": cmd_fs,
}


# ---------------------------------------------------------------------------
# text rendering


def _fmt(v: Any) -> str:
    if hasattr(v, "b_Lambda"):
        return f"b={v.b} b_S={v.b_S} b_Lambda={v.b_Lambda}"
    if hasattr(v, "terms") and hasattr(v, "algebra"):
        return " + ".join(
            (f"{m}*V{list(k)}" if m != 1 else f"V{list(k)}") for k, m in v
        ) or "0"
    if hasattr(v, "name") and isinstance(v, int):
        return f"{int(v):+d} ({v.name.lower()})"
    return str(v)


def render_text(command: str, rs: RootSystem, result: dict, checks: dict) -> str:
    lines = [f"{command} {rs.spec}"]
    if command == "table1":
        for row in result["rows"]:
            lines.append(f"  j={row['j']}  alpha={row['alpha']}  beta={row['beta']}  coords={row['beta_coords']}")
        if "note" in result:
            lines.append(f"  ({result['note']})")
    else:
        for k, v in result.items():
            lines.append(f"  {k}: {_fmt(v)}")
    for k, v in checks.items():
        lines.append(f"  check {k}: {v}")
    return "\n".join(lines)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        rs = build(args.algebra)
        result, checks, inputs, code = HANDLERS[args.command](rs, args)
    except SizeCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except AdjinvError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.json:
        payload = {
            "command": args.command,
            "algebra": str(rs.spec),
            "inputs": inputs,
            "result": result,
            "checks": checks,
        }
        print(jsonio.emit(payload, indent=2))
    else:
        print(render_text(args.command, rs, result, checks))
    return code


if __name__ == "__main__":
    sys.exit(main())
