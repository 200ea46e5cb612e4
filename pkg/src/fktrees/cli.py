"""Command-line interface.

Subcommands: eigen, family, transform, verify, verify-class, enumerate,
bounds.  JSON is the machine format (stable bytes); text output is
human-oriented and carries no stability guarantee.  Exit codes: 0 success
(all verdicts MATCH/CONJECTURE-MATCH for verification commands), 1 mismatch,
2 usage or input errors.  All configuration is by flags; no environment
variables are consulted.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import io as fkio
from .enumeration import DEFAULT_CAP, HARD_CAP, ClassKey, classify, free_trees
from .errors import EmptyClassError, FKTreesError
from .families import build_T, build_comet, build_fork, build_star
from .spectral import build_path, eigenvalue_bounds, first_eigenpair
from .transforms import jumping, shifting, switching
from .trees import canonical_code, format_edge_list_text
from .verify import (
    TIE_TOL,
    all_match,
    certificate_json,
    empty_class_certificate,
    verify_class,
    verify_theorem_sweep,
)

__all__ = ["main", "run", "RunConfig"]


@dataclass(frozen=True)
class RunConfig:
    command: str
    tolerance: float
    cap: int
    jobs: int
    output: str | None
    format: str

    def validate(self) -> None:
        if self.tolerance <= 0:
            raise ValueError("--tol must be positive")
        if self.jobs < 1:
            raise ValueError("--jobs must be >= 1")
        if self.cap > HARD_CAP:
            raise ValueError(f"--cap must not exceed the hard limit {HARD_CAP}")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fktrees",
        description="First Dirichlet eigenvalues of trees with leaf boundary: "
        "eigensolves, extremal families, edge rewrites, exhaustive verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--output", default=None, help="write results to this path")
        p.add_argument("--format", choices=("json", "text"), default="json")

    p = sub.add_parser("eigen", help="first Dirichlet eigenpair of a tree")
    p.add_argument("--tree", required=True, help="edge-list file")
    p.add_argument("--tol", type=float, default=1e-10)
    common(p)

    p = sub.add_parser("family", help="construct a named extremal family member")
    p.add_argument("kind", choices=("T", "comet", "fork", "path", "star"))
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--emit", choices=("edges", "json"), default="edges")
    common(p)

    p = sub.add_parser("transform", help="apply one edge rewrite")
    p.add_argument("--tree", required=True)
    p.add_argument(
        "--move",
        required=True,
        help='"switch v1 v2 u1 u2" | "shift v1 v2 u" | "jump v1 v2 u"',
    )
    p.add_argument(
        "--function",
        default=None,
        help="JSON array of interior values (ascending vertex id); "
        "defaults to the first eigenfunction",
    )
    common(p)

    p = sub.add_parser("verify", help="sweep one theorem over all feasible keys")
    p.add_argument("--theorem", required=True, choices=("T13", "T14", "Kloburstel", "D4"))
    p.add_argument("--n-max", type=int, required=True, dest="n_max")
    p.add_argument("--tol", type=float, default=TIE_TOL)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    common(p)

    p = sub.add_parser("verify-class", help="certificate for a single class key")
    p.add_argument("--key", required=True, help='e.g. "NMB 8 3 3"')
    p.add_argument("--tol", type=float, default=TIE_TOL)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    common(p)

    p = sub.add_parser("enumerate", help="stream all trees of one order")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--classify", action="store_true")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    common(p)

    p = sub.add_parser("bounds", help="radius/leaf-count eigenvalue sandwich")
    p.add_argument("--tree", required=True)
    p.add_argument("--tol", type=float, default=1e-10)
    common(p)

    return parser


def _config(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(
        command=args.command,
        tolerance=getattr(args, "tol", 1e-10),
        cap=getattr(args, "cap", DEFAULT_CAP),
        jobs=getattr(args, "jobs", 1),
        output=args.output,
        format=args.format,
    )
    cfg.validate()
    return cfg


def _write(cfg: RunConfig, text: str) -> None:
    if cfg.output is None:
        sys.stdout.write(text)
    else:
        with open(cfg.output, "w", encoding="ascii") as fh:
            fh.write(text)


def _family_tree(args: argparse.Namespace):
    def need(**params):
        missing = [f"--{k}" for k, v in params.items() if v is None]
        if missing:
            raise ValueError(f"family {args.kind} needs {' '.join(missing)}")
        return params.values()

    if args.kind == "T":
        p, q, b = need(p=args.p, q=args.q, b=args.b)
        return build_T(p, q, b)
    if args.kind == "comet":
        n, k = need(n=args.n, k=args.k)
        return build_comet(n, k)
    if args.kind == "fork":
        a, r, n = need(a=args.a, r=args.r, n=args.n)
        return build_fork(a, r, n)
    if args.kind == "path":
        (n,) = need(n=args.n)
        return build_path(n)
    (n,) = need(n=args.n)
    return build_star(n)


def _parse_move(move: str) -> tuple[str, list[int]]:
    tokens = move.split()
    if not tokens:
        raise ValueError("empty --move")
    kind = tokens[0].lower()
    arity = {"switch": 4, "shift": 3, "jump": 3}
    if kind not in arity:
        raise ValueError(f"unknown move {kind!r}; use switch/shift/jump")
    if len(tokens) - 1 != arity[kind]:
        raise ValueError(f"move {kind!r} takes {arity[kind]} vertex ids")
    return kind, [int(t) for t in tokens[1:]]


def _cmd_eigen(args, cfg: RunConfig) -> int:
    tree = fkio.read_tree_file(args.tree)
    spectrum = first_eigenpair(tree, tol=cfg.tolerance)
    doc = fkio.spectrum_json(spectrum)
    if cfg.format == "json":
        _write(cfg, fkio.dumps(doc) + "\n")
    else:
        lines = [f"lambda1  = {doc['lambda1']:.12g}"]
        lines.append("eigenfunction = " + " ".join(f"{x:.12g}" for x in doc["eigenfunction"]))
        lines.append(f"residual = {doc['residual']:.3e}")
        lines.append(f"gap      = {doc['gap']}")
        _write(cfg, "\n".join(lines) + "\n")
    return 0


def _cmd_family(args, cfg: RunConfig) -> int:
    tree = _family_tree(args)
    if args.emit == "edges":
        _write(cfg, format_edge_list_text(tree))
    else:
        _write(cfg, fkio.dumps(fkio.tree_json(tree)) + "\n")
    return 0


def _cmd_transform(args, cfg: RunConfig) -> int:
    tree = fkio.read_tree_file(args.tree)
    if args.function is not None:
        with open(args.function, "r", encoding="ascii") as fh:
            f = json.load(fh)
        if not isinstance(f, list):
            raise ValueError("--function file must hold a JSON array")
    else:
        f = [float(x) for x in first_eigenpair(tree).eigenfunction]
    kind, ids = _parse_move(args.move)
    if kind == "switch":
        new_tree, rewrite = switching(tree, *ids, f=f)
    elif kind == "shift":
        new_tree, rewrite = shifting(tree, *ids, f=f)
    else:
        new_tree, rewrite = jumping(tree, *ids, f=f)
    doc = {
        "kind": rewrite.kind,
        "removed": [[u, v] for u, v in rewrite.removed],
        "inserted": [[u, v] for u, v in rewrite.inserted],
        "delta_numerator": rewrite.delta,
        "tree": fkio.tree_json(new_tree),
    }
    if cfg.format == "json":
        _write(cfg, fkio.dumps(doc) + "\n")
    else:
        _write(
            cfg,
            f"{rewrite.kind}: removed {rewrite.removed} inserted {rewrite.inserted} "
            f"delta_numerator {rewrite.delta:.12g}\n"
            + format_edge_list_text(new_tree),
        )
    return 0


def _certificates_output(cfg: RunConfig, certs) -> int:
    if cfg.format == "json":
        text = "".join(fkio.dumps(certificate_json(c)) + "\n" for c in certs)
    else:
        lines = []
        for c in certs:
            lam = "-" if c.lambda_min is None else f"{c.lambda_min:.10g}"
            lines.append(
                f"{str(c.key):<14} population={c.population:<6} "
                f"lambda_min={lam:<13} minimizers={len(c.minimizers)} {c.verdict}"
            )
        text = "\n".join(lines) + "\n"
    _write(cfg, text)
    return 0 if all_match(certs) else 1


def _cmd_verify(args, cfg: RunConfig) -> int:
    certs = verify_theorem_sweep(
        args.theorem, args.n_max, tol=cfg.tolerance, cap=cfg.cap, jobs=cfg.jobs
    )
    return _certificates_output(cfg, certs)


def _cmd_verify_class(args, cfg: RunConfig) -> int:
    key = ClassKey.parse(args.key)
    try:
        cert = verify_class(key, tol=cfg.tolerance, cap=cfg.cap)
    except EmptyClassError:
        cert = empty_class_certificate(key, cfg.tolerance)
    return _certificates_output(cfg, [cert])


def _cmd_enumerate(args, cfg: RunConfig) -> int:
    lines = []
    for tree in free_trees(args.n, cap=cfg.cap):
        doc = {
            "n": tree.n,
            "edges": [[u, v] for u, v in tree.edges],
            "code": canonical_code(tree).text,
        }
        if args.classify:
            doc["classes"] = [str(k) for k in classify(tree)]
        lines.append(fkio.dumps(doc))
    _write(cfg, "\n".join(lines) + "\n")
    return 0


def _cmd_bounds(args, cfg: RunConfig) -> int:
    tree = fkio.read_tree_file(args.tree)
    lower, upper = eigenvalue_bounds(tree)
    lam = first_eigenpair(tree, tol=cfg.tolerance).lambda1
    doc = {"lower": lower, "lambda1": lam, "upper": upper}
    if cfg.format == "json":
        _write(cfg, fkio.dumps(doc) + "\n")
    else:
        _write(cfg, f"lower={lower:.12g} lambda1={lam:.12g} upper={upper:.12g}\n")
    return 0


_COMMANDS = {
    "eigen": _cmd_eigen,
    "family": _cmd_family,
    "transform": _cmd_transform,
    "verify": _cmd_verify,
    "verify-class": _cmd_verify_class,
    "enumerate": _cmd_enumerate,
    "bounds": _cmd_bounds,
}


def run(argv: list[str] | None = None) -> int:
    """Parse argv and execute one subcommand; returns the exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = _config(args)
        return _COMMANDS[args.command](args, cfg)
    except (FKTreesError, OSError, ValueError, json.JSONDecodeError) as exc:
        print(f"fktrees: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))
