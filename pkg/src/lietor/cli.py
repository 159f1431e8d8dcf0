"""Command-line interface: ``lietor COMMAND FILE ...``.

Every command produces a :class:`Report`.  Text output is rendered from the
same structure that ``--json`` prints, so the JSON form carries everything
the text form shows.

Exit codes: 0 success, 1 mathematical validation failure, 2 usage or parse
error, 3 refusal because the instance is too large.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from math import comb
from pathlib import Path

from . import catalog
from .cohomology import (
    adjoint_action,
    cohomology_dim,
    hochschild_serre_dim,
    invariant_cochain_basis,
    invariant_cohomology_dim,
)
from .derivations import derivation_space, is_characteristically_nilpotent
from .errors import (
    ConsistencyError,
    InputError,
    InstanceTooLarge,
    JacobiError,
    LietorError,
    ParseError,
    PreconditionError,
)
from .extension import SolvableExtension, build_max_extension
from .io import document_from_algebra, emit_algebra, parse_algebra, parse_matrix
from .lie import (
    algebras_equal,
    apply_basechange,
    center,
    derived_series,
    generator_indices,
    is_nilpotent,
    is_solvable,
    jacobi_violations,
    lower_central_series,
)
from .roots import root_decomposition, vanish_predictor
from .torus import condition_A_check, maximal_torus, weight_equations

__all__ = ["Report", "run_command", "main"]

DEFAULT_MAX_CELLS = 2_000_000
TORUS_CAVEAT = (
    "rank of S_e is computed for the basis as given; the minimum over all bases is not searched"
)
COCHAIN_NOTE = "Z^m = ker(d^m: C^m -> C^(m+1)), B^m = im(d^(m-1)), H^m = Z^m / B^m"


@dataclass
class Report:
    command: list
    results: dict = field(default_factory=dict)
    warnings: list = field(default_factory=list)
    exit_code: int = 0

    def as_dict(self) -> dict:
        return {
            "command": self.command,
            "results": self.results,
            "warnings": self.warnings,
            "exit_code": self.exit_code,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2)

    def to_text(self) -> str:
        lines = ["lietor " + " ".join(self.command)]
        for key, value in self.results.items():
            lines.extend(_render(key, value))
        lines.extend(f"warning: {w}" for w in self.warnings)
        return "\n".join(lines)


def _render(key: str, value, indent: str = "") -> list[str]:
    if isinstance(value, dict):
        out = [f"{indent}{key}:"]
        for k, v in value.items():
            out.extend(_render(str(k), v, indent + "  "))
        return out
    if isinstance(value, list) and value and isinstance(value[0], (list, dict)):
        out = [f"{indent}{key}:"]
        for item in value:
            if isinstance(item, dict):
                out.append(indent + "  - " + ", ".join(f"{k}={_inline(v)}" for k, v in item.items()))
            else:
                out.append(indent + "  " + _inline(item))
        return out
    return [f"{indent}{key}: {_inline(value)}"]


def _inline(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "none"
    if isinstance(value, list):
        return "(" + ",".join(_inline(v) for v in value) + ")"
    return str(value)


# ---------------------------------------------------------------------------
# helpers
# ---------------------------------------------------------------------------

def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _load(path: str):
    return parse_algebra(_read(path))


def _row(vec) -> list[str]:
    return [str(x) for x in vec]


def _max_cells() -> int:
    raw = os.environ.get("LIETOR_MAX_CELLS")
    if raw is None:
        return DEFAULT_MAX_CELLS
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"LIETOR_MAX_CELLS must be an integer, got {raw!r}") from None


def _guard_degree(source_dim: int, module_dim: int, p: int, label: str) -> None:
    if p > 4 and source_dim > 12:
        raise InstanceTooLarge(f"degree {p} on a {source_dim}-dimensional {label} refused (p > 4, dim > 12)")
    cells = 0
    for m in (p - 1, p):
        if m >= 0:
            cells += comb(source_dim, m) * comb(source_dim, m + 1) * module_dim * module_dim
    limit = _max_cells()
    if cells > limit:
        raise InstanceTooLarge(
            f"coboundary matrices around degree {p} have {cells} cells, above the cap {limit} (LIETOR_MAX_CELLS)"
        )


def _extension(doc, report: Report) -> SolvableExtension:
    """The document's extension, or the maximal extension of a nilpotent
    document without ``nilradical_dim``."""
    if doc.nilradical_dim is not None:
        return doc.to_extension()
    L = doc.to_algebra()
    if not is_nilpotent(L):
        raise InputError(
            "document has no nilradical_dim and is not nilpotent; add nilradical_dim to mark the nilradical"
        )
    R = build_max_extension(L)
    report.warnings.append("input is nilpotent; using its maximal solvable extension")
    report.warnings.extend(R.warnings)
    return R


def _check_degree(p: int) -> None:
    if p < 0:
        raise InputError("--degree must be non-negative")


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_check(args, report: Report) -> None:
    L = _load(args.file).to_algebra(validate=False)
    bad = jacobi_violations(L)
    report.results["dim"] = L.dim
    report.results["jacobi"] = not bad
    if bad:
        report.results["violations"] = [[i + 1, j + 1, k + 1] for i, j, k, _ in bad]
        report.exit_code = 1
        return
    report.results["lower_central_series"] = [s.dim for s in lower_central_series(L)]
    report.results["derived_series"] = [s.dim for s in derived_series(L)]
    report.results["nilpotent"] = is_nilpotent(L)
    report.results["solvable"] = is_solvable(L)
    report.results["center_dim"] = center(L).dim


def cmd_der(args, report: Report) -> None:
    L = _load(args.file).to_algebra()
    D = derivation_space(L)
    z = center(L).dim
    report.results["dim"] = L.dim
    report.results["dim_der"] = D.dim
    report.results["dim_inner"] = L.dim - z
    report.results["center_dim"] = z
    if L.dim and is_nilpotent(L):
        report.results["characteristically_nilpotent"] = is_characteristically_nilpotent(L)
    if args.basis:
        report.results["basis"] = [[_row(r) for r in M.entries] for M in D.basis]


def cmd_torus(args, report: Report) -> None:
    L = _load(args.file).to_algebra()
    eqs = weight_equations(L)
    W = maximal_torus(L)
    cond = condition_A_check(L, W)
    report.results["n"] = L.dim
    report.results["rank_se"] = eqs.rank
    report.results["s"] = W.s
    report.results["weight_rows"] = [_row(r) for r in W.rows()]
    report.results["free_columns"] = [c + 1 for c in W.free_columns]
    report.results["generators"] = [g + 1 for g in generator_indices(L)]
    report.results["condition_A"] = cond.holds
    report.results["condition_A_violations"] = [[i + 1, j + 1] for i, j in cond.violations]
    report.warnings.append(TORUS_CAVEAT)
    report.warnings.extend(cond.warnings)


def cmd_extend(args, report: Report) -> None:
    doc = _load(args.file)
    R = build_max_extension(doc.to_algebra())
    name = f"{doc.name}_max_ext" if doc.name else "max_ext"
    text = emit_algebra(document_from_algebra(R, name))
    report.results["dim"] = R.dim
    report.results["nilradical_dim"] = R.nilradical_dim
    report.results["s"] = R.s
    report.warnings.extend(R.warnings)
    if args.output:
        Path(args.output).write_text(text)
        report.results["output"] = args.output
    else:
        report.results["document"] = json.loads(text)


def cmd_cohomology(args, report: Report) -> None:
    doc = _load(args.file)
    p = args.degree
    _check_degree(p)
    report.results["degree"] = p
    report.results["method"] = args.method
    if args.method == "hs":
        if doc.nilradical_dim is None:
            raise InputError(
                "--method hs needs the document to carry nilradical_dim; "
                "run 'lietor extend' on the nilradical or use --method direct"
            )
        R = doc.to_extension()
        _guard_degree(R.nilradical_dim, R.dim, p, "nilradical")
        report.results["dim_H"] = hochschild_serre_dim(R, p)
    else:
        L = doc.to_algebra()
        _guard_degree(L.dim, L.dim, p, "algebra")
        report.results["dim_H"] = cohomology_dim(L, adjoint_action(L), p)
    report.warnings.append(COCHAIN_NOTE)


def cmd_invariant(args, report: Report) -> None:
    doc = _load(args.file)
    b = args.degree
    _check_degree(b)
    if doc.nilradical_dim is None:
        raise InputError("invariant-cohomology needs the document to carry nilradical_dim")
    R = doc.to_extension()
    _guard_degree(R.nilradical_dim, R.dim, b, "nilradical")
    report.results["degree"] = b
    report.results["method"] = args.method
    report.results["invariant_cochains"] = invariant_cochain_basis(R, b, args.method).dim
    report.results["dim_H_invariant"] = invariant_cohomology_dim(R, b, args.method)


def cmd_roots(args, report: Report) -> None:
    R = _extension(_load(args.file), report)
    roots = root_decomposition(R)
    names = R.algebra.names
    report.results["s"] = R.s
    report.results["roots"] = [
        {"root": _row(a), "multiplicity": len(idx), "basis": [names[i] for i in idx]}
        for a, idx in roots.spaces.items()
    ]
    report.results["multiplicity_one"] = roots.multiplicity_one


def cmd_vanish(args, report: Report) -> None:
    R = _extension(_load(args.file), report)
    v = vanish_predictor(R)
    report.results["theorem63"] = v.theorem63
    report.results["theorem64"] = v.theorem64
    report.results["multiplicity_one"] = v.multiplicity_one
    report.results["triple_condition"] = v.triple_condition
    report.results["n_cubed_zero"] = v.n_cubed_zero
    report.warnings.extend(v.warnings)


def cmd_basechange(args, report: Report) -> None:
    L = _load(args.file).to_algebra()
    P = parse_matrix(_read(args.matrix))
    target = _load(args.target).to_algebra()
    if target.dim != L.dim:
        raise InputError(f"target has dimension {target.dim}, source has {L.dim}")
    new = apply_basechange(L, P, names=target.names)
    match = algebras_equal(new, target)
    report.results["match"] = match
    if not match:
        diffs = []
        for key in sorted(set(new.table) | set(target.table)):
            got, want = dict(new.table.get(key, ())), dict(target.table.get(key, ()))
            if got != want:
                diffs.append({
                    "pair": [key[0] + 1, key[1] + 1],
                    "got": {str(t + 1): str(c) for t, c in sorted(got.items())},
                    "target": {str(t + 1): str(c) for t, c in sorted(want.items())},
                })
        report.results["differences"] = diffs
        report.exit_code = 1
    if args.output:
        Path(args.output).write_text(emit_algebra(document_from_algebra(new, args.output_name)))
        report.results["output"] = args.output


def cmd_catalog_list(args, report: Report) -> None:
    entries = []
    for name in catalog.catalog_list():
        entry = catalog.catalog_entry(name)
        entries.append({
            "name": name,
            "kind": entry.kind,
            "params": ",".join(f"{p.name}={_inline(list(p.default)) if p.kind == 'ints' else p.default}"
                               for p in entry.params) or "-",
            "description": entry.description,
        })
    report.results["entries"] = entries


def cmd_catalog_emit(args, report: Report) -> str | None:
    entry = catalog.catalog_entry(args.name)
    params = {}
    for item in args.param:
        key, sep, value = item.partition("=")
        if not sep:
            raise InputError(f"--param expects k=v, got {item!r}")
        params[key] = catalog.parse_param(entry, key, value)
    obj = catalog.catalog_build(args.name, **params)
    text = emit_algebra(document_from_algebra(obj, args.name))
    if args.output:
        Path(args.output).write_text(text)
        report.results["output"] = args.output
        return None
    return text


# ---------------------------------------------------------------------------
# argument parsing and dispatch
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print the report as JSON")

    parser = argparse.ArgumentParser(
        prog="lietor",
        description="Exact computations on Lie algebras given as JSON structure-constant files.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="Jacobi identity, series, nilpotent/solvable flags")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("der", parents=[common], help="dimension of the derivation algebra")
    p.add_argument("file")
    p.add_argument("--basis", action="store_true", help="also list a basis of Der")
    p.set_defaults(func=cmd_der)

    p = sub.add_parser("torus", parents=[common], help="weight system S_e and maximal torus")
    p.add_argument("file")
    p.set_defaults(func=cmd_torus)

    p = sub.add_parser("extend", parents=[common], help="maximal solvable extension")
    p.add_argument("file")
    p.add_argument("-o", "--output", help="write the extension document here")
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser(
        "cohomology", parents=[common], help="adjoint cohomology dimension",
        description="dim H^m(L, L). " + COCHAIN_NOTE + ".",
    )
    p.add_argument("file")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--method", choices=("direct", "hs"), default="direct",
                   help="hs factorizes through the nilradical (needs nilradical_dim)")
    p.set_defaults(func=cmd_cohomology)

    p = sub.add_parser("invariant-cohomology", parents=[common], help="torus-invariant N-valued cohomology")
    p.add_argument("file")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--method", choices=("weights", "literal"), default="weights")
    p.set_defaults(func=cmd_invariant)

    p = sub.add_parser("roots", parents=[common], help="root decomposition of the nilradical")
    p.add_argument("file")
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("vanish", parents=[common], help="root-count vanishing predictors")
    p.add_argument("file")
    p.set_defaults(func=cmd_vanish)

    p = sub.add_parser("basechange", parents=[common], help="apply a change of basis and compare")
    p.add_argument("file")
    p.add_argument("--matrix", required=True, help="JSON matrix; row k is the new k-th basis vector")
    p.add_argument("--target", required=True)
    p.add_argument("-o", "--output", help="write the transformed document here")
    p.add_argument("--output-name", default="", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_basechange)

    p = sub.add_parser("catalog", parents=[common], help="built-in algebras")
    csub = p.add_subparsers(dest="catalog_command", required=True)
    q = csub.add_parser("list", parents=[common])
    q.set_defaults(func=cmd_catalog_list)
    q = csub.add_parser("emit", parents=[common])
    q.add_argument("name")
    q.add_argument("--param", action="append", default=[], metavar="K=V")
    q.add_argument("-o", "--output")
    q.set_defaults(func=cmd_catalog_emit)
    return parser


_EXIT = (
    (ParseError, 2),
    (InputError, 2),
    (InstanceTooLarge, 3),
    (JacobiError, 1),
    (PreconditionError, 1),
    (ConsistencyError, 1),
    (LietorError, 1),
)


def run_command(argv) -> tuple[Report, str | None]:
    """Parse ``argv`` and run it.  Returns the report and, for commands that
    write a document to stdout, that document's text."""
    argv = list(argv)
    args = build_parser().parse_args(argv)
    report = Report(command=argv)
    try:
        raw = args.func(args, report)
    except LietorError as exc:
        report.exit_code = next(code for cls, code in _EXIT if isinstance(exc, cls))
        report.results["error"] = {"type": type(exc).__name__, "message": str(exc)}
        return report, None
    return report, raw


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        report, raw = run_command(argv)
    except SystemExit as exc:  # argparse usage errors
        return exc.code if isinstance(exc.code, int) else 2
    as_json = "--json" in argv
    if raw is not None:
        sys.stdout.write(raw)
        return report.exit_code
    stream = sys.stderr if "error" in report.results and not as_json else sys.stdout
    print(report.to_json() if as_json else report.to_text(), file=stream)
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
