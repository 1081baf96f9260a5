"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 domain error (zero polynomial, m-index not found, invalid family, ...).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import cl as cl_mod
from . import families as fam
from . import hstar as hs
from . import magic
from .errors import MagicError
from .parse import PolynomialSyntaxError, parse_polynomial, parse_rational
from .poly import Polynomial, evaluate

EXIT_OK, EXIT_VERIFY_FAILED, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3

FAMILY_NAMES = (
    "simplex", "spiked", "minimal-matroid", "multipartite",
    "hypersimplex", "cross", "reflexive-simplex",
)


class UsageError(Exception):
    pass


@dataclass
class OutputRecord:
    command: str
    inputs: dict
    result: object
    warnings: list = field(default_factory=list)
    exact: bool = True


# ---------------------------------------------------------------------------
# argument helpers


def parse_range(text: str) -> range:
    """``"a..b"`` (inclusive) or a single integer."""
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            lo, hi = int(a), int(b)
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"bad range {text!r}; expected a..b or an integer") from None
    if hi < lo:
        raise UsageError(f"empty range {text!r}")
    return range(lo, hi + 1)


def parse_int_list(text: str) -> tuple:
    try:
        return tuple(int(v) for v in text.split(",") if v.strip())
    except ValueError:
        raise UsageError(f"bad integer list {text!r}") from None


def parse_types(text: str) -> list:
    return [parse_int_list(chunk) for chunk in text.split(";") if chunk.strip()]


def _require(args, *names):
    for name in names:
        if getattr(args, name, None) is None:
            raise UsageError(f"--family {args.family} needs --{name.replace('_', '-')}")


def build_spec(args) -> fam.FamilySpec:
    f = args.family
    if f == "simplex":
        _require(args, "d")
        return fam.StandardSimplex(args.d)
    if f == "spiked":
        _require(args, "d", "q")
        return fam.SpikedSimplex(int(args.q), args.d)
    if f == "minimal-matroid":
        _require(args, "rank", "n")
        return fam.MinimalMatroid(args.rank, args.n)
    if f == "multipartite":
        _require(args, "q")
        return fam.CompleteMultipartite(parse_int_list(args.q))
    if f == "hypersimplex":
        _require(args, "rank", "n")
        return fam.Hypersimplex(args.rank, args.n)
    if f == "cross":
        _require(args, "d")
        return fam.CrossPolytope(args.d)
    if f == "reflexive-simplex":
        _require(args, "d")
        return fam.StandardReflexiveSimplex(args.d)
    raise UsageError(f"unknown family {f!r}")


def spec_inputs(spec) -> dict:
    if isinstance(spec, fam.Generic):
        return {"poly": str(spec.poly)}
    out = {"family": type(spec).__name__}
    for k, v in vars(spec).items():
        out[k] = list(v) if isinstance(v, tuple) else v
    return out


def resolve_polynomial(args) -> tuple[Polynomial, dict]:
    if getattr(args, "poly", None) is not None:
        if args.family is not None:
            raise UsageError("give either --poly or --family, not both")
        try:
            p = parse_polynomial(args.poly)
        except PolynomialSyntaxError as exc:
            raise UsageError(str(exc)) from None
        return p, {"poly": args.poly, "parsed": str(p)}
    if args.family is None:
        raise UsageError("one of --poly or --family is required")
    spec = build_spec(args)
    return fam.ehrhart(spec), spec_inputs(spec)


# ---------------------------------------------------------------------------
# commands


def cmd_expand(args) -> tuple[OutputRecord, int]:
    f, inputs = resolve_polynomial(args)
    k = parse_rational(args.k) if args.k is not None else Fraction(1)
    inputs["k"] = k
    e = magic.to_magic(f, k)
    result = {
        "degree": e.d,
        "coeffs": list(e.coeffs),
        "positive": e.is_nonnegative,
        "first_negative_index": e.first_negative(),
    }
    return OutputRecord("expand", inputs, result), EXIT_OK


def cmd_mindex(args) -> tuple[OutputRecord, int]:
    f, inputs = resolve_polynomial(args)
    r = magic.m_index(f)
    result = {
        "m_index": r.value if r.found else "NOT_FOUND",
        "search_bound": r.search_bound_used,
        "monotone_search": r.monotone_search,
    }
    warnings = []
    code = EXIT_OK
    if not r.found:
        warnings.append(
            f"no k <= {r.search_bound_used} makes the polynomial magic positive "
            "(scan cap; set EHRHART_SCAN_CAP to change)"
        )
        code = EXIT_DOMAIN
    return OutputRecord("mindex", inputs, result, warnings), code


def _table_specs(args):
    f = args.family
    if f in ("simplex", "cross", "reflexive-simplex"):
        if args.d_range is None:
            raise UsageError(f"table --family {f} needs --d a..b")
        cls = {"simplex": fam.StandardSimplex, "cross": fam.CrossPolytope,
               "reflexive-simplex": fam.StandardReflexiveSimplex}[f]
        return [({"d": d}, cls(d)) for d in parse_range(args.d_range)]
    if f == "spiked":
        if args.d_range is None or args.q is None:
            raise UsageError("table --family spiked needs --d a..b and --q")
        return [({"q": int(args.q), "d": d}, fam.SpikedSimplex(int(args.q), d))
                for d in parse_range(args.d_range)]
    if f in ("minimal-matroid", "hypersimplex"):
        if args.n_range is None or args.rank is None:
            raise UsageError(f"table --family {f} needs --n a..b and --k")
        cls = fam.MinimalMatroid if f == "minimal-matroid" else fam.Hypersimplex
        return [({"k": args.rank, "n": n}, cls(args.rank, n)) for n in parse_range(args.n_range)]
    if f == "multipartite":
        types = parse_types(args.types) if args.types else fam.MULTIPARTITE_TYPES
        return [({"q": ",".join(map(str, q))}, fam.CompleteMultipartite(q)) for q in types]
    raise UsageError(f"unknown family {f!r}")


def cmd_table(args) -> tuple[OutputRecord, int]:
    rows = []
    warnings = []
    for params, spec in _table_specs(args):
        r = magic.m_index(fam.ehrhart(spec))
        if not r.found:
            warnings.append(f"{params}: not found within cap {r.search_bound_used}")
        rows.append({**params, "m_index": r.value})
    inputs = {"family": args.family, "d": args.d_range, "n": args.n_range,
              "k": args.rank, "q": args.q, "types": args.types}
    inputs = {k: v for k, v in inputs.items() if v is not None}
    return OutputRecord("table", inputs, {"rows": rows}, warnings), EXIT_OK


def cmd_hstar(args) -> tuple[OutputRecord, int]:
    f, inputs = resolve_polynomial(args)
    h = hs.hstar_from_ehrhart(f)
    result = {"d": h.d, "hstar": list(h.h), "palindromic": hs.is_palindromic(h)}
    return OutputRecord("hstar", inputs, result, h.issues), EXIT_OK


def cmd_realrooted(args) -> tuple[OutputRecord, int]:
    f, inputs = resolve_polynomial(args)
    target = f
    if args.numerator:
        target = hs.hstar_from_ehrhart(f, lattice_candidate=False).as_polynomial()
        inputs["numerator"] = True
    result = {"polynomial": str(target), "real_rooted": hs.is_real_rooted(target)}
    return OutputRecord("realrooted", inputs, result), EXIT_OK


def cmd_cl(args) -> tuple[OutputRecord, int]:
    f, inputs = resolve_polynomial(args)
    cert = cl_mod.cl_check(f)
    result = {
        "is_cl": cert.is_cl,
        "odd_degree_half_root": cert.odd_degree_half_root,
        "squared_parts": [[lo, hi] for lo, hi in cert.squared_parts],
        "max_b_squared_upper": cert.max_b_squared_upper,
    }
    if cert.is_cl:
        result["m_index_bound"] = cl_mod.cl_mindex_bound(f)
        if f.degree >= 1:
            result["dimension_only_bound"] = cl_mod.dimension_only_bound(f.degree)
    else:
        result["reason"] = cert.reason
    return OutputRecord("cl", inputs, result), EXIT_OK


def cmd_verify(args) -> tuple[OutputRecord, int]:
    if args.family is None:
        raise UsageError("verify needs --family")
    spec = build_spec(args)
    f = fam.ehrhart(spec)
    rows = []
    failed = False
    for n in parse_range(args.points):
        formula = evaluate(f, args.dilation * n)
        count = fam.lattice_count(spec, args.dilation, n).count
        ok = formula == count
        failed |= not ok
        rows.append({"dilation": args.dilation, "n": n, "formula": formula,
                     "count": count, "status": "PASS" if ok else "FAIL"})
    inputs = {**spec_inputs(spec), "dilation": args.dilation, "points": args.points}
    return (OutputRecord("verify", inputs, {"rows": rows}),
            EXIT_VERIFY_FAILED if failed else EXIT_OK)


def cmd_conjecture(args) -> tuple[OutputRecord, int]:
    ns = parse_range(args.n_range) if args.n_range else None
    types = parse_types(args.types) if args.types else None
    records = fam.conjecture_scan(args.which, ns=ns, types=types)
    rows = []
    for rec in records:
        params = {k: (",".join(map(str, v)) if isinstance(v, list) else v)
                  for k, v in rec.params.items()}
        rows.append({**params, "computed": rec.computed,
                     "conjectured": "{" + ", ".join(str(v) for v in rec.conjectured) + "}",
                     "status": rec.status, "note": rec.note})
    inputs = {"which": args.which}
    if args.n_range:
        inputs["n"] = args.n_range
    if args.types:
        inputs["types"] = args.types
    return OutputRecord("conjecture", inputs, {"rows": rows}), EXIT_OK


# ---------------------------------------------------------------------------
# rendering


def _jsonable(value, approx: bool):
    if isinstance(value, Fraction):
        out = {"num": str(value.numerator), "den": str(value.denominator)}
        if approx:
            out["approx"] = float(value)
        return out
    if isinstance(value, dict):
        return {str(k): _jsonable(v, approx) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v, approx) for v in value]
    return value


def _text(value, approx: bool) -> str:
    if isinstance(value, Fraction):
        s = str(value)
        if approx and value.denominator != 1:
            s += f" (approx {float(value):.6g})"
        return s
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "-"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_text(v, approx) for v in value) + "]"
    return str(value)


def render_json(rec: OutputRecord, approx: bool) -> str:
    payload = {
        "command": rec.command,
        "inputs": _jsonable(rec.inputs, approx),
        "result": _jsonable(rec.result, approx),
        "warnings": list(rec.warnings),
        "exact": rec.exact,
    }
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _rows(rec: OutputRecord) -> list:
    if isinstance(rec.result, dict) and "rows" in rec.result:
        return rec.result["rows"]
    return [rec.result]


def render_csv(rec: OutputRecord, approx: bool) -> str:
    rows = _rows(rec)
    buf = io.StringIO()
    header = list(rows[0].keys()) if rows else []
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([_text(row.get(h), approx) for h in header])
    return buf.getvalue()


def render_markdown(rec: OutputRecord, approx: bool) -> str:
    lines = [f"## {rec.command}", ""]
    if rec.inputs:
        lines.append("inputs: " + ", ".join(f"{k}={_text(v, approx)}" for k, v in rec.inputs.items()))
        lines.append("")
    if isinstance(rec.result, dict) and "rows" in rec.result:
        rows = rec.result["rows"]
        if rows:
            header = list(rows[0].keys())
            lines.append("| " + " | ".join(header) + " |")
            lines.append("|" + "|".join("---" for _ in header) + "|")
            for row in rows:
                lines.append("| " + " | ".join(_text(row.get(h), approx) for h in header) + " |")
    else:
        for k, v in rec.result.items():
            lines.append(f"- {k}: {_text(v, approx)}")
    for w in rec.warnings:
        lines.append(f"warning: {w}")
    if approx:
        lines.append("")
        lines.append("(values marked approx are rounded decimals; all others are exact)")
    return "\n".join(lines) + "\n"


RENDERERS = {"json": render_json, "csv": render_csv, "markdown": render_markdown}


# ---------------------------------------------------------------------------
# parser


def _output_parent() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=sorted(RENDERERS), default="markdown")
    p.add_argument("--out", default=None, help="write to FILE instead of stdout")
    p.add_argument("--approx", action="store_true", help="add decimal approximations")
    return p


def _family_parent(rank_flags) -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--poly", help='polynomial, e.g. "binom(x+2,2)"')
    p.add_argument("--family", choices=FAMILY_NAMES)
    p.add_argument("--d", type=int)
    p.add_argument("--q", help="integer (spiked) or comma list (multipartite)")
    p.add_argument("--n", type=int)
    p.add_argument(*rank_flags, dest="rank", type=int, help="rank parameter k")
    return p


def build_parser() -> argparse.ArgumentParser:
    out = _output_parent()
    fam_rank = _family_parent(("--rank", "--k"))
    fam_norank_k = _family_parent(("--rank",))

    parser = argparse.ArgumentParser(
        prog="magicpos",
        description="Magic positivity and m-indices of Ehrhart polynomials.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", parents=[out, fam_norank_k],
                       help="expand f(kx) in the basis x^i (x+1)^(d-i)")
    p.add_argument("--k", default=None, help="dilation factor (rational, default 1)")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("mindex", parents=[out, fam_rank], help="m-index of a polynomial or family")
    p.set_defaults(func=cmd_mindex)

    p = sub.add_parser("table", parents=[out], help="m-index table over a parameter range")
    p.add_argument("--family", choices=FAMILY_NAMES, required=True)
    p.add_argument("--d", dest="d_range")
    p.add_argument("--n", dest="n_range")
    p.add_argument("--k", "--rank", dest="rank", type=int)
    p.add_argument("--q")
    p.add_argument("--types", help='multipartite types, e.g. "1,1,1;1,2,3"')
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("hstar", parents=[out, fam_rank], help="h*-vector")
    p.set_defaults(func=cmd_hstar)

    p = sub.add_parser("realrooted", parents=[out, fam_rank], help="exact real-rootedness test")
    p.add_argument("--numerator", action="store_true",
                   help="test the generating-function numerator instead of the polynomial")
    p.set_defaults(func=cmd_realrooted)

    p = sub.add_parser("cl", parents=[out, fam_rank], help="roots on Re(z) = -1/2 and m-index bounds")
    p.set_defaults(func=cmd_cl)

    p = sub.add_parser("verify", parents=[out, fam_rank],
                       help="closed form versus lattice-point enumeration")
    p.add_argument("--dilation", type=int, default=1)
    p.add_argument("--points", default="1..3", help="range of n, e.g. 1..3")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("conjecture", parents=[out], help="scan an open m-index conjecture")
    p.add_argument("--which", choices=fam.CONJECTURES, required=True)
    p.add_argument("--n", dest="n_range")
    p.add_argument("--types")
    p.set_defaults(func=cmd_conjecture)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        record, code = args.func(args)
    except (UsageError, PolynomialSyntaxError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except MagicError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    text = RENDERERS[args.format](record, args.approx)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
