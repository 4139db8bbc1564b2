"""Command-line surface.

Subcommands: catalog list, generate, verify, verify-catalog, sweep, pi.
Exit codes: 0 success / all verifications pass, 1 any verification failed,
2 usage or domain error.  JSON goes to stdout (or atomically to --out);
parallel verification preserves catalog order in the output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from .catalog import catalog_entries, catalog_families, entry_by_id
from .errors import DomainError, PiSeriesError
from .floatfmt import decimal_str, round_decimal_places
from .piref import compute_pi
from .render import emit_latex, emit_text, render_closed_form_text
from .series import build_spec, normalize_identity
from .verify import report_to_dict, verify_normalized, verify_spec

FAMILY_SAMPLE_COUNT = 3


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"not a rational p/q: {text!r}") from exc


def _add_common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--digits", type=int, default=20)
    parser.add_argument(
        "--mode", choices=("accelerated", "rigorous"), default="accelerated"
    )
    parser.add_argument("--max-terms", type=int, default=10**6)
    parser.add_argument("--precision-bits", type=int, default=None)
    parser.add_argument("--threads", type=int, default=None)
    parser.add_argument("--out", default=None, help="write JSON atomically to FILE")
    parser.add_argument("--format", choices=("json", "text"), default="json")


def _add_spec_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--alpha", required=True, help="rational in (0,1) as p/q")
    parser.add_argument("--a", type=int, required=True)
    parser.add_argument("--b", type=int, required=True)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="piseries",
        description="Construct, evaluate, and verify series for 1/pi",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_catalog = sub.add_parser("catalog", help="catalog operations")
    catalog_sub = p_catalog.add_subparsers(dest="catalog_command", required=True)
    p_list = catalog_sub.add_parser("list", help="list entries and families")
    p_list.add_argument("--format", choices=("json", "text"), default="text")
    p_list.add_argument("--out", default=None)

    p_generate = sub.add_parser("generate", help="print an identity")
    p_generate.add_argument("--id", default=None, help="catalog id, e.g. ex-3.6")
    p_generate.add_argument("--alpha", default=None)
    p_generate.add_argument("--a", type=int, default=None)
    p_generate.add_argument("--b", type=int, default=None)
    p_generate.add_argument("--c", type=int, default=None)
    p_generate.add_argument("--scale", default="1")
    p_generate.add_argument("--head-terms", type=int, default=None)
    p_generate.add_argument(
        "--format", choices=("latex", "json", "text"), default="latex"
    )
    p_generate.add_argument("--out", default=None)

    p_verify = sub.add_parser("verify", help="verify one spec")
    _add_spec_flags(p_verify)
    p_verify.add_argument("--c", type=int, required=True)
    _add_common_flags(p_verify)

    p_vc = sub.add_parser("verify-catalog", help="verify the whole catalog")
    _add_common_flags(p_vc)

    p_sweep = sub.add_parser("sweep", help="verify a spec across a c range")
    _add_spec_flags(p_sweep)
    p_sweep.add_argument("--c-range", required=True, help="inclusive lo..hi")
    _add_common_flags(p_sweep)

    p_pi = sub.add_parser("pi", help="self-validated pi digits")
    p_pi.add_argument("--digits", type=int, default=20)
    p_pi.add_argument("--format", choices=("json", "text"), default="text")
    p_pi.add_argument("--out", default=None)

    return parser


def _write_output(text: str, out_path: str | None) -> None:
    if out_path is None:
        print(text)
        return
    directory = os.path.dirname(os.path.abspath(out_path))
    fd, tmp_path = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(text)
            handle.write("\n")
        os.replace(tmp_path, out_path)
    except BaseException:
        if os.path.exists(tmp_path):
            os.unlink(tmp_path)
        raise


def _report_text_line(report) -> str:
    status = "PASS" if report.passed else "FAIL"
    return (
        f"{status} {report.spec} method={report.method} "
        f"terms={report.terms_used} digits_agreed={report.digits_agreed} "
        f"rel_error={decimal_str(report.rel_error, 3)} "
        f"elapsed_ms={report.elapsed_ms}"
    )


def _emit_reports(reports, args, labels=None) -> None:
    if args.format == "json":
        if labels:
            body = [
                {"id": label, "report": report_to_dict(report)}
                for label, report in zip(labels, reports)
            ]
        else:
            body = [report_to_dict(report) for report in reports]
        _write_output(json.dumps(body, indent=2), args.out)
    else:
        lines = []
        for i, report in enumerate(reports):
            prefix = f"{labels[i]}: " if labels else ""
            lines.append(prefix + _report_text_line(report))
        _write_output("\n".join(lines), args.out)


def _verify_kwargs(args) -> dict:
    return {
        "digits": args.digits,
        "mode": args.mode,
        "max_terms": args.max_terms,
        "precision_bits": args.precision_bits,
    }


def _run_verify(args) -> int:
    spec = build_spec(_parse_fraction(args.alpha), args.a, args.b, args.c)
    report = verify_spec(spec, **_verify_kwargs(args))
    if args.format == "json":
        _write_output(json.dumps(report_to_dict(report), indent=2), args.out)
    else:
        _write_output(_report_text_line(report), args.out)
    return 0 if report.passed else 1


def _catalog_jobs():
    """(label, callable) pairs in fixed catalog order."""
    jobs = []
    for entry in catalog_entries():
        jobs.append((entry.id, entry))
    for family in catalog_families():
        for k in range(family.k_min, family.k_min + FAMILY_SAMPLE_COUNT):
            entry = family.instantiate(k)
            jobs.append((entry.id, entry))
    return jobs


def _verify_entry(entry, kwargs):
    if entry.is_presented:
        return verify_normalized(entry.identity(), **kwargs)
    return verify_spec(entry.spec, **kwargs)


def _run_verify_catalog(args) -> int:
    jobs = _catalog_jobs()
    kwargs = _verify_kwargs(args)
    workers = args.threads or os.cpu_count() or 1
    with ThreadPoolExecutor(max_workers=workers) as pool:
        reports = list(pool.map(lambda job: _verify_entry(job[1], kwargs), jobs))
    _emit_reports(reports, args, labels=[label for label, _ in jobs])
    return 0 if all(r.passed for r in reports) else 1


def _run_sweep(args) -> int:
    lo_hi = args.c_range.split("..")
    if len(lo_hi) != 2:
        raise DomainError(f"--c-range wants lo..hi, got {args.c_range!r}")
    try:
        lo, hi = int(lo_hi[0]), int(lo_hi[1])
    except ValueError as exc:
        raise DomainError(f"--c-range wants integers, got {args.c_range!r}") from exc
    if hi < lo:
        raise DomainError(f"empty range {args.c_range!r}")
    alpha = _parse_fraction(args.alpha)
    specs = [build_spec(alpha, args.a, args.b, c) for c in range(lo, hi + 1)]
    kwargs = _verify_kwargs(args)
    workers = args.threads or os.cpu_count() or 1
    with ThreadPoolExecutor(max_workers=workers) as pool:
        reports = list(pool.map(lambda s: verify_spec(s, **kwargs), specs))
    _emit_reports(reports, args, labels=[f"c={s.c}" for s in specs])
    return 0 if all(r.passed for r in reports) else 1


def _entry_dict(entry) -> dict:
    identity = entry.identity()
    return {
        "id": entry.id,
        "spec": {
            "alpha": f"{entry.spec.alpha.numerator}/{entry.spec.alpha.denominator}",
            "a": entry.spec.a,
            "b": entry.spec.b,
            "c": entry.spec.c,
        },
        "scale": str(entry.scale),
        "head": str(entry.head),
        "tail_start": entry.head_terms,
        "rhs_rational": str(identity.rhs.rational_part),
        "sine_kind": identity.rhs.sine.kind,
        "rhs_display": entry.rhs_display,
        "citation": entry.citation,
        "latex": emit_latex(entry),
    }


def _run_catalog_list(args) -> int:
    if args.format == "json":
        payload = {
            "entries": [_entry_dict(e) for e in catalog_entries()],
            "families": [
                {
                    "id": f.id,
                    "citation": f.citation,
                    "alpha": f"{f.alpha.numerator}/{f.alpha.denominator}",
                    "a": f.a,
                    "b": f.b,
                    "k_min": f.k_min,
                    "head_terms": f.head_terms,
                }
                for f in catalog_families()
            ],
        }
        _write_output(json.dumps(payload, indent=2), args.out)
    else:
        lines = []
        for entry in catalog_entries():
            lines.append(f"{entry.id:12s} {entry.rhs_display:24s} {entry.spec}")
        for family in catalog_families():
            lines.append(
                f"{family.id:12s} {'c=k family':24s} "
                f"(alpha={family.alpha}, a={family.a}, b={family.b}, k>={family.k_min})"
            )
        _write_output("\n".join(lines), args.out)
    return 0


def _run_generate(args) -> int:
    if args.id is not None:
        entry = entry_by_id(args.id)
        identity = entry.identity()
    else:
        if args.alpha is None or args.a is None or args.b is None or args.c is None:
            raise DomainError("generate needs --id or all of --alpha/--a/--b/--c")
        spec = build_spec(_parse_fraction(args.alpha), args.a, args.b, args.c)
        # raw parameters mean the canonical form unless a presentation was
        # explicitly requested via --scale / --head-terms
        head_terms = 0 if args.head_terms is None else args.head_terms
        identity = normalize_identity(
            spec, _parse_fraction(args.scale), head_terms
        )
        entry = None
    if args.format == "latex":
        raw_spec = entry is None and identity.tail_start == 0 and identity.scale == 1
        text = emit_latex(identity.spec) if raw_spec else emit_latex(identity)
    elif args.format == "text":
        text = emit_text(identity)
    else:
        spec = identity.spec
        text = json.dumps(
            {
                "id": entry.id if entry is not None else None,
                "spec": {
                    "alpha": f"{spec.alpha.numerator}/{spec.alpha.denominator}",
                    "a": spec.a,
                    "b": spec.b,
                    "c": spec.c,
                },
                "scale": str(identity.scale),
                "head": str(identity.head),
                "tail_start": identity.tail_start,
                "rhs_rational": str(identity.rhs.rational_part),
                "sine_kind": identity.rhs.sine.kind,
                "rhs_display": render_closed_form_text(identity.rhs),
                "latex": emit_latex(identity),
            },
            indent=2,
        )
    _write_output(text, args.out)
    return 0


def _run_pi(args) -> int:
    reference = compute_pi(args.digits)
    digit_string = round_decimal_places(reference.value, args.digits - 1)
    if args.format == "json":
        payload = json.dumps(
            {
                "digits": reference.digits,
                "value": digit_string,
                "agreement_digits": reference.agreement_digits,
            },
            indent=2,
        )
        _write_output(payload, args.out)
    else:
        _write_output(
            f"{digit_string}\n# two arctangent routes agree to "
            f"{reference.agreement_digits} digits",
            args.out,
        )
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            return _run_verify(args)
        if args.command == "verify-catalog":
            return _run_verify_catalog(args)
        if args.command == "sweep":
            return _run_sweep(args)
        if args.command == "catalog":
            return _run_catalog_list(args)
        if args.command == "generate":
            return _run_generate(args)
        if args.command == "pi":
            return _run_pi(args)
        parser.error(f"unknown command {args.command!r}")
    except PiSeriesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())
