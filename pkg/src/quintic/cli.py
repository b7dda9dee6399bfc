"""Command-line front end: classify, factor, symbol, genus, report, enumerate, selftest.

All commands emit deterministic JSON envelopes (fixed key order, LF line
endings); identical inputs produce byte-identical output. Exit codes:
0 success, 1 internal invariant failure, 2 input error.
"""

from __future__ import annotations

import json
import sys
from concurrent.futures import ProcessPoolExecutor

import click

from . import __version__, classgroup, genus, radicand, selftest
from .classgroup import HYPOTHESIS_NOTE, RESIDUE_READING_NOTE, TAU2_PROOF_NOTE
from .cyclo import CycInt
from .errors import InputError, QuinticError
from .primes import factor_radicand, factor_rational_prime
from .radicand import Verdict
from .symbols import quintic_symbol, residue_field

_ENUM_CHUNK = 256  # fixed worker chunk size; output order never depends on it


def _envelope(command: str, inputs: dict, result, warnings: list[str]) -> dict:
    return {
        "tool_version": __version__,
        "command": command,
        "input": inputs,
        "result": result,
        "warnings": warnings,
    }


def _emit(doc: dict, out):
    text = json.dumps(doc, indent=2, sort_keys=False) + "\n"
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


def _fail(exc: QuinticError):
    doc = {"error": {"code": exc.code, "message": str(exc)}}
    click.echo(json.dumps(doc, indent=2), err=True)
    sys.exit(exc.exit_code)


def _guard(fn):
    import functools

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except QuinticError as exc:
            _fail(exc)
        except ZeroDivisionError as exc:
            click.echo(json.dumps({"error": {"code": "division-by-zero", "message": str(exc)}}), err=True)
            sys.exit(2)

    return wrapper


@click.group()
@click.version_option(__version__)
@click.option("--quiet", is_flag=True, default=False, help="Suppress progress chatter on stderr.")
@click.pass_context
def main(ctx, quiet):
    """Exact-arithmetic analyzer for pure quintic fields Q(n^(1/5))."""
    ctx.ensure_object(dict)
    ctx.obj["quiet"] = quiet


_json_flag = click.option("--json", "as_json", is_flag=True, default=True,
                          help="Emit a JSON envelope (always on; accepted for scripting).")
_out_opt = click.option("--out", type=click.Path(writable=True, dir_okay=False), default=None,
                        help="Write output to a file instead of stdout.")


@main.command()
@click.argument("n", type=int)
@_json_flag
@_out_opt
@_guard
def classify(n, as_json, out):
    """Classify the radicand N into family I, II, III or none."""
    form = radicand.classify(n)
    _emit(_envelope("classify", {"n": n}, form.to_json(), [HYPOTHESIS_NOTE]), out)


@main.command()
@click.argument("n", type=int)
@_json_flag
@_out_opt
@_guard
def factor(n, as_json, out):
    """Factor N over Z[zeta5]: unit times prime powers."""
    fac = factor_radicand(n)
    _emit(_envelope("factor", {"n": n}, fac.to_json(), []), out)


def _parse_cyc(text: str) -> CycInt:
    parts = text.split(",")
    try:
        if len(parts) == 1:
            return CycInt(int(parts[0]))
        return CycInt(tuple(int(x) for x in parts))
    except ValueError as exc:
        raise InputError(f"cannot parse {text!r} as an integer or 4 coordinates") from exc


@main.command()
@click.argument("a")
@click.argument("p", type=int)
@_json_flag
@_out_opt
@_guard
def symbol(a, p, as_json, out):
    """Quintic residue symbols of A at every prime of Z[zeta5] above P.

    A is a rational integer or four comma-separated power-basis coordinates.
    """
    elem = _parse_cyc(a)
    rows = []
    for q in factor_rational_prime(p):
        rf = residue_field(q)
        rows.append(
            {
                "prime": q.to_json(),
                "zeta_image": list(rf.zeta_image),
                "exponent": quintic_symbol(elem, q),
            }
        )
    legend = {str(i): f"value zeta^{i}" + (" (a is a fifth power)" if i == 0 else "") for i in range(5)}
    _emit(_envelope("symbol", {"a": elem.to_json(), "p": p}, {"symbols": rows, "legend": legend}, []), out)


def _resolve_h_gamma(n, h_gamma, table):
    if h_gamma is not None:
        return h_gamma
    if table is not None:
        return genus.load_class_number_table(table).get(n)
    return None


def _corollary_section(n, h):
    try:
        return genus.corollary_report(n, h).to_json()
    except QuinticError as exc:
        return {"error": {"code": exc.code, "message": str(exc)}}


@main.command("genus")
@click.argument("n", type=int)
@click.option("--h-gamma", type=int, default=None, help="Class number of Q(n^(1/5)), if known.")
@click.option("--table", type=click.Path(exists=True, dir_okay=False), default=None,
              help="CSV table of 'n,h_gamma' lines ('#' comments).")
@_json_flag
@_out_opt
@_guard
def genus_cmd(n, h_gamma, table, as_json, out):
    """Genus-field report for N: r, 5^r, period polynomials, d, q*, generators."""
    h = _resolve_h_gamma(n, h_gamma, table)
    report = genus.build_genus_report(n).to_json()
    report["corollary"] = _corollary_section(n, h) if h is not None else None
    _emit(_envelope("genus", {"n": n, "h_gamma": h}, report, [HYPOTHESIS_NOTE]), out)


@main.command()
@click.argument("n", type=int)
@click.option("--h-gamma", type=int, default=None, help="Class number of Q(n^(1/5)), if known.")
@click.option("--table", type=click.Path(exists=True, dir_okay=False), default=None,
              help="CSV table of 'n,h_gamma' lines ('#' comments).")
@_out_opt
@_guard
def report(n, h_gamma, table, out):
    """Full pipeline for N: classification, factorization, genus, generators,
    admissible capitulation types."""
    h = _resolve_h_gamma(n, h_gamma, table)
    form = radicand.classify(n)
    warnings = [HYPOTHESIS_NOTE, TAU2_PROOF_NOTE]
    doc = {
        "radicand": form.to_json(),
        "factorization": factor_radicand(n).to_json(),
        "genus": None,
        "corollary": _corollary_section(n, h) if h is not None else None,
        "capitulation": None,
    }
    try:
        doc["genus"] = genus.build_genus_report(n).to_json()
    except QuinticError as exc:
        doc["genus"] = {"error": {"code": exc.code, "message": str(exc)}}
    if form.verdict is not Verdict.NONE:
        try:
            cert = classgroup.generator_certificate(n, form)
            certificate = cert.to_json()
            if not cert.applicable:
                warnings.append(RESIDUE_READING_NOTE)
        except QuinticError as exc:
            certificate = {"error": {"code": exc.code, "message": str(exc)}}
        model = classgroup.canonical_model()
        lattice = classgroup.build_lattice(model)
        doc["capitulation"] = {
            "n": n,
            "form": form.verdict.value,
            "admissible_types": [list(t) for t in classgroup.enumerate_capitulation_types()],
            "certificate": certificate,
            "tau2_permutation": list(classgroup.tau2_permutation(model, lattice)),
            "subgroups": lattice.to_json()["subgroups"],
        }
    _emit(_envelope("report", {"n": n, "h_gamma": h}, doc, warnings), out)


def _row_chunk(args: tuple[int, int, str | None]) -> list[dict]:
    lo, hi, verdict_value = args
    verdict = None if verdict_value is None else Verdict(verdict_value)
    return [form.to_json() for _, form in radicand.enumerate_radicands(lo, hi, verdict)]


def _csv_row(row: dict) -> str:
    cells = [str(row["n"]), row["verdict"], *( "" if row[k] is None else str(row[k]) for k in ("e", "p", "q"))]
    by_name = {c["name"]: c for c in row["checks"]}
    for name in radicand.CHECK_NAMES:
        cells.append("pass" if by_name[name]["passed"] else "fail")
    return ",".join(cells)


@main.command("enumerate")
@click.argument("lo", type=int)
@click.argument("hi", type=int)
@click.option("--form", "form_filter", type=click.Choice(["I", "II", "III", "none"]), default=None,
              help="Only emit radicands with this verdict.")
@click.option("--jsonl/--csv", "as_jsonl", default=True, help="Row format (JSONL default).")
@click.option("--from", "from_n", type=int, default=None, help="Resume from this n (inclusive).")
@click.option("--workers", type=int, default=1, show_default=True,
              help="Classify range chunks in parallel; output order is unaffected.")
@_out_opt
@_guard
def enumerate_cmd(lo, hi, form_filter, as_jsonl, from_n, workers, out):
    """Classify every fifth-power-free N in [LO, HI], ascending."""
    if from_n is not None:
        lo = max(lo, from_n)
    if not (2 <= lo <= hi):
        raise InputError(f"invalid range [{lo}, {hi}]")
    chunks = [(a, min(a + _ENUM_CHUNK - 1, hi), form_filter) for a in range(lo, hi + 1, _ENUM_CHUNK)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunk_rows = list(pool.map(_row_chunk, chunks))
    else:
        chunk_rows = [_row_chunk(c) for c in chunks]

    lines = []
    if not as_jsonl:
        lines.append("n,verdict,e,p,q," + ",".join(radicand.CHECK_NAMES))
    for rows in chunk_rows:
        for row in rows:
            lines.append(json.dumps(row, sort_keys=False, separators=(",", ":")) if as_jsonl else _csv_row(row))
    text = "".join(line + "\n" for line in lines)
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


@main.command("selftest")
@click.option("--suite", "suite_name", type=click.Choice(sorted(selftest.SUITES)), default=None,
              help="Run a single suite instead of all of them.")
@_guard
def selftest_cmd(suite_name):
    """Run the oracle-equivalence and invariant suites; exit 0 iff all pass."""
    names = None if suite_name is None else [suite_name]
    results = selftest.run(names)
    failed = False
    for res in results:
        status = "ok" if res.passed else "FAIL"
        click.echo(f"suite {res.name}: {res.checks} checks, {len(res.failures)} failures [{status}]")
        for msg in res.failures[:10]:
            click.echo(f"  - {msg}")
        failed = failed or not res.passed
    sys.exit(1 if failed else 0)


if __name__ == "__main__":
    main()
