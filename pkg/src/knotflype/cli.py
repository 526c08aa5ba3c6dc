"""knotctl: command-line front end for diagram analysis.

JSON goes to stdout (byte-stable: keys sorted, compact separators) so
runs are directly diffable; DOT is available for the graph command.
Exit codes: 0 success, 1 domain error (with a structured error object),
2 usage error, 3 analysis truncated by an enumeration cap.
"""

from __future__ import annotations

import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

import click

from . import __version__
from .bracket import kauffman_bracket
from .canonical import canonical_code
from .diagram import (
    Diagram,
    export_pd,
    parse_dt,
    parse_gauss,
    parse_pd,
    validate_alternating,
    validate_prime,
    validate_reduced,
    writhe,
)
from .errors import KnotError, LimitExceeded
from .flype import (
    apply_flype,
    build_flype_graph,
    find_flype_sites,
    graph_to_dot,
    graph_to_json,
)
from .freeperiod import detect_free_period
from .symmetry import detect_period, quotient
from .tables import load_table

EXIT_DOMAIN = 1
EXIT_TRUNCATED = 3


def _emit(obj) -> None:
    click.echo(json.dumps(obj, sort_keys=True, separators=(",", ":")))


def _fail(err: KnotError) -> None:
    _emit({"error": type(err).__name__, "message": str(err)})
    sys.exit(EXIT_DOMAIN)


def _parse_input(pd: Optional[str], dt: Optional[str], gauss: Optional[str]) -> Diagram:
    given = [x for x in (pd, dt, gauss) if x is not None]
    if len(given) != 1:
        raise click.UsageError("exactly one of --pd / --dt / --gauss is required")
    if pd is not None:
        return parse_pd(pd)
    if dt is not None:
        return parse_dt(dt.replace(",", " "))
    return parse_gauss(gauss)


def _diagram_options(fn):
    fn = click.option("--pd", help="PD code, e.g. 'X(1,4,2,3) ...'")(fn)
    fn = click.option("--dt", help="DT code, e.g. '4,6,2'")(fn)
    fn = click.option("--gauss", help="Gauss code, e.g. 'O1+ U2+ ...'")(fn)
    return fn


def _cap(value: Optional[int], env: str) -> Optional[int]:
    if value is not None:
        return value
    raw = os.environ.get(env)
    return int(raw) if raw else None


def _site_dict(site) -> dict:
    return site.to_dict()


@click.group()
@click.version_option(__version__)
def main() -> None:
    """Analyze reduced alternating knot diagrams."""


@main.command()
@_diagram_options
def validate(pd, dt, gauss) -> None:
    """Check alternation, reducedness, and primality."""
    try:
        d = _parse_input(pd, dt, gauss)
    except KnotError as e:
        return _fail(e)
    alt = validate_alternating(d)
    red = validate_reduced(d)
    pri = validate_prime(d)
    _emit(
        {
            "crossings": d.n,
            "alternating": alt.ok,
            "reduced": red.ok,
            "prime": pri.ok,
            "writhe": writhe(d),
        }
    )
    if not (alt.ok and red.ok and pri.ok):
        sys.exit(EXIT_DOMAIN)


@main.command()
@_diagram_options
def sites(pd, dt, gauss) -> None:
    """List the legal flype sites of a diagram."""
    try:
        d = _parse_input(pd, dt, gauss)
        found = sorted(find_flype_sites(d))
    except KnotError as e:
        return _fail(e)
    _emit([_site_dict(s) for s in found])


@main.command()
@_diagram_options
@click.option("--site", "site_index", type=int, required=True,
              help="index into the sorted site list")
def flype(pd, dt, gauss, site_index) -> None:
    """Apply one flype and print the resulting diagram."""
    try:
        d = _parse_input(pd, dt, gauss)
        found = sorted(find_flype_sites(d))
        if not 0 <= site_index < len(found):
            raise click.UsageError(
                f"--site must be in 0..{len(found) - 1} ({len(found)} sites)"
            )
        result, created = apply_flype(d, found[site_index])
    except KnotError as e:
        return _fail(e)
    _emit(
        {
            "site": _site_dict(found[site_index]),
            "crossing_created": created,
            "pd": export_pd(result),
        }
    )


@main.command()
@_diagram_options
@click.option("--max-nodes", type=int, default=None)
@click.option("--max-edges", type=int, default=None)
@click.option("--mirror", is_flag=True, help="identify mirror-image nodes")
@click.option("--format", "fmt", type=click.Choice(["json", "dot"]), default="json")
def graph(pd, dt, gauss, max_nodes, max_edges, mirror, fmt) -> None:
    """Build the flype graph reachable from a diagram."""
    try:
        d = _parse_input(pd, dt, gauss)
        g = build_flype_graph(
            d,
            max_nodes=_cap(max_nodes, "KNOTCTL_MAX_NODES"),
            max_edges=max_edges,
            mirror=mirror,
        )
    except LimitExceeded as e:
        g = e.partial
        click.echo(graph_to_dot(g) if fmt == "dot" else graph_to_json(g))
        sys.exit(EXIT_TRUNCATED)
    except KnotError as e:
        return _fail(e)
    click.echo(graph_to_dot(g) if fmt == "dot" else graph_to_json(g))


@main.command()
@_diagram_options
@click.option("--p", type=int, required=True, help="odd prime to test")
@click.option("--max-nodes", type=int, default=None)
@click.option("--max-edges", type=int, default=None)
@click.option("--census", "census_all", is_flag=True,
              help="collect every witness instead of the first")
@click.option("--no-shortcuts", is_flag=True, help="always run the full search")
def period(pd, dt, gauss, p, max_nodes, max_edges, census_all, no_shortcuts) -> None:
    """Decide whether the knot has an odd-prime period p."""
    try:
        d = _parse_input(pd, dt, gauss)
        res = detect_period(
            d,
            p,
            use_shortcuts=not no_shortcuts,
            census=census_all,
            max_nodes=_cap(max_nodes, "KNOTCTL_MAX_NODES"),
            max_edges=max_edges,
        )
    except KnotError as e:
        return _fail(e)
    out = {
        "p": p,
        "period": res.report.to_dict() if res.found else None,
        "conclusive": res.conclusive,
        "reason": res.reason,
    }
    if census_all:
        out["witnesses"] = [r.to_dict() for r in res.reports]
    _emit(out)
    if not res.conclusive:
        sys.exit(EXIT_TRUNCATED)


@main.command()
@_diagram_options
@click.option("--p", type=int, required=True, help="odd prime to test")
@click.option("--max-nodes", type=int, default=None)
@click.option("--max-edges", type=int, default=None)
def freeperiod(pd, dt, gauss, p, max_nodes, max_edges) -> None:
    """Decide whether the knot has a free period of odd prime order p."""
    try:
        d = _parse_input(pd, dt, gauss)
        res = detect_free_period(
            d,
            p,
            max_nodes=_cap(max_nodes, "KNOTCTL_MAX_NODES"),
            max_edges=max_edges,
        )
    except KnotError as e:
        return _fail(e)
    _emit(
        {
            "p": p,
            "free_period": res.report.to_dict() if res.found else None,
            "conclusive": res.conclusive,
            "reason": res.reason,
        }
    )
    if not res.conclusive:
        sys.exit(EXIT_TRUNCATED)


@main.command(name="quotient")
@_diagram_options
@click.option("--p", type=int, required=True, help="odd prime period")
@click.option("--max-nodes", type=int, default=None)
def quotient_cmd(pd, dt, gauss, p, max_nodes) -> None:
    """Compute the quotient diagram under a detected period p."""
    try:
        d = _parse_input(pd, dt, gauss)
        res = detect_period(d, p, max_nodes=_cap(max_nodes, "KNOTCTL_MAX_NODES"))
        if not res.found:
            _emit({"p": p, "quotient": None, "reason": res.reason})
            sys.exit(EXIT_DOMAIN if res.conclusive else EXIT_TRUNCATED)
        q = quotient(res.report)
    except KnotError as e:
        return _fail(e)
    _emit(
        {
            "p": p,
            "quotient": {
                "pd": export_pd(q),
                "crossings": q.n,
                "alternating": validate_alternating(q).ok,
                "reduced": validate_reduced(q).ok,
            },
        }
    )


@main.command()
@_diagram_options
def bracket(pd, dt, gauss) -> None:
    """Kauffman bracket, writhe, and exponent span."""
    try:
        d = _parse_input(pd, dt, gauss)
        poly = kauffman_bracket(d)
    except KnotError as e:
        return _fail(e)
    _emit(
        {
            "bracket": {str(e): c for e, c in sorted(poly.to_dict().items())},
            "span": poly.span,
            "writhe": writhe(d),
        }
    )


# ---------------------------------------------------------------------------
# Census
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class _CensusJob:
    ident: str
    code: str
    fmt: str
    primes: tuple[int, ...]
    free_primes: tuple[int, ...]
    max_nodes: Optional[int]
    max_edges: Optional[int]


def _odd_primes_upto(n: int) -> tuple[int, ...]:
    return tuple(
        p for p in range(3, n + 1, 2) if all(p % q for q in range(3, p, 2))
    )


def _census_row(job: _CensusJob) -> dict:
    try:
        d = parse_dt(job.code.replace(",", " ")) if job.fmt == "dt" else parse_pd(job.code)
    except KnotError as e:
        return {"id": job.ident, "error": type(e).__name__, "message": str(e)}
    truncated = False
    try:
        g = build_flype_graph(d, max_nodes=job.max_nodes, max_edges=job.max_edges)
    except LimitExceeded as e:
        g, truncated = e.partial, True
    primes = job.primes or _odd_primes_upto(d.n)
    periods = []
    for p in primes:
        res = detect_period(d, p, max_nodes=job.max_nodes, max_edges=job.max_edges)
        truncated = truncated or not res.conclusive
        if res.found:
            periods.append(
                {"p": p, "witness": canonical_code(res.report.diagram)[:8]}
            )
    free_periods = []
    for p in job.free_primes:
        res = detect_free_period(d, p, max_nodes=job.max_nodes, max_edges=job.max_edges)
        truncated = truncated or not res.conclusive
        if res.found:
            free_periods.append({"p": p, "n": res.report.twist_count})
    return {
        "id": job.ident,
        "crossings": d.n,
        "nodes": g.node_count,
        "edges": g.edge_count,
        "periods": periods,
        "free_periods": free_periods,
        "status": "truncated" if truncated else "complete",
    }


def _ingest_table(path: str, fmt: str, lenient: bool):
    if path == "-":
        lines = sys.stdin.read().splitlines()
    else:
        with open(path) as fh:
            lines = fh.read().splitlines()
    for num, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split(None, 1)
        if len(parts) != 2:
            if lenient:
                click.echo(f"warning: line {num}: malformed entry skipped", err=True)
                continue
            raise click.ClickException(f"line {num}: expected 'identifier code'")
        yield parts[0], parts[1]


@main.command()
@click.option("--table", "table_path", default=None,
              help="knot table file ('id code' per line); default: bundled table")
@click.option("--table-format", type=click.Choice(["dt", "pd"]), default="dt")
@click.option("--p", "p_list", default=None,
              help="comma-separated odd primes; default: all odd primes <= n")
@click.option("--free-p", "free_p_list", default=None,
              help="comma-separated odd primes for free-period scans (default: none)")
@click.option("--max-nodes", type=int, default=None)
@click.option("--max-edges", type=int, default=None)
@click.option("--jobs", type=int, default=1, help="worker processes")
@click.option("--lenient", is_flag=True, help="skip malformed table lines")
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json")
def census(table_path, table_format, p_list, free_p_list, max_nodes, max_edges,
           jobs, lenient, fmt) -> None:
    """Run the period/free-period survey over a knot table."""
    primes = tuple(int(x) for x in p_list.split(",")) if p_list else ()
    free_primes = tuple(int(x) for x in free_p_list.split(",")) if free_p_list else ()
    cap = _cap(max_nodes, "KNOTCTL_MAX_NODES")
    if table_path is None:
        entries = [(e.name, " ".join(str(x) for x in e.dt)) for e in load_table()]
    else:
        entries = list(_ingest_table(table_path, table_format, lenient))
    jobs_list = [
        _CensusJob(ident, code, table_format, primes, free_primes, cap, max_edges)
        for ident, code in entries
    ]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_census_row, jobs_list))
    else:
        rows = [_census_row(j) for j in jobs_list]
    if fmt == "csv":
        click.echo("id,crossings,nodes,edges,periods,free_periods,status")
        for r in rows:
            if "error" in r:
                click.echo(f"{r['id']},,,,,,error:{r['error']}")
                continue
            ps = ";".join(str(x["p"]) for x in r["periods"])
            fps = ";".join(f"{x['p']}:{x['n']}" for x in r["free_periods"])
            click.echo(
                f"{r['id']},{r['crossings']},{r['nodes']},{r['edges']},"
                f"{ps},{fps},{r['status']}"
            )
    else:
        for r in rows:
            _emit(r)
    if any(r.get("status") == "truncated" for r in rows):
        sys.exit(EXIT_TRUNCATED)


if __name__ == "__main__":
    main()
