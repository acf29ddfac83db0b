# Copyright (c) 2025 CoReason, Inc.
#
# This software is proprietary and dual-licensed.
# Licensed under the Prosperity Public License 3.0 (the "License").
# A copy of the license is available at https://prosperitylicense.com/versions/3.0.0
# For details, see the LICENSE file.
# Commercial use beyond a 30-day trial requires a separate license.
#
# Source Code: https://github.com/CoReason-AI/coreason_hurwitz

import argparse
import functools
import math
import re
import sys
from collections.abc import Callable, Sequence
from fractions import Fraction
from pathlib import Path
from typing import Any, NoReturn

from loguru import logger
from pydantic import ValidationError

from coreason_hurwitz.arith.polynomial import (
    MultiPolynomial,
    format_rational,
    polynomial_to_json,
    quasipolynomial_to_json,
)
from coreason_hurwitz.belyi import (
    enumerate_fatgraphs,
    gw_eval,
    gw_quasipolynomial_row,
    lattice_quasipolynomial,
)
from coreason_hurwitz.config import settings
from coreason_hurwitz.exceptions import DomainError, HurwitzError, UnsupportedError
from coreason_hurwitz.intersection import (
    bracket_records,
    divide_by_variables,
    extract_brackets,
    q_polynomial,
    wk_intersection,
)
from coreason_hurwitz.oracle import count_cycle, count_orbifold, transposition_count
from coreason_hurwitz.pruning import ValueProvider, transform_belyi, transform_orbifold, transform_simple
from coreason_hurwitz.recursion import (
    PRUNED_CACHE,
    dump_cache,
    load_cache,
    oracle_unpruned_value,
    pruned_orbifold_quasipolynomial,
    pruned_orbifold_value,
    pruned_simple_polynomial,
    pruned_simple_value,
    unpruned_simple_value,
)
from coreason_hurwitz.reporting import Report, Row, render
from coreason_hurwitz.schemas import (
    BracketRecord,
    CheckStatus,
    Command,
    Family,
    FatgraphMode,
    OrbifoldIncidence,
    OrbifoldRecursion,
    OutputFormat,
    RunRequest,
    TableName,
    TransformDirection,
)
from coreason_hurwitz.tables import load_tables, q_table_polynomial
from coreason_hurwitz.verification import gw_closed_form, gw_row_points, recompute, run_suite

COMPATIBLE: dict[Command, set[Family]] = {
    Command.COMPUTE: set(Family),
    Command.POLY: {Family.PRUNED_SIMPLE, Family.PRUNED_ORBIFOLD, Family.PRUNED_BELYI, Family.GW},
    Command.TRANSFORM: {Family.SIMPLE, Family.ORBIFOLD, Family.BELYI},
}

ORBIFOLD_FAMILIES = {Family.ORBIFOLD, Family.PRUNED_ORBIFOLD}


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str) -> NoReturn:
        raise DomainError(f"{self.prog}: {message}")


def _int_tuple(text: str) -> tuple[int, ...]:
    """Parses '3,1,1' (or space separated) into a tuple of integers."""
    parts = [p for p in re.split(r"[,\s]+", text.strip()) if p]
    try:
        return tuple(int(p) for p in parts)
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}") from e


def _parse_args(argv: list[str] | None = None) -> argparse.Namespace:
    common = _ArgumentParser(add_help=False)
    common.add_argument("--family", choices=[f.value for f in Family])
    common.add_argument("--a", type=int, default=1)
    common.add_argument("--g", type=int)
    common.add_argument("--mu", type=_int_tuple)
    common.add_argument("--n", type=int)
    common.add_argument("--d", type=_int_tuple)
    common.add_argument("--direction", choices=[d.value for d in TransformDirection], default="pruned_to_full")
    common.add_argument("--which", choices=[t.value for t in TableName], default="khat")
    common.add_argument("--suite", default="all")
    common.add_argument("--extract", action="store_true")
    common.add_argument("--format", choices=[f.value for f in OutputFormat], default="json")
    common.add_argument("--cache", type=Path)
    common.add_argument("--verify-cache", action="store_true")
    common.add_argument("--budget", type=int)
    common.add_argument("--workers", type=int)
    common.add_argument("--log-level")
    common.add_argument("--recursion", choices=[r.value for r in OrbifoldRecursion])
    common.add_argument("--incidence", choices=[i.value for i in OrbifoldIncidence])

    parser = _ArgumentParser(prog="coreason-hurwitz", description="Exact Hurwitz number engine.")
    commands = parser.add_subparsers(dest="command", required=True)
    for command in Command:
        commands.add_parser(command.value, parents=[common])
    return parser.parse_args(argv)


def build_request(args: argparse.Namespace) -> RunRequest:
    try:
        return RunRequest(
            command=args.command,
            family=args.family,
            a=args.a,
            g=args.g,
            mu=args.mu,
            n=args.n,
            d=args.d,
            direction=args.direction,
            which=args.which,
            suite=args.suite,
            extract=args.extract,
            format=args.format,
            cache_path=args.cache,
            verify_cache=args.verify_cache,
            budget=args.budget,
            workers=args.workers,
            recursion=args.recursion,
            incidence=args.incidence,
        )
    except ValidationError as e:
        raise DomainError(f"Invalid request: {e.errors()[0]['msg']}") from e


def validate_request(request: RunRequest) -> None:
    """Family/command compatibility and required arguments, before any computation."""
    allowed = COMPATIBLE.get(request.command)
    if allowed is not None:
        if request.family is None:
            raise DomainError(f"{request.command.value} needs --family")
        if request.family not in allowed:
            raise UnsupportedError(f"Family {request.family.value} is not available for {request.command.value}")
    if request.a != 1 and request.family not in ORBIFOLD_FAMILIES:
        raise DomainError(f"--a applies only to orbifold families, got --a {request.a}")
    needed: list[str] = []
    if request.command in (Command.COMPUTE, Command.TRANSFORM):
        needed = ["g", "mu"]
    elif request.command == Command.POLY:
        needed = ["g", "n"]
    elif request.command == Command.INTERSECT:
        needed = ["g", "n"] if request.extract else ["g", "d"]
    missing = [name for name in needed if getattr(request, name) is None]
    if missing:
        raise DomainError(f"{request.command.value} needs {', '.join('--' + name for name in missing)}")


def _g(request: RunRequest) -> int:
    assert request.g is not None
    return request.g


def _mu(request: RunRequest) -> tuple[int, ...]:
    assert request.mu is not None
    return request.mu


def _n(request: RunRequest) -> int:
    assert request.n is not None
    return request.n


def _orbifold_source(request: RunRequest) -> ValueProvider:
    return functools.partial(
        pruned_orbifold_value,
        request.a,
        recursion=request.recursion,
        incidence=request.incidence,
        budget=request.budget,
    )


def _with_m(value: Fraction, m: int, count_key: str) -> Row:
    return {"value": format_rational(value), "m": str(m), count_key: format_rational(value * math.factorial(m))}


def _orbifold_full_value(request: RunRequest, g: int, mu: Sequence[int]) -> Fraction:
    """H^[a] straight from the oracle."""
    m = transposition_count(g, mu, request.a)
    count = count_orbifold(request.a, g, mu, pruned=False, budget=request.budget, workers=request.workers)
    return Fraction(count, math.factorial(m))


def _fatgraph_row(g: int, mu: tuple[int, ...], mode: FatgraphMode, budget: int | None) -> Row:
    result = enumerate_fatgraphs(g, mu, mode, budget)
    return {
        "value": format_rational(result.count),
        "prod_mu_value": format_rational(result.count * math.prod(mu)),
        "graphs": len(result.graphs),
    }


def handle_compute(request: RunRequest) -> Report:
    g, mu, family = _g(request), _mu(request), request.family
    row: Row
    if family == Family.SIMPLE:
        row = _with_m(unpruned_simple_value(g, mu), transposition_count(g, mu), "H")
    elif family == Family.PRUNED_SIMPLE:
        row = _with_m(pruned_simple_value(g, mu), transposition_count(g, mu), "K")
    elif family in ORBIFOLD_FAMILIES:
        if sum(mu) % request.a:
            row = {"value": "0"}
        elif family == Family.PRUNED_ORBIFOLD:
            row = _with_m(_orbifold_source(request)(g, mu), transposition_count(g, mu, request.a), "K")
        elif g == 0 and len(mu) == 1:
            row = _with_m(_orbifold_full_value(request, g, mu), transposition_count(g, mu, request.a), "H")
        else:
            value = transform_orbifold(request.a, TransformDirection.PRUNED_TO_FULL, g, mu, _orbifold_source(request))
            row = _with_m(value, transposition_count(g, mu, request.a), "H")
    elif family == Family.BELYI:
        row = _fatgraph_row(g, mu, FatgraphMode.ALL, request.budget)
    elif family == Family.PRUNED_BELYI:
        row = _fatgraph_row(g, mu, FatgraphMode.PRUNED, request.budget)
    elif family == Family.CYCLE:
        row = {"value": format_rational(count_cycle(g, mu, request.budget))}
    else:
        row = {"value": format_rational(gw_eval(g, mu))}
    return Report(command="compute", rows=[row], single=True)


def handle_poly(request: RunRequest) -> Report:
    g, n, family = _g(request), _n(request), request.family
    row: Row = {"family": family.value if family else "", "g": g, "n": n}
    if family == Family.PRUNED_SIMPLE:
        poly = pruned_simple_polynomial(g, n)
        row |= {"degree": poly.degree, "terms": polynomial_to_json(poly)}
    elif family == Family.PRUNED_ORBIFOLD:
        quasi = pruned_orbifold_quasipolynomial(
            request.a, g, n, recursion=request.recursion, incidence=request.incidence, budget=request.budget
        )
        row |= {"a": request.a, **quasipolynomial_to_json(quasi)}
    elif family == Family.PRUNED_BELYI:
        row |= quasipolynomial_to_json(lattice_quasipolynomial(g, n, budget=request.budget))
    else:
        row |= quasipolynomial_to_json(gw_quasipolynomial_row(g, n))
    return Report(command="poly", rows=[row], single=True)


def handle_transform(request: RunRequest) -> Report:
    g, mu, family, direction = _g(request), _mu(request), request.family, request.direction
    to_full = direction == TransformDirection.PRUNED_TO_FULL
    value: Fraction
    if family == Family.SIMPLE:

        def oracle(g_: int, mu_: Sequence[int]) -> Fraction:
            return oracle_unpruned_value(g_, mu_, request.budget)

        value = transform_simple(direction, g, mu, pruned_simple_value if to_full else oracle)
    elif family == Family.ORBIFOLD:
        full: ValueProvider = functools.partial(_orbifold_full_value, request)
        value = transform_orbifold(request.a, direction, g, mu, _orbifold_source(request) if to_full else full)
    else:
        mode = FatgraphMode.PRUNED if to_full else FatgraphMode.ALL

        def fatgraphs(g_: int, mu_: Sequence[int]) -> Fraction:
            return enumerate_fatgraphs(g_, mu_, mode, request.budget).count

        value = transform_belyi(direction, g, mu, fatgraphs)
    row = {"family": family.value if family else "", "direction": direction.value, "g": g, "mu": list(mu)}
    row["value"] = format_rational(value)
    return Report(command="transform", rows=[row], single=True)


def handle_intersect(request: RunRequest) -> Report:
    g = _g(request)
    if request.extract:
        n = _n(request)
        records = bracket_records(extract_brackets(g, n, pruned_simple_polynomial(g, n)))
        return Report(command="intersect", rows=[r.model_dump(by_alias=True) for r in records])
    assert request.d is not None
    record = BracketRecord(g=g, d=list(request.d), ell=0, value=format_rational(wk_intersection(g, request.d)))
    return Report(command="intersect", rows=[record.model_dump(by_alias=True)], single=True)


def handle_verify(request: RunRequest) -> Report:
    results = run_suite(request.suite, request.budget, request.workers)
    return Report(command="verify", rows=[r.model_dump(mode="json") for r in results])


def _side_by_side(printed: MultiPolynomial, recomputed: MultiPolynomial) -> dict[str, Any]:
    return {
        "printed": polynomial_to_json(printed),
        "recomputed": polynomial_to_json(recomputed),
        "match": printed == recomputed,
    }


def handle_table(request: RunRequest) -> Report:
    """Printed rows next to recomputed values. K rows are shown divided by mu_1 ... mu_n, as printed."""
    tables = load_tables()
    rows: list[Row] = []
    if request.which == TableName.KHAT:
        for khat in tables.khat:
            recomputed = divide_by_variables(pruned_simple_polynomial(khat.g, khat.n))
            rows.append({"g": khat.g, "n": khat.n, **_side_by_side(khat.polynomial(khat.n), recomputed)})
    elif request.which == TableName.Q:
        for q in tables.q:
            rows.append({"d": q.d, **_side_by_side(q_table_polynomial(q.d), q_polynomial(q.d))})
    else:
        for gw in tables.gw:
            points = gw_row_points(gw)
            printed = [gw.polynomial(gw.n).evaluate(point) for point in points]
            recomputed = [gw_closed_form(gw.g, point) for point in points]
            # N_{g,n} vanishes unless the odd count has the parity of n
            vanishing = not all(odd % 2 == gw.n % 2 for odd in gw.odd)
            rows.append(
                {
                    "g": gw.g,
                    "n": gw.n,
                    "odd": gw.odd,
                    "printed": polynomial_to_json(gw.polynomial(gw.n)),
                    "points": [list(point) for point in points],
                    "recomputed": [format_rational(value) for value in recomputed],
                    "match": printed == recomputed and (not vanishing or not any(printed)),
                }
            )
    return Report(command="table", rows=rows)


HANDLERS: dict[Command, Callable[[RunRequest], Report]] = {
    Command.COMPUTE: handle_compute,
    Command.POLY: handle_poly,
    Command.TRANSFORM: handle_transform,
    Command.INTERSECT: handle_intersect,
    Command.VERIFY: handle_verify,
    Command.TABLE: handle_table,
}


def run(request: RunRequest) -> tuple[int, str]:
    """
    Executes one request and returns (exit code, serialized report).
    Exit codes: 0 ok, 1 error or failed verification, 2 budget refusal.
    """
    path = request.cache_path or settings.CACHE_PATH
    try:
        validate_request(request)
        cache_report = None
        if path is not None:
            cache_report = load_cache(PRUNED_CACHE, path, recompute if request.verify_cache else None)
        report = HANDLERS[request.command](request)
        if path is not None:
            dump_cache(PRUNED_CACHE, path)
    except HurwitzError as e:
        logger.error(f"{type(e).__name__}: {e.message}")
        row = {"error": type(e).__name__, "message": e.message}
        error = Report(command=request.command.value, rows=[row], single=True)
        return e.exit_code, render(error, request.format)

    code = 0
    if request.command == Command.VERIFY and any(row["status"] == CheckStatus.FAIL.value for row in report.rows):
        code = 1
    if cache_report is not None and request.verify_cache:
        mismatches = len(cache_report.mismatches)
        report.rows.append({"cache": str(path), "checked": cache_report.checked, "mismatches": mismatches})
        report.single = False
        if mismatches:
            code = 1
    return code, render(report, request.format)


def configure_logging(level: str) -> None:
    """One stderr sink; reports go to stdout."""
    logger.remove()
    logger.add(sys.stderr, level=level.upper())


def main() -> None:
    """
    Main entry point for console scripts.
    Parses sys.argv, runs the request and exits with its status.
    """
    try:
        args = _parse_args(sys.argv[1:])
        request = build_request(args)
    except HurwitzError as e:
        print(f"Usage: coreason-hurwitz {{{'|'.join(c.value for c in Command)}}} [options]\n{e.message}")
        sys.exit(e.exit_code)
        return
    configure_logging(args.log_level or settings.LOG_LEVEL)
    code, output = run(request)
    print(output)
    sys.exit(code)


if __name__ == "__main__":  # pragma: no cover
    main()
