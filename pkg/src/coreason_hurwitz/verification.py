# Copyright (c) 2025 CoReason, Inc.
#
# This software is proprietary and dual-licensed.
# Licensed under the Prosperity Public License 3.0 (the "License").
# A copy of the license is available at https://prosperitylicense.com/versions/3.0.0
# For details, see the LICENSE file.
# Commercial use beyond a 30-day trial requires a separate license.
#
# Source Code: https://github.com/CoReason-AI/coreason_hurwitz

"""
Verification suites. Each suite cross-checks two independent computations and returns one
CheckResult per instance; instances the budget refuses are reported as skipped.
"""

import functools
import itertools
import math
import tempfile
from collections.abc import Callable, Iterator, Sequence
from fractions import Fraction
from pathlib import Path

from loguru import logger

from coreason_hurwitz.arith.numbers import double_factorial, eulerian, stirling2
from coreason_hurwitz.arith.polynomial import format_rational
from coreason_hurwitz.belyi import (
    compare_N_P,
    enumerate_fatgraphs,
    euler_characteristic,
    gw_eval,
    gw_quasipolynomial_row,
    gw_relations_check,
    harer_zagier_euler,
    lattice_count,
    satisfies_triangle,
)
from coreason_hurwitz.exceptions import BudgetExceededError, HurwitzError, UnsupportedError
from coreason_hurwitz.intersection import (
    BracketKey,
    dilaton_closure,
    extract_brackets,
    q_polynomial,
    q_recurrences_hold,
    string_closure,
    wk_intersection,
)
from coreason_hurwitz.oracle import count_orbifold, count_simple, hurwitz_genus_zero, transposition_count
from coreason_hurwitz.pruning import (
    enumerate_rooted_forests,
    forest_count_orbifold,
    forest_identity,
    rooted_forest_count,
    transform_belyi,
    transform_orbifold,
    transform_simple,
)
from coreason_hurwitz.recursion import (
    PRUNED_CACHE,
    dump_cache,
    load_cache,
    oracle_unpruned_value,
    pruned_orbifold_value,
    pruned_simple_polynomial,
    pruned_simple_value,
    unpruned_simple_value,
    verify_caj_simple,
)
from coreason_hurwitz.recursion.cache import HurwitzKey
from coreason_hurwitz.schemas import (
    CheckResult,
    CheckStatus,
    FatgraphMode,
    GwRelation,
    OrbifoldIncidence,
    OrbifoldRecursion,
    TransformDirection,
)
from coreason_hurwitz.tables import GwRow, khat_table_polynomial, load_tables, q_table_polynomial

Probe = Callable[[], tuple[bool, str]]

P2F = TransformDirection.PRUNED_TO_FULL
F2P = TransformDirection.FULL_TO_PRUNED


class SuiteRun:
    """Collects the results of one suite."""

    def __init__(self, suite: str) -> None:
        self.suite = suite
        self.results: list[CheckResult] = []

    def add(self, name: str, status: CheckStatus, detail: str = "") -> None:
        if status == CheckStatus.FAIL:
            logger.error(f"[{self.suite}] {name} failed: {detail}")
        elif status == CheckStatus.FINDING:
            logger.warning(f"[{self.suite}] finding at {name}: {detail}")
        self.results.append(CheckResult(suite=self.suite, name=name, status=status, detail=detail))

    def check(self, name: str, probe: Probe, miss: CheckStatus = CheckStatus.FAIL) -> None:
        try:
            ok, detail = probe()
        except BudgetExceededError as e:
            self.add(name, CheckStatus.SKIPPED, e.message)
            return
        self.add(name, CheckStatus.PASS if ok else miss, detail)


def equal(lhs: Fraction, rhs: Fraction) -> tuple[bool, str]:
    return lhs == rhs, f"{format_rational(lhs)} vs {format_rational(rhs)}"


def partitions(limit: int, smallest: int = 1) -> Iterator[tuple[int, ...]]:
    """Non-increasing positive tuples with sum <= limit."""

    def build(remaining: int, cap: int) -> Iterator[tuple[int, ...]]:
        for part in range(min(remaining, cap), smallest - 1, -1):
            yield (part,)
            for tail in build(remaining - part, part):
                yield (part,) + tail

    yield from build(limit, limit)


def _grid(limit: int, max_m: int, a: int = 1) -> Iterator[tuple[int, tuple[int, ...]]]:
    for mu in partitions(limit):
        if sum(mu) % a:
            continue
        for g in itertools.count():
            if 2 * g - 2 + len(mu) + sum(mu) // a > max_m:
                break
            yield g, mu


def _label(g: int, mu: Sequence[int]) -> str:
    return f"g={g} mu={tuple(mu)}"


def suite_oracle_vs_recursion(budget: int | None, workers: int | None) -> list[CheckResult]:
    run = SuiteRun("oracle-vs-recursion")
    for g, mu in _grid(5, 6):
        m = transposition_count(g, mu)

        def pruned(g: int = g, mu: tuple[int, ...] = mu, m: int = m) -> tuple[bool, str]:
            count = count_simple(g, mu, pruned=True, budget=budget, workers=workers)
            return equal(Fraction(count, math.factorial(m)), pruned_simple_value(g, mu))

        def full(g: int = g, mu: tuple[int, ...] = mu, m: int = m) -> tuple[bool, str]:
            count = count_simple(g, mu, pruned=False, budget=budget, workers=workers)
            return equal(Fraction(count, math.factorial(m)), unpruned_simple_value(g, mu))

        run.check(f"pruned {_label(g, mu)}", pruned)
        run.check(f"unpruned {_label(g, mu)}", full)
        if g == 0:
            run.check(
                f"genus-zero closed form mu={mu}",
                lambda mu=mu: equal(
                    Fraction(count_simple(0, mu, pruned=False, budget=budget, workers=workers)),
                    hurwitz_genus_zero(mu),
                ),
            )
    for total in range(2, 8):
        for mu1 in range(1, total):
            mu2 = total - mu1
            run.check(
                f"eulerian mu=({mu1}, {mu2})",
                lambda mu1=mu1, mu2=mu2: equal(
                    Fraction(count_simple(0, (mu1, mu2), pruned=True, budget=budget, workers=workers)),
                    Fraction(mu1 * mu2 * eulerian(mu1 + mu2 - 1, mu1 - 1)),
                ),
            )
    return run.results


def suite_khat_table(budget: int | None, workers: int | None) -> list[CheckResult]:
    run = SuiteRun("khat-table")
    for row in load_tables().khat:
        run.check(
            f"g={row.g} n={row.n}",
            lambda row=row: (
                pruned_simple_polynomial(row.g, row.n) == khat_table_polynomial(row.g, row.n),
                "coefficient-for-coefficient",
            ),
        )
    return run.results


def suite_caj(budget: int | None, workers: int | None) -> list[CheckResult]:
    run = SuiteRun("caj")
    # d <= 4 with m <= 8 keeps every oracle call under a few seconds
    for g, mu in _grid(4, 8):
        run.check(_label(g, mu), lambda g=g, mu=mu: (verify_caj_simple(g, mu, budget), "unpruned cut-and-join"))
    return run.results


def suite_pruning(budget: int | None, workers: int | None) -> list[CheckResult]:
    run = SuiteRun("pruning")
    for mu in range(1, 6):
        for nu in range(1, mu + 1):
            run.check(
                f"rooted forests mu={mu} nu={nu}",
                lambda mu=mu, nu=nu: equal(
                    Fraction(enumerate_rooted_forests(mu, nu, budget)), Fraction(rooted_forest_count(mu, nu))
                ),
            )
    for k in range(1, 10):
        for e in range(1, 11 - k):
            run.check(
                f"orbifold forests collapse k={k} e={e}",
                lambda k=k, e=e: equal(
                    Fraction(forest_count_orbifold(1, k, e)), Fraction(rooted_forest_count(k + e, k))
                ),
            )
    for g, mu in _grid(6, 8):
        if g == 0 and len(mu) == 1:
            continue
        run.check(
            f"round trip {_label(g, mu)}",
            lambda g=g, mu=mu: equal(transform_simple(F2P, g, mu, unpruned_simple_value), pruned_simple_value(g, mu)),
        )
    for g, mu in _grid(4, 6):
        if g == 0 and len(mu) == 1:
            continue
        run.check(
            f"oracle inverse {_label(g, mu)}",
            lambda g=g, mu=mu: equal(
                transform_simple(F2P, g, mu, lambda g_, mu_: oracle_unpruned_value(g_, mu_, budget)),
                pruned_simple_value(g, mu),
            ),
        )
    return run.results


def _orbifold_oracle(
    a: int,
    g: int,
    mu: tuple[int, ...],
    pruned: bool,
    incidence: OrbifoldIncidence,
    budget: int | None,
    workers: int | None,
) -> Fraction:
    count = count_orbifold(a, g, mu, pruned=pruned, budget=budget, incidence=incidence, workers=workers)
    return Fraction(count, math.factorial(transposition_count(g, mu, a)))


def suite_orbifold(budget: int | None, workers: int | None) -> list[CheckResult]:
    """a = 2 disagreements are findings: the oracle is authoritative. a = 1 must collapse exactly."""
    run = SuiteRun("orbifold")
    a = 2
    for g, mu in _grid(6, 5, a):
        for incidence, recursion in itertools.product(OrbifoldIncidence, OrbifoldRecursion):
            variant = f"{recursion.value}/{incidence.value}"
            recursive = functools.partial(
                pruned_orbifold_value, a, recursion=recursion, incidence=incidence, budget=budget
            )
            run.check(
                f"pruned a=2 {_label(g, mu)} {variant}",
                lambda g=g, mu=mu, inc=incidence, rec=recursive: equal(
                    _orbifold_oracle(a, g, mu, True, inc, budget, workers), rec(g, mu)
                ),
                miss=CheckStatus.FINDING,
            )
            if g == 0 and len(mu) == 1:
                continue
            run.check(
                f"unpruned a=2 {_label(g, mu)} {variant}",
                lambda g=g, mu=mu, inc=incidence, rec=recursive: equal(
                    _orbifold_oracle(a, g, mu, False, inc, budget, workers), transform_orbifold(a, P2F, g, mu, rec)
                ),
                miss=CheckStatus.FINDING,
            )
    for g, mu in _grid(4, 5):
        run.check(
            f"collapse a=1 {_label(g, mu)}",
            lambda g=g, mu=mu: equal(
                _orbifold_oracle(1, g, mu, True, OrbifoldIncidence.FACTOR, budget, workers),
                pruned_simple_value(g, mu),
            ),
        )
        run.check(
            f"recursion a=1 {_label(g, mu)}",
            lambda g=g, mu=mu: equal(pruned_orbifold_value(1, g, mu), pruned_simple_value(g, mu)),
        )
    return run.results


def _fatgraph_source(mode: FatgraphMode, budget: int | None) -> Callable[[int, Sequence[int]], Fraction]:
    def source(g: int, mu: Sequence[int]) -> Fraction:
        return enumerate_fatgraphs(g, mu, mode, budget).count

    return source


def suite_belyi(budget: int | None, workers: int | None) -> list[CheckResult]:
    run = SuiteRun("belyi")
    anchors = [
        (0, (2,), FatgraphMode.ALL, Fraction(1, 2)),
        (1, (2,), FatgraphMode.ALL, Fraction(0)),
        (1, (4,), FatgraphMode.ALL, Fraction(1, 4)),
        (1, (4,), FatgraphMode.PRUNED, Fraction(1, 4)),
    ]
    for g, mu, mode, expected in anchors:
        run.check(
            f"{mode.value} {_label(g, mu)}",
            lambda g=g, mu=mu, mode=mode, expected=expected: equal(
                enumerate_fatgraphs(g, mu, mode, budget).count, expected
            ),
        )
    shapes = [(1, (x,)) for x in range(1, 11)]
    shapes += [(0, mu) for mu in itertools.product(range(1, 9), repeat=3) if sum(mu) <= 10]
    for g, mu in shapes:
        run.check(
            f"lattice {_label(g, mu)}",
            lambda g=g, mu=mu: equal(
                lattice_count(g, mu, budget), enumerate_fatgraphs(g, mu, FatgraphMode.PRUNED, budget).count
            ),
        )
    stable = [(1, (x,)) for x in range(1, 9)] + [(0, mu) for mu in partitions(8) if len(mu) == 3]
    pruned_source = _fatgraph_source(FatgraphMode.PRUNED, budget)
    all_source = _fatgraph_source(FatgraphMode.ALL, budget)
    for g, mu in stable:
        run.check(
            f"transform {_label(g, mu)}",
            lambda g=g, mu=mu: equal(transform_belyi(P2F, g, mu, pruned_source), all_source(g, mu)),
        )
        run.check(
            f"inverse {_label(g, mu)}",
            lambda g=g, mu=mu: equal(transform_belyi(F2P, g, mu, all_source), pruned_source(g, mu)),
        )
    for g, n in [(0, 3), (1, 1), (0, 4)]:
        run.check(
            f"euler characteristic g={g} n={n}",
            lambda g=g, n=n: equal(
                euler_characteristic(g, n, held_out=3, budget=budget), harer_zagier_euler(g, n)
            ),
        )
    run.check("euler characteristic value g=1 n=1", lambda: equal(harer_zagier_euler(1, 1), Fraction(-1, 12)))
    return run.results


def suite_qd(budget: int | None, workers: int | None) -> list[CheckResult]:
    run = SuiteRun("qd")
    for d in range(6):
        run.check(f"table row d={d}", lambda d=d: (q_polynomial(d) == q_table_polynomial(d), "coefficientwise"))
        run.check(f"recurrences d={d}", lambda d=d: (q_recurrences_hold(d), "difference and summation"))
    for d in range(9):
        run.check(
            f"leading coefficient d={d}",
            lambda d=d: equal(q_polynomial(d).leading_term()[1], Fraction(1, double_factorial(2 * d))),
        )
        for nu in range(1, 13):
            run.check(
                f"stirling d={d} nu={nu}",
                lambda d=d, nu=nu: equal(q_polynomial(d).evaluate((nu,)), Fraction(stirling2(nu + d, nu))),
            )
    for d in range(5):
        for mu in range(1, 11):
            run.check(f"forest system d={d} mu={mu}", lambda d=d, mu=mu: equal(forest_identity(mu, d), Fraction(0)))
    return run.results


def suite_intersection(budget: int | None, workers: int | None) -> list[CheckResult]:
    run = SuiteRun("intersection")
    for g, n in [(0, 3), (0, 4), (0, 5), (1, 1), (1, 2), (2, 1)]:
        brackets = extract_brackets(g, n, pruned_simple_polynomial(g, n))
        for key, value in sorted(brackets.items()):
            if key.ell:
                continue
            run.check(f"<tau{key.d}>_{g}", lambda key=key, value=value: equal(value, wk_intersection(key.g, key.d)))
    run.check("<tau4>_2", lambda: equal(wk_intersection(2, (4,)), Fraction(1, 1152)))
    run.check(
        "<tau0 lambda1>_1",
        lambda: equal(
            extract_brackets(1, 1, pruned_simple_polynomial(1, 1)).get(BracketKey(1, (0,), 1), Fraction(0)),
            Fraction(1, 24),
        ),
    )
    for g in range(3):
        for n in range(1, 5):
            for d in itertools.product(range(3 * g + n), repeat=n):
                if sum(d) != 3 * g - 2 + n or list(d) != sorted(d, reverse=True):
                    continue
                if g == 0 and n < 3:
                    continue
                run.check(f"string g={g} d={d}", lambda g=g, d=d: (string_closure(g, d), "tau_0 removal"))
            for d in itertools.product(range(3 * g + n), repeat=n):
                if sum(d) != 3 * g - 3 + n or list(d) != sorted(d, reverse=True) or 2 * g - 2 + n <= 0:
                    continue
                run.check(f"dilaton g={g} d={d}", lambda g=g, d=d: (dilaton_closure(g, d), "tau_1 removal"))
    return run.results


def gw_row_points(row: GwRow, count: int = 5) -> list[tuple[int, ...]]:
    """The first `count` points of [1, 10]^n whose number of odd entries lies in `row.odd`."""
    points = (
        point
        for point in itertools.product(range(1, 11), repeat=row.n)
        if sum(part % 2 for part in point) in row.odd
    )
    return list(itertools.islice(points, count))


def gw_closed_form(g: int, mu: Sequence[int]) -> Fraction:
    """The Gromov-Witten table written out by hand, row by row."""
    odd = sum(part % 2 for part in mu)
    p2 = sum(part * part for part in mu)
    match (g, len(mu)):
        case (0, 3):
            return Fraction(odd % 2)
        case (1, 1):
            return Fraction(p2 - 3, 48) if odd else Fraction(0)
        case (0, 4):
            if odd in (0, 4):
                return Fraction(p2, 4)
            return Fraction(p2 - 2, 4) if odd == 2 else Fraction(0)
        case (1, 2):
            if odd == 0:
                return Fraction((p2 - 8) * p2, 384)
            return Fraction((p2 - 6) * (p2 - 2), 384) if odd == 2 else Fraction(0)
        case (2, 1):
            if not odd:
                return Fraction(0)
            return Fraction((p2 - 1) ** 2 * (5 * p2 * p2 - 186 * p2 + 1605), 8847360)
    raise UnsupportedError(f"No closed form for g={g} n={len(mu)}")


def suite_gw(budget: int | None, workers: int | None) -> list[CheckResult]:
    run = SuiteRun("gw")
    tables = load_tables()
    for row in tables.gw:
        quasi = gw_quasipolynomial_row(row.g, row.n)
        for point in gw_row_points(row):
            run.check(
                f"row g={row.g} odd={row.odd} mu={point}",
                lambda row=row, point=point, quasi=quasi: (
                    gw_eval(row.g, point) == gw_closed_form(row.g, point) == quasi.evaluate(point)
                    == row.polynomial(row.n).evaluate(point)
                    and (row.scale != "0" or gw_eval(row.g, point) == 0),
                    f"{format_rational(gw_eval(row.g, point))}",
                ),
            )
    for g, n in [(0, 3), (1, 1)]:
        for which in GwRelation:
            for mu in itertools.product(range(1, 9), repeat=n):
                if sum(mu) > 8:
                    continue
                run.add(f"{which.value} g={g} mu={mu}", gw_relations_check(g, mu, which))
    for mu in itertools.product(range(1, 8), repeat=3):
        if list(mu) != sorted(mu, reverse=True) or sum(mu) % 2 == 0 or not satisfies_triangle(mu):
            continue
        run.check(f"N=P mu={mu}", lambda mu=mu: (compare_N_P(mu, budget), "triangle triple"))
    for d in (2, 3):
        mu = (2 * d - 1, 1, 1)
        run.check(f"N!=P mu={mu}", lambda mu=mu: (not compare_N_P(mu, budget), "outside the triangle"))
    return run.results


def suite_properties(budget: int | None, workers: int | None) -> list[CheckResult]:
    run = SuiteRun("properties")
    for g, n in [(0, 4), (1, 2), (0, 5)]:
        run.check(f"symmetric K g={g} n={n}", lambda g=g, n=n: (pruned_simple_polynomial(g, n).is_symmetric(), "K"))
    for mu in [(2, 4, 6), (1, 2, 3), (1, 1, 4)]:
        values = {lattice_count(0, perm, budget) for perm in itertools.permutations(mu)}
        run.add(f"symmetric N mu={mu}", CheckStatus.PASS if len(values) == 1 else CheckStatus.FAIL, str(len(values)))
    for g, mu in [(0, (3, 2, 1)), (1, (2, 2)), (2, (1,))]:
        run.check(
            f"round trip {_label(g, mu)}",
            lambda g=g, mu=mu: equal(transform_simple(F2P, g, mu, unpruned_simple_value), pruned_simple_value(g, mu)),
        )
    first = pruned_simple_polynomial(0, 4)
    run.check("deterministic polynomial", lambda: (repr(first) == repr(pruned_simple_polynomial(0, 4)), "repr"))
    return run.results


def recompute(key: HurwitzKey) -> Fraction:
    """Fresh value for a cache key, bypassing any file record."""
    if key.variant == "pruned-simple":
        return pruned_simple_value(key.g, key.mu)
    if key.variant.startswith("pruned-orbifold"):
        parts = key.variant.split(":")
        recursion = OrbifoldRecursion(parts[1]) if len(parts) == 3 else OrbifoldRecursion.PRINTED
        incidence = OrbifoldIncidence(parts[2]) if len(parts) == 3 else OrbifoldIncidence.FACTOR
        return pruned_orbifold_value(key.a, key.g, key.mu, recursion, incidence)
    raise UnsupportedError(f"Unknown cache variant {key.variant!r}")


def suite_cache(budget: int | None, workers: int | None) -> list[CheckResult]:
    run = SuiteRun("cache")
    with tempfile.TemporaryDirectory() as tmp:
        path = Path(tmp) / "memo.jsonl"
        pruned_simple_value(2, (2, 1))
        pruned_orbifold_value(2, 0, (2, 2, 2))
        written = dump_cache(PRUNED_CACHE, path)
        PRUNED_CACHE.clear()
        report = load_cache(PRUNED_CACHE, path, recompute)
        run.add(
            "round trip",
            CheckStatus.PASS if report.loaded == written and not report.mismatches else CheckStatus.FAIL,
            f"{report.loaded} records, {len(report.mismatches)} mismatches",
        )
    return run.results


SUITES: dict[str, Callable[[int | None, int | None], list[CheckResult]]] = {
    "oracle-vs-recursion": suite_oracle_vs_recursion,
    "khat-table": suite_khat_table,
    "caj": suite_caj,
    "pruning": suite_pruning,
    "orbifold": suite_orbifold,
    "belyi": suite_belyi,
    "qd": suite_qd,
    "intersection": suite_intersection,
    "gw": suite_gw,
    "properties": suite_properties,
    "cache": suite_cache,
}


def run_suite(name: str, budget: int | None = None, workers: int | None = None) -> list[CheckResult]:
    """Runs one suite, or every suite for `all`."""
    if name == "all":
        names = list(SUITES)
    elif name in SUITES:
        names = [name]
    else:
        raise UnsupportedError(f"Unknown suite {name!r}; choose from all, {', '.join(SUITES)}")
    results: list[CheckResult] = []
    for suite in names:
        try:
            outcome = SUITES[suite](budget, workers)
        except HurwitzError as e:
            outcome = [CheckResult(suite=suite, name="suite", status=CheckStatus.FAIL, detail=e.message)]
            logger.error(f"Suite {suite} aborted: {e.message}")
        counts = {status: sum(r.status == status for r in outcome) for status in CheckStatus}
        logger.info(
            f"Suite {suite}: {counts[CheckStatus.PASS]} passed, {counts[CheckStatus.FAIL]} failed, "
            f"{counts[CheckStatus.SKIPPED]} skipped, {counts[CheckStatus.FINDING]} findings"
        )
        results.extend(outcome)
    return results
