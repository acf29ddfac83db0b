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
Brute-force oracles: transitive factorizations in the symmetric group.

Counts are taken for one fixed representative T of the labeled cycle type mu. The search is
depth-first over transposition tuples and keeps, instead of the partial product, the
permutation Q that the remaining factors still have to multiply to. A branch is dropped as
soon as one of the following can no longer be met with r factors left:

* transposition distance: |Q| = d - cycles(Q) <= r with matching parity;
* transitivity: components - 1 <= r;
* pruned incidence: every colour needs two appearances, one factor supplies at most two.
"""

import itertools
import math
from collections.abc import Iterator, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from loguru import logger
from pydantic import BaseModel, ConfigDict

from coreason_hurwitz.budget import check_budget_guardrail
from coreason_hurwitz.config import settings
from coreason_hurwitz.exceptions import DomainError
from coreason_hurwitz.oracle.permutation import Permutation, representative
from coreason_hurwitz.oracle.union_find import transitive
from coreason_hurwitz.schemas import FactorizationVariant, OrbifoldIncidence


class FactorizationProblem(BaseModel):
    """A counting problem together with its derived degree and transposition count."""

    variant: FactorizationVariant
    a: int = 1
    g: int
    mu: tuple[int, ...]

    model_config = ConfigDict(frozen=True)

    @property
    def n(self) -> int:
        return len(self.mu)

    @property
    def degree(self) -> Fraction:
        """|mu| for the Hurwitz variants, (sum(mu_i - 1) + 2 - 2g)/2 for cycle numbers."""
        if self.variant == FactorizationVariant.CYCLE:
            return Fraction(sum(part - 1 for part in self.mu) + 2 - 2 * self.g, 2)
        return Fraction(sum(self.mu))

    @property
    def transposition_count(self) -> Fraction:
        """m = 2g - 2 + n + |mu|/a."""
        return Fraction(2 * self.g - 2 + self.n) + Fraction(sum(self.mu), self.a)


def transposition_count(g: int, mu: Sequence[int], a: int = 1) -> int:
    """m(g, mu) for a valid problem; raises DomainError when it is not a non-negative integer."""
    m = Fraction(2 * g - 2 + len(mu)) + Fraction(sum(mu), a)
    if m.denominator != 1 or m < 0:
        raise DomainError(f"m = {m} is not a non-negative integer for g={g}, mu={tuple(mu)}, a={a}")
    return int(m)


def _validate(g: int, mu: Sequence[int]) -> tuple[int, ...]:
    if g < 0:
        raise DomainError(f"Genus must be non-negative, got {g}")
    mu = tuple(mu)
    if not mu or any(part < 1 for part in mu):
        raise DomainError(f"mu must be a non-empty tuple of positive integers, got {mu}")
    return mu


@dataclass(frozen=True)
class SearchSpec:
    """Everything a worker needs to run one transposition search."""

    degree: int
    steps: int
    target: tuple[int, ...]
    colour: tuple[int, ...]
    colours: int
    initial_blocks: tuple[tuple[int, ...], ...]
    pruned: bool
    loops_count_twice: bool


def _pairs(degree: int) -> list[tuple[int, int]]:
    return list(itertools.combinations(range(degree), 2))


def _cycle_labels(images: list[int]) -> tuple[list[int], int]:
    label = [-1] * len(images)
    count = 0
    for start in range(len(images)):
        if label[start] >= 0:
            continue
        x = start
        while label[x] < 0:
            label[x] = count
            x = images[x]
        count += 1
    return label, count


class _TranspositionSearch:
    def __init__(self, spec: SearchSpec) -> None:
        self.spec = spec
        self.pairs = _pairs(spec.degree)
        self.q = list(spec.target)
        self.comp = list(range(spec.degree))
        for block in spec.initial_blocks:
            for x in block:
                self.comp[x] = block[0]
        self.ncomp = len(set(self.comp))
        self.counts = [0] * spec.colours
        self.deficit = 2 * spec.colours if spec.pruned else 0

    def feasible_at_root(self) -> bool:
        _, cycles = _cycle_labels(self.q)
        distance = self.spec.degree - cycles
        r = self.spec.steps
        return distance <= r and (r - distance) % 2 == 0 and self.ncomp - 1 <= r and self.deficit <= 2 * r

    def run(self, first: Sequence[int] | None = None) -> int:
        if not self.feasible_at_root():
            return 0
        return self._descend(self.spec.steps, first)

    def _apply(self, i: int, j: int) -> tuple[list[int], int, int]:
        # Q <- (i j) Q : swap the values i and j in the image table
        q = self.q
        for x in range(len(q)):
            if q[x] == i:
                q[x] = j
            elif q[x] == j:
                q[x] = i
        saved_comp = self.comp[:]
        saved_ncomp = self.ncomp
        ci, cj = self.comp[i], self.comp[j]
        if ci != cj:
            self.comp = [ci if c == cj else c for c in self.comp]
            self.ncomp -= 1
        saved_deficit = self.deficit
        if self.spec.pruned:
            for c in self._touched(i, j):
                if self.counts[c] < 2:
                    self.deficit -= 1
                self.counts[c] += 1
        return saved_comp, saved_ncomp, saved_deficit

    def _undo(self, i: int, j: int, saved: tuple[list[int], int, int]) -> None:
        q = self.q
        for x in range(len(q)):
            if q[x] == i:
                q[x] = j
            elif q[x] == j:
                q[x] = i
        self.comp, self.ncomp, self.deficit = saved
        if self.spec.pruned:
            for c in self._touched(i, j):
                self.counts[c] -= 1

    def _touched(self, i: int, j: int) -> tuple[int, ...]:
        ci, cj = self.spec.colour[i], self.spec.colour[j]
        if ci != cj or self.spec.loops_count_twice:
            return (ci, cj)
        return (ci,)

    def _descend(self, remaining: int, first: Sequence[int] | None = None) -> int:
        if remaining == 0:
            return 1
        labels, cycles = _cycle_labels(self.q)
        after = remaining - 1
        total = 0
        candidates = range(len(self.pairs)) if first is None else first
        for index in candidates:
            i, j = self.pairs[index]
            new_cycles = cycles + 1 if labels[i] == labels[j] else cycles - 1
            if self.spec.degree - new_cycles > after:
                continue
            saved = self._apply(i, j)
            if self.ncomp - 1 <= after and self.deficit <= 2 * after:
                total += self._descend(after)
            self._undo(i, j, saved)
        return total


def _search_branch(spec: SearchSpec, first: int) -> int:
    return _TranspositionSearch(spec).run([first])


def _run_search(spec: SearchSpec, workers: int) -> int:
    if spec.steps == 0 or workers <= 1:
        return _TranspositionSearch(spec).run()
    branches = range(len(_pairs(spec.degree)))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return sum(pool.map(_search_branch, itertools.repeat(spec), branches))


def _resolve_workers(workers: int | None) -> int:
    return settings.WORKERS if workers is None else workers


def count_simple(
    g: int,
    mu: Sequence[int],
    pruned: bool,
    budget: int | None = None,
    target: Permutation | None = None,
    workers: int | None = None,
) -> int:
    """
    Number of transitive factorizations T = s_1 ... s_m into m = 2g-2+n+|mu| transpositions.
    With pruned=True every element must be moved by at least two of the factors.
    `target` replaces the default representative; it must have cycle type mu.
    """
    mu = _validate(g, mu)
    d = sum(mu)
    m = transposition_count(g, mu)
    if target is None:
        target = representative(mu)
    elif target.degree != d or target.cycle_type() != tuple(sorted(mu, reverse=True)):
        raise DomainError(f"Target {target} does not have cycle type {mu}")
    check_budget_guardrail(math.comb(d, 2) ** m, budget, f"count_simple(g={g}, mu={mu})")
    spec = SearchSpec(
        degree=d,
        steps=m,
        target=target.images,
        colour=tuple(range(d)),
        colours=d,
        initial_blocks=(),
        pruned=pruned,
        loops_count_twice=False,
    )
    count = _run_search(spec, _resolve_workers(workers))
    logger.debug(f"count_simple(g={g}, mu={mu}, pruned={pruned}) = {count}")
    return count


def power_class(a: int, degree: int) -> Iterator[Permutation]:
    """Every permutation of {0..degree-1} whose cycles all have length a."""
    if degree % a:
        return

    def build(remaining: tuple[int, ...]) -> Iterator[list[tuple[int, ...]]]:
        if not remaining:
            yield []
            return
        head, rest = remaining[0], remaining[1:]
        for others in itertools.permutations(rest, a - 1):
            cycle = (head,) + others
            left = tuple(x for x in rest if x not in others)
            for tail in build(left):
                yield [cycle] + tail

    for cycles in build(tuple(range(degree))):
        yield Permutation.from_cycles(cycles, degree)


def power_class_size(a: int, degree: int) -> int:
    if degree % a:
        return 0
    k = degree // a
    return math.factorial(degree) // (a**k * math.factorial(k))


def count_orbifold(
    a: int,
    g: int,
    mu: Sequence[int],
    pruned: bool,
    budget: int | None = None,
    incidence: OrbifoldIncidence | None = None,
    workers: int | None = None,
) -> int:
    """
    Number of transitive factorizations s_0 s_1 ... s_m = T with s_0 of shape (a, ..., a) and
    m = 2g-2+n+|mu|/a transpositions. The colours are the cycles of s_0; with pruned=True each
    colour must appear in at least two transposition factors. Under the default `factor`
    incidence a factor moving two members of one colour counts once, under `degree` twice.
    """
    if a < 1:
        raise DomainError(f"a must be positive, got {a}")
    mu = _validate(g, mu)
    d = sum(mu)
    if d % a:
        return 0
    m = transposition_count(g, mu, a)
    if incidence is None:
        incidence = OrbifoldIncidence(settings.ORBIFOLD_INCIDENCE)
    check_budget_guardrail(
        power_class_size(a, d) * math.comb(d, 2) ** m, budget, f"count_orbifold(a={a}, g={g}, mu={mu})"
    )
    target = representative(mu)
    resolved_workers = _resolve_workers(workers)
    total = 0
    for sigma0 in power_class(a, d):
        colour = [0] * d
        blocks = sigma0.cycles()
        for index, block in enumerate(blocks):
            for x in block:
                colour[x] = index
        spec = SearchSpec(
            degree=d,
            steps=m,
            target=(sigma0.inverse() * target).images,
            colour=tuple(colour),
            colours=len(blocks),
            initial_blocks=tuple(blocks),
            pruned=pruned,
            loops_count_twice=incidence == OrbifoldIncidence.DEGREE,
        )
        total += _run_search(spec, resolved_workers)
    logger.debug(f"count_orbifold(a={a}, g={g}, mu={mu}, pruned={pruned}, {incidence.value}) = {total}")
    return total


def cycle_class(k: int, degree: int) -> Iterator[Permutation]:
    """Every permutation of cycle type (k, 1, ..., 1)."""
    if k == 1:
        yield Permutation.identity(degree)
        return
    for subset in itertools.combinations(range(degree), k):
        head, rest = subset[0], subset[1:]
        for order in itertools.permutations(rest):
            yield Permutation.from_cycles([(head,) + order], degree)


def cycle_class_size(k: int, degree: int) -> int:
    if k == 1:
        return 1
    if k > degree:
        return 0
    return math.factorial(degree) // (k * math.factorial(degree - k))


def count_cycle(g: int, mu: Sequence[int], budget: int | None = None) -> Fraction:
    """
    P_{g,n}(mu): tuples (s_1, ..., s_n) with s_i of cycle type (mu_i, 1, ..., 1), product 1 and
    transitive, divided by d!. A factor with mu_i = 1 is the identity with a marked point, so it
    contributes d choices.
    """
    mu = _validate(g, mu)
    d_frac = FactorizationProblem(variant=FactorizationVariant.CYCLE, g=g, mu=mu).degree
    if d_frac.denominator != 1 or d_frac < 1:
        return Fraction(0)
    d = int(d_frac)
    if any(part > d for part in mu):
        return Fraction(0)
    n = len(mu)
    check_budget_guardrail(
        math.prod(cycle_class_size(k, d) for k in mu[1:-1]), budget, f"count_cycle(g={g}, mu={mu})"
    )
    # Conjugation acts transitively on the class of s_1, so fix it and scale by the class size.
    first = Permutation.from_cycles([tuple(range(mu[0]))], d)
    wanted = tuple(sorted((mu[-1],) + (1,) * (d - mu[-1]), reverse=True))
    count = 0
    if n == 1:
        count = 1 if first == Permutation.identity(d) and d == 1 else 0
    else:
        middle = [list(cycle_class(k, d)) for k in mu[1:-1]]
        for choice in itertools.product(*middle):
            partial = first
            for sigma in choice:
                partial = partial * sigma
            last = partial.inverse()
            if last.cycle_type() != wanted:
                continue
            if transitive((first, *choice, last), d):
                count += 1
    labeled = count * cycle_class_size(mu[0], d) * d ** sum(1 for part in mu if part == 1)
    logger.debug(f"count_cycle(g={g}, mu={mu}) labeled tuples = {labeled}, d = {d}")
    return Fraction(labeled, math.factorial(d))


def hurwitz_genus_zero(mu: Sequence[int]) -> Fraction:
    """Closed form of the genus-zero factorization count: (|mu|+n-2)! |mu|^(n-3) prod mu_i^(mu_i+1)/mu_i!."""
    mu = _validate(0, mu)
    d, n = sum(mu), len(mu)
    value = Fraction(math.factorial(d + n - 2)) * Fraction(d) ** (n - 3)
    for part in mu:
        value *= Fraction(part ** (part + 1), math.factorial(part))
    return value
