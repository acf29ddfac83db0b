# Copyright (c) 2025 CoReason, Inc.
#
# This software is proprietary and dual-licensed.
# Licensed under the Prosperity Public License 3.0 (the "License").
# A copy of the license is available at https://prosperitylicense.com/versions/3.0.0
# For details, see the LICENSE file.
# Commercial use beyond a 30-day trial requires a separate license.
#
# Source Code: https://github.com/CoReason-AI/coreason_hurwitz

from fractions import Fraction

import pytest

from coreason_hurwitz.exceptions import BudgetExceededError, DomainError
from coreason_hurwitz.oracle import (
    FactorizationProblem,
    Permutation,
    UnionFind,
    count_cycle,
    count_orbifold,
    count_simple,
    find_orbits,
    hurwitz_genus_zero,
    orbits,
    representative,
    transitive,
    transposition_count,
)
from coreason_hurwitz.schemas import FactorizationVariant, OrbifoldIncidence


def test_permutation_composition_follows_maps() -> None:
    """(p * q)(x) = p(q(x))."""
    p = Permutation.transposition(0, 1, 3)
    q = Permutation.transposition(1, 2, 3)
    product = p * q
    assert product.images == (1, 2, 0)
    assert product.cycle_type() == (3,)
    assert product * product.inverse() == Permutation.identity(3)


def test_permutation_inspection() -> None:
    perm = Permutation.from_cycles([(0, 2)], 4)
    assert perm.cycles() == [(0, 2), (1,), (3,)]
    assert perm.num_cycles() == 3
    assert perm.is_involution()
    assert perm.fixed_points() == [1, 3]
    assert perm.support() == {0, 2}
    assert repr(perm) == "Permutation((0 2), degree=4)"
    assert repr(Permutation.identity(2)) == "Permutation(id, degree=2)"


def test_permutation_conjugate_keeps_cycle_type() -> None:
    perm = Permutation.from_cycles([(0, 1, 2)], 4)
    by = Permutation.transposition(2, 3, 4)
    assert perm.conjugate(by).cycle_type() == (3, 1)


def test_permutation_validation() -> None:
    with pytest.raises(DomainError, match="not a bijection"):
        Permutation((0, 0))
    with pytest.raises(DomainError, match="different degrees"):
        Permutation.identity(2) * Permutation.identity(3)
    with pytest.raises(DomainError, match="positive"):
        representative((2, 0))


def test_representative_blocks() -> None:
    assert representative((2, 1)).images == (1, 0, 2)
    assert representative((1, 3)).cycle_type() == (3, 1)


def test_orbits_and_union_find() -> None:
    gens = [Permutation.transposition(0, 1, 4), Permutation.transposition(2, 3, 4)]
    assert sorted(map(sorted, orbits(gens, 4))) == [[0, 1], [2, 3]]
    assert sorted(map(sorted, find_orbits(gens, 4))) == [[0, 1], [2, 3]]
    assert not transitive(gens, 4)
    assert transitive(gens + [Permutation.transposition(1, 2, 4)], 4)
    assert transitive([], 0)

    uf = UnionFind(3)
    assert uf.union(0, 1)
    assert not uf.union(1, 0)
    assert len(uf) == 2
    assert sorted(map(sorted, uf)) == [[0, 1], [2]]


def test_transposition_count() -> None:
    assert transposition_count(1, (2,)) == 3
    assert transposition_count(0, (2, 1)) == 3
    assert transposition_count(0, (2,), a=2) == 0
    with pytest.raises(DomainError, match="not a non-negative integer"):
        transposition_count(0, (1,), a=2)


def test_problem_model() -> None:
    problem = FactorizationProblem(variant=FactorizationVariant.SIMPLE, g=1, mu=(2, 1))
    assert problem.n == 2
    assert problem.degree == 3
    assert problem.transposition_count == 5
    cycle = FactorizationProblem(variant=FactorizationVariant.CYCLE, g=0, mu=(3, 3, 1))
    assert cycle.degree == 3


@pytest.mark.parametrize(
    "g, mu, expected",
    [
        (0, (1,), 1),
        (0, (2,), 1),
        (0, (1, 1), 1),
        (0, (2, 1), 8),
        (0, (1, 1, 1), 24),
        (1, (2,), 1),
    ],
)
def test_count_simple_small(g: int, mu: tuple[int, ...], expected: int) -> None:
    assert count_simple(g, mu, pruned=False) == expected


def test_count_simple_pruned() -> None:
    """Pruning removes leaves; three parts of size one are already pruned in genus zero."""
    assert count_simple(0, (1,), pruned=True) == 0
    assert count_simple(0, (1, 1), pruned=True) == 1
    assert count_simple(0, (1, 1, 1), pruned=True) == 24
    assert count_simple(1, (2,), pruned=True) == 1


def test_count_simple_matches_genus_zero_formula() -> None:
    for mu in [(1,), (2,), (3,), (2, 1), (1, 1, 1), (2, 2), (3, 1)]:
        assert count_simple(0, mu, pruned=False) == hurwitz_genus_zero(mu)


def test_count_simple_target_and_validation() -> None:
    target = Permutation.from_cycles([(1, 2)], 3)
    assert count_simple(0, (2, 1), pruned=False, target=target) == 8
    with pytest.raises(DomainError, match="does not have cycle type"):
        count_simple(0, (2, 1), pruned=False, target=Permutation.identity(3))
    with pytest.raises(DomainError, match="Genus"):
        count_simple(-1, (1,), pruned=False)
    with pytest.raises(DomainError, match="non-empty"):
        count_simple(0, (), pruned=False)


def test_count_simple_budget() -> None:
    with pytest.raises(BudgetExceededError):
        count_simple(0, (2, 1), pruned=False, budget=1)


def test_count_simple_workers() -> None:
    """The first factor is fanned out to worker processes."""
    assert count_simple(0, (2, 1), pruned=False, workers=2) == 8


def test_count_orbifold_collapses_to_simple() -> None:
    assert count_orbifold(1, 0, (1, 1, 1), pruned=True) == 24
    assert count_orbifold(1, 0, (2, 1), pruned=False) == 8
    assert count_orbifold(1, 1, (2,), pruned=True, incidence=OrbifoldIncidence.DEGREE) == 1


def test_count_orbifold_small_cases() -> None:
    assert count_orbifold(2, 0, (1,), pruned=False) == 0
    assert count_orbifold(2, 0, (2,), pruned=False) == 1
    assert count_orbifold(2, 0, (2,), pruned=True) == 0
    with pytest.raises(DomainError, match="a must be positive"):
        count_orbifold(0, 0, (1,), pruned=False)


def test_count_cycle() -> None:
    assert count_cycle(0, (2, 2)) == Fraction(1, 2)
    assert count_cycle(0, (1,)) == 1
    assert count_cycle(0, (3, 3, 1)) == 1
    assert count_cycle(0, (2,)) == 0
    assert count_cycle(0, (3,)) == 0
    with pytest.raises(BudgetExceededError):
        count_cycle(0, (3, 3, 1), budget=0)


@pytest.mark.parametrize("d", [1, 2, 3, pytest.param(4, marks=pytest.mark.slow)])
def test_count_cycle_two_equal_parts_and_one(d: int) -> None:
    assert count_cycle(0, (d, d, 1)) == 1


def test_hurwitz_genus_zero() -> None:
    assert hurwitz_genus_zero((2,)) == 1
    assert hurwitz_genus_zero((2, 1)) == 8
    assert hurwitz_genus_zero((1, 1, 1)) == 24
