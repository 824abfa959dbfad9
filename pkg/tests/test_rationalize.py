from fractions import Fraction
from random import Random

import pytest

from ranklens import (
    CycleWitness,
    NotLaminar,
    NotRationalizable,
    StrategyProfile,
    SubgameNotFull,
    UniquenessViolated,
    full_subgame,
    game_rank,
    is_rationalizable,
    rationalize_auto,
    rationalize_bounded_rank,
    rationalize_general,
    rationalize_rank_one,
    rationalize_zero_sum,
    rationalizes,
    strict_equilibria,
    sylvester_hadamard,
    two_regular_dataset,
    validate_dataset,
)
from .generators import random_laminar_unique_dataset, random_uniqueness_dataset


def P(r, c):
    return StrategyProfile(r, c)


def F(rows):
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


# A row cycle spread across two crossing subgames; uniqueness holds because
# neither subgame contains the other.
CONTRADICTORY_CROSSING = [
    ((1, 1), (1, 2), (1, 2)),
    ((2, 1), (1, 2), (1, 3)),
]


class TestRankOne:
    def test_diagonal_choices(self, diag_dataset, known_rank_one_game):
        cert = rationalize_rank_one(diag_dataset)
        assert cert.game == known_rank_one_game
        assert cert.method == "rank_one"
        assert cert.rank == 1
        assert cert.rank_bound == 1
        assert cert.uniqueness_guarantee
        assert all(ok for _, ok in cert.per_observation)

    def test_antidiagonal_choices(self):
        ds = validate_dataset([((1, 2), (1, 2), (1, 2)), ((2, 1), (1, 2), (1, 2))], 2)
        cert = rationalize_rank_one(ds)
        assert cert.game.a == F([[7, 2], [8, 1]])
        assert cert.game.b == F([[1, 2], [8, 7]])
        assert cert.rank == 1

    def test_equilibria_are_exactly_the_choices(self):
        rng = Random(43)
        for _ in range(25):
            n = rng.randint(1, 6)
            rows = rng.sample(range(1, n + 1), rng.randint(0, n))
            cols = rng.sample(range(1, n + 1), len(rows))
            ds = validate_dataset(
                [((r, c), tuple(range(1, n + 1)), tuple(range(1, n + 1))) for r, c in zip(rows, cols)],
                n,
            )
            cert = rationalize_rank_one(ds)
            if n == 1 and not ds.observations:
                # a 1x1 game has no deviations, so its only profile is a
                # strict equilibrium no matter the payoffs
                assert strict_equilibria(cert.game, full_subgame(1)) == {P(1, 1)}
            else:
                assert strict_equilibria(cert.game, full_subgame(n)) == frozenset(ds.choices())
            assert game_rank(cert.game) == 1

    def test_empty_dataset(self):
        ds = validate_dataset([], 2)
        cert = rationalize_rank_one(ds)
        assert strict_equilibria(cert.game, full_subgame(2)) == frozenset()
        assert cert.rank == 1

    def test_requires_full_subgames(self, nested_dataset):
        with pytest.raises(SubgameNotFull):
            rationalize_rank_one(nested_dataset)

    def test_shared_row_is_not_rationalizable(self):
        ds = validate_dataset([((1, 1), (1, 2), (1, 2)), ((1, 2), (1, 2), (1, 2))], 2)
        with pytest.raises(NotRationalizable) as exc:
            rationalize_rank_one(ds)
        assert exc.value.witness == CycleWitness("column", (P(1, 1), P(1, 2)))

    def test_shared_column_is_not_rationalizable(self):
        ds = validate_dataset([((1, 1), (1, 2), (1, 2)), ((2, 1), (1, 2), (1, 2))], 2)
        with pytest.raises(NotRationalizable) as exc:
            rationalize_rank_one(ds)
        assert exc.value.witness == CycleWitness("row", (P(1, 1), P(2, 1)))


class TestZeroSum:
    def test_nested(self, nested_dataset):
        cert = rationalize_zero_sum(nested_dataset)
        assert cert.method == "zero_sum"
        assert cert.rank == 0
        assert cert.rank_bound == 0
        assert cert.uniqueness_guarantee
        assert cert.game.a == F([[2, 3], [1, 1]])
        assert cert.game.is_zero_sum

    def test_duplicate_nested_choice_is_deduped(self):
        ds = validate_dataset([((2, 2), (1, 2), (1, 2)), ((2, 2), (2,), (2,))], 2)
        cert = rationalize_zero_sum(ds)
        assert rationalizes(cert.game, ds).ok
        assert len(cert.per_observation) == 2

    def test_preconditions(self, diag_dataset, crossing_strips_dataset):
        with pytest.raises(NotLaminar):
            rationalize_zero_sum(crossing_strips_dataset)
        with pytest.raises(UniquenessViolated):
            rationalize_zero_sum(diag_dataset)

    def test_random_datasets(self):
        rng = Random(47)
        for _ in range(30):
            ds = random_laminar_unique_dataset(rng, rng.randint(1, 7))
            cert = rationalize_zero_sum(ds)
            assert cert.rank == 0
            assert rationalizes(cert.game, ds).ok
            for obs in ds.observations:
                assert strict_equilibria(cert.game, obs.subgame) == {obs.choice}


class TestBoundedRank:
    def test_crossing_strips(self, crossing_strips_dataset):
        cert = rationalize_bounded_rank(crossing_strips_dataset)
        assert cert.method == "bounded_rank"
        assert cert.game.a == F([[1, 1], [2, 2]])
        assert cert.game.b == F([[-1, -1], [-2, -1]])
        assert cert.rank == 1
        assert cert.rank_bound == 1
        assert not cert.uniqueness_guarantee

    def test_contradictory_crossing(self):
        ds = validate_dataset(CONTRADICTORY_CROSSING, 3)
        with pytest.raises(NotRationalizable) as exc:
            rationalize_bounded_rank(ds)
        witness = exc.value.witness
        assert witness.player == "row"
        assert set(witness.cycle) == {P(1, 1), P(2, 1)}

    def test_uniqueness_required(self, diag_dataset):
        with pytest.raises(UniquenessViolated):
            rationalize_bounded_rank(diag_dataset)

    def test_random_datasets(self):
        rng = Random(53)
        for _ in range(40):
            ds = random_uniqueness_dataset(rng, rng.randint(2, 7))
            if not is_rationalizable(ds):
                with pytest.raises(NotRationalizable):
                    rationalize_bounded_rank(ds)
                continue
            cert = rationalize_bounded_rank(ds)
            assert rationalizes(cert.game, ds).ok
            assert cert.rank <= cert.rank_bound


class TestGeneral:
    def test_diagonal(self, diag_dataset):
        cert = rationalize_general(diag_dataset)
        assert cert.method == "general"
        assert cert.rank_bound is None
        assert cert.game.a == F([[2, 1], [1, 2]])
        assert cert.game.b == F([[-1, -2], [-2, -1]])

    def test_contradictory(self, contradictory_dataset):
        with pytest.raises(NotRationalizable) as exc:
            rationalize_general(contradictory_dataset)
        witness = exc.value.witness
        assert witness.player == "row"
        assert set(witness.cycle) == {P(1, 1), P(2, 1)}
        assert "A[" in str(exc.value)

    def test_two_regular(self):
        ds = two_regular_dataset(sylvester_hadamard(1))
        cert = rationalize_general(ds)
        assert cert.rank == 2
        assert rationalizes(cert.game, ds).ok


class TestDecision:
    def test_contradictory_witness_inequalities(self, contradictory_dataset):
        result = is_rationalizable(contradictory_dataset)
        assert not result
        ineqs = result.witness.inequalities()
        assert set(ineqs) == {"A[1,1] > A[2,1]", "A[2,1] > A[1,1]"}

    def test_column_witness(self):
        ds = validate_dataset(
            [((1, 1), (1,), (1, 2)), ((1, 2), (1, 2), (1, 2)), ((2, 1), (1, 2), (1, 2))], 2
        )
        result = is_rationalizable(ds)
        assert not result
        assert result.witness.player == "column"
        assert set(result.witness.cycle) == {P(1, 1), P(1, 2)}
        assert set(result.witness.inequalities()) == {
            "B[1,1] > B[1,2]",
            "B[1,2] > B[1,1]",
        }

    def test_crossing_contradiction_passes_uniqueness(self):
        from ranklens import satisfies_uniqueness

        ds = validate_dataset(CONTRADICTORY_CROSSING, 3)
        assert satisfies_uniqueness(ds).ok
        assert not is_rationalizable(ds)

    def test_removing_observations_preserves_rationalizability(self):
        rng = Random(59)
        for _ in range(30):
            ds = random_uniqueness_dataset(rng, rng.randint(2, 6))
            if not is_rationalizable(ds) or not ds.observations:
                continue
            drop = rng.randrange(len(ds.observations))
            smaller = validate_dataset(
                [
                    ((o.choice.row, o.choice.col), o.subgame.rows, o.subgame.cols)
                    for k, o in enumerate(ds.observations)
                    if k != drop
                ],
                ds.n,
            )
            assert is_rationalizable(smaller)


class TestAuto:
    def test_dispatch(self, diag_dataset, nested_dataset, crossing_strips_dataset):
        assert rationalize_auto(diag_dataset).method == "rank_one"
        assert rationalize_auto(nested_dataset).method == "zero_sum"
        assert rationalize_auto(crossing_strips_dataset).method == "bounded_rank"
        two_regular = two_regular_dataset(sylvester_hadamard(1))
        assert rationalize_auto(two_regular).method == "general"

    def test_empty_dataset_counts_as_full(self):
        assert rationalize_auto(validate_dataset([], 3)).method == "rank_one"

    def test_every_certificate_verifies(self):
        rng = Random(61)
        for _ in range(30):
            ds = random_uniqueness_dataset(rng, rng.randint(2, 6))
            if not is_rationalizable(ds):
                continue
            cert = rationalize_auto(ds)
            assert rationalizes(cert.game, ds).ok
            if cert.rank_bound is not None:
                assert cert.rank <= cert.rank_bound
