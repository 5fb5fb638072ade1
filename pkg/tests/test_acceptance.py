"""Acceptance suite: one test per top-level criterion, printed pass/fail.

Run with ``pytest tests/test_acceptance.py -s`` to see one line per
criterion.  Every numeric assertion is an exact rational comparison; every
randomised sweep is seeded and deterministic.

Criterion 4c pins the blockwise election's consensus to the singleton
{(2,3,1,4)}.  Direct enumeration refutes that expectation: (3,2,1,4) ties
at the same cost 34 through the closed form, the menu-enumeration oracle,
and a menu-by-menu hand count alike, so the literal assertion fails and is
expected to keep failing.  The companion test right below pins the
verified facts (the exact tie, the shared cost, and the example's actual
point).
"""

from __future__ import annotations

import random
import time
from contextlib import contextmanager
from fractions import Fraction as F
from itertools import permutations as it_perms


from menurank import (
    MenuWeights,
    Measure,
    ParamLabel,
    Permutation,
    Profile,
    aggregate_exact,
    aggregate_footrule,
    aggregate_myopic,
    all_rankings,
    approximation_factor,
    build_ilp,
    check_axiom,
    check_property,
    condorcet_candidates,
    distance,
    distance_naive,
    footrule,
    make_params,
    menu_to_position_weights,
    objective_offset,
    objective_value,
    position_to_menu_weights,
    preset,
    profile_cost,
    ptas_depth,
    ptas_weights,
    recover_pair_weights,
)
from menurank.assignment import min_cost_assignment
from menurank.audit import params_distance
from menurank.ilp import expected_constraint_count, expected_variable_count

from conftest import (
    prof,
    rand_fraction,
    rand_measure,
    rand_profile,
    rand_ranking,
    rand_weights,
)


@contextmanager
def criterion(cid: str, description: str):
    start = time.time()
    try:
        yield
    except BaseException:
        print(f"ACCEPTANCE {cid}: FAIL ({time.time() - start:.1f}s) - {description}")
        raise
    print(f"ACCEPTANCE {cid}: PASS ({time.time() - start:.1f}s) - {description}")


# ---------------------------------------------------------------------------


def test_c01_oracle_equivalence():
    with criterion("C1", "closed form == menu oracle, exhaustive to n=6, sampled at n=8,10, < 60 s"):
        start = time.time()
        rng = random.Random(101)
        draws = 0
        # exhaustive sweeps; draw counts per size keep the total runtime low
        for n, draw_count in ((2, 12), (3, 12), (4, 12), (5, 4)):
            perms = all_rankings(n)
            for _ in range(draw_count):
                params = make_params(rand_weights(rng, n), rand_measure(rng, n))
                draws += 1
                for a in perms:
                    for b in perms:
                        assert distance(params, a, b) == distance_naive(params, a, b)
        perms6 = all_rankings(6)
        params6 = make_params(rand_weights(rng, 6), rand_measure(rng, 6))
        draws += 1
        for i, a in enumerate(perms6):
            for b in perms6[i:]:
                fast = distance(params6, a, b)
                assert fast == distance_naive(params6, a, b)
                assert fast == distance(params6, b, a)
        # larger sizes: 500 random pairs each, a fresh parameter draw per 10
        for n in (7, 8, 10):
            for _ in range(50):
                params = make_params(rand_weights(rng, n), rand_measure(rng, n))
                draws += 1
                for _ in range(10):
                    a, b = rand_ranking(rng, n), rand_ranking(rng, n)
                    assert distance(params, a, b) == distance_naive(params, a, b)
        elapsed = time.time() - start
        assert draws >= 50, draws
        assert elapsed < 60, f"oracle sweep took {elapsed:.1f}s"


def test_c02_weight_price_bijection():
    with criterion("C2", "menu<->position weight bijection: 500 exact roundtrips + exponential family"):
        rng = random.Random(102)
        for _ in range(500):
            n = rng.randint(2, 12)
            w = MenuWeights(
                [rand_fraction(rng, hi=9, den=7, nonneg=False) for _ in range(n - 1)]
            )
            assert position_to_menu_weights(menu_to_position_weights(w)) == w
        # prices c * alpha^-k pair with weights c * alpha^(1-n) (alpha-1)^(k-2)
        from menurank import PositionWeights

        for alpha in (2, 3):
            for c in (1, 5):
                for n in range(2, 9):
                    prices = PositionWeights([F(c, alpha**k) for k in range(1, n)])
                    expected = MenuWeights(
                        [
                            F(c) * F(1, alpha ** (n - 1)) * (alpha - 1) ** (k - 2)
                            for k in range(2, n + 1)
                        ]
                    )
                    assert position_to_menu_weights(prices) == expected
                    assert menu_to_position_weights(expected) == prices


SANDWICH_PRESETS = (
    # classic family constants: 2 for pairwise weights, 3/2 for flat and
    # linear growth, 1 + p for binomial decay; the universal bound 2 for
    # cut-off weights, 1 + 1/alpha for exponential growth
    ("kendall", None, F(2)),
    ("ok-nishimura", None, F(3, 2)),
    ("linear", None, F(3, 2)),
    ("binomial", F(1, 2), F(3, 2)),
    ("binomial", F(1, 3), F(4, 3)),
    ("gilbert", 3, F(2)),
    ("unavailable-candidate", 3, F(4, 3)),
)


def test_c03_footrule_sandwich():
    with criterion("C3", "footrule <= distance <= gamma * footrule, exhaustive n<=6; factors under the family constants"):
        for name, param, bound in SANDWICH_PRESETS:
            sizes = (3, 4, 5, 6) if name in ("kendall", "ok-nishimura", "linear") else (3, 4, 5)
            for n in sizes:
                weights, mu = preset(name, n, param)
                params = make_params(weights, mu)
                gamma = approximation_factor(weights)
                assert gamma <= bound
                perms = all_rankings(n)
                for i, a in enumerate(perms):
                    for b in perms[i + 1 :]:
                        fr = footrule(weights, a, b)
                        d = distance(params, a, b)
                        assert fr <= d <= gamma * fr
        # the pairwise factor has the closed form 1 + (n-2)/(n-1), the flat
        # one 1 + (2^(n-2)-1)/(2^(n-1)-1); both climb towards their constants
        for n in range(2, 11):
            assert approximation_factor(preset("kendall", n)[0]) == 1 + F(n - 2, n - 1)
            assert approximation_factor(preset("ok-nishimura", n)[0]) == 1 + F(
                2 ** (n - 2) - 1, 2 ** (n - 1) - 1
            )
        for p in (F(1, 2), F(1, 3), F(2, 5)):
            for n in range(2, 9):
                assert approximation_factor(preset("binomial", n, p)[0]) <= 1 + p


NEUTRAL_V = prof((1, (1, 2, 3)), (1, (3, 1, 2)), (1, (2, 3, 1)))
NEUTRAL_PARAMS = make_params(MenuWeights([1, 0]), Measure([1, 1, 2]))


def test_c04a_relabelling_election():
    with criterion("C4a", "worked election: six closed-form costs, consensus move under relabelling"):
        mu1, mu2, mu3 = F(1), F(1), F(2)
        m = 2 * (mu1 + mu2 + mu3)
        expected_costs = {
            (1, 2, 3): m + mu1 + mu3,          # 11
            (3, 1, 2): m + mu2 + mu3,          # 11
            (2, 3, 1): m + mu1 + mu2,          # 10
            (3, 2, 1): m + mu1 + 2 * mu2 + mu3,
            (2, 1, 3): m + 2 * mu1 + mu2 + mu3,
            (1, 3, 2): m + mu1 + mu2 + 2 * mu3,  # 14
        }
        assert expected_costs[(1, 2, 3)] == 11
        assert expected_costs[(2, 3, 1)] == 10
        assert expected_costs[(1, 3, 2)] == 14
        for order, cost in expected_costs.items():
            assert profile_cost(NEUTRAL_PARAMS, Permutation(order), NEUTRAL_V) == cost
        res = aggregate_exact(NEUTRAL_PARAMS, NEUTRAL_V)
        assert [p.order for p in res.minimizers] == [(2, 3, 1)]
        tau = Permutation((3, 2, 1))
        relabeled = aggregate_exact(NEUTRAL_PARAMS, NEUTRAL_V.relabel(tau))
        assert [p.order for p in relabeled.minimizers] == [(1, 3, 2)]
        assert tau.compose(Permutation((2, 3, 1))).order == (2, 1, 3)
        assert relabeled.winners == {1} != {2}
        assert check_property(NEUTRAL_PARAMS, NEUTRAL_V, "neutrality_P").verdict == "Fails"


def test_c04b_cyclic_consensus_set():
    with criterion("C4b", "worked election: the three-rotation cycle keeps all three rotations"):
        params = make_params(*preset("kendall", 3))
        res = aggregate_exact(
            params, prof((1, (1, 2, 3)), (1, (2, 3, 1)), (1, (3, 1, 2)))
        )
        assert {p.order for p in res.minimizers} == {(1, 2, 3), (2, 3, 1), (3, 1, 2)}


BLOCKWISE_V = prof((1, (1, 2, 3, 4)), (1, (3, 2, 1, 4)), (1, (4, 2, 3, 1)))


def test_c04c_blockwise_example_as_stated():
    with criterion("C4c", "worked election: blockwise consensus pinned to {(2,3,1,4)} (known discrepancy)"):
        params = make_params(MenuWeights([1, 1, 1]))
        res = aggregate_exact(params, BLOCKWISE_V)
        got = {p.order for p in res.minimizers}
        # Literal reference expectation.  Enumeration finds the tie
        # {(2,3,1,4), (3,2,1,4)}, both at cost 34 (closed form, menu oracle
        # and a hand count agree), so this assertion fails by design; the
        # verified facts live in the companion test below.
        assert got == {(2, 3, 1, 4)}, (
            f"expected the singleton {{(2, 3, 1, 4)}} but enumeration gives "
            f"{sorted(got)} at cost {res.optimum}; the tie is real (see the "
            f"module docstring)"
        )


def test_c04c_blockwise_example_verified_content():
    with criterion("C4c'", "worked election: blockwise point verified (tie included, both at cost 34)"):
        params = make_params(MenuWeights([1, 1, 1]))
        res = aggregate_exact(params, BLOCKWISE_V)
        assert {p.order for p in res.minimizers} == {(2, 3, 1, 4), (3, 2, 1, 4)}
        assert res.optimum == 34
        # cross-check both tied costs through the menu oracle
        for order in ((2, 3, 1, 4), (3, 2, 1, 4)):
            oracle = sum(
                distance_naive(params, Permutation(order), v)
                for v in BLOCKWISE_V.ballots()
            )
            assert oracle == 34
        # the example's point: every ballot seats 2 second, yet a consensus
        # ranking exists that does not
        assert all(v.order[1] == 2 for v in BLOCKWISE_V.ballots())
        assert any(p.order[1] != 2 for p in res.minimizers)


CONDORCET_V = prof((5, (1, 2, 3, 4)), (4, (3, 2, 1, 4)), (1, (2, 3, 1, 4)))


def test_c05_condorcet_characterization():
    with criterion("C5", "pairwise weights honour Condorcet on 200 profiles; a size-3 weight breaks it"):
        rng = random.Random(105)
        for _ in range(200):
            n = rng.randint(2, 5)
            params = make_params(*preset("kendall", n))
            V = rand_profile(rng, n, max_ballots=5)
            assert check_property(params, V, "condorcet_P").verdict == "Holds"
            assert check_property(params, V, "condorcet_W").verdict == "Holds"
        heavy = make_params(MenuWeights([1, 1, 0]))
        assert condorcet_candidates(CONDORCET_V) == {1, 2}
        res = aggregate_exact(heavy, CONDORCET_V)
        assert 2 not in res.winners
        report = check_property(heavy, CONDORCET_V, "condorcet_W")
        assert report.verdict == "Fails" and 2 in report.witness["missing"]


def test_c06_footrule_aggregation():
    with criterion("C6", "matching certificate within gamma of the optimum on 200 profiles; matching == brute force"):
        rng = random.Random(106)
        done = 0
        while done < 200:
            n = rng.randint(2, 7)
            weights = rand_weights(rng, n)
            if weights.values[0] == 0:
                continue
            done += 1
            V = rand_profile(rng, n, max_ballots=5, max_mult=1)
            params = make_params(weights)
            exact = aggregate_exact(params, V)
            res = aggregate_footrule(weights, V)
            gamma = approximation_factor(weights)
            assert exact.optimum <= res.certificate <= gamma * exact.optimum
        for n in range(2, 8):
            for _ in range(5):
                cost = [
                    [rand_fraction(rng, hi=12, den=5) for _ in range(n)]
                    for _ in range(n)
                ]
                _, total = min_cost_assignment(cost)
                brute = min(
                    sum(cost[r][p[r]] for r in range(n))
                    for p in it_perms(range(n))
                )
                assert total == brute


def test_c07_myopic_ptas():
    with criterion("C7", "myopic window at the prescribed depth stays within (1 + eps) on 100 profiles"):
        assert ptas_depth("affine", 4) == 4  # closed form at eps = 1/4
        rng = random.Random(107)
        rules = [
            ("affine", lambda n: ptas_weights("affine", n)),
            ("exponential", lambda n: ptas_weights("exponential", n, alpha=2)),
        ]
        for _ in range(100):
            n = rng.randint(3, 8)
            V = rand_profile(rng, n, max_ballots=5, max_mult=2)
            for rule, weights_for in rules:
                weights = weights_for(n)
                params = make_params(weights)
                optimum = aggregate_exact(params, V).optimum
                for eps in (F(1, 2), F(1, 4)):
                    # counting measure: the spread bounds are u = U = 1
                    depth = ptas_depth(rule, 12 / eps, alpha=2)
                    res = aggregate_myopic(params, V, depth)
                    assert res.certificate <= (1 + eps) * optimum


def test_c08_ilp_consistency():
    with criterion("C8", "program objective == aggregate cost minus the ballot constant; cubic size counts"):
        rng = random.Random(108)
        for _ in range(20):
            n = rng.randint(2, 6)
            params = make_params(rand_weights(rng, n), rand_measure(rng, n))
            V = rand_profile(rng, n)
            offset = objective_offset(params, V)
            for q in it_perms(range(1, n + 1)):
                p = Permutation(q)
                assert (
                    objective_value(params, V, p)
                    - (profile_cost(params, p, V) - offset)
                    == 0
                )
        for n, m in ((4, 3), (5, 4)):
            params = make_params(*preset("kendall", n))
            entries = tuple((1, rand_ranking(rng, n)) for _ in range(m))
            model = build_ilp(params, Profile(entries, n))
            assert model.variable_count() == expected_variable_count(n, m)
            assert model.variable_count() == n * n + m * n**3
            assert model.constraint_count() == expected_constraint_count(n, m)


def test_c09_axiom_suite():
    with criterion("C9", "A3 exhaustive at n=5 over semimetric draws; A1 recovery; labels backed by enumeration"):
        rng = random.Random(109)
        # A3 for nonnegative parameter draws and the named presets, n = 5
        configs = [make_params(*preset("kendall", 5)), make_params(*preset("ok-nishimura", 5))]
        for _ in range(3):
            configs.append(make_params(rand_weights(rng, 5), rand_measure(rng, 5)))
        for params in configs:
            assert params.is_semimetric()
            assert check_axiom(params_distance(params), 5, "A3").verdict == "Holds"
        # A1 recovery for pairwise weights under signed measures with
        # nonnegative pairwise sums
        for mu_values in [(1, 1, 1, 1, 1), (F(-1, 2), 1, 2, 3, 4), (0, 1, 1, 2, 2)]:
            params = make_params(MenuWeights([1, 0, 0, 0]), Measure(mu_values))
            d = params_distance(params)
            weights = recover_pair_weights(d, 5)
            assert weights is not None
            perms = all_rankings(5)
            mu = params.mu
            for i in range(1, 6):
                for j in range(i + 1, 6):
                    assert weights[frozenset((i, j))] == mu.of(i) + mu.of(j)
        # classification labels versus direct enumeration
        metric_params = [
            make_params(*preset("ok-nishimura", 4)),
            make_params(MenuWeights([1, 2, 3]), Measure([F(1, 2), 1, 2, 3])),
            make_params(*preset("binomial", 5, F(1, 2))),
        ]
        for params in metric_params:
            assert params.label is ParamLabel.METRIC
            n = params.n
            perms = all_rankings(n)
            table = {(a, b): distance(params, a, b) for a in perms for b in perms}
            assert all(v >= 0 for v in table.values())
            assert all(table[(a, b)] == table[(b, a)] for a in perms for b in perms)
            assert all((table[(a, b)] == 0) == (a == b) for a in perms for b in perms)
            for a in perms:
                for b in perms:
                    ab = table[(a, b)]
                    for c in perms:
                        assert table[(a, c)] <= ab + table[(b, c)]
        bad_params = [
            make_params(MenuWeights([1, 1, 1]), Measure([-1, 1, 1, 1])),
            make_params(MenuWeights([6, -1, 1]), Measure([1, 1, 1, 1])),
            make_params(MenuWeights([-1, 0, 0]), Measure([1, 1, 1, 1])),
        ]
        for params in bad_params:
            assert params.label is ParamLabel.NOT_SEMIMETRIC
            n = params.n
            perms = all_rankings(n)
            table = {(a, b): distance(params, a, b) for a in perms for b in perms}
            violated = any(v < 0 for v in table.values()) or any(
                table[(a, c)] > table[(a, b)] + table[(b, c)]
                for a in perms
                for b in perms
                for c in perms
            )
            assert violated
        boundary = make_params(MenuWeights([1]), Measure([1, -1]))
        assert boundary.label is ParamLabel.SEMIMETRIC_ONLY
        assert distance(boundary, Permutation((1, 2)), Permutation((2, 1))) == 0


def test_c10_social_choice_suites():
    with criterion("C10", "majority, monotonicity, reinforcing, blockwise and partitionwise audits, < 5 min"):
        start = time.time()
        rng = random.Random(110)
        for _ in range(150):
            n = rng.randint(2, 6)
            params = make_params(rand_weights(rng, n), rand_measure(rng, n))
            V = rand_profile(rng, n, max_ballots=5)
            assert check_property(params, V, "majority").verdict == "Holds"
        for _ in range(60):
            n = rng.randint(2, 5)
            params = make_params(rand_weights(rng, n), rand_measure(rng, n))
            V = rand_profile(rng, n)
            assert check_property(params, V, "monotonicity").verdict == "Holds"
        overlaps = 0
        for _ in range(80):
            n = rng.randint(2, 5)
            params = make_params(rand_weights(rng, n), rand_measure(rng, n))
            V1 = rand_profile(rng, n)
            V2 = V1 if rng.random() < 0.4 else rand_profile(rng, n)
            report = check_property(params, V1, "reinforcing", other=V2)
            assert report.verdict == "Holds"
            if not report.note:
                overlaps += 1
        assert overlaps >= 20
        for _ in range(100):
            n = rng.randint(3, 6)
            weights = rand_weights(rng, n)
            if weights.values[0] == 0:
                weights = MenuWeights((F(1),) + weights.values[1:])
            params = make_params(weights)
            cut = rng.randint(1, n - 1)
            entries = []
            for _ in range(rng.randint(1, 4)):
                top = rng.sample(range(1, cut + 1), cut)
                rest = rng.sample(range(cut + 1, n + 1), n - cut)
                entries.append((rng.randint(1, 2), Permutation(top + rest)))
            V = Profile(tuple(entries), n)
            assert check_property(params, V, "blockwise_pareto").verdict == "Holds"
            assert check_property(params, V, "partitionwise_pareto").verdict == "Holds"
        assert time.time() - start < 300
