import itertools
import random

import pytest

from sbgkit.encode import (
    Assignment,
    LinearConstraint,
    Literal,
    PBFormula,
    normalize,
    parse_opb,
    pos,
)
from sbgkit.fixtures import EXAMPLE_UNSAT_OPB
from sbgkit.solve import (
    SolveLimitReached,
    enumerate_all,
    propagates_to_conflict,
    solve,
)


def random_formula(rng, n, m):
    cons = []
    for _ in range(m):
        terms = [
            (rng.randint(1, 3), Literal(rng.randint(1, n), rng.random() < 0.5))
            for _ in range(rng.randint(1, 4))
        ]
        cons.extend(normalize(terms, rng.choice([">=", "<=", "="]), rng.randint(0, 4)))
    return PBFormula(n, tuple(cons))


def brute_force_models(f):
    out = set()
    for values in itertools.product((0, 1), repeat=f.num_vars):
        a = Assignment.total(values)
        if f.satisfied_by(a):
            out.add(values)
    return out


def test_single_positive_unit():
    f = PBFormula(1, (LinearConstraint(((1, pos(1)),), 1),))
    res = solve(f)
    assert res.is_sat
    assert res.witness.values == (1,)


def test_example_formula_unsat():
    f = parse_opb(EXAMPLE_UNSAT_OPB)
    res = solve(f)
    assert res.status == "UNSAT"
    assert brute_force_models(f) == set()


def test_empty_formula_is_sat():
    f = PBFormula(3, ())
    assert solve(f).is_sat


def test_contradictory_constraint():
    f = PBFormula(2, (LinearConstraint((), 1),))
    assert solve(f).status == "UNSAT"


def test_witness_satisfies_all_constraints():
    rng = random.Random(5)
    for _ in range(80):
        f = random_formula(rng, rng.randint(1, 8), rng.randint(1, 6))
        try:
            res = solve(f)
        except SolveLimitReached:
            pytest.fail("limit on a tiny instance")
        if res.is_sat:
            assert f.satisfied_by(res.witness)


def test_agrees_with_brute_force_up_to_12_vars():
    rng = random.Random(6)
    for trial in range(60):
        n = rng.randint(1, 12) if trial % 3 else 12
        f = random_formula(rng, n, rng.randint(1, 10))
        models = brute_force_models(f)
        res = solve(f)
        assert res.is_sat == bool(models)


def test_enumerate_two_var_clause():
    f = PBFormula(2, (LinearConstraint(((1, pos(1)), (1, pos(2))), 1),))
    sols = enumerate_all(f)
    assert {a.values for a in sols} == {(0, 1), (1, 0), (1, 1)}


def test_enumerate_unconstrained_variables():
    # a variable not mentioned by any constraint still enumerates both ways
    f = PBFormula(2, (LinearConstraint(((1, pos(1)),), 1),))
    sols = enumerate_all(f)
    assert {a.values for a in sols} == {(1, 0), (1, 1)}


def test_enumerate_matches_brute_force():
    rng = random.Random(8)
    for _ in range(60):
        f = random_formula(rng, 4, rng.randint(1, 6))
        sols = enumerate_all(f)
        assert {a.values for a in sols} == brute_force_models(f)
        assert len({a.values for a in sols}) == len(sols)


def test_enumerate_projection():
    rng = random.Random(9)
    for _ in range(40):
        f = random_formula(rng, 5, rng.randint(1, 6))
        proj = sorted(rng.sample(range(1, 6), rng.randint(1, 4)))
        sols = enumerate_all(f, projection=proj)
        expected = {
            tuple(values[v - 1] for v in proj)
            for values in brute_force_models(f)
        }
        got = {tuple(a.value(v) for v in proj) for a in sols}
        assert got == expected
        for a in sols:
            assert set(a.assigned_vars()) == set(proj)


def test_enumeration_is_order_independent():
    rng = random.Random(10)
    for _ in range(20):
        f = random_formula(rng, 5, 5)
        base = {a.values for a in enumerate_all(f)}
        shuffled = list(f.constraints)
        rng.shuffle(shuffled)
        again = {a.values for a in enumerate_all(PBFormula(5, tuple(shuffled)))}
        assert base == again


def test_node_limit_signals_inconclusive():
    # xor-ish pair: no root propagation, so any search needs a decision
    f = PBFormula(
        2,
        (
            LinearConstraint(((1, pos(1)), (1, pos(2))), 1),
            LinearConstraint(((1, Literal(1, True)), (1, Literal(2, True))), 1),
        ),
    )
    with pytest.raises(SolveLimitReached):
        solve(f, node_limit=0)
    assert solve(f).is_sat


def test_limit_propagates_through_enumeration():
    f = PBFormula(3, ())
    with pytest.raises(SolveLimitReached):
        enumerate_all(f, node_limit=1)


def test_stats_populated():
    f = parse_opb(EXAMPLE_UNSAT_OPB)
    res = solve(f)
    assert res.stats.conflicts > 0
    assert res.stats.propagations > 0


# -- the propagation routine used by proof checking ----------------------------------


def test_propagation_finds_direct_conflict():
    cons = [
        LinearConstraint(((1, pos(1)),), 1),
        LinearConstraint(((1, Literal(1, True)),), 1),
    ]
    assert propagates_to_conflict(cons, 1)


def test_propagation_is_incomplete_without_decisions():
    # x1 + x2 >= 1 with both allowed: no forcing, no conflict
    cons = [LinearConstraint(((1, pos(1)), (1, pos(2))), 1)]
    assert not propagates_to_conflict(cons, 2)


def test_propagation_chains_through_cardinality():
    # x1 forced, then x2 forced by the pair constraint, contradicting ~x2
    cons = [
        LinearConstraint(((1, pos(1)),), 1),
        LinearConstraint(((1, Literal(1, True)), (1, pos(2))), 1),
        LinearConstraint(((1, Literal(2, True)),), 1),
    ]
    assert propagates_to_conflict(cons, 2)
