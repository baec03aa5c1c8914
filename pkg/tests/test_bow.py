import random
from itertools import product

import pytest

from bowforge.bow import (
    BowDiagram,
    balanced_form,
    bow_from_json,
    bow_to_json,
    hw_new_middle,
    hw_reachable_balanced,
    hw_transition,
    invariants,
    o_node,
    rotate_base,
    separated_form,
    transition_positions,
    weights_of,
    x_node,
)
from bowforge.weights import delta_weight, fundamental_weight, simple_root, weight_from_marks


def three_node_fixture():
    # balanced diagram for n=2, l=1, w=(1,0), v=(1,1)
    L0 = fundamental_weight(2, 0)
    return balanced_form(L0, L0 - delta_weight(2))


def random_circle(rng, max_x=4, max_o=4, max_dim=6):
    n = rng.randint(1, max_x)
    l = rng.randint(0, max_o)
    kinds = ["x"] * n + ["o"] * l
    rng.shuffle(kinds)
    lead = kinds.index("x")
    kinds = kinds[lead:] + kinds[:lead]
    nodes, xi, sym = [], 0, 1
    for kind in kinds:
        if kind == "x":
            nodes.append(x_node(xi))
            xi += 1
        else:
            nodes.append(o_node(sym))
            sym += 1
    return BowDiagram("circle", tuple(nodes), tuple(rng.randint(0, max_dim) for _ in kinds))


# -- invariants ----------------------------------------------------------


def test_invariants_balanced_fixture():
    inv = invariants(three_node_fixture())
    assert all(v == 0 for _, v in inv.n_h)
    assert all(v == 0 for _, v in inv.n_x)
    assert inv.quad_h == 4


def test_invariants_no_circles():
    d = BowDiagram("circle", (x_node(0), x_node(1)), (2, 3))
    inv = invariants(d)
    assert sum(v for _, v in inv.pair_x) == 0
    assert inv.pair_h == ()


def test_pair_sums_circle():
    rng = random.Random(13)
    for _ in range(200):
        d = random_circle(rng)
        inv = invariants(d)
        if d.num_o:
            assert sum(v for _, v in inv.pair_h) == d.num_x
        if d.num_x and d.num_o:
            assert sum(v for _, v in inv.pair_x) == d.num_o


def test_invariants_separated_fixture():
    sf = separated_form(three_node_fixture())
    assert sf.tlambda == (0,)
    assert sf.mu == (0, 0)
    assert sf.v0 == 1
    inv = invariants(sf.realize())
    assert inv.n_h == ((1, 0),)
    assert inv.n_x == ((0, 0), (1, 0))


# -- transitions ----------------------------------------------------------


def test_hw_dimension_rule():
    d = three_node_fixture()  # dims (1,1,1)
    t = hw_transition(d, 0)
    assert t.dims[0] == 2  # 1 + 1 + 1 - 1
    assert hw_transition(t, 0) == d  # involution


def test_hw_again_returns_original_dims():
    d = BowDiagram("circle", (x_node(0), o_node(1), x_node(1)), (1, 2, 1))
    t = hw_transition(d, 1)
    assert t.dims[1] == 1
    assert hw_transition(t, 1).dims[1] == 2


def test_hw_negative_dimension_error():
    d = BowDiagram("circle", (x_node(0), o_node(1), x_node(1)), (0, 2, 0))
    assert hw_new_middle(d, 1) == -1
    with pytest.raises(ValueError):
        hw_transition(d, 1)


def test_hw_invariance_randomized():
    rng = random.Random(99)
    for _ in range(300):
        d = random_circle(rng)
        base = invariants(d).invariant_part()
        for _ in range(12):
            pos = [k for k in transition_positions(d) if hw_new_middle(d, k) >= 0]
            if not pos:
                break
            d = hw_transition(d, rng.choice(pos))
            assert invariants(d).invariant_part() == base


def test_nu_star_bookkeeping():
    # push the circle clockwise across x_0 (one nu_star unit) and back
    d = BowDiagram("circle", (x_node(0), o_node(7), x_node(1)), (1, 1, 1))
    across = hw_transition(d, 0)
    assert across.nodes[0] == ("o", 7, 1)
    back = hw_transition(across, 0)
    assert back == d and back.nodes[1] == ("o", 7, 0)
    # a cross pair is not a transition locus
    with pytest.raises(ValueError):
        hw_transition(d, 2)


def test_nu_star_changes_only_at_base():
    rng = random.Random(17)
    for _ in range(200):
        d = random_circle(rng, max_x=3, max_o=3, max_dim=4)
        pos = [k for k in transition_positions(d) if hw_new_middle(d, k) >= 0]
        if not pos:
            continue
        k = rng.choice(pos)
        m = len(d.nodes)
        a, b = d.nodes[k], d.nodes[(k + 1) % m]
        t = hw_transition(d, k)
        before = sorted(nd[1:] for nd in d.nodes if nd[0] == "o")
        after = sorted(nd[1:] for nd in t.nodes if nd[0] == "o")
        crossed_base = (a[0] == "x" and a[1] == 0) or (b[0] == "x" and b[1] == 0)
        syms_before = sorted(s for s, _ in before)
        syms_after = sorted(s for s, _ in after)
        assert syms_before == syms_after
        if crossed_base:
            assert before != after
        else:
            assert before == after


# -- separated form and the dictionary ------------------------------------


def test_separated_fixture_values():
    sf = separated_form(three_node_fixture())
    assert (sf.tlambda, sf.mu, sf.v0) == ((0,), (0, 0), 1)
    L0 = fundamental_weight(2, 0)
    sf0 = separated_form(balanced_form(L0, L0))
    assert (sf0.tlambda, sf0.mu, sf0.v0) == ((0,), (0, 0), 0)


def test_separated_fixed_point():
    sf = separated_form(three_node_fixture())
    again = separated_form(sf.realize())
    assert again == sf


def test_weights_of_fixture():
    lam, mu = weights_of(three_node_fixture())
    assert (lam.profile, lam.delta) == ((0, 0), 0)
    assert (mu.profile, mu.delta) == ((0, 0), -1)
    L0 = fundamental_weight(2, 0)
    lam0, mu0 = weights_of(balanced_form(L0, L0))
    assert lam0 == L0 and mu0 == L0


def test_balanced_form_examples():
    L0 = fundamental_weight(2, 0)
    assert three_node_fixture().dims == (1, 1, 1)
    assert balanced_form(L0, L0).dims == (0, 0, 0)
    two = weight_from_marks(2, [2, 0])
    d = balanced_form(two, two - simple_root(2, 0))
    assert d.dims == (1, 1, 1, 0)
    assert [nd[0] for nd in d.nodes] == ["x", "o", "o", "x"]


def test_balanced_form_errors():
    L0 = fundamental_weight(2, 0)
    with pytest.raises(ValueError):
        balanced_form(L0 - simple_root(2, 0), L0)  # not dominant
    with pytest.raises(ValueError):
        balanced_form(L0, L0 + simple_root(2, 0))  # negative coefficients


def test_round_trip_exhaustive_small():
    for n in (2, 3):
        for l in (1, 2):
            for marks in product(range(l + 1), repeat=n):
                if sum(marks) != l:
                    continue
                lam = weight_from_marks(n, list(marks))
                for v in product(range(4), repeat=n):
                    mu = lam
                    for a, c in enumerate(v):
                        mu = mu - simple_root(n, a).scale(c)
                    d = balanced_form(lam, mu)
                    assert d.is_balanced()
                    lam2, mu2 = weights_of(d)
                    assert lam2 == lam and mu2 == mu
                    assert balanced_form(lam2, mu2) == d


def test_rotate_base_example():
    sf = separated_form(three_node_fixture())
    r = rotate_base(sf)
    assert (r.tlambda, r.mu, r.v0) == ((-2,), (-1, -1), 3)
    assert r.params == ((1, -1),)


def test_rotate_base_properties():
    sf = separated_form(balanced_form(weight_from_marks(2, [1, 1]), weight_from_marks(2, [1, 1])))
    r = sf
    for _ in range(sf.l):
        r = rotate_base(r)
    assert r.tlambda == tuple(t - sf.n for t in sf.tlambda)
    # tlambda entry equal to n leaves v0 unchanged
    sf2 = separated_form(
        balanced_form(weight_from_marks(2, [0, 2]), weight_from_marks(2, [0, 2]) - delta_weight(2).scale(0))
    )
    if sf2.tlambda[0] == sf2.n:
        assert rotate_base(sf2).v0 == sf2.v0


def test_rotate_base_preserves_quadratic_invariants():
    L0 = fundamental_weight(2, 0)
    sf = separated_form(balanced_form(L0, L0 - delta_weight(2)))
    inv0 = invariants(sf.realize())
    r = rotate_base(sf)
    inv1 = invariants(r.realize())
    assert (inv0.quad_h, inv0.quad_x) == (inv1.quad_h, inv1.quad_x)


def test_search_examples():
    d = three_node_fixture()
    sf = separated_form(d)
    found = hw_reachable_balanced(sf.realize(), 4)
    assert found == [d]
    assert d in hw_reachable_balanced(d, 4)
    # the class of (0,2,0) names a pair with a negative root coefficient,
    # so no balanced diagram exists in it
    bad = BowDiagram("circle", (x_node(0), o_node(1), x_node(1)), (0, 2, 0))
    assert hw_reachable_balanced(bad, 6) == []


def test_weights_survive_scrambling():
    # random admissible transitions away from the base cross keep the named
    # pair intact; transitions across the base shift the winding bookkeeping
    rng = random.Random(271)
    L0 = fundamental_weight(2, 0)
    lam3 = weight_from_marks(3, [1, 1, 0])
    for lam, mu in (
        (L0, L0 - delta_weight(2)),
        (lam3, lam3 - simple_root(3, 0) - simple_root(3, 1).scale(2)),
    ):
        start = balanced_form(lam, mu)
        for _ in range(20):
            d = start
            for _ in range(15):
                pos = []
                m = len(d.nodes)
                for k in transition_positions(d):
                    a, b = d.nodes[k], d.nodes[(k + 1) % m]
                    if ("x", 0) in (a[:2], b[:2]):
                        continue
                    if hw_new_middle(d, k) >= 0:
                        pos.append(k)
                if not pos:
                    break
                d = hw_transition(d, rng.choice(pos))
            lam2, mu2 = weights_of(d)
            assert lam2 == lam and mu2 == mu


def test_search_from_scramble_recovers_balanced():
    rng = random.Random(137)
    L0 = fundamental_weight(2, 0)
    start = balanced_form(L0, L0 - delta_weight(2))
    d = start
    for _ in range(10):
        pos = [k for k in transition_positions(d) if 0 <= hw_new_middle(d, k) <= 6]
        if not pos:
            break
        d = hw_transition(d, rng.choice(pos))
    found = hw_reachable_balanced(d, 6)
    assert len(found) == 1
    assert found[0].stripped_key() == start.stripped_key()


def test_search_never_two_balanced():
    rng = random.Random(401)
    for _ in range(40):
        d = random_circle(rng, max_x=3, max_o=2, max_dim=3)
        found = hw_reachable_balanced(d, 7)
        assert len(found) <= 1


# -- line diagrams ---------------------------------------------------------


def a2_line(v1, v2):
    nodes = (o_node(1), x_node(0), x_node(1), x_node(2))
    return BowDiagram("line", nodes, (0, 1, v1, v2, 0))


def test_line_fixture_section_table():
    for v1, v2 in ((0, 0), (1, 0), (1, 1)):
        d = a2_line(v1, v2)
        assert d.num_x == 3 and d.num_o == 1
        inv = invariants(d)
        assert inv.quad_x == -sum(v * v for _, v in inv.n_x) + 0 + 1


def test_line_transition_preserves_invariants():
    d = a2_line(1, 1)
    base = invariants(d).invariant_part()
    t = hw_transition(d, 1)
    assert invariants(t).invariant_part() == base
    assert hw_transition(t, 1) == d


def test_line_validation():
    with pytest.raises(ValueError):
        BowDiagram("line", (x_node(0),), (1, 0))
    with pytest.raises(ValueError):
        BowDiagram("line", (x_node(0),), (0,))


# -- serialization ---------------------------------------------------------


def test_bow_json_round_trip():
    d = three_node_fixture()
    j = bow_to_json(d)
    assert j["shape"] == "circle" and j["base"] == 0
    assert bow_from_json(j) == d
    line = a2_line(1, 0)
    assert bow_from_json(bow_to_json(line)) == line
