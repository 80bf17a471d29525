import json

import pytest

import sgrp


def semilattice2():
    return sgrp.FiniteSemigroup([[0, 1], [1, 1]], names=["a", "b"])


def test_table_basics():
    s = semilattice2()
    assert s.order == 2
    assert s.mul(0, 1) == 1
    assert s.mul(sgrp.IDENTITY, 1) == 1
    assert s.idempotents() == [0, 1]
    assert s.name(1) == "b"


def test_invalid_table_raises():
    with pytest.raises(sgrp.Error):
        sgrp.FiniteSemigroup([[1, 0], [0, 0]])


def test_green_and_ideal():
    s = semilattice2()
    data = sgrp.greens(s)
    assert data.j_classes == [[0], [1]]
    assert sgrp.minimal_ideal(s) == [1]
    assert not sgrp.is_completely_simple(s)


def test_expansion_and_oracle():
    s = semilattice2()
    gens = sgrp.GeneratingMap(["a", "b"], [0, 1])
    exp = sgrp.kr_expand(s, gens)
    assert exp.result.order == 10
    assert exp.projection.is_onto()
    assert exp.eval([0, 0, 0]) == exp.eval([0, 0])
    assert exp.eval([0, 1, 1, 0]) == 9
    groups = sgrp.oracle_classes(s, gens, 5)
    assert len(groups) == 10
    for k, group in enumerate(groups):
        assert all(exp.eval(list(w)) == k for w in group)


def test_budget_error():
    s = semilattice2()
    gens = sgrp.GeneratingMap(["a", "b"], [0, 1])
    with pytest.raises(sgrp.BudgetError):
        sgrp.kr_expand(s, gens, budget=10)


def test_cover_decisions():
    assert sgrp.is_kr_cover(semilattice2()).is_cover
    z2zero = sgrp.FiniteSemigroup([[0, 1, 2], [1, 0, 2], [2, 2, 2]])
    report = sgrp.is_kr_cover(z2zero)
    assert not report.is_cover
    assert sgrp.is_equidivisible(z2zero).equidivisible


def test_equidiv_witness():
    null2 = sgrp.FiniteSemigroup([[1, 1], [1, 1]])
    report = sgrp.is_equidivisible(null2)
    assert not report.equidivisible
    assert report.witness == [0, 0, 0, 1]


def test_tower_and_absorption():
    s = semilattice2()
    gens = sgrp.GeneratingMap(["a", "b"], [0, 1])
    tower = sgrp.kr_tower(s, gens, 2)
    assert [lv.semigroup.order for lv in tower.levels] == [2, 10, 788]
    report = sgrp.check_absorption(tower, 1, 6)
    assert report.holds


def test_identities():
    band = sgrp.rees_matrix(sgrp.FiniteSemigroup([[0]]), [[0, 0], [0, 0]])
    check = sgrp.satisfies_identity(band, sgrp.Identity.parse("xyx = x"))
    assert check.holds


def test_free_product():
    e = sgrp.FiniteSemigroup([[0]], names=["e"])
    f = sgrp.FiniteSemigroup([[0]], names=["f"])
    p = sgrp.truncated_free_product([e, f], 3)
    assert p.result.order == 7
    assert all(emb.is_injective() for emb in p.embeddings)
    u = sgrp.normal_form([e, f], [(0, 0), (1, 0)])
    v = sgrp.normal_form([e, f], [(1, 0), (0, 0)])
    res = sgrp.separate([e, f], u, v)
    assert not res.equal
    assert res.image_u != res.image_v


def test_json_round_trip():
    s = semilattice2()
    gens = sgrp.GeneratingMap(["a", "b"], [0, 1])
    text = sgrp.semigroup_to_json(s, gens)
    parsed = json.loads(text)
    assert parsed["order"] == 2
    loaded, loaded_gens = sgrp.semigroup_from_json(text)
    assert loaded.order == 2
    assert loaded_gens.letters == ["a", "b"]
    assert sgrp.content_hash("abc") == "fnv1a64:e71fa2190541574b"
