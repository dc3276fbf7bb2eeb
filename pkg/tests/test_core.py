import pytest

from archcat import fixtures as fx
from archcat.core import (
    CategoryError,
    FiniteCategory,
    compose,
    composable_pairs,
    hom,
    identity_of,
    validate_category,
)
from archcat.thin import to_category

from conftest import CATEGORIES
from oracles import raw_laws_hold

CHAIN3 = to_category(fx.CHAIN3_PRE)


def kinds(c):
    return [v.kind for v in validate_category(c)]


def test_pair_is_valid():
    assert validate_category(fx.PAIR) == []


def test_missing_composite_reported():
    comp = dict(fx.PAIR.composition)
    del comp[("id_B", "f")]
    broken = FiniteCategory(fx.PAIR.objects, fx.PAIR.morphisms, fx.PAIR.identities, comp)
    vs = validate_category(broken)
    assert [v.kind for v in vs] == ["missing composite"]
    assert vs[0].names == ("id_B", "f")


# one object, x∘x = y, x∘y = x, y∘x = y, y∘y = y:
# x∘(x∘x) = x∘y = x but (x∘x)∘x = y∘x = y
NON_ASSOC = FiniteCategory(
    ["*"],
    [("id", "*", "*"), ("x", "*", "*"), ("y", "*", "*")],
    {"*": "id"},
    {
        **{("id", m): m for m in ("id", "x", "y")},
        **{(m, "id"): m for m in ("x", "y")},
        ("x", "x"): "y",
        ("x", "y"): "x",
        ("y", "x"): "y",
        ("y", "y"): "y",
    },
)


def test_non_associative_table():
    raw = NON_ASSOC
    assert not raw_laws_hold(
        raw.objects, [(m.name, m.dom, m.cod) for m in raw.morphisms], raw.identities, raw.composition
    )
    vs = validate_category(NON_ASSOC)
    assert vs and {v.kind for v in vs} == {"associativity"}
    assert ("x", "x", "x") in [v.names for v in vs]


@pytest.mark.parametrize("name", sorted(CATEGORIES))
def test_fixtures_agree_with_raw_law_check(name):
    c = CATEGORIES[name]
    expected = raw_laws_hold(
        c.objects, [(m.name, m.dom, m.cod) for m in c.morphisms], c.identities, c.composition
    )
    assert expected
    assert validate_category(c) == []


def test_empty_category_is_valid():
    assert validate_category(FiniteCategory()) == []


def test_structural_violations():
    c = FiniteCategory(
        ["A", "A"],
        [("f", "A", "Z"), ("f", "A", "A")],
        {"A": "g", "Q": "f"},
        {("f", "f"): "f"},
    )
    ks = kinds(c)
    assert ks[:3] == ["duplicate object", "duplicate morphism", "unknown object"]
    assert "unknown morphism" in ks


def test_bad_identity_and_typing():
    c = FiniteCategory(
        ["A", "B"],
        [("id_A", "A", "A"), ("id_B", "B", "B"), ("f", "A", "B")],
        {"A": "f", "B": "id_B"},
        {
            ("id_A", "id_A"): "id_A",
            ("id_B", "id_B"): "id_B",
            ("f", "id_A"): "id_A",
            ("id_B", "f"): "f",
            ("id_A", "f"): "f",
        },
    )
    ks = kinds(c)
    assert "bad identity" in ks
    assert "composite typing" in ks
    assert "non-composable entry" in ks


def test_identity_law_violation():
    comp = dict(fx.PAIR.composition)
    comp[("f", "id_A")] = "f"
    # swap in a second A->B arrow so the law can fail while typing holds
    c = FiniteCategory(
        ["A", "B"],
        list(fx.PAIR.morphisms) + [("h", "A", "B")],
        fx.PAIR.identities,
        {**comp, ("id_B", "f"): "h", ("id_B", "h"): "h", ("h", "id_A"): "h"},
    )
    vs = validate_category(c)
    assert [v.kind for v in vs] == ["identity law"]
    assert vs[0].names == ("f",)


def test_violations_are_deterministic():
    c = NON_ASSOC
    assert validate_category(c) == validate_category(
        FiniteCategory(c.objects, c.morphisms, c.identities, dict(reversed(list(c.composition.items()))))
    )


def test_compose():
    assert compose(fx.PAIR, "id_B", "f") == "f"
    assert compose(CHAIN3, "m:2->3", "m:1->2") == "m:1->3"
    with pytest.raises(CategoryError, match="cod"):
        compose(fx.PAIR, "f", "id_B")
    with pytest.raises(CategoryError, match="unknown morphism"):
        compose(fx.PAIR, "nope", "f")


def test_identity_of():
    assert identity_of(fx.PAIR, "A") == "id_A"
    assert identity_of(CHAIN3, "2") == "m:2->2"
    with pytest.raises(CategoryError, match="unknown object"):
        identity_of(fx.PAIR, "Z")


def test_hom():
    assert hom(fx.PAIR, "A", "B") == ("f",)
    assert hom(fx.PAIR, "B", "A") == ()
    assert hom(fx.LOOP1, "*", "*") == ("id", "g")
    with pytest.raises(CategoryError):
        hom(fx.PAIR, "A", "Z")


@pytest.mark.parametrize("name", sorted(CATEGORIES))
def test_compose_typing_and_associativity(name):
    c = CATEGORIES[name]
    for g, f in composable_pairs(c):
        h = c.morphism(compose(c, g, f))
        assert (h.dom, h.cod) == (c.morphism(f).dom, c.morphism(g).cod)
    for g, f in composable_pairs(c):
        for h in (m.name for m in c.morphisms if m.dom == c.morphism(g).cod):
            assert compose(c, h, compose(c, g, f)) == compose(c, compose(c, h, g), f)


def test_require_valid_raises():
    with pytest.raises(CategoryError, match="not a category"):
        NON_ASSOC.require_valid()


def test_to_dict_roundtrip():
    c = fx.ISO2
    doc = c.to_dict()
    again = FiniteCategory(
        doc["objects"],
        [(m["name"], m["dom"], m["cod"]) for m in doc["morphisms"]],
        doc["identities"],
        {(g, f): h for g, f, h in doc["composition"]},
    )
    assert again == c
