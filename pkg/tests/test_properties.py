from itertools import product

import hypothesis.strategies as st
from hypothesis import given, settings

from archcat.archimedean import (
    is_archimedean_bounded,
    is_archimedean_composition,
    is_bounded_class,
    nv_closure,
)
from archcat.arrow import (
    build_arrow_category,
    is_iso_square_equivalent,
    is_submorphism,
    is_unitary_equivalent,
)
from archcat.core import FiniteCategory, validate_category
from archcat.semigroup import associative_tables
from archcat.thin import (
    Preorder,
    close,
    is_bounded_preorder,
    is_discrete,
    morphism_name,
    submorphism_thin,
    to_category,
    unitary_equiv_thin,
)

from oracles import chain_composites_by_length


@st.composite
def preorders(draw, max_size=5):
    n = draw(st.integers(min_value=1, max_value=max_size))
    elems = [f"x{i}" for i in range(n)]
    pairs = draw(st.lists(st.tuples(st.sampled_from(elems), st.sampled_from(elems))))
    return close(Preorder(elems, pairs))


def _monoid_categories():
    out = []
    for n in (1, 2, 3):
        names = [f"m{i}" for i in range(n)]
        for table in associative_tables(names):
            units = [e for e in names if all(table[(e, x)] == x == table[(x, e)] for x in names)]
            if units:
                unit = units[0]
                out.append(
                    FiniteCategory(
                        ["*"],
                        [(m, "*", "*") for m in names],
                        {"*": unit},
                        {(g, f): table[(g, f)] for g, f in product(names, repeat=2)},
                    )
                )
    return out


MONOIDS = _monoid_categories()


@given(preorders())
@settings(max_examples=60, deadline=None)
def test_thin_deciders_match_closed_forms(p):
    c = to_category(p)
    assert validate_category(c) == []
    assert is_archimedean_composition(c).holds == is_bounded_preorder(p).holds
    assert is_archimedean_bounded(c).holds == is_discrete(p)
    for v in c.names:
        assert is_bounded_class(c, nv_closure(c, v).members).holds


@given(preorders(max_size=4), st.data())
@settings(max_examples=60, deadline=None)
def test_thin_relations_match_closed_forms(p, data):
    c = to_category(p)
    f = data.draw(st.sampled_from(p.pairs))
    g = data.draw(st.sampled_from(p.pairs))
    mf, mg = morphism_name(*f), morphism_name(*g)
    assert unitary_equiv_thin(p, f, g) == is_unitary_equivalent(c, mf, mg).holds
    assert submorphism_thin(p, f, g) == is_submorphism(c, mf, mg).holds


def test_monoid_corpus_size():
    expected = 0
    for n in (1, 2, 3):
        for values in product(range(n), repeat=n * n):
            op = lambda x, y: values[x * n + y]  # noqa: E731
            assoc = all(op(op(x, y), z) == op(x, op(y, z)) for x, y, z in product(range(n), repeat=3))
            unital = any(all(op(e, x) == x == op(x, e) for x in range(n)) for e in range(n))
            expected += assoc and unital
    assert len(MONOIDS) == expected


@given(st.sampled_from(MONOIDS))
@settings(max_examples=40, deadline=None)
def test_monoid_categories(c):
    assert validate_category(c) == []
    assert validate_category(build_arrow_category(c).derived) == []
    for f, g in product(c.names, repeat=2):
        assert is_unitary_equivalent(c, f, g).holds == is_iso_square_equivalent(c, f, g).holds
    for v in c.names:
        cl = nv_closure(c, v)
        assert set(cl.members) == chain_composites_by_length(c, cl.generators, 2 * len(c.names))
