"""The arrow category: morphisms as objects, commuting squares as morphisms.

A square from ``f: A -> B`` to ``f2: A2 -> B2`` is a pair ``(a, b)`` with
``a: A -> A2``, ``b: B -> B2`` and ``f2∘a = b∘f``.  Squares compose
componentwise.  Two morphisms are *unitary equivalent* when they are
isomorphic as objects of the arrow category, and ``f`` is a *submorphism*
of ``g`` when ``g = b∘f∘a`` for some ``a``, ``b``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Mapping

from archcat.core import (
    CategoryError,
    Decision,
    FiniteCategory,
    Morphism,
    compose,
    hom,
)


@dataclass(frozen=True)
class Square:
    source: str
    target: str
    a: str
    b: str

    @property
    def name(self) -> str:
        return f"sq({self.source},{self.target},{self.a},{self.b})"

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class ArrowCategory:
    base: FiniteCategory
    derived: FiniteCategory
    squares: Mapping[str, Square] = field(default_factory=dict)


def is_commuting_square(c: FiniteCategory, f: str, f2: str, a: str, b: str) -> bool:
    mf, mf2, ma, mb = (c.morphism(n) for n in (f, f2, a, b))
    if ma.dom != mf.dom or ma.cod != mf2.dom:
        raise CategoryError(
            f"left side {a} is {ma.dom} -> {ma.cod},"
            f" expected {mf.dom} -> {mf2.dom}"
        )
    if mb.dom != mf.cod or mb.cod != mf2.cod:
        raise CategoryError(
            f"right side {b} is {mb.dom} -> {mb.cod},"
            f" expected {mf.cod} -> {mf2.cod}"
        )
    return compose(c, f2, a) == compose(c, b, f)


def squares(c: FiniteCategory, f: str, g: str) -> Iterator[Square]:
    """Commuting squares ``f -> g``, least ``(a, b)`` first."""
    mf, mg = c.morphism(f), c.morphism(g)
    for a in hom(c, mf.dom, mg.dom):
        ga = compose(c, g, a)
        for b in hom(c, mf.cod, mg.cod):
            if ga == compose(c, b, f):
                yield Square(f, g, a, b)


def identity_square(c: FiniteCategory, f: str) -> Square:
    m = c.morphism(f)
    return Square(f, f, c.identities[m.dom], c.identities[m.cod])


def compose_squares(c: FiniteCategory, s2: Square, s1: Square) -> Square:
    """``s2∘s1``: paste ``s1`` above ``s2`` and drop the middle arrow."""
    if s1.target != s2.source:
        raise CategoryError(f"cannot compose squares {s2}∘{s1}")
    return Square(s1.source, s2.target, compose(c, s2.a, s1.a), compose(c, s2.b, s1.b))


def build_arrow_category(c: FiniteCategory) -> ArrowCategory:
    c.require_valid()
    found: dict[str, Square] = {}
    for f in c.morphisms:
        for g in c.morphisms:
            for s in squares(c, f.name, g.name):
                found[s.name] = s

    by_source: dict[str, list[Square]] = {}
    for s in found.values():
        by_source.setdefault(s.source, []).append(s)
    composition = {}
    for s1 in found.values():
        for s2 in by_source.get(s1.target, ()):
            composition[(s2.name, s1.name)] = compose_squares(c, s2, s1).name

    derived = FiniteCategory(
        objects=c.names,
        morphisms=[Morphism(s.name, s.source, s.target) for s in found.values()],
        identities={m.name: identity_square(c, m.name).name for m in c.morphisms},
        composition=composition,
    )
    return ArrowCategory(base=c, derived=derived, squares=found)


def is_unitary_equivalent(c: FiniteCategory, f: str, g: str) -> Decision:
    """Search for mutually inverse squares ``f -> g`` and ``g -> f``.

    The witness is the pair ``(alpha, beta)`` least in the order of
    ``(alpha.a, alpha.b, beta.a, beta.b)`` declaration indices.
    """
    id_f, id_g = identity_square(c, f), identity_square(c, g)
    backwards = list(squares(c, g, f))
    for alpha in squares(c, f, g):
        for beta in backwards:
            if (
                compose_squares(c, beta, alpha) == id_f
                and compose_squares(c, alpha, beta) == id_g
            ):
                return Decision(True, witness=(alpha, beta))
    return Decision(False)


def inverse_of(c: FiniteCategory, m: str) -> str | None:
    mm = c.morphism(m)
    for n in hom(c, mm.cod, mm.dom):
        if (
            compose(c, n, m) == c.identities[mm.dom]
            and compose(c, m, n) == c.identities[mm.cod]
        ):
            return n
    return None


def is_iso_square_equivalent(c: FiniteCategory, f: str, g: str) -> Decision:
    """Shortcut test: some commuting square ``f -> g`` has invertible sides.

    Equivalent to :func:`is_unitary_equivalent`; kept separate so the two can
    be checked against each other.
    """
    for s in squares(c, f, g):
        if inverse_of(c, s.a) is not None and inverse_of(c, s.b) is not None:
            return Decision(True, witness=s)
    return Decision(False)


def is_submorphism(c: FiniteCategory, f: str, g: str) -> Decision:
    """Is ``g = b∘f∘a`` for some ``a: dom g -> dom f``, ``b: cod f -> cod g``?"""
    mf, mg = c.morphism(f), c.morphism(g)
    for a in hom(c, mg.dom, mf.dom):
        fa = compose(c, f, a)
        for b in hom(c, mf.cod, mg.cod):
            if compose(c, b, fa) == g:
                return Decision(True, witness=(a, b))
    return Decision(False)
