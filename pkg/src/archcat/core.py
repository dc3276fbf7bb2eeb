"""Finite categories given as explicit tables.

A category is a list of objects, a list of typed morphisms, an identity for
each object and a composition table.  Composition is written ``g∘f`` with
``f`` applied first; the table maps the pair ``(g, f)`` to the composite.

Objects and morphisms are referred to by name everywhere.  Declaration order
is significant: every search in this package scans morphisms in the order
they were declared and reports the first hit, so results are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Any, Iterable, Mapping


class CategoryError(ValueError):
    """Raised on ill-typed requests or when an operation needs a valid category."""


@dataclass(frozen=True)
class Morphism:
    name: str
    dom: str
    cod: str

    def __str__(self) -> str:
        return f"{self.name}: {self.dom} -> {self.cod}"


@dataclass(frozen=True)
class Violation:
    """One broken law, with the names involved."""

    kind: str
    names: tuple[str, ...]
    message: str

    def __str__(self) -> str:
        return f"{self.kind}: {self.message}"


@dataclass(frozen=True)
class Decision:
    """Outcome of an existential or universal check.

    ``witness`` is set when an existential succeeds, ``counterexample`` when a
    universal fails.  Truthiness follows ``holds``.
    """

    holds: bool
    witness: Any = None
    counterexample: Any = None

    def __bool__(self) -> bool:
        return self.holds


def _as_morphism(m: Morphism | Iterable[str]) -> Morphism:
    if isinstance(m, Morphism):
        return m
    name, dom, cod = m
    return Morphism(name, dom, cod)


@dataclass(frozen=True)
class FiniteCategory:
    """Explicit finite category.

    The constructor only normalises containers; it does not enforce the
    category laws, so malformed input can be built and then passed to
    :func:`validate_category`.  Operations that need a lawful category call
    :meth:`require_valid`.
    """

    objects: tuple[str, ...] = ()
    morphisms: tuple[Morphism, ...] = ()
    identities: Mapping[str, str] = field(default_factory=dict)
    composition: Mapping[tuple[str, str], str] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "objects", tuple(self.objects))
        object.__setattr__(
            self, "morphisms", tuple(_as_morphism(m) for m in self.morphisms)
        )
        object.__setattr__(self, "identities", dict(self.identities))
        object.__setattr__(
            self,
            "composition",
            {(g, f): h for (g, f), h in dict(self.composition).items()},
        )

    # lookup tables; safe to cache because instances are immutable

    @cached_property
    def _by_name(self) -> dict[str, Morphism]:
        table: dict[str, Morphism] = {}
        for m in self.morphisms:
            table.setdefault(m.name, m)
        return table

    @cached_property
    def _position(self) -> dict[str, int]:
        pos: dict[str, int] = {}
        for i, m in enumerate(self.morphisms):
            pos.setdefault(m.name, i)
        return pos

    @cached_property
    def _homs(self) -> dict[tuple[str, str], tuple[str, ...]]:
        homs: dict[tuple[str, str], list[str]] = {}
        for m in self.morphisms:
            homs.setdefault((m.dom, m.cod), []).append(m.name)
        return {k: tuple(v) for k, v in homs.items()}

    @cached_property
    def _object_set(self) -> frozenset[str]:
        return frozenset(self.objects)

    @cached_property
    def violations(self) -> tuple[Violation, ...]:
        return tuple(_violations(self))

    @cached_property
    def names(self) -> tuple[str, ...]:
        return tuple(m.name for m in self.morphisms)

    def morphism(self, name: str) -> Morphism:
        try:
            return self._by_name[name]
        except KeyError:
            raise CategoryError(f"unknown morphism {name!r}") from None

    def position(self, name: str) -> int:
        """Declaration index of a morphism; the package-wide search order."""
        self.morphism(name)
        return self._position[name]

    def has_object(self, name: str) -> bool:
        return name in self._object_set

    def is_valid(self) -> bool:
        return not self.violations

    def require_valid(self) -> None:
        if self.violations:
            shown = "; ".join(str(v) for v in self.violations[:3])
            more = len(self.violations) - 3
            if more > 0:
                shown += f"; and {more} more"
            raise CategoryError(f"not a category: {shown}")

    def to_dict(self) -> dict:
        """The category file document for this table."""
        return {
            "objects": list(self.objects),
            "morphisms": [
                {"name": m.name, "dom": m.dom, "cod": m.cod} for m in self.morphisms
            ],
            "identities": dict(self.identities),
            "composition": [[g, f, h] for (g, f), h in self.composition.items()],
        }


def _duplicates(names: Iterable[str]) -> list[str]:
    seen: set[str] = set()
    dups: list[str] = []
    for n in names:
        if n in seen and n not in dups:
            dups.append(n)
        seen.add(n)
    return dups


def _violations(c: FiniteCategory) -> Iterable[Violation]:
    for name in _duplicates(c.objects):
        yield Violation("duplicate object", (name,), f"object {name!r} declared twice")
    for name in c.objects:
        if not name:
            yield Violation("empty name", (), "object with empty name")
    for name in _duplicates(m.name for m in c.morphisms):
        yield Violation(
            "duplicate morphism", (name,), f"morphism {name!r} declared twice"
        )

    typed = True
    for m in c.morphisms:
        if not m.name:
            yield Violation("empty name", (), "morphism with empty name")
        for end in (m.dom, m.cod):
            if not c.has_object(end):
                typed = False
                yield Violation(
                    "unknown object",
                    (m.name, end),
                    f"morphism {m.name!r} refers to unknown object {end!r}",
                )

    for a in sorted(set(c.identities) - set(c.objects)):
        yield Violation(
            "unknown object", (a,), f"identity declared for unknown object {a!r}"
        )
    for a in c.objects:
        i = c.identities.get(a)
        if i is None:
            typed = False
            yield Violation("missing identity", (a,), f"object {a!r} has no identity")
        elif i not in c._by_name:
            typed = False
            yield Violation(
                "unknown morphism",
                (a, i),
                f"identity of {a!r} is unknown morphism {i!r}",
            )
        elif (c._by_name[i].dom, c._by_name[i].cod) != (a, a):
            typed = False
            yield Violation(
                "bad identity",
                (a, i),
                f"identity {i!r} of {a!r} is not an endomorphism of {a!r}",
            )

    entries = sorted(
        c.composition.items(),
        key=lambda kv: tuple(c._position.get(n, len(c.morphisms)) for n in kv[0])
        + kv[0],
    )
    for (g, f), h in entries:
        unknown = [n for n in (g, f, h) if n not in c._by_name]
        if unknown:
            typed = False
            yield Violation(
                "unknown morphism",
                (g, f, h),
                f"composition entry {g}∘{f} = {h} uses unknown {', '.join(unknown)}",
            )
            continue
        mg, mf, mh = c._by_name[g], c._by_name[f], c._by_name[h]
        if mf.cod != mg.dom:
            typed = False
            yield Violation(
                "non-composable entry",
                (g, f),
                f"{g}∘{f} defined although cod({f})={mf.cod} ≠ dom({g})={mg.dom}",
            )
        elif (mh.dom, mh.cod) != (mf.dom, mg.cod):
            typed = False
            yield Violation(
                "composite typing",
                (g, f, h),
                f"{g}∘{f} = {h} but {h} is {mh.dom} -> {mh.cod},"
                f" expected {mf.dom} -> {mg.cod}",
            )

    total = True
    for f in c.morphisms:
        for g in c.morphisms:
            if f.cod == g.dom and (g.name, f.name) not in c.composition:
                total = False
                yield Violation(
                    "missing composite", (g.name, f.name), f"{g.name}∘{f.name} undefined"
                )

    if not (typed and total) or _duplicates(m.name for m in c.morphisms):
        return

    comp = c.composition
    for f in c.morphisms:
        left = comp[(c.identities[f.cod], f.name)]
        right = comp[(f.name, c.identities[f.dom])]
        if left != f.name:
            yield Violation(
                "identity law",
                (f.name,),
                f"id_{f.cod}∘{f.name} = {left}, expected {f.name}",
            )
        if right != f.name:
            yield Violation(
                "identity law",
                (f.name,),
                f"{f.name}∘id_{f.dom} = {right}, expected {f.name}",
            )

    homs_from = {}
    for m in c.morphisms:
        homs_from.setdefault(m.dom, []).append(m)
    for f in c.morphisms:
        for g in homs_from.get(f.cod, ()):
            gf = comp[(g.name, f.name)]
            for h in homs_from.get(g.cod, ()):
                lhs = comp[(h.name, gf)]
                rhs = comp[(comp[(h.name, g.name)], f.name)]
                if lhs != rhs:
                    yield Violation(
                        "associativity",
                        (h.name, g.name, f.name),
                        f"{h.name}∘({g.name}∘{f.name}) = {lhs}"
                        f" but ({h.name}∘{g.name})∘{f.name} = {rhs}",
                    )


def validate_category(c: FiniteCategory) -> list[Violation]:
    """Every violated category law, in declaration order.  Empty means valid."""
    return list(c.violations)


def compose(c: FiniteCategory, g: str, f: str) -> str:
    """``g∘f``, applying ``f`` first."""
    mg, mf = c.morphism(g), c.morphism(f)
    if mf.cod != mg.dom:
        raise CategoryError(
            f"cannot compose {g}∘{f}: cod({f}) = {mf.cod} but dom({g}) = {mg.dom}"
        )
    try:
        return c.composition[(g, f)]
    except KeyError:
        raise CategoryError(f"composition table has no entry for {g}∘{f}") from None


def identity_of(c: FiniteCategory, a: str) -> str:
    if not c.has_object(a):
        raise CategoryError(f"unknown object {a!r}")
    try:
        return c.identities[a]
    except KeyError:
        raise CategoryError(f"object {a!r} has no identity") from None


def is_identity(c: FiniteCategory, v: str) -> bool:
    m = c.morphism(v)
    return m.dom == m.cod and c.identities.get(m.dom) == v


def hom(c: FiniteCategory, a: str, b: str) -> tuple[str, ...]:
    """Morphisms ``a -> b`` in declaration order."""
    for x in (a, b):
        if not c.has_object(x):
            raise CategoryError(f"unknown object {x!r}")
    return c._homs.get((a, b), ())


def composable_pairs(c: FiniteCategory) -> Iterable[tuple[str, str]]:
    """All ``(g, f)`` with ``cod(f) = dom(g)``, ordered by ``f`` then ``g``."""
    for f, g in product(c.morphisms, repeat=2):
        if f.cod == g.dom:
            yield g.name, f.name
