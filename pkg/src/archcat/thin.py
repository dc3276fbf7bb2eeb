"""Preorders as thin categories.

A preorder ``x <= y`` gives a category with exactly one morphism
``m:x->y`` per related pair.  On such categories unitary equivalence,
submorphisms and both Archimedean conditions have closed forms, and the
``verify_*`` sweeps check the closed forms against the generic deciders
over every labeled preorder of a given size.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Iterator, Sequence

from archcat.archimedean import (
    is_archimedean_bounded,
    is_archimedean_composition,
    is_bounded_class,
    nv_closure,
)
from archcat.core import Decision, FiniteCategory, Violation

DEFAULT_CAP = 4


class PreorderError(ValueError):
    pass


def morphism_name(x: str, y: str) -> str:
    return f"m:{x}->{y}"


@dataclass(frozen=True)
class Preorder:
    """Elements and related pairs, both kept in declaration order."""

    elements: tuple[str, ...]
    pairs: tuple[tuple[str, str], ...]

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        object.__setattr__(
            self, "pairs", tuple(dict.fromkeys((x, y) for x, y in self.pairs))
        )

    @cached_property
    def rel(self) -> frozenset[tuple[str, str]]:
        return frozenset(self.pairs)

    def leq(self, x: str, y: str) -> bool:
        return (x, y) in self.rel

    def equiv(self, x: str, y: str) -> bool:
        return self.leq(x, y) and self.leq(y, x)

    def to_dict(self) -> dict:
        return {"elements": list(self.elements), "pairs": [list(p) for p in self.pairs]}


def validate_preorder(p: Preorder) -> list[Violation]:
    out: list[Violation] = []
    seen: set[str] = set()
    for x in p.elements:
        if x in seen:
            out.append(Violation("duplicate element", (x,), f"{x!r} declared twice"))
        seen.add(x)
    for x, y in p.pairs:
        for z in (x, y):
            if z not in seen:
                out.append(
                    Violation(
                        "unknown element", (x, y), f"pair ({x}, {y}) uses unknown {z!r}"
                    )
                )
    for x in p.elements:
        if not p.leq(x, x):
            out.append(Violation("reflexivity", (x,), f"({x}, {x}) missing"))
    for x, y, z in product(p.elements, repeat=3):
        if p.leq(x, y) and p.leq(y, z) and not p.leq(x, z):
            out.append(
                Violation(
                    "transitivity",
                    (x, y, z),
                    f"{x} <= {y} <= {z} but ({x}, {z}) missing",
                )
            )
    return out


def _require_valid(p: Preorder) -> None:
    problems = validate_preorder(p)
    if problems:
        raise PreorderError(
            "not a preorder: " + "; ".join(str(v) for v in problems[:3])
        )


def close(p: Preorder) -> Preorder:
    """Reflexive-transitive closure; declared pairs first, new ones appended."""
    elems = p.elements
    reach = {x: {x} for x in elems}
    for x, y in p.pairs:
        reach.setdefault(x, {x}).add(y)
    for k in elems:
        for i in elems:
            if k in reach[i]:
                reach[i] |= reach[k]
    added = [(x, y) for x in elems for y in elems if y in reach[x]]
    return Preorder(elems, p.pairs + tuple(added))


def to_category(p: Preorder) -> FiniteCategory:
    _require_valid(p)
    after: dict[str, list[str]] = {}
    for x, y in p.pairs:
        after.setdefault(x, []).append(y)
    composition = {
        (morphism_name(y, z), morphism_name(x, y)): morphism_name(x, z)
        for x, y in p.pairs
        for z in after.get(y, ())
    }
    return FiniteCategory(
        objects=p.elements,
        morphisms=[(morphism_name(x, y), x, y) for x, y in p.pairs],
        identities={x: morphism_name(x, x) for x in p.elements},
        composition=composition,
    )


def equiv_classes(p: Preorder) -> dict[str, str]:
    """Map each element to the first-declared element it is equivalent to."""
    reps: dict[str, str] = {}
    for x in p.elements:
        reps[x] = next(r for r in p.elements if p.equiv(r, x))
    return reps


def _require_pairs(p: Preorder, *pairs: tuple[str, str]) -> None:
    for pair in pairs:
        if tuple(pair) not in p.rel:
            raise PreorderError(f"{pair} is not a morphism of the preorder")


def unitary_equiv_thin(p: Preorder, f: tuple[str, str], g: tuple[str, str]) -> bool:
    _require_pairs(p, f, g)
    (a, b), (c, d) = f, g
    return p.equiv(a, c) and p.equiv(b, d)


def submorphism_thin(p: Preorder, f: tuple[str, str], g: tuple[str, str]) -> bool:
    """``(A, B)`` sits inside ``(C, D)`` iff ``C <= A`` and ``B <= D``."""
    _require_pairs(p, f, g)
    (a, b), (c, d) = f, g
    return p.leq(c, a) and p.leq(b, d)


def is_bounded_preorder(p: Preorder) -> Decision:
    """A least element ``U`` and a greatest element ``W`` (up to equivalence)."""
    for u in p.elements:
        if not all(p.leq(u, x) for x in p.elements):
            continue
        for w in p.elements:
            if all(p.leq(x, w) for x in p.elements):
                return Decision(True, witness=(u, w))
    return Decision(False)


def is_discrete(p: Preorder) -> bool:
    return all(x == y for x, y in p.pairs)


def enumerate_preorders(
    n: int, cap: int = DEFAULT_CAP, elements: Sequence[str] | None = None
) -> Iterator[Preorder]:
    """Every labeled preorder on ``n`` elements, each exactly once.

    Reflexive relations are generated in a fixed order (off-diagonal pairs
    as binary digits, first pair most significant) and filtered for
    transitivity.
    """
    if n < 0 or n > cap:
        raise PreorderError(f"size {n} outside 0..{cap}")
    if elements is None:
        elements = [str(i) for i in range(1, n + 1)]
    elems = tuple(elements)
    if len(elems) != n:
        raise PreorderError("element list does not match size")
    diag = tuple((x, x) for x in elems)
    off = [(x, y) for x in elems for y in elems if x != y]
    for bits in product((False, True), repeat=len(off)):
        chosen = {pair for pair, on in zip(off, bits) if on}
        if all(
            (x, z) in chosen
            for x, y in chosen
            for y2, z in chosen
            if y == y2 and x != z
        ):
            yield Preorder(elems, diag + tuple(pr for pr in off if pr in chosen))


@dataclass
class SweepReport:
    """Outcome of checking one property over an exhaustive family."""

    check: str
    size: int
    checked: int = 0
    passed: int = 0
    counterexample: dict | None = None
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.checked == self.passed

    def summary(self) -> str:
        verdict = "pass" if self.ok else "FAIL"
        return f"{self.check} size {self.size}: {self.passed}/{self.checked} {verdict}"

    def record(self, ok: bool, instance: dict) -> None:
        self.checked += 1
        if ok:
            self.passed += 1
        elif self.counterexample is None:
            self.counterexample = instance


def verify_prop1(n: int, cap: int = DEFAULT_CAP) -> SweepReport:
    """Composition-Archimedean agrees with boundedness on every preorder."""
    report = SweepReport("prop1", n)
    for i, p in enumerate(enumerate_preorders(n, cap)):
        generic = is_archimedean_composition(to_category(p))
        closed = is_bounded_preorder(p)
        report.record(
            generic.holds == closed.holds,
            {
                "index": i,
                "preorder": p.to_dict(),
                "generic": generic.holds,
                "bounded": closed.holds,
            },
        )
    return report


def verify_prop2(n: int, cap: int = DEFAULT_CAP) -> SweepReport:
    """Bounded-multiples Archimedean agrees with discreteness on every preorder.

    Also checks that the multiples of every morphism are bounded.
    """
    report = SweepReport("prop2", n)
    closures = 0
    for i, p in enumerate(enumerate_preorders(n, cap)):
        c = to_category(p)
        generic = is_archimedean_bounded(c)
        unbounded = []
        for v in c.names:
            closures += 1
            if not is_bounded_class(c, nv_closure(c, v).members):
                unbounded.append(v)
        report.record(
            generic.holds == is_discrete(p) and not unbounded,
            {
                "index": i,
                "preorder": p.to_dict(),
                "generic": generic.holds,
                "discrete": is_discrete(p),
                "unbounded_multiples": unbounded,
            },
        )
    report.details["closures_checked"] = closures
    return report

