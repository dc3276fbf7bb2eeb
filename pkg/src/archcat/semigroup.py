"""Finite partially ordered semigroups with a designated zero.

The zero is only a reference point for the order: the positive cone is
``{x | zero <= x}`` and the Archimedean conditions ask whether ``x == zero``.
It need not be neutral for ``+``, and ``+`` need not be monotone unless
``monotone=True`` is requested.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import permutations, product
from typing import Iterator, Mapping, Sequence

from archcat.core import Decision, Violation
from archcat.thin import SweepReport, enumerate_preorders

DEFAULT_CAP = 3
ELEMENT_NAMES = "abcdefgh"


class SemigroupError(ValueError):
    pass


@dataclass(frozen=True)
class OrderedSemigroup:
    elements: tuple[str, ...]
    add: Mapping[tuple[str, str], str]
    leq: tuple[tuple[str, str], ...]
    zero: str

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        object.__setattr__(self, "add", dict(self.add))
        object.__setattr__(self, "leq", tuple(dict.fromkeys(map(tuple, self.leq))))

    @cached_property
    def _leq(self) -> frozenset[tuple[str, str]]:
        return frozenset(self.leq)

    def le(self, x: str, y: str) -> bool:
        return (x, y) in self._leq

    def plus(self, x: str, y: str) -> str:
        try:
            return self.add[(x, y)]
        except KeyError:
            raise SemigroupError(f"{x} + {y} undefined") from None

    def is_total(self) -> bool:
        return all(self.le(x, y) or self.le(y, x) for x, y in product(self.elements, repeat=2))

    def zero_is_neutral(self) -> bool:
        return all(
            self.add.get((self.zero, x)) == x and self.add.get((x, self.zero)) == x
            for x in self.elements
        )

    def to_dict(self) -> dict:
        return {
            "elements": list(self.elements),
            "add": [[x, y, z] for (x, y), z in self.add.items()],
            "leq": [list(p) for p in self.leq],
            "zero": self.zero,
        }


def validate_semigroup(s: OrderedSemigroup, monotone: bool = False) -> list[Violation]:
    out: list[Violation] = []
    elems = s.elements
    known = set(elems)
    if len(known) != len(elems):
        out.append(Violation("duplicate element", (), "element declared twice"))
    if s.zero not in known:
        out.append(Violation("unknown element", (s.zero,), f"zero {s.zero!r} unknown"))
    for (x, y), z in s.add.items():
        bad = [n for n in (x, y, z) if n not in known]
        if bad:
            out.append(
                Violation("unknown element", (x, y, z), f"{x} + {y} = {z} uses {bad[0]!r}")
            )
    for x, y in s.leq:
        if x not in known or y not in known:
            out.append(Violation("unknown element", (x, y), f"order pair ({x}, {y})"))
    total = True
    for x, y in product(elems, repeat=2):
        if (x, y) not in s.add:
            total = False
            out.append(Violation("missing sum", (x, y), f"{x} + {y} undefined"))
    if total and not out:
        for x, y, z in product(elems, repeat=3):
            lhs = s.add[(s.add[(x, y)], z)]
            rhs = s.add[(x, s.add[(y, z)])]
            if lhs != rhs:
                out.append(
                    Violation(
                        "associativity",
                        (x, y, z),
                        f"({x}+{y})+{z} = {lhs} but {x}+({y}+{z}) = {rhs}",
                    )
                )

    for x in elems:
        if not s.le(x, x):
            out.append(Violation("reflexivity", (x,), f"({x}, {x}) missing"))
    for x, y, z in product(elems, repeat=3):
        if s.le(x, y) and s.le(y, z) and not s.le(x, z):
            out.append(
                Violation("transitivity", (x, y, z), f"{x} <= {y} <= {z} but not {x} <= {z}")
            )
    for i, x in enumerate(elems):
        for y in elems[i + 1 :]:
            if s.le(x, y) and s.le(y, x):
                out.append(Violation("antisymmetry", (x, y), f"{x} <= {y} <= {x}"))

    if total and s.zero in known:
        pos = [x for x in elems if s.le(s.zero, x)]
        for x, y in product(pos, repeat=2):
            z = s.add.get((x, y))
            if z in known and not s.le(s.zero, z):
                out.append(
                    Violation(
                        "positivity", (x, y), f"{x}, {y} positive but {x} + {y} = {z} is not"
                    )
                )
        if monotone:
            for x, y, z in product(elems, repeat=3):
                if s.le(x, y) and not (
                    s.le(s.add[(x, z)], s.add[(y, z)]) and s.le(s.add[(z, x)], s.add[(z, y)])
                ):
                    out.append(
                        Violation(
                            "monotonicity", (x, y, z), f"{x} <= {y} not preserved by adding {z}"
                        )
                    )
    return out


def positives(s: OrderedSemigroup) -> tuple[str, ...]:
    return tuple(x for x in s.elements if s.le(s.zero, x))


@dataclass(frozen=True)
class MultipleSet:
    base: str
    members: tuple[str, ...]


def multiples(s: OrderedSemigroup, x: str) -> MultipleSet:
    """``x, x+x, x+x+x, ...`` until a value repeats."""
    if x not in s.elements:
        raise SemigroupError(f"unknown element {x!r}")
    seen = [x]
    m = x
    while True:
        m = s.plus(m, x)
        if m in seen:
            return MultipleSet(x, tuple(seen))
        seen.append(m)


def _bounded_above(s: OrderedSemigroup, xs: Sequence[str], candidates: Sequence[str]) -> str | None:
    for y in candidates:
        if all(s.le(m, y) for m in xs):
            return y
    return None


def archimedean_unit(s: OrderedSemigroup) -> Decision:
    """Some positive ``u`` has, for every ``x``, a multiple ``n u >= x``."""
    for u in positives(s):
        mult = multiples(s, u).members
        if all(any(s.le(x, m) for m in mult) for x in s.elements):
            return Decision(True, witness=u)
    return Decision(False)


def archimedean_bounded_multiples(s: OrderedSemigroup, bound_in_E: bool = False) -> Decision:
    """Every positive ``x`` with multiples bounded above equals ``zero``.

    Bounds are searched among the positives, or among all elements when
    ``bound_in_E`` is set.
    """
    candidates = s.elements if bound_in_E else positives(s)
    for x in positives(s):
        if x == s.zero:
            continue
        bound = _bounded_above(s, multiples(s, x).members, candidates)
        if bound is not None:
            return Decision(False, counterexample=x)
    return Decision(True)


def condition_bounded_iff_zero(s: OrderedSemigroup, bound_in_E: bool = False) -> bool:
    """The two-sided form: ``x == zero`` exactly when its multiples are bounded."""
    candidates = s.elements if bound_in_E else positives(s)
    return all(
        (x == s.zero) == (_bounded_above(s, multiples(s, x).members, candidates) is not None)
        for x in positives(s)
    )


def check_13_14_equiv(s: OrderedSemigroup, bound_in_E: bool = False) -> bool:
    return condition_bounded_iff_zero(s, bound_in_E) == archimedean_bounded_multiples(
        s, bound_in_E
    ).holds


def associative_tables(elements: Sequence[str]) -> Iterator[dict[tuple[str, str], str]]:
    """Every associative operation on ``elements``, row-major in a fixed order."""
    keys = list(product(elements, repeat=2))
    for values in product(elements, repeat=len(keys)):
        table = dict(zip(keys, values))
        if all(
            table[(table[(x, y)], z)] == table[(x, table[(y, z)])]
            for x, y, z in product(elements, repeat=3)
        ):
            yield table


def total_orders(elements: Sequence[str]) -> Iterator[tuple[tuple[str, str], ...]]:
    for perm in permutations(elements):
        yield tuple((perm[i], perm[j]) for i in range(len(perm)) for j in range(i, len(perm)))


def partial_orders(elements: Sequence[str]) -> Iterator[tuple[tuple[str, str], ...]]:
    for p in enumerate_preorders(len(elements), cap=len(elements), elements=elements):
        if all(x == y or not p.leq(y, x) for x, y in p.pairs):
            yield p.pairs


def instances(
    n: int, orders: str = "total", cap: int = DEFAULT_CAP, tables=None
) -> Iterator[OrderedSemigroup]:
    """All valid ordered semigroups on ``n`` labeled elements.

    Associative tables x orders x zero choices, keeping those closed under
    positivity.
    """
    elems = _labels(n, cap)
    if tables is None:
        tables = associative_tables(elems)
    order_list = list(total_orders(elems) if orders == "total" else partial_orders(elems))
    for table in tables:
        for leq in order_list:
            for zero in elems:
                s = OrderedSemigroup(elems, table, leq, zero)
                pos = positives(s)
                if all(s.le(zero, table[(x, y)]) for x, y in product(pos, repeat=2)):
                    yield s


def _labels(n: int, cap: int) -> tuple[str, ...]:
    if n < 1 or n > cap:
        raise SemigroupError(f"size {n} outside 1..{cap}")
    return tuple(ELEMENT_NAMES[:n])


def verify_lemma1(n: int, cap: int = DEFAULT_CAP, bound_in_E: bool = False) -> SweepReport:
    """Over every totally ordered instance, bounded multiples imply a unit.

    Each instance must also have the one-sided and two-sided forms of the
    bounded-multiples condition agree.
    """
    tables = list(associative_tables(_labels(n, cap)))
    report = SweepReport("lemma1", n)
    report.details.update(tables=len(tables), neutral_zero=0, equiv_failures=0)
    for i, s in enumerate(instances(n, "total", cap, tables)):
        bounded = archimedean_bounded_multiples(s, bound_in_E).holds
        implication = not bounded or archimedean_unit(s).holds
        equiv = check_13_14_equiv(s, bound_in_E)
        report.details["neutral_zero"] += s.zero_is_neutral()
        report.details["equiv_failures"] += not equiv
        report.record(
            implication and equiv,
            {
                "index": i,
                "semigroup": s.to_dict(),
                "implication": implication,
                "equivalence": equiv,
            },
        )
    return report
