"""Closures of unit multiples and the two Archimedean deciders.

For a morphism ``v`` the *multiples* of ``v`` are all composites
``v_n∘...∘v_1`` (``n >= 1``) of composable chains whose factors are each
unitary equivalent to ``v``.  In a finite category that set is the
reachability closure of the equivalents of ``v`` under post-composition
with another equivalent, so both deciders below are exact.

* :func:`is_archimedean_composition`: some unit ``v`` has multiples that
  dominate every morphism via the submorphism relation.
* :func:`is_archimedean_bounded`: a morphism whose multiples are bounded
  must be an identity.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from archcat.arrow import is_submorphism, is_unitary_equivalent
from archcat.core import Decision, FiniteCategory, compose, is_identity


@dataclass(frozen=True)
class ArchReport(Decision):
    stats: Mapping[str, int] = field(default_factory=dict)


@dataclass(frozen=True)
class NvClosure:
    unit: str
    generators: tuple[str, ...]
    members: tuple[str, ...]


def unit_equivalents(c: FiniteCategory, v: str) -> tuple[str, ...]:
    c.morphism(v)
    return tuple(g for g in c.names if is_unitary_equivalent(c, g, v))


def _closure(c: FiniteCategory, v: str, generators: tuple[str, ...]) -> NvClosure:
    gens_from: dict[str, list[str]] = {}
    for w in generators:
        gens_from.setdefault(c.morphism(w).dom, []).append(w)
    seen = set(generators)
    queue = deque(generators)
    while queue:
        m = queue.popleft()
        for w in gens_from.get(c.morphism(m).cod, ()):
            h = compose(c, w, m)
            if h not in seen:
                seen.add(h)
                queue.append(h)
    members = tuple(sorted(seen, key=c.position))
    return NvClosure(unit=v, generators=generators, members=members)


def nv_closure(c: FiniteCategory, v: str) -> NvClosure:
    return _closure(c, v, unit_equivalents(c, v))


def _equivalence_classes(c: FiniteCategory) -> dict[str, tuple[str, ...]]:
    # Pairwise definitional check; no equivalence-relation laws assumed.
    return {v: unit_equivalents(c, v) for v in c.names}


def _check_members(c: FiniteCategory, ms: Iterable[str]) -> tuple[str, ...]:
    ms = tuple(dict.fromkeys(ms))
    for m in ms:
        c.morphism(m)
    return tuple(sorted(ms, key=c.position))


def is_bounded_class(c: FiniteCategory, ms: Iterable[str]) -> ArchReport:
    """Is there one morphism of which every member of ``ms`` is a submorphism?

    On failure the counterexample is the first member left uncovered by the
    candidate that covers the most members.
    """
    ms = _check_members(c, ms)
    best: list[str] | None = None
    examined = 0
    for f in c.names:
        examined += 1
        covered = [m for m in ms if is_submorphism(c, m, f)]
        if len(covered) == len(ms):
            return ArchReport(True, witness=f, stats={"candidates": examined})
        if best is None or len(covered) > len(best):
            best = covered
    counterexample = None
    if best is not None:
        counterexample = next(m for m in ms if m not in best)
    return ArchReport(False, counterexample=counterexample, stats={"candidates": examined})


def is_archimedean_composition(c: FiniteCategory) -> ArchReport:
    """Decide whether one unit's multiples dominate every morphism."""
    c.require_valid()
    names = c.names
    classes = _equivalence_classes(c)
    # covers[m] = morphisms that are submorphisms of m
    covers = {m: {f for f in names if is_submorphism(c, f, m)} for m in names}

    best_count, best_missing = -1, None
    examined = 0
    for v in names:
        examined += 1
        closure = _closure(c, v, classes[v])
        covered = set().union(*(covers[m] for m in closure.members))
        if len(covered) == len(names):
            return ArchReport(
                True,
                witness=v,
                stats={"units": examined, "closure_size": len(closure.members)},
            )
        if len(covered) > best_count:
            best_count = len(covered)
            best_missing = next(f for f in names if f not in covered)
    return ArchReport(
        False,
        counterexample=best_missing,
        stats={"units": examined, "best_coverage": max(best_count, 0)},
    )


def is_archimedean_bounded(c: FiniteCategory) -> ArchReport:
    """Decide whether every morphism with bounded multiples is an identity."""
    c.require_valid()
    classes = _equivalence_classes(c)
    examined = bounded = 0
    for v in c.names:
        examined += 1
        closure = _closure(c, v, classes[v])
        if not is_bounded_class(c, closure.members):
            continue
        bounded += 1
        if not is_identity(c, v):
            return ArchReport(
                False,
                counterexample=v,
                stats={"units": examined, "bounded": bounded},
            )
    return ArchReport(True, stats={"units": examined, "bounded": bounded})

