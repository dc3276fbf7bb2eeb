"""Small named structures used in the tests and the README."""

from archcat.core import FiniteCategory
from archcat.semigroup import OrderedSemigroup
from archcat.thin import Preorder


def _one_object(names, table, obj="*"):
    """Category with one object; ``names[0]`` is the identity."""
    ident = names[0]
    comp = {}
    for g in names:
        for f in names:
            if g == ident:
                comp[(g, f)] = f
            elif f == ident:
                comp[(g, f)] = g
            else:
                comp[(g, f)] = table[(g, f)]
    return FiniteCategory([obj], [(n, obj, obj) for n in names], {obj: ident}, comp)


PAIR = FiniteCategory(
    objects=["A", "B"],
    morphisms=[("id_A", "A", "A"), ("id_B", "B", "B"), ("f", "A", "B")],
    identities={"A": "id_A", "B": "id_B"},
    composition={
        ("id_A", "id_A"): "id_A",
        ("id_B", "id_B"): "id_B",
        ("f", "id_A"): "f",
        ("id_B", "f"): "f",
    },
)

# g∘g = id
LOOP1 = _one_object(["id", "g"], {("g", "g"): "id"})

# cyclic group of order 3
Z3 = _one_object(
    ["e", "r", "r2"],
    {("r", "r"): "r2", ("r", "r2"): "e", ("r2", "r"): "e", ("r2", "r2"): "r"},
)

# e∘e = e
IDEMPOTENT = _one_object(["id", "e"], {("e", "e"): "e"})

# two parallel arrows A ⇉ B
PARALLEL = FiniteCategory(
    objects=["A", "B"],
    morphisms=[("id_A", "A", "A"), ("id_B", "B", "B"), ("p", "A", "B"), ("q", "A", "B")],
    identities={"A": "id_A", "B": "id_B"},
    composition={
        ("id_A", "id_A"): "id_A",
        ("id_B", "id_B"): "id_B",
        ("p", "id_A"): "p",
        ("q", "id_A"): "q",
        ("id_B", "p"): "p",
        ("id_B", "q"): "q",
    },
)

# A ≅ B via i and j
ISO2 = FiniteCategory(
    objects=["A", "B"],
    morphisms=[("id_A", "A", "A"), ("id_B", "B", "B"), ("i", "A", "B"), ("j", "B", "A")],
    identities={"A": "id_A", "B": "id_B"},
    composition={
        ("id_A", "id_A"): "id_A",
        ("id_B", "id_B"): "id_B",
        ("i", "id_A"): "i",
        ("id_B", "i"): "i",
        ("j", "id_B"): "j",
        ("id_A", "j"): "j",
        ("j", "i"): "id_A",
        ("i", "j"): "id_B",
    },
)

EMPTY = FiniteCategory()

CHAIN3_PRE = Preorder(
    ["1", "2", "3"],
    [("1", "1"), ("2", "2"), ("3", "3"), ("1", "2"), ("2", "3"), ("1", "3")],
)
DISC2_PRE = Preorder(["1", "2"], [("1", "1"), ("2", "2")])
INDISC2_PRE = Preorder(["A", "B"], [("A", "A"), ("B", "B"), ("A", "B"), ("B", "A")])
SINGLE_PRE = Preorder(["x"], [("x", "x")])

TRUNC3 = OrderedSemigroup(
    elements=["0", "1", "2"],
    add={(str(x), str(y)): str(min(x + y, 2)) for x in range(3) for y in range(3)},
    leq=[(str(x), str(y)) for x in range(3) for y in range(3) if x <= y],
    zero="0",
)

NEG = OrderedSemigroup(
    elements=["a", "0"],
    add={("a", "a"): "a", ("a", "0"): "a", ("0", "a"): "a", ("0", "0"): "0"},
    leq=[("a", "a"), ("0", "0"), ("a", "0")],
    zero="0",
)

SINGLETON = OrderedSemigroup(["0"], {("0", "0"): "0"}, [("0", "0")], "0")
