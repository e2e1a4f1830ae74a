"""Built-in desk-scale corpus: generated in code so ids are reproducible."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParseError
from .fincat import FinCategory
from .reedy import ReedyCategory, truncated_simplex_category


def w3() -> ReedyCategory:
    """The poset 0 <= 2 <= 1 with g: 2->1 degree-lowering and f, g∘f raising."""
    objects = ("0", "1", "2")
    # ids: 0:id0 1:id1 2:id2 3:f(0->2) 4:g(2->1) 5:gf(0->1)
    morphisms = [
        (0, 0, "id0"),
        (1, 1, "id1"),
        (2, 2, "id2"),
        (0, 2, "f"),
        (2, 1, "g"),
        (0, 1, "gf"),
    ]
    identity = (0, 1, 2)
    compose = {
        (0, 0): 0,
        (1, 1): 1,
        (2, 2): 2,
        (3, 0): 3,
        (2, 3): 3,
        (4, 2): 4,
        (1, 4): 4,
        (5, 0): 5,
        (1, 5): 5,
        (4, 3): 5,
    }
    cat = FinCategory.build(objects, morphisms, identity, compose, name="W3")
    return ReedyCategory.build(cat, minus={0, 1, 2, 4}, plus={0, 1, 2, 3, 5})


def w3_prime() -> ReedyCategory:
    """W3 with a free parallel arrow h: 0->1 adjoined (counterexample target)."""
    objects = ("0", "1", "2")
    morphisms = [
        (0, 0, "id0"),
        (1, 1, "id1"),
        (2, 2, "id2"),
        (0, 2, "f"),
        (2, 1, "g"),
        (0, 1, "gf"),
        (0, 1, "h"),
    ]
    identity = (0, 1, 2)
    compose = {
        (0, 0): 0,
        (1, 1): 1,
        (2, 2): 2,
        (3, 0): 3,
        (2, 3): 3,
        (4, 2): 4,
        (1, 4): 4,
        (5, 0): 5,
        (1, 5): 5,
        (4, 3): 5,
        (6, 0): 6,
        (1, 6): 6,
    }
    cat = FinCategory.build(objects, morphisms, identity, compose, name="W3'")
    return ReedyCategory.build(cat, minus={0, 1, 2, 4}, plus={0, 1, 2, 3, 5, 6})


def discrete(k: int) -> ReedyCategory:
    objects = tuple(str(i) for i in range(k))
    morphisms = [(i, i, f"id{i}") for i in range(k)]
    identity = tuple(range(k))
    compose = {(i, i): i for i in range(k)}
    cat = FinCategory.build(objects, morphisms, identity, compose, name=f"disc({k})")
    ids = set(range(k))
    return ReedyCategory.build(cat, minus=ids, plus=ids)


def walking_iso() -> FinCategory:
    """Two objects, one isomorphism each way (localization probe)."""
    objects = ("a", "b")
    morphisms = [(0, 0, "ida"), (1, 1, "idb"), (0, 1, "j"), (1, 0, "j_inv")]
    identity = (0, 1)
    compose = {
        (0, 0): 0,
        (1, 1): 1,
        (2, 0): 2,
        (1, 2): 2,
        (3, 1): 3,
        (0, 3): 3,
        (3, 2): 0,
        (2, 3): 1,
    }
    return FinCategory.build(objects, morphisms, identity, compose, name="Iso")


def terminal() -> FinCategory:
    return FinCategory.build(("*",), [(0, 0, "id")], (0,), {(0, 0): 0}, name="1")


def w3_with_adjoined_iso() -> FinCategory:
    """W3 plus a fresh object 3 with an iso 1 ≅ 3 (finite free adjunction)."""
    objects = ("0", "1", "2", "3")
    # 0..5 as in w3; 6:id3 7:j(1->3) 8:j_inv(3->1) 9:jg(2->3) 10:jgf(0->3)
    morphisms = [
        (0, 0, "id0"),
        (1, 1, "id1"),
        (2, 2, "id2"),
        (0, 2, "f"),
        (2, 1, "g"),
        (0, 1, "gf"),
        (3, 3, "id3"),
        (1, 3, "j"),
        (3, 1, "j_inv"),
        (2, 3, "jg"),
        (0, 3, "jgf"),
    ]
    identity = (0, 1, 2, 6)
    compose = {
        (0, 0): 0,
        (1, 1): 1,
        (2, 2): 2,
        (6, 6): 6,
        (3, 0): 3,
        (2, 3): 3,
        (4, 2): 4,
        (1, 4): 4,
        (5, 0): 5,
        (1, 5): 5,
        (4, 3): 5,
        (7, 1): 7,
        (6, 7): 7,
        (8, 6): 8,
        (1, 8): 8,
        (8, 7): 1,
        (7, 8): 6,
        (9, 2): 9,
        (6, 9): 9,
        (7, 4): 9,
        (10, 0): 10,
        (6, 10): 10,
        (7, 5): 10,
        (9, 3): 10,
        (8, 9): 4,
        (8, 10): 5,
    }
    return FinCategory.build(objects, morphisms, identity, compose, name="W3+iso")


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    source: str  # "builtin" or "file"
    data: ReedyCategory


def builtin(name: str) -> CorpusEntry:
    table = {
        "W3": w3,
        "C'": w3_prime,
        "Cprime": w3_prime,
        "TS(0)": lambda: truncated_simplex_category(0),
        "TS(1)": lambda: truncated_simplex_category(1),
        "TS(2)": lambda: truncated_simplex_category(2),
        "TS(3)": lambda: truncated_simplex_category(3),
        "discrete(1)": lambda: discrete(1),
        "discrete(2)": lambda: discrete(2),
        "discrete(3)": lambda: discrete(3),
    }
    if name not in table:
        raise ParseError(
            f"unknown builtin {name!r}; choose from {sorted(table)}"
        )
    return CorpusEntry(name=name, source="builtin", data=table[name]())


BUILTIN_NAMES = (
    "W3",
    "C'",
    "TS(0)",
    "TS(1)",
    "TS(2)",
    "TS(3)",
    "discrete(1)",
    "discrete(2)",
    "discrete(3)",
)
