"""Builtin catalog of space expressions with hand-derived expected properties.

Each entry records the four space-level flags and the radical-ideal count
(``None`` = infinite).  These values were worked out by hand from the leaf
rules and double-checked by the brute-force oracles in the verification
harness; they serve as fixtures independent of the decision procedures.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .poset import FinitePoset, build_poset
from .spaces import GOA, Dual, Finite, SpaceExpr, Sum


def chain(n: int) -> FinitePoset:
    """The n-element chain a0 <= a1 <= ... (a0 the closed point)."""
    labels = [f"a{i}" for i in range(n)]
    return build_poset(labels, [(labels[i], labels[i + 1]) for i in range(n - 1)])


def antichain(n: int) -> FinitePoset:
    return build_poset([f"a{i}" for i in range(n)], [])


def fan(k: int) -> FinitePoset:
    """One generic point over k closed points: a finite cut of the infinite leaf."""
    labels = [f"c{i}" for i in range(k)] + ["eta"]
    return build_poset(labels, [(f"c{i}", "eta") for i in range(k)])


def vee() -> FinitePoset:
    return build_poset(["a", "b", "c"], [("a", "c"), ("b", "c")])


def wedge() -> FinitePoset:
    return build_poset(["a", "b", "c"], [("a", "b"), ("a", "c")])


def diamond() -> FinitePoset:
    return build_poset(
        ["a", "b", "c", "d"], [("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")]
    )


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    space: SpaceExpr
    finite: bool
    noetherian: bool
    inverse_noetherian: bool
    weakly_noetherian: bool
    ideal_count: Optional[int]  # None = infinite


def _entry(name, space, finite, noeth, inv, wn, count) -> CatalogEntry:
    return CatalogEntry(name, space, finite, noeth, inv, wn, count)


BUILTIN_CATALOG: tuple[CatalogEntry, ...] = (
    _entry("empty", Finite(build_poset([], [])), True, True, True, True, 1),
    _entry("point", Finite(chain(1)), True, True, True, True, 2),
    _entry("chain2", Finite(chain(2)), True, True, True, True, 3),
    _entry("chain3", Finite(chain(3)), True, True, True, True, 4),
    _entry("chain4", Finite(chain(4)), True, True, True, True, 5),
    _entry("antichain2", Finite(antichain(2)), True, True, True, True, 4),
    _entry("antichain3", Finite(antichain(3)), True, True, True, True, 8),
    _entry("vee", Finite(vee()), True, True, True, True, 5),
    _entry("wedge", Finite(wedge()), True, True, True, True, 5),
    _entry("diamond", Finite(diamond()), True, True, True, True, 6),
    _entry("fan5", Finite(fan(5)), True, True, True, True, 33),
    _entry("cofan5", Dual(Finite(fan(5))), True, True, True, True, 33),
    _entry("goa", GOA, False, True, False, True, None),
    _entry("dual-goa", Dual(GOA), False, False, True, False, None),
    _entry("double-dual-goa", Dual(Dual(GOA)), False, True, False, True, None),
    _entry(
        "sum-goa-dual-goa", Sum((GOA, Dual(GOA))), False, False, False, False, None
    ),
    _entry(
        "sum-chain2-goa", Sum((Finite(chain(2)), GOA)), False, True, False, True, None
    ),
    _entry(
        "sum-antichain2-dual-goa",
        Sum((Finite(antichain(2)), Dual(GOA))),
        False, False, True, False, None,
    ),
    _entry(
        "sum-chain3-antichain3",
        Sum((Finite(chain(3)), Finite(antichain(3)))),
        True, True, True, True, 32,
    ),
    _entry(
        "dual-sum-chain3-goa",
        Dual(Sum((Finite(chain(3)), GOA))),
        False, False, True, False, None,
    ),
    _entry("sum-goa-goa", Sum((GOA, GOA)), False, True, False, True, None),
    _entry("dual-diamond", Dual(Finite(diamond())), True, True, True, True, 6),
    _entry(
        "nested-sum",
        Sum((Sum((Finite(chain(1)), GOA)), Dual(GOA))),
        False, False, False, False, None,
    ),
    _entry("sum-empty", Sum(()), True, True, True, True, 1),
)


def catalog_entry(name: str) -> CatalogEntry:
    for entry in BUILTIN_CATALOG:
        if entry.name == name:
            return entry
    raise KeyError(f"no catalog entry named {name!r}")
