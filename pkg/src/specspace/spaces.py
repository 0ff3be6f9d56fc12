"""The expression algebra of spectral spaces.

Four constructors close the supported class:

* ``Finite(poset)`` -- any finite spectral space via its specialization order;
* ``GenericOverAntichain()`` -- one generic point ``eta`` over a countably
  infinite antichain of closed points ``c0, c1, ...``; opens are the empty
  set and the cofinite sets containing ``eta`` (the shape of the prime
  spectrum of the integers);
* ``Dual(e)`` -- the inverse space: same points, opens generated by
  complements of quasi-compact opens of ``e``;
* ``Sum(parts)`` -- finite disjoint union.

``normalize`` rewrites any expression so that ``Dual`` sits directly on a
``GenericOverAntichain`` leaf and nowhere else; structural equality of
normal forms is the package's notion of "the same space".
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Union

from .poset import FinitePoset, build_poset


@dataclass(frozen=True)
class Finite:
    poset: FinitePoset


@dataclass(frozen=True)
class GenericOverAntichain:
    pass


@dataclass(frozen=True)
class Dual:
    inner: "SpaceExpr"


@dataclass(frozen=True)
class Sum:
    summands: tuple["SpaceExpr", ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "summands", tuple(self.summands))


SpaceExpr = Union[Finite, GenericOverAntichain, Dual, Sum]

GOA = GenericOverAntichain()


def normalize(e: SpaceExpr) -> SpaceExpr:
    """Denotation-preserving normal form; idempotent.

    Double duals cancel, duals of finite leaves become opposite posets,
    duals of sums are pushed into the summands.
    """
    match e:
        case Finite() | GenericOverAntichain():
            return e
        case Sum(parts):
            return Sum(tuple(normalize(p) for p in parts))
        case Dual(inner):
            n = normalize(inner)
            match n:
                case Finite(p):
                    return Finite(p.opposite)
                case GenericOverAntichain():
                    return Dual(n)
                case Dual(core):
                    return core
                case Sum(parts):
                    return Sum(tuple(normalize(Dual(p)) for p in parts))
    raise TypeError(f"not a space expression: {e!r}")


def dual(e: SpaceExpr) -> SpaceExpr:
    """The inverse space, in normal form."""
    return normalize(Dual(e))


def is_normalized(e: SpaceExpr) -> bool:
    match e:
        case Finite() | GenericOverAntichain():
            return True
        case Dual(GenericOverAntichain()):
            return True
        case Dual():
            return False
        case Sum(parts):
            return all(is_normalized(p) for p in parts)
    return False


def is_finite_space(e: SpaceExpr) -> bool:
    """Whether the denoted space has finitely many points."""
    match normalize(e):
        case Finite():
            return True
        case Sum(parts):
            return all(is_finite_space(p) for p in parts)
        case _:
            return False


def leaves(e: SpaceExpr) -> Iterator[tuple[tuple[int, ...], SpaceExpr]]:
    """Yield ``(path, leaf)`` for each leaf of the normalized expression.

    A leaf is ``Finite``, ``GenericOverAntichain`` or
    ``Dual(GenericOverAntichain)``; the path records summand indices.
    """
    e = normalize(e)

    def walk(x: SpaceExpr, path: tuple[int, ...]) -> Iterator[tuple[tuple[int, ...], SpaceExpr]]:
        match x:
            case Sum(parts):
                for i, p in enumerate(parts):
                    yield from walk(p, path + (i,))
            case _:
                yield path, x

    return walk(e, ())


def leaf_at(e: SpaceExpr, path: tuple[int, ...]) -> SpaceExpr:
    x = normalize(e)
    for i in path:
        if not isinstance(x, Sum):
            raise ValueError(f"no summand at path {path}")
        x = x.summands[i]
    return x


@dataclass(frozen=True)
class PointClass:
    """A symmetry class of points of a normalized space expression.

    Finite leaves contribute one class per element; an infinite leaf
    contributes the class of its generic point and the class of its closed
    points (all point-level predicates used here are constant on the
    latter, with ``c0`` the designated representative).
    """

    space: SpaceExpr
    path: tuple[int, ...]
    kind: str  # "element" | "generic" | "closed"
    element: int = -1

    def leaf(self) -> SpaceExpr:
        return leaf_at(self.space, self.path)

    def describe(self) -> str:
        where = f"summand {'.'.join(map(str, self.path))}: " if self.path else ""
        if self.kind == "element":
            leaf = self.leaf()
            assert isinstance(leaf, Finite)
            return f"{where}point {leaf.poset.labels[self.element]!r}"
        if self.kind == "generic":
            return f"{where}generic point eta"
        return f"{where}closed-point class (representative c0)"


def point_classes(e: SpaceExpr) -> tuple[PointClass, ...]:
    """The point classes of ``e``, in leaf order."""
    e = normalize(e)
    out: list[PointClass] = []
    for path, leaf in leaves(e):
        match leaf:
            case Finite(p):
                out.extend(
                    PointClass(e, path, "element", i) for i in range(p.n)
                )
            case GenericOverAntichain() | Dual(GenericOverAntichain()):
                out.append(PointClass(e, path, "generic"))
                out.append(PointClass(e, path, "closed"))
    return tuple(out)


def amalgamated_poset(e: SpaceExpr) -> FinitePoset:
    """The single finite poset denoting the same space as a finite expression.

    Labels of nested summands are prefixed with their path so they stay
    distinct.  Only defined when the expression denotes a finite space.
    """
    e = normalize(e)
    if not is_finite_space(e):
        raise ValueError("amalgamated poset only exists for finite spaces")
    labels: list[str] = []
    covers: list[tuple[str, str]] = []
    lvs = list(leaves(e))
    multi = len(lvs) > 1
    for path, leaf in lvs:
        assert isinstance(leaf, Finite)
        prefix = ".".join(map(str, path)) + "." if multi else ""
        labels.extend(prefix + lab for lab in leaf.poset.labels)
        covers.extend(
            (prefix + leaf.poset.labels[i], prefix + leaf.poset.labels[j])
            for i, j in leaf.poset.covers
        )
    return build_poset(labels, covers)


def describe_space(e: SpaceExpr) -> str:
    match e:
        case Finite(p):
            return f"finite poset on {p.n} element(s)"
        case GenericOverAntichain():
            return "generic point over an infinite antichain of closed points"
        case Dual(inner):
            return f"dual of ({describe_space(inner)})"
        case Sum(parts):
            if not parts:
                return "empty sum"
            return "sum of [" + "; ".join(describe_space(p) for p in parts) + "]"
    return repr(e)
