"""Decision procedures for the point-set notions used throughout.

All decisions are exact and per-leaf:

=====================  =========================  ==========================
notion                 generic-over-antichain     its dual
=====================  =========================  ==========================
open                   empty, or cofinite + eta   no eta, or whole
quasi-compact open     every open                 empty, finite, or whole
Thomason               no eta, or whole           empty, or cofinite + eta
constructible          finite-no-eta or           same (patch topology is
                       cofinite-with-eta          dual-invariant)
=====================  =========================  ==========================

On finite leaves: open = up-set, Thomason = down-set, everything is
constructible.  Sums decide component-wise.

A subset is *weakly visible* when it is the intersection of a Thomason set
with the complement of another.  Two independent procedures decide this: a
witness search over Thomason pairs and the locally-closed-in-the-dual test;
``is_weakly_visible`` runs both and treats disagreement as an internal bug.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from .poset import FiniteSubset
from .spaces import (
    Dual,
    Finite,
    GenericOverAntichain,
    PointClass,
    SpaceExpr,
    Sum,
    dual,
    is_finite_space,
    leaves,
    normalize,
    point_classes,
)
from .subsets import (
    GOA_WHOLE,
    CarrierMismatchError,
    GoaSet,
    SetNode,
    SumSet,
    SymbolicSubset,
    class_singleton,
    embed_at,
)


class InternalInconsistencyError(RuntimeError):
    """Two routes that must agree did not; signals an implementation bug."""


def _leaf_pairs(space: SpaceExpr, node: SetNode):
    match space, node:
        case Sum(parts), SumSet(sub):
            for p, s in zip(parts, sub):
                yield from _leaf_pairs(p, s)
        case _:
            yield space, node


def _goa_is_open(dualized: bool, s: GoaSet) -> bool:
    if dualized:
        return (not s.generic) or s.is_whole
    return s.is_empty or (s.cofinite and s.generic)


def _leaf_is_open(leaf: SpaceExpr, node: SetNode) -> bool:
    match leaf:
        case Finite(p):
            assert isinstance(node, FiniteSubset)
            return p.is_up_mask(node.mask)
        case GenericOverAntichain():
            assert isinstance(node, GoaSet)
            return _goa_is_open(False, node)
        case Dual(GenericOverAntichain()):
            assert isinstance(node, GoaSet)
            return _goa_is_open(True, node)
    raise CarrierMismatchError("space not normalized")


def is_open(s: SymbolicSubset) -> bool:
    return all(_leaf_is_open(l, n) for l, n in _leaf_pairs(s.space, s.node))


def is_closed(s: SymbolicSubset) -> bool:
    return is_open(s.complement())


def _leaf_is_qc_open(leaf: SpaceExpr, node: SetNode) -> bool:
    match leaf:
        case Finite(p):
            assert isinstance(node, FiniteSubset)
            return p.is_up_mask(node.mask)
        case GenericOverAntichain():
            # every open cover member containing eta is already cofinite
            assert isinstance(node, GoaSet)
            return _goa_is_open(False, node)
        case Dual(GenericOverAntichain()):
            # quasi-compact opens of the dual = complements of quasi-compact
            # opens of the original carrier
            assert isinstance(node, GoaSet)
            return _goa_is_open(False, node.complement())
    raise CarrierMismatchError("space not normalized")


def is_quasi_compact_open(s: SymbolicSubset) -> bool:
    return all(_leaf_is_qc_open(l, n) for l, n in _leaf_pairs(s.space, s.node))


def _leaf_is_constructible(leaf: SpaceExpr, node: SetNode) -> bool:
    match leaf:
        case Finite():
            return True
        case GenericOverAntichain() | Dual(GenericOverAntichain()):
            assert isinstance(node, GoaSet)
            return (not node.cofinite and not node.generic) or (
                node.cofinite and node.generic
            )
    raise CarrierMismatchError("space not normalized")


def is_constructible(s: SymbolicSubset) -> bool:
    """Membership in the Boolean algebra generated by quasi-compact opens."""
    return all(_leaf_is_constructible(l, n) for l, n in _leaf_pairs(s.space, s.node))


def _leaf_is_gen_closed(leaf: SpaceExpr, node: SetNode) -> bool:
    match leaf:
        case Finite(p):
            assert isinstance(node, FiniteSubset)
            return p.is_up_mask(node.mask)
        case GenericOverAntichain():
            assert isinstance(node, GoaSet)
            return node.is_empty or node.generic
        case Dual(GenericOverAntichain()):
            assert isinstance(node, GoaSet)
            return (not node.generic) or node.is_whole
    raise CarrierMismatchError("space not normalized")


def is_generalization_closed(s: SymbolicSubset) -> bool:
    return all(_leaf_is_gen_closed(l, n) for l, n in _leaf_pairs(s.space, s.node))


def is_thomason(s: SymbolicSubset) -> bool:
    """Union of complements of quasi-compact opens; equivalently dual-open."""
    return is_open(s.in_dual())


def _leaf_closure(leaf: SpaceExpr, node: SetNode) -> SetNode:
    match leaf:
        case Finite(p):
            assert isinstance(node, FiniteSubset)
            return FiniteSubset(p, p.down_closure(node.mask))
        case GenericOverAntichain():
            assert isinstance(node, GoaSet)
            if node.generic or node.cofinite:
                return GOA_WHOLE
            return node
        case Dual(GenericOverAntichain()):
            assert isinstance(node, GoaSet)
            if node.is_empty:
                return node
            return GoaSet(node.cofinite, node.indices, True)
    raise CarrierMismatchError("space not normalized")


def _map_leaves(space: SpaceExpr, node: SetNode, fn) -> SetNode:
    match space, node:
        case Sum(parts), SumSet(sub):
            return SumSet(
                tuple(_map_leaves(p, s, fn) for p, s in zip(parts, sub))
            )
        case _:
            return fn(space, node)


def closure(s: SymbolicSubset) -> SymbolicSubset:
    return SymbolicSubset(s.space, _map_leaves(s.space, s.node, _leaf_closure))


# ---------------------------------------------------------------------------
# weak visibility


def _finite_pair_search(p, v: int) -> Optional[tuple[int, int]]:
    """Search down-set pairs (w1, w2) with w1 \\ w2 == v on a finite leaf.

    The canonical candidate (down-closure of v, down-closure of what it adds)
    is tried first; if any witness exists, that one works, but the general
    scan keeps the procedure a genuine search.
    """
    full = p.full_mask
    w1 = p.down_closure(v)
    w2 = p.down_closure(w1 & ~v)
    if w2 & v == 0 and w1 & ~w2 == v:
        return w1, w2
    downs = p.down_set_masks()
    w1s = [w for w in downs if w & v == v]
    w2s = [w for w in downs if w & v == 0]
    for w1 in w1s:
        for w2 in w2s:
            if w1 & ~w2 & full == v:
                return w1, w2
    return None


def _goa_thomason_pool(dualized: bool, v: GoaSet) -> list[GoaSet]:
    """Thomason candidates for the pair search on an infinite leaf.

    The pool is the Boolean algebra generated by the subset itself and the
    generic-point singleton.  This is complete: a presentation v = w1 \\ w2
    by Thomason sets exists iff one of (v, empty) or (whole, complement of v)
    works, and both lie in this algebra.
    """
    eta = GoaSet(False, frozenset(), True)
    atoms = [
        v.intersection(eta),
        v.difference(eta),
        eta.difference(v),
        v.union(eta).complement(),
    ]
    pool: list[GoaSet] = []
    seen = set()
    for pick in range(16):
        acc = GoaSet(False, frozenset(), False)
        for i in range(4):
            if (pick >> i) & 1:
                acc = acc.union(atoms[i])
        if acc not in seen and _goa_is_open(not dualized, acc):
            seen.add(acc)
            pool.append(acc)
    return pool


def _goa_pair_search(dualized: bool, v: GoaSet) -> Optional[tuple[GoaSet, GoaSet]]:
    pool = _goa_thomason_pool(dualized, v)
    for w1 in pool:
        for w2 in pool:
            if w1.difference(w2) == v:
                return w1, w2
    return None


def _leaf_witness(leaf: SpaceExpr, node: SetNode) -> Optional[tuple[SetNode, SetNode]]:
    match leaf:
        case Finite(p):
            assert isinstance(node, FiniteSubset)
            hit = _finite_pair_search(p, node.mask)
            if hit is None:
                return None
            return FiniteSubset(p, hit[0]), FiniteSubset(p, hit[1])
        case GenericOverAntichain():
            assert isinstance(node, GoaSet)
            return _goa_pair_search(False, node)
        case Dual(GenericOverAntichain()):
            assert isinstance(node, GoaSet)
            return _goa_pair_search(True, node)
    raise CarrierMismatchError("space not normalized")


def weakly_visible_witness(
    s: SymbolicSubset,
) -> Optional[tuple[SymbolicSubset, SymbolicSubset]]:
    """Thomason sets ``(w1, w2)`` with ``s = w1 - w2``, if any exist."""

    def walk(space: SpaceExpr, node: SetNode) -> Optional[tuple[SetNode, SetNode]]:
        match space, node:
            case Sum(parts), SumSet(sub):
                firsts, seconds = [], []
                for p, x in zip(parts, sub):
                    hit = walk(p, x)
                    if hit is None:
                        return None
                    firsts.append(hit[0])
                    seconds.append(hit[1])
                return SumSet(tuple(firsts)), SumSet(tuple(seconds))
            case _:
                return _leaf_witness(space, node)

    hit = walk(s.space, s.node)
    if hit is None:
        return None
    return (
        SymbolicSubset(s.space, hit[0]),
        SymbolicSubset(s.space, hit[1]),
    )


def weakly_visible_inverse(s: SymbolicSubset) -> bool:
    """Locally-closed-in-the-dual test: closure(s) minus s is dual-closed."""
    sd = s.in_dual()
    rest = closure(sd).difference(sd)
    return is_closed(rest)


def is_weakly_visible(s: SymbolicSubset) -> bool:
    witness = weakly_visible_witness(s)
    by_inverse = weakly_visible_inverse(s)
    if (witness is not None) != by_inverse:
        raise InternalInconsistencyError(
            f"weak-visibility routes disagree on {s.describe()}: "
            f"search={witness is not None}, inverse-locally-closed={by_inverse}"
        )
    return by_inverse


# ---------------------------------------------------------------------------
# closures of point classes


def cl_closure(c: PointClass) -> SymbolicSubset:
    """The closure of the class representative, as a descriptor."""
    leaf = c.leaf()
    match leaf, c.kind:
        case Finite(p), "element":
            node: SetNode = FiniteSubset(p, p.down[c.element])
        case GenericOverAntichain(), "generic":
            node = GOA_WHOLE
        case GenericOverAntichain(), "closed":
            node = GoaSet(False, frozenset({0}), False)
        case Dual(GenericOverAntichain()), "generic":
            node = GoaSet(False, frozenset(), True)
        case Dual(GenericOverAntichain()), "closed":
            node = GoaSet(False, frozenset({0}), True)
        case _:
            raise ValueError(f"bad point class {c!r}")
    return embed_at(c.space, c.path, node)


def gen_closure(c: PointClass) -> SymbolicSubset:
    """The generalization closure of the class representative."""
    leaf = c.leaf()
    match leaf, c.kind:
        case Finite(p), "element":
            node: SetNode = FiniteSubset(p, p.up[c.element])
        case GenericOverAntichain(), "generic":
            node = GoaSet(False, frozenset(), True)
        case GenericOverAntichain(), "closed":
            node = GoaSet(False, frozenset({0}), True)
        case Dual(GenericOverAntichain()), "generic":
            node = GOA_WHOLE
        case Dual(GenericOverAntichain()), "closed":
            node = GoaSet(False, frozenset({0}), False)
        case _:
            raise ValueError(f"bad point class {c!r}")
    return embed_at(c.space, c.path, node)


# ---------------------------------------------------------------------------
# space-level properties


@dataclass(frozen=True)
class DescendingChain:
    """A strictly descending infinite chain of closed sets, given as an
    indexed family; term(0) is the largest member."""

    space: SpaceExpr
    description: str
    term: Callable[[int], SymbolicSubset] = field(compare=False, repr=False)


@dataclass(frozen=True)
class SpaceProps:
    space: SpaceExpr
    finite: bool
    noetherian: bool
    inverse_noetherian: bool
    weakly_noetherian: bool
    descending_chain: Optional[DescendingChain]  # certifies not Noetherian
    inverse_descending_chain: Optional[DescendingChain]  # in the dual space
    non_visible_class: Optional[PointClass]  # certifies not weakly Noetherian


def noetherian_chain(e: SpaceExpr) -> Optional[DescendingChain]:
    """A strictly descending chain of closed sets if one exists, else None.

    Decided per leaf family: finite leaves and the generic-over-antichain
    leaf satisfy the descending chain condition; the dual leaf does not,
    witnessed by removing its closed points one at a time.
    """
    e = normalize(e)
    bad_path: Optional[tuple[int, ...]] = None
    for path, leaf in leaves(e):
        if leaf == Dual(GenericOverAntichain()):
            bad_path = path
            break
    if bad_path is None:
        return None
    path = bad_path

    def term(k: int) -> SymbolicSubset:
        node = GoaSet(True, frozenset(range(k)), True)
        return embed_at(e, path, node, fill="whole")

    where = f" on summand {'.'.join(map(str, path))}" if path else ""
    return DescendingChain(
        e,
        f"whole space, then drop c0, c1, ... one at a time{where}",
        term,
    )


def space_props(e: SpaceExpr) -> SpaceProps:
    e = normalize(e)
    chain = noetherian_chain(e)
    inv_chain = noetherian_chain(dual(e))
    bad_class: Optional[PointClass] = None
    for c in point_classes(e):
        if not is_weakly_visible(class_singleton(c)):
            bad_class = c
            break
    finite = is_finite_space(e)
    props = SpaceProps(
        space=e,
        finite=finite,
        noetherian=chain is None,
        inverse_noetherian=inv_chain is None,
        weakly_noetherian=bad_class is None,
        descending_chain=chain,
        inverse_descending_chain=inv_chain,
        non_visible_class=bad_class,
    )
    if props.finite != (props.weakly_noetherian and props.inverse_noetherian):
        raise InternalInconsistencyError(
            f"finiteness cross-check failed on {e!r}: {props}"
        )
    if props.noetherian and not props.weakly_noetherian:
        raise InternalInconsistencyError(
            f"a Noetherian space must be weakly Noetherian: {e!r}"
        )
    return props
