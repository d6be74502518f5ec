"""Conjugacy classes, involutions, centralizers, cyclic normalizers, intersections."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapacityError, InputError
from .perm import Permutation, PermGroup, _check_degree, _inv, _mul, _order

DEFAULT_CAP = 10**7


@dataclass(frozen=True)
class ClassData:
    representative: Permutation
    size: int
    element_order: int


def _require_cap(G: PermGroup, cap: int):
    if G.order > cap:
        raise CapacityError(
            f"group of order {G.order} exceeds the enumeration cap {cap}", cap=cap)


def _conj(x, s):
    # s^-1 x s, as maps: apply s^-1, then x, then s
    return _mul(_mul(_inv(s), x), s)


def class_partition(G: PermGroup, cap: int = DEFAULT_CAP) -> list[list[tuple]]:
    """All conjugacy classes as element lists (orbit expansion under generators)."""
    _require_cap(G, cap)
    gens = [tuple(g) for g in G.generators]
    invs = [_inv(g) for g in gens]
    seen = set()
    classes = []
    for g in G._tuples():
        if g in seen:
            continue
        seen.add(g)
        orbit = [g]
        for x in orbit:
            for s, si in zip(gens, invs):
                y = _mul(_mul(si, x), s)
                if y not in seen:
                    seen.add(y)
                    orbit.append(y)
        classes.append(orbit)
    return classes


def conjugacy_classes(G: PermGroup, cap: int = DEFAULT_CAP) -> list[ClassData]:
    """One ClassData per class, sorted by (element order, size, representative).

    The representative is the lexicographically smallest image tuple in its
    class, so the output does not depend on enumeration order.
    """
    out = []
    for cl in class_partition(G, cap):
        rep = min(cl)
        out.append(ClassData(Permutation._raw(rep), len(cl), _order(rep)))
    out.sort(key=lambda c: (c.element_order, c.size, tuple(c.representative)))
    return out


def involutions(G: PermGroup, cap: int = DEFAULT_CAP) -> list[Permutation]:
    """All elements of order 2, sorted by image tuple."""
    _require_cap(G, cap)
    ident = tuple(range(G.degree))
    out = [g for g in G._tuples() if g != ident and _mul(g, g) == ident]
    out.sort()
    return [Permutation._raw(g) for g in out]


def _stabilizer_by_orbit(G: PermGroup, start, act, key=lambda x: x) -> PermGroup:
    """Stabilizer of ``start`` under the action ``act(x, s)`` of ``G``.

    Orbit-stabilizer with Schreier generators; only generators that are not
    already in the partial stabilizer trigger a rebuild.
    """
    gens = [tuple(g) for g in G.generators]
    transversal = {key(start): (start, tuple(range(G.degree)))}
    queue = [key(start)]
    for k in queue:
        x, u = transversal[k]
        for s in gens:
            y = act(x, s)
            ky = key(y)
            if ky not in transversal:
                transversal[ky] = (y, _mul(u, s))
                queue.append(ky)
    stab = PermGroup._trusted(G.degree, [])
    found = []
    for k in queue:
        x, u = transversal[k]
        for s in gens:
            ky = key(act(x, s))
            h = _mul(_mul(u, s), _inv(transversal[ky][1]))
            if not stab._has(h):
                found.append(h)
                stab = PermGroup._trusted(G.degree, found)
    return stab


def _require_member(G, g):
    _check_degree(g, G.degree)
    if not G._has(g):
        raise InputError(f"{Permutation._raw(g)} is not an element of the group")


def centralizer(G: PermGroup, g) -> PermGroup:
    """``{h in G : hg = gh}``, as the stabilizer of ``g`` under conjugation."""
    _require_member(G, g)
    return _stabilizer_by_orbit(G, tuple(g), _conj)


def cyclic_elements(g) -> list[tuple]:
    ident = tuple(range(len(g)))
    out = [ident]
    x = tuple(g)
    while x != ident:
        out.append(x)
        x = _mul(x, g)
    return out


def cyclic_normalizer(G: PermGroup, g) -> PermGroup:
    """``{h in G : h<g>h^-1 = <g>}``, the stabilizer of the set ``<g>``."""
    _require_member(G, g)
    start = frozenset(cyclic_elements(g))

    def act(sub, s):
        si = _inv(s)
        return frozenset(_mul(_mul(si, x), s) for x in sub)

    return _stabilizer_by_orbit(G, start, act)


def subgroup_intersection(H: PermGroup, K: PermGroup, cap: int = DEFAULT_CAP) -> PermGroup:
    """``H & K`` by enumerating the smaller group and sifting into the larger."""
    if H.degree != K.degree:
        raise InputError(f"degree mismatch: {H.degree} vs {K.degree}")
    small, large = (H, K) if H.order <= K.order else (K, H)
    if small.order > cap:
        raise CapacityError(
            f"both groups exceed the enumeration cap {cap} (orders {H.order} and {K.order})",
            cap=cap)
    if small.is_subgroup_of(large):
        return small
    found = []
    inter = PermGroup._trusted(H.degree, [])
    for x in small._tuples():
        if large._has(x) and not inter._has(x):
            found.append(x)
            inter = PermGroup._trusted(H.degree, found)
    return inter


def intersection_order(H: PermGroup, K: PermGroup, cap: int = DEFAULT_CAP,
                       stop_above: int | None = None) -> int:
    """``|H & K|``; with ``stop_above`` the count stops once it exceeds that value."""
    if H.degree != K.degree:
        raise InputError(f"degree mismatch: {H.degree} vs {K.degree}")
    small, large = (H, K) if H.order <= K.order else (K, H)
    if small.order > cap:
        raise CapacityError(
            f"both groups exceed the enumeration cap {cap} (orders {H.order} and {K.order})",
            cap=cap)
    if small.is_subgroup_of(large):
        return small.order
    n = 0
    for x in small._tuples():
        if large._has(x):
            n += 1
            if stop_above is not None and n > stop_above:
                return n
    return n
