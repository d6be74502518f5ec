"""Exact permutation arithmetic and a deterministic stabilizer chain.

Conventions used throughout the package:

* A permutation of degree ``d`` acts on the points ``1..d``. It is stored as a
  tuple of 0-based images, so ``p[i]`` is the image of point ``i + 1`` minus
  one. Cycle notation (parsing and printing) is always 1-based.
* Products compose left to right: ``compose(p, q)`` (also ``p * q``) applies
  ``p`` first and then ``q``, i.e. ``(p * q)[i] == q[p[i]]``.
* Group orders are Python integers and never overflow.

Internally the hot paths work on plain tuples; ``Permutation`` is a tuple
subclass, so the two compare and hash identically.
"""

from __future__ import annotations

import math
import re
from functools import reduce
from typing import Iterable, Iterator, Sequence

from .errors import CapacityError, InputError, ParseError

MAX_DEGREE = 1 << 16

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


class Permutation(tuple):
    """A bijection of ``{1..degree}`` stored as a tuple of 0-based images."""

    __slots__ = ()

    def __new__(cls, images: Iterable[int] = ()):
        images = tuple(images)
        n = len(images)
        if n > MAX_DEGREE:
            raise InputError(f"degree {n} exceeds the maximum {MAX_DEGREE}")
        if sorted(images) != list(range(n)):
            raise InputError(f"not a permutation of 0..{n - 1}: {images!r}")
        return tuple.__new__(cls, images)

    @classmethod
    def _raw(cls, images) -> "Permutation":
        return tuple.__new__(cls, images)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls._raw(range(degree))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        """Build from 1-based disjoint cycles; fixed points may be omitted."""
        img = list(range(degree))
        seen = set()
        for cyc in cycles:
            for x in cyc:
                if not 1 <= x <= degree:
                    raise InputError(f"point {x} out of range 1..{degree}")
                if x in seen:
                    raise InputError(f"point {x} repeated")
                seen.add(x)
            for a, b in zip(cyc, list(cyc[1:]) + list(cyc[:1])):
                img[a - 1] = b - 1
        return cls._raw(img)

    @classmethod
    def parse(cls, text: str, degree: int) -> "Permutation":
        """Parse disjoint-cycle notation such as ``"(1,2,3)(4,5)"``.

        Whitespace is ignored; ``"()"`` or an empty string is the identity.
        """
        s = "".join(text.split())
        if _CYCLE_RE.sub("", s):
            raise InputError(f"malformed cycle text {text!r}")
        cycles = []
        for body in _CYCLE_RE.findall(s):
            if not body:
                continue
            try:
                cycles.append([int(x) for x in body.split(",")])
            except ValueError:
                raise InputError(f"malformed cycle {body!r} in {text!r}") from None
        return cls.from_cycles(degree, cycles)

    @property
    def degree(self) -> int:
        return len(self)

    @property
    def images(self) -> tuple:
        return tuple(self)

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, 1-based, each starting at its smallest point."""
        seen = set()
        out = []
        for i in range(len(self)):
            if i in seen or self[i] == i:
                continue
            cyc = [i]
            seen.add(i)
            j = self[i]
            while j != i:
                cyc.append(j)
                seen.add(j)
                j = self[j]
            out.append(tuple(x + 1 for x in cyc))
        return out

    def __str__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cyc)

    def __repr__(self) -> str:
        return f"Permutation.parse({str(self)!r}, {len(self)})"

    def __mul__(self, other):
        return compose(self, other)

    def __pow__(self, k: int) -> "Permutation":
        return Permutation._raw(_power(self, k))

    def inverse(self) -> "Permutation":
        return inverse(self)

    def order(self) -> int:
        return element_order(self)

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self))


# ---------------------------------------------------------------------------
# tuple-level primitives (no validation)

def _mul(p, q):
    return tuple(map(q.__getitem__, p))


def _inv(p):
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def _power(p, k):
    n = len(p)
    if k < 0:
        p, k = _inv(p), -k
    result = tuple(range(n))
    base = tuple(p)
    while k:
        if k & 1:
            result = _mul(result, base)
        base = _mul(base, base)
        k >>= 1
    return result


def _order(p):
    seen = bytearray(len(p))
    lengths = set()
    for i in range(len(p)):
        if seen[i]:
            continue
        n = 0
        j = i
        while not seen[j]:
            seen[j] = 1
            j = p[j]
            n += 1
        lengths.add(n)
    return reduce(math.lcm, lengths, 1)


def _first_moved(p):
    for i, x in enumerate(p):
        if i != x:
            return i
    return None


def _check_degree(p, degree):
    if len(p) != degree:
        raise InputError(f"degree mismatch: expected {degree}, got {len(p)}")


# ---------------------------------------------------------------------------
# public element operations

def compose(p: Sequence[int], q: Sequence[int]) -> Permutation:
    """Return ``p`` followed by ``q``: ``result[i] == q[p[i]]``."""
    if len(p) != len(q):
        raise InputError(f"degree mismatch: {len(p)} vs {len(q)}")
    return Permutation._raw(_mul(p, q))


def inverse(p: Sequence[int]) -> Permutation:
    return Permutation._raw(_inv(p))


def element_order(p: Sequence[int]) -> int:
    """Least ``k >= 1`` with ``p**k`` the identity (lcm of cycle lengths)."""
    return _order(p)


# ---------------------------------------------------------------------------
# stabilizer chain

class _Level:
    """One level of the chain: base point, strong generators, transversal."""

    __slots__ = ("point", "gens", "reps", "_inv", "checked")

    def __init__(self, point, degree):
        self.point = point
        self.gens = []
        self.reps = {point: tuple(range(degree))}
        self._inv = {}
        # (orbit point, generator index) pairs whose Schreier generator is known
        # to sift to the identity
        self.checked = set()

    def add(self, g):
        """Append a generator and extend the orbit without touching old reps."""
        gens = self.gens
        gens.append(g)
        reps = self.reps
        fresh = []
        for p, u in list(reps.items()):
            q = g[p]
            if q not in reps:
                reps[q] = _mul(u, g)
                fresh.append(q)
        for p in fresh:
            u = reps[p]
            for s in gens:
                q = s[p]
                if q not in reps:
                    reps[q] = _mul(u, s)
                    fresh.append(q)

    def inv_rep(self, p):
        r = self._inv.get(p)
        if r is None:
            r = self._inv[p] = _inv(self.reps[p])
        return r


def _sift(levels, g, start=0):
    for idx in range(start, len(levels)):
        lev = levels[idx]
        p = g[lev.point]
        if p not in lev.reps:
            return g, idx
        if p != lev.point:
            g = _mul(g, lev.inv_rep(p))
    return g, len(levels)


def _product_of_orbits(levels):
    n = 1
    for lev in levels:
        n *= len(lev.reps)
    return n


def _schreier_sims(degree, gens, target=None):
    """Deterministic Schreier-Sims.

    Returns ``(levels, complete)``. When ``target`` is given the construction
    stops as soon as the product of basic orbit lengths reaches it; that
    product never exceeds the true group order, so reaching ``target`` proves
    ``order >= target``. ``complete`` is False only after such an early stop.
    """
    ident = tuple(range(degree))
    levels: list[_Level] = []
    uniq = []
    seen = set()
    for g in gens:
        g = tuple(g)
        if g != ident and g not in seen:
            seen.add(g)
            uniq.append(g)
    for g in uniq:
        if all(g[lev.point] == lev.point for lev in levels):
            levels.append(_Level(_first_moved(g), degree))
    for i, lev in enumerate(levels):
        fixed = [levels[j].point for j in range(i)]
        for g in uniq:
            if all(g[b] == b for b in fixed):
                lev.add(g)
    if target is not None and _product_of_orbits(levels) >= target:
        return levels, False

    i = len(levels) - 1
    while i >= 0:
        lev = levels[i]
        found = None
        for p, u in list(lev.reps.items()):
            for k, s in enumerate(lev.gens):
                key = (p, k)
                if key in lev.checked:
                    continue
                lev.checked.add(key)
                h = _mul(_mul(u, s), lev.inv_rep(s[p]))
                if h == ident:
                    continue
                r, j = _sift(levels, h, i + 1)
                if r != ident:
                    found = (r, j)
                    break
            if found:
                break
        if found is None:
            i -= 1
            continue
        r, j = found
        if j == len(levels):
            levels.append(_Level(_first_moved(r), degree))
        for idx in range(i + 1, j + 1):
            levels[idx].add(r)
        if target is not None and _product_of_orbits(levels) >= target:
            return levels, False
        i = j
    return levels, True


def _iter_levels(levels, degree):
    ident = tuple(range(degree))
    reps = [list(lev.reps.values()) for lev in levels]

    def walk(idx, acc):
        if idx < 0:
            yield acc
            return
        for u in reps[idx]:
            yield from walk(idx - 1, _mul(acc, u))

    yield from walk(len(levels) - 1, ident)


def order_at_least(degree: int, gens: Iterable[Sequence[int]], bound: int) -> bool:
    """True iff ``<gens>`` has order at least ``bound``; may stop early."""
    levels, _ = _schreier_sims(degree, gens, target=bound)
    return _product_of_orbits(levels) >= bound


class PermGroup:
    """A permutation group given by generators, with its stabilizer chain.

    Immutable after construction. ``order`` is exact; ``contains`` sifts
    through the chain. Base points are chosen as the smallest moved point
    of the element that forces a new level.
    """

    __slots__ = ("degree", "generators", "_levels", "order")

    def __init__(self, degree: int, generators: Iterable[Sequence[int]] = ()):
        if not 1 <= degree <= MAX_DEGREE:
            raise InputError(f"degree must lie in 1..{MAX_DEGREE}, got {degree}")
        gens = []
        for g in generators:
            _check_degree(g, degree)
            gens.append(g if isinstance(g, Permutation) else Permutation(g))
        self.degree = degree
        self.generators = tuple(gens)
        self._levels, _ = _schreier_sims(degree, gens)
        self.order = _product_of_orbits(self._levels)

    @classmethod
    def _trusted(cls, degree, generators) -> "PermGroup":
        # generators already known to be valid tuples of this degree
        obj = object.__new__(cls)
        obj.degree = degree
        obj.generators = tuple(Permutation._raw(g) for g in generators)
        obj._levels, _ = _schreier_sims(degree, obj.generators)
        obj.order = _product_of_orbits(obj._levels)
        return obj

    @property
    def base(self) -> tuple[int, ...]:
        """Base points, 1-based."""
        return tuple(lev.point + 1 for lev in self._levels)

    @property
    def transversal_sizes(self) -> tuple[int, ...]:
        return tuple(len(lev.reps) for lev in self._levels)

    @property
    def strong_generators(self) -> list[Permutation]:
        out = []
        seen = set()
        for lev in self._levels:
            for g in lev.gens:
                if g not in seen:
                    seen.add(g)
                    out.append(Permutation._raw(g))
        return out

    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def contains(self, p: Sequence[int]) -> bool:
        _check_degree(p, self.degree)
        return self._has(p)

    def _has(self, p) -> bool:
        r, _ = _sift(self._levels, p)
        return all(i == x for i, x in enumerate(r))

    __contains__ = contains

    def elements(self, cap: int | None = None) -> Iterator[Permutation]:
        """Every element once, in chain-transversal product order."""
        if cap is not None and self.order > cap:
            raise CapacityError(
                f"group of order {self.order} exceeds the enumeration cap {cap}", cap=cap)
        for g in _iter_levels(self._levels, self.degree):
            yield Permutation._raw(g)

    def _tuples(self):
        return _iter_levels(self._levels, self.degree)

    def is_trivial(self) -> bool:
        return self.order == 1

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return all(other._has(g) for g in self.generators)

    def same_as(self, other: "PermGroup") -> bool:
        return (self.degree == other.degree and self.order == other.order
                and self.is_subgroup_of(other))

    def __repr__(self) -> str:
        return f"<PermGroup degree={self.degree} order={self.order} gens={len(self.generators)}>"


def build_group(degree: int, generators: Iterable[Sequence[int]] = ()) -> PermGroup:
    """Schreier-Sims closure of ``generators`` acting on ``degree`` points."""
    return PermGroup(degree, generators)


def contains(G: PermGroup, p: Sequence[int]) -> bool:
    return G.contains(p)


def enumerate_elements(G: PermGroup, cap: int) -> Iterator[Permutation]:
    """Stream the elements of ``G``; raises CapacityError if ``G.order > cap``."""
    if G.order > cap:
        raise CapacityError(
            f"group of order {G.order} exceeds the enumeration cap {cap}", cap=cap)
    return G.elements()


def _pair(a, b):
    d = len(a)
    return tuple(a) + tuple(x + d for x in b)


def paired_group(G: PermGroup, pairs: Iterable[tuple[Sequence[int], Sequence[int]]]) -> PermGroup:
    """Subgroup of G x G on ``2 * degree`` points generated by the given pairs.

    The first component acts on points ``1..d``, the second on ``d+1..2d``.
    """
    gens = []
    for a, b in pairs:
        _check_degree(a, G.degree)
        _check_degree(b, G.degree)
        gens.append(_pair(a, b))
    return PermGroup._trusted(2 * G.degree, gens)


def paired_order_is(G: PermGroup, pairs, order: int) -> bool:
    """True iff the paired group has exactly ``order`` elements (early exit)."""
    gens = [_pair(a, b) for a, b in pairs]
    levels, complete = _schreier_sims(2 * G.degree, gens, target=order + 1)
    return complete and _product_of_orbits(levels) == order
