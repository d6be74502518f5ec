"""Generator calculus for rotation groups of chiral and directly regular polytopes.

Two equivalent generator forms are supported:

* the *alpha form* ``(a_1, ..., a_{n-1})``: ``a_1`` has order at least 3 and
  every other entry is an involution. With ``a_0 = 1`` the rotations are
  ``a_i^-1 a_j`` and the parabolic subgroup of an index set ``J`` is
  generated by the rotations with both indices in ``J``.
* the *sigma form* ``(s_1, ..., s_{n-1})`` of distinguished rotations, with
  products ``tau(i, j) = s_i s_{i+1} ... s_j``.

The maps ``alpha_from_sigma`` (prefix products) and ``sigma_from_alpha``
(consecutive quotients) are mutually inverse.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .analysis import DEFAULT_CAP, intersection_order
from .errors import InputError
from .perm import (Permutation, PermGroup, _check_degree, _inv, _mul, _order,
                   order_at_least, paired_order_is)


class SchlafliType(tuple):
    """Ordered orders ``(p_1, ..., p_{n-1})``; prints as ``{p_1,...}``."""

    __slots__ = ()

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self)) + "}"

    @property
    def entries(self) -> tuple[int, ...]:
        return tuple(self)


@dataclass(frozen=True, eq=False)
class AlphaTuple:
    group: PermGroup
    alphas: tuple[Permutation, ...]
    _parabolics: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        alphas = tuple(a if isinstance(a, Permutation) else Permutation(a)
                       for a in self.alphas)
        if not alphas:
            raise InputError("a generator tuple needs at least one entry")
        for a in alphas:
            _check_degree(a, self.group.degree)
        object.__setattr__(self, "alphas", alphas)

    @property
    def rank(self) -> int:
        return len(self.alphas) + 1

    def __len__(self) -> int:
        return len(self.alphas)

    def key(self) -> tuple:
        return tuple(tuple(a) for a in self.alphas)

    def has_alpha_form(self) -> bool:
        """``o(a_1) >= 3`` and ``o(a_i) == 2`` for ``i >= 2``."""
        a = self.alphas
        return _order(a[0]) >= 3 and all(_order(x) == 2 for x in a[1:])

    def in_group(self) -> bool:
        return all(self.group._has(a) for a in self.alphas)

    def extended(self, alpha) -> "AlphaTuple":
        """Append ``alpha``; parabolics of the prefix are shared with the child."""
        child = AlphaTuple(self.group, self.alphas + (Permutation._raw(alpha),))
        child._parabolics.update(self._parabolics)
        return child

    def __eq__(self, other):
        if not isinstance(other, AlphaTuple):
            return NotImplemented
        return self.group is other.group and self.alphas == other.alphas

    def __hash__(self):
        return hash(self.alphas)


@dataclass(frozen=True, eq=False)
class SigmaTuple:
    group: PermGroup
    sigmas: tuple[Permutation, ...]

    def __post_init__(self):
        sigmas = tuple(s if isinstance(s, Permutation) else Permutation(s)
                       for s in self.sigmas)
        if not sigmas:
            raise InputError("a generator tuple needs at least one entry")
        for s in sigmas:
            _check_degree(s, self.group.degree)
        object.__setattr__(self, "sigmas", sigmas)

    @property
    def rank(self) -> int:
        return len(self.sigmas) + 1

    def __len__(self) -> int:
        return len(self.sigmas)

    def __eq__(self, other):
        if not isinstance(other, SigmaTuple):
            return NotImplemented
        return self.group is other.group and self.sigmas == other.sigmas

    def __hash__(self):
        return hash(self.sigmas)


@dataclass(frozen=True)
class PolytopeRecord:
    alpha_tuple: AlphaTuple
    rank: int
    schlafli: SchlafliType
    chiral: bool
    group_order: int

    def sort_key(self):
        return (self.rank, tuple(self.schlafli), self.alpha_tuple.key())


def make_record(t: AlphaTuple, chiral: bool) -> PolytopeRecord:
    return PolytopeRecord(t, t.rank, schlafli_type(t), chiral, t.group.order)


# ---------------------------------------------------------------------------
# alpha form

def _alpha(t: AlphaTuple, i: int):
    if i == 0:
        return tuple(range(t.group.degree))
    return t.alphas[i - 1]


def rotation(t: AlphaTuple, i: int, j: int) -> Permutation:
    """``a_i^-1 a_j`` with ``a_0`` the identity."""
    n = t.rank
    for k in (i, j):
        if not 0 <= k <= n - 1:
            raise InputError(f"index {k} outside 0..{n - 1}")
    return Permutation._raw(_mul(_inv(_alpha(t, i)), _alpha(t, j)))


def _parabolic(t: AlphaTuple, J: tuple[int, ...]) -> PermGroup:
    cache = t._parabolics
    G = cache.get(J)
    if G is None:
        # consecutive quotients telescope to every a_i^-1 a_j with i < j in J
        gens = [_mul(_inv(_alpha(t, a)), _alpha(t, b)) for a, b in zip(J, J[1:])]
        G = cache[J] = PermGroup._trusted(t.group.degree, gens)
    return G


def parabolic(t: AlphaTuple, J: Iterable[int]) -> PermGroup:
    """Subgroup generated by the rotations ``a_i^-1 a_j`` with ``i, j in J``."""
    J = tuple(sorted(set(J)))
    n = t.rank
    for k in J:
        if not 0 <= k <= n - 1:
            raise InputError(f"index {k} outside 0..{n - 1}")
    return _parabolic(t, J)


def check_linear_diagram(t: AlphaTuple) -> bool:
    """Rotations two or more steps apart have order 2; adjacent ones order >= 3."""
    n = t.rank
    for i in range(n):
        for j in range(i + 1, n):
            o = _order(rotation(t, i, j))
            if j - i >= 2 and o != 2:
                return False
            if j - i == 1 and o < 3:
                return False
    return True


def check_intersection_property_plus(t: AlphaTuple, cap: int = DEFAULT_CAP,
                                     new_index_only: bool = False) -> bool:
    """Parabolics satisfy ``G_J & G_K == G_{J&K}`` for all ``|J|, |K| >= 2``.

    Pairs with one set inside the other hold trivially and are skipped. With
    ``new_index_only`` only pairs touching the last index are checked, which
    is enough when the prefix tuple is already known to pass.
    """
    n = t.rank
    last = n - 1
    subsets = [J for r in range(2, n + 1) for J in combinations(range(n), r)]
    sets = [frozenset(J) for J in subsets]
    for a in range(len(subsets)):
        for b in range(a + 1, len(subsets)):
            J, K = sets[a], sets[b]
            if J <= K or K <= J:
                continue
            if new_index_only and last not in J and last not in K:
                continue
            meet = tuple(sorted(J & K))
            target = _parabolic(t, meet).order if len(meet) >= 2 else 1
            got = intersection_order(_parabolic(t, subsets[a]), _parabolic(t, subsets[b]),
                                     cap, stop_above=target)
            if got != target:
                return False
    return True


def generates(G: PermGroup, gens: Iterable[Sequence[int]]) -> bool:
    """True iff ``gens`` (elements of G) generate all of G."""
    return order_at_least(G.degree, gens, G.order)


def alpha_from_sigma(s: SigmaTuple) -> AlphaTuple:
    """Prefix products ``a_k = s_1 s_2 ... s_k``."""
    out = []
    acc = None
    for x in s.sigmas:
        acc = tuple(x) if acc is None else _mul(acc, x)
        out.append(Permutation._raw(acc))
    return AlphaTuple(s.group, tuple(out))


def sigma_from_alpha(t: AlphaTuple) -> SigmaTuple:
    """``s_1 = a_1`` and ``s_k = a_{k-1}^-1 a_k``."""
    a = t.alphas
    out = [a[0]] + [Permutation._raw(_mul(_inv(a[k - 1]), a[k])) for k in range(1, len(a))]
    return SigmaTuple(t.group, tuple(out))


def _quick_mismatch(src, dst) -> bool:
    # necessary conditions for an automorphism: orders of entries and of
    # pairwise products are preserved
    if any(_order(a) != _order(b) for a, b in zip(src, dst)):
        return True
    for i in range(len(src)):
        for j in range(i + 1, len(src)):
            if _order(_mul(src[i], src[j])) != _order(_mul(dst[i], dst[j])):
                return True
    return False


def _extends(G: PermGroup, src, dst) -> bool:
    if _quick_mismatch(src, dst):
        return False
    if not generates(G, dst):
        return False
    return paired_order_is(G, list(zip(src, dst)), G.order)


def extends_to_automorphism(G: PermGroup, src: Sequence, dst: Sequence) -> bool:
    """Does ``src[i] -> dst[i]`` extend to an automorphism of ``G``?

    The graph subgroup ``<(src_i, dst_i)>`` of ``G x G`` has order ``|G|``
    exactly when the assignment is a well-defined homomorphism; it is an
    automorphism when in addition ``dst`` generates ``G``.
    """
    src = [tuple(x) for x in src]
    dst = [tuple(x) for x in dst]
    if len(src) != len(dst):
        raise InputError(f"length mismatch: {len(src)} vs {len(dst)}")
    for x in src + dst:
        _check_degree(x, G.degree)
    if not all(G._has(x) for x in dst):
        raise InputError("target elements must lie in the group")
    if not generates(G, src):
        raise InputError("source elements do not generate the group")
    return _extends(G, src, dst)


def mirror(t: AlphaTuple) -> AlphaTuple:
    """``(a_1^-1, a_2, ..., a_{n-1})``: the enantiomorphic tuple."""
    return AlphaTuple(t.group, (Permutation._raw(_inv(t.alphas[0])),) + t.alphas[1:])


def _is_chiral(t: AlphaTuple) -> bool:
    src = [tuple(a) for a in t.alphas]
    dst = [_inv(a) for a in src]
    return not _extends(t.group, src, dst)


def is_valid_polytope_tuple(t: AlphaTuple, cap: int = DEFAULT_CAP) -> bool:
    """Generation, alpha form, linear diagram and IC+ all hold."""
    return (t.rank >= 3 and t.has_alpha_form() and t.in_group()
            and generates(t.group, t.alphas) and check_linear_diagram(t)
            and check_intersection_property_plus(t, cap))


def is_chiral(t: AlphaTuple, cap: int = DEFAULT_CAP) -> bool:
    """True iff no automorphism of the group inverts every entry of ``t``.

    False means the associated polytope is directly regular.
    """
    if not is_valid_polytope_tuple(t, cap):
        raise InputError("tuple does not define a polytope (generation, diagram or IC+ fails)")
    return _is_chiral(t)


def schlafli_type(t: AlphaTuple) -> SchlafliType:
    a = (tuple(range(t.group.degree)),) + tuple(t.alphas)
    return SchlafliType(_order(_mul(_inv(a[k - 1]), a[k])) for k in range(1, len(a)))


# ---------------------------------------------------------------------------
# sigma form

def tau_sigma(s: SigmaTuple, i: int, j: int) -> Permutation:
    """``s_i s_{i+1} ... s_j``; identity when ``i == 0`` or ``j == n``."""
    n = s.rank
    if not (0 <= i <= n and 0 <= j <= n):
        raise InputError(f"indices ({i}, {j}) outside 0..{n}")
    if i == 0 or j == n:
        return Permutation.identity(s.group.degree)
    if i > j:
        raise InputError(f"tau needs i <= j, got ({i}, {j})")
    acc = tuple(s.sigmas[i - 1])
    for k in range(i + 1, j + 1):
        acc = _mul(acc, s.sigmas[k - 1])
    return Permutation._raw(acc)


def _sigma_gens(s: SigmaTuple, I: frozenset) -> list:
    n = s.rank
    gens = []
    for r in range(0, n + 1):
        if r - 1 not in I:
            continue
        for k in range(r, n + 1):
            if k in I:
                g = tau_sigma(s, r, k)
                if not g.is_identity():
                    gens.append(g)
    return gens


def parabolic_sigma(s: SigmaTuple, I: Iterable[int]) -> PermGroup:
    """``<tau(r, k) : r <= k, r - 1 in I, k in I>`` for ``I`` within ``-1..n``."""
    I = frozenset(I)
    n = s.rank
    for k in I:
        if not -1 <= k <= n:
            raise InputError(f"index {k} outside -1..{n}")
    return PermGroup._trusted(s.group.degree, _sigma_gens(s, I))


def check_intersection_property_sigma(s: SigmaTuple, cap: int = DEFAULT_CAP) -> bool:
    """``A_I & A_J == A_{I&J}`` for all ``I, J`` within ``-1..n``.

    ``-1`` and ``n`` only ever contribute identity generators, so ``A_I``
    depends on ``I & {0..n-1}`` alone; the quantifier is evaluated once per
    distinct reduced pair.
    """
    n = s.rank
    core = range(0, n)
    subsets = [frozenset(c) for r in range(0, n + 1) for c in combinations(core, r)]
    groups = {I: parabolic_sigma(s, I) for I in subsets}
    for a in range(len(subsets)):
        for b in range(a + 1, len(subsets)):
            I, J = subsets[a], subsets[b]
            if I <= J or J <= I:
                continue
            target = groups[I & J].order
            got = intersection_order(groups[I], groups[J], cap, stop_above=target)
            if got != target:
                return False
    return True


def satisfies_sigma_relations(s: SigmaTuple) -> bool:
    """Every ``s_i`` has order >= 3 and ``tau(i, j)^2 == 1`` for ``i < j``."""
    m = len(s.sigmas)
    if any(_order(x) < 3 for x in s.sigmas):
        return False
    ident = tuple(range(s.group.degree))
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            t = tau_sigma(s, i, j)
            if _mul(t, t) != ident:
                return False
    return True


def regularity_image(s: SigmaTuple) -> list:
    """Images ``(s_1^-1, s_1^2 s_2, s_3, ..., s_{n-1})`` of the regularity map."""
    sig = [tuple(x) for x in s.sigmas]
    out = [_inv(sig[0])]
    if len(sig) > 1:
        out.append(_mul(_mul(sig[0], sig[0]), sig[1]))
        out.extend(sig[2:])
    return out
