"""Involution-based search for chiral (and directly regular) polytopes.

For each conjugacy class of elements of order >= 3 one representative is
fixed as the first generator; the remaining generators are involutions added
depth-first. Pruning rules applied while extending a partial tuple
``(a_1, a_2, ..., a_k)`` by a candidate involution ``c``:

P1  a branch is not extended once the tuple generates the whole group;
P2  from the third generator on, candidates normalize ``<a_1>``;
P3  ``c`` commutes with ``a_{k-1}`` (cumulatively, with every earlier
    involution except the last);
P4  ``c`` does not commute with ``a_k``;
P5  from the third generator on, ``a_1^-1 c`` has order 2;
P6  the extended tuple passes IC+ (only pairs touching the new index).

Additionally the second generator must satisfy ``o(a_1^-1 a_2) >= 3``.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, fields
from typing import Iterator, Sequence

from .analysis import DEFAULT_CAP, conjugacy_classes, cyclic_normalizer, involutions
from .cplus import (AlphaTuple, PolytopeRecord, _extends, _is_chiral, check_intersection_property_plus,
                    check_linear_diagram, generates, make_record, mirror, schlafli_type)
from .errors import CapacityError, InvariantError
from .perm import PermGroup, Permutation, _inv, _mul, _order


@dataclass(frozen=True)
class SearchConfig:
    max_rank: int = 8
    include_regular: bool = False
    merge_enantiomorphs: bool = False
    enumeration_cap: int = DEFAULT_CAP
    seed_filter: tuple[int, ...] | None = None
    threads: int = 1
    # HHL only: maximum number of candidate evaluations
    tuple_budget: int = 10**9

    def __post_init__(self):
        if self.max_rank < 3:
            raise ValueError(f"max_rank must be >= 3, got {self.max_rank}")
        if self.enumeration_cap < 1:
            raise ValueError("enumeration_cap must be positive")
        if self.threads < 1:
            raise ValueError("threads must be positive")
        if self.seed_filter is not None:
            object.__setattr__(self, "seed_filter", tuple(self.seed_filter))


@dataclass
class SearchStats:
    classes_seeded: int = 0
    tuples_tested: int = 0
    ic_checks: int = 0
    chirality_checks: int = 0
    records_emitted: int = 0
    wall_time: float = 0.0
    degenerate_rejections: int = 0
    truncated_branches: int = 0

    def merge(self, other: "SearchStats"):
        for f in fields(self):
            if f.name != "wall_time":
                setattr(self, f.name, getattr(self, f.name) + getattr(other, f.name))

    def as_dict(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}


def _commutes(a, b):
    return _mul(a, b) == _mul(b, a)


def extend_tuple(state: AlphaTuple, candidates: Sequence, cfg: SearchConfig = SearchConfig(),
                 stats: SearchStats | None = None, prune: bool = True,
                 normalizer: PermGroup | None = None) -> Iterator[AlphaTuple]:
    """Depth-first extension of ``state`` by involutions from ``candidates``.

    Yields every extension that generates the ambient group, passes IC+ and
    has the linear diagram. With ``prune=False`` rules P2-P5 (and the
    degeneracy test on the second generator) are dropped and emitted tuples
    are filtered through ``check_linear_diagram`` instead.
    """
    if stats is None:
        stats = SearchStats()
    G = state.group
    ident = tuple(range(G.degree))
    pool = [tuple(c) for c in candidates]
    a1 = tuple(state.alphas[0])
    a1_inv = _inv(a1)
    if prune and normalizer is None and len(state) <= 2:
        normalizer = cyclic_normalizer(G, a1)

    def recurse(t: AlphaTuple, pool: list) -> Iterator[AlphaTuple]:
        if generates(G, t.alphas):
            if t.rank >= 3 and (prune or check_linear_diagram(t)):
                yield t
            return
        if not pool:
            return
        if t.rank >= cfg.max_rank:
            stats.truncated_branches += 1
            return
        k = len(t) - 1  # involutions already placed
        if prune:
            if k == 1:
                pool = [c for c in pool if normalizer._has(c)]
            if k >= 2:
                prev = t.alphas[-2]
                pool = [c for c in pool if _commutes(c, prev)]
            kept = pool
            if k >= 1:
                last = t.alphas[-1]
                cands = [c for c in pool if not _commutes(c, last)]
            else:
                cands = pool
        else:
            kept = cands = pool
        for c in cands:
            if prune:
                if k >= 1:
                    x = _mul(a1_inv, c)
                    if _mul(x, x) != ident or x == ident:
                        continue
                else:
                    if _order(_mul(a1_inv, c)) < 3:
                        stats.degenerate_rejections += 1
                        continue
            stats.tuples_tested += 1
            child = t.extended(c)
            stats.ic_checks += 1
            if not check_intersection_property_plus(child, cfg.enumeration_cap,
                                                    new_index_only=True):
                continue
            rest = [x for x in kept if x != c]
            yield from recurse(child, rest)

    yield from recurse(state, pool)


def deduplicate(tuples: Sequence[AlphaTuple], cfg: SearchConfig = SearchConfig()) -> list[AlphaTuple]:
    """Keep the first tuple of each isomorphism class.

    ``t ~ u`` when ranks and Schlafli types agree and ``t -> u`` extends to a
    group automorphism; with ``merge_enantiomorphs`` also when ``t`` maps
    onto the mirror of ``u``.
    """
    kept: list[tuple[AlphaTuple, tuple]] = []
    for t in tuples:
        typ = (t.rank, tuple(schlafli_type(t)))
        src = [tuple(a) for a in t.alphas]
        new = True
        for u, utyp in kept:
            if utyp != typ:
                continue
            if _extends(t.group, src, [tuple(a) for a in u.alphas]):
                new = False
                break
            if cfg.merge_enantiomorphs and _extends(
                    t.group, src, [tuple(a) for a in mirror(u).alphas]):
                new = False
                break
        if new:
            kept.append((t, typ))
    return [t for t, _ in kept]


def seed_classes(G: PermGroup, cfg: SearchConfig) -> list[Permutation]:
    """One representative per class of elements of order >= 3 (filtered)."""
    out = []
    for c in conjugacy_classes(G, cfg.enumeration_cap):
        if c.element_order < 3:
            continue
        if cfg.seed_filter is not None and c.element_order not in cfg.seed_filter:
            continue
        out.append(c.representative)
    return out


def _search_seed(G, seed, pool, cfg, prune=True):
    stats = SearchStats()
    found = []
    for t in extend_tuple(AlphaTuple(G, (seed,)), pool, cfg, stats, prune=prune):
        if not cfg.include_regular:
            stats.chirality_checks += 1
            if not _is_chiral(t):
                continue
        found.append(t)
    return found, stats


def _run_seeds(worker, G, seeds, pool, cfg):
    if cfg.threads > 1 and len(seeds) > 1:
        with ProcessPoolExecutor(max_workers=cfg.threads) as ex:
            futures = [ex.submit(worker, G, s, pool, cfg) for s in seeds]
            return [f.result() for f in futures]
    return [worker(G, s, pool, cfg) for s in seeds]


def final_gate(records: Sequence[PolytopeRecord], cfg: SearchConfig):
    """Re-verify every record from scratch; raise InvariantError on failure."""
    for r in records:
        t = r.alpha_tuple
        ok = (t.has_alpha_form() and t.in_group() and generates(t.group, t.alphas)
              and check_linear_diagram(t)
              and check_intersection_property_plus(t, cfg.enumeration_cap))
        if not ok:
            raise InvariantError(f"emitted tuple fails validity: {[str(a) for a in t.alphas]}")
        if _is_chiral(t) != r.chiral:
            raise InvariantError(f"chirality flag wrong for {[str(a) for a in t.alphas]}")
        if not cfg.include_regular and not r.chiral:
            raise InvariantError("directly regular tuple emitted without include_regular")


def classify(G: PermGroup, cfg: SearchConfig = SearchConfig(), prune: bool = True
             ) -> tuple[list[PolytopeRecord], SearchStats]:
    """All chiral polytopes (plus directly regular ones if requested) with
    rotation group ``G``, one per isomorphism class."""
    start = time.perf_counter()
    if G.order > cfg.enumeration_cap:
        raise CapacityError(
            f"group of order {G.order} exceeds the enumeration cap {cfg.enumeration_cap}",
            cap=cfg.enumeration_cap)
    stats = SearchStats()
    seeds = seed_classes(G, cfg)
    pool = involutions(G, cfg.enumeration_cap)
    stats.classes_seeded = len(seeds)
    worker = _search_seed if prune else _search_seed_unpruned
    candidates = []
    for found, st in _run_seeds(worker, G, seeds, pool, cfg):
        stats.merge(st)
        candidates.extend(found)
    kept = deduplicate(candidates, cfg)
    records = [make_record(t, _is_chiral(t)) for t in kept]
    records.sort(key=PolytopeRecord.sort_key)
    final_gate(records, cfg)
    stats.records_emitted = len(records)
    stats.wall_time = time.perf_counter() - start
    return records, stats


def _search_seed_unpruned(G, seed, pool, cfg):
    return _search_seed(G, seed, pool, cfg, prune=False)
