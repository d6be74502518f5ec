"""Baseline classifier over tuples of distinguished rotations.

Every position ranges over all group elements of order >= 3 (the first one
over class representatives only). A candidate ``s_k`` is kept when
``(s_i ... s_k)^2 == 1`` for every ``i < k`` and the partial tuple satisfies
the sigma-form intersection property. Tuples that generate the group are
tested for the regularity automorphism and deduplicated; results are
converted to the alpha form so they compare directly with ``blt.classify``.
"""

from __future__ import annotations

import time

from .blt import SearchConfig, SearchStats, _run_seeds, final_gate, seed_classes
from .cplus import (PolytopeRecord, SigmaTuple, _extends, alpha_from_sigma,
                    check_intersection_property_sigma, generates, make_record,
                    regularity_image)
from .errors import CapacityError
from .perm import PermGroup, _mul, _order


def _is_regular(s: SigmaTuple) -> bool:
    src = [tuple(x) for x in s.sigmas]
    return _extends(s.group, src, regularity_image(s))


def _search_seed(G: PermGroup, seed, pool, cfg: SearchConfig):
    stats = SearchStats()
    ident = tuple(range(G.degree))
    found = []
    budget = [cfg.tuple_budget]

    def spend():
        budget[0] -= 1
        if budget[0] < 0:
            raise CapacityError(
                f"tuple budget {cfg.tuple_budget} exhausted", cap=cfg.tuple_budget, stats=stats)

    def recurse(sig: list, tails: list):
        # tails[i] = s_{i+1} ... s_k for the current tuple of length k
        s = SigmaTuple(G, tuple(sig))
        if generates(G, sig):
            if len(sig) >= 2:
                stats.chirality_checks += 1
                regular = _is_regular(s)
                if cfg.include_regular or not regular:
                    found.append(s)
            return
        if len(sig) + 1 >= cfg.max_rank:
            stats.truncated_branches += 1
            return
        for x in pool:
            spend()
            new_tails = [_mul(t, x) for t in tails]
            if any(_mul(t, t) != ident for t in new_tails):
                continue
            stats.tuples_tested += 1
            stats.ic_checks += 1
            cand = SigmaTuple(G, tuple(sig) + (x,))
            if not check_intersection_property_sigma(cand, cfg.enumeration_cap):
                continue
            recurse(sig + [x], new_tails + [tuple(x)])

    recurse([seed], [tuple(seed)])
    return found, stats


def _elements_of_order_ge3(G: PermGroup, cap: int):
    if G.order > cap:
        raise CapacityError(f"group of order {G.order} exceeds the enumeration cap {cap}", cap=cap)
    return sorted(g for g in G._tuples() if _order(g) >= 3)


def _dedup_sigma(tuples, cfg: SearchConfig):
    kept = []
    for s in tuples:
        typ = (s.rank, tuple(_order(x) for x in s.sigmas))
        src = [tuple(x) for x in s.sigmas]
        if any(utyp == typ and _extends(s.group, src, [tuple(x) for x in u.sigmas])
               for u, utyp in kept):
            continue
        if cfg.merge_enantiomorphs:
            # the mirror of an alpha tuple corresponds to the regularity image
            if any(utyp == typ and _extends(s.group, src, regularity_image(u))
                   for u, utyp in kept):
                continue
        kept.append((s, typ))
    return [s for s, _ in kept]


def classify_hhl(G: PermGroup, cfg: SearchConfig = SearchConfig()
                 ) -> tuple[list[PolytopeRecord], SearchStats]:
    """Same contract as ``blt.classify``, by exhaustive sigma-tuple search."""
    start = time.perf_counter()
    if G.order > cfg.enumeration_cap:
        raise CapacityError(
            f"group of order {G.order} exceeds the enumeration cap {cfg.enumeration_cap}",
            cap=cfg.enumeration_cap)
    stats = SearchStats()
    seeds = seed_classes(G, cfg)
    pool = _elements_of_order_ge3(G, cfg.enumeration_cap)
    stats.classes_seeded = len(seeds)
    candidates = []
    for found, st in _run_seeds(_search_seed, G, seeds, pool, cfg):
        stats.merge(st)
        candidates.extend(found)
    kept = _dedup_sigma(candidates, cfg)
    records = []
    for s in kept:
        t = alpha_from_sigma(s)
        records.append(make_record(t, not _is_regular(s)))
    records.sort(key=PolytopeRecord.sort_key)
    final_gate(records, cfg)
    stats.records_emitted = len(records)
    stats.wall_time = time.perf_counter() - start
    return records, stats

