import random
from itertools import combinations

import pytest

from chiralatlas.analysis import involutions
from chiralatlas.blt import SearchConfig, classify
from chiralatlas.cplus import (AlphaTuple, SigmaTuple, _is_chiral, alpha_from_sigma,
                               check_intersection_property_plus, check_intersection_property_sigma,
                               check_linear_diagram, extends_to_automorphism, generates, is_chiral,
                               mirror, parabolic, parabolic_sigma, regularity_image, rotation,
                               satisfies_sigma_relations, schlafli_type, sigma_from_alpha,
                               tau_sigma)
from chiralatlas.errors import InputError
from chiralatlas.perm import Permutation, build_group

import oracles
from oracles import alpha_ic_plus, alpha_linear, automorphism_exists, closure, mul, order

P = Permutation.parse


def icosahedral(a5):
    """A {3,5} pair in Alt(5): s1 of order 3, s2 of order 5, s1 s2 an involution."""
    s1 = P("(1,2,3)", 5)
    for s2 in sorted(closure(5, a5.generators)):
        if order(s2) == 5 and order(mul(s1, s2)) == 2:
            return AlphaTuple(a5, (s1, mul(s1, s2)))
    raise AssertionError("no icosahedral pair")


def torus44(G):
    """A chiral {4,4} tuple in C5:C4 found by exhaustive scan."""
    elements = sorted(closure(G.degree, G.generators))
    for a1 in elements:
        if order(a1) != 4:
            continue
        for a2 in elements:
            if order(a2) == 2 and order(mul(oracles.inv(a1), a2)) == 4:
                t = AlphaTuple(G, (a1, a2))
                if generates(G, t.alphas):
                    return t
    raise AssertionError("no {4,4} tuple")


def random_alpha_tuples(G, rng, count, ranks=(3, 4)):
    elements = sorted(closure(G.degree, G.generators))
    big = [g for g in elements if order(g) >= 3]
    invs = [g for g in elements if order(g) == 2]
    out = []
    for _ in range(count):
        k = rng.choice(ranks) - 1
        out.append(AlphaTuple(G, (rng.choice(big),) + tuple(rng.choice(invs) for _ in range(k - 1))))
    return out


def valid_tuples(G):
    recs, _ = classify(G, SearchConfig(include_regular=True))
    return [r.alpha_tuple for r in recs]


def conjugate(t, g):
    gi = oracles.inv(g)
    return AlphaTuple(t.group, tuple(mul(mul(gi, a), g) for a in t.alphas))


# ---------------------------------------------------------------------------

def test_rotation_examples(groups):
    t = icosahedral(groups("alt:5"))
    for k in range(3):
        assert rotation(t, k, k).is_identity()
    assert rotation(t, 0, 1) == t.alphas[0]
    assert order(rotation(t, 1, 2)) == schlafli_type(t)[1]
    with pytest.raises(InputError):
        rotation(t, 0, 3)


def test_parabolic_examples(groups):
    a5 = groups("alt:5")
    t = icosahedral(a5)
    assert parabolic(t, []).order == 1
    assert parabolic(t, [1]).order == 1
    assert parabolic(t, [0, 1, 2]).same_as(a5)
    cyc = parabolic(t, [0, 1])
    powers = closure(5, [t.alphas[0]])
    assert cyc.order == len(powers) == order(t.alphas[0])
    assert all(cyc.contains(x) for x in powers)
    with pytest.raises(InputError):
        parabolic(t, [5])


def test_linear_diagram_examples(groups, c5c4):
    assert check_linear_diagram(icosahedral(groups("alt:5")))
    assert check_linear_diagram(torus44(c5c4))
    s4 = groups("sym:4")
    # o(a1^-1 a2) == 2: degenerate
    t = AlphaTuple(s4, (P("(1,2,3)", 4), P("(1,2)", 4)))
    assert order(mul(oracles.inv(t.alphas[0]), t.alphas[1])) == 2
    assert not check_linear_diagram(t)


def test_linear_diagram_rank4_non_inverting(groups):
    # scan Sym(5) for a rank-4 tuple whose only defect is a3 not inverting a1
    G = groups("sym:5")
    rng = random.Random(4)
    for t in random_alpha_tuples(G, rng, 4000, ranks=(4,)):
        a1, a2, a3 = t.alphas
        fine_except = (order(a1) >= 3 and order(mul(oracles.inv(a1), a2)) >= 3
                       and order(mul(a2, a3)) >= 3)
        if fine_except and order(mul(oracles.inv(a1), a3)) != 2:
            assert not check_linear_diagram(t)
            assert not alpha_linear(5, t.alphas)
            return
    raise AssertionError("no sample found")


def test_ic_plus_examples(groups):
    a5 = groups("alt:5")
    t = icosahedral(a5)
    assert check_intersection_property_plus(t)
    assert alpha_ic_plus(5, t.alphas)
    # the three 2-subset parabolics meet trivially
    for J, K in combinations([(0, 1), (0, 2), (1, 2)], 2):
        a = closure(5, parabolic(t, J).generators)
        b = closure(5, parabolic(t, K).generators)
        assert len(a & b) == 1


def test_ic_plus_failure_example(groups):
    # <a1> and <a1^-1 a2> overlap although G_{{1}} is trivial: found by scan
    G = groups("sym:4")
    elements = sorted(closure(4, G.generators))
    for a1 in elements:
        if order(a1) < 3:
            continue
        for a2 in elements:
            if order(a2) != 2:
                continue
            x = closure(4, [a1]) & closure(4, [mul(oracles.inv(a1), a2)])
            if len(x) > 1:
                t = AlphaTuple(G, (a1, a2))
                assert not check_intersection_property_plus(t)
                assert not alpha_ic_plus(4, t.alphas)
                return
    raise AssertionError("no sample found")


@pytest.mark.parametrize("spec", ["sym:4", "alt:5", "sym:5", "psl3:2"])
def test_ic_plus_matches_literal_oracle(groups, spec):
    G = groups(spec)
    rng = random.Random(11)
    tuples = random_alpha_tuples(G, rng, 60) + valid_tuples(G)
    for t in tuples:
        assert check_intersection_property_plus(t) == alpha_ic_plus(G.degree, t.alphas)
        assert check_linear_diagram(t) == alpha_linear(G.degree, t.alphas)


def test_phi_psi_examples(groups):
    G = groups("sym:4")
    s1, s2 = P("(1,2,3,4)", 4), P("(1,2,3)", 4)
    assert alpha_from_sigma(SigmaTuple(G, (s1,))).alphas == (s1,)
    assert alpha_from_sigma(SigmaTuple(G, (s1, s2))).alphas == (s1, s1 * s2)
    assert sigma_from_alpha(AlphaTuple(G, (s1,))).sigmas == (s1,)
    a2 = P("(1,2)", 4)
    assert sigma_from_alpha(AlphaTuple(G, (s1, a2))).sigmas == (s1, s1.inverse() * a2)


@pytest.mark.parametrize("spec", ["sym:4", "alt:5", "sym:5", "psl3:2", "alt:6"])
def test_bijection_random(groups, spec):
    G = groups(spec)
    rng = random.Random(1)
    elements = sorted(closure(G.degree, G.generators))
    for _ in range(200):
        k = rng.randint(1, 5)
        s = SigmaTuple(G, tuple(rng.choice(elements) for _ in range(k)))
        assert sigma_from_alpha(alpha_from_sigma(s)).sigmas == s.sigmas
        t = AlphaTuple(G, tuple(rng.choice(elements) for _ in range(k)))
        assert alpha_from_sigma(sigma_from_alpha(t)).alphas == t.alphas


def test_extends_examples(groups):
    s3 = groups("sym:3")
    src = [P("(1,2)", 3), P("(2,3)", 3)]
    assert extends_to_automorphism(s3, src, src)
    dst = [P("(1,2)", 3), P("(1,3)", 3)]
    assert extends_to_automorphism(s3, src, dst)
    assert automorphism_exists(closure(3, src), src, dst)
    c3 = build_group(3, [P("(1,2,3)", 3)])
    g = P("(1,2,3)", 3)
    assert extends_to_automorphism(c3, [g], [g * g])
    assert not extends_to_automorphism(c3, [g], [Permutation.identity(3)])
    with pytest.raises(InputError):
        extends_to_automorphism(s3, [P("(1,2)", 3)], [P("(1,2)", 3)])
    with pytest.raises(InputError):
        extends_to_automorphism(s3, src, src[:1])


@pytest.mark.parametrize("spec", ["sym:3", "sym:4", "alt:4", "dih:5"])
def test_extends_matches_exhaustive(groups, spec):
    G = groups(spec)
    elements = sorted(closure(G.degree, G.generators))
    rng = random.Random(7)
    src = [tuple(g) for g in G.generators]
    checked = 0
    for _ in range(150):
        dst = [rng.choice(elements) for _ in src]
        got = extends_to_automorphism(G, src, dst)
        assert got == automorphism_exists(elements, src, dst)
        if got:
            # automorphisms preserve element orders
            assert [order(a) for a in src] == [order(b) for b in dst]
        checked += got
    # include real automorphisms: conjugations
    for h in elements[:10]:
        dst = [mul(mul(oracles.inv(h), a), h) for a in src]
        assert extends_to_automorphism(G, src, dst)
    assert checked >= 0


def test_is_chiral_examples(groups, c5c4):
    a5 = groups("alt:5")
    t = icosahedral(a5)
    assert not is_chiral(t)
    elements = closure(5, a5.generators)
    assert automorphism_exists(elements, list(t.alphas), [oracles.inv(a) for a in t.alphas])
    u = torus44(c5c4)
    assert is_chiral(u)
    assert not automorphism_exists(closure(5, c5c4.generators), list(u.alphas),
                                   [oracles.inv(a) for a in u.alphas])
    with pytest.raises(InputError):
        is_chiral(AlphaTuple(groups("sym:4"), (P("(1,2,3)", 4), P("(1,2)", 4))))


@pytest.mark.parametrize("spec", ["cyc:6", "cyc:12"])
def test_abelian_inversion_always_extends(groups, spec):
    G = groups(spec)
    elements = sorted(closure(G.degree, G.generators))
    rng = random.Random(3)
    for _ in range(30):
        src = [rng.choice(elements) for _ in range(2)]
        if not generates(G, src):
            continue
        assert extends_to_automorphism(G, src, [oracles.inv(a) for a in src])


def test_mirror_examples(groups, c5c4):
    t = torus44(c5c4)
    m = mirror(t)
    assert m.alphas == (t.alphas[0].inverse(), t.alphas[1])
    assert mirror(m).alphas == t.alphas
    assert schlafli_type(m) == schlafli_type(t)


@pytest.mark.parametrize("spec", ["sym:5", "psl3:2", "dih:8", "alt:6"])
def test_mirror_preserves_chirality(groups, spec):
    for t in valid_tuples(groups(spec)):
        assert _is_chiral(t) == _is_chiral(mirror(t))
        assert is_chiral(t) == is_chiral(mirror(t))


def test_mirror_preserves_chirality_c5c4(c5c4):
    for t in valid_tuples(c5c4):
        assert is_chiral(t) and is_chiral(mirror(t))


def test_schlafli_examples(groups):
    t = icosahedral(groups("alt:5"))
    assert tuple(schlafli_type(t)) == (3, 5)
    assert str(schlafli_type(t)) == "{3,5}"
    G = groups("sym:5")
    for u in random_alpha_tuples(G, random.Random(2), 20, ranks=(3, 4, 5)):
        assert len(schlafli_type(u)) == u.rank - 1
        assert schlafli_type(mirror(u)) == schlafli_type(u)


def test_tau_sigma_examples(groups):
    G = groups("sym:5")
    s = SigmaTuple(G, (P("(1,2,3)", 5), P("(2,3,4)", 5), P("(3,4,5)", 5)))
    for i in (1, 2, 3):
        assert tau_sigma(s, i, i) == s.sigmas[i - 1]
    assert tau_sigma(s, 0, 2).is_identity()
    assert tau_sigma(s, 2, 4).is_identity()
    assert tau_sigma(s, 1, 3) == s.sigmas[0] * s.sigmas[1] * s.sigmas[2]
    with pytest.raises(InputError):
        tau_sigma(s, 3, 1)
    with pytest.raises(InputError):
        tau_sigma(s, 1, 5)


def test_tau_squares_on_valid_tuples(groups):
    for t in valid_tuples(groups("sym:5")):
        s = sigma_from_alpha(t)
        n = s.rank
        for i in range(1, n):
            for j in range(i + 1, n):
                x = tau_sigma(s, i, j)
                assert (x * x).is_identity()


def test_parabolic_sigma_examples(groups):
    G = groups("alt:5")
    t = icosahedral(G)
    s = sigma_from_alpha(t)
    assert parabolic_sigma(s, []).order == 1
    assert parabolic_sigma(s, [1]).order == 1
    assert parabolic_sigma(s, [-1]).order == 1
    # {0,1,2} covers s_1, s_2
    full = parabolic_sigma(s, [0, 1, 2])
    assert full.order == build_group(5, s.sigmas).order == 60
    assert parabolic_sigma(s, [0, 1]).order == order(s.sigmas[0])
    # boundary indices do not change the group
    assert parabolic_sigma(s, [-1, 0, 1, 3]).order == parabolic_sigma(s, [0, 1]).order
    with pytest.raises(InputError):
        parabolic_sigma(s, [7])


@pytest.mark.parametrize("spec", ["sym:5", "psl3:2"])
def test_sigma_and_alpha_parabolics_coincide(groups, spec):
    G = groups(spec)
    rng = random.Random(5)
    for t in random_alpha_tuples(G, rng, 30, ranks=(3, 4, 5)) + valid_tuples(G):
        s = sigma_from_alpha(t)
        n = t.rank
        for r in range(n + 1):
            for J in combinations(range(n), r):
                assert parabolic(t, J).same_as(parabolic_sigma(s, J))


def test_sigma_ic_examples(groups):
    t = icosahedral(groups("alt:5"))
    assert check_intersection_property_sigma(sigma_from_alpha(t))


@pytest.mark.parametrize("spec", ["sym:4", "alt:5", "sym:5", "psl3:2", "dih:6", "alt:6"])
def test_condition_equivalence(groups, spec):
    G = groups(spec)
    rng = random.Random(9)
    tuples = random_alpha_tuples(G, rng, 80) + valid_tuples(G)
    tuples += [conjugate(t, rng.choice(sorted(closure(G.degree, G.generators))))
               for t in valid_tuples(G)]
    positives = 0
    for t in tuples:
        lhs = check_intersection_property_plus(t) and check_linear_diagram(t)
        s = sigma_from_alpha(t)
        rhs = satisfies_sigma_relations(s) and check_intersection_property_sigma(s)
        assert lhs == rhs
        positives += lhs
    # dih:6 has no valid tuples at all and only exercises the negative side
    assert positives > 0 or not valid_tuples(G)


@pytest.mark.parametrize("spec", ["sym:4", "alt:5", "sym:5", "psl3:2", "dih:7"])
def test_chirality_criterion_equivalence(groups, spec, c5c4):
    G = groups(spec)
    rng = random.Random(13)
    tuples = [t for t in random_alpha_tuples(G, rng, 80) if generates(G, t.alphas)]
    tuples += valid_tuples(G) + valid_tuples(c5c4)
    for t in tuples:
        s = sigma_from_alpha(t)
        a = extends_to_automorphism(t.group, t.alphas, [a.inverse() for a in t.alphas])
        b = extends_to_automorphism(t.group, s.sigmas, regularity_image(s))
        assert a == b


def test_parabolic_monotone(groups):
    G = groups("sym:5")
    for t in random_alpha_tuples(G, random.Random(21), 20, ranks=(4, 5)):
        n = t.rank
        for r in range(n + 1):
            for J in combinations(range(n), r):
                for extra in range(n):
                    K = tuple(sorted(set(J) | {extra}))
                    assert parabolic(t, J).is_subgroup_of(parabolic(t, K))


@pytest.mark.parametrize("spec", ["sym:5", "sym:6", "psl3:2"])
def test_ic_plus_heredity(groups, spec):
    G = groups(spec)
    for t in valid_tuples(G):
        for k in range(1, len(t.alphas)):
            prefix = AlphaTuple(G, t.alphas[:k])
            assert check_intersection_property_plus(prefix)


def test_alpha_form_flags(groups):
    G = groups("sym:4")
    assert AlphaTuple(G, (P("(1,2,3)", 4), P("(1,2)", 4))).has_alpha_form()
    assert not AlphaTuple(G, (P("(1,2)", 4), P("(1,2)", 4))).has_alpha_form()
    with pytest.raises(InputError):
        AlphaTuple(G, ())
    with pytest.raises(InputError):
        AlphaTuple(G, (P("(1,2)", 3),))
