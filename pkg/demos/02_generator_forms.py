"""The two generating tuples of a rotation group and the checks on them.

A chiral or directly regular polytope of rank n with rotation group G is
encoded by distinguished rotations ``s_1..s_{n-1}`` (sigma form) or by
``a_k = s_1 ... s_k`` (alpha form): ``a_1`` has order >= 3 and every later
``a_k`` is an involution.  This demo builds the icosahedron in Alt(5).
"""

from chiralatlas import (AlphaTuple, Permutation, alpha_from_sigma, check_intersection_property_plus,
                         check_linear_diagram, is_chiral, mirror, schlafli_type, sigma_from_alpha)
from chiralatlas.cplus import SigmaTuple, parabolic, tau_sigma
from chiralatlas.groups import parse_group

A5 = parse_group("alt:5")
P = lambda s: Permutation.parse(s, 5)

# search a 5-cycle s2 with s1 s2 an involution
s1 = P("(1,2,3)")
s2 = next(g for g in A5.elements() if g.order() == 5 and (s1 * g).order() == 2)
sig = SigmaTuple(A5, (s1, s2))
t = alpha_from_sigma(sig)
print("sigma:", [str(x) for x in sig.sigmas])
print("alpha:", [str(x) for x in t.alphas])
print("type", schlafli_type(t), " tau(1,2) =", tau_sigma(sig, 1, 2))
assert sigma_from_alpha(t).sigmas == sig.sigmas

print("linear diagram:", check_linear_diagram(t))
print("IC+:", check_intersection_property_plus(t))
for J in [(0, 1), (1, 2), (0, 2)]:
    print(f"  parabolic {J}: order {parabolic(t, J).order}")

# Alt(5) has an automorphism inverting both alphas: the icosahedron is
# directly regular, not chiral, and equals its own mirror image.
print("chiral?", is_chiral(t))
print("mirror:", [str(x) for x in mirror(t).alphas])
