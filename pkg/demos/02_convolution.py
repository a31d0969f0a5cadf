"""
Fuzzy sets and the sup-min convolution
======================================

A fuzzy set assigns an exact rational in [0, 1] to every element.  The
convolution of two fuzzy sets takes, at each element s, the best min
over all ways to factor s; elements that cannot be factored get 0.
"""

from fractions import Fraction

import semifuzz as sf

# The two-element null semigroup: every product is 0, so 0 is the only
# element with factorizations.
null2 = sf.build_semigroup(["0", "a"], [["0", "0"], ["0", "0"]])

f = sf.fuzzy_set(null2, {"0": "1/2", "a": "7/10"})
g = sf.fuzzy_set(null2, {"0": "3/10", "a": "9/10"})
print("f =", f)
print("g =", g)

# The four factorizations of 0 give mins 3/10, 1/2, 3/10, 7/10; the
# best is 7/10.  The element a has no factorization, so it gets 0.
print("f * g =", f * g)

# Values are exact rationals; floats never enter.
try:
    sf.fuzzy_set(null2, {"0": 0.5, "a": 1})
except ValueError as exc:
    print("floats are rejected:", exc)

# Characteristic functions turn subsets into fuzzy sets: value 1 on the
# subset, 0 elsewhere.  Singletons embed the semigroup itself, and the
# embedding turns multiplication into convolution.
lz = sf.catalog("left_zero", 2)
c_a = sf.embed_element(lz, "a")
c_b = sf.embed_element(lz, "b")
print("C_a * C_b =", c_a * c_b, "(equals C_a because a*b = a)")

mono = sf.catalog("monogenic", 3, 1)
for s in mono.elements:
    for t in mono.elements:
        assert sf.embed_element(mono, s) * sf.embed_element(mono, t) \
            == sf.embed_element(mono, mono.product(s, t))
print("embedding is a homomorphism on the monogenic example")

# The same formula makes sense on the divisor set of a base element,
# because a factorization of a divisor consists of divisors.  Here the
# divisors of c2 are {c, c2}, and c2 = c*c is the only factorization.
fs = sf.restricted_fuzzy_set(mono, "c2", {"c": "1/3", "c2": "4/5"})
gs = sf.restricted_fuzzy_set(mono, "c2", {"c": "2/3", "c2": "1/5"})
print("fs (*) gs =", fs * gs)
assert (fs * gs)("c2") == Fraction(1, 3)

# Convolution keeps chain values inside the chain: min/max never leave
# a finite chain that contains 0.
chain = sf.make_chain(4)
h1 = sf.random_fuzzy_set(mono, chain, seed=1)
h2 = sf.random_fuzzy_set(mono, chain, seed=2)
print("chain-valued convolution:", h1 * h2)
assert all(v in chain for v in (h1 * h2).values)
