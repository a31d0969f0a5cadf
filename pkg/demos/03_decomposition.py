"""
Restriction, agreement classes, and the subdirect embedding
===========================================================

Fixing a base element a, two fuzzy sets are "the same as far as a is
concerned" when they agree on every divisor of a.  The restriction to
the divisor set is a canonical representative of that agreement class,
and collecting the restrictions at every base element embeds the
convolution semigroup into a product of restricted ones.
"""

import semifuzz as sf

null2 = sf.build_semigroup(["0", "a"], [["0", "0"], ["0", "0"]])
f = sf.fuzzy_set(null2, {"0": "1/2", "a": "3/4"})
g = sf.fuzzy_set(null2, {"0": "1/4", "a": "3/4"})

# Only a divides a here, so f and g agree at base a despite differing
# at 0; at base 0 everything divides, so they disagree there.
print("agree at a:", sf.agrees_on_divisors("a", f, g))
print("agree at 0:", sf.agrees_on_divisors("0", f, g))

# The restriction forgets exactly the values the agreement ignores.
print("f restricted to divisors of a:", sf.restrict("a", f))
print("g restricted to divisors of a:", sf.restrict("a", g))
assert sf.restrict("a", f) == sf.restrict("a", g)

# Extending a restricted set by zero recovers a canonical preimage, so
# restriction is onto; the round trip is the identity on restricted sets.
fs = sf.restrict("a", f)
print("extended by zero:", sf.extend_by_zero(fs))
assert sf.restrict("a", sf.extend_by_zero(fs)) == fs

# The subdirect embedding: one restriction per base element.  Distinct
# fuzzy sets always land on distinct tuples (every element divides
# itself), and convolution becomes the componentwise star product.
tup_f = sf.subdirect_embed(f)
print("subdirect image of f:")
for name, component in tup_f.as_dict().items():
    print(f"  at {name}: {component['values']}")

h = sf.fuzzy_set(null2, {"0": "1", "a": "1/4"})
lhs = sf.subdirect_embed(f * h)
rhs = sf.subdirect_embed(f).star(sf.subdirect_embed(h))
print("embedding turns * into componentwise (*):", lhs == rhs)

# Restricting the embedding to characteristic functions recovers the
# Rees congruence of the non-divisor ideal: collapsing exactly N_a.
mono = sf.catalog("monogenic", 3, 1)
for a in mono.elements:
    divisors, rest = mono.divisor_partition(a)
    rees = mono.rees_congruence(rest)
    agree = {
        (s.name, t.name)
        for s in mono.elements for t in mono.elements
        if sf.agrees_on_divisors(a, sf.embed_element(mono, s), sf.embed_element(mono, t))
    }
    collapsed = {(s.name, t.name)
                 for s in mono.elements for t in mono.elements if (s, t) in rees}
    assert agree == collapsed
    print(f"at base {a.name}: agreement of embedded elements == Rees congruence of {rest}")
