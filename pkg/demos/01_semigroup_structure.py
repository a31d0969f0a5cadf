"""
Building finite semigroups and reading off their ideal structure
================================================================

A semigroup is given by a multiplication table over named elements.
The constructor validates the whole table, including a full
associativity scan, so everything downstream can rely on it.
"""

import semifuzz as sf

# A three-element monogenic semigroup: powers of c with c^4 = c^3.
mono = sf.build_semigroup(
    ["c", "c2", "c3"],
    [["c2", "c3", "c3"],
     ["c3", "c3", "c3"],
     ["c3", "c3", "c3"]],
)
print("semigroup:", mono)
print("c2 * c2 =", mono.product("c2", "c2").name)

# The square set: everything expressible as a product of two elements.
# c generates the semigroup but is not itself a product.
print("squares:", mono.square_set())

# Principal ideals, computed without ever materializing an adjoined
# identity: the ideal of s is {s} together with all products through s.
for s in mono.elements:
    print(f"principal ideal of {s.name}:", mono.principal_ideal(s))

# The divisor partition at a: which elements have a in their principal
# ideal?  The complement is always empty or an ideal.
for a in mono.elements:
    divisors, rest = mono.divisor_partition(a)
    print(f"divisors of {a.name}: {divisors}, non-divisors: {rest}")

# Kernel (least ideal), zero, and core (least ideal with two or more
# elements).  For this semigroup the zero is c3 and the core is {c2, c3}.
print("kernel:", mono.kernel())
print("zero:", mono.zero_element().name)
print("core:", mono.core())

# A Rees congruence collapses an ideal to a single point.  Collapsing
# the non-divisors of c leaves the classes {c} and {c2, c3}.
_, rest = mono.divisor_partition("c")
congruence = mono.rees_congruence(rest)
print("Rees classes:", [str(block) for block in congruence.classes()])

# The catalog provides the standard families directly.
print()
print("catalog members:")
for family in (("left_zero", 3), ("null", 3), ("cyclic_group", 4), ("monogenic", 2, 2)):
    sg = sf.catalog(*family)
    print(f"  {family}: {sg} kernel={sg.kernel()}")

# null(3) is the smallest shape with no core: the non-trivial principal
# ideals {0, a} and {0, b} meet only in the zero.
null3 = sf.catalog("null", 3)
print("null(3) core:", null3.core())

# Transformation semigroups come from closing generator maps under
# composition (the left factor acts first).
swap, drop = (1, 0), (0, 0)
closed = sf.transformation_closure([swap, drop])
print("closure of {swap, constant}:", closed.names)
print("equals the full transformation monoid:", closed == sf.catalog("full_transformation", 2))
