"""Brute-force universes: value chains, fuzzy-set and semigroup streams,
catalog families, and closure of transformation sets.

Verification sweeps quantify over fuzzy sets valued in a finite chain
that contains 0 and 1.  Such a chain is closed under min and max, so
every identity checked on chain-valued sets is checked exactly.

Semigroup enumeration is over labeled tables with no isomorphism
reduction; the labeled counts (1, 8, 113 for orders 1..3) double as a
sharp oracle for the stream itself.
"""

from __future__ import annotations

import hashlib
import random
import string
import warnings
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterator, Sequence

from .fuzzy import FuzzySet, RestrictedFuzzySet, ZERO, ONE, parse_value
from .semigroups import Element, Semigroup, _find_nonassociative_triple

EXHAUSTIVE_ORDER_LIMIT = 3


@dataclass(frozen=True)
class Chain:
    """A strictly increasing tuple of rationals from 0 to 1."""

    values: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.values:
            raise ValueError("a chain needs at least the endpoints")
        if self.values[0] != ZERO or self.values[-1] != ONE:
            raise ValueError("a chain must start at 0 and end at 1")
        if any(a >= b for a, b in zip(self.values, self.values[1:])):
            raise ValueError("chain values must be strictly increasing")

    def __iter__(self):
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __contains__(self, value) -> bool:
        return value in self.values

    def __str__(self) -> str:
        return "{" + ", ".join(str(v) for v in self.values) + "}"


def make_chain(k: int) -> Chain:
    """The uniform chain {0, 1/k, 2/k, ..., 1}."""
    if k < 1:
        raise ValueError("chain resolution must be a positive integer")
    return Chain(tuple(Fraction(i, k) for i in range(k + 1)))


def chain_of(values: Sequence[object]) -> Chain:
    """A chain from explicit values, which are parsed and sorted."""
    return Chain(tuple(sorted({parse_value(v) for v in values})))


def enumerate_fuzzy_sets(semigroup: Semigroup, chain: Chain) -> Iterator[FuzzySet]:
    """All chain-valued fuzzy sets, each exactly once, in lexicographic order."""
    for values in product(chain.values, repeat=semigroup.order):
        yield FuzzySet(semigroup, values)


def enumerate_restricted_sets(semigroup: Semigroup, base: Element | str | int,
                              chain: Chain) -> Iterator[RestrictedFuzzySet]:
    """All chain-valued fuzzy sets on the divisor set of the base element."""
    b = semigroup.element(base).index
    width = len(semigroup._divisor_domains[b])
    for values in product(chain.values, repeat=width):
        yield RestrictedFuzzySet(semigroup, b, values)


def _carrier_names(n: int) -> tuple[str, ...]:
    if n > len(string.ascii_lowercase):
        raise ValueError(f"letter naming supports at most 26 elements, got {n}")
    return tuple(string.ascii_lowercase[:n])


def enumerate_semigroups(n: int) -> Iterator[Semigroup]:
    """Every associative table on n labeled elements, each exactly once.

    Candidate tables are scanned in lexicographic order and filtered by a
    full associativity check.  Counts grow as n**(n*n), so orders above
    3 are allowed but warned about.
    """
    if n < 1:
        raise ValueError("order must be a positive integer")
    if n > EXHAUSTIVE_ORDER_LIMIT:
        warnings.warn(
            f"enumerating all {n}**{n * n} tables of order {n}; this is meant for order <= 3",
            stacklevel=2,
        )
    names = _carrier_names(n)
    for flat in product(range(n), repeat=n * n):
        table = tuple(flat[i * n:(i + 1) * n] for i in range(n))
        if _find_nonassociative_triple(table) is None:
            yield Semigroup(names, table)


def catalog(name: str, *params: int) -> Semigroup:
    """Named families with canonical element naming.

    left_zero(n), right_zero(n), null(n), cyclic_group(n),
    monogenic(index, period), full_transformation(n), n <= 3.
    """
    makers = {
        "left_zero": (_left_zero, 1),
        "right_zero": (_right_zero, 1),
        "null": (_null, 1),
        "cyclic_group": (_cyclic_group, 1),
        "monogenic": (_monogenic, 2),
        "full_transformation": (_full_transformation, 1),
    }
    if name not in makers:
        raise ValueError(f"unknown catalog family {name!r}; know: {', '.join(sorted(makers))}")
    maker, arity = makers[name]
    if len(params) != arity:
        raise ValueError(f"{name} takes {arity} parameter(s), got {len(params)}")
    if any(not isinstance(p, int) or isinstance(p, bool) or p < 1 for p in params):
        raise ValueError(f"{name} parameters must be positive integers")
    return maker(*params)


def _left_zero(n: int) -> Semigroup:
    names = _carrier_names(n)
    return Semigroup(names, tuple((i,) * n for i in range(n)))


def _right_zero(n: int) -> Semigroup:
    names = _carrier_names(n)
    row = tuple(range(n))
    return Semigroup(names, (row,) * n)


def _null(n: int) -> Semigroup:
    # one zero plus elements whose every product is that zero
    names = ("0",) + _carrier_names(n - 1) if n > 1 else ("0",)
    return Semigroup(names, ((0,) * n,) * n)


def _cyclic_group(n: int) -> Semigroup:
    names = ("e",) + tuple("g" if i == 1 else f"g{i}" for i in range(1, n))
    return Semigroup(names, tuple(tuple((i + j) % n for j in range(n)) for i in range(n)))


def _monogenic(index: int, period: int) -> Semigroup:
    # powers c, c2, ..., c^(index+period-1) with c^(index+period) = c^index
    order = index + period - 1
    names = tuple("c" if e == 1 else f"c{e}" for e in range(1, order + 1))

    def reduce(e: int) -> int:
        while e > order:
            e -= period
        return e

    table = tuple(
        tuple(reduce(i + j) - 1 for j in range(1, order + 1)) for i in range(1, order + 1)
    )
    return Semigroup(names, table)


def _map_name(images: tuple[int, ...]) -> str:
    # 1-based image word: t21 maps point 1 to 2 and point 2 to 1
    if len(images) < 10:
        return "t" + "".join(str(i + 1) for i in images)
    return "t" + "-".join(str(i + 1) for i in images)


def _full_transformation(n: int) -> Semigroup:
    if n > 3:
        raise ValueError("full transformation semigroups are supported up to degree 3")
    maps = sorted(product(range(n), repeat=n))
    return _semigroup_of_maps(maps)


def _semigroup_of_maps(maps: Sequence[tuple[int, ...]]) -> Semigroup:
    index = {m: i for i, m in enumerate(maps)}
    names = tuple(_map_name(m) for m in maps)
    table = tuple(
        tuple(index[_compose(f, g)] for g in maps) for f in maps
    )
    return Semigroup(names, table)


def _compose(f: tuple[int, ...], g: tuple[int, ...]) -> tuple[int, ...]:
    # product f*g acts by f first, then g
    return tuple(g[f[x]] for x in range(len(f)))


def transformation_closure(generators: Sequence[Sequence[int]]) -> Semigroup:
    """Close self-maps of {0..n-1} under composition and build the table.

    The product applies the left factor first.  Elements are ordered by
    image word, so the result does not depend on generator order.
    """
    if not generators:
        raise ValueError("need at least one generator map")
    degree = len(generators[0])
    maps: set[tuple[int, ...]] = set()
    for gen in generators:
        m = tuple(gen)
        if len(m) != degree:
            raise ValueError("all generators must act on the same set")
        if any(not 0 <= v < degree for v in m):
            raise ValueError(f"map {m} is not a self-map of a {degree}-point set")
        maps.add(m)
    frontier = list(maps)
    while frontier:
        fresh = []
        for f in frontier:
            for g in sorted(maps):
                for h in (_compose(f, g), _compose(g, f)):
                    if h not in maps:
                        maps.add(h)
                        fresh.append(h)
        frontier = fresh
    return _semigroup_of_maps(sorted(maps))


def _rng_for(semigroup: Semigroup, chain: Chain, seed: int) -> random.Random:
    # platform-stable seeding: hash the full instance description
    blob = repr((semigroup.names, semigroup.table, chain.values, seed)).encode()
    return random.Random(int.from_bytes(hashlib.sha256(blob).digest()[:8], "big"))


def random_fuzzy_set(semigroup: Semigroup, chain: Chain, seed: int) -> FuzzySet:
    """A chain-valued fuzzy set determined by (semigroup, chain, seed)."""
    rng = _rng_for(semigroup, chain, seed)
    values = chain.values
    return FuzzySet(semigroup, tuple(
        values[rng.randrange(len(values))] for _ in range(semigroup.order)
    ))


def random_restricted_set(semigroup: Semigroup, base: Element | str | int,
                          chain: Chain, seed: int) -> RestrictedFuzzySet:
    """A chain-valued restricted fuzzy set determined by its arguments."""
    b = semigroup.element(base).index
    rng = _rng_for(semigroup, chain, seed + 0x5EED * (b + 1))
    values = chain.values
    width = len(semigroup._divisor_domains[b])
    return RestrictedFuzzySet(semigroup, b, tuple(
        values[rng.randrange(len(values))] for _ in range(width)
    ))
