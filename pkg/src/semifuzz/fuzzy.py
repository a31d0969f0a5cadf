"""Fuzzy sets over a finite semigroup and their sup-min products.

Membership values are exact rationals in [0, 1], with meet = min and
join = max.  Exactness matters: every identity this library checks is an
equality of min/max expressions, and floating point would manufacture
false counterexamples.  Values parse from "p/q" strings (or "0" / "1");
floats are rejected outright.

Two products are provided: the convolution of full fuzzy sets, and the
same formula restricted to the divisor set of a base element, where it
stays well defined because a factorization of a divisor consists of
divisors.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping

from .semigroups import Element, ElementSet, Semigroup

ZERO = Fraction(0)
ONE = Fraction(1)

_RATIONAL_RE = re.compile(r"^\d+(/\d+)?$")


def parse_value(raw: object) -> Fraction:
    """Parse one membership value; exact forms only.

    Accepts "p/q" strings in any reduction state, the strings "0" and
    "1", and the integers 0 and 1.  Floats (and float-looking strings)
    are rejected so that approximate values can never sneak in.
    """
    if isinstance(raw, bool):
        raise ValueError(f"not a membership value: {raw!r}")
    if isinstance(raw, float):
        raise ValueError(f"floating point membership {raw!r} rejected, use a rational string")
    if isinstance(raw, int):
        value = Fraction(raw)
    elif isinstance(raw, Fraction):
        value = raw
    elif isinstance(raw, str):
        if not _RATIONAL_RE.match(raw):
            raise ValueError(f"malformed membership value {raw!r}, expected \"p/q\", \"0\" or \"1\"")
        try:
            value = Fraction(raw)
        except ZeroDivisionError:
            raise ValueError(f"membership value {raw!r} has a zero denominator") from None
    else:
        raise ValueError(f"not a membership value: {raw!r}")
    if not ZERO <= value <= ONE:
        raise ValueError(f"membership value {value} outside [0, 1]")
    return value


def format_value(value: Fraction) -> str:
    """Canonical text form: lowest terms, "0" and "1" at the endpoints."""
    return str(value)


@dataclass(frozen=True)
class FuzzySet:
    """A total mapping from one semigroup's carrier into [0, 1].

    ``values[i]`` is the membership of the element with index i.  Use
    :func:`fuzzy_set` (or the characteristic/constant constructors) to
    build validated instances; ``f * g`` is the convolution.
    """

    semigroup: Semigroup
    values: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.values) != self.semigroup.order:
            raise ValueError("fuzzy set must assign a value to every element")

    def __call__(self, ref: Element | str | int) -> Fraction:
        return self.values[self.semigroup.element(ref).index]

    def __mul__(self, other: FuzzySet) -> FuzzySet:
        return convolve(self, other)

    def as_dict(self) -> dict[str, str]:
        """JSON form: element name to canonical rational string, carrier order."""
        return {name: format_value(v) for name, v in zip(self.semigroup.names, self.values)}

    def __str__(self) -> str:
        inner = ", ".join(f"{k}: {v}" for k, v in self.as_dict().items())
        return "{" + inner + "}"


def fuzzy_set(semigroup: Semigroup, values: Mapping[object, object] | Callable[[Element], object]) -> FuzzySet:
    """Build a fuzzy set from a name/element mapping or a callable on elements.

    A mapping must cover the carrier exactly; unknown names and missing
    elements are errors, as are values outside [0, 1].
    """
    if callable(values) and not isinstance(values, Mapping):
        return FuzzySet(semigroup, tuple(parse_value(values(e)) for e in semigroup.elements))
    out: dict[int, Fraction] = {}
    for key, raw in values.items():
        idx = semigroup.element(key).index
        if idx in out:
            raise ValueError(f"element {semigroup.names[idx]!r} assigned twice")
        out[idx] = parse_value(raw)
    missing = [semigroup.names[i] for i in range(semigroup.order) if i not in out]
    if missing:
        raise ValueError(f"fuzzy set is missing values for: {', '.join(missing)}")
    return FuzzySet(semigroup, tuple(out[i] for i in range(semigroup.order)))


def constant(semigroup: Semigroup, value: object) -> FuzzySet:
    """The constant fuzzy set; covers the constant-0 case the characteristic cannot."""
    v = parse_value(value)
    return FuzzySet(semigroup, (v,) * semigroup.order)


def characteristic(subset: ElementSet) -> FuzzySet:
    """Membership 1 on the subset, 0 elsewhere; the subset must be nonempty."""
    if len(subset) == 0:
        raise ValueError("characteristic function of the empty set is not defined; "
                         "use constant(semigroup, 0) for the all-zero fuzzy set")
    sg = subset.semigroup
    members = subset.indices
    return FuzzySet(sg, tuple(ONE if i in members else ZERO for i in range(sg.order)))


def embed_element(semigroup: Semigroup, s: Element | str | int) -> FuzzySet:
    """The characteristic function of {s}: the element embedding.

    This map is an injective homomorphism: embedding s and t and
    convolving gives the embedding of s*t.
    """
    idx = semigroup.element(s).index
    return FuzzySet(semigroup, tuple(ONE if i == idx else ZERO for i in range(semigroup.order)))


def convolve(f: FuzzySet, g: FuzzySet) -> FuzzySet:
    """Sup-min convolution: (f*g)(s) = max over s=xy of min(f(x), g(y)).

    Elements with no factorization get 0.  Iterates the precomputed
    factorization lists of the semigroup.
    """
    sg = f.semigroup
    if g.semigroup != sg:
        raise ValueError("cannot convolve fuzzy sets over different semigroups")
    fv = f.values
    gv = g.values
    out = []
    for facs in sg._factorizations:
        best = ZERO
        for x, y in facs:
            a = fv[x]
            b = gv[y]
            m = a if a <= b else b
            if m > best:
                best = m
        out.append(best)
    return FuzzySet(sg, tuple(out))


@dataclass(frozen=True)
class RestrictedFuzzySet:
    """A fuzzy set on the divisor set of one base element.

    ``values`` aligns with the sorted divisor indices of ``base`` (the
    canonical domain order).  These are the component values of the
    subdirect decomposition and the canonical representatives of the
    divisor-agreement classes.
    """

    semigroup: Semigroup
    base: int
    values: tuple[Fraction, ...]

    def __post_init__(self):
        if not 0 <= self.base < self.semigroup.order:
            raise ValueError("base element index out of range")
        if len(self.values) != len(self.semigroup._divisor_domains[self.base]):
            raise ValueError("restricted fuzzy set must cover the divisor set exactly")

    @property
    def base_element(self) -> Element:
        return self.semigroup.elements[self.base]

    @property
    def domain(self) -> tuple[Element, ...]:
        elems = self.semigroup.elements
        return tuple(elems[i] for i in self.semigroup._divisor_domains[self.base])

    def __call__(self, ref: Element | str | int) -> Fraction:
        idx = self.semigroup.element(ref).index
        pos = self.semigroup._divisor_positions[self.base].get(idx)
        if pos is None:
            raise ValueError(f"{self.semigroup.names[idx]!r} is not a divisor of "
                             f"{self.semigroup.names[self.base]!r}")
        return self.values[pos]

    def __mul__(self, other: RestrictedFuzzySet) -> RestrictedFuzzySet:
        return star_convolve(self, other)

    def as_dict(self) -> dict:
        values = {e.name: format_value(v) for e, v in zip(self.domain, self.values)}
        return {"base": self.semigroup.names[self.base], "values": values}

    def __str__(self) -> str:
        inner = ", ".join(f"{k}: {v}" for k, v in self.as_dict()["values"].items())
        return f"[base {self.semigroup.names[self.base]}] {{{inner}}}"


def restricted_fuzzy_set(semigroup: Semigroup, base: Element | str | int,
                         values: Mapping[object, object]) -> RestrictedFuzzySet:
    """Build a restricted fuzzy set; must cover the divisor set of base exactly."""
    b = semigroup.element(base).index
    domain = semigroup._divisor_domains[b]
    positions = semigroup._divisor_positions[b]
    out: dict[int, Fraction] = {}
    for key, raw in values.items():
        idx = semigroup.element(key).index
        if idx not in positions:
            raise ValueError(f"{semigroup.names[idx]!r} is not a divisor of {semigroup.names[b]!r}")
        if idx in out:
            raise ValueError(f"element {semigroup.names[idx]!r} assigned twice")
        out[idx] = parse_value(raw)
    missing = [semigroup.names[i] for i in domain if i not in out]
    if missing:
        raise ValueError(f"missing values for divisors: {', '.join(missing)}")
    return RestrictedFuzzySet(semigroup, b, tuple(out[i] for i in domain))


def star_convolve(f: RestrictedFuzzySet, g: RestrictedFuzzySet) -> RestrictedFuzzySet:
    """The convolution formula on a divisor set.

    For s in the domain, takes max over all factorizations s=xy in the
    whole semigroup; both factors are automatically divisors of the base,
    so the values are available.  No factorization means 0.
    """
    sg = f.semigroup
    if g.semigroup != sg or g.base != f.base:
        raise ValueError("cannot star-convolve fuzzy sets with different semigroups or bases")
    positions = sg._divisor_positions[f.base]
    facs_by_target = sg._factorizations
    fv = f.values
    gv = g.values
    out = []
    for s in sg._divisor_domains[f.base]:
        best = ZERO
        for x, y in facs_by_target[s]:
            a = fv[positions[x]]
            b = gv[positions[y]]
            m = a if a <= b else b
            if m > best:
                best = m
        out.append(best)
    return RestrictedFuzzySet(sg, f.base, tuple(out))


def fuzzy_set_from_json(semigroup: Semigroup, obj: object) -> FuzzySet:
    """Parse {"name": "p/q", ...}; must cover the carrier exactly."""
    if not isinstance(obj, dict):
        raise ValueError("fuzzy set JSON must be an object mapping names to rational strings")
    return fuzzy_set(semigroup, obj)


def restricted_from_json(semigroup: Semigroup, obj: object) -> RestrictedFuzzySet:
    """Parse {"base": name, "values": {...}}; values must cover the divisor set."""
    if not isinstance(obj, dict):
        raise ValueError("restricted fuzzy set JSON must be an object")
    if "base" not in obj:
        raise ValueError('restricted fuzzy set JSON is missing the "base" field')
    if "values" not in obj or not isinstance(obj["values"], dict):
        raise ValueError('restricted fuzzy set JSON needs a "values" object')
    return restricted_fuzzy_set(semigroup, obj["base"], obj["values"])
