"""Finite semigroups as Cayley tables, with the ideal-theoretic toolbox.

A semigroup lives entirely in its multiplication table over an ordered
carrier of named elements.  Identity adjunction is simulated inside the
ideal computations rather than by extending the carrier, so a single
immutable value represents one semigroup throughout a computation.

Element identity is positional: names are presentation only.  All
operations are pure; nothing here mutates its inputs, so values can be
shared freely across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence


class AssociativityError(ValueError):
    """Raised when a proposed table violates (x*y)*z == x*(y*z).

    ``witness`` holds the violating triple of element names.
    """

    def __init__(self, message: str, witness: tuple[str, str, str]):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class Element:
    """One carrier element: a position in the carrier plus a display name."""

    index: int
    name: str

    def __repr__(self) -> str:
        return f"Element({self.index}, {self.name!r})"


@dataclass(frozen=True)
class Semigroup:
    """An associative multiplication table over named elements.

    ``table[i][j]`` is the index of ``names[i] * names[j]``.  Instances
    are normally produced by :func:`build_semigroup`, the catalog, or the
    enumeration stream, all of which guarantee associativity; direct
    construction skips that check.
    """

    names: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return len(self.names)

    def __repr__(self) -> str:
        return f"Semigroup(order={self.order}, elements=[{', '.join(self.names)}])"

    @cached_property
    def elements(self) -> tuple[Element, ...]:
        return tuple(Element(i, name) for i, name in enumerate(self.names))

    def element(self, ref: Element | str | int) -> Element:
        """Coerce a name, index, or Element into an element of this semigroup."""
        if isinstance(ref, Element):
            if 0 <= ref.index < self.order and self.names[ref.index] == ref.name:
                return self.elements[ref.index]
            raise ValueError(f"{ref!r} does not belong to {self!r}")
        if isinstance(ref, bool):
            raise TypeError(f"cannot interpret {ref!r} as an element")
        if isinstance(ref, int):
            if 0 <= ref < self.order:
                return self.elements[ref]
            raise ValueError(f"element index {ref} out of range for {self!r}")
        if isinstance(ref, str):
            try:
                return self.elements[self.names.index(ref)]
            except ValueError:
                raise ValueError(f"unknown element name {ref!r}") from None
        raise TypeError(f"cannot interpret {ref!r} as an element")

    def product(self, x: Element | str | int, y: Element | str | int) -> Element:
        """The table entry x*y."""
        i = self.element(x).index
        j = self.element(y).index
        return self.elements[self.table[i][j]]

    # ------------------------------------------------------------------
    # factorization structure

    @cached_property
    def _factorizations(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        # per target index, all ordered (x, y) with x*y == target; reused
        # heavily by the convolution products
        n = self.order
        facs: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for x in range(n):
            row = self.table[x]
            for y in range(n):
                facs[row[y]].append((x, y))
        return tuple(tuple(f) for f in facs)

    def factorizations(self, s: Element | str | int) -> tuple[tuple[Element, Element], ...]:
        """All ordered pairs (x, y) with x*y == s; empty iff s has no factorization."""
        idx = self.element(s).index
        elems = self.elements
        return tuple((elems[x], elems[y]) for x, y in self._factorizations[idx])

    def square_set(self) -> ElementSet:
        """The set of elements expressible as a product of two elements."""
        return ElementSet(self, frozenset(i for i in range(self.order) if self._factorizations[i]))

    # ------------------------------------------------------------------
    # ideals

    @cached_property
    def _principal_ideals(self) -> tuple[frozenset[int], ...]:
        # {s} | Ss | sS | SsS per element; the adjoined identity is
        # simulated by taking the union of the four orbit pieces
        n = self.order
        table = self.table
        out = []
        for s in range(n):
            left = {table[x][s] for x in range(n)}
            right = {table[s][y] for y in range(n)}
            both = {table[x][sy] for sy in right for x in range(n)}
            out.append(frozenset({s} | left | right | both))
        return tuple(out)

    def principal_ideal(self, s: Element | str | int) -> ElementSet:
        """The least ideal containing s, computed without extending the carrier."""
        return ElementSet(self, self._principal_ideals[self.element(s).index])

    @cached_property
    def _divisor_sets(self) -> tuple[frozenset[int], ...]:
        pidls = self._principal_ideals
        n = self.order
        return tuple(frozenset(s for s in range(n) if a in pidls[s]) for a in range(n))

    @cached_property
    def _divisor_domains(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(sorted(d)) for d in self._divisor_sets)

    @cached_property
    def _divisor_positions(self) -> tuple[dict[int, int], ...]:
        return tuple({s: k for k, s in enumerate(dom)} for dom in self._divisor_domains)

    def divisor_partition(self, a: Element | str | int) -> tuple[ElementSet, ElementSet]:
        """Split the carrier into the divisors of a and the rest.

        Returns (D, N) where D holds every s whose principal ideal
        contains a, and N is the complement.  a itself always lands in D,
        and N is empty or an ideal; both facts are asserted.
        """
        idx = self.element(a).index
        dset = self._divisor_sets[idx]
        divisors = ElementSet(self, dset)
        rest = ElementSet(self, frozenset(range(self.order)) - dset)
        assert idx in dset
        assert len(rest) == 0 or rest.is_ideal()
        return divisors, rest

    def kernel(self) -> ElementSet:
        """The least ideal: the intersection of all principal ideals."""
        acc = frozenset(range(self.order))
        for pidl in self._principal_ideals:
            acc &= pidl
        result = ElementSet(self, acc)
        assert result.is_ideal()
        assert all(acc <= pidl for pidl in self._principal_ideals)
        return result

    def zero_element(self) -> Element | None:
        """The element z with z*x == x*z == z for all x, if one exists."""
        n = self.order
        for z in range(n):
            row = self.table[z]
            if all(row[x] == z and self.table[x][z] == z for x in range(n)):
                return self.elements[z]
        return None

    def core(self) -> ElementSet | None:
        """The least ideal with more than one element, or None.

        Computed as the intersection of the principal ideals of all
        non-zero elements.  Any ideal with two or more elements contains
        a non-zero element, hence contains that intersection, so the
        intersection is the core exactly when it is itself non-trivial.
        A one-element ideal forces its element to be a zero, so
        "non-trivial" reduces to "more than one element".
        """
        zero = self.zero_element()
        zero_idx = -1 if zero is None else zero.index
        acc = frozenset(range(self.order))
        seen = False
        for s in range(self.order):
            if s == zero_idx:
                continue
            seen = True
            acc &= self._principal_ideals[s]
        if not seen or len(acc) < 2:
            return None
        result = ElementSet(self, acc)
        assert result.is_ideal()
        return result

    def subset(self, refs: Sequence[Element | str | int]) -> ElementSet:
        """An ElementSet over this carrier from names, indices, or Elements."""
        return ElementSet(self, frozenset(self.element(r).index for r in refs))

    def rees_congruence(self, collapsed: ElementSet) -> ElementRelation:
        """The congruence that collapses an ideal to a point.

        ``collapsed`` must be empty or an ideal; the empty set gives the
        identity relation.  Pairs are (x, x) for every x plus all pairs
        inside the collapsed set.
        """
        if collapsed.semigroup != self:
            raise ValueError("subset belongs to a different semigroup")
        if len(collapsed) > 0 and not collapsed.is_ideal():
            raise ValueError(f"{collapsed} is not an ideal, cannot collapse it")
        pairs = {(x, x) for x in range(self.order)}
        pairs.update((x, y) for x in collapsed.indices for y in collapsed.indices)
        rel = ElementRelation(self, frozenset(pairs))
        assert rel.is_congruence()
        return rel


@dataclass(frozen=True)
class ElementSet:
    """An immutable subset of one semigroup's carrier."""

    semigroup: Semigroup
    indices: frozenset[int]

    def __post_init__(self):
        if any(not 0 <= i < self.semigroup.order for i in self.indices):
            raise ValueError("subset contains indices outside the carrier")

    def __len__(self) -> int:
        return len(self.indices)

    def __iter__(self) -> Iterator[Element]:
        elems = self.semigroup.elements
        return iter(elems[i] for i in sorted(self.indices))

    def __contains__(self, ref: Element | str | int) -> bool:
        return self.semigroup.element(ref).index in self.indices

    def __le__(self, other: ElementSet) -> bool:
        return self.semigroup == other.semigroup and self.indices <= other.indices

    def names(self) -> tuple[str, ...]:
        return tuple(e.name for e in self)

    def __str__(self) -> str:
        return "{" + ", ".join(self.names()) + "}"

    def is_ideal(self) -> bool:
        """True iff nonempty and closed under multiplication by the whole carrier."""
        if not self.indices:
            return False
        table = self.semigroup.table
        members = self.indices
        n = self.semigroup.order
        return all(
            table[s][x] in members and table[x][s] in members
            for s in members
            for x in range(n)
        )


@dataclass(frozen=True)
class ElementRelation:
    """A set of ordered pairs over one semigroup's carrier."""

    semigroup: Semigroup
    pairs: frozenset[tuple[int, int]]

    def __contains__(self, pair) -> bool:
        x, y = pair
        sg = self.semigroup
        return (sg.element(x).index, sg.element(y).index) in self.pairs

    def __len__(self) -> int:
        return len(self.pairs)

    def is_equivalence(self) -> bool:
        n = self.semigroup.order
        pairs = self.pairs
        if any((x, x) not in pairs for x in range(n)):
            return False
        if any((y, x) not in pairs for x, y in pairs):
            return False
        by_left: dict[int, set[int]] = {}
        for x, y in pairs:
            by_left.setdefault(x, set()).add(y)
        return all((x, z) in pairs for x, y in pairs for z in by_left.get(y, ()))

    def is_congruence(self) -> bool:
        """Equivalence plus compatibility with the table on both sides."""
        if not self.is_equivalence():
            return False
        table = self.semigroup.table
        n = self.semigroup.order
        return all(
            (table[s][x], table[s][y]) in self.pairs and (table[x][s], table[y][s]) in self.pairs
            for x, y in self.pairs
            for s in range(n)
        )

    def classes(self) -> tuple[ElementSet, ...]:
        """The blocks of the relation, for equivalences, ordered by least member."""
        n = self.semigroup.order
        seen: set[int] = set()
        blocks = []
        for x in range(n):
            if x in seen:
                continue
            block = frozenset(y for y in range(n) if (x, y) in self.pairs)
            seen |= block
            blocks.append(ElementSet(self.semigroup, block))
        return tuple(blocks)


def identity_relation(semigroup: Semigroup) -> ElementRelation:
    return ElementRelation(semigroup, frozenset((x, x) for x in range(semigroup.order)))


def _find_nonassociative_triple(table: Sequence[Sequence[int]]) -> tuple[int, int, int] | None:
    n = len(table)
    for x in range(n):
        for y in range(n):
            xy = table[x][y]
            for z in range(n):
                if table[xy][z] != table[x][table[y][z]]:
                    return x, y, z
    return None


def build_semigroup(names: Sequence[str], table: Sequence[Sequence[str]]) -> Semigroup:
    """Validate and build a semigroup from element names and a name matrix.

    ``table[i][j]`` must name the product names[i]*names[j].  Raises
    ValueError for structural problems (duplicate or unknown names, shape
    mismatch) and AssociativityError, with the witnessing triple, when
    the table is not associative.
    """
    names = tuple(names)
    if not names:
        raise ValueError("a semigroup needs at least one element")
    if len(set(names)) != len(names):
        dupes = sorted({x for x in names if names.count(x) > 1})
        raise ValueError(f"duplicate element names: {', '.join(dupes)}")
    n = len(names)
    index = {name: i for i, name in enumerate(names)}
    if len(table) != n:
        raise ValueError(f"table has {len(table)} rows, expected {n}")
    rows = []
    for i, row in enumerate(table):
        if len(row) != n:
            raise ValueError(f"table row {i} has {len(row)} entries, expected {n}")
        try:
            rows.append(tuple(index[cell] for cell in row))
        except KeyError as exc:
            raise ValueError(f"unknown element name {exc.args[0]!r} in table row {i}") from None
    witness = _find_nonassociative_triple(rows)
    if witness is not None:
        x, y, z = witness
        nx, ny, nz = names[x], names[y], names[z]
        lhs = names[rows[rows[x][y]][z]]
        rhs = names[rows[x][rows[y][z]]]
        raise AssociativityError(
            f"not associative: ({nx}*{ny})*{nz} = {lhs} but {nx}*({ny}*{nz}) = {rhs}",
            (nx, ny, nz),
        )
    return Semigroup(names, tuple(rows))


def semigroup_to_json(semigroup: Semigroup) -> dict:
    """The interchange form: element names plus a row-major name matrix."""
    names = semigroup.names
    return {
        "elements": list(names),
        "table": [[names[v] for v in row] for row in semigroup.table],
    }


def semigroup_from_json(obj: object) -> Semigroup:
    """Parse the interchange form produced by :func:`semigroup_to_json`."""
    if not isinstance(obj, dict):
        raise ValueError("semigroup JSON must be an object")
    if "elements" not in obj:
        raise ValueError('semigroup JSON is missing the "elements" field')
    if "table" not in obj:
        raise ValueError('semigroup JSON is missing the "table" field')
    names = obj["elements"]
    if not isinstance(names, list) or not all(isinstance(x, str) for x in names):
        raise ValueError('"elements" must be an array of strings')
    table = obj["table"]
    if not isinstance(table, list) or not all(isinstance(row, list) for row in table):
        raise ValueError('"table" must be an array of arrays of element names')
    return build_semigroup(names, table)
