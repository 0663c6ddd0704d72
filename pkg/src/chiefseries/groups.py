"""Finite permutation groups, subgroups, quotients, and elementary algebra."""

from __future__ import annotations

from typing import Callable, Iterable, Sequence

from .errors import NotNormal, OrderBoundExceeded, SubgroupMismatch
from .permutation import Permutation

DEFAULT_ORDER_BOUND = 20000


def enumerate_elements(
    generators: Sequence[Permutation],
    order_bound: int = DEFAULT_ORDER_BOUND,
) -> frozenset[Permutation]:
    """Closure of the generators under composition, by breadth-first search.

    In a finite setting product closure already yields inverses.  Raises
    OrderBoundExceeded as soon as the closure passes the bound.
    """
    gens = sorted(set(generators))
    if not gens:
        raise ValueError("at least one generator is required")
    degree = gens[0].degree
    if any(g.degree != degree for g in gens):
        raise ValueError("generators act on different point sets")
    elements: set[Permutation] = {Permutation.identity(degree)}
    elements.update(gens)
    if len(elements) > order_bound:
        raise OrderBoundExceeded(f"closure exceeds bound {order_bound}")
    frontier = sorted(elements)
    while frontier:
        new = []
        for a in gens:
            for b in frontier:
                c = a * b
                if c not in elements:
                    elements.add(c)
                    if len(elements) > order_bound:
                        raise OrderBoundExceeded(
                            f"closure exceeds bound {order_bound}"
                        )
                    new.append(c)
        frontier = new
    return frozenset(elements)


class FiniteGroup:
    """A concrete finite permutation group given by generators.

    Elements are enumerated on demand and cached in lexicographic order on
    image arrays, so repeated runs see identical orderings.  Instances are
    immutable after construction; internal caches only memoize derived data.
    """

    def __init__(
        self,
        generators: Sequence[Permutation],
        order_bound: int = DEFAULT_ORDER_BOUND,
    ):
        gens = tuple(sorted(set(generators)))
        if not gens:
            raise ValueError("a group needs at least one generator")
        self.point_degree = gens[0].degree
        if any(g.degree != self.point_degree for g in gens):
            raise ValueError("generators act on different point sets")
        self.generators = gens
        self.order_bound = order_bound
        self.identity = Permutation.identity(self.point_degree)
        self._elements: tuple[Permutation, ...] | None = None
        self._element_set: frozenset[Permutation] | None = None
        self._is_abelian: bool | None = None
        self._trivial: Subgroup | None = None
        self._full: Subgroup | None = None
        self._classes: tuple[tuple[Permutation, ...], ...] | None = None
        self._lattice = None

    @property
    def elements(self) -> tuple[Permutation, ...]:
        if self._elements is None:
            closed = enumerate_elements(self.generators, self.order_bound)
            self._elements = tuple(sorted(closed))
            self._element_set = closed
        return self._elements

    @property
    def element_set(self) -> frozenset[Permutation]:
        if self._element_set is None:
            self.elements
        return self._element_set

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, perm: Permutation) -> bool:
        return perm in self.element_set

    @property
    def is_abelian(self) -> bool:
        if self._is_abelian is None:
            self._is_abelian = all(
                a * b == b * a for a in self.generators for b in self.generators
            )
        return self._is_abelian

    def subgroup(
        self,
        elements: Iterable[Permutation],
        generator_hint: Sequence[Permutation] | None = None,
        verified: bool = False,
    ) -> "Subgroup":
        """Wrap an element set as a Subgroup, validating closure unless verified."""
        return Subgroup(self, frozenset(elements), generator_hint, verified)

    def subgroup_from_generators(
        self, generators: Sequence[Permutation]
    ) -> "Subgroup":
        if not generators:
            return self.trivial_subgroup()
        closed = enumerate_elements(generators, self.order_bound)
        if not closed <= self.element_set:
            raise SubgroupMismatch("generators do not lie in the parent group")
        return Subgroup(self, closed, generators, verified=True)

    def trivial_subgroup(self) -> "Subgroup":
        if self._trivial is None:
            self._trivial = Subgroup(
                self, frozenset({self.identity}), (), verified=True
            )
        return self._trivial

    def full_subgroup(self) -> "Subgroup":
        if self._full is None:
            self._full = Subgroup(
                self, self.element_set, self.generators, verified=True
            )
        return self._full

    def __repr__(self) -> str:
        gens = ", ".join(g.cycle_string() for g in self.generators)
        return f"FiniteGroup(degree={self.point_degree}, generators=[{gens}])"


class Subgroup:
    """A subgroup of a FiniteGroup, stored as an explicit element set."""

    def __init__(
        self,
        parent: FiniteGroup,
        elements: frozenset[Permutation],
        generator_hint: Sequence[Permutation] | None = None,
        verified: bool = False,
    ):
        self.parent = parent
        self.elements = elements
        self._hint = tuple(generator_hint) if generator_hint is not None else None
        self._sorted: tuple[Permutation, ...] | None = None
        self._generators: tuple[Permutation, ...] | None = None
        self._is_normal: bool | None = None
        self._derived: Subgroup | None = None
        self._key: tuple | None = None
        if not verified:
            self._validate()

    def _validate(self) -> None:
        if not self.elements <= self.parent.element_set:
            raise SubgroupMismatch("subgroup elements must lie in the parent group")
        if self.parent.identity not in self.elements:
            raise ValueError("subgroup must contain the identity")
        # A finite subset equals the subgroup it generates iff it is closed
        # under product and inverse; greedy generation keeps this near-linear.
        chosen: list[Permutation] = []
        closed: frozenset[Permutation] = frozenset({self.parent.identity})
        try:
            for p in sorted(self.elements):
                if p not in closed:
                    chosen.append(p)
                    closed = enumerate_elements(chosen, len(self.elements))
        except OrderBoundExceeded:
            raise ValueError("element set is not closed under product and inverse")
        if closed != self.elements:
            raise ValueError("element set is not closed under product and inverse")
        if self._hint is not None:
            closed = enumerate_elements(
                list(self._hint) + [self.parent.identity], self.parent.order_bound
            )
            if closed != self.elements:
                raise ValueError("generator hint does not generate the subgroup")

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def sorted_elements(self) -> tuple[Permutation, ...]:
        if self._sorted is None:
            self._sorted = tuple(sorted(self.elements))
        return self._sorted

    def generators(self) -> tuple[Permutation, ...]:
        """A small generating set, from the hint or by greedy selection."""
        if self._generators is None:
            if self._hint is not None:
                self._generators = tuple(
                    sorted(set(g for g in self._hint if not g.is_identity()))
                )
            else:
                chosen: list[Permutation] = []
                closed: frozenset[Permutation] = frozenset({self.parent.identity})
                for p in self.sorted_elements:
                    if p not in closed:
                        chosen.append(p)
                        closed = enumerate_elements(chosen, self.order)
                        if len(closed) == self.order:
                            break
                self._generators = tuple(chosen)
        return self._generators

    def is_normal(self) -> bool:
        """Whether conjugation by every parent generator preserves the subgroup."""
        if self._is_normal is None:
            normal = True
            for g in self.parent.generators:
                g_inv = g.inverse()
                for h in self.elements:
                    if g * h * g_inv not in self.elements:
                        normal = False
                        break
                if not normal:
                    break
            self._is_normal = normal
        return self._is_normal

    def canonical_key(self) -> tuple:
        if self._key is None:
            self._key = (
                len(self.elements),
                tuple(p.images for p in self.sorted_elements),
            )
        return self._key

    def __contains__(self, perm: Permutation) -> bool:
        return perm in self.elements

    def __le__(self, other: "Subgroup") -> bool:
        self._check_parent(other)
        return self.elements <= other.elements

    def __lt__(self, other: "Subgroup") -> bool:
        self._check_parent(other)
        return self.elements < other.elements

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.parent is other.parent and self.elements == other.elements

    def __hash__(self) -> int:
        return hash(self.elements)

    def _check_parent(self, other: "Subgroup") -> None:
        if self.parent is not other.parent:
            raise SubgroupMismatch("subgroups belong to different parent groups")

    def meet(self, other: "Subgroup") -> "Subgroup":
        self._check_parent(other)
        return Subgroup(self.parent, self.elements & other.elements, verified=True)

    def join(self, other: "Subgroup") -> "Subgroup":
        """Subgroup generated by the union, via closure of both generating sets."""
        self._check_parent(other)
        gens = list(self.generators()) + list(other.generators())
        if not gens:
            return self.parent.trivial_subgroup()
        closed = enumerate_elements(gens, self.parent.order)
        return Subgroup(self.parent, closed, gens, verified=True)

    def __repr__(self) -> str:
        gens = ", ".join(g.cycle_string() for g in self.generators()) or "()"
        return f"Subgroup(order={self.order}, generators=[{gens}])"


def normal_closure(group: FiniteGroup, seed: Iterable[Permutation]) -> Subgroup:
    """Smallest normal subgroup of the group containing the seed elements."""
    seed_list = sorted(set(seed))
    for p in seed_list:
        if p not in group.element_set:
            raise SubgroupMismatch("seed element outside the group")
    gens = [p for p in seed_list if not p.is_identity()]
    if not gens:
        return group.trivial_subgroup()
    closed = enumerate_elements(gens, group.order)
    gen_inverses = [(g, g.inverse()) for g in group.generators]
    while True:
        missing = []
        for g, g_inv in gen_inverses:
            for x in gens:
                c = g * x * g_inv
                if c not in closed:
                    missing.append(c)
        if not missing:
            break
        gens.extend(sorted(set(missing)))
        closed = enumerate_elements(gens, group.order)
    return Subgroup(group, closed, generator_hint=None, verified=True)


def conjugacy_classes(group: FiniteGroup) -> tuple[tuple[Permutation, ...], ...]:
    """Orbits of the conjugation action, ordered by (size, minimal member)."""
    if group._classes is not None:
        return group._classes
    gen_inverses = [(g, g.inverse()) for g in group.generators]
    seen: set[Permutation] = set()
    classes: list[tuple[Permutation, ...]] = []
    for start in group.elements:
        if start in seen:
            continue
        orbit = {start}
        frontier = [start]
        while frontier:
            new = []
            for x in frontier:
                for g, g_inv in gen_inverses:
                    c = g * x * g_inv
                    if c not in orbit:
                        orbit.add(c)
                        new.append(c)
            frontier = new
        seen.update(orbit)
        classes.append(tuple(sorted(orbit)))
    classes.sort(key=lambda cls: (len(cls), cls[0]))
    group._classes = tuple(classes)
    return group._classes


class QuotientGroup:
    """A quotient G/N represented by a coset table.

    Coset representatives are the lexicographically minimal elements of each
    coset; coset 0 is always the kernel itself.  The full multiplication
    table is materialized lazily since only small quotients need it.
    """

    def __init__(self, parent: FiniteGroup, kernel: Subgroup):
        self.parent = parent
        self.kernel = kernel
        coset_of: dict[Permutation, int] = {}
        reps: list[Permutation] = []
        kernel_sorted = kernel.sorted_elements
        for p in parent.elements:
            if p not in coset_of:
                idx = len(reps)
                reps.append(p)
                for n in kernel_sorted:
                    coset_of[p * n] = idx
        self.cosets = tuple(reps)
        self._coset_of = coset_of
        self._table: tuple[tuple[int, ...], ...] | None = None
        self._inverses: tuple[int, ...] | None = None
        self._is_abelian: bool | None = None

    @property
    def order(self) -> int:
        return len(self.cosets)

    @property
    def identity_index(self) -> int:
        return self._coset_of[self.parent.identity]

    def coset_of(self, perm: Permutation) -> int:
        return self._coset_of[perm]

    def multiply(self, i: int, j: int) -> int:
        return self._coset_of[self.cosets[i] * self.cosets[j]]

    def inverse(self, i: int) -> int:
        if self._inverses is None:
            self._inverses = tuple(
                self._coset_of[rep.inverse()] for rep in self.cosets
            )
        return self._inverses[i]

    @property
    def product_table(self) -> tuple[tuple[int, ...], ...]:
        if self._table is None:
            self._table = tuple(
                tuple(self.multiply(i, j) for j in range(self.order))
                for i in range(self.order)
            )
        return self._table

    @property
    def is_abelian(self) -> bool:
        if self._is_abelian is None:
            self._is_abelian = all(
                a * b * a.inverse() * b.inverse() in self.kernel.elements
                for a in self.parent.generators
                for b in self.parent.generators
            )
        return self._is_abelian

    def __repr__(self) -> str:
        return f"QuotientGroup(order={self.order}, kernel_order={self.kernel.order})"


def quotient_group(group: FiniteGroup, kernel: Subgroup) -> QuotientGroup:
    """Coset table of G/N; raises NotNormal if the conjugation test fails."""
    if kernel.parent is not group:
        raise SubgroupMismatch("kernel belongs to a different group")
    if not kernel.is_normal():
        raise NotNormal("quotient kernel must be a normal subgroup")
    return QuotientGroup(group, kernel)


def center(group: FiniteGroup) -> Subgroup:
    elems = frozenset(
        p for p in group.elements if all(p * g == g * p for g in group.generators)
    )
    return Subgroup(group, elems, verified=True)


def centralizer(group: FiniteGroup, subgroup: Subgroup) -> Subgroup:
    if subgroup.parent is not group:
        raise SubgroupMismatch("centralizer argument lives in a different group")
    gens = subgroup.generators()
    elems = frozenset(
        p for p in group.elements if all(p * g == g * p for g in gens)
    )
    return Subgroup(group, elems, verified=True)


def derived_subgroup(subgroup: Subgroup) -> Subgroup:
    """Commutator subgroup [H, H], closed under conjugation within H."""
    if subgroup._derived is not None:
        return subgroup._derived
    parent = subgroup.parent
    hgens = subgroup.generators()
    comms = sorted(
        set(
            a * b * a.inverse() * b.inverse()
            for a in hgens
            for b in hgens
        )
        - {parent.identity}
    )
    if not comms:
        result = parent.trivial_subgroup()
    else:
        gens = list(comms)
        closed = enumerate_elements(gens, subgroup.order)
        gen_inverses = [(g, g.inverse()) for g in hgens]
        while True:
            missing = []
            for g, g_inv in gen_inverses:
                for x in gens:
                    c = g * x * g_inv
                    if c not in closed:
                        missing.append(c)
            if not missing:
                break
            gens.extend(sorted(set(missing)))
            closed = enumerate_elements(gens, subgroup.order)
        result = Subgroup(parent, closed, verified=True)
    subgroup._derived = result
    return result


def commutator_subgroup(group: FiniteGroup) -> Subgroup:
    return derived_subgroup(group.full_subgroup())


def is_abelian_factor(upper: Subgroup, lower: Subgroup) -> bool:
    """Whether the factor upper/lower is abelian, i.e. [upper, upper] <= lower."""
    if upper.parent is not lower.parent:
        raise SubgroupMismatch("factor endpoints live in different groups")
    if not lower <= upper:
        raise ValueError("factor requires lower <= upper")
    return derived_subgroup(upper).elements <= lower.elements
