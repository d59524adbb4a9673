"""Ideals of finite MV-algebras and the quotients they induce.

An ideal is a subset containing 0, closed under oplus and downward
closed in the natural order.  Every ideal I induces the congruence
x ~ y  iff  d(x, y) in I, whose classes all have size |I|; the quotient
carrier inherits MV-operations through representatives.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

from .algebra import (
    MvAlgebra,
    MvAlgebraError,
    TrivialAlgebraError,
    from_tables,
)


class NotAnIdealError(MvAlgebraError):
    """A set failed one of the three ideal conditions."""

    def __init__(self, violation: "IdealViolation", labels=None):
        self.violation = violation
        shown = (
            violation.witness
            if labels is None
            else tuple(labels[i] for i in violation.witness)
        )
        super().__init__(f"not an ideal: {violation.condition} at {shown}")


class ImproperIdealError(MvAlgebraError):
    """The full-carrier ideal was used where a proper one is required."""


class FactorMismatchError(MvAlgebraError):
    """Component ideals do not line up with the product's factors."""


class IdealViolation(NamedTuple):
    """Which ideal condition failed, and on which elements."""

    condition: str  # "missing-zero" | "not-oplus-closed" | "not-downward-closed"
    witness: tuple[int, ...]


def check_ideal(algebra: MvAlgebra, members: Iterable[int]) -> IdealViolation | None:
    """Return None when ``members`` is an ideal, else the first violation.

    Conditions, in the order checked: contains zero; closed under oplus;
    downward closed under the natural order.
    """
    member_set = frozenset(algebra.check_element(x) for x in members)
    if algebra.zero not in member_set:
        return IdealViolation("missing-zero", (algebra.zero,))
    ordered = sorted(member_set)
    oplus = algebra.oplus_table
    for a in ordered:
        row = oplus[a]
        for b in ordered:
            if b > a:
                break
            if row[b] not in member_set:
                return IdealViolation("not-oplus-closed", (a, b))
    leq = algebra.leq_table
    for b in ordered:
        for a in range(algebra.order):
            if leq[a][b] and a not in member_set:
                return IdealViolation("not-downward-closed", (a, b))
    return None


def is_ideal(algebra: MvAlgebra, members: Iterable[int]) -> bool:
    return check_ideal(algebra, members) is None


class Ideal:
    """A validated ideal of a fixed algebra.

    Construction re-checks the three ideal conditions and raises
    :class:`NotAnIdealError` with the violated condition and a witness.
    """

    __slots__ = ("algebra", "members", "member_set")

    def __init__(self, algebra: MvAlgebra, members: Iterable[int]):
        member_set = frozenset(algebra.check_element(x) for x in members)
        violation = check_ideal(algebra, member_set)
        if violation is not None:
            raise NotAnIdealError(violation, algebra.labels)
        self.algebra = algebra
        self.member_set = member_set
        self.members: tuple[int, ...] = tuple(sorted(member_set))

    @property
    def is_proper(self) -> bool:
        return self.algebra.one not in self.member_set

    @property
    def is_zero(self) -> bool:
        return len(self.members) == 1

    def star_set(self) -> frozenset[int]:
        """The mirrored set {star(b) : b in I}."""
        star = self.algebra.star_table
        return frozenset(star[b] for b in self.members)

    def __contains__(self, x: int) -> bool:
        return x in self.member_set

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Ideal)
            and self.algebra == other.algebra
            and self.member_set == other.member_set
        )

    def __hash__(self) -> int:
        return hash((self.algebra, self.member_set))

    def __repr__(self) -> str:
        shown = ",".join(self.algebra.labels[i] for i in self.members)
        return f"Ideal({{{shown}}})"

    def to_list(self) -> list[int]:
        return list(self.members)


def ideal_generated_by(algebra: MvAlgebra, seed: Iterable[int]) -> Ideal:
    """Smallest ideal containing ``seed``.

    Alternates oplus-closure and downward closure until a fixpoint; the
    result is extensive, monotone and idempotent in ``seed``.
    """
    current = {algebra.check_element(x) for x in seed}
    current.add(algebra.zero)
    oplus = algebra.oplus_table
    leq = algebra.leq_table
    rng = range(algebra.order)
    while True:
        new = set(current)
        for a in current:
            row = oplus[a]
            for b in current:
                new.add(row[b])
        for b in list(new):
            for a in rng:
                if leq[a][b]:
                    new.add(a)
        if new == current:
            return Ideal(algebra, current)
        current = new


def all_ideals(algebra: MvAlgebra) -> list[Ideal]:
    """Every ideal, sorted by (size, member tuple).

    Grows the ideal poset upward from {zero}: each known ideal is
    extended by one outside element and re-closed.  Exact, and far
    cheaper than scanning all subsets; ``all_ideals_bruteforce`` keeps
    the subset scan around as a test oracle.
    """
    if algebra.is_trivial:
        raise TrivialAlgebraError("ideal enumeration needs a nontrivial algebra")
    zero_ideal = Ideal(algebra, (algebra.zero,))
    seen: dict[frozenset[int], Ideal] = {zero_ideal.member_set: zero_ideal}
    frontier = [zero_ideal]
    while frontier:
        next_frontier = []
        for ideal in frontier:
            for x in range(algebra.order):
                if x in ideal.member_set:
                    continue
                grown = ideal_generated_by(algebra, ideal.member_set | {x})
                if grown.member_set not in seen:
                    seen[grown.member_set] = grown
                    next_frontier.append(grown)
        frontier = next_frontier
    return sorted(seen.values(), key=lambda i: (len(i.members), i.members))


def all_ideals_bruteforce(algebra: MvAlgebra, max_order: int = 16) -> list[Ideal]:
    """Oracle: test all 2^n subsets.  Refuses orders above ``max_order``."""
    if algebra.is_trivial:
        raise TrivialAlgebraError("ideal enumeration needs a nontrivial algebra")
    n = algebra.order
    if n > max_order:
        raise ValueError(f"brute-force ideal scan capped at order {max_order}")
    found = []
    for mask in range(1 << n):
        subset = [x for x in range(n) if mask >> x & 1]
        if check_ideal(algebra, subset) is None:
            found.append(Ideal(algebra, subset))
    return sorted(found, key=lambda i: (len(i.members), i.members))


class QuotientAlgebra:
    """The partition of an algebra by the congruence of a proper ideal.

    ``classes[k]`` lists the members of block k in increasing order;
    blocks are numbered by their minimal element (the representative),
    so the block order and the induced tables are reproducible.
    ``quotient`` is the induced algebra over the blocks and passes full
    axiom validation; ``projection`` maps each element to its block.
    """

    __slots__ = ("base", "ideal", "classes", "representatives", "projection", "quotient")

    def __init__(self, base: MvAlgebra, ideal: Ideal, classes, representatives,
                 projection, quotient_algebra: MvAlgebra):
        self.base = base
        self.ideal = ideal
        self.classes = classes
        self.representatives = representatives
        self.projection = projection
        self.quotient = quotient_algebra

    @property
    def order(self) -> int:
        return self.quotient.order

    def block_of(self, x: int) -> int:
        return self.projection[self.base.check_element(x)]

    def class_members(self, block: int) -> tuple[int, ...]:
        return self.classes[block]

    def to_dict(self) -> dict:
        return {
            "algebra": self.quotient.to_dict(),
            "ideal": list(self.ideal.members),
            "classes": [list(c) for c in self.classes],
        }


def quotient(algebra: MvAlgebra, ideal: Ideal) -> QuotientAlgebra:
    """Quotient of ``algebra`` by a proper ideal.

    Two elements land in one block iff  x odot star(y)  and
    y odot star(x)  both lie in the ideal (equivalently d(x, y) does).
    """
    if algebra.is_trivial:
        raise TrivialAlgebraError("cannot take quotients of the trivial algebra")
    if ideal.algebra != algebra:
        raise FactorMismatchError("ideal belongs to a different algebra")
    if not ideal.is_proper:
        raise ImproperIdealError("quotient requires a proper ideal (1 not in I)")

    n = algebra.order
    odot = algebra.odot_table
    star = algebra.star_table
    member_set = ideal.member_set

    def same_block(x: int, y: int) -> bool:
        return odot[x][star[y]] in member_set and odot[y][star[x]] in member_set

    projection = [-1] * n
    classes: list[tuple[int, ...]] = []
    representatives: list[int] = []
    for x in range(n):
        if projection[x] >= 0:
            continue
        block = len(classes)
        members = [y for y in range(x, n) if projection[y] < 0 and same_block(x, y)]
        for y in members:
            projection[y] = block
        classes.append(tuple(members))
        representatives.append(x)

    q = len(classes)
    q_oplus = tuple(
        tuple(
            projection[algebra.oplus_table[representatives[i]][representatives[j]]]
            for j in range(q)
        )
        for i in range(q)
    )
    q_star = tuple(projection[star[representatives[i]]] for i in range(q))
    q_zero = projection[algebra.zero]
    q_labels = tuple(algebra.labels[r] for r in representatives)
    quotient_algebra = from_tables(q, q_oplus, q_star, zero=q_zero, labels=q_labels)

    # The projection must be a homomorphism; anything else is a bug.
    for x in range(n):
        assert projection[star[x]] == q_star[projection[x]]
        for y in range(n):
            assert (
                projection[algebra.oplus_table[x][y]]
                == q_oplus[projection[x]][projection[y]]
            )
    assert set(classes[q_zero]) == member_set

    return QuotientAlgebra(
        algebra, ideal, tuple(classes), tuple(representatives),
        tuple(projection), quotient_algebra,
    )


def product_ideal(algebra: MvAlgebra, component_ideals: Iterable[Ideal]) -> Ideal:
    """Cartesian product of per-factor ideals inside a product algebra."""
    component_ideals = tuple(component_ideals)
    if algebra.factors is None:
        raise FactorMismatchError("algebra was not built by direct_product")
    if len(component_ideals) != len(algebra.factors):
        raise FactorMismatchError(
            f"expected {len(algebra.factors)} component ideals, "
            f"got {len(component_ideals)}"
        )
    for ideal, factor in zip(component_ideals, algebra.factors):
        if ideal.algebra != factor:
            raise FactorMismatchError("component ideal does not match its factor")

    members = []

    def walk(i: int, coords: list[int]):
        if i == len(component_ideals):
            members.append(algebra.encode(coords))
            return
        for c in component_ideals[i].members:
            walk(i + 1, coords + [c])

    walk(0, [])
    return Ideal(algebra, members)


def ideal_factorization(algebra: MvAlgebra, ideal: Ideal) -> list[Ideal]:
    """Split an ideal of a finite product into per-factor ideals.

    The i-th component collects the i-th coordinates of the members;
    the product of the components is asserted to rebuild the input.
    """
    if algebra.factors is None:
        raise FactorMismatchError("algebra was not built by direct_product")
    if ideal.algebra != algebra:
        raise FactorMismatchError("ideal belongs to a different algebra")
    m = len(algebra.factors)
    coordinate_sets: list[set[int]] = [set() for _ in range(m)]
    for member in ideal.members:
        for i, c in enumerate(algebra.decode(member)):
            coordinate_sets[i].add(c)
    components = [
        Ideal(factor, coords)
        for factor, coords in zip(algebra.factors, coordinate_sets)
    ]
    rebuilt = product_ideal(algebra, components)
    assert rebuilt.member_set == ideal.member_set
    return components


def is_simple(algebra: MvAlgebra) -> bool:
    """True when {zero} is the only proper ideal.

    Cross-checked against the order-theoretic test: every nonzero
    element must climb to 1 under repeated self-addition.
    """
    if algebra.is_trivial:
        raise TrivialAlgebraError("simplicity is defined for nontrivial algebras")
    by_enumeration = len(all_ideals(algebra)) == 2
    oplus = algebra.oplus_table
    by_climbing = True
    for a in range(algebra.order):
        if a == algebra.zero:
            continue
        y = a
        while oplus[y][a] != y:
            y = oplus[y][a]
        if y != algebra.one:
            by_climbing = False
            break
    assert by_enumeration == by_climbing
    return by_enumeration
