"""Finite MV-algebras presented by Cayley tables.

An algebra is given by its truncated-addition table ``oplus``, its
involution table ``star`` and a distinguished ``zero``.  Construction
validates the four defining axioms

    M1  (A, oplus, 0) is a commutative monoid
    M2  star(star(x)) = x
    M3  oplus(x, star(zero)) = star(zero)
    M4  star(oplus(star(x), y)) + y = star(oplus(star(y), x)) + x

and eagerly caches every derived table the rest of the package relies
on: the strong conjunction ``odot``, the natural order ``leq``, the
lattice ``join``/``meet`` and the set of idempotent (Boolean) elements.
Instances are immutable after construction and safe to share between
threads.
"""

from __future__ import annotations

import json
from math import prod
from typing import Iterable, Sequence


class MvAlgebraError(Exception):
    """Base class for errors raised by this package."""


class TableShapeError(MvAlgebraError):
    """A Cayley table has the wrong dimensions or an out-of-range entry."""


class AxiomViolation(MvAlgebraError):
    """The tables fail one of the defining axioms M1..M4.

    Attributes:
        axiom:   "M1" | "M2" | "M3" | "M4"
        reason:  short description (e.g. "associativity")
        witness: tuple of element indices exhibiting the failure
    """

    def __init__(self, axiom: str, reason: str, witness: tuple[int, ...], labels=None):
        self.axiom = axiom
        self.reason = reason
        self.witness = witness
        shown = witness if labels is None else tuple(labels[i] for i in witness)
        super().__init__(f"axiom {axiom} violated ({reason}) at {shown}")


class ForeignElementError(MvAlgebraError):
    """An element index does not belong to the algebra it was used with."""


class TrivialAlgebraError(MvAlgebraError):
    """The one-element algebra was passed to an operation that needs at
    least two elements."""


def _as_int(value, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise TableShapeError(f"{what} must be an integer, got {value!r}")
    return value


class MvAlgebra:
    """A finite MV-algebra with all derived structure precomputed.

    Elements are the indices ``0 .. order-1``; ``labels`` are for
    display only.  Use :func:`from_tables`, :func:`lukasiewicz_chain` or
    :func:`direct_product` rather than calling the constructor with
    hand-rolled tables unless you mean to have them validated.
    """

    __slots__ = (
        "order",
        "zero",
        "one",
        "labels",
        "oplus_table",
        "star_table",
        "odot_table",
        "leq_table",
        "join_table",
        "meet_table",
        "booleans",
        "factors",
        "_label_index",
        "_hash",
    )

    def __init__(
        self,
        order: int,
        oplus: Sequence[Sequence[int]],
        star: Sequence[int],
        zero: int = 0,
        labels: Sequence[str] | None = None,
    ):
        order = _as_int(order, "order")
        if order < 1:
            raise TableShapeError(f"order must be >= 1, got {order}")
        if labels is None:
            labels = tuple(f"e{i}" for i in range(order))
        else:
            labels = tuple(str(s) for s in labels)
            if len(labels) != order:
                raise TableShapeError(
                    f"expected {order} labels, got {len(labels)}"
                )
            if len(set(labels)) != order:
                raise TableShapeError("labels must be unique")

        if len(oplus) != order:
            raise TableShapeError(f"oplus must have {order} rows, got {len(oplus)}")
        rows = []
        for i, row in enumerate(oplus):
            if len(row) != order:
                raise TableShapeError(
                    f"oplus row {i} has {len(row)} entries, expected {order}"
                )
            entries = tuple(_as_int(v, f"oplus[{i}][{j}]") for j, v in enumerate(row))
            for j, v in enumerate(entries):
                if not 0 <= v < order:
                    raise TableShapeError(f"oplus[{i}][{j}] = {v} out of range")
            rows.append(entries)
        oplus_t = tuple(rows)

        if len(star) != order:
            raise TableShapeError(f"star must have {order} entries, got {len(star)}")
        star_t = tuple(_as_int(v, f"star[{i}]") for i, v in enumerate(star))
        for i, v in enumerate(star_t):
            if not 0 <= v < order:
                raise TableShapeError(f"star[{i}] = {v} out of range")

        zero = _as_int(zero, "zero")
        if not 0 <= zero < order:
            raise TableShapeError(f"zero = {zero} out of range")

        _validate_axioms(order, oplus_t, star_t, zero, labels)

        one = star_t[zero]
        rng = range(order)
        odot_t = tuple(
            tuple(star_t[oplus_t[star_t[x]][star_t[y]]] for y in rng) for x in rng
        )
        leq_t = tuple(
            tuple(oplus_t[star_t[x]][y] == one for y in rng) for x in rng
        )
        join_t = tuple(
            tuple(oplus_t[odot_t[x][star_t[y]]][y] for y in rng) for x in rng
        )
        meet_t = tuple(
            tuple(odot_t[x][oplus_t[star_t[x]][y]] for y in rng) for x in rng
        )
        booleans = frozenset(x for x in rng if oplus_t[x][x] == x)

        # Cheap consequences of M1..M4; a failure here means a bug in the
        # table derivations above, not bad input.
        for x in rng:
            assert odot_t[x][star_t[x]] == zero
            assert oplus_t[x][star_t[x]] == one
            assert leq_t[x][x]
            for y in rng:
                if leq_t[x][y] and leq_t[y][x]:
                    assert x == y

        self.order = order
        self.zero = zero
        self.one = one
        self.labels = labels
        self.oplus_table = oplus_t
        self.star_table = star_t
        self.odot_table = odot_t
        self.leq_table = leq_t
        self.join_table = join_t
        self.meet_table = meet_t
        self.booleans = booleans
        self.factors: tuple[MvAlgebra, ...] | None = None
        self._label_index = {s: i for i, s in enumerate(labels)}
        self._hash = hash((order, zero, oplus_t, star_t))

    # -- element plumbing -------------------------------------------------

    def check_element(self, x: int) -> int:
        if isinstance(x, bool) or not isinstance(x, int) or not 0 <= x < self.order:
            raise ForeignElementError(
                f"{x!r} is not an element index of an order-{self.order} algebra"
            )
        return x

    def label(self, x: int) -> str:
        return self.labels[self.check_element(x)]

    def element(self, label: str) -> int:
        """Index of the element carrying ``label``."""
        try:
            return self._label_index[label]
        except KeyError:
            raise ForeignElementError(f"no element labelled {label!r}") from None

    @property
    def is_trivial(self) -> bool:
        return self.order == 1

    def elements(self) -> range:
        return range(self.order)

    # -- operations --------------------------------------------------------

    def oplus(self, x: int, y: int) -> int:
        return self.oplus_table[self.check_element(x)][self.check_element(y)]

    def star(self, x: int) -> int:
        return self.star_table[self.check_element(x)]

    def odot(self, x: int, y: int) -> int:
        return self.odot_table[self.check_element(x)][self.check_element(y)]

    def leq(self, x: int, y: int) -> bool:
        return self.leq_table[self.check_element(x)][self.check_element(y)]

    def join(self, x: int, y: int) -> int:
        return self.join_table[self.check_element(x)][self.check_element(y)]

    def meet(self, x: int, y: int) -> int:
        return self.meet_table[self.check_element(x)][self.check_element(y)]

    def distance(self, x: int, y: int) -> int:
        """d(x, y) = (x odot star(y)) oplus (y odot star(x))."""
        x = self.check_element(x)
        y = self.check_element(y)
        sx, sy = self.star_table[x], self.star_table[y]
        return self.oplus_table[self.odot_table[x][sy]][self.odot_table[y][sx]]

    # -- derived predicates --------------------------------------------------

    def boolean_elements(self) -> frozenset[int]:
        """The idempotents, i.e. every x with x oplus x = x."""
        return self.booleans

    def is_chain(self) -> bool:
        """True when the natural order is total."""
        leq = self.leq_table
        return all(
            leq[x][y] or leq[y][x]
            for x in range(self.order)
            for y in range(x + 1, self.order)
        )

    def is_directly_indecomposable(self) -> bool:
        """True when the only idempotents are 0 and 1."""
        return self.booleans == {self.zero, self.one}

    def fixed_points_of_star(self) -> frozenset[int]:
        fixed = frozenset(x for x in range(self.order) if self.star_table[x] == x)
        assert len(fixed) <= 1
        return fixed

    # -- products ------------------------------------------------------------

    def encode(self, coords: Sequence[int]) -> int:
        """Index of a factor-coordinate tuple in a product algebra."""
        if self.factors is None:
            raise MvAlgebraError("algebra was not built by direct_product")
        if len(coords) != len(self.factors):
            raise MvAlgebraError(
                f"expected {len(self.factors)} coordinates, got {len(coords)}"
            )
        idx = 0
        for f, c in zip(self.factors, coords):
            f.check_element(c)
            idx = idx * f.order + c
        return idx

    def decode(self, x: int) -> tuple[int, ...]:
        """Factor coordinates of element ``x`` in a product algebra."""
        if self.factors is None:
            raise MvAlgebraError("algebra was not built by direct_product")
        self.check_element(x)
        coords = []
        for f in reversed(self.factors):
            x, c = divmod(x, f.order)
            coords.append(c)
        return tuple(reversed(coords))

    # -- dunder ----------------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MvAlgebra)
            and self.order == other.order
            and self.zero == other.zero
            and self.oplus_table == other.oplus_table
            and self.star_table == other.star_table
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"MvAlgebra(order={self.order}, labels={list(self.labels)!r})"

    # -- serialization -----------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "zero": self.zero,
            "oplus": [list(row) for row in self.oplus_table],
            "star": list(self.star_table),
            "labels": list(self.labels),
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @staticmethod
    def from_dict(data: dict) -> "MvAlgebra":
        try:
            order = data["order"]
            oplus = data["oplus"]
            star = data["star"]
        except (TypeError, KeyError) as exc:
            raise TableShapeError(f"missing field in algebra JSON: {exc}") from None
        zero = data.get("zero", 0)
        labels = data.get("labels")
        return MvAlgebra(order, oplus, star, zero=zero, labels=labels)

    @staticmethod
    def from_json(text: str) -> "MvAlgebra":
        return MvAlgebra.from_dict(json.loads(text))


def _validate_axioms(order, oplus, star, zero, labels) -> None:
    rng = range(order)

    # M1: commutative monoid with identity `zero`.
    for x in rng:
        if oplus[zero][x] != x:
            raise AxiomViolation("M1", "identity", (x,), labels)
    for x in rng:
        for y in range(x + 1, order):
            if oplus[x][y] != oplus[y][x]:
                raise AxiomViolation("M1", "commutativity", (x, y), labels)
    for x in rng:
        ox = oplus[x]
        for y in rng:
            oxy = oplus[ox[y]]
            oy = oplus[y]
            for z in rng:
                if oxy[z] != ox[oy[z]]:
                    raise AxiomViolation("M1", "associativity", (x, y, z), labels)

    # M2: star is an involution.
    for x in rng:
        if star[star[x]] != x:
            raise AxiomViolation("M2", "involution", (x,), labels)

    # M3: star(zero) absorbs.
    one = star[zero]
    for x in rng:
        if oplus[x][one] != one:
            raise AxiomViolation("M3", "absorption", (x,), labels)

    # M4.
    for x in rng:
        sx = star[x]
        for y in rng:
            left = oplus[star[oplus[sx][y]]][y]
            right = oplus[star[oplus[star[y]][x]]][x]
            if left != right:
                raise AxiomViolation("M4", "exchange", (x, y), labels)


def from_tables(
    order: int,
    oplus: Sequence[Sequence[int]],
    star: Sequence[int],
    zero: int = 0,
    labels: Sequence[str] | None = None,
) -> MvAlgebra:
    """Build and validate an algebra from raw Cayley tables.

    Raises :class:`TableShapeError` for malformed input and
    :class:`AxiomViolation` (naming the first failed axiom and a witness
    tuple) when the tables do not describe an MV-algebra.
    """
    return MvAlgebra(order, oplus, star, zero=zero, labels=labels)


def trivial_algebra() -> MvAlgebra:
    """The one-element algebra."""
    return MvAlgebra(1, ((0,),), (0,), 0, labels=("0",))


def lukasiewicz_chain(n: int) -> MvAlgebra:
    """The n-element chain 0 < 1/(n-1) < ... < 1 with truncated addition.

    Element i stands for i/(n-1); oplus(i, j) = min(n-1, i+j) and
    star(i) = n-1-i.
    """
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"chain needs n >= 2, got {n!r}")
    top = n - 1
    oplus = tuple(tuple(min(top, i + j) for j in range(n)) for i in range(n))
    star = tuple(top - i for i in range(n))
    labels = ["0"]
    labels += [f"{i}/{top}" for i in range(1, top)]
    labels.append("1")
    return MvAlgebra(n, oplus, star, 0, labels=tuple(labels))


def direct_product(factors: Iterable[MvAlgebra]) -> MvAlgebra:
    """Product algebra with pointwise operations.

    Elements are tuples of factor elements packed mixed-radix with the
    first factor most significant, so the enumeration order is the
    lexicographic order of coordinate tuples.
    """
    factors = tuple(factors)
    if not factors:
        raise ValueError("direct_product needs at least one factor")
    orders = [f.order for f in factors]
    n = prod(orders)

    def decode(x: int) -> list[int]:
        coords = []
        for o in reversed(orders):
            x, c = divmod(x, o)
            coords.append(c)
        coords.reverse()
        return coords

    def encode(coords: Iterable[int]) -> int:
        idx = 0
        for o, c in zip(orders, coords):
            idx = idx * o + c
        return idx

    tuples = [decode(x) for x in range(n)]
    oplus = tuple(
        tuple(
            encode(f.oplus_table[a][b] for f, a, b in zip(factors, tx, ty))
            for ty in tuples
        )
        for tx in tuples
    )
    star = tuple(
        encode(f.star_table[a] for f, a in zip(factors, tx)) for tx in tuples
    )
    zero = encode(f.zero for f in factors)
    labels = tuple(
        "(" + ",".join(f.labels[a] for f, a in zip(factors, tx)) + ")"
        for tx in tuples
    )
    if len(set(labels)) != n:
        labels = None  # pathological factor labels; fall back to e<k>

    algebra = MvAlgebra(n, oplus, star, zero, labels=labels)
    algebra.factors = factors
    return algebra
