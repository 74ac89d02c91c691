"""Tensor products of power-set algebras over a common power-set base ring.

P(A) and P(B) are algebras over R = P(X) through restriction; their tensor
product over R is built concretely: GF(2) span of atom pairs {a} (x) {b},
quotiented by the balancing relations r.s (x) t + s (x) r.t.  The result is
a Boolean ring of dimension |A & B| with a canonical isomorphism onto
P(A & B).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import DomainError, InternalCheckError
from .gf2 import F2Matrix
from .powerset import SetElem, Universe
from .rings import (
    PowerSetRing,
    ProductRing,
    QuotientRing,
    Ring,
    RingElem,
    RingHom,
    ideal_closure,
)


def sub_power_ring(a: SetElem) -> PowerSetRing:
    """P(A) for A a subset of some larger universe (label order inherited)."""
    return PowerSetRing(Universe(a.labels()))


@dataclass(frozen=True)
class PowerSetAlgebra:
    """P(A) as an algebra over P(X): the action of r is intersection."""

    base: PowerSetRing
    carrier: SetElem

    def __post_init__(self):
        if self.carrier.universe != self.base.universe:
            raise DomainError("carrier must be a subset of the base universe")

    def act(self, r: SetElem, m: SetElem) -> SetElem:
        """r . m; both as subsets of the big universe, m inside the carrier."""
        return r * m

    def structure_hom(self) -> RingHom:
        """The restriction map P(X) -> P(A)."""
        target = sub_power_ring(self.carrier)
        return RingHom.from_function(
            self.base,
            target,
            lambda e: target.wrap((e.payload * self.carrier).reembed(target.universe)),
            check=False,
        )

    def atom_labels(self) -> tuple[str, ...]:
        return self.carrier.labels()


class TensorAlgebra(Ring):
    """P(A) (x)_{P(X)} P(B), realized on canonical coordinates.

    Coordinates index atom pairs (a, b) with a in A, b in B.  Elements are
    the vectors with zeros at the relation matrix's pivot columns; addition
    is XOR and multiplication is bitwise AND (the atom pairs are orthogonal
    idempotents), both of which stay on canonical vectors.
    """

    def __init__(self, left: PowerSetAlgebra, right: PowerSetAlgebra, full_relations: bool = False):
        if left.base != right.base:
            raise DomainError("tensor factors must share the base ring")
        self.base = left.base
        self.left = left
        self.right = right
        self.atoms_a = left.atom_labels()
        self.atoms_b = right.atom_labels()
        self.n_cols = len(self.atoms_a) * len(self.atoms_b)
        x = self.base.universe
        if full_relations:
            acting = [SetElem(x, m) for m in range(1 << x.size)]
        else:
            # additive generators of P(X): the singletons, plus 1
            acting = [x.singleton(t) for t in x.labels] + [x.full]
        rows = []
        for r in acting:
            for i, a in enumerate(self.atoms_a):
                for j, b in enumerate(self.atoms_b):
                    # (r.{a}) (x) {b} + {a} (x) (r.{b})
                    coeff = (a in r) ^ (b in r)
                    if coeff:
                        rows.append(1 << self._col(i, j))
        self.relations = F2Matrix.from_rows(rows, self.n_cols).rref()
        self._pivot_mask = 0
        for p in self.relations.pivots():
            self._pivot_mask |= 1 << p
        self._free_cols = [
            c for c in range(self.n_cols) if not self._pivot_mask >> c & 1
        ]

    def _col(self, i: int, j: int) -> int:
        return i * len(self.atoms_b) + j

    @property
    def dimension(self) -> int:
        return len(self._free_cols)

    @property
    def size(self) -> int:
        return 1 << self.dimension

    def reduce(self, v: int) -> int:
        return self.relations.reduce_vector(v)

    def pure_tensor(self, s: SetElem, t: SetElem) -> RingElem:
        """The class of s (x) t for s inside A and t inside B."""
        if not s.issubset(self.left.carrier) or not t.issubset(self.right.carrier):
            raise DomainError("pure tensor factors must lie in the carriers")
        v = 0
        for i, a in enumerate(self.atoms_a):
            if a in s:
                for j, b in enumerate(self.atoms_b):
                    if b in t:
                        v ^= 1 << self._col(i, j)
        return RingElem(self, self.reduce(v))

    def _enumerate_payloads(self):
        for k in range(1 << self.dimension):
            v = 0
            for j, c in enumerate(self._free_cols):
                if k >> j & 1:
                    v |= 1 << c
            yield v

    def _add(self, a, b):
        return a ^ b

    def _mul(self, a, b):
        return self.reduce(a & b)

    def _neg(self, a):
        return a

    def _zero_payload(self):
        return 0

    def _one_payload(self):
        return self.pure_tensor(self.left.carrier, self.right.carrier).payload

    def _key(self):
        return (
            "tensor",
            self.base._key(),
            self.left.carrier.mask,
            self.right.carrier.mask,
        )

    def describe(self):
        return (
            f"tensor({self.left.carrier.render()}, {self.right.carrier.render()} "
            f"over {self.base.describe()})"
        )

    def render_elem(self, e):
        terms = []
        for i, a in enumerate(self.atoms_a):
            for j, b in enumerate(self.atoms_b):
                if e.payload >> self._col(i, j) & 1:
                    terms.append(f"{{{a}}}(x){{{b}}}")
        return " + ".join(terms) if terms else "0"

    @cached_property
    def intersection_ring(self) -> PowerSetRing:
        return sub_power_ring(self.left.carrier * self.right.carrier)

    def to_intersection(self, e: RingElem) -> RingElem:
        """The canonical map onto P(A & B): {a} (x) {b} -> {a} & {b}."""
        if e.ring != self:
            raise DomainError("element from another tensor algebra")
        target = self.intersection_ring
        out = target.universe.empty
        for i, a in enumerate(self.atoms_a):
            for j, b in enumerate(self.atoms_b):
                if e.payload >> self._col(i, j) & 1 and a == b:
                    out = out + target.universe.singleton(a)
        return target.wrap(out)

    def intersection_iso(self) -> RingHom:
        """The map above as a verified ring isomorphism."""
        hom = RingHom.from_function(self, self.intersection_ring, self.to_intersection)
        if not hom.is_bijective():
            raise InternalCheckError(
                f"tensor comparison map is not bijective for {self.describe()}"
            )
        return hom


def tensor_product(left: PowerSetAlgebra, right: PowerSetAlgebra) -> TensorAlgebra:
    return TensorAlgebra(left, right)


def tensor_over(base: PowerSetRing, a: SetElem, b: SetElem) -> TensorAlgebra:
    return TensorAlgebra(PowerSetAlgebra(base, a), PowerSetAlgebra(base, b))


@dataclass
class ProductSplit:
    """The map P(A | B) -> P(A) x P(B), C -> (C & A, C & B), with evidence.

    Always injective; an isomorphism exactly when A and B are disjoint.
    """

    hom: RingHom
    left: SetElem
    right: SetElem
    injective: bool
    surjective: bool

    @property
    def disjoint(self) -> bool:
        return (self.left * self.right).mask == 0

    @property
    def isomorphism(self) -> bool:
        return self.injective and self.surjective

    def summary(self) -> str:
        kind = "isomorphism" if self.isomorphism else "monomorphism (not onto)"
        note = "" if self.disjoint else "; overlap is nonempty, so not surjective"
        return f"{self.hom.source.describe()} -> {self.hom.target.describe()}: {kind}{note}"


def product_map(a: SetElem, b: SetElem) -> ProductSplit:
    if a.universe != b.universe:
        raise DomainError("subsets must share a universe")
    source = sub_power_ring(a.union(b))
    ring_a = sub_power_ring(a)
    ring_b = sub_power_ring(b)
    target = ProductRing((ring_a, ring_b))

    def split(e: RingElem) -> RingElem:
        c = e.payload.reembed(a.universe)
        ca = (c * a).reembed(ring_a.universe)
        cb = (c * b).reembed(ring_b.universe)
        return RingElem(target, (ca, cb))

    hom = RingHom.from_function(source, target, split)
    return ProductSplit(hom, a, b, hom.is_injective(), hom.is_surjective())


@dataclass(frozen=True)
class FiniteIdeal:
    """An ideal of an enumerable ring, stored by its member set."""

    ring: Ring
    members: frozenset[RingElem]
    generators: tuple[RingElem, ...]

    def __contains__(self, e: RingElem) -> bool:
        return e in self.members

    @property
    def is_zero(self) -> bool:
        return len(self.members) == 1

    @property
    def is_unit(self) -> bool:
        return len(self.members) == self.ring.size


def extend_ideal(phi: RingHom, generators: list[RingElem]) -> FiniteIdeal:
    """The ideal of the target generated by the image of the given ideal."""
    image_gens = [phi(g) for g in generators]
    members = ideal_closure(phi.target, image_gens)
    return FiniteIdeal(phi.target, members, tuple(image_gens))


@dataclass
class FinQuotientTensor:
    """R/Fin(X) (x)_R P(A) at finite scale.

    Fin(X) = P(X) when X is finite, so the quotient and the tensor are the
    zero ring; the report records that the statement is degenerate here.
    """

    algebra: TensorAlgebra
    note: str


def tensor_with_fin_quotient(base: PowerSetRing, a: SetElem) -> FinQuotientTensor:
    if a.universe != base.universe:
        raise DomainError("subset must lie in the base universe")
    fin_quotient = QuotientRing(base, (base.one,))  # Fin(X) = P(X) at finite X
    assert fin_quotient.is_zero_ring
    # tensoring with the zero ring: realized as the tensor over P(X) with the
    # empty carrier, which has dimension 0
    empty = PowerSetAlgebra(base, base.universe.empty)
    algebra = TensorAlgebra(empty, PowerSetAlgebra(base, a))
    return FinQuotientTensor(
        algebra,
        "finite universe: the finite-subsets ideal is the unit ideal, "
        "so the quotient side is the zero ring and the tensor vanishes",
    )
