"""Prime spectra of the supported finite rings, with the Zariski topology.

Points are computed by structural rules (one per ring construction) with a
brute-force fallback for small unfamiliar rings; the D-locus map, the full
topology, its clopen subring, and the idempotent <-> clopen correspondence
live here too.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import DomainError, InternalCheckError, UnsupportedRingError
from .powerset import SetElem, Universe
from .rings import (
    BooleanizationRing,
    PowerSetRing,
    ProductRing,
    QuotientRing,
    Ring,
    RingElem,
    ZMod,
    atoms,
    idempotents,
    is_boolean,
)

BRUTE_FORCE_LIMIT = 16


@dataclass(frozen=True)
class PrimeIdeal:
    """A prime ideal stored as a membership mask over the ring's enumeration
    order.  ``provenance`` records which rule produced it."""

    ring: Ring
    member_mask: int
    label: str
    provenance: str = "structural"

    def contains_index(self, idx: int) -> bool:
        return bool(self.member_mask >> idx & 1)

    def member_count(self) -> int:
        return self.member_mask.bit_count()

    def quotient_size(self) -> int:
        return self.ring.size // self.member_count()

    def render(self) -> str:
        return self.label


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


class SpecSpace:
    """Spec(R) with its Zariski topology, for an enumerable ring R.

    ``opens`` is the explicit family of point subsets (as bit masks over the
    point list), generated by closing the basic opens D(f) under union.
    """

    def __init__(self, ring: Ring, points: list[PrimeIdeal]):
        self.ring = ring
        self.points = points
        self.elements = ring.element_list()
        self.index = {e: i for i, e in enumerate(self.elements)}
        self.all_mask = (1 << len(points)) - 1
        basics = sorted({self.d_locus(f) for f in self.elements})
        opens: set[int] = {0}
        for b in basics:
            opens |= {o | b for o in opens}
        self.opens = sorted(opens)
        self._open_set = opens
        self.basic_opens = basics

    def d_locus(self, f: RingElem) -> int:
        """D(f) = the points not containing f, as a point-index mask."""
        try:
            idx = self.index[f]
        except KeyError:
            raise DomainError("element outside this spectrum's ring") from None
        mask = 0
        for i, p in enumerate(self.points):
            if not p.contains_index(idx):
                mask |= 1 << i
        return mask

    def is_open(self, mask: int) -> bool:
        return mask in self._open_set

    def clopens(self) -> list[int]:
        return [o for o in self.opens if (self.all_mask ^ o) in self._open_set]

    def point_indices(self, mask: int) -> list[int]:
        return [i for i in range(len(self.points)) if mask >> i & 1]

    def point_members(self, p: PrimeIdeal) -> list[RingElem]:
        return [e for i, e in enumerate(self.elements) if p.contains_index(i)]

    def to_json(self) -> dict:
        points = [
            sorted(e.render() for e in self.point_members(p)) for p in self.points
        ]
        stone = [
            {"idempotent": e.render(), "d_locus": self.point_indices(self.d_locus(e))}
            for e in idempotents(self.ring)
        ]
        return {
            "ring": self.ring.describe(),
            "points": points,
            "opens": [self.point_indices(o) for o in self.opens],
            "clopens": [self.point_indices(c) for c in self.clopens()],
            "stone_map": stone,
        }


def _mask_from_members(elements: list[RingElem], predicate) -> int:
    mask = 0
    for i, e in enumerate(elements):
        if predicate(e):
            mask |= 1 << i
    return mask


def _spec_points(ring: Ring) -> list[PrimeIdeal]:
    elements = ring.element_list()

    if isinstance(ring, ZMod):
        points = []
        for p in _prime_factors(ring.n):
            mask = _mask_from_members(elements, lambda e: e.payload % p == 0)
            points.append(PrimeIdeal(ring, mask, f"({p})"))
        return points

    if isinstance(ring, PowerSetRing):
        points = []
        for x in ring.universe.labels:
            mask = _mask_from_members(elements, lambda e: x not in e.payload)
            points.append(PrimeIdeal(ring, mask, f"m_{x}"))
        return points

    if isinstance(ring, ProductRing):
        points = []
        for i, factor in enumerate(ring.factors):
            for p in _spec_points(factor):
                factor_elements = factor.element_list()
                factor_index = {e.payload: j for j, e in enumerate(factor_elements)}
                mask = _mask_from_members(
                    elements,
                    lambda e: p.contains_index(factor_index[e.payload[i]]),
                )
                points.append(
                    PrimeIdeal(ring, mask, f"f{i}.{p.label}", provenance=p.provenance)
                )
        return points

    if isinstance(ring, QuotientRing):
        ideal = ring.ideal_members()
        points = []
        for p in _spec_points(ring.base):
            base_index = {e: i for i, e in enumerate(ring.base.element_list())}
            if not all(p.contains_index(base_index[g]) for g in ideal):
                continue
            mask = _mask_from_members(
                elements,
                lambda e: p.contains_index(base_index[RingElem(ring.base, e.payload)]),
            )
            points.append(PrimeIdeal(ring, mask, p.label, provenance=p.provenance))
        return points

    if is_boolean(ring):
        # one prime per atom a: the annihilator {r : r*a = 0}
        zero = ring.zero
        points = []
        for a in atoms(ring):
            mask = _mask_from_members(elements, lambda e: e * a == zero)
            points.append(PrimeIdeal(ring, mask, f"ann({a.render()})"))
        return points

    if ring.size <= BRUTE_FORCE_LIMIT:
        return brute_force_spec_points(ring)

    raise UnsupportedRingError(
        f"no structural spectrum rule for {ring.describe()} "
        f"(size {ring.size} exceeds the brute-force limit {BRUTE_FORCE_LIMIT})"
    )


def spec(ring: Ring) -> SpecSpace:
    return SpecSpace(ring, _spec_points(ring))


def brute_force_spec_points(ring: Ring) -> list[PrimeIdeal]:
    """Scan every subset of the element table for the prime-ideal axioms.

    Only for rings of size <= 16; independent of all structural rules.
    """
    elements = ring.element_list()
    n = len(elements)
    if n > BRUTE_FORCE_LIMIT:
        raise UnsupportedRingError(f"brute force needs size <= {BRUTE_FORCE_LIMIT}")
    index = {e: i for i, e in enumerate(elements)}
    add = [[index[a + b] for b in elements] for a in elements]
    mul = [[index[a * b] for b in elements] for a in elements]
    zero_i = index[ring.zero]
    one_i = index[ring.one]

    points = []
    for c in range(1 << n):
        if not c >> zero_i & 1 or c >> one_i & 1:
            continue
        members = [i for i in range(n) if c >> i & 1]
        if not _is_ideal_mask(c, members, add, mul, n):
            continue
        outside = [i for i in range(n) if not c >> i & 1]
        if all(not c >> mul[a][b] & 1 for a in outside for b in outside):
            points.append(
                PrimeIdeal(ring, c, f"p{len(points)}", provenance="brute-force")
            )
    return points


def _is_ideal_mask(c: int, members: list[int], add, mul, n: int) -> bool:
    for a in members:
        row = add[a]
        for b in members:
            if not c >> row[b] & 1:
                return False
    for r in range(n):
        row = mul[r]
        for a in members:
            if not c >> row[a] & 1:
                return False
    return True


def brute_force_ideal_masks(ring: Ring) -> list[int]:
    """All ideals of a small ring, as membership masks (independent oracle)."""
    elements = ring.element_list()
    n = len(elements)
    if n > BRUTE_FORCE_LIMIT:
        raise UnsupportedRingError(f"brute force needs size <= {BRUTE_FORCE_LIMIT}")
    index = {e: i for i, e in enumerate(elements)}
    add = [[index[a + b] for b in elements] for a in elements]
    mul = [[index[a * b] for b in elements] for a in elements]
    zero_i = index[ring.zero]
    out = []
    for c in range(1 << n):
        if not c >> zero_i & 1:
            continue
        members = [i for i in range(n) if c >> i & 1]
        if _is_ideal_mask(c, members, add, mul, n):
            out.append(c)
    return out


@dataclass
class StoneMapResult:
    """The idempotent -> D-locus table plus its verification evidence."""

    ring: Ring
    space: SpecSpace
    entries: list[tuple[RingElem, int]]
    bijective: bool
    additive: bool
    multiplicative: bool
    unital: bool

    @property
    def verified(self) -> bool:
        return self.bijective and self.additive and self.multiplicative and self.unital


def _oplus(e: RingElem, f: RingElem) -> RingElem:
    prod = e * f
    return e + f - (prod + prod)


def stone_map(ring: Ring, space: SpecSpace | None = None) -> StoneMapResult:
    """The map e -> D(e) from idempotents onto the clopens of Spec, verified:
    bijective, turns (+) into symmetric difference and products into
    intersections, and sends 1 to the whole space."""
    space = space if space is not None else spec(ring)
    idems = idempotents(ring)
    entries = [(e, space.d_locus(e)) for e in idems]
    masks = [m for _, m in entries]
    clopen_set = set(space.clopens())
    bijective = len(set(masks)) == len(masks) and set(masks) == clopen_set

    d_of = dict(entries)
    additive = all(
        space.d_locus(_oplus(e, f)) == d_of[e] ^ d_of[f] for e in idems for f in idems
    )
    multiplicative = all(
        space.d_locus(e * f) == d_of[e] & d_of[f] for e in idems for f in idems
    )
    unital = d_of[ring.one] == space.all_mask and d_of[ring.zero] == 0

    result = StoneMapResult(
        ring, space, entries, bijective, additive, multiplicative, unital
    )
    if not result.verified:
        raise InternalCheckError(
            f"idempotent/clopen correspondence failed for {ring.describe()}: "
            f"bijective={bijective} additive={additive} "
            f"multiplicative={multiplicative} unital={unital}"
        )
    return result


def clopen_comparison_via_booleanization(ring: Ring) -> bool:
    """Clop(Spec R) matches Clop(Spec B(R)) through f -> D'(f).

    Both clopen families are parameterized by the idempotents of R; the
    comparison checks the two D-maps give isomorphic tables.
    """
    b = BooleanizationRing(ring)
    s_ring = spec(ring)
    s_bool = spec(b)
    idems = idempotents(ring)
    table = {}
    for e in idems:
        table[s_ring.d_locus(e)] = s_bool.d_locus(b.wrap(e))
    if len(table) != len(idems):
        return False
    if set(table) != set(s_ring.clopens()):
        return False
    if set(table.values()) != set(s_bool.clopens()):
        return False
    # ring structure: symmetric difference and intersection of masks
    pairs = list(table.items())
    for m1, b1 in pairs:
        for m2, b2 in pairs:
            if table.get(m1 ^ m2) != b1 ^ b2 or table.get(m1 & m2) != b1 & b2:
                return False
    return True


class F2Hom:
    """A ring hom R -> Z/2, stored by its kernel (a prime with 2-element
    quotient); application is the indicator of lying outside the kernel."""

    def __init__(self, space: SpecSpace, kernel: PrimeIdeal):
        self.ring = space.ring
        self.kernel = kernel
        self._space = space

    def __call__(self, e: RingElem) -> int:
        return 0 if self.kernel.contains_index(self._space.index[e]) else 1

    def is_ring_hom(self) -> bool:
        elems = self._space.elements
        if self(self.ring.one) != 1 or self(self.ring.zero) != 0:
            return False
        for a in elems:
            fa = self(a)
            for b in elems:
                fb = self(b)
                if self(a + b) != fa ^ fb or self(a * b) != fa & fb:
                    return False
        return True

    def render(self) -> str:
        return f"->Z/2 with kernel {self.kernel.render()}"


def homs_to_f2(ring: Ring, space: SpecSpace | None = None) -> list[F2Hom]:
    """All ring homs R -> Z/2: one per prime with a 2-element quotient."""
    space = space if space is not None else spec(ring)
    out = []
    for p in space.points:
        if p.quotient_size() == 2:
            out.append(F2Hom(space, p))
    return out


def f2_hom_spec_bijection(ring: Ring) -> bool:
    """For a Boolean ring, kernels of homs to Z/2 enumerate Spec exactly."""
    if not is_boolean(ring):
        raise DomainError("the kernel bijection is asserted for Boolean rings")
    space = spec(ring)
    kernels = [h.kernel.member_mask for h in homs_to_f2(ring, space)]
    points = [p.member_mask for p in space.points]
    return len(set(kernels)) == len(kernels) and set(kernels) == set(points)


def dlocus_order_check(a: SetElem, b: SetElem, space: SpecSpace | None = None) -> bool:
    """Return whether a is a subset of b, asserting it matches D(a) <= D(b)."""
    if a.universe != b.universe:
        raise DomainError("subsets must share a universe")
    if space is None:
        space = spec(PowerSetRing(a.universe))
    ring = space.ring
    if not isinstance(ring, PowerSetRing) or ring.universe != a.universe:
        raise DomainError("spectrum does not match the subsets' universe")
    da = space.d_locus(ring.wrap(a))
    db = space.d_locus(ring.wrap(b))
    subset = a.issubset(b)
    d_subset = da & ~db == 0
    if subset != d_subset:
        raise InternalCheckError(
            f"order mismatch for {a.render()}, {b.render()}: "
            f"subset={subset}, D-subset={d_subset}"
        )
    return subset
