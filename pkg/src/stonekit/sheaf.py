"""The structure sheaf A -> P(A) on a finite discrete space, and the induced
scheme structure.

Sections over an open A are stored as subsets of the ambient universe lying
inside A; restriction is intersection.  The canonical comparison morphism
onto the spectrum of P(X) is tabulated open by open and verified to be a
homeomorphism with ring-isomorphism comaps; functions between universes
induce morphisms of the resulting ringed spaces.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

from .errors import CompatibilityError, DomainError, InternalCheckError
from .guards import require_enumerable
from .powerset import (
    SetElem,
    SetFunction,
    Universe,
    induced_hom,
)
from .rings import (
    PowerSetRing,
    QuotientRing,
    Ring,
    RingElem,
    RingHom,
    localize_at_idempotent,
)
from .spectrum import SpecSpace, spec

FULL_TABULATION_LIMIT = 10


def sub_universe(a: SetElem) -> Universe:
    return Universe(a.labels())


class StructureSheaf:
    """O(A) = P(A) on the discrete space of a universe, restriction by
    intersection.  Fully tabulated for universes up to the tabulation
    limit; beyond it only section rings on demand."""

    def __init__(self, universe: Universe):
        self.universe = universe
        self.tabulated = universe.size <= FULL_TABULATION_LIMIT

    def opens(self) -> Iterator[SetElem]:
        require_enumerable(1 << self.universe.size, "discrete topology")
        return self.universe.subsets()

    def sections(self, a: SetElem) -> list[SetElem]:
        """All sections over A: the subsets of A (in the ambient encoding)."""
        self._check_open(a)
        return [s for s in self.universe.subsets() if s.issubset(a)]

    def section_ring(self, a: SetElem) -> PowerSetRing:
        """O(A) as a standalone ring over the sub-universe of A."""
        self._check_open(a)
        return PowerSetRing(sub_universe(a))

    def restrict(self, s: SetElem, a: SetElem) -> SetElem:
        """Restriction of a section to a smaller open: intersection."""
        return s * a

    def restriction_hom(self, b: SetElem, a: SetElem) -> RingHom:
        """O(B) -> O(A) for A inside B, as a checked ring hom."""
        if not a.issubset(b):
            raise DomainError("restriction target must be contained in the source open")
        source = self.section_ring(b)
        target = self.section_ring(a)
        return RingHom.from_function(
            source,
            target,
            lambda e: target.wrap(
                (e.payload.reembed(self.universe) * a).reembed(target.universe)
            ),
        )

    def _check_open(self, a: SetElem) -> None:
        if a.universe != self.universe:
            raise DomainError("open from another space")

    def presheaf_laws_hold(self) -> bool:
        """Identity and contravariant composition of restrictions,
        exhaustively over all chains S <= A <= B."""
        for b in self.universe.subsets():
            for a in self.universe.subsets():
                if not a.issubset(b):
                    continue
                for s in self.sections(b):
                    via_b = self.restrict(s, b)
                    if via_b != s:
                        return False
                    if self.restrict(self.restrict(s, b), a) != self.restrict(s, a):
                        return False
        return True


def structure_sheaf(universe: Universe) -> StructureSheaf:
    return StructureSheaf(universe)


def check_gluing(
    cover: Sequence[SetElem], sections: Sequence[SetElem]
) -> SetElem:
    """Glue a compatible family: the union of the sections.

    ``sections[k]`` must be a section over ``cover[k]``; families that
    disagree on an overlap raise, naming the offending pair.
    """
    if len(cover) != len(sections):
        raise DomainError("need exactly one section per cover member")
    if not cover:
        raise DomainError("cannot glue over an empty cover; pass the empty open")
    universe = cover[0].universe
    covered = universe.empty
    for a in cover:
        covered = covered.union(a)
    for k, (a, s) in enumerate(zip(cover, sections)):
        if not s.issubset(a):
            raise DomainError(f"section {k} ({s.render()}) is not inside {a.render()}")
    for k in range(len(cover)):
        for l in range(k + 1, len(cover)):
            if sections[k] * cover[l] != sections[l] * cover[k]:
                raise CompatibilityError(
                    f"sections {k} and {l} disagree on the overlap "
                    f"{(cover[k] * cover[l]).render()}: "
                    f"{sections[k].render()} vs {sections[l].render()}",
                    pair=(k, l),
                )
    glued = universe.empty
    for s in sections:
        glued = glued.union(s)
    for k, a in enumerate(cover):
        assert glued * a == sections[k]
    return glued


def all_covers(a: SetElem) -> Iterator[tuple[SetElem, ...]]:
    """Every family of subsets of A whose union is A (not only minimal
    ones), deduplicated by the family itself; the empty open is covered by
    the empty family and by {empty}."""
    subsets = [s for s in a.universe.subsets() if s.issubset(a)]
    for r in range(len(subsets) + 1):
        for family in itertools.combinations(subsets, r):
            union = a.universe.empty
            for s in family:
                union = union.union(s)
            if union == a:
                yield family


def compatible_families(
    cover: Sequence[SetElem],
) -> Iterator[tuple[SetElem, ...]]:
    """Every compatible choice of sections over a cover (exhaustive)."""
    universe = cover[0].universe if cover else None
    choices = []
    for a in cover:
        choices.append([s for s in universe.subsets() if s.issubset(a)])
    for family in itertools.product(*choices):
        ok = True
        for k in range(len(cover)):
            for l in range(k + 1, len(cover)):
                if family[k] * cover[l] != family[l] * cover[k]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            yield family


@dataclass
class EtaMorphism:
    """The comparison (point map, comaps) from the discrete space of X to
    the spectrum of P(X)."""

    universe: Universe
    space: SpecSpace
    point_of: dict[str, int]  # label -> point index
    comaps: dict[int, RingHom]  # D(A)-mask of A -> iso R_A -> P(A)
    bijective: bool
    homeomorphism: bool
    preimage_law: bool
    comaps_iso: bool
    natural: bool

    @property
    def verified(self) -> bool:
        return (
            self.bijective
            and self.homeomorphism
            and self.preimage_law
            and self.comaps_iso
            and self.natural
        )


def eta(universe: Universe) -> EtaMorphism:
    """Send x to the prime of subsets avoiding x; verify the map is a
    homeomorphism and that every comap along the chain
    sections(D(A)) = localization at A = quotient by (complement of A) = P(A)
    is a ring isomorphism compatible with restriction."""
    ring = PowerSetRing(universe)
    space = spec(ring)

    point_of: dict[str, int] = {}
    for x in universe.labels:
        hits = [
            i
            for i, p in enumerate(space.points)
            if not p.contains_index(space.index[ring.wrap(universe.singleton(x))])
        ]
        if len(hits) != 1:
            raise InternalCheckError(f"point map ill-defined at {x!r}")
        point_of[x] = hits[0]

    bijective = len(set(point_of.values())) == universe.size == len(space.points)
    # discrete target: the Zariski topology must contain every point subset
    homeomorphism = bijective and len(space.opens) == 1 << len(space.points)

    preimage_law = True
    for a in universe.subsets():
        d_mask = space.d_locus(ring.wrap(a))
        pulled = universe.subset(
            x for x in universe.labels if d_mask >> point_of[x] & 1
        )
        if pulled != a:
            preimage_law = False
            break

    comaps: dict[int, RingHom] = {}
    comaps_iso = True
    localizations: dict[int, QuotientRing] = {}
    for a in universe.subsets():
        localized, _ = localize_at_idempotent(ring, ring.wrap(a))
        target = PowerSetRing(sub_universe(a))
        comap = RingHom.from_function(
            localized,
            target,
            lambda e, _t=target: _t.wrap(e.payload.reembed(_t.universe)),
        )
        if not comap.is_bijective():
            comaps_iso = False
        localizations[a.mask] = localized
        comaps[a.mask] = comap

    # naturality: comaps commute with restriction along A' inside A
    natural = True
    for a in universe.subsets():
        for a2 in universe.subsets():
            if not a2.issubset(a):
                continue
            big = localizations[a.mask]
            small = localizations[a2.mask]
            for e in big.elements():
                restricted_first = small.project(ring.wrap(e.payload * a2))
                left = comaps[a2.mask](restricted_first)
                right_big = comaps[a.mask](e).payload.reembed(universe)
                right = (right_big * a2).reembed(sub_universe(a2))
                if left.payload != right:
                    natural = False
    return EtaMorphism(
        universe,
        space,
        point_of,
        comaps,
        bijective,
        homeomorphism,
        preimage_law,
        comaps_iso,
        natural,
    )


def stalk(universe: Universe, x: str) -> PowerSetRing:
    """The stalk at a point: sections over the minimal open {x}, a
    2-element field."""
    if x not in universe:
        raise DomainError(f"unknown point {x!r}")
    return PowerSetRing(Universe((x,)))


def germ(s: SetElem, x: str) -> int:
    """The germ of a section at x: its membership bit."""
    return 1 if x in s else 0


@dataclass
class AffineEvidence:
    affine: bool
    eta: EtaMorphism
    note: str


def is_affine(universe: Universe) -> AffineEvidence:
    """Finite discrete spaces compare isomorphically onto the spectrum of
    their power set ring; the evidence is the verified comparison morphism.
    (Infinite spaces are not representable here; they would fail
    quasi-compactness.)"""
    evidence = eta(universe)
    return AffineEvidence(
        evidence.verified,
        evidence,
        "finite scale only: infinite discrete spaces are out of scope "
        "(they are not quasi-compact, hence never of this form)",
    )


class SchemeMorphism:
    """A function between universes together with its comaps
    O(A) -> O(f^{-1}(A)), tabulated per open of the codomain."""

    def __init__(self, f: SetFunction):
        self.f = f
        self.comaps: dict[int, RingHom] = {}
        for a in f.codomain.subsets():
            pre = f.preimage(a)
            restriction = SetFunction(
                sub_universe(pre), sub_universe(a),
                tuple(f(x) for x in pre.labels()),
            )
            ps_hom = induced_hom(restriction)
            source = PowerSetRing(sub_universe(a))
            target = PowerSetRing(sub_universe(pre))
            self.comaps[a.mask] = RingHom.from_function(
                source, target, lambda e, _h=ps_hom, _t=target: _t.wrap(_h(e.payload))
            )

    @property
    def domain(self) -> Universe:
        return self.f.domain

    @property
    def codomain(self) -> Universe:
        return self.f.codomain

    def compose(self, inner: "SchemeMorphism") -> "SchemeMorphism":
        """self o inner as scheme morphisms (covariant in the functions)."""
        return SchemeMorphism(self.f.compose(inner.f))

    def comaps_compatible_with_restrictions(self) -> bool:
        """For every A' inside A, restricting then pulling back equals
        pulling back then restricting."""
        f = self.f
        for a in f.codomain.subsets():
            pre_a = f.preimage(a)
            for a2 in f.codomain.subsets():
                if not a2.issubset(a):
                    continue
                pre_a2 = f.preimage(a2)
                for s in PowerSetRing(sub_universe(a)).elements():
                    big = s.payload.reembed(f.codomain)
                    restricted = (big * a2).reembed(sub_universe(a2))
                    left = self.comaps[a2.mask](
                        PowerSetRing(sub_universe(a2)).wrap(restricted)
                    )
                    pulled = self.comaps[a.mask](s).payload.reembed(f.domain)
                    right = (pulled * pre_a2).reembed(sub_universe(pre_a2))
                    if left.payload != right:
                        return False
        return True

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SchemeMorphism)
            and self.f == other.f
            and {k: v.table for k, v in self.comaps.items()}
            == {k: v.table for k, v in other.comaps.items()}
        )

    def __repr__(self):
        return f"SchemeMorphism({self.f.render()})"


def scheme_morphism(f: SetFunction) -> SchemeMorphism:
    return SchemeMorphism(f)
