"""Arithmetic and ideal theory of the power set ring of a finite universe.

Subsets are membership masks over a fixed label order: bit i of a mask is
membership of ``universe.labels[i]``.  Addition is symmetric difference,
multiplication is intersection, so every element is idempotent and equals
its own negation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import DomainError
from .guards import require_enumerable


@dataclass(frozen=True)
class Universe:
    """A finite ground set with a fixed label order (bit positions are stable)."""

    labels: tuple[str, ...]

    def __post_init__(self):
        if len(set(self.labels)) != len(self.labels):
            raise DomainError(f"universe labels must be distinct: {self.labels}")
        object.__setattr__(self, "_index", {x: i for i, x in enumerate(self.labels)})

    @staticmethod
    def of(labels: Iterable[str]) -> "Universe":
        return Universe(tuple(labels))

    @property
    def size(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise DomainError(f"label {label!r} not in universe {self.render()}") from None

    def __contains__(self, label: str) -> bool:
        return label in self._index

    @property
    def empty(self) -> "SetElem":
        return SetElem(self, 0)

    @property
    def full(self) -> "SetElem":
        return SetElem(self, (1 << self.size) - 1)

    def singleton(self, label: str) -> "SetElem":
        return SetElem(self, 1 << self.index(label))

    def subset(self, labels: Iterable[str]) -> "SetElem":
        mask = 0
        for x in labels:
            mask |= 1 << self.index(x)
        return SetElem(self, mask)

    def subsets(self) -> Iterator["SetElem"]:
        """All subsets in mask order (deterministic), guarded against blow-up."""
        require_enumerable(1 << self.size, f"power set of {self.render()}")
        for mask in range(1 << self.size):
            yield SetElem(self, mask)

    def render(self) -> str:
        return "{" + ",".join(self.labels) + "}"

    def __repr__(self) -> str:
        return f"Universe({self.render()})"


@dataclass(frozen=True)
class SetElem:
    """A subset of a universe, i.e. one element of its power set ring."""

    universe: Universe
    mask: int

    def __post_init__(self):
        if not 0 <= self.mask < (1 << self.universe.size):
            raise DomainError(f"mask {self.mask} out of range for {self.universe.render()}")

    def _check_same(self, other: "SetElem") -> None:
        if not isinstance(other, SetElem):
            raise DomainError(f"expected a set, got {type(other).__name__}")
        if other.universe != self.universe:
            raise DomainError(
                f"universe mismatch: {self.universe.render()} vs {other.universe.render()}"
            )

    # Ring structure: + is symmetric difference, * is intersection.
    def __add__(self, other: "SetElem") -> "SetElem":
        self._check_same(other)
        return SetElem(self.universe, self.mask ^ other.mask)

    def __mul__(self, other: "SetElem") -> "SetElem":
        self._check_same(other)
        return SetElem(self.universe, self.mask & other.mask)

    def __neg__(self) -> "SetElem":
        return self

    def __sub__(self, other: "SetElem") -> "SetElem":
        return self + (-other)

    def union(self, other: "SetElem") -> "SetElem":
        """A + B - AB, which agrees with the bitwise union."""
        out = self + other - self * other
        assert out.mask == self.mask | other.mask
        return out

    def difference(self, other: "SetElem") -> "SetElem":
        """A - AB, which agrees with the bitwise set difference."""
        out = self - self * other
        assert out.mask == self.mask & ~other.mask
        return out

    def complement(self) -> "SetElem":
        """1 - A."""
        return self.universe.full - self

    def issubset(self, other: "SetElem") -> bool:
        self._check_same(other)
        return self.mask & ~other.mask == 0

    def __le__(self, other: "SetElem") -> bool:
        return self.issubset(other)

    def __contains__(self, label: str) -> bool:
        return bool(self.mask >> self.universe.index(label) & 1)

    def labels(self) -> tuple[str, ...]:
        return tuple(x for i, x in enumerate(self.universe.labels) if self.mask >> i & 1)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def reembed(self, target: Universe) -> "SetElem":
        """The same labels as a subset of another universe."""
        if target == self.universe:
            return self
        return target.subset(self.labels())

    def characteristic(self) -> dict[str, int]:
        """The characteristic function, as label -> 0/1."""
        return {x: self.mask >> i & 1 for i, x in enumerate(self.universe.labels)}

    @staticmethod
    def from_characteristic(universe: Universe, chi: dict[str, int]) -> "SetElem":
        return universe.subset(x for x in universe.labels if chi.get(x, 0))

    def render(self) -> str:
        """Canonical text form: labels in universe order, `{}` when empty."""
        return "{" + ",".join(self.labels()) + "}"

    def to_json(self) -> dict:
        bits = "".join("1" if self.mask >> i & 1 else "0" for i in range(self.universe.size))
        return {"universe": list(self.universe.labels), "bits": bits}

    @staticmethod
    def from_json(data: dict) -> "SetElem":
        universe = Universe.of(data["universe"])
        bits = data["bits"]
        if len(bits) != universe.size or set(bits) - {"0", "1"}:
            raise DomainError(f"bad bits field {bits!r} for universe {universe.render()}")
        mask = sum(1 << i for i, b in enumerate(bits) if b == "1")
        return SetElem(universe, mask)

    def __repr__(self) -> str:
        return f"SetElem({self.render()} in {self.universe.render()})"


@dataclass(frozen=True)
class SetFunction:
    """A total function between universes, given label by label."""

    domain: Universe
    codomain: Universe
    mapping: tuple[str, ...]  # image of domain.labels[i]

    def __post_init__(self):
        if len(self.mapping) != self.domain.size:
            raise DomainError("mapping must cover the whole domain")
        for y in self.mapping:
            if y not in self.codomain:
                raise DomainError(f"image label {y!r} not in codomain")

    @staticmethod
    def of(domain: Universe, codomain: Universe, assignment: dict[str, str]) -> "SetFunction":
        return SetFunction(domain, codomain, tuple(assignment[x] for x in domain.labels))

    @staticmethod
    def identity(universe: Universe) -> "SetFunction":
        return SetFunction(universe, universe, universe.labels)

    def __call__(self, label: str) -> str:
        return self.mapping[self.domain.index(label)]

    def compose(self, inner: "SetFunction") -> "SetFunction":
        """self o inner."""
        if inner.codomain != self.domain:
            raise DomainError("composition domain mismatch")
        return SetFunction(inner.domain, self.codomain, tuple(self(y) for y in inner.mapping))

    def preimage(self, b: SetElem) -> SetElem:
        if b.universe != self.codomain:
            raise DomainError("preimage argument must live in the codomain")
        mask = 0
        for i, y in enumerate(self.mapping):
            if y in b:
                mask |= 1 << i
        return SetElem(self.domain, mask)

    def is_injective(self) -> bool:
        return len(set(self.mapping)) == len(self.mapping)

    def is_surjective(self) -> bool:
        return set(self.mapping) == set(self.codomain.labels)

    def render(self) -> str:
        return ", ".join(f"{x}->{y}" for x, y in zip(self.domain.labels, self.mapping))


def all_functions(domain: Universe, codomain: Universe) -> Iterator[SetFunction]:
    """Every function domain -> codomain, in deterministic order."""
    for images in itertools.product(codomain.labels, repeat=domain.size):
        yield SetFunction(domain, codomain, images)


@dataclass(frozen=True)
class PowerSetHom:
    """A unital ring hom P(Y) -> P(X), stored by its atom images.

    ``images[i]`` is the image of the singleton at source label i.  The map
    extends additively: a subset of Y goes to the symmetric difference of
    its atoms' images.  It is a unital ring hom exactly when the images
    are pairwise disjoint and cover the target.
    """

    source: Universe  # Y
    target: Universe  # X
    images: tuple[SetElem, ...]

    def __post_init__(self):
        if len(self.images) != self.source.size:
            raise DomainError("need one image per source atom")
        for img in self.images:
            if img.universe != self.target:
                raise DomainError("atom image in the wrong universe")

    def __call__(self, a: SetElem) -> SetElem:
        if a.universe != self.source:
            raise DomainError("argument must live in the source universe")
        mask = 0
        for i in range(self.source.size):
            if a.mask >> i & 1:
                mask ^= self.images[i].mask
        return SetElem(self.target, mask)

    def is_ring_hom(self) -> bool:
        """Atom images pairwise disjoint and covering the target."""
        seen = 0
        for img in self.images:
            if seen & img.mask:
                return False
            seen |= img.mask
        return seen == self.target.full.mask

    def table(self) -> dict[SetElem, SetElem]:
        return {a: self(a) for a in self.source.subsets()}

    def compose(self, inner: "PowerSetHom") -> "PowerSetHom":
        """self o inner, a hom P(inner.source) -> P(self.target)."""
        if inner.target != self.source:
            raise DomainError("composition universe mismatch")
        return PowerSetHom(
            inner.source, self.target, tuple(self(img) for img in inner.images)
        )

    def render(self) -> str:
        parts = [f"{y}->{img.render()}" for y, img in zip(self.source.labels, self.images)]
        return "P-hom[" + ", ".join(parts) + "]"


def induced_hom(f: SetFunction) -> PowerSetHom:
    """P(f): P(Y) -> P(X), A -> preimage of A; contravariant in f."""
    y_universe = f.codomain
    return PowerSetHom(
        y_universe,
        f.domain,
        tuple(f.preimage(y_universe.singleton(y)) for y in y_universe.labels),
    )


def identity_hom(universe: Universe) -> PowerSetHom:
    return induced_hom(SetFunction.identity(universe))


@dataclass(frozen=True)
class PowerSetIdeal:
    """An ideal of P(X).  Always principal: the carrier is the union of the
    generators and membership is the subset test."""

    universe: Universe
    carrier: SetElem
    generators: tuple[SetElem, ...] = field(default=(), compare=False)

    def __contains__(self, a: SetElem) -> bool:
        return a.issubset(self.carrier)

    def members(self) -> Iterator[SetElem]:
        """All elements, i.e. all subsets of the carrier, in increasing mask order."""
        require_enumerable(1 << len(self.carrier), "ideal")
        positions = [i for i in range(self.universe.size) if self.carrier.mask >> i & 1]
        for k in range(1 << len(positions)):
            mask = 0
            for j, pos in enumerate(positions):
                if k >> j & 1:
                    mask |= 1 << pos
            yield SetElem(self.universe, mask)

    @property
    def is_zero(self) -> bool:
        return self.carrier.mask == 0

    def render(self) -> str:
        return f"P({self.carrier.render()})"


def principal_ideal(a: SetElem) -> PowerSetIdeal:
    return PowerSetIdeal(a.universe, a, (a,))


def ideal_generated(universe: Universe, gens: Iterable[SetElem]) -> PowerSetIdeal:
    """(A1,...,An) = P(A1 | ... | An); empty generator list gives the zero ideal."""
    gens = tuple(gens)
    carrier = universe.empty
    for g in gens:
        carrier = carrier.union(g)
    return PowerSetIdeal(universe, carrier, gens)


def point_maximal_ideal(universe: Universe, x: str) -> PowerSetIdeal:
    """m_x = P(X minus {x}): all subsets avoiding x."""
    return principal_ideal(universe.singleton(x).complement())


def maximal_ideals(universe: Universe) -> list[PowerSetIdeal]:
    """The point ideals m_x, one per label; empty for the zero ring."""
    return [point_maximal_ideal(universe, x) for x in universe.labels]


def quotient_by_subset(a: SetElem) -> tuple[Universe, PowerSetHom]:
    """P(X)/P(A) realized as P(complement of A) with the restriction map.

    Returns the complement sub-universe and the surjection B -> B & complement,
    whose kernel is exactly P(A).
    """
    comp = a.complement()
    sub = Universe(comp.labels())
    inclusion = SetFunction(sub, a.universe, sub.labels)
    return sub, induced_hom(inclusion)
