"""Structural finite commutative rings and the idempotent (Boolean) part.

Supported constructions: Z/n, finite products, power set rings, quotients
by finitely many generators, and the ring of idempotents of any of these
under e (+) f = e + f - 2ef.  Everything is enumerable and immutable.
"""

from __future__ import annotations

import itertools
from abc import ABC, abstractmethod
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import DomainError
from .guards import require_enumerable
from .powerset import SetElem, Universe


class RingElem:
    """An element of a structural ring; payload format is ring-specific."""

    __slots__ = ("ring", "payload")

    def __init__(self, ring: "Ring", payload):
        self.ring = ring
        self.payload = payload

    def _coerce(self, other: "RingElem") -> "RingElem":
        if not isinstance(other, RingElem):
            raise DomainError(f"expected a ring element, got {type(other).__name__}")
        if other.ring != self.ring:
            raise DomainError(
                f"ring mismatch: {self.ring.describe()} vs {other.ring.describe()}"
            )
        return other

    def __add__(self, other: "RingElem") -> "RingElem":
        return self.ring.add(self, self._coerce(other))

    def __mul__(self, other: "RingElem") -> "RingElem":
        return self.ring.mul(self, self._coerce(other))

    def __neg__(self) -> "RingElem":
        return self.ring.neg(self)

    def __sub__(self, other: "RingElem") -> "RingElem":
        return self + (-self._coerce(other))

    def is_idempotent(self) -> bool:
        return self * self == self

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RingElem)
            and self.ring == other.ring
            and self.payload == other.payload
        )

    def __hash__(self) -> int:
        return hash((self.ring, self.payload))

    def render(self) -> str:
        return self.ring.render_elem(self)

    def __repr__(self) -> str:
        return f"<{self.render()} in {self.ring.describe()}>"


class Ring(ABC):
    """A finite commutative ring with deterministic element enumeration."""

    @property
    @abstractmethod
    def size(self) -> int: ...

    @abstractmethod
    def _enumerate_payloads(self) -> Iterator: ...

    @abstractmethod
    def _add(self, a, b): ...

    @abstractmethod
    def _mul(self, a, b): ...

    @abstractmethod
    def _neg(self, a): ...

    @abstractmethod
    def _zero_payload(self): ...

    @abstractmethod
    def _one_payload(self): ...

    @abstractmethod
    def _key(self) -> tuple: ...

    @abstractmethod
    def describe(self) -> str:
        """Canonical descriptor text (the ring grammar of the DSL)."""

    def render_elem(self, e: RingElem) -> str:
        return str(e.payload)

    def elements(self) -> Iterator[RingElem]:
        require_enumerable(self.size, self.describe())
        for payload in self._enumerate_payloads():
            yield RingElem(self, payload)

    def element_list(self) -> list[RingElem]:
        return list(self.elements())

    @property
    def zero(self) -> RingElem:
        return RingElem(self, self._zero_payload())

    @property
    def one(self) -> RingElem:
        return RingElem(self, self._one_payload())

    def add(self, a: RingElem, b: RingElem) -> RingElem:
        return RingElem(self, self._add(a.payload, b.payload))

    def mul(self, a: RingElem, b: RingElem) -> RingElem:
        return RingElem(self, self._mul(a.payload, b.payload))

    def neg(self, a: RingElem) -> RingElem:
        return RingElem(self, self._neg(a.payload))

    @property
    def is_zero_ring(self) -> bool:
        return self.size == 1

    def __eq__(self, other) -> bool:
        return isinstance(other, Ring) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return f"Ring({self.describe()})"


class ZMod(Ring):
    """Z/n with residues 0..n-1; n = 1 is the zero ring."""

    def __init__(self, n: int):
        if n < 1:
            raise DomainError(f"modulus must be >= 1, got {n}")
        self.n = n

    @property
    def size(self) -> int:
        return self.n

    def _enumerate_payloads(self):
        return iter(range(self.n))

    def _add(self, a, b):
        return (a + b) % self.n

    def _mul(self, a, b):
        return (a * b) % self.n

    def _neg(self, a):
        return (-a) % self.n

    def _zero_payload(self):
        return 0

    def _one_payload(self):
        return 1 % self.n

    def _key(self):
        return ("zmod", self.n)

    def describe(self):
        return f"Z/{self.n}"

    def residue(self, k: int) -> RingElem:
        return RingElem(self, k % self.n)


class ProductRing(Ring):
    """A finite product with componentwise operations; payloads are tuples."""

    def __init__(self, factors: Sequence[Ring]):
        self.factors = tuple(factors)
        if not self.factors:
            raise DomainError("product needs at least one factor")

    @cached_property
    def size(self) -> int:
        total = 1
        for f in self.factors:
            total *= f.size
        return total

    def _enumerate_payloads(self):
        return itertools.product(*(f._enumerate_payloads() for f in self.factors))

    def _add(self, a, b):
        return tuple(f._add(x, y) for f, x, y in zip(self.factors, a, b))

    def _mul(self, a, b):
        return tuple(f._mul(x, y) for f, x, y in zip(self.factors, a, b))

    def _neg(self, a):
        return tuple(f._neg(x) for f, x in zip(self.factors, a))

    def _zero_payload(self):
        return tuple(f._zero_payload() for f in self.factors)

    def _one_payload(self):
        return tuple(f._one_payload() for f in self.factors)

    def _key(self):
        return ("product", tuple(f._key() for f in self.factors))

    def describe(self):
        parts = []
        for f in self.factors:
            text = f.describe()
            if isinstance(f, ProductRing):
                text = f"({text})"
            parts.append(text)
        return " x ".join(parts)

    def render_elem(self, e):
        parts = [
            f.render_elem(RingElem(f, p)) for f, p in zip(self.factors, e.payload)
        ]
        return "(" + ", ".join(parts) + ")"

    def component(self, e: RingElem, i: int) -> RingElem:
        return RingElem(self.factors[i], e.payload[i])

    def from_components(self, comps: Sequence[RingElem]) -> RingElem:
        return RingElem(self, tuple(c.payload for c in comps))


class PowerSetRing(Ring):
    """P(X) as a structural ring; payloads are SetElem values."""

    def __init__(self, universe: Universe):
        self.universe = universe

    @property
    def size(self) -> int:
        return 1 << self.universe.size

    def _enumerate_payloads(self):
        return (SetElem(self.universe, m) for m in range(self.size))

    def _add(self, a, b):
        return a + b

    def _mul(self, a, b):
        return a * b

    def _neg(self, a):
        return a

    def _zero_payload(self):
        return self.universe.empty

    def _one_payload(self):
        return self.universe.full

    def _key(self):
        return ("powerset", self.universe.labels)

    def describe(self):
        return "P" + self.universe.render()

    def render_elem(self, e):
        return e.payload.render()

    def wrap(self, a: SetElem) -> RingElem:
        if a.universe != self.universe:
            raise DomainError("subset from the wrong universe")
        return RingElem(self, a)


def ideal_closure(ring: Ring, generators: Iterable[RingElem]) -> frozenset[RingElem]:
    """The set of elements of the ideal generated by ``generators``.

    Products r*g over all ring elements r, then additive closure by worklist.
    """
    gens = list(generators)
    for g in gens:
        if g.ring != ring:
            raise DomainError("generator from the wrong ring")
    products: set[RingElem] = {ring.zero}
    all_elems = ring.element_list()
    for g in gens:
        for r in all_elems:
            products.add(r * g)
    closed: set[RingElem] = set(products)
    frontier = list(products)
    while frontier:
        x = frontier.pop()
        for y in list(closed):
            s = x + y
            if s not in closed:
                closed.add(s)
                frontier.append(s)
    return frozenset(closed)


class QuotientRing(Ring):
    """R/I for I generated by finitely many elements; payloads are the
    minimal coset representatives in R's enumeration order.

    For a power set base the representative of B is computed directly as
    B minus the carrier (the coset's minimal mask), so no coset table is
    needed in that case.
    """

    def __init__(self, base: Ring, generators: Sequence[RingElem]):
        self.base = base
        self.generators = tuple(generators)
        for g in self.generators:
            if g.ring != base:
                raise DomainError("quotient generator from the wrong ring")
        if isinstance(base, PowerSetRing):
            carrier = base.universe.empty
            for g in self.generators:
                carrier = carrier.union(g.payload)
            self._carrier = carrier
            self._ideal_size = 1 << len(carrier)
        else:
            self._ideal = ideal_closure(base, self.generators)
            self._ideal_size = len(self._ideal)
            index = {e.payload: i for i, e in enumerate(base.elements())}
            self._rep_cache: dict = {}
            for e in base.elements():
                if e.payload in self._rep_cache:
                    continue
                coset = [e + i for i in self._ideal]
                rep = min(coset, key=lambda c: index[c.payload])
                for c in coset:
                    self._rep_cache[c.payload] = rep.payload

    @property
    def size(self) -> int:
        return self.base.size // self._ideal_size

    def _rep(self, payload):
        if isinstance(self.base, PowerSetRing):
            return payload.difference(self._carrier)
        return self._rep_cache[payload]

    def _enumerate_payloads(self):
        seen = set()
        for payload in self.base._enumerate_payloads():
            rep = self._rep(payload)
            if rep not in seen:
                seen.add(rep)
                yield rep

    def _add(self, a, b):
        return self._rep(self.base._add(a, b))

    def _mul(self, a, b):
        return self._rep(self.base._mul(a, b))

    def _neg(self, a):
        return self._rep(self.base._neg(a))

    def _zero_payload(self):
        return self._rep(self.base._zero_payload())

    def _one_payload(self):
        return self._rep(self.base._one_payload())

    def _key(self):
        return (
            "quotient",
            self.base._key(),
            tuple(sorted(self.base.render_elem(g) for g in self.generators)),
        )

    def describe(self):
        gens = ", ".join(g.render() for g in self.generators)
        return f"Q({self.base.describe()}, {gens})"

    def render_elem(self, e):
        return self.base.render_elem(RingElem(self.base, e.payload))

    def project(self, e: RingElem) -> RingElem:
        """The canonical surjection from the base ring."""
        if e.ring != self.base:
            raise DomainError("can only project elements of the base ring")
        return RingElem(self, self._rep(e.payload))

    def ideal_members(self) -> frozenset[RingElem]:
        if isinstance(self.base, PowerSetRing):
            positions = [
                i
                for i in range(self.base.universe.size)
                if self._carrier.mask >> i & 1
            ]
            members = set()
            for k in range(1 << len(positions)):
                mask = 0
                for j, pos in enumerate(positions):
                    if k >> j & 1:
                        mask |= 1 << pos
                members.add(self.base.wrap(SetElem(self.base.universe, mask)))
            return frozenset(members)
        return self._ideal


class BooleanizationRing(Ring):
    """The idempotents of a base ring under e (+) f = e + f - 2ef.

    Shares 0, 1 and multiplication with the base; every element is
    idempotent, so this is always a Boolean ring.
    """

    def __init__(self, base: Ring):
        self.base = base
        self._carrier = [e.payload for e in idempotents(base)]
        self._members = set(self._carrier)

    @property
    def size(self) -> int:
        return len(self._carrier)

    def _enumerate_payloads(self):
        return iter(self._carrier)

    def _add(self, a, b):
        # e + f - 2ef inside the base ring
        ea = RingElem(self.base, a)
        eb = RingElem(self.base, b)
        prod = ea * eb
        out = ea + eb - (prod + prod)
        assert out.payload in self._members
        return out.payload

    def _mul(self, a, b):
        out = self.base._mul(a, b)
        assert out in self._members
        return out

    def _neg(self, a):
        # x (+) x = 0, so every element is its own negative
        return a

    def _zero_payload(self):
        return self.base._zero_payload()

    def _one_payload(self):
        return self.base._one_payload()

    def _key(self):
        return ("booleanization", self.base._key())

    def describe(self):
        return f"B({self.base.describe()})"

    def render_elem(self, e):
        return self.base.render_elem(RingElem(self.base, e.payload))

    def wrap(self, e: RingElem) -> RingElem:
        if e.ring != self.base or e.payload not in self._members:
            raise DomainError("not an idempotent of the base ring")
        return RingElem(self, e.payload)

    def unwrap(self, e: RingElem) -> RingElem:
        return RingElem(self.base, e.payload)


def idempotents(ring: Ring) -> list[RingElem]:
    """All e with e*e = e, in enumeration order; contains 0 and 1."""
    return [e for e in ring.elements() if e * e == e]


def booleanize(ring: Ring) -> BooleanizationRing:
    return BooleanizationRing(ring)


def characteristic(ring: Ring) -> int:
    """Additive order of 1 (1 for the zero ring)."""
    k = 1
    acc = ring.one
    zero = ring.zero
    while acc != zero:
        acc = acc + ring.one
        k += 1
        if k > ring.size:
            raise DomainError("characteristic exceeded ring size; not a finite ring?")
    return k


def is_boolean(ring: Ring) -> bool:
    return all(e.is_idempotent() for e in ring.elements())


def atoms(ring: Ring) -> list[RingElem]:
    """Minimal nonzero elements of a Boolean ring under e <= f iff ef = e."""
    if not is_boolean(ring):
        raise DomainError(f"{ring.describe()} is not a Boolean ring")
    zero = ring.zero
    nonzero = [e for e in ring.elements() if e != zero]
    out = []
    for e in nonzero:
        if all(f * e != f or f == e for f in nonzero):
            out.append(e)
    return out


class RingHom:
    """A tabulated ring homomorphism, validated at construction."""

    def __init__(self, source: Ring, target: Ring, table: dict[RingElem, RingElem], check: bool = True):
        self.source = source
        self.target = target
        self.table = dict(table)
        if check:
            self._validate()

    def _validate(self) -> None:
        elems = self.source.element_list()
        if set(self.table) != set(elems):
            raise DomainError("hom table must cover the whole source ring")
        for v in self.table.values():
            if v.ring != self.target:
                raise DomainError("hom table value outside the target ring")
        if self.table[self.source.one] != self.target.one:
            raise DomainError("hom must send 1 to 1")
        if self.table[self.source.zero] != self.target.zero:
            raise DomainError("hom must send 0 to 0")
        for a in elems:
            fa = self.table[a]
            for b in elems:
                fb = self.table[b]
                if self.table[a + b] != fa + fb:
                    raise DomainError(
                        f"not additive at {a.render()}, {b.render()}"
                    )
                if self.table[a * b] != fa * fb:
                    raise DomainError(
                        f"not multiplicative at {a.render()}, {b.render()}"
                    )

    def __call__(self, e: RingElem) -> RingElem:
        try:
            return self.table[e]
        except KeyError:
            raise DomainError("element outside the hom's source ring") from None

    @staticmethod
    def identity(ring: Ring) -> "RingHom":
        return RingHom(ring, ring, {e: e for e in ring.elements()}, check=False)

    @staticmethod
    def from_function(source: Ring, target: Ring, fn, check: bool = True) -> "RingHom":
        return RingHom(source, target, {e: fn(e) for e in source.elements()}, check=check)

    def compose(self, inner: "RingHom") -> "RingHom":
        """self o inner."""
        if inner.target != self.source:
            raise DomainError("hom composition mismatch")
        return RingHom(
            inner.source,
            self.target,
            {e: self(v) for e, v in inner.table.items()},
            check=False,
        )

    def is_injective(self) -> bool:
        return len(set(self.table.values())) == len(self.table)

    def is_surjective(self) -> bool:
        return len(set(self.table.values())) == self.target.size

    def is_bijective(self) -> bool:
        return self.is_injective() and self.is_surjective()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RingHom)
            and self.source == other.source
            and self.target == other.target
            and self.table == other.table
        )

    def __hash__(self):
        return hash((self.source, self.target, tuple(sorted(
            (k.render(), v.render()) for k, v in self.table.items()
        ))))

    def __repr__(self):
        return f"RingHom({self.source.describe()} -> {self.target.describe()})"


def booleanize_hom(phi: RingHom) -> RingHom:
    """Restriction of a ring hom to idempotents, as a hom of Boolean rings."""
    bs = BooleanizationRing(phi.source)
    bt = BooleanizationRing(phi.target)
    table = {}
    for e in bs.elements():
        image = phi(bs.unwrap(e))
        table[e] = bt.wrap(image)
    return RingHom(bs, bt, table)


def zmod_reduction(source: ZMod, target: ZMod) -> RingHom:
    """The reduction Z/n -> Z/m (valid when m divides n)."""
    if source.n % target.n != 0:
        raise DomainError(f"no reduction {source.describe()} -> {target.describe()}")
    return RingHom.from_function(
        source, target, lambda e: target.residue(e.payload), check=True
    )


def localize_at_idempotent(ring: Ring, e: RingElem) -> tuple[QuotientRing, RingHom]:
    """R localized at an idempotent e, realized as R/(1-e).

    For R = P(X) and e = A this is (isomorphic to) P(A): representatives
    are the subsets of A.
    """
    if e.ring != ring:
        raise DomainError("idempotent from the wrong ring")
    if not e.is_idempotent():
        raise DomainError(f"{e.render()} is not idempotent")
    quotient = QuotientRing(ring, (ring.one - e,))
    surjection = RingHom.from_function(ring, quotient, quotient.project, check=False)
    return quotient, surjection
