"""The subring of P(naturals) of finite and cofinite sets, exactly.

Elements store a finite support set plus a tag saying whether the set is
the support itself or its complement, so "infinite" is represented without
approximation.  Any identity can be refereed by evaluating membership on a
window {0..max support + 2}: the margin point outside every support
separates finite from cofinite behaviour.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence


class Mode(Enum):
    FINITE = "fin"
    COFINITE = "cofin"


@dataclass(frozen=True)
class FinCofElem:
    """A finite or cofinite subset of the naturals."""

    mode: Mode
    support: frozenset[int]

    def __post_init__(self):
        for n in self.support:
            if not isinstance(n, int) or n < 0:
                raise ValueError(f"support must consist of naturals, got {n!r}")

    @staticmethod
    def fin(items: Iterable[int] = ()) -> "FinCofElem":
        return FinCofElem(Mode.FINITE, frozenset(items))

    @staticmethod
    def cofin(items: Iterable[int] = ()) -> "FinCofElem":
        return FinCofElem(Mode.COFINITE, frozenset(items))

    @property
    def is_finite(self) -> bool:
        return self.mode is Mode.FINITE

    def __contains__(self, n: int) -> bool:
        inside = n in self.support
        return inside if self.is_finite else not inside

    # + is symmetric difference; the mode tracks whether the complement
    # description flips (exactly one cofinite operand keeps it flipped).
    def __add__(self, other: "FinCofElem") -> "FinCofElem":
        support = self.support ^ other.support
        if self.is_finite == other.is_finite:
            return FinCofElem(Mode.FINITE, support)
        return FinCofElem(Mode.COFINITE, support)

    def __mul__(self, other: "FinCofElem") -> "FinCofElem":
        if self.is_finite and other.is_finite:
            return FinCofElem(Mode.FINITE, self.support & other.support)
        if self.is_finite:
            return FinCofElem(Mode.FINITE, self.support - other.support)
        if other.is_finite:
            return FinCofElem(Mode.FINITE, other.support - self.support)
        return FinCofElem(Mode.COFINITE, self.support | other.support)

    def __neg__(self) -> "FinCofElem":
        return self

    def __sub__(self, other: "FinCofElem") -> "FinCofElem":
        return self + (-other)

    def complement(self) -> "FinCofElem":
        """1 - a: swap the description mode."""
        return FinCofElem(
            Mode.COFINITE if self.is_finite else Mode.FINITE, self.support
        )

    def union(self, other: "FinCofElem") -> "FinCofElem":
        return self + other + self * other

    def difference(self, other: "FinCofElem") -> "FinCofElem":
        return self + self * other

    def render(self) -> str:
        inner = ",".join(str(n) for n in sorted(self.support))
        return f"{self.mode.value}{{{inner}}}"

    def __repr__(self) -> str:
        return f"FinCofElem({self.render()})"


ZERO = FinCofElem.fin()
ONE = FinCofElem.cofin()


def is_in_fin(a: FinCofElem) -> bool:
    """Membership in Fin, the ideal of finite sets."""
    return a.is_finite


def window(elems: Sequence[FinCofElem], margin: int = 2) -> range:
    """A window {0..m} large enough to referee identities among ``elems``:
    it contains every support plus at least one point beyond all of them."""
    top = max((max(e.support, default=0) for e in elems), default=0)
    return range(top + margin + 1)


def windowed_eval(e: FinCofElem, w: range) -> tuple[int, ...]:
    return tuple(1 if n in e else 0 for n in w)


@dataclass
class FinIdealEvidence:
    """Witness that Fin absorbs addition within itself and multiplication
    by arbitrary elements, over a sampled batch."""

    additions_checked: int
    absorptions_checked: int
    ok: bool


def fin_is_ideal_witness(
    fins: Sequence[FinCofElem], ring_elems: Sequence[FinCofElem]
) -> FinIdealEvidence:
    additions = 0
    absorptions = 0
    ok = True
    for a in fins:
        if not a.is_finite:
            raise ValueError("sample for the ideal witness must lie in Fin")
        for b in fins:
            additions += 1
            ok = ok and (a + b).is_finite
        for s in ring_elems:
            absorptions += 1
            ok = ok and (s * a).is_finite
    return FinIdealEvidence(additions, absorptions, ok)


class HomKind(Enum):
    POINT_EVAL = "point"
    FRECHET_QUOTIENT = "frechet"


@dataclass(frozen=True)
class SHom:
    """One of the two representable ring homs S -> Z/2: evaluation at a
    point, or the quotient by Fin (1 exactly on the cofinite sets)."""

    kind: HomKind
    point: int | None = None

    def __call__(self, a: FinCofElem) -> int:
        if self.kind is HomKind.POINT_EVAL:
            return 1 if self.point in a else 0
        return 0 if a.is_finite else 1

    def render(self) -> str:
        if self.kind is HomKind.POINT_EVAL:
            return f"eval@{self.point}"
        return "mod-Fin"


def point_hom(x: int) -> SHom:
    if x < 0:
        raise ValueError("points are naturals")
    return SHom(HomKind.POINT_EVAL, x)


def frechet_hom() -> SHom:
    return SHom(HomKind.FRECHET_QUOTIENT)


def hom_respects_ops(h: SHom, a: FinCofElem, b: FinCofElem) -> bool:
    return (
        h(a + b) == h(a) ^ h(b)
        and h(a * b) == h(a) & h(b)
        and h(ZERO) == 0
        and h(ONE) == 1
    )


@dataclass(frozen=True)
class NonInducedWitness:
    """For a candidate point x: the element X minus {x}, on which the
    mod-Fin hom and evaluation at x disagree."""

    point: int
    element: FinCofElem
    frechet_value: int
    point_value: int

    @property
    def separates(self) -> bool:
        return self.frechet_value != self.point_value


def non_induced_witness(x: int) -> NonInducedWitness:
    """Cofin{x} is cofinite (so mod-Fin gives 1) but misses x (evaluation
    gives 0); hence mod-Fin is not evaluation at any point."""
    element = FinCofElem.cofin([x])
    w = NonInducedWitness(x, element, frechet_hom()(element), point_hom(x)(element))
    assert w.separates
    return w


def non_induced_sweep(max_point: int = 100) -> list[NonInducedWitness]:
    return [non_induced_witness(x) for x in range(max_point + 1)]


class KernelKind(Enum):
    FIN_KERNEL = "fin"
    POINT_KERNEL = "point"


@dataclass(frozen=True)
class KernelClassification:
    kind: KernelKind
    point: int | None
    maximal: bool  # quotient is the 2-element field

    def render(self) -> str:
        if self.kind is KernelKind.FIN_KERNEL:
            return "Fin"
        return f"m_{self.point} & S"


def kernel_classify(h: SHom, probes: Sequence[FinCofElem] = ()) -> KernelClassification:
    """The kernel family of a representable hom, with maximality evidence:
    the hom is onto Z/2 and respects the ring structure on the probes, so
    the quotient by its kernel is the 2-element field."""
    onto = h(ZERO) == 0 and h(ONE) == 1
    respects = all(hom_respects_ops(h, a, b) for a in probes for b in probes)
    maximal = onto and respects
    if h.kind is HomKind.FRECHET_QUOTIENT:
        return KernelClassification(KernelKind.FIN_KERNEL, None, maximal)
    return KernelClassification(KernelKind.POINT_KERNEL, h.point, maximal)


def fin_not_principal_witness(a: FinCofElem) -> int:
    """For a candidate generator a of Fin: a point x outside a, so that the
    singleton {x} is not a multiple of a (every multiple stays inside a)."""
    if not a.is_finite:
        raise ValueError("candidate generators of Fin are finite sets")
    x = max(a.support, default=-1) + 1
    assert x not in a
    return x


def parse_fincof(text: str) -> FinCofElem:
    """Parse the text forms fin{1,2,3} and cofin{4}."""
    text = text.strip()
    for prefix, builder in (("cofin", FinCofElem.cofin), ("fin", FinCofElem.fin)):
        if text.startswith(prefix):
            body = text[len(prefix):].strip()
            if body.startswith("{") and body.endswith("}"):
                inner = body[1:-1].strip()
                if not inner:
                    return builder([])
                return builder(int(part) for part in inner.split(","))
    raise ValueError(f"not a finite/cofinite literal: {text!r}")
