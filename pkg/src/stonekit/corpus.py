"""The deterministic ring corpus used by the verification suites."""

from __future__ import annotations

from .powerset import Universe
from .rings import (
    BooleanizationRing,
    PowerSetRing,
    ProductRing,
    QuotientRing,
    Ring,
    ZMod,
)

LETTERS = "abcdefghijklmnopqrstuvwxyz"


def universe_of_size(n: int) -> Universe:
    return Universe(tuple(LETTERS[:n]))


def corpus_rings(max_zmod: int = 60, max_universe: int = 5) -> list[Ring]:
    """Z/n up to the bound, products of up to 3 factors, power set rings,
    quotients, and a few idempotent rings on top of those."""
    rings: list[Ring] = [ZMod(n) for n in range(2, max_zmod + 1)]
    rings += [
        ProductRing((ZMod(2), ZMod(2))),
        ProductRing((ZMod(2), ZMod(3))),
        ProductRing((ZMod(4), ZMod(6))),
        ProductRing((ZMod(2), ZMod(2), ZMod(2))),
        ProductRing((ZMod(2), ZMod(3), ZMod(4))),
        ProductRing((ZMod(6), ZMod(10), ZMod(15))),
    ]
    rings += [PowerSetRing(universe_of_size(n)) for n in range(0, max_universe + 1)]
    z12 = ZMod(12)
    z36 = ZMod(36)
    p3 = PowerSetRing(universe_of_size(3))
    rings += [
        QuotientRing(z12, (z12.residue(4),)),
        QuotientRing(z12, (z12.residue(6),)),
        QuotientRing(z36, (z36.residue(6),)),
        QuotientRing(p3, (p3.wrap(universe_of_size(3).subset("a")),)),
    ]
    rings += [
        BooleanizationRing(ZMod(12)),
        BooleanizationRing(ZMod(30)),
        BooleanizationRing(ProductRing((ZMod(4), ZMod(9)))),
    ]
    return rings
