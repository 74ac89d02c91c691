"""Named verification suites: each runs a family of exhaustive or seeded
property checks and returns a Report (the JSON schema of the service and
the CLI `check` subcommand).

Suite names describe what they verify; `all` in the CLI runs every suite.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import fincofin as fc
from .corpus import corpus_rings, universe_of_size
from .errors import StonekitError
from .gf2 import F2Matrix, span_masks
from .homs import (
    enumerate_homs,
    enumerate_homs_oracle,
    hom_to_function,
    image_characterization_check,
    powerset_of_powerset_not_additive,
)
from .powerset import SetElem, Universe, all_functions, induced_hom, identity_hom, maximal_ideals
from .rings import (
    BooleanizationRing,
    PowerSetRing,
    ZMod,
    atoms,
    booleanize,
    characteristic,
    idempotents,
    is_boolean,
    localize_at_idempotent,
)
from .sheaf import (
    StructureSheaf,
    all_covers,
    check_gluing,
    compatible_families,
    eta,
    germ,
    is_affine,
    scheme_morphism,
    stalk,
    sub_universe,
)
from .spectrum import (
    brute_force_ideal_masks,
    brute_force_spec_points,
    clopen_comparison_via_booleanization,
    dlocus_order_check,
    f2_hom_spec_bijection,
    homs_to_f2,
    spec,
    stone_map,
)
from .tensor import (
    PowerSetAlgebra,
    TensorAlgebra,
    extend_ideal,
    product_map,
    tensor_over,
    tensor_with_fin_quotient,
)


@dataclass
class Report:
    suite: str
    instances: int = 0
    passed: int = 0
    failed: int = 0
    counterexample: str | None = None
    lines: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_json(self) -> dict:
        out = {
            "suite": self.suite,
            "instances": self.instances,
            "passed": self.passed,
            "failed": self.failed,
        }
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


class SuiteRun:
    """Accumulates sub-check outcomes into a Report."""

    def __init__(self, suite: str):
        self.report_ = Report(suite)

    def tally(self, name: str, passed: int, failures: list[str]) -> None:
        total = passed + len(failures)
        self.report_.instances += total
        self.report_.passed += passed
        self.report_.failed += len(failures)
        if failures:
            if self.report_.counterexample is None:
                self.report_.counterexample = f"{name}: {failures[0]}"
            self.report_.lines.append(
                f"FAIL {name}: {len(failures)}/{total} failed; e.g. {failures[0]}"
            )
        else:
            self.report_.lines.append(f"ok {name} ({total} instances)")

    def check_all(self, name: str, cases, predicate, describe) -> None:
        """predicate(case) -> bool; describe(case) -> str for failures."""
        passed = 0
        failures: list[str] = []
        for case in cases:
            try:
                ok = predicate(case)
            except StonekitError as exc:
                ok = False
                failures.append(f"{describe(case)} raised {exc}")
                continue
            if ok:
                passed += 1
            else:
                failures.append(describe(case))
        self.tally(name, passed, failures)

    def done(self) -> Report:
        return self.report_


def _oplus(ring, e, f):
    prod = e * f
    return e + f - (prod + prod)


def run_stone(size: int | None = None, seed: int | None = None) -> Report:
    """The idempotent/clopen correspondence over the ring corpus, plus its
    classical specialization on the Boolean corpus members."""
    max_universe = min(size, 5) if size is not None else 5
    rings = corpus_rings(max_universe=max_universe)
    run = SuiteRun("stone")

    run.check_all(
        "correspondence is a verified ring isomorphism",
        rings,
        lambda r: stone_map(r).verified,
        lambda r: r.describe(),
    )
    run.check_all(
        "clopen count equals idempotent count",
        rings,
        lambda r: len(spec(r).clopens()) == len(idempotents(r)),
        lambda r: r.describe(),
    )

    boolean_rings = [r for r in rings if is_boolean(r)]

    def classical(r) -> bool:
        idems = idempotents(r)
        if len(idems) != r.size:
            return False
        if not r.is_zero_ring and characteristic(r) != 2:
            return False
        return all(_oplus(r, e, f) == e + f for e in idems for f in idems)

    run.check_all(
        "Boolean members: map defined on everything and (+) is +",
        boolean_rings,
        classical,
        lambda r: r.describe(),
    )
    run.check_all(
        "clopens of Spec R match clopens of Spec of the idempotent ring",
        [r for r in rings if r.size <= 64],
        clopen_comparison_via_booleanization,
        lambda r: r.describe(),
    )
    return run.done()


def run_maxideals(size: int | None = None, seed: int | None = None) -> Report:
    """Brute-force ideal theory of P(X): the maximal ideals are exactly the
    point ideals, they intersect in zero, and every ideal is principal."""
    bound = min(size, 4) if size is not None else 4
    run = SuiteRun("maxideals")

    for n in range(bound + 1):
        universe = universe_of_size(n)
        ring = PowerSetRing(universe)
        ideal_masks = brute_force_ideal_masks(ring)
        proper = [c for c in ideal_masks if c != (1 << ring.size) - 1]
        maximal = [
            c
            for c in proper
            if not any(d != c and c & ~d == 0 for d in proper)
        ]
        expected = []
        for x in universe.labels:
            pos = universe.index(x)
            mask = 0
            for m in range(ring.size):
                if not m >> pos & 1:
                    mask |= 1 << m
            expected.append(mask)

        run.check_all(
            f"|X|={n}: maximal ideals are exactly the point ideals",
            [None],
            lambda _: sorted(maximal) == sorted(expected),
            lambda _: f"found {len(maximal)}, expected {len(expected)}",
        )

        inter = (1 << ring.size) - 1
        for mask in expected:
            inter &= mask
        run.check_all(
            f"|X|={n}: point ideals intersect in the zero ideal",
            [None],
            lambda _: n == 0 or inter == 1,  # only the element with index 0
            lambda _: f"intersection mask {inter:b}",
        )

        def principal(c: int) -> bool:
            union = 0
            for m in range(ring.size):
                if c >> m & 1:
                    union |= m  # element index == subset mask for P(X)
            full = 0
            for m in range(ring.size):
                if m & ~union == 0:
                    full |= 1 << m
            return c == full

        run.check_all(
            f"|X|={n}: every ideal is generated by the union of its members",
            ideal_masks,
            principal,
            lambda c: f"ideal mask {c:b}",
        )

        structural = {p.member_mask for p in spec(ring).points}
        brute = {p.member_mask for p in brute_force_spec_points(ring)}
        run.check_all(
            f"|X|={n}: structural spectrum equals brute force",
            [None],
            lambda _: structural == brute,
            lambda _: f"{len(structural)} structural vs {len(brute)} brute",
        )
    return run.done()


def run_idealgen(size: int | None = None, seed: int | None = None) -> Report:
    """Finitely generated ideals of P(X) are the power sets of the unions
    of their generators, via the GF(2) span of all products."""
    bound = min(size, 5) if size is not None else 5
    run = SuiteRun("idealgen")
    universe = universe_of_size(bound)
    n = universe.size
    total = 1 << n
    submasks: dict[int, frozenset[int]] = {}
    for a in range(total):
        subs = [0]
        for bit in range(n):
            if a >> bit & 1:
                subs += [s | 1 << bit for s in subs]
        submasks[a] = frozenset(subs)

    def span_equals_powerset(gens: tuple[int, ...]) -> bool:
        rows: set[int] = set()
        for g in gens:
            rows |= submasks[g]
        union = 0
        for g in gens:
            union |= g
        return span_masks(sorted(rows), n) == submasks[union]

    pairs = [(a, b) for a in range(total) for b in range(total)]
    run.check_all(
        f"|X|={n}: pairs generate the power set of their union",
        pairs,
        span_equals_powerset,
        lambda g: f"generators {g}",
    )

    triple_bound = min(bound, 4)
    tri_universe = universe_of_size(triple_bound)
    tri_total = 1 << triple_bound
    triples = [
        (a, b, c)
        for a in range(tri_total)
        for b in range(tri_total)
        for c in range(tri_total)
    ]

    def tri_span(gens: tuple[int, ...]) -> bool:
        rows: set[int] = set()
        for g in gens:
            rows |= submasks[g] if triple_bound == bound else frozenset(
                s for s in submasks.get(g, ()) if True
            )
        union = 0
        for g in gens:
            union |= g
        basis = F2Matrix.from_rows(sorted(rows), triple_bound).rref()
        if basis.rank != union.bit_count():
            return False
        return span_masks(sorted(rows), triple_bound) == frozenset(
            s for s in range(tri_total) if s & ~union == 0
        )

    run.check_all(
        f"|X|={triple_bound}: triples generate the power set of their union",
        triples,
        tri_span,
        lambda g: f"generators {g}",
    )

    run.check_all(
        "empty generator list gives the zero ideal",
        [None],
        lambda _: span_masks([], n) == {0},
        lambda _: "span of nothing",
    )
    return run.done()


def run_homfunctor(size: int | None = None, seed: int | None = None) -> Report:
    """Hom counting and the function round trip between power set rings,
    cross-checked against the slow atom-image oracle; functor laws and
    faithfulness of the preimage construction."""
    bound = min(size, 3) if size is not None else 3
    run = SuiteRun("homfunctor")
    universes = [universe_of_size(k) for k in range(bound + 1)]
    # target universes get distinct labels so reembedding mistakes cannot hide
    targets = [Universe(tuple(str(i) for i in range(1, k + 1))) for k in range(bound + 1)]

    count_cases = [(y, x) for y in universes for x in targets]
    run.check_all(
        "hom count is |Y|^|X|",
        count_cases,
        lambda yx: len(enumerate_homs(yx[0], yx[1]))
        == yx[0].size ** yx[1].size,
        lambda yx: f"|Y|={yx[0].size}, |X|={yx[1].size}",
    )
    run.check_all(
        "fast enumeration matches the doubly-exponential oracle",
        count_cases,
        lambda yx: {h.images for h in enumerate_homs(*yx)}
        == {h.images for h in enumerate_homs_oracle(*yx)},
        lambda yx: f"|Y|={yx[0].size}, |X|={yx[1].size}",
    )

    def round_trips(yx) -> bool:
        y, x = yx
        for hom in enumerate_homs(y, x):
            f = hom_to_function(hom)
            if induced_hom(f).images != hom.images:
                return False
        for f in all_functions(x, y):
            if hom_to_function(induced_hom(f)) != f:
                return False
        return True

    run.check_all(
        "hom <-> function round trips",
        count_cases,
        round_trips,
        lambda yx: f"|Y|={yx[0].size}, |X|={yx[1].size}",
    )

    run.check_all(
        "every hom passes the image-membership condition and is induced",
        [h for y in universes for x in targets for h in enumerate_homs(y, x)],
        lambda h: image_characterization_check(h)[0],
        lambda h: h.render(),
    )

    two = [universe_of_size(k) for k in range(3)]
    comp_cases = [
        (x, y, z, f, g)
        for x in [Universe(("1",)), Universe(("1", "2"))]
        for y in two
        for z in [Universe(("p",)), Universe(("p", "q"))]
        for f in all_functions(x, y)
        for g in all_functions(y, z)
    ]
    run.check_all(
        "preimages reverse composition",
        comp_cases,
        lambda c: induced_hom(c[4].compose(c[3])).images
        == induced_hom(c[3]).compose(induced_hom(c[4])).images,
        lambda c: f"f={c[3].render()}; g={c[4].render()}",
    )
    run.check_all(
        "preimage of the identity is the identity",
        universes,
        lambda u: identity_hom(u).images
        == tuple(u.singleton(x) for x in u.labels),
        lambda u: u.render(),
    )

    def faithful(yx) -> bool:
        y, x = yx
        seen = {}
        for f in all_functions(x, y):
            key = induced_hom(f).images
            if key in seen and seen[key] != f:
                return False
            seen[key] = f
        return True

    run.check_all(
        "distinct functions induce distinct homs",
        count_cases,
        faithful,
        lambda yx: f"|Y|={yx[0].size}, |X|={yx[1].size}",
    )

    def duality(yx) -> bool:
        y, x = yx
        for f in all_functions(x, y):
            hom = induced_hom(f)
            values = {hom(a).mask for a in y.subsets()}
            surjective = len(values) == 1 << x.size
            injective = len(values) == 1 << y.size
            if f.is_injective() != surjective or f.is_surjective() != injective:
                return False
        return True

    run.check_all(
        "f injective iff preimage map surjective; f surjective iff injective",
        count_cases,
        duality,
        lambda yx: f"|Y|={yx[0].size}, |X|={yx[1].size}",
    )

    run.check_all(
        "subset -> power-set map into P(P(X)) is not additive",
        [universe_of_size(2)],
        lambda u: powerset_of_powerset_not_additive(u) is not None,
        lambda u: u.render(),
    )
    return run.done()


def run_f2homs(size: int | None = None, seed: int | None = None) -> Report:
    """Homs into the 2-element field: |X| many for P(X), kernels exactly
    the spectrum for Boolean rings, and one for Z/12."""
    bound = min(size, 5) if size is not None else 5
    run = SuiteRun("f2homs")
    universes = [universe_of_size(k) for k in range(bound + 1)]

    run.check_all(
        "P(X) has exactly |X| homs to Z/2",
        universes,
        lambda u: len(homs_to_f2(PowerSetRing(u))) == u.size,
        lambda u: u.render(),
    )
    run.check_all(
        "each is a verified ring hom",
        [h for u in universes for h in homs_to_f2(PowerSetRing(u))],
        lambda h: h.is_ring_hom(),
        lambda h: h.render(),
    )
    run.check_all(
        "kernel map is a bijection onto the spectrum",
        [PowerSetRing(u) for u in universes]
        + [BooleanizationRing(ZMod(12)), BooleanizationRing(ZMod(30))],
        f2_hom_spec_bijection,
        lambda r: r.describe(),
    )
    run.check_all(
        "Z/12 has exactly one hom to Z/2 (kernel (2))",
        [None],
        lambda _: [h.kernel.render() for h in homs_to_f2(ZMod(12))] == ["(2)"],
        lambda _: "Z/12",
    )
    run.check_all(
        "the zero ring has no homs to Z/2",
        [None],
        lambda _: homs_to_f2(ZMod(1)) == [],
        lambda _: "Z/1",
    )
    return run.done()


def _random_fincof(rng: random.Random) -> fc.FinCofElem:
    support = frozenset(rng.randrange(0, 30) for _ in range(rng.randrange(0, 7)))
    if rng.random() < 0.5:
        return fc.FinCofElem.fin(support)
    return fc.FinCofElem.cofin(support)


def run_fincofin(size: int | None = None, seed: int | None = None) -> Report:
    """The finite/cofinite subring: case tables against the windowed
    pointwise oracle, both representable homs to Z/2, kernel
    classification, and the none-of-the-points separating witness."""
    count = size if size is not None else 10_000
    rng = random.Random(0 if seed is None else seed)
    run = SuiteRun("fincofin")
    elems = [_random_fincof(rng) for _ in range(count)]
    pairs = list(zip(elems, elems[1:] + elems[:1]))

    def windowed_ops_agree(pair) -> bool:
        a, b = pair
        w = fc.window([a, b])
        va = fc.windowed_eval(a, w)
        vb = fc.windowed_eval(b, w)
        plus = tuple(x ^ y for x, y in zip(va, vb))
        times = tuple(x & y for x, y in zip(va, vb))
        return (
            fc.windowed_eval(a + b, w) == plus
            and fc.windowed_eval(a * b, w) == times
        )

    run.check_all(
        "case tables match pointwise evaluation on a window",
        pairs,
        windowed_ops_agree,
        lambda p: f"{p[0].render()}, {p[1].render()}",
    )

    triples = list(zip(elems, elems[1:] + elems[:1], elems[2:] + elems[:2]))
    run.check_all(
        "ring axioms on sampled triples",
        triples,
        lambda t: (t[0] + t[1]) + t[2] == t[0] + (t[1] + t[2])
        and (t[0] * t[1]) * t[2] == t[0] * (t[1] * t[2])
        and t[0] * (t[1] + t[2]) == t[0] * t[1] + t[0] * t[2]
        and t[0] + t[1] == t[1] + t[0]
        and t[0] * t[1] == t[1] * t[0]
        and t[0] + fc.ZERO == t[0]
        and t[0] * fc.ONE == t[0]
        and t[0] + t[0] == fc.ZERO
        and t[0] * t[0] == t[0],
        lambda t: f"{t[0].render()}, {t[1].render()}, {t[2].render()}",
    )

    homs = [fc.frechet_hom()] + [fc.point_hom(x) for x in (0, 3, 17)]
    hom_cases = [(h, a, b) for h in homs for a, b in pairs[: max(1, count // 4)]]
    run.check_all(
        "mod-Fin and point evaluations preserve the ring structure",
        hom_cases,
        lambda c: fc.hom_respects_ops(*c),
        lambda c: f"{c[0].render()} on {c[1].render()}, {c[2].render()}",
    )

    run.check_all(
        "a separating element exists for every candidate point 0..100",
        list(range(101)),
        lambda x: fc.non_induced_witness(x).separates,
        lambda x: f"x={x}",
    )

    run.check_all(
        "kernel classification with maximality evidence",
        [None],
        lambda _: (
            fc.kernel_classify(fc.frechet_hom(), elems[:20]).kind
            is fc.KernelKind.FIN_KERNEL
            and fc.kernel_classify(fc.point_hom(5), elems[:20]).kind
            is fc.KernelKind.POINT_KERNEL
            and fc.kernel_classify(fc.frechet_hom(), elems[:20]).maximal
            and fc.kernel_classify(fc.point_hom(5), elems[:20]).maximal
        ),
        lambda _: "classification",
    )
    run.check_all(
        "the two kernel families are distinct (a singleton separates them)",
        [0, 1, 9],
        lambda x: fc.frechet_hom()(fc.FinCofElem.fin([x])) == 0
        and fc.point_hom(x)(fc.FinCofElem.fin([x])) == 1,
        lambda x: f"x={x}",
    )

    fins = [a if a.is_finite else a.complement() for a in elems[:50]]
    evidence = fc.fin_is_ideal_witness(fins[:15], elems[:15])
    run.check_all(
        "Fin absorbs sums and products",
        [None],
        lambda _: evidence.ok,
        lambda _: "ideal witness",
    )

    def not_principal(a: fc.FinCofElem) -> bool:
        x = fc.fin_not_principal_witness(a)
        singleton = fc.FinCofElem.fin([x])
        return x not in a and all(
            s * a != singleton for s in elems[:200]
        )

    run.check_all(
        "no finite set generates Fin: a singleton escapes every candidate",
        fins,
        not_principal,
        lambda a: a.render(),
    )
    return run.done()


def run_tensor(size: int | None = None, seed: int | None = None) -> Report:
    """Tensor products of restriction algebras: dimension is the overlap
    size, the comparison onto the overlap's power set is an isomorphism,
    and the split map into the product is injective (bijective exactly on
    disjoint pieces)."""
    bound = min(size, 4) if size is not None else 4
    run = SuiteRun("tensor")

    for n in range(bound + 1):
        universe = universe_of_size(n)
        base = PowerSetRing(universe)
        subsets = list(universe.subsets())
        tensor_pairs = [(a, b) for a in subsets for b in subsets]

        def dim_and_iso(pair) -> bool:
            a, b = pair
            t = tensor_over(base, a, b)
            if t.dimension != len(a * b):
                return False
            t.intersection_iso()  # raises on failure
            return True

        run.check_all(
            f"|X|={n}: dimension is |A&B| and the comparison map is an iso",
            tensor_pairs,
            dim_and_iso,
            lambda p: f"A={p[0].render()}, B={p[1].render()}",
        )

        run.check_all(
            f"|X|={n}: tensoring with the complement gives the zero ring",
            subsets,
            lambda a: tensor_over(base, a, a.complement()).size == 1,
            lambda a: a.render(),
        )

        def split_ok(pair) -> bool:
            a, b = pair
            ps = product_map(a, b)
            if not ps.injective:
                return False
            return ps.surjective == ps.disjoint

        run.check_all(
            f"|X|={n}: split into the product is injective, onto iff disjoint",
            tensor_pairs,
            split_ok,
            lambda p: f"A={p[0].render()}, B={p[1].render()}",
        )

        run.check_all(
            f"|X|={n}: tensoring with the mod-finite quotient vanishes",
            subsets,
            lambda a: tensor_with_fin_quotient(base, a).algebra.size == 1,
            lambda a: a.render(),
        )

        if n <= 3:
            run.check_all(
                f"|X|={n}: singleton relations span the same space as all",
                tensor_pairs,
                lambda p: TensorAlgebra(
                    PowerSetAlgebra(base, p[0]), PowerSetAlgebra(base, p[1])
                ).relations.bits
                == TensorAlgebra(
                    PowerSetAlgebra(base, p[0]),
                    PowerSetAlgebra(base, p[1]),
                    full_relations=True,
                ).relations.bits,
                lambda p: f"A={p[0].render()}, B={p[1].render()}",
            )

            def extension_matches(pair) -> bool:
                a, b = pair
                algebra = PowerSetAlgebra(base, a)
                phi = algebra.structure_hom()
                gens = [base.wrap(b.complement())]
                extended = extend_ideal(phi, gens)
                target = phi.target
                expected = {
                    e
                    for e in target.elements()
                    if e.payload.reembed(universe).issubset(a.difference(b))
                }
                return set(extended.members) == expected

            run.check_all(
                f"|X|={n}: extending P(B^c) along restriction gives P(A\\B)",
                tensor_pairs,
                extension_matches,
                lambda p: f"A={p[0].render()}, B={p[1].render()}",
            )
    return run.done()


def run_dorder(size: int | None = None, seed: int | None = None) -> Report:
    """Containment of subsets is equivalent to containment of their
    D-loci in the spectrum, exhaustively."""
    bound = min(size, 4) if size is not None else 4
    run = SuiteRun("dorder")
    for n in range(bound + 1):
        universe = universe_of_size(n)
        space = spec(PowerSetRing(universe))
        pairs = [(a, b) for a in universe.subsets() for b in universe.subsets()]
        run.check_all(
            f"|X|={n}: subset iff D-locus contained",
            pairs,
            lambda p: dlocus_order_check(p[0], p[1], space)
            == p[0].issubset(p[1]),
            lambda p: f"A={p[0].render()}, B={p[1].render()}",
        )
    return run.done()


def run_sheaf(size: int | None = None, seed: int | None = None) -> Report:
    """Presheaf laws, then locality and gluing over every cover of every
    open at small size, with seeded spot checks at size 6."""
    bound = min(size, 3) if size is not None else 3
    run = SuiteRun("sheaf")

    run.check_all(
        "restriction laws (identity, composition)",
        [universe_of_size(n) for n in range(5)],
        lambda u: StructureSheaf(u).presheaf_laws_hold(),
        lambda u: u.render(),
    )

    for n in range(bound + 1):
        universe = universe_of_size(n)
        sheaf = StructureSheaf(universe)
        gluing_failures: list[str] = []
        gluing_passed = 0
        locality_failures: list[str] = []
        locality_passed = 0
        for a in universe.subsets():
            sections = sheaf.sections(a)
            for cover in all_covers(a):
                if not cover:
                    # empty cover of the empty open: one section, nothing to glue
                    if len(sheaf.sections(universe.empty)) == 1:
                        gluing_passed += 1
                    else:
                        gluing_failures.append("empty cover")
                    continue
                families = list(compatible_families(cover))
                ok = True
                for family in families:
                    glued = check_gluing(cover, family)
                    if tuple(glued * piece for piece in cover) != family:
                        ok = False
                if len(families) != len(sections):
                    ok = False  # restriction is not a bijection onto families
                if ok:
                    gluing_passed += 1
                else:
                    gluing_failures.append(
                        f"A={a.render()}, cover={[c.render() for c in cover]}"
                    )
                vanishing = [
                    s
                    for s in sections
                    if all((s * piece).mask == 0 for piece in cover)
                ]
                if vanishing == [universe.empty]:
                    locality_passed += 1
                else:
                    locality_failures.append(
                        f"A={a.render()}, cover={[c.render() for c in cover]}"
                    )
        run.tally(f"|X|={n}: gluing exists and is unique over every cover", gluing_passed, gluing_failures)
        run.tally(f"|X|={n}: only the zero section vanishes on every cover", locality_passed, locality_failures)

    rng = random.Random(0 if seed is None else seed)
    big = universe_of_size(6)
    random_cases = []
    for _ in range(50):
        a = SetElem(big, rng.randrange(0, 1 << big.size))
        picks = []
        remaining = a.mask
        while remaining:
            piece = SetElem(big, rng.randrange(0, 1 << big.size)) * a
            picks.append(piece)
            remaining &= ~piece.mask
            if len(picks) > 8:
                break
        if remaining:
            picks.append(a)
        section = SetElem(big, rng.randrange(0, 1 << big.size)) * a
        random_cases.append((a, tuple(picks), section))

    def random_glue(case) -> bool:
        a, cover, s = case
        family = tuple(s * piece for piece in cover)
        return check_gluing(cover, family) == s

    run.check_all(
        "seeded covers at |X|=6 glue back to the section they came from",
        random_cases,
        random_glue,
        lambda c: f"A={c[0].render()}",
    )
    return run.done()


def run_eta(size: int | None = None, seed: int | None = None) -> Report:
    """The discrete space compared against the spectrum of its power set
    ring: point homeomorphism, comap isomorphisms, stalks, affineness,
    and the pairwise-open tensor witness."""
    bound = min(size, 4) if size is not None else 4
    run = SuiteRun("eta")
    universes = [universe_of_size(n) for n in range(bound + 1)]

    run.check_all(
        "comparison morphism fully verified",
        universes,
        lambda u: eta(u).verified,
        lambda u: u.render(),
    )
    run.check_all(
        "every stalk is a 2-element field",
        [(u, x) for u in universes for x in u.labels],
        lambda ux: stalk(ux[0], ux[1]).size == 2
        and stalk(ux[0], ux[1]).one != stalk(ux[0], ux[1]).zero,
        lambda ux: f"{ux[0].render()} at {ux[1]}",
    )
    run.check_all(
        "germs read off membership",
        [
            (u, x, s)
            for u in universes
            if u.size <= 3
            for x in u.labels
            for s in u.subsets()
        ],
        lambda uxs: germ(uxs[2], uxs[1]) == (1 if uxs[1] in uxs[2] else 0),
        lambda uxs: f"{uxs[2].render()} at {uxs[1]}",
    )
    run.check_all(
        "finite discrete spaces are affine with the comparison as evidence",
        universes,
        lambda u: is_affine(u).affine,
        lambda u: u.render(),
    )

    witness_universe = universe_of_size(min(bound, 3))
    witness_base = PowerSetRing(witness_universe)
    pairs = [
        (u, v)
        for u in witness_universe.subsets()
        for v in witness_universe.subsets()
    ]

    def separated_witness(pair) -> bool:
        u, v = pair
        t = tensor_over(witness_base, u, v)
        t.intersection_iso()
        return is_affine(sub_universe(u * v)).affine and t.dimension == len(u * v)

    run.check_all(
        "pairwise intersections are affine and sections tensor together",
        pairs,
        separated_witness,
        lambda p: f"U={p[0].render()}, V={p[1].render()}",
    )
    return run.done()


def run_functor(size: int | None = None, seed: int | None = None) -> Report:
    """Functions to scheme morphisms: identities, composition,
    faithfulness, and comap/restriction compatibility."""
    bound = min(size, 2) if size is not None else 2
    run = SuiteRun("functor")
    xs = [universe_of_size(k) for k in range(bound + 1)]
    ys = [Universe(tuple(str(i) for i in range(1, k + 1))) for k in range(bound + 1)]
    zs = [Universe(tuple(f"p{i}" for i in range(1, k + 1))) for k in range(bound + 1)]

    comp_cases = [
        (f, g)
        for x in xs
        for y in ys
        for z in zs
        for f in all_functions(x, y)
        for g in all_functions(y, z)
    ]
    run.check_all(
        "composition of morphisms matches the morphism of the composition",
        comp_cases,
        lambda fg: scheme_morphism(fg[1].compose(fg[0]))
        == scheme_morphism(fg[1]).compose(scheme_morphism(fg[0])),
        lambda fg: f"f={fg[0].render()}; g={fg[1].render()}",
    )

    from .powerset import SetFunction

    run.check_all(
        "identity functions give identity comaps",
        xs,
        lambda u: all(
            hom.is_bijective()
            and all(e == hom(e) for e in hom.source.elements())
            for hom in scheme_morphism(SetFunction.identity(u)).comaps.values()
        ),
        lambda u: u.render(),
    )

    def faithful(xy) -> bool:
        x, y = xy
        seen = {}
        for f in all_functions(x, y):
            signature = tuple(
                sorted(
                    (mask, tuple(sorted((k.render(), v.render()) for k, v in hom.table.items())))
                    for mask, hom in scheme_morphism(f).comaps.items()
                )
            )
            if signature in seen and seen[signature] != f:
                return False
            seen[signature] = f
        return True

    run.check_all(
        "comap tables alone determine the function",
        [(x, y) for x in xs for y in ys],
        faithful,
        lambda xy: f"|X|={xy[0].size}, |Y|={xy[1].size}",
    )

    run.check_all(
        "comaps are compatible with restriction",
        [f for x in xs for y in ys for f in all_functions(x, y)],
        lambda f: scheme_morphism(f).comaps_compatible_with_restrictions(),
        lambda f: f.render(),
    )
    return run.done()


def run_dsl(size: int | None = None, seed: int | None = None) -> Report:
    """Printer/parser round trip on generated syntax trees and differential
    evaluation of set expressions against direct calls."""
    from .dsl import differential_eval_case, random_expr, roundtrip_once

    roundtrips = size if size is not None else 100_000
    diffs = max(1, roundtrips // 10)
    rng = random.Random(0 if seed is None else seed)
    run = SuiteRun("dsl")

    failures: list[str] = []
    passed = 0
    for _ in range(roundtrips):
        ok, text = roundtrip_once(rng)
        if ok:
            passed += 1
        else:
            failures.append(text)
    run.tally("printer/parser round trip on generated trees", passed, failures)

    failures = []
    passed = 0
    for _ in range(diffs):
        ok, text = differential_eval_case(rng)
        if ok:
            passed += 1
        else:
            failures.append(text)
    run.tally("evaluation agrees with direct set arithmetic", passed, failures)
    return run.done()


SUITES = {
    "stone": run_stone,
    "maxideals": run_maxideals,
    "idealgen": run_idealgen,
    "homfunctor": run_homfunctor,
    "f2homs": run_f2homs,
    "fincofin": run_fincofin,
    "tensor": run_tensor,
    "dorder": run_dorder,
    "sheaf": run_sheaf,
    "eta": run_eta,
    "functor": run_functor,
    "dsl": run_dsl,
}


def suite_names() -> list[str]:
    return list(SUITES)


def run_suite(name: str, size: int | None = None, seed: int | None = None) -> Report:
    try:
        runner = SUITES[name]
    except KeyError:
        raise StonekitError(
            f"unknown suite {name!r}; available: {', '.join(SUITES)} (or 'all')"
        ) from None
    return runner(size=size, seed=seed)


def run_all(size: int | None = None, seed: int | None = None) -> list[Report]:
    return [runner(size=size, seed=seed) for runner in SUITES.values()]
