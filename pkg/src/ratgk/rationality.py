"""Whole-group predicates: rational, cut, GK-graph, classification, search.

A group is rational when all generators of every cyclic subgroup are
conjugate; cut when each is conjugate to the generator or its inverse.
The GK-graph has the primes dividing the order as vertices and an edge pq
whenever an element of order pq exists.  classify_rational_solvable matches
a group against the six graphs realizable by nontrivial solvable rational
groups, and search_witness sweeps bounded construction spaces for a group
with a prescribed graph.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

from .elements import FpMat
from .errors import CapExceeded
from .groups import (DEFAULT_ORDER_CAP, FiniteGroup, MatrixGroup, Subgroup,
                     direct_product, generate_group, named_group,
                     semidirect_product)
from .linalg import ModuleAction
from .numth import coprime_residues, euler_phi, prime_factors


@dataclass(frozen=True)
class PrimeGraph:
    """Vertices are primes; edges are unordered pairs of distinct vertices."""

    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    @classmethod
    def make(cls, vertices, edges=()) -> "PrimeGraph":
        vs = tuple(sorted(set(vertices)))
        es = set()
        for a, b in edges:
            if a == b:
                raise ValueError("edges join distinct primes")
            if a not in vs or b not in vs:
                raise ValueError(f"edge ({a},{b}) leaves the vertex set")
            es.add((min(a, b), max(a, b)))
        return cls(vs, tuple(sorted(es)))

    def dot(self, name: str = "GK") -> str:
        lines = [f"graph {name} {{"]
        for v in self.vertices:
            lines.append(f'  "{v}";')
        for a, b in self.edges:
            lines.append(f'  "{a}" -- "{b}";')
        lines.append("}")
        return "\n".join(lines)

    def __str__(self):
        es = ",".join(f"{a}-{b}" for a, b in self.edges) or "no edges"
        return f"({{{','.join(map(str, self.vertices))}}}; {es})"


# The six GK-graphs of nontrivial solvable rational groups, in the order
# they are exhibited: {2}; {2,3} edgeless; {2,3} joined; {2,5} edgeless;
# {2,5} joined; the full triangle on {2,3,5}.
MAIN_THEOREM_GRAPHS: tuple[PrimeGraph, ...] = (
    PrimeGraph.make((2,)),
    PrimeGraph.make((2, 3)),
    PrimeGraph.make((2, 3), ((2, 3),)),
    PrimeGraph.make((2, 5)),
    PrimeGraph.make((2, 5), ((2, 5),)),
    PrimeGraph.make((2, 3, 5), ((2, 3), (2, 5), (3, 5))),
)


def gk_graph(G: FiniteGroup) -> PrimeGraph:
    """Vertices: primes dividing |G|.  An element of order divisible by pq
    powers down to one of order exactly pq, so divisibility certifies the
    edge."""
    primes = prime_factors(G.order)
    orders = {G.element_order(cls[0]) for cls in G.conjugacy_classes()}
    edges = []
    for i, p in enumerate(primes):
        for q in primes[i + 1:]:
            if any(o % (p * q) == 0 for o in orders):
                edges.append((p, q))
    return PrimeGraph.make(primes, edges)


# --- rationality and cut ---

def is_rational(G: FiniteGroup) -> bool:
    """All generators of every cyclic subgroup are conjugate (checked on
    class representatives; both sides are class functions)."""
    for cls in G.conjugacy_classes():
        g = cls[0]
        o = G.element_order(g)
        cid = G.class_index(g)
        acc = g
        for m in range(2, o):
            acc = G.mul(acc, g)
            if math.gcd(m, o) == 1 and G.class_index(acc) != cid:
                return False
    return True


def is_cut(G: FiniteGroup) -> bool:
    """Every generator of every cyclic subgroup is conjugate to the
    generator or its inverse."""
    for cls in G.conjugacy_classes():
        g = cls[0]
        o = G.element_order(g)
        allowed = {G.class_index(g), G.class_index(G.inv(g))}
        acc = g
        for m in range(2, o):
            acc = G.mul(acc, g)
            if math.gcd(m, o) == 1 and G.class_index(acc) not in allowed:
                return False
    return True


@dataclass(frozen=True)
class CyclicSubgroupRecord:
    representative: object
    rep_label: str
    order: int
    phi: int
    generator_classes: int       # distinct classes among the generators
    norm_cent_index: int         # [N_G(<g>) : C_G(g)]
    cut: bool                    # generators land in class(g) or class(g^-1)


@dataclass(frozen=True)
class RationalityReport:
    group_name: str
    group_order: int
    records: tuple[CyclicSubgroupRecord, ...]
    rational: bool
    cut: bool
    normalizer_criterion: bool

    def to_text(self) -> str:
        lines = [f"group {self.group_name} of order {self.group_order}:",
                 f"  rational={self.rational} cut={self.cut} "
                 f"normalizer-criterion={self.normalizer_criterion}"]
        for r in self.records:
            lines.append(
                f"  <{r.rep_label}> order {r.order}: phi={r.phi} "
                f"generator-classes={r.generator_classes} [N:C]={r.norm_cent_index}"
                f"{'' if r.cut else ' not-cut'}")
        return "\n".join(lines)


def rationality_report(G: FiniteGroup) -> RationalityReport:
    """One record per distinct cyclic subgroup, plus the overall verdicts."""
    seen = set()
    records = []
    for g in G.elements:
        o = G.element_order(g)
        members = []
        acc = G.identity
        for _ in range(o):
            acc = G.mul(acc, g)
            members.append(acc)
        key = frozenset(G.index(m) for m in members)
        if key in seen:
            continue
        seen.add(key)
        gens = [m for m in members if G.element_order(m) == o]
        rep = min(gens, key=G.encode)
        classes = {G.class_index(G.power(rep, m)) for m in coprime_residues(o)}
        allowed = {G.class_index(rep), G.class_index(G.inv(rep))}
        cyc = G.subgroup_of_elements(members, gens=(rep,))
        n_order = len(G.normalizer(cyc))
        c_order = len(G.centralizer(rep))
        records.append(CyclicSubgroupRecord(
            representative=rep,
            rep_label=G.label(rep),
            order=o,
            phi=euler_phi(o),
            generator_classes=len(classes),
            norm_cent_index=n_order // c_order,
            cut=classes <= allowed,
        ))
    return RationalityReport(
        group_name=G.name,
        group_order=G.order,
        records=tuple(records),
        rational=all(r.generator_classes == 1 for r in records),
        cut=all(r.cut for r in records),
        normalizer_criterion=all(r.norm_cent_index == r.phi for r in records),
    )


def rationality_normalizer_criterion(G: FiniteGroup) -> bool:
    """True iff [N_G(<g>) : C_G(g)] = phi(|g|) for every g."""
    return rationality_report(G).normalizer_criterion


# --- classification against the six graphs ---

@dataclass(frozen=True)
class Classification:
    group_name: str
    group_order: int
    graph: PrimeGraph
    nontrivial: bool
    solvable: bool
    rational: bool
    matches_main_theorem: bool
    figure_index: Optional[int]    # 0-based index into MAIN_THEOREM_GRAPHS
    reason: str

    def to_text(self) -> str:
        head = (f"group {self.group_name} of order {self.group_order}: "
                f"graph {self.graph}")
        if self.matches_main_theorem:
            return f"{head}\n  matches figure {self.figure_index + 1} of 6"
        return f"{head}\n  does not match ({self.reason})"


def classify_rational_solvable(G: FiniteGroup) -> Classification:
    graph = gk_graph(G)
    nontrivial = G.order > 1
    solvable = G.is_solvable()
    rational = is_rational(G)
    figure = MAIN_THEOREM_GRAPHS.index(graph) if graph in MAIN_THEOREM_GRAPHS else None
    reasons = []
    if not nontrivial:
        reasons.append("trivial group")
    if not solvable:
        reasons.append("not solvable")
    if not rational:
        reasons.append("not rational")
    if figure is None:
        reasons.append("graph not among the six figures")
    matches = not reasons
    return Classification(G.name, G.order, graph, nontrivial, solvable,
                          rational, matches, figure,
                          "; ".join(reasons) or "all conditions hold")


# --- the order 6/10/15 consequence ---

@dataclass(frozen=True)
class CorollaryVerdict:
    group_name: str
    applicable: bool
    missing: tuple[str, ...]
    witnesses: dict
    ok: bool

    def to_text(self) -> str:
        if not self.applicable:
            return (f"group {self.group_name}: preconditions unmet "
                    f"({'; '.join(self.missing)})")
        parts = [f"order {k}: {v}" for k, v in sorted(self.witnesses.items())]
        return (f"group {self.group_name}: "
                + ("; ".join(parts) if self.ok else "missing some witness"))


def check_corollary(G: FiniteGroup) -> CorollaryVerdict:
    """For solvable rational G of order divisible by 15: exhibit elements
    of orders 6, 10 and 15."""
    missing = []
    if G.order % 15:
        missing.append("order not divisible by 15")
    else:
        if not G.is_solvable():
            missing.append("not solvable")
        if not is_rational(G):
            missing.append("not rational")
    if missing:
        return CorollaryVerdict(G.name, False, tuple(missing), {}, False)
    witnesses = {}
    for target in (6, 10, 15):
        for g in G.elements:
            if G.element_order(g) == target:
                witnesses[target] = G.label(g)
                break
    return CorollaryVerdict(G.name, True, (), witnesses,
                            ok=set(witnesses) == {6, 10, 15})


# --- witness constructions -----------------------------------------------------

def _f52_q8(cap=DEFAULT_ORDER_CAP):
    q8 = named_group("Q8", cap=cap)
    return semidirect_product(ModuleAction.natural(q8), name="F5^2:Q8", cap=cap)


WITNESS_CANDIDATES: tuple[tuple[str, object], ...] = (
    ("C2", lambda cap: named_group("C2", cap=cap)),
    ("S3", lambda cap: named_group("S3", cap=cap)),
    ("S3xS3", lambda cap: direct_product(named_group("S3", cap=cap),
                                         named_group("S3", cap=cap), cap=cap)),
    ("F5^2:Q8", _f52_q8),
    ("(F5^2:Q8)xC2", lambda cap: direct_product(_f52_q8(cap),
                                                named_group("C2", cap=cap), cap=cap)),
    ("(F5^2:Q8)xS3", lambda cap: direct_product(_f52_q8(cap),
                                                named_group("S3", cap=cap), cap=cap)),
)


def witness_candidate(label: str, cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    for name, builder in WITNESS_CANDIDATES:
        if name == label:
            return builder(cap)
    raise KeyError(f"unknown witness candidate {label!r}")


# --- bounded search ---------------------------------------------------------------

@dataclass
class SearchResult:
    target: PrimeGraph
    space: str
    found: Optional[FiniteGroup]
    examined: int = 0
    skipped_cap: int = 0
    notes: list = field(default_factory=list)


@lru_cache(maxsize=None)
def _gl(n: int) -> MatrixGroup:
    """GL(n,5) for n <= 2, from fixed generators (order checked in tests)."""
    if n == 1:
        gens = [FpMat.from_rows(((2,),), 5)]
    elif n == 2:
        gens = [FpMat.from_rows(((2, 0), (0, 1)), 5),
                FpMat.from_rows(((4, 1), (4, 0)), 5)]
    else:
        raise ValueError("only GL(1,5) and GL(2,5) are provided")
    return MatrixGroup.generate(gens, cap=DEFAULT_ORDER_CAP, name=f"GL({n},5)")


@lru_cache(maxsize=None)
def _gl_subgroup_pool(n: int) -> tuple[MatrixGroup, ...]:
    """All subgroups of GL(n,5) generated by (x, y) with x a least-encoding
    conjugacy class representative and y any element, deduplicated by
    element set, in sweep order.  Covers every 1- and 2-generated subgroup
    up to conjugacy.
    """
    from . import _core
    from .elements import decode_mat

    G = _gl(n)
    reps = sorted((min(cls, key=G.encode) for cls in G.conjugacy_classes()),
                  key=G.encode)
    element_codes = [G.encode(g) for g in G.elements]
    candidates = []
    seen = set()
    for x in reps:
        xcode = G.encode(x)
        for ycode in (None, *element_codes):
            gen_codes = [xcode] if ycode is None else [xcode, ycode]
            member_codes = _core.mat_closure(gen_codes, n, 5, G.order)
            key = frozenset(member_codes)
            if key in seen:
                continue
            seen.add(key)
            elements = [FpMat(decode_mat(c, n, 5), n, 5) for c in member_codes]
            gens = [FpMat(decode_mat(c, n, 5), n, 5) for c in gen_codes]
            sub = MatrixGroup(f"GL({n},5)-sub{len(candidates)}", gens,
                              elements, n, 5)
            candidates.append(sub)
    return tuple(candidates)


def _search_named(target: PrimeGraph, cap: int) -> SearchResult:
    result = SearchResult(target, "named", None)
    for label, builder in WITNESS_CANDIDATES:
        try:
            G = builder(cap)
        except CapExceeded:
            result.skipped_cap += 1
            continue
        result.examined += 1
        verdict = classify_rational_solvable(G)
        if verdict.solvable and verdict.rational and verdict.graph == target:
            result.found = G
            return result
    return result


def _search_semidirect(target: PrimeGraph, n: int, cap: int) -> SearchResult:
    result = SearchResult(target, f"gl{n}", None)
    want = set(target.vertices)
    for S in _gl_subgroup_pool(n):
        if set(prime_factors(5 ** n * S.order)) != want:
            continue
        if not S.is_solvable() or not is_rational(S):
            # G/V is isomorphic to S, and quotients of solvable rational
            # groups stay solvable rational, so G cannot qualify
            continue
        result.examined += 1
        try:
            G = semidirect_product(ModuleAction.natural(S), cap=cap,
                                   name=f"F5^{n}:{S.name}")
        except CapExceeded:
            result.skipped_cap += 1
            continue
        verdict = classify_rational_solvable(G)
        if verdict.solvable and verdict.rational and verdict.graph == target:
            result.found = G
            return result
    return result


def search_witness(target: PrimeGraph, space: str = "named",
                   cap: int = DEFAULT_ORDER_CAP) -> SearchResult:
    """First group in the given space that is solvable, rational and has the
    target GK-graph; spaces: "named" (the fixed candidate constructions),
    "gl1"/"gl2" (V = F5^n acted on by the GL(n,5) subgroup pool)."""
    if space == "named":
        return _search_named(target, cap)
    if space in ("gl1", "gl2"):
        return _search_semidirect(target, int(space[2]), cap)
    raise ValueError(f"unknown search space {space!r}; "
                     "expected 'named', 'gl1' or 'gl2'")
