"""Deciders for the extendable-family classes W_p and criticality.

A graph with at least p vertices lies in W_p when every p pairwise
disjoint independent sets extend to p pairwise disjoint maximum
independent sets.  Three deciders with unrelated mechanisms are kept
side by side on purpose:

  * the oracle enumerates every disjoint p-tuple literally and tries to
    extend each one (exponential; guarded behind a vertex cap),
  * the ridge decider checks purity plus a fiber size floor,
  * the localization decider recurses on vertex localizations until the
    complete base case.

Cross-validating them over exhaustive catalogs is the point of the
package, so none of them may consult another's logic.  The same holds
for the two criticality tests (edge deletion versus fiber cover) and
for the four conditions of the theorem report.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .bitset import VertexSet
from .graphs import Edge, Graph, complement, delete_edge, edge_localization, induced_subgraph
from .independence import (
    IndependenceProfile,
    independence_number,
    independent_masks_of_size,
    independent_set_masks,
    maximal_independent_set_masks,
    profile,
)
from .saturation import is_kt_saturated, maximal_clique_sizes_uniform, min_clique_codegree

# The oracle's tuple enumeration is exponential; anything larger needs
# an explicit opt-in.
ORACLE_VERTEX_LIMIT = 10


class OracleSizeError(ValueError):
    """The exhaustive oracle was asked for a graph above its cap."""


def _check_oracle_size(g: Graph, allow_large: bool) -> None:
    if g.n > ORACLE_VERTEX_LIMIT and not allow_large:
        raise OracleSizeError(
            f"oracle capped at {ORACLE_VERTEX_LIMIT} vertices; got {g.n} "
            "(pass allow_large to override)"
        )


def _unextendable_family(g: Graph, p: int) -> tuple[int, ...] | None:
    """First pairwise disjoint p-tuple of independent sets (as masks)
    with no disjoint extension to maximum independent sets, else None.

    Literal ordered enumeration over all tuples, empty sets included.
    Found extensions are cached: a later tuple dominated slot by slot
    by a cached witness extends without a fresh search.
    """
    ind = independent_set_masks(g)
    mis = maximal_independent_set_masks(g)
    alpha = max(m.bit_count() for m in mis)
    omega = tuple(m for m in mis if m.bit_count() == alpha)
    sup = {a: tuple(m for m in omega if m & a == a) for a in ind}
    for a in ind:
        if not sup[a]:
            # a alone cannot reach maximum size, so pad with empty slots
            return (a,) + (0,) * (p - 1)

    witnesses: list[tuple[int, ...]] = []
    family = [0] * p

    def extend_family() -> tuple[int, ...] | None:
        order = sorted(range(p), key=lambda i: len(sup[family[i]]))
        chosen = [0] * p

        def place(k: int, used: int) -> bool:
            if k == p:
                return True
            slot = order[k]
            for m in sup[family[slot]]:
                if m & used == 0:
                    chosen[slot] = m
                    if place(k + 1, used | m):
                        return True
            return False
        return tuple(chosen) if place(0, 0) else None

    def search(slot: int, used: int) -> tuple[int, ...] | None:
        if slot == p:
            snapshot = tuple(family)
            for w in witnesses:
                if all(a & m == a for a, m in zip(snapshot, w)):
                    return None
            found = extend_family()
            if found is None:
                return snapshot
            witnesses.append(found)
            return None
        for a in ind:
            if a & used == 0:
                family[slot] = a
                bad = search(slot + 1, used | a)
                if bad is not None:
                    return bad
        return None

    return search(0, 0)


def is_in_wp_oracle(g: Graph, p: int, *, allow_large: bool = False) -> bool:
    """Definition-level membership test by exhaustive tuple extension."""
    if p < 1:
        raise ValueError("p must be at least 1")
    _check_oracle_size(g, allow_large)
    if g.n < p:
        return False
    return _unextendable_family(g, p) is None


def wp_oracle_counterexample(
    g: Graph, p: int, *, allow_large: bool = False
) -> tuple[VertexSet, ...] | None:
    """An unextendable disjoint family witnessing non-membership.

    With fewer than p vertices the all-empty family already fails, since
    p pairwise disjoint nonempty maximum sets cannot fit.
    """
    if p < 1:
        raise ValueError("p must be at least 1")
    _check_oracle_size(g, allow_large)
    if g.n < p:
        return tuple(VertexSet.empty(g.n) for _ in range(p))
    bad = _unextendable_family(g, p)
    if bad is None:
        return None
    return tuple(VertexSet(g.n, m) for m in bad)


def is_in_wp_ridge(g: Graph, p: int) -> bool:
    """Membership via purity plus the fiber size floor."""
    if p < 1:
        raise ValueError("p must be at least 1")
    prof = profile(g)
    return prof.is_pure and prof.min_fiber_size >= p


def is_in_wp_localization(g: Graph, p: int, memo: dict | None = None) -> bool:
    """Membership via recursion over vertex localizations.

    Every vertex localization must drop the independence number by
    exactly one and stay in the class; the base case is a complete
    graph on at least p vertices.  A shared memo dict lets catalog
    sweeps reuse work across graphs.
    """
    if p < 1:
        raise ValueError("p must be at least 1")
    return _wp_local(g, p, {} if memo is None else memo)


def _wp_local(g: Graph, p: int, memo: dict) -> bool:
    key = (g.adj, p)
    hit = memo.get(key)
    if hit is not None:
        return hit
    alpha = independence_number(g)
    if alpha == 1:
        result = g.is_complete() and g.n >= p
    else:
        result = True
        full = (1 << g.n) - 1
        for v in range(g.n):
            keep = full & ~(g.adj[v] | 1 << v)
            if keep == 0:
                result = False
                break
            sub = induced_subgraph(g, VertexSet(g.n, keep)).graph
            if independence_number(sub) != alpha - 1 or not _wp_local(sub, p, memo):
                result = False
                break
    memo[key] = result
    return result


def w_index(g: Graph) -> int | None:
    """Largest p for which g is in W_p; None when not well-covered.

    For well-covered graphs this is the minimum fiber size over all
    ridges (n itself for complete graphs, whose one ridge is empty).
    """
    prof = profile(g)
    if not prof.is_pure:
        return None
    return prof.min_fiber_size


def is_edge_alpha_critical(g: Graph, e: Edge | tuple[int, int]) -> bool:
    """Does deleting this edge raise the independence number?"""
    u, v = e.endpoints() if isinstance(e, Edge) else e
    return independence_number(delete_edge(g, (u, v))) > independence_number(g)


def is_alpha_critical_direct(g: Graph) -> bool:
    """Every edge deletion raises the independence number.

    Edgeless graphs are vacuously critical; reports carry a separate
    vacuous flag for them.
    """
    alpha = independence_number(g)
    return all(
        independence_number(delete_edge(g, e)) > alpha for e in g.edges()
    )


def non_critical_edge(g: Graph) -> Edge | None:
    """First edge whose deletion keeps the independence number."""
    alpha = independence_number(g)
    for e in g.edges():
        if independence_number(delete_edge(g, e)) == alpha:
            return e
    return None


def is_alpha_critical_fibers(g: Graph) -> tuple[bool, Edge | None]:
    """Criticality via the fiber cover: every edge must lie inside some
    ridge's fiber.  Returns the first uncovered edge as witness."""
    prof = profile(g)
    fibers = [r.fiber.bits for r in prof.ridges]
    for e in g.edges():
        pair = 1 << e.u | 1 << e.v
        if not any(pair & f == pair for f in fibers):
            return (False, e)
    return (True, None)


@dataclass(frozen=True)
class TheoremReport:
    """The four equivalent conditions, each computed by its own route.

    cond_a: criticality by edge deletion plus the exhaustive oracle.
    cond_b: purity, ridge degrees, and missing-edge coverage on the
            independence complex, all from adjacency arithmetic.
    cond_c: well-coveredness, fiber sizes, and the fiber edge cover,
            with fibers read off membership in the maximum-set table.
    cond_d: saturation, clique uniformity, and clique codegree on the
            complement.

    witnesses holds one failure exhibit per failing condition.
    """

    p: int
    r: int
    cond_a: bool
    cond_b: bool
    cond_c: bool
    cond_d: bool
    witnesses: Mapping[str, dict]

    @property
    def all_equal(self) -> bool:
        return self.cond_a == self.cond_b == self.cond_c == self.cond_d

    @property
    def all_true(self) -> bool:
        return self.cond_a and self.cond_b and self.cond_c and self.cond_d


def _cond_a(g: Graph, p: int, allow_large: bool) -> tuple[bool, dict | None]:
    bad = wp_oracle_counterexample(g, p, allow_large=allow_large)
    if bad is not None:
        return False, {
            "kind": "unextendable_family",
            "sets": [s.to_tuple() for s in bad],
        }
    loose = non_critical_edge(g)
    if loose is not None:
        return False, {"kind": "non_critical_edge", "edge": loose.endpoints()}
    return True, None


def _cond_b(g: Graph, p: int, prof: IndependenceProfile) -> tuple[bool, dict | None]:
    sizes = {len(f) for f in prof.facets}
    if len(sizes) != 1:
        small = min(prof.facets, key=len)
        return False, {"kind": "impure_complex", "facet": small.to_tuple()}
    for ridge in prof.ridges:
        # the ridge's link has exactly the fiber as vertex set
        if len(ridge.fiber) < p:
            return False, {
                "kind": "thin_ridge",
                "ridge": ridge.vertices.to_tuple(),
                "degree": len(ridge.fiber),
            }
    for e in g.edges():
        pair = 1 << e.u | 1 << e.v
        if not any(pair & r.fiber.bits == pair for r in prof.ridges):
            return False, {"kind": "missing_edge_outside_links", "edge": e.endpoints()}
    return True, None


def _cond_c(g: Graph, p: int) -> tuple[bool, dict | None]:
    mis = maximal_independent_set_masks(g)
    alpha = max(m.bit_count() for m in mis)
    for m in mis:
        if m.bit_count() != alpha:
            return False, {
                "kind": "not_well_covered",
                "maximal_set": VertexSet(g.n, m).to_tuple(),
            }
    omega = set(mis)
    covered = 0
    for s in independent_masks_of_size(g, alpha - 1):
        members = [x for x in range(g.n) if not s >> x & 1 and (s | 1 << x) in omega]
        if len(members) < p:
            return False, {
                "kind": "thin_fiber",
                "ridge": VertexSet(g.n, s).to_tuple(),
                "fiber": members,
            }
        for i, x in enumerate(members):
            for y in members[i + 1:]:
                covered |= 1 << (x * g.n + y)
    for e in g.edges():
        if not covered >> (e.u * g.n + e.v) & 1:
            return False, {"kind": "uncovered_edge", "edge": e.endpoints()}
    return True, None


def _cond_d(g: Graph, p: int, r: int) -> tuple[bool, dict | None]:
    h = complement(g)
    uniform, size = maximal_clique_sizes_uniform(h)
    if not uniform or size != r:
        return False, {
            "kind": "clique_sizes_not_uniform_r",
            "uniform": uniform,
            "size": size,
        }
    if not is_kt_saturated(h, r + 1):
        return False, {"kind": "not_saturated", "t": r + 1}
    codeg = min_clique_codegree(h, r)
    if codeg < p:
        return False, {"kind": "thin_clique_codegree", "min_codegree": codeg}
    return True, None


def main_theorem_report(g: Graph, p: int, *, allow_large: bool = False) -> TheoremReport:
    if p < 1:
        raise ValueError("p must be at least 1")
    r = independence_number(g)
    prof = profile(g)
    a, wa = _cond_a(g, p, allow_large)
    b, wb = _cond_b(g, p, prof)
    c, wc = _cond_c(g, p)
    d, wd = _cond_d(g, p, r)
    witnesses = {}
    for name, w in (("cond_a", wa), ("cond_b", wb), ("cond_c", wc), ("cond_d", wd)):
        if w is not None:
            witnesses[name] = w
    return TheoremReport(p=p, r=r, cond_a=a, cond_b=b, cond_c=c, cond_d=d, witnesses=witnesses)


@dataclass(frozen=True, slots=True)
class EdgeLocalizationEntry:
    """Verdict for one edge: the localization's size and class, or the
    explicit empty-localization signal."""

    edge: Edge
    empty: bool
    vertex_count: int
    in_lower_class: bool | None


def edge_localization_scan(g: Graph, p: int) -> tuple[EdgeLocalizationEntry, ...]:
    """For each edge, is the edge localization in W_{p-1}?

    Empty localizations get a distinct verdict instead of a class flag.
    """
    if p < 2:
        raise ValueError("the scan needs p >= 2 so the lower class exists")
    entries = []
    for e in g.edges():
        sub = edge_localization(g, e)
        if sub is None:
            entries.append(EdgeLocalizationEntry(e, True, 0, None))
        else:
            entries.append(
                EdgeLocalizationEntry(e, False, sub.graph.n, is_in_wp_ridge(sub.graph, p - 1))
            )
    return tuple(entries)


@dataclass(frozen=True, slots=True)
class GorensteinReport:
    """Flags of the three combinatorial conditions; all None when the
    graph has an isolated vertex and the equivalence does not apply."""

    applicable: bool
    triangle_free_w2: bool | None
    fiber_route: bool | None
    complement_route: bool | None

    @property
    def all_equal(self) -> bool:
        return self.triangle_free_w2 == self.fiber_route == self.complement_route


def gorenstein_combinatorial_check(g: Graph, memo: dict | None = None) -> GorensteinReport:
    """Three equivalent combinatorial conditions, each by its own route:
    triangle-free plus W_2 (localization decider), triangle-free plus
    the fiber floor (ridge decider), and the complement-side clique
    conditions.  Applies only to graphs without isolated vertices."""
    if any(row == 0 for row in g.adj):
        return GorensteinReport(False, None, None, None)
    triangle_free = all(g.adj[e.u] & g.adj[e.v] == 0 for e in g.edges())
    b = triangle_free and is_in_wp_localization(g, 2, memo)
    c = triangle_free and is_in_wp_ridge(g, 2)
    h = complement(g)
    r = independence_number(g)
    uniform, size = maximal_clique_sizes_uniform(h)
    d = (
        uniform
        and size == r
        and independence_number(h) == 2
        and min_clique_codegree(h, r) >= 2
    )
    return GorensteinReport(True, b, c, d)
