"""Exhaustive generation of small graphs and batch verification suites.

Labeled oriented graphs on ``n`` vertices are indexed by an integer: the
low ``n`` bits give the vertex kinds, the remaining base-4 digits give the
state of each vertex pair (none, forward, backward, both).  Suites split
that index range into chunks, so a sweep can run on several processes
and still aggregate to the same result.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .chordal import (
    chordless_cycle,
    clique_counts,
    clique_separator_decomposition,
    clique_tree_cip,
    has_cip,
    has_running_intersection,
    is_chordal,
    naive_patching_split,
)
from .classify import (
    decompose_elementary,
    is_elementary_type_forbidden,
    is_elementary_type_inductive,
    is_specially_oriented,
    rebuild,
)
from .cohomology import chordal_hilbert_mv, et_hilbert_recursive, quadratic_dual_series, stanley_reisner_dims
from .errors import CapExceeded, NotElementaryType
from .formats import to_dict
from .graph import ORDINARY, SPECIAL, NaiveGraph, OrientedGraph, is_isomorphic, naive_projection

ORIENTED_CAP = 5
SPECIAL_CAP = 6
NAIVE_CAP = 6
FILTERS = ("specially_oriented", "connected", "chordal")


def vertex_ids(n: int) -> tuple[str, ...]:
    return tuple(f"v{i}" for i in range(1, n + 1))


def _pairs(n: int) -> list[tuple[int, int]]:
    return list(itertools.combinations(range(n), 2))


def oriented_space_size(n: int) -> int:
    return 2**n * 4 ** (n * (n - 1) // 2)


def decode(n: int, index: int) -> OrientedGraph | None:
    """The labeled candidate with this index, or ``None`` if it is invalid."""
    ids = vertex_ids(n)
    kinds = [SPECIAL if (index >> i) & 1 else ORDINARY for i in range(n)]
    rest = index >> n
    arcs = []
    for a, b in _pairs(n):
        state = rest & 3
        rest >>= 2
        if state & 1:
            if kinds[a] is SPECIAL:
                return None
            arcs.append((ids[a], ids[b]))
        if state & 2:
            if kinds[b] is SPECIAL:
                return None
            arcs.append((ids[b], ids[a]))
    return OrientedGraph(tuple(zip(ids, kinds)), frozenset(arcs))


def _specially_oriented_for_kinds(n: int, kind_bits: int) -> Iterator[OrientedGraph]:
    # ordinary-ordinary pairs: none or both; ordinary-special: none or o->s
    ids = vertex_ids(n)
    kinds = [SPECIAL if (kind_bits >> i) & 1 else ORDINARY for i in range(n)]
    options = []
    for a, b in _pairs(n):
        ka, kb = kinds[a], kinds[b]
        if ka is ORDINARY and kb is ORDINARY:
            options.append(((), ((ids[a], ids[b]), (ids[b], ids[a]))))
        elif ka is ORDINARY:
            options.append(((), ((ids[a], ids[b]),)))
        elif kb is ORDINARY:
            options.append(((), ((ids[b], ids[a]),)))
        else:
            options.append(((),))
    vertices = tuple(zip(ids, kinds))
    for choice in itertools.product(*options):
        yield OrientedGraph(vertices, frozenset(a for part in choice for a in part))


def canonical_key(g: OrientedGraph) -> tuple:
    """Lexicographically least serialization over all vertex orders."""
    return min(_keyed_perms(g))[0]


def _keyed_perms(g: OrientedGraph):
    ids = g.ids
    for perm in itertools.permutations(range(len(ids))):
        pos = {ids[old]: new for new, old in enumerate(perm)}
        key = (
            tuple(g.kind[ids[old]] is SPECIAL for old in perm),
            tuple(sorted((pos[v], pos[w]) for v, w in g.arcs)),
        )
        yield key, perm


def canonical_form(g: OrientedGraph) -> OrientedGraph:
    """Representative of the isomorphism class on ids ``v1..vn``."""
    (kinds, arcs), _ = min(_keyed_perms(g))
    ids = vertex_ids(len(g))
    return OrientedGraph(
        tuple((ids[i], SPECIAL if s else ORDINARY) for i, s in enumerate(kinds)),
        frozenset((ids[a], ids[b]) for a, b in arcs),
    )


@dataclass(frozen=True)
class EnumerationSpec:
    n: int
    up_to_iso: bool = False
    filters: frozenset[str] = frozenset()
    cap: int = ORIENTED_CAP

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("need at least one vertex")
        unknown = set(self.filters) - set(FILTERS)
        if unknown:
            raise ValueError(f"unknown filters: {sorted(unknown)}")
        cap = max(self.cap, SPECIAL_CAP) if "specially_oriented" in self.filters else self.cap
        if self.n > cap:
            raise CapExceeded(f"n = {self.n} exceeds the enumeration cap {cap}")
        if self.up_to_iso and self.n > 8:
            raise CapExceeded("canonical forms are limited to 8 vertices")


def _passes(g: OrientedGraph, filters) -> bool:
    if "connected" in filters and not naive_projection(g).is_connected():
        return False
    if "chordal" in filters and not is_chordal(naive_projection(g))[0]:
        return False
    return True


def enumerate_oriented(spec: EnumerationSpec) -> Iterator[OrientedGraph]:
    """Every valid oriented graph on ``v1..vn`` matching the filters, once each.

    With ``up_to_iso`` only the first member of each class is kept, in its
    canonical form.
    """
    if "specially_oriented" in spec.filters:
        source = (
            g for bits in range(2**spec.n) for g in _specially_oriented_for_kinds(spec.n, bits)
        )
    else:
        source = (g for i in range(oriented_space_size(spec.n)) if (g := decode(spec.n, i)) is not None)
    seen = set()
    for g in source:
        if not _passes(g, spec.filters):
            continue
        if spec.up_to_iso:
            key = canonical_key(g)
            if key in seen:
                continue
            seen.add(key)
            yield canonical_form(g)
        else:
            yield g


def count_oriented(spec: EnumerationSpec) -> int:
    return sum(1 for _ in enumerate_oriented(spec))


def naive_space_size(n: int) -> int:
    return 2 ** (n * (n - 1) // 2)


def decode_naive(n: int, index: int) -> NaiveGraph:
    ids = vertex_ids(n)
    edges = [(ids[a], ids[b]) for k, (a, b) in enumerate(_pairs(n)) if (index >> k) & 1]
    return NaiveGraph.build(ids, edges)


def enumerate_naive(n: int) -> Iterator[NaiveGraph]:
    if n > NAIVE_CAP:
        raise CapExceeded(f"n = {n} exceeds the naive enumeration cap {NAIVE_CAP}")
    for i in range(naive_space_size(n)):
        yield decode_naive(n, i)


# -- verification ------------------------------------------------------------------


@dataclass
class VerificationOutcome:
    suite: str
    n: int
    checked: int = 0
    failures: list[dict] = field(default_factory=list)
    findings: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def merge(self, checked: int, failures: list[dict], findings: list[dict] = ()) -> None:
        self.checked += checked
        self.failures.extend(failures)
        self.findings.extend(findings)

    def finish(self) -> "VerificationOutcome":
        key = lambda d: repr(sorted(d.items()))  # noqa: E731
        self.failures.sort(key=key)
        self.findings.sort(key=key)
        return self

    def to_dict(self) -> dict:
        out = {"suite": self.suite, "n": self.n, "checked": self.checked, "failures": self.failures}
        if self.findings:
            out["findings"] = self.findings
        return out


def _failure(g, **details) -> dict:
    payload = to_dict(g) if isinstance(g, OrientedGraph) else {
        "vertices": list(g.vertices),
        "edges": [list(e) for e in g.sorted_edges()],
    }
    return {"graph": payload, **details}


def _run(chunk_fn: Callable, jobs: list[tuple], workers: int) -> list[tuple]:
    if workers <= 1 or len(jobs) <= 1:
        return [chunk_fn(*job) for job in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(chunk_fn, *zip(*jobs)))


def _split(total: int, parts: int) -> list[tuple[int, int]]:
    parts = max(1, min(parts, total))
    step = -(-total // parts)
    return [(lo, min(lo + step, total)) for lo in range(0, total, step)]


def _sweep(suite: str, n: int, chunk_fn, sizes: Callable[[int], int], workers: int, per_worker: int = 4):
    outcome = VerificationOutcome(suite, n)
    jobs = [(k, lo, hi) for k in range(1, n + 1) for lo, hi in _split(sizes(k), workers * per_worker)]
    for checked, failures, findings in _run(chunk_fn, jobs, workers):
        outcome.merge(checked, failures, findings)
    return outcome.finish()


# elementary type: forbidden patterns vs inductive decomposition


def _et_chunk(n: int, lo: int, hi: int):
    checked, failures = 0, []
    for i in range(lo, hi):
        g = decode(n, i)
        if g is None:
            continue
        checked += 1
        forbidden, witness = is_elementary_type_forbidden(g)
        inductive = is_elementary_type_inductive(g)
        if forbidden != inductive:
            failures.append(_failure(g, forbidden=forbidden, inductive=inductive))
    return checked, failures, []


def verify_et_equivalence(n: int, workers: int = 1) -> VerificationOutcome:
    EnumerationSpec(n)
    return _sweep("et", n, _et_chunk, oriented_space_size, workers)


# chordality: elimination vs clique tree vs clique-separator decomposition


def _tree_split_recursive(ng: NaiveGraph) -> list[tuple[str, ...]]:
    if ng.is_complete():
        return [tuple(sorted(ng.vertices))]
    xi, rest, _ = naive_patching_split(ng)
    return _tree_split_recursive(ng.induced(rest)) + [tuple(sorted(xi))]


def check_chordal_instance(ng: NaiveGraph) -> dict | None:
    chordal, _ = is_chordal(ng)
    tree = clique_tree_cip(ng)
    pieces = clique_separator_decomposition(ng)
    details = {}
    if chordal != (tree is not None) or chordal != (pieces is not None):
        details.update(chordal=chordal, clique_tree=tree is not None, separator=pieces is not None)
    if not chordal:
        cycle = chordless_cycle(ng)
        if cycle is None or len(cycle) < 4:
            details["cycle_witness"] = cycle
    if tree is not None:
        if has_running_intersection(tree.cliques, tree.edges) != has_cip(tree.cliques, tree.edges):
            details["rip_vs_cip"] = True
        leaves = _tree_split_recursive(ng)
        if sorted(leaves) != list(tree.cliques):
            details["tree_split_leaves"] = leaves
        if len(tree.cliques) > 1:
            xi, rest, delta = naive_patching_split(ng)
            whole = clique_counts(ng)
            parts = _padd(clique_counts(ng.induced(xi)), clique_counts(ng.induced(rest)))
            parts = _padd(parts, [-x for x in clique_counts(ng.induced(delta))] if delta else [-1])
            if _trim(parts) != _trim(whole):
                details["inclusion_exclusion"] = {"whole": whole, "parts": parts}
    return details or None


def _padd(a, b):
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]


def _trim(a):
    a = list(a)
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


def _chordal_chunk(n: int, lo: int, hi: int):
    checked, failures = 0, []
    for i in range(lo, hi):
        ng = decode_naive(n, i)
        checked += 1
        bad = check_chordal_instance(ng)
        if bad:
            failures.append(_failure(ng, **bad))
    return checked, failures, []


def verify_chordal_cliquetree(n: int, workers: int = 1) -> VerificationOutcome:
    if n > NAIVE_CAP:
        raise CapExceeded(f"n = {n} exceeds the naive enumeration cap {NAIVE_CAP}")
    return _sweep("chordal", n, _chordal_chunk, naive_space_size, workers)


# Hilbert series: recursions vs clique counts, over specially oriented graphs


def check_hilbert_instance(g: OrientedGraph) -> dict | None:
    sr = stanley_reisner_dims(naive_projection(g))
    details = {}
    try:
        tree = decompose_elementary(g)
    except NotElementaryType:
        tree = None
    if tree is not None:
        rec = et_hilbert_recursive(tree)
        if rec != sr:
            details["et_recursive"] = {"expected": sr, "actual": rec}
    if is_chordal(naive_projection(g))[0]:
        mv = chordal_hilbert_mv(g)
        if mv != sr:
            details["mayer_vietoris"] = {"expected": sr, "actual": mv}
    return details or None


def _hilbert_chunk(n: int, lo: int, hi: int):
    checked, failures = 0, []
    for bits in range(lo, hi):
        for g in _specially_oriented_for_kinds(n, bits):
            checked += 1
            bad = check_hilbert_instance(g)
            if bad:
                failures.append(_failure(g, **bad))
    return checked, failures, []


def verify_hilbert_consistency(n: int, workers: int = 1) -> VerificationOutcome:
    if n > SPECIAL_CAP:
        raise CapExceeded(f"n = {n} exceeds the specially oriented cap {SPECIAL_CAP}")
    return _sweep("hilbert", n, _hilbert_chunk, lambda k: 2**k, workers, per_worker=1)


# abelianization: closed formula vs Smith-form oracle


def abelian_test_orientations():
    from .group import LinearOrientation

    return [
        LinearOrientation(3, 4),
        LinearOrientation(3, 10),
        LinearOrientation(2, 5),
        LinearOrientation(2, 9),
    ]


def _abelian_chunk(n: int, lo: int, hi: int):
    from .group import abelianization_formula, abelianization_oracle

    lams = abelian_test_orientations()
    checked, failures = 0, []
    for i in range(lo, hi):
        g = decode(n, i)
        if g is None:
            continue
        for lam in lams:
            checked += 1
            a, b = abelianization_formula(g, lam), abelianization_oracle(g, lam)
            if a != b:
                failures.append(_failure(g, ell=lam.ell, c=str(lam.c), formula=a.to_dict(), oracle=b.to_dict()))
    return checked, failures, []


def verify_abelian(n: int, workers: int = 1) -> VerificationOutcome:
    EnumerationSpec(n)
    return _sweep("abelian", n, _abelian_chunk, oriented_space_size, workers)


# quadratic-dual positivity over chordal naive graphs (evidence, never a failure)


def _dual_chunk(n: int, lo: int, hi: int, degree: int = 10):
    checked, findings = 0, []
    for i in range(lo, hi):
        ng = decode_naive(n, i)
        if not is_chordal(ng)[0]:
            continue
        checked += 1
        series = quadratic_dual_series(stanley_reisner_dims(ng), degree)
        if any(c < 0 for c in series):
            findings.append(_failure(ng, dual_series=series))
    return checked, [], findings


def dual_positivity_evidence(n: int, workers: int = 1) -> VerificationOutcome:
    if n > NAIVE_CAP:
        raise CapExceeded(f"n = {n} exceeds the naive enumeration cap {NAIVE_CAP}")
    return _sweep("dual", n, _dual_chunk, naive_space_size, workers)


SUITES = {
    "et": verify_et_equivalence,
    "chordal": verify_chordal_cliquetree,
    "hilbert": verify_hilbert_consistency,
    "abelian": verify_abelian,
    "dual": dual_positivity_evidence,
}


def representatives_are_distinct(reps: list[OrientedGraph]) -> bool:
    return not any(is_isomorphic(a, b) for a, b in itertools.combinations(reps, 2))


def all_specially_oriented(n: int) -> Iterator[OrientedGraph]:
    return enumerate_oriented(EnumerationSpec(n, filters=frozenset({"specially_oriented"})))


def specially_oriented_check(g: OrientedGraph) -> bool:
    return is_specially_oriented(g)[0]


def rebuild_matches(g: OrientedGraph) -> bool:
    return rebuild(decompose_elementary(g)).same_as(g)
