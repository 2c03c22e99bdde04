"""Group-level data attached to an oriented graph and a linear orientation.

The group has one generator per vertex.  Adjacent ordinary pairs commute;
for a special edge ``(v, w)`` the terminus conjugates the origin to the
power ``c = lambda(1)``, i.e. ``w v w^-1 = v^c``.  Everything is computed
with residues modulo ``ell**precision``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from . import citations as cite
from .chordal import is_chordal
from .classify import ForbiddenWitness, forbidden_witness, is_specially_oriented
from .cohomology import stanley_reisner_dims
from .errors import InvalidOrientation, NotSpeciallyOriented
from .graph import SPECIAL, OrientedGraph, check, naive_projection, validate


# -- l-adic helpers ---------------------------------------------------------------


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def valuation(n: int, p: int) -> int:
    if n == 0:
        raise ValueError("valuation of zero is infinite")
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


@dataclass(frozen=True)
class LinearOrientation:
    """``lambda(1) = c`` in ``1 + ell Z_ell``, kept modulo ``ell**precision``.

    ``f`` is the valuation of ``c - 1``.  ``precision`` defaults to
    ``max(f + 6, 8)``.
    """

    ell: int
    c: int
    precision: int | None = None

    def __post_init__(self):
        if not is_prime(self.ell):
            raise InvalidOrientation(f"{self.ell} is not prime")
        if self.c == 1:
            raise InvalidOrientation("lambda(1) = 1 is the trivial orientation")
        if (self.c - 1) % self.ell:
            raise InvalidOrientation(f"lambda(1) = {self.c} is not 1 mod {self.ell}")
        if self.ell == 2 and (self.c - 1) % 4:
            raise InvalidOrientation("for ell = 2, lambda(1) must be 1 mod 4")
        f = valuation(self.c - 1, self.ell)
        precision = self.precision if self.precision is not None else max(f + 6, 8)
        if precision < 2:
            raise InvalidOrientation("precision must be at least 2")
        if f >= precision:
            raise InvalidOrientation(
                f"lambda(1) = {self.c} is 1 modulo {self.ell}^{precision}; raise the precision"
            )
        object.__setattr__(self, "precision", precision)
        object.__setattr__(self, "c", self.c % self.ell**precision)

    @classmethod
    def from_exponent(cls, ell: int, f: int, precision: int | None = None) -> "LinearOrientation":
        return cls(ell, 1 + ell**f, precision)

    @classmethod
    def parse(cls, ell: int, text: str, precision: int | None = None) -> "LinearOrientation":
        """Accept a decimal integer or the shorthand ``1+l^f`` (also ``1+l``)."""
        text = text.replace(" ", "")
        m = re.fullmatch(r"1\+(?:l|L|%d)(?:\^(\d+))?" % ell, text)
        if m:
            return cls.from_exponent(ell, int(m.group(1) or 1), precision)
        try:
            return cls(ell, int(text), precision)
        except ValueError as exc:
            raise InvalidOrientation(f"cannot parse lambda value {text!r}") from exc

    @property
    def modulus(self) -> int:
        return self.ell**self.precision

    @property
    def f(self) -> int:
        return valuation(self.c - 1, self.ell)

    def to_dict(self) -> dict:
        return {"ell": self.ell, "c": str(self.c), "precision": self.precision, "f": self.f}


# -- presentations -------------------------------------------------------------------


@dataclass(frozen=True)
class Commute:
    v: str
    w: str

    def text(self) -> str:
        return f"[{self.v},{self.w}]"

    def to_dict(self) -> dict:
        return {"commute": [self.v, self.w]}


@dataclass(frozen=True)
class Conjugate:
    """``w * v * w^-1 * v^-c = 1``; ``w`` is the terminus, ``v`` the origin."""

    w: str
    v: str
    c: int

    def text(self) -> str:
        return f"{self.w}*{self.v}*{self.w}^-1*{self.v}^-{self.c}"

    def to_dict(self) -> dict:
        return {"conjugate": {"by": self.w, "base": self.v, "exponent": str(self.c)}}


@dataclass(frozen=True)
class Presentation:
    generators: tuple[tuple[str, int], ...]
    relators: tuple[Commute | Conjugate, ...]

    def to_dict(self) -> dict:
        return {
            "generators": [{"id": v, "theta": str(t)} for v, t in self.generators],
            "relators": [r.to_dict() for r in self.relators],
        }

    def to_fpgroup(self) -> str:
        """One relator per line; ``#`` lines list generators and their theta values."""
        lines = ["# generators: " + " ".join(v for v, _ in self.generators)]
        lines += [f"# theta {v} = {t}" for v, t in self.generators]
        lines += [r.text() for r in self.relators]
        return "\n".join(lines) + "\n"


def theta(g: OrientedGraph, lam: LinearOrientation) -> dict[str, int]:
    return {v: (lam.c if k is SPECIAL else 1) for v, k in g.vertices}


def presentation(g: OrientedGraph, lam: LinearOrientation) -> Presentation:
    th = theta(g, lam)
    relators: list[Commute | Conjugate] = []
    for v, w in g.sorted_arcs():
        if (v, w) in g.special_edges:
            relators.append(Conjugate(w, v, lam.c))
        elif v < w:
            relators.append(Commute(v, w))
    return Presentation(tuple((v, th[v]) for v in g.ids), tuple(relators))


@dataclass(frozen=True)
class LabelledArc:
    origin: str
    terminus: str
    label: tuple[int, int]


def to_labelled_graph(g: OrientedGraph, lam: LinearOrientation) -> list[LabelledArc]:
    """One labelled arc per adjacent pair: ``(c - 1, 0)`` on special edges, ``(0, 0)`` otherwise."""
    out = []
    for v, w in g.sorted_arcs():
        if (v, w) in g.special_edges:
            out.append(LabelledArc(v, w, ((lam.c - 1) % lam.modulus, 0)))
        elif v < w:
            out.append(LabelledArc(v, w, (0, 0)))
    return out


# -- abelianization -------------------------------------------------------------------


@dataclass(frozen=True)
class AbelianInvariants:
    free_rank: int
    torsion: tuple[int, ...]
    precision_limited: bool = False

    def to_dict(self) -> dict:
        return {
            "free_rank": self.free_rank,
            "torsion": list(self.torsion),
            "precision_limited": self.precision_limited,
        }


def abelianization_formula(g: OrientedGraph, lam: LinearOrientation) -> AbelianInvariants:
    """Each origin of a special edge is killed by ``c - 1``; the rest stay free."""
    origins = {v for v, _ in g.special_edges}
    return AbelianInvariants(
        free_rank=len(g) - len(origins),
        torsion=tuple([lam.ell**lam.f] * len(origins)),
    )


def relation_matrix(g: OrientedGraph, lam: LinearOrientation) -> list[list[int]]:
    """Exponent sums of the relators mod ``ell**precision``, one column per vertex."""
    col = {v: i for i, v in enumerate(g.ids)}
    m = lam.modulus
    rows = []
    for r in presentation(g, lam).relators:
        row = [0] * len(g)
        if isinstance(r, Conjugate):
            row[col[r.v]] = (1 - r.c) % m
        rows.append(row)
    return rows


def smith_diagonal(matrix: list[list[int]], ell: int, precision: int) -> list[int]:
    """Valuations of the diagonal of a Smith form over ``Z / ell**precision``.

    Works on a copy; each step moves an entry of least valuation to the
    pivot and clears its row and column with unit multiples.
    """
    m = ell**precision
    a = [[x % m for x in row] for row in matrix]
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    diag = []
    for t in range(min(nrows, ncols)):
        best = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                if a[i][j]:
                    k = valuation(a[i][j], ell)
                    if best is None or k < best[0]:
                        best = (k, i, j)
        if best is None:
            break
        k, i, j = best
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        unit_inv = pow(a[t][t] // ell**k, -1, m)
        for i in range(t + 1, nrows):
            if a[i][t]:
                factor = (a[i][t] // ell**k) * unit_inv % m
                a[i] = [(x - factor * y) % m for x, y in zip(a[i], a[t])]
        for j in range(t + 1, ncols):
            if a[t][j]:
                factor = (a[t][j] // ell**k) * unit_inv % m
                for row in a:
                    row[j] = (row[j] - factor * row[t]) % m
        diag.append(k)
    return diag


def abelianization_oracle(g: OrientedGraph, lam: LinearOrientation) -> AbelianInvariants:
    diag = smith_diagonal(relation_matrix(g, lam), lam.ell, lam.precision)
    torsion = sorted(lam.ell**k for k in diag if 0 < k < lam.precision)
    return AbelianInvariants(
        free_rank=len(g) - len(diag),
        torsion=tuple(torsion),
        precision_limited=any(k >= lam.precision for k in diag),
    )


# -- locally uniform quotient -------------------------------------------------------


@dataclass(frozen=True)
class LocallyUniformQuotientData:
    abelian_rank: int
    acts: bool
    action_unit: int
    f: int

    def to_dict(self) -> dict:
        return {
            "abelian_rank": self.abelian_rank,
            "acts": self.acts,
            "action_unit": str(self.action_unit),
            "f": self.f,
        }


def locally_uniform_quotient(g: OrientedGraph, lam: LinearOrientation) -> LocallyUniformQuotientData:
    if not is_specially_oriented(g)[0]:
        raise NotSpeciallyOriented("the quotient is locally uniform only for specially oriented graphs")
    acts = bool(g.special_vertices)
    return LocallyUniformQuotientData(len(g) - 1 if acts else len(g), acts, lam.c, lam.f)


# -- classification report -------------------------------------------------------------

YES, NO, UNKNOWN = "yes", "no", "unknown"

PROPERTIES = (
    "valid",
    "specially_oriented",
    "chordal",
    "elementary_type",
    "kummerian",
    "locally_uniform",
    "bloch_kato",
    "one_cyclotomic",
    "galois_realizable",
    "subgroups_are_orRAAGs",
    "bogomolov_positselski",
    "coherent_fp_infinity",
    "cohomology_quadratic",
)


@dataclass(frozen=True)
class Verdict:
    value: str
    citation: str
    witness: dict | None = None

    def to_dict(self) -> dict:
        out = {"verdict": self.value, "citation": self.citation}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


def _yn(flag: bool) -> str:
    return YES if flag else NO


@dataclass(frozen=True)
class ClassificationReport:
    verdicts: dict[str, Verdict] = field(default_factory=dict)
    violations: tuple = ()

    def __getitem__(self, name: str) -> str:
        return self.verdicts[name].value

    def to_dict(self) -> dict:
        out = {"verdicts": {k: self.verdicts[k].to_dict() for k in PROPERTIES}}
        if self.violations:
            out["violations"] = [v.to_dict() for v in self.violations]
        return out


def _wdict(w: ForbiddenWitness | None) -> dict | None:
    return None if w is None else w.to_dict()


def classification_report(graph, lam: LinearOrientation) -> ClassificationReport:
    """Three-valued verdicts for every group property tied to the graph.

    ``graph`` is an :class:`OrientedGraph` or raw graph data; invalid data
    yields ``valid = no`` and ``unknown`` everywhere else.
    """
    if not isinstance(graph, OrientedGraph):
        violations = check(graph)
        if violations:
            verdicts = {p: Verdict(UNKNOWN, cite.INVALID_INPUT) for p in PROPERTIES}
            verdicts["valid"] = Verdict(NO, cite.ORIGIN_CONDITION, {"violations": [v.to_dict() for v in violations]})
            return ClassificationReport(verdicts, tuple(violations))
        graph = validate(graph)
    g = graph

    ng = naive_projection(g)
    so, so_witness = is_specially_oriented(g)
    chordal, cycle = is_chordal(ng)
    et_witness = forbidden_witness(g)
    et = et_witness is None
    complete = ng.is_complete()
    triangle_free = len(stanley_reisner_dims(ng)) <= 3

    v: dict[str, Verdict] = {}
    v["valid"] = Verdict(YES, cite.ORIGIN_CONDITION)
    v["specially_oriented"] = Verdict(_yn(so), cite.SPECIALLY_ORIENTED, _wdict(so_witness))
    v["chordal"] = Verdict(_yn(chordal), cite.CHORDAL, None if chordal else {"chordless_cycle": cycle})
    v["elementary_type"] = Verdict(_yn(et), cite.ELEMENTARY_TYPE, _wdict(et_witness))
    v["kummerian"] = Verdict(_yn(so), cite.KUMMERIAN, _wdict(so_witness))
    lu_witness = _wdict(so_witness) if not so else (None if complete else {"non_adjacent": _non_edge(ng)})
    v["locally_uniform"] = Verdict(_yn(so and complete), cite.LOCALLY_UNIFORM, lu_witness)
    for name, c in (
        ("bloch_kato", cite.BLOCH_KATO),
        ("one_cyclotomic", cite.ONE_CYCLOTOMIC),
        ("galois_realizable", cite.GALOIS_REALIZABLE),
        ("subgroups_are_orRAAGs", cite.SUBGROUPS_ORRAAG),
    ):
        v[name] = Verdict(_yn(et), c, _wdict(et_witness))

    if so and chordal:
        v["bogomolov_positselski"] = Verdict(YES, cite.BP_YES)
        v["coherent_fp_infinity"] = Verdict(YES, cite.COHERENT_YES)
    else:
        if so:
            v["bogomolov_positselski"] = Verdict(UNKNOWN, cite.BP_OPEN)
        else:
            v["bogomolov_positselski"] = Verdict(NO, cite.BP_NO, _wdict(so_witness))
        v["coherent_fp_infinity"] = Verdict(UNKNOWN, cite.COHERENT_OPEN)

    if so and chordal:
        v["cohomology_quadratic"] = Verdict(YES, cite.QUADRATIC_CHORDAL)
    elif triangle_free:
        v["cohomology_quadratic"] = Verdict(YES, cite.QUADRATIC_TRIANGLE_FREE)
    else:
        v["cohomology_quadratic"] = Verdict(UNKNOWN, cite.QUADRATIC_OPEN)
    return ClassificationReport(v)


def _non_edge(ng) -> list[str]:
    for i, a in enumerate(ng.vertices):
        for b in ng.vertices[i + 1:]:
            if not ng.adjacent(a, b):
                return [a, b]
    return []

