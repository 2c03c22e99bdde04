import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oraag import catalog
from oraag.errors import InvalidOrientation, NotSpeciallyOriented
from oraag.graph import SPECIAL, OrientedGraph
from oraag.group import (
    NO,
    PROPERTIES,
    UNKNOWN,
    YES,
    Commute,
    Conjugate,
    LinearOrientation,
    abelianization_formula,
    abelianization_oracle,
    classification_report,
    is_prime,
    locally_uniform_quotient,
    presentation,
    relation_matrix,
    smith_diagonal,
    theta,
    to_labelled_graph,
    valuation,
)

from conftest import oriented_graphs

L34 = LinearOrientation(3, 4)


class TestOrientation:
    def test_defaults(self):
        assert L34.f == 1 and L34.precision == 8 and L34.modulus == 3**8

    def test_precision_grows_with_f(self):
        lam = LinearOrientation.from_exponent(3, 5)
        assert lam.f == 5 and lam.precision == 11

    @pytest.mark.parametrize(
        "ell, c",
        [(4, 5), (3, 1), (3, 5), (2, 3), (2, 7)],
    )
    def test_rejects(self, ell, c):
        with pytest.raises(InvalidOrientation):
            LinearOrientation(ell, c)

    def test_too_deep_for_precision(self):
        with pytest.raises(InvalidOrientation):
            LinearOrientation(3, 1 + 3**5, precision=5)

    def test_parse(self):
        assert LinearOrientation.parse(3, "1+l^2") == LinearOrientation(3, 10)
        assert LinearOrientation.parse(3, "1+l") == L34
        assert LinearOrientation.parse(2, "1 + 2^3") == LinearOrientation(2, 9)
        assert LinearOrientation.parse(3, "7") == LinearOrientation(3, 7)
        with pytest.raises(InvalidOrientation):
            LinearOrientation.parse(3, "seven")

    def test_c_reduced_mod_modulus(self):
        assert LinearOrientation(3, 4 + 3**8).c == 4

    def test_number_helpers(self):
        assert [p for p in range(20) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19]
        assert valuation(54, 3) == 3 and valuation(7, 3) == 0


class TestPresentation:
    def test_mennicke(self):
        p = presentation(catalog.mennicke(), L34)
        assert p.relators == (Conjugate("v2", "v1", 4), Conjugate("v3", "v2", 4), Conjugate("v1", "v3", 4))
        assert "v2*v1*v2^-1*v1^-4" in p.to_fpgroup().splitlines()

    def test_ordinary_pair_commutes_once(self):
        assert presentation(catalog.ordinary_edge(), L34).relators == (Commute("v", "w"),)

    def test_theta(self):
        assert theta(catalog.lambda_s(), L34) == {"v1": 1, "v2": 4, "v3": 1}

    def test_labelled_graph(self):
        arcs = to_labelled_graph(catalog.mixed_arrows(), L34)
        labels = {(a.origin, a.terminus): a.label for a in arcs}
        assert labels[("v1", "v2")] == (3, 0)
        assert labels[("v2", "v4")] == (0, 0)
        assert ("v4", "v2") not in labels


class TestAbelianization:
    def test_mennicke(self):
        a = abelianization_formula(catalog.mennicke(), L34)
        assert (a.free_rank, a.torsion) == (0, (3, 3, 3))
        assert abelianization_oracle(catalog.mennicke(), L34) == a

    def test_shared_origin_counts_once(self):
        g = OrientedGraph.build(["v", ("w", SPECIAL), ("u", SPECIAL)], arcs=[("v", "w"), ("v", "u")])
        a = abelianization_formula(g, L34)
        assert (a.free_rank, a.torsion) == (2, (3,))
        assert abelianization_oracle(g, L34) == a

    def test_deeper_orientation(self):
        a = abelianization_oracle(catalog.lambda_s(), LinearOrientation(3, 10))
        assert (a.free_rank, a.torsion) == (1, (9, 9))

    def test_no_special_edges_is_free(self):
        a = abelianization_oracle(catalog.fan5(), L34)
        assert (a.free_rank, a.torsion) == (5, ())

    @settings(max_examples=150)
    @given(oriented_graphs(max_n=6), st.sampled_from([(3, 4), (3, 10), (2, 5), (5, 26)]))
    def test_formula_matches_oracle(self, g, lc):
        lam = LinearOrientation(*lc)
        assert abelianization_formula(g, lam) == abelianization_oracle(g, lam)

    def test_relation_matrix(self):
        assert relation_matrix(catalog.easy_arrow(), L34) == [[(1 - 4) % 3**8, 0]]


def _det(m):
    if not m:
        return 1
    return sum((-1) ** j * m[0][j] * _det([row[:j] + row[j + 1:] for row in m[1:]]) for j in range(len(m)))


def _invariant_factors(m):
    """Invariant factors via gcds of k x k minors."""
    rows, cols = len(m), len(m[0])
    d = [1]
    for k in range(1, min(rows, cols) + 1):
        g = 0
        for ri in itertools.combinations(range(rows), k):
            for ci in itertools.combinations(range(cols), k):
                g = math.gcd(g, _det([[m[i][j] for j in ci] for i in ri]))
        if g == 0:
            break
        d.append(g)
    return [d[k] // d[k - 1] for k in range(1, len(d))]


@settings(max_examples=200)
@given(
    st.integers(1, 3).flatmap(
        lambda r: st.integers(1, 4).flatmap(
            lambda c: st.lists(st.lists(st.integers(-30, 30), min_size=c, max_size=c), min_size=r, max_size=r)
        )
    ),
    st.sampled_from([2, 3, 5]),
)
def test_smith_matches_determinant_divisors(m, ell):
    precision = 4
    expected = sorted(v for e in _invariant_factors(m) if (v := valuation(e, ell)) < precision)
    assert sorted(smith_diagonal(m, ell, precision)) == expected


class TestLocallyUniform:
    def test_complete_with_one_special(self):
        q = locally_uniform_quotient(catalog.complete_special(3), L34)
        assert q.abelian_rank == 2 and q.acts and q.action_unit == 4

    def test_edgeless(self):
        q = locally_uniform_quotient(OrientedGraph.build(["a", "b", "c"]), L34)
        assert q.abelian_rank == 3 and not q.acts

    def test_lambda_s(self):
        assert locally_uniform_quotient(catalog.lambda_s(), L34).abelian_rank == 2

    def test_requires_special_orientation(self):
        with pytest.raises(NotSpeciallyOriented):
            locally_uniform_quotient(catalog.mennicke(), L34)


class TestReport:
    def test_lambda_s(self):
        r = classification_report(catalog.lambda_s(), L34)
        assert r["specially_oriented"] == YES and r["kummerian"] == YES
        assert r["elementary_type"] == NO and r["bloch_kato"] == NO and r["one_cyclotomic"] == NO
        assert r.verdicts["elementary_type"].witness["kind"] == "InducedLambdaS"
        assert "6.5" in r.verdicts["one_cyclotomic"].citation

    def test_every_verdict_cited(self):
        for g in catalog.CATALOG.values():
            r = classification_report(g(), L34)
            assert set(r.verdicts) == set(PROPERTIES)
            assert all(v.citation for v in r.verdicts.values())

    def test_invalid_input(self):
        raw = {"vertices": [("s", "special"), ("o", "ordinary")], "arcs": [("s", "o")]}
        r = classification_report(raw, L34)
        assert r["valid"] == NO
        assert all(r[p] == UNKNOWN for p in PROPERTIES if p != "valid")
        assert r.to_dict()["violations"][0]["kind"] == "SpecialOrigin"

    def test_square_is_open_for_bp(self):
        r = classification_report(catalog.square(), L34)
        assert r["bogomolov_positselski"] == UNKNOWN and r["coherent_fp_infinity"] == UNKNOWN
        assert r["cohomology_quadratic"] == YES

    def test_not_specially_oriented(self):
        r = classification_report(catalog.mennicke(), L34)
        assert r["kummerian"] == NO and r["bogomolov_positselski"] == NO and r["locally_uniform"] == NO

    @settings(max_examples=200)
    @given(oriented_graphs(max_n=5))
    def test_implications(self, g):
        r = classification_report(g, L34)
        if r["elementary_type"] == YES:
            assert r["chordal"] == YES and r["specially_oriented"] == YES
        if r["chordal"] == YES and r["specially_oriented"] == YES:
            assert r["bogomolov_positselski"] == YES
            assert r["coherent_fp_infinity"] == YES
            assert r["cohomology_quadratic"] == YES
        complete = all(b in g.neighbors[a] for a in g.ids for b in g.ids if a != b)
        assert (r["locally_uniform"] == YES) == (complete and r["specially_oriented"] == YES)
        for p in ("bloch_kato", "one_cyclotomic", "galois_realizable", "subgroups_are_orRAAGs"):
            assert r[p] == r["elementary_type"]
