import pytest

from oraag import catalog
from oraag.classify import is_specially_oriented
from oraag.enumeration import (
    SUITES,
    EnumerationSpec,
    canonical_form,
    canonical_key,
    count_oriented,
    decode,
    enumerate_naive,
    enumerate_oriented,
    oriented_space_size,
    representatives_are_distinct,
    verify_chordal_cliquetree,
    verify_et_equivalence,
)
from oraag.errors import CapExceeded
from oraag.graph import is_isomorphic, naive_projection, relabel


def test_single_vertex():
    assert count_oriented(EnumerationSpec(1)) == 2


def test_two_vertices_labeled():
    # both ordinary: 4 arc sets; one special: 2 each way; both special: 1
    assert count_oriented(EnumerationSpec(2)) == 4 + 2 + 2 + 1


def test_two_vertices_up_to_iso():
    reps = list(enumerate_oriented(EnumerationSpec(2, up_to_iso=True)))
    assert len(reps) == 6
    assert sum(1 for g in reps if not g.arcs) == 3
    assert representatives_are_distinct(reps)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_fast_specially_oriented_path_matches_filter(n):
    fast = {(g.vertices, g.arcs) for g in enumerate_oriented(EnumerationSpec(n, filters=frozenset({"specially_oriented"})))}
    slow = {(g.vertices, g.arcs) for g in enumerate_oriented(EnumerationSpec(n)) if is_specially_oriented(g)[0]}
    assert fast == slow


@pytest.mark.parametrize("n", [2, 3])
def test_iso_representatives_cover_everything(n):
    reps = list(enumerate_oriented(EnumerationSpec(n, up_to_iso=True)))
    assert representatives_are_distinct(reps)
    keys = {canonical_key(g) for g in reps}
    assert all(canonical_key(g) in keys for g in enumerate_oriented(EnumerationSpec(n)))


def test_decode_skips_invalid_indices():
    valid = [decode(2, i) for i in range(oriented_space_size(2))]
    assert sum(g is not None for g in valid) == 9


def test_canonical_form_is_isomorphic():
    g = catalog.mixed_arrows()
    h = relabel(g, {"v1": "v4", "v4": "v1"})
    assert canonical_key(g) == canonical_key(h)
    assert is_isomorphic(canonical_form(g), g)


def test_filters():
    connected = list(enumerate_oriented(EnumerationSpec(3, filters=frozenset({"connected"}))))
    assert all(naive_projection(g).is_connected() for g in connected)
    with pytest.raises(ValueError):
        EnumerationSpec(3, filters=frozenset({"bogus"}))


def test_caps():
    with pytest.raises(CapExceeded):
        EnumerationSpec(6)
    EnumerationSpec(6, filters=frozenset({"specially_oriented"}))
    with pytest.raises(CapExceeded):
        list(enumerate_naive(7))


def test_naive_count():
    assert sum(1 for _ in enumerate_naive(4)) == 64


def test_worker_count_does_not_change_result():
    one = verify_chordal_cliquetree(4, workers=1).to_dict()
    many = verify_chordal_cliquetree(4, workers=3).to_dict()
    assert one == many and one["failures"] == []


def test_suites_small():
    for name, fn in SUITES.items():
        out = fn(3)
        assert out.passed, (name, out.failures)
        assert out.checked > 0


def test_et_suite_counts_every_valid_graph():
    out = verify_et_equivalence(2)
    assert out.checked == 2 + 9
