from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from edgereg.errors import ResourceCapError
from edgereg.homology import (
    SimplicialComplexSlice,
    covered_homology,
    enumerate_union_faces,
    homology_from_faces,
    maximal_masks,
)

from oracles import reduced_homology_of_face_sets


def complex_from_facets(facets: list[set[int]]) -> SimplicialComplexSlice:
    verts = sorted(set().union(*facets)) if facets else []
    local = {v: i for i, v in enumerate(verts)}
    masks = {sum(1 << local[v] for v in f) for f in facets}
    return SimplicialComplexSlice(labels=tuple(verts), faces=masks | {0})


class TestToyComplexes:
    def test_hollow_triangle_is_a_circle(self):
        c = complex_from_facets([{0, 1}, {1, 2}, {0, 2}])
        assert c.homology_ranks("Q") == {-1: 0, 0: 0, 1: 1}

    def test_full_simplex_contractible(self):
        c = complex_from_facets([{0, 1, 2}])
        assert all(r == 0 for r in c.homology_ranks("Q").values())

    def test_two_isolated_vertices(self):
        c = complex_from_facets([{0}, {1}])
        assert c.homology_ranks("Q") == {-1: 0, 0: 1}

    def test_empty_face_only(self):
        c = SimplicialComplexSlice(labels=(), faces={0})
        assert c.homology_ranks("Q") == {-1: 1}

    def test_void_complex(self):
        c = SimplicialComplexSlice(labels=(), faces=set())
        assert c.homology_ranks("Q") == {}
        assert c.is_void

    def test_hollow_tetrahedron_is_a_sphere(self):
        facets = [{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}]
        c = complex_from_facets(facets)
        assert c.homology_ranks("Q") == {-1: 0, 0: 0, 1: 0, 2: 1}

    def test_closure_under_subsets(self):
        c = complex_from_facets([{0, 1, 2}])
        assert len(c.faces) == 8  # all subsets of a triangle


# Minimal 6-vertex triangulation of the real projective plane: homology
# has 2-torsion, so ranks differ between Q and GF(2).
RP2_FACETS = [
    {0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 1, 5}, {0, 4, 5},
    {1, 2, 4}, {1, 3, 4}, {1, 3, 5}, {2, 3, 5}, {2, 4, 5},
]


class TestFieldDependence:
    def test_projective_plane_over_q(self):
        c = complex_from_facets(RP2_FACETS)
        assert c.homology_ranks("Q") == {-1: 0, 0: 0, 1: 0, 2: 0}

    def test_projective_plane_over_gf2(self):
        c = complex_from_facets(RP2_FACETS)
        assert c.homology_ranks("GF2") == {-1: 0, 0: 0, 1: 1, 2: 1}


class TestMaximalMasks:
    def test_absorbs_subsets(self):
        assert maximal_masks([0b011, 0b111, 0b001]) == [0b111]

    def test_keeps_incomparable(self):
        assert sorted(maximal_masks([0b011, 0b110])) == [0b011, 0b110]


class TestEnumerateUnionFaces:
    def test_single_simplex(self):
        assert enumerate_union_faces([0b111]) == set(range(8))

    def test_union_counts(self):
        faces = enumerate_union_faces([0b011, 0b110])
        assert faces == {0b000, 0b001, 0b010, 0b011, 0b100, 0b110}

    def test_face_cap(self):
        with pytest.raises(ResourceCapError):
            enumerate_union_faces([(1 << 30) - 1], cap=1000)


@st.composite
def cover_families(draw):
    nverts = draw(st.integers(1, 7))
    count = draw(st.integers(1, 5))
    covers = [
        draw(st.integers(0, (1 << nverts) - 1)) for _ in range(count)
    ]
    return nverts, covers


@given(cover_families(), st.sampled_from(["Q", "GF2"]))
@settings(max_examples=300, deadline=None)
def test_covered_homology_matches_direct_enumeration(family, field):
    nverts, covers = family
    via_pipeline = covered_homology(covers, nverts, field)
    faces = enumerate_union_faces(maximal_masks(covers))
    face_sets = {
        frozenset(i for i in range(nverts) if (f >> i) & 1) for f in faces
    }
    direct = reduced_homology_of_face_sets(face_sets, field)
    assert via_pipeline == direct


def test_empty_cover_family_is_the_empty_face_complex():
    assert covered_homology([], 0, "Q") == {-1: 1}
    assert enumerate_union_faces([]) == {0}


@given(cover_families())
@settings(max_examples=100, deadline=None)
def test_homology_from_faces_matches_oracle_over_q(family):
    nverts, covers = family
    faces = enumerate_union_faces(maximal_masks(covers))
    face_sets = {
        frozenset(i for i in range(nverts) if (f >> i) & 1) for f in faces
    }
    assert homology_from_faces(faces, "Q") == reduced_homology_of_face_sets(face_sets, "Q")


def test_cone_is_detected_without_enumeration():
    # every cover mask shares vertex 0: contractible regardless of size
    covers = [(1 << 40) - 1 & ~(1 << k) | 1 for k in range(1, 12)]
    assert covered_homology(covers, 40, "Q") == {}
