"""Graph construction, invariants, and exports."""
import json
import math

import pytest

import helpers
from conftest import make_instance
from modgraphs import (
    DescriptorError,
    GraphKind,
    build_graph,
    export_graph,
    graph_metrics,
)

INF = math.inf

FROZEN_SSI_Z12_DOT = """graph ssi {
  // module Z12 over Z12
  v0 [label="2M={0,2,4,6,8,10}"];
  v1 [label="3M={0,3,6,9}"];
  v2 [label="4M={0,4,8}"];
  v3 [label="6M={0,6}"];
  v0 -- v1;
  v0 -- v2;
  v0 -- v3;
  v1 -- v3;
}
"""


# ---------------------------------------------------------------- frozen

class TestFrozenZ12:
    def test_ssi_structure(self, z12):
        g = z12.graph(GraphKind.SSI)
        assert [v.label for v in g.vertices] == ["2M", "3M", "4M", "6M"]
        assert g.edges() == [(0, 1), (0, 2), (0, 3), (1, 3)]

    def test_ssi_metrics(self, z12):
        m = z12.metrics(GraphKind.SSI)
        assert m.is_connected and not m.is_complete
        assert m.diameter == 2 and m.girth == 3
        assert m.domination_number == 1
        assert m.universal_vertices == (0,)
        assert m.isolated_vertices == ()
        assert not m.is_star

    def test_pss_structure(self, z12):
        g = z12.graph(GraphKind.PSS)
        assert [v.label for v in g.vertices] == ["2M", "3M", "4M", "6M"]
        assert g.edges() == [(0, 2), (0, 3), (1, 3), (2, 3)]

    def test_pss_metrics(self, z12):
        m = z12.metrics(GraphKind.PSS)
        assert m.is_connected and m.diameter == 2 and m.girth == 3
        # 6M sits at index 3 and meets everything
        assert m.universal_vertices == (3,)
        assert m.domination_number == 1 and m.dominating_set == (3,)

    def test_tilde_matches_ideal_graph(self, z12):
        # over a cyclic module every proper nonzero colon ideal shows up,
        # so the deduped graph coincides with the ideal-sum graph
        tilde = z12.graph(GraphKind.PSS_TILDE)
        pis = z12.graph(GraphKind.PIS)
        assert [v.label for v in tilde.vertices] == [v.label for v in pis.vertices]
        assert tilde.edges() == pis.edges()
        ssi_tilde = z12.graph(GraphKind.SSI_TILDE)
        sii = z12.graph(GraphKind.SII)
        assert [v.label for v in ssi_tilde.vertices] == [v.label for v in sii.vertices]
        assert ssi_tilde.edges() == sii.edges()


def test_z6_ssi_is_two_isolated_vertices(z6):
    m = z6.metrics(GraphKind.SSI)
    assert m.vertex_count == 2 and m.edge_count == 0
    assert not m.is_connected and m.is_empty_graph
    assert m.diameter == INF and m.girth == INF
    assert m.isolated_vertices == (0, 1)
    assert m.domination_number == 2


def test_z16_ssi_is_a_star(z16):
    g = z16.graph(GraphKind.SSI)
    m = z16.metrics(GraphKind.SSI)
    assert m.is_star
    assert g.vertices[m.star_center].label == "8M"
    assert m.girth == INF


def test_z8_annihilator_graph():
    inst = make_instance("Z8")
    g = inst.graph(GraphKind.SSI_TILDE)
    assert [v.label for v in g.vertices] == ["2R", "4R"]
    assert g.edges() == [(0, 1)]


def test_vertex_lookup(z12):
    g = z12.graph(GraphKind.SSI)
    for v in g.vertices:
        assert g.vertex_for(v.submodule) is v
        assert g.has_vertex(v.submodule)
    assert not g.has_vertex(z12.lattice.zero)
    with pytest.raises(ValueError):
        g.vertex_for(z12.lattice.zero)


def test_neighbors_and_degrees(z12):
    g = z12.graph(GraphKind.SSI)
    assert g.neighbors(0) == {1, 2, 3}
    assert g.degree(1) == 2
    assert g.adjacent(0, 3) and not g.adjacent(2, 3)
    assert not g.adjacent(1, 1)


# ----------------------------------------------------- adjacency oracles

ADJ_SAMPLE = [("Z12", None), ("Z16", None), ("Z30", None),
              ("Z2xZ4", "Z4"), ("Z3xZ9", None)]


@pytest.mark.parametrize("module_text,ring_text", ADJ_SAMPLE)
def test_ssi_edges_are_second_intersections(module_text, ring_text):
    inst = make_instance(module_text, ring_text)
    g = inst.graph(GraphKind.SSI)
    lat = inst.lattice
    n = g.vertex_count
    for i in range(n):
        for j in range(i + 1, n):
            meet = lat.meet(g.vertices[i].submodule, g.vertices[j].submodule)
            assert g.adjacent(i, j) == helpers.brute_second(meet)


@pytest.mark.parametrize("module_text,ring_text", ADJ_SAMPLE)
def test_pss_edges_are_prime_sums(module_text, ring_text):
    inst = make_instance(module_text, ring_text)
    g = inst.graph(GraphKind.PSS)
    lat = inst.lattice
    n = g.vertex_count
    for i in range(n):
        for j in range(i + 1, n):
            join = lat.join(g.vertices[i].submodule, g.vertices[j].submodule)
            assert g.adjacent(i, j) == helpers.brute_prime(join)


def test_ideal_graphs_need_the_ring_itself():
    inst = make_instance("Z2xZ4", "Z4")
    with pytest.raises(DescriptorError):
        build_graph(GraphKind.PIS, inst.module, inst.lattice)
    with pytest.raises(DescriptorError):
        build_graph(GraphKind.SII, inst.module, inst.lattice)
    # but Instance.graph reroutes to the underlying ring
    g = inst.graph(GraphKind.PIS)
    assert [v.label for v in g.vertices] == ["2R"]


def test_sii_equals_ssi_on_the_ring_as_module():
    inst = make_instance("Z12")
    assert inst.graph(GraphKind.SII).edges() == inst.graph(GraphKind.SSI).edges()
    assert inst.graph(GraphKind.PIS).edges() == inst.graph(GraphKind.PSS).edges()


# --------------------------------------------------- metric conventions

def test_empty_graph_conventions():
    # Z4 over Z4: proper nonzero = {2M} -> single vertex; Zp -> no vertices
    single = make_instance("Z4").metrics(GraphKind.SSI)
    assert single.vertex_count == 1
    assert single.is_connected and single.is_complete
    assert single.diameter == 0 and single.girth == INF
    assert single.domination_number == 1
    assert single.universal_vertices == (0,) and single.isolated_vertices == (0,)
    assert not single.is_star

    empty = make_instance("Z5").metrics(GraphKind.SSI)
    assert empty.vertex_count == 0
    assert empty.is_connected and empty.is_complete and empty.is_empty_graph
    assert empty.diameter == 0 and empty.girth == INF
    assert empty.domination_number == 0 and empty.dominating_set == ()
    assert not empty.is_star and empty.star_center is None


def test_as_dict_maps_infinities_to_null(z6):
    d = z6.metrics(GraphKind.SSI).as_dict()
    assert d["diameter"] is None and d["girth"] is None
    d12 = make_instance("Z12").metrics(GraphKind.SSI).as_dict()
    assert d12["diameter"] == 2 and d12["girth"] == 3


# ------------------------------------------------------- metric oracles

METRIC_SAMPLE = [f"Z{n}" for n in (12, 16, 24, 30, 36, 48, 60)] + ["Z2xZ4", "Z2xZ8", "Z4xZ4", "Z2xZ2xZ2"]


@pytest.mark.parametrize("text", METRIC_SAMPLE)
@pytest.mark.parametrize("kind", [GraphKind.SSI, GraphKind.PSS])
def test_metrics_against_exhaustive_oracles(text, kind):
    inst = make_instance(text)
    g = inst.graph(kind)
    m = inst.metrics(kind)
    n = g.vertex_count
    if n <= 10:
        assert m.diameter == helpers.exhaustive_diameter(g)
        assert m.girth == helpers.exhaustive_girth(g)
    if n <= 15:
        assert m.domination_number == helpers.exhaustive_domination(g)
    # reported dominating set actually dominates
    covered = set(m.dominating_set)
    for i in m.dominating_set:
        covered |= g.neighbors(i)
    assert covered == set(range(n))
    assert len(m.dominating_set) == m.domination_number


def test_girth_on_dense_graph():
    # complete-ish prime-sum graph over Z2xZ4: triangle must be found
    inst = make_instance("Z2xZ4", "Z4")
    m = inst.metrics(GraphKind.PSS)
    g = inst.graph(GraphKind.PSS)
    assert m.girth == helpers.exhaustive_girth(g)


# -------------------------------------------------------------- exports

def test_dot_export_is_byte_stable(z12):
    g = z12.graph(GraphKind.SSI)
    assert export_graph(g, "dot") == FROZEN_SSI_Z12_DOT
    assert export_graph(g, "dot") == export_graph(g, "dot")


def test_json_export_schema(z12):
    g = z12.graph(GraphKind.PSS)
    payload = json.loads(export_graph(g, "json"))
    assert payload["kind"] == "pss"
    assert payload["ring"] == "Z12" and payload["module"] == "Z12"
    assert [v["id"] for v in payload["vertices"]] == [0, 1, 2, 3]
    assert payload["vertices"][0]["label"] == "2M"
    assert payload["vertices"][0]["order"] == 6
    assert all(isinstance(v["generators"], list) for v in payload["vertices"])
    assert payload["edges"] == [[0, 2], [0, 3], [1, 3], [2, 3]]
    assert export_graph(g, "json").endswith("\n")


def test_unknown_export_format(z12):
    with pytest.raises(DescriptorError):
        export_graph(z12.graph(GraphKind.SSI), "gexf")


def test_tilde_labels_use_ring_symbol(z12):
    g = z12.graph(GraphKind.PSS_TILDE)
    assert all(v.label.endswith("R") for v in g.vertices)
    dot = export_graph(g, "dot")
    assert 'label="2R=' in dot
