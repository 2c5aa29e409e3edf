import pytest
from conftest import connected_labels

from flagbundles import (
    CartanMatrix,
    DiagramError,
    Edge,
    diagram_from_cartan,
    diagram_from_graph,
    parse_diagram,
)


class TestParse:
    def test_a3_is_a_path(self):
        d = parse_diagram("A3")
        assert d.rank == 3
        assert [(e.a, e.b, e.multiplicity) for e in d.edges] == [(1, 2, 1), (2, 3, 1)]

    def test_g2_single_triple_edge(self):
        d = parse_diagram("G2")
        (edge,) = d.edges
        assert edge.multiplicity == 3
        assert edge.short_node == 1

    def test_disjoint_union_numbers_nodes_consecutively(self):
        d = parse_diagram("A1+A1")
        assert d.rank == 2
        assert d.edges == ()
        assert [comp.nodes for comp in d.components] == [(1,), (2,)]

    def test_label_round_trips(self):
        for label in [*connected_labels(8), "A2+B3", "G2+G2", "A1+E8+C3"]:
            assert parse_diagram(label).label == label

    def test_case_and_whitespace_insensitive(self):
        assert parse_diagram(" a2 + b3").label == "A2+B3"

    @pytest.mark.parametrize("bad", ["", "A", "2A", "A0", "B1", "C2", "D3", "E5", "E9", "F3", "F5", "G1", "G3", "Z4", "A2++A2", "+A2", "A2+"])
    def test_rejects_malformed_labels(self, bad):
        with pytest.raises(DiagramError):
            parse_diagram(bad)

    def test_rank_range_message_names_the_range(self):
        with pytest.raises(DiagramError, match="rank"):
            parse_diagram("D3")


class TestCartan:
    def test_a1(self):
        assert parse_diagram("A1").cartan.entries == ((2,),)

    def test_a2(self):
        assert parse_diagram("A2").cartan.entries == ((2, -1), (-1, 2))

    def test_b2_and_c3_arrow_direction(self):
        # short root's row carries the -1; the long root's row the -2
        assert parse_diagram("B2").cartan.entries == ((2, -2), (-1, 2))
        c3 = parse_diagram("C3").cartan.entries
        assert c3[1][2] == -1 and c3[2][1] == -2

    def test_g2_off_diagonal_pair(self):
        entries = parse_diagram("G2").cartan.entries
        assert {entries[0][1], entries[1][0]} == {-1, -3}
        assert entries == ((2, -1), (-3, 2))

    def test_f4_middle_edge(self):
        entries = parse_diagram("F4").cartan.entries
        assert entries[1][2] == -2 and entries[2][1] == -1

    def test_block_diagonal_across_components(self):
        entries = parse_diagram("A1+A2").cartan.entries
        assert entries[0][1] == entries[0][2] == 0
        assert entries[1][2] == -1

    def test_validate_accepts_all_families(self):
        for label in connected_labels(8):
            parse_diagram(label).cartan.validate()

    def test_symmetrizer_is_positive_and_symmetrizes(self):
        for label in connected_labels(8):
            cartan = parse_diagram(label).cartan
            d = cartan.symmetrizer()
            n = cartan.rank
            assert all(x > 0 for x in d)
            for i in range(1, n + 1):
                for j in range(1, n + 1):
                    assert d[i - 1] * cartan.entry(i, j) == d[j - 1] * cartan.entry(j, i)

    def test_validate_rejects_bad_matrices(self):
        with pytest.raises(DiagramError):
            CartanMatrix(((2, -1), (0, 2))).validate()  # zero not symmetric
        with pytest.raises(DiagramError):
            CartanMatrix(((1, -1), (-1, 2))).validate()  # diagonal must be 2
        with pytest.raises(DiagramError):
            CartanMatrix(((2, -2), (-2, 2))).validate()  # product 4 out of range

    def test_shape_recognition_round_trip(self):
        for label in [*connected_labels(8), "A2+B3", "D4+G2"]:
            d = parse_diagram(label)
            assert diagram_from_cartan(d.cartan).label == d.label


class TestSubdiagram:
    def test_e6_inner_chain_is_a3(self):
        sub = parse_diagram("E6").subdiagram({1, 3, 4})
        assert sub.diagram.label == "A3"
        assert sub.new_to_old == (1, 3, 4)
        assert sub.old_to_new == {1: 1, 3: 2, 4: 3}

    def test_non_adjacent_nodes_split(self):
        sub = parse_diagram("A3").subdiagram({1, 3})
        assert sub.diagram.label == "A1+A1"

    def test_full_subset_is_identity(self):
        d = parse_diagram("F4")
        sub = d.subdiagram(d.nodes)
        assert sub.diagram == d
        assert sub.new_to_old == (1, 2, 3, 4)

    def test_empty_subset_gives_rank_zero(self):
        sub = parse_diagram("A3").subdiagram([])
        assert sub.diagram.rank == 0
        assert sub.diagram.components == ()
        assert sub.new_to_old == ()

    def test_multiplicity_survives_restriction(self):
        sub = parse_diagram("B3").subdiagram({2, 3})
        assert sub.diagram.label == "B2"

    def test_out_of_range_subset_rejected(self):
        with pytest.raises(DiagramError):
            parse_diagram("A2").subdiagram({1, 5})

    def test_components_of_restricted_a4(self):
        sub = parse_diagram("A4").subdiagram({1, 2, 4})
        parts = sub.diagram.connected_parts()
        old = [tuple(sub.new_to_old[i - 1] for i in nodes) for nodes, _ in parts]
        labels = [part.label for _, part in parts]
        assert old == [(1, 2), (4,)]
        assert labels == ["A2", "A1"]


class TestComponents:
    def test_two_isolated_nodes(self):
        parts = parse_diagram("A1+A1").connected_parts()
        assert [(nodes, d.label) for nodes, d in parts] == [((1,), "A1"), ((2,), "A1")]

    def test_e8_is_connected(self):
        parts = parse_diagram("E8").connected_parts()
        assert len(parts) == 1
        assert parts[0][0] == (1, 2, 3, 4, 5, 6, 7, 8)

    def test_component_order_by_smallest_node(self):
        d = parse_diagram("A2+A1+B2")
        assert [c.label for c in d.components] == ["A2", "A1", "B2"]
        assert [min(c.nodes) for c in d.components] == [1, 3, 4]

    def test_components_cover_kept_subset(self):
        d = parse_diagram("E7")
        sub = d.subdiagram({1, 2, 5, 6, 7})
        covered = sorted(
            sub.new_to_old[i - 1] for nodes, _ in sub.diagram.connected_parts() for i in nodes
        )
        assert covered == [1, 2, 5, 6, 7]


class TestGraphConstruction:
    def test_edge_validation(self):
        with pytest.raises(DiagramError):
            Edge(2, 1)
        with pytest.raises(DiagramError):
            Edge(1, 2, multiplicity=4, long_node=1)
        with pytest.raises(DiagramError):
            Edge(1, 2, multiplicity=2, long_node=3)
        with pytest.raises(DiagramError):
            Edge(1, 2, multiplicity=1, long_node=1)
        with pytest.raises(DiagramError):
            Edge(1, 2, multiplicity=2)  # arrow required

    def test_duplicate_edge_rejected(self):
        with pytest.raises(DiagramError, match="duplicate"):
            diagram_from_graph(2, [Edge(1, 2), Edge(1, 2)])

    def test_cycle_rejected(self):
        with pytest.raises(DiagramError):
            diagram_from_graph(3, [Edge(1, 2), Edge(2, 3), Edge(1, 3)])

    def test_degree_four_node_rejected(self):
        edges = [Edge(1, 5), Edge(2, 5), Edge(3, 5), Edge(4, 5)]
        with pytest.raises(DiagramError):
            diagram_from_graph(5, edges)

    def test_relabeled_d4_recognized(self):
        # center 1, leaves 2..4
        d = diagram_from_graph(4, [Edge(1, 2), Edge(1, 3), Edge(1, 4)])
        assert d.label == "D4"

    def test_neighbors_and_edge_lookup(self):
        d = parse_diagram("F4")
        assert d.neighbors(2) == (1, 3)
        assert d.edge_between(2, 3).multiplicity == 2
        assert d.edge_between(1, 3) is None
