import random

import pytest
from conftest import connected_labels, diagram

from flagbundles import Tag, parse_diagram
from flagbundles.render import parse_rendered, render_diagram


class TestRenderExact:
    def test_single_node(self):
        assert render_diagram(diagram("A1"), Tag((7,))) == "7\no\n1"

    def test_triple_bond_points_at_short_node(self):
        assert render_diagram(diagram("G2"), Tag((1, 0))) == "1   0\no<≡≡o\n1   2"

    def test_double_bond_orientations(self):
        assert render_diagram(diagram("B3"), Tag((0, 1, 0))) == "0   1   0\no---o==>o\n1   2   3"
        assert render_diagram(diagram("C3"), Tag((1, 0, 2))) == "1   0   2\no---o<==o\n1   2   3"

    def test_f4_mixed_bonds(self):
        assert render_diagram(diagram("F4"), Tag((0, 0, 0, 0))) == "0   0   0   0\no---o==>o---o\n1   2   3   4"

    def test_fork_hangs_over_the_chain(self):
        expected = "        1\n        o 5\n        |\n0   0   0   0\no---o---o---o\n1   2   3   4"
        assert render_diagram(diagram("D5"), Tag((0, 0, 0, 0, 1))) == expected

    def test_branch_node_keeps_its_number(self):
        expected = (
            "        2\n        o 2\n        |\n"
            "1   0   0   0   1\no---o---o---o---o\n1   3   4   5   6"
        )
        assert render_diagram(diagram("E6"), Tag((1, 2, 0, 0, 0, 1))) == expected

    def test_components_become_blocks(self):
        expected = "1   1\no---o\n1   2\n\n0   2\no==>o\n3   4"
        assert render_diagram(parse_diagram("A2+B2"), Tag((1, 1, 0, 2))) == expected

    def test_lines_carry_no_trailing_spaces(self):
        for label in ("D4", "E7", "A2+B2"):
            d = diagram(label) if "+" not in label else parse_diagram(label)
            text = render_diagram(d, Tag((0,) * d.rank))
            assert all(line == line.rstrip() for line in text.splitlines())

    def test_wide_tags_stretch_cells(self):
        text = render_diagram(diagram("A2"), Tag((12, 0)))
        lines = text.splitlines()
        assert lines[0] == "12   0"
        assert lines[1] == "o----o"
        assert lines[2] == "1    2"


class TestRoundTrip:
    def test_all_connected_shapes(self):
        rng = random.Random(2024)
        for label in connected_labels(8):
            d = diagram(label)
            for _ in range(3):
                tag = Tag(tuple(rng.randint(0, 11) for _ in range(d.rank)))
                d2, t2 = parse_rendered(render_diagram(d, tag))
                assert d2.label == d.label
                assert t2.values == tag.values

    def test_disjoint_unions(self):
        for label in ("A1+A1", "A2+B2", "A1+E8+C3"):
            d = parse_diagram(label)
            tag = Tag(tuple(range(d.rank)))
            d2, t2 = parse_rendered(render_diagram(d, tag))
            assert d2.label == d.label
            assert t2.values == tag.values


class TestParseErrors:
    def test_unknown_bond(self):
        with pytest.raises(ValueError):
            parse_rendered("0   0\no~~~o\n1   2")

    def test_misaligned_branch_bar(self):
        bad = "        1\n        o 5\n       |\n0   0   0   0\no---o---o---o\n1   2   3   4"
        with pytest.raises(ValueError):
            parse_rendered(bad)

    def test_branch_over_a_gap(self):
        bad = "  1\n  o 5\n  |\n0   0   0   0\no---o---o---o\n1   2   3   4"
        with pytest.raises(ValueError):
            parse_rendered(bad)

    def test_duplicate_node_ids(self):
        with pytest.raises(ValueError):
            parse_rendered("0   0\no---o\n1   1")

    def test_ids_must_cover_the_range(self):
        with pytest.raises(ValueError):
            parse_rendered("0   0\no---o\n1   3")

    def test_negative_tag_rejected(self):
        with pytest.raises(ValueError):
            parse_rendered("-1   0\n o---o\n 1   2")

    def test_wrong_block_height(self):
        with pytest.raises(ValueError):
            parse_rendered("0   0\no---o\n1   2\nextra")

    def test_two_branch_nodes_in_one_block(self):
        bad = "        1   1\n        o 5 o 6\n        |\n0   0   0   0\no---o---o---o\n1   2   3   4"
        with pytest.raises(ValueError):
            parse_rendered(bad)

    def test_empty_text(self):
        with pytest.raises(ValueError):
            parse_rendered("")
