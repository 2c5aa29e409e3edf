"""Positive-root generation checked against independent classical facts:
closed-form counts, the root-string pairing identity, and hand-expanded
small systems.
"""

import pytest
from conftest import connected_labels, roots_of

from flagbundles import CartanMatrix, Root, RootGenerationError, parse_diagram, root_system
from flagbundles.roots import _generate

COUNTS = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
}
EXCEPTIONAL_COUNTS = {"E6": 36, "E7": 63, "E8": 120, "F4": 24, "G2": 6}


def _expected_count(label: str) -> int:
    if label in EXCEPTIONAL_COUNTS:
        return EXCEPTIONAL_COUNTS[label]
    return COUNTS[label[0]](int(label[1:]))


class TestGeneration:
    def test_counts_match_closed_forms(self):
        for label in connected_labels(8):
            assert len(roots_of(label)) == _expected_count(label), label

    def test_counts_add_over_components(self):
        assert len(roots_of("A2+B3")) == 3 + 9
        assert len(roots_of("G2+G2")) == 12

    def test_a1(self):
        assert [r.coeffs for r in roots_of("A1").roots] == [(1,)]

    def test_a2_exact(self):
        assert [r.coeffs for r in roots_of("A2").roots] == [(1, 0), (0, 1), (1, 1)]

    def test_b2_exact(self):
        assert [r.coeffs for r in roots_of("B2").roots] == [(1, 0), (0, 1), (1, 1), (1, 2)]

    def test_g2_exact(self):
        assert [r.coeffs for r in roots_of("G2").roots] == [
            (1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2),
        ]

    def test_order_is_height_then_node(self):
        for label in ("A4", "D5", "F4"):
            rs = roots_of(label)
            keys = [(r.height, tuple(-c for c in r.coeffs)) for r in rs.roots]
            assert keys == sorted(keys)

    def test_simple_roots_are_the_height_one_elements(self):
        for label in connected_labels(6):
            rs = roots_of(label)
            simples = [r.coeffs for r in rs.roots if r.height == 1]
            n = len(rs.roots[0].coeffs)
            assert simples == [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]

    def test_support_is_connected(self):
        for label in ("B4", "E6", "G2"):
            d = parse_diagram(label)
            for r in roots_of(label).roots:
                sub = d.subdiagram(r.support)
                assert len(sub.diagram.components) == 1, r

    def test_highest_root_is_unique_maximum(self):
        for label in connected_labels(8):
            rs = roots_of(label)
            top = max(rs.roots, key=lambda r: r.height)
            assert all(
                all(a <= b for a, b in zip(r.coeffs, top.coeffs)) for r in rs.roots
            ), label

    def test_root_string_pairing_identity(self):
        # walking the i-string through each root: p - q must equal the pairing
        for label in connected_labels(6):
            rs = roots_of(label)
            have = {r.coeffs for r in rs.roots}
            n = len(rs.roots[0].coeffs)
            for r in rs.roots:
                for i in range(1, n + 1):
                    if r.support == (i,):
                        # the string through the i-th simple root is broken at 0
                        assert rs.pairing(r, i) == 2
                        continue
                    down, p = list(r.coeffs), 0
                    while True:
                        down[i - 1] -= 1
                        if tuple(down) in have:
                            p += 1
                        else:
                            break
                    up, q = list(r.coeffs), 0
                    while True:
                        up[i - 1] += 1
                        if tuple(up) not in have:
                            break
                        q += 1
                    assert p - q == rs.pairing(r, i), (label, r, i)

    def test_affine_matrix_trips_the_guard(self):
        with pytest.raises(RootGenerationError):
            _generate(CartanMatrix(((2, -2), (-2, 2))))


class TestRootValue:
    def test_height_and_support_consistency(self):
        r = Root.from_coeffs((1, 0, 2))
        assert r.height == 3
        assert r.support == (1, 3)

    def test_mismatched_height_rejected(self):
        with pytest.raises(ValueError):
            Root(coeffs=(1, 1), height=3, support=(1, 2))

    def test_negative_coeff_rejected(self):
        with pytest.raises(ValueError):
            Root.from_coeffs((1, -1))

    def test_str_form(self):
        assert str(Root.from_coeffs((1, 0, 1))) == "(1,0,1)"


class TestQueries:
    def test_phi_plus_single_node(self):
        rs = roots_of("A2")
        assert [r.coeffs for r in rs.phi_plus({1})] == [(1, 0)]

    def test_phi_plus_full_set(self):
        rs = roots_of("A2")
        assert len(rs.phi_plus({1, 2})) == 3

    def test_phi_plus_disconnected_region(self):
        rs = roots_of("A3")
        assert [r.coeffs for r in rs.phi_plus({1, 3})] == [(1, 0, 0), (0, 0, 1)]

    def test_nilradical_weights_complement(self):
        rs = roots_of("A2")
        assert [r.coeffs for r in rs.nilradical_weights(set())] == [(1, 0), (0, 1), (1, 1)]
        assert [r.coeffs for r in rs.nilradical_weights({1})] == [(0, 1), (1, 1)]
        assert rs.nilradical_weights({1, 2}) == ()

    def test_pairing_of_simple_roots_reads_cartan(self):
        d = parse_diagram("G2")
        rs = roots_of("G2")
        for i in range(1, 3):
            for j in range(1, 3):
                simple = rs.roots[i - 1]
                assert rs.pairing(simple, j) == d.cartan.entry(i, j)

    def test_pairing_hand_expansion(self):
        rs = roots_of("A2")
        assert rs.pairing(rs.roots[2], 1) == 1  # (1,1) against node 1

    def test_contains(self):
        rs = roots_of("B2")
        assert rs.contains((1, 2))
        assert not rs.contains((2, 1))


class TestAnticanonical:
    def test_small_values(self):
        assert roots_of("A1").anticanonical == (1,)
        assert roots_of("A2").anticanonical == (2, 2)
        assert roots_of("B2").anticanonical == (3, 4)
        assert roots_of("G2").anticanonical == (10, 6)

    def test_componentwise_over_unions(self):
        assert roots_of("A2+B2").anticanonical == (2, 2, 3, 4)

    def test_every_entry_positive(self):
        for label in connected_labels(8):
            assert all(x >= 1 for x in roots_of(label).anticanonical), label


class TestLongestWord:
    def test_rank_one(self):
        assert roots_of("A1").longest_word() == (1,)

    def test_a2_tie_break(self):
        assert roots_of("A2").longest_word() == (1, 2, 1)

    def test_g2_length(self):
        word = roots_of("G2").longest_word()
        assert len(word) == 6
        assert word == (1, 2, 1, 2, 1, 2)

    def test_length_equals_root_count(self):
        for label in ("A4", "B3", "C3", "D4", "F4"):
            rs = roots_of(label)
            assert len(rs.longest_word()) == len(rs)

    def test_prefixes_invert_one_root_each(self):
        # after k letters exactly k positive roots have gone negative
        for label in ("A3", "B3", "G2"):
            rs = roots_of(label)
            cartan = parse_diagram(label).cartan
            images = [list(r.coeffs) for r in rs.roots]
            word = rs.longest_word()
            for k, letter in enumerate(word, start=1):
                for image in images:
                    image[letter - 1] -= cartan.pairing(tuple(image), letter)
                negatives = sum(1 for image in images if all(c <= 0 for c in image))
                assert negatives == k, (label, k)
