from fractions import Fraction

import pytest

from critloci.exactalg import Scalar
from critloci.koszul import ExtClass, m2
from critloci.quiver import PolystableData, loop_label
from critloci.rng import SplitMix64
from critloci.superpotential import (
    NCWord,
    Superpotential,
    extract_superpotential,
    sanity_j_plus_l,
    verify_trace_identity,
    vertex_j_values,
)

from helpers import random_polystable

S = Scalar


def _data(points, mults):
    return PolystableData(tuple(tuple(S.coerce(c) for c in p) for p in points), tuple(mults))


ONE_POINT = _data([(0, 0, 0)], (1,))
TWO_POINTS = _data([(0, 0, 0), (1, -2, 3)], (1, 2))


class TestExtraction:
    def test_term_count_is_six_per_vertex(self):
        assert extract_superpotential(ONE_POINT).term_count() == 6
        assert extract_superpotential(TWO_POINTS).term_count() == 12

    def test_no_mixed_vertex_words(self):
        pot = extract_superpotential(TWO_POINTS)
        for word, _ in pot.terms:
            vertices = {label.split("_")[1] for label in word.labels}
            assert vertices == {str(word.vertex)}

    def test_cyclic_coefficients(self):
        pot = extract_superpotential(TWO_POINTS)
        js = vertex_j_values(TWO_POINTS)
        for vertex in (1, 2):
            j = js[vertex - 1]
            third = j / S(3)
            assert pot.coefficient(vertex, (1, 2, 3)) == third
            assert pot.coefficient(vertex, (2, 3, 1)) == third
            assert pot.coefficient(vertex, (3, 1, 2)) == third
            assert pot.coefficient(vertex, (1, 3, 2)) == -third
            assert pot.coefficient(vertex, (3, 2, 1)) == -third
            assert pot.coefficient(vertex, (2, 1, 3)) == -third

    def test_words_with_repeated_loops_are_absent(self):
        pot = extract_superpotential(ONE_POINT)
        assert pot.coefficient(1, (1, 1, 2)).is_zero()
        assert pot.coefficient(1, (3, 3, 3)).is_zero()

    def test_j_identical_across_vertices_and_points(self):
        rng = SplitMix64(61)
        reference = vertex_j_values(ONE_POINT)[0]
        for _ in range(5):
            total = rng.randint(2, 4)
            data = random_polystable(rng, rng.randint(1, min(3, total)), total)
            for j in vertex_j_values(data):
                assert j == reference


class TestTraceIdentity:
    def test_scalar_block(self):
        report = verify_trace_identity(ONE_POINT, trials=10, seed=5)
        assert report["identity_ok"]

    @pytest.mark.parametrize(
        "mults", [(1,), (2,), (3,), (1, 1), (1, 2)]
    )
    def test_exact_identity(self, mults):
        k = len(mults)
        points = [(i, 2 * i - 1, -i) for i in range(k)]
        data = _data(points, mults)
        report = verify_trace_identity(data, trials=25, seed=777)
        assert report["identity_ok"]
        assert report["j_same_across_vertices"]
        assert not Scalar.from_json(report["j"]).is_zero()

    def test_trials_required(self):
        with pytest.raises(ValueError):
            verify_trace_identity(ONE_POINT, trials=0, seed=1)


class TestSanity:
    def test_origin(self):
        assert sanity_j_plus_l(ONE_POINT)

    def test_random_rational_point(self):
        data = _data([(Fraction(1, 2), Fraction(-2, 3), 4)], (2,))
        assert sanity_j_plus_l(data)

    def test_corrupted_product_table_fails(self):
        def broken_m2(a, b, K):
            value = m2(a, b, K)
            if value.degree == 2:
                # swap two coordinates: breaks the cyclic cancellation
                c = value.coords
                return ExtClass(2, (c[1], c[0], c[2]))
            return value

        assert not sanity_j_plus_l(ONE_POINT, m2_fn=broken_m2)


class TestTypes:
    def test_word_rejects_mixed_vertices(self):
        with pytest.raises(ValueError):
            NCWord(1, (loop_label(1, 1), loop_label(2, 1), loop_label(1, 2)))

    def test_superpotential_rejects_long_words(self):
        word = NCWord(1, (loop_label(1, 1),) * 4)
        with pytest.raises(ValueError):
            Superpotential(((word, S(1)),))
