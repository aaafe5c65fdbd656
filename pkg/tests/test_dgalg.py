import pytest

from critloci.dgalg import (
    CEPiece,
    build_q3n,
    ce_ideal_match,
    ce_piece,
    h0_ideal_match,
    verify_delta_squared,
)
from critloci.exactalg import Poly, pmat_commutator, pmat_is_zero, pmat_sub


class TestBuild:
    def test_generator_counts(self):
        for n in (1, 2, 3):
            dga = build_q3n(n)
            m = n * n
            assert dga.generator_counts == {0: 3 * m, -1: 3 * m, -2: m}
            assert len(dga.variables) == 7 * m

    def test_scalar_case_differential_vanishes(self):
        dga = build_q3n(1)
        for image in (dga.d_xs, dga.d_ys, dga.d_zs, dga.d_w):
            assert pmat_is_zero(image)

    def test_delta_w_expands_to_commutator_sum(self):
        dga = build_q3n(2)
        expected = pmat_commutator(dga.X, dga.XS)
        from critloci.exactalg import pmat_add

        expected = pmat_add(expected, pmat_commutator(dga.Y, dga.YS))
        expected = pmat_add(expected, pmat_commutator(dga.Z, dga.ZS))
        assert pmat_is_zero(pmat_sub(dga.d_w, expected))

    def test_starred_images_are_cross_commutators(self):
        dga = build_q3n(2)
        assert pmat_is_zero(pmat_sub(dga.d_xs, pmat_commutator(dga.Y, dga.Z)))
        assert pmat_is_zero(pmat_sub(dga.d_ys, pmat_commutator(dga.Z, dga.X)))
        assert pmat_is_zero(pmat_sub(dga.d_zs, pmat_commutator(dga.X, dga.Y)))

    def test_bad_size(self):
        with pytest.raises(ValueError):
            build_q3n(0)


class TestDeltaSquared:
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_vanishes(self, n):
        assert verify_delta_squared(n)

    def test_size_cap(self):
        with pytest.raises(ValueError):
            verify_delta_squared(5)


class TestH0Match:
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_matches_gradient_ideal(self, n):
        assert h0_ideal_match(n)


class TestCEMatch:
    @pytest.mark.parametrize(
        "mults", [(1,), (2,), (3,), (1, 1), (1, 2), (2, 1), (1, 1, 1)]
    )
    def test_matches_gradient_ideal(self, mults):
        assert ce_ideal_match(mults)

    def test_images_are_commutator_entries(self):
        piece = ce_piece((2, 1))
        variables = piece.images[0].variables
        # rebuild the commutators independently and match every labelled entry
        by_label = dict(zip(piece.source_basis, piece.images))
        for i, size in ((1, 2), (2, 1)):
            mats = {}
            for prefix in ("a", "b", "c"):
                mats[prefix] = tuple(
                    tuple(
                        Poly.var(variables, f"{prefix}{i}_{p}_{q}")
                        for q in range(size)
                    )
                    for p in range(size)
                )
            expected = {
                "bc->a": pmat_commutator(mats["b"], mats["c"]),
                "ca->b": pmat_commutator(mats["c"], mats["a"]),
                "ab->c": pmat_commutator(mats["a"], mats["b"]),
            }
            for label, comm in expected.items():
                for p in range(size):
                    for q in range(size):
                        assert by_label[(label, i, p, q)] == comm[p][q]

    def test_bad_mults(self):
        with pytest.raises(ValueError):
            ce_piece((0,))
        with pytest.raises(ValueError):
            ce_ideal_match((3, 2))  # total above symbolic cap

    def test_label_image_pairing_validated(self):
        with pytest.raises(ValueError):
            CEPiece((1,), (("ab->c", 1, 0, 0),), ())
