"""Independent oracles and seeded generators shared by the test modules.

The oracles recompute quantities along routes the library does not use:
potential values fitted as exact cubics in t, Gram entries recovered by
polarization of divided differences, stability read off an explicit joint
eigenbasis, and the slice Hessian evaluated through its block-sum expansion.
"""

from fractions import Fraction

from critloci.exactalg import Matrix, Scalar, ZERO
from critloci.potential import FramedRep, eval_potential
from critloci.quiver import PolystableData
from critloci.rng import SplitMix64, random_invertible, random_matrix


def t_poly_coefficients(rep: FramedRep, direction):
    """Exact coefficients of the cubic t -> f(rep + t * direction).

    Fitted from values at t in {0, +-1, +-2}; the sample at t = 3 is checked
    against the fit, which certifies the function really is cubic along the
    line and the fit exact.
    """
    values = {t: eval_potential(rep.translate(direction, t)) for t in (-2, -1, 0, 1, 2, 3)}
    a0 = values[0]
    a1 = (Scalar(8) * (values[1] - values[-1]) - (values[2] - values[-2])) / Scalar(12)
    a2 = (
        Scalar(16) * (values[1] + values[-1])
        - (values[2] + values[-2])
        - Scalar(30) * values[0]
    ) / Scalar(24)
    a3 = ((values[2] - values[-2]) - Scalar(2) * (values[1] - values[-1])) / Scalar(12)
    fitted = a0 + a1 * 3 + a2 * 9 + a3 * 27
    assert fitted == values[3], "line restriction is not the fitted cubic"
    return a0, a1, a2, a3


def second_order_coefficient(rep: FramedRep, direction) -> Scalar:
    return t_poly_coefficients(rep, direction)[2]


def gram_entry_oracle(rep: FramedRep, i: int, j: int) -> Scalar:
    """Gram entry by exact polarization of the quadratic t^2-coefficient."""
    dim = rep.dim
    e_i = tuple(Scalar(1) if t == i else ZERO for t in range(dim))
    e_j = tuple(Scalar(1) if t == j else ZERO for t in range(dim))
    both = tuple(a + b for a, b in zip(e_i, e_j))
    c_ij = second_order_coefficient(rep, both)
    c_i = second_order_coefficient(rep, e_i)
    c_j = second_order_coefficient(rep, e_j)
    return c_ij - c_i - c_j


def full_gram_oracle(rep: FramedRep) -> Matrix:
    dim = rep.dim
    return Matrix(
        [[gram_entry_oracle(rep, i, j) for j in range(dim)] for i in range(dim)]
    )


def slice_hessian_block_oracle(point, tangent) -> Scalar:
    """The block-sum expansion of the second-order term at a block-scalar point.

    point is a luna.SlicePoint, tangent a flat vector over 3n^2 coordinates.
    Returns the t^2-coefficient of the potential along the tangent line,
    computed purely from off-diagonal blocks and coordinate differences.
    """
    n = point.n
    rep = FramedRep.from_flat(n, 0, tangent)
    x_m, y_m, z_m = rep.A, rep.B, rep.C
    total = ZERO
    for i in range(n):
        for j in range(n):
            if point.block_of(i) == point.block_of(j):
                continue
            pi, pj = point.point_of(i), point.point_of(j)
            alpha = pi[0] - pj[0]
            beta = pi[1] - pj[1]
            gamma = pi[2] - pj[2]
            # Tr over the (i, j) x (j, i) entry pair of 1x1 blocks is a product
            total = (
                total
                + beta * z_m.entries[i][j] * x_m.entries[j][i]
                - gamma * y_m.entries[i][j] * x_m.entries[j][i]
                - alpha * z_m.entries[i][j] * y_m.entries[j][i]
            )
    return total


def diagonalizable_instance(rng: SplitMix64, n: int):
    """A conjugated critical representation with distinct joint spectra.

    Returns (rep, expected_stable): in the eigenbasis the framing pairs
    nontrivially with every joint eigenvector iff each framing row is nonzero,
    which decides stability independently of any generation computation.
    """
    while True:
        spectra = [
            tuple(Scalar(Fraction(rng.randint(-4, 4), rng.randint(1, 2))) for _ in range(3))
            for _ in range(n)
        ]
        if len({tuple((c.re, c.im) for c in s) for s in spectra}) == n:
            break
    diag = [Matrix.diagonal([s[axis] for s in spectra]) for axis in range(3)]
    v = Matrix([[random_scalar_sparse(rng)] for _ in range(n)])
    expected_stable = all(not v.entries[i][0].is_zero() for i in range(n))
    g = random_invertible(rng, n)
    gi = g.inverse()
    rep = FramedRep(n, 1, g @ diag[0] @ gi, g @ diag[1] @ gi, g @ diag[2] @ gi, g @ v)
    return rep, expected_stable


def random_scalar_sparse(rng: SplitMix64) -> Scalar:
    """Zero with positive probability, so unstable cases occur."""
    if rng.randint(0, 3) == 0:
        return ZERO
    return Scalar(rng.randint(-3, 3), rng.randint(-1, 1))


def random_rational_scalar(rng: SplitMix64, bound: int = 4, den: int = 3) -> Scalar:
    return Scalar(
        Fraction(rng.randint(-bound, bound), rng.randint(1, den)),
        Fraction(rng.randint(-bound, bound), rng.randint(1, den)),
    )


def random_polystable(rng: SplitMix64, k: int, total: int) -> PolystableData:
    """k distinct Gaussian-rational points with multiplicities summing to total."""
    if k > total:
        raise ValueError("need total >= k")
    cuts = set()
    while len(cuts) < k - 1:
        cuts.add(rng.randint(1, total - 1))
    bounds = [0] + sorted(cuts) + [total]
    mults = [bounds[i + 1] - bounds[i] for i in range(k)]
    points = []
    seen = set()
    while len(points) < k:
        candidate = (
            random_rational_scalar(rng),
            random_rational_scalar(rng),
            random_rational_scalar(rng),
        )
        key = tuple((c.re, c.im) for c in candidate)
        if key not in seen:
            seen.add(key)
            points.append(candidate)
    return PolystableData(tuple(points), tuple(mults))


def random_framed(rng: SplitMix64, n: int, r: int, bound: int = 3) -> FramedRep:
    return FramedRep(
        n,
        r,
        random_matrix(rng, n, n, bound),
        random_matrix(rng, n, n, bound),
        random_matrix(rng, n, n, bound),
        random_matrix(rng, n, r, bound),
    )


def standard_vector(dim: int, index: int):
    return tuple(Scalar(1) if t == index else ZERO for t in range(dim))


def random_direction(rng: SplitMix64, dim: int, bound: int = 2):
    return tuple(Scalar(rng.randint(-bound, bound), rng.randint(-bound, bound)) for _ in range(dim))
