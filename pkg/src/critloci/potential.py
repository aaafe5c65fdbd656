"""The trace potential Tr A[B,C] on framed representation spaces, its gradient
and Hessian, block-diagonal embeddings, and framing-independence checks.

Coordinates on a framed representation space are always flattened row-major
as A-block, B-block, C-block, V-block; this ordering is part of the wire
format and every consumer in the package relies on it.

Convention: the stored Hessian Gram matrix holds the second partial
derivatives of the potential, so for a direction u the exact expansion
f(p + t*u) has t^2-coefficient equal to (1/2) * form.evaluate(u).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .exactalg import Matrix, QuadraticForm, Scalar, ZERO, commutator
from .rng import SplitMix64, random_matrix


@dataclass(frozen=True)
class FramedRep:
    """Three n x n matrices plus an n x r framing block (r = 0 allowed)."""

    n: int
    r: int
    A: Matrix
    B: Matrix
    C: Matrix
    V: Matrix

    def __post_init__(self):
        n, r = self.n, self.r
        for name, m in (("A", self.A), ("B", self.B), ("C", self.C)):
            if m.rows != n or m.cols != n:
                raise ValueError(f"{name} must be {n}x{n}")
        if self.V.rows != n or self.V.cols != r:
            raise ValueError(f"V must be {n}x{r}")

    @property
    def dim(self) -> int:
        """Dimension of the ambient representation space."""
        return 3 * self.n * self.n + self.r * self.n

    def flatten(self) -> tuple:
        out = []
        for m in (self.A, self.B, self.C, self.V):
            for row in m.entries:
                out.extend(row)
        return tuple(out)

    @staticmethod
    def from_flat(n: int, r: int, vec: Sequence) -> "FramedRep":
        vec = [Scalar.coerce(v) for v in vec]
        if len(vec) != 3 * n * n + r * n:
            raise ValueError("flat vector has the wrong length")
        blocks = []
        pos = 0
        for _ in range(3):
            blocks.append(Matrix([vec[pos + i * n : pos + (i + 1) * n] for i in range(n)]))
            pos += n * n
        v_block = Matrix([vec[pos + i * r : pos + (i + 1) * r] for i in range(n)])
        return FramedRep(n, r, blocks[0], blocks[1], blocks[2], v_block)

    def translate(self, direction: Sequence, t) -> "FramedRep":
        t = Scalar.coerce(t)
        base = self.flatten()
        moved = [b + t * Scalar.coerce(d) for b, d in zip(base, direction)]
        return FramedRep.from_flat(self.n, self.r, moved)

    def gauge_transform(self, g: Matrix) -> "FramedRep":
        gi = g.inverse()
        return FramedRep(
            self.n,
            self.r,
            g @ self.A @ gi,
            g @ self.B @ gi,
            g @ self.C @ gi,
            g @ self.V,
        )

    def to_json(self):
        return {
            "n": self.n,
            "r": self.r,
            "A": self.A.to_json(),
            "B": self.B.to_json(),
            "C": self.C.to_json(),
            "V": self.V.to_json(),
        }

    @staticmethod
    def from_json(data) -> "FramedRep":
        n, r = int(data["n"]), int(data["r"])
        v_raw = data["V"]
        if r == 0:
            v_block = Matrix([[] for _ in range(n)])
        else:
            v_block = Matrix.from_json(v_raw)
        return FramedRep(
            n,
            r,
            Matrix.from_json(data["A"]),
            Matrix.from_json(data["B"]),
            Matrix.from_json(data["C"]),
            v_block,
        )


@dataclass(frozen=True)
class GradientTriple:
    G_A: Matrix
    G_B: Matrix
    G_C: Matrix

    def __post_init__(self):
        for name, m in (("G_A", self.G_A), ("G_B", self.G_B), ("G_C", self.G_C)):
            if not m.trace().is_zero():
                raise ValueError(f"{name} is not traceless")

    def is_zero(self) -> bool:
        return self.G_A.is_zero() and self.G_B.is_zero() and self.G_C.is_zero()

    def pair_with(self, X: Matrix, Y: Matrix, Z: Matrix) -> Scalar:
        """Tr(X*G_A) + Tr(Y*G_B) + Tr(Z*G_C)."""
        return (X @ self.G_A).trace() + (Y @ self.G_B).trace() + (Z @ self.G_C).trace()


def eval_potential(rep: FramedRep) -> Scalar:
    """Tr(A(BC - CB)); never sees the framing block."""
    return (rep.A @ commutator(rep.B, rep.C)).trace()


def gradient(rep: FramedRep) -> GradientTriple:
    return GradientTriple(
        commutator(rep.B, rep.C),
        commutator(rep.C, rep.A),
        commutator(rep.A, rep.B),
    )


def hessian(rep: FramedRep) -> QuadraticForm:
    """Symmetric Gram matrix of second partials over all 3n^2 + rn coordinates.

    The cubic has no A-A, B-B, C-C second partials and the framing block never
    appears, so only the three mixed matrix blocks are filled; every V row and
    column is zero, i.e. framing directions lie in the radical.
    """
    n, r = rep.n, rep.r
    dim = 3 * n * n + r * n
    alpha, beta, gamma = rep.A.entries, rep.B.entries, rep.C.entries
    grid = [[ZERO] * dim for _ in range(dim)]

    def idx_a(p, q):
        return p * n + q

    def idx_b(p, q):
        return n * n + p * n + q

    def idx_c(p, q):
        return 2 * n * n + p * n + q

    def put(i, j, value):
        if not value.is_zero():
            grid[i][j] = grid[i][j] + value
            grid[j][i] = grid[j][i] + value

    for p in range(n):
        for q in range(n):
            for u in range(n):
                for v in range(n):
                    # d2f / dA_pq dB_uv
                    val = ZERO
                    if q == u:
                        val = val + gamma[v][p]
                    if p == v:
                        val = val - gamma[q][u]
                    put(idx_a(p, q), idx_b(u, v), val)
                    # d2f / dA_pq dC_uv
                    val = ZERO
                    if p == v:
                        val = val + beta[q][u]
                    if q == u:
                        val = val - beta[v][p]
                    put(idx_a(p, q), idx_c(u, v), val)
                    # d2f / dB_pq dC_uv
                    val = ZERO
                    if q == u:
                        val = val + alpha[v][p]
                    if p == v:
                        val = val - alpha[q][u]
                    put(idx_b(p, q), idx_c(u, v), val)
    return QuadraticForm(Matrix(grid))


def block_embed(parts: Sequence[FramedRep]) -> FramedRep:
    """Block-diagonal matrices; framing blocks stack vertically."""
    if not parts:
        raise ValueError("need at least one part")
    r = parts[0].r
    if any(p.r != r for p in parts):
        raise ValueError("all parts must share the same framing rank")
    n = sum(p.n for p in parts)
    return FramedRep(
        n,
        r,
        Matrix.block_diagonal([p.A for p in parts]),
        Matrix.block_diagonal([p.B for p in parts]),
        Matrix.block_diagonal([p.C for p in parts]),
        Matrix.vstack([p.V for p in parts]),
    )


def verify_framing_independence(rep: FramedRep, trials: int, seed: int) -> bool:
    """Replace the framing block with seeded random ones; the value never moves."""
    if trials < 1:
        raise ValueError("need at least one trial")
    reference = eval_potential(rep)
    rng = SplitMix64(seed)
    for _ in range(trials):
        v_new = random_matrix(rng, rep.n, rep.r, 5)
        candidate = FramedRep(rep.n, rep.r, rep.A, rep.B, rep.C, v_new)
        if eval_potential(candidate) != reference:
            return False
    return True


def gauge_directions(rep: FramedRep) -> list:
    """Flattened infinitesimal gauge action X -> ([X,A],[X,B],[X,C], XV).

    Returns one tangent vector per elementary matrix X = E_pq, in row-major
    order of (p, q).
    """
    n = rep.n
    out = []
    for p in range(n):
        for q in range(n):
            x = Matrix.unit(n, p, q)
            moved = FramedRep(
                rep.n,
                rep.r,
                commutator(x, rep.A),
                commutator(x, rep.B),
                commutator(x, rep.C),
                x @ rep.V,
            )
            out.append(moved.flatten())
    return out
