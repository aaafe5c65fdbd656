"""Matrix-entry dg-algebras attached to the three-loop potential, and the
degree-zero ideal comparisons that identify their critical loci.

Only the specific expansions needed are ever computed: generator matrices,
their commutators, and partial derivatives of the trace potential.  There is
no general free-graded-algebra engine, which keeps the symbolic cost bounded.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .exactalg import (
    Poly,
    pmat,
    pmat_add,
    pmat_commutator,
    pmat_is_zero,
    pmat_trace,
    spans_equal,
)


def _entry_names(prefix: str, n: int) -> list:
    return [f"{prefix}{p}_{q}" for p in range(n) for q in range(n)]


def _gen_matrix(variables, prefix: str, n: int) -> tuple:
    return pmat(
        [[Poly.var(variables, f"{prefix}{p}_{q}") for q in range(n)] for p in range(n)]
    )


@dataclass(frozen=True)
class MatrixDGA:
    """Generators are the entries of X, Y, Z (degree 0), X*, Y*, Z* (degree -1)
    and W (degree -2); the differential is recorded entrywise."""

    n: int
    variables: tuple
    X: tuple
    Y: tuple
    Z: tuple
    XS: tuple
    YS: tuple
    ZS: tuple
    W: tuple
    d_xs: tuple  # delta X* = [Y, Z]
    d_ys: tuple  # delta Y* = [Z, X]
    d_zs: tuple  # delta Z* = [X, Y]
    d_w: tuple  # delta W = [X, X*] + [Y, Y*] + [Z, Z*]

    @property
    def generator_counts(self) -> dict:
        m = self.n * self.n
        return {0: 3 * m, -1: 3 * m, -2: m}

    def degree_zero_names(self) -> list:
        n = self.n
        return _entry_names("x", n) + _entry_names("y", n) + _entry_names("z", n)


def build_q3n(n: int) -> MatrixDGA:
    if n < 1:
        raise ValueError("need n >= 1")
    names = []
    for prefix in ("x", "y", "z", "xs", "ys", "zs", "w"):
        names.extend(_entry_names(prefix, n))
    variables = tuple(names)
    X = _gen_matrix(variables, "x", n)
    Y = _gen_matrix(variables, "y", n)
    Z = _gen_matrix(variables, "z", n)
    XS = _gen_matrix(variables, "xs", n)
    YS = _gen_matrix(variables, "ys", n)
    ZS = _gen_matrix(variables, "zs", n)
    W = _gen_matrix(variables, "w", n)
    d_w = pmat_add(
        pmat_add(pmat_commutator(X, XS), pmat_commutator(Y, YS)),
        pmat_commutator(Z, ZS),
    )
    return MatrixDGA(
        n,
        variables,
        X,
        Y,
        Z,
        XS,
        YS,
        ZS,
        W,
        pmat_commutator(Y, Z),
        pmat_commutator(Z, X),
        pmat_commutator(X, Y),
        d_w,
    )


def _uses_only(polys, allowed_indices: set) -> bool:
    for p in polys:
        for exps in p.terms:
            for idx, e in enumerate(exps):
                if e and idx not in allowed_indices:
                    return False
    return True


def verify_delta_squared(n: int) -> bool:
    """delta is square zero: the starred images involve only degree-0
    generators (killed by delta), and delta(delta W) expands to the Jacobi
    sum [X,[Y,Z]] + [Y,[Z,X]] + [Z,[X,Y]], which must vanish identically."""
    if n > 4:
        raise ValueError("symbolic expansion is capped at n = 4")
    dga = build_q3n(n)
    degree_zero = {dga.variables.index(name) for name in dga.degree_zero_names()}
    starred_ok = all(
        _uses_only([p for row in image for p in row], degree_zero)
        for image in (dga.d_xs, dga.d_ys, dga.d_zs)
    )
    jacobi = pmat_add(
        pmat_add(
            pmat_commutator(dga.X, dga.d_xs),
            pmat_commutator(dga.Y, dga.d_ys),
        ),
        pmat_commutator(dga.Z, dga.d_zs),
    )
    return starred_ok and pmat_is_zero(jacobi)


def _set_mod_sign(polys) -> set:
    return {
        frozenset(p.sign_canonical().terms.items()) for p in polys if not p.is_zero()
    }


def h0_ideal_match(n: int) -> bool:
    """The starred differential images generate the same ideal as the partial
    derivatives of the trace potential, entry for entry up to sign."""
    if n > 4:
        raise ValueError("symbolic expansion is capped at n = 4")
    dga = build_q3n(n)
    differential_side = [
        p for image in (dga.d_xs, dga.d_ys, dga.d_zs) for row in image for p in row
    ]
    f = pmat_trace(
        pmat(
            [
                [
                    sum(
                        (dga.X[i][k] * (pmat_commutator(dga.Y, dga.Z))[k][j] for k in range(n)),
                        start=Poly.zero(dga.variables),
                    )
                    for j in range(n)
                ]
                for i in range(n)
            ]
        )
    )
    gradient_side = [f.derivative(name) for name in dga.degree_zero_names()]
    sets_match = _set_mod_sign(differential_side) == _set_mod_sign(gradient_side)
    return sets_match and spans_equal(differential_side, gradient_side)


@dataclass(frozen=True)
class CEPiece:
    """Degree (-1) differential data of one block: wedge labels and the
    commutator-entry images they map to."""

    mults: tuple
    source_basis: tuple  # ("yz->x", block, row, col) style labels
    images: tuple  # matching Poly entries

    def __post_init__(self):
        if len(self.source_basis) != len(self.images):
            raise ValueError("labels and images must pair up")


def ce_piece(a: Sequence[int]) -> CEPiece:
    """Differential of the block Chevalley-Eilenberg model in degree -1."""
    a = tuple(int(x) for x in a)
    if any(x < 1 for x in a):
        raise ValueError("multiplicities must be positive")
    names = []
    for i, size in enumerate(a, start=1):
        for prefix in ("a", "b", "c"):
            names.extend(
                f"{prefix}{i}_{p}_{q}" for p in range(size) for q in range(size)
            )
    variables = tuple(names)
    labels = []
    images = []
    for i, size in enumerate(a, start=1):
        A = pmat(
            [[Poly.var(variables, f"a{i}_{p}_{q}") for q in range(size)] for p in range(size)]
        )
        B = pmat(
            [[Poly.var(variables, f"b{i}_{p}_{q}") for q in range(size)] for p in range(size)]
        )
        C = pmat(
            [[Poly.var(variables, f"c{i}_{p}_{q}") for q in range(size)] for p in range(size)]
        )
        for label, comm in (
            ("bc->a", pmat_commutator(B, C)),
            ("ca->b", pmat_commutator(C, A)),
            ("ab->c", pmat_commutator(A, B)),
        ):
            for p in range(size):
                for q in range(size):
                    labels.append((label, i, p, q))
                    images.append(comm[p][q])
    return CEPiece(a, tuple(labels), tuple(images))


def ce_ideal_match(a: Sequence[int]) -> bool:
    """The differential images span the same space as the partial derivatives
    of the summed trace potential; exact comparison of the two generator sets."""
    a = tuple(int(x) for x in a)
    if sum(a) > 4:
        raise ValueError("symbolic expansion is capped at total size 4")
    piece = ce_piece(a)
    variables = piece.images[0].variables if piece.images else ()
    g = Poly.zero(variables)
    for i, size in enumerate(a, start=1):
        A = pmat(
            [[Poly.var(variables, f"a{i}_{p}_{q}") for q in range(size)] for p in range(size)]
        )
        B = pmat(
            [[Poly.var(variables, f"b{i}_{p}_{q}") for q in range(size)] for p in range(size)]
        )
        C = pmat(
            [[Poly.var(variables, f"c{i}_{p}_{q}") for q in range(size)] for p in range(size)]
        )
        bc = pmat_commutator(B, C)
        block = pmat(
            [
                [
                    sum((A[i2][k] * bc[k][j] for k in range(size)), start=Poly.zero(variables))
                    for j in range(size)
                ]
                for i2 in range(size)
            ]
        )
        g = g + pmat_trace(block)
    gradient_side = [g.derivative(name) for name in variables]
    images = list(piece.images)
    sets_match = _set_mod_sign(images) == _set_mod_sign(gradient_side)
    return sets_match and spans_equal(images, gradient_side)
