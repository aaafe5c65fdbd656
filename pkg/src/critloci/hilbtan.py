"""Monomial-ideal sample points of the Hilbert scheme of points: staircase
enumeration, the associated framed representation, and the two tangent-space
dimensions (module-theoretic and Hessian-kernel) that must agree.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalCheckError
from .exactalg import Matrix, ZERO, ONE, matrix_from_columns
from .potential import FramedRep, gauge_directions, hessian

_UNITS = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def _shift(cell, unit, sign=1):
    return tuple(c + sign * u for c, u in zip(cell, unit))


@dataclass(frozen=True)
class MonomialIdeal:
    """A finite staircase: the exponents of the monomials NOT in the ideal."""

    staircase: frozenset

    def __post_init__(self):
        if not self.staircase:
            raise ValueError("staircase must be nonempty")
        for cell in self.staircase:
            if len(cell) != 3 or any(c < 0 for c in cell):
                raise ValueError(f"bad staircase cell {cell}")
            for unit in _UNITS:
                below = _shift(cell, unit, -1)
                if all(c >= 0 for c in below) and below not in self.staircase:
                    raise ValueError("staircase is not downward closed")

    @property
    def n(self) -> int:
        return len(self.staircase)

    def cells(self) -> list:
        return sorted(self.staircase)

    def generators(self) -> list:
        """Minimal monomial generators, from the staircase boundary."""
        candidates = set()
        for cell in self.staircase:
            for unit in _UNITS:
                above = _shift(cell, unit)
                if above not in self.staircase:
                    candidates.add(above)
        minimal = []
        for cand in sorted(candidates):
            ok = True
            for unit in _UNITS:
                below = _shift(cand, unit, -1)
                if all(c >= 0 for c in below) and below not in self.staircase:
                    ok = False
                    break
            if ok:
                minimal.append(cand)
        return minimal

    def to_json(self):
        return [list(c) for c in self.cells()]


def _addable_cells(staircase: frozenset) -> list:
    out = []
    seen = set()
    for cell in staircase:
        for unit in _UNITS:
            above = _shift(cell, unit)
            if above in staircase or above in seen:
                continue
            seen.add(above)
            if all(
                _shift(above, u, -1) in staircase
                for u in _UNITS
                if all(c >= 0 for c in _shift(above, u, -1))
            ):
                out.append(above)
    return out


def enumerate_monomial_ideals(n: int) -> list:
    """All downward-closed exponent sets of the given size, in a fixed order."""
    if not 1 <= n <= 8:
        raise ValueError("enumeration supports 1 <= n <= 8")
    level = {frozenset({(0, 0, 0)})}
    for _ in range(n - 1):
        grown = set()
        for staircase in level:
            for cell in _addable_cells(staircase):
                grown.add(staircase | {cell})
        level = grown
    return [MonomialIdeal(s) for s in sorted(level, key=lambda s: sorted(s))]


def ideal_to_rep(ideal: MonomialIdeal) -> FramedRep:
    """Multiplication by the three coordinates on the staircase basis of the
    quotient, framed by the coordinate vector of the monomial 1."""
    cells = ideal.cells()
    index = {cell: i for i, cell in enumerate(cells)}
    n = len(cells)
    mats = []
    for unit in _UNITS:
        grid = [[ZERO] * n for _ in range(n)]
        for cell, col in index.items():
            target = _shift(cell, unit)
            row = index.get(target)
            if row is not None:
                grid[row][col] = ONE
        mats.append(Matrix(grid))
    framing = Matrix([[ONE if cells[i] == (0, 0, 0) else ZERO] for i in range(n)])
    return FramedRep(n, 1, mats[0], mats[1], mats[2], framing)


@dataclass(frozen=True)
class Presentation:
    """Generators plus the full set of pairwise lcm relations (deliberately
    non-minimal; redundant relations cannot change the kernel below)."""

    generators: tuple
    relations: tuple  # (a, mult_a, b, mult_b): mult_a*gen_a == mult_b*gen_b == lcm

    def __post_init__(self):
        for a, mult_a, b, mult_b in self.relations:
            left = tuple(x + y for x, y in zip(mult_a, self.generators[a]))
            right = tuple(x + y for x, y in zip(mult_b, self.generators[b]))
            if left != right:
                raise ValueError("relation does not annihilate the generator column")


def taylor_presentation(ideal: MonomialIdeal) -> Presentation:
    gens = tuple(ideal.generators())
    relations = []
    for a in range(len(gens)):
        for b in range(a + 1, len(gens)):
            lcm = tuple(max(x, y) for x, y in zip(gens[a], gens[b]))
            relations.append(
                (
                    a,
                    tuple(l - g for l, g in zip(lcm, gens[a])),
                    b,
                    tuple(l - g for l, g in zip(lcm, gens[b])),
                )
            )
    return Presentation(gens, tuple(relations))


def _monomial_action(rep: FramedRep, exponent, cache: dict) -> Matrix:
    """Multiplication by x^i y^j z^k on the quotient, via the commuting matrices."""
    if exponent in cache:
        return cache[exponent]
    if exponent == (0, 0, 0):
        result = Matrix.identity(rep.n)
    else:
        for axis, mat in enumerate((rep.A, rep.B, rep.C)):
            if exponent[axis] > 0:
                below = tuple(
                    e - 1 if i == axis else e for i, e in enumerate(exponent)
                )
                result = mat @ _monomial_action(rep, below, cache)
                break
    cache[exponent] = result
    return result


def hom_dim(ideal: MonomialIdeal) -> int:
    """dim of the module maps from the ideal to the quotient: the kernel of
    the relation constraints on values assigned to the generators."""
    rep = ideal_to_rep(ideal)
    pres = taylor_presentation(ideal)
    n = rep.n
    g = len(pres.generators)
    if not pres.relations:
        return g * n
    cache: dict = {}
    rows = []
    for a, mult_a, b, mult_b in pres.relations:
        act_a = _monomial_action(rep, mult_a, cache)
        act_b = _monomial_action(rep, mult_b, cache)
        for i in range(n):
            row = [ZERO] * (g * n)
            for j in range(n):
                row[a * n + j] = act_a.entries[i][j]
                row[b * n + j] = row[b * n + j] - act_b.entries[i][j]
            rows.append(row)
    constraint = Matrix(rows)
    return g * n - constraint.rank()


def hessian_tangent_dim(ideal: MonomialIdeal) -> int:
    """Hessian-kernel dimension at the associated stable critical point, with
    the free gauge directions removed.

    The gauge action sends X to ([X,A],[X,B],[X,C], XV); at a stable point it
    is free, so its n^2 directions must sit inside the kernel and be
    independent, and both facts are verified rather than assumed.
    """
    rep = ideal_to_rep(ideal)
    n = rep.n
    form = hessian(rep)
    kernel_dim = form.dim - form.rank()
    gauge = gauge_directions(rep)
    for vec in gauge:
        if not form.in_radical(vec):
            raise InternalCheckError(
                "a gauge direction escapes the Hessian kernel; the point is not critical"
            )
    gauge_rank = matrix_from_columns(gauge, form.dim).rank()
    if gauge_rank != n * n:
        raise InternalCheckError(
            f"gauge directions have rank {gauge_rank}, expected {n * n}; the point is not stable"
        )
    return kernel_dim - n * n


def compare_tangents(n: int) -> dict:
    """Both tangent dimensions for every monomial ideal of the given size."""
    if not 1 <= n <= 6:
        raise ValueError("comparison sweep supports 1 <= n <= 6")
    rows = []
    for ideal in enumerate_monomial_ideals(n):
        h = hom_dim(ideal)
        hess = hessian_tangent_dim(ideal)
        rows.append(
            {
                "staircase": ideal.to_json(),
                "hom_dim": h,
                "hess_dim": hess,
                "equal": h == hess,
            }
        )
    return {
        "n": n,
        "ideal_count": len(rows),
        "rows": rows,
        "all_equal": all(r["equal"] for r in rows),
    }
