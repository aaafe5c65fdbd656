"""The Koszul complex of a point of affine 3-space, its endomorphism
dg-algebra, the constant 'hat' generators, Ext dimensions, the Yoneda
product on cohomology classes, and the cyclic trace pairing.

Differential entries are polynomials in coordinates shifted to the point
(x = x0 - a0 and so on), which makes the hat elements literally the same
constant matrices at every point.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import InternalCheckError
from .exactalg import (
    Matrix,
    Poly,
    Scalar,
    ZERO,
    ONE,
    pmat,
    pmat_add,
    pmat_eval,
    pmat_is_zero,
    pmat_mul,
    pmat_neg,
    pmat_scale,
    pmat_sub,
    pmat_zero,
    solve_exact,
)

VARIABLES = ("x", "y", "z")
RANKS = (1, 3, 3, 1)  # ranks of Q^-3, Q^-2, Q^-1, Q^0


def _const(c) -> Poly:
    return Poly.const(VARIABLES, c)


def _var(name: str) -> Poly:
    return Poly.var(VARIABLES, name)


def _const_pmat(rows) -> tuple:
    return pmat([[_const(v) for v in row] for row in rows])


@dataclass(frozen=True)
class KoszulComplex:
    """Q^-3 -> Q^-2 -> Q^-1 -> Q^0 with the three shifted-coordinate maps."""

    point: tuple  # (Scalar, Scalar, Scalar)
    diffs: tuple  # three polynomial matrices, shapes 3x1, 3x3, 1x3

    @staticmethod
    def at(point) -> "KoszulComplex":
        point = tuple(Scalar.coerce(c) for c in point)
        if len(point) != 3:
            raise ValueError("the point must have three coordinates")
        x, y, z = (_var(v) for v in VARIABLES)
        zero = Poly.zero(VARIABLES)
        d0 = pmat([[x], [y], [z]])
        d1 = pmat([[zero, -z, y], [z, zero, -x], [-y, x, zero]])
        d2 = pmat([[x, y, z]])
        complex_ = KoszulComplex(point, (d0, d1, d2))
        for first, second in ((d1, d0), (d2, d1)):
            if not pmat_is_zero(pmat_mul(first, second)):
                raise InternalCheckError("Koszul composites do not vanish")
        return complex_

    def evaluate_at(self, x0, y0, z0) -> list:
        """Evaluate every differential entry at an honest ambient point."""
        a, b, c = self.point
        values = {
            "x": Scalar.coerce(x0) - a,
            "y": Scalar.coerce(y0) - b,
            "z": Scalar.coerce(z0) - c,
        }
        return [pmat_eval(d, values) for d in self.diffs]


def koszul(point) -> KoszulComplex:
    return KoszulComplex.at(point)


@dataclass(frozen=True)
class DGElement:
    """A graded endomorphism of the complex: one matrix per slot Hom(Q^i, Q^{i+d}).

    Degrees 0..3 carry 4-d slots; degree 4 is the zero group (no slots) and
    appears only as the target of the differential in top degree.
    """

    degree: int
    slots: tuple  # polynomial matrices

    def __post_init__(self):
        if not 0 <= self.degree <= 4:
            raise ValueError("degree out of range")
        expected = max(0, 4 - self.degree)
        if len(self.slots) != expected:
            raise ValueError(f"degree {self.degree} element needs {expected} slots")
        for j, slot in enumerate(self.slots):
            rows, cols = RANKS[j + self.degree], RANKS[j]
            if len(slot) != rows or any(len(r) != cols for r in slot):
                raise ValueError(f"slot {j} must be {rows}x{cols}")

    @staticmethod
    def zero(degree: int) -> "DGElement":
        slots = tuple(
            pmat_zero(RANKS[j + degree], RANKS[j], VARIABLES)
            for j in range(max(0, 4 - degree))
        )
        return DGElement(degree, slots)

    @staticmethod
    def from_constants(degree: int, slot_rows) -> "DGElement":
        return DGElement(degree, tuple(_const_pmat(rows) for rows in slot_rows))

    def is_zero(self) -> bool:
        return all(pmat_is_zero(s) for s in self.slots)

    def __add__(self, other: "DGElement") -> "DGElement":
        if self.degree != other.degree:
            raise ValueError("cannot add elements of different degree")
        return DGElement(
            self.degree, tuple(pmat_add(a, b) for a, b in zip(self.slots, other.slots))
        )

    def __sub__(self, other: "DGElement") -> "DGElement":
        if self.degree != other.degree:
            raise ValueError("cannot subtract elements of different degree")
        return DGElement(
            self.degree, tuple(pmat_sub(a, b) for a, b in zip(self.slots, other.slots))
        )

    def __neg__(self) -> "DGElement":
        return DGElement(self.degree, tuple(pmat_neg(s) for s in self.slots))

    def scale(self, s) -> "DGElement":
        s = Scalar.coerce(s)
        return DGElement(self.degree, tuple(pmat_scale(slot, s) for slot in self.slots))

    def constant_vector(self) -> list:
        """Flatten all entries, requiring each to be a constant polynomial."""
        out = []
        for slot in self.slots:
            for row in slot:
                for p in row:
                    if any(sum(e) > 0 for e in p.terms):
                        raise ValueError("element has non-constant entries")
                    out.append(p.constant_term())
        return out


def dg_product(u: DGElement, v: DGElement) -> DGElement:
    """Slotwise composition (u after v), shifted by the degree of v."""
    degree = u.degree + v.degree
    if degree > 3:
        raise ValueError("product degree exceeds the length of the complex")
    slots = tuple(
        pmat_mul(u.slots[j + v.degree], v.slots[j]) for j in range(4 - degree)
    )
    return DGElement(degree, slots)


def dg_differential(u: DGElement, K: KoszulComplex) -> DGElement:
    """delta(u) = d o u - (-1)^deg u o d, slotwise."""
    d = u.degree
    if d >= 3:
        # the target group vanishes above the length of the complex
        return DGElement.zero(4)
    sign = -1 if d % 2 else 1
    slots = []
    for j in range(3 - d):
        first = pmat_mul(K.diffs[j + d], u.slots[j])
        second = pmat_mul(u.slots[j + 1], K.diffs[j])
        slots.append(pmat_sub(first, second) if sign > 0 else pmat_add(first, second))
    return DGElement(d + 1, tuple(slots))


def hat_elements(K: KoszulComplex) -> dict:
    """The four constant generators: the identity and the three evaluations of
    the differential matrices at the coordinate directions."""
    one = DGElement.from_constants(
        0,
        (
            [[1]],
            [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
            [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
            [[1]],
        ),
    )
    hats = {"one": one}
    directions = {"x": (1, 0, 0), "y": (0, 1, 0), "z": (0, 0, 1)}
    for name, direction in directions.items():
        values = dict(zip(VARIABLES, (Scalar(c) for c in direction)))
        slot_rows = []
        for d in K.diffs:
            evaluated = pmat_eval(d, values)
            slot_rows.append([list(row) for row in evaluated.entries])
        hats[name] = DGElement.from_constants(1, slot_rows)
    return hats


# frozen expected values for the degree-2 products, derived by composing the
# hat matrices by hand (cyclic in x -> y -> z, e1 -> e2 -> e3)
_EXPECTED_DEG2 = {
    ("y", "z"): ([[1], [0], [0]], [[1, 0, 0]]),
    ("z", "x"): ([[0], [1], [0]], [[0, 1, 0]]),
    ("x", "y"): ([[0], [0], [1]], [[0, 0, 1]]),
}


def verify_product_table(K: KoszulComplex, hats: dict | None = None) -> dict:
    """Check every structural relation of the hat subalgebra, exactly.

    Relations: unit laws, squares, anticommutators, the explicit degree-2
    product values, associativity and cyclic symmetry of the triple products,
    and closedness of everything under the differential.  The constant carried
    by the top product is not asserted against anything; it is reported, since
    only its nonvanishing matters for the pairing.
    """
    h = hats or hat_elements(K)
    one, x, y, z = h["one"], h["x"], h["y"], h["z"]
    named = {"x": x, "y": y, "z": z}
    checks = []

    def record(name: str, ok: bool):
        checks.append({"relation": name, "ok": bool(ok)})

    record("one*one == one", dg_product(one, one) == one)
    for name, el in named.items():
        record(f"one*{name} == {name}", dg_product(one, el) == el)
        record(f"{name}*one == {name}", dg_product(el, one) == el)
        record(f"{name}*{name} == 0", dg_product(el, el).is_zero())

    for a, b in (("x", "y"), ("y", "z"), ("z", "x")):
        ab = dg_product(named[a], named[b])
        ba = dg_product(named[b], named[a])
        record(f"{a}*{b} == -({b}*{a})", ab == -ba)
    for (a, b), expected in _EXPECTED_DEG2.items():
        value = dg_product(named[a], named[b])
        record(f"{a}*{b} value", value == DGElement.from_constants(2, expected))

    yz = dg_product(y, z)
    xyz = dg_product(x, yz)
    record("(x*y)*z == x*(y*z)", dg_product(dg_product(x, y), z) == xyz)
    record("x*y*z == y*z*x == z*x*y", xyz == dg_product(y, dg_product(z, x)) == dg_product(z, dg_product(x, y)))
    record("x*z*y == -(x*y*z)", dg_product(x, dg_product(z, y)) == -xyz)

    for name, el in h.items():
        record(f"delta({name}) == 0", dg_differential(el, K).is_zero())
    for a, b in (("x", "y"), ("y", "z"), ("z", "x")):
        record(
            f"delta({a}*{b}) == 0",
            dg_differential(dg_product(named[a], named[b]), K).is_zero(),
        )
    record("delta(x*y*z) == 0", dg_differential(xyz, K).is_zero())

    top = xyz.slots[0][0][0].constant_term()
    return {
        "point": [c.to_json() for c in K.point],
        "relations": checks,
        "top_constant": top.to_json(),
        "all_ok": all(c["ok"] for c in checks),
    }


def ext_dims(K: KoszulComplex) -> tuple:
    """Cohomology dimensions of Hom(Q^., fiber at the point).

    The differentials all vanish at the point, so the dimensions are the
    ranks of the graded pieces; both facts are computed, not assumed.
    """
    evals = [pmat_eval(d, {v: ZERO for v in VARIABLES}) for d in K.diffs]
    for m in evals:
        if not m.is_zero():
            raise InternalCheckError("differentials do not vanish at the base point")
    ranks = [m.rank() for m in evals]
    dims = []
    for d in range(4):
        kernel = RANKS[3 - d] - (ranks[2 - d] if d <= 2 else 0)
        image = ranks[3 - d] if d >= 1 else 0
        dims.append(kernel - image)
    return tuple(dims)


@dataclass(frozen=True)
class ExtClass:
    """A cohomology class in the basis of hat-element products."""

    degree: int
    coords: tuple

    def __post_init__(self):
        if not 0 <= self.degree <= 3:
            raise ValueError("degree out of range")
        if len(self.coords) != comb(3, self.degree):
            raise ValueError("coordinate length must be C(3, degree)")

    @staticmethod
    def basis(degree: int, index: int) -> "ExtClass":
        size = comb(3, degree)
        return ExtClass(degree, tuple(ONE if i == index else ZERO for i in range(size)))

    def scale(self, s) -> "ExtClass":
        s = Scalar.coerce(s)
        return ExtClass(self.degree, tuple(s * c for c in self.coords))

    def __add__(self, other: "ExtClass") -> "ExtClass":
        if self.degree != other.degree:
            raise ValueError("cannot add classes of different degree")
        return ExtClass(self.degree, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "ExtClass":
        return ExtClass(self.degree, tuple(-c for c in self.coords))

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coords)


def _basis_representatives(K: KoszulComplex, hats: dict | None = None) -> dict:
    h = hats or hat_elements(K)
    x, y, z = h["x"], h["y"], h["z"]
    deg2 = (dg_product(y, z), dg_product(z, x), dg_product(x, y))
    deg3 = (dg_product(x, deg2[0]),)
    return {0: (h["one"],), 1: (x, y, z), 2: deg2, 3: deg3}


def _express(element: DGElement, basis: tuple) -> tuple:
    """Coordinates of a constant element in the given independent family."""
    target = element.constant_vector()
    columns = [b.constant_vector() for b in basis]
    mat = Matrix([[columns[j][i] for j in range(len(columns))] for i in range(len(target))])
    solution = solve_exact(mat, target)
    if solution is None:
        raise ValueError("element does not lie in the span of the hat basis")
    return solution


def _representative(cls: ExtClass, reps: dict) -> DGElement:
    basis = reps[cls.degree]
    acc = DGElement.zero(cls.degree)
    for c, b in zip(cls.coords, basis):
        if not c.is_zero():
            acc = acc + b.scale(c)
    return acc


def m2(a: ExtClass, b: ExtClass, K: KoszulComplex) -> ExtClass:
    """Yoneda product via composition of hat representatives."""
    if a.degree + b.degree > 3:
        raise ValueError("product degree exceeds 3")
    reps = _basis_representatives(K)
    product = dg_product(_representative(a, reps), _representative(b, reps))
    coords = _express(product, reps[product.degree])
    return ExtClass(product.degree, tuple(coords))


def cyclic_pairing(a: ExtClass, b: ExtClass, K: KoszulComplex) -> Scalar:
    """Trace pairing of complementary-degree classes.

    The trace functional reads off the constant in the top slot of the
    composed representative; the top class itself carries the reported
    normalization constant (see verify_product_table).
    """
    if a.degree + b.degree != 3:
        raise ValueError("pairing needs complementary degrees")
    reps = _basis_representatives(K)
    product = dg_product(_representative(a, reps), _representative(b, reps))
    return product.slots[0][0][0].constant_term()


def pairing_normalization(K: KoszulComplex) -> Scalar:
    """The trace of the top hat product: the one scalar the pairing depends on."""
    reps = _basis_representatives(K)
    return reps[3][0].slots[0][0][0].constant_term()


def massey_vanishing_report(K: KoszulComplex, hats: dict | None = None) -> dict:
    """Verify the algebraic facts that force all higher products to vanish:
    the hat span is closed under composition, consists of cocycles, and maps
    isomorphically onto cohomology."""
    reps = _basis_representatives(K, hats)

    closed = True
    try:
        for da in range(4):
            for db in range(4):
                if da + db > 3:
                    continue
                for u in reps[da]:
                    for v in reps[db]:
                        _express(dg_product(u, v), reps[da + db])
    except ValueError:
        closed = False

    cocycles = all(
        dg_differential(el, K).is_zero() for degree in range(4) for el in reps[degree]
    )

    dims = ext_dims(K)
    identity_on_homology = True
    point_values = {v: ZERO for v in VARIABLES}
    for degree in range(4):
        vectors = []
        for el in reps[degree]:
            last = pmat_eval(el.slots[3 - degree], point_values)
            vectors.append([last.entries[0][j] for j in range(last.cols)])
        rank = Matrix(vectors).rank()
        if rank != comb(3, degree) or rank != dims[degree]:
            identity_on_homology = False

    return {
        "point": [c.to_json() for c in K.point],
        "span_closed_under_product": closed,
        "all_cocycles": cocycles,
        "identity_on_homology": identity_on_homology,
        "ext_dims": list(dims),
        "higher_products_vanish": closed and cocycles and identity_on_homology,
    }
