"""Superpotential extraction for a polystable configuration: cubic words on
the loop quiver of each summand, with coefficients read off the cyclic
pairing of degree-one products, and the exact trace identity they satisfy.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .exactalg import Scalar, ZERO, commutator
from .koszul import ExtClass, KoszulComplex, cyclic_pairing, koszul, m2
from .quiver import PolystableData, loop_label
from .rng import SplitMix64, random_matrix

_THIRD = Scalar(1) / Scalar(3)


@dataclass(frozen=True)
class NCWord:
    """A closed path of loops; on a disjoint union of loop quivers every
    label of a word shares one vertex."""

    vertex: int  # 1-based summand index
    labels: tuple

    def __post_init__(self):
        expected = {loop_label(self.vertex, m) for m in (1, 2, 3)}
        if any(l not in expected for l in self.labels):
            raise ValueError("word mixes loops from different vertices")


@dataclass(frozen=True)
class Superpotential:
    """Finitely many weighted cyclic words; only length-3 words ever occur."""

    terms: tuple  # ((NCWord, Scalar), ...) in a fixed order

    def __post_init__(self):
        if any(len(word.labels) != 3 for word, _ in self.terms):
            raise ValueError("only cubic words are supported")

    def coefficient(self, vertex: int, slots) -> Scalar:
        labels = tuple(loop_label(vertex, s) for s in slots)
        for word, coeff in self.terms:
            if word.vertex == vertex and word.labels == labels:
                return coeff
        return ZERO

    def term_count(self) -> int:
        return len(self.terms)

    def to_json(self):
        return [
            {"vertex": w.vertex, "labels": list(w.labels), "coeff": c.to_json()}
            for w, c in self.terms
        ]


def _deg1(index: int) -> ExtClass:
    return ExtClass.basis(1, index)


def _triple_coefficient(K: KoszulComplex, s1: int, s2: int, s3: int) -> Scalar:
    return cyclic_pairing(m2(_deg1(s1 - 1), _deg1(s2 - 1), K), _deg1(s3 - 1), K)


def extract_superpotential(data: PolystableData) -> Superpotential:
    """Coefficient of each ordered loop triple at each summand: one third of
    the pairing of the product of the first two dual classes against the third."""
    terms = []
    for i, point in enumerate(data.points, start=1):
        K = koszul(point)
        for s1, s2, s3 in product((1, 2, 3), repeat=3):
            coeff = _triple_coefficient(K, s1, s2, s3) * _THIRD
            if not coeff.is_zero():
                word = NCWord(i, tuple(loop_label(i, s) for s in (s1, s2, s3)))
                terms.append((word, coeff))
    return Superpotential(tuple(terms))


def vertex_j_values(data: PolystableData) -> list:
    """The cyclic-order pairing scalar at each summand."""
    out = []
    for point in data.points:
        K = koszul(point)
        out.append(_triple_coefficient(K, 1, 2, 3))
    return out


def verify_trace_identity(data: PolystableData, trials: int, seed: int) -> dict:
    """Evaluate the trace of the extracted superpotential on seeded random
    matrix tuples and compare, exactly, with j times the summed trace potential."""
    if trials < 1:
        raise ValueError("need at least one trial")
    pot = extract_superpotential(data)
    js = vertex_j_values(data)
    j = js[0]
    same_j = all(val == j for val in js)

    slot_index = {}
    for i in range(1, data.k + 1):
        for m in (1, 2, 3):
            slot_index[loop_label(i, m)] = m

    rng = SplitMix64(seed)
    all_ok = True
    for _ in range(trials):
        mats = {}
        for i, mult in enumerate(data.mults, start=1):
            mats[i] = {m: random_matrix(rng, mult, mult, 3) for m in (1, 2, 3)}
        lhs = ZERO
        for word, coeff in pot.terms:
            m1, m2_, m3 = (mats[word.vertex][slot_index[l]] for l in word.labels)
            lhs = lhs + coeff * (m1 @ m2_ @ m3).trace()
        rhs = ZERO
        for i in range(1, data.k + 1):
            a, b, c = mats[i][1], mats[i][2], mats[i][3]
            rhs = rhs + (a @ commutator(b, c)).trace()
        if lhs != j * rhs:
            all_ok = False
            break
    return {
        "j": j.to_json(),
        "j_same_across_vertices": same_j,
        "identity_ok": all_ok and same_j,
        "trials": trials,
        "term_count": pot.term_count(),
    }


def sanity_j_plus_l(data: PolystableData, m2_fn=m2) -> bool:
    """Per summand: the two orientation scalars cancel and neither vanishes."""
    for point in data.points:
        K = koszul(point)
        j = cyclic_pairing(m2_fn(_deg1(0), _deg1(1), K), _deg1(2), K)
        l = cyclic_pairing(m2_fn(_deg1(0), _deg1(2), K), _deg1(1), K)
        if not (j + l).is_zero() or j.is_zero():
            return False
    return True
