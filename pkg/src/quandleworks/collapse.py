"""End-to-end machine check that reversing orbit 2 of the two-orbit affine
quandle and then forcing the medial law collapses the carrier to exactly two
elements.

Documented lemma (the engine behind everything here): for tags (1,1,1,2) the
mediality gap of the reversed operation,

    reversed ((w,x),(y,z))  minus  reversed ((w,y),(x,z)),

equals (t^3 - t)*(x - y) -- independent of w and z.  Every violated medial
instance therefore forces an identification of the form  v ~ v + s  on orbit
1, a pure shift.  Shifts compose, so the full set of forced shifts is the
subgroup of the ring's additive group (= Z^2 in the canonical pair basis)
generated by the shifts realised by concrete substitutions; two of them
generate all of Z^2, which is certified by a Hermite-form computation with
explicit combination certificates.  Orbit 1 thus collapses to one class.
Orbit 2 follows by transport: every orbit-2 value is the image of the
orbit-2 zero under a translation by an orbit-1 element, and translations by
orbit-1 elements are untouched by the reversal.  No operation crosses orbit
tags, so no identification between the two final classes is ever forced:
the total is exactly two.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Mapping, Sequence

from .affine import AffineExpr, Point, SymPoint, op, reversed_op
from .affine import orbit_witness as _orbit_witness
from .ring import ONE, T, ZERO, RingElem, random_elem, render_pair

PARAM = "a"
VARS = ("w", "x", "y", "z")


class ExpansionMismatch(RuntimeError):
    """The symbolic expansion disagrees with its frozen coefficients."""

    stage = "expansion"


class NonUniformRelation(ValueError):
    """A substitution whose forced relation is not a pure shift."""

    stage = "relations"


class WitnessFailure(RuntimeError):
    """The orbit-2 transport argument failed on a witness."""

    stage = "orbit-2 transport"


class CollapseError(RuntimeError):
    """A verification stage produced something other than the expected collapse."""

    def __init__(self, stage: str, message: str) -> None:
        super().__init__(message)
        self.stage = stage


# frozen expansion of reversed ((w,x),(y,z)) at tags (1,1,1,2):
# constant -t, then coefficients t^2, t^3, t, -t^3 on w, x, y, z
LHS_CONSTANT = RingElem(-1, 0)
LHS_COEFFS = {
    "w": RingElem(0, 1),
    "x": RingElem(1, -1),
    "y": RingElem(1, 0),
    "z": RingElem(-1, 1),
}


def _theorem_points():
    w = SymPoint(1, AffineExpr.var("w"))
    x = SymPoint(1, AffineExpr.var("x"))
    y = SymPoint(1, AffineExpr.var("y"))
    z = SymPoint(2, AffineExpr.var("z"))
    return w, x, y, z


def _require_expansion(out: SymPoint, constant: RingElem,
                       coeffs: Mapping[str, RingElem], label: str) -> None:
    if out.orbit != 1:
        raise ExpansionMismatch(f"{label}: expected orbit 1, got {out.orbit}")
    if out.expr.constant != constant:
        raise ExpansionMismatch(
            f"{label}: constant {out.expr.constant} != expected {constant}")
    if out.expr.coeffs != {v: c for v, c in coeffs.items()}:
        raise ExpansionMismatch(
            f"{label}: coefficients {out.expr.coeffs} != expected {coeffs}")


def expand_lhs() -> SymPoint:
    """Symbolic reversed ((w,x),(y,z)) with tags (1,1,1,2), coefficient-checked."""
    w, x, y, z = _theorem_points()
    out = reversed_op(reversed_op(w, x), reversed_op(y, z))
    _require_expansion(out, LHS_CONSTANT, LHS_COEFFS, "lhs")
    return out


def expand_rhs() -> SymPoint:
    """The medial partner term reversed ((w,y),(x,z)): x and y swap coefficients."""
    w, x, y, z = _theorem_points()
    out = reversed_op(reversed_op(w, y), reversed_op(x, z))
    swapped = dict(LHS_COEFFS, x=LHS_COEFFS["y"], y=LHS_COEFFS["x"])
    _require_expansion(out, LHS_CONSTANT, swapped, "rhs")
    return out


def shift_gap() -> AffineExpr:
    """lhs - rhs as an affine expression; equals (t^3 - t)*(x - y)."""
    return expand_lhs().expr - expand_rhs().expr


def derive_relation(assignment: Mapping[str, AffineExpr | RingElem]) -> RingElem:
    """Shift s forced by equating the two medial sides under a substitution.

    The assignment must cover w, x, y, z with expressions affine in the
    single parameter 'a'.  The parameter has to cancel between the two
    sides -- otherwise the forced relation is not a uniform shift and
    NonUniformRelation is raised.  Returns s with  v ~ v + s  forced on
    orbit 1.
    """
    extra_keys = set(assignment) - set(VARS)
    if extra_keys:
        raise ValueError(f"unknown assignment keys {sorted(extra_keys)}")
    normalized: dict[str, AffineExpr] = {}
    for name in VARS:
        if name not in assignment:
            raise ValueError(f"assignment missing {name!r}")
        expr = assignment[name]
        if isinstance(expr, RingElem):
            expr = AffineExpr.const(expr)
        stray = set(expr.variables()) - {PARAM}
        if stray:
            raise ValueError(
                f"assignment for {name!r} uses {sorted(stray)}; only {PARAM!r} is allowed")
        normalized[name] = expr
    gap = (expand_rhs().expr.substitute(normalized)
           - expand_lhs().expr.substitute(normalized))
    residual = gap.coeffs.get(PARAM)
    if residual is not None:
        raise NonUniformRelation(
            f"parameter does not cancel; residual coefficient {residual}")
    return gap.constant


def relation_assignments() -> list[dict[str, AffineExpr]]:
    """The two canonical substitutions; their shifts are t^2 and -1."""
    t_inv3 = ONE.scale_t(-3)
    first = {
        "w": AffineExpr.const(ONE),
        "x": AffineExpr.const(ONE),
        "y": AffineExpr.const(ZERO),
        "z": AffineExpr.var(PARAM, -t_inv3),
    }
    second = {
        "w": AffineExpr.const(ZERO),
        "x": AffineExpr.const(ZERO),
        "y": AffineExpr.const(ONE.scale_t(-2)),
        "z": AffineExpr(t_inv3, {PARAM: -t_inv3}),  # -t^(-3) * (a - 1)
    }
    return [first, second]


def combine_shifts(s1: RingElem, s2: RingElem) -> list[RingElem]:
    """Composition chain of two shift relations: s1, s2, their sum, and the
    sum's inverse.  For the canonical shifts t^2 and -1 the inverted sum is
    the shift t, the intermediate step of the collapse; the lattice closure
    subsumes the chain, which is kept for the report."""
    total = s1 + s2
    return [s1, s2, total, -total]


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with g = a*x + b*y and g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


@dataclass(frozen=True)
class CollapseLattice:
    """Subgroup of Z^2 spanned by shift vectors, in column Hermite form.

    hnf is ((a, b), (0, c)): basis columns (a, 0) and (b, c) with a, c >= 0
    and 0 <= b < a when both are positive.  index is a*c for rank 2 and None
    (infinite) otherwise.  basis_combinations expresses each basis column as
    an integer combination of the generators, giving a checkable certificate
    for one inclusion; contains() decides the other.
    """

    generators: tuple[RingElem, ...]
    hnf: tuple[tuple[int, int], tuple[int, int]]
    rank: int
    index: int | None
    basis_combinations: tuple[tuple[int, ...], tuple[int, ...]]

    def basis_columns(self) -> tuple[tuple[int, int], tuple[int, int]]:
        (a, b), (_, c) = self.hnf
        return (a, 0), (b, c)

    def contains(self, value) -> bool:
        if isinstance(value, RingElem):
            p, q = value.n1, value.n2
        else:
            p, q = int(value[0]), int(value[1])
        (a, b), (_, c) = self.hnf
        if c:
            if q % c:
                return False
            p -= (q // c) * b
        elif q:
            return False
        if a:
            return p % a == 0
        return p == 0


def _verify_lattice(lattice: CollapseLattice) -> None:
    # mutual membership: generators inside the basis span, and each basis
    # column an explicit integer combination of the generators
    for g in lattice.generators:
        if not lattice.contains(g):
            raise AssertionError(f"generator {g} escapes its own lattice")
    for col, comb in zip(lattice.basis_columns(), lattice.basis_combinations):
        sx = sum(k * g.n1 for k, g in zip(comb, lattice.generators))
        sy = sum(k * g.n2 for k, g in zip(comb, lattice.generators))
        if (sx, sy) != col:
            raise AssertionError(f"combination certificate broken for column {col}")


def hnf_close(shifts: Sequence[RingElem]) -> CollapseLattice:
    """Column Hermite form of the subgroup of Z^2 generated by the shifts."""
    gens = tuple(shifts)
    m = len(gens)

    def combo(alpha, u, beta, v):
        return [alpha * u[0] + beta * v[0],
                alpha * u[1] + beta * v[1],
                [alpha * cu + beta * cv for cu, cv in zip(u[2], v[2])]]

    carrier = None  # the single basis vector allowed a nonzero second coordinate
    firsts = []     # vectors already reduced to the first axis
    for i, g in enumerate(gens):
        if not (g.n1 or g.n2):
            continue
        unit = [0] * m
        unit[i] = 1
        vec = [g.n1, g.n2, unit]
        if vec[1] == 0:
            firsts.append(vec)
        elif carrier is None:
            carrier = vec
        else:
            g2, alpha, beta = _xgcd(carrier[1], vec[1])
            merged = combo(alpha, carrier, beta, vec)
            for old in (carrier, vec):
                reduced = combo(1, old, -(old[1] // g2), merged)
                if reduced[0]:
                    firsts.append(reduced)
            carrier = merged

    a_val, a_comb = 0, [0] * m
    for vec in firsts:
        g2, alpha, beta = _xgcd(a_val, vec[0])
        a_comb = [alpha * ca + beta * cv for ca, cv in zip(a_comb, vec[2])]
        a_val = g2

    if carrier is not None and carrier[1] < 0:
        carrier = combo(-1, carrier, 0, carrier)
    b_val, c_val = (carrier[0], carrier[1]) if carrier else (0, 0)
    b_comb = carrier[2] if carrier else [0] * m
    if a_val and c_val:
        k = b_val // a_val  # floor keeps 0 <= b < a
        b_val -= k * a_val
        b_comb = [cb - k * ca for cb, ca in zip(b_comb, a_comb)]

    rank = (1 if a_val else 0) + (1 if c_val else 0)
    index = a_val * c_val if rank == 2 else None
    lattice = CollapseLattice(gens, ((a_val, b_val), (0, c_val)), rank, index,
                              (tuple(a_comb), tuple(b_comb)))
    _verify_lattice(lattice)
    return lattice


def orbit2_collapse(sample_count: int, rng: random.Random | None = None) -> int:
    """Class count for orbit 2 once orbit 1 has collapsed (always 1).

    The witness identity op(zero-of-2, t^(-2)*(x+1) in orbit 1) = x-of-2 is
    checked symbolically, then on `sample_count` random values, confirming
    each time that the acting element lies in orbit 1 and that the reversed
    structure applies the very same translation.
    """
    x = AffineExpr.var("x")
    witness = SymPoint(1, ONE.scale_t(-2) * (x + ONE))
    base = SymPoint(2, AffineExpr.const(ZERO))
    if op(base, witness) != SymPoint(2, x):
        raise WitnessFailure("symbolic witness identity failed")

    rng = rng if rng is not None else random.Random(0)
    zero2 = Point(2, ZERO)
    for _ in range(sample_count):
        value = random_elem(rng)
        wit = _orbit_witness(value, 2)
        if wit.orbit != 1:
            raise WitnessFailure(f"witness for {value} left orbit 1")
        plain = op(zero2, wit)
        if plain != Point(2, value):
            raise WitnessFailure(f"witness for {value} does not reach it")
        if reversed_op(zero2, wit) != plain:
            raise WitnessFailure(
                f"translation by {wit} differs between the two structures")
    return 1


@dataclass(frozen=True)
class CollapseReport:
    lhs_expansion: SymPoint
    relation_shifts: tuple[RingElem, ...]
    shift_chain: tuple[RingElem, ...]
    lattice: CollapseLattice
    orbit1_classes: int
    orbit2_classes: int
    samples: int
    seed: int

    @property
    def lattice_index(self) -> int | None:
        return self.lattice.index

    @property
    def total(self) -> int:
        return self.orbit1_classes + self.orbit2_classes

    def render(self) -> str:
        (a, b), (_, c) = self.lattice.hnf
        index = "infinite" if self.lattice.index is None else str(self.lattice.index)
        lines = [
            "two-element collapse verification",
            f"samples={self.samples} seed={self.seed}",
            "",
            "[expansion] reversed operation on ((w,x),(y,z)) with tags (1,1,1,2)",
            f"  {self.lhs_expansion}",
            "[relations] forced identifications on orbit 1 are pure shifts",
        ]
        for s in self.relation_shifts:
            lines.append(f"  shift {render_pair(s)}")
        lines.append(f"  chain {' '.join(render_pair(s) for s in self.shift_chain)}")
        lines.append("[lattice] subgroup of Z^2 generated by the shifts")
        lines.append("  hnf ((%d, %d), (0, %d)) index=%s" % (a, b, c, index))
        lines.append(f"[orbit 1] classes: {self.orbit1_classes}")
        lines.append(f"[orbit 2] transported through orbit-1 witnesses; classes: "
                     f"{self.orbit2_classes}")
        lines.append("no operation crosses orbit tags, so the two classes stay distinct")
        lines.append(f"total classes: {self.total}")
        return "\n".join(lines) + "\n"


def verify_theorem(samples: int = 200, seed: int = 0) -> CollapseReport:
    """Run the whole pipeline and return the report (total is 2 on success).

    Randomized coherence checks (symbolic expansion vs concrete evaluation,
    the (t^3 - t)*(x - y) gap law, and the orbit-2 witness transport) are
    driven by a generator seeded with `seed`, so output is reproducible.
    """
    rng = random.Random(seed)
    lhs = expand_lhs()
    rhs = expand_rhs()
    gap_coeff = T.scale_t(2) - T  # t^3 - t

    for _ in range(samples):
        values = {v: random_elem(rng) for v in VARS}
        pts = {v: Point(1 if v != "z" else 2, values[v]) for v in VARS}
        conc_l = reversed_op(reversed_op(pts["w"], pts["x"]),
                             reversed_op(pts["y"], pts["z"]))
        conc_r = reversed_op(reversed_op(pts["w"], pts["y"]),
                             reversed_op(pts["x"], pts["z"]))
        if conc_l.orbit != 1 or conc_r.orbit != 1:
            raise CollapseError("expansion", "orbit tag leaked across copies")
        if conc_l.value != lhs.expr.evaluate(values):
            raise CollapseError("expansion",
                                f"concrete lhs disagrees with the expansion at {values}")
        if conc_r.value != rhs.expr.evaluate(values):
            raise CollapseError("expansion",
                                f"concrete rhs disagrees with the expansion at {values}")
        if conc_l.value - conc_r.value != gap_coeff * (values["x"] - values["y"]):
            raise CollapseError("expansion",
                                f"gap law (t^3-t)(x-y) violated at {values}")

    shifts = tuple(derive_relation(asg) for asg in relation_assignments())
    chain = tuple(combine_shifts(shifts[0], shifts[1]))
    lattice = hnf_close(shifts)
    if lattice.index != 1:
        raise CollapseError(
            "lattice",
            f"shift lattice has index {lattice.index}, orbit 1 does not collapse")
    orbit2 = orbit2_collapse(samples, rng)
    return CollapseReport(lhs_expansion=lhs, relation_shifts=shifts,
                          shift_chain=chain, lattice=lattice,
                          orbit1_classes=1, orbit2_classes=orbit2,
                          samples=samples, seed=seed)
