"""Cocircuit ideal generators and truncated quotient dimensions.

Each cocircuit a contributes two generators: the shifted binomial
C(<a, x> + d_-(a) - 1, d(a) - 1), which vanishes identically on the interior
lattice points, and the pure power a^(d(a)-1), which cuts out the graded
quotient over Q.  The graded quotient dimensions are computed degree by
degree with exact linear algebra over the monomial basis; no symbolic ideal
machinery is involved.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .arrangement import Cocircuit, VectorArrangement, enumerate_cocircuits
from .errors import SizeExceededError
from .funcspace import binom_int, graded_exponents_up_to
from .harmonics import iz_hilbert_series
from .linalg import Mat, rank

SYM_DEGREE_DIM_CAP = 3000


@dataclass(frozen=True)
class IdealGenerator:
    """One generator attached to a cocircuit.

    ``binomial_shift`` kind: C(<covector, x> + shift, degree) with
    shift = d_-(a) - 1;  ``pure_power`` kind: <covector, x> ** degree, with
    degree = d(a) - 1 in both cases.
    """

    kind: str
    cocircuit: Cocircuit
    shift: int
    degree: int

    def describe(self) -> str:
        lin = "+".join(
            f"{c}*x{j + 1}" for j, c in enumerate(self.cocircuit.covector) if c
        ).replace("+-", "-")
        if self.kind == "binomial_shift":
            s = f"{self.shift:+d}" if self.shift else ""
            return f"C({lin}{s}, {self.degree})"
        return f"({lin})^{self.degree}"

    def evaluate(self, point) -> int:
        s = sum(c * x for c, x in zip(self.cocircuit.covector, point))
        if self.kind == "binomial_shift":
            return binom_int(s + self.shift, self.degree)
        return s**self.degree


def k_minus_generators(va: VectorArrangement, cocircuits=None) -> tuple:
    """Shifted-binomial generators, one per canonical cocircuit."""
    if cocircuits is None:
        cocircuits = enumerate_cocircuits(va)
    return tuple(
        IdealGenerator(
            kind="binomial_shift",
            cocircuit=c,
            shift=c.d_minus - 1,
            degree=c.degree - 1,
        )
        for c in cocircuits
    )


def pure_power_generators(va: VectorArrangement, cocircuits=None) -> tuple:
    if cocircuits is None:
        cocircuits = enumerate_cocircuits(va)
    return tuple(
        IdealGenerator(kind="pure_power", cocircuit=c, shift=0, degree=c.degree - 1)
        for c in cocircuits
    )


def verify_vanishing(generators, points) -> bool:
    """Every shifted-binomial generator is zero at every interior point."""
    pts = points.points if hasattr(points, "points") else points
    for g in generators:
        if g.kind != "binomial_shift":
            continue
        for p in pts:
            if g.evaluate(p) != 0:
                return False
    return True


def _power_expansion(covector, e: int, r: int) -> dict:
    """Monomial coefficients of (<covector, x>)^e as {exponents: coeff}."""
    out: dict = {}
    for exps in graded_exponents_up_to(r, e):
        if sum(exps) != e:
            continue
        coeff = factorial(e)
        for k in exps:
            coeff //= factorial(k)
        for a, k in zip(covector, exps):
            if k:
                coeff *= a**k
        if coeff:
            out[exps] = coeff
    return out


def _quotient_dim_at_degree(va, cocircuits, degree: int) -> int:
    r = va.lattice_rank
    monos = [e for e in graded_exponents_up_to(r, degree) if sum(e) == degree]
    dim = len(monos)
    if dim > SYM_DEGREE_DIM_CAP:
        raise SizeExceededError(
            f"degree-{degree} symmetric power has dimension {dim} > {SYM_DEGREE_DIM_CAP}"
        )
    if dim == 0:
        return 0
    index = {e: i for i, e in enumerate(monos)}
    rows = []
    for c in cocircuits:
        e = c.degree - 1
        if e > degree:
            continue
        expansion = _power_expansion(c.covector, e, r)
        for shift_exps in graded_exponents_up_to(r, degree - e):
            if sum(shift_exps) != degree - e:
                continue
            row = [0] * dim
            for exps, coeff in expansion.items():
                total = tuple(a + b for a, b in zip(exps, shift_exps))
                row[index[total]] += coeff
            rows.append(row)
    if not rows:
        return dim
    return dim - rank(Mat.from_rows(rows, cols=dim))


def power_ideal_quotient_dims(va: VectorArrangement, bound: int | None = None) -> tuple:
    """Graded dimensions of Sym modulo the pure cocircuit powers, up to a bound.

    The default bound is one past the length suggested by the Tutte series, so
    the expected trailing zero is verified rather than assumed.
    """
    cocircuits = enumerate_cocircuits(va)
    if bound is None:
        bound = len(iz_hilbert_series(va))
    return tuple(_quotient_dim_at_degree(va, cocircuits, d) for d in range(bound + 1))


def redundant_generators(va: VectorArrangement, bound: int | None = None) -> tuple:
    """Indices of cocircuit generators implied by the others, degree by degree.

    Generator g is implied when dropping it leaves every truncated-degree
    quotient dimension unchanged.  No minimality claim: the remaining set may
    itself contain further implications.
    """
    cocircuits = enumerate_cocircuits(va)
    if bound is None:
        bound = len(iz_hilbert_series(va))
    full = tuple(_quotient_dim_at_degree(va, cocircuits, d) for d in range(bound + 1))
    out = []
    for i in range(len(cocircuits)):
        rest = cocircuits[:i] + cocircuits[i + 1 :]
        dims = tuple(_quotient_dim_at_degree(va, rest, d) for d in range(bound + 1))
        if dims == full:
            out.append(i)
    return tuple(out)
