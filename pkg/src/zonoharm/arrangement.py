"""Vector arrangements: labeled integer vectors spanning Z^r.

Covers total unimodularity (brute-force subdeterminants at desk scale),
loops/coloops, deletion and contraction, cocircuit enumeration via corank-1
column subsets, the zonotope's facet description, and the interior lattice
points obtained from it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from .errors import (
    IsColoopError,
    IsLoopError,
    NotTotallyUnimodularError,
    SizeExceededError,
)
from .linalg import Mat, det, kernel_basis, primitive_vector, rank, xgcd

TU_MAX_RANK = 6
TU_MAX_GROUND = 12


@dataclass(frozen=True)
class VectorArrangement:
    """A finite labeled family of columns in Z^r whose image spans Q^r.

    ``tu`` is a tri-state flag: True when total unimodularity has been
    verified or is guaranteed by construction, False when refuted, None when
    unknown.
    """

    lattice_rank: int
    ground: tuple
    columns: Mat
    tu: bool | None = None

    def __post_init__(self):
        if self.columns.rows != self.lattice_rank or self.columns.cols != len(self.ground):
            raise ValueError("column matrix shape does not match rank and ground set")
        if len(set(self.ground)) != len(self.ground):
            raise ValueError("duplicate ground set labels")
        if rank(self.columns) != self.lattice_rank:
            raise ValueError("columns do not span the ambient lattice")

    @property
    def size(self) -> int:
        return len(self.ground)

    def index_of(self, label) -> int:
        return self.ground.index(label)

    def column(self, label) -> tuple:
        return self.columns.col(self.index_of(label))


@dataclass(frozen=True)
class Cocircuit:
    """A primitive covector of minimal support, with its sign counts.

    ``values[i]`` is the pairing with the i-th ground element; for totally
    unimodular inputs these lie in {-1, 0, 1}.
    """

    covector: tuple
    values: tuple
    d_plus: int
    d_minus: int

    @property
    def degree(self) -> int:
        return self.d_plus + self.d_minus

    def support(self, ground) -> tuple:
        return tuple(a for a, v in zip(ground, self.values) if v)


@dataclass(frozen=True)
class LatticePointSet:
    """A finite set of lattice points, stored in lexicographic order."""

    points: tuple

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(sorted(tuple(p) for p in self.points)))

    def __len__(self):
        return len(self.points)

    def __contains__(self, p):
        return tuple(p) in set(self.points)

    def index_map(self) -> dict:
        return {p: i for i, p in enumerate(self.points)}


def find_violating_minor(va: VectorArrangement):
    """First square subdeterminant outside {-1, 0, 1}, or None.

    Returns (row_indices, ground_labels, determinant) for the offending minor.
    """
    r, n = va.lattice_rank, va.size
    if r > TU_MAX_RANK or n > TU_MAX_GROUND:
        raise SizeExceededError(
            f"brute-force TU check limited to rank {TU_MAX_RANK} and {TU_MAX_GROUND} columns"
        )
    rows = va.columns.row_list()
    for k in range(1, min(r, n) + 1):
        for rsel in combinations(range(r), k):
            for csel in combinations(range(n), k):
                d = det([[rows[i][j] for j in csel] for i in rsel])
                if d not in (-1, 0, 1):
                    return rsel, tuple(va.ground[j] for j in csel), d
    return None


def is_totally_unimodular(va: VectorArrangement) -> bool:
    """True iff every square subdeterminant of the column matrix is in {-1, 0, 1}."""
    return find_violating_minor(va) is None


def loops_and_coloops(va: VectorArrangement):
    """Loops are zero columns; coloops are columns whose removal drops the rank."""
    loops = []
    coloops = []
    full = va.lattice_rank
    cols = va.columns.col_list()
    for i, a in enumerate(va.ground):
        if not any(cols[i]):
            loops.append(a)
            continue
        rest = [c for j, c in enumerate(cols) if j != i]
        if rank(Mat.from_cols(rest, rows=va.lattice_rank)) < full:
            coloops.append(a)
    return tuple(loops), tuple(coloops)


def deletion(va: VectorArrangement, a) -> VectorArrangement:
    """Remove one non-coloop element; the lattice is unchanged."""
    _, coloops = loops_and_coloops(va)
    if a in coloops:
        raise IsColoopError(f"{a!r} is a coloop; deletion would drop the rank")
    idx = va.index_of(a)
    cols = [c for j, c in enumerate(va.columns.col_list()) if j != idx]
    return VectorArrangement(
        lattice_rank=va.lattice_rank,
        ground=tuple(x for x in va.ground if x != a),
        columns=Mat.from_cols(cols, rows=va.lattice_rank),
        tu=va.tu if va.tu else None,
    )


def _completion_transform(v) -> list:
    """Unimodular U (as rows) with U v = e_1, built by sequential xgcd row ops.

    Requires v primitive.  Deterministic, so quotient coordinates are
    reproducible across runs.
    """
    r = len(v)
    col = [int(x) for x in v]
    U = [[1 if i == j else 0 for j in range(r)] for i in range(r)]
    for i in range(1, r):
        if col[i] == 0:
            continue
        g, x, y = xgcd(col[0], col[i])
        a_, b_ = col[0] // g, col[i] // g
        u0, ui = U[0], U[i]
        U[0] = [x * p + y * q for p, q in zip(u0, ui)]
        U[i] = [-b_ * p + a_ * q for p, q in zip(u0, ui)]
        col[0], col[i] = g, 0
    if col[0] < 0:
        U[0] = [-x for x in U[0]]
        col[0] = -col[0]
    if col[0] != 1:
        raise ValueError("column is not primitive")
    return U


def contraction_data(va: VectorArrangement, a):
    """Contraction by a non-loop element plus the quotient map.

    Returns (contracted, transform) where ``transform`` is the unimodular
    matrix U with U * chi(a) = e_1; points map to the quotient by
    z |-> (U z)[1:].
    """
    col = va.column(a)
    if not any(col):
        raise IsLoopError(f"{a!r} is a loop; contraction is undefined")
    U = Mat.from_rows(_completion_transform(col))
    idx = va.index_of(a)
    new_cols = []
    for j, c in enumerate(va.columns.col_list()):
        if j == idx:
            continue
        new_cols.append(U.matvec(c)[1:])
    contracted = VectorArrangement(
        lattice_rank=va.lattice_rank - 1,
        ground=tuple(x for x in va.ground if x != a),
        columns=Mat.from_cols(new_cols, rows=va.lattice_rank - 1),
        tu=va.tu if va.tu else None,
    )
    return contracted, U


def contraction(va: VectorArrangement, a) -> VectorArrangement:
    return contraction_data(va, a)[0]


def quotient_point_map(transform: Mat):
    """Point map z -> z-bar induced by a contraction transform."""

    def bar(z):
        return tuple(transform.matvec(z)[1:])

    return bar


def enumerate_cocircuits(va: VectorArrangement) -> tuple:
    """All cocircuits up to sign, canonicalized and sorted by covector.

    The representative of {a, -a} has positive first nonzero entry.  Raises
    NotTotallyUnimodularError when some pairing falls outside {-1, 0, 1}.
    """
    r, n = va.lattice_rank, va.size
    if r == 0:
        return ()
    cols = va.columns.col_list()
    seen = {}
    for sel in combinations(range(n), r - 1):
        sub = [cols[j] for j in sel]  # rows of the (r-1) x r pairing matrix
        if rank(Mat.from_rows(sub, cols=r)) != r - 1:
            continue
        kern = kernel_basis(Mat.from_rows(sub, cols=r))
        alpha = primitive_vector(kern.col(0))
        if alpha in seen:
            continue
        values = tuple(sum(x * y for x, y in zip(alpha, c)) for c in cols)
        if any(v not in (-1, 0, 1) for v in values):
            raise NotTotallyUnimodularError(
                f"cocircuit {alpha} pairs to {values}; arrangement is not totally unimodular"
            )
        seen[alpha] = Cocircuit(
            covector=alpha,
            values=values,
            d_plus=sum(1 for v in values if v == 1),
            d_minus=sum(1 for v in values if v == -1),
        )
    # supports coming from corank-1 subsets are complements of hyperplanes and
    # hence already minimal; the filter below is a cheap safeguard.
    items = list(seen.values())
    supports = {c.covector: frozenset(i for i, v in enumerate(c.values) if v) for c in items}
    minimal = [
        c
        for c in items
        if not any(
            other is not c and supports[other.covector] < supports[c.covector] for other in items
        )
    ]
    return tuple(sorted(minimal, key=lambda c: c.covector))


def interior_lattice_points(va: VectorArrangement) -> LatticePointSet:
    """Lattice points strictly inside the zonotope of the arrangement.

    Any coloop forces emptiness; in rank 0 the single (empty) point remains.
    Enumeration scans the coordinate bounding box of the zonotope and filters
    by the strict facet inequalities -d_-(a) < <a, z> < d_+(a).
    """
    _, coloops = loops_and_coloops(va)
    if coloops:
        return LatticePointSet(())
    if va.lattice_rank == 0:
        return LatticePointSet(((),))
    cocs = enumerate_cocircuits(va)
    cols = va.columns.col_list()
    lo = [sum(min(0, c[j]) for c in cols) for j in range(va.lattice_rank)]
    hi = [sum(max(0, c[j]) for c in cols) for j in range(va.lattice_rank)]
    pts = []
    for z in product(*(range(a, b + 1) for a, b in zip(lo, hi))):
        ok = True
        for c in cocs:
            s = sum(x * y for x, y in zip(c.covector, z))
            if not (-c.d_minus < s < c.d_plus):
                ok = False
                break
        if ok:
            pts.append(z)
    return LatticePointSet(tuple(pts))
