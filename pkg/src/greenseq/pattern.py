"""Seed triples (B, C, G), their mutation, duality checks, and rebasing.

A seed always travels together with its dual-pattern seed (initial matrix
-B0^T): the second duality and hemisphere tests need the dual G-matrix, and
carrying it costs one extra parallel mutation.  All values are immutable;
mutation returns new objects.

Invariant assertions are toggleable through the ``check`` arguments: they
recompute the C-update through a second, sign-independent route and verify
the duality/sign-coherence laws, which is what the search code switches off
for throughput.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .intmat import (
    IntMatrix,
    Permutation,
    Rows,
    is_sign_skew_symmetric,
    mutate_rows,
    positive_part_row,
    signed_diagonal,
)


class InvariantViolation(RuntimeError):
    """A law the theory guarantees has failed; the state is corrupted."""


class SignCoherenceError(InvariantViolation):
    """A c-vector or G-row is zero or mixes signs."""


@dataclass(frozen=True)
class Seed:
    """Exchange matrix with its C- and G-matrix at one vertex of the mutation tree."""

    B: IntMatrix
    C: IntMatrix
    G: IntMatrix

    @property
    def n(self) -> int:
        return self.B.n

    def to_json_dict(self, with_dual=None) -> dict:
        obj = {"B": self.B.to_json_dict(), "C": self.C.to_json_dict(), "G": self.G.to_json_dict()}
        if with_dual is not None:
            obj["dual"] = with_dual.to_json_dict()
        return obj

    @staticmethod
    def from_json_dict(obj: dict) -> "Seed":
        return Seed(IntMatrix.from_json_dict(obj["B"]),
                    IntMatrix.from_json_dict(obj["C"]),
                    IntMatrix.from_json_dict(obj["G"]))


@dataclass(frozen=True)
class SeedPair:
    """A seed and the seed of the dual pattern at the same tree vertex."""

    seed: Seed
    dual: Seed

    @property
    def n(self) -> int:
        return self.seed.n

    def to_json_dict(self) -> dict:
        return self.seed.to_json_dict(with_dual=self.dual)

    @staticmethod
    def from_json_dict(obj: dict) -> "SeedPair":
        return SeedPair(Seed.from_json_dict(obj), Seed.from_json_dict(obj["dual"]))


@dataclass(frozen=True)
class PatternContext:
    """Initial data of a matrix pattern: B0 and the dual initial matrix -B0^T."""

    B0: IntMatrix

    @property
    def dual_B0(self) -> IntMatrix:
        return -self.B0.transpose()


def col_sign_rows(rows: Rows, k0: int) -> int:
    """Sign of column k0 (0-based); raises unless the column is nonzero and coherent."""
    pos = neg = False
    for row in rows:
        v = row[k0]
        if v > 0:
            pos = True
        elif v < 0:
            neg = True
    if pos and neg:
        raise SignCoherenceError(f"column {k0 + 1} mixes signs")
    if not pos and not neg:
        raise SignCoherenceError(f"column {k0 + 1} is zero")
    return 1 if pos else -1


def row_sign_rows(rows: Rows, k0: int) -> int:
    pos = neg = False
    for v in rows[k0]:
        if v > 0:
            pos = True
        elif v < 0:
            neg = True
    if pos and neg:
        raise SignCoherenceError(f"row {k0 + 1} mixes signs")
    if not pos and not neg:
        raise SignCoherenceError(f"row {k0 + 1} is zero")
    return 1 if pos else -1


def column_sign(C: IntMatrix, k: int) -> int:
    """Sign of the k-th c-vector (column of C), 1-based."""
    if not 1 <= k <= C.n:
        raise IndexError(f"column {k} out of range [1,{C.n}]")
    return col_sign_rows(C.rows, k - 1)


def row_sign(G: IntMatrix, k: int) -> int:
    """Sign of the k-th row of G, 1-based."""
    if not 1 <= k <= G.n:
        raise IndexError(f"row {k} out of range [1,{G.n}]")
    return row_sign_rows(G.rows, k - 1)


def mutate_c_rows(c: Rows, b: Rows, k0: int) -> Rows:
    """C-matrix update in direction k0: column k0 negated, column j gains
    c_k * [eps_k * b_kj]_+ where eps_k is the sign of column k0."""
    eps = col_sign_rows(c, k0)
    rowk = b[k0]
    mult = tuple(max(eps * v, 0) for v in rowk)
    out = []
    for rowi in c:
        cik = rowi[k0]
        if cik == 0:
            out.append(tuple(-v if j == k0 else v for j, v in enumerate(rowi)))
        else:
            out.append(tuple(-v if j == k0 else v + cik * mult[j] for j, v in enumerate(rowi)))
    return tuple(out)


def mutate_c_rows_entrywise(c: Rows, b: Rows, k0: int) -> Rows:
    """Independent route for the C-update: per-entry absolute values instead of
    a global column sign.  Agrees with :func:`mutate_c_rows` exactly when the
    mutated column is sign-coherent, so comparing the two is a corruption trap."""
    rowk = b[k0]
    out = []
    for rowi in c:
        cik = rowi[k0]
        acik = abs(cik)
        new = []
        for j, v in enumerate(rowi):
            if j == k0:
                new.append(-cik)
            else:
                bkj = rowk[j]
                new.append(v + (cik * abs(bkj) + acik * bkj) // 2)
        out.append(tuple(new))
    return tuple(out)


def mutate_g_rows(g: Rows, b: Rows, eps: int, k0: int) -> Rows:
    """G-matrix update in direction k0: only column k0 changes, to
    -g_k + sum_s g_s * [-eps * b_sk]_+ with eps the sign of the mutation's c-vector."""
    mult = tuple(max(-eps * b[s][k0], 0) for s in range(len(b)))
    out = []
    for rowi in g:
        gik = -rowi[k0] + sum(rowi[s] * m for s, m in enumerate(mult) if m)
        out.append(tuple(gik if j == k0 else v for j, v in enumerate(rowi)))
    return tuple(out)


def mutate_g_rows_entrywise(g: Rows, b: Rows, c: Rows, b0: Rows, k0: int) -> Rows:
    """Independent route for the G-update, using the initial exchange matrix:
    column k0 becomes -g_k + sum_s g_s [-b_sk]_+ - sum_s b0_s [-c_sk]_+."""
    n = len(g)
    mb = tuple(max(-b[s][k0], 0) for s in range(n))
    mc = tuple(max(-c[s][k0], 0) for s in range(n))
    out = []
    for i, rowi in enumerate(g):
        gik = -rowi[k0]
        gik += sum(rowi[s] * m for s, m in enumerate(mb) if m)
        gik -= sum(b0[i][s] * m for s, m in enumerate(mc) if m)
        out.append(tuple(gik if j == k0 else v for j, v in enumerate(rowi)))
    return tuple(out)


def initial_seed(B0: IntMatrix) -> SeedPair:
    """Seed pair at the initial vertex: (B0, I, I) and its dual (-B0^T, I, I)."""
    if not is_sign_skew_symmetric(B0):
        raise ValueError("initial exchange matrix must be sign-skew-symmetric")
    I = IntMatrix.identity(B0.n)
    return SeedPair(Seed(B0, I, I), Seed(-B0.transpose(), I, I))


def _mutate_triple(seed: Seed, k0: int) -> Seed:
    eps = col_sign_rows(seed.C.rows, k0)
    b = seed.B.rows
    return Seed(IntMatrix(mutate_rows(b, k0)),
                IntMatrix(mutate_c_rows(seed.C.rows, b, k0)),
                IntMatrix(mutate_g_rows(seed.G.rows, b, eps, k0)))


def _check_mutation_routes(seed: Seed, new: Seed, k0: int, b0: Optional[IntMatrix]) -> None:
    if new.C.rows != mutate_c_rows_entrywise(seed.C.rows, seed.B.rows, k0):
        raise InvariantViolation("C-update routes disagree (sign-coherence corrupted)")
    if b0 is not None:
        alt = mutate_g_rows_entrywise(seed.G.rows, seed.B.rows, seed.C.rows, b0.rows, k0)
        if new.G.rows != alt:
            raise InvariantViolation("G-update routes disagree (first duality corrupted)")


def mutate_seed(sp: SeedPair, k: int, b0: Optional[IntMatrix] = None,
                check: bool = True) -> SeedPair:
    """Mutate a seed pair in direction k (1-based); the dual mutates in the
    same direction with its own matrices.

    With ``check`` on, the C-update is recomputed through the entrywise route
    and compared, the dual C-column sign is compared with the primary one, and
    when ``b0`` is supplied the G-update is cross-checked against the route
    that uses the initial matrix.
    """
    n = sp.n
    if not 1 <= k <= n:
        raise IndexError(f"direction {k} out of range [1,{n}]")
    k0 = k - 1
    if check and col_sign_rows(sp.seed.C.rows, k0) != col_sign_rows(sp.dual.C.rows, k0):
        raise InvariantViolation(f"column {k} signs differ between pattern and dual pattern")
    new_seed = _mutate_triple(sp.seed, k0)
    new_dual = _mutate_triple(sp.dual, k0)
    if check:
        _check_mutation_routes(sp.seed, new_seed, k0, b0)
        _check_mutation_routes(sp.dual, new_dual, k0, -b0.transpose() if b0 is not None else None)
    return SeedPair(new_seed, new_dual)


def check_first_duality(sp: SeedPair, B0: IntMatrix) -> bool:
    """G_t * B_t == B0 * C_t, exactly."""
    return sp.seed.G * sp.seed.B == B0 * sp.seed.C


def check_second_duality(sp: SeedPair) -> bool:
    """dual-G^T * C == I, exactly."""
    return (sp.dual.G.transpose() * sp.seed.C).is_identity()


def assert_seed_invariants(sp: SeedPair, B0: IntMatrix) -> None:
    """Full debug battery: sign-coherence, both dualities, dual agreement,
    unit-column correspondence, and unimodularity.  Raises on any breach."""
    seed, dual = sp.seed, sp.dual
    n = sp.n
    if dual.B != -seed.B.transpose():
        raise InvariantViolation("dual exchange matrix is not -B^T")
    for k in range(n):
        cs = col_sign_rows(seed.C.rows, k)
        if cs != col_sign_rows(dual.C.rows, k):
            raise InvariantViolation(f"column {k + 1} sign differs from the dual pattern")
        row_sign_rows(seed.G.rows, k)
        row_sign_rows(dual.G.rows, k)
        if _unit_col(seed.C, k) != _unit_col(dual.C, k):
            raise InvariantViolation(f"unit-column correspondence fails at column {k + 1}")
    if not check_first_duality(sp, B0):
        raise InvariantViolation("first duality G*B == B0*C fails")
    if not check_second_duality(sp):
        raise InvariantViolation("second duality dual-G^T * C == I fails")
    if abs(seed.C.det()) != 1 or abs(seed.G.det()) != 1:
        raise InvariantViolation("C or G is not unimodular")


def _unit_col(M: IntMatrix, k0: int) -> Optional[tuple]:
    """(j, sign) when column k0 is sign*e_j (1-based j), else None."""
    hit = None
    for i, row in enumerate(M.rows):
        v = row[k0]
        if v == 0:
            continue
        if hit is not None or abs(v) != 1:
            return None
        hit = (i + 1, v)
    return hit


def unit_column(M: IntMatrix, k: int) -> Optional[tuple]:
    """(j, sign) when the k-th column equals sign*e_j; None otherwise.  1-based."""
    return _unit_col(M, k - 1)


def rebase_c_matrix(sp: SeedPair, j: int, B0: IntMatrix, check: bool = True) -> IntMatrix:
    """C-matrix of the same vertex re-expressed in the pattern whose initial
    vertex is the j-mutation of the original one:

        C' = (J_j + [-eps_j(G) * B0]_+^{j.}) * C

    where eps_j(G) is the sign of row j of the primary G-matrix.
    """
    n = sp.n
    if not 1 <= j <= n:
        raise IndexError(f"direction {j} out of range [1,{n}]")
    eps = row_sign(sp.seed.G, j)
    if check and eps != row_sign(sp.dual.G, j):
        raise InvariantViolation(f"row {j} signs differ between G and dual G")
    scaled = IntMatrix(tuple(tuple(-eps * v for v in row) for row in B0.rows))
    M = signed_diagonal(n, j) + positive_part_row(scaled, j)
    return M * sp.seed.C


def is_nonpositive_C(C: IntMatrix) -> Optional[Permutation]:
    """When C <= 0 entrywise, decode it as -P_sigma and return sigma; None when
    some entry is positive.  A nonpositive C that is not exactly a negated
    permutation matrix is an invariant breach and raises."""
    if not C.is_nonpositive():
        return None
    sigma = decode_signed_permutation(C, -1)
    if sigma is None:
        raise InvariantViolation("nonpositive C-matrix is not a negated permutation matrix")
    return sigma


def decode_signed_permutation(C: IntMatrix, sign: int) -> Optional[Permutation]:
    """sigma with C == sign * P_sigma, or None when C has any other shape."""
    n = C.n
    images = []
    for j in range(n):
        hit = _unit_col(C, j)
        if hit is None or hit[1] != sign:
            return None
        images.append(hit[0])
    if sorted(images) != list(range(1, n + 1)):
        return None
    return Permutation(tuple(images))


def hemisphere(sp: SeedPair, j: int) -> int:
    """+1 or -1: which j-semisphere the vertex lies in (the sign of row j of
    the dual G-matrix)."""
    return row_sign(sp.dual.G, j)
