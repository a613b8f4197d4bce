"""Exact integer matrices for mutation combinatorics.

All matrices are square and hold arbitrary-precision Python integers; no
floating point anywhere.  Every public interface uses 1-based indices.  The
raw ``rows`` tuples underneath are 0-based, and the ``*_rows`` module
functions operate on those raw tuples so that search code can skip object
construction in hot loops.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Optional

Rows = tuple  # tuple of equal-length tuples of int


def _as_rows(data: Iterable[Iterable[int]]) -> Rows:
    rows = tuple(tuple(int(v) for v in row) for row in data)
    n = len(rows)
    if n == 0:
        raise ValueError("matrix dimension must be at least 1")
    if any(len(row) != n for row in rows):
        raise ValueError("matrix must be square")
    return rows


@dataclass(frozen=True)
class IntMatrix:
    """Immutable square matrix of Python ints."""

    rows: Rows

    @staticmethod
    def from_rows(data: Iterable[Iterable[int]]) -> "IntMatrix":
        return IntMatrix(_as_rows(data))

    @staticmethod
    def identity(n: int) -> "IntMatrix":
        return IntMatrix(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @staticmethod
    def zero(n: int) -> "IntMatrix":
        return IntMatrix(tuple((0,) * n for _ in range(n)))

    @property
    def n(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> int:
        """Entry b_ij, 1-based."""
        return self.rows[i - 1][j - 1]

    def row(self, i: int) -> tuple:
        return self.rows[i - 1]

    def col(self, j: int) -> tuple:
        j0 = j - 1
        return tuple(r[j0] for r in self.rows)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(tuple(zip(*self.rows)))

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(tuple(tuple(-v for v in row) for row in self.rows))

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        return IntMatrix(tuple(tuple(a + b for a, b in zip(ra, rb))
                               for ra, rb in zip(self.rows, other.rows)))

    def __mul__(self, other: "IntMatrix") -> "IntMatrix":
        cols = tuple(zip(*other.rows))
        return IntMatrix(tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in cols)
                               for row in self.rows))

    def is_identity(self) -> bool:
        return all(v == int(i == j) for i, row in enumerate(self.rows) for j, v in enumerate(row))

    def is_nonpositive(self) -> bool:
        return all(v <= 0 for row in self.rows for v in row)

    def is_nonnegative(self) -> bool:
        return all(v >= 0 for row in self.rows for v in row)

    def max_abs(self) -> int:
        return max(abs(v) for row in self.rows for v in row)

    def det(self) -> int:
        """Exact determinant via fraction-free (Bareiss) elimination."""
        n = self.n
        m = [list(row) for row in self.rows]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                pivot = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
                if pivot is None:
                    return 0
                m[k], m[pivot] = m[pivot], m[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
                m[i][k] = 0
            prev = m[k][k]
        return sign * m[n - 1][n - 1]

    def permuted(self, sigma: "Permutation") -> "IntMatrix":
        """Simultaneous relabeling of rows and columns: entry (i,j) -> (sigma(i),sigma(j))."""
        img = sigma.images
        return IntMatrix(tuple(tuple(self.rows[img[i] - 1][img[j] - 1] for j in range(self.n))
                               for i in range(self.n)))

    def to_json_dict(self) -> dict:
        return {"n": self.n, "rows": [list(row) for row in self.rows]}

    @staticmethod
    def from_json_dict(obj: dict) -> "IntMatrix":
        mat = IntMatrix.from_rows(obj["rows"])
        if "n" in obj and int(obj["n"]) != mat.n:
            raise ValueError("matrix dimension field does not match row data")
        return mat

    def __str__(self) -> str:
        width = max(len(str(v)) for row in self.rows for v in row)
        return "\n".join(" ".join(str(v).rjust(width) for v in row) for row in self.rows)


@dataclass(frozen=True)
class Permutation:
    """Bijection on [1,n], stored as the image tuple (images[j-1] = sigma(j))."""

    images: tuple

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of [1,{n}]: {self.images}")

    @staticmethod
    def identity(n: int) -> "Permutation":
        return Permutation(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, j: int) -> int:
        return self.images[j - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for j, img in enumerate(self.images, start=1):
            inv[img - 1] = j
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(img == j for j, img in enumerate(self.images, start=1))

    def matrix(self) -> IntMatrix:
        """Permutation matrix whose j-th column is e_{sigma(j)}."""
        n = self.n
        return IntMatrix(tuple(tuple(int(self.images[j] == i + 1) for j in range(n))
                               for i in range(n)))


@dataclass(frozen=True)
class DirectedGraph:
    """Simple directed graph on vertices 1..n."""

    n: int
    edges: frozenset

    def is_acyclic(self) -> bool:
        indeg = {v: 0 for v in range(1, self.n + 1)}
        out = {v: [] for v in range(1, self.n + 1)}
        for i, j in self.edges:
            indeg[j] += 1
            out[i].append(j)
        stack = [v for v in indeg if indeg[v] == 0]
        seen = 0
        while stack:
            v = stack.pop()
            seen += 1
            for w in out[v]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    stack.append(w)
        return seen == self.n


def mutate_rows(rows: Rows, k0: int) -> Rows:
    """Matrix mutation in direction k0 (0-based) on raw row tuples.

    Entries in row/column k0 are negated; elsewhere the update term
    (|b_ik|*b_kj + b_ik*|b_kj|)/2 is added.  The division is always exact:
    the two products agree up to sign, so their sum is even.
    """
    rowk = rows[k0]
    out = []
    for i, rowi in enumerate(rows):
        if i == k0:
            out.append(tuple(-v for v in rowi))
            continue
        bik = rowi[k0]
        if bik == 0:
            out.append(tuple(-v if j == k0 else v for j, v in enumerate(rowi)))
            continue
        abik = abs(bik)
        new = []
        for j, v in enumerate(rowi):
            if j == k0:
                new.append(-v)
            else:
                bkj = rowk[j]
                new.append(v + (abik * bkj + bik * abs(bkj)) // 2)
        out.append(tuple(new))
    return tuple(out)


def mutate_matrix(B: IntMatrix, k: int) -> IntMatrix:
    """Mutation of B in direction k (1-based).  Involutive: applying twice restores B."""
    if not 1 <= k <= B.n:
        raise IndexError(f"direction {k} out of range [1,{B.n}]")
    return IntMatrix(mutate_rows(B.rows, k - 1))


def is_sign_skew_symmetric(B: IntMatrix) -> bool:
    """True iff for all i,j either b_ij*b_ji < 0 or b_ij = b_ji = 0."""
    rows = B.rows
    n = B.n
    for i in range(n):
        if rows[i][i] != 0:
            return False
        for j in range(i + 1, n):
            a, b = rows[i][j], rows[j][i]
            if not (a * b < 0 or (a == 0 and b == 0)):
                return False
    return True


def skew_symmetrizer(B: IntMatrix) -> Optional[tuple]:
    """Smallest positive integer diagonal D with d_i*b_ij = -d_j*b_ji, or None.

    Ratios d_j/d_i = -b_ij/b_ji are propagated over a spanning forest of the
    nonzero-entry graph with exact rationals, then every remaining constraint
    is checked.
    """
    if not is_sign_skew_symmetric(B):
        raise ValueError("skew symmetrizers are only defined for sign-skew-symmetric matrices")
    n = B.n
    rows = B.rows
    ratio: list = [None] * n
    for root in range(n):
        if ratio[root] is not None:
            continue
        component = [root]
        ratio[root] = Fraction(1)
        stack = [root]
        while stack:
            i = stack.pop()
            for j in range(n):
                if rows[i][j] != 0 and ratio[j] is None:
                    ratio[j] = ratio[i] * Fraction(-rows[i][j], rows[j][i])
                    component.append(j)
                    stack.append(j)
        # rescale this component to smallest positive integers
        denom_lcm = 1
        for i in component:
            d = ratio[i].denominator
            denom_lcm = denom_lcm * d // gcd(denom_lcm, d)
        nums = [ratio[i] * denom_lcm for i in component]
        g = 0
        for v in nums:
            g = gcd(g, int(v))
        for i, v in zip(component, nums):
            ratio[i] = Fraction(int(v) // g)
    d = [int(r) for r in ratio]
    for i in range(n):
        for j in range(n):
            if d[i] * rows[i][j] != -d[j] * rows[j][i]:
                return None
    return tuple(d)


def gamma_graph(B: IntMatrix) -> DirectedGraph:
    """Directed graph with an edge i -> j iff b_ij > 0."""
    edges = frozenset((i + 1, j + 1)
                      for i, row in enumerate(B.rows)
                      for j, v in enumerate(row) if v > 0)
    return DirectedGraph(B.n, edges)


def is_acyclic(B: IntMatrix) -> bool:
    return gamma_graph(B).is_acyclic()


def is_source(B: IntMatrix, j: int) -> bool:
    """True iff b_ji >= 0 for all i (row j nonnegative)."""
    return all(v >= 0 for v in B.row(j))


def is_sink(B: IntMatrix, j: int) -> bool:
    """True iff b_ji <= 0 for all i (row j nonpositive)."""
    return all(v <= 0 for v in B.row(j))


def admissible_source_sequence(B: IntMatrix) -> Optional[tuple]:
    """Permutation (j_1..j_n) with each j_k a source of the matrix mutated at
    j_1..j_{k-1}, smallest available index first; None when B is not acyclic."""
    if not is_sign_skew_symmetric(B):
        raise ValueError("admissible source sequences require a sign-skew-symmetric matrix")
    if not is_acyclic(B):
        return None
    cur = B
    remaining = set(range(1, B.n + 1))
    order = []
    while remaining:
        j = min(i for i in remaining if is_source(cur, i))
        order.append(j)
        remaining.remove(j)
        cur = mutate_matrix(cur, j)
    return tuple(order)


def submatrix(B: IntMatrix, V: Iterable[int]) -> tuple:
    """Submatrix induced by the index set V, plus the map old index -> new index.

    Rows/columns outside V are deleted; relative order is preserved.
    """
    keep = sorted(set(V))
    if not keep:
        raise ValueError("index set must be nonempty")
    if keep[0] < 1 or keep[-1] > B.n:
        raise IndexError(f"index set {keep} not contained in [1,{B.n}]")
    sub = IntMatrix(tuple(tuple(B.rows[i - 1][j - 1] for j in keep) for i in keep))
    index_map = {old: new for new, old in enumerate(keep, start=1)}
    return sub, index_map


def positive_part_row(A: IntMatrix, j: int) -> IntMatrix:
    """Matrix whose only nonzero row is row j, holding the positive parts of row j of A."""
    if not 1 <= j <= A.n:
        raise IndexError(f"row {j} out of range [1,{A.n}]")
    n = A.n
    j0 = j - 1
    return IntMatrix(tuple(tuple(max(v, 0) for v in A.rows[i]) if i == j0 else (0,) * n
                           for i in range(n)))


def signed_diagonal(n: int, j: int) -> IntMatrix:
    """Diagonal matrix J_j: all ones except -1 in position j."""
    if not 1 <= j <= n:
        raise IndexError(f"index {j} out of range [1,{n}]")
    return IntMatrix(tuple(tuple((-1 if i == j - 1 else 1) * int(i == c) for c in range(n))
                           for i in range(n)))


def perm_matrix(sigma: Permutation) -> IntMatrix:
    return sigma.matrix()
