"""Sequence-level calculus over mutation sequences.

Classifies direction sequences by the shape of the final C-matrix, extracts
associated permutations and c-vector traces, applies conjugation and rotation
transforms, computes conjugation differences, restricts sequences to induced
submatrices, and checks the ordering laws of heavy arrow pairs on concrete
sequences.

Positions inside a c-vector trace are 0-based (position k holds the c-vector
consumed by the (k+1)-th mutation); directions themselves are 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .intmat import IntMatrix, Permutation, is_acyclic, is_sign_skew_symmetric, mutate_rows, submatrix
from .pattern import (
    InvariantViolation,
    SeedPair,
    assert_seed_invariants,
    col_sign_rows,
    decode_signed_permutation,
    initial_seed,
    is_nonpositive_C,
    mutate_c_rows,
    mutate_seed,
)


class MutabilityError(RuntimeError):
    """A mutation walk left the sign-skew-symmetric world."""

    def __init__(self, prefix: tuple):
        self.prefix = prefix
        super().__init__(
            f"matrix is no longer sign-skew-symmetric after directions {list(prefix)}")


def _as_dirs(seq: Iterable[int], n: int) -> tuple:
    dirs = tuple(int(k) for k in seq)
    for k in dirs:
        if not 1 <= k <= n:
            raise IndexError(f"direction {k} out of range [1,{n}]")
    return dirs


def _check_rows_sss(rows, prefix: tuple) -> None:
    n = len(rows)
    for i in range(n):
        if rows[i][i] != 0:
            raise MutabilityError(prefix)
        for j in range(i + 1, n):
            a, b = rows[i][j], rows[j][i]
            if not (a * b < 0 or (a == 0 and b == 0)):
                raise MutabilityError(prefix)


def walk_bc(b0: IntMatrix, dirs: Sequence[int]):
    """Fast walk of (B, C) along ``dirs`` from the initial seed.

    Returns (final_b_rows, final_c_rows, cvecs, red_positions); carries no
    G-matrix and no dual, which is all that search and classification need.
    """
    b = b0.rows
    n = len(b)
    c = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    cvecs = []
    reds = []
    for pos, k in enumerate(dirs):
        k0 = k - 1
        cvecs.append(tuple(row[k0] for row in c))
        if col_sign_rows(c, k0) < 0:
            reds.append(pos)
        c = mutate_c_rows(c, b, k0)
        b = mutate_rows(b, k0)
        _check_rows_sss(b, tuple(dirs[:pos + 1]))
    return b, c, tuple(cvecs), frozenset(reds)


@dataclass(frozen=True)
class SequenceTrace:
    """Full record of a mutation walk: every seed pair, the consumed c-vectors,
    and the 0-based positions of red steps."""

    b0: IntMatrix
    dirs: tuple
    seeds: tuple          # m+1 SeedPairs
    cvecs: tuple          # m column tuples
    red_positions: frozenset

    @property
    def m(self) -> int:
        return len(self.dirs)

    @property
    def final(self) -> SeedPair:
        return self.seeds[-1]

    def to_json_dict(self) -> dict:
        return {
            "dirs": list(self.dirs),
            "seeds": [sp.to_json_dict() for sp in self.seeds],
            "cvecs": [list(v) for v in self.cvecs],
            "red_positions": sorted(self.red_positions),
        }


def run_sequence(b0: IntMatrix, seq: Iterable[int], check: bool = True) -> SequenceTrace:
    """Walk ``seq`` from the initial seed of ``b0``, recording everything.

    With ``check`` on, the full invariant battery (dualities, sign coherence,
    dual agreement, unimodularity) runs after every step.
    """
    if not is_sign_skew_symmetric(b0):
        raise ValueError("initial matrix must be sign-skew-symmetric")
    dirs = _as_dirs(seq, b0.n)
    sp = initial_seed(b0)
    seeds = [sp]
    cvecs = []
    reds = []
    for pos, k in enumerate(dirs):
        cvecs.append(sp.seed.C.col(k))
        if col_sign_rows(sp.seed.C.rows, k - 1) < 0:
            reds.append(pos)
        sp = mutate_seed(sp, k, b0=b0 if check else None, check=check)
        _check_rows_sss(sp.seed.B.rows, dirs[:pos + 1])
        if check:
            assert_seed_invariants(sp, b0)
        seeds.append(sp)
    return SequenceTrace(b0, dirs, tuple(seeds), tuple(cvecs), frozenset(reds))


@dataclass(frozen=True)
class SequenceVerdict:
    """Classification of a sequence: reddening / greening / neither, the red
    mutation count, and the associated permutation when one exists."""

    kind: str                       # "reddening" | "greening" | "neither"
    r: int
    perm: Optional[Permutation]

    @property
    def is_maximal_green(self) -> bool:
        return self.kind == "reddening" and self.r == 0

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "r": self.r,
            "perm": list(self.perm.images) if self.perm is not None else None,
        }


def _verdict_from_final(c_rows, red_count: int) -> SequenceVerdict:
    C = IntMatrix(c_rows)
    sigma = is_nonpositive_C(C)
    if sigma is not None:
        return SequenceVerdict("reddening", red_count, sigma)
    sigma = decode_signed_permutation(C, 1)
    if sigma is not None:
        return SequenceVerdict("greening", red_count, sigma)
    return SequenceVerdict("neither", red_count, None)


def classify(b0: IntMatrix, seq: Iterable[int], check: bool = False) -> SequenceVerdict:
    """Verdict for ``seq`` on ``b0``: reddening when the final C-matrix is a
    negated permutation matrix, greening when it is a permutation matrix."""
    dirs = _as_dirs(seq, b0.n)
    if check:
        trace = run_sequence(b0, dirs, check=True)
        return _verdict_from_final(trace.final.seed.C.rows, len(trace.red_positions))
    if not is_sign_skew_symmetric(b0):
        raise ValueError("initial matrix must be sign-skew-symmetric")
    _, c, _, reds = walk_bc(b0, dirs)
    return _verdict_from_final(c, len(reds))


def _unit_vector(vec: tuple) -> Optional[tuple]:
    """(j, sign) when vec == sign * e_j (1-based), else None."""
    hit = None
    for i, v in enumerate(vec):
        if v == 0:
            continue
        if hit is not None or abs(v) != 1:
            return None
        hit = (i + 1, v)
    return hit


@dataclass(frozen=True)
class WellformedReport:
    """Counting diagnostics for a reddening or greening trace."""

    kind: str
    ok: bool
    indices_covered: bool
    length_ok: bool
    plus_counts: tuple      # plus_counts[j-1] = number of c-vectors equal to e_j
    minus_counts: tuple
    messages: tuple

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "ok": self.ok,
            "indices_covered": self.indices_covered,
            "length_ok": self.length_ok,
            "plus_counts": list(self.plus_counts),
            "minus_counts": list(self.minus_counts),
            "messages": list(self.messages),
        }


def check_reddening_wellformed(verdict: SequenceVerdict, trace: SequenceTrace) -> WellformedReport:
    """Counting identities a reddening/greening sequence must satisfy:

    - reddening: every index appears, m >= n, and for each j the c-vector e_j
      occurs exactly once more than -e_j; a maximal green sequence shows each
      e_j exactly once and no -e_j;
    - greening: e_j and -e_j occur equally often.
    """
    if verdict.kind == "neither":
        raise ValueError("counting diagnostics require a reddening or greening sequence")
    n = trace.b0.n
    plus = [0] * n
    minus = [0] * n
    for vec in trace.cvecs:
        hit = _unit_vector(vec)
        if hit is not None:
            j, sign = hit
            if sign > 0:
                plus[j - 1] += 1
            else:
                minus[j - 1] += 1
    messages = []
    indices_covered = True
    length_ok = True
    if verdict.kind == "reddening":
        indices_covered = set(trace.dirs) == set(range(1, n + 1))
        if not indices_covered:
            messages.append("some index never mutated")
        length_ok = trace.m >= n
        if not length_ok:
            messages.append(f"length {trace.m} is below the dimension {n}")
        for j in range(n):
            if plus[j] != minus[j] + 1:
                messages.append(f"e_{j + 1} count {plus[j]} != -e_{j + 1} count {minus[j]} + 1")
        if verdict.r == 0:
            for j in range(n):
                if plus[j] != 1 or minus[j] != 0:
                    messages.append(f"maximal green sequence: e_{j + 1} counts ({plus[j]}, {minus[j]}) != (1, 0)")
    else:
        for j in range(n):
            if plus[j] != minus[j]:
                messages.append(f"e_{j + 1} count {plus[j]} != -e_{j + 1} count {minus[j]}")
    return WellformedReport(verdict.kind, not messages, indices_covered, length_ok,
                            tuple(plus), tuple(minus), tuple(messages))


def conjugate(b0: IntMatrix, seq: Iterable[int], j: int, check: bool = False):
    """Conjugation of a reddening/greening sequence in direction j:
    (j, i_1..i_m, sigma^{-1}(j)).

    Returns the new sequence and the predicted verdict on the j-mutation of
    ``b0``: same kind and permutation, red count one higher.
    """
    n = b0.n
    if not 1 <= j <= n:
        raise IndexError(f"direction {j} out of range [1,{n}]")
    dirs = _as_dirs(seq, n)
    verdict = classify(b0, dirs, check=check)
    if verdict.kind == "neither":
        raise ValueError("conjugation requires a reddening or greening sequence")
    sigma = verdict.perm
    new_seq = (j,) + dirs + (sigma.inverse()(j),)
    prediction = SequenceVerdict(verdict.kind, verdict.r + 1, sigma)
    return new_seq, prediction


def rotate(b0: IntMatrix, seq: Iterable[int], check: bool = False) -> tuple:
    """Rotation of a reddening/greening sequence: (i_2..i_m, sigma^{-1}(i_1)),
    a sequence of the same kind, same red count, and same permutation on the
    i_1-mutation of ``b0``."""
    dirs = _as_dirs(seq, b0.n)
    if not dirs:
        raise ValueError("rotation needs a nonempty sequence")
    verdict = classify(b0, dirs, check=check)
    if verdict.kind == "neither":
        raise ValueError("rotation requires a reddening or greening sequence")
    return dirs[1:] + (verdict.perm.inverse()(dirs[0]),)


@dataclass(frozen=True)
class ConjugationDifference:
    """Red-count gap between a path walked back to the initial vertex and its
    relabeled shadow walked back to a reddening endpoint, both measured in the
    initial pattern."""

    phi: int
    red_count_path: int
    red_count_shadow: int
    sigma: Permutation

    def to_json_dict(self) -> dict:
        return {
            "phi": self.phi,
            "red_count_path": self.red_count_path,
            "red_count_shadow": self.red_count_shadow,
            "sigma": list(self.sigma.images),
        }


def _backward_red_count(b0: IntMatrix, start: Sequence[int], ext: Sequence[int]) -> int:
    """Walk ``start`` then ``ext`` from the initial seed of b0; count, over the
    extension steps, vertices whose just-mutated column is red.  That count is
    the number of red mutations seen when the extension is walked backwards."""
    b = b0.rows
    n = len(b)
    c = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    for k in start:
        k0 = k - 1
        c = mutate_c_rows(c, b, k0)
        b = mutate_rows(b, k0)
    count = 0
    for k in ext:
        k0 = k - 1
        c = mutate_c_rows(c, b, k0)
        b = mutate_rows(b, k0)
        if col_sign_rows(c, k0) < 0:
            count += 1
    return count


def conjugation_difference(b0: IntMatrix, path: Iterable[int], reddening_seq: Iterable[int],
                           alt_reddening_seq: Optional[Iterable[int]] = None,
                           check: bool = False) -> ConjugationDifference:
    """Conjugation difference of the vertex reached by ``path`` from the initial
    vertex, constructed from a reddening sequence of ``b0``.

    The first count walks ``path`` backwards in the initial pattern; the second
    walks the sigma-relabeled path backwards from the shadow vertex reached by
    extending the reddening endpoint with the relabeled path.  When a second
    reddening sequence is supplied the value is recomputed from it and the two
    results must agree.
    """
    n = b0.n
    dirs = _as_dirs(path, n)

    def compute(red_seq) -> ConjugationDifference:
        red_dirs = _as_dirs(red_seq, n)
        verdict = classify(b0, red_dirs, check=check)
        if verdict.kind != "reddening":
            raise ValueError("conjugation differences require a reddening sequence of the initial matrix")
        sigma_inv = verdict.perm.inverse()
        relabeled = tuple(sigma_inv(k) for k in dirs)
        count_path = _backward_red_count(b0, (), dirs)
        count_shadow = _backward_red_count(b0, red_dirs, relabeled)
        return ConjugationDifference(count_path - count_shadow, count_path, count_shadow,
                                     verdict.perm)

    result = compute(reddening_seq)
    if alt_reddening_seq is not None:
        other = compute(alt_reddening_seq)
        if other.phi != result.phi:
            raise InvariantViolation(
                f"conjugation difference depends on the reddening endpoint: "
                f"{result.phi} vs {other.phi}")
    return result


def green_tail(trace: SequenceTrace) -> int:
    """Smallest 0-based position k such that every c-vector from k on is
    nonnegative; equals m when the last step is red."""
    k = trace.m
    for pos in range(trace.m - 1, -1, -1):
        if any(v < 0 for v in trace.cvecs[pos]):
            break
        k = pos
    return k


def restrict_to_submatrix(b0: IntMatrix, seq: Iterable[int], V: Iterable[int],
                          check: bool = False) -> tuple:
    """Direction sequence induced on the submatrix of ``b0`` cut out by V.

    The c-vector trace is filtered to steps supported inside V and projected;
    the projected vectors are then replayed on the submatrix by mutating, at
    each step, the unique column of the current C-matrix matching the target.
    """
    n = b0.n
    keep = sorted(set(int(v) for v in V))
    dirs = _as_dirs(seq, n)
    verdict = classify(b0, dirs, check=check)
    if verdict.kind != "reddening":
        raise ValueError("restriction requires a reddening (or maximal green) sequence")
    sub_b, _ = submatrix(b0, keep)
    keep0 = [v - 1 for v in keep]
    keep_set = set(keep0)

    _, _, cvecs, _ = walk_bc(b0, dirs)
    targets = []
    for vec in cvecs:
        if all(i in keep_set for i, v in enumerate(vec) if v != 0):
            targets.append(tuple(vec[i] for i in keep0))

    b = sub_b.rows
    m = len(keep)
    c = tuple(tuple(int(i == j) for j in range(m)) for i in range(m))
    induced = []
    for step, target in enumerate(targets):
        matches = [j for j in range(m) if tuple(row[j] for row in c) == target]
        if len(matches) != 1:
            raise InvariantViolation(
                f"projected c-vector {target} matches {len(matches)} columns at step {step}")
        k0 = matches[0]
        induced.append(k0 + 1)
        c = mutate_c_rows(c, b, k0)
        b = mutate_rows(b, k0)
    return tuple(induced)


def _heavy_pairs(B: IntMatrix):
    """Ordered pairs (source, target) with b[source][target] > 0 and
    -b[target][source] * b[source][target] >= 4."""
    n = B.n
    pairs = []
    for s in range(1, n + 1):
        for t in range(1, n + 1):
            if s == t:
                continue
            bst = B.entry(s, t)
            bts = B.entry(t, s)
            if bst > 0 and -bts * bst >= 4:
                pairs.append((s, t))
    return pairs


@dataclass(frozen=True)
class PairOrderCheck:
    source: int
    target: int
    first_target: Optional[int]
    first_source: Optional[int]
    ok: bool

    def to_json_dict(self) -> dict:
        return {"source": self.source, "target": self.target,
                "first_target": self.first_target, "first_source": self.first_source,
                "ok": self.ok}


@dataclass(frozen=True)
class OrderReport:
    ok: bool
    vacuous: bool
    checks: tuple

    def to_json_dict(self) -> dict:
        return {"ok": self.ok, "vacuous": self.vacuous,
                "checks": [c.to_json_dict() for c in self.checks]}


def verify_target_before_source(b0: IntMatrix, mgs: Iterable[int],
                                check: bool = False) -> OrderReport:
    """For an acyclic matrix and a maximal green sequence: for every heavy
    arrow pair, the first mutation at the target index precedes the first
    mutation at the source index."""
    if not is_acyclic(b0):
        raise ValueError("this ordering law is stated for acyclic matrices")
    dirs = _as_dirs(mgs, b0.n)
    verdict = classify(b0, dirs, check=check)
    if not verdict.is_maximal_green:
        raise ValueError("the sequence is not a maximal green sequence")
    checks = []
    for source, target in _heavy_pairs(b0):
        first_target = next((pos for pos, k in enumerate(dirs, start=1) if k == target), None)
        first_source = next((pos for pos, k in enumerate(dirs, start=1) if k == source), None)
        ok = first_target is not None and first_source is not None and first_source > first_target
        checks.append(PairOrderCheck(source, target, first_target, first_source, ok))
    return OrderReport(all(c.ok for c in checks), not checks, tuple(checks))


def verify_tbs_cvectors(b0: IntMatrix, seq: Iterable[int], check: bool = False) -> OrderReport:
    """For a reddening sequence: within its green tail, whenever both unit
    c-vectors of a heavy arrow pair appear, the target's one appears first."""
    dirs = _as_dirs(seq, b0.n)
    verdict = classify(b0, dirs, check=check)
    if verdict.kind != "reddening":
        raise ValueError("the sequence is not a reddening sequence")
    _, _, cvecs, _ = walk_bc(b0, dirs)
    tail_start = len(cvecs)
    for pos in range(len(cvecs) - 1, -1, -1):
        if any(v < 0 for v in cvecs[pos]):
            break
        tail_start = pos
    tail = cvecs[tail_start:]

    def first_unit(j):
        want = tuple(int(i == j - 1) for i in range(b0.n))
        return next((pos for pos, vec in enumerate(tail) if vec == want), None)

    checks = []
    for source, target in _heavy_pairs(b0):
        pt = first_unit(target)
        ps = first_unit(source)
        applicable = pt is not None and ps is not None
        ok = (not applicable) or pt < ps
        checks.append(PairOrderCheck(source, target,
                                     None if pt is None else tail_start + pt + 1,
                                     None if ps is None else tail_start + ps + 1,
                                     ok))
    applicable_checks = [c for c in checks if c.first_target is not None and c.first_source is not None]
    return OrderReport(all(c.ok for c in checks), not applicable_checks, tuple(checks))


@dataclass(frozen=True)
class StepFilterCheck:
    position: int
    direction: int
    flagged: tuple
    ok: bool

    def to_json_dict(self) -> dict:
        return {"position": self.position, "direction": self.direction,
                "flagged": list(self.flagged), "ok": self.ok}


@dataclass(frozen=True)
class StepFilterReport:
    ok: bool
    steps: tuple

    def to_json_dict(self) -> dict:
        return {"ok": self.ok, "steps": [s.to_json_dict() for s in self.steps]}


def verify_no_heavy_target_mutation(b0: IntMatrix, seq: Iterable[int]) -> StepFilterReport:
    """Per-step filter behind maximal green sequences: the mutated index may
    never be the source of a heavy arrow pair in the current matrix.  Steps
    violating the filter are flagged; a genuine maximal green sequence flags
    nothing."""
    dirs = _as_dirs(seq, b0.n)
    b = b0.rows
    n = b0.n
    steps = []
    for pos, k in enumerate(dirs):
        k0 = k - 1
        flagged = tuple(i + 1 for i in range(n)
                        if i != k0 and b[k0][i] > 0 and -b[i][k0] * b[k0][i] >= 4)
        steps.append(StepFilterCheck(pos + 1, k, flagged, not flagged))
        b = mutate_rows(b, k0)
    return StepFilterReport(all(s.ok for s in steps), tuple(steps))
