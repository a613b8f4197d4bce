"""Seed mutation, dualities, sign bookkeeping, rebasing."""

from random import Random

import pytest

from greenseq.intmat import IntMatrix, Permutation, mutate_matrix, positive_part_row, signed_diagonal
from greenseq.pattern import (
    InvariantViolation,
    Seed,
    SeedPair,
    SignCoherenceError,
    assert_seed_invariants,
    check_first_duality,
    check_second_duality,
    column_sign,
    decode_signed_permutation,
    hemisphere,
    initial_seed,
    is_nonpositive_C,
    mutate_seed,
    rebase_c_matrix,
    row_sign,
    unit_column,
)

B_STAR = IntMatrix.from_rows([[0, 1, 2], [-1, 0, 1], [-1, -1, 0]])


def random_acyclic(rng: Random, n: int, hi: int = 2) -> IntMatrix:
    order = list(range(n))
    rng.shuffle(order)
    rows = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(a + 1, n):
            if rng.random() < 0.6:
                rows[order[a]][order[b]] = rng.randint(1, hi)
                rows[order[b]][order[a]] = -rng.randint(1, hi)
    return IntMatrix.from_rows(rows)


def walk(sp, dirs, b0=None, check=True):
    for k in dirs:
        sp = mutate_seed(sp, k, b0=b0, check=check)
    return sp


# --- initial seed -------------------------------------------------------------

def test_initial_seed():
    sp = initial_seed(B_STAR)
    I = IntMatrix.identity(3)
    assert sp.seed == Seed(B_STAR, I, I)
    assert sp.dual.B == -B_STAR.transpose()
    assert sp.dual.C == I and sp.dual.G == I
    for k in (1, 2, 3):
        assert column_sign(sp.seed.C, k) == 1
    assert check_first_duality(sp, B_STAR)
    assert check_second_duality(sp)
    with pytest.raises(ValueError):
        initial_seed(IntMatrix.from_rows([[0, 1], [1, 0]]))


# --- seed mutation -------------------------------------------------------------

def test_mutate_seed_frozen_example():
    sp = mutate_seed(initial_seed(B_STAR), 3, b0=B_STAR)
    assert sp.seed.C.rows == ((1, 0, 0), (0, 1, 0), (0, 0, -1))
    assert sp.seed.B.rows == ((0, 1, -2), (-1, 0, -1), (1, 1, 0))
    assert sp.seed.G.rows == ((1, 0, 0), (0, 1, 0), (0, 0, -1))


def test_mutate_seed_involution():
    rng = Random(3)
    for _ in range(40):
        n = rng.randint(1, 5)
        b0 = random_acyclic(rng, n)
        sp = initial_seed(b0)
        sp = walk(sp, [rng.randint(1, n) for _ in range(rng.randint(0, 6))], b0=b0)
        k = rng.randint(1, n)
        assert mutate_seed(mutate_seed(sp, k, b0=b0), k, b0=b0) == sp


def test_full_green_path_reaches_negated_identity():
    sp = walk(initial_seed(B_STAR), (3, 2, 1), b0=B_STAR)
    assert sp.seed.C == -IntMatrix.identity(3)


def test_invariants_hold_along_random_paths():
    rng = Random(17)
    for _ in range(50):
        n = rng.randint(2, 5)
        b0 = random_acyclic(rng, n)
        sp = initial_seed(b0)
        for _ in range(8):
            k = rng.randint(1, n)
            sp = mutate_seed(sp, k, b0=b0, check=True)
            assert_seed_invariants(sp, b0)
            # re-verify the two dualities by direct arithmetic
            assert sp.seed.G * sp.seed.B == b0 * sp.seed.C
            assert (sp.dual.G.transpose() * sp.seed.C).is_identity()
            for j in range(1, n + 1):
                assert column_sign(sp.seed.C, j) == column_sign(sp.dual.C, j)
                assert unit_column(sp.seed.C, j) == unit_column(sp.dual.C, j)
            assert abs(sp.seed.C.det()) == 1
            assert abs(sp.seed.G.det()) == 1


def test_corrupted_seed_fails_checks():
    sp = walk(initial_seed(B_STAR), (1, 2), b0=B_STAR)
    bad_rows = [list(row) for row in sp.seed.C.rows]
    bad_rows[0][0] += 1
    bad = SeedPair(Seed(sp.seed.B, IntMatrix.from_rows(bad_rows), sp.seed.G), sp.dual)
    assert not check_second_duality(bad)
    with pytest.raises(InvariantViolation):
        assert_seed_invariants(bad, B_STAR)


def test_mutate_seed_rejects_bad_direction():
    sp = initial_seed(B_STAR)
    with pytest.raises(IndexError):
        mutate_seed(sp, 0)
    with pytest.raises(IndexError):
        mutate_seed(sp, 4)


# --- sign functions -------------------------------------------------------------

def test_column_and_row_signs():
    I = IntMatrix.identity(3)
    for k in (1, 2, 3):
        assert column_sign(I, k) == 1
        assert row_sign(I, k) == 1
    P = Permutation((2, 3, 1)).matrix()
    negP = -P
    for k in (1, 2, 3):
        assert column_sign(negP, k) == -1
    D = IntMatrix.from_rows([[1, 0, 0], [0, 1, 0], [0, 0, -1]])
    assert column_sign(D, 3) == -1
    with pytest.raises(SignCoherenceError):
        column_sign(IntMatrix.from_rows([[1, 0], [-1, 0]]), 1)
    with pytest.raises(SignCoherenceError):
        column_sign(IntMatrix.from_rows([[0, 1], [0, 1]]), 1)
    with pytest.raises(IndexError):
        column_sign(I, 4)


# --- rebasing -------------------------------------------------------------------

def test_rebase_at_initial_vertex():
    sp = initial_seed(B_STAR)
    for j in (1, 2, 3):
        got = rebase_c_matrix(sp, j, B_STAR)
        want = signed_diagonal(3, j) + positive_part_row(-B_STAR, j)
        assert got == want


def test_rebase_matches_replayed_pattern():
    # oracle: run the pattern whose initial matrix is the j-mutation and walk
    # (j, path); its C-matrix must equal the rebased one at every prefix
    rng = Random(23)
    for _ in range(40):
        n = rng.randint(2, 5)
        b0 = random_acyclic(rng, n)
        j = rng.randint(1, n)
        path = [rng.randint(1, n) for _ in range(rng.randint(0, 8))]
        b1 = mutate_matrix(b0, j)
        sp = initial_seed(b0)
        sp_new = walk(initial_seed(b1), (j,), b0=b1)
        for k in path:
            assert rebase_c_matrix(sp, j, b0) == sp_new.seed.C
            sp = mutate_seed(sp, k, b0=b0)
            sp_new = mutate_seed(sp_new, k, b0=b1)
        assert rebase_c_matrix(sp, j, b0) == sp_new.seed.C


def test_rebase_is_an_involution_through_the_mutated_pattern():
    # rebasing in the pattern of the mutated initial matrix undoes rebasing
    rng = Random(29)
    for _ in range(30):
        n = rng.randint(2, 4)
        b0 = random_acyclic(rng, n)
        j = rng.randint(1, n)
        b1 = mutate_matrix(b0, j)
        path = tuple(rng.randint(1, n) for _ in range(rng.randint(0, 6)))
        sp0 = walk(initial_seed(b0), path, b0=b0)
        sp1 = walk(initial_seed(b1), (j,) + path, b0=b1)
        assert rebase_c_matrix(sp0, j, b0) == sp1.seed.C
        assert rebase_c_matrix(sp1, j, b1) == sp0.seed.C


def test_rebase_unit_vector_flip():
    # the k-th c-vector equals e_j exactly when the rebased one equals -e_j,
    # and signs change exactly at +-e_j columns
    rng = Random(37)
    flips = 0
    for _ in range(60):
        n = rng.randint(2, 4)
        b0 = random_acyclic(rng, n)
        j = rng.randint(1, n)
        path = tuple(rng.randint(1, n) for _ in range(rng.randint(0, 7)))
        sp = walk(initial_seed(b0), path, b0=b0)
        rebased = rebase_c_matrix(sp, j, b0)
        for k in range(1, n + 1):
            old = sp.seed.C.col(k)
            new = rebased.col(k)
            ej = tuple(int(i == j) for i in range(1, n + 1))
            neg_ej = tuple(-v for v in ej)
            assert (old == ej) == (new == neg_ej)
            assert (old == neg_ej) == (new == ej)
            old_sign = column_sign(sp.seed.C, k)
            new_sign = 1 if all(v >= 0 for v in new) else -1
            if old_sign != new_sign:
                flips += 1
                assert old in (ej, neg_ej)
    assert flips > 0


# --- permutation decoding ---------------------------------------------------------

def test_is_nonpositive_C_examples():
    assert is_nonpositive_C(-IntMatrix.identity(3)).is_identity()
    D = IntMatrix.from_rows([[1, 0, 0], [0, 1, 0], [0, 0, -1]])
    assert is_nonpositive_C(D) is None
    sp = walk(initial_seed(B_STAR), (3, 2, 1), b0=B_STAR)
    assert is_nonpositive_C(sp.seed.C).is_identity()
    with pytest.raises(InvariantViolation):
        is_nonpositive_C(IntMatrix.from_rows([[-2, 0], [0, -1]]))
    with pytest.raises(InvariantViolation):
        is_nonpositive_C(IntMatrix.from_rows([[-1, -1], [0, -1]]))


def test_decode_signed_permutation():
    P = Permutation((3, 1, 2)).matrix()
    assert decode_signed_permutation(P, 1).images == (3, 1, 2)
    assert decode_signed_permutation(-P, -1).images == (3, 1, 2)
    assert decode_signed_permutation(P, -1) is None
    assert decode_signed_permutation(IntMatrix.identity(2) + IntMatrix.identity(2), 1) is None


# --- hemispheres ---------------------------------------------------------------

def test_hemisphere_examples():
    sp = initial_seed(B_STAR)
    for j in (1, 2, 3):
        assert hemisphere(sp, j) == 1
    end = walk(sp, (3, 2, 1), b0=B_STAR)
    for j in (1, 2, 3):
        assert hemisphere(end, j) == -1


def test_hemisphere_crossings_happen_exactly_at_unit_cvectors():
    rng = Random(41)
    for _ in range(40):
        n = rng.randint(2, 4)
        b0 = random_acyclic(rng, n)
        sp = initial_seed(b0)
        for _ in range(8):
            k = rng.randint(1, n)
            cvec = sp.seed.C.col(k)
            nxt = mutate_seed(sp, k, b0=b0)
            for j in range(1, n + 1):
                ej = tuple(int(i == j) for i in range(1, n + 1))
                neg_ej = tuple(-v for v in ej)
                crossed = hemisphere(sp, j) != hemisphere(nxt, j)
                assert crossed == (cvec in (ej, neg_ej))
                if cvec == ej:
                    assert hemisphere(sp, j) == 1 and hemisphere(nxt, j) == -1
                if cvec == neg_ej:
                    assert hemisphere(sp, j) == -1 and hemisphere(nxt, j) == 1
            sp = nxt


# --- serialization ---------------------------------------------------------------

def test_seed_pair_json_round_trip():
    sp = walk(initial_seed(B_STAR), (1, 2), b0=B_STAR)
    obj = sp.to_json_dict()
    assert SeedPair.from_json_dict(obj) == sp
