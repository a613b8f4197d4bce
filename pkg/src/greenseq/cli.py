"""Command-line surface: mutate, trace, classify, transform, search, verify,
and persist, with stable JSON and aligned human-readable output.

Exit codes: 0 success, 1 domain failure (e.g. a sequence that is not
reddening), 2 usage error, 3 budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from random import Random

from .intmat import IntMatrix, is_sign_skew_symmetric, mutate_matrix
from .pattern import InvariantViolation, assert_seed_invariants
from .seqcalc import (
    MutabilityError,
    check_reddening_wellformed,
    classify,
    conjugate,
    conjugation_difference,
    green_tail,
    restrict_to_submatrix,
    rotate,
    run_sequence,
    verify_no_heavy_target_mutation,
    verify_target_before_source,
    verify_tbs_cvectors,
)
from . import explorer
from .explorer import (
    SearchBudget,
    StoreFormatError,
    build_exchange_graph,
    certify_rank2_nontermination,
    enumerate_greening,
    enumerate_mgs,
    enumerate_reddening,
    expand_store,
    find_mgs,
    find_reddening,
    load_store,
    random_acyclic_matrix,
    save_store,
)

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

ENV_MAX_DEPTH = "GREENSEQ_MAX_DEPTH"
ENV_MAX_NODES = "GREENSEQ_MAX_NODES"


class UsageError(Exception):
    pass


def _load_matrix(path: str) -> IntMatrix:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
        mat = IntMatrix.from_json_dict(obj)
    except (OSError, json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"cannot read matrix from {path}: {exc}") from exc
    if not is_sign_skew_symmetric(mat):
        raise UsageError(f"matrix in {path} is not sign-skew-symmetric")
    return mat


def _parse_dirs(text: str) -> tuple:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise UsageError(f"cannot parse direction sequence {text!r}: {exc}") from exc


def _sequence_from_args(args, attr="seq", file_attr="seq_file", required=True) -> tuple:
    path = getattr(args, file_attr, None)
    if path:
        try:
            with open(path, "r", encoding="utf-8") as fh:
                obj = json.load(fh)
            return tuple(int(k) for k in obj["dirs"])
        except (OSError, json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
            raise UsageError(f"cannot read sequence from {path}: {exc}") from exc
    text = getattr(args, attr, None)
    if text is None:
        if required:
            raise UsageError("a direction sequence is required (--seq or --seq-file)")
        return ()
    return _parse_dirs(text)


def _emit(args, obj: dict, human_lines) -> None:
    if args.json:
        print(json.dumps(obj, sort_keys=True))
    else:
        for line in human_lines:
            print(line)


def _matrix_lines(mat: IntMatrix, label: str = "") -> list:
    lines = [label] if label else []
    lines.extend(str(mat).splitlines())
    return lines


def _c_matrix_lines(C: IntMatrix) -> list:
    marks = []
    for k in range(1, C.n + 1):
        col = C.col(k)
        marks.append("+" if all(v >= 0 for v in col) and any(col) else "-")
    lines = [f"C (columns: {' '.join(marks)}):"]
    lines.extend(str(C).splitlines())
    return lines


def _verdict_line(verdict) -> str:
    perm = ",".join(map(str, verdict.perm.images)) if verdict.perm else "-"
    tag = " (maximal green)" if verdict.is_maximal_green else ""
    return f"kind={verdict.kind} r={verdict.r} perm={perm}{tag}"


def _budget_from_args(args, n: int, mode: str = "all-mutations") -> SearchBudget:
    depth = args.max_depth
    if depth is None:
        depth = int(os.environ.get(ENV_MAX_DEPTH, 3 * n))
    nodes = args.max_nodes
    if nodes is None:
        nodes = int(os.environ.get(ENV_MAX_NODES, 200_000))
    return SearchBudget(max_depth=depth, max_nodes=nodes, mode=mode)


# ---------------------------------------------------------------------------
# subcommands


def cmd_mutate(args) -> int:
    mat = _load_matrix(args.matrix)
    dirs = _sequence_from_args(args)
    cur = mat
    for k in dirs:
        cur = mutate_matrix(cur, k)
    _emit(args, cur.to_json_dict(), _matrix_lines(cur, f"matrix after directions {list(dirs)}:"))
    return EXIT_OK


def cmd_seed_trace(args) -> int:
    mat = _load_matrix(args.matrix)
    dirs = _sequence_from_args(args)
    trace = run_sequence(mat, dirs, check=not args.no_check)
    lines = _matrix_lines(mat, "initial matrix:")
    lines.append("step  dir  c-vector  color")
    for pos, k in enumerate(trace.dirs):
        color = "red -" if pos in trace.red_positions else "green +"
        lines.append(f"{pos + 1:4d}  {k:3d}  {tuple(trace.cvecs[pos])}  {color}")
    lines.extend(_c_matrix_lines(trace.final.seed.C))
    _emit(args, trace.to_json_dict(), lines)
    return EXIT_OK


def cmd_classify(args) -> int:
    mat = _load_matrix(args.matrix)
    dirs = _sequence_from_args(args, required=False)
    verdict = classify(mat, dirs, check=not args.no_check)
    obj = verdict.to_json_dict()
    if args.counts:
        trace = run_sequence(mat, dirs, check=False)
        if verdict.kind != "neither":
            obj["counts"] = check_reddening_wellformed(verdict, trace).to_json_dict()
        obj["green_tail"] = green_tail(trace)
    _emit(args, obj, [_verdict_line(verdict)])
    return EXIT_OK


def cmd_conjugate(args) -> int:
    mat = _load_matrix(args.matrix)
    dirs = _sequence_from_args(args)
    new_seq, prediction = conjugate(mat, dirs, args.direction)
    obj = {"dirs": list(new_seq), "predicted": prediction.to_json_dict(),
           "target_matrix": mutate_matrix(mat, args.direction).to_json_dict()}
    lines = [f"conjugated sequence: {','.join(map(str, new_seq))}",
             f"predicted on the direction-{args.direction} mutation: {_verdict_line(prediction)}"]
    if args.verify:
        actual = classify(mutate_matrix(mat, args.direction), new_seq)
        obj["actual"] = actual.to_json_dict()
        lines.append(f"actual: {_verdict_line(actual)}")
        if (actual.kind, actual.r, actual.perm) != (prediction.kind, prediction.r, prediction.perm):
            _emit(args, obj, lines + ["MISMATCH"])
            return EXIT_DOMAIN
    _emit(args, obj, lines)
    return EXIT_OK


def cmd_rotate(args) -> int:
    mat = _load_matrix(args.matrix)
    dirs = _sequence_from_args(args)
    new_seq = rotate(mat, dirs)
    obj = {"dirs": list(new_seq),
           "target_matrix": mutate_matrix(mat, dirs[0]).to_json_dict()}
    lines = [f"rotated sequence: {','.join(map(str, new_seq))}"]
    if args.verify:
        base = classify(mat, dirs)
        actual = classify(mutate_matrix(mat, dirs[0]), new_seq)
        obj["actual"] = actual.to_json_dict()
        lines.append(f"actual: {_verdict_line(actual)}")
        if (actual.kind, actual.r, actual.perm) != (base.kind, base.r, base.perm):
            _emit(args, obj, lines + ["MISMATCH"])
            return EXIT_DOMAIN
    _emit(args, obj, lines)
    return EXIT_OK


def cmd_conj_diff(args) -> int:
    mat = _load_matrix(args.matrix)
    path = _parse_dirs(args.path)
    red = _parse_dirs(args.reddening_seq)
    alt = _parse_dirs(args.alt_reddening_seq) if args.alt_reddening_seq else None
    diff = conjugation_difference(mat, path, red, alt_reddening_seq=alt)
    _emit(args, diff.to_json_dict(),
          [f"phi = {diff.phi} (path reds {diff.red_count_path},"
           f" shadow reds {diff.red_count_shadow})"])
    return EXIT_OK


def cmd_restrict(args) -> int:
    mat = _load_matrix(args.matrix)
    dirs = _sequence_from_args(args)
    V = sorted(set(_parse_dirs(args.indices)))
    if not V:
        raise UsageError("--indices must name at least one index")
    induced = restrict_to_submatrix(mat, dirs, V)
    from .intmat import submatrix
    sub, _ = submatrix(mat, V)
    verdict = classify(sub, induced)
    obj = {"dirs": list(induced), "indices": V, "submatrix": sub.to_json_dict(),
           "verdict": verdict.to_json_dict()}
    _emit(args, obj, [f"induced sequence on indices {V}: {','.join(map(str, induced)) or '(empty)'}",
                      _verdict_line(verdict)])
    return EXIT_OK


def cmd_search_mgs(args) -> int:
    mat = _load_matrix(args.matrix)
    budget = _budget_from_args(args, mat.n, mode="green-only")
    result = find_mgs(mat, budget, first_step=args.first_step, prune_heavy=args.prune_heavy)
    obj = result.to_json_dict()
    if result.found:
        _emit(args, obj, [f"maximal green sequence: {','.join(map(str, result.sequence))}"])
        return EXIT_OK
    if result.status == "refuted":
        _emit(args, obj, ["no maximal green sequence exists (search space exhausted)"])
        return EXIT_DOMAIN
    hint = f" (MGS length >= n = {mat.n})" if budget.max_depth < mat.n else ""
    _emit(args, obj, [f"budget exhausted{hint}"])
    return EXIT_BUDGET


def cmd_search_reddening(args) -> int:
    mat = _load_matrix(args.matrix)
    budget = _budget_from_args(args, mat.n)
    result = find_reddening(mat, budget)
    obj = result.to_json_dict()
    if result.found:
        _emit(args, obj, [f"reddening sequence: {','.join(map(str, result.sequence))}"])
        return EXIT_OK
    if result.status == "refuted":
        _emit(args, obj, ["no reddening sequence exists (search space exhausted)"])
        return EXIT_DOMAIN
    _emit(args, obj, ["budget exhausted"])
    return EXIT_BUDGET


def cmd_enumerate_mgs(args) -> int:
    mat = _load_matrix(args.matrix)
    seqs = enumerate_mgs(mat, args.max_len)
    obj = {"count": len(seqs), "sequences": [list(s) for s in seqs]}
    lines = [f"{len(seqs)} maximal green sequence(s) of length <= {args.max_len}"]
    lines.extend(",".join(map(str, s)) for s in seqs)
    _emit(args, obj, lines)
    return EXIT_OK


def cmd_exchange_graph(args) -> int:
    mat = _load_matrix(args.matrix)
    budget = _budget_from_args(args, mat.n, mode=args.mode)
    store = build_exchange_graph(mat, budget)
    if args.out:
        save_store(store, args.out)
    obj = {"nodes": store.node_count(), "edges": len(store.edges),
           "green_edges": store.green_edge_count(), "truncated": store.truncated,
           "reddening_endpoints": len(store.reddening_paths())}
    lines = [f"nodes: {store.node_count()}  edges: {len(store.edges)}"
             f"  green: {store.green_edge_count()}  truncated: {store.truncated}"]
    if args.out:
        lines.append(f"saved to {args.out}")
    _emit(args, obj, lines)
    return EXIT_OK


def cmd_store(args) -> int:
    if args.action == "info":
        store = load_store(args.file)
        obj = {"b0": store.b0.to_json_dict(), "budget": store.budget.to_json_dict(),
               "nodes": store.node_count(), "edges": len(store.edges),
               "frontier": len(store.frontier), "truncated": store.truncated}
        _emit(args, obj, [f"nodes: {store.node_count()}  edges: {len(store.edges)}"
                          f"  frontier: {len(store.frontier)}  truncated: {store.truncated}"])
        return EXIT_OK
    if args.action == "paths":
        store = load_store(args.file)
        hits = store.reddening_paths()
        obj = {"paths": [{"dirs": list(p), "opposite_arrows": r} for p, r in hits]}
        lines = [f"{len(hits)} reddening path(s) to a negated-permutation C-matrix"]
        lines.extend(f"{','.join(map(str, p)) or '(empty)'}  opposite arrows: {r}"
                     for p, r in hits)
        _emit(args, obj, lines)
        return EXIT_OK
    if args.action == "resume":
        store = load_store(args.file)
        budget = store.budget
        if args.max_depth is not None or args.max_nodes is not None:
            budget = SearchBudget(
                max_depth=args.max_depth if args.max_depth is not None else budget.max_depth,
                max_nodes=args.max_nodes if args.max_nodes is not None else budget.max_nodes,
                mode=budget.mode, max_entry=budget.max_entry)
            store.budget = budget
        expand_store(store, budget)
        out = args.out or args.file
        save_store(store, out)
        obj = {"nodes": store.node_count(), "edges": len(store.edges),
               "truncated": store.truncated, "saved": out}
        _emit(args, obj, [f"resumed: nodes {store.node_count()}  truncated {store.truncated}",
                          f"saved to {out}"])
        return EXIT_OK
    raise UsageError(f"unknown store action {args.action!r}")


# ---------------------------------------------------------------------------
# property suites


def _suite_dualities(rng: Random, report, n_paths: int, inject: bool) -> None:
    for trial in range(n_paths):
        n = rng.randint(2, 6)
        mat = random_acyclic_matrix(rng, n)
        dirs = tuple(rng.randint(1, n) for _ in range(rng.randint(1, 10)))
        try:
            trace = run_sequence(mat, dirs, check=True)
        except (InvariantViolation, MutabilityError) as exc:
            report.fail("dualities", f"trial {trial}: {exc}; matrix {mat.rows} dirs {dirs}")
            return
        if inject and trial == 0:
            seed = trace.final.seed
            bad_rows = list(list(row) for row in seed.C.rows)
            bad_rows[0][0] += 1
            from .pattern import Seed, SeedPair
            bad = SeedPair(Seed(seed.B, IntMatrix.from_rows(bad_rows), seed.G), trace.final.dual)
            try:
                assert_seed_invariants(bad, mat)
            except InvariantViolation as exc:
                report.fail("dualities", f"injected corruption detected as intended: {exc}")
                return
            report.fail("dualities", "injected corruption was NOT detected")
            return
    report.ok("dualities", f"{n_paths} random paths satisfy every per-step law")


def _suite_conjugation(rng: Random, report, n_matrices: int, depth: int) -> None:
    checked = 0
    for trial in range(n_matrices):
        n = rng.choice([2, 3])
        mat = random_acyclic_matrix(rng, n)
        for seq in enumerate_reddening(mat, depth):
            base = classify(mat, seq)
            for j in range(1, n + 1):
                new_seq, prediction = conjugate(mat, seq, j)
                actual = classify(mutate_matrix(mat, j), new_seq)
                if (actual.kind, actual.r, actual.perm.images) != \
                        (prediction.kind, prediction.r, prediction.perm.images):
                    report.fail("conjugation",
                                f"matrix {mat.rows} seq {seq} dir {j}: predicted "
                                f"{prediction.to_json_dict()} got {actual.to_json_dict()}")
                    return
                checked += 1
            del base
    report.ok("conjugation", f"{checked} conjugations matched their predicted verdicts")


def _suite_rotation(rng: Random, report, n_matrices: int, depth: int) -> None:
    checked = 0
    for trial in range(n_matrices):
        n = rng.choice([2, 3])
        mat = random_acyclic_matrix(rng, n)
        for seq in enumerate_reddening(mat, depth):
            base = classify(mat, seq)
            cur_mat, cur_seq = mat, seq
            for _ in range(len(seq)):
                first = cur_seq[0]
                cur_seq = rotate(cur_mat, cur_seq)
                cur_mat = mutate_matrix(cur_mat, first)
                actual = classify(cur_mat, cur_seq)
                if (actual.kind, actual.r, actual.perm.images) != \
                        (base.kind, base.r, base.perm.images):
                    report.fail("rotation", f"matrix {mat.rows} seq {seq}: rotation changed "
                                            f"the verdict to {actual.to_json_dict()}")
                    return
                checked += 1
    report.ok("rotation", f"{checked} rotations preserved kind, red count, and permutation")


def _suite_conjdiff(rng: Random, report, n_matrices: int, depth: int) -> None:
    checked = 0
    for trial in range(n_matrices):
        mat = random_acyclic_matrix(rng, 3)
        reds = enumerate_reddening(mat, 5)
        if not reds:
            continue
        base_red = reds[0]
        alt_red = reds[1] if len(reds) > 1 else None
        for _ in range(4):
            path = tuple(rng.randint(1, 3) for _ in range(rng.randint(0, 3)))
            diff = conjugation_difference(mat, path, base_red, alt_reddening_seq=alt_red)
            target = mat
            for k in path:
                target = mutate_matrix(target, k)
            for seq in enumerate_reddening(target, depth):
                own = classify(target, seq)
                ambient = _red_count_from(mat, path, seq)
                if ambient != own.r + diff.phi:
                    report.fail("conjdiff",
                                f"matrix {mat.rows} path {path} seq {seq}: ambient reds "
                                f"{ambient} != local {own.r} + phi {diff.phi}")
                    return
                if diff.phi > own.r + diff.phi:
                    report.fail("conjdiff", f"phi {diff.phi} exceeds an ambient red count")
                    return
                checked += 1
    report.ok("conjdiff", f"{checked} reddening sequences matched the red-count bookkeeping")


def _red_count_from(b0: IntMatrix, start: tuple, ext: tuple) -> int:
    from .pattern import col_sign_rows, mutate_c_rows
    from .intmat import mutate_rows
    b = b0.rows
    n = len(b)
    c = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    for k in start:
        c = mutate_c_rows(c, b, k - 1)
        b = mutate_rows(b, k - 1)
    count = 0
    for k in ext:
        if col_sign_rows(c, k - 1) < 0:
            count += 1
        c = mutate_c_rows(c, b, k - 1)
        b = mutate_rows(b, k - 1)
    return count


def _suite_counting(rng: Random, report, n_matrices: int, depth: int) -> None:
    checked = 0
    for trial in range(n_matrices):
        n = rng.choice([2, 3])
        mat = random_acyclic_matrix(rng, n)
        for seq in enumerate_reddening(mat, depth) + enumerate_greening(mat, min(depth, 5)):
            verdict = classify(mat, seq)
            trace = run_sequence(mat, seq, check=False)
            res = check_reddening_wellformed(verdict, trace)
            if not res.ok:
                report.fail("counting", f"matrix {mat.rows} seq {seq}: {res.messages}")
                return
            checked += 1
    report.ok("counting", f"{checked} sequences satisfied the unit-vector counting identities")


def _suite_tbs(rng: Random, report, n_matrices: int, depth: int) -> None:
    checked = 0
    for trial in range(n_matrices):
        mat = random_acyclic_matrix(rng, 3, heavy_pair=True)
        for seq in enumerate_mgs(mat, depth):
            rep = verify_target_before_source(mat, seq)
            if not rep.ok:
                report.fail("tbs", f"matrix {mat.rows} mgs {seq}: {rep.to_json_dict()}")
                return
            rep2 = verify_no_heavy_target_mutation(mat, seq)
            if not rep2.ok:
                report.fail("tbs", f"matrix {mat.rows} mgs {seq}: step filter {rep2.to_json_dict()}")
                return
            rep3 = verify_tbs_cvectors(mat, seq)
            if not rep3.ok:
                report.fail("tbs", f"matrix {mat.rows} seq {seq}: green tail {rep3.to_json_dict()}")
                return
            checked += 3
    report.ok("tbs", f"{checked} ordering checks passed on heavy-pair instances")


def _suite_rank2(rng: Random, report, n_matrices: int) -> None:
    pairs = [(2, 2), (1, 4), (4, 1), (2, 3)]
    for _ in range(n_matrices):
        a, b = rng.randint(1, 5), rng.randint(1, 5)
        if a * b >= 4:
            pairs.append((a, b))
    for a, b in pairs:
        cert = certify_rank2_nontermination(a, b, first_step=1)
        if not cert.certified:
            report.fail("rank2", f"(a,b)=({a},{b}): {cert.reason}")
            return
    report.ok("rank2", f"{len(pairs)} weight pairs certified divergent from index 1")


class _SuiteReport:
    def __init__(self):
        self.records = []

    def ok(self, name, detail):
        self.records.append({"suite": name, "passed": True, "detail": detail})

    def fail(self, name, detail):
        self.records.append({"suite": name, "passed": False, "detail": detail})

    @property
    def all_passed(self):
        return all(r["passed"] for r in self.records)


def cmd_verify(args) -> int:
    mat = _load_matrix(args.matrix) if args.matrix else None
    rng = Random(args.seed)
    report = _SuiteReport()
    suites = ["dualities", "conjugation", "rotation", "conjdiff", "counting",
              "tbs", "rank2"] if args.suite == "all" else [args.suite]
    for suite in suites:
        if suite == "dualities":
            _suite_dualities(rng, report, args.paths, args.inject_corruption)
        elif suite == "conjugation":
            _suite_conjugation(rng, report, args.matrices, args.depth)
        elif suite == "rotation":
            _suite_rotation(rng, report, args.matrices, args.depth)
        elif suite == "conjdiff":
            _suite_conjdiff(rng, report, max(args.matrices // 2, 1), args.depth)
        elif suite == "counting":
            _suite_counting(rng, report, args.matrices, min(args.depth, 6))
        elif suite == "tbs":
            _suite_tbs(rng, report, args.matrices, args.depth)
        elif suite == "rank2":
            _suite_rank2(rng, report, args.matrices)
        else:
            raise UsageError(f"unknown suite {suite!r}")
    if mat is not None and not args.inject_corruption:
        # spot-run the per-step laws on the supplied matrix as well
        rng2 = Random(args.seed)
        for _ in range(20):
            dirs = tuple(rng2.randint(1, mat.n) for _ in range(rng2.randint(1, 8)))
            try:
                run_sequence(mat, dirs, check=True)
            except (InvariantViolation, MutabilityError) as exc:
                report.fail("dualities", f"supplied matrix, dirs {dirs}: {exc}")
                break
        else:
            report.ok("matrix-laws", "20 random walks on the supplied matrix satisfy every law")
    obj = {"records": report.records, "passed": report.all_passed}
    lines = [f"[{'PASS' if r['passed'] else 'FAIL'}] {r['suite']}: {r['detail']}"
             for r in report.records]
    _emit(args, obj, lines)
    return EXIT_OK if report.all_passed else EXIT_DOMAIN


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="greenseq",
        description="Exact mutation engine for exchange matrices: trace, classify, "
                    "transform, and search green/reddening sequences.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, seq=True):
        p.add_argument("--matrix", required=True, help="JSON matrix file {'n':..,'rows':[[..]]}")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        if seq:
            p.add_argument("--seq", help="comma-separated 1-based directions, e.g. '3,2,1'")
            p.add_argument("--seq-file", help="JSON file {'dirs':[..]} (overrides --seq)")

    p = sub.add_parser("mutate", help="mutate a matrix along a direction sequence")
    add_common(p)
    p.set_defaults(func=cmd_mutate)

    p = sub.add_parser("seed-trace", help="walk a sequence and print every c-vector and color")
    add_common(p)
    p.add_argument("--no-check", action="store_true", help="skip per-step invariant assertions")
    p.set_defaults(func=cmd_seed_trace)

    p = sub.add_parser("classify", help="reddening / greening / neither verdict")
    add_common(p)
    p.add_argument("--no-check", action="store_true")
    p.add_argument("--counts", action="store_true", help="include counting diagnostics")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("conjugate", help="conjugation of a reddening/greening sequence")
    add_common(p)
    p.add_argument("--direction", type=int, required=True)
    p.add_argument("--verify", action="store_true", help="replay on the mutated matrix")
    p.set_defaults(func=cmd_conjugate)

    p = sub.add_parser("rotate", help="rotation of a reddening/greening sequence")
    add_common(p)
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_rotate)

    p = sub.add_parser("conj-diff", help="conjugation difference of a vertex")
    p.add_argument("--matrix", required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--path", required=True, help="directions from the initial vertex")
    p.add_argument("--reddening-seq", required=True)
    p.add_argument("--alt-reddening-seq", help="second reddening sequence (consistency check)")
    p.set_defaults(func=cmd_conj_diff)

    p = sub.add_parser("restrict", help="induce a sequence on a principal submatrix")
    add_common(p)
    p.add_argument("--indices", required=True, help="comma-separated retained indices")
    p.set_defaults(func=cmd_restrict)

    for name, fn, extra in (("search-mgs", cmd_search_mgs, True),
                            ("search-reddening", cmd_search_reddening, False)):
        p = sub.add_parser(name, help=f"{name.replace('-', ' ')} within a budget")
        p.add_argument("--matrix", required=True)
        p.add_argument("--json", action="store_true")
        p.add_argument("--max-depth", type=int, default=None,
                       help=f"default: ${ENV_MAX_DEPTH} or 3*n")
        p.add_argument("--max-nodes", type=int, default=None,
                       help=f"default: ${ENV_MAX_NODES} or 200000")
        if extra:
            p.add_argument("--first-step", type=int, default=None)
            p.add_argument("--prune-heavy", action="store_true",
                           help="skip mutations at sources of heavy arrow pairs")
        p.set_defaults(func=fn)

    p = sub.add_parser("enumerate-mgs", help="all maximal green sequences up to a length")
    p.add_argument("--matrix", required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--max-len", type=int, required=True)
    p.set_defaults(func=cmd_enumerate_mgs)

    p = sub.add_parser("exchange-graph", help="breadth-first exchange graph with dedup")
    p.add_argument("--matrix", required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--max-depth", type=int, default=None)
    p.add_argument("--max-nodes", type=int, default=None)
    p.add_argument("--mode", choices=["all-mutations", "green-only"], default="all-mutations")
    p.add_argument("--out", help="save the store to this JSON-lines file")
    p.set_defaults(func=cmd_exchange_graph)

    p = sub.add_parser("store", help="inspect, query, or resume a saved store")
    p.add_argument("action", choices=["info", "paths", "resume"])
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.add_argument("--max-depth", type=int, default=None)
    p.add_argument("--max-nodes", type=int, default=None)
    p.add_argument("--out", help="write the resumed store here instead of in place")
    p.set_defaults(func=cmd_store)

    p = sub.add_parser("verify", help="randomized property suites")
    p.add_argument("--matrix", help="also spot-check this matrix")
    p.add_argument("--json", action="store_true")
    p.add_argument("--suite", default="all",
                   choices=["all", "dualities", "conjugation", "rotation", "conjdiff",
                            "counting", "tbs", "rank2"])
    p.add_argument("--seed", type=int, default=0, help="seed for every randomized suite")
    p.add_argument("--paths", type=int, default=150)
    p.add_argument("--matrices", type=int, default=12)
    p.add_argument("--depth", type=int, default=6)
    p.add_argument("--inject-corruption", action="store_true",
                   help="negative control: corrupt a seed and show the detector firing")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except IndexError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except StoreFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (MutabilityError, InvariantViolation) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
