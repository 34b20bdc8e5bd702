"""Command-line runner: instance parsing, generation, solving, kernel
emission, oracle cross-checks, and space-vs-n scaling tables.

Exit codes: 0 YES (or kernel emitted), 1 NO, 2 usage/parse error,
3 contract violation, 4 PARAM-INVALID.
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass

from .core import (
    ContractViolation,
    KernelSink,
    ParseError,
    ReadOnlyGraph,
    SetFamilyView,
    SpaceMeter,
    Verdict,
    VerdictKind,
)
from . import formats, generators, oracle
from .deletion import DELETION_PROBLEMS, RunStats, solve_deletion_problem
from .fvs import fvs_branch_3k, fvs_iterative, make_backend
from .hs_kernels import (
    HSInstance,
    buss_vc_kernelize,
    dhs_kernelize,
    hs1_kernelize,
    hss_kernelize,
)
from .vc_param import VC_PROBLEMS, solve_kernel_bruteforce, vc_pipeline_kernelize

_REPORT_FIELDS = (
    "problem",
    "algorithm",
    "n",
    "m",
    "k",
    "t",
    "s",
    "d",
    "q",
    "verdict",
    "witness",
    "peak_words",
    "branch_nodes",
    "seed",
    "elapsed_ms",
)


@dataclass
class RunReport:
    """One run, serialized with a fixed field order; elapsed_ms is
    excluded from golden comparisons."""

    problem: str
    algorithm: str
    n: int
    m: int
    k: int | None = None
    t: int | None = None
    s: int | None = None
    d: int | None = None
    q: int | None = None
    verdict: str = ""
    witness: tuple[int, ...] | None = None
    peak_words: int = 0
    branch_nodes: int | None = None
    seed: int | None = None
    elapsed_ms: float = 0.0

    def render(self) -> str:
        out = []
        for f in _REPORT_FIELDS:
            v = getattr(self, f)
            if v is None:
                text = "-"
            elif f == "witness":
                text = ",".join(str(x) for x in v) or "()"
            elif f == "elapsed_ms":
                text = f"{v:.3f}"
            else:
                text = str(v)
            out.append(f"{f}={text}")
        return "\n".join(out) + "\n"


KERNELIZERS = ("buss-kernel", "hs1-kernel", "hss-kernel", "dhs-kernel")
GRAPH_PROBLEMS = (
    tuple(DELETION_PROBLEMS) + tuple(VC_PROBLEMS) + ("fvs-3k", "fvs-5k", "buss-kernel")
)
FAMILY_PROBLEMS = ("hs1-kernel", "hss-kernel", "dhs-kernel")


def _load_instance(args, problem: str):
    text = sys.stdin.read() if args.instance == "-" else open(args.instance).read()
    if problem in FAMILY_PROBLEMS:
        fam = formats.parse_family(text, check_d=args.d, check_s=args.s)
        return fam
    g = formats.parse_graph(text)
    if getattr(args, "tournament", False):
        if not g.is_tournament():
            raise ParseError("--tournament requires exactly one arc per pair")
    return g


def _execute(problem: str, inst, args, meter: SpaceMeter, stats: RunStats, sink: KernelSink) -> Verdict:
    k = args.k
    if problem in DELETION_PROBLEMS:
        return solve_deletion_problem(inst, k, problem, meter, stats)
    if problem in VC_PROBLEMS:
        prob = VC_PROBLEMS[problem]
        v = vc_pipeline_kernelize(inst, k, args.t, prob, meter, sink)
        if v.kind is not VerdictKind.KERNEL:
            return v
        kernel, _ = formats.sink_to_graph(sink)
        return solve_kernel_bruteforce(kernel, prob, k, args.q)
    if problem == "fvs-3k":
        return fvs_branch_3k(inst, k, meter, stats)
    if problem == "fvs-5k":
        backend = make_backend(args.connectivity, args.seed or 0)
        return fvs_iterative(inst, k, meter, backend, stats)
    if problem == "buss-kernel":
        return buss_vc_kernelize(inst, k, meter, sink)
    if problem == "hs1-kernel":
        return hs1_kernelize(HSInstance(inst, k, s=1), meter, sink)
    if problem == "hss-kernel":
        if args.s is None or args.s < 2:
            raise ContractViolation("hss-kernel needs --s >= 2")
        return hss_kernelize(
            HSInstance(inst, k, s=args.s), meter, sink, streaming=args.streaming
        )
    if problem == "dhs-kernel":
        if args.d is None:
            raise ContractViolation("dhs-kernel needs --d")
        return dhs_kernelize(HSInstance(inst, k, d=args.d), meter, sink)
    raise ContractViolation(f"unknown problem {problem!r}")


def _write_kernel(path: str, problem: str, sink: KernelSink) -> None:
    if problem in FAMILY_PROBLEMS:
        kern, _ = formats.sink_to_family(sink)
        text = formats.serialize_family(kern)
    else:
        kern, _ = formats.sink_to_graph(sink)
        text = formats.serialize_graph(kern)
    with open(path, "w") as fh:
        fh.write(text)


def _exit_code(v: Verdict) -> int:
    if v.kind is VerdictKind.NO:
        return 1
    if v.kind is VerdictKind.PARAM_INVALID:
        return 4
    return 0


def _cmd_run(args) -> int:
    problem = args.problem
    inst = _load_instance(args, problem)
    meter = SpaceMeter()
    stats = RunStats()
    sink = KernelSink()
    t0 = time.perf_counter()
    verdict = _execute(problem, inst, args, meter, stats, sink)
    elapsed = (time.perf_counter() - t0) * 1000
    if args.kernel_out and verdict.kind is VerdictKind.KERNEL:
        _write_kernel(args.kernel_out, problem, sink)
    report = RunReport(
        problem=problem,
        algorithm=problem,
        n=inst.n,
        m=inst.m,
        k=args.k,
        t=getattr(args, "t", None),
        s=getattr(args, "s", None),
        d=getattr(args, "d", None),
        q=getattr(args, "q", None),
        verdict=verdict.kind.value,
        witness=verdict.witness,
        peak_words=meter.peak_words,
        branch_nodes=stats.branch_nodes if stats.branch_nodes else None,
        seed=getattr(args, "seed", None),
        elapsed_ms=elapsed,
    )
    sys.stdout.write(report.render())
    return _exit_code(verdict)


def _cmd_kernel(args) -> int:
    args.kernel_out = args.out
    return _cmd_run(args)


_ORACLE_TARGETS = {
    "cluster-vd": oracle.is_cluster,
    "split-vd": oracle.is_split,
    "threshold-vd": oracle.is_threshold,
    "dlf": oracle.is_linear_forest,
    "dpo": oracle.is_caterpillar_forest,
    "oct": oracle.is_bipartite,
    "chvd": oracle.is_chordal,
    "planarization": oracle.is_planar,
}


def _cmd_oracle(args) -> int:
    text = sys.stdin.read() if args.instance == "-" else open(args.instance).read()
    if args.problem == "hitting-set":
        fam = formats.parse_family(text)
        ans, size = oracle.brute_hitting_set(fam, args.k)
        print(f"answer={'YES' if ans else 'NO'} min_size={size if size is not None else '-'}")
        return 0 if ans else 1
    g = formats.parse_graph(text)
    if args.problem == "fvs":
        ans, wit = oracle.brute_fvs(g, args.k)
        w = ",".join(map(str, wit)) if wit else ("()" if ans else "-")
        print(f"answer={'YES' if ans else 'NO'} witness={w}")
        return 0 if ans else 1
    if args.problem == "tournament-dfvs":
        ans = oracle.brute_deletion(g, args.k, oracle.is_acyclic_tournament)
    elif args.problem == "longpath":
        ans = oracle.longest_path_vertices(g) >= args.k
    elif args.problem == "longcycle":
        ans = oracle.longest_cycle_vertices(g) >= args.k
    elif args.problem == "dcol":
        q = args.q if args.q else 2
        ans = oracle.brute_deletion(g, args.k, oracle.q_colorable(q))
    elif args.problem in _ORACLE_TARGETS:
        ans = oracle.brute_deletion(g, args.k, _ORACLE_TARGETS[args.problem])
    else:
        raise ContractViolation(f"unknown oracle problem {args.problem!r}")
    print(f"answer={'YES' if ans else 'NO'}")
    return 0 if ans else 1


def _cmd_gen(args) -> int:
    params = {}
    for key in ("p", "c", "m", "setsize", "t"):
        val = getattr(args, key, None)
        if val is not None:
            params[key] = val
    inst = generators.generate(args.kind, args.n, params, args.seed)
    text = (
        formats.serialize_family(inst)
        if isinstance(inst, SetFamilyView)
        else formats.serialize_graph(inst)
    )
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def meter_scan(problem: str, kind: str, params: dict, k: int, n_list, seed: int, extra=None):
    """One (n, peak_words, delta) row per instance size; deterministic."""
    extra = extra or {}
    rows = []
    prev = None
    for n in n_list:
        inst = generators.generate(kind, n, params, seed)
        meter = SpaceMeter()
        stats = RunStats()
        sink = KernelSink()
        ns = argparse.Namespace(
            k=k,
            t=extra.get("t"),
            s=extra.get("s"),
            d=extra.get("d"),
            q=extra.get("q"),
            seed=seed,
            connectivity=extra.get("connectivity", "oracle"),
            streaming=True,
        )
        _execute(problem, inst, ns, meter, stats, sink)
        delta = None if prev is None else meter.peak_words - prev
        rows.append((n, meter.peak_words, delta))
        prev = meter.peak_words
    return rows


def _cmd_meter_scan(args) -> int:
    n_list = [int(x) for x in args.ns.split(",")]
    if sorted(n_list) != n_list:
        raise ContractViolation("--ns must be ascending")
    params = {}
    for key in ("p", "c", "m", "setsize", "t"):
        val = getattr(args, key, None)
        if val is not None and key != "t":
            params[key] = val
    if args.gen_t is not None:
        params["t"] = args.gen_t
    extra = {
        "t": args.t,
        "s": args.s,
        "d": args.d,
        "q": args.q,
        "connectivity": args.connectivity,
    }
    rows = meter_scan(args.problem, args.kind, params, args.k, n_list, args.seed, extra)
    for n, peak, delta in rows:
        d = "-" if delta is None else str(delta)
        print(f"n={n} peak_words={peak} delta={d}")
    return 0


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="smallspace")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, with_t=True):
        p.add_argument("instance", help="instance file, or - for stdin")
        p.add_argument("--k", type=int, required=True, help="solution budget")
        if with_t:
            p.add_argument("--t", type=int, default=0, help="vertex cover bound (vc problems)")
        p.add_argument("--s", type=int, default=None, help="pairwise intersection bound")
        p.add_argument("--d", type=int, default=None, help="uniform set size")
        p.add_argument("--q", type=int, default=None, help="part count (d-Col)")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--tournament", action="store_true")
        p.add_argument("--connectivity", choices=("oracle", "randomwalk"), default="oracle")
        p.add_argument("--streaming", action="store_true", help="re-enumeration form of the s-bounded cascade")

    run_p = sub.add_parser("run", help="solve an instance, reporting verdict and peak words")
    run_p.add_argument("--problem", required=True, choices=sorted(set(GRAPH_PROBLEMS) | set(FAMILY_PROBLEMS)))
    common(run_p)
    run_p.add_argument("--kernel-out", default=None, help="write the kernel in instance format")
    run_p.set_defaults(func=_cmd_run)

    kern_p = sub.add_parser("kernel", help="run a kernelizer and write its output instance")
    kern_p.add_argument("--problem", required=True, choices=sorted(KERNELIZERS))
    common(kern_p)
    kern_p.add_argument("--out", required=True)
    kern_p.set_defaults(func=_cmd_kernel)

    or_p = sub.add_parser("oracle", help="brute-force ground truth for cross-checking")
    or_p.add_argument("--problem", required=True)
    or_p.add_argument("instance")
    or_p.add_argument("--k", type=int, required=True)
    or_p.add_argument("--q", type=int, default=None)
    or_p.set_defaults(func=_cmd_oracle)

    gen_p = sub.add_parser("gen", help="emit a deterministic instance")
    gen_p.add_argument("--kind", required=True, choices=(
        "random-graph", "random-linear-hypergraph", "cycle", "path",
        "disjoint-cycles", "tournament", "vc-planted",
    ))
    gen_p.add_argument("--n", type=int, required=True)
    gen_p.add_argument("--seed", type=int, default=0)
    gen_p.add_argument("--p", type=float, default=None)
    gen_p.add_argument("--c", type=int, default=None)
    gen_p.add_argument("--m", type=int, default=None)
    gen_p.add_argument("--setsize", type=int, default=None)
    gen_p.add_argument("--t", type=int, default=None)
    gen_p.add_argument("--out", default=None)
    gen_p.set_defaults(func=_cmd_gen)

    scan_p = sub.add_parser("meter-scan", help="peak words per instance size")
    scan_p.add_argument("--problem", required=True)
    scan_p.add_argument("--kind", required=True)
    scan_p.add_argument("--ns", required=True, help="comma-separated ascending sizes")
    scan_p.add_argument("--k", type=int, required=True)
    scan_p.add_argument("--seed", type=int, default=0)
    scan_p.add_argument("--t", type=int, default=None)
    scan_p.add_argument("--s", type=int, default=None)
    scan_p.add_argument("--d", type=int, default=None)
    scan_p.add_argument("--q", type=int, default=None)
    scan_p.add_argument("--p", type=float, default=None)
    scan_p.add_argument("--c", type=int, default=None)
    scan_p.add_argument("--m", type=int, default=None)
    scan_p.add_argument("--setsize", type=int, default=None)
    scan_p.add_argument("--gen-t", type=int, default=None, help="planted cover size for vc-planted")
    scan_p.add_argument("--connectivity", choices=("oracle", "randomwalk"), default="oracle")
    scan_p.set_defaults(func=_cmd_meter_scan)
    return ap


def main(argv=None) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except ContractViolation as exc:
        print(f"contract violation: {exc}", file=sys.stderr)
        return 3
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
