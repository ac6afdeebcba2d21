"""Command-line front end.

Every invocation emits one document: plain lines with ``--format text`` or a
single JSON object line with ``--format json-lines``.  Exit status is 0 for
success or a true verdict, 1 for a false verdict and 2 for usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Sequence

from . import classes
from .greene import ORACLE_BOUND, greene_mismatch, greene_profile
from .partitions import (
    Partition,
    conjugate,
    cover_chain,
    cover_refine,
    doubly_dominates,
    hook_envelope,
    parse_partition,
)
from .permutations import ENUMERATION_BOUND, Permutation, parse_permutation, theta
from .suites import SUITES, run_suite
from .tableaux import rsk, shape
from .witnesses import SEARCH_BOUND, exists_witness, witness_for_cover

EXIT_OK, EXIT_FALSE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class Result:
    """A document plus its text rendering and exit status."""

    def __init__(self, doc: dict, text: str, status: int = EXIT_OK):
        self.doc = doc
        self.text = text
        self.status = status


def _partition(text: str) -> Partition:
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _permutation(tokens: Sequence[str]) -> Permutation:
    try:
        return parse_permutation(" ".join(tokens))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise UsageError(f"expected a nonnegative integer, got {text!r}") from None
    if value < 0:
        raise UsageError(f"expected a nonnegative integer, got {text!r}")
    return value


def _first_prefix_failure(lo: Partition, hi: Partition) -> dict | None:
    depth = max(len(lo), len(hi))
    for k, (a, b) in enumerate(zip(lo.prefix_sums(depth), hi.prefix_sums(depth)), 1):
        if a > b:
            return {"prefix": k, "lambda_sum": a, "mu_sum": b}
    return None


# Subcommand handlers.

def cmd_shape(args) -> Result:
    pi = _permutation(args.pi)
    sh = shape(pi)
    return Result({"command": "shape", "pi": str(pi), "shape": str(sh)}, str(sh))


def cmd_rsk(args) -> Result:
    pi = _permutation(args.pi)
    pair = rsk(pi)
    doc = {
        "command": "rsk",
        "pi": str(pi),
        "shape": str(pair.shape),
        "P": [list(r) for r in pair.p_tableau.rows],
        "Q": [list(r) for r in pair.q_tableau.rows],
    }
    text = f"P:\n{pair.p_tableau}\nQ:\n{pair.q_tableau}".replace(":\n\n", ":\n")
    return Result(doc, text)


def cmd_greene(args) -> Result:
    pi = _permutation(args.pi)
    bound = args.bound if args.bound_given else ORACLE_BOUND
    if len(pi) > bound:
        raise UsageError(f"length {len(pi)} exceeds the oracle bound {bound}")
    prof = greene_profile(pi, bound=bound)
    bad = greene_mismatch(pi, bound=bound)
    sh = shape(pi)
    doc = {
        "command": "greene",
        "pi": str(pi),
        "shape": str(sh),
        "inc_sums": list(prof.inc_sums),
        "dec_sums": list(prof.dec_sums),
        "verdict": "pass" if bad is None else "fail",
        "counterexample": bad,
    }
    text = "\n".join([
        f"shape: {sh}",
        f"increasing unions: {' '.join(map(str, prof.inc_sums))}",
        f"decreasing unions: {' '.join(map(str, prof.dec_sums))}",
        f"verdict: {doc['verdict']}",
    ])
    return Result(doc, text, EXIT_OK if bad is None else EXIT_FALSE)


def cmd_dom(args) -> Result:
    lam, mu = _partition(args.lam), _partition(args.mu)
    bad = _first_prefix_failure(lam, mu)
    if bad is not None:
        bad["side"] = "rows"
    return _verdict_result(args.command, lam, mu, bad)


def cmd_ddom(args) -> Result:
    lam, mu = _partition(args.lam), _partition(args.mu)
    bad = _first_prefix_failure(lam, mu)
    if bad is not None:
        bad["side"] = "rows"
    else:
        bad = _first_prefix_failure(conjugate(lam), conjugate(mu))
        if bad is not None:
            bad["side"] = "columns"
    return _verdict_result(args.command, lam, mu, bad)


def _verdict_result(command: str, lam: Partition, mu: Partition, bad: dict | None) -> Result:
    doc = {"command": command, "lambda": str(lam), "mu": str(mu),
           "verdict": bad is None, "counterexample": bad}
    if bad is None:
        text = "true"
    else:
        text = (f"false: {bad['side']} prefix {bad['prefix']} "
                f"has {bad['lambda_sum']} > {bad['mu_sum']}")
    return Result(doc, text, EXIT_OK if bad is None else EXIT_FALSE)


def cmd_cover(args) -> Result:
    lam, mu = _partition(args.lam), _partition(args.mu)
    try:
        refined = cover_refine(lam, mu)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return Result({"command": "cover", "lambda": str(lam), "mu": str(mu), "refined": str(refined)},
                  str(refined))


def cmd_chain(args) -> Result:
    lam, mu = _partition(args.lam), _partition(args.mu)
    try:
        chain = cover_chain(lam, mu)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return Result({"command": "chain", "lambda": str(lam), "mu": str(mu), "chain": [str(p) for p in chain]},
                  "\n".join(map(str, chain)))


def cmd_witness(args) -> Result:
    lam, mu = _partition(args.lam), _partition(args.mu)
    try:
        w = witness_for_cover(lam, mu)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    doc = {"command": "witness", "lambda": str(lam), "mu": str(mu),
           "sigma": str(w.sigma), "pi": str(w.pi),
           "shape_sigma": str(shape(w.sigma)), "shape_pi": str(shape(w.pi))}
    text = "\n".join([f"sigma: {w.sigma}", f"pi: {w.pi}",
                      f"shape(sigma): {doc['shape_sigma']}", f"shape(pi): {doc['shape_pi']}"])
    return Result(doc, text)


def cmd_search_witness(args) -> Result:
    lam, mu = _partition(args.lam), _partition(args.mu)
    if not doubly_dominates(lam, mu):
        raise UsageError(f"{lam} is not doubly dominated by {mu}")
    bound = args.bound if args.bound_given else SEARCH_BOUND
    if mu.size > bound:
        raise UsageError(f"|mu| = {mu.size} exceeds the search bound {bound}")
    found = exists_witness(lam, mu, bound=bound)
    doc = {"command": "search-witness", "lambda": str(lam), "mu": str(mu), "bound": bound}
    if found is None:
        doc.update({"verdict": "absent",
                    "counterexample": {"lambda": str(lam), "mu": str(mu), "searched_length": mu.size}})
        return Result(doc, "absent", EXIT_FALSE)
    sigma, pi = found
    doc.update({"verdict": "present", "sigma": str(sigma), "pi": str(pi)})
    return Result(doc, f"sigma: {sigma}\npi: {pi}")


def cmd_theta(args) -> Result:
    k = _nonneg(args.k)
    t = theta(k)
    return Result({"command": "theta", "k": k, "theta": str(t)}, str(t))


def cmd_hook(args) -> Result:
    lam = _partition(args.lam)
    try:
        h = hook_envelope(lam)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return Result({"command": "hook", "lambda": str(lam), "hook": str(h)}, str(h))


def _load(path: str) -> classes.ShapeSet:
    try:
        return classes.read_shape_set(path)
    except (OSError, ValueError) as exc:
        raise UsageError(f"cannot read shape set {path!r}: {exc}") from None


def cmd_class_close(args) -> Result:
    s = _load(args.file)
    closed = classes.downward_close(s.members, s.max_size)
    if args.output:
        classes.write_shape_set(closed, args.output)
    doc = {"command": "class-close", "max_size": closed.max_size,
           "members": [str(p) for p in closed.sorted_members()]}
    return Result(doc, classes.dumps(closed).rstrip("\n"))


def cmd_class_verify(args) -> Result:
    s = _load(args.file)
    n = _nonneg(args.n)
    if n > s.max_size:
        raise UsageError(f"n = {n} exceeds the set's max_size={s.max_size}")
    if n > args.bound:
        raise UsageError(f"n = {n} exceeds --bound {args.bound}")
    v = classes.find_young_violation(s.contains_shape_of, n, bound=args.bound)
    doc = {"command": "class-verify", "max_size": s.max_size, "n": n, "closed": s.closed,
           "verdict": "pass" if v is None else "fail",
           "counterexample": None if v is None else v.as_dict()}
    if v is None:
        text = "verdict: pass"
    else:
        text = f"verdict: fail\n{v.kind}: {v.first} / {v.second} (shape {shape(v.first)})"
    return Result(doc, text, EXIT_OK if v is None else EXIT_FALSE)


def cmd_bounds(args) -> Result:
    s = _load(args.file)
    if not s.closed:
        raise UsageError("bounds needs a downward closed shape set; run class-close first")
    found = classes.monotone_bound(s)
    doc = {"command": "bounds", "max_size": s.max_size}
    if found is None:
        doc.update({"verdict": "indeterminate", "a": None, "d": None})
        return Result(doc, f"indeterminate at max_size={s.max_size}")
    a, d = found
    doc.update({"verdict": "bounded", "a": a, "d": d})
    return Result(doc, f"a={a} d={d}")


def cmd_verify(args) -> Result:
    if args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)}")
    n = _nonneg(args.n)
    if args.suite in ("greene", "monotone", "sums", "young") and n > args.bound:
        raise UsageError(f"n = {n} exceeds --bound {args.bound}")
    report = run_suite(args.suite, n, workers=args.workers)
    doc = report.as_dict()
    params = " ".join(f"{k}={v}" for k, v in report.parameters.items())
    cx = "none" if report.counterexample is None else json.dumps(report.counterexample, ensure_ascii=False)
    text = "\n".join([
        f"claim: {report.claim}",
        f"parameters: {params}",
        f"verdict: {doc['verdict']}",
        f"checked: {report.checked}",
        f"counterexample: {cx}",
        f"elapsed: {doc['elapsed_seconds']:.3f}s",
    ])
    return Result(doc, text, EXIT_OK if report.verdict else EXIT_FALSE)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json-lines"], default=argparse.SUPPRESS)
    common.add_argument("--workers", type=int, default=argparse.SUPPRESS)
    common.add_argument("--bound", type=int, default=argparse.SUPPRESS,
                        help=f"enumeration cap (default {ENUMERATION_BOUND})")
    common.add_argument("--seed", default=argparse.SUPPRESS, help="accepted and ignored; nothing is random")

    parser = argparse.ArgumentParser(prog="youngclass", parents=[common],
                                     description="Shapes, double dominance and Young classes of permutations.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name: str, handler: Callable[..., Result], help: str, *params: tuple[str, dict]) -> None:
        p = sub.add_parser(name, parents=[common], help=help)
        for dest, kw in params:
            p.add_argument(dest, **kw)
        p.set_defaults(handler=handler)

    perm = ("pi", {"nargs": "*", "help": "one-line notation, e.g. 5 4 1 2 3"})
    lam = ("lam", {"metavar": "LAMBDA", "help": "partition literal, e.g. [2,2]"})
    mu = ("mu", {"metavar": "MU"})
    add("shape", cmd_shape, "RSK shape of a permutation", perm)
    add("rsk", cmd_rsk, "insertion and recording tableaux", perm)
    add("greene", cmd_greene, "brute-force Greene invariants", perm)
    add("dom", cmd_dom, "test LAMBDA ⊴ MU", lam, mu)
    add("ddom", cmd_ddom, "test LAMBDA ⊑ MU", lam, mu)
    add("cover", cmd_cover, "one refinement step from MU towards LAMBDA", lam, mu)
    add("chain", cmd_chain, "saturated cover chain from LAMBDA to MU", lam, mu)
    add("witness", cmd_witness, "witness permutations for a cover", lam, mu)
    add("search-witness", cmd_search_witness, "exhaustive witness search", lam, mu)
    add("theta", cmd_theta, "the permutation 1 ⊕ 21 ⊕ ... ⊕ k...1", ("k", {}))
    add("hook", cmd_hook, "smallest hook doubly dominating LAMBDA", lam)
    add("class-close", cmd_class_close, "downward closure of a shape set file", ("file", {}),
        ("--output", {"default": None, "help": "also write the closed set here"}))
    add("class-verify", cmd_class_verify, "check the induced class is a Young class", ("file", {}), ("n", {}))
    add("bounds", cmd_bounds, "monotone bounds (a, d) of a closed shape set", ("file", {}))
    add("verify", cmd_verify, "run a verification suite", ("suite", {"choices": sorted(SUITES)}), ("n", {}))
    return parser


def emit(result: Result, fmt: str, out=None) -> None:
    out = out or sys.stdout
    if fmt == "json-lines":
        out.write(json.dumps(result.doc, ensure_ascii=False) + "\n")
    else:
        out.write(result.text + "\n")


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.bound_given = hasattr(args, "bound")
    args.format = getattr(args, "format", "text")
    args.workers = max(1, getattr(args, "workers", 1))
    args.bound = getattr(args, "bound", ENUMERATION_BOUND)
    try:
        result = args.handler(args)
    except UsageError as exc:
        print(f"youngclass {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    emit(result, args.format)
    return result.status


if __name__ == "__main__":
    sys.exit(main())
