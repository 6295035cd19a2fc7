"""Command-line front end.

Exit codes: 0 when every verification passes, 2 for usage errors, 3 when a
verification fails.
"""

from __future__ import annotations

import argparse
import itertools
import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

from .chain import ChainSolution, CycleError, CycleSpec, verify_chain, verify_cycle_bilinear
from .exactmath import scalar_to_json
from .maya import (
    KBlockCoordinates,
    MayaDiagram,
    MayaError,
    admissible_shifts,
    cyclic_signature,
    enumerate_cyclic,
    from_blocks,
    from_frobenius,
)
from .painleve import (
    NYSolution,
    P4Solution,
    P5Solution,
    PainleveError,
    ScalarReduction,
    certify,
    classify_three_cycle,
    scalar_status,
    solve_spec,
    verify_ny,
)
from .reproduce import hermite_fault, run_all
from .tau import TauError, expected_degree

EXIT_OK, EXIT_USAGE, EXIT_FAIL = 0, 2, 3
DOC_FORMAT = "mayacycles.solution/1"


class UsageError(Exception):
    pass


# -- argument helpers ----------------------------------------------------------


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _diagram_from_args(args) -> MayaDiagram:
    given = [x for x in (args.blocks, args.frobenius, args.coords) if x is not None]
    if len(given) != 1:
        raise UsageError("give exactly one of --blocks, --frobenius, --coords")
    if args.blocks is not None:
        return from_blocks(_ints(args.blocks))
    if args.frobenius is not None:
        if args.frobenius.count("|") != 1:
            raise UsageError('--frobenius expects "s1,s2,...|t1,t2,..."')
        s, t = args.frobenius.split("|")
        return from_frobenius(_ints(s), _ints(t))
    return KBlockCoordinates.parse(args.coords).diagram()


def _spec_from_args(args) -> CycleSpec:
    try:
        spec = CycleSpec.parse(args.coords, _ints(args.perm))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if getattr(args, "sig", None):
        sig = _ints(args.sig)
        if sig != spec.kblocks.signature:
            raise UsageError(f"--sig {sig} does not match the coordinates' signature {spec.kblocks.signature}")
    return spec


def _dump(data) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False)


# -- solution documents ----------------------------------------------------------


def solution_document(red: ScalarReduction) -> dict:
    """Self-contained JSON record of a solved spec and its verification results."""
    chain, ny = red.chain, red.ny
    status, note = scalar_status(red)
    ny_json = ny.to_json()
    ny_json.pop("chain", None)
    scalar = None
    if red.scalar is not None:
        kind = "P_IV" if isinstance(red.scalar, P4Solution) else "P_V"
        scalar = {"kind": kind, **red.scalar.to_json()}
    return {
        "format": DOC_FORMAT,
        "spec": chain.spec.to_json(),
        "chain": chain.to_json(),
        "noumi_yamada": ny_json,
        "scalar": scalar,
        "report": {
            "chain": verify_chain(chain).ok,
            "bilinear": all(verify_cycle_bilinear(chain)),
            "noumi_yamada": verify_ny(ny).ok,
            "scalar": status,
            "note": note or red.note,
        },
    }


def check_document(data: dict) -> tuple[bool, list[str]]:
    """Re-verify a solution document from its own contents."""
    lines = []
    if data.get("format") != DOC_FORMAT:
        raise UsageError(f"not a solution document (format {data.get('format')!r})")
    chain = ChainSolution.from_json(data["chain"])
    ny = NYSolution.from_json(data["noumi_yamada"])
    ny.chain = chain
    scalar = None
    if data.get("scalar"):
        cls = P4Solution if data["scalar"]["kind"] == "P_IV" else P5Solution
        scalar = cls.from_json(data["scalar"])
    red = ScalarReduction(chain, ny, scalar, data["report"].get("note", ""))
    chain_rep, ny_rep = verify_chain(chain), verify_ny(ny)
    status, _ = scalar_status(red)
    lines.append(chain_rep.summary())
    lines.append(ny_rep.summary())
    lines.append(f"scalar {status}")
    again = solution_document(red)
    stable = again == data
    lines.append(f"json round-trip {'stable' if stable else 'CHANGED'}")
    ok = chain_rep.ok and ny_rep.ok and status != "FAIL" and stable
    return ok, lines


# -- subcommands ------------------------------------------------------------------


def cmd_show(args) -> int:
    M = _diagram_from_args(args)
    s, t = M.frobenius()
    S, b = M.standardize()
    print(M.render(ascii=args.ascii))
    print(f"block coordinates: {M.block_coordinates()}")
    print(f"frobenius: ({','.join(map(str, s))}|{','.join(map(str, t))})")
    print(f"index: {M.index}")
    print(f"genus: {M.genus}")
    print(f"standard form: shift {b}, occupied {tuple(sorted(S.plus))}, tau degree {expected_degree(M)}")
    return EXIT_OK


def cmd_classify(args) -> int:
    M = _diagram_from_args(args)
    sig, p = cyclic_signature(M, args.k)
    kb = KBlockCoordinates.of(M, args.k)
    print(f"({p},{args.k})-cyclic, signature {sig}")
    print(f"{args.k}-block coordinates: Xi({kb})")
    if p == 3:
        print(f"family: {classify_three_cycle(kb)}")
    return EXIT_OK


def _perms_for(p: int, how: str | None, rng: random.Random) -> list[tuple[int, ...]]:
    if how is None:
        return [tuple(range(p))]
    if how == "all":
        return list(itertools.permutations(range(p)))
    try:
        n = int(how)
    except ValueError:
        raise UsageError(f"--perms expects 'all' or a count, got {how!r}") from None
    out = []
    for _ in range(n):
        perm = list(range(p))
        rng.shuffle(perm)
        out.append(tuple(perm))
    return out


def _certify_json(spec_json: dict) -> tuple[str, bool, dict]:
    cert = certify(CycleSpec.from_json(spec_json))
    return cert.line(), cert.ok, {
        "spec": spec_json,
        "chain": cert.chain_ok,
        "noumi_yamada": cert.ny_ok,
        "scalar": cert.scalar,
        "note": cert.note,
    }


def cmd_enumerate(args) -> int:
    if args.k not in admissible_shifts(args.p):
        raise UsageError(f"inadmissible shift k={args.k} for p={args.p}; allowed {admissible_shifts(args.p)}")
    if args.jobs < 1:
        raise UsageError("--jobs must be at least 1")
    rng = random.Random(args.seed)
    kbs = list(enumerate_cyclic(args.p, args.k, args.max, degenerate=args.degenerate))
    specs = [CycleSpec(kb, perm) for kb in kbs for perm in _perms_for(args.p, args.perms, rng)]
    if not args.verify:
        if args.count:
            print(f"{len(kbs)} diagrams, {len(specs)} specs")
        elif args.json:
            print(_dump([s.to_json() for s in specs]))
        else:
            for s in specs:
                print(s)
        return EXIT_OK
    payload = [s.to_json() for s in specs]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            results = list(pool.map(_certify_json, payload, chunksize=8))
    else:
        results = [_certify_json(x) for x in payload]
    passed = sum(ok for _, ok, _ in results)
    if args.json:
        print(_dump([r for _, _, r in results]))
    elif not args.count:
        for line, _, _ in results:
            print(line)
    print(f"{passed}/{len(results)} specs pass", file=sys.stderr if args.json else sys.stdout)
    return EXIT_OK if passed == len(results) else EXIT_FAIL


def _print_solution(red: ScalarReduction, doc: dict) -> None:
    chain, ny = red.chain, red.ny
    print(f"spec: {chain.spec}  (p={chain.p}, k={chain.k}, delta={chain.delta})")
    print(f"flip sequence: {tuple(chain.flip_seq)}")
    print(f"sigma: {tuple(chain.sigmas)}")
    print(f"a: ({', '.join(str(x) for x in chain.a)})")
    for i, tau in enumerate(chain.taus[:-1]):
        print(f"tau_{i} [{tau.diagram!r}]: {tau.poly}")
    for i, w in enumerate(chain.ws):
        print(f"w_{i} = {w}")
    print(f"alpha: ({', '.join(str(x) for x in ny.alphas)})")
    for i in range(ny.p):
        print(f"f_{i}(x) = {ny.f_in_x(i).format('x')}")
    s = red.scalar
    if s is not None:
        kind = "P_IV" if isinstance(s, P4Solution) else "P_V"
        params = ", ".join(f"{k}={v}" for k, v in s.params.items())
        print(f"{kind}: {params}")
        print(f"  y(t) = {s.y.format('t')}")
    elif red.note:
        print(f"scalar reduction: {red.note}")
    rep = doc["report"]
    print(
        f"verification: chain={'ok' if rep['chain'] else 'FAIL'} "
        f"bilinear={'ok' if rep['bilinear'] else 'FAIL'} "
        f"noumi-yamada={'ok' if rep['noumi_yamada'] else 'FAIL'} scalar={rep['scalar']}"
    )


def _report_ok(doc: dict) -> bool:
    rep = doc["report"]
    return rep["chain"] and rep["bilinear"] and rep["noumi_yamada"] and rep["scalar"] != "FAIL"


def cmd_solve(args) -> int:
    red = solve_spec(_spec_from_args(args))
    doc = solution_document(red)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(_dump(doc) + "\n")
    if args.json:
        print(_dump(doc))
    else:
        _print_solution(red, doc)
    return EXIT_OK if _report_ok(doc) else EXIT_FAIL


def cmd_scalar(args) -> int:
    spec = _spec_from_args(args)
    if spec.p not in (3, 4):
        raise UsageError(f"scalar reductions exist for p = 3 or 4, not p = {spec.p}")
    red = solve_spec(spec)
    status, note = scalar_status(red)
    s = red.scalar
    if args.json:
        out = {"spec": spec.to_json(), "status": status, "note": note}
        if s is not None:
            out.update(kind="P_IV" if spec.p == 3 else "P_V", y=s.y.to_json(),
                       params={k: scalar_to_json(v) for k, v in s.params.items()})
        print(_dump(out))
    else:
        if s is None:
            print(f"no scalar reduction: {note}")
        else:
            kind = "P_IV" if spec.p == 3 else "P_V"
            print(f"{kind}: " + ", ".join(f"{k}={v}" for k, v in s.params.items()))
            print(f"y(t) = {s.y.format('t')}")
            if spec.p == 3:
                print(f"family: {classify_three_cycle(spec.kblocks)}")
        print(f"residual: {status}" + (f" ({note})" if note and s is not None else ""))
    return EXIT_FAIL if status == "FAIL" else EXIT_OK


def cmd_verify(args) -> int:
    try:
        with open(args.file, encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {args.file}: {exc}") from None
    ok, lines = check_document(data)
    for line in lines:
        print(line)
    print("pass" if ok else "FAIL")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_reproduce(args) -> int:
    if args.fault == "hermite":
        with hermite_fault():
            results = run_all(args.only)
    else:
        results = run_all(args.only)
    passed = sum(r.ok for r in results)
    if args.json:
        print(_dump([
            {
                "name": r.name,
                "group": r.group,
                "ok": r.ok,
                "error": r.error,
                "checks": [{"label": c.label, "ok": c.ok} for c in r.checks],
                "notes": r.notes,
            }
            for r in results
        ]))
    else:
        for r in results:
            bad = [c.label for c in r.checks if not c.ok]
            print(f"{'pass' if r.ok else 'FAIL'} {r.name} ({len(r.checks)} checks)")
            for label in bad:
                print(f"    failed: {label}")
            if r.error:
                print(f"    error: {r.error}")
            for note in r.notes:
                print(f"    warning: {note}")
        print(f"{passed}/{len(results)} examples pass")
    return EXIT_OK if passed == len(results) else EXIT_FAIL


# -- parser --------------------------------------------------------------------------


def _add_diagram_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--blocks", help="block coordinates, e.g. 2,3,5,7,10")
    p.add_argument("--frobenius", help='Frobenius symbol "s1,...|t1,..."')
    p.add_argument("--coords", help='k-block coordinates, e.g. "0,3,4|2"')


def _add_spec_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--sig", help="signature, checked against the coordinates")
    p.add_argument("--coords", required=True, help='k-block coordinates, e.g. "0|3,4,6"')
    p.add_argument("--perm", required=True, help="flip permutation, e.g. 0,1,3,2")
    p.add_argument("--json", action="store_true", help="machine-readable output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mayacycles",
        description="Rational solutions of dressing chains and Painleve systems from cyclic Maya diagrams.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("show", help="render a Maya diagram")
    _add_diagram_args(p)
    p.add_argument("--ascii", action="store_true", help="use #, . and | glyphs")
    p.set_defaults(func=cmd_show)

    p = sub.add_parser("classify", help="cyclic signature and k-block coordinates of a diagram")
    _add_diagram_args(p)
    p.add_argument("--k", type=int, required=True, help="shift")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("enumerate", help="list (and optionally verify) cyclic specs")
    p.add_argument("--p", type=int, required=True, help="period")
    p.add_argument("--k", type=int, required=True, help="shift")
    p.add_argument("--max", type=int, default=4, help="largest coordinate (default 4)")
    p.add_argument("--degenerate", action="store_true", help="admit repeated coordinates")
    p.add_argument("--perms", help="'all' or a number of random permutations per diagram")
    p.add_argument("--verify", action="store_true", help="build and verify every spec")
    p.add_argument("--count", action="store_true", help="print totals only")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for --verify")
    p.add_argument("--seed", type=int, default=0, help="seed for random permutations")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("solve", help="build and verify one spec")
    _add_spec_args(p)
    p.add_argument("-o", "--output", help="also write the JSON document to this file")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("scalar", help="P_IV / P_V reduction of a 3- or 4-cycle")
    _add_spec_args(p)
    p.set_defaults(func=cmd_scalar)

    p = sub.add_parser("verify", help="re-verify a JSON document written by solve")
    p.add_argument("file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("reproduce", help="re-derive the worked examples")
    p.add_argument("--only", choices=["p4", "p5", "a4", "tau"])
    p.add_argument("--fault", choices=["hermite"], help="inject a canary fault")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(func=cmd_reproduce)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (MayaError, CycleError, TauError, PainleveError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
