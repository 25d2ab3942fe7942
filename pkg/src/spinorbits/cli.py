"""Command-line front end with byte-stable JSON/CSV/table output.

Exit codes: 0 success, 1 verification failure, 2 usage error.
All output is deterministic: keys sorted, lists in lexicographic order;
--seed and --parallelism are accepted for interface stability but do not
affect results (everything is exact and runs on one worker).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .halfint import HalfInt
from .weights import Weight
from . import clifford as _clif
from . import counting as _count
from . import orbits as _orb
from . import spectra as _spec
from . import weyl as _weyl


def _emit(payload, fmt: str = "json") -> None:
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True, default=str))
    else:
        print(payload)


def _parse_weight(text: str, ambient: str) -> Weight:
    return Weight(tuple(HalfInt.parse(t) for t in text.split(",")), ambient)


def _orbit_case(args) -> _orb.OrbitCase:
    if getattr(args, "diagram", None):
        d = _orb.parse_diagram(args.diagram)
        oc = _orb.classify_case(d)
        if oc is None:
            raise SystemExit(f"diagram {args.diagram} is outside the eight-case family")
        return oc
    if None in (getattr(args, "a", None), getattr(args, "b", None), getattr(args, "k", None)):
        raise SystemExit("pass either --diagram or all of --a/--b/--k")
    forms = _orb.enumerate_real_forms(args.a, args.b, args.k)
    if not forms:
        raise SystemExit(f"no orbits with signature ({args.a},{args.b}) at k={args.k}")
    if getattr(args, "case", None):
        forms = [f for f in forms if f.case_id == args.case]
    return forms[0]


def cmd_orbits_list(args) -> int:
    forms = _orb.enumerate_real_forms(args.a, args.b, args.k)
    _emit(
        [
            {
                "diagram": str(f.diagram),
                "case": f.case_id,
                "k": f.k,
                "rPlus": f.r_plus,
                "rMinus": f.r_minus,
                "signature": list(f.signature),
                "componentGroup": _orb.component_group(f),
                "flags": list(f.flags),
            }
            for f in forms
        ]
    )
    return 0


def cmd_orbits_component_group(args) -> int:
    d = _orb.parse_diagram(args.diagram)
    _emit({"diagram": str(d), "componentGroup": _orb.component_group(d)})
    return 0


def cmd_orbits_dim(args) -> int:
    d = _orb.parse_diagram(args.diagram)
    cdim, kdim, small = _orb.orbit_dimension(d)
    oracle = _orb.centralizer_nullity_dimension(d)
    _emit(
        {
            "diagram": str(d),
            "complexDim": cdim,
            "kOrbitDim": kdim,
            "isSmall": small,
            "oracleDim": oracle,
            "oracleAgrees": oracle == cdim,
        }
    )
    return 0 if oracle == cdim else 1


def cmd_clifford_verify(args) -> int:
    d = _orb.parse_diagram(args.diagram)
    report = _clif.verify_component_reps(d)
    _emit(report)
    return 0 if report["ok"] else 1


def cmd_spectra_sections(args) -> int:
    oc = _orbit_case(args)
    cs = _spec.case_spectra(oc)
    target = str(_orb.parse_diagram(args.diagram))
    rows = []
    for orbit, _, psis in cs.columns:
        if orbit != target:
            continue
        for name, psi in sorted(psis.items()):
            if args.psi and name != args.psi:
                continue
            members = psi.enumerate(args.bound)
            rows.append(
                {
                    "orbit": orbit,
                    "psi": name,
                    "chi": str(psi.chi),
                    "definingKType": psi.defining_ktype.to_json() if psi.defining_ktype else None,
                    "count": len(members),
                    "members": [v.to_json() for v in members],
                }
            )
    if not rows:
        raise SystemExit(f"orbit {target} not found in its case table")
    _emit(rows)
    return 0


def cmd_spectra_rep(args) -> int:
    oc = _orbit_case(args)
    cs = _spec.case_spectra(oc)
    rows = []
    for name, rep in sorted(cs.reps.items()):
        if args.name and name != args.name:
            continue
        members = rep.enumerate(args.bound)
        rows.append(
            {
                "name": name,
                "case": oc.case_id,
                "conjectural": rep.conjectural,
                "count": len(members),
                "members": [v.to_json() for v in members],
            }
        )
    _emit(rows)
    return 0


def cmd_spectra_match(args) -> int:
    oc = _orbit_case(args)
    report = _spec.matchup_verify(oc, args.bound, strict=False)
    ok = report.ok
    if args.format == "json":
        _emit(
            {
                "case": report.case_id,
                "signature": list(report.signature),
                "bound": report.bound,
                "rows": report.rows,
                "centralCharacterRows": report.central_rows,
                "ok": ok,
            }
        )
    elif args.format == "csv":
        print("row,rep,orbit,psis,equal,count")
        for row in report.rows:
            for cell in row["cells"]:
                print(
                    f"{row['row']},{cell['rep']},{cell['orbit']},"
                    f"{'+'.join(cell['psis'])},{cell['equal']},{cell['count']}"
                )
    else:
        for row in report.rows:
            cells = "  ".join(
                f"{c['rep']}={'+'.join(c['psis'])}@{c['orbit']}:{'OK' if c['equal'] else 'FAIL'}"
                for c in row["cells"]
            )
            print(f"{row['row']:6s} {cells}")
    return 0 if ok else 1


def cmd_count_unipotent(args) -> int:
    sig = None
    if args.signature:
        a, b = (int(x) for x in args.signature.split(","))
        sig = (a, b)
    res = _count.count_unipotent(args.n, args.k, sig)
    _emit(res)
    return 0


def cmd_count_cartans(args) -> int:
    a, b = (int(x) for x in args.signature.split(","))
    cartans = _count.enumerate_cartans(a, b)
    rows = []
    for c in cartans:
        row = {
            "label": c.label(),
            "rPlus": c.r_plus,
            "rMinus": c.r_minus,
            "m": c.m,
            "s": c.s,
            "components": _count.cartan_component_count(c),
            "abelian": _count.is_abelian_cartan(c),
        }
        if args.n is not None and args.k is not None:
            row["survives"] = _count.survives_sign_test(c, (args.n, args.k, (a, b)))
        rows.append(row)
    _emit(rows)
    return 0


def cmd_oracle_tensor(args) -> int:
    lam = _parse_weight(args.lam, args.type)
    mu = _parse_weight(args.mu, args.type)
    out = _weyl.tensor_decompose(lam, mu, args.rank_cap)
    _emit(sorted([[w.to_json(), m] for w, m in out.items()]))
    return 0


def cmd_oracle_branch(args) -> int:
    lam = tuple(int(x) for x in args.lam.split(","))
    out = _weyl.littlewood_branch(lam, args.m)
    _emit(sorted([[w.to_json(), m] for w, m in out.items()]))
    return 0


def cmd_oracle_identity(args) -> int:
    holds = _weyl.check_denominator_identity(args.n, args.k, args.rank_cap)
    _emit({"n": args.n, "k": args.k, "holds": holds})
    return 0 if holds else 1


def cmd_verify_all(args) -> int:
    n, k, bound = args.n, args.k, args.bound
    results = []

    def record(name, ok, detail=None):
        results.append({"check": name, "ok": bool(ok), "detail": detail})

    counts = _count.count_unipotent(n, k)
    for g in counts["groups"]:
        oc = _orb.enumerate_real_forms(*g["signature"], k)[0]
        want = _count.expected_n_total(oc.case_id, oc.r_plus, oc.r_minus)
        record(
            f"count {tuple(g['signature'])}",
            g["nTotal"] == want,
            {"got": g["nTotal"], "want": want},
        )
    for g in counts["groups"]:
        sig = tuple(g["signature"])
        oc = _orb.enumerate_real_forms(*sig, k)[0]
        try:
            rep = _spec.matchup_verify(oc, bound, strict=False)
            record(f"matchup {sig}", rep.ok)
        except Exception as ex:  # pragma: no cover - surfaced in the report
            record(f"matchup {sig}", False, str(ex))
        for f in _orb.enumerate_real_forms(*sig, k):
            rep = _clif.verify_component_reps(f)
            record(f"clifford {f.diagram}", rep["ok"])
            cdim, kdim, small = _orb.orbit_dimension(f.diagram)
            oracle = _orb.centralizer_nullity_dimension(f.diagram)
            record(f"dimension {f.diagram}", cdim == oracle and small)
    if n <= _weyl.DEFAULT_RANK_CAP:
        record(f"denominator identity n={n}", _weyl.check_denominator_identity(n, k))
    ok = all(r["ok"] for r in results)
    _emit({"n": n, "k": k, "bound": bound, "checks": results, "ok": ok})
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="spinorbits")
    ap.add_argument("--seed", type=int, default=None, help="accepted and ignored")
    ap.add_argument("--parallelism", type=int, default=None, help="accepted; runs deterministically")
    ap.add_argument("--rank-cap", type=int, default=_weyl.DEFAULT_RANK_CAP)
    sub = ap.add_subparsers(dest="cmd", required=True)

    orbits = sub.add_parser("orbits").add_subparsers(dest="sub", required=True)
    p = orbits.add_parser("list")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(fn=cmd_orbits_list)
    p = orbits.add_parser("component-group")
    p.add_argument("diagram")
    p.set_defaults(fn=cmd_orbits_component_group)
    p = orbits.add_parser("dim")
    p.add_argument("diagram")
    p.set_defaults(fn=cmd_orbits_dim)

    cliff = sub.add_parser("clifford").add_subparsers(dest="sub", required=True)
    p = cliff.add_parser("verify-orbit")
    p.add_argument("diagram")
    p.set_defaults(fn=cmd_clifford_verify)

    spec = sub.add_parser("spectra").add_subparsers(dest="sub", required=True)
    p = spec.add_parser("sections")
    p.add_argument("--diagram", required=True)
    p.add_argument("--psi")
    p.add_argument("--bound", type=int, default=8)
    p.set_defaults(fn=cmd_spectra_sections)
    p = spec.add_parser("rep")
    p.add_argument("--diagram")
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--case", type=int)
    p.add_argument("--name")
    p.add_argument("--bound", type=int, default=8)
    p.set_defaults(fn=cmd_spectra_rep)
    p = spec.add_parser("match")
    p.add_argument("--diagram")
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--case", type=int)
    p.add_argument("--bound", type=int, default=8)
    p.add_argument("--format", choices=("json", "csv", "table"), default="json")
    p.set_defaults(fn=cmd_spectra_match)

    count = sub.add_parser("count").add_subparsers(dest="sub", required=True)
    p = count.add_parser("unipotent")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--signature")
    p.set_defaults(fn=cmd_count_unipotent)
    p = count.add_parser("cartans")
    p.add_argument("--signature", required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.set_defaults(fn=cmd_count_cartans)

    oracle = sub.add_parser("oracle").add_subparsers(dest="sub", required=True)
    p = oracle.add_parser("tensor")
    p.add_argument("--type", choices=("A", "B", "D"), default="D")
    p.add_argument("lam")
    p.add_argument("mu")
    p.set_defaults(fn=cmd_oracle_tensor)
    p = oracle.add_parser("branch")
    p.add_argument("--lam", required=True)
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(fn=cmd_oracle_branch)
    p = oracle.add_parser("identity")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(fn=cmd_oracle_identity)

    verify = sub.add_parser("verify").add_subparsers(dest="sub", required=True)
    p = verify.add_parser("all")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--bound", type=int, default=8)
    p.set_defaults(fn=cmd_verify_all)

    return ap


def main(argv=None) -> int:
    if "SPINORBITS_WORKERS" in os.environ:
        # worker count is accepted from the environment; results are
        # deterministic regardless, so the value is not consulted further
        pass
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as ex:
        return 2 if ex.code not in (0, None) else 0
    try:
        return args.fn(args)
    except SystemExit as ex:
        print(str(ex), file=sys.stderr)
        return 2
    except (_spec.MatchupFailure, _clif.RepresentativeFailsToCentralize) as ex:
        print(json.dumps({"ok": False, "error": str(ex)}), file=sys.stderr)
        return 1
    except ValueError as ex:
        print(str(ex), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
