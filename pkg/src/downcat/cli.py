"""Command-line entry point.

Exit codes: 0 pass, 1 check failure, 2 input error, 3 resource bound.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys

from .config import PROFILES, Limits
from .corpus import BUILTIN_NAMES, builtin
from .down import build_down, build_down_star, check_direct, down_to_json, last_functor
from .errors import DowncatError, ParseError, SizeLimitExceeded
from .fincat import category_to_dot, load_category_file, validate_category
from .ladder import (
    LadderObject,
    LadderVariant,
    enumerate_ladder_homs,
    hom_leq,
    up_max,
)
from .reedy import ReedyCategory, validate_reedy

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_BOUND = 3


def _load(ref: str) -> ReedyCategory:
    """A builtin:NAME reference or a JSON file path with a reedy block."""
    if ref.startswith("builtin:"):
        return builtin(ref[len("builtin:"):]).data
    cat, reedy = load_category_file(ref)
    if reedy is None:
        raise ParseError(f"{ref} has no reedy block")
    return ReedyCategory.build(cat, reedy["minus"], reedy["plus"])


def cmd_validate(args) -> int:
    try:
        rc = _load(args.path)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    cat_report = validate_category(rc.cat)
    reedy_report = validate_reedy(rc)
    print(cat_report.render())
    print(reedy_report.render())
    return EXIT_PASS if cat_report.ok and reedy_report.ok else EXIT_FAIL


def cmd_down(args) -> int:
    try:
        rc = _load(args.path)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        if args.star:
            dc = build_down_star(rc, max_len=args.max_len)
        else:
            dc = build_down(rc)
    except SizeLimitExceeded as exc:
        print(f"resource bound: {exc}", file=sys.stderr)
        return EXIT_BOUND
    res = check_direct(dc.cat)
    name = "Down*" if args.star else "Down"
    print(
        f"{name}({rc.cat.name}): {dc.cat.n_objects} objects, "
        f"{dc.cat.n_morphisms} morphisms, "
        f"{'direct' if res.direct else 'NOT direct: ' + res.witness}"
    )
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(down_to_json(dc), fh, indent=2)
        print(f"wrote {args.json}")
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(category_to_dot(dc.cat))
        print(f"wrote {args.dot}")
    return EXIT_PASS if res.direct else EXIT_FAIL


def _parse_chain(rc: ReedyCategory, spec: str) -> LadderObject:
    labels = {rc.cat.mor_labels[m]: m for m in rc.cat.morphisms()}
    objects = {rc.cat.obj_labels[x]: x for x in rc.cat.objects()}
    if spec in objects:
        return LadderObject.of_object(rc, objects[spec])
    try:
        chain = tuple(labels[part] for part in spec.split(";"))
    except KeyError as exc:
        raise ParseError(f"unknown morphism label {exc}")
    return LadderObject.of_chain(rc, chain)


def cmd_hom(args) -> int:
    try:
        rc = _load(args.path)
        a = _parse_chain(rc, args.src)
        b = _parse_chain(rc, args.dst)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    variant = LadderVariant(args.variant)
    hom = enumerate_ladder_homs(rc, variant, a, b)
    print(f"Hom[{variant.value}]({a.label()}, {b.label()}): {len(hom)} morphisms")
    maxima = {up_max(m, variant) for m in hom}
    for m in hom:
        covers = [
            other.label()
            for other in hom
            if m != other
            and hom_leq(m, other)
            and not any(
                hom_leq(m, mid) and hom_leq(mid, other) and mid not in (m, other)
                for mid in hom
            )
        ]
        mark = " (class max)" if m in maxima else ""
        arrow = f" < {', '.join(covers)}" if covers else ""
        print(f"  {m.label()}{mark}{arrow}")
    return EXIT_PASS


def cmd_localize(args) -> int:
    from .localization import counterexample_suite, weak_localization_report

    if args.action == "counterexample":
        report = counterexample_suite()
    else:
        try:
            rc = _load(args.path)
        except ParseError as exc:
            print(f"parse error: {exc}", file=sys.stderr)
            return EXIT_INPUT
        try:
            report = weak_localization_report(rc, cap=args.bound)
        except SizeLimitExceeded as exc:
            print(f"resource bound: {exc}", file=sys.stderr)
            return EXIT_BOUND
    print(report.render())
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(report.to_json(), fh, indent=2)
    return EXIT_PASS if report.ok else EXIT_FAIL


def cmd_sset(args) -> int:
    from .localization import SuiteReport
    from .suites import comparison_suite, endofunctor_formula_suite, horn_suite

    limits = dataclasses.replace(
        PROFILES[args.profile],
        dim=args.dim if args.dim is not None else PROFILES[args.profile].dim,
    )
    try:
        if args.check == "endofunctors":
            report = endofunctor_formula_suite(limits)
        elif args.check == "connecting":
            report = _connecting_report(limits, args.n)
        elif args.check == "horns":
            report = _horn_report(limits, args.n, "plain")
        elif args.check == "horns-i":
            report = _horn_report(limits, args.n, "i")
        elif args.check == "comparison":
            report = comparison_suite(limits)
        else:  # cylinder
            report = _cylinder_report(limits)
    except SizeLimitExceeded as exc:
        print(f"resource bound: {exc}", file=sys.stderr)
        return EXIT_BOUND
    print(report.render())
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(report.to_json(), fh, indent=2)
        print(f"wrote {args.json}")
    return EXIT_PASS if report.ok else EXIT_FAIL


def _connecting_report(limits: Limits, n: int | None):
    from .localization import SuiteReport
    from .sset.base import standard_simplex
    from .sset.connect import connecting_map, cylinder_into_esdpi, x_into
    from .sset.kan import EndofunctorKind as EK, evaluate_endofunctor

    report = SuiteReport("connecting-maps")
    top = n if n is not None else 2
    d = limits.dim
    for nn in range(top + 1):
        X = standard_simplex(nn, 2 * d + 1)
        Ks = {
            k: evaluate_endofunctor(k, X, d, alpha_bound=limits.resolved_alpha_bound())
            for k in EK
        }
        maps = {
            "dcp->esd": connecting_map(Ks[EK.DCP], Ks[EK.ESD]),
            "dcpi->esdi": connecting_map(Ks[EK.DCPI], Ks[EK.ESDI]),
            "esd->esd'": connecting_map(Ks[EK.ESD], Ks[EK.ESDP]),
            "esdi->esdi'": connecting_map(Ks[EK.ESDI], Ks[EK.ESDPI]),
            "dcp->dcpi": connecting_map(Ks[EK.DCP], Ks[EK.DCPI]),
            "esd->esdi": connecting_map(Ks[EK.ESD], Ks[EK.ESDI]),
            "esd'->esdi'": connecting_map(Ks[EK.ESDP], Ks[EK.ESDPI]),
        }
        valid = all(m.validate().ok for m in maps.values())
        surj = maps["dcp->esd"].is_surjective() and maps["dcpi->esdi"].is_surjective()
        hooks = all(
            maps[k].is_injective()
            for k in ("esd->esd'", "esdi->esdi'", "dcp->dcpi", "esd->esdi", "esd'->esdi'")
        )
        units = [x_into(Ks[EK.ESDP]), x_into(Ks[EK.DCPI]), x_into(Ks[EK.ESDI])]
        _, cyl_map = cylinder_into_esdpi(Ks[EK.ESDPI])
        units.append(cyl_map)
        units_ok = all(u.validate().ok and u.is_injective() for u in units)
        sq1 = all(
            maps["esd->esdi"].mapping[k][maps["dcp->esd"].mapping[k][c]]
            == maps["dcpi->esdi"].mapping[k][maps["dcp->dcpi"].mapping[k][c]]
            for k in range(d + 1)
            for c in range(Ks[EK.DCP].sset.n_cells(k))
        )
        sq2 = all(
            maps["esdi->esdi'"].mapping[k][maps["esd->esdi"].mapping[k][c]]
            == maps["esd'->esdi'"].mapping[k][maps["esd->esd'"].mapping[k][c]]
            for k in range(d + 1)
            for c in range(Ks[EK.ESD].sset.n_cells(k))
        )
        report.record(
            f"Δ{nn}: natural, surjective collapses, injective hooks, "
            "commuting squares",
            valid and surj and hooks and units_ok and sq1 and sq2,
        )
    return report


def _horn_report(limits: Limits, n: int | None, flavor_name: str):
    from .localization import SuiteReport
    from .sset.horn import HornFlavor, filling_schedule

    flavor = HornFlavor.PLAIN if flavor_name == "plain" else HornFlavor.I
    top = n if n is not None else (
        limits.horn_plain_max if flavor is HornFlavor.PLAIN else limits.horn_i_max
    )
    report = SuiteReport(f"horn-schedules[{flavor.value}]")
    for nn in range(top + 1):
        cert = filling_schedule(nn, flavor)
        report.record(
            f"n={nn}: {len(cert.steps)} fillings, {cert.base_cells} -> "
            f"{cert.final_cells} of {cert.codomain_cells} cells",
            cert.ok,
        )
        report.meta[f"schedule_n{nn}"] = cert.to_json()
    return report


def _cylinder_report(limits: Limits):
    from .corpus import w3
    from .localization import SuiteReport
    from .sset.base import nerve_functor_map, nerve_truncated, validate_simplicial
    from .sset.cylinder import mapping_cylinder

    report = SuiteReport("mapping-cylinder")
    rc = w3()
    dc = build_down(rc)
    lf = last_functor(rc, dc)
    d = limits.dim
    T = nerve_truncated(dc.cat, 2 * d + 1)
    S = nerve_truncated(rc.cat, 2 * d + 1)
    lam = nerve_functor_map(lf.functor, T, S)
    cyl = mapping_cylinder(lam, d, alpha_bound=limits.resolved_alpha_bound())
    report.record(
        "cylinder of last over W3 builds",
        validate_simplicial(cyl.dcp_cyl).ok
        and validate_simplicial(cyl.esdp_cyl).ok
        and cyl.comparison.validate().ok,
        witness=f"{len(cyl.collapse_edges)} collapse edges",
    )
    return report


def cmd_selftest(args) -> int:
    from .suites import run_selftest

    limits = PROFILES[args.profile]
    reports = run_selftest(limits)
    for report in reports:
        print(report.render())
    ok = all(r.ok for r in reports)
    summary = {
        "profile": args.profile,
        "ok": ok,
        "suites": [r.to_json() for r in reports],
    }
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(summary, fh, indent=2)
        print(f"wrote {args.json}")
    print(f"selftest: {'PASS' if ok else 'FAIL'}")
    return EXIT_PASS if ok else EXIT_FAIL


def cmd_export(args) -> int:
    try:
        rc = _load(args.path)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    dot = category_to_dot(rc.cat)
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(dot)
        print(f"wrote {args.dot}")
    else:
        print(dot)
    return EXIT_PASS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="downcat",
        description="Finite Reedy categories, their direct replacements, and "
        "exhaustive desk-scale certification.",
        epilog=f"builtins: {', '.join('builtin:' + n for n in BUILTIN_NAMES)}",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="validate a category + Reedy structure")
    p.add_argument("path")
    p.set_defaults(fn=cmd_validate)

    p = sub.add_parser("down", help="build Down(C) or bounded Down*(C)")
    downsub = p.add_subparsers(dest="action", required=True)
    pb = downsub.add_parser("build")
    pb.add_argument("path")
    pb.add_argument("--star", action="store_true", help="bounded Down*(C)")
    pb.add_argument("--max-len", type=int, default=None)
    pb.add_argument("--dot")
    pb.add_argument("--json")
    pb.set_defaults(fn=cmd_down)

    p = sub.add_parser("hom", help="print a ladder hom-poset with Hasse edges")
    p.add_argument("path")
    p.add_argument("--variant", choices=[v.value for v in LadderVariant], default="strict")
    p.add_argument("--src", required=True, help="object label or ';'-chain of morphism labels")
    p.add_argument("--dst", required=True)
    p.set_defaults(fn=cmd_hom)

    p = sub.add_parser("localize", help="localization certificates")
    locsub = p.add_subparsers(dest="action", required=True)
    pc = locsub.add_parser("check")
    pc.add_argument("path")
    pc.add_argument("--bound", type=int, default=2_000_000)
    pc.add_argument("--json")
    pc.set_defaults(fn=cmd_localize)
    px = locsub.add_parser("counterexample")
    px.add_argument("--json")
    px.set_defaults(fn=cmd_localize)

    p = sub.add_parser("sset", help="simplicial machinery checks")
    ssub = p.add_subparsers(dest="action", required=True)
    pr = ssub.add_parser("run")
    pr.add_argument(
        "check",
        choices=["endofunctors", "connecting", "horns", "horns-i", "comparison", "cylinder"],
    )
    pr.add_argument("--n", type=int, default=None)
    pr.add_argument("--dim", type=int, default=None)
    pr.add_argument("--profile", choices=sorted(PROFILES), default="default")
    pr.add_argument("--json")
    pr.set_defaults(fn=cmd_sset)

    p = sub.add_parser("selftest", help="run every acceptance suite")
    p.add_argument("--profile", choices=sorted(PROFILES), default="default")
    p.add_argument("--json")
    p.set_defaults(fn=cmd_selftest)

    p = sub.add_parser("export", help="DOT export of a category")
    p.add_argument("path")
    p.add_argument("--dot")
    p.set_defaults(fn=cmd_export)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SizeLimitExceeded as exc:
        print(f"resource bound: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except DowncatError as exc:
        print(f"check failure: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
