"""Command-line surface.

Every command reads an instance file, runs one operation, and prints a JSON
document, so the whole corpus can be driven from CI scripts.  Points are
addressed by 0-based index into the sorted spectrum (`spectrum` shows the
numbering).  Exit codes: 0 success, 1 input or validation error, 2 theorem
violation, 3 internal error.
"""

import argparse
import json
import sys

from .algebra import AlgebraError, parse_element
from .comodule import ComoduleError, h_radical, invariant_subalgebra, invariants, is_h_reduced, is_h_simple
from .fields import FieldError
from .fuzz import fuzz, render_summary
from .hopf import HopfError
from .instances import InstanceError, instance_digest, parse_instance
from .invariant_theory import (
    TheoremViolation,
    brute_fiber,
    coaction_charpoly,
    coaction_charpoly_oracle,
    fiber,
    free_basis_over_invariants,
    ideal_correspondence_check,
    integral_space,
    invariance_check,
    is_galois,
    orbital,
    stabilizer,
    weak_reductivity_certificate,
    weak_reductivity_check,
)
from .report import ALL_SECTIONS, render_report, run_report
from .spectrum import maximal_ideals


def _emit(doc):
    sys.stdout.write(json.dumps(doc, sort_keys=True, separators=(",", ":"),
                                ensure_ascii=False) + "\n")


def _fmt_space(alg, space):
    return [alg.format_element(r) for r in space.rows]


def _point_arg(C, index):
    points = maximal_ideals(C.algebra)
    if not 0 <= index < len(points):
        raise InstanceError(f"point index {index} out of range 0..{len(points) - 1}")
    return points[index]


def cmd_validate(args):
    C = parse_instance(args.instance)
    _emit({"ok": True, "digest": instance_digest(C),
           "dim_algebra": C.algebra.dim, "dim_hopf": C.hopf.dim})
    return 0


def cmd_report(args):
    C = parse_instance(args.instance)
    selections = args.sections.split(",") if args.sections else None
    doc = run_report(C, selections)
    sys.stdout.write(render_report(doc))
    return 2 if doc["alarms"] else 0


def cmd_invariants(args):
    C = parse_instance(args.instance)
    space = invariants(C)
    _emit({"dim": space.dim, "basis": _fmt_space(C.algebra, space)})
    return 0


def cmd_charpoly(args):
    C = parse_instance(args.instance)
    a = parse_element(C.algebra, args.elem)
    cp = coaction_charpoly(C, a)
    oracle = coaction_charpoly_oracle(C, a)
    verdict = invariance_check(C, a, charpoly=cp)
    _emit({
        "element": C.algebra.format_element(a),
        "coeffs": [C.algebra.format_element(c) for c in cp.coeffs],
        "invariant_flags": list(cp.invariant_flags),
        "all_invariant": verdict.all_invariant,
        "norm": C.algebra.format_element(cp.norm),
        "oracle_agrees": tuple(cp.coeffs) == tuple(oracle),
    })
    return 0


def cmd_spectrum(args):
    C = parse_instance(args.instance)
    inv = invariant_subalgebra(C)
    up = [{"index": i, "ideal": _fmt_space(C.algebra, pt.ideal), "degree": pt.degree}
          for i, pt in enumerate(maximal_ideals(C.algebra))]
    down = [{"index": i, "ideal": _fmt_space(inv.algebra, pt.ideal), "degree": pt.degree}
            for i, pt in enumerate(maximal_ideals(inv.algebra))]
    _emit({"points": up, "invariant_points": down})
    return 0


def cmd_radical(args):
    C = parse_instance(args.instance)
    rad = h_radical(C)
    _emit({"h_radical_dim": rad.dim, "h_radical": _fmt_space(C.algebra, rad),
           "h_reduced": is_h_reduced(C)})
    return 0


def cmd_simple(args):
    C = parse_instance(args.instance)
    _emit({"h_simple": is_h_simple(C)})
    return 0


def cmd_orbit(args):
    C = parse_instance(args.instance)
    pt = _point_arg(C, args.point)
    orb = orbital(C, pt)
    T = orb.tensor.algebra
    _emit({
        "point": _fmt_space(C.algebra, pt.ideal),
        "degree": pt.degree,
        "rank": orb.e_dim,
        "basis": [T.format_element(r) for r in orb.space.rows],
        "reps": [C.algebra.format_element(r) for r in orb.reps],
    })
    return 0


def cmd_stabilizer(args):
    C = parse_instance(args.instance)
    pt = _point_arg(C, args.point)
    st = stabilizer(C, pt)
    T = st.tensor.algebra
    _emit({
        "point": _fmt_space(C.algebra, pt.ideal),
        "rank": st.e_dim,
        "semisimple": st.semisimple,
        "basis": [T.format_element(r) for r in st.space.rows],
    })
    return 0


def cmd_fiber(args):
    C = parse_instance(args.instance)
    inv = invariant_subalgebra(C)
    down = maximal_ideals(inv.algebra)
    if not 0 <= args.q < len(down):
        raise InstanceError(f"invariant point index {args.q} out of range 0..{len(down) - 1}")
    q = down[args.q]
    one = fiber(C, q.ideal, inv=inv)
    other = brute_fiber(C, q.ideal, inv=inv)
    agree = [s.rows for s in one] == [s.rows for s in other]
    if not agree:
        raise TheoremViolation("fiber routes disagreed")
    _emit({
        "q": _fmt_space(inv.algebra, q.ideal),
        "size": len(one),
        "fiber": [_fmt_space(C.algebra, s) for s in one],
        "routes_agree": agree,
    })
    return 0


def cmd_galois(args):
    C = parse_instance(args.instance)
    rep = is_galois(C)
    _emit({"galois": rep.galois, "gamma_rank": rep.gamma_rank,
           "expected_rank": rep.expected_rank, "orbital_ranks": list(rep.orbital_ranks)})
    return 0


def cmd_integral(args):
    C = parse_instance(args.instance)
    data = integral_space(C)
    doc = {
        "maps_dim": data.maps.dim,
        "values": _fmt_space(C.algebra, data.values),
        "has_total": data.has_total,
    }
    if data.total is not None:
        H = C.hopf
        doc["total"] = {H.alg.labels[j]: C.algebra.format_element(data.total.col(j))
                        for j in range(H.dim)}
    _emit(doc)
    return 0


def cmd_freebasis(args):
    C = parse_instance(args.instance)
    data = free_basis_over_invariants(C)
    _emit({
        "ranks": list(data.ranks),
        "factors": [{
            "idempotent": C.algebra.format_element(f.idempotent),
            "rank": f.rank,
            "reps": [C.algebra.format_element(r) for r in f.reps],
            "corner_dim": f.corner_dim,
        } for f in data.factors],
    })
    return 0


def cmd_corr_check(args):
    C = parse_instance(args.instance)
    rep = ideal_correspondence_check(C)
    _emit({"costable_ideals": rep.costable_count,
           "invariant_ideals": rep.invariant_count, "ok": rep.ok})
    return 0


def cmd_reductivity(args):
    C = parse_instance(args.instance)
    cert = weak_reductivity_certificate(C)
    all_ok, rows = weak_reductivity_check(C)
    _emit({"certificate": cert.kind, "detail": cert.detail,
           "family_surjective": all_ok, "family_size": len(rows)})
    return 0


def cmd_fuzz(args):
    summary = fuzz(args.seed, args.count, field_names=args.field or None,
                   artifact_dir=args.artifacts, max_dim=args.max_dim)
    sys.stdout.write(render_summary(summary))
    return 2 if summary["alarms"] else 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="hopfinv",
        description="Exact invariant theory of finite-dimensional comodule algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text, instance=True):
        p = sub.add_parser(name, help=help_text)
        if instance:
            p.add_argument("instance", help="instance JSON file")
        p.set_defaults(fn=fn)
        return p

    add("validate", cmd_validate, "parse and check every axiom")
    p = add("report", cmd_report, "full deterministic report")
    p.add_argument("--sections", help="comma-separated subset of: " + ",".join(ALL_SECTIONS))
    add("invariants", cmd_invariants, "basis of the invariant subalgebra")
    p = add("charpoly", cmd_charpoly, "coaction characteristic polynomial")
    p.add_argument("--elem", required=True, help="element, e.g. '2*x + 1'")
    add("spectrum", cmd_spectrum, "maximal ideals upstairs and downstairs")
    add("radical", cmd_radical, "largest costable nil ideal")
    add("simple", cmd_simple, "no nonzero proper costable ideal?")
    p = add("orbit", cmd_orbit, "orbital algebra at a point")
    p.add_argument("--point", type=int, required=True, help="index into spectrum")
    p = add("stabilizer", cmd_stabilizer, "stabilizer algebra at a point")
    p.add_argument("--point", type=int, required=True, help="index into spectrum")
    p = add("fiber", cmd_fiber, "fiber over an invariant point, both routes")
    p.add_argument("--q", type=int, required=True, help="index into the invariant spectrum")
    add("galois", cmd_galois, "Galois test by both criteria")
    add("integral", cmd_integral, "space of comodule maps H -> A")
    add("freebasis", cmd_freebasis, "free module basis over the invariants")
    add("corr-check", cmd_corr_check, "costable ideal correspondence round trips")
    add("reductivity", cmd_reductivity, "weak reductivity certificate and check")
    p = add("fuzz", cmd_fuzz, "seeded random corpus", instance=False)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--field", action="append", help="field name, repeatable (default Q,F2,F3)")
    p.add_argument("--max-dim", type=int, default=None, help="cap on dim A * dim H")
    p.add_argument("--artifacts", default=None, help="directory for alarm instances")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except TheoremViolation as exc:
        sys.stderr.write(f"theorem violation: {exc}\n")
        return 2
    except (InstanceError, FieldError, AlgebraError, HopfError, ComoduleError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except Exception as exc:  # noqa: BLE001 - the exit-code contract needs a catch-all
        sys.stderr.write(f"internal error: {exc!r}\n")
        return 3


if __name__ == "__main__":
    sys.exit(main())
