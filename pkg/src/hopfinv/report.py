"""Report documents: one deterministic JSON summary per instance.

A report runs the invariant-theory operations in a fixed order and records
exact values as formatted strings.  Theorem violations never escape: they are
caught per section and appended to the alarm list, so a report either comes
back clean or names every broken statement with its witness text.  Replaying
the same instance reproduces the same bytes.
"""

import json

from .comodule import (
    h_radical,
    invariant_subalgebra,
    invariants,
    is_h_reduced,
    is_h_simple,
    module_direct_sum,
    module_from_algebra,
    module_invariants,
)
from .instances import instance_digest
from .invariant_theory import (
    TheoremViolation,
    brute_fiber,
    coaction_charpoly,
    coaction_charpoly_oracle,
    contracted_point,
    doi_trace_matrix,
    fiber,
    free_basis_over_invariants,
    ideal_correspondence_check,
    integral_space,
    integrality_witness,
    invariance_check,
    is_galois,
    openness_ideal_check,
    orbital,
    orbit_residue_iso_check,
    residue_degree_check,
    stabilizer,
    weak_reductivity_certificate,
    weak_reductivity_check,
)
from .fields import field_name
from .spectrum import maximal_ideals

ALL_SECTIONS = (
    "invariants", "spectrum", "radical", "charpoly", "witness", "points",
    "fiber", "galois", "integral", "openness", "freebasis", "correspondence",
    "reductivity", "residue", "orbit_residue",
)


def _fmt_space(alg, space):
    return [alg.format_element(r) for r in space.rows]


def run_report(C, selections=None):
    """Execute the selected sections (default: all) and return the document."""
    wanted = set(ALL_SECTIONS if selections is None else selections)
    unknown = wanted.difference(ALL_SECTIONS)
    if unknown:
        raise ValueError(f"unknown report sections: {sorted(unknown)}")
    F = C.field
    A, H = C.algebra, C.hopf
    doc = {
        "digest": instance_digest(C),
        "field": field_name(F),
        "dim_algebra": A.dim,
        "dim_hopf": H.dim,
        "sections": {},
        "alarms": [],
    }
    sections = doc["sections"]

    def guarded(name, fn):
        if name not in wanted:
            return
        try:
            sections[name] = fn()
        except TheoremViolation as exc:
            doc["alarms"].append({"section": name, "message": str(exc)})
            sections[name] = {"alarm": str(exc)}

    inv_space = invariants(C)
    reduced = is_h_reduced(C)

    def sec_invariants():
        return {"dim": inv_space.dim, "basis": _fmt_space(A, inv_space)}

    def sec_spectrum():
        inv = invariant_subalgebra(C)
        up = [{"ideal": _fmt_space(A, pt.ideal), "degree": pt.degree}
              for pt in maximal_ideals(A)]
        down = [{"ideal": _fmt_space(inv.algebra, pt.ideal), "degree": pt.degree}
                for pt in maximal_ideals(inv.algebra)]
        return {"points": up, "invariant_points": down}

    def sec_radical():
        rad = h_radical(C)
        return {
            "h_radical_dim": rad.dim,
            "h_radical": _fmt_space(A, rad),
            "h_reduced": reduced,
            "h_simple": is_h_simple(C),
        }

    def sec_charpoly():
        rows = []
        for j in range(A.dim):
            cp = coaction_charpoly(C, A.basis_vec(j), inv_space=inv_space)
            oracle = coaction_charpoly_oracle(C, A.basis_vec(j))
            verdict = invariance_check(C, A.basis_vec(j), h_reduced=reduced, charpoly=cp)
            rows.append({
                "element": A.labels[j],
                "coeffs": [A.format_element(c) for c in cp.coeffs],
                "invariant_flags": list(cp.invariant_flags),
                "all_invariant": verdict.all_invariant,
                "norm": A.format_element(cp.norm),
                "oracle_agrees": tuple(cp.coeffs) == tuple(oracle),
            })
        return rows

    def sec_witness():
        rows = []
        for j in range(A.dim):
            w = integrality_witness(C, A.basis_vec(j), inv_space=inv_space)
            rows.append({
                "element": A.labels[j],
                "kind": w.kind,
                "exponent": w.exponent,
                "poly": [A.format_element(c) for c in w.poly],
            })
        return rows

    def sec_points():
        rows = []
        for pt in maximal_ideals(A):
            orb = orbital(C, pt)
            st = stabilizer(C, pt, orb=orb)
            rows.append({
                "ideal": _fmt_space(A, pt.ideal),
                "degree": pt.degree,
                "orbital_rank": orb.e_dim,
                "stabilizer_rank": st.e_dim,
                "stabilizer_semisimple": st.semisimple,
                "reps": [A.format_element(r) for r in orb.reps],
            })
        return rows

    def sec_fiber():
        inv = invariant_subalgebra(C)
        points = maximal_ideals(A)
        rows = []
        for qpt in maximal_ideals(inv.algebra):
            via_orbit = fiber(C, qpt.ideal, inv=inv, points=points)
            brute = brute_fiber(C, qpt.ideal, inv=inv, points=points)
            agree = [s.rows for s in via_orbit] == [s.rows for s in brute]
            if not agree:
                raise TheoremViolation("fiber routes disagreed",
                                       {"ideal": qpt.ideal})
            rows.append({
                "point": _fmt_space(inv.algebra, qpt.ideal),
                "size": len(via_orbit),
                "routes_agree": agree,
            })
        return rows

    def sec_galois():
        rep = is_galois(C)
        return {
            "galois": rep.galois,
            "gamma_rank": rep.gamma_rank,
            "expected_rank": rep.expected_rank,
            "orbital_ranks": list(rep.orbital_ranks),
        }

    def sec_integral():
        data = integral_space(C)
        out = {
            "maps_dim": data.maps.dim,
            "values_dim": data.values.dim,
            "values": _fmt_space(A, data.values),
            "has_total": data.has_total,
        }
        if data.has_total:
            MA = module_from_algebra(C)
            for name, M in (("A", MA), ("A+A", module_direct_sum(MA, MA))):
                tr = doi_trace_matrix(M, data.total)
                minv = module_invariants(M)
                idempotent = tr.mul(tr) == tr
                into = all(minv.contains(tr.col(j)) for j in range(M.dim))
                fixes = all(tr.mulvec(w) == w for w in minv.rows)
                if not (idempotent and into and fixes):
                    raise TheoremViolation("trace is not a retraction onto the invariants",
                                           {"module": name})
            out["trace_retraction"] = True
        return out

    def sec_openness():
        rows = []
        for j in range(A.dim):
            cp = coaction_charpoly(C, A.basis_vec(j), inv_space=inv_space)
            if not cp.all_invariant():
                rows.append({"element": A.labels[j], "skipped": "noninvariant coefficients"})
                continue
            rep = openness_ideal_check(C, A.basis_vec(j))
            rows.append({
                "element": A.labels[j],
                "matched": rep.matched,
                "invertible_points": list(rep.invertible_points),
                "image_points": list(rep.image_points),
            })
        return rows

    def sec_freebasis():
        if not reduced:
            return {"skipped": "not H-reduced"}
        data = free_basis_over_invariants(C)
        return {
            "ranks": list(data.ranks),
            "factors": [{
                "idempotent": A.format_element(f.idempotent),
                "rank": f.rank,
                "reps": [A.format_element(r) for r in f.reps],
                "corner_dim": f.corner_dim,
            } for f in data.factors],
        }

    def sec_correspondence():
        if not reduced:
            return {"skipped": "not H-reduced"}
        rep = ideal_correspondence_check(C)
        return {
            "costable_ideals": rep.costable_count,
            "invariant_ideals": rep.invariant_count,
            "ok": rep.ok,
        }

    def sec_reductivity():
        cert = weak_reductivity_certificate(C)
        all_ok, rows = weak_reductivity_check(C)
        return {
            "certificate": cert.kind,
            "detail": cert.detail,
            "family_surjective": all_ok,
            "family_size": len(rows),
        }

    def sec_residue():
        rep = residue_degree_check(C)
        return [{"degree": pt.degree, "relative_degree": rel, "orbital_rank": rank}
                for pt, rel, rank in rep.rows]

    def sec_orbit_residue():
        if not reduced:
            return {"skipped": "not H-reduced"}
        rows = []
        for pt in maximal_ideals(A):
            rep = orbit_residue_iso_check(C, pt)
            rows.append({
                "ideal": _fmt_space(A, pt.ideal),
                "fiber_ring_rank": rep.fiber_ring_rank,
                "orbital_rank": rep.orbital_rank,
                "iso_checked": rep.iso_checked,
                "iso_ok": rep.iso_ok,
            })
        return rows

    guarded("invariants", sec_invariants)
    guarded("spectrum", sec_spectrum)
    guarded("radical", sec_radical)
    guarded("charpoly", sec_charpoly)
    guarded("witness", sec_witness)
    guarded("points", sec_points)
    guarded("fiber", sec_fiber)
    guarded("galois", sec_galois)
    guarded("integral", sec_integral)
    guarded("openness", sec_openness)
    guarded("freebasis", sec_freebasis)
    guarded("correspondence", sec_correspondence)
    guarded("reductivity", sec_reductivity)
    guarded("residue", sec_residue)
    guarded("orbit_residue", sec_orbit_residue)
    return doc


def render_report(doc):
    """Canonical bytes of a report document."""
    return json.dumps(doc, sort_keys=True, separators=(",", ":"),
                      ensure_ascii=False) + "\n"
