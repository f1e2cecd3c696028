"""Regenerate the frozen fixture corpus under src/hopfinv/fixtures/.

Positive fixtures are authored through the public builders and written in
canonical form, so parse -> serialize is byte-identity on them.  Negative
fixtures are corrupted copies, kept as raw JSON because they must fail
validation in specific ways.
"""

import copy
import itertools
import json
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from hopfinv import (
    GF,
    QQ,
    Mat,
    PLieAlgebra,
    build_derivation,
    build_graded,
    build_group_action,
    cyclic_group_table,
    dual_group_algebra,
    dual_hopf,
    group_algebra,
    instance_to_data,
    make_algebra,
    make_comodule,
    restricted_enveloping,
    sweedler_hopf,
    symmetric_group_table,
    trivial_coaction,
    write_instance,
)

OUT = pathlib.Path(__file__).resolve().parents[1] / "src" / "hopfinv" / "fixtures"


def poly_quotient_algebra(field, varname, relation_tail, dim):
    """K[t]/(t^dim - tail(t)) with basis 1, t, ..., t^(dim-1).

    relation_tail holds the coefficients of t^dim as a vector of length dim.
    """
    labels = tuple("one" if i == 0 else (varname if i == 1 else f"{varname}{i}")
                   for i in range(dim))
    powers = [[field.zero] * dim for _ in range(2 * dim)]
    for i in range(dim):
        powers[i][i] = field.one
    for e in range(dim, 2 * dim):
        prev = powers[e - 1]
        shifted = [field.zero] + list(prev[:-1])
        overflow = prev[-1]
        if overflow:
            shifted = [field.add(shifted[k], field.mul(overflow, relation_tail[k]))
                       for k in range(dim)]
        powers[e] = shifted
    triples = []
    for i in range(dim):
        for j in range(dim):
            row = [(k, c) for k, c in enumerate(powers[i + j]) if c]
            triples.append((i, j, row))
    unit = tuple(field.one if i == 0 else field.zero for i in range(dim))
    return make_algebra(field, labels, unit, triples)


def split_algebra(field, n):
    labels = tuple(f"e{i}" for i in range(n))
    return make_algebra(field, labels, tuple(field.one for _ in range(n)),
                        [(i, i, [(i, field.one)]) for i in range(n)])


def fix_trivial():
    H = group_algebra(QQ, cyclic_group_table(2), labels=("e", "g"))
    return trivial_coaction(split_algebra(QQ, 2), H)


def fix_trivial_nilp():
    H = group_algebra(QQ, cyclic_group_table(2), labels=("e", "g"))
    A = poly_quotient_algebra(QQ, "y", (QQ.zero, QQ.zero), 2)
    return trivial_coaction(A, H)


def fix_g2():
    H = group_algebra(QQ, cyclic_group_table(2), labels=("e", "g"))
    A = poly_quotient_algebra(QQ, "x", (QQ.one, QQ.zero), 2)
    return build_graded(A, H, [0, 1])


def fix_g2f2():
    F = GF(2)
    H = group_algebra(F, cyclic_group_table(2), labels=("e", "g"))
    A = poly_quotient_algebra(F, "x", (F.one, F.zero), 2)
    return build_graded(A, H, [0, 1])


def fix_sw():
    H = sweedler_hopf(QQ)
    A = poly_quotient_algebra(QQ, "u", (QQ.zero, QQ.zero), 2)
    lab = {l: i for i, l in enumerate(H.alg.labels)}
    rows = [
        [((0, lab["1"]), QQ.one)],
        [((1, lab["g"]), QQ.one), ((0, lab["gx"]), QQ.one)],
    ]
    return make_comodule(A, H, rows)


def fix_ga():
    table = symmetric_group_table(3)
    H = dual_group_algebra(QQ, table)
    A = split_algebra(QQ, 3)
    perms = sorted(itertools.permutations(range(3)))
    mats = [Mat(QQ, [tuple(QQ.one if p[j] == i else QQ.zero for j in range(3))
                     for i in range(3)]) for p in perms]
    return build_group_action(A, H, mats)


def fix_der():
    F = GF(2)
    lie = PLieAlgebra(F, ("D",), (((F.zero,),),), ((F.zero,),))
    H = dual_hopf(restricted_enveloping(lie))
    A = poly_quotient_algebra(F, "y", (F.zero, F.zero), 2)
    dmat = Mat(F, [(F.zero, F.one), (F.zero, F.zero)])  # d(y) = 1
    return build_derivation(A, H, dmat)


def fix_z3():
    H = group_algebra(QQ, cyclic_group_table(3))
    A = poly_quotient_algebra(QQ, "x", (QQ.one, QQ.zero, QQ.zero), 3)
    return build_graded(A, H, [0, 1, 2])


def fix_gauss():
    H = group_algebra(QQ, cyclic_group_table(2), labels=("e", "g"))
    A = poly_quotient_algebra(QQ, "x", (QQ.neg(QQ.one), QQ.zero), 2)
    return build_graded(A, H, [0, 1])


POSITIVE = {
    "fix_trivial": fix_trivial,
    "fix_trivial_nilp": fix_trivial_nilp,
    "fix_g2": fix_g2,
    "fix_g2f2": fix_g2f2,
    "fix_sw": fix_sw,
    "fix_ga": fix_ga,
    "fix_der": fix_der,
    "fix_z3": fix_z3,
    "fix_gauss": fix_gauss,
}


def write_negatives(g2_data):
    bad_coaction = copy.deepcopy(g2_data)
    # delta(x) = x(x)g + 1(x)g breaks multiplicativity at (x, x) but keeps
    # the unit row intact.
    bad_coaction["coaction"] = [row for row in bad_coaction["coaction"]
                                if row[0] != 1] + [[1, 1, 1, "1"], [1, 0, 1, "1"]]
    _dump("bad_coaction", bad_coaction)

    bad_counit = copy.deepcopy(g2_data)
    bad_counit["hopf"]["counit"] = ["1", "0"]
    _dump("bad_counit", bad_counit)

    bad_field = copy.deepcopy(g2_data)
    bad_field["field"] = "F4"
    _dump("bad_field", bad_field)

    bad_scalar = copy.deepcopy(g2_data)
    bad_scalar["algebra"]["unit"] = ["one half", "0"]
    _dump("bad_scalar", bad_scalar)


def _dump(name, data):
    path = OUT / f"{name}.json"
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(json.dumps(data, sort_keys=True, separators=(",", ":"),
                            ensure_ascii=False) + "\n")
    print(f"wrote {path.name}")


def main():
    OUT.mkdir(exist_ok=True)
    g2_data = None
    for name, build in POSITIVE.items():
        C = build()
        write_instance(C, OUT / f"{name}.json")
        print(f"wrote {name}.json ({C.algebra.dim}x{C.hopf.dim})")
        if name == "fix_g2":
            g2_data = instance_to_data(C)
    write_negatives(g2_data)


if __name__ == "__main__":
    main()
