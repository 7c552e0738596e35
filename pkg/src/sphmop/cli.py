"""Command-line front end.

Exit codes: 0 when every requested check passes, 1 when an identity fails,
2 on usage errors.  All data output is deterministic: exact arithmetic,
fixed iteration orders, no timestamps.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

import numpy as np

from .gaussian import format_gaussian
from .polynomials import MatrixPolynomial
from .structure import build_structures, eigen_ledger
from .family import build_family, coeffs_by_recursion, coeffs_by_racah
from .operators import (build_operator, apply, conjugate, commutator_check)
from .orthogonality import (build_weight, inner_product, trace_norm_check,
                            symmetry_check, ldu_decompose, commutant,
                            block_offdiagonal_is_zero, weighted_image,
                            inner_product_against_image)
from . import geometry
from .structure import build_L


def poly_to_json(p):
    return [format_gaussian(c) for c in p.coeffs]


def matpoly_to_json(M: MatrixPolynomial):
    return {
        "rows": M.rows,
        "cols": M.cols,
        "var": M.var,
        "entries": [[poly_to_json(M[i, j]) for j in range(M.cols)]
                    for i in range(M.rows)],
    }


def constant_matrix_csv(M: MatrixPolynomial, out):
    """Row-major CSV flattening of a constant matrix: header (row, col,
    re, im), one line per entry.  Lossless round-trip with the JSON form."""
    out.write("row,col,re,im\n")
    for i in range(M.rows):
        for j in range(M.cols):
            c = M[i, j].constant_term()
            out.write(f"{i},{j},{c.re},{c.im}\n")


def _cmd_structures(args):
    st = build_structures(args.ell)
    doc = {name: matpoly_to_json(getattr(st, name)) for name in st.names()}
    json.dump({"ell": args.ell, "matrices": doc}, sys.stdout, indent=2,
              sort_keys=True)
    sys.stdout.write("\n")
    return 0


def _cmd_family(args):
    import os
    fam = build_family(args.ell, args.wmax)
    os.makedirs(args.out, exist_ok=True)
    for w in range(args.wmax + 1):
        for tag, M in (("P", fam.Pw[w]), ("Ptilde", fam.PwTilde[w])):
            path = os.path.join(args.out, f"{tag}_ell{args.ell}_w{w}.json")
            with open(path, "w") as fh:
                json.dump(matpoly_to_json(M), fh, indent=2, sort_keys=True)
                fh.write("\n")
    print(f"wrote {2 * (args.wmax + 1)} files to {args.out}")
    return 0


def _eigmats(ell, w):
    lams = [eigen_ledger(ell, w, k).lam for k in range(ell + 1)]
    mus = [eigen_ledger(ell, w, k).mu for k in range(ell + 1)]
    return (MatrixPolynomial.diagonal(lams, var="u"),
            MatrixPolynomial.diagonal(mus, var="u"))


def verify_rows(ell: int, wmax: int):
    """Run the full identity suite; yields (label, ok) pairs in a fixed
    order.  Labels name the identity being checked, not where it is used."""
    st = build_structures(ell)
    n = ell + 1
    neg_v0 = MatrixPolynomial.diagonal([-j * (j + 1) for j in range(n)],
                                       var="u")
    yield ("(C0+C1)*U = U*diag(-j(j+1))",
           (st.C0 + st.C1) * st.U == st.U * neg_v0)
    yield ("U**U diagonal with entries (j+l+1)!(l-j)!/((2j+1) l! l!)",
           st.U.conjugate_transpose() * st.U == st.UstarU)
    yield ("Uinv*A0*U = Q0+Q1",
           st.Uinv * st.A0 * st.U == st.Q0 + st.Q1)
    yield ("Uinv*(C1+C0)*U = -V0",
           st.Uinv * (st.C1 + st.C0) * st.U == -st.V0)
    eye = MatrixPolynomial.identity(n)
    yield ("Uinv*(C1-C0)*U = Q1*J - Q0*(J+1)",
           st.Uinv * (st.C1 - st.C0) * st.U
           == st.Q1 * st.J - st.Q0 * (st.J + eye))

    ok = True
    for w in range(wmax + 1):
        for k in range(n):
            if coeffs_by_recursion(ell, w, k).a != coeffs_by_racah(
                    ell, w, k).a:
                ok = False
    yield ("coefficient recursion = Racah closed form", ok)

    ok = True
    for w in range(wmax + 1):
        for k in range(n):
            a = coeffs_by_recursion(ell, w, k).a
            if any(not a[j].is_zero() for j in range(w + k + 1, n)):
                ok = False
    yield ("coefficient tail a_j = 0 for j > w+k", ok)

    fam = build_family(ell, wmax)
    Dbar = build_operator("Dbar", ell)
    Ebar = build_operator("Ebar", ell)
    Dtilde = build_operator("Dtilde", ell)
    Etilde = build_operator("Etilde", ell)
    checks = {"Dbar*P_w = P_w*Lambda_w": True,
              "Ebar*P_w = P_w*M_w": True,
              "Dtilde*Pt_w = Pt_w*Lambda_w": True,
              "Etilde*Pt_w = Pt_w*M_w": True,
              "deg Pt_w = w with invertible diagonal leading coeff": True}
    for w in range(wmax + 1):
        Lam, Mu = _eigmats(ell, w)
        if apply(Dbar, fam.Pw[w]) != fam.Pw[w] * Lam:
            checks["Dbar*P_w = P_w*Lambda_w"] = False
        if apply(Ebar, fam.Pw[w]) != fam.Pw[w] * Mu:
            checks["Ebar*P_w = P_w*M_w"] = False
        if apply(Dtilde, fam.PwTilde[w]) != fam.PwTilde[w] * Lam:
            checks["Dtilde*Pt_w = Pt_w*Lambda_w"] = False
        if apply(Etilde, fam.PwTilde[w]) != fam.PwTilde[w] * Mu:
            checks["Etilde*Pt_w = Pt_w*M_w"] = False
        Pt = fam.PwTilde[w]
        if Pt.degree() != w:
            checks["deg Pt_w = w with invertible diagonal leading coeff"] \
                = False
        lead = Pt.coefficient_matrix(w)
        for i in range(n):
            for j in range(n):
                good = (not lead[i][j].is_zero()) if i == j \
                    else lead[i][j].is_zero()
                if not good:
                    checks["deg Pt_w = w with invertible diagonal leading "
                           "coeff"] = False
    for label, good in checks.items():
        yield (label, good)

    conjD = conjugate(Dbar, fam.Psi, fam.PsiInv)
    yield ("PsiInv*Dbar*Psi = Dtilde",
           conjD.A2 == Dtilde.A2 and conjD.A1 == Dtilde.A1
           and conjD.A0 == Dtilde.A0)
    conjE = conjugate(Ebar, fam.Psi, fam.PsiInv)
    yield ("PsiInv*Ebar*Psi = Etilde",
           conjE.A1 == Etilde.A1 and conjE.A0 == Etilde.A0)
    yield ("[Dbar, Ebar] = 0 on monomials to degree 12",
           commutator_check(Dbar, Ebar, 12))

    W = build_weight(ell)
    images = {w: weighted_image(fam.PwTilde[w], W) for w in range(wmax + 1)}
    ok_off = True
    ok_diag = True
    for w1 in range(wmax + 1):
        for w2 in range(wmax + 1):
            G = inner_product_against_image(fam.PwTilde[w2], images[w1])
            if w1 != w2 and not G.is_zero():
                ok_off = False
            if w1 == w2:
                for i in range(n):
                    for j in range(n):
                        c = G[i, j].constant_term()
                        if i == j and c.is_zero():
                            ok_diag = False
                        if i != j and not c.is_zero():
                            ok_diag = False
    yield ("<Pt_w, Pt_w'> = 0 for w != w'", ok_off)
    yield ("<Pt_w, Pt_w> diagonal and invertible", ok_diag)
    yield ("trace normalization equals l+1",
           trace_norm_check(ell) == ell + 1)
    yield ("Dtilde symmetric on the family",
           symmetry_check(Dtilde, W, fam, wmax))
    yield ("Etilde symmetric on the family",
           symmetry_check(Etilde, W, fam, wmax))
    L, Dg, Uf = ldu_decompose(W)
    yield ("LDU reassembly equals the weight polynomial part",
           L * Dg * Uf == W.poly_part)
    dim, basis, reduction = commutant(W)
    if reduction is None:
        yield ("commutant dimension and block reduction", dim == 1)
    else:
        yield ("commutant dimension and block reduction",
               dim >= 2 and block_offdiagonal_is_zero(
                   W, reduction.R, reduction.block_sizes))


def _cmd_verify(args):
    failures = 0
    for label, ok in verify_rows(args.ell, args.wmax):
        status = "PASS" if ok else "FAIL"
        print(f"{status}  {label}")
        if not ok:
            failures += 1
    print(f"{'all checks passed' if not failures else f'{failures} failed'}"
          f" (ell={args.ell}, wmax={args.wmax})")
    return 0 if failures == 0 else 1


def _cmd_gram(args):
    fam = build_family(args.ell, args.wmax)
    W = build_weight(args.ell)
    if args.csv:
        for w in range(args.wmax + 1):
            G = inner_product(fam.PwTilde[w], fam.PwTilde[w], W)
            sys.stdout.write(f"# w={w}\n")
            constant_matrix_csv(G, sys.stdout)
        return 0
    doc = {}
    for w in range(args.wmax + 1):
        G = inner_product(fam.PwTilde[w], fam.PwTilde[w], W)
        doc[str(w)] = matpoly_to_json(G)
    json.dump({"ell": args.ell, "gram": doc}, sys.stdout, indent=2,
              sort_keys=True)
    sys.stdout.write("\n")
    return 0


def _cmd_weight(args):
    W = build_weight(args.ell)
    samples = []
    for utxt in args.sample.split(","):
        u = float(utxt)
        pref = (2.0 / np.pi) * np.sqrt(max(0.0, 1.0 - u * u))
        vals = W.poly_part.evaluate(u)
        samples.append({
            "u": u,
            "W": [[[pref * v.real, pref * v.imag] for v in row]
                  for row in vals],
        })
    json.dump({"ell": args.ell, "samples": samples}, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return 0


def _cmd_reduce(args):
    W = build_weight(args.ell)
    dim, basis, reduction = commutant(W)
    doc = {
        "ell": args.ell,
        "dimension": dim,
        "basis": [[[format_gaussian(x) for x in row] for row in mat]
                  for mat in basis],
    }
    if reduction is not None:
        doc["R"] = matpoly_to_json(reduction.R)
        doc["block_sizes"] = list(reduction.block_sizes)
    json.dump(doc, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")
    return 0


def _cmd_eigen(args):
    rows = []
    for w in range(args.wmax + 1):
        for k in range(args.ell + 1):
            led = eigen_ledger(args.ell, w, k)
            rows.append({
                "w": w, "k": k,
                "m1": str(led.m1), "m2": str(led.m2),
                "lambda": int(led.lam), "mu": str(led.mu),
            })
    json.dump({"ell": args.ell, "ledger": rows}, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return 0


def _cmd_reconstruct(args):
    thetas = [float(t) for t in args.theta.split(",")]
    out = []
    for t in thetas:
        g = geometry.plane_rotation_14(t)
        phi = geometry.reconstruct_phi(args.ell, args.w, args.k, g)
        out.append({
            "theta": t,
            "Phi": [[[v.real, v.imag] for v in row] for row in phi.tolist()],
        })
    json.dump({"ell": args.ell, "w": args.w, "k": args.k, "values": out},
              sys.stdout, indent=2)
    sys.stdout.write("\n")
    return 0


def _cmd_cover(args):
    with open(args.matrix) as fh:
        g = np.array(json.load(fh), dtype=float)
    a, b = geometry.wedge_cover(g)
    json.dump({"a": a.tolist(), "b": b.tolist()}, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="sphmop",
        description="Exact matrix-valued orthogonal polynomials from "
                    "spherical functions on the 3-sphere",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(fn=fn)
        return p

    p = add("structures", _cmd_structures,
            help="dump all structure matrices as JSON")
    p.add_argument("--ell", type=int, required=True)

    p = add("family", _cmd_family,
            help="write the packages P_w and Pt_w to JSON files")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--wmax", type=int, required=True)
    p.add_argument("--out", required=True)

    p = add("verify", _cmd_verify, help="run the full identity suite")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--wmax", type=int, required=True)

    p = add("gram", _cmd_gram, help="emit Gram matrices of the family")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--wmax", type=int, required=True)
    p.add_argument("--csv", action="store_true")

    p = add("weight", _cmd_weight, help="numeric weight samples")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--sample", required=True,
                   help="comma-separated u values in (-1, 1)")

    p = add("reduce", _cmd_reduce,
            help="commutant basis and block reduction")
    p.add_argument("--ell", type=int, required=True)

    p = add("eigen", _cmd_eigen, help="eigenvalue ledger table")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--wmax", type=int, required=True)

    p = add("reconstruct", _cmd_reconstruct,
            help="numeric spherical function along the meridian")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--w", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--theta", required=True,
                   help="comma-separated angles")

    p = add("cover", _cmd_cover,
            help="double cover blocks of a 4x4 rotation read from JSON")
    p.add_argument("matrix", help="path to a JSON 4x4 nested list")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on usage errors already; normalize others
        return 2 if exc.code not in (0,) else 0
    if getattr(args, "ell", 0) is not None and getattr(args, "ell", 0) < 0:
        print("error: --ell must be nonnegative", file=sys.stderr)
        return 2
    if getattr(args, "wmax", 0) < 0:
        print("error: --wmax must be nonnegative", file=sys.stderr)
        return 2
    if getattr(args, "ell", 0) % 2 == 1:
        print("warning: odd ell is algebraically fine but is not an SO(3) "
              "K-type; only even ell has group-level meaning",
              file=sys.stderr)
    try:
        return args.fn(args)
    except (ValueError, ArithmeticError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
