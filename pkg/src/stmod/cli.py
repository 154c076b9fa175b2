"""Command-line front end.

Every verb reads modules from the shipped fixture library (--fixture) or
from module definition files (--file), streams deterministic output to
stdout (or --out), and exits 0 on success, 1 on a domain error, 2 on a
usage error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import fixtures, modfile, module as md, resolve, rootspin, stable, steenrod


class DomainError(Exception):
    pass


def _load(args, attr_fixture="fixture", attr_file="file") -> md.GradedModule:
    fx = getattr(args, attr_fixture, None)
    fp = getattr(args, attr_file, None)
    if fx:
        try:
            return fixtures.load_fixture(fx)
        except KeyError as exc:
            raise DomainError(str(exc))
    if fp:
        try:
            with open(fp) as fh:
                text = fh.read()
        except OSError as exc:
            raise DomainError(str(exc))
        try:
            return modfile.parse_module(text)
        except modfile.ModuleFileError as exc:
            raise DomainError(f"{fp}: {exc}")
    raise DomainError("no module given; use --fixture NAME or --file PATH")


def _emit(args, text: str):
    out = getattr(args, "out", None)
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


_SUBALGEBRAS = {
    "A0": lambda n: steenrod.A(0, n),
    "A1": lambda n: steenrod.A(1, n),
    "A2": lambda n: steenrod.A(2, n),
    "E1": lambda n: steenrod.E(1, n),
    "E2": lambda n: steenrod.E(2, n),
    "P11": lambda n: fixtures.algebra_P11(),
    "B": lambda n: fixtures.algebra_B(),
}


def _subalgebra(token: str, ambient: int):
    key = token.replace("(", "").replace(")", "").strip()
    if key not in _SUBALGEBRAS:
        raise DomainError(f"unknown subalgebra {token!r}; "
                          f"choose from {', '.join(sorted(_SUBALGEBRAS))}")
    try:
        return _SUBALGEBRAS[key](ambient)
    except ValueError as exc:
        raise DomainError(str(exc))


def _serialized(m: md.GradedModule, name: str) -> str:
    try:
        return modfile.serialize_module(m, name=name)
    except modfile.ModuleFileError:
        # custom subalgebras have no file token; emit a readable summary
        lines = [f"# {name} over {m.algebra.name} (outside the file grammar)",
                 f"# dims: {m.dims()}"]
        for gi, gname in enumerate(m.algebra.gen_names):
            g = m.algebra.gen_degrees[gi]
            for d in m.degrees():
                mat = m.action(gi, d)
                for j in range(mat.cols):
                    col = mat.col(j)
                    if col:
                        targets = [m.labels[d + g][i] for i in range(mat.rows)
                                   if (col >> i) & 1]
                        lines.append(f"# {gname}: {m.labels[d][j]} -> "
                                     + " + ".join(targets))
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# verbs


def cmd_define(args) -> int:
    m = _load(args)
    bad = md.validate(m)
    if bad:
        for b in bad:
            print(f"violation: {b}", file=sys.stderr)
        return 1
    _emit(args, _serialized(m, m.meta.get("name", "module")))
    return 0


def cmd_validate(args) -> int:
    m = _load(args)
    bad = md.validate(m)
    if args.json:
        print(json.dumps({"verb": "validate", "inputs": _inputs(args),
                          "result": {"ok": not bad, "violations": bad},
                          "certificate": bad}, sort_keys=True))
        return 0 if not bad else 1
    if bad:
        for b in bad:
            print(f"violation: {b}")
        return 1
    print(f"ok: {m.total_dim}-dimensional module over {m.algebra.name}")
    return 0


def cmd_tensor(args) -> int:
    m = _load(args)
    n = fixtures.load_fixture(args.with_fixture) if args.with_fixture else None
    if n is None:
        raise DomainError("tensor needs --with FIXTURE")
    try:
        t = md.tensor(m, n)
    except md.NoDiagonalActionError as exc:
        raise DomainError(str(exc))
    _emit(args, _serialized(t, "tensor"))
    return 0


def cmd_dual(args) -> int:
    _emit(args, _serialized(md.dual(_load(args)), "dual"))
    return 0


def cmd_suspend(args) -> int:
    _emit(args, _serialized(md.suspend(_load(args), args.by), "suspended"))
    return 0


def cmd_reduce(args) -> int:
    dec = stable.reduce_module(_load(args))
    free = ", ".join(str(d) for d in dec.free_part) or "none"
    print(f"free summands at suspensions: {free}")
    if dec.reduced_part.is_zero():
        print("reduced part: 0")
    else:
        print("reduced part:")
        sys.stdout.write(_serialized(dec.reduced_part, "reduced"))
    return 0


def cmd_loop(args) -> int:
    m = _load(args)
    fn = stable.oloop if args.inverse else stable.loop
    for _ in range(args.times):
        m = fn(m)
    _emit(args, _serialized(m, "looped"))
    return 0


def cmd_quotient(args) -> int:
    alg = modfile.parse_algebra(args.algebra)
    gens = []
    for text in args.kill:
        try:
            gens.append(steenrod.parse_element(text, alg.ambient))
        except ValueError as exc:
            raise DomainError(str(exc))
    q = md.quotient_by_left_ideal(alg, gens)
    if args.suspend:
        q = md.suspend(q, args.suspend)
    _emit(args, _serialized(q, "quotient"))
    return 0


def cmd_induce(args) -> int:
    m = _load(args)
    big = modfile.parse_algebra(args.algebra)
    sub = _subalgebra(args.sub, big.ambient)
    _emit(args, _serialized(md.induce(big, sub, m), "induced"))
    return 0


def cmd_restrict(args) -> int:
    m = _load(args)
    sub = _subalgebra(args.sub, m.algebra.ambient)
    _emit(args, _serialized(md.restrict(m, sub), "restricted"))
    return 0


def cmd_double(args) -> int:
    _emit(args, _serialized(md.double(_load(args)), "doubled"))
    return 0


def cmd_ext(args) -> int:
    m = _load(args)
    chart = resolve.ext_chart(m, args.smax, args.tmax)
    _emit(args, resolve.render_chart(chart, args.format))
    return 0


def cmd_extgroups(args) -> int:
    m = _load(args)
    n = fixtures.load_fixture(args.coeff)
    chart = resolve.ext_groups(m, n, args.smax, args.tmax)
    _emit(args, resolve.render_chart(chart, args.format))
    return 0


def cmd_check_selfdual(args) -> int:
    m = _load(args)
    try:
        shift = stable.selfdual_shift(m, stable=args.stable)
    except stable.InconclusiveIsomorphism as exc:
        raise DomainError(f"inconclusive: {exc}")
    if args.json:
        print(json.dumps({"verb": "check-selfdual", "inputs": _inputs(args),
                          "result": {"self_dual": shift is not None,
                                     "shift": shift},
                          "certificate": shift}, sort_keys=True))
        return 0
    if shift is None:
        print("not self-dual")
    else:
        print(f"self-dual with shift {shift}")
    return 0


def cmd_check_exact(args) -> int:
    if args.sequence == "bott":
        maps = fixtures.pad_with_zero_ends(fixtures.bott_sequence())
    elif args.sequence == "p11":
        maps = fixtures.p11_periodic_sequence()
    else:
        raise DomainError(f"unknown sequence {args.sequence!r} (bott, p11)")
    failure = stable.check_exact(maps)
    if failure is None:
        print(f"exact at every interior stage ({len(maps) - 1} checked)")
        return 0
    idx, degree, reason = failure
    print(f"fails at stage {idx}, degree {degree}: {reason}")
    return 1


_TYPE_RE = re.compile(r"^([A-Ga-g])_?(\d+)$")


def cmd_spin_check(args) -> int:
    if args.un is not None:
        report = rootspin.u_n_adjoint_spin(args.un)
        basis = "w"
        lattice = "character lattice"
    else:
        if not args.type:
            raise DomainError("need --type or --un")
        m = _TYPE_RE.match(args.type)
        if not m:
            raise DomainError(f"bad type {args.type!r} (e.g. G2, E7, A5)")
        try:
            rs = rootspin.generate_positive_roots(m.group(1).upper(), int(m.group(2)))
        except ValueError as exc:
            raise DomainError(str(exc))
        form = args.form.replace("-", "_")
        if form == "adjoint":
            gf = rootspin.GroupForm.adjoint(rs)
            lattice = "root lattice"
        elif form == "simply_connected":
            gf = rootspin.GroupForm.simply_connected(rs)
            lattice = "weight lattice"
        else:
            raise DomainError(f"unknown form {args.form!r}")
        report = rootspin.adjoint_spin(gf)
        basis = "a"
    rho_str = _format_vector(report.rho, basis)
    if args.json:
        print(json.dumps({
            "verb": "spin-check", "inputs": _inputs(args),
            "result": {"group": report.group, "form": report.form,
                       "spin": report.in_lattice,
                       "rho": [str(c) for c in report.rho]},
            "certificate": [str(c) for c in report.certificate],
        }, sort_keys=True))
        return 0
    if report.in_lattice:
        print(f"SPIN: rho = {rho_str} in {lattice}")
    else:
        idx, value = report.certificate
        print(f"NO SPIN: rho = {rho_str} not in {lattice} "
              f"(coordinate {value} at {basis}{idx + 1})")
    return 0


def _format_vector(coeffs, basis: str) -> str:
    bits = []
    for i, c in enumerate(coeffs):
        if c:
            bits.append(f"{c}*{basis}{i + 1}")
    return " + ".join(bits) if bits else "0"


def cmd_fixtures(args) -> int:
    names = fixtures.fixture_names()
    if not args.verify:
        if args.json:
            print(json.dumps({"verb": "fixtures", "inputs": {},
                              "result": names, "certificate": None},
                             sort_keys=True))
            return 0
        for name in names:
            m = fixtures.load_fixture(name)
            print(f"{name:28s} dim {m.total_dim:3d} over {m.algebra.name:6s} "
                  f"- {fixtures.fixture_description(name)}")
        return 0
    bad = 0
    for name in names:
        problems = fixtures.verify_fixture(name)
        if problems:
            bad += 1
            for p in problems:
                print(f"FAIL {name}: {p}")
        else:
            print(f"ok   {name}")
    return 0 if bad == 0 else 1


def _inputs(args) -> dict:
    skip = {"func", "json", "out"}
    return {k: v for k, v in vars(args).items()
            if v is not None and k not in skip}


# ---------------------------------------------------------------------------


def _module_args(p, with_out=True):
    p.add_argument("--fixture", help="name from the shipped fixture library")
    p.add_argument("--file", help="module definition file")
    if with_out:
        p.add_argument("--out", help="write output to this path instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="stmod",
        description="Exact computations with modules over finite subalgebras "
                    "of the mod-2 Steenrod algebra.")
    sub = ap.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("define", help="parse, validate and re-serialize a module file")
    _module_args(p)
    p.set_defaults(func=cmd_define)

    p = sub.add_parser("validate", help="check the module axioms (Wall relations)")
    _module_args(p, with_out=False)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("tensor", help="tensor product with the diagonal action")
    _module_args(p)
    p.add_argument("--with", dest="with_fixture", help="second factor (fixture name)")
    p.set_defaults(func=cmd_tensor)

    p = sub.add_parser("dual", help="linear dual, action through the antipode")
    _module_args(p)
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("suspend", help="shift all degrees")
    _module_args(p)
    p.add_argument("--by", type=int, required=True)
    p.set_defaults(func=cmd_suspend)

    p = sub.add_parser("reduce", help="strip free summands (integral criterion)")
    _module_args(p, with_out=False)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("loop", help="syzygy / cosyzygy in the stable category")
    _module_args(p)
    p.add_argument("--inverse", action="store_true")
    p.add_argument("--times", type=int, default=1)
    p.set_defaults(func=cmd_loop)

    p = sub.add_parser("quotient", help="cyclic quotient by a left ideal")
    p.add_argument("--algebra", required=True, help="A(0)..A(3)")
    p.add_argument("--kill", action="append", required=True,
                   help="ideal generator in element syntax (repeatable)")
    p.add_argument("--suspend", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_quotient)

    p = sub.add_parser("induce", help="induce a module up along a subalgebra")
    _module_args(p)
    p.add_argument("--algebra", required=True, help="target algebra, e.g. A(1)")
    p.add_argument("--sub", required=True, help="A0, E1, P11, B, ...")
    p.set_defaults(func=cmd_induce)

    p = sub.add_parser("restrict", help="restrict a module to a subalgebra")
    _module_args(p)
    p.add_argument("--sub", required=True, help="A0, E1, P11, B, ...")
    p.set_defaults(func=cmd_restrict)

    p = sub.add_parser("double", help="regrade over the next algebra, degrees doubled")
    _module_args(p)
    p.set_defaults(func=cmd_double)

    p = sub.add_parser("ext", help="Ext chart from a minimal resolution")
    _module_args(p)
    p.add_argument("--smax", type=int, default=8)
    p.add_argument("--tmax", type=int, default=24)
    p.add_argument("--format", choices=("ascii", "csv", "svg"), default="ascii")
    p.set_defaults(func=cmd_ext)

    p = sub.add_parser("extgroups", help="Ext with module coefficients (Hom complex)")
    _module_args(p)
    p.add_argument("--coeff", required=True, help="coefficient fixture")
    p.add_argument("--smax", type=int, default=6)
    p.add_argument("--tmax", type=int, default=20)
    p.add_argument("--format", choices=("ascii", "csv", "svg"), default="ascii")
    p.set_defaults(func=cmd_extgroups)

    p = sub.add_parser("check-selfdual", help="find the self-duality shift, if any")
    _module_args(p, with_out=False)
    p.add_argument("--stable", action="store_true",
                   help="compare after stripping free summands")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check_selfdual)

    p = sub.add_parser("check-exact", help="verify a named sequence is exact")
    p.add_argument("--sequence", required=True, help="bott or p11")
    p.set_defaults(func=cmd_check_exact)

    p = sub.add_parser("spin-check", help="Spin verdict for an adjoint representation")
    p.add_argument("--type", help="root system type, e.g. G2, F4, E7, A5, B3")
    p.add_argument("--form", default="adjoint",
                   help="adjoint (default) or simply-connected")
    p.add_argument("--un", type=int, help="rank of a unitary group instead of a type")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_spin_check)

    p = sub.add_parser("fixtures", help="list or verify the shipped module library")
    p.add_argument("--verify", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_fixtures)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
