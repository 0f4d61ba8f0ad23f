"""Command-line front end.

    bfun kashiwara --n 2 --mu [1]
    bfun bk --n 2 --mu alpha1
    bfun bg3 --n 2 --mu alpha1 [--subcone Delta] [--format tree]
    bfun h --n 3 --triple "λ1=[1,0] λ2=[0,1] l=0"
    bfun omega --n 2 --triple "λ1=[1] λ2=[1] l=0"
    bfun verify cocycle --family bg3 --n 3 --trials 50
    bfun verify k --family bg3 --n 3
    bfun verify consistency --n 2 [--mu alpha1 --subcone Delta]
    bfun verify counts --n 4
    bfun scan --n 2 --bound 5

Exit status: 0 success, 1 bad input, 2 verification found violations.
"""

from __future__ import annotations

import argparse
import re
import sys

from . import treeformat
from .errors import DomainError
from .formulas import (
    H_delta,
    H_subcone,
    bG3_lift,
    bG3_subcone,
    b_K,
    gamma_lift_A,
    kashiwara_b,
    lift_constant,
)
from .lattice import (
    DELTA,
    Generator,
    GeneratorCoords,
    SubconeTag,
    classify_subcone,
    coords_to_triple,
    format_triple,
    parse_int_list,
    parse_triple,
    parse_weight,
    to_generator_coords,
)
from .oracle import omega_scan
from .roots import check_rank
from .verify import check_k_corollaries, cocycle_suite, consistency_table, cross_consistency, get_family, set_size_report

EXIT_OK, EXIT_DOMAIN, EXIT_VIOLATION = 0, 1, 2

_COORDS_RE = re.compile(r"^\s*a\s*=\s*(\[[^\]]*\])\s+b\s*=\s*(\[[^\]]*\])\s*$")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_DOMAIN, f"{self.prog}: error: {message}\n")


def parse_mu_coords(text: str, n: int) -> GeneratorCoords:
    """A generator name, generator coordinates 'a=[..] b=[..]', or a triple."""
    if re.match(r"^\s*(alpha|beta)", text):
        return Generator.parse(text).coords(n)
    m = _COORDS_RE.match(text)
    if m:
        c = GeneratorCoords(parse_int_list(m.group(1)), parse_int_list(m.group(2)))
        if c.n != n:
            raise DomainError(f"--mu {text!r} has rank {c.n}, expected n={n}")
        return c
    return to_generator_coords(parse_triple(text, n))


def parse_mu_triple(text: str, n: int):
    if re.match(r"^\s*(alpha|beta)", text):
        return Generator.parse(text).triple(n)
    m = _COORDS_RE.match(text)
    if m:
        return coords_to_triple(parse_mu_coords(text, n))
    return parse_triple(text, n)


def _emit(args, command: str, result, text: str, **extra) -> None:
    if args.format == "tree":
        print(treeformat.dump(command, result, **extra))
    else:
        print(text)


def cmd_kashiwara(args) -> int:
    n = check_rank(args.n)
    p = kashiwara_b(n, parse_weight(args.mu, n))
    _emit(args, "kashiwara", p, p.render())
    return EXIT_OK


def cmd_bk(args) -> int:
    n = check_rank(args.n)
    p = b_K(parse_mu_triple(args.mu, n))
    _emit(args, "bk", p, p.render())
    return EXIT_OK


def cmd_bg3(args) -> int:
    n = check_rank(args.n)
    if args.subcone:
        p = bG3_subcone(n, Generator.parse(args.mu), SubconeTag.parse(args.subcone))
        _emit(args, "bg3", p, p.render(), subcone=args.subcone)
        return EXIT_OK
    c = parse_mu_coords(args.mu, n)
    p = bG3_lift(n, c)
    const = lift_constant(n, c)
    extra = {"constant": {"name": "A(mu)", "value": str(const)}}
    if args.show_lift:
        extra["lift"] = gamma_lift_A(n).to_tree()
    text = f"{p.render()}\nA(mu) = {const}"
    if args.show_lift:
        text += f"\nA = {gamma_lift_A(n).render()}"
    _emit(args, "bg3", p, text, **extra)
    return EXIT_OK


def cmd_h(args) -> int:
    n = check_rank(args.n)
    lam = parse_triple(args.triple, n)
    c = to_generator_coords(lam)
    if not c.is_integral():
        raise DomainError(f"triple {format_triple(lam)} is not in Omega (coords {c})")
    tag = classify_subcone(c)
    if tag == DELTA:
        value = H_delta(lam.lambda1)
    elif tag.kind == "General":
        raise DomainError(f"H is not available in closed form on the general cone (coords {c})")
    else:
        value = H_subcone(tag.j, c)
    node = {"type": "h_value", "triple": format_triple(lam), "subcone": str(tag), "value": str(value)}
    _emit(args, "h", node, f"H = {value}  (subcone {tag})")
    return EXIT_OK


def cmd_omega(args) -> int:
    n = check_rank(args.n)
    lam = parse_triple(args.triple, n)
    c = to_generator_coords(lam)
    member = c.is_integral()
    node = {"type": "omega_member", "triple": format_triple(lam), "member": member,
            "a": [str(x) for x in c.a], "b": [str(x) for x in c.b]}
    if member:
        node["subcone"] = str(classify_subcone(c))
    _emit(args, "omega", node, f"member: {str(member).lower()}, coords {c}")
    return EXIT_OK


def cmd_scan(args) -> int:
    report = omega_scan(check_rank(args.n), args.bound)
    lines = [f"omega scan n={report.n} bound={report.bound}: {report.checked} triples, "
             f"{len(report.disagreements)} disagreements"]
    lines += [f"  {d}" for d in report.disagreements]
    lines += [f"  invariant_dim({g}) = {v}" for g, v in sorted(report.generator_invariants.items())]
    _emit(args, "scan", report, "\n".join(lines))
    return EXIT_OK if report.ok else EXIT_VIOLATION


def cmd_verify(args) -> int:
    n = check_rank(args.n)
    if args.check == "cocycle":
        report = cocycle_suite(get_family(args.family), n, trials=args.trials, seed=args.seed)
        lines = [f"cocycle {report.family} n={n}: {report.checked} pairs, {len(report.failures)} failures"]
        lines += [f"  mu={f.mu} nu={f.nu}: {f.lhs.render()} != {f.rhs.render()}" for f in report.failures]
        _emit(args, "verify cocycle", report, "\n".join(lines))
        return EXIT_OK if report.ok else EXIT_VIOLATION
    if args.check == "k":
        report = check_k_corollaries(get_family(args.family), n)
        lines = [f"K corollaries {report.family} n={n}: {report.slopes} slopes, {len(report.violations)} violations"]
        lines += [f"  c[{d}] = {c}" for d, c in sorted(report.constants.items())]
        lines += [f"  violation {v}" for v in report.violations]
        _emit(args, "verify k", report, "\n".join(lines))
        return EXIT_OK if report.ok else EXIT_VIOLATION
    if args.check == "consistency":
        if bool(args.mu) != bool(args.subcone):
            raise DomainError("--mu and --subcone must be given together")
        if args.mu:
            reports = cross_consistency(n, Generator.parse(args.mu), SubconeTag.parse(args.subcone))
        else:
            reports = consistency_table(n)
        tree = {"type": "consistency_table", "reports": [r.to_tree() for r in reports]}
        _emit(args, "verify consistency", tree, "\n".join(r.render() for r in reports))
        return EXIT_OK
    rows = set_size_report(n)
    lines = ["j  |OR| formula  |AND| formula  deg(b_beta) formula"]
    lines += [f"{r['j']:<2} {r['or_set']:>4} {r['or_set_formula']:>7}  {r['and_set']:>5} {r['and_set_formula']:>7}"
              f"  {r['beta_lift_degree']:>11} {r['beta_degree_formula']:>7}" for r in rows]
    _emit(args, "verify counts", {"type": "set_sizes", "n": n, "rows": rows}, "\n".join(lines))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bfun", description="b-functions on the triple flag variety of SL_n")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--format", choices=("text", "tree"), default="text")
        p.set_defaults(func=func)
        return p

    p = add("kashiwara", cmd_kashiwara, "Kashiwara's b-function on one flag variety")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mu", required=True, help="dominant weight, e.g. [1,0]")

    p = add("bk", cmd_bk, "product b-function b_K in generator coordinates")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mu", required=True, help="generator name, 'a=[..] b=[..]' or a triple")

    p = add("bg3", cmd_bg3, "b-function of the invariant section (gamma lift, or a subcone formula)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mu", required=True, help="generator name, 'a=[..] b=[..]' or a triple")
    p.add_argument("--subcone", help="Delta, DeltaLt(j) or DeltaGe(j): use the subcone formula")
    p.add_argument("--show-lift", action="store_true", help="also print the gamma lift A")

    p = add("h", cmd_h, "the function H on a triple in Delta, DeltaLt(j) or DeltaGe(j)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--triple", required=True)

    p = add("omega", cmd_omega, "Omega membership and generator coordinates of a triple")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--triple", required=True)

    p = add("scan", cmd_scan, "compare Omega membership with brute-force invariant dimensions")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--bound", type=int, default=3)

    p = add("verify", cmd_verify, "property suites and consistency reports")
    p.add_argument("check", choices=("cocycle", "k", "consistency", "counts"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--family", default="bg3", help="kashiwara, projective, bk or bg3")
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mu")
    p.add_argument("--subcone")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
