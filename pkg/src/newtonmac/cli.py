"""Batch command-line interface.

Every command prints one JSON document (or CSV for sweeps) on stdout and
exits 0 on success, 1 on a precondition violation (message on stderr) and 2
when an internal invariant breaks.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass, field

from . import __version__
from .counterexamples import (
    construct_case1,
    construct_case2,
    construct_highk,
    probe_gap,
    sweep,
    sweep_csv,
)
from .errors import InvariantError, PreconditionError
from .harness import SUITES, randomtest
from .inequalities import corollary_product, gap_low_k, maclaurin_chain, newton_gap
from .operators import (
    Binomial,
    QuadCoef,
    TwoShift,
    classify_quadratic,
    evaluate,
    shift_identity_check,
)
from .polyalgebra import (
    IDENTITIES,
    UniPoly,
    epsilon_perturb,
    identity_sample,
    identity_sides,
    poly_from_roots,
    quartic_reduction,
    sturm_real_roots,
    truncation_reduction,
)
from .polyalgebra.identities import EQ32_BOUND, EQ33_BOUND, SHIFT_BOUND
from .rng import GENERATOR_ID
from .symcore import (
    EXACT,
    MODES,
    SymPoint,
    binomial,
    format_scalar,
    garding_member,
    parse_scalar,
    shift_vector,
    sigma_all,
    sigma_oracle,
    sigma_split,
)

DEFAULT_TRIALS = 100


@dataclass
class RunConfig:
    mode: str = EXACT
    seed: int = 0
    trials: int = DEFAULT_TRIALS
    output: str = "json"
    k_bounds: dict = field(default_factory=lambda: {"eq32": EQ32_BOUND, "eq33": EQ33_BOUND,
                                                     "shift": SHIFT_BOUND})


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(1)


def _flag_scalar(value: str | None, flag: str, mode: str):
    if value is None:
        return None
    try:
        return parse_scalar(value, mode)
    except PreconditionError as exc:
        raise PreconditionError(f"--{flag}: {exc}") from None


def _vector(args) -> SymPoint:
    if args.x is not None and args.input is not None:
        raise PreconditionError("give either --x or --input, not both")
    if args.x is not None:
        items = [s for s in args.x.split(",")]
        flag = "x"
    elif args.input is not None:
        with open(args.input, encoding="utf-8") as fh:
            data = json.load(fh)
        if not isinstance(data, list):
            raise PreconditionError("--input: expected a JSON array")
        items = [str(v) for v in data]
        flag = "input"
    else:
        raise PreconditionError("a vector is required (--x or --input)")
    values = [_flag_scalar(s, flag, args.mode) for s in items]
    return SymPoint(tuple(values), args.mode)


def _operator(args):
    mode = args.mode
    alpha = _flag_scalar(args.alpha, "alpha", mode)
    beta = _flag_scalar(args.beta, "beta", mode)
    a = _flag_scalar(args.a, "a", mode)
    b = _flag_scalar(args.b, "b", mode)
    zero = parse_scalar("0", mode)
    if args.s is not None:
        if beta is not None or a is not None or b is not None:
            raise PreconditionError("--s selects the binomial operator; drop --beta/--a/--b")
        return Binomial(alpha if alpha is not None else zero, args.s)
    if a is not None or b is not None:
        if alpha is not None or beta is not None:
            raise PreconditionError("use either --alpha/--beta or --a/--b, not both")
        return QuadCoef(a if a is not None else zero, b if b is not None else zero)
    return TwoShift(alpha if alpha is not None else zero, beta if beta is not None else zero)


def _need(args, name: str):
    value = getattr(args, name)
    if value is None:
        raise PreconditionError(f"--{name.replace('_', '-')} is required")
    return value


# -- commands ---------------------------------------------------------------


def cmd_sigma(args):
    x = _vector(args)
    table = sigma_all(x)
    out = table.to_json()
    if args.check:
        if x.mode == EXACT:
            oracle = [sigma_oracle(x, k) for k in range(x.n + 1)]
            if list(table.sigma) != oracle:
                raise InvariantError("recurrence and subset enumeration disagree")
            if x.n >= 3 and [sigma_split(x, k) for k in range(x.n + 1)] != oracle:
                raise InvariantError("split identity disagrees with subset enumeration")
        out["checked"] = True
    return out


def cmd_binomial(args):
    return {"n": args.n, "k": args.k, "value": binomial(args.n, args.k)}


def cmd_eval(args):
    x, spec = _vector(args), _operator(args)
    k = _need(args, "k")
    return {"operator": spec.to_json(), "k": k, "value": format_scalar(evaluate(spec, x, k))}


def cmd_gap(args):
    x, spec = _vector(args), _operator(args)
    return {"operator": spec.to_json(), **newton_gap(x, spec, _need(args, "k")).to_json()}


def cmd_lowgap(args):
    x, spec = _vector(args), _operator(args)
    return {"operator": spec.to_json(), **gap_low_k(x, spec, _need(args, "k")).to_json()}


def cmd_probe(args):
    x = _vector(args)
    a = _flag_scalar(_need(args, "a"), "a", args.mode)
    b = _flag_scalar(_need(args, "b"), "b", args.mode)
    return {"operator": QuadCoef(a, b).to_json(), **probe_gap(x, a, b, _need(args, "k")).to_json()}


def cmd_chain(args):
    x, spec = _vector(args), _operator(args)
    return {"operator": spec.to_json(), **maclaurin_chain(x, spec, _need(args, "k")).to_json()}


def cmd_corollary(args):
    x, spec = _vector(args), _operator(args)
    result = corollary_product(x, spec, _need(args, "l"), _need(args, "k"))
    return {"operator": spec.to_json(), **result.to_json()}


def cmd_cone(args):
    return {"member": garding_member(_vector(args), _need(args, "k"))}


def cmd_classify(args):
    a = _flag_scalar(_need(args, "a"), "a", args.mode)
    b = _flag_scalar(_need(args, "b"), "b", args.mode)
    return classify_quadratic(a, b).to_json()


def cmd_shift(args):
    x = _vector(args)
    t = _flag_scalar(args.alpha or "0", "alpha", args.mode)
    out = {"shifted": shift_vector(x, t).to_json()}
    if args.k is not None:
        out["identity_holds"] = shift_identity_check(x, t, args.k)
    return out


def cmd_sturm(args):
    coeffs = [_flag_scalar(s, "poly", EXACT) for s in _need(args, "poly").split(",")]
    return sturm_real_roots(UniPoly(tuple(coeffs))).to_json()


def cmd_reduce(args):
    x = _vector(args)
    if args.kind == "roots":
        poly = poly_from_roots(x)
    elif args.kind == "quartic":
        poly = quartic_reduction(x, _need(args, "k"))
    else:
        poly = truncation_reduction(x, _need(args, "k"))
    out = {"kind": args.kind, "poly": poly.to_json()}
    if not poly.is_zero():
        out.update(sturm_real_roots(poly).to_json())
    return out


def cmd_perturb(args):
    y = _vector(args)
    eps = _flag_scalar(_need(args, "eps"), "eps", args.mode)
    z = epsilon_perturb(y, eps)
    return {"perturbed": z.to_json(), "e": sigma_all(z).to_json()["e"]}


def cmd_counterexample(args):
    mode = args.mode
    if mode != EXACT:
        raise PreconditionError("counterexamples are constructed in exact mode")
    if args.sweep:
        ns = range(args.n_min, args.n_max + 1)
        return sweep(args.case, ns, k=args.k if args.case == "highk" else 3)
    c = _flag_scalar(_need(args, "c"), "c", mode)
    d = _flag_scalar(_need(args, "d"), "d", mode)
    n = _need(args, "n")
    if args.case == "1":
        return construct_case1(n, c, d).to_json()
    if args.case == "2":
        return construct_case2(n, c, d).to_json()
    return construct_highk(n, _need(args, "k"), c, d).to_json()


def cmd_verify(args, config: RunConfig):
    ident = IDENTITIES.get(args.identity)
    if ident is None:
        raise PreconditionError(f"unknown identity {args.identity!r}")
    k = args.k if args.k is not None else max(ident.min_k, 2 if ident.bound else 0)
    bound = config.k_bounds.get(args.identity)
    sampled = args.trials is not None or (bound is not None and k > bound)
    out = {"identity": args.identity, "k": k}
    if sampled:
        trials = args.trials if args.trials is not None else DEFAULT_TRIALS
        verified = identity_sample(args.identity, k, trials, args.seed)
        out.update(method="sampled", verified=verified, trials=trials, seed=args.seed)
    else:
        lhs, rhs = identity_sides(args.identity, k, bound)
        out.update(method="symbolic", verified=lhs == rhs, terms=len(lhs))
    return out


def cmd_randomtest(args):
    if args.mode != EXACT:
        raise PreconditionError("randomtest runs in exact mode only")
    return randomtest(args.suite, args.n_max, args.trials, args.seed)


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--mode", choices=MODES, default=EXACT)
    common.add_argument("--output", choices=("json", "csv"), default="json")

    vec = argparse.ArgumentParser(add_help=False)
    vec.add_argument("--x", help='comma-separated scalars, e.g. "1,2/3,-5"')
    vec.add_argument("--input", help="JSON file holding an array of scalars")

    op = argparse.ArgumentParser(add_help=False)
    op.add_argument("--alpha")
    op.add_argument("--beta")
    op.add_argument("--a")
    op.add_argument("--b")
    op.add_argument("--s", type=int)
    op.add_argument("--k", type=int)

    parser = _Parser(prog="newtonmac", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("sigma", parents=[common, vec], help="elementary symmetric functions")
    p.add_argument("--check", action="store_true", help="cross-check against enumeration")
    p = sub.add_parser("binomial", parents=[common], help="C(n, k)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    sub.add_parser("eval", parents=[common, vec, op], help="operator value S_k")
    sub.add_parser("gap", parents=[common, vec, op], help="Newton-type gap and equality case")
    sub.add_parser("lowgap", parents=[common, vec, op], help="low-index gap with hypotheses")
    sub.add_parser("probe", parents=[common, vec, op], help="gap for arbitrary (a, b)")
    sub.add_parser("chain", parents=[common, vec, op], help="Maclaurin chain")
    p = sub.add_parser("corollary", parents=[common, vec, op], help="product corollary")
    p.add_argument("--l", type=int)
    p = sub.add_parser("cone", parents=[common, vec], help="Garding cone membership")
    p.add_argument("--k", type=int)
    p = sub.add_parser("classify", parents=[common], help="roots of t^2 + a t + b")
    p.add_argument("--a")
    p.add_argument("--b")
    p = sub.add_parser("shift", parents=[common, vec], help="x + alpha*e and its mean expansion")
    p.add_argument("--alpha")
    p.add_argument("--k", type=int)
    p = sub.add_parser("sturm", parents=[common], help="real-root count of a polynomial")
    p.add_argument("--poly", help="coefficients, constant term first")
    p = sub.add_parser("reduce", parents=[common, vec], help="derivative-reduced polynomials")
    p.add_argument("--kind", choices=("roots", "quartic", "truncation"), default="quartic")
    p.add_argument("--k", type=int)
    p = sub.add_parser("perturb", parents=[common, vec], help="lift zero entries by eps")
    p.add_argument("--eps")

    p = sub.add_parser("counterexample", parents=[common], help="complex-root witnesses")
    p.add_argument("--case", choices=("1", "2", "highk"), required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int, default=4)
    p.add_argument("--c")
    p.add_argument("--d")
    p.add_argument("--sweep", action="store_true", help="CSV over the default (c, d) grid")
    p.add_argument("--n-min", type=int, default=4)
    p.add_argument("--n-max", type=int, default=12)

    p = sub.add_parser("verify", parents=[common], help="certify a polynomial identity")
    p.add_argument("identity", choices=sorted(IDENTITIES))
    p.add_argument("--k", type=int)
    p.add_argument("--trials", type=int)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("randomtest", parents=[common], help="seeded randomised theorem checks")
    p.add_argument("suite", choices=SUITES + ("all",))
    p.add_argument("--n-max", type=int, default=9)
    p.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    p.add_argument("--seed", type=int, default=0)
    return parser


COMMANDS = {
    "sigma": cmd_sigma, "binomial": cmd_binomial, "eval": cmd_eval, "gap": cmd_gap,
    "lowgap": cmd_lowgap, "probe": cmd_probe, "chain": cmd_chain, "corollary": cmd_corollary,
    "cone": cmd_cone, "classify": cmd_classify, "shift": cmd_shift, "sturm": cmd_sturm,
    "reduce": cmd_reduce, "perturb": cmd_perturb, "counterexample": cmd_counterexample,
    "verify": cmd_verify, "randomtest": cmd_randomtest,
}


def _config(args) -> RunConfig:
    cfg = RunConfig(mode=args.mode, output=args.output)
    if getattr(args, "seed", None) is not None:
        cfg.seed = args.seed & ((1 << 64) - 1)
    if getattr(args, "trials", None) is not None:
        cfg.trials = args.trials
    return cfg


def run(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    config = _config(args)
    try:
        handler = COMMANDS[args.command]
        result = handler(args, config) if args.command == "verify" else handler(args)
        failed = False
        if args.command == "randomtest":
            failed = result.failures > 0
            result = result.to_json()
        if isinstance(result, list):
            stdout.write(sweep_csv(result))
            return 0
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except InvariantError as exc:
        print(f"invariant breach: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    doc = {"version": __version__, "command": args.command, "config": asdict(config),
           "result": result}
    if args.command in ("randomtest", "verify"):
        doc["generator"] = GENERATOR_ID
    stdout.write(json.dumps(doc) + "\n")
    return 2 if failed else 0


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
