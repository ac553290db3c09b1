"""
Batch command-line front end.

Exit codes: 0 on success, 1 on a domain error (AlgebraError or an
internal consistency failure), 2 on a usage or parse error.
"""
import argparse
import sys
import time
from typing import Callable, List, Optional, Sequence, TextIO

from src.algebra_cs import (
    encode_element,
    format_element,
    min_grid_size,
    norm_A,
    norm_B,
    parse_element,
    parse_scalar,
    product,
)
from src.algebra_cs.config import config as algebra_config
from src.classification import check_direct_finiteness, choose_prime, g1_equivalent_to_rep, verify_g1_invariance
from src.exact_arith import Cyclotomic, format_cyclotomic
from src.mu_dynamics import (
    cyclic_witness,
    doubling_orbit,
    enumerate_mu_orbits,
    in_chain_Vp,
    is_certified_positive,
    is_minimal,
    square_closed_set,
)
from src.representations import (
    Mode,
    encode_matrix,
    evaluate_rep,
    format_matrix,
    is_irreducible,
    make_rep,
    separate,
    span_dimension,
)
from src.utils.errors import AlgebraError, InternalError, ParseError
from src.utils.logging_utils import setup_logging, log_operation
from src.wiener_fourier import (
    CoeffSeq,
    convergence_depth,
    encode_sequence,
    faithfulness_witness,
    format_sequence,
    map_to_delta0,
    parse_sequence,
)
from src.wiener_k import encode_fn_on_k, invert_on_K, restrict, spectrum_on_K
from .config import config
from .render import Record, render

logger = setup_logging("cli")

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """Raise instead of exiting so run() owns the exit code."""

    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}\n{self.format_usage()}")


def _parse_exps(text: str) -> List[int]:
    exps = []
    offset = 0
    for chunk in text.split(","):
        if chunk.strip():
            try:
                exps.append(int(chunk.strip()))
            except ValueError:
                raise ParseError(f"bad residue {chunk.strip()!r}", offset) from None
        offset += len(chunk) + 1
    return exps


def _finite_set(N: int, exps_text: str):
    """A minimal set becomes its MuOrbit (cycle order), anything else stays a SquareClosedSet."""
    s = square_closed_set(N, _parse_exps(exps_text))
    if is_minimal(s):
        return doubling_orbit(N, s.exps[0])
    return s


def _float_text(value: float) -> str:
    return f"{value:.{config.float_digits}g}"


# Verb handlers: parsed arguments -> records

def _cmd_eval(args) -> List[Record]:
    a = parse_element(args.expr)
    return [{"verb": "eval", "result": format_element(a), "terms": encode_element(a)}]


def _cmd_mul(args) -> List[Record]:
    result = parse_element(args.exprs[0])
    for text in args.exprs[1:]:
        result = product(result, parse_element(text))
    return [{"verb": "mul", "result": format_element(result), "terms": encode_element(result)}]


def _cmd_norm(args) -> List[Record]:
    a = parse_element(args.expr)
    grid = max(args.grid, min_grid_size(a)) if args.grid_auto else args.grid
    return [{
        "verb": "norm",
        "element": format_element(a),
        "norm_A": _float_text(norm_A(a)),
        "norm_B": _float_text(norm_B(a, grid)),
        "grid": grid,
    }]


def _rep_from_args(args):
    mode = Mode.BANACH if getattr(args, "banach", False) else Mode.ALGEBRAIC
    return make_rep(args.k, args.e, parse_scalar(args.gamma), mode)


def _cmd_rep_eval(args) -> List[Record]:
    rep = _rep_from_args(args)
    matrix = evaluate_rep(rep, parse_element(args.expr))
    return [{
        "verb": "rep-eval",
        "rep": rep.descriptor(),
        "mode": rep.mode.value,
        "matrix": encode_matrix(matrix),
        "matrix_text": format_matrix(matrix),
    }]


def _cmd_separate(args) -> List[Record]:
    separator, witness = separate(parse_element(args.expr), args.max_k)
    return [{
        "verb": "separate",
        "separator": str(separator),
        "witness": encode_matrix(witness),
        "witness_text": format_matrix(witness),
    }]


def _cmd_irred(args) -> List[Record]:
    rep = _rep_from_args(args)
    generators = list(rep.generators())
    return [{
        "verb": "irred-check",
        "rep": rep.descriptor(),
        "irreducible": is_irreducible(generators),
        "span_dimension": span_dimension(generators),
    }]


def _cmd_mu_orbits(args) -> List[Record]:
    return [{
        "verb": "mu-orbits",
        "N": orbit.N,
        "k": orbit.k,
        "exps": list(orbit.exps),
        "angles": [f"{e}/{orbit.N}" for e in orbit.exps],
    } for orbit in enumerate_mu_orbits(args.k)]


def _cmd_chain(args) -> List[Record]:
    f = parse_sequence(args.seq)
    return [{"verb": "chain-check", "sequence": format_sequence(f), "p": args.p, "in_chain": in_chain_Vp(f, args.p)}]


def _cmd_witness(args) -> List[Record]:
    K = _finite_set(args.n, args.exps)
    values = cyclic_witness(parse_sequence(args.seq), K)
    return [{
        "verb": "witness",
        "values": [{"point": f"{e}/{K.N}", "value": format_cyclotomic(v)} for e, v in zip(K.points, values)],
        "minimal": is_minimal(K),
        "positive": all(is_certified_positive(v) for v in values),
    }]


def _cmd_wiener_invert(args) -> List[Record]:
    K = _finite_set(args.n, args.exps)
    inverse = invert_on_K(restrict(parse_sequence(args.seq), K))
    return [{"verb": "wiener-invert", "values": encode_fn_on_k(inverse)}]


def _cmd_spectrum(args) -> List[Record]:
    K = _finite_set(args.n, args.exps)
    spectrum = spectrum_on_K(restrict(parse_sequence(args.seq), K))
    return [{"verb": "spectrum", "spectrum": [format_cyclotomic(v) for v in spectrum]}]


def _cmd_choose_prime(args) -> List[Record]:
    betas = [parse_scalar(text).as_rational() for text in args.betas]
    return [{"verb": "choose-prime", "betas": [str(b) for b in betas], "prime": choose_prime(betas)}]


def _cmd_df(args) -> List[Record]:
    a, b = parse_element(args.a), parse_element(args.b)
    return [{"verb": "df-check", "verdict": check_direct_finiteness(a, b).value}]


def _cmd_g1(args) -> List[Record]:
    alpha = Cyclotomic.root_of_unity(3, args.e)
    beta = parse_scalar(args.beta)
    return [{
        "verb": "g1-check",
        "alpha": format_cyclotomic(alpha),
        "beta": format_cyclotomic(beta),
        "invariant": verify_g1_invariance(alpha, beta, args.m),
        "equivalent_to_rep": g1_equivalent_to_rep(alpha, beta) if beta.as_gaussian_rational() is not None else None,
    }]


def _cmd_faithful(args) -> List[Record]:
    return [{"verb": "faithful-witness", "witness": faithfulness_witness(parse_element(args.expr))}]


def _cmd_converge(args) -> List[Record]:
    xi = parse_sequence(args.seq)
    result = map_to_delta0(xi, args.k, args.n)
    return [{
        "verb": "converge",
        "result": format_sequence(result),
        "terms": encode_sequence(result),
        "is_delta0": result == CoeffSeq.delta(0),
        "depth": convergence_depth(xi, args.k),
    }]


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="main.py", description="Exact computations in the algebra of S = <x, y : yx = xy^2>")
    parser.add_argument("--mode", choices=["text", "structured"], default=config.default_mode)
    parser.add_argument("--max-k", type=int, default=None, dest="max_k", help="search cap for separate")
    parser.add_argument("--grid", type=int, default=None, help="B-norm grid size (default from config, raised to the minimum)")
    verbs = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def verb(name: str, handler: Callable, help_text: str):
        sub = verbs.add_parser(name, help=help_text)
        sub.set_defaults(handler=handler)
        return sub

    verb("eval", _cmd_eval, "normal form of an element").add_argument("expr")
    verb("mul", _cmd_mul, "product of elements, left to right").add_argument("exprs", nargs="+")
    verb("norm", _cmd_norm, "norms in A and B").add_argument("expr")

    sub = verb("rep-eval", _cmd_rep_eval, "evaluate pi_(alpha, gamma)")
    for name in ("k", "e"):
        sub.add_argument(name, type=int)
    sub.add_argument("gamma")
    sub.add_argument("expr")
    sub.add_argument("--banach", action="store_true", help="require |gamma| <= 1")

    verb("separate", _cmd_separate, "find a representation not killing EXPR").add_argument("expr")

    sub = verb("irred-check", _cmd_irred, "Burnside check of a representation")
    for name in ("k", "e"):
        sub.add_argument(name, type=int)
    sub.add_argument("gamma")

    verb("mu-orbits", _cmd_mu_orbits, "minimal doubling orbits of length K").add_argument("k", type=int)

    sub = verb("chain-check", _cmd_chain, "membership in V_p")
    sub.add_argument("seq")
    sub.add_argument("p", type=int)

    for name, handler, help_text in (
        ("witness", _cmd_witness, "cyclic witness h on K"),
        ("wiener-invert", _cmd_wiener_invert, "inverse in W(K)"),
        ("spectrum", _cmd_spectrum, "spectrum in W(K)"),
    ):
        sub = verb(name, handler, help_text)
        sub.add_argument("seq")
        sub.add_argument("n", type=int)
        sub.add_argument("exps")

    verb("choose-prime", _cmd_choose_prime, "prime avoiding rational angles").add_argument("betas", nargs="*")

    sub = verb("df-check", _cmd_df, "direct finiteness of a pair")
    sub.add_argument("a")
    sub.add_argument("b")

    sub = verb("g1-check", _cmd_g1, "G_1 invariance for alpha = z3^E")
    sub.add_argument("e", type=int)
    sub.add_argument("beta")
    sub.add_argument("m", type=int, nargs="?", default=8)

    verb("faithful-witness", _cmd_faithful, "smallest j with delta_j . a != 0").add_argument("expr")

    sub = verb("converge", _cmd_converge, "xi_k^-1 x^N y^k xi")
    sub.add_argument("seq")
    sub.add_argument("k", type=int)
    sub.add_argument("n", type=int)
    return parser


def run(argv: Sequence[str], stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None) -> int:
    """Parse argv, dispatch one verb, print its records; returns the exit code."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(list(argv))
    except _UsageError as e:
        print(str(e).rstrip(), file=stderr)
        return EXIT_USAGE

    args.grid_auto = args.grid is None
    if args.grid_auto:
        args.grid = algebra_config.default_grid
    start_time = time.time()
    log_operation(logger, "dispatch", "started", {"verb": args.verb}, level="DEBUG")
    try:
        records = args.handler(args)
    except ParseError as e:
        log_operation(logger, "dispatch", "failed", {"verb": args.verb, "error": str(e)}, level="DEBUG")
        print(f"parse error: {e}", file=stderr)
        return EXIT_USAGE
    except (AlgebraError, InternalError) as e:
        log_operation(logger, "dispatch", "failed", {"verb": args.verb, "error": str(e)}, level="DEBUG")
        print(f"error: {e}", file=stderr)
        return EXIT_DOMAIN

    for line in render(records, args.mode):
        print(line, file=stdout)
    log_operation(logger, "dispatch", "completed", {
        "verb": args.verb,
        "records": len(records),
        "duration_sec": time.time() - start_time
    }, level="DEBUG")
    return EXIT_OK
