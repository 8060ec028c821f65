"""
The prop-hecke command line.

    prop-hecke datum --group GL2
    prop-hecke verify lemma-3.4 --group A2 --max-len 8
    prop-hecke bernstein --group SL2 --q 3 --facet "" --sign + --lambda 1
    prop-hecke classify --group GL2 --q 3 --pi-scalar 1
    prop-hecke satake --group SL2 --q 3 --chi "xi=0;pi=1" --lambda 2
    prop-hecke tables --group SL2 --kinds z,classification --out tables/
"""
import argparse
import json
import sys

from loguru import logger

from .checks import CHECKS
from .suite import SuiteConfig, SuiteContext, run_suite
from .tables import TABLE_KINDS, emit_tables
from ..combinatorics.root_datum import StandardFacet
from ..modules.weight_module import WeightCharacter
from ..utils.errors import ConfigurationError, PreconditionError, TruncationOverflow


def _int_list(text):
    text = text.strip()
    return tuple(int(x) for x in text.split(",")) if text else ()


def _name_list(text):
    return tuple(x.strip() for x in text.split(",") if x.strip())


def _coweight(text, datum, name="--lambda"):
    lam = _int_list(text)
    if len(lam) != datum.rank_x:
        raise ConfigurationError(f"{name} needs {datum.rank_x} entries, got {text!r}.")
    return lam


def _facet(text, datum):
    """1-based simple root indices, e.g. "1,2"; the empty string is the chamber C."""
    indices = _int_list(text)
    if any(not 1 <= i <= datum.n_simple for i in indices):
        raise ConfigurationError(f"Facet indices have to lie in 1..{datum.n_simple}, got {text!r}.")
    return StandardFacet(frozenset(i - 1 for i in indices))


def _sign(text):
    if text not in ("+", "-"):
        raise ConfigurationError(f"Sign has to be + or -, got {text!r}.")
    return 1 if text == "+" else -1


def _weight_character(text, datum):
    """Parse "xi=<exponents>;pi=<1-based simple indices>"."""
    fields = dict(part.split("=", 1) for part in text.split(";") if "=" in part)
    if "xi" not in fields:
        raise ConfigurationError(f"Weight character {text!r} has no xi field.")
    xi = _coweight(fields["xi"], datum, "xi")
    pi_chi = frozenset(i - 1 for i in _int_list(fields.get("pi", "")))
    return WeightCharacter(xi, pi_chi)


def _config(args, checks=()):
    return SuiteConfig(
        group=args.group,
        rank=args.rank,
        q=args.q,
        mode=args.mode,
        max_length=args.max_len,
        seed=args.seed,
        checks=tuple(checks),
        output_format=args.format,
        jobs=args.jobs,
        pi_scalars=tuple(args.pi_scalar or (1,)),
        samples=args.samples,
    )


def _emit(args, text):
    if args.out and args.command != "tables":
        with open(args.out, "w") as f:
            f.write(text + "\n")
        logger.info(f"Wrote output to {args.out}")
    else:
        print(text)


def _verify(args):
    checks = tuple(args.names) + _name_list(args.checks or "")
    report = run_suite(_config(args, checks))
    _emit(args, report.render())
    return report.exit_code


def _bernstein(args):
    context = SuiteContext(_config(args))
    datum = context.datum
    lam = _coweight(args.lam, datum)
    t = _coweight(args.t, datum, "--t") if args.t else None
    facet, sign = _facet(args.facet, datum), _sign(args.sign)
    element = context.bernstein.bernstein(facet, sign, lam, t)
    if args.mode == "charp":
        element = context.generic.specialize(element)
    _emit(args, json.dumps(element.to_json(), indent=2))
    return 0


def _classify(args):
    context = SuiteContext(_config(args))
    entries = context.supersingular().classify()
    _emit(args, json.dumps([entry.to_json() for entry in entries], indent=2))
    return 0


def _satake(args):
    context = SuiteContext(_config(args))
    weights = context.weights()
    chi = _weight_character(args.chi, context.datum)
    lam = _coweight(args.lam, context.datum)
    try:
        result = weights.satake_check(chi, lam)
    except TruncationOverflow as err:
        _emit(args, json.dumps({"status": "INCONCLUSIVE", "reason": str(err)}, indent=2))
        return 2
    content = {
        "chi": chi.to_json(),
        "lambda": list(lam),
        "z": weights.to_json(result.left),
        "bernstein": weights.to_json(result.right),
        "bound": result.bound,
        "status": "PASS" if result.equal else "FAIL",
    }
    _emit(args, json.dumps(content, indent=2))
    return 0 if result.equal else 1


def _tables(args):
    kinds = list(_name_list(args.kinds))
    paths = emit_tables(_config(args), args.out or ".", kinds)
    for path in paths:
        print(path)
    return 0


def _datum(args):
    context = SuiteContext(_config(args))
    content = context.datum.to_json()
    content["omega"] = ["Z" if d == 0 else f"Z/{d}" for _, d in context.affine.omega_invariants]
    content["simple_affine"] = context.affine.simple_names
    _emit(args, json.dumps(content, indent=2))
    return 0


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--group", default="SL2", help="Group label, e.g. SL2, GL2, PGL2, A2, B2")
    common.add_argument("--rank", type=int, default=None, help="Rank for labels without digits")
    common.add_argument("--q", type=int, default=3, help="Residue field cardinality, a prime power")
    common.add_argument("--mode", choices=("generic", "charp"), default=None, help="Coefficient mode")
    common.add_argument("--max-len", type=int, default=6, help="Length bound L")
    common.add_argument("--seed", type=int, default=0, help="Seed of sampled instances")
    common.add_argument("--samples", type=int, default=100, help="Sampled instances per family")
    common.add_argument("--out", default=None, help="Output file, or directory for tables")
    common.add_argument("--format", choices=("json", "tsv", "pretty"), default="pretty", help="Report format")
    common.add_argument("--jobs", type=int, default=1, help="Checks run concurrently")
    common.add_argument(
        "--pi-scalar", type=int, action="append", help="Scalar of the central translation (repeatable)"
    )

    parser = argparse.ArgumentParser(prog="prop-hecke", description="Exact pro-p Iwahori-Hecke algebra computations.")
    commands = parser.add_subparsers(dest="command", required=True)

    verify = commands.add_parser("verify", parents=[common], help="Run verification checks")
    verify.add_argument(
        "names",
        nargs="*",
        default=[],
        metavar="CHECK",
        help=", ".join(f"{name} ({info.alias})" for name, info in CHECKS.items()),
    )
    verify.add_argument("--checks", default=None, help="Comma separated check identifiers or aliases")
    verify.set_defaults(run=_verify)

    bernstein = commands.add_parser("bernstein", parents=[common], help="Print a Bernstein map value")
    bernstein.add_argument("--facet", default="", help="1-based simple root indices of the facet")
    bernstein.add_argument("--sign", default="+", help="+ or -")
    bernstein.add_argument("--lambda", dest="lam", required=True, help="Comma separated coweight")
    bernstein.add_argument("--t", default=None, help="Torus part as exponents")
    bernstein.set_defaults(run=_bernstein)

    classify = commands.add_parser("classify", parents=[common], help="Classify simple supersingular modules")
    classify.set_defaults(run=_classify)

    satake = commands.add_parser("satake", parents=[common], help="Compare z and B on the generator of M(chi)")
    satake.add_argument("--chi", required=True, help='Weight character, e.g. "xi=0;pi=1"')
    satake.add_argument("--lambda", dest="lam", required=True, help="Comma separated dominant coweight")
    satake.set_defaults(run=_satake)

    tables = commands.add_parser("tables", parents=[common], help="Write JSON tables")
    tables.add_argument("--kinds", default=",".join(TABLE_KINDS), help="Comma separated table kinds")
    tables.set_defaults(run=_tables)

    datum = commands.add_parser("datum", parents=[common], help="Print the root datum")
    datum.set_defaults(run=_datum)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.run(args)
    except (ConfigurationError, PreconditionError) as err:
        logger.error(str(err))
        return 2


if __name__ == "__main__":
    sys.exit(main())
