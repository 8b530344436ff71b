# main.py

import argparse
import json
import logging
import sys
import time

from apartments import apartment_cycle
from data import MAX_DIM, PRECISION_BITS, RELATION_HEIGHT, SAMPLES, SEED, Config, Report
from dehn_checks import tetra_tensor
from errors import SahError, UsageError
from flag_complex import FlagComplex, homology_group, subset_lattice
from polytope import antipode, bialg_check, delta, element, mu
from sphere_decomposition import cover_check, hopf_check, locate
from spherical_dehn import cocomm_test, tetra_dihedral_formula
from suite import get_check, run_suite
from utils.logger import setup_logger
from utils.parsing import parse_vectors

logger = logging.getLogger(__name__)

STEP_INSTANCES = 100


class ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _pair(args):
    left, right = parse_vectors(args.left), parse_vectors(args.right)
    if len(left[0]) != len(right[0]):
        raise UsageError("--left and --right must live in the same Q^n")
    return left, right


def cmd_product(args, config):
    left, right = _pair(args)
    return Report("product", True, {"result": mu(element(left), element(right)).to_json()})


def cmd_coproduct(args, config):
    x = element(parse_vectors(args.vectors))
    return Report("coproduct", True, {"result": delta(x).to_json()})


def cmd_antipode(args, config):
    x = element(parse_vectors(args.vectors))
    return Report("antipode", True, {"result": antipode(x).to_json()})


def cmd_hopf_check(args, config):
    return hopf_check(parse_vectors(args.vectors), config.samples, config.seed)


def cmd_cover_check(args, config):
    return cover_check(parse_vectors(args.vectors), config.samples, config.seed)


def cmd_bialg_check(args, config):
    left, right = _pair(args)
    passed = bialg_check(element(left), element(right))
    return Report("bialg-check", passed, {"left": args.left, "right": args.right})


def cmd_locate(args, config):
    points = parse_vectors(args.point)
    if len(points) != 1:
        raise UsageError("--point takes exactly one vector")
    [point] = points
    result = locate(point, parse_vectors(args.vectors))
    return Report("locate", result.covered, result.to_json())


def cmd_tits_homology(args, config):
    vectors = parse_vectors(args.vectors)
    complex_ = FlagComplex(subset_lattice(vectors, args.closed))
    degree = complex_.dimension if args.degree is None else args.degree
    group = homology_group(complex_, degree)
    witness = {
        **group.to_json(),
        "lattice_size": len(complex_.lattice),
        "cells": {str(k): len(flags) for k, flags in complex_.basis.items()},
        "euler_characteristic": complex_.euler_characteristic(),
        "generators": [g.to_json() for g in group.generators],
    }
    return Report("tits-homology", True, witness)


def cmd_apartment(args, config):
    vectors = parse_vectors(args.vectors)
    complex_ = FlagComplex(subset_lattice(vectors, args.closed))
    cycle = apartment_cycle(vectors)
    is_cycle = complex_.boundary(cycle).is_zero()
    group = homology_group(complex_, cycle.degree)
    witness = {
        "chain": cycle.to_json(),
        "is_cycle": is_cycle,
        "coordinates": list(group.coordinates(complex_, cycle)),
    }
    return Report("apartment", is_cycle, witness)


def cmd_step_check(args, config):
    check = get_check("step-coalgebra", config)
    check.instances = args.instances
    result = check.run()
    return Report("step-check", result.passed, result.witness)


def cmd_dehn_tetra(args, config):
    a, raw, reduced = tetra_tensor(args.side, config.precision_bits, config.relation_height)
    witness = {
        "side": a.to_json(),
        "dihedral": tetra_dihedral_formula(a).to_json(),
        "tensor": raw.to_json(),
        "reduced": reduced.to_json(),
        "display": f"{reduced.describe()} (reduced)",
    }
    return Report("dehn-tetra", True, witness)


def cmd_cocomm(args, config):
    height = config.relation_height
    a, _, reduced = tetra_tensor(args.side, config.precision_bits, height)
    report = cocomm_test(reduced, height)
    report.witness["side"] = a.to_json()
    report.witness["tensor"] = reduced.describe()
    return report


def cmd_suite(args, config):
    reports, table = run_suite(config, save_path=args.csv)
    witness = {"failed": [r.command for r in reports if not r.passed]}
    if config.output == "text":
        print(table.to_string(index=False))
    else:
        witness["items"] = [r.to_dict(config.timing) for r in reports]
    return Report("suite", all(r.passed for r in reports), witness)


def build_parser():
    parser = ArgumentParser(prog="sah", description="Exact and numeric experiments on the spherical scissors congruence Hopf algebra")
    parser.add_argument('--seed', type=int, default=SEED, help='Seed for every randomized check')
    parser.add_argument('--bits', type=int, default=PRECISION_BITS, help='Binary precision of numeric work')
    parser.add_argument('--height', type=int, default=RELATION_HEIGHT, help='Coefficient bound for integer relations')
    parser.add_argument('--max-dim', type=int, default=MAX_DIM, help='Largest dimension drawn by batteries')
    parser.add_argument('--samples', type=int, default=SAMPLES, help='Sample points per covering certificate')
    parser.add_argument('--output', choices=['text', 'json'], default='text')
    parser.add_argument('--timing', action='store_true', help='Include wall-clock time in reports')
    parser.add_argument('--log-file', type=str, default=None)
    sub = parser.add_subparsers(dest='command', required=True)

    for name in ('product', 'bialg-check'):
        p = sub.add_parser(name)
        p.add_argument('--left', required=True, help='Vectors such as "(1,0)"')
        p.add_argument('--right', required=True)
    for name in ('coproduct', 'antipode', 'hopf-check', 'cover-check'):
        p = sub.add_parser(name)
        p.add_argument('--vectors', required=True, help='Semicolon-separated tuples such as "(1,0);(1,1)"')
        if name in ('hopf-check', 'cover-check'):
            p.add_argument('--samples', type=int, dest='local_samples')
    p = sub.add_parser('locate')
    p.add_argument('--vectors', required=True)
    p.add_argument('--point', required=True)
    for name in ('tits-homology', 'apartment'):
        p = sub.add_parser(name)
        p.add_argument('--vectors', required=True)
        p.add_argument('--closed', action='store_true', help='Close the lattice under sums and intersections')
        if name == 'tits-homology':
            p.add_argument('--degree', type=int)
    p = sub.add_parser('step-check')
    p.add_argument('--instances', type=int, default=STEP_INSTANCES)
    p = sub.add_parser('dehn-tetra')
    p.add_argument('--side', required=True, help='Angle over integers, rationals, pi and arccos(r)')
    p = sub.add_parser('cocomm')
    p.add_argument('--side', required=True)
    p.add_argument('--height', type=int, dest='local_height')
    p.add_argument('--bits', type=int, dest='local_bits')
    p = sub.add_parser('suite')
    p.add_argument('--csv', type=str, default=None, help='Write the summary table here')
    return parser


COMMANDS = {
    'product': cmd_product,
    'coproduct': cmd_coproduct,
    'antipode': cmd_antipode,
    'hopf-check': cmd_hopf_check,
    'cover-check': cmd_cover_check,
    'bialg-check': cmd_bialg_check,
    'locate': cmd_locate,
    'tits-homology': cmd_tits_homology,
    'apartment': cmd_apartment,
    'step-check': cmd_step_check,
    'dehn-tetra': cmd_dehn_tetra,
    'cocomm': cmd_cocomm,
    'suite': cmd_suite,
}


def _local(args, name, default):
    value = getattr(args, name, None)
    return default if value is None else value


def get_config(args) -> Config:
    config = Config(
        seed=args.seed,
        precision_bits=_local(args, "local_bits", args.bits),
        relation_height=_local(args, "local_height", args.height),
        max_dim=args.max_dim,
        samples=_local(args, "local_samples", args.samples),
        output=args.output,
        timing=args.timing,
    )
    if config.precision_bits < 1 or config.relation_height < 1 or config.max_dim < 1 or config.samples < 0:
        raise UsageError("--bits, --height and --max-dim must be positive and --samples nonnegative")
    return config


def render_text(report: Report, timing: bool) -> str:
    lines = [f"{report.command}: {'pass' if report.passed else 'FAIL'}"]
    for key in sorted(report.witness):
        lines.append(f"  {key}: {json.dumps(report.witness[key], sort_keys=True)}")
    if timing:
        lines.append(f"  elapsed: {report.elapsed:.3f}s")
    return "\n".join(lines)


def run(argv=None) -> int:
    """Parse, dispatch, print one report or one error; return the exit code."""
    try:
        args = build_parser().parse_args(argv)
        setup_logger(args.log_file)
        config = get_config(args)
        logger.info(f"{args.command}: seed={config.seed}, bits={config.precision_bits}, height={config.relation_height}")
        start = time.perf_counter()
        report = COMMANDS[args.command](args, config)
        report.elapsed = time.perf_counter() - start
    except SahError as e:
        print(json.dumps({"error": type(e).__name__, "message": str(e), "exit_code": e.exit_code}, sort_keys=True))
        return e.exit_code
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 0

    if config.output == 'json':
        print(report.to_json(config.timing))
    else:
        print(render_text(report, config.timing))
    return 0 if report.passed else 1


def main():
    sys.exit(run())


if __name__ == '__main__':
    main()
