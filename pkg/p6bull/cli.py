'''
    Command-line interface.

        p6bull decide graph.col [--json] [--force]
        p6bull verify graph.col graph.coloring
        p6bull trace graph.col [--json]
        p6bull gen --n 10 --p 0.4 --seed 1 --count 5 [--out DIR]
        p6bull difftest --count 500 --nmin 6 --nmax 12 --seed 1 [--config FILE]
        p6bull replay replays/r1-00042.col
'''
import argparse
import logging
import os
import sys
from typing import List, Optional

import marshmallow as ma

from p6bull import constants
from p6bull.config import CampaignConfig, load_config_file
from p6bull.datastructures import Status
from p6bull.difftest import difftest, replay, reports_to_json, summary
from p6bull.dimacs import dump_dimacs, parse_coloring, parse_dimacs
from p6bull.exceptions import ContractError, DimacsParseError
from p6bull.generate import generate_in_class
from p6bull.graph import Graph, verify_coloring
from p6bull.pipeline import decide4_with_trace
from p6bull.report import emit_report
from p6bull.serializers import dumps

logger = logging.getLogger(__name__)

EXIT_CODES = {
    Status.four_colorable: constants.EXIT_FOUR_COLORABLE,
    Status.not_four_colorable: constants.EXIT_NOT_FOUR_COLORABLE,
    Status.out_of_class: constants.EXIT_OUT_OF_CLASS,
    Status.invariant_violation: constants.EXIT_INVARIANT_VIOLATION,
}


def _read_graph(path: str) -> Graph:
    with open(path) as f:
        return parse_dimacs(f.read())


def cmd_decide(args: argparse.Namespace) -> int:
    G = _read_graph(args.file)
    outcome, trace = decide4_with_trace(G, strict_class=not args.force)
    show_trace = trace if args.command == 'trace' else None
    sys.stdout.write(emit_report(outcome, 'json' if args.json else 'text', trace=show_trace))
    if args.json:
        sys.stdout.write('\n')
    return EXIT_CODES[outcome.status]


def cmd_verify(args: argparse.Namespace) -> int:
    G = _read_graph(args.file)
    with open(args.coloring) as f:
        coloring = parse_coloring(f.read(), G.n)
    try:
        valid = verify_coloring(G, coloring, len(constants.PALETTE))
    except ContractError as e:
        sys.stderr.write(f"{e}\n")
        return constants.EXIT_INVARIANT_VIOLATION
    sys.stdout.write('valid\n' if valid else 'invalid\n')
    return constants.EXIT_FOUR_COLORABLE if valid else constants.EXIT_NOT_FOUR_COLORABLE


def cmd_gen(args: argparse.Namespace) -> int:
    produced = 0
    seed = args.seed
    while produced < args.count and seed < args.seed + args.count * constants.GENERATE_MAX_ATTEMPTS:
        G = generate_in_class(args.n, args.p, seed)
        if G is not None:
            text = dump_dimacs(G, [f"generated n={args.n} p={args.p} seed={seed}"])
            if args.out:
                os.makedirs(args.out, exist_ok=True)
                with open(os.path.join(args.out, f"gen-{args.n}-{seed}.col"), 'w') as f:
                    f.write(text)
            else:
                sys.stdout.write(text)
            produced += 1
        seed += 1
    if produced < args.count:
        logger.warning('only %d of %d in-class graphs generated', produced, args.count)
    return 0


def cmd_difftest(args: argparse.Namespace) -> int:
    config = load_config_file(args.config) if args.config else CampaignConfig()
    overrides = {
        key: getattr(args, key)
        for key in ('count', 'nmin', 'nmax', 'seed', 'workers', 'replay_dir', 'exhaustive', 'constructive')
        if getattr(args, key) is not None
    }
    if args.timings:
        overrides['timings'] = True
    config = CampaignConfig.Schema().load({**CampaignConfig.Schema().dump(config), **overrides})

    reports = difftest(config)
    if args.json:
        sys.stdout.write(reports_to_json(reports) + '\n')
    else:
        sys.stdout.write(dumps(summary(reports), indent=2) + '\n')
    return constants.EXIT_INVARIANT_VIOLATION if any(r.disagreement for r in reports) else 0


def cmd_replay(args: argparse.Namespace) -> int:
    report = replay(args.file)
    sys.stdout.write(reports_to_json([report]) + '\n')
    return constants.EXIT_INVARIANT_VIOLATION if report.disagreement else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='p6bull', description='4-coloring of (P6, bull)-free graphs')
    parser.add_argument('-v', '--verbose', action='store_true', help='debug logging')
    sub = parser.add_subparsers(dest='command', required=True)

    for name in ('decide', 'trace'):
        p = sub.add_parser(name, help=f'{name} a DIMACS .col graph')
        p.add_argument('file')
        p.add_argument('--json', action='store_true')
        strict = p.add_mutually_exclusive_group()
        strict.add_argument(
            '--strict-class', dest='force', action='store_false', help='refuse graphs outside the class (default)'
        )
        strict.add_argument('--force', dest='force', action='store_true', help='run on graphs outside the class')
        p.set_defaults(func=cmd_decide, force=False)

    p = sub.add_parser('verify', help='check a coloring file against a graph')
    p.add_argument('file')
    p.add_argument('coloring')
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser('gen', help='generate in-class graphs')
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--p', type=float, required=True)
    p.add_argument('--seed', type=int, default=0)
    p.add_argument('--count', type=int, default=1)
    p.add_argument('--out')
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser('difftest', help='compare against the exact oracle')
    p.add_argument('--config', help='YAML campaign settings; flags override it')
    p.add_argument('--count', type=int)
    p.add_argument('--nmin', type=int)
    p.add_argument('--nmax', type=int)
    p.add_argument('--seed', type=int)
    p.add_argument('--workers', type=int)
    p.add_argument('--constructive', type=int)
    p.add_argument('--exhaustive', type=int, metavar='N', help='every labeled graph on N vertices')
    p.add_argument(
        '--replay-dir',
        dest='replay_dir',
        help=f'where disagreements are written (default {constants.DIFFTEST_REPLAY_DIR}/)',
    )
    p.add_argument('--timings', action='store_true')
    p.add_argument('--json', action='store_true')
    p.set_defaults(func=cmd_difftest)

    p = sub.add_parser('replay', help='re-run a persisted instance')
    p.add_argument('file')
    p.set_defaults(func=cmd_replay)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format='%(asctime)s %(levelname)s %(name)s: %(message)s',
    )
    try:
        return args.func(args)
    except DimacsParseError as e:
        sys.stderr.write(f"parse error: {e}\n")
        return constants.EXIT_INVARIANT_VIOLATION
    except ma.ValidationError as e:
        sys.stderr.write(f"invalid configuration: {e.messages}\n")
        return constants.EXIT_INVARIANT_VIOLATION
    except OSError as e:
        sys.stderr.write(f"{e}\n")
        return constants.EXIT_INVARIANT_VIOLATION
