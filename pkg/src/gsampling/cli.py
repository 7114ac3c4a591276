# -*- coding: utf-8 -*-
"""
Command-line interface for running sampling experiments.

```
gsampling run --config scenario.json [--out DIR] [--workers K] [--seed S]
gsampling presets --list | --show NAME | --write DIR
gsampling aggregate --traces DIR [--out FILE]
```

Exits with 0 on success, 2 on configuration errors, 3 on runtime errors.

------------------------------------------------------------------------------
This file is part of gsampling - active sampling of graph signals.
Released under the MIT License.

@author      gsampling developers
@created     12.09.2026
@modified    17.10.2026
------------------------------------------------------------------------------
"""
import argparse
import io
import logging
import os
import sys

import six

from . import __version__, api, harness

logger = logging.getLogger(__name__)


## Process exit codes
EXIT_OK, EXIT_CONFIG, EXIT_RUNTIME = 0, 2, 3

## Log line format of command-line runs
LOG_FORMAT = "[%(levelname)s]\t[%(created).06f] [gsampling] %(message)s"


def make_parser():
    """Returns argparse.ArgumentParser for command line."""
    parser = argparse.ArgumentParser(prog="gsampling", description="Active sampling of "
                                     "approximately bandlimited graph signals.")
    parser.add_argument("--version", action="version", version="%(prog)s " + __version__)
    parser.add_argument("-v", "--verbose", action="store_true", help="log debug messages")
    commands = parser.add_subparsers(dest="command", metavar="COMMAND")
    commands.required = True

    run = commands.add_parser("run", help="run scenario from JSON configuration")
    run.add_argument("--config", required=True, help="scenario configuration file")
    run.add_argument("--out", help="directory to write traces and tables to, "
                     "aggregate table printed to console if not given")
    run.add_argument("--workers", type=int, default=1, help="trials to run concurrently")
    run.add_argument("--seed", type=int, help="master seed, overrides configuration")

    presets = commands.add_parser("presets", help="list, show or write reference scenarios")
    group = presets.add_mutually_exclusive_group(required=True)
    group.add_argument("--list", action="store_true", help="print preset names")
    group.add_argument("--show", metavar="NAME", help="print preset as JSON configuration")
    group.add_argument("--write", metavar="DIR", help="write all presets as <name>.json")

    aggregate = commands.add_parser("aggregate", help="recompute aggregate table from traces")
    aggregate.add_argument("--traces", required=True,
                           help="directory with trace files, or run output directory")
    aggregate.add_argument("--out", help="aggregate CSV to write, printed to console if not given")
    return parser


def run(args):
    """Handles "run" command."""
    s = harness.load_scenario(args.config)
    if args.seed is not None: s = harness.scaled(s, master_seed=args.seed)
    if args.workers < 1:
        raise api.ConfigError("Workers must be a positive integer, got %r." % args.workers)
    _, table = harness.run_scenario(s, out=args.out, workers=args.workers)
    if args.out is None: harness.write_csv(sys.stdout, harness.AGGREGATE_COLUMNS, table)


def presets(args):
    """Handles "presets" command."""
    if args.list:
        for s in harness.presets(): print(s.name)
    elif args.show:
        print(harness.dump_scenario(harness.preset(args.show)))
    else:
        if not os.path.isdir(args.write): os.makedirs(args.write)
        for s in harness.presets():
            path = os.path.join(args.write, "%s.json" % s.name)
            with io.open(path, "w", encoding="utf-8", newline="\n") as f:
                f.write(six.text_type(harness.dump_scenario(s)) + u"\n")
            logger.info("Wrote %s.", path)


def aggregate(args):
    """Handles "aggregate" command."""
    table = harness.aggregate_traces(args.traces, out=args.out)
    if args.out is None: harness.write_csv(sys.stdout, harness.AGGREGATE_COLUMNS, table)


def main(argv=None):
    """Parses command line and runs command, returns exit code."""
    args = make_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.INFO,
                        format=LOG_FORMAT)
    handler = {"run": run, "presets": presets, "aggregate": aggregate}[args.command]
    try:
        handler(args)
    except api.ParameterError as e:
        logger.error("%s", e)
        return EXIT_CONFIG
    except (api.Error, IOError, OSError) as e:
        logger.error("%s", e)
        return EXIT_RUNTIME
    return EXIT_OK


__all__ = ["EXIT_CONFIG", "EXIT_OK", "EXIT_RUNTIME", "main", "make_parser"]
