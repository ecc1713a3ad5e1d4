from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from src.geometry.errors import MalformedInput

from .instance import InstanceFile


def add_common_args(parser: argparse.ArgumentParser) -> argparse.ArgumentParser:
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("--verbose", action="store_true", help="Log algorithm milestones (DEBUG)")
    verbosity.add_argument("--quiet", action="store_true", help="Only log warnings and errors")
    parser.add_argument("--seed", type=int, default=0, help="Seed for randomized searches and suites (default 0)")
    return parser


def add_instance_args(parser: argparse.ArgumentParser, *, body: bool = False, out: bool = False) -> argparse.ArgumentParser:
    parser.add_argument("--in", dest="instance", type=Path, required=True, help="Instance JSON file")
    if body:
        parser.add_argument("--body", type=str, default=None, help="Name of the polytope to use (defaults to the only one, or conv(points))")
    if out:
        parser.add_argument("--out", type=Path, default=None, help="Also write the result to this file")
    return parser


def configure_logging(args: argparse.Namespace) -> None:
    level = logging.INFO
    if getattr(args, "verbose", False):
        level = logging.DEBUG
    elif getattr(args, "quiet", False):
        level = logging.WARNING
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr, force=True)


def load_instance(path: Path) -> InstanceFile:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise MalformedInput(f"cannot read instance file {path}: {exc.strerror}") from exc
    return InstanceFile.from_json(text)
