"""Command-line front end: ``ballconv <subcommand> ...``.

Exit codes: 0 on success, 1 when a check suite fails, 2 on malformed input or a
violated precondition (with an error JSON on stderr).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Callable, List, NoReturn, Optional

from colorama import init
from pydantic import BaseModel, ValidationError

from src.ballconv import ball_hull, circumball
from src.completeness import completion_report
from src.geometry.errors import GeometryError
from src.geometry.rational import format_vector, parse_point
from src.separation import b_exposed_points, exposed_b_faces, separate_point, separate_point_strict
from src.settings import LabSettings
from src.spindle import k_spindle_probe
from src.utils.display import format_polytope_table, print_json, print_suite_reports
from src.utils.progress import progress
from src.verification.suites import SUITES, run_suite

from .input import add_common_args, add_instance_args, configure_logging, load_instance
from .render import render_scene

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_FAILED, EXIT_INPUT = 0, 1, 2


class ErrorResponse(BaseModel):
    error: str
    message: str


class JsonErrorParser(argparse.ArgumentParser):
    """Usage errors exit 2 with the same error JSON as malformed instances."""

    def error(self, message: str) -> NoReturn:
        print(ErrorResponse(error="MalformedInput", message=f"{self.prog}: {message}").model_dump_json(), file=sys.stderr)
        self.exit(EXIT_INPUT)


def _emit(payload: dict, out: Optional[Path] = None) -> int:
    print_json(payload)
    if out is not None:
        Path(out).write_text(json.dumps(payload, indent=2), encoding="utf-8")
    return EXIT_OK


def cmd_hull(args: argparse.Namespace, settings: LabSettings) -> int:
    instance = load_instance(args.instance)
    hull = ball_hull(instance.norm_body(settings), instance.point_vectors())
    if args.table and not hull.is_whole_space:
        print(format_polytope_table(hull.polytope))
        return EXIT_OK
    return _emit(hull.to_dict(), args.out)


def cmd_circumball(args: argparse.Namespace, settings: LabSettings) -> int:
    instance = load_instance(args.instance)
    return _emit(circumball(instance.norm_body(settings), instance.point_vectors()).to_dict())


def cmd_separate(args: argparse.Namespace, settings: LabSettings) -> int:
    instance = load_instance(args.instance)
    N, body = instance.norm_body(settings), instance.polytope(args.body)
    point = parse_point(args.point)
    certificate = separate_point_strict(N, body, point) if args.strict else separate_point(N, body, point)
    return _emit(certificate.to_dict())


def cmd_faces(args: argparse.Namespace, settings: LabSettings) -> int:
    instance = load_instance(args.instance)
    N, body = instance.norm_body(settings), instance.polytope(args.body)
    if args.b_exposed:
        return _emit({"b_exposed_points": [format_vector(p) for p in b_exposed_points(N, body)]})
    return _emit({"exposed_b_faces": [face.to_dict() for face in exposed_b_faces(N, body)]})


def cmd_complete(args: argparse.Namespace, settings: LabSettings) -> int:
    instance = load_instance(args.instance)
    candidate = instance.polytope(args.candidate) if args.candidate else None
    report = completion_report(instance.norm_body(settings), instance.point_vectors(), candidate)
    return _emit(report.to_dict())


def cmd_spindle(args: argparse.Namespace, settings: LabSettings) -> int:
    instance = load_instance(args.instance)
    result = k_spindle_probe(
        instance.norm_body(settings),
        instance.polytope(args.body),
        args.k,
        args.budget,
        settings.default_seed,
        shortcut=not args.no_shortcut,
        max_size=settings.spindle_max_size,
        max_depth=settings.spindle_max_depth,
    )
    return _emit(result.to_dict())


def cmd_check(args: argparse.Namespace, settings: LabSettings) -> int:
    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    reports = []
    show_live = len(names) > 1 and not args.json
    if show_live:
        progress.start()
    try:
        for name in names:
            if show_live:
                progress.update(name, "running")
            report = run_suite(name, settings.default_seed)[0]
            reports.append(report)
            if show_live:
                progress.update(name, "pass" if report.passed else "fail")
    finally:
        progress.stop()

    if args.json:
        print_json({"reports": [r.model_dump() for r in reports]})
    else:
        print_suite_reports(reports)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED


def cmd_render(args: argparse.Namespace, settings: LabSettings) -> int:
    instance = load_instance(args.instance)
    render_scene(instance, args.out, settings)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = JsonErrorParser(prog="ballconv", description="Exact ball convexity in polyhedral Minkowski spaces")
    common = add_common_args(argparse.ArgumentParser(add_help=False))
    sub = parser.add_subparsers(dest="command", required=True, parser_class=JsonErrorParser)

    def command(name: str, help_text: str) -> argparse.ArgumentParser:
        return sub.add_parser(name, help=help_text, parents=[common])

    hull = add_instance_args(command("hull", "Ball hull of the instance points"), out=True)
    hull.add_argument("--table", action="store_true", help="Print vertex and facet tables instead of JSON")
    hull.set_defaults(handler=cmd_hull)

    circ = add_instance_args(command("circumball", "Circumradius and circumcenter set"))
    circ.set_defaults(handler=cmd_circumball)

    sep = add_instance_args(command("separate", "Unit sphere separating a point from a body"), body=True)
    sep.add_argument("--point", type=str, required=True, help='Point to separate, e.g. "2,0" or "1/2,-3/4"')
    sep.add_argument("--strict", action="store_true", help="Require K inside a smaller concentric ball")
    sep.set_defaults(handler=cmd_separate)

    faces = add_instance_args(command("faces", "Exposed b-faces of a body"), body=True)
    faces.add_argument("--b-exposed", action="store_true", help="Only list b-exposed points")
    faces.set_defaults(handler=cmd_faces)

    comp = add_instance_args(command("complete", "Completion report for the instance points"))
    comp.add_argument("--candidate", type=str, default=None, help="Name of a candidate complete polytope")
    comp.set_defaults(handler=cmd_complete)

    spin = add_instance_args(command("spindle", "Search for k-spindle convexity violations"), body=True)
    spin.add_argument("--k", type=int, default=2, help="Tuple size (0 tries every size)")
    spin.add_argument("--budget", type=int, default=200, help="Number of tuples to test")
    spin.add_argument("--no-shortcut", action="store_true", help="Search even when the body is b-convex")
    spin.set_defaults(handler=cmd_spindle)

    check = command("check", "Run a verification suite")
    check.add_argument("suite", choices=sorted(SUITES) + ["all"])
    check.add_argument("--json", action="store_true", help="Print the JSON reports instead of the table")
    check.set_defaults(handler=cmd_check)

    render = add_instance_args(command("render", "Write an SVG scene of a planar instance"))
    render.add_argument("--out", type=Path, required=True, help="SVG output path")
    render.set_defaults(handler=cmd_render)
    return parser


def _fail(code: str, message: str) -> int:
    print(ErrorResponse(error=code, message=message).model_dump_json(), file=sys.stderr)
    return EXIT_INPUT


def main(argv: Optional[List[str]] = None) -> int:
    init(autoreset=True)
    args = build_parser().parse_args(argv)
    configure_logging(args)
    settings = LabSettings(default_seed=args.seed)
    handler: Callable[[argparse.Namespace, LabSettings], int] = args.handler
    try:
        return handler(args, settings)
    except GeometryError as exc:
        logger.debug(f"{args.command} failed: {exc}")
        return _fail(exc.code, exc.message)
    except ValidationError as exc:
        return _fail("MalformedInput", str(exc))
    except (json.JSONDecodeError, OSError) as exc:
        return _fail("MalformedInput", str(exc))


if __name__ == "__main__":
    sys.exit(main())
