from __future__ import annotations

import json
from typing import Iterable, Sequence

from colorama import Fore, Style
from tabulate import tabulate

from src.geometry.rational import format_rational, format_vector
from src.geometry.types import Polytope
from src.verification.reports import VerificationReport


def print_json(payload: dict) -> None:
    print(json.dumps(payload, indent=2, sort_keys=False))


def format_polytope_table(P: Polytope) -> str:
    """Vertex and facet listing of a polytope as two grid tables."""
    vertices = tabulate([[i, ", ".join(format_vector(v))] for i, v in enumerate(P.vrep)], headers=["#", "vertex"], tablefmt="grid")
    facets = tabulate([[", ".join(format_vector(h.normal)), format_rational(h.offset)] for h in P.hrep], headers=["normal", "offset"], tablefmt="grid")
    return f"{vertices}\n{facets}"


def print_suite_reports(reports: Sequence[VerificationReport]) -> None:
    rows = []
    for report in reports:
        color = Fore.GREEN if report.passed else Fore.RED
        name, verdict, checks, failed, kind = report.summary_row()
        rows.append([f"{Fore.CYAN}{name}{Style.RESET_ALL}", f"{color}{verdict}{Style.RESET_ALL}", checks, failed, kind])
    print(tabulate(rows, headers=["suite", "result", "checks", "failures", "arithmetic"], tablefmt="grid", colalign=("left", "center", "right", "right", "left")))

    for report in reports:
        if report.conclusion:
            print(f"\n{Fore.WHITE}{Style.BRIGHT}{report.name}:{Style.RESET_ALL} {report.conclusion}")
        _print_failures(report.failures)


def _print_failures(failures: Iterable[str], limit: int = 10) -> None:
    failures = list(failures)
    for line in failures[:limit]:
        print(f"  {Fore.RED}✗{Style.RESET_ALL} {line}")
    if len(failures) > limit:
        print(f"  {Fore.YELLOW}... {len(failures) - limit} more{Style.RESET_ALL}")
