from __future__ import annotations

from typing import Dict

from rich.console import Console
from rich.live import Live
from rich.style import Style
from rich.table import Table
from rich.text import Text

console = Console(stderr=True)


class SuiteProgress:
    """Live status table of the suites run by ``check all``."""

    def __init__(self) -> None:
        self.status: Dict[str, str] = {}
        self.table = Table(show_header=False, box=None, padding=(0, 1))
        self.live = Live(self.table, console=console, refresh_per_second=4)
        self.started = False

    def start(self) -> None:
        if not self.started:
            self.live.start()
            self.started = True

    def stop(self) -> None:
        if self.started:
            self.live.stop()
            self.started = False

    def update(self, suite: str, status: str) -> None:
        self.status[suite] = status
        self._refresh()

    def _refresh(self) -> None:
        self.table = Table(show_header=False, box=None, padding=(0, 1))
        self.table.add_column(width=60)
        for suite, status in sorted(self.status.items()):
            lowered = status.lower()
            if lowered == "pass":
                style, symbol = Style(color="green", bold=True), "✓"
            elif lowered in ("fail", "error"):
                style, symbol = Style(color="red", bold=True), "✗"
            else:
                style, symbol = Style(color="yellow"), "⋯"
            line = Text()
            line.append(f"{symbol} ", style=style)
            line.append(f"{suite:<16}", style=Style(bold=True))
            line.append(status, style=style)
            self.table.add_row(line)
        self.live.update(self.table)


progress = SuiteProgress()
