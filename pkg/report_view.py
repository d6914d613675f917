"""
Rich rendering of reduction and probe reports.
"""
from typing import Any, Dict, List, Optional

from rich.console import Console
from rich.panel import Panel
from rich.table import Table
from rich.text import Text

from ed_logger import get_console
from ed_util import truncate_filepath


class ReportView:
    """Prints reports as tables; all output goes to stdout through rich."""

    def __init__(self, console: Optional[Console] = None):
        self.console = console or get_console()

    def _grid_table(self, title: str, grid: List[List[str]]) -> Table:
        table = Table(title=title, show_header=False)
        for _ in grid[0]:
            table.add_column(style="cyan", justify="right")
        for row in grid:
            table.add_row(*row)
        return table

    def show_reduction(self, report: Dict[str, Any]):
        verified = report["verified"]
        status = Text("verified" if verified else "NOT verified",
                      style="bold green" if verified else "bold red")
        self.console.print(Panel(status, title=f"{report['form']} reduction over {report['ring']['kind']}",
                                 border_style="green" if verified else "red"))
        for name in ("D", "P", "Q"):
            self.console.print(self._grid_table(name, report[name]))
        if report["chain"]:
            table = Table(title="Diagonal")
            table.add_column("i", style="magenta")
            table.add_column("entry", style="cyan")
            table.add_column("divides next", style="green")
            table.add_column("invariant", style="yellow")
            for i, row in enumerate(report["D"]):
                chain = str(report["chain"][i]) if i < len(report["chain"]) else "-"
                table.add_row(str(i), row[i], chain, str(report["invariant"][i]))
            self.console.print(table)

    def show_probe(self, report: Dict[str, Any]):
        table = Table(title=f"{report['condition']} probe over {report['ring']['kind']}")
        table.add_column("field", style="magenta")
        table.add_column("value", style="cyan")
        table.add_row("inputs", ", ".join(report["inputs"]) or "-")
        table.add_row("bound", str(report["bound"]))
        table.add_row("status", report["status"])
        witness = report["witness"]
        if witness is None:
            table.add_row("witness", "[yellow]none within bound[/yellow]")
        else:
            for key in sorted(witness):
                table.add_row(key, str(witness[key]))
        self.console.print(table)

    def show_verification(self, path: str, problems: List[str]):
        if not problems:
            self.console.print(f"[green]{truncate_filepath(path)}: verified[/green]")
            return
        table = Table(title=f"Verification problems in {truncate_filepath(path)}")
        table.add_column("problem", style="red")
        for problem in problems:
            table.add_row(problem)
        self.console.print(table)

    def show_oracle(self, title: str, rows: List[List[str]], headers: List[str]):
        table = Table(title=title)
        for header in headers:
            table.add_column(header, style="cyan")
        for row in rows:
            table.add_row(*row)
        self.console.print(table)

    def show_sweep(self, summary: Dict[str, Any]):
        table = Table(title=f"Sweep {summary['kind']}")
        table.add_column("cases", style="cyan")
        table.add_column("passed", style="green")
        table.add_column("inconclusive", style="yellow")
        table.add_column("counterexamples", style="red")
        table.add_row(str(summary["cases"]), str(summary["passed"]),
                      str(summary["inconclusive"]), str(len(summary["counterexamples"])))
        self.console.print(table)
        if summary["counterexamples"]:
            self.console.print(f"[yellow]Showing first {min(10, len(summary['counterexamples']))} "
                               f"of {len(summary['counterexamples'])} counterexamples[/yellow]")
            for example in summary["counterexamples"][:10]:
                self.console.print(f"[red]{example}[/red]")
