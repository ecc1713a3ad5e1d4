from src.utils.display import format_polytope_table, print_suite_reports
from src.utils.progress import SuiteProgress
from src.verification import VerificationReport


def test_polytope_table_uses_exact_offsets(poly) -> None:
    table = format_polytope_table(poly((0, 0), ("1/2", 0), (0, "1/3")))
    assert "1/2" in table
    assert "1/3" in table


def test_suite_reports_list_failures(capsys) -> None:
    reports = [
        VerificationReport(name="alpha", passed=True, checks=3, conclusion="all good"),
        VerificationReport(name="beta", passed=False, checks=2, failures=["first check broke"]),
    ]
    print_suite_reports(reports)
    out = capsys.readouterr().out
    assert "alpha" in out and "beta" in out
    assert "first check broke" in out


def test_progress_tracks_latest_status() -> None:
    tracker = SuiteProgress()
    tracker.update("lemma1", "running")
    tracker.update("lemma1", "pass")
    tracker.update("example1", "fail")
    assert tracker.status == {"lemma1": "pass", "example1": "fail"}
    assert tracker.table.row_count == 2
