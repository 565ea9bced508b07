import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from spunlink.cli import EXIT_IO, EXIT_NEGATIVE, EXIT_OK, EXIT_USAGE, main
from spunlink.fileformat import parse

FIX = Path(__file__).resolve().parent.parent / "fixtures"
# the fig6_2 link written with the arc discovered first
ARC_FIRST = "form strip\nlabel 0 K\nlabel 1 J\nax+\ncup 2\nx/ 1\nx/ 1\ncap 2\nax-\n"


def run(*argv):
    out = io.StringIO()
    code = main([str(a) for a in argv], out=out)
    return code, out.getvalue()


def fx(name):
    return FIX / f"{name}.diag"


def test_validate_summary():
    assert run("validate", fx("fig6_2")) == (EXIT_OK, "2 components: 1 circle, 1 arc\n")
    assert run("validate", fx("family_1")) == (EXIT_OK, "1 component: 1 circle, 0 arcs\n")


def test_validate_names_the_line(tmp_path, capsys):
    bad = tmp_path / "bad.diag"
    bad.write_text("form strip\n# two strands\ncup 1\ncap 5\n")
    assert run("validate", bad)[0] == EXIT_USAGE
    assert "line 4" in capsys.readouterr().err


def test_validate_open_end(tmp_path, capsys):
    bad = tmp_path / "bad.diag"
    bad.write_text("form strip\ncup 1\n")
    assert run("validate", bad)[0] == EXIT_USAGE
    assert "NonEmptyFinalState" in capsys.readouterr().err


def test_parse_error_exit(tmp_path, capsys):
    bad = tmp_path / "bad.diag"
    bad.write_text("form strip\nfrob 1\n")
    assert run("validate", bad)[0] == EXIT_USAGE
    assert "line 2" in capsys.readouterr().err


def test_missing_file(tmp_path):
    assert run("validate", tmp_path / "nope.diag")[0] == EXIT_IO
    assert run("invariants", tmp_path / "nope.diag")[0] == EXIT_IO


def test_usage_errors():
    assert run()[0] == EXIT_USAGE
    assert run("frobnicate")[0] == EXIT_USAGE
    assert run("obstruct", fx("family_1"), fx("family_2"))[0] == EXIT_USAGE
    assert run("--help")[0] == EXIT_OK


def test_invariants_fig6_2():
    code, text = run("invariants", "--json", fx("fig6_2"))
    doc = json.loads(text)
    assert code == EXIT_OK and doc["schema"] == "spunlink.report/v1"
    assert doc["descriptor"]["alinking_matrix"] == [[None, 1], [0, None]]
    assert doc["descriptor"]["genera"] == [1, 0]
    assert doc["semi_boundary"] is False
    code, text = run("invariants", fx("fig6_2"))
    assert "semi-boundary: no" in text


def test_invariants_split_and_family(tmp_path):
    split = tmp_path / "split.diag"
    split.write_text("form strip\ncup 1\ncap 1\nax+\nax-\n")
    doc = json.loads(run("invariants", "--json", split)[1])
    assert doc["linking_matrix"] == [[None, 0], [0, None]]
    assert doc["descriptor"]["alinking_matrix"] == [[None, 0], [0, None]]
    doc = json.loads(run("invariants", "--json", fx("family_2"))[1])
    assert doc["semi_boundary"] is True
    assert doc["descriptor"]["branch_index"] == 0


def test_reports_are_deterministic():
    for argv in (("invariants", "--json", fx("main_L")), ("cover", fx("main_Lprime"), "-p", "5"),
                 ("obstruct", fx("main_L"), fx("main_Lprime"), "-p", "5")):
        assert run(*argv) == run(*argv)


def test_cover_family_1(tmp_path):
    out = tmp_path / "c.diag"
    code, text = run("cover", fx("family_1"), "-p", "3", "-o", out)
    assert code == EXIT_OK and "K.2" in text
    code, text = run("invariants", "--json", out)
    doc = json.loads(text)
    assert len(doc["components"]) == 3
    m = doc["descriptor"]["alinking_matrix"]
    assert all(m[i][j] == 1 for i in range(3) for j in range(3) if i != j)


def test_cover_degree_one_echoes_input():
    code, text = run("cover", fx("family_3"), "-p", "1")
    assert code == EXIT_OK
    lifted, _ = parse(text)
    base, _ = parse(fx("family_3").read_text())
    assert lifted.events == base.events and lifted.component_labels == base.component_labels
    assert not lifted.branch_present
    assert "branch present" in run("cover", fx("family_3"), "-p", "1", "--keep-branch")[1]


def test_cover_json_provenance(tmp_path):
    code, text = run("cover", fx("family_1"), "-p", "2", "--json", "-o", tmp_path / "c.diag")
    doc = json.loads(text)
    assert [l["deck_index"] for l in doc["lifts"]] == [0, 1]


def test_cover_errors(tmp_path):
    assert run("cover", fx("fig6_2"), "-p", "2")[0] == EXIT_USAGE
    assert run("cover", fx("family_1"), "-p", "0")[0] == EXIT_USAGE
    assert run("cover", fx("family_1"), "-p", "2", "-o", tmp_path / "no" / "c.diag")[0] == EXIT_IO


def test_compare(tmp_path):
    code, text = run("compare", fx("main_L"), fx("main_L"))
    assert code == EXIT_OK and "witness [0, 1, 2]" in text
    a, b = tmp_path / "a.diag", tmp_path / "b.diag"
    run("cover", fx("main_L"), "-p", "5", "-o", a)
    run("cover", fx("main_Lprime"), "-p", "5", "-o", b)
    assert run("compare", "--weak", a, b)[0] == EXIT_NEGATIVE
    code, text = run("compare", a, b)
    assert code == EXIT_NEGATIVE and "alk(" in text


def test_compare_permuted(tmp_path):
    swapped = tmp_path / "swapped.diag"
    swapped.write_text(ARC_FIRST)
    assert run("compare", fx("fig6_2"), swapped)[0] == EXIT_NEGATIVE
    code, text = run("compare", "--weak", fx("fig6_2"), swapped)
    assert code == EXIT_OK and "witness [1, 0]" in text
    assert "J -> J" in text


def test_obstruct():
    code, text = run("obstruct", fx("main_L"), fx("main_Lprime"), "-p", "5")
    assert code == EXIT_OK and text.startswith("DISTINGUISHED (p=5)")
    code, text = run("obstruct", fx("family_1"), fx("family_2"), "-p", "5")
    assert code == EXIT_OK and text.startswith("DISTINGUISHED (p=5)")
    code, text = run("obstruct", fx("family_1"), fx("family_1"), "-p", "3")
    assert code == EXIT_NEGATIVE and text.startswith("INCONCLUSIVE")


def test_obstruct_rejects_composite(capsys):
    assert run("obstruct", fx("family_1"), fx("family_2"), "-p", "6")[0] == EXIT_USAGE
    assert "prime power" in capsys.readouterr().err
    assert run("obstruct", fx("fig6_2"), fx("family_2"), "-p", "5")[0] == EXIT_USAGE


def test_obstruct_scan():
    code, text = run("obstruct", fx("family_1"), fx("family_1"), "--scan")
    assert code == EXIT_NEGATIVE and "tried p in [2, 3, 4, 5, 7, 8, 9]" in text


@pytest.mark.parametrize("case", ["fig6.2", "family", "main", "all"])
def test_pinned_cases(case):
    code, text = run("paper", "--case", case)
    assert code == EXIT_OK and text.endswith("checks hold\n")


def test_pinned_reports_first_failure(monkeypatch):
    from spunlink import pinned

    monkeypatch.setattr(pinned, "run", lambda case: [pinned.Check("x", "pinned", 1, 2)])
    code, text = run("paper")
    assert code == EXIT_NEGATIVE and "first failure: [x] pinned" in text


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "spunlink", "validate", str(fx("fig6_2"))],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "2 components: 1 circle, 1 arc\n"
