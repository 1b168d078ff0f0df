"""End-to-end tests for the command line front end.

Everything goes through main(argv) so the argparse wiring, the exit
codes and the exact bytes on stdout are covered together.  The golden
tables and b-files live under tests/fixtures/.
"""

from pathlib import Path

import pytest

from boxpaths import counting
from boxpaths.cli import main
from boxpaths.paths import box_return_count, generate_k_box

FIXTURES = Path(__file__).parent / "fixtures"

EXAMPLE = "UUUDLDUUUDLDUUDL"
KT_EXAMPLE_BOX = "UUUUUDDLDUUUDDLDUUUDDL"
KT_EXAMPLE_IMAGE = "UUDUUDUU"


def run(capsys, *argv):
    code = main(list(argv))
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def test_count_plain(capsys):
    code, out, err = run(capsys, "count", "--k", "1", "--n", "3")
    assert (code, out, err) == (0, "7\n", "")


def test_count_k0_size_one(capsys):
    code, out, err = run(capsys, "count", "--k", "0", "--n", "1")
    assert (code, out, err) == (0, "1\n", "")


def test_count_returns_row(capsys):
    code, out, err = run(capsys, "count", "--k", "2", "--n", "5", "--stat", "returns")
    assert (code, out, err) == (0, "340 200 60 11 1\n", "")


def test_count_single_cell(capsys):
    code, out, _ = run(
        capsys, "count", "--k", "1", "--n", "4", "--stat", "returns", "--j", "2"
    )
    assert (code, out) == (0, "12\n")
    # out-of-range j is a zero count, not an error
    code, out, _ = run(
        capsys, "count", "--k", "1", "--n", "4", "--stat", "long-ascents", "--j", "9"
    )
    assert (code, out) == (0, "0\n")


def test_count_j_without_stat_is_usage_error(capsys):
    code, out, err = run(capsys, "count", "--k", "1", "--n", "4", "--j", "2")
    assert code == 2 and out == "" and err.startswith("error:")


def test_count_bad_n_is_usage_error(capsys):
    code, _, err = run(capsys, "count", "--k", "1", "--n", "0")
    assert code == 2 and err.startswith("error:")


@pytest.mark.parametrize(
    "stat,k,fixture",
    [
        ("returns", "1", "table_returns_k1.txt"),
        ("returns", "2", "table_returns_k2.txt"),
        ("long-ascents", "1", "table_lasc_k1.txt"),
        ("long-ascents", "2", "table_lasc_k2.txt"),
    ],
)
def test_tables_match_golden_files(capsys, stat, k, fixture):
    code, out, err = run(
        capsys, "table", "--stat", stat, "--k", k, "--rows", "8"
    )
    assert code == 0 and err == ""
    assert out == (FIXTURES / fixture).read_text()


def test_table_k0_returns_matches_enumeration(capsys):
    code, out, _ = run(capsys, "table", "--stat", "returns", "--k", "0", "--rows", "6")
    assert code == 0
    for line in out.splitlines():
        label, *cells = line.split()
        n = int(label)
        family = list(generate_k_box(0, n))
        for j, cell in enumerate(cells, 1):
            assert int(cell) == sum(
                1 for p in family if box_return_count(p, 0) == j
            )


def test_table_rejects_zero_rows(capsys):
    code, _, err = run(capsys, "table", "--stat", "returns", "--k", "1", "--rows", "0")
    assert code == 2 and err.startswith("error:")


def test_enumerate_box_words(capsys):
    code, out, _ = run(capsys, "enumerate", "--family", "box", "--k", "1", "--n", "3")
    assert code == 0
    assert out == (FIXTURES / "box_k1_size3.txt").read_text()


def test_enumerate_box_compositions(capsys):
    code, out, _ = run(
        capsys,
        "enumerate", "--family", "box", "--k", "1", "--n", "3",
        "--format", "compositions",
    )
    assert code == 0
    assert out.splitlines() == [
        "6,1,1", "5,2,1", "5,1,2", "4,3,1", "4,2,2", "3,4,1", "3,3,2",
    ]


def test_enumerate_box_k0_compositions_are_virtual(capsys):
    code, out, _ = run(
        capsys,
        "enumerate", "--family", "box", "--k", "0", "--n", "3",
        "--format", "compositions",
    )
    assert code == 0
    assert out.splitlines() == ["3,1,1", "2,2,1"]


def test_enumerate_skew(capsys):
    code, out, _ = run(capsys, "enumerate", "--family", "skew", "--n", "2")
    assert code == 0
    assert out.splitlines() == ["UUDD", "UUDL", "UDUD"]


def test_enumerate_usage_errors(capsys):
    code, _, err = run(capsys, "enumerate", "--family", "skew", "--k", "1", "--n", "2")
    assert code == 2 and err.startswith("error:")
    code, _, err = run(
        capsys,
        "enumerate", "--family", "skew", "--n", "2", "--format", "compositions",
    )
    assert code == 2 and err.startswith("error:")
    code, _, err = run(capsys, "enumerate", "--family", "box", "--n", "2")
    assert code == 2 and err.startswith("error:")


def test_biject_threshold_of_composition(capsys):
    code, out, _ = run(
        capsys,
        "biject", "--k", "1", "--to", "threshold", "--composition", "3,3,2",
    )
    assert (code, out) == (0, "3,6\n")


def test_biject_threshold_inverse(capsys):
    code, out, _ = run(
        capsys, "biject", "--k", "1", "--to", "threshold", "--inverse", "3,6"
    )
    assert (code, out) == (0, EXAMPLE + "\n")


def test_biject_ktdyck_example_pair(capsys):
    code, out, _ = run(capsys, "biject", "--k", "2", "--to", "ktdyck", KT_EXAMPLE_BOX)
    assert (code, out) == (0, KT_EXAMPLE_IMAGE + "\n")
    code, out, _ = run(
        capsys, "biject", "--k", "2", "--to", "ktdyck", "--inverse", KT_EXAMPLE_IMAGE
    )
    assert (code, out) == (0, KT_EXAMPLE_BOX + "\n")


def test_biject_trees_round_trip(capsys):
    code, image, _ = run(capsys, "biject", "--k", "1", "--to", "trees", EXAMPLE)
    assert code == 0
    code, out, _ = run(
        capsys, "biject", "--k", "1", "--to", "trees", "--inverse", image.strip()
    )
    assert (code, out) == (0, EXAMPLE + "\n")


def test_biject_decomposition_round_trip(capsys):
    code, image, _ = run(capsys, "biject", "--k", "1", "--to", "decomposition", EXAMPLE)
    assert code == 0 and image == "UUUDLDUUUDLD,\n"
    code, out, _ = run(
        capsys,
        "biject", "--k", "1", "--to", "decomposition", "--inverse", "UUUDLDUUUDLD,",
    )
    assert (code, out) == (0, EXAMPLE + "\n")


def test_biject_size_one_images_are_empty(capsys):
    for to, image in [("ktdyck", ""), ("threshold", ""),
                      ("decomposition", ","), ("trees", "-,-")]:
        code, out, _ = run(capsys, "biject", "--k", "1", "--to", to, "UUDL")
        assert (code, out) == (0, image + "\n")
        # "--" keeps argparse from reading images like "-,-" as flags
        code, out, _ = run(
            capsys, "biject", "--k", "1", "--to", to, "--inverse", "--", image
        )
        assert (code, out) == (0, "UUDL\n")


def test_biject_usage_errors(capsys):
    code, _, err = run(
        capsys,
        "biject", "--k", "1", "--to", "trees", "--composition", "--inverse", "3,3,2",
    )
    assert code == 2 and err.startswith("error:")
    # a skew word that is not a 1-box path
    code, _, err = run(capsys, "biject", "--k", "1", "--to", "trees", "UUDD")
    assert code == 2 and err.startswith("error:")
    code, _, err = run(capsys, "biject", "--k", "1", "--to", "trees", "UXDL")
    assert code == 2 and err.startswith("error:")


def test_verify_small_suite_passes(capsys):
    code, out, err = run(
        capsys, "verify", "--suite", "formulas", "--max-k", "1", "--max-n", "3"
    )
    assert code == 0 and err == ""
    lines = out.splitlines()
    assert all(line.startswith("PASS") for line in lines[:-1])
    assert lines[-1].endswith("checks passed")


def test_verify_series_diagonal_depth(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "series", "--max-n", "5")
    assert code == 0
    assert "skew-equation" in out


def test_verify_reports_injected_fault(capsys, monkeypatch):
    true_fn = counting.count_box_by_returns

    def skewed(k, n, j):
        return true_fn(k, n, j) + (1 if (k, n, j) == (1, 3, 2) else 0)

    monkeypatch.setattr(counting, "count_box_by_returns", skewed)
    code, out, _ = run(
        capsys, "verify", "--suite", "formulas", "--max-k", "1", "--max-n", "3"
    )
    assert code == 1
    assert "FAIL" in out
    assert "replay: boxpaths" in out


def test_verify_bad_suite_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--suite", "nonsense"])
    assert exc.value.code == 2


def test_bfile_box_counts(capsys):
    code, out, _ = run(
        capsys, "bfile", "--sequence", "box-counts", "--k", "1", "--count", "5"
    )
    assert (code, out) == (0, "1 1\n2 2\n3 7\n4 30\n5 143\n")


def test_bfile_returns_triangle_matches_golden(capsys):
    code, out, _ = run(
        capsys, "bfile", "--sequence", "returns-triangle", "--k", "1", "--count", "36"
    )
    assert code == 0
    assert out == (FIXTURES / "a143603.txt").read_text()


def test_bfile_skew_counts(capsys):
    code, out, _ = run(capsys, "bfile", "--sequence", "skew-counts", "--count", "8")
    assert code == 0
    values = [int(line.split()[1]) for line in out.splitlines()]
    assert values == [1, 3, 10, 36, 137, 543, 2219, 9285]


def test_bfile_long_ascent_diagonal_is_catalan(capsys):
    code, out, _ = run(
        capsys,
        "bfile", "--sequence", "long-ascents-diagonal", "--k", "1", "--count", "6",
    )
    assert code == 0
    values = [int(line.split()[1]) for line in out.splitlines()]
    assert values == [1, 1, 2, 5, 14, 42]


def test_bfile_tailed_counts_agree_with_library(capsys):
    code, out, _ = run(
        capsys, "bfile", "--sequence", "tailed-counts", "--k", "2", "--count", "6"
    )
    assert code == 0
    values = [int(line.split()[1]) for line in out.splitlines()]
    assert values == [counting.count_tailed(2, i) for i in range(1, 7)]


def test_bfile_empty_request(capsys):
    code, out, _ = run(
        capsys, "bfile", "--sequence", "box-counts", "--k", "1", "--count", "0"
    )
    assert (code, out) == (0, "")


def test_bfile_usage_errors(capsys):
    code, _, err = run(
        capsys, "bfile", "--sequence", "skew-counts", "--k", "1", "--count", "3"
    )
    assert code == 2 and err.startswith("error:")
    code, _, err = run(
        capsys, "bfile", "--sequence", "returns-triangle", "--count", "3"
    )
    assert code == 2 and err.startswith("error:")


def test_argparse_rejects_unknown_command():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_argparse_requires_flags():
    with pytest.raises(SystemExit) as exc:
        main(["count", "--n", "3"])
    assert exc.value.code == 2
