import csv
import io
import json

from noetherline.cli import CSV_CLASSIFY_HEADER, main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def json_lines(out):
    return [json.loads(line) for line in out.splitlines() if line]


# --- classify ----------------------------------------------------------------


def test_classify_8_8_includes_smooth_row(capsys):
    code, out, _ = run_cli(capsys, "--format", "json", "classify", "8", "8")
    assert code == 0
    rows = {r["d0"]: r for r in json_lines(out)}
    row = rows[7]
    assert row["class"] == "smooth"
    assert row["pg"] == 22
    assert row["K3"] == {"num": 26, "den": 1}
    assert row["image"] == "F10"


def test_classify_3_3_includes_canonical_curve_row(capsys):
    code, out, _ = run_cli(capsys, "--format", "json", "classify", "3", "3")
    assert code == 0
    rows = {r["d0"]: r for r in json_lines(out)}
    assert rows[1]["class"] == "canonical_curve"
    assert rows[1]["count"] == 1
    assert rows[0]["class"] == "not_existent"
    assert rows[0]["pg"] is None


def test_classify_2_2_flags_nef_not_ample(capsys):
    code, out, _ = run_cli(capsys, "--format", "json", "classify", "2", "2")
    assert code == 0
    rows = {r["d0"]: r for r in json_lines(out)}
    assert rows[3]["K_nef"] is True and rows[3]["K_ample"] is False


def test_classify_csv_header_and_rows(capsys):
    code, out, _ = run_cli(capsys, "--format", "csv", "classify", "8", "8", "--d0", "7")
    assert code == 0
    reader = list(csv.reader(io.StringIO(out)))
    assert reader[0] == CSV_CLASSIFY_HEADER
    assert reader[1][:6] == ["8", "7", "10", "22", "26", "1"]
    assert reader[1][6] == "smooth"


def test_classify_text_table(capsys):
    code, out, _ = run_cli(capsys, "classify", "8", "8", "--d0", "7")
    assert code == 0
    assert out.splitlines()[0].split()[:4] == ["d", "d0", "e", "class"]
    assert "smooth" in out


def test_classify_rejects_bad_range(capsys):
    code, _, err = run_cli(capsys, "classify", "5", "3")
    assert code == 2 and "d_min" in err


def test_classify_missing_argument_is_usage_error(capsys):
    code, _, _ = run_cli(capsys, "classify", "5")
    assert code == 2


# --- inspect -----------------------------------------------------------------


def test_inspect_8_7_json(capsys):
    code, out, _ = run_cli(capsys, "--format", "json", "inspect", "8", "7")
    assert code == 0
    record = json.loads(out)
    assert record["weight_matrix"] == [[1, 1, 1, -9, 0, 0], [0, 0, 1, 1, 2, 5]]
    labels = [m["label"] for m in record["support"]]
    assert "x0^9 x1" in labels
    assert record["invariants"]["pg"] == 22
    assert record["base_locus"]["family"] == "s0"
    assert record["blowup_parameters"] == {"a": 9, "e": 10, "in_range": False}
    assert record["flip"] is None


def test_inspect_1_1_flags_kodaira_zero(capsys):
    code, out, _ = run_cli(capsys, "inspect", "1", "1")
    assert code == 0
    assert "Kodaira dimension 0" in out
    assert "invariants:" not in out


def test_inspect_5_1_empty_family_exit_3(capsys):
    code, out, _ = run_cli(capsys, "--format", "json", "inspect", "5", "1")
    assert code == 3
    assert json.loads(out)["classification"]["kind"] == "not_existent"


def test_inspect_flip_case_carries_flip_record(capsys):
    code, out, _ = run_cli(capsys, "--format", "json", "inspect", "2", "1")
    assert code == 0
    record = json.loads(out)
    assert record["flip"]["K3_plus"] == {"num": 9, "den": 4}
    assert record["invariants"]["degenerate_note"]


def test_inspect_rejects_unnormalized_params(capsys):
    code, _, err = run_cli(capsys, "inspect", "2", "4")
    assert code == 2 and "swap" in err


def test_inspect_json_round_trips(capsys):
    from noetherline.cli import inspect_record
    from noetherline.toric import BundleParams

    code, out, _ = run_cli(capsys, "--format", "json", "inspect", "8", "2")
    assert code == 0
    assert json.loads(out) == inspect_record(BundleParams(8, 2))


# --- thin wrappers --------------------------------------------------------------


def test_flip_text_prints_exact_rational(capsys):
    code, out, _ = run_cli(capsys, "flip", "2")
    assert code == 0
    assert "9/4" in out and "pg = 4" in out


def test_flip_json(capsys):
    code, out, _ = run_cli(capsys, "--format", "json", "flip", "3")
    assert code == 0
    record = json.loads(out)
    assert record["K3_plus"] == {"num": 85, "den": 14}
    assert record["P2"] == 22
    assert [q["r"] for q in record["basket"]] == [2, 7]


def test_flip_rejects_bad_degree(capsys):
    code, _, err = run_cli(capsys, "flip", "5")
    assert code == 2 and "flip" in err


def test_moduli_output(capsys):
    code, out, _ = run_cli(capsys, "moduli", "22")
    assert code == 0
    assert "2 components; second: X(8;7)" in out
    code, out, _ = run_cli(capsys, "moduli", "7")
    assert code == 0 and "1 component" in out
    code, _, err = run_cli(capsys, "moduli", "8")
    assert code == 2


def test_kobayashi_out_of_range(capsys):
    code, _, err = run_cli(capsys, "kobayashi", "9", "10")
    assert code == 2
    assert "outside the Kobayashi-Chen-Hu range" in err
    assert "X(8;7)" in err


def test_kobayashi_translation(capsys):
    code, out, _ = run_cli(capsys, "--format", "json", "kobayashi", "9", "8")
    assert code == 0
    record = json.loads(out)
    assert (record["d"], record["d0"]) == (10, 11)
    assert record["pg"] == 28


def test_bundle_output(capsys):
    code, out, _ = run_cli(capsys, "--format", "json", "bundle", "1", "10", "10")
    assert code == 0
    record = json.loads(out)
    assert record["N"] == 10
    assert record["K3"] == {"num": 15, "den": 1}
    code, out, _ = run_cli(capsys, "--format", "json", "bundle", "0", "2", "1")
    record = json.loads(out)
    assert record["exists"] is False and "K3" not in record


def test_monomials_output(capsys):
    code, out, _ = run_cli(capsys, "--format", "json", "monomials", "10")
    assert code == 0
    record = json.loads(out)
    assert record["count"] == 49 and record["ring_rank"] == 48
    code, out, _ = run_cli(capsys, "--format", "csv", "monomials", "5")
    assert len(out.splitlines()) == 14  # header + 13 monomials


def test_nef_output(capsys):
    code, out, _ = run_cli(capsys, "--format", "json", "nef", "5", "4", "1", "-2")
    assert code == 0
    record = json.loads(out)
    assert record["nef"] is True and record["ample"] is True
    assert record["curves"]["s0"] == {"num": 2, "den": 1}
    assert record["curves"]["fibre_line"] == {"num": 1, "den": 1}
    assert record["curves"]["s5"] == {"num": 3, "den": 5}


# --- output plumbing ---------------------------------------------------------------


def test_output_is_byte_identical_across_runs(capsys):
    outputs = []
    for _ in range(2):
        code, out, _ = run_cli(capsys, "--format", "json", "classify", "0", "9")
        assert code == 0
        outputs.append(out)
    assert outputs[0] == outputs[1]


def test_output_file_writing(tmp_path, capsys):
    target = tmp_path / "rows.csv"
    code = main(["--format", "csv", "--output", str(target), "classify", "2", "2"])
    capsys.readouterr()
    assert code == 0
    content = target.read_text(encoding="utf-8")
    assert content.splitlines()[0] == ",".join(CSV_CLASSIFY_HEADER)


def test_classify_json_round_trips(capsys):
    from noetherline.cli import classify_record
    from noetherline.toric import BundleParams

    code, out, _ = run_cli(capsys, "--format", "json", "classify", "4", "4")
    assert code == 0
    rows = json_lines(out)
    rebuilt = [
        classify_record(BundleParams(4, d0)) for d0 in range(0, 7)
    ]
    assert rows == rebuilt
