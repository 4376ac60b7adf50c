"""The command-line surface: flag handling, exit codes, stream formats."""

import io
import json

import pytest

from pentacage.cli import main
from pentacage.clusters import pip
from pentacage.generate import generate_isomers
from pentacage.patches import min_boundary_length
from pentacage.planarcode import read_fullerenes, write_planar_code


def run(capsys, monkeypatch, argv, stdin: bytes = b""):
    monkeypatch.setattr("sys.stdin", io.TextIOWrapper(io.BytesIO(stdin)))
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def graphs_as_bytes(graphs) -> bytes:
    buf = io.BytesIO()
    write_planar_code(buf, graphs)
    return buf.getvalue()


@pytest.fixture()
def binary_stdout(capsysbinary, monkeypatch):
    """main() writes planar_code to sys.stdout.buffer; capture it raw."""

    def call(argv, stdin: bytes = b""):
        monkeypatch.setattr("sys.stdin", io.TextIOWrapper(io.BytesIO(stdin)))
        code = main(argv)
        captured = capsysbinary.readouterr()
        return code, captured.out, captured.err

    return call


def test_generate_round_trips(binary_stdout):
    code, out, err = binary_stdout(["generate", "--n", "24"])
    assert code == 0
    got = list(read_fullerenes(io.BytesIO(out)))
    assert len(got) == 1
    assert got[0].n == 24
    assert b"1 isomers" in err


def test_tube_subcommand(binary_stdout):
    code, out, _ = binary_stdout(["tube", "--rings", "2"])
    assert code == 0
    (t,) = read_fullerenes(io.BytesIO(out))
    assert t.n == 40
    assert pip(t) == (6, 6)


def test_analyze_tsv_fields(capsys, monkeypatch):
    data = graphs_as_bytes(generate_isomers(20) + generate_isomers(24))
    code, out, err = run(capsys, monkeypatch, ["analyze"], stdin=data)
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 2
    n, sid, parts, sep, group, hog = lines[0].split("\t")
    assert (n, sid, parts, sep, group) == ("20", "-", "12", "-", "Ih")
    assert lines[1].split("\t")[4] == "D6d"
    assert "2 graphs analyzed" in err


def test_analyze_json_and_ids(capsys, monkeypatch):
    data = graphs_as_bytes(generate_isomers(24))
    code, out, _ = run(
        capsys, monkeypatch, ["analyze", "--format", "json", "--ids"], stdin=data
    )
    assert code == 0
    rec = json.loads(out)
    assert rec["n"] == 24
    assert rec["spiral_id"] == "24:1"
    assert rec["pip"] == [12]
    assert rec["separation"] is None


def test_census_records_match_library(capsys, monkeypatch):
    code, out, err = run(
        capsys, monkeypatch, ["census", "--n-max", "32", "--pip", "12"]
    )
    assert code == 0
    expected = []
    for n in (20, 24, 26, 28, 30, 32):
        for rank, g in enumerate(generate_isomers(n), start=1):
            if pip(g) == (12,):
                expected.append(f"{n}:{rank}")
    assert [line.split("\t")[1] for line in out.splitlines()] == expected
    assert "n=32" in err and "isomers" in err


def test_census_summary_counts(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["census", "--n-max", "30"])
    assert code == 0
    assert out.splitlines() == ["6,6\t1", "12\t7"]


def test_census_is_deterministic(capsys, monkeypatch):
    argv = ["census", "--n-max", "30", "--format", "json"]
    _, first, _ = run(capsys, monkeypatch, argv)
    _, second, _ = run(capsys, monkeypatch, argv)
    assert first == second


@pytest.mark.parametrize(
    "parts,expected",
    [
        ("9,2,1", "impossible (a)"),
        ("12", "finite (b): 41 fullerenes"),
        ("6,5,1", "infinite, bounded separation (c)"),
        ("2,2,2,2,2,2", "infinite, unbounded separation (d)"),
    ],
)
def test_classify(capsys, monkeypatch, parts, expected):
    code, out, _ = run(capsys, monkeypatch, ["classify", parts])
    assert code == 0
    assert out.strip() == expected


def test_bounds_cluster(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["bounds", "--cluster", "7"])
    assert code == 0
    assert out.strip() == "max hexagons 52, max vertices 124"


def test_bounds_patch(capsys, monkeypatch):
    code, out, _ = run(
        capsys, monkeypatch, ["bounds", "--pentagons", "2", "--hexagons", "3"]
    )
    assert code == 0
    assert out.strip() == f"min boundary length {min_boundary_length(2, 3)}"


def test_inflate_from_bundled_seed(binary_stdout):
    code, out, err = binary_stdout(
        ["inflate", "--pip", "2,2,2,2,2,2", "--rounds", "1"]
    )
    assert code == 0
    (big,) = read_fullerenes(io.BytesIO(out))
    assert big.n == 1346
    assert pip(big) == (2, 2, 2, 2, 2, 2)
    assert b"separation 12" in err


def test_inflate_from_stream(binary_stdout):
    seed = graphs_as_bytes([generate_isomers(40)[7]])
    code, out, _ = binary_stdout(
        ["inflate", "--in", "-", "--rounds", "0"], stdin=seed
    )
    assert code == 0
    (same,) = read_fullerenes(io.BytesIO(out))
    assert same.n == 40


def test_spiral_id_and_point_group(capsys, monkeypatch):
    data = graphs_as_bytes(generate_isomers(20))
    code, out, _ = run(capsys, monkeypatch, ["spiral-id"], stdin=data)
    assert (code, out.strip()) == (0, "20:1")
    code, out, _ = run(capsys, monkeypatch, ["point-group"], stdin=data)
    assert (code, out.strip()) == (0, "Ih")


# --- exit codes ------------------------------------------------------------


def test_usage_errors_exit_1(capsys, monkeypatch):
    for argv in (
        ["bogus"],
        ["generate"],                       # missing --n
        ["bounds"],                         # missing a mode
        ["inflate", "--rounds", "1"],       # no source
        ["census", "--n-max", "x"],         # non-integer
    ):
        code, _, err = run(capsys, monkeypatch, argv)
        assert code == 1, argv
        assert "usage" in err.lower()


def test_data_errors_exit_2(capsys, monkeypatch):
    for argv, stdin in (
        (["classify", "13,1"], b""),
        (["spiral-id"], b"not planar code"),
        (["inflate", "--pip", "6,6"], b""),          # no such seed
        (["inflate", "--pip", "9,2,1"], b""),        # impossible partition
        (["analyze", "--in", "/no/such/file"], b""),
        (["bounds", "--cluster", "6"], b""),         # outside the 7..12 table
    ):
        code, _, err = run(capsys, monkeypatch, argv, stdin=stdin)
        assert code == 2, argv
        assert "error" in err.lower()
