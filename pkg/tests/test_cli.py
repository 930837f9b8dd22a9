import pytest

from alphahull import pointio
from alphahull.bench import CSV_HEADER, read_csv
from alphahull.cli import main
from conftest import DENT, SQUARE5


@pytest.fixture
def files(tmp_path):
    sq = tmp_path / "square5.txt"
    sq.write_text(pointio.format_points(SQUARE5))
    dent = tmp_path / "dent.txt"
    dent.write_text(pointio.format_points(DENT))
    return tmp_path, sq, dent


def run(argv, capsys):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_ahull_zero_matches_chull(files, capsys):
    _, sq, _ = files
    c1, hull, _ = run(["chull", sq], capsys)
    c2, ahull, err = run(["ahull", sq, "--alpha", "0"], capsys)
    assert c1 == c2 == 0 and hull == ahull
    assert "area 1.0" in err


def test_ahull_methods_and_out(files, capsys):
    d, sq, _ = files
    out = d / "h.txt"
    assert run(["ahull", sq, "--alpha", "90", "--exact", "--out", out], capsys)[0] == 0
    poly = pointio.read_points(out)
    assert len(poly) == 5
    code, _, err = run(["ahull", sq, "--alpha", "90", "--heuristic"], capsys)
    assert code == 0 and "HEURISTIC" in err


def test_verify(files, capsys):
    _, sq, dent = files
    code, out, _ = run(["verify", sq, dent, "--alpha", "90", "--area", "0.75"], capsys)
    assert code == 0 and out.strip() == "accepted"
    code, _, err = run(["verify", sq, dent, "--alpha", "45", "--area", "0.75"], capsys)
    assert code == 1 and "CERTIFICATE_REJECTED" in err


def test_ashape(files, capsys):
    d, sq, dent = files
    code, out, _ = run(["ashape", sq, "--radius", "inf"], capsys)
    assert code == 0 and "# area 1.0" in out
    code, out, _ = run(["ashape", sq, "--auto", "--target", dent], capsys)
    assert code == 0 and "connected true" in out
    with pytest.raises(SystemExit) as info:
        main(["ashape", str(sq), "--auto"])
    assert info.value.code == 2


def test_gen(files, capsys):
    d, _, _ = files
    code, out, _ = run(["gen", "--n", "6", "--seed", "3", "--count", "2"], capsys)
    assert code == 0 and len(pointio.parse_blocks(out)) == 2
    assert run(["gen", "--n", "5-8", "--seed", "3", "--count", "3", "--out-dir", d / "g"], capsys)[0] == 0
    assert len(list((d / "g").glob("polygon_*.txt"))) == 3


def test_bench(files, capsys):
    d, _, _ = files
    out = d / "r.csv"
    code, _, _ = run(["bench", "--count", "5", "--n", "12", "--seed", "1", "--out", out, "--plot"], capsys)
    assert code == 0
    text = out.read_text()
    assert text.splitlines()[0] == CSV_HEADER
    rows, summary = read_csv(text)
    assert len(rows) == 5
    assert sum(int(summary[k][0]) for k in ("count_better", "count_equal", "count_worse")) == 5
    assert (d / "r.png").read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_render(files, capsys):
    d, sq, dent = files
    out = d / "f.svg"
    code = run(["render", "--out", out, f"points:{sq}", f"polygon:{dent}:#ff0000"], capsys)[0]
    assert code == 0
    svg = out.read_text()
    assert svg.count("<circle") == 5 and 'stroke="#ff0000"' in svg


def test_errors(files, capsys):
    d, sq, _ = files
    line = d / "line.txt"
    line.write_text("0 0\n1 1\n2 2\n")
    code, _, err = run(["chull", line], capsys)
    assert code == 1 and "DEGENERATE_INPUT" in err
    bad = d / "bad.txt"
    bad.write_text("0 0\n1 x\n")
    code, _, err = run(["chull", bad], capsys)
    assert code == 1 and "INVALID_INPUT" in err and "bad.txt:2" in err
    big = d / "big.txt"
    big.write_text("".join(f"{i} {i * i % 7}\n" for i in range(12)))
    code, _, err = run(["ahull", big, "--alpha", "30", "--exact"], capsys)
    assert code == 1 and "TOO_LARGE" in err
    code, _, err = run(["chull", d / "missing.txt"], capsys)
    assert code == 1


@pytest.mark.parametrize("argv", [
    [],
    ["ahull", "x.txt"],
    ["ahull", "x.txt", "--alpha", "200"],
    ["ahull", "x.txt", "--alpha", "30", "--exact", "--heuristic"],
    ["verify", "a", "b", "--alpha", "10", "--area", "-1"],
    ["gen", "--n", "2", "--seed", "1"],
    ["bench", "--count", "1", "--n", "5", "--seed", "1", "--out", "r.csv", "--grid", "10,20"],
    ["render", "--out", "f.svg", "circle:x.txt"],
])
def test_usage_errors_exit_2(argv, capsys):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == 2
    capsys.readouterr()
