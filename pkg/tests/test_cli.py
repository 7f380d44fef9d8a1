from __future__ import annotations

import io
import json

import pytest

from hpd.cli import (EXIT_CAP, EXIT_MISMATCH, EXIT_OK, EXIT_PARSE, EXIT_UNSUPPORTED, main,
                     parse, parse_hypergraph_text, parse_ideal_text, parse_json, to_json, to_text)
from hpd.core import MonomialIdeal
from hpd.errors import ParseError
from hpd.fixtures import nine_face, six_cycle

NINE = "6\n6,0\n0,5\n5\n0,1\n1,2\n2,3\n3,4\n4\n"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def nine_file(tmp_path):
    p = tmp_path / "nine.txt"
    p.write_text("# nine faces, numbered from 0\n" + NINE)
    return p


def test_parse_zero_indexed(nine_file):
    assert parse(nine_file, zero_indexed=True) == nine_face()


def test_parse_ideal_text():
    I = parse_ideal_text("a b\nb c\nc d\n")
    assert isinstance(I, MonomialIdeal)
    assert [sorted(I.var_names[x] for x in g) for g in I.generators] == [["a", "b"], ["b", "c"], ["c", "d"]]


def test_format_detection(tmp_path):
    p = tmp_path / "ideal.txt"
    p.write_text("x y\ny z\n")
    assert isinstance(parse(p), MonomialIdeal)


def test_json_matches_text():
    H = six_cycle()
    assert parse_json(json.dumps(to_json(H))) == H
    assert parse_hypergraph_text(to_text(H)) == H
    I = parse_json('{"vars": ["a", "b", "c"], "gens": [["a", "b"], ["b", "c"]]}')
    assert len(I.generators) == 2


@pytest.mark.parametrize("text,line,col", [
    ("1,2\n2,x\n", 2, 3),
    ("1,2\n,2\n", 2, 1),
    ("1\n0,1\n", 2, 1),
    ("mu 2\n1,2\n2,3\n", 3, 3),
    ("1\n3\n", 2, 1),
])
def test_parse_errors_carry_location(text, line, col):
    with pytest.raises(ParseError) as err:
        parse_hypergraph_text(text)
    assert (err.value.line, err.value.column) == (line, col)


def test_bad_json_location():
    with pytest.raises(ParseError) as err:
        parse_json('{"faces": [[1, 2],\n [2,]]}')
    assert err.value.line == 2


def test_empty_face_in_json():
    with pytest.raises(ParseError):
        parse_json('{"faces": [[1], []]}')


def test_pd_nine_face(capsys, nine_file):
    code, out, _ = run(capsys, "pd", str(nine_file), "--zero-indexed")
    assert code == EXIT_OK and out.strip() == "pd = 5"


def test_pd_parse_error_exit(capsys, nine_file):
    code, _, err = run(capsys, "pd", str(nine_file))
    assert code == EXIT_PARSE and "line 3" in err


def test_pd_trace_figure4(capsys):
    code, out, _ = run(capsys, "pd", "fixture:figure4", "--trace")
    lines = out.strip().splitlines()
    assert code == EXIT_OK and lines[-1] == "pd = 28"
    steps = [json.loads(ln) for ln in lines[:-1]]
    assert {"rule", "vertices", "faces", "delta"} <= set(steps[0])
    assert sum(s["delta"] for s in steps) == 28


def test_trace_replays(capsys):
    from hpd.fixtures import figure4
    from hpd.reduce import replay_trace
    code, out, _ = run(capsys, "pd", "fixture:figure4", "--method", "reduce", "--trace", "--json")
    rec = json.loads(out)
    assert replay_trace(figure4(), rec["trace"]) == rec["pd"] == 28


def test_pd_stars_figure6(capsys):
    code, out, _ = run(capsys, "pd", "fixture:figure6", "--method", "stars")
    assert code == EXIT_OK and out.strip() == "pd = 31"


def test_pd_ideal_file(capsys, tmp_path):
    p = tmp_path / "i.txt"
    p.write_text("a b\nb c\nc d\n")
    code, out, _ = run(capsys, "pd", str(p))
    assert out.strip() == "pd = 2"


def test_pd_unsupported_and_fallback(capsys, tmp_path):
    p = tmp_path / "h.txt"
    p.write_text("1,2,3\n1,4\n2,4\n3,4\n")
    code, _, err = run(capsys, "pd", str(p))
    assert code == EXIT_UNSUPPORTED and "fallback" in err
    code, out, _ = run(capsys, "pd", str(p), "--fallback", "oracle")
    assert code == EXIT_OK and out.startswith("pd = ")


def test_oracle_cap_exit(capsys):
    code, _, err = run(capsys, "pd", "fixture:figure4", "--method", "oracle")
    assert code == EXIT_CAP


def test_oracle_command(capsys):
    code, out, _ = run(capsys, "oracle", "fixture:six-cycle", "--char", "2,3")
    assert code == EXIT_OK
    assert out.strip().splitlines()[-1] == "pd = 4"


def test_check_sharp(capsys):
    code, out, _ = run(capsys, "check", "fixture:six-cycle", "--condition", "sharp")
    assert out.strip() == "true, V1={1,2,3} V2={4,5,6}"
    code, out, _ = run(capsys, "check", "fixture:seven-cycle", "--condition", "sharp")
    assert out.strip() == "false"


def test_check_baby_ferrers(capsys):
    code, out, _ = run(capsys, "check", "fixture:figureFL", "--condition", "babyF")
    assert out.startswith("true, pd = |V|-2 = 12")


def test_check_star_on_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("1\n1,2\n2,3\n3\n"))
    code, out, _ = run(capsys, "check", "-", "--condition", "star")
    assert out.startswith("true, dominating-vertex")


def test_fixtures_command(capsys):
    code, out, _ = run(capsys, "fixtures", "--list")
    assert "nine-face" in out and "figure6" in out
    code, out, _ = run(capsys, "fixtures", "--dump", "six-cycle")
    assert out.splitlines()[0] == "mu 6"
    code, _, _ = run(capsys, "fixtures", "--dump", "nope")
    assert code == EXIT_PARSE


@pytest.mark.parametrize("population,n", [("unicyclic", 5), ("strings", 8), ("cycles", 7),
                                          ("bipartite", 6), ("all", 3)])
def test_verify(capsys, population, n):
    code, out, _ = run(capsys, "verify", "--max-vertices", str(n), "--population", population)
    assert code == EXIT_OK, out
    assert "=0" in out.splitlines()[0].split()[-1]


def test_verify_reports_mismatches(capsys, monkeypatch):
    import hpd.reduce
    monkeypatch.setattr(hpd.reduce, "pd_string", lambda S, anchor=None: -1)
    code, out, _ = run(capsys, "verify", "--max-vertices", "3", "--population", "strings")
    assert code == EXIT_MISMATCH
    assert '"failed": ["pd_string"]' in out


def test_verify_size_limit(capsys):
    code, out, _ = run(capsys, "verify", "--max-vertices", "5", "--population", "all")
    assert code == EXIT_UNSUPPORTED
