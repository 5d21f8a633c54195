import json

import pytest
from hypothesis import given

from conftest import complexes
from momangle import formats
from momangle.cli import main
from momangle.complement import Complement, missing_faces
from momangle.complex import Complex, link, star
from momangle.corpus import EXAMPLE1_COMPLEMENT, example1, moore_mod3, polygon
from momangle.hochster import hochster
from momangle.homology import reduced_cohomology


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


# -- file format


@given(complexes())
def test_complex_round_trip(K):
    if K.is_void:
        return
    text = formats.write_complex(K)
    assert formats.parse(text).to_complex() == K
    assert formats.dumps(formats.parse(text)) == text


def test_void_and_empty_simplex_round_trip():
    void = Complex.void([1, 2])
    text = formats.write_complement(missing_faces(void), kind="missing-faces")
    assert "{}" in text.splitlines()
    assert formats.parse(text).to_complex().is_void
    empty = Complex.empty_simplex([1, 2])
    assert formats.parse(formats.write_complex(empty)).to_complex() == empty


def test_complement_round_trip_keeps_duplicates():
    P = Complement(EXAMPLE1_COMPLEMENT, range(1, 6))
    back = formats.parse(formats.write_complement(P)).to_complement()
    assert back == P and len(back) == 6


def test_output_is_canonical():
    a = formats.parse("format momangle/1\nkind facets\nvertices 3 1 2\n2 1\n3 2\n")
    b = formats.parse("format momangle/1\nkind facets\n# comment\n2 3\n1 2\nvertices 1 2 3\n")
    assert formats.dumps(a) == formats.dumps(b)


@pytest.mark.parametrize("text,line", [
    ("format momangle/1\nkind facets\n1 x\n", 3),
    ("format momangle/1\nkind facets\n1 0\n", 3),
    ("format momangle/1\nkind shapes\n", 2),
    ("format momangle/2\n", 1),
    ("format momangle/1\nkind facets\n1 2\nwhat is this\n", 4),
    ("format momangle/1\nkind facets\n1 1 2\n", 3),
])
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(formats.ParseError) as info:
        formats.parse(text, "f.txt")
    assert info.value.line == line
    assert f"f.txt:{line}:" in str(info.value)


def test_parse_missing_headers():
    with pytest.raises(formats.ParseError, match="format"):
        formats.parse("kind facets\n1 2\n")
    with pytest.raises(formats.ParseError, match="kind"):
        formats.parse("format momangle/1\n1 2\n")
    with pytest.raises(formats.ParseError, match="vertices"):
        formats.parse("format momangle/1\nkind facets\nvertices 1 2\n1 3\n")


def test_parse_subsets():
    assert formats.parse_subsets("# x\n1 2\n3,4\n{}\n") == [(1, 2), (3, 4), ()]


def test_report_is_sorted_json():
    text = formats.dump_report({"b": 1, "a": [2]})
    data = json.loads(text)
    assert data["format"] == "momangle-report/1"
    assert text.index('"a"') < text.index('"b"')


# -- command line


@pytest.fixture
def ex1_files(tmp_path):
    K = example1()
    k = tmp_path / "k.txt"
    k.write_text(formats.write_complex(K))
    p = tmp_path / "p.txt"
    p.write_text(formats.write_complement(Complement(EXAMPLE1_COMPLEMENT, range(1, 6))))
    m = tmp_path / "m.txt"
    m.write_text(formats.write_complement(missing_faces(K), kind="missing-faces"))
    return k, p, m


def test_cli_equivalent(capsys, ex1_files):
    _, p, m = ex1_files
    code, out, _ = run(capsys, "equivalent", str(p), str(m))
    assert code == 0 and out.strip() == "equivalent"
    other = m.parent / "o.txt"
    other.write_text("format momangle/1\nkind complement\nvertices 1 2 3 4 5\n1\n")
    code, out, _ = run(capsys, "equivalent", str(p), str(other))
    assert code == 1 and out.strip() == "not equivalent"


def test_cli_face_queries(capsys, ex1_files):
    k, _, _ = ex1_files
    code, out, _ = run(capsys, "fvector", str(k))
    assert code == 0 and out.strip() == "5 8 4"
    code, out, _ = run(capsys, "fvector", str(k), "--json")
    assert json.loads(out)["f_vector"] == [5, 8, 4]
    code, out, _ = run(capsys, "faces", str(k), "--dim", "2")
    assert out.split() == ["(1,2,4)", "(1,2,5)", "(1,4,5)", "(2,4,5)"]
    code, out, _ = run(capsys, "link", str(k), "--at", "1,2")
    assert code == 0 and formats.parse(out).to_complex() == link(example1(), {1, 2})
    code, out, _ = run(capsys, "star", str(k), "--at", "1,2")
    assert formats.parse(out).to_complex() == star(example1(), {1, 2})
    code, _, err = run(capsys, "link", str(k), "--at", "3,4")
    assert code == 2 and "not-a-face" in err


def test_cli_missing_faces_matches_library(capsys):
    code, out, _ = run(capsys, "missing-faces", "--builtin", "example1")
    assert code == 0
    assert formats.parse(out).to_complement().as_set() == missing_faces(example1()).as_set()


def test_cli_complement_commands(capsys, tmp_path):
    code, out, _ = run(capsys, "minus", "--builtin", "example1", "--at", "1,2")
    assert code == 0
    assert formats.parse(out).to_complement().as_set() == {frozenset(s) for s in [(4, 5), (3,), (3, 4), (3, 5)]}
    code, out, _ = run(capsys, "restrict", "--builtin", "example1", "--to", "1,2,3")
    assert formats.parse(out).to_complement().as_set() == {frozenset((1, 2, 3))}
    a = tmp_path / "a.txt"
    a.write_text("format momangle/1\nkind complement\nvertices 1 2\n1\n")
    b = tmp_path / "b.txt"
    b.write_text("format momangle/1\nkind complement\nvertices 1 2\n2\n")
    code, out, _ = run(capsys, "cjoin", str(a), str(b))
    assert formats.parse(out).to_complement().as_set() == {frozenset((1, 2))}
    code, out, _ = run(capsys, "reduce", "--builtin", "example1")
    assert code == 0 and len(formats.parse(out).simplices) == 4


def test_cli_stellar(capsys):
    code, out, _ = run(capsys, "stellar", "--builtin", "example1", "--at", "1,2", "--vertex", "6")
    assert code == 0
    K = formats.parse(out).to_complex()
    assert len(K.facets) == 8 and 6 in K.vertices


def test_cli_construct(capsys, tmp_path):
    outfile = tmp_path / "l20.txt"
    code, out, _ = run(capsys, "construct", "--sub", "moore-mod3", "--ambient", "l0",
                       "--order", "paper-moore", "--output", str(outfile))
    assert code == 0
    assert "steps 20" in out and "vertices 28" in out
    L = formats.read(outfile).to_complex()
    code, out, _ = run(capsys, "verify", "full", "--sub", "moore-mod3", "--ambient", str(outfile))
    assert code == 0 and out.startswith("full")
    assert len(L.vertices) == 28


def test_cli_construct_order_file(capsys, tmp_path):
    order = tmp_path / "order.txt"
    order.write_text("3 4\n1 2\n")
    code, _, err = run(capsys, "construct", "--sub", "example1", "--ambient", "example1", "--order", str(order))
    assert code == 2 and "permutation" in err


def test_cli_homology_json(capsys):
    code, out, _ = run(capsys, "cohomology", "--builtin", "moore-mod3", "--json")
    assert code == 0
    assert json.loads(out)["reduced_cohomology"] == reduced_cohomology(moore_mod3()).to_dict()
    code, out, _ = run(capsys, "homology", "--builtin", "moore-mod3")
    assert out.strip() == "H~_1 = Z/3"


def test_cli_hochster_byte_identical(capsys):
    args = ("hochster", "--builtin", "polygon:6", "--flavor", "real", "--json")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    _, parallel, _ = run(capsys, *args, "--jobs", "2")
    assert first == second == parallel
    data = json.loads(first)
    assert data["totals"] == hochster(polygon(6), "real").totals.to_dict()


def test_cli_hochster_scopes(capsys, tmp_path):
    subsets = tmp_path / "s.txt"
    subsets.write_text("1 2 3 4 5 6 7 8\n")
    code, out, _ = run(capsys, "hochster", "--builtin", "moore-mod3", "--scope", f"subsets:{subsets}", "--flavor", "complex")
    assert code == 0 and "H^11 = Z/3" in out
    code, out, _ = run(capsys, "hochster", "--builtin", "polygon:5", "--scope", "degrees:2..2")
    assert code == 0 and "H^2 = Z" in out
    assert run(capsys, "hochster", "--builtin", "polygon:5", "--scope", "degrees:x")[0] == 2


def test_cli_cap_error(capsys, monkeypatch):
    monkeypatch.setenv("MOMANGLE_HOCHSTER_CAP", "5")
    code, _, err = run(capsys, "hochster", "--builtin", "polygon:6")
    assert code == 2 and "cap" in err
    monkeypatch.setenv("MOMANGLE_ORACLE_CAP", "5")
    code, _, err = run(capsys, "oracle-rz", "--builtin", "polygon:6")
    assert code == 2 and "cap" in err


def test_cli_verify_and_iso(capsys):
    code, out, _ = run(capsys, "verify", "sphere", "--builtin", "l0")
    assert code == 0 and "verdict: pass" in out
    assert run(capsys, "verify", "sphere", "--builtin", "moore-mod3")[0] == 1
    code, out, _ = run(capsys, "iso", "l2", "l2-prime")
    assert code == 1 and out.strip() == "not isomorphic: 7 vs 8 missing faces"
    code, out, _ = run(capsys, "iso", "polygon:5", "polygon:5")
    assert code == 0 and out.startswith("isomorphic")


def test_cli_usage_errors(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("format momangle/1\nkind facets\n1 q\n")
    code, _, err = run(capsys, "faces", str(bad))
    assert code == 2 and ":3:" in err
    assert run(capsys, "faces", "no-such-thing")[0] == 2
    assert run(capsys, "faces")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2


def test_cli_show_round_trip(capsys):
    code, out, _ = run(capsys, "show", "--builtin", "moore-mod3")
    assert code == 0
    assert formats.parse(out).to_complex() == moore_mod3()
