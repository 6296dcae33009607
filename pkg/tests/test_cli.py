import io
import json

import pytest

from latcovol.cli import run
from latcovol.complex import complex_from_json
from latcovol.lattice import QuotientData
from latcovol.law import LawData, Verdict


def call(*argv, stdin=None):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdin=io.StringIO(stdin) if stdin is not None else None,
               stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def petersen_file(tmp_path):
    code, out, _ = call("link", "make", "--family", "petersen")
    assert code == 0
    path = tmp_path / "petersen.json"
    path.write_text(out)
    return str(path)


def test_law_check_petersen(petersen_file):
    code, out, _ = call("law", "check", "--law", petersen_file, "--covolume", "1/360")
    assert code == 1
    v = Verdict.from_json(json.loads(out))
    assert v.witness_prime == 3
    code, out, _ = call("law", "check", "--law", petersen_file, "--covolume", "1/120")
    assert code == 0


def test_law_derive_then_check(petersen_file, tmp_path):
    code, out, _ = call("law", "derive", "--links", petersen_file)
    assert code == 0
    law = LawData.from_json(json.loads(out))
    assert law.as_dict() == {2: (3, 2), 3: (1, 0), 5: (1, 0)}
    f = tmp_path / "law.json"
    f.write_text(out)
    assert call("law", "check", "--law", str(f), "--covolume", "1/25", "--face")[0] == 1


def test_canonical_piped_into_covol():
    code, out, _ = call("covol", "canonical", "--family", "bourdon", "--m", "2", "--n", "2", "--r", "5")
    assert code == 0
    QuotientData.from_json(json.loads(out))
    code, out2, _ = call("covol", "--quotient", "-", "--dim", "0", stdin=out)
    assert code == 0 and json.loads(out2)["covolume"] == "5/4"


def test_building_cx(tmp_path):
    code, out, _ = call("covol", "canonical", "--family", "building", "--q", "2", "--r", "6")
    f = tmp_path / "b.json"
    f.write_text(out)
    code, out, _ = call("covol", "cx", "--quotient", str(f))
    assert json.loads(out) == {"vertex_covolume": "1/28", "face_covolume": "1/8", "c": "2/7"}


def test_link_make_pg2():
    code, out, _ = call("link", "make", "--family", "pg2", "--q", "2")
    doc = json.loads(out)
    assert code == 0 and len(doc["vertices"]) == 14
    assert len(complex_from_json(doc).edges) == 21


def test_link_register():
    code, out, _ = call("link", "register", "--name", "120-cell", "--aut-order", "14400",
                        "--fixator-order", "1")
    assert code == 0 and json.loads(out)["aut_order"] == "2^6·3^2·5^2"
    code, out, err = call("link", "register", "--name", "X", "--aut-order", "6", "--fixator-order", "4")
    assert code == 2 and "error" in json.loads(out) and err


def test_aut_command(tmp_path, petersen_file):
    code, out, _ = call("aut", "--graph", petersen_file)
    doc = json.loads(out)
    assert doc["order"] == "2^3·3^1·5^1" and len(doc["orbits"]) == 1
    code, out, _ = call("aut", "--graph", petersen_file, "--fix", "0,1")
    assert code == 0
    _, pg, _ = call("link", "make", "--family", "pg2", "--q", "2")
    f = tmp_path / "h.json"
    f.write_text(pg)
    assert json.loads(call("aut", "--graph", str(f), "--type-preserving")[1])["order"] == "2^3·3^1·7^1"
    assert call("aut", "--graph", petersen_file, "--type-preserving")[0] == 2


def test_ball_commands(tmp_path):
    code, out, _ = call("ball", "tower", "--m", "2", "--n", "2", "--r", "5", "--radius", "2")
    assert code == 0 and [s["order"] for s in json.loads(out)] == ["1", "2^3", "2^3"]
    code, out, _ = call("ball", "grow", "--m", "2", "--n", "2", "--r", "5", "--radius", "1")
    c = complex_from_json(json.loads(out))
    assert len(c.ids(2)) == 4
    target = tmp_path / "ball.json"
    code, out, _ = call("ball", "grow", "--m", "2", "--n", "3", "--r", "6", "--radius", "1",
                        "--out", str(target))
    assert json.loads(out)["faces"] == 6
    assert len(complex_from_json(json.loads(target.read_text())).ids(2)) == 6
    assert call("--cap", "10", "ball", "grow", "--m", "2", "--n", "2", "--r", "5", "--radius", "1")[0] == 2


def test_input_errors():
    assert call("bogus")[0] == 2
    assert call("law", "check", "--law", "/nonexistent.json", "--covolume", "1")[0] == 2
    assert call("covol", "--quotient", "-", stdin="not json")[0] == 2
    assert call("covol", "canonical", "--family", "bourdon", "--m", "3", "--n", "2", "--r", "5")[0] == 2


def test_outputs_are_deterministic(petersen_file):
    argv = ("aut", "--graph", petersen_file)
    assert call(*argv)[1] == call(*argv)[1]
