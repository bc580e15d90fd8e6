import io
import json
import subprocess
import sys

from hwtrans.cli import EXIT_CONSTRAINT, EXIT_JSON, EXIT_OK, EXIT_USAGE, EXIT_VERIFY, run
from hwtrans.combinatorics import kostka_number
from hwtrans.hwv import build_u, enumerate_labels, label_to_json
from hwtrans.polyring import Poly, poly_from_json, poly_to_json


def call(*argv):
    buf = io.StringIO()
    code = run(list(argv), buf)
    text = buf.getvalue()
    return code, (json.loads(text) if text else None), text


def test_kronecker():
    code, doc, text = call("oracle-kronecker", "--lambda", "2,1", "--mu", "2,1", "--eta", "2,1")
    assert code == EXIT_OK
    assert doc == {"value": 1}
    assert text == '{"value": 1}\n'


def test_kostka():
    code, doc, _ = call("oracle-kostka", "--lambda", "2,1", "--mu", "1,1,1")
    assert code == EXIT_OK
    assert doc["coeffs"] == [[1, 1], [2, 1]]
    assert doc["value"] == kostka_number((2, 1), (1, 1, 1))


def test_tableaux_and_pictures():
    code, doc, _ = call("tableaux", "--shape", "2,1", "--max-entry", "2")
    assert code == EXIT_OK and doc["count"] == 2
    code, doc, _ = call("tableaux", "--shape", "3,2/1", "--flavor", "standard")
    assert code == EXIT_OK and doc["count"] == 5
    code, doc, _ = call("pictures", "--F", "2,1", "--E", "3,2/2")
    assert code == EXIT_OK and doc["count"] == 1
    code, doc, _ = call("pictures", "--F", "2", "--E", "1,1")
    assert code == EXIT_OK and doc["count"] == 0


def test_specht_hom_and_coinvariants():
    code, doc, _ = call("specht-hom", "--E", "2,2/1", "--F", "2,1", "--elements")
    assert code == EXIT_OK and doc["ok"] and doc["rank"] == doc["pictures"] == len(doc["basis"])
    code, doc, _ = call("coinvariants", "--E", "2,1", "--F", "2,1", "--nu", "1,1,1")
    assert code == EXIT_OK and doc["ok"] and doc["count"] == 4


def test_hwv_build_example():
    code, doc, _ = call("hwv-build", "--lambda", "2,1", "--mu", "1,1,1", "--m", "2", "--r", "3", "--s", "2")
    assert code == EXIT_OK
    labels = enumerate_labels((2, 1), (1, 1, 1), 2, 3, 2)
    assert doc["count"] == len(labels) == 2
    for item, L in zip(doc["labels"], labels):
        assert item["label"] == label_to_json(L)
        assert poly_from_json(item["poly"]) == build_u(L, 3, 2, 2)


def test_hwv_verify_labels():
    code, doc, _ = call("hwv-verify", "--lambda", "2,1", "--mu", "2,1", "--m", "2")
    assert code == EXIT_OK and doc["ok"]
    # s_{21} * s_{21} = s_3 + s_{21} + s_{111}, so the counts are Kostka sums
    assert [row["labels"] for row in doc["multidegrees"]] == [1, 2, 2, 1]
    assert all(row["brute_force"] == row["multiplicity"] == row["rank"] for row in doc["multidegrees"])


def test_hwv_verify_poly(tmp_path):
    dims = (1, 2, 2)
    good = Poly.var(1, 2, 1, dims)
    path = tmp_path / "p.json"
    path.write_text(json.dumps(poly_to_json(good)))
    code, doc, _ = call("hwv-verify", "--poly", str(path))
    assert code == EXIT_OK and doc["invariant"] and doc["weight"] == [[0, -1], [1, 0]]
    path.write_text(json.dumps(poly_to_json(Poly.var(1, 1, 1, dims))))
    code, doc, _ = call("hwv-verify", "--poly", str(path))
    assert code == EXIT_VERIFY and not doc["ok"]
    path.write_text(json.dumps(poly_to_json(Poly.var(1, 1, 1, dims) + Poly.var(1, 2, 1, dims))))
    code, doc, _ = call("hwv-verify", "--poly", str(path))
    assert code == EXIT_VERIFY and not doc["homogeneous"]


def test_pullback():
    code, doc, _ = call("pullback", "--lambda", "1", "--mu", "1", "--m", "1", "--r", "1", "--s", "1", "--n", "3")
    assert code == EXIT_OK
    assert poly_from_json(doc["pullbacks"][0]["poly"]) == Poly.var(1, 3, 1, (1, 3, 3))
    code, doc, _ = call("pullback", "--lambda", "1", "--mu", "1", "--m", "2", "--r", "1", "--s", "1",
                        "--n", "3", "--tuple-length", "1", "--max-word-len", "2")
    assert code == EXIT_OK and doc["count"] == 2


def test_oracle_graded():
    code, doc, _ = call("oracle-graded", "--chi=3,3,0,-2,-2,-2")
    assert code == EXIT_OK
    assert (doc["lowest_degree"], doc["lowest_dimension"]) == (9, 2)
    assert doc["degree_map"] == {"statistic": "charge", "a": 1, "b": 0}
    code, doc, _ = call("oracle-graded", "--chi=1,0,-1", "--calibrate")
    assert code == EXIT_OK and doc["calibrated"] and doc["coeffs"] == [[1, 1], [2, 1]]


def test_reproduce():
    code, doc, _ = call("reproduce", "remark3-a")
    assert code == EXIT_OK and doc["ok"]
    assert (doc["lowest_degree"], doc["dimension"]) == (9, 2)
    code, doc, _ = call("reproduce", "remark3")
    assert code == EXIT_OK and doc["ok"]
    assert [c["lowest_degree"] for c in doc["checks"][1]["cases"]] == [18, 17]


def test_exit_codes(tmp_path):
    assert call("no-such-command")[0] == EXIT_USAGE
    assert call()[0] == EXIT_USAGE
    assert call("oracle-kronecker", "--lambda", "2,1", "--mu", "2", "--eta", "2,1")[0] == EXIT_CONSTRAINT
    assert call("oracle-graded", "--chi=1,0")[0] == EXIT_CONSTRAINT
    assert call("hwv-build", "--lambda", "1,1", "--mu", "1,1", "--m", "1", "--r", "1", "--s", "2")[0] == EXIT_CONSTRAINT
    assert call("tableaux", "--shape", "1,2")[0] == EXIT_CONSTRAINT
    assert call("pictures", "--F", "{bad json", "--E", "1")[0] == EXIT_JSON
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert call("hwv-verify", "--poly", str(bad))[0] == EXIT_JSON
    bad.write_text('{"dims": 3}')
    assert call("hwv-verify", "--poly", str(bad))[0] == EXIT_JSON


def test_json_shape_input():
    code, doc, _ = call("tableaux", "--shape", '{"outer": [2, 1], "inner": []}', "--flavor", "standard")
    assert code == EXIT_OK and doc["count"] == 2


def test_output_is_byte_identical_across_processes():
    argv = [sys.executable, "-m", "hwtrans", "--seed", "3", "hwv-verify", "--lambda", "1,1", "--mu", "2",
            "--m", "2", "--no-brute-force"]
    a = subprocess.run(argv, capture_output=True, check=False)
    b = subprocess.run(argv, capture_output=True, check=False)
    assert a.returncode == b.returncode == EXIT_OK
    assert a.stdout == b.stdout and a.stdout
    json.loads(a.stdout)
