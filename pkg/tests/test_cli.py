import io
import json

import pytest

from bialg.catalog import catalogs_equal, entries, import_json
from bialg.cli import main

SL2 = {"basis_dim": 3, "brackets": [{"i": 1, "j": 2, "k": 3, "c": "-1"},
                                    {"i": 1, "j": 3, "k": 2, "c": "1"},
                                    {"i": 2, "j": 3, "k": 1, "c": "1"}]}


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


@pytest.fixture
def write(tmp_path):
    def _write(name, data):
        p = tmp_path / name
        p.write_text(data if isinstance(data, str) else json.dumps(data))
        return str(p)
    return _write


def test_classify_sl2(write):
    code, text = run("classify", write("sl2.json", SL2))
    assert code == 0
    assert text.splitlines()[0] == "VIII"
    assert "unimodular: true" in text


def test_classify_json_format(write):
    data = {"basis_dim": 3, "brackets": [{"i": 1, "j": 2, "k": 2, "c": "1"},
                                         {"i": 1, "j": 3, "k": 3, "c": "2"}]}
    code, text = run("classify", write("vi.json", data), "--format", "json")
    assert code == 0
    info = json.loads(text)
    assert info["type"] == "VI_a"
    assert info["a_squared"] == "9"
    assert info["unimodular"] is False


def test_classify_non_lie(write):
    data = {"basis_dim": 3, "brackets": [{"i": 1, "j": 2, "k": 1, "c": "1"},
                                         {"i": 2, "j": 3, "k": 2, "c": "1"}]}
    assert run("classify", write("bad.json", data))[0] == 1


def test_classify_missing_file(tmp_path):
    assert run("classify", str(tmp_path / "nope.json"))[0] == 2


def test_classify_schema_error(write):
    assert run("classify", write("s.json", {"basis_dim": 3, "brackets": [{"i": 1, "j": 2, "c": "1"}]}))[0] == 2
    assert run("classify", write("t.json", "{oops"))[0] == 2


def test_solve_duals_ix():
    code, text = run("solve-duals", "IX")
    assert code == 0
    assert "nullspace_dim: 3" in text
    assert "ideal: empty" in text
    assert "appendix_match: true" in text


def test_solve_duals_vii0_ideal():
    code, text = run("solve-duals", "VII_0")
    assert code == 0
    assert "nullspace_dim: 4" in text
    assert "t1*t3" in text


def test_solve_duals_numeric_parameter():
    code, text = run("solve-duals", "VI_a", "--param", "a=2")
    assert code == 0
    assert "nullspace_dim: 4" in text


def test_solve_duals_bad_type():
    assert run("solve-duals", "XI")[0] == 2


def test_double():
    code, text = run("double", "VIII.b.iii")
    assert code == 0
    assert text.strip()


def test_double_with_values():
    assert run("double", "IX.b", "--values", "b=2")[0] == 0
    assert run("double", "IX.b", "--values", "b=-1")[0] == 2


def test_show():
    code, text = run("show", "VII_a.c")
    assert code == 0
    assert "VII_a" in text
    assert "≠" in text


def test_show_unknown_entry():
    assert run("show", "nope")[0] == 2


def test_verify_catalog():
    code, text = run("verify-catalog", "-v")
    assert code == 0
    assert "78 classes verified" in text
    assert "VIII worked example" in text


def test_export_round_trip(tmp_path):
    p = tmp_path / "cat.json"
    assert run("export", "--format", "json", str(p))[0] == 0
    assert catalogs_equal(import_json(p), entries())
    code, text = run("export", "--format", "json", "-")
    assert code == 0
    assert len(json.loads(text)["entries"]) == 78


def test_usage_errors():
    assert run()[0] == 2
    assert run("frobnicate")[0] == 2
    assert run("export", "-")[0] == 2
