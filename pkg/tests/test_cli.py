import io
import json

import pytest

from popcert.cli import run
from popcert.criterion import InequalitySpec
from popcert.families import cyclic_spec, popoviciu_spec


def call(argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, stdin=io.StringIO(stdin), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def files(tmp_path):
    def write(name, obj):
        path = tmp_path / name
        path.write_text(obj if isinstance(obj, str) else json.dumps(obj))
        return str(path)

    return write


BAD_SPEC = {"n": 2, "a": ["1", "1"], "a_mean": "0", "terms": [{"b": "1", "r": ["2", "0"]}]}


def test_family_pipes_into_check():
    code, out, _ = call(["family", "popoviciu"])
    assert code == 0
    code, out, _ = call(["check", "-"], stdin=out)
    assert code == 0 and "PASS" in out


@pytest.mark.parametrize(
    "argv, spec",
    [
        (["family", "zhao", "--n", "5", "--m", "3"], None),
        (["family", "cyclic", "--n", "4", "--r", "3"], cyclic_spec(4, 3)),
        (["family", "jensen", "--n", "6"], None),
        (["family", "popoviciu"], popoviciu_spec()),
    ],
)
def test_family_output_reparses(argv, spec):
    code, out, _ = call(argv)
    parsed = InequalitySpec.from_json(json.loads(out))
    if spec is not None:
        assert parsed == spec


def test_family_missing_parameter():
    code, _, err = call(["family", "zhao", "--n", "5"])
    assert code == 2 and "--m" in err


def test_family_output_file(tmp_path):
    target = tmp_path / "spec.json"
    assert call(["family", "cyclic", "--n", "4", "--r", "3", "-o", str(target)])[0] == 0
    assert InequalitySpec.from_json(json.loads(target.read_text())) == cyclic_spec(4, 3)


def test_check_modes_and_json(files):
    bad = files("bad.json", BAD_SPEC)
    code, out, _ = call(["check", bad, "--json"])
    assert code == 1
    data = json.loads(out)
    assert data["passed"] is False and data["residuals"][0] == "-1" and data["mode"] == "14"
    assert data["pair_slacks"] == [{"i": 1, "j": 2, "slack": "0"}]
    relaxed = files("relaxed.json", {"n": 1, "a": ["2"], "a_mean": "0", "terms": [{"b": "1", "r": ["1"]}]})
    assert call(["check", relaxed, "--mode", "13"])[0] == 0
    assert call(["check", relaxed, "--mode", "14"])[0] == 1


def test_certify(files):
    good = files("good.json", popoviciu_spec().to_json())
    code, out, _ = call(["certify", good, "--trials", "20", "--seed", "1", "--json"])
    data = json.loads(out)
    assert code == 0 and data["certified"] and data["sweep"]["trials"] == 20
    code, out, _ = call(["certify", files("bad.json", BAD_SPEC)])
    assert code == 1 and "rejected" in out and "residual_1 = -1" in out


def test_falsify(files):
    bad = files("bad.json", BAD_SPEC)
    code, out, _ = call(["falsify", bad])
    assert code == 1 and "counterexample" in out and "LHS - RHS = -1" in out
    code, out, _ = call(["falsify", bad, "--json"])
    data = json.loads(out)
    assert data["value"] == "-1" and data["witness"]["x"] == ["1", "0"]
    code, out, _ = call(["falsify", files("good.json", popoviciu_spec().to_json())])
    assert code == 0


def test_evaluate(files):
    spec = files("spec.json", popoviciu_spec().to_json())
    inst = files("inst.json", {"x": ["0", "1", "2"], "w": ["1", "1", "1"]})
    sq = files("sq.json", {"slope": "0", "intercept": "0", "knots": [], "builtin": "square"})
    code, out, _ = call(["evaluate", spec, "--instance", inst, "--function", sq])
    assert code == 0 and out.strip() == "1"
    ex = files("exp.json", {"builtin": "exp"})
    code, out, _ = call(["evaluate", spec, "--instance", inst, "--function", ex, "--json"])
    data = json.loads(out)
    assert code == 0 and data["exact"] is False and isinstance(data["value"], float)
    code, out, _ = call(["evaluate", spec, "--instance", inst, "--function", sq, "--decimal", "3"])
    assert out.strip() == "1.000"


def test_meanpoints(files):
    spec = files("spec.json", popoviciu_spec().to_json())
    inst = files("inst.json", {"x": ["0", "1", "2"], "w": ["1", "1", "1"]})
    code, out, _ = call(["meanpoints", spec, "--instance", inst, "--json"])
    data = json.loads(out)
    assert code == 0 and data["u"] == ["1", "1", "1", "3", "-2", "-2", "-2"]
    assert data["z"] == ["0", "1", "2", "1", "1/2", "1", "3/2"]
    code, out, _ = call(["meanpoints", spec, "--instance", inst])
    assert "sum u_k = 0" in out


def test_decompose():
    assert call(["decompose", "2,-1,-1"])[1].strip() == "e1-e2: 1, e1-e3: 1"
    code, _, err = call(["decompose", "1,1"])
    assert code == 2 and "sum" in err
    code, out, _ = call(["decompose", "1/2,-1/2", "--json"])
    assert json.loads(out)["pairs"] == [{"i": 1, "j": 2, "coefficient": "1/2"}]


def test_interpolate(files):
    csv = files("s.csv", "x,f\n0,0\n1,1\n2,4\n")
    code, out, _ = call(["interpolate", csv])
    data = json.loads(out)
    assert code == 0 and data["slope"] == "2" and data["intercept"] == "-1"
    assert data["knots"] == [{"c": "1", "t": "1"}]
    code, _, err = call(["interpolate", files("bad.csv", "x,f\n0,0\n1,2\n2,2\n")])
    assert code == 2 and "convex" in err


def test_karamata():
    code, out, _ = call(["karamata", "--z", "2,0,1,1", "--w", "1,1,-1,-1"])
    assert code == 0 and "PASS" in out
    code, out, _ = call(["karamata", "--z", "1,0", "--w=-1,1", "--json"])
    data = json.loads(out)
    assert code == 1 and data["failure"] == "abs_sum"


@pytest.mark.parametrize(
    "argv, stdin, needle",
    [
        (["check", "-"], "{not json", "invalid JSON"),
        (["check", "-"], json.dumps({"n": 2, "a": ["1", "q"], "a_mean": "0"}), "a[1]"),
        (["check", "/nonexistent/spec.json"], "", "spec.json"),
        (["karamata", "--z", "1,2", "--w", "1"], "", "2 points"),
    ],
)
def test_input_errors_exit_2(argv, stdin, needle):
    code, _, err = call(argv, stdin)
    assert code == 2
    assert needle in err
    assert len(err.strip().splitlines()) == 1


def test_usage_error_exit_2():
    assert call(["nosuchcommand"])[0] == 2


def test_deterministic_output(files):
    spec = files("spec.json", cyclic_spec(5, 2).to_json())
    first = call(["certify", spec, "--trials", "10", "--seed", "7", "--json"])
    second = call(["certify", spec, "--trials", "10", "--seed", "7", "--json"])
    assert first == second
