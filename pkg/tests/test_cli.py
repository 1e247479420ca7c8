import json
import subprocess
import sys

import jsonschema
import pytest

from hbsum.cli import main
from hbsum.sweep import CampaignConfig, ConfigError, report_schema


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize(
    "argv, code, text",
    [
        (["eval", "--sum", "dedekind", "--a", "1", "--c", "3"], 0, "1/18"),
        (["eval", "--sum", "s5", "--a", "1", "--c", "1"], 0, "0"),
        (["eval", "--sum", "S35pq", "--p", "1", "--q", "1", "--a", "1", "--b", "1", "--c", "2"], 0, "-1/2"),
        (["eval", "--sum", "Spq", "--p", "1", "--q", "1", "--a", "1", "--b", "1", "--c", "2",
          "--x", "0", "--y", "0", "--z", "0"], 0, "0"),
        (["eval", "--sum", "hwz", "--p", "1", "--q", "1", "--a", "1", "--b", "2", "--c", "3",
          "--x=-1/3"], 0, "1/36"),
    ],
)
def test_eval(capsys, argv, code, text):
    got, out, _ = run(capsys, *argv)
    assert got == code
    if text is not None:
        assert out.strip() == text


def test_eval_errors(capsys):
    assert run(capsys, "eval", "--sum", "dedekind", "--a", "1", "--c", "0")[0] == 3
    assert run(capsys, "eval", "--sum", "dedekind", "--a", "1")[0] == 2
    assert run(capsys, "eval", "--sum", "nope", "--a", "1")[0] == 2
    assert run(capsys, "eval", "--sum", "dedekind", "--a", "1/2", "--c", "3")[0] == 2
    assert run(capsys, "eval", "--sum", "Spq", "--p", "0", "--q", "1", "--a", "1", "--b", "1", "--c", "2")[0] == 3
    with pytest.raises(SystemExit) as exc:
        main(["eval", "--sum", "dedekind", "--a", "x", "--c", "3"])
    assert exc.value.code == 2


def test_check(capsys):
    code, out, _ = run(capsys, "check", "--identity", "hb-5", "--a", "3", "--c", "5")
    assert code == 0 and "pass" in out
    code, out, _ = run(capsys, "check", "--identity", "hb-5", "--a", "2", "--c", "5")
    assert code == 3 and "not-applicable" in out
    code, out, _ = run(capsys, "check", "--identity", "eq-0", "--p", "3", "--q", "2", "--X", "1/7", "--Y", "2/7")
    assert code == 0
    assert run(capsys, "check", "--identity", "nope")[0] == 2
    assert run(capsys, "check", "--identity", "hb-5", "--a", "3")[0] == 2


def test_series_reports_failure(capsys):
    # even a+b+c member point: the three series sum to -1/2, not -1/4
    code, out, _ = run(capsys, "series", "--a", "1", "--b", "2", "--c", "3", "--d", "2",
                       "--x", "1/2", "--y", "1", "--z", "3/2", "--degree", "2")
    assert code == 1 and "status: fail" in out


def test_series(capsys):
    code, out, _ = run(capsys, "series", "--a", "1", "--b", "1", "--c", "1", "--d", "2", "--degree", "4")
    assert code == 4 and "branch: ambiguous" in out
    assert "degree 4: [4,0]=0 [3,1]=0 [2,2]=0 [1,3]=0 [0,4]=0" in out
    code, out, _ = run(capsys, "series", "--a", "1", "--b", "1", "--c", "1", "--d", "2",
                       "--degree", "4", "--rhs", "witness-sum")
    assert code == 0
    code, out, _ = run(capsys, "series", "--a", "1", "--b", "1", "--c", "1", "--d", "2", "--x", "1/3")
    assert code == 0 and "branch: non-member" in out and "rhs (quarter): 0" in out
    assert run(capsys, "series", "--d", "3")[0] == 3
    code, out, _ = run(capsys, "series", "--theorem", "hwz-g", "--a", "1", "--b", "2", "--c", "3", "--degree", "1")
    assert code == 0 and out.splitlines()[0].startswith("-1 -1 ")


def _write(tmp_path, payload, name="cfg.json"):
    path = tmp_path / name
    path.write_text(payload if isinstance(payload, str) else json.dumps(payload))
    return str(path)


def test_sweep_hb0(capsys, tmp_path):
    cfg = _write(tmp_path, {"identities": ["hb-0"], "modulus_max": 30})
    code, out, _ = run(capsys, "sweep", cfg)
    report = json.loads(out)
    jsonschema.validate(report, report_schema())
    (res,) = report["results"]
    assert code == 0 and report["pass"]
    assert res["points_tested"] == res["points_applicable"] > 100
    assert res["failures"] == []


@pytest.mark.parametrize(
    "payload",
    ["{not json", "[]", {"identities": ["nope"]}, {"modulus_max": 0}, {"surprise": 1},
     {"d_values": [3]}, {"samples_per_identity": "some"}, {"order_max": 40}],
)
def test_sweep_bad_config(capsys, tmp_path, payload):
    code, out, _ = run(capsys, "sweep", _write(tmp_path, payload))
    assert code == 2 and out == ""


def test_sweep_failures_exit_nonzero(capsys, tmp_path):
    cfg = _write(tmp_path, {"identities": ["omega"], "series_modulus_max": 3, "d_values": [2],
                            "shift_denominators": [1, 2], "series_degree": 2, "series_rhs": "quarter"})
    out_path = tmp_path / "report.json"
    code, out, _ = run(capsys, "sweep", cfg, "--format", "text", "-o", str(out_path))
    report = json.loads(out_path.read_text())
    assert code == 1 and not report["pass"]
    assert "FAIL" in out
    fail = report["results"][0]["failures"][0]
    assert set(fail["params"]) == {"a", "b", "c", "d", "x", "y", "z"}
    assert fail["residual"] == {"0 0": fail["residual"]["0 0"]}


def test_config_from_dict_rejects_bool_seed():
    with pytest.raises(ConfigError):
        CampaignConfig.from_dict({"seed": True})


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hbsum", "eval", "--sum", "dedekind", "--a", "1", "--c", "3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "1/18"
