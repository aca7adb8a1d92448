import json
import subprocess
import sys

import pytest

from sl3webs.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def worked_json(tmp_path, capsys):
    path = tmp_path / "w.json"
    code, _, _ = run(capsys, "build", "--tableau", "134/256/367", "--sign", "++-++-+", "--out", str(path))
    assert code == 0
    return path


def test_build_invert_roundtrip(worked_json, capsys):
    assert json.loads(worked_json.read_text())["sign"] == "++-++-+"
    code, out, _ = run(capsys, "invert", "--web", str(worked_json))
    assert (code, out.strip()) == (0, "134/256/367")
    code, out, _ = run(capsys, "invert", "--web", str(worked_json), "--json")
    assert json.loads(out) == {"rows": [[1, 3, 4], [2, 5, 6], [3, 6, 7]]}


def test_build_verbose(capsys):
    code, out, _ = run(capsys, "build", "--tableau", "134/256/367", "--sign", "++-++-+", "--verbose")
    p = json.loads(out)["pipeline"]
    assert p["standard"] == "145/268/379" and p["conjugate"] == "123/467/589"
    assert p["m_diagram"] == "L:(3,4)(2,6)(1,7);R:(4,5)(7,8)(6,9)"


def test_sign_starting_with_dashes(capsys):
    code, out, _ = run(capsys, "enumerate", "--sign", "--++")
    assert (code, out.split()) == (0, ["112/234", "113/224"])
    code, out, _ = run(capsys, "enumerate", "--sign", "---", "--webs")
    assert code == 0 and out.count("\t") == 1


def test_mdiagram(capsys):
    code, out, _ = run(capsys, "mdiagram", "--tableau", "13/25/46")
    assert out.strip() == "L:(1,2)(3,5);R:(2,4)(5,6)"
    code, out, _ = run(capsys, "mdiagram", "--tableau", "112/234", "--sign", "--++", "--json")
    assert json.loads(out)["size"] == 6


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "bijection", "--sign", "-++++")
    assert code == 0 and "PASS" in out
    code, out, _ = run(capsys, "verify", "rotation", "--sign", "++-++-+", "--json")
    assert code == 0 and json.loads(out)["success"]
    code, out, _ = run(capsys, "verify", "join", "--sign", "--++", "--with", "--++", "--at", "2")
    assert code == 0
    code, _, err = run(capsys, "verify", "join", "--sign", "+++")
    assert code == 1 and "MissingInput" in err


def test_promote_and_shuffle(capsys):
    assert run(capsys, "promote", "--tableau", "112/345/678")[1].strip() == "134/267/588"
    assert run(capsys, "promote", "--tableau", "13/25/46", "--times", "6")[1].strip() == "13/25/46"
    assert run(capsys, "shuffle", "--into", "114/235", "--from", "123", "--at", "1")[1].strip() == "114/237/568"
    out = run(capsys, "shuffle", "--into", "1/2/3", "--from", "1/2/3", "--at", "3", "--by", "rows")[1]
    assert out.strip() == "14/25/36"


def test_rotate_and_join(worked_json, tmp_path, capsys):
    rot = tmp_path / "r.json"
    assert run(capsys, "rotate", "--web", str(worked_json), "--out", str(rot))[0] == 0
    assert run(capsys, "invert", "--web", str(rot))[1].strip() == "123/245/567"
    joined = tmp_path / "j.json"
    assert run(capsys, "join", "--web", str(worked_json), "--other", str(rot), "--at", "0", "--out", str(joined))[0] == 0
    assert json.loads(joined.read_text())["sign"] == "+-++-++" + "++-++-+"


def test_render(capsys, tmp_path):
    code, out, _ = run(capsys, "render", "--tableau", "13/25/46", "--format", "tikz", "--depths")
    assert code == 0 and out.count("% depth") == 7
    svg = tmp_path / "w.svg"
    code, _, _ = run(capsys, "render", "--tableau", "112/234", "--sign", "--++", "--out", str(svg), "--scale", "3/2")
    assert code == 0 and svg.read_text().startswith("<?xml")


@pytest.mark.parametrize("argv,code,needle", [
    (["promote", "--tableau", "12/3"], 1, "NotSemistandard"),
    (["build", "--tableau", "112/234", "--sign", "+++-"], 1, "NotContentOfS"),
    (["build", "--tableau", "112/234", "--sign", "+x"], 1, "InvalidSign"),
    (["shuffle", "--into", "123", "--from", "123", "--at", "9"], 1, "IndexOutOfRange"),
    (["render", "--tableau", "13/25/46", "--scale", "0"], 1, "BadScale"),
    (["invert", "--web", "/nonexistent.json"], 1, "FileNotFoundError"),
    (["render"], 1, "MissingInput"),
])
def test_errors(capsys, argv, code, needle):
    got, _, err = run(capsys, *argv)
    assert got == code
    assert needle in err


def test_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["nosuchcommand"])
    assert exc.value.code == 2


def test_module_entry_point_reads_stdin(worked_json):
    done = subprocess.run([sys.executable, "-m", "sl3webs", "invert", "--web", "-"],
                          input=worked_json.read_text(), capture_output=True, text=True, check=False)
    assert done.returncode == 0 and done.stdout.strip() == "134/256/367"


def test_bad_json_stdin():
    done = subprocess.run([sys.executable, "-m", "sl3webs", "invert", "--web", "-"],
                          input="{not json", capture_output=True, text=True, check=False)
    assert done.returncode == 1 and "BadWebJson" in done.stderr
