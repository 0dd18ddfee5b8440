import json
import subprocess
import sys

import pytest

from ragrowth import RationalFunction, Series, series_expand
from ragrowth.cli import run


@pytest.fixture
def files(tmp_path):
    paths = {}

    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        paths[name.split(".")[0]] = str(p)

    write("square.json", json.dumps({"nodes": 4, "edges": [[1, 2], [2, 3], [3, 4], [4, 1]]}))
    write("edge.json", json.dumps({"nodes": 2, "edges": [[1, 2]]}))
    write("pentagon.txt", "# the 5-cycle\nnodes 5\n" + "".join(f"edge {i} {i % 5 + 1}\n" for i in range(1, 6)))
    write("path.json", json.dumps({"nodes": 3, "edges": [[1, 2], [2, 3]]}))
    write("broken.json", '{"nodes": 2, "edges": [[1, 1]]}')
    write("garbage.txt", "nodes two\n")
    return paths


def call(capsys, *argv):
    code = run([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_spherical_rational_square(capsys, files):
    code, out, _ = call(capsys, "spherical", files["square"], "--structure", "raag", "--rational")
    assert code == 0
    assert out == '{"num":["1","2","1"],"den":["1","-6","9"]}\n'


def test_rational_is_the_default(capsys, files):
    _, a, _ = call(capsys, "spherical", files["square"], "--structure", "raag")
    _, b, _ = call(capsys, "spherical", files["square"], "--structure", "raag", "--rational")
    assert a == b


def test_geodesic_edge_racg(capsys, files):
    code, out, _ = call(capsys, "geodesic", files["edge"], "--structure", "racg", "--rational")
    assert code == 0 and json.loads(out) == {"num": ["1", "2", "2"], "den": ["1"]}


def test_series_only(capsys, files):
    code, out, _ = call(capsys, "spherical", files["edge"], "--structure", "racg", "--series", "4")
    assert code == 0
    assert json.loads(out) == {"order": 4, "coeffs": ["1", "2", "1", "0", "0"]}
    _, out, _ = call(capsys, "geodesic", files["square"], "--structure", "monoid", "--series")
    assert json.loads(out)["coeffs"] == [str(4 ** n) for n in range(11)]


@pytest.mark.parametrize("cmd", ["spherical", "geodesic"])
@pytest.mark.parametrize("structure", ["monoid", "raag", "racg"])
def test_series_equals_expansion_of_rational(capsys, files, cmd, structure):
    for name in ("square", "pentagon", "path"):
        code, out, _ = call(capsys, cmd, files[name], "--structure", structure, "--rational", "--series", "9")
        assert code == 0
        data = json.loads(out)
        f = RationalFunction.from_json(data["rational"])
        assert series_expand(f, 9) == Series.from_json(data["series"])


def test_allowed_restricts(capsys, files):
    code, out, _ = call(capsys, "spherical", files["edge"], "--structure", "monoid", "--allowed", "1")
    assert code == 0 and RationalFunction.from_json(json.loads(out)) == RationalFunction(1, [1, -1])
    code, out, _ = call(capsys, "spherical", files["edge"], "--structure", "monoid",
                        "--allowed", "1", "--series", "5", "--rational")
    data = json.loads(out)
    assert series_expand(RationalFunction.from_json(data["rational"]), 5) == Series.from_json(data["series"])
    code, _, err = call(capsys, "spherical", files["edge"], "--structure", "monoid", "--allowed", "3")
    assert code == 2 and "outside" in err


def test_link_regular_fast_path(capsys, files):
    _, a, _ = call(capsys, "geodesic", files["pentagon"], "--structure", "raag", "--series", "8", "--rational")
    _, b, _ = call(capsys, "geodesic", files["pentagon"], "--structure", "raag", "--series", "8",
                   "--rational", "--link-regular")
    assert a == b
    code, out, err = call(capsys, "geodesic", files["path"], "--structure", "raag", "--link-regular")
    assert code == 2 and out == "" and "not link-regular" in err


def test_clique_poly(capsys, files):
    assert call(capsys, "clique-poly", files["square"])[:2] == (0, '{"clique_polynomial":["1","4","4"]}\n')
    assert call(capsys, "clique-poly", files["square"], "--pretty")[1] == "1 + 4t + 4t^2\n"


def test_link_regular_command(capsys, files):
    _, out, _ = call(capsys, "link-regular", files["pentagon"])
    assert json.loads(out) == {"link_regular": True, "m": 5, "d": 2, "L": [5, 2, 0]}
    _, out, _ = call(capsys, "link-regular", files["path"])
    assert json.loads(out) == {"link_regular": False}
    _, out, _ = call(capsys, "link-regular", files["path"], "--pretty")
    assert out == "not link-regular\n"


def test_pretty_rational(capsys, files):
    _, out, _ = call(capsys, "spherical", files["square"], "--structure", "raag", "--pretty", "--series", "3",
                     "--rational")
    assert out.splitlines() == ["(1 + 2t + t^2) / (1 - 6t + 9t^2)", "1, 8, 40, 168"]


def test_verify(capsys, files):
    code, out, _ = call(capsys, "verify", files["edge"], "--depth", "6")
    data = json.loads(out)
    assert code == 0 and data["ok"] and data["depth"] == 6
    names = {c["name"] for c in data["checks"]}
    assert "functional relations" in names and "raag: link-regular fast path" in names
    code, out, _ = call(capsys, "verify", files["path"], "--depth", "4", "--pretty")
    assert code == 0 and all(line.startswith("PASS ") for line in out.splitlines())


def test_verify_reports_cap(capsys, files, monkeypatch):
    monkeypatch.setenv("GROWTH_CAP", "10")
    code, out, err = call(capsys, "verify", files["square"], "--depth", "5")
    assert code == 2 and out == "" and "cap" in err


def test_relations(capsys, files):
    code, out, _ = call(capsys, "relations", files["pentagon"], "--order", "6")
    data = json.loads(out)
    assert code == 0 and data["ok"]
    code, out, _ = call(capsys, "relations", files["square"], "--pretty")
    assert code == 0 and len(out.splitlines()) == 4


@pytest.mark.parametrize("argv", [
    ["clique-poly", "broken"],
    ["clique-poly", "garbage"],
    ["clique-poly", "missing"],
    ["spherical", "edge", "--structure", "raag", "--series", "-1"],
    ["verify", "edge", "--depth", "0"],
])
def test_errors_exit_nonzero(capsys, files, tmp_path, argv):
    argv = [files.get(a, str(tmp_path / "nope.json")) if a in ("broken", "garbage", "missing", "edge") else a
            for a in argv]
    code, out, err = call(capsys, *argv)
    assert code == 2 and out == "" and err.startswith("ragrowth: error:")


def test_inconsistent_flags_rejected(capsys, files):
    with pytest.raises(SystemExit) as exc:
        run(["geodesic", files["edge"], "--structure", "raag", "--allowed", "1"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit):
        run(["spherical", files["edge"]])
    capsys.readouterr()


def test_deterministic_bytes(files):
    argv = [sys.executable, "-m", "ragrowth", "geodesic", files["pentagon"], "--structure", "racg",
            "--rational", "--series", "12"]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, check=True).stdout
    assert a == b and a.endswith(b"\n")
