import pytest

import geolab

CONTACT = """\
chart M(x, y, z)
form eta = d(z) - y*d(x)
structure jacobi_from_contact J(eta)
structure graph_jacobi L(J)
check contact(eta)
check jacobi(J)
check isotropy(L)
check transversality(L)
"""


def test_version():
    assert geolab.__version__ == "0.1.0"


def test_parse_and_inspect():
    s = geolab.Scene.parse(CONTACT)
    assert s.chart == ["x", "y", "z"]
    assert s.bindings == {"eta": "form", "J": "jacobi pair", "L": "bundle"}
    assert s.checks == [
        "contact(eta)",
        "jacobi(J)",
        "isotropy(L)",
        "transversality(L)",
    ]


def test_format_is_idempotent():
    once = geolab.format(CONTACT)
    assert geolab.format(once) == once


def test_run_verdicts_and_exit_code():
    report = geolab.check(CONTACT, seed=5, samples=2)
    assert [r.verdict for r in report.records] == ["pass"] * 4
    assert report.exit_code() == 0
    assert report.exit_code(strict=True) == 0
    assert report.records[0].name == "contact(eta)"
    assert report.records[0].certificate[0].startswith("eta ^ (d eta)^n = 1")


def test_json_is_byte_stable():
    scene = geolab.parse(CONTACT)
    a = geolab.run(scene, seed=99, samples=3).json()
    b = geolab.run(scene, seed=99, samples=3).json()
    assert a == b
    assert '"version": "0.1.0"' in a


def test_failing_scene_exits_one():
    report = geolab.check(
        "chart M(x, y, z)\n"
        "form w = d(x)^d(y)\n"
        "form eta = d(z)\n"
        "structure graph_form L(w, eta)\n"
        "check integrability(L)\n"
    )
    assert [r.verdict for r in report.records] == ["fail"]
    assert report.exit_code() == 1
    assert any("residual" in w for w in report.records[0].witness)


def test_parse_error_position():
    with pytest.raises(geolab.SceneError) as err:
        geolab.parse("chart M(x, y, z)\nform w = zeta\n")
    assert "2:10" in str(err.value)


def test_registries():
    assert "contact" in geolab.check_names()
    assert "gen_sasakian" in geolab.check_names()
    assert "jacobi_from_contact" in geolab.structure_kinds()


def test_check_file(tmp_path):
    p = tmp_path / "scene.geo"
    p.write_text(CONTACT, encoding="utf-8")
    assert geolab.check_file(p).exit_code() == 0
