import json

import pytest

from hopflab import crossed as cr
from hopflab import families as fam
from hopflab import io
from hopflab.cli import build_family, main
from hopflab.core import LinForm
from hopflab.groups import cyclic_group
from hopflab.scalars import PrimeField

H4 = io.data_path("h4.json")


@pytest.fixture
def files(tmp_path, h4):
    def put(name, obj):
        p = tmp_path / name
        io.write_definition(str(p), obj)
        return str(p)
    return {
        "s1": put("s1.json", fam.sweedler_sigma(1, h4)),
        "s2": put("s2.json", fam.sweedler_sigma(2, h4)),
        "bad": put("bad.json", fam.sweedler_sigma(1, h4).__class__(h4, [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 0]])),
        "mu": put("mu.json", LinForm(h4, [1, 1, 1, 0])),
        "eps": put("eps.json", h4.counit_form()),
        "chi": put("chi.json", LinForm(h4, [1, -1, 0, 0])),
        "cs": put("cs.json", cr.sweedler_on_dual_numbers(h4)),
        "c3": put("c3.json", cyclic_group(3)),
        "dir": tmp_path,
    }


def test_verify_pass(capsys):
    assert main(["verify", "--algebra", H4]) == 0
    assert capsys.readouterr().out.startswith("verify: PASS")


def test_verify_fails_on_broken_algebra(tmp_path):
    d = io.hopf_to_dict(fam.sweedler())
    d["antipode"]["x"] = {"x": "1"}
    p = tmp_path / "broken.json"
    p.write_text(json.dumps(d))
    assert main(["verify", "--algebra", str(p)]) == 1


def test_usage_errors(tmp_path, capsys):
    assert main([]) == 2
    assert main(["frobnicate"]) == 2
    assert main(["verify"]) == 2
    assert main(["verify", "--algebra", str(tmp_path / "missing.json")]) == 2
    p = tmp_path / "junk.json"
    d = io.hopf_to_dict(fam.sweedler())
    d["counit"]["g"] = "3//2"
    p.write_text(json.dumps(d, indent=1))
    assert main(["verify", "--algebra", str(p)]) == 2
    assert "line" in capsys.readouterr().err


def test_field_mismatch():
    assert main(["verify", "--algebra", H4, "--field", "f3"]) == 2


def test_cocycle_check(files):
    assert main(["cocycle-check", "--algebra", H4, "--form", files["s1"]]) == 0
    assert main(["cocycle-check", "--algebra", H4, "--form", files["bad"]]) == 1


def test_convolve_report(files, h4):
    out = str(files["dir"] / "c.json")
    assert main(["convolve", "--algebra", H4, "--form", files["s1"], "--form", files["s2"],
                 "--out", out]) == 0
    got = io.parse_definition_file(out, h4)
    assert got == fam.sweedler_sigma(3, h4)


def test_coboundary_and_twist(files, h4):
    out = str(files["dir"] / "d.json")
    assert main(["coboundary", "--algebra", H4, "--form", files["mu"], "--out", out]) == 0
    assert main(["twist", "--algebra", H4, "--form", out]) == 0
    assert main(["twist", "--algebra", H4, "--form", files["s1"], "--out", out]) == 0
    assert io.parse_definition_file(out).mult == h4.mult


@pytest.mark.parametrize("side", ["right", "left", "bi"])
def test_galois(files, side):
    assert main(["galois", "--algebra", H4, "--form", files["s1"], "--side", side]) == 0


def test_cotensor(files):
    assert main(["cotensor", "--algebra", H4, "--form", files["s1"], "--form", files["s2"]]) == 0
    assert main(["cotensor", "--algebra", H4, "--form", files["s1"]]) == 2


@pytest.mark.parametrize("spec", ["sweedler", "en:2", "taft:3", "group:{c3}", "dual-group:{c3}"])
def test_family(files, spec):
    assert main(["family", spec.format(**files)]) == 0


def test_family_descriptors(files):
    assert build_family("en:2") == fam.en_algebra(2)
    assert build_family("sweedler", PrimeField(5)).field == PrimeField(5)
    assert build_family(f"group:{files['c3']}").dim == 3
    assert main(["family", "moebius:3"]) == 2


def test_kac(files, h4):
    assert main(["kac", "pairings", "--family", "sweedler", "--field", "f3"]) == 0
    assert main(["kac", "yamazaki", "--algebra", H4, "--form", files["s1"], "--form", files["s2"]]) == 0
    out = str(files["dir"] / "beta.json")
    io.write_definition(out, fam.sweedler_sigma(0, h4))
    assert main(["kac", "check-pairing", "--algebra", H4, "--form", out]) == 0
    assert main(["kac", "sigma", "--algebra", H4, "--form", out]) == 0
    assert main(["kac", "check-pairing", "--algebra", H4, "--form", files["s1"]]) == 1
    assert main(["kac", "lambda", "--algebra", H4, "--form", files["eps"], "--form", files["eps"]]) == 0
    # 1* - g* is an algebra map but not lazy
    assert main(["kac", "lambda", "--algebra", H4, "--form", files["chi"], "--form", files["eps"]]) == 1


def test_projrep(files):
    for action in ("regular", "check", "dual"):
        assert main(["projrep", action, "--algebra", H4, "--form", files["s1"]]) == 0
    assert main(["projrep", "tensor", "--algebra", H4, "--form", files["s1"], "--form", files["s2"]]) == 0
    assert main(["projrep", "tensor", "--algebra", H4, "--form", files["s1"]]) == 2


def test_crossed(files, capsys):
    assert main(["crossed", "check", "--crossed", files["cs"]]) == 0
    assert "lazy False" in capsys.readouterr().out
    assert main(["crossed", "product", "--crossed", files["cs"]]) == 0
    assert main(["crossed", "act", "--crossed", files["cs"], "--form", files["s1"]]) == 0
    assert main(["crossed", "act", "--crossed", files["cs"]]) == 2


def test_oracle(capsys):
    assert main(["oracle", "z2l", "--family", "sweedler", "--field", "f3"]) == 0
    assert "|Z2_L|=3" in capsys.readouterr().out
    assert main(["oracle", "units", "--family", "sweedler", "--field", "f5"]) == 0
    assert main(["oracle", "alg-maps", "--family", "en:2", "--field", "f3"]) == 0
    assert main(["oracle", "pairings", "--family", "sweedler", "--field", "f3"]) == 0
    assert main(["oracle", "z2l", "--algebra", H4]) == 2


def test_report_deterministic(tmp_path):
    texts = []
    for i in range(2):
        out = tmp_path / f"r{i}.json"
        assert main(["oracle", "z2l", "--family", "sweedler", "--field", "f3", "--out", str(out)]) == 0
        d = json.loads(out.read_text())
        assert "wall_seconds" in d.pop("timestamp")
        texts.append(json.dumps(d, sort_keys=True))
    assert texts[0] == texts[1]
    d = json.loads(texts[0])
    assert d["data"]["z2l"] == 3 and d["data"]["quotient"]["order"] == 3
