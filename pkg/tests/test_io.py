import json

import pytest

from hopflab import crossed as cr
from hopflab import families as fam
from hopflab import io
from hopflab.core import LinForm, verify_hopf_axioms
from hopflab.errors import ParseError
from hopflab.groups import cyclic_group
from hopflab.scalars import CyclotomicField, PrimeField


def test_bundled_sweedler():
    H = io.parse_definition_file(io.data_path("h4.json"))
    assert verify_hopf_axioms(H).ok
    assert H == fam.sweedler()


def test_bundled_e2():
    assert io.parse_definition_file(io.data_path("e2.json")) == fam.en_algebra(2)


def _bad_scalar_text():
    d = io.hopf_to_dict(fam.sweedler())
    d["counit"]["g"] = "3//2"
    return json.dumps(d, indent=1)


def test_bad_scalar_position():
    text = _bad_scalar_text()
    with pytest.raises(ParseError) as e:
        io.loads(text)
    line = next(i for i, l in enumerate(text.splitlines(), 1) if "3//2" in l)
    assert e.value.line == line and e.value.col > 1
    assert "3//2" in str(e.value)


def test_bad_json():
    with pytest.raises(ParseError) as e:
        io.loads('{"kind": "hopf",\n "basis": [}')
    assert e.value.line == 2


def test_missing_kind_and_field():
    with pytest.raises(ParseError):
        io.loads("[1, 2]")
    with pytest.raises(ParseError):
        io.loads('{"kind": "hopf"}')
    with pytest.raises(ParseError):
        io.loads('{"kind": "spaceship"}')


def test_wrong_axioms_rejected():
    d = io.hopf_to_dict(fam.sweedler())
    d["counit"]["g"] = "2"
    with pytest.raises(Exception):
        io.loads(json.dumps(d))


@pytest.mark.parametrize("H", [
    fam.sweedler(), fam.sweedler(PrimeField(3)), fam.en_algebra(2), fam.taft(3),
    fam.group_algebra(cyclic_group(3), CyclotomicField(3)),
])
def test_hopf_round_trip(H):
    assert io.loads(io.dumps(H)) == H


def test_forms_round_trip(h4):
    s = fam.sweedler_sigma(3, h4)
    assert io.loads(io.dumps(s), hopf=h4) == s
    f = LinForm(h4, [1, 1, 0, 0])
    assert io.loads(io.dumps(f), hopf=h4) == f
    with pytest.raises(ParseError):
        io.loads(io.dumps(f))


def test_crossed_round_trip(h4):
    cs = cr.sweedler_on_dual_numbers(h4)
    assert io.loads(io.dumps(cs)) == cs


def test_group_round_trip():
    G = cyclic_group(4)
    G2 = io.loads(io.dumps(G))
    assert G2.names == G.names and G2.table == G.table


def test_canonical_text(h4):
    text = io.dumps(h4)
    assert io.canonicalize(text) == text
    shuffled = json.dumps(json.loads(text), indent=4)
    assert io.canonicalize(shuffled) == text


def test_report_reloads(tmp_path, h4):
    p = tmp_path / "r.json"
    io.write_report(str(p), {"kind": "report", "verb": "twist", "result": io.hopf_to_dict(h4)},
                    timing={"wall_seconds": 0.1})
    d = json.loads(p.read_text())
    assert set(d["timestamp"]) == {"utc", "wall_seconds"}
    assert io.parse_definition_file(str(p)) == h4


def test_report_without_result():
    text = io.write_report("-", {"kind": "report", "verb": "verify"}, timestamp=False)
    assert "timestamp" not in json.loads(text)
    with pytest.raises(ParseError):
        io.loads(text)
