import pytest

from fakeplanes.cohomology import DimInterval
from fakeplanes.config import ConfigError, parse_axiom_file, parse_plane_config
from fakeplanes.picard import get_plane

PLANE = """\
id = toy
h1_orders = 2, 4
aut = other
canonical_torsion = 0, 0

[curves]
1, 0 = effective=true h0_OC2C=1 h1_OC2C=unknown
0, 2 = effective=false
"""


def test_plane_config():
    plane, curves = parse_plane_config(PLANE)
    assert plane.id == "toy"
    assert plane.torsion.cyclic_orders == (2, 4)
    assert not plane.is_g21
    assert curves[(1, 0)].effective is True
    assert curves[(1, 0)].h0_OC2C == DimInterval.exactly(1)
    assert curves[(0, 2)].effective is False


def test_plane_config_g21_checked():
    with pytest.raises(ValueError):
        parse_plane_config("id = x\nh1_orders = 2, 2\naut = G21\n")


def test_plane_config_missing_keys():
    with pytest.raises(ConfigError):
        parse_plane_config("id = x\n")


def test_axiom_file():
    p = get_plane("b4")
    toggles, facts = parse_axiom_file(
        "A-kra = false   # not trusted\n"
        "A-noL1 = yes\n"
        "\n"
        "h0(1; 0,1,0,0) = 0    # a source\n"
        "h2(2) = [0, 1]\n", p)
    assert toggles == {"A-kra": False, "A-noL1": True}
    assert len(facts) == 2
    f0, f1 = facts
    assert f0.statement.cls == p.cls(1, (0, 1, 0, 0)) and f0.statement.index == 0
    assert f0.statement.interval == DimInterval.exactly(0)
    assert f0.citation == "a source"
    assert f1.statement.interval == DimInterval(0, 1)
    assert f1.citation == "user axiom file"


@pytest.mark.parametrize("text", ["A1 = maybe", "nonsense", "B7 = true", "h3(1) = 0"])
def test_axiom_file_errors(text):
    with pytest.raises(ConfigError):
        parse_axiom_file(text, get_plane("b4"))
