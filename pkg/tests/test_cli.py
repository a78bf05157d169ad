import json
import random

import pytest

from gwa.cli import main
from gwa.core import format_element
from gwa.parser import parse_element

from util import random_gwa_element, weyl1

WEYL1 = {"field": {"field": "Q"}, "ring": {"vars": ["t"], "laurent": [False]},
         "automorphisms": [{"t": "t-1"}], "t": ["t"]}
QWEYL = {"field": {"field": "Q(q)"}, "family": "quantum_weyl", "q": "q"}
DOUBLING = {"field": {"field": "Q"}, "ring": {"vars": ["t"], "laurent": [False]},
            "automorphisms": [{"t": "2*t"}], "t": ["t"]}
SMITH5 = {"field": {"field": "Fp", "p": 5}, "family": "smith", "s": "2*x"}


@pytest.fixture
def config(tmp_path):
    def write(data):
        path = tmp_path / "algebra.json"
        path.write_text(json.dumps(data))
        return str(path)

    return write


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_normalize_weyl_commutator(config, capsys):
    path = config(WEYL1)
    code, out, _ = run(capsys, "--config", path, "normalize", "Y*X - X*Y")
    assert code == 0
    assert out.strip() == "1"


def test_normalize_quantum_weyl(config, capsys):
    path = config(QWEYL)
    code, out, _ = run(capsys, "--config", path, "normalize", "Y*X")
    assert code == 0
    assert out.strip() == "t"


def test_normalize_parse_error_exit2(config, capsys):
    path = config(WEYL1)
    code, _, err = run(capsys, "--config", path, "normalize", "X^-1")
    assert code == 2
    assert "position" in err


def test_normalize_config_error_exit3(capsys, tmp_path):
    missing = str(tmp_path / "nope.json")
    code, _, err = run(capsys, "--config", missing, "normalize", "X")
    assert code == 3


def test_normalize_json_round_trip(config, capsys):
    path = config(WEYL1)
    pres = weyl1()
    rng = random.Random(41)
    for _ in range(20):
        elt = random_gwa_element(rng, pres)
        text = format_element(elt)
        # "--" keeps argparse from reading a leading minus sign as a flag
        code, out, _ = run(capsys, "--config", path, "normalize", "--", text)
        assert code == 0
        assert parse_element(pres, out.strip()) == elt


def test_ideals_classify(config, capsys):
    path = config(DOUBLING)
    code, out, _ = run(capsys, "--config", path, "--degree", "3", "--json",
                       "ideals", "classify")
    assert code == 0
    data = json.loads(out)
    assert data["regime"] == "powers"
    assert data["proper_nonzero"] == ["t", "t^2", "t^3"]
    assert data["maximal_proper"] == ["t"]


def test_ideals_stable_check_false_with_witness(config, capsys):
    path = config(WEYL1)
    code, out, _ = run(capsys, "--config", path, "--json", "ideals", "stable-check", "t")
    assert code == 0
    data = json.loads(out)
    assert data["stable"] is False
    assert data["witness"]["image"] == "t - 1"


def test_ideals_closure_reaches_unit(config, capsys):
    path = config(WEYL1)
    code, out, _ = run(capsys, "--config", path, "--json", "ideals", "closure", "t")
    assert code == 0
    data = json.loads(out)
    assert data["is_unit_ideal"] is True


def test_module_build_smith_char5(config, capsys):
    path = config(SMITH5)
    code, out, _ = run(capsys, "--config", path, "--json",
                       "module", "--zeta", "1",
                       "--annihilator", "c-1,h^5-h", "build")
    assert code == 0
    data = json.loads(out)
    assert data["dimension"] == 5
    assert data["matrices"]["c"][0][0] == "1"


def test_module_ann_w(config, capsys):
    path = config(WEYL1)
    code, out, _ = run(capsys, "--config", path, "--json",
                       "module", "--zeta", "2", "ann-w", "X - 2")
    assert code == 0
    assert json.loads(out)["member"] is True


def test_module_simple_and_whittaker_vectors(config, capsys):
    path = config(SMITH5)
    code, out, _ = run(capsys, "--config", path, "--json",
                       "module", "--zeta", "1",
                       "--annihilator", "c-1,h^5-h", "simple")
    assert code == 0
    assert json.loads(out)["verdict"] == "simple"
    code, out, _ = run(capsys, "--config", path, "--json",
                       "module", "--zeta", "1",
                       "--annihilator", "c-1,h^5-h", "whittaker-vectors")
    assert code == 0
    assert json.loads(out)["dimension"] == 1


def test_module_endo(config, capsys):
    path = config(SMITH5)
    code, out, _ = run(capsys, "--config", path, "--json",
                       "module", "--zeta", "1",
                       "--annihilator", "c-1,h^5-h", "endo")
    assert code == 0
    data = json.loads(out)
    assert data["dimension"] == 1 and data["matches_S_over_Q"] is True


def test_verify_t89_green(config, capsys):
    code, out, _ = run(capsys, "--json", "verify", "T8.9",
                       "--grid", json.dumps([{"p": 3, "lam": "0", "zeta": "1"}]))
    assert code == 0
    data = json.loads(out)
    assert data["all_green"] is True


def test_verify_hypothesis_violated_exit5(config, capsys):
    code, _, err = run(capsys, "--json", "verify", "T8.5",
                       "--grid", json.dumps([
                           {"cyclotomic": 3, "alpha": "zeta3", "beta": "1",
                            "theta": "0", "zeta": "1"}]))
    assert code == 5
    assert "hypothesis" in err


def test_center_command(config, capsys):
    path = config(SMITH5)
    code, out, _ = run(capsys, "--config", path, "--json", "--degree", "5", "center")
    assert code == 0
    data = json.loads(out)
    assert data["complete"] is True
    assert "c" in data["generators"]
    assert "X^5" in data["generators"]


def test_family_facts_command(config, capsys):
    path = config(QWEYL)
    code, out, _ = run(capsys, "--config", path, "--json", "family-facts")
    assert code == 0
    assert json.loads(out)["all_green"] is True


def test_deterministic_output(config, capsys):
    path = config(SMITH5)
    _, out1, _ = run(capsys, "--config", path, "--json",
                     "module", "--zeta", "1", "--annihilator", "c-1,h^5-h", "build")
    _, out2, _ = run(capsys, "--config", path, "--json",
                     "module", "--zeta", "1", "--annihilator", "c-1,h^5-h", "build")
    assert out1 == out2
