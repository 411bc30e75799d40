import json

import pytest
from click.testing import CliRunner

from lcurve.cache import LPolyCache
from lcurve.cli import main
from lcurve.curve import curve_make
from lcurve.expr import parse_poly
from lcurve.finite_field import field_make
from lcurve.zeta import LPolynomial


@pytest.fixture
def run():
    runner = CliRunner()

    def _run(*args, input=None):
        res = runner.invoke(main, list(args), input=input, catch_exceptions=False)
        return res.exit_code, res.stdout

    return _run


def test_lpoly_example(run):
    code, out = run("lpoly", "--p", "3", "--curve", "x^3-x+1")
    assert code == 0
    assert json.loads(out) == {"q": 3, "g": 1, "coeffs": ["1", "3", "3"]}


@pytest.mark.parametrize("args, kind", [
    (["--p", "3", "--curve", "x^3+1"], "NotSeparable"),
    (["--p", "2", "--curve", "x^3+x+1"], "EvenCharacteristic"),
    (["--p", "3", "--curve", "x^4+1"], "EvenDegree"),
    (["--p", "3", "--curve", "x^3 + y"], "ParseError"),
    (["--p", "9", "--curve", "x^3+1"], "NotPrime"),
])
def test_lpoly_input_errors(run, args, kind):
    code, out = run("lpoly", *args)
    assert code == 2
    assert json.loads(out)["error"] == kind


def test_lpoly_budget(run):
    code, out = run("lpoly", "--p", "3", "--curve", "x^7+2x+1", "--budget", "10")
    assert code == 3
    assert json.loads(out)["error"] == "BudgetExceeded"


def test_lpoly_extension_field(run):
    code, out = run("lpoly", "--p", "3", "--f", "2", "--curve", "x^3 + u*x + 1")
    assert code == 0
    lp = LPolynomial.from_json(json.loads(out))
    assert lp.q == 9 and lp.g == 1


def test_lpoly_curve_json(run, tmp_path):
    path = tmp_path / "c.json"
    path.write_text(json.dumps({"p": 3, "f": 1, "rhs": [[1], [2], [0], [1]]}))
    code, out = run("lpoly", "--curve-json", str(path))
    assert code == 0 and json.loads(out)["coeffs"] == ["1", "3", "3"]
    code, out = run("lpoly", "--curve-json", "-", input=path.read_text())
    assert code == 0 and json.loads(out)["coeffs"] == ["1", "3", "3"]


def test_frob2_examples(run):
    code, out = run("frob2", "--p", "3", "--poly", "x^3-x+1")
    obj = json.loads(out)
    assert code == 0 and obj["pattern"] == [[3, 1]] and obj["charpoly_mod2"] == [1, 1, 1]
    code, out = run("frob2", "--p", "3", "--poly", "x^3-x")
    obj = json.loads(out)
    assert obj["pattern"] == [[1, 3]] and obj["charpoly_mod2"] == [1, 0, 1]
    assert obj["factors"] == [[1, 1], [1, 1], [1, 1]]


def test_frob2_degree_contract(run):
    code, out = run("frob2", "--p", "3", "--poly", "x")
    obj = json.loads(out)
    assert code == 2
    assert "error" in obj and obj["pattern"] == [[1, 1]]


def test_verify_summary_and_certificate(run, tmp_path):
    out_path = tmp_path / "cert.json"
    code, out = run("verify", "--p", "3", "--genus", "2", "--out", str(out_path))
    assert code == 0
    assert out.strip() == "q=3 g=2 rank=3/3 OK"
    cert = json.loads(out_path.read_text())
    assert set(cert) >= {"q", "g", "strategy", "curves", "matrix", "rank_mod2", "rank_rational", "theorem_ok"}
    assert cert["theorem_ok"] and cert["rank_rational"] == 3 and cert["strategy"] == "LexFirst"
    for rec in cert["curves"]:
        assert set(rec) >= {"rhs", "lpoly", "congruence_ok"} and rec["congruence_ok"]
    assert all(isinstance(x, str) for row in cert["matrix"] for x in row)

    # the rank subcommand accepts the certificate or its L-polynomials
    code, out = run("rank", str(out_path))
    assert code == 0 and json.loads(out) == {"rank_mod2": 3, "rank_rational": 3}
    lps = json.dumps([c["lpoly"] for c in cert["curves"]])
    code, out = run("rank", input=lps)
    assert json.loads(out) == {"rank_mod2": 3, "rank_rational": 3}


def test_verify_seeded(run):
    code, _ = run("verify", "--p", "5", "--genus", "1", "--seed", "42")
    assert code == 0


def test_verify_rejects_composite_p(run):
    code, out = run("verify", "--p", "9", "--genus", "1")
    assert code == 2 and json.loads(out)["error"] == "NotPrime"


def test_rank_examples(run):
    lp = {"q": 3, "g": 1, "coeffs": ["1", "3", "3"]}
    code, out = run("rank", input=json.dumps([lp, lp]))
    assert json.loads(out) == {"rank_mod2": 1, "rank_rational": 1}
    code, out = run("rank", input="[]")
    assert code == 2
    other = {"q": 5, "g": 1, "coeffs": ["1", "0", "5"]}
    code, out = run("rank", input=json.dumps([lp, other]))
    assert code == 2


def test_count_examples(run):
    code, out = run("count", "--p", "3", "--curve", "x^3-x+1", "--m", "1")
    assert json.loads(out) == {"m": 1, "count": 7}
    code, out = run("count", "--p", "3", "--curve", "x^3-x+1", "--m", "2")
    assert json.loads(out) == {"m": 2, "count": 7}
    code, out = run("count", "--p", "3", "--curve", "x^3-x+1", "--m", "40")
    assert code == 3


def test_cache_coherence(run, tmp_path):
    cache = tmp_path / "lp.cache"
    args = ["lpoly", "--p", "5", "--curve", "x^5 + 2x + 1"]
    _, plain = run(*args)
    _, first = run(*args, "--cache-path", str(cache))
    _, second = run(*args, "--cache-path", str(cache))
    assert plain == first == second
    assert len(cache.read_text().splitlines()) == 1


def test_cache_hit_is_served_and_corruption_is_a_miss(run, tmp_path):
    path = tmp_path / "lp.cache"
    F = field_make(3)
    C = curve_make(F, parse_poly(F, "x^3-x+1"))
    store = LPolyCache(path)
    fake = LPolynomial(3, 1, (1, 1, 3))
    store.put(C, fake, [5])
    _, out = run("lpoly", "--p", "3", "--curve", "x^3-x+1", "--cache-path", str(path))
    assert json.loads(out)["coeffs"] == ["1", "1", "3"]  # served from cache

    # tamper with the stored value without updating the checksum
    path.write_text(path.read_text().replace('"1", "1", "3"', '"1", "2", "3"'))
    assert store.get(C) is None
    _, out = run("lpoly", "--p", "3", "--curve", "x^3-x+1", "--cache-path", str(path))
    assert json.loads(out)["coeffs"] == ["1", "3", "3"]
    assert store.get(C)[0].coeffs == (1, 3, 3)


def test_garbage_cache_lines_ignored(tmp_path):
    path = tmp_path / "lp.cache"
    path.write_text("not json\n{\"key\": 1}\n")
    F = field_make(3)
    C = curve_make(F, parse_poly(F, "x^3-x+1"))
    store = LPolyCache(path)
    assert store.get(C) is None
    store.put(C, LPolynomial(3, 1, (1, 3, 3)), [7])
    assert store.get(C)[1] == [7]
