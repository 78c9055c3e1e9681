import json
import subprocess
import sys

import pytest

from moebius import cli, mobiuspoly, selftest
from moebius.mobiuspoly import MobiusPolynomial


def run(*argv):
    return cli.run(list(argv))


def test_poly_print():
    out = run("poly", "print", "--n", "12")
    assert (out.exit_code, out.payload) == (0, "x^12 - x^6 - x^4 + x^2\n")


def test_poly_eval():
    assert run("poly", "eval", "--n", "4", "--x", "2").payload == "12\n"
    assert run("poly", "eval", "--n", "12", "--x", "7", "--mod", "12").payload == "0\n"
    big = run("poly", "eval", "--n", "64", "--x", "10", "--json")
    assert json.loads(big.payload)["value"] == str(10**64 - 10**32)


def test_factor_mu_phi():
    assert run("factor", "360").payload == "360 = 2^3 * 3^2 * 5\n"
    assert json.loads(run("factor", "12", "--json").payload)["factors"] == [["2", "2"], ["3", "1"]]
    assert run("mu", "30").payload == "-1\n"
    assert run("phi", "12").payload == "4\n"


def test_siteswap_validate():
    ok = run("siteswap", "validate", "441")
    assert ok.exit_code == 0 and "3 balls" in ok.payload
    bad = run("siteswap", "validate", "443")
    assert bad.exit_code == 2
    assert "throws 2 and 3 both land on beat 0 (mod 3)" in bad.payload
    parse = run("siteswap", "validate", "4x!")
    assert parse.exit_code == 3 and "position 3" in parse.diagnostics


def test_siteswap_count_modes():
    assert run("siteswap", "count", "--period", "4", "--fewer-than", "2").payload == "3\n"
    assert run("siteswap", "count", "--period", "3", "--exact", "3").payload == "12\n"
    assert run("siteswap", "count", "--period", "3", "--balls", "3").payload == "12\n"
    assert run("siteswap", "count", "--period", "4", "--balls", "2", "--fewer-than").payload == "3\n"
    assert run("siteswap", "count", "--period", "4").exit_code == 1


def test_siteswap_list_and_verify():
    out = run("siteswap", "list", "--period", "4", "--fewer-than", "2", "--json")
    assert json.loads(out.payload)["patterns"] == ["4000", "3001", "2011"]
    assert run("siteswap", "verify", "--period", "3", "--balls", "3").exit_code == 0
    assert run("siteswap", "list", "--period", "7", "--balls", "6").exit_code == 3


def test_bracelets():
    out = json.loads(run("bracelets", "count", "--length", "6", "--alphabet", "2", "--json").payload)
    assert out == {"length": "6", "alphabet": "2", "aperiodic_words": "54", "aperiodic_classes": "9",
                   "necklaces": "14"}
    classes = run("bracelets", "classes", "--length", "6", "--alphabet", "2").payload.splitlines()
    assert len(classes) == 9 and "OOOXOX XOOOXO OXOOOX XOXOOO OXOXOO OOXOXO" in classes
    assert run("bracelets", "verify", "--length", "8", "--alphabet", "3").exit_code == 0
    assert run("bracelets", "verify", "--length", "30", "--alphabet", "2").exit_code == 3


def test_irreducible():
    assert run("irreducible", "count", "--prime", "2", "--degree", "4").payload == "3\n"
    assert run("irreducible", "count", "--prime", "2", "--ext-degree", "2", "--degree", "2").payload == "6\n"
    listed = run("irreducible", "list", "--prime", "2", "--degree", "4").payload.splitlines()
    assert listed == ["x^4 + x + 1", "x^4 + x^3 + 1", "x^4 + x^3 + x^2 + x + 1"]
    assert run("irreducible", "verify", "--prime", "3", "--degree", "5").exit_code == 0
    assert run("irreducible", "count", "--prime", "4", "--degree", "2").exit_code == 3


def test_plot(tmp_path):
    csv_path = tmp_path / "m17.csv"
    out = run("plot", "--n", "17", "--samples", "16", "--format", "csv", "--out", str(csv_path))
    assert out.exit_code == 0
    lines = csv_path.read_text().splitlines()
    assert lines[0] == "theta,re,im" and len(lines) == 18
    svg = run("plot", "--n", "15", "--samples", "50", "--format", "svg")
    assert svg.payload.startswith("<svg")
    bad = run("plot", "--n", "15", "--out", str(tmp_path / "nope" / "x.csv"))
    assert bad.exit_code == 3 and "nope" in bad.diagnostics


def test_euler():
    assert run("euler", "fermat", "--prime", "5", "--base", "2").exit_code == 0
    assert run("euler", "special", "--prime", "3", "--exp", "2", "--base", "3").exit_code == 0
    cert = json.loads(run("euler", "general", "--base", "3", "--modulus", "10", "--json").payload)
    assert cert["final"] == "1" and cert["phi"] == "4" and cert["ok"] is True
    assert [s["modulus"] for s in cert["steps"]] == ["2", "5"]
    assert run("euler", "general", "--base", "4", "--modulus", "10").exit_code == 3
    assert run("euler", "fermat", "--prime", "4", "--base", "2").exit_code == 3


@pytest.mark.parametrize("argv", [
    ["bogus"], [], ["poly", "print"], ["poly", "print", "--n", "x"], ["mu", "3", "--frobnicate"],
])
def test_usage_errors(argv):
    out = cli.run(argv)
    assert out.exit_code == 1
    assert out.payload == "" and "usage" in out.diagnostics


def test_help_exits_zero():
    out = run("--help")
    assert out.exit_code == 0 and "selftest" in out.payload


def test_domain_error_exit():
    assert run("mu", "0").exit_code == 3


def test_json_everywhere_is_single_document(tmp_path):
    commands = [
        ["factor", "360"], ["mu", "6"], ["phi", "9"], ["poly", "print", "--n", "12"],
        ["poly", "eval", "--n", "6", "--x", "2"],
        ["bracelets", "count", "--length", "4", "--alphabet", "2"],
        ["bracelets", "classes", "--length", "4", "--alphabet", "3"],
        ["bracelets", "verify", "--length", "4", "--alphabet", "2"],
        ["siteswap", "validate", "441"], ["siteswap", "validate", "443"],
        ["siteswap", "count", "--period", "3", "--exact", "3"],
        ["siteswap", "list", "--period", "3", "--exact", "3"],
        ["siteswap", "verify", "--period", "4", "--balls", "2"],
        ["irreducible", "count", "--prime", "2", "--degree", "4"],
        ["irreducible", "list", "--prime", "3", "--degree", "2"],
        ["irreducible", "verify", "--prime", "2", "--degree", "6"],
        ["plot", "--n", "5", "--samples", "4", "--out", str(tmp_path / "p.csv")],
        ["euler", "fermat", "--prime", "7", "--base", "3"],
        ["euler", "special", "--prime", "2", "--exp", "3", "--base", "5"],
        ["euler", "general", "--base", "2", "--modulus", "9"],
    ]
    for argv in commands:
        for placed in (["--json"] + argv, argv + ["--json"]):
            out = cli.run(placed)
            doc = json.loads(out.payload)

            def no_floats(v):
                assert not isinstance(v, float), (argv, v)
                if isinstance(v, dict):
                    for w in v.values():
                        no_floats(w)
                elif isinstance(v, list):
                    for w in v:
                        no_floats(w)

            no_floats(doc)


def test_output_deterministic():
    argv = ["bracelets", "classes", "--length", "5", "--alphabet", "3", "--json"]
    assert cli.run(argv) == cli.run(argv)


def test_selftest_small_budget():
    out = run("selftest", "--budget", "1")
    assert out.exit_code == 0
    assert "FAIL" not in out.payload


def test_selftest_env_budget(monkeypatch):
    monkeypatch.setenv("MOEBIUS_SELFTEST_BUDGET", "2")
    doc = json.loads(run("selftest", "--json").payload)
    assert doc["budget"] == 2.0 and doc["ok"] is True


def test_selftest_budget_must_be_positive():
    assert run("selftest", "--budget", "0.5").exit_code == 1


def test_selftest_fault_injection(monkeypatch):
    real = mobiuspoly.build

    def tampered(n):
        P = real(n)
        if n != 12:
            return P
        terms = dict(P.terms)
        terms[6] = -terms[6]  # flip the sign of mu(2)
        return MobiusPolynomial(n, terms)

    monkeypatch.setattr(mobiuspoly, "build", tampered)
    out = run("selftest", "--budget", "1")
    assert out.exit_code == 2
    assert out.payload.splitlines()[-1] == "first failure: M_12 rendering"


def test_selftest_skips_when_out_of_time():
    slow = [("a", lambda reduced: None, True), ("b", lambda reduced: None, False)]
    results = selftest.run_selftest(budget=-1, suites=slow)
    assert [r.status for r in results] == ["pass", "skip"]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "moebius", "siteswap", "validate", "443"],
                          capture_output=True, text=True)
    assert proc.returncode == 2 and "invalid" in proc.stdout and proc.stderr == ""
    proc = subprocess.run([sys.executable, "-m", "moebius", "nope"], capture_output=True, text=True)
    assert proc.returncode == 1 and proc.stdout == "" and "usage" in proc.stderr
