import json
from fractions import Fraction

import pytest

from zerofull.cli import format_A, format_f, format_psi, main, parse_A, parse_f, parse_psi
from zerofull.errors import DomainError


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def records(out):
    return [json.loads(line) for line in out.splitlines()]


class TestParsers:
    @pytest.mark.parametrize("text", ["pow:c=1/4,theta=1,base=5", "log:theta=3/2,beta=2", "table:1/2,1/4,1/8"])
    def test_psi_round_trip(self, text):
        fam = parse_psi(text)
        assert parse_psi(format_psi(fam)) == fam

    @pytest.mark.parametrize("text, s, g", [("s=0.43", Fraction(43, 100), 0), ("s=gamma/2", 0, Fraction(1, 2)),
                                            ("s=1/10+3*gamma", Fraction(1, 10), 3), ("s=γ", 0, 1)])
    def test_f(self, text, s, g):
        f = parse_f(text)
        assert (f.s, f.s_gamma) == (s, g)
        assert parse_f(format_f(f)) == f

    @pytest.mark.parametrize("text", ["id", "affine:u=2,v=0", "table:1,1,2"])
    def test_A_round_trip(self, text):
        assert format_A(parse_A(text)) == text

    @pytest.mark.parametrize("bad", ["pow:theta", "exp:theta=1", "pow:rate=2"])
    def test_bad_psi(self, bad):
        with pytest.raises(DomainError):
            parse_psi(bad)


class TestCommands:
    def test_regime(self, capsys):
        code, out, _ = run(capsys, "regime", "12", "18", "--format", "json")
        rec = records(out)[-1]
        assert code == 0
        assert (rec["regime"], rec["alpha1"], rec["alpha2"]) == ("SamePrimesIndependent", "1/2", "2")

    def test_regime_flags(self, capsys):
        _, out, _ = run(capsys, "regime", "-b", "4", "-t", "8", "--format", "json")
        assert records(out)[-1]["regime"] == "MultiplicativelyDependent"

    @pytest.mark.parametrize("argv, outcome, code", [
        (["-b", "5", "-D", "1,2", "-t", "5", "--psi", "pow:c=1/4,theta=1", "--f", "s=0.43"], "Zero", 0),
        (["-b", "3", "-D", "0,2", "-t", "9", "--psi", "pow:theta=2", "--f", "s=0.3"], "Full", 0),
        (["-b", "12", "-D", "0,6", "-t", "18", "--psi", "pow:theta=2,base=12", "--f", "s=gamma/2"],
         "Inconclusive", 3),
        (["-b", "3", "-D", "0,2", "--psi", "table:1/3,1/9,1/27", "--f", "s=1/2"], "Undecided", 4),
        (["-b", "3", "-D", "0,2", "-t", "2", "--psi", "pow:theta=2", "--f", "s=1/2"], "Undecided", 4),
    ])
    def test_verdict(self, capsys, argv, outcome, code):
        got, out, _ = run(capsys, "verdict", *argv, "--format", "json", "--terms", "50")
        assert records(out)[-1]["outcome"] == outcome
        assert got == code

    def test_classify_example(self, capsys):
        code, out, _ = run(capsys, "classify", "-b", "5", "-D", "1,2", "-p", "1", "-n", "1", "-r", "1/20",
                           "--format", "json")
        assert records(out)[1]["variant"] == "Empty"

    def test_classify_verbose_note_goes_to_stderr(self, capsys):
        _, out, err = run(capsys, "classify", "-b", "3", "-D", "0,2", "-n", "1", "-r", "1/10", "-v")
        assert "BOTH" in err and "BOTH" not in out

    def test_census(self, capsys):
        code, out, _ = run(capsys, "census", "-b", "3", "-D", "0,2", "-t", "3", "-n", "2", "-r", "1/100",
                           "--method", "both", "--format", "json")
        row = records(out)[1]
        assert (row["exact"], row["brute"], row["agree"]) == (8, 8, True)

    def test_census_plot_data(self, capsys, tmp_path):
        path = tmp_path / "counts.dat"
        run(capsys, "census", "-b", "3", "-D", "0,2", "-n", "2:5", "--theta", "2", "--plot-data", str(path))
        lines = path.read_text().splitlines()
        assert lines[0].startswith("#")
        assert [line.split() for line in lines[1:]] == [[str(n), str(2 ** (n + 1))] for n in range(2, 6)]

    def test_predict(self, capsys):
        _, out, _ = run(capsys, "predict", "-b", "3", "-D", "0,2", "-t", "2", "--lambda", "3", "--format", "json")
        pred = records(out)[-1]
        assert (pred["value"], pred["grade"]) == (0.0, "conjecture")

    def test_csv_has_header_row(self, capsys):
        _, out, _ = run(capsys, "regime", "12", "18", "--format", "csv")
        lines = out.splitlines()
        body = [line for line in lines if not line.startswith("#")]
        assert body[0].startswith("record,")
        assert all(line.startswith("#") for line in lines[:len(lines) - len(body)])

    def test_check_example31(self, capsys):
        code, out, _ = run(capsys, "check", "example31", "--nmax", "4", "--format", "json")
        assert code == 0 and records(out)[-1]["passed"] is True

    def test_check_oracles(self, capsys):
        code, out, _ = run(capsys, "check", "oracles", "--cases", "20", "--seed", "3", "--format", "json")
        assert code == 0
        assert all(r["failures"] == 0 for r in records(out) if r["record"] == "oracle")


class TestErrors:
    def test_decimal_radius_rejected(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["census", "-b", "3", "-D", "0,2", "-n", "2", "-r", "0.01"])
        assert exc.value.code == 2
        assert "num/den" in capsys.readouterr().err

    def test_invalid_digit_set_names_invariant(self, capsys):
        code, out, err = run(capsys, "census", "-b", "3", "-D", "0,1,2", "-n", "2", "-r", "1/100")
        assert code == 2 and out == "" and "|D|" in err

    def test_precondition_marker(self, capsys):
        code, _, err = run(capsys, "classify", "-b", "5", "-D", "1,2", "-p", "1", "-n", "1", "-r", "1/5")
        assert code == 2 and "NotApplicable" in err

    def test_wrong_law(self, capsys):
        code, _, err = run(capsys, "verdict", "-b", "3", "-D", "0,2", "-t", "2", "--psi", "pow:theta=2",
                           "--f", "s=1/2", "--law", "main")
        assert code == 2 and "Regime" in err


SCENARIOS = [
    ["regime", "12", "18"],
    ["verdict", "-b", "3", "-D", "0,2", "-t", "9", "--psi", "pow:theta=2", "--f", "s=gamma/2,c=-2", "--terms", "30"],
    ["classify", "-b", "5", "-D", "1,2", "-n", "1:2", "-r", "1/60"],
    ["census", "-b", "3", "-D", "0,2", "-t", "2", "-n", "4:9", "--theta", "6/5", "--fit"],
    ["predict", "-b", "12", "-D", "0,6", "-t", "18", "--psi", "pow:theta=2"],
    ["check", "oracles", "--cases", "5"],
]


@pytest.mark.parametrize("argv", SCENARIOS, ids=[s[0] for s in SCENARIOS])
def test_json_config_replay(capsys, tmp_path, argv):
    """The echoed config, written back as key=value, reproduces the output byte for byte."""
    code, out, _ = run(capsys, *argv, "--format", "json")
    cfg = records(out)[0]
    assert cfg["record"] == "config"
    lines = []
    for k, v in cfg.items():
        if v is None:
            continue
        lines.append(f"{k}={str(v).lower() if isinstance(v, bool) else v}")
    path = tmp_path / "run.cfg"
    path.write_text("\n".join(lines) + "\n")
    again_code, again, _ = run(capsys, cfg["command"], "--config", str(path))
    assert (again_code, again) == (code, out)


@pytest.mark.parametrize("fmt", ["human", "json", "csv"])
def test_output_is_deterministic(capsys, fmt):
    argv = ["census", "-b", "4", "-D", "0,3", "-t", "2", "-n", "3:7", "-r", "1/300", "--format", fmt]
    assert run(capsys, *argv) == run(capsys, *argv)
