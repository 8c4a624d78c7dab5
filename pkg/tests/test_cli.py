import json

import pytest

from superq.cli import main
from superq.gamma import GammaElement
from superq.partitions import StrictPartition
from superq.schurq import q


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_enum(capsys):
    code, out, _ = run(capsys, "enum", "5")
    assert code == 0
    assert json.loads(out) == {
        "n": 5,
        "strict": ["5", "4,1", "3,2"],
        "odd": ["5", "3,1,1", "1,1,1,1,1"],
    }


def test_g_and_gskew(capsys):
    code, out, _ = run(capsys, "g", "4,1")
    assert code == 0 and out.strip() == "3"
    code, out, _ = run(capsys, "gskew", "4,1", "3")
    assert code == 0 and out.strip() == "2"


def test_prob(capsys):
    code, out, _ = run(capsys, "prob", "5", "4,1")
    assert code == 0
    assert json.loads(out)["prob"] == "3/5"
    # mu = (2,1), n = 2: hand computation gives P((4,1)) = 3/5, P((3,2)) = 2/5
    code, out, _ = run(capsys, "prob", "2", "3,2", "--mu", "2,1")
    assert code == 0
    assert json.loads(out)["prob"] == "2/5"


def test_qfunc_round_trip(capsys):
    code, out, _ = run(capsys, "qfunc", "2,1")
    assert code == 0
    parsed = GammaElement.from_json_obj(json.loads(out))
    assert parsed == q(StrictPartition((2, 1)))


def test_avg_symbolic_golden_bytes(capsys):
    code, out, _ = run(capsys, "avg", "--f", "p[3]", "--symbolic")
    assert code == 0
    expected = (
        '{"falling": {"2": "3", "1": "1"}, '
        '"monomial": {"2": "3", "1": "-2"}, '
        '"binomial": {"2": "6", "1": "1"}}'
    )
    assert out.strip() == expected


def test_avg_at_n(capsys):
    code, out, _ = run(capsys, "avg", "--f", "p[3]", "--n", "3")
    assert code == 0
    assert json.loads(out)["value"] == "21"
    code, out, _ = run(capsys, "avg", "--f", "hatp[1]", "--mu", "2,1", "--n", "2")
    assert code == 0
    # E_{mu,n}[hatp1] = hatp1(mu) + n(n-1)/2 + n|mu| at mu = (2,1), n = 2
    assert json.loads(out)["value"] == "8"


def test_output_is_deterministic(capsys):
    _, first, _ = run(capsys, "avg", "--f", "p[5]", "--symbolic")
    _, second, _ = run(capsys, "avg", "--f", "p[5]", "--symbolic")
    assert first == second


def test_chartable_csv(capsys):
    code, out, _ = run(capsys, "chartable", "3")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == 'lambda/rho,3,"1,1,1"'
    assert lines[1] == "3,1,1"
    assert lines[2] == '"2,1",-2,1'


def test_chartable_json(capsys):
    code, out, _ = run(capsys, "chartable", "4", "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj["k"] == 4
    rows = {row["lambda"]: row["values"] for row in obj["rows"]}
    assert rows["3,1"]["1,1,1,1"] == "2"


def test_pstar_commands(capsys):
    code, out, _ = run(capsys, "pstar-eval", "2,1", "2,1")
    assert code == 0 and out.strip() == "6"
    code, out, _ = run(capsys, "pstar", "2")
    assert code == 0
    assert json.loads(out) == [
        {"partition": "1,1", "coeff": "1"},
        {"partition": "1", "coeff": "-1"},
    ]


def test_frak_subcommands(capsys):
    code, out, _ = run(capsys, "frak", "eval", "3", "2,1")
    assert code == 0 and out.strip() == "-12"
    code, out, _ = run(capsys, "frak", "deg1", "p[3]")
    assert code == 0 and out.strip() == "4"
    code, out, _ = run(capsys, "frak", "expand-p", "5")
    assert code == 0
    records = {rec["partition"]: rec["coeff"] for rec in json.loads(out)}
    assert records["3,1"] == "10" and records["3"] == "35/3"


def test_content_commands(capsys):
    code, out, _ = run(capsys, "content", "hatp", "1")
    assert code == 0
    assert json.loads(out) == [
        {"partition": "3", "coeff": "1/6"},
        {"partition": "1", "coeff": "-1/6"},
    ]
    psum = '[{"partition": "1,1", "coeff": "1"}]'
    code, out, _ = run(capsys, "content", "hatF", "--psum", psum)
    assert code == 0
    from superq.content import hat_p

    assert GammaElement.from_json_obj(json.loads(out)) == hat_p(1) ** 2


def test_psi_and_phi(capsys):
    code, out, _ = run(capsys, "psi", "2")
    assert code == 0
    assert json.loads(out) == [{"partition": "3", "coeff": "4"}]
    code, out, _ = run(capsys, "psi", "2", "--lambda", "2,1")
    assert code == 0
    assert json.loads(out)["value"] == "36"
    code, out, _ = run(capsys, "phi-check", "5,4,2", "8")
    assert code == 0
    assert json.loads(out)["identity_holds"] is True


def test_lab_commands(capsys):
    code, out, _ = run(capsys, "lab", "deg1-scan", "--max", "4")
    assert code == 0
    obj = json.loads(out)
    assert obj["violations_found"] == 0 and obj["pairs_scanned"] > 0
    code, out, _ = run(capsys, "lab", "p2", "--max-n", "6")
    assert code == 0
    obj = json.loads(out)
    assert obj["values"]["6"] == "1016/45"
    assert obj["degree2_fit_fails"] is True
    code, out, _ = run(capsys, "lab", "fstruct", "3", "3")
    assert code == 0
    obj = json.loads(out)
    by_rho = {rec["rho"]: rec["value"] for rec in obj["records"]}
    assert by_rho["1,1,1"] == "12"


def test_domain_error_exits_1(capsys):
    code, out, err = run(capsys, "avg", "--f", "p[2]", "--symbolic")
    assert code == 1
    assert json.loads(err)["error"]["kind"] == "domain"
    code, _, err = run(capsys, "g", "3,3")
    assert code == 1
    code, _, err = run(capsys, "prob", "4", "5")
    assert code == 1


def test_usage_error_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["avg", "--f", "p[1]"])  # neither --symbolic nor --n
    assert exc.value.code == 2


def test_pretty_format(capsys):
    code, out, _ = run(capsys, "avg", "--f", "p[3]", "--symbolic",
                       "--format", "pretty")
    assert code == 0
    assert out.strip() == "3·n^↓2 + n"


def test_verify_all_pass(capsys):
    code, out, _ = run(capsys, "verify", "--format", "json")
    assert code == 0
    results = json.loads(out)
    assert len(results) == 11
    assert all(r["ok"] for r in results)
    misprint = [r for r in results if "misprint" in r["detail"]]
    assert misprint and "§5.2 confirmed" in misprint[0]["detail"]
