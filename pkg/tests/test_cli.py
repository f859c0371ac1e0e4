import json

from click.testing import CliRunner

from logbundles.cli import main

TWO_CONICS = {
    "n": 2,
    "hypersurfaces": [
        {
            "degree": 2,
            "terms": [
                {"exp": [2, 0, 0], "coeff": "1"},
                {"exp": [0, 2, 0], "coeff": "2"},
                {"exp": [0, 0, 2], "coeff": "-1"},
            ],
        },
        {
            "degree": 2,
            "terms": [
                {"exp": [2, 0, 0], "coeff": "3"},
                {"exp": [0, 2, 0], "coeff": "5"},
                {"exp": [0, 0, 2], "coeff": "-1"},
            ],
        },
    ],
}

PAIR = {
    "n": 2,
    "A": [["1", "0", "0"], ["0", "2", "0"], ["0", "0", "-1"]],
    "B": [["3", "0", "0"], ["0", "5", "0"], ["0", "0", "-1"]],
}


def run(runner, args, files):
    with runner.isolated_filesystem():
        for name, payload in files.items():
            with open(name, "w") as fh:
                json.dump(payload, fh)
        return runner.invoke(main, args, catch_exceptions=False)


def test_chern_report():
    result = run(CliRunner(), ["chern", "--input", "a.json"], {"a.json": TWO_CONICS})
    assert result.exit_code == 0
    report = json.loads(result.output)
    assert report["rank"] == 2
    assert report["chern"] == [1, 3]
    assert report["input"] == TWO_CONICS  # canonical echo re-parses


def test_zeroes_report():
    result = run(CliRunner(), ["zeroes", "--input", "p.json"], {"p.json": PAIR})
    assert result.exit_code == 0
    report = json.loads(result.output)
    assert report["singular_points"] == [
        ["1", "0", "0"],
        ["0", "1", "0"],
        ["0", "0", "1"],
    ]


def test_pencil_irrational_exits_2():
    irr = {"n": 1, "A": [["1", "1"], ["1", "3"]], "B": [["1", "0"], ["0", "1"]]}
    result = run(CliRunner(), ["pencil", "--input", "p.json"], {"p.json": irr})
    assert result.exit_code == 2
    report = json.loads(result.output)
    assert report["outcome"] == "needs-algebraic-roots"


def test_torelli_pair_negative():
    neg = {
        "pair1": PAIR,
        "pair2": {
            "n": 2,
            "A": [["1", "0", "0"], ["0", "3", "0"], ["0", "0", "-1"]],
            "B": PAIR["B"],
        },
    }
    result = run(CliRunner(), ["torelli-pair", "--input", "p.json"], {"p.json": neg})
    assert result.exit_code == 0
    report = json.loads(result.output)
    assert report["dual_pencil_equal"] is False
    assert report["witness"] is None


def test_torelli_pair_positive():
    pos = {
        "pair1": PAIR,
        "pair2": {
            "n": 2,
            "A": [["3/2", "0", "0"], ["0", "20/7", "0"], ["0", "0", "-1"]],
            "B": PAIR["B"],
        },
    }
    result = run(CliRunner(), ["torelli-pair", "--input", "p.json"], {"p.json": pos})
    assert result.exit_code == 0
    report = json.loads(result.output)
    assert report["dual_pencil_equal"] is True
    assert report["witness"] is not None
    assert report["verdict"] == "isomorphic"


def test_malformed_input_exits_1():
    runner = CliRunner()
    with runner.isolated_filesystem():
        with open("bad.json", "w") as fh:
            fh.write("{")
        result = runner.invoke(main, ["chern", "--input", "bad.json"])
    assert result.exit_code == 1


def test_invalid_arrangement_exits_1():
    bad = {"n": 2, "hypersurfaces": []}
    result = run(CliRunner(), ["chern", "--input", "a.json"], {"a.json": bad})
    assert result.exit_code == 1
    assert "error" in json.loads(result.output)


def test_rnc_round_trip():
    pts = {"points": [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1], [6, 3, 2], [6, 4, 3]]}
    result = run(CliRunner(), ["rnc", "--input", "p.json"], {"p.json": pts})
    report = json.loads(result.output)
    assert report["parameters"] == ["-1", "-2", "-3"]
    assert report["on_common_rnc"] is True


def test_splitting_command():
    result = run(
        CliRunner(),
        [
            "splitting",
            "--input",
            "a.json",
            "--line",
            "[[1,0,0],[0,1,0]]",
            "--twist",
            "-1",
        ],
        {"a.json": TWO_CONICS},
    )
    assert result.exit_code == 0
    assert json.loads(result.output)["splitting"] == [1, -2]


def test_reports_are_deterministic():
    args = ["cohomology", "--input", "a.json", "--twist-min", "-2", "--twist-max", "2"]
    first = run(CliRunner(), args, {"a.json": TWO_CONICS})
    second = run(CliRunner(), args, {"a.json": TWO_CONICS})
    assert first.output == second.output


def test_reproduce_suite():
    runner = CliRunner()
    result = runner.invoke(main, ["reproduce", "--suite", "chern-quadric-pairs"])
    assert result.exit_code == 0
    report = json.loads(result.output)
    assert report["passed"] == report["total"] == 4
