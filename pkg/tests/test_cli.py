import json

import pytest

from affine_fc.cli import main

W1 = ["0", "4", "3", "5", "2", "4", "6", "7", "1"]


def test_cfnf_ascii(capsys):
    assert main(["cfnf", "--type", "D", "--n", "5", *W1]) == 0
    assert capsys.readouterr().out == "(0 4)(3 5)(2 4 6 7)(1)\n"


def test_cfnf_json(capsys):
    assert main(["cfnf", "--n", "2", "--format", "json", "1", "0"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data == {"family": "D", "n": 2, "layers": [[0, 1]]}


def test_comma_separated_word(capsys):
    assert main(["cfnf", "--n", "5", ",".join(W1)]) == 0
    assert capsys.readouterr().out == "(0 4)(3 5)(2 4 6 7)(1)\n"


def test_word_with_a_stray_token_is_an_error(capsys):
    assert main(["cfnf", "0", "x"]) == 1
    assert "cannot parse word" in capsys.readouterr().err


def test_empty_word_is_the_identity(capsys):
    assert main(["cfnf"]) == 0
    assert capsys.readouterr().out == "e\n"


def test_afunc_of_fork_pair(capsys):
    assert main(["afunc", "--n", "2", "0", "1"]) == 0
    assert capsys.readouterr().out == "n=2 a=1 a_tilde=2 agree=true\n"


def test_non_reduced_word_is_an_error(capsys):
    assert main(["cfnf", "0", "0"]) == 1
    assert capsys.readouterr().err.startswith("Error:")


def test_generator_out_of_range(capsys):
    assert main(["heap", "--n", "2", "7"]) == 1
    assert "Error:" in capsys.readouterr().err


def test_bad_option_value_is_a_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["cfnf", "--type", "X", "0"])
    assert exc.value.code == 2


def test_missing_command(capsys):
    assert main([]) == 2


def test_phi_needs_type_b(capsys):
    assert main(["phi", "--type", "D", "0"]) == 1
    assert "--type B" in capsys.readouterr().err


def test_phi_of_w2(capsys):
    w2 = "3 2 4 1 3 5 2 4 6 0 3 5 2 6".split()
    assert main(["phi", "--type", "B", "--n", "5", *w2]) == 0
    assert capsys.readouterr().out == "(3)(2 4)(1 3 5)(2 4 6)(0 3 5)(2 7)\n"


def test_classify_candy(capsys):
    assert main(["classify", "0", "4", "2", "1", "3"]) == 0
    assert capsys.readouterr().out == "Candy m=2 x0=0 y0=4\n"


def test_classify_json(capsys):
    assert main(["classify", "--format", "json", "0", "4", "2", "1", "3"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data == {"class": "Candy", "params": {"m": 2, "x0": 0, "y0": 4}}


def test_classify_reducible_is_an_error(capsys):
    assert main(["classify", "0", "2"]) == 1


def test_reduce_json_trace(capsys):
    assert main(["reduce", "--n", "5", "--format", "json", *W1]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["start"] == {"family": "D", "n": 5, "layers": [[0, 4], [3, 5], [2, 4, 6, 7], [1]]}
    assert data["end"] == {"family": "D", "n": 5, "layers": [[1, 4, 6, 7]]}
    assert len(data["steps"]) == 5
    assert data["steps"][0] == {
        "side": "L",
        "s": 4,
        "t": 3,
        "weak": True,
        "result": {"family": "D", "n": 5, "layers": [[0, 3, 5], [2, 4, 6, 7], [1]]},
    }


def test_reduce_exhaustive_lists_every_trace(capsys):
    assert main(["reduce", "--n", "5", "--policy", "exhaustive", "--format", "json", *W1]) == 0
    traces = json.loads(capsys.readouterr().out)
    assert isinstance(traces, list)
    assert {len(t["steps"]) for t in traces} == {5}


def test_diagram_json(capsys):
    assert main(["diagram", "--format", "json", "0", "1"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["k"] == 4
    assert data["loops"] == {"b": 1, "w": 0, "bw": 0}
    assert data["delta"] == 0


def test_enumerate(capsys):
    assert main(["enumerate", "--n", "2", "--max-len", "1"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 6
    assert lines[0] == "e"


def test_verify_worked_examples(capsys):
    assert main(["verify", "worked-examples"]) == 0
    assert "✓ No failures in worked-examples" in capsys.readouterr().out


def test_verify_json(capsys):
    assert main(["verify", "antichain", "--max-len", "3", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["suite"] == "antichain"
    assert data["failures"] == []
