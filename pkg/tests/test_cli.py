"""End-to-end command-line interface tests (all through ``main(argv)``)."""

import json
import os

import pytest

from dnacodec.alphabets import DNA
from dnacodec.automata import Nfa
from dnacodec.cli import main
from dnacodec.fado import parse_fado, serialize_fado
from dnacodec.transducers import Transducer

FIXTURES = os.path.join(os.path.dirname(__file__), "fixtures")


def fixture(*parts):
    return os.path.join(FIXTURES, *parts)


def write_language(tmp_path, name, words):
    path = tmp_path / name
    path.write_text(serialize_fado(Nfa.finite(DNA, words)))
    return str(path)


# -- satisfies ----------------------------------------------------------------


def test_satisfies_positive(capsys):
    rc = main(
        [
            "satisfies",
            "--property",
            fixture("maximal", "desc_hamming_w.json"),
            "--language",
            fixture("maximal", "lang_aaa_cct.fa"),
        ]
    )
    assert rc == 0
    assert capsys.readouterr().out.strip() == "satisfied"


def test_satisfies_negative_with_witness(tmp_path, capsys):
    lang = write_language(tmp_path, "bad.fa", ["AGG", "CCA"])
    rc = main(
        ["satisfies", "--property", fixture("maximal", "desc_hamming_w.json"), "--language", lang]
    )
    assert rc == 1
    out = capsys.readouterr().out
    assert out.startswith("NOT satisfied, witness:")
    assert "AGG" in out and "CCA" in out


def test_satisfies_json_output(capsys):
    rc = main(
        [
            "satisfies",
            "--property",
            fixture("maximal", "desc_hamming_w.json"),
            "--language",
            fixture("maximal", "lang_aaa_cct.fa"),
            "--json",
        ]
    )
    assert rc == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["satisfied"] is True
    assert doc["witness"] is None
    assert doc["decider"]
    assert doc["file"].endswith("lang_aaa_cct.fa")


def test_satisfies_directory_fanout(tmp_path, capsys):
    write_language(tmp_path, "a_good.fa", ["AAA", "CCT"])
    write_language(tmp_path, "b_bad.fa", ["AGG", "CCA"])
    rc = main(
        [
            "satisfies",
            "--property",
            fixture("maximal", "desc_hamming_w.json"),
            "--language",
            str(tmp_path),
        ]
    )
    assert rc == 1
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 2
    assert lines[0].endswith("satisfied") and "a_good.fa" in lines[0]
    assert "NOT satisfied" in lines[1] and "b_bad.fa" in lines[1]


def test_satisfies_directory_json(tmp_path, capsys):
    write_language(tmp_path, "one.fa", ["AAA"])
    write_language(tmp_path, "two.fa", ["ACG"])
    rc = main(
        [
            "satisfies",
            "--property",
            fixture("maximal", "desc_hamming_w.json"),
            "--language",
            str(tmp_path),
            "--json",
        ]
    )
    assert rc == 0
    doc = json.loads(capsys.readouterr().out)
    assert {entry["file"].split(os.sep)[-1] for entry in doc["results"]} == {"one.fa", "two.fa"}


def test_satisfies_inline_descriptor(tmp_path, capsys):
    lang = write_language(tmp_path, "l.fa", ["AC", "GT"])
    desc = json.dumps(
        {
            "kind": "S",
            "theta": "dna-delta",
            "transducer": "@Transducer 0 * 0\\n0 A A 0\\n0 C C 0\\n0 G G 0\\n0 T T 0",
        }
    )
    rc = main(["satisfies", "--property", desc, "--language", lang])
    assert rc == 1  # delta(GT) = AC is reproduced by the identity machine
    assert "NOT satisfied" in capsys.readouterr().out


def test_satisfies_empty_directory_errors(tmp_path, capsys):
    rc = main(
        [
            "satisfies",
            "--property",
            fixture("maximal", "desc_hamming_w.json"),
            "--language",
            str(tmp_path),
        ]
    )
    assert rc == 2
    assert "error:" in capsys.readouterr().err


# -- maximal ------------------------------------------------------------------


def test_maximal_positive(capsys):
    rc = main(
        [
            "maximal",
            "--property",
            fixture("maximal", "desc_empty_altering.json"),
            "--language",
            fixture("maximal", "lang_universal_dna.fa"),
        ]
    )
    assert rc == 0
    assert capsys.readouterr().out.strip() == "yes"


def test_maximal_negative_suggests_word(capsys):
    rc = main(
        [
            "maximal",
            "--property",
            fixture("maximal", "desc_empty_altering.json"),
            "--language",
            fixture("maximal", "lang_nonempty_dna.fa"),
        ]
    )
    assert rc == 1
    assert capsys.readouterr().out.strip() == "not maximal, can add: ''"


def test_maximal_trusted_assertion_via_bound_zero(capsys):
    args = [
        "maximal",
        "--property",
        fixture("maximal", "desc_ph_minus_identity.json"),
        "--language",
        fixture("maximal", "lang_aaa_cct.fa"),
    ]
    rc = main(args + ["--assertion-bound", "0"])
    assert rc == 1
    assert capsys.readouterr().out.strip() == "not maximal, can add: ''"
    # at the default bound the machine is exposed as not input-altering
    rc = main(args)
    assert rc == 2
    assert "error:" in capsys.readouterr().err


def test_maximal_rejects_non_satisfying_language(tmp_path, capsys):
    lang = write_language(tmp_path, "bad.fa", ["AT"])
    rc = main(
        [
            "maximal",
            "--property",
            fixture("maximal", "desc_zero_one_loop.json"),
            "--language",
            lang,
        ]
    )
    assert rc == 2  # alphabet mismatch: property over 01, language over DNA
    assert "error:" in capsys.readouterr().err


def test_maximal_epsilon_fix(tmp_path, capsys):
    zo_lang = tmp_path / "zero.fa"
    zo_lang.write_text("@NFA 1 * 0\n0 0 1\n")
    rc = main(
        [
            "maximal",
            "--property",
            fixture("maximal", "desc_zero_one_loop.json"),
            "--language",
            str(zo_lang),
        ]
    )
    assert rc == 1
    assert capsys.readouterr().out.strip() == "not maximal, can add: '00'"


# -- build-property ------------------------------------------------------------


def test_build_dna_property_descriptor(capsys):
    rc = main(["build-property", "--dna", "compliant", "--variant", "normal"])
    assert rc == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["name"] == "compliant (normal)"
    assert doc["kind"] == "S"
    assert doc["class"] == "altering"
    assert doc["theta"]["table"] == {"A": "T", "C": "G", "G": "C", "T": "A"}
    machine = parse_fado(doc["transducer"])
    assert isinstance(machine, Transducer)


def test_build_trajectory_property_descriptor(capsys):
    rc = main(
        ["build-property", "--trajectory", "1*0+1*", "0+", "--strict", "--theta", "dna-delta"]
    )
    assert rc == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["name"] == "bond-free(1*0+1*; 0+; strict)"
    assert doc["kind"] == "S" and doc["class"] == "unrestricted"


def test_build_property_to_file_then_use_it(tmp_path, capsys):
    out = tmp_path / "desc.json"
    rc = main(["build-property", "--dna", "nonoverlapping", "--variant", "strict", "-o", str(out)])
    assert rc == 0
    lang = write_language(tmp_path, "l.fa", ["AT"])
    rc = main(["satisfies", "--property", str(out), "--language", lang])
    assert rc == 1  # AT is its own delta-image
    assert "NOT satisfied" in capsys.readouterr().out


def test_build_property_unknown_name_errors(capsys):
    rc = main(["build-property", "--dna", "nope", "--variant", "strict"])
    assert rc == 2
    assert "error:" in capsys.readouterr().err


# -- pcp -----------------------------------------------------------------------


SOLVABLE = json.dumps({"alpha": ["0", "01"], "beta": ["00", "1"]})


def test_pcp_solve_inline(capsys):
    rc = main(["pcp", "solve", "--instance", SOLVABLE, "--bound", "3"])
    assert rc == 0
    assert capsys.readouterr().out.strip() == "solution: 0,1"


def test_pcp_solve_unsolvable(capsys):
    inst = json.dumps({"alpha": ["0"], "beta": ["1"]})
    rc = main(["pcp", "solve", "--instance", inst, "--bound", "5"])
    assert rc == 1
    assert "no solution within 5 tiles" in capsys.readouterr().out


def test_pcp_check(capsys):
    assert main(["pcp", "check", "--instance", SOLVABLE, "--solution", "0,1"]) == 0
    assert "valid" in capsys.readouterr().out
    assert main(["pcp", "check", "--instance", SOLVABLE, "--solution", "0"]) == 1
    assert "invalid" in capsys.readouterr().out
    assert main(["pcp", "check", "--instance", SOLVABLE]) == 2


def test_pcp_reduce_then_solve(tmp_path, capsys):
    out = tmp_path / "reduced.json"
    rc = main(
        ["pcp", "reduce", "--instance", SOLVABLE, "--theta", "mirror:01", "-o", str(out)]
    )
    assert rc == 0
    doc = json.loads(out.read_text())
    assert len(doc["alpha"]) == 4 and doc["theta"]["mode"] == "antimorphic"
    rc = main(["pcp", "solve", "--instance", str(out), "--bound", "6"])
    assert rc == 0
    out_text = capsys.readouterr().out
    assert out_text.strip().startswith("solution:")


def test_pcp_reduce_requires_theta(capsys):
    rc = main(["pcp", "reduce", "--instance", SOLVABLE])
    assert rc == 2


def test_pcp_theta_instance_solve(capsys):
    inst = json.dumps({"alpha": ["01"], "beta": ["10"], "theta": "mirror:01"})
    rc = main(["pcp", "solve", "--instance", inst, "--bound", "2"])
    assert rc == 0
    assert capsys.readouterr().out.strip() == "solution: 0"


# -- transducer check -----------------------------------------------------------


def test_transducer_check_identity_modes(capsys):
    rc = main(
        ["transducer", "check", fixture("fado", "t_identity_ab.fa"), "--mode", "identity"]
    )
    assert rc == 0
    rc = main(["transducer", "check", fixture("fado", "t_swap_ab.fa"), "--mode", "identity"])
    assert rc == 1
    assert "not identity" in capsys.readouterr().out


def test_transducer_check_functional(capsys):
    rc = main(
        ["transducer", "check", fixture("fado", "t_identity_ab.fa"), "--mode", "functional"]
    )
    assert rc == 0
    rc = main(
        ["transducer", "check", fixture("fado", "t_insert_one_ab.fa"), "--mode", "functional"]
    )
    assert rc == 1


def test_transducer_check_altering_inline(capsys):
    inline = "@Transducer 0 * 0\\n0 A A 0\\n0 C C 0\\n0 G G 0\\n0 T T 0"
    rc = main(
        ["transducer", "check", inline, "--mode", "altering", "--theta", "dna-delta", "--bound", "3"]
    )
    assert rc == 1
    assert "counterexample: 'AT'" in capsys.readouterr().out


def test_transducer_check_preserving_needs_theta(capsys):
    rc = main(
        ["transducer", "check", fixture("fado", "t_identity_ab.fa"), "--mode", "preserving"]
    )
    assert rc == 2


def test_transducer_check_rejects_nfa_input(capsys):
    rc = main(
        ["transducer", "check", fixture("fado", "nfa_finite.fa"), "--mode", "identity"]
    )
    assert rc == 2


# -- misc ------------------------------------------------------------------------


def test_malformed_inline_descriptor(capsys):
    rc = main(["satisfies", "--property", "{not json", "--language", "whatever.fa"])
    assert rc == 2


def test_missing_language_file(capsys):
    rc = main(
        [
            "satisfies",
            "--property",
            fixture("maximal", "desc_hamming_w.json"),
            "--language",
            "no-such-file.fa",
        ]
    )
    assert rc == 2


def test_seed_flag_is_accepted(capsys):
    rc = main(["--seed", "7", "pcp", "solve", "--instance", SOLVABLE, "--bound", "3"])
    assert rc == 0
