from itertools import combinations

import msgspec
import pytest

from schemas import OutputEnvelope


def test_check_refinable(invoke_json):
    envelope = invoke_json("check", 1, 2, 3, 5, 6, 8, 9, 11, 13)
    assert envelope["schema-version"] == "1"
    assert envelope["command"] == "check"
    result = envelope["result"]
    assert result["verdict"] == "refinable"
    assert result["witness"] == {"part": 11, "summands": [4, 7]}
    assert result["forbidden-vector"] is not None


@pytest.mark.parametrize(
    "parts",
    [
        (1, 2, 3),
        (1, 2, 3, 4, 5, 8, 10, 11, 12, 14, 17),
    ],
)
def test_check_unrefinable(invoke_json, parts):
    result = invoke_json("check", *parts)["result"]
    assert result["verdict"] == "unrefinable"
    assert "witness" not in result


def test_check_oracle_has_no_vector(invoke_json):
    result = invoke_json("check", "--oracle", 1, 2, 3, 4, 5, 8, 10, 11, 12, 14, 15, 17, 18)["result"]
    assert result["witness"] == {"part": 15, "summands": [6, 9]}
    assert "forbidden-vector" not in result


def test_check_trace(invoke_json):
    result = invoke_json("check", "--trace", 1, 2, 3, 4, 5, 8, 10, 11, 12, 14, 17)["result"]
    closures = [s["entries"] for s in result["trace"] if s["stage"] == "closure"]
    assert [24, 7, 20, 9, 16, 23] in closures


def test_assert_unrefinable_exit_code(invoke):
    assert invoke("check", "--assert-unrefinable", 1, 2, 3, 5, 6, 8, 9, 11, 13).exit_code == 1
    assert invoke("check", "--assert-unrefinable", 1, 2, 3).exit_code == 0


@pytest.mark.parametrize("args", [("check", 1, 1, 2), ("check", 3, 2), ("check", 4), ("check", "--fast", "--both", 1, 2)])
def test_invalid_input_exit_code(invoke, args):
    result = invoke(*args)
    assert result.exit_code == 2
    error = msgspec.json.decode(result.stderr)
    assert error["diagnostics"][0]["code"]


@pytest.mark.parametrize("top", range(2, 15))
def test_check_both_never_disagrees(invoke_json, top):
    for size in range(1, top):
        for chosen in combinations(range(1, top), size):
            assert invoke_json("check", "--both", *chosen, top)["result"]["method"] == "both"


def test_disagreement_exits_3(invoke, monkeypatch):
    monkeypatch.setattr("controllers.check_controller.check_unrefinable_fast", lambda partition: True)
    result = invoke("check", "--both", 1, 2, 3, 5, 6, 8, 9, 11, 13)
    assert result.exit_code == 3
    diagnostic = msgspec.json.decode(result.stderr)["diagnostics"][0]
    assert diagnostic["code"] == "oracle_disagreement"
    assert "11=4+7" in diagnostic["detail"]


def test_unexpected_failure_exits_3(invoke, monkeypatch):
    def broken(partition):
        raise ZeroDivisionError("division by zero")

    monkeypatch.setattr("controllers.check_controller.check_unrefinable_fast", broken)
    result = invoke("check", 1, 2, 3)
    assert result.exit_code == 3
    diagnostic = msgspec.json.decode(result.stderr)["diagnostics"][0]
    assert diagnostic["code"] == "internal"
    assert diagnostic["detail"].startswith("ZeroDivisionError")


def test_oracle_sweep_through_cli(invoke_json):
    result = invoke_json("verify", "oracle", "--max-part", 14)["result"]
    assert result.get("disagreements", []) == []


def test_vector_command(invoke_json):
    result = invoke_json("vector", "--missing", "6,7,9,13")["result"]
    assert result["entries"] == [24, 7, 20, 9, 16, 23]
    assert result["saturated"] is True
    assert result["finiteness"] == "finite"
    assert invoke_json("vector", "--missing", "6,10")["result"]["entries"] == [36, None, 26, None, 10, None]


def test_canonical(invoke_json):
    assert invoke_json("canonical", 8)["result"]["partition"] == [1, 3, 4]


def test_semigroup_info(invoke_json):
    result = invoke_json("semigroup", "--gaps", "1,2,4,5,7,10,13")["result"]
    assert (result["frobenius"], result["genus"], result["multiplicity"]) == (13, 7, 3)
    assert result["semigroup"] is True
    assert invoke_json("semigroup", "--gaps", "1,2,5,6,8", "info")["result"]["semigroup"] is False


def test_semigroup_subcommands(invoke_json):
    assert invoke_json("semigroup", "--generators", "3,8", "msg")["result"]["generators"] == [3, 8]
    assert invoke_json("semigroup", "--gaps", "1,2,4,5,7,10,13", "apery", 3)["result"]["elements"] == [0, 16, 8]
    compare = invoke_json("semigroup", "--gaps", "1,2,3,5,6,9,13", "compare")["result"]
    assert compare["forbidden-vector"] == [8, 17, 10, 7]


@pytest.mark.parametrize(
    "args",
    [
        ("semigroup", "--generators", "2,4"),
        ("semigroup", "--gaps", "1,2,x"),
        ("semigroup",),
        ("semigroup", "--gaps", "1,2,5,6,8", "msg"),
    ],
)
def test_semigroup_errors(invoke, args):
    assert invoke(*args).exit_code == 2


def test_young(invoke_json, invoke):
    assert invoke_json("young", "--gaps", "1,2,4,5,7,10,13")["result"]["profile"] == [7, 5, 3, 2, 2, 1, 1]
    verdict = invoke_json("young", "--gaps", "1,2,5,6,8", "--criterion", "unrefinable")["result"]
    assert verdict["verdict"] is True
    assert invoke_json("young", "--gaps", "1")["result"]["profile"] == [1]
    assert invoke("young", "--gaps", "").exit_code == 2


def test_young_ascii(invoke):
    result = invoke("young", "--gaps", "1,2,4,5,7,10,13", "--hooks", "--ascii")
    assert result.exit_code == 0
    assert "first column: 13 10 7 5 4 2 1" in result.stdout


def test_enum(invoke_json, invoke):
    assert invoke_json("enum", "--max-part", 13, "--mex", 3)["result"]["count"] == 12
    assert invoke_json("enum", "--max-part", 2, "--list")["result"]["listing"] == [[1, 2]]
    symmetric = invoke_json("enum", "--frobenius", 13, "--symmetric")["result"]["count"]
    assert symmetric == invoke_json("enum", "--max-part", 13, "--maximal-missing")["result"]["count"]
    assert invoke("enum", "--max-part", 31).exit_code == 2
    assert invoke("enum").exit_code == 2


@pytest.mark.parametrize(
    "args",
    [
        ("--weight", 12, "--mex", 3),
        ("--frobenius", 13, "--maximal-missing"),
        ("--max-part", 13, "--symmetric"),
        ("--max-part", 13, "--maximal"),
        ("--frobenius", 13, "--maximal"),
        ("--weight", 12, "--symmetric"),
    ],
)
def test_enum_rejects_flags_outside_the_family(invoke, args):
    result = invoke("enum", *args)
    assert result.exit_code == 2
    assert msgspec.json.decode(result.stderr)["diagnostics"][0]["code"] == "conflicting_flags"


def test_verify_maximal_subset_reports_counterexamples(invoke):
    result = invoke("verify", "maximal-subset", "--n-max", 6)
    assert result.exit_code == 1
    report = msgspec.json.decode(result.stdout)["result"]
    assert report["holds"] is False
    assert sorted(report["counterexamples"]) == [[1, 2, 3, 4, 7], [1, 2, 3, 4, 8]]


def test_verify_prime_identity(invoke_json, invoke):
    assert invoke_json("verify", "prime-identity", "--primes", "5,7,11,13")["result"]["all-equal"] is True
    assert invoke("verify", "prime-identity", "--primes", "4").exit_code == 2
    assert invoke("verify", "prime-identity", "--primes", "3").exit_code == 2


def test_census_and_decompose(invoke_json):
    census = invoke_json("census", "--frobenius", 7)["result"]
    assert census["semigroups"] == sum(row["semigroups"] for row in census["by-genus"])
    decomposition = invoke_json("decompose", "--max-part", 13)["result"]
    assert {"mex": 3, "count": 12} in decomposition["strata"]


def test_lattice(invoke_json, invoke):
    result = invoke_json("lattice", 1, 2, 4, 5, 7, 10, 13)["result"]
    assert result["node-count"] == 12
    assert result["top"] == [[6, 8, 9, 11, 12]]
    assert [[6], [6, 9], 9] in result["edges"]
    assert invoke_json("lattice", 1, 2, 3)["result"]["node-count"] == 1
    assert invoke("lattice", 1, 2, 3, 5, 6, 8, 9, 11, 13).exit_code == 2


def test_lattice_dot(invoke):
    result = invoke("lattice", "--dot", 1, 2, 4, 5, 7, 10, 13)
    assert result.exit_code == 0
    assert result.stdout.startswith("digraph")
    assert '"{6}" -> "{6,9}" [label="9"];' in result.stdout
    assert '"{6,8,9,11,12}"' in result.stdout


@pytest.mark.parametrize(
    "args",
    [
        ("check", 1, 2, 3, 5, 6, 8, 9, 11, 13),
        ("semigroup", "--gaps", "1,2,3,5,6,9,13", "compare"),
        ("enum", "--max-part", 9, "--list"),
        ("lattice", 1, 2, 4, 5, 7, 10, 13),
    ],
)
def test_envelope_round_trip(invoke, args):
    raw = invoke(*args).stdout.strip().encode()
    decoded = msgspec.json.decode(raw, type=OutputEnvelope)
    assert msgspec.json.encode(decoded) == raw


def test_output_file(invoke, tmp_path):
    target = tmp_path / "out.json"
    result = invoke("--output", str(target), "canonical", 6)
    assert result.exit_code == 0
    assert result.stdout == ""
    assert msgspec.json.decode(target.read_bytes())["result"]["partition"] == [1, 2, 3]
