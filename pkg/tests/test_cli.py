import io
import json

import pytest

from fmnumber import cli


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def result(*argv):
    code, out, err = run(*argv)
    assert code == 0, err
    payload = json.loads(out)
    assert payload["schema"] == 1
    return payload["result"]


def test_fmcount_example_i(config_path):
    res = result("fmcount", "--config", str(config_path("example_i.json")))
    assert res["fm_count_exact"] == 1
    assert res["lower_bound"] == "1/1"


def test_fmcount_flags_and_n1_override():
    res = result("fmcount", "--kind", "In", "--aut", "2", "--m", "13", "--xi", "1", "--n1", "2")
    assert res["fm_count_exact"] is None
    assert res["lower_bound"] == "3/1"


def test_sweep_single_row():
    code, out, _ = run("sweep", "--kind", "In", "--aut", "2", "--range", "3..3", "--format", "tsv")
    assert code == 0
    header, row = out.strip().split("\n")
    cols = dict(zip(header.split("\t"), row.split("\t")))
    assert cols["fm_exact"] == "1"
    assert (cols["lower_bound_num"], cols["lower_bound_den"]) == ("1", "1")


def test_validate_failure(config_path):
    code, _, err = run("validate", "--config", str(config_path("euler_sum_10.json")))
    assert code == 1
    payload = json.loads(err)
    assert payload["error"] == "InvalidConfig"
    assert payload["report"]["euler_sum"] == 10


def test_validate_ok(config_path):
    assert result("validate", "--config", str(config_path("example_ii.json")))["valid"]


def test_orbit_and_iprime():
    res = result("orbit", "--kind", "smooth", "--aut", "6", "--m", "7", "--xi", "1,4")
    assert [p["coords"] for p in res["orbit"]][:2] == [[1, 4], [3, 5]]
    res = result("iprime", "--kind", "smooth", "--aut", "4", "--m", "5", "--xi", "1,3")
    assert res["size"] == 4


def test_partners_tsv():
    code, out, _ = run("partners", "--kind", "In", "--aut", "2", "--m", "12", "--xi", "1", "--format", "tsv")
    assert code == 0
    assert out.splitlines()[1:] == ["0\t1\t1,11", "1\t5\t5,7"]


def test_stabilizer_rows():
    code, out, _ = run("stabilizer", "--s", "2", "--points", "0:x,1:x,inf:x", "--format", "tsv")
    assert code == 0
    assert out.splitlines() == ["a\tb\tc\td", "1/1\t0/1\t0/1\t1/1", "1/1\t0/1\t1/1\t-1/1"]


def test_stabilizer_config(config_path):
    res = result("stabilizer", "--config", str(config_path("example_i.json")))
    assert res["order"] == 1
    assert res["n1_bound"]["certified"]


def test_threefold(config_path):
    res = result("threefold", str(config_path("example_ii.json")), str(config_path("companion.json")))
    assert res["diamond"] == [[1, 0, 0, 1], [0, 19, 19, 0], [0, 19, 19, 0], [1, 0, 0, 1]]
    assert res["kodaira_dim"] == 1


def test_threefold_not_smooth(config_path):
    code, _, err = run("threefold", str(config_path("example_ii.json")), str(config_path("example_ii.json")))
    assert code == 1
    assert json.loads(err)["error"] == "NotSmooth"


def test_family(config_path):
    res = result(
        "family", "--config", str(config_path("family_base.json")),
        "--companion", str(config_path("companion.json")), "--N", "5",
    )
    assert res["certificate"]["reps"] == [1, 3, 5, 7, 9]


@pytest.mark.parametrize(
    "argv",
    [
        ["bogus"],
        ["sweep", "--kind", "In", "--aut", "2", "--range", "3-4"],
        ["orbit", "--kind", "smooth"],
        ["stabilizer"],
    ],
)
def test_usage_errors(argv):
    assert run(*argv)[0] == 2


def test_missing_file():
    code, _, err = run("fmcount", "--config", "/nonexistent.json")
    assert code == 1
    assert "error" in json.loads(err)


def test_domain_error_exit_one():
    code, _, err = run("iprime", "--kind", "In", "--aut", "2", "--m", "9", "--xi", "3")
    assert code == 1
    assert json.loads(err)["error"] == "NotPrimitive"


def test_deterministic(config_path):
    argv = ["family", "--config", str(config_path("family_base.json")),
            "--companion", str(config_path("companion.json")), "--N", "3"]
    assert run(*argv)[1] == run(*argv)[1]


def test_cli_is_thin():
    import inspect

    src = inspect.getsource(cli)
    for forbidden in ("totient(", "% m", "gcd("):
        assert forbidden not in src
