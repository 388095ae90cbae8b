import json
import subprocess
import sys

import pytest

from flagq import cli, qhring, table, weyl


def run_cli(args, env_extra=None):
    import os

    env = dict(os.environ)
    env.pop("FLAGQ_CACHE", None)
    if env_extra:
        env.update(env_extra)
    return subprocess.run(
        [sys.executable, "-m", "flagq.cli", *args],
        capture_output=True,
        text=True,
        env=env,
    )


# --- table persistence ------------------------------------------------------

def test_table_round_trip(tmp_path):
    t = table.build_table(3)
    path = tmp_path / "t3.txt"
    t.save(path)
    loaded = table.StructureTable.load(path)
    assert loaded.n == 3
    for key, cls in t.entries.items():
        assert loaded.entries[key] == {k: int(c) for k, c in cls.items() if c}
    # byte-identical re-save
    path2 = tmp_path / "t3b.txt"
    loaded.metadata = dict(t.metadata)
    loaded.save(path2)
    assert path.read_bytes() == path2.read_bytes()


def test_table_symmetry():
    t = table.build_table(3)
    perms = weyl.all_permutations(3)
    for u in perms:
        for v in perms:
            assert t.get(u, v) == t.get(v, u)


def test_table_rejects_corruption(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("# flagq-table version=1 n=3\n3 123 213 xyz 0,0 1\n")
    with pytest.raises(ValueError) as err:
        table.StructureTable.load(path)
    assert "bad.txt:2" in str(err.value)


def test_table_degree_cap():
    t = table.build_table(3, degree_cap=2)
    perms = weyl.all_permutations(3)
    for u in perms:
        for v in perms:
            present = t.get(u, v) is not None
            assert present == (weyl.length(u) + weyl.length(v) <= 2)


# --- CLI --------------------------------------------------------------------

def test_cli_product_golden():
    r = run_cli(["product", "--n", "5", "--u", "4 3 5 1 2", "--v-word", "2,3,4"])
    assert r.returncode == 0
    assert r.stdout.strip() == "q3*q4*s[3,4,2,3,1,2] + q3*q4*s[4,2,3,1,2,1]"


def test_cli_product_json_schema():
    r = run_cli(
        [
            "product",
            "--n",
            "5",
            "--u",
            "43512",
            "--v-word",
            "2,3,4",
            "--format",
            "json",
        ]
    )
    data = json.loads(r.stdout)
    assert data["schema"] == 1
    assert {t["w"] for t in data["terms"]} == {"45123", "53124"}
    assert all(t["q"] == [0, 0, 1, 1] and t["coeff"] == 1 for t in data["terms"])


def test_cli_verify_pass_and_exit_codes():
    r = run_cli(["verify", "seidel", "--n", "3"])
    assert r.returncode == 0
    assert "6/6 pass" in r.stdout


def test_cli_usage_errors():
    # conflicting permutation inputs
    r = run_cli(["product", "--n", "3", "--u", "213", "--u-word", "1", "--v", "132"])
    assert r.returncode == 2
    # missing required flag
    r = run_cli(["product", "--n", "3", "--v", "132"])
    assert r.returncode == 2
    # malformed permutation
    r = run_cli(["product", "--n", "3", "--u", "221", "--v", "132"])
    assert r.returncode == 2
    # n too small
    r = run_cli(["verify", "seidel", "--n", "1"])
    assert r.returncode == 2


def test_cli_reduce_golden():
    r = run_cli(
        [
            "reduce",
            "--n",
            "4",
            "--u-word",
            "3,2,1,2",
            "--v-word",
            "2,1,2",
            "--w-word",
            "1,2,3",
            "--lambda",
            "1,1,0",
        ]
    )
    assert r.returncode == 0
    lines = r.stdout.strip().splitlines()
    assert lines[0].strip().startswith("N[u=4213")
    assert lines[-1] == "= 1"


def test_cli_explore_row_count():
    r = run_cli(["explore", "--n", "4", "--i", "2", "--j", "2", "--format", "json"])
    data = json.loads(r.stdout)
    assert len(data["rows"]) == 24


def test_cli_determinism():
    args = ["k-product", "--n", "4", "--hook", "2", "--v-word", "1,2"]
    a, b = run_cli(args), run_cli(args)
    assert a.stdout == b.stdout
    assert a.stdout.strip() == "O[1,2,3,2] + O[2,3,1,2] - O[1,2,3,1,2]"


def test_cli_table_cache_and_env(tmp_path):
    cache = tmp_path / "cache"
    r = run_cli(["table", "--n", "3", "--cache-dir", str(cache)])
    assert r.returncode == 0
    path = cache / "table_n3.txt"
    assert path.exists()
    # cached answers match the engine
    r = run_cli(
        ["product", "--n", "3", "--u-word", "2,1", "--v-word", "1", "--cache-dir", str(cache)]
    )
    direct = cli.render_class(
        qhring.quantum_product(weyl.from_word([2, 1], 3), weyl.from_word([1], 3))
    )
    assert r.stdout.strip() == direct
    # FLAGQ_CACHE overrides --cache-dir
    other = tmp_path / "elsewhere"
    r = run_cli(
        ["table", "--n", "3", "--cache-dir", str(other)],
        env_extra={"FLAGQ_CACHE": str(cache)},
    )
    assert r.returncode == 0
    assert not other.exists()


def test_cli_qk_projection_text():
    r = run_cli(
        [
            "qk-conjecture",
            "--n",
            "6",
            "--hook",
            "3",
            "--u-word",
            "5,3,4,1,2,3,2,1",
            "--project",
            "1,2,4,5",
        ]
    )
    assert r.returncode == 0
    assert "projected:" in r.stdout
    assert "+ q3*O(1,)" in r.stdout
    assert "- O(3, 3, 2)" in r.stdout


def test_render_class_edge_cases():
    assert cli.render_class({}) == "0"
    assert cli.render_class({((0, 0), (1, 2, 3)): 1}) == "s[]"
    assert cli.render_class({((1, 0), (2, 1, 3)): -3}) == "-3*q1*s[1]"
