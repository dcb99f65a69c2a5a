import json

import pytest

from dp1.cli import main, sample_params, search_params
from dp1.surface import SurfaceParams

WORKED = {"a": "0", "b": "0", "c": "1", "d": "2", "e": "3", "f": ["0", "0", "0", "1"]}
WORKED_2 = {"a": "0", "b": "0", "c": "1", "d": "0", "e": "2", "f": ["0", "0", "0", "1"]}
SINGULAR = {"a": "0", "b": "0", "c": "1", "d": "2", "e": "1", "f": ["0", "0", "0", "1"]}


@pytest.fixture
def surface_file(tmp_path):
    def write(obj, name="surface.json"):
        path = tmp_path / name
        path.write_text(json.dumps(obj))
        return str(path)

    return write


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip().startswith(("{", "[")) else out


def test_check_worked(surface_file, capsys):
    code, out = run(
        capsys, "check", "--surface", surface_file(WORKED), "--seed", "[-1:1:-1:1]"
    )
    assert code == 0
    assert out["overall"] is True


def test_check_failing_seed_exit_one(surface_file, capsys):
    code, out = run(
        capsys, "check", "--surface", surface_file(WORKED), "--seed", "[1:2:0:1]"
    )
    assert code == 1
    assert out["separable"] is False and out["slope_condition"] is False


def test_classify_worked(surface_file, capsys):
    code, out = run(capsys, "classify", "--surface", surface_file(WORKED))
    assert code == 0
    assert out["type"] == "2xA2"
    assert out["identity_verified"] is True


def test_smooth_singular_fixture(surface_file, capsys):
    code, out = run(capsys, "smooth", "--surface", surface_file(SINGULAR))
    assert code == 1
    assert out["verdict"] == "singular"
    assert out["witnesses"]


def test_smooth_with_primes(surface_file, capsys):
    code, out = run(
        capsys, "smooth", "--surface", surface_file(WORKED), "--primes", "7,11"
    )
    assert code == 0
    assert out["cross_check"]["7"] == "smooth" or out["cross_check"][7] == "smooth"


def test_identities(surface_file, capsys):
    code, out = run(capsys, "identities", "--surface", surface_file(WORKED_2))
    assert code == 0 and out["identity_verified"] is True


def test_generate_json_roundtrip(surface_file, capsys):
    code, out = run(
        capsys,
        "generate", "--surface", surface_file(WORKED), "--seed", "[-1:1:-1:1]",
        "--n", "5", "--t-height", "3", "--depth", "1",
    )
    assert code == 0
    assert out["all_verified"] is True
    assert len(out["points"]) >= 6
    reparsed = SurfaceParams.from_json(out["surface"])
    assert reparsed == SurfaceParams.from_json(WORKED)


def test_generate_csv(surface_file, tmp_path, capsys):
    out_path = tmp_path / "points.csv"
    code = main([
        "generate", "--surface", surface_file(WORKED), "--seed", "[-1:1:-1:1]",
        "--n", "3", "--t-height", "2", "--format", "csv", "--out", str(out_path),
    ])
    assert code == 0
    lines = out_path.read_text().strip().splitlines()
    assert lines[0] == "t,x,y,provenance"
    assert any("tangent" in line for line in lines[1:])


def test_sweep_command(surface_file, capsys):
    code, out = run(
        capsys, "sweep", "--surface", surface_file(WORKED), "--seed", "[-1:1:-1:1]",
        "--t-height", "2",
    )
    assert code == 0
    assert any(p["x"] == "17/4" for p in out["points"])


def test_oracle_command(surface_file, capsys):
    code, out = run(
        capsys, "oracle", "--surface", surface_file(WORKED),
        "--x-num", "5", "--x-den", "1", "--t-num", "1", "--t-den", "1",
    )
    assert code == 0
    fibers = {p["t"] for p in out["points"]}
    assert {"0", "-1"} <= fibers


def test_fibers_command(surface_file, capsys):
    code, out = run(capsys, "fibers", "--surface", surface_file(WORKED))
    assert code == 0
    assert out["total_multiplicity"] == 12
    assert out["z12_coefficient"] == "-432"


def test_input_error_exit_two(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("not json")
    code = main(["classify", "--surface", str(bad)])
    assert code == 2


def test_unknown_flag_exit_two(surface_file, capsys):
    code = main(["classify", "--surface", surface_file(WORKED), "--bogus"])
    assert code == 2


def test_search_params_includes_worked_tuple():
    worked = SurfaceParams.from_json(WORKED)
    out = search_params([worked], (5, 1, 2, 2))
    row = out["rows"][0]
    assert row["smooth"] == "smooth"
    assert row["certified"] is True
    assert row["seed"] == "[-1:1:-1:1]"
    assert row["picard_rank"] == "not computed"


def test_search_params_reproducible(surface_file, capsys):
    code1, out1 = run(
        capsys, "search-params", "--samples", "3", "--rng-seed", "42", "--height", "2",
        "--x-num", "2", "--t-num", "1", "--t-den", "1",
    )
    code2, out2 = run(
        capsys, "search-params", "--samples", "3", "--rng-seed", "42", "--height", "2",
        "--x-num", "2", "--t-num", "1", "--t-den", "1",
    )
    assert code1 == code2 == 0
    assert out1 == out2
    assert out1["summary"]["scanned"] == 3


def test_search_params_zero_samples_rejected(capsys):
    code = main(["search-params", "--samples", "0"])
    assert code == 2


def test_sample_params_height_bound():
    import random

    rng = random.Random(1)
    for _ in range(20):
        p = sample_params(rng, 3)
        for k in ("a", "b", "c", "d", "e", "f0", "f1", "f2", "f3"):
            v = getattr(p, k)
            assert abs(v.numerator) <= 3 * 3 and v.denominator <= 3
        assert p.f3 != 0
