import json
from fractions import Fraction

import pytest

from quadpreim.cli import main
from quadpreim.dynamics import PreimageTree
from quadpreim.elliptic import WeierstrassCurve
from quadpreim.search import SearchRecord


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_tree_human(capsys):
    code, out, _ = run_cli(capsys, "tree", "--c", "-24361/14400",
                           "--a", "-42/25", "--depth", "3")
    assert code == 0
    assert "signature: 2,4,6" in out
    assert "distinct values across levels: 12" in out


def test_tree_structured_roundtrip(capsys):
    code, out, _ = run_cli(capsys, "tree", "--c", "-24361/14400",
                           "--a", "-42/25", "--depth", "3",
                           "--format", "structured")
    assert code == 0
    payload = json.loads(out.strip())
    tree = PreimageTree.from_json(payload)
    assert tree.signature() == (2, 4, 6)
    assert tree.c == Fraction(-24361, 14400)


def test_tree_parse_error_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "tree", "--c", "x", "--a", "1", "--depth", "1")
    assert code == 2
    assert "position" in err


def test_unknown_flag_is_usage_error(capsys):
    code, _, _ = run_cli(capsys, "tree", "--c", "1", "--a", "1",
                         "--depth", "1", "--bogus")
    assert code == 2


def test_critical_human(capsys):
    code, out, _ = run_cli(capsys, "critical", "--n", "3")
    assert code == 0
    assert "4*c^3 + 6*c^2 + 2*c + 1" in out
    assert "256*a^3 + 368*a^2 + 104*a + 23" in out


def test_critical_structured(capsys):
    code, out, _ = run_cli(capsys, "critical", "--n", "2",
                           "--format", "structured")
    payload = json.loads(out.strip())
    assert payload["critical_poly_c"] == ["1", "2"]
    assert payload["avalue_minpoly"] == ["1", "4"]


def test_ec_specialize_e24(capsys):
    code, out, _ = run_cli(capsys, "ec", "specialize-e24", "--a", "1")
    assert code == 0
    assert "j = -59319/625" in out
    code, out, _ = run_cli(capsys, "ec", "specialize-e24", "--a", "1",
                           "--format", "structured")
    payload = json.loads(out.strip())
    curve = WeierstrassCurve.from_json(payload)
    assert curve.a2 == 3 and curve.a4 == 16 and curve.a6 == 48
    assert payload["delta"] == "625"


def test_ec_order_and_torsion(capsys):
    code, out, _ = run_cli(capsys, "ec", "order", "--a2", "3", "--a4", "16",
                           "--a6", "48", "--x", "2", "--y", "10")
    assert code == 0 and "order: 4" in out
    code, out, _ = run_cli(capsys, "ec", "order", "--a2", "1", "--a4", "-9",
                           "--a6", "7", "--x", "3", "--y", "4")
    assert code == 0 and "infinite" in out
    code, out, _ = run_cli(capsys, "ec", "torsion", "--a2", "3", "--a4", "16",
                           "--a6", "48", "--format", "structured")
    payload = json.loads(out.strip())
    assert payload["invariants"] == [1, 4]


def test_ec_off_curve_point_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "ec", "order", "--a2", "3", "--a4", "16",
                           "--a6", "48", "--x", "2", "--y", "11")
    assert code == 2
    assert "residue" in err


def test_model_command(capsys):
    code, out, _ = run_cli(capsys, "model", "--tag", "224")
    assert code == 0
    assert out.splitlines()[0] == "variables: q, r, s, t, z"
    assert sum(1 for line in out.splitlines() if line.startswith("g")) == 3
    code, out, _ = run_cli(capsys, "model", "--tag", "3",
                           "--format", "structured")
    payload = json.loads(out.strip())
    assert payload["variables"] == ["z0", "z1", "z2", "z3"]
    assert len(payload["generators"]) == 2


def test_search_structured_roundtrip(capsys):
    code, out, _ = run_cli(capsys, "search", "--strategy", "thirdpair",
                           "--height-bound", "80", "--depth", "3",
                           "--target", "2,4,6", "--format", "structured")
    assert code == 0
    lines = [ln for ln in out.splitlines() if ln.strip()]
    assert lines
    for line in lines:
        record = SearchRecord.from_json(json.loads(line))
        assert all(s >= t for s, t in zip(record.signature, (2, 4, 6)))


def test_search_shard_flag(capsys):
    code, out, _ = run_cli(capsys, "search", "--strategy", "forward",
                           "--height-bound", "3", "--depth", "2",
                           "--target", "2,2", "--shard", "1/2",
                           "--format", "structured")
    assert code == 0


def test_search_jobs_merge_matches_single(capsys):
    single = run_cli(capsys, "search", "--strategy", "thirdpair",
                     "--height-bound", "80", "--depth", "3",
                     "--target", "2,4,6", "--format", "structured")
    jobs = run_cli(capsys, "search", "--strategy", "thirdpair",
                   "--height-bound", "80", "--depth", "3",
                   "--target", "2,4,6", "--jobs", "2",
                   "--format", "structured")
    assert single[0] == 0 and jobs[0] == 0
    parse = lambda out: {(json.loads(l)["c"], json.loads(l)["a"])
                         for l in out.splitlines() if l.strip()}
    assert parse(single[1]) == parse(jobs[1])
    assert parse(single[1])


def test_search_bad_height_bound(capsys):
    code, _, err = run_cli(capsys, "search", "--strategy", "thirdpair",
                           "--depth", "3", "--target", "2,4,6")
    assert code == 2


def test_checkpoint_dir_env_var(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("QUADPREIM_CHECKPOINT_DIR", str(tmp_path))
    code, _, _ = run_cli(capsys, "search", "--strategy", "forward",
                         "--height-bound", "2", "--depth", "2",
                         "--target", "2,2")
    assert code == 0
    checkpoints = list(tmp_path.glob("*.ckpt"))
    assert len(checkpoints) == 1
    payload = json.loads(checkpoints[0].read_text())
    assert payload["config"]["strategy"] == "forward"


def test_torsion_budget_error_exits_one(capsys, tmp_path):
    conf = tmp_path / "tight.conf"
    conf.write_text("trial_bound = 50\nrho_steps = 5\n")
    # the coefficients of a twelve-torsion fiber are far beyond this budget
    from quadpreim.elliptic import TorsionKind, specialize_e24, torsion_family_a
    a = torsion_family_a(TorsionKind.Z12, Fraction(5, 7))
    curve = specialize_e24(a).curve
    code, _, err = run_cli(capsys, "--config", str(conf), "ec", "torsion",
                           "--a2", str(curve.a2), "--a4", str(curve.a4),
                           "--a6", str(curve.a6), "--method", "lutz-nagell")
    assert code == 1
    assert "budget" in err


def test_config_file_supplies_height_bound(capsys, tmp_path):
    conf = tmp_path / "settings.conf"
    conf.write_text("# search defaults\nheight_bound = 3\n")
    code, out, _ = run_cli(capsys, "--config", str(conf), "search",
                           "--strategy", "forward", "--depth", "2",
                           "--target", "2,2", "--format", "structured")
    assert code == 0
    assert out.strip()


def test_verify_paper_sections(capsys):
    code, out, _ = run_cli(capsys, "verify-paper", "--section", "genus")
    assert code == 0
    assert "PASS" in out and "FAIL" not in out
    code, out, _ = run_cli(capsys, "verify-paper", "--section", "6.2")
    assert code == 0
    assert out.count("PASS") == 7
    code, _, err = run_cli(capsys, "verify-paper", "--section", "nope")
    assert code == 2


def test_verify_paper_structured(capsys):
    code, out, _ = run_cli(capsys, "verify-paper", "--section", "4.4",
                           "--format", "structured")
    assert code == 0
    for line in out.strip().splitlines():
        payload = json.loads(line)
        assert payload["passed"] is True
        assert payload["section"] == "4.4"
