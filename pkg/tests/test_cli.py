"""CLI commands, exit codes, manifests, byte-identical reruns."""

import json

from fqcodes.cli import main
from fqcodes.gf import FieldCtx
from fqcodes.metrics import VectorCode, word
from fqcodes.serialize import load_file, save_file, sha256_file


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_construct_gabidulin(tmp_path, capsys):
    out = str(tmp_path / "gab.json")
    code, stdout, _ = run(capsys, "construct", "--kind", "gabidulin",
                          "--q", "2", "--n", "3", "--t", "1", "--out", out)
    assert code == 0
    assert json.loads(stdout)["members"] == 64
    rc = load_file(out)
    assert len(rc) == 64
    assert rc.provenance["verified_rank_distance"] == 2
    manifest = json.load(open(out + ".manifest.json"))
    assert manifest["outputs"][out] == sha256_file(out)
    assert manifest["command"] == "construct"


def test_construct_spread_and_metric(tmp_path, capsys):
    out = str(tmp_path / "spread.json")
    code, stdout, _ = run(capsys, "construct", "--kind", "spread",
                          "--q", "2", "--k", "2", "--n", "4", "--out", out)
    assert code == 0
    assert json.loads(stdout)["members"] == 5
    sc = load_file(out)
    assert sc.provenance["verified_distance"] == 4
    code, stdout, _ = run(capsys, "metric", out, "--metric", "subspace",
                          "--format", "csv")
    assert code == 0
    assert stdout.startswith("subspace,4,")


def test_construct_singer_ds(tmp_path, capsys):
    out = str(tmp_path / "ds.json")
    code, stdout, _ = run(capsys, "construct", "--kind", "singer-ds",
                          "--n", "3", "--out", out)
    assert code == 0
    ds = load_file(out)
    assert (ds.v, ds.k, ds.lam) == (7, 3, 1)


def test_construct_lifted_and_derived_codes(tmp_path, capsys):
    lifted = str(tmp_path / "lifted.json")
    assert run(capsys, "construct", "--kind", "lifted-mrd", "--q", "2",
               "--n", "3", "--t", "1", "--out", lifted)[0] == 0
    sc = load_file(lifted)
    assert len(sc) == 64 and sc.provenance["verified_distance"] == 4
    spread_path = str(tmp_path / "spread.json")
    assert run(capsys, "construct", "--kind", "spread", "--q", "2",
               "--k", "2", "--n", "4", "--out", spread_path)[0] == 0
    av = str(tmp_path / "av.json")
    code, stdout, _ = run(capsys, "construct", "--kind", "all-vectors",
                          "--from", spread_path, "--length", "3", "--out", av)
    assert code == 0
    vc = load_file(av)
    assert vc.provenance["verified_insdel_distance"] == 6
    span = str(tmp_path / "span.json")
    assert run(capsys, "construct", "--kind", "span", "--from", spread_path,
               "--length", "2", "--out", span)[0] == 0
    assert load_file(span).provenance["verified_insdel_distance"] == 4


def test_construct_sidon_orbit(tmp_path, capsys):
    out = str(tmp_path / "orbit.json")
    code, stdout, _ = run(capsys, "construct", "--kind", "sidon-orbit",
                          "--q", "2", "--n", "5", "--k", "2", "--out", out)
    assert code == 0
    sc = load_file(out)
    assert len(sc) == 31
    assert sc.declared_distance == 2
    assert sc.provenance["verified_distance"] == 2


def test_construct_folded_eval(tmp_path, capsys):
    out = str(tmp_path / "fev.json")
    code, _, _ = run(capsys, "construct", "--kind", "folded-eval",
                     "--n", "3", "--out", out)
    assert code == 0
    fc = load_file(out)
    assert len(fc) == 7
    assert fc.provenance["verified_subset_distance"] == 4
    assert fc.provenance["difference_set"] == {"v": 7, "k": 3, "lambda": 1}


def test_metric_r_subset(tmp_path, capsys):
    spread_path = str(tmp_path / "spread.json")
    run(capsys, "construct", "--kind", "spread", "--q", "2", "--k", "2",
        "--n", "4", "--out", spread_path)
    av = str(tmp_path / "av.json")
    run(capsys, "construct", "--kind", "all-vectors", "--from", spread_path,
        "--length", "4", "--out", av)
    code, stdout, _ = run(capsys, "metric", av, "--metric", "r_subset",
                          "--block-len", "2")
    assert code == 0
    rep = json.loads(stdout)
    assert rep["metric"] == "r_subset"
    assert rep["notes"]["block_len"] == 2


def test_metric_too_few_codewords_exits_2(tmp_path, capsys):
    ctx = FieldCtx(2, 2)
    vc = VectorCode(ctx, 2, [word(ctx, [(1, 0), (0, 1)])])
    path = str(tmp_path / "one.json")
    save_file(path, vc)
    code, _, err = run(capsys, "metric", path, "--metric", "insdel")
    assert code == 2
    assert "two members" in err


def test_metric_on_missing_file_exits_2(tmp_path, capsys):
    code, _, err = run(capsys, "metric", str(tmp_path / "nope.json"),
                       "--metric", "insdel")
    assert code == 2


def test_bounds_table(tmp_path, capsys):
    code, stdout, _ = run(capsys, "bounds", "--n", "4", "--q", "2")
    assert code == 0
    table = {r["bound"]: r for r in json.loads(stdout)["bounds"]
             if r["bound"] != "half_singleton"}
    assert table["levenshtein"]["value"] == 4
    assert table["klo"]["value"] == 3
    code, stdout, _ = run(capsys, "bounds", "--n", "2", "--q", "2")
    names = [r["bound"] for r in json.loads(stdout)["bounds"]]
    assert "klo" not in names


def test_bounds_on_code_file(tmp_path, capsys):
    spread_path = str(tmp_path / "spread.json")
    run(capsys, "construct", "--kind", "spread", "--q", "2", "--k", "2",
        "--n", "4", "--out", spread_path)
    av = str(tmp_path / "av.json")
    run(capsys, "construct", "--kind", "all-vectors", "--from", spread_path,
        "--length", "3", "--out", av)
    code, stdout, _ = run(capsys, "bounds", "--code", av, "--format", "csv")
    assert code == 0
    assert "chain,6,true" in stdout


def test_simulate_and_determinism(tmp_path, capsys):
    spread_path = str(tmp_path / "spread.json")
    run(capsys, "construct", "--kind", "spread", "--q", "2", "--k", "2",
        "--n", "4", "--out", spread_path)
    av = str(tmp_path / "av.json")
    run(capsys, "construct", "--kind", "all-vectors", "--from", spread_path,
        "--length", "3", "--out", av)
    transcript = str(tmp_path / "t.csv")
    argv = ("simulate", "--code", av, "--ins", "0", "--del", "2",
            "--trials", "100", "--seed", "42", "--out", transcript)
    code, stdout, _ = run(capsys, *argv)
    assert code == 0
    summary = json.loads(stdout)
    assert summary["success_rate"] == 1.0
    assert summary["within_guarantee"] is True
    first = open(transcript).read()
    first_manifest = open(transcript + ".manifest.json").read()
    code, _, _ = run(capsys, *argv)
    assert code == 0
    assert open(transcript).read() == first
    assert open(transcript + ".manifest.json").read() == first_manifest


def test_manifest_replay_reproduces_hashes(tmp_path, capsys):
    out = str(tmp_path / "spread.json")
    run(capsys, "construct", "--kind", "spread", "--q", "2", "--k", "2",
        "--n", "4", "--out", out)
    manifest = json.load(open(out + ".manifest.json"))
    recorded = manifest["outputs"][out]
    assert main(manifest["argv"]) == 0
    capsys.readouterr()
    assert sha256_file(out) == recorded


def test_fold_command(tmp_path, capsys):
    spread_path = str(tmp_path / "spread.json")
    run(capsys, "construct", "--kind", "spread", "--q", "2", "--k", "2",
        "--n", "4", "--out", spread_path)
    av = str(tmp_path / "av.json")
    run(capsys, "construct", "--kind", "all-vectors", "--from", spread_path,
        "--length", "4", "--out", av)
    folded = str(tmp_path / "folded.json")
    code, _, _ = run(capsys, "fold", "--code", av, "--block-len", "2",
                     "--out", folded)
    assert code == 0
    fc = load_file(folded)
    assert fc.block_len == 2
    assert len(fc) == 5
    code, stdout, _ = run(capsys, "metric", folded, "--metric", "subset")
    assert code == 0


def test_metric_out_writes_report_file(tmp_path, capsys):
    spread_path = str(tmp_path / "spread.json")
    run(capsys, "construct", "--kind", "spread", "--q", "2", "--k", "2",
        "--n", "4", "--out", spread_path)
    report = str(tmp_path / "report.json")
    code, stdout, _ = run(capsys, "metric", spread_path, "--metric", "subspace",
                          "--out", report)
    assert code == 0
    assert json.load(open(report))["minimum"] == 4
    manifest = json.load(open(report + ".manifest.json"))
    assert spread_path in manifest["inputs"]


def test_verify_command_exit_codes(capsys):
    code, stdout, _ = run(capsys, "verify", "--suite", "spread")
    assert code == 0
    assert "PASS" in stdout


def test_verify_emits_findings(capsys):
    code, stdout, _ = run(capsys, "verify", "--suite", "folded-eval")
    assert code == 0
    assert "FINDING:" in stdout


def test_usage_error_exits_2(capsys):
    assert run(capsys, "construct", "--kind", "nonsense", "--out", "x")[0] == 2
    assert run(capsys, "bounds")[0] == 2


def test_construct_single_member_code_is_vacuous(tmp_path, capsys):
    out = str(tmp_path / "whole.json")
    code, stdout, _ = run(capsys, "construct", "--kind", "spread", "--q", "2",
                          "--k", "4", "--n", "4", "--out", out)
    assert code == 0
    sc = load_file(out)
    assert len(sc) == 1
    assert sc.provenance["verified_distance"] is None


def test_construct_invalid_params_exit_2(tmp_path, capsys):
    out = str(tmp_path / "bad.json")
    code, _, err = run(capsys, "construct", "--kind", "spread", "--q", "2",
                       "--k", "2", "--n", "5", "--out", out)
    assert code == 2
