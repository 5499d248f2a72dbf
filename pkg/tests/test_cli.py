from __future__ import annotations

import json
from pathlib import Path

import pytest

from conftest import FIXTURE_DIR
from crossedcat import jsonio
from crossedcat.cli import main
from crossedcat.groups import find_isomorphism, symmetric
from crossedcat.matched import verify_matched_pair


def run(capsys, *argv) -> tuple[int, str]:
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_verify_matched_pair_passes(capsys, fixture_dir):
    code, out = run(capsys, "verify", "matched-pair", str(fixture_dir / "z2-z3-inversion.json"))
    assert code == 0
    assert json.loads(out)["pass"] is True


def test_verify_corrupted_pair_exit_1(capsys, fixture_dir, tmp_path):
    obj = json.loads((fixture_dir / "z2-z3-inversion.json").read_text())
    obj["act1"][1][2] = (obj["act1"][1][2] + 1) % 3
    bad = tmp_path / "corrupted.json"
    bad.write_text(json.dumps(obj))
    code, out = run(capsys, "verify", "matched-pair", str(bad))
    assert code == 1
    failing = [c for c in json.loads(out)["checks"] if not c["pass"]]
    assert failing and failing[0]["witness"] is not None


def test_verify_malformed_json_exit_2(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{nope")
    assert main(["verify", "group", str(bad)]) == 2


def test_verify_center_report_sections(capsys, fixture_dir):
    code, out = run(capsys, "verify", "center", str(fixture_dir / "cat-z4-over-z2.json"))
    assert code == 0
    names = [c["name"] for c in json.loads(out)["checks"]]
    assert "sigma_yang_baxter_gamma" in names
    assert "braiding_axiom_1" in names


def test_center_nonsurjective_exit_2(capsys, fixture_dir):
    assert main(["center", str(fixture_dir / "cat-nonsurjective.json")]) == 2


def test_center_counts(capsys, fixture_dir):
    code, out = run(capsys, "center", str(fixture_dir / "cat-z4-over-z2.json"))
    assert code == 0
    payload = json.loads(out)
    assert len(payload["simples"]) == 16
    assert payload["pass"] is True
    code, out = run(capsys, "center", str(fixture_dir / "cat-vec-z3-gtrivial.json"))
    assert len(json.loads(out)["simples"]) == 3


def test_reports_are_byte_identical(capsys, fixture_dir):
    _, out1 = run(capsys, "verify", "category", str(fixture_dir / "cat-cocycle-j.json"))
    _, out2 = run(capsys, "verify", "category", str(fixture_dir / "cat-cocycle-j.json"))
    assert out1 == out2


def test_zappa_szep_output_is_s3(capsys, fixture_dir, tmp_path):
    out_path = tmp_path / "zs.json"
    code, _ = run(capsys, "zappa-szep", str(fixture_dir / "z2-z3-inversion.json"),
                  "-o", str(out_path))
    assert code == 0
    H = jsonio.load_group(out_path)
    assert find_isomorphism(H, symmetric(3)) is not None


def test_factorize_s4(capsys, fixture_dir, tmp_path):
    out_path = tmp_path / "s4pair.json"
    code, _ = run(capsys, "factorize", str(fixture_dir / "group-s4.json"),
                  "--gens-g", "9", "--gens-gamma", "6,8", "-o", str(out_path))
    assert code == 0
    mp = jsonio.load_matched(out_path)
    assert verify_matched_pair(mp).passed
    assert (mp.G.order, mp.Gamma.order) == (4, 6)


def test_factorize_rejects_non_exact(capsys, fixture_dir, tmp_path):
    code = main(["factorize", str(fixture_dir / "group-s4.json"),
                 "--gens-g", "9", "--gens-gamma", "9", "-o", str(tmp_path / "x.json")])
    assert code == 2


def test_turaev_command(capsys, fixture_dir, tmp_path):
    out_path = tmp_path / "tur.json"
    code, out = run(capsys, "turaev", str(fixture_dir / "group-d4.json"), "-o", str(out_path))
    assert code == 0
    assert json.loads(out)["pass"] is True


def test_center_pair_command_trivial_z2z2(capsys, fixture_dir, tmp_path):
    out_path = tmp_path / "cp.json"
    code, _ = run(capsys, "center-pair", str(fixture_dir / "direct-z2-z2.json"),
                  "-o", str(out_path))
    assert code == 0
    bmp = jsonio.load_braided(out_path)
    assert bmp.mp.G.order == 4 and bmp.mp.Gamma.order == 4
    assert all(bmp.mp.a1(a, x) == x for a in range(4) for x in range(4))


def test_coherence_command(capsys, fixture_dir):
    code, out = run(capsys, "coherence", "--category", str(fixture_dir / "cat-cocycle-j.json"),
                    "--max-nodes", "6", "--arity", "2")
    assert code == 0
    assert json.loads(out)["pass"] is True


def test_pretty_flag_renders_text(capsys, fixture_dir):
    code, out = run(capsys, "--pretty", "verify", "matched-pair",
                    str(fixture_dir / "z2-z3-inversion.json"))
    assert code == 0
    assert "matched-pair: PASS" in out


def test_jobs_flag_keeps_reports_identical(capsys, fixture_dir):
    _, out1 = run(capsys, "verify", "matched-pair", str(fixture_dir / "s4-z4-s3.json"))
    _, out2 = run(capsys, "--jobs", "4", "verify", "matched-pair",
                  str(fixture_dir / "s4-z4-s3.json"))
    assert out1 == out2


def test_right_action_files_rejected(fixture_dir, tmp_path):
    obj = json.loads((fixture_dir / "z2-z3-inversion.json").read_text())
    obj["side1"] = "right"
    bad = tmp_path / "right.json"
    bad.write_text(json.dumps(obj))
    assert main(["verify", "matched-pair", str(bad)]) == 2


def test_center_structure_tables(fixture_dir):
    from conftest import category
    from crossedcat.center import CenterStructure
    Z = CenterStructure(category("z4-over-z2"))
    n = len(Z.simples)
    assert len(Z.tensor_table) == n and all(len(r) == n for r in Z.tensor_table)
    assert all(0 <= v < n for row in Z.g_action_table for v in row)
    assert all(0 <= v < n for row in Z.gamma_action_table for v in row)
    assert all(not c.is_zero for row in Z.braiding_table for (_, c) in row)


def test_every_fixture_file_loads_and_verifies(fixture_dir):
    from crossedcat.braided import verify_braiding
    from crossedcat.pointed import verify_crossed_category
    for path in sorted(fixture_dir.glob("*.json")):
        name = path.name
        if name.startswith("group-"):
            jsonio.load_group(path)
        elif name.startswith("cat-"):
            cat = jsonio.load_category(path, validate=False)
            if name != "cat-nonsurjective.json":
                assert verify_crossed_category(cat).passed, name
        elif name.endswith("-braided.json") or name.endswith("-center.json"):
            assert verify_braiding(jsonio.load_braided(path)).passed, name
        else:
            assert verify_matched_pair(jsonio.load_matched(path)).passed, name
