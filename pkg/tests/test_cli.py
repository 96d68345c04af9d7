import json

import pytest
from click.testing import CliRunner

from picaria.cli import main


@pytest.fixture()
def runner():
    return CliRunner()


def test_solve_defaults_report_a_draw(runner):
    result = runner.invoke(main, ["solve"])
    assert result.exit_code == 0
    assert "root value: DRAW" in result.output


def test_solve_triangle_reports_win_with_depth(runner):
    result = runner.invoke(main, ["solve", "-s", "3"])
    assert result.exit_code == 0
    assert "root value: WIN(7)" in result.output


def test_solve_rejects_bad_parameters(runner):
    result = runner.invoke(main, ["solve", "-s", "4", "-k", "6"])
    assert result.exit_code == 2
    assert "board" in result.output


def test_solve_structured_matches_text(runner):
    text = runner.invoke(main, ["solve"]).output
    doc = json.loads(runner.invoke(main, ["solve", "--format", "structured"]).output)
    assert doc["root_value"]["kind"] == "DRAW"
    assert f"{doc['states']} canonical states" in text
    assert f"win {doc['classes']['win']}" in text


def test_solve_cache_round_trip(runner, tmp_path):
    first = runner.invoke(main, ["solve", "--cache", str(tmp_path)])
    assert first.exit_code == 0
    assert (tmp_path / "table-k3-s4-v1.txt").exists()
    second = runner.invoke(main, ["solve", "--cache", str(tmp_path)])
    assert second.exit_code == 0
    assert "root value: DRAW" in second.output


def test_value_of_the_loop_is_a_draw(runner):
    result = runner.invoke(main, ["value", "..ooxxx.o:x"])
    assert result.exit_code == 0
    assert result.output.strip() == "DRAW"


def test_value_of_the_empty_board(runner):
    result = runner.invoke(main, ["value", ".........:x"])
    assert result.exit_code == 0
    assert result.output.strip() == "DRAW"


def test_value_rejects_malformed_notation(runner):
    result = runner.invoke(main, ["value", "not-a-position"])
    assert result.exit_code == 2


def test_value_notices_unreachable_positions(runner):
    result = runner.invoke(main, ["value", "xxxo.o.o.:x"])
    assert result.exit_code == 1
    assert "unreachable" in result.output


def test_best_finds_the_race_win(runner):
    result = runner.invoke(main, ["best", "..o.xoxox:x"])
    assert result.exit_code == 0
    first = result.output.splitlines()[0]
    assert "slide 6 3" in first and "LOSS(2)" in first


def test_count_reproduces_the_known_figures(runner):
    result = runner.invoke(main, ["count"])
    assert result.exit_code == 0
    for needle in ("1680", "228", "-3", "225", "450"):
        assert needle in result.output


def test_count_triangle_is_consistent(runner):
    doc = json.loads(
        runner.invoke(main, ["count", "-s", "3", "--format", "structured"]).output
    )
    total = sum(doc["fix_counts"].values())
    assert total == doc["group_order"] * doc["orbit_count_raw"]
    assert doc["position_graph_size"] == 2 * doc["orbit_count"]


def test_count_enumerate_agrees(runner):
    result = runner.invoke(main, ["count", "--enumerate"])
    assert result.exit_code == 0
    assert "228 (agree)" in result.output


def test_verify_passes_and_lists_anchors(runner):
    result = runner.invoke(main, ["verify"])
    assert result.exit_code == 0
    assert "corollary.draw" in result.output
    assert "Corollary" in result.output
    lines = [l for l in result.output.splitlines() if l.startswith(("pass", "FAIL"))]
    assert len(lines) >= 40


def test_verify_fails_on_a_corrupted_fixture(runner, tmp_path):
    bogus = tmp_path / "fixtures.txt"
    bogus.write_text(
        "fixture bogus.loop-is-won\n"
        "ref synthetic corruption\n"
        "start ..ooxxx.o:x\n"
        "claim value_is WIN\n"
        "end\n"
    )
    result = runner.invoke(main, ["verify", "--fixtures", str(bogus)])
    assert result.exit_code == 1
    # the failure names the fixture, its anchor, and the failing claim
    assert "bogus.loop-is-won" in result.output
    assert "synthetic corruption" in result.output
    assert "value_is WIN" in result.output


def test_sweep_family_row(runner):
    result = runner.invoke(main, ["sweep", "--k-range", "3:3", "--s-range", "3:7"])
    assert result.exit_code == 0
    lines = result.output.splitlines()
    roots = {}
    for line in lines:
        if line.startswith("(k=3"):
            s = int(line.split("s=")[1].split(")")[0])
            roots[s] = "DRAW" if "DRAW" in line else "WIN"
    assert roots == {3: "WIN", 4: "DRAW", 5: "WIN", 6: "WIN", 7: "WIN"}
    assert all("raw boards" in l for l in lines if l.startswith("(k="))


def test_sweep_skips_invalid_combinations(runner):
    result = runner.invoke(main, ["sweep", "--k-range", "4:4", "--s-range", "3:3"])
    assert result.exit_code == 0
    assert "skipped (invalid parameters)" in result.output


def test_sweep_honors_the_guard(runner):
    result = runner.invoke(
        main, ["sweep", "--k-range", "3:3", "--s-range", "7:7", "--guard", "1000"]
    )
    assert result.exit_code == 0
    assert "exceed guard" in result.output


def test_states_reports_both_countings(runner):
    doc = json.loads(runner.invoke(main, ["states", "--format", "structured"]).output)
    assert doc["valid_sliding_canonical_with_turn"] == 450
    assert doc["raw_sliding_boards"] == 1680


def test_serve_lifecycle():
    # start the real server process, poll /health, stop it with a signal
    import signal
    import socket
    import subprocess
    import sys
    import time
    import urllib.request

    with socket.socket() as probe:
        probe.bind(("127.0.0.1", 0))
        port = probe.getsockname()[1]
    process = subprocess.Popen(
        [sys.executable, "-m", "picaria.cli", "serve", "--port", str(port)],
        stdout=subprocess.DEVNULL,
        stderr=subprocess.DEVNULL,
    )
    try:
        deadline = time.time() + 20
        body = None
        while time.time() < deadline:
            try:
                with urllib.request.urlopen(
                    f"http://127.0.0.1:{port}/health", timeout=1
                ) as response:
                    body = response.read()
                break
            except OSError:
                time.sleep(0.2)
        assert body == b'{"status":"ok"}'
        process.send_signal(signal.SIGINT)
        assert process.wait(timeout=10) is not None
    finally:
        if process.poll() is None:
            process.kill()
