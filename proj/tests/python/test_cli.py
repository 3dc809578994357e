import json
import os
import re
import subprocess

BIN = os.environ.get(
    "TORUSMAPS_BIN",
    os.path.join(os.path.dirname(__file__), "..", "..", "build", "torusmaps"),
)


def run(*args, expect=0, env=None):
    full_env = dict(os.environ)
    if env:
        full_env.update(env)
    p = subprocess.run([BIN, *args], capture_output=True, text=True, env=full_env)
    assert p.returncode == expect, (args, p.returncode, p.stderr)
    return p


def rows(p):
    return [json.loads(line) for line in p.stdout.splitlines() if line.strip()]


def test_classify_square_scalar():
    (j,) = rows(run("classify", "--type", "4.4.4.4", "--matrix", "2,0,0,2"))
    assert j == {
        "type": "4.4.4.4",
        "matrix": [[2, 0], [0, 2]],
        "hnf": [[2, 0], [0, 2]],
        "sheets": 4,
        "V": 4,
        "E": 8,
        "F": 4,
        "flags": 32,
        "orbit_count": 1,
        "point_group_order": 8,
    }


def test_classify_normalizes_the_matrix():
    (j,) = rows(run("classify", "--type", "3.3.3.3.3.3", "--matrix", "2,3,1,2"))
    assert j["hnf"] == [[1, 0], [0, 1]]
    assert j["sheets"] == 1
    assert j["orbit_count"] == 1

    (j,) = rows(run("classify", "--type", "3.3.3.3.3.3", "--matrix", "0,-3,5,0"))
    assert j["hnf"] == [[3, 0], [0, 5]]
    assert j["sheets"] == 15
    assert j["orbit_count"] == 6
    assert j["point_group_order"] == 2


def test_classify_table_mode():
    p = run("classify", "--type", "3.3.3.3.3.3", "--matrix", "5,0,0,3", "--table")
    assert "orbit_count" in p.stdout and "180" in p.stdout


def test_covers_six_sheets():
    got = rows(run("covers", "--type", "3.3.3.3.3.3", "--matrix", "1,0,0,1", "-n", "6"))
    assert len(got) == 12  # sigma(6)
    assert all(r["sheets"] == 6 for r in got)
    assert got[0]["S"] == [[6, 0], [0, 1]]
    mats = [json.dumps(r["S"]) for r in got]
    assert len(set(mats)) == len(mats)


def test_covers_iso_classes():
    got = rows(
        run("covers", "--type", "4.4.4.4", "--matrix", "1,0,0,1", "-n", "2", "--classify-iso")
    )
    assert [r["iso_class"] for r in got] == [0, 0, 1]
    assert [r["orbits"] for r in got] == [2, 2, 1]


def test_minimal_cover_found():
    (j,) = rows(run("minimal-cover", "--type", "3.3.3.3.3.3", "--matrix", "5,0,0,3", "-k", "1"))
    assert j["found"] is True
    assert j["sheets"] == 15
    assert j["S"] == [[3, 0], [0, 5]]
    assert j["cover_hnf"] == [[15, 0], [0, 15]]
    assert j["base_orbits"] == 6


def test_minimal_cover_exhausts_bound():
    (j,) = rows(
        run("minimal-cover", "--type", "4.4.4.4", "--matrix", "1,0,0,1", "-k", "3", "--bound", "30")
    )
    assert j["found"] is False
    assert j["searched_through_sheets"] == 30


def test_survey_rows_and_summary():
    p = run("survey", "--type", "4.4.4.4", "--max-index", "4")
    got = rows(p)
    summary = got[-1]
    assert summary["summary"] is True
    assert summary["maps"] == 15  # sigma(1..4) = 1+3+4+7
    assert len(got) == 16
    assert set(summary["achieved_orbit_counts"]) <= {1, 2, 4}
    assert 1 in summary["achieved_orbit_counts"]
    # deterministic bytes regardless of worker count
    p1 = run("survey", "--type", "4.4.4.4", "--max-index", "4", env={"TORUS_ATLAS_THREADS": "1"})
    p4 = run("survey", "--type", "4.4.4.4", "--max-index", "4", env={"TORUS_ATLAS_THREADS": "4"})
    assert p1.stdout == p4.stdout == p.stdout


def test_render_colors_match_orbit_classes():
    one = run("render", "--type", "3.3.3.3.3.3", "--cells", "2").stdout
    three = run("render", "--type", "3.12.12", "--cells", "2").stdout
    fills = lambda svg: set(re.findall(r'fill="(#[0-9a-f]{6})"', svg))
    assert len(fills(one)) == 1
    assert len(fills(three)) == 3
    assert one == run("render", "--type", "3.3.3.3.3.3", "--cells", "2").stdout
    run("render", "--type", "3.3.3.3.3.3", "--cells", "7", expect=2)


def test_dump_tiling_kagome():
    (j,) = rows(run("dump-tiling", "--type", "3.6.3.6"))
    assert j["counts"] == {"vertices": 3, "edges": 6, "faces": 3, "flags": 24}
    assert j["flag_orbit_count"] == 2
    assert j["symmetry_count"] == 12
    rat = re.compile(r"^-?\d+(/\d+)?$")
    for face in j["faces"]:
        for x, y in face:
            assert rat.match(x) and rat.match(y)


def test_bad_input_exits_two():
    run("classify", "--type", "5.5.5", "--matrix", "1,0,0,1", expect=2)
    run("classify", "--type", "4.4.4.4", "--matrix", "2,4,1,2", expect=2)
    run("classify", "--type", "4.4.4.4", "--matrix", "1,0,0", expect=2)
    run("covers", "--type", "4.4.4.4", expect=2)
    run(expect=2)
    run("--help", expect=0)


def test_oracle_check_agrees():
    got = rows(run("oracle-check", "--type", "4.8.8", "--max-index", "2"))
    assert got[-1]["summary"] is True and got[-1]["ok"] is True
    assert all(r["orbit_geometric"] == r["orbit_oracle"] for r in got[:-1])
