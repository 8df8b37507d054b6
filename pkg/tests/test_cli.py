import json

import pytest

from pdmatch import Matching, dump_instance, dump_matching
from pdmatch.cli import main
from pdmatch.generators import fixture_ir, gen_vdep


@pytest.fixture
def ir3(tmp_path):
    p = tmp_path / "ir3.json"
    p.write_text(dump_instance(fixture_ir(3)))
    return p


def test_solve_const_m(ir3, capsys):
    assert main(["solve", "-i", str(ir3), "-a", "const-m"]) == 0
    out, err = capsys.readouterr()
    assert json.loads(out)["size"] == 3
    assert "optimal true" in err


def test_solve_to_file(ir3, tmp_path, capsys):
    dest = tmp_path / "m.json"
    assert main(["solve", "-i", str(ir3), "-o", str(dest)]) == 0
    assert json.loads(dest.read_text())["size"] == 3
    assert "size 3" in capsys.readouterr().out


def test_solve_tight_adversarial(tmp_path, capsys):
    assert main(["generate", "--family", "fixture", "--name", "TIGHT", "--param", "2",
                 "-o", str(tmp_path / "t.json")]) == 0
    assert main(["solve", "-i", str(tmp_path / "t.json"), "-a", "greedy",
                 "--machine-order", "1,0", "--tiebreak", "high"]) == 0
    assert json.loads(capsys.readouterr().out)["size"] == 2


def test_forced_mismatch_exit_2(tmp_path):
    p = tmp_path / "v.json"
    p.write_text(dump_instance(gen_vdep(4, 3, 4, 0.0, seed=1)))
    assert main(["solve", "-i", str(p), "-a", "udep-mono"]) == 2


def test_malformed_exit_1(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{"n":1,"m":1,"b":[[-1]]}')
    assert main(["solve", "-i", str(p)]) == 1
    assert main(["classify", "-i", str(tmp_path / "missing.json")]) == 1


def test_budget_exit_3(tmp_path):
    p = tmp_path / "big.json"
    assert main(["generate", "--family", "random", "--n", "12", "--m", "4",
                 "--max-tol", "5", "-o", str(p)]) == 0
    assert main(["solve", "-i", str(p), "-a", "oracle", "--budget", "10"]) == 3


@pytest.mark.parametrize("edges,code,flags", [
    ([(1, 0), (2, 0), (3, 0)], 0, (True, True, True)),
    ([(0, 0), (1, 0)], 4, (False, None, None)),
    ([(0, 0)], 0, (True, True, False)),
])
def test_verify(ir3, tmp_path, capsys, edges, code, flags):
    mp = tmp_path / "m.json"
    mp.write_text(dump_matching(Matching(frozenset(edges))))
    assert main(["verify", "-i", str(ir3), "-M", str(mp)]) == code
    doc = json.loads(capsys.readouterr().out)
    assert (doc["valid"], doc["maximal"], doc["strongly_maximal"]) == flags


def test_verify_parse_failure(ir3, tmp_path):
    mp = tmp_path / "m.json"
    mp.write_text("{")
    assert main(["verify", "-i", str(ir3), "-M", str(mp)]) == 1


def test_classify(tmp_path, capsys):
    p = tmp_path / "p.json"
    main(["generate", "--family", "3partition", "--A", "26,30,31,33,36,44", "--B", "100",
          "--k", "2", "-o", str(p)])
    assert main(["classify", "-i", str(p)]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["monotonizable"] and len(doc["tolerance_set"]) == 12 and doc["type_count"] == 2


def test_generate_is_deterministic(capsys):
    main(["generate", "--family", "mono", "--seed", "5"])
    first = capsys.readouterr().out
    main(["generate", "--family", "mono", "--seed", "5"])
    assert capsys.readouterr().out == first


def test_generate_3dm_with_meta(tmp_path, capsys):
    meta = tmp_path / "meta.json"
    assert main(["generate", "--family", "3dm", "--k", "2", "--triples", "0,0,0;0,1,1;1,1,1",
                 "--meta", str(meta)]) == 0
    assert json.loads(capsys.readouterr().out)["n"] == 5
    assert json.loads(meta.read_text())["filler_owner"] == [0]


def test_generate_ddm(capsys):
    assert main(["generate", "--family", "ddm", "--k", "1", "--k1", "1", "--k2", "3",
                 "--triples", "0,0,0"]) == 0
    assert json.loads(capsys.readouterr().out)["n"] == 3


def test_bench_empty_corpus(tmp_path, capsys):
    c = tmp_path / "c.json"
    c.write_text("[]")
    assert main(["bench", "--corpus", str(c), "--format", "csv"]) == 0
    assert capsys.readouterr().out.strip() == (
        "instance_id,n,m,class,algorithm,size,opt_size,ratio,elapsed_us")


def test_bench_writes_reports(tmp_path):
    base = tmp_path / "report"
    assert main(["bench", "--family", "onetwo", "--count", "5", "--n", "6", "--m", "3",
                 "--algorithms", "one-two,greedy", "-o", str(base)]) == 0
    rows = json.loads((tmp_path / "report.json").read_text())
    assert len(rows) == 10
    assert all(r["ratio"] == 1.0 for r in rows if r["algorithm"] == "one-two")
    assert (tmp_path / "report.csv").read_text().count("\n") == 11


def test_bench_all_failing(tmp_path):
    assert main(["bench", "--family", "random", "--count", "2", "--n", "4", "--m", "2",
                 "--algorithms", "uniform", "-o", str(tmp_path / "r")]) == 2
