import json

import pytest

from braidquot import scenarios as sc
from braidquot.scenarios import Config, ReportRecord


def _strip_runtime(text):
    out = []
    for line in text.splitlines():
        d = json.loads(line)
        d.pop("runtime_ms", None)
        out.append(d)
    return out


def test_config_precedence(tmp_path):
    f = tmp_path / "braidquot.conf"
    f.write_text("# settings\nmax_cosets = 5000\nprimes = 101, 103\njobs = 2\noutput = from-file.txt\n")
    c = sc.load_config(f, env={})
    assert (c.max_cosets, c.primes, c.jobs, c.output) == (5000, (101, 103), 2, "from-file.txt")
    c = sc.load_config(f, env={"BRAIDQUOT_MAX_COSETS": "7000", "BRAIDQUOT_JOBS": "3"})
    assert (c.max_cosets, c.jobs) == (7000, 3)
    c = sc.load_config(f, env={"BRAIDQUOT_MAX_COSETS": "7000"}, overrides={"max_cosets": 9000, "jobs": None})
    assert (c.max_cosets, c.jobs) == (9000, 2)
    assert sc.load_config(None, env={}) == Config()


def test_config_errors(tmp_path):
    f = tmp_path / "bad.conf"
    f.write_text("colour = blue\n")
    with pytest.raises(ValueError):
        sc.load_config(f, env={})
    f.write_text("max_cosets 10\n")
    with pytest.raises(ValueError):
        sc.load_config(f, env={})
    with pytest.raises(ValueError):
        sc.load_config(None, env={"BRAIDQUOT_MAX_COSETS": "0"})


def test_record_status_validated():
    with pytest.raises(ValueError):
        ReportRecord("x", 1, 1, "ok", 0)


def test_exit_codes():
    ok = ReportRecord("a", 1, 1, "pass", 0)
    bad = ReportRecord("b", 1, 2, "fail", 0)
    lim = ReportRecord("c", None, 3, "limit", 0)
    skip = ReportRecord("d", None, 3, "skipped", 0)
    assert sc.exit_code([]) == 0
    assert sc.exit_code([ok]) == 0
    assert sc.exit_code([ok, lim]) == 3
    assert sc.exit_code([ok, skip]) == 3
    assert sc.exit_code([ok, lim, bad]) == 2


def test_empty_report(tmp_path):
    path = sc.report([], tmp_path / "r.txt")
    header, records = sc.read_report(path)
    assert header == {"schema_version": 1, "records": 0} and records == []


def test_report_is_deterministic(tmp_path):
    a = sc.report(sc.run_suite("wajnryb") + sc.run_suite("table3"), tmp_path / "a.txt").read_text()
    b = sc.report(sc.run_suite("table3") + sc.run_suite("wajnryb"), tmp_path / "b.txt").read_text()
    assert _strip_runtime(a) == _strip_runtime(b)
    header, records = sc.read_report(tmp_path / "a.txt")
    assert header["records"] == len(records) == 22
    assert set(records[0]) == {"scenario", "computed", "expected", "status", "runtime_ms", "versions", "note"}
    assert all(r["status"] == "pass" for r in records)


def test_pool_matches_sequential():
    jobs = [("wajnryb", {}), ("crystal", {}), ("table3", {})]
    seq = sc.run_suites(jobs, Config(jobs=1))
    par = sc.run_suites(jobs, Config(jobs=3))
    strip = lambda rs: [(r.scenario, r.computed, r.expected, r.status) for r in rs]
    assert strip(seq) == strip(par)
    assert [r.scenario for r in seq] == sorted(r.scenario for r in seq)


def test_duplicate_ids_rejected():
    with pytest.raises(ValueError):
        sc.run_suites([("wajnryb", {}), ("wajnryb", {})])


def test_table3_and_wajnryb_pass():
    recs = sc.run_table3_actions() + sc.run_wajnryb_redundancy()
    assert len(recs) == 12 + 6 + 4
    assert all(r.status == "pass" for r in recs), [sc.summary_line(r) for r in recs if r.status != "pass"]


@pytest.mark.parametrize("n, m, k", sc.CRYSTAL_CASES + ((5, 2, 1),))
def test_prop_crystal(n, m, k):
    recs = sc.run_prop_crystal(n, m, k)
    assert [r.status for r in recs] == ["pass", "pass"]
    assert recs[0].computed == m * k + 1


def test_prop_crystal_validates():
    with pytest.raises(ValueError):
        sc.run_prop_crystal(3, 1, 1)


def test_prop_crystal33():
    recs = sc.run_prop_crystal33(4)
    assert [r.status for r in recs] == ["pass", "pass"]
    assert recs[0].note == "order 4"
    (r3,) = sc.run_prop_crystal33(3)
    assert r3.status == "pass" and r3.note == "order 24"


def test_limit_is_reported_not_raised():
    cfg = Config(max_cosets=100)
    recs = sc.run_prop_crystal33(7, cfg)
    assert recs[0].status in ("pass", "limit")
    (lim,) = [r for r in sc.run_table1(Config(max_cosets=100)) if r.scenario == "table1/(3,5)"]
    assert lim.status == "limit" and "coset limit 100" in lim.note


def test_frontier_witnesses_hit_limit():
    recs = sc.run_finiteness_frontier(Config(frontier_max_cosets=20000), witnesses=((3, 6), (6, 3)))
    by_id = {r.scenario: r for r in recs}
    assert by_id["frontier/(3,6)"].status == "limit"
    assert by_id["frontier/(6,3)"].status == "limit"
    assert "(m-2)(n-2) = 4" in by_id["frontier/(3,6)"].note
    assert all(by_id[f"frontier/({n},{m})"].status == "pass" for n, m in sc.FINITE_PAIRS)
    assert sc.exit_code(recs) == 3


def test_frontier_predicate():
    assert sc.frontier_predicate(3, 5) == 3
    assert sc.frontier_predicate(3, 6) == 4 == sc.frontier_predicate(6, 3)


def test_small_abelianizations():
    recs = sc.run_abelianizations(pairs=((3, 3), (3, 4), (3, 5), (4, 3)))
    assert len(recs) == 8 and all(r.status == "pass" for r in recs)
    with pytest.raises(ValueError):
        sc.run_abelianizations(mode="fast")


def test_table2_word():
    assert sc.table2_word((1, -2)) == (-1, -1, -1, -1, 2, 2, 2, 2)
