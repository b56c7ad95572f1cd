import json

import pytest

from s6quartics import exactmath as em
from s6quartics import pipeline
from s6quartics.cli import main


def test_registry_acyclic_and_complete():
    order = pipeline.order_checks()
    assert sorted(order) == sorted(pipeline.REGISTRY)
    pos = {n: i for i, n in enumerate(order)}
    for name, spec in pipeline.REGISTRY.items():
        assert spec.claim
        assert all(pos[d] < pos[name] for d in spec.deps)


def test_dependencies_pulled_in():
    order = pipeline.order_checks(["a6.extract_t"])
    assert order[-1] == "a6.extract_t"
    assert "a6.system" in order and order.index("a6.system") < order.index("a6.extract_t")


def test_unknown_check():
    with pytest.raises(pipeline.UnknownCheck):
        pipeline.run(["no.such.check"])


def test_empty_run_is_metadata_only():
    d = json.loads(pipeline.dumps(pipeline.run([]), 120, 0))
    assert d["checks"] == []
    assert d["metadata"] == {"field_order": 120, "seed": 0, "version": pipeline.__version__}


def test_report_schema(tmp_path):
    reports = pipeline.run(["arith.identities", "arith.rh_search"])
    path = pipeline.emit_report(reports, str(tmp_path / "r.json"))
    d = json.loads(open(path).read())
    assert [c["name"] for c in d["checks"]] == ["arith.identities", "arith.rh_search"]
    for c in d["checks"]:
        assert set(c) == {"name", "status", "witness", "millis"}
        assert c["status"] == "pass" and c["millis"] is None
    assert pipeline.run(["arith.identities"], timings=True)[0].millis is not None


def test_jsonable_exact_values():
    K = em.field(12)
    z = K.zeta(1, 12)
    assert pipeline.jsonable(K(3) / K(4)) == "3/4"
    assert pipeline.jsonable(z) == z.serialize()
    assert pipeline.jsonable({1: [z, None]}) == {"1": [z.serialize(), None]}


def test_fail_injection(world):
    rows = list(pipeline.TABLE1)
    r = list(rows[5])
    r[2] = 4                                      # W on the order 6 row is 3
    rows[5] = tuple(r)
    base = pipeline.compare_table1(world).mismatches
    v = pipeline.compare_table1(world, rows)
    assert not v.ok
    new = [m for m in v.mismatches if m not in base]
    assert len(new) == 1 and len(v.mismatches) == len(base) + 1
    m = new[0]
    assert (m["row"], m["column"], m["class"]) == (5, "W", "[3]/o6")
    assert m["expected"] == world.ctx(4) and m["actual"] == world.ctx(3)


def test_crash_and_skip(monkeypatch):
    def boom(w):
        raise RuntimeError("injected")
    monkeypatch.setitem(pipeline.REGISTRY, "test.boom", pipeline.CheckSpec("test.boom", boom))
    monkeypatch.setitem(pipeline.REGISTRY, "test.after",
                        pipeline.CheckSpec("test.after", lambda w: pipeline.Verdict(), deps=["test.boom"]))
    a, b = pipeline.run(["test.after"])
    assert (a.name, a.status) == ("test.boom", "fail")
    assert a.witness == {"error": "RuntimeError: injected"}
    assert (b.name, b.status) == ("test.after", "skipped")
    assert b.witness["prerequisites"] == ["test.boom"]


def test_field_too_small():
    (r,) = pipeline.run(["p4.orbits"], order=20)
    assert r.status == "fail"
    w = r.witness
    assert w["error"] == "field too small" and w["current_order"] == 20
    assert w["minimal_order"] % 3 == 0 and w["minimal_order"] % 20 == 0


def test_seed_reaches_world():
    assert pipeline.World(seed=7).seed == 7


def test_cli_list(capsys):
    assert main(["--list"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert len(out) == len(pipeline.REGISTRY)
    assert any(l.startswith("a6.extract_t") for l in out)


def test_cli_exit_codes(capsys, tmp_path):
    assert main(["--checks", "nonsense"]) == 2
    assert "unknown check" in capsys.readouterr().err
    path = tmp_path / "r.json"
    assert main(["--checks", "arith.identities", "--report", str(path)]) == 0
    assert json.loads(path.read_text())["checks"][0]["status"] == "pass"
    assert main(["--checks", "p4.orbits", "--field", "20"]) == 1
    d = json.loads(capsys.readouterr().out)
    assert d["metadata"]["field_order"] == 20
