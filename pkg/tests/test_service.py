import pytest
from fastapi.testclient import TestClient

import kgraphck as kg
from kgraphck.service.app import app


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


def test_health(client):
    assert client.get("/health").json() == {"status": "ok"}


def test_validate_endpoint(client):
    r = client.post("/validate", json={"source": {"builder": "omega:2,1,1"}})
    assert r.status_code == 200
    body = r.json()
    assert body["valid"] and body["num_vertices"] == 4 and body["k"] == 2


def test_validate_inline_skeleton(client, lambda3):
    doc = kg.skeleton_to_dict(lambda3.skeleton, lambda3.regime)
    r = client.post("/validate", json={"source": {"skeleton": doc}})
    assert r.status_code == 200
    assert r.json()["no_sinks"] is True


def test_validate_rejects_bad_square(client, lambda3):
    doc = kg.skeleton_to_dict(lambda3.skeleton, lambda3.regime)
    doc["squares"] = doc["squares"][1:]  # drop one square
    r = client.post("/validate", json={"source": {"skeleton": doc}})
    assert r.status_code == 422
    assert r.json()["kind"] == "MissingSquare"


def test_trace_endpoint_faithful(client):
    r = client.post("/trace", json={"source": {"builder": "lambda_n:3,2"},
                                    "full_check": 2})
    assert r.status_code == 200
    body = r.json()
    assert body["faithful_trace"] == {v: "1/5" for v in
                                      ("v1", "v2", "v3", "v4", "v5")}
    assert body["obstructions"] == []
    assert body["ends"][0]["rank"] == 2


def test_trace_endpoint_obstructed(client):
    r = client.post("/trace", json={"source": {"builder": "figure2:A"}})
    body = r.json()
    assert body["faithful_trace"] is None
    kinds = {o["kind"] for o in body["obstructions"]}
    assert kinds == {"ForcedZeroVertex", "LoopWithEntrance"}
    forced = next(o for o in body["obstructions"]
                  if o["kind"] == "ForcedZeroVertex")
    assert "w" in forced["vertices"]
    assert forced["farkas"] is not None


def test_ends_endpoint(client):
    r = client.post("/ends", json={"source": {"builder": "lambda_n:2,1"}})
    body = r.json()
    assert body["unreached"] == []
    assert all(n == [0, 0] for n in body["sufficient_condition"].values())


def test_ktheory_endpoint(client):
    r = client.post("/ktheory", json={"source": {"builder": "lambda_n:5,2"}})
    body = r.json()
    assert body["K0_rank"] == 2 and body["K1_rank"] == 2
    assert body["morita"] == "K⊗C(T^2)"


def test_ktheory_endpoint_rejects_figure2(client):
    r = client.post("/ktheory", json={"source": {"builder": "figure2:A"}})
    assert r.status_code == 422
    assert r.json()["kind"] == "SufficientConditionUnmet"


def test_algebra_check_endpoint(client):
    r = client.post("/algebra-check", json={
        "source": {"builder": "omega:2,1,1"}, "samples": 10, "seed": 1})
    body = r.json()
    assert body["all_passed"]
    names = {c["name"] for c in body["checks"]}
    assert any("finite-rank" in n for n in names)


def test_dixmier_endpoint(client):
    r = client.post("/dixmier", json={"k": 1, "nmax": 400, "points": 4})
    body = r.json()
    assert abs(body["fitted"] - 2.0) / 2.0 < 0.02
    assert body["C_k"] == 2.0


def test_pair_endpoint(client):
    r = client.post("/pair", json={"example": "lambda_n", "n": 2})
    body = r.json()
    assert body["pairing"] == -2
    assert body["chern"] == 1
    assert body["core_multiplicity"] == 2


def test_source_validation(client):
    r = client.post("/validate", json={"source": {}})
    assert r.status_code == 422
