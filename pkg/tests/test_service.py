import pytest
from fastapi.testclient import TestClient

from condorcet_kit.service import app


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


class TestProbabilityEndpoints:
    def test_exact(self, client):
        resp = client.post("/exact", json={"n": 3, "p": 0.6})
        assert resp.status_code == 200
        body = resp.json()
        assert body["value"] == pytest.approx(0.648, abs=1e-12)
        assert body["method"] == "exact"

    def test_recursive_matches_exact(self, client):
        exact = client.post("/exact", json={"n": 101, "p": 0.55}).json()["value"]
        recursive = client.post("/recursive", json={"n": 101, "p": 0.55}).json()["value"]
        assert recursive == pytest.approx(exact, abs=1e-10)

    def test_brute_force(self, client):
        resp = client.post("/brute-force", json={"n": 3, "p": 0.5})
        assert resp.json()["value"] == pytest.approx(0.5)

    def test_brute_force_guard_maps_to_400(self, client):
        resp = client.post("/brute-force", json={"n": 27, "p": 0.5})
        assert resp.status_code == 400

    def test_even_n_maps_to_400(self, client):
        resp = client.post("/exact", json={"n": 4, "p": 0.6})
        assert resp.status_code == 400
        assert "odd" in resp.json()["detail"]


class TestBoundAndSeries:
    def test_bound(self, client):
        resp = client.post("/bound", json={"n": 15, "p": 0.75})
        body = resp.json()
        assert body["alpha"] == pytest.approx(3.0)
        assert body["lower"] == pytest.approx(0.8)

    def test_bound_hypothesis_violation_maps_to_422(self, client):
        resp = client.post("/bound", json={"n": 15, "p": 0.5})
        assert resp.status_code == 422
        assert resp.json()["condition"] == "p > 1/2"

    def test_series(self, client):
        resp = client.post("/series", json={"p": 0.6, "tolerance": 1e-9})
        body = resp.json()
        assert body["partial_sum"] == pytest.approx(1.0, abs=1e-9)
        assert body["tail_bound"] <= 1e-9

    def test_series_hypothesis_violation(self, client):
        assert client.post("/series", json={"p": 0.4}).status_code == 422


class TestSimulateAndCurve:
    def test_simulate_deterministic(self, client):
        payload = {"n": 3, "p": 0.6, "trials": 10000, "seed": 7}
        a = client.post("/simulate", json=payload).json()
        b = client.post("/simulate", json=payload).json()
        assert a == b
        assert a["successes"] + 0 <= a["trials"]

    def test_curve_shape(self, client):
        resp = client.post("/curve", json={"p_values": [0.6, 0.8], "n_max": 9})
        rows = resp.json()
        assert len(rows) == 10
        assert [r["n"] for r in rows[:5]] == [1, 3, 5, 7, 9]
        assert rows[0]["exact"] == pytest.approx(0.6)
        assert rows[0]["bound"] is not None

    def test_curve_empty_p_rejected(self, client):
        assert client.post("/curve", json={"p_values": [], "n_max": 9}).status_code == 400


class TestDecideAndVerify:
    def test_decide(self, client):
        resp = client.post("/decide", json={"votes": [1, -1, 1], "p": 0.7})
        body = resp.json()
        assert body["majority"] == 1
        assert body["map"] == 1
        assert body["map_tie"] is False

    def test_decide_even_votes_rejected(self, client):
        assert client.post("/decide", json={"votes": [1, -1], "p": 0.7}).status_code == 400

    def test_verify_passes_small_grid(self, client):
        resp = client.post(
            "/verify", json={"n_max": 7, "p_grid": [0.5, 0.6, 0.9], "trials": 20000, "seed": 1}
        )
        body = resp.json()
        assert body["passed"] is True
        assert len(body["checks"]) >= 7
