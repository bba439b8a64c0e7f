import pytest
from fastapi.testclient import TestClient

from qrmagic.service import app
from qrmagic.service import models as m


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


def test_info(client):
    reply = client.get("/")
    assert reply.status_code == 200
    info = m.InfoResponse.model_validate(reply.json())
    assert "/threshold" in info.endpoints


def test_code_endpoint(client):
    reply = client.post("/code", json={"r": 1, "m": 4, "include_matrices": True})
    assert reply.status_code == 200
    resp = m.CodeResponse.model_validate(reply.json())
    assert (resp.n, resp.k, resp.d, resp.n_logical) == (15, 4, 8, 1)
    assert resp.hx is not None and resp.hx.count("\n") == 3


def test_certify_endpoint(client):
    reply = client.post("/certify", json={"r": 1, "m": 5, "k": 3})
    resp = m.CertifyResponse.model_validate(reply.json())
    assert resp.passed and resp.a == 15 and resp.x == 15
    reply = client.post("/certify", json={"r": 1, "m": 4, "k": 3})
    resp = m.CertifyResponse.model_validate(reply.json())
    assert not resp.passed and resp.witness is not None


def test_poly_endpoint(client):
    reply = client.post("/poly", json={"k": 2, "series_order": 4})
    resp = m.PolyResponse.model_validate(reply.json())
    assert resp.leading_coefficient == "35"
    assert resp.series[3].num == "35" and resp.series[4].num == "105"
    assert resp.series[3].den == "1"


def test_threshold_endpoint(client):
    reply = client.post("/threshold", json={"k": 2})
    resp = m.ThresholdResponse.model_validate(reply.json())
    assert resp.percent_rounded == "14.15"


def test_verify_endpoint(client):
    reply = client.post("/verify", json={"k": 2})
    resp = m.VerifyResponse.model_validate(reply.json())
    assert resp.agree and resp.circuit_oracle_run
    assert "circuit_exhaustive" in resp.methods
    # k=5: circuit oracle is skipped and reported
    reply = client.post("/verify", json={"k": 5})
    resp = m.VerifyResponse.model_validate(reply.json())
    assert resp.agree and not resp.circuit_oracle_run
    assert "skipped" in resp.detail


def test_estimate_endpoints(client):
    reply = client.post("/estimate/risc",
                        json={"eps_target": 1e-10, "eps": 1e-4})
    resp = m.EstimateResponse.model_validate(reply.json())
    assert resp.t_count == 148 and resp.levels == 2
    reply = client.post("/estimate/cisc",
                        json={"k": 3, "eps": 1e-4, "eps_target": 1e-8})
    resp = m.EstimateResponse.model_validate(reply.json())
    assert resp.levels == 1 and resp.architecture == "cisc"


def test_estimate_domain_error(client):
    reply = client.post("/estimate/cisc",
                        json={"k": 3, "eps": 0.2, "eps_target": 1e-8})
    assert reply.status_code == 400
    assert "threshold" in reply.json()["detail"]


def test_estimate_usage_error(client):
    reply = client.post("/estimate/cisc", json={"k": 1, "eps": 1e-4, "eps_target": 1e-8})
    assert reply.status_code == 422


def test_sweep_endpoint(client):
    reply = client.post("/sweep", json={
        "k_list": [3, 4], "eps": 1e-4,
        "eps_targets": [1e-6, 1e-8, 1e-10],
    })
    resp = m.SweepResponse.model_validate(reply.json())
    assert len(resp.rows) == 3 * 4
    assert resp.csv.splitlines()[0].startswith("architecture,")


def test_circuit_endpoint(client):
    reply = client.post("/circuit", json={"kind": "distillation", "k": 2})
    resp = m.CircuitResponse.model_validate(reply.json())
    assert resp.qubits == 16
    assert resp.text.startswith("QUBITS 16")
    reply = client.post("/circuit", json={"kind": "teleport", "k": 3, "format": "qasm"})
    resp = m.CircuitResponse.model_validate(reply.json())
    assert "OPENQASM" in resp.text
    reply = client.post("/circuit", json={"kind": "encoder"})
    assert reply.status_code == 400


def test_mek_distiller_placeholder_noted(client):
    reply = client.post("/estimate/risc", json={
        "eps_target": 1e-10, "eps": 1e-4, "distiller": "mek",
    })
    resp = m.EstimateResponse.model_validate(reply.json())
    assert resp.notes and "NON-AUTHORITATIVE" in resp.notes[0]


def test_mek_params_loaded_from_file(client, tmp_path):
    path = tmp_path / "mek.json"
    path.write_text(
        '{"acceptance": [1.0, -8.0], "output_error": [0.0, 0.0, 6.0],'
        ' "source": "service-test"}'
    )
    reply = client.post("/estimate/risc", json={
        "eps_target": 1e-10, "eps": 1e-4, "distiller": "mek",
        "mek_params_path": str(path),
    })
    resp = m.EstimateResponse.model_validate(reply.json())
    assert not resp.notes
    assert "service-test" in resp.distiller
