import os
import sys

import pytest
from fastapi.testclient import TestClient

# Adjust the import path for the FastAPI app instance
try:
    from app.main import app
except ModuleNotFoundError:
    sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))
    from app.main import app

CYCLIC_2 = [[0, 1], [1, 0]]
RECT_2_2 = [[0, 1, 0, 1], [0, 1, 0, 1], [2, 3, 2, 3], [2, 3, 2, 3]]
NOT_ASSOCIATIVE = [[1, 0], [0, 0]]


@pytest.fixture(scope="module")
def client():
    """Create a TestClient instance for the FastAPI app."""
    with TestClient(app) as c:
        yield c


# --- Basic API Endpoint Tests ---
def test_get_status(client: TestClient):
    response = client.get("/status")
    assert response.status_code == 200
    assert response.json() == {"status": "ok", "message": "Semigroup homology service is running"}


def test_openapi_docs(client: TestClient):
    response = client.get("/docs")
    assert response.status_code == 200


# --- /validate ---
def test_validate_table(client: TestClient):
    response = client.post("/validate", json={"table": CYCLIC_2})
    assert response.status_code == 200
    assert response.json() == {"valid": True, "order": 2, "identity": 0}


def test_validate_text(client: TestClient):
    response = client.post("/validate", json={"text": "# left zeros\n2\n0 0\n1 1\n"})
    assert response.status_code == 200
    data = response.json()
    assert data["order"] == 2
    assert data["identity"] is None


def test_validate_not_associative(client: TestClient):
    response = client.post("/validate", json={"table": NOT_ASSOCIATIVE})
    assert response.status_code == 422
    assert response.json()["detail"].startswith("Processing error:")


def test_validate_parse_error(client: TestClient):
    response = client.post("/validate", json={"text": "2\n0 1\n"})
    assert response.status_code == 400
    assert response.json()["detail"].startswith("Table parse error:")


@pytest.mark.parametrize("payload", [{}, {"table": CYCLIC_2, "text": "1\n0\n"}])
def test_validate_needs_exactly_one_source(client: TestClient, payload):
    response = client.post("/validate", json=payload)
    assert response.status_code == 422


# --- /info and /group-completion ---
def test_info(client: TestClient):
    response = client.post("/info", json={"table": RECT_2_2})
    assert response.status_code == 200
    data = response.json()
    assert data["order"] == 4
    assert data["idempotents"] == [0, 1, 2, 3]
    assert data["min_ideal"]["order"] == 4
    assert data["min_ideal"]["sandwich"] == [[1, 1], [1, 1]]
    assert data["k_thin"] is False
    assert data["group_completion_order"] == 1
    assert data["abelianization"] == "0"


def test_group_completion(client: TestClient):
    response = client.post("/group-completion", json={"table": CYCLIC_2})
    assert response.status_code == 200
    data = response.json()
    assert data["order"] == 2
    assert data["rho"] == [0, 1]
    assert data["table"] == [[0, 1], [1, 0]]
    assert data["abelianization"] == "C_2"


# --- /homology ---
def test_homology_of_rect(client: TestClient):
    response = client.post("/homology", json={"table": RECT_2_2, "max_dim": 3})
    assert response.status_code == 200
    data = response.json()
    assert [group["text"] for group in data["homology"]] == ["0", "Z", "0"]
    assert data["homology"][1]["rank"] == 1
    assert data["oracle_checked"] is False


def test_homology_auto_checks_the_bar_complex(client: TestClient):
    response = client.post("/homology", json={"table": CYCLIC_2, "max_dim": 3, "method": "auto"})
    assert response.status_code == 200
    data = response.json()
    assert [group["text"] for group in data["homology"]] == ["C_2", "0", "C_2"]
    assert data["oracle_checked"] is True


def test_homology_by_nerve(client: TestClient):
    response = client.post("/homology", json={"table": CYCLIC_2, "max_dim": 2, "method": "nerve"})
    assert response.status_code == 200
    assert response.json()["method"] == "nerve"


@pytest.mark.parametrize("payload", [
    {"table": CYCLIC_2, "max_dim": 0},
    {"table": CYCLIC_2, "method": "spectral"},
])
def test_homology_rejects_bad_arguments(client: TestClient, payload):
    response = client.post("/homology", json=payload)
    assert response.status_code == 422


# --- /census ---
def test_census(client: TestClient):
    response = client.get("/census", params={"order": 2, "max_dim": 2})
    assert response.status_code == 200
    data = response.json()
    assert data["class_count"] == 4
    assert "classes" not in data
    assert sum(entry["count"] for entry in data["signatures"]) == 4


def test_census_order_too_large(client: TestClient):
    response = client.get("/census", params={"order": 4})
    assert response.status_code == 422


# --- /fixtures ---
def test_list_fixtures(client: TestClient):
    response = client.get("/fixtures")
    assert response.status_code == 200
    names = [entry["name"] for entry in response.json()]
    assert "sphere_3" in names


def test_get_fixture(client: TestClient):
    response = client.get("/fixtures/sphere_3")
    assert response.status_code == 200
    data = response.json()
    assert len(data["table"]) == 6
    assert data["expected"] == ["0", "0", "Z", "0"]


def test_unknown_fixture(client: TestClient):
    response = client.get("/fixtures/no_such_fixture")
    assert response.status_code == 404
    assert "Unknown fixture" in response.json()["detail"]
