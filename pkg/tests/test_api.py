import shutil

import pytest
from fastapi.testclient import TestClient

from geox.api import ServiceConfig, create_app
from tests.conftest import FIXTURES

ADMIN_TOKEN = "test-admin-token"


def make_client(tmp_path, with_token=True, with_gazetteer=True):
    data_dir = tmp_path / "data"
    data_dir.mkdir(exist_ok=True)
    shutil.copy(FIXTURES / "datasets.csv", data_dir / "datasets.csv")
    shutil.copy(FIXTURES / "publications.csv", data_dir / "publications.csv")
    if with_gazetteer:
        shutil.copy(FIXTURES / "gazetteer.csv", data_dir / "gazetteer.csv")
    config = ServiceConfig(
        data_dir=data_dir, admin_token=ADMIN_TOKEN if with_token else None
    )
    return TestClient(create_app(config))


AUTH = {"Authorization": f"Bearer {ADMIN_TOKEN}"}


@pytest.fixture
def client(tmp_path):
    return make_client(tmp_path)


NEW_DATASET = {
    "name": "Night Lights Epsilon",
    "providers": [
        {"name": "Agency Four", "category": "government", "region": "asia"}
    ],
    "first_available_year": 2012,
    "update_frequency": "monthly",
    "cost": {"access": "free"},
    "coverage": {"region": "global", "areas": ["Global"]},
    "resolutions": [{"kind": "length", "min_meters": 500, "max_meters": 500}],
    "url": "https://example.org/epsilon",
    "health_applications": ["Light Pollution"],
}


def test_list_datasets(client):
    r = client.get("/api/datasets")
    assert r.status_code == 200
    body = r.json()
    assert len(body) == 8
    assert {"id", "name", "providers", "cost", "coverage", "publications"} <= set(
        body[0]
    )


def test_filtered_search(client):
    r = client.get("/api/datasets", params={"health": ["Heat Stress"]})
    assert [d["id"] for d in r.json()] == [
        "thermal-imagery-alpha",
        "vegetation-index-beta",
    ]
    r = client.get("/api/datasets", params={"q": "hemoragic fever"})
    assert [d["id"] for d in r.json()] == ["thermal-imagery-alpha"]


def test_invalid_cost_is_400_with_error_body(client):
    r = client.get("/api/datasets", params={"cost": "gratis"})
    assert r.status_code == 400
    body = r.json()
    assert set(body) == {"error", "details"}
    assert body["details"][0]["field"] == "cost"
    assert "free" in body["details"][0]["message"]


def test_invalid_provider_category_is_400(client):
    r = client.get("/api/datasets", params={"provider_category": "ministry"})
    assert r.status_code == 400
    assert "government" in r.json()["details"][0]["message"]


def test_get_dataset_detail(client):
    r = client.get("/api/datasets/thermal-imagery-alpha")
    assert r.status_code == 200
    body = r.json()
    assert body["name"] == "Thermal Imagery Alpha"
    titles = {p["title"] for p in body["publications"]}
    assert "Landscape Drivers of Haemorrhagic Fever" in titles


def test_get_dataset_404(client):
    r = client.get("/api/datasets/nope")
    assert r.status_code == 404
    assert set(r.json()) == {"error", "details"}


def test_list_publications(client):
    r = client.get("/api/publications")
    assert len(r.json()) == 10
    r = client.get("/api/publications", params={"dataset": "vegetation index"})
    assert [p["id"] for p in r.json()] == ["p-greenness-cities", "p-heat-and-health"]


def test_get_publication_detail(client):
    r = client.get("/api/publications/p-heat-and-health")
    assert r.status_code == 200
    assert {d["id"] for d in r.json()["datasets"]} == {
        "thermal-imagery-alpha",
        "vegetation-index-beta",
    }
    assert client.get("/api/publications/nope").status_code == 404


def test_stats_endpoint(client):
    r = client.get("/api/stats/cost")
    assert r.status_code == 200
    assert r.json()["rows"] == [
        {"label": "Free", "count": 6},
        {"label": "Paid", "count": 2},
    ]
    r = client.get("/api/stats/bogus")
    assert r.status_code == 404
    assert "cost" in r.json()["error"]


def test_hotspots_endpoint(client):
    r = client.get("/api/hotspots")
    assert r.status_code == 200
    by_area = {h["area"]: h for h in r.json()}
    assert by_area["Global"]["dataset_count"] == 4
    assert by_area["Kenya"]["flag"] == "ke"


# --- admin auth ------------------------------------------------------------


def test_admin_requires_token(client):
    assert client.post("/api/admin/datasets", json=NEW_DATASET).status_code == 401
    bad = {"Authorization": "Bearer wrong"}
    r = client.post("/api/admin/datasets", json=NEW_DATASET, headers=bad)
    assert r.status_code == 401
    assert set(r.json()) == {"error", "details"}


def test_admin_disabled_without_configured_token(tmp_path):
    client = make_client(tmp_path, with_token=False)
    r = client.post("/api/admin/datasets", json=NEW_DATASET, headers=AUTH)
    assert r.status_code == 401


# --- admin CRUD ------------------------------------------------------------


def test_admin_create_dataset_persists(tmp_path):
    client = make_client(tmp_path)
    r = client.post("/api/admin/datasets", json=NEW_DATASET, headers=AUTH)
    assert r.status_code == 201
    assert r.json() == {"id": "night-lights-epsilon"}
    assert client.get("/api/datasets/night-lights-epsilon").status_code == 200
    # the CSV pair on disk reflects the change immediately
    text = (tmp_path / "data" / "datasets.csv").read_text()
    assert "night-lights-epsilon" in text


def test_admin_create_invalid_record_is_422(client):
    payload = {**NEW_DATASET, "providers": []}
    r = client.post("/api/admin/datasets", json=payload, headers=AUTH)
    assert r.status_code == 422
    assert set(r.json()) == {"error", "details"}


def test_admin_missing_required_field_is_422(client):
    r = client.post("/api/admin/datasets", json={"providers": []}, headers=AUTH)
    assert r.status_code == 422
    body = r.json()
    assert set(body) == {"error", "details"}
    assert any("name" in d["field"] for d in body["details"])


def test_admin_update_dataset(client):
    r = client.get("/api/datasets/kenya-road-map")
    payload = r.json()
    payload["name"] = "Kenya Road Network"
    del payload["publications"]
    r = client.put("/api/admin/datasets/kenya-road-map", json=payload, headers=AUTH)
    assert r.status_code == 200
    assert client.get("/api/datasets/kenya-road-map").json()["name"] == "Kenya Road Network"
    # the link back from its publication survived the update
    assert "kenya-road-map" in client.get(
        "/api/publications/p-malaria-mapping"
    ).json()["dataset_ids"]


def test_admin_delete_referenced_conflicts_then_forces(client):
    r = client.delete("/api/admin/datasets/kenya-road-map", headers=AUTH)
    assert r.status_code == 409
    r = client.delete(
        "/api/admin/datasets/kenya-road-map", params={"force": "true"}, headers=AUTH
    )
    assert r.status_code == 200
    assert client.get("/api/datasets/kenya-road-map").status_code == 404
    assert client.get("/api/publications/p-malaria-mapping").json()["dataset_ids"] == []


def test_admin_delete_unknown_404(client):
    assert client.delete("/api/admin/datasets/nope", headers=AUTH).status_code == 404


def test_admin_publication_crud(client):
    payload = {
        "title": "New Study",
        "year": 2024,
        "journal": "Journal",
        "journal_category": "science",
        "study_theme": "environment",
        "dataset_ids": ["elevation-model-delta"],
    }
    r = client.post("/api/admin/publications", json=payload, headers=AUTH)
    assert r.status_code == 201
    pid = r.json()["id"]
    assert pid == "new-study"
    assert pid in client.get("/api/datasets/elevation-model-delta").json()[
        "publication_ids"
    ]
    r = client.delete(f"/api/admin/publications/{pid}", headers=AUTH)
    assert r.status_code == 409  # still referenced by the dataset
    r = client.delete(
        f"/api/admin/publications/{pid}", params={"force": "true"}, headers=AUTH
    )
    assert r.status_code == 200


# --- contributions ---------------------------------------------------------


def test_contribution_flow_approve(tmp_path):
    client = make_client(tmp_path)
    r = client.post(
        "/api/contributions",
        json={"kind": "dataset", "payload": NEW_DATASET, "submitter": "alice"},
    )
    assert r.status_code == 201
    cid = r.json()["id"]
    assert r.json()["state"] == "pending"
    # not yet visible in the catalogue
    assert client.get("/api/datasets/night-lights-epsilon").status_code == 404

    r = client.get("/api/admin/contributions", headers=AUTH)
    assert [c["id"] for c in r.json()] == [cid]
    r = client.get(
        "/api/admin/contributions", params={"state": "pending"}, headers=AUTH
    )
    assert len(r.json()) == 1

    r = client.post(
        f"/api/admin/contributions/{cid}/approve",
        json={"note": "looks good"},
        headers=AUTH,
    )
    assert r.status_code == 200
    assert r.json()["record_id"] == "night-lights-epsilon"
    assert client.get("/api/datasets/night-lights-epsilon").status_code == 200

    # double-approve conflicts
    r = client.post(f"/api/admin/contributions/{cid}/approve", headers=AUTH)
    assert r.status_code == 409

    # both sidecar and CSV were persisted
    assert "night-lights-epsilon" in (tmp_path / "data" / "datasets.csv").read_text()
    assert cid in (tmp_path / "data" / "contributions.json").read_text()


def test_contribution_flow_reject(client):
    cid = client.post(
        "/api/contributions", json={"kind": "dataset", "payload": NEW_DATASET}
    ).json()["id"]
    r = client.post(f"/api/admin/contributions/{cid}/reject", headers=AUTH)
    assert r.status_code == 200
    assert client.get("/api/datasets/night-lights-epsilon").status_code == 404
    r = client.get(
        "/api/admin/contributions", params={"state": "rejected"}, headers=AUTH
    )
    assert [c["id"] for c in r.json()] == [cid]


def test_approve_invalid_contribution_stays_pending(client):
    bad_payload = {**NEW_DATASET, "providers": []}
    cid = client.post(
        "/api/contributions", json={"kind": "dataset", "payload": bad_payload}
    ).json()["id"]
    r = client.post(f"/api/admin/contributions/{cid}/approve", headers=AUTH)
    assert r.status_code == 422
    r = client.get(
        "/api/admin/contributions", params={"state": "pending"}, headers=AUTH
    )
    assert [c["id"] for c in r.json()] == [cid]


def test_contributions_require_admin_to_list(client):
    assert client.get("/api/admin/contributions").status_code == 401


def test_contribution_bad_kind_is_422(client):
    r = client.post("/api/contributions", json={"kind": "recipe", "payload": {}})
    assert r.status_code == 422
    assert set(r.json()) == {"error", "details"}


def test_contributions_survive_restart(tmp_path):
    client = make_client(tmp_path)
    cid = client.post(
        "/api/contributions", json={"kind": "dataset", "payload": NEW_DATASET}
    ).json()["id"]
    reopened = TestClient(
        create_app(ServiceConfig(data_dir=tmp_path / "data", admin_token=ADMIN_TOKEN))
    )
    r = reopened.get("/api/admin/contributions", headers=AUTH)
    assert [c["id"] for c in r.json()] == [cid]


def test_service_refuses_invalid_data_dir(tmp_path):
    data_dir = tmp_path / "data"
    data_dir.mkdir()
    (data_dir / "datasets.csv").write_text("id,name\nx,y\n")
    (data_dir / "publications.csv").write_text("id\n")
    with pytest.raises(RuntimeError):
        create_app(ServiceConfig(data_dir=data_dir))
