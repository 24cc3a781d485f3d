from fastapi.testclient import TestClient

from lefcoin.api import app

client = TestClient(app)

MOBIUS = {
    "name": "mobius",
    "vertex_count": 5,
    "facets": [[0, 1, 2], [1, 2, 3], [2, 3, 4], [3, 4, 0], [4, 0, 1]],
    "subcomplex_facets": [[0, 2], [1, 3], [2, 4], [0, 3], [1, 4]],
}
MOBIUS_ID = {"source": "mobius", "target": "mobius", "vertex_images": [0, 1, 2, 3, 4]}


def test_builtins_listing():
    r = client.get("/builtins")
    assert r.status_code == 200
    body = r.json()
    assert body["complexes"] == ["c3", "c6", "genus2", "interval", "point", "s2", "s3", "torus"]
    assert "proj-left" in body["maps"]


def test_homology_endpoint():
    r = client.post("/homology", json={"complex": "builtin:genus2"})
    assert r.status_code == 200
    assert r.json() == {
        "name": "genus2",
        "field": "q",
        "betti": [1, 4, 1],
        "euler": -2,
        "orientability": "orientable",
    }


def test_homology_mod_two():
    # relative homology of the strip against its rim pentagon
    r = client.post("/homology", json={"complex": MOBIUS, "field": "p:2"})
    assert r.status_code == 200
    assert r.json()["betti"] == [0, 1, 1]


def test_lefschetz_endpoint_with_oracle():
    r = client.post(
        "/lefschetz",
        json={"x": "builtin:torus", "m": "builtin:c3",
              "f": "proj-left", "g": "const:0", "oracle": True},
    )
    assert r.status_code == 200
    body = r.json()
    assert body["condition_a"] is True
    assert body["any_nonzero"] is True
    assert body["oracle"]["status"] == "witness"
    values = {(e["degree"], e["index"]): e["coefficients"] for e in body["entries"]}
    assert values[(1, 1)] == ["1"]
    assert values[(2, 0)] == ["0"]


def test_wong_endpoint():
    r = client.post("/wong", json={"x": "builtin:c6", "m": "builtin:c3", "psi": "double"})
    assert r.status_code == 200
    assert r.json()["pairing"] == "-2"


def test_transfer_endpoint():
    r = client.post(
        "/transfer",
        json={"x": "builtin:torus", "m": "builtin:c3", "f": "proj-left", "degree": 2},
    )
    assert r.status_code == 200
    body = r.json()
    assert body["shift"] == 1
    assert body["blocks"]["1"] == [["1"]]


def test_knill_endpoint_reports_equality():
    r = client.post(
        "/knill",
        json={"y": "builtin:c3", "m": "builtin:c3", "g": "proj-right", "degree": 1},
    )
    assert r.status_code == 200
    body = r.json()
    assert body["equal"] is True
    assert body["trace"] == body["homomorphism"]


def test_witness_endpoint():
    r = client.post(
        "/witness",
        json={"x": "builtin:c3", "m": "builtin:c3", "f": "rot", "g": "identity"},
    )
    assert r.status_code == 200
    body = r.json()
    assert body["status"] == "disjoint-certificate"
    assert body["simplices_checked"] == 6


def test_verify_endpoint_builtins_only():
    r = client.post("/verify", json={"seed": 3, "trials": 0})
    assert r.status_code == 200
    body = r.json()
    assert body["passed"] is True
    assert body["report"].endswith("PASS\n")


def test_unknown_builtin_is_a_client_error():
    r = client.post("/homology", json={"complex": "builtin:klein"})
    assert r.status_code == 400
    assert "unknown builtin" in r.json()["detail"]


def test_map_name_mismatch_is_a_client_error():
    bad = {"source": "sphere", "target": "c3", "vertex_images": [0, 1, 2]}
    r = client.post(
        "/lefschetz",
        json={"x": "builtin:c3", "m": "builtin:c3", "f": bad, "g": "identity"},
    )
    assert r.status_code == 400


def test_duality_failure_maps_to_conflict():
    r = client.post(
        "/lefschetz",
        json={"x": MOBIUS, "m": MOBIUS, "f": MOBIUS_ID, "g": MOBIUS_ID},
    )
    assert r.status_code == 409
    assert "fundamental class" in r.json()["detail"]


def test_out_of_range_basis_index():
    r = client.post(
        "/transfer",
        json={"x": "builtin:torus", "m": "builtin:c3", "f": "proj-left", "degree": 9},
    )
    assert r.status_code == 400
