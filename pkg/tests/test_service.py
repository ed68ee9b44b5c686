import json

import pytest

fastapi = pytest.importorskip("fastapi")
from fastapi.testclient import TestClient

from braidfact import corpus
from braidfact.cli import main
from braidfact.service import app


@pytest.fixture(scope="module")
def client():
    with TestClient(app) as c:
        yield c


def test_health(client):
    r = client.get("/health")
    assert r.status_code == 200
    body = r.json()
    assert body["status"] == "ok" and body["version"]


def test_corpus_endpoints(client):
    names = client.get("/corpus").json()["names"]
    assert "conic.bfac" in names
    item = client.get("/corpus/conic").json()
    assert "strands 2" in item["text"]
    assert client.get("/corpus/missing").status_code == 404


def test_verify_endpoint(client):
    r = client.post("/verify", json={"text": corpus.text("cuspidal_cubic")})
    assert r.status_code == 200
    body = r.json()
    assert body["verified"] is True
    assert body["counts"] == {
        "branch": 3,
        "node": 0,
        "cusp": 1,
        "weighted_total": 6,
    }
    assert body["invariants"]["genus"] == 0


def test_hurwitz_endpoint_with_replay(client):
    first = corpus.text("cuspidal_cubic")
    second = corpus.text("cuspidal_cubic_scrambled")
    r = client.post("/hurwitz", json={"first": first, "second": second})
    assert r.status_code == 200
    body = r.json()
    assert body["verdict"] == "equivalent"

    r2 = client.post(
        "/hurwitz",
        json={"first": first, "second": second, "witness": body["witness"]},
    )
    assert r2.status_code == 200
    assert r2.json()["verdict"] == "replayed"


def test_hurwitz_endpoint_distinguished(client):
    r = client.post(
        "/hurwitz",
        json={"first": corpus.text("conic"), "second": corpus.text("cuspidal_cubic")},
    )
    assert r.status_code == 200
    assert r.json()["verdict"] == "distinguished"
    assert r.json()["invariant"] == "strands"


def test_hurwitz_endpoint_unknown(client):
    r = client.post(
        "/hurwitz",
        json={
            "first": corpus.text("cuspidal_cubic"),
            "second": corpus.text("cuspidal_cubic_scrambled"),
            "budget": 2,
            "conjugation_radius": 0,
        },
    )
    assert r.status_code == 200
    body = r.json()
    assert body["verdict"] == "unknown"
    assert body["search"]["reason"] == "budget"


def test_vk_endpoint(client):
    r = client.post("/vk", json={"text": corpus.text("conic")})
    assert r.status_code == 200
    assert r.json()["abelianization"]["name"] == "Z/2"


def test_enumerate_endpoint(client):
    r = client.post("/enumerate", json={"text": corpus.text("conic"), "sheets": 2})
    assert r.status_code == 200
    body = r.json()
    assert body["classes"] == 1
    assert body["euler"] == 4
    assert body["guaranteed"] is False


def test_chisini_endpoint(client):
    r = client.post(
        "/chisini", json={"half_degree": "3", "genus": 4, "cusps": 6, "sheets": 3}
    )
    assert r.status_code == 200
    body = r.json()
    assert body["threshold"] == "8/3"
    assert body["guaranteed"] is True


def test_error_mapping(client):
    assert client.post("/verify", json={"text": "strands x"}).status_code == 422
    bad = "strands 2\nfactor rho=1 Q=\n"
    assert client.post("/vk", json={"text": bad}).status_code == 400
    assert (
        client.post(
            "/enumerate", json={"text": corpus.text("node_pair"), "sheets": 2}
        ).status_code
        == 400
    )
    assert (
        client.post(
            "/enumerate", json={"text": corpus.text("conic"), "sheets": 13}
        ).status_code
        == 400
    )
    assert (
        client.post(
            "/chisini", json={"half_degree": "nope", "genus": 0, "cusps": 0}
        ).status_code
        == 400
    )
    # pydantic rejects missing fields before the handler runs
    assert client.post("/enumerate", json={"text": "strands 2"}).status_code == 422


def test_service_agrees_with_cli(client, capsys, tmp_path):
    """The HTTP document and the CLI structured document are identical."""
    cases = []

    p = tmp_path / "cubic.bfac"
    p.write_text(corpus.text("cuspidal_cubic"))
    cases.append(
        (
            ["verify", str(p), "--format", "structured"],
            client.post("/verify", json={"text": corpus.text("cuspidal_cubic")}),
        )
    )
    cases.append(
        (
            ["vk", str(p), "--format", "structured"],
            client.post("/vk", json={"text": corpus.text("cuspidal_cubic")}),
        )
    )
    cases.append(
        (
            ["enumerate", str(p), "--degree", "3", "--format", "structured"],
            client.post(
                "/enumerate", json={"text": corpus.text("cuspidal_cubic"), "sheets": 3}
            ),
        )
    )
    cases.append(
        (
            [
                "chisini", "--d", "3", "--g", "4", "--c", "6", "--N", "3",
                "--format", "structured",
            ],
            client.post(
                "/chisini",
                json={"half_degree": "3", "genus": 4, "cusps": 6, "sheets": 3},
            ),
        )
    )

    q = tmp_path / "scrambled.bfac"
    q.write_text(corpus.text("cuspidal_cubic_scrambled"))
    cases.append(
        (
            ["hurwitz", str(p), str(q), "--format", "structured"],
            client.post(
                "/hurwitz",
                json={
                    "first": corpus.text("cuspidal_cubic"),
                    "second": corpus.text("cuspidal_cubic_scrambled"),
                },
            ),
        )
    )

    for argv, response in cases:
        code = main(argv)
        out = capsys.readouterr().out
        assert code == 0, argv
        assert json.loads(out) == response.json(), argv
