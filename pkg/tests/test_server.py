import json

import pytest
from fastapi.testclient import TestClient

from src.config import config
from src.main import app


@pytest.fixture
def client():
    with TestClient(app) as test_client:
        yield test_client


def rpc(client, method, params=None, request_id=1):
    response = client.post("/", json={"jsonrpc": "2.0", "method": method, "params": params or {}, "id": request_id})
    return response.status_code, response.json()


def test_health(client):
    response = client.get("/health")
    assert response.status_code == 200
    assert response.json()["status"] == "healthy"


def test_initialize(client):
    status, body = rpc(client, "initialize", {"protocolVersion": "2024-11-05"})
    assert status == 200
    assert body["result"]["serverInfo"]["name"] == "jspec"


def test_tools_are_listed(client):
    _, body = rpc(client, "tools/list")
    names = [tool["name"] for tool in body["result"]["tools"]]
    assert len(names) == 15
    assert "count_hom" in names and "prolong" in names


def test_tool_call(client):
    _, body = rpc(client, "tools/call", {"name": "count_hom", "arguments": {"src": "1,1", "dst": "2,2"}})
    assert body["result"]["content"]["count"] == 4
    assert body["id"] == 1


def test_unknown_tool(client):
    status, body = rpc(client, "tools/call", {"name": "get_balance", "arguments": {}})
    assert status == 200
    assert body["error"]["code"] == -32602
    assert body["error"]["data"] == {"field": "name"}


def test_tool_errors_carry_their_code(client):
    _, body = rpc(client, "pi0", {"window": "9,9"})
    assert body["error"]["code"] == -32602


def test_short_morphism_keys_are_invalid_params(client):
    _, body = rpc(client, "tools/call", {"name": "decompose", "arguments": {"morphism": "1,1>2,2:1/2"}})
    assert body["error"]["code"] == -32602
    assert body["error"]["data"] == {"field": "morphism"}


def test_tool_names_are_methods(client):
    _, body = rpc(client, "pi0", {"window": "2,2"})
    assert body["result"]["components"] == 5


def test_invalid_json(client):
    response = client.post("/", content=b"{not json", headers={"content-type": "application/json"})
    assert response.status_code == 400
    assert response.json()["error"]["code"] == -32700


def test_invalid_request(client):
    response = client.post("/", json={"jsonrpc": "1.0", "method": "initialize", "id": 3})
    assert response.status_code == 400
    body = response.json()
    assert body["error"]["code"] == -32600
    assert body["id"] == 3


def test_unknown_method(client):
    _, body = rpc(client, "getblockcount")
    assert body["error"]["code"] == -32601


def test_resources(client):
    _, body = rpc(client, "resources/list")
    uris = [resource["uri"] for resource in body["result"]["resources"]]
    assert uris == ["jspec:category:window", "jspec:pi0", "jspec:config"]
    _, body = rpc(client, "resources/read", {"uri": "jspec:pi0"})
    content = json.loads(body["result"]["contents"][0]["text"])
    assert content["components"] == config.WINDOW_M + config.WINDOW_N + 1


def test_server_status(client):
    _, body = rpc(client, "get_server_status")
    assert body["result"]["server"]["config"]["seed"] == config.SEED
    assert "random_tdatum" in body["result"]["available_methods"]
