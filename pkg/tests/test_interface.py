import json

import pytest
from fastapi.testclient import TestClient

from carkwork.cli import cli_main
from carkwork.service import app


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


def run_cli(capsys, *argv) -> tuple[int, str]:
    code = cli_main(list(argv))
    out = capsys.readouterr().out
    return code, out


CASES = [
    (("spine", "1,1,-1"), "/spine?form=1,1,-1"),
    (("signature", "1,6,-6"), "/signature?form=1,6,-6"),
    (("reduce", "--method", "gauss", "1,-1,-1"), "/reduce?form=1,-1,-1&method=gauss"),
    (("reduce", "--method", "cark", "2,6,1"), "/reduce?form=2,6,1&method=cark"),
    (("solve", "1,0,-2", "1", "--count", "3"), "/solve?form=1,0,-2&n=1&count=3"),
    (("solve", "1,0,-2", "3"), "/solve?form=1,0,-2&n=3"),
    (("geodesic", "1,0,-2", "--samples", "8"), "/geodesic?form=1,0,-2&samples=8"),
    (
        ("geodesic", "1,0,-2", "--model", "disk", "--samples", "8"),
        "/geodesic?form=1,0,-2&model=disk&samples=8",
    ),
    (("sunburst", "--depth", "3"), "/sunburst?depth=3"),
    (("sunburst", "--depth", "3", "--center", "LS"), "/sunburst?depth=3&center=LS"),
    (("cark", "1,1,-1", "--depth", "2"), "/cark?form=1,1,-1&depth=2"),
]


@pytest.mark.parametrize("argv,url", CASES, ids=[u for _, u in CASES])
def test_cli_and_service_byte_identical(capsys, client, argv, url):
    code, out = run_cli(capsys, *argv)
    assert code == 0
    response = client.get(url)
    assert response.status_code == 200
    assert out == response.text + "\n"


def test_cli_classify(capsys):
    code, out = run_cli(capsys, "classify", "1,0,1")
    assert code == 0
    assert json.loads(out) == {"class": "positive_definite"}


def test_cli_form_of(capsys):
    code, out = run_cli(capsys, "form-of", "0,-1,1,0")
    assert code == 0
    assert json.loads(out) == {"form": {"a": "1", "b": "0", "c": "1"}}


def test_cli_reduce_gauss_oracle(capsys):
    code, out = run_cli(capsys, "reduce", "--method", "gauss", "1,-1,-1")
    assert code == 0
    end = json.loads(out)["end"]
    assert end in ({"a": "1", "b": "1", "c": "-1"}, {"a": "-1", "b": "1", "c": "1"})


def test_cli_solve_pell(capsys):
    code, out = run_cli(capsys, "solve", "1,0,-2", "1")
    assert code == 0
    doc = json.loads(out)
    x, y = (int(v) for v in doc["solutions"][0])
    assert x * x - 2 * y * y == 1


def test_cli_path_on_spine(capsys):
    code, out = run_cli(capsys, "path-on-spine", "1,1,-1", "-1,1,1")
    assert code == 0
    doc = json.loads(out)
    assert set(doc) == {"letters", "matrix"}


def test_cli_domain_error_exit_1(capsys):
    code, out = run_cli(capsys, "reduce", "--method", "gauss", "1,0,1")
    assert code == 1
    doc = json.loads(out)
    assert set(doc) == {"code", "message"}


def test_cli_malformed_form_exit_2(capsys):
    code, _ = run_cli(capsys, "classify", "bogus")
    assert code == 2


def test_cli_unknown_command_exit_2(capsys):
    assert cli_main(["frobnicate"]) == 2


def test_service_domain_error_422(client):
    response = client.get("/reduce?form=1,0,1&method=gauss")
    assert response.status_code == 422
    doc = response.json()
    assert set(doc) == {"code", "message"}


def test_service_malformed_400(client):
    assert client.get("/reduce?form=bogus").status_code == 400


def test_service_no_solution(client):
    response = client.get("/solve?form=1,0,-2&n=3")
    assert response.status_code == 200
    assert response.text == '{"solutions":[]}'


def test_service_stateless_repeatable(client):
    first = client.get("/cark?form=1,1,-1&depth=2").text
    second = client.get("/cark?form=1,1,-1&depth=2").text
    assert first == second
    assert client.get("/spine?form=1,1,-1").text == client.get("/spine?form=1,1,-1").text


def test_solve_wire_numbers_are_strings(client):
    doc = client.get("/solve?form=1,0,-2&n=1&count=2").json()
    for pair in doc["solutions"]:
        assert all(isinstance(v, str) for v in pair)
    assert all(isinstance(v, str) for v in doc["automorph"].values())
