"""JSON certificate serialization: round trips and parse diagnostics."""

import json

import pytest

from sigmacycles import (
    CertificateParseError,
    construct_berge_hamiltonian,
    construct_k_intersecting,
    construct_sharp_hamiltonian,
    make_hypergraph,
    parse_partition,
)
from sigmacycles.certfile import dumps, from_json_dict, read_certificate, write_certificate


def certs():
    yield construct_berge_hamiltonian(make_hypergraph(3, 3, parse_partition("2,1")))
    yield construct_sharp_hamiltonian(make_hypergraph(3, 6, parse_partition("2,1")))
    yield construct_k_intersecting(make_hypergraph(4, 3, parse_partition("1,1,1")), 3)


@pytest.mark.parametrize("cert", list(certs()), ids=lambda c: c.kind)
def test_round_trip(cert, tmp_path):
    path = tmp_path / "cert.json"
    write_certificate(cert, path)
    loaded = read_certificate(path)
    assert loaded == cert
    assert dumps(loaded) == dumps(cert)


def test_serialization_is_deterministic():
    cert = construct_berge_hamiltonian(make_hypergraph(3, 3, parse_partition("2,1")))
    assert dumps(cert) == dumps(cert)
    doc = json.loads(dumps(cert))
    assert list(doc) == ["schema_version", "hypergraph", "cycle", "claims"]


def base_doc():
    cert = construct_sharp_hamiltonian(make_hypergraph(3, 6, parse_partition("2,1")))
    return json.loads(dumps(cert))


def expect_error(doc, fragment):
    with pytest.raises(CertificateParseError) as exc:
        from_json_dict(doc)
    assert fragment in str(exc.value)


def test_unknown_schema_version():
    doc = base_doc()
    doc["schema_version"] = "2"
    expect_error(doc, "schema_version")


def test_unsorted_sigma():
    doc = base_doc()
    doc["hypergraph"]["sigma"] = [1, 2]
    expect_error(doc, "not sorted non-increasing")


def test_invalid_hypergraph():
    doc = base_doc()
    doc["hypergraph"]["q"] = 1
    expect_error(doc, "invalid hypergraph parameters")


def test_unknown_kind():
    doc = base_doc()
    doc["cycle"]["kind"] = "loose"
    expect_error(doc, "unknown cycle kind")


def test_wrong_edge_cardinality():
    doc = base_doc()
    doc["cycle"]["edges"][2] = doc["cycle"]["edges"][2][:2]
    expect_error(doc, "edge 2 has 2 vertices, expected r=3")


def test_duplicate_vertex_in_edge():
    doc = base_doc()
    doc["cycle"]["edges"][1][0] = doc["cycle"]["edges"][1][1]
    expect_error(doc, "edge 1 has a duplicate vertex")


def test_vertex_out_of_range():
    doc = base_doc()
    doc["cycle"]["edges"][0][0] = [7, 0]
    expect_error(doc, "out of range")


def test_malformed_vertex():
    doc = base_doc()
    doc["cycle"]["edges"][0][0] = [0, "x"]
    expect_error(doc, "integer pair")


def test_berge_requires_vertex_sequence():
    cert = construct_berge_hamiltonian(make_hypergraph(3, 3, parse_partition("2,1")))
    doc = json.loads(dumps(cert))
    del doc["cycle"]["vertex_sequence"]
    expect_error(doc, "vertex_sequence")


def test_truncated_file(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(dumps(construct_berge_hamiltonian(make_hypergraph(3, 3, parse_partition("2,1"))))[:40])
    with pytest.raises(CertificateParseError):
        read_certificate(path)


def test_missing_file(tmp_path):
    with pytest.raises(CertificateParseError):
        read_certificate(tmp_path / "nope.json")
