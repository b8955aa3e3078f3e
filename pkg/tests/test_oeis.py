import json
import threading
from http.server import BaseHTTPRequestHandler, HTTPServer
from urllib.parse import parse_qs, urlparse

import pytest

from fusscat.catalan import catalan, fuss_catalan
from fusscat.oeis import (
    CrossCheckReport,
    InvalidIdentifierError,
    MalformedResponseError,
    NetworkError,
    NotFoundError,
    OEISClient,
    SequenceRecord,
    Source,
    Verdict,
    cross_check,
    fetch_sequence,
    parse_search_response,
)

CATALAN_DATA = ",".join(str(catalan(k)) for k in range(20))


class _Handler(BaseHTTPRequestHandler):
    routes: dict = {}

    def do_GET(self):  # noqa: N802
        url = urlparse(self.path)
        query = parse_qs(url.query)
        key = (url.path, query.get("q", [""])[0], query.get("fmt", [""])[0])
        status, body = self.routes.get(key, (404, b"not found"))
        self.send_response(status)
        self.send_header("Content-Type", "application/json")
        self.end_headers()
        self.wfile.write(body)

    def log_message(self, *args):
        pass


@pytest.fixture(scope="module")
def server():
    _Handler.routes = {
        ("/search", "id:A000108", "json"): (200, json.dumps([{"number": 108, "data": CATALAN_DATA}]).encode()),
        ("/search", "id:A001764", "json"): (
            200,
            json.dumps({"results": [{"number": 1764, "data": "1,1,3,12,55"}]}).encode(),
        ),
        ("/search", "id:A999999", "json"): (200, b"null"),
        ("/search", "id:A000001", "json"): (200, b"{not json"),
        ("/search", "id:A000002", "json"): (200, json.dumps([{"number": 2}]).encode()),
        ("/search", "id:A000003", "json"): (500, b"oops"),
    }
    httpd = HTTPServer(("127.0.0.1", 0), _Handler)
    thread = threading.Thread(target=httpd.serve_forever, daemon=True)
    thread.start()
    yield f"http://127.0.0.1:{httpd.server_address[1]}"
    httpd.shutdown()


def test_bundled_fixtures():
    client = OEISClient(offline=True)
    cat = client.fetch("A001764")
    assert cat.source is Source.FIXTURE
    assert cat.terms[:5] == (1, 1, 3, 12, 55)
    assert list(cat.terms) == [fuss_catalan(3, k) for k in range(len(cat.terms))]
    assert client.fetch("A000108").terms[:5] == (1, 1, 2, 5, 14)


def test_fixture_dir_override(tmp_path, monkeypatch):
    (tmp_path / "A000045.txt").write_text("A000045\n0,1,1,2,3,5\n")
    monkeypatch.setenv("FUSSCAT_FIXTURE_DIR", str(tmp_path))
    rec = fetch_sequence("A000045")
    assert rec.terms == (0, 1, 1, 2, 3, 5)
    with pytest.raises(NotFoundError):
        fetch_sequence("A000108")
    (tmp_path / "A000046.txt").write_text("A000047\n1,2\n")
    with pytest.raises(MalformedResponseError):
        fetch_sequence("A000046")


def test_invalid_identifier():
    for bad in ["X123", "A12345", "a000108", "A0001080"]:
        with pytest.raises(InvalidIdentifierError):
            OEISClient().fetch(bad)


def test_network_fetch(server):
    client = OEISClient(base_url=server, offline=False, timeout=5)
    rec = client.fetch("A000108")
    assert rec.source is Source.NETWORK
    assert rec.terms == tuple(catalan(k) for k in range(20))
    assert client.fetch("A001764").terms == (1, 1, 3, 12, 55)


def test_network_errors(server):
    client = OEISClient(base_url=server, offline=False, timeout=5)
    with pytest.raises(NotFoundError):
        client.fetch("A999999")
    with pytest.raises(MalformedResponseError):
        client.fetch("A000001")
    with pytest.raises(MalformedResponseError):
        client.fetch("A000002")
    with pytest.raises(NetworkError):
        client.fetch("A000003")
    with pytest.raises(NotFoundError):
        client.fetch("A000004")


def test_unreachable_host():
    client = OEISClient(base_url="http://127.0.0.1:9", offline=False, timeout=2)
    with pytest.raises(NetworkError):
        client.fetch("A000108")


def test_parse_search_response_shapes():
    assert parse_search_response('[{"number": 5, "data": "1, 2"}]', "A000005").terms == (1, 2)
    with pytest.raises(MalformedResponseError):
        parse_search_response('[{"number": 5, "data": "1,x"}]', "A000005")
    with pytest.raises(NotFoundError):
        parse_search_response('{"results": null}', "A000005")


def test_cross_check_verdicts():
    remote = SequenceRecord("A000108", tuple(catalan(k) for k in range(10)), Source.FIXTURE)
    local = [catalan(k) for k in range(6)]
    rep = cross_check(local, remote)
    assert rep == CrossCheckReport(6, Verdict.MATCH)

    altered = list(local)
    altered[3] = 6
    rep = cross_check(altered, remote)
    assert rep.verdict is Verdict.MISMATCH and rep.first_mismatch == (3, 6, 5)
    assert rep.matched_prefix_length == 3

    rep = cross_check([catalan(k) for k in range(12)], remote)
    assert rep.verdict is Verdict.INSUFFICIENT and rep.matched_prefix_length == 10
    assert rep.first_mismatch is None


def test_cross_check_offset():
    remote = SequenceRecord("A000108", (0, 0, 1, 1, 2, 5), Source.FIXTURE)
    assert cross_check([1, 1, 2, 5], remote, offset=2).verdict is Verdict.MATCH


def test_cross_check_swap_flips_values_only():
    a = [1, 1, 2, 5, 14]
    b = (1, 1, 3, 12, 55)
    forward = cross_check(a, SequenceRecord("A001764", b, Source.FIXTURE))
    backward = cross_check(list(b), SequenceRecord("A000108", tuple(a), Source.FIXTURE))
    i, x, y = forward.first_mismatch
    assert backward.first_mismatch == (i, y, x)
    assert backward.matched_prefix_length == forward.matched_prefix_length
    assert backward.verdict is forward.verdict


def test_report_invariant():
    with pytest.raises(ValueError):
        CrossCheckReport(0, Verdict.MISMATCH)
    with pytest.raises(ValueError):
        CrossCheckReport(0, Verdict.MATCH, (0, 1, 2))
    with pytest.raises(ValueError):
        SequenceRecord("A000108", (), Source.FIXTURE)
