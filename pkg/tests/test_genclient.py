import json
import logging

import pytest
from stub_server import StubEndpoint, completion

from lingdiff.genclient import (API_KEY_ENV, AuthError, EmptyCompletion, GenClientError, GenRequest,
                                MissingApiKey, RetriesExhausted, build_matched_corpus, generate_essay,
                                generate_matched, read_prompt_file, resolve_api_key, slugify,
                                within_tolerance, word_count)

KEY = "sk-test-123"
ESSAY_10 = "One two three four five six seven eight nine ten."


def request(url, words=10, retries=3):
    return GenRequest("Write about cities.", words, "stub-model", url, 0.7, retries)


def no_sleep(delays):
    return delays.append


def test_success_sends_expected_payload():
    with StubEndpoint([completion(ESSAY_10)]) as stub:
        rec = generate_essay(request(stub.url), KEY, sleep=no_sleep([]))
    assert (rec.response_text, rec.word_count, rec.attempt) == (ESSAY_10, 10, 1)
    sent = stub.requests[0]
    assert sent["headers"]["Authorization"] == f"Bearer {KEY}"
    assert sent["json"]["model"] == "stub-model" and sent["json"]["temperature"] == 0.7
    assert sent["json"]["messages"][0]["content"].endswith("Write approximately 10 words.")


def test_rate_limit_then_success_retries_with_backoff():
    delays = []
    with StubEndpoint([(429, {"error": "slow down"}), (503, {}), completion(ESSAY_10)]) as stub:
        rec = generate_essay(request(stub.url), KEY, sleep=no_sleep(delays))
    assert rec.attempt == 3 and len(stub.requests) == 3
    assert delays == [1.0, 2.0]


def test_server_errors_exhaust_retries():
    delays = []
    with StubEndpoint([(500, {})]) as stub:
        with pytest.raises(RetriesExhausted, match="4 attempts"):
            generate_essay(request(stub.url), KEY, sleep=no_sleep(delays))
    assert len(stub.requests) == 4 and delays == [1.0, 2.0, 4.0]


def test_network_error_is_retried():
    req = GenRequest("p", 10, "m", "http://127.0.0.1:9/unreachable", max_retries=1)
    with pytest.raises(RetriesExhausted, match="network error"):
        generate_essay(req, KEY, sleep=no_sleep([]), timeout=2)


@pytest.mark.parametrize("status", [401, 403])
def test_auth_errors_fail_fast(status):
    with StubEndpoint([(status, {})]) as stub:
        with pytest.raises(AuthError):
            generate_essay(request(stub.url), KEY, sleep=no_sleep([]))
    assert len(stub.requests) == 1


def test_other_client_errors_fail_fast():
    with StubEndpoint([(400, {})]) as stub:
        with pytest.raises(GenClientError, match="400"):
            generate_essay(request(stub.url), KEY, sleep=no_sleep([]))


@pytest.mark.parametrize("body", [{"choices": []}, {"choices": [{"message": {"content": "  "}}]}, b"not json"])
def test_empty_completion(body):
    with StubEndpoint([(200, body)]) as stub:
        with pytest.raises(EmptyCompletion):
            generate_essay(request(stub.url), KEY, sleep=no_sleep([]))


def test_missing_key(monkeypatch):
    monkeypatch.delenv(API_KEY_ENV, raising=False)
    with pytest.raises(MissingApiKey):
        resolve_api_key()
    monkeypatch.setenv(API_KEY_ENV, "from-env")
    assert resolve_api_key() == "from-env"
    assert resolve_api_key("explicit") == "explicit"


@pytest.mark.parametrize("kwargs", [dict(target_words=0), dict(endpoint_url="localhost/v1"),
                                    dict(endpoint_url="ftp://x/y"), dict(max_retries=-1)])
def test_request_validation(kwargs):
    base = dict(prompt="p", target_words=10, model_name="m", endpoint_url="http://x/v1")
    base.update(kwargs)
    with pytest.raises(ValueError):
        GenRequest(**base)


def test_tolerance_regenerates_then_accepts():
    short = "Too short."
    with StubEndpoint([completion(short), completion(ESSAY_10)]) as stub:
        rec = generate_matched(request(stub.url), KEY, 20.0, sleep=no_sleep([]))
    assert rec.within_tolerance and rec.generations == 2


def test_tolerance_warns_when_never_met(caplog):
    with StubEndpoint([completion("Too short.")]) as stub:
        with caplog.at_level(logging.WARNING):
            rec = generate_matched(request(stub.url, retries=2), KEY, 20.0, sleep=no_sleep([]))
    assert not rec.within_tolerance and rec.generations == 3 and len(stub.requests) == 3
    assert "accepted anyway" in caplog.text


@pytest.mark.parametrize("count, ok", [(8, True), (12, True), (7, False), (13, False)])
def test_within_tolerance(count, ok):
    assert within_tolerance(count, 10, 20.0) is ok


def test_word_count():
    assert word_count("I don't know, 42 times!") == 5
    assert word_count("   ") == 0


def test_build_corpus_files_and_sidecars(tmp_path):
    prompts = [("Should university be free?", 10), ("Cities: good or bad?", 10)]
    with StubEndpoint([completion(ESSAY_10)]) as stub:
        corpus = build_matched_corpus(prompts, tmp_path, model_name="stub-model", endpoint_url=stub.url,
                                      api_key=KEY, jobs=2, sleep=no_sleep([]))
    names = sorted(p.name for p in tmp_path.iterdir())
    assert names == ["cities-good-or-bad_2.json", "cities-good-or-bad_2.txt",
                     "should-university-be-free_1.json", "should-university-be-free_1.txt"]
    assert [d.id for d in corpus] == ["cities-good-or-bad_2", "should-university-be-free_1"]
    assert all(d.source_label == "ai" for d in corpus)
    raw = (tmp_path / "should-university-be-free_1.json").read_text()
    assert KEY not in raw
    side = json.loads(raw)
    assert side["request"]["prompt"] == "Should university be free?"
    assert side["request"]["target_words"] == 10 and side["word_count"] == 10
    assert side["attempt"] == 1 and side["within_tolerance"] is True and side["tolerance_pct"] == 20.0
    assert side["timestamp"].endswith("+00:00")


def test_prompt_file(tmp_path):
    path = tmp_path / "prompts.txt"
    path.write_text("# comment\nFirst prompt\nSecond prompt\t300\n\n")
    assert read_prompt_file(path, 250) == [("First prompt", 250), ("Second prompt", 300)]
    path.write_text("Bad\tmany\n")
    with pytest.raises(ValueError, match=":1:"):
        read_prompt_file(path, 250)


def test_slugify():
    assert slugify("Is technology making us lonely?") == "is-technology-making-us-lonely"
    assert slugify("???") == "prompt"
    assert len(slugify("word " * 30)) <= 40
