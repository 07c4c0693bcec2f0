"""Request length-matched essays from a chat-completions style HTTP endpoint."""

from __future__ import annotations

import json
import logging
import os
import re
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from datetime import datetime, timezone
from typing import Callable, Optional, Sequence
from urllib.parse import urlparse

import requests

from .ingest import IngestConfig, load_corpus, orthographic_words, tokenize
from .model import Corpus

log = logging.getLogger(__name__)

API_KEY_ENV = "OBAI_API_KEY"
BACKOFF = (1.0, 2.0, 4.0)
MAX_PARALLEL = 4


class GenClientError(RuntimeError):
    pass


class MissingApiKey(GenClientError):
    """No key was given and the environment variable is unset."""


class AuthError(GenClientError):
    """The endpoint rejected the key (HTTP 401/403)."""


class RetriesExhausted(GenClientError):
    """Every attempt hit a rate limit, a server error or a network failure."""


class EmptyCompletion(GenClientError):
    """The endpoint answered but the first choice carried no text."""


@dataclass(frozen=True)
class GenRequest:
    prompt: str
    target_words: int
    model_name: str
    endpoint_url: str
    temperature: float = 1.0
    max_retries: int = 3

    def __post_init__(self):
        if self.target_words <= 0:
            raise ValueError("target_words must be positive")
        parsed = urlparse(self.endpoint_url)
        if not (parsed.scheme in ("http", "https") and parsed.netloc):
            raise ValueError(f"endpoint_url must be an absolute http(s) URL: {self.endpoint_url!r}")
        if self.max_retries < 0:
            raise ValueError("max_retries must be >= 0")

    @property
    def content(self) -> str:
        return f"{self.prompt} Write approximately {self.target_words} words."


@dataclass(frozen=True)
class GenRecord:
    request: GenRequest
    response_text: str
    word_count: int
    timestamp: str
    attempt: int
    generations: int = 1
    within_tolerance: bool = True

    def sidecar(self) -> dict:
        return asdict(self)


def word_count(text: str) -> int:
    """Words as the readability layer counts them (``don't`` and ``42`` are one word each)."""
    if not text.strip():
        return 0
    return sum(1 for s in tokenize(text, IngestConfig()) for _ in orthographic_words(s.tokens))


def resolve_api_key(api_key: Optional[str] = None) -> str:
    key = api_key or os.environ.get(API_KEY_ENV)
    if not key:
        raise MissingApiKey(f"no API key: pass one explicitly or set {API_KEY_ENV}")
    return key


def _utc_now() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


def generate_essay(req: GenRequest, api_key: Optional[str] = None, *,
                   session: Optional[requests.Session] = None,
                   sleep: Callable[[float], None] = time.sleep,
                   clock: Callable[[], str] = _utc_now, timeout: float = 60.0) -> GenRecord:
    """POST one chat-completion request, retrying on 429, 5xx and network errors."""
    key = resolve_api_key(api_key)
    http = session or requests.Session()
    payload = {
        "model": req.model_name,
        "messages": [{"role": "user", "content": req.content}],
        "temperature": req.temperature,
    }
    headers = {"Authorization": f"Bearer {key}", "Content-Type": "application/json"}
    last = "no attempt made"
    for attempt in range(1, req.max_retries + 2):
        try:
            resp = http.post(req.endpoint_url, json=payload, headers=headers, timeout=timeout)
        except (requests.ConnectionError, requests.Timeout) as exc:
            last = f"network error: {type(exc).__name__}"
        else:
            if resp.status_code in (401, 403):
                raise AuthError(f"endpoint rejected the API key (HTTP {resp.status_code})")
            if resp.status_code == 429 or resp.status_code >= 500:
                last = f"HTTP {resp.status_code}"
            elif resp.status_code >= 400:
                raise GenClientError(f"request failed with HTTP {resp.status_code}")
            else:
                text = _completion_text(resp)
                return GenRecord(req, text, word_count(text), clock(), attempt)
        if attempt <= req.max_retries:
            delay = BACKOFF[min(attempt - 1, len(BACKOFF) - 1)]
            log.info("attempt %d failed (%s); retrying in %.0fs", attempt, last, delay)
            sleep(delay)
    raise RetriesExhausted(f"gave up after {req.max_retries + 1} attempts ({last})")


def _completion_text(resp) -> str:
    try:
        body = resp.json()
        text = body["choices"][0]["message"]["content"]
    except (ValueError, KeyError, IndexError, TypeError):
        raise EmptyCompletion("response carried no completion text") from None
    if not isinstance(text, str) or not text.strip():
        raise EmptyCompletion("completion text is empty")
    return text.strip()


def within_tolerance(count: int, target: int, tolerance_pct: float) -> bool:
    return abs(count - target) <= target * tolerance_pct / 100.0


def generate_matched(req: GenRequest, api_key: Optional[str] = None, tolerance_pct: float = 20.0,
                     **kwargs) -> GenRecord:
    """Regenerate until the length is within tolerance, then accept with a warning."""
    record = None
    for generation in range(1, req.max_retries + 2):
        record = generate_essay(req, api_key, **kwargs)
        if within_tolerance(record.word_count, req.target_words, tolerance_pct):
            return _with(record, generations=generation)
    log.warning("essay for %r has %d words (target %d, tolerance %g%%); accepted anyway",
                req.prompt[:40], record.word_count, req.target_words, tolerance_pct)
    return _with(record, generations=req.max_retries + 1, within_tolerance=False)


def _with(record: GenRecord, **changes) -> GenRecord:
    data = {f: getattr(record, f) for f in record.__dataclass_fields__}
    data.update(changes)
    return GenRecord(**data)


def slugify(text: str, max_len: int = 40) -> str:
    slug = re.sub(r"[^a-z0-9]+", "-", text.lower()).strip("-")
    return slug[:max_len].rstrip("-") or "prompt"


def read_prompt_file(path: str, default_words: int) -> list[tuple[str, int]]:
    """One prompt per line; an optional ``<TAB>words`` suffix overrides the default length."""
    prompts = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            text, _, words = line.partition("\t")
            try:
                n = int(words) if words.strip() else default_words
            except ValueError:
                raise ValueError(f"{path}:{lineno}: word target must be an integer") from None
            prompts.append((text.strip(), n))
    return prompts


def build_matched_corpus(prompts: Sequence[tuple[str, int]], out_dir: str, *, model_name: str,
                         endpoint_url: str, api_key: Optional[str] = None,
                         tolerance_pct: float = 20.0, temperature: float = 1.0,
                         max_retries: int = 3, jobs: int = 1, label: str = "ai",
                         **kwargs) -> Corpus:
    """Generate one essay per prompt and save ``<slug>_<index>.txt`` plus a JSON sidecar."""
    if not prompts:
        raise ValueError("no prompts given")
    key = resolve_api_key(api_key)
    requests_ = [GenRequest(p, n, model_name, endpoint_url, temperature, max_retries) for p, n in prompts]
    os.makedirs(out_dir, exist_ok=True)

    def run(req):
        return generate_matched(req, key, tolerance_pct, **kwargs)

    workers = max(1, min(jobs, MAX_PARALLEL))
    if workers == 1:
        records = [run(r) for r in requests_]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(run, requests_))
    paths = []
    for index, (req, rec) in enumerate(zip(requests_, records), start=1):
        stem = os.path.join(out_dir, f"{slugify(req.prompt)}_{index}")
        with open(stem + ".txt", "w", encoding="utf-8", newline="\n") as fh:
            fh.write(rec.response_text + "\n")
        sidecar = rec.sidecar()
        sidecar["tolerance_pct"] = tolerance_pct
        with open(stem + ".json", "w", encoding="utf-8", newline="\n") as fh:
            json.dump(sidecar, fh, indent=2, ensure_ascii=False)
            fh.write("\n")
        paths.append(stem + ".txt")
    return load_corpus(paths, label, source_label="ai")
