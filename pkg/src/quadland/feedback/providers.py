"""Feedback text generators.

The built-in template provider is deterministic and always available; a
remote multimodal language-model service can be plugged in behind the same
interface, with the template pack as the fallback when it fails.
"""

from __future__ import annotations

import base64
import json
import os
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Protocol

import httpx

from quadland.feedback.prompt import PromptBundle


class FeedbackProviderError(RuntimeError):
    """Raised when a provider cannot produce text (timeouts, auth, bad reply)."""


@dataclass(frozen=True)
class FeedbackText:
    body: str
    provider_id: str


class FeedbackProvider(Protocol):
    provider_id: str

    def generate(self, prompt: PromptBundle) -> str: ...  # pragma: no cover


@lru_cache(maxsize=1)
def _default_pack() -> dict[str, str]:
    raw = resources.files("quadland.data").joinpath("templates.json").read_text(encoding="utf-8")
    return json.loads(raw)


class TemplateProvider:
    """Fills the per-area sentence templates from the prompt context."""

    provider_id = "template"

    def __init__(self, pack: dict[str, str] | None = None):
        self.pack = dict(pack) if pack is not None else dict(_default_pack())

    @classmethod
    def from_file(cls, path: str | Path) -> "TemplateProvider":
        return cls(json.loads(Path(path).read_text(encoding="utf-8")))

    def generate(self, prompt: PromptBundle) -> str:
        template = self.pack.get(prompt.area.value)
        if template is None:
            raise FeedbackProviderError(f"template pack has no entry for {prompt.area.value!r}")
        return template.format(**prompt.context)


class RemoteProvider:
    """Posts the prompt bundle (image attached as base64 SVG) to a remote
    text-generation endpoint. One retry, then the caller falls back."""

    provider_id = "remote"

    def __init__(
        self,
        endpoint: str,
        credential_env: str = "FEEDBACK_API_KEY",
        timeout: float = 20.0,
        retries: int = 1,
        client: httpx.Client | None = None,
    ):
        self.endpoint = endpoint
        self.credential_env = credential_env
        self.timeout = timeout
        self.retries = retries
        self._client = client

    def generate(self, prompt: PromptBundle) -> str:
        credential = os.environ.get(self.credential_env)
        if not credential:
            raise FeedbackProviderError(
                f"no credential in environment variable {self.credential_env!r}"
            )
        payload = {
            "task": prompt.task_description,
            "improvement_area": prompt.improvement_area,
            "instructions": prompt.element_instructions,
            "image_svg_base64": base64.b64encode(
                prompt.trajectory_image.svg.encode("utf-8")
            ).decode("ascii"),
        }
        headers = {"Authorization": f"Bearer {credential}"}
        client = self._client or httpx.Client(timeout=self.timeout)
        owns_client = self._client is None
        try:
            last_error: Exception | None = None
            for _ in range(self.retries + 1):
                try:
                    response = client.post(self.endpoint, json=payload, headers=headers)
                    response.raise_for_status()
                    body = response.json().get("text", "")
                    if not body:
                        raise FeedbackProviderError("remote provider returned empty text")
                    return body
                except (httpx.HTTPError, ValueError) as exc:
                    last_error = exc
            raise FeedbackProviderError(f"remote provider failed: {last_error}")
        finally:
            if owns_client:
                client.close()


def generate_feedback(
    prompt: PromptBundle,
    provider: FeedbackProvider | None = None,
    fallback: TemplateProvider | None = None,
) -> FeedbackText:
    """Generate feedback text, falling back to templates on provider failure.

    The fallback is flagged in ``provider_id`` so records show which route
    produced the text.
    """
    if provider is None:
        provider = TemplateProvider()
    try:
        return FeedbackText(body=provider.generate(prompt), provider_id=provider.provider_id)
    except FeedbackProviderError:
        if isinstance(provider, TemplateProvider):
            raise
        backup = fallback if fallback is not None else TemplateProvider()
        return FeedbackText(
            body=backup.generate(prompt),
            provider_id=f"{backup.provider_id}(fallback:{provider.provider_id})",
        )
