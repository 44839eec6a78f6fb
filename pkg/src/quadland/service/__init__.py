"""Experiment session service: HTTP/WebSocket API over the core pipeline."""

from quadland.service.app import create_app
from quadland.service.settings import ServiceSettings
from quadland.service.store import SessionStore

__all__ = ["create_app", "ServiceSettings", "SessionStore"]
