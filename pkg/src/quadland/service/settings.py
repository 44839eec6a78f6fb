"""Service configuration."""

from __future__ import annotations

from pathlib import Path
from typing import Literal, Optional

from pydantic import BaseModel


class ServiceSettings(BaseModel):
    data_dir: Path
    port: int = 8000
    spec_file: Optional[Path] = None  # packaged landing spec when unset
    template_file: Optional[Path] = None  # packaged template pack when unset
    sim_config_file: Optional[Path] = None
    provider_url: Optional[str] = None  # remote text generator; templates when unset
    provider_credential_env: str = "FEEDBACK_API_KEY"
    assignment: Literal["round-robin", "random"] = "round-robin"
    assignment_seed: Optional[int] = None
    feedback_timeout: float = 60.0  # seconds a feedback fetch may block
    static_dir: Optional[Path] = None  # built browser client, mounted at /app
