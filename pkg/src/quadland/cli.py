"""Service launcher and thin HTTP/WebSocket client."""

from __future__ import annotations

import json
from pathlib import Path

import click
import httpx


@click.group()
def main() -> None:
    """Quadrotor landing trainer."""


def _checked(response: httpx.Response) -> httpx.Response:
    if response.is_error:
        try:
            detail = response.json().get("detail", response.text)
        except ValueError:
            detail = response.text
        raise click.ClickException(f"server returned {response.status_code}: {detail}")
    return response


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
@click.option("--data-dir", type=click.Path(), required=True)
@click.option("--spec-file", type=click.Path(exists=True), default=None)
@click.option("--templates", "template_file", type=click.Path(exists=True), default=None)
@click.option("--sim-config", "sim_config_file", type=click.Path(exists=True), default=None)
@click.option("--provider-url", default=None, help="Remote feedback generator endpoint.")
@click.option("--provider-credential-env", default="FEEDBACK_API_KEY", show_default=True)
@click.option(
    "--assignment",
    type=click.Choice(["round-robin", "random"]),
    default="round-robin",
    show_default=True,
)
@click.option("--assignment-seed", type=int, default=None)
@click.option(
    "--static-dir",
    type=click.Path(exists=True, file_okay=False),
    default=None,
    help="Serve a built browser client at /app.",
)
def serve(
    host: str,
    port: int,
    data_dir: str,
    spec_file: str | None,
    template_file: str | None,
    sim_config_file: str | None,
    provider_url: str | None,
    provider_credential_env: str,
    assignment: str,
    assignment_seed: int | None,
    static_dir: str | None,
) -> None:
    """Run the session service."""
    import uvicorn

    from quadland.service import ServiceSettings, create_app

    settings = ServiceSettings(
        data_dir=Path(data_dir),
        port=port,
        spec_file=Path(spec_file) if spec_file else None,
        template_file=Path(template_file) if template_file else None,
        sim_config_file=Path(sim_config_file) if sim_config_file else None,
        provider_url=provider_url,
        provider_credential_env=provider_credential_env,
        assignment=assignment,
        assignment_seed=assignment_seed,
        static_dir=Path(static_dir) if static_dir else None,
    )
    uvicorn.run(create_app(settings), host=host, port=port)


@main.command("new-session")
@click.option("--base-url", default="http://127.0.0.1:8000", show_default=True)
def new_session(base_url: str) -> None:
    """Create a session; prints its id and condition."""
    response = _checked(httpx.post(f"{base_url}/sessions"))
    click.echo(json.dumps(response.json()))


def _load_script(path: str) -> list[dict]:
    frames = []
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if line:
            doc = json.loads(line)
            frames.append({"throttle": doc["throttle"], "attitude": doc["attitude"]})
    return frames


@main.command()
@click.option("--base-url", default="http://127.0.0.1:8000", show_default=True)
@click.option("--session", "session_id", required=True)
@click.option("--script", "script_path", type=click.Path(exists=True), required=True)
@click.option("--fetch-feedback/--no-fetch-feedback", default=True, show_default=True)
def play(base_url: str, session_id: str, script_path: str, fetch_feedback: bool) -> None:
    """Stream a recorded input script through one trial."""
    from websockets.sync.client import connect

    response = _checked(httpx.post(f"{base_url}/sessions/{session_id}/trials"))
    trial = response.json()["trial"]
    click.echo(f"trial {trial} started")

    ws_url = base_url.replace("http://", "ws://").replace("https://", "wss://")
    last = None
    with connect(f"{ws_url}/sessions/{session_id}/trials/{trial}/input") as ws:
        for i, frame in enumerate(_load_script(script_path)):
            ws.send(json.dumps({"t": i * 0.02, **frame}))
            reply = json.loads(ws.recv())
            if "error" in reply:
                raise click.ClickException(reply["error"])
            last = reply
            if reply["terminated"]:
                break
    if last is None:
        raise click.ClickException("script contained no frames")
    if last["terminated"]:
        click.echo(f"outcome: {last['outcome']} after {last['t']:.2f}s")
    else:
        click.echo(f"input exhausted at {last['t']:.2f}s (trial recorded as a crash)")

    if fetch_feedback:
        fb = _checked(httpx.get(f"{base_url}/sessions/{session_id}/trials/{trial}/feedback", timeout=90.0))
        click.echo(json.dumps(fb.json(), indent=2))


@main.command("script-gen")
@click.option(
    "--kind",
    type=click.Choice(["land", "land-slow", "land-fast", "hover", "freefall"]),
    default="land",
    show_default=True,
)
@click.option("--frames", type=int, default=6000, show_default=True, help="For hover/freefall.")
@click.option("--out", type=click.Path(), required=True)
def script_gen(kind: str, frames: int, out: str) -> None:
    """Write an input script (JSON lines of throttle/attitude frames)."""
    from quadland.sim import ControlInput, SimConfig
    from quadland.sim.pilots import PilotParams, fast_landing_params, fly_pilot, hover_script, leisurely_params

    config = SimConfig()
    if kind == "land":
        inputs = fly_pilot(config, PilotParams())
    elif kind == "land-slow":
        inputs = fly_pilot(config, leisurely_params())
    elif kind == "land-fast":
        inputs = fly_pilot(config, fast_landing_params())
    elif kind == "hover":
        inputs = hover_script(config, frames)
    else:
        inputs = [ControlInput(0.0, 0)] * frames
    with open(out, "w", encoding="utf-8") as fh:
        for control in inputs:
            fh.write(json.dumps({"throttle": control.throttle, "attitude": control.attitude}) + "\n")
    click.echo(f"wrote {len(inputs)} frames to {out}")


@main.command()
@click.option("--base-url", default="http://127.0.0.1:8000", show_default=True)
@click.option("--session", "session_id", required=True)
@click.option("--trial", type=int, required=True)
@click.option(
    "--ratings",
    default="3,3,3,3,3",
    show_default=True,
    help="motivation,manageable,actionable,timely,reflection",
)
def survey(base_url: str, session_id: str, trial: int, ratings: str) -> None:
    """Submit the per-trial feedback survey."""
    values = [int(v) for v in ratings.split(",")]
    if len(values) != 5:
        raise click.UsageError("need exactly five ratings")
    keys = ("motivation", "manageable", "actionable", "timely", "reflection")
    response = _checked(
        httpx.post(
            f"{base_url}/sessions/{session_id}/trials/{trial}/survey",
            json=dict(zip(keys, values)),
        )
    )
    click.echo(json.dumps(response.json()))


@main.command("exit-survey")
@click.option("--base-url", default="http://127.0.0.1:8000", show_default=True)
@click.option("--session", "session_id", required=True)
@click.option("--gender-identity", default="prefer not to say", show_default=True)
@click.option("--age", type=int, required=True)
@click.option("--drone-experience", default="none", show_default=True)
@click.option("--video-game-frequency", default="monthly", show_default=True)
@click.option("--helpfulness", type=int, required=True)
@click.option("--strategy", default="", show_default=True)
def exit_survey(
    base_url: str,
    session_id: str,
    gender_identity: str,
    age: int,
    drone_experience: str,
    video_game_frequency: str,
    helpfulness: int,
    strategy: str,
) -> None:
    """Submit the end-of-session questionnaire."""
    response = _checked(
        httpx.post(
            f"{base_url}/sessions/{session_id}/exit-survey",
            json={
                "gender_identity": gender_identity,
                "age": age,
                "drone_experience": drone_experience,
                "video_game_frequency": video_game_frequency,
                "helpfulness": helpfulness,
                "strategy": strategy,
            },
        )
    )
    click.echo(json.dumps(response.json()))


@main.command()
@click.option("--base-url", default="http://127.0.0.1:8000", show_default=True)
@click.option("--out", type=click.Path(), required=True)
def export(base_url: str, out: str) -> None:
    """Download the trial-level dataset rows."""
    response = _checked(httpx.get(f"{base_url}/export", timeout=120.0))
    Path(out).write_text(response.text, encoding="utf-8")
    click.echo(f"wrote {out}")


if __name__ == "__main__":
    main()
