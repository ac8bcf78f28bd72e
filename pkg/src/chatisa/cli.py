"""Command-line driver for scripted sessions, plus the service runner.

The driver subcommands (models, new-session, say, export) call the same
engine the HTTP facade uses, against the same on-disk session records, so a
scripted session is indistinguishable from one driven over HTTP.
"""

from __future__ import annotations

import sys
from pathlib import Path

import click

from .config import ServiceConfig, build_runtime
from .engine.session import StudentLabel
from .errors import ChatIsaError
from .export.transcript import render_transcript_pdf


def _runtime(config_path: str | None, data_dir: str | None):
    return build_runtime(ServiceConfig.from_env(config_path, data_dir))


def _fail(exc: ChatIsaError) -> None:
    click.echo(f"error [{exc.code}]: {exc.message}", err=True)
    sys.exit(1)


@click.group()
def main():
    """ChatISA: module-bound tutoring sessions over interchangeable LLMs."""


_config_opt = click.option(
    "--config", "config_path", default=None,
    help="Path to the model registry config (defaults to the packaged seed).",
)
_data_opt = click.option(
    "--data-dir", default=None,
    help="Directory for session and document records (or DATA_DIR env).",
)


@main.command()
@click.option("--module", default=None, help="Filter to a module's allowed tiers.")
@click.option("--tier", default=None, help="Filter to one tier (frontier/light).")
@_config_opt
@_data_opt
def models(module, tier, config_path, data_dir):
    """List registered models."""
    try:
        rt = _runtime(config_path, data_dir)
        if module:
            from .engine.policy import policy_for
            entries = rt.registry.list_for_tiers(policy_for(module).allowed_tiers)
        else:
            entries = rt.registry.list_models(tier)
    except ChatIsaError as exc:
        _fail(exc)
    for spec in entries:
        click.echo(f"{spec.model_id}\t{spec.tier}\t{spec.display_name}")


@main.command("new-session")
@click.option("--module", required=True)
@click.option("--model", "model_id", required=True)
@click.option("--bind", "binds", multiple=True,
              help="Placeholder binding as name=value; repeatable.")
@click.option("--bind-file", "bind_files", multiple=True,
              help="Binding read from a text file, as name=path; repeatable.")
@click.option("--role", default=None, help="Template id for Project Coach roles.")
@click.option("--student-name", default=None)
@click.option("--course-number", default=None)
@_config_opt
@_data_opt
def new_session(module, model_id, binds, bind_files, role, student_name,
                course_number, config_path, data_dir):
    """Create a session and print its id."""
    bindings: dict[str, str] = {}
    for item in binds:
        name, sep, value = item.partition("=")
        if not sep:
            click.echo(f"error [validation]: --bind {item!r} is not name=value", err=True)
            sys.exit(1)
        bindings[name] = value
    for item in bind_files:
        name, sep, path = item.partition("=")
        if not sep:
            click.echo(f"error [validation]: --bind-file {item!r} is not name=path", err=True)
            sys.exit(1)
        bindings[name] = Path(path).read_text(encoding="utf-8")
    label = None
    if student_name and course_number:
        label = StudentLabel(student_name, course_number)
    try:
        rt = _runtime(config_path, data_dir)
        session = rt.engine.create_session(
            module, model_id, bindings, template_id=role, student_label=label,
        )
    except ChatIsaError as exc:
        _fail(exc)
    click.echo(session.session_id)


@main.command()
@click.argument("session_id")
@click.argument("text")
@_config_opt
@_data_opt
def say(session_id, text, config_path, data_dir):
    """Post one user message and print the assistant reply."""
    try:
        rt = _runtime(config_path, data_dir)
        session = rt.engine.get_session(session_id)
        assistant, response = rt.engine.post_user_message(session, text)
    except ChatIsaError as exc:
        _fail(exc)
    click.echo(assistant.content)
    flag = " (estimated)" if response.usage_estimated else ""
    click.echo(
        f"[{response.model_id}: {response.input_tokens} in / "
        f"{response.output_tokens} out{flag}]",
        err=True,
    )


@main.command()
@click.argument("session_id")
@click.option("--name", "student_name", required=True)
@click.option("--course", "course_number", required=True)
@click.option("--out", "out_path", required=True, type=click.Path(dir_okay=False))
@_config_opt
@_data_opt
def export(session_id, student_name, course_number, out_path, config_path, data_dir):
    """Export a session transcript to a PDF file."""
    try:
        rt = _runtime(config_path, data_dir)
        session = rt.engine.get_session(session_id)
        pdf = render_transcript_pdf(
            session, student_name, course_number, rt.registry, rt.clock,
        )
    except ChatIsaError as exc:
        _fail(exc)
    Path(out_path).write_bytes(pdf)
    click.echo(f"wrote {len(pdf)} bytes to {out_path}")


@main.command()
@click.option("--bind", "bind_addr", default=None, help="host:port (or BIND_ADDR env).")
@_config_opt
@_data_opt
def serve(bind_addr, config_path, data_dir):
    """Run the HTTP service."""
    import uvicorn

    from .api.app import create_app

    config = ServiceConfig.from_env(config_path, data_dir)
    if bind_addr:
        config.bind_addr = bind_addr
    host, _, port = config.bind_addr.partition(":")
    uvicorn.run(create_app(config), host=host or "127.0.0.1", port=int(port or 8080))


if __name__ == "__main__":
    main()
