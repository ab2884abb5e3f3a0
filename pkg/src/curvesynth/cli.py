"""Command-line client for the synthesis service.

The CLI never runs the numerics itself: it sends the parsed config to the
HTTP service (in-process over an ASGI transport by default, or to a remote
server with --server) and writes the response bytes verbatim, so files are
byte-identical however the service is reached.

Exit codes: 0 success, 2 config or validation problem, 3 numerical failure.
"""

from __future__ import annotations

import asyncio
import json
import sys

import click
import httpx

EXIT_VALIDATION = 2
EXIT_NUMERICAL = 3


def _request(server: str | None, method: str, path: str, body: dict) -> httpx.Response:
    if server:
        with httpx.Client(base_url=server, timeout=300.0) as client:
            return client.request(method, path, json=body)

    from .service.app import create_app

    async def go():
        transport = httpx.ASGITransport(app=create_app())
        async with httpx.AsyncClient(transport=transport,
                                     base_url="http://curvesynth.local") as client:
            return await client.request(method, path, json=body)

    return asyncio.run(go())


def _fail(message: str, code: int):
    # exactly one diagnostic line on the error stream
    click.echo(message.replace("\n", " "), err=True)
    sys.exit(code)


def _diagnostic(resp: httpx.Response) -> str:
    try:
        body = resp.json()
    except ValueError:
        return f"HTTP {resp.status_code}: {resp.text[:200]}"
    if isinstance(body, dict):
        if "error" in body:
            return f"{body['error']}: {body.get('detail', '')}"
        if "detail" in body:
            return f"invalid config: {json.dumps(body['detail'])}"
    return f"HTTP {resp.status_code}: {json.dumps(body)[:200]}"


def _handle_error(resp: httpx.Response):
    code = EXIT_NUMERICAL if resp.status_code == 409 else EXIT_VALIDATION
    _fail(_diagnostic(resp), code)


def _write_output(data: bytes, out: str | None):
    if out:
        with open(out, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)


def _load_config(path: str) -> dict:
    try:
        text = sys.stdin.read() if path == "-" else open(path).read()
    except OSError as exc:
        _fail(f"cannot read config: {exc}", EXIT_VALIDATION)
    try:
        config = json.loads(text)
    except json.JSONDecodeError as exc:
        _fail(f"config is not valid JSON: {exc}", EXIT_VALIDATION)
    if not isinstance(config, dict):
        _fail("config must be a JSON object", EXIT_VALIDATION)
    return config


def _run_config(config: dict, out: str | None, server: str | None):
    mode = config.get("mode")
    if mode == "compare":
        a_path, b_path = config.get("a"), config.get("b")
        if not a_path or not b_path:
            _fail("compare mode requires trace paths in fields 'a' and 'b'",
                  EXIT_VALIDATION)
        _compare_files(a_path, b_path, out if out else config.get("out"), server)
        return
    try:
        resp = _request(server, "POST", "/run", config)
    except httpx.HTTPError as exc:
        _fail(f"cannot reach the service: {exc}", EXIT_VALIDATION)
    if resp.status_code != 200:
        _handle_error(resp)
    _write_output(resp.content, out if out else config.get("out"))


def _compare_files(a_path: str, b_path: str, out: str | None, server: str | None):
    try:
        a_csv = open(a_path).read()
        b_csv = open(b_path).read()
    except OSError as exc:
        _fail(f"cannot read trace: {exc}", EXIT_VALIDATION)
    try:
        resp = _request(server, "POST", "/compare",
                        {"a_csv": a_csv, "b_csv": b_csv})
    except httpx.HTTPError as exc:
        _fail(f"cannot reach the service: {exc}", EXIT_VALIDATION)
    if resp.status_code != 200:
        _handle_error(resp)
    report = json.dumps(resp.json(), indent=2) + "\n"
    _write_output(report.encode(), out)


@click.group()
def main():
    """Synthesize space curves from curvature and plane-rotation or torsion profiles."""


_CONFIG_OPT = click.option("--config", required=True,
                           help="Path to a JSON run config, or '-' for stdin.")
_OUT_OPT = click.option("--out", default=None,
                        help="Output path (default: config 'out' field, else stdout).")
_SERVER_OPT = click.option("--server", default=None,
                           help="Base URL of a running service; in-process if omitted.")


@main.command()
@_CONFIG_OPT
@_OUT_OPT
@_SERVER_OPT
def run(config, out, server):
    """Execute a run config (any mode)."""
    _run_config(_load_config(config), out, server)


@main.command()
@click.option("--a", "a_path", required=True, help="First trace CSV.")
@click.option("--b", "b_path", required=True, help="Second trace CSV.")
@_OUT_OPT
@_SERVER_OPT
def compare(a_path, b_path, out, server):
    """Compare two trace CSVs and write a JSON deviation report."""
    _compare_files(a_path, b_path, out, server)


def _pinned_mode_command(name: str, mode: str, help_text: str):
    @main.command(name=name, help=help_text)
    @_CONFIG_OPT
    @_OUT_OPT
    @_SERVER_OPT
    def _cmd(config, out, server):
        cfg = _load_config(config)
        cfg.setdefault("mode", mode)
        if cfg["mode"] != mode:
            _fail(f"config mode {cfg['mode']!r} conflicts with the "
                  f"{name!r} subcommand", EXIT_VALIDATION)
        _run_config(cfg, out, server)
    return _cmd


_pinned_mode_command("oracle", "oracle",
                     "Integrate the direct frame system for a (kappa, tau) config.")
_pinned_mode_command("closed-form", "closed-form",
                     "Evaluate an explicit solution family on a grid.")


@main.command()
@click.option("--host", default="127.0.0.1")
@click.option("--port", default=8000, type=int)
def serve(host, port):
    """Start the HTTP service."""
    import uvicorn

    uvicorn.run("curvesynth.service.app:app", host=host, port=port)


if __name__ == "__main__":
    main()
