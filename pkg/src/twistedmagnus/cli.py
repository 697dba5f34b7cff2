"""Command-line client for the workbench service.

All commands go through the HTTP API: against a running server when
``--url`` is given, otherwise against an in-process instance.  Output is
the JSON report; the exit status mirrors the verdicts (0 all pass, 1 any
fail, 2 usage error).
"""
from __future__ import annotations

import json as _json
import sys

import click


def _client(url):
    if url:
        import httpx

        return httpx.Client(base_url=url)
    from fastapi.testclient import TestClient

    from .service import app

    return TestClient(app)


def _post(ctx, path: str, payload: dict) -> dict:
    with _client(ctx.obj.get("url")) as client:
        resp = client.post(path, json=payload)
    if resp.status_code != 200:
        detail = resp.json().get("detail", resp.text)
        raise click.UsageError(str(detail))
    return resp.json()


def _finish(ctx, report: dict):
    text = _json.dumps(report, indent=2)
    path = ctx.obj.get("json_path")
    if path:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    else:
        click.echo(text)
    sys.exit(0 if report["ok"] else 1)


def _common(f):
    for opt in reversed(
        [
            click.option("--ring", default=None, help="q | dual | padic:<p>:<K>"),
            click.option("--deg", default=None, type=int, help="series truncation"),
            click.option("--seed", default=None, type=int, help="PRNG seed"),
            click.option("--json", "json_path", default=None, type=click.Path(),
                         help="write the report here instead of stdout"),
        ]
    ):
        f = opt(f)
    return f


def _cfg(ctx, ring, deg, seed, json_path):
    obj = ctx.obj
    return {
        "ring": ring if ring is not None else obj.get("ring"),
        "deg": deg if deg is not None else obj.get("deg"),
        "seed": seed if seed is not None else obj.get("seed"),
        "json_path": json_path if json_path is not None else obj.get("json_path"),
    }


@click.group()
@click.option("--ring", default=None, help="q | dual | padic:<p>:<K>")
@click.option("--deg", default=None, type=int)
@click.option("--seed", default=None, type=int)
@click.option("--json", "json_path", default=None, type=click.Path())
@click.option("--url", default=None, help="base URL of a running server")
@click.pass_context
def main(ctx, ring, deg, seed, json_path, url):
    """Exact-arithmetic workbench for twisted Magnus group computations."""
    ctx.obj = {
        "ring": ring,
        "deg": deg,
        "seed": seed,
        "json_path": json_path,
        "url": url,
    }


@main.command()
@_common
@click.option("--mu", default="1", help="unit scalar, e.g. 1 or -1 or 1/2")
@click.option("--g", default="1", help="group word or series expression")
@click.option("--tests", default="quad,stabW,stabM,dmr:stab",
              help="comma-separated test names")
@click.pass_context
def check(ctx, ring, deg, seed, json_path, mu, g, tests):
    """Run membership predicates on one element (mu, g)."""
    cfg = _cfg(ctx, ring, deg, seed, json_path)
    ctx.obj["json_path"] = cfg["json_path"]
    report = _post(ctx, "/check", {
        "ring": cfg["ring"] or "q",
        "deg": cfg["deg"] or 6,
        "mu": mu,
        "g": g,
        "tests": [t for t in tests.split(",") if t],
    })
    _finish(ctx, report)


@main.command("check-padic")
@_common
@click.option("--p", default=3, type=int)
@click.option("--k", "--K", "big_k", default=3, type=int, help="precision exponent")
@click.option("--lambda", "lam", default=1, type=int)
@click.option("--f", default="1", help="group word")
@click.option("--tests", default="star-roundtrip,gt")
@click.pass_context
def check_padic(ctx, ring, deg, seed, json_path, p, big_k, lam, f, tests):
    """Run pro-p checks on one pair (lambda, f) at precision (p, K)."""
    cfg = _cfg(ctx, ring, deg, seed, json_path)
    ctx.obj["json_path"] = cfg["json_path"]
    report = _post(ctx, "/check-padic", {
        "p": p,
        "K": big_k,
        "deg": cfg["deg"] or 5,
        "lambda": lam,
        "f": f,
        "tests": [t for t in tests.split(",") if t],
    })
    _finish(ctx, report)


@main.command("solve-lie")
@_common
@click.option("--deg-max", default=5, type=int)
@click.option("--conditions", default="quad,stabM")
@click.option("--compare", default="primM",
              help="alternative condition to compare spans against ('' = off)")
@click.option("--check-inclusion", default="stabW",
              help="condition whose solution space must contain ours ('' = off)")
@click.pass_context
def solve_lie(ctx, ring, deg, seed, json_path, deg_max, conditions, compare,
              check_inclusion):
    """Solve the degreewise linear conditions on Lie-algebra elements."""
    cfg = _cfg(ctx, ring, deg, seed, json_path)
    ctx.obj["json_path"] = cfg["json_path"]
    report = _post(ctx, "/solve-lie", {
        "deg_max": deg_max,
        "conditions": [c for c in conditions.split(",") if c],
        "compare": compare or None,
        "check_inclusion": check_inclusion or None,
    })
    _finish(ctx, report)


@main.command("enumerate-discrete")
@_common
@click.option("--maxlen", default=8, type=int)
@click.option("--count", default=200, type=int,
              help="sample size for the series cross-check")
@click.pass_context
def enumerate_discrete(ctx, ring, deg, seed, json_path, maxlen, count):
    """Classify group-like module classes over all short free-group words."""
    cfg = _cfg(ctx, ring, deg, seed, json_path)
    ctx.obj["json_path"] = cfg["json_path"]
    report = _post(ctx, "/enumerate-discrete", {
        "maxlen": maxlen,
        "deg": cfg["deg"] or 6,
        "seed": cfg["seed"] or 0,
        "count": count,
    })
    _finish(ctx, report)


@main.command()
@_common
@click.option("--mu", default="1")
@click.option("--g", default="1", help="group word or series expression")
@click.pass_context
def gamma(ctx, ring, deg, seed, json_path, mu, g):
    """Print the Gamma series, its cocycle value, and the reflection check."""
    cfg = _cfg(ctx, ring, deg, seed, json_path)
    ctx.obj["json_path"] = cfg["json_path"]
    report = _post(ctx, "/gamma", {
        "ring": cfg["ring"] or "q",
        "deg": cfg["deg"] or 6,
        "mu": mu,
        "g": g,
    })
    _finish(ctx, report)


@main.command()
@_common
@click.argument("name")
@click.option("--count", default=None, type=int, help="override sample sizes")
@click.option("--deg-max", default=None, type=int, help="lie-solver degree cap")
@click.option("--maxlen", default=None, type=int, help="discrete-enum word length cap")
@click.pass_context
def suite(ctx, ring, deg, seed, json_path, name, count, deg_max, maxlen):
    """Run a named verification suite (or 'all')."""
    cfg = _cfg(ctx, ring, deg, seed, json_path)
    ctx.obj["json_path"] = cfg["json_path"]
    config = {"seed": cfg["seed"] or 0}
    if cfg["deg"] is not None:
        config["deg"] = cfg["deg"]
    if count is not None:
        config["count"] = count
    if deg_max is not None:
        config["deg_max"] = deg_max
    if maxlen is not None:
        config["maxlen"] = maxlen
    report = _post(ctx, "/suite", {"name": name, "config": config})
    _finish(ctx, report)


@main.command()
@click.option("--host", default="127.0.0.1")
@click.option("--port", default=8000, type=int)
def serve(host, port):
    """Run the HTTP service."""
    import uvicorn

    from .service import app

    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
