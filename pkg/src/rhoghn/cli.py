"""Command line interface.

Every command reads a sheaf description (a file, ``-`` for stdin, the name of
a shipped preset, or ``random:<kind>`` together with ``--seed``) and prints a
JSON document or a short text rendering of the same data.

Exit codes: 0 success, 1 validation failure, 2 parse or schema error,
3 internal assertion.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from dataclasses import dataclass
from importlib import resources
from typing import Optional

from . import random_instances
from .errors import InternalNonRefinement, ParseError, RhoGHNError, UnsupportedType
from .ghn import LexFiltration, ghn_filtration
from .invariant import NuValue, compare_nu, is_semistable, nu
from .optimizer import DEFAULT_MAX_CANDIDATES, brute_force_max, leading_cochar, slope_canonical
from .polyq import format_rational
from .sheafmodel import CombinatorialRhoSheaf, degree, is_central, sheaf_from_json, validate

COMMANDS = (
    "validate",
    "semistable",
    "nu-eval",
    "leading-hn",
    "ghn",
    "slope-canonical",
    "degree",
    "central-check",
    "oracle-compare",
)

PRESETS = ("so7_p3_paper", "so7_p3_corrected", "glxgl_noncentral")

RANDOM_KINDS = {
    "general": random_instances.random_general,
    "central": random_instances.random_central,
    "gl": random_instances.random_gl_identity,
}

SCOPE = "toral"


@dataclass(frozen=True)
class RunConfig:
    command: str
    input_path: str
    output_format: str = "json"
    bound: Optional[int] = None
    seed: Optional[int] = None
    lam: Optional[tuple] = None
    max_candidates: int = DEFAULT_MAX_CANDIDATES


class UsageError(Exception):
    pass


def preset_text(name: str) -> str:
    stem = name[:-5] if name.endswith(".json") else name
    if stem not in PRESETS:
        raise ParseError(f"unknown preset {name!r}")
    return resources.files("rhoghn.presets").joinpath(stem + ".json").read_text()


def load_sheaf(path: str, seed: Optional[int] = None, stdin=None) -> CombinatorialRhoSheaf:
    if path.startswith("random:"):
        kind = path.split(":", 1)[1]
        if kind not in RANDOM_KINDS:
            raise ParseError(f"unknown random kind {kind!r}; use one of {sorted(RANDOM_KINDS)}")
        return RANDOM_KINDS[kind](random.Random(0 if seed is None else seed))
    if path == "-":
        text = (stdin or sys.stdin).read()
    elif os.path.exists(path):
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = preset_text(os.path.basename(path))
    return sheaf_from_json(text)


def parse_lambda(text: str) -> tuple:
    try:
        v = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"--lambda is not a JSON list: {text!r}") from exc
    if not isinstance(v, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in v):
        raise ParseError("--lambda must be a list of integers")
    return tuple(v)


# ---------------------------------------------------------------------------
# Commands; each returns (exit code, payload)


def _leading_payload(sheaf):
    lead = leading_cochar(sheaf)
    if lead is None:
        return {"lambda": None, "leading_degree": None, "nu": None, "scope": SCOPE}
    return {
        "lambda": list(lead.cochar),
        "leading_degree": lead.leading_degree,
        "nu": lead.value.to_json(),
        "scope": SCOPE,
    }


def _oracle_payload(sheaf, cfg):
    lead = leading_cochar(sheaf)
    oracle = brute_force_max(sheaf, cfg.bound, cfg.max_candidates)
    if lead is None:
        agree = oracle is None
    elif max(abs(x) for x in lead.cochar) > cfg.bound:
        # The analytic ray lies outside the box; agreement means the oracle
        # found nothing better than it.
        agree = oracle is not None and compare_nu(oracle.value, lead.value) <= 0
    else:
        agree = (
            oracle is not None
            and oracle.cochar == lead.cochar
            and compare_nu(oracle.value, lead.value) == 0
        )
    return {
        "agree": agree,
        "bound": cfg.bound,
        "analytic": None if lead is None else {"lambda": list(lead.cochar), "nu": lead.value.to_json()},
        "oracle": None if oracle is None else {"lambda": list(oracle.cochar), "nu": oracle.value.to_json()},
        "scope": SCOPE,
    }


def execute(cfg: RunConfig, sheaf: CombinatorialRhoSheaf):
    report = validate(sheaf)
    if cfg.command == "validate":
        return (0 if report.ok else 1), report.to_json()
    if not report.ok:
        return 1, report.to_json()
    if cfg.command == "semistable":
        return 0, {"semistable": is_semistable(sheaf), "scope": SCOPE}
    if cfg.command == "nu-eval":
        if cfg.lam is None:
            raise UsageError("nu-eval needs --lambda")
        if len(cfg.lam) != sheaf.datum.torus_rank:
            raise ParseError(f"--lambda has length {len(cfg.lam)}, torus rank is {sheaf.datum.torus_rank}")
        value = nu(sheaf, cfg.lam)
        return 0, {"lambda": list(cfg.lam), "nu": value.to_json(), "degenerate": value.degenerate}
    if cfg.command == "leading-hn":
        return 0, _leading_payload(sheaf)
    if cfg.command == "ghn":
        out = ghn_filtration(sheaf).to_json()
        out["labels"] = [sheaf.label(k) for k in range(len(sheaf.summands))]
        out["scope"] = SCOPE
        return 0, out
    if cfg.command == "slope-canonical":
        ray = slope_canonical(sheaf)
        return 0, {"ray": None if ray is None else list(ray)}
    if cfg.command == "degree":
        return 0, {"degree": [format_rational(x) for x in degree(sheaf)]}
    if cfg.command == "central-check":
        return 0, {"central": is_central(sheaf.datum, sheaf.rep)}
    if cfg.command == "oracle-compare":
        if cfg.bound is None:
            raise UsageError("oracle-compare needs --bound")
        return 0, _oracle_payload(sheaf, cfg)
    raise UsageError(f"unknown command {cfg.command!r}")


# ---------------------------------------------------------------------------
# Text rendering


def _color(text: str, code: str, enabled: bool) -> str:
    return f"\x1b[{code}m{text}\x1b[0m" if enabled else text


def _fmt_nu(data) -> str:
    v = NuValue.from_json(data)
    return f"L = {v.L}, Q = {format_rational(v.Q)}, A_d = {format_rational(v.A_d)}"


def render_text(command: str, payload: dict, color: bool) -> str:
    good = lambda s: _color(s, "32", color)  # noqa: E731
    bad = lambda s: _color(s, "31", color)  # noqa: E731
    lines = []
    if "checks" in payload:
        for c in payload["checks"]:
            mark = good("ok  ") if c["passed"] else bad("FAIL")
            lines.append(f"{mark} {c['name']}" + (f": {c['witness']}" if c.get("witness") else ""))
        return "\n".join(lines)
    if command == "semistable":
        verdict = good("semistable") if payload["semistable"] else bad("unstable")
        return f"{verdict} (scope: {payload['scope']} filtrations)"
    if command == "nu-eval":
        return f"lambda = {payload['lambda']}: {_fmt_nu(payload['nu'])}" + (
            " (degenerate)" if payload["degenerate"] else ""
        )
    if command == "leading-hn":
        if payload["lambda"] is None:
            return good("semistable: no destabilizing cocharacter")
        return (
            f"lambda = {payload['lambda']}, leading degree {payload['leading_degree']}\n"
            f"nu: {_fmt_nu(payload['nu'])}"
        )
    if command == "ghn":
        lex = LexFiltration.from_json(payload)
        labels = payload["labels"]
        lines.append(f"q = {lex.q}")
        for k, s in enumerate(lex.steps, 1):
            lines.append(f"step {k}: lambda = {list(s.cochar)}, leading degree {s.leading_degree}")
        for w, ks in lex.jumping_points:
            lines.append(f"  {list(w)}: " + ", ".join(labels[k] for k in ks))
        return "\n".join(lines)
    if command == "slope-canonical":
        return "slope semistable" if payload["ray"] is None else f"ray = {payload['ray']}"
    if command == "degree":
        return "degree = [" + ", ".join(payload["degree"]) + "]"
    if command == "central-check":
        return "central" if payload["central"] else "not central"
    if command == "oracle-compare":
        verdict = good("agree") if payload["agree"] else bad("disagree")
        a = payload["analytic"]["lambda"] if payload["analytic"] else None
        o = payload["oracle"]["lambda"] if payload["oracle"] else None
        return f"{verdict}: analytic {a}, oracle {o} (bound {payload['bound']})"
    return json.dumps(payload)


# ---------------------------------------------------------------------------
# Entry point


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rhoghn", description=__doc__.splitlines()[0])
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--input", required=True, help="sheaf JSON file, '-', a preset name or random:<kind>")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--lambda", dest="lam", help='cocharacter for nu-eval, e.g. "[1,0,0]"')
    p.add_argument("--bound", type=int, help="box bound for the brute force oracle")
    p.add_argument("--seed", type=int, help="seed for random:<kind> inputs")
    p.add_argument("--max-candidates", type=int, default=DEFAULT_MAX_CANDIDATES)
    return p


def run(cfg: RunConfig, stdout=None, stderr=None, stdin=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        sheaf = load_sheaf(cfg.input_path, cfg.seed, stdin)
        code, payload = execute(cfg, sheaf)
    except (ParseError, UnsupportedType, UsageError) as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    except InternalNonRefinement as exc:
        print(f"internal error: {exc}", file=stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    except RhoGHNError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=stderr)
        return 1
    if cfg.output_format == "text":
        color = os.environ.get("GHN_COLOR", "0") == "1"
        stdout.write(render_text(cfg.command, payload, color) + "\n")
    else:
        stdout.write(json.dumps(payload) + "\n")
    return code


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        lam = parse_lambda(args.lam) if args.lam is not None else None
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.command == "oracle-compare" and args.bound is None:
        print("error: oracle-compare needs --bound", file=sys.stderr)
        return 2
    cfg = RunConfig(
        args.command, args.input, args.format, args.bound, args.seed, lam, args.max_candidates
    )
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
