"""Command-line entry point: ``hilbertian <command> [options]``."""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import lattice, roadmap
from .config import DEFAULT_CAPS, Caps, DomainError, ResourceCapError, SearchExhausted, check_cap
from .pseudostabilizer import enumerate_maximal, summary_csv
from .ring import ExactMatrix

EXIT_OK, EXIT_USAGE, EXIT_CAP, EXIT_EXHAUSTED = 0, 2, 3, 4

FORMATS = ("json", "csv", "dot", "table")


@dataclass
class RunConfig:
    command: str
    n_qubits: int = 2
    fmt: str = "table"
    output: str | None = None
    cache_dir: str | None = None
    threads: int = 1
    caps: Caps = field(default_factory=lambda: DEFAULT_CAPS)


class UsageError(Exception):
    pass


def _require_format(cfg: RunConfig, allowed: tuple[str, ...]) -> None:
    if cfg.fmt not in allowed:
        raise UsageError(f"{cfg.command} supports --format {', '.join(allowed)}")


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def cmd_enumerate(cfg: RunConfig, args) -> str:
    _require_format(cfg, ("table", "json", "csv"))
    sets = enumerate_maximal(cfg.n_qubits, cfg.caps.enumerate_qubits)
    if cfg.fmt == "json":
        return _dump({"n": cfg.n_qubits, "count": len(sets), "sets": [s.to_json() for s in sets]})
    if cfg.fmt == "csv":
        return summary_csv(sets)
    lines = []
    for s in sets:
        cls = s.to_json().get("class", "")
        elems = " ".join(str(i) for i in s.element_indices)
        lines.append(f"{s.label:>5}  {elems}  {cls}".rstrip())
    lines.append(f"total: {len(sets)}")
    return "\n".join(lines) + "\n"


def cmd_states(cfg: RunConfig, args) -> str:
    _require_format(cfg, ("table", "json", "csv"))
    if args.count_only:
        # count-only reaches one qubit further: it needs the sets, not the vectors
        sets = enumerate_maximal(cfg.n_qubits, cfg.caps.enumerate_qubits)
        return f"{2**cfg.n_qubits * len(sets)}\n"
    poly = roadmap.build_polytope(cfg.n_qubits, cfg.caps.polytope_qubits)
    if cfg.fmt == "json":
        return _dump(poly.to_json())
    if cfg.fmt == "csv":
        lines = ["set,pattern,state"]
        for v, (lab, pat) in zip(poly.states, poly.origin):
            signs = " ".join(f"{s:+d}" for s in pat.signs)
            lines.append(f'{lab},{signs},"{v.row_string()}"')
        return "\n".join(lines) + "\n"
    lines = []
    for v, (lab, pat) in zip(poly.states, poly.origin):
        lines.append(f"{lab:>4}  {pat.seed_label():>5}  {v.row_string()}")
    lines.append(f"V_{cfg.n_qubits}: {len(poly)}")
    return "\n".join(lines) + "\n"


def _parse_gens(specs):
    pairs = []
    for spec in specs:
        try:
            j, k = (int(x) for x in spec.split(","))
        except ValueError:
            raise UsageError(f"bad generator {spec!r}; expected j,k") from None
        pairs.append((j, k))
    return pairs


def _load_matrix(path: str) -> ExactMatrix:
    data = json.loads(Path(path).read_text())
    return ExactMatrix(data["re"], data.get("im"), int(data.get("k", 0)))


def cmd_synthesize(cfg: RunConfig, args) -> str:
    _require_format(cfg, ("table", "json"))
    if bool(args.gate) == bool(args.matrix):
        raise UsageError("give exactly one of --gate or --matrix")
    if args.gens:
        pairs = _parse_gens(args.gens)
        top = max(max(p) for p in pairs)
        n = args.n_qubits
        if n is None:
            n = 1
            while 4**n <= top:
                n += 1
            if args.gate and args.gate.upper() == "CNOT":
                n = max(n, 2)
        gens = [roadmap.rotation_from_indices(n, j, k) for j, k in pairs]
        if args.gate:
            target, name = roadmap.standard_gate(args.gate, n), args.gate.upper()
        else:
            target, name = _load_matrix(args.matrix), "matrix"
        seq = roadmap.synthesize(target, gens, args.max_depth or cfg.caps.synth_depth, name)
    else:
        if not args.gate:
            raise UsageError("--matrix needs --gens")
        seq = roadmap.decompose_named_gate(args.gate)
    if cfg.fmt == "json":
        return _dump(seq.to_json())
    status = "verified" if seq.verified else "NOT verified"
    return f"{seq}\nlength: {len(seq)}\nphase: omega^{seq.phase}\n{status}\n"


def _fmt_float(x: float) -> str:
    return f"{x:.12g}"


def cmd_lattice(cfg: RunConfig, args) -> str:
    J = args.shell
    check_cap(J, cfg.caps.shell_j, "J")
    if args.fibers:
        _require_format(cfg, ("table", "json"))
        if J != 1:
            raise UsageError("--fibers is defined for the first shell only")
        rep = lattice.fiber_report()
        if cfg.fmt == "json":
            return _dump(rep)
        lines = [
            f"S{tag}: {v['size']} " + " ".join(f"{k}={n}" for k, n in sorted(v["classes"].items()))
            for tag, v in rep["fibers"].items()
        ]
        lines.append(f"total: {rep['total']} in {len(rep['fibers'])} fibers")
        return "\n".join(lines) + "\n"
    if args.spectrum:
        _require_format(cfg, ("table", "json"))
        spec = lattice.shell_concurrence_spectrum(J, cfg.caps.shell_j)
        if cfg.fmt == "json":
            out = spec.to_json()
            if J == 3:
                out["sqrt8_reading"] = lattice.sqrt8_reading(spec)
            return _dump(out)
        text = ", ".join(_fmt_float(v) for v in spec.values) + "\n"
        text += "exact: " + ", ".join(spec.labels()) + "\n"
        if J == 3:
            text += f"printed sqrt8/3 matches the reading {lattice.sqrt8_reading(spec)}\n"
        return text
    if args.bloch:
        _require_format(cfg, ("table", "csv", "json"))
        pts = lattice.bloch_ball_discretization(J, cfg.caps.shell_j)
        if cfg.fmt == "json":
            return _dump({
                "J": J,
                "points": [
                    {"x": [str(c) for c in p], "multiplicity": pts[p]} for p in sorted(pts)
                ],
            })
        return lattice.bloch_csv(pts)
    _require_format(cfg, ("csv", "table"))
    return lattice.shell_csv(J, cfg.caps.shell_j)


def cmd_crosscheck(cfg: RunConfig, args) -> str:
    _require_format(cfg, ("table", "json"))
    rep = lattice.crosscheck_with_polytope()
    if cfg.fmt == "json":
        return _dump(rep.to_json())
    text = rep.summary() + "\n"
    for key in rep.unmatched_lattice:
        text += f"unmatched lattice ray: {key}\n"
    return text


def cmd_roadmap(cfg: RunConfig, args) -> str:
    _require_format(cfg, ("dot", "table", "json"))
    r = roadmap.build_roadmap(cfg.n_qubits, cfg.caps.polytope_qubits)
    if cfg.fmt == "dot":
        return roadmap.export_dot(r)
    if cfg.fmt == "json":
        return _dump({
            "n": r.n_qubits,
            "nodes": r.nodes,
            "entangled": sorted(r.entangled),
            "edges": [{"a": e.a, "b": e.b, **e.rotation.to_json()} for e in r.edges],
        })
    lines = [f"{n:>4}  degree {r.degree(n)}" for n in r.nodes]
    lines.append(f"edges: {len(r.edges)}  connected: {r.is_connected()}")
    return "\n".join(lines) + "\n"


def cmd_closure(cfg: RunConfig, args) -> str:
    from .rotations import enumerate_rotations, group_closure

    _require_format(cfg, ("json", "table"))
    check_cap(cfg.n_qubits, cfg.caps.closure_qubits, "n_qubits")
    g = group_closure(enumerate_rotations(cfg.n_qubits), cfg.caps.closure_elements)
    rep = g.report(roadmap.build_polytope(cfg.n_qubits).states)
    if cfg.fmt == "json":
        return _dump(rep)
    return "".join(f"{k}: {v}\n" for k, v in rep.items())


COMMANDS = {
    "enumerate": cmd_enumerate,
    "states": cmd_states,
    "synthesize": cmd_synthesize,
    "lattice": cmd_lattice,
    "crosscheck": cmd_crosscheck,
    "roadmap": cmd_roadmap,
    "closure": cmd_closure,
}

CACHEABLE = {"states", "closure", "roadmap"}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="fmt", choices=FORMATS, default=None)
    common.add_argument("-o", "--output", help="write to this file instead of stdout")
    common.add_argument("--cache-dir", help="memoize heavy results as content-addressed files")
    common.add_argument("--threads", type=int, default=None, help="worker cap (env HILBERTIAN_THREADS)")

    p = argparse.ArgumentParser(prog="hilbertian", description=__doc__, parents=[common])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, help_text, n_default=2):
        sp = sub.add_parser(name, help=help_text, parents=[common])
        sp.add_argument("-n", "--n-qubits", type=int, default=n_default)
        return sp

    add("enumerate", "list maximal pseudostabilizers")
    sp = add("states", "dump the discrete state set")
    sp.add_argument("--count-only", action="store_true")
    sp = add("synthesize", "named-gate decomposition or shortest synonym search", None)
    sp.add_argument("--gate", help="H, S or CNOT")
    sp.add_argument("--matrix", help="JSON file {re, im, k} holding the target")
    sp.add_argument("--gens", nargs="+", metavar="J,K", help="generator rotations X[j,k]")
    sp.add_argument("--max-depth", type=int, default=None)
    sp = sub.add_parser("lattice", help="E8 shell reports", parents=[common])
    sp.add_argument("--shell", type=int, default=1)
    group = sp.add_mutually_exclusive_group()
    group.add_argument("--spectrum", action="store_true")
    group.add_argument("--fibers", action="store_true")
    group.add_argument("--bloch", action="store_true")
    sub.add_parser("crosscheck", help="lattice rays vs pseudostabilizer states", parents=[common])
    add("roadmap", "roadmap graph (DOT by default)")
    add("closure", "projective group generated by all rotations")
    return p


def _threads(value: int | None) -> int:
    if value is None:
        env = os.environ.get("HILBERTIAN_THREADS")
        if env is None:
            return 1
        try:
            value = int(env)
        except ValueError:
            raise UsageError(f"HILBERTIAN_THREADS={env!r} is not an integer") from None
    if value < 1:
        raise UsageError("--threads must be >= 1")
    return value


def _cache_key(cfg: RunConfig, args) -> str:
    payload = {k: v for k, v in sorted(vars(args).items()) if k not in ("cache_dir", "output", "threads")}
    payload["fmt"] = cfg.fmt
    return hashlib.sha256(json.dumps(payload, sort_keys=True).encode()).hexdigest()


def run(argv=None) -> tuple[int, str, str | None]:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), "", None
    default_fmt = "dot" if args.command == "roadmap" else "table"
    cfg = RunConfig(
        command=args.command,
        n_qubits=getattr(args, "n_qubits", None) or 2,
        fmt=args.fmt or default_fmt,
        output=args.output,
        cache_dir=args.cache_dir,
    )
    try:
        cfg.threads = _threads(args.threads)
        cached = None
        if cfg.cache_dir and cfg.command in CACHEABLE:
            cached = Path(cfg.cache_dir) / f"{cfg.command}-{_cache_key(cfg, args)}.out"
        if cached is not None and cached.exists():
            text = cached.read_text()
        else:
            text = COMMANDS[cfg.command](cfg, args)
            if cached is not None:
                cached.parent.mkdir(parents=True, exist_ok=True)
                cached.write_text(text)
    except (UsageError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE, "", None
    except ResourceCapError as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return EXIT_CAP, "", None
    except SearchExhausted as exc:
        print(f"search exhausted: {exc} (explored={exc.explored}, depth={exc.depth})", file=sys.stderr)
        return EXIT_EXHAUSTED, "", None
    return EXIT_OK, text, cfg.output


def main(argv=None) -> int:
    code, text, output = run(argv)
    if code == EXIT_OK:
        if output:
            Path(output).write_text(text)
        else:
            sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
