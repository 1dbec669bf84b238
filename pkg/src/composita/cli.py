"""Batch command-line front door.

Subcommands:

    close         saturate a system document; report E, H groups, indices
    base-field    closure + base-field extraction (+ explicit minimal
                  polynomials when the context is realized)
    fuse          fusion of two labeled simples with multiplicities
    oracle-sweep  cross-check every composable pair of a realized context
    examples      run the bundled fixtures end to end

Exit codes (stable contract):

    0  success
    1  fixture failure in `examples`
    2  parse/document error
    3  desk-scale cap exceeded
    4  invariant violation (a closure guarantee failed: a bug, not bad input)
    5  oracle mismatch between the group model and the number-field model
    6  usage error (unknown label/fixture, pair not composable)
    7  system not connected

All output is deterministic for a fixed input and seed: reports are
emitted as canonical JSON (sorted keys) or stable text.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from importlib import resources

from .closure import base_field, close, h_group, is_connected
from .documents import (base_field_to_json, canonical_json,
                        compositum_to_json, derivation_to_json, load_system,
                        subgroup_to_json)
from .errors import (CapExceededError, DocumentError, ModelInvariantError,
                     NotConnectedError, OracleMismatchError)
from .fusion import (SimpleOneMorphism, build_fusion_table, end_field, fold,
                     fuse, fusion_table_to_json, fusion_table_to_text,
                     identity_simple, inv_dim, unfold, weak_rigidity_check)
from .intfactor import DEFAULT_DEGREE_CAP
from .perm import DEFAULT_GROUP_ORDER_CAP, index
from .realize import DEFAULT_SEED, oracle_sweep

BUNDLED_FIXTURES = ("c2_complex", "rc_two_object", "s3_cbrt2", "cyclotomic12")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    input: str | None
    fmt: str = "text"
    seed: int = DEFAULT_SEED
    max_group_order: int = DEFAULT_GROUP_ORDER_CAP
    max_degree: int = DEFAULT_DEGREE_CAP

    def __post_init__(self):
        if self.seed < 0 or self.max_group_order < 1 or self.max_degree < 1:
            raise UsageError("caps must be positive and the seed nonnegative")


def _resolve_input(name: str) -> str:
    import os
    if os.path.exists(name):
        return name
    base = os.path.basename(name)
    if base.endswith(".json"):
        base = base[:-5]
    if base in BUNDLED_FIXTURES:
        return str(resources.files("composita.fixtures") / f"{base}.json")
    raise DocumentError(f"no such input file or bundled fixture: {name}")


def _load(config: RunConfig):
    if not config.input:
        raise UsageError("this command needs --input")
    parsed = load_system(_resolve_input(config.input),
                         max_group_order=config.max_group_order)
    if parsed.realization is not None:
        parsed.realization.seed = config.seed
        parsed.realization.factor_cap = config.max_degree
    return parsed


def _emit(payload: dict, config: RunConfig, text_lines) -> None:
    if config.fmt == "json":
        sys.stdout.write(canonical_json(payload))
    else:
        for line in text_lines:
            print(line)


# --- commands -------------------------------------------------------------


def cmd_close(config: RunConfig) -> int:
    parsed = _load(config)
    closed = close(parsed.system)
    connected = is_connected(closed)
    h = {n.label: h_group(closed, n) for n in closed.nodes}
    indices = {n.label: index(h[n.label], n.group) for n in closed.nodes}
    payload = {
        "command": "close",
        "label": parsed.label,
        "E_size": len(closed),
        "connected": connected,
        "composita": [compositum_to_json(v) for v in closed.composita],
        "H": {label: subgroup_to_json(g) for label, g in sorted(h.items())},
        "indices": dict(sorted(indices.items())),
        "derivations": [derivation_to_json(v, closed.derivations[v])
                        for v in closed.composita],
    }
    if connected:
        result = base_field(closed)
        payload["triangles"] = base_field_to_json(result)["triangles"]
    lines = [f"closure of {parsed.label or config.input}: |E| = {len(closed)}"
             f" over {len(closed.nodes)} node(s), connected={connected}"]
    for v in closed.composita:
        lines.append(f"  {v.source.label} -> {v.target.label}  "
                     f"rep={list(v.rep.images)}  |G_V|={v.group.order}")
    for label in sorted(h):
        lines.append(f"  H({label}): order {h[label].order}, "
                     f"index over node group = {indices[label]}")
    _emit(payload, config, lines)
    return 0


def cmd_base_field(config: RunConfig) -> int:
    parsed = _load(config)
    closed = close(parsed.system)
    result = base_field(closed)
    payload = {"command": "base-field", "label": parsed.label,
               **base_field_to_json(result)}
    lines = [f"base field of {parsed.label or config.input}: root node "
             f"{result.base_label!r}, base group order {result.base_group.order}"]
    for label, idx in sorted(result.indices.items()):
        lines.append(f"  [k_{label} : k] = {idx}")
    if parsed.realization is not None:
        rctx = parsed.realization
        nf, _ = rctx.fixed_field(result.base_group)
        payload["base_min_poly"] = nf.min_poly.to_json()
        node_polys = {}
        for n in closed.nodes:
            node_nf, _ = rctx.fixed_field(n.group)
            node_polys[n.label] = node_nf.min_poly.to_json()
        payload["node_min_polys"] = node_polys
        lines.append(f"  base minimal polynomial: {nf.min_poly}")
        for label in sorted(node_polys):
            node_nf, _ = rctx.fixed_field(closed.node(label).group)
            lines.append(f"  k_{label} minimal polynomial: {node_nf.min_poly}")
    lines.append(f"  triangles: "
                 f"{'all pass' if result.all_triangles_ok else 'FAILED'}")
    _emit(payload, config, lines)
    return 0


def cmd_fuse(config: RunConfig, v_label: str, w_label: str) -> int:
    parsed = _load(config)
    closed = close(parsed.system)
    table = build_fusion_table(closed, preferred_labels=parsed.labels)
    try:
        v = table.simple(v_label)
        w = table.simple(w_label)
    except KeyError as exc:
        raise UsageError(f"unknown simple label {exc.args[0]!r}; known: "
                         f"{[s.label for s in table.simples]}") from exc
    if v.target != w.source:
        raise UsageError(
            f"{v_label} and {w_label} are not composable "
            f"({v.target.label} != {w.source.label})")
    out = fuse(v, w)
    g_order = closed.ctx.ambient.order
    by_comp = {s.compositum: s.label for s in table.simples}
    summands = []
    for x, m in out.summands:
        summands.append({
            "X": by_comp[x.compositum],
            "mult": m,
            "degree_over_base": g_order // x.compositum.group.order,
        })
    payload = {"command": "fuse", "label": parsed.label,
               "V": v_label, "W": w_label, "summands": summands}
    pretty = " + ".join(
        (f"{s['mult']}*{s['X']}" if s["mult"] > 1 else s["X"])
        for s in summands)
    lines = [f"{v_label} (x) {w_label} = {pretty}"]
    for s in summands:
        lines.append(f"  {s['X']}: multiplicity {s['mult']}, "
                     f"degree over the prime-fixed field {s['degree_over_base']}")
    _emit(payload, config, lines)
    return 0


def cmd_oracle_sweep(config: RunConfig) -> int:
    parsed = _load(config)
    if parsed.realization is None:
        raise UsageError("oracle-sweep needs a realized context "
                         "(the document must carry a 'realization')")
    rctx = parsed.realization
    reports = oracle_sweep(rctx)
    dims: dict[int, int] = {}
    for r in reports:
        dims[r.algebra_dim] = dims.get(r.algebra_dim, 0) + 1
    payload = {
        "command": "oracle-sweep",
        "context": rctx.name,
        "pairs": len(reports),
        "all_ok": True,
        "max_radical": max((r.radical for r in reports), default=0),
        "algebra_dims": {str(k): v for k, v in sorted(dims.items())},
    }
    lines = [f"oracle sweep over {rctx.name}: {len(reports)} composable "
             f"pairs, all consistent",
             f"  algebra dimensions: "
             + ", ".join(f"{k}x{v}" for k, v in sorted(dims.items())),
             f"  max radical dimension: {payload['max_radical']}"]
    _emit(payload, config, lines)
    return 0


# --- bundled fixture checks -------------------------------------------------


def _checks_c2_complex(config: RunConfig):
    parsed = load_system(_resolve_input("c2_complex"),
                         max_group_order=config.max_group_order)
    closed = close(parsed.system)
    table = build_fusion_table(closed, preferred_labels=parsed.labels)
    a = table.simple("A")
    node = closed.node("C")
    out = fuse(a, a)
    result = base_field(closed)
    checks = [
        ("two simple objects", len(closed) == 2),
        ("A (x) A = I with multiplicity 1",
         out.summands == ((identity_simple(node), 1),)),
        ("end field of A has degrees (1, 1)",
         (end_field(a).deg_left, end_field(a).deg_right) == (1, 1)),
        ("base field index 2", result.indices == {"C": 2}),
        ("triangles pass", result.all_triangles_ok),
        ("weak rigidity", all(weak_rigidity_check(s) for s in table.simples)),
    ]
    if parsed.realization is not None:
        from .realize import oracle_check
        report = oracle_check(parsed.realization, a.compositum, a.compositum)
        checks.append(("oracle: one summand, the big field itself",
                       report.degree_multiset() == [2]))
    return checks


def _checks_rc_two_object(config: RunConfig):
    parsed = load_system(_resolve_input("rc_two_object"),
                         max_group_order=config.max_group_order)
    closed = close(parsed.system)
    table = build_fusion_table(closed, preferred_labels=parsed.labels)
    folded = fold(table)
    unfolded = unfold(folded)
    result = base_field(closed)
    ir = identity_simple(closed.node("R"))
    ic = identity_simple(closed.node("C"))
    checks = [
        ("five simples in the closure", len(closed) == 5),
        ("unfolds to two objects", len(unfolded.objects) == 2),
        ("End(I_R) is the R-node field",
         end_field(ir).group == closed.node("R").group),
        ("End(I_C) is the C-node field",
         end_field(ic).group == closed.node("C").group),
        ("folds back identically", fold(table) == folded),
        ("indices {C: 2, R: 1}", result.indices == {"C": 2, "R": 1}),
    ]
    return checks


def _checks_s3_cbrt2(config: RunConfig):
    parsed = load_system(_resolve_input("s3_cbrt2"),
                         max_group_order=config.max_group_order)
    closed = close(parsed.system)
    table = build_fusion_table(closed, preferred_labels=parsed.labels)
    v = table.simple("V")
    node = closed.node("A")
    out = fuse(v, v)
    result = base_field(closed)
    degree_multiset = sorted(6 // x.compositum.group.order
                             for x, _ in out.summands)
    checks = [
        ("two simples in the closure", len(closed) == 2),
        ("H is all of S3", result.base_group.order == 6),
        ("index 3 over the node", result.indices == {"A": 3}),
        ("self-fusion classes have degrees {3, 6}",
         degree_multiset == [3, 6]),
        ("identity appears with weight 2",
         out.multiplicity(identity_simple(node)) == 2),
        ("invariants match the rigidity bound", inv_dim(out) >= 1),
    ]
    if parsed.realization is not None:
        from .realize import oracle_check
        report = oracle_check(parsed.realization, v.compositum, v.compositum)
        checks.append(("oracle: two sextic summands",
                       report.degree_multiset() == [6, 6]))
    return checks


def _checks_cyclotomic12(config: RunConfig):
    parsed = load_system(_resolve_input("cyclotomic12"),
                         max_group_order=config.max_group_order)
    closed = close(parsed.system)
    checks = [("identity-only closure", len(closed) == 1)]
    if parsed.realization is not None:
        reports = oracle_sweep(parsed.realization)
        checks.append(("oracle sweep all-pass", len(reports) > 0))
        checks.append(("all tensor algebras semisimple",
                       all(r.radical == 0 for r in reports)))
    return checks


FIXTURE_CHECKS = {
    "c2_complex": _checks_c2_complex,
    "rc_two_object": _checks_rc_two_object,
    "s3_cbrt2": _checks_s3_cbrt2,
    "cyclotomic12": _checks_cyclotomic12,
}


def cmd_examples(config: RunConfig, fixture: str | None = None) -> int:
    names = [fixture] if fixture else list(FIXTURE_CHECKS)
    for name in names:
        if name not in FIXTURE_CHECKS:
            raise UsageError(f"unknown fixture {name!r}; "
                             f"known: {sorted(FIXTURE_CHECKS)}")
    results = []
    all_ok = True
    for name in names:
        checks = FIXTURE_CHECKS[name](config)
        ok = all(passed for _, passed in checks)
        all_ok = all_ok and ok
        results.append({"name": name, "pass": ok,
                        "checks": [{"name": c, "pass": p} for c, p in checks]})
    payload = {"command": "examples", "all_pass": all_ok, "fixtures": results}
    lines = []
    for r in results:
        lines.append(f"[{'PASS' if r['pass'] else 'FAIL'}] {r['name']}")
        for c in r["checks"]:
            lines.append(f"    {'ok  ' if c['pass'] else 'FAIL'} {c['name']}")
    lines.append(f"fixtures: {'all pass' if all_ok else 'FAILURES PRESENT'}")
    _emit(payload, config, lines)
    return 0 if all_ok else 1


# --- entry point --------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="composita",
        description="Exact composita of fields: closure, base fields, "
                    "fusion rules, and number-field cross-checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--input", help="context/system JSON document "
                                       "(path or bundled fixture name)")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--seed", type=int, default=DEFAULT_SEED)
        p.add_argument("--max-group-order", type=int,
                       default=DEFAULT_GROUP_ORDER_CAP)
        p.add_argument("--max-degree", type=int, default=DEFAULT_DEGREE_CAP)

    common(sub.add_parser("close", help="saturate a compositum system"))
    common(sub.add_parser("base-field", help="closure plus base-field data"))
    p_fuse = sub.add_parser("fuse", help="fuse two labeled simples")
    common(p_fuse)
    p_fuse.add_argument("v_label")
    p_fuse.add_argument("w_label")
    common(sub.add_parser("oracle-sweep",
                          help="cross-check a realized context"))
    p_ex = sub.add_parser("examples", help="run the bundled fixtures")
    common(p_ex)
    p_ex.add_argument("fixture", nargs="?", default=None)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = RunConfig(input=args.input, fmt=args.format,
                           seed=args.seed,
                           max_group_order=args.max_group_order,
                           max_degree=args.max_degree)
        if args.command == "close":
            return cmd_close(config)
        if args.command == "base-field":
            return cmd_base_field(config)
        if args.command == "fuse":
            return cmd_fuse(config, args.v_label, args.w_label)
        if args.command == "oracle-sweep":
            return cmd_oracle_sweep(config)
        if args.command == "examples":
            return cmd_examples(config, args.fixture)
        raise UsageError(f"unknown command {args.command!r}")
    except DocumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ModelInvariantError as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return 4
    except OracleMismatchError as exc:
        print(f"oracle mismatch: {exc}", file=sys.stderr)
        if exc.report is not None:
            print(f"details: {exc.report}", file=sys.stderr)
        return 5
    except NotConnectedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 7
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 6


if __name__ == "__main__":
    raise SystemExit(main())
