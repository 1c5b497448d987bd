"""Command-line front end (``schargraph``).

Exit codes: 0 success, 1 invalid input or a class-U failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Optional

from . import fixtures
from .core import IntersectionPair, PairError, bridge_width, subgraph_labels, validate_pair
from .cycles import (all_x_cycles, find_great_webs, find_s_sets, isolated_vertices,
                     scharlemann_consistency, trees_or_cycles)
from .embedding import EmbeddingError
from .enumeration import BUDGET_ENV, BudgetExceeded, EnumerationSpec, enumerate_pairs
from .harness import (DEFAULT_SEED, PROFILES, REGISTRY, Corpus, CorpusConfig, HarnessError,
                      run_suite, verify_lemma)
from .orientation import (OrientationError, build_rf, conjugate_star, find_representing_faces,
                          good_corner_index_bound, induce_orientation, is_disk_region)
from .signs import PLUS, parse_sign, sign_str
from .stars import (Star, StarError, derivative, derivative_relative, parse_type,
                    sequence_of_coherence, star_for_type)


class InputError(Exception):
    """Bad input file or arguments that parse but cannot be used (exit 1)."""


def _emit(args, data, text: str) -> None:
    if args.json:
        print(json.dumps(data, sort_keys=True, indent=2))
    else:
        print(text)


def _load_pair(path: str) -> IntersectionPair:
    try:
        return IntersectionPair.load(path)
    except FileNotFoundError:
        raise InputError(f"no such file: {path}")
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: not JSON ({exc})")


def _load_star(path: str) -> Star:
    try:
        return Star.load(path)
    except FileNotFoundError:
        raise InputError(f"no such file: {path}")
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: not JSON ({exc})")


def _checked_pair(path: str) -> IntersectionPair:
    pair = _load_pair(path)
    rep = validate_pair(pair)
    if not rep.ok:
        raise InputError(f"{path} is not a valid pair: {', '.join(rep.codes)}")
    return pair


def _int_list(text: str) -> list[int]:
    return [int(t) for t in text.replace(",", " ").split()]


def _sign_list(text: str) -> tuple[int, ...]:
    text = text.strip()
    tokens = text.replace(",", " ").split() if ("," in text or " " in text) else list(text)
    return parse_type(tokens)


# --------------------------------------------------------------------------
# commands
# --------------------------------------------------------------------------

def cmd_validate(args) -> int:
    pair = _load_pair(args.file)
    rep = validate_pair(pair, require_connected=args.connected)
    lines = ["valid" if rep.ok else "invalid"]
    lines += [f"  {v.code}: {v.detail}" for v in rep.violations]
    _emit(args, rep.to_json(), "\n".join(lines))
    return 0 if rep.ok else 1


def analyze_pair(pair: IntersectionPair, side: str) -> dict:
    view = pair.view(side)
    other_count = pair.count("P" if side == "Q" else "Q")
    cycles = all_x_cycles(view)
    s_sets = find_s_sets(view)
    out = {
        "side": side,
        "x_cycles": [c.to_json() for c in cycles],
        "scharlemann": scharlemann_consistency(view),
        "great_webs": [w.to_json() for w in find_great_webs(view, other_count - 2)],
        "s_sets": [s.to_json() for s in s_sets],
        "isolated": isolated_vertices(view),
    }
    if side == "Q":
        trees = []
        for s in s_sets:
            if not s.innermost:
                continue
            W = sorted({b[0] for a, b in _leaving_q(pair, s.vertices)})
            comps = trees_or_cycles(pair, s.vertices, W)
            trees.append({"V": sorted(s.vertices), "W": W, "components": [c.to_json() for c in comps]})
        out["trees"] = trees
    return out


def _leaving_q(pair: IntersectionPair, V) -> list:
    out = []
    for a, b in pair.edges("Q"):
        if a[0] in V and b[0] not in V:
            out.append((a, b))
        elif b[0] in V and a[0] not in V:
            out.append((b, a))
    return out


def _analysis_text(res: dict) -> str:
    lines = [f"side {res['side']}"]
    for c in res["x_cycles"]:
        kind = "Scharlemann" if c["kind"] == "scharlemann" else ("new great" if c["great"] else "new")
        lines.append(f"  {kind} cycle on vertices {c['vertices']} labels {c['labels']} order {c['order']}")
    lines.append(f"  Scharlemann status: {res['scharlemann']['status']}")
    for w in res["great_webs"]:
        lines.append(f"  great {w['m']}-web {w['vertices']}")
    for s in res["s_sets"]:
        tag = "innermost " if s["innermost"] else ""
        lines.append(f"  {tag}({sign_str(s['sign'])})-set {s['vertices']} leaving labels {s['leave_labels']}")
    lines.append(f"  isolated vertices: {res['isolated'] or 'none'}")
    for t in res.get("trees", []):
        kinds = [c["kind"] for c in t["components"]]
        lines.append(f"  [V,W] for V={t['V']}: components {kinds or 'none'}")
    return "\n".join(lines)


def cmd_analyze(args) -> int:
    pair = _checked_pair(args.file)
    res = analyze_pair(pair, args.side)
    _emit(args, res, _analysis_text(res))
    return 0


def _star_from_args(args) -> Star:
    if args.star:
        return _load_star(args.star)
    tau = _sign_list(args.type)
    n = len(tau)
    if args.parities:
        pars = _sign_list(args.parities)
    else:
        pars = tuple(PLUS if i % 2 == 0 else -PLUS for i in range(n))
    if len(pars) != n:
        raise InputError("--parities needs one sign per label of the type")
    return star_for_type(tau, list(pars), range(1, n + 1), parse_sign(args.sign))


def _star_text(T: Star) -> str:
    return (f"sign {sign_str(T.sign)} L {list(T.L)} omega {list(T.omega)} "
            f"A {list(T.A)} C {list(T.C)}")


def cmd_star(args) -> int:
    T = _star_from_args(args)
    if args.action == "derive":
        out, lines = {"star": T.to_json(), "A": list(T.A), "C": list(T.C)}, [_star_text(T)]
        L0 = _int_list(args.l0) if args.l0 else None
        for ch in ("+", "-"):
            key = f"d{ch}" if L0 is None else f"d0{ch}"
            try:
                D = derivative(T, ch) if L0 is None else derivative_relative(T, L0, ch)
                out[key] = D.to_json()
                lines.append(f"{key}: {_star_text(D)}")
            except StarError as exc:
                out[key] = {"error": exc.code}
                lines.append(f"{key}: {exc.code}")
        _emit(args, out, "\n".join(lines))
    elif args.action == "cohere":
        seq = sequence_of_coherence(T.ltype(), dict(zip(T.labels, T.parities)), T.L)
        lines = [f"n = {seq.n}"] + [f"T{i + 1}: {_star_text(S)}" for i, S in enumerate(seq.stars)]
        _emit(args, seq.to_json(), "\n".join(lines))
    else:
        H = conjugate_star(T)
        _emit(args, {"star": T.to_json(), "conjugate": H.to_json()}, _star_text(H))
    return 0


def cmd_represent(args) -> int:
    pair = _checked_pair(args.file)
    T = _load_star(args.star)
    G = induce_orientation(pair, T)
    faces, stats = find_representing_faces(G)
    out = {"orientation": G.to_json(), "stats": stats.to_json(),
           "representing_faces": [f.id for f in faces]}
    lines = [f"i={stats.i} u={stats.u} r={stats.r} s={stats.s} t={stats.t}",
             f"representing faces: {[f.id for f in faces] or 'none'}"]
    if stats.flags:
        lines.append(f"Hoffman flags: {', '.join(stats.flags)}")
    try:
        rf = build_rf(G)
        out["rf"] = rf.to_json()
        lines.append(f"RF graph: {len(rf.black_faces)} reversed faces, |A(RF)|={len(rf.A_RF)}, "
                     f"|C(RF)|={len(rf.C_RF)}")
    except OrientationError as exc:
        out["rf"] = {"error": exc.code}
        lines.append(f"RF graph: {exc.code}")
    if args.eta_c is not None or args.eta_a is not None:
        if args.eta_c is None or args.eta_a is None:
            raise InputError("--eta-c and --eta-a go together")
        ec, ea = parse_sign(args.eta_c), parse_sign(args.eta_a)
        sub = _int_list(args.sub_labels) if args.sub_labels else list(T.L)
        H = subgraph_labels(pair, "P", sub)
        checks = []
        for F in H.faces:
            if not is_disk_region(F):
                continue
            try:
                res = good_corner_index_bound(G, F, ec, ea).to_json()
            except OrientationError as exc:
                res = {"status": exc.code}
            res["face"] = F.id
            checks.append(res)
        out["index_bound"] = checks
        for c in checks:
            lines.append(f"face {c['face']}: {c['status']}" +
                         (f" (index {c['index']})" if "index" in c else ""))
    _emit(args, out, "\n".join(lines))
    return 0


def _parse_pq(text: str) -> tuple[int, int]:
    try:
        p, q = (int(t) for t in text.split(","))
    except ValueError:
        raise InputError("--enumerate expects p,q")
    return p, q


def cmd_verify(args) -> int:
    pq = _parse_pq(args.enumerate) if args.enumerate else None
    if args.suite:
        rep = run_suite(args.suite, args.seed, args.workers, pq)
    else:
        config = CorpusConfig(enumerate=(pq,) if pq else ())
        explicit = None
        if args.fixture:
            explicit = []
            for f in args.fixture:
                pair = _load_pair(f) if os.path.exists(f) else fixtures.load_pair(f)
                explicit.append((f, pair))
        rep = verify_lemma(args.lemma, Corpus(config, explicit), args.seed, args.workers)
    data = rep.to_json()
    if args.out:
        Path(args.out).write_text(json.dumps(data, sort_keys=True, indent=2) + "\n")
    _emit(args, data, rep.render_text())
    return rep.exit_code


def cmd_enumerate(args) -> int:
    spec = EnumerationSpec(args.p, args.q, connected_only=args.connected,
                           iso_reduction=args.iso)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    names = []
    for i, pair in enumerate(enumerate_pairs(spec)):
        name = f"pair_{i:06d}.json"
        (out / name).write_text(json.dumps(pair.to_json(), sort_keys=True) + "\n")
        names.append(name)
    manifest = {"p": args.p, "q": args.q, "connected_only": args.connected,
                "iso_reduction": args.iso, "count": len(names), "files": names}
    (out / "manifest.json").write_text(json.dumps(manifest, sort_keys=True, indent=2) + "\n")
    _emit(args, {k: v for k, v in manifest.items() if k != "files"},
          f"{len(names)} pairs written to {out}")
    return 0


def cmd_width(args) -> int:
    try:
        w = bridge_width(args.bridge)
    except ValueError as exc:
        raise InputError(str(exc))
    _emit(args, {"bridge": args.bridge, "width": w}, str(w))
    return 0


def cmd_fixtures(args) -> int:
    if args.list:
        cat = fixtures.catalog()
        data = [{"name": f.name, "format": f.format, "role": f.role, "description": f.description}
                for f in cat]
        _emit(args, data, "\n".join(f"{f.name:<16} {f.format:<5} {f.role:<12} {f.description}"
                                    for f in cat))
        return 0
    try:
        data = fixtures.raw(args.emit)
    except fixtures.FixtureError as exc:
        raise InputError(str(exc))
    text = json.dumps(data, sort_keys=True, indent=2)
    if args.out:
        Path(args.out).write_text(text + "\n")
    else:
        print(text)
    return 0


# --------------------------------------------------------------------------
# parser
# --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    parser = argparse.ArgumentParser(prog="schargraph",
                                     description="Fat-vertex graph pairs, stars and lemma checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="check a pair fixture")
    p.add_argument("file")
    p.add_argument("--connected", action="store_true", help="treat disconnection as invalid")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("analyze", parents=[common], help="cycles, webs, (s)-sets and trees")
    p.add_argument("file")
    p.add_argument("--side", choices=("P", "Q"), default="Q")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("star", parents=[common], help="star calculus")
    p.add_argument("action", choices=("derive", "cohere", "conjugate"))
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--star", help="star JSON file")
    src.add_argument("--type", help="interval signs, e.g. +-+- or +,-,+,-")
    p.add_argument("--parities", help="label parities for --type (default alternating from +)")
    p.add_argument("--sign", default="+", help="vertex sign for --type")
    p.add_argument("--l0", help="labels L0 for relative derivatives")
    p.set_defaults(func=cmd_star)

    p = sub.add_parser("represent", parents=[common], help="orientation induced by a star")
    p.add_argument("file")
    p.add_argument("--star", required=True)
    p.add_argument("--eta-c")
    p.add_argument("--eta-a")
    p.add_argument("--sub-labels", help="labels of the subgraph whose faces get the index bound")
    p.set_defaults(func=cmd_represent)

    p = sub.add_parser("verify", parents=[common], help="run lemma checks")
    what = p.add_mutually_exclusive_group(required=True)
    what.add_argument("--lemma", choices=sorted(REGISTRY))
    what.add_argument("--suite", choices=PROFILES)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--enumerate", help="p,q of an exhaustive pair corpus")
    p.add_argument("--fixture", action="append",
                   help="pair file or fixture name to check (repeatable; --lemma only)")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", help="also write the JSON report here")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", parents=[common], help="write every valid pair to a directory",
                       epilog=f"p*q is capped by the budget (default 16, env {BUDGET_ENV})")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--iso", action="store_true", help="keep one pair per isomorphism class")
    p.add_argument("--connected", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("width", parents=[common], help="thin-position width of a bridge presentation")
    p.add_argument("--bridge", type=int, required=True)
    p.set_defaults(func=cmd_width)

    p = sub.add_parser("fixtures", parents=[common], help="shipped fixtures")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--list", action="store_true")
    g.add_argument("--emit", metavar="NAME")
    p.add_argument("--out")
    p.set_defaults(func=cmd_fixtures)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and args.fixture and args.suite:
        parser.error("--fixture goes with --lemma")
    try:
        return args.func(args)
    except (InputError, PairError, StarError, OrientationError, EmbeddingError,
            BudgetExceeded, HarnessError, fixtures.FixtureError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
