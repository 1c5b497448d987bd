"""Lemma registry, corpora and verification reports.

Class U lemmas are universally true combinatorial statements, so any
failure is an implementation bug and makes the report fatal. Class T lemmas
depend on the pair coming from an actual surgery; on abstract pairs they
can fail, and a failure is only recorded as a flag on that instance.
"""

from __future__ import annotations

import itertools
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, replace
from functools import cached_property
from typing import Callable, Iterable, Iterator, Optional

from . import sweeps
from .core import IntersectionPair
from .cycles import (all_x_cycles, find_great_webs, find_s_sets, isolated_vertices,
                     scharlemann_consistency, trees_or_cycles, web_number_check)
from .enumeration import EnumerationSpec, enumerate_pairs
from .orientation import (SWITCH, OrientationError, build_rf, classify_edges,
                          directed_index_census, find_representing_faces, index_witness,
                          induce_orientation, is_disk_region, is_representative,
                          boundary_index, reverse_faces)
from .randomgraphs import random_directed_graph, random_oriented_graph, random_subview
from .signs import IN, OUT, PLUS
from .stars import Star
from .sweeps import Tally

U, T = "U", "T"
PROFILES = ("smoke", "desk", "full")
MAX_REV_FACES = 10
DEFAULT_SEED = 0


class HarnessError(ValueError):
    def __init__(self, code: str, message: str):
        super().__init__(f"{code}: {message}")
        self.code = code


# --------------------------------------------------------------------------
# corpora
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class CorpusConfig:
    fixtures: bool = True
    enumerate: tuple = ()              # (p, q) pairs to enumerate exhaustively
    iso_reduction: bool = True
    stars_per_pair: int = 2
    random_graphs: int = 100
    random_n: int = 12
    containment_labels: int = 4
    containment_depth: int = 3
    containment_reduce: bool = True
    coherence_labels: int = 5
    corner_switches: int = 4
    face_corners: int = 3
    two_color_edges: int = 5
    budget: Optional[int] = None

    def to_json(self) -> dict:
        out = asdict(self)
        out["enumerate"] = [list(x) for x in self.enumerate]
        return out


PROFILE_CONFIGS = {
    "smoke": CorpusConfig(),
    "desk": CorpusConfig(enumerate=((2, 2), (2, 4), (4, 2), (4, 4)), random_graphs=1000,
                         containment_labels=6, coherence_labels=8, corner_switches=6,
                         face_corners=4, two_color_edges=8),
    "full": CorpusConfig(enumerate=((2, 2), (2, 4), (4, 2), (4, 4)), stars_per_pair=6,
                         random_graphs=5000, containment_labels=6, containment_reduce=False,
                         coherence_labels=8, corner_switches=6, face_corners=4,
                         two_color_edges=8),
}


@dataclass
class Corpus:
    config: CorpusConfig = field(default_factory=CorpusConfig)
    explicit: Optional[list] = None      # [(name, pair)] overrides fixtures and enumeration

    def pairs(self) -> Iterator[tuple[str, IntersectionPair]]:
        if self.explicit is not None:
            yield from self.explicit
            return
        if self.config.fixtures:
            from .fixtures import figure_pairs
            yield from figure_pairs()
        for p, q in self.config.enumerate:
            spec = EnumerationSpec(p, q, iso_reduction=self.config.iso_reduction,
                                   budget=self.config.budget)
            for i, pair in enumerate(enumerate_pairs(spec)):
                yield f"enum-{p}-{q}-{i}", pair

    def describe(self) -> dict:
        out = {"config": self.config.to_json()}
        if self.explicit is not None:
            out["pairs"] = [name for name, _ in self.explicit]
        return out


def star_family(pair: IntersectionPair, k: int, seed: int) -> list[Star]:
    """Deterministic sign + stars on every label of G_P, with seeded orientations."""
    q = pair.q
    par = {l: pair.parity("P", l) for l in range(1, q + 1)}
    labels = list(range(1, q + 1))
    total = 2 ** q
    if k >= total:
        omegas = list(itertools.product((IN, OUT), repeat=q))
    else:
        rng = random.Random(f"{seed}:{pair.signs_p}:{pair.signs_q}:{pair.matching}")
        picks = rng.sample(range(total), k)
        omegas = [tuple(OUT if (m >> i) & 1 else IN for i in range(q)) for m in picks]
    return [Star.make(PLUS, par, labels, list(om)) for om in omegas]


class PairContext:
    """Lazily computed data shared by the per-pair checkers."""

    def __init__(self, name: str, pair: IntersectionPair, config: CorpusConfig, seed: int):
        self.name, self.pair, self.config, self.seed = name, pair, config, seed

    @cached_property
    def qview(self):
        return self.pair.view("Q")

    @cached_property
    def x_cycles(self):
        return all_x_cycles(self.qview)

    @cached_property
    def scharlemann(self):
        return [c for c in self.x_cycles if c.scharlemann]

    @cached_property
    def s_sets(self):
        return find_s_sets(self.qview)

    @cached_property
    def innermost(self):
        return [s for s in self.s_sets if s.innermost]

    @cached_property
    def oriented(self):
        return [induce_orientation(self.pair, T)
                for T in star_family(self.pair, self.config.stars_per_pair, self.seed)]

    def payload(self, **extra) -> dict:
        out = {"instance": self.name, "fixture": self.pair.to_json()}
        out.update(extra)
        return out


# --------------------------------------------------------------------------
# class U checkers
# --------------------------------------------------------------------------

def check_euler_index(config: CorpusConfig, seed: int) -> Tally:
    tally = Tally()
    for i in range(config.random_graphs):
        dm = random_directed_graph(seed + i, config.random_n)
        census = directed_index_census(dm)
        tally.record(census.total == 2, {"seed": seed + i, "n": config.random_n,
                                         "census": census.to_json()})
    return tally


def check_index_witness(config: CorpusConfig, seed: int) -> Tally:
    tally = Tally()
    for i in range(config.random_graphs):
        s = seed + i
        G = random_oriented_graph(s, config.random_n)
        for F in random_subview(G, s).faces:
            if not is_disk_region(F):
                continue
            try:
                ind = boundary_index(G, F)
            except OrientationError:
                tally.skipped += 1
                continue
            if ind > 0:
                continue
            tally.record(index_witness(G, F) is not None,
                         {"seed": s, "n": config.random_n, "face": F.id, "index": ind})
    return tally


def check_gl_2_1_2(config: CorpusConfig, seed: int) -> Tally:
    return sweeps.containment_sweep(config.containment_labels, config.containment_depth,
                                    config.containment_reduce)


def check_gl_2_6_1(config: CorpusConfig, seed: int) -> Tally:
    return sweeps.split_sweep(config.corner_switches)[0]


def check_gl_2_6_2(config: CorpusConfig, seed: int) -> Tally:
    return sweeps.split_sweep(config.corner_switches)[1]


def check_gl_2_7_1(config: CorpusConfig, seed: int) -> Tally:
    return sweeps.good_face_sweep(config.face_corners, config.corner_switches)


def check_coherence(config: CorpusConfig, seed: int) -> Tally:
    return sweeps.coherence_sweep(config.coherence_labels)


def check_two_color(config: CorpusConfig, seed: int) -> Tally:
    return sweeps.two_color_sweep(config.two_color_edges)


def rev_invariance(G) -> Optional[list[int]]:
    """A face subset whose reversal changes representativity, or None."""
    r = is_representative(G)
    ids = [f.id for f in G.view.faces]
    if len(ids) > MAX_REV_FACES:
        subsets = itertools.chain.from_iterable(itertools.combinations(ids, k) for k in (0, 1, 2))
    else:
        subsets = itertools.chain.from_iterable(
            itertools.combinations(ids, k) for k in range(len(ids) + 1))
    for S in subsets:
        if is_representative(reverse_faces(G, S)) != r:
            return list(S)
    return None


def check_rev(ctx: PairContext, tally: Tally) -> None:
    for G in ctx.oriented:
        bad = rev_invariance(G)
        tally.record(bad is None, ctx.payload(star=G.source_star.to_json(), faces=bad))


def check_rf(ctx: PairContext, tally: Tally) -> None:
    for G in ctx.oriented:
        try:
            rf = build_rf(G)
        except OrientationError:
            tally.skipped += 1       # the switch subgraph has an odd vertex
            continue
        except AssertionError:
            tally.record(False, ctx.payload(star=G.source_star.to_json()))
            continue
        left = [e for e, k in classify_edges(rf.base).items() if k == SWITCH]
        tally.record(not left, ctx.payload(star=G.source_star.to_json(), switch_edges=left))


def component_dichotomy(comp, roots=(1, 2)) -> bool:
    """A component where every non-root vertex has an out-arc holds a cycle or drains to roots."""
    out = {}
    for e, t, h in comp.edges:
        out.setdefault(t, []).append(h)
    if any(v not in out for v in comp.vertices if v not in roots):
        return True              # hypothesis fails
    if comp.kind == "cycle":
        return True
    reach = set(roots)
    changed = True
    while changed:
        changed = False
        for v, hs in out.items():
            if v not in reach and any(h in reach for h in hs):
                reach.add(v)
                changed = True
    return set(comp.vertices) <= reach


def _outside_neighbours(ctx: PairContext, V: frozenset) -> set:
    W = set()
    for a, b in ctx.pair.edges("Q"):
        if a[0] in V and b[0] not in V:
            W.add(b[0])
        if b[0] in V and a[0] not in V:
            W.add(a[0])
    return W


def check_tree_dichotomy(ctx: PairContext, tally: Tally) -> None:
    for s in ctx.innermost:
        W = _outside_neighbours(ctx, s.vertices)
        for comp in trees_or_cycles(ctx.pair, s.vertices, W):
            tally.record(component_dichotomy(comp),
                         ctx.payload(V=sorted(s.vertices), component=comp.to_json()))


# --------------------------------------------------------------------------
# class T checkers (a failed record is a flag)
# --------------------------------------------------------------------------

def check_sch_unique(ctx: PairContext, tally: Tally) -> None:
    res = scharlemann_consistency(ctx.qview)
    tally.record(res["status"] == "CONSISTENT", ctx.payload(flags=res["flags"]))


def check_no_isolated(ctx: PairContext, tally: Tally) -> None:
    iso = isolated_vertices(ctx.qview)
    tally.record(not iso, ctx.payload(isolated=iso))


def check_no_new_great(ctx: PairContext, tally: Tally) -> None:
    if ctx.pair.p <= 2:
        tally.skipped += 1
        return
    bad = [c for c in ctx.x_cycles if c.great and c.new]
    tally.record(not bad, ctx.payload(cycles=[c.to_json() for c in bad]))


def _sdisk_flags(ctx: PairContext, code: str, tally: Tally) -> None:
    for s in ctx.innermost:
        flags = [f.to_json() for f in s.flags if f.code == code]
        tally.record(not flags, ctx.payload(s_set=sorted(s.vertices), flags=flags))


def check_sdisk_props(ctx: PairContext, tally: Tally) -> None:
    _sdisk_flags(ctx, "SDISK_PROPS", tally)


def check_edges_in_sdisks(ctx: PairContext, tally: Tally) -> None:
    _sdisk_flags(ctx, "EDGES_IN_SDISKS", tally)


def check_web_divisibility(ctx: PairContext, tally: Tally) -> None:
    if not ctx.scharlemann:
        tally.skipped += 1
        return
    n = ctx.scharlemann[0].order
    if n < 2:
        # a one-vertex Scharlemann cycle is a loop, which a surgery never produces
        tally.record(False, ctx.payload(order=n))
        return
    for web in find_great_webs(ctx.qview, ctx.pair.p - 2):
        v = len(web.vertices)
        res = web_number_check(n, v)
        tally.record(res["divides"] and res["proper"],
                     ctx.payload(web=sorted(web.vertices), order=n, check=res))


def check_hoffman(ctx: PairContext, tally: Tally) -> None:
    for G in ctx.oriented:
        _, stats = find_representing_faces(G)
        tally.record(not stats.flags, ctx.payload(star=G.source_star.to_json(),
                                                  stats=stats.to_json()))


def delta_overlap(pair: IntersectionPair, cycle) -> list[int]:
    """Labels shared by negative and positive corners of an empty face of G_P(E)."""
    E = set(cycle.edges)
    pview = pair.view("P", E)
    touched = {s[0] for e in E for s in pair.edges("P")[e]}
    shared = set()
    for F in pview.faces:
        if not is_disk_region(F) or F.inner_vertices & touched:
            continue
        minus, plus = set(), set()
        for c in F.corners:
            if c.closed:
                continue
            (plus if pair.sign("P", c.vertex) == PLUS else minus).update(c.interior)
        shared |= minus & plus
    return sorted(shared)


def check_delta_disjoint(ctx: PairContext, tally: Tally) -> None:
    for cyc in ctx.scharlemann:
        shared = delta_overlap(ctx.pair, cyc)
        tally.record(not shared, ctx.payload(cycle=cyc.to_json(), shared=shared))


def _hoffman_hypotheses(ctx: PairContext, G) -> bool:
    S = G.source_star
    if S.trivial or is_representative(G):
        return False
    A, C = set(S.A), set(S.C)
    return not any(c.new and (set(c.vertices) <= A or set(c.vertices) <= C) for c in ctx.x_cycles)


def check_no_ah_circuits(ctx: PairContext, tally: Tally) -> None:
    for G in ctx.oriented:
        if not _hoffman_hypotheses(ctx, G):
            tally.skipped += 1
            continue
        try:
            rf = build_rf(G)
        except (OrientationError, AssertionError):
            tally.skipped += 1
            continue
        cyc = {k: [list(a) for a in v] for k, v in rf.cycles.items() if v}
        tally.record(not cyc, ctx.payload(star=G.source_star.to_json(), cycles=cyc))


def check_trivial_type_trees(ctx: PairContext, tally: Tally) -> None:
    p = ctx.pair.p
    regular = set(range(3, p + 1))
    for s in ctx.innermost:
        V = sorted(s.vertices)
        par = {l: ctx.pair.parity("P", l) for l in range(1, ctx.pair.q + 1)}
        triv = Star.make(PLUS, par, V, [OUT] * len(V))
        if is_representative(induce_orientation(ctx.pair, triv)):
            tally.skipped += 1
            continue
        problems = []
        if set(s.leave_labels) != regular:
            problems.append("leave_labels")
        if s.leaving_edges != p - 2:
            problems.append("leaving_edges")
        if not any(set(c.vertices) <= s.vertices for c in ctx.scharlemann):
            problems.append("scharlemann")
        comps = trees_or_cycles(ctx.pair, s.vertices, _outside_neighbours(ctx, s.vertices))
        roots = {c.tree.root for c in comps if c.kind == "tree"}
        if any(c.kind != "tree" for c in comps) or roots != {1, 2}:
            problems.append("trees")
        tally.record(not problems, ctx.payload(V=V, problems=problems))


# --------------------------------------------------------------------------
# registry
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Lemma:
    id: str
    cls: str
    kind: str            # "sweep" (own corpus) or "pair" (runs on the pair corpus)
    summary: str
    checker: Callable


def _L(id, cls, kind, summary, checker):
    return id, Lemma(id, cls, kind, summary, checker)


REGISTRY: dict[str, Lemma] = dict([
    _L("EULER_INDEX", U, "sweep", "vertex and face indices of a directed sphere graph sum to 2",
       check_euler_index),
    _L("GL_2_1_2", U, "sweep", "C(DT) within C(D0T) and Ã(DT) containing Ã(D0T)", check_gl_2_1_2),
    _L("GL_2_6_1", U, "sweep", "splitting a corner at a switch: good iff both/either halves good",
       check_gl_2_6_1),
    _L("GL_2_6_2", U, "sweep", "A-switches of character −η_a with a C-switch of character η_c give a good corner",
       check_gl_2_6_2),
    _L("GL_2_7_1", U, "sweep", "a face whose corners are all good has index at most 0", check_gl_2_7_1),
    _L("INDEX_WITNESS", U, "sweep", "a face of index at most 0 holds a switch edge, sink/source face or uniform vertex",
       check_index_witness),
    _L("TWO_COLOR", U, "sweep", "even-degree plane graphs are face two-colorable", check_two_color),
    _L("COHERENCE_SEQ", U, "sweep", "sequence of coherence postconditions", check_coherence),
    _L("REV_REPRESENTATIVE", U, "pair", "reversing faces preserves representativity", check_rev),
    _L("RF_NO_SWITCH", U, "pair", "reversing black faces removes every switch edge", check_rf),
    _L("TREE_DICHOTOMY", U, "pair", "[V,W] components drain to a root or contain a directed cycle",
       check_tree_dichotomy),
    _L("SCH_UNIQUE", T, "pair", "all Scharlemann cycles share labels and order", check_sch_unique),
    _L("NO_ISOLATED", T, "pair", "G_Q has no isolated vertex", check_no_isolated),
    _L("NO_NEW_GREAT_XCYCLE", T, "pair", "G_Q has no new great x-cycle when p > 2", check_no_new_great),
    _L("SDISK_PROPS", T, "pair", "innermost (s)-set structure", check_sdisk_props),
    _L("EDGES_IN_SDISKS", T, "pair", "regular labels meet |V|-1 internal edges", check_edges_in_sdisks),
    _L("WEB_DIVISIBILITY", T, "pair", "Scharlemann order properly divides great web size",
       check_web_divisibility),
    _L("HOFFMAN_CONDITIONS", T, "pair", "nonrepresentative graphs satisfy the Hoffman conclusions",
       check_hoffman),
    _L("DELTA_DISJOINT_LABELS", T, "pair", "empty faces of a Scharlemann cycle have disjoint corner labels",
       check_delta_disjoint),
    _L("NO_AH_CIRCUITS", T, "pair", "the RF graph has no directed switch-label circuit",
       check_no_ah_circuits),
    _L("TRIVIAL_TYPE_TREES", T, "pair", "innermost sets not representing the trivial type carry two trees",
       check_trivial_type_trees),
])


def lemma(lemma_id: str) -> Lemma:
    try:
        return REGISTRY[lemma_id]
    except KeyError:
        raise HarnessError("UNKNOWN_LEMMA", f"no lemma registered as {lemma_id!r}") from None


# --------------------------------------------------------------------------
# reports
# --------------------------------------------------------------------------

@dataclass
class LemmaResult:
    id: str
    cls: str
    tally: Tally
    errors: int = 0
    seconds: float = 0.0

    @property
    def passed(self) -> int:
        return self.tally.checked - self.tally.failed

    @property
    def fatal(self) -> bool:
        return self.errors > 0 or (self.cls == U and self.tally.failed > 0)

    def to_json(self) -> dict:
        failed = self.tally.failed
        return {"id": self.id, "class": self.cls, "pass": self.passed,
                "flagged": failed if self.cls == T else 0,
                "fail": failed if self.cls == U else 0,
                "skipped": self.tally.skipped, "errors": self.errors,
                "witnesses": self.tally.witnesses}


@dataclass
class VerificationReport:
    profile: Optional[str]
    seed: int
    corpus: dict
    lemmas: list[LemmaResult]
    instances: int = 0
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not any(r.fatal for r in self.lemmas)

    @property
    def exit_code(self) -> int:
        return 0 if self.ok else 1

    def result(self, lemma_id: str) -> LemmaResult:
        return next(r for r in self.lemmas if r.id == lemma_id)

    def to_json(self, runtime: bool = True) -> dict:
        out = {"profile": self.profile, "seed": self.seed, "corpus": self.corpus,
               "instances": self.instances, "ok": self.ok,
               "lemmas": [r.to_json() for r in self.lemmas]}
        if runtime:
            out["runtime"] = {"total_seconds": round(self.seconds, 3),
                              "per_lemma": {r.id: round(r.seconds, 3) for r in self.lemmas}}
        return out

    def render_text(self) -> str:
        head = f"profile {self.profile or '-'}  seed {self.seed}  pair instances {self.instances}"
        lines = [head]
        for r in self.lemmas:
            t = r.tally
            bad = f"flagged {t.failed}" if r.cls == T else f"fail {t.failed}"
            err = f"  errors {r.errors}" if r.errors else ""
            lines.append(f"{r.cls} {r.id:<22} pass {r.passed:<8} {bad:<12} skipped {t.skipped}{err}"
                         f"  ({r.seconds:.1f}s)")
        lines.append("result: " + ("OK" if self.ok else "FAILED (class-U failure or checker error)"))
        return "\n".join(lines)


def _run_pair_chunk(args) -> tuple[dict, dict, dict, int]:
    ids, chunk, config, seed = args
    tallies = {i: Tally() for i in ids}
    errors = {i: 0 for i in ids}
    secs = {i: 0.0 for i in ids}
    for name, pair in chunk:
        ctx = PairContext(name, pair, config, seed)
        for i in ids:
            t0 = time.perf_counter()
            try:
                REGISTRY[i].checker(ctx, tallies[i])
            except Exception as exc:       # a crashing checker is reported, never fatal to the run
                errors[i] += 1
                if len(tallies[i].witnesses) < sweeps.WITNESS_LIMIT:
                    tallies[i].witnesses.append(ctx.payload(error=f"{type(exc).__name__}: {exc}"))
            secs[i] += time.perf_counter() - t0
    return tallies, errors, secs, len(chunk)


def _chunks(items: Iterable, size: int) -> Iterator[list]:
    buf = []
    for x in items:
        buf.append(x)
        if len(buf) == size:
            yield buf
            buf = []
    if buf:
        yield buf


def run_lemmas(ids: Iterable[str], corpus: Corpus, seed: int = DEFAULT_SEED,
               profile: Optional[str] = None, workers: int = 1) -> VerificationReport:
    """Run the given lemmas; pair lemmas share one pass over the pair corpus.

    With ``workers > 1`` pair chunks are checked in worker processes; results
    are merged in corpus order, so the report does not depend on scheduling.
    """
    t_start = time.perf_counter()
    ids = [lemma(i).id for i in ids]
    results = {}
    for i in ids:
        L = REGISTRY[i]
        if L.kind != "sweep":
            continue
        t0 = time.perf_counter()
        errors = 0
        try:
            tally = L.checker(corpus.config, seed)
        except Exception as exc:
            tally, errors = Tally(), 1
            tally.witnesses.append({"error": f"{type(exc).__name__}: {exc}"})
        results[i] = LemmaResult(i, L.cls, tally, errors, time.perf_counter() - t0)
    pair_ids = [i for i in ids if REGISTRY[i].kind == "pair"]
    n_inst = 0
    if pair_ids:
        tallies = {i: Tally() for i in pair_ids}
        errors = {i: 0 for i in pair_ids}
        secs = {i: 0.0 for i in pair_ids}
        jobs = ((pair_ids, chunk, corpus.config, seed) for chunk in _chunks(corpus.pairs(), 64))
        if workers > 1:
            with ProcessPoolExecutor(workers) as pool:
                parts = list(pool.map(_run_pair_chunk, jobs))
        else:
            parts = map(_run_pair_chunk, jobs)
        for tl, er, sc, n in parts:
            n_inst += n
            for i in pair_ids:
                tallies[i].merge(tl[i])
                errors[i] += er[i]
                secs[i] += sc[i]
        for i in pair_ids:
            results[i] = LemmaResult(i, REGISTRY[i].cls, tallies[i], errors[i], secs[i])
    return VerificationReport(profile, seed, corpus.describe(), [results[i] for i in ids],
                              n_inst, time.perf_counter() - t_start)


def verify_lemma(lemma_id: str, corpus: Optional[Corpus] = None, seed: int = DEFAULT_SEED,
                 workers: int = 1) -> VerificationReport:
    lemma(lemma_id)
    return run_lemmas([lemma_id], corpus or Corpus(), seed, None, workers)


def run_suite(profile: str, seed: int = DEFAULT_SEED, workers: int = 1,
              enumerate_pq: Optional[tuple] = None) -> VerificationReport:
    if profile not in PROFILE_CONFIGS:
        raise HarnessError("UNKNOWN_PROFILE", f"profile must be one of {', '.join(PROFILES)}")
    config = PROFILE_CONFIGS[profile]
    if enumerate_pq is not None:
        config = replace(config, enumerate=(tuple(enumerate_pq),))
    return run_lemmas(list(REGISTRY), Corpus(config), seed, profile, workers)
