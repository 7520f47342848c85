"""Batch verification: relators, kernel membership, corpus, mutation, Betti.

The report is assembled from per-relator rows (with per-factor Dehn trace
lengths), corpus rows, kernel-membership rows, a seeded mutation
experiment and the abelianization summary.  Row order is fixed by the
input order, so the report is deterministic for a fixed seed regardless
of how the relator checks are distributed over workers.
"""

from __future__ import annotations

import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .abelianization import abelianize, relation_matrix
from .ambient import AmbientWord, factor_relators, project, torus_image
from .corpus import ClaimKind, evaluate, identity_corpus
from .dehn import dehn_reduce
from .presentations import Presentation, Variant, build_presentation, embedding_map
from .words import Word, substitute, sym


@dataclass
class RelatorRow:
    provenance: str
    trace_lengths: tuple[int, ...]
    ok: bool


@dataclass
class SimpleRow:
    label: str
    detail: str
    ok: bool


@dataclass
class VerificationReport:
    variant: Variant
    rank: int
    seed: int
    relator_rows: list[RelatorRow] = field(default_factory=list)
    kernel_rows: list[SimpleRow] = field(default_factory=list)
    corpus_rows: list[SimpleRow] = field(default_factory=list)
    typo_rows: list[SimpleRow] = field(default_factory=list)  # reported, not gating
    mutation_caught: int | None = None
    mutation_trials: int = 0
    betti: int | None = None
    torsion: list[int] = field(default_factory=list)
    betti_expected: int | None = None
    abelian_ok: bool = False
    abelian_detail: str = ""
    wall_time: float = 0.0

    def passed(self) -> bool:
        checks = (
            all(r.ok for r in self.relator_rows)
            and all(r.ok for r in self.kernel_rows)
            and all(r.ok for r in self.corpus_rows)
            and self.abelian_ok
        )
        if self.mutation_trials:
            checks = checks and self.mutation_caught >= 0.9 * self.mutation_trials
        return checks

    def failures(self) -> list[str]:
        out = [f"relator {r.provenance}" for r in self.relator_rows if not r.ok]
        out += [f"kernel {r.label}" for r in self.kernel_rows if not r.ok]
        out += [f"corpus {r.label}" for r in self.corpus_rows if not r.ok]
        if not self.abelian_ok:
            out.append(f"abelianization: {self.abelian_detail}")
        if self.mutation_trials and self.mutation_caught < 0.9 * self.mutation_trials:
            out.append(f"mutation: only {self.mutation_caught}/{self.mutation_trials} caught")
        return out

    def render(self, verbose: bool = False) -> str:
        lines = [
            f"verification report: variant {self.variant.value}, rank {self.rank}, seed {self.seed}",
            f"relators: {sum(r.ok for r in self.relator_rows)}/{len(self.relator_rows)} vanish in the product",
        ]
        if verbose:
            for r in self.relator_rows:
                mark = "ok " if r.ok else "FAIL"
                lines.append(f"  [{mark}] {r.provenance} dehn-steps={list(r.trace_lengths)}")
        lines.append(
            f"kernel membership: {sum(r.ok for r in self.kernel_rows)}/{len(self.kernel_rows)} generators")
        lines.append(
            f"corpus: {sum(r.ok for r in self.corpus_rows)}/{len(self.corpus_rows)} claims hold")
        if verbose:
            for r in self.corpus_rows:
                if not r.ok:
                    lines.append(f"  [FAIL] {r.label}")
        if self.typo_rows:
            lines.append("suspected-typo readings (reported, not gating):")
            for r in self.typo_rows:
                lines.append(f"  {r.label}: {'holds' if r.ok else 'fails'}")
        if self.mutation_trials:
            lines.append(
                f"mutation sensitivity: {self.mutation_caught}/{self.mutation_trials} single-letter flips caught")
        lines.append(f"b1 = {self.betti} (expected {self.betti_expected}), torsion {self.torsion}")
        if self.abelian_detail:
            lines.append(f"abelianization: {self.abelian_detail}")
        for f in self.failures():
            lines.append(f"FAIL: {f}")
        lines.append(f"verdict: {'PASS' if self.passed() else 'FAIL'}")
        lines.append(f"wall time: {self.wall_time:.2f}s")
        return "\n".join(lines) + "\n"


def _check_relator_chunk(args):
    rank, items = args
    out = []
    for provenance, letters in items:
        aw = AmbientWord(Word(letters), rank)
        traces = []
        ok = True
        for k, part in enumerate(project(aw), start=1):
            tr = dehn_reduce(part, factor_relators(k))
            traces.append(len(tr.steps))
            if tr.final:
                ok = False
        out.append(RelatorRow(provenance, tuple(traces), ok))
    return out


def check_relators(p: Presentation, jobs: int = 1) -> list[RelatorRow]:
    emb = embedding_map(p.rank, p.variant)
    items = [(rel.provenance, emb.apply(rel.word).letters) for rel in p.relators]
    if jobs <= 1 or len(items) < 2 * jobs:
        return _check_relator_chunk((p.rank, items))
    chunks = [items[n::jobs] for n in range(jobs)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        results = list(pool.map(_check_relator_chunk, [(p.rank, ch) for ch in chunks]))
    # Reassemble in input order: chunk n holds items n, n+jobs, ...
    merged: list[RelatorRow] = [None] * len(items)  # type: ignore[list-item]
    for n, rows in enumerate(results):
        for m, row in enumerate(rows):
            merged[n + m * jobs] = row
    return merged


def mutation_experiment(p: Presentation, trials: int, seed: int) -> tuple[int, int]:
    """Flip one random letter exponent in a random relator; count the
    mutants whose embedding image is no longer the identity."""
    from .ambient import is_identity

    emb = embedding_map(p.rank, p.variant)
    rng = random.Random(seed)
    caught = 0
    for _ in range(trials):
        rel = p.relators[rng.randrange(len(p.relators))]
        pos = rng.randrange(len(rel.word))
        letters = list(rel.word.letters)
        s, e = letters[pos]
        letters[pos] = (s, -e)
        mutant = Word(letters)
        if not is_identity(AmbientWord(emb.apply(mutant), p.rank)):
            caught += 1
    return caught, trials


def _expected_betti(variant: Variant, r: int) -> int:
    if variant is Variant.PRODUCT_FULL:
        return 4 * r
    if variant is Variant.SURFACE_LAST:
        return 4
    return 4 * r - 2


def abelian_summary(p: Presentation):
    rep = abelianize(p, verify=True)
    expected = _expected_betti(p.variant, p.rank)
    ok = rep.rank == expected and not rep.torsion
    detail = ""
    if p.variant is Variant.KERNEL_SIMPLIFIED:
        d_col = list(p.generators).index(sym("d"))
        off_d = [
            row for row in rep.rows
            if any(v and j != d_col for j, v in enumerate(row))
        ]
        d_only = not off_d and rep.invariant_factors == [1]
        ok = ok and d_only
        detail = ("sole nontrivial abelian relation is d = 1" if d_only
                  else f"{len(off_d)} rows constrain generators other than d")
    return rep.rank, rep.torsion, expected, ok, detail


def kernel_membership_rows(p: Presentation) -> list[SimpleRow]:
    emb = embedding_map(p.rank, p.variant)
    rows = []
    for s in p.generators:
        if s.family == "x" and p.variant in (Variant.PRODUCT_FULL, Variant.SURFACE_LAST):
            continue  # torus lifts are not kernel elements in these variants
        image = AmbientWord(emb.images[s], p.rank)
        phi = torus_image(image)
        rows.append(SimpleRow(str(s), f"phi={phi}", phi == (0, 0)))
    return rows


def run_verification(
    r: int,
    variant: Variant,
    jobs: int = 1,
    seed: int = 0,
    mutate: int = 100,
    with_corpus: bool = True,
) -> VerificationReport:
    t0 = time.time()
    p = build_presentation(r, variant)
    report = VerificationReport(variant=variant, rank=r, seed=seed)
    report.relator_rows = check_relators(p, jobs=jobs)
    report.kernel_rows = kernel_membership_rows(p)
    if with_corpus and r >= 3:
        for claim in identity_corpus(r):
            row = SimpleRow(claim.label, claim.kind.value, evaluate(claim))
            (report.typo_rows if claim.report_only else report.corpus_rows).append(row)
    if mutate:
        report.mutation_caught, report.mutation_trials = mutation_experiment(p, mutate, seed)
    report.betti, report.torsion, report.betti_expected, report.abelian_ok, report.abelian_detail = \
        abelian_summary(p)
    report.wall_time = time.time() - t0
    return report


def default_jobs() -> int:
    return os.cpu_count() or 1
