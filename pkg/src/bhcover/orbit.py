"""
Covers up to sheet relabeling and the mapping class group action on them.

The canonical representative of a cover is the relabeling whose concatenated
image arrays (in generator order) are lexicographically least.  The action of
an automorphism f is on the right: ``act(rho, f)`` has images rho(f(x)).
Orbits are explored breadth-first over canonical classes; the word of
automorphism labels leading to each class is recorded as its transversal.
"""
from __future__ import annotations

from collections.abc import Iterator, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import perm as P
from .cover import MonodromyCover, from_images
from .presentation import Automorphism, apply_automorphism, relator_preserved


class OrbitLimitExceeded(RuntimeError):
    def __init__(self, limit: int):
        self.limit = limit
        super().__init__(f"orbit has more than {limit} classes")


class AutomorphismError(ValueError):
    pass


@dataclass(frozen=True)
class CoverClass:
    canonical: MonodromyCover
    witness: P.Perm  # conjugating the input images by witness gives canonical

    @property
    def key(self) -> tuple[P.Perm, ...]:
        return self.canonical.images


@dataclass(frozen=True)
class OrbitTable:
    classes: tuple[CoverClass, ...]
    transversal: tuple[tuple[str, ...], ...]

    def __len__(self):
        return len(self.classes)

    def keys(self) -> list[tuple[P.Perm, ...]]:
        return [c.key for c in self.classes]


def canonical_relabeling(images: Sequence[P.Perm], n: int) -> tuple[tuple[P.Perm, ...], P.Perm]:
    """
    Lexicographically least relabeling of ``images``.

    Returns ``(canonical images, r)`` with canonical image j equal to
    r o images[j] o r^-1.  Labels are handed out in order while reading the
    first image array; the only free choice is which unlabeled sheet receives
    the next source label, and those choices are explored depth first with
    pruning against the best complete candidate found so far.
    """
    if not images or n <= 1:
        return tuple(tuple(p) for p in images), P.identity(n)
    first = images[0]
    best_key: list | None = None
    best_r: P.Perm | None = None
    label = [-1] * n
    sheet = [-1] * n

    def finish():
        nonlocal best_key, best_r
        key = [P.conjugate(p, label) for p in images]
        if best_key is None or key < best_key:
            best_key = key
            best_r = tuple(label)

    def search(pos: int, next_label: int, better: bool):
        # better: the current prefix is already strictly below best_key's prefix
        if pos == n:
            finish()
            return
        if sheet[pos] != -1:
            candidates = [sheet[pos]]
        else:
            candidates = [s for s in range(n) if label[s] == -1]
        for s in candidates:
            fresh_source = sheet[pos] == -1
            if fresh_source:
                label[s] = pos
                sheet[pos] = s
                nl = next_label + 1
            else:
                nl = next_label
            t = first[s]
            fresh_target = label[t] == -1
            if fresh_target:
                label[t] = nl
                sheet[nl] = t
                value = nl
                nl2 = nl + 1
            else:
                value = label[t]
                nl2 = nl
            prune = False
            now_better = better
            if best_key is not None and not better:
                ref = best_key[0][pos]
                if value > ref:
                    prune = True
                elif value < ref:
                    now_better = True
            if not prune:
                search(pos + 1, nl2, now_better)
            if fresh_target:
                label[t] = -1
                sheet[nl] = -1
            if fresh_source:
                label[s] = -1
                sheet[pos] = -1

    search(0, 0, False)
    return tuple(best_key), best_r


def canonicalize(cover: MonodromyCover) -> CoverClass:
    key, r = canonical_relabeling(cover.images, cover.degree)
    canonical = MonodromyCover(cover.sig, cover.degree, key)
    return CoverClass(canonical, r)


def act(cover: MonodromyCover, f: Automorphism, check: bool = True) -> MonodromyCover:
    """The cover rho o f: generator x is sent to rho(f(x))."""
    if check and not relator_preserved(f, cover.sig):
        raise AutomorphismError(f"automorphism {f.label} does not preserve the surface relation")
    images = [cover.evaluate(apply_automorphism(f, (g,))) for g in cover.sig.generators]
    if not check:
        return MonodromyCover(cover.sig, cover.degree, tuple(images))
    return from_images(cover.sig, images)


def act_word(cover: MonodromyCover, word: Sequence[Automorphism]) -> MonodromyCover:
    for f in word:
        cover = act(cover, f)
    return cover


def in_liftable_subgroup(cover: MonodromyCover, f: Automorphism) -> bool:
    """True iff f fixes the relabeling class of the cover."""
    return canonicalize(act(cover, f)).key == canonicalize(cover).key


def _expand(args) -> list[tuple[tuple[P.Perm, ...], P.Perm]]:
    cover, gens = args
    return [canonical_relabeling(act(cover, f, check=False).images, cover.degree) for f in gens]


def iter_orbit(base: MonodromyCover, gens: Sequence[Automorphism], limit: int = 100_000,
               workers: int = 1) -> Iterator[tuple[CoverClass, tuple[str, ...]]]:
    """
    Yield (class, transversal word) in breadth-first order.

    The order depends only on the generator order, never on ``workers``:
    a frontier is expanded (possibly in parallel) and then merged in the
    sequential order.
    """
    for f in gens:
        if not relator_preserved(f, base.sig):
            raise AutomorphismError(f"automorphism {f.label} does not preserve the surface relation")
    start = canonicalize(base)
    seen = {start.key: ()}
    yield start, ()
    frontier = [start.canonical]
    pool = ProcessPoolExecutor(max_workers=workers) if workers > 1 and gens else None
    try:
        while frontier:
            if pool is not None:
                chunk = max(1, len(frontier) // (4 * workers))
                results = list(pool.map(_expand, [(c, gens) for c in frontier], chunksize=chunk))
            else:
                results = [_expand((c, gens)) for c in frontier]
            nxt = []
            for src, found in zip(frontier, results):
                word = seen[src.images]
                for f, (key, witness) in zip(gens, found):
                    if key in seen:
                        continue
                    seen[key] = word + (f.label,)
                    if len(seen) > limit:
                        raise OrbitLimitExceeded(limit)
                    canonical = MonodromyCover(base.sig, base.degree, key)
                    # validates the class representative once per class
                    from_images(base.sig, key)
                    yield CoverClass(canonical, witness), seen[key]
                    nxt.append(canonical)
            frontier = nxt
    finally:
        if pool is not None:
            pool.shutdown()


def mcg_orbit(base: MonodromyCover, gens: Sequence[Automorphism], limit: int = 100_000,
              workers: int = 1) -> OrbitTable:
    classes, words = [], []
    for cls, word in iter_orbit(base, gens, limit, workers):
        classes.append(cls)
        words.append(word)
    return OrbitTable(tuple(classes), tuple(words))


def automorphisms_by_label(gens: Sequence[Automorphism]) -> dict[str, Automorphism]:
    return {f.label: f for f in gens}


def follow_transversal(base: MonodromyCover, word: Sequence[str],
                       gens: Sequence[Automorphism]) -> MonodromyCover:
    table = automorphisms_by_label(gens)
    return act_word(base, [table[label] for label in word])
