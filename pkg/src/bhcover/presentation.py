"""
Surface signatures, words in the standard generators of the punctured
surface group, and substitution automorphisms acting on those words.

Letters are tokens such as ``"a1"``, ``"b2"``, ``"c3"``; an uppercase first
character denotes the inverse (``"C3"`` is c3^-1).  A word is a tuple of
tokens.  The surface relation is

    [a1, b1] ... [ag, bg] c1 ... ck = 1,   [x, y] = x y x^-1 y^-1.
"""
from __future__ import annotations

import re
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field

Word = tuple[str, ...]

_TOKEN = re.compile(r"([abcABC])(\d+)")


class WordError(ValueError):
    pass


@dataclass(frozen=True)
class Signature:
    genus: int
    branch_count: int

    def __post_init__(self):
        if self.genus < 0 or self.branch_count < 0:
            raise ValueError(f"negative signature entry: {self}")

    @property
    def generators(self) -> tuple[str, ...]:
        gens = []
        for i in range(1, self.genus + 1):
            gens += [f"a{i}", f"b{i}"]
        gens += [f"c{i}" for i in range(1, self.branch_count + 1)]
        return tuple(gens)

    @property
    def euler_characteristic(self) -> int:
        """Euler characteristic of the closed base surface (marked points ignored)."""
        return 2 - 2 * self.genus

    @property
    def punctured_euler_characteristic(self) -> int:
        return 2 - 2 * self.genus - self.branch_count


def invert_letter(x: str) -> str:
    return x[0].swapcase() + x[1:]


def base_letter(x: str) -> str:
    return x[0].lower() + x[1:]


def is_inverse_letter(x: str) -> bool:
    return x[0].isupper()


def parse_word(text: str) -> Word:
    """
    Parse ``"a1B1c3"`` (whitespace and ``*`` ignored); ``""`` or ``"1"`` is the empty word.

    >>> parse_word("c1 c2 C1")
    ('c1', 'c2', 'C1')
    """
    s = re.sub(r"[\s*]", "", text)
    if s in ("", "1"):
        return ()
    tokens = []
    pos = 0
    for m in _TOKEN.finditer(s):
        if m.start() != pos:
            break
        tokens.append(m.group(0))
        pos = m.end()
    if pos != len(s):
        raise WordError(f"cannot parse word {text!r} at offset {pos}")
    return tuple(tokens)


def format_word(w: Sequence[str]) -> str:
    return "".join(w) if w else "1"


def reduce_word(w: Iterable[str]) -> Word:
    """
    Free reduction.

    >>> reduce_word(("c1", "c2", "C2", "C1", "c3"))
    ('c3',)
    """
    out: list[str] = []
    for x in w:
        if out and out[-1] == invert_letter(x):
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def invert_word(w: Sequence[str]) -> Word:
    return tuple(invert_letter(x) for x in reversed(w))


def cyclically_reduce(w: Sequence[str]) -> Word:
    w = reduce_word(w)
    i, j = 0, len(w)
    while j - i >= 2 and w[i] == invert_letter(w[j - 1]):
        i += 1
        j -= 1
    return w[i:j]


def is_cyclic_rotation(u: Sequence[str], v: Sequence[str]) -> bool:
    if len(u) != len(v):
        return False
    if not u:
        return True
    doubled = tuple(v) + tuple(v)
    u = tuple(u)
    return any(doubled[i:i + len(u)] == u for i in range(len(v)))


def commutator(x: Sequence[str], y: Sequence[str]) -> Word:
    return reduce_word(tuple(x) + tuple(y) + invert_word(x) + invert_word(y))


def relator(sig: Signature) -> Word:
    """
    The surface relation word.

    >>> relator(Signature(1, 2))
    ('a1', 'b1', 'A1', 'B1', 'c1', 'c2')
    """
    w: list[str] = []
    for i in range(1, sig.genus + 1):
        w += [f"a{i}", f"b{i}", f"A{i}", f"B{i}"]
    w += [f"c{i}" for i in range(1, sig.branch_count + 1)]
    return tuple(w)


def word_letters_ok(w: Sequence[str], sig: Signature) -> bool:
    gens = set(sig.generators)
    return all(base_letter(x) in gens for x in w)


@dataclass(frozen=True, eq=False)
class Automorphism:
    """
    Substitution rule generator -> word.  Generators missing from
    ``images`` are fixed.
    """

    label: str
    images: Mapping[str, Word] = field(default_factory=dict)

    def image(self, gen: str) -> Word:
        return self.images.get(gen, (gen,))

    def generators(self) -> set[str]:
        return set(self.images)

    def __eq__(self, other):
        if not isinstance(other, Automorphism):
            return NotImplemented
        keys = set(self.images) | set(other.images)
        return all(self.image(k) == other.image(k) for k in keys)

    def __hash__(self):
        return hash(tuple(sorted((k, v) for k, v in self.images.items() if v != (k,))))


def identity_automorphism(label: str = "id") -> Automorphism:
    return Automorphism(label, {})


def apply_automorphism(f: Automorphism, w: Sequence[str], sig: Signature | None = None) -> Word:
    """
    Substitute every letter of ``w`` and freely reduce.

    >>> s1 = braid_generators(Signature(0, 3))[0]
    >>> format_word(apply_automorphism(s1, ("c1",)))
    'c1c2C1'
    """
    if sig is not None:
        if not word_letters_ok(w, sig):
            raise WordError(f"word {format_word(w)} uses letters outside {sig.generators}")
        extra = set(f.images) - set(sig.generators)
        if extra:
            raise WordError(f"automorphism {f.label} substitutes unknown generators {sorted(extra)}")
    out: list[str] = []
    for x in w:
        img = f.image(base_letter(x))
        out.extend(invert_word(img) if is_inverse_letter(x) else img)
    return reduce_word(out)


def compose_automorphisms(f: Automorphism, g: Automorphism, label: str | None = None) -> Automorphism:
    """
    The substitution x -> f(g(x)).

    Acting on covers on the right, ``act(act(rho, f), g) == act(rho, compose_automorphisms(f, g))``.
    """
    keys = set(f.images) | set(g.images)
    images = {k: apply_automorphism(f, g.image(k)) for k in sorted(keys)}
    return Automorphism(label or f"{f.label}.{g.label}", images)


def acts_as_identity(f: Automorphism, sig: Signature) -> bool:
    return all(apply_automorphism(f, (x,)) == (x,) for x in sig.generators)


def are_inverse(f: Automorphism, g: Automorphism, sig: Signature) -> bool:
    return (acts_as_identity(compose_automorphisms(f, g), sig)
            and acts_as_identity(compose_automorphisms(g, f), sig))


def relator_preserved(f: Automorphism, sig: Signature) -> bool:
    """
    True iff f sends the surface relation to a conjugate of a cyclic rotation
    of itself (compared after cyclic reduction).
    """
    try:
        image = apply_automorphism(f, relator(sig), sig)
    except WordError:
        return False
    return is_cyclic_rotation(cyclically_reduce(image), cyclically_reduce(relator(sig)))


def half_twist(k: int, i: int, inverse: bool = False) -> Automorphism:
    """
    The braid generator sigma_i on the k-punctured sphere:
    c_i -> c_i c_{i+1} c_i^-1, c_{i+1} -> c_i.  The inverse is
    c_i -> c_{i+1}, c_{i+1} -> c_{i+1}^-1 c_i c_{i+1}.
    """
    if not 1 <= i < k:
        raise ValueError(f"sigma_{i} undefined for {k} branch points")
    ci, cj = f"c{i}", f"c{i + 1}"
    if inverse:
        return Automorphism(f"sigma_{i}^-1", {ci: (cj,), cj: (invert_letter(cj), ci, cj)})
    return Automorphism(f"sigma_{i}", {ci: (ci, cj, invert_letter(ci)), cj: (ci,)})


def braid_generators(sig: Signature) -> list[Automorphism]:
    """sigma_1, sigma_1^-1, ..., sigma_{k-1}, sigma_{k-1}^-1 for a genus-0 base."""
    if sig.genus != 0:
        raise ValueError("built-in mapping class generators exist only for genus 0; "
                         "supply an automorphism file for positive genus")
    if sig.branch_count < 2:
        raise ValueError("need at least two branch points for braid generators")
    gens = []
    for i in range(1, sig.branch_count):
        gens.append(half_twist(sig.branch_count, i))
        gens.append(half_twist(sig.branch_count, i, inverse=True))
    return gens


def automorphism_from_strings(label: str, images: Mapping[str, str]) -> Automorphism:
    return Automorphism(label, {g: parse_word(w) for g, w in images.items()})
