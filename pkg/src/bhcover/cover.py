"""
Branched covers of surfaces encoded by monodromy.

A cover of degree n over a genus-g surface with k branch points is a choice
of permutations for the generators a1, b1, ..., ag, bg, c1, ..., ck such that
the surface relation evaluates to the identity, the images act transitively
(the total space is connected) and every c_i moves some sheet (each x_i is a
genuine branch point).  Words are evaluated as homomorphisms:
rho(x y) = rho(x) o rho(y).
"""
from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from functools import cached_property

from . import perm as P
from .presentation import Signature, base_letter, is_inverse_letter, relator


@dataclass(frozen=True)
class Violation:
    kind: str  # RelationViolated | NotTransitive | TrivialBranchPoint | DegreeMismatch | NotAPermutation
    detail: str
    field: str | None = None

    def __str__(self):
        where = f"{self.field}: " if self.field else ""
        return f"{self.kind}: {where}{self.detail}"


class InvalidCover(ValueError):
    """Raised by validate(); ``violations`` lists every broken invariant."""

    def __init__(self, violations: Sequence[Violation]):
        self.violations = tuple(violations)
        super().__init__("; ".join(str(v) for v in self.violations))

    @property
    def kinds(self) -> set[str]:
        return {v.kind for v in self.violations}


@dataclass(frozen=True)
class FiberData:
    branch_index: int
    cycles: P.CycleSet
    ramification_numbers: tuple[int, ...]

    @property
    def preimage_count(self) -> int:
        return len(self.cycles)


@dataclass(frozen=True)
class MonodromyCover:
    """
    Validated monodromy data.  ``images`` follows ``sig.generators`` order.
    Build instances through :func:`validate`.
    """

    sig: Signature
    degree: int
    images: tuple[P.Perm, ...]

    @property
    def genus(self) -> int:
        return self.sig.genus

    @property
    def branch_count(self) -> int:
        return self.sig.branch_count

    @property
    def a(self) -> tuple[P.Perm, ...]:
        return tuple(self.images[2 * i] for i in range(self.sig.genus))

    @property
    def b(self) -> tuple[P.Perm, ...]:
        return tuple(self.images[2 * i + 1] for i in range(self.sig.genus))

    @property
    def c(self) -> tuple[P.Perm, ...]:
        return self.images[2 * self.sig.genus:]

    @cached_property
    def image_map(self) -> dict[str, P.Perm]:
        m = dict(zip(self.sig.generators, self.images))
        for g, p in list(m.items()):
            m[g[0].upper() + g[1:]] = P.inverse(p)
        return m

    def image(self, letter: str) -> P.Perm:
        return self.image_map[letter]

    def evaluate(self, word: Sequence[str]) -> P.Perm:
        """rho(word) as a permutation."""
        m = self.image_map
        result = P.identity(self.degree)
        for x in word:
            result = P.compose(result, m[x])
        return result

    def c_image(self, i: int) -> P.Perm:
        """rho(c_i), branch indices 1-based."""
        if not 1 <= i <= self.sig.branch_count:
            raise IndexError(f"branch index {i} out of range 1..{self.sig.branch_count}")
        return self.images[2 * self.sig.genus + i - 1]

    @cached_property
    def fibers(self) -> tuple[FiberData, ...]:
        out = []
        for i in range(1, self.sig.branch_count + 1):
            cyc = P.cycles(self.c_image(i))
            out.append(FiberData(i, cyc, tuple(len(c) for c in cyc)))
        return tuple(out)

    @cached_property
    def deck_order(self) -> int:
        return P.centralizer_order(self.images or (P.identity(self.degree),), self.degree)

    def key(self) -> tuple[P.Perm, ...]:
        return self.images


def _violations(sig: Signature, degree: int, images: Sequence[Sequence[int]],
                names: Sequence[str]) -> list[Violation]:
    out = []
    perms_ok = True
    for name, img in zip(names, images):
        if len(img) != degree:
            out.append(Violation("DegreeMismatch", f"length {len(img)}, expected degree {degree}", name))
            perms_ok = False
        elif not P.is_permutation(img):
            out.append(Violation("NotAPermutation", f"{list(img)} is not a bijection of 0..{degree - 1}", name))
            perms_ok = False
    if not perms_ok:
        return out
    m = dict(zip(sig.generators, (tuple(p) for p in images)))
    rel = P.identity(degree)
    for x in relator(sig):
        p = m[base_letter(x)]
        rel = P.compose(rel, P.inverse(p) if is_inverse_letter(x) else p)
    if not P.is_identity(rel):
        out.append(Violation("RelationViolated",
                             f"surface relation evaluates to {P.format_cycles(rel)}, not the identity"))
    if degree > 0 and len(P.orbits(list(m.values()), degree)) != 1:
        blocks = P.orbits(list(m.values()), degree)
        out.append(Violation("NotTransitive", f"sheet orbits {[list(b) for b in blocks]}"))
    for i in range(1, sig.branch_count + 1):
        if P.is_identity(m[f"c{i}"]):
            out.append(Violation("TrivialBranchPoint", f"c{i} has identity monodromy", f"c[{i - 1}]"))
    return out


def validate(genus: int, branch_points: int, degree: int,
             a: Sequence[Sequence[int]] = (), b: Sequence[Sequence[int]] = (),
             c: Sequence[Sequence[int]] = ()) -> MonodromyCover:
    """
    Check raw monodromy data and return a MonodromyCover.

    Raises InvalidCover listing every violated invariant.
    """
    sig = Signature(genus, branch_points)
    errs = []
    if degree < 1:
        errs.append(Violation("DegreeMismatch", f"degree must be >= 1, got {degree}", "degree"))
    for name, arr, want in (("a", a, genus), ("b", b, genus), ("c", c, branch_points)):
        if len(arr) != want:
            errs.append(Violation("DegreeMismatch", f"{len(arr)} images given, expected {want}", name))
    if errs:
        raise InvalidCover(errs)
    images: list[Sequence[int]] = []
    names: list[str] = []
    for i in range(genus):
        images += [a[i], b[i]]
        names += [f"a[{i}]", f"b[{i}]"]
    images += list(c)
    names += [f"c[{i}]" for i in range(branch_points)]
    errs = _violations(sig, degree, images, names)
    if errs:
        raise InvalidCover(errs)
    return MonodromyCover(sig, degree, tuple(tuple(p) for p in images))


def from_images(sig: Signature, images: Sequence[Sequence[int]] | Mapping[str, Sequence[int]]) -> MonodromyCover:
    """Validate images given in generator order or keyed by generator name."""
    if isinstance(images, Mapping):
        images = [images[g] for g in sig.generators]
    images = list(images)
    if len(images) != len(sig.generators):
        raise InvalidCover([Violation("DegreeMismatch",
                                      f"{len(images)} images for {len(sig.generators)} generators")])
    degree = len(images[0]) if images else 1
    g = sig.genus
    return validate(g, sig.branch_count, degree,
                    a=images[0:2 * g:2], b=images[1:2 * g:2], c=images[2 * g:])


def fiber(cover: MonodromyCover, i: int) -> FiberData:
    if not 1 <= i <= cover.branch_count:
        raise IndexError(f"branch index {i} out of range 1..{cover.branch_count}")
    return cover.fibers[i - 1]


def euler_characteristic_total(cover: MonodromyCover) -> int:
    """Riemann-Hurwitz: chi = n(2 - 2g) - sum_i (n - l_i)."""
    n = cover.degree
    return n * cover.sig.euler_characteristic - sum(n - f.preimage_count for f in cover.fibers)


def total_genus(cover: MonodromyCover) -> int:
    chi = euler_characteristic_total(cover)
    if chi % 2:
        raise ArithmeticError(f"odd Euler characteristic {chi}")
    return (2 - chi) // 2


def deck_group_order(cover: MonodromyCover) -> int:
    return cover.deck_order


def is_regular(cover: MonodromyCover) -> bool:
    return deck_group_order(cover) == cover.degree


def has_property_nu(cover: MonodromyCover) -> bool:
    """No branch point has an unramified preimage."""
    return all(min(f.ramification_numbers) > 1 for f in cover.fibers)


def has_equal_ramification(cover: MonodromyCover) -> bool:
    return all(len(set(f.ramification_numbers)) == 1 for f in cover.fibers)


def is_simple_cover(cover: MonodromyCover) -> bool:
    """Every c_i maps to a transposition."""
    return all(P.is_transposition(p) for p in cover.c)


def properties(cover: MonodromyCover) -> dict[str, bool]:
    return {
        "regular": is_regular(cover),
        "NU": has_property_nu(cover),
        "equal_ramification": has_equal_ramification(cover),
        "simple": is_simple_cover(cover),
    }
