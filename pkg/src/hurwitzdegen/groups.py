"""Exact arithmetic in finite permutation groups.

Groups are materialized as complete, lexicographically sorted element lists
(no stabilizer chains); every element is referred to by its integer id in
that list, which makes all downstream enumerations deterministic.  All
values are immutable after construction and every operation is a pure
function, so concurrent reads are safe.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import ClosureBoundExceeded, DegreeMismatch, NotACharacter

Perm = tuple  # images: Perm[i] = image of point i

DEFAULT_CLOSURE_BOUND = 10**6


def as_perm(images: Sequence[int]) -> Perm:
    """Validate an image array and return it as a tuple."""
    p = tuple(int(x) for x in images)
    n = len(p)
    if sorted(p) != list(range(n)):
        raise ValueError(f"not a permutation of 0..{n - 1}: {list(images)!r}")
    return p


def identity_perm(degree: int) -> Perm:
    return tuple(range(degree))


def compose(p: Perm, q: Perm) -> Perm:
    """(p . q)(i) = p(q(i))."""
    return tuple(p[q[i]] for i in range(len(p)))


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v] = i
    return tuple(inv)


def perm_from_cycles(degree: int, *cycles: Sequence[int]) -> Perm:
    """Build the permutation given by disjoint cycles, e.g. (0,1,2,3,4)."""
    images = list(range(degree))
    for c in cycles:
        for i, x in enumerate(c):
            images[x] = c[(i + 1) % len(c)]
    return as_perm(images)


class PermGroup:
    """A finite permutation group with its full element list.

    Elements are sorted lexicographically by image tuple; the identity is
    always element 0.  ``max_order`` bounds the closure so a typo'd
    generating set fails fast instead of eating memory.
    """

    def __init__(self, generators: Iterable[Sequence[int]], degree: int | None = None,
                 max_order: int = DEFAULT_CLOSURE_BOUND):
        gens = [as_perm(g) for g in generators]
        if degree is None:
            if not gens:
                raise DegreeMismatch("empty generating set needs an explicit degree")
            degree = len(gens[0])
        for g in gens:
            if len(g) != degree:
                raise DegreeMismatch(f"generator degree {len(g)} != {degree}")
        self.degree = degree
        self.generators = gens
        self.elements = self._close(gens, degree, max_order)
        self.index = {g: i for i, g in enumerate(self.elements)}
        assert self.elements[0] == identity_perm(degree)
        self._inv = [self.index[inverse(g)] for g in self.elements]
        self._orders: dict[int, int] = {}
        self._classes: tuple[tuple[int, ...], ...] | None = None
        self._class_of: list[int] | None = None

    @staticmethod
    def _close(gens: list[Perm], degree: int, max_order: int) -> list[Perm]:
        els = {identity_perm(degree)}
        frontier = [g for g in gens if g not in els]
        els.update(frontier)
        while frontier:
            new = []
            for a in frontier:
                for g in gens:
                    c = compose(a, g)
                    if c not in els:
                        els.add(c)
                        new.append(c)
                        if len(els) > max_order:
                            raise ClosureBoundExceeded(
                                f"closure exceeded {max_order} elements")
            frontier = new
        return sorted(els)

    # -- element arithmetic (by id) --------------------------------------

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> int:
        return 0

    @property
    def generator_ids(self) -> list[int]:
        return [self.index[g] for g in self.generators]

    def perm(self, i: int) -> Perm:
        return self.elements[i]

    def id_of(self, p: Sequence[int]) -> int:
        key = as_perm(p)
        if key not in self.index:
            raise KeyError(f"permutation {list(p)!r} is not an element of this group")
        return self.index[key]

    def mul(self, i: int, j: int) -> int:
        return self.index[compose(self.elements[i], self.elements[j])]

    def inv(self, i: int) -> int:
        return self._inv[i]

    def conj(self, g: int, x: int) -> int:
        """g x g^-1."""
        return self.mul(self.mul(g, x), self.inv(g))

    def product(self, ids: Iterable[int]) -> int:
        acc = 0
        for i in ids:
            acc = self.mul(acc, i)
        return acc

    def element_order(self, i: int) -> int:
        if i not in self._orders:
            k, acc = 1, i
            while acc != 0:
                acc = self.mul(acc, i)
                k += 1
            self._orders[i] = k
        return self._orders[i]

    # -- conjugacy classes ------------------------------------------------

    def conjugacy_classes(self) -> tuple[tuple[int, ...], ...]:
        """Conjugation orbits, ordered by (element order, minimal id)."""
        if self._classes is None:
            seen = [False] * self.order
            classes = []
            for i in range(self.order):
                if seen[i]:
                    continue
                orbit = sorted({self.conj(g, i) for g in range(self.order)})
                for x in orbit:
                    seen[x] = True
                classes.append(tuple(orbit))
            classes.sort(key=lambda c: (self.element_order(c[0]), c[0]))
            self._classes = tuple(classes)
            class_of = [0] * self.order
            for ci, c in enumerate(self._classes):
                for x in c:
                    class_of[x] = ci
            self._class_of = class_of
        return self._classes

    def class_of(self, i: int) -> int:
        self.conjugacy_classes()
        assert self._class_of is not None
        return self._class_of[i]

    # -- subgroups ---------------------------------------------------------

    def subgroup(self, member_ids: Iterable[int]) -> "Subgroup":
        return Subgroup(self, tuple(sorted(set(member_ids))))

    def generated_subgroup(self, gen_ids: Iterable[int]) -> "Subgroup":
        members = {0}
        frontier = [i for i in set(gen_ids) if i != 0]
        members.update(frontier)
        gens = list(frontier)
        while frontier:
            new = []
            for a in frontier:
                for g in gens:
                    c = self.mul(a, g)
                    if c not in members:
                        members.add(c)
                        new.append(c)
            frontier = new
        return Subgroup(self, tuple(sorted(members)))

    def cyclic_subgroup(self, i: int) -> "Subgroup":
        members = [0]
        acc = i
        while acc != 0:
            members.append(acc)
            acc = self.mul(acc, i)
        return Subgroup(self, tuple(sorted(members)))

    def full_subgroup(self) -> "Subgroup":
        return Subgroup(self, tuple(range(self.order)))

    # -- serialization ------------------------------------------------------

    def to_jsonable(self) -> dict:
        return {"degree": self.degree, "generators": [list(g) for g in self.generators]}

    @classmethod
    def from_jsonable(cls, obj: dict) -> "PermGroup":
        return cls(obj["generators"], degree=obj["degree"])


def same_group(a: PermGroup, b: PermGroup) -> bool:
    return a is b or (a.degree == b.degree and a.elements == b.elements)


@dataclass(frozen=True)
class Subgroup:
    """Subgroup of ``group`` given by its sorted member ids."""

    group: PermGroup
    members: tuple[int, ...]

    def __post_init__(self):
        ms = set(self.members)
        if 0 not in ms:
            raise ValueError("subgroup must contain the identity")
        for a in self.members:
            if self.group.inv(a) not in ms:
                raise ValueError("subgroup not closed under inverse")
            for b in self.members:
                if self.group.mul(a, b) not in ms:
                    raise ValueError("subgroup not closed under product")

    @property
    def order(self) -> int:
        return len(self.members)

    @property
    def index_in_parent(self) -> int:
        return self.group.order // self.order

    def __contains__(self, element_id: int) -> bool:
        return element_id in set(self.members)

    def member_set(self) -> frozenset:
        return frozenset(self.members)


@dataclass(frozen=True)
class CosetTable:
    """A partition of the group into cosets, ordered by minimal element id."""

    subgroup_order: int
    cells: tuple[tuple[int, ...], ...]
    index_of: tuple[int, ...]  # element id -> coset index

    def __len__(self) -> int:
        return len(self.cells)

    def rep(self, coset: int) -> int:
        return self.cells[coset][0]


def left_cosets(group: PermGroup, sub: Subgroup) -> CosetTable:
    """Cosets gH; scanning ids in order labels each cell by its minimum."""
    assigned = [-1] * group.order
    cells = []
    for g in range(group.order):
        if assigned[g] != -1:
            continue
        cell = tuple(sorted(group.mul(g, h) for h in sub.members))
        idx = len(cells)
        cells.append(cell)
        for x in cell:
            assigned[x] = idx
    return CosetTable(sub.order, tuple(cells), tuple(assigned))


def right_cosets(group: PermGroup, sub: Subgroup) -> CosetTable:
    """Cosets Hg, used for intermediate quotients of covers."""
    assigned = [-1] * group.order
    cells = []
    for g in range(group.order):
        if assigned[g] != -1:
            continue
        cell = tuple(sorted(group.mul(h, g) for h in sub.members))
        idx = len(cells)
        cells.append(cell)
        for x in cell:
            assigned[x] = idx
    return CosetTable(sub.order, tuple(cells), tuple(assigned))


def normalizer(group: PermGroup, sub: Subgroup) -> Subgroup:
    ms = sub.member_set()
    keep = [g for g in range(group.order)
            if all(group.conj(g, h) in ms for h in sub.members)]
    return Subgroup(group, tuple(keep))


def centralizer(group: PermGroup, sub: Subgroup) -> Subgroup:
    keep = [g for g in range(group.order)
            if all(group.conj(g, h) == h for h in sub.members)]
    return Subgroup(group, tuple(keep))


def all_subgroups(group: PermGroup) -> list[Subgroup]:
    """Every subgroup, by closure of extensions; fine for small groups."""
    trivial = frozenset([0])
    seen = {trivial}
    frontier = [trivial]
    while frontier:
        new = []
        for members in frontier:
            for g in range(1, group.order):
                if g in members:
                    continue
                ext = group.generated_subgroup(list(members) + [g]).member_set()
                if ext not in seen:
                    seen.add(ext)
                    new.append(ext)
        frontier = new
    return [Subgroup(group, tuple(sorted(m))) for m in
            sorted(seen, key=lambda m: (len(m), tuple(sorted(m))))]


def is_inverting_involution(group: PermGroup, m: int, s: int) -> bool:
    """True iff s^2 = e, s m s^-1 = m^-1 and s lies outside <m>.

    The last clause rejects the degenerate case where the branch pairing
    above a dihedral point would fix every coset and form no node.
    """
    if s == 0 or group.mul(s, s) != 0:
        return False
    if group.conj(s, m) != group.inv(m):
        return False
    acc = 0
    while True:
        if acc == s:
            return False
        acc = group.mul(acc, m)
        if acc == 0:
            return True


# -- class functions -------------------------------------------------------


@dataclass(frozen=True, eq=False)
class ClassFunction:
    """Integer-valued function on conjugacy classes, in canonical class order."""

    group: PermGroup
    values: tuple[int, ...]

    def __post_init__(self):
        assert len(self.values) == len(self.group.conjugacy_classes())

    @classmethod
    def trivial(cls, group: PermGroup) -> "ClassFunction":
        return cls(group, tuple([1] * len(group.conjugacy_classes())))

    @classmethod
    def zero(cls, group: PermGroup) -> "ClassFunction":
        return cls(group, tuple([0] * len(group.conjugacy_classes())))

    @property
    def degree(self) -> int:
        return self.values[0]  # identity sits in class 0

    def value(self, element_id: int) -> int:
        return self.values[self.group.class_of(element_id)]

    def __eq__(self, other) -> bool:
        return (isinstance(other, ClassFunction)
                and same_group(self.group, other.group)
                and self.values == other.values)

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        assert same_group(self.group, other.group)
        return ClassFunction(self.group, tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: "ClassFunction") -> "ClassFunction":
        assert same_group(self.group, other.group)
        return ClassFunction(self.group, tuple(a - b for a, b in zip(self.values, other.values)))

    def __neg__(self) -> "ClassFunction":
        return ClassFunction(self.group, tuple(-a for a in self.values))

    def __mul__(self, k: int) -> "ClassFunction":
        return ClassFunction(self.group, tuple(k * a for a in self.values))

    __rmul__ = __mul__

    def inner(self, other: "ClassFunction") -> Fraction:
        """<chi, psi> = (1/|G|) sum chi(g) psi(g^-1); exact rational."""
        assert same_group(self.group, other.group)
        total = 0
        classes = self.group.conjugacy_classes()
        for ci, c in enumerate(classes):
            inv_class = self.group.class_of(self.group.inv(c[0]))
            total += len(c) * self.values[ci] * other.values[inv_class]
        return Fraction(total, self.group.order)


def permutation_character(group: PermGroup, images: Sequence[Sequence[int]]) -> ClassFunction:
    """Fixed-point count per class of the action given by image tables."""
    vals = []
    for c in group.conjugacy_classes():
        table = images[c[0]]
        vals.append(sum(1 for i, v in enumerate(table) if v == i))
    return ClassFunction(group, tuple(vals))


def induced_character(group: PermGroup, sub: Subgroup, chi: Mapping[int, int]) -> ClassFunction:
    """Frobenius induction of a +-1 character of ``sub`` up to ``group``.

    Ind(chi)(g) = (1/|H|) sum over x in G with x g x^-1 in H of chi(x g x^-1).
    Multiplicativity of chi is verified; values come out integral.
    """
    for h in sub.members:
        if chi.get(h) not in (1, -1):
            raise NotACharacter(f"chi must be +-1 on every member, bad at {h}")
    for a in sub.members:
        for b in sub.members:
            if chi[group.mul(a, b)] != chi[a] * chi[b]:
                raise NotACharacter(f"chi not multiplicative at ({a}, {b})")
    ms = sub.member_set()
    vals = []
    for c in group.conjugacy_classes():
        g = c[0]
        total = 0
        for x in range(group.order):
            y = group.conj(x, g)
            if y in ms:
                total += chi[y]
        q, r = divmod(total, sub.order)
        assert r == 0, "induced value not integral"
        vals.append(q)
    return ClassFunction(group, tuple(vals))


def trivial_on(sub: Subgroup) -> dict[int, int]:
    return {h: 1 for h in sub.members}


def sign_characters(group: PermGroup, sub: Subgroup) -> list[dict[int, int]]:
    """All homomorphisms sub -> {+-1}, the trivial one first.

    Enumerated through the quotient by squares and commutators, which is
    elementary abelian of exponent 2.
    """
    sq_comm = set()
    for a in sub.members:
        sq_comm.add(group.mul(a, a))
        for b in sub.members:
            comm = group.mul(group.mul(a, b), group.mul(group.inv(a), group.inv(b)))
            sq_comm.add(comm)
    kernel0 = group.generated_subgroup(sq_comm)
    # cosets of kernel0 inside sub form the F2 vector space of the quotient
    coset_of: dict[int, int] = {}
    cosets: list[int] = []
    for h in sub.members:
        if h in coset_of:
            continue
        idx = len(cosets)
        cosets.append(h)
        for k in kernel0.members:
            coset_of[group.mul(h, k)] = idx
    # greedy F2 basis of the quotient
    span = {0}
    basis: list[int] = []
    for ci, rep in enumerate(cosets):
        if ci in span:
            continue
        basis.append(rep)
        span = {coset_of[group.mul(cosets[c], rep)] for c in span} | span
    chars = []
    for mask in range(1 << len(basis)):
        signs = {coset_of[0]: 1}
        for bit, rep in enumerate(basis):
            sign = -1 if (mask >> bit) & 1 else 1
            for c, v in list(signs.items()):
                signs[coset_of[group.mul(cosets[c], rep)]] = v * sign
        chars.append({h: signs[coset_of[h]] for h in sub.members})
    chars.sort(key=lambda ch: tuple(-ch[h] for h in sub.members))
    return chars
