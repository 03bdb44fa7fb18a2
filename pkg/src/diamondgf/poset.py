"""Naturally labelled finite posets, diamond-shaped poset builders, linear
extension enumeration, and the linear-extension expansion of the P-partition
generating function.

Natural labelling means j below k in the order implies j < k as integers,
which every constructor here validates. Cover input may contain duplicates
and transitively implied pairs; construction reduces them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .series import Monomial2, Poly2, RationalExpr, TruncSeries2

# Linear-extension counts can reach c!, so enumeration is guarded by poset
# size; pass a larger max_size to override.
MAX_JH_SIZE = 12

FOLD_TAG = "a"
LINK_TAG = "b"


class PosetTooLarge(ValueError):
    """Linear-extension enumeration requested beyond the size guard."""


class ParseError(ValueError):
    """Malformed poset file input."""

    def __init__(self, message: str, lineno: Optional[int] = None) -> None:
        self.lineno = lineno
        super().__init__(message if lineno is None else f"line {lineno}: {message}")


class NotNaturallyLabelled(ParseError):
    """A cover relation j -> k with j > k."""


class CycleDetected(ParseError):
    """A relation from an element to itself (the only cycle natural labels allow)."""


class Poset:
    """A partial order on {1..size} given by cover relations.

    Covers are stored transitively reduced. Since every cover must increase
    the integer label, acyclicity is automatic.
    """

    __slots__ = ("size", "covers", "_pred", "_lowers", "_uppers")

    def __init__(self, size: int, covers: Iterable[tuple[int, int]] = ()) -> None:
        if size < 1:
            raise ValueError("a poset needs at least one element")
        raw: set[tuple[int, int]] = set()
        for pair in covers:
            j, k = int(pair[0]), int(pair[1])
            if not (1 <= j <= size and 1 <= k <= size):
                raise ValueError(f"cover ({j}, {k}) out of range 1..{size}")
            if j == k:
                raise CycleDetected(f"cover ({j}, {k}) relates an element to itself")
            if j > k:
                raise NotNaturallyLabelled(
                    f"cover ({j}, {k}) decreases; labels must increase along relations"
                )
            raw.add((j, k))

        raw_lowers: dict[int, list[int]] = {k: [] for k in range(1, size + 1)}
        for j, k in raw:
            raw_lowers[k].append(j)

        # Strict down-sets in one ascending pass; covers only point upward.
        pred: dict[int, set[int]] = {}
        for k in range(1, size + 1):
            below: set[int] = set()
            for j in raw_lowers[k]:
                below.add(j)
                below |= pred[j]
            pred[k] = below

        reduced: set[tuple[int, int]] = set()
        for k in range(1, size + 1):
            for j in raw_lowers[k]:
                implied = any(j in pred[z] for z in raw_lowers[k] if z != j)
                if not implied:
                    reduced.add((j, k))

        lowers = {k: tuple(sorted(j for j, kk in reduced if kk == k)) for k in range(1, size + 1)}
        uppers = {j: tuple(sorted(k for jj, k in reduced if jj == j)) for j in range(1, size + 1)}

        self.size = size
        self.covers = frozenset(reduced)
        self._pred = {k: frozenset(v) for k, v in pred.items()}
        self._lowers = lowers
        self._uppers = uppers

    def lower_covers(self, k: int) -> tuple[int, ...]:
        return self._lowers[k]

    def upper_covers(self, j: int) -> tuple[int, ...]:
        return self._uppers[j]

    def predecessors(self, k: int) -> frozenset[int]:
        """All elements strictly below k."""
        return self._pred[k]

    def leq(self, j: int, k: int) -> bool:
        return j == k or j in self._pred[k]

    def minimal_elements(self) -> tuple[int, ...]:
        return tuple(k for k in range(1, self.size + 1) if not self._lowers[k])

    def maximal_elements(self) -> tuple[int, ...]:
        return tuple(j for j in range(1, self.size + 1) if not self._uppers[j])

    def dual(self) -> "Poset":
        """Reverse all relations and relabel j -> size+1-j, which restores
        natural labelling."""
        c = self.size
        return Poset(c, ((c + 1 - k, c + 1 - j) for j, k in self.covers))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self.size == other.size and self.covers == other.covers

    def __hash__(self) -> int:
        return hash((self.size, self.covers))

    def __repr__(self) -> str:
        return f"Poset(size={self.size}, covers={sorted(self.covers)})"


def build_chain(size: int) -> Poset:
    return Poset(size, ((j, j + 1) for j in range(1, size)))


def build_antichain(size: int) -> Poset:
    return Poset(size)


def build_q_poset(d: int) -> Poset:
    """An antichain of d elements, all covered by one top element d+1."""
    if d < 1:
        raise ValueError("d must be at least 1")
    return Poset(d + 1, ((j, d + 1) for j in range(1, d + 1)))


def linear_sum(first: Poset, second: Poset) -> Poset:
    """Place every element of ``first`` below every element of ``second``.

    Elements of the second poset shift up by size(first); the only new
    covers run from maximal elements of the first to minimal elements of
    the second, which keeps the cover set reduced.
    """
    shift = first.size
    covers = list(first.covers)
    covers.extend((j + shift, k + shift) for j, k in second.covers)
    covers.extend(
        (m, n + shift) for m in first.maximal_elements() for n in second.minimal_elements()
    )
    return Poset(first.size + second.size, covers)


@dataclass(frozen=True)
class DiamondSpec:
    """Fold counts per diamond block, bottom block first."""

    folds: tuple[int, ...]

    def __post_init__(self) -> None:
        folds = tuple(int(d) for d in self.folds)
        if not folds:
            raise ValueError("a diamond needs at least one block")
        if any(d < 1 for d in folds):
            raise ValueError("every block needs at least one fold")
        object.__setattr__(self, "folds", folds)

    @classmethod
    def uniform(cls, d: int, length: int) -> "DiamondSpec":
        if length < 1:
            raise ValueError("length must be at least 1")
        return cls((d,) * length)

    @property
    def length(self) -> int:
        return len(self.folds)

    @property
    def element_count(self) -> int:
        return self.length + 1 + sum(self.folds)

    def omega(self, k: int) -> int:
        """Total folds strictly above block k: omega(0) counts all folds,
        omega(length) is 0."""
        if not 0 <= k <= self.length:
            raise ValueError(f"block index {k} out of range 0..{self.length}")
        return sum(self.folds[k:])


def build_diamond_poset(spec: DiamondSpec) -> tuple[Poset, tuple[str, ...]]:
    """The chain of diamond blocks: a bottom link, then for each block its
    folds (an antichain) capped by the next link.

    Returns the poset together with the variable assignment tagging link
    elements ``b`` and fold elements ``a``.
    """
    poset = build_chain(1)
    tags = [LINK_TAG]
    for d in spec.folds:
        poset = linear_sum(poset, build_q_poset(d))
        tags.extend([FOLD_TAG] * d)
        tags.append(LINK_TAG)
    return poset, tuple(tags)


def constant_assignment(size: int, tag: str = LINK_TAG) -> tuple[str, ...]:
    return (tag,) * size


def validate_assignment(assignment: Sequence[str], size: int) -> tuple[str, ...]:
    tags = tuple(assignment)
    if len(tags) != size:
        raise ValueError(f"assignment covers {len(tags)} elements, poset has {size}")
    if any(tag not in (FOLD_TAG, LINK_TAG) for tag in tags):
        raise ValueError(f"assignment tags must be '{FOLD_TAG}' or '{LINK_TAG}'")
    return tags


def jordan_holder(p: Poset, max_size: int = MAX_JH_SIZE) -> list[tuple[int, ...]]:
    """All linear extensions as words, in lexicographic order.

    A word lists the poset elements so that every element appears after all
    elements below it.
    """
    if p.size > max_size:
        raise PosetTooLarge(
            f"poset has {p.size} elements, guard is {max_size}; raise max_size to override"
        )
    c = p.size
    pending = [0] * (c + 1)  # unplaced lower covers per element
    for k in range(1, c + 1):
        pending[k] = len(p.lower_covers(k))
    used = [False] * (c + 1)
    word: list[int] = []
    words: list[tuple[int, ...]] = []

    def extend() -> None:
        if len(word) == c:
            words.append(tuple(word))
            return
        for k in range(1, c + 1):
            if used[k] or pending[k]:
                continue
            used[k] = True
            for upper in p.upper_covers(k):
                pending[upper] -= 1
            word.append(k)
            extend()
            word.pop()
            for upper in p.upper_covers(k):
                pending[upper] += 1
            used[k] = False

    extend()
    return words


def stanley_sigma(
    p: Poset,
    assignment: Sequence[str],
    truncation: int,
    max_size: int = MAX_JH_SIZE,
) -> TruncSeries2:
    """The P-partition generating function via linear extensions.

    Each extension word w contributes

        prod_{descents j of w} m(j+1)  /  prod_{i=1..c} (1 - m(i))

    where m(i) is the product of the variables assigned to the trailing
    elements w(i), ..., w(c). Words sharing a denominator (as a multiset of
    factors) are grouped so the expansion runs once per group.
    """
    tags = validate_assignment(assignment, p.size)
    c = p.size
    words = jordan_holder(p, max_size)
    groups: dict[tuple[Monomial2, ...], dict[Monomial2, int]] = {}
    for w in words:
        suffix: list[Monomial2] = [Monomial2(0, 0)] * c
        count_a = count_b = 0
        for i in range(c - 1, -1, -1):
            if tags[w[i] - 1] == FOLD_TAG:
                count_a += 1
            else:
                count_b += 1
            suffix[i] = Monomial2(count_a, count_b)
        numer_a = numer_b = 0
        for j in range(1, c):
            if w[j - 1] > w[j]:
                numer_a += suffix[j].exp_a
                numer_b += suffix[j].exp_b
        key = tuple(sorted(suffix))
        numerators = groups.setdefault(key, {})
        mono = Monomial2(numer_a, numer_b)
        numerators[mono] = numerators.get(mono, 0) + 1

    total = TruncSeries2.zero(truncation)
    for factors, numerators in groups.items():
        total = total + RationalExpr(Poly2(numerators), factors).expand(truncation)
    return total


def _parse_int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"expected an integer, got '{token}'", lineno) from None


def parse_poset_file(text: str) -> tuple[Poset, tuple[str, ...]]:
    """Parse the line-oriented poset format.

    Grammar (tokens whitespace separated, ``#`` starts a comment):

        elements <c>          first directive, exactly once
        cover <j> <k>         with 1 <= j < k <= c; duplicates ignored
        assign a <j1> <j2>..  tag the listed elements 'a'; default is 'b'
    """
    size: Optional[int] = None
    covers: list[tuple[int, int]] = []
    fold_elements: set[int] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        keyword = tokens[0]
        if keyword == "elements":
            if size is not None:
                raise ParseError("duplicate 'elements' line", lineno)
            if len(tokens) != 2:
                raise ParseError("'elements' expects exactly one count", lineno)
            size = _parse_int(tokens[1], lineno)
            if size < 1:
                raise ParseError("element count must be positive", lineno)
            continue
        if size is None:
            raise ParseError(f"'{keyword}' appears before 'elements'", lineno)
        if keyword == "cover":
            if len(tokens) != 3:
                raise ParseError("'cover' expects two element labels", lineno)
            j = _parse_int(tokens[1], lineno)
            k = _parse_int(tokens[2], lineno)
            for v in (j, k):
                if not 1 <= v <= size:
                    raise ParseError(f"element {v} out of range 1..{size}", lineno)
            if j == k:
                raise CycleDetected(f"cover {j} {k} relates an element to itself", lineno)
            if j > k:
                raise NotNaturallyLabelled(
                    f"cover {j} {k} decreases; labels must increase along relations", lineno
                )
            covers.append((j, k))
        elif keyword == "assign":
            if len(tokens) < 2 or tokens[1] != FOLD_TAG:
                raise ParseError(f"'assign' supports only the tag '{FOLD_TAG}'", lineno)
            if len(tokens) == 2:
                raise ParseError("'assign a' lists at least one element", lineno)
            for token in tokens[2:]:
                v = _parse_int(token, lineno)
                if not 1 <= v <= size:
                    raise ParseError(f"element {v} out of range 1..{size}", lineno)
                fold_elements.add(v)
        else:
            raise ParseError(f"unknown directive '{keyword}'", lineno)
    if size is None:
        raise ParseError("missing 'elements' line")
    tags = tuple(FOLD_TAG if j in fold_elements else LINK_TAG for j in range(1, size + 1))
    return Poset(size, covers), tags
