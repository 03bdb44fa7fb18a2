"""Permutations of {1..d} with descent statistics and their generating
polynomials.

A permutation is a word: a tuple (w(1), ..., w(d)) containing each of
1..d exactly once. Positions are 1-based, so position j is a descent when
w(j) > w(j+1). ``euler_mahonian`` tallies x^des * y^maj over all d! words;
``djsw_recursion`` builds the same polynomial by a divided-difference
recurrence without touching any permutation, which is what makes the two
routes worth comparing.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .series import Monomial2, Poly2

# Enumerating S_d costs d! polynomial updates; 9! is still instant, beyond
# that callers should use the recursion (polynomial time) or lift the guard.
MAX_ENUM_D = 9


class DTooLarge(ValueError):
    """Permutation enumeration requested beyond the factorial-size guard."""


def _check_word(word: Sequence[int]) -> tuple[int, ...]:
    w = tuple(word)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"{w} is not a permutation of 1..{len(w)}")
    return w


def descent_set(word: Sequence[int]) -> set[int]:
    """Positions j in 1..d-1 with w(j) > w(j+1).

    >>> sorted(descent_set((2, 3, 1)))
    [2]
    >>> sorted(descent_set((3, 2, 1)))
    [1, 2]
    """
    w = _check_word(word)
    return {j for j in range(1, len(w)) if w[j - 1] > w[j]}


def ascent_set(word: Sequence[int]) -> set[int]:
    """Positions j in 1..d-1 with w(j) < w(j+1)."""
    w = _check_word(word)
    return {j for j in range(1, len(w)) if w[j - 1] < w[j]}


def descent_count(word: Sequence[int]) -> int:
    return len(descent_set(word))


def major_index(word: Sequence[int]) -> int:
    """Sum of the descent positions.

    >>> major_index((3, 2, 1))
    3
    """
    return sum(descent_set(word))


def complement(word: Sequence[int]) -> tuple[int, ...]:
    """The value-complement w(j) -> d+1-w(j); swaps descents and ascents."""
    w = _check_word(word)
    d = len(w)
    return tuple(d + 1 - v for v in w)


def permutations_lex(d: int) -> Iterator[tuple[int, ...]]:
    """All words of {1..d} in lexicographic order."""
    return itertools.permutations(range(1, d + 1))


def _guard(d: int, max_d: int) -> None:
    if d < 1:
        raise ValueError("d must be at least 1")
    if d > max_d:
        raise DTooLarge(f"d={d} exceeds the enumeration guard {max_d}")


def euler_mahonian(d: int, max_d: int = MAX_ENUM_D) -> Poly2:
    """Sum over all permutations of {1..d} of x^descents * y^(major index).

    Evaluated at x = y = 1 this is d!.

    >>> euler_mahonian(2).text(("x", "y"))
    '1 + x*y'
    """
    _guard(d, max_d)
    counts: dict[tuple[int, int], int] = {}
    for w in itertools.permutations(range(1, d + 1)):
        des = 0
        maj = 0
        for j in range(1, d):
            if w[j - 1] > w[j]:
                des += 1
                maj += j
        key = (des, maj)
        counts[key] = counts.get(key, 0) + 1
    return Poly2(counts)


def eulerian(d: int, max_d: int = MAX_ENUM_D) -> Poly2:
    """The descent-count polynomial: euler_mahonian with y set to 1."""
    return euler_mahonian(d, max_d).substitute(Monomial2(1, 0), Monomial2(0, 0))


def djsw_recursion(d: int) -> Poly2:
    """The descent polynomial built by recurrence instead of enumeration.

    F_1 = 1 and

        F_d(x, y) = ((1 - x*y^d) F_{d-1}(x, y) - y (1 - x) F_{d-1}(x*y, y)) / (1 - y)

    where the division must be remainder-free; a NonExactDivision here
    signals an implementation bug, not bad input.
    """
    if d < 1:
        raise ValueError("d must be at least 1")
    x = Poly2.monomial(1, 0)
    y = Poly2.monomial(0, 1)
    one = Poly2.one()
    f = one
    for k in range(2, d + 1):
        shifted = f.substitute(Monomial2(1, 1), Monomial2(0, 1))
        numerator = (one - x * y**k) * f - y * (one - x) * shifted
        f = numerator.divide_exact(one - y)
    return f


@dataclass(frozen=True)
class RecursionMatchEntry:
    d: int
    equal: bool
    recursion_terms: int
    enumeration_terms: int
    first_difference: Optional[tuple[Monomial2, int, int]]


@dataclass(frozen=True)
class RecursionMatchReport:
    d_max: int
    entries: tuple[RecursionMatchEntry, ...]

    @property
    def all_equal(self) -> bool:
        return all(entry.equal for entry in self.entries)

    def as_dict(self) -> dict:
        return {
            "d_max": self.d_max,
            "all_equal": self.all_equal,
            "entries": [
                {
                    "d": e.d,
                    "equal": e.equal,
                    "recursion_terms": e.recursion_terms,
                    "enumeration_terms": e.enumeration_terms,
                    "first_difference": None
                    if e.first_difference is None
                    else {
                        "monomial": list(e.first_difference[0]),
                        "recursion": str(e.first_difference[1]),
                        "enumeration": str(e.first_difference[2]),
                    },
                }
                for e in self.entries
            ],
        }


def verify_theorem1(d_max: int, max_d: int = MAX_ENUM_D) -> RecursionMatchReport:
    """Compare the recurrence polynomial against the d! enumeration for every
    d <= d_max, reporting exact equality or the first differing term."""
    _guard(d_max, max_d)
    entries = []
    for d in range(1, d_max + 1):
        by_recursion = djsw_recursion(d)
        by_enumeration = euler_mahonian(d, max_d)
        diff = by_recursion.first_difference(by_enumeration)
        entries.append(
            RecursionMatchEntry(
                d=d,
                equal=diff is None,
                recursion_terms=len(by_recursion.terms),
                enumeration_terms=len(by_enumeration.terms),
                first_difference=diff,
            )
        )
    return RecursionMatchReport(d_max=d_max, entries=tuple(entries))
