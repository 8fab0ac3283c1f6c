"""Subsets of {1..n} and their parenthesis words.

A subset S of the ground set {1..n} is written as a word of length n with a
right parenthesis at every member position and a left parenthesis elsewhere.
Stack matching of that word is what drives the chain structure used by the
rest of the package.  Positions are 1-based throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

LEFT = "("
RIGHT = ")"

# Whole-lattice enumerations refuse to run past this many ground elements
# unless the caller raises the ceiling explicitly.
DEFAULT_ENUM_CEILING = 24

# Per-set operations stay cheap far beyond enumeration range.
MAX_GROUND_SIZE = 64


class CeilingExceeded(ValueError):
    """An enumeration would exceed the configured size ceiling."""


def check_ground_size(n: int) -> None:
    if not 0 <= n <= MAX_GROUND_SIZE:
        raise ValueError(f"ground size must be in 0..{MAX_GROUND_SIZE}, got {n}")


@dataclass(frozen=True, order=True)
class Subset:
    """A subset of {1..n} with elements stored strictly ascending."""

    n: int
    elements: tuple[int, ...]

    def __post_init__(self) -> None:
        check_ground_size(self.n)
        prev = 0
        for e in self.elements:
            if e <= prev:
                raise ValueError(f"elements must be strictly increasing, got {self.elements}")
            prev = e
        if prev > self.n:
            raise ValueError(f"element {prev} outside ground set 1..{self.n}")

    @classmethod
    def of(cls, n: int, elements: Iterable[int]) -> "Subset":
        return cls(n, tuple(sorted(elements)))

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "Subset":
        if not 0 <= mask < (1 << n):
            raise ValueError(f"mask {mask} out of range for ground size {n}")
        return cls(n, tuple(i for i in range(1, n + 1) if mask >> (i - 1) & 1))

    @classmethod
    def from_literal(cls, n: int, text: str) -> "Subset":
        """Parse a set literal such as ``1,3,4,8,9``; empty set is `` `` or ``-``."""
        text = text.strip()
        if text in ("", "-"):
            return cls(n, ())
        try:
            values = [int(tok) for tok in text.split(",")]
        except ValueError:
            raise ValueError(f"malformed set literal {text!r}") from None
        if len(set(values)) != len(values):
            raise ValueError(f"repeated element in set literal {text!r}")
        return cls(n, tuple(sorted(values)))

    def literal(self) -> str:
        return ",".join(str(e) for e in self.elements) if self.elements else "-"

    def mask(self) -> int:
        out = 0
        for e in self.elements:
            out |= 1 << (e - 1)
        return out

    def with_element(self, i: int) -> "Subset":
        if i in self:
            raise ValueError(f"{i} already present")
        return Subset(self.n, tuple(sorted(self.elements + (i,))))

    def __contains__(self, item: object) -> bool:
        return item in self.elements

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)


@dataclass(frozen=True)
class MatchStructure:
    """Result of stack-matching a parenthesis word.

    ``matched_pairs`` lists (open, close) positions sorted by the opener;
    unmatched positions come out ascending, and every unmatched right sits
    to the left of every unmatched left.
    """

    matched_pairs: tuple[tuple[int, int], ...]
    unmatched_rights: tuple[int, ...]
    unmatched_lefts: tuple[int, ...]


def word_of(s: Subset) -> str:
    """The parenthesis word of ``s``: position i holds RIGHT iff i is a member."""
    symbols = [LEFT] * s.n
    for e in s.elements:
        symbols[e - 1] = RIGHT
    return "".join(symbols)


def parse_word(word: str) -> Subset:
    members = []
    for pos, ch in enumerate(word, start=1):
        if ch == RIGHT:
            members.append(pos)
        elif ch != LEFT:
            raise ValueError(f"unexpected symbol {ch!r} at position {pos}")
    return Subset(len(word), tuple(members))


def match_parens(word: str) -> MatchStructure:
    """Match LEFT symbols to the nearest following unmatched RIGHT."""
    pairs: list[tuple[int, int]] = []
    rights: list[int] = []
    stack: list[int] = []
    for pos, ch in enumerate(word, start=1):
        if ch == LEFT:
            stack.append(pos)
        elif ch == RIGHT:
            if stack:
                pairs.append((stack.pop(), pos))
            else:
                rights.append(pos)
        else:
            raise ValueError(f"unexpected symbol {ch!r} at position {pos}")
    pairs.sort()
    return MatchStructure(tuple(pairs), tuple(rights), tuple(stack))


def all_subsets(n: int, ceiling: int = DEFAULT_ENUM_CEILING) -> Iterator[Subset]:
    """All subsets of {1..n}, ascending by integer mask (bit i-1 encodes i)."""
    check_ground_size(n)
    if n > ceiling:
        raise CeilingExceeded(f"2^{n} subsets exceed the enumeration ceiling n <= {ceiling}")
    return _iter_subsets(n)


def _iter_subsets(n: int) -> Iterator[Subset]:
    for mask in range(1 << n):
        yield Subset.from_mask(n, mask)
