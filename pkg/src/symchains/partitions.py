"""Partitions of {1..m} and the chain family induced on them.

Blocks are kept in canonical form: each block ascending, blocks ordered by
their minima.  The type of a partition is its tuple of block sizes in that
order; reversing the type gives the nonzero entries of a code, and the
decoded subset indexes the partition's class.  Injections between classes
along the subset chains yield a family of disjoint symmetric chains covering
every partition with many blocks.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .boolean import gk_decomposition
from .coding import code_from_nonzeros, decode, encode, nonzeros
from .reports import VerificationReport, report
from .subsets import DEFAULT_ENUM_CEILING, CeilingExceeded, Subset

# Bell(13) is about 27.6 million; whole-lattice work past that needs an
# explicit ceiling override.
DEFAULT_PARTITION_CEILING = 13


def _check_partition_size(m: int, ceiling: int) -> None:
    if m > ceiling:
        raise CeilingExceeded(f"Bell-scale enumeration refused for m = {m} > {ceiling}")


@dataclass(frozen=True)
class SetPartition:
    """A partition of {1..m} in canonical block order."""

    m: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        seen = [False] * (self.m + 1)
        count = 0
        prev_min = 0
        for block in self.blocks:
            if not block:
                raise ValueError("empty block")
            if block[0] <= prev_min:
                raise ValueError("blocks must be ordered by ascending minimum")
            prev_min = block[0]
            prev = 0
            for e in block:
                if e <= prev:
                    raise ValueError(f"block {block} is not strictly increasing")
                if not 1 <= e <= self.m:
                    raise ValueError(f"element {e} outside ground set 1..{self.m}")
                if seen[e]:
                    raise ValueError(f"element {e} appears twice")
                seen[e] = True
                prev = e
                count += 1
        if count != self.m:
            raise ValueError("blocks must cover the ground set exactly")

    @classmethod
    def of(cls, m: int, blocks: Iterable[Iterable[int]]) -> "SetPartition":
        canon = sorted(tuple(sorted(block)) for block in blocks)
        return cls(m, tuple(canon))

    @classmethod
    def from_literal(cls, m: int, text: str) -> "SetPartition":
        """Parse ``1,3,4/2`` style literals; all-digit block tokens such as
        ``134`` are read element-wise, which is unambiguous only for m <= 9."""
        blocks = []
        for token in text.strip().split("/"):
            token = token.strip()
            if not token:
                raise ValueError(f"malformed partition literal {text!r}")
            if "," in token:
                try:
                    blocks.append([int(t) for t in token.split(",")])
                except ValueError:
                    raise ValueError(f"malformed block {token!r}") from None
            elif token.isdigit() and len(token) > 1 and m <= 9:
                blocks.append([int(ch) for ch in token])
            else:
                try:
                    blocks.append([int(token)])
                except ValueError:
                    raise ValueError(f"malformed block {token!r}") from None
        return cls.of(m, blocks)

    def literal(self) -> str:
        return "/".join(",".join(str(e) for e in block) for block in self.blocks)

    @property
    def block_count(self) -> int:
        return len(self.blocks)

    @property
    def rank(self) -> int:
        return self.m - len(self.blocks)


def type_of(p: SetPartition) -> tuple[int, ...]:
    """Block sizes in canonical block order."""
    return tuple(len(block) for block in p.blocks)


def class_of(p: SetPartition) -> Subset:
    """The subset of {1..m-1} indexing the class of ``p``: the reversed type
    is the nonzero sequence of exactly one code, and that code decodes to the
    class index."""
    return decode(code_from_nonzeros(tuple(reversed(type_of(p)))))


def enumerate_class(s: Subset, ceiling: int = DEFAULT_PARTITION_CEILING) -> tuple[SetPartition, ...]:
    """All partitions of {1..n+1} in the class of ``s``, in a fixed order.

    The target type is read off the code of ``s``.  The smallest unassigned
    element opens each successive block and the remaining members are chosen
    ascending, so every partition of that type appears exactly once.
    """
    m = s.n + 1
    _check_partition_size(m, ceiling)
    sizes = tuple(reversed(nonzeros(encode(s))))
    out: list[SetPartition] = []
    acc: list[tuple[int, ...]] = []

    def place(remaining: tuple[int, ...], depth: int) -> None:
        if depth == len(sizes):
            out.append(SetPartition(m, tuple(acc)))
            return
        opener, rest = remaining[0], remaining[1:]
        for combo in itertools.combinations(rest, sizes[depth] - 1):
            taken = set(combo)
            acc.append((opener, *combo))
            place(tuple(x for x in rest if x not in taken), depth + 1)
            acc.pop()

    place(tuple(range(1, m + 1)), 0)
    return tuple(out)


def enumerate_all_partitions(m: int, ceiling: int = DEFAULT_PARTITION_CEILING) -> Iterator[SetPartition]:
    """Every partition of {1..m}, by recursive block placement.

    Element e joins each existing block in turn and then opens a new block,
    which is restricted-growth order: the single-block partition comes
    first, all singletons last.
    """
    _check_partition_size(m, ceiling)
    return _iter_partitions(m)


def _iter_partitions(m: int) -> Iterator[SetPartition]:
    blocks: list[list[int]] = []

    def extend(e: int) -> Iterator[SetPartition]:
        if e > m:
            yield SetPartition(m, tuple(tuple(b) for b in blocks))
            return
        for block in blocks:
            block.append(e)
            yield from extend(e + 1)
            block.pop()
        blocks.append([e])
        yield from extend(e + 1)
        blocks.pop()

    return extend(1)


def _link_added(c_entries: tuple[int, ...], i: int) -> int:
    """The k with (k, 1) at positions (i, i+1), or 0 when there is no link."""
    if i < 1 or i >= len(c_entries):
        return 0
    k = c_entries[i - 1]
    if k >= 1 and c_entries[i] == 1:
        return k
    return 0


def inject(p: SetPartition, i: int) -> SetPartition:
    """Map ``p`` one class up along the link adding ``i``.

    With the code of the class holding (k, 1) at positions (i, i+1) and that
    k being the m*-th nonzero from the left, the singleton block at position
    b-m* merges into the size-k block right after it (b = block count).  The
    merged block's minimum is the singleton's element.
    """
    s = class_of(p)
    c = encode(s)
    k = _link_added(c.entries, i)
    if k == 0:
        raise ValueError(f"no chain link adds {i} to class {s.literal()}")
    m_star = sum(1 for e in c.entries[:i] if e)
    b = p.block_count
    singleton = p.blocks[b - m_star - 1]
    target = p.blocks[b - m_star]
    assert len(singleton) == 1 and len(target) == k
    merged = [block for idx, block in enumerate(p.blocks)
              if idx not in (b - m_star - 1, b - m_star)]
    merged.append(tuple(sorted(singleton + target)))
    return SetPartition.of(p.m, merged)


def inject_inverse(q: SetPartition, i: int) -> Optional[SetPartition]:
    """Undo ``inject(.., i)`` when possible.

    Splits the merged block back into its minimum and the rest; returns None
    when ``q`` is not an image of inject.  The class test alone is not
    enough: when the lower class repeats a block size, the split blocks can
    re-sort into a partition of the right type that injects elsewhere
    (e.g. splitting 1,3/2 along the link adding 2 gives 1/2/3, whose image
    is 1,2/3).  The round trip is the deciding check.
    """
    s_prime = class_of(q)
    c = encode(s_prime)
    if i not in s_prime or c.entries[i] == 0:
        raise ValueError(f"class {s_prime.literal()} has no link arriving by adding {i}")
    m_star = sum(1 for e in c.entries[:i + 1] if e)
    merged = q.blocks[q.block_count - m_star]
    rebuilt = [block for block in q.blocks if block != merged]
    rebuilt.append((merged[0],))
    rebuilt.append(merged[1:])
    candidate = SetPartition.of(q.m, rebuilt)
    expected = Subset(s_prime.n, tuple(e for e in s_prime.elements if e != i))
    if class_of(candidate) != expected:
        return None
    if inject(candidate, i) != q:
        return None
    return candidate


@dataclass(frozen=True)
class PartitionChainFamily:
    """Disjoint chains in the partition lattice of {1..m}, plus the
    partitions left out by pruning."""

    m: int
    chains: tuple[tuple[SetPartition, ...], ...]
    excluded: tuple[SetPartition, ...]

    def __post_init__(self) -> None:
        for chain in self.chains:
            if not chain:
                raise ValueError("empty chain")
            for p in chain:
                if p.m != self.m:
                    raise ValueError("ground size mismatch in chain family")
        for p in self.excluded:
            if p.m != self.m:
                raise ValueError("ground size mismatch in excluded list")


def build_partition_chains(n: int, ceiling: int = DEFAULT_PARTITION_CEILING) -> PartitionChainFamily:
    """The chain family on partitions of {1..n+1}.

    Walk each subset chain bottom to top.  Every member of the bottom class
    starts a chain; across each link the chain tips move by inject, and
    class members missed by the injection start new chains at that level.
    A chain born at rank r keeps ranks r..n-r; the rest of it is excluded,
    and a chain born above the middle is excluded whole.
    """
    m = n + 1
    _check_partition_size(m, ceiling)
    boolean = gk_decomposition(n, ceiling=max(n, DEFAULT_ENUM_CEILING))
    grown: list[list[SetPartition]] = []
    excluded: list[SetPartition] = []
    for bchain in boolean.chains:
        active: list[list[SetPartition]] = [[p] for p in enumerate_class(bchain.bottom, ceiling)]
        for lo, hi in zip(bchain.sets, bchain.sets[1:]):
            (added,) = set(hi.elements) - set(lo.elements)
            images = set()
            for chain in active:
                nxt = inject(chain[-1], added)
                chain.append(nxt)
                images.add(nxt)
            for p in enumerate_class(hi, ceiling):
                if p not in images:
                    active.append([p])
        for chain in active:
            r = chain[0].rank
            if 2 * r > n:
                excluded.extend(chain)
                continue
            keep = (n - r) - r + 1
            grown.append(chain[:keep])
            excluded.extend(chain[keep:])
    grown.sort(key=lambda chain: chain[0].blocks)
    excluded.sort(key=lambda p: p.blocks)
    return PartitionChainFamily(m, tuple(tuple(c) for c in grown), tuple(excluded))


def _is_singleton_merge(lo: SetPartition, hi: SetPartition) -> bool:
    """True when ``hi`` merges exactly two blocks of ``lo``, one a singleton
    holding the merged block's minimum."""
    gone = [b for b in lo.blocks if b not in set(hi.blocks)]
    new = [b for b in hi.blocks if b not in set(lo.blocks)]
    if len(gone) != 2 or len(new) != 1:
        return False
    merged = new[0]
    if tuple(sorted(gone[0] + gone[1])) != merged:
        return False
    sizes = sorted(len(b) for b in gone)
    if sizes[0] != 1:
        return False
    singleton = gone[0] if len(gone[0]) == 1 else gone[1]
    return singleton[0] == merged[0]


def verify_partition_chains(fam: PartitionChainFamily) -> VerificationReport:
    """Check the family against everything claimed of it: disjointness,
    singleton-merge saturation, rank symmetry about n = m-1, the two
    coverage bounds (every partition with more than floor((n+1)/2) blocks,
    and every partition of rank at most floor((n-1)/2), sits in a chain),
    the full audit trail (chains plus excluded is the whole lattice), and
    the chain count matching the middle level size S(n+1, n+1-floor(n/2))."""
    from .identities import stirling_table

    m = fam.m
    n = m - 1
    failures: list[tuple[str, str]] = []
    members: set[SetPartition] = set()
    for chain in fam.chains:
        for p in chain:
            if p in members:
                failures.append(("overlap", p.literal()))
            members.add(p)
        if chain[0].rank + chain[-1].rank != n:
            failures.append(("not_symmetric", f"{chain[0].literal()} .. {chain[-1].literal()}"))
        for lo, hi in zip(chain, chain[1:]):
            if hi.rank != lo.rank + 1 or not _is_singleton_merge(lo, hi):
                failures.append(("not_saturated", f"{lo.literal()} -> {hi.literal()}"))
    for p in fam.excluded:
        if p in members:
            failures.append(("overlap", f"excluded {p.literal()}"))
    accounted = members | set(fam.excluded)
    if len(accounted) != len(members) + len(fam.excluded):
        failures.append(("overlap", "excluded list repeats a partition"))
    total = 0
    for p in enumerate_all_partitions(m, ceiling=max(m, DEFAULT_PARTITION_CEILING)):
        total += 1
        if p not in accounted:
            failures.append(("missing", p.literal()))
        covered = p in members
        if p.block_count > (n + 1) // 2 and not covered:
            failures.append(("coverage", f"{p.literal()} has {p.block_count} blocks"))
        if p.rank <= (n - 1) // 2 and not covered:
            failures.append(("coverage", f"{p.literal()} has rank {p.rank}"))
    if len(accounted) != total:
        failures.append(("missing", "family mentions partitions outside the lattice"))
    expected = stirling_table(m).value(m, m - n // 2)
    if len(fam.chains) != expected:
        failures.append(("chain_count", f"{len(fam.chains)} chains, middle level has {expected}"))
    return report(len(members), len(fam.chains), failures)


def family_to_json(fam: PartitionChainFamily) -> dict:
    return {
        "m": fam.m,
        "chains": [[[list(block) for block in p.blocks] for p in chain]
                   for chain in fam.chains],
        "excluded": [[list(block) for block in p.blocks] for p in fam.excluded],
    }


def family_from_json(obj: dict) -> PartitionChainFamily:
    try:
        m = obj["m"]
        chains = tuple(
            tuple(SetPartition(m, tuple(tuple(block) for block in p)) for p in chain)
            for chain in obj["chains"]
        )
        excluded = tuple(SetPartition(m, tuple(tuple(block) for block in p))
                         for p in obj["excluded"])
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed chain-family payload: {exc}") from exc
    return PartitionChainFamily(m, chains, excluded)


def family_to_dot(fam: PartitionChainFamily) -> str:
    """Hasse diagram of all partitions in the family; chain links solid,
    other covers dotted, excluded partitions dashed."""
    nodes = {p for chain in fam.chains for p in chain} | set(fam.excluded)
    links = {(lo, hi) for chain in fam.chains for lo, hi in zip(chain, chain[1:])}
    excluded = set(fam.excluded)
    lines = ["digraph partition_chains {", "  rankdir=BT;", "  node [shape=box];"]
    for p in sorted(nodes, key=lambda q: q.blocks):
        attr = " [style=dashed]" if p in excluded else ""
        lines.append(f'  "{p.literal()}"{attr};')
    edges = []
    for p in nodes:
        for a in range(p.block_count):
            for b in range(a + 1, p.block_count):
                up_blocks = [blk for idx, blk in enumerate(p.blocks) if idx not in (a, b)]
                up_blocks.append(tuple(sorted(p.blocks[a] + p.blocks[b])))
                up = SetPartition.of(p.m, up_blocks)
                if up in nodes:
                    style = "solid" if (p, up) in links else "dotted"
                    edges.append((p.blocks, up.blocks, f'  "{p.literal()}" -> "{up.literal()}" [style={style}];'))
    for _, _, line in sorted(edges):
        lines.append(line)
    lines.append("}")
    return "\n".join(lines)
