"""Overpartitions, the bounded-difference families, and literal enumeration.

An overpartition is a weakly decreasing sequence of positive parts in
which the first occurrence of each distinct part size may carry an
overline mark.  The canonical representation here is a tuple of runs
``(part, multiplicity, marked)`` with strictly decreasing part sizes, so
"at most one mark per size, on the first occurrence" holds structurally.

Three families recur throughout, all relative to a positive bound t:

* bounded gap: nonempty overpartitions whose largest and smallest parts
  differ by at most t, where the largest part is unmarked whenever the
  difference is exactly t;
* bounded parts: nonempty overpartitions with every part at most t and
  no marked part equal to t;
* bipartitions: pairs of a multiset of unmarked t's (possibly empty) and
  a nonempty overpartition with parts at most t (a marked t is allowed).

Generating functions produced by this module are computed by visiting
every member object, never from a closed form, so they can serve as
independent cross-checks for the series builders in :mod:`qseries`.
"""

from __future__ import annotations

import re
from typing import Iterator, NamedTuple

from .qseries import QSeries, ZLaurentPoly

__all__ = [
    "InvalidPartition",
    "Overpartition",
    "Bipartition",
    "parse_overpartition",
    "parse_bipartition",
    "is_bounded_gap",
    "is_bounded_parts",
    "Stats",
    "stats",
    "iter_overpartitions",
    "iter_bounded_gap",
    "iter_bounded_parts",
    "iter_bipartitions",
    "gf_from_enumeration",
    "enumerated_bounded_gap_gf",
]


class InvalidPartition(ValueError):
    """Raised for text or constructor input that is not a valid overpartition."""


class Overpartition:
    """Canonical overpartition stored as runs of equal parts.

    ``runs`` is a tuple of ``(part, multiplicity, marked)`` triples with
    strictly decreasing positive parts and positive multiplicities; the
    mark flag says whether the first part of the run is overlined.
    """

    __slots__ = ("runs",)

    def __init__(self, runs):
        runs = tuple((int(p), int(m), bool(o)) for p, m, o in runs)
        if not runs:
            raise InvalidPartition("overpartitions here are nonempty")
        previous = None
        for part, mult, _ in runs:
            if part < 1 or mult < 1:
                raise InvalidPartition(f"bad run ({part}, {mult}): need part, mult >= 1")
            if previous is not None and part >= previous:
                raise InvalidPartition("run part sizes must strictly decrease")
            previous = part
        self.runs = runs

    @classmethod
    def _trusted(cls, runs: tuple[tuple[int, int, bool], ...]) -> "Overpartition":
        # enumeration fast path: caller guarantees canonical runs
        obj = object.__new__(cls)
        obj.runs = runs
        return obj

    @classmethod
    def from_parts(cls, parts) -> "Overpartition":
        """Build from (part, marked) pairs in any order.

        At most one occurrence of each size may be marked; the mark is
        normalised onto the first occurrence of that size.
        """
        counts: dict[int, int] = {}
        marked: dict[int, int] = {}
        for part, flag in parts:
            part = int(part)
            counts[part] = counts.get(part, 0) + 1
            if flag:
                marked[part] = marked.get(part, 0) + 1
        for part, n_marked in marked.items():
            if n_marked > 1:
                raise InvalidPartition(f"part {part} marked more than once")
        return cls(
            (part, counts[part], part in marked)
            for part in sorted(counts, reverse=True)
        )

    # -- statistics ----------------------------------------------------

    @property
    def weight(self) -> int:
        return sum(p * m for p, m, _ in self.runs)

    @property
    def num_parts(self) -> int:
        return sum(m for _, m, _ in self.runs)

    @property
    def num_marked(self) -> int:
        return sum(1 for _, _, o in self.runs if o)

    @property
    def largest(self) -> int:
        return self.runs[0][0]

    @property
    def smallest(self) -> int:
        return self.runs[-1][0]

    @property
    def largest_marked(self) -> bool:
        return self.runs[0][2]

    def multiplicity(self, part: int) -> int:
        for p, m, _ in self.runs:
            if p == part:
                return m
            if p < part:
                return 0
        return 0

    def is_marked(self, part: int) -> bool:
        for p, _, o in self.runs:
            if p == part:
                return o
            if p < part:
                return False
        return False

    def parts(self) -> list[tuple[int, bool]]:
        """Expanded (part, marked) list, marks on first occurrences."""
        out = []
        for part, mult, flag in self.runs:
            out.append((part, flag))
            out.extend((part, False) for _ in range(mult - 1))
        return out

    def validate(self) -> None:
        """Re-run the constructor checks; useful on trusted-path objects."""
        Overpartition(self.runs)

    # -- value semantics -------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Overpartition):
            return NotImplemented
        return self.runs == other.runs

    def __hash__(self) -> int:
        return hash(self.runs)

    def __str__(self) -> str:
        bits = []
        for part, mult, flag in self.runs:
            bits.append(f"{part}~" if flag else str(part))
            bits.extend(str(part) for _ in range(mult - 1))
        return ",".join(bits)

    def __repr__(self) -> str:
        return f"Overpartition({str(self)!r})"


class Bipartition:
    """A block of unmarked t's together with an overpartition into parts <= t.

    The first component records only how many copies of t it holds; the
    second is nonempty and may mark any of its sizes, including t.
    """

    __slots__ = ("t", "t_count", "second")

    def __init__(self, t: int, t_count: int, second: Overpartition):
        t = int(t)
        t_count = int(t_count)
        if t < 1:
            raise InvalidPartition("the part bound t must be positive")
        if t_count < 0:
            raise InvalidPartition("t_count must be nonnegative")
        if second.largest > t:
            raise InvalidPartition(
                f"second component has part {second.largest} above the bound {t}"
            )
        self.t = t
        self.t_count = t_count
        self.second = second

    @property
    def weight(self) -> int:
        return self.t * self.t_count + self.second.weight

    @property
    def num_marked(self) -> int:
        return self.second.num_marked

    def __eq__(self, other) -> bool:
        if not isinstance(other, Bipartition):
            return NotImplemented
        return (
            self.t == other.t
            and self.t_count == other.t_count
            and self.second == other.second
        )

    def __hash__(self) -> int:
        return hash((self.t, self.t_count, self.second))

    def __str__(self) -> str:
        return f"[{self.t}^{self.t_count} | {self.second}]"

    def __repr__(self) -> str:
        return f"Bipartition({str(self)!r})"


_PART_TOKEN = re.compile(r"^(\d+)(~?)$")
_BIPART_SHAPE = re.compile(r"^\[\s*(\d+)\^(\d+)\s*\|\s*(.*?)\s*\]$")


def parse_overpartition(text: str) -> Overpartition:
    """Parse comma-separated parts where a ``~`` suffix marks a part.

    Parts must be weakly decreasing.  A mark may sit on any one
    occurrence of a size and is normalised to the first; two marks on
    the same size are rejected.
    """
    tokens = [tok.strip() for tok in text.strip().split(",")]
    if tokens == [""]:
        raise InvalidPartition("empty overpartition text")
    pairs = []
    previous = None
    for token in tokens:
        match = _PART_TOKEN.match(token)
        if not match:
            raise InvalidPartition(f"bad part token {token!r}")
        part = int(match.group(1))
        if part < 1:
            raise InvalidPartition("parts must be positive")
        if previous is not None and part > previous:
            raise InvalidPartition("parts must be weakly decreasing")
        previous = part
        pairs.append((part, match.group(2) == "~"))
    return Overpartition.from_parts(pairs)


def parse_bipartition(text: str) -> Bipartition:
    """Parse the ``[t^count | parts]`` form, e.g. ``[3^1 | 3,3,1~,1]``."""
    match = _BIPART_SHAPE.match(text.strip())
    if not match:
        raise InvalidPartition(f"bad bipartition text {text!r}")
    t = int(match.group(1))
    count = int(match.group(2))
    return Bipartition(t, count, parse_overpartition(match.group(3)))


# -- membership predicates ---------------------------------------------------


def is_bounded_gap(pi: Overpartition, t: int) -> bool:
    """Largest minus smallest part at most t; largest unmarked at exactly t."""
    gap = pi.largest - pi.smallest
    if gap > t:
        return False
    if gap == t and pi.largest_marked:
        return False
    return True


def is_bounded_parts(pi: Overpartition, t: int) -> bool:
    """Every part at most t and no marked part equal to t."""
    if pi.largest > t:
        return False
    return not (pi.largest == t and pi.largest_marked)


class Stats(NamedTuple):
    """Shape statistics controlling the fold construction in :mod:`maps`.

    quotient is the smallest part divided by t, rounded down; raised
    counts the parts of size at least (quotient + 1) * t.
    """

    parts: int
    marked: int
    t_multiplicity: int
    quotient: int
    raised: int


def stats(pi: Overpartition, t: int) -> Stats:
    quotient = pi.smallest // t
    threshold = (quotient + 1) * t
    raised = sum(m for p, m, _ in pi.runs if p >= threshold)
    return Stats(pi.num_parts, pi.num_marked, pi.multiplicity(t), quotient, raised)


# -- enumeration --------------------------------------------------------------


def _shapes(remaining: int, cap: int):
    """Partition shapes of ``remaining`` with parts at most ``cap``.

    Yields tuples of (part, multiplicity) runs, largest part first, in
    decreasing lexicographic order of the expanded part lists.
    """
    if remaining == 0:
        yield ()
        return
    top = min(cap, remaining)
    for part in range(top, 0, -1):
        for mult in range(remaining // part, 0, -1):
            for rest in _shapes(remaining - part * mult, part - 1):
                yield ((part, mult),) + rest


def iter_overpartitions(n: int, max_part: int | None = None) -> Iterator[Overpartition]:
    """All overpartitions of weight n, every member constructed explicitly.

    Order is deterministic: shapes in decreasing lexicographic order,
    and for each shape the 2^d mark patterns (d distinct sizes) counted
    in binary with the largest size as the least significant bit, so the
    unmarked copy always precedes its marked variants.
    """
    if n < 1:
        return
    cap = n if max_part is None else min(max_part, n)
    for shape in _shapes(n, cap):
        d = len(shape)
        variants = [((p, m, False), (p, m, True)) for p, m in shape]
        for mask in range(1 << d):
            yield Overpartition._trusted(
                tuple(variants[i][(mask >> i) & 1] for i in range(d))
            )


def iter_bounded_gap(t: int, n: int) -> Iterator[Overpartition]:
    """Members of the bounded-gap family of weight n.

    Equal to filtering :func:`iter_overpartitions` by
    :func:`is_bounded_gap`, in the same order.
    """
    for pi in iter_overpartitions(n):
        if is_bounded_gap(pi, t):
            yield pi


def iter_bounded_parts(t: int, n: int) -> Iterator[Overpartition]:
    """Members of the bounded-parts family of weight n.

    Equal to filtering :func:`iter_overpartitions` by
    :func:`is_bounded_parts`, in the same order; implemented by bounding
    the shapes directly, which preserves that order.
    """
    for pi in iter_overpartitions(n, max_part=t):
        if not (pi.largest == t and pi.largest_marked):
            yield pi


def iter_bipartitions(t: int, n: int) -> Iterator[Bipartition]:
    """All bipartitions of weight n for the bound t, t_count ascending."""
    if n < 1:
        return
    for count in range((n - 1) // t + 1):
        for second in iter_overpartitions(n - t * count, max_part=t):
            yield Bipartition(t, count, second)


_FAMILIES = ("bounded_gap", "bounded_parts", "bipartition")


def gf_from_enumeration(family: str, t: int, max_n: int) -> QSeries:
    """Sum of z^(marks) * q^(weight) over one family, weights 1..max_n.

    The result has order ``max_n + 1``.  Every coefficient is obtained
    by literally iterating the family members.
    """
    if family not in _FAMILIES:
        raise ValueError(f"family must be one of {_FAMILIES}, got {family!r}")
    terms: dict[int, dict[int, int]] = {}
    for n in range(1, max_n + 1):
        row: dict[int, int] = {}
        if family == "bounded_gap":
            members = iter_bounded_gap(t, n)
        elif family == "bounded_parts":
            members = iter_bounded_parts(t, n)
        else:
            members = iter_bipartitions(t, n)
        for member in members:
            o = member.num_marked
            row[o] = row.get(o, 0) + 1
        if row:
            terms[n] = row
    return QSeries.from_terms(
        {n: ZLaurentPoly(row) for n, row in terms.items()}, max_n + 1
    )


def enumerated_bounded_gap_gf(ts, max_n: int) -> dict[int, QSeries]:
    """Bounded-gap generating functions for several bounds in one sweep.

    Visits every overpartition of weight up to ``max_n`` exactly once:
    for each shape all 2^d mark patterns are walked individually, and
    each visited member is tallied into the census of every bound it
    belongs to.  Returns, per bound, the same series
    :func:`gf_from_enumeration` would produce.
    """
    ts = sorted(set(int(t) for t in ts))
    if ts and ts[0] < 1:
        raise ValueError("bounds must be positive")
    tables: dict[int, dict[int, dict[int, int]]] = {t: {} for t in ts}
    for n in range(1, max_n + 1):
        for shape in _shapes(n, n):
            d = len(shape)
            gap = shape[0][0] - shape[-1][0]
            hist = [0] * (d + 1)
            hist_unmarked_top = [0] * (d + 1)
            for mask in range(1 << d):
                o = mask.bit_count()
                hist[o] += 1
                if not mask & 1:
                    hist_unmarked_top[o] += 1
            for t in ts:
                if gap < t:
                    add = hist
                elif gap == t:
                    add = hist_unmarked_top
                else:
                    continue
                row = tables[t].setdefault(n, {})
                for o, count in enumerate(add):
                    if count:
                        row[o] = row.get(o, 0) + count
    return {
        t: QSeries.from_terms(
            {n: ZLaurentPoly(row) for n, row in table.items()}, max_n + 1
        )
        for t, table in tables.items()
    }
