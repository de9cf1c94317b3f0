"""Weight-preserving folds onto bounded-parts overpartitions and their fibers.

Two surjections land in the bounded-parts family (parts at most t, no
marked t):

* ``fold`` sends a bounded-gap overpartition there by splitting every
  part into copies of t plus a residue below t.  Writing s for the
  smallest part divided by t (rounded down) and k for the number of
  parts of size at least (s+1)*t, each of the k largest parts donates
  s+1 copies of t and the rest donate s; the leftover residues, marks
  attached, become the small parts of the image.  Residue zero parts
  disappear, dropping their mark.

* ``merge`` sends a bipartition there by pooling every t (from either
  component, marked or not) into unmarked t's and keeping the remaining
  parts of the second component as they are.

Both maps admit an explicit description of every preimage fiber.  A
bounded-parts overpartition with m copies of t has exactly 2m preimages
when all of its parts equal t and 2m + 1 otherwise, and in both cases
exactly m of the preimages carry one extra mark.  ``fold_preimages`` and
``merge_preimages`` construct the fibers directly from that description,
and :func:`verify_fiber_identity` checks the resulting weighted census
against literal enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .partitions import (
    Bipartition,
    Overpartition,
    gf_from_enumeration,
    is_bounded_gap,
    is_bounded_parts,
    iter_bounded_parts,
    stats,
)
from .qseries import QSeries, ZLaurentPoly

__all__ = [
    "NotInDomain",
    "SplitSolution",
    "solve_split",
    "fold",
    "merge",
    "PreimageReport",
    "fold_preimages",
    "merge_preimages",
    "FiberCheck",
    "verify_fiber_identity",
]


class NotInDomain(ValueError):
    """The argument is outside the map's domain family."""


class SplitSolution(NamedTuple):
    """Unique way to split ``parts`` part slots into two quotient classes.

    ``base_count`` slots get quotient ``quotient`` and ``raised_count``
    slots get ``quotient + 1`` so that the total number of donated t's
    comes out to the requested multiple count:
    base_count + raised_count = parts and
    quotient * base_count + (quotient + 1) * raised_count = multiples.
    """

    base_count: int
    raised_count: int
    quotient: int


def solve_split(parts: int, multiples: int) -> SplitSolution:
    """Solve x + y = parts, q*x + (q+1)*y = multiples with x >= 1, y >= 0.

    The solution exists and is unique for every parts >= 1 and
    multiples >= 0: take q = multiples // parts and give the remainder
    out as raised slots.
    """
    if parts < 1:
        raise ValueError("parts must be at least 1")
    if multiples < 0:
        raise ValueError("multiples must be nonnegative")
    quotient = multiples // parts
    raised = multiples - quotient * parts
    return SplitSolution(parts - raised, raised, quotient)


def fold(pi: Overpartition, t: int) -> Overpartition:
    """Fold a bounded-gap overpartition into parts of size at most t."""
    if t < 1:
        raise ValueError("the bound t must be positive")
    if not is_bounded_gap(pi, t):
        gap = pi.largest - pi.smallest
        reason = (
            f"gap {gap} exceeds {t}"
            if gap > t
            else f"largest part is marked while the gap equals {t}"
        )
        raise NotInDomain(f"{pi} is not in the bounded-gap family for t={t}: {reason}")
    info = stats(pi, t)
    s, k = info.quotient, info.raised
    flat = pi.parts()
    emitted = [(t, False)] * (s * (info.parts - k) + (s + 1) * k)
    residues = [(part - s * t, flag) for part, flag in flat[k:]]
    residues += [(part - (s + 1) * t, flag) for part, flag in flat[:k]]
    emitted.extend((value, flag) for value, flag in residues if value > 0)
    return Overpartition.from_parts(emitted)


def merge(beta: Bipartition, t: int) -> Overpartition:
    """Merge a bipartition into a single bounded-parts overpartition."""
    if beta.t != t:
        raise NotInDomain(f"bipartition bound {beta.t} does not match t={t}")
    total_t = beta.t_count + beta.second.multiplicity(t)
    pairs = [(t, False)] * total_t
    pairs.extend(
        (part, flag) for part, flag in beta.second.parts() if part != t
    )
    return Overpartition.from_parts(pairs)


@dataclass(frozen=True)
class PreimageReport:
    """A complete fiber over one bounded-parts overpartition.

    ``same_marks`` counts fiber members with exactly the image's number
    of marks and ``one_more_mark`` those with one extra; together they
    cover the fiber.
    """

    mu: Overpartition
    t: int
    fiber: tuple
    same_marks: int
    one_more_mark: int

    @property
    def expected_size(self) -> int:
        m = self.mu.multiplicity(self.t)
        return 2 * m if self.mu.num_parts == m else 2 * m + 1

    def to_json_dict(self) -> dict:
        return {
            "mu": str(self.mu),
            "t": self.t,
            "fiber": [str(member) for member in self.fiber],
            "same_overlines": self.same_marks,
            "one_more_overline": self.one_more_mark,
            "expected_size": self.expected_size,
        }


def _require_bounded_parts(mu: Overpartition, t: int) -> None:
    if t < 1:
        raise ValueError("the bound t must be positive")
    if not is_bounded_parts(mu, t):
        reason = (
            f"part {mu.largest} exceeds {t}"
            if mu.largest > t
            else f"the part {t} is marked"
        )
        raise NotInDomain(f"{mu} is not in the bounded-parts family for t={t}: {reason}")


def fold_preimages(mu: Overpartition, t: int) -> PreimageReport:
    """Every bounded-gap overpartition folding onto ``mu``.

    For each admissible preimage length the t's of ``mu`` are split into
    quotient classes by :func:`solve_split`, the non-t parts of ``mu``
    (padded with zero residues) are laid out so the raised class holds
    the smallest residues, and each slot becomes residue plus quotient
    times t.  Whenever a zero residue was used, some part of the result
    is a multiple of t and marking the first occurrence of the smallest
    such multiple gives one further preimage.  Fiber order: length
    ascending, the unmarked variant before the marked one.
    """
    _require_bounded_parts(mu, t)
    m = mu.multiplicity(t)
    residue_pool = [(part, flag) for part, flag in mu.parts() if part != t]
    r = len(residue_pool)
    first_length = r + (1 if r == 0 else 0)
    fiber = []
    for length in range(first_length, r + m + 1):
        _, raised, quotient = solve_split(length, m)
        padded = residue_pool + [(0, False)] * (length - r)
        placed = [
            (value + quotient * t, flag) for value, flag in padded[: length - raised]
        ]
        placed += [
            (value + (quotient + 1) * t, flag) for value, flag in padded[length - raised:]
        ]
        if any(part < 1 for part, _ in placed):
            raise AssertionError("fold preimage produced a nonpositive part")
        base = Overpartition.from_parts(placed)
        fiber.append(base)
        if length > r:
            multiples = [part for part, _ in placed if part % t == 0]
            target = min(multiples)
            marked_once = False
            variant = []
            for part, flag in placed:
                if part == target and not marked_once:
                    variant.append((part, True))
                    marked_once = True
                else:
                    variant.append((part, flag))
            fiber.append(Overpartition.from_parts(variant))
    base_marks = mu.num_marked
    same = sum(1 for member in fiber if member.num_marked == base_marks)
    extra = sum(1 for member in fiber if member.num_marked == base_marks + 1)
    return PreimageReport(mu, t, tuple(fiber), same, extra)


def merge_preimages(mu: Overpartition, t: int) -> PreimageReport:
    """Every bipartition merging onto ``mu``.

    The t's of ``mu`` are distributed between the two components; the
    second component must stay nonempty, and marking its leading t (when
    it has one) gives the extra-mark variants.  Fiber order: second
    component's t-count ascending, unmarked variant first.
    """
    _require_bounded_parts(mu, t)
    m = mu.multiplicity(t)
    remainder = [(part, flag) for part, flag in mu.parts() if part != t]
    fiber = []
    if not remainder:
        for in_second in range(1, m + 1):
            plain = [(t, False)] * in_second
            fiber.append(Bipartition(t, m - in_second, Overpartition.from_parts(plain)))
            marked = [(t, True)] + [(t, False)] * (in_second - 1)
            fiber.append(Bipartition(t, m - in_second, Overpartition.from_parts(marked)))
    else:
        for in_second in range(m + 1):
            plain = [(t, False)] * in_second + remainder
            fiber.append(Bipartition(t, m - in_second, Overpartition.from_parts(plain)))
            if in_second >= 1:
                marked = [(t, True)] + [(t, False)] * (in_second - 1) + remainder
                fiber.append(
                    Bipartition(t, m - in_second, Overpartition.from_parts(marked))
                )
    base_marks = mu.num_marked
    same = sum(1 for member in fiber if member.num_marked == base_marks)
    extra = sum(1 for member in fiber if member.num_marked == base_marks + 1)
    return PreimageReport(mu, t, tuple(fiber), same, extra)


@dataclass(frozen=True)
class FiberCheck:
    """Outcome of :func:`verify_fiber_identity`."""

    which: str
    t: int
    max_n: int
    passed: bool
    images_checked: int
    first_failure: str | None

    def to_json_dict(self) -> dict:
        return {
            "which": self.which,
            "t": self.t,
            "max_n": self.max_n,
            "pass": self.passed,
            "images_checked": self.images_checked,
            "first_failure": self.first_failure,
        }


def verify_fiber_identity(t: int, max_n: int, which: str = "fold") -> FiberCheck:
    """Check the constructed fibers against literal enumeration.

    Per image mu with m copies of t, the fiber's mark census must equal
    (delta + (1 + z) * m) * z^(marks of mu) where delta is 0 when mu
    consists of t's only and 1 otherwise; every fiber member must map
    back onto mu; and the aggregate census over all images up to weight
    ``max_n`` must reproduce the generating function of the map's domain
    family computed by enumeration.
    """
    if which not in ("fold", "merge"):
        raise ValueError("which must be 'fold' or 'merge'")
    preimages = fold_preimages if which == "fold" else merge_preimages
    apply_map = fold if which == "fold" else merge
    aggregate: dict[int, ZLaurentPoly] = {}
    checked = 0
    failure = None
    for n in range(1, max_n + 1):
        for mu in iter_bounded_parts(t, n):
            checked += 1
            report = preimages(mu, t)
            census = ZLaurentPoly.zero()
            for member in report.fiber:
                census = census + ZLaurentPoly.monomial(1, member.num_marked)
                if apply_map(member, t) != mu:
                    failure = f"{member} does not map onto {mu}"
                    break
            if failure:
                break
            m = mu.multiplicity(t)
            delta = 0 if mu.num_parts == m else 1
            expected = ZLaurentPoly({0: delta + m, 1: m}) * ZLaurentPoly.monomial(
                1, mu.num_marked
            )
            if census != expected:
                failure = f"fiber census over {mu} is {census}, expected {expected}"
                break
            if len(report.fiber) != report.expected_size:
                failure = (
                    f"fiber over {mu} has {len(report.fiber)} members, "
                    f"expected {report.expected_size}"
                )
                break
            if len(set(report.fiber)) != len(report.fiber):
                failure = f"fiber over {mu} has repeated members"
                break
            current = aggregate.get(n, ZLaurentPoly.zero())
            aggregate[n] = current + census
        if failure:
            break
    if failure is None:
        domain_family = "bounded_gap" if which == "fold" else "bipartition"
        lhs = QSeries.from_terms(aggregate, max_n + 1)
        rhs = gf_from_enumeration(domain_family, t, max_n)
        if not lhs.eq_up_to(rhs, max_n + 1):
            failure = (
                f"aggregated fiber census disagrees with the {domain_family} "
                f"enumeration for t={t} up to weight {max_n}"
            )
    return FiberCheck(which, t, max_n, failure is None, checked, failure)
