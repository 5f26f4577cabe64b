"""Exact minimum landmark search as a bitset cover problem.

Each candidate landmark owns a bitmask of the elements (vertex pairs or edges)
it separates; a landmark set is a generator iff the union of its masks is the
full universe. Two strategies are provided:

- ``naive``: scan subsets by increasing size, lexicographically within a size.
- ``pruned``: branch and bound on the most constrained uncovered element to
  find the minimum size, then a lexicographic walk whose every step is guarded
  by the same feasibility oracle.

Both return the same value, the same lexicographically least cover and the
same list of all minimum covers.
"""

import itertools
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, List, Optional, Set, Tuple

from .errors import BadParameter, NoGeneratorExists

logger = logging.getLogger(__name__)

STRATEGIES = ("pruned", "naive")

# Failed-state memo is dropped when it grows past this many entries.
_MEMO_LIMIT = 250_000


@dataclass(frozen=True)
class CoverProblem:
    """Candidate masks over a universe of ``n_elements`` bits."""

    masks: Tuple[int, ...]
    n_elements: int

    @property
    def universe(self) -> int:
        return (1 << self.n_elements) - 1

    @property
    def n_candidates(self) -> int:
        return len(self.masks)


@dataclass(frozen=True)
class CoverSolution:
    value: int
    first: Tuple[int, ...]
    all_covers: Optional[Tuple[Tuple[int, ...], ...]] = None


def _bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


class _Searcher:
    """Branch-and-bound state for one CoverProblem."""

    def __init__(self, problem: CoverProblem):
        self.masks = problem.masks
        self.n = problem.n_candidates
        self.universe = problem.universe
        self.full = (1 << self.n) - 1
        self.max_gain = max((m.bit_count() for m in self.masks), default=0)
        self.element_candidates: List[int] = [0] * problem.n_elements
        for c, mask in enumerate(self.masks):
            for e in _bits(mask):
                self.element_candidates[e] |= 1 << c
        self._dead: Set[Tuple[int, int, int]] = set()
        self.nodes = 0

    def after(self, c: int) -> int:
        """Candidates with index strictly greater than ``c``."""
        return self.full & ~((1 << (c + 1)) - 1)

    def coverable(self, uncovered: int, allowed: int, budget: int) -> bool:
        """Can ``uncovered`` be covered by at most ``budget`` candidates from ``allowed``?"""
        if uncovered == 0:
            return True
        if budget <= 0:
            return False
        if uncovered.bit_count() > budget * self.max_gain:
            return False
        key = (uncovered, allowed, budget)
        if key in self._dead:
            return False
        self.nodes += 1

        branch = 0
        branch_count = -1
        for e in _bits(uncovered):
            candidates = self.element_candidates[e] & allowed
            count = candidates.bit_count()
            if count == 0:
                self._remember(key)
                return False
            if branch_count < 0 or count < branch_count:
                branch, branch_count = candidates, count
                if count == 1:
                    break

        tried = 0
        for c in _bits(branch):
            bit = 1 << c
            if self.coverable(uncovered & ~self.masks[c], allowed & ~tried & ~bit, budget - 1):
                return True
            tried |= bit
        self._remember(key)
        return False

    def _remember(self, key: Tuple[int, int, int]) -> None:
        if len(self._dead) >= _MEMO_LIMIT:
            self._dead.clear()
        self._dead.add(key)

    def minimum(self) -> int:
        if not self.coverable(self.universe, self.full, self.n):
            raise NoGeneratorExists("Even the full candidate set leaves elements unseparated")
        for k in range(1, self.n + 1):
            if self.coverable(self.universe, self.full, k):
                return k
        raise NoGeneratorExists("No cover found")  # unreachable once the full set covers

    def first_cover(self, k: int, prefix: Tuple[int, ...] = ()) -> Optional[Tuple[int, ...]]:
        """Lexicographically least size-``k`` cover extending ``prefix``."""
        chosen = list(prefix)
        uncovered = self.universe
        for c in chosen:
            uncovered &= ~self.masks[c]
        start = chosen[-1] + 1 if chosen else 0
        while len(chosen) < k:
            remaining = k - len(chosen) - 1
            for c in range(start, self.n - remaining):
                rest = uncovered & ~self.masks[c]
                if self.coverable(rest, self.after(c), remaining):
                    chosen.append(c)
                    uncovered = rest
                    start = c + 1
                    break
            else:
                return None
        return tuple(chosen) if uncovered == 0 else None

    def all_covers(self, k: int, prefix: Tuple[int, ...] = ()) -> List[Tuple[int, ...]]:
        """Every size-``k`` cover extending ``prefix``, in lexicographic order."""
        uncovered = self.universe
        for c in prefix:
            uncovered &= ~self.masks[c]
        found: List[Tuple[int, ...]] = []
        self._extend(k, prefix, uncovered, found)
        return found

    def _extend(self, k: int, prefix: Tuple[int, ...], uncovered: int, found: List[Tuple[int, ...]]) -> None:
        if len(prefix) == k:
            if uncovered == 0:
                found.append(prefix)
            return
        remaining = k - len(prefix) - 1
        start = prefix[-1] + 1 if prefix else 0
        for c in range(start, self.n - remaining):
            rest = uncovered & ~self.masks[c]
            if self.coverable(rest, self.after(c), remaining):
                self._extend(k, prefix + (c,), rest, found)


def _covers_from(problem: CoverProblem, k: int, first: int, enumerate_all: bool) -> List[Tuple[int, ...]]:
    """Worker task: covers of size ``k`` whose least landmark is ``first``."""
    searcher = _Searcher(problem)
    rest = problem.universe & ~problem.masks[first]
    if not searcher.coverable(rest, searcher.after(first), k - 1):
        return []
    if enumerate_all:
        return searcher.all_covers(k, (first,))
    cover = searcher.first_cover(k, (first,))
    return [cover] if cover is not None else []


def solve_naive(problem: CoverProblem, enumerate_all: bool = False) -> CoverSolution:
    """Plain scan over subsets by size then lexicographic order."""
    universe = problem.universe
    for k in range(1, problem.n_candidates + 1):
        found: List[Tuple[int, ...]] = []
        for combo in itertools.combinations(range(problem.n_candidates), k):
            acc = 0
            for c in combo:
                acc |= problem.masks[c]
            if acc == universe:
                if not enumerate_all:
                    return CoverSolution(value=k, first=combo)
                found.append(combo)
        if found:
            return CoverSolution(value=k, first=found[0], all_covers=tuple(found))
    raise NoGeneratorExists("Even the full candidate set leaves elements unseparated")


def solve_pruned(problem: CoverProblem, enumerate_all: bool = False, workers: int = 1) -> CoverSolution:
    """Branch-and-bound search; output identical to :func:`solve_naive`.

    With ``workers > 1`` the final size is split by least landmark across a
    process pool and the partial answers are merged in landmark order, so the
    result does not depend on scheduling.
    """
    searcher = _Searcher(problem)
    k = searcher.minimum()
    logger.debug("Minimum cover size %d after %d nodes", k, searcher.nodes)

    if workers > 1 and problem.n_candidates > 1:
        firsts = range(problem.n_candidates - k + 1)
        with ProcessPoolExecutor(max_workers=workers) as executor:
            parts = list(executor.map(
                _covers_from,
                itertools.repeat(problem),
                itertools.repeat(k),
                firsts,
                itertools.repeat(enumerate_all),
            ))
        covers = [cover for part in parts for cover in part]
        if not enumerate_all:
            covers = covers[:1]
    elif enumerate_all:
        covers = searcher.all_covers(k)
    else:
        first = searcher.first_cover(k)
        covers = [first] if first is not None else []

    if not covers:
        raise NoGeneratorExists(f"No cover of size {k} found after feasibility was established")
    return CoverSolution(
        value=k,
        first=covers[0],
        all_covers=tuple(covers) if enumerate_all else None,
    )


def solve(problem: CoverProblem, enumerate_all: bool = False, strategy: str = "pruned", workers: int = 1) -> CoverSolution:
    """Dispatch to the requested strategy.

    Raises:
        BadParameter: Unknown strategy or non-positive worker count
        NoGeneratorExists: The universe cannot be covered at all
    """
    if strategy not in STRATEGIES:
        raise BadParameter(f"Unknown search strategy {strategy!r}; expected one of {STRATEGIES}")
    if workers < 1:
        raise BadParameter(f"workers must be at least 1, got {workers}")
    if strategy == "naive":
        return solve_naive(problem, enumerate_all)
    return solve_pruned(problem, enumerate_all, workers)
