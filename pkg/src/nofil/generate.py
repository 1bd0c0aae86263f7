"""Randomized hill climbing for Steiner triple systems.

The climber keeps a partial triple system. Each step takes a live point x
(one with an uncovered pair) of minimum degree, two uncovered partners y and
z of x, and adds {x, y, z}; if {y, z} is already covered, the block holding
it is removed first. Blocks marked fixed are never removed, which lets the
same routine complete a prescribed partial system.

Randomness comes from :class:`random.Random` (Mersenne Twister) seeded with
the caller's integer seed, so runs reproduce across platforms.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .errors import OrderInvalid, Timeout, ValidationError
from .exactcover import exact_cover
from .sts import SteinerTripleSystem, admissible_order, certificate, pair_key, validate_sts

EXACT_COVER_THRESHOLD = 60
EXACT_COVER_NODES = 20_000


def default_max_steps(v: int) -> int:
    return 100 * v * v


def default_stall_steps(v: int) -> int:
    return 10 * v * v


class _Climber:
    def __init__(self, v: int, fixed: Sequence[tuple[int, int, int]]):
        self.v = v
        self.fixed = [tuple(sorted(b)) for b in fixed]
        self.fixed_set = set(self.fixed)
        self.reset()

    def reset(self) -> None:
        v = self.v
        self.third = [[-1] * v for _ in range(v)]
        self.free: list[set[int]] = [set(range(v)) - {x} for x in range(v)]
        self.blocks: set[tuple[int, int, int]] = set()
        self.uncovered = v * (v - 1) // 2
        for b in self.fixed:
            self._add(b)

    def _add(self, b) -> None:
        x, y, z = b
        for a, c, d in ((x, y, z), (x, z, y), (y, z, x)):
            self.third[a][c] = self.third[c][a] = d
            self.free[a].discard(c)
            self.free[c].discard(a)
        self.blocks.add(b)
        self.uncovered -= 3

    def _remove(self, b) -> None:
        x, y, z = b
        for a, c in ((x, y), (x, z), (y, z)):
            self.third[a][c] = self.third[c][a] = -1
            self.free[a].add(c)
            self.free[c].add(a)
        self.blocks.discard(b)
        self.uncovered += 3

    def step(self, rng: random.Random) -> None:
        # degree is (v-1) - |free|, so minimum degree = most uncovered pairs
        most = max(len(f) for f in self.free)
        x = rng.choice([x for x in range(self.v) if len(self.free[x]) == most])
        partners = sorted(self.free[x])
        if len(partners) < 2:
            return
        y, z = rng.sample(partners, 2)
        w = self.third[y][z]
        if w != -1:
            old = tuple(sorted((y, z, w)))
            if old in self.fixed_set:
                return
            self._remove(old)
        self._add(tuple(sorted((x, y, z))))

    def try_exact_cover(self, max_nodes: int) -> bool:
        pairs = [(x, y) for x in range(self.v) for y in self.free[x] if x < y]
        rows = {}
        for x, y in pairs:
            for z in self.free[x] & self.free[y]:
                if z > y:
                    rows[(x, y, z)] = [(x, y), (x, z), (y, z)]
        cover = exact_cover(pairs, rows, max_nodes=max_nodes)
        if cover is None:
            return False
        for b in cover:
            self._add(b)
        return True


def _check_fixed(v: int, fixed: Iterable[Iterable[int]]) -> list[tuple[int, int, int]]:
    blocks = []
    seen: dict[tuple[int, int], tuple] = {}
    for b in fixed:
        b = tuple(sorted(b))
        if len(b) != 3 or len(set(b)) != 3 or not all(0 <= x < v for x in b):
            raise ValidationError(f"malformed fixed triple {b}", [("BLOCK_MALFORMED", b)])
        for x, y in combinations(b, 2):
            k = pair_key(x, y)
            if k in seen:
                raise ValidationError(
                    f"fixed triples {seen[k]} and {b} share the pair {k}",
                    [("PAIR_DUPLICATED", frozenset(k))],
                )
            seen[k] = b
        blocks.append(b)
    return blocks


def complete_to_sts(
    v: int,
    fixed: Iterable[Iterable[int]] = (),
    seed: int = 0,
    budget: int | None = None,
    exact_threshold: int = EXACT_COVER_THRESHOLD,
    exact_nodes: int = EXACT_COVER_NODES,
    stall_steps: int | None = None,
) -> SteinerTripleSystem:
    """Extend edge-disjoint ``fixed`` triples to an STS(v), never dropping them.

    Once at most ``exact_threshold`` pairs remain uncovered (at a new record
    low), an exact-cover search with ``exact_nodes`` nodes tries to finish.
    The climb restarts from the fixed triples after ``stall_steps`` steps
    without a new record. Raises :class:`Timeout` after ``budget`` steps.
    """
    if not admissible_order(v) or v < 3:
        raise OrderInvalid(f"no STS of order {v}")
    fixed_blocks = _check_fixed(v, fixed)
    budget = default_max_steps(v) if budget is None else budget
    stall_steps = default_stall_steps(v) if stall_steps is None else stall_steps
    rng = random.Random(seed)
    climber = _Climber(v, fixed_blocks)
    best = climber.uncovered
    since_best = 0
    for _ in range(budget):
        if climber.uncovered == 0:
            break
        climber.step(rng)
        if climber.uncovered < best:
            best = climber.uncovered
            since_best = 0
            if 0 < best <= exact_threshold and climber.try_exact_cover(exact_nodes):
                break
        else:
            since_best += 1
            if since_best >= stall_steps:
                climber.reset()
                best = climber.uncovered
                since_best = 0
    if climber.uncovered != 0:
        raise Timeout(f"no STS({v}) after {budget} steps (seed {seed})")
    return validate_sts(v, sorted(climber.blocks))


def hill_climb_sts(v: int, seed: int = 0, max_steps: int | None = None) -> SteinerTripleSystem:
    """A random STS(v); deterministic for a given ``(v, seed, max_steps)``."""
    if not admissible_order(v) or v < 7:
        raise OrderInvalid(f"hill climbing needs v >= 7 with v = 1, 3 mod 6 (got {v})")
    return complete_to_sts(v, (), seed, max_steps)


@dataclass
class Batch:
    systems: list[SteinerTripleSystem] = field(default_factory=list)
    attempts: int = 0
    exhausted: bool = False


def generate_distinct(
    v: int,
    count: int,
    seed: int = 0,
    max_attempts: int | None = None,
    max_steps: int | None = None,
) -> Batch:
    """Hill-climb until ``count`` pairwise non-isomorphic systems are found.

    Stops early with ``exhausted=True`` after ``max_attempts`` climbs
    (default ``50 * count + 50``).
    """
    if not admissible_order(v) or v < 7:
        raise OrderInvalid(f"hill climbing needs v >= 7 with v = 1, 3 mod 6 (got {v})")
    max_attempts = 50 * count + 50 if max_attempts is None else max_attempts
    master = random.Random(seed)
    batch = Batch()
    seen: set[bytes] = set()
    while len(batch.systems) < count:
        if batch.attempts >= max_attempts:
            batch.exhausted = True
            break
        batch.attempts += 1
        sub = master.getrandbits(64)
        try:
            sts = hill_climb_sts(v, sub, max_steps)
        except Timeout:
            continue
        cert = certificate(sts)
        if cert not in seen:
            seen.add(cert)
            batch.systems.append(sts)
    return batch
