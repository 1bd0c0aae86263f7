"""Steiner triple systems: representation, validation, construction, text codec."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .canon import canonical_key
from .errors import OrderInvalid, ParseError, ValidationError

Block = tuple[int, int, int]


def admissible_order(v: int) -> bool:
    return v >= 1 and v % 6 in (1, 3)


def pair_key(x: int, y: int) -> tuple[int, int]:
    return (x, y) if x < y else (y, x)


@dataclass(frozen=True)
class SteinerTripleSystem:
    """An STS(v) on points 0..v-1.

    Construct through :func:`validate_sts`; the constructor assumes the block
    list is already valid and only builds the pair index.
    """

    v: int
    blocks: tuple[Block, ...]
    pair_index: dict = field(init=False, repr=False, compare=False, hash=False)
    third: tuple = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        index = {}
        third = [[-1] * self.v for _ in range(self.v)]
        for i, (x, y, z) in enumerate(self.blocks):
            for a, b, c in ((x, y, z), (x, z, y), (y, z, x)):
                index[pair_key(a, b)] = i
                third[a][b] = third[b][a] = c
        object.__setattr__(self, "pair_index", index)
        object.__setattr__(self, "third", tuple(tuple(row) for row in third))

    def block_of(self, x: int, y: int) -> Block:
        return self.blocks[self.pair_index[pair_key(x, y)]]

    def relabel(self, perm: Sequence[int]) -> "SteinerTripleSystem":
        blocks = [tuple(sorted(perm[x] for x in b)) for b in self.blocks]
        return SteinerTripleSystem(self.v, tuple(sorted(blocks)))

    def point_masks(self) -> list[int]:
        return [sum(1 << x for x in b) for b in self.blocks]


def find_violations(v: int, blocks: Iterable[Iterable[int]]) -> list[tuple[str, object]]:
    """Every problem with ``blocks`` as an STS(v); empty when valid."""
    problems: list[tuple[str, object]] = []
    counts: dict[tuple[int, int], int] = {}
    for b in blocks:
        b = tuple(b)
        if len(b) != 3 or len(set(b)) != 3 or any(not (0 <= x < v) for x in b):
            problems.append(("BLOCK_MALFORMED", b))
            continue
        for x, y in combinations(b, 2):
            k = pair_key(x, y)
            counts[k] = counts.get(k, 0) + 1
    for x, y in combinations(range(v), 2):
        c = counts.get((x, y), 0)
        if c == 0:
            problems.append(("PAIR_UNCOVERED", frozenset((x, y))))
        elif c > 1:
            problems.append(("PAIR_DUPLICATED", frozenset((x, y))))
    return problems


def validate_sts(v: int, blocks: Iterable[Iterable[int]]) -> SteinerTripleSystem:
    """Check ``blocks`` and return the system, or raise with every violation."""
    if not admissible_order(v):
        raise OrderInvalid(f"no STS of order {v}: v must be 1 or 3 mod 6")
    blocks = [tuple(b) for b in blocks]
    problems = find_violations(v, blocks)
    if problems:
        summary = ", ".join(sorted({c for c, _ in problems}))
        raise ValidationError(f"not an STS({v}): {summary}", problems)
    return SteinerTripleSystem(v, tuple(tuple(sorted(b)) for b in blocks))


def develop_cyclic(v: int, base_blocks: Iterable[Iterable[int]]) -> list[Block]:
    """All translates of the base blocks in Z_v, without repeats."""
    seen: set[Block] = set()
    out: list[Block] = []
    for base in base_blocks:
        base = tuple(base)
        for t in range(v):
            b = tuple(sorted((x + t) % v for x in base))
            if b not in seen:
                seen.add(b)
                out.append(b)
    return out


def from_cyclic_base_blocks(v: int, base_blocks: Iterable[Iterable[int]]) -> SteinerTripleSystem:
    """Develop base blocks mod ``v``.

    A short orbit such as ``{0, v/3, 2v/3}`` must be passed explicitly; its
    duplicate translates are dropped.
    """
    if not admissible_order(v):
        raise OrderInvalid(f"no STS of order {v}")
    return validate_sts(v, develop_cyclic(v, base_blocks))


def certificate(sts: SteinerTripleSystem) -> bytes:
    """Relabeling-invariant byte string; equal iff the systems are isomorphic.

    Points are pre-colored by their Pasch-configuration counts, which are
    isomorphism invariants and split many points before any branching.
    """
    colors = pasch_counts(sts)
    return b"STS:" + canonical_key(sts.v, sts.blocks, colors)


def pasch_counts(sts: SteinerTripleSystem) -> list[int]:
    """Number of Pasch configurations (four blocks on six points) through each point."""
    counts = [0] * sts.v
    seen: set[frozenset[int]] = set()
    third = sts.third
    for b1 in range(len(sts.blocks)):
        x, a, b = sts.blocks[b1]
        for pivot, p, q in ((x, a, b), (a, x, b), (b, x, a)):
            for c in range(sts.v):
                if c in (pivot, p, q):
                    continue
                d = third[pivot][c]
                # blocks {pivot,p,q}, {pivot,c,d}, {p,c,y}, {q,d,y}
                y = third[p][c]
                if y in (pivot, q, d) or third[q][d] != y:
                    continue
                quad = frozenset(
                    (
                        sts.pair_index[pair_key(pivot, p)],
                        sts.pair_index[pair_key(pivot, c)],
                        sts.pair_index[pair_key(p, c)],
                        sts.pair_index[pair_key(q, d)],
                    )
                )
                if quad in seen:
                    continue
                seen.add(quad)
                for pt in {pivot, p, q, c, d, y}:
                    counts[pt] += 1
    return counts


# -- text format ------------------------------------------------------------


def dumps(sts: SteinerTripleSystem, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {line}" for line in comment.splitlines())
    lines.append(f"v {sts.v}")
    lines.extend(" ".join(map(str, b)) for b in sts.blocks)
    return "\n".join(lines) + "\n"


def dumps_archive(systems: Sequence[SteinerTripleSystem]) -> str:
    return "---\n".join(dumps(s) for s in systems)


def _parse_one(lines: list[tuple[int, str]]) -> SteinerTripleSystem:
    v = None
    blocks = []
    for lineno, raw in lines:
        text = raw.split("#", 1)[0].strip()
        if not text:
            continue
        parts = text.split()
        if v is None:
            if len(parts) != 2 or parts[0] != "v":
                raise ParseError(f"expected 'v <n>', got {text!r}", lineno)
            try:
                v = int(parts[1])
            except ValueError:
                raise ParseError(f"bad order {parts[1]!r}", lineno) from None
            continue
        if len(parts) != 3:
            raise ParseError(f"block needs 3 points, got {len(parts)}", lineno)
        try:
            blocks.append(tuple(int(p) for p in parts))
        except ValueError:
            raise ParseError(f"non-integer point in {text!r}", lineno) from None
    if v is None:
        raise ParseError("missing 'v <n>' header", lines[0][0] if lines else None)
    return validate_sts(v, blocks)


def _chunks(text: str) -> list[list[tuple[int, str]]]:
    chunks: list[list[tuple[int, str]]] = [[]]
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if raw.strip() == "---":
            chunks.append([])
        else:
            chunks[-1].append((lineno, raw))
    return [c for c in chunks if any(raw.split("#", 1)[0].strip() for _, raw in c)]


def loads_archive(text: str) -> list[SteinerTripleSystem]:
    """Parse one or more systems separated by ``---`` lines."""
    return [_parse_one(chunk) for chunk in _chunks(text)]


def check_archive(text: str) -> list[SteinerTripleSystem | ValidationError]:
    """Like :func:`loads_archive`, but an invalid system yields its error instead of raising.

    Syntax errors still raise :class:`ParseError`.
    """
    out: list[SteinerTripleSystem | ValidationError] = []
    for chunk in _chunks(text):
        try:
            out.append(_parse_one(chunk))
        except ValidationError as exc:
            out.append(exc)
    return out


def loads(text: str) -> SteinerTripleSystem:
    systems = loads_archive(text)
    if len(systems) != 1:
        raise ParseError(f"expected one system, found {len(systems)}")
    return systems[0]


def load_file(path) -> list[SteinerTripleSystem]:
    with open(path) as fh:
        return loads_archive(fh.read())
