"""Algorithm X over dict-of-sets columns, with a node budget."""

from __future__ import annotations

from typing import Hashable, Iterator, Mapping, Sequence


class _Budget(Exception):
    pass


def exact_cover(
    columns: Sequence[Hashable],
    rows: Mapping[Hashable, Sequence[Hashable]],
    max_nodes: int | None = None,
) -> list | None:
    """Return one set of row keys covering every column exactly once.

    Returns None when no cover exists or the node budget runs out.
    """
    cols: dict = {c: set() for c in columns}
    for r, cs in rows.items():
        if any(c not in cols for c in cs):
            continue
        for c in cs:
            cols[c].add(r)
    rows = {r: cs for r, cs in rows.items() if all(c in cols for c in cs)}
    nodes = [0]
    try:
        for sol in _solve(cols, rows, [], nodes, max_nodes):
            return list(sol)
    except _Budget:
        return None
    return None


def _solve(cols, rows, partial, nodes, max_nodes) -> Iterator[list]:
    if not cols:
        yield partial
        return
    nodes[0] += 1
    if max_nodes is not None and nodes[0] > max_nodes:
        raise _Budget
    c = min(cols, key=lambda k: (len(cols[k]), repr(k)))
    for r in sorted(cols[c], key=repr):
        partial.append(r)
        removed = _select(cols, rows, r)
        yield from _solve(cols, rows, partial, nodes, max_nodes)
        _deselect(cols, rows, r, removed)
        partial.pop()


def _select(cols, rows, r):
    removed = []
    for j in rows[r]:
        for i in cols[j]:
            for k in rows[i]:
                if k != j:
                    cols[k].remove(i)
        removed.append(cols.pop(j))
    return removed


def _deselect(cols, rows, r, removed):
    for j in reversed(rows[r]):
        cols[j] = removed.pop()
        for i in cols[j]:
            for k in rows[i]:
                if k != j:
                    cols[k].add(i)
