"""Bounds on the forbidden detour number.

The upper bounds come from a constructive unknotting procedure: pick a
chord ``A`` and a side of the circle cut at its endpoints holding ``a``
heads and ``b`` tails of other chords, sweep every head out across the
tail of ``A`` (at most ``b + 1`` Fd moves each), slide the head of ``A``
across the remaining ``b`` tails, then delete ``A`` with R1. The lower
bound is half the l1 norm of the affine index polynomial divided by
``t - 1``.
"""
from __future__ import annotations

import collections
from dataclasses import asdict, dataclass, field

from .diagram import GaussDiagram, Role, canonical_key, serialize
from .invariants import quotient_coefficients
from .moves import (
    REMOVALS,
    SEARCH_KINDS,
    MoveKind,
    MoveRecord,
    MoveTrace,
    apply_fd,
    apply_move,
    apply_r1_remove,
    enumerate_moves,
    r1_position,
)


def closed_form_upper(c: int) -> int:
    """Worst-case Fd count of the unknotting procedure on ``c`` crossings."""
    if c < 0:
        raise ValueError("c must be non-negative")
    if c == 0:
        return 0
    if c % 2:
        num = (c - 1) * (2 * c * c + 11 * c - 3)
    else:
        num = c * (2 * c * c + 9 * c - 14)
    assert num % 24 == 0, f"closed form not integral at c={c}"
    return num // 24


def stage_bound(c: int) -> int:
    """Largest ``a + b + ab`` with ``a + b <= c - 1``."""
    return (c - 1) + (c - 1) ** 2 // 4 if c > 0 else 0


def summation_upper(c: int) -> int:
    return sum((k - 1) ** 2 // 4 + k - 1 for k in range(1, c + 1))


@dataclass(frozen=True)
class StageReport:
    chord_removed: int
    a: int
    b: int
    fd_used: int
    c_at_stage: int
    side: str  # "arc": tail->head of A, "complement": head->tail

    @property
    def bound(self) -> int:
        return self.a * (self.b + 1) + self.b


def _side_counts(d: GaussDiagram, start: int, stop: int) -> tuple[int, int]:
    """(heads, tails) strictly between positions ``start`` and ``stop``."""
    n = len(d)
    heads = tails = 0
    j = (start + 1) % n
    while j != stop:
        if d.endpoints[j].role is Role.HEAD:
            heads += 1
        else:
            tails += 1
        j = (j + 1) % n
    return heads, tails


def choose_chord(d: GaussDiagram) -> tuple[int, str, int, int]:
    """Chord and side minimizing ``a + b + ab`` subject to ``a + b <= c - 1``.

    Ties go to the smaller chord id, then to the tail->head arc.
    """
    c = d.n_chords
    best = None
    for chord in d.chords:
        tail, head = d.positions(chord)
        for rank, side, (a, b) in ((0, "arc", _side_counts(d, tail, head)),
                                   (1, "complement", _side_counts(d, head, tail))):
            if a + b > c - 1:
                continue
            key = (a + b + a * b, chord, rank)
            if best is None or key < best[0]:
                best = (key, chord, side, a, b)
    assert best is not None
    _, chord, side, a, b = best
    return chord, side, a, b


def unknot(d: GaussDiagram) -> tuple[MoveTrace, list[StageReport]]:
    """Reduce ``d`` to the empty diagram with Fd and R1 moves."""
    records: list[MoveRecord] = []
    stages: list[StageReport] = []
    cur = d

    def fd(i: int) -> None:
        nonlocal cur
        n = len(cur)
        records.append(MoveRecord(MoveKind.FD, (i,), (cur.endpoints[i].chord, cur.endpoints[(i + 1) % n].chord)))
        cur = apply_fd(cur, i)

    def r1(chord: int) -> None:
        nonlocal cur
        records.append(MoveRecord(MoveKind.R1_REMOVE, (r1_position(cur, chord),), (chord,)))
        cur = apply_r1_remove(cur, chord)

    while not cur.is_empty():
        c = cur.n_chords
        A, side, a, b = choose_chord(cur)
        # moving toward A's tail is backward along the tail->head arc
        step = -1 if side == "arc" else 1
        before = len(records)

        while True:
            n = len(cur)
            tail, head = cur.positions(A)
            # nearest head to A's tail on the chosen side
            j = tail
            pos = None
            while True:
                j = (j - step) % n
                if j == head:
                    break
                if cur.endpoints[j].role is Role.HEAD:
                    pos = j
                    break
            if pos is None:
                break
            mover = cur.endpoints[pos].chord
            while True:
                n = len(cur)
                nxt = (pos + step) % n
                i = pos if step == 1 else nxt
                other = cur.endpoints[nxt]
                # a chord nested inside the chosen side would have been chosen itself
                assert other.chord != mover, "side is not minimal"
                fd(i)
                if other.chord == A:
                    break
                pos = nxt

        while True:
            n = len(cur)
            _, head = cur.positions(A)
            nxt = (head + step) % n
            if cur.endpoints[nxt].chord == A:
                break
            fd(head if step == 1 else nxt)
        r1(A)

        used = sum(1 for r in records[before:] if r.kind is MoveKind.FD)
        stages.append(StageReport(A, a, b, used, c, side))

    return MoveTrace(d, tuple(records)), stages


def lower_bound(d: GaussDiagram) -> int:
    """Ceiling of half the l1 norm of P / (t - 1)."""
    return (quotient_coefficients(d).l1_norm() + 1) // 2


def bfs_search(d: GaussDiagram, max_fd: int) -> MoveTrace | None:
    """Trace with fewest Fd moves reaching the empty diagram.

    Fd costs 1 and R1/R2 removals cost 0 (0-1 BFS over diagrams up to
    rotation and relabeling). Insertions are not searched, so the result
    is an upper bound on the forbidden detour number of the knot. Returns
    None when more than ``max_fd`` Fd moves would be needed.
    """
    if max_fd < 0:
        return None
    start_key = canonical_key(d)
    dist = {start_key: 0}
    rep = {start_key: d}
    parent: dict[tuple, tuple[tuple, MoveRecord] | None] = {start_key: None}
    done = set()
    queue = collections.deque([start_key])
    while queue:
        key = queue.popleft()
        if key in done:
            continue
        done.add(key)
        cost = dist[key]
        cur = rep[key]
        if cur.is_empty():
            records = []
            while parent[key] is not None:
                key, rec = parent[key]
                records.append(rec)
            return MoveTrace(d, tuple(reversed(records)))
        for rec in enumerate_moves(cur, SEARCH_KINDS):
            w = 0 if rec.kind in REMOVALS else 1
            if cost + w > max_fd:
                continue
            nxt = apply_move(cur, rec)
            nkey = canonical_key(nxt)
            if nkey in done or dist.get(nkey, max_fd + 1) <= cost + w:
                continue
            dist[nkey] = cost + w
            rep[nkey] = nxt
            parent[nkey] = (key, rec)
            if w == 0:
                queue.appendleft(nkey)
            else:
                queue.append(nkey)
    return None


def bfs_min_fd(d: GaussDiagram, max_fd: int) -> int | None:
    trace = bfs_search(d, max_fd)
    return None if trace is None else trace.fd_count


@dataclass(frozen=True)
class BoundsReport:
    lower: int
    algorithmic_upper: int
    closed_form_upper: int
    search_upper: int | None = None
    exact: int | None = None
    code: str = ""
    stages: tuple[StageReport, ...] = field(default=(), repr=False)

    @property
    def upper(self) -> int:
        if self.search_upper is None:
            return self.algorithmic_upper
        return min(self.algorithmic_upper, self.search_upper)

    def to_dict(self) -> dict:
        out = asdict(self)
        out.pop("stages")
        out["interval"] = [self.lower, self.upper]
        return out

    def render(self) -> str:
        lines = [
            f"code: {self.code}",
            f"lower: {self.lower}",
            f"algorithmic_upper: {self.algorithmic_upper}",
            f"closed_form_upper: {self.closed_form_upper}",
        ]
        if self.search_upper is not None:
            lines.append(f"search_upper: {self.search_upper}")
        if self.exact is not None:
            lines.append(f"exact: {self.exact}")
        else:
            lines.append(f"exact: unknown, Fd in [{self.lower}, {self.upper}]")
        return "\n".join(lines)


def report(d: GaussDiagram, search: bool = False, max_fd: int | None = None) -> BoundsReport:
    trace, stages = unknot(d)
    lower = lower_bound(d)
    algo = trace.fd_count
    found = None
    if search:
        # the search never needs more Fd moves than the constructive trace
        limit = algo if max_fd is None else min(max_fd, algo)
        found = bfs_min_fd(d, limit)
    upper = algo if found is None else min(algo, found)
    return BoundsReport(
        lower=lower,
        algorithmic_upper=algo,
        closed_form_upper=closed_form_upper(d.n_chords),
        search_upper=found,
        exact=lower if lower == upper else None,
        code=serialize(d),
        stages=tuple(stages),
    )
