"""Moves on Gauss diagrams and replayable move traces.

``Fd`` swaps a cyclically adjacent head/tail pair of two different chords,
``F`` swaps an adjacent head/head or tail/tail pair. ``R1`` and ``R2``
insert or delete an isolated chord or an opposite-signed pair of chords
whose tails are adjacent and whose heads are adjacent.
"""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from typing import Iterable

from .diagram import Endpoint, GaussDiagram, Role, parse_gauss_code, serialize


class MoveKind(str, enum.Enum):
    FD = "Fd"
    F = "F"
    R1_REMOVE = "R1Remove"
    R1_INSERT = "R1Insert"
    R2_REMOVE = "R2Remove"
    R2_INSERT = "R2Insert"


REMOVALS = frozenset({MoveKind.R1_REMOVE, MoveKind.R2_REMOVE})
SEARCH_KINDS = frozenset({MoveKind.FD, MoveKind.R1_REMOVE, MoveKind.R2_REMOVE})


class MoveError(ValueError):
    """A move was requested where its preconditions do not hold."""


class ReplayError(MoveError):
    def __init__(self, step: int, reason: str):
        super().__init__(f"step {step}: {reason}")
        self.step = step
        self.reason = reason


@dataclass(frozen=True)
class MoveRecord:
    """One move, with enough data to replay it on the pre-move diagram.

    ``position`` holds endpoint indices (for removals, the first index of
    each adjacent pair; for inserts, gap indices). ``sign`` and ``order``
    are only used by insert moves: ``order`` is ``"OU"``/``"UO"`` for R1
    and ``"ab"``/``"ba"`` (order of the inserted heads) for R2.
    """

    kind: MoveKind
    position: tuple[int, ...]
    chords: tuple[int, ...] = ()
    sign: int | None = None
    order: str | None = None

    def to_dict(self) -> dict:
        out = {"kind": self.kind.value, "position": list(self.position), "chords": list(self.chords)}
        if self.sign is not None:
            out["sign"] = self.sign
        if self.order is not None:
            out["order"] = self.order
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "MoveRecord":
        return cls(
            MoveKind(data["kind"]),
            tuple(int(p) for p in data["position"]),
            tuple(int(c) for c in data.get("chords", ())),
            data.get("sign"),
            data.get("order"),
        )


@dataclass(frozen=True)
class MoveTrace:
    start: GaussDiagram
    records: tuple[MoveRecord, ...] = field(default_factory=tuple)

    @property
    def fd_count(self) -> int:
        return sum(1 for r in self.records if r.kind is MoveKind.FD)

    def count(self, kind: MoveKind) -> int:
        return sum(1 for r in self.records if r.kind is kind)

    def to_json(self) -> str:
        data = {"start": serialize(self.start), "moves": [r.to_dict() for r in self.records]}
        return json.dumps(data, indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "MoveTrace":
        data = json.loads(text)
        return cls(parse_gauss_code(data["start"]),
                   tuple(MoveRecord.from_dict(m) for m in data["moves"]))


def _swap(d: GaussDiagram, i: int, j: int) -> GaussDiagram:
    eps = list(d.endpoints)
    eps[i], eps[j] = eps[j], eps[i]
    return GaussDiagram(tuple(eps), d.signs)


def _check_pair(d: GaussDiagram, i: int) -> tuple[Endpoint, Endpoint, int]:
    n = len(d)
    if n == 0:
        raise MoveError("the empty diagram has no endpoints to swap")
    if not 0 <= i < n:
        raise MoveError(f"position {i} out of range for {n} endpoints")
    j = (i + 1) % n
    a, b = d.endpoints[i], d.endpoints[j]
    if a.chord == b.chord:
        raise MoveError(f"positions {i} and {j} are both endpoints of chord {a.chord}")
    return a, b, j


def apply_fd(d: GaussDiagram, i: int) -> GaussDiagram:
    """Forbidden detour move: swap the head/tail pair at ``i, i+1``."""
    a, b, j = _check_pair(d, i)
    if a.role is b.role:
        raise MoveError(f"positions {i}, {j} are {a.role.name}/{b.role.name}; Fd needs a head and a tail")
    return _swap(d, i, j)


def apply_f(d: GaussDiagram, i: int) -> GaussDiagram:
    """Forbidden move: swap the like-role pair at ``i, i+1``."""
    a, b, j = _check_pair(d, i)
    if a.role is not b.role:
        raise MoveError(f"positions {i}, {j} hold a head and a tail; F needs two heads or two tails")
    return _swap(d, i, j)


def _adjacent_start(n: int, p: int, q: int) -> int | None:
    starts = [s for s, t in ((p, q), (q, p)) if (s + 1) % n == t]
    return min(starts) if starts else None


def _remove_chords(d: GaussDiagram, chords: Iterable[int]) -> GaussDiagram:
    drop = set(chords)
    return GaussDiagram(
        tuple(e for e in d.endpoints if e.chord not in drop),
        {c: s for c, s in d.signs.items() if c not in drop},
    )


def r1_position(d: GaussDiagram, chord: int) -> int | None:
    """First index of the adjacent endpoint pair of ``chord``, if any."""
    tail, head = d.positions(chord)
    return _adjacent_start(len(d), tail, head)


def apply_r1_remove(d: GaussDiagram, chord: int) -> GaussDiagram:
    if chord not in d.signs:
        raise MoveError(f"no chord {chord} in diagram")
    if r1_position(d, chord) is None:
        raise MoveError(f"endpoints of chord {chord} are not adjacent")
    return _remove_chords(d, [chord])


def r2_positions(d: GaussDiagram, a: int, b: int) -> tuple[int, int] | None:
    """(tail pair start, head pair start) if ``a, b`` form an R2 pair."""
    if a == b or a not in d.signs or b not in d.signs:
        return None
    if d.signs[a] != -d.signs[b]:
        return None
    n = len(d)
    ta, ha = d.positions(a)
    tb, hb = d.positions(b)
    tails = _adjacent_start(n, ta, tb)
    heads = _adjacent_start(n, ha, hb)
    if tails is None or heads is None:
        return None
    return tails, heads


def apply_r2_remove(d: GaussDiagram, a: int, b: int) -> GaussDiagram:
    if a == b:
        raise MoveError("R2 needs two different chords")
    for c in (a, b):
        if c not in d.signs:
            raise MoveError(f"no chord {c} in diagram")
    if d.signs[a] == d.signs[b]:
        raise MoveError(f"chords {a} and {b} have equal signs")
    if r2_positions(d, a, b) is None:
        raise MoveError(f"chords {a} and {b} do not have adjacent tails and adjacent heads")
    return _remove_chords(d, [a, b])


def _check_gap(d: GaussDiagram, gap: int) -> None:
    if not 0 <= gap <= len(d):
        raise MoveError(f"gap {gap} out of range for {len(d)} endpoints")


def _check_new(d: GaussDiagram, *chords: int) -> None:
    for c in chords:
        if c <= 0 or c in d.signs:
            raise MoveError(f"chord id {c} is not a fresh positive label")
    if len(set(chords)) != len(chords):
        raise MoveError("inserted chords need distinct labels")


def apply_r1_insert(d: GaussDiagram, gap: int, chord: int, sign: int,
                    order: str = "OU") -> GaussDiagram:
    """Insert an isolated chord before index ``gap``."""
    _check_gap(d, gap)
    _check_new(d, chord)
    if sign not in (1, -1) or order not in ("OU", "UO"):
        raise MoveError("R1 insert needs sign +-1 and order 'OU' or 'UO'")
    pair = tuple(Endpoint(chord, Role(ch)) for ch in order)
    eps = d.endpoints[:gap] + pair + d.endpoints[gap:]
    return GaussDiagram(eps, {**d.signs, chord: sign})


def apply_r2_insert(d: GaussDiagram, tail_gap: int, head_gap: int, a: int, b: int,
                    sign: int, order: str = "ab") -> GaussDiagram:
    """Insert chords ``a`` (sign ``sign``) and ``b`` (opposite sign).

    The tails go in as ``(a, b)`` before index ``tail_gap``, the heads as
    ``(a, b)`` or ``(b, a)`` before ``head_gap``; with equal gaps the tails
    come first.
    """
    _check_gap(d, tail_gap)
    _check_gap(d, head_gap)
    _check_new(d, a, b)
    if sign not in (1, -1) or order not in ("ab", "ba"):
        raise MoveError("R2 insert needs sign +-1 and order 'ab' or 'ba'")
    tails = (Endpoint(a, Role.TAIL), Endpoint(b, Role.TAIL))
    heads = (Endpoint(a, Role.HEAD), Endpoint(b, Role.HEAD))
    if order == "ba":
        heads = heads[::-1]
    eps = list(d.endpoints)
    # insert at the later gap first so the earlier index stays valid
    if head_gap >= tail_gap:
        eps[head_gap:head_gap] = heads
        eps[tail_gap:tail_gap] = tails
    else:
        eps[tail_gap:tail_gap] = tails
        eps[head_gap:head_gap] = heads
    return GaussDiagram(tuple(eps), {**d.signs, a: sign, b: -sign})


def apply_move(d: GaussDiagram, rec: MoveRecord) -> GaussDiagram:
    """Apply ``rec``, checking that its recorded chords and positions match."""
    kind = rec.kind
    if kind in (MoveKind.FD, MoveKind.F):
        if len(rec.position) != 1:
            raise MoveError(f"{kind.value} needs exactly one position")
        i = rec.position[0]
        out = apply_fd(d, i) if kind is MoveKind.FD else apply_f(d, i)
        if rec.chords:
            here = (d.endpoints[i].chord, d.endpoints[(i + 1) % len(d)].chord)
            if tuple(rec.chords) != here:
                raise MoveError(f"recorded chords {rec.chords} but found {here}")
        return out
    if kind is MoveKind.R1_REMOVE:
        (chord,) = rec.chords
        out = apply_r1_remove(d, chord)
        if rec.position and rec.position != (r1_position(d, chord),):
            raise MoveError(f"chord {chord} is not at position {rec.position}")
        return out
    if kind is MoveKind.R2_REMOVE:
        a, b = rec.chords
        out = apply_r2_remove(d, a, b)
        if rec.position and rec.position != r2_positions(d, a, b):
            raise MoveError(f"chords {a}, {b} are not at positions {rec.position}")
        return out
    if kind is MoveKind.R1_INSERT:
        (chord,) = rec.chords
        return apply_r1_insert(d, rec.position[0], chord, rec.sign, rec.order or "OU")
    if kind is MoveKind.R2_INSERT:
        a, b = rec.chords
        return apply_r2_insert(d, rec.position[0], rec.position[1], a, b, rec.sign,
                               rec.order or "ab")
    raise MoveError(f"unknown move kind {kind!r}")


def replay(trace: MoveTrace) -> GaussDiagram:
    d = trace.start
    for step, rec in enumerate(trace.records):
        try:
            d = apply_move(d, rec)
        except (MoveError, ValueError, KeyError, TypeError) as exc:
            raise ReplayError(step, str(exc)) from exc
    return d


def enumerate_moves(d: GaussDiagram, kinds: Iterable[MoveKind] = SEARCH_KINDS) -> list[MoveRecord]:
    """All legal moves of the requested kinds, by position then chord id."""
    kinds = {MoveKind(k) for k in kinds}
    n = len(d)
    eps = d.endpoints
    out: list[MoveRecord] = []
    for i in range(n):
        a, b = eps[i], eps[(i + 1) % n]
        if a.chord == b.chord:
            continue
        kind = MoveKind.F if a.role is b.role else MoveKind.FD
        if kind in kinds:
            out.append(MoveRecord(kind, (i,), (a.chord, b.chord)))
    if MoveKind.R1_REMOVE in kinds:
        for c in d.chords:
            p = r1_position(d, c)
            if p is not None:
                out.append(MoveRecord(MoveKind.R1_REMOVE, (p,), (c,)))
    if MoveKind.R2_REMOVE in kinds:
        chords = d.chords
        for x, a in enumerate(chords):
            for b in chords[x + 1:]:
                pos = r2_positions(d, a, b)
                if pos is not None:
                    out.append(MoveRecord(MoveKind.R2_REMOVE, pos, (a, b)))
    fresh = max(d.signs, default=0) + 1
    gaps = range(max(n, 1))
    if MoveKind.R1_INSERT in kinds:
        for g in gaps:
            for order in ("OU", "UO"):
                for s in (1, -1):
                    out.append(MoveRecord(MoveKind.R1_INSERT, (g,), (fresh,), s, order))
    if MoveKind.R2_INSERT in kinds:
        for p in gaps:
            for q in gaps:
                for order in ("ab", "ba"):
                    for s in (1, -1):
                        out.append(MoveRecord(MoveKind.R2_INSERT, (p, q), (fresh, fresh + 1), s, order))
    out.sort(key=lambda r: (r.position, r.chords))
    return out
