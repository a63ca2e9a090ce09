"""Gauss diagrams of virtual knots.

A diagram is a cyclic word of chord endpoints. Each chord (arrow) has a
tail and a head and carries a sign. In Gauss-code text an ``O`` token is
the tail of its chord and a ``U`` token is the head, so ``O1+O2+U1+U2+``
is the virtual trefoil.
"""
from __future__ import annotations

import enum
import random
import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, NamedTuple


class Role(enum.Enum):
    TAIL = "O"
    HEAD = "U"

    @property
    def other(self) -> "Role":
        return Role.HEAD if self is Role.TAIL else Role.TAIL


class Endpoint(NamedTuple):
    chord: int
    role: Role


class GaussCodeError(ValueError):
    """Base class for malformed Gauss codes."""


class GaussCodeSyntaxError(GaussCodeError):
    pass


class LabelCountError(GaussCodeError):
    pass


class DuplicateRoleError(GaussCodeError):
    pass


class SignMismatchError(GaussCodeError):
    pass


class InvalidDiagramError(ValueError):
    pass


@dataclass(frozen=True)
class GaussDiagram:
    """Immutable signed Gauss diagram.

    ``endpoints`` is read cyclically; position ``len(endpoints) - 1`` is
    adjacent to position 0. ``signs`` maps chord id to +1 or -1.
    """

    endpoints: tuple[Endpoint, ...] = ()
    signs: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        eps = tuple(Endpoint(int(c), Role(r)) for c, r in self.endpoints)
        object.__setattr__(self, "endpoints", eps)
        object.__setattr__(self, "signs", dict(self.signs))
        self._validate()

    def _validate(self) -> None:
        seen: dict[int, set[Role]] = {}
        for chord, role in self.endpoints:
            if chord <= 0:
                raise InvalidDiagramError(f"chord id must be positive, got {chord}")
            roles = seen.setdefault(chord, set())
            if role in roles:
                raise InvalidDiagramError(f"chord {chord} has two {role.name.lower()}s")
            roles.add(role)
        for chord, roles in seen.items():
            if len(roles) != 2:
                raise InvalidDiagramError(f"chord {chord} has a single endpoint")
        if set(self.signs) != set(seen):
            raise InvalidDiagramError("signs must have exactly one entry per chord")
        for chord, s in self.signs.items():
            if s not in (1, -1):
                raise InvalidDiagramError(f"sign of chord {chord} must be +1 or -1, got {s}")

    def __hash__(self):
        return hash((self.endpoints, tuple(sorted(self.signs.items()))))

    def __len__(self) -> int:
        return len(self.endpoints)

    def __iter__(self) -> Iterator[Endpoint]:
        return iter(self.endpoints)

    def __str__(self) -> str:
        return serialize(self)

    @property
    def n_chords(self) -> int:
        return len(self.signs)

    @property
    def chords(self) -> list[int]:
        return sorted(self.signs)

    def is_empty(self) -> bool:
        return not self.endpoints

    def position(self, chord: int, role: Role) -> int:
        for i, ep in enumerate(self.endpoints):
            if ep.chord == chord and ep.role is role:
                return i
        raise KeyError(f"no chord {chord} in diagram")

    def positions(self, chord: int) -> tuple[int, int]:
        """Return (tail position, head position) of ``chord``."""
        tail = head = None
        for i, (c, role) in enumerate(self.endpoints):
            if c == chord:
                if role is Role.TAIL:
                    tail = i
                else:
                    head = i
        if tail is None or head is None:
            raise KeyError(f"no chord {chord} in diagram")
        return tail, head

    def rotate(self, k: int) -> "GaussDiagram":
        """Move the basepoint forward by ``k`` positions."""
        n = len(self.endpoints)
        if n == 0:
            return self
        k %= n
        return GaussDiagram(self.endpoints[k:] + self.endpoints[:k], self.signs)

    def relabel(self, mapping: Mapping[int, int]) -> "GaussDiagram":
        eps = tuple(Endpoint(mapping[c], r) for c, r in self.endpoints)
        return GaussDiagram(eps, {mapping[c]: s for c, s in self.signs.items()})


_TOKEN = re.compile(r"([OU])(\d+)([+-])")


def parse_gauss_code(text: str) -> GaussDiagram:
    """Parse a Gauss code such as ``"O1+O2+U1+U2+"``.

    Raises a subclass of :class:`GaussCodeError` naming the first problem
    found: a bad token, a label not occurring exactly twice, a label with
    two ``O`` (or two ``U``) occurrences, or inconsistent signs.
    """
    tokens: list[tuple[str, int, int]] = []
    pos = 0
    n = len(text)
    while True:
        while pos < n and text[pos] in " \t\n\r\f\v":
            pos += 1
        if pos >= n:
            break
        m = _TOKEN.match(text, pos)
        if m is None:
            raise GaussCodeSyntaxError(f"bad token at offset {pos}: {text[pos:pos + 8]!r}")
        label = int(m.group(2))
        if label == 0:
            raise GaussCodeSyntaxError(f"label must be positive at offset {pos}")
        tokens.append((m.group(1), label, 1 if m.group(3) == "+" else -1))
        pos = m.end()

    occurrences: dict[int, list[tuple[str, int]]] = {}
    for letter, label, sign in tokens:
        occurrences.setdefault(label, []).append((letter, sign))
    for label, occ in occurrences.items():
        if len(occ) != 2:
            raise LabelCountError(f"label {label} appears {len(occ)} times, expected 2")
        if occ[0][0] == occ[1][0]:
            raise DuplicateRoleError(f"label {label} appears twice with {occ[0][0]}")
        if occ[0][1] != occ[1][1]:
            raise SignMismatchError(f"label {label} has inconsistent signs")

    endpoints = tuple(Endpoint(label, Role(letter)) for letter, label, _ in tokens)
    signs = {label: occ[0][1] for label, occ in occurrences.items()}
    return GaussDiagram(endpoints, signs)


def _token(role: Role, label: int, sign: int) -> str:
    return f"{role.value}{label}{'+' if sign > 0 else '-'}"


def serialize(d: GaussDiagram) -> str:
    return "".join(_token(r, c, d.signs[c]) for c, r in d.endpoints)


def canonical_key(d: GaussDiagram) -> tuple[tuple[str, int, int], ...]:
    """Key identifying ``d`` up to basepoint rotation and chord relabeling.

    For each rotation, chords are renamed 1, 2, ... in order of first
    appearance; the key is the lexicographically least resulting token
    sequence.
    """
    eps = d.endpoints
    n = len(eps)
    best = None
    signs = d.signs
    for start in range(n):
        names: dict[int, int] = {}
        word = []
        for j in range(n):
            c, r = eps[(start + j) % n]
            label = names.setdefault(c, len(names) + 1)
            word.append((r.value, label, signs[c]))
        word = tuple(word)
        if best is None or word < best:
            best = word
    return best if best is not None else ()


def key_to_code(key: Iterable[tuple[str, int, int]]) -> str:
    return "".join(_token(Role(r), label, s) for r, label, s in key)


def from_key(key: Iterable[tuple[str, int, int]]) -> GaussDiagram:
    key = list(key)
    return GaussDiagram(
        tuple(Endpoint(label, Role(r)) for r, label, _ in key),
        {label: s for _, label, s in key},
    )


def random_diagram(c: int, seed: int) -> GaussDiagram:
    """Random diagram with ``c`` chords labeled 1..c.

    Endpoint slots are paired by a uniform random matching; each chord's
    orientation and sign are independent fair coins.
    """
    if c < 0:
        raise ValueError("number of chords must be non-negative")
    rng = random.Random(seed)
    slots = list(range(2 * c))
    rng.shuffle(slots)
    eps: list[Endpoint | None] = [None] * (2 * c)
    signs = {}
    for chord in range(1, c + 1):
        p, q = slots[2 * chord - 2], slots[2 * chord - 1]
        if rng.random() < 0.5:
            p, q = q, p
        eps[p] = Endpoint(chord, Role.TAIL)
        eps[q] = Endpoint(chord, Role.HEAD)
        signs[chord] = 1 if rng.random() < 0.5 else -1
    return GaussDiagram(tuple(eps), signs)


def all_diagrams(c: int) -> list[GaussDiagram]:
    """Every diagram with ``c`` chords, one per canonical class."""
    found: dict[tuple, GaussDiagram] = {}

    def matchings(free: list[int]) -> Iterator[list[tuple[int, int]]]:
        if not free:
            yield []
            return
        first, rest = free[0], free[1:]
        for k, other in enumerate(rest):
            for m in matchings(rest[:k] + rest[k + 1:]):
                yield [(first, other)] + m

    for pairs in matchings(list(range(2 * c))):
        for mask in range(1 << c):
            for sign_mask in range(1 << c):
                eps: list = [None] * (2 * c)
                signs = {}
                for idx, (p, q) in enumerate(pairs):
                    if mask >> idx & 1:
                        p, q = q, p
                    eps[p] = Endpoint(idx + 1, Role.TAIL)
                    eps[q] = Endpoint(idx + 1, Role.HEAD)
                    signs[idx + 1] = -1 if sign_mask >> idx & 1 else 1
                d = GaussDiagram(tuple(eps), signs)
                found.setdefault(canonical_key(d), d)
    return [found[k] for k in sorted(found)]
