"""Chord indices, n-writhes and the affine index polynomial."""
from __future__ import annotations

from .diagram import GaussDiagram, Role
from .laurent import LaurentPoly


def endpoint_sign(d: GaussDiagram, position: int) -> int:
    """Head endpoints carry the chord sign, tails its negative."""
    if not 0 <= position < len(d):
        raise IndexError(f"position {position} out of range for {len(d)} endpoints")
    chord, role = d.endpoints[position]
    s = d.signs[chord]
    return s if role is Role.HEAD else -s


def index(d: GaussDiagram, chord: int) -> int:
    """Sum of endpoint signs strictly inside the arc from the tail of
    ``chord`` to its head, following the circle's orientation."""
    if chord not in d.signs:
        raise KeyError(f"no chord {chord} in diagram")
    tail, head = d.positions(chord)
    n = len(d)
    total = 0
    j = (tail + 1) % n
    while j != head:
        total += endpoint_sign(d, j)
        j = (j + 1) % n
    return total


def all_indices(d: GaussDiagram) -> dict[int, int]:
    """Index of every chord in one pass over the prefix sums."""
    n = len(d)
    prefix = [0] * (n + 1)
    for j in range(n):
        prefix[j + 1] = prefix[j] + endpoint_sign(d, j)
    tails, heads = {}, {}
    for j, (c, r) in enumerate(d.endpoints):
        (tails if r is Role.TAIL else heads)[c] = j
    out = {}
    for c in d.signs:
        t, h = tails[c], heads[c]
        if t < h:
            out[c] = prefix[h] - prefix[t + 1]
        else:
            out[c] = prefix[n] - prefix[t + 1] + prefix[h]
    return out


def n_writhes(d: GaussDiagram) -> dict[int, int]:
    """Map n -> J_n for nonzero n; zero entries are dropped."""
    table: dict[int, int] = {}
    for chord, i in all_indices(d).items():
        if i != 0:
            table[i] = table.get(i, 0) + d.signs[chord]
    return {n: j for n, j in sorted(table.items()) if j != 0}


def affine_index_poly(d: GaussDiagram) -> LaurentPoly:
    """Sum over n of J_n * (t^-n - 1)."""
    out: dict[int, int] = {}
    for n, j in n_writhes(d).items():
        out[-n] = out.get(-n, 0) + j
        out[0] = out.get(0, 0) - j
    return LaurentPoly(out)


def quotient_coefficients(d: GaussDiagram) -> LaurentPoly:
    """The polynomial sum a_n t^n with P = (t - 1) * sum a_n t^n."""
    return affine_index_poly(d).divide_by_t_minus_1()
