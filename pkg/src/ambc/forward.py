"""The forward map: one AMBC step, and its iteration into a triple ``(P, Q, rho)``.

One step takes a proper numbering ``d`` of ``w``.  For every value ``i`` the
balls numbered ``i`` form a finite SW-to-NE antichain; the zig-zag through them
contributes its outer corner-posts to the next partial permutation and its back
corner-post to a stream.  Recording the stream's defining data ``(A, B, r)`` as
``(Q_i, P_i, rho_i)`` and repeating until no balls are left gives the triple.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .channels import channel_numbering, northeast_channel, southwest_channel
from .errors import AMBCError, ParseError
from .finite import forward_corners, sort_sw_to_ne
from .numbering import Numbering
from .perm import Cell, PartialAffinePermutation, normalize_cell, residue
from .streams import Stream, defining_data

Tabloid = tuple[tuple[int, ...], ...]


def make_tabloid(rows: Iterable[Iterable[int]], n: int | None = None) -> Tabloid:
    """Canonical tabloid: every row sorted, residues reduced to ``1..n`` when ``n`` is given."""
    out = []
    for row in rows:
        vals = [residue(v, n) if n else int(v) for v in row]
        if len(set(vals)) != len(vals):
            raise ParseError(f"repeated residue in tabloid row {list(row)}")
        out.append(tuple(sorted(vals)))
    return tuple(out)


def shape(t: Tabloid) -> tuple[int, ...]:
    return tuple(len(r) for r in t)


@dataclass(frozen=True, slots=True)
class OmegaTriple:
    n: int
    P: Tabloid
    Q: Tabloid
    rho: tuple[int, ...]

    def __post_init__(self) -> None:
        if shape(self.P) != shape(self.Q):
            raise ParseError("P and Q must have the same shape")
        if len(self.rho) != len(self.P):
            raise ParseError("rho needs one entry per tabloid row")

    @classmethod
    def empty(cls, n: int) -> "OmegaTriple":
        return cls(n, (), (), ())

    @property
    def shape(self) -> tuple[int, ...]:
        return shape(self.P)

    def stream(self, i: int) -> Stream:
        """The stream recorded in row ``i`` (0-based): ``st_{rho_i}(Q_i, P_i)``."""
        return Stream(self.n, self.Q[i], self.P[i], self.rho[i])

    def is_valid(self) -> bool:
        """Shape weakly decreasing and each tabloid a set partition of ``1..n``."""
        sh = self.shape
        if any(a < b for a, b in zip(sh, sh[1:])) or any(x == 0 for x in sh):
            return False
        full = list(range(1, self.n + 1))
        return all(sorted(v for r in t for v in r) == full for t in (self.P, self.Q))

    def to_json(self) -> dict:
        return {"P": [list(r) for r in self.P], "Q": [list(r) for r in self.Q], "rho": list(self.rho)}

    @classmethod
    def from_json(cls, data: dict | str, n: int | None = None) -> "OmegaTriple":
        if isinstance(data, str):
            try:
                data = json.loads(data)
            except json.JSONDecodeError as exc:
                raise ParseError(str(exc)) from exc
        try:
            P, Q, rho = data["P"], data["Q"], [int(x) for x in data["rho"]]
            if n is None:
                n = int(data.get("n", sum(len(r) for r in P)))
            return cls(n, make_tabloid(P, n), make_tabloid(Q, n), tuple(rho))
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(f"malformed triple JSON: {data!r}") from exc

    def to_text(self) -> str:
        def tab(t: Tabloid) -> str:
            return "|".join(",".join(str(v) for v in r) for r in t)

        return f"{tab(self.P)} ; {tab(self.Q)} ; {','.join(str(x) for x in self.rho)}"

    @classmethod
    def from_text(cls, text: str, n: int | None = None) -> "OmegaTriple":
        parts = [p.strip() for p in text.split(";")]
        if len(parts) != 3:
            raise ParseError("expected 'P ; Q ; rho'")

        def tab(s: str) -> list[list[int]]:
            if not s:
                return []
            try:
                return [[int(v) for v in row.split(",")] for row in s.split("|")]
            except ValueError as exc:
                raise ParseError(f"bad tabloid {s!r}") from exc

        P, Q = tab(parts[0]), tab(parts[1])
        try:
            rho = tuple(int(v) for v in parts[2].split(",")) if parts[2] else ()
        except ValueError as exc:
            raise ParseError(f"bad weight {parts[2]!r}") from exc
        if n is None:
            n = sum(len(r) for r in P)
        return cls(n, make_tabloid(P, n), make_tabloid(Q, n), rho)

    def __str__(self) -> str:
        return self.to_text()


@dataclass(frozen=True, slots=True)
class Level:
    """One zig-zag of a step: inner corner-posts (SW to NE), outer corner-posts, back corner-post."""

    value: int
    inner: tuple[Cell, ...]
    outer: tuple[Cell, ...]
    back: Cell


@dataclass(frozen=True, slots=True)
class StepTrace:
    numbering: Numbering
    levels: tuple[Level, ...]


def forward_step_traced(w: PartialAffinePermutation, d: Numbering) -> tuple[PartialAffinePermutation, Stream, StepTrace]:
    if w.is_empty:
        raise AMBCError("the forward step needs at least one ball")
    m = d.period
    lo = min(d.values)
    levels: list[Level] = []
    new_balls: list[Cell] = []
    for i in range(lo, lo + m):
        balls = d.level(i)
        if not balls:
            raise AMBCError(f"numbering skips the value {i}; it is not proper")
        inner = sort_sw_to_ne(balls)
        back, outer = forward_corners(inner)
        levels.append(Level(i, tuple(inner), tuple(outer), back))
        new_balls += outer
    nxt = PartialAffinePermutation.from_cells(w.n, [normalize_cell(b, w.n) for b in new_balls])
    stream = defining_data([lev.back for lev in levels], w.n)
    return nxt, stream, StepTrace(d, tuple(levels))


def forward_step(w: PartialAffinePermutation, d: Numbering) -> tuple[PartialAffinePermutation, Stream]:
    nxt, stream, _ = forward_step_traced(w, d)
    return nxt, stream


def _numbering_for(w: PartialAffinePermutation, policy: str) -> Numbering:
    if policy == "sw":
        return channel_numbering(w, southwest_channel(w))
    if policy == "ne":
        return channel_numbering(w, northeast_channel(w))
    raise ValueError(f"unknown numbering policy {policy!r}")


def phi_traced(w: PartialAffinePermutation, policy: str = "sw") -> tuple[OmegaTriple, list[tuple[Stream, StepTrace]]]:
    """The triple of ``w`` together with every step's stream and trace."""
    steps: list[tuple[Stream, StepTrace]] = []
    cur = w
    while not cur.is_empty:
        if len(steps) >= w.n:
            raise AMBCError("forward iteration did not terminate within n steps")
        nxt, stream, trace = forward_step_traced(cur, _numbering_for(cur, policy))
        if nxt.size() >= cur.size():
            raise AMBCError("a forward step must remove ball classes")
        steps.append((stream, trace))
        cur = nxt
    P = tuple(s.B for s, _ in steps)
    Q = tuple(s.A for s, _ in steps)
    rho = tuple(s.r for s, _ in steps)
    return OmegaTriple(w.n, P, Q, rho), steps


@lru_cache(maxsize=1 << 17)
def phi(w: PartialAffinePermutation) -> OmegaTriple:
    return phi_traced(w, "sw")[0]


def phi_with_numbering_policy(w: PartialAffinePermutation, policy: str = "sw") -> OmegaTriple:
    """Iterate the forward step using the SW (default) or NE channel numbering at each step."""
    policy = policy.lower()
    if policy == "sw":
        return phi(w)
    return phi_traced(w, policy)[0]


def standardizable(t: Sequence[Sequence[int]]) -> bool:
    """Rows sorted by representative form a standard Young tableau."""
    from .finite import is_standard

    return is_standard([sorted(r) for r in t])


__all__ = [
    "Level",
    "OmegaTriple",
    "StepTrace",
    "Tabloid",
    "forward_step",
    "forward_step_traced",
    "make_tabloid",
    "phi",
    "phi_traced",
    "phi_with_numbering_policy",
    "shape",
    "standardizable",
]
