"""Finite descriptions of total orders on the integers.

Segment generation only ever inspects a bounded window of integers, so a
total order is carried as a small spec that can rank any value it covers.
``ExplicitWindow`` covers only its own window and refuses anything else.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union


class OrderWindowError(ValueError):
    """A value was compared outside the window an order spec covers."""


@dataclass(frozen=True)
class Window:
    lo: int
    hi: int

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty window [{self.lo}, {self.hi}]")

    def __len__(self) -> int:
        return self.hi - self.lo + 1

    def __iter__(self):
        return iter(range(self.lo, self.hi + 1))


@dataclass(frozen=True)
class Natural:
    def key(self, v: int):
        return v

    def to_json(self) -> dict:
        return {"kind": "natural"}


@dataclass(frozen=True)
class WaterlineBelow:
    """Values >= anchor ascending, then values < anchor descending."""

    anchor_x: int

    def key(self, v: int):
        if v >= self.anchor_x:
            return (False, v - self.anchor_x)
        return (True, self.anchor_x - v)

    def to_json(self) -> dict:
        return {"kind": "waterline_below", "anchor_x": self.anchor_x}


@dataclass(frozen=True)
class ExplicitWindow:
    lo: int
    hi: int
    ascending: tuple
    _rank: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "ascending", tuple(self.ascending))
        if self.lo > self.hi:
            raise ValueError(f"explicit order window [{self.lo}, {self.hi}] is empty")
        if sorted(self.ascending) != list(range(self.lo, self.hi + 1)):
            raise ValueError(
                f"ascending list is not a permutation of [{self.lo}, {self.hi}]"
            )
        object.__setattr__(self, "_rank", {v: i for i, v in enumerate(self.ascending)})

    def key(self, v: int):
        try:
            return self._rank[v]
        except KeyError:
            raise OrderWindowError(
                f"outside order window: {v} not in [{self.lo}, {self.hi}]"
            ) from None

    def to_json(self) -> dict:
        return {"kind": "explicit", "lo": self.lo, "hi": self.hi, "ascending": list(self.ascending)}


OrderSpec = Union[Natural, WaterlineBelow, ExplicitWindow]


def compare(spec: OrderSpec, a: int, b: int) -> int:
    """Three-way comparison under ``spec``: -1 if a precedes b, 0 if equal, 1 otherwise."""
    ka = spec.key(a)
    kb = spec.key(b)
    if a == b:
        return 0
    return -1 if ka < kb else 1


def _check_window(spec: OrderSpec, w: Window) -> None:
    if isinstance(spec, ExplicitWindow) and (w.lo < spec.lo or w.hi > spec.hi):
        raise OrderWindowError(
            f"outside order window: [{w.lo}, {w.hi}] not within [{spec.lo}, {spec.hi}]"
        )


def sorted_window(spec: OrderSpec, w: Window) -> list:
    """The integers of ``w`` listed smallest-first under ``spec``."""
    _check_window(spec, w)
    if isinstance(spec, Natural):
        return list(w)
    if isinstance(spec, ExplicitWindow) and (w.lo, w.hi) == (spec.lo, spec.hi):
        return list(spec.ascending)
    return sorted(w, key=spec.key)


def partition_window(spec: OrderSpec, w: Window, vertical_count: int):
    """Split ``w`` into (horizontal, vertical) sets.

    The vertical set holds the ``vertical_count`` greatest elements under
    ``spec``; the horizontal set holds the rest.
    """
    if vertical_count < 0:
        raise ValueError("vertical count must be nonnegative")
    if vertical_count > len(w):
        raise ValueError("partition overflow")
    ordered = sorted_window(spec, w)
    cut = len(ordered) - vertical_count
    return frozenset(ordered[:cut]), frozenset(ordered[cut:])


def spec_from_json(data) -> OrderSpec:
    if not isinstance(data, dict) or "kind" not in data:
        raise ValueError(f"order spec must be an object with 'kind', got {data!r}")
    kind = data["kind"]
    if kind == "natural":
        return Natural()
    if kind == "waterline_below":
        return WaterlineBelow(int(data["anchor_x"]))
    if kind == "explicit":
        return ExplicitWindow(int(data["lo"]), int(data["hi"]), tuple(int(v) for v in data["ascending"]))
    raise ValueError(f"unknown order kind {kind!r}")


def spec_to_json(spec: OrderSpec) -> dict:
    return spec.to_json()
