"""SU(2)-frames on a link as a Z-torsor, and the invariants read off them.

Frames are symbolic: a :class:`FrameClass` records its integer coordinate
relative to the frame ``beta`` that extends over the Milnor fiber.  Twisting
by a map of degree ``n`` into SU(2) adds ``n`` to the coordinate.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Hashable, Tuple

from .errors import (
    EhatUndefined,
    IncomparableFrames,
    InvalidArgument,
    InvalidToddValue,
    NotCharacteristic,
)

__all__ = [
    "Basepoint",
    "FrameClass",
    "InvariantBundle",
    "base_frame",
    "act",
    "diff",
    "canonical_frame",
    "ehat",
    "reduce",
    "e_r_from_td_arf",
    "e_c_from_chern",
    "rochlin",
    "characteristic_pair",
]


class Basepoint(str, enum.Enum):
    MILNOR_BASE = "milnor-base"
    ABSTRACT = "abstract"


@dataclass(frozen=True)
class FrameClass:
    manifold_label: Hashable
    offset: int
    basepoint: Basepoint = Basepoint.MILNOR_BASE


@dataclass(frozen=True)
class InvariantBundle:
    ehat: int
    e_r: int
    e_c: int


def base_frame(manifold_label: Hashable) -> FrameClass:
    """The frame extending over the Milnor fiber; coordinate 0 by definition."""
    return FrameClass(manifold_label, 0, Basepoint.MILNOR_BASE)


def act(f: FrameClass, n: int) -> FrameClass:
    return replace(f, offset=f.offset + n)


def diff(f: FrameClass, g: FrameClass) -> int:
    """The degree ``n`` with ``act(g, n) == f``."""
    if f.manifold_label != g.manifold_label or f.basepoint != g.basepoint:
        raise IncomparableFrames(
            f"frames on {f.manifold_label!r}/{f.basepoint.value} and "
            f"{g.manifold_label!r}/{g.basepoint.value} cannot be compared")
    return f.offset - g.offset


def canonical_frame(manifold_label: Hashable, mu: int) -> FrameClass:
    """Frame induced by the holomorphic 2-form; sits at ``mu + 1``."""
    if mu < 0:
        raise InvalidArgument("Milnor number must be non-negative")
    return FrameClass(manifold_label, mu + 1, Basepoint.MILNOR_BASE)


def ehat(f: FrameClass) -> int:
    if f.basepoint != Basepoint.MILNOR_BASE:
        raise EhatUndefined("E-hat needs a frame measured from the Milnor-fiber base frame")
    return f.offset


def reduce(ehat_value: int) -> InvariantBundle:
    return InvariantBundle(ehat_value, ehat_value % 24, ehat_value % 12)


def e_r_from_td_arf(td: Fraction, arf: int) -> int:
    """``12 * (Td + Arf) mod 24``; ``12 * td`` must be an integer."""
    if arf not in (0, 1):
        raise InvalidArgument(f"Arf invariant must be 0 or 1, got {arf!r}")
    twelve_td = 12 * Fraction(td)
    if twelve_td.denominator != 1:
        raise InvalidToddValue(f"12 * {td} is not an integer")
    return (int(twelve_td) + 12 * arf) % 24


def e_c_from_chern(c1_sq: int, c2: int) -> int:
    return (c1_sq + c2) % 12


def rochlin(sigma: int) -> int:
    return sigma % 16


def characteristic_pair(sigma: int, c_sq: int) -> Tuple[int, int]:
    """``(sigma, (sigma - C^2) / 8)`` for a characteristic surface ``C``."""
    if (sigma - c_sq) % 8:
        raise NotCharacteristic(f"sigma={sigma} and C^2={c_sq} differ by a non-multiple of 8")
    return sigma, (sigma - c_sq) // 8
