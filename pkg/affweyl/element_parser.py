#!/usr/bin/env python3
"""
Parsers for the command-line literals.

  elem      ::= factor ('*' factor)*  |  '(' word ';' '[' ints ']' ')'
  factor    ::= 's' INDEX | 'a' INDEX | 't[' INT (',' INT)* ']' | 'e' | 'w0'
  coweight  ::= '[' INT (',' INT)* ']'
  parabolic ::= label (',' label)*  |  'none'  |  'S'
"""

import re
from typing import FrozenSet, List, Tuple

from .coxeter import CoxeterSystem
from .errors import ParseError
from .weyl_ext import ExtAffineElement

_FACTOR = re.compile(r"^(?:(?P<gen>[sa])(?P<index>\d+)|t\[(?P<coords>[^\]]*)\]|(?P<e>e)|(?P<w0>w0))$")
_CANONICAL = re.compile(r"^\(\s*(?P<word>[^;]*);\s*\[(?P<coords>[^\]]*)\]\s*\)$")


def _parse_ints(text: str, rank: int, where: str) -> Tuple[int, ...]:
    parts = [p.strip() for p in text.split(",")] if text.strip() else []
    try:
        values = tuple(int(p) for p in parts)
    except ValueError:
        raise ParseError(f"Expected integers in {where}, got '{text}'")
    if len(values) != rank:
        raise ParseError(f"{where} has {len(values)} coordinates, expected {rank}")
    return values


def parse_coweight(text: str, rank: int) -> Tuple[int, ...]:
    """Parse '[1,0]' (brackets or parentheses optional)"""
    stripped = text.strip()
    if stripped[:1] in "[(" and stripped[-1:] in "])":
        stripped = stripped[1:-1]
    return _parse_ints(stripped, rank, f"coweight '{text}'")


def _split_factors(text: str) -> List[str]:
    """Split on '*' outside brackets"""
    factors, depth, current = [], 0, []
    for ch in text:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if ch == "*" and depth == 0:
            factors.append("".join(current).strip())
            current = []
        else:
            current.append(ch)
    factors.append("".join(current).strip())
    return factors


def _generator_index(coxeter: CoxeterSystem, kind: str, position: int, literal: str) -> int:
    for g in coxeter.generators:
        if g.kind == kind and g.position == position:
            return g.index
    raise ParseError(f"No generator '{literal}' in datum {coxeter.datum.name}")


def parse_element(text: str, coxeter: CoxeterSystem) -> ExtAffineElement:
    """Parse an element literal into w t_lambda form"""
    group = coxeter.group
    stripped = text.strip()
    if not stripped:
        raise ParseError("Empty element literal")

    canonical = _CANONICAL.match(stripped)
    if canonical:
        finite = parse_element(canonical.group("word"), coxeter)
        if any(finite.trans):
            raise ParseError(f"Word part of '{text}' must be finite")
        coords = _parse_ints(canonical.group("coords"), group.rank, f"element '{text}'")
        return group.make(finite.finite, coords)

    result = group.identity()
    for factor in _split_factors(stripped):
        match = _FACTOR.match(factor)
        if not match:
            raise ParseError(f"Cannot parse factor '{factor}' in '{text}'")
        if match.group("gen"):
            position = int(match.group("index")) - 1
            kind = "finite" if match.group("gen") == "s" else "affine"
            element = coxeter.generators[_generator_index(coxeter, kind, position, factor)].element
        elif match.group("coords") is not None:
            element = group.translation(_parse_ints(match.group("coords"), group.rank, f"factor '{factor}'"))
        elif match.group("w0"):
            element = group.longest_finite()
        else:
            element = group.identity()
        result = group.mul(result, element)
    return result


def parse_parabolic(text: str, coxeter: CoxeterSystem) -> FrozenSet[int]:
    """Parse 's1,a1' into S_aff indices; 'none' or '' is the empty set, 'S' the finite simple reflections"""
    stripped = text.strip()
    if stripped in ("", "none", "{}"):
        return frozenset()
    if stripped == "S":
        return coxeter.finite_indices
    stripped = stripped.strip("{}")
    indices = set()
    for label in stripped.split(","):
        label = label.strip()
        match = re.match(r"^([sa])(\d+)$", label)
        if not match:
            raise ParseError(f"Cannot parse generator '{label}' in parabolic '{text}'")
        kind = "finite" if match.group(1) == "s" else "affine"
        indices.add(_generator_index(coxeter, kind, int(match.group(2)) - 1, label))
    return frozenset(indices)
