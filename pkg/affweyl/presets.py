#!/usr/bin/env python3
"""
Built-in root data.

Each preset is a datum description in the same shape as a datum file:
name, rank, simple_roots (covectors on Y), simple_coroots (vectors in Y) and an
optional sigma.
"""

from typing import Any, Dict

PRESETS: Dict[str, Dict[str, Any]] = {
    "GL2": {
        "name": "GL2",
        "rank": 2,
        "simple_roots": [[1, -1]],
        "simple_coroots": [[1, -1]],
    },
    "PGL2": {
        "name": "PGL2",
        "rank": 1,
        "simple_roots": [[1]],
        "simple_coroots": [[2]],
    },
    "GL3": {
        "name": "GL3",
        "rank": 3,
        "simple_roots": [[1, -1, 0], [0, 1, -1]],
        "simple_coroots": [[1, -1, 0], [0, 1, -1]],
    },
    # Y is the coweight lattice, written in the basis of fundamental coweights
    "PGL3": {
        "name": "PGL3",
        "rank": 2,
        "simple_roots": [[1, 0], [0, 1]],
        "simple_coroots": [[2, -1], [-1, 2]],
    },
}

# Invalid on purpose: X modulo the root lattice is Z/2
SL2_SPEC: Dict[str, Any] = {
    "name": "SL2",
    "rank": 1,
    "simple_roots": [[2]],
    "simple_coroots": [[1]],
}

# Verification box used when --box is not given
DEFAULT_BOX: Dict[str, int] = {
    "GL2": 3,
    "PGL2": 3,
    "GL3": 2,
    "PGL3": 2,
}
FALLBACK_BOX = 2


def preset_names():
    return sorted(PRESETS)


def default_box(datum_name: str) -> int:
    return DEFAULT_BOX.get(datum_name.upper(), FALLBACK_BOX)
