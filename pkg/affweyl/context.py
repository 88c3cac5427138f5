#!/usr/bin/env python3
"""
One place that wires the calculators for a root datum together.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Optional

from .alcoves import AlcoveGeometry
from .config import Settings
from .coxeter import CoxeterSystem
from .cosets import CosetCalculus
from .orbit_geometry import OrbitGeometry
from .root_datum import RootDatum, build_datum, load_datum
from .steinberg import SteinbergCalculus
from .weyl_ext import ExtAffineWeylGroup


@dataclass
class WeylContext:
    datum: RootDatum
    group: ExtAffineWeylGroup
    coxeter: CoxeterSystem
    cosets: CosetCalculus
    alcoves: AlcoveGeometry
    steinberg: SteinbergCalculus
    orbits: OrbitGeometry
    settings: Settings
    cache: Dict[str, Any] = field(default_factory=dict, repr=False)

    @classmethod
    def from_datum(cls, datum: RootDatum, settings: Optional[Settings] = None) -> "WeylContext":
        settings = settings or Settings()
        group = ExtAffineWeylGroup(datum)
        coxeter = CoxeterSystem(group, cache_size=settings.bruhat_cache)
        cosets = CosetCalculus(coxeter, parabolic_cap=settings.parabolic_cap)
        alcoves = AlcoveGeometry(group)
        steinberg = SteinbergCalculus(cosets, alcoves)
        return cls(
            datum=datum,
            group=group,
            coxeter=coxeter,
            cosets=cosets,
            alcoves=alcoves,
            steinberg=steinberg,
            orbits=OrbitGeometry(steinberg),
            settings=settings,
        )

    @classmethod
    def load(cls, name_or_path: str, settings: Optional[Settings] = None) -> "WeylContext":
        return cls.from_datum(load_datum(name_or_path), settings)

    @classmethod
    def from_spec(cls, spec: Dict[str, Any], settings: Optional[Settings] = None) -> "WeylContext":
        return cls.from_datum(build_datum(spec), settings)
