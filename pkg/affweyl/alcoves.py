#!/usr/bin/env python3
"""
Exact alcove geometry in V = Y (x) R.

Alcoves are handled through a single interior rational point: the fundamental
alcove through sigma / (<theta, sigma> + 1), its images through the affine
action. Containment in the dominant chamber and in the boxes Pi_mu is a strict
inequality test on that point.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import floor
from typing import List, Sequence, Tuple

from .errors import InternalInconsistency
from .smith import pair, vec_scale
from .weyl_ext import ExtAffineElement, ExtAffineWeylGroup, RationalPoint

Coweight = Tuple[int, ...]


@dataclass(frozen=True)
class PiBox:
    pairings: Tuple[int, ...]    # <alpha_i, mu> shared by every valid mu
    mu: Coweight                 # one integral solution


@dataclass(frozen=True)
class Hyperplane:
    root: Tuple[int, ...]
    level: int


class AlcoveGeometry:
    def __init__(self, group: ExtAffineWeylGroup):
        self.group = group
        self.datum = group.datum
        datum = self.datum
        top = max(pair(beta, datum.sigma) for beta in datum.positive_roots)
        self._point: RationalPoint = tuple(vec_scale(Fraction(1, top + 1), datum.sigma))
        self._simple_positions = tuple(datum.root_index[alpha] for alpha in datum.simple_roots)

    def fundamental_point(self) -> RationalPoint:
        return self._point

    def in_dominant_chamber(self, p: Sequence[Fraction]) -> bool:
        return all(pair(beta, p) > 0 for beta in self.datum.positive_roots)

    def in_fundamental_alcove(self, p: Sequence[Fraction]) -> bool:
        return all(0 < pair(beta, p) < 1 for beta in self.datum.positive_roots)

    def in_pi_box(self, p: Sequence[Fraction], mu: Sequence[int]) -> bool:
        """<alpha, mu> - 1 < <alpha, p> < <alpha, mu> for every simple alpha"""
        return all(pair(alpha, mu) - 1 < pair(alpha, p) < pair(alpha, mu)
                   for alpha in self.datum.simple_roots)

    def alcove_point(self, w: ExtAffineElement) -> RationalPoint:
        """Interior point of w(fundamental alcove)"""
        return self.group.act_on_point(w, self._point)

    def inverse_alcove_point(self, w: ExtAffineElement) -> RationalPoint:
        """Interior point of w^-1(fundamental alcove)"""
        return self.group.act_on_point(self.group.inv(w), self._point)

    def ws_alcove_test(self, w: ExtAffineElement) -> bool:
        """w^-1(fundamental alcove) lies in the dominant chamber"""
        return self.in_dominant_chamber(self.inverse_alcove_point(w))

    def _box_pairings(self, w: ExtAffineElement) -> Tuple[int, ...]:
        pairings = []
        for alpha, k in zip(self.datum.simple_roots, self._simple_positions):
            p = pair(alpha, w.trans)
            pairings.append(1 - p if self.group.sends_positive(w.finite, k) else -p)
        return tuple(pairings)

    def is_restricted(self, w: ExtAffineElement) -> bool:
        """<alpha, lambda> is 0 where v(alpha) > 0 and -1 where v(alpha) < 0, for w = v t_lambda"""
        return all(c == 1 for c in self._box_pairings(w))

    def is_restricted_by_alcove(self, w: ExtAffineElement) -> bool:
        return self.in_pi_box(self.inverse_alcove_point(w), self.datum.sigma)

    def pi_box_of(self, w: ExtAffineElement) -> PiBox:
        """Pairings of the mu with w^-1(fundamental alcove) inside Pi_mu, and one such mu"""
        pairings = self._box_pairings(w)
        mu = self.datum.root_system.solve(pairings)
        if mu is None:
            # the simple-root matrix has trivial cokernel torsion, so this cannot happen
            raise InternalInconsistency(f"No integral coweight with pairings {list(pairings)}")
        return PiBox(pairings=pairings, mu=mu)

    def separating_hyperplanes(self, w: ExtAffineElement) -> List[Hyperplane]:
        """Hyperplanes H_{beta,n} strictly between the fundamental alcove and its image under w"""
        q_point = self.alcove_point(w)
        result = []
        for beta in self.datum.positive_roots:
            q = pair(beta, q_point)
            top = floor(q)
            levels = range(1, top + 1) if top > 0 else range(top + 1, 1)
            result.extend(Hyperplane(beta, n) for n in levels)
        return result

    def hyperplane_length(self, w: ExtAffineElement) -> int:
        return len(self.separating_hyperplanes(w))
