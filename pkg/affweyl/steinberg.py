#!/usr/bin/env python3
"""
Steinberg factorization through restricted elements.

Every w in W^S_ext factors as x t_nu with x restricted and nu antidominant;
x is unique up to translation by the radical Y_0. On the label side,
y t_{w0(mu)} runs over ^A W^S_ext as y runs over restricted elements of
^A W^S_ext and mu over dominant coweights.
"""

from dataclasses import dataclass
from itertools import product
from typing import Dict, List, Sequence, Tuple

from .alcoves import AlcoveGeometry
from .cosets import CosetCalculus, FinitarySubset
from .errors import InternalInconsistency, NotDominant, NotInAWS, NotInWS, NotRestricted
from .smith import pair, vec_sub
from .weyl_ext import ExtAffineElement

Coweight = Tuple[int, ...]


@dataclass(frozen=True)
class SteinbergFactorization:
    x: ExtAffineElement
    nu: Coweight
    lengths: Tuple[int, int, int]    # l(x), l(t_nu), l(w)


def box_coweights(rank: int, box: int) -> List[Coweight]:
    """All coweights with sup-norm at most box, lexicographically"""
    return [tuple(c) for c in product(range(-box, box + 1), repeat=rank)]


class SteinbergCalculus:
    def __init__(self, cosets: CosetCalculus, alcoves: AlcoveGeometry):
        self.cosets = cosets
        self.alcoves = alcoves
        self.coxeter = cosets.coxeter
        self.group = cosets.group
        self.datum = cosets.datum
        self._restricted: Dict[Tuple[FinitarySubset, int], List[ExtAffineElement]] = {}

    def _literal(self, w: ExtAffineElement) -> str:
        return self.group.element_literal(w)

    def steinberg_factor(self, w: ExtAffineElement) -> SteinbergFactorization:
        """w = (w t_{mu - sigma}) t_{sigma - mu} with mu from the Pi-box of w"""
        if not self.cosets.is_in_WS(w):
            raise NotInWS(f"{self._literal(w)} is not minimal in its coset wW")
        mu = self.alcoves.pi_box_of(w).mu
        sigma = self.datum.sigma
        x = self.group.mul(w, self.group.translation(vec_sub(mu, sigma)))
        nu = vec_sub(sigma, mu)
        t_nu = self.group.translation(nu)
        lengths = (self.group.length(x), self.group.length(t_nu), self.group.length(w))

        if not self.alcoves.is_restricted(x) or not self.datum.is_antidominant(nu) \
                or self.group.mul(x, t_nu) != w or lengths[2] != lengths[0] + lengths[1]:
            raise InternalInconsistency(f"Steinberg factorization of {self._literal(w)} is inconsistent")
        return SteinbergFactorization(x=x, nu=nu, lengths=lengths)

    def steinberg_label(self, y: ExtAffineElement, mu: Sequence[int], subset: FinitarySubset) -> ExtAffineElement:
        """Label y t_{w0(mu)} of the product of a restricted Whittaker object with IC^mu"""
        mu = tuple(mu)
        if not self.alcoves.is_restricted(y):
            raise NotRestricted(f"{self._literal(y)} is not restricted")
        if not self.cosets.is_in_AWS(y, subset):
            raise NotInAWS(f"{self._literal(y)} is not in ^A W^S for A = {{{self.cosets.subset_label(subset)}}}")
        if not self.datum.is_dominant(mu):
            raise NotDominant(f"{list(mu)} is not dominant")

        w0 = self.datum.longest()
        label = self.group.mul(y, self.group.translation(w0.apply(mu)))
        if not self.cosets.is_in_AWS(label, subset) or \
                self.group.length(label) != self.group.length(y) + self.group.length(self.group.translation(mu)):
            raise InternalInconsistency(f"Label {self._literal(label)} breaks length additivity")
        return label

    def enumerate_restricted(self, subset: FinitarySubset, box: int) -> List[ExtAffineElement]:
        """Restricted elements of ^A W^S_ext with translation in the box"""
        key = (subset, box)
        if key in self._restricted:
            return list(self._restricted[key])
        result = []
        coweights = box_coweights(self.datum.rank, box)
        for v in self.datum.weyl_group():
            for lam in coweights:
                w = self.group.make(v, lam)
                if self.alcoves.is_restricted(w) and self.cosets.is_in_AWS(w, subset):
                    result.append(w)
        self._restricted[key] = result
        return list(result)

    def restricted_minimal_labels(self, subset: FinitarySubset, box: int) -> List[ExtAffineElement]:
        """Bruhat-minimal elements among the restricted elements of ^A W^S_ext in the box"""
        return self.coxeter.minimal_elements(self.enumerate_restricted(subset, box))

    # Radical torsor

    def is_radical(self, y: Sequence[int]) -> bool:
        return all(pair(alpha, y) == 0 for alpha in self.datum.simple_roots)

    def torsor_shift(self, x: ExtAffineElement, y0: Sequence[int]) -> ExtAffineElement:
        """x t_{y0} for y0 in Y_0; restricted elements stay restricted"""
        if not self.is_radical(y0):
            raise ValueError(f"{list(y0)} does not lie in the radical Y_0")
        return self.group.mul(x, self.group.translation(y0))

    def same_modulo_radical(self, a: ExtAffineElement, b: ExtAffineElement) -> bool:
        difference = self.group.mul(self.group.inv(a), b)
        return self.group.is_translation(difference) and self.is_radical(difference.trans)
