#!/usr/bin/env python3
"""
Coxeter structure of W_aff inside W_ext.

Generators S_aff are the finite simple reflections followed by one affine
reflection per Dynkin component. Elements split as omega * (product of
generators) with omega of length zero, and the Bruhat order on W_ext compares
omega parts first, then runs the descent recursion.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

import networkx as nx

from .smith import vec_neg
from .weyl_ext import ExtAffineElement, ExtAffineWeylGroup, FiniteWeylElement


@dataclass(frozen=True)
class SimpleReflection:
    index: int       # position in S_aff
    kind: str        # "finite" or "affine"
    position: int    # simple-root index (finite) or component index (affine)
    element: ExtAffineElement

    @property
    def label(self) -> str:
        prefix = "s" if self.kind == "finite" else "a"
        return f"{prefix}{self.position + 1}"


@dataclass(frozen=True)
class ReducedWord:
    omega: ExtAffineElement
    letters: Tuple[int, ...]


class CoxeterSystem:
    def __init__(self, group: ExtAffineWeylGroup, cache_size: int = 65536):
        self.group = group
        self.datum = group.datum
        self.generators: Tuple[SimpleReflection, ...] = self._build_generators()
        self.finite_indices: FrozenSet[int] = frozenset(
            g.index for g in self.generators if g.kind == "finite")
        self._leq = lru_cache(maxsize=cache_size)(self._bruhat_leq_same_omega)
        self._subword_products = lru_cache(maxsize=1024)(self._products_of_subwords)

    def _build_generators(self) -> Tuple[SimpleReflection, ...]:
        """Finite simple reflections, then t_{beta^vee} s_beta per component"""
        datum = self.datum
        generators = [
            SimpleReflection(i, "finite", i, self.group.from_simple(i))
            for i in range(len(datum.simple_roots))
        ]
        for c, beta in enumerate(datum.highest_roots()):
            coroot = datum.coroot_of(beta)
            reflection = FiniteWeylElement(tuple(
                tuple((1 if r == k else 0) - coroot[r] * beta[k] for k in range(datum.rank))
                for r in range(datum.rank)
            ))
            # t_{beta^vee} s_beta = s_beta t_{-beta^vee}
            element = self.group.make(reflection, vec_neg(coroot))
            generators.append(SimpleReflection(len(generators), "affine", c, element))
        return tuple(generators)

    def simple_reflections(self) -> List[SimpleReflection]:
        return list(self.generators)

    def generator(self, index: int) -> SimpleReflection:
        return self.generators[index]

    def component_generators(self, c: int) -> FrozenSet[int]:
        """S_aff indices belonging to Dynkin component c"""
        finite = set(self.datum.components[c])
        affine = {g.index for g in self.generators if g.kind == "affine" and g.position == c}
        return frozenset(finite | affine)

    def label_of(self, index: int) -> str:
        return self.generators[index].label

    # Descents

    def left_descents(self, a: ExtAffineElement) -> Tuple[SimpleReflection, ...]:
        length = self.group.length(a)
        return tuple(s for s in self.generators if self.group.length(self.group.mul(s.element, a)) < length)

    def right_descents(self, a: ExtAffineElement) -> Tuple[SimpleReflection, ...]:
        length = self.group.length(a)
        return tuple(s for s in self.generators if self.group.length(self.group.mul(a, s.element)) < length)

    def is_length_zero(self, a: ExtAffineElement) -> bool:
        return self.group.length(a) == 0

    def omega_decompose(self, a: ExtAffineElement) -> ReducedWord:
        """Strip right descents, lowest index first, so that a = omega * letters"""
        letters: List[int] = []
        current = a
        length = self.group.length(a)
        while length > 0:
            for s in self.generators:
                candidate = self.group.mul(current, s.element)
                candidate_length = self.group.length(candidate)
                if candidate_length < length:
                    letters.insert(0, s.index)
                    current, length = candidate, candidate_length
                    break
        return ReducedWord(omega=current, letters=tuple(letters))

    def reduced_word(self, a: ExtAffineElement) -> ReducedWord:
        return self.omega_decompose(a)

    def word_to_element(self, letters: Sequence[int], omega: Optional[ExtAffineElement] = None) -> ExtAffineElement:
        result = omega if omega is not None else self.group.identity()
        for index in letters:
            result = self.group.mul(result, self.generators[index].element)
        return result

    def format_word(self, word: ReducedWord) -> str:
        letters = "*".join(self.label_of(i) for i in word.letters) if word.letters else "e"
        return f"{self.group.format_element(word.omega)} | {letters}"

    # Bruhat order

    def same_omega_part(self, y: ExtAffineElement, w: ExtAffineElement) -> bool:
        """y w^-1 lies in W_aff"""
        return self.group.is_in_affine_subgroup(self.group.mul(y, self.group.inv(w)))

    def bruhat_leq(self, y: ExtAffineElement, w: ExtAffineElement) -> bool:
        if not self.same_omega_part(y, w):
            return False
        return self._leq(y, w)

    def bruhat_less(self, y: ExtAffineElement, w: ExtAffineElement) -> bool:
        return y != w and self.bruhat_leq(y, w)

    def _bruhat_leq_same_omega(self, y: ExtAffineElement, w: ExtAffineElement) -> bool:
        ly, lw = self.group.length(y), self.group.length(w)
        if ly > lw:
            return False
        if ly == lw:
            return y == w
        for s in self.generators:
            sw = self.group.mul(s.element, w)
            if self.group.length(sw) < lw:
                sy = self.group.mul(s.element, y)
                if self.group.length(sy) < ly:
                    return self._leq(sy, sw)
                return self._leq(y, sw)
        return False

    def cache_info(self):
        return self._leq.cache_info()

    # Subword oracle

    def _products_of_subwords(self, w: ExtAffineElement) -> FrozenSet[ExtAffineElement]:
        word = self.omega_decompose(w)
        products: Set[ExtAffineElement] = {word.omega}
        for index in word.letters:
            s = self.generators[index].element
            products |= {self.group.mul(p, s) for p in products}
        return frozenset(products)

    def subword_leq(self, y: ExtAffineElement, w: ExtAffineElement) -> bool:
        """y is a subword product of the fixed reduced word of w"""
        return y in self._subword_products(w)

    def bruhat_interval_graph(self, elements: Iterable[ExtAffineElement]) -> nx.DiGraph:
        """Strict Bruhat order among the given elements, edge y -> w iff y < w"""
        nodes = list(dict.fromkeys(elements))
        graph = nx.DiGraph()
        graph.add_nodes_from(nodes)
        for y in nodes:
            for w in nodes:
                if y != w and self.bruhat_leq(y, w):
                    graph.add_edge(y, w)
        return graph

    def minimal_elements(self, elements: Iterable[ExtAffineElement]) -> List[ExtAffineElement]:
        """Bruhat-minimal elements among the given ones, in input order"""
        graph = self.bruhat_interval_graph(elements)
        return [node for node in graph.nodes if graph.in_degree(node) == 0]

    def affine_elements_up_to(self, max_length: int) -> List[ExtAffineElement]:
        """All of W_aff with length at most max_length, by breadth-first search"""
        identity = self.group.identity()
        seen: Dict[ExtAffineElement, int] = {identity: 0}
        layer = [identity]
        for length in range(1, max_length + 1):
            next_layer = []
            for w in layer:
                for s in self.generators:
                    candidate = self.group.mul(w, s.element)
                    if candidate not in seen and self.group.length(candidate) == length:
                        seen[candidate] = length
                        next_layer.append(candidate)
            layer = next_layer
        return list(seen)
