#!/usr/bin/env python3
"""
Root data with connected center.

Y = Z^rank is the coweight lattice and X its dual under the dot product, so
roots are stored as integer covectors and coroots as integer vectors. Building
a datum derives the positive roots, 2rho, a coweight sigma pairing to 1 with
every simple root, the Dynkin components, the radical Y_0 and the finite Weyl
group.
"""

import json
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

import networkx as nx
from sympy import Matrix

from .errors import CenterNotConnected, MalformedSpec, SigmaUnsolvable
from .presets import PRESETS, SL2_SPEC
from .smith import (
    IntMatrix,
    IntVector,
    SmithDecomposition,
    identity_matrix,
    mat_mul,
    pair,
    smith_normal_form,
    vec_add,
    vec_scale,
    vec_sub,
)
from .weyl_ext import FiniteWeylElement

Coweight = Tuple[int, ...]
RootFunctional = Tuple[int, ...]

# Real roots of an affine or indefinite Cartan matrix never run out
MAX_POSITIVE_ROOTS = 5000


@dataclass(frozen=True)
class RootDatum:
    name: str
    rank: int
    simple_roots: Tuple[RootFunctional, ...]
    simple_coroots: Tuple[Coweight, ...]
    positive_roots: Tuple[RootFunctional, ...]
    positive_coroots: Tuple[Coweight, ...]
    root_coefficients: Tuple[IntVector, ...]    # simple-root coordinates of positive roots
    two_rho: RootFunctional
    sigma: Coweight
    components: Tuple[Tuple[int, ...], ...]
    radical_basis: Tuple[Coweight, ...]
    cartan: IntMatrix                             # cartan[i][j] = <alpha_i, alpha_j^vee>
    sigma_given: bool = False
    coroot_system: Optional[SmithDecomposition] = field(default=None, compare=False, repr=False)
    root_system: Optional[SmithDecomposition] = field(default=None, compare=False, repr=False)
    weyl_elements: Tuple[FiniteWeylElement, ...] = field(default=(), compare=False, repr=False)
    weyl_lengths: Dict[FiniteWeylElement, int] = field(default_factory=dict, compare=False, repr=False)
    weyl_inverses: Dict[FiniteWeylElement, FiniteWeylElement] = field(
        default_factory=dict, compare=False, repr=False)
    root_index: Dict[RootFunctional, int] = field(default_factory=dict, compare=False, repr=False)

    # Pairings and roots

    def pairing(self, alpha: Sequence[int], lam: Sequence) -> Any:
        """<alpha, lambda>"""
        if len(alpha) != self.rank or len(lam) != self.rank:
            raise MalformedSpec(
                f"Pairing needs vectors of length {self.rank}, got {len(alpha)} and {len(lam)}"
            )
        return pair(alpha, lam)

    def rho_pairing(self, lam: Sequence[int]) -> Fraction:
        """<rho, lambda> computed as <2rho, lambda> / 2"""
        return Fraction(pair(self.two_rho, lam), 2)

    def coroot_of(self, beta: Sequence[int]) -> Coweight:
        """Coroot of a positive root"""
        return self.positive_coroots[self._positive_index(beta)]

    def height(self, beta: Sequence[int]) -> int:
        """Sum of the simple-root coefficients of a positive root"""
        return sum(self.root_coefficients[self._positive_index(beta)])

    def _positive_index(self, beta: Sequence[int]) -> int:
        key = tuple(beta)
        if key not in self.root_index:
            raise MalformedSpec(f"{list(beta)} is not a positive root of {self.name}")
        return self.root_index[key]

    def is_positive_root(self, beta: Sequence[int]) -> bool:
        return tuple(beta) in self.root_index

    def highest_roots(self) -> List[RootFunctional]:
        """Highest root of each Dynkin component, in component order"""
        result = []
        for component in self.components:
            best = None
            for k, coeffs in enumerate(self.root_coefficients):
                support = {i for i, c in enumerate(coeffs) if c != 0}
                if not support <= set(component):
                    continue
                if best is None or sum(coeffs) > sum(self.root_coefficients[best]):
                    best = k
            result.append(self.positive_roots[best])
        return result

    def is_semisimple(self) -> bool:
        return not self.radical_basis

    # Reflections

    def reflect_coweight(self, i: int, lam: Sequence[int]) -> Coweight:
        """s_i(lambda) = lambda - <alpha_i, lambda> alpha_i^vee"""
        return vec_sub(lam, vec_scale(pair(self.simple_roots[i], lam), self.simple_coroots[i]))

    def simple_reflection(self, i: int) -> FiniteWeylElement:
        alpha, coroot = self.simple_roots[i], self.simple_coroots[i]
        return FiniteWeylElement(tuple(
            tuple((1 if r == c else 0) - coroot[r] * alpha[c] for c in range(self.rank))
            for r in range(self.rank)
        ))

    # Dominance

    def is_dominant(self, lam: Sequence[int]) -> bool:
        return all(pair(alpha, lam) >= 0 for alpha in self.simple_roots)

    def is_strictly_dominant(self, lam: Sequence[int]) -> bool:
        return all(pair(alpha, lam) > 0 for alpha in self.simple_roots)

    def is_antidominant(self, lam: Sequence[int]) -> bool:
        return all(pair(alpha, lam) <= 0 for alpha in self.simple_roots)

    def dominant_part(self, lam: Sequence[int]) -> Tuple[Coweight, FiniteWeylElement]:
        """Dominant W-translate dom(lambda) and the minimal v with v(lambda) = dom(lambda)"""
        mu = tuple(lam)
        v = self.identity_finite()
        while True:
            negative = [i for i, alpha in enumerate(self.simple_roots) if pair(alpha, mu) < 0]
            if not negative:
                return mu, v
            i = negative[0]
            mu = self.reflect_coweight(i, mu)
            v = self.simple_reflection(i).compose(v)

    def dominant(self, lam: Sequence[int]) -> Coweight:
        return self.dominant_part(lam)[0]

    def coroot_coefficients(self, mu: Sequence[int]) -> Optional[IntVector]:
        """Coefficients of mu in the simple coroots, or None if mu is not in the coroot lattice"""
        return self.coroot_system.solve(tuple(mu))

    def in_coroot_lattice(self, mu: Sequence[int]) -> bool:
        return self.coroot_coefficients(mu) is not None

    def is_sum_of_positive_coroots(self, mu: Sequence[int]) -> bool:
        coefficients = self.coroot_coefficients(mu)
        # simple coroots are independent, so the coefficients are unique
        return coefficients is not None and all(c >= 0 for c in coefficients)

    def coroot_coefficients_mod_radical(self, mu: Sequence[int]) -> Optional[IntVector]:
        """Integer c with mu - sum c_i alpha_i^vee in Y_0, or None if the class of mu misses the coroot lattice"""
        pairings = Matrix([pair(alpha, mu) for alpha in self.simple_roots])
        # cartan[i][j] = <alpha_i, alpha_j^vee>
        solution = Matrix(self.cartan).LUsolve(pairings)
        if not all(x.is_integer for x in solution):
            return None
        return tuple(int(x) for x in solution)

    def is_sum_of_positive_coroots_mod_radical(self, mu: Sequence[int]) -> bool:
        coefficients = self.coroot_coefficients_mod_radical(mu)
        return coefficients is not None and all(c >= 0 for c in coefficients)

    def saturated_set(self, mu: Sequence[int]) -> List[Coweight]:
        """All kappa with dom(kappa) <= mu for a dominant mu, closed under root strings"""
        start = tuple(mu)
        seen = {start}
        queue = deque([start])
        while queue:
            kappa = queue.popleft()
            for beta, coroot in zip(self.positive_roots, self.positive_coroots):
                n = pair(beta, kappa)
                step = coroot if n > 0 else tuple(-x for x in coroot)
                current = kappa
                for _ in range(abs(n)):
                    current = vec_sub(current, step)
                    if current not in seen:
                        seen.add(current)
                        queue.append(current)
        return sorted(seen)

    # Finite Weyl group

    def identity_finite(self) -> FiniteWeylElement:
        return FiniteWeylElement(identity_matrix(self.rank))

    def weyl_group(self) -> Tuple[FiniteWeylElement, ...]:
        """Elements of W ordered by length, then by greedy reduced word"""
        return self.weyl_elements

    def longest(self) -> FiniteWeylElement:
        return self.weyl_elements[-1]

    def finite_length(self, v: FiniteWeylElement) -> int:
        return self.weyl_lengths[v]

    def finite_inverse(self, v: FiniteWeylElement) -> FiniteWeylElement:
        return self.weyl_inverses[v]

    def finite_word(self, v: FiniteWeylElement) -> Tuple[int, ...]:
        """Greedy reduced word of v, stripping the lowest-index left descent first"""
        word = []
        current = v
        while self.weyl_lengths[current] > 0:
            for i in range(len(self.simple_roots)):
                candidate = self.simple_reflection(i).compose(current)
                if self.weyl_lengths[candidate] < self.weyl_lengths[current]:
                    word.append(i)
                    current = candidate
                    break
        return tuple(word)

    def act_on_root(self, v: FiniteWeylElement, alpha: Sequence[int]) -> RootFunctional:
        """v(alpha) = alpha o v^-1, so that <v(alpha), v(y)> = <alpha, y>"""
        inverse = self.weyl_inverses[v].matrix
        return tuple(sum(alpha[r] * inverse[r][c] for r in range(self.rank)) for c in range(self.rank))

    # Serialization

    def to_spec(self) -> Dict[str, Any]:
        spec = {
            "name": self.name,
            "rank": self.rank,
            "simple_roots": [list(a) for a in self.simple_roots],
            "simple_coroots": [list(c) for c in self.simple_coroots],
        }
        if self.sigma_given:
            spec["sigma"] = list(self.sigma)
        return spec


def _check_spec(spec: Dict[str, Any]) -> Tuple[str, int, Tuple[IntVector, ...], Tuple[IntVector, ...]]:
    """Validate the shape of a datum description"""
    for key in ("rank", "simple_roots", "simple_coroots"):
        if key not in spec:
            raise MalformedSpec(f"Datum description is missing '{key}'")
    rank = spec["rank"]
    if not isinstance(rank, int) or isinstance(rank, bool) or rank < 1:
        raise MalformedSpec(f"rank must be a positive integer, got {rank!r}")

    def vectors(key):
        raw = spec[key]
        if not isinstance(raw, list) or not raw:
            raise MalformedSpec(f"'{key}' must be a non-empty list of integer arrays")
        result = []
        for vec in raw:
            if not isinstance(vec, list) or len(vec) != rank or \
                    not all(isinstance(x, int) and not isinstance(x, bool) for x in vec):
                raise MalformedSpec(f"'{key}' entry {vec!r} is not an integer array of length {rank}")
            result.append(tuple(vec))
        return tuple(result)

    roots = vectors("simple_roots")
    coroots = vectors("simple_coroots")
    if len(roots) != len(coroots):
        raise MalformedSpec(f"{len(roots)} simple roots but {len(coroots)} simple coroots")
    return str(spec.get("name", "custom")), rank, roots, coroots


def _check_cartan(cartan: IntMatrix):
    """Generalized Cartan matrix conditions; finite type is confirmed by root generation"""
    n = len(cartan)
    for i in range(n):
        if cartan[i][i] != 2:
            raise MalformedSpec(f"<alpha_{i + 1}, alpha_{i + 1}^vee> = {cartan[i][i]}, expected 2")
        for j in range(n):
            if i == j:
                continue
            if cartan[i][j] > 0:
                raise MalformedSpec(f"Cartan entry ({i + 1},{j + 1}) = {cartan[i][j]} is positive")
            if (cartan[i][j] == 0) != (cartan[j][i] == 0):
                raise MalformedSpec(f"Cartan entries ({i + 1},{j + 1}) and ({j + 1},{i + 1}) disagree on zero")
    if Matrix(cartan).det() == 0:
        raise MalformedSpec("Cartan matrix is singular, not of finite type")


def _positive_roots(roots, coroots, cartan) -> List[Tuple[IntVector, Coweight]]:
    """Positive roots in simple-root coordinates with their coroots, by closure"""
    n = len(roots)
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    coroot_of = {simple[i]: coroots[i] for i in range(n)}
    queue = deque(simple)
    while queue:
        coeffs = queue.popleft()
        for i in range(n):
            if coeffs == simple[i]:
                continue
            p = sum(coeffs[j] * cartan[j][i] for j in range(n))
            reflected = tuple(c - p if j == i else c for j, c in enumerate(coeffs))
            if p == 0 or min(reflected) < 0 or reflected in coroot_of:
                continue
            beta_vee = coroot_of[coeffs]
            coroot_of[reflected] = vec_sub(beta_vee, vec_scale(pair(roots[i], beta_vee), coroots[i]))
            queue.append(reflected)
            if len(coroot_of) > MAX_POSITIVE_ROOTS:
                raise MalformedSpec("Root system is infinite: the Cartan matrix is not of finite type")
    ordered = sorted(coroot_of, key=lambda c: (sum(c), tuple(-x for x in c)))
    return [(c, coroot_of[c]) for c in ordered]


def _components(cartan: IntMatrix) -> Tuple[Tuple[int, ...], ...]:
    """Connected components of the Dynkin diagram"""
    graph = nx.Graph()
    graph.add_nodes_from(range(len(cartan)))
    for i in range(len(cartan)):
        for j in range(i + 1, len(cartan)):
            if cartan[i][j] != 0:
                graph.add_edge(i, j)
    components = [tuple(sorted(c)) for c in nx.connected_components(graph)]
    return tuple(sorted(components))


def _enumerate_weyl_group(datum: RootDatum):
    """Closure of the simple reflections, with lengths and inverses"""
    generators = [datum.simple_reflection(i) for i in range(len(datum.simple_roots))]
    identity = datum.identity_finite()
    lengths = {identity: 0}
    inverses = {identity: identity}
    layer = [identity]
    while layer:
        next_layer = []
        for v in layer:
            for s in generators:
                w = s.compose(v)
                if w not in lengths:
                    lengths[w] = lengths[v] + 1
                    # (s v)^-1 = v^-1 s
                    inverses[w] = inverses[v].compose(s)
                    next_layer.append(w)
        layer = next_layer
    return lengths, inverses


def build_datum(spec: Dict[str, Any]) -> RootDatum:
    """
    Build a root datum from its description.

    Args:
        spec: Mapping with rank, simple_roots, simple_coroots and optional name, sigma

    Returns:
        RootDatum with every derived field computed

    Raises:
        MalformedSpec: the description is inconsistent or not of finite type
        CenterNotConnected: X modulo the root lattice has torsion
    """
    name, rank, roots, coroots = _check_spec(spec)
    n = len(roots)
    cartan = tuple(tuple(pair(roots[i], coroots[j]) for j in range(n)) for i in range(n))
    _check_cartan(cartan)

    root_system = smith_normal_form([list(a) for a in roots])
    if any(d != 1 for d in root_system.elementary_divisors):
        raise CenterNotConnected(
            f"{name}: elementary divisors of the simple-root matrix are "
            f"{list(root_system.elementary_divisors)}, so X modulo the root lattice has torsion"
        )
    coroot_system = smith_normal_form([[coroots[i][k] for i in range(n)] for k in range(rank)])

    ones = tuple(1 for _ in range(n))
    if "sigma" in spec and spec["sigma"] is not None:
        sigma = tuple(spec["sigma"])
        if len(sigma) != rank or not all(isinstance(x, int) for x in sigma):
            raise MalformedSpec(f"sigma must be an integer array of length {rank}")
        if tuple(pair(a, sigma) for a in roots) != ones:
            raise MalformedSpec(f"sigma {list(sigma)} does not pair to 1 with every simple root")
        sigma_given = True
    else:
        sigma = root_system.solve(ones)
        if sigma is None:
            raise SigmaUnsolvable(f"{name}: no integral sigma although X modulo the root lattice is torsion-free")
        sigma_given = False

    positive = _positive_roots(roots, coroots, cartan)
    coefficient_list = tuple(c for c, _ in positive)
    positive_roots = []
    for coeffs in coefficient_list:
        covector = tuple(0 for _ in range(rank))
        for j, c in enumerate(coeffs):
            covector = vec_add(covector, vec_scale(c, roots[j]))
        positive_roots.append(covector)
    two_rho = tuple(0 for _ in range(rank))
    for beta in positive_roots:
        two_rho = vec_add(two_rho, beta)

    datum = RootDatum(
        name=name,
        rank=rank,
        simple_roots=roots,
        simple_coroots=coroots,
        positive_roots=tuple(positive_roots),
        positive_coroots=tuple(c for _, c in positive),
        root_coefficients=coefficient_list,
        two_rho=two_rho,
        sigma=sigma,
        components=_components(cartan),
        radical_basis=tuple(root_system.kernel_basis()),
        cartan=cartan,
        sigma_given=sigma_given,
        coroot_system=coroot_system,
        root_system=root_system,
        root_index={beta: k for k, beta in enumerate(positive_roots)},
    )

    lengths, inverses = _enumerate_weyl_group(datum)
    datum.weyl_lengths.update(lengths)
    datum.weyl_inverses.update(inverses)
    words = {v: datum.finite_word(v) for v in lengths}
    ordered = sorted(lengths, key=lambda v: (lengths[v], words[v]))
    object.__setattr__(datum, "weyl_elements", tuple(ordered))

    if len(positive_roots) != datum.finite_length(datum.longest()):
        raise MalformedSpec(
            f"{name}: {len(positive_roots)} positive roots but the longest element has length "
            f"{datum.finite_length(datum.longest())}"
        )
    return datum


def load_datum(name_or_path: str) -> RootDatum:
    """Build a preset by name (case-insensitive) or a datum from a JSON file"""
    key = name_or_path.strip().upper()
    if key in PRESETS:
        return build_datum(PRESETS[key])
    if key == "SL2":
        return build_datum(SL2_SPEC)

    path = Path(name_or_path)
    if not path.is_file():
        raise MalformedSpec(
            f"'{name_or_path}' is neither a preset ({', '.join(sorted(PRESETS))}) nor a datum file"
        )
    try:
        with open(path, 'r', encoding='utf-8') as f:
            spec = json.load(f)
    except json.JSONDecodeError as e:
        raise MalformedSpec(f"Datum file {path} is not valid JSON: {e}")
    if not isinstance(spec, dict):
        raise MalformedSpec(f"Datum file {path} must hold a JSON object")
    spec.setdefault("name", path.stem)
    return build_datum(spec)
