"""
Based root data of the supported split groups, their finite Weyl groups and
standard facets.

Coweights are integer vectors in a fixed basis of X_*(T) and roots are integer
vectors in the dual basis of X^*(T), so every pairing is a dot product.
"""
import re
from collections import deque
from dataclasses import dataclass
from typing import FrozenSet, Tuple

import numpy as np
from loguru import logger
from sympy import Matrix, factorint

from ..utils.errors import ConfigurationError, PreconditionError

# Bounds on the rank parameter per family, see _parse_label
_FAMILY_BOUNDS = {"SL": (2, 4), "GL": (2, 4), "PGL": (2, 4), "B": (2, 3), "C": (2, 3)}
_ALIASES = {"Sp4": "C2", "SO5": "B2_ad"}
_LABEL_PATTERN = re.compile(r"^(SL|GL|PGL|B|C|G)(\d*)(_ad|_sc)?$")
_TYPE_A_PATTERN = re.compile(r"^A(\d+)(_ad|_sc)?$")


@dataclass(frozen=True)
class StandardFacet:
    """A standard facet, given by the subset of simple root indices vanishing on it.

    The empty subset is the chamber C, the full set of simple roots is the vertex x_0.
    """

    simple: FrozenSet[int] = frozenset()

    def __str__(self):
        return ",".join(f"s{i + 1}" for i in sorted(self.simple))


def check_prime_power(q):
    """Return (p, s) with q = p**s.

    Raises:
        ConfigurationError: if q is not a prime power.
    """
    if not isinstance(q, (int, np.integer)) or q < 2:
        raise ConfigurationError(f"q has to be a prime power, got {q!r}.")
    factors = factorint(int(q))
    if len(factors) != 1:
        raise ConfigurationError(f"q has to be a prime power, got {q}.")
    ((p, s),) = factors.items()
    return int(p), int(s)


def _cartan_matrix(kind, n):
    """Cartan matrix with entries <coroot_i, root_j> for a connected Dynkin type of rank n."""
    cartan = 2 * np.eye(n, dtype=np.int64)
    for i in range(n - 1):
        cartan[i, i + 1] = cartan[i + 1, i] = -1
    if kind == "B":
        # last simple root short
        cartan[n - 1, n - 2] = -2
    elif kind == "C":
        cartan[n - 2, n - 1] = -2
    elif kind == "G":
        # first simple root short
        cartan = np.array([[2, -3], [-1, 2]], dtype=np.int64)
    return cartan


def _component_data(label, rank):
    """Simple roots, simple coroots and rank of X_*(T) for one irreducible catalog entry."""
    label = _ALIASES.get(label, label)
    type_a = _TYPE_A_PATTERN.match(label)
    if type_a is not None:
        digits, suffix = type_a.groups()
        label = f"{'PGL' if suffix == '_ad' else 'SL'}{int(digits) + 1}"
    if label == "G2":
        if rank not in (None, 2):
            raise ConfigurationError("G2 has rank 2.")
        cartan = _cartan_matrix("G", 2)
        return [tuple(int(x) for x in cartan[:, j]) for j in range(2)], [
            tuple(int(i == j) for i in range(2)) for j in range(2)
        ], 2
    match = _LABEL_PATTERN.match(label)
    if match is None:
        family, digits, suffix = label, None, None
    else:
        family, digits, suffix = match.groups()
    if family not in _FAMILY_BOUNDS:
        raise ConfigurationError(f"Unsupported group label {label!r}.")
    size = int(digits) if digits else rank
    if size is None:
        raise ConfigurationError(f"Group label {label!r} needs a rank.")
    if rank is not None and digits and int(digits) != rank:
        raise ConfigurationError(f"Label {label!r} conflicts with rank {rank}.")
    low, high = _FAMILY_BOUNDS[family]
    if not low <= size <= high:
        raise ConfigurationError(
            f"Rank {size} of {family} is outside the supported range [{low}, {high}]."
        )

    if family == "GL":
        roots = []
        for i in range(size - 1):
            vec = [0] * size
            vec[i], vec[i + 1] = 1, -1
            roots.append(tuple(vec))
        return roots, list(roots), size

    if family in ("SL", "PGL"):
        kind, n = "A", size - 1
        adjoint = family == "PGL"
    else:
        kind, n = family, size
        adjoint = suffix == "_ad"
    cartan = _cartan_matrix(kind, n)
    if adjoint:
        # basis of fundamental coweights: roots are unit vectors
        roots = [tuple(int(i == j) for i in range(n)) for j in range(n)]
        coroots = [tuple(int(x) for x in cartan[i, :]) for i in range(n)]
    else:
        # basis of simple coroots
        roots = [tuple(int(x) for x in cartan[:, j]) for j in range(n)]
        coroots = [tuple(int(i == j) for i in range(n)) for j in range(n)]
    return roots, coroots, n


def _block_sum(parts):
    """Combine root data of several components into the product datum."""
    total = sum(rank for _, _, rank in parts)
    roots, coroots = [], []
    offset = 0
    for comp_roots, comp_coroots, rank in parts:
        for root, coroot in zip(comp_roots, comp_coroots):
            roots.append((0,) * offset + root + (0,) * (total - offset - rank))
            coroots.append((0,) * offset + coroot + (0,) * (total - offset - rank))
        offset += rank
    return roots, coroots, total


class FiniteWeylGroup:
    """The finite Weyl group as integer matrices acting on X_*(T).

    Elements are indices into a breadth-first enumeration; index 0 is the
    identity and every stored word is reduced.
    """

    def __init__(self, datum):
        self._datum = datum
        r = datum.rank_x
        self.generators = []
        for alpha, coroot in zip(datum.simple_roots, datum.simple_coroots):
            # s(x) = x - <x, alpha> coroot
            self.generators.append(
                np.eye(r, dtype=np.int64) - np.outer(coroot, alpha).astype(np.int64)
            )
        self._matrices = [np.eye(r, dtype=np.int64)]
        self.words = [()]
        self._index = {self._matrices[0].tobytes(): 0}
        queue = deque([0])
        while queue:
            w = queue.popleft()
            for i, gen in enumerate(self.generators):
                mat = self._matrices[w] @ gen
                key = mat.tobytes()
                if key not in self._index:
                    self._index[key] = len(self._matrices)
                    self._matrices.append(mat)
                    self.words.append(self.words[w] + (i,))
                    queue.append(self._index[key])
        self.order = len(self._matrices)
        self._build_tables()
        logger.debug(f"Enumerated finite Weyl group of order {self.order}")

    def _build_tables(self):
        mats = np.array(self._matrices, dtype=np.int64)
        products = np.einsum("aij,bjk->abik", mats, mats)
        n = self.order
        self._mult = [[self._index[products[a, b].tobytes()] for b in range(n)] for a in range(n)]
        self._inverse = [row.index(0) for row in self._mult]
        datum = self._datum
        self._root_perm = []
        for mat in self._matrices:
            perm = []
            for coroot in datum.coroots:
                image = tuple(int(x) for x in mat @ np.array(coroot, dtype=np.int64))
                perm.append(datum.coroot_index[image])
            self._root_perm.append(tuple(perm))

    def index_of_matrix(self, mat):
        """Index of the element with the given action matrix, or None if it is not in the group."""
        return self._index.get(np.asarray(mat, dtype=np.int64).tobytes())

    def matrix(self, w):
        return self._matrices[w]

    def multiply(self, a, b):
        return self._mult[a][b]

    def inverse(self, w):
        return self._inverse[w]

    def length(self, w):
        return len(self.words[w])

    def determinant(self, w):
        return -1 if len(self.words[w]) % 2 else 1

    def act(self, w, lam):
        """Action of w on a coweight."""
        return tuple(int(x) for x in self._matrices[w] @ np.asarray(lam, dtype=np.int64))

    def act_on_root(self, w, root):
        """Index of w(root) for a root index."""
        return self._root_perm[w][root]

    def simple_reflection(self, i):
        return self._index[self.generators[i].tobytes()]

    def reflection(self, root):
        """Index of the reflection s_root for a root index."""
        datum = self._datum
        mat = np.eye(datum.rank_x, dtype=np.int64) - np.outer(
            datum.coroots[root], datum.roots[root]
        ).astype(np.int64)
        return self._index[mat.tobytes()]

    def subgroup(self, simple):
        """Indices of the parabolic subgroup generated by the given simple reflections."""
        elements = {0}
        queue = deque([0])
        gens = [self.simple_reflection(i) for i in simple]
        while queue:
            w = queue.popleft()
            for g in gens:
                x = self._mult[w][g]
                if x not in elements:
                    elements.add(x)
                    queue.append(x)
        return frozenset(elements)

    def longest_element(self, simple=None):
        """Longest element of the parabolic subgroup for the given simple indices (all if None)."""
        if simple is None:
            simple = range(len(self.generators))
        return max(self.subgroup(simple), key=lambda w: (len(self.words[w]), -w))

    def word_string(self, w):
        return " ".join(f"s{i + 1}" for i in self.words[w])


class RootDatum:
    """A based root datum (roots, X^*(T), coroots, X_*(T)) with q attached.

    Args:
        label (string): Name of the group, e.g. "SL3".
        q (int): Cardinality of the residue field.
        simple_roots (list of tuple): Simple roots in X^*(T) coordinates.
        simple_coroots (list of tuple): Simple coroots in X_*(T) coordinates.
        rank_x (int): Rank of X_*(T).
        parent_simple (list of int, optional): Indices of the simple roots in a parent datum, for Levi subdata.
    """

    def __init__(self, label, q, simple_roots, simple_coroots, rank_x, parent_simple=None):
        self.label = label
        self.q = int(q)
        self.p, self.s = check_prime_power(q)
        self.rank_x = rank_x
        self.simple_roots = [tuple(int(x) for x in a) for a in simple_roots]
        self.simple_coroots = [tuple(int(x) for x in a) for a in simple_coroots]
        self.n_simple = len(self.simple_roots)
        self.parent_simple = list(parent_simple) if parent_simple is not None else None
        self.cartan = [
            [self._dot(self.simple_coroots[i], self.simple_roots[j]) for j in range(self.n_simple)]
            for i in range(self.n_simple)
        ]
        self._check_inputs(self.cartan)
        self._close_roots()
        self._find_components()
        self.weyl = FiniteWeylGroup(self)
        logger.info(
            f"Built root datum {label} (q={q}): {self.n_positive} positive roots, |W|={self.weyl.order}"
        )

    @staticmethod
    def _dot(a, b):
        return sum(x * y for x, y in zip(a, b))

    @staticmethod
    def _check_inputs(cartan):
        logger.debug("Checking inputs to RootDatum.")
        for i, row in enumerate(cartan):
            if row[i] != 2:
                raise ConfigurationError("Simple roots and coroots must pair to 2.")
            if any(x > 0 for j, x in enumerate(row) if j != i):
                raise ConfigurationError("Off-diagonal Cartan entries must be non-positive.")

    def _close_roots(self):
        """Generate all roots by reflecting the simple roots until the set is stable."""
        n = self.n_simple
        found = {}
        queue = deque()
        for i in range(n):
            coeff = tuple(int(i == j) for j in range(n))
            found[coeff] = (self.simple_roots[i], self.simple_coroots[i])
            queue.append(coeff)
        while queue:
            coeff = queue.popleft()
            root, coroot = found[coeff]
            for i in range(n):
                k = self._dot(self.simple_coroots[i], root)
                new_coeff = tuple(c - k * int(i == j) for j, c in enumerate(coeff))
                if new_coeff in found:
                    continue
                new_root = tuple(x - k * a for x, a in zip(root, self.simple_roots[i]))
                m = self._dot(coroot, self.simple_roots[i])
                new_coroot = tuple(y - m * b for y, b in zip(coroot, self.simple_coroots[i]))
                found[new_coeff] = (new_root, new_coroot)
                queue.append(new_coeff)
        positive = [c for c in found if all(x >= 0 for x in c)]
        positive.sort(key=lambda c: (sum(c), tuple(-x for x in c)))
        self.n_positive = len(positive)
        self.root_coefficients = positive + [tuple(-x for x in c) for c in positive]
        self.roots = [found[c][0] for c in self.root_coefficients]
        self.coroots = [found[c][1] for c in self.root_coefficients]
        self.root_index = {root: k for k, root in enumerate(self.roots)}
        self.coroot_index = {coroot: k for k, coroot in enumerate(self.coroots)}

    def _find_components(self):
        parent = list(range(self.n_simple))

        def find(i):
            while parent[i] != i:
                i = parent[i]
            return i

        for i in range(self.n_simple):
            for j in range(self.n_simple):
                if i != j and self.cartan[i][j] != 0:
                    parent[find(i)] = find(j)
        groups = {}
        for i in range(self.n_simple):
            groups.setdefault(find(i), []).append(i)
        self.components = sorted(tuple(g) for g in groups.values())
        self.highest_roots = []
        for comp in self.components:
            members = [
                k
                for k in range(self.n_positive)
                if all(c == 0 for j, c in enumerate(self.root_coefficients[k]) if j not in comp)
            ]
            self.highest_roots.append(max(members, key=lambda k: (self.height(k), -k)))

    def is_irreducible(self):
        return len(self.components) == 1

    def height(self, root):
        return sum(self.root_coefficients[root])

    def is_positive_root(self, root):
        return root < self.n_positive

    def negative(self, root):
        return (root + self.n_positive) % (2 * self.n_positive)

    def pairing(self, lam, root):
        """The pairing <lam, root> for a coweight and a root index."""
        return self._dot(lam, self.roots[root])

    def simple_reflect(self, lam, i):
        """s_i(lam) = lam - <lam, alpha_i> coroot_i."""
        k = self._dot(lam, self.simple_roots[i])
        return tuple(x - k * c for x, c in zip(lam, self.simple_coroots[i]))

    def facet_positive_roots(self, facet):
        """Indices of the positive roots in the span of the facet's simple roots."""
        return [
            k
            for k in range(self.n_positive)
            if all(c == 0 for j, c in enumerate(self.root_coefficients[k]) if j not in facet.simple)
        ]

    def weyl_chamber_test(self, lam, facet=StandardFacet(), sign=1):
        """Test whether lam lies in the Weyl chamber C^sign(F).

        C^+(F) consists of the coweights pairing non-negatively with the roots
        in (Phi^+ - Phi_F^+) and in Phi_F^-, and C^-(F) = -C^+(F).
        """
        facet_roots = set(self.facet_positive_roots(facet))
        for k in range(self.n_positive):
            value = sign * self.pairing(lam, k)
            if k in facet_roots:
                value = -value
            if value < 0:
                return False
        return True

    def is_dominant(self, lam):
        return all(self._dot(lam, a) >= 0 for a in self.simple_roots)

    def dominant_representative(self, lam):
        """Return (dominant coweight, Weyl group index w) with w applied to the result giving lam."""
        lam = tuple(lam)
        word = []
        while True:
            for i, alpha in enumerate(self.simple_roots):
                if self._dot(lam, alpha) < 0:
                    lam = self.simple_reflect(lam, i)
                    word.append(i)
                    break
            else:
                break
        w = 0
        for i in word:
            w = self.weyl.multiply(w, self.weyl.simple_reflection(i))
        return lam, w

    def weyl_orbit(self, lam):
        """The W-orbit of a coweight, sorted."""
        lam = tuple(lam)
        orbit = {lam}
        queue = deque([lam])
        while queue:
            mu = queue.popleft()
            for i in range(self.n_simple):
                nu = self.simple_reflect(mu, i)
                if nu not in orbit:
                    orbit.add(nu)
                    queue.append(nu)
        return sorted(orbit)

    def dominance_order(self, lam, mu):
        """Compare two dominant coweights in the coroot-cone order.

        Returns:
            string: "equal", "<=" if mu - lam is a non-negative integral combination of simple coroots, ">=" for the reverse, else "incomparable"

        Raises:
            PreconditionError: if one of the coweights is not dominant.
        """
        if not (self.is_dominant(lam) and self.is_dominant(mu)):
            raise PreconditionError(f"dominance_order needs dominant coweights, got {lam} and {mu}.")
        diff = [m - l for l, m in zip(lam, mu)]
        if not any(diff):
            return "equal"
        if self.n_simple == 0:
            return "incomparable"
        coeffs = self._coroot_coordinates(diff)
        if coeffs is None:
            return "incomparable"
        if all(c >= 0 for c in coeffs):
            return "<="
        if all(c <= 0 for c in coeffs):
            return ">="
        return "incomparable"

    def _coroot_coordinates(self, vec):
        """Integral coordinates of vec in the simple coroots, or None if vec is not in their span."""
        basis = Matrix(self.rank_x, self.n_simple, lambda a, i: self.simple_coroots[i][a])
        try:
            solution, params = basis.gauss_jordan_solve(Matrix(vec))
        except ValueError:
            return None
        if params.shape[0] != 0 or any(not x.is_integer for x in solution):
            return None
        return [int(x) for x in solution]

    def levi(self, facet):
        """The root subdatum attached to a standard facet, on the same lattice X_*(T)."""
        simple = sorted(facet.simple)
        return RootDatum(
            f"{self.label}[{facet}]",
            self.q,
            [self.simple_roots[i] for i in simple],
            [self.simple_coroots[i] for i in simple],
            self.rank_x,
            parent_simple=simple,
        )

    def all_facets(self):
        """All standard facets, from the chamber C to the vertex x_0."""
        facets = []
        for mask in range(2**self.n_simple):
            facets.append(StandardFacet(frozenset(i for i in range(self.n_simple) if mask >> i & 1)))
        return facets

    def coweights_in_box(self, bound):
        """All coweights with sup-norm at most bound, in lexicographic order."""
        axis = range(-bound, bound + 1)
        grid = np.array(np.meshgrid(*([axis] * self.rank_x), indexing="ij")).reshape(self.rank_x, -1).T
        return [tuple(int(x) for x in row) for row in grid]

    def to_json(self):
        return {
            "label": self.label,
            "rank": self.rank_x,
            "q": self.q,
            "cartan": self.cartan,
            "roots": [list(a) for a in self.roots[: self.n_positive]],
            "coroots": [list(a) for a in self.coroots[: self.n_positive]],
        }


def build_root_datum(group_label, rank=None, q=3):
    """Construct the based root datum of a catalog group.

    Args:
        group_label (string): One of SL2-4, GL2-4, PGL2-4, B2, B3, C2, C3 (simply connected, append "_ad" for adjoint), Sp4, SO5, G2, A1-A3, or a product such as "SL2xSL2".
        rank (int, optional): Rank parameter for labels given without digits, e.g. ("SL", 3). Defaults to None.
        q (int, optional): Cardinality of the residue field, a prime power. Defaults to 3.

    Returns:
        RootDatum: The datum with q attached

    Raises:
        ConfigurationError: for unsupported labels, ranks or q.
    """
    logger.debug(f"Building root datum {group_label} (rank={rank}, q={q})")
    check_prime_power(q)
    parts = group_label.split("x")
    if len(parts) > 1 and rank is not None:
        raise ConfigurationError("Product labels do not take a rank.")
    data = [_component_data(part, rank) for part in parts]
    roots, coroots, rank_x = data[0] if len(data) == 1 else _block_sum(data)
    label = group_label
    if rank is not None and not re.search(r"\d", group_label):
        label = re.sub(r"^([A-Za-z]+)", rf"\g<1>{rank}", group_label)
    return RootDatum(label, q, roots, coroots, rank_x)
