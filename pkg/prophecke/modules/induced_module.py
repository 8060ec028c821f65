"""
Finite-dimensional right modules of the characteristic p Hecke algebra over F_p.

A module is given by one matrix per algebra generator: the torus unit vectors,
the lifts n_A of the simple affine reflections and, when Omega is nontrivial,
a lift of its generator. The action of tau_x follows a reduced expression
x = omega~ n_(k1) ... n_(km), so M(tau_x) = M(omega~) M(n_k1) ... M(n_km).
"""
from dataclasses import dataclass, field
from typing import FrozenSet, Tuple

import numpy as np
from loguru import logger

from . import linear_algebra as la
from .affine_characters import AffineCharacters
from ..combinatorics.extended_group import TildeElement
from ..utils.errors import ConfigurationError, ModeMismatchError, PreconditionError


class OmegaTildeGroup:
    """The length-zero subgroup of W~: the finite torus and a lift g~ of a generator of Omega.

    Args:
        group (ExtendedGroup): The group W~.

    Raises:
        PreconditionError: if Omega is not cyclic.
    """

    def __init__(self, group):
        self.group = group
        affine = group.affine
        generator, self.order = affine.omega_cyclic_data()
        self.generator = None if self.order == 1 else group.lift(generator)
        self.torus_generators = [
            group.torus(tuple(int(i == j) for j in range(group.rank))) for i in range(group.rank)
        ]
        self.generators = self.torus_generators + ([self.generator] if self.generator is not None else [])
        self.free_power, self.central_coweight = None, None
        if self.order == 0:
            self.free_power, self.central_coweight = self._free_translation()
        logger.debug(
            f"Omega~ of {group.datum.label}: order {self.order or 'infinite'}, generator {self.generator}"
        )

    def _free_translation(self):
        """Smallest m > 0 with g^m a translation e^mu, and that mu."""
        W = self.group.weyl
        x, m = self.generator, 1
        while x.u != 0:
            x = self.group.multiply(x, self.generator)
            m += 1
            if m > W.order:
                raise PreconditionError("No power of the Omega generator is a translation.")
        return m, x.lam

    def power(self, j):
        """g~^j, with negative j through the inverse."""
        group = self.group
        if self.generator is None:
            return group.identity
        base = self.generator if j >= 0 else group.inverse(self.generator)
        result = group.identity
        for _ in range(abs(j)):
            result = group.multiply(result, base)
        return result

    def decompose(self, x):
        """Write a length-zero x as t g~^j.

        Returns:
            tuple: (torus exponent vector t, j)
        """
        group = self.group
        if self.generator is None:
            j = 0
        else:
            (j,) = group.affine.omega_class(x.w)
        rest = group.multiply(x, group.inverse(self.power(j)))
        assert rest.u == 0 and not any(rest.lam), "Length-zero element is not a torus multiple of g~^j."
        return rest.t, j

    def torus_of_power(self, m):
        """The torus part of g~^m when g~^m lies in the torus."""
        t, j = self.decompose(self.power(m))
        assert j == 0
        return t


@dataclass(frozen=True)
class RelationPair:
    """The identity M(g) M(y) = M(tau_g tau_y) for a generator g and a test element y."""

    g: TildeElement
    y: TildeElement
    product: Tuple
    slots: FrozenSet[str] = field(default_factory=frozenset)


class ModuleContext:
    """Data shared by all modules of one characteristic p algebra.

    Args:
        algebra (HeckeAlgebra): A charp-mode Hecke algebra with q prime.
    """

    def __init__(self, algebra):
        self._check_inputs(algebra)
        self.algebra = algebra
        self.group = algebra.group
        self.affine = algebra.affine
        self.datum = algebra.group.datum
        self.p = algebra.coefficients.field.p
        self.characters = AffineCharacters(algebra)
        self.omega = OmegaTildeGroup(self.group)
        self.n_affine = len(self.affine.simple_affine_roots)
        self._relations = None
        logger.info(f"Module context for {self.datum.label} over F_{self.p}")

    @staticmethod
    def _check_inputs(algebra):
        logger.debug("Checking inputs to ModuleContext.")
        if algebra.mode != "charp":
            raise ModeMismatchError("Modules are built over the characteristic p algebra.")
        if algebra.coefficients.field.s != 1:
            raise ConfigurationError("Modules are only supported for prime q.")

    def to_int(self, c):
        """An F_p coefficient as an integer in 0..p-1."""
        return int(c.code)

    def slot_names(self):
        names = [f"t{i + 1}" for i in range(self.group.rank)]
        names += [f"n_{name}" for name in self.affine.simple_names]
        if self.omega.generator is not None:
            names.append("omega")
        return names

    def braid_bound(self):
        """Largest finite order of s_A s_B minus one, at least 1."""
        affine = self.affine
        reflections = affine.simple_reflections
        best = 2
        for a in range(len(reflections)):
            for b in range(a + 1, len(reflections)):
                product_ = affine.multiply(reflections[a], reflections[b])
                x, m = product_, 1
                while x != affine.identity and m <= 6:
                    x = affine.multiply(x, product_)
                    m += 1
                if x == affine.identity:
                    best = max(best, m)
        return best - 1

    def slots_for(self, x):
        """Generator slots used by M(tau_x)."""
        omega, word = self.algebra.right_word(x)
        slots = {f"t{i + 1}" for i in range(self.group.rank)}
        slots.update(f"n_{self.affine.simple_names[k]}" for k in word)
        if self.omega.generator is not None and self.omega.decompose(omega)[1] != 0:
            slots.add("omega")
        return slots

    def test_elements(self):
        """Torus units and their inverses, and lifts of all elements of length at most the braid bound."""
        group = self.group
        elements = set()
        for unit in self.omega.torus_generators:
            elements.add(unit)
            elements.add(group.inverse(unit))
        omegas = self.affine.omega_representatives(bound=1)
        for w in self.affine.elements_up_to_length(self.braid_bound(), omegas):
            elements.add(group.lift(w))
        return sorted(elements)

    def relation_generators(self):
        gens = list(self.omega.torus_generators) + list(self.group.simple_lifts)
        if self.omega.generator is not None:
            gens.append(self.omega.generator)
            if self.omega.order == 0:
                gens.append(self.group.inverse(self.omega.generator))
        return gens

    def relations(self):
        """All relation pairs, computed once per context."""
        if self._relations is None:
            algebra = self.algebra
            pairs = []
            for g in self.relation_generators():
                for y in self.test_elements():
                    product_ = tuple(
                        sorted(
                            ((x, self.to_int(c)) for x, c in algebra.basis_product(g, y).items()),
                            key=lambda item: algebra.sort_key(item[0]),
                        )
                    )
                    slots = self.slots_for(g) | self.slots_for(y)
                    for x, _ in product_:
                        slots |= self.slots_for(x)
                    pairs.append(RelationPair(g, y, product_, frozenset(slots)))
            self._relations = pairs
            logger.debug(f"Built {len(pairs)} module relations for {self.datum.label}")
        return self._relations


class InducedModule:
    """A finite-dimensional right module given by generator matrices over F_p.

    Args:
        context (ModuleContext): Shared algebra data.
        torus_matrices (list of np.ndarray): Matrices of tau_t for the torus unit vectors.
        lift_matrices (list of np.ndarray): Matrices of tau_(n_A) in simple affine index order.
        omega_matrix (np.ndarray, optional): Matrix of tau_g~ for the Omega generator. Required iff Omega is nontrivial.
        provenance (string, optional): Where the module comes from. Defaults to "ad hoc".
        labels (list of string, optional): Names of the basis vectors.
        verify (bool, optional): Check all module relations on construction. Defaults to True.

    Raises:
        PreconditionError: if verify is set and a relation fails.
    """

    def __init__(
        self, context, torus_matrices, lift_matrices, omega_matrix=None, provenance="ad hoc", labels=None, verify=True
    ):
        self._check_inputs(context, torus_matrices, lift_matrices, omega_matrix)
        p = context.p
        self.context = context
        self.p = p
        self.torus_matrices = [la.as_matrix(m, p) for m in torus_matrices]
        self.lift_matrices = [la.as_matrix(m, p) for m in lift_matrices]
        self.omega_matrix = None if omega_matrix is None else la.as_matrix(omega_matrix, p)
        self.dimension = self.torus_matrices[0].shape[0] if self.torus_matrices else self.lift_matrices[0].shape[0]
        self.provenance = provenance
        self.labels = labels or [f"e{i}" for i in range(self.dimension)]
        self._omega_inverse = None
        self._basis_cache = {}
        if verify:
            ok, failure = self.verify_relations()
            if not ok:
                raise PreconditionError(f"Module relation fails: {failure}")

    @staticmethod
    def _check_inputs(context, torus_matrices, lift_matrices, omega_matrix):
        logger.debug("Checking inputs to InducedModule.")
        if len(torus_matrices) != context.group.rank:
            raise ValueError(f"Expected {context.group.rank} torus matrices, got {len(torus_matrices)}.")
        if len(lift_matrices) != context.n_affine:
            raise ValueError(f"Expected {context.n_affine} lift matrices, got {len(lift_matrices)}.")
        if (omega_matrix is None) != (context.omega.generator is None):
            raise ValueError("An Omega matrix is required exactly when Omega is nontrivial.")
        shapes = {np.shape(m) for m in list(torus_matrices) + list(lift_matrices)}
        if omega_matrix is not None:
            shapes.add(np.shape(omega_matrix))
        if len(shapes) != 1 or len(next(iter(shapes))) != 2 or len(set(next(iter(shapes)))) != 1:
            raise ValueError(f"Generator matrices have to be square of one size, got shapes {shapes}.")

    # -- action ----------------------------------------------------------

    def generator_matrices(self):
        mats = self.torus_matrices + self.lift_matrices
        if self.omega_matrix is not None:
            mats = mats + [self.omega_matrix]
        return mats

    def slot_matrices(self):
        return dict(zip(self.context.slot_names(), self.generator_matrices()))

    def torus_matrix(self, t):
        result = la.identity(self.dimension)
        for matrix, exponent in zip(self.torus_matrices, t):
            result = la.matmul(result, la.matrix_power(matrix, int(exponent), self.p), self.p)
        return result

    def omega_power(self, j):
        if j == 0:
            return la.identity(self.dimension)
        if j < 0 and self._omega_inverse is None:
            self._omega_inverse = la.inverse(self.omega_matrix, self.p)
        base = self.omega_matrix if j > 0 else self._omega_inverse
        return la.matrix_power(base, abs(j), self.p)

    def length_zero_matrix(self, x):
        t, j = self.context.omega.decompose(x)
        return la.matmul(self.torus_matrix(t), self.omega_power(j), self.p)

    def basis_matrix(self, x):
        """M(tau_x)."""
        cached = self._basis_cache.get(x)
        if cached is None:
            omega, word = self.context.algebra.right_word(x)
            cached = self.length_zero_matrix(omega)
            for k in word:
                cached = la.matmul(cached, self.lift_matrices[k], self.p)
            self._basis_cache[x] = cached
        return cached

    def _combination(self, terms):
        result = la.zeros(self.dimension, self.dimension)
        for x, c in terms:
            result = (result + c * self.basis_matrix(x)) % self.p
        return result

    def act(self, element):
        """The matrix of a characteristic p Hecke algebra element.

        Raises:
            ModeMismatchError: for an element of the generic algebra.
        """
        if element.algebra.mode != "charp":
            raise ModeMismatchError("Modules are acted on by characteristic p elements.")
        to_int = self.context.to_int
        return self._combination((x, to_int(c)) for x, c in element.terms.items())

    def act_on_vector(self, vector, element):
        return la.matmul(np.asarray(vector, dtype=np.int64), self.act(element), self.p)

    # -- relations -------------------------------------------------------

    def relation_holds(self, pair):
        lhs = la.matmul(self.basis_matrix(pair.g), self.basis_matrix(pair.y), self.p)
        return not np.any((lhs - self._combination(pair.product)) % self.p)

    def verify_relations(self, slots=None):
        """Check M(g) M(y) = M(tau_g tau_y) on all relation pairs (restricted to pairs inside slots if given).

        Returns:
            tuple: (bool, description of the first failing pair or None)
        """
        group = self.context.group
        for pair in self.context.relations():
            if slots is not None and not pair.slots <= slots:
                continue
            if not self.relation_holds(pair):
                return False, {"g": group.to_json(pair.g), "y": group.to_json(pair.y)}
        return True, None

    def to_json(self):
        return {
            "provenance": self.provenance,
            "dimension": self.dimension,
            "generators": {name: m.tolist() for name, m in self.slot_matrices().items()},
        }


# -- construction ---------------------------------------------------------


def induce(context, character, sigma=None):
    """The module m(X, sigma) induced from an affine character.

    The basis is e_j (x) v for j < r, r the length of the orbit of X under g~,
    with e_j = (1 (x) 1) tau_(g~^j). sigma gives the action of g~^r on the first
    block and must be invertible; it is a scalar or a square matrix.

    Args:
        context (ModuleContext): Shared algebra data.
        character (AffineCharacter): The character X.
        sigma (int or np.ndarray, optional): Action of g~^r. Required iff Omega is nontrivial.

    Raises:
        PreconditionError: if sigma is incompatible with X.
    """
    p = context.p
    omega = context.omega
    characters = context.characters
    if omega.generator is None:
        if sigma is not None and np.ndim(sigma) and np.shape(sigma)[0] != 1:
            raise PreconditionError("Without Omega the fixator is the torus and sigma is one-dimensional.")
        orbit, block = [character], la.identity(1)
    else:
        if sigma is None:
            raise PreconditionError("sigma is required when Omega is nontrivial.")
        orbit = characters.orbit(omega.generator, character)
        block = la.as_matrix(sigma, p) if np.ndim(sigma) else la.scalar_matrix(sigma, 1, p)
    r, s = len(orbit), block.shape[0]
    dim = r * s

    def diagonal(values):
        matrix = la.zeros(dim, dim)
        for j, value in enumerate(values):
            matrix[j * s:(j + 1) * s, j * s:(j + 1) * s] = la.scalar_matrix(value, s, p)
        return matrix

    torus_matrices = []
    for unit in omega.torus_generators:
        torus_matrices.append(
            diagonal([context.to_int(characters.torus_value(chi.xi, unit.t)) for chi in orbit])
        )
    lift_matrices = [diagonal([chi.values[k] for chi in orbit]) for k in range(context.n_affine)]
    omega_matrix = None
    if omega.generator is not None:
        omega_matrix = la.zeros(dim, dim)
        for j in range(r - 1):
            omega_matrix[j * s:(j + 1) * s, (j + 1) * s:(j + 2) * s] = la.identity(s)
        omega_matrix[(r - 1) * s:, :s] = block
    labels = [f"g^{j}.{i}" if s > 1 else f"g^{j}" for j in range(r) for i in range(s)]
    module = InducedModule(
        context, torus_matrices, lift_matrices, omega_matrix, provenance="induced", labels=labels, verify=False
    )
    ok, failure = module.verify_relations()
    if not ok:
        raise PreconditionError(f"sigma is not compatible with {character}: relation fails at {failure}")
    logger.info(f"Induced module of dimension {dim} from {character.to_json()}")
    return module


def sigma_scalars(context, character, orbit_length, pi_scalar=None):
    """The scalars c by which g~^r may act on the first block of m(X, sigma) for one-dimensional sigma.

    For finite Omega of order d they solve c^(d/r) = xi(g~^d); for infinite Omega
    they solve xi(t1) c^(m/r) = pi_scalar, where tau_(e^mu) = tau_t1 tau_g~^m is the
    central translation fixed by the caller.
    """
    omega, p = context.omega, context.p
    if omega.generator is None:
        return [None]
    characters = context.characters
    if omega.order > 0:
        exponent = omega.order // orbit_length
        target = context.to_int(characters.torus_value(character.xi, omega.torus_of_power(omega.order)))
    else:
        if pi_scalar is None:
            raise PreconditionError("Omega is infinite: a scalar for the central translation is required.")
        m, mu = omega.free_power, omega.central_coweight
        if m % orbit_length:
            raise PreconditionError("The orbit length does not divide the free power of g~.")
        exponent = m // orbit_length
        group = context.group
        t1 = group.multiply(group.splitting(mu), group.inverse(omega.power(m))).t
        factor = context.to_int(characters.torus_value(character.xi, t1))
        target = int(pi_scalar) * pow(factor, p - 2, p) % p
    return [c for c in range(1, p) if pow(c, exponent, p) == target]


# -- homomorphisms and structure -------------------------------------------


def _negate(matrix, p):
    return (-matrix) % p


def hom_space(source, target):
    """Basis of Hom(source, target): matrices B with M(g) B = B N(g) for all generators."""
    p = source.p
    constraints = [
        [(a, None), (None, _negate(b, p))]
        for a, b in zip(source.generator_matrices(), target.generator_matrices())
    ]
    return la.solve_linear_maps(constraints, (source.dimension, target.dimension), p)


def commutant_dimension(module):
    return len(hom_space(module, module))


def is_isomorphic(first, second):
    """Isomorphism test for simple modules: a nonzero homomorphism exists and is invertible."""
    if first.dimension != second.dimension:
        return False
    return any(la.rank(b, first.p) == first.dimension for b in hom_space(first, second))


def is_simple(module):
    """True if every nonzero vector generates the whole module."""
    p, mats = module.p, module.generator_matrices()
    return all(
        la.spin(v, mats, p).shape[0] == module.dimension for v in la.projective_points(module.dimension, p)
    )


def affine_character_space(module, character):
    """Basis (as rows) of the vectors v with v tau_h = X(h) v for h in the affine subalgebra."""
    context, p = module.context, module.p
    characters = context.characters
    equations = []
    for unit, matrix in zip(context.omega.torus_generators, module.torus_matrices):
        value = context.to_int(characters.torus_value(character.xi, unit.t))
        equations.append((matrix - la.scalar_matrix(value, module.dimension, p)) % p)
    for value, matrix in zip(character.values, module.lift_matrices):
        equations.append((matrix - la.scalar_matrix(value, module.dimension, p)) % p)
    return la.left_nullspace(np.hstack(equations), p)


def affine_character_content(module):
    """Affine characters X with a nonzero vector v satisfying v tau_h = X(h) v, and the dimension of that space.

    Returns:
        list of (AffineCharacter, multiplicity)
    """
    content = []
    for chi in module.context.characters.enumerate():
        multiplicity = len(affine_character_space(module, chi))
        if multiplicity:
            content.append((chi, multiplicity))
    return content


def extension_module(first, second):
    """A block upper triangular module with first as submodule and second as quotient.

    The off-diagonal blocks solve the linearized relations; a solution outside the
    coboundaries X_g = M(g) B - B N(g) is used when one exists, so the result is a
    nonsplit extension whenever Ext^1 is nonzero.

    Returns:
        tuple: (InducedModule, bool nonsplit)
    """
    context, p = first.context, first.p
    d1, d2 = first.dimension, second.dimension
    names = context.slot_names()
    n_slots = len(names)
    size = n_slots * d1 * d2

    def assemble(offdiagonal):
        mats = []
        for a, b, x in zip(first.generator_matrices(), second.generator_matrices(), offdiagonal):
            block = la.zeros(d1 + d2, d1 + d2)
            block[:d1, :d1], block[d1:, d1:], block[:d1, d1:] = a, b, x
            mats.append(block)
        k = context.group.rank
        return InducedModule(
            context, mats[:k], mats[k:k + context.n_affine], mats[-1] if context.omega.generator is not None else None,
            provenance="extension", verify=False,
        )

    def unknowns(index):
        offdiagonal = [la.zeros(d1, d2) for _ in range(n_slots)]
        if index is not None:
            offdiagonal[index // (d1 * d2)].reshape(-1)[index % (d1 * d2)] = 1
        return offdiagonal

    def residual(module):
        values = []
        for pair in context.relations():
            lhs = la.matmul(module.basis_matrix(pair.g), module.basis_matrix(pair.y), p)
            values.append(((lhs - module._combination(pair.product)) % p)[:d1, d1:].reshape(-1))
        return np.concatenate(values)

    system = np.stack([residual(assemble(unknowns(i))) for i in range(size)], axis=1)
    cocycles = la.nullspace(system, p)
    coboundaries = []
    for i in range(d1 * d2):
        B = la.zeros(d1, d2)
        B.reshape(-1)[i] = 1
        coboundaries.append(
            np.concatenate([
                ((la.matmul(a, B, p) - la.matmul(B, b, p)) % p).reshape(-1)
                for a, b in zip(first.generator_matrices(), second.generator_matrices())
            ])
        )
    boundary_space = la.row_space(np.array(coboundaries), p)
    chosen = None
    for cocycle in cocycles:
        if not la.in_span(cocycle, boundary_space, p):
            chosen = cocycle
            break
    nonsplit = chosen is not None
    if chosen is None:
        chosen = np.zeros(size, dtype=np.int64)
    offdiagonal = [chosen[i * d1 * d2:(i + 1) * d1 * d2].reshape(d1, d2) for i in range(n_slots)]
    module = assemble(offdiagonal)
    ok, failure = module.verify_relations()
    assert ok, f"Extension module fails a relation at {failure}"
    logger.info(f"Built {'nonsplit' if nonsplit else 'split'} extension of dimension {d1 + d2}")
    return module, nonsplit
