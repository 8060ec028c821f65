"""
Supersingular modules: the criterion through the ideal J, the classification by
orbits of pairs (X, sigma), and an independent brute-force enumeration of small
simple modules used to cross-check it.
"""
from dataclasses import dataclass
from itertools import combinations_with_replacement, product
from typing import Optional

import numpy as np
from loguru import logger
from tqdm import tqdm

from . import linear_algebra as la
from .induced_module import (
    InducedModule,
    ModuleContext,
    affine_character_content,
    affine_character_space,
    commutant_dimension,
    hom_space,
    induce,
    is_isomorphic,
    is_simple,
    sigma_scalars,
)
from ..algebra.ideal import IdealJ
from ..combinatorics.root_datum import StandardFacet
from ..utils.errors import PreconditionError
from ..utils.set_log_level import _progress_enabled

# Largest number of candidate matrices per generator in the brute-force search
BRUTE_FORCE_MATRIX_LIMIT = 81


@dataclass
class ClassifiedModule:
    """One orbit of pairs (X, sigma) and the simple module it induces."""

    character: object
    sigma: Optional[int]
    module: InducedModule
    zcharacter: dict
    supersingular: bool

    @property
    def dimension(self):
        return self.module.dimension

    def to_json(self):
        return {
            "orbit": {"character": self.character.to_json(), "sigma": self.sigma},
            "dim": self.dimension,
            "zcharacter": self.zcharacter,
            "supersingular": self.supersingular,
        }


class SupersingularModules:
    """Supersingularity tests and the classification of simple supersingular modules.

    Args:
        bernstein (BernsteinMaps): Bernstein maps of the generic algebra; q has to be prime.
        pi_scalars (tuple of int, optional): Scalars for the central translation when Omega is infinite. Defaults to (1,).
    """

    def __init__(self, bernstein, pi_scalars=(1,)):
        self.bernstein = bernstein
        self.datum = bernstein.datum
        self.context = ModuleContext(bernstein.charp)
        self.characters = self.context.characters
        self.ideal = IdealJ(bernstein)
        self.pi_scalars = tuple(int(c) % self.context.p for c in pi_scalars)
        self._z = None
        self._units = None
        self._classified = None
        self.missing_sigma = {"classify": [], "non_supersingular": []}

    # -- the centre on modules ---------------------------------------------

    def z_generators(self):
        """(coweight, z_lam) for the generators of J, in characteristic p."""
        if self._z is None:
            self._z = list(zip(self.ideal.generator_coweights, self.ideal.generators()))
        return self._z

    def unit_elements(self):
        """(coweight, tau_(e^mu)) for a basis mu of the coweights orthogonal to all roots."""
        if self._units is None:
            charp, group = self.bernstein.charp, self.bernstein.group
            self._units = [(mu, charp.basis(group.splitting(mu))) for mu in self.ideal.units]
        return self._units

    def is_supersingular_module(self, module):
        """True if every generator z_lam of J acts nilpotently."""
        return all(la.is_nilpotent(module.act(z), module.p) for _, z in self.z_generators())

    def z_acts_by_zero(self, module):
        return all(not np.any(module.act(z)) for _, z in self.z_generators())

    def invertible_z(self, module):
        """A coweight lam whose z_lam acts invertibly, or None."""
        for lam, z in self.z_generators():
            if la.rank(module.act(z), module.p) == module.dimension:
                return lam
        return None

    def zeta_character(self, module):
        """The character of Z^o on a module where it acts by scalars, or None.

        Returns:
            dict: {"z_gen": values at the J generators, "omega": values at the units, "is_zeta": bool}
        """
        values = {}
        for kind, elements in (("z_gen", self.z_generators()), ("omega", self.unit_elements())):
            values[kind] = []
            for lam, z in elements:
                matrix = module.act(z)
                if not la.is_scalar(matrix):
                    return None
                values[kind].append({"lambda": list(lam), "value": int(matrix[0, 0]) if module.dimension else 0})
        values["is_zeta"] = all(entry["value"] == 0 for entry in values["z_gen"])
        return values

    def contains_affine_character(self, module):
        return affine_character_content(module)

    def facet_of(self, character):
        """F_chi for the restriction chi of an affine character to the finite part."""
        return StandardFacet(frozenset(
            i for i in range(self.datum.n_simple)
            if self.characters.trivial_on(character.xi, i) and character.values[i] == 0
        ))

    def annihilated_lines(self, module, coweights):
        """Test that B_(F_chi)^+(lam) and z_lam kill the X-lines of a module with X(tau_(n_0)) = 0 and F_chi != x_0.

        Args:
            module (InducedModule): The module.
            coweights (list of tuple of int): Dominant coweights of positive length.

        Returns:
            tuple: (number of (character, coweight) pairs tested, list of failing pairs)

        Raises:
            PreconditionError: for reducible root systems, where n_0 is not unique.
        """
        self._check_classifiable()
        n0 = self.datum.n_simple
        tested, failures = 0, []
        for chi, _ in affine_character_content(module):
            facet = self.facet_of(chi)
            if chi.values[n0] != 0 or len(facet.simple) == self.datum.n_simple:
                continue
            line = affine_character_space(module, chi)
            for lam in coweights:
                tested += 1
                for element in (self.bernstein.bernstein_charp(facet, 1, lam), self.bernstein.central(lam, mode="charp")):
                    if np.any(la.matmul(line, module.act(element), module.p)):
                        failures.append((chi, lam))
                        break
        return tested, failures

    # -- classification --------------------------------------------------

    def _check_classifiable(self):
        logger.debug("Checking inputs to classify.")
        if not self.datum.is_irreducible():
            raise PreconditionError(
                f"Classification needs an irreducible root system, {self.datum.label} is reducible."
            )

    def supersingular_characters(self):
        """Affine characters which are not twists of the trivial or the sign character."""
        return [chi for chi in self.characters.enumerate() if not self.characters.is_trivial_or_sign_twist(chi)]

    def orbit_representatives(self, characters):
        """The smallest character of every orbit under g~, with the orbit length."""
        generator = self.context.omega.generator
        seen, representatives = set(), []
        for chi in characters:
            if chi in seen:
                continue
            orbit = [chi] if generator is None else self.characters.orbit(generator, chi)
            seen.update(orbit)
            representatives.append((min(orbit), len(orbit)))
        return sorted(representatives)

    def modules_for(self, character, orbit_length, missing=None):
        """All modules m(X, sigma) for one-dimensional sigma, over all allowed scalars.

        Characters without a sigma over F_p are appended to missing, if given.
        """
        modules = []
        scalar_sets = [None] if self.context.omega.order != 0 else self.pi_scalars
        for pi in scalar_sets:
            scalars = sigma_scalars(self.context, character, orbit_length, pi)
            if not scalars:
                logger.warning(
                    f"No sigma in F_{self.context.p} for {character.to_json()}"
                    + ("" if pi is None else f" with central scalar {pi}")
                    + "; its simple modules are not defined over F_p."
                )
                if missing is not None:
                    missing.append({"character": character.to_json(), "pi": pi})
            for c in scalars:
                modules.append((c, induce(self.context, character, c)))
        return modules

    def classify(self):
        """Simple supersingular modules up to isomorphism, one per orbit of pairs (X, sigma).

        Raises:
            PreconditionError: for reducible root systems.
        """
        if self._classified is not None:
            return self._classified
        self._check_classifiable()
        representatives = self.orbit_representatives(self.supersingular_characters())
        results, missing = [], []
        for chi, r in tqdm(representatives, desc="classify", disable=not _progress_enabled()):
            for c, module in self.modules_for(chi, r, missing):
                assert is_simple(module) and commutant_dimension(module) == 1, "Induced module is not absolutely simple."
                results.append(
                    ClassifiedModule(chi, c, module, self.zeta_character(module), self.is_supersingular_module(module))
                )
        logger.info(f"Classified {len(results)} simple supersingular modules of {self.datum.label}")
        self.missing_sigma["classify"] = missing
        self._classified = results
        return results

    def non_supersingular_modules(self):
        """The modules induced from twists of the trivial and the sign character."""
        twisted = [chi for chi in self.characters.enumerate() if self.characters.is_trivial_or_sign_twist(chi)]
        results, missing = [], []
        for chi, r in self.orbit_representatives(twisted):
            for c, module in self.modules_for(chi, r, missing):
                results.append((chi, c, module))
        self.missing_sigma["non_supersingular"] = missing
        return results

    # -- brute force -----------------------------------------------------

    def _central_translation_ok(self, module, pi):
        """tau_(e^mu) acts by pi for the central translation e^mu fixed by the classification."""
        omega = self.context.omega
        if omega.order != 0:
            return True
        group = self.context.group
        matrix = module.basis_matrix(group.splitting(omega.central_coweight))
        return not np.any((matrix - la.scalar_matrix(pi, module.dimension, module.p)) % module.p)

    def _torus_choices(self, dimension):
        """Diagonal torus matrices, one sorted tuple of eigenvalue vectors per choice."""
        p, rank = self.context.p, self.context.group.rank
        units = range(1, p)
        vectors = list(product(units, repeat=rank))
        for chosen in combinations_with_replacement(vectors, dimension):
            yield [np.diag([v[i] for v in chosen]).astype(np.int64) for i in range(rank)]

    def brute_force_simples(self, max_dimension=2):
        """All simple modules of dimension at most max_dimension, found by exhaustive search over matrices.

        Torus matrices are taken diagonal (the torus has order prime to p); every
        other generator runs over all matrices, pruned by the relations that only
        involve generators chosen so far. For infinite Omega the central translation
        acts by one of the pi scalars.

        Returns:
            list of InducedModule: one per isomorphism class
        """
        context, p = self.context, self.context.p
        names = context.slot_names()
        rank = context.group.rank
        found = []
        for dimension in range(1, max_dimension + 1):
            all_matrices = [np.array(m, dtype=np.int64).reshape(dimension, dimension)
                            for m in product(range(p), repeat=dimension * dimension)]
            invertible = [m for m in all_matrices if la.rank(m, p) == dimension]
            for torus in tqdm(list(self._torus_choices(dimension)), desc=f"brute force dim {dimension}",
                              disable=not _progress_enabled()):
                self._extend(torus, [], names, rank, all_matrices, invertible, found, dimension)
        logger.info(f"Brute force found {len(found)} simple modules of dimension <= {max_dimension}")
        return found

    def _partial_module(self, torus, chosen, dimension):
        context = self.context
        filler = la.zeros(dimension, dimension)
        lifts = chosen[:context.n_affine] + [filler] * (context.n_affine - len(chosen[:context.n_affine]))
        omega = None
        if context.omega.generator is not None:
            omega = chosen[context.n_affine] if len(chosen) > context.n_affine else la.identity(dimension)
        return InducedModule(context, torus, lifts, omega, provenance="brute force", verify=False)

    def _extend(self, torus, chosen, names, rank, all_matrices, invertible, found, dimension):
        context = self.context
        slot = rank + len(chosen)
        if slot == len(names):
            module = self._partial_module(torus, chosen, dimension)
            if not any(self._central_translation_ok(module, pi) for pi in self.pi_scalars):
                return
            if not is_simple(module) or commutant_dimension(module) != 1:
                return
            if not any(is_isomorphic(module, other) for other in found):
                found.append(module)
            return
        candidates = invertible if names[slot] == "omega" else all_matrices
        allowed = set(names[:slot + 1])
        for matrix in candidates:
            module = self._partial_module(torus, chosen + [matrix], dimension)
            ok, _ = module.verify_relations(slots=allowed)
            if ok:
                self._extend(torus, chosen + [matrix], names, rank, all_matrices, invertible, found, dimension)

    def brute_force_feasible(self, max_dimension):
        """True if the brute-force search over max_dimension square matrices stays within BRUTE_FORCE_MATRIX_LIMIT."""
        return self.context.p ** (max_dimension * max_dimension) <= BRUTE_FORCE_MATRIX_LIMIT

    def cross_check(self, max_dimension=2):
        """Compare the classification with the supersingular modules found by brute force.

        Returns:
            tuple: (bool, number of classified modules, number of brute-force supersingular modules)
        """
        classified = [entry.module for entry in self.classify() if entry.dimension <= max_dimension]
        brute = [m for m in self.brute_force_simples(max_dimension) if self.is_supersingular_module(m)]
        matched = all(sum(is_isomorphic(m, b) for b in brute) == 1 for m in classified)
        agree = matched and len(classified) == len(brute)
        if not agree:
            logger.warning(f"Classification ({len(classified)}) and brute force ({len(brute)}) disagree")
        return agree, len(classified), len(brute)

    def blocks_separate(self, modules):
        """Hom between modules with different Z^o characters vanishes."""
        for first, second in product(modules, repeat=2):
            a, b = self.zeta_character(first), self.zeta_character(second)
            if a is not None and b is not None and a != b and hom_space(first, second):
                return False
        return True
