"""
Characters of the affine subalgebra H_k^aff in characteristic p and the action
of the length-zero subgroup on them.

A character is determined by a torus character xi and its values at the
tau_(n_A), which lie in {0, -1} and vanish unless xi is trivial on T_A.
"""
from dataclasses import dataclass
from itertools import product
from typing import Tuple

from loguru import logger

from ..utils.errors import ModeMismatchError, PreconditionError


@dataclass(frozen=True, order=True)
class AffineCharacter:
    """xi as an exponent vector and the values at tau_(n_A) in simple affine index order."""

    xi: Tuple[int, ...]
    values: Tuple[int, ...]

    def to_json(self):
        return {"xi": list(self.xi), "values": list(self.values)}


class AffineCharacters:
    """Affine characters of a characteristic p Hecke algebra.

    Args:
        algebra (HeckeAlgebra): A charp-mode Hecke algebra.
    """

    def __init__(self, algebra):
        self._check_inputs(algebra)
        self.algebra = algebra
        self.group = algebra.group
        self.affine = algebra.affine
        self.field = algebra.coefficients.field
        self.n_affine = len(self.affine.simple_affine_roots)
        self._conjugates = {}

    @staticmethod
    def _check_inputs(algebra):
        logger.debug("Checking inputs to AffineCharacters.")
        if algebra.mode != "charp":
            raise ModeMismatchError("Affine characters are characters of the characteristic p algebra.")

    def trivial_on(self, xi, k):
        """True if xi is trivial on T_A for the simple affine index k."""
        return self.group.restrict_trivial(xi, self.affine.simple_affine_roots[k].root)

    def enumerate(self):
        """All affine characters, ordered by xi and then by values."""
        characters = []
        for xi in self.group.characters():
            choices = [(0, -1) if self.trivial_on(xi, k) else (0,) for k in range(self.n_affine)]
            characters.extend(AffineCharacter(xi, values) for values in product(*choices))
        characters.sort()
        logger.info(f"Enumerated {len(characters)} affine characters of {self.group.datum.label}")
        return characters

    def trivial(self):
        return AffineCharacter(self.group.zero_torus, (0,) * self.n_affine)

    def sign(self):
        return AffineCharacter(self.group.zero_torus, (-1,) * self.n_affine)

    def _everywhere_trivial(self, xi):
        return all(self.trivial_on(xi, k) for k in range(self.n_affine))

    def is_trivial_or_sign_twist(self, character):
        """True if the character is a twist of the trivial or the sign character by some xi0 trivial on every T_alpha."""
        if len(set(character.values)) != 1:
            return False
        return self._everywhere_trivial(character.xi)

    def twist(self, character, xi0):
        """The twist of a character by xi0.

        Raises:
            PreconditionError: if xi0 is not trivial on every T_alpha.
        """
        if not self._everywhere_trivial(xi0):
            raise PreconditionError(f"Twisting character {xi0} is not trivial on every T_alpha.")
        return AffineCharacter(self.group.torus_add(character.xi, xi0), character.values)

    def twisting_characters(self):
        return [xi for xi in self.group.characters() if self._everywhere_trivial(xi)]

    # -- values ----------------------------------------------------------

    def torus_value(self, xi, t):
        """xi(t) in F_q."""
        return self.field.root_of_unity(self.group.evaluate(xi, t))

    def value(self, character, x):
        """X(tau_x) for x in the affine part of W~.

        Raises:
            PreconditionError: if x does not lie in the affine part.
        """
        omega, word = self.algebra.right_word(x)
        if omega.u != 0 or any(omega.lam):
            raise PreconditionError(f"{self.group.to_json(x)} is not in the affine part of W~.")
        result = self.torus_value(character.xi, omega.t)
        for k in word:
            result = result * character.values[k]
        return result

    def value_on(self, character, element):
        total = self.field.from_int(0)
        for x, c in element.terms.items():
            total = total + c * self.value(character, x)
        return total

    # -- symmetries ------------------------------------------------------

    def conjugate(self, omega, character):
        """omega.X, the character h -> X(tau_(omega^-1) h tau_omega) for a length-zero omega.

        Raises:
            PreconditionError: if omega has positive length.
        """
        key = (omega, character)
        cached = self._conjugates.get(key)
        if cached is not None:
            return cached
        group = self.group
        if group.length(omega) != 0:
            raise PreconditionError("Only length-zero elements act on affine characters.")
        inverse = group.inverse(omega)

        def inner(x):
            return group.multiply_all([inverse, x, omega])

        xi = tuple(
            self.group.evaluate(character.xi, inner(group.torus(unit)).t)
            for unit in (tuple(int(i == j) for j in range(group.rank)) for i in range(group.rank))
        )
        values = []
        for n in group.simple_lifts:
            value = self.value(character, inner(n))
            assert value == 0 or value == -1, "Conjugation produced a value outside {0, -1}."
            values.append(0 if value == 0 else -1)
        result = AffineCharacter(xi, tuple(values))
        self._conjugates[key] = result
        return result

    def compose_with_iota_C(self, character):
        """X o iota_C: values -1 - x where xi is trivial on T_A, 0 elsewhere."""
        values = tuple(
            (-1 - x) if self.trivial_on(character.xi, k) else 0 for k, x in enumerate(character.values)
        )
        return AffineCharacter(character.xi, values)

    def orbit(self, generator, character):
        """The orbit [X, g^-1.X, g^-2.X, ...] of a character under a length-zero generator g."""
        g_inv = self.group.inverse(generator)
        orbit = [character]
        current = self.conjugate(g_inv, character)
        while current != character:
            orbit.append(current)
            current = self.conjugate(g_inv, current)
        return orbit
