"""
Hecke algebras of the Levi subgroups M_F attached to standard facets, and their
embeddings into the full algebra on F-positive and F-negative elements.
"""
from loguru import logger

from .bernstein import BernsteinMaps
from .hecke_algebra import HeckeAlgebra
from ..combinatorics.affine_weyl import AffineWeylGroup
from ..combinatorics.extended_group import ExtendedGroup, TildeElement
from ..combinatorics.root_datum import StandardFacet
from ..utils.errors import PreconditionError


class LeviAlgebra:
    """The generic Hecke algebra of M_F, built on the root subdatum of a standard facet.

    Args:
        bernstein (BernsteinMaps): Bernstein maps of the full generic algebra.
        facet (StandardFacet): The standard facet F.
    """

    def __init__(self, bernstein, facet):
        self.parent = bernstein
        self.parent_algebra = bernstein.algebra
        self.parent_affine = bernstein.affine
        self.facet = facet
        self.datum = bernstein.datum.levi(facet)
        self.affine = AffineWeylGroup(self.datum)
        self.group = ExtendedGroup(self.affine)
        self.algebra = HeckeAlgebra(self.group, "generic")
        self.bernstein = BernsteinMaps(self.algebra)
        parent_weyl = bernstein.datum.weyl
        self._weyl_map = [
            parent_weyl.index_of_matrix(self.datum.weyl.matrix(u)) for u in range(self.datum.weyl.order)
        ]
        logger.info(f"Built Levi algebra for facet {{{facet}}} of {bernstein.datum.label}")

    def to_parent(self, x):
        """The element of W~ with the same torus part, finite part and translation."""
        return TildeElement(x.t, self._weyl_map[x.u], x.lam)

    def levi_facet(self, facet):
        """Translate a standard facet F' with Pi_F' inside Pi_F into Levi indices."""
        parent_simple = self.datum.parent_simple
        if not facet.simple <= set(parent_simple):
            raise PreconditionError(f"Facet {{{facet}}} is not contained in {{{self.facet}}}.")
        return StandardFacet(frozenset(parent_simple.index(i) for i in facet.simple))

    def _embed(self, element, test, name):
        terms = {}
        for x, c in element.terms.items():
            y = self.to_parent(x)
            if not test(y.w, self.facet):
                raise PreconditionError(f"{self.group.to_json(x)} is not {name} for {{{self.facet}}}.")
            terms[y] = c
        return self.parent_algebra.element(terms)

    def embed_positive(self, element):
        """j_F^+ : tau_x^F -> tau_x on elements supported on F-positive x.

        Raises:
            PreconditionError: if some support element is not F-positive.
        """
        return self._embed(element, self.parent_affine.is_F_positive, "F-positive")

    def embed_negative(self, element):
        """j_F^- : tau_x^F -> tau_x on elements supported on F-negative x."""
        return self._embed(element, self.parent_affine.is_F_negative, "F-negative")

    def levi_bernstein(self, facet, lam, t=None):
        """_F B_F'^+(lam + t) in the Levi algebra, for a facet F' given in parent indices."""
        return self.bernstein.bernstein(self.levi_facet(facet), 1, lam, t)

    def embedding_identity(self, facet, lam, t=None):
        """Compare j_F^+(_F B_F'^+(lam)) with B_F'^+(lam) for an F-positive coweight lam."""
        if not self.parent_affine.is_F_positive(self.parent_affine.translation(lam), self.facet):
            raise PreconditionError(f"{lam} is not F-positive for {{{self.facet}}}.")
        embedded = self.embed_positive(self.levi_bernstein(facet, lam, t))
        return embedded == self.parent.bernstein(facet, 1, lam, t)
