"""
The extended affine Weyl group W = X_*(T) x| finite Weyl group, acting on affine roots.
"""
from dataclasses import dataclass
from itertools import product
from typing import NamedTuple, Tuple

from loguru import logger

from .root_datum import StandardFacet
from .utils import add, lattice_normal_form, neg, scale
from ..utils.errors import PreconditionError


class AffineRoot(NamedTuple):
    """The affine root (alpha, r), alpha given by its root index."""

    root: int
    r: int


@dataclass(frozen=True, order=True)
class ExtendedWeylElement:
    """The element u e^lam of W, with u an index into the finite Weyl group."""

    lam: Tuple[int, ...]
    u: int = 0


class AffineWeylGroup:
    """Services on the extended affine Weyl group of a root datum.

    Simple affine reflections are indexed 0..n-1 for the finite simple roots
    (named s1..sn) followed by one affine reflection per irreducible component
    (named s0, or s0_1, s0_2, ... for reducible data).

    Args:
        datum (RootDatum): The based root datum.
    """

    def __init__(self, datum):
        self.datum = datum
        self.weyl = datum.weyl
        self.identity = ExtendedWeylElement((0,) * datum.rank_x, 0)
        self.simple_affine_roots = []
        self.simple_names = []
        for i in range(datum.n_simple):
            self.simple_affine_roots.append(AffineRoot(i, 0))
            self.simple_names.append(f"s{i + 1}")
        for c, highest in enumerate(datum.highest_roots):
            self.simple_affine_roots.append(AffineRoot(datum.negative(highest), 1))
            self.simple_names.append("s0" if len(datum.highest_roots) == 1 else f"s0_{c + 1}")
        self.simple_reflections = [self.reflection(A) for A in self.simple_affine_roots]
        self._length = {}
        self._right_peel = {}
        self._left_peel = {}
        self._bruhat = {}
        self._setup_omega()

    # -- group structure -------------------------------------------------

    def translation(self, lam):
        return ExtendedWeylElement(tuple(int(x) for x in lam), 0)

    def finite(self, u):
        return ExtendedWeylElement(self.identity.lam, u)

    def multiply(self, a, b):
        """(u e^lam)(v e^mu) = uv e^(v^-1 lam + mu)."""
        W = self.weyl
        lam = add(W.act(W.inverse(b.u), a.lam), b.lam)
        return ExtendedWeylElement(lam, W.multiply(a.u, b.u))

    def inverse(self, a):
        W = self.weyl
        return ExtendedWeylElement(neg(W.act(a.u, a.lam)), W.inverse(a.u))

    def multiply_all(self, elements):
        result = self.identity
        for element in elements:
            result = self.multiply(result, element)
        return result

    def reflection(self, A):
        """The reflection s_A = s_alpha e^(r coroot) in the affine root A = (alpha, r)."""
        W = self.weyl
        return ExtendedWeylElement(scale(A.r, self.datum.coroots[A.root]), W.reflection(A.root))

    def from_word(self, word, omega=None):
        """omega s_{k1} ... s_{km} for a word of simple affine indices."""
        result = omega if omega is not None else self.identity
        for k in word:
            result = self.multiply(result, self.simple_reflections[k])
        return result

    # -- action and length -----------------------------------------------

    def is_positive(self, A):
        return A.r > 0 or (A.r == 0 and self.datum.is_positive_root(A.root))

    def act_affine(self, w, A):
        """(alpha, r) -> (u alpha, r - <lam, alpha>) for w = u e^lam."""
        return AffineRoot(
            self.weyl.act_on_root(w.u, A.root), A.r - self.datum.pairing(w.lam, A.root)
        )

    def _length_over(self, w, roots):
        datum, W = self.datum, self.weyl
        total = 0
        for alpha in roots:
            m = datum.pairing(w.lam, alpha)
            flips = not datum.is_positive_root(W.act_on_root(w.u, alpha))
            total += m + flips if m >= 0 else -m - flips
        return total

    def length(self, w):
        """Number of positive affine roots made negative by w."""
        cached = self._length.get(w)
        if cached is None:
            cached = self._length_over(w, range(self.datum.n_positive))
            self._length[w] = cached
        return cached

    def length_by_enumeration(self, w):
        """Length by directly counting inverted affine roots; a slow cross-check of length()."""
        datum = self.datum
        bound = max((abs(datum.pairing(w.lam, a)) for a in range(len(datum.roots))), default=0) + 1
        count = 0
        for alpha in range(len(datum.roots)):
            for r in range(-bound, bound + 1):
                A = AffineRoot(alpha, r)
                if self.is_positive(A) and not self.is_positive(self.act_affine(w, A)):
                    count += 1
        return count

    def descent(self, w, k):
        """+1 if l(w s_k) = l(w) + 1 and -1 otherwise, for a simple affine index k."""
        return 1 if self.is_positive(self.act_affine(w, self.simple_affine_roots[k])) else -1

    def left_descent(self, w, k):
        """+1 if l(s_k w) = l(w) + 1 and -1 otherwise."""
        return self.descent(self.inverse(w), k)

    # -- Omega -----------------------------------------------------------

    def _setup_omega(self):
        datum = self.datum
        columns = [[datum.simple_coroots[i][a] for i in range(datum.n_simple)] for a in range(datum.rank_x)]
        S, D, _, Sinv, _ = lattice_normal_form(columns)
        self._omega_S, self._omega_Sinv = S, Sinv
        self.omega_invariants = []
        for a in range(datum.rank_x):
            d = int(D[a, a]) if a < datum.n_simple else 0
            if d != 1:
                self.omega_invariants.append((a, d))
        logger.debug(
            f"Omega of {datum.label}: "
            + (", ".join("Z" if d == 0 else f"Z/{d}" for _, d in self.omega_invariants) or "trivial")
        )

    def omega_class(self, w):
        """Class of w in W / W_aff, i.e. of its translation part in X_*(T) / coroot lattice."""
        y = self._omega_Sinv @ list(w.lam)
        return tuple(int(y[a]) % d if d else int(y[a]) for a, d in self.omega_invariants)

    def omega_is_finite(self):
        return all(d != 0 for _, d in self.omega_invariants)

    def omega_representative(self, cls):
        """The length-zero element of the given Omega class."""
        y = [0] * self.datum.rank_x
        for (a, _), value in zip(self.omega_invariants, cls):
            y[a] = value
        lam = tuple(int(x) for x in self._omega_S @ y)
        return self.omega_decompose(self.translation(lam))[0]

    def omega_representatives(self, bound=1):
        """Length-zero elements of all Omega classes, free coordinates limited to [-bound, bound]."""
        ranges = [range(d) if d else range(-bound, bound + 1) for _, d in self.omega_invariants]
        return [self.omega_representative(cls) for cls in product(*ranges)]

    def omega_cyclic_data(self):
        """Return (generator, order) of Omega, with order 0 for Z and 1 for the trivial group.

        Raises:
            PreconditionError: if Omega is not cyclic.
        """
        if not self.omega_invariants:
            return self.identity, 1
        if len(self.omega_invariants) > 1:
            raise PreconditionError(f"Omega of {self.datum.label} is not cyclic.")
        ((_, d),) = self.omega_invariants
        return self.omega_representative((1,)), d

    def omega_decompose(self, w):
        """Write w = omega s_{k1} ... s_{km} with l(omega) = 0 and a reduced word.

        Returns:
            tuple: (omega, word) with word a tuple of simple affine indices
        """
        cached = self._right_peel.get(w)
        if cached is not None:
            return cached
        current, word = w, []
        while True:
            for k in range(len(self.simple_reflections)):
                if self.descent(current, k) < 0:
                    current = self.multiply(current, self.simple_reflections[k])
                    word.append(k)
                    break
            else:
                break
        result = (current, tuple(reversed(word)))
        self._right_peel[w] = result
        return result

    def left_decompose(self, w):
        """Write w = s_{k1} ... s_{km} omega with l(omega) = 0 and a reduced word.

        Returns:
            tuple: (word, omega)
        """
        cached = self._left_peel.get(w)
        if cached is not None:
            return cached
        current, word = w, []
        while True:
            for k in range(len(self.simple_reflections)):
                if self.left_descent(current, k) < 0:
                    current = self.multiply(self.simple_reflections[k], current)
                    word.append(k)
                    break
            else:
                break
        result = (tuple(word), current)
        self._left_peel[w] = result
        return result

    # -- orders and characters -------------------------------------------

    def bruhat_leq(self, u, v):
        """Bruhat order: same Omega part and u_aff <= v_aff."""
        if self.omega_class(u) != self.omega_class(v):
            return False
        return self._bruhat_leq(u, v)

    def _bruhat_leq(self, u, v):
        key = (u, v)
        cached = self._bruhat.get(key)
        if cached is not None:
            return cached
        lu, lv = self.length(u), self.length(v)
        if lu >= lv:
            result = u == v
        else:
            k = next(k for k in range(len(self.simple_reflections)) if self.descent(v, k) < 0)
            s = self.simple_reflections[k]
            us = self.multiply(u, s)
            result = self._bruhat_leq(us if self.length(us) < lu else u, self.multiply(v, s))
        self._bruhat[key] = result
        return result

    def epsilon_C(self, w):
        """Orientation character det(u) (-1)^l(w); trivial on W_aff."""
        return self.weyl.determinant(w.u) * (-1) ** self.length(w)

    # -- distinguished cosets ----------------------------------------------

    def is_distinguished(self, d):
        """True if d^-1 maps every positive finite root to a positive affine root."""
        d_inv = self.inverse(d)
        return all(
            self.is_positive(self.act_affine(d_inv, AffineRoot(alpha, 0)))
            for alpha in range(self.datum.n_positive)
        )

    def distinguished_decompose(self, d):
        """Write a distinguished d as e^lam w with lam dominant.

        Returns:
            tuple: (lam, w) with w a finite Weyl group index

        Raises:
            PreconditionError: if d is not distinguished.
        """
        if not self.is_distinguished(d):
            raise PreconditionError(f"{self.to_json(d)} is not distinguished.")
        return self.weyl.act(d.u, d.lam), d.u

    def coset_decompose(self, w):
        """Write w = w0 d with w0 finite, d distinguished and l(w) = l(w0) + l(d).

        Returns:
            tuple: (w0, d) with w0 a finite Weyl group index
        """
        W = self.weyl
        w0, d = 0, w
        while True:
            for i in range(self.datum.n_simple):
                if self.left_descent(d, i) < 0:
                    d = self.multiply(self.simple_reflections[i], d)
                    w0 = W.multiply(w0, W.simple_reflection(i))
                    break
            else:
                return w0, d

    def distinguished_step(self, d, k):
        """Classify d s_k for distinguished d as "down", "up" (both distinguished) or "coset" (in W d, longer)."""
        ds = self.multiply(d, self.simple_reflections[k])
        if self.is_distinguished(ds):
            return "down" if self.length(ds) < self.length(d) else "up"
        quotient = self.multiply(ds, self.inverse(d))
        if not any(quotient.lam) and self.length(ds) == self.length(d) + 1:
            return "coset"
        return None

    # -- facets --------------------------------------------------------

    def _check_levi_element(self, w, facet):
        logger.debug("Checking inputs to a Levi subgroup query.")
        if w.u not in self.weyl.subgroup(facet.simple):
            raise PreconditionError(
                f"Finite part {self.weyl.word_string(w.u)!r} is not in the Weyl group of facet {{{facet}}}."
            )

    def is_F_positive(self, w, facet):
        """w^-1 maps the positive roots outside the facet's root system to positive affine roots."""
        self._check_levi_element(w, facet)
        inside = set(self.datum.facet_positive_roots(facet))
        w_inv = self.inverse(w)
        return all(
            self.is_positive(self.act_affine(w_inv, AffineRoot(alpha, 0)))
            for alpha in range(self.datum.n_positive)
            if alpha not in inside
        )

    def is_F_negative(self, w, facet):
        return self.is_F_positive(self.inverse(w), facet)

    def is_strongly_F_positive(self, lam, facet):
        inside = set(self.datum.facet_positive_roots(facet))
        for alpha in range(self.datum.n_positive):
            value = self.datum.pairing(lam, alpha)
            if (alpha in inside and value != 0) or (alpha not in inside and value <= 0):
                return False
        return True

    def length_levi(self, w, facet):
        """Length of w in the extended affine Weyl group of the Levi subdatum of the facet."""
        self._check_levi_element(w, facet)
        return self._length_over(w, self.datum.facet_positive_roots(facet))

    def levi_length_identity(self, mu, nu, facet):
        """Compare l(e^(mu-nu)) + l(e^nu) - l(e^mu) with the same expression in Levi lengths.

        Raises:
            PreconditionError: unless mu, nu and mu - nu are F-positive.
        """
        lam = tuple(m - n for m, n in zip(mu, nu))
        elements = [self.translation(x) for x in (lam, nu, mu)]
        if not all(self.is_F_positive(e, facet) for e in elements):
            raise PreconditionError("mu, nu and mu - nu have to be F-positive.")
        full = self.length(elements[0]) + self.length(elements[1]) - self.length(elements[2])
        levi = sum(
            sign * self.length_levi(e, facet) for sign, e in zip((1, 1, -1), elements)
        )
        return full == levi

    # -- enumeration and output ------------------------------------------

    def elements_up_to_length(self, max_length, omegas=None):
        """All elements omega w_aff with l <= max_length, for the given length-zero omegas (default: identity)."""
        omegas = [self.identity] if omegas is None else omegas
        seen = set(omegas)
        frontier = list(omegas)
        for _ in range(max_length):
            next_frontier = []
            for w in frontier:
                for s in self.simple_reflections:
                    ws = self.multiply(w, s)
                    if ws not in seen and self.length(ws) == self.length(w) + 1:
                        seen.add(ws)
                        next_frontier.append(ws)
            frontier = next_frontier
        return sorted(seen, key=lambda w: (self.length(w), w))

    def word_string(self, word):
        return " ".join(self.simple_names[k] for k in word)

    def to_json(self, w):
        return {"lambda": list(w.lam), "u": self.weyl.word_string(w.u)}

    def facet(self, simple):
        return StandardFacet(frozenset(simple))
