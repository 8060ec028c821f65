"""
The pro-p Iwahori-Hecke algebra in its tau-basis indexed by W~.

Products are computed by rewriting one factor letter by letter along a reduced
word with the braid relation tau_x tau_n = tau_xn (length-additive case) and
the quadratic relation tau_n^2 = q tau_(n^2) + c_A tau_n, c_A = sum of tau_t
over t in T_A.
"""
from loguru import logger

from .coefficients import make_coefficients
from ..utils.errors import ModeMismatchError
from ..utils.set_up_mode import _get_default_mode


class HeckeElement:
    """A finitely supported map W~ -> coefficients, read as sum c_x tau_x.

    Zero coefficients are never stored.
    """

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra, terms=None):
        self.algebra = algebra
        self.terms = {x: c for x, c in (terms or {}).items() if c}

    def _check_compatible(self, other):
        if not isinstance(other, HeckeElement):
            raise TypeError(f"Cannot combine a Hecke algebra element with {type(other).__name__}.")
        if other.algebra.mode != self.algebra.mode:
            raise ModeMismatchError(
                f"Cannot combine {self.algebra.mode} and {other.algebra.mode} coefficients."
            )
        if other.algebra.group is not self.algebra.group:
            raise ValueError("Elements belong to Hecke algebras of different groups.")

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        self._check_compatible(other)
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        self._check_compatible(other)
        terms = dict(self.terms)
        for x, c in other.terms.items():
            terms[x] = terms[x] + c if x in terms else c
        return HeckeElement(self.algebra, terms)

    def __neg__(self):
        return HeckeElement(self.algebra, {x: -c for x, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, HeckeElement):
            return self.algebra.multiply(self, other)
        return self.scale(other)

    def __rmul__(self, scalar):
        return self.scale(scalar)

    def __pow__(self, n):
        result = self.algebra.one()
        for _ in range(n):
            result = result * self
        return result

    def scale(self, scalar):
        if isinstance(scalar, int):
            scalar = self.algebra.coefficients.from_int(scalar)
        return HeckeElement(self.algebra, {x: c * scalar for x, c in self.terms.items()})

    def coefficient(self, x):
        return self.terms.get(x, self.algebra.coefficients.zero)

    def support(self):
        return sorted(self.terms, key=self.algebra.sort_key)

    def items(self):
        return [(x, self.terms[x]) for x in self.support()]

    def max_length(self):
        return max((self.algebra.group.length(x) for x in self.terms), default=-1)

    def leading_terms(self):
        """Terms of maximal length."""
        top = self.max_length()
        return {x: c for x, c in self.terms.items() if self.algebra.group.length(x) == top}

    def __repr__(self):
        return " + ".join(
            f"({self.algebra.coefficients.format(c)})*T[{x.t},{x.u},{x.lam}]" for x, c in self.items()
        ) or "0"

    def to_json(self):
        group = self.algebra.group
        return {
            "mode": self.algebra.mode,
            "terms": [
                {"w": group.to_json(x), "c": self.algebra.coefficients.format(c)} for x, c in self.items()
            ],
        }


class HeckeAlgebra:
    """The pro-p Iwahori-Hecke algebra of an extended group over a coefficient ring.

    Args:
        group (ExtendedGroup): The group W~ indexing the tau-basis.
        mode (string, optional): "generic" (Z[v, v^-1], v^2 = q) or "charp" (F_q). Defaults to PROP_HECKE_DEFAULT_MODE.
        corrupt_quadratic (bool, optional): Drop the t = 1 term of c_A in the quadratic relation. Only used to check that the relation checks detect a wrong relation. Defaults to False.
    """

    def __init__(self, group, mode=None, corrupt_quadratic=False):
        mode = _get_default_mode() if mode is None else mode
        self.group = group
        self.affine = group.affine
        self.mode = mode
        self.coefficients = make_coefficients(mode, group.q)
        self.corrupt_quadratic = corrupt_quadratic
        self._q_is_zero = not self.coefficients.q
        self._tori = []
        for A in self.affine.simple_affine_roots:
            tori = [group.torus(t) for t in group.subtorus(A.root)]
            self._tori.append(tori[1:] if corrupt_quadratic else tori)
        self._products = {}
        self._right_words = {}
        self._left_words = {}
        self._iota = {}
        self._siblings = {mode: self}
        logger.info(
            f"Initialized {mode} Hecke algebra of {group.datum.label} with q={group.q}"
            + (" (corrupted quadratic relation)" if corrupt_quadratic else "")
        )

    # -- construction ----------------------------------------------------

    def sort_key(self, x):
        return (self.group.length(x), self.affine.omega_class(x.w), x.lam, x.u, x.t)

    def basis(self, x):
        return HeckeElement(self, {x: self.coefficients.one})

    def element(self, terms):
        """Element from a dict TildeElement -> coefficient (ints are converted)."""
        convert = self.coefficients.from_int
        return HeckeElement(self, {x: convert(c) if isinstance(c, int) else c for x, c in terms.items()})

    def zero(self):
        return HeckeElement(self)

    def one(self):
        return self.basis(self.group.identity)

    def scalar(self, c):
        return self.one().scale(c)

    def in_mode(self, mode):
        """The Hecke algebra of the same group in another coefficient mode."""
        if mode not in self._siblings:
            sibling = HeckeAlgebra(self.group, mode, self.corrupt_quadratic)
            sibling._siblings = self._siblings
            self._siblings[mode] = sibling
        return self._siblings[mode]

    def c_A(self, k):
        """c_A = sum of tau_t over T_A for the simple affine index k."""
        terms = {}
        for torus in self._tori[k]:
            terms[torus] = terms.get(torus, 0) + 1
        return self.element(terms)

    def generators(self):
        """tau_t for unit torus vectors, tau_(n_A) for all simple affine A, and lifts of nontrivial Omega representatives."""
        group = self.group
        gens = [self.basis(group.torus(tuple(int(i == j) for j in range(group.rank)))) for i in range(group.rank)]
        gens += [self.basis(n) for n in group.simple_lifts]
        gens += [
            self.basis(group.lift(omega))
            for omega in self.affine.omega_representatives(bound=1)
            if omega != self.affine.identity
        ]
        return gens

    # -- words -----------------------------------------------------------

    def _lift_word(self, word):
        return self.group.multiply_all([self.group.simple_lifts[k] for k in word])

    def right_word(self, x):
        """(omega~, word) with x = omega~ n_(k1) ... n_(km) and l(omega~) = 0."""
        cached = self._right_words.get(x)
        if cached is None:
            _, word = self.affine.omega_decompose(x.w)
            omega = self.group.multiply(x, self.group.inverse(self._lift_word(word)))
            cached = (omega, word)
            self._right_words[x] = cached
        return cached

    def left_word(self, x):
        """(word, omega~) with x = n_(k1) ... n_(km) omega~ and l(omega~) = 0."""
        cached = self._left_words.get(x)
        if cached is None:
            word, _ = self.affine.left_decompose(x.w)
            omega = self.group.multiply(self.group.inverse(self._lift_word(word)), x)
            cached = (word, omega)
            self._left_words[x] = cached
        return cached

    # -- multiplication --------------------------------------------------

    @staticmethod
    def _accumulate(terms, x, c):
        terms[x] = terms[x] + c if x in terms else c

    def _right_letter(self, terms, k):
        group, affine = self.group, self.affine
        n = group.simple_lifts[k]
        out = {}
        for z, c in terms.items():
            zn = group.multiply(z, n)
            if affine.descent(z.w, k) > 0:
                self._accumulate(out, zn, c)
                continue
            if not self._q_is_zero:
                self._accumulate(out, zn, c * self.coefficients.q)
            for torus in self._tori[k]:
                self._accumulate(out, group.multiply(z, torus), c)
        return {x: c for x, c in out.items() if c}

    def _left_letter(self, terms, k):
        group, affine = self.group, self.affine
        n = group.simple_lifts[k]
        out = {}
        for z, c in terms.items():
            nz = group.multiply(n, z)
            if affine.left_descent(z.w, k) > 0:
                self._accumulate(out, nz, c)
                continue
            if not self._q_is_zero:
                self._accumulate(out, nz, c * self.coefficients.q)
            for torus in self._tori[k]:
                self._accumulate(out, group.multiply(torus, z), c)
        return {x: c for x, c in out.items() if c}

    def basis_product(self, x, y):
        """tau_x tau_y as a dict of terms."""
        key = (x, y)
        cached = self._products.get(key)
        if cached is not None:
            return cached
        one = self.coefficients.one
        group = self.group
        if group.length(y) <= group.length(x):
            omega, word = self.right_word(y)
            terms = {group.multiply(x, omega): one}
            for k in word:
                terms = self._right_letter(terms, k)
        else:
            word, omega = self.left_word(x)
            terms = {group.multiply(omega, y): one}
            for k in reversed(word):
                terms = self._left_letter(terms, k)
        self._products[key] = terms
        return terms

    def multiply(self, a, b):
        """Product of two elements of this algebra.

        Raises:
            ModeMismatchError: if the factors use different coefficient modes.
        """
        a._check_compatible(b)
        if a.algebra is not self:
            raise ModeMismatchError("First factor does not belong to this algebra.")
        out = {}
        for x, c in a.terms.items():
            for y, d in b.terms.items():
                cd = c * d
                for z, e in self.basis_product(x, y).items():
                    self._accumulate(out, z, cd * e)
        return HeckeElement(self, out)

    def product(self, elements):
        result = self.one()
        for element in elements:
            result = result * element
        return result

    # -- inverses and involutions ----------------------------------------

    def _check_generic(self, operation):
        logger.debug(f"Checking inputs to {operation}.")
        if self.mode != "generic":
            raise ModeMismatchError(f"{operation} needs generic coefficients, q is not invertible in characteristic p.")

    def invert_basis(self, x):
        """The inverse of tau_x, which exists once q is inverted.

        Raises:
            ModeMismatchError: in characteristic p mode.
        """
        self._check_generic("invert_basis")
        group = self.group
        omega, word = self.right_word(x)
        result = self.basis(group.inverse(omega))
        for k in word:
            # tau_n^-1 = q^-1 (tau_(n^-1) - c_A)
            letter = (self.basis(group.inverse(group.simple_lifts[k])) - self.c_A(k)).scale(
                self.coefficients.q_inverse
            )
            result = letter * result
        return result

    def _iota_basis(self, x):
        cached = self._iota.get(x)
        if cached is None:
            omega, word = self.right_word(x)
            cached = self.basis(omega)
            for k in word:
                cached = cached * (self.c_A(k) - self.basis(self.group.simple_lifts[k]))
            self._iota[x] = cached
        return cached

    def iota(self, a):
        """The involution tau_x -> (-q)^l(x) (tau_(x^-1))^-1, extended linearly.

        On a reduced expression x = omega~ n_1 ... n_m it is tau_omega~ prod (c_A - tau_n), so no division
        by q takes place and the same formula serves both coefficient modes.
        """
        out = self.zero()
        for x, c in a.terms.items():
            out = out + self._iota_basis(x).scale(c)
        return out

    def iota_from_inverse(self, x):
        """(-q)^l(x) (tau_(x^-1))^-1 computed through invert_basis; generic mode only."""
        self._check_generic("iota_from_inverse")
        sign = (-1) ** self.group.length(x)
        scalar = self.coefficients.q_power(self.group.length(x)) * sign
        return self.invert_basis(self.group.inverse(x)).scale(scalar)

    def v_C(self, a):
        """tau_x -> epsilon_C(x) tau_x."""
        return HeckeElement(
            self, {x: c if self.affine.epsilon_C(x.w) > 0 else -c for x, c in a.terms.items()}
        )

    def iota_C(self, a):
        return self.iota(self.v_C(a))

    # -- characteristic p ------------------------------------------------

    def idempotent(self, xi):
        """epsilon_xi = (-1)^rank sum_t xi(t^-1) tau_t.

        Raises:
            ModeMismatchError: in generic mode.
        """
        logger.debug("Checking inputs to idempotent.")
        if self.mode != "charp":
            raise ModeMismatchError("Idempotents of the finite torus only exist in characteristic p.")
        group = self.group
        sign = self.coefficients.from_int((-1) ** group.rank)
        terms = {
            group.torus(t): self.coefficients.root_of_unity(-group.evaluate(xi, t)) * sign
            for t in group.torus_elements()
        }
        return HeckeElement(self, terms)

    def specialize(self, a):
        """Map a generic element to characteristic p by v -> 0.

        Raises:
            IntegralityError: if a coefficient is not in Z[q].
        """
        if a.algebra.mode != "generic":
            raise ModeMismatchError("Only generic elements can be specialized.")
        target = self.in_mode("charp")
        spec = target.coefficients.specialize
        return HeckeElement(target, {x: spec(c) for x, c in a.terms.items()})
