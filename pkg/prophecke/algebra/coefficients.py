"""
Coefficient rings of the Hecke algebra.

Generic mode works over Z[v, v^-1] with v^2 = q, characteristic p mode over
the finite field F_q (where q = 0).
"""
from itertools import product

from loguru import logger
from sympy import ZZ, factorint
from sympy.polys.galoistools import gf_add, gf_irreducible_p, gf_mul, gf_rem, gf_strip
from sympy.polys.rings import ring

from ..utils.errors import ConfigurationError, IntegralityError, ModeMismatchError

_RING, _V = ring("v", ZZ)


class LaurentPolynomial:
    """An integer Laurent polynomial v^shift * poly in v, with poly(0) != 0 unless it is zero."""

    __slots__ = ("poly", "shift")

    def __init__(self, poly=None, shift=0):
        poly = _RING.zero if poly is None else poly
        if not poly:
            self.poly, self.shift = _RING.zero, 0
            return
        low = min(m[0] for m in poly.itermonoms())
        if low:
            poly = _RING.from_dict({(m[0] - low,): c for m, c in poly.iterterms()})
        self.poly, self.shift = poly, shift + low

    @classmethod
    def from_int(cls, n):
        return cls(_RING(int(n)))

    @classmethod
    def v_power(cls, k, coefficient=1):
        """coefficient * v^k for any integer k."""
        return cls(_RING(int(coefficient)), k)

    @classmethod
    def q_power(cls, k, coefficient=1):
        return cls.v_power(2 * k, coefficient)

    def __bool__(self):
        return bool(self.poly)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial.from_int(other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.shift == other.shift and self.poly == other.poly

    def __hash__(self):
        return hash((self.shift, tuple(sorted(self.terms()))))

    def __neg__(self):
        return LaurentPolynomial(-self.poly, self.shift)

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial.from_int(other)
        if not self:
            return other
        if not other:
            return self
        low = min(self.shift, other.shift)
        poly = self.poly * _V ** (self.shift - low) + other.poly * _V ** (other.shift - low)
        return LaurentPolynomial(poly, low)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPolynomial(self.poly * other, self.shift)
        return LaurentPolynomial(self.poly * other.poly, self.shift + other.shift)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("Only monomials can be inverted; use v_power for negative powers.")
        return LaurentPolynomial(self.poly**n, self.shift * n)

    def terms(self):
        """(exponent of v, coefficient) pairs in increasing exponent order."""
        return sorted((m[0] + self.shift, int(c)) for m, c in self.poly.iterterms())

    def is_q_integral(self):
        """True if the element lies in Z[q] = Z[v^2]."""
        return all(e >= 0 and e % 2 == 0 for e, _ in self.terms())

    def constant_term(self):
        return dict(self.terms()).get(0, 0)

    def degree(self):
        terms = self.terms()
        return terms[-1][0] if terms else None

    def __repr__(self):
        return f"LaurentPolynomial({self})"

    def __str__(self):
        terms = self.terms()
        if not terms:
            return "0"
        var, step = ("q", 2) if all(e % 2 == 0 for e, _ in terms) else ("v", 1)
        out = ""
        for e, c in terms:
            k = e // step
            sign = "-" if c < 0 else "+"
            c = abs(c)
            if k == 0:
                body = str(c)
            else:
                power = var if k == 1 else f"{var}^{k}"
                body = power if c == 1 else f"{c}*{power}"
            out += (("-" if sign == "-" else "") + body) if not out else f" {sign} {body}"
        return out


class FiniteField:
    """The field F_q, with elements encoded as integers 0..q-1 (base-p digits of a residue polynomial).

    Args:
        q (int): A prime power.
    """

    def __init__(self, q):
        factors = factorint(q)
        if len(factors) != 1:
            raise ConfigurationError(f"F_q needs a prime power, got {q}.")
        ((self.p, self.s),) = factors.items()
        self.q = q
        if self.s == 1:
            self.modulus = None
            self._add = self._mul = None
        else:
            self.modulus = self._find_irreducible()
            codes = range(q)
            self._add = [[self._encode(gf_add(self._decode(a), self._decode(b), self.p, ZZ)) for b in codes] for a in codes]
            self._mul = [
                [self._encode(gf_rem(gf_mul(self._decode(a), self._decode(b), self.p, ZZ), self.modulus, self.p, ZZ)) for b in codes]
                for a in codes
            ]
        self.generator = self._find_generator()
        self._exp = [1]
        for _ in range(q - 2):
            self._exp.append(self._mul_codes(self._exp[-1], self.generator))
        self._log = {code: e for e, code in enumerate(self._exp)}
        logger.debug(f"Built F_{q} with generator code {self.generator}")

    def _find_irreducible(self):
        for tail in product(range(self.p), repeat=self.s):
            candidate = [1, *tail]
            if gf_irreducible_p(candidate, self.p, ZZ):
                return candidate
        raise ConfigurationError(f"No irreducible polynomial of degree {self.s} over F_{self.p}.")

    def _decode(self, code):
        digits = []
        for _ in range(self.s):
            digits.append(code % self.p)
            code //= self.p
        return gf_strip(digits[::-1])

    def _encode(self, poly):
        code = 0
        for c in poly:
            code = code * self.p + int(c) % self.p
        return code

    def _add_codes(self, a, b):
        return (a + b) % self.p if self._add is None else self._add[a][b]

    def _mul_codes(self, a, b):
        return a * b % self.p if self._mul is None else self._mul[a][b]

    def _find_generator(self):
        for g in range(2 if self.q > 2 else 1, self.q):
            power, order = g, 1
            while power != 1:
                power = self._mul_codes(power, g)
                order += 1
            if order == self.q - 1:
                return g
        return 1

    def element(self, code):
        return FieldElement(self, code)

    def from_int(self, n):
        """The image of an integer under Z -> F_q."""
        return FieldElement(self, int(n) % self.p)

    def root_of_unity(self, e):
        """generator^e."""
        return FieldElement(self, self._exp[e % (self.q - 1)])

    def log(self, x):
        return self._log[x.code]

    def elements(self):
        return [FieldElement(self, c) for c in range(self.q)]

    def __eq__(self, other):
        return isinstance(other, FiniteField) and other.q == self.q

    def __hash__(self):
        return hash(("F", self.q))


class FieldElement:
    """An element of a FiniteField."""

    __slots__ = ("field", "code")

    def __init__(self, field, code):
        self.field = field
        self.code = code

    def _coerce(self, other):
        if isinstance(other, int):
            return self.field.from_int(other)
        return other

    def __bool__(self):
        return self.code != 0

    def __eq__(self, other):
        other = self._coerce(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.code == other.code

    def __hash__(self):
        return hash(self.code)

    def __add__(self, other):
        other = self._coerce(other)
        return FieldElement(self.field, self.field._add_codes(self.code, other.code))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, self.field._mul_codes(self.code, self.field.from_int(-1).code))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        return FieldElement(self.field, self.field._mul_codes(self.code, other.code))

    __rmul__ = __mul__

    def inverse(self):
        if not self:
            raise ZeroDivisionError("0 has no inverse in F_q.")
        return self.field.root_of_unity(-self.field.log(self))

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __pow__(self, n):
        if not self:
            return self if n > 0 else self.field.from_int(1)
        return self.field.root_of_unity(n * self.field.log(self))

    def __repr__(self):
        return f"FieldElement({self})"

    def __str__(self):
        if self.field.s == 1:
            return str(self.code)
        return "0" if not self else f"g^{self.field.log(self)}"


class GenericCoefficients:
    """Z[v, v^-1] with q = v^2."""

    mode = "generic"

    def __init__(self, q):
        self.q_value = q
        self.zero = LaurentPolynomial()
        self.one = LaurentPolynomial.from_int(1)
        self.q = LaurentPolynomial.q_power(1)
        self.q_inverse = LaurentPolynomial.q_power(-1)

    def from_int(self, n):
        return LaurentPolynomial.from_int(n)

    def q_power(self, k):
        return LaurentPolynomial.q_power(k)

    def v_power(self, k):
        return LaurentPolynomial.v_power(k)

    def format(self, c):
        return str(c)


class CharPCoefficients:
    """The field F_q, in which q = 0."""

    mode = "charp"

    def __init__(self, q):
        self.q_value = q
        self.field = FiniteField(q)
        self.zero = self.field.from_int(0)
        self.one = self.field.from_int(1)
        self.q = self.field.from_int(q)

    def from_int(self, n):
        return self.field.from_int(n)

    def q_power(self, k):
        if k < 0:
            raise ModeMismatchError("q is not invertible in characteristic p.")
        return self.one if k == 0 else self.zero

    def v_power(self, k):
        raise ModeMismatchError("Half powers of q only exist in generic mode.")

    def root_of_unity(self, e):
        return self.field.root_of_unity(e)

    def specialize(self, c):
        """Image of a generic coefficient under v -> 0.

        Raises:
            IntegralityError: if c is not in Z[q].
        """
        if not c.is_q_integral():
            raise IntegralityError(f"Coefficient {c} is not in Z[q].")
        return self.field.from_int(c.constant_term())

    def format(self, c):
        return str(c)


def make_coefficients(mode, q):
    """Coefficient ring for a mode string."""
    if mode == "generic":
        return GenericCoefficients(q)
    if mode == "charp":
        return CharPCoefficients(q)
    raise ConfigurationError(f"Unknown coefficient mode {mode!r}.")
