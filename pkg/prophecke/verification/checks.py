"""
The named checks of the verification suite.

Every check takes a SuiteContext and returns a CheckOutcome. A check fails on
its first counterexample, which is serialized so the run can be reproduced with
the same seed. Checks that cannot decide for the configured datum report an
inconclusive reason instead.
"""
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Callable, Optional

from loguru import logger

from ..algebra.bernstein import difference
from ..algebra.levi import LeviAlgebra
from ..combinatorics.utils import add, sub
from ..utils.errors import ConfigurationError, IntegralityError, PreconditionError, TruncationOverflow

CHECKS = {}
ALIASES = {}


@dataclass
class CheckOutcome:
    instances: int = 0
    counterexample: Optional[dict] = None
    inconclusive: Optional[str] = None
    notes: dict = field(default_factory=dict)

    def fail(self, **details):
        self.counterexample = details
        return self

    def undecided(self, reason):
        self.inconclusive = reason
        return self


@dataclass(frozen=True)
class CheckInfo:
    """A registered check: its identifier, descriptive alias, anchor string and function."""

    name: str
    alias: str
    anchor: str
    run: Callable


def _check(name, alias, anchor, *more_aliases):
    def register(function):
        CHECKS[name] = CheckInfo(name, alias, anchor, function)
        for other in (alias,) + more_aliases:
            ALIASES[other] = name
        return function

    return register


def resolve_check(name):
    """The identifier of a check given by identifier or alias, or None if unknown."""
    if name in CHECKS:
        return name
    return ALIASES.get(name)


def _coweight_notes(out, coweights, max_length):
    """Record which coweights a check covered; they are all those of length <= L in the box of radius L."""
    out.notes["coweights"] = [list(lam) for lam in coweights]
    out.notes["coweight_box"] = max_length


def _lam(lam):
    return list(lam)


def _random_torus(ctx, rng):
    group = ctx.group
    return tuple(int(x) for x in rng.integers(0, group.modulus, size=group.rank))


def _torus_choices(ctx, rng):
    """The trivial torus part and one random one."""
    choices = [None]
    t = _random_torus(ctx, rng)
    if any(t):
        choices.append(t)
    return choices


def _common_chamber(datum, mu1, mu2):
    return all(datum.pairing(mu1, a) * datum.pairing(mu2, a) >= 0 for a in range(datum.n_positive))


# -- relations -------------------------------------------------------------


def _expected_square(algebra, k):
    """q tau_(n^2) + sum over t in T_A of tau_(t n), built directly from the group."""
    group = algebra.group
    n = group.simple_lifts[k]
    expected = algebra.basis(group.multiply(n, n)).scale(algebra.coefficients.q)
    for t in group.subtorus(algebra.affine.simple_affine_roots[k].root):
        expected = expected + algebra.basis(group.multiply(group.torus(t), n))
    return expected


@_check("relations", "associativity", "relations/associativity", "relations/associativity")
def relations(ctx):
    """Quadratic relations, their projections by the torus idempotents, and sampled associativity."""
    out, group = CheckOutcome(), ctx.group
    for algebra in ctx.algebras():
        for k, n in enumerate(group.simple_lifts):
            out.instances += 1
            square = algebra.basis(n) * algebra.basis(n)
            expected = _expected_square(algebra, k)
            if square != expected:
                return out.fail(
                    relation="quadratic",
                    mode=algebra.mode,
                    generator=ctx.affine.simple_names[k],
                    difference=[(group.to_json(x), str(c)) for x, c in difference(square, expected)],
                )
    if "charp" in ctx.modes():
        charp = ctx.charp
        total = charp.zero()
        for xi in group.characters():
            e = charp.idempotent(xi)
            total = total + e
            out.instances += 1
            if e * e != e:
                return out.fail(relation="idempotent", xi=list(xi))
            for k, n in enumerate(group.simple_lifts):
                out.instances += 1
                tau = charp.basis(n)
                left = e * tau * tau
                trivial = group.restrict_trivial(xi, ctx.affine.simple_affine_roots[k].root)
                right = -(e * tau) if trivial else charp.zero()
                if left != right:
                    return out.fail(relation="projected quadratic", xi=list(xi), generator=ctx.affine.simple_names[k])
        out.instances += 1
        if total != charp.one():
            return out.fail(relation="idempotents sum to one")
    rng = ctx.rng()
    pool = ctx.pool(ctx.config.max_length)
    for algebra in ctx.algebras():
        for _ in range(ctx.config.samples):
            a, b, c = (group.lift(rng.choice(pool), _random_torus(ctx, rng)) for _ in range(3))
            out.instances += 1
            ta, tb, tc = algebra.basis(a), algebra.basis(b), algebra.basis(c)
            if (ta * tb) * tc != ta * (tb * tc):
                return out.fail(
                    relation="associativity", mode=algebra.mode, triple=[group.to_json(x) for x in (a, b, c)]
                )
    return out


# -- combinatorics ---------------------------------------------------------


@_check("lemma-1.2", "orientation-character", "Lemma 1.2")
def orientation_character(ctx):
    """epsilon_C agrees with det of the length-zero part, is trivial on W_aff and multiplicative."""
    out, affine = CheckOutcome(), ctx.affine
    weyl = ctx.datum.weyl
    pool = ctx.pool(ctx.config.max_length)
    for k, s in enumerate(affine.simple_reflections):
        out.instances += 1
        if affine.epsilon_C(s) != 1:
            return out.fail(reason="nontrivial on a simple reflection", generator=affine.simple_names[k])
    for w in pool:
        out.instances += 1
        omega, _ = affine.omega_decompose(w)
        if affine.epsilon_C(w) != weyl.determinant(omega.u):
            return out.fail(reason="differs from the length-zero part", w=affine.to_json(w))
        if affine.length(w) != affine.length_by_enumeration(w):
            return out.fail(reason="length differs from inversion count", w=affine.to_json(w))
    rng = ctx.rng()
    for _ in range(ctx.config.samples):
        x, y = rng.choice(pool), rng.choice(pool)
        out.instances += 1
        if affine.epsilon_C(affine.multiply(x, y)) != affine.epsilon_C(x) * affine.epsilon_C(y):
            return out.fail(reason="not multiplicative", pair=[affine.to_json(x), affine.to_json(y)])
    return out


@_check("prop-1.3", "distinguished-cosets", "Proposition 1.3")
def distinguished_cosets(ctx):
    """Coset decompositions w = w0 d are length additive and d s is down, up or in W d."""
    out, affine = CheckOutcome(), ctx.affine
    weyl = ctx.datum.weyl
    for w in ctx.pool(ctx.config.max_length):
        out.instances += 1
        w0, d = affine.coset_decompose(w)
        if not (
            affine.is_distinguished(d)
            and affine.multiply(affine.finite(w0), d) == w
            and affine.length(w) == weyl.length(w0) + affine.length(d)
        ):
            return out.fail(reason="coset decomposition", w=affine.to_json(w))
        if d != w:
            continue
        for k in range(len(affine.simple_reflections)):
            out.instances += 1
            if affine.distinguished_step(d, k) is None:
                return out.fail(reason="trichotomy", d=affine.to_json(d), generator=affine.simple_names[k])
    return out


# -- Bernstein maps ----------------------------------------------------------


def _bernstein_range(ctx):
    bernstein = ctx.bernstein
    for lam in bernstein.coweights_up_to_length(ctx.config.max_length):
        for facet in ctx.datum.all_facets():
            for sign in (1, -1):
                yield lam, facet, sign


@_check("lemma-2.3", "bernstein-integrality", "Lemma 2.3")
def bernstein_integrality(ctx):
    """B_F^s(lam) lies over Z[q], has leading term tau_(e^lam) and lower terms below e^lam."""
    out = CheckOutcome()
    bernstein, affine, group = ctx.bernstein, ctx.affine, ctx.group
    one = ctx.generic.coefficients.one
    for lam, facet, sign in _bernstein_range(ctx):
        out.instances += 1
        b = bernstein.bernstein(facet, sign, lam)
        where = dict(lam=_lam(lam), facet=str(facet), sign=sign)
        try:
            ctx.generic.specialize(b)
        except IntegralityError as err:
            return out.fail(reason=str(err), **where)
        top = group.splitting(lam)
        if b.coefficient(top) != one:
            return out.fail(reason="leading coefficient", **where)
        translation = affine.translation(lam)
        for x in b.terms:
            if x != top and not (
                group.length(x) < affine.length(translation) and affine.bruhat_leq(x.w, translation)
            ):
                return out.fail(reason="support", term=group.to_json(x), **where)
        if b != bernstein.bernstein_alternative(facet, sign, lam):
            return out.fail(reason="depends on the decomposition", **where)
    return out


@_check("eq-2.1", "involution-swaps-signs", "(2.1)")
def involution_swaps_signs(ctx):
    out, bernstein = CheckOutcome(), ctx.bernstein
    for lam, facet, sign in _bernstein_range(ctx):
        if sign < 0:
            continue
        out.instances += 1
        image = ctx.generic.iota_C(bernstein.bernstein(facet, 1, lam))
        if image != bernstein.bernstein(facet, -1, lam):
            return out.fail(lam=_lam(lam), facet=str(facet))
    return out


@_check("eq-2.4", "chamber-product-rule", "(2.4)")
def chamber_product_rule(ctx):
    """B(mu1) B(mu2) = q^k B(mu1 + mu2) with k = 0 exactly on common chambers; B maps commute."""
    out = CheckOutcome()
    bernstein, datum, generic = ctx.bernstein, ctx.datum, ctx.generic
    coweights = bernstein.coweights_up_to_length(max(ctx.config.max_length // 2, 1))
    rng = ctx.rng()
    pairs = [(rng.choice(coweights), rng.choice(coweights)) for _ in range(min(ctx.config.samples, 40))]
    for mu1, mu2 in pairs:
        k = bernstein.product_rule_exponent(mu1, mu2)
        where = dict(mu1=_lam(mu1), mu2=_lam(mu2))
        out.instances += 1
        if (k == 0) != _common_chamber(datum, mu1, mu2):
            return out.fail(reason="exponent vanishes off common chambers", exponent=k, **where)
        for facet in datum.all_facets():
            for sign in (1, -1):
                out.instances += 1
                b1, b2 = bernstein.bernstein(facet, sign, mu1), bernstein.bernstein(facet, sign, mu2)
                b12 = bernstein.bernstein(facet, sign, add(mu1, mu2))
                product_ = b1 * b2
                if product_ != b12.scale(generic.coefficients.q_power(k)):
                    return out.fail(reason="product rule", facet=str(facet), sign=sign, **where)
                if product_ != b2 * b1:
                    return out.fail(reason="not commutative", facet=str(facet), sign=sign, **where)
                reduced = generic.specialize(product_)
                expected = generic.specialize(b12) if k == 0 else ctx.charp.zero()
                if reduced != expected:
                    return out.fail(reason="characteristic p product", facet=str(facet), sign=sign, **where)
    return out


@_check("lemma-2.4", "bernstein-left-divisible", "Lemma 2.4")
def bernstein_left_divisible(ctx):
    """B_F^+(lam) is in tau_(n_0) H for F != x_0 and l(e^lam) > 0, so it kills the X-lines with X(tau_(n_0)) = 0."""
    out, bernstein, datum, generic = CheckOutcome(), ctx.bernstein, ctx.datum, ctx.generic
    modules = ctx.supersingular()
    classified = modules.classify()
    coweights = [lam for lam in bernstein.dominant_coweights(ctx.config.max_length) if bernstein._length(lam) > 0]
    _coweight_notes(out, coweights, ctx.config.max_length)
    n0_inverse = generic.invert_basis(ctx.group.simple_lifts[datum.n_simple])
    facets = [facet for facet in datum.all_facets() if len(facet.simple) < datum.n_simple]
    for facet in facets:
        for lam in coweights:
            out.instances += 1
            try:
                generic.specialize(n0_inverse * bernstein.bernstein(facet, 1, lam))
            except IntegralityError as err:
                return out.fail(reason=f"not left divisible by tau_(n_0): {err}", facet=str(facet), lam=_lam(lam))
    lines = 0
    for entry in classified:
        tested, failures = modules.annihilated_lines(entry.module, coweights)
        lines += tested
        if failures:
            chi, lam = failures[0]
            return out.fail(
                reason="line not killed", orbit=entry.to_json()["orbit"], character=chi.to_json(), lam=_lam(lam)
            )
    out.instances += lines
    out.notes["module_lines"] = lines
    return out


# -- centre --------------------------------------------------------------------


def _dominant_pairs(ctx):
    bernstein = ctx.bernstein
    base = bernstein.dominant_coweights(ctx.config.max_length)
    pairs = [
        (a, b)
        for a, b in combinations_with_replacement(base, 2)
        if bernstein._length(a) + bernstein._length(b) <= ctx.config.max_length
    ]
    rng = ctx.rng()
    wide = bernstein.dominant_coweights(ctx.config.max_length // 2)
    pairs += [(rng.choice(wide), rng.choice(wide)) for _ in range(20)]
    return base, pairs


@_check("prop-2.10", "center-multiplicativity", "Proposition 2.10")
def center_multiplicativity(ctx):
    out, bernstein = CheckOutcome(), ctx.bernstein
    base, pairs = _dominant_pairs(ctx)
    _coweight_notes(out, base, ctx.config.max_length)
    for lam, mu in pairs:
        out.instances += 1
        left = bernstein.central(lam, mode="charp") * bernstein.central(mu, mode="charp")
        if left != bernstein.central(add(lam, mu), mode="charp"):
            return out.fail(lam=_lam(lam), mu=_lam(mu))
    return out


@_check("thm-2.14-partial", "iwahori-center", "Theorem 2.14 (partial)")
def iwahori_center(ctx):
    """z_lam is central in both modes; epsilon_1 z_lam is central and multiplicative in epsilon_1 H epsilon_1."""
    out, bernstein = CheckOutcome(), ctx.bernstein
    base, pairs = _dominant_pairs(ctx)
    _coweight_notes(out, base, ctx.config.max_length)
    for algebra in (ctx.generic, ctx.charp):
        generators = algebra.generators()
        for lam in base:
            z = bernstein.central(lam, mode=algebra.mode)
            for g in generators:
                out.instances += 1
                if z * g != g * z:
                    return out.fail(reason="not central", mode=algebra.mode, lam=_lam(lam), generator=g.to_json())
    charp = ctx.charp
    e1 = charp.idempotent(ctx.group.zero_torus)
    corner_generators = [e1 * g * e1 for g in charp.generators()]
    for lam in base:
        ez = e1 * bernstein.central(lam, mode="charp")
        for g in corner_generators:
            out.instances += 1
            if ez * g != g * ez:
                return out.fail(reason="not central in the corner algebra", lam=_lam(lam))
    for lam, mu in pairs:
        out.instances += 1
        left = (e1 * bernstein.central(lam, mode="charp")) * (e1 * bernstein.central(mu, mode="charp"))
        if left != e1 * bernstein.central(add(lam, mu), mode="charp"):
            return out.fail(reason="not multiplicative in the corner algebra", lam=_lam(lam), mu=_lam(mu))
    leading = {}
    for lam in base:
        out.instances += 1
        key = frozenset(bernstein.central(lam, mode="charp").leading_terms())
        if key in leading:
            return out.fail(reason="equal leading terms", lam=_lam(lam), other=_lam(leading[key]))
        leading[key] = lam
    return out


def _orbits(ctx, out):
    rng = ctx.rng()
    coweights = ctx.bernstein.dominant_coweights(ctx.config.max_length)
    _coweight_notes(out, coweights, ctx.config.max_length)
    for lam in coweights:
        for t in _torus_choices(ctx, rng):
            yield lam, t


@_check("lemma-3.1", "central-leading-terms", "Lemma 3.1")
def central_leading_terms(ctx):
    """z over an orbit has coefficient 1 at every orbit translation and shorter terms elsewhere."""
    out, bernstein, group = CheckOutcome(), ctx.bernstein, ctx.group
    one = ctx.generic.coefficients.one
    for lam, t in _orbits(ctx, out):
        out.instances += 1
        z = bernstein.central(lam, t)
        top = bernstein._length(lam)
        leading = {group.multiply(group.splitting(mu), group.torus(s)) for mu, s in bernstein.orbit(lam, t)}
        where = dict(lam=_lam(lam), t=None if t is None else list(t))
        if any(z.coefficient(x) != one for x in leading):
            return out.fail(reason="leading coefficient", **where)
        if any(group.length(x) >= top for x in z.terms if x not in leading):
            return out.fail(reason="lower terms too long", **where)
    return out


@_check("prop-3.2", "center-involution-fixed", "Proposition 3.2")
def center_involution_fixed(ctx):
    """iota_C fixes every z; whether plain iota does is recorded in the notes."""
    out, bernstein, generic = CheckOutcome(), ctx.bernstein, ctx.generic
    plain = 0
    for lam, t in _orbits(ctx, out):
        out.instances += 1
        z = bernstein.central(lam, t)
        if generic.iota_C(z) != z:
            return out.fail(lam=_lam(lam), t=None if t is None else list(t))
        plain += generic.iota(z) == z
    out.notes["plain_iota_fixed"] = f"{plain}/{out.instances}"
    return out


@_check("lemma-3.4", "orbit-sum-independence", "Lemma 3.4")
def orbit_sum_independence(ctx):
    out, bernstein = CheckOutcome(), ctx.bernstein
    variants = 2 * len(ctx.datum.all_facets())
    for lam, t in _orbits(ctx, out):
        out.instances += variants
        agree, differing = bernstein.orbit_sums_agree(lam, t)
        if not agree:
            return out.fail(
                lam=_lam(lam), t=None if t is None else list(t), variants=[[str(f), s] for f, s in differing]
            )
    out.notes["variants_per_orbit"] = variants
    return out


# -- Levi subalgebras ----------------------------------------------------------


@_check("lemma-3.8", "levi-embedding", "Lemma 3.8")
def levi_embedding(ctx):
    """j_F^+ maps Levi Bernstein maps to Bernstein maps and respects products on F-positive elements."""
    out, bernstein, affine = CheckOutcome(), ctx.bernstein, ctx.affine
    coweights = bernstein.coweights_up_to_length(ctx.config.max_length)
    _coweight_notes(out, coweights, ctx.config.max_length)
    rng = ctx.rng()
    for facet in ctx.datum.all_facets():
        levi = LeviAlgebra(bernstein, facet)
        positive = [lam for lam in coweights if affine.is_F_positive(affine.translation(lam), facet)]
        for sub_facet in ctx.datum.all_facets():
            if not sub_facet.simple <= facet.simple:
                continue
            for lam in positive:
                out.instances += 1
                if not levi.embedding_identity(sub_facet, lam):
                    return out.fail(reason="Bernstein map", facet=str(facet), sub_facet=str(sub_facet), lam=_lam(lam))
        algebra, group = levi.algebra, levi.group
        for _ in range(min(ctx.config.samples, 20)):
            lam, mu = rng.choice(positive), rng.choice(positive)
            out.instances += 1
            a, b = algebra.basis(group.splitting(lam)), algebra.basis(group.splitting(mu))
            if levi.embed_positive(a * b) != levi.embed_positive(a) * levi.embed_positive(b):
                return out.fail(reason="not multiplicative", facet=str(facet), lam=_lam(lam), mu=_lam(mu))
    return out


@_check("eq-3.1", "levi-length-identity", "(3.1)")
def levi_length_identity(ctx):
    out, bernstein, affine = CheckOutcome(), ctx.bernstein, ctx.affine
    coweights = bernstein.coweights_up_to_length(ctx.config.max_length)
    _coweight_notes(out, coweights, ctx.config.max_length)
    for facet in ctx.datum.all_facets():
        positive = [lam for lam in coweights if affine.is_F_positive(affine.translation(lam), facet)]
        positive_set = set(positive)
        for mu in positive:
            for nu in positive:
                if sub(mu, nu) not in positive_set:
                    continue
                out.instances += 1
                if not affine.levi_length_identity(mu, nu, facet):
                    return out.fail(facet=str(facet), mu=_lam(mu), nu=_lam(nu))
    return out


# -- Bernstein basis and the ideal J ---------------------------------------------


@_check("eq-5.1", "distinguished-bernstein-basis", "(5.1)")
def distinguished_bernstein_basis(ctx):
    """B(d) = (-1)^l(d) iota(tau_d) for distinguished d, and the basis change round-trips."""
    out, bernstein, group, generic = CheckOutcome(), ctx.bernstein, ctx.group, ctx.generic
    rng = ctx.rng()
    pool = ctx.pool(ctx.config.max_length)
    for d in pool:
        if not ctx.affine.is_distinguished(d):
            continue
        for t in _torus_choices(ctx, rng):
            x = group.lift(d, t)
            out.instances += 1
            expected = generic.iota(generic.basis(x)).scale((-1) ** group.length(x))
            if bernstein.bernstein_basis(x) != expected:
                return out.fail(reason="distinguished element", x=group.to_json(x))
    for w in rng.sample(pool, ctx.config.samples):
        x = group.lift(w, _random_torus(ctx, rng))
        out.instances += 1
        tau = generic.basis(x)
        if bernstein.from_bernstein_basis(bernstein.to_bernstein_basis(tau)) != tau:
            return out.fail(reason="basis change round trip", x=group.to_json(x))
    return out


@_check("lemma-5.3", "ideal-filtration", "Lemma 5.3")
def ideal_filtration(ctx):
    out, group = CheckOutcome(), ctx.group
    elements = [group.lift(w) for w in ctx.pool(ctx.config.max_length)]
    ideal = ctx.ideal()
    out.instances = len(elements) * len(ideal.generator_coweights)
    ok, failure = ideal.filtration_check(elements)
    if not ok:
        lam, x = failure
        return out.fail(generator=_lam(lam), x=group.to_json(x))
    return out


@_check("fact-iii", "ideal-powers", "Proposition 5.4, fact iii")
def ideal_powers(ctx):
    out, ideal = CheckOutcome(), ctx.ideal()
    for lam in ideal.generator_coweights:
        for m in (1, 2, 3):
            out.instances += 1
            if not ideal.powers_identity(lam, m):
                return out.fail(lam=_lam(lam), m=m)
    return out


# -- modules ---------------------------------------------------------------------


@_check("remark-4.2", "satake-generator", "Remark 4.2")
def satake_generator(ctx):
    """(1 (x) 1) z_lam = (1 (x) 1) B_(F_chi)^+(lam) in M(chi), and z acts multiplicatively on 1 (x) 1."""
    out, weights, bernstein = CheckOutcome(), ctx.weights(), ctx.bernstein
    coweights = bernstein.dominant_coweights(ctx.config.max_length)
    _coweight_notes(out, coweights, ctx.config.max_length)
    small = [lam for lam in coweights if 2 * bernstein._length(lam) <= ctx.config.max_length]
    try:
        for chi in weights.characters():
            for lam in coweights:
                out.instances += 1
                result = weights.satake_check(chi, lam)
                if not result.equal:
                    return out.fail(
                        reason="generator",
                        chi=chi.to_json(),
                        lam=_lam(lam),
                        left=weights.to_json(result.left),
                        right=weights.to_json(result.right),
                    )
            for lam, mu in combinations_with_replacement(small, 2):
                out.instances += 1
                if not weights.multiplicativity_check(chi, lam, mu).equal:
                    return out.fail(reason="multiplicativity", chi=chi.to_json(), lam=_lam(lam), mu=_lam(mu))
    except TruncationOverflow as err:
        return out.undecided(str(err))
    return out


@_check("lemma-5.12", "trivial-sign-not-supersingular", "Lemma 5.12")
def trivial_sign_not_supersingular(ctx):
    out, modules = CheckOutcome(), ctx.supersingular()
    for chi, sigma, module in modules.non_supersingular_modules():
        out.instances += 1
        if modules.invertible_z(module) is None or modules.is_supersingular_module(module):
            return out.fail(character=chi.to_json(), sigma=sigma)
    return _missing_sigma(out, modules, "non_supersingular")


@_check("thm-5.14", "supersingular-criterion", "Theorem 5.14")
def supersingular_criterion(ctx):
    """J kills every classified module, whose centre character and affine characters are supersingular."""
    out, modules = CheckOutcome(), ctx.supersingular()
    characters = modules.characters
    classified = modules.classify()
    for entry in classified:
        where = dict(orbit=entry.to_json()["orbit"])
        out.instances += 1
        if not modules.z_acts_by_zero(entry.module):
            return out.fail(reason="J does not act by zero", **where)
        if entry.zcharacter is None or not entry.zcharacter["is_zeta"]:
            return out.fail(reason="centre character", **where)
        content = modules.contains_affine_character(entry.module)
        if entry.character not in dict(content):
            return out.fail(reason="inducing character missing", **where)
        if any(characters.is_trivial_or_sign_twist(chi) for chi, _ in content):
            return out.fail(reason="contains a twist of trivial or sign", **where)
    others = [module for _, _, module in modules.non_supersingular_modules()]
    out.instances += 1
    if not modules.blocks_separate([entry.module for entry in classified] + others):
        return out.fail(reason="homomorphism between different centre characters")
    return _missing_sigma(out, modules, "classify", "non_supersingular")


@_check("cor-5.16-enumeration", "classification-enumeration", "Corollary 5.16")
def classification_enumeration(ctx):
    """Character count and iota_C composition, then classification against brute force."""
    out, modules = CheckOutcome(), ctx.supersingular()
    characters, charp = modules.characters, ctx.charp
    enumerated = characters.enumerate()
    expected = sum(
        2 ** sum(characters.trivial_on(xi, k) for k in range(characters.n_affine)) for xi in ctx.group.characters()
    )
    out.instances += 1
    if len(enumerated) != expected:
        return out.fail(reason="character count", found=len(enumerated), expected=expected)
    for chi in enumerated:
        composed = characters.compose_with_iota_C(chi)
        for k, n in enumerate(ctx.group.simple_lifts):
            out.instances += 1
            value = characters.value_on(chi, charp.iota_C(charp.basis(n)))
            if value != composed.values[k]:
                return out.fail(reason="composition with iota_C", character=chi.to_json(), generator=k)
    max_dimension = max((entry.dimension for entry in modules.classify()), default=1)
    if modules.brute_force_feasible(max_dimension + 1):
        max_dimension += 1
    out.notes["brute_force"] = {"max_dimension": max_dimension}
    if not modules.brute_force_feasible(max_dimension):
        return out.undecided(
            f"Brute force over dimension {max_dimension} modules is infeasible for p = {modules.context.p}."
        )
    agree, n_classified, n_brute = modules.cross_check(max_dimension)
    out.instances += n_classified
    out.notes["brute_force"].update(classified=n_classified, found=n_brute)
    if not agree:
        return out.fail(reason="brute force disagrees", classified=n_classified, found=n_brute)
    if modules.context.omega.order == 1 and not modules.ideal.units:
        for entry in modules.classify():
            out.instances += 1
            if entry.dimension != 1:
                return out.fail(reason="dimension for simply connected data", orbit=entry.to_json()["orbit"])
    return _missing_sigma(out, modules, "classify")


def _missing_sigma(out, modules, *stages):
    """Passing outcomes become inconclusive when some character had no sigma over F_p."""
    missing = [entry for stage in stages for entry in modules.missing_sigma[stage]]
    if missing:
        out.notes["missing_sigma"] = missing
        return out.undecided(f"No sigma over F_{modules.context.p} for {len(missing)} character(s).")
    return out


def run_check(name, ctx):
    """Run one check; unmet preconditions on the datum make it inconclusive.

    Returns:
        CheckOutcome: The outcome
    """
    logger.info(f"Running check {name}")
    try:
        return CHECKS[name].run(ctx)
    except (ConfigurationError, PreconditionError, TruncationOverflow) as err:
        logger.warning(f"Check {name} is inconclusive: {err}")
        return CheckOutcome().undecided(str(err))
