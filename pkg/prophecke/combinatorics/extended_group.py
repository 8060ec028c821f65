"""
The pro-p extension W~ of the extended affine Weyl group by the finite torus
T(F_q) = X_*(T) (x) F_q^x, with Tits-style lifts of the finite Weyl group.

Torus parts are written additively as exponent vectors in (Z/(q-1))^rank,
so the torus element lam(x) for a coweight lam and x = g^e is e * lam.
"""
import json
import os
from dataclasses import dataclass
from itertools import product
from typing import Tuple

import numpy as np
from loguru import logger

from .affine_weyl import ExtendedWeylElement
from ..utils.set_up_mode import _get_cache_dir


@dataclass(frozen=True, order=True)
class TildeElement:
    """The element t n_u e^lam of W~, with n_u the Tits lift of u."""

    t: Tuple[int, ...]
    u: int
    lam: Tuple[int, ...]

    @property
    def w(self):
        """Projection to the extended affine Weyl group."""
        return ExtendedWeylElement(self.lam, self.u)


class ExtendedGroup:
    """The group W~ for an affine Weyl group and the q attached to its root datum.

    Args:
        affine (AffineWeylGroup): The extended affine Weyl group.
    """

    def __init__(self, affine):
        self.affine = affine
        self.datum = affine.datum
        self.weyl = affine.weyl
        self.q = self.datum.q
        self.modulus = self.q - 1
        self.rank = self.datum.rank_x
        self.zero_torus = (0,) * self.rank
        self.identity = TildeElement(self.zero_torus, 0, self.zero_torus)
        # -1 in F_q^x as an exponent of the chosen generator
        self.minus_one = self.modulus // 2 if self.q % 2 else 0
        self._cocycle = {}
        self._load_cocycle_cache()
        self.simple_lifts = [
            self.tits_lift(self.weyl.simple_reflection(i)) for i in range(self.datum.n_simple)
        ] + [self._affine_lift(h) for h in self.datum.highest_roots]
        logger.info(f"Built extended group for {self.datum.label} with q={self.q}")

    # -- torus -----------------------------------------------------------

    def torus_add(self, a, b):
        return tuple((x + y) % self.modulus for x, y in zip(a, b))

    def torus_neg(self, a):
        return tuple(-x % self.modulus for x in a)

    def torus_act(self, u, t):
        """u(t) for a finite Weyl group index u."""
        return tuple(int(x) % self.modulus for x in self.weyl.matrix(u) @ np.asarray(t, dtype=np.int64))

    def coroot_value(self, root, x):
        """The torus element coroot(g^x) for a root index."""
        return tuple(x * c % self.modulus for c in self.datum.coroots[root])

    def torus_elements(self):
        return [tuple(t) for t in product(range(self.modulus), repeat=self.rank)]

    def subtorus(self, root):
        """T_A for an affine root with direction root, as the multiset of coroot(x), x in F_q^x."""
        return [self.coroot_value(root, x) for x in range(self.modulus)]

    def torus(self, t):
        return TildeElement(tuple(x % self.modulus for x in t), 0, self.zero_torus)

    # -- cocycle ---------------------------------------------------------

    def _square(self, i):
        """n_i^2 = coroot_i(-1) for a simple index i."""
        return self.coroot_value(i, self.minus_one)

    def cocycle(self, u, v, word=None):
        """c(u, v) with n_u n_v = c(u, v) n_uv.

        Args:
            u (int): Finite Weyl group index.
            v (int): Finite Weyl group index.
            word (tuple of int, optional): A reduced word for v; the stored one if None.
        """
        if word is None:
            cached = self._cocycle.get((u, v))
            if cached is not None:
                return cached
        W = self.weyl
        t = self.zero_torus
        w = u
        for i in W.words[v] if word is None else word:
            ws = W.multiply(w, W.simple_reflection(i))
            if W.length(ws) < W.length(w):
                # n_w n_s = n_ws n_s^2 = ws(n_s^2) n_ws
                t = self.torus_add(t, self.torus_act(ws, self._square(i)))
            w = ws
        if word is None:
            self._cocycle[(u, v)] = t
        return t

    def _cache_path(self):
        directory = _get_cache_dir()
        if directory is None:
            return None
        label = self.datum.label.replace("[", "_").replace("]", "").replace(",", "-")
        return os.path.join(directory, f"{label}_q{self.q}_cocycle.json")

    def _load_cocycle_cache(self):
        path = self._cache_path()
        if path is None:
            return
        if os.path.exists(path):
            with open(path) as f:
                table = json.load(f)
            for u, row in enumerate(table["cocycle"]):
                for v, t in enumerate(row):
                    self._cocycle[(u, v)] = tuple(t)
            logger.debug(f"Loaded cocycle table from {path}")
            return
        n = self.weyl.order
        table = [[list(self.cocycle(u, v)) for v in range(n)] for u in range(n)]
        os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
        with open(path, "w") as f:
            json.dump({"label": self.datum.label, "q": self.q, "cocycle": table}, f)
        logger.debug(f"Stored cocycle table in {path}")

    # -- group structure -------------------------------------------------

    def multiply(self, a, b):
        """(t, u, lam)(t', v, mu) = (t + u(t') + c(u, v), uv, v^-1 lam + mu)."""
        W = self.weyl
        t = self.torus_add(self.torus_add(a.t, self.torus_act(a.u, b.t)), self.cocycle(a.u, b.u))
        lam = tuple(x + y for x, y in zip(W.act(W.inverse(b.u), a.lam), b.lam))
        return TildeElement(t, W.multiply(a.u, b.u), lam)

    def multiply_all(self, elements):
        result = self.identity
        for element in elements:
            result = self.multiply(result, element)
        return result

    def inverse(self, a):
        W = self.weyl
        u_inv = W.inverse(a.u)
        t = self.torus_act(u_inv, self.torus_neg(self.torus_add(a.t, self.cocycle(a.u, u_inv))))
        return TildeElement(t, u_inv, tuple(-x for x in W.act(a.u, a.lam)))

    def splitting(self, lam):
        """The image of a coweight in W~ (the class of lam(uniformizer^-1))."""
        return TildeElement(self.zero_torus, 0, tuple(int(x) for x in lam))

    def tits_lift(self, u):
        return TildeElement(self.zero_torus, u, self.zero_torus)

    def lift(self, w, t=None):
        """t times the canonical lift n_u e^lam of w = u e^lam."""
        return TildeElement(self.zero_torus if t is None else tuple(t), w.u, w.lam)

    def _affine_lift(self, highest):
        """n_0 = (n_v n_i n_v^-1) e^(-highest coroot) for v alpha_i = highest root."""
        W = self.weyl
        v, i = min(
            ((v, i) for v in range(W.order) for i in range(self.datum.n_simple)
             if W.act_on_root(v, i) == highest),
            key=lambda pair: (W.length(pair[0]), pair),
        )
        n_v = self.tits_lift(v)
        conjugate = self.multiply_all(
            [n_v, self.tits_lift(W.simple_reflection(i)), self.inverse(n_v)]
        )
        return self.multiply(conjugate, self.splitting(tuple(-c for c in self.datum.coroots[highest])))

    def lift_affine(self, k):
        """n_A for the simple affine reflection with index k."""
        return self.simple_lifts[k]

    def length(self, x):
        return self.affine.length(x.w)

    def finite_elements(self):
        """All elements t n_u of the finite part of W~."""
        return [
            TildeElement(t, u, self.zero_torus) for u in range(self.weyl.order) for t in self.torus_elements()
        ]

    def omega_tilde_generators(self):
        """Generators of the length-zero subgroup: torus unit vectors and a lift of each Omega generator.

        Only cyclic Omega is supported; see AffineWeylGroup.omega_cyclic_data.
        """
        gens = [self.torus(tuple(int(i == j) for j in range(self.rank))) for i in range(self.rank)]
        generator, order = self.affine.omega_cyclic_data()
        if order != 1:
            gens.append(self.lift(generator))
        return gens

    # -- characters ------------------------------------------------------

    def characters(self):
        """All characters of T(F_q) as exponent vectors, in lexicographic order."""
        return [tuple(xi) for xi in product(range(self.modulus), repeat=self.rank)]

    def evaluate(self, xi, t):
        """xi(t) as an exponent of the chosen generator of F_q^x."""
        return sum(a * b for a, b in zip(xi, t)) % self.modulus

    def restrict_trivial(self, xi, root):
        """True if xi is trivial on T_A for an affine root with direction root."""
        return self.evaluate(xi, self.datum.coroots[root]) == 0

    def conjugate_character(self, u, xi):
        """The character t -> xi(u^-1(t))."""
        mat = self.weyl.matrix(self.weyl.inverse(u))
        return tuple(int(x) % self.modulus for x in mat.T @ np.asarray(xi, dtype=np.int64))

    def to_json(self, x):
        return {"t": list(x.t), "lambda": list(x.lam), "u": self.weyl.word_string(x.u)}
