"""Normal-ordered differential operators on R^N with D-power rational coefficients.

An OperatorExpr is a finite sum sum_alpha c_alpha(q) * p^alpha with all
position dependence collected to the left of all momentum factors under
[q_i, p_j] = i*hbar*delta_ij.  Products are renormal-ordered with the exact
push-through rule

    p^alpha f(q) = sum_{gamma <= alpha} binom(alpha, gamma) (-i*hbar)^|gamma|
                   (d^gamma f) p^(alpha - gamma),

so two operators are equal iff their term maps coincide after canonical
reduction of every coefficient.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product as _cartesian
from math import comb

from .ring import Coefficient, GaussRat, Poly, d_poly

# powers of -i cycle with period 4
_MINUS_I_POW = (GaussRat(1), GaussRat(0, -1), GaussRat(-1), GaussRat(0, 1))


class OperatorExpr:
    """Finite sum of normal-ordered terms c(q) * p^alpha."""

    __slots__ = ("nq", "terms")

    def __init__(self, nq, terms=None):
        self.nq = nq
        self.terms = terms if terms is not None else {}

    # -- constructors --------------------------------------------------------

    @staticmethod
    def zero(nq):
        return OperatorExpr(nq)

    @staticmethod
    def identity(nq):
        return OperatorExpr(nq, {(0,) * nq: Coefficient.constant(nq, 1)})

    @staticmethod
    def scalar(nq, c):
        c = Coefficient.constant(nq, c)
        return OperatorExpr(nq, {(0,) * nq: c} if c else {})

    @staticmethod
    def from_coefficient(nq, coeff):
        """Pure multiplication operator by a rational function of q."""
        return OperatorExpr(nq, {(0,) * nq: coeff} if coeff else {})

    @staticmethod
    def position(nq, i):
        return OperatorExpr.from_coefficient(nq, Coefficient(Poly.variable(nq, i)))

    @staticmethod
    def momentum(nq, i):
        alpha = [0] * nq
        alpha[i] = 1
        return OperatorExpr(nq, {tuple(alpha): Coefficient.constant(nq, 1)})

    @staticmethod
    def symbol(nq, name):
        idx = {"lambda": Poly.idx_lambda(nq), "omega": Poly.idx_omega(nq), "hbar": Poly.idx_hbar(nq)}[name]
        return OperatorExpr.from_coefficient(nq, Coefficient(Poly.variable(nq, idx)))

    @staticmethod
    def d_factor(nq):
        """The multiplication operator D = 1 + lambda*q^2."""
        return OperatorExpr.from_coefficient(nq, Coefficient(d_poly(nq)))

    # -- structure -----------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, OperatorExpr) and self.nq == other.nq and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def term_count(self):
        return len(self.terms)

    def momentum_degree(self):
        return max((sum(a) for a in self.terms), default=0)

    def max_d_power(self):
        return max((c.dpow for c in self.terms.values()), default=0)

    def _put(self, alpha, coeff):
        old = self.terms.get(alpha)
        s = coeff if old is None else old + coeff
        if s:
            self.terms[alpha] = s
        elif alpha in self.terms:
            del self.terms[alpha]

    # -- linear operations ---------------------------------------------------

    def __neg__(self):
        return OperatorExpr(self.nq, {a: -c for a, c in self.terms.items()})

    def __add__(self, other):
        if isinstance(other, (int, Fraction, GaussRat)):
            other = OperatorExpr.scalar(self.nq, other)
        out = OperatorExpr(self.nq, dict(self.terms))
        for a, c in other.terms.items():
            out._put(a, c)
        return out

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, GaussRat)):
            other = OperatorExpr.scalar(self.nq, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        """Multiply by a scalar or by a pure function of q (a Coefficient)."""
        if isinstance(c, (int, Fraction)):
            c = GaussRat(c)
        if isinstance(c, GaussRat):
            if not c:
                return OperatorExpr.zero(self.nq)
            return OperatorExpr(self.nq, {a: v * c for a, v in self.terms.items()})
        out = OperatorExpr(self.nq)
        for a, v in self.terms.items():
            out._put(a, v * c)
        return out

    # -- multiplication ------------------------------------------------------

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussRat)):
            return self.scale(other)
        out = OperatorExpr(self.nq)
        for alpha, c in self.terms.items():
            for beta, d in other.terms.items():
                for gamma_alpha, coeff in _push_through(alpha, d):
                    key = tuple(g + b for g, b in zip(gamma_alpha, beta))
                    out._put(key, c * coeff)
        return out

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, GaussRat)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative operator power")
        out = OperatorExpr.identity(self.nq)
        for _ in range(n):
            out = out * self
        return out

    def commutator(self, other):
        return self * other - other * self

    # -- involutions ---------------------------------------------------------

    def adjoint(self):
        """Formal adjoint in the unweighted L2 product: reverse factors,
        conjugate i, renormal-order."""
        out = OperatorExpr(self.nq)
        for alpha, c in self.terms.items():
            for gamma_alpha, coeff in _push_through(alpha, c.conjugate()):
                out._put(gamma_alpha, coeff)
        return out

    def conjugate_by_d_power(self, a):
        """D^a * X * D^(-a) for rational a, via p_i -> p_i + 2i*hbar*a*lambda*q_i/D.

        Exact for fractional a because only the logarithmic derivative of D
        enters the shifted momentum.
        """
        a = Fraction(a)
        nq = self.nq
        if a == 0 or self.is_zero():
            return OperatorExpr(nq, dict(self.terms))
        shifted = []
        for i in range(nq):
            e = [0] * (nq + 3)
            e[i] = 1
            e[Poly.idx_lambda(nq)] = 1
            e[Poly.idx_hbar(nq)] = 1
            extra = Coefficient(Poly.monomial(nq, e, GaussRat(0, 2 * a)), 1)
            shifted.append(OperatorExpr.momentum(nq, i) + OperatorExpr.from_coefficient(nq, extra))
        # cache powers of each shifted momentum
        maxpow = [0] * nq
        for alpha in self.terms:
            for i, k in enumerate(alpha):
                maxpow[i] = max(maxpow[i], k)
        powers = []
        for i in range(nq):
            row = [OperatorExpr.identity(nq)]
            for _ in range(maxpow[i]):
                row.append(row[-1] * shifted[i])
            powers.append(row)
        out = OperatorExpr.zero(nq)
        for alpha, c in self.terms.items():
            piece = OperatorExpr.from_coefficient(nq, c)
            for i, k in enumerate(alpha):
                if k:
                    piece = piece * powers[i][k]
            out = out + piece
        return out

    def substitute_lambda_zero(self):
        """Flat-space limit lambda -> 0 of every coefficient."""
        out = OperatorExpr(self.nq)
        for a, c in self.terms.items():
            out._put(a, c.substitute_lambda_zero())
        return out

    def eval_coefficients(self, values):
        """Numeric coefficient map {alpha: complex} at given variable values."""
        return {a: c.eval(values) for a, c in self.terms.items()}

    # -- printing ------------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for alpha in sorted(self.terms, key=lambda a: (sum(a), a), reverse=True):
            mono = "*".join(
                f"p{i+1}^{k}" if k > 1 else f"p{i+1}" for i, k in enumerate(alpha) if k
            )
            c = str(self.terms[alpha])
            parts.append(f"{c}*{mono}" if mono else c)
        return " + ".join(parts)

    __repr__ = __str__


def _push_through(alpha, coeff):
    """Yield (new_alpha, coefficient) pairs for p^alpha * coeff(q)."""
    nq = coeff.num.nq
    if all(k == 0 for k in alpha):
        yield alpha, coeff
        return
    ih = Poly.idx_hbar(nq)
    ranges = [range(k + 1) for k in alpha]
    for gamma in _cartesian(*ranges):
        g = sum(gamma)
        c = coeff
        ok = True
        for i, gi in enumerate(gamma):
            for _ in range(gi):
                c = c.diff_q(i)
                if c.is_zero():
                    ok = False
                    break
            if not ok:
                break
        if not ok or c.is_zero():
            continue
        if g:
            binom = 1
            for ai, gi in zip(alpha, gamma):
                binom *= comb(ai, gi)
            e = [0] * (nq + 3)
            e[ih] = g
            factor = Poly.monomial(nq, e, _MINUS_I_POW[g % 4] * binom)
            c = c * factor
        yield tuple(a - g_ for a, g_ in zip(alpha, gamma)), c


def weighted_adjoint(x, weight_power):
    """Adjoint with respect to the inner product with weight D^weight_power.

    A^dagger_W = W^(-1) (formal adjoint) W with W = D^w.
    """
    return x.adjoint().conjugate_by_d_power(-Fraction(weight_power))
