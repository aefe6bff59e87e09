"""Exact coefficient ring for the curved-oscillator operator algebra.

Coefficients of normal-ordered operators live in the ring

    Q(i)[q_1..q_N, lambda, omega, hbar][1/D],      D = 1 + lambda*(q_1^2+...+q_N^2),

i.e. polynomials with Gaussian-rational coefficients divided by powers of the
single irreducible polynomial D.  Only trial division by D is ever needed, so
no general multivariate GCD machinery lives here.

Variable layout inside exponent tuples: q_1..q_N first, then lambda, omega,
hbar.  All arithmetic is exact (``fractions.Fraction``).
"""

from __future__ import annotations

from fractions import Fraction


class GaussRat:
    """Gaussian rational a + b*i with exact Fraction parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        other = _as_gauss(other)
        if other is NotImplemented:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __neg__(self):
        return GaussRat(-self.re, -self.im)

    def __add__(self, other):
        other = _as_gauss(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussRat(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_gauss(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussRat(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return _as_gauss(other).__sub__(self)

    def __mul__(self, other):
        other = _as_gauss(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussRat(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_gauss(other)
        if other is NotImplemented:
            return NotImplemented
        n = other.re * other.re + other.im * other.im
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussRat(
            (self.re * other.re + self.im * other.im) / n,
            (self.im * other.re - self.re * other.im) / n,
        )

    def __rtruediv__(self, other):
        return _as_gauss(other).__truediv__(self)

    def conjugate(self):
        return GaussRat(self.re, -self.im)

    def __repr__(self):
        return f"GaussRat({self.re!r}, {self.im!r})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}*i" if self.im != 1 else "i"
        sign = "+" if self.im > 0 else "-"
        mag = abs(self.im)
        imtxt = "i" if mag == 1 else f"{mag}*i"
        return f"({self.re}{sign}{imtxt})"


def _as_gauss(x):
    if isinstance(x, GaussRat):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussRat(x)
    return NotImplemented


ONE = GaussRat(1)
I_UNIT = GaussRat(0, 1)
MINUS_I = GaussRat(0, -1)


class Poly:
    """Multivariate polynomial over Gaussian rationals, sparse dict of monomials.

    ``nq`` is the spatial dimension; exponent tuples have length nq + 3 with
    lambda, omega, hbar occupying the last three slots.
    """

    __slots__ = ("nq", "terms")

    def __init__(self, nq, terms=None):
        self.nq = nq
        self.terms = terms if terms is not None else {}

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero(nq):
        return Poly(nq)

    @staticmethod
    def constant(nq, c):
        c = c if isinstance(c, GaussRat) else GaussRat(c)
        if not c:
            return Poly(nq)
        return Poly(nq, {(0,) * (nq + 3): c})

    @staticmethod
    def monomial(nq, exps, c=1):
        c = c if isinstance(c, GaussRat) else GaussRat(c)
        if not c:
            return Poly(nq)
        return Poly(nq, {tuple(exps): c})

    @staticmethod
    def variable(nq, idx, power=1):
        e = [0] * (nq + 3)
        e[idx] = power
        return Poly.monomial(nq, e)

    # symbolic variable indices
    @staticmethod
    def idx_lambda(nq):
        return nq

    @staticmethod
    def idx_omega(nq):
        return nq + 1

    @staticmethod
    def idx_hbar(nq):
        return nq + 2

    # -- queries -------------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        if not self.terms:
            return True
        zero_exp = (0,) * (self.nq + 3)
        return len(self.terms) == 1 and zero_exp in self.terms

    def constant_value(self):
        if not self.terms:
            return GaussRat(0)
        return self.terms[(0,) * (self.nq + 3)]

    def __eq__(self, other):
        return isinstance(other, Poly) and self.nq == other.nq and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    # -- arithmetic ----------------------------------------------------------

    def __neg__(self):
        return Poly(self.nq, {e: -c for e, c in self.terms.items()})

    def __add__(self, other):
        if isinstance(other, (int, Fraction, GaussRat)):
            other = Poly.constant(self.nq, other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            s = c if s is None else s + c
            if s:
                out[e] = s
            elif e in out:
                del out[e]
        return Poly(self.nq, out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, GaussRat)):
            other = Poly.constant(self.nq, other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussRat)):
            c = other if isinstance(other, GaussRat) else GaussRat(other)
            if not c:
                return Poly(self.nq)
            return Poly(self.nq, {e: v * c for e, v in self.terms.items()})
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e)
                s = c1 * c2 if s is None else s + c1 * c2
                if s:
                    out[e] = s
                elif e in out:
                    del out[e]
        return Poly(self.nq, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative polynomial power")
        out = Poly.constant(self.nq, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def diff(self, idx):
        """Partial derivative with respect to variable ``idx``."""
        out = {}
        for e, c in self.terms.items():
            k = e[idx]
            if k == 0:
                continue
            e2 = list(e)
            e2[idx] = k - 1
            out[tuple(e2)] = c * k
        return Poly(self.nq, out)

    def conjugate(self):
        """Complex conjugation of numeric coefficients (all variables real)."""
        return Poly(self.nq, {e: c.conjugate() for e, c in self.terms.items()})

    def substitute_zero(self, idx):
        """Set variable ``idx`` to zero (keep only exponent-0 terms in it)."""
        return Poly(self.nq, {e: c for e, c in self.terms.items() if e[idx] == 0})

    def degree_in(self, idx):
        return max((e[idx] for e in self.terms), default=0)

    def eval(self, values):
        """Numeric evaluation; ``values`` is a sequence of nq+3 numbers."""
        total = 0j
        for e, c in self.terms.items():
            v = complex(c.re) + 1j * complex(c.im)
            for k, x in zip(e, values):
                if k:
                    v *= x ** k
            total += v
        return total

    # -- printing ------------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        names = [f"q{i+1}" for i in range(self.nq)] + ["lambda", "omega", "hbar"]
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            factors = [f"{n}^{k}" if k > 1 else n for n, k in zip(names, e) if k]
            coef = str(c)
            if factors and coef == "1":
                parts.append("*".join(factors))
            elif factors and coef == "-1":
                parts.append("-" + "*".join(factors))
            else:
                parts.append("*".join([coef] + factors))
        text = " + ".join(parts)
        return text.replace("+ -", "- ")

    __repr__ = __str__


def d_poly(nq):
    """The conformal factor D = 1 + lambda*(q1^2 + ... + qN^2)."""
    il = Poly.idx_lambda(nq)
    out = Poly.constant(nq, 1)
    for i in range(nq):
        e = [0] * (nq + 3)
        e[i] = 2
        e[il] = 1
        out = out + Poly.monomial(nq, e)
    return out


def q_squared(nq):
    """q1^2 + ... + qN^2 (no lambda factor)."""
    out = Poly.zero(nq)
    for i in range(nq):
        e = [0] * (nq + 3)
        e[i] = 2
        out = out + Poly.monomial(nq, e)
    return out


def divide_by_d(p):
    """Exact quotient p / D, or None when D does not divide p.

    Views p as a polynomial in lambda with coefficients in the remaining
    variables; since D = 1 + lambda*S with S = q^2, the quotient coefficients
    satisfy b_0 = c_0, b_k = c_k - b_{k-1}*S, closing only when the top
    lambda-coefficient matches.
    """
    if p.is_zero():
        return Poly(p.nq)
    il = Poly.idx_lambda(p.nq)
    kmax = p.degree_in(il)
    if kmax == 0:
        return None
    # split into lambda-degree slices (with the lambda exponent removed)
    slices = [dict() for _ in range(kmax + 1)]
    for e, c in p.terms.items():
        k = e[il]
        e2 = list(e)
        e2[il] = 0
        slices[k][tuple(e2)] = c
    c_parts = [Poly(p.nq, s) for s in slices]
    s_poly = q_squared(p.nq)
    b_parts = [c_parts[0]]
    for k in range(1, kmax):
        b_parts.append(c_parts[k] - b_parts[k - 1] * s_poly)
    if not (c_parts[kmax] - b_parts[kmax - 1] * s_poly).is_zero():
        return None
    # reassemble quotient with lambda exponents reattached
    out = {}
    for k, part in enumerate(b_parts):
        for e, c in part.terms.items():
            e2 = list(e)
            e2[il] = k
            out[tuple(e2)] = c
    return Poly(p.nq, out)


class Coefficient:
    """Rational function numerator / D^dpow in canonical form.

    Canonical: zero is (0, 0); a nonzero numerator with dpow > 0 is not
    divisible by D.  D is irreducible, hence prime, so products of canonical
    coefficients with positive dpow stay canonical.
    """

    __slots__ = ("num", "dpow")

    def __init__(self, num, dpow=0, _canonical=False):
        if num.is_zero():
            self.num, self.dpow = num, 0
            return
        if not _canonical:
            while dpow > 0:
                q = divide_by_d(num)
                if q is None:
                    break
                num, dpow = q, dpow - 1
        self.num = num
        self.dpow = dpow

    @staticmethod
    def zero(nq):
        return Coefficient(Poly.zero(nq), 0, _canonical=True)

    @staticmethod
    def constant(nq, c):
        return Coefficient(Poly.constant(nq, c), 0, _canonical=True)

    def is_zero(self):
        return self.num.is_zero()

    def __eq__(self, other):
        return (
            isinstance(other, Coefficient)
            and self.dpow == other.dpow
            and self.num == other.num
        )

    def __bool__(self):
        return not self.num.is_zero()

    def __neg__(self):
        return Coefficient(-self.num, self.dpow, _canonical=True)

    def __add__(self, other):
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        k = max(self.dpow, other.dpow)
        d = d_poly(self.num.nq)
        n1 = self.num * d ** (k - self.dpow) if k > self.dpow else self.num
        n2 = other.num * d ** (k - other.dpow) if k > other.dpow else other.num
        return Coefficient(n1 + n2, k)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussRat)):
            return Coefficient(self.num * other, self.dpow, _canonical=True)
        if isinstance(other, Poly):
            other = Coefficient(other)
        k = self.dpow + other.dpow
        # canonical unless a dpow-0 factor smuggles in D factors
        need_reduce = k > 0 and (self.dpow == 0 or other.dpow == 0)
        return Coefficient(self.num * other.num, k, _canonical=not need_reduce)

    __rmul__ = __mul__

    def diff_q(self, i):
        """d/dq_i of num/D^k, staying inside the D-power ring."""
        nq = self.num.nq
        dn = self.num.diff(i)
        if self.dpow == 0:
            return Coefficient(dn, 0, _canonical=True)
        # (dn*D - 2*k*lambda*q_i*num) / D^(k+1)
        e = [0] * (nq + 3)
        e[i] = 1
        e[Poly.idx_lambda(nq)] = 1
        lam_qi = Poly.monomial(nq, e, 2 * self.dpow)
        return Coefficient(dn * d_poly(nq) - lam_qi * self.num, self.dpow + 1)

    def conjugate(self):
        return Coefficient(self.num.conjugate(), self.dpow, _canonical=True)

    def substitute_lambda_zero(self):
        """Set lambda = 0 (D becomes 1, the denominator disappears)."""
        nq = self.num.nq
        return Coefficient(self.num.substitute_zero(Poly.idx_lambda(nq)), 0, _canonical=True)

    def eval(self, values):
        d = d_poly(self.num.nq).eval(values)
        return self.num.eval(values) / d ** self.dpow

    def __str__(self):
        if self.dpow == 0:
            return f"({self.num})"
        suffix = "/D" if self.dpow == 1 else f"/D^{self.dpow}"
        return f"({self.num}){suffix}"

    __repr__ = __str__
