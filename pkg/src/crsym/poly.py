"""Exact sparse polynomials with Gaussian-rational coefficients.

Three concrete kinds share one sparse representation (exponent tuple -> CRat):

* ``Poly``      -- polynomial in z1, z2, zbar1, zbar2, u; keys ``(a1, a2, b1, b2, k)``
* ``RealPoly``  -- a ``Poly`` that is Hermitian-symmetric, i.e. real valued
* ``HoloPoly``  -- holomorphic polynomial in z1, z2, w; keys ``(a1, a2, m)``

Ambient polynomials in more variables (used by the quadric embeddings) are
plain ``SparsePoly`` instances with longer keys.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Iterator, NamedTuple

from crsym.errors import HermitianViolation

Rat = Fraction


class CRat:
    """Gaussian rational ``re + i*im``."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if type(re) is Fraction else Fraction(re)
        self.im = im if type(im) is Fraction else Fraction(im)

    @classmethod
    def coerce(cls, x) -> "CRat":
        if type(x) is cls:
            return x
        if isinstance(x, (int, Rational)):
            return cls(Fraction(x), Fraction(0))
        if isinstance(x, str):
            return cls.parse(x)
        raise TypeError(f"cannot interpret {x!r} as a Gaussian rational")

    @classmethod
    def parse(cls, text: str) -> "CRat":
        from crsym.parser import parse_scalar

        return parse_scalar(text)

    def conj(self) -> "CRat":
        return CRat(self.re, -self.im)

    def is_real(self) -> bool:
        return not self.im

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if type(other) is CRat:
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Rational)):
            return self.re == other and not self.im
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __add__(self, other):
        if type(other) is not CRat:
            if isinstance(other, (int, Rational)):
                return CRat(self.re + other, self.im)
            return NotImplemented
        return CRat(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        if type(other) is not CRat:
            if isinstance(other, (int, Rational)):
                return CRat(self.re - other, self.im)
            return NotImplemented
        return CRat(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return CRat(-self.re, -self.im)

    def __mul__(self, other):
        if type(other) is not CRat:
            if isinstance(other, (int, Rational)):
                return CRat(self.re * other, self.im * other)
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b:
            return CRat(a * c, a * d)
        if not d:
            return CRat(a * c, b * c)
        return CRat(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = CRat.coerce(other)
        n = other.re * other.re + other.im * other.im
        if not n:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return self * CRat(other.re / n, -other.im / n)

    def __rtruediv__(self, other):
        return CRat.coerce(other) / self

    def __pow__(self, n: int):
        out = CRat(1)
        for _ in range(n):
            out = out * self
        return out

    def __repr__(self):
        return f"CRat({self})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}*i"
        sign = "+" if self.im > 0 else "-"
        return f"({self.re}{sign}{abs(self.im)}*i)"


ZERO = CRat(0)
ONE = CRat(1)
I = CRat(0, 1)


class RMonomial(NamedTuple):
    """Exponents of z1^a1 z2^a2 zbar1^b1 zbar2^b2 u^k."""

    a1: int
    a2: int
    b1: int
    b2: int
    k: int = 0

    @property
    def a(self):
        return (self.a1, self.a2)

    @property
    def b(self):
        return (self.b1, self.b2)


class HMonomial(NamedTuple):
    """Exponents of z1^a1 z2^a2 w^m."""

    a1: int
    a2: int
    m: int = 0

    @property
    def a(self):
        return (self.a1, self.a2)


def _add_keys(p, q):
    return tuple(x + y for x, y in zip(p, q))


class SparsePoly:
    """Immutable sparse polynomial; subclasses fix the number of variables."""

    __slots__ = ("_t", "_hash")
    nvars = None
    var_names: tuple = ()

    def __init__(self, terms=None):
        t = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for key, c in items:
                key = tuple(int(e) for e in key)
                if self.nvars is not None and len(key) != self.nvars:
                    raise ValueError(f"monomial {key} has wrong arity for {type(self).__name__}")
                if any(e < 0 for e in key):
                    raise ValueError(f"negative exponent in {key}")
                c = CRat.coerce(c)
                if key in t:
                    c = t[key] + c
                if c:
                    t[key] = c
                else:
                    t.pop(key, None)
        self._t = t
        self._hash = None
        self._validate()

    def _validate(self):
        pass

    @classmethod
    def _raw(cls, t):
        obj = object.__new__(cls)
        obj._t = t
        obj._hash = None
        return obj

    @classmethod
    def zero(cls):
        return cls._raw({})

    @classmethod
    def constant(cls, c, nvars=None):
        c = CRat.coerce(c)
        n = cls.nvars if cls.nvars is not None else nvars
        return cls._raw({(0,) * n: c} if c else {})

    @classmethod
    def monomial(cls, key, c=1):
        c = CRat.coerce(c)
        return cls._raw({tuple(key): c} if c else {})

    # -- container protocol -------------------------------------------------
    @property
    def terms(self) -> dict:
        return dict(self._t)

    def items(self) -> list:
        """Terms in canonical (lexicographic exponent) order."""
        return sorted(self._t.items())

    def __iter__(self) -> Iterator:
        return iter(sorted(self._t))

    def __len__(self):
        return len(self._t)

    def __bool__(self):
        return bool(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def coeff(self, key) -> CRat:
        return self._t.get(tuple(key), ZERO)

    def __eq__(self, other):
        if not isinstance(other, SparsePoly):
            if isinstance(other, (int, Rational)) and other == 0:
                return not self._t
            return NotImplemented
        return self._t == other._t

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    def degree(self) -> int:
        return max((sum(k) for k in self._t), default=-1)

    # -- arithmetic -----------------------------------------------------------
    def _binary_cls(self, other):
        return type(self)

    def _scale_cls(self, c):
        return type(self)

    def __add__(self, other):
        if not isinstance(other, SparsePoly):
            if isinstance(other, (int, Rational, CRat)):
                other = type(self).constant(other, nvars=self._arity())
            else:
                return NotImplemented
        t = dict(self._t)
        for k, c in other._t.items():
            s = t[k] + c if k in t else c
            if s:
                t[k] = s
            else:
                del t[k]
        return self._binary_cls(other)._raw(t)

    __radd__ = __add__

    def __neg__(self):
        return type(self)._raw({k: -c for k, c in self._t.items()})

    def __sub__(self, other):
        if not isinstance(other, SparsePoly):
            if isinstance(other, (int, Rational, CRat)):
                return self + (-CRat.coerce(other))
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, SparsePoly):
            if isinstance(other, (int, Rational, CRat)):
                return self.scale(other)
            return NotImplemented
        t = {}
        for k1, c1 in self._t.items():
            for k2, c2 in other._t.items():
                k = _add_keys(k1, k2)
                c = c1 * c2
                if k in t:
                    c = t[k] + c
                    if c:
                        t[k] = c
                    else:
                        del t[k]
                else:
                    t[k] = c
        return self._binary_cls(other)._raw(t)

    def __rmul__(self, other):
        if isinstance(other, (int, Rational, CRat)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = type(self).constant(1, nvars=self._arity())
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c):
        c = CRat.coerce(c)
        if not c:
            return self._scale_cls(c)._raw({})
        return self._scale_cls(c)._raw({k: v * c for k, v in self._t.items()})

    def shift(self, key, c=ONE):
        """Multiply by the monomial ``c * x^key``."""
        c = CRat.coerce(c)
        cls = self._binary_cls(None)
        if not c:
            return cls._raw({})
        if c == ONE:
            return cls._raw({_add_keys(k, key): v for k, v in self._t.items()})
        return cls._raw({_add_keys(k, key): v * c for k, v in self._t.items()})

    def deriv(self, index: int):
        """Formal partial derivative in the variable at position ``index``."""
        t = {}
        for k, c in self._t.items():
            e = k[index]
            if e:
                nk = k[:index] + (e - 1,) + k[index + 1 :]
                t[nk] = c * e
        return self._binary_cls(None)._raw(t)

    def _arity(self):
        if self.nvars is not None:
            return self.nvars
        for k in self._t:
            return len(k)
        return 0

    def __repr__(self):
        return f"{type(self).__name__}({self.items()!r})"


class Poly(SparsePoly):
    """Polynomial in (z1, z2, zbar1, zbar2, u); not necessarily real valued."""

    __slots__ = ()
    nvars = 5
    var_names = ("z1", "z2", "zb1", "zb2", "u")

    def _binary_cls(self, other):
        if type(self) is RealPoly and type(other) is RealPoly:
            return RealPoly
        return Poly

    def _scale_cls(self, c):
        if type(self) is RealPoly and CRat.coerce(c).is_real():
            return RealPoly
        return Poly

    def conj(self) -> "Poly":
        """Complex conjugate: swap holomorphic and antiholomorphic exponents."""
        return type(self)._raw(
            {(k[2], k[3], k[0], k[1], k[4]): c.conj() for k, c in self._t.items()}
        )

    def real_part(self) -> "RealPoly":
        both = Poly._raw(self._t) + Poly._raw(self.conj()._t)
        return RealPoly._raw(both.scale(Fraction(1, 2))._t)

    def imag_part(self) -> "RealPoly":
        diff = Poly._raw(self._t) - Poly._raw(self.conj()._t)
        return RealPoly._raw(diff.scale(CRat(0, Fraction(-1, 2)))._t)

    def is_u_free(self) -> bool:
        return all(k[4] == 0 for k in self._t)

    def as_real(self) -> "RealPoly":
        """Reinterpret as a RealPoly, validating Hermitian symmetry."""
        return RealPoly._raw(dict(self._t))._checked()

    def evaluate(self, z1, z2, u=0):
        """Evaluate at a point, with zbar taken as the conjugate of z."""
        z1, z2, u = CRat.coerce(z1), CRat.coerce(z2), CRat.coerce(u)
        vals = (z1, z2, z1.conj(), z2.conj(), u)
        total = ZERO
        for k, c in self._t.items():
            term = c
            for v, e in zip(vals, k):
                if e:
                    term = term * v**e
            total = total + term
        return total


class RealPoly(Poly):
    """Hermitian-symmetric polynomial; construction raises on asymmetry."""

    __slots__ = ()

    def _validate(self):
        self._checked()

    def _checked(self):
        if not conj_pair_check(self):
            raise HermitianViolation("polynomial is not real valued")
        return self


class HoloPoly(SparsePoly):
    """Holomorphic polynomial in (z1, z2, w)."""

    __slots__ = ()
    nvars = 3
    var_names = ("z1", "z2", "w")

    def is_w_free(self) -> bool:
        return all(k[2] == 0 for k in self._t)

    def evaluate(self, z1, z2, w=0):
        vals = (CRat.coerce(z1), CRat.coerce(z2), CRat.coerce(w))
        total = ZERO
        for k, c in self._t.items():
            term = c
            for v, e in zip(vals, k):
                if e:
                    term = term * v**e
            total = total + term
        return total


# --------------------------------------------------------------------------
# convenience constructors
# --------------------------------------------------------------------------

def z(j: int) -> HoloPoly:
    key = [0, 0, 0]
    key[j - 1] = 1
    return HoloPoly.monomial(key)


def w() -> HoloPoly:
    return HoloPoly.monomial((0, 0, 1))


def holo_to_poly(h: HoloPoly) -> Poly:
    """View a w-free holomorphic polynomial as a function of (z, zbar)."""
    t = {}
    for (a1, a2, m), c in h._t.items():
        if m:
            raise ValueError("holo_to_poly needs a w-free polynomial")
        t[(a1, a2, 0, 0, 0)] = c
    return Poly._raw(t)


def antiholo_to_poly(h: HoloPoly) -> Poly:
    """The conjugate of a w-free holomorphic polynomial, as a function of zbar."""
    return holo_to_poly(h).conj()


def real_monomial_poly(a, b, c=1) -> Poly:
    return Poly.monomial((a[0], a[1], b[0], b[1], 0), c)


def hermitian(a, b, c) -> RealPoly:
    """``c z^a zbar^b + conj(c) z^b zbar^a`` (or ``c |z^a|^2`` with real c when a == b)."""
    c = CRat.coerce(c)
    if tuple(a) == tuple(b):
        if not c.is_real():
            raise HermitianViolation("diagonal coefficient must be real")
        return RealPoly._raw({(a[0], a[1], b[0], b[1], 0): c} if c else {})
    p = real_monomial_poly(a, b, c)
    return (p + p.conj()).as_real()


# --------------------------------------------------------------------------
# module-level operations
# --------------------------------------------------------------------------

def conj_pair_check(p: Poly) -> bool:
    """True iff the coefficient at (a, b, k) is the conjugate of the one at (b, a, k)."""
    t = p._t
    for (a1, a2, b1, b2, k), c in t.items():
        partner = t.get((b1, b2, a1, a2, k))
        if partner is None:
            return False
        if partner.re != c.re or partner.im != -c.im:
            return False
    return True


def _require_real_if_any(p, q):
    if isinstance(p, RealPoly) or isinstance(q, RealPoly):
        for x in (p, q):
            if isinstance(x, Poly) and not conj_pair_check(x):
                raise HermitianViolation("operand of a real-polynomial operation is not Hermitian")
        return True
    return False


def add(p, q):
    real = _require_real_if_any(p, q)
    out = p + q
    return RealPoly._raw(out._t) if real else out


def mul(p, q):
    real = _require_real_if_any(p, q)
    out = p * q
    return RealPoly._raw(out._t) if real else out


def scale(p, c):
    return p.scale(c)


def negate(p):
    return -p


_WIRTINGER = {"z1": 0, "z2": 1, "zb1": 2, "zb2": 3, "zbar1": 2, "zbar2": 3, "u": 4}


def wirtinger_deriv(p: Poly, var: str) -> Poly:
    """Formal derivative treating z and zbar as independent variables."""
    try:
        idx = _WIRTINGER[var]
    except KeyError:
        raise ValueError(f"unknown variable {var!r}") from None
    return Poly._raw(p.deriv(idx)._t)


def pluriharmonic_split(p: RealPoly) -> tuple[RealPoly, HoloPoly]:
    """Split ``p = core + 2 Re h`` with core free of pure-z and pure-zbar terms.

    The constant term is put into ``h``. The substitution ``w* = w - 2i h``
    turns ``Im w = p`` into ``Im w* = core``.
    """
    if not p.is_u_free():
        raise ValueError("pluriharmonic_split needs a u-free polynomial")
    core, h = {}, {}
    for (a1, a2, b1, b2, k), c in p._t.items():
        if (a1 or a2) and (b1 or b2):
            core[(a1, a2, b1, b2, k)] = c
        elif not (b1 or b2):
            # pure z (incl. the constant): c z^a = coefficient of h since 2Re h = h + conj h
            h[(a1, a2, 0)] = c if (a1 or a2) else c * Fraction(1, 2)
    return RealPoly._raw(core), HoloPoly._raw(h)


def has_pluriharmonic_terms(p: Poly) -> bool:
    return any(not (k[0] or k[1]) or not (k[2] or k[3]) for k in p._t)


@lru_cache(maxsize=128)
def _w_powers(P: Poly, n: int) -> tuple:
    base = Poly._raw({(0, 0, 0, 0, 1): ONE}) + Poly._raw(P.scale(I)._t)
    out = [Poly.constant(1)]
    for _ in range(n):
        out.append(out[-1] * base)
    return tuple(out)


def w_power(P: Poly, m: int) -> Poly:
    """``(u + i P)^m``, cached per model."""
    n = 8
    while n < m:
        n *= 2
    return _w_powers(P, n)[m]


def substitute_w(q: HoloPoly, P: Poly) -> Poly:
    """Replace w by ``u + i P(z, zbar)`` and expand exactly."""
    if not P.is_u_free():
        raise ValueError("substitute_w needs a u-free model")
    t: dict = {}
    for (a1, a2, m), c in q._t.items():
        for k, v in w_power(P, m)._t.items():
            nk = (k[0] + a1, k[1] + a2, k[2], k[3], k[4])
            s = t[nk] + v * c if nk in t else v * c
            if s:
                t[nk] = s
            else:
                del t[nk]
    return Poly._raw(t)


def swap_variables(p):
    """Exchange z1 and z2 (and their conjugates)."""
    if isinstance(p, HoloPoly):
        return HoloPoly._raw({(k[1], k[0], k[2]): c for k, c in p._t.items()})
    return type(p)._raw({(k[1], k[0], k[3], k[2], k[4]): c for k, c in p._t.items()})


def substitute_holomorphic(p: Poly, z1_image: HoloPoly, z2_image: HoloPoly) -> Poly:
    """Compose ``p(z, zbar)`` with a holomorphic change ``z -> (phi1(z), phi2(z))``."""
    if not p.is_u_free():
        raise ValueError("substitute_holomorphic needs a u-free polynomial")
    imgs = [holo_to_poly(z1_image), holo_to_poly(z2_image)]
    cimgs = [x.conj() for x in imgs]
    powers: dict = {}

    def pw(which, j, e):
        key = (which, j, e)
        if key not in powers:
            base = imgs[j] if which == 0 else cimgs[j]
            powers[key] = base**e
        return powers[key]

    out = Poly.zero()
    for (a1, a2, b1, b2, _), c in p._t.items():
        term = Poly.constant(c)
        for which, j, e in ((0, 0, a1), (0, 1, a2), (1, 0, b1), (1, 1, b2)):
            if e:
                term = term * pw(which, j, e)
        out = out + term
    return RealPoly._raw(out._t) if isinstance(p, RealPoly) and conj_pair_check(out) else out


def parse_model(text: str) -> RealPoly:
    from crsym.parser import parse_model as _parse

    return _parse(text)


def format_model(p: Poly) -> str:
    from crsym.parser import format_poly

    return format_poly(p)


def model_to_json(p: Poly) -> dict:
    """JSON model format; exact rational strings, never floats."""
    return {
        "terms": [
            {"a": [k[0], k[1]], "b": [k[2], k[3]], "re": str(c.re), "im": str(c.im)}
            | ({"k": k[4]} if k[4] else {})
            for k, c in p.items()
        ]
    }


def model_from_json(obj: dict) -> RealPoly:
    terms = {}
    for t in obj["terms"]:
        for field in ("re", "im"):
            if not isinstance(t.get(field, "0"), str):
                raise ValueError("coefficients must be exact rational strings")
        key = (t["a"][0], t["a"][1], t["b"][0], t["b"][1], t.get("k", 0))
        terms[key] = CRat(Fraction(t.get("re", "0")), Fraction(t.get("im", "0")))
    return RealPoly(terms)


def iter_support(p: Poly) -> Iterable:
    """Yield ``((a1, a2), (b1, b2))`` for every stored monomial in canonical order."""
    for k in p:
        yield (k[0], k[1]), (k[2], k[3])
