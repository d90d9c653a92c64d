"""Integer Laurent polynomials in one variable t.

The coefficient arithmetic lives in a swappable kernel: the compiled
module surgeon._poly_speed when it was built, surgeon._poly_pure
otherwise.  Setting the environment variable SURGEON_PURE=1 before
import forces the pure kernel (useful for benchmarking and debugging).
"""

import os

if os.environ.get("SURGEON_PURE"):
    from . import _poly_pure as _impl
else:
    try:
        from . import _poly_speed as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _poly_pure as _impl

BACKEND = _impl.BACKEND


class LaurentPoly:
    """An exact Laurent polynomial sum(c_e * t**e) with integer c_e.

    Instances are immutable.  Construct from a dict mapping exponent to
    coefficient, or use the helpers ``zero``, ``one``, ``t`` and
    ``monomial``.

    >>> p = LaurentPoly({1: 1, 0: -1, -1: 1})
    >>> str(p)
    't - 1 + t^-1'
    >>> p(1), p(-1)
    (1, -3)
    """

    __slots__ = ("_rep",)

    def __init__(self, coeffs=None, _rep=None):
        if _rep is not None:
            self._rep = _rep
            return
        coeffs = coeffs or {}
        items = [(e, c) for e, c in coeffs.items() if c != 0]
        if not items:
            self._rep = (0, [])
            return
        lo = min(e for e, _ in items)
        hi = max(e for e, _ in items)
        arr = [0] * (hi - lo + 1)
        for e, c in items:
            arr[e - lo] += c
        self._rep = _impl.pnorm(lo, arr)

    @classmethod
    def _wrap(cls, rep):
        return cls(_rep=rep)

    @classmethod
    def zero(cls):
        return cls._wrap((0, []))

    @classmethod
    def one(cls):
        return cls._wrap((0, [1]))

    @classmethod
    def t(cls):
        return cls._wrap((1, [1]))

    @classmethod
    def monomial(cls, c, e):
        return cls._wrap(_impl.pmono(c, e))

    @classmethod
    def const(cls, c):
        return cls._wrap(_impl.pmono(c, 0))

    # -- queries ------------------------------------------------------

    def is_zero(self):
        return not self._rep[1]

    def coeffs(self):
        """Exponent-to-coefficient dict (no zero entries)."""
        off, arr = self._rep
        return {off + i: c for i, c in enumerate(arr) if c != 0}

    @property
    def min_exp(self):
        if self.is_zero():
            return 0
        return self._rep[0]

    @property
    def max_exp(self):
        off, arr = self._rep
        if not arr:
            return 0
        return off + len(arr) - 1

    def coefficient(self, e):
        off, arr = self._rep
        if off <= e < off + len(arr):
            return arr[e - off]
        return 0

    def is_unit(self):
        """True when the polynomial is +-t**k."""
        arr = self._rep[1]
        return len(arr) == 1 and arr[0] in (1, -1)

    def is_palindromic(self):
        """Coefficient list equal to its reverse."""
        arr = self._rep[1]
        return arr == arr[::-1]

    # -- arithmetic ---------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._wrap(_impl.padd(self._rep, o._rep))

    __radd__ = __add__

    def __neg__(self):
        return self._wrap(_impl.pneg(self._rep))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._wrap(_impl.psub(self._rep, o._rep))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._wrap(_impl.psub(o._rep, self._rep))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._wrap(_impl.pmul(self._rep, o._rep))

    __rmul__ = __mul__

    def divexact(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            raise TypeError("cannot divide by %r" % (other,))
        return self._wrap(_impl.pdivexact(self._rep, o._rep))

    def shift(self, k):
        """Multiply by t**k."""
        off, arr = self._rep
        if not arr:
            return self
        return self._wrap((off + k, arr))

    def __call__(self, x):
        """Evaluate at a nonzero integer x, exactly.

        Negative exponents make the value rational in general; a
        Fraction is returned in that case, an int when the value is
        integral.
        """
        off, arr = self._rep
        if not arr:
            return 0
        acc = 0
        for c in reversed(arr):
            acc = acc * x + c
        if off >= 0:
            return acc * x ** off
        den = x ** (-off)
        if acc % den == 0:
            return acc // den
        from fractions import Fraction

        return Fraction(acc, den)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self._rep[0] == o._rep[0] and self._rep[1] == o._rep[1]

    def __hash__(self):
        return hash((self._rep[0], tuple(self._rep[1])))

    def unit_equivalent(self, other):
        """True when self = +-t**k * other for some k."""
        a, b = self._rep, other._rep
        if not a[1] or not b[1]:
            return a[1] == b[1]
        return a[1] == b[1] or a[1] == [-c for c in b[1]]

    # -- presentation -------------------------------------------------

    def __str__(self):
        items = sorted(self.coeffs().items(), reverse=True)
        if not items:
            return "0"
        parts = []
        for e, c in items:
            if e == 0:
                term = str(abs(c))
            else:
                tpow = "t" if e == 1 else "t^%d" % e
                term = tpow if abs(c) == 1 else "%d*%s" % (abs(c), tpow)
            if not parts:
                parts.append(("-" if c < 0 else "") + term)
            else:
                parts.append(("- " if c < 0 else "+ ") + term)
        return " ".join(parts)

    def __repr__(self):
        return "LaurentPoly(%r)" % (self.coeffs(),)

    def to_json(self):
        return {str(e): c for e, c in self.coeffs().items()}

    @classmethod
    def from_json(cls, obj):
        return cls({int(e): int(c) for e, c in obj.items()})


def det(rows):
    """Determinant of a square matrix of LaurentPoly entries."""
    n = len(rows)
    for r in rows:
        if len(r) != n:
            raise ValueError("determinant needs a square matrix")
    reps = [[e._rep for e in r] for r in rows]
    return LaurentPoly._wrap(_impl.bareiss_det(reps))
