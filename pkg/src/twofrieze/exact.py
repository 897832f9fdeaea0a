"""Multivariate Laurent polynomials with arbitrary-precision integer coefficients.

Values are immutable once constructed; every operation returns a fresh
polynomial.  Terms are stored as a map from exponent vector (a tuple of
ints, negatives allowed) to a nonzero coefficient, so two polynomials are
equal exactly when their term maps are equal.

The canonical text form writes integer coefficients, variables ``x1``,
``x2``, ..., and ``^`` for powers (including negative ones).  A polynomial
whose terms share a nontrivial componentwise-minimal exponent vector is
printed with that monomial factored out, e.g. ``(x2+1)*x1^-1``.  Terms are
ordered by graded lexicographic order, largest first, so printing and
hashing are deterministic.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import NotDivisible


def _grlex_key(exps):
    return (sum(exps), exps)


class LaurentPoly:
    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        clean = {}
        if terms:
            for exps, coeff in terms.items():
                if len(exps) != nvars:
                    raise ValueError(f"exponent vector {exps} has wrong length")
                if coeff:
                    clean[tuple(exps)] = coeff
        self.terms = clean
        self._hash = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "LaurentPoly":
        return cls(nvars)

    @classmethod
    def const(cls, nvars: int, value: int) -> "LaurentPoly":
        return cls(nvars, {(0,) * nvars: int(value)})

    @classmethod
    def variable(cls, index: int, nvars: int) -> "LaurentPoly":
        """The variable ``x<index>`` (1-based)."""
        if not 1 <= index <= nvars:
            raise ValueError(f"variable index {index} out of range 1..{nvars}")
        exps = tuple(1 if i == index - 1 else 0 for i in range(nvars))
        return cls(nvars, {exps: 1})

    @classmethod
    def monomial(cls, nvars: int, exps, coeff: int = 1) -> "LaurentPoly":
        return cls(nvars, {tuple(exps): coeff})

    # -- basic queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {(0,) * self.nvars: 1}

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def sorted_terms(self):
        """Terms in graded-lex order, largest first."""
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def min_exponents(self):
        """Componentwise minimum exponent over all terms (zero vector if empty)."""
        if not self.terms:
            return (0,) * self.nvars
        its = iter(self.terms)
        mins = list(next(its))
        for exps in its:
            for i, e in enumerate(exps):
                if e < mins[i]:
                    mins[i] = e
        return tuple(mins)

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            if other.nvars != self.nvars:
                raise ValueError("mixed variable counts")
            return other
        if isinstance(other, int):
            return LaurentPoly.const(self.nvars, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            c = terms.get(exps, 0) + coeff
            if c:
                terms[exps] = c
            else:
                terms.pop(exps, None)
        return LaurentPoly(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                c = terms.get(key, 0) + c1 * c2
                if c:
                    terms[key] = c
                else:
                    del terms[key]
        return LaurentPoly(self.nvars, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if len(self.terms) != 1:
                raise ValueError("negative power of a non-monomial")
            (exps, coeff), = self.terms.items()
            if coeff not in (1, -1):
                raise ValueError("negative power needs a unit coefficient")
            inv_coeff = coeff if n % 2 else 1
            return LaurentPoly(self.nvars, {tuple(e * n for e in exps): inv_coeff})
        result = LaurentPoly.const(self.nvars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, exps) -> "LaurentPoly":
        """Multiply by the monomial x^exps."""
        return LaurentPoly(
            self.nvars,
            {tuple(a + b for a, b in zip(e, exps)): c for e, c in self.terms.items()},
        )

    def div_exact(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact division in the Laurent ring; raises NotDivisible otherwise.

        Both operands are normalized to honest polynomials by factoring out
        their componentwise-minimal exponent vectors, then divided by
        repeated cancellation of graded-lex leading terms.  Any remainder is
        an error, never a truncation.
        """
        other = self._coerce(other)
        if other is None or other.is_zero():
            raise ValueError("division by zero polynomial")
        if self.is_zero():
            return self
        smin = self.min_exponents()
        omin = other.min_exponents()
        rem = {tuple(a - b for a, b in zip(e, smin)): c for e, c in self.terms.items()}
        div = {tuple(a - b for a, b in zip(e, omin)): c for e, c in other.terms.items()}
        dlead = max(div, key=_grlex_key)
        dcoeff = div[dlead]
        quot = {}
        while rem:
            rlead = max(rem, key=_grlex_key)
            qexps = tuple(a - b for a, b in zip(rlead, dlead))
            qcoeff, r = divmod(rem[rlead], dcoeff)
            if r or any(e < 0 for e in qexps):
                raise NotDivisible(f"{self} is not divisible by {other}")
            quot[qexps] = qcoeff
            for e, c in div.items():
                key = tuple(a + b for a, b in zip(e, qexps))
                nc = rem.get(key, 0) - c * qcoeff
                if nc:
                    rem[key] = nc
                else:
                    rem.pop(key, None)
        offset = tuple(a - b for a, b in zip(smin, omin))
        return LaurentPoly(
            self.nvars,
            {tuple(a + b for a, b in zip(e, offset)): c for e, c in quot.items()},
        )

    def evaluate(self, point) -> Fraction:
        """Exact substitution at a point of nonzero rationals."""
        point = [Fraction(p) for p in point]
        if len(point) != self.nvars:
            raise ValueError("point has wrong length")
        total = Fraction(0)
        for exps, coeff in self.terms.items():
            term = Fraction(coeff)
            for value, e in zip(point, exps):
                if e:
                    term *= value ** e
            total += term
        return total

    # -- text form -----------------------------------------------------------

    def _units_str(self, exps) -> str:
        parts = []
        for i, e in enumerate(exps):
            if e == 0:
                continue
            parts.append(f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}")
        return "*".join(parts)

    def _term_str(self, exps, coeff) -> str:
        units = self._units_str(exps)
        if not units:
            return str(coeff)
        if coeff == 1:
            return units
        if coeff == -1:
            return "-" + units
        return f"{coeff}*{units}"

    def _sum_str(self, terms) -> str:
        out = []
        for i, (exps, coeff) in enumerate(terms):
            text = self._term_str(exps, coeff)
            if i == 0:
                out.append(text)
            elif text.startswith("-"):
                out.append("-" + text[1:])
            else:
                out.append("+" + text)
        return "".join(out)

    def __str__(self):
        if not self.terms:
            return "0"
        if len(self.terms) == 1:
            (exps, coeff), = self.terms.items()
            return self._term_str(exps, coeff)
        mins = self.min_exponents()
        if not any(mins):
            return self._sum_str(self.sorted_terms())
        body = self.shift(tuple(-e for e in mins))
        return f"({body._sum_str(body.sorted_terms())})*{self._units_str(mins)}"

    def __repr__(self):
        return f"LaurentPoly({self.nvars}, {str(self)!r})"


_TOKEN = re.compile(r"\s*(?:(x\d+)|(\d+)|([()+\-*^]))")


def parse_poly(text: str, nvars: int) -> LaurentPoly:
    """Parse the canonical text form back into a polynomial.

    Grammar: sums and differences of products of factors; a factor is an
    integer, a variable ``x<k>``, or a parenthesized subexpression,
    optionally raised to an integer power with ``^`` (negative powers are
    valid on monomial bases only).
    """
    tokens = []
    pos = 0
    while pos < len(text):
        mm = _TOKEN.match(text, pos)
        if not mm:
            if text[pos:].strip():
                raise ValueError(f"bad character in polynomial at {text[pos:]!r}")
            break
        tokens.append(mm.group(1) or mm.group(2) or mm.group(3))
        pos = mm.end()
    tokens.append(None)
    idx = 0

    def peek():
        return tokens[idx]

    def take(expected=None):
        nonlocal idx
        tok = tokens[idx]
        if expected is not None and tok != expected:
            raise ValueError(f"expected {expected!r}, found {tok!r}")
        idx += 1
        return tok

    def parse_int() -> int:
        sign = 1
        while peek() == "-":
            take()
            sign = -sign
        tok = take()
        if tok is None or not tok.isdigit():
            raise ValueError("expected an integer")
        return sign * int(tok)

    def parse_factor() -> LaurentPoly:
        tok = peek()
        if tok == "(":
            take()
            base = parse_expr()
            take(")")
        elif tok is not None and tok.startswith("x"):
            take()
            base = LaurentPoly.variable(int(tok[1:]), nvars)
        elif tok is not None and tok.isdigit():
            take()
            base = LaurentPoly.const(nvars, int(tok))
        else:
            raise ValueError(f"unexpected token {tok!r}")
        if peek() == "^":
            take()
            base = base ** parse_int()
        return base

    def parse_term() -> LaurentPoly:
        result = parse_factor()
        while peek() == "*":
            take()
            result = result * parse_factor()
        return result

    def parse_expr() -> LaurentPoly:
        negate = False
        while peek() == "-":
            take()
            negate = not negate
        result = parse_term()
        if negate:
            result = -result
        while peek() in ("+", "-"):
            op = take()
            term = parse_term()
            result = result - term if op == "-" else result + term
        return result

    result = parse_expr()
    if peek() is not None:
        raise ValueError(f"trailing input near token {peek()!r}")
    return result
