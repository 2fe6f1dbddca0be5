"""Exact scalars: finite sums of rational multiples of fourth roots of primes.

Every coefficient produced by the loop calculus lives in the ring generated
over the rationals by expressions  p^(1/4)  for primes p: vertex weights are
square roots of rational numbers and spin factors take one further square
root, so quarter-integer exponents suffice and nothing in the package ever
needs a deeper root.

A value is stored as a map  radical part -> rational coefficient  where the
radical part is a sorted tuple of (prime, exponent numerator) pairs and the
exponent denominator is fixed at 4.  Normal form: exponent numerators are
reduced to {1, 2, 3} with whole prime powers folded into the coefficient,
equal radical parts are merged, zero coefficients dropped.  Distinct reduced
monomials are linearly independent over the rationals, so equality of normal
forms decides equality of values and `x == y` is trustworthy.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Union

from sympy import factorint, isprime

from .errors import NotInvertibleError, NotRepresentableError, ValidationError

# Sorted ((prime, exponent numerator), ...) with numerators in 1..3.
RadicalKey = tuple[tuple[int, int], ...]

RationalLike = Union[int, Fraction]

_MONOMIAL_RE = re.compile(r"^(\d+)\^\((-?\d+)/4\)$")


def _factor_positive_fraction(q: Fraction) -> dict[int, int]:
    """Prime factorization of a positive rational, exponents in Z."""
    assert q > 0
    exps: dict[int, int] = dict(factorint(q.numerator))
    for p, e in factorint(q.denominator).items():
        exps[p] = exps.get(p, 0) - e
    return exps


def _reduce_monomial(coeff: Fraction, exps: Mapping[int, int]) -> tuple[RadicalKey, Fraction]:
    """Fold whole prime powers into the coefficient; exponents land in 1..3."""
    parts = []
    for p, e in exps.items():
        if e == 0:
            continue
        whole, rem = divmod(e, 4)
        if whole:
            coeff *= Fraction(p) ** whole
        if rem:
            parts.append((p, rem))
    return tuple(sorted(parts)), coeff


class RadicalScalar:
    """Immutable exact number of the form  sum_t q_t * prod_p p^(e/4)."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[RadicalKey, Fraction] | None = None):
        # Accepts already-reduced keys; merges and drops zeros.
        clean: dict[RadicalKey, Fraction] = {}
        if terms:
            for key, coeff in terms.items():
                coeff = Fraction(coeff)
                if coeff:
                    clean[key] = clean.get(key, Fraction(0)) + coeff
        object.__setattr__(self, "_terms", {k: c for k, c in clean.items() if c})

    def __setattr__(self, name, value):
        raise AttributeError("RadicalScalar is immutable")

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls) -> RadicalScalar:
        return cls()

    @classmethod
    def one(cls) -> RadicalScalar:
        return cls.from_rational(1)

    @classmethod
    def from_rational(cls, q: RationalLike) -> RadicalScalar:
        return cls({(): Fraction(q)})

    @classmethod
    def monomial(cls, coeff: RationalLike, exps: Mapping[int, int]) -> RadicalScalar:
        """coeff * prod p^(e/4) for a map prime -> exponent numerator."""
        for p in exps:
            if not isprime(p):
                raise ValidationError(f"radical base {p} is not prime")
        key, folded = _reduce_monomial(Fraction(coeff), exps)
        return cls({key: folded})

    @classmethod
    def parse(cls, text: str) -> RadicalScalar:
        """Inverse of str(): "q * p^(a/4) * ..." terms joined by " + "."""
        text = text.strip()
        if text == "0":
            return cls.zero()
        total = cls.zero()
        for part in text.split(" + "):
            tokens = [t.strip() for t in part.strip().split("*")]
            if not tokens or not tokens[0]:
                raise ValidationError(f"empty term in scalar text: {text!r}")
            try:
                coeff = Fraction(tokens[0])
            except (ValueError, ZeroDivisionError) as exc:
                raise ValidationError(f"bad coefficient {tokens[0]!r}") from exc
            exps: dict[int, int] = {}
            for tok in tokens[1:]:
                match = _MONOMIAL_RE.match(tok)
                if match is None:
                    raise ValidationError(f"bad radical factor {tok!r}")
                p, e = int(match.group(1)), int(match.group(2))
                exps[p] = exps.get(p, 0) + e
            total = total + cls.monomial(coeff, exps)
        return total

    # -- queries -----------------------------------------------------------

    @property
    def terms(self) -> dict[RadicalKey, Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_rational(self) -> bool:
        return not self._terms or set(self._terms) == {()}

    def as_fraction(self) -> Fraction:
        """The value as an exact rational; error when radicals survive."""
        if not self._terms:
            return Fraction(0)
        if set(self._terms) != {()}:
            raise NotRepresentableError(f"{self} is irrational")
        return self._terms[()]

    def to_float(self) -> float:
        total = 0.0
        for key, coeff in self._terms.items():
            value = float(coeff)
            for p, e in key:
                value *= float(p) ** (e / 4.0)
            total += value
        return total

    def __float__(self) -> float:
        return self.to_float()

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- ring operations ----------------------------------------------------

    @staticmethod
    def _coerce(other) -> RadicalScalar | None:
        if isinstance(other, RadicalScalar):
            return other
        if isinstance(other, (int, Fraction)):
            return RadicalScalar.from_rational(other)
        return None

    def __add__(self, other) -> RadicalScalar:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        merged = dict(self._terms)
        for key, coeff in rhs._terms.items():
            merged[key] = merged.get(key, Fraction(0)) + coeff
        return RadicalScalar(merged)

    __radd__ = __add__

    def __neg__(self) -> RadicalScalar:
        return RadicalScalar({k: -c for k, c in self._terms.items()})

    def __sub__(self, other) -> RadicalScalar:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other) -> RadicalScalar:
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs + (-self)

    def __mul__(self, other) -> RadicalScalar:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        out: dict[RadicalKey, Fraction] = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in rhs._terms.items():
                exps = dict(k1)
                for p, e in k2:
                    exps[p] = exps.get(p, 0) + e
                key, coeff = _reduce_monomial(c1 * c2, exps)
                if coeff:
                    out[key] = out.get(key, Fraction(0)) + coeff
        return RadicalScalar(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> RadicalScalar:
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.invert() ** (-n)
        result = RadicalScalar.one()
        for _ in range(n):
            result = result * self
        return result

    def sqrt(self) -> RadicalScalar:
        """Exact square root of a single positive term with even exponents."""
        if len(self._terms) != 1:
            raise NotRepresentableError(f"sqrt of non-monomial {self}")
        (key, coeff), = self._terms.items()
        if coeff < 0:
            raise NotRepresentableError(f"sqrt of negative term {self}")
        if any(e % 2 for _, e in key):
            raise NotRepresentableError(f"sqrt of {self} needs an eighth root")
        exps = {p: e // 2 for p, e in key}
        for p, e in _factor_positive_fraction(coeff).items():
            exps[p] = exps.get(p, 0) + 2 * e
        new_key, new_coeff = _reduce_monomial(Fraction(1), exps)
        return RadicalScalar({new_key: new_coeff})

    def invert(self) -> RadicalScalar:
        """Exact reciprocal of a single nonzero term."""
        if not self._terms:
            raise NotInvertibleError("inverse of zero")
        if len(self._terms) != 1:
            raise NotInvertibleError(f"inverse of non-monomial {self}")
        (key, coeff), = self._terms.items()
        new_key, new_coeff = _reduce_monomial(1 / coeff, {p: -e for p, e in key})
        return RadicalScalar({new_key: new_coeff})

    # -- equality and display ------------------------------------------------

    def __eq__(self, other) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self._terms == rhs._terms

    def __hash__(self) -> int:
        if not self._terms:
            return hash(Fraction(0))
        if set(self._terms) == {()}:
            return hash(self._terms[()])
        return hash(frozenset(self._terms.items()))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        rendered = []
        for key in sorted(self._terms):
            parts = [str(self._terms[key])]
            parts.extend(f"{p}^({e}/4)" for p, e in key)
            rendered.append(" * ".join(parts))
        return " + ".join(rendered)

    def __repr__(self) -> str:
        return f"RadicalScalar({str(self)!r})"


def sqrt_of_int(n: int) -> RadicalScalar:
    """Convenience: exact square root of a positive integer."""
    if n <= 0:
        raise NotRepresentableError(f"sqrt of non-positive integer {n}")
    return RadicalScalar.from_rational(n).sqrt()


def sum_scalars(values: Iterable[RadicalScalar]) -> RadicalScalar:
    total = RadicalScalar.zero()
    for v in values:
        total = total + v
    return total
