"""Exact sparse multivariate polynomials over the integers.

This is the coefficient ring for everything else in the package: torus
weights y1, y2, ... and the formal parameters u1, u2, u3 used by the
matrix-identity suite.  Coefficients are arbitrary-precision ints, terms
are kept in a canonical form (no zero coefficients), and two polynomials
are equal exactly when their term dictionaries are equal.  Serialization
orders terms by graded lexicographic order on variable indices so that
all text and JSON output is deterministic.

Internally a monomial is packed into one integer, 16 bits of exponent per
registered variable, so monomial multiplication is integer addition.  The
16-bit field bounds a single exponent by 65535, far beyond anything a
desk-scale computation produces.
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping, Union

# The public monomial form: ((variable, exponent), ...) sorted by variable,
# all exponents positive.  The empty tuple is the constant monomial.
Monomial = tuple[tuple[str, int], ...]

_VAR_RE = re.compile(r"^([A-Za-z]+)([0-9]+)$")
_VAR_KEY_CACHE: dict[str, tuple[str, int]] = {}

_SHIFT = 16
_MASK = (1 << _SHIFT) - 1
_VAR_INDEX: dict[str, int] = {}
_VAR_NAMES: list[str] = []


def var_key(name: str) -> tuple[str, int]:
    """Sort key for variable names: 'y12' -> ('y', 12)."""
    key = _VAR_KEY_CACHE.get(name)
    if key is None:
        m = _VAR_RE.match(name)
        key = (m.group(1), int(m.group(2))) if m else (name, -1)
        _VAR_KEY_CACHE[name] = key
    return key


def _var_slot(name: str) -> int:
    slot = _VAR_INDEX.get(name)
    if slot is None:
        slot = len(_VAR_NAMES)
        _VAR_INDEX[name] = slot
        _VAR_NAMES.append(name)
    return slot


def _pack(powers: Mapping[str, int]) -> int:
    packed = 0
    for v, e in powers.items():
        if e < 0:
            raise ValueError(f"negative exponent for {v}")
        if e > _MASK:
            raise ValueError(f"exponent {e} for {v} exceeds the packing bound")
        if e:
            packed += e << (_SHIFT * _var_slot(v))
    return packed


def _unpack(packed: int) -> Monomial:
    out = []
    slot = 0
    while packed:
        e = packed & _MASK
        if e:
            out.append((_VAR_NAMES[slot], e))
        packed >>= _SHIFT
        slot += 1
    out.sort(key=lambda ve: var_key(ve[0]))
    return tuple(out)


def _mono_degree(packed: int) -> int:
    deg = 0
    while packed:
        deg += packed & _MASK
        packed >>= _SHIFT
    return deg


class Polynomial:
    """An immutable integer polynomial in named variables."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        packed: dict[int, int] = {}
        if terms:
            for mono, coeff in terms.items():
                if not coeff:
                    continue
                if isinstance(mono, int):
                    key = mono
                else:
                    key = _pack(dict(mono))
                packed[key] = packed.get(key, 0) + coeff
                if not packed[key]:
                    del packed[key]
        self._terms = packed
        self._hash: int | None = None

    @classmethod
    def _raw(cls, packed: dict[int, int]) -> "Polynomial":
        """Internal: adopt an already-clean packed term dict."""
        p = cls.__new__(cls)
        p._terms = packed
        p._hash = None
        return p

    # -- constructors --------------------------------------------------

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls._raw({})

    @classmethod
    def integer(cls, n: int) -> "Polynomial":
        return cls._raw({0: n} if n else {})

    @classmethod
    def variable(cls, name: str) -> "Polynomial":
        return cls._raw({1 << (_SHIFT * _var_slot(name)): 1})

    @classmethod
    def monomial(cls, coeff: int, powers: Mapping[str, int]) -> "Polynomial":
        if not coeff:
            return cls.zero()
        return cls._raw({_pack(powers): coeff})

    # -- inspection ----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def terms(self) -> dict[Monomial, int]:
        return {_unpack(m): c for m, c in self._terms.items()}

    def variables(self) -> list[str]:
        seen = set()
        for packed in self._terms:
            slot = 0
            while packed:
                if packed & _MASK:
                    seen.add(_VAR_NAMES[slot])
                packed >>= _SHIFT
                slot += 1
        return sorted(seen, key=var_key)

    def degree(self) -> int:
        """Total degree; the zero polynomial has degree -1 by convention."""
        if not self._terms:
            return -1
        return max(_mono_degree(m) for m in self._terms)

    def constant_value(self) -> int | None:
        """The value of a constant polynomial, else None."""
        if not self._terms:
            return 0
        if len(self._terms) == 1 and 0 in self._terms:
            return self._terms[0]
        return None

    # -- ring operations -----------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, int):
            return Polynomial.integer(other)
        return NotImplemented

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        result = dict(self._terms)
        for mono, coeff in other._terms.items():
            new = result.get(mono, 0) + coeff
            if new:
                result[mono] = new
            else:
                del result[mono]
        return Polynomial._raw(result)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if len(self._terms) < len(other._terms):
            small, large = self._terms, other._terms
        else:
            small, large = other._terms, self._terms
        result: dict[int, int] = {}
        for m2, c2 in small.items():
            for m1, c1 in large.items():
                mono = m1 + m2
                new = result.get(mono, 0) + c1 * c2
                if new:
                    result[mono] = new
                else:
                    del result[mono]
        return Polynomial._raw(result)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Polynomial.integer(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Polynomial.integer(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- substitution ----------------------------------------------------

    def substitute(
        self,
        images: Mapping[str, Union["Polynomial", int]],
        strict: bool = False,
    ) -> "Polynomial":
        """Apply the ring homomorphism sending each variable to its image.

        Images must have degree at most one (that is all the spectral-
        parameter specializations ever need).  Unmapped variables are kept
        fixed unless ``strict`` is set, in which case they raise.
        """
        prepared: dict[int, Polynomial] = {}
        for v, img in images.items():
            img = img if isinstance(img, Polynomial) else Polynomial.integer(img)
            if img.degree() > 1:
                raise ValueError(f"substitution image for {v} has degree > 1")
            prepared[_var_slot(v)] = img
        result: dict[int, int] = {}
        for packed, coeff in self._terms.items():
            term = Polynomial.integer(coeff)
            rest = 0
            slot = 0
            remaining = packed
            while remaining:
                e = remaining & _MASK
                if e:
                    if slot in prepared:
                        term = term * prepared[slot] ** e
                    elif strict:
                        raise ValueError(f"unmapped variable {_VAR_NAMES[slot]!r}")
                    else:
                        rest += e << (_SHIFT * slot)
                remaining >>= _SHIFT
                slot += 1
            for mono, c in term._terms.items():
                key = mono + rest
                new = result.get(key, 0) + c
                if new:
                    result[key] = new
                else:
                    del result[key]
        return Polynomial._raw(result)

    # -- serialization ---------------------------------------------------

    def _sorted_terms(self) -> list[tuple[Monomial, int]]:
        """Terms in graded lexicographic order (highest degree first)."""
        unpacked = [(_unpack(m), c) for m, c in self._terms.items()]
        varlist = self.variables()
        index = {v: i for i, v in enumerate(varlist)}

        def key(item):
            mono, _ = item
            deg = sum(e for _, e in mono)
            vec = [0] * len(varlist)
            for v, e in mono:
                vec[index[v]] = e
            return (-deg, tuple(-x for x in vec))

        return sorted(unpacked, key=key)

    @staticmethod
    def _format_term(mono: Monomial, coeff: int) -> str:
        factors = [v if e == 1 else f"{v}^{e}" for v, e in mono]
        if not factors:
            return str(coeff)
        body = "*".join(factors)
        if coeff == 1:
            return body
        if coeff == -1:
            return "-" + body
        return f"{coeff}*{body}"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, (mono, coeff) in enumerate(self._sorted_terms()):
            text = self._format_term(mono, coeff)
            if i == 0:
                parts.append(text)
            elif text.startswith("-"):
                parts.append("- " + text[1:])
            else:
                parts.append("+ " + text)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r})"

    def machine(self) -> list:
        """JSON-ready form: list of [coefficient, {var: power}] in canonical order."""
        return [[coeff, {v: e for v, e in mono}] for mono, coeff in self._sorted_terms()]

    @classmethod
    def from_machine(cls, data: Iterable) -> "Polynomial":
        terms: dict[int, int] = {}
        for coeff, powers in data:
            mono = _pack(powers)
            terms[mono] = terms.get(mono, 0) + int(coeff)
        return cls(terms)

    _TOKEN_RE = re.compile(r"\s*([0-9]+|[A-Za-z]+[0-9]*|\^|\*|\+|-)")

    @classmethod
    def parse(cls, text: str) -> "Polynomial":
        """Parse the text form produced by ``str``, e.g. ``-2*y1^2*y3 + y2``."""
        tokens = []
        pos = 0
        while pos < len(text):
            m = cls._TOKEN_RE.match(text, pos)
            if not m:
                if text[pos:].strip():
                    raise ValueError(f"bad polynomial syntax at position {pos + 1}")
                break
            tokens.append(m.group(1))
            pos = m.end()
        if not tokens:
            raise ValueError("empty polynomial text")

        result = cls.zero()
        i = 0
        while i < len(tokens):
            sign = 1
            while i < len(tokens) and tokens[i] in "+-":
                if tokens[i] == "-":
                    sign = -sign
                i += 1
            if i >= len(tokens):
                raise ValueError("dangling sign in polynomial text")
            coeff = sign
            powers: dict[str, int] = {}
            expect_factor = True
            while i < len(tokens) and tokens[i] not in "+-":
                tok = tokens[i]
                if tok == "*":
                    i += 1
                    expect_factor = True
                    continue
                if not expect_factor:
                    raise ValueError(f"unexpected token {tok!r} in polynomial text")
                if tok.isdigit():
                    coeff *= int(tok)
                    i += 1
                else:
                    name = tok
                    i += 1
                    exp = 1
                    if i < len(tokens) and tokens[i] == "^":
                        if i + 1 >= len(tokens) or not tokens[i + 1].isdigit():
                            raise ValueError("expected integer exponent after '^'")
                        exp = int(tokens[i + 1])
                        i += 2
                    powers[name] = powers.get(name, 0) + exp
                expect_factor = False
            result = result + cls.monomial(coeff, powers)
        return result

    # -- exact division ---------------------------------------------------

    def divide_exact(self, divisor: "Polynomial") -> "Polynomial | None":
        """Return self / divisor when the division is exact over Z, else None."""
        if divisor.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")

        def lead(terms: dict[int, int]) -> tuple[int, int]:
            mono = max(terms, key=lambda m: (_mono_degree(m), m))
            return mono, terms[mono]

        d_mono, d_coeff = lead(divisor._terms)
        remainder = dict(self._terms)
        quotient: dict[int, int] = {}
        while remainder:
            r_mono, r_coeff = lead(remainder)
            q_mono = r_mono - d_mono
            if q_mono < 0 or any(
                (r_mono >> (_SHIFT * s)) & _MASK < (d_mono >> (_SHIFT * s)) & _MASK
                for s in range(len(_VAR_NAMES))
            ):
                return None
            if r_coeff % d_coeff != 0:
                return None
            q_coeff = r_coeff // d_coeff
            quotient[q_mono] = quotient.get(q_mono, 0) + q_coeff
            piece = Polynomial._raw({q_mono: q_coeff}) * divisor
            for mono, coeff in piece._terms.items():
                new = remainder.get(mono, 0) - coeff
                if new:
                    remainder[mono] = new
                else:
                    remainder.pop(mono, None)
        return Polynomial._raw(quotient)


ZERO = Polynomial.zero()
ONE_POLY = Polynomial.integer(1)


def y(i: int) -> Polynomial:
    """The torus weight y_i."""
    return Polynomial.variable(f"y{i}")


def u(i: int) -> Polynomial:
    """The formal spectral parameter u_i."""
    return Polynomial.variable(f"u{i}")
