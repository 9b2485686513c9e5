"""
Exact integer-coefficient polynomials: the multivariate ring Z[t_1, ..., t_n]
and the single-variable ring Z[t].

Everything the library computes lives in one of these two rings, so all
arithmetic is exact over arbitrary-precision integers; there is no fraction
or float anywhere.  ``project_s1`` is the ring map t_i -> (n-i+1) t that
carries multivariate restriction values into Z[t].

Terms are stored sparsely (no zero coefficients) and ordered graded-
lexicographically for display and serialization, so equal polynomials have
equal string forms.

>>> p = RootPoly.from_root(3, 1, 2) + RootPoly.from_root(3, 2, 3)
>>> str(p)
't1 - t3'
>>> str(project_s1(p))
'2t'
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Mapping

__all__ = ["TPoly", "RootPoly", "project_s1", "divides", "in_simple_roots"]


def _fmt_term(coeff: int, body: str) -> str:
    if body == "":
        return str(coeff)
    if coeff == 1:
        return body
    if coeff == -1:
        return "-" + body
    return f"{coeff}{body}"


def _join_terms(terms: list[tuple[int, str]]) -> str:
    """Render (coefficient, variable-part) pairs already in display order."""
    if not terms:
        return "0"
    out = _fmt_term(*terms[0])
    for coeff, body in terms[1:]:
        if coeff < 0:
            out += " - " + _fmt_term(-coeff, body)
        else:
            out += " + " + _fmt_term(coeff, body)
    return out


class TPoly:
    """A polynomial in the single variable t with integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        self.coeffs: dict[int, int] = {
            d: c for d, c in (coeffs or {}).items() if c != 0
        }

    @classmethod
    def zero(cls) -> "TPoly":
        return cls()

    @classmethod
    def monomial(cls, coeff: int, degree: int) -> "TPoly":
        """The monomial coeff * t^degree.

        >>> str(TPoly.monomial(12, 5))
        '12t^5'
        """
        if degree < 0:
            raise ValueError("negative degree")
        return cls({degree: coeff})

    @classmethod
    def constant(cls, value: int) -> "TPoly":
        return cls({0: value})

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return max(self.coeffs) if self.coeffs else -1

    def __add__(self, other: "TPoly") -> "TPoly":
        out = dict(self.coeffs)
        for d, c in other.coeffs.items():
            out[d] = out.get(d, 0) + c
        return TPoly(out)

    def __neg__(self) -> "TPoly":
        return TPoly({d: -c for d, c in self.coeffs.items()})

    def __sub__(self, other: "TPoly") -> "TPoly":
        return self + (-other)

    def __mul__(self, other: "TPoly") -> "TPoly":
        out: dict[int, int] = {}
        for d1, c1 in self.coeffs.items():
            for d2, c2 in other.coeffs.items():
                d = d1 + d2
                out[d] = out.get(d, 0) + c1 * c2
        return TPoly(out)

    def scale(self, k: int) -> "TPoly":
        return TPoly({d: k * c for d, c in self.coeffs.items()})

    def __eq__(self, other: object) -> bool:
        return isinstance(other, TPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def as_monomial(self) -> tuple[int, int]:
        """Return (coeff, degree) if the polynomial is a single term or zero."""
        if not self.coeffs:
            return (0, 0)
        if len(self.coeffs) != 1:
            raise ValueError(f"{self} is not a monomial")
        ((d, c),) = self.coeffs.items()
        return (c, d)

    def __str__(self) -> str:
        terms = []
        for d in sorted(self.coeffs, reverse=True):
            body = "" if d == 0 else ("t" if d == 1 else f"t^{d}")
            terms.append((self.coeffs[d], body))
        return _join_terms(terms)

    def __repr__(self) -> str:
        return f"TPoly({self})"

    def to_json(self) -> dict[str, int]:
        """Serialize as {degree: coefficient} with string keys."""
        return {str(d): self.coeffs[d] for d in sorted(self.coeffs)}

    @classmethod
    def from_json(cls, data: Mapping[str, int]) -> "TPoly":
        return cls({int(d): c for d, c in data.items()})


class RootPoly:
    """A polynomial in t_1, ..., t_n with integer coefficients.

    Terms map exponent tuples of length ``nvars`` to nonzero coefficients.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], int] | None = None):
        self.nvars = nvars
        self.terms: dict[tuple[int, ...], int] = {
            e: c for e, c in (terms or {}).items() if c != 0
        }

    @classmethod
    def zero(cls, nvars: int) -> "RootPoly":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, value: int) -> "RootPoly":
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "RootPoly":
        """The variable t_i."""
        if not 1 <= i <= nvars:
            raise ValueError(f"variable index {i} out of range 1..{nvars}")
        e = [0] * nvars
        e[i - 1] = 1
        return cls(nvars, {tuple(e): 1})

    @classmethod
    def from_root(cls, nvars: int, j: int, k: int) -> "RootPoly":
        """The root t_j - t_k."""
        return cls.variable(nvars, j) - cls.variable(nvars, k)

    def _check(self, other: "RootPoly") -> None:
        if self.nvars != other.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} != {other.nvars}")

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "RootPoly") -> "RootPoly":
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return RootPoly(self.nvars, out)

    def __neg__(self) -> "RootPoly":
        return RootPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "RootPoly") -> "RootPoly":
        return self + (-other)

    def __mul__(self, other: "RootPoly") -> "RootPoly":
        self._check(other)
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return RootPoly(self.nvars, out)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, RootPoly)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        """Terms in graded-lexicographic order, highest first."""
        return sorted(
            self.terms.items(), key=lambda item: (sum(item[0]), item[0]), reverse=True
        )

    def to_str(self, var: str = "t") -> str:
        terms = []
        for e, c in self.sorted_terms():
            parts = []
            for i, p in enumerate(e, start=1):
                if p == 1:
                    parts.append(f"{var}{i}")
                elif p > 1:
                    parts.append(f"{var}{i}^{p}")
            terms.append((c, "*".join(parts)))
        return _join_terms(terms)

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"RootPoly({self.nvars}, {self})"


def project_s1(p: RootPoly) -> TPoly:
    """The projection Z[t_1..t_n] -> Z[t] determined by t_i -> (n-i+1) t.

    A ring homomorphism; it sends the root t_j - t_k (j < k) to (k-j) t.

    >>> str(project_s1(RootPoly.from_root(7, 1, 4)))
    '3t'
    """
    n = p.nvars
    out = TPoly.zero()
    for e, c in p.terms.items():
        factor = 1
        for i, power in enumerate(e, start=1):
            factor *= (n - i + 1) ** power
        out = out + TPoly.monomial(c * factor, sum(e))
    return out


def divides(d: TPoly, p: TPoly) -> bool:
    """True iff p = d*q for some q with integer coefficients.

    >>> divides(TPoly.monomial(12, 5), TPoly.monomial(3600, 5))
    True
    >>> divides(TPoly.monomial(2, 1), TPoly.monomial(3, 1))
    False
    """
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    q, ok = try_exact_div(p, d)
    return ok


def try_exact_div(p: TPoly, d: TPoly) -> tuple[TPoly, bool]:
    """Attempt exact division p / d in Z[t]; return (quotient, success).

    Long division: if p = d*q with q integral, every step's leading
    coefficient divides exactly, so the greedy run either recovers q or
    proves no integral quotient exists.
    """
    lead_deg = d.degree
    lead_coeff = d.coeffs[lead_deg] if lead_deg >= 0 else 0
    rem = TPoly(p.coeffs)
    q: dict[int, int] = {}
    while not rem.is_zero():
        rd = rem.degree
        if rd < lead_deg:
            return TPoly.zero(), False
        rc = rem.coeffs[rd]
        if rc % lead_coeff != 0:
            return TPoly.zero(), False
        step_c = rc // lead_coeff
        step_d = rd - lead_deg
        q[step_d] = step_c
        rem = rem - d * TPoly.monomial(step_c, step_d)
    return TPoly(q), True


@lru_cache(maxsize=None)
def _monomial_in_simple_roots(nvars: int, e: tuple[int, ...]) -> RootPoly:
    """Expansion of the t-monomial ``e`` after t_i -> a_i + ... + a_{n-1}.

    Setting t_n to zero is harmless for the polynomials this library builds,
    which are sums of products of differences t_j - t_k.
    """
    m = nvars - 1
    if not any(e):
        return RootPoly.constant(m, 1)
    i = next(idx for idx, p in enumerate(e) if p > 0)
    rest = list(e)
    rest[i] -= 1
    base = _monomial_in_simple_roots(nvars, tuple(rest))
    linear = RootPoly.zero(m)
    for a in range(i + 1, nvars):  # a_i + a_{i+1} + ... + a_{n-1} (1-based a)
        linear = linear + RootPoly.variable(m, a)
    return base * linear


def in_simple_roots(p: RootPoly) -> RootPoly:
    """Rewrite a polynomial in the t_i in the simple-root basis.

    The result has nvars-1 variables; variable i stands for the simple root
    t_i - t_{i+1}.  Only well-defined on polynomials expressible in the
    differences t_j - t_k (all restriction values are), since the rewrite
    fixes t_n = 0.
    """
    out = RootPoly.zero(p.nvars - 1)
    for e, c in p.terms.items():
        expansion = _monomial_in_simple_roots(p.nvars, e)
        out = out + RootPoly(out.nvars, {m: c * v for m, v in expansion.terms.items()})
    return out
