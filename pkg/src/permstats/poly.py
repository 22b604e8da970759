"""Sparse multivariate polynomials with exact integer coefficients.

>>> q = MultiPoly.variable("q")
>>> one = MultiPoly.constant(1, ("q",))
>>> str((one - q) ** 2)
'1 - 2q + q^2'
"""

from __future__ import annotations

from types import MappingProxyType
from typing import Mapping, Sequence

__all__ = ["MultiPoly", "binomial_expand"]

Exponents = tuple[int, ...]


def _grlex_key(exps: Exponents):
    return (sum(exps), exps)


class MultiPoly:
    """Polynomial over a fixed, ordered list of variable names."""

    __slots__ = ("variables", "_terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[Exponents, int] = ()):
        self.variables = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"repeated variable names in {self.variables}")
        clean: dict[Exponents, int] = {}
        for exps, c in dict(terms).items():
            exps = tuple(exps)
            if len(exps) != len(self.variables):
                raise ValueError(f"exponent vector {exps} does not match {self.variables}")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            if not isinstance(c, int):
                raise TypeError(f"coefficient {c!r} is not an exact integer")
            if c:
                clean[exps] = clean.get(exps, 0) + c
                if not clean[exps]:
                    del clean[exps]
        self._terms = MappingProxyType(clean)

    @classmethod
    def constant(cls, c: int, variables: Sequence[str] = ("q",)) -> MultiPoly:
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def variable(cls, name: str, variables: Sequence[str] | None = None) -> MultiPoly:
        variables = tuple(variables) if variables is not None else (name,)
        exps = tuple(int(v == name) for v in variables)
        return cls(variables, {exps: 1})

    @property
    def terms(self) -> Mapping[Exponents, int]:
        return self._terms

    def sorted_terms(self) -> list[tuple[Exponents, int]]:
        """Terms in graded-lexicographic order of exponents, lowest first."""
        return sorted(self._terms.items(), key=lambda kv: _grlex_key(kv[0]))

    def _check_compatible(self, other: MultiPoly) -> None:
        if self.variables != other.variables:
            raise ValueError(f"variable mismatch: {self.variables} vs {other.variables}")

    def _coerce(self, other) -> MultiPoly:
        if isinstance(other, int):
            return MultiPoly.constant(other, self.variables)
        if isinstance(other, MultiPoly):
            self._check_compatible(other)
            return other
        return NotImplemented

    def __add__(self, other) -> MultiPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for exps, c in other._terms.items():
            terms[exps] = terms.get(exps, 0) + c
        return MultiPoly(self.variables, terms)

    __radd__ = __add__

    def __neg__(self) -> MultiPoly:
        return MultiPoly(self.variables, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> MultiPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> MultiPoly:
        return (-self) + other

    def __mul__(self, other) -> MultiPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: dict[Exponents, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return MultiPoly(self.variables, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> MultiPoly:
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = MultiPoly.constant(1, self.variables)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = MultiPoly.constant(other, self.variables)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.variables == other.variables and dict(self._terms) == dict(other._terms)

    def __hash__(self) -> int:
        return hash((self.variables, frozenset(self._terms.items())))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def evaluate(self, values: Sequence[int] | Mapping[str, int]) -> int:
        if isinstance(values, Mapping):
            values = [values[v] for v in self.variables]
        total = 0
        for exps, c in self._terms.items():
            term = c
            for x, e in zip(values, exps):
                term *= x ** e
            total += term
        return total

    def coefficient_list(self) -> list[int]:
        """Dense coefficients of a univariate polynomial, constant term first."""
        if len(self.variables) != 1:
            raise ValueError("coefficient_list needs a univariate polynomial")
        if not self._terms:
            return []
        top = max(e[0] for e in self._terms)
        return [self._terms.get((k,), 0) for k in range(top + 1)]

    def to_json(self) -> dict:
        return {
            "variables": list(self.variables),
            "terms": [{"exponents": list(e), "coefficient": c} for e, c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, doc: Mapping) -> MultiPoly:
        return cls(doc["variables"],
                   {tuple(t["exponents"]): t["coefficient"] for t in doc["terms"]})

    def _monomial(self, exps: Exponents) -> str:
        parts = []
        for v, e in zip(self.variables, exps):
            if e == 1:
                parts.append(v)
            elif e > 1:
                parts.append(f"{v}^{e}")
        return "".join(parts)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for k, (exps, c) in enumerate(self.sorted_terms()):
            mono = self._monomial(exps)
            mag = abs(c)
            body = mono if mono and mag == 1 else f"{mag}{mono}"
            if k == 0:
                out.append(f"-{body}" if c < 0 else body)
            else:
                out.append(f"{'-' if c < 0 else '+'} {body}")
        return " ".join(out)

    def __repr__(self) -> str:
        return f"MultiPoly({self.variables!r}, {dict(self._terms)!r})"


def binomial_expand(n: int, variable: str = "q") -> MultiPoly:
    """Expand ``(1 - q) ** (n - 1)``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    one_minus_q = 1 - MultiPoly.variable(variable)
    return one_minus_q ** (n - 1)
