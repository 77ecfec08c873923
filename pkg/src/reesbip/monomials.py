"""Monomials and pure-difference binomials of S = k[x, y, T].

A monomial is stored blockwise but most algorithms work on the flat
exponent tuple ``x + y + T``.  Binomials are kept with a fixed sign: the
``plus`` term is the larger one under the reference order (total degree,
then lexicographic with x1 < ... < xn < y1 < ... < ym < T1 < ... < Tq).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatch

Exps = tuple[int, ...]


def reference_key(flat: Exps) -> tuple:
    return (sum(flat), flat[::-1])


@dataclass(frozen=True, order=False)
class Monomial:
    x: Exps
    y: Exps
    T: Exps

    def __post_init__(self):
        for part in (self.x, self.y, self.T):
            if any(e < 0 for e in part):
                raise ValueError("negative exponent")

    @classmethod
    def from_flat(cls, flat: Exps, n: int, m: int) -> "Monomial":
        flat = tuple(flat)
        return cls(flat[:n], flat[n : n + m], flat[n + m :])

    @classmethod
    def one(cls, n: int, m: int, q: int) -> "Monomial":
        return cls((0,) * n, (0,) * m, (0,) * q)

    @property
    def flat(self) -> Exps:
        return self.x + self.y + self.T

    @property
    def shape(self) -> tuple[int, int, int]:
        return len(self.x), len(self.y), len(self.T)

    @property
    def bidegree(self) -> tuple[int, int]:
        return sum(self.x) + sum(self.y), sum(self.T)

    @property
    def degree(self) -> int:
        return sum(self.bidegree)

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.flat, other.flat))

    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.flat)

    def __str__(self) -> str:
        n, m, _ = self.shape
        names = [f"x{i + 1}" for i in range(n)] + [f"y{j + 1}" for j in range(m)]
        names += [f"T{k + 1}" for k in range(len(self.T))]
        return format_monomial(self.flat, names)

    def to_json(self) -> dict:
        return {"x": list(self.x), "y": list(self.y), "T": list(self.T)}


def format_monomial(flat: Exps, names: list[str]) -> str:
    parts = [v if e == 1 else f"{v}^{e}" for v, e in zip(names, flat) if e]
    return "*".join(parts) if parts else "1"


def lcm(a: Exps, b: Exps) -> Exps:
    return tuple(max(u, v) for u, v in zip(a, b))


def divides(a: Exps, b: Exps) -> bool:
    return all(u <= v for u, v in zip(a, b))


@dataclass(frozen=True)
class Binomial:
    """``plus - minus`` with ``plus`` the larger term in the reference order."""

    plus: Monomial
    minus: Monomial

    def __post_init__(self):
        if self.plus.shape != self.minus.shape:
            raise DimensionMismatch("terms live in different rings")
        if self.plus == self.minus:
            raise ValueError("binomial is zero")
        if reference_key(self.plus.flat) < reference_key(self.minus.flat):
            p, mi = self.minus, self.plus
            object.__setattr__(self, "plus", p)
            object.__setattr__(self, "minus", mi)

    @classmethod
    def from_flat(cls, a: Exps, b: Exps, n: int, m: int) -> "Binomial":
        return cls(Monomial.from_flat(a, n, m), Monomial.from_flat(b, n, m))

    def canonical(self) -> "Binomial":
        return Binomial(self.plus, self.minus)

    @property
    def terms(self) -> tuple[Exps, Exps]:
        return self.plus.flat, self.minus.flat

    def is_coprime(self) -> bool:
        return all(min(a, b) == 0 for a, b in zip(*self.terms))

    def is_squarefree(self) -> bool:
        return self.plus.is_squarefree() and self.minus.is_squarefree()

    def __str__(self) -> str:
        return f"{self.plus} - {self.minus}"

    def to_json(self) -> dict:
        return {"plus": self.plus.to_json(), "minus": self.minus.to_json(), "text": str(self)}
