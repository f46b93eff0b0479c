"""Universal enveloping algebra in PBW normal form.

Elements are Q-linear combinations of monomials X_{i1}...X_{ik} with
i1 <= ... <= ik in a fixed basis order.  Products are normalized by the
rewriting rule X_j X_i -> X_i X_j + [X_j, X_i] for j > i, which terminates
because each step lowers (degree, inversion count) lexicographically; by the
PBW theorem the normal form does not depend on the rewrite order.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import ContractViolation
from .lie import QuadraticLieAlgebra
from .linalg import ZERO, as_scalar, vector

Monomial = tuple[int, ...]


def pbw_normalize(algebra: QuadraticLieAlgebra, raw: dict) -> dict:
    out: dict[Monomial, Fraction] = {}
    stack = [(tuple(m), as_scalar(c)) for m, c in raw.items()]
    while stack:
        mono, coeff = stack.pop()
        if not coeff:
            continue
        for t in range(len(mono) - 1):
            if mono[t] > mono[t + 1]:
                j, i = mono[t], mono[t + 1]
                stack.append((mono[:t] + (i, j) + mono[t + 2 :], coeff))
                for k, c in algebra.bracket_sparse(j, i):
                    stack.append((mono[:t] + (k,) + mono[t + 2 :], coeff * c))
                break
        else:
            acc = out.get(mono, ZERO) + coeff
            if acc:
                out[mono] = acc
            elif mono in out:
                del out[mono]
    return out


class PBWElement:
    """Element of U(g) on the PBW monomial basis."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: QuadraticLieAlgebra, terms: dict, normalized: bool = False):
        self.algebra = algebra
        if normalized:
            self.terms = {m: c for m, c in terms.items() if c}
        else:
            for mono in terms:
                for idx in mono:
                    if not 0 <= idx < algebra.dim:
                        raise ContractViolation("monomial index out of range")
            self.terms = pbw_normalize(algebra, terms)

    # -- constructors --------------------------------------------------

    @classmethod
    def zero(cls, algebra) -> "PBWElement":
        return cls(algebra, {}, normalized=True)

    @classmethod
    def scalar(cls, algebra, c) -> "PBWElement":
        return cls(algebra, {(): as_scalar(c)}, normalized=True)

    @classmethod
    def one(cls, algebra) -> "PBWElement":
        return cls.scalar(algebra, 1)

    @classmethod
    def generator(cls, algebra, i: int) -> "PBWElement":
        if not 0 <= i < algebra.dim:
            raise ContractViolation("generator index out of range")
        return cls(algebra, {(i,): Fraction(1)}, normalized=True)

    @classmethod
    def from_vector(cls, algebra, coords: Sequence) -> "PBWElement":
        coords = vector(coords)
        if len(coords) != algebra.dim:
            raise ContractViolation("coordinate length does not match the algebra")
        return cls(algebra, {(i,): c for i, c in enumerate(coords) if c}, normalized=True)

    # -- ring structure --------------------------------------------------

    def _check(self, other: "PBWElement"):
        if self.algebra is not other.algebra and self.algebra.name != other.algebra.name:
            raise ContractViolation("elements live over different algebras")

    def __add__(self, other: "PBWElement") -> "PBWElement":
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            acc = out.get(m, ZERO) + c
            if acc:
                out[m] = acc
            elif m in out:
                del out[m]
        return PBWElement(self.algebra, out, normalized=True)

    def __sub__(self, other: "PBWElement") -> "PBWElement":
        return self + (-other)

    def __neg__(self) -> "PBWElement":
        return PBWElement(self.algebra, {m: -c for m, c in self.terms.items()}, normalized=True)

    def __rmul__(self, scalar) -> "PBWElement":
        c = as_scalar(scalar)
        return PBWElement(self.algebra, {m: c * x for m, x in self.terms.items()}, normalized=True)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.__rmul__(other)
        self._check(other)
        raw: dict[Monomial, Fraction] = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                mono = ma + mb
                raw[mono] = raw.get(mono, ZERO) + ca * cb
        return PBWElement(self.algebra, pbw_normalize(self.algebra, raw), normalized=True)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PBWElement)
            and self.algebra.name == other.algebra.name
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.algebra.name, tuple(sorted(self.terms.items()))))

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Filtration degree: longest monomial (0 for scalars, -1 for zero)."""
        if not self.terms:
            return -1
        return max(len(m) for m in self.terms)

    def commutator(self, other: "PBWElement") -> "PBWElement":
        return self * other - other * self

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        labels = self.algebra.labels
        bits = []
        for m in sorted(self.terms, key=lambda m: (len(m), m)):
            c = self.terms[m]
            if not m:
                bits.append(str(c))
                continue
            word = "*".join(labels[i] for i in m)
            bits.append(word if c == 1 else f"{c}*{word}")
        return " + ".join(bits)


def casimir_element(algebra: QuadraticLieAlgebra, basis_vectors: Sequence[Sequence] | None = None) -> PBWElement:
    """Casimir sum(X_i X^i) for a B-orthogonal basis; X^i = X_i / B(X_i, X_i).

    With no basis given, the algebra's own basis is used and must already be
    B-orthogonal.  A non-orthogonal basis is rejected: the dual-basis formula
    below is only valid when the Gram matrix is diagonal.
    """
    if basis_vectors is None:
        if not algebra.form.is_diagonal():
            raise ContractViolation("default basis is not orthogonal; pass one explicitly")
        basis_vectors = [
            [Fraction(1) if s == i else ZERO for s in range(algebra.dim)]
            for i in range(algebra.dim)
        ]
    vecs = [vector(v) for v in basis_vectors]
    if len(vecs) != algebra.dim:
        raise ContractViolation("orthogonal basis must have full dimension")
    for i, vi in enumerate(vecs):
        for j in range(i + 1, len(vecs)):
            if algebra.b(vi, vecs[j]) != 0:
                raise ContractViolation(f"basis vectors {i} and {j} are not orthogonal")
    omega = PBWElement.zero(algebra)
    for vi in vecs:
        d = algebra.b(vi, vi)
        if d == 0:
            raise ContractViolation("basis vector is isotropic")
        x = PBWElement.from_vector(algebra, vi)
        omega = omega + (1 / d) * (x * x)
    return omega
