"""Multilinear maps on a Lie algebra and the Chevalley-Eilenberg operators.

A MultilinearMap of arity k is a table over all n^k basis index tuples (no
symmetry compression; only nonzero entries are physically stored, reads
default to zero).  The three operators below are literal transcriptions of
the coordinate formulas, evaluated on every output tuple:

  (d w)(x_0..x_k)     = sum_{s<t} (-1)^s w(x_0.. x_s-hat .. [x_s,x_t]@t .. x_k)
  (theta_X w)(x_1..x_k) = sum_s w(x_1 .. [X, x_s] .. x_k)
  (iota_X w)(...)       = w(X, ...)

d raises arity by one and is capped so results stay within arity 4.  On
alternating maps these are the usual Lie-algebra-cohomology operators with
trivial coefficients; d of a 0-form is zero.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Mapping, Sequence

from .clifford import CliffordSpace, Multivector
from .errors import ContractViolation, UnsupportedArityError
from .lie import QuadraticLieAlgebra
from .linalg import ZERO, as_scalar, vector

MAX_ARITY = 4


class MultilinearMap:
    __slots__ = ("algebra", "arity", "values")

    def __init__(self, algebra: QuadraticLieAlgebra, arity: int, values: Mapping):
        if not 0 <= arity <= MAX_ARITY:
            raise UnsupportedArityError(f"arity {arity} outside 0..{MAX_ARITY}")
        self.algebra = algebra
        self.arity = arity
        table = {}
        for key, val in values.items():
            key = tuple(key)
            if len(key) != arity:
                raise ContractViolation("index tuple length does not match arity")
            if any(not 0 <= i < algebra.dim for i in key):
                raise ContractViolation("index out of range")
            val = as_scalar(val)
            if val:
                table[key] = val
        self.values = table

    @classmethod
    def zero(cls, algebra, arity: int) -> "MultilinearMap":
        return cls(algebra, arity, {})

    @classmethod
    def from_matrix(cls, algebra, mat) -> "MultilinearMap":
        if mat.rows != algebra.dim or mat.cols != algebra.dim:
            raise ContractViolation("matrix shape does not match the algebra")
        return cls(
            algebra,
            2,
            {
                (i, j): mat.entry(i, j)
                for i in range(algebra.dim)
                for j in range(algebra.dim)
            },
        )

    @classmethod
    def covector(cls, algebra, x: Sequence) -> "MultilinearMap":
        """x* = B(x, .) as an arity-1 map."""
        x = vector(x)
        return cls(
            algebra,
            1,
            {(i,): algebra.b(x, [Fraction(int(s == i)) for s in range(algebra.dim)]) for i in range(algebra.dim)},
        )

    def value(self, key: Sequence[int]) -> Fraction:
        return self.values.get(tuple(key), ZERO)

    def is_zero(self) -> bool:
        return not self.values

    def is_alternating(self) -> bool:
        for key, val in self.values.items():
            if len(set(key)) != len(key):
                return False
            for s in range(len(key) - 1):
                swapped = key[:s] + (key[s + 1], key[s]) + key[s + 2 :]
                if self.values.get(swapped, ZERO) != -val:
                    return False
        return True

    def __add__(self, other: "MultilinearMap") -> "MultilinearMap":
        self._check(other)
        out = dict(self.values)
        for k, v in other.values.items():
            acc = out.get(k, ZERO) + v
            if acc:
                out[k] = acc
            elif k in out:
                del out[k]
        res = MultilinearMap.zero(self.algebra, self.arity)
        res.values = out
        return res

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        res = MultilinearMap.zero(self.algebra, self.arity)
        res.values = {k: -v for k, v in self.values.items()}
        return res

    def __rmul__(self, scalar):
        c = as_scalar(scalar)
        res = MultilinearMap.zero(self.algebra, self.arity)
        res.values = {k: c * v for k, v in self.values.items() if c * v}
        return res

    def _check(self, other):
        if self.algebra.name != other.algebra.name or self.arity != other.arity:
            raise ContractViolation("maps have different carriers or arities")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MultilinearMap)
            and self.algebra.name == other.algebra.name
            and self.arity == other.arity
            and self.values == other.values
        )

    def __hash__(self):
        return hash((self.algebra.name, self.arity, tuple(sorted(self.values.items()))))

    def __repr__(self) -> str:
        entries = ", ".join(
            f"{key}:{val}" for key, val in sorted(self.values.items())
        )
        return f"MultilinearMap(arity={self.arity}, {{{entries}}})"


def ce_differential(w: MultilinearMap) -> MultilinearMap:
    """The coboundary; raises arity by one (input arity at most 3)."""
    g = w.algebra
    n = g.dim
    k = w.arity
    if k + 1 > MAX_ARITY:
        raise UnsupportedArityError(f"differential of arity {k} exceeds the arity cap")
    get = w.values.get
    sparse = g.bracket_sparse
    out = {}
    for idx in product(range(n), repeat=k + 1):
        total = ZERO
        for s in range(k + 1):
            negative = s & 1
            for t in range(s + 1, k + 1):
                br = sparse(idx[s], idx[t])
                if not br:
                    continue
                base = idx[:s] + idx[s + 1 :]
                pos = t - 1
                head, tail = base[:pos], base[pos + 1 :]
                for r, c in br:
                    val = get(head + (r,) + tail)
                    if val:
                        total = total - c * val if negative else total + c * val
        if total:
            out[idx] = total
    res = MultilinearMap.zero(g, k + 1)
    res.values = out
    return res


def lie_action(x: Sequence, w: MultilinearMap) -> MultilinearMap:
    """theta_X w: the natural action, inserting [X, .] slot by slot."""
    g = w.algebra
    n = g.dim
    k = w.arity
    x = vector(x)
    adx = []
    for s in range(n):
        col: dict[int, Fraction] = {}
        for i, xi in enumerate(x):
            if xi:
                for r, c in g.bracket_sparse(i, s):
                    col[r] = col.get(r, ZERO) + xi * c
        adx.append(tuple((r, c) for r, c in col.items() if c))
    get = w.values.get
    out = {}
    for idx in product(range(n), repeat=k):
        total = ZERO
        for s in range(k):
            head, tail = idx[:s], idx[s + 1 :]
            for r, c in adx[idx[s]]:
                val = get(head + (r,) + tail)
                if val:
                    total += c * val
        if total:
            out[idx] = total
    res = MultilinearMap.zero(g, k)
    res.values = out
    return res


def insert_first(x: Sequence, w: MultilinearMap) -> MultilinearMap:
    """iota_X w = w(X, ...); defined for arity >= 1."""
    if w.arity == 0:
        raise ContractViolation("cannot contract an arity-0 map")
    g = w.algebra
    x = vector(x)
    get = w.values.get
    out = {}
    for idx in product(range(g.dim), repeat=w.arity - 1):
        total = ZERO
        for a, xa in enumerate(x):
            if xa:
                val = get((a,) + idx)
                if val:
                    total += xa * val
        if total:
            out[idx] = total
    res = MultilinearMap.zero(g, w.arity - 1)
    res.values = out
    return res


def bracket_coproduct(space: CliffordSpace, algebra: QuadraticLieAlgebra, x: Sequence) -> Multivector:
    """The degree-2 multivector delta(x) with pairing(delta(x), y^z) = B(x,[y,z]).

    The space must consist of the first space.dim basis directions of the
    algebra with matching diagonal Gram; with a diagonal Gram the defining
    equations decouple and the blade coefficient at {i,j} is
    B(x, [e_i, e_j]) / (d_i d_j).
    """
    if space.dim > algebra.dim:
        raise ContractViolation("space does not embed in the algebra")
    for i in range(space.dim):
        if algebra.form.entry(i, i) != space.gram[i]:
            raise ContractViolation("space Gram does not match the algebra form")
    x = vector(x)
    if len(x) != algebra.dim:
        raise ContractViolation("coordinate length does not match the algebra")
    terms = {}
    for i in range(space.dim):
        for j in range(i + 1, space.dim):
            br = algebra.bracket_basis(i, j)
            val = algebra.b(x, br)
            if val:
                terms[(1 << i) | (1 << j)] = val / (space.gram[i] * space.gram[j])
    return Multivector(space, terms)


def form_of_trivector(algebra: QuadraticLieAlgebra, v: Multivector) -> MultilinearMap:
    """Read a degree-3 multivector back as the arity-3 map pairing(v, .^.^.)."""
    space = v.space
    if space.dim != algebra.dim:
        raise ContractViolation("multivector space does not match the algebra")
    from .clifford import pairing

    n = space.dim
    out = {}
    for idx in product(range(n), repeat=3):
        i, j, k = idx
        if len({i, j, k}) < 3:
            continue
        wedge = (space.generator(i) ^ space.generator(j)) ^ space.generator(k)
        val = pairing(v, wedge)
        if val:
            out[idx] = val
    res = MultilinearMap.zero(algebra, 3)
    res.values = out
    return res
