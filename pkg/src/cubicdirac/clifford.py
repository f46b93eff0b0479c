"""Clifford algebra of an orthogonal rational quadratic space.

The space carries an orthogonal basis e_1..e_m with B(e_i, e_i) = d_i != 0
(no normalization is possible over Q, so the d_i travel through every
formula).  Multivectors are stored on the exterior-algebra basis of ordered
blades e_{i1}^...^e_{ik}, i1 < ... < ik, encoded as bitmasks; the Clifford
product is defined through that identification: a blade acts as the Clifford
product of its generators, and a generator acts as exterior multiplication
plus contraction,

    x * w = x ^ w + iota(x) w,

which encodes the defining relation x y + y x = 2 B(x, y).  The contraction
iota(x) is the transpose of wedging by x for the pairing extending B to
blades by Gram determinants.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .errors import ContractViolation
from .linalg import Matrix, ZERO, as_scalar, solve_linear, vector

ONE = Fraction(1)


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


class CliffordSpace:
    """An orthogonal basis with nonzero diagonal Gram entries."""

    __slots__ = ("dim", "gram")

    def __init__(self, gram: Sequence):
        self.gram = vector(gram)
        self.dim = len(self.gram)
        if any(d == 0 for d in self.gram):
            raise ContractViolation("Gram entries must be nonzero")

    def zero(self) -> "Multivector":
        return Multivector(self, {})

    def scalar(self, c) -> "Multivector":
        return Multivector(self, {0: as_scalar(c)})

    def one(self) -> "Multivector":
        return self.scalar(1)

    def generator(self, i: int) -> "Multivector":
        if not 0 <= i < self.dim:
            raise ContractViolation("generator index out of range")
        return Multivector(self, {1 << i: ONE})

    def vector(self, coords: Sequence) -> "Multivector":
        coords = vector(coords)
        if len(coords) != self.dim:
            raise ContractViolation("coordinate length does not match the space")
        return Multivector(self, {1 << i: c for i, c in enumerate(coords) if c})

    def blade(self, indices: Iterable[int], coeff=1) -> "Multivector":
        mask = 0
        for i in indices:
            bit = 1 << i
            if not 0 <= i < self.dim:
                raise ContractViolation("blade index out of range")
            if mask & bit:
                raise ContractViolation("blade indices must be distinct")
            mask |= bit
        return Multivector(self, {mask: as_scalar(coeff)})

    def basis_masks(self, degree: int | None = None) -> list[int]:
        masks = range(1 << self.dim)
        if degree is None:
            return list(masks)
        return [m for m in masks if m.bit_count() == degree]

    def __eq__(self, other) -> bool:
        return isinstance(other, CliffordSpace) and self.gram == other.gram

    def __hash__(self):
        return hash(self.gram)

    def __repr__(self) -> str:
        return f"CliffordSpace(gram={[str(d) for d in self.gram]})"


def _blade_clifford(space: CliffordSpace, ma: int, mb: int) -> tuple[Fraction, int]:
    """Clifford product of two blades is +-(product of Grams) times one blade."""
    coeff = ONE
    mask = mb
    for i in reversed(_bits(ma)):
        lower = mask & ((1 << i) - 1)
        if lower.bit_count() & 1:
            coeff = -coeff
        bit = 1 << i
        if mask & bit:
            coeff *= space.gram[i]
            mask &= ~bit
        else:
            mask |= bit
    return coeff, mask


def _blade_wedge(ma: int, mb: int) -> tuple[int, int] | None:
    if ma & mb:
        return None
    sign = 1
    for i in _bits(ma):
        if (mb & ((1 << i) - 1)).bit_count() & 1:
            sign = -sign
    return sign, ma | mb


class Multivector:
    """Element of the Clifford algebra on ordered-blade coordinates."""

    __slots__ = ("space", "terms")

    def __init__(self, space: CliffordSpace, terms: dict):
        self.space = space
        self.terms = {m: c for m, c in terms.items() if c}

    # -- ring structure ----------------------------------------------------

    def _check_space(self, other: "Multivector"):
        if self.space != other.space:
            raise ContractViolation("multivectors live on different spaces")

    def __add__(self, other: "Multivector") -> "Multivector":
        self._check_space(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, ZERO) + c
        return Multivector(self.space, out)

    def __sub__(self, other: "Multivector") -> "Multivector":
        return self + (-other)

    def __neg__(self) -> "Multivector":
        return Multivector(self.space, {m: -c for m, c in self.terms.items()})

    def __rmul__(self, scalar) -> "Multivector":
        c = as_scalar(scalar)
        return Multivector(self.space, {m: c * x for m, x in self.terms.items()})

    def __mul__(self, other):
        """Clifford product; scalars multiply coefficientwise."""
        if isinstance(other, (int, Fraction)):
            return self.__rmul__(other)
        self._check_space(other)
        out: dict[int, Fraction] = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                coeff, mask = _blade_clifford(self.space, ma, mb)
                acc = out.get(mask, ZERO) + ca * cb * coeff
                if acc:
                    out[mask] = acc
                elif mask in out:
                    del out[mask]
        return Multivector(self.space, out)

    def __xor__(self, other: "Multivector") -> "Multivector":
        """Exterior product (use parentheses: ^ binds loosely in Python)."""
        self._check_space(other)
        out: dict[int, Fraction] = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                hit = _blade_wedge(ma, mb)
                if hit is None:
                    continue
                sign, mask = hit
                acc = out.get(mask, ZERO) + sign * ca * cb
                if acc:
                    out[mask] = acc
                elif mask in out:
                    del out[mask]
        return Multivector(self.space, out)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Multivector)
            and self.space == other.space
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.space, tuple(sorted(self.terms.items()))))

    # -- grading -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree_part(self, k: int) -> "Multivector":
        return Multivector(self.space, {m: c for m, c in self.terms.items() if m.bit_count() == k})

    def degrees(self) -> set[int]:
        return {m.bit_count() for m in self.terms}

    def parity(self) -> int | None:
        """0 for even, 1 for odd, None for inhomogeneous; zero counts as even."""
        ps = {m.bit_count() & 1 for m in self.terms}
        if not ps:
            return 0
        if len(ps) == 1:
            return ps.pop()
        return None

    def grade_involution(self) -> "Multivector":
        """The automorphism acting by (-1)^k on degree k."""
        return Multivector(
            self.space,
            {m: (-c if m.bit_count() & 1 else c) for m, c in self.terms.items()},
        )

    def coefficient(self, indices: Iterable[int]) -> Fraction:
        mask = 0
        for i in indices:
            mask |= 1 << i
        return self.terms.get(mask, ZERO)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for m in sorted(self.terms, key=lambda m: (m.bit_count(), m)):
            c = self.terms[m]
            if m == 0:
                bits.append(str(c))
            else:
                blade = "^".join(f"e{i + 1}" for i in _bits(m))
                bits.append(blade if c == 1 else f"{c}*{blade}")
        return " + ".join(bits)


def scalar_part(a: Multivector) -> Fraction:
    return a.terms.get(0, ZERO)


def is_scalar(a: Multivector) -> bool:
    return all(m == 0 for m in a.terms)


def contract(x: Multivector, w: Multivector) -> Multivector:
    """iota(x) w for degree-1 x: the B-transpose of wedging by x.

    On blades: iota(e_i) kills blades without i, and removes i with the sign
    of its position and a factor d_i otherwise.  It is an odd derivation of
    the exterior algebra.
    """
    if any(m.bit_count() != 1 for m in x.terms):
        raise ContractViolation("contraction direction must have pure degree 1")
    x._check_space(w)
    space = x.space
    out: dict[int, Fraction] = {}
    for mx, cx in x.terms.items():
        i = mx.bit_length() - 1
        d = space.gram[i]
        for mw, cw in w.terms.items():
            if not mw & mx:
                continue
            sign = -1 if (mw & (mx - 1)).bit_count() & 1 else 1
            mask = mw ^ mx
            acc = out.get(mask, ZERO) + sign * cx * cw * d
            if acc:
                out[mask] = acc
            elif mask in out:
                del out[mask]
    return Multivector(space, out)


def pairing(a: Multivector, b: Multivector) -> Fraction:
    """The extension of B to blades: Gram determinants, diagonal here."""
    a._check_space(b)
    total = ZERO
    for m, ca in a.terms.items():
        cb = b.terms.get(m)
        if cb:
            prod = ca * cb
            for i in _bits(m):
                prod *= a.space.gram[i]
            total += prod
    return total


def _perm_sign3(t: tuple[int, int, int]) -> int:
    a, b, c = t
    sign = 1
    if a > b:
        a, b = b, a
        sign = -sign
    if b > c:
        b, c = c, b
        sign = -sign
    if a > b:
        a, b = b, a
        sign = -sign
    return sign


def multivector_from_trilinear(space: CliffordSpace, t: Callable[[int, int, int], object]) -> Multivector:
    """The unique degree-3 multivector v with pairing(v, x^y^z) = t(x,y,z).

    t is evaluated on basis indices and must be alternating; that is verified
    on every ordered triple before constructing v.
    """
    m = space.dim
    values = {}
    for i in range(m):
        for j in range(m):
            for k in range(m):
                values[(i, j, k)] = as_scalar(t(i, j, k))
    for (i, j, k), val in values.items():
        if len({i, j, k}) < 3:
            if val != 0:
                raise ContractViolation(f"trilinear map not alternating at {(i, j, k)}")
            continue
        srt = tuple(sorted((i, j, k)))
        if val != _perm_sign3((i, j, k)) * values[srt]:
            raise ContractViolation(f"trilinear map not alternating at {(i, j, k)}")
    terms = {}
    for i in range(m):
        for j in range(i + 1, m):
            for k in range(j + 1, m):
                val = values[(i, j, k)]
                if val:
                    mask = (1 << i) | (1 << j) | (1 << k)
                    terms[mask] = val / (space.gram[i] * space.gram[j] * space.gram[k])
    return Multivector(space, terms)


def twisted_commutator(v: Multivector, a: Multivector) -> Multivector:
    """v a - kappa(a) v, the odd-twisted bracket with v (kappa = grade involution).

    For odd v this operator is an odd derivation of the Clifford algebra and
    its square is the plain commutator with v*v.
    """
    return v * a - a.grade_involution() * v


def spin_lift(space: CliffordSpace, a: Matrix) -> Multivector:
    """The degree-2 Clifford element alpha with [alpha, x] = A x on degree 1.

    A must be in so of the Gram (Gram * A antisymmetric).  alpha is found by
    solving the defining commutator equations rather than by a closed formula,
    then re-verified on every generator.
    """
    m = space.dim
    if a.rows != m or a.cols != m:
        raise ContractViolation("matrix shape does not match the space")
    for i in range(m):
        for j in range(m):
            if space.gram[i] * a.entry(i, j) != -space.gram[j] * a.entry(j, i):
                raise ContractViolation("matrix is not in so of the Gram")
    pairs = [(i, j) for i in range(m) for j in range(i + 1, m)]
    if not pairs:
        if any(a.entry(i, j) for i in range(m) for j in range(m)):
            raise ContractViolation("no degree-2 element can realize this action")
        return space.zero()
    rows = []
    rhs = []
    columns_of = []
    for u, (i, j) in enumerate(pairs):
        blade = space.blade((i, j))
        cols_for_pair = []
        for l in range(m):
            gen = space.generator(l)
            com = blade * gen - gen * blade
            cols_for_pair.append([com.terms.get(1 << t, ZERO) for t in range(m)])
        columns_of.append(cols_for_pair)
    for l in range(m):
        for t in range(m):
            rows.append([columns_of[u][l][t] for u in range(len(pairs))])
            rhs.append(a.entry(t, l))
    sol = solve_linear(Matrix(rows, cols=len(pairs)), rhs)
    if sol is None:
        raise ContractViolation("commutator system is inconsistent")
    alpha = Multivector(
        space,
        {(1 << i) | (1 << j): c for (i, j), c in zip(pairs, sol.vector) if c},
    )
    for l in range(m):
        gen = space.generator(l)
        if alpha * gen - gen * alpha != space.vector(a.column(l)):
            raise ContractViolation("internal: spin lift failed re-verification")
    return alpha
