"""Quadratic Lie algebras over Q and orthogonal splittings.

A quadratic Lie algebra carries a symmetric non-degenerate bilinear form B
that is ad-invariant: B([x,y],z) + B(y,[x,z]) = 0.  Structure constants are
stored per unordered basis pair (i < j) as a dense coefficient vector; the
constructor validates antisymmetry conventions, the Jacobi identity,
non-degeneracy and ad-invariance eagerly, so an instance is always a genuine
quadratic Lie algebra.

`orthogonal_split` decomposes g = h + h_perp for a non-degenerate subalgebra
h, produces B-orthogonal bases of both parts (over Q one cannot normalize, so
the diagonal Gram entries d_i replace unit lengths), and re-expresses the
whole algebra in the adapted basis (h_perp vectors first, then h vectors)
where B is diagonal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import (
    ContractViolation,
    DegenerateFormError,
    NotASubalgebraError,
    ValidationError,
)
from .linalg import (
    Matrix,
    ZERO,
    as_scalar,
    diagonalize_form,
    invert,
    is_zero_vector,
    nullspace,
    rank,
    solve_linear,
    vec_add,
    vec_scale,
    vector,
)

BracketTable = dict[tuple[int, int], tuple[Fraction, ...]]


def normalize_brackets(dim: int, raw: Mapping) -> BracketTable:
    """Coerce a {(i, j): coefficient-vector} table, i < j, dropping zeros."""
    table: BracketTable = {}
    for (i, j), coeffs in raw.items():
        if not (0 <= i < dim and 0 <= j < dim):
            raise ContractViolation(f"bracket index ({i},{j}) out of range")
        if i >= j:
            raise ContractViolation(f"bracket pairs must have i < j, got ({i},{j})")
        vec = vector(coeffs)
        if len(vec) != dim:
            raise ContractViolation(f"bracket ({i},{j}) coefficient vector has wrong length")
        if not is_zero_vector(vec):
            table[(i, j)] = vec
    return table


def bracket_of(dim: int, table: BracketTable, i: int, j: int) -> tuple[Fraction, ...]:
    """[e_i, e_j] as a coordinate vector, for any index order."""
    if i == j:
        return (ZERO,) * dim
    if i < j:
        return table.get((i, j), (ZERO,) * dim)
    flipped = table.get((j, i))
    if flipped is None:
        return (ZERO,) * dim
    return tuple(-c for c in flipped)


def _bracket_vectors(dim: int, table: BracketTable, x: Sequence, y: Sequence):
    out = [ZERO] * dim
    for (i, j), coeffs in table.items():
        factor = x[i] * y[j] - x[j] * y[i]
        if factor:
            for k, c in enumerate(coeffs):
                if c:
                    out[k] += factor * c
    return tuple(out)


def check_jacobi(dim: int, table: BracketTable):
    """None if the Jacobi identity holds; otherwise the first failing (i,j,k)."""
    for i in range(dim):
        for j in range(i + 1, dim):
            vij = bracket_of(dim, table, i, j)
            for k in range(j + 1, dim):
                vjk = bracket_of(dim, table, j, k)
                vki = bracket_of(dim, table, k, i)
                total = [ZERO] * dim
                for a in range(dim):
                    if vij[a]:
                        for t, c in enumerate(bracket_of(dim, table, a, k)):
                            total[t] += vij[a] * c
                    if vjk[a]:
                        for t, c in enumerate(bracket_of(dim, table, a, i)):
                            total[t] += vjk[a] * c
                    if vki[a]:
                        for t, c in enumerate(bracket_of(dim, table, a, j)):
                            total[t] += vki[a] * c
                if any(total):
                    return (i, j, k)
    return None


def check_ad_invariance(dim: int, table: BracketTable, form: Matrix):
    """None if B([x,y],z) + B(y,[x,z]) = 0 on all basis triples; else (i,j,k)."""
    for i in range(dim):
        for j in range(dim):
            vij = bracket_of(dim, table, i, j)
            for k in range(dim):
                vik = bracket_of(dim, table, i, k)
                s = sum((vij[a] * form.entry(a, k) for a in range(dim)), ZERO)
                s += sum((form.entry(j, a) * vik[a] for a in range(dim)), ZERO)
                if s != 0:
                    return (i, j, k)
    return None


def ad_matrix(dim: int, table: BracketTable, x: Sequence) -> Matrix:
    """Matrix of ad(x) = [x, .] on the basis, columns indexed by the argument."""
    x = vector(x)
    cols = []
    for s in range(dim):
        col = [ZERO] * dim
        for i, xi in enumerate(x):
            if xi:
                for k, c in enumerate(bracket_of(dim, table, i, s)):
                    col[k] += xi * c
        cols.append(tuple(col))
    return Matrix.from_columns(cols, rows=dim)


def killing_form(dim: int, table: BracketTable) -> Matrix:
    """K(x,y) = trace(ad x ad y) by brute force; may be degenerate."""
    ads = [ad_matrix(dim, table, [ZERO] * i + [Fraction(1)] + [ZERO] * (dim - i - 1)) for i in range(dim)]
    entries = []
    for i in range(dim):
        row = []
        for j in range(dim):
            t = sum(
                (ads[i].entry(a, b) * ads[j].entry(b, a) for a in range(dim) for b in range(dim)),
                ZERO,
            )
            row.append(t)
        entries.append(row)
    return Matrix(entries, cols=dim)


class QuadraticLieAlgebra:
    """A validated quadratic Lie algebra given by structure constants."""

    __slots__ = ("name", "dim", "labels", "form", "_table", "_sparse")

    def __init__(self, name: str, labels: Sequence[str], brackets: Mapping, form: Matrix):
        self.name = name
        self.labels = tuple(labels)
        self.dim = len(self.labels)
        if self.dim == 0:
            raise ContractViolation("algebra must have positive dimension")
        if len(set(self.labels)) != self.dim:
            raise ContractViolation("basis labels must be distinct")
        self._table = normalize_brackets(self.dim, brackets)
        if form.rows != self.dim or form.cols != self.dim:
            raise ContractViolation("form matrix shape does not match dimension")
        if not form.is_symmetric():
            bad = next(
                (i, j)
                for i in range(self.dim)
                for j in range(self.dim)
                if form.entry(i, j) != form.entry(j, i)
            )
            raise ValidationError("form-symmetric", witness=bad)
        self.form = form

        w = check_jacobi(self.dim, self._table)
        if w is not None:
            raise ValidationError("jacobi", witness=tuple(self.labels[a] for a in w))
        kernel = nullspace(form)
        if kernel:
            raise ValidationError(
                "form-non-degenerate",
                witness=kernel[0],
                detail="the bilinear form has a nonzero kernel vector",
            )
        w = check_ad_invariance(self.dim, self._table, form)
        if w is not None:
            raise ValidationError("ad-invariance", witness=tuple(self.labels[a] for a in w))

        sparse = {}
        for i in range(self.dim):
            for j in range(self.dim):
                coeffs = bracket_of(self.dim, self._table, i, j)
                sparse[(i, j)] = tuple((k, c) for k, c in enumerate(coeffs) if c)
        self._sparse = sparse

    # -- bracket and form access ------------------------------------------

    def bracket_basis(self, i: int, j: int) -> tuple[Fraction, ...]:
        return bracket_of(self.dim, self._table, i, j)

    def bracket_sparse(self, i: int, j: int):
        """[(k, coeff), ...] for [e_i, e_j]; empty tuple when the bracket vanishes."""
        return self._sparse[(i, j)]

    def bracket(self, x: Sequence, y: Sequence) -> tuple[Fraction, ...]:
        return _bracket_vectors(self.dim, self._table, vector(x), vector(y))

    def bracket_table(self) -> BracketTable:
        return dict(self._table)

    def b(self, x: Sequence, y: Sequence) -> Fraction:
        x, y = vector(x), vector(y)
        return sum(
            (x[i] * self.form.entry(i, j) * y[j] for i in range(self.dim) for j in range(self.dim) if x[i] and self.form.entry(i, j)),
            ZERO,
        )

    def b_basis(self, i: int, j: int) -> Fraction:
        return self.form.entry(i, j)

    def is_abelian(self) -> bool:
        return not self._table

    def killing(self) -> Matrix:
        return killing_form(self.dim, self._table)

    def __repr__(self) -> str:
        return f"QuadraticLieAlgebra({self.name}, dim={self.dim})"


@dataclass(frozen=True)
class OrthogonalSplit:
    """g = h + h_perp with B-orthogonal bases of both parts.

    p_vectors / h_vectors hold the orthogonalized bases in ambient
    coordinates; p_gram / h_gram are the corresponding diagonal Gram entries.
    `adapted` is the same Lie algebra re-expressed in the basis
    (p_1..p_m, h_1..h_k), where the form is diag(p_gram + h_gram).
    from_adapted maps adapted coordinates to ambient ones (its columns are the
    adapted basis vectors); to_adapted is its inverse.
    """

    ambient: QuadraticLieAlgebra
    p_vectors: tuple[tuple[Fraction, ...], ...]
    h_vectors: tuple[tuple[Fraction, ...], ...]
    p_gram: tuple[Fraction, ...]
    h_gram: tuple[Fraction, ...]
    adapted: QuadraticLieAlgebra
    from_adapted: Matrix
    to_adapted: Matrix

    @property
    def p_dim(self) -> int:
        return len(self.p_vectors)

    @property
    def h_dim(self) -> int:
        return len(self.h_vectors)

    def subalgebra_as_algebra(self) -> QuadraticLieAlgebra:
        """h as a standalone quadratic Lie algebra in its orthogonal basis."""
        if self.h_dim == 0:
            raise ContractViolation("the split has no subalgebra part")
        m, k = self.p_dim, self.h_dim
        brackets = {}
        for i in range(k):
            for j in range(i + 1, k):
                full = self.adapted.bracket_basis(m + i, m + j)
                if any(full[:m]):
                    raise NotASubalgebraError(
                        "subalgebra bracket leaks into the complement", witness=(i, j)
                    )
                brackets[(i, j)] = full[m:]
        form = Matrix(
            [[self.h_gram[i] if i == j else ZERO for j in range(k)] for i in range(k)],
            cols=k,
        )
        labels = tuple(f"h{i + 1}" for i in range(k))
        return QuadraticLieAlgebra(f"{self.ambient.name}|h", labels, brackets, form)


def _span_solver(vectors: Sequence[Sequence[Fraction]], dim: int) -> Matrix:
    return Matrix.from_columns([vector(v) for v in vectors], rows=dim)


def orthogonal_split(
    g: QuadraticLieAlgebra,
    subalgebra: Sequence[Sequence] = (),
    p_variant: int = 0,
) -> OrthogonalSplit:
    """Split g along a subalgebra with non-degenerate restricted form.

    `subalgebra` is a list of ambient coordinate vectors spanning h (possibly
    empty).  `p_variant` deterministically reshapes the complement basis
    before orthogonalization; any value yields a valid split, different values
    usually yield genuinely different orthogonal bases of h_perp, which the
    basis-independence checks rely on.
    """
    n = g.dim
    h_raw = [vector(v) for v in subalgebra]
    for v in h_raw:
        if len(v) != n:
            raise ContractViolation("subalgebra vector length does not match the algebra")
    k = len(h_raw)

    if k:
        hmat = _span_solver(h_raw, n)
        if rank(hmat) != k:
            raise NotASubalgebraError("subalgebra vectors are linearly dependent")
        for i in range(k):
            for j in range(i + 1, k):
                br = g.bracket(h_raw[i], h_raw[j])
                if solve_linear(hmat, br) is None:
                    raise NotASubalgebraError(
                        "not closed under the bracket", witness=(i, j)
                    )
        gram_h = Matrix(
            [[g.b(h_raw[i], h_raw[j]) for j in range(k)] for i in range(k)], cols=k
        )
        try:
            p_h, h_gram = diagonalize_form(gram_h)
        except DegenerateFormError as exc:
            raise DegenerateFormError(
                "the form restricted to the subalgebra is degenerate",
                witness=exc.witness,
            ) from exc
        h_vectors = []
        for col in p_h.columns():
            acc = (ZERO,) * n
            for c, hv in zip(col, h_raw):
                acc = vec_add(acc, vec_scale(c, hv))
            h_vectors.append(acc)
        # h_perp = kernel of x -> (B(h_i, x))_i
        pairing_rows = Matrix(
            [[g.b(h_raw[i], unit(n, s)) for s in range(n)] for i in range(k)], cols=n
        )
        complement = nullspace(pairing_rows)
    else:
        h_vectors = []
        h_gram = ()
        complement = nullspace(Matrix.zero(0, n))

    if p_variant and len(complement) >= 2:
        complement = list(reversed(complement))
        for _ in range(p_variant):
            complement[0] = vec_add(complement[0], complement[1])

    m = len(complement)
    if m:
        gram_p = Matrix(
            [[g.b(complement[i], complement[j]) for j in range(m)] for i in range(m)],
            cols=m,
        )
        p_p, p_gram = diagonalize_form(gram_p)
        p_vectors = []
        for col in p_p.columns():
            acc = (ZERO,) * n
            for c, pv in zip(col, complement):
                acc = vec_add(acc, vec_scale(c, pv))
            p_vectors.append(acc)
    else:
        p_vectors = []
        p_gram = ()

    for hv in h_vectors:
        for pv in p_vectors:
            if g.b(hv, pv) != 0:
                raise ContractViolation("internal: split bases are not B-orthogonal")

    from_adapted = Matrix.from_columns(list(p_vectors) + list(h_vectors), rows=n)
    to_adapted = invert(from_adapted)
    grams = tuple(p_gram) + tuple(h_gram)
    adapted_form = Matrix(
        [[grams[i] if i == j else ZERO for j in range(n)] for i in range(n)], cols=n
    )
    check = from_adapted.transpose() @ g.form @ from_adapted
    if check != adapted_form:
        raise ContractViolation("internal: adapted form mismatch")

    adapted_brackets = {}
    cols = from_adapted.columns()
    for i in range(n):
        for j in range(i + 1, n):
            br = g.bracket(cols[i], cols[j])
            adapted_brackets[(i, j)] = to_adapted.mat_vec(br)
    labels = tuple(f"p{i + 1}" for i in range(m)) + tuple(f"h{j + 1}" for j in range(len(h_vectors)))
    adapted = QuadraticLieAlgebra(f"{g.name}#adapted", labels, adapted_brackets, adapted_form)

    # ad-invariance makes h_perp an h-module; check it anyway
    for j in range(len(h_vectors)):
        for i in range(m):
            if any(adapted.bracket_basis(m + j, i)[m:]):
                raise ContractViolation("internal: [h, h_perp] leaves h_perp")

    return OrthogonalSplit(
        ambient=g,
        p_vectors=tuple(p_vectors),
        h_vectors=tuple(h_vectors),
        p_gram=tuple(p_gram),
        h_gram=tuple(h_gram),
        adapted=adapted,
        from_adapted=from_adapted,
        to_adapted=to_adapted,
    )


def unit(n: int, i: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(1) if s == i else ZERO for s in range(n))


def subalgebra_action(split: OrthogonalSplit, y_ambient: Sequence) -> Matrix:
    """Matrix of ad(y) restricted to h_perp, in the orthogonal p-basis.

    y must lie in the span of the subalgebra.  The result lies in so of the
    diagonal Gram: Gram * A is antisymmetric.
    """
    y_ad = split.to_adapted.mat_vec(vector(y_ambient))
    m = split.p_dim
    if any(y_ad[:m]):
        raise ContractViolation("vector is not in the subalgebra span")
    cols = []
    for i in range(m):
        acc = [ZERO] * m
        for j, c in enumerate(y_ad[m:]):
            if c:
                br = split.adapted.bracket_basis(m + j, i)
                if any(br[m:]):
                    raise ContractViolation("internal: action leaves h_perp")
                for t in range(m):
                    acc[t] += c * br[t]
        cols.append(tuple(acc))
    mat = Matrix.from_columns(cols, rows=m)
    for i in range(m):
        for j in range(m):
            if split.p_gram[i] * mat.entry(i, j) != -split.p_gram[j] * mat.entry(j, i):
                raise ContractViolation("internal: restricted action is not in so(Gram)")
    return mat
