"""Build root groupoid schemes from Cartan matrices and bicharacter data.

The bicharacter constructor works purely on exponents of a root of unity
(or of a formal non-root-of-unity parameter in generic mode): the
reflection coefficients and the object equivalence depend only on the
diagonal exponents and the symmetrized off-diagonal sums, so objects are
discovered as fingerprints of those invariants.
"""

from __future__ import annotations

from .intmat import Matrix
from .scheme import GENERATED, RootGroupoidScheme

GENERIC = "generic"


class NotArithmeticError(ValueError):
    """No finite reflection coefficient exists at some (object, generator)."""


def _check_cartan(c: Matrix) -> int:
    n = len(c)
    if n == 0 or any(len(row) != n for row in c):
        raise ValueError("Cartan matrix must be square and nonempty")
    for i in range(n):
        if c[i][i] != 2:
            raise ValueError(f"Cartan matrix diagonal entry [{i}][{i}] must be 2")
        for j in range(n):
            if i != j:
                if c[i][j] > 0:
                    raise ValueError(f"Cartan matrix entry [{i}][{j}] must be nonpositive")
                if (c[i][j] == 0) != (c[j][i] == 0):
                    raise ValueError(f"Cartan matrix entries [{i}][{j}] and [{j}][{i}] must vanish together")
    return n


def from_cartan(c: Matrix) -> RootGroupoidScheme:
    """Scheme of a Cartan matrix: one object, trivial action.

    The reflection coefficient of generator i on index j is -c[i][j], so
    the reflection is the usual simple reflection of the root lattice.
    Returned in generated mode; call generate_roots to materialize.
    """
    n = _check_cartan(c)
    coefficients = (
        tuple(
            (tuple(-1 if j == i else -c[i][j] for j in range(n)),)
            for i in range(n)
        )
    )
    return RootGroupoidScheme(
        rank=n,
        objects=("a",),
        action=tuple((0,) for _ in range(n)),
        coefficients=coefficients,
        mode=GENERATED,
    )


# ---------------------------------------------------------------------------
# bicharacter exponents

Fingerprint = tuple[tuple[int, ...], tuple[int, ...]]


def basis_fingerprint(diag, sym, order: int | None) -> Fingerprint:
    """Equivalence-class invariant of a basis: diagonal exponents and
    symmetrized off-diagonal sums, reduced mod the order when finite.

    Two bases with equal fingerprints carry identical reflection data, so
    the object set is the set of distinct fingerprints.
    """
    if order is None:
        return tuple(diag), tuple(sym)
    return tuple(x % order for x in diag), tuple(x % order for x in sym)


def _sym_index(n: int, i: int, j: int) -> int:
    # position of the unordered pair in the packed upper triangle
    if i > j:
        i, j = j, i
    return i * n - i * (i + 1) // 2 + (j - i - 1)


def _coefficient(diag_i: int, sym_ij: int, order: int | None) -> int | None:
    """Smallest m >= 0 making the reflection admissible on index pair.

    Finite order: (m + 1) * d_i = 0 or m * d_i + s_ij = 0, both mod order.
    Generic: only the second condition can hold, over the integers.
    """
    if order is None:
        if diag_i == 0:
            return None
        if sym_ij % diag_i == 0 and -sym_ij // diag_i >= 0:
            return -sym_ij // diag_i
        return None
    for m in range(order):
        if ((m + 1) * diag_i) % order == 0 or (m * diag_i + sym_ij) % order == 0:
            return m
    return None


def from_bicharacter(
    exponents: Matrix, cutoff: int, order: int | None = None
) -> RootGroupoidScheme:
    """Scheme of a bicharacter given by an integer exponent matrix.

    ``order`` is the multiplicative order of the root of unity the
    exponents refer to; None means generic (the parameter is not a root
    of unity and exponent conditions are integer equalities).  ``cutoff``
    bounds the number of objects discovered before giving up.

    Objects are equivalence classes of bases under the fingerprint of
    basis_fingerprint; discovery is breadth-first, numbering objects by
    first appearance.  Raises NotArithmeticError when some reflection
    coefficient has no finite value or some diagonal exponent degenerates
    to zero, and ValueError when the object cutoff is exceeded.
    """
    n = len(exponents)
    if n == 0 or any(len(row) != n for row in exponents):
        raise ValueError("exponent matrix must be square and nonempty")
    if order is not None and order < 1:
        raise ValueError("order must be a positive integer")
    if cutoff < 1:
        raise ValueError("object cutoff must be at least 1")

    diag0 = [exponents[i][i] for i in range(n)]
    sym0 = [
        exponents[i][j] + exponents[j][i]
        for i in range(n)
        for j in range(i + 1, n)
    ]
    start = basis_fingerprint(diag0, sym0, order)

    def check_diag(fp: Fingerprint, label: str) -> None:
        diag = fp[0]
        for i, d in enumerate(diag):
            degenerate = (d % order == 0) if order is not None else (d == 0)
            if degenerate:
                raise NotArithmeticError(
                    f"diagonal exponent of index {i + 1} is trivial at object {label}"
                )

    check_diag(start, "0")

    index_of: dict[Fingerprint, int] = {start: 0}
    fingerprints: list[Fingerprint] = [start]
    action: list[list[int]] = [[] for _ in range(n)]
    coefficients: list[list[tuple[int, ...]]] = [[] for _ in range(n)]

    pos = 0
    while pos < len(fingerprints):
        fp = fingerprints[pos]
        diag, sym = fp
        for i in range(n):
            coeff = []
            for j in range(n):
                if j == i:
                    coeff.append(-1)
                    continue
                m = _coefficient(diag[i], sym[_sym_index(n, i, j)], order)
                if m is None:
                    raise NotArithmeticError(
                        f"not arithmetic at object {pos}, generator {i + 1}, index {j + 1}"
                    )
                coeff.append(m)
            new_diag = list(diag)
            new_sym = list(sym)
            for j in range(n):
                if j == i:
                    continue
                mj = coeff[j]
                new_diag[j] = diag[j] + mj * sym[_sym_index(n, i, j)] + mj * mj * diag[i]
            for j in range(n):
                for k in range(j + 1, n):
                    if i in (j, k):
                        other = k if i == j else j
                        mo = coeff[other]
                        new_sym[_sym_index(n, j, k)] = -(
                            sym[_sym_index(n, j, k)] + 2 * mo * diag[i]
                        )
                    else:
                        mj, mk = coeff[j], coeff[k]
                        new_sym[_sym_index(n, j, k)] = (
                            sym[_sym_index(n, j, k)]
                            + mj * sym[_sym_index(n, i, k)]
                            + mk * sym[_sym_index(n, i, j)]
                            + 2 * mj * mk * diag[i]
                        )
            target_fp = basis_fingerprint(new_diag, new_sym, order)
            if target_fp not in index_of:
                check_diag(target_fp, str(len(fingerprints)))
                if len(fingerprints) == cutoff:
                    raise ValueError(f"object cutoff {cutoff} exceeded")
                index_of[target_fp] = len(fingerprints)
                fingerprints.append(target_fp)
            action[i].append(index_of[target_fp])
            coefficients[i].append(tuple(coeff))
        pos += 1

    nobj = len(fingerprints)
    return RootGroupoidScheme(
        rank=n,
        objects=tuple(str(k) for k in range(nobj)),
        action=tuple(tuple(row) for row in action),
        coefficients=tuple(tuple(per) for per in coefficients),
        mode=GENERATED,
    )


def schemes_isomorphic(s1: RootGroupoidScheme, s2: RootGroupoidScheme) -> bool:
    """Whether an object bijection matches action and coefficient tables.

    Generators are kept fixed; the action is transitive, so a candidate
    image of object 0 propagates to a full bijection or a contradiction.
    """
    if s1.rank != s2.rank or s1.n_objects != s2.n_objects:
        return False
    for image0 in range(s2.n_objects):
        mapping = {0: image0}
        frontier = [0]
        ok = True
        while frontier and ok:
            a = frontier.pop(0)
            for i in range(s1.rank):
                if s1.coefficients[i][a] != s2.coefficients[i][mapping[a]]:
                    ok = False
                    break
                b = s1.action[i][a]
                image = s2.action[i][mapping[a]]
                if b in mapping:
                    if mapping[b] != image:
                        ok = False
                        break
                else:
                    if image in mapping.values():
                        ok = False
                        break
                    mapping[b] = image
                    frontier.append(b)
        if ok and len(mapping) == s1.n_objects:
            return True
    return False


# ---------------------------------------------------------------------------
# bundled example

def rank3_example() -> RootGroupoidScheme:
    """A rank-3 scheme with five objects and ten positive roots each.

    The five objects carry different Dynkin-type reflection data and are
    permuted nontrivially by the generator action, so this scheme
    exercises everything a single-object (Cartan) scheme cannot: braid
    relations whose lengths vary from object to object, object-changing
    reflections, and words that differ only in their object chains.  It
    is used as the standard fixture throughout the test suite.
    """
    a, b, c, d, e = 0, 1, 2, 3, 4
    action = (
        (c, d, a, b, e),  # generator 1
        (a, b, e, d, c),  # generator 2
        (b, a, d, c, e),  # generator 3
    )
    coefficients = (
        # generator 1: coefficients of alpha_1 added to the other simples
        (
            (-1, 1, 0),  # at a
            (-1, 1, 0),  # at b
            (-1, 1, 0),  # at c
            (-1, 1, 0),  # at d
            (-1, 1, 1),  # at e
        ),
        # generator 2
        (
            (1, -1, 2),  # at a
            (2, -1, 2),  # at b
            (1, -1, 1),  # at c
            (2, -1, 1),  # at d
            (1, -1, 1),  # at e
        ),
        # generator 3
        (
            (0, 1, -1),  # at a
            (0, 1, -1),  # at b
            (0, 1, -1),  # at c
            (0, 1, -1),  # at d
            (1, 1, -1),  # at e
        ),
    )
    roots = (
        # object a
        (
            (0, 0, 1), (0, 1, 0), (0, 1, 1), (0, 2, 1), (1, 0, 0),
            (1, 1, 0), (1, 1, 1), (1, 2, 1), (1, 2, 2), (1, 3, 2),
        ),
        # object b
        (
            (0, 0, 1), (0, 1, 0), (0, 1, 1), (0, 2, 1), (1, 0, 0),
            (1, 1, 0), (1, 1, 1), (1, 2, 0), (1, 2, 1), (1, 3, 1),
        ),
        # object c
        (
            (0, 0, 1), (0, 1, 0), (0, 1, 1), (1, 0, 0), (1, 1, 0),
            (1, 1, 1), (1, 2, 1), (1, 2, 2), (2, 2, 1), (2, 3, 2),
        ),
        # object d
        (
            (0, 0, 1), (0, 1, 0), (0, 1, 1), (1, 0, 0), (1, 1, 0),
            (1, 1, 1), (1, 2, 0), (1, 2, 1), (2, 2, 1), (2, 3, 1),
        ),
        # object e
        (
            (0, 0, 1), (0, 1, 0), (0, 1, 1), (1, 0, 0), (1, 0, 1),
            (1, 1, 0), (1, 1, 1), (1, 1, 2), (2, 1, 1), (2, 1, 2),
        ),
    )
    return RootGroupoidScheme(
        rank=3,
        objects=("a", "b", "c", "d", "e"),
        action=action,
        coefficients=coefficients,
        mode="prescribed",
        positive_roots=roots,
        status="finite",
    )
