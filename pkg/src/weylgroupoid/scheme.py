"""Root groupoid schemes: data model, file format, and axiom validation.

A scheme bundles a finite set of objects, an involutive action of the
generators on the objects, and one reflection coefficient vector per
(generator, object) pair.  Each object carries its own integer coordinate
system in which its simple roots are the standard basis vectors, so the
reflection attached to generator ``i`` at object ``a`` is the integer
matrix that negates coordinate ``i`` and adds nonnegative multiples of it
to the others, mapping ``a``-coordinates to ``(i |> a)``-coordinates.

Positive root sets are stored as positive halves only; the full root set
of an object is implicitly the union of the stored half and its negative.
Schemes are immutable; operations that "fill in" data (root generation)
return a new scheme.

Generators and objects are 0-based integers throughout the API.  Witness
strings in validation reports use 1-based generator labels and object
names, matching the command-line convention.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from typing import Iterable, Sequence

from .intmat import (
    Matrix,
    Vector,
    basis_vector,
    identity_matrix,
    is_nonneg,
    is_zero,
    mat_mul,
    mat_vec,
    neg,
)

PRESCRIBED = "prescribed"
GENERATED = "generated"

FINITE = "finite"
TRUNCATED = "truncated"


class SchemeFormatError(ValueError):
    """A scheme file is malformed; the message names the offending field."""


@dataclass(frozen=True)
class RootGroupoidScheme:
    """The combinatorial core: objects, generator action, reflection data.

    Fields:
      rank            number of generators
      objects         display names, one per object
      action          action[i][a] = the object reached from a by generator i
      coefficients    coefficients[i][a][j] = multiple of the i-th simple
                      root added to the j-th one by the reflection at
                      (i, a); the entry at j == i is unused and set to -1
      mode            "prescribed" (root sets given) or "generated"
                      (root sets computed on demand)
      positive_roots  per object, the sorted tuple of positive roots, or
                      None when not yet materialized
      status          "finite" when the stored root sets are known to be
                      complete, "truncated" when generation hit its height
                      cutoff, None when no roots are stored
      cutoff          height bound used at generation time, if any
    """

    rank: int
    objects: tuple[str, ...]
    action: tuple[tuple[int, ...], ...]
    coefficients: tuple[tuple[tuple[int, ...], ...], ...]
    mode: str
    positive_roots: tuple[tuple[Vector, ...], ...] | None = None
    status: str | None = None
    cutoff: int | None = None

    @property
    def n_objects(self) -> int:
        return len(self.objects)

    def object_index(self, name: str) -> int:
        try:
            return self.objects.index(name)
        except ValueError:
            raise ValueError(f"unknown object name {name!r}") from None

    def simple_root(self, j: int) -> Vector:
        return basis_vector(self.rank, j)


def check_generator(s: RootGroupoidScheme, i: int) -> None:
    if not 0 <= i < s.rank:
        raise ValueError(f"generator index {i} out of range 0..{s.rank - 1}")


def check_object(s: RootGroupoidScheme, a: int) -> None:
    if not 0 <= a < s.n_objects:
        raise ValueError(f"object index {a} out of range 0..{s.n_objects - 1}")


def act(s: RootGroupoidScheme, i: int, a: int) -> int:
    """Apply generator i to object a."""
    check_generator(s, i)
    check_object(s, a)
    return s.action[i][a]


def act_word(s: RootGroupoidScheme, letters: Sequence[int], a: int) -> int:
    """Apply a word of generators to an object, rightmost letter first."""
    check_object(s, a)
    obj = a
    for i in reversed(letters):
        check_generator(s, i)
        obj = s.action[i][obj]
    return obj


def theta(s: RootGroupoidScheme, i: int, j: int, a: int) -> int:
    """Size of the two-generator orbit of an object.

    Computed by the interleaved recursion a_{m+1} = i |> b_m,
    b_{m+1} = j |> a_m starting from a_0 = b_0 = a; the value is the
    least m >= 1 with a_m == b_m.  The object set is finite, so the
    recursion always terminates.  Symmetric in i and j, and constant
    along the orbit itself.
    """
    check_generator(s, i)
    check_generator(s, j)
    check_object(s, a)
    if i == j:
        raise ValueError("theta requires two distinct generators")
    am, bm = a, a
    limit = 2 * s.n_objects * s.n_objects + 2
    for m in range(1, limit + 1):
        am, bm = s.action[i][bm], s.action[j][am]
        if am == bm:
            return m
    raise RuntimeError("theta recursion did not close on a finite object set")


def reflection_matrix(s: RootGroupoidScheme, i: int, a: int) -> Matrix:
    """Matrix of the reflection at (i, a), from a- to (i |> a)-coordinates.

    Row i is the coefficient vector with -1 in position i; all other rows
    are standard basis rows.  Such matrices are involutions, so the
    reflection at (i, i |> a) with the same coefficients inverts this one.
    """
    check_generator(s, i)
    check_object(s, a)
    coeffs = s.coefficients[i][a]
    rows = []
    for r in range(s.rank):
        if r == i:
            rows.append(tuple(-1 if j == i else coeffs[j] for j in range(s.rank)))
        else:
            rows.append(basis_vector(s.rank, r))
    return tuple(rows)


def full_root_set(s: RootGroupoidScheme, a: int) -> frozenset[Vector]:
    """Both halves of the stored root set of an object."""
    if s.positive_roots is None:
        raise ValueError("root sets are not materialized")
    pos = s.positive_roots[a]
    return frozenset(pos) | frozenset(neg(r) for r in pos)


# ---------------------------------------------------------------------------
# file format

_MODES = (PRESCRIBED, GENERATED)


def _as_int(value, where: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise SchemeFormatError(f"{where}: expected an integer, got {value!r}")
    return value


def load_scheme(text: str) -> RootGroupoidScheme:
    """Parse a scheme file (UTF-8 JSON).

    Structural checks only: table dimensions, index ranges, involutivity
    of the action, nonnegative coefficients, well-formed root vectors.
    The root-system axioms are checked separately by validate().
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemeFormatError(f"not valid JSON: {e}") from None
    if not isinstance(data, dict):
        raise SchemeFormatError("top level: expected a JSON object")

    for field in ("rank", "objects", "action", "coefficients", "mode"):
        if field not in data:
            raise SchemeFormatError(f"missing field {field!r}")

    rank = _as_int(data["rank"], "rank")
    if rank < 1:
        raise SchemeFormatError("rank: must be at least 1")

    names = data["objects"]
    if not isinstance(names, list) or not names or not all(isinstance(x, str) for x in names):
        raise SchemeFormatError("objects: expected a nonempty array of strings")
    if len(set(names)) != len(names):
        dup = next(x for i, x in enumerate(names) if x in names[:i])
        raise SchemeFormatError(f"objects: duplicate object name {dup!r}")
    nobj = len(names)

    action_raw = data["action"]
    if not isinstance(action_raw, list) or len(action_raw) != rank:
        raise SchemeFormatError(f"action: expected {rank} rows")
    action = []
    for i, row in enumerate(action_raw):
        if not isinstance(row, list) or len(row) != nobj:
            raise SchemeFormatError(f"action[{i}]: expected {nobj} entries")
        for a, t in enumerate(row):
            t = _as_int(t, f"action[{i}][{a}]")
            if not 0 <= t < nobj:
                raise SchemeFormatError(f"action[{i}][{a}]: object index {t} out of range")
        action.append(tuple(row))
    for i in range(rank):
        for a in range(nobj):
            if action[i][action[i][a]] != a:
                raise SchemeFormatError(
                    f"action[{i}][{a}]: generator action is not involutive at object {names[a]!r}"
                )

    coeff_raw = data["coefficients"]
    if not isinstance(coeff_raw, list) or len(coeff_raw) != rank:
        raise SchemeFormatError(f"coefficients: expected {rank} rows")
    coefficients = []
    for i, per_obj in enumerate(coeff_raw):
        if not isinstance(per_obj, list) or len(per_obj) != nobj:
            raise SchemeFormatError(f"coefficients[{i}]: expected {nobj} entries")
        rows = []
        for a, vec in enumerate(per_obj):
            if not isinstance(vec, list) or len(vec) != rank:
                raise SchemeFormatError(f"coefficients[{i}][{a}]: expected {rank} integers")
            vec = tuple(_as_int(x, f"coefficients[{i}][{a}][{j}]") for j, x in enumerate(vec))
            if vec[i] != -1:
                raise SchemeFormatError(
                    f"coefficients[{i}][{a}][{i}]: unused entry must be -1 by convention"
                )
            for j, c in enumerate(vec):
                if j != i and c < 0:
                    raise SchemeFormatError(
                        f"coefficients[{i}][{a}][{j}]: reflection coefficients must be nonnegative"
                    )
            rows.append(vec)
        coefficients.append(tuple(rows))

    mode = data["mode"]
    if mode not in _MODES:
        raise SchemeFormatError(f"mode: expected one of {_MODES}, got {mode!r}")

    positive_roots = None
    status = None
    if mode == PRESCRIBED:
        if "roots" not in data:
            raise SchemeFormatError("roots: required in prescribed mode")
        roots_raw = data["roots"]
        if not isinstance(roots_raw, list) or len(roots_raw) != nobj:
            raise SchemeFormatError(f"roots: expected {nobj} per-object arrays")
        per_object = []
        for a, vecs in enumerate(roots_raw):
            if not isinstance(vecs, list):
                raise SchemeFormatError(f"roots[{a}]: expected an array of vectors")
            seen = set()
            rows = []
            for k, v in enumerate(vecs):
                if not isinstance(v, list) or len(v) != rank:
                    raise SchemeFormatError(f"roots[{a}][{k}]: expected {rank} integers")
                v = tuple(_as_int(x, f"roots[{a}][{k}]") for x in v)
                if is_zero(v):
                    raise SchemeFormatError(f"roots[{a}][{k}]: roots must be nonzero")
                if v in seen:
                    raise SchemeFormatError(f"roots[{a}][{k}]: duplicate root {list(v)}")
                seen.add(v)
                rows.append(v)
            for j in range(rank):
                if basis_vector(rank, j) not in seen:
                    raise SchemeFormatError(
                        f"roots[{a}]: missing simple root {j + 1} of object {names[a]!r}"
                    )
            per_object.append(tuple(sorted(rows)))
        positive_roots = tuple(per_object)
        status = FINITE
    elif "roots" in data and data["roots"] is not None:
        raise SchemeFormatError("roots: must be absent in generated mode")

    return RootGroupoidScheme(
        rank=rank,
        objects=tuple(names),
        action=tuple(action),
        coefficients=tuple(coefficients),
        mode=mode,
        positive_roots=positive_roots,
        status=status,
    )


def save_scheme(s: RootGroupoidScheme) -> str:
    """Serialize to the scheme file format with normalized ordering."""
    doc: dict = {
        "rank": s.rank,
        "objects": list(s.objects),
        "action": [list(row) for row in s.action],
        "coefficients": [[list(vec) for vec in per_obj] for per_obj in s.coefficients],
        "mode": s.mode,
    }
    if s.mode == PRESCRIBED:
        if s.positive_roots is None:
            raise ValueError("prescribed scheme has no root sets to save")
        doc["roots"] = [[list(r) for r in sorted(pos)] for pos in s.positive_roots]
    return json.dumps(doc, indent=2) + "\n"


def strip_roots(s: RootGroupoidScheme) -> RootGroupoidScheme:
    """Forget stored root sets, switching the scheme to generated mode."""
    return replace(s, mode=GENERATED, positive_roots=None, status=None, cutoff=None)


# ---------------------------------------------------------------------------
# validation

AXIOM_DESCRIPTIONS = {
    1: "the generator action is involutive and transitive",
    2: "every object stores its simple roots, all roots nonzero",
    3: "stored roots are sign coherent (all coordinates nonnegative)",
    4: "no simple root has a stored multiple other than itself",
    5: "each reflection maps the root set onto the target root set",
    6: "opposite reflections compose to the identity",
    7: "theta divides the rank-two root count",
}


@dataclass(frozen=True)
class AxiomResult:
    axiom: int
    passed: bool
    checked: int
    witness: str | None = None

    @property
    def description(self) -> str:
        return AXIOM_DESCRIPTIONS[self.axiom]


@dataclass(frozen=True)
class ValidationReport:
    results: tuple[AxiomResult, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def result(self, axiom: int) -> AxiomResult:
        return self.results[axiom - 1]


def _gen_label(i: int) -> str:
    return str(i + 1)


def _root_label(r: Vector) -> str:
    return "(" + ",".join(str(x) for x in r) + ")"


def validate(s: RootGroupoidScheme) -> ValidationReport:
    """Check the seven root-system axioms against the stored data.

    Root sets must be materialized first (prescribed schemes store them,
    generated schemes acquire them via generate_roots).  Failures are
    reported with the first counterexample in ascending (generator,
    object) order, never raised.
    """
    if s.positive_roots is None:
        raise ValueError("root sets are not materialized; generate them before validating")

    results = []

    # axiom 1: involutive, transitive action
    checked = 0
    witness = None
    for i in range(s.rank):
        for a in range(s.n_objects):
            checked += 1
            if witness is None and s.action[i][s.action[i][a]] != a:
                witness = f"generator {_gen_label(i)} is not involutive at object {s.objects[a]}"
    if witness is None:
        reached = {0}
        frontier = [0]
        while frontier:
            a = frontier.pop(0)
            for i in range(s.rank):
                b = s.action[i][a]
                if b not in reached:
                    reached.add(b)
                    frontier.append(b)
        if len(reached) != s.n_objects:
            missing = min(set(range(s.n_objects)) - reached)
            witness = f"object {s.objects[missing]} is not reachable from {s.objects[0]}"
    results.append(AxiomResult(1, witness is None, checked, witness))

    # axiom 2: simple roots present, roots nonzero
    checked = 0
    witness = None
    for a in range(s.n_objects):
        stored = set(s.positive_roots[a])
        for j in range(s.rank):
            checked += 1
            if witness is None and s.simple_root(j) not in stored:
                witness = f"object {s.objects[a]} lacks simple root {_gen_label(j)}"
        for r in s.positive_roots[a]:
            if witness is None and is_zero(r):
                witness = f"object {s.objects[a]} stores the zero vector"
    results.append(AxiomResult(2, witness is None, checked, witness))

    # axiom 3: sign coherence of the stored half
    checked = 0
    witness = None
    for a in range(s.n_objects):
        for r in s.positive_roots[a]:
            checked += 1
            if witness is None and not is_nonneg(r):
                witness = f"object {s.objects[a]}, root {_root_label(r)} has mixed signs"
    results.append(AxiomResult(3, witness is None, checked, witness))

    # axiom 4: the only stored multiple of a simple root is the root itself
    checked = 0
    witness = None
    for a in range(s.n_objects):
        for j in range(s.rank):
            checked += 1
            if witness is not None:
                continue
            for r in s.positive_roots[a]:
                if r[j] != 0 and all(r[k] == 0 for k in range(s.rank) if k != j) and r[j] != 1:
                    witness = (
                        f"object {s.objects[a]}, root {_root_label(r)} is a multiple "
                        f"of simple root {_gen_label(j)}"
                    )
                    break
    results.append(AxiomResult(4, witness is None, checked, witness))

    # axiom 5: reflections permute the root sets
    checked = 0
    witness = None
    for i in range(s.rank):
        for a in range(s.n_objects):
            checked += 1
            if witness is not None:
                continue
            mat = reflection_matrix(s, i, a)
            image = frozenset(mat_vec(mat, r) for r in full_root_set(s, a))
            target = full_root_set(s, s.action[i][a])
            if image != target:
                diff = sorted(target - image) + sorted(image - target)
                witness = (
                    f"generator {_gen_label(i)} at object {s.objects[a]}: image does not "
                    f"equal the root set of {s.objects[s.action[i][a]]}, first mismatch "
                    f"{_root_label(diff[0])}"
                )
    results.append(AxiomResult(5, witness is None, checked, witness))

    # axiom 6: sigma_{i, i|>a} sigma_{i,a} = id
    checked = 0
    witness = None
    for i in range(s.rank):
        for a in range(s.n_objects):
            checked += 1
            if witness is not None:
                continue
            back = s.action[i][a]
            prod = mat_mul(reflection_matrix(s, i, back), reflection_matrix(s, i, a))
            if prod != identity_matrix(s.rank):
                witness = (
                    f"generator {_gen_label(i)}: reflections at {s.objects[a]} and "
                    f"{s.objects[back]} do not compose to the identity"
                )
    results.append(AxiomResult(6, witness is None, checked, witness))

    # axiom 7: theta divides the rank-two count
    checked = 0
    witness = None
    for i in range(s.rank):
        for j in range(i + 1, s.rank):
            for a in range(s.n_objects):
                checked += 1
                if witness is not None:
                    continue
                d = sum(
                    1
                    for r in s.positive_roots[a]
                    if all(r[k] == 0 for k in range(s.rank) if k not in (i, j))
                )
                t = theta(s, i, j, a)
                if d % t != 0:
                    witness = (
                        f"generators {_gen_label(i)},{_gen_label(j)} at object "
                        f"{s.objects[a]}: theta {t} does not divide count {d}"
                    )
    results.append(AxiomResult(7, witness is None, checked, witness))

    return ValidationReport(tuple(results))


# ---------------------------------------------------------------------------
# restriction to a generator subset

def orbit_decomposition(s: RootGroupoidScheme, subset: Iterable[int]) -> list[tuple[int, ...]]:
    """Orbits of the objects under the chosen generators.

    Orbits are ordered by their smallest object index; within an orbit,
    objects are listed in ascending index order.
    """
    gens = sorted(set(subset))
    if not gens:
        raise ValueError("generator subset must be nonempty")
    for i in gens:
        check_generator(s, i)
    seen: set[int] = set()
    orbits = []
    for start in range(s.n_objects):
        if start in seen:
            continue
        orbit = {start}
        frontier = [start]
        while frontier:
            a = frontier.pop(0)
            for i in gens:
                b = s.action[i][a]
                if b not in orbit:
                    orbit.add(b)
                    frontier.append(b)
        seen |= orbit
        orbits.append(tuple(sorted(orbit)))
    return orbits


def restrict(s: RootGroupoidScheme, subset: Iterable[int]) -> list[RootGroupoidScheme]:
    """Restrict to a generator subset, one scheme per object orbit.

    The restricted root set of an object keeps exactly the roots supported
    on the chosen generators, re-coordinatized to the subset positions.
    """
    gens = sorted(set(subset))
    orbits = orbit_decomposition(s, gens)
    out = []
    for orbit in orbits:
        obj_index = {a: k for k, a in enumerate(orbit)}
        action = tuple(
            tuple(obj_index[s.action[i][a]] for a in orbit) for i in gens
        )
        coefficients = tuple(
            tuple(
                tuple(
                    -1 if gens[jj] == i else s.coefficients[i][a][gens[jj]]
                    for jj in range(len(gens))
                )
                for a in orbit
            )
            for i in gens
        )
        positive_roots = None
        status = None
        if s.positive_roots is not None:
            per_object = []
            for a in orbit:
                kept = [
                    tuple(r[j] for j in gens)
                    for r in s.positive_roots[a]
                    if all(r[k] == 0 for k in range(s.rank) if k not in gens)
                ]
                per_object.append(tuple(sorted(kept)))
            positive_roots = tuple(per_object)
            status = s.status
        out.append(
            RootGroupoidScheme(
                rank=len(gens),
                objects=tuple(s.objects[a] for a in orbit),
                action=action,
                coefficients=coefficients,
                mode=s.mode if positive_roots is not None else GENERATED,
                positive_roots=positive_roots,
                status=status,
                cutoff=s.cutoff,
            )
        )
    return out
