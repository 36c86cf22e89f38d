"""Command-line front end.

Every library capability is exposed as a subcommand.  Words on the
command line are space-separated 1-based generator indices and objects
are referred to by name; the library API underneath is 0-based.  With
--machine the output is a stable line protocol: identical inputs produce
byte-identical output.

Exit codes: 0 success, 1 domain failure (validation failed, words not
equal, non-arithmetic input), 2 usage or input-format error.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import constructors, groupoid, rewriting, roots, scheme
from .groupoid import Word
from .scheme import RootGroupoidScheme, SchemeFormatError


class UsageError(Exception):
    pass


def _read_file(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None


def _load(path: str) -> RootGroupoidScheme:
    try:
        return scheme.load_scheme(_read_file(path))
    except SchemeFormatError as e:
        raise UsageError(f"{path}: {e}") from None


def _parse_word(s: RootGroupoidScheme, text: str) -> tuple[int, ...]:
    letters = []
    for tok in text.split():
        try:
            v = int(tok)
        except ValueError:
            raise UsageError(f"invalid letter {tok!r} in word") from None
        if not 1 <= v <= s.rank:
            raise UsageError(f"letter {v} out of range 1..{s.rank}")
        letters.append(v - 1)
    return tuple(letters)


def _object(s: RootGroupoidScheme, name: str) -> int:
    try:
        return s.object_index(name)
    except ValueError:
        raise UsageError(f"unknown object {name!r}") from None


def _format_word(s: RootGroupoidScheme, w: Word) -> str:
    letters = " ".join(str(i + 1) for i in w.letters)
    return letters if letters else "(empty)"


def _materialized(s: RootGroupoidScheme, cutoff: int) -> RootGroupoidScheme:
    if s.positive_roots is None:
        return roots.generate_roots(s, cutoff)
    return s


def _parse_matrix_file(text: str) -> tuple[tuple[int, ...], ...]:
    rows = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            rows.append(tuple(int(tok) for tok in line.split()))
        except ValueError:
            raise UsageError(f"matrix line {lineno}: expected integers") from None
    if not rows or any(len(r) != len(rows) for r in rows):
        raise UsageError("matrix file must contain a square integer matrix")
    return tuple(rows)


# ---------------------------------------------------------------------------
# subcommands


def cmd_validate(args) -> int:
    s = _materialized(_load(args.scheme), args.cutoff)
    report = scheme.validate(s)
    for r in report.results:
        line = f"axiom {r.axiom} {'PASS' if r.passed else 'FAIL'}"
        if not r.passed:
            line += f" ({r.witness})"
        elif not args.machine:
            line += f"  [{r.description}; {r.checked} checks]"
        print(line)
    print(f"overall {'PASS' if report.passed else 'FAIL'}")
    return 0 if report.passed else 1


def cmd_act(args) -> int:
    s = _load(args.scheme)
    base = _object(s, args.base)
    letters = _parse_word(s, args.word)
    print(f"object {s.objects[scheme.act_word(s, letters, base)]}")
    return 0


def cmd_roots(args) -> int:
    s = _materialized(_load(args.scheme), args.cutoff)
    print(f"status {s.status}")
    for a in range(s.n_objects):
        print(f"roots {s.objects[a]} {len(s.positive_roots[a])}")
        for r in s.positive_roots[a]:
            print(f"root {s.objects[a]} " + " ".join(str(x) for x in r))
    return 0


def cmd_reduce(args) -> int:
    s = _materialized(_load(args.scheme), args.cutoff)
    base = _object(s, args.base)
    w = Word(base, _parse_word(s, args.word))
    g = groupoid.element_of_word(s, w)
    canon = groupoid.canonical_reduced_word(s, g)
    print(f"length {groupoid.length(s, g)}")
    print(f"word {_format_word(s, canon)}")
    print(f"target {s.objects[g.target]}")
    return 0


def cmd_eq(args) -> int:
    s = _load(args.scheme)
    base = _object(s, args.base)
    g = groupoid.element_of_word(s, Word(base, _parse_word(s, args.word)))
    h = groupoid.element_of_word(s, Word(base, _parse_word(s, args.word2)))
    if g == h:
        print("EQUAL")
        return 0
    if g.target != h.target:
        print(f"NOT-EQUAL target mismatch: {s.objects[g.target]} != {s.objects[h.target]}")
    elif g.source != h.source:
        print(f"NOT-EQUAL source mismatch: {s.objects[g.source]} != {s.objects[h.source]}")
    else:
        print("NOT-EQUAL matrix mismatch")
    return 1


def cmd_braid(args) -> int:
    s = _materialized(_load(args.scheme), args.cutoff)
    base = _object(s, args.base)
    u = Word(base, _parse_word(s, args.word))
    v = Word(base, _parse_word(s, args.word2))
    try:
        chain = rewriting.braid_connect(s, u, v)
    except ValueError as e:
        print(f"FAIL {e}")
        return 1
    print(f"moves {len(chain.moves)}")
    w = u
    for mv in chain.moves:
        w = rewriting.apply_move(s, w, mv)
        print(
            f"move {mv.position + 1} {mv.first + 1} {mv.second + 1} {mv.m} "
            f"{s.objects[mv.anchor]} -> {_format_word(s, w)}"
        )
    return 0


def cmd_longest(args) -> int:
    s = _materialized(_load(args.scheme), args.cutoff)
    base = _object(s, args.base)
    g = groupoid.longest_element(s, base)
    print(f"length {groupoid.length(s, g)}")
    print(f"word {_format_word(s, groupoid.canonical_reduced_word(s, g))}")
    print(f"target {s.objects[g.target]}")
    return 0


def cmd_enumerate(args) -> int:
    s = _materialized(_load(args.scheme), args.cutoff)
    source = _object(s, args.base) if args.base else None
    elements = groupoid.enumerate_elements(s, source)
    print(f"count {len(elements)}")
    for g in elements:
        flat = " ".join(str(x) for row in g.matrix for x in row)
        print(
            f"element {s.objects[g.source]} {s.objects[g.target]} "
            f"{groupoid.length(s, g)} {flat}"
        )
    return 0


def cmd_from_cartan(args) -> int:
    matrix = _parse_matrix_file(_read_file(args.matrix))
    try:
        s = constructors.from_cartan(matrix)
    except ValueError as e:
        raise UsageError(str(e)) from None
    sys.stdout.write(scheme.save_scheme(s))
    return 0


def cmd_from_bichar(args) -> int:
    matrix = _parse_matrix_file(_read_file(args.matrix))
    if args.order == "generic":
        order = None
    else:
        try:
            order = int(args.order)
        except ValueError:
            raise UsageError("--order expects an integer or 'generic'") from None
    try:
        s = constructors.from_bicharacter(matrix, args.cutoff, order)
    except constructors.NotArithmeticError as e:
        print(f"FAIL {e}")
        return 1
    except ValueError as e:
        raise UsageError(str(e)) from None
    sys.stdout.write(scheme.save_scheme(s))
    return 0


def cmd_export_dot(args) -> int:
    s = _load(args.scheme)
    lines = ["graph scheme {"]
    for name in s.objects:
        lines.append(f'  "{name}";')
    for i in range(s.rank):
        for a in range(s.n_objects):
            b = s.action[i][a]
            if a < b:
                lines.append(f'  "{s.objects[a]}" -- "{s.objects[b]}" [label="{i + 1}"];')
    lines.append("}")
    print("\n".join(lines))
    return 0


def cmd_example(args) -> int:
    sys.stdout.write(scheme.save_scheme(constructors.rank3_example()))
    return 0


# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weylgroupoid",
        description="Exact computations with root groupoid schemes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_, *, needs_scheme=True, base=False, word=False,
            word2=False, cutoff=False, base_optional=False):
        p = sub.add_parser(name, help=help_)
        if needs_scheme:
            p.add_argument("--scheme", required=True, metavar="FILE")
        if base:
            p.add_argument("--base", required=not base_optional, metavar="OBJ")
        if word:
            p.add_argument("--word", required=True, metavar="'i1 i2 ...'")
        if word2:
            p.add_argument("--word2", required=True, metavar="'i1 i2 ...'")
        if cutoff:
            p.add_argument("--cutoff", type=int, default=30, metavar="N")
        p.add_argument("--machine", action="store_true",
                       help="stable line-oriented output")
        p.set_defaults(func=func)
        return p

    add("validate", cmd_validate, "check the root-system axioms", cutoff=True)
    add("act", cmd_act, "apply a word to an object", base=True, word=True)
    add("roots", cmd_roots, "print positive root sets", cutoff=True)
    add("reduce", cmd_reduce, "canonical reduced word of a word",
        base=True, word=True, cutoff=True)
    add("eq", cmd_eq, "compare the evaluations of two words",
        base=True, word=True, word2=True)
    add("braid", cmd_braid, "braid-move chain between two reduced words",
        base=True, word=True, word2=True, cutoff=True)
    add("longest", cmd_longest, "longest element from a source object",
        base=True, cutoff=True)
    add("enumerate", cmd_enumerate, "list all groupoid elements",
        base=True, base_optional=True, cutoff=True)
    p = sub.add_parser("from-cartan", help="build a scheme from a Cartan matrix")
    p.add_argument("--matrix", required=True, metavar="FILE")
    p.add_argument("--machine", action="store_true")
    p.set_defaults(func=cmd_from_cartan)
    p = sub.add_parser("from-bichar", help="build a scheme from bicharacter exponents")
    p.add_argument("--matrix", required=True, metavar="FILE")
    p.add_argument("--order", required=True, metavar="N|generic")
    p.add_argument("--cutoff", type=int, default=1000, metavar="N",
                   help="maximum number of objects to discover")
    p.add_argument("--machine", action="store_true")
    p.set_defaults(func=cmd_from_bichar)
    add("export-dot", cmd_export_dot, "object graph in DOT format")
    add("example", cmd_example, "print the bundled five-object example scheme",
        needs_scheme=False)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    try:
        code = args.func(args)
        sys.stdout.flush()
        return code
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        # output truncated by the consumer (e.g. piped into head); point
        # stdout at devnull so the interpreter's exit flush stays quiet
        devnull = os.open(os.devnull, os.O_WRONLY)
        os.dup2(devnull, sys.stdout.fileno())
        return 0
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
