"""Text formats: ideal files, generator-matrix files, profile strings.

Ideal file: first significant line "n=<int>", then one monomial per line
as n whitespace-separated nonnegative exponents.  "#" starts a comment,
blank lines are ignored.  Matrix file: first line "n=<int> jmin=<int>",
then one row of n nonnegative integers per line.  Profile string:
"i1,j1,b1;i2,j2,b2;...".
"""

from __future__ import annotations

from .errors import MalformedInputError, StableBettiError
from .extremal import ExtremalProfile
from .ideals import GeneratorMatrix, MonomialIdeal, minimalize


def _significant_lines(text):
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            yield line


def parse_ideal_text(text: str) -> MonomialIdeal:
    lines = list(_significant_lines(text))
    if not lines:
        raise MalformedInputError("empty ideal file")
    head = lines[0].replace(" ", "")
    if not head.startswith("n="):
        raise MalformedInputError('ideal file must start with "n=<int>"')
    try:
        n = int(head[2:])
    except ValueError:
        raise MalformedInputError(f"bad variable count {head[2:]!r}")
    if n < 1:
        raise MalformedInputError("variable count must be positive")
    gens = []
    for line in lines[1:]:
        parts = line.split()
        try:
            exps = tuple(int(p) for p in parts)
        except ValueError:
            raise MalformedInputError(f"bad exponent line {line!r}")
        if len(exps) != n:
            raise MalformedInputError(
                f"expected {n} exponents, got {len(exps)} in line {line!r}"
            )
        if any(e < 0 for e in exps):
            raise MalformedInputError(f"negative exponent in line {line!r}")
        gens.append(exps)
    if not gens:
        raise MalformedInputError("ideal file lists no generators")
    try:
        return minimalize(n, gens)
    except StableBettiError as exc:
        raise MalformedInputError(str(exc))


def format_ideal(I: MonomialIdeal) -> str:
    lines = [f"n={I.n}"]
    lines.extend(" ".join(str(e) for e in g) for g in I.gens)
    return "\n".join(lines) + "\n"


def parse_matrix_text(text: str) -> GeneratorMatrix:
    lines = list(_significant_lines(text))
    if not lines:
        raise MalformedInputError("empty matrix file")
    head = lines[0].split()
    fields = {}
    for part in head:
        if "=" not in part:
            raise MalformedInputError('matrix file must start with "n=<int> jmin=<int>"')
        key, _, val = part.partition("=")
        fields[key.strip()] = val.strip()
    if set(fields) != {"n", "jmin"}:
        raise MalformedInputError('matrix header must define exactly "n" and "jmin"')
    try:
        n, jmin = int(fields["n"]), int(fields["jmin"])
    except ValueError:
        raise MalformedInputError("bad matrix header")
    rows = []
    for line in lines[1:]:
        try:
            row = tuple(int(p) for p in line.split())
        except ValueError:
            raise MalformedInputError(f"bad matrix row {line!r}")
        if len(row) != n:
            raise MalformedInputError(f"expected {n} entries, got {len(row)} in {line!r}")
        if any(x < 0 for x in row):
            raise MalformedInputError(f"negative entry in {line!r}")
        rows.append(row)
    if not rows:
        raise MalformedInputError("matrix file lists no rows")
    try:
        return GeneratorMatrix(n, jmin, tuple(rows))
    except StableBettiError as exc:
        raise MalformedInputError(str(exc))


def format_matrix(M: GeneratorMatrix) -> str:
    lines = [f"n={M.n} jmin={M.jmin}"]
    lines.extend(" ".join(str(x) for x in row) for row in M.rows)
    return "\n".join(lines) + "\n"


def parse_profile(text: str, n: int) -> ExtremalProfile:
    triples = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        parts = chunk.split(",")
        if len(parts) != 3:
            raise MalformedInputError(f"profile triple {chunk!r} must be i,j,b")
        try:
            triples.append(tuple(int(p) for p in parts))
        except ValueError:
            raise MalformedInputError(f"bad profile triple {chunk!r}")
    if not triples:
        raise MalformedInputError("empty profile")
    try:
        return ExtremalProfile.from_triples(n, triples)
    except StableBettiError as exc:
        raise MalformedInputError(str(exc))


def format_profile(profile: ExtremalProfile) -> str:
    return ";".join(f"{i},{j},{b}" for i, j, b in profile.triples)
