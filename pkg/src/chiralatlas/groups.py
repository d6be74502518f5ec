"""Builtin permutation groups and the plain-text generator file format.

File format::

    # comments and blank lines are ignored
    degree 5
    (1,2,3,4,5)
    (2,3,5,4)

One generator per line in 1-based disjoint-cycle notation; fixed points are
omitted and whitespace is insignificant.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from pathlib import Path

from .errors import InputError, ParseError
from .perm import Permutation, PermGroup


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % k for k in range(2, int(p**0.5) + 1))


def symmetric_group(n: int) -> PermGroup:
    if n < 1:
        raise InputError("sym:n needs n >= 1")
    gens = []
    if n >= 2:
        gens = [Permutation.from_cycles(n, [(1, 2)]),
                Permutation.from_cycles(n, [tuple(range(1, n + 1))])]
    return PermGroup(n, gens)


def alternating_group(n: int) -> PermGroup:
    if n < 1:
        raise InputError("alt:n needs n >= 1")
    gens = [Permutation.from_cycles(n, [(i, i + 1, i + 2)]) for i in range(1, n - 1)]
    return PermGroup(n, gens)


def cyclic_group(n: int) -> PermGroup:
    if n < 1:
        raise InputError("cyc:n needs n >= 1")
    return PermGroup(n, [Permutation.from_cycles(n, [tuple(range(1, n + 1))])])


def dihedral_group(n: int) -> PermGroup:
    """Symmetries of the n-gon, order ``2n``, acting on its vertices."""
    if n < 3:
        raise InputError("dih:n needs n >= 3 (natural action on the n-gon)")
    rot = Permutation.from_cycles(n, [tuple(range(1, n + 1))])
    ref = Permutation._raw([(-i) % n for i in range(n)])
    return PermGroup(n, [rot, ref])


def psl2(p: int) -> PermGroup:
    """PSL(2, p) on the p + 1 points of the projective line (infinity is p + 1)."""
    if not _is_prime(p):
        raise InputError(f"psl2:p needs a prime p, got {p}")
    inf = p

    def act(x, a, b, c, d):
        # x -> (ax + b) / (cx + d)
        if x == inf:
            return inf if c == 0 else a * pow(c, -1, p) % p
        den = (c * x + d) % p
        if den == 0:
            return inf
        return (a * x + b) * pow(den, -1, p) % p

    t = Permutation._raw([act(x, 1, 1, 0, 1) for x in range(p + 1)])
    w = Permutation._raw([act(x, 0, p - 1, 1, 0) for x in range(p + 1)])
    return PermGroup(p + 1, [t, w])


def projective_points(p: int) -> list[tuple[int, int, int]]:
    """Normalized representatives (first nonzero coordinate 1) of PG(2, p)."""
    pts = []
    for v in itertools.product(range(p), repeat=3):
        nz = next((x for x in v if x), None)
        if nz == 1:
            pts.append(v)
    return pts


def _normalize(v, p):
    nz = next(x for x in v if x % p)
    inv = pow(nz, -1, p)
    return tuple(x * inv % p for x in v)


def psl3(p: int) -> PermGroup:
    """PSL(3, p) on the p^2 + p + 1 points of the projective plane.

    Generated by the elementary transvections ``I + E_12``, ``I + E_23``,
    ``I + E_31``, whose commutators give the other three.
    """
    if not _is_prime(p):
        raise InputError(f"psl3:p needs a prime p, got {p}")
    pts = projective_points(p)
    index = {v: i for i, v in enumerate(pts)}
    gens = []
    for i, j in ((0, 1), (1, 2), (2, 0)):
        img = []
        for v in pts:
            # column vector action: (I + E_ij) v adds v_j to coordinate i
            w = list(v)
            w[i] = (w[i] + v[j]) % p
            img.append(index[_normalize(w, p)])
        gens.append(Permutation._raw(img))
    return PermGroup(len(pts), gens)


BUILTINS = {
    "sym": symmetric_group,
    "alt": alternating_group,
    "cyc": cyclic_group,
    "dih": dihedral_group,
    "psl2": psl2,
    "psl3": psl3,
}

_DISPLAY = {"sym": "Sym({})", "alt": "Alt({})", "cyc": "C{}", "dih": "D{}",
            "psl2": "PSL(2,{})", "psl3": "PSL(3,{})"}


def parse_group_text(text: str) -> PermGroup:
    """Parse the generator file format; errors carry the offending line number."""
    degree = None
    gens = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if degree is None:
            parts = line.split()
            if len(parts) != 2 or parts[0].lower() != "degree":
                raise ParseError(f"expected header 'degree d', got {line!r}", lineno)
            try:
                degree = int(parts[1])
            except ValueError:
                raise ParseError(f"bad degree {parts[1]!r}", lineno) from None
            if degree < 1:
                raise ParseError("degree must be positive", lineno)
            continue
        if line.count("(") != line.count(")"):
            raise ParseError(f"unbalanced parentheses in {line!r}", lineno)
        try:
            gens.append(Permutation.parse(line, degree))
        except InputError as exc:
            raise ParseError(str(exc), lineno) from None
    if degree is None:
        raise ParseError("missing 'degree d' header")
    return PermGroup(degree, gens)


def format_group_text(G: PermGroup, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.append(f"# {comment}")
    lines.append(f"degree {G.degree}")
    lines.extend(str(g) for g in G.generators)
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class GroupSpec:
    """Either a builtin (``name`` + ``param``) or a generator file ``path``."""

    source: str
    name: str | None = None
    param: int | None = None
    path: str | None = None

    @classmethod
    def from_string(cls, text: str) -> "GroupSpec":
        head, sep, tail = text.partition(":")
        if sep and head in BUILTINS:
            try:
                n = int(tail)
            except ValueError:
                raise InputError(f"builtin {head!r} needs an integer parameter, got {tail!r}") from None
            return cls(source=text, name=head, param=n)
        return cls(source=text, path=text)

    @property
    def display_name(self) -> str:
        if self.name is not None:
            return _DISPLAY[self.name].format(self.param)
        return Path(self.path).stem

    def resolve(self) -> PermGroup:
        return parse_group(self)


def parse_group(spec: GroupSpec | str) -> PermGroup:
    if isinstance(spec, str):
        spec = GroupSpec.from_string(spec)
    if spec.name is not None:
        return BUILTINS[spec.name](spec.param)
    path = Path(spec.path)
    if not path.is_file():
        raise InputError(f"no such group file or builtin: {spec.source!r}")
    return parse_group_text(path.read_text())
