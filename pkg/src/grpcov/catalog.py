"""Named group families, the group-spec DSL, and the small-group corpus.

The DSL is ``FAMILY:p1,p2,...`` with the families below; ``Prod`` nests
bracketed sub-specs, e.g. ``Prod:[D:5],[C:3]``. Short aliases: C (Cyc),
D (Dih), Q (GenQ), T (ModT), W (SemiW), R (ModR), A (Alt), S (Sym).

Presentation-based families are realised on metacyclic normal forms
a^i b^j; the two-parameter product law only needs the conjugation exponent,
the order of a, the formal order of b, and the amalgamation exponent s with
b^nb = a^s, so one constructor covers dihedral, generalized quaternion,
modular, semidihedral, and the amalgamated families.
"""

from __future__ import annotations

import json
import math
import sys
from dataclasses import dataclass, field
from importlib import resources
from itertools import product
from pathlib import Path
from typing import Optional

from . import perms
from .errors import CorpusError, SpecParseError
from .gf import GF, factor_prime_power
from .groups import Group, direct_product, group_from_generators, group_from_labels

FAMILIES = {
    "Cyc", "Ab", "Dih", "GenQ", "ModT", "SemiW", "ModR", "Meta",
    "Alt", "Sym", "SL23", "PSL2", "PSL3", "TCd", "TCe", "TCf", "TCg",
    "U36", "Prod",
}

ALIASES = {
    "C": "Cyc", "D": "Dih", "Q": "GenQ", "T": "ModT",
    "W": "SemiW", "R": "ModR", "A": "Alt", "S": "Sym",
}

CORPUS_FILE = "small_groups_le36.jsonl"


@dataclass(frozen=True)
class GroupSpec:
    """Parsed descriptor of a catalog family."""

    family: str
    params: tuple[int, ...] = ()
    subspecs: tuple["GroupSpec", ...] = field(default=())

    def __str__(self) -> str:
        if self.family == "Prod":
            return "Prod:" + ",".join(f"[{s}]" for s in self.subspecs)
        if not self.params:
            return self.family
        return f"{self.family}:{','.join(map(str, self.params))}"


def _split_bracketed(text: str) -> list[str]:
    items: list[str] = []
    depth = 0
    cur: list[str] = []
    for ch in text:
        if ch == "[":
            depth += 1
            if depth == 1:
                continue
        elif ch == "]":
            depth -= 1
            if depth < 0:
                raise SpecParseError("unbalanced ']' in Prod spec")
            if depth == 0:
                items.append("".join(cur))
                cur = []
                continue
        elif depth == 0:
            if ch in ", ":
                continue
            raise SpecParseError(f"unexpected {ch!r} outside brackets in Prod spec")
        cur.append(ch)
    if depth != 0:
        raise SpecParseError("unbalanced '[' in Prod spec")
    if not items:
        raise SpecParseError("Prod spec needs at least one bracketed factor")
    return items


def parse_spec(text: str) -> GroupSpec:
    """Parse the FAMILY:p1,p2,... grammar; Prod nests bracketed sub-specs."""
    text = text.strip()
    if not text:
        raise SpecParseError("empty group spec")
    if text.startswith("Prod:"):
        subs = tuple(parse_spec(part) for part in _split_bracketed(text[5:]))
        return GroupSpec("Prod", (), subs)
    name, _, rest = text.partition(":")
    family = ALIASES.get(name, name)
    if family not in FAMILIES:
        raise SpecParseError(f"unknown family {name!r}")
    if family == "Prod":
        raise SpecParseError("Prod factors must be bracketed, e.g. Prod:[D:5],[C:3]")
    params: tuple[int, ...] = ()
    if rest:
        try:
            params = tuple(int(tok) for tok in rest.split(","))
        except ValueError:
            raise SpecParseError(f"non-integer parameter in {text!r}") from None
    spec = GroupSpec(family, params)
    _validate(spec)
    return spec


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise SpecParseError(msg)


def _validate(spec: GroupSpec) -> None:
    fam, p = spec.family, spec.params
    counts = {
        "Cyc": 1, "Dih": 1, "GenQ": 1, "ModT": 1, "SemiW": 1, "ModR": 1,
        "Meta": 3, "Alt": 1, "Sym": 1, "SL23": 0, "PSL2": 1, "PSL3": 1,
        "TCd": 1, "TCe": 1, "TCf": 1, "TCg": 1, "U36": 0,
    }
    if fam == "Ab":
        _need(len(p) >= 1, "Ab needs at least one factor order")
        _need(all(d >= 1 for d in p), "Ab factor orders must be >= 1")
        return
    if fam == "Prod":
        return
    _need(len(p) == counts[fam], f"{fam} takes {counts[fam]} parameter(s), got {len(p)}")
    if fam == "Cyc":
        _need(p[0] >= 1, "Cyc order must be >= 1")
    elif fam == "Dih":
        _need(p[0] >= 3, f"Dih parameter must be >= 3, got {p[0]}")
    elif fam == "GenQ":
        _need(p[0] >= 3, f"GenQ exponent must be >= 3 (order 2^n), got {p[0]}")
    elif fam in ("ModT", "SemiW"):
        _need(p[0] >= 4, f"{fam} exponent must be >= 4, got {p[0]}")
    elif fam == "ModR":
        _need(p[0] >= 3, f"ModR exponent must be >= 3 (order 3^n), got {p[0]}")
    elif fam == "Meta":
        m, n, r = p
        _need(m >= 2, f"Meta modulus must be >= 2, got {m}")
        _need(n >= 1, f"Meta exponent must be >= 1, got {n}")
        _need(0 <= r < m, f"Meta twist must satisfy 0 <= r < m, got r={r}")
        _need(pow(r, n, m) == 1 % m, f"Meta requires r^n = 1 mod m; {r}^{n} != 1 mod {m}")
    elif fam == "Alt":
        _need(p[0] >= 3, "Alt degree must be >= 3")
    elif fam == "Sym":
        _need(p[0] >= 2, "Sym degree must be >= 2")
    elif fam in ("PSL2", "PSL3"):
        try:
            factor_prime_power(p[0])
        except ValueError:
            raise SpecParseError(f"{fam} needs a prime-power field size, got {p[0]}") from None
    elif fam in ("TCd", "TCe", "TCf", "TCg"):
        n = p[0]
        _need(n >= 1, f"{fam} parameter must be >= 1, got {n}")
        if fam in ("TCf", "TCg"):
            _need(n % 2 == 0, f"{fam} requires an even parameter, got {n}")
        if fam in ("TCd", "TCf"):
            _need((n + 1) % 3 != 0, f"{fam} requires 3 not dividing n+1, got n={n}")
        else:
            _need((n + 2) % 3 != 0, f"{fam} requires 3 not dividing n+2, got n={n}")


# -- family constructors --------------------------------------------------------


def abelian_group(divs: tuple[int, ...], *, element_cap: Optional[int] = None) -> Group:
    """Direct sum of cyclic groups, with arithmetic orders and inverses."""
    divs = tuple(d for d in divs if d > 1) or (1,)
    labels = list(product(*(range(d) for d in divs)))

    def mul(a, b):
        return tuple((x + y) % d for x, y, d in zip(a, b, divs))

    def inv(a):
        return tuple((-x) % d for x, d in zip(a, divs))

    def order(a):
        return math.lcm(*(d // math.gcd(d, x) for x, d in zip(a, divs)))

    gens = []
    for i, d in enumerate(divs):
        gens.append(tuple(1 % d if j == i else 0 for j in range(len(divs))))
    return group_from_labels(
        labels, mul, generators=gens, inverse_label=inv, order_label=order,
        abelian_type=divs, element_cap=element_cap,
    )


def metacyclic_amalgam(
    m: int, nb: int, s: int, r: int, *, element_cap: Optional[int] = None
) -> Group:
    """Group on normal forms a^i b^j with a^m = 1, b^nb = a^s, a^b = a^r.

    Consistency needs r^nb = 1 and s(r-1) = 0 mod m; both are checked, since
    outside that range the product law is not associative.
    """
    if m < 1 or nb < 1 or not (0 <= r < max(m, 1)) or not (0 <= s < m):
        raise ValueError(f"bad amalgam parameters m={m} nb={nb} s={s} r={r}")
    if pow(r, nb, m) != 1 % m:
        raise ValueError(f"amalgam needs r^nb = 1 mod m: {r}^{nb} != 1 mod {m}")
    if (s * (r - 1)) % m != 0:
        raise ValueError(f"amalgam needs s(r-1) = 0 mod m: s={s} r={r} m={m}")
    rpow = [1] * nb
    for j in range(1, nb):
        rpow[j] = (rpow[j - 1] * r) % m
    labels = [(i, j) for i in range(m) for j in range(nb)]

    def mul(x, y):
        i1, j1 = x
        i2, j2 = y
        j = j1 + j2
        i = (i1 + i2 * rpow[j1]) % m
        if j >= nb:
            return ((i + s) % m, j - nb)
        return (i, j)

    gens = []
    if m > 1:
        gens.append((1, 0))
    if nb > 1:
        gens.append((0, 1))
    return group_from_labels(labels, mul, generators=gens, element_cap=element_cap)


def semidirect_product(
    K: Group, H: Group, act, *, element_cap: Optional[int] = None
) -> Group:
    """K by H with H acting through ``act(h) -> permutation of K indices``."""
    actions = [tuple(act(h)) for h in range(H.order)]
    labels = [(k, h) for k in range(K.order) for h in range(H.order)]

    def mul(x, y):
        k1, h1 = x
        k2, h2 = y
        return (K.mul(k1, actions[h1][k2]), H.mul(h1, h2))

    gens = [(k, 0) for k in K.gens()] + [(0, h) for h in H.gens()]
    return group_from_labels(labels, mul, generators=gens, element_cap=element_cap)


def _alt_generators(n: int) -> list[tuple[int, ...]]:
    if n == 3:
        return [perms.from_cycles([[0, 1, 2]], 3)]
    if n % 2 == 1:
        return [
            perms.from_cycles([[0, 1, 2]], n),
            perms.from_cycles([list(range(n))], n),
        ]
    return [
        perms.from_cycles([[0, 1, 2]], n),
        perms.from_cycles([list(range(1, n))], n),
    ]


def _sl23_group(element_cap: Optional[int]) -> Group:
    e12 = ((1, 1), (0, 1))
    e21 = ((1, 0), (1, 1))

    def mat_mul(a, b):
        return tuple(
            tuple(sum(a[i][t] * b[t][j] for t in range(2)) % 3 for j in range(2))
            for i in range(2)
        )

    ident = ((1, 0), (0, 1))
    elements = [ident]
    index = {ident: 0}
    for cur in elements:
        for gmat in (e12, e21):
            nxt = mat_mul(cur, gmat)
            if nxt not in index:
                index[nxt] = len(elements)
                elements.append(nxt)
    G = group_from_labels(
        elements, mat_mul, generators=[e12, e21], element_cap=element_cap
    )
    if G.order != 24:
        raise RuntimeError(f"SL(2,3) construction closed to order {G.order}")
    return G


def _psl_order(dim: int, q: int) -> int:
    if dim == 2:
        return q * (q * q - 1) // math.gcd(2, q - 1)
    return q**3 * (q**3 - 1) * (q**2 - 1) // math.gcd(3, q - 1)


def _psl_group(dim: int, q: int, element_cap: Optional[int]) -> Group:
    """PSL(dim, q) as the projective-point permutation image of SL(dim, q)."""
    F = GF.of_size(q)
    nonzero = [c for c in F.elements() if c != F.zero]

    points: list[tuple] = []
    seen = set()
    for vec in product(F.elements(), repeat=dim):
        if all(c == F.zero for c in vec):
            continue
        lead = next(c for c in vec if c != F.zero)
        scale = F.inv(lead)
        norm = tuple(F.mul(scale, c) for c in vec)
        if norm not in seen:
            seen.add(norm)
            points.append(norm)
    points.sort()
    pt_index = {pt: i for i, pt in enumerate(points)}

    def transvection(i: int, j: int, c) -> tuple:
        return tuple(
            tuple(
                F.one if a == b else (c if (a, b) == (i, j) else F.zero)
                for b in range(dim)
            )
            for a in range(dim)
        )

    def apply(mat, pt) -> tuple:
        img = tuple(
            _gf_dot(F, mat[a], pt) for a in range(dim)
        )
        lead = next(c for c in img if c != F.zero)
        scale = F.inv(lead)
        return tuple(F.mul(scale, c) for c in img)

    gen_perms = []
    for i in range(dim):
        for j in range(dim):
            if i == j:
                continue
            for c in nonzero:
                mat = transvection(i, j, c)
                gen_perms.append(tuple(pt_index[apply(mat, p)] for p in points))
    G = group_from_generators(gen_perms, len(points), element_cap=element_cap)
    expected = _psl_order(dim, q)
    if G.order != expected:
        raise RuntimeError(
            f"PSL({dim},{q}) closure has order {G.order}, expected {expected}"
        )
    return G


def _gf_dot(F: GF, row, pt):
    acc = F.zero
    for a, b in zip(row, pt):
        acc = F.add(acc, F.mul(a, b))
    return acc


def build_group(spec: GroupSpec, *, element_cap: Optional[int] = None) -> Group:
    """Build the concrete group for a validated spec."""
    _validate(spec)
    fam, p = spec.family, spec.params
    if fam == "Cyc":
        return abelian_group((p[0],), element_cap=element_cap)
    if fam == "Ab":
        return abelian_group(p, element_cap=element_cap)
    if fam == "Dih":
        return metacyclic_amalgam(p[0], 2, 0, p[0] - 1, element_cap=element_cap)
    if fam == "GenQ":
        m = 2 ** (p[0] - 1)
        return metacyclic_amalgam(m, 2, m // 2, m - 1, element_cap=element_cap)
    if fam == "ModT":
        m = 2 ** (p[0] - 1)
        return metacyclic_amalgam(m, 2, 0, 1 + m // 2, element_cap=element_cap)
    if fam == "SemiW":
        m = 2 ** (p[0] - 1)
        return metacyclic_amalgam(m, 2, 0, m // 2 - 1, element_cap=element_cap)
    if fam == "ModR":
        m = 3 ** (p[0] - 1)
        return metacyclic_amalgam(m, 3, 0, 1 + m // 3, element_cap=element_cap)
    if fam == "Meta":
        return metacyclic_amalgam(p[0], p[1], 0, p[2], element_cap=element_cap)
    if fam == "Alt":
        G = group_from_generators(_alt_generators(p[0]), p[0], element_cap=element_cap)
        if G.order != math.factorial(p[0]) // 2:
            raise RuntimeError(f"A_{p[0]} closure has wrong order {G.order}")
        return G
    if fam == "Sym":
        n = p[0]
        gens = [perms.from_cycles([[0, 1]], n)]
        if n > 2:
            gens.append(perms.from_cycles([list(range(n))], n))
        G = group_from_generators(gens, n, element_cap=element_cap)
        if G.order != math.factorial(n):
            raise RuntimeError(f"S_{n} closure has wrong order {G.order}")
        return G
    if fam == "SL23":
        return _sl23_group(element_cap)
    if fam == "PSL2":
        return _psl_group(2, p[0], element_cap)
    if fam == "PSL3":
        return _psl_group(3, p[0], element_cap)
    if fam in ("TCd", "TCf"):
        n = p[0]
        return metacyclic_amalgam(3 * n, 6, 3 % (3 * n), n + 1, element_cap=element_cap)
    if fam in ("TCe", "TCg"):
        n = p[0]
        return metacyclic_amalgam(3 * n, 6, 3 % (3 * n), (2 * n + 1) % (3 * n), element_cap=element_cap)
    if fam == "U36":
        return direct_product(
            metacyclic_amalgam(3, 4, 0, 2), abelian_group((3,)), element_cap=element_cap
        )
    if fam == "Prod":
        parts = [build_group(s, element_cap=element_cap) for s in spec.subspecs]
        out = parts[0]
        for nxt in parts[1:]:
            out = direct_product(out, nxt, element_cap=element_cap)
        return out
    raise SpecParseError(f"unknown family {fam!r}")


def build(text: str, *, element_cap: Optional[int] = None) -> Group:
    return build_group(parse_spec(text), element_cap=element_cap)


def named_paper_groups() -> dict[str, Group]:
    """One-off named groups of order 24 used by the census case analysis.

    L is metacyclic, Q is the dicyclic group of order 24, M is the direct
    product of the dicyclic group of order 12 with C_2, and T is the
    semidirect product of C_3 with the dihedral group of order 8 in which
    only half of the dihedral group inverts the C_3.
    """
    L = metacyclic_amalgam(3, 8, 0, 2)
    Q = metacyclic_amalgam(12, 2, 6, 11)
    M = direct_product(metacyclic_amalgam(3, 4, 0, 2), abelian_group((2,)))
    C3 = abelian_group((3,))
    D4 = metacyclic_amalgam(4, 2, 0, 3)
    invert = (0, 2, 1)
    ident = (0, 1, 2)

    def action(h: int):
        i, _j = D4.elements[h]
        return invert if i % 2 == 1 else ident

    T = semidirect_product(C3, D4, action)
    return {"L24": L, "T24": T, "Q24": Q, "M24": M}


# -- corpus ----------------------------------------------------------------------


def default_corpus_path() -> Path:
    return Path(str(resources.files("grpcov").joinpath("data", CORPUS_FILE)))


def load_corpus(path: str | Path) -> list[tuple[str, Group]]:
    """Load the small-group corpus, verifying ids, orders, and declared counts."""
    path = Path(path)
    raw = path.read_text().splitlines()
    lines = [ln for ln in raw if ln.strip()]
    if not lines:
        print(f"warning: corpus file {path} is empty", file=sys.stderr)
        return []
    try:
        header = json.loads(lines[0])
    except json.JSONDecodeError as exc:
        raise CorpusError(f"corpus header is not valid JSON: {exc}") from None
    meta = header.get("meta")
    if not isinstance(meta, dict) or "counts" not in meta:
        raise CorpusError("corpus header must be a meta object with declared counts")
    declared = {int(k): int(v) for k, v in meta["counts"].items()}

    entries: list[tuple[str, Group]] = []
    seen_ids: set[str] = set()
    found: dict[int, int] = {}
    for ln in lines[1:]:
        try:
            rec = json.loads(ln)
        except json.JSONDecodeError as exc:
            raise CorpusError(f"malformed corpus record: {exc}") from None
        try:
            gid = rec["id"]
            order = int(rec["order"])
            degree = int(rec["degree"])
            gens_cycles = rec["gens"]
        except (KeyError, TypeError, ValueError) as exc:
            raise CorpusError(f"corpus record missing fields: {exc}") from None
        if gid in seen_ids:
            raise CorpusError(f"duplicate corpus id {gid!r}")
        seen_ids.add(gid)
        try:
            gen_perms = [perms.from_cycles(c, degree) for c in gens_cycles]
            G = group_from_generators(gen_perms, degree)
        except ValueError as exc:
            raise CorpusError(f"record {gid!r}: {exc}") from None
        if G.order != order:
            raise CorpusError(
                f"record {gid!r} declares order {order} but generates {G.order}"
            )
        found[order] = found.get(order, 0) + 1
        entries.append((gid, G))
    if found != declared:
        diffs = {
            o: (declared.get(o, 0), found.get(o, 0))
            for o in sorted(set(declared) | set(found))
            if declared.get(o, 0) != found.get(o, 0)
        }
        raise CorpusError(f"per-order counts disagree with header (declared, found): {diffs}")
    return entries
