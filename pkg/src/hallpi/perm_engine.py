"""Concrete permutation-group computation.

Schreier-Sims base and strong generating sets, full subgroup-lattice
enumeration up to conjugacy for groups below a hard order cap, and direct
brute-force evaluation of the Hall properties E, C, D, U and the
normal-abelian-tail property ("star") on those lattices.

Permutations are tuples mapping point i to its image; products compose
left-to-right (apply a, then b).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from math import prod

from .arith import PrimeSet, is_prime, pi_part

__all__ = [
    "Perm",
    "PermGroup",
    "SubgroupClass",
    "OrderLimitError",
    "DEFAULT_MAX_ORDER",
    "identity",
    "pmul",
    "pinv",
    "perm_from_cycles",
    "perm_to_cycles",
    "bsgs_construct",
    "construct_named",
    "enumerate_subgroups",
    "pi_hall_subgroups",
    "maximal_pi_subgroups",
    "brute_property",
    "brute_d_via_hall_containment",
    "lattice_dump",
]

Perm = tuple[int, ...]

DEFAULT_MAX_ORDER = 25000


class OrderLimitError(RuntimeError):
    """Raised when a computation would exceed the configured order cap."""


# ---------------------------------------------------------------------------
# permutation primitives


def identity(degree: int) -> Perm:
    return tuple(range(degree))


def pmul(a: Perm, b: Perm) -> Perm:
    """Product 'apply a, then b'."""
    return tuple(b[x] for x in a)


def pinv(a: Perm) -> Perm:
    inv = [0] * len(a)
    for i, x in enumerate(a):
        inv[x] = i
    return tuple(inv)


def _check_perm(images, degree: int) -> Perm:
    p = tuple(images)
    if len(p) != degree or sorted(p) != list(range(degree)):
        raise ValueError(f"not a permutation of {degree} points: {images}")
    return p


def perm_order(a: Perm) -> int:
    n = 1
    x = a
    e = identity(len(a))
    while x != e:
        x = pmul(x, a)
        n += 1
    return n


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def perm_from_cycles(text: str, degree: int) -> Perm:
    """Parse 0-based cycle notation like ``(0 1 2)(3 4)``."""
    body = text.strip()
    if body in ("", "()"):
        return identity(degree)
    if not re.fullmatch(r"(?:\([\d\s,]*\)\s*)+", body):
        raise ValueError(f"malformed cycle notation: {text!r}")
    images = list(range(degree))
    for m in _CYCLE_RE.finditer(body):
        pts = [int(tok) for tok in re.split(r"[,\s]+", m.group(1).strip()) if tok]
        if any(pt >= degree or pt < 0 for pt in pts):
            raise ValueError(f"point out of range in {text!r}")
        if len(set(pts)) != len(pts):
            raise ValueError(f"repeated point in cycle {m.group(0)!r}")
        for i, pt in enumerate(pts):
            images[pt] = pts[(i + 1) % len(pts)]
    return _check_perm(images, degree)


def perm_to_cycles(a: Perm) -> str:
    seen = set()
    out = []
    for i in range(len(a)):
        if i in seen or a[i] == i:
            seen.add(i)
            continue
        cyc = [i]
        j = a[i]
        while j != i:
            cyc.append(j)
            seen.add(j)
            j = a[j]
        seen.add(i)
        out.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(out) if out else "()"


# ---------------------------------------------------------------------------
# Schreier-Sims


def _schreier_sims(degree: int, gens: list[Perm]):
    """Deterministic Schreier-Sims; returns (base, transversals)."""
    ident = identity(degree)
    gens = [g for g in gens if g != ident]

    base: list[int] = []
    for g in gens:
        if all(g[b] == b for b in base):
            base.append(min(p for p in range(degree) if g[p] != p))
    stab_gens: list[list[Perm]] = [
        [g for g in gens if all(g[b] == b for b in base[:i])] for i in range(len(base))
    ]
    transversals: list[dict[int, Perm]] = [dict() for _ in base]

    def rebuild_transversal(i: int) -> None:
        beta = base[i]
        trans = {beta: ident}
        queue = [beta]
        while queue:
            pt = queue.pop(0)
            for g in stab_gens[i]:
                img = g[pt]
                if img not in trans:
                    trans[img] = pmul(trans[pt], g)
                    queue.append(img)
        transversals[i] = trans

    for i in range(len(base)):
        rebuild_transversal(i)

    def strip(g: Perm, start: int) -> tuple[Perm, int]:
        for i in range(start, len(base)):
            img = g[base[i]]
            if img not in transversals[i]:
                return g, i
            g = pmul(g, pinv(transversals[i][img]))
        return g, len(base)

    i = len(base) - 1
    while i >= 0:
        complete = True
        for pt in list(transversals[i]):
            t_pt = transversals[i][pt]
            for g in stab_gens[i]:
                sg = pmul(t_pt, g)
                rep = transversals[i][sg[base[i]]]
                schreier = pmul(sg, pinv(rep))
                if schreier == ident:
                    continue
                h, j = strip(schreier, i + 1)
                if h != ident:
                    complete = False
                    if j == len(base):
                        base.append(min(p for p in range(degree) if h[p] != p))
                        stab_gens.append([])
                        transversals.append({})
                    for level in range(i + 1, j + 1):
                        stab_gens[level].append(h)
                        rebuild_transversal(level)
                    i = j
                    break
            if not complete:
                break
        if complete:
            i -= 1

    return base, transversals


class PermGroup:
    """Immutable permutation group with a BSGS, exact order and membership."""

    def __init__(self, degree: int, generators, name: str | None = None):
        if degree < 1:
            raise ValueError("degree must be positive")
        self.degree = degree
        self.generators: list[Perm] = []
        seen = set()
        for g in generators:
            p = _check_perm(g, degree)
            if p not in seen:
                seen.add(p)
                self.generators.append(p)
        self.name = name
        self.base, self._transversals = _schreier_sims(degree, self.generators)
        self.order: int = prod(len(t) for t in self._transversals) if self.base else 1
        self._elements: list[Perm] | None = None
        self._lattice: list["SubgroupClass"] | None = None

    def contains(self, p) -> bool:
        g = _check_perm(p, self.degree)
        for i, beta in enumerate(self.base):
            img = g[beta]
            if img not in self._transversals[i]:
                return False
            g = pmul(g, pinv(self._transversals[i][img]))
        return g == identity(self.degree)

    __contains__ = contains

    def elements(self) -> list[Perm]:
        """All elements, sorted; cached."""
        if self._elements is None:
            ident = identity(self.degree)
            elems = {ident}
            frontier = [ident]
            while frontier:
                nxt = []
                for w in frontier:
                    for g in self.generators:
                        wg = pmul(w, g)
                        if wg not in elems:
                            elems.add(wg)
                            nxt.append(wg)
                frontier = nxt
            if len(elems) != self.order:
                raise AssertionError("element closure disagrees with BSGS order")
            self._elements = sorted(elems)
        return self._elements

    def __repr__(self) -> str:
        label = self.name or "PermGroup"
        return f"<{label} degree={self.degree} order={self.order}>"


def bsgs_construct(degree: int, generators) -> PermGroup:
    """Build a PermGroup (BSGS, exact order, membership test)."""
    return PermGroup(degree, generators)


# ---------------------------------------------------------------------------
# named constructions


class _GF:
    """Tiny finite field GF(p^f), elements encoded as ints in base p."""

    def __init__(self, p: int, f: int):
        self.p, self.f, self.q = p, f, p**f
        self.modpoly = self._find_irreducible() if f > 1 else ()
        self._mul = {}
        for a in range(self.q):
            for b in range(a, self.q):
                v = self._polymul(a, b)
                self._mul[(a, b)] = v
                self._mul[(b, a)] = v

    def _digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.f):
            out.append(a % self.p)
            a //= self.p
        return out

    def _encode(self, digits: list[int]) -> int:
        v = 0
        for d in reversed(digits):
            v = v * self.p + d
        return v

    def _find_irreducible(self) -> tuple[int, ...]:
        # monic x^f + c_{f-1} x^{f-1} + ... + c_0; first one in lex order
        for tail in range(self.p**self.f):
            coeffs = self._digits(tail)  # low to high
            if self._is_irreducible(coeffs):
                return tuple(coeffs)
        raise AssertionError("no irreducible polynomial found")

    def _is_irreducible(self, coeffs: list[int]) -> bool:
        # no root / no factor: trial division by all monic polys of deg < f
        full = coeffs + [1]
        for deg in range(1, self.f):
            for tail in range(self.p**deg):
                div = self._digits_n(tail, deg) + [1]
                if self._polydivides(div, full):
                    return False
        return True

    def _digits_n(self, a: int, n: int) -> list[int]:
        out = []
        for _ in range(n):
            out.append(a % self.p)
            a //= self.p
        return out

    def _polydivides(self, d: list[int], n: list[int]) -> bool:
        n = list(n)
        while len(n) >= len(d) and any(n):
            while n and n[-1] == 0:
                n.pop()
            if len(n) < len(d):
                break
            shift = len(n) - len(d)
            lead = n[-1]  # divisor is monic
            for i, c in enumerate(d):
                n[shift + i] = (n[shift + i] - lead * c) % self.p
        while n and n[-1] == 0:
            n.pop()
        return not n

    def _polymul(self, a: int, b: int) -> int:
        da, db = self._digits(a), self._digits(b)
        res = [0] * (2 * self.f - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    res[i + j] = (res[i + j] + x * y) % self.p
        # reduce modulo x^f + modpoly
        for k in range(len(res) - 1, self.f - 1, -1):
            c = res[k]
            if c:
                res[k] = 0
                for i, m in enumerate(self.modpoly):
                    res[k - self.f + i] = (res[k - self.f + i] - c * m) % self.p
        return self._encode(res[: self.f])

    def add(self, a: int, b: int) -> int:
        da, db = self._digits(a), self._digits(b)
        return self._encode([(x + y) % self.p for x, y in zip(da, db)])

    def neg(self, a: int) -> int:
        return self._encode([(-x) % self.p for x in self._digits(a)])

    def mul(self, a: int, b: int) -> int:
        return self._mul[(a, b)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError
        for b in range(1, self.q):
            if self.mul(a, b) == 1:
                return b
        raise AssertionError

    def primitive(self) -> int:
        for a in range(2, self.q):
            x, n = a, 1
            while x != 1:
                x = self.mul(x, a)
                n += 1
            if n == self.q - 1:
                return a
        raise AssertionError("no primitive element")


def _psl2(q: int) -> PermGroup:
    """Natural action of PSL_2(q) on the q+1 projective points.

    Points 0..q-1 are the field elements (0 is zero), point q is infinity.
    Generated by x -> x+1, x -> l^2 x (l primitive) and x -> -1/x; the
    squared multiplier keeps the scaling inside PSL rather than PGL.
    """
    p, f = _split_prime_power(q)
    gf = _GF(p, f)
    infinity = q
    points = list(range(q))

    trans = [0] * (q + 1)
    for e in points:
        trans[e] = gf.add(e, 1)
    trans[infinity] = infinity

    inv = [0] * (q + 1)
    inv[0] = infinity
    inv[infinity] = 0
    for e in points[1:]:
        inv[e] = gf.neg(gf.inv(e))

    gens = [tuple(trans), tuple(inv)]
    if q > 3:
        lam2 = gf.mul(gf.primitive(), gf.primitive())
        scale = [gf.mul(lam2, e) for e in points] + [infinity]
        gens.append(tuple(scale))

    G = PermGroup(q + 1, gens, name=f"psl2:{q}")
    expected = q * (q * q - 1) // (2 if q % 2 == 1 else 1)
    if G.order != expected:
        raise AssertionError(f"psl2:{q} construction has order {G.order}, expected {expected}")
    return G


def _split_prime_power(v: int) -> tuple[int, int]:
    if v < 2:
        raise ValueError(f"{v} is not a prime power")
    p = next(d for d in range(2, v + 1) if v % d == 0)
    f = 0
    rest = v
    while rest % p == 0:
        rest //= p
        f += 1
    if rest != 1:
        raise ValueError(f"{v} is not a prime power")
    return p, f


_NAMED_CACHE: dict[str, PermGroup] = {}


def construct_named(spec: str) -> PermGroup:
    """Build a named group: alt:n, sym:n, cyclic:n, dihedral:n, psl2:q,
    product:<spec>x<spec>, raw:<degree>:<cycles;...>."""
    spec = spec.strip()
    if spec in _NAMED_CACHE:
        return _NAMED_CACHE[spec]
    G = _construct_named(spec)
    G.name = spec
    _NAMED_CACHE[spec] = G
    return G


def _construct_named(spec: str) -> PermGroup:
    kind, _, rest = spec.partition(":")
    if kind == "alt":
        n = _positive_int(rest, "alt")
        if n <= 2:
            return PermGroup(max(n, 1), [])
        cyc3 = perm_from_cycles("(0 1 2)", n)
        if n == 3:
            return PermGroup(n, [cyc3])
        big = (
            "(" + " ".join(map(str, range(n))) + ")"
            if n % 2 == 1
            else "(" + " ".join(map(str, range(1, n))) + ")"
        )
        return PermGroup(n, [cyc3, perm_from_cycles(big, n)])
    if kind == "sym":
        n = _positive_int(rest, "sym")
        if n <= 1:
            return PermGroup(max(n, 1), [])
        return PermGroup(
            n,
            [
                perm_from_cycles("(0 1)", n),
                perm_from_cycles("(" + " ".join(map(str, range(n))) + ")", n),
            ],
        )
    if kind == "cyclic":
        n = _positive_int(rest, "cyclic")
        if n == 1:
            return PermGroup(1, [])
        return PermGroup(n, [perm_from_cycles("(" + " ".join(map(str, range(n))) + ")", n)])
    if kind == "dihedral":
        n = _positive_int(rest, "dihedral")
        if n < 3:
            raise ValueError("dihedral:n requires n >= 3")
        rot = perm_from_cycles("(" + " ".join(map(str, range(n))) + ")", n)
        refl = tuple((n - i) % n for i in range(n))
        return PermGroup(n, [rot, refl])
    if kind == "psl2":
        q = _positive_int(rest, "psl2")
        if q < 2 or q > 16:
            raise ValueError("psl2:q supports prime powers 2 <= q <= 16")
        return _psl2(q)
    if kind == "product":
        for i in (m.start() for m in re.finditer("x", rest)):
            left, right = rest[:i], rest[i + 1 :]
            try:
                A = construct_named(left)
                B = construct_named(right)
            except (ValueError, KeyError):
                continue
            return _direct_product(A, B)
        raise ValueError(f"cannot split product spec {spec!r}")
    if kind == "raw":
        deg_txt, _, cycles = rest.partition(":")
        degree = _positive_int(deg_txt, "raw")
        gens = [perm_from_cycles(c, degree) for c in cycles.split(";") if c.strip()]
        return PermGroup(degree, gens)
    raise ValueError(f"unknown group spec {spec!r}")


def _positive_int(text: str, label: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise ValueError(f"bad {label} parameter {text!r}") from None
    if n < 1:
        raise ValueError(f"bad {label} parameter {text!r}")
    return n


def _direct_product(A: PermGroup, B: PermGroup) -> PermGroup:
    d = A.degree + B.degree
    gens = []
    for g in A.generators:
        gens.append(tuple(g) + tuple(range(A.degree, d)))
    for g in B.generators:
        gens.append(tuple(range(A.degree)) + tuple(x + A.degree for x in g))
    return PermGroup(d, gens)


# ---------------------------------------------------------------------------
# subgroup lattice


@dataclass
class SubgroupClass:
    """A conjugacy class of subgroups: canonical representative, exact
    order and class size.  Element sets are kept for engine-internal use."""

    representative: PermGroup
    order: int
    class_size: int
    rep_set: frozenset = field(repr=False)
    orbit: tuple = field(repr=False)  # all conjugate element sets


def _conj_set(K: frozenset, g: Perm, gi: Perm) -> frozenset:
    return frozenset(pmul(pmul(gi, k), g) for k in K)


def _subgroup_orbit(K: frozenset, gens: list[Perm]) -> dict[frozenset, Perm]:
    ident = identity(len(next(iter(K))))
    inv = {g: pinv(g) for g in gens}
    orb = {K: ident}
    queue = [K]
    while queue:
        A = queue.pop()
        gA = orb[A]
        for g in gens:
            B = _conj_set(A, g, inv[g])
            if B not in orb:
                orb[B] = pmul(gA, g)
                queue.append(B)
    return orb


def _coset_closure(H: frozenset, H_gens: list[Perm], x: Perm) -> frozenset:
    """Element set of the join of subgroup H (given with generators) and x."""
    ident = identity(len(x))
    gens = list(H_gens) + [x]
    elems = set(H)
    frontier = [ident]
    while frontier:
        nxt = []
        for w in frontier:
            for g in gens:
                wg = pmul(w, g)
                if wg not in elems:
                    elems.update(pmul(h, wg) for h in H)
                    nxt.append(wg)
        frontier = nxt
    return frozenset(elems)


def _reduce_generators(K: frozenset) -> list[Perm]:
    """Deterministic small generating set for a subgroup element set."""
    degree = len(next(iter(K)))
    ident = identity(degree)
    gens: list[Perm] = []
    cur = {ident}
    for x in sorted(K):
        if x in cur:
            continue
        gens.append(x)
        cur = set(_coset_closure(frozenset(cur), gens[:-1], x))
        if len(cur) == len(K):
            break
    return gens


def _is_prime_power(n: int) -> bool:
    if n < 2:
        return False
    try:
        _split_prime_power(n)
        return True
    except ValueError:
        return False


def _build_lattice(G: PermGroup, limit: int) -> list[SubgroupClass]:
    if G.order > limit:
        raise OrderLimitError(
            f"group order {G.order} exceeds the enumeration cap {limit}; "
            "raise the cap explicitly to proceed"
        )
    ident = identity(G.degree)
    elems = G.elements()

    # prime-power-order cyclic subgroups, each with one generator
    cyclics: dict[frozenset, Perm] = {}
    for x in elems:
        if x == ident:
            continue
        o = perm_order(x)
        if not _is_prime_power(o):
            continue
        powers = [ident]
        y = x
        while y != ident:
            powers.append(y)
            y = pmul(y, x)
        fs = frozenset(powers)
        if fs not in cyclics:
            cyclics[fs] = x
    cyclic_list = sorted(cyclics.items(), key=lambda kv: (len(kv[0]), sorted(kv[0])))

    classes: list[dict] = []
    seen: set[frozenset] = set()

    def add_class(K: frozenset, gens: list[Perm]) -> None:
        orbit = _subgroup_orbit(K, G.generators)
        rep = min(orbit, key=lambda s: tuple(sorted(s)))
        conj = orbit[rep]
        ci = pinv(conj)
        rep_gens = [pmul(pmul(ci, g), conj) for g in gens]
        classes.append({"rep": rep, "gens": rep_gens, "orbit": orbit})
        seen.update(orbit)

    add_class(frozenset([ident]), [])
    i = 0
    while i < len(classes):
        H = classes[i]
        for fs_c, x in cyclic_list:
            if fs_c <= H["rep"]:
                continue
            K = _coset_closure(H["rep"], H["gens"], x)
            if K in seen:
                continue
            add_class(K, H["gens"] + [x])
        i += 1

    out = []
    for cls in sorted(classes, key=lambda c: (len(c["rep"]), tuple(sorted(c["rep"])))):
        gens = _reduce_generators(cls["rep"])
        rep_group = PermGroup(G.degree, gens)
        out.append(
            SubgroupClass(
                representative=rep_group,
                order=len(cls["rep"]),
                class_size=len(cls["orbit"]),
                rep_set=cls["rep"],
                orbit=tuple(cls["orbit"].keys()),
            )
        )
    return out


def enumerate_subgroups(G: PermGroup, order_bound: int = DEFAULT_MAX_ORDER) -> list[SubgroupClass]:
    """All conjugacy classes of subgroups, canonically ordered.

    Refuses (never truncates) when |G| exceeds the bound.
    """
    if G.order > order_bound:
        raise OrderLimitError(
            f"group order {G.order} exceeds the enumeration cap {order_bound}; "
            "raise the cap explicitly to proceed"
        )
    if G._lattice is None:
        G._lattice = _build_lattice(G, order_bound)
    return G._lattice


def lattice_dump(G: PermGroup, order_bound: int = DEFAULT_MAX_ORDER) -> str:
    lines = []
    for cls in enumerate_subgroups(G, order_bound):
        gens = ";".join(perm_to_cycles(g) for g in cls.representative.generators) or "()"
        lines.append(f"order={cls.order} class_size={cls.class_size} gens={gens}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# brute-force Hall properties


def _odd_part_primes(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def group_prime_divisors(order: int) -> list[int]:
    return _odd_part_primes(order)


def _is_pi_number(n: int, pi) -> bool:
    for p in pi:
        while n % p == 0:
            n //= p
    return n == 1


def pi_hall_subgroups(
    G: PermGroup, pi: PrimeSet, order_bound: int = DEFAULT_MAX_ORDER
) -> list[SubgroupClass]:
    """Classes whose order is the full pi-part of |G|."""
    target = pi_part(G.order, pi)
    return [c for c in enumerate_subgroups(G, order_bound) if c.order == target]


def maximal_pi_subgroups(
    G: PermGroup, pi: PrimeSet, order_bound: int = DEFAULT_MAX_ORDER
) -> list[SubgroupClass]:
    """Classes of pi-subgroups maximal under inclusion up to conjugacy."""
    lattice = enumerate_subgroups(G, order_bound)
    pi_classes = [c for c in lattice if _is_pi_number(c.order, pi)]
    maximal = []
    for c in pi_classes:
        dominated = any(
            d.order > c.order and any(c.rep_set <= s for s in d.orbit)
            for d in pi_classes
        )
        if not dominated:
            maximal.append(c)
    return maximal


def _class_label(c: SubgroupClass) -> dict:
    return {
        "order": c.order,
        "class_size": c.class_size,
        "gens": [perm_to_cycles(g) for g in c.representative.generators],
    }


def _set_label(s: frozenset) -> dict:
    return {"order": len(s), "gens": [perm_to_cycles(g) for g in _reduce_generators(s)]}


def _d_within(
    all_sets_by_class: list[tuple[SubgroupClass, tuple]],
    M_set: frozenset,
    M_gens: list[Perm],
    pi,
) -> tuple[bool, dict | None]:
    """D property of the subgroup with element set M_set, conjugacy taken
    inside that subgroup; uses the ambient group's full lattice."""
    contained = [
        s
        for cls, orbit in all_sets_by_class
        if _is_pi_number(cls.order, pi)
        for s in orbit
        if s <= M_set
    ]
    maximal = [s for s in contained if not any(s < t for t in contained)]
    if len(maximal) <= 1:
        return True, None
    orb = _subgroup_orbit(maximal[0], M_gens)
    for s in maximal[1:]:
        if s not in orb:
            return False, {
                "overgroup": _set_label(M_set),
                "witness_pair": [_set_label(maximal[0]), _set_label(s)],
            }
    return True, None


def brute_property(
    G: PermGroup, pi: PrimeSet, property: str, order_bound: int = DEFAULT_MAX_ORDER
) -> tuple[bool, dict | None]:
    """Definitional evaluation of E, C, D, U or star on the subgroup lattice.

    Returns (holds, witness); the witness names the violating classes,
    the violating overgroup, or the violating pi-subgroup.
    """
    if property not in ("E", "C", "D", "U", "star"):
        raise ValueError(f"unknown property {property!r}")
    lattice = enumerate_subgroups(G, order_bound)

    if property in ("E", "C"):
        halls = pi_hall_subgroups(G, pi, order_bound)
        if not halls:
            return False, {"reason": "no pi-Hall subgroup", "target": pi_part(G.order, pi)}
        if property == "E":
            return True, {"hall": _class_label(halls[0])}
        if len(halls) == 1:
            return True, {"hall": _class_label(halls[0])}
        return False, {"witness_pair": [_class_label(halls[0]), _class_label(halls[1])]}

    if property == "D":
        maximal = maximal_pi_subgroups(G, pi, order_bound)
        if len(maximal) == 1:
            return True, {"hall": _class_label(maximal[0])}
        return False, {"witness_pair": [_class_label(maximal[0]), _class_label(maximal[1])]}

    if property == "U":
        ok, witness = brute_property(G, pi, "D", order_bound)
        if not ok:
            return False, witness
        halls = pi_hall_subgroups(G, pi, order_bound)
        hall_orbit = halls[0].orbit
        by_class = [(c, c.orbit) for c in lattice]
        for cls in lattice:
            if not any(h <= cls.rep_set for h in hall_orbit):
                continue
            gens = cls.representative.generators or [identity(G.degree)]
            ok, witness = _d_within(by_class, cls.rep_set, gens, pi)
            if not ok:
                return False, witness
        return True, None

    # star: every pi-subgroup has a normal abelian tau-Hall subgroup
    inter = [t for t in pi if G.order % t == 0]
    tau = inter[1:]  # drop the smallest
    all_sets = [s for c in lattice if _is_pi_number(c.order, pi) for s in c.orbit]
    sets_pool = set(all_sets)
    for cls in lattice:
        if not _is_pi_number(cls.order, pi):
            continue
        P = cls.rep_set
        target = pi_part(cls.order, tau)
        candidates = [s for s in sets_pool if len(s) == target and s <= P]
        p_gens = cls.representative.generators
        found = False
        for Q in candidates:
            if not _is_normal_in(Q, p_gens):
                continue
            if not _is_abelian(Q):
                continue
            found = True
            break
        if not found:
            return False, {"violating_pi_subgroup": _class_label(cls), "tau_target": target}
    return True, None


def _is_normal_in(Q: frozenset, gens: list[Perm]) -> bool:
    for g in gens:
        gi = pinv(g)
        if _conj_set(Q, g, gi) != Q:
            return False
    return True


def _is_abelian(Q: frozenset) -> bool:
    qs = list(Q)
    for i, a in enumerate(qs):
        for b in qs[i + 1 :]:
            if pmul(a, b) != pmul(b, a):
                return False
    return True


def brute_d_via_hall_containment(
    G: PermGroup, pi: PrimeSet, order_bound: int = DEFAULT_MAX_ORDER
) -> bool:
    """Alternative D definition: C holds and every pi-subgroup lies inside
    a pi-Hall subgroup.  Used as an independent cross-check."""
    ok, _ = brute_property(G, pi, "C", order_bound)
    if not ok:
        return False
    lattice = enumerate_subgroups(G, order_bound)
    halls = pi_hall_subgroups(G, pi, order_bound)
    hall_orbit = halls[0].orbit
    for cls in lattice:
        if not _is_pi_number(cls.order, pi):
            continue
        if not any(cls.rep_set <= h for h in hall_orbit):
            return False
    return True
