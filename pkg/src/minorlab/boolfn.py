"""Boolean functions as truth tables and the simple-minor quasi-order.

A function of arity n is stored as a Python integer holding 2^n bits:
bit number ``a = a_1 + 2 a_2 + ... + 2^(n-1) a_n`` is f(a_1, ..., a_n),
so x_1 is the least significant coordinate.  Variables are 1-based in the
public API.

The Zhegalkin polynomial of f is kept as a :class:`Hypergraph`: each
monomial is a set of variables, stored as a bitmask over vertices.  With
this layout the coefficient of monomial S sits at bit S of the transformed
table, so the Moebius transform needs no reindexing.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

MAX_ARITY = 16
MAX_CANONICAL_ARITY = 8


class CapExceeded(ValueError):
    """Raised when an input exceeds a size cap of an exhaustive procedure."""


@lru_cache(maxsize=None)
def low_mask(n: int, i: int) -> int:
    """Positions of an arity-n table where coordinate i (0-based) is 0."""
    block = (1 << (1 << i)) - 1
    period = (1 << (2 << i)) - 1
    full = (1 << (1 << n)) - 1
    return full // period * block


@lru_cache(maxsize=None)
def full_mask(n: int) -> int:
    return (1 << (1 << n)) - 1


def iter_bits(x: int):
    """Yield the indices of the set bits of x, lowest first."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << (v - 1)
    return m


def vertices_of(mask: int) -> tuple[int, ...]:
    return tuple(b + 1 for b in iter_bits(mask))


def int_to_bits(x: int, length: int) -> np.ndarray:
    nbytes = max(1, (length + 7) // 8)
    raw = np.frombuffer(x.to_bytes(nbytes, "little"), dtype=np.uint8)
    return np.unpackbits(raw, bitorder="little")[:length].astype(bool)


def bits_to_int(arr) -> int:
    packed = np.packbits(np.asarray(arr, dtype=bool), bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


@dataclass(frozen=True, order=True)
class TruthTable:
    arity: int
    bits: int

    def __post_init__(self):
        if not 0 <= self.arity <= MAX_ARITY:
            raise CapExceeded(f"arity {self.arity} outside 0..{MAX_ARITY}")
        if self.bits < 0 or self.bits > full_mask(self.arity):
            raise ValueError("bit vector longer than 2^arity")

    @classmethod
    def from_values(cls, values: Sequence[int]) -> TruthTable:
        n = len(values).bit_length() - 1
        if len(values) != 1 << n:
            raise ValueError(f"table length {len(values)} is not a power of two")
        return cls(n, bits_to_int(values))

    @classmethod
    def from_function(cls, n: int, func) -> TruthTable:
        """Tabulate ``func(a_1, ..., a_n)`` over all assignments."""
        bits = 0
        for a in range(1 << n):
            if func(*((a >> i) & 1 for i in range(n))):
                bits |= 1 << a
        return cls(n, bits)

    @classmethod
    def constant(cls, c: int, n: int = 0) -> TruthTable:
        return cls(n, full_mask(n) if c else 0)

    @classmethod
    def variable(cls, i: int, n: int) -> TruthTable:
        if not 1 <= i <= n:
            raise IndexError(f"variable {i} out of range 1..{n}")
        return cls(n, full_mask(n) & ~low_mask(n, i - 1))

    @classmethod
    def from_hex(cls, n: int, text: str) -> TruthTable:
        return cls(n, int(text, 16))

    @property
    def size(self) -> int:
        return 1 << self.arity

    def hex(self) -> str:
        width = max(1, self.size // 4)
        return format(self.bits, f"0{width}x")

    def values(self) -> np.ndarray:
        return int_to_bits(self.bits, self.size)

    def __call__(self, *args: int) -> int:
        if len(args) != self.arity:
            raise TypeError(f"expected {self.arity} arguments, got {len(args)}")
        a = sum((x & 1) << i for i, x in enumerate(args))
        return (self.bits >> a) & 1

    def __xor__(self, other: TruthTable) -> TruthTable:
        return TruthTable(self.arity, self.bits ^ other.bits)

    def __and__(self, other: TruthTable) -> TruthTable:
        return TruthTable(self.arity, self.bits & other.bits)

    def __or__(self, other: TruthTable) -> TruthTable:
        return TruthTable(self.arity, self.bits | other.bits)

    def __invert__(self) -> TruthTable:
        return TruthTable(self.arity, self.bits ^ full_mask(self.arity))


@dataclass(frozen=True)
class VarMap:
    """Total map {1..n} -> {1..m}; ``image[i-1]`` is the image of i."""

    image: tuple[int, ...]
    codomain_size: int

    def __post_init__(self):
        object.__setattr__(self, "image", tuple(self.image))
        for v in self.image:
            if not 1 <= v <= self.codomain_size:
                raise ValueError(f"image {v} outside 1..{self.codomain_size}")

    @property
    def domain_size(self) -> int:
        return len(self.image)

    def __call__(self, i: int) -> int:
        return self.image[i - 1]

    @classmethod
    def identity(cls, n: int) -> VarMap:
        return cls(tuple(range(1, n + 1)), n)

    def then(self, other: VarMap) -> VarMap:
        """Composition: first self, then other."""
        if other.domain_size != self.codomain_size:
            raise ValueError("maps do not compose")
        return VarMap(tuple(other(v) for v in self.image), other.codomain_size)


@dataclass(frozen=True, order=True)
class Hypergraph:
    """Vertex set {1..n} with hyperedges stored as sorted vertex bitmasks.

    The empty edge (mask 0) is allowed and stands for the constant monomial.
    """

    n_vertices: int
    edges: tuple[int, ...]

    def __post_init__(self):
        edges = tuple(sorted(set(self.edges)))
        if len(edges) != len(self.edges):
            raise ValueError("duplicate hyperedge")
        limit = (1 << self.n_vertices) - 1
        for e in edges:
            if e < 0 or e & ~limit:
                raise ValueError(f"edge {vertices_of(e)} not inside 1..{self.n_vertices}")
        object.__setattr__(self, "edges", edges)

    @classmethod
    def from_sets(cls, n: int, edges: Iterable[Iterable[int]]) -> Hypergraph:
        return cls(n, tuple(mask_of(e) for e in edges))

    @classmethod
    def from_masks(cls, n: int, masks: Iterable[int]) -> Hypergraph:
        """Build from masks, cancelling repeated monomials in pairs."""
        odd = set()
        for m in masks:
            odd ^= {m}
        return cls(n, tuple(odd))

    def edge_sets(self) -> list[tuple[int, ...]]:
        return [vertices_of(e) for e in self.edges]

    @property
    def support(self) -> int:
        """Mask of vertices lying in some edge."""
        s = 0
        for e in self.edges:
            s |= e
        return s

    def has_edge(self, vertices: Iterable[int]) -> bool:
        return mask_of(vertices) in set(self.edges)

    def __repr__(self):
        body = ", ".join("{" + ",".join(map(str, s)) + "}" for s in self.edge_sets())
        return f"Hypergraph({self.n_vertices}, [{body}])"


def _moebius(bits: int, n: int) -> int:
    for i in range(n):
        bits ^= (bits & low_mask(n, i)) << (1 << i)
    return bits


def zhegalkin(f: TruthTable) -> Hypergraph:
    """Monomials of the GF(2) polynomial of f, as a hypergraph on f.arity vertices."""
    coeffs = _moebius(f.bits, f.arity)
    return Hypergraph(f.arity, tuple(iter_bits(coeffs)))


def from_polynomial(h: Hypergraph) -> TruthTable:
    if h.n_vertices > MAX_ARITY:
        raise CapExceeded(f"{h.n_vertices} vertices exceeds arity cap {MAX_ARITY}")
    coeffs = 0
    for e in h.edges:
        coeffs |= 1 << e
    # the transform is an involution over GF(2)
    return TruthTable(h.n_vertices, _moebius(coeffs, h.n_vertices))


def is_essential(f: TruthTable, i: int) -> bool:
    s = 1 << (i - 1)
    return bool(((f.bits >> s) ^ f.bits) & low_mask(f.arity, i - 1))


def essential_vars(f: TruthTable) -> frozenset[int]:
    return frozenset(i for i in range(1, f.arity + 1) if is_essential(f, i))


def ess(f: TruthTable) -> int:
    return len(essential_vars(f))


def _check_index(f: TruthTable, i: int):
    if not 1 <= i <= f.arity:
        raise IndexError(f"variable {i} out of range 1..{f.arity}")


def identify(f: TruthTable, i: int, j: int) -> TruthTable:
    """f with x_i replaced by x_j; the arity is kept and x_i becomes a dummy."""
    _check_index(f, i)
    _check_index(f, j)
    if i == j:
        return f
    n, full = f.arity, full_mask(f.arity)
    li, lj = low_mask(n, i - 1), low_mask(n, j - 1)
    s = 1 << (i - 1)
    flipped = ((f.bits & li) << s) | ((f.bits >> s) & li)
    same = (li & lj) | (full & ~li & ~lj)
    return TruthTable(n, (f.bits & same) | (flipped & ~same & full))


@lru_cache(maxsize=64)
def _pullback_index(image: tuple[int, ...], m: int) -> np.ndarray:
    a = np.arange(1 << m, dtype=np.int64)
    idx = np.zeros(1 << m, dtype=np.int64)
    for i, v in enumerate(image):
        idx |= ((a >> (v - 1)) & 1) << i
    return idx


def apply_map(f: TruthTable, sigma: VarMap) -> TruthTable:
    """The minor g(a_1..a_m) = f(a_sigma(1), ..., a_sigma(n))."""
    if sigma.domain_size != f.arity:
        raise ValueError(f"map domain {sigma.domain_size} != arity {f.arity}")
    m = sigma.codomain_size
    if m > MAX_ARITY:
        raise CapExceeded(f"codomain {m} exceeds arity cap {MAX_ARITY}")
    idx = _pullback_index(sigma.image, m)
    return TruthTable(m, bits_to_int(f.values()[idx]))


def compact(f: TruthTable) -> TruthTable:
    """Drop inessential variables, keeping the order of the remaining ones."""
    keep = sorted(essential_vars(f))
    if not keep:
        return TruthTable(0, f.bits & 1)
    rank = {v: r for r, v in enumerate(keep, start=1)}
    image = tuple(rank.get(v, 1) for v in range(1, f.arity + 1))
    return apply_map(f, VarMap(image, len(keep)))


@dataclass(frozen=True, order=True)
class CanonicalForm:
    ess_arity: int
    table: TruthTable

    def key(self) -> tuple[int, int]:
        return (self.ess_arity, self.table.bits)


@lru_cache(maxsize=None)
def _perm_indices(k: int) -> np.ndarray:
    perms = list(itertools.permutations(range(1, k + 1)))
    return np.stack([_pullback_index(p, k) for p in perms]) if k else np.zeros((1, 1), np.int64)


def _lex_min_row(rows: np.ndarray) -> np.ndarray:
    """Row of a boolean matrix that is smallest read as a little-endian integer."""
    width = rows.shape[1]
    if width < 64:
        rows = np.pad(rows, ((0, 0), (0, 64 - width)))
    words = np.packbits(rows, axis=1, bitorder="little").view("<u8")
    # lexsort: last key is primary, i.e. the most significant word
    order = np.lexsort(words.T)
    return rows[order[0], :width]


@lru_cache(maxsize=1 << 18)
def _canonical_cached(arity: int, bits: int) -> CanonicalForm:
    c = compact(TruthTable(arity, bits))
    k = c.arity
    if k > MAX_CANONICAL_ARITY:
        raise CapExceeded(f"essential arity {k} exceeds canonical cap {MAX_CANONICAL_ARITY}")
    if k <= 1:
        return CanonicalForm(k, c)
    rows = c.values()[_perm_indices(k)]
    return CanonicalForm(k, TruthTable(k, bits_to_int(_lex_min_row(rows))))


def canonical(f: TruthTable) -> CanonicalForm:
    """Permutation-minimal table of f on its essential variables only."""
    return _canonical_cached(f.arity, f.bits)


def equivalent(f: TruthTable, g: TruthTable) -> bool:
    return canonical(f) == canonical(g)


@lru_cache(maxsize=4096)
def identification_closure(form: CanonicalForm) -> frozenset[CanonicalForm]:
    """All classes reachable from a canonical form by identifying variables."""
    seen = {form}
    queue = deque([form])
    while queue:
        t = queue.popleft().table
        for i, j in itertools.combinations(range(1, t.arity + 1), 2):
            c = canonical(identify(t, i, j))
            if c not in seen:
                seen.add(c)
                queue.append(c)
    return frozenset(seen)


def is_minor(g: TruthTable, f: TruthTable) -> bool:
    """g <= f, decided over the identification closure of f."""
    cg, cf = canonical(g), canonical(f)
    if cg.ess_arity > cf.ess_arity:
        return False
    if cg.ess_arity == cf.ess_arity:
        return cg == cf
    return cg in identification_closure(cf)


def is_minor_by_maps(g: TruthTable, f: TruthTable) -> bool:
    """g <= f by trying every variable map; exponential, for cross-checks."""
    gc, fc = compact(g), compact(f)
    if gc.arity > fc.arity:
        return False
    # pad 0-ary tables to one dummy so that maps exist
    if gc.arity == 0:
        gc = TruthTable(1, full_mask(1) if gc.bits else 0)
    if fc.arity == 0:
        fc = TruthTable(1, full_mask(1) if fc.bits else 0)
    n, m = fc.arity, gc.arity
    for image in itertools.product(range(1, m + 1), repeat=n):
        if apply_map(fc, VarMap(image, m)) == gc:
            return True
    return False


# --- batched kernels over many tables of one arity -------------------------------
# Rows are truth tables (or coefficient vectors) as boolean arrays of length 2^n.


def moebius_rows(rows: np.ndarray) -> np.ndarray:
    """Moebius transform of every row; maps tables to coefficients and back."""
    out = np.array(rows, dtype=bool, copy=True)
    n = out.shape[1].bit_length() - 1
    for i in range(n):
        view = out.reshape(out.shape[0], -1, 2, 1 << i)
        view[:, :, 1, :] ^= view[:, :, 0, :]
    return out


def apply_map_rows(rows: np.ndarray, sigma: VarMap) -> np.ndarray:
    if 1 << sigma.domain_size != rows.shape[1]:
        raise ValueError("map domain does not match table width")
    return rows[:, _pullback_index(sigma.image, sigma.codomain_size)]
