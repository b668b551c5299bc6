"""Bi-words: the column encoding of words behind the parking
quasi-symmetrizing action and its r-generalizations.

A bi-word is a tuple of :class:`Column` (trailing empty columns dropped).
A non-empty column holds an ascending tuple of positions and a prime
parking function of the same length; the empty column is ``EMPTY``.
"""

from dataclasses import dataclass
from itertools import combinations, permutations, product
from math import factorial
from typing import NamedTuple

from .words import (format_word, is_parking, is_prime_parking, parkize,
                    prime_blocks)


class InvalidBiWord(ValueError):
    pass


class Column(NamedTuple):
    pos: tuple
    ppf: tuple

    def __len__(self):
        return len(self.pos)

    @property
    def empty(self):
        return not self.pos

    def __str__(self):
        if self.empty:
            return "ε/ε"
        return "%s/%s" % ("".join(map(str, self.pos)) if max(self.pos) < 10
                          else ".".join(map(str, self.pos)), format_word(self.ppf))


EMPTY = Column((), ())


def col(pos, ppf):
    return Column(tuple(pos), tuple(ppf))


def trim(cols):
    cols = list(cols)
    while cols and cols[-1].empty:
        cols.pop()
    return tuple(cols)


def biword_length(m):
    return sum(len(c) for c in m)


def validate(m):
    seen = []
    for c in m:
        if c.empty:
            continue
        if len(c.pos) != len(c.ppf):
            raise InvalidBiWord("column %s: length mismatch" % (c,))
        if list(c.pos) != sorted(set(c.pos)):
            raise InvalidBiWord("column %s: positions not ascending" % (c,))
        if not is_prime_parking(c.ppf):
            raise InvalidBiWord("column %s: not a prime parking function" % (c,))
        seen += c.pos
    if sorted(seen) != list(range(1, len(seen) + 1)):
        raise InvalidBiWord("first row is not a set composition of [%d]" % len(seen))
    return m


def psi(u):
    """Bi-word of a parking function: its prime blocks as columns."""
    if not is_parking(u):
        raise InvalidBiWord("psi needs a parking function")
    return tuple(Column(P, parkize(U)) for U, P in prime_blocks(u))


def deltas(w):
    """Offsets between w and Park(w) on each prime block, in bar order."""
    w = tuple(w)
    u = parkize(w)
    return tuple(w[P[0] - 1] - u[P[0] - 1] for _, P in prime_blocks(u))


def phi(w):
    w = tuple(w)
    out = []
    prev = 0
    for c, d in zip(psi(parkize(w)), deltas(w)):
        out += [EMPTY] * (d - prev) + [c]
        prev = d
    return tuple(out)


def offsets(m):
    """Letter offset of each column: sum of the previous lengths, |ε| := 1."""
    out, acc = [], 0
    for c in m:
        out.append(acc)
        acc += len(c) if not c.empty else 1
    return out


def phi_inv(m):
    m = validate(tuple(m))
    w = [0] * biword_length(m)
    for c, off in zip(m, offsets(m)):
        for p, x in zip(c.pos, c.ppf):
            w[p - 1] = x + off
    return tuple(w)


def columns_of(m):
    return tuple(c for c in m if not c.empty)


def support(m):
    """Number of columns up to the last non-empty one."""
    return len(trim(m))


# --- the r-action

def act_park(i, m, r=1):
    """``s_i`` on a bi-word: swap columns i, i+1 if one has fewer than r
    positions (the empty column always does)."""
    if i < 1:
        raise ValueError("generator index must be >= 1")
    m = list(m)
    if len(m) < i + 1:
        m += [EMPTY] * (i + 1 - len(m))
    if len(m[i - 1]) < r or len(m[i]) < r:
        m[i - 1], m[i] = m[i], m[i - 1]
    return trim(m)


def act_park_word(i, w, r=1):
    return phi_inv(act_park(i, phi(w), r))


def act_park_sum(i, s, r=1):
    return s.map_labels(lambda w: act_park_word(i, w, r))


# --- r-bi-words (orbit canonical forms)

@dataclass(frozen=True)
class RBiWord:
    r: object
    I: tuple
    lam: tuple

    @property
    def columns(self):
        return self.I + self.lam

    @property
    def n(self):
        return biword_length(self.columns)

    def label(self):
        return phi_inv(self.columns)

    def sort_key(self):
        w = self.label()
        return (len(w), w)

    def __len__(self):
        return self.n

    def __str__(self):
        return format_word(self.label())

    def to_json(self):
        return {"r": r_text(self.r), "I": [column_json(c) for c in self.I],
                "lambda": [column_json(c) for c in self.lam]}


def r_text(r):
    return "inf" if r == float("inf") else r


def canonical_r(m, r):
    cols = columns_of(m)
    big = tuple(c for c in cols if len(c) >= r)
    small = tuple(sorted((c for c in cols if len(c) < r), key=lambda c: c.pos[0]))
    return RBiWord(r, big, small)


def rlabel(u, r):
    """The r-bi-word of the orbit of the word ``u``."""
    return canonical_r(phi(u), r)


def same_orbit_r(m1, m2, r):
    return canonical_r(m1, r) == canonical_r(m2, r)


class WindowTooSmall(ValueError):
    pass


def arrangements(x):
    """Column sequences of I (in order) shuffled with any ordering of lambda."""
    I, lam = x.I, x.lam
    k = len(I) + len(lam)
    for lam_order in permutations(lam):
        for slots in combinations(range(k), len(I)):
            it_I, it_l = iter(I), iter(lam_order)
            slots = set(slots)
            yield tuple(next(it_I) if j in slots else next(it_l) for j in range(k))


def orbit_pf_count(x):
    """|Orb^r(x) ∩ PF|: arrangements with no empty column."""
    return factorial(len(x.I) + len(x.lam)) // factorial(len(x.I))


def orbit_r(u, r, window):
    """Words in the r-orbit of ``u`` whose bi-word fits in ``window`` columns."""
    x = rlabel(u, r)
    k = len(x.I) + len(x.lam)
    if window < k:
        raise WindowTooSmall("window %d < %d non-empty columns" % (window, k))
    out = set()
    for cols in arrangements(x):
        for slots in combinations(range(window), k):
            m = [EMPTY] * window
            for j, c in zip(slots, cols):
                m[j] = c
            out.add(phi_inv(trim(m)))
    return out


def orbit_bfs(m, window, r):
    """Orbit of a bi-word under the window generators (search oracle)."""
    start = trim(m)
    seen = {start}
    todo = [start]
    while todo:
        x = todo.pop()
        for i in range(1, window):
            y = act_park(i, x, r)
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return seen


def brute_orbit_r(u, r, window):
    """Oracle: scan every word with letters <= n + window."""
    target = rlabel(u, r)
    n = len(u)
    return {w for w in product(range(1, n + window + 1), repeat=n)
            if support(phi(w)) <= window and rlabel(w, r) == target}


def is_invariant(s, r, window):
    """True iff the word sum ``s`` is fixed by ``s_1 .. s_{window-1}`` of the r-action."""
    for w in s.support():
        if support(phi(w)) > window:
            raise WindowTooSmall("%s lies outside the window %d" % (format_word(w), window))
    return all(act_park_sum(i, s, r) == s for i in range(1, window))


# --- concatenation split and standardization

def _pad_columns(pairs, offset=0):
    """Turn (position, letter) pairs into columns, inserting the unique empty
    columns that make every second row a prime parking function."""
    pairs = sorted(pairs, key=lambda p: (p[1], p[0]))
    out = []
    j = 0
    while j < len(pairs):
        low = pairs[j][1] - offset
        out += [EMPTY] * (low - 1)
        offset += low - 1
        # the block ends before the first t_i >= i (i >= 2) in sorted order
        end = j + 1
        while end < len(pairs) and pairs[end][1] - offset < end - j + 1:
            end += 1
        block = sorted(pairs[j:end])
        out.append(Column(tuple(p for p, _ in block),
                          tuple(x - offset for _, x in block)))
        offset += end - j
        j = end
    return tuple(out)


def split(m, k):
    """Bi-words of the prefix of length k and of the remaining suffix."""
    m = validate(tuple(m))
    n = biword_length(m)
    if not 0 <= k <= n:
        raise ValueError("split point %d outside 0..%d" % (k, n))
    left, right = [], []
    for c, off in zip(m, offsets(m)):
        for p, x in zip(c.pos, c.ppf):
            if p <= k:
                left.append((p, x + off))
            else:
                right.append((p - k, x + off))
    return trim(_pad_columns(left)), trim(_pad_columns(right))


def std_biword(cols):
    """Relabel the positions order-preservingly onto [m]; second rows kept."""
    allpos = [p for c in cols for p in c.pos]
    if len(allpos) != len(set(allpos)):
        raise InvalidBiWord("overlapping positions")
    rank = {p: i for i, p in enumerate(sorted(allpos), 1)}
    return trim(Column(tuple(rank[p] for p in c.pos), c.ppf) for c in cols)


def shift_positions(m, k):
    return tuple(Column(tuple(p + k for p in c.pos), c.ppf) for c in m)


# --- enumeration of r-bi-words

def set_partitions(items):
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [(first,)] + part
        for j in range(len(part)):
            yield part[:j] + [(first,) + part[j]] + part[j + 1:]


def r_biwords(n, r, k=None):
    """All r-bi-words of length n (with k non-empty columns if given)."""
    from .words import prime_parking_functions
    ppfs = {}
    for blocks in set_partitions(range(1, n + 1)):
        if k is not None and len(blocks) != k:
            continue
        blocks = [tuple(sorted(b)) for b in blocks]
        for b in blocks:
            if len(b) not in ppfs:
                ppfs[len(b)] = list(prime_parking_functions(len(b)))
        for choice in product(*(ppfs[len(b)] for b in blocks)):
            cols = [Column(b, f) for b, f in zip(blocks, choice)]
            big = [c for c in cols if len(c) >= r]
            small = tuple(sorted((c for c in cols if len(c) < r), key=lambda c: c.pos[0]))
            for order in permutations(big):
                yield RBiWord(r, tuple(order), small)


def column_json(c):
    if c.empty:
        return "empty"
    return {"pos": list(c.pos), "ppf": format_word(c.ppf)}


def biword_json(m):
    return {"n": biword_length(m), "cols": [column_json(c) for c in m]}


def render_biword(m):
    return " ".join(str(c) for c in m) or "∅"


def parse_biword(text):
    """Parse ``"346/121 2/1 e 17/11"`` (``e`` or ``ε`` for an empty column)."""
    from .words import parse_word
    cols = []
    for tok in text.split():
        if tok in ("e", "ε", "ε/ε", "e/e"):
            cols.append(EMPTY)
            continue
        if "/" not in tok:
            raise InvalidBiWord("column %r needs the form positions/ppf" % tok)
        pos, ppf = tok.split("/")
        cols.append(Column(parse_word(pos), parse_word(ppf)))
    return validate(trim(cols))
