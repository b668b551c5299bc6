"""Products, coproducts and dimensions of PQSym* and of its nested
subalgebras of r-parking quasi-symmetric functions.

G-basis elements are labelled by parking functions (word tuples); the
r-bases by :class:`~quasisym.biwords.RBiWord`.
"""

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import factorial

from .biwords import (RBiWord, arrangements, canonical_r, phi, phi_inv,
                      orbit_pf_count, r_biwords, rlabel, std_biword)
from .config import check_cap
from .formal import (FormalSum, NonConstantClass, TensorSum, regroup,
                     regroup_tensor)
from .words import (format_word, is_parking, parkize, parking_functions,
                    prime_blocks)


class InternalMismatch(AssertionError):
    """Two independent computations of the same quantity disagree."""


# --- the G basis of PQSym*

def park_fiber(u, max_letter):
    """Words w with Park(w) = u and every letter <= max_letter.

    Block i of u is lifted by d_i, with 0 <= d_1 <= d_2 <= ...
    """
    u = tuple(u)
    blocks = prime_blocks(u)
    out = []

    def rec(i, low, w):
        if i == len(blocks):
            out.append(tuple(w))
            return
        _, P = blocks[i]
        top = max(u[p - 1] for p in P)
        for d in range(low, max_letter - top + 1):
            for p in P:
                w[p - 1] = u[p - 1] + d
            rec(i + 1, d, w)
        for p in P:
            w[p - 1] = u[p - 1]

    rec(0, 0, list(u))
    return out


def G_product(u, v):
    u, v = tuple(u), tuple(v)
    n = len(u) + len(v)
    check_cap("max_hopf_degree", n)
    out = FormalSum()
    right = park_fiber(v, n)
    for a in park_fiber(u, n):
        for b in right:
            if is_parking(a + b):
                out._add(a + b, 1)
    return out


def G_coproduct(u):
    u = tuple(u)
    out = TensorSum()
    for k in range(len(u) + 1):
        a = tuple(x for x in u if x <= k)
        b = tuple(x - k for x in u if x > k)
        if len(a) == k and is_parking(a) and is_parking(b):
            out._add((a, b), 1)
    return out


def G_product_brute(u, v):
    """Oracle: scan PF_{|u|+|v|} and keep the splits parkizing to (u, v)."""
    u, v = tuple(u), tuple(v)
    k = len(u)
    return FormalSum.of(*(w for w in parking_functions(k + len(v))
                          if parkize(w[:k]) == u and parkize(w[k:]) == v))


def linear_product(x, y, prod):
    out = FormalSum()
    for a, c in x.items():
        for b, d in y.items():
            out = out + prod(a, b).scale(c * d)
    return out


def tensor_product(s, t, prod):
    """(a ⊗ b)(c ⊗ d) = ac ⊗ bd, extended bilinearly."""
    out = TensorSum()
    for (a, b), c in s.items():
        for (x, y), d in t.items():
            left, right = prod(a, x), prod(b, y)
            for p, e in left.items():
                for q, f in right.items():
                    out._add((p, q), c * d * e * f)
    return out


def coassoc_sides(label, coproduct):
    """((Δ⊗id)Δ, (id⊗Δ)Δ) as dicts over label triples."""
    left, right = Counter(), Counter()
    for (a, b), c in coproduct(label).items():
        for (x, y), d in coproduct(a).items():
            left[(x, y, b)] += c * d
        for (x, y), d in coproduct(b).items():
            right[(a, x, y)] += c * d
    strip = lambda cnt: {k: v for k, v in cnt.items() if v}
    return strip(left), strip(right)


# --- the r-bases

def unit_r(r):
    return RBiWord(r, (), ())


def as_rlabel(u, r):
    """Accept an RBiWord or a word naming an orbit representative."""
    if isinstance(u, RBiWord):
        if u.r != r:
            raise ValueError("label has r=%s, expected %s" % (u.r, r))
        return u
    return rlabel(tuple(u), r)


def reduce_r(x):
    """Expansion of G^{(r)}_x in the G basis (one term per arrangement)."""
    return FormalSum.of(*(phi_inv(cols) for cols in arrangements(x)))


def orbit_members(x):
    return [phi_inv(cols) for cols in arrangements(x)]


def regroup_r(s, r):
    """Rewrite a G-basis sum on the r-basis (raises NonConstantClass)."""
    return regroup(s, lambda u: rlabel(u, r), orbit_members)


def _orbit_words(x, max_letter):
    words = []
    for K in orbit_members(x):
        words += park_fiber(K, max_letter)
    return words


def Gr_product_formula(x, y, r):
    """Sum over parking w = a.b with a, b in the orbits, weighted by
    1/|Orb^r(w) ∩ PF|, collected on the orbit of w."""
    x, y = as_rlabel(x, r), as_rlabel(y, r)
    n = x.n + y.n
    check_cap("max_hopf_degree", n)
    out = FormalSum()
    right = _orbit_words(y, n)
    for a in _orbit_words(x, n):
        for b in right:
            w = a + b
            if is_parking(w):
                cls = rlabel(w, r)
                out._add(cls, Fraction(1, orbit_pf_count(cls)))
    return out


def Gr_product_expanded(x, y, r):
    """Expand both factors, multiply in the G basis, regroup by r-orbits."""
    x, y = as_rlabel(x, r), as_rlabel(y, r)
    return regroup_r(linear_product(reduce_r(x), reduce_r(y), G_product), r)


def Gr_product(x, y, r):
    a = Gr_product_formula(x, y, r)
    try:
        b = Gr_product_expanded(x, y, r)
    except NonConstantClass as exc:
        raise InternalMismatch("expanded product does not regroup: %s" % exc)
    if a != b:
        raise InternalMismatch("product of %s and %s at r=%s: formula %s vs expanded %s"
                               % (x, y, r, a, b))
    if any(c not in (0, 1) for _, c in a.items()):
        raise InternalMismatch("coefficient outside {0,1} in %s" % a)
    return a


def Gr_coproduct(x, r):
    x = as_rlabel(x, r)
    out = TensorSum()
    lam = x.lam
    for cut in range(len(x.I) + 1):
        I1, I2 = x.I[:cut], x.I[cut:]
        for size in range(len(lam) + 1):
            for K in combinations(range(len(lam)), size):
                ks = set(K)
                left = std_biword(I1 + tuple(lam[j] for j in K))
                right = std_biword(I2 + tuple(c for j, c in enumerate(lam) if j not in ks))
                out._add((canonical_r(left, r), canonical_r(right, r)), 1)
    return out


def Gr_coproduct_expanded(x, r):
    """Oracle: coproduct of the G-expansion, regrouped on both sides."""
    x = as_rlabel(x, r)
    total = reduce_r(x).linear(G_coproduct, TensorSum())
    return regroup_tensor(total, lambda u: rlabel(u, r), orbit_members)


def coproduct_mass(x):
    return (len(x.I) + 1) * 2 ** len(x.lam)


# --- dimensions

def integer_partitions(n, k, largest=None):
    """Partitions of n into exactly k parts, weakly decreasing."""
    if largest is None:
        largest = n
    if k == 0:
        if n == 0:
            yield ()
        return
    for first in range(min(n - (k - 1), largest), 0, -1):
        for rest in integer_partitions(n - first, k - 1, first):
            yield (first,) + rest


def _ppf_count(s):
    return (s - 1) ** (s - 1) if s > 1 else 1


@lru_cache(maxsize=None)
def A_r_formula(n, k, r):
    """Sum over set partitions of [n] into k blocks of
    (#blocks with >= r elements)! times the product of (|Q|-1)^(|Q|-1)."""
    total = 0
    for sizes in integer_partitions(n, k):
        ways = factorial(n)
        for s in sizes:
            ways //= factorial(s)
        for m in Counter(sizes).values():
            ways //= factorial(m)
        weight = factorial(sum(1 for s in sizes if s >= r))
        for s in sizes:
            weight *= _ppf_count(s)
        total += ways * weight
    return total


def A_r_direct(n, k, r):
    return sum(1 for _ in r_biwords(n, r, k))


def A_r(n, k, r, cross_check=None):
    """A^r_{n,k}; checked against direct r-bi-word enumeration for small n."""
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    check_cap("max_count_degree", n)
    value = A_r_formula(n, k, r)
    if cross_check is None:
        cross_check = n <= 6
    if cross_check:
        direct = A_r_direct(n, k, r)
        if direct != value:
            raise InternalMismatch("A^%s_{%d,%d}: formula %d, enumeration %d"
                                   % (r, n, k, value, direct))
    return value


def dims(n, r, cross_check=None):
    if n == 0:
        return 1
    return sum(A_r(n, k, r, cross_check) for k in range(1, n + 1))


def dims_by_orbits(n, r):
    """Oracle: number of distinct r-orbit labels among PF_n."""
    return len({rlabel(u, r) for u in parking_functions(n)})


# --- invariance

def truncated_Gr(x, r, window):
    """Truncated word realization of G^{(r)}_x: orbit words fitting the window."""
    from .biwords import orbit_r
    return FormalSum.of(*orbit_r(x.label(), r, window))


# --- rendering helpers

def g_text(u):
    return "G_" + format_word(u) if u else "1"


def gr_text(x):
    return "G^(%s)_%s" % ("inf" if x.r == float("inf") else x.r, format_word(x.label())) \
        if x.n else "1"
