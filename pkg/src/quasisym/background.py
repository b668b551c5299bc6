"""Commutative and word quasi-symmetrizing r-actions (QSym^r, WQSym^r).

Monomials over n commuting variables are exponent tuples of length n;
polynomials are :class:`FormalSum` over them.
"""

from collections import Counter
from itertools import combinations, permutations, product

from .formal import FormalSum, TensorSum, regroup
from .words import pack


# --- commutative action

def act_qsym(i, v, r=1):
    v = list(v)
    if not 1 <= i < len(v):
        raise ValueError("generator s_%d needs 1 <= i < %d" % (i, len(v)))
    if min(v[i - 1], v[i]) < r:
        v[i - 1], v[i] = v[i], v[i - 1]
    return tuple(v)


def orbit(v, r, act=None):
    act = act or act_qsym
    start = tuple(v)
    seen, todo = {start}, [start]
    while todo:
        x = todo.pop()
        for i in range(1, len(x)):
            y = act(i, x, r)
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return seen


def orbit_sum(v, r):
    return FormalSum.of(*orbit(v, r))


def M_composition(I, n):
    """Quasi-monomial M_I over x_1..x_n."""
    I = tuple(I)
    out = FormalSum()
    for idx in combinations(range(n), len(I)):
        v = [0] * n
        for j, part in zip(idx, I):
            v[j] = part
        out._add(tuple(v), 1)
    return out


def is_r_composition(I, lam, r):
    return (all(p >= r for p in I) and all(0 < p < r for p in lam)
            and list(lam) == sorted(lam, reverse=True))


def composition_shuffles(I, lam):
    """Distinct K in I ⧢ (distinct permutations of lam)."""
    I, lam = tuple(I), tuple(lam)
    k = len(I) + len(lam)
    out = set()
    for order in set(permutations(lam)):
        for slots in combinations(range(k), len(I)):
            it_I, it_l = iter(I), iter(order)
            out.add(tuple(next(it_I) if j in slots else next(it_l) for j in range(k)))
    return sorted(out)


def M_r_expansion(I, lam):
    """M^r_{(I,lam)} on the quasi-monomial basis."""
    return FormalSum.of(*composition_shuffles(I, lam))


def M_r(I, lam, n, r):
    if not is_r_composition(I, lam, r):
        raise ValueError("(%r, %r) is not an %s-composition" % (I, lam, r))
    out = FormalSum()
    for K in composition_shuffles(I, lam):
        out = out + M_composition(K, n)
    return out


def r_class(K, r):
    """The r-composition whose expansion contains the composition K."""
    return (tuple(p for p in K if p >= r), tuple(sorted((p for p in K if p < r), reverse=True)))


def regroup_qsym(s, r):
    return regroup(s, lambda K: r_class(K, r), lambda c: composition_shuffles(*c))


def quasi_shuffle(A, B):
    A, B = tuple(A), tuple(B)
    if not A:
        return FormalSum.of(B)
    if not B:
        return FormalSum.of(A)
    a, b = A[0], B[0]
    out = FormalSum()
    for rest, c in quasi_shuffle(A[1:], B).items():
        out._add((a,) + rest, c)
    for rest, c in quasi_shuffle(A, B[1:]).items():
        out._add((b,) + rest, c)
    for rest, c in quasi_shuffle(A[1:], B[1:]).items():
        out._add((a + b,) + rest, c)
    return out


def Mr_product(x, y, r):
    """Product of M^r_x and M^r_y on the r-basis, through the quasi-shuffles
    of the expansions of both factors."""
    total = FormalSum()
    for A in composition_shuffles(*x):
        for B in composition_shuffles(*y):
            total = total + quasi_shuffle(A, B)
    return regroup_qsym(total, r)


def Mr_coproduct(x, r):
    """Deconcatenations of I times the splittings of lam into two sub-multisets."""
    I, lam = x
    out = TensorSum()
    splits = set()
    for mask in product((0, 1), repeat=len(lam)):
        nu = tuple(p for p, b in zip(lam, mask) if b == 0)
        nu2 = tuple(p for p, b in zip(lam, mask) if b == 1)
        splits.add((nu, nu2))
    for cut in range(len(I) + 1):
        for nu, nu2 in splits:
            out._add(((I[:cut], nu), (I[cut:], nu2)), 1)
    return out


def poly_mul(p, q):
    out = Counter()
    for a, c in p.items():
        for b, d in q.items():
            out[tuple(x + y for x, y in zip(a, b))] += c * d
    return FormalSum(out)


def r_compositions(d, r):
    """All (I, lam) of total weight d."""
    out = []
    for big in range(d + 1):
        for I in compositions(big, min_part=r):
            for lam in partitions(d - big, max_part=r - 1 if r != float("inf") else None):
                out.append((I, lam))
    return out


def compositions(n, min_part=1):
    if n == 0:
        yield ()
        return
    if min_part > n:
        return
    for first in range(max(1, min_part), n + 1):
        for rest in compositions(n - first, min_part):
            yield (first,) + rest


def partitions(n, max_part=None):
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def monomial_orbit_count(d, r, n=None):
    """Second enumeration: number of r-orbits on degree-d monomials in n >= d variables."""
    n = n or max(d, 1)
    seen, count = set(), 0
    for v in _exponent_vectors(d, n):
        if v in seen:
            continue
        count += 1
        seen |= orbit(v, r)
    return count


def _exponent_vectors(d, n):
    if n == 0:
        if d == 0:
            yield ()
        return
    for first in range(d + 1):
        for rest in _exponent_vectors(d - first, n - 1):
            yield (first,) + rest


# --- Hilbert series comparison

def _series_mul(p, q, deg):
    out = Counter()
    for (a1, t1), c in p.items():
        for (a2, t2), d in q.items():
            if t1 + t2 <= deg[1] and a1 + a2 <= deg[0]:
                out[(a1 + a2, t1 + t2)] += c * d
    return out


def _series_inv_one_minus(q, deg):
    """1/(1-q) for q without constant term, truncated at bidegree deg."""
    out = Counter({(0, 0): 1})
    power = Counter({(0, 0): 1})
    for _ in range(deg[0] + deg[1] + 1):
        power = _series_mul(power, q, deg)
        if not power:
            break
        for k, v in power.items():
            out[k] += v
    return out


def hilbert_series_infinite(r, d):
    """Coefficients t^0..t^d of 1/(1-t-t^r) * prod_{i=1}^{r-1} 1/(1-t^i)."""
    deg = (0, d)
    q = Counter()
    q[(0, 1)] += 1
    q[(0, r)] += 1
    s = _series_inv_one_minus(q, deg)
    for i in range(1, r):
        s = _series_mul(s, _series_inv_one_minus(Counter({(0, i): 1}), deg), deg)
    return [s.get((0, t), 0) for t in range(d + 1)]


def hilbert_series_finite(r, n, d):
    """Coefficient of a^n t^j (j <= d) in (1-t)/(1-t-a t^r) * prod_{i=0}^{r-1} 1/(1-a t^i)."""
    deg = (n, d)
    q = Counter()
    q[(0, 1)] += 1
    q[(1, r)] += 1
    s = _series_inv_one_minus(q, deg)
    s = _series_mul(s, Counter({(0, 0): 1, (0, 1): -1}), deg)
    for i in range(r):
        s = _series_mul(s, _series_inv_one_minus(Counter({(1, i): 1}), deg), deg)
    return [s.get((n, t), 0) for t in range(d + 1)]


def qsym_r_dims(d, r):
    direct = len(r_compositions(d, r))
    series = hilbert_series_infinite(r, d)[d]
    return {"d": d, "r": r, "direct": direct, "series": series, "agree": direct == series}


def finite_alphabet_report(r, n, d):
    """Orbit counts on degree-j monomials in n variables vs the bivariate series."""
    series = hilbert_series_finite(r, n, d)
    rows = []
    for j in range(d + 1):
        direct = monomial_orbit_count(j, r, n) if n else int(j == 0)
        rows.append({"d": j, "direct": direct, "series": series[j], "agree": direct == series[j]})
    return rows


# --- word action (WQSym^r)

def act_wqsym(i, w, r=1):
    """Swap the letters i and i+1 throughout w when one of them occurs fewer than r times."""
    w = tuple(w)
    counts = Counter(w)
    if min(counts[i], counts[i + 1]) < r:
        swap = {i: i + 1, i + 1: i}
        return tuple(swap.get(x, x) for x in w)
    return w


def _word_orbit(w, r, n):
    start = tuple(w)
    seen, todo = {start}, [start]
    while todo:
        x = todo.pop()
        for i in range(1, n):
            y = act_wqsym(i, x, r)
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return seen


def word_orbit_sum(w, r, n):
    return FormalSum.of(*_word_orbit(w, r, n))


def WQM(u, n):
    """Words over letters 1..n that pack to u."""
    u = tuple(u)
    k = max(u, default=0)
    out = FormalSum()
    for letters in combinations(range(1, n + 1), k):
        out._add(tuple(letters[x - 1] for x in u), 1)
    return out


def set_composition(u):
    """Blocks of positions carrying each letter of the packed word u."""
    k = max(u, default=0)
    return tuple(tuple(j for j, x in enumerate(u, 1) if x == b) for b in range(1, k + 1))


def packed_from_blocks(blocks):
    n = sum(len(b) for b in blocks)
    w = [0] * n
    for i, b in enumerate(blocks, 1):
        for j in b:
            w[j - 1] = i
    return tuple(w)


def wqsym_r_class(u, r):
    """(I, lam): big blocks in order, small blocks sorted by minimum."""
    blocks = set_composition(u)
    return (tuple(b for b in blocks if len(b) >= r),
            tuple(sorted((b for b in blocks if len(b) < r), key=min)))


def WQM_r_expansion(I, lam):
    """Packed words K over all set compositions in I ⧢ lam^sigma."""
    k = len(I) + len(lam)
    out = set()
    for order in permutations(lam):
        for slots in combinations(range(k), len(I)):
            it_I, it_l = iter(I), iter(order)
            blocks = [next(it_I) if j in slots else next(it_l) for j in range(k)]
            out.add(packed_from_blocks(blocks))
    return FormalSum.of(*out)


def WQM_r(I, lam, n):
    out = FormalSum()
    for K in WQM_r_expansion(I, lam).labels():
        out = out + WQM(K, n)
    return out


def commutative_image(s, n):
    """Let the letters commute: word -> exponent vector over n variables."""
    def exps(w):
        c = Counter(w)
        return tuple(c[i] for i in range(1, n + 1))
    return s.map_labels(exps)


def packed_words(n):
    return [w for w in product(range(1, n + 1), repeat=n) if set(w) == set(range(1, max(w, default=0) + 1))]


def monomial_text(v):
    parts = []
    for i, e in enumerate(v, 1):
        if e == 1:
            parts.append("x%d" % i)
        elif e > 1:
            parts.append("x%d^%d" % (i, e))
    return "".join(parts) or "1"


def pack_word(w):
    return pack(w)
