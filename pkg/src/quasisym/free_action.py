"""The free quasi-symmetrizing action.

Words on positive integers are encoded bijectively as almost-zero integer
sequences whose nonzero entries form a permutation (the set E).  The
generator ``s_i`` swaps entries ``i`` and ``i+1`` when one of them is below
``r`` (``r = 1``: when one of them is zero).  At ``r = 1`` the orbits are the
standardization classes, so orbit sums are the G basis of FQSym*.

A sequence is stored as the tuple of its entries up to the last nonzero
one.
"""

from itertools import combinations, product
from math import comb

from .formal import FormalSum, TensorSum
from .words import inverse, is_permutation, standardize


class NotInE(ValueError):
    pass


class WindowTooSmall(ValueError):
    pass


def trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def associated_permutation(a):
    return tuple(x for x in a if x)


def is_in_E(a):
    return all(x >= 0 for x in a) and is_permutation(associated_permutation(a))


def word_to_seq(w):
    """The map f: words -> E."""
    w = tuple(w)
    if not w:
        return ()
    tau = inverse(standardize(w))
    val = lambda j: w[j - 1]
    out = [0] * (val(tau[0]) - 1) + [tau[0]]
    for t, t_next in zip(tau, tau[1:]):
        gap = val(t_next) - val(t)
        if t > t_next:
            gap -= 1
        out += [0] * gap + [t_next]
    return tuple(out)


def seq_to_word(a):
    """The map g: E -> words, inverse of :func:`word_to_seq`."""
    a = trim(a)
    if not is_in_E(a):
        raise NotInE("%r is not in E" % (a,))
    nz = [(j, x) for j, x in enumerate(a, 1) if x]
    w = [0] * len(nz)
    if not nz:
        return ()
    j0, x0 = nz[0]
    w[x0 - 1] = j0
    for (j, x), (j_next, x_next) in zip(nz, nz[1:]):
        step = j_next - j
        if x < x_next:
            step -= 1
        w[x_next - 1] = w[x - 1] + step
    return tuple(w)


def act_seq(i, a, r=1):
    """``s_i`` acting on a sequence of E (r-generalized)."""
    if i < 1:
        raise ValueError("generator index must be >= 1")
    a = list(a)
    if len(a) < i + 1:
        a += [0] * (i + 1 - len(a))
    if min(a[i - 1], a[i]) < r:
        a[i - 1], a[i] = a[i], a[i - 1]
    return trim(a)


def act_free(i, w, r=1):
    """``s_i`` acting on a word through f and g."""
    return seq_to_word(act_seq(i, word_to_seq(w), r))


def act_free_sum(i, s, r=1):
    return s.map_labels(lambda w: act_free(i, w, r))


def support(w):
    """Length of the explicit prefix of f(w)."""
    return len(word_to_seq(w))


def orbit_free(sigma, window):
    """Words with standardization ``sigma`` whose sequence lies in the first
    ``window`` entries.

    Such sequences carry the associated permutation ``sigma^{-1}`` on any
    ``len(sigma)`` of the ``window`` slots.
    """
    sigma = tuple(sigma)
    n = len(sigma)
    if window < n:
        raise WindowTooSmall("window %d < |sigma| = %d" % (window, n))
    assoc = inverse(sigma)
    out = set()
    for slots in combinations(range(window), n):
        a = [0] * window
        for j, x in zip(slots, assoc):
            a[j] = x
        out.add(seq_to_word(a))
    return out


def orbit_free_size(n, window):
    return comb(window, n)


def G_sigma(sigma, window):
    return FormalSum.of(*orbit_free(sigma, window))


def is_invariant_free(s, window, r=1):
    """True iff the word sum ``s`` is fixed by ``s_1 .. s_{window-1}``."""
    for w in s.support():
        if support(w) > window:
            raise WindowTooSmall("%r lies outside the window %d" % (w, window))
    return all(act_free_sum(i, s, r) == s for i in range(1, window))


def orbit_bfs(a, window, r):
    """Orbit of a sequence under the generators of the window (search)."""
    start = trim(a)
    seen = {start}
    todo = [start]
    while todo:
        x = todo.pop()
        for i in range(1, window):
            y = act_seq(i, x, r)
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return seen


def sequences_in_window(n, window):
    """All sequences of E with n nonzero entries inside the first ``window`` slots."""
    for slots in combinations(range(window), n):
        for perm in _permutations(n):
            a = [0] * window
            for j, x in zip(slots, perm):
                a[j] = x
            yield trim(a)


def _permutations(n):
    from itertools import permutations
    return permutations(range(1, n + 1))


# --- r-free invariants and their coproduct (witness search)

def fqsym_coproduct(sigma):
    """Coproduct of G_sigma in FQSym*: split the values at every k."""
    sigma = tuple(sigma)
    n = len(sigma)
    out = TensorSum()
    for k in range(n + 1):
        left = tuple(x for x in sigma if x <= k)
        right = tuple(x - k for x in sigma if x > k)
        out = out + TensorSum([((left, right), 1)])
    return out


def r_free_classes(n, r, window=None):
    """Partition of the permutations of [n] induced by the r-free orbits.

    Words with a common standardization lie in one r-orbit (r-orbits are
    unions of 1-orbits), so the orbits of degree n are unions of these
    classes.  Orbits are found by search over a window of ``2n`` slots.
    """
    window = window or 2 * n
    parent = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    seqs = list(sequences_in_window(n, window))
    for a in seqs:
        parent[a] = a
    for a in seqs:
        for i in range(1, window):
            b = act_seq(i, a, r)
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
    groups = {}
    for a in seqs:
        groups.setdefault(find(a), set()).add(standardize(seq_to_word(a)))
    classes = {frozenset(g) for g in groups.values()}
    return sorted((tuple(sorted(c)) for c in classes), key=lambda c: c[0])


def r_free_coproduct_witness(r, max_degree):
    """Search invariant orbit sums whose coproduct leaves Inv (x) Inv.

    Returns a dict with ``found`` and, when found, the orbit (as the list
    of permutations whose G's are summed) and an offending pair of classes
    with the differing coefficients.
    """
    report = {"r": r, "max_degree": max_degree, "found": False, "checked": 0}
    classes_by_deg = {d: r_free_classes(d, r) for d in range(max_degree + 1)}
    class_of = {}
    for cls_list in classes_by_deg.values():
        for cls in cls_list:
            for s in cls:
                class_of[s] = cls
    for n in range(max_degree + 1):
        for orbit in classes_by_deg[n]:
            report["checked"] += 1
            total = TensorSum()
            for sigma in orbit:
                total = total + fqsym_coproduct(sigma)
            # in Inv (x) Inv iff the coefficient is constant on class x class
            blocks = {}
            for (a, b), c in total.items():
                blocks.setdefault((class_of[a], class_of[b]), {})[(a, b)] = c
            for (ca, cb), coeffs in sorted(blocks.items()):
                values = {(a, b): coeffs.get((a, b), 0) for a in ca for b in cb}
                if len(set(values.values())) > 1:
                    report.update(found=True, degree=n, orbit=list(orbit),
                                  left_class=list(ca), right_class=list(cb),
                                  coefficients={"%s|%s" % (_w(a), _w(b)): str(v)
                                                for (a, b), v in sorted(values.items())})
                    return report
    return report


def _w(p):
    return "".join(map(str, p)) or "e"


def brute_orbit_free(sigma, window):
    """Oracle: scan all words with letters <= window."""
    sigma = tuple(sigma)
    return {w for w in product(range(1, window + 1), repeat=len(sigma))
            if standardize(w) == sigma and support(w) <= window}
