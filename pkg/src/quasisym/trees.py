"""Rooted labeled non-planar trees, maximal decreasing subtrees and the
enumerative identities around the r = infinity algebra.

A tree is a :class:`RootedTree` over an arbitrary finite label set (forest
components live on subsets of [n]).
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb, factorial

from .config import check_cap
from .words import (inverse, is_parking, parking_functions,
                    prime_parking_functions, standardize)


class NotChainMD(ValueError):
    pass


class CardinalityMismatch(AssertionError):
    pass


@dataclass(frozen=True)
class RootedTree:
    root: int
    parent: tuple  # sorted (child, parent) pairs

    @classmethod
    def from_parents(cls, root, parents):
        return cls(root, tuple(sorted(dict(parents).items())))

    @property
    def vertices(self):
        return tuple(sorted({self.root} | {c for c, _ in self.parent}))

    @property
    def n(self):
        return len(self.parent) + 1

    def children(self):
        out = {v: [] for v in self.vertices}
        for c, p in self.parent:
            out[p].append(c)
        return out

    def parent_sequence(self):
        """Parents of the vertices in label order, 0 for the root."""
        pmap = dict(self.parent)
        return tuple(pmap.get(v, 0) for v in self.vertices)

    def sort_key(self):
        return (self.n, self.root, self.parent_sequence())

    def relabel(self, mapping):
        return RootedTree.from_parents(mapping[self.root],
                                       {mapping[c]: mapping[p] for c, p in self.parent})

    def to_json(self):
        return {"n": self.n, "root": self.root,
                "parent": {str(c): p for c, p in self.parent}}


def is_tree(root, parents, vertices):
    if set(parents) | {root} != set(vertices) or root in parents:
        return False
    for v in parents:
        seen = set()
        while v != root:
            if v in seen or v not in parents:
                return False
            seen.add(v)
            v = parents[v]
    return True


def md_subtree(t):
    """Maximal subtree containing the root whose edges decrease away from it."""
    kids = t.children()
    keep = {}
    todo = [t.root]
    while todo:
        v = todo.pop()
        for c in kids[v]:
            if c < v:
                keep[c] = v
                todo.append(c)
    return RootedTree.from_parents(t.root, keep)


def is_chain_md(t):
    md = md_subtree(t)
    return all(len(k) <= 1 for k in md.children().values())


def is_minimal(t):
    return md_subtree(t).n == 1


def _prufer_decode(seq, n):
    degree = [1] * (n + 1)
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = next(v for v in range(1, n + 1) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = [v for v in range(1, n + 1) if degree[v] == 1]
    edges.append((u, v))
    return edges


def _orient(edges, root):
    adj = {}
    for a, b in edges:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    parents = {}
    todo = [root]
    seen = {root}
    while todo:
        v = todo.pop()
        for w in adj.get(v, ()):
            if w not in seen:
                seen.add(w)
                parents[w] = v
                todo.append(w)
    return parents


def enumerate_trees(n):
    """All n^(n-1) rooted labeled trees on [n], in canonical order."""
    check_cap("max_tree_n", n)
    if n == 0:
        return []
    if n == 1:
        return [RootedTree(1, ())]
    if n == 2:
        unrooted = [[(1, 2)]]
    else:
        unrooted = [_prufer_decode(seq, n) for seq in product(range(1, n + 1), repeat=n - 2)]
    trees = [RootedTree.from_parents(root, _orient(edges, root))
             for root in range(1, n + 1) for edges in unrooted]
    return sorted(trees, key=RootedTree.sort_key)


def enumerate_trees_brute(n):
    """Oracle: every parent function on the non-root vertices, kept if acyclic."""
    out = []
    for root in range(1, n + 1):
        others = [v for v in range(1, n + 1) if v != root]
        for ps in product(range(1, n + 1), repeat=len(others)):
            parents = dict(zip(others, ps))
            if is_tree(root, parents, range(1, n + 1)):
                out.append(RootedTree.from_parents(root, parents))
    return sorted(out, key=RootedTree.sort_key)


@lru_cache(maxsize=None)
def md_size_histogram(n):
    """{|MD|: count} over rooted trees on [n]."""
    hist = {}
    for t in enumerate_trees(n):
        s = md_subtree(t).n
        hist[s] = hist.get(s, 0) + 1
    return hist


def count_T(n, k):
    """|T_{n,k}|: trees on [n+1] whose maximal decreasing subtree has k+1 vertices."""
    return md_size_histogram(n + 1).get(k + 1, 0)


def count_chain_md(n, k=None):
    """|T'_{n,k}|: trees on [n] whose MD is a chain (with k vertices if given)."""
    return sum(1 for t in enumerate_trees(n)
               if is_chain_md(t) and (k is None or md_subtree(t).n == k))


def minimal_trees(n):
    return [t for t in enumerate_trees(n) if is_minimal(t)]


@lru_cache(maxsize=None)
def stirling2(n, k):
    if n == k:
        return 1
    if k == 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def seo_shin(n, k):
    """Closed count of trees on [n+1] whose MD has k+1 vertices.

    The m = n summand carries (n-k)^(-1) (m-k) = 1, including k = n.
    """
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    total = 0
    for m in range(k, n + 1):
        if m == n:
            tail = 1
        else:
            tail = (n - k) ** (n - m - 1) * (m - k)
        total += comb(n + 1, m + 1) * stirling2(m + 1, k + 1) * tail
    return factorial(k) * total


def a_inf_stirling(n, k):
    return sum(comb(n, m) * stirling2(m, k) * (n - k) ** (n - m) for m in range(k, n + 1))


def a_inf_alternating(n, k):
    return sum((-1) ** i * comb(k, i) * (n - i) ** n for i in range(k + 1))


# --- parking functions and acyclic functions

def foata_riordan(u):
    """i -> i if u_i = 1, else the position of the (u_i - 1)-th letter of u
    in standardization order."""
    u = tuple(u)
    if not is_parking(u):
        raise ValueError("not a parking function")
    pos = inverse(standardize(u))
    return tuple(i if x == 1 else pos[x - 2] for i, x in enumerate(u, 1))


def is_acyclic(f):
    """Only fixed points as cycles in the functional graph of f: [n] -> [n]."""
    n = len(f)
    for start in range(1, n + 1):
        v, steps = start, 0
        while f[v - 1] != v:
            v = f[v - 1]
            steps += 1
            if steps > n:
                return False
    return True


def acyclic_functions(n):
    return [f for f in product(range(1, n + 1), repeat=n) if is_acyclic(f)]


@lru_cache(maxsize=None)
def _fr_table(n):
    return {foata_riordan(u): u for u in parking_functions(n)}


def fr_inverse(f):
    f = tuple(f)
    try:
        return _fr_table(len(f))[f]
    except KeyError:
        raise ValueError("%r is not in the image of the Foata-Riordan map" % (f,))


def foata_riordan_report(n):
    """Bijectivity check of the forward map PF_n -> acyclic functions."""
    images = [foata_riordan(u) for u in parking_functions(n)]
    acyclic = set(acyclic_functions(n))
    image_set = set(images)
    return {"n": n, "pf": len(images), "acyclic": len(acyclic),
            "injective": len(image_set) == len(images),
            "into_acyclic": image_set <= acyclic,
            "surjective": acyclic <= image_set,
            "bijective": len(image_set) == len(images) and image_set == acyclic}


# --- minimal forests and chains

def chain_from_forest(forest):
    trees = sorted(forest, key=lambda t: -t.root)
    parents = {}
    for t in trees:
        parents.update(dict(t.parent))
    for a, b in zip(trees, trees[1:]):
        parents[b.root] = a.root
    return RootedTree.from_parents(trees[0].root, parents)


def forest_from_chain(t):
    if not is_chain_md(t):
        raise NotChainMD("maximal decreasing subtree is not a chain")
    chain = md_subtree(t).vertices
    parents = {c: p for c, p in t.parent if c not in chain}
    kids = {}
    for c, p in parents.items():
        kids.setdefault(p, []).append(c)
    forest = []
    for r in chain:
        sub, todo = {}, [r]
        while todo:
            v = todo.pop()
            for c in kids.get(v, ()):
                sub[c] = v
                todo.append(c)
        forest.append(RootedTree.from_parents(r, sub))
    return frozenset(forest)


def minimal_forests(n, k=None):
    """Sets of minimal rooted trees whose vertex sets partition [n] (oracle side)."""
    from .biwords import set_partitions
    mins = {}
    out = []
    for blocks in set_partitions(range(1, n + 1)):
        if k is not None and len(blocks) != k:
            continue
        choices = []
        for b in blocks:
            b = tuple(sorted(b))
            if len(b) not in mins:
                mins[len(b)] = minimal_trees(len(b))
            choices.append([t.relabel(dict(enumerate(b, 1))) for t in mins[len(b)]])
        out += [frozenset(c) for c in product(*choices)]
    return out


@lru_cache(maxsize=None)
def ppf_tree_pair(n):
    """Rank pairing of PPF_n (lexicographic) with minimal trees on [n] (canonical)."""
    ppfs = list(prime_parking_functions(n))
    trees = minimal_trees(n)
    if len(ppfs) != len(trees):
        raise CardinalityMismatch("|PPF_%d| = %d but %d minimal trees" % (n, len(ppfs), len(trees)))
    return dict(zip(ppfs, trees))


def infbiword_to_tree(x):
    """Chain-MD tree of an infinity-bi-word: each column's ppf becomes a
    minimal tree relabelled by the column's positions, then roots are chained."""
    forest = []
    for c in x.I + x.lam:
        t = ppf_tree_pair(len(c.ppf))[c.ppf]
        forest.append(t.relabel(dict(enumerate(c.pos, 1))))
    return chain_from_forest(frozenset(forest))


def ppf_no2_before_1_count(n):
    """#{u in PPF_n : no letter 2 to the left of the leftmost 1}."""
    if n < 2:
        raise ValueError("need n >= 2")
    count = 0
    for u in prime_parking_functions(n):
        first_one = u.index(1)
        if 2 not in u[:first_one]:
            count += 1
    return count
