"""Words on positive integers: standardization, parkization, parking
functions, prime blocks, shuffles, packing and enumerators.

Words are plain tuples of ints.  The empty word is ``()``.
"""

from collections import Counter
from itertools import combinations, product

from .config import check_cap
from .formal import FormalSum


class NotParkingError(ValueError):
    pass


def parse_word(text):
    """Parse a word literal.

    ``"83493"`` (compact digits), ``"2,2,3,5,5,5,10"`` (comma separated) and
    ``"223555.10"`` (compact with a dotted multi-digit tail) are accepted.
    The empty string, ``"e"`` and ``"[]"`` denote the empty word.
    """
    text = text.strip()
    if text in ("", "e", "[]", "()", "ε"):
        return ()
    if text.startswith("[") and text.endswith("]"):
        text = text[1:-1]
    if "," in text:
        letters = tuple(int(t) for t in text.split(","))
    else:
        # chunks alternate: compact digit run, dotted multi-digit letter, ...
        letters = ()
        for j, chunk in enumerate(text.split(".")):
            if j % 2 == 0:
                letters += tuple(int(c) for c in chunk)
            elif chunk:
                letters += (int(chunk),)
            else:
                raise ValueError("malformed word literal %r" % text)
    if any(x < 1 for x in letters):
        raise ValueError("letters must be positive integers: %r" % text)
    return letters


def format_word(w):
    """Compact display form: digits run together, a letter >= 10 is written
    between dots (the final dot dropped), e.g. ``223555.10``."""
    out = "".join(".%d." % x if x >= 10 else str(x) for x in w)
    return out[:-1] if out.endswith(".") else out


def canonical_word(w):
    return ",".join(str(x) for x in w)


def standardize(w):
    w = tuple(w)
    order = sorted(range(len(w)), key=lambda j: (w[j], j))
    std = [0] * len(w)
    for rank, j in enumerate(order, 1):
        std[j] = rank
    return tuple(std)


def inverse(perm):
    inv = [0] * len(perm)
    for i, x in enumerate(perm, 1):
        inv[x - 1] = i
    return tuple(inv)


def is_permutation(w):
    return sorted(w) == list(range(1, len(w) + 1))


def d_index(w):
    """Smallest i with fewer than i letters <= i; equals len(w)+1 on parking functions."""
    n = len(w)
    counts = Counter(w)
    below = 0
    for i in range(1, n + 2):
        below += counts.get(i, 0)
        if below < i:
            return i
    return n + 1  # unreachable: below <= n < n+1


def parkize(w):
    w = tuple(w)
    n = len(w)
    while True:
        d = d_index(w)
        if d == n + 1:
            return w
        # letters strictly between d and the next letter above d all get
        # decremented in consecutive rounds with the same d; do them at once
        m = min(x for x in w if x > d)
        w = tuple(x - (m - d) if x > d else x for x in w)


def parkize_stepwise(w):
    """Literal one-decrement-per-round parkization (reference version)."""
    w = tuple(w)
    n = len(w)
    while True:
        d = d_index(w)
        if d == n + 1:
            return w
        w = tuple(x - 1 if x > d else x for x in w)


def is_parking(w):
    return all(x <= i for i, x in enumerate(sorted(w), 1))


def is_prime_parking(w):
    s = sorted(w)
    if not s:
        return True
    return s[0] == 1 and all(x < i for i, x in enumerate(s, 1) if i >= 2)


def is_packed(w):
    return set(w) == set(range(1, len(set(w)) + 1))


def prime_blocks(u):
    """Prime blocks of a parking function, in bar order.

    Returns a list of ``(U, P)`` with ``U`` the subword of ``u`` on the
    block's letters and ``P`` the (1-based, ascending) positions of those
    letters in ``u``.
    """
    u = tuple(u)
    if not is_parking(u):
        raise NotParkingError("%s is not a parking function" % format_word(u))
    s = sorted(u)
    starts = [i for i, x in enumerate(s, 1) if x == i]
    # a bar before each u'_i = i with u'_i != 1; block i covers letter
    # values [starts[i], starts[i+1])
    bounds = starts + [len(u) + 1]
    blocks = []
    for lo, hi in zip(bounds, bounds[1:]):
        pos = tuple(j for j, x in enumerate(u, 1) if lo <= x < hi)
        blocks.append((tuple(u[j - 1] for j in pos), pos))
    return blocks


def shift(w, k):
    return tuple(x + k for x in w)


def shuffle(u, v):
    """Shuffle product, multiplicities counted."""
    u, v = tuple(u), tuple(v)
    n = len(u) + len(v)
    out = Counter()
    for spots in combinations(range(n), len(u)):
        spots = set(spots)
        iu, iv = iter(u), iter(v)
        out[tuple(next(iu) if j in spots else next(iv) for j in range(n))] += 1
    return FormalSum(out)


def shifted_shuffle(u, v):
    return shuffle(u, shift(v, len(u)))


def pack(w):
    ranks = {x: i for i, x in enumerate(sorted(set(w)), 1)}
    return tuple(ranks[x] for x in w)


KINDS = ("words", "pf", "ppf", "packed")


def _parking_dfs(n, prime):
    # lexicographic depth-first generation with a feasibility prune: the
    # remaining slots can always be filled with 1s, so a prefix extends iff
    # #{letters <= i} + remaining >= need(i) for every i
    if n == 0:
        yield ()
        return
    top = n - 1 if prime and n > 1 else n
    need = [0] + [i + 1 if prime and i < n else i for i in range(1, n + 1)]
    counts = [0] * (n + 2)
    word = []

    def feasible():
        remaining = n - len(word)
        below = 0
        for i in range(1, n + 1):
            below += counts[i]
            if below + remaining < need[i]:
                return False
        return True

    def rec():
        if len(word) == n:
            yield tuple(word)
            return
        for x in range(1, top + 1):
            word.append(x)
            counts[x] += 1
            if feasible():
                yield from rec()
            counts[x] -= 1
            word.pop()

    yield from rec()


def enumerate_words(n, kind="pf", max_letter=None):
    """Lazily stream words of length n in lexicographic order.

    ``kind`` is one of ``words`` (letters <= max_letter), ``pf``, ``ppf``,
    ``packed``.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    check_cap("max_enum_n", n)
    if kind == "words":
        if max_letter is None or max_letter < 1:
            raise ValueError("kind 'words' needs max_letter >= 1")
        return product(range(1, max_letter + 1), repeat=n)
    if kind == "pf":
        return _parking_dfs(n, prime=False)
    if kind == "ppf":
        return _parking_dfs(n, prime=True)
    if kind == "packed":
        return (w for w in product(range(1, n + 1), repeat=n) if is_packed(w))
    raise ValueError("unknown kind %r" % kind)


def parking_functions(n):
    return enumerate_words(n, "pf")


def prime_parking_functions(n):
    return enumerate_words(n, "ppf")
