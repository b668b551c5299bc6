"""Exact-rational linear combinations over hashable basis labels.

A :class:`FormalSum` maps labels to nonzero :class:`fractions.Fraction`
coefficients.  A :class:`TensorSum` is the same thing over ``(left, right)``
label pairs.  Iteration follows the canonical label order (shorter labels
first, then lexicographic).
"""

from fractions import Fraction


def sort_key(label):
    """Canonical order: length first, then lexicographic, recursively."""
    key = getattr(label, "sort_key", None)
    if key is not None:
        return key()
    if isinstance(label, tuple):
        if all(isinstance(x, int) for x in label):
            return (len(label), label)
        return (len(label), tuple(sort_key(x) for x in label))
    return (0, label)


class NonConstantClass(ValueError):
    """Regrouping failed: coefficients differ inside one class."""

    def __init__(self, cls, witnesses):
        self.cls = cls
        self.witnesses = witnesses
        super().__init__("coefficient not constant on class %r: %r" % (cls, witnesses))


class FormalSum:
    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        self._terms = {}
        if terms:
            items = terms.items() if hasattr(terms, "items") else terms
            for label, c in items:
                self._add(label, c)

    @classmethod
    def of(cls, *labels):
        return cls((label, 1) for label in labels)

    def _add(self, label, c):
        c = self._terms.get(label, 0) + Fraction(c)
        if c:
            self._terms[label] = c
        else:
            self._terms.pop(label, None)

    def copy(self):
        out = type(self)()
        out._terms = dict(self._terms)
        return out

    # --- container protocol

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __iter__(self):
        return iter(self.labels())

    def __contains__(self, label):
        return label in self._terms

    def __getitem__(self, label):
        return self._terms.get(label, Fraction(0))

    def labels(self):
        return sorted(self._terms, key=sort_key)

    def items(self):
        return [(label, self._terms[label]) for label in self.labels()]

    def support(self):
        return set(self._terms)

    def mass(self):
        return sum(self._terms.values(), Fraction(0))

    # --- arithmetic

    def __add__(self, other):
        out = self.copy()
        for label, c in other._terms.items():
            out._add(label, c)
        return out

    def __sub__(self, other):
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c):
        c = Fraction(c)
        out = type(self)()
        if c:
            out._terms = {label: v * c for label, v in self._terms.items()}
        return out

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other):
        if not isinstance(other, FormalSum):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def map_labels(self, fn):
        """Linear extension of a label map ``fn: label -> label``."""
        out = type(self)()
        for label, c in self._terms.items():
            out._add(fn(label), c)
        return out

    def linear(self, fn, result=None):
        """Linear extension of ``fn: label -> FormalSum``."""
        out = result if result is not None else FormalSum()
        for label, c in self._terms.items():
            for k, v in fn(label)._terms.items():
                out._add(k, c * v)
        return out

    def is_multiplicity_free(self):
        return all(c == 1 for c in self._terms.values())

    # --- rendering

    def render(self, fmt=str, zero="0"):
        if not self._terms:
            return zero
        parts = []
        for label, c in self.items():
            text = fmt(label)
            if c == 1:
                parts.append(text)
            elif c == -1:
                parts.append("-" + text)
            else:
                parts.append("%s*%s" % (c, text))
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self, label_json=lambda x: x):
        return {"terms": [{"coeff": fraction_text(c), "label": label_json(label)}
                          for label, c in self.items()]}

    def __repr__(self):
        return "FormalSum(%s)" % self.render(repr)


class TensorSum(FormalSum):
    """Formal sum over ``(left, right)`` pairs."""

    __slots__ = ()

    def render(self, fmt=str, zero="0", unit="1"):
        def pair(p):
            a, b = p
            return "%s ⊗ %s" % (fmt(a) if _nonempty(a) else unit,
                                fmt(b) if _nonempty(b) else unit)
        return FormalSum.render(self, pair, zero)

    def to_json(self, label_json=lambda x: x):
        return {"terms": [{"coeff": fraction_text(c),
                           "label": [label_json(a), label_json(b)]}
                          for (a, b), c in self.items()]}

    def flip(self):
        return self.map_labels(lambda p: (p[1], p[0]))

    def __repr__(self):
        return "TensorSum(%s)" % self.render(repr)


def _nonempty(label):
    try:
        return len(label) > 0
    except TypeError:
        return True


def fraction_text(c):
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else "%d/%d" % (c.numerator, c.denominator)


def tensor(x, y):
    """Tensor product of two formal sums."""
    return TensorSum(((a, b), c * d) for a, c in x.items() for b, d in y.items())


def regroup(s, class_of, members_of):
    """Rewrite ``s`` as a sum over classes.

    ``class_of(label)`` names the class of a label and ``members_of(cls)``
    lists every label of that class.  The coefficient of each class is the
    common coefficient of its members; if members carry different
    coefficients (a missing member counts as 0) :class:`NonConstantClass`
    is raised.
    """
    out = FormalSum()
    seen = set()
    for label in s.labels():
        cls = class_of(label)
        if cls in seen:
            continue
        seen.add(cls)
        members = list(members_of(cls))
        coeffs = {m: s[m] for m in members}
        if label not in coeffs:
            raise NonConstantClass(cls, {label: s[label]})
        if len(set(coeffs.values())) != 1:
            raise NonConstantClass(cls, coeffs)
        out._add(cls, s[label])
    return out


def regroup_tensor(t, class_of, members_of):
    """:func:`regroup` applied to both tensor factors at once."""
    pair_class = lambda p: (class_of(p[0]), class_of(p[1]))

    def pair_members(cls):
        return [(a, b) for a in members_of(cls[0]) for b in members_of(cls[1])]

    flat = regroup(t, pair_class, pair_members)
    return TensorSum(flat.items())
