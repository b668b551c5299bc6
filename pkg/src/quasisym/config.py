"""Size caps for the brute-force enumerators.

Defaults can be overridden by a JSON file whose path is given with
``--config`` on the command line or the ``QUASISYM_CONFIG`` environment
variable, e.g. ``{"max_enum_n": 9, "max_tree_n": 8}``.
"""

import json
import os

DEFAULTS = {
    "max_enum_n": 8,        # word / parking-function enumerators
    "max_tree_n": 7,        # rooted labeled tree enumeration
    "max_hopf_degree": 6,   # product / coproduct / orbit machinery
    "max_count_degree": 8,  # closed-formula counting
    "window_extra": 3,      # default orbit window is degree + window_extra
}

ENV_VAR = "QUASISYM_CONFIG"

_caps = dict(DEFAULTS)


class CapExceeded(ValueError):
    def __init__(self, key, value, limit):
        self.key, self.value, self.limit = key, value, limit
        super().__init__(
            "size %d exceeds the cap %d (config key %r; raise it in a JSON "
            "config file passed via --config or $%s)" % (value, limit, key, ENV_VAR))


def load(path=None):
    """Reset caps to defaults, then apply the file at ``path`` (or $QUASISYM_CONFIG)."""
    _caps.clear()
    _caps.update(DEFAULTS)
    path = path or os.environ.get(ENV_VAR)
    if path:
        with open(path) as fh:
            data = json.load(fh)
        unknown = set(data) - set(DEFAULTS)
        if unknown:
            raise ValueError("unknown config keys: %s" % ", ".join(sorted(unknown)))
        _caps.update({k: int(v) for k, v in data.items()})
    return dict(_caps)


def get(key):
    return _caps[key]


def caps():
    return dict(_caps)


def check_cap(key, value):
    if value > _caps[key]:
        raise CapExceeded(key, value, _caps[key])


def set_cap(key, value):
    if key not in DEFAULTS:
        raise KeyError(key)
    _caps[key] = int(value)


if os.environ.get(ENV_VAR):
    load()
