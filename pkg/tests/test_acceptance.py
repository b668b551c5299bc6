"""One line per acceptance criterion; each runs its verify cases."""

import pytest

from quasisym import verify

_cache = {}


@pytest.mark.parametrize("k", sorted(verify.CRITERIA))
def test_criterion(k, capsys):
    cases = verify.run_criterion(k, _cache)
    failed = [c for c in cases if not c["ok"]]
    line = "criterion %2d %-40s %s (%d/%d cases)" % (
        k, verify.CRITERIA[k], "PASS" if not failed else "FAIL", len(cases) - len(failed), len(cases))
    with capsys.disabled():
        print("\n" + line)
        for c in failed:
            print("    failed: %s  expected=%s got=%s" % (c["name"], c["expected"], c["got"]))
    assert cases
    assert not failed, line


if __name__ == "__main__":
    for k in sorted(verify.CRITERIA):
        cases = verify.run_criterion(k, _cache)
        bad = sum(not c["ok"] for c in cases)
        print("criterion %2d %-40s %s" % (k, verify.CRITERIA[k], "FAIL" if bad else "PASS"))
