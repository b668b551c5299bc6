"""Command-line front end.

    quasisym park 83493
    quasisym product --r 1 11 21 --format text
    quasisym verify --suite all

Exit codes: 0 success, 1 a verify suite failed, 2 usage / input error.
"""

import argparse
import json
import sys
import time

from . import INF, __version__
from . import background as bg
from . import biwords as bw
from . import config
from . import free_action as fa
from . import pqsym as pq
from . import trees as tr
from . import verify
from .formal import sort_key
from .words import (format_word, parkize, parse_word, prime_blocks,
                    standardize)


class UsageError(ValueError):
    pass


def parse_r(text):
    if text is None:
        return None
    t = str(text).strip().lower()
    if t in ("inf", "infinity", "∞"):
        return INF
    try:
        r = int(t)
    except ValueError:
        raise UsageError("r must be a positive integer or 'inf', got %r" % text)
    if r < 1:
        raise UsageError("r must be >= 1")
    return r


def parse_ints(text):
    """'2 1 3' or '2,1,3' -> (2, 1, 3)."""
    parts = text.replace(",", " ").split()
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise UsageError("expected integers, got %r" % text)


def word_arg(text):
    try:
        return parse_word(text)
    except ValueError:
        raise UsageError("malformed word literal %r (digits, '.'-separated letters >= 10, or commas)" % text)


def r_out(r):
    return "inf" if r == INF else r


# --- commands; each returns (payload, text)

def cmd_std(a):
    w = word_arg(a.word)
    out = format_word(standardize(w))
    return {"input": format_word(w), "output": out}, out


def cmd_park(a):
    w = word_arg(a.word)
    out = format_word(parkize(w))
    return {"input": format_word(w), "output": out}, out


def cmd_blocks(a):
    u = word_arg(a.word)
    try:
        blocks = prime_blocks(u)
    except ValueError as exc:
        raise UsageError(str(exc))
    rows = [{"block": format_word(U), "positions": list(P)} for U, P in blocks]
    text = "\n".join("%s at %s" % (r["block"], ",".join(map(str, r["positions"]))) for r in rows)
    return {"input": format_word(u), "blocks": rows}, text


def cmd_encode(a):
    w = word_arg(a.word)
    m = bw.phi(w)
    payload = {"input": format_word(w), "biword": bw.biword_json(m),
               "biword_text": bw.render_biword(m), "zseq": list(fa.word_to_seq(w))}
    text = "biword: %s\nzseq: %s" % (payload["biword_text"], ",".join(map(str, payload["zseq"])))
    return payload, text


def cmd_decode(a):
    if (a.zseq is None) == (a.biword is None):
        raise UsageError("decode needs exactly one of --zseq or --biword")
    try:
        if a.zseq is not None:
            w = fa.seq_to_word(parse_ints(a.zseq))
        else:
            w = bw.phi_inv(bw.parse_biword(a.biword))
    except ValueError as exc:
        raise UsageError(str(exc))
    out = format_word(w)
    return {"output": out}, out


def _act_one(action, i, x, r):
    if action == "free":
        return fa.act_free(i, x, r)
    if action == "park":
        return bw.act_park_word(i, x, r)
    if action == "qsym":
        return bg.act_qsym(i, x, r)
    return bg.act_wqsym(i, x, r)


def cmd_act(a):
    r = parse_r(a.r)
    gens = parse_ints(a.gens)
    if any(g < 1 for g in gens):
        raise UsageError("generator indices must be >= 1")
    x = parse_ints(a.target) if a.action == "qsym" else word_arg(a.target)
    # s_a s_b s_c . x: the rightmost generator acts first
    y = x
    try:
        for i in reversed(gens):
            y = _act_one(a.action, i, y, r)
    except ValueError as exc:
        raise UsageError(str(exc))
    show = (lambda v: ",".join(map(str, v))) if a.action == "qsym" else format_word
    return ({"action": a.action, "r": r_out(r), "gens": list(gens), "input": show(x), "output": show(y)},
            show(y))


def cmd_orbit(a):
    r = parse_r(a.r)
    w = word_arg(a.word)
    window = a.window if a.window is not None else len(w) + config.get("window_extra")
    config.check_cap("max_hopf_degree", len(w))
    try:
        if a.action == "free":
            seq = fa.word_to_seq(w)
            if len(seq) > window:
                raise UsageError("%s lies outside the window %d" % (format_word(w), window))
            words = {fa.seq_to_word(s) for s in fa.orbit_bfs(seq, window, r)}
        else:
            if bw.support(bw.phi(w)) > window:
                raise UsageError("%s lies outside the window %d" % (format_word(w), window))
            words = bw.orbit_r(w, r, window)
    except (fa.WindowTooSmall, bw.WindowTooSmall) as exc:
        raise UsageError(str(exc))
    words = sorted(words, key=sort_key)
    labels = [format_word(v) for v in words]
    return ({"action": a.action, "r": r_out(r), "window": window, "size": len(labels), "orbit": labels},
            "\n".join(labels))


def _sum_payload(s, fmt):
    return {"terms": [{"coeff": str(c), "label": fmt(l)} for l, c in s.items()], "size": len(s)}


def cmd_basis(a):
    kind = a.kind
    r = parse_r(a.r) if a.r is not None else None
    try:
        if kind in ("G", "Gr"):
            u = word_arg(a.label)
            if kind == "G":
                r = 1
            if r is None:
                raise UsageError("basis Gr needs --r")
            x = pq.as_rlabel(u, r)
            if a.trunc is not None:
                s = pq.truncated_Gr(x, r, a.trunc)
            else:
                s = pq.reduce_r(x)
            fmt = format_word if a.trunc is not None else pq.g_text
            head = pq.g_text(x.label()) if kind == "G" else pq.gr_text(x)
        elif kind in ("M", "Mr"):
            n = a.n
            if n is None:
                raise UsageError("basis %s needs --n (number of variables)" % kind)
            if kind == "M":
                I = parse_ints(a.label)
                s = bg.M_composition(I, n)
                head = "M_(%s)" % ",".join(map(str, I))
            else:
                if r is None:
                    raise UsageError("basis Mr needs --r")
                big, _, small = a.label.partition("|")
                I, lam = parse_ints(big), parse_ints(small)
                s = bg.M_r(I, lam, n, r)
                head = "M^(%s)_(%s|%s)" % (r_out(r), ",".join(map(str, I)), ",".join(map(str, lam)))
            fmt = bg.monomial_text
        else:
            u = word_arg(a.label)
            n = a.n if a.n is not None else max(u, default=0)
            if r is None or kind == "WQM":
                s = bg.WQM(u, n)
                head = "WQM_" + format_word(u)
            else:
                I, lam = bg.wqsym_r_class(u, r)
                s = bg.WQM_r(I, lam, n)
                head = "WQM^(%s)_%s" % (r_out(r), format_word(u))
            fmt = format_word
    except (ValueError, KeyError) as exc:
        if isinstance(exc, UsageError):
            raise
        raise UsageError(str(exc))
    payload = {"element": head, "expansion": _sum_payload(s, fmt)}
    return payload, "%s = %s" % (head, s.render(fmt))


def _r_or_g(a):
    """None or 1 selects the G basis (the r = 1 algebra is PQSym* itself)."""
    r = parse_r(a.r) if a.r is not None else 1
    return r


def cmd_product(a):
    r = _r_or_g(a)
    u, v = word_arg(a.left), word_arg(a.right)
    try:
        if r == 1:
            s, fmt = pq.G_product(u, v), pq.g_text
        else:
            s, fmt = pq.Gr_product(pq.as_rlabel(u, r), pq.as_rlabel(v, r), r), pq.gr_text
    except config.CapExceeded:
        raise
    except ValueError as exc:
        raise UsageError(str(exc))
    return {"r": r_out(r), "product": _sum_payload(s, fmt)}, s.render(fmt)


def cmd_coproduct(a):
    r = _r_or_g(a)
    u = word_arg(a.word)
    try:
        if r == 1:
            from .words import is_parking
            if not is_parking(u):
                raise UsageError("%s is not a parking function" % format_word(u))
            s, fmt = pq.G_coproduct(u), pq.g_text
        else:
            s, fmt = pq.Gr_coproduct(pq.as_rlabel(u, r), r), pq.gr_text
    except ValueError as exc:
        if isinstance(exc, UsageError):
            raise
        raise UsageError(str(exc))
    terms = [{"coeff": str(c), "left": fmt(x), "right": fmt(y)} for (x, y), c in s.items()]
    return {"r": r_out(r), "coproduct": {"terms": terms, "size": len(terms)}}, s.render(fmt)


def cmd_dims(a):
    r = parse_r(a.r)
    n = a.n
    if n < 0:
        raise UsageError("n must be >= 0")
    config.check_cap("max_count_degree", n)
    if a.k is not None:
        value = pq.A_r(n, a.k, r)
        return {"n": n, "k": a.k, "r": r_out(r), "A": value}, str(value)
    by_k = [pq.A_r(n, k, r) for k in range(1, n + 1)]
    total = pq.dims(n, r)
    return ({"n": n, "r": r_out(r), "dim": total, "by_k": by_k},
            "%d  (by k: %s)" % (total, " ".join(map(str, by_k))))


def cmd_trees(a):
    n = a.n
    if a.stat == "md":
        config.check_cap("max_tree_n", n)
        hist = tr.md_size_histogram(n)
        rows = {str(k): hist[k] for k in sorted(hist)}
        text = "\n".join("|MD|=%s: %d" % kv for kv in rows.items())
        return {"n": n, "md_sizes": rows}, text
    if a.stat == "chain":
        config.check_cap("max_tree_n", n)
        by_k = {str(k): tr.count_chain_md(n, k) for k in range(1, n + 1)}
        total = sum(by_k.values())
        return {"n": n, "chain_md": total, "by_k": by_k}, str(total)
    # count: |T_{n,k}| by enumeration when feasible, else by the closed formula
    ks = [a.k] if a.k is not None else list(range(n + 1))
    rows = {}
    for k in ks:
        if not 0 <= k <= n:
            raise UsageError("need 0 <= k <= n")
        closed = tr.seo_shin(n, k)
        row = {"closed": closed}
        if n + 1 <= config.get("max_tree_n"):
            row["enumerated"] = tr.count_T(n, k)
        rows[str(k)] = row
    text = "\n".join("T_{%d,%s}: %d" % (n, k, row["closed"]) for k, row in rows.items())
    return {"n": n, "T": rows}, text


def cmd_verify(a):
    cases = verify.run_suite(a.suite)
    failed = [c for c in cases if not c["ok"]]
    lines = ["%s  [%s] %s" % ("PASS" if c["ok"] else "FAIL", c["suite"], c["name"]) for c in cases]
    lines.append("%d/%d passed" % (len(cases) - len(failed), len(cases)))
    return {"status": "fail" if failed else "pass", "suite": cases}, "\n".join(lines)


COMMANDS = {
    "std": cmd_std, "park": cmd_park, "blocks": cmd_blocks, "encode": cmd_encode,
    "decode": cmd_decode, "act": cmd_act, "orbit": cmd_orbit, "basis": cmd_basis,
    "product": cmd_product, "coproduct": cmd_coproduct, "dims": cmd_dims,
    "trees": cmd_trees, "verify": cmd_verify,
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--config", help="JSON file with cap overrides")

    p = argparse.ArgumentParser(prog="quasisym", parents=[common],
                                description="Parking quasi-symmetric functions toolkit")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, help):
        return sub.add_parser(name, parents=[common], help=help)

    for name, help in (("std", "standardization"), ("park", "parkization"),
                       ("blocks", "prime blocks of a parking function"),
                       ("encode", "word -> bi-word and almost-zero sequence")):
        add(name, help).add_argument("word")

    s = add("decode", "bi-word or almost-zero sequence -> word")
    s.add_argument("--zseq")
    s.add_argument("--biword", help='e.g. "346/121 2/1 e 17/11"')

    s = add("act", "apply generators s_i (rightmost first)")
    s.add_argument("target", help="word, or exponent vector like 2,1,0 for qsym")
    s.add_argument("--action", choices=("free", "park", "qsym", "wqsym"), required=True)
    s.add_argument("--r", default="1")
    s.add_argument("--gens", required=True, help='e.g. "2 1 3"')

    s = add("orbit", "truncated orbit of a word")
    s.add_argument("word")
    s.add_argument("--action", choices=("free", "park"), default="park")
    s.add_argument("--r", default="1")
    s.add_argument("--window", type=int)

    s = add("basis", "expand a basis element")
    s.add_argument("kind", choices=("G", "Gr", "M", "Mr", "WQM", "WQMr"))
    s.add_argument("label", help="word; composition 1,2 for M; 3,2|1,1 for Mr")
    s.add_argument("--r")
    s.add_argument("--n", type=int, help="number of variables / letters")
    s.add_argument("--trunc", type=int, help="window for the word realization of G / Gr")

    s = add("product", "product in the G or G^(r) basis")
    s.add_argument("left")
    s.add_argument("right")
    s.add_argument("--r")

    s = add("coproduct", "coproduct in the G or G^(r) basis")
    s.add_argument("word")
    s.add_argument("--r")

    s = add("dims", "dimension of the degree-n component")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--r", default="1")
    s.add_argument("--k", type=int)

    s = add("trees", "tree statistics")
    s.add_argument("--stat", choices=("md", "chain", "count"), required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int)

    s = add("verify", "run a verification suite")
    s.add_argument("--suite", choices=tuple(verify.SUITES) + ("all",), default="all")
    return p


def run(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    t0 = time.perf_counter()
    try:
        config.load(a.config)
        payload, text = COMMANDS[a.command](a)
    except (UsageError, config.CapExceeded, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except ValueError as exc:
        # malformed literals surfacing from the library
        print("error: %s" % exc, file=sys.stderr)
        return 2
    status = payload.pop("status", "ok") if a.command == "verify" else "ok"
    if a.format == "text":
        print(text, file=out)
    else:
        report = {"status": status}
        if a.command == "verify":
            report["suite"] = payload["suite"]
        else:
            report["payload"] = payload
        report["meta"] = {"command": a.command, "caps": config.caps()}
        report["timing"] = {"seconds": round(time.perf_counter() - t0, 3)}
        print(json.dumps(report, indent=2, ensure_ascii=False), file=out)
    return 1 if status == "fail" else 0


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
