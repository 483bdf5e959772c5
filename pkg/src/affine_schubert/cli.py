"""Command line interface: ``affine-schubert <command> [options]``.

Windows are comma separated, e.g. ``--window 8,1,3,5,4,0``.  A window that
starts with a minus sign may be given directly (``--window -3,4,5``).
Exit status is 0 on success, 2 on invalid input and 3 when a size limit
(``--max-elements``) is hit.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Optional, Sequence

from .bruhat import DEFAULT_CAP, covers_down, ideal_levels, poincare, reflection_set
from .core import AffinePermutation, parse_window
from .enumeration import (
    PoincareCache,
    count_3412_avoiders,
    count_avoiders_detail,
    verify_theorem,
)
from .errors import AffineError, CapacityExceeded, InvalidArgs, ValidationError, WitnessNotFound
from .patterns import Pattern, contains
from .pictures import build_picture, render_svg
from .smoothness import classify, poincare_factored, psi_steps, recognize_spiral, twisted_spiral
from .witness import witness

log = logging.getLogger("affine_schubert")

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_CAPACITY = 3

VALUE_FLAGS = ("--window", "--x", "--w")
LONG_N = 6


def _window(args, flag: str = "window") -> AffinePermutation:
    text = getattr(args, flag, None)
    if text is None:
        raise InvalidArgs(f"--{flag} is required")
    win = parse_window(text)
    n = args.n if args.n is not None else len(win)
    return AffinePermutation(n, win)


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


# --------------------------------------------------------------------------
# commands


def cmd_classify(args) -> int:
    w = _window(args)
    verdict = classify(w)
    payload = verdict.to_json()
    if args.witness and not verdict.smooth:
        payload["witness"] = witness(w).to_json()
    text = f"{w}: {verdict.label} ({verdict.reason})"
    if verdict.spiral is not None:
        text += f" i={verdict.spiral[0]} k={verdict.spiral[1]}"
    if verdict.occurrence is not None:
        text += f" {verdict.pattern} at {list(verdict.occurrence)}"
    if "witness" in payload:
        text += f"\n  witness: {payload['witness']}"
    _emit(args, payload, text)
    return EXIT_OK


def cmd_poincare(args) -> int:
    w = _window(args)
    if args.method == "factor":
        p = poincare_factored(w)
    elif args.cache_dir:
        p = PoincareCache(args.cache_dir).poincare(w, args.max_elements)
    else:
        p = poincare(w, args.max_elements)
    payload = {
        "window": list(w.window),
        "method": args.method,
        "coefficients": list(p.coeffs),
        "palindromic": p.is_palindromic(),
    }
    _emit(args, payload, f"{p}\npalindromic: {p.is_palindromic()}")
    return EXIT_OK


def cmd_rset(args) -> int:
    x = _window(args, "x")
    w = _window(args, "w")
    R = sorted(reflection_set(x, w))
    gap = w.length() - x.length()
    payload = {"reflections": [list(t.as_tuple()) for t in R], "count": len(R), "length_gap": gap}
    text = f"{len(R)} reflections (length gap {gap}): " + " ".join(repr(t) for t in R)
    _emit(args, payload, text)
    return EXIT_OK


def cmd_covers(args) -> int:
    w = _window(args)
    cs = covers_down(w)
    payload = {"covers": [{"t": list(t.as_tuple()), "u": list(u.window)} for t, u in cs]}
    text = "\n".join(f"{t!r} -> {u}" for t, u in cs) or "(none)"
    _emit(args, payload, text)
    return EXIT_OK


def cmd_ideal(args) -> int:
    w = _window(args)
    levels = ideal_levels(w, args.max_elements)
    payload = {"sizes": [len(lv) for lv in levels]}
    lines = [f"length {k}: {len(lv)}" for k, lv in enumerate(levels)]
    if args.list:
        payload["elements"] = [[list(u.window) for u in sorted(lv)] for lv in levels]
        lines = [f"length {k}: " + " ".join(str(u) for u in sorted(lv)) for k, lv in enumerate(levels)]
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_pattern(args) -> int:
    w = _window(args)
    p = Pattern.parse(args.pattern)
    occ = contains(w, p)
    payload = {"pattern": str(p), "contains": occ is not None, "indices": list(occ) if occ else None}
    if occ is None:
        text = f"{w} avoids {p}"
    else:
        text = f"{w} contains {p} at positions {list(occ)} (values {[w(i) for i in occ]})"
    _emit(args, payload, text)
    return EXIT_OK


def cmd_psi(args) -> int:
    w = _window(args)
    steps = psi_steps(w)
    rows = []
    lines = []
    for st in steps:
        sub = st.subword
        rows.append(
            {
                "element": list(st.element.window),
                "carrier": st.carrier,
                "subword": list(sub.values),
                "start": sub.start,
                "pivot": sub.pivot,
                "w_prime": list(st.w_prime.window),
                "sigma_inverse_word": list(st.sigma_inverse_word),
                "d": st.d,
                "factor": list(st.factor.coeffs),
            }
        )
        lines.append(
            f"{st.element} ({st.carrier}): x={list(sub.values)} at {sub.start}, pivot x_{sub.pivot}={sub.pivot_value}, "
            f"psi={st.w_prime}, sigma^-1=s_{'s_'.join(map(str, st.sigma_inverse_word))}, d={st.d}, factor {st.factor}"
        )
    total = poincare_factored(w)
    lines.append(f"P = {total}")
    _emit(args, {"steps": rows, "poincare": list(total.coeffs)}, "\n".join(lines))
    return EXIT_OK


def cmd_spiral(args) -> int:
    if args.window:
        w = _window(args)
        found = recognize_spiral(w)
        payload = {"spiral": None if found is None else {"i": found[0], "k": found[1]}}
        text = "not a twisted spiral" if found is None else f"twisted spiral i={found[0]} k={found[1]}"
        _emit(args, payload, text)
        return EXIT_OK
    if args.n is None or args.i is None or args.k is None:
        raise InvalidArgs("spiral needs --n, --i and --k (or --window to recognize)")
    w = twisted_spiral(args.n, args.i, args.k)
    payload = {"window": list(w.window), "length": w.length()}
    _emit(args, payload, f"{w} (length {w.length()})")
    return EXIT_OK


def cmd_witness(args) -> int:
    w = _window(args)
    if classify(w).smooth:
        raise InvalidArgs(f"{w} is rationally smooth; there is nothing to witness")
    ev = witness(w)
    _emit(args, ev.to_json(), str(ev.to_json()))
    return EXIT_OK


def cmd_picture(args) -> int:
    x = _window(args, "x")
    w = _window(args, "w")
    pic = build_picture(x, w, args.lo, args.hi)
    path = render_svg(pic, args.out)
    payload = {"path": str(path), "shaded": len(pic.shading), "max_d": pic.max_multiplicity}
    _emit(args, payload, f"wrote {path} ({len(pic.shading)} shaded cells, max d = {pic.max_multiplicity})")
    return EXIT_OK


def cmd_enumerate(args) -> int:
    if args.n is None:
        raise InvalidArgs("--n is required")
    if args.count_3412:
        L = args.max_length if args.max_length is not None else 2 * args.n * (args.n - 1)
        rep = count_3412_avoiders(args.n, L, args.max_elements)
        _emit(args, rep.to_json(), f"{rep.total} (stable: {rep.stable})")
        return EXIT_OK
    if not args.count_avoiders:
        raise InvalidArgs("choose --count-avoiders or --count-3412")
    if args.n >= LONG_N and not args.long:
        raise InvalidArgs(f"n >= {LONG_N} takes a long time; pass --long to run it")
    rep = count_avoiders_detail(args.n, check_stability=args.stability, jobs=args.jobs, cap=args.max_elements)
    _emit(args, rep.to_json(), str(rep.total))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.n is None:
        raise InvalidArgs("--n is required")
    rep = verify_theorem(args.n, args.max_length, args.max_elements)
    text = f"checked {rep.checked}, disagreements {len(rep.disagreements)}, reasons {dict(rep.reasons)}"
    _emit(args, rep.to_json(), text)
    return EXIT_OK if rep.ok else 1


def cmd_cache(args) -> int:
    if args.n is None:
        raise InvalidArgs("--n is required")
    cache = PoincareCache(args.cache_dir or "cache")
    if args.fill is not None:
        from .enumeration import ball_poincare, levels_up_to_length

        levels = list(levels_up_to_length(args.n, args.fill, args.max_elements))
        for w, p in sorted(ball_poincare(levels).items(), key=lambda kv: (kv[0].length(), kv[0].window)):
            cache.put(w, p)
    bad = cache.verify(args.n, args.max_elements) if args.verify_cache else []
    payload = {"path": str(cache.path(args.n)), "entries": len(cache.entries(args.n)), "mismatches": [list(w.window) for w in bad]}
    _emit(args, payload, f"{payload['path']}: {payload['entries']} entries, {len(bad)} mismatches")
    return EXIT_OK if not bad else 1


def cmd_batch(args) -> int:
    stream = open(args.input, encoding="utf-8") if args.input != "-" else sys.stdin
    try:
        for line in stream:
            line = line.strip()
            if not line:
                continue
            try:
                win = json.loads(line) if line.startswith("[") else parse_window(line)
                w = AffinePermutation(args.n or len(win), win)
                out = {"window": list(w.window), **classify(w).to_json()}
            except ValidationError as exc:
                out = {"input": line, "error": str(exc)}
            print(json.dumps(out, sort_keys=True))
    finally:
        if stream is not sys.stdin:
            stream.close()
    return EXIT_OK


# --------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, help="period n (defaults to the window length)")
    common.add_argument("--window", help="base window, comma separated")
    common.add_argument("--json", action="store_true", help="machine readable output")
    common.add_argument("--cache-dir", help="directory of n{N}.jsonl Poincare caches")
    common.add_argument("--jobs", type=int, default=1, help="worker processes")
    common.add_argument("--max-elements", type=int, default=DEFAULT_CAP, help="size limit for searches")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="affine-schubert", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=func)
        return p

    p = add("classify", cmd_classify, "decide rational smoothness")
    p.add_argument("--witness", action="store_true", help="attach non-palindromicity evidence")

    p = add("poincare", cmd_poincare, "Poincare polynomial")
    p.add_argument("--method", choices=("bfs", "factor"), default="bfs")

    p = add("rset", cmd_rset, "reflections t with x < xt <= w")
    p.add_argument("--x", required=True)
    p.add_argument("--w", required=True)

    add("covers", cmd_covers, "elements covered by w")
    p = add("ideal", cmd_ideal, "order ideal below w by length")
    p.add_argument("--list", action="store_true")

    p = add("pattern", cmd_pattern, "pattern containment")
    p.add_argument("--pattern", required=True, help="e.g. 3412")

    add("psi", cmd_psi, "factoring steps of an avoider")

    p = add("spiral", cmd_spiral, "build or recognize twisted spirals")
    p.add_argument("--i", type=int)
    p.add_argument("--k", type=int)

    add("witness", cmd_witness, "non-palindromicity evidence")

    p = add("picture", cmd_picture, "SVG Bruhat picture of x <= w")
    p.add_argument("--x", required=True)
    p.add_argument("--w", required=True)
    p.add_argument("--from", dest="lo", type=int)
    p.add_argument("--to", dest="hi", type=int)
    p.add_argument("--out", default="picture.svg")

    p = add("enumerate", cmd_enumerate, "avoider counts")
    p.add_argument("--count-avoiders", action="store_true")
    p.add_argument("--count-3412", action="store_true")
    p.add_argument("--max-length", type=int)
    p.add_argument("--stability", action="store_true", help="scan n lengths past the bound")
    p.add_argument("--long", action="store_true", help=f"allow n >= {LONG_N}")

    p = add("verify", cmd_verify, "compare the classifier with palindromicity")
    p.add_argument("--max-length", type=int, required=True)

    p = add("cache", cmd_cache, "fill or check the Poincare cache")
    p.add_argument("--fill", type=int, metavar="L", help="store every element of length <= L")
    p.add_argument("--verify-cache", action="store_true")

    p = add("batch", cmd_batch, "classify one window per input line (JSON lines out)")
    p.add_argument("--input", default="-")
    return parser


def _merge_negative_values(argv: Sequence[str]) -> list[str]:
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok in VALUE_FLAGS:
            nxt = next(it, None)
            if nxt is None:
                out.append(tok)
            elif nxt.startswith("-") and len(nxt) > 1 and nxt[1].isdigit():
                out.append(f"{tok}={nxt}")
            else:
                out += [tok, nxt]
        else:
            out.append(tok)
    return out


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_merge_negative_values(argv))
    except SystemExit as exc:
        return int(exc.code or 0) and EXIT_INVALID
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except CapacityExceeded as exc:
        print(f"error: {exc} (raise --max-elements to allow more)", file=sys.stderr)
        return EXIT_CAPACITY
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (WitnessNotFound, AffineError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
