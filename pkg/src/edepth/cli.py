"""Command-line surface: single-module reports (edepth, table, gin,
verify-gin, decompose) over a small text input format, and seeded random
corpus harnesses.

Input files:
    ring p=32003 n=2
    submodule U [shifts=0,1]
      x1^2
      [x1, x2]      # vectors in brackets for rank > 1
    end

Exit codes: 0 ok, 2 hypothesis unmet, 3 certification failure, 4 parse error.
Output is deterministic for fixed (input, seed, flags).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .cohomology import lc_table, socle_table
from .cone import DecompositionError, decompose, reconstruct
from .corpus import KINDS, generate_corpus, module_fixture
from .gin import GinCertificationError, gin_rev_t, verify_gin
from .groebner import Submodule
from .resolutions import GradedPresentation
from .ring import FreeModule, format_vector, parse_ring_header, parse_vector
from .socle import seq_cm_socle_check, serialize_pair_fixture

EXIT_OK = 0
EXIT_HYPOTHESIS = 2
EXIT_CERTIFICATION = 3
EXIT_PARSE = 4


class ParseError(ValueError):
    pass


def parse_module_file(text):
    """Returns (ring, ordered {name: Submodule})."""
    ring_ = None
    subs = {}
    lines = [ln.split("#", 1)[0].rstrip() for ln in text.splitlines()]
    i = 0
    try:
        while i < len(lines):
            line = lines[i].strip()
            i += 1
            if not line:
                continue
            if line.startswith("ring"):
                ring_ = parse_ring_header(line)
                continue
            if line.startswith("submodule"):
                if ring_ is None:
                    raise ParseError("submodule block before ring header")
                parts = line.split()
                if len(parts) < 2:
                    raise ParseError("submodule needs a name")
                name = parts[1]
                shifts = (0,)
                for opt in parts[2:]:
                    if opt.startswith("shifts="):
                        shifts = tuple(int(x) for x in opt[len("shifts="):].split(","))
                    else:
                        raise ParseError(f"unknown submodule option {opt!r}")
                module = FreeModule(ring_, shifts)
                gens = []
                while i < len(lines):
                    gen_line = lines[i].strip()
                    i += 1
                    if gen_line == "end":
                        break
                    if not gen_line:
                        continue
                    gens.append(parse_vector(module, gen_line))
                else:
                    raise ParseError(f"submodule {name} not closed with 'end'")
                subs[name] = Submodule(module, gens)
                continue
            raise ParseError(f"cannot parse line: {line!r}")
    except ParseError:
        raise
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    if ring_ is None:
        raise ParseError("missing ring header")
    if not subs:
        raise ParseError("no submodule blocks")
    return ring_, subs


def _load(path, module_name=None):
    with open(path) as fh:
        ring_, subs = parse_module_file(fh.read())
    if module_name is None:
        module_name = next(iter(subs))
    if module_name not in subs:
        raise ParseError(f"no submodule named {module_name!r}")
    sub = subs[module_name]
    return ring_, module_name, sub, GradedPresentation(sub.module, sub)


def _emit(payload, fmt, csv_text=None):
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True))
    elif fmt == "csv":
        print(csv_text if csv_text is not None else _flat_csv(payload), end="")
    else:
        _pretty(payload)


def _flat_csv(payload, prefix=""):
    rows = []

    def walk(obj, key):
        if isinstance(obj, dict):
            for k, v in sorted(obj.items()):
                walk(v, f"{key}.{k}" if key else str(k))
        elif isinstance(obj, (list, tuple)):
            rows.append(f"{key},{json.dumps(obj)}")
        else:
            rows.append(f"{key},{obj}")

    walk(payload, prefix)
    return "\n".join(rows) + "\n"


def _pretty(payload, indent=0):
    pad = "  " * indent
    if isinstance(payload, dict):
        for k, v in payload.items():
            if isinstance(v, (dict, list)):
                print(f"{pad}{k}:")
                _pretty(v, indent + 1)
            else:
                print(f"{pad}{k}: {v}")
    elif isinstance(payload, list):
        for v in payload:
            if isinstance(v, (dict, list)):
                _pretty(v, indent + 1)
            else:
                print(f"{pad}- {v}")
    else:
        print(f"{pad}{payload}")


def _seed(args):
    if args.seed is not None:
        return args.seed
    env = os.environ.get("EDEPTH_SEED")
    return int(env) if env else 0


def cmd_edepth(args):
    _ring, name, _sub, pres = _load(args.file, args.module)
    n = pres.ring.n
    ext_rows = []
    for i in range(n + 1):
        hs = pres.ext_hilbert_series(i)
        if hs.is_zero():
            continue
        e = pres.ext(i)
        ext_rows.append({"i": i, "depth": e.depth(), "dim": e.krull_dim(),
                         "cohen_macaulay": e.depth() == e.krull_dim()})
    payload = {
        "module": name,
        "edepth": pres.edepth(),
        "depth": _num(pres.depth()),
        "dim": _num(pres.krull_dim()),
        "sequentially_cohen_macaulay": pres.is_sequentially_cm(),
        "ext": ext_rows,
    }
    _emit(payload, args.format)
    return EXIT_OK


def _num(x):
    if x == float("inf"):
        return "infinity"
    if x == float("-inf"):
        return "-infinity"
    return x


def _window(args, table):
    if args.window:
        a, b = args.window.split(":")
        return (int(a), int(b))
    return table.default_window()


def cmd_table(args):
    _ring, name, _sub, pres = _load(args.file, args.module)
    table = lc_table(pres)
    window = _window(args, table)
    delta = table.delta()
    payload = {"module": name,
               "lc": table.to_json(window),
               "delta": delta.to_json(),
               "socle": [{"i": i, "entries": sorted(row.items())}
                         for i, row in enumerate(socle_table(pres))]}
    _emit(payload, args.format, csv_text=table.to_csv(window))
    return EXIT_OK


def cmd_gin(args):
    _ring, name, sub, _pres = _load(args.file, args.module)
    try:
        V, cert = gin_rev_t(sub, args.t, seed=_seed(args))
    except GinCertificationError as exc:
        print(f"certification failed: {exc}", file=sys.stderr)
        return EXIT_CERTIFICATION
    payload = {"module": name, "t": args.t,
               "generators": [format_vector(g) for g in V.gb()],
               "certificate": cert.to_json()}
    _emit(payload, args.format)
    return EXIT_OK


def cmd_verify_gin(args):
    _ring, name, _sub, pres = _load(args.file, args.module)
    try:
        rep = verify_gin(pres, args.t, seed=_seed(args))
    except GinCertificationError as exc:
        print(f"certification failed: {exc}", file=sys.stderr)
        return EXIT_CERTIFICATION
    payload = {"module": name, **rep.to_json()}
    _emit(payload, args.format)
    return EXIT_OK if rep.consistent else 1


def cmd_decompose(args):
    _ring, name, _sub, pres = _load(args.file, args.module)
    try:
        coeffs = decompose(pres, seed=_seed(args))
    except DecompositionError as exc:
        print(f"hypothesis unmet: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except GinCertificationError as exc:
        print(f"certification failed: {exc}", file=sys.stderr)
        return EXIT_CERTIFICATION
    target = lc_table(pres).delta()
    diff = reconstruct(coeffs) + target.scale(-1)
    payload = {"module": name, "coefficients": coeffs.to_json(),
               "reconstruction_diff": sorted(diff.entries.items())}
    _emit(payload, args.format)
    return EXIT_OK


def _corpus_check_gin(name, sub, seed):
    pres = GradedPresentation(sub.module, sub)
    n = pres.ring.n
    for t in range(n + 1):
        rep = verify_gin(pres, t, seed=seed)
        if not rep.consistent:
            return False, f"t={t}"
    return True, None

def _corpus_check_decompose(name, sub, seed):
    pres = GradedPresentation(sub.module, sub)
    n = pres.ring.n
    e = pres.edepth()
    d = pres.krull_dim()
    if not (e >= n - 2 or (d < n and e >= d - 1)):
        return None, "skipped (E-depth below n-2)"
    coeffs = decompose(pres, seed=seed)
    if pres.is_sequentially_cm():
        if coeffs.j_rays or not coeffs.is_integral():
            return False, "sequential decomposition not integral S-rays"
    return True, None

def _corpus_check_socle(name, sub, seed):
    import random as _random
    rng = _random.Random(f"socle:{name}:{seed}")
    pres = GradedPresentation(sub.module, sub)
    if not pres.is_sequentially_cm():
        return None, "skipped (not sequentially CM)"
    F = sub.module
    bigger = sub.plus([F.basis_vector(c, mono=sub.ring.variable_mono(
        rng.randint(1, sub.ring.n))) for c in range(F.rank)])
    if bigger.is_subset(sub):
        return None, "skipped (no strict enlargement)"
    if not GradedPresentation(F, bigger).is_sequentially_cm():
        return None, "skipped (enlargement not sequentially CM)"
    rep = seq_cm_socle_check(sub, bigger)
    if rep.verdict == "COUNTEREXAMPLE":
        return False, serialize_pair_fixture(sub, bigger)
    return True, None


CORPUS_CHECKS = {"gin": _corpus_check_gin,
                 "decompose": _corpus_check_decompose,
                 "socle": _corpus_check_socle}


def _run_corpus_item(item):
    check_name, name, sub, seed = item
    ok, info = CORPUS_CHECKS[check_name](name, sub, seed)
    return name, ok, info


def cmd_corpus(args):
    p, n = 32003, None
    if args.ring:
        for part in args.ring.replace(",", " ").split():
            k, v = part.split("=")
            if k == "p":
                p = int(v)
            elif k == "n":
                n = int(v)
    ns = (n,) if n else (2, 3)
    seed = _seed(args)
    instances = generate_corpus(args.kind, args.count, seed, p=p, ns=ns)
    items = [(args.check, name, sub, seed) for name, sub in instances]
    if args.jobs > 1:
        import concurrent.futures
        with concurrent.futures.ProcessPoolExecutor(max_workers=args.jobs) as pool:
            outcomes = list(pool.map(_run_corpus_item, items))
    else:
        outcomes = [_run_corpus_item(item) for item in items]
    by_name = dict((name, sub) for name, sub in instances)
    results = [{"name": name, "ok": ok, "info": None if info and "\n" in str(info)
                else info}
               for name, ok, info in outcomes]
    failures = [(name, by_name[name], info) for name, ok, info in outcomes
                if ok is False]
    passed = sum(1 for r in results if r["ok"] is True)
    skipped = sum(1 for r in results if r["ok"] is None)
    payload = {"kind": args.kind, "check": args.check, "count": len(results),
               "passed": passed, "skipped": skipped,
               "failed": len(failures),
               "results": results}
    _emit(payload, args.format)
    if failures and args.fixtures_dir:
        os.makedirs(args.fixtures_dir, exist_ok=True)
        for name, sub, info in failures:
            path = os.path.join(args.fixtures_dir, f"{name}.mod")
            with open(path, "w") as fh:
                fh.write(module_fixture(sub))
                if info:
                    fh.write("".join(f"# {ln}\n" for ln in str(info).splitlines()))
    return EXIT_OK if not failures else 1


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="edepth",
        description="graded module invariants over F_p: E-depth, local "
                    "cohomology tables, general initial submodules, cone "
                    "decompositions")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, needs_file=True):
        if needs_file:
            sp.add_argument("file")
            sp.add_argument("--module", default=None, help="submodule name")
        sp.add_argument("--seed", type=int, default=None)
        sp.add_argument("--format", choices=("json", "csv", "pretty"),
                        default="json")

    sp = sub.add_parser("edepth", help="E-depth, depth, dim, Ext summary")
    common(sp)
    sp.set_defaults(func=cmd_edepth)

    sp = sub.add_parser("table", help="local cohomology / difference / socle tables")
    common(sp)
    sp.add_argument("--window", default=None, metavar="a:b")
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("gin", help="certified partial general initial submodule")
    common(sp)
    sp.add_argument("--t", type=int, required=True)
    sp.set_defaults(func=cmd_gin)

    sp = sub.add_parser("verify-gin", help="check: E-depth >= t iff gin "
                                           "preserves cohomology tables")
    common(sp)
    sp.add_argument("--t", type=int, required=True)
    sp.set_defaults(func=cmd_verify_gin)

    sp = sub.add_parser("decompose", help="ray decomposition of the difference table")
    common(sp)
    sp.set_defaults(func=cmd_decompose)

    sp = sub.add_parser("corpus", help="seeded random corpus harness")
    common(sp, needs_file=False)
    sp.add_argument("--kind", choices=KINDS, default="monomial")
    sp.add_argument("--count", type=int, default=20)
    sp.add_argument("--check", choices=tuple(CORPUS_CHECKS), default="gin")
    sp.add_argument("--ring", default=None, help='e.g. "p=32003,n=3"')
    sp.add_argument("--jobs", type=int, default=1,
                    help="worker processes for corpus checks")
    sp.add_argument("--fixtures-dir", default=None)
    sp.set_defaults(func=cmd_corpus)

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except FileNotFoundError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
