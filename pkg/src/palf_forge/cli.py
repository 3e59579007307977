"""Command-line interface: ``palf-forge fillings | palf | blowdown-sequence | verify``.

Exit codes are 0 on success, 1 for bad input and 2 when a verification fails.
``PALF_FORGE_THREADS`` caps the number of worker processes used by ``verify``.
"""

import argparse
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import gcd

from . import braidlink as bl
from . import emit
from . import filling as fl
from . import freegroup
from . import mcgcheck as mc
from . import relations as rl
from . import tuples as tp

EXIT_OK, EXIT_INPUT, EXIT_VERIFY = 0, 1, 2


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


@dataclass(frozen=True)
class RunConfig:
    command: str
    p: int = 0
    q: int = 0
    tuple: tuple = None
    format: str = "text"
    out: str = None
    max_p: int = 0
    certify: bool = True

    def __post_init__(self):
        if self.command in ("fillings", "palf", "blowdown-sequence"):
            if not (1 <= self.q < self.p) or gcd(self.p, self.q) != 1:
                raise InputError(f"need coprime 1 <= q < p, got p={self.p}, q={self.q}")
        if self.command == "verify" and self.max_p < 2:
            raise InputError("--max-p must be at least 2")


def parse_tuple(text):
    try:
        vals = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise InputError(f"cannot parse tuple {text!r}; expected comma-separated integers")
    return vals


def _pick_tuple(cfg):
    if cfg.tuple is None:
        fills = tp.enumerate_fillings(cfg.p, cfg.q)
        raise InputError(f"--tuple is required; choices for L({cfg.p},{cfg.q}): "
                         + "; ".join(",".join(map(str, n)) for n in fills))
    try:
        return fl.lisca_filling(cfg.p, cfg.q, cfg.tuple)
    except ValueError as exc:
        raise InputError(str(exc))


def _filling_row(p, q, n):
    spec = fl.lisca_filling(p, q, n)
    w = fl.monodromy(spec)
    inv = fl.word_invariants(w)
    return spec, w, inv


def palf_document(p, q, spec, w, inv):
    return {
        "p": p,
        "q": q,
        "tuple": list(spec.n),
        "m": list(spec.m),
        "page_holes": w.page_holes,
        "word": emit.word_to_json(w),
        "invariants": {"height": tp.height(spec.n), **inv.as_dict()},
    }


def cmd_fillings(cfg):
    rows = [_filling_row(cfg.p, cfg.q, n) for n in tp.enumerate_fillings(cfg.p, cfg.q)]
    if cfg.format == "json":
        return emit.dumps({
            "p": cfg.p,
            "q": cfg.q,
            "fillings": [palf_document(cfg.p, cfg.q, *r) for r in rows],
        })
    if cfg.format != "text":
        raise InputError(f"fillings supports json or text, not {cfg.format}")
    lines = [f"# L({cfg.p},{cfg.q}): {len(rows)} filling(s)",
             "tuple\theight\tchi\tb2\t|H1(boundary)|\tword"]
    for spec, w, inv in rows:
        lines.append("\t".join([
            ",".join(map(str, spec.n)), str(tp.height(spec.n)), str(inv.euler_characteristic),
            str(inv.b2), str(inv.boundary_order), str(w),
        ]))
    return "\n".join(lines) + "\n"


def cmd_palf(cfg):
    spec = _pick_tuple(cfg)
    w = fl.monodromy(spec)
    inv = fl.word_invariants(w)
    if cfg.format == "json":
        doc = palf_document(cfg.p, cfg.q, spec, w, inv)
        doc["handlebody"] = fl.export_handlebody(spec).as_dict()
        return emit.dumps(doc)
    if cfg.format == "svg":
        return emit.word_svg(w, title=f"PALF on W_{cfg.p},{cfg.q}({','.join(map(str, spec.n))})")
    if cfg.format == "dot":
        _, weights = fl.minimal_resolution(cfg.p, cfg.q)
        return emit.plumbing_dot([(f"minimal resolution of L({cfg.p},{cfg.q})", weights)])
    return (f"L({cfg.p},{cfg.q}) n={','.join(map(str, spec.n))} m={','.join(map(str, spec.m))}\n"
            f"holes: {w.page_holes}\ntwists: {len(w)}\nword: {w}\n"
            f"chi={inv.euler_characteristic} b1={inv.b1} b2={inv.b2} "
            f"|H1(boundary)|={inv.boundary_order}\n")


def cmd_blowdown_sequence(cfg):
    spec = _pick_tuple(cfg)
    script = rl.lemma_script(spec.n, spec.m, certify=cfg.certify)
    blowdowns = rl.rational_blowdown_sequence(cfg.p, cfg.q, spec.n, certify=cfg.certify)
    message = "minimal resolution" if not blowdowns else f"{len(blowdowns)} rational blowdown(s)"
    if cfg.format == "json":
        doc = {
            "p": cfg.p,
            "q": cfg.q,
            "tuple": list(spec.n),
            "page_holes": spec.k,
            "message": message,
            "initial_word": emit.word_to_json(script.initial),
            "final_word": emit.word_to_json(script.final),
            "steps": script.as_dict()["steps"],
            "blowdowns": [b.as_dict() for b in blowdowns],
        }
        return emit.dumps(doc)
    if cfg.format == "dot":
        chains = [(f"step {i}: L({b.lens_space[0]},{b.lens_space[1]})", list(b.weights))
                  for i, b in enumerate(blowdowns, start=1)]
        return emit.plumbing_dot(chains, name="blowdowns")
    if cfg.format == "svg":
        return emit.word_svg(script.final)
    lines = [f"L({cfg.p},{cfg.q}) n={','.join(map(str, spec.n))}: {message}",
             f"start: {script.initial}"]
    for s in script.steps:
        tag = "certified" if s.certified else "UNCERTIFIED"
        lines.append(f"step {s.index} ({tag}, {len(s.ops)} ops): {s.after}")
    for i, b in enumerate(blowdowns, start=1):
        pw, bw = b.relation()
        lines.append(
            f"blowdown {i}: steps {b.group[0]}->{b.group[1]}, plumbing {list(b.weights)}, "
            f"(pbar,qbar)=({b.pbar},{b.qbar}), boundary L({b.lens_space[0]},{b.lens_space[1]})"
        )
        lines.append(f"  {pw} = {bw}")
    return "\n".join(lines) + "\n"


def verify_pair(pq):
    """Full check suite for one lens space; returns ``(count, failures)``."""
    p, q = pq
    failures = []
    fills = tp.enumerate_fillings(p, q)
    chi_min = fl.invariants(fl.minimal_resolution(p, q)[0]).euler_characteristic
    for n in fills:
        tag = {"p": p, "q": q, "tuple": list(n)}
        try:
            rep = bl.verify_equivalence(n)
            if not rep.passed:
                failures.append({**tag, "check": "braid equivalence", "detail": rep.detail})
            spec = fl.lisca_filling(p, q, n)
            inv = fl.invariants(spec)
            if inv.boundary_order != p:
                failures.append({**tag, "check": "boundary order", "detail": inv.boundary_order})
            if chi_min - inv.euler_characteristic != tp.height(n):
                failures.append({**tag, "check": "euler characteristic"})
            script = rl.lemma_script(spec.n, spec.m)
            if script.final != fl.monodromy(spec) or not script.certified:
                failures.append({**tag, "check": "substitution script"})
            rl.rational_blowdown_sequence(p, q, n)
        except Exception as exc:  # a crash is a counterexample dump, not a traceback
            failures.append({**tag, "check": "exception", "detail": repr(exc)})
    return len(fills), failures


def lantern_failures(max_k=6):
    bad = []
    for k in range(3, max_k + 1):
        for j in range(1, k - 1):
            lhs, rhs = rl.LanternMove.standard(k, j).relation()
            if not mc.equal(lhs, rhs):
                bad.append({"check": "lantern", "k": k, "j": j})
    return bad


def _workers():
    cap = os.environ.get("PALF_FORGE_THREADS")
    n = os.cpu_count() or 1
    if cap:
        try:
            n = max(1, min(n, int(cap)))
        except ValueError:
            raise InputError(f"PALF_FORGE_THREADS must be an integer, got {cap!r}")
    return n


def cmd_verify(cfg):
    pairs = [(p, q) for p in range(2, cfg.max_p + 1) for q in range(1, p) if gcd(p, q) == 1]
    workers = _workers()
    if workers == 1:
        results = [verify_pair(pq) for pq in pairs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(verify_pair, pairs, chunksize=4))
    failures = lantern_failures()
    total = 0
    for count, fails in results:
        total += count
        failures.extend(fails)
    summary = {
        "max_p": cfg.max_p,
        "lens_spaces": len(pairs),
        "fillings": total,
        "backend": freegroup.BACKEND,
        "failures": failures,
        "passed": not failures,
    }
    if cfg.format == "json":
        text = emit.dumps(summary)
    else:
        status = "PASS" if not failures else "FAIL"
        text = (f"{status}: {len(pairs)} lens spaces, {total} fillings, "
                f"{len(failures)} failure(s) [backend {freegroup.BACKEND}]\n")
        for f in failures:
            text += f"  {f}\n"
    return text, (EXIT_OK if not failures else EXIT_VERIFY)


def build_parser():
    ap = _Parser(prog="palf-forge", description="PALFs on minimal symplectic fillings of lens spaces")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, formats):
        sp.add_argument("--format", choices=formats, default="text")
        sp.add_argument("--out", help="write output to this file instead of stdout")

    sp = sub.add_parser("fillings", help="list every filling of L(p,q)")
    sp.add_argument("p", type=int)
    sp.add_argument("q", type=int)
    common(sp, ["text", "json"])

    for name, helptext in (("palf", "monodromy word of one filling"),
                           ("blowdown-sequence", "substitution script and rational blowdowns")):
        sp = sub.add_parser(name, help=helptext)
        sp.add_argument("p", type=int)
        sp.add_argument("q", type=int)
        sp.add_argument("--tuple", help="comma-separated filling tuple, e.g. 3,2,1,3,2")
        common(sp, ["text", "json", "svg", "dot"])
        if name == "blowdown-sequence":
            sp.add_argument("--no-certify", action="store_true", help="skip oracle checks")

    sp = sub.add_parser("verify", help="sweep all lens spaces with p <= max-p")
    sp.add_argument("--max-p", type=int, required=True)
    common(sp, ["text", "json"])
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig(
            command=args.command,
            p=getattr(args, "p", 0),
            q=getattr(args, "q", 0),
            tuple=parse_tuple(args.tuple) if getattr(args, "tuple", None) else None,
            format=args.format,
            out=args.out,
            max_p=getattr(args, "max_p", 0) or 0,
            certify=not getattr(args, "no_certify", False),
        )
        code = EXIT_OK
        if cfg.command == "fillings":
            text = cmd_fillings(cfg)
        elif cfg.command == "palf":
            text = cmd_palf(cfg)
        elif cfg.command == "blowdown-sequence":
            text = cmd_blowdown_sequence(cfg)
        else:
            text, code = cmd_verify(cfg)
    except InputError as exc:
        print(f"palf-forge: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (tp.InconsistencyError, rl.PatternNotFound) as exc:
        print(f"palf-forge: verification failure: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
