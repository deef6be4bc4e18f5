"""Command-line interface for the Hecke-algebra category toolkit.

Every subcommand fixes the parameters with --N and --K, computes one
exact quantity, and prints it as JSON (compact by default, --pretty for
indented output).  Scalar-valued results carry the exact cyclotomic
coordinates together with a float embedding for human inspection.

Exit codes: 0 on success, 1 on a domain error (a quantity that does
not exist at these parameters, or an input outside the strand limits),
2 on a usage error (malformed arguments).  The `verify` subcommand
also exits 1 when the report contains a failed check.

Expensive results (projectors, Gram data, blocks, fusion, modular
data) are cached on disk.  The cache directory comes from --cache,
else the HSK_CACHE environment variable, else ./.hsk-cache.  Entries
are keyed by schema version, parameters and the defining arguments,
carry a content checksum, and are written atomically; a corrupt or
mismatched entry is treated as absent, so a warm cache returns byte
for byte the same JSON as a cold one.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import tempfile

from .diagrams import YoungDiagram, branch, dagger, labels, path_count
from .hecke import BraidWord, from_braid, jones_wenzl, young_idempotent
from .scalar import Params, Scalar, qint
from .trace import GRAM_LIMIT, TRACE_LIMIT, closure_invariant, gram, markov_trace
from .category import (
    central_idempotents,
    fusion,
    fusion_table,
    mf_dim,
    purified_dim,
    qdim,
    s_matrix,
    twist,
)
from .verify import run_verify

SCHEMA_VERSION = 1


class UsageError(Exception):
    """Malformed command-line input; reported with exit code 2."""


# ---------------------------------------------------------------------------
# serialization helpers


def _scalar_json(x: Scalar) -> dict:
    e = x.embed()
    return {**x.to_json(), "embed": [e.real, e.imag]}


def _parse_diagram(text: str) -> YoungDiagram:
    """Row lengths as comma- or space-separated positive integers;
    an empty string is the empty diagram."""
    parts = [t for t in text.replace(",", " ").split() if t]
    rows = []
    for t in parts:
        try:
            r = int(t)
        except ValueError:
            raise UsageError(f"diagram row {t!r} is not an integer")
        if r <= 0:
            raise UsageError("diagram rows must be positive")
        rows.append(r)
    if any(a < b for a, b in zip(rows, rows[1:])):
        raise UsageError("diagram rows must be weakly decreasing")
    return YoungDiagram(tuple(rows))


def _parse_braid(word: str, strands: int | None) -> BraidWord:
    letters = []
    for t in word.split():
        try:
            i = int(t)
        except ValueError:
            raise UsageError(f"braid letter {t!r} is not an integer")
        if i == 0:
            raise UsageError("braid letters must be nonzero")
        letters.append(i)
    needed = max((abs(i) for i in letters), default=0) + 1
    if strands is None:
        if not letters:
            raise UsageError("--strands is required for the empty braid word")
        strands = needed
    if strands < 1:
        raise UsageError("--strands must be positive")
    if letters and strands < needed:
        raise UsageError(
            f"braid word uses generator {needed - 1}, needs at least {needed} strands"
        )
    return BraidWord(strands, tuple(letters))


# ---------------------------------------------------------------------------
# result cache


class ResultCache:
    """Best-effort JSON store keyed by (schema, N, K, kind, args).

    Entries are self-describing files {version, key, checksum, payload};
    a read that fails the key or checksum comparison is a miss.  Writes
    go through a temporary file in the same directory and an atomic
    rename, so concurrent readers never observe a partial entry."""

    def __init__(self, root: str):
        self.root = root

    def _path(self, key: list) -> str:
        digest = hashlib.sha256(self._canon(key).encode()).hexdigest()[:32]
        return os.path.join(self.root, digest + ".json")

    @staticmethod
    def _canon(obj) -> str:
        return json.dumps(obj, sort_keys=True, separators=(",", ":"))

    def get(self, key: list):
        try:
            with open(self._path(key), "r", encoding="utf-8") as fh:
                entry = json.load(fh)
            if entry.get("version") != SCHEMA_VERSION or entry.get("key") != key:
                return None
            payload = entry.get("payload")
            digest = hashlib.sha256(self._canon(payload).encode()).hexdigest()
            if entry.get("checksum") != digest:
                return None
            return payload
        except (OSError, ValueError):
            return None

    def put(self, key: list, payload) -> None:
        try:
            os.makedirs(self.root, exist_ok=True)
            entry = {
                "version": SCHEMA_VERSION,
                "key": key,
                "checksum": hashlib.sha256(self._canon(payload).encode()).hexdigest(),
                "payload": payload,
            }
            fd, tmp = tempfile.mkstemp(dir=self.root, suffix=".tmp")
            try:
                with os.fdopen(fd, "w", encoding="utf-8") as fh:
                    json.dump(entry, fh)
                os.replace(tmp, self._path(key))
            except BaseException:
                os.unlink(tmp)
                raise
        except OSError:
            pass  # the cache is an optimization, never a failure


def _cache_dir(args) -> str:
    if args.cache:
        return args.cache
    return os.environ.get("HSK_CACHE", os.path.join(".", ".hsk-cache"))


def _cached(args, kind: str, extra: list, compute):
    cache = ResultCache(_cache_dir(args))
    key = [SCHEMA_VERSION, args.N, args.K, kind] + extra
    hit = cache.get(key)
    if hit is not None:
        return hit
    result = compute()
    cache.put(key, result)
    return result


# ---------------------------------------------------------------------------
# subcommand handlers: each returns (json_payload, exit_code)


def _cmd_labels(p: Params, args):
    return [list(d.rows) for d in labels(p)], 0


def _cmd_qint(p: Params, args):
    return _scalar_json(qint(p, args.j)), 0


def _cmd_dagger(p: Params, args):
    d = _parse_diagram(args.diagram)
    return list(dagger(p, d).rows), 0


def _cmd_branch(p: Params, args):
    d = _parse_diagram(args.diagram)
    n = args.strands if args.strands is not None else d.size
    return [list(b.rows) for b in branch(p, n, d)], 0


def _cmd_paths(p: Params, args):
    d = _parse_diagram(args.diagram)
    n = args.strands if args.strands is not None else d.size
    return {"n": n, "diagram": list(d.rows), "count": path_count(p, n, d)}, 0


def _cmd_jw(p: Params, args):
    def compute():
        return jones_wenzl(p, args.strands, args.kind).to_json()

    return _cached(args, "jw", [args.strands, args.kind], compute), 0


def _cmd_yidem(p: Params, args):
    d = _parse_diagram(args.diagram)

    def compute():
        y = young_idempotent(p, d)
        return {
            "diagram": list(d.rows),
            "hook": _scalar_json(y.hook),
            "quasi": y.quasi.to_json(),
            "idempotent": None if y.idem is None else y.idem.to_json(),
        }

    return _cached(args, "yidem", [list(d.rows)], compute), 0


def _cmd_trace(p: Params, args):
    b = _parse_braid(args.braid, args.strands)
    if b.strands > TRACE_LIMIT:
        raise ValueError(f"traces are limited to {TRACE_LIMIT} strands")
    return _scalar_json(markov_trace(p, from_braid(p, b))), 0


def _cmd_closure(p: Params, args):
    b = _parse_braid(args.braid, args.strands)
    if b.strands > TRACE_LIMIT:
        raise ValueError(f"closures are limited to {TRACE_LIMIT} strands")
    return _scalar_json(closure_invariant(p, b)), 0


def _cmd_gram(p: Params, args):
    def compute():
        return gram(p, args.strands, args.form).to_json(args.full)

    return _cached(args, "gram", [args.strands, args.form, bool(args.full)], compute), 0


def _cmd_purify(p: Params, args):
    def compute():
        return purified_dim(p, args.strands).to_json()

    return _cached(args, "purify", [args.strands], compute), 0


def _cmd_blocks(p: Params, args):
    def compute():
        return central_idempotents(p, args.strands).to_json(args.full)

    return _cached(args, "blocks", [args.strands, bool(args.full)], compute), 0


def _cmd_fusion(p: Params, args):
    if args.table:
        cap = args.max_strands

        def compute():
            return fusion_table(p, cap).to_json()

        return _cached(args, "fusion_table", [cap if cap is not None else GRAM_LIMIT], compute), 0
    if args.a is None or args.b is None or args.c is None:
        raise UsageError("fusion needs three diagrams A B C, or --table")
    a, b, c = (_parse_diagram(t) for t in (args.a, args.b, args.c))

    def compute():
        return {
            "a": list(a.rows),
            "b": list(b.rows),
            "c": list(c.rows),
            "n": fusion(p, a, b, c),
        }

    return _cached(args, "fusion", [list(a.rows), list(b.rows), list(c.rows)], compute), 0


def _cmd_qdim(p: Params, args):
    d = _parse_diagram(args.diagram)

    def compute():
        return _scalar_json(qdim(p, d))

    return _cached(args, "qdim", [list(d.rows)], compute), 0


def _cmd_twist(p: Params, args):
    d = _parse_diagram(args.diagram)

    def compute():
        return _scalar_json(twist(p, d))

    return _cached(args, "twist", [list(d.rows)], compute), 0


def _cmd_smatrix(p: Params, args):
    def compute():
        return s_matrix(p).to_json()

    return _cached(args, "smatrix", [], compute), 0


def _cmd_mfdim(p: Params, args):
    marked = [_parse_diagram(t) for t in (args.label or [])]
    if args.genus < 0:
        raise UsageError("--genus must be nonnegative")

    def compute():
        return {
            "genus": args.genus,
            "labels": [list(d.rows) for d in marked],
            "dim": mf_dim(p, args.genus, marked),
        }

    extra = [args.genus, [list(d.rows) for d in marked]]
    return _cached(args, "mfdim", extra, compute), 0


def _cmd_verify(p: Params, args):
    if not (2 <= args.max_n <= GRAM_LIMIT):
        raise UsageError(f"--max-n must be between 2 and {GRAM_LIMIT}")
    report = run_verify(p, max_n=args.max_n, seed=args.seed)
    return report.to_json(), 0 if report.overall == "pass" else 1


# ---------------------------------------------------------------------------
# argument parsing


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hsk",
        description="Exact Hecke-algebra realization of the level-K SU(N) category",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--N", type=int, required=True, help="rank (N >= 2)")
    common.add_argument("--K", type=int, required=True, help="level (K >= 1)")
    common.add_argument("--cache", metavar="DIR", help="cache directory")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="compact JSON output (default)")
    fmt.add_argument("--pretty", action="store_true", help="indented JSON output")

    def cmd(name, handler, help_text, configure=None):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        if configure:
            configure(sp)
        sp.set_defaults(handler=handler)

    cmd("labels", _cmd_labels, "list the simple labels of the category")
    cmd(
        "qint",
        _cmd_qint,
        "quantum integer [j]",
        lambda sp: sp.add_argument("j", type=int),
    )
    cmd(
        "dagger",
        _cmd_dagger,
        "dual label",
        lambda sp: sp.add_argument("diagram", help="row lengths, e.g. '2,1'; '' = empty"),
    )

    def diagram_strands(sp):
        sp.add_argument("diagram", help="row lengths, e.g. '2,1'; '' = empty")
        sp.add_argument("--strands", type=int, help="strand count n (default: diagram size)")

    cmd("branch", _cmd_branch, "one-step restriction of a label at n strands", diagram_strands)
    cmd("paths", _cmd_paths, "number of admissible paths to a label", diagram_strands)
    cmd(
        "jw",
        _cmd_jw,
        "symmetrizer or antisymmetrizer projector",
        lambda sp: (
            sp.add_argument("--strands", type=int, required=True),
            sp.add_argument("--kind", choices=["sym", "antisym"], required=True),
        ),
    )
    cmd(
        "yidem",
        _cmd_yidem,
        "Young idempotent of a diagram",
        lambda sp: sp.add_argument("diagram", help="row lengths, e.g. '2,1'"),
    )

    def braid_args(sp):
        sp.add_argument("--strands", type=int, help="strand count n")
        sp.add_argument(
            "--braid",
            required=True,
            help="whitespace-separated nonzero integers, sign = crossing sign",
        )

    cmd("trace", _cmd_trace, "Markov trace of a braid word", braid_args)
    cmd("closure", _cmd_closure, "skein invariant of a braid closure", braid_args)
    cmd(
        "gram",
        _cmd_gram,
        "Gram matrix data of the trace form",
        lambda sp: (
            sp.add_argument("--strands", type=int, required=True),
            sp.add_argument("--form", choices=["bilinear", "hermitian"], default="bilinear"),
            sp.add_argument("--full", action="store_true", help="include the matrix"),
        ),
    )
    cmd(
        "purify",
        _cmd_purify,
        "dimension and radical dimension of the purified algebra",
        lambda sp: sp.add_argument("--strands", type=int, required=True),
    )
    cmd(
        "blocks",
        _cmd_blocks,
        "block decomposition of the purified algebra",
        lambda sp: (
            sp.add_argument("--strands", type=int, required=True),
            sp.add_argument("--full", action="store_true", help="include central idempotents"),
        ),
    )
    cmd(
        "fusion",
        _cmd_fusion,
        "fusion coefficient N_ab^c, or the full table with --table",
        lambda sp: (
            sp.add_argument("a", nargs="?", help="first label"),
            sp.add_argument("b", nargs="?", help="second label"),
            sp.add_argument("c", nargs="?", help="target label"),
            sp.add_argument("--table", action="store_true"),
            sp.add_argument("--max-strands", type=int, dest="max_strands"),
        ),
    )
    cmd(
        "qdim",
        _cmd_qdim,
        "quantum dimension of a label",
        lambda sp: sp.add_argument("diagram"),
    )
    cmd(
        "twist",
        _cmd_twist,
        "ribbon twist eigenvalue of a label",
        lambda sp: sp.add_argument("diagram"),
    )
    cmd("smatrix", _cmd_smatrix, "unnormalized S-matrix from Hopf cablings")
    cmd(
        "mfdim",
        _cmd_mfdim,
        "modular-functor dimension of a marked surface",
        lambda sp: (
            sp.add_argument("--genus", type=int, default=0),
            sp.add_argument(
                "--label",
                action="append",
                help="marked-point label (repeatable), row lengths e.g. '2,1'",
            ),
        ),
    )
    cmd(
        "verify",
        _cmd_verify,
        "run the invariant battery and print a report",
        lambda sp: sp.add_argument("--max-n", type=int, default=5, dest="max_n"),
    )
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse reports usage errors itself
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        p = Params(args.N, args.K)
        payload, code = args.handler(p, args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.pretty:
        print(json.dumps(payload, indent=2))
    else:
        print(json.dumps(payload))
    return code


if __name__ == "__main__":
    sys.exit(main())
