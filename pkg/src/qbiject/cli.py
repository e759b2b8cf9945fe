"""Command line front end.

Subcommands
-----------

* ``forward --r R --shape S1,..,S{R-1} --lam L0,..``: run the forward
  map; text output ends with the resulting frequency sequence on the
  last line.
* ``backward --r R --freq F0,F1,..``: run the backward map; prints the
  recovered shape and insertion sequence.
* ``trace``: like forward but always emits the JSON trace document.
* ``enumerate --family NAME --r R --i I --max-weight W``: list members.
* ``coeffs``: dump a coefficient vector (multisum form, triple product
  over (q;q)_infinity, or per-weight family counts) as CSV or JSON.
* ``verify --key KEY --r R --i I [--n N]``: check one identity.
* ``sweep [--keys K1,K2] [--rmax R] [--n-series N] [--n-enum N]``: check
  the whole registry.

JSON trace schema::

    {"shape": [..], "lambda": [..], "freq": [..],
     "trace": [{"u": int, "gauge": int, "pivot": int, "delta": int,
                "snapshot": [..]}, ..],
     "weight": int, "length": int}

Coefficients are emitted as objects ``{"degree": n, "value": "<decimal
string>"}`` so arbitrarily large integers survive any JSON reader.

Exit codes: 0 on success, 1 on verification mismatch, 2 on usage
errors.  Output is deterministic; timing goes to a footer on stderr
only when ``--timing`` is given.

The default truncation degree for coefficient commands can be set with
the ``QBIJECT_N`` environment variable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from qbiject import bijection, identities, series, sets
from qbiject.partitions import length, weight


def _ints(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text or text == "-":
        return ()
    return tuple(int(x) for x in text.replace(",", " ").split())


def _default_n() -> int:
    return int(os.environ.get("QBIJECT_N", "40"))


def _trace_doc(shape, lam, freq, trace) -> dict:
    return {
        "shape": list(shape.s),
        "lambda": list(lam),
        "freq": list(freq),
        "trace": [
            {
                "u": st.u,
                "gauge": st.gauge,
                "pivot": st.pivot,
                "delta": st.delta,
                "snapshot": list(st.snapshot),
            }
            for st in trace.steps
        ],
        "weight": weight(freq),
        "length": length(freq),
    }


def _emit(text: str) -> None:
    sys.stdout.write(text)
    if not text.endswith("\n"):
        sys.stdout.write("\n")


def _cmd_forward(args) -> int:
    shape = sets.Shape(args.r, _ints(args.shape))
    lam = _ints(args.lam)
    freq, trace = bijection.lambda_forward(shape, lam)
    if args.format == "json":
        _emit(json.dumps(_trace_doc(shape, lam, freq, trace)))
    else:
        _emit(bijection.trace_to_text(trace))
    return 0


def _cmd_backward(args) -> int:
    freq = _ints(args.freq)
    shape, lam, trace = bijection.gamma_backward(freq, args.r)
    if args.format == "json":
        _emit(json.dumps(_trace_doc(shape, lam, freq, trace)))
    else:
        lines = [bijection.trace_to_text(trace)] if args.with_trace else []
        lines.append("shape " + (" ".join(str(x) for x in shape.s) or "-"))
        lines.append("kappa " + (" ".join(str(x) for x in lam) or "-"))
        _emit("\n".join(lines))
    return 0


def _cmd_trace(args) -> int:
    if args.direction == "forward":
        shape = sets.Shape(args.r, _ints(args.shape))
        lam = _ints(args.lam)
        freq, trace = bijection.lambda_forward(shape, lam)
    else:
        freq = _ints(args.freq)
        shape, lam, trace = bijection.gamma_backward(freq, args.r)
        freq = trace.initial
    _emit(json.dumps(_trace_doc(shape, lam, freq, trace)))
    return 0


def _cmd_enumerate(args) -> int:
    sid = sets.SetId(args.family, args.r, args.i)
    rows = []
    for obj in sets.enumerate_members(sid, args.max_weight):
        if sid.is_pair_side:
            shape, lam = obj
            rows.append({"shape": list(shape.s), "lambda": list(lam)})
        else:
            rows.append(list(obj))
    if args.format == "json":
        _emit(json.dumps(rows))
    else:
        _emit("\n".join(json.dumps(row) for row in rows) if rows else "")
    return 0


def _coeff_series(args):
    n = args.n if args.n is not None else _default_n()
    if args.kind == "multisum":
        return series.multisum(series.MultisumSpec(args.form, args.r, args.i), n)
    if args.kind == "product":
        return series.triple_product(args.a, args.m, n) * series.poch_inf(
            1, 1, n
        ).invert_unit()
    if args.kind == "counts":
        counts = sets.count_by_weight(sets.SetId(args.family, args.r, args.i), n)
        return series.TruncatedSeries(counts)
    raise ValueError(args.kind)


def _cmd_coeffs(args) -> int:
    s = _coeff_series(args)
    if args.format == "csv":
        _emit(series.to_csv(s))
    else:
        _emit(series.to_json_array(s))
    return 0


def _cmd_verify(args) -> int:
    rep = identities.verify(args.key, args.r, args.i, args.n)
    doc = {
        "key": rep.key,
        "r": rep.r,
        "i": rep.i,
        "n": rep.n,
        "ok": rep.ok,
        "mismatch_degree": rep.mismatch_degree,
        "lhs": [str(x) for x in rep.lhs],
        "rhs": [str(x) for x in rep.rhs],
    }
    if args.format == "json":
        _emit(json.dumps(doc))
    else:
        status = "ok" if rep.ok else "MISMATCH at degree %d" % rep.mismatch_degree
        _emit("%s r=%d i=%d n=%d: %s" % (rep.key, rep.r, rep.i, rep.n, status))
    return 0 if rep.ok else 1


def _cmd_sweep(args) -> int:
    keys = list(_strs(args.keys)) if args.keys else None
    reports = identities.sweep(
        keys=keys,
        r_values=tuple(range(2, args.rmax + 1)),
        n_series=args.n_series,
        n_enum=args.n_enum,
    )
    bad = [rep for rep in reports if not rep.ok]
    if args.format == "json":
        for rep in reports:
            _emit(
                json.dumps(
                    {
                        "key": rep.key,
                        "r": rep.r,
                        "i": rep.i,
                        "n": rep.n,
                        "ok": rep.ok,
                        "mismatch_degree": rep.mismatch_degree,
                    }
                )
            )
    else:
        width = max(len(rep.key) for rep in reports) if reports else 3
        for rep in reports:
            status = (
                "ok"
                if rep.ok
                else "MISMATCH at degree %d (lhs=%d rhs=%d)"
                % (rep.mismatch_degree, rep.lhs_at_mismatch, rep.rhs_at_mismatch)
            )
            _emit(
                "%-*s r=%d i=%2d n=%2d %s" % (width, rep.key, rep.r, rep.i, rep.n, status)
            )
        _emit("checked %d cases, %d mismatches" % (len(reports), len(bad)))
    return 1 if bad else 0


def _strs(text: str):
    return (x for x in text.replace(",", " ").split() if x)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="qbiject",
        description="staircase insertion bijection and q-series identity checks",
    )
    p.add_argument(
        "--timing", action="store_true", help="print elapsed time footer to stderr"
    )
    sub = p.add_subparsers(dest="command", required=True)

    fw = sub.add_parser("forward", help="run the forward map")
    fw.add_argument("--r", type=int, required=True)
    fw.add_argument("--shape", required=True, help="comma separated s_1,..,s_{r-1}")
    fw.add_argument("--lam", required=True, help="comma separated insertion values")
    fw.add_argument("--format", choices=("text", "json"), default="text")
    fw.set_defaults(fn=_cmd_forward)

    bw = sub.add_parser("backward", help="run the backward map")
    bw.add_argument("--r", type=int, required=True)
    bw.add_argument("--freq", required=True, help="comma separated multiplicities")
    bw.add_argument("--format", choices=("text", "json"), default="text")
    bw.add_argument("--with-trace", action="store_true")
    bw.set_defaults(fn=_cmd_backward)

    tr = sub.add_parser("trace", help="emit the JSON trace document")
    tr.add_argument("--direction", choices=("forward", "backward"), default="forward")
    tr.add_argument("--r", type=int, required=True)
    tr.add_argument("--shape", default="")
    tr.add_argument("--lam", default="")
    tr.add_argument("--freq", default="")
    tr.set_defaults(fn=_cmd_trace)

    en = sub.add_parser("enumerate", help="list members of a family by weight")
    en.add_argument("--family", required=True, choices=sets.FREQ_FAMILIES + sets.PAIR_FAMILIES)
    en.add_argument("--r", type=int, required=True)
    en.add_argument("--i", type=int, required=True)
    en.add_argument("--max-weight", type=int, required=True)
    en.add_argument("--format", choices=("text", "json"), default="text")
    en.set_defaults(fn=_cmd_enumerate)

    co = sub.add_parser("coeffs", help="dump a coefficient vector")
    co.add_argument("--kind", choices=("multisum", "product", "counts"), required=True)
    co.add_argument("--form", choices=sorted(series.MULTISUM_FORMS), default="AG")
    co.add_argument("--family", choices=sets.FREQ_FAMILIES + sets.PAIR_FAMILIES)
    co.add_argument("--r", type=int)
    co.add_argument("--i", type=int)
    co.add_argument("--a", type=int)
    co.add_argument("--m", type=int)
    co.add_argument("--n", type=int, default=None)
    co.add_argument("--format", choices=("csv", "json"), default="csv")
    co.set_defaults(fn=_cmd_coeffs)

    ve = sub.add_parser("verify", help="verify one identity")
    ve.add_argument("--key", required=True, choices=sorted(identities.registry()))
    ve.add_argument("--r", type=int, required=True)
    ve.add_argument("--i", type=int, required=True)
    ve.add_argument("--n", type=int, default=None)
    ve.add_argument("--format", choices=("text", "json"), default="text")
    ve.set_defaults(fn=_cmd_verify)

    sw = sub.add_parser("sweep", help="verify the whole registry")
    sw.add_argument("--keys", default="", help="comma separated registry keys")
    sw.add_argument("--rmax", type=int, default=4)
    sw.add_argument("--n-series", type=int, default=identities.DEFAULT_N_SERIES)
    sw.add_argument("--n-enum", type=int, default=identities.DEFAULT_N_ENUM)
    sw.add_argument("--format", choices=("text", "json"), default="text")
    sw.set_defaults(fn=_cmd_sweep)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    t0 = time.perf_counter()
    try:
        code = args.fn(args)
    except (ValueError, bijection.NotInDomainError, sets.CapacityError) as exc:
        parser.exit(2, "error: %s\n" % exc)
    if args.timing:
        sys.stderr.write("# elapsed %.3fs\n" % (time.perf_counter() - t0))
    return code


if __name__ == "__main__":
    sys.exit(main())
