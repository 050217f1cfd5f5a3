"""Command-line front end.

Subcommands::

    dnacodec satisfies --property desc.json --language lang.fa [--json]
    dnacodec maximal   --property desc.json --language lang.fa [--json]
    dnacodec build-property (--dna NAME --variant V | --trajectory E1 E2
                             [--strict]) --theta T [--alphabet SYMS] [-o OUT]
    dnacodec pcp {reduce,solve,check} --instance inst.json [--theta T]
                             [--bound N] [--solution 0,1] [-o OUT]
    dnacodec transducer check --mode {altering,preserving,functional,identity}
                             --bound N MACHINE [--theta T]

Exit codes: 0 for a positive verdict, 1 for a negative one (witness
printed), 2 for errors (parse failures, resource caps, refuted class
assertions).  ``--language`` may name a directory, in which case every
``*.fa`` file inside is checked on a worker-thread pool.

Property descriptors are JSON documents::

    {"kind": "S"|"W", "class": "unrestricted"|"altering"|"preserving",
     "theta": "dna-delta"|"identity"|"mirror"|{"table": {...}, "mode": ...},
     "transducer": "...fado text or path..."
                   | {"trajectory": {"e1": ..., "e2": ..., "strict": ...}}
                   | {"dna": {"name": ..., "variant": ...}},
     "alphabet": "ACGT"  (optional; for built-in theta names)}
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import os
import random
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Optional

from .alphabets import DNA, Alphabet, Permutation, dna_delta
from .automata import Nfa
from .dna import named_property
from .errors import DnaCodecError
from .fado import parse_fado, serialize_fado, unescape_cli_text
from .pcp import (
    PcpInstance,
    ThetaPcpInstance,
    check_solution,
    reduce_pcp_to_theta_pcp,
    solve_bounded,
)
from .properties import (
    INPUT_ALTERING,
    INPUT_PRESERVING,
    PropertyDescriptor,
    S_KIND,
    UNRESTRICTED,
    Verdict,
    W_KIND,
    find_extension,
    is_maximal,
    satisfies,
)
from .trajectories import TrajectoryPair, compile_trajectory_property
from .transducers import Transducer, bounded_counterexample, is_functional, is_partial_identity

_CLASS_NAMES = {
    "unrestricted": UNRESTRICTED,
    "altering": INPUT_ALTERING,
    "preserving": INPUT_PRESERVING,
}


def _machine_text(arg: str) -> str:
    """File contents when ``arg`` is a path, otherwise the inline text with
    literal \\n sequences unescaped."""
    if os.path.isfile(arg):
        with open(arg, encoding="utf-8") as fh:
            return fh.read()
    return unescape_cli_text(arg)


def _theta_from_spec(spec, hint: Optional[Alphabet] = None) -> Permutation:
    if isinstance(spec, str):
        name, _, alpha_part = spec.partition(":")
        alphabet = Alphabet.of(alpha_part) if alpha_part else hint
        if name == "dna-delta":
            return dna_delta()
        if name in ("identity", "mirror"):
            if alphabet is None:
                raise ValueError(f"theta {name!r} needs an alphabet (use {name}:SYMBOLS)")
            maker = Permutation.identity if name == "identity" else Permutation.mirror
            return maker(alphabet)
        raise ValueError(f"unknown theta name {name!r}")
    if isinstance(spec, dict):
        table = spec["table"]
        alphabet = Alphabet.of(spec["alphabet"]) if "alphabet" in spec else Alphabet.of(sorted(table))
        return Permutation.from_mapping(
            alphabet, table, antimorphic=spec.get("mode", "antimorphic") == "antimorphic"
        )
    raise ValueError(f"cannot interpret theta specification {spec!r}")


def _descriptor_from_doc(doc: dict, base_dir: str) -> PropertyDescriptor:
    source = doc["transducer"]
    alphabet = Alphabet.of(doc["alphabet"]) if "alphabet" in doc else None

    if isinstance(source, dict) and "dna" in source:
        theta = _theta_from_spec(doc.get("theta", "dna-delta"), alphabet or DNA)
        spec = source["dna"]
        built = named_property(spec["name"], spec["variant"], theta)
    elif isinstance(source, dict) and "trajectory" in source:
        spec = source["trajectory"]
        theta = _theta_from_spec(doc.get("theta", "dna-delta"), alphabet or DNA)
        pair = TrajectoryPair(spec["e1"], spec["e2"], bool(spec.get("strict", False)))
        built = compile_trajectory_property(pair, theta)
    else:
        text = source
        if "\n" not in text and not text.lstrip().startswith("@"):
            with open(os.path.join(base_dir, text), encoding="utf-8") as fh:
                text = fh.read()
        else:
            text = unescape_cli_text(text)
        machine = parse_fado(text, alphabet)
        if not isinstance(machine, Transducer):
            raise ValueError("descriptor 'transducer' entry parsed as an NFA")
        theta = _theta_from_spec(doc.get("theta", "dna-delta"), machine.alphabet)
        built = PropertyDescriptor(machine, theta, kind=doc.get("kind", S_KIND))

    changes = {}
    if "kind" in doc:
        changes["kind"] = doc["kind"]
    if "class" in doc:
        changes["asserted_class"] = _CLASS_NAMES[doc["class"]]
    if "name" in doc:
        changes["name"] = doc["name"]
    return dataclasses.replace(built, **changes) if changes else built


def _load_descriptor(arg: str) -> PropertyDescriptor:
    if arg.lstrip().startswith("{"):
        return _descriptor_from_doc(json.loads(arg), os.getcwd())
    with open(arg, encoding="utf-8") as fh:
        doc = json.load(fh)
    return _descriptor_from_doc(doc, os.path.dirname(os.path.abspath(arg)))


def _load_language(path: str, alphabet: Alphabet) -> Nfa:
    with open(path, encoding="utf-8") as fh:
        machine = parse_fado(fh.read(), alphabet)
    if not isinstance(machine, Nfa):
        raise ValueError(f"{path}: expected an NFA language file, found a transducer")
    return machine


def _language_files(arg: str) -> list[str]:
    if os.path.isdir(arg):
        files = sorted(
            os.path.join(arg, name) for name in os.listdir(arg) if name.endswith(".fa")
        )
        if not files:
            raise ValueError(f"no .fa files in directory {arg}")
        return files
    return [arg]


def _verdict_payload(v: Verdict) -> dict:
    witness = v.witness
    if isinstance(witness, tuple):
        witness = list(witness)
    return {"satisfied": v.satisfied, "witness": witness, "decider": v.decider, "stats": v.stats}


def _run_over_languages(args, p: PropertyDescriptor, fn) -> int:
    files = _language_files(args.language)
    def work(path: str):
        return path, fn(p, _load_language(path, p.theta.alphabet))
    if len(files) > 1:
        with ThreadPoolExecutor(max_workers=min(8, len(files))) as pool:
            results = list(pool.map(work, files))
    else:
        results = [work(files[0])]
    if args.json:
        payload = [dict(_verdict_payload(v), file=path) for path, v in results]
        print(json.dumps(payload[0] if len(payload) == 1 else {"results": payload}, indent=2))
    else:
        for path, v in results:
            prefix = f"{path}: " if len(results) > 1 else ""
            if v.satisfied:
                print(f"{prefix}{'yes' if v.decider == 'is_maximal' else 'satisfied'}")
            else:
                noun = "not maximal, can add" if v.decider == "is_maximal" else "NOT satisfied, witness"
                print(f"{prefix}{noun}: {v.witness!r}")
    return 0 if all(v.satisfied for _path, v in results) else 1


def _cmd_satisfies(args) -> int:
    p = _load_descriptor(args.property)
    return _run_over_languages(
        args, p, lambda desc, lang: satisfies(desc, lang, assertion_bound=args.assertion_bound)
    )


def _cmd_maximal(args) -> int:
    p = _load_descriptor(args.property)
    return _run_over_languages(
        args, p, lambda desc, lang: is_maximal(desc, lang, assertion_bound=args.assertion_bound)
    )


def _theta_spec_payload(theta: Permutation) -> dict:
    return {
        "table": dict(zip(theta.alphabet.symbols, theta.table)),
        "mode": "antimorphic" if theta.antimorphic else "morphic",
        "alphabet": "".join(theta.alphabet.symbols),
    }


def _cmd_build_property(args) -> int:
    alphabet = Alphabet.of(args.alphabet) if args.alphabet else DNA
    theta = _theta_from_spec(args.theta, alphabet)
    if args.dna:
        built = named_property(args.dna, args.variant, theta)
    else:
        e1, e2 = args.trajectory
        built = compile_trajectory_property(TrajectoryPair(e1, e2, args.strict), theta)
    short_class = {v: k for k, v in _CLASS_NAMES.items()}[built.asserted_class]
    doc = {
        "name": built.name,
        "kind": built.kind,
        "class": short_class,
        "theta": _theta_spec_payload(built.theta),
        "transducer": serialize_fado(built.transducer),
    }
    text = json.dumps(doc, indent=2)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


def _load_instance(arg: str):
    if arg.lstrip().startswith("{"):
        doc = json.loads(arg)
    else:
        with open(arg, encoding="utf-8") as fh:
            doc = json.load(fh)
    alpha, beta = doc["alpha"], doc["beta"]
    if "theta" in doc:
        return ThetaPcpInstance(tuple(alpha), tuple(beta), _theta_from_spec(doc["theta"]))
    return PcpInstance(tuple(alpha), tuple(beta))


def _cmd_pcp(args) -> int:
    inst = _load_instance(args.instance)
    if args.action == "reduce":
        if not isinstance(inst, PcpInstance):
            raise ValueError("reduce expects a classic instance")
        if not args.theta:
            raise ValueError("reduce needs --theta")
        reduced = reduce_pcp_to_theta_pcp(inst, _theta_from_spec(args.theta))
        doc = {
            "alpha": list(reduced.alpha),
            "beta": list(reduced.beta),
            "theta": _theta_spec_payload(reduced.theta),
        }
        text = json.dumps(doc, indent=2)
        if args.output:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text + "\n")
        else:
            print(text)
        return 0
    if args.action == "solve":
        seq = solve_bounded(inst, args.bound)
        if seq is None:
            print(f"no solution within {args.bound} tiles")
            return 1
        print("solution: " + ",".join(str(j) for j in seq))
        return 0
    # check
    if not args.solution:
        raise ValueError("check needs --solution")
    seq = tuple(int(part) for part in args.solution.split(","))
    result = check_solution(inst, seq)
    print(f"{'valid' if result.ok else 'invalid'}: {result.left!r} vs {result.right!r}")
    return 0 if result.ok else 1


def _cmd_transducer_check(args) -> int:
    machine = parse_fado(_machine_text(args.machine))
    if not isinstance(machine, Transducer):
        raise ValueError("expected a transducer document")
    if args.mode in ("altering", "preserving"):
        if not args.theta:
            raise ValueError(f"mode {args.mode} needs --theta")
        theta = _theta_from_spec(args.theta, machine.alphabet)
        witness = bounded_counterexample(machine, theta, args.mode, args.bound)
        if witness is None:
            print(f"no {args.mode} counterexample up to length {args.bound}")
            return 0
        print(f"counterexample: {witness!r}")
        return 1
    if args.mode == "functional":
        ok, witness = is_functional(machine)
    else:
        ok, witness = is_partial_identity(machine)
    if ok:
        print(f"machine is {args.mode.replace('identity', 'a partial identity')}")
        return 0
    print(f"not {args.mode}: {witness!r}")
    return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dnacodec",
        description="Decide transducer-described code properties of regular languages.",
    )
    parser.add_argument("--seed", type=int, default=None, help="seed for randomized helpers")
    sub = parser.add_subparsers(dest="command", required=True)

    p_sat = sub.add_parser("satisfies", help="does a language satisfy a property?")
    p_max = sub.add_parser("maximal", help="is a satisfying language maximal?")
    for p in (p_sat, p_max):
        p.add_argument("--property", required=True, help="descriptor JSON (path or inline)")
        p.add_argument("--language", required=True, help="NFA file or directory of .fa files")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument(
            "--assertion-bound",
            type=int,
            default=6,
            help="word length up to which class assertions are sanity-checked",
        )
    p_sat.set_defaults(handler=_cmd_satisfies)
    p_max.set_defaults(handler=_cmd_maximal)

    p_build = sub.add_parser("build-property", help="emit a descriptor for a built-in property")
    group = p_build.add_mutually_exclusive_group(required=True)
    group.add_argument("--dna", help="named DNA property (e.g. compliant)")
    group.add_argument("--trajectory", nargs=2, metavar=("E1", "E2"), help="trajectory regexes")
    p_build.add_argument("--variant", default="strict", help="strict|normal|weak (with --dna)")
    p_build.add_argument("--strict", action="store_true", help="strict reading (with --trajectory)")
    p_build.add_argument("--theta", default="dna-delta", help="permutation specification")
    p_build.add_argument("--alphabet", help="alphabet symbols for built-in theta names")
    p_build.add_argument("-o", "--output", help="write descriptor JSON here instead of stdout")
    p_build.set_defaults(handler=_cmd_build_property)

    p_pcp = sub.add_parser("pcp", help="correspondence-problem utilities")
    p_pcp.add_argument("action", choices=("reduce", "solve", "check"))
    p_pcp.add_argument("--instance", required=True, help="instance JSON (path or inline)")
    p_pcp.add_argument("--theta", help="permutation for reduce")
    p_pcp.add_argument("--bound", type=int, default=6, help="max tiles for solve")
    p_pcp.add_argument("--solution", help="comma-separated indices for check")
    p_pcp.add_argument("-o", "--output", help="write result JSON here")
    p_pcp.set_defaults(handler=_cmd_pcp)

    p_t = sub.add_parser("transducer", help="transducer class checks")
    t_sub = p_t.add_subparsers(dest="action", required=True)
    p_check = t_sub.add_parser("check")
    p_check.add_argument("machine", help="transducer file or inline text")
    p_check.add_argument(
        "--mode", required=True, choices=("altering", "preserving", "functional", "identity")
    )
    p_check.add_argument("--bound", type=int, default=6, help="word bound for class modes")
    p_check.add_argument("--theta", help="permutation for class modes")
    p_check.set_defaults(handler=_cmd_transducer_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.seed is not None:
        random.seed(args.seed)
    try:
        return args.handler(args)
    except DnaCodecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
