"""Command-line front end.

Exit codes: 0 success, 1 validation failure (e.g. the model is not a
dendroid automaton, or a check fails), 2 usage or IO errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import automaton as automaton_io
from .action import (
    Tower,
    act,
    activity_profile,
    format_level_word,
    parse_level_word,
    product,
    schreier_ball,
    section_set,
    walk_return_stats,
)
from .exceptions import DomainError, FormatError, RadiusError
from .models import MODELS, get_model
from .subshift import (
    check_faithful,
    schreier_segment,
    subshift_perm,
    universal_word,
)
from .translation import infinite_generators, support, translation_vector
from .words import SignedWord

USAGE_ERROR = 2
CHECK_FAILED = 1


def _resolve_model(name: str):
    if name in MODELS:
        return get_model(name)
    return automaton_io.load(name)


def _tower(aut) -> Tower:
    if aut.input_states == aut.output_states:
        return Tower.repeat(aut)
    return Tower((aut,))


def _emit_json(payload) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def cmd_validate(args) -> int:
    aut = _resolve_model(args.model)
    report = aut.validate_dendroid()
    if args.json:
        _emit_json(report.to_json_dict())
    else:
        print(f"model: {args.model}")
        print(f"condition1 (letter permutations form a dendroid family): {_pf(report.condition1)}")
        print(f"condition2 (every output state restricted to exactly once): {_pf(report.condition2)}")
        print(f"condition3 (nontrivial restrictions: finite orbits, one per orbit): {_pf(report.condition3)}")
        for witness in report.witnesses:
            print(f"  - {witness}")
        print(f"dendroid: {'yes' if report.is_dendroid else 'no'}")
    return 0 if report.is_dendroid else CHECK_FAILED


def _pf(flag: bool) -> str:
    return "PASS" if flag else "FAIL"


def cmd_act(args) -> int:
    aut = _resolve_model(args.model)
    tower = _tower(aut)
    g = SignedWord.parse(args.group_word)
    v = parse_level_word(args.word)
    image, section = act(tower, g, v)
    if args.json:
        _emit_json({"image": format_level_word(image), "section": str(section)})
    else:
        print(f"{format_level_word(image)} | section: {section}")
    return 0


def cmd_sections(args) -> int:
    aut = _resolve_model(args.model)
    tower = _tower(aut)
    g = SignedWord.parse(args.group_word)
    found, saturated = section_set(tower, g, args.level)
    names = sorted(str(w) for w in found)
    if args.json:
        _emit_json({"sections": names, "saturated": saturated})
    else:
        print(f"sections (depth {args.level}): {', '.join(names)}")
        print(f"saturated: {'yes' if saturated else 'no'}")
    return 0


def cmd_activity(args) -> int:
    aut = _resolve_model(args.model)
    tower = _tower(aut)
    counts = activity_profile(tower, args.state, args.level)
    if args.json:
        _emit_json({"state": args.state, "counts": counts})
    else:
        print(f"activity({args.state}, 1..{args.level}) = {' '.join(map(str, counts))}")
    return 0


def cmd_product(args) -> int:
    aut1 = _resolve_model(args.model)
    aut2 = _resolve_model(args.model2 or args.model)
    prod = product(aut1, aut2)
    pair = parse_level_word(args.pair)
    if len(pair) != 2:
        raise DomainError("--pair needs exactly two letters, e.g. '*,z:0'")
    state = None if args.state == "Id" else args.state
    (x2, y2), out = prod.step(state, (pair[0], pair[1]))
    out_name = "Id" if out is None else out
    if args.json:
        _emit_json({"image": f"{x2},{y2}", "section": out_name})
    else:
        print(f"{x2},{y2} | section: {out_name}")
    return 0


def cmd_schreier(args) -> int:
    aut = _resolve_model(args.model)
    tower = _tower(aut)
    center = parse_level_word(args.center)
    if args.level is not None and args.level != len(center):
        raise DomainError(f"--level {args.level} does not match the center word length {len(center)}")
    ball = schreier_ball(tower, center, args.radius)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(ball.to_dot(tower.generators()))
    if args.json:
        _emit_json(ball.to_json_dict())
    else:
        print(f"center: {format_level_word(center)}")
        print(f"radius: {args.radius}")
        print(f"vertices: {len(ball.vertices)}")
        print(f"edges: {len(ball.edges)}")
        for v in ball.vertices:
            print(f"  {format_level_word(v)}")
    return 0


def cmd_walk(args) -> int:
    aut = _resolve_model(args.model)
    tower = _tower(aut)
    start = parse_level_word(args.center)
    if args.level is not None and args.level != len(start):
        raise DomainError(f"--level {args.level} does not match the start word length {len(start)}")
    stats = walk_return_stats(tower, start, args.steps, args.trials, args.seed)
    if args.json:
        _emit_json(stats.to_json_dict())
    else:
        for t in sorted(stats.return_probability):
            print(f"p_hat[{t}] = {stats.return_probability[t]:.6f}")
        print(f"(trials={stats.trials}, seed={stats.seed})")
    return 0


def cmd_phi(args) -> int:
    aut = _resolve_model(args.model)
    w = SignedWord.parse(args.group_word)
    vec = translation_vector(aut, w)
    order = infinite_generators(aut)
    if args.json:
        _emit_json({"phi": {j: vec[j] for j in order}})
    else:
        if not order:
            print("phi: () (no infinite-orbit generators)")
        else:
            inner = ", ".join(f"{j}={vec[j]:+d}" for j in order)
            print(f"phi: ({inner})")
    return 0


def cmd_support(args) -> int:
    aut = _resolve_model(args.model)
    w = SignedWord.parse(args.group_word)
    result = support(aut, w, args.radius)
    if args.json:
        from .translation import FiniteSupport

        if isinstance(result, FiniteSupport):
            _emit_json({"kind": "finite", "moved": [str(x) for x in result.moved]})
        else:
            _emit_json({"kind": "tail", "ray": result.ray, "shift": result.shift})
    else:
        print(str(result))
    return 0


def cmd_appendix(args) -> int:
    w = universal_word(args.max_len, args.margin)
    involution_ok = True
    for s in ("a", "b", "c"):
        p = subshift_perm(s, w)
        for n in w.indices():
            m = p.images[n]
            if n in p.unreliable or m not in p.images or m in p.unreliable:
                continue
            if p.images[m] != n:
                involution_ok = False
    report = check_faithful(args.max_len, w)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(schreier_segment(w).to_dot())
    if args.json:
        _emit_json(
            {
                "window": [w.lo, w.hi],
                "margin": w.margin,
                "involution": involution_ok,
                "faithful_checked": report.checked,
                "faithful_failures": report.failures,
            }
        )
    else:
        print(f"universal word: {len(w)} letters on [{w.lo}, {w.hi}], margin {w.margin}")
        print(f"involution: {_pf(involution_ok)}")
        print(f"faithful up to length {args.max_len}: {_pf(report.ok)} ({report.checked} words)")
        for v in report.failures:
            print(f"  - word {v} acts trivially on the window")
    return 0 if involution_ok and report.ok else CHECK_FAILED


def cmd_examples(args) -> int:
    if args.json:
        _emit_json({name: desc for name, (_, desc) in sorted(MODELS.items())})
    else:
        width = max(len(name) for name in MODELS)
        for name in sorted(MODELS):
            _, desc = MODELS[name]
            print(f"{name:<{width}}  {desc}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dendroid",
        description="dendroid group automata: validation, actions, graphs, walks",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, model=True):
        if model:
            p.add_argument("--model", required=True, help="built-in name (example, odometer) or file path")
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("validate", help="run the dendroid-automaton checks")
    common(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("act", help="act by a signed word on a level word")
    common(p)
    p.add_argument("-g", "--group-word", required=True, help="signed word, e.g. 'g,h^-1'")
    p.add_argument("-w", "--word", required=True, help="level word, e.g. '*,z:0'")
    p.set_defaults(func=cmd_act)

    p = sub.add_parser("sections", help="distinct sections of a word up to a depth")
    common(p)
    p.add_argument("-g", "--group-word", required=True)
    p.add_argument("--level", type=int, default=6)
    p.set_defaults(func=cmd_sections)

    p = sub.add_parser("activity", help="per-level count of nontrivial sections of a state")
    common(p)
    p.add_argument("--state", required=True)
    p.add_argument("--level", type=int, default=12)
    p.set_defaults(func=cmd_activity)

    p = sub.add_parser("product", help="one step of the product automaton on a letter pair")
    common(p)
    p.add_argument("--model2", help="second factor (defaults to --model)")
    p.add_argument("--state", required=True, help="input state of the first factor, or Id")
    p.add_argument("--pair", required=True, help="pair letter, e.g. '*,z:0'")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("schreier", help="ball of the orbit graph around a level word")
    common(p)
    p.add_argument("--center", required=True)
    p.add_argument("--level", type=int)
    p.add_argument("--radius", type=int, required=True)
    p.add_argument("--dot", help="write the ball as DOT to this path")
    p.set_defaults(func=cmd_schreier)

    p = sub.add_parser("walk", help="Monte-Carlo return probabilities of the simple walk")
    common(p)
    p.add_argument("--center", required=True, help="start word")
    p.add_argument("--level", type=int)
    p.add_argument("--steps", type=int, default=8)
    p.add_argument("--trials", type=int, default=10000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_walk)

    p = sub.add_parser("phi", help="net-exponent vector over infinite-orbit generators")
    common(p)
    p.add_argument("-g", "--group-word", required=True)
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("support", help="finite support or tail shift of a word at level 1")
    common(p)
    p.add_argument("-g", "--group-word", required=True)
    p.add_argument("--radius", type=int)
    p.set_defaults(func=cmd_support)

    p = sub.add_parser("appendix", help="three-involution line action: build and check")
    p.add_argument("--max-len", type=int, default=4)
    p.add_argument("--margin", type=int)
    p.add_argument("--dot", help="write the window orbit graph as DOT to this path")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_appendix)

    p = sub.add_parser("examples", help="list built-in models")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_examples)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DomainError, RadiusError, FormatError, ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
