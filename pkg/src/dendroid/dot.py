"""Byte-stable DOT rendering for the graph-shaped outputs."""

from __future__ import annotations

PALETTE = ("#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#a65628")


def _q(text: str) -> str:
    return '"' + str(text).replace("\\", "\\\\").replace('"', '\\"') + '"'


def color_for(generators, name: str) -> str:
    try:
        i = list(generators).index(name)
    except ValueError:
        i = 0
    return PALETTE[i % len(PALETTE)]


def schreier_dot(ball, generators) -> str:
    from .action import format_level_word

    lines = ["digraph schreier {", "  rankdir=LR;", "  node [shape=circle, fontsize=10];"]
    for v in ball.vertices:
        lines.append(f"  {_q(format_level_word(v))};")
    for u, name, w in ball.edges:
        color = color_for(generators, name)
        lines.append(
            f"  {_q(format_level_word(u))} -> {_q(format_level_word(w))}"
            f' [label={_q(name)}, color={_q(color)}];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def core_graph_dot(certificate, graph) -> str:
    lines = ["graph core {", "  node [shape=circle, fontsize=10];"]
    witness = set()
    if certificate.kind == "cycle":
        witness = {(str(u), n, str(v)) for u, n, v in certificate.edges}
    edges = graph.edges if graph is not None else certificate.edges
    vertices = graph.vertices if graph is not None else []
    for v in vertices:
        lines.append(f"  {_q(str(v))};")
    names = graph.names if graph is not None else ()
    for u, name, v in edges:
        attrs = [f"label={_q(name)}", f"color={_q(color_for(names, name))}"]
        if (str(u), name, str(v)) in witness:
            attrs = [f"label={_q(name)}", 'color="red"', "penwidth=2"]
        lines.append(f"  {_q(str(u))} -- {_q(str(v))} [{', '.join(attrs)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def segment_dot(segment) -> str:
    lines = ["digraph segment {", "  rankdir=LR;", "  node [shape=circle, fontsize=10];"]
    w = segment.word
    for n in w.indices():
        lines.append(f"  {_q(n)} [label={_q(f'{n}:{w[n]}')}];")
    from .subshift import LETTERS

    for n, s, m in segment.edges:
        if m not in w.indices():
            continue
        attrs = f"label={_q(s)}, color={_q(color_for(LETTERS, s))}"
        lines.append(f"  {_q(n)} -> {_q(m)} [{attrs}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
