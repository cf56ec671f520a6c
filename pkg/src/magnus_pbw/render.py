"""Text and LaTeX renderers; output is deterministic (canonical term order)."""
from __future__ import annotations

from fractions import Fraction
from typing import Mapping


def _name(v: int, names: Mapping[int, str] | None) -> str:
    if names and v in names:
        return names[v]
    return f"X{v}"


def _tex_name(v: int, names: Mapping[int, str] | None) -> str:
    if names and v in names:
        return names[v]
    return f"X_{{{v}}}"


def tree_to_text(tree, names=None) -> str:
    if isinstance(tree, int):
        return _name(tree, names)
    return f"[{tree_to_text(tree[0], names)},{tree_to_text(tree[1], names)}]"


def tree_to_latex(tree, names=None) -> str:
    if isinstance(tree, int):
        return _tex_name(tree, names)
    return f"[{tree_to_latex(tree[0], names)},{tree_to_latex(tree[1], names)}]"


def _join(parts: list[tuple[Fraction, str]], fmt_coeff) -> str:
    if not parts:
        return "0"
    out = []
    for i, (c, body) in enumerate(parts):
        sign = "-" if c < 0 else "+"
        mag = fmt_coeff(abs(c))
        if not body:
            term = fmt_coeff(abs(c)) or "1"
        else:
            term = f"{mag} {body}" if mag else body
        if i == 0:
            out.append(f"-{term}" if c < 0 else term)
        else:
            out.append(f" {sign} {term}")
    return "".join(out)


def _text_coeff(c: Fraction) -> str:
    return "" if c == 1 else str(c)


def _tex_coeff(c: Fraction) -> str:
    if c == 1:
        return ""
    if c.denominator == 1:
        return str(c.numerator)
    return f"\\frac{{{c.numerator}}}{{{c.denominator}}}"


def lie_to_text(p, names=None) -> str:
    return _join([(c, tree_to_text(t, names)) for t, c in p.items()], _text_coeff)


def lie_to_latex(p, names=None) -> str:
    return _join([(c, tree_to_latex(t, names)) for t, c in p.items()], _tex_coeff)


def nc_to_text(p, names=None) -> str:
    parts = []
    for w, c in p.items():
        parts.append((c, "*".join(_name(v, names) for v in w)))
    return _join(parts, _text_coeff) if parts else "0"


def sym_to_text(t, item_text=None) -> str:
    item_text = item_text or tree_to_text
    parts = []
    for key, c in t.items():
        parts.append((c, " . ".join(item_text(x) for x in key)))
    return _join(parts, _text_coeff)


def fraction_text(c: Fraction) -> str:
    return str(c)


def fraction_latex(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    sign = "-" if c < 0 else ""
    return f"{sign}\\dfrac{{{abs(c.numerator)}}}{{{c.denominator}}}"


def beta_table_latex(values: list[Fraction]) -> str:
    cols = "c" * len(values)
    head = "&".join(f"s={s}" if s == 0 else str(s) for s in range(len(values)))
    row = "&".join(fraction_latex(v) for v in values)
    return (
        f"\\begin{{array}}{{c|{cols}}}\n"
        f"\\beta_{{s}}&{head}\\\\ \\hline\n"
        f"&{row}\n"
        f"\\end{{array}}"
    )


def alpha_table_latex(matrix: list[list[Fraction]]) -> str:
    width = len(matrix[0]) if matrix else 0
    head = "&".join(f"r={r}" if r == 0 else str(r) for r in range(width))
    lines = [f"\\begin{{array}}{{c|{'c' * width}}}", f"\\alpha_{{s,r}}&{head}\\\\ \\hline"]
    for s, row in enumerate(matrix):
        label = f"s={s}" if s == 0 else str(s)
        lines.append(f"{label}&" + "&".join(fraction_latex(v) for v in row) + "\\\\")
    lines.append("\\end{array}")
    return "\n".join(lines)
