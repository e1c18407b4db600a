# filename: app/output_formatters/to_plain_text.py
from typing import Any, Dict, List, Sequence

from app.linalg.abelian import FinAbGroup


def _elements(values: Sequence[int]) -> str:
    return "{" + ", ".join(str(v) for v in values) + "}"


def format_homology(groups: Sequence[FinAbGroup]) -> str:
    """H_1..H_m on one line: '0, Z, C_2^2'."""
    return ", ".join(str(group) for group in groups)


def format_homology_report(result: Dict[str, Any]) -> str:
    lines = [format_homology(result["homology"])]
    for dimension, group in enumerate(result["homology"], start=1):
        lines.append(f"H_{dimension} = {group}")
    lines.append(f"route: {result['route']}")
    if result["method"] == "auto":
        lines.append(f"checked against bar complex: {'yes' if result['oracle_checked'] else 'no'}")
    return "\n".join(lines)


def format_info(info: Dict[str, Any]) -> str:
    ideal = info["min_ideal"]
    identity = info["identity"]
    zero = info["zero"]
    lines = [
        f"order: {info['order']}",
        f"identity: {identity if identity is not None else 'none'}",
        f"idempotents: {_elements(info['idempotents'])}",
        f"commutative: {'yes' if info['commutative'] else 'no'}",
        f"regular: {'yes' if info['regular'] else 'no'}",
        f"left zeros: {_elements(info['left_zeros'])}",
        f"right zeros: {_elements(info['right_zeros'])}",
        f"zero: {zero if zero is not None else 'none'}",
        f"minimal ideal: order {ideal['order']} = |I| {len(ideal['I'])} x |H| {len(ideal['H'])} x |J| {len(ideal['J'])}",
        f"  I = {_elements(ideal['I'])}",
        f"  H = {_elements(ideal['H'])}",
        f"  J = {_elements(ideal['J'])}",
        "  sandwich (j * i for j in J, i in I):",
        *(f"    {' '.join(str(h) for h in row)}" for row in ideal["sandwich"]),
        f"K-thin: {'yes' if info['k_thin'] else 'no'}",
        f"group completion order: {info['group_completion_order']}",
        f"abelianized group completion: {info['abelianization']}",
        f"homology route: {info['route']}",
    ]
    return "\n".join(lines)


def format_group_completion(result: Dict[str, Any]) -> str:
    lines = [
        f"order: {result['order']}",
        f"representatives: {_elements(result['representatives'])}",
        "rho: " + " ".join(str(r) for r in result["rho"]),
        f"abelianization: {result['abelianization']}",
        "table:",
    ]
    lines.extend(" ".join(str(v) for v in row) for row in result["table"])
    return "\n".join(lines)


def format_resolution_levels(levels: List[Dict[str, Any]]) -> str:
    lines = []
    for entry in levels:
        lines.append(
            f"level {entry['level']}: {_elements(entry['domain'])} -> {_elements(entry['codomain'])}"
        )
        for row in entry["multipliers"]:
            lines.append("  [ " + " | ".join(row) + " ]")
    return "\n".join(lines)
