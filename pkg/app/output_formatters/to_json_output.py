# filename: app/output_formatters/to_json_output.py
from typing import Any, Dict, List, Sequence

from app.linalg.abelian import FinAbGroup


def groups_to_json(groups: Sequence[FinAbGroup]) -> List[Dict[str, Any]]:
    return [group.to_json() for group in groups]


def format_homology_for_json(result: Dict[str, Any]) -> Dict[str, Any]:
    """The homology result with each group as {rank, torsion, text}."""
    return {**result, "homology": groups_to_json(result["homology"])}


def format_info_for_json(info: Dict[str, Any]) -> Dict[str, Any]:
    return {**info, "abelianization": str(info["abelianization"])}


def format_group_completion_for_json(result: Dict[str, Any]) -> Dict[str, Any]:
    return {**result, "abelianization": str(result["abelianization"])}
