import json
import logging
from typing import Any, Dict, List, Optional

from families import Catalog, FamilySpec, SubfamilyClaim, catalog_expression
from liealg import BASIS_NAMES, W, X, Y, Z, to_bracket_table
from scalars import ParseError, is_zero, mul, render, sub

# Basis brackets of the shape, in display order.
BRACKET_KEYS = (("[W,Z]", W, Z), ("[Z,X]", Z, X), ("[Z,Y]", Z, Y),
                ("[W,X]", W, X), ("[W,Y]", W, Y), ("[Y,X]", Y, X))


def _brackets(family: FamilySpec) -> Dict[str, Dict[str, str]]:
    table = to_bracket_table(family.structure_constants())
    rendered = {}
    for key, i, j in BRACKET_KEYS:
        components = {BASIS_NAMES[k]: render(value)
                      for k, value in enumerate(table.structure(i, j)) if not is_zero(value)}
        if components:
            rendered[key] = components
    return rendered


def _claim_json(family: FamilySpec, claim: SubfamilyClaim) -> Dict[str, Any]:
    return {
        "class": claim.cls,
        "outcome": claim.outcome,
        "dimension": claim.dimension(family),
        "conditions": list(claim.conditions),
        "charts": [
            {"name": chart.name, "branch": chart.branch, "params": list(chart.params),
             "substitutions": chart.substitution_map(),
             "constraints": [constraint.to_json() for constraint in chart.constraints]}
            for chart in claim.charts
        ],
        "obstruction": claim.obstruction.to_json() if claim.obstruction else None,
        "notes": list(claim.notes),
    }


def export_catalog(source: Catalog) -> List[Dict[str, Any]]:
    """The catalog in the families.json layout."""
    exported = []
    for family in source.families:
        exported.append({
            "id": family.id,
            "case": family.case_label,
            "params": list(family.param_names),
            "prose_tag": family.prose_tag,
            "constraints": [constraint.to_json() for constraint in family.constraints],
            "brackets": _brackets(family),
            "claims": [_claim_json(family, claim) for claim in source.claims_for(family.id)],
        })
    return exported


def load_golden(path: str) -> List[Dict[str, Any]]:
    with open(path, "r", encoding="utf-8") as handle:
        golden = json.load(handle)
    if not isinstance(golden, list):
        raise ValueError(f"{path}: expected a JSON array of families")
    return golden


def _same(left: str, right: str) -> bool:
    return is_zero(sub(catalog_expression(left), catalog_expression(right)))


def _same_up_to_sign(left: str, right: str) -> bool:
    a, b = catalog_expression(left), catalog_expression(right)
    return is_zero(sub(a, b)) or is_zero(sub(a, mul(-1, b)))


def _diff_family(family: FamilySpec, claims: List[SubfamilyClaim], golden: Dict[str, Any]) -> List[str]:
    label = f"g{family.id}"
    differences = []
    if golden.get("case") != family.case_label:
        differences.append(f"{label}: case {family.case_label} != golden {golden.get('case')}")
    if list(golden.get("params", [])) != list(family.param_names):
        differences.append(f"{label}: params {list(family.param_names)} != golden {golden.get('params')}")

    expected = golden.get("constraints", [])
    if len(expected) != len(family.constraints):
        differences.append(f"{label}: {len(family.constraints)} constraints, golden has {len(expected)}")
    for item in expected:
        if not any(c.relation == item.get("relation", "!=0") and _same_up_to_sign(c.expression, item["expression"])
                   for c in family.constraints):
            differences.append(f"{label}: golden constraint {item['expression']} missing")

    actual = _brackets(family)
    golden_brackets = golden.get("brackets", {})
    for key, _, _ in BRACKET_KEYS:
        for basis in BASIS_NAMES:
            mine = actual.get(key, {}).get(basis, "0")
            theirs = golden_brackets.get(key, {}).get(basis, "0")
            if not _same(mine, theirs):
                differences.append(f"{label}: {key} {basis}-component {mine} != golden {theirs}")

    golden_claims = {item.get("class"): item for item in golden.get("claims", [])}
    for claim in claims:
        item = golden_claims.get(claim.cls)
        if item is None:
            differences.append(f"{label} {claim.cls}: claim missing from golden file")
            continue
        if item.get("outcome") != claim.outcome:
            differences.append(f"{label} {claim.cls}: outcome {claim.outcome} != golden {item.get('outcome')}")
        if item.get("dimension") != claim.dimension(family):
            differences.append(f"{label} {claim.cls}: dimension {claim.dimension(family)} "
                               f"!= golden {item.get('dimension')}")
        mine_charts = sorted((chart.branch, chart.dimension) for chart in claim.charts)
        their_charts = sorted((chart.get("branch", ""), len(chart.get("params", [])))
                              for chart in item.get("charts", []))
        if mine_charts != their_charts:
            differences.append(f"{label} {claim.cls}: charts {mine_charts} != golden {their_charts}")
        golden_obstruction = (item.get("obstruction") or {}).get("expression")
        mine_obstruction = claim.obstruction.expression if claim.obstruction else None
        if (golden_obstruction is None) != (mine_obstruction is None) or (
                mine_obstruction is not None and not _same(mine_obstruction, golden_obstruction)):
            differences.append(f"{label} {claim.cls}: obstruction {mine_obstruction} "
                               f"!= golden {golden_obstruction}")
    return differences


def diff_catalog(source: Catalog, golden: List[Dict[str, Any]]) -> List[str]:
    """Semantic differences between the catalog and a golden export; empty when they agree."""
    differences = []
    by_id = {item.get("id"): item for item in golden}
    missing = sorted(set(source.ids()) - set(by_id))
    extra = sorted(set(by_id) - set(source.ids()), key=str)
    if missing:
        differences.append(f"golden file lacks families {missing}")
    if extra:
        differences.append(f"golden file has unknown families {extra}")
    for family in source.families:
        if family.id not in by_id:
            continue
        try:
            differences.extend(_diff_family(family, source.claims_for(family.id), by_id[family.id]))
        except ParseError as exc:
            differences.append(f"g{family.id}: unparsable golden expression: {exc}")
    if differences:
        logging.warning(f"[GoldenFile] {len(differences)} difference(s) against the golden file")
    else:
        logging.info("[GoldenFile] Catalog matches the golden file")
    return differences


def write_export(source: Catalog, path: Optional[str] = None) -> str:
    text = json.dumps(export_catalog(source), indent=2, ensure_ascii=False) + "\n"
    if path:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)
        logging.info(f"[GoldenFile] Exported catalog to {path}")
    return text
