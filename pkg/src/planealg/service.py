"""Orchestration layer shared by the HTTP API and the CLI.

Every entry point resolves its input to a plane, runs the requested
pipeline, and returns a plain JSON-serializable report dict:

    {"tool": {...}, "config": {...}, "checks": [...], "summary": {...},
     "tables": {...}?}

All orderings are pinned and nothing time- or environment-dependent is
embedded, so identical config + input produce byte-identical reports.
"""

import json
from typing import Any

from . import __version__
from .collineations import Dilation, Translation, enumerate_dilations, enumerate_translations
from .errors import ClosureError, FieldError, PlaneFormatError
from .fields import gf
from .incidence import AffinePlane, load_plane
from .planes import ag2
from .reports import VerificationReport
from .skewfield import (
    brute_force_trace_preserving,
    check_commutativity,
    generate_trace_preserving,
    verify_skew_field,
)
from .trgroup import (
    build_translation_group,
    verify_abelian,
    verify_conjugation_direction,
    verify_direction_closure,
    verify_normal_in_dilations,
)


class InputError(ValueError):
    """The request cannot be carried out as stated (usage-level failure)."""


def _tool() -> dict[str, str]:
    return {"name": "planealg", "version": __version__}


def _factor_prime_power(q: int) -> tuple[int, int]:
    if q < 2:
        raise InputError(f"order must be >= 2, got {q}")
    p = 2
    while p * p <= q:
        if q % p == 0:
            k = 0
            n = q
            while n % p == 0:
                n //= p
                k += 1
            if n != 1:
                raise InputError(f"{q} is not a prime power")
            return p, k
        p += 1
    return q, 1


def build_field_plane(q: int, poly: list[int] | None = None) -> AffinePlane:
    p, k = _factor_prime_power(q)
    try:
        field = gf(p, k, poly)
    except FieldError as exc:
        raise InputError(str(exc)) from exc
    return ag2(field)


def resolve_plane(
    q: int | None = None,
    poly: list[int] | None = None,
    plane_doc: dict[str, Any] | None = None,
    source: str | None = None,
) -> tuple[AffinePlane, dict[str, Any]]:
    """Plane plus the resolved-config fragment describing where it came from."""
    if (q is None) == (plane_doc is None):
        raise InputError("provide exactly one of an order q or an incidence document")
    if plane_doc is not None:
        if poly is not None:
            raise InputError("--poly only applies together with an order q")
        try:
            plane = load_plane(plane_doc)
        except PlaneFormatError as exc:
            raise InputError(str(exc)) from exc
        return plane, {"plane": source or "inline", "q": None, "poly": None}
    assert q is not None
    plane = build_field_plane(q, poly)
    return plane, {"plane": None, "q": q, "poly": list(poly) if poly else None}


def _report(
    command: str,
    config: dict[str, Any],
    report: VerificationReport,
    summary: dict[str, Any],
    tables: dict[str, Any] | None = None,
) -> dict[str, Any]:
    out: dict[str, Any] = {
        "tool": _tool(),
        "config": {"command": command, **config},
        **report.to_dict(),
        "summary": summary,
    }
    if tables is not None:
        out["tables"] = tables
    return out


def run_build_plane(q: int, poly: list[int] | None = None) -> dict[str, Any]:
    return build_field_plane(q, poly).to_dict()


def run_check_axioms(**source: Any) -> dict[str, Any]:
    plane, config = resolve_plane(**source)
    report = plane.check_axioms()
    summary: dict[str, Any] = {
        "num_points": plane.num_points,
        "num_lines": plane.num_lines,
        "num_parallel_classes": (
            len(plane.parallel_classes) if plane.parallel_classes is not None else None
        ),
    }
    return _report("check-axioms", config, report, summary)


def _checked_plane(source: dict[str, Any]) -> tuple[AffinePlane, dict[str, Any], VerificationReport]:
    plane, config = resolve_plane(**source)
    report = plane.check_axioms()
    return plane, config, report


def _element_payload(d: Dilation | Translation) -> dict[str, Any]:
    if isinstance(d, Translation):
        return {
            "perm": list(d.perm),
            "fixed_points": list(d.dilation.fixed_points),
            "direction": d.direction,
        }
    return {"perm": list(d.perm), "fixed_points": list(d.fixed_points)}


def run_enumerate(what: str, **source: Any) -> dict[str, Any]:
    if what not in ("translations", "dilations"):
        raise InputError(f"nothing to enumerate called {what!r}")
    plane, config, axiom_report = _checked_plane(source)
    config = {"what": what, **config}
    if not axiom_report.ok:
        return _report(
            "enumerate",
            config,
            axiom_report,
            {"num_points": plane.num_points, "num_lines": plane.num_lines},
        )
    if what == "translations":
        elements: list[Any] = enumerate_translations(plane)
    else:
        elements = enumerate_dilations(plane)
    return {
        "tool": _tool(),
        "config": {"command": "enumerate", **config},
        "what": what,
        "count": len(elements),
        "elements": [_element_payload(e) for e in elements],
    }


def run_verify_group(**source: Any) -> dict[str, Any]:
    plane, config, report = _checked_plane(source)
    summary: dict[str, Any] = {"num_points": plane.num_points, "num_lines": plane.num_lines}
    if not report.ok:
        return _report("verify-group", config, report, summary)

    translations = enumerate_translations(plane)
    dilations = enumerate_dilations(plane)
    try:
        group = build_translation_group(plane, translations)
    except ClosureError as exc:
        report.add("group_structure", False, {"reason": str(exc)})
        return _report("verify-group", config, report, summary)
    report.add("group_structure", True)

    report.extend(verify_abelian(group))
    report.extend(verify_normal_in_dilations(plane, group, dilations))
    report.extend(verify_conjugation_direction(plane, group, dilations))
    report.extend(verify_direction_closure(group))
    # Transitivity is assumed, not proved, by the theory being verified;
    # it is checked per input and reported rather than taken on faith.
    missing = group.missing_pair()
    report.add(
        "point_transitivity",
        missing is None,
        None if missing is None else {"from": missing[0], "to": missing[1]},
    )
    summary.update(
        {
            "group_order": group.order,
            "num_dilations": len(dilations),
            "transitive": missing is None,
        }
    )
    return _report("verify-group", config, report, summary)


def run_verify_skewfield(
    base_point: int = 0, oracle: bool = False, **source: Any
) -> dict[str, Any]:
    plane, config, report = _checked_plane(source)
    config = {**config, "base_point": base_point, "oracle": oracle}
    summary: dict[str, Any] = {"num_points": plane.num_points, "num_lines": plane.num_lines}
    if not report.ok:
        return _report("verify-skewfield", config, report, summary)
    if not 0 <= base_point < plane.num_points:
        raise InputError(f"base point {base_point} out of range")

    translations = enumerate_translations(plane)
    group = build_translation_group(plane, translations)
    summary["group_order"] = group.order
    missing = group.missing_pair()
    report.add(
        "translation_transitivity",
        missing is None,
        None if missing is None else {"from": missing[0], "to": missing[1]},
    )
    if missing is not None:
        return _report("verify-skewfield", config, report, summary)

    algebra = generate_trace_preserving(plane, group, base_point)
    summary["num_elements"] = len(algebra)
    report.extend(verify_skew_field(plane, group, algebra))

    commutes, comm_witness = check_commutativity(group, algebra)
    summary["multiplication_commutes"] = commutes
    if comm_witness is not None:
        summary["commutativity_witness"] = comm_witness

    if oracle:
        expected = brute_force_trace_preserving(group)
        match = sorted(e.image for e in algebra.elements) == [e.image for e in expected]
        report.add(
            "oracle_equivalence",
            match,
            None
            if match
            else {
                "generated": len(algebra),
                "brute_force": len(expected),
                "reason": "generated set differs from exhaustive enumeration",
            },
        )
        summary["oracle_count"] = len(expected)

    tables = {
        "add": algebra.addition_table(group),
        "mul": algebra.multiplication_table(group),
    }
    return _report("verify-skewfield", config, report, summary, tables)


def to_json_bytes(payload: dict[str, Any]) -> bytes:
    """Canonical serialization used by both the CLI and any file output."""
    return (json.dumps(payload, sort_keys=True, indent=2) + "\n").encode("ascii")


def report_ok(payload: dict[str, Any]) -> bool:
    return payload.get("totals", {}).get("failed", 0) == 0
