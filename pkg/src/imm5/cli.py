"""Command-line surface and file formats.

Subcommands: ``analyze``, ``invariant``, ``act``, ``embeddings`` and
``verify``.  Manifolds enter as JSON files (or built-in fixture names)
holding a linking matrix and, optionally, base signatures of spin
fillings per Wu coset; Seifert bookkeeping enters as JSON record files.
Integers larger than 53 bits are interchanged as exact decimal strings.

Exit codes: 0 all checks pass, 1 an identity fails, 2 malformed input.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from dataclasses import dataclass
from math import gcd

from .embeddings import (
    SpinBoundarySignatures,
    embedding_classes,
    is_embedding_class,
)
from .errors import (
    CosetUncovered,
    HypothesisViolated,
    Imm5Error,
    MissingData,
    ParityError,
    ParityViolation,
    ParseError,
    WuMismatch,
)
from .fixtures import manifold_json
from .intlinalg import IntSymMatrix
from .invariants import (
    ImmersionDoubleData,
    RegHomotopyClass,
    SeifertFillingR5,
    SeifertFillingR6,
    SmaleClass,
    connected_sum_act,
    i_a,
    i_b,
)
from .surgery import (
    Gamma2Element,
    HomologyProfile,
    SurgeryPresentation,
    gamma2_elements,
    homology_profile,
)
from .verify import (
    ClosedMapRecordR5,
    ClosedMapRecordR6,
    PartitionRecord,
    check_closed_r5,
    check_closed_r6,
    check_cusp_residue,
    check_partition_divisibility,
    check_spin_even_components,
    run_oracles,
    run_reproductions,
)

SEED_ENV = "IMM5_SEED"
INT_STRING_BOUND = 2 ** 53
_INT_RE = re.compile(r"-?[0-9]+$")


# ----------------------------------------------------------------------
# Exact-integer JSON helpers
# ----------------------------------------------------------------------

def to_jsonable(obj):
    """Recursively encode a report; huge integers become decimal strings."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return obj if abs(obj) <= INT_STRING_BOUND else str(obj)
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(x) for x in obj]
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    raise TypeError(f"cannot encode {type(obj).__name__}")


def from_jsonable(obj):
    """Inverse of to_jsonable: decimal strings beyond 53 bits become ints."""
    if isinstance(obj, str) and _INT_RE.match(obj) and abs(int(obj)) > INT_STRING_BOUND:
        return int(obj)
    if isinstance(obj, list):
        return [from_jsonable(x) for x in obj]
    if isinstance(obj, dict):
        return {k: from_jsonable(v) for k, v in obj.items()}
    return obj


def _int(value, where: str) -> int:
    if isinstance(value, bool):
        raise ParseError(f"{where}: expected an integer, got a boolean")
    if isinstance(value, int):
        return value
    if isinstance(value, str) and _INT_RE.match(value.strip()):
        return int(value.strip())
    raise ParseError(f"{where}: expected an integer, got {value!r}")


# ----------------------------------------------------------------------
# ManifoldFile
# ----------------------------------------------------------------------

@dataclass
class ManifoldData:
    presentation: SurgeryPresentation
    profile: HomologyProfile
    signatures: SpinBoundarySignatures | None


def parse_wu_coords(text: str, alpha: int) -> Gamma2Element:
    """Parse Wu-coset coordinates: a bit string of length alpha.

    The trivial coset of an alpha = 0 manifold may be written "0" or
    left empty.
    """
    cleaned = str(text).strip().strip("()").replace(",", "").replace(" ", "")
    if alpha == 0:
        if cleaned in ("", "0"):
            return Gamma2Element(())
        raise ParseError(f"Wu coordinates {text!r} invalid: Gamma2 is trivial here")
    if len(cleaned) != alpha or any(ch not in "01" for ch in cleaned):
        raise ParseError(
            f"Wu coordinates {text!r} invalid: expected {alpha} bits"
        )
    return Gamma2Element(tuple(int(ch) for ch in cleaned))


def parse_manifold(data: dict) -> ManifoldData:
    if not isinstance(data, dict):
        raise ParseError("manifold file must hold a JSON object")
    name = str(data.get("name", "unnamed"))
    matrix = data.get("linking_matrix")
    if not isinstance(matrix, list):
        raise ParseError("manifold file needs a 'linking_matrix' list of rows")
    rows = []
    for r, row in enumerate(matrix):
        if not isinstance(row, list):
            raise ParseError(f"linking_matrix row {r} is not a list")
        rows.append([_int(x, f"linking_matrix[{r}]") for x in row])
    pres = SurgeryPresentation(name, IntSymMatrix(rows))
    profile = homology_profile(pres)

    signatures = None
    block = data.get("spin_boundary_signatures")
    if block is not None:
        if not isinstance(block, dict):
            raise ParseError("'spin_boundary_signatures' must map cosets to lists")
        per_coset: dict[Gamma2Element, frozenset[int]] = {}
        for key, values in block.items():
            coset = parse_wu_coords(key, profile.alpha)
            if not isinstance(values, list):
                raise ParseError(f"signatures for coset {key!r} must be a list")
            sigs = frozenset(_int(v, f"signature for coset {key!r}") for v in values)
            for s0 in sigs:
                if (s0 - profile.alpha) % 2:
                    raise ParityViolation(
                        f"base signature {s0} for coset {key!r} has the wrong "
                        f"parity (alpha = {profile.alpha})"
                    )
            per_coset[coset] = per_coset.get(coset, frozenset()) | sigs
        signatures = SpinBoundarySignatures(per_coset)
    return ManifoldData(pres, profile, signatures)


def load_manifold(ref, base_dir: str | None = None) -> ManifoldData:
    """Load a manifold from an inline dict, a JSON path, or a fixture name."""
    if isinstance(ref, dict):
        return parse_manifold(ref)
    path = ref if base_dir is None else os.path.join(base_dir, ref)
    if os.path.exists(path):
        try:
            with open(path, "r", encoding="utf-8") as fh:
                data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(f"{ref}: not valid JSON ({exc})") from exc
        return parse_manifold(data)
    try:
        return parse_manifold(manifold_json(str(ref)))
    except KeyError:
        raise ParseError(
            f"{ref!r} is neither an existing file nor a built-in fixture"
        ) from None


# ----------------------------------------------------------------------
# SeifertDataFile
# ----------------------------------------------------------------------

@dataclass
class SeifertData:
    manifold: ManifoldData | None
    fillings_r5: list[tuple[str, SeifertFillingR5]]
    fillings_r6: list[tuple[str, SeifertFillingR6]]
    double_data: ImmersionDoubleData | None
    closed_r5: list[tuple[str, ClosedMapRecordR5]]
    closed_r6: list[tuple[str, ClosedMapRecordR6]]
    partitions: list[tuple[str, PartitionRecord, bool]]


def _record_id(record: dict, prefix: str, index: int) -> str:
    return str(record.get("id", f"{prefix}[{index}]"))


def _opt_tuple(record: dict, key: str, where: str) -> tuple[int, ...] | None:
    if key not in record or record[key] is None:
        return None
    values = record[key]
    if not isinstance(values, list):
        raise ParseError(f"{where}: {key} must be a list")
    return tuple(_int(v, f"{where}.{key}") for v in values)


def parse_seifert_file(data: dict, base_dir: str | None = None) -> SeifertData:
    if not isinstance(data, dict):
        raise ParseError("record file must hold a JSON object")

    manifold = None
    if "manifold" in data:
        manifold = load_manifold(data["manifold"], base_dir)

    fillings_r5 = []
    for k, rec in enumerate(data.get("fillings_r5", [])):
        rid = _record_id(rec, "r5", k)
        try:
            fillings_r5.append((rid, SeifertFillingR5(
                _int(rec["sigma"], rid),
                _int(rec["cusps_algebraic"], rid),
                _opt_tuple(rec, "cusps_per_component", rid),
            )))
        except (KeyError, ValueError) as exc:
            raise ParseError(f"{rid}: {exc}") from exc

    fillings_r6 = []
    for k, rec in enumerate(data.get("fillings_r6", [])):
        rid = _record_id(rec, "r6", k)
        try:
            fillings_r6.append((rid, SeifertFillingR6(
                _int(rec["sigma"], rid),
                _int(rec["triple_points"], rid),
                _int(rec["singular_linking"], rid),
            )))
        except KeyError as exc:
            raise ParseError(f"{rid}: missing field {exc}") from exc

    double_data = None
    if "double_data" in data and data["double_data"] is not None:
        rec = data["double_data"]
        double_data = ImmersionDoubleData(_int(rec["big_l"], "double_data"))

    closed_r5 = []
    for k, rec in enumerate(data.get("closed_records_r5", [])):
        rid = _record_id(rec, "closed_r5", k)
        try:
            closed_r5.append((rid, ClosedMapRecordR5(
                _int(rec["sigma"], rid),
                _int(rec["cusps_algebraic"], rid),
                _opt_tuple(rec, "cusps_per_component", rid),
                bool(rec.get("is_spin", False)),
            )))
        except (KeyError, ValueError) as exc:
            raise ParseError(f"{rid}: {exc}") from exc

    closed_r6 = []
    for k, rec in enumerate(data.get("closed_records_r6", [])):
        rid = _record_id(rec, "closed_r6", k)
        try:
            closed_r6.append((rid, ClosedMapRecordR6(
                _int(rec["sigma"], rid),
                _int(rec["triple_points"], rid),
                _int(rec["singular_linking"], rid),
            )))
        except KeyError as exc:
            raise ParseError(f"{rid}: missing field {exc}") from exc

    partitions = []
    for k, rec in enumerate(data.get("partition_records", [])):
        rid = _record_id(rec, "partition", k)
        cusps = rec.get("part_cusps")
        if not (isinstance(cusps, list) and len(cusps) == 2):
            raise ParseError(f"{rid}: part_cusps must be a pair")
        applies = (bool(rec.get("ambient_spin", False))
                   and bool(rec.get("separator_null_homologous", False))
                   and bool(rec.get("separator_avoids_double_points", False)))
        partitions.append((rid, PartitionRecord(
            (_int(cusps[0], rid), _int(cusps[1], rid))), applies))

    if (fillings_r5 or fillings_r6) and manifold is None:
        raise ParseError("record file with fillings needs a 'manifold' reference")

    return SeifertData(manifold, fillings_r5, fillings_r6, double_data,
                       closed_r5, closed_r6, partitions)


def load_records(path: str) -> SeifertData:
    if not os.path.exists(path):
        raise ParseError(f"{path!r}: no such file")
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: not valid JSON ({exc})") from exc
    base_dir = os.path.dirname(os.path.abspath(path))
    return parse_seifert_file(data, base_dir)


# ----------------------------------------------------------------------
# Reports
# ----------------------------------------------------------------------

def _group_string(alpha: int) -> str:
    return " × ".join(["ℤ₂"] * alpha + ["ℤ"])


def describe_offsets(offsets: frozenset[int]) -> str:
    """Render an offset set mod 24 as a union of progressions."""
    if not offsets:
        return "∅"
    g = gcd(24, *offsets)
    if offsets == frozenset(range(0, 24, g)):
        return f"{g}ℤ"
    return " ∪ ".join(
        ("24ℤ" if r == 0 else f"(24ℤ + {r})") for r in sorted(offsets)
    )


def analyze_report(m: ManifoldData) -> dict:
    h = m.profile
    return {
        "command": "analyze",
        "name": m.presentation.name,
        "betti1": h.betti1,
        "torsion_factors": list(h.torsion_factors),
        "alpha": h.alpha,
        "gamma2_order": h.gamma2_order,
        "spin_structures": h.spin_structure_count,
        "wu_components": [str(c) for c in gamma2_elements(h)],
        "classes": _group_string(h.alpha),
    }


def render_analyze(rep: dict) -> str:
    torsion = ", ".join(str(d) for d in rep["torsion_factors"]) or "(none)"
    gamma_note = "  (Γ₂ = 0)" if rep["alpha"] == 0 else ""
    lines = [
        f"manifold: {rep['name']}",
        f"β₁ = {rep['betti1']}",
        f"torsion invariant factors: {torsion}",
        f"α = {rep['alpha']}",
        f"|Γ₂| = {rep['gamma2_order']}{gamma_note}",
        f"spin structures: {rep['spin_structures']}",
        f"Imm[M³,ℝ⁵]₀ ≅ Γ₂ × ℤ "
        f"≅ {rep['classes']}",
        f"Wu components: {', '.join(rep['wu_components'])}",
    ]
    return "\n".join(lines)


def invariant_report(sd: SeifertData, want_ia: bool, want_ib: bool) -> dict:
    if sd.manifold is None:
        raise ParseError("record file needs a 'manifold' reference")
    h = sd.manifold.profile
    ia_values = []
    if want_ia:
        if not sd.fillings_r5:
            raise ParseError("no 5-space fillings in the record file")
        for rid, rec in sd.fillings_r5:
            try:
                ia_values.append({"id": rid, "value": i_a(rec, h)})
            except ParityError as exc:
                raise ParityError(f"record {rid}: {exc}") from exc
    ib_values = []
    if want_ib:
        if not sd.fillings_r6:
            raise ParseError("no 6-space fillings in the record file")
        if sd.double_data is None:
            raise ParseError("i_b needs the double_data block (big_l)")
        for rid, rec in sd.fillings_r6:
            try:
                ib_values.append({"id": rid, "value": i_b(rec, sd.double_data, h)})
            except ParityError as exc:
                raise ParityError(f"record {rid}: {exc}") from exc

    values = [e["value"] for e in ia_values] + [e["value"] for e in ib_values]
    coincide = len(set(values)) <= 1
    residues = None
    residues_ok = True
    if sd.double_data is not None and sd.fillings_r5:
        residues = []
        for rid, rec in sd.fillings_r5:
            ok = check_cusp_residue(rec, sd.double_data)
            residues.append({"id": rid,
                             "cusps_mod_3": rec.cusps_algebraic % 3,
                             "big_l_mod_3": sd.double_data.big_l % 3,
                             "ok": ok})
            residues_ok = residues_ok and ok
    return {
        "command": "invariant",
        "name": sd.manifold.presentation.name,
        "alpha": h.alpha,
        "i_a": ia_values,
        "i_b": ib_values,
        "coincide": coincide,
        "cusp_residues": residues,
        "passed": coincide and residues_ok,
    }


def render_invariant(rep: dict) -> str:
    lines = [f"manifold: {rep['name']} (α = {rep['alpha']})"]
    for entry in rep["i_a"]:
        lines.append(f"i_a[{entry['id']}] = {entry['value']}")
    for entry in rep["i_b"]:
        lines.append(f"i_b[{entry['id']}] = {entry['value']}")
    if rep["i_a"] or rep["i_b"]:
        mark = "✓" if rep["coincide"] else "✗"
        lines.append(f"all routes agree: {mark}")
    if rep["cusp_residues"] is not None:
        for entry in rep["cusp_residues"]:
            mark = "✓" if entry["ok"] else "✗"
            lines.append(
                f"cusp residue [{entry['id']}]: #cusps ≡ "
                f"{entry['cusps_mod_3']}, L ≡ {entry['big_l_mod_3']} "
                f"(mod 3) {mark}")
    return "\n".join(lines)


def act_report(m: ManifoldData, wu: Gamma2Element, i: int, omega: int) -> dict:
    start = RegHomotopyClass(wu, i)
    result = connected_sum_act(start, SmaleClass(omega))
    verdict = None
    if m.signatures is not None:
        classes = embedding_classes(m.profile, m.signatures)
        verdict = is_embedding_class(result, classes)
    return {
        "command": "act",
        "name": m.presentation.name,
        "wu": str(wu),
        "i": i,
        "omega": omega,
        "result_i": result.i,
        "embedding_class": verdict,
    }


def render_act(rep: dict) -> str:
    verdict = {True: "yes", False: "no", None: "unknown (no signature data)"}
    return "\n".join([
        f"({rep['wu']}, {rep['i']}) ♯ Ω={rep['omega']} → "
        f"({rep['wu']}, {rep['result_i']})",
        f"embedding class: {verdict[rep['embedding_class']]}",
    ])


def embeddings_report(m: ManifoldData) -> dict:
    if m.signatures is None:
        raise CosetUncovered(
            "manifold file carries no spin_boundary_signatures block")
    classes = embedding_classes(m.profile, m.signatures)
    cosets = []
    for coset in gamma2_elements(m.profile):
        offsets = classes.offsets_mod_24[coset]
        cosets.append({
            "coset": str(coset),
            "offsets_mod_24": sorted(offsets),
            "description": describe_offsets(offsets),
        })
    return {
        "command": "embeddings",
        "name": m.presentation.name,
        "alpha": m.profile.alpha,
        "cosets": cosets,
    }


def render_embeddings(rep: dict) -> str:
    lines = [f"manifold: {rep['name']} (α = {rep['alpha']})"]
    for entry in rep["cosets"]:
        offs = ", ".join(str(o) for o in entry["offsets_mod_24"])
        lines.append(
            f"coset {entry['coset']}: offsets mod 24 = {{{offs}}} "
            f"→ i ∈ {entry['description']}")
    return "\n".join(lines)


def verify_file_report(sd: SeifertData) -> dict:
    checks = []

    def add(name: str, passed: bool, detail: str = "") -> None:
        checks.append({"name": name, "passed": passed, "detail": detail})

    for rid, rec in sd.closed_r5:
        add(f"closed 5-space identity [{rid}]", check_closed_r5(rec),
            f"#cusps + 3σ = {rec.cusps_algebraic + 3 * rec.sigma}")
        if rec.is_spin and rec.cusps_per_component is not None:
            add(f"even cusps per component [{rid}]",
                check_spin_even_components(rec),
                str(list(rec.cusps_per_component)))
    for rid, rec in sd.closed_r6:
        add(f"closed 6-space identity [{rid}]", check_closed_r6(rec),
            f"σ - l + t = "
            f"{rec.sigma - rec.singular_linking + rec.triple_points}")
    for rid, rec, applies in sd.partitions:
        if applies:
            add(f"partition divisibility by 6 [{rid}]",
                check_partition_divisibility(rec), str(list(rec.part_cusps)))
        else:
            add(f"partition divisibility by 6 [{rid}]", True,
                "skipped: precondition flags not set")

    if sd.manifold is not None and (sd.fillings_r5 or sd.fillings_r6):
        h = sd.manifold.profile
        values = {}
        try:
            for rid, rec in sd.fillings_r5:
                values[f"i_a[{rid}]"] = i_a(rec, h)
            if sd.double_data is not None:
                for rid, rec in sd.fillings_r6:
                    values[f"i_b[{rid}]"] = i_b(rec, sd.double_data, h)
        except ParityError as exc:
            add("invariant parity", False, str(exc))
            values = {}
        if values:
            distinct = set(values.values())
            add("all filling routes give one invariant", len(distinct) <= 1,
                ", ".join(f"{k} = {v}" for k, v in values.items()))
        if sd.double_data is not None:
            for rid, rec in sd.fillings_r5:
                add(f"cusp residue mod 3 [{rid}]",
                    check_cusp_residue(rec, sd.double_data),
                    f"#cusps = {rec.cusps_algebraic}, L = {sd.double_data.big_l}")

    passed = all(c["passed"] for c in checks)
    return {"command": "verify", "mode": "records", "checks": checks,
            "passed": passed}


def corollaries_report() -> dict:
    reports = run_reproductions()
    return {
        "command": "verify",
        "mode": "corollaries",
        "checks": [{"name": r.name, "passed": r.passed, "lines": list(r.lines)}
                   for r in reports],
        "passed": all(r.passed for r in reports),
    }


def oracles_report(seed: int, trials: int = 500) -> dict:
    reports = run_oracles(seed=seed, trials=trials)
    return {
        "command": "verify",
        "mode": "oracles",
        "seed": seed,
        "reports": [{"name": r.name, "trials": r.trials,
                     "failures": list(r.failures), "passed": r.passed}
                    for r in reports],
        "passed": all(r.passed for r in reports),
    }


def render_verify(rep: dict) -> str:
    lines = []
    for sub in rep["sections"] if "sections" in rep else [rep]:
        if sub["mode"] == "records":
            for check in sub["checks"]:
                mark = "✓" if check["passed"] else "✗"
                detail = f"  ({check['detail']})" if check["detail"] else ""
                lines.append(f"{check['name']}: {mark}{detail}")
        elif sub["mode"] == "corollaries":
            for check in sub["checks"]:
                lines.extend(check["lines"])
        elif sub["mode"] == "oracles":
            for entry in sub["reports"]:
                mark = "✓" if entry["passed"] else "✗"
                good = entry["trials"] - len(entry["failures"])
                lines.append(f"{entry['name']}: {good}/{entry['trials']} {mark}")
                lines.extend(f"  {f}" for f in entry["failures"][:5])
    lines.append("verdict: " + ("PASS" if rep["passed"] else "FAIL"))
    return "\n".join(lines)


# ----------------------------------------------------------------------
# Command handlers
# ----------------------------------------------------------------------

def _emit(rep: dict, renderer, as_json: bool) -> None:
    if as_json:
        print(json.dumps(to_jsonable(rep), indent=2, ensure_ascii=False))
    else:
        print(renderer(rep))


def _cmd_analyze(args) -> int:
    rep = analyze_report(load_manifold(args.file))
    _emit(rep, render_analyze, args.json)
    return 0


def _cmd_invariant(args) -> int:
    sd = load_records(args.file)
    want_ia = args.ia or not args.ib
    want_ib = args.ib or not args.ia
    rep = invariant_report(sd, want_ia, want_ib)
    _emit(rep, render_invariant, args.json)
    return 0 if rep["passed"] else 1


def _cmd_act(args) -> int:
    m = load_manifold(args.file)
    wu = parse_wu_coords(args.wu, m.profile.alpha)
    rep = act_report(m, wu, args.i, args.omega)
    _emit(rep, render_act, args.json)
    return 0


def _cmd_embeddings(args) -> int:
    rep = embeddings_report(load_manifold(args.file))
    _emit(rep, render_embeddings, args.json)
    return 0


def _resolve_seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get(SEED_ENV)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ParseError(f"{SEED_ENV}={env!r} is not an integer") from None
    return 0


def _cmd_verify(args) -> int:
    sections = []
    if args.file:
        sections.append(verify_file_report(load_records(args.file)))
    if args.corollaries:
        sections.append(corollaries_report())
    if args.oracles:
        sections.append(oracles_report(_resolve_seed(args), trials=args.trials))
    if not sections:
        sections = [corollaries_report(),
                    oracles_report(_resolve_seed(args), trials=args.trials)]
    rep = {
        "command": "verify",
        "mode": sections[0]["mode"] if len(sections) == 1 else "combined",
        "sections": sections,
        "passed": all(s["passed"] for s in sections),
    }
    _emit(rep, render_verify, args.json)
    return 0 if rep["passed"] else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="imm5",
        description=("Regular-homotopy classification of immersions of closed "
                     "oriented 3-manifolds in 5-space"),
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("analyze", help="homology, Gamma2 and class census")
    p.add_argument("file", help="manifold JSON file or fixture name")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("invariant", help="integer invariant from Seifert records")
    p.add_argument("file", help="Seifert record JSON file")
    p.add_argument("--ia", action="store_true", help="cusp route only")
    p.add_argument("--ib", action="store_true", help="triple-point route only")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_invariant)

    p = sub.add_parser("act", help="connected sum with a sphere immersion")
    p.add_argument("file", help="manifold JSON file or fixture name")
    p.add_argument("--wu", required=True, help="Wu coordinates, e.g. 0 or 01")
    p.add_argument("--i", required=True, type=int)
    p.add_argument("--omega", required=True, type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_act)

    p = sub.add_parser("embeddings", help="embedding classes per Wu coset")
    p.add_argument("file", help="manifold JSON file or fixture name")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_embeddings)

    p = sub.add_parser("verify", help="validators, oracles and built-in checks")
    p.add_argument("file", nargs="?", help="Seifert record JSON file")
    p.add_argument("--corollaries", action="store_true",
                   help="run the built-in reproductions")
    p.add_argument("--oracles", action="store_true",
                   help="run the randomized oracle sweeps")
    p.add_argument("--seed", type=int, default=None,
                   help=f"oracle seed (default: ${SEED_ENV} or 0)")
    p.add_argument("--trials", type=int, default=500)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParityError as exc:
        print(f"ParityError: {exc}", file=sys.stderr)
        return 1
    except (ParseError, CosetUncovered, ParityViolation, WuMismatch,
            MissingData, HypothesisViolated) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except Imm5Error as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
