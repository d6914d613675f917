"""
Certified report payloads and their independent re-checks.

Reports hold elements as grammar strings. Nothing time-dependent goes into
a report, so the same command always writes the same bytes.
"""
from typing import Any, Dict, List, Optional, Sequence

from ed_errors import ElemDivError
from ed_util import tool_info
from element_parser import parse_element
from range_probes import (KomarnytskyViolation, SimpleDegreeResult, SimpleRangeWitness,
                          StableRangeWitness, check_unit_ideal_product, is_unimodular_row,
                          validate_simple_range_witness)
from report_schema import probe_report_schema, reduction_report_schema, validate_json_output
from ring_core import Element, Ring
from ring_instances import RingSpec, make_ring, ring_spec_of
from ring_matrix import DiagonalReport, EquivalenceCertificate, Matrix, build_report, verify_certificate

SIMPLE_RANGE_CONDITIONS = ("simple2", "construction", "from-reduction")


# --- reduction reports ---

def reduction_report(cert: EquivalenceCertificate, report: Optional[DiagonalReport], form: str,
                     options: Dict[str, Any], verified: bool) -> Dict[str, Any]:
    ring = cert.D.ring
    return {
        "tool": tool_info(),
        "options": options,
        "ring": ring_spec_of(ring).to_json(),
        "form": form,
        "D": cert.D.to_strings(),
        "P": cert.P.to_strings(),
        "Pinv": cert.Pinv.to_strings(),
        "Q": cert.Q.to_strings(),
        "Qinv": cert.Qinv.to_strings(),
        "chain": list(report.chain) if report is not None else [],
        "invariant": list(report.invariant) if report is not None else [],
        "verified": verified,
    }


def certificate_from_report(ring: Ring, data: Dict[str, Any]) -> EquivalenceCertificate:
    grids = {name: Matrix.from_strings(ring, data[name]) for name in ("P", "Pinv", "Q", "Qinv", "D")}
    return EquivalenceCertificate(**grids)


def verify_reduction_report(data: Dict[str, Any], a: Matrix) -> List[str]:
    """Problems found while re-checking a reduction report against its input; empty means verified."""
    if not validate_json_output(data, reduction_report_schema()):
        return ["report does not match the reduction report schema"]
    ring = make_ring(RingSpec.from_json(data["ring"]))
    if ring != a.ring:
        return [f"report ring {ring.descriptor} differs from matrix ring {a.ring.descriptor}"]
    problems = []
    cert = certificate_from_report(ring, data)
    if not verify_certificate(a, cert):
        problems.append("P*A*Q = D or an inverse identity fails")
    if data["form"] == "hermite":
        if not cert.D.is_upper_triangular():
            problems.append("D is not upper triangular")
    else:
        if not cert.D.is_diagonal():
            problems.append("D is not diagonal")
        else:
            recomputed = build_report(cert.D)
            if list(recomputed.chain) != data["chain"]:
                problems.append("chain flags differ from the recomputed ones")
            if list(recomputed.invariant) != data["invariant"]:
                problems.append("invariant flags differ from the recomputed ones")
            if not all(recomputed.chain):
                problems.append("diagonal is not a total-divisor chain")
    if not data["verified"]:
        problems.append("report is marked unverified")
    return problems


# --- probe reports ---

def witness_to_json(witness) -> Optional[Dict[str, Any]]:
    if witness is None:
        return None
    if isinstance(witness, StableRangeWitness):
        if witness.kind == "sr1":
            return {"t": str(witness.t)}
        return {"x": str(witness.x), "y": str(witness.y)}
    if isinstance(witness, SimpleRangeWitness):
        return {"p": str(witness.p), "q": str(witness.q), "d": str(witness.d),
                "d_star_unit": witness.d_star_unit}
    if isinstance(witness, SimpleDegreeResult):
        return {"n": witness.n, "combination": [[str(u), str(v)] for u, v in witness.combination]}
    if isinstance(witness, KomarnytskyViolation):
        return {"element": str(witness.element), "factor": str(witness.factor),
                "cofactor": str(witness.cofactor)}
    if isinstance(witness, dict):
        return witness
    raise ElemDivError(f"cannot serialize witness {witness!r}")


def probe_report(ring: Ring, condition: str, inputs: Sequence[Element], witness, bound: int,
                 status: str, options: Dict[str, Any]) -> Dict[str, Any]:
    return {
        "tool": tool_info(),
        "options": options,
        "ring": ring_spec_of(ring).to_json(),
        "condition": condition,
        "inputs": [str(e) for e in inputs],
        "witness": witness_to_json(witness),
        "bound": bound,
        "status": status,
    }


def _check_probe_witness(ring: Ring, condition: str, inputs: List[Element], w: Dict[str, Any]) -> bool:
    def el(text: str) -> Element:
        return parse_element(ring, text)

    if condition == "unimodular":
        return is_unimodular_row(inputs) == w["unimodular"]
    if condition == "sr1":
        a, b = inputs
        return is_unimodular_row([a, b]) and ring.is_unit(a + b * el(w["t"]))
    if condition == "sr2":
        a, b, c = inputs
        return is_unimodular_row([a + c * el(w["x"]), b + c * el(w["y"])])
    if condition in SIMPLE_RANGE_CONDITIONS:
        a, b, c = inputs
        witness = SimpleRangeWitness(p=el(w["p"]), q=el(w["q"]), d=el(w["d"]),
                                     d_star_unit=w["d_star_unit"])
        return validate_simple_range_witness(a, b, c, witness)
    if condition == "nsimple":
        (a,) = inputs
        total = ring.zero
        for u, v in w["combination"]:
            total = total + el(u) * a * el(v)
        return total == ring.one and w["n"] == len(w["combination"])
    if condition == "unit-product":
        a, b = inputs
        return check_unit_ideal_product(a, b) == w["holds"]
    if condition == "komarnytsky":
        element, factor, cofactor = el(w["element"]), el(w["factor"]), el(w["cofactor"])
        return (factor * cofactor == element and ring.is_invariant(element)
                and not ring.is_invariant(factor))
    return False


def verify_probe_report(data: Dict[str, Any]) -> List[str]:
    if not validate_json_output(data, probe_report_schema()):
        return ["report does not match the probe report schema"]
    ring = make_ring(RingSpec.from_json(data["ring"]))
    inputs = [parse_element(ring, text) for text in data["inputs"]]
    witness = data["witness"]
    status = data["status"]
    if witness is None:
        if status in ("found", "counterexample"):
            return [f"status {status} without a witness"]
        return []
    if status in ("exhausted", "hypothesis_failed"):
        return [f"status {status} with a witness"]
    if not _check_probe_witness(ring, data["condition"], inputs, witness):
        return [f"{data['condition']} witness fails its identities"]
    return []
