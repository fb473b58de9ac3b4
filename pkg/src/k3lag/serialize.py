"""JSON wire format.

All integers travel as decimal strings (no precision ceiling), rationals as
"p/q" strings, Gaussian rationals as {re, im} objects, Gram matrices and
vectors as arrays of decimal strings. Encoders are canonical (sorted keys
handled at dump time), decoders validate before any computation and raise
InputError with a machine-readable code.
"""
from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Sequence

from .exact import GaussianRational
from .lattice import (
    FormalVector,
    Lattice,
    Sublattice,
    e8_lattice,
    hyperbolic_plane,
    k3_lattice,
)

_INT_RE = re.compile(r"^-?\d+$")
_FRAC_RE = re.compile(r"^-?\d+(/\d+)?$")

NAMED_LATTICES = {
    "U": hyperbolic_plane,
    "E8": e8_lattice,
    "K3": k3_lattice,
}


class InputError(Exception):
    """Malformed input document; mapped to exit code 2."""

    def __init__(self, code: str, message: str = ""):
        super().__init__(message or code)
        self.code = code


def enc_int(n: int) -> str:
    return str(int(n))


def dec_int(value, what: str = "integer") -> int:
    if isinstance(value, str) and _INT_RE.match(value):
        return int(value)
    raise InputError("bad_integer", f"{what}: expected a decimal string, got {value!r}")


def enc_frac(q) -> str:
    f = Fraction(q)
    return f"{f.numerator}/{f.denominator}"


def dec_frac(value, what: str = "rational") -> Fraction:
    if isinstance(value, str) and _FRAC_RE.match(value):
        try:
            return Fraction(value)
        except ZeroDivisionError:
            raise InputError("bad_rational", f"{what}: zero denominator")
    raise InputError("bad_rational", f"{what}: expected 'p/q' string, got {value!r}")


def enc_ivec(v: Sequence[int]) -> list:
    return [enc_int(c) for c in v]


def dec_ivec(value, what: str = "vector") -> tuple:
    if not isinstance(value, list):
        raise InputError("bad_vector", f"{what}: expected an array")
    return tuple(dec_int(c, what) for c in value)


def enc_qvec(v) -> list:
    return [enc_frac(c) for c in v]


def dec_qvec(value, what: str = "vector") -> tuple:
    if not isinstance(value, list):
        raise InputError("bad_vector", f"{what}: expected an array")
    return tuple(dec_frac(c, what) for c in value)


def enc_matrix(m) -> list:
    return [enc_ivec(row) for row in m]


def dec_matrix(value, what: str = "matrix") -> tuple:
    if not isinstance(value, list):
        raise InputError("bad_matrix", f"{what}: expected an array of arrays")
    return tuple(dec_ivec(row, what) for row in value)


def enc_gaussian(c: GaussianRational) -> dict:
    return {"re": enc_frac(c.re), "im": enc_frac(c.im)}


def dec_gram(value) -> tuple:
    rows = dec_matrix(value, "gram")
    n = len(rows)
    for row in rows:
        if len(row) != n:
            raise InputError("gram_not_square", "gram matrix must be square")
    for i in range(n):
        for j in range(i):
            if rows[i][j] != rows[j][i]:
                raise InputError("gram_not_symmetric", "gram matrix must be symmetric")
    return rows


def dec_lattice(spec, what: str = "lattice") -> Lattice:
    """A named lattice ("U", "E8", "K3") or {"gram": [[...]]}."""
    if isinstance(spec, str):
        maker = NAMED_LATTICES.get(spec)
        if maker is None:
            raise InputError(
                "unknown_lattice", f"{what}: unknown name {spec!r}; use U, E8 or K3"
            )
        return maker()
    if isinstance(spec, dict) and "gram" in spec:
        return Lattice(dec_gram(spec["gram"]))
    raise InputError("bad_lattice", f"{what}: expected a name or a gram object")


def enc_lattice(lat: Lattice) -> dict:
    return {"gram": enc_matrix(lat.gram)}


def enc_formal(fv: FormalVector) -> dict:
    return {
        "base": enc_qvec(fv.base),
        "eps": enc_frac(fv.eps),
        "terms": [
            {"marker": enc_int(i), "vector": enc_qvec(v)} for i, v in fv.terms
        ],
    }


def dec_formal(value, what: str = "formal vector") -> FormalVector:
    if not isinstance(value, dict) or "base" not in value:
        raise InputError("bad_formal", f"{what}: expected base/eps/terms object")
    base = dec_qvec(value["base"], what)
    eps = dec_frac(value.get("eps", "1/2"), what)
    terms = []
    for t in value.get("terms", []):
        if not isinstance(t, dict) or "marker" not in t or "vector" not in t:
            raise InputError("bad_formal", f"{what}: bad term entry")
        terms.append((dec_int(t["marker"], what), dec_qvec(t["vector"], what)))
    try:
        return FormalVector(base=base, eps=eps, terms=tuple(terms))
    except ValueError as exc:
        raise InputError("bad_formal", f"{what}: {exc}")


def dec_omega(value, what: str = "omega"):
    """Rational vector (array) or formal vector (object)."""
    if isinstance(value, list):
        return dec_qvec(value, what)
    return dec_formal(value, what)


def enc_sublattice(sub: Sublattice) -> list:
    return enc_matrix(sub.basis)


def dumps(doc: dict) -> str:
    """Canonical serialization: deterministic bytes for identical documents."""
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def loads(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError("bad_json", f"input is not valid JSON: {exc}")
    if not isinstance(doc, dict):
        raise InputError("bad_json", "top-level input must be an object")
    return doc


def error_document(code: str, message: str, **extra) -> dict:
    err = {"code": code, "message": message}
    err.update(extra)
    return {"error": err}


def document(command: str, input_doc: dict, result: dict) -> dict:
    return {"command": command, "input": input_doc, "result": result}
