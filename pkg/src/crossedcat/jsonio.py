"""JSON file formats for groups, matched pairs, braided pairs, and categories.

Values referencing another file may be given inline or as a path string,
resolved relative to the referencing file.  Loaders check shapes and ranges
(raising ParseError / ValidationError, the CLI's exit-2 class) but leave the
subject's own axioms to the verifiers, so a corrupted pair still loads and
then fails verification with a witness (the CLI's exit-1 class).
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Optional, Union

from .braided import BraidedMatchedPair
from .errors import GroupValidationError, ParseError, ValidationError
from .groups import FiniteGroup, GroupHom, validate_group
from .matched import MatchedPair, matched_pair
from .pointed import PointedCrossedCategory, pointed_category
from .report import VerificationReport

PathLike = Union[str, Path]


def _read(path: PathLike) -> Any:
    path = Path(path)
    try:
        return json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: {exc.msg}", exc.colno) from exc


def _fail(message: str) -> ValidationError:
    rep = VerificationReport(subject="load")
    rep.add("well_formed", False, (message,))
    return ValidationError(rep, message)


def _resolve(obj: Any, base: Optional[Path]) -> Any:
    if isinstance(obj, str):
        ref = Path(obj)
        if base is not None and not ref.is_absolute():
            ref = base / ref
        return _read(ref)
    return obj


# -- groups ---------------------------------------------------------------------

def group_to_json(G: FiniteGroup) -> dict:
    return {"name": G.name, "order": G.order, "identity": G.identity,
            "table": [list(row) for row in G.table]}


def group_from_json(obj: Any, base: Optional[Path] = None) -> FiniteGroup:
    obj = _resolve(obj, base)
    try:
        return validate_group(obj["table"], obj.get("identity"), obj.get("name", "G"))
    except KeyError as exc:
        raise _fail(f"group object missing field {exc}") from exc
    except GroupValidationError:
        raise


def save_group(G: FiniteGroup, path: PathLike) -> None:
    Path(path).write_text(json.dumps(group_to_json(G), sort_keys=True, indent=1) + "\n")


def load_group(path: PathLike) -> FiniteGroup:
    return group_from_json(_read(path), Path(path).parent)


# -- matched pairs ----------------------------------------------------------------

def matched_to_json(mp: MatchedPair) -> dict:
    return {
        "G": group_to_json(mp.G),
        "Gamma": group_to_json(mp.Gamma),
        "act1": [list(r) for r in mp.act1.table],
        "act2": [list(r) for r in mp.act2.table],
        "side1": mp.act1.side,
        "side2": mp.act2.side,
    }


def matched_from_json(obj: Any, base: Optional[Path] = None) -> MatchedPair:
    obj = _resolve(obj, base)
    try:
        G = group_from_json(obj["G"], base)
        Gamma = group_from_json(obj["Gamma"], base)
        act1, act2 = obj["act1"], obj["act2"]
    except KeyError as exc:
        raise _fail(f"matched-pair object missing field {exc}") from exc
    for key in ("side1", "side2"):
        if obj.get(key, "left") != "left":
            raise _fail(f"{key} must be 'left'; right-action files are not accepted")
    if len(act1) != G.order or any(len(r) != Gamma.order for r in act1):
        raise _fail("act1 must be |G| x |Gamma|")
    if len(act2) != Gamma.order or any(len(r) != G.order for r in act2):
        raise _fail("act2 must be |Gamma| x |G|")
    if any(not 0 <= v < Gamma.order for r in act1 for v in r):
        raise _fail("act1 entry out of range")
    if any(not 0 <= v < G.order for r in act2 for v in r):
        raise _fail("act2 entry out of range")
    return matched_pair(G, Gamma, act1, act2)


def save_matched(mp: MatchedPair, path: PathLike) -> None:
    Path(path).write_text(json.dumps(matched_to_json(mp), sort_keys=True, indent=1) + "\n")


def load_matched(path: PathLike) -> MatchedPair:
    return matched_from_json(_read(path), Path(path).parent)


# -- braided pairs ------------------------------------------------------------------

def braided_to_json(bmp: BraidedMatchedPair) -> dict:
    body = matched_to_json(bmp.mp)
    body["phi"] = list(bmp.phi.image)
    body["psi"] = list(bmp.psi.image)
    return body


def braided_from_json(obj: Any, base: Optional[Path] = None) -> BraidedMatchedPair:
    obj = _resolve(obj, base)
    mp = matched_from_json(obj, base)
    try:
        phi, psi = obj["phi"], obj["psi"]
    except KeyError as exc:
        raise _fail(f"braided-pair object missing field {exc}") from exc
    for name, arr in (("phi", phi), ("psi", psi)):
        if len(arr) != mp.Gamma.order or any(not 0 <= v < mp.G.order for v in arr):
            raise _fail(f"{name} must map all of Gamma into G")
    # hom axioms are the verifier's business, not the loader's
    return BraidedMatchedPair(mp, GroupHom(mp.Gamma, mp.G, tuple(phi)),
                              GroupHom(mp.Gamma, mp.G, tuple(psi)))


def save_braided(bmp: BraidedMatchedPair, path: PathLike) -> None:
    Path(path).write_text(json.dumps(braided_to_json(bmp), sort_keys=True, indent=1) + "\n")


def load_braided(path: PathLike) -> BraidedMatchedPair:
    return braided_from_json(_read(path), Path(path).parent)


# -- categories ----------------------------------------------------------------------

def category_to_json(cat: PointedCrossedCategory) -> dict:
    def flat3(t):
        return [[list(r) for r in plane] for plane in t]

    return {
        "name": cat.name,
        "Lambda": group_to_json(cat.Lambda),
        "Gamma": group_to_json(cat.Gamma),
        "G": group_to_json(cat.G),
        "mp": matched_to_json(cat.mp),
        "grading": list(cat.grading),
        "action": [list(r) for r in cat.action],
        "M": cat.M,
        "J": "trivial" if _all_zero3(cat.jtable) else flat3(cat.jtable),
        "phi": "trivial" if all(v == 0 for v in cat.phitable) else list(cat.phitable),
        "chi": "trivial" if _all_zero3(cat.chitable) else flat3(cat.chitable),
        "iota": "trivial" if all(v == 0 for v in cat.iotatable) else list(cat.iotatable),
    }


def _all_zero3(t) -> bool:
    return all(v == 0 for plane in t for row in plane for v in row)


def _exp3_from(obj: Any, a: int, b: int, c: int, M: int, what: str):
    if obj == "trivial" or obj is None:
        return None
    if len(obj) != a or any(len(p) != b for p in obj) or any(len(r) != c for p in obj for r in p):
        raise _fail(f"{what} must be {a}x{b}x{c}")
    for plane in obj:
        for row in plane:
            for v in row:
                if not isinstance(v, int) or not 0 <= v < M:
                    raise _fail(f"{what} exponent {v} not in 0..{M - 1}")
    return obj


def _exp1_from(obj: Any, a: int, M: int, what: str):
    if obj == "trivial" or obj is None:
        return None
    if len(obj) != a:
        raise _fail(f"{what} must have length {a}")
    for v in obj:
        if not isinstance(v, int) or not 0 <= v < M:
            raise _fail(f"{what} exponent {v} not in 0..{M - 1}")
    return obj


def category_from_json(obj: Any, base: Optional[Path] = None) -> PointedCrossedCategory:
    obj = _resolve(obj, base)
    try:
        Lambda = group_from_json(obj["Lambda"], base)
        mp = matched_from_json(obj["mp"], base)
        grading, action, M = obj["grading"], obj["action"], obj["M"]
    except KeyError as exc:
        raise _fail(f"category object missing field {exc}") from exc
    if not isinstance(M, int) or M < 1:
        raise _fail("M must be a positive integer")
    # the top-level G/Gamma must agree with the matched pair's
    for key, ref in (("G", mp.G), ("Gamma", mp.Gamma)):
        if key in obj:
            given = group_from_json(obj[key], base)
            if given.table != ref.table or given.identity != ref.identity:
                raise _fail(f"top-level {key} disagrees with the matched pair's {key}")
    if len(grading) != Lambda.order or any(not 0 <= v < mp.Gamma.order for v in grading):
        raise _fail("grading must map Lambda into Gamma")
    if len(action) != mp.G.order or any(len(r) != Lambda.order for r in action):
        raise _fail("action must be |G| x |Lambda|")
    if any(not 0 <= v < Lambda.order for r in action for v in r):
        raise _fail("action entry out of range")
    n, ng = Lambda.order, mp.G.order
    j = _exp3_from(obj.get("J"), ng, n, n, M, "J")
    chi = _exp3_from(obj.get("chi"), ng, ng, n, M, "chi")
    phi = _exp1_from(obj.get("phi"), ng, M, "phi")
    iota = _exp1_from(obj.get("iota"), n, M, "iota")
    return pointed_category(Lambda, mp, grading, action, M,
                            jtable=j, phitable=phi, chitable=chi, iotatable=iota,
                            name=obj.get("name", "cat"))


def save_category(cat: PointedCrossedCategory, path: PathLike) -> None:
    Path(path).write_text(json.dumps(category_to_json(cat), sort_keys=True, indent=1) + "\n")


def load_category(path: PathLike, validate: bool = True) -> PointedCrossedCategory:
    """Load and, by default, verify; a failing axiom raises ValidationError."""
    cat = category_from_json(_read(path), Path(path).parent)
    if validate:
        from .pointed import verify_crossed_category
        rep = verify_crossed_category(cat)
        if not rep.passed:
            raise ValidationError(rep, "category axioms fail")
    return cat
