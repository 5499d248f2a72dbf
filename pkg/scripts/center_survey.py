#!/usr/bin/env python3
"""Survey the centers of all category fixtures: counts, grades, coefficients."""

from __future__ import annotations

import sys
import time
from collections import Counter
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from crossedcat.center import CenterStructure, verify_center_braided  # noqa: E402
from crossedcat.fixtures import CATEGORIES, CENTER_FIXTURES  # noqa: E402


def main() -> None:
    for name in CENTER_FIXTURES:
        cat = CATEGORIES[name]()
        t0 = time.monotonic()
        Z = CenterStructure(cat)
        rep = verify_center_braided(cat)
        dt = time.monotonic() - t0
        grades = Counter(Z.grade(z) for z in Z.simples)
        coeffs = Counter(Z.braiding(a, b)[1].exponent
                         for a in Z.simples for b in Z.simples)
        sigma_vals = Counter(Z.sigma(g, s, z)
                             for g in cat.G.elements()
                             for s in cat.Gamma.elements()
                             for z in Z.simples)
        print(f"{name}: |Z| = {len(Z.simples)}  verified = {rep.passed}  ({dt:.2f}s)")
        print(f"  grades: {dict(sorted(grades.items()))}")
        print(f"  braiding exponents (mod {cat.M}): {dict(sorted(coeffs.items()))}")
        print(f"  swap-scalar exponents: {dict(sorted(sigma_vals.items()))}")


if __name__ == "__main__":
    main()
