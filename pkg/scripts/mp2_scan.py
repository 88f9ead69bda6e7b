"""Scan non-CI curves for P^(3) ⊆ m P^2, with the stable witness and Harbourne window on failures."""

import argparse
import json
import math
from dataclasses import asdict, dataclass

from sympow.containment import check_containment, harbourne_window, stable_witness_search
from sympow.manifest import field_from
from sympow.moncurve import CompleteIntersection, NoPresentationFound, herzog_presentation
from sympow.symbolic import cube_closed_form, degree_separation, symbolic_power


@dataclass
class ScanConfig:
    a_max: int = 9
    b_max: int = 13
    c_max: int = 15
    char: int | None = None


def scan(cfg: ScanConfig) -> dict:
    fld = field_from(cfg.char)
    checked = 0
    failures = []
    for a in range(3, cfg.a_max + 1):
        for b in range(a + 1, cfg.b_max + 1):
            for c in range(b + 1, cfg.c_max + 1):
                if math.gcd(a, math.gcd(b, c)) != 1:
                    continue
                try:
                    cv = herzog_presentation(a, b, c, field=fld)
                except (CompleteIntersection, NoPresentationFound):
                    continue
                checked += 1
                P = cv.ideal()
                rep = check_containment(symbolic_power(P, 3).generators, cv.maximal_ideal() * P ** 2)
                if rep.holds:
                    continue
                t, _ = stable_witness_search(P, 2, 3)
                failures.append({
                    "curve": [a, b, c],
                    "working_curve": list(cv.abc),
                    "exps": list(cv.exps),
                    "case": cv.case,
                    "witness": str(rep.witness),
                    "degree_separation": degree_separation(cube_closed_form(cv)),
                    "stable_witness_t": t,
                    "harbourne_2_3": [r.verdict for r in harbourne_window(P, 2, [2, 3])],
                })
    return {"config": asdict(cfg), "checked": checked, "failures": failures}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--bounds", nargs=3, type=int, default=(9, 13, 15), metavar=("A", "B", "C"))
    ap.add_argument("--char", type=int)
    args = ap.parse_args()
    print(json.dumps(scan(ScanConfig(*args.bounds, char=args.char)), indent=2))


if __name__ == "__main__":
    main()
