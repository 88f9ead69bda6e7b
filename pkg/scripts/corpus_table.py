"""Curve corpus sweep: Schenzel, cube closed form, m P^2 containment, degree separation, Harbourne window."""

import argparse
import json
import time
from dataclasses import asdict, dataclass, field

from sympow.containment import check_containment, harbourne_window
from sympow.groebner import ideal_equal
from sympow.manifest import field_from
from sympow.moncurve import DEFAULT_CORPUS, corpus_curves
from sympow.symbolic import cube_closed_form, degree_separation, schenzel_delta1, symbolic_power


@dataclass
class CorpusConfig:
    triples: list[tuple[int, int, int]] = field(default_factory=lambda: list(DEFAULT_CORPUS))
    char: int | None = None
    harbourne_n: tuple[int, ...] = (2, 3)


def run(cfg: CorpusConfig) -> list[dict]:
    rows = []
    for cv in corpus_curves(cfg.triples, field_from(cfg.char)):
        t0 = time.perf_counter()
        P = cv.ideal()
        P2 = symbolic_power(P, 2).generators
        P3 = symbolic_power(P, 3).generators
        cf = cube_closed_form(cv)
        sep = degree_separation(cf)
        rows.append({
            "curve": list(cv.original),
            "working_curve": list(cv.abc),
            "exps": list(cv.exps),
            "case": cv.case,
            "schenzel": ideal_equal(schenzel_delta1(cv).ideal(), P2),
            "cube_crosscheck": cf.crosscheck,
            "P3_in_mP2": check_containment(P3, cv.maximal_ideal() * P ** 2).holds,
            "P2_ne_square": not ideal_equal(P2, P ** 2),
            "P3_ne_cube": not ideal_equal(P3, P ** 3),
            "degree_separation": sep,
            "harbourne": {n: r.verdict for n, r in zip(cfg.harbourne_n, harbourne_window(P, 2, cfg.harbourne_n))},
            "seconds": round(time.perf_counter() - t0, 3),
        })
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--corpus", help="JSON list of [a, b, c] triples")
    ap.add_argument("--char", type=int)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    cfg = CorpusConfig(char=args.char)
    if args.corpus:
        with open(args.corpus) as fh:
            cfg.triples = [tuple(t) for t in json.load(fh)]
    rows = run(cfg)
    if args.json:
        print(json.dumps({"config": asdict(cfg), "rows": rows}, indent=2))
        return
    for r in rows:
        print(f"{str(tuple(r['curve'])):<12} case {r['case']:<3} schenzel={r['schenzel']!s:<5} "
              f"cube={r['cube_crosscheck']:<4} P3⊆mP2={r['P3_in_mP2']!s:<5} "
              f"sep={r['degree_separation']['holds']!s:<5} harbourne={r['harbourne']} {r['seconds']} s")


if __name__ == "__main__":
    main()
