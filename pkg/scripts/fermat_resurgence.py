"""Resurgence box scan, Swanson probe and Harbourne window for the Fermat configuration."""

import argparse
import json
import time
from dataclasses import asdict, dataclass

from sympow import containment as ct
from sympow.arith import xyz_ring
from sympow.linverify import fermat_ideal
from sympow.manifest import field_from


@dataclass
class FermatConfig:
    m_max: int = 6
    s_max: int = 4
    char: int | None = None
    window: tuple[int, ...] = (1, 2, 3)


def run(cfg: FermatConfig) -> dict:
    I = fermat_ideal(xyz_ring(field_from(cfg.char)))
    t0 = time.perf_counter()
    est = ct.resurgence_search(I, cfg.m_max, cfg.s_max)
    t1 = time.perf_counter()
    swanson, _ = ct.swanson_probe(I, cfg.window, 3)
    harbourne = [r.verdict for r in ct.harbourne_window(I, 2, cfg.window)]
    return {
        "config": asdict(cfg),
        "resurgence": est.to_json(),
        "resurgence_seconds": round(t1 - t0, 2),
        "swanson_window": swanson,
        "harbourne_window": dict(zip(cfg.window, harbourne)),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--box", nargs=2, type=int, default=(6, 4), metavar=("M", "S"))
    ap.add_argument("--char", type=int)
    args = ap.parse_args()
    print(json.dumps(run(FermatConfig(*args.box, char=args.char)), indent=2))


if __name__ == "__main__":
    main()
