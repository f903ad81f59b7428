"""Time the numba kernels against their numpy fallbacks.

    python3 benchmarks/bench_kernels.py --size 128 --repeat 5

Each kernel runs once per backend before timing so JIT compilation is excluded.
Reports the median wall time per call.
"""

from __future__ import annotations

import argparse
import statistics
import time

import numpy as np

from matlat import accel
from matlat.baking import unproject
from matlat.geometry import build_all_pairs, build_correspondence, canonical_rig, make_mesh, rasterize, rasterize_rig
from matlat.metrics import correspondence_mse
from matlat.mvdiffusion import LatentCorrespondences
from matlat.synthdata import make_style, make_texture, render_record


def _median_ms(fn, repeat: int) -> float:
    fn()
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return 1e3 * statistics.median(times)


def cases(size: int):
    mesh = make_mesh("torus")
    rig = canonical_rig(size)
    views = rasterize_rig(mesh, rig)
    maps = build_all_pairs(views, 1e-2, 1)
    rng = np.random.default_rng(0)
    imgs = [(rng.uniform(size=(size, size, 5)), v.mask) for v in views]
    tex = make_texture(make_style(4, 0, softness=1.0), mesh, 2 * size)
    rendered = render_record(mesh, tex, views).views
    return {
        "raster": lambda: rasterize(mesh, rig[0]),
        "correspondence": lambda: build_correspondence(views[0], views[1], 1e-2, 3),
        "pair_sums": lambda: correspondence_mse(imgs, maps),
        "assemble_index": lambda: LatentCorrespondences(views, 4, 0.25, 3).index(),
        "gather_view": lambda: unproject(rendered, mesh, 2 * size),
    }


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--size", type=int, default=128, help="view resolution")
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--only", nargs="*", help="subset of kernel names")
    args = ap.parse_args(argv)

    prev = accel.numba_enabled()
    table = cases(args.size)
    print(f"{'kernel':<16}{'numba ms':>12}{'numpy ms':>12}{'speedup':>10}")
    for name, fn in table.items():
        if args.only and name not in args.only:
            continue
        accel.use_numba(True)
        fast = _median_ms(fn, args.repeat)
        accel.use_numba(False)
        slow = _median_ms(fn, args.repeat)
        print(f"{name:<16}{fast:>12.2f}{slow:>12.2f}{slow / fast:>9.1f}x")
    accel.use_numba(prev)


if __name__ == "__main__":
    main()
