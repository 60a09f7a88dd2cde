#!/usr/bin/env python3
"""Regenerates the committed CSV fixtures under data/.

The files are checked in; rerun this only when the recipe changes.
"""

import math
import random
from pathlib import Path

N = 1000
OUT = Path(__file__).resolve().parent.parent / "data"


def write(name: str, values: list[float]) -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    path = OUT / name
    with path.open("w", newline="\n") as fh:
        fh.write("value\n")
        for v in values:
            fh.write(f"{v!r}\n")
    print(f"wrote {path} ({len(values)} samples)")


def euclidean_fixture() -> list[float]:
    rng = random.Random(101)
    return [math.sin(2 * math.pi * i / 50.0) + 0.1 * rng.random() for i in range(N)]


def pnorm_fixture() -> list[float]:
    rng = random.Random(202)
    walk, level = [], 0.0
    for _ in range(N):
        level += rng.uniform(-0.5, 0.5)
        walk.append(level)
    return walk


def znorm_fixture() -> list[float]:
    rng = random.Random(303)
    values = [rng.gauss(0.0, 1.0) for _ in range(N)]
    for start in (150, 700):  # two planted motifs, affine copies of one shape
        scale = 1.0 if start == 150 else 3.0
        shift = 0.0 if start == 150 else 5.0
        for i in range(60):
            values[start + i] = scale * math.sin(2 * math.pi * i / 20.0) + shift
    for i in range(420, 500):  # a flat stretch longer than any window
        values[i] = 42.0
    return values


def main() -> None:
    write("fixture_euclidean.csv", euclidean_fixture())
    write("fixture_pnorm.csv", pnorm_fixture())
    write("fixture_znorm.csv", znorm_fixture())


if __name__ == "__main__":
    main()
