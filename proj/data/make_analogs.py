#!/usr/bin/env python3
"""Regenerates the synthetic instance files in this directory.

The public bqp benchmark files are not redistributed with this repository.
These analogs follow the same text format and coefficient ranges (integer
linear and quadratic coefficients in [-100, 100], ~10% pairwise density,
maximization convention) so the harness and its tests can run out of the
box. Fixed seeds keep the files reproducible.
"""

import random


def gen_instance(rng, n, density):
    terms = []
    for i in range(1, n + 1):
        v = 0
        while v == 0:
            v = rng.randint(-100, 100)
        terms.append((i, i, v))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if rng.random() < density:
                v = 0
                while v == 0:
                    v = rng.randint(-100, 100)
                terms.append((i, j, v))
    return n, terms


def write_file(path, instances):
    with open(path, "w") as f:
        f.write(f"{len(instances)}\n")
        for n, terms in instances:
            f.write(f"{n} {len(terms)}\n")
            for i, j, v in terms:
                f.write(f"{i} {j} {v}\n")


def main():
    # eight small instances mirroring the 30..100-variable public set
    rng = random.Random(20260809)
    sizes = [50, 60, 70, 80, 50, 30, 30, 100]
    write_file("analog_a.txt", [gen_instance(rng, n, 0.10) for n in sizes])

    # one 100-variable instance used for the target-reachability checks
    rng = random.Random(31337)
    write_file("analog_d.txt", [gen_instance(rng, 100, 0.10)])


if __name__ == "__main__":
    main()
