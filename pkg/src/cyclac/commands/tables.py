# -*- coding: utf-8 -*-

from cyclac import command_utils as utils
from cyclac.cyclotomy import (class_count, cyclotomic_matrix, equality_table, make_params,
        naive_cyclotomic_matrix, orbit_classes)
from cyclac.field import Generator, find_generators, naive_generators
from typing import List, Optional, Sequence, TextIO
import csv
import io
import json
import pathlib
import time


def _csv(rows: Sequence[Sequence[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def _emit(text: str, path: Optional[str], out: TextIO) -> None:
    if path is None:
        out.write(text)
    else:
        pathlib.Path(path).write_text(text)


@utils.command("generators", "list the generators of F_p*, ascending")
@utils.argument("--p", type=int, required=True, help="prime modulus")
@utils.argument("--naive", action="store_true", help="full power-table search (p < 200)")
def generators(args, out):
    search = naive_generators if args.naive else find_generators
    for gamma in search(args.p):
        out.write(f"{gamma}\n")


@utils.command("table", "print the representative table, or the cyclotomic matrix of --generator")
@utils.params
@utils.argument("--generator", type=int, default=None, help="generator of F_p*")
@utils.output_format
@utils.argument("--naive", action="store_true", help="count all e² positions")
@utils.argument("--out", default=None, help="write to this file instead of stdout")
def table(args, out):
    params = make_params(args.l, args.p)
    if args.generator is None:
        rows: List[List[str]] = [[str(pair) for pair in row] for row in equality_table(params)]
    else:
        gamma = Generator(args.generator, params.p)
        build = naive_cyclotomic_matrix if args.naive else cyclotomic_matrix
        rows = [[str(v) for v in row] for row in build(gamma, params, workers=args.workers)]
    if args.format == "json":
        text = json.dumps({
            "l": str(params.l), "p": str(params.p.p), "e": str(params.e), "k": str(params.k),
            "generator": None if args.generator is None else str(args.generator),
            "rows": rows}, indent=2) + "\n"
    else:
        text = _csv(rows)
    _emit(text, args.out, out)


@utils.command("classes", "print every equality class: representative, size, members")
@utils.params
@utils.output_format
def classes(args, out):
    params = make_params(args.l, args.p)
    partition = orbit_classes(params)
    if args.format == "json":
        out.write(json.dumps([{"representative": str(rep), "members": [str(m) for m in members]}
                for rep, members in partition], indent=2) + "\n")
        return
    out.write(_csv([[str(rep), str(len(members))] + [str(m) for m in members]
            for rep, members in partition]))


@utils.command("bench", "time the naive and the class-reduced matrix construction")
@utils.params
@utils.argument("--repetitions", type=int, default=1, help="runs per path; the best time is kept")
def bench(args, out):
    params = make_params(args.l, args.p)
    gamma = find_generators(params.p)[0]
    repetitions = max(1, args.repetitions)
    timings = {}
    evaluations = {}
    for name, build in (("naive", naive_cyclotomic_matrix), ("reduced", cyclotomic_matrix)):
        best = None
        for _ in range(repetitions):
            start = time.perf_counter()
            matrix = build(gamma, params, workers=args.workers)
            elapsed = time.perf_counter() - start
            best = elapsed if best is None else min(best, elapsed)
        timings[name] = best
        evaluations[name] = matrix.evaluations
    classes = class_count(params)
    out.write(_csv([
        ["l", "p", "e", "k", "classes", "ratio", "naive_evaluations", "reduced_evaluations",
            "naive_seconds", "reduced_seconds"],
        [params.l, params.p.p, params.e, params.k, classes, f"{params.e ** 2 / classes:.4f}",
            evaluations["naive"], evaluations["reduced"],
            f"{timings['naive']:.6f}", f"{timings['reduced']:.6f}"]]))
