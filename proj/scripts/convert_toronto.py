#!/usr/bin/env python3
"""Convert merged-format Toronto exam timetabling files to .stu/.crs pairs.

The merged format (one file per instance) is:

    <num_exams> <num_students> <num_slots>
    <exam_id> <enrollment_count>      # num_exams lines, zero-padded ids
    <blank line>
    <student_id> <exam_id>            # one line per enrollment pair

Output is the classic Carter layout: <name>.stu has one line per student
listing that student's 1-based exam indices, <name>.crs has one line per
exam with its enrollment count.
"""

import argparse
import collections
import pathlib
import sys


def convert(src: pathlib.Path, out_dir: pathlib.Path, name: str) -> None:
    lines = src.read_text().splitlines()
    header = lines[0].split()
    num_exams, num_students, num_slots = (int(tok) for tok in header[:3])

    crs_counts = {}
    idx = 1
    while idx < len(lines):
        line = lines[idx].strip()
        if not line:
            idx += 1
            break
        exam, count = line.split()
        crs_counts[int(exam)] = int(count)
        idx += 1

    enrollments = collections.defaultdict(list)
    for line in lines[idx:]:
        line = line.strip()
        if not line:
            continue
        student, exam = line.split()
        enrollments[student].append(int(exam))

    derived_counts = collections.Counter()
    for exams in enrollments.values():
        for exam in set(exams):
            derived_counts[exam] += 1
    mismatches = [
        e for e in range(1, num_exams + 1)
        if crs_counts.get(e, 0) != derived_counts.get(e, 0)
    ]
    if mismatches:
        print(f"{name}: {len(mismatches)} exams with .crs/.stu count mismatch",
              file=sys.stderr)

    stu_path = out_dir / f"{name}.stu"
    with stu_path.open("w") as fh:
        for student in sorted(enrollments, key=lambda s: int(s[1:]) if s[1:].isdigit() else 0):
            exams = sorted(set(enrollments[student]))
            fh.write(" ".join(str(e) for e in exams) + "\n")

    crs_path = out_dir / f"{name}.crs"
    with crs_path.open("w") as fh:
        for exam in range(1, num_exams + 1):
            fh.write(f"{exam:04d} {derived_counts.get(exam, 0)}\n")

    print(f"{name}: exams={num_exams} students={len(enrollments)} "
          f"slots={num_slots} (header student count {num_students})")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("sources", nargs="+", type=pathlib.Path)
    ap.add_argument("--out-dir", type=pathlib.Path, required=True)
    ap.add_argument("--names", nargs="*", default=None,
                    help="output instance names, parallel to sources")
    args = ap.parse_args()

    args.out_dir.mkdir(parents=True, exist_ok=True)
    names = args.names or [p.stem for p in args.sources]
    if len(names) != len(args.sources):
        ap.error("--names must be parallel to sources")
    for src, name in zip(args.sources, names):
        convert(src, args.out_dir, name)


if __name__ == "__main__":
    main()
