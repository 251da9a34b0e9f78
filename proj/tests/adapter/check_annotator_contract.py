# Copyright 2026 The entity-faithful Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


"""Checks an annotator command against the stdin/stdout annotation contract.

    check_annotator_contract.py --annotator CMD --cli PATH --dataset FILE
        --schemas DIR [--entity-free ID ...]
"""

import argparse
import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema

WHITELIST = {"PERSON", "FAC", "GPE", "ORG", "NORP", "LOC", "EVENT"}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--annotator", required=True)
    ap.add_argument("--cli", required=True)
    ap.add_argument("--dataset", required=True)
    ap.add_argument("--schemas", required=True)
    ap.add_argument("--entity-free", nargs="*", default=[], help="ids whose texts hold only dates and numbers")
    args = ap.parse_args()

    schemas = Path(args.schemas)
    dataset_schema = json.loads((schemas / "dataset_record.schema.json").read_text())
    annotation_schema = json.loads((schemas / "annotation_record.schema.json").read_text())

    records = []
    with open(args.dataset, encoding="utf-8") as f:
        for line in f:
            if line.strip():
                record = json.loads(line)
                jsonschema.validate(record, dataset_schema)
                records.append(record)

    with open(args.dataset, "rb") as stdin:
        proc = subprocess.run(args.annotator, shell=True, stdin=stdin, capture_output=True, check=False)
    errors = []
    if proc.returncode != 0:
        errors.append(f"annotator exited with {proc.returncode}: {proc.stderr.decode(errors='replace')}")

    expected_keys = [(r["id"], f) for r in records for f in ("source", "summary", "hypothesis") if r.get(f)]
    texts = {(r["id"], f): r.get(f) for r in records for f in ("source", "summary", "hypothesis")}
    got_keys = []
    lines = proc.stdout.decode("utf-8").splitlines()
    for n, line in enumerate(lines, 1):
        if not line.strip() or line.startswith("#"):
            continue
        ann = json.loads(line)
        try:
            jsonschema.validate(ann, annotation_schema)
        except jsonschema.ValidationError as e:
            errors.append(f"output line {n}: {e.message}")
            continue
        key = (ann["id"], ann["field"])
        got_keys.append(key)
        text = texts.get(key)
        if text is None:
            errors.append(f"output line {n}: no such record field {key}")
            continue
        for e in ann["entities"]:
            if text[e["start"]:e["end"]] != e["text"]:
                errors.append(f"output line {n}: span {e['start']}:{e['end']} slices to "
                              f"{text[e['start']:e['end']]!r}, not {e['text']!r}")
            if e["type"] not in WHITELIST:
                errors.append(f"output line {n}: type {e['type']} outside the whitelist")
        if ann["id"] in args.entity_free and ann["entities"]:
            errors.append(f"output line {n}: expected no entities for {ann['id']}")
    if got_keys != expected_keys:
        errors.append(f"expected {len(expected_keys)} records in input order, got {len(got_keys)}")

    with tempfile.NamedTemporaryFile("wb", suffix=".jsonl", delete=False) as tmp:
        tmp.write(proc.stdout)
    score = subprocess.run([args.cli, "score", "--dataset", args.dataset, "--annotations", tmp.name, "--out", "-"],
                           capture_output=True, check=False)
    Path(tmp.name).unlink()
    if score.returncode != 0:
        errors.append(f"score exited with {score.returncode}: {score.stderr.decode(errors='replace')}")

    for e in errors:
        print(e, file=sys.stderr)
    print(f"{len(got_keys)} annotation records checked, {len(errors)} problem(s)")
    return 1 if errors else 0


if __name__ == "__main__":
    sys.exit(main())
