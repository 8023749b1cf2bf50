#!/usr/bin/env python3
"""Validate a deloop report against the JSON schema."""

import argparse
import json
import subprocess
import sys

import jsonschema


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("schema")
    ap.add_argument("report", help="report JSON file, or an algebra file when --deloop is given")
    ap.add_argument("--deloop", help="deloop binary used to produce the report")
    args = ap.parse_args()
    with open(args.schema) as fh:
        schema = json.load(fh)
    if args.deloop:
        out = subprocess.run([args.deloop, "report", args.report, "--json"], capture_output=True, text=True)
        if out.returncode not in (0, 2):
            sys.exit(f"deloop report failed with exit {out.returncode}: {out.stderr}")
        report = json.loads(out.stdout)
    else:
        with open(args.report) as fh:
            report = json.load(fh)
    validator = jsonschema.Draft202012Validator(schema)
    errors = list(validator.iter_errors(report))
    for e in errors:
        print(f"{'/'.join(map(str, e.path))}: {e.message}")
    print("valid" if not errors else f"{len(errors)} schema violations")
    return 1 if errors else 0


if __name__ == "__main__":
    sys.exit(main())
