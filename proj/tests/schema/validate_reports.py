"""Validate dmod check reports against docs/report.schema.json."""

import json
import subprocess
import sys

import jsonschema


def report(dmod, *args):
    proc = subprocess.run([dmod, "check", *args, "--json", "-"], capture_output=True, text=True)
    if proc.returncode not in (0, 1):
        sys.exit(f"dmod exited {proc.returncode}: {proc.stderr}")
    return proc.returncode, json.loads(proc.stdout)


def main():
    dmod, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)

    cases = [
        ("rel", "--size", "2", "--max-degree", "3"),
        ("rel", "--size", "0"),
        ("rel", "--mutate", "0"),
        ("rel", "--mutate", "4", "--suite", "modality"),
        ("poly", "--vars", "1", "--char", "5", "--max-degree", "6", "--suite", "dn"),
        ("poly", "--vars", "2", "--max-degree", "3", "--suite", "extraction"),
    ]
    for case in cases:
        code, doc = report(dmod, *case)
        validator.validate(doc)
        expected = "pass" if code == 0 else "fail"
        if doc["status"] != expected:
            sys.exit(f"{case}: status {doc['status']} with exit {code}")
        print(f"ok {' '.join(case)} ({len(doc['checks'])} checks, {doc['status']})")

    bad = {"config": {}, "checks": [], "status": "maybe"}
    try:
        validator.validate(bad)
    except jsonschema.ValidationError:
        print("ok malformed report rejected")
    else:
        sys.exit("malformed report accepted")


if __name__ == "__main__":
    main()
