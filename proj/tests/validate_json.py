"""Validate every subcommand's JSON output against the shipped schemas."""

import json
import os
import subprocess
import sys
import tempfile

import jsonschema

CLI, SCHEMAS = sys.argv[1], sys.argv[2]

RUNS = [
    ("derive", ["derive"]),
    ("derive", ["--e2-mode", "precise", "derive"]),
    ("charge", ["charge"]),
    ("charge", ["charge", "--d", "2"]),
    ("potential", ["potential", "--count", "5"]),
    ("potential", ["potential", "--alpha", "0.5", "--sigma", "2", "--from", "0.1", "--to", "4", "--log"]),
    ("field", ["field", "--count", "6"]),
    ("field", ["field", "--m", "2", "--radius", "0.3", "--energy", "5", "--count", "4"]),
    ("linearize", ["linearize"]),
    ("linearize", ["--l", "2", "linearize"]),
    ("spectrum", ["spectrum"]),
    ("spectrum", ["spectrum", "--alpha", "1", "--sigma", "0", "--mu", "1", "--n", "2"]),
    ("spectrum", ["spectrum", "--sweep", "1,2,3"]),
    ("confinement", ["confinement"]),
    ("confinement", ["--e2-mode", "precise", "confinement", "--sigma", "500"]),
]


def load(name):
    with open(os.path.join(SCHEMAS, name + ".schema.json")) as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    return jsonschema.Draft202012Validator(schema)


def main():
    failures = 0
    for schema_name, args in RUNS:
        cmd = [CLI, "--format", "json", *args]
        proc = subprocess.run(cmd, capture_output=True, text=True)
        label = " ".join(args)
        if proc.returncode != 0:
            print(f"FAIL {label}: exit {proc.returncode}: {proc.stderr.strip()}")
            failures += 1
            continue
        errors = list(load(schema_name).iter_errors(json.loads(proc.stdout)))
        for e in errors[:3]:
            print(f"FAIL {label}: {e.message} at {list(e.absolute_path)}")
        failures += bool(errors)
        if not errors:
            print(f"ok   {label}")

    with tempfile.TemporaryDirectory() as tmp:
        csv = os.path.join(tmp, "state.csv")
        proc = subprocess.run([CLI, "--format", "csv", "--output", csv, "spectrum", "--n", "2"],
                              capture_output=True, text=True)
        sidecar = os.path.join(tmp, "state.json")
        if proc.returncode != 0 or not os.path.exists(sidecar):
            print(f"FAIL sidecar: {proc.stderr.strip()}")
            failures += 1
        else:
            with open(sidecar) as f:
                errors = list(load("bound_state_sidecar").iter_errors(json.load(f)))
            for e in errors[:3]:
                print(f"FAIL sidecar: {e.message}")
            failures += bool(errors)
            if not errors:
                print("ok   spectrum sidecar")

    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
