"""Validates --json output of every CLI command against docs/report.schema.json.

usage: schema_check.py <invsum binary> <schema path>
"""

import json
import subprocess
import sys

import jsonschema

RUNS = [
    (["analyze", "0-12,45,57"], 0),
    (["analyze", "0-4", "--theta", "0.1"], 0),
    (["analyze", "0,1,2,20-22,40-42"], 0),
    (["cover", "0,1,3,4,6"], 0),
    (["cover", "0-12,45,57", "--budget", "25"], 0),
    (["iso", "0,1,2,4", "0-3"], 0),
    (["iso", "0,1,3,4,6", "(0,0);(0,1);(1,0);(1,1);(2,0)", "--method", "definitional"], 0),
    (["iso", "0-12,45,57", "--embed"], 0),
    (["iso", "--progression", "0,1,2,4,2"], 0),
    (["verify", "--max-span", "11", "--claims", "all", "--workers", "2"], None),
    (["search", "--k", "7", "--max-span", "16"], None),
    (["search", "--k", "8", "--max-span", "30", "--budget", "20000", "--steps", "500"], None),
    (["examples", "--max-span", "200"], 0),
    (["histogram", "--max-span", "9"], 0),
]


def main() -> int:
    binary, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    failed = 0
    for args, want_code in RUNS:
        proc = subprocess.run([binary, *args, "--json"], capture_output=True, text=True)
        label = " ".join(args)
        if want_code is not None and proc.returncode != want_code:
            print(f"FAIL {label}: exit {proc.returncode}\n{proc.stderr}")
            failed += 1
            continue
        if proc.returncode not in (0, 1):
            print(f"FAIL {label}: exit {proc.returncode}\n{proc.stderr}")
            failed += 1
            continue
        doc = json.loads(proc.stdout)
        errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.path))
        if errors:
            failed += 1
            print(f"FAIL {label}: {errors[0].message} at {list(errors[0].path)}")
            continue
        if json.loads(json.dumps(doc)) != doc:
            failed += 1
            print(f"FAIL {label}: does not round-trip")
            continue
        print(f"ok   {label}")
    # JSON-lines records validate individually.
    proc = subprocess.run([binary, "search", "--k", "7", "--max-span", "16", "--jsonl"],
                          capture_output=True, text=True)
    record_schema = {"$ref": "#/$defs/searchRecord", "$defs": schema["$defs"]}
    for line in proc.stdout.splitlines():
        try:
            jsonschema.validate(json.loads(line), record_schema,
                                cls=jsonschema.Draft202012Validator)
        except jsonschema.ValidationError as e:
            failed += 1
            print(f"FAIL jsonl record: {e.message}")
            break
    else:
        print(f"ok   search --jsonl ({len(proc.stdout.splitlines())} records)")
    print(f"{failed} failures")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
