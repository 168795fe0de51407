"""Validates zinc-lab JSON reports against the published schema.

usage: validate.py <zinc-lab> <report.schema.json>
"""

import json
import subprocess
import sys

import jsonschema

INVOCATIONS = [
    (["classify", "Z(4)"], 0),
    (["classify", "M(2,Z(2))"], 0),
    (["--full-sets-limit", "4", "classify", "T(2,Z(4))"], 0),
    (["--timings", "classify", "H(Z(2))"], 0),
    (["check", "zinc", "M(2,Z(2))"], 0),
    (["check", "zinc", "M(2,Z(3))"], 1),
    (["check", "weakly_semicommutative", "M(2,Z(2))"], 1),
    (["check", "weakly_clean", "Z(6)"], 0),
    (["--timings", "check", "j_clean", "T(2,Z(2))"], 0),
    (["witness", "zi", "M(2,Z(2))", "1"], 0),
    (["witness", "zi", "M(2,Z(2))", "6"], 1),
    (["verify", "S15"], 0),
    (["verify", "S11"], 0),
    (["--timings", "verify", "S6"], 0),
    (["verify", "all"], 0),
    (["corpus"], 0),
]


def run(lab, args):
    proc = subprocess.run([lab, "--format", "json", *args], capture_output=True, text=True, check=False)
    return proc.returncode, proc.stdout


def main():
    lab, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path, encoding="utf-8") as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)

    failures = 0
    for args, expected in INVOCATIONS:
        code, out = run(lab, args)
        label = " ".join(args)
        if code != expected:
            print(f"FAIL {label}: exit {code}, expected {expected}")
            failures += 1
            continue
        errors = sorted(validator.iter_errors(json.loads(out)), key=lambda e: list(e.path))
        for e in errors[:5]:
            print(f"FAIL {label}: {'/'.join(map(str, e.path))}: {e.message}")
        failures += bool(errors)
        if "--timings" not in args and args[0] != "verify":
            _, again = run(lab, ["--threads", "3", *args])
            if again != out:
                print(f"FAIL {label}: output differs across thread counts")
                failures += 1
        if not errors:
            print(f"ok   {label}")

    code, out = run(lab, ["check", "zinc", "M(2,Z(2)"])
    if code != 2 or out:
        print("FAIL parse error must exit 2 with an empty document")
        failures += 1
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
