import json
import subprocess
import sys

import jsonschema

binary, schema_path = sys.argv[1], sys.argv[2]
with open(schema_path) as fh:
    schema = json.load(fh)
validator = jsonschema.Draft202012Validator(schema)

runs = [
    ["spectrum", "--case", "rosen-morse", "--ky", "0"],
    ["spectrum", "--case", "lorentz-scarf2", "--verify", "--timing"],
    ["spectrum", "--case", "example2", "--verify"],
    ["zero-modes", "--case", "example4"],
    ["zero-modes", "--case", "example3"],
    ["bands", "--b", "0.5", "--count", "6"],
]
failed = 0
for args in runs:
    proc = subprocess.run([binary, *args], capture_output=True, text=True)
    if proc.returncode not in (0, 1):
        print("exit", proc.returncode, args, proc.stderr)
        failed += 1
        continue
    errors = list(validator.iter_errors(json.loads(proc.stdout)))
    for e in errors:
        print(" ".join(args), "->", e.message)
    failed += bool(errors)
    print("ok" if not errors else "invalid", " ".join(args))
sys.exit(1 if failed else 0)
