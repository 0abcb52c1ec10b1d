#!/usr/bin/env python3
"""Run every JSON-producing CLI command on the fixtures and validate against the schema."""
import json
import pathlib
import subprocess
import sys

import jsonschema


def main() -> int:
    exe, schema_dir, fixture_dir = sys.argv[1], pathlib.Path(sys.argv[2]), pathlib.Path(sys.argv[3])
    schema = json.loads((schema_dir / "halphen-cli-output.v1.schema.json").read_text())
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)

    commands = []
    for ideal in sorted(fixture_dir.glob("*.ideal")):
        commands.append(["invariants", "--ideal", str(ideal)])
        commands.append(["hilbert", "--ideal", str(ideal), "--format", "json", "--max-degree", "5"])
    for t in ["0", "1", "1/2", "-2"]:
        commands.append(["invariants", "--ideal", str(fixture_dir / "Ct.ideal.in"), "--param", f"t={t}"])
    for d in range(1, 9):
        for g in range(0, (d - 1) * (d - 2) // 2 + 2):
            commands.append(["classify", str(d), str(g)])
    commands += [
        ["smooth-at", "--ideal", str(fixture_dir / "C0.ideal"), "--point", "1:0:0:0"],
        ["smooth-at", "--ideal", str(fixture_dir / "twisted_cubic.ideal"), "--point", "1:0:0:0"],
        ["smooth-at", "--ideal", str(fixture_dir / "plane_cubic.ideal"), "--point", "0:1:0", "--codim", "1"],
        ["tangent", "--poly", "z*y^2 - x^3 + x*z^2 + z^3", "--point", "0:1:0"],
        ["tangent", "--poly", "x^2 + y^2 - z^2", "--point", "1:0:1"],
        ["tangent", "--poly", "y^2 - z*x", "--point", "1:0:0:0"],
    ]

    failures = 0
    for cmd in commands:
        proc = subprocess.run([exe, *cmd], capture_output=True, text=True)
        if proc.returncode != 0:
            print(f"FAIL (exit {proc.returncode}): {' '.join(cmd)}\n{proc.stderr}")
            failures += 1
            continue
        errors = sorted(validator.iter_errors(json.loads(proc.stdout)), key=lambda e: list(e.path))
        for e in errors:
            print(f"FAIL (schema): {' '.join(cmd)}: {list(e.path)}: {e.message}")
        failures += bool(errors)
    print(f"{len(commands) - failures}/{len(commands)} outputs valid")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
