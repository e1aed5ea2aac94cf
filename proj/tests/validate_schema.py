"""Runs the CLI on a small batch and validates every JSON line against the schema."""

import json
import subprocess
import sys
import tempfile

import jsonschema


def main() -> int:
    binary, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path, encoding="utf-8") as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)

    curves = ["5 9 11 20", "1,2,3", "1 4 21 85", "2,10,22,57", "1 3 11 13", "4 6 8", "x y"]
    with tempfile.NamedTemporaryFile("w", suffix=".txt", delete=False) as f:
        f.write("\n".join(curves) + "\n")
        path = f.name

    runs = [
        [binary, "batch", "--input", path, "--format", "json", "--jobs", "2"],
        [binary, "batch", "--input", path, "--format", "json", "--verify", "--sigma", "--sigma-method", "both"],
        [binary, "invariants", "12", "17", "20", "29", "--format", "json", "--verify", "--sigma"],
    ]
    count = 0
    for cmd in runs:
        out = subprocess.run(cmd, capture_output=True, text=True, check=False).stdout
        for line in out.splitlines():
            validator.validate(json.loads(line))
            count += 1
    expected = 2 * len(curves) + 1
    if count != expected:
        print(f"expected {expected} JSON lines, got {count}")
        return 1
    print(f"{count} lines valid")
    return 0


if __name__ == "__main__":
    sys.exit(main())
