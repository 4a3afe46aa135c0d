"""Validate CLI JSON output against one definition of the schema file.

usage: validate_json.py SCHEMA DEF EXE ARGS...
"""
import json
import subprocess
import sys

import jsonschema


def main() -> int:
    schema_path, definition, exe, *args = sys.argv[1:]
    with open(schema_path, encoding="utf-8") as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    wrapped = {"$ref": f"#/$defs/{definition}", "$defs": schema["$defs"]}
    out = subprocess.run([exe, *args], check=True, capture_output=True, text=True).stdout
    jsonschema.Draft202012Validator(wrapped).validate(json.loads(out))
    print(f"{definition}: ok")
    return 0


if __name__ == "__main__":
    sys.exit(main())
