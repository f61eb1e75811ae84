#!/usr/bin/env python3
"""Validate subcommand input files against docs/schemas.

usage: validate_inputs.py SCHEMA_DIR SUBCOMMAND=FILE [...]
"""
import json
import pathlib
import sys

import jsonschema
from referencing import Registry, Resource


def main(argv):
    root = pathlib.Path(argv[1])
    resources = []
    for path in root.glob("*.schema.json"):
        doc = json.loads(path.read_text())
        resources.append((doc["$id"], Resource.from_contents(doc)))
    registry = Registry().with_resources(resources)
    failures = 0
    for arg in argv[2:]:
        sub, _, file = arg.partition("=")
        schema = json.loads((root / f"{sub}.schema.json").read_text())
        validator = jsonschema.Draft202012Validator(schema, registry=registry)
        errors = list(validator.iter_errors(json.loads(pathlib.Path(file).read_text())))
        for e in errors:
            print(f"{file}: {e.message}")
        failures += bool(errors)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))
