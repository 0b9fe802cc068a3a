"""Validates every JSON golden report and every well-formed scenario fixture
against the schemas in docs/schema with the jsonschema package."""
import glob
import json
import os
import sys

import jsonschema

root = sys.argv[1]
prefixes = {"condops": "condops", "check_aip": "check-aip", "check_na": "check-na", "price": "price",
            "ergodic": "ergodic"}
validator = jsonschema.Draft202012Validator
failures = 0
count = 0
for path in sorted(glob.glob(os.path.join(root, "tests/golden/*_json.out"))):
    base = os.path.basename(path)
    key = next(v for k, v in prefixes.items() if base.startswith(k))
    schema = json.load(open(os.path.join(root, "docs/schema", key + ".schema.json")))
    validator.check_schema(schema)
    errors = list(validator(schema).iter_errors(json.load(open(path))))
    count += 1
    for e in errors:
        failures += 1
        print(f"{base}: {e.message}")
scenario_schema = json.load(open(os.path.join(root, "docs/schema/scenario.schema.json")))
for path in sorted(glob.glob(os.path.join(root, "scenarios/*.json"))):
    if os.path.basename(path) == "decimal_weight.json":
        continue
    count += 1
    for e in validator(scenario_schema).iter_errors(json.load(open(path))):
        failures += 1
        print(f"{os.path.basename(path)}: {e.message}")
print(f"{count} documents checked, {failures} schema errors")
sys.exit(1 if failures else 0)
