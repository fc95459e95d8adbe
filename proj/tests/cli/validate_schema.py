"""Validates the shipped jobs and four-term data files against docs/job.schema.json."""
import json
import sys
from pathlib import Path

import jsonschema

root = Path(sys.argv[1])
schema = json.loads((root / "docs/job.schema.json").read_text())
jsonschema.Draft202012Validator.check_schema(schema)
validator = jsonschema.Draft202012Validator(schema)

failed = False
files = sorted((root / "jobs").glob("*.json")) + sorted((root / "data/fourterm").glob("*.json"))
for path in files:
    errors = list(validator.iter_errors(json.loads(path.read_text())))
    if errors:
        failed = True
        print(f"{path.name}: {errors[0].message}")
print(f"{len(files)} files checked")
sys.exit(1 if failed else 0)
