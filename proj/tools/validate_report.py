#!/usr/bin/env python3
"""Validate a matchspec JSON report, read from stdin, against schema/report.schema.json."""

import json
import pathlib
import sys

import jsonschema

schema_path = pathlib.Path(sys.argv[1]) if len(sys.argv) > 1 else pathlib.Path(__file__).parent.parent / "schema" / "report.schema.json"
schema = json.loads(schema_path.read_text())
report = json.load(sys.stdin)
jsonschema.validate(report, schema)
print(f"valid {report['kind']} report")
