"""Validate CLI reports and serialized samples against the shipped schemas."""

import json
import pathlib
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource

schema_dir = pathlib.Path(sys.argv[1])
cli = sys.argv[2]
samples = pathlib.Path(sys.argv[3])

schemas = {p.name: json.loads(p.read_text()) for p in schema_dir.glob("*.schema.json")}
registry = Registry().with_resources((name, Resource.from_contents(s)) for name, s in schemas.items())


def check(schema_name, instance, label):
    validator = jsonschema.Draft202012Validator(schemas[schema_name], registry=registry)
    errors = sorted(validator.iter_errors(instance), key=str)
    if errors:
        print(f"{label}: {errors[0].message}")
        sys.exit(1)
    print(f"{label}: ok")


for args in (["verify", "--n", "1,2", "--samples", "5"],
             ["verify", "--n", "2", "--samples", "5", "--timings"],
             ["classify", "--n", "2,3"],
             ["classify", "--bundle", "--n", "2", "--cap", "3", "--samples", "5"]):
    out = subprocess.run([cli, *args], capture_output=True, text=True, check=False)
    check("report.schema.json", json.loads(out.stdout), " ".join(args))

for path in sorted(samples.glob("*.json")):
    schema = path.name.split(".")[0] + ".schema.json"
    check(schema, json.loads(path.read_text()), path.name)
