"""Validate configs and CLI outputs against the JSON schemas in docs/schema.

usage: validate_schema.py SCHEMA_DIR CLI CONFIG_DIR OUT_DIR
"""

import json
import pathlib
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource


def load(path):
    with open(path) as f:
        return json.load(f)


def main():
    schema_dir, cli, cfg_dir, out_dir = map(pathlib.Path, sys.argv[1:5])
    schemas = {p.name: load(p) for p in schema_dir.glob("*.schema.json")}
    registry = Registry().with_resources(
        (s["$id"], Resource.from_contents(s)) for s in schemas.values()
    )

    def validator(name):
        return jsonschema.Draft202012Validator(schemas[name], registry=registry)

    config_v = validator("config.schema.json")
    result_v = validator("result.schema.json")
    gens_v = validator("generators.schema.json")
    out_dir.mkdir(parents=True, exist_ok=True)

    failures = 0
    checked = 0
    for cfg in sorted(cfg_dir.glob("*.json")):
        doc = load(cfg)
        if isinstance(doc, list):
            errors = list(gens_v.iter_errors(doc))
        else:
            errors = list(config_v.iter_errors(doc))
            if not errors:
                out = out_dir / f"schema_{cfg.stem}.json"
                rc = subprocess.run([str(cli), "run", "--config", str(cfg), "--out", str(out), "--quiet"]).returncode
                if rc not in (0, 1):
                    print(f"{cfg.name}: cli exited {rc}")
                    failures += 1
                    continue
                errors = list(result_v.iter_errors(load(out)))
        checked += 1
        for e in errors:
            print(f"{cfg.name}: {'/'.join(map(str, e.absolute_path))}: {e.message}")
        failures += bool(errors)

    print(f"{checked} documents checked, {failures} failed")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
