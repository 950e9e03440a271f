"""Validates JSON output of every subcommand against the published schema."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema

INVOCATIONS = [
    ["chern", "--n", "4", "(O(1)+O(3))@(-1)"],
    ["chern", "--n", "8", "N{r=2,c=[1,0,0],d=3}"],
    ["secants", "--n", "8", "--j", "1", "N{r=2,c=[1,1,1]}"],
    ["secants", "--n", "10", "--j", "3", "O(3)+O(4)"],
    ["trisecant", "--n", "8", "N{r=2,c=[1,4,4]}"],
    ["trisecant", "--n", "2", "N{r=3,c=[1,1,2,3]}"],
    ["normality", "--n", "18", "--j", "2", "O(3)+O(3)"],
    ["normality", "--n", "7", "--j", "1", "N{r=2,c=[1,4,4]}"],
    ["normality", "--n", "18", "--j", "2", "N{r=2,c=[1,6,9]}"],
    ["segre", "--n", "4", "--k", "2", "N{r=2,c=[1,4,4]}"],
    ["verify", "--suite", "lemma51"],
    ["verify", "--suite", "bterm-experiment"],
]


def main() -> int:
    cli, schema_path = sys.argv[1], sys.argv[2]
    schema = json.loads(Path(schema_path).read_text())
    validator = jsonschema.Draft202012Validator(schema)
    documents = []
    for args in INVOCATIONS:
        out = subprocess.run([cli, *args, "--format", "json"], check=True,
                             capture_output=True, text=True).stdout
        documents.append((" ".join(args), json.loads(out)))
    with tempfile.TemporaryDirectory() as tmp:
        path = Path(tmp) / "census.json"
        subprocess.run([cli, "census", "--r", "2", "--degrees", "1..3", "--n", "6..9", "--j", "2",
                        "--out", str(path), "--format", "json"], check=True, capture_output=True)
        documents.append(("census", json.loads(path.read_text())))
    failures = 0
    for name, doc in documents:
        errors = list(validator.iter_errors(doc))
        for e in errors:
            print(f"{name}: {e.json_path}: {e.message}")
        failures += bool(errors)
    print(f"{len(documents) - failures}/{len(documents)} documents valid")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
