# Copyright 2026 The bianchi-uqc Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Runs each CLI command and validates its JSON report against the schema."""

import json
import subprocess
import sys

import jsonschema

COMMANDS = [
    (["subgroups", "--group", "L6a5", "--index", "3"], 0),
    (["signature", "--group", "L6a5", "--max-index", "3"], 0),
    (["homology", "--group", "L6a5"], 0),
    (["homology", "--group", "L6a5", "--index", "3", "--class", "0"], 0),
    (["cusps", "--group", "L6a2", "--index", "4", "--class", "1"], 0),
    (["fill", "--group", "L6a5", "--slope=1,1", "--target", "L5a1"], 0),
    (["fill", "--group", "K4a1", "--slope=1,0", "--order"], 0),
    (["chain"], 0),
    (["mic", "--group", "L6a5", "--index", "3", "--class", "0"], 0),
    (["validate-census", "--entry", "K4a1"], 0),
    (["reproduce", "eta"], 0),
    (["reproduce", "table2"], 1),
    (["reproduce", "table3"], 0),
    (["reproduce", "chain"], 1),
    (["--max-nodes", "30", "--max-index", "4", "signature", "--group", "L8n7"], 1),
]


def main() -> int:
    cli, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path, encoding="utf-8") as fh:
        schema = json.load(fh)
    validator = jsonschema.Draft202012Validator(
        schema, format_checker=jsonschema.Draft202012Validator.FORMAT_CHECKER)
    failures = 0
    for args, expected_code in COMMANDS:
        runs = []
        for _ in range(2):
            proc = subprocess.run([cli, "--deterministic", *args], capture_output=True, text=True,
                                  check=False)
            runs.append(proc)
        proc = runs[0]
        label = " ".join(args)
        problems = []
        if proc.returncode != expected_code:
            problems.append(f"exit {proc.returncode}, expected {expected_code}: {proc.stderr.strip()}")
        if runs[0].stdout != runs[1].stdout:
            problems.append("output differs between identical runs")
        try:
            doc = json.loads(proc.stdout)
            errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.path))
            problems.extend(f"{list(e.path)}: {e.message}" for e in errors[:5])
        except json.JSONDecodeError as exc:
            problems.append(f"not JSON: {exc}")
        status = "ok" if not problems else "FAILED"
        print(f"{status:6} {label}")
        for p in problems:
            print(f"       {p}")
        failures += bool(problems)
    stamped = subprocess.run([cli, "homology", "--group", "L6a5"], capture_output=True, text=True,
                             check=False)
    doc = json.loads(stamped.stdout)
    if "generated_at" not in doc or list(validator.iter_errors(doc)):
        print("FAILED timestamped report")
        failures += 1
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
