"""Contract tests for the ffva command-line tool.

usage: check_cli.py <ffva binary> <report schema> <data dir>
"""
import csv
import io
import json
import os
import subprocess
import sys
import tempfile
from fractions import Fraction

import jsonschema

CLI, SCHEMA_PATH, DATA = sys.argv[1:4]
CHI = os.path.join(DATA, "chi_example.json")
with open(SCHEMA_PATH) as f:
    SCHEMA = json.load(f)
VALIDATOR = jsonschema.Draft202012Validator(SCHEMA)
failures = []


def run(*args, env=None, stdin=None):
    full_env = dict(os.environ)
    full_env.pop("FFVA_JOBS", None)
    full_env.update(env or {})
    return subprocess.run([CLI, *args], capture_output=True, text=True, env=full_env, input=stdin)


def expect(cond, what):
    if not cond:
        failures.append(what)
        print("FAIL", what)


def report(*args, rc=0, **kw):
    p = run(*args, **kw)
    expect(p.returncode == rc, f"{args}: exit {p.returncode}, expected {rc}: {p.stderr.strip()}")
    doc = json.loads(p.stdout)
    errors = sorted(VALIDATOR.iter_errors(doc), key=str)
    expect(not errors, f"{args}: schema violations {[e.message for e in errors[:3]]}")
    expect(doc["summary"]["checks"] == len(doc["checks"]), f"{args}: summary count")
    expect(doc["pass"] == all(c["pass"] for c in doc["checks"]), f"{args}: pass flag")
    names = [c["name"] for c in doc["checks"]]
    expect(names == sorted(names), f"{args}: checks sorted by name")
    return doc


# every report-producing command validates against the schema
report("verify-relations", "--r=-1..1", "--s=0..1", "--weight", "2")
report("center", "--weight", "2", "--r-max", "2", "--kernel-weight", "2")
report("char", "--identity", "hp", "--order", "10")
report("char", "--identity", "v", "--order", "4")
for check in ["cyclicity", "relations", "submodule", "reach", "homogeneity"]:
    report("whittaker", "--chi", CHI, "--check", check, "--weight", "1", "--charge", "1", "--trials", "2")
for check in ["fixed", "strong-gen", "center", "m-strong-gen", "decoupling"]:
    report("invariants", "--n", "1", "--weight", "2", "--check", check)
acc = report("acceptance", "--criterion", "2", "--criterion", "3", "--format", "json")
expect({c["name"] for c in acc["checks"]} >= {"criterion-2", "criterion-3"}, "acceptance criterion checks")

# timing is opt-in and keeps the report valid
timed = report("--timing", "char", "--identity", "hp", "--order", "5")
expect("seconds" in timed, "--timing adds seconds")
expect("seconds" not in report("char", "--identity", "hp", "--order", "5"), "no seconds by default")

# CSV and JSON encode identical numbers
js = report("char", "--identity", "hp", "--order", "12")
p = run("char", "--identity", "hp", "--order", "12", "--format", "csv")
expect(p.returncode == 0, "csv exit code")
rows = list(csv.DictReader(io.StringIO(p.stdout)))
expect(len(rows) == 3 * 25, f"csv row count {len(rows)}")
series = js["checks"][0]["details"]["series"]
for row in rows:
    want = Fraction(series[row["series"]]["coeffs"][row["exponent"]])
    got = Fraction(int(row["numerator"]), int(row["denominator"]))
    expect(want == got, f"csv/json mismatch at {row}")

# determinism: same seed gives identical bytes, any job count
a = run("--seed", "5", "whittaker", "--chi", CHI, "--check", "submodule", "--trials", "3", "--weight", "2").stdout
b = run("--seed", "5", "whittaker", "--chi", CHI, "--check", "submodule", "--trials", "3", "--weight", "2",
        env={"FFVA_JOBS": "3"}).stdout
c = run("--seed", "6", "whittaker", "--chi", CHI, "--check", "submodule", "--trials", "3", "--weight", "2").stdout
expect(a == b, "submodule report depends on job count")
expect(a != c, "seed does not reach the submodule trials")
r1 = run("--jobs", "1", "invariants", "--n", "2", "--weight", "2", "--check", "strong-gen").stdout
r4 = run("--jobs", "4", "invariants", "--n", "2", "--weight", "2", "--check", "strong-gen").stdout
expect(r1 == r4, "invariants report depends on job count")

# apply: output State JSON feeds back as input
p = run("apply", "--op", "psi+(-1/2)", "--op", "a-(-3/2)")
expect(p.returncode == 0, "apply exit code")
with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as tmp:
    tmp.write(p.stdout)
q = run("apply", "--state", tmp.name, "--op", "E11(0)")
expect(json.loads(q.stdout) == json.loads(p.stdout), "alpha(0) acts by the charge 1 on psi+ a-")
q = run("apply", "--state", "-", "--op", "psi-(1/2)", stdin=p.stdout)
expect(json.loads(q.stdout)["terms"][0]["vector"]["ferm"] == [], "psi-(1/2) removes psi+(-1/2)")
os.unlink(tmp.name)

# enumerate emits one JSON object per line
lines = run("enumerate", "--weight", "2", "--charge", "0").stdout.splitlines()
expect(len(lines) == 1 + 4 + 12, f"V basis up to weight 2 has 17 vectors, got {len(lines)}")
expect(all("weight" in json.loads(l) for l in lines), "enumerate lines carry weights")

# schema subcommand prints the versioned schema
expect(json.loads(run("schema").stdout) == SCHEMA, "schema subcommand matches schemas/report.schema.json")

# usage errors exit 2
for args in [
    [],
    ["frobnicate"],
    ["verify-relations", "--r", "3..1"],
    ["verify-relations", "--r", "1-3"],
    ["verify-relations", "--format", "xml"],
    ["whittaker", "--check", "cyclicity"],
    ["whittaker", "--chi", "/nonexistent.json"],
    ["whittaker", "--chi", "-", "--check", "reach"],
    ["apply", "--op", "E13(0)"],
    ["apply", "--op", "psi+(1)"],
    ["char", "--order", "-1"],
    ["--jobs", "0", "schema"],
    ["acceptance", "--criterion", "10"],
]:
    p = run(*args, stdin="{}")
    expect(p.returncode == 2, f"{args}: exit {p.returncode}, expected 2")
expect(run("--help").returncode == 0, "--help exits 0")

if failures:
    print(f"{len(failures)} failure(s)")
    sys.exit(1)
print("all CLI contract checks passed")
