#!/usr/bin/env python3
"""End-to-end checks of the divisor-series CLI: schemas, determinism, exit codes."""

import json
import subprocess
import sys

CLI = sys.argv[1]
DATA = sys.argv[2]

failures = []


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


def check(name, ok, detail=""):
    print(f"{'ok' if ok else 'FAIL'} - {name}" + (f" [{detail}]" if detail and not ok else ""))
    if not ok:
        failures.append(name)


# facets: table contents and exit 0
r = run("facets", "--input", f"{DATA}/curve_a.json")
doc = json.loads(r.stdout)
check("facets exit code", r.returncode == 0, str(r.returncode))
check(
    "facets table",
    [f["normal"] for f in doc["facets"]] == [[1, 1], [1, 2]]
    and [f["integer_length"] for f in doc["facets"]] == [1, 2]
    and doc["nondegenerate"] is True,
)

# facets: degenerate input rejected with the offending facet, exit 2
r = run("facets", "--input", f"{DATA}/degenerate.json")
doc = json.loads(r.stdout)
check("degenerate facets exit code", r.returncode == 2, str(r.returncode))
check("degenerate facet reported", doc["degenerate_facets"] == [[1, 2]])

# facets: monomial germ warns but succeeds
r = run("facets", "--input", f"{DATA}/monomial.json")
doc = json.loads(r.stdout)
check("monomial exit code", r.returncode == 0, str(r.returncode))
check("monomial warning", doc["facets"] == [] and "warning" in doc)

# poincare compare: agreement and the expected series
r = run("poincare", "--input", f"{DATA}/curve_a.json", "--method", "compare", "--degree", "6")
doc = json.loads(r.stdout)
check("poincare exit code", r.returncode == 0, str(r.returncode))
check("poincare verdict", doc["comparison"]["verdict"] == "agree")
check("poincare series", doc["oracle"]["terms"] == [[[0, 0], "1"], [[1, 2], "1"]])
check(
    "poincare methods",
    doc["comparison"]["methods"] == ["theorem1", "corollary", "oracle"],
    str(doc["comparison"]["methods"]),
)

# determinism: byte-identical reruns
r2 = run("poincare", "--input", f"{DATA}/curve_a.json", "--method", "compare", "--degree", "6")
check("byte-stable output", r.stdout == r2.stdout)

# round-trip: canonical serialization re-parses to the same document
check("round-trip", json.loads(r.stdout) == doc)

# corollary on the cusp in text format
r = run("poincare", "--input", f"{DATA}/cusp.json", "--method", "corollary", "--format", "text")
check("corollary exit code", r.returncode == 0, str(r.returncode))
check(
    "corollary text form",
    "(1 - t^2)^-1 * (1 - t^3)^-1 * (1 - t^6)" in r.stdout,
    r.stdout,
)

# order: the worked example value with branch cross-check
r = run(
    "order",
    "--input", f"{DATA}/curve_a.json",
    "--g", '[{"exp":[0,2],"coef":"1"},{"exp":[4,0],"coef":"-1"}]',
    "--facet", "1,2",
)
doc = json.loads(r.stdout)
check("order exit code", r.returncode == 0, str(r.returncode))
check("order value", doc["newton_order"] == {"kind": "finite", "value": 5})
check("order agreement", doc["agreement"] is True)

# order: g in the ideal reports the bound
r = run(
    "order",
    "--input", f"{DATA}/curve_a.json",
    "--g", '[{"exp":[0,3],"coef":"1"},{"exp":[1,2],"coef":"1"},{"exp":[5,0],"coef":"-1"}]',
    "--facet", "1,2",
    "--bound", "17",
)
doc = json.loads(r.stdout)
check("ideal order bound", doc["newton_order"] == {"kind": "at_least", "bound": 17})
check("ideal order text", ">= 17" in doc["newton_order_text"])

# oracle on branch input
r = run("poincare", "--input", f"{DATA}/two_lines_branches.json", "--method", "oracle", "--degree", "5")
doc = json.loads(r.stdout)
check("branch oracle exit code", r.returncode == 0, str(r.returncode))
check("branch oracle series", doc["oracle"]["terms"] == [[[0, 0], "1"]])

# graph input: formulas agree, oracle is refused
r = run("poincare", "--input", f"{DATA}/two_lines_graph.json", "--method", "compare", "--degree", "5")
doc = json.loads(r.stdout)
check("graph compare exit code", r.returncode == 0, str(r.returncode))
check("graph compare verdict", doc["comparison"]["verdict"] == "agree")
r = run("poincare", "--input", f"{DATA}/two_lines_graph.json", "--method", "oracle")
check("graph oracle refused", r.returncode == 2 and "oracle requires branches" in r.stderr, r.stderr)

# scope error: irrational Puiseux roots -> exit 3 with guidance
r = run("poincare", "--input", f"{DATA}/irrational.json", "--method", "oracle")
check("irrational exit code", r.returncode == 3, str(r.returncode))
check("irrational guidance", "parametrizations" in r.stderr, r.stderr)

# invalid input: missing file
r = run("facets", "--input", f"{DATA}/no_such_file.json")
check("missing file exit code", r.returncode == 2, str(r.returncode))

# emit-tests fixture block
r = run("poincare", "--input", f"{DATA}/cusp.json", "--degree", "8", "--emit-tests")
doc = json.loads(r.stdout)
check("fixture block", doc["fixture"]["schema"] == "divisor-series/fixture/1")

if failures:
    print(f"{len(failures)} CLI check(s) failed: {failures}")
    sys.exit(1)
print("all CLI checks passed")
