# Copyright 2026 The pebblekit Authors
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

"""Runs pebblectl subcommands, validates their JSON against schemas/, and checks
determinism, exit codes and a few known values.

Usage: cli_check.py PEBBLECTL SCHEMA_DIR
"""

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema
import referencing

PEBBLECTL, SCHEMAS = sys.argv[1], pathlib.Path(sys.argv[2])

registry = referencing.Registry()
schemas = {}
for path in sorted(SCHEMAS.glob("*.schema.json")):
    doc = json.loads(path.read_text())
    schemas[path.name.removesuffix(".schema.json")] = doc
    registry = registry.with_resource(doc["$id"], referencing.Resource.from_contents(doc))

failures = []


def check(ok, what):
    if not ok:
        failures.append(what)
        print("FAIL", what)


def run(args, want_exit=0):
    p = subprocess.run([PEBBLECTL, *args], capture_output=True, text=True)
    check(p.returncode == want_exit, f"{' '.join(args)}: exit {p.returncode}, wanted {want_exit}: {p.stderr.strip()}")
    return p


def validate(name, text, what):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        check(False, f"{what}: not JSON ({e})")
        return None
    schema = schemas[name]
    validator = jsonschema.Draft202012Validator(schema, registry=registry)
    errors = sorted(validator.iter_errors(doc), key=str)
    check(not errors, f"{what}: {name} schema: {errors[0].message if errors else ''}")
    return doc


def json_cmd(name, args, want_exit=0):
    p = run(args, want_exit)
    doc = validate(name, p.stdout, " ".join(args))
    again = subprocess.run([PEBBLECTL, *args], capture_output=True, text=True)
    check(again.stdout == p.stdout, f"{' '.join(args)}: output differs between runs")
    return doc


def error_cmd(args):
    p = run(args, want_exit=2)
    validate("error", p.stderr, " ".join(args) + " (stderr)")


with tempfile.TemporaryDirectory() as tmp:
    t = pathlib.Path(tmp)

    def f(name):
        return str(t / name)

    # generate
    graphs = {
        "p5": ["generate", "path", "--n", "5"],
        "p8": ["generate", "path", "--n", "8"],
        "k4": ["generate", "complete", "--n", "4"],
        "lm": ["generate", "layered-matching", "--n", "6", "--layers", "3"],
        "sv": ["generate", "svensson", "--layers", "2"],
        "simp": ["generate", "simplified", "--layers", "2"],
        "spc": ["generate", "sparsified", "--layers", "3", "--backbone-kind", "complete"],
        "spr": ["generate", "sparsified", "--layers", "3", "--backbone-kind", "random", "--seed", "9"],
        "sc": ["generate", "superconc", "--n", "6"],
        "xdr": ["generate", "extreme-dr", "--n", "8", "--gamma", "0.25", "--seed", "48", "--degree-factor", "2",
                "--attempts", "200", "--report", f("xdr_report.json")],
    }
    for name, args in graphs.items():
        run(args + ["-o", f(name + ".json")])
        first = pathlib.Path(f(name + ".json")).read_text()
        run(args + ["-o", f(name + ".again.json")])
        check(pathlib.Path(f(name + ".again.json")).read_text() == first, f"generate {name} not deterministic")
        validate("graph", first, "generate " + name)
    validate("extreme-dr", pathlib.Path(f("xdr_report.json")).read_text(), "extreme-dr report")
    run(["generate", "idr", "-i", f("k4.json"), "--gamma", "1", "-o", f("idr.json")])
    validate("graph", pathlib.Path(f("idr.json")).read_text(), "generate idr")
    run(["generate", "overlay", "-i", f("p5.json"), "-o", f("ov.json")])
    ov = validate("graph", pathlib.Path(f("ov.json")).read_text(), "generate overlay")
    check(ov is not None and len(ov["meta"]["outputs"]) == 5, "overlay outputs")
    run(["generate", "ug", "--seed", "3", "--left", "4", "--right", "2", "--labels", "3", "--degree", "2",
         "-o", f("ug.json")])
    validate("ug", pathlib.Path(f("ug.json")).read_text(), "generate ug")
    run(["generate", "svensson", "--ug", f("ug.json"), "--eps", "0.3333333333333333", "-o", f("sv_ug.json")])
    validate("graph", pathlib.Path(f("sv_ug.json")).read_text(), "svensson from a random instance")
    error_cmd(["generate", "svensson", "--ug", f("ug.json"), "--eps", "0.5"])
    for fmt in ("dot", "edgelist"):
        p = run(["generate", "path", "--n", "3", "--format", fmt])
        check(("->" in p.stdout) if fmt == "dot" else p.stdout.startswith("3 2\n"), f"{fmt} export")

    # pebble
    doc = json_cmd("pebbling", ["pebble", "oracle", "-i", f("p5.json")])
    check(doc and doc["cost"]["cumulative"] == 5 and doc["oracle"]["pcc"] == 5, "oracle on path_5 is 5")
    doc = json_cmd("pebbling", ["pebble", "generic", "-i", f("p8.json"), "--set", "3", "--d", "4", "--g", "4",
                                "--csv-out", f("gen.csv"), "--transcript-out", f("gen.txt")])
    check(doc and doc["legality"]["legal"] and doc["legality"]["complete"], "generic attack legal")
    csv = pathlib.Path(f("gen.csv")).read_text().splitlines()
    check(csv[0] == "round,phase,pebbles" and len(csv) == doc["rounds"] + 1, "phase csv rows")
    json_cmd("pebbling", ["pebble", "generic", "-i", f("p8.json"), "--d", "2", "--finish-all"])
    doc = json_cmd("pebbling", ["pebble", "overlay", "-i", f("p5.json"), "--set", "2", "--d", "2", "--g", "2"])
    check(doc and doc["legality"]["legal"] and doc["legality"]["complete"], "overlay attack legal")
    doc = json_cmd("pebbling", ["pebble", "natural", "-i", f("lm.json")])
    check(doc and doc["cost"]["cumulative"] == 12, "natural pebbling of the (6,3) layered matching costs 12")
    json_cmd("pebbling", ["pebble", "everything", "-i", f("sv.json")])
    error_cmd(["pebble", "natural", "-i", f("p5.json")])
    error_cmd(["pebble", "generic", "-i", f("p8.json"), "--set", "3", "--d", "3"])

    # verify
    doc = json_cmd("verify-transcript", ["verify", "transcript", "-i", f("p8.json"), "-t", f("gen.txt")])
    check(doc and doc["passed"], "generic transcript verifies")
    pathlib.Path(f("bad.txt")).write_text("1\n")
    json_cmd("verify-transcript", ["verify", "transcript", "-i", f("p8.json"), "-t", f("bad.txt")], 1)
    pathlib.Path(f("cert.json")).write_text(json.dumps({"set": [3], "d": 5}))
    validate("certificate", pathlib.Path(f("cert.json")).read_text(), "certificate input")
    json_cmd("verify-certificate", ["verify", "certificate", "-i", f("p8.json"), "-c", f("cert.json")])
    pathlib.Path(f("cert_bad.json")).write_text(json.dumps({"set": [3], "d": 4}))
    json_cmd("verify-certificate", ["verify", "certificate", "-i", f("p8.json"), "-c", f("cert_bad.json")], 1)
    json_cmd("verify-superconcentrator", ["verify", "superconcentrator", "-i", f("sc.json")])
    json_cmd("verify-superconcentrator", ["verify", "superconcentrator", "--n", "20", "--samples", "200", "--seed", "4"])
    error_cmd(["verify", "superconcentrator", "--n", "20", "--samples", "200"])
    json_cmd("extreme-dr", ["verify", "extreme-dr", "-i", f("xdr.json"), "--gamma", "0.25"])
    json_cmd("extreme-dr", ["verify", "extreme-dr", "-i", f("p8.json"), "--gamma", "0.25"], 1)

    # analyze
    doc = json_cmd("robustness", ["analyze", "robustness", "-i", f("p8.json"), "--e", "1", "--d", "5"])
    check(doc and doc["verdict"] == "reducible", "path_8 is (1,5)-reducible")
    json_cmd("robustness", ["analyze", "robustness", "-i", f("sv.json"), "--e", "2", "--d", "3", "--tests-only"])
    json_cmd("depth", ["analyze", "depth", "-i", f("sv.json"), "--set", "4,5"])

    # bounds
    doc = json_cmd("bound", ["bounds", "generic", "--e", "1", "--d", "4", "--g", "4", "--n", "8", "--delta", "1"])
    check(doc and doc["exact"] == "104", "generic bound value")
    doc = json_cmd("bound", ["bounds", "dr-lower", "--e", "3", "--d", "4"])
    check(doc and doc["exact"] == "12", "dr-lower value")
    doc = json_cmd("bound", ["bounds", "overlay-lower", "--e", "4", "--d", "2", "--n", "16"])
    check(doc and doc["exact"] == "4", "overlay-lower value")
    json_cmd("bound", ["bounds", "overlay-naive", "--e", "1", "--d", "2", "--g", "2", "--n", "4"])
    json_cmd("bound", ["bounds", "overlay-naive", "--e", "1", "--d", "2", "--g", "2", "--n", "4",
                       "--sc-nodes", "10", "--sc-depth", "3"])
    json_cmd("bound", ["bounds", "overlay-improved", "--e", "1", "--d", "2", "--g", "2", "--n", "4"])
    json_cmd("bound", ["bounds", "overlay-improved", "--e", "1", "--d", "2", "--g", "2", "--n", "4",
                       "--sc-nodes", "10", "--sc-depth", "3", "--delta", "1"])
    error_cmd(["bounds", "generic", "--e", "1", "--d", "5", "--g", "4", "--n", "8", "--delta", "1"])
    doc = json_cmd("gap", ["bounds", "gap", "--c", "2"])
    check(doc and doc["k"] == 249 and doc["gap_verified"] and float(doc["gap_factor_decimal"]) >= 4, "gap at c=2")
    json_cmd("gap", ["bounds", "gap", "--c", "3/2", "--n", "1000000"])
    error_cmd(["bounds", "gap", "--c", "1/2"])
    doc = json_cmd("cor45", ["bounds", "cor45", "--n", "1024", "--k", "2", "--eps", "0.5"])
    check(doc and (doc["e1"], doc["d1"], doc["e2"]) == ("16", "64", "16"), "cor45 values")

    # demo
    doc = json_cmd("demo-example1", ["demo", "example1"])
    check(doc and doc["bits_per_layer"] == 4 and doc["tests_per_layer"] == 8, "example counts")
    check(doc and doc["next_layer_out_degree"] == 6 and doc["symmetry"]["holds"], "example edges and symmetry")

    # errors
    pathlib.Path(f("cyc.json")).write_text('{"n":2,"edges":[[0,1],[1,0]]}')
    p = run(["pebble", "everything", "-i", f("cyc.json")], 2)
    check("[0,1,0]" in p.stderr, "cycle witness in the error")
    validate("error", p.stderr, "cycle error")
    error_cmd(["generate", "extreme-dr", "--n", "8", "--gamma", "0.5"])
    error_cmd(["frobnicate"])

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
