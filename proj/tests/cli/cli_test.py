"""Exit codes and example outputs of the saito command line tool."""
import json
import os
import subprocess
import sys
import tempfile

SAITO = sys.argv[1]
failures = []


def run(*args, env=None):
    p = subprocess.run([SAITO, *args], capture_output=True, text=True, env=env)
    return p.returncode, p.stdout, p.stderr


def check(cond, what):
    print(("ok    " if cond else "FAIL  ") + what)
    if not cond:
        failures.append(what)


code, out, _ = run("info", "--family", "wreath", "--r", "1", "--n", "3")
j = json.loads(out)
check(code == 0 and j["hyperplanes"] == 6 and j["free"] and j["all_conditions"], "info wreath r=1: 6 hyperplanes, free")

code, out, _ = run("info", "--family", "braid", "--n", "4")
j = json.loads(out)
check(code == 0 and j["hyperplanes"] == 6 and j["free"], "info braid n=4: 6 hyperplanes, free")

with tempfile.TemporaryDirectory() as d:
    bad = os.path.join(d, "bad.json")
    with open(bad, "w") as f:
        json.dump({"n": 2, "forms": [[1, 0], [0, 1], [1, 1], [1, -1], [0, 3]]}, f)
    code, _, err = run("info", "--file", bad)
    check(code == 2 and "forms 2 and 5 proportional" in err, "info on repeated hyperplane: exit 2, names forms 2 and 5")

    broken = os.path.join(d, "broken.json")
    with open(broken, "w") as f:
        f.write('{"n": 2,\n  "forms": [[1, 0]\n')
    code, _, err = run("info", "--file", broken)
    check(code == 2 and "line" in err and "column" in err, "malformed file: exit 2 with line and column")

    good = os.path.join(d, "good.json")
    with open(good, "w") as f:
        json.dump({"n": 2, "forms": [[1, 0], [0, 1], [1, -1]], "basis": [["x1", "x2"], ["0", "x2^2 - x1*x2"]]}, f)
    code, out, _ = run("check", "--file", good)
    check(code == 0 and json.loads(out)["pass"], "check on a triangular file basis")

    square = os.path.join(d, "square.json")
    with open(square, "w") as f:
        json.dump({"n": 2, "forms": [[1, 0], [0, 1], [1, -1]], "basis": [["x1", "x2"], ["x1^2", "x2^2"]]}, f)
    code, out, _ = run("check", "--file", square)
    j = json.loads(out)
    check(code == 1 and j["saito"]["holds"] and not j["triangular"], "check on a free but non-triangular basis: exit 1")

    nontangent = os.path.join(d, "nontangent.json")
    with open(nontangent, "w") as f:
        json.dump({"n": 2, "forms": [[1, 0], [0, 1], [1, -1]], "basis": [["x1", "x2"], ["x2^2", "x1^2"]]}, f)
    code, out, _ = run("check", "--file", nontangent)
    check(code == 1 and not json.loads(out)["pass"], "check on a non-tangent basis: exit 1")

code, out, _ = run("cohomology", "--space", "coker", "--family", "wreath", "--r", "1", "--weights", "-1..6")
j = json.loads(out)
dims = [row["dim"] for row in j["per_weight"]]
check(code == 0 and [row["weight"] for row in j["per_weight"]] == list(range(-1, 7)) and dims[0] == 3,
      "coker on -1..6 starts at 3: %s" % dims)

code, out, _ = run("cohomology", "--space", "h1su", "--family", "wreath", "--r", "2", "--max-order", "3")
j = json.loads(out)
check(code == 0 and j["match"] is True and j["bounds"]["max_order"] == 3, "h1su r=2 order 3 matches predict-h1")

code, out, _ = run("cohomology", "--space", "ce-s", "--family", "braid_deleted", "--n", "2")
check(code == 0 and json.loads(out)["total"] == 3, "ce-s braid_deleted n=2 total 3")

code, out, _ = run("verify", "--suite", "center", "--family", "wreath", "--r", "2")
check(code == 0 and json.loads(out)["pass"], "verify center r=2 passes")

code, out, _ = run("verify", "--suite", "hh1", "--family", "wreath", "--r", "1")
j = json.loads(out)
check(code == 0 and j["suites"][0]["items"][0]["actual"]["total"] == 6, "verify hh1 r=1 total 6")

code, out, _ = run("verify", "--suite", "commutation", "--family", "wreath", "--r", "1")
j = json.loads(out)
items = j["suites"][0]["items"]
ec = [i for i in items if i["name"].startswith("[E,C] against")]
check(code == 0 and ec and ec[0]["informational"] and ec[0]["expected"] != ec[0]["actual"],
      "verify commutation r=1 reports [E,C] next to the claimed constant")

code, out, _ = run("verify", "--suite", "dsharp", "--family", "wreath", "--r", "2")
check(code == 1 and not json.loads(out)["pass"], "verify dsharp r=2 exits 1 on the eta_2, eta_3 mismatch")

code, _, _ = run("verify", "--suite", "bogus")
check(code == 2, "unknown suite: exit 2")
code, _, _ = run("cohomology", "--space", "h1su", "--weights", "5..1")
check(code == 2, "reversed window: exit 2")
code, _, _ = run("cohomology", "--space", "h1su", "--max-order", "0")
check(code == 2, "zero order bound: exit 2")
code, _, _ = run("info", "--family", "wreath", "--file", "x.json")
check(code == 2, "two sources: exit 2")
code, _, _ = run("cohomology", "--space", "ce-h1", "--family", "braid", "--n", "4")
check(code == 2, "ce-h1 for n = 4: exit 2")
code, _, _ = run()
check(code == 2, "no verb: exit 2")

env = dict(os.environ, SAITO_WORKBENCH_SEED="42")
a = run("verify", "--suite", "pbw", "--r", "1", env=env)
b = run("verify", "--suite", "pbw", "--r", "1", env=env)
check(a == b and json.loads(a[1])["seed"] == 42, "seeded runs are identical")
j1 = run("cohomology", "--space", "h1su", "--r", "1", "--jobs", "1")[1]
j4 = run("cohomology", "--space", "h1su", "--r", "1", "--jobs", "4")[1]
check(j1 == j4, "--jobs does not change the output")

sys.exit(1 if failures else 0)
