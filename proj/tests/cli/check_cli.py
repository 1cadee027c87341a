#!/usr/bin/env python3
"""End-to-end checks for the applf command line tool."""

import json
import subprocess
import sys

BIN = sys.argv[1]
failures = 0


def run(*args):
    return subprocess.run([BIN, *args], capture_output=True, text=True)


def check(name, cond):
    global failures
    print(f"{'ok' if cond else 'FAIL'}  {name}")
    if not cond:
        failures += 1


# count: the F_3 quadratic curve has four points
r = run("count", "--p", "3", "--N", "2", "--i", "1", "--j", "1",
        "--k", "1", "--lambda", "2")
payload = json.loads(r.stdout)
check("count exit code", r.returncode == 0)
check("count value", payload["result"]["count"] == 4)
check("count echo", payload["command"] == "count" and payload["inputs"]["p"] == 3)

r_naive = run("count", "--p", "3", "--N", "2", "--i", "1", "--j", "1",
              "--k", "1", "--lambda", "2", "--naive")
check("count naive agrees", json.loads(r_naive.stdout)["result"]["count"] == 4)

# genus
r = run("genus", "--N", "3", "--i", "2", "--j", "1", "--k", "1,1")
check("genus value", json.loads(r.stdout)["result"]["genus"] == 3)
check("genus exit", r.returncode == 0)

# hasse
r = run("hasse", "--p", "7", "--s", "1", "--t", "1")
check("hasse value", json.loads(r.stdout)["result"]["hasse"] == 1)

# eval-pd: cubic characters, zero arguments -> the Jacobi sum -1 at level 3
r = run("eval-pd", "--p", "7", "--a", "2", "--b", "2,2", "--c", "0",
        "--lambda", "0,0")
payload = json.loads(r.stdout)
check("eval-pd level", payload["result"]["level"] == 3)
check("eval-pd coeffs", payload["result"]["coeffs"] == [-1, 0])

# the order sugar oN addresses the same character
r_sugar = run("eval-pd", "--p", "7", "--a", "o3", "--b", "o3,o3", "--c", "0",
              "--lambda", "0,0")
check("order sugar", json.loads(r_sugar.stdout)["result"] == payload["result"])

# eval-fd emits numerator and denominator
r = run("eval-fd", "--p", "7", "--a", "2", "--b", "2,2", "--c", "0",
        "--lambda", "2,3")
payload = json.loads(r.stdout)
check("eval-fd shape", "num" in payload["result"] and "den" in payload["result"])
check("eval-fd den", payload["result"]["den"]["coeffs"] == [-1, 0])

# verify sweep: passing primes and skips below 50
r = run("verify", "--id", "hasse-cong", "--primes", "7..50")
payload = json.loads(r.stdout)
check("verify exit", r.returncode == 0)
check("verify status", payload["status"] == "pass")
passes = [e["prime"] for e in payload["reports"] if not e.get("skipped")]
skips = [e["prime"] for e in payload["reports"] if e.get("skipped")]
check("verify primes", passes == [7, 13, 19, 31, 37, 43])
check("verify skips", skips == [11, 17, 23, 29, 41, 47])
check("verify cases", payload["reports"][0]["cases_checked"] == 49)

# byte-identical reruns
r2 = run("verify", "--id", "hasse-cong", "--primes", "7..50")
check("verify deterministic", r.stdout == r2.stdout)

# a failing identity exits 1 and carries counterexamples in the payload
r = run("verify", "--id", "cubic-f1", "--primes", "7")
payload = json.loads(r.stdout)
check("failing verify exit", r.returncode == 1)
check("failing verify status", payload["status"] == "fail")
rep = payload["reports"][0]
check("failing verify counts",
      rep["cases_checked"] == 42 and rep["failure_count"] == 12)
check("failing verify counterexamples",
      len(rep["failures"]) == 12 and "lambda" in rep["failures"][0])
check("failing verify note", "off {0,1}: 0" in rep.get("note", ""))
s1 = run("verify", "--id", "pd-one-minus", "--primes", "13", "--mode", "sample",
         "--seed", "42")
s2 = run("verify", "--id", "pd-one-minus", "--primes", "13", "--mode", "sample",
         "--seed", "42")
check("sampled deterministic", s1.stdout == s2.stdout and s1.returncode == 0)
check("sampled mode recorded",
      json.loads(s1.stdout)["reports"][0]["mode"] == "sampled")

# csv output
r = run("genus", "--N", "3", "--i", "2", "--j", "1", "--k", "1,1",
        "--format", "csv")
check("csv genus", r.stdout == "genus\n3\n")

r = run("eval-pd", "--p", "7", "--a", "2", "--b", "2,2", "--c", "0",
        "--lambda", "0,0", "--format", "csv")
check("csv eval-pd", r.stdout == "value\n3:-1;0\n")

r = run("verify", "--id", "hasse-cong", "--primes", "7..13", "--format", "csv")
lines = r.stdout.strip().split("\n")
check("csv verify header",
      lines[0] == "prime,status,mode,cases_checked,failure_count,note")
check("csv verify rows", lines[1].startswith("7,pass,exhaustive,49,0")
      and lines[2].startswith("11,skip") and lines[3].startswith("13,pass"))

# library errors surface as structured records with exit code 2
r = run("count", "--p", "9", "--N", "2", "--i", "1", "--j", "1",
        "--k", "1", "--lambda", "2")
payload = json.loads(r.stdout)
check("error exit", r.returncode == 2)
check("error code", payload["error"]["code"] == "NotAnOddPrime")
check("error status", payload["status"] == "error")

r = run("count", "--p", "7", "--N", "4", "--i", "1", "--j", "1",
        "--k", "1", "--lambda", "2")
check("bad prime exit", r.returncode == 2)
check("bad prime code", json.loads(r.stdout)["error"]["code"] == "BadPrime")

r = run("verify", "--id", "nonsense", "--primes", "7..11")
check("unknown identity", r.returncode == 2 and
      json.loads(r.stdout)["error"]["code"] == "UnknownIdentity")

r = run("verify", "--id", "cubic-f1", "--primes", "11..9")
check("empty range", r.returncode == 2 and
      json.loads(r.stdout)["error"]["code"] == "EmptyRange")

# usage errors (unknown flags) exit nonzero without JSON
r = run("count", "--bogus", "1")
check("usage error", r.returncode != 0)

print(f"{failures} failure(s)")
sys.exit(1 if failures else 0)
