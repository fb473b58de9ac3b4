"""Driving the JSON command-line surface in-process.

Every result document re-parses and re-verifies: the verify subcommand
recomputes certificates and witnesses with zero tolerance, so a pipeline
can treat emitted documents as portable, checkable artifacts.
"""
import json
import subprocess
import sys


def run(args, payload=None):
    proc = subprocess.run(
        [sys.executable, "-m", "k3lag.cli"] + args,
        input=json.dumps(payload) if payload is not None else None,
        capture_output=True,
        text=True,
    )
    return proc.returncode, json.loads(proc.stdout)


# classify the rank-one lattice of square -4: equality fails.
code, doc = run(["classify", "--input", "-"], {"lattice": {"gram": [["-4"]]}})
print("classify [[-4]] ->", doc["result"], "(exit", code, ")")

# an isotropic fibration witness in the K3 lattice, then verify it.
w = ["1", "1"] + ["0"] * 20
code, syz_doc = run(["syz"], {"host": "K3", "w": w})
print("\nsyz w=e1+f1: ell =", syz_doc["result"]["ell"][:4],
      "checks:", syz_doc["result"]["checks"])
code, verify_doc = run(["verify", "--input", "-"], syz_doc)
print("verify says:", verify_doc["result"]["ok"], "(exit", code, ")")

# tampering is caught by the same verifier.
syz_doc["result"]["ell"] = ["1"] + ["0"] * 21
code, verify_doc = run(["verify", "--input", "-"], syz_doc)
print("tampered document ->", verify_doc["result"]["failures"], "(exit", code, ")")

# deterministic sampling harness: same seed, byte-identical output.
code, s1 = run(["sample", "--count", "5", "--seed", "11"])
code, s2 = run(["sample", "--count", "5", "--seed", "11"])
print("\nsample determinism:", s1 == s2,
      "- successes:", s1["result"]["positive_successes"],
      "positive /", s1["result"]["isotropic_successes"], "isotropic")
