"""Smoke tests for the python module: a thin pass over every bound surface."""

import json
import os
import subprocess
import sys

import sfkit


def check(cond, msg):
    if not cond:
        print("FAIL:", msg)
        sys.exit(1)


def main():
    g = sfkit.Group([4, 2, 3])
    check(g.n == 24, "group order")
    check(g.r1 == 1 and g.r2 == 1 and g.r == 2, "2-primary decomposition")
    check(g.exponent == 12, "exponent")
    check(g.add(1, 3) == 0, "mixed-radix addition")  # 1 + 3 = 4 = 0 mod 4

    z10 = sfkit.parse_group_spec("10")
    check(z10.classify() == "TypeI(2)", "classification")
    check(z10.mu() == 5, "mu")

    check(sfkit.is_sumfree(z10, [1, 3, 5, 7, 9]), "odd coset is sum-free")
    check(not sfkit.is_sumfree(z10, [1, 2, 3]), "1+2=3")
    check(sfkit.mu_star_bruteforce(sfkit.Group([4])) == 3, "mu* of Z4")

    subs = sfkit.index2_subgroups(z10)
    check(len(subs) == 1 and subs[0]["members"] == [0, 2, 4, 6, 8], "index-2 subgroup")

    rep = sfkit.census(sfkit.Group([5]), maximal=True)
    check(rep["f_max"] == 2, "census f_max(Z5)")

    lg = sfkit.build_link_graph(sfkit.Group([9]), [3], [1, 2, 4, 5, 7, 8])
    check(len(lg["edges"]) == 9, "link graph edge count")
    check(lg["components"]["C3xK2"] == 1, "prism component")

    mis = sfkit.enumerate_mis(*sfkit.named_graph("bridge_triangles"))
    check(mis["count"] == 8, "mis of bridged triangles")
    check(sfkit.enumerate_mis(*sfkit.named_graph("matching", 3))["count"] == 8,
          "mis of a 3-edge matching")
    check(sfkit.has_perfect_matching(*sfkit.named_graph("cycle", 4)), "C4 matching")

    fam = sfkit.construct(sfkit.Group([6]), "prop53")
    check(len(fam["sets"]) == 2 and fam["check"]["ok"], "prop53 family on Z6")

    scan = sfkit.conjecture_scan(4, "exhaustive")
    check(scan["max_mis"] == 4 and not scan["counterexamples"], "n=4 scan")

    a = sfkit.gnp_experiment(z10, 0.5, 5, seed=42)
    b = sfkit.gnp_experiment(z10, 0.5, 5, seed=42, workers=2)
    check(a == b, "gnp determinism across worker counts")
    ones = sfkit.gnp_experiment(z10, 1.0, 2, seed=7)
    check(all(s["ratio"] == 1.0 for s in ones), "ratio at p=1")

    claims = sfkit.verify_claims(sfkit.Group([6]))
    check(claims["ok"], "claims on Z6")

    ext = sfkit.count_extensions(sfkit.Group([6]), [0], [1, 3, 5], direct_check=True)
    check(ext["mis_count"] == 2 and ext["maximal_extensions"] == 2, "extension counts")

    # optional: drive the CLI binary if its path was provided
    cli = os.environ.get("SFKIT_BIN")
    if cli:
        out = subprocess.run([cli, "classify", "10"], capture_output=True, text=True)
        check(out.returncode == 0 and "TypeI(2), mu=5" in out.stdout, "CLI classify")
        out = subprocess.run([cli, "census", "5", "--maximal", "--format", "json"],
                             capture_output=True, text=True)
        check(json.loads(out.stdout)["f_max"] == 2, "CLI census json")

    print("smoke ok")


if __name__ == "__main__":
    main()
