"""Golden outputs and exit codes for the chroma command-line tool.

Usage: cli_test.py PATH_TO_CHROMA
"""

import json
import os
import subprocess
import sys
import tempfile
import unittest

CHROMA = None

K2 = {"n": 2, "edges": [[0, 1]], "weights": [1, 1]}
E2 = {"n": 2, "edges": [], "weights": [1, 1]}
P3 = {"n": 3, "edges": [[0, 1], [1, 2]], "weights": [2, 1, 1]}
P3_RELABELED = {"n": 3, "edges": [[0, 2], [1, 2]], "weights": [2, 1, 1]}


def run(*args, stdin=None, env=None):
    return subprocess.run([CHROMA, *args], input=stdin, capture_output=True, text=True, env=env)


class Cli(unittest.TestCase):
    def setUp(self):
        self.dir = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.dir.cleanup()

    def write(self, name, obj):
        path = os.path.join(self.dir.name, name)
        with open(path, "w") as f:
            json.dump(obj, f)
        return path

    def test_compute_text(self):
        r = run("compute", self.write("k2.json", K2), "--host", "complete:3")
        self.assertEqual(r.returncode, 0)
        self.assertEqual(r.stdout, "2·x1·x2 + 2·x1·x3 + 2·x2·x3\n")

    def test_compute_json_default_host(self):
        r = run("compute", self.write("p3.json", P3), "--format", "json")
        self.assertEqual(r.returncode, 0)
        data = json.loads(r.stdout)
        self.assertEqual(data["host"], "complete:5")
        self.assertEqual(data["variables"], ["x1", "x2", "x3", "x4", "x5"])

    def test_compute_dag_from_stdin(self):
        r = run("compute", "-", "--kind", "dag", "--host", "complete:2", stdin='{"n":2,"arcs":[[0,1]]}')
        self.assertEqual(r.stdout, "x1^2·x2 + x1·x2^2\n")

    def test_expand(self):
        p3 = self.write("p3.json", P3)
        r = run("expand", p3, "--k", "1")
        self.assertEqual(r.stdout, "+p[2,1,1] -p[3,1] -p[2,2] +p[4]\n")
        r = run("expand", p3, "--k", "2")
        self.assertEqual(r.returncode, 0)
        self.assertEqual(len(r.stdout.split()), 11)
        self.assertTrue(r.stdout.startswith("+p[{0,1}]·p[{0,1}]·p[{0,1}x2] -p[{0,1}]·p[{0,1}x3]"))

    def test_compare_isomorphic(self):
        r = run("compare", self.write("a.json", P3), self.write("b.json", P3_RELABELED))
        self.assertEqual(r.returncode, 0)
        self.assertEqual(r.stdout.splitlines()[0], "ISOMORPHIC")
        self.assertTrue(r.stdout.splitlines()[1].startswith("bijection: "))

    def test_compare_separated(self):
        a, b = self.write("k2.json", K2), self.write("e2.json", E2)
        r = run("compare", a, b)
        self.assertEqual(r.returncode, 1)
        self.assertEqual(r.stdout, 'SEPARATED\nwitness: {"edges":[],"n":2,"weights":[1,1]}\ncounts: 0 vs 2\n')
        r = run("compare", a, b, "--strategy", "host-grid")
        self.assertEqual(r.returncode, 1)
        self.assertEqual(r.stdout, "SEPARATED\nhost: complete:1\nmonomial: x1^2\ncoefficients: 0 vs 1\n")

    def test_bad_input(self):
        r = run("compute", "-", stdin="{bad")
        self.assertEqual(r.returncode, 2)
        self.assertIn("parse-error", r.stderr)
        r = run("compute", self.write("k2.json", K2), "--host", "kneser:3")
        self.assertEqual(r.returncode, 2)
        r = run("compare", self.write("x.json", {"n": 2, "edges": [[0, 0]], "weights": [1, 1]}),
                self.write("k2.json", K2))
        self.assertEqual(r.returncode, 2)

    def test_verify(self):
        r = run("verify", "--suite", "nope")
        self.assertEqual(r.returncode, 2)
        r = run("verify", "--suite", "power-sum", "--trials", "50", "--seed", "7")
        self.assertEqual(r.returncode, 0)
        self.assertEqual(r.stdout, "suite: power-sum\nseed: 7\nPASS, 50/50\n")

    def test_gen(self):
        for n, w, count in [(2, 1, 2), (3, 1, 4), (1, 3, 3)]:
            out = os.path.join(self.dir.name, f"g{n}{w}")
            r = run("gen", "--n", str(n), "--weight-bound", str(w), "--out", out)
            self.assertEqual(r.returncode, 0)
            files = sorted(os.listdir(out))
            self.assertEqual(len(files), count)
            self.assertEqual(files[0], f"n{n}_w{w}_0000.json")
        r = run("gen", "--n", "8", "--weight-bound", "1", "--out", os.path.join(self.dir.name, "big"))
        self.assertEqual(r.returncode, 3)

    def test_threads_do_not_change_output(self):
        p3 = self.write("p3.json", P3)
        one = run("--threads", "1", "compute", p3, "--host", "kneser:5,2")
        four = run("--threads", "4", "compute", p3, "--host", "kneser:5,2")
        env = dict(os.environ, CHROMA_THREADS="3")
        three = run("compute", p3, "--host", "kneser:5,2", env=env)
        self.assertEqual(one.returncode, 0)
        self.assertEqual(one.stdout, four.stdout)
        self.assertEqual(one.stdout, three.stdout)


if __name__ == "__main__":
    CHROMA = sys.argv.pop(1)
    unittest.main()
