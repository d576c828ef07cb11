import os
import unittest
from fractions import Fraction

import coxdatum as cx


class Smoke(unittest.TestCase):
    def setUp(self):
        self.tri = cx.builtin_example("paper-triangle")

    def test_datum(self):
        self.assertEqual(self.tri.rank, 3)
        self.assertEqual(self.tri.generators, ["r", "s", "t"])
        self.assertTrue(self.tri.exact)

    def test_chain(self):
        img = cx.apply_word(self.tri, ["t", "r", "s", "t", "r", "s"], 1, ["1", "0", "0"])
        self.assertEqual([Fraction(x) for x in img], [Fraction(1, 30), 0, 0])

    def test_reduce_and_order(self):
        self.assertEqual(cx.reduce_word(self.tri, ["r", "s", "r", "s", "r"]), (["s"], 1))
        self.assertEqual(cx.product_order(self.tri, "r", "t"), 3)
        self.assertIsNone(cx.product_order(cx.builtin_example("infinite-gamma-2"), "r", "s"))

    def test_roots(self):
        table = cx.enumerate_roots(self.tri, 1, 6)
        self.assertEqual(len(table["roots"]), 81)
        d, descent = cx.depth(self.tri, ["1/30", "0", "0"])
        self.assertEqual(d, 1)
        self.assertEqual(cx.phi(self.tri, ["t", "r", "s", "t", "r", "s"], "r"), ["30", "0", "0"])

    def test_compare(self):
        violations, roots = cx.compare(self.tri, 5)
        self.assertEqual(violations, 0)
        self.assertGreater(roots, 0)

    def test_cones(self):
        v = cx.tits_membership(self.tri, ["-1", "3", "6/5"])
        self.assertEqual(v["status"], "InTitsCone")
        sub = cx.restrict(self.tri, ["r", "s"])
        self.assertEqual(cx.dual_membership(sub, [1, 1])["status"], "RejectedWitness")
        self.assertEqual(cx.refute(self.tri, [1, 0, 0], [1, 0, 0])["bound"], 1)
        finite, rays, _ = cx.is_finite_group(sub)
        self.assertTrue(finite)
        self.assertEqual(rays, 3)

    def test_files_and_errors(self):
        data = os.environ.get("COXDATUM_DATA_DIR")
        if data:
            d = cx.load_datum(os.path.join(data, "paper-triangle.json"))
            self.assertEqual(d.generators, ["r", "s", "t"])
            with open(os.path.join(data, "bad-c2.json")) as fh:
                self.assertFalse(cx.validate(fh.read())["valid"])
        with self.assertRaises(cx.CoxdatumError):
            cx.builtin_example("nope")
        with self.assertRaises(cx.CoxdatumError):
            cx.reduce_word(self.tri, ["x"])


if __name__ == "__main__":
    unittest.main()
