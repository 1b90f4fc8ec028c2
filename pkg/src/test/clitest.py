import io, os, json, shutil, tempfile, unittest
from unittest import mock

from lib import cli, common

HERMITE = ["--k", "2", "--m", "-2"]


class CliTest(unittest.TestCase):

    def setUp(self):
        self.tempDir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tempDir)

    def run_cli(self, *argv):
        stdout, stderr = io.StringIO(), io.StringIO()
        exitCode = cli.main(list(argv), stdout=stdout, stderr=stderr)
        return exitCode, stdout.getvalue(), stderr.getvalue()

    def assertOutput(self, argv, expected, exitCode=common.EXIT_OK):
        code, out, err = self.run_cli(*argv)
        self.assertEqual(code, exitCode, err)
        self.assertEqual(out, expected + "\n")

    # -- coeffs and eval

    def testCoeffs(self):
        self.assertOutput(["coeffs"] + HERMITE + ["--n", "3"],
                          '{"family":{"a":[],"b":[],"k":2,"m":"-2"},"n":3,"min_exponent":0,'
                          '"coeffs":["0","-3","0","1"]}')

    def testCoeffsBelowOrder(self):
        code, out, err = self.run_cli("coeffs", "--k", "3", "--m", "5", "--n", "2")
        self.assertEqual(code, common.EXIT_OK)
        self.assertIn('"coeffs":["0","0","1"]', out)

    def testCoeffsWithParameters(self):
        code, out, err = self.run_cli("coeffs", "--a", "1", "--b", "2", "--k", "2", "--m", "4", "--n", "2")
        self.assertEqual(code, common.EXIT_OK)
        self.assertIn('"coeffs":["1","0","1"]', out)
        self.assertIn('"a":["1"],"b":["2"]', out)

    def testLowerParameterPole(self):
        for value in ("-1", "0"):
            code, out, err = self.run_cli("coeffs", "--b", value, "--k", "2", "--m", "1", "--n", "2")
            self.assertEqual(code, common.EXIT_DOMAIN)
            self.assertEqual(out, "")
            self.assertTrue(err.startswith("appellkit: error:"), err)

    def testUsageErrors(self):
        for argv in (["coeffs"] + HERMITE,
                     ["frobnicate"],
                     [],
                     ["coeffs", "--k", "2", "--m", "1.5", "--n", "2"],
                     ["coeffs"] + HERMITE + ["--n", "401"],
                     ["coeffs"] + HERMITE + ["--n", "2", "--format", "xml"],
                     ["verify"] + HERMITE + ["--n", "2"],
                     ["coeffs", "extra"] + HERMITE + ["--n", "2"]):
            code, out, err = self.run_cli(*argv)
            self.assertEqual(code, common.EXIT_USAGE, "%s: %s" % (argv, err))

    def testOrderMustBePositive(self):
        code, out, err = self.run_cli("coeffs", "--k", "0", "--m", "1", "--n", "2")
        self.assertEqual(code, common.EXIT_DOMAIN)

    def testEval(self):
        self.assertOutput(["eval"] + HERMITE + ["--n", "4", "--x", "2"], "-5")
        self.assertOutput(["eval", "--k", "5", "--m", "9", "--n", "0", "--x", "7/3"], "1")
        self.assertOutput(["eval", "--k", "2", "--m", "0", "--n", "3", "--x", "1/2"], "1/8")

    def testEvalJson(self):
        code, out, err = self.run_cli("eval", "--format", "json", "--x", "-1/2", "--n", "2", *HERMITE)
        self.assertEqual(code, common.EXIT_OK)
        self.assertEqual(json.loads(out), {"family": {"a": [], "b": [], "k": 2, "m": "-2"}, "n": 2,
                                           "x": "-1/2", "value": "-3/4"})

    # -- verify

    def testVerifyAppell(self):
        code, out, err = self.run_cli("verify", "appell", "--n-max", "10", *HERMITE)
        self.assertEqual(code, common.EXIT_OK)
        lines = out.splitlines()
        self.assertEqual(len(lines), 10)
        self.assertEqual(lines[0], "appell n=1: holds")

    def testVerifyEmptyRange(self):
        code, out, err = self.run_cli("verify", "appell", "--n-max", "0", *HERMITE)
        self.assertEqual((code, out, err), (common.EXIT_OK, "", ""))
        path = os.path.join(self.tempDir, "empty.txt")
        self.assertEqual(self.run_cli("verify", "appell", "--n-max", "0", "--out", path, *HERMITE)[0], common.EXIT_OK)
        self.assertFalse(os.path.exists(path))

    def testVerifyConvolutionMismatchIsNotAFailure(self):
        self.assertOutput(["verify", "convolution", "--k", "1", "--m", "1", "--n", "2"],
                          "convolution n=2: holds vs oracle; closed-form RHS mismatch (4 vs 0)")

    def testVerifyParityOddOrder(self):
        self.assertOutput(["verify", "parity", "--k", "3", "--m", "1/2", "--n", "4"],
                          "parity n=4: holds; odd k: argument negation pairs with m -> -m")

    def testVerifyJson(self):
        code, out, err = self.run_cli("verify", "connection", "--direction", "monomials_over_family",
                                      "--n-min", "2", "--n-max", "3", "--format", "json", *HERMITE)
        self.assertEqual(code, common.EXIT_OK)
        self.assertEqual(json.loads(out), [
            {"identity": "connection", "n": 2, "holds": True, "vs_oracle": False, "note": ""},
            {"identity": "connection", "n": 3, "holds": True, "vs_oracle": False, "note": ""}])

    def testVerifyAll(self):
        family = ["--a", "1/2,3", "--b", "5/3", "--k", "3", "--m", "-3/4", "--n-max", "6"]
        for target, extra in (("corollary1", []), ("addition", []), ("multiplication", ["--M", "-2"]),
                              ("interchange", ["--k2", "2"]), ("convolution", []), ("parity", []),
                              ("composed", ["--f", "1,0,1"]), ("representations", []), ("connection", []),
                              ("pfq-derivative", [])):
            code, out, err = self.run_cli("verify", target, *(family + extra))
            self.assertEqual(code, common.EXIT_OK, "%s: %s" % (target, err))
            self.assertNotIn("FAILS", out)

    def testVerifyMissingOptions(self):
        for target in ("multiplication", "interchange", "composed"):
            code, out, err = self.run_cli("verify", target, "--n", "2", *HERMITE)
            self.assertEqual(code, common.EXIT_USAGE, target)
        code, out, err = self.run_cli("verify", "bogus", "--n", "2", *HERMITE)
        self.assertEqual(code, common.EXIT_USAGE)

    def testVerifyAdditionGridFromConfig(self):
        path = os.path.join(self.tempDir, "settings.json")
        with open(path, "w") as outFile:
            json.dump({"version": common.VERSION, "settings": {"gridStart": -2}}, outFile)
        code, out, err = self.run_cli("verify", "addition", "--n", "4", "--config", path, *HERMITE)
        self.assertEqual(code, common.EXIT_OK)
        self.assertEqual(out, "addition n=4: holds\n")

    # -- series, reductions and export

    def testGenfun(self):
        self.assertOutput(["genfun", "--order", "4"] + HERMITE, '["1","0","-1/2","0","1/8"]')

    def testConnect(self):
        self.assertOutput(["connect", "--order", "4"] + HERMITE, '["1","0","-1/2","0","1/8"]')
        self.assertOutput(["connect", "--order", "4", "--direction", "monomials_over_family"] + HERMITE,
                          '["1","0","1/2","0","1/8"]')

    def testReduce(self):
        self.assertOutput(["reduce", "gould-hopper", "--k", "3", "--h", "1"], '{"k":3,"m":"-27","a":[],"b":[]}')
        self.assertOutput(["reduce", "hermite"], '{"k":2,"m":"-2","a":[],"b":[]}')

    def testBadReduction(self):
        for argv in (["reduce", "hermite", "--k", "3"], ["reduce", "laguerre"], ["reduce", "gould-hopper"]):
            code, out, err = self.run_cli(*argv)
            self.assertEqual(code, common.EXIT_DOMAIN, argv)

    def testExportLatex(self):
        self.assertOutput(["export", "--format", "latex", "--n", "2"] + HERMITE, "x^{2} - 1")

    def testExportFromFile(self):
        path = os.path.join(self.tempDir, "he3.json")
        code, out, err = self.run_cli("coeffs", "--n", "3", "--out", path, *HERMITE)
        self.assertEqual((code, out), (common.EXIT_OK, ""))
        self.assertOutput(["export", "--in", path, "--format", "csv"], "exponent,coefficient\n0,0\n1,-3\n2,0\n3,1")
        self.assertOutput(["export", "--in", path, "--format", "latex"], "x^{3} - 3x")

    def testExportMissingFile(self):
        code, out, err = self.run_cli("export", "--in", os.path.join(self.tempDir, "missing.json"))
        self.assertEqual(code, common.EXIT_USAGE)

    def testExportNumericCoefficients(self):
        document = '{"coeffs":[1,2],"min_exponent":0}'
        with mock.patch("sys.stdin", io.StringIO(document)):
            code, out, err = self.run_cli("export", "--in", "-")
        self.assertEqual((code, out), (common.EXIT_USAGE, ""))
        self.assertEqual(err, "appellkit: error: Invalid rational literal 1 (expected a string p or p/q)\n")

    def testHelpGoesToStdout(self):
        code, out, err = self.run_cli("--help")
        self.assertEqual((code, err), (common.EXIT_OK, ""))
        self.assertTrue(out.startswith("Usage: appellkit COMMAND"), out)
        self.assertIn("Commands:", out)

    def testVersion(self):
        self.assertOutput(["--version"], "appellkit " + common.VERSION)

    def testInternalErrorIsNotAnIdentityFailure(self):
        def broken(config, configManager):
            raise RuntimeError("broken command")
        with mock.patch.dict(cli.COMMANDS, {"coeffs": broken}):
            with self.assertLogs("cli", "ERROR"):
                code, out, err = self.run_cli("coeffs", *HERMITE, "--n", "2")
        self.assertEqual((code, out), (common.EXIT_INTERNAL, ""))
        self.assertEqual(err, "appellkit: internal error: broken command\n")
        self.assertNotEqual(code, common.EXIT_IDENTITY_FAILED)
