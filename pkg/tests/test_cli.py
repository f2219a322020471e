import io
import json
import subprocess
import sys

from cfsym.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_sum_chebyshev_simple():
    code, out, _ = call("sum", "--f", "chebyshev:4", "--at", "2", "--terms", "6", "--simple")
    assert code == 0
    assert out.startswith("[0, 1, 1, 23, 1, 2, 1, 18815, 3, 1, 23")


def test_expand_rational():
    assert call("expand", "--rational", "10/7") == (0, "[1, 2, 3]\n", "")
    assert call("expand", "--rational", "-5/3")[1] == "[-2, 3]\n"


def test_expand_polynomial():
    code, out, _ = call("expand", "--g", "1,1", "--f", "0,0,1")
    assert out == "[0, x - 1, x + 1]\n"
    code, out, _ = call("expand", "--word", "[(0), (-1,1), (1,1)]", "--json")
    assert json.loads(out) == {"cf": ["0", "-1,1", "1,1"]}


def test_classify():
    assert call("classify", "--f", "0,0,1")[1] == "case 1: f ≡ 0 (mod x^2); oracle: yes\n"
    code, out, _ = call("classify", "--f", "-1,1,1")
    assert out == "none: no congruence matches; oracle: no\n"
    code, out, _ = call("classify", "--f", "chebyshev:4", "--terms", "2", "--json")
    data = json.loads(out)
    assert data["case"] == 3 and data["oracle"] == "yes"
    assert data["residues"]["x^2"] == "1"


def test_fold_and_detect():
    assert call("fold", "--word", "[0, 2]", "--xs", "3")[1] == "[0, 2, 3, -2]\n"
    assert call("fold", "--word", "[0, 2]", "--xs", "3", "--simple")[1] == "[0, 2, 2, 2]\n"
    assert call("fold", "--word", "[0, 2]", "--xs", "1;1", "--k", "3")[1] == "[0, 2, 1, -2, 1, 2]\n"
    assert call("fold", "--word", "[0, 2]", "--xs", "1;1", "--k", "4")[0] == 2
    code, out, _ = call("detect", "--word", "[0, 2, 1, -2, 1, 2]")
    assert out == "k=3: a0=0; w=[2]; xs=1, 1\n"
    assert call("detect", "--word", "[0, 1, 2, 3]", "--k", "2")[1] == "no k-fold pattern\n"


def test_duplicate():
    assert call("duplicate", "--word", "[1, 1]", "--xs", "1")[1] == "[1, 1, 1, 1, 1]\n"
    code, out, _ = call("duplicate", "--word", "[(1), (-1,1), (1)]", "--xs", "(0)")
    assert out == "[1, x - 1, 2, x - 1, 1]\n"
    code, _, err = call("duplicate", "--word", "[1, 2]", "--xs", "1")
    assert code == 1 and err.startswith("NotPalindromicError:")


def test_chebyshev():
    assert call("chebyshev", "--k", "4")[1] == "8*x^4 - 8*x^2 + 1\n"
    assert call("chebyshev", "--k", "4", "--at", "2")[1] == "97\n"


def test_sum_exponents():
    code, out, _ = call("sum", "--base", "10", "--exps", "factorial", "--terms", "5")
    assert out == "[0, 5, -4, -5, -100, 5, 4, -5, -1000000000000, 5, -4, -5, 100, 5, 4, -5]\n"
    code, out, _ = call("sum", "--base", "2", "--exps", "geometric:2", "--exps", "scaled:3,8",
                        "--terms", "12", "--simple", "--json")
    cf = json.loads(out)["cf"]
    assert cf[:7] == ["0", "1", "16", "14", "16", "1", "65792"]


def test_product():
    code, out, _ = call("product", "--f=-1,0,2", "--terms", "2")
    assert out == "[1, x - 1, 2, x - 1, 1]\n"


def test_exit_codes():
    assert call("bogus")[0] == 2
    assert call()[0] == 2
    assert call("expand", "--nope", "1")[0] == 2
    assert call("expand")[0] == 2
    assert call("expand", "--rational", "1/0")[0] == 2
    code, _, err = call("expand", "--word", "[1, 0]")
    assert code == 1 and err.startswith("SingularError:")
    code, _, err = call("sum", "--f", "1,1", "--terms", "3")
    assert code == 1 and err.startswith("PreconditionError:")
    code, _, err = call("sum", "--f", "-1,0,1", "--at", "1", "--terms", "3")
    assert code == 1 and err.startswith("ZeroTermError:")


def test_deterministic():
    args = ("sum", "--f", "chebyshev:3", "--at", "2", "--terms", "4", "--simple")
    assert call(*args) == call(*args)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "cfsym", "expand", "--rational", "10/7"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "[1, 2, 3]\n"
    proc = subprocess.run([sys.executable, "-m", "cfsym", "frobnicate"], capture_output=True, text=True)
    assert proc.returncode == 2
