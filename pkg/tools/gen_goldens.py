"""Regenerate the CLI golden files from the shipped fixtures."""
import io, os, sys
from nonassoc.catalog import fixture_path
from nonassoc.cli import main

GOLD = os.path.join(os.path.dirname(__file__), "..", "tests", "goldens")
os.makedirs(GOLD, exist_ok=True)

def run(argv):
    out = io.StringIO()
    err = io.StringIO()
    code = main(argv, out=out, err=err)
    if err.getvalue():
        print("STDERR:", err.getvalue(), file=sys.stderr)
    return code, out.getvalue()

def freeze(name, argv, expect_code):
    code, text = run(argv)
    assert code == expect_code, (name, code, text)
    with open(os.path.join(GOLD, name), "w", encoding="utf-8") as fh:
        fh.write(text)
    print(f"{name}: exit={code} bytes={len(text)}")

fx = lambda n: str(fixture_path(n))

freeze("check_D.txt", ["check", fx("D")], 0)
freeze("check_L.txt", ["check", fx("L")], 1)
freeze("check_W.txt", ["check", fx("W")], 1)
freeze("check_Dstar.txt", ["check", fx("D*")], 1)
freeze("check_Lstar.txt", ["check", fx("L*")], 1)
freeze("check_NLA.txt", ["check", fx("NLA")], 1)
freeze("check_L_g6.txt", ["check", fx("L"), "--relation", "g6"], 0)
freeze("check_Dstar_strict.txt", ["check", fx("D*"), "--strict-shriek"], 1)
freeze("dualize_D.json", ["dualize", fx("D")], 0)
freeze("dualize_Lstar.json", ["dualize", fx("L*")], 0)
freeze("convolve_D_Dstar.json", ["convolve", fx("D"), fx("D*")], 0)
freeze("convolve_W_Dstar.json", ["convolve", fx("W"), fx("D*")], 0)
freeze("sigma3_V.txt", ["sigma3", "1,-1,-1,-1,1,1"], 0)
freeze("sigma3_unit.txt", ["sigma3", "1,0,0,0,0,0"], 0)
freeze("sigma3_ones.txt", ["sigma3", "1,1,1,1,1,1"], 0)
freeze("bialgebra_L_Lstar.txt", ["bialgebra", fx("L"), fx("L*"), "--compat", "lie-admissible"], 0)
freeze("bialgebra_W_Wstar.txt", ["bialgebra", fx("W"), fx("W*")], 1)
freeze("bialgebra_D_0C_prelie.txt", ["bialgebra", fx("D"), fx("0C"), "--compat", "pre-lie"], 0)
