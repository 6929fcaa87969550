"""The three example families against their closed forms.

    python walkthroughs/families.py
"""

from smallgobelin.harness import analyze, check_family, family

runs = [
    family("zero_syzygies", ring=("x", "y"), relations=("x^2", "y^2"), f1="x", f2="y", max_degree=5),
    family("one_zero", tau2=("x^3", "0"), max_degree=5),
    family("one_zero", tau2=("x", "-1"), max_degree=5),
    family("g_multiple", relations=("x^8",), f1="x^4", f2="x^6", tau2=("x^2", "-1"), max_degree=5),
]

for scs in runs:
    for sc in scs:
        v = check_family(sc)
        print(sc.name)
        print("   expected H_j(G2):", sc.annotations["g2"])
        print("   computed H_j(G2):", " ".join(map(str, analyze(sc).g2.dims())))
        for c in v.checks:
            print(f"   {'ok  ' if c.passed else 'FAIL'} {c.name}  (expected {c.expected}, got {c.actual})")
