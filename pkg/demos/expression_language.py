"""The expression language behind `symf eval`, used as a library.

Useful for quick experiments without spelling out imports: strings in,
exact symmetric functions or rationals out.  The same strings work on
the command line.
"""

from symf.expr import evaluate_text, parse, pretty
from symf.symfunc import to_basis

EXAMPLES = [
    "h2[h2]",
    "e2[e2]",
    "(h2 + h3)[p2]",
    "s[2,1] * s[1]",
    "scalar(h2[h2], h[2,2])",
    "kron(s[2,1], s[2,1])",
    "dim(s[3,2])",
    "ones(h4)",
    "coeff(h2[h2], [2,2])",
    "2*e3 - p3",
]

width = max(len(t) for t in EXAMPLES)
for text in EXAMPLES:
    print("%-*s  =  %s" % (width, text, evaluate_text(text)))
print()

# evaluation keeps whatever basis the arithmetic lands in; the CLI
# converts to schur (or --basis) before printing
print("rendered the way `symf eval` would:")
print("  s[2,1] * s[1]  =", to_basis(evaluate_text("s[2,1] * s[1]"), "s"))
print()

# the parser normalizes spelling: h2, h[2] and h [2] are one atom,
# while a bracket after a complete atom is plethysm
for text in ("h2[h2]", "h[2] [h[2]]", "scalar(h2,h2)"):
    print("%-14s parses as %s" % (text, pretty(parse(text))))
