# For p >= 2 the first p-1 iterates of k = 2^p h - 1 climb along
# 3^n 2^(p-n) h - 1. At n = p the formula gives the even number 3^p h - 1,
# and f^p(k) is its odd part.

from syracuse import Decomposition, f_iterate
from syracuse.descent import expansion_chain, peak_value

for p, h in [(3, 1), (6, 5), (10, 1)]:
    d = Decomposition.from_ph(p, h)
    chain = expansion_chain(d)
    pk = peak_value(d)
    print(f"k = 2^{p}*{h} - 1 = {d.k}")
    print("   climb:", chain)
    print(f"   3^p h - 1 = {pk.pre_division} = 2^{pk.valuation} * {pk.odd_part};"
          f" f^p(k) = {f_iterate(d.k, p)}")
