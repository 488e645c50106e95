# Descent witnesses.
#
# Case 1 and Case 2 give a smaller odd number whose orbit passes through k.
# Cases 3/4 build m = (4k-1)/3 with f(m) = k, then try r = (4m-1)/3. That
# second step is only an integer when k = 1 (mod 9), and even then r > k.
# Cases 5/6 are the multiples of 3, which have no odd preimage at all.

from syracuse import descend, preimages

for k in (13, 11, 7, 19, 55, 3, 39):
    w = descend(k)
    print(f"k={k}: {w.case.variant}")
    print(f"   chain={w.witness_chain} signs={w.comparisons}"
          f" integral={w.integrality_flags} notes={w.notes}")

print()
for k in (1, 11, 3, 7):
    print(f"preimages of {k} (s <= 10):", preimages(k, 10).members)
