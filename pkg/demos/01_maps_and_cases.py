# The two maps and the six-way case split.
#
# g is the plain Collatz map; f skips the halvings and only visits odd
# numbers. Every odd k >= 3 is written as k = 2^p * h - 1 with h odd and
# then lands in exactly one of six cases depending on p, h mod 3 and the
# parity of p.

from collections import Counter

from syracuse import classify, decompose, f_step, g_step

x = 7
orbit = [x]
while x != 1:
    x = g_step(x)
    orbit.append(x)
print("g-orbit of 7:", orbit)

k = 7
odd_orbit = [k]
while k != 1:
    step = f_step(k)
    print(f"  3*{k}+1 = 2^{step.valuation} * {step.next}")
    k = step.next
    odd_orbit.append(k)
print("f-orbit of 7:", odd_orbit, "(the odd entries of the g-orbit)")

for k in (5, 3, 39, 11, 7, 19):
    d = decompose(k)
    tag = classify(k)
    print(f"k={k:3d}  p={d.p}  h={d.h:2d}  h mod 3={d.h % 3}  -> {tag.variant}"
          f"  ell={tag.ell}  hbar={tag.hbar}")

# How often each case shows up among odd k below 10^5, and which residue of
# k mod 3 goes with it.
counts = Counter()
for k in range(3, 10**5, 2):
    counts[(str(classify(k).variant), k % 3)] += 1
for (case, r), n in sorted(counts.items()):
    print(f"{case}: k = {r} (mod 3) x {n}")
