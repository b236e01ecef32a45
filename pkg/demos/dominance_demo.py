"""Walkthrough: Z-partitions, branching steps, and the dominance order.

Run with:  python3 demos/dominance_demo.py
"""

from slinf import (
    canonicalize,
    dominates_interlace,
    dominates_oracle,
    enumerate_classes,
    gap_criterion,
    gt_children,
    is_gt_step,
    shift,
)


def section(title):
    print(f"\n=== {title} ===")


section("Shift classes")
lam = (3, 2, 2)
print(f"{lam} canonicalizes to {canonicalize(lam)} (subtract the last entry)")
print(f"shifting by +7 first changes nothing: {canonicalize(shift(lam, 7))}")
print(f"negative entries are fine too: {(-1, -4)} -> {canonicalize((-1, -4))}")

section("One-step branching")
top = (2, 1, 0)
print(f"classes one width below {top}:")
for child in sorted(gt_children(top)):
    print(f"  {child}   (is_gt_step: {is_gt_step(top, child)})")
print("shifted representatives give the same answer:",
      is_gt_step(top, shift((1, 0), -5)))

section("Dominance: chains of branching steps")
wide = (1, 1, 1, 1, 0, 0, 0, 0)
narrow = (1, 0)
print(f"{wide} dominates {narrow}?")
print(f"  chain oracle     : {dominates_oracle(wide, narrow)}")
print(f"  interlacing test : {dominates_interlace(wide, narrow)}")
print(f"  all-pairs gaps   : {gap_criterion(wide, narrow)}  (valid here: 8 >= 4*2)")

section("The three routes agree on a small grid")
classes = [c for w in range(1, 5) for c in enumerate_classes(w, 3)]
agreements = disagreements = 0
for lam in classes:
    for mu in classes:
        if len(mu) > len(lam):
            continue
        if dominates_interlace(lam, mu) == dominates_oracle(lam, mu):
            agreements += 1
        else:
            disagreements += 1
print(f"interlacing vs chain oracle on {agreements + disagreements} pairs: "
      f"{disagreements} disagreements")

section("Where the gap criterion needs its width margin")
# at #mu = 2 = #lam the gap criterion is necessary but not sufficient
mu, lam = (2, 0), (1, 0)
print(f"gap_criterion({mu}, {lam}) = {gap_criterion(mu, lam)} "
      f"but dominates_oracle = {dominates_oracle(mu, lam)} (equal widths, distinct classes)")
print("once #mu >= 4*#lam the 'lgts2' verify suite shows the two coincide everywhere")
