"""Walkthrough: width-indexed systems of classes and their coherence.

Run with:  python3 demos/local_systems_demo.py
"""

from slinf import (
    LevelWindow,
    avoiding_system,
    avoiding_system_contains,
    enumerate_classes,
    forbidden_to_coherent,
    gap_union_contains,
    gap_union_system,
    is_coherent_on_window,
    is_precoherent_on_window,
)


def section(title):
    print(f"\n=== {title} ===")


lam = (1, 0)

section(f"The largest system avoiding {lam}")
for mu in [(2, 0), (1, 0), (1, 0, 0), (2, 1, 0)]:
    print(f"  contains {mu}? {avoiding_system_contains(lam, mu)}")
print("  (everything of width 1 belongs; above width 2 exactly the non-dominating classes)")

section("Its closed-form stand-in: the gap union")
for mu in [(0,) * 8, (1, 1, 1, 1, 0, 0, 0, 0), (2, 1, 1, 1, 1, 1, 0, 0)]:
    print(f"  gap union contains {mu}? {gap_union_contains(lam, mu)}")

section("The two agree once the width is at least 4x")
mismatches = 0
cases = 0
for width in (8, 9):
    for mu in enumerate_classes(width, 4):
        cases += 1
        if avoiding_system_contains(lam, mu) != gap_union_contains(lam, mu):
            mismatches += 1
print(f"  widths 8..9, entries <= 4: {cases} classes, {mismatches} mismatches")

section("Precoherence and coherence on finite windows")
window = LevelWindow(2, 5, 3)
print(f"  avoiding system precoherent on widths 2..5? "
      f"{is_precoherent_on_window(avoiding_system(lam), window)}")
print(f"  gap union coherent on widths 8..10 (slack 1)? "
      f"{is_coherent_on_window(gap_union_system(lam), LevelWindow(8, 10, 2), 1)}")
print(f"  avoiding system coherent near its own width (slack 2)? "
      f"{is_coherent_on_window(avoiding_system(lam), LevelWindow(2, 3, 2), 2)}")
print("  (the last False is genuine: every width-3 class dominating (2,0) also dominates (1,0))")

section("Forbidding several partitions at once")
system = forbidden_to_coherent([(1, 0), (2, 0)])
print(f"  {system.description}")
for mu in [(0,) * 8, (1, 1, 1, 1, 0, 0, 0, 0)]:
    print(f"  contains {mu}? {system.contains(mu)}")
